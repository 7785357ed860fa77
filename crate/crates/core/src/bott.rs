//! Bott's algorithm for `S_beta R (x) S_alpha Q` on the Grassmannian `G(k, V)`
//! of `k`-dimensional quotients of an `n`-dimensional space `V`.
//!
//! `Q` is the rank `k` tautological quotient bundle and `R` the rank `n - k`
//! sub-bundle. The cohomology is concentrated in at most one degree, where it
//! is an irreducible `S_mu V`.

use serde::Serialize;

use crate::error::{out_of_range, Error, Result};
use crate::partitions::{DominantWeight, Partition};
use crate::qseries::LaurentPoly;

/// Outcome of Bott's algorithm.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "lowercase")]
pub enum BottResult {
    /// All cohomology vanishes.
    Zero,
    /// `H^degree = S_weight V`, all other groups vanish.
    Cohomology { degree: usize, weight: DominantWeight },
}

impl BottResult {
    pub fn is_zero(&self) -> bool {
        matches!(self, BottResult::Zero)
    }
}

/// Runs Bott's algorithm on `gamma = (alpha | beta)`.
///
/// `alpha` has rank `k` (the quotient side), `beta` rank `n - k`. Any
/// `0 <= k <= n` is accepted; `k = 0` and `k = n` are the one-point cases.
pub fn bott(alpha: &DominantWeight, beta: &DominantWeight, n: usize) -> Result<BottResult> {
    Ok(match shifted_sequence(alpha, beta, n)? {
        None => BottResult::Zero,
        Some(v) => {
            let degree = inversions_ascending(&v);
            let mut sorted = v;
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            let entries = sorted.into_iter().enumerate().map(|(i, x)| x - delta(n, i)).collect();
            BottResult::Cohomology {
                degree,
                weight: DominantWeight::new(entries).expect("sorted strictly decreasing minus delta is dominant"),
            }
        }
    })
}

/// The permutation `sigma` (one-line form, 1-based) with
/// `sort(gamma + delta)_{sigma(i)} = (gamma + delta)_i`, or `None` when
/// `gamma + delta` has a repeated entry.
pub fn bott_permutation(alpha: &DominantWeight, beta: &DominantWeight, n: usize) -> Result<Option<Vec<usize>>> {
    Ok(shifted_sequence(alpha, beta, n)?.map(|v| v.iter().map(|x| 1 + v.iter().filter(|y| *y > x).count()).collect()))
}

// delta = (n-1, n-2, ..., 0), 0-based index
fn delta(n: usize, i: usize) -> i64 {
    (n - 1 - i) as i64
}

/// `gamma + delta` when its entries are distinct.
fn shifted_sequence(alpha: &DominantWeight, beta: &DominantWeight, n: usize) -> Result<Option<Vec<i64>>> {
    if alpha.rank() > n {
        return Err(out_of_range("k", alpha.rank() as i64, format!("0 <= k <= n = {n}")));
    }
    if alpha.rank() + beta.rank() != n {
        return Err(Error::RankMismatch {
            what: "beta (rank n - k)",
            expected: n - alpha.rank(),
            found: beta.rank(),
        });
    }
    let v: Vec<i64> = alpha
        .entries()
        .iter()
        .chain(beta.entries())
        .enumerate()
        .map(|(i, &g)| g + delta(n, i))
        .collect();
    let mut sorted = v.clone();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Ok(None);
    }
    Ok(Some(v))
}

/// Number of pairs `x < y` with `v_x < v_y`.
fn inversions_ascending(v: &[i64]) -> usize {
    let mut count = 0;
    for x in 0..v.len() {
        for y in x + 1..v.len() {
            if v[x] < v[y] {
                count += 1;
            }
        }
    }
    count
}

/// Number of pairs `x < y` with `perm[x] > perm[y]`.
pub fn inversions(perm: &[usize]) -> usize {
    let mut count = 0;
    for x in 0..perm.len() {
        for y in x + 1..perm.len() {
            if perm[x] > perm[y] {
                count += 1;
            }
        }
    }
    count
}

/// The shuffle permutation attached to `t` in the `(n-k) x k` box:
/// `sigma(i) = t'_{k+1-i} + i` for `i <= k` and `sigma(i) = i - t_{i-k}`
/// otherwise. Its inversion count is `|t|`.
pub fn sigma_of_partition(t: &Partition, k: usize, n: usize) -> Result<Vec<usize>> {
    if k > n {
        return Err(out_of_range("k", k as i64, format!("0 <= k <= n = {n}")));
    }
    if !t.fits_box(n - k, k as u32) {
        return Err(Error::OutsideBox {
            partition: t.parts().to_vec(),
            rows: n - k,
            width: k as u32,
        });
    }
    let tc = t.conjugate();
    let sigma = (1..=n)
        .map(|i| {
            if i <= k {
                tc.get(k - i) as usize + i
            } else {
                i - t.get(i - k - 1) as usize
            }
        })
        .collect();
    Ok(sigma)
}

/// Multiplicity of a fixed isotypic component, with the unique `alpha`
/// that realizes it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Isotypic {
    pub multiplicity: LaurentPoly,
    pub alpha: Option<DominantWeight>,
}

impl Isotypic {
    fn zero() -> Self {
        Isotypic {
            multiplicity: LaurentPoly::zero(),
            alpha: None,
        }
    }
}

fn check_beta(beta: &Partition, k: usize, n: usize) -> Result<()> {
    if k > n {
        return Err(out_of_range("k", k as i64, format!("0 <= k <= n = {n}")));
    }
    if beta.len() > n - k {
        return Err(Error::RankMismatch {
            what: "beta (at most n - k parts)",
            expected: n - k,
            found: beta.len(),
        });
    }
    Ok(())
}

/// `(beta')^*` as a weight of rank `k`, for `beta` in the `(n-k) x k` box.
fn dual_conjugate(beta: &Partition, k: usize) -> DominantWeight {
    beta.conjugate()
        .to_weight(k)
        .expect("conjugate of a box partition has at most k parts")
        .dual()
}

/// Trivial-isotypic part of `H^*(G, S_beta R (x) S_alpha Q)` as `alpha` varies:
/// `q^{|beta|}` realized by `alpha = (beta')^*` when `beta` lies in the
/// `(n-k) x k` box, zero otherwise.
pub fn trivial_isotypic(beta: &Partition, k: usize, n: usize) -> Result<Isotypic> {
    check_beta(beta, k, n)?;
    if !beta.fits_box(n - k, k as u32) {
        return Ok(Isotypic::zero());
    }
    Ok(Isotypic {
        multiplicity: LaurentPoly::q_pow(beta.size() as i64),
        alpha: Some(dual_conjugate(beta, k)),
    })
}

/// `wedge^{n-s} W`-isotypic part, for `n - k <= s <= n` and every part of
/// `beta` (padded to `n - k` parts) at least `n - s`. Realized by
/// `alpha = (beta')^* + (0^{s-n+k}, (-1)^{n-s})`.
pub fn wedge_isotypic(beta: &Partition, k: usize, n: usize, s: usize) -> Result<Isotypic> {
    check_beta(beta, k, n)?;
    if s + k < n || s > n {
        return Err(out_of_range("s", s as i64, format!("{} <= s <= {n}", n - k)));
    }
    let floor = (n - s) as u32;
    if (0..n - k).any(|i| beta.get(i) < floor) {
        return Err(Error::MalformedShape(format!(
            "every part of beta = {beta} padded to {} parts must be at least n - s = {floor}",
            n - k
        )));
    }
    if !beta.fits_box(n - k, k as u32) {
        return Ok(Isotypic::zero());
    }
    let base = dual_conjugate(beta, k);
    let twist: Vec<i64> = (0..k).map(|i| if i < s + k - n { 0 } else { -1 }).collect();
    let alpha = base
        .plus(&DominantWeight::new(twist).expect("(0..0,-1..-1) is dominant"))
        .expect("equal ranks");
    Ok(Isotypic {
        multiplicity: LaurentPoly::q_pow(beta.size() as i64),
        alpha: Some(alpha),
    })
}

/// `(0^s, (-1)^{n-s})`, the weight of `wedge^{n-s} W` written over `V = W^*`.
pub fn wedge_weight(s: usize, n: usize) -> DominantWeight {
    DominantWeight::new((0..n).map(|i| if i < s { 0 } else { -1 }).collect()).expect("dominant")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{enumerate_box, enumerate_dominant};

    fn w(v: &[i64]) -> DominantWeight {
        DominantWeight::new(v.to_vec()).unwrap()
    }

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn sym2_of_the_subbundle_on_p2() {
        assert_eq!(
            bott(&w(&[0]), &w(&[2, 0]), 3).unwrap(),
            BottResult::Cohomology {
                degree: 1,
                weight: w(&[1, 1, 0])
            }
        );
    }

    #[test]
    fn repeated_entry_vanishes() {
        assert_eq!(bott(&w(&[0]), &w(&[1, 0]), 3).unwrap(), BottResult::Zero);
    }

    #[test]
    fn trivial_bundle_has_only_global_sections() {
        for n in 1..6 {
            for k in 0..=n {
                assert_eq!(
                    bott(&DominantWeight::zero(k), &DominantWeight::zero(n - k), n).unwrap(),
                    BottResult::Cohomology {
                        degree: 0,
                        weight: DominantWeight::zero(n)
                    }
                );
            }
        }
    }

    #[test]
    fn rank_mismatch_rejected() {
        assert!(matches!(bott(&w(&[0]), &w(&[0]), 3), Err(Error::RankMismatch { .. })));
        assert!(bott(&w(&[0, 0, 0, 0]), &w(&[]), 3).is_err());
    }

    #[test]
    fn sigma_examples() {
        for n in 1..5 {
            for k in 0..=n {
                assert_eq!(
                    sigma_of_partition(&Partition::empty(), k, n).unwrap(),
                    (1..=n).collect::<Vec<_>>()
                );
            }
        }
        let sigma = sigma_of_partition(&p(&[1, 1]), 1, 3).unwrap();
        assert_eq!(sigma, vec![3, 1, 2]);
        assert_eq!(inversions(&sigma), 2);
        for t in enumerate_box(2, 2) {
            let sigma = sigma_of_partition(&t, 2, 4).unwrap();
            assert_eq!(inversions(&sigma) as u64, t.size(), "t={t}");
        }
        assert!(sigma_of_partition(&p(&[3]), 2, 4).is_err());
    }

    #[test]
    fn sigma_is_a_two_block_shuffle() {
        for n in 1..7 {
            for k in 0..=n {
                for t in enumerate_box(n - k, k as u32) {
                    let sigma = sigma_of_partition(&t, k, n).unwrap();
                    let mut sorted = sigma.clone();
                    sorted.sort_unstable();
                    assert_eq!(sorted, (1..=n).collect::<Vec<_>>());
                    assert!(sigma[..k].windows(2).all(|x| x[0] < x[1]));
                    assert!(sigma[k..].windows(2).all(|x| x[0] < x[1]));
                    assert_eq!(inversions(&sigma) as u64, t.size());
                }
            }
        }
    }

    #[test]
    fn trivial_isotypic_examples() {
        let iso = trivial_isotypic(&p(&[2, 1]), 2, 4).unwrap();
        assert_eq!(iso.multiplicity, LaurentPoly::q_pow(3));
        let alpha = iso.alpha.unwrap();
        assert_eq!(alpha, w(&[-1, -2]));
        assert_eq!(
            bott(&alpha, &w(&[2, 1]), 4).unwrap(),
            BottResult::Cohomology {
                degree: 3,
                weight: DominantWeight::zero(4)
            }
        );
        let iso = trivial_isotypic(&p(&[3]), 2, 4).unwrap();
        assert!(iso.multiplicity.is_zero());
        assert!(iso.alpha.is_none());
        assert!(trivial_isotypic(&p(&[1, 1, 1]), 2, 4).is_err());
    }

    #[test]
    fn wedge_isotypic_examples() {
        let iso = wedge_isotypic(&p(&[2, 2]), 2, 4, 3).unwrap();
        assert_eq!(iso.multiplicity, LaurentPoly::q_pow(4));
        let alpha = iso.alpha.unwrap();
        assert_eq!(alpha, w(&[-2, -3]));
        assert_eq!(
            bott(&alpha, &w(&[2, 2]), 4).unwrap(),
            BottResult::Cohomology {
                degree: 4,
                weight: w(&[0, 0, 0, -1])
            }
        );
        // beta_2 = 0 < n - s = 1
        assert!(wedge_isotypic(&p(&[2]), 2, 4, 3).is_err());
        // s below n - k
        assert!(wedge_isotypic(&p(&[2, 2]), 2, 4, 1).is_err());
    }

    #[test]
    fn permutation_matches_shuffle_of_beta() {
        for n in 1..6 {
            for k in 0..=n {
                for beta in enumerate_box(n - k, k as u32) {
                    let alpha = trivial_isotypic(&beta, k, n).unwrap().alpha.unwrap();
                    let sigma = bott_permutation(&alpha, &beta.to_weight(n - k).unwrap(), n)
                        .unwrap()
                        .unwrap();
                    assert_eq!(sigma, sigma_of_partition(&beta, k, n).unwrap());
                }
            }
        }
    }

    #[test]
    fn degree_bound_and_size_conservation() {
        for n in 1..5 {
            for k in 0..=n {
                for alpha in enumerate_dominant(k, -3, 3) {
                    for beta in enumerate_dominant(n - k, -3, 3) {
                        if let BottResult::Cohomology { degree, weight } = bott(&alpha, &beta, n).unwrap() {
                            assert!(degree <= k * (n - k));
                            assert_eq!(weight.size(), alpha.size() + beta.size());
                        }
                    }
                }
            }
        }
    }
}
