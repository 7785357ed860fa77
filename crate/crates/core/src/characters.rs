//! Characters of the simple equivariant D-modules and of the ideals and
//! subquotients of the coordinate ring.
//!
//! On skew-symmetric matrices the simple modules are labelled `B_s`,
//! `0 <= s <= floor(n/2)`; on symmetric matrices `C_s^j`, `0 <= s <= n`,
//! `j in {1, 2}`, with `C_n^1 = C_n^2`. Each label carries a set of dominant
//! weights (its character) and a witness weight that lies in no other set.
//!
//! The coordinate ring `S` of `Sym^2` (resp. `wedge^2`) decomposes
//! multiplicity-free into `S_{2z} V` (resp. `S_{z^(2)} V`). Infinite characters
//! are truncated by total size `|lambda| <= D`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{out_of_range, Error, Result};
use crate::partitions::{enumerate_bounded_size, enumerate_dominant_pruned, DominantWeight, Partition};
use crate::qseries::LaurentPoly;
use crate::space::Space;

/// A simple equivariant D-module on skew or symmetric matrices, named by its
/// character: `B_s` (skew) or `C_s^j` (symm).
///
/// At `s = n` on symmetric matrices both flavors name the same module; the
/// flavor is normalized away there.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SimpleLabel {
    #[serde(skip)]
    pub space: Space,
    pub s: usize,
    pub flavor: Option<u8>,
}

impl SimpleLabel {
    pub fn new(space: Space, s: usize, flavor: Option<u8>) -> Result<Self> {
        match space {
            Space::General { .. } => Err(Error::UnsupportedSpace(space.to_string())),
            Space::Skew { n } => {
                if s > n / 2 {
                    return Err(out_of_range("s", s as i64, format!("0 <= s <= {}", n / 2)));
                }
                if let Some(j) = flavor {
                    return Err(out_of_range("flavor", j as i64, "no flavor on skew-symmetric matrices"));
                }
                Ok(SimpleLabel { space, s, flavor: None })
            }
            Space::Symm { n } => {
                if s > n {
                    return Err(out_of_range("s", s as i64, format!("0 <= s <= {n}")));
                }
                match flavor {
                    Some(j @ (1 | 2)) => Ok(SimpleLabel {
                        space,
                        s,
                        flavor: (s < n).then_some(j),
                    }),
                    Some(j) => Err(out_of_range("flavor", j as i64, "1 or 2")),
                    None if s == n => Ok(SimpleLabel { space, s, flavor: None }),
                    None => Err(out_of_range(
                        "flavor",
                        0,
                        format!("1 or 2 (required for s = {s} < n = {n})"),
                    )),
                }
            }
        }
    }

    /// Every simple label of the space: `m + 1` on skew, `2n + 1` on symm.
    pub fn all(space: Space) -> Result<Vec<SimpleLabel>> {
        match space {
            Space::General { .. } => Err(Error::UnsupportedSpace(space.to_string())),
            Space::Skew { n } => Ok((0..=n / 2).map(|s| SimpleLabel { space, s, flavor: None }).collect()),
            Space::Symm { n } => {
                let mut out: Vec<_> = (0..n)
                    .flat_map(|s| {
                        [1, 2].map(|j| SimpleLabel {
                            space,
                            s,
                            flavor: Some(j),
                        })
                    })
                    .collect();
                out.push(SimpleLabel {
                    space,
                    s: n,
                    flavor: None,
                });
                Ok(out)
            }
        }
    }

    /// The flavor as used in the weight-set definitions; `C_n` reads as flavor 1.
    pub fn flavor_or_default(&self) -> u8 {
        self.flavor.unwrap_or(1)
    }

    /// Whether `lambda` belongs to this label's weight set.
    pub fn contains(&self, lambda: &DominantWeight) -> bool {
        let n = self.space.n();
        match self.space {
            Space::Skew { .. } => member_b(lambda, self.s, n),
            Space::Symm { .. } => member_c(lambda, self.s, self.flavor_or_default(), n),
            Space::General { .. } => false,
        }
    }
}

impl fmt::Display for SimpleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.space, self.flavor) {
            (Space::Skew { .. }, _) => write!(f, "B_{}", self.s),
            (_, Some(j)) => write!(f, "C_{}^{}", self.s, j),
            (_, None) => write!(f, "C_{}", self.s),
        }
    }
}

#[derive(Clone, Copy)]
enum SetKind {
    B,
    C1,
    C2,
}

/// `lambda_i` (1-based) when index `i` is inside the known prefix.
fn entry(prefix: &[i64], i: usize) -> Option<i64> {
    (i >= 1 && i <= prefix.len()).then(|| prefix[i - 1])
}

fn at_least(prefix: &[i64], i: usize, bound: i64) -> bool {
    entry(prefix, i).is_none_or(|x| x >= bound)
}

fn at_most(prefix: &[i64], i: usize, bound: i64) -> bool {
    entry(prefix, i).is_none_or(|x| x <= bound)
}

fn equal(prefix: &[i64], i: usize, j: usize) -> bool {
    match (entry(prefix, i), entry(prefix, j)) {
        (Some(a), Some(b)) => a == b,
        _ => true,
    }
}

fn parity_ok(x: i64, residue: i64) -> bool {
    (x - residue).rem_euclid(2) == 0
}

/// Every defining condition whose indices fall inside `prefix` holds.
/// Conditions on indices beyond the rank `n` are vacuous. On a full-length
/// weight this is exactly set membership.
fn conditions_hold(kind: SetKind, s: usize, n: usize, prefix: &[i64]) -> bool {
    let si = s as i64;
    match kind {
        SetKind::B if n.is_multiple_of(2) => {
            let m = n / 2;
            (s == 0 || at_least(prefix, 2 * s, 2 * si - 1))
                && at_most(prefix, 2 * s + 1, 2 * si)
                && (1..=m).all(|i| equal(prefix, 2 * i - 1, 2 * i))
        }
        SetKind::B => {
            let m = n / 2;
            entry(prefix, 2 * s + 1).is_none_or(|x| x == 2 * si)
                && (1..=s).all(|i| equal(prefix, 2 * i - 1, 2 * i))
                && (s + 1..=m).all(|i| equal(prefix, 2 * i, 2 * i + 1))
        }
        SetKind::C1 => {
            prefix.iter().all(|&x| parity_ok(x, si + 1))
                && (s == 0 || at_least(prefix, s, si + 1))
                && at_most(prefix, s + 2, si + 1)
        }
        SetKind::C2 => {
            prefix
                .iter()
                .enumerate()
                .all(|(i, &x)| parity_ok(x, if i < s { si + 1 } else { si }))
                && (s == 0 || at_least(prefix, s, si + 1))
                && at_most(prefix, s + 1, si)
        }
    }
}

/// Membership in `B(s, n)`.
pub fn member_b(lambda: &DominantWeight, s: usize, n: usize) -> bool {
    lambda.rank() == n && s <= n / 2 && conditions_hold(SetKind::B, s, n, lambda.entries())
}

/// Membership in `C^j(s, n)`.
pub fn member_c(lambda: &DominantWeight, s: usize, j: u8, n: usize) -> bool {
    let kind = match j {
        1 => SetKind::C1,
        2 => SetKind::C2,
        _ => return false,
    };
    lambda.rank() == n && s <= n && conditions_hold(kind, s, n, lambda.entries())
}

fn set_kind(label: &SimpleLabel) -> SetKind {
    match (label.space, label.flavor_or_default()) {
        (Space::Skew { .. }, _) => SetKind::B,
        (_, 1) => SetKind::C1,
        _ => SetKind::C2,
    }
}

/// The members of a label's weight set with every entry in `[-bound, bound]`,
/// lexicographically descending.
pub fn enumerate_weight_set(label: &SimpleLabel, bound: i64) -> Vec<DominantWeight> {
    let n = label.space.n();
    let kind = set_kind(label);
    enumerate_dominant_pruned(n, -bound, bound, |prefix| conditions_hold(kind, label.s, n, prefix))
}

/// The witness weight: `(2s)^n` for `B_s`, `(s+1)^n` for `C_s^1`, and
/// `((s+1)^s, s^{n-s})` for `C_s^2`.
pub fn witness_weight(label: &SimpleLabel) -> DominantWeight {
    let n = label.space.n();
    let s = label.s as i64;
    match (label.space, label.flavor_or_default()) {
        (Space::Skew { .. }, _) => DominantWeight::constant(2 * s, n),
        (_, 1) => DominantWeight::constant(s + 1, n),
        _ => DominantWeight::new((0..n).map(|i| if i < label.s { s + 1 } else { s }).collect())
            .expect("dominant by construction"),
    }
}

/// Dimension of `S_lambda C^n` by the Weyl dimension formula.
pub fn dim_schur(lambda: &DominantWeight) -> BigInt {
    let e = lambda.entries();
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for i in 0..e.len() {
        for j in i + 1..e.len() {
            num *= e[i] - e[j] + (j - i) as i64;
            den *= (j - i) as i64;
        }
    }
    num / den
}

/// A multiset of partitions.
pub type Multiset = BTreeMap<Partition, u64>;

pub(crate) fn ring_rank(space: &Space) -> Result<usize> {
    match *space {
        Space::Symm { n } => Ok(n),
        Space::Skew { n } => Ok(n / 2),
        Space::General { .. } => Err(Error::UnsupportedSpace(space.to_string())),
    }
}

/// `2y` on symmetric matrices, `y^(2)` on skew-symmetric ones.
pub(crate) fn embed(space: &Space, y: &Partition) -> Partition {
    match space {
        Space::Symm { .. } => y.doubled(),
        _ => y.duplicated(),
    }
}

/// Character of the coordinate ring `S`, truncated at total size `bound`.
pub fn space_character(space: &Space, bound: u64) -> Result<Multiset> {
    let rank = ring_rank(space)?;
    Ok(enumerate_bounded_size(rank, bound / 2)
        .into_iter()
        .map(|y| (embed(space, &y), 1))
        .collect())
}

/// Character of the ideal `I_z`: the `2y` (resp. `y^(2)`) with `y >= z`
/// componentwise, truncated at total size `bound`.
pub fn ideal_character(space: &Space, z: &Partition, bound: u64) -> Result<Multiset> {
    let rank = ring_rank(space)?;
    if z.len() > rank {
        return Err(Error::MalformedShape(format!(
            "z = {z} has more than {rank} parts for {space}"
        )));
    }
    Ok(enumerate_bounded_size(rank, bound / 2)
        .into_iter()
        .filter(|y| y.dominance_ge(z))
        .map(|y| (embed(space, &y), 1))
        .collect())
}

pub(crate) fn check_jxp_shape(space: &Space, x: &Partition, p: usize) -> Result<()> {
    let n = space.n();
    let (max_p, equal_prefix) = match space {
        Space::Symm { .. } => (n, p),
        Space::Skew { .. } => (n / 2, 2 * p),
        Space::General { .. } => return Err(Error::UnsupportedSpace(space.to_string())),
    };
    if p > max_p {
        return Err(out_of_range("p", p as i64, format!("0 <= p <= {max_p} for {space}")));
    }
    if x.len() > n {
        return Err(Error::MalformedShape(format!("x = {x} has more than n = {n} parts")));
    }
    if (1..equal_prefix).any(|i| x.get(i) != x.get(0)) {
        return Err(Error::MalformedShape(format!(
            "x = {x} must have its first {equal_prefix} parts equal"
        )));
    }
    Ok(())
}

/// Character of the subquotient `J_{x,p}`: all `x + 2y` (symm) or
/// `x + y^(2)` (skew) for `y` with at most `p` parts, truncated at total size
/// `bound`. Multiplicity-free.
pub fn jxp_character(space: &Space, x: &Partition, p: usize, bound: u64) -> Result<Multiset> {
    check_jxp_shape(space, x, p)?;
    let Some(room) = bound.checked_sub(x.size()) else {
        return Ok(Multiset::new());
    };
    Ok(enumerate_bounded_size(p, room / 2)
        .into_iter()
        .map(|y| (x.plus(&embed(space, &y)), 1))
        .collect())
}

/// The first place where the filtration check failed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiltrationMismatch {
    /// Position `r` in the linear order, or `None` for the whole-ring check.
    pub index: Option<usize>,
    pub lambda: Option<Partition>,
    pub expected: Vec<Partition>,
    pub found: Vec<Partition>,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiltrationReport {
    pub space: Space,
    pub p: usize,
    pub bound: u64,
    /// Number of filtration steps `lambda(r)` inside the window.
    pub steps: usize,
    pub passed: bool,
    pub mismatch: Option<FiltrationMismatch>,
}

/// The partitions `lambda` with `lambda_1 = ... = lambda_{p+1}` whose ideal
/// generator has size at most `bound`, ordered by size then lexicographically.
/// No earlier entry dominates a later one.
pub fn filtration_order(space: &Space, p: usize, bound: u64) -> Result<Vec<Partition>> {
    let rank = ring_rank(space)?;
    let mut lambdas: Vec<Partition> = enumerate_bounded_size(rank, bound / 2)
        .into_iter()
        .filter(|l| (1..=p).all(|i| l.get(i) == l.get(0)))
        .collect();
    lambdas.sort_by(|a, b| {
        a.size()
            .cmp(&b.size())
            .then_with(|| a.padded(rank).unwrap().cmp(&b.padded(rank).unwrap()))
    });
    Ok(lambdas)
}

/// Checks, within total size `bound`, that the ideals
/// `I_r = sum_{i >= r} I_{lambda(i)}` form a descending chain whose successive
/// quotients have the characters of `J_{x(r), p}`, and that these characters
/// together recover the character of `S`.
pub fn filtration_check(space: &Space, p: usize, bound: u64) -> Result<FiltrationReport> {
    space.require_skew_or_symm()?;
    space.check_p(p)?;
    let lambdas = filtration_order(space, p, bound)?;
    let mut report = FiltrationReport {
        space: *space,
        p,
        bound,
        steps: lambdas.len(),
        passed: true,
        mismatch: None,
    };
    let fail = |report: &mut FiltrationReport, m: FiltrationMismatch| {
        report.passed = false;
        report.mismatch = Some(m);
    };

    for (i, a) in lambdas.iter().enumerate() {
        if let Some(b) = lambdas[i + 1..].iter().find(|b| a.dominance_ge(b)) {
            fail(
                &mut report,
                FiltrationMismatch {
                    index: Some(i),
                    lambda: Some(a.clone()),
                    expected: vec![],
                    found: vec![b.clone()],
                    reason: "an earlier partition dominates a later one".into(),
                },
            );
            return Ok(report);
        }
    }

    // Walk from the tail: beyond the window every generator has size > bound.
    let mut tail = Multiset::new();
    let mut graded = Multiset::new();
    for r in (0..lambdas.len()).rev() {
        let lambda = &lambdas[r];
        let mut current = tail.clone();
        for w in ideal_character(space, lambda, bound)?.into_keys() {
            current.insert(w, 1);
        }
        let quotient: Multiset = current
            .keys()
            .filter(|w| !tail.contains_key(*w))
            .map(|w| (w.clone(), 1))
            .collect();
        let x = embed(space, lambda);
        let expected = jxp_character(space, &x, p, bound)?;
        if quotient != expected {
            fail(
                &mut report,
                FiltrationMismatch {
                    index: Some(r),
                    lambda: Some(lambda.clone()),
                    expected: expected.into_keys().collect(),
                    found: quotient.into_keys().collect(),
                    reason: "I_r / I_{r+1} differs from J_{x,p}".into(),
                },
            );
            return Ok(report);
        }
        for (w, c) in expected {
            *graded.entry(w).or_insert(0) += c;
        }
        tail = current;
    }

    let ring = space_character(space, bound)?;
    if tail != ring || graded != ring {
        let found = if tail != ring { tail } else { graded };
        fail(
            &mut report,
            FiltrationMismatch {
                index: None,
                lambda: None,
                expected: ring.into_keys().collect(),
                found: found.into_keys().collect(),
                reason: "the associated graded character differs from S".into(),
            },
        );
    }
    Ok(report)
}

/// Which part of an infinite graded character a listing is complete for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Window {
    SizeAtMost(i64),
    SizeAtLeast(i64),
}

impl Window {
    pub fn contains(&self, size: i64) -> bool {
        match *self {
            Window::SizeAtMost(b) => size <= b,
            Window::SizeAtLeast(b) => size >= b,
        }
    }
}

/// Cohomological degree -> multiset of dominant weights of a fixed rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedCharacter {
    pub rank: usize,
    pub window: Window,
    degrees: BTreeMap<i64, BTreeMap<DominantWeight, u64>>,
}

impl GradedCharacter {
    pub fn new(rank: usize, window: Window) -> Self {
        GradedCharacter {
            rank,
            window,
            degrees: BTreeMap::new(),
        }
    }

    pub fn add(&mut self, degree: i64, weight: DominantWeight, multiplicity: u64) {
        assert_eq!(weight.rank(), self.rank, "weight of the wrong rank");
        if multiplicity == 0 {
            return;
        }
        *self.degrees.entry(degree).or_default().entry(weight).or_insert(0) += multiplicity;
    }

    pub fn multiplicity(&self, degree: i64, weight: &DominantWeight) -> u64 {
        self.degrees
            .get(&degree)
            .and_then(|m| m.get(weight))
            .copied()
            .unwrap_or(0)
    }

    /// The weights in one cohomological degree.
    pub fn degree(&self, degree: i64) -> BTreeMap<DominantWeight, u64> {
        self.degrees.get(&degree).cloned().unwrap_or_default()
    }

    pub fn degrees(&self) -> impl Iterator<Item = (i64, &BTreeMap<DominantWeight, u64>)> {
        self.degrees.iter().map(|(&d, m)| (d, m))
    }

    /// `sum_j <H^j, S_lambda> q^j`.
    pub fn isotypic_poly(&self, weight: &DominantWeight) -> LaurentPoly {
        LaurentPoly::from_terms(self.degrees.iter().filter_map(|(&d, m)| m.get(weight).map(|&c| (d, c))))
    }

    pub fn contains_weight(&self, weight: &DominantWeight) -> bool {
        self.degrees.values().any(|m| m.contains_key(weight))
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let degrees: Vec<_> = self
            .degrees
            .iter()
            .map(|(d, m)| {
                let weights: Vec<_> = m
                    .iter()
                    .map(|(w, c)| serde_json::json!({ "weight": w, "multiplicity": c }))
                    .collect();
                serde_json::json!({ "degree": d, "weights": weights })
            })
            .collect();
        serde_json::json!({ "rank": self.rank, "window": self.window, "degrees": degrees })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::enumerate_dominant;

    fn w(v: &[i64]) -> DominantWeight {
        DominantWeight::new(v.to_vec()).unwrap()
    }

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn set(parts: &[&[u32]]) -> Multiset {
        parts.iter().map(|v| (p(v), 1)).collect()
    }

    #[test]
    fn constant_weight_witnesses_exactly_one_b() {
        for m in 1..5 {
            let n = 2 * m;
            for s in 0..=m {
                let lambda = DominantWeight::constant(2 * s as i64, n);
                for t in 0..=m {
                    assert_eq!(member_b(&lambda, t, n), t == s, "n={n} s={s} t={t}");
                }
            }
        }
    }

    #[test]
    fn five_five_four_is_in_no_c_set() {
        let lambda = w(&[5, 5, 4]);
        for s in 0..=3 {
            for j in [1, 2] {
                assert!(!member_c(&lambda, s, j, 3));
            }
        }
    }

    #[test]
    fn constant_weight_in_c_sets() {
        for n in 1..7 {
            for s in 0..=n {
                let lambda = DominantWeight::constant(s as i64 + 1, n);
                for t in 0..=n {
                    for j in [1, 2] {
                        let expected = (t == s && j == 1) || (t == s && s == n);
                        assert_eq!(member_c(&lambda, t, j, n), expected, "n={n} s={s} t={t} j={j}");
                    }
                }
            }
        }
    }

    #[test]
    fn witness_examples() {
        let skew6 = Space::skew(6).unwrap();
        assert_eq!(
            witness_weight(&SimpleLabel::new(skew6, 2, None).unwrap()),
            DominantWeight::constant(4, 6)
        );
        let symm3 = Space::symm(3).unwrap();
        assert_eq!(
            witness_weight(&SimpleLabel::new(symm3, 2, Some(2)).unwrap()),
            w(&[3, 3, 2])
        );
        for j in [1, 2] {
            assert_eq!(
                witness_weight(&SimpleLabel::new(symm3, 3, Some(j)).unwrap()),
                DominantWeight::constant(4, 3)
            );
        }
    }

    #[test]
    fn label_validation_and_counts() {
        let symm = Space::symm(3).unwrap();
        assert_eq!(SimpleLabel::all(symm).unwrap().len(), 7);
        assert_eq!(SimpleLabel::all(Space::skew(7).unwrap()).unwrap().len(), 4);
        assert!(SimpleLabel::new(symm, 1, None).is_err());
        assert!(SimpleLabel::new(symm, 1, Some(3)).is_err());
        assert!(SimpleLabel::new(symm, 4, Some(1)).is_err());
        assert_eq!(
            SimpleLabel::new(symm, 3, Some(1)).unwrap(),
            SimpleLabel::new(symm, 3, Some(2)).unwrap()
        );
        assert!(SimpleLabel::new(Space::skew(4).unwrap(), 3, None).is_err());
        assert!(SimpleLabel::all(Space::general(3, 3).unwrap()).is_err());
    }

    #[test]
    fn witness_exclusivity_small() {
        for n in 1..8 {
            for space in [Space::skew(n).unwrap(), Space::symm(n).unwrap()] {
                let labels = SimpleLabel::all(space).unwrap();
                for a in &labels {
                    for b in &labels {
                        assert_eq!(b.contains(&witness_weight(a)), a == b, "{space}: {a} vs {b}");
                    }
                }
            }
        }
    }

    #[test]
    fn pruned_listing_matches_brute_force_filter() {
        for n in 1..6 {
            for space in [Space::skew(n).unwrap(), Space::symm(n).unwrap()] {
                let all = enumerate_dominant(n, -4, 4);
                for label in SimpleLabel::all(space).unwrap() {
                    let brute: Vec<_> = all.iter().filter(|l| label.contains(l)).cloned().collect();
                    assert_eq!(enumerate_weight_set(&label, 4), brute, "{space} {label}");
                }
            }
        }
    }

    #[test]
    fn b_set_members_are_paired() {
        for n in 1..7 {
            let space = Space::skew(n).unwrap();
            for label in SimpleLabel::all(space).unwrap() {
                for lambda in enumerate_weight_set(&label, 5) {
                    let e = lambda.entries();
                    if n % 2 == 0 {
                        assert!(e.chunks(2).all(|c| c[0] == c[1]));
                    } else {
                        // pairs before the unpaired entry 2s+1, shifted pairs after it
                        let s = label.s;
                        assert_eq!(e[2 * s], 2 * s as i64);
                        assert!(e[..2 * s].chunks(2).all(|c| c[0] == c[1]));
                        assert!(e[2 * s + 1..].chunks(2).all(|c| c[0] == c[1]));
                    }
                }
            }
        }
    }

    #[test]
    fn dim_schur_examples() {
        assert_eq!(dim_schur(&w(&[5, 5, 4])), BigInt::from(3));
        assert_eq!(dim_schur(&DominantWeight::zero(4)), BigInt::from(1));
        assert_eq!(dim_schur(&w(&[1, 0, 0])), BigInt::from(3));
        // Sym^2 C^4 and wedge^2 C^4
        assert_eq!(dim_schur(&w(&[2, 0, 0, 0])), BigInt::from(10));
        assert_eq!(dim_schur(&w(&[1, 1, 0, 0])), BigInt::from(6));
        // invariant under det twists
        assert_eq!(dim_schur(&w(&[3, 1, -2])), dim_schur(&w(&[5, 3, 0])));
    }

    #[test]
    fn space_character_examples() {
        let symm2 = Space::symm(2).unwrap();
        assert_eq!(space_character(&symm2, 4).unwrap(), set(&[&[], &[2], &[4], &[2, 2]]));
        let skew4 = Space::skew(4).unwrap();
        assert_eq!(space_character(&skew4, 2).unwrap(), set(&[&[], &[1, 1]]));
        for space in [symm2, skew4, Space::symm(5).unwrap()] {
            assert_eq!(space_character(&space, 0).unwrap(), set(&[&[]]));
        }
    }

    #[test]
    fn ideal_character_examples() {
        let symm2 = Space::symm(2).unwrap();
        assert_eq!(
            ideal_character(&symm2, &p(&[1]), 4).unwrap(),
            set(&[&[2], &[4], &[2, 2]])
        );
        assert_eq!(
            ideal_character(&symm2, &Partition::empty(), 9).unwrap(),
            space_character(&symm2, 9).unwrap()
        );
        let skew4 = Space::skew(4).unwrap();
        assert_eq!(ideal_character(&skew4, &p(&[2]), 4).unwrap(), set(&[&[2, 2]]));
        assert!(ideal_character(&skew4, &p(&[1, 1, 1]), 4).is_err());
    }

    #[test]
    fn ideal_character_is_antitone() {
        let space = Space::symm(3).unwrap();
        let zs = enumerate_bounded_size(3, 4);
        for y in &zs {
            for z in &zs {
                if y.dominance_ge(z) {
                    let iy = ideal_character(&space, y, 14).unwrap();
                    let iz = ideal_character(&space, z, 14).unwrap();
                    assert!(iy.keys().all(|k| iz.contains_key(k)), "y={y} z={z}");
                }
            }
        }
    }

    #[test]
    fn jxp_character_examples() {
        let symm3 = Space::symm(3).unwrap();
        assert_eq!(
            jxp_character(&symm3, &p(&[2, 2]), 1, 8).unwrap(),
            set(&[&[2, 2], &[4, 2], &[6, 2]])
        );
        let skew4 = Space::skew(4).unwrap();
        assert_eq!(
            jxp_character(&skew4, &p(&[1, 1]), 1, 6).unwrap(),
            set(&[&[1, 1], &[2, 2], &[3, 3]])
        );
        assert!(jxp_character(&symm3, &p(&[2, 1]), 2, 8).is_err());
        assert!(jxp_character(&skew4, &p(&[2, 1]), 1, 8).is_err());
        assert!(jxp_character(&symm3, &p(&[9, 9]), 1, 8).unwrap().is_empty());
    }

    #[test]
    fn jxp_always_contains_x_and_is_multiplicity_free() {
        let symm = Space::symm(4).unwrap();
        for x in enumerate_bounded_size(4, 6) {
            for p in 0..=4 {
                if let Ok(c) = jxp_character(&symm, &x, p, 20) {
                    assert!(c.contains_key(&x));
                    assert!(c.values().all(|&m| m == 1));
                }
            }
        }
    }

    #[test]
    fn filtration_examples() {
        for bound in [0, 3, 8, 12] {
            assert!(filtration_check(&Space::symm(2).unwrap(), 0, bound).unwrap().passed);
        }
        assert!(filtration_check(&Space::skew(4).unwrap(), 1, 8).unwrap().passed);
        assert!(filtration_check(&Space::symm(3).unwrap(), 1, 10).unwrap().passed);
        assert!(filtration_check(&Space::symm(3).unwrap(), 3, 10).is_err());
        assert!(filtration_check(&Space::general(3, 3).unwrap(), 1, 10).is_err());
    }

    #[test]
    fn filtration_order_is_a_linear_extension() {
        let order = filtration_order(&Space::symm(3).unwrap(), 1, 16).unwrap();
        assert_eq!(order[0], Partition::empty());
        for (i, a) in order.iter().enumerate() {
            assert_eq!(a.get(0), a.get(1));
            for b in &order[i + 1..] {
                assert!(!a.dominance_ge(b));
            }
        }
    }

    #[test]
    fn graded_character_bookkeeping() {
        let mut h = GradedCharacter::new(3, Window::SizeAtLeast(0));
        h.add(4, w(&[5, 5, 4]), 1);
        h.add(3, w(&[5, 3, 2]), 1);
        h.add(4, w(&[5, 5, 4]), 1);
        assert_eq!(h.multiplicity(4, &w(&[5, 5, 4])), 2);
        assert_eq!(h.isotypic_poly(&w(&[5, 5, 4])), LaurentPoly::monomial(4, 2));
        assert!(h.contains_weight(&w(&[5, 3, 2])));
        assert_eq!(h.degree(7).len(), 0);
    }
}
