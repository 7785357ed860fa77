//! Multiplicities of witness weights in `Ext^*_S(J_p, S)`.
//!
//! Three independent routes compute the same polynomial
//! `<Ext^*(J_p, S), S_{lambda(L)} W>` for a simple label `L`:
//!
//! - [`ext_witness_closed`]: the closed q-binomial formulas;
//! - [`ext_witness_enum`]: the sum over the partitions `y` singled out by the
//!   forced-degree and parity conditions, each evaluated through the
//!   trivial (or `wedge^{n-s} W`) isotypic part of Bott's theorem;
//! - [`witness_multiplicity_from_jp`]: [`ext_jxp`] on every summand
//!   `J_{x,p}` of `J_p` that can reach the witness weight, reading off the
//!   witness isotypic component.
//!
//! `J_p` is the direct sum of the `J_{x,p}` over `x = 2y` (symm) or
//! `x = y^(2)` (skew), with `y_1 = ... = y_{p+1}`.

use std::collections::BTreeMap;
use std::str::FromStr;

use serde::Serialize;

use crate::bott::{bott, trivial_isotypic, wedge_isotypic, BottResult};
use crate::characters::{check_jxp_shape, embed, ring_rank, witness_weight, GradedCharacter, SimpleLabel, Window};
use crate::error::{out_of_range, Error, Result};
use crate::partitions::{enumerate_bounded_size, enumerate_box, DominantWeight, Partition};
use crate::qseries::{binomial, gauss, LaurentPoly};
use crate::space::Space;

/// Which computation produces a witness multiplicity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ExtRoute {
    Closed,
    Enum,
    Bott,
}

impl ExtRoute {
    pub const ALL: [ExtRoute; 3] = [ExtRoute::Closed, ExtRoute::Enum, ExtRoute::Bott];

    pub fn name(&self) -> &'static str {
        match self {
            ExtRoute::Closed => "closed",
            ExtRoute::Enum => "enum",
            ExtRoute::Bott => "bott",
        }
    }
}

impl FromStr for ExtRoute {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "closed" => Ok(ExtRoute::Closed),
            "enum" => Ok(ExtRoute::Enum),
            "bott" => Ok(ExtRoute::Bott),
            _ => Err(Error::MalformedShape(format!(
                "unknown route {s:?}; expected closed, enum or bott"
            ))),
        }
    }
}

/// Computes the witness multiplicity of `label` in `Ext^*(J_p, S)` by `route`.
pub fn ext_witness(route: ExtRoute, label: &SimpleLabel, p: usize) -> Result<LaurentPoly> {
    match route {
        ExtRoute::Closed => ext_witness_closed(label, p),
        ExtRoute::Enum => ext_witness_enum(label, p),
        ExtRoute::Bott => witness_multiplicity_from_jp(label, p),
    }
}

/// Rank `k` of the quotient bundle on the Grassmannian attached to `J_{x,p}`.
fn quotient_rank(space: &Space, p: usize) -> usize {
    match space {
        Space::Skew { .. } => 2 * p,
        _ => p,
    }
}

/// `Ext^j = H^{top - j}`: `top` is `dim X - dim G`'s worth of the duality shift,
/// `C(n+1,2) - C(p+1,2)` (symm) or `C(n,2) - C(2p,2)` (skew).
fn duality_top(space: &Space, p: usize) -> i64 {
    let n = space.n() as i64;
    let p = p as i64;
    match space {
        Space::Skew { .. } => binomial(n, 2) - binomial(2 * p, 2),
        _ => binomial(n + 1, 2) - binomial(p + 1, 2),
    }
}

/// `det(Sym^2 Q^*) = det(Q)^{-(p+1)}`, `det(wedge^2 Q^*) = det(Q)^{-(2p-1)}`.
fn dual_det_exponent(space: &Space, p: usize) -> i64 {
    let p = p as i64;
    match space {
        Space::Skew { .. } => 2 * p - 1,
        _ => p + 1,
    }
}

/// `det(Sym^2 W) = det(W)^{n+1}`, `det(wedge^2 W) = det(W)^{n-1}`.
fn ambient_det_exponent(space: &Space) -> i64 {
    let n = space.n() as i64;
    match space {
        Space::Skew { .. } => n - 1,
        _ => n + 1,
    }
}

fn check_witness_args(label: &SimpleLabel, p: usize) -> Result<()> {
    label.space.check_p(p)?;
    if let Space::Symm { n } = label.space {
        if label.s + p < n {
            return Err(out_of_range(
                "s",
                label.s as i64,
                format!("{} <= s <= {n} for p = {p}", n - p),
            ));
        }
    }
    Ok(())
}

/// The closed forms for `<Ext^*(J_p, S), S_{lambda(L)} W>`.
///
/// Skew, with `r = m - p`: `q^{2r^2 - r (+2s if n odd)} {s-1 choose s-r}_{q^4}`
/// for `r <= s <= m`, zero otherwise. Symm: for `s = n - p + 2g`,
/// `q^{1 + C(s+1,2) - C(2g+2,2)} {floor((s-1)/2) choose g}_{q^{-4}}` when the
/// flavor has the parity of `s` (or `s = n`), zero otherwise.
pub fn ext_witness_closed(label: &SimpleLabel, p: usize) -> Result<LaurentPoly> {
    check_witness_args(label, p)?;
    let n = label.space.n() as i64;
    let s = label.s as i64;
    let p = p as i64;
    match label.space {
        Space::Skew { .. } => {
            let r = n / 2 - p;
            if s < r {
                return Ok(LaurentPoly::zero());
            }
            let mut e = 2 * r * r - r;
            if n % 2 == 1 {
                e += 2 * s;
            }
            Ok(gauss(s - 1, s - r, 4)?.shift(e))
        }
        _ => {
            let g = s - (n - p);
            if g % 2 != 0 {
                return Ok(LaurentPoly::zero());
            }
            if s < n && (label.flavor_or_default() as i64 - s) % 2 != 0 {
                return Ok(LaurentPoly::zero());
            }
            let e = 1 + binomial(s + 1, 2) - binomial(g + 2, 2);
            Ok(gauss((s - 1) / 2, g / 2, -4)?.shift(e))
        }
    }
}

/// The data fixed by a label and `p` in the per-`y` computation: for each
/// `y` with `y_1 = ... = y_{p+1} = d` the witness multiplicity in
/// `Ext^*(J_{x,p}, S)` is the trivial (or `wedge^{n-s} W`) isotypic part of
/// `H^{top - *}(G, S_beta R (x) S_alpha Q)` summed over `alpha` in `A_s`.
#[derive(Debug, Clone)]
pub struct ClaimContext {
    label: SimpleLabel,
    p: usize,
    n: usize,
    k: usize,
    top: i64,
}

impl ClaimContext {
    pub fn new(label: &SimpleLabel, p: usize) -> Result<Self> {
        check_witness_args(label, p)?;
        Ok(ClaimContext {
            label: *label,
            p,
            n: label.space.n(),
            k: quotient_rank(&label.space, p),
            top: duality_top(&label.space, p),
        })
    }

    fn is_skew(&self) -> bool {
        matches!(self.label.space, Space::Skew { .. })
    }

    /// The only `d = y_{p+1}` that can contribute: `2s + 2p - n + 1` (skew),
    /// `(s + p - n) / 2` (symm). `None` when it is negative or not an integer.
    pub fn forced_degree(&self) -> Option<u32> {
        let (n, p, s) = (self.n as i64, self.p as i64, self.label.s as i64);
        let d = if self.is_skew() {
            2 * s + 2 * p - n + 1
        } else {
            let twice = s + p - n;
            if twice % 2 != 0 {
                return None;
            }
            twice / 2
        };
        (d >= 0).then_some(d as u32)
    }

    /// `y_{p+1}`, after checking `y_1 = ... = y_{p+1}` and the length of `y`.
    pub fn degree_of(&self, y: &Partition) -> Result<u32> {
        let rank = ring_rank(&self.label.space)?;
        if y.len() > rank {
            return Err(Error::MalformedShape(format!("y = {y} has more than {rank} parts")));
        }
        let d = y.get(self.p);
        if (0..self.p).any(|i| y.get(i) != d) {
            return Err(Error::MalformedShape(format!(
                "y = {y} must have its first {} parts equal",
                self.p + 1
            )));
        }
        Ok(d)
    }

    /// The `x` of the summand `J_{x,p}` indexed by `y`, padded to `n` parts.
    pub fn x_of(&self, y: &Partition) -> Partition {
        embed(&self.label.space, y)
    }

    /// `beta = x^2 + (n-1-2s)` (skew) or `x^2 + (n-s)` (symm), where `x^2`
    /// is `x` with its first `k` parts removed. May have negative entries.
    pub fn beta(&self, y: &Partition) -> Result<Vec<i64>> {
        self.degree_of(y)?;
        let shift = if self.is_skew() {
            self.n as i64 - 1 - 2 * self.label.s as i64
        } else {
            (self.n - self.label.s) as i64
        };
        let x = self.x_of(y).padded(self.n)?;
        Ok(x[self.k..].iter().map(|&v| v as i64 + shift).collect())
    }

    /// Membership in `A_s`, the weights of `det(Q)^a (x) Sym(Sym^2 Q^*)`
    /// (resp. `Sym(wedge^2 Q^*)`) with `a = 2d+n-s-p-1` (resp. `d+n-2s-2p`).
    pub fn in_a_s(&self, alpha: &DominantWeight, d: u32) -> bool {
        if alpha.rank() != self.k {
            return false;
        }
        let (n, p, s, d) = (self.n as i64, self.p as i64, self.label.s as i64, d as i64);
        let e = alpha.entries();
        if self.is_skew() {
            e.chunks(2).all(|c| c[0] == c[1]) && e.first().is_none_or(|&a| a <= d + n - 2 * s - 2 * p)
        } else {
            let residue = n - s - p - 1;
            e.iter().all(|&a| (a - residue).rem_euclid(2) == 0) && e.first().is_none_or(|&a| a < 2 * d + n - s - p)
        }
    }

    /// The contribution of the summand indexed by `y`:
    /// `q^{top - |beta|}` when `beta` fits the `(n-k) x k` box and the Bott
    /// partner `alpha` of `beta` lies in `A_s`, zero otherwise.
    pub fn contribution(&self, y: &Partition) -> Result<LaurentPoly> {
        let d = self.degree_of(y)?;
        let beta = self.beta(y)?;
        // beta is non-increasing; a negative last entry of gamma + delta is
        // never a rearrangement of delta, so nothing trivial survives.
        if beta.last().is_some_and(|&b| b < 0) {
            return Ok(LaurentPoly::zero());
        }
        let beta = Partition::from_signed(&beta)?;
        let wedge = !self.is_skew() && self.label.flavor == Some(2);
        let iso = if wedge {
            wedge_isotypic(&beta, self.k, self.n, self.label.s)?
        } else {
            trivial_isotypic(&beta, self.k, self.n)?
        };
        match iso.alpha {
            Some(alpha) if self.in_a_s(&alpha, d) => Ok(iso.multiplicity.substitute(-1).shift(self.top)),
            _ => Ok(LaurentPoly::zero()),
        }
    }

    /// All `y` with `y_1 = ... = y_{p+1} = d` and the remaining parts at most `d`.
    pub fn ys_with_degree(&self, d: u32) -> Vec<Partition> {
        let rank = ring_rank(&self.label.space).expect("skew or symm");
        enumerate_box(rank - self.p - 1, d)
            .into_iter()
            .map(|tail| head_then_tail(d, self.p + 1, &tail, rank - self.p - 1))
            .collect()
    }

    /// The `y` reconstructed from `z` in the box of the closed-form proof:
    /// skew `y_{p+1+i} = 2 z_i` (n odd) or `2 z_i + 1` (n even), `z` in
    /// `P(m-p-1, s-(m-p))`; symm `(y_{p+2}, ...) = z^(2)`, `z` in
    /// `P(floor((n-p-1)/2), (s+p-n)/2)`.
    pub fn parametrized_ys(&self) -> Vec<Partition> {
        let Some(d) = self.forced_degree() else {
            return Vec::new();
        };
        let (n, p, s) = (self.n, self.p, self.label.s);
        if self.is_skew() {
            let m = n / 2;
            if s + p < m {
                return Vec::new();
            }
            let rows = m - p - 1;
            let odd = (n % 2) as u32;
            enumerate_box(rows, (s + p - m) as u32)
                .into_iter()
                .map(|z| {
                    let tail: Vec<u32> = z
                        .padded(rows)
                        .expect("fits")
                        .into_iter()
                        .map(|zi| 2 * zi + 1 - odd)
                        .collect();
                    head_then_tail(d, p + 1, &Partition::new(tail).expect("non-increasing"), rows)
                })
                .collect()
        } else {
            let rows = n - p - 1;
            enumerate_box(rows / 2, d)
                .into_iter()
                .map(|z| head_then_tail(d, p + 1, &z.duplicated(), rows))
                .collect()
        }
    }
}

fn head_then_tail(d: u32, head: usize, tail: &Partition, tail_len: usize) -> Partition {
    let mut parts = vec![d; head];
    parts.extend(tail.padded(tail_len).expect("tail fits"));
    Partition::new(parts).expect("tail bounded by d")
}

/// The enumeration behind the closed forms: sums the per-`y` contributions
/// over the `z`-parametrized family at the forced degree.
pub fn ext_witness_enum(label: &SimpleLabel, p: usize) -> Result<LaurentPoly> {
    let ctx = ClaimContext::new(label, p)?;
    let mut total = LaurentPoly::zero();
    for y in ctx.parametrized_ys() {
        total += &ctx.contribution(&y)?;
    }
    Ok(total)
}

/// `Ext^*_S(J_{x,p}, S)` as a graded `GL(W)`-character, via Bott's algorithm
/// on each summand `S_{x^2} R (x) S_alpha Q` of `V (x) S^dual` on the
/// Grassmannian of rank `k` quotients.
///
/// The summands are indexed by `y'` in `P(p)` through the dual symmetric
/// algebra (`alpha = (x_1 - p - 1)^p + (2y')^*`, resp.
/// `(x_1 - 2p + 1)^{2p} + (y'^(2))^*`); `bound` caps its degree
/// `|2y'|` (resp. `|y'^(2)|`). Each summand lowers the output size by that
/// degree, so the listing is complete for `|lambda| >= base - bound`, where
/// `base` is the size reached by `y' = 0`.
pub fn ext_jxp(space: &Space, x: &Partition, p: usize, bound: u64) -> Result<GradedCharacter> {
    ext_jxp_sym_degrees(space, x, p, 0, bound)
}

/// [`ext_jxp`] restricted to dual-symmetric degrees in `[lo, hi]`.
fn ext_jxp_sym_degrees(space: &Space, x: &Partition, p: usize, lo: u64, hi: u64) -> Result<GradedCharacter> {
    check_jxp_shape(space, x, p)?;
    let n = space.n();
    let k = quotient_rank(space, p);
    let xs: Vec<i64> = x.padded(n)?.into_iter().map(i64::from).collect();
    let c = xs.first().copied().filter(|_| k > 0).unwrap_or(0);
    let twist = c - dual_det_exponent(space, p);
    let x2 = DominantWeight::new(xs[k..].to_vec())?;
    let det = ambient_det_exponent(space);
    let top = duality_top(space, p);
    let base = k as i64 * twist + x2.size() + n as i64 * det;
    let mut out = GradedCharacter::new(n, Window::SizeAtLeast(base - hi as i64));
    for yp in enumerate_bounded_size(p, hi / 2) {
        let sym = embed(space, &yp);
        if sym.size() < lo {
            continue;
        }
        let alpha = DominantWeight::constant(twist, k).plus(&sym.to_weight(k)?.dual())?;
        if let BottResult::Cohomology { degree, weight } = bott(&alpha, &x2, n)? {
            out.add(top - degree as i64, weight.shifted(det), 1);
        }
    }
    Ok(out)
}

/// Per-`d` witness multiplicities from the Bott route, with the bound on `d`
/// beyond which no summand can reach the witness weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JpBreakdown {
    pub d_bound: Option<u32>,
    pub by_degree: BTreeMap<u32, LaurentPoly>,
}

impl JpBreakdown {
    pub fn total(&self) -> LaurentPoly {
        self.by_degree
            .values()
            .fold(LaurentPoly::zero(), |acc, f| acc + f.clone())
    }

    /// The values of `d` with a nonzero contribution.
    pub fn contributing(&self) -> Vec<u32> {
        self.by_degree
            .iter()
            .filter(|(_, f)| !f.is_zero())
            .map(|(&d, _)| d)
            .collect()
    }
}

/// Runs the Bott route summand by summand over every `y` that can reach the
/// witness weight.
///
/// A Bott output `mu` satisfies `mu_1 >= x_{k+1} - k`, and `x_{k+1}` is `2d`
/// (symm) or `d` (skew), which bounds `d` by the target. For a given `y`
/// the degree of the dual symmetric algebra is pinned by `|mu|`.
pub fn witness_breakdown(label: &SimpleLabel, p: usize) -> Result<JpBreakdown> {
    let ctx = ClaimContext::new(label, p)?;
    let space = label.space;
    let n = space.n() as i64;
    let k = ctx.k as i64;
    let det = ambient_det_exponent(&space);
    let witness = witness_weight(label);
    let target_first = witness.at(1) - det;
    let target_size = witness.size() - n * det;
    let reach = target_first + k;
    let d_bound = match space {
        Space::Skew { .. } => reach,
        _ => reach.div_euclid(2),
    };
    let mut by_degree = BTreeMap::new();
    if d_bound < 0 {
        return Ok(JpBreakdown {
            d_bound: None,
            by_degree,
        });
    }
    for d in 0..=d_bound as u32 {
        let mut sum = LaurentPoly::zero();
        for y in ctx.ys_with_degree(d) {
            let x = ctx.x_of(&y);
            let xs: Vec<i64> = x.padded(space.n())?.into_iter().map(i64::from).collect();
            let c = if k > 0 { xs[0] } else { 0 };
            let x2_size: i64 = xs[ctx.k..].iter().sum();
            let sym = k * (c - dual_det_exponent(&space, p)) + x2_size - target_size;
            if sym < 0 {
                continue;
            }
            let ext = ext_jxp_sym_degrees(&space, &x, p, sym as u64, sym as u64)?;
            sum += &ext.isotypic_poly(&witness);
        }
        by_degree.insert(d, sum);
    }
    Ok(JpBreakdown {
        d_bound: Some(d_bound as u32),
        by_degree,
    })
}

/// The witness multiplicity from [`ext_jxp`] summed over the summands of `J_p`.
pub fn witness_multiplicity_from_jp(label: &SimpleLabel, p: usize) -> Result<LaurentPoly> {
    Ok(witness_breakdown(label, p)?.total())
}
