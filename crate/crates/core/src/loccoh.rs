//! The generating functions `H_p(q) = sum_j [H^j_{Y_p}(X, O_X)] q^j` in the
//! Grothendieck group of holonomic D-modules, local cohomological dimension,
//! and the dictionary between the intersection homology modules `D_s` and
//! the characters `B_s`, `C_s^j`.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::json;

use crate::characters::SimpleLabel;
use crate::error::{out_of_range, Error, Result};
use crate::extmult::{ext_witness, ExtRoute};
use crate::qseries::{binomial, gauss, LaurentPoly};
use crate::space::Space;

/// The character of `D_s`: `B_{m-s}` on skew matrices; `C_{n-s}^1` or
/// `C_{n-s}^2` on symmetric ones as `n - s` is odd or even.
pub fn character_of(space: &Space, s: usize) -> Result<SimpleLabel> {
    match *space {
        Space::General { .. } => Err(Error::UnsupportedSpace(space.to_string())),
        Space::Skew { n } => {
            let m = n / 2;
            if s > m {
                return Err(out_of_range("s", s as i64, format!("0 <= s <= {m}")));
            }
            SimpleLabel::new(*space, m - s, None)
        }
        Space::Symm { n } => {
            if s > n {
                return Err(out_of_range("s", s as i64, format!("0 <= s <= {n}")));
            }
            let j = if (n - s) % 2 == 1 { 1 } else { 2 };
            SimpleLabel::new(*space, n - s, Some(j))
        }
    }
}

/// The `s` with `D_s` having character `label`, if any. Flavors of the wrong
/// parity belong to simple modules with a nontrivial local system.
pub fn d_index_of(label: &SimpleLabel) -> Option<usize> {
    let n = label.space.n();
    let s = match label.space {
        Space::Skew { .. } => n / 2 - label.s,
        _ => n - label.s,
    };
    (character_of(&label.space, s).ok()? == *label).then_some(s)
}

/// Number of intersection homology modules `D_0, ..., D_top`.
fn d_count(space: &Space) -> usize {
    match *space {
        Space::Skew { n } => n / 2 + 1,
        Space::General { n, .. } | Space::Symm { n } => n + 1,
    }
}

/// Reads a simple label written as `B_s`, `C_s^j` or `C_s` (for `s = n`),
/// or `D_s`, which stands for the character of `D_s`.
pub fn parse_label(space: &Space, text: &str) -> Result<SimpleLabel> {
    let (head, s, flavor) = split_label(text)?;
    match (head, flavor) {
        ("D", None) => character_of(space, s),
        ("B", None) if matches!(space, Space::Skew { .. }) => SimpleLabel::new(*space, s, None),
        ("C", _) if matches!(space, Space::Symm { .. }) => {
            SimpleLabel::new(*space, s, flavor.or((s == space.n()).then_some(1)))
        }
        _ => Err(label_error(text)),
    }
}

/// Resolves a label to the index of the corresponding `D_s`. Characters of
/// simple modules other than the `D_s` are rejected.
pub fn resolve_d_label(space: &Space, text: &str) -> Result<usize> {
    if let ("D", s, None) = split_label(text)? {
        if s >= d_count(space) {
            return Err(out_of_range("s", s as i64, format!("0 <= s < {}", d_count(space))));
        }
        return Ok(s);
    }
    d_from_character(&parse_label(space, text)?)
}

fn label_error(text: &str) -> Error {
    Error::MalformedShape(format!(
        "cannot read label {text:?} here; expected D_s, B_s (skew), C_s^j or C_n (symm)"
    ))
}

fn split_label(text: &str) -> Result<(&str, usize, Option<u8>)> {
    let (head, rest) = text.split_once('_').ok_or_else(|| label_error(text))?;
    let (s, flavor) = match rest.split_once('^') {
        Some((s, j)) => (s, Some(j.parse::<u8>().map_err(|_| label_error(text))?)),
        None => (rest, None),
    };
    let s = s.parse().map_err(|_| label_error(text))?;
    Ok((head, s, flavor))
}

fn d_from_character(label: &SimpleLabel) -> Result<usize> {
    d_index_of(label).ok_or_else(|| {
        Error::MalformedShape(format!(
            "{label} is not the character of an intersection homology module"
        ))
    })
}

/// `H_p(q)` as a map `s -> coefficient of [D_s]`. Only nonzero coefficients
/// are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrothendieckPoly {
    pub space: Space,
    pub p: usize,
    terms: BTreeMap<usize, LaurentPoly>,
}

impl GrothendieckPoly {
    fn new(space: Space, p: usize) -> Self {
        GrothendieckPoly {
            space,
            p,
            terms: BTreeMap::new(),
        }
    }

    fn insert(&mut self, s: usize, poly: LaurentPoly) {
        if !poly.is_zero() {
            self.terms.insert(s, poly);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &LaurentPoly)> {
        self.terms.iter().map(|(&s, f)| (s, f))
    }

    pub fn coefficient(&self, s: usize) -> LaurentPoly {
        self.terms.get(&s).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn top_degree(&self) -> Option<i64> {
        self.terms.values().filter_map(LaurentPoly::top_degree).max()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<_> = self
            .terms
            .iter()
            .map(|(&s, f)| {
                let character = character_of(&self.space, s)
                    .ok()
                    .map(|c| json!({ "name": c.to_string(), "s": c.s, "flavor": c.flavor }));
                json!({
                    "label": { "name": format!("D_{s}"), "s": s, "flavor": null, "character": character },
                    "poly": f.to_json(),
                })
            })
            .collect();
        json!({ "space": self.space, "p": self.p, "terms": terms })
    }
}

impl fmt::Display for GrothendieckPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (s, poly)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "[D_{s}]*({poly})")?;
        }
        Ok(())
    }
}

/// `H_p(q)` from the closed formulas.
///
/// General `m x n`: `sum_{s<=p} q^{(n-p)^2 + (n-s)(m-n)} {n-s-1 choose p-s}_{q^2}`.
/// Skew: `sum_{s<=p} q^{2r^2 + r + 2(p-s)} {m-1-s choose p-s}_{q^4}` for odd
/// `n` and `q^{2r^2 - r}` in place of the power for even `n`, `r = m - p`.
/// Symm: `sum_{s<=p, s=p mod 2} q^{1 + C(n-s+1,2) - C(p-s+2,2)}
/// {floor((n-s-1)/2) choose (p-s)/2}_{q^{-4}}`.
pub fn hpq(space: &Space, p: usize) -> Result<GrothendieckPoly> {
    space.check_p(p)?;
    let mut out = GrothendieckPoly::new(*space, p);
    let pi = p as i64;
    match *space {
        Space::General { m, n } => {
            let (m, n) = (m as i64, n as i64);
            for s in 0..=pi {
                let e = (n - pi).pow(2) + (n - s) * (m - n);
                out.insert(s as usize, gauss(n - s - 1, pi - s, 2)?.shift(e));
            }
        }
        Space::Skew { n } => {
            let m = (n / 2) as i64;
            let r = m - pi;
            for s in 0..=pi {
                let e = if n % 2 == 1 {
                    2 * r * r + r + 2 * (pi - s)
                } else {
                    2 * r * r - r
                };
                out.insert(s as usize, gauss(m - 1 - s, pi - s, 4)?.shift(e));
            }
        }
        Space::Symm { n } => {
            let n = n as i64;
            for s in (pi % 2..=pi).step_by(2) {
                let e = 1 + binomial(n - s + 1, 2) - binomial(pi - s + 2, 2);
                out.insert(s as usize, gauss((n - s - 1) / 2, (pi - s) / 2, -4)?.shift(e));
            }
        }
    }
    Ok(out)
}

/// `H_p(q)` assembled from witness multiplicities in `Ext^*(J_p, S)`.
///
/// Every simple label is probed by its witness weight through `route`. On
/// symmetric matrices labels `C_s^j` with `s < n - p` are skipped: they
/// correspond to `D_{n-s}` with `n - s > p`, whose support is not contained
/// in `Y_p`. A nonzero multiplicity on a label that is not the character of
/// some `D_s` is reported as an error.
pub fn hpq_from_ext(space: &Space, p: usize, route: ExtRoute) -> Result<GrothendieckPoly> {
    if let Space::General { .. } = space {
        return Err(Error::UnsupportedSpace(format!(
            "{space}: only the closed formula is available for general matrices"
        )));
    }
    space.check_p(p)?;
    let n = space.n();
    let mut out = GrothendieckPoly::new(*space, p);
    for label in SimpleLabel::all(*space)? {
        if matches!(space, Space::Symm { .. }) && label.s + p < n {
            continue;
        }
        let poly = ext_witness(route, &label, p)?;
        match d_index_of(&label) {
            Some(s) => out.insert(s, poly),
            None if poly.is_zero() => {}
            None => {
                return Err(Error::MalformedShape(format!(
                    "{label} received multiplicity {poly} but is not the character of any D_s"
                )))
            }
        }
    }
    Ok(out)
}

/// Local cohomological dimension: the top exponent of `H_p(q)`.
pub fn lcd(space: &Space, p: usize) -> Result<i64> {
    Ok(hpq(space, p)?.top_degree().expect("H_p(q) is nonzero"))
}

/// The closed formulas: `mn - (p+1)^2 + 1` (general), `C(n,2) - C(2p+2,2) + 1`
/// (skew), and `1 + C(n+1,2) - C(p+2,2)` or `1 + C(n,2) - C(p+1,2)` (symm,
/// `p` even or odd).
pub fn lcd_closed(space: &Space, p: usize) -> Result<i64> {
    space.check_p(p)?;
    let p = p as i64;
    Ok(match *space {
        Space::General { m, n } => (m * n) as i64 - (p + 1).pow(2) + 1,
        Space::Skew { n } => binomial(n as i64, 2) - binomial(2 * p + 2, 2) + 1,
        Space::Symm { n } if p % 2 == 0 => 1 + binomial(n as i64 + 1, 2) - binomial(p + 2, 2),
        Space::Symm { n } => 1 + binomial(n as i64, 2) - binomial(p + 1, 2),
    })
}

/// The modules `D_s` whose coefficient in `H_p(q)` reaches the lcd.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopSupport {
    pub lcd: i64,
    pub modules: Vec<usize>,
}

impl TopSupport {
    pub fn unique(&self) -> Option<usize> {
        match self.modules[..] {
            [s] => Some(s),
            _ => None,
        }
    }

    pub fn is_tie(&self) -> bool {
        self.modules.len() > 1
    }
}

/// Which `D_s` carry the top nonvanishing local cohomology. More than one
/// module can attain it (for instance on hypersurfaces), and all are listed.
pub fn top_module_support(space: &Space, p: usize) -> Result<TopSupport> {
    let h = hpq(space, p)?;
    let lcd = h.top_degree().expect("H_p(q) is nonzero");
    let modules = h
        .terms()
        .filter(|(_, f)| f.top_degree() == Some(lcd))
        .map(|(s, _)| s)
        .collect();
    Ok(TopSupport { lcd, modules })
}
