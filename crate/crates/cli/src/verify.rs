//! The `verify` runner: named checks over parameter sweeps, each reporting
//! the first counterexample it finds.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use loccoh_core::bott::{bott, trivial_isotypic, wedge_isotypic, wedge_weight, BottResult};
use loccoh_core::characters::{dim_schur, filtration_check, member_c, witness_weight, SimpleLabel};
use loccoh_core::extmult::{ext_jxp, ext_witness, ExtRoute};
use loccoh_core::loccoh::{hpq, hpq_from_ext, lcd, lcd_closed, top_module_support};
use loccoh_core::partitions::{enumerate_box, enumerate_dominant};
use loccoh_core::qseries::{gauss, gauss_enum, LaurentPoly};
use loccoh_core::{DominantWeight, Partition, Space};

/// Overrides for the default sweep ranges.
#[derive(Debug, Clone, Copy, Default)]
pub struct Limits {
    pub max_n: Option<usize>,
    pub bound: Option<u64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub name: &'static str,
    pub range: String,
    pub passed: bool,
    pub cases: u64,
    pub counterexample: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<u128>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<CheckReport>,
}

struct Outcome {
    range: String,
    cases: u64,
    counterexample: Option<Value>,
}

type CheckFn = fn(&Limits) -> Outcome;

const CHECKS: &[(&str, CheckFn)] = &[
    ("qseries", check_qseries),
    ("bott", check_bott),
    ("example", check_example),
    ("ext", check_ext),
    ("hpq", check_hpq),
    ("lcd", check_lcd),
    ("witness", check_witness),
    ("parity", check_parity),
    ("nondegeneracy", check_nondegeneracy),
    ("filtration", check_filtration),
];

pub fn suite_names() -> Vec<&'static str> {
    let mut names = vec!["all"];
    names.extend(CHECKS.iter().map(|(n, _)| *n));
    names
}

/// Runs the named suite (or `all`). Checks run concurrently; the report
/// lists them in declaration order.
pub fn run(suite: &str, limits: &Limits, timings: bool) -> Option<VerifyReport> {
    let selected: Vec<_> = CHECKS
        .iter()
        .filter(|(name, _)| suite == "all" || suite == *name)
        .collect();
    if selected.is_empty() {
        return None;
    }
    let checks: Vec<CheckReport> = selected
        .par_iter()
        .map(|(name, f)| {
            let start = Instant::now();
            let out = f(limits);
            CheckReport {
                name,
                range: out.range,
                passed: out.counterexample.is_none(),
                cases: out.cases,
                counterexample: out.counterexample,
                wall_ms: timings.then(|| start.elapsed().as_millis()),
            }
        })
        .collect();
    Some(VerifyReport {
        suite: suite.to_string(),
        passed: checks.iter().all(|c| c.passed),
        checks,
    })
}

fn error_value(e: loccoh_core::Error) -> Value {
    json!({ "error": e.to_string() })
}

fn check_qseries(l: &Limits) -> Outcome {
    let a_max = l.max_n.unwrap_or(12) as i64;
    let cases: Vec<(i64, i64, i64)> = (0..=a_max)
        .flat_map(|a| (0..=a).flat_map(move |b| [1, 2, 4, -4].map(|v| (a, b, v))))
        .collect();
    let counterexample = cases.par_iter().find_map_first(|&(a, b, v)| {
        let closed = gauss(a, b, v).ok()?;
        let enumerated = gauss_enum(a, b, v).ok()?;
        let mirrored = gauss(a, a - b, v).ok()?;
        let complement = LaurentPoly::from_terms(enumerate_box((a - b) as usize, b as u32).into_iter().map(|z| {
            let c = z.complement_in_box((a - b) as usize, b as u32).expect("in box");
            (v * c.size() as i64, 1)
        }));
        let bad = [
            ("enumeration", &enumerated),
            ("symmetry", &mirrored),
            ("complement", &complement),
        ]
        .into_iter()
        .find(|(_, other)| **other != closed)?;
        Some(json!({ "identity": bad.0, "a": a, "b": b, "v": v, "closed": closed.to_json(), "other": bad.1.to_json() }))
    });
    Outcome {
        range: format!("0 <= b <= a <= {a_max}, v in {{1,2,4,-4}}"),
        cases: cases.len() as u64,
        counterexample,
    }
}

fn check_bott(l: &Limits) -> Outcome {
    let n_max = l.max_n.unwrap_or(7);
    let units: Vec<(usize, usize, Partition)> = (1..=n_max)
        .flat_map(|n| (0..=n).flat_map(move |k| enumerate_box(n - k, k as u32 + 2).into_iter().map(move |b| (n, k, b))))
        .collect();
    let cases: u64 = units
        .iter()
        .map(|(n, k, _)| enumerate_dominant(*k, -(*n as i64) - 2, *n as i64 + 2).len() as u64)
        .sum();
    let counterexample = units.par_iter().find_map_first(|(n, k, beta)| bott_unit(*n, *k, beta));
    Outcome {
        range: format!("1 <= n <= {n_max}, 0 <= k <= n, beta in P(n-k, k+2), alpha entries in [-n-2, n+2]"),
        cases,
        counterexample,
    }
}

fn bott_unit(n: usize, k: usize, beta: &Partition) -> Option<Value> {
    let beta_w = beta.to_weight(n - k).ok()?;
    let trivial = match trivial_isotypic(beta, k, n) {
        Ok(iso) => iso.alpha,
        Err(e) => return Some(error_value(e)),
    };
    let wedges: Vec<(usize, DominantWeight)> = (n - k..=n)
        .filter(|&s| (0..n - k).all(|i| beta.get(i) as usize >= n - s))
        .filter_map(|s| Some((s, wedge_isotypic(beta, k, n, s).ok()?.alpha?)))
        .collect();
    let hit = |alpha: &DominantWeight, target: &DominantWeight, predicted: bool| -> Option<Value> {
        let result = match bott(alpha, &beta_w, n) {
            Ok(r) => r,
            Err(e) => return Some(error_value(e)),
        };
        let lands = matches!(&result, BottResult::Cohomology { weight, .. } if weight == target);
        let degree_ok = match &result {
            BottResult::Cohomology { degree, .. } => !lands || *degree as u64 == beta.size(),
            BottResult::Zero => true,
        };
        (lands != predicted || !degree_ok).then(|| {
            json!({ "n": n, "k": k, "alpha": alpha, "beta": beta, "target": target, "predicted": predicted, "bott": result })
        })
    };
    for alpha in enumerate_dominant(k, -(n as i64) - 2, n as i64 + 2) {
        if let Some(v) = hit(&alpha, &DominantWeight::zero(n), trivial.as_ref() == Some(&alpha)) {
            return Some(v);
        }
        for (s, wedge_alpha) in &wedges {
            if let Some(v) = hit(&alpha, &wedge_weight(*s, n), *wedge_alpha == alpha) {
                return Some(v);
            }
        }
    }
    None
}

fn nondegenerate_ext() -> Result<BTreeMap<DominantWeight, u64>, loccoh_core::Error> {
    let space = Space::symm(3)?;
    let ext = ext_jxp(&space, &Partition::new(vec![2, 2, 0])?, 1, 14)?;
    Ok(ext.degree(4))
}

fn check_example(_: &Limits) -> Outcome {
    let target = DominantWeight::new(vec![5, 5, 4]).expect("dominant");
    let counterexample = match nondegenerate_ext() {
        Err(e) => Some(error_value(e)),
        Ok(ext4) => {
            let exact = ext4.len() == 1 && ext4.get(&target) == Some(&1);
            let dim = dim_schur(&target);
            (!exact || dim != 3.into()).then(|| {
                let found: Vec<_> = ext4
                    .iter()
                    .map(|(w, c)| json!({ "weight": w, "multiplicity": c }))
                    .collect();
                json!({ "ext4": found, "dim": dim.to_string() })
            })
        }
    };
    Outcome {
        range: "symm(3), x = (2,2,0), p = 1, bound 14".into(),
        cases: 1,
        counterexample,
    }
}

fn witness_cases(max_skew: usize, max_symm: usize) -> Vec<(SimpleLabel, usize)> {
    let mut out = Vec::new();
    for n in 2..=max_skew {
        let space = Space::skew(n).expect("n >= 1");
        for p in 0..n / 2 {
            out.extend(SimpleLabel::all(space).expect("skew").into_iter().map(|l| (l, p)));
        }
    }
    for n in 1..=max_symm {
        let space = Space::symm(n).expect("n >= 1");
        for p in 0..n {
            out.extend(
                SimpleLabel::all(space)
                    .expect("symm")
                    .into_iter()
                    .filter(|l| l.s + p >= n)
                    .map(|l| (l, p)),
            );
        }
    }
    out
}

fn check_ext(l: &Limits) -> Outcome {
    let (skew_max, symm_max) = (l.max_n.unwrap_or(8), l.max_n.unwrap_or(7));
    let cases = witness_cases(skew_max, symm_max);
    let counterexample = cases.par_iter().find_map_first(|(label, p)| {
        let polys: Vec<_> = ExtRoute::ALL.iter().map(|&r| ext_witness(r, label, *p)).collect();
        let ok = polys.iter().all(|f| matches!((f, &polys[0]), (Ok(a), Ok(b)) if a == b));
        (!ok).then(|| {
            let shown: Vec<Value> = polys
                .iter()
                .map(|f| match f {
                    Ok(f) => f.to_json(),
                    Err(e) => json!(e.to_string()),
                })
                .collect();
            json!({ "label": label.to_string(), "space": label.space, "p": p, "closed": shown[0], "enum": shown[1], "bott": shown[2] })
        })
    });
    Outcome {
        range: format!("skew n <= {skew_max}, symm n <= {symm_max}, all valid p, s, j"),
        cases: cases.len() as u64,
        counterexample,
    }
}

fn check_hpq(l: &Limits) -> Outcome {
    let (skew_max, symm_max, general_max) = (l.max_n.unwrap_or(8), l.max_n.unwrap_or(7), l.max_n.unwrap_or(10));
    let mut cases: Vec<(Space, usize)> = Vec::new();
    for n in 1..=skew_max.max(symm_max) {
        for space in [Space::skew(n), Space::symm(n)].into_iter().flatten() {
            let limit = if matches!(space, Space::Skew { .. }) {
                skew_max
            } else {
                symm_max
            };
            if n <= limit {
                cases.extend((0..space.p_limit()).map(|p| (space, p)));
            }
        }
    }
    let mut zero_cases: Vec<Space> = Vec::new();
    for n in 1..=general_max {
        zero_cases.extend((n..=general_max).filter_map(|m| Space::general(m, n).ok()));
        zero_cases.extend(
            [Space::symm(n), Space::skew(n)]
                .into_iter()
                .flatten()
                .filter(|s| s.p_limit() > 0),
        );
    }
    let counterexample = cases
        .par_iter()
        .find_map_first(|(space, p)| {
            let closed = hpq(space, *p).ok()?;
            ExtRoute::ALL.iter().find_map(|&route| match hpq_from_ext(space, *p, route) {
                Ok(h) if h == closed => None,
                Ok(h) => Some(json!({ "space": space, "p": p, "route": route, "closed": closed.to_json(), "assembled": h.to_json() })),
                Err(e) => Some(json!({ "space": space, "p": p, "route": route, "error": e.to_string() })),
            })
        })
        .or_else(|| {
            zero_cases.par_iter().find_map_first(|space| {
                let h = hpq(space, 0).ok()?;
                let expected = LaurentPoly::q_pow(space.dim() as i64);
                let terms: Vec<_> = h.terms().collect();
                (terms != [(0, &expected)]).then(|| json!({ "space": space, "p": 0, "found": h.to_json() }))
            })
        });
    Outcome {
        range: format!(
            "assembly: skew n <= {skew_max}, symm n <= {symm_max}, all routes; p = 0: all spaces n, m <= {general_max}"
        ),
        cases: (cases.len() + zero_cases.len()) as u64,
        counterexample,
    }
}

fn is_hypersurface(space: &Space, p: usize) -> bool {
    match *space {
        Space::General { m, n } => m == n && p + 1 == n,
        Space::Skew { n } => n % 2 == 0 && p + 1 == n / 2,
        Space::Symm { n } => p + 1 == n,
    }
}

fn check_lcd(l: &Limits) -> Outcome {
    let n_max = l.max_n.unwrap_or(10);
    let mut cases: Vec<(Space, usize)> = Vec::new();
    for n in 1..=n_max {
        let mut spaces: Vec<Space> = (n..=n_max).filter_map(|m| Space::general(m, n).ok()).collect();
        spaces.extend([Space::skew(n), Space::symm(n)].into_iter().flatten());
        for space in spaces {
            cases.extend((0..space.p_limit()).map(|p| (space, p)));
        }
    }
    let counterexample = cases.par_iter().find_map_first(|(space, p)| {
        let (Ok(found), Ok(closed), Ok(top)) = (lcd(space, *p), lcd_closed(space, *p), top_module_support(space, *p))
        else {
            return Some(json!({ "space": space, "p": p, "error": "computation failed" }));
        };
        let odd_symm = matches!(space, Space::Symm { .. }) && p % 2 == 1;
        let expected_top = if odd_symm { 1 } else { 0 };
        let top_ok = if is_hypersurface(space, *p) {
            top.modules.contains(&expected_top)
        } else {
            top.unique() == Some(expected_top)
        };
        (found != closed || !top_ok)
            .then(|| json!({ "space": space, "p": p, "lcd": found, "closed_form": closed, "top_modules": top.modules }))
    });
    Outcome {
        range: format!("general m, n <= {n_max}; skew, symm n <= {n_max}; all valid p"),
        cases: cases.len() as u64,
        counterexample,
    }
}

fn check_witness(l: &Limits) -> Outcome {
    let n_max = l.max_n.unwrap_or(10);
    let spaces: Vec<Space> = (1..=n_max)
        .flat_map(|n| [Space::skew(n), Space::symm(n)])
        .flatten()
        .collect();
    let mut cases = 0u64;
    for s in &spaces {
        cases += (SimpleLabel::all(*s).expect("skew or symm").len() as u64).pow(2);
    }
    let counterexample = spaces.par_iter().find_map_first(|space| {
        let labels = SimpleLabel::all(*space).ok()?;
        labels.iter().find_map(|a| {
            let w = witness_weight(a);
            labels.iter().find_map(|b| {
                (b.contains(&w) != (a == b))
                    .then(|| json!({ "space": space, "witness_of": a.to_string(), "tested_against": b.to_string(), "weight": w }))
            })
        })
    });
    Outcome {
        range: format!("skew and symm n <= {n_max}, all label pairs"),
        cases,
        counterexample,
    }
}

fn check_parity(l: &Limits) -> Outcome {
    let n_max = l.max_n.unwrap_or(8);
    let cases = witness_cases(n_max, 0);
    let counterexample = cases.par_iter().find_map_first(|(label, p)| {
        let m = (label.space.n() / 2) as i64;
        ExtRoute::ALL.iter().find_map(|&route| {
            let f = ext_witness(route, label, *p).ok()?;
            let bad = !f.has_nonnegative_coefficients()
                || f.terms().any(|(e, _)| (e - (m - *p as i64)).rem_euclid(2) != 0);
            bad.then(|| json!({ "label": label.to_string(), "space": label.space, "p": p, "route": route, "poly": f.to_json() }))
        })
    });
    Outcome {
        range: format!("skew n <= {n_max}, all valid p, s, all routes"),
        cases: cases.len() as u64 * 3,
        counterexample,
    }
}

fn check_nondegeneracy(_: &Limits) -> Outcome {
    let target = DominantWeight::new(vec![5, 5, 4]).expect("dominant");
    let counterexample = match (nondegenerate_ext(), Space::symm(3).and_then(SimpleLabel::all)) {
        (Ok(ext4), Ok(labels)) => {
            let in_ext = ext4.contains_key(&target);
            let accepted: Vec<String> = labels
                .iter()
                .filter(|l| member_c(&target, l.s, l.flavor_or_default(), 3))
                .map(|l| l.to_string())
                .collect();
            (!in_ext || !accepted.is_empty() || labels.len() != 7)
                .then(|| json!({ "in_ext4": in_ext, "accepted_by": accepted, "labels": labels.len() }))
        }
        (Err(e), _) | (_, Err(e)) => Some(error_value(e)),
    };
    Outcome {
        range: "weight (5,5,4) against the 7 labels of symm(3)".into(),
        // the Ext^4 membership plus one rejection per label
        cases: 8,
        counterexample,
    }
}

fn check_filtration(l: &Limits) -> Outcome {
    let bound = l.bound.unwrap_or(10);
    let (symm_max, skew_max) = (l.max_n.unwrap_or(4), l.max_n.unwrap_or(6));
    let mut cases: Vec<(Space, usize)> = Vec::new();
    for n in 1..=symm_max {
        let s = Space::symm(n).expect("n >= 1");
        cases.extend((0..s.p_limit()).map(|p| (s, p)));
    }
    for n in 1..=skew_max {
        let s = Space::skew(n).expect("n >= 1");
        cases.extend((0..s.p_limit()).map(|p| (s, p)));
    }
    let counterexample = cases
        .par_iter()
        .find_map_first(|(space, p)| match filtration_check(space, *p, bound) {
            Ok(r) if r.passed => None,
            Ok(r) => Some(serde_json::to_value(r).expect("serializable")),
            Err(e) => Some(error_value(e)),
        });
    Outcome {
        range: format!("symm n <= {symm_max}, skew n <= {skew_max}, all valid p, bound {bound}"),
        cases: cases.len() as u64,
        counterexample,
    }
}
