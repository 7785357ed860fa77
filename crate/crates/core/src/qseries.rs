//! Exact Laurent polynomials in `q` and Gauss polynomials.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{out_of_range, Result};
use crate::partitions::enumerate_box;

/// An integer Laurent polynomial `sum c_e q^e` with no stored zero
/// coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// `coeff * q^exp`.
    pub fn monomial(exp: i64, coeff: impl Into<BigInt>) -> Self {
        let mut p = LaurentPoly::zero();
        p.add_term(exp, coeff.into());
        p
    }

    /// `q^exp`.
    pub fn q_pow(exp: i64) -> Self {
        Self::monomial(exp, 1)
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = LaurentPoly::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    pub fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(exp).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_default()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn top_degree(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn bottom_degree(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// The substitution `q -> q^v`.
    pub fn substitute(&self, v: i64) -> Self {
        LaurentPoly::from_terms(self.coeffs.iter().map(|(&e, c)| (e * v, c.clone())))
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    /// Exact quotient, or `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        let dtop = divisor.top_degree()?;
        let dbot = divisor.bottom_degree()?;
        let lead = divisor.coeff(dtop);
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero();
        // Any remaining quotient terms have exponents in
        // [rbot - dbot, rtop - dtop]; an empty range leaves a remainder.
        while let Some(rtop) = rem.top_degree() {
            let rbot = rem.bottom_degree()?;
            if rtop - dtop < rbot - dbot {
                return None;
            }
            let c = rem.coeff(rtop);
            if !(&c % &lead).is_zero() {
                return None;
            }
            let term = LaurentPoly::monomial(rtop - dtop, c / &lead);
            rem = &rem - &(&term * divisor);
            quot += &term;
        }
        Some(quot)
    }

    fn coeff_to_json(c: &BigInt) -> serde_json::Number {
        serde_json::from_str(&c.to_string()).expect("integer literal is a valid JSON number")
    }

    /// `[[exponent, coefficient], ...]` sorted by exponent.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.coeffs
                .iter()
                .map(|(&e, c)| {
                    serde_json::Value::Array(vec![
                        serde_json::Value::from(e),
                        serde_json::Value::Number(Self::coeff_to_json(c)),
                    ])
                })
                .collect(),
        )
    }

    pub fn from_json(value: &serde_json::Value) -> std::result::Result<Self, String> {
        let arr = value.as_array().ok_or("expected an array of [exp, coeff] pairs")?;
        let mut p = LaurentPoly::zero();
        for pair in arr {
            let pair = pair
                .as_array()
                .filter(|a| a.len() == 2)
                .ok_or("expected [exp, coeff]")?;
            let e = pair[0].as_i64().ok_or("exponent must be an integer")?;
            let c: BigInt = match &pair[1] {
                serde_json::Value::Number(n) => n
                    .to_string()
                    .parse()
                    .map_err(|_| format!("coefficient {n} is not an integer"))?,
                other => return Err(format!("coefficient {other} is not an integer")),
            };
            if p.coeffs.contains_key(&e) {
                return Err(format!("duplicate exponent {e}"));
            }
            p.add_term(e, c);
        }
        Ok(p)
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(deserializer)?;
        LaurentPoly::from_json(&v).map_err(D::Error::custom)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;

    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, c) in &rhs.coeffs {
            self.add_term(e, c.clone());
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&e1, c1) in &self.coeffs {
            for (&e2, c2) in &rhs.coeffs {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&e, c)) in self.coeffs.iter().enumerate() {
            let (neg, abs) = (c.is_negative(), c.abs());
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let unit = abs.is_one();
            match e {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !unit {
                        write!(f, "{abs}")?;
                    }
                    if e == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

fn one_minus_q_pow(k: i64) -> LaurentPoly {
    LaurentPoly::from_terms([(0, 1), (k, -1)])
}

/// The Gauss polynomial `{a choose b}` evaluated at `q^variable_power`.
///
/// Computed from the product formula by exact polynomial division; the
/// result vanishes when `b < 0` or `b > a`.
pub fn gauss(a: i64, b: i64, variable_power: i64) -> Result<LaurentPoly> {
    check_gauss_args(a, variable_power)?;
    if b < 0 || b > a {
        return Ok(LaurentPoly::zero());
    }
    let b = b.min(a - b);
    let mut num = LaurentPoly::one();
    let mut den = LaurentPoly::one();
    for i in 0..b {
        num = &num * &one_minus_q_pow(a - i);
        den = &den * &one_minus_q_pow(i + 1);
    }
    let quot = num
        .div_exact(&den)
        .expect("the q-binomial product formula divides exactly");
    Ok(quot.substitute(variable_power))
}

/// The Gauss polynomial as the generating function `sum q^{v|z|}` over
/// partitions `z` in the `(a-b) x b` box.
pub fn gauss_enum(a: i64, b: i64, variable_power: i64) -> Result<LaurentPoly> {
    check_gauss_args(a, variable_power)?;
    if b < 0 || b > a {
        return Err(out_of_range("b", b, format!("0 <= b <= a = {a}")));
    }
    Ok(LaurentPoly::from_terms(
        enumerate_box((a - b) as usize, b as u32)
            .into_iter()
            .map(|z| (variable_power * z.size() as i64, 1)),
    ))
}

fn check_gauss_args(a: i64, variable_power: i64) -> Result<()> {
    if variable_power == 0 {
        return Err(out_of_range("variable_power", 0, "any nonzero integer"));
    }
    if a < 0 {
        return Err(out_of_range("a", a, "a >= 0"));
    }
    Ok(())
}

/// Largest exponent with nonzero coefficient; `None` for the zero polynomial.
pub fn top_degree(f: &LaurentPoly) -> Option<i64> {
    f.top_degree()
}

/// Ordinary binomial coefficient `C(a, b)`, zero outside `0 <= b <= a`.
pub fn binomial(a: i64, b: i64) -> i64 {
    if b < 0 || a < 0 || b > a {
        return 0;
    }
    let b = b.min(a - b);
    (0..b).fold(1i64, |acc, i| acc * (a - i) / (i + 1))
}
