//! The three matrix spaces acted on by the general linear group.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{out_of_range, Error, Result};

/// A space of matrices with its natural `GL` action.
///
/// `General { m, n }` is the space of `m x n` matrices (`m >= n`), `Skew { n }`
/// the skew-symmetric and `Symm { n }` the symmetric `n x n` matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Space {
    General { m: usize, n: usize },
    Skew { n: usize },
    Symm { n: usize },
}

impl Space {
    pub fn general(m: usize, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(out_of_range("n", 0, "n >= 1"));
        }
        if m < n {
            return Err(out_of_range("m", m as i64, format!("m >= n = {n}")));
        }
        Ok(Space::General { m, n })
    }

    pub fn skew(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(out_of_range("n", 0, "n >= 1"));
        }
        Ok(Space::Skew { n })
    }

    pub fn symm(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(out_of_range("n", 0, "n >= 1"));
        }
        Ok(Space::Symm { n })
    }

    /// Rank of the acting `GL_n`: the number of columns.
    pub fn n(&self) -> usize {
        match *self {
            Space::General { n, .. } | Space::Skew { n } | Space::Symm { n } => n,
        }
    }

    /// `floor(n/2)`, the maximal Pfaffian rank index.
    pub fn half(&self) -> usize {
        self.n() / 2
    }

    /// Dimension of the space as a complex vector space.
    pub fn dim(&self) -> usize {
        match *self {
            Space::General { m, n } => m * n,
            Space::Skew { n } => n * (n.saturating_sub(1)) / 2,
            Space::Symm { n } => n * (n + 1) / 2,
        }
    }

    /// Exclusive upper bound on the rank index `p` of the orbit closures `Y_p`
    /// whose local cohomology is computed.
    pub fn p_limit(&self) -> usize {
        match *self {
            Space::General { n, .. } | Space::Symm { n } => n,
            Space::Skew { n } => n / 2,
        }
    }

    pub fn check_p(&self, p: usize) -> Result<()> {
        let limit = self.p_limit();
        if p >= limit {
            return Err(out_of_range("p", p as i64, format!("0 <= p < {limit} for {self}")));
        }
        Ok(())
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Space::General { .. } => "general",
            Space::Skew { .. } => "skew",
            Space::Symm { .. } => "symm",
        }
    }

    pub(crate) fn require_skew_or_symm(&self) -> Result<()> {
        match self {
            Space::General { .. } => Err(Error::UnsupportedSpace(self.to_string())),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Space::General { m, n } => write!(f, "general({m}x{n})"),
            Space::Skew { n } => write!(f, "skew({n})"),
            Space::Symm { n } => write!(f, "symm({n})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions() {
        assert_eq!(Space::general(4, 3).unwrap().dim(), 12);
        assert_eq!(Space::skew(5).unwrap().dim(), 10);
        assert_eq!(Space::symm(3).unwrap().dim(), 6);
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(Space::general(2, 3).is_err());
        assert!(Space::symm(0).is_err());
        assert!(Space::skew(4).unwrap().check_p(2).is_err());
        assert!(Space::skew(4).unwrap().check_p(1).is_ok());
    }

    #[test]
    fn json_shape() {
        let s = serde_json::to_string(&Space::Symm { n: 3 }).unwrap();
        assert_eq!(s, r#"{"kind":"symm","n":3}"#);
    }
}
