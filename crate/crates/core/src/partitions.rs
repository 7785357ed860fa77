//! Partitions, dominant weights, and the shape transforms used throughout.
//!
//! A [`Partition`] is a non-increasing sequence of non-negative integers with
//! trailing zeros stripped, so `(2,1,0)` and `(2,1)` compare equal. A
//! [`DominantWeight`] is a non-increasing integer sequence carrying an explicit
//! rank, since padding by zeros changes the representation it names.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

/// Shape transforms `z -> 2z` and `z -> z^(2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Transform {
    /// `(z1, z2, ...) -> (2 z1, 2 z2, ...)`
    Doubled,
    /// `(z1, z2, ...) -> (z1, z1, z2, z2, ...)`
    Duplicated,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDominant(parts.iter().map(|&x| x as i64).collect()));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from signed entries, rejecting negative ones.
    pub fn from_signed(entries: &[i64]) -> Result<Self> {
        if entries.iter().any(|&x| x < 0) {
            return Err(Error::NotPartition(entries.to_vec()));
        }
        Partition::new(entries.iter().map(|&x| x as u32).collect())
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The non-zero parts.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of non-zero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn get(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn first(&self) -> u32 {
        self.get(0)
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&x| x as u64).sum()
    }

    /// The parts padded with zeros to exactly `n` entries.
    pub fn padded(&self, n: usize) -> Result<Vec<u32>> {
        if self.len() > n {
            return Err(Error::RankMismatch {
                what: "partition length",
                expected: n,
                found: self.len(),
            });
        }
        let mut v = self.parts.clone();
        v.resize(n, 0);
        Ok(v)
    }

    /// The partition as a dominant weight of rank `n`.
    pub fn to_weight(&self, n: usize) -> Result<DominantWeight> {
        let v = self.padded(n)?;
        Ok(DominantWeight {
            entries: v.into_iter().map(i64::from).collect(),
        })
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.first();
        let parts = (1..=width)
            .map(|i| self.parts.iter().filter(|&&z| z >= i).count() as u32)
            .collect();
        Partition { parts }
    }

    pub fn transform(&self, kind: Transform) -> Partition {
        match kind {
            Transform::Doubled => self.doubled(),
            Transform::Duplicated => self.duplicated(),
        }
    }

    pub fn doubled(&self) -> Partition {
        Partition {
            parts: self.parts.iter().map(|&z| 2 * z).collect(),
        }
    }

    pub fn duplicated(&self) -> Partition {
        Partition {
            parts: self.parts.iter().flat_map(|&z| [z, z]).collect(),
        }
    }

    pub fn fits_box(&self, rows: usize, width: u32) -> bool {
        self.len() <= rows && self.first() <= width
    }

    /// Complement of the Young diagram inside the `rows x width` rectangle,
    /// rotated so the result is again a partition.
    pub fn complement_in_box(&self, rows: usize, width: u32) -> Result<Partition> {
        if !self.fits_box(rows, width) {
            return Err(Error::OutsideBox {
                partition: self.parts.clone(),
                rows,
                width,
            });
        }
        let parts = (0..rows).map(|i| width - self.get(rows - 1 - i)).collect();
        Partition::new(parts)
    }

    /// Componentwise `self_i >= other_i`, padding with zeros.
    pub fn dominance_ge(&self, other: &Partition) -> bool {
        (0..self.len().max(other.len())).all(|i| self.get(i) >= other.get(i))
    }

    /// Componentwise sum.
    pub fn plus(&self, other: &Partition) -> Partition {
        let len = self.len().max(other.len());
        Partition {
            parts: (0..len).map(|i| self.get(i) + other.get(i)).collect(),
        }
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(z: Partition) -> Self {
        z.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_seq(f, self.parts.iter())
    }
}

/// `dominance_ge(y, z)`: `y_i >= z_i` for all `i`.
pub fn dominance_ge(y: &Partition, z: &Partition) -> bool {
    y.dominance_ge(z)
}

/// Every partition with at most `rows` parts, each at most `width`, in
/// lexicographically descending order. There are `C(rows + width, rows)`.
pub fn enumerate_box(rows: usize, width: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(rows);
    box_rec(rows, width, &mut cur, &mut out);
    out
}

fn box_rec(rows: usize, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if cur.len() == rows || cap == 0 {
        out.push(Partition::new(cur.clone()).expect("non-increasing by construction"));
        return;
    }
    for v in (0..=cap).rev() {
        cur.push(v);
        if v == 0 {
            out.push(Partition::new(cur.clone()).expect("non-increasing by construction"));
        } else {
            box_rec(rows, v, cur, out);
        }
        cur.pop();
    }
}

/// Every partition with at most `rows` parts and total size at most
/// `max_size`, in lexicographically descending order.
pub fn enumerate_bounded_size(rows: usize, max_size: u64) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(rows);
    let cap = u32::try_from(max_size).unwrap_or(u32::MAX);
    size_rec(rows, cap, max_size, &mut cur, &mut out);
    out
}

fn size_rec(rows: usize, cap: u32, budget: u64, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if cur.len() == rows {
        out.push(Partition::new(cur.clone()).expect("non-increasing by construction"));
        return;
    }
    let top = cap.min(u32::try_from(budget).unwrap_or(u32::MAX));
    for v in (0..=top).rev() {
        if v == 0 {
            out.push(Partition::new(cur.clone()).expect("non-increasing by construction"));
        } else {
            cur.push(v);
            size_rec(rows, v, budget - v as u64, cur, out);
            cur.pop();
        }
    }
}

/// A non-increasing integer sequence of fixed rank `n`, labelling the
/// irreducible `GL_n` representation `S_lambda`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct DominantWeight {
    entries: Vec<i64>,
}

impl DominantWeight {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDominant(entries));
        }
        Ok(DominantWeight { entries })
    }

    /// `(c, c, ..., c)` of rank `n`.
    pub fn constant(c: i64, n: usize) -> Self {
        DominantWeight { entries: vec![c; n] }
    }

    pub fn zero(n: usize) -> Self {
        Self::constant(0, n)
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn size(&self) -> i64 {
        self.entries.iter().sum()
    }

    /// Entry `i` (1-based), matching the usual `lambda_i` indexing.
    pub fn at(&self, i: usize) -> i64 {
        self.entries[i - 1]
    }

    /// `dual(lambda)_i = -lambda_{n+1-i}`.
    pub fn dual(&self) -> DominantWeight {
        DominantWeight {
            entries: self.entries.iter().rev().map(|&x| -x).collect(),
        }
    }

    /// Adds `c` to every entry (tensoring with `det^c`).
    pub fn shifted(&self, c: i64) -> DominantWeight {
        DominantWeight {
            entries: self.entries.iter().map(|&x| x + c).collect(),
        }
    }

    /// Componentwise sum with a weight of the same rank.
    pub fn plus(&self, other: &DominantWeight) -> Result<DominantWeight> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch {
                what: "weight sum",
                expected: self.rank(),
                found: other.rank(),
            });
        }
        Ok(DominantWeight {
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn is_partition(&self) -> bool {
        self.entries.last().is_none_or(|&x| x >= 0)
    }

    pub fn to_partition(&self) -> Result<Partition> {
        Partition::from_signed(&self.entries)
    }
}

impl TryFrom<Vec<i64>> for DominantWeight {
    type Error = Error;

    fn try_from(entries: Vec<i64>) -> Result<Self> {
        DominantWeight::new(entries)
    }
}

impl From<DominantWeight> for Vec<i64> {
    fn from(w: DominantWeight) -> Self {
        w.entries
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_seq(f, self.entries.iter())
    }
}

fn write_seq<T: fmt::Display>(f: &mut fmt::Formatter<'_>, it: impl Iterator<Item = T>) -> fmt::Result {
    write!(f, "(")?;
    for (i, x) in it.enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, ")")
}

/// Every dominant weight of rank `rank` with entries in `[lo, hi]`, in
/// lexicographically descending order.
pub fn enumerate_dominant(rank: usize, lo: i64, hi: i64) -> Vec<DominantWeight> {
    enumerate_dominant_pruned(rank, lo, hi, |_| true)
}

/// Like [`enumerate_dominant`], but abandons any prefix rejected by `keep`.
///
/// `keep` sees each prefix as it grows; it must only reject prefixes that
/// cannot be extended to an accepted weight.
pub fn enumerate_dominant_pruned<F>(rank: usize, lo: i64, hi: i64, keep: F) -> Vec<DominantWeight>
where
    F: Fn(&[i64]) -> bool,
{
    let mut out = Vec::new();
    if lo > hi {
        return out;
    }
    let mut cur = Vec::with_capacity(rank);
    dominant_rec(rank, lo, hi, &keep, &mut cur, &mut out);
    out
}

fn dominant_rec<F>(rank: usize, lo: i64, cap: i64, keep: &F, cur: &mut Vec<i64>, out: &mut Vec<DominantWeight>)
where
    F: Fn(&[i64]) -> bool,
{
    if cur.len() == rank {
        out.push(DominantWeight { entries: cur.clone() });
        return;
    }
    for v in (lo..=cap).rev() {
        cur.push(v);
        if keep(cur) {
            dominant_rec(rank, lo, v, keep, cur, out);
        }
        cur.pop();
    }
}

/// `dual(lambda)`.
pub fn dual(lambda: &DominantWeight) -> DominantWeight {
    lambda.dual()
}

/// `transform(z, kind)`.
pub fn transform(z: &Partition, kind: Transform) -> Partition {
    z.transform(kind)
}
