//! Integer partitions in canonical form: weakly decreasing, strictly positive
//! parts, no trailing zeros.
//!
//! Adjacency and translation are both computed on column heights (the
//! conjugate), where a unit transfer is a `+1/-1` pair and a Ferrers
//! translation is plain coordinatewise addition.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u32>,
    size: u32,
}

impl Partition {
    /// Validates `parts` as a canonical partition.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if let Some(reason) = canonical_violation(&parts) {
            return Err(Error::PartitionLiteral {
                literal: render(&parts),
                reason: reason.to_string(),
            });
        }
        Ok(Self::from_canonical(parts))
    }

    /// Sorts into weakly decreasing order and drops zero parts.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::from_canonical(parts)
    }

    pub(crate) fn from_canonical(parts: Vec<u32>) -> Self {
        debug_assert!(canonical_violation(&parts).is_none(), "{parts:?}");
        let size = parts.iter().sum();
        Partition { parts, size }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// The one-row partition `(k)`; empty for `k = 0`.
    pub fn row(k: u32) -> Self {
        if k == 0 {
            Self::empty()
        } else {
            Self::from_canonical(vec![k])
        }
    }

    /// The one-column partition `(1^k)`.
    pub fn column(k: u32) -> Self {
        Self::from_canonical(vec![1; k as usize])
    }

    /// `rows` parts, each equal to `width`.
    pub fn rectangle(rows: u32, width: u32) -> Self {
        if width == 0 {
            return Self::empty();
        }
        Self::from_canonical(vec![width; rows as usize])
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Total number of cells.
    pub fn size(&self) -> u32 {
        self.size
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn largest_part(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Column heights `λ'_1 ≥ λ'_2 ≥ …`, i.e. the parts of the conjugate.
    pub fn columns(&self) -> Vec<u32> {
        columns_of(&self.parts)
    }

    pub fn conjugate(&self) -> Partition {
        Self::from_canonical(self.columns())
    }

    pub fn is_self_conjugate(&self) -> bool {
        self.columns() == self.parts
    }

    /// All parts equal. The empty partition counts as a (degenerate) rectangle.
    pub fn is_rectangle(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] == w[1])
    }
}

fn canonical_violation(parts: &[u32]) -> Option<&'static str> {
    if parts.contains(&0) {
        return Some("parts must be positive");
    }
    if parts.windows(2).any(|w| w[0] < w[1]) {
        return Some("parts must be weakly decreasing");
    }
    None
}

/// Conjugate of a weakly decreasing sequence (trailing zeros allowed).
fn columns_of(parts: &[u32]) -> Vec<u32> {
    let width = parts.first().copied().unwrap_or(0) as usize;
    let mut cols = vec![0u32; width];
    for &p in parts {
        for c in &mut cols[..p as usize] {
            *c += 1;
        }
    }
    cols
}

fn render(parts: &[u32]) -> String {
    let mut s = String::new();
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        s.push_str(&p.to_string());
    }
    s
}

impl fmt::Display for Partition {
    /// The partition literal, e.g. `4,2,1,1`; the empty partition renders as "".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(&self.parts))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Ok(Partition::empty());
        }
        let bad = |reason: &str| Error::PartitionLiteral {
            literal: s.to_string(),
            reason: reason.to_string(),
        };
        let parts = trimmed
            .split(',')
            .map(|tok| tok.trim().parse::<u32>().map_err(|e| bad(&e.to_string())))
            .collect::<Result<Vec<_>>>()?;
        if let Some(reason) = canonical_violation(&parts) {
            return Err(bad(reason));
        }
        Ok(Partition::from_canonical(parts))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Iterator over the partitions of `n` in descending lexicographic order.
#[derive(Debug, Clone)]
pub struct Partitions {
    next: Option<Vec<u32>>,
}

impl Partitions {
    pub fn new(n: u32) -> Self {
        let first = if n == 0 { Vec::new() } else { vec![n] };
        Partitions { next: Some(first) }
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        // Successor: lower the last part exceeding 1, then refill greedily.
        if let Some(k) = current.iter().rposition(|&p| p > 1) {
            let mut succ = current[..k].to_vec();
            let v = current[k] - 1;
            let mut rest = (current.len() - k) as u32;
            succ.push(v);
            while rest > 0 {
                let p = rest.min(v);
                succ.push(p);
                rest -= p;
            }
            self.next = Some(succ);
        }
        Some(Partition::from_canonical(current))
    }
}

/// Every partition of `n`, each exactly once, in descending lexicographic
/// order. The list position is the vertex id used throughout the crate.
pub fn enumerate_partitions(n: u32, cap: u32) -> Result<Vec<Partition>> {
    crate::Caps::check("partition size n =", n, cap)?;
    Ok(Partitions::new(n).collect())
}

pub fn conjugate(lambda: &Partition) -> Partition {
    lambda.conjugate()
}

/// `Σ_j |λ'_j − μ'_j|`, with the shorter column vector padded by zeros.
pub fn l1_conjugate_distance(lambda: &Partition, mu: &Partition) -> Result<u32> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch {
            left: lambda.size(),
            right: mu.size(),
        });
    }
    Ok(padded_l1(&lambda.columns(), &mu.columns()))
}

pub(crate) fn padded_l1(a: &[u32], b: &[u32]) -> u32 {
    let len = a.len().max(b.len());
    (0..len)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            x.abs_diff(y)
        })
        .sum()
}

/// Adjacency in `G_n`: the two partitions differ by one unit transfer.
pub fn is_adjacent(lambda: &Partition, mu: &Partition) -> Result<bool> {
    Ok(l1_conjugate_distance(lambda, mu)? == 2)
}

/// The Ferrers translation `T_τ`: the partition whose conjugate is `λ' + τ'`.
pub fn ferrers_translate(lambda: &Partition, tau: &Partition) -> Partition {
    let mut cols = lambda.columns();
    let extra = tau.columns();
    if extra.len() > cols.len() {
        cols.resize(extra.len(), 0);
    }
    for (c, e) in cols.iter_mut().zip(&extra) {
        *c += e;
    }
    Partition::from_canonical(columns_of(&cols))
}

/// `R_k = T_(k)`: inserts a part of size `k`.
pub fn row_growth(lambda: &Partition, k: u32) -> Partition {
    ferrers_translate(lambda, &Partition::row(k))
}

/// `C_k = T_(1^k)`: appends `k` parts of size 1.
pub fn column_growth(lambda: &Partition, k: u32) -> Partition {
    ferrers_translate(lambda, &Partition::column(k))
}

/// All partitions reachable from `lambda` by one unit transfer, sorted and
/// deduplicated.
///
/// Transfers are taken from the last part of each run of equal values to the
/// first part of each run (including one fresh zero part), so the result is
/// already sorted and needs no reordering.
pub(crate) fn unit_transfers(lambda: &Partition) -> Vec<Partition> {
    let parts = lambda.parts();
    let mut padded = parts.to_vec();
    padded.push(0);

    let mut run_first = Vec::new();
    let mut run_last = Vec::new();
    for i in 0..padded.len() {
        if i == 0 || padded[i - 1] != padded[i] {
            run_first.push(i);
        }
        if i + 1 == padded.len() || padded[i + 1] != padded[i] {
            run_last.push(i);
        }
    }

    let mut out = Vec::new();
    for &src in &run_last {
        let v = padded[src];
        if v == 0 {
            continue;
        }
        for &dst in &run_first {
            let w = padded[dst];
            // v -> v-1 and w -> w+1 with w == v-1 only swaps two values.
            if dst == src || w + 1 == v {
                continue;
            }
            let mut next = padded.clone();
            next[src] -= 1;
            next[dst] += 1;
            while next.last() == Some(&0) {
                next.pop();
            }
            out.push(Partition::from_canonical(next));
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}
