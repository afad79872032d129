//! Partitions and Maya (characteristic) sequences.
//!
//! A partition is a weakly decreasing list of positive integers; it is the
//! Schur-basis label for Schubert classes. A Maya sequence describes a
//! Schubert cell of the index-`d` component of the Sato Grassmannian: a
//! strictly decreasing integer sequence `s_1 > s_2 > ...` that eventually
//! stabilizes to `s_n = -n + d`. Only the finite head that differs from the
//! stable tail is stored, and the head is normalized to be minimal on
//! construction. The two encodings are linked by `lambda_n = s_n + n - d`,
//! and the codimension of the cell is `|lambda|`.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize};

use crate::error::{Error, Result};

/// Weakly decreasing list of positive integers. Derived ordering is
/// lexicographic on the parts; canonical listings iterate it in reverse.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Partition> {
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::domain(format!(
                    "partition parts must be weakly decreasing, got {parts:?}"
                )));
            }
        }
        if parts.last() == Some(&0) {
            return Err(Error::domain("partition parts must be positive"));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Partition {
        Partition { parts: Vec::new() }
    }

    /// The column `(1^r)`; empty for `r = 0`.
    pub fn column(r: u32) -> Partition {
        Partition { parts: vec![1; r as usize] }
    }

    /// The row `(r)`; empty for `r = 0`.
    pub fn row(r: u32) -> Partition {
        if r == 0 {
            Partition::empty()
        } else {
            Partition { parts: vec![r] }
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `i`-th part, zero-based, 0 beyond the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Total size `|lambda|`.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Componentwise containment (Young diagram inclusion).
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len()
            && other
                .parts
                .iter()
                .enumerate()
                .all(|(i, &p)| p <= self.parts[i])
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0) as usize;
        let parts = (0..cols)
            .map(|c| self.parts.iter().filter(|&&p| p as usize > c).count() as u32)
            .collect();
        Partition { parts }
    }

    /// `Some(r)` when the shape is the column `(1^r)` (including `r = 0`).
    pub fn as_column(&self) -> Option<u32> {
        if self.parts.iter().all(|&p| p == 1) {
            Some(self.len() as u32)
        } else {
            None
        }
    }

    /// Fits in `rows` x `cols`?
    pub fn fits_in_box(&self, rows: usize, cols: u32) -> bool {
        self.len() <= rows && self.part(0) <= cols
    }

    /// Maya sequence of the cell labeled by this partition on the index-`d`
    /// component: `s_n = lambda_n - n + d` over the positive parts.
    pub fn to_maya(&self, d: i64) -> MayaSequence {
        let head = self
            .parts
            .iter()
            .enumerate()
            .map(|(i, &p)| p as i64 - (i as i64 + 1) + d)
            .collect();
        MayaSequence::new(d, head).expect("partition always yields a valid head")
    }

    /// All partitions of `n`, parts listed in descending lexicographic order.
    pub fn all_of(n: u32) -> Vec<Partition> {
        fn rec(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition { parts: prefix.clone() });
                return;
            }
            let hi = remaining.min(max_part);
            for p in (1..=hi).rev() {
                prefix.push(p);
                rec(remaining - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n.max(1), &mut Vec::new(), &mut out);
        if n == 0 {
            return vec![Partition::empty()];
        }
        out
    }

    /// All partitions inside a `rows` x `cols` box, the empty one included,
    /// ordered by size then descending lexicographic.
    pub fn all_in_box(rows: usize, cols: u32) -> Vec<Partition> {
        fn rec(rows_left: usize, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
            out.push(Partition { parts: prefix.clone() });
            if rows_left == 0 {
                return;
            }
            for p in (1..=max_part).rev() {
                prefix.push(p);
                rec(rows_left - 1, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(rows, cols, &mut Vec::new(), &mut out);
        out.sort_by(|a, b| a.size().cmp(&b.size()).then(b.parts.cmp(&a.parts)));
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;

    /// Parses the CLI form: comma-separated weakly decreasing positive parts;
    /// an empty string is the empty partition.
    fn from_str(s: &str) -> Result<Partition> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::parse(format!("bad partition part {tok:?}")))
            })
            .collect::<Result<Vec<u32>>>()?;
        Partition::new(parts)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(deserializer)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// Characteristic sequence of a Schubert cell: index `d` plus the minimal
/// strictly decreasing head before the sequence settles to `s_n = -n + d`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct MayaSequence {
    d: i64,
    head: Vec<i64>,
}

impl MayaSequence {
    /// Validates and normalizes: entries strictly decreasing, every
    /// `s_n >= -n + d` (no negative partition parts), trailing entries that
    /// already sit on the stable tail are stripped.
    pub fn new(d: i64, head: Vec<i64>) -> Result<MayaSequence> {
        for w in head.windows(2) {
            if w[0] <= w[1] {
                return Err(Error::domain(format!(
                    "maya head must be strictly decreasing, got {head:?}"
                )));
            }
        }
        for (i, &s) in head.iter().enumerate() {
            let n = i as i64 + 1;
            if s < -n + d {
                return Err(Error::domain(format!(
                    "maya entry s_{n} = {s} below the stable tail value {}",
                    -n + d
                )));
            }
        }
        let mut head = head;
        while let Some(&last) = head.last() {
            let n = head.len() as i64;
            if last == -n + d {
                head.pop();
            } else {
                break;
            }
        }
        Ok(MayaSequence { d, head })
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn head(&self) -> &[i64] {
        &self.head
    }

    /// `s_n` for any `n >= 1`, including the stable tail.
    pub fn entry(&self, n: usize) -> i64 {
        assert!(n >= 1, "maya entries are 1-indexed");
        self.head
            .get(n - 1)
            .copied()
            .unwrap_or(-(n as i64) + self.d)
    }

    /// Codimension of the cell: sum of `s_n + n - d` over the head.
    pub fn codimension(&self) -> u32 {
        self.head
            .iter()
            .enumerate()
            .map(|(i, &s)| (s + i as i64 + 1 - self.d) as u32)
            .sum()
    }

    pub fn to_partition(&self) -> Partition {
        let parts = self
            .head
            .iter()
            .enumerate()
            .map(|(i, &s)| (s + i as i64 + 1 - self.d) as u32)
            .collect();
        Partition::new(parts).expect("valid maya head yields a valid partition")
    }
}

impl fmt::Display for MayaSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d={}; head=(", self.d)?;
        for (i, s) in self.head.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, ")")
    }
}

impl<'de> Deserialize<'de> for MayaSequence {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            d: i64,
            head: Vec<i64>,
        }
        let raw = Raw::deserialize(deserializer)?;
        MayaSequence::new(raw.d, raw.head).map_err(serde::de::Error::custom)
    }
}
