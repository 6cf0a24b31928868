//! Integer partitions and the Young-diagram operations the recursion needs.
//!
//! Cells are addressed `(row, col)`, both 1-based, rows counted top to
//! bottom and columns left to right. A removable cell in column `y` sits at
//! row `λ'_y`, the bottom of that column.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

/// Non-increasing sequence of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<usize>);

/// A corner of the Young diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RemovableCell {
    pub index: usize,
    pub row: usize,
    pub col: usize,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("zero part in {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts must be non-increasing: {parts:?}"
            )));
        }
        Ok(Self(parts))
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self(parts)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// The integer being partitioned.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn dual(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        Partition(
            (1..=width)
                .map(|i| self.0.iter().take_while(|&&p| p >= i).count())
                .collect(),
        )
    }

    /// One cell per distinct part value, ordered by increasing column.
    pub fn removable_cells(&self) -> Vec<RemovableCell> {
        let mut cells = Vec::new();
        // walking rows bottom-up visits columns in increasing order
        for row in (1..=self.0.len()).rev() {
            let part = self.0[row - 1];
            let is_last_of_value = row == self.0.len() || self.0[row] < part;
            if is_last_of_value {
                cells.push(RemovableCell {
                    index: cells.len(),
                    row,
                    col: part,
                });
            }
        }
        cells
    }

    pub fn remove_cell(&self, index: usize) -> Result<Partition> {
        let cells = self.removable_cells();
        let cell = cells.get(index).ok_or(Error::IndexOutOfRange {
            index,
            count: cells.len(),
        })?;
        let mut parts = self.0.clone();
        parts[cell.row - 1] -= 1;
        if parts[cell.row - 1] == 0 {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    /// Jordan type of a nilpotent `n x n` matrix from its rank sequence
    /// `(rank M, rank M^2, ..)`: block size `i` occurs
    /// `r_{i-1} - 2 r_i + r_{i+1}` times, with `r_0 = n` and `r_i = 0` past
    /// the end.
    pub fn jordan_type_from_ranks(ranks: &[usize], n: usize) -> Result<Partition> {
        let invalid = || Error::InvalidRankSequence {
            ranks: ranks.to_vec(),
            n,
        };
        let r = |i: usize| -> i64 {
            match i {
                0 => n as i64,
                _ => ranks.get(i - 1).copied().unwrap_or(0) as i64,
            }
        };
        let mut parts = Vec::new();
        let mut total = 0i64;
        for size in (1..=n.max(ranks.len() + 1)).rev() {
            let mult = r(size - 1) - 2 * r(size) + r(size + 1);
            if mult < 0 {
                return Err(invalid());
            }
            total += mult * size as i64;
            parts.extend(std::iter::repeat(size).take(mult as usize));
        }
        if total != n as i64 {
            return Err(invalid());
        }
        Ok(Partition(parts))
    }

    /// Dimension of the irreducible `S_n` representation, `n! / Π hooks`.
    pub fn hook_dimension(&self) -> BigUint {
        let dual = self.dual();
        let mut num = BigUint::one();
        for k in 2..=self.size() {
            num *= k;
        }
        let mut den = BigUint::one();
        for (i, &row_len) in self.0.iter().enumerate() {
            for j in 0..row_len {
                let arm = row_len - j - 1;
                let leg = dual.0[j] - i - 1;
                den *= arm + leg + 1;
            }
        }
        num / den
    }

    /// `λ'_i` with 1-based `i`; zero past the end.
    pub fn dual_part(&self, i: usize) -> usize {
        self.0.iter().take_while(|&&p| p >= i).count()
    }
}

/// All partitions of `n`, largest first in reverse-lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            cur.push(part);
            rec(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Reverse-lexicographic: `(7)` sorts before `(3,3,1)`.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        other.0.cmp(&self.0)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.0 {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(s.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl serde::Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
