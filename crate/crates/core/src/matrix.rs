//! Dense square matrices over a [`FieldCtx`].

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Elem, FieldCtx};

/// Dense `n x n` matrix, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct FMatrix<'f> {
    n: usize,
    data: Vec<Elem>,
    ctx: &'f FieldCtx,
}

impl fmt::Debug for FMatrix<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FMatrix over GF({}) {}x{}", self.ctx.order(), self.n, self.n)?;
        for row in self.data.chunks(self.n.max(1)) {
            writeln!(f, "  {row:?}")?;
        }
        Ok(())
    }
}

impl<'f> FMatrix<'f> {
    pub fn zero(ctx: &'f FieldCtx, n: usize) -> Self {
        Self {
            n,
            data: vec![0; n * n],
            ctx,
        }
    }

    pub fn identity(ctx: &'f FieldCtx, n: usize) -> Self {
        let mut m = Self::zero(ctx, n);
        for i in 0..n {
            m.data[i * n + i] = ctx.one();
        }
        m
    }

    /// Builds a matrix from rows of canonical element encodings.
    ///
    /// # Panics
    /// If the rows are not square or an entry is outside the field.
    pub fn from_rows(ctx: &'f FieldCtx, rows: &[Vec<Elem>]) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            assert_eq!(row.len(), n, "matrix must be square");
            assert!(row.iter().all(|&x| x < ctx.order()), "entry outside field");
            data.extend_from_slice(row);
        }
        Self { n, data, ctx }
    }

    /// Builds a matrix from integer entries mapped into the prime subfield.
    pub fn from_i64_rows(ctx: &'f FieldCtx, rows: &[Vec<i64>]) -> Self {
        let converted: Vec<Vec<Elem>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| ctx.from_i64(x)).collect())
            .collect();
        Self::from_rows(ctx, &converted)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn ctx(&self) -> &'f FieldCtx {
        self.ctx
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Elem {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Elem) {
        self.data[i * self.n + j] = v;
    }

    pub fn as_slice(&self) -> &[Elem] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// Resets every entry to zero, keeping the allocation.
    pub fn clear(&mut self) {
        self.data.fill(0);
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero(self.ctx, self.n);
        self.mul_into(rhs, &mut out);
        out
    }

    /// `out = self * rhs` without allocating.
    pub fn mul_into(&self, rhs: &Self, out: &mut Self) {
        let n = self.n;
        assert_eq!(rhs.n, n);
        assert_eq!(out.n, n);
        let ctx = self.ctx;
        if ctx.is_prime_field() && ctx.order() < (1 << 16) {
            let p = ctx.order() as u64;
            let mut acc = [0u64; 64];
            let acc = if n <= 64 {
                &mut acc[..n]
            } else {
                return self.mul_into_generic(rhs, out);
            };
            for i in 0..n {
                acc.fill(0);
                let row = &self.data[i * n..(i + 1) * n];
                for (k, &a) in row.iter().enumerate() {
                    if a == 0 {
                        continue;
                    }
                    let rrow = &rhs.data[k * n..(k + 1) * n];
                    for (slot, &b) in acc.iter_mut().zip(rrow) {
                        *slot += a as u64 * b as u64;
                    }
                }
                for (o, &s) in out.data[i * n..(i + 1) * n].iter_mut().zip(acc.iter()) {
                    *o = (s % p) as Elem;
                }
            }
        } else {
            self.mul_into_generic(rhs, out);
        }
    }

    fn mul_into_generic(&self, rhs: &Self, out: &mut Self) {
        let n = self.n;
        let ctx = self.ctx;
        out.clear();
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.data[k * n + j];
                    if b != 0 {
                        let idx = i * n + j;
                        out.data[idx] = ctx.add(out.data[idx], ctx.mul(a, b));
                    }
                }
            }
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::identity(self.ctx, self.n);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn rank(&self) -> usize {
        let mut scratch = Vec::new();
        self.rank_with(&mut scratch)
    }

    /// Rank by fraction-free forward elimination with row pivoting: a row
    /// below the pivot is replaced by `pivot * row - entry * pivot_row`, so no
    /// field inverses are needed. `scratch` is reused across calls.
    pub fn rank_with(&self, scratch: &mut Vec<Elem>) -> usize {
        let n = self.n;
        scratch.clear();
        scratch.extend_from_slice(&self.data);
        let m = scratch.as_mut_slice();
        let ctx = self.ctx;
        let fast = ctx.is_prime_field();
        let p = ctx.order() as u64;
        let mut rank = 0;
        for col in 0..n {
            let Some(piv) = (rank..n).find(|&r| m[r * n + col] != 0) else {
                continue;
            };
            if piv != rank {
                for j in 0..n {
                    m.swap(piv * n + j, rank * n + j);
                }
            }
            let pv = m[rank * n + col];
            for r in rank + 1..n {
                let v = m[r * n + col];
                if v == 0 {
                    continue;
                }
                for j in col..n {
                    let x = m[r * n + j];
                    let y = m[rank * n + j];
                    m[r * n + j] = if fast {
                        ((pv as u64 * x as u64 + (p - v as u64) * y as u64) % p) as Elem
                    } else {
                        ctx.sub(ctx.mul(pv, x), ctx.mul(v, y))
                    };
                }
            }
            rank += 1;
            if rank == n {
                break;
            }
        }
        rank
    }

    /// `(rank M, rank M^2, .., rank M^{n-1})` for nilpotent `M`.
    pub fn rank_sequence(&self) -> Result<Vec<usize>> {
        let mut ws = RankWorkspace::new(self.ctx, self.n);
        let mut out = Vec::with_capacity(self.n.saturating_sub(1));
        self.rank_sequence_into(&mut ws, &mut out)?;
        Ok(out)
    }

    /// Allocation-free variant of [`rank_sequence`](Self::rank_sequence) for
    /// census loops.
    pub fn rank_sequence_into(
        &self,
        ws: &mut RankWorkspace<'f>,
        out: &mut Vec<usize>,
    ) -> Result<()> {
        let n = self.n;
        out.clear();
        if n == 0 {
            return Ok(());
        }
        ws.power.data.copy_from_slice(&self.data);
        for _ in 1..n {
            let r = ws.power.rank_with(&mut ws.scratch);
            out.push(r);
            if r == 0 {
                out.resize(n - 1, 0);
                return Ok(());
            }
            ws.power.mul_into(self, &mut ws.next);
            std::mem::swap(&mut ws.power, &mut ws.next);
        }
        // ws.power now holds M^n
        if ws.power.is_zero() {
            Ok(())
        } else {
            Err(Error::NotNilpotent)
        }
    }
}

/// Reusable buffers for [`FMatrix::rank_sequence_into`].
pub struct RankWorkspace<'f> {
    power: FMatrix<'f>,
    next: FMatrix<'f>,
    scratch: Vec<Elem>,
}

impl<'f> RankWorkspace<'f> {
    pub fn new(ctx: &'f FieldCtx, n: usize) -> Self {
        Self {
            power: FMatrix::zero(ctx, n),
            next: FMatrix::zero(ctx, n),
            scratch: Vec::with_capacity(n * n),
        }
    }
}
