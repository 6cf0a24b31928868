//! Rank sequences of strictly upper-triangular 7x7 matrices over a small
//! prime field, specialised for the census loop.

use super::basis::DIM;

const N2: usize = DIM * DIM;

/// Largest prime the kernel accepts: row sums of up to seven products must
/// stay below `2^32`.
pub(crate) const MAX_PRIME: u32 = 1 << 14;

/// Reduction modulo `p` by a precomputed 64-bit reciprocal (Lemire).
#[derive(Debug, Clone, Copy)]
pub(crate) struct Kernel {
    p: u32,
    m: u64,
}

impl Kernel {
    pub fn new(p: u32) -> Option<Self> {
        if !(2..MAX_PRIME).contains(&p) {
            return None;
        }
        Some(Self {
            p,
            m: u64::MAX / p as u64 + 1,
        })
    }

    #[inline(always)]
    pub fn red(&self, x: u32) -> u32 {
        let low = self.m.wrapping_mul(x as u64);
        ((low as u128 * self.p as u128) >> 64) as u32
    }

    /// `out = a * x` where `a = x^k`, so only `j >= i + k + 1` can be
    /// nonzero.
    #[inline]
    fn mul_upper(&self, a: &[u32; N2], x: &[u32; N2], k: usize, out: &mut [u32; N2]) {
        *out = [0; N2];
        for i in 0..DIM {
            for j in i + k + 1..DIM {
                let mut s = 0u32;
                for m in i + k..j {
                    s += a[i * DIM + m] * x[m * DIM + j];
                }
                out[i * DIM + j] = self.red(s);
            }
        }
    }

    /// Rank of `x^k` by fraction-free elimination on a copy of its nonzero
    /// block, rows `0..7-k` and columns `k..7`.
    #[inline]
    fn rank(&self, src: &[u32; N2], k: usize) -> usize {
        let p = self.p;
        let rows = DIM - k;
        let mut m = [0u32; N2];
        for i in 0..rows {
            m[i * DIM..i * DIM + rows].copy_from_slice(&src[i * DIM + k..i * DIM + DIM]);
        }
        let mut rank = 0;
        for col in 0..rows {
            let Some(piv) = (rank..rows).find(|&r| m[r * DIM + col] != 0) else {
                continue;
            };
            if piv != rank {
                for j in col..rows {
                    m.swap(piv * DIM + j, rank * DIM + j);
                }
            }
            let pv = m[rank * DIM + col];
            for r in rank + 1..rows {
                let v = m[r * DIM + col];
                if v == 0 {
                    continue;
                }
                let nv = p - v;
                for j in col..rows {
                    let t = pv * m[r * DIM + j] + nv * m[rank * DIM + j];
                    m[r * DIM + j] = self.red(t);
                }
            }
            rank += 1;
        }
        rank
    }

    /// `(rank X, .., rank X^6)`; the caller guarantees `X` is strictly upper
    /// triangular with entries reduced mod `p`.
    pub fn rank_sequence(&self, x: &[u32; N2], out: &mut [usize; 6]) {
        *out = [0; 6];
        let mut power = *x;
        let mut next = [0u32; N2];
        for k in 0..6 {
            let r = self.rank(&power, k + 1);
            out[k] = r;
            if r == 0 || k == 5 {
                return;
            }
            self.mul_upper(&power, x, k + 1, &mut next);
            std::mem::swap(&mut power, &mut next);
        }
    }
}
