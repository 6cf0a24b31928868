//! Polynomials over GF(p) for the mod-p irreducibility certificates.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::IntPoly;
use crate::error::{Error, Result};
use crate::field::{inv_mod, is_prime};

/// Dense polynomial over GF(p), lowest coefficient first, trimmed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct ModPoly {
    c: Vec<u64>,
    p: u64,
}

impl ModPoly {
    pub(crate) fn from_int(f: &IntPoly, p: u64) -> Self {
        let pb = BigInt::from(p);
        let c = f
            .coeffs()
            .iter()
            .map(|x| x.mod_floor(&pb).to_u64().expect("residue fits"))
            .collect();
        Self::new(c, p)
    }

    fn new(mut c: Vec<u64>, p: u64) -> Self {
        while c.last() == Some(&0) {
            c.pop();
        }
        Self { c, p }
    }

    fn one(p: u64) -> Self {
        Self::new(vec![1], p)
    }

    fn x(p: u64) -> Self {
        Self::new(vec![0, 1], p)
    }

    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub(crate) fn degree(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    fn is_one(&self) -> bool {
        self.c == [1]
    }

    fn mulmod(&self, a: u64, b: u64) -> u64 {
        (a as u128 * b as u128 % self.p as u128) as u64
    }

    fn monic(&self) -> Self {
        let Some(&lead) = self.c.last() else {
            return self.clone();
        };
        let inv = inv_mod(lead as i64, self.p as i64) as u64;
        Self::new(self.c.iter().map(|&x| self.mulmod(x, inv)).collect(), self.p)
    }

    fn sub(&self, other: &Self) -> Self {
        let len = self.c.len().max(other.c.len());
        let p = self.p;
        Self::new(
            (0..len)
                .map(|i| {
                    let a = self.c.get(i).copied().unwrap_or(0);
                    let b = other.c.get(i).copied().unwrap_or(0);
                    (a + p - b) % p
                })
                .collect(),
            p,
        )
    }

    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::new(vec![], self.p);
        }
        let mut out = vec![0u64; self.c.len() + other.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            for (j, &b) in other.c.iter().enumerate() {
                out[i + j] = (out[i + j] + self.mulmod(a, b)) % self.p;
            }
        }
        Self::new(out, self.p)
    }

    fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let p = self.p;
        let mut rem = self.c.clone();
        let dd = d.degree();
        let inv = inv_mod(*d.c.last().unwrap() as i64, p as i64) as u64;
        if rem.len() <= dd {
            return (Self::new(vec![], p), self.clone());
        }
        let mut quot = vec![0u64; rem.len() - dd];
        for top in (dd..rem.len()).rev() {
            let c = self.mulmod(rem[top], inv);
            if c == 0 {
                continue;
            }
            quot[top - dd] = c;
            for (i, &dc) in d.c.iter().enumerate() {
                let idx = top - dd + i;
                rem[idx] = (rem[idx] + p - self.mulmod(c, dc)) % p;
            }
        }
        (Self::new(quot, p), Self::new(rem, p))
    }

    fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    fn derivative(&self) -> Self {
        let p = self.p;
        Self::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| self.mulmod(c, i as u64 % p))
                .collect(),
            p,
        )
    }

    fn powmod(&self, mut e: u64, m: &Self) -> Self {
        let mut base = self.rem(m);
        let mut acc = Self::one(self.p).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        acc
    }

    /// `g` with `g(x)^p = self(x)`, valid when only powers of `x^p` occur.
    fn pth_root(&self) -> Self {
        let p = self.p as usize;
        Self::new(self.c.iter().step_by(p).copied().collect(), self.p)
    }

    /// Square-free decomposition: pairs `(factor, multiplicity)`.
    fn squarefree_factors(&self) -> Vec<(Self, usize)> {
        let f = self.monic();
        let mut out = Vec::new();
        if f.degree() == 0 {
            return out;
        }
        let d = f.derivative();
        if d.is_zero() {
            for (g, m) in f.pth_root().squarefree_factors() {
                out.push((g, m * self.p as usize));
            }
            return out;
        }
        let mut c = f.gcd(&d);
        let mut w = f.div_rem(&c).0;
        let mut i = 1;
        while !w.is_one() {
            let y = w.gcd(&c);
            let z = w.div_rem(&y).0;
            if z.degree() > 0 {
                out.push((z.monic(), i));
            }
            i += 1;
            w = y;
            c = c.div_rem(&w).0;
        }
        if c.degree() > 0 {
            for (g, m) in c.pth_root().squarefree_factors() {
                out.push((g, m * self.p as usize));
            }
        }
        out
    }

    /// Degrees of the irreducible factors of a square-free polynomial.
    fn distinct_degree(&self) -> Vec<usize> {
        let mut f = self.monic();
        let x = Self::x(self.p);
        let mut h = x.clone();
        let mut degrees = Vec::new();
        let mut d = 1;
        while f.degree() >= 2 * d {
            h = h.powmod(self.p, &f);
            let g = h.sub(&x).gcd(&f);
            if !g.is_one() {
                degrees.extend(std::iter::repeat(d).take(g.degree() / d));
                f = f.div_rem(&g).0;
                h = h.rem(&f);
            }
            d += 1;
        }
        if f.degree() > 0 {
            degrees.push(f.degree());
        }
        degrees
    }
}

/// Degrees, with multiplicity, of the irreducible factors of `f mod p`,
/// sorted ascending.
pub fn ddf_degrees(f: &IntPoly, p: u64) -> Result<Vec<usize>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let lead = f.leading_coeff().ok_or(Error::ZeroPolynomial)?;
    if (lead % BigInt::from(p)).is_zero() {
        return Err(Error::BadPrime(p));
    }
    let fp = ModPoly::from_int(f, p);
    let mut degrees = Vec::new();
    for (g, mult) in fp.squarefree_factors() {
        for d in g.distinct_degree() {
            degrees.extend(std::iter::repeat(d).take(mult));
        }
    }
    degrees.sort_unstable();
    Ok(degrees)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(s: &str) -> IntPoly {
        s.parse().unwrap()
    }

    /// Degrees of the irreducible factors by exhaustive search over monic
    /// polynomials, for tiny cases.
    fn brute_force_degrees(f: &IntPoly, p: u64) -> Vec<usize> {
        let mut g = ModPoly::from_int(f, p).monic();
        let mut out = Vec::new();
        let mut d = 1;
        while g.degree() > 0 {
            let mut found = false;
            for code in 0..p.pow(d as u32) {
                let mut c: Vec<u64> = (0..d).map(|i| code / p.pow(i as u32) % p).collect();
                c.push(1);
                let cand = ModPoly::new(c, p);
                let (q, r) = g.div_rem(&cand);
                if r.is_zero() {
                    out.push(d);
                    g = q;
                    found = true;
                    break;
                }
            }
            if !found {
                d += 1;
            }
        }
        out
    }

    #[test]
    fn small_examples() {
        assert_eq!(ddf_degrees(&poly("1 + q^2"), 5).unwrap(), vec![1, 1]);
        assert_eq!(ddf_degrees(&poly("1 + q^2"), 3).unwrap(), vec![2]);
        assert_eq!(ddf_degrees(&poly("1 + q + q^2"), 2).unwrap(), vec![2]);
        assert_eq!(ddf_degrees(&poly("1 + 5q"), 5), Err(Error::BadPrime(5)));
        assert_eq!(ddf_degrees(&poly("1 + q"), 4), Err(Error::NotPrime(4)));
    }

    #[test]
    fn roots_mod_5_of_q2_plus_1() {
        let roots: Vec<u64> = (0..5).filter(|x| (x * x + 1) % 5 == 0).collect();
        assert_eq!(roots, vec![2, 3]);
    }

    #[test]
    fn repeated_and_pth_power_factors() {
        // (q+1)^2 (q^2+1) mod 3
        let f = poly("1 + q").pow(2) * poly("1 + q^2");
        assert_eq!(ddf_degrees(&f, 3).unwrap(), vec![1, 1, 2]);
        // q^5 - 1 = (q - 1)^5 mod 5
        assert_eq!(ddf_degrees(&poly("-1 + q^5"), 5).unwrap(), vec![1; 5]);
        // (q^2 + 2)^5 (q + 3) mod 5
        let f = poly("2 + q^2").pow(5) * poly("3 + q");
        assert_eq!(ddf_degrees(&f, 5).unwrap(), [vec![1], vec![2; 5]].concat());
    }

    #[test]
    fn agrees_with_brute_force() {
        let mut seed = 7u64;
        let mut rnd = |m: i64| {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1);
            ((seed >> 33) as i64 % (2 * m + 1)) - m
        };
        for p in [2u64, 3, 5, 7] {
            for _ in 0..150 {
                let deg = 1 + (rnd(3).unsigned_abs() as usize);
                let mut c: Vec<i64> = (0..deg).map(|_| rnd(6)).collect();
                c.push(1);
                let f = IntPoly::from_i64s(&c);
                assert_eq!(ddf_degrees(&f, p).unwrap(), brute_force_degrees(&f, p), "{f} mod {p}");
            }
        }
    }
}
