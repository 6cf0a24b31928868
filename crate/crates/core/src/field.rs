//! Finite fields GF(p^k) with elements stored as their canonical integer
//! encoding.
//!
//! An element of GF(p) is its residue in `0..p`. An element of GF(p^k) is the
//! coefficient vector `(c_0, .., c_{k-1})` of a polynomial of degree `< k`
//! modulo the field's modulus, packed as `c_0 + c_1 p + .. + c_{k-1} p^{k-1}`.
//! Enumerating `0..q` therefore walks the field in lexicographic order of the
//! encoding, which is what the censuses rely on for deterministic chunking.

use crate::error::{Error, Result};

/// Field element, in the canonical encoding of its [`FieldCtx`].
pub type Elem = u32;

/// Largest supported field order.
pub const MAX_ORDER: u64 = 1 << 31;

const MAX_EXTENSION_DEGREE: u32 = 8;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Splits `q = p^k`, or returns `None` if `q` is not a prime power.
pub fn prime_power_decomposition(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut k = 0;
    let mut rest = q;
    while rest % p == 0 {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

/// Immutable description of GF(q), q = p^k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldCtx {
    p: u32,
    k: u32,
    q: u32,
    /// Monic modulus, lowest coefficient first, length `k + 1`. `[0, 1]` for
    /// prime fields.
    modulus: Vec<u32>,
}

impl FieldCtx {
    /// GF(p).
    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) || p >= MAX_ORDER {
            return Err(Error::NotPrime(p));
        }
        Ok(Self {
            p: p as u32,
            k: 1,
            q: p as u32,
            modulus: vec![0, 1],
        })
    }

    /// GF(p^k) for `k >= 2`, built on the lexicographically smallest monic
    /// irreducible polynomial of degree `k` over GF(p).
    pub fn extension(p: u64, k: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if !(2..=MAX_EXTENSION_DEGREE).contains(&k) {
            return Err(Error::BadExtensionDegree(k));
        }
        let q = (p as u128).pow(k);
        if q >= MAX_ORDER as u128 {
            return Err(Error::TooLarge {
                size: q,
                budget: MAX_ORDER,
            });
        }
        let p32 = p as u32;
        let modulus = (0..q as u64)
            .map(|code| {
                let mut coeffs = digits(code, p32, k as usize);
                coeffs.push(1);
                coeffs
            })
            .find(|m| is_irreducible_mod_p(m, p32))
            .expect("an irreducible polynomial exists in every degree");
        Ok(Self {
            p: p32,
            k,
            q: q as u32,
            modulus,
        })
    }

    /// GF(q) for any supported prime power `q`.
    pub fn of_order(q: u64) -> Result<Self> {
        match prime_power_decomposition(q) {
            Some((p, 1)) => Self::prime(p),
            Some((p, k)) => Self::extension(p, k),
            None => Err(Error::NotPrimePower(q)),
        }
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn is_prime_field(&self) -> bool {
        self.k == 1
    }

    /// The modulus, lowest coefficient first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn zero(&self) -> Elem {
        0
    }

    pub fn one(&self) -> Elem {
        1
    }

    /// All elements in canonical order.
    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.q
    }

    /// Image of an integer in the prime subfield.
    pub fn from_i64(&self, x: i64) -> Elem {
        x.rem_euclid(self.p as i64) as Elem
    }

    /// Image of a big integer in the prime subfield.
    pub fn from_bigint(&self, x: &num_bigint::BigInt) -> Elem {
        use num_integer::Integer;
        use num_traits::ToPrimitive;
        let r = x.mod_floor(&num_bigint::BigInt::from(self.p));
        r.to_u32().expect("residue fits in u32")
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if self.k == 1 {
            let s = a as u64 + b as u64;
            let p = self.p as u64;
            (if s >= p { s - p } else { s }) as Elem
        } else {
            self.digitwise(a, b, |x, y| (x + y) % self.p)
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        if self.k == 1 {
            if a == 0 {
                0
            } else {
                self.p - a
            }
        } else {
            self.digitwise(a, 0, |x, _| (self.p - x) % self.p)
        }
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if self.k == 1 {
            ((a as u64 * b as u64) % self.p as u64) as Elem
        } else {
            self.ext_mul(a, b)
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: Elem) -> Option<Elem> {
        if a == 0 {
            return None;
        }
        if self.k == 1 {
            Some(inv_mod(a as i64, self.p as i64) as Elem)
        } else {
            let a_poly = digits(a as u64, self.p, self.k as usize);
            let inv = poly_inv_mod(&a_poly, &self.modulus, self.p);
            Some(self.encode(&inv))
        }
    }

    pub fn pow(&self, mut base: Elem, mut exp: u64) -> Elem {
        let mut acc = self.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Norm down to the prime subfield, `x^((q-1)/(p-1))`.
    pub fn norm(&self, x: Elem) -> Elem {
        if self.k == 1 {
            return x;
        }
        let e = (self.q as u64 - 1) / (self.p as u64 - 1);
        let n = self.pow(x, e);
        debug_assert!(n < self.p, "norm must lie in the prime subfield");
        n
    }

    /// Quadratic character: 0 for zero, 1 for nonzero squares, -1 otherwise.
    ///
    /// For odd characteristic, uses the Euler criterion on the norm (a nonzero
    /// element of GF(p^k) is a square iff its norm is a square in GF(p)).
    pub fn quadratic_character(&self, x: Elem) -> i8 {
        if x == 0 {
            return 0;
        }
        if self.p == 2 {
            return 1;
        }
        let n = self.norm(x);
        let p = self.p as u64;
        let euler = pow_mod(n as u64, (p - 1) / 2, p);
        if euler == 1 {
            1
        } else {
            -1
        }
    }

    pub fn is_square(&self, x: Elem) -> bool {
        self.quadratic_character(x) >= 0
    }

    fn digitwise(&self, a: Elem, b: Elem, op: impl Fn(u32, u32) -> u32) -> Elem {
        let (mut a, mut b) = (a, b);
        let mut out = 0u32;
        let mut scale = 1u32;
        for _ in 0..self.k {
            let (da, db) = (a % self.p, b % self.p);
            out += op(da, db) * scale;
            a /= self.p;
            b /= self.p;
            scale = scale.wrapping_mul(self.p);
        }
        out
    }

    fn ext_mul(&self, a: Elem, b: Elem) -> Elem {
        let k = self.k as usize;
        let p = self.p as u64;
        let da = digits(a as u64, self.p, k);
        let db = digits(b as u64, self.p, k);
        let mut prod = vec![0u64; 2 * k - 1];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        // reduce by the monic modulus from the top
        for top in (k..prod.len()).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            prod[top] = 0;
            for (i, &m) in self.modulus[..k].iter().enumerate() {
                let idx = top - k + i;
                prod[idx] = (prod[idx] + (p - c) * m as u64) % p;
            }
        }
        let coeffs: Vec<u32> = prod[..k].iter().map(|&c| c as u32).collect();
        self.encode(&coeffs)
    }

    fn encode(&self, coeffs: &[u32]) -> Elem {
        coeffs
            .iter()
            .rev()
            .fold(0u32, |acc, &c| acc * self.p + c)
    }
}

fn digits(mut code: u64, p: u32, k: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(k + 1);
    for _ in 0..k {
        out.push((code % p as u64) as u32);
        code /= p as u64;
    }
    out
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = (acc as u128 * base as u128 % m as u128) as u64;
        }
        base = (base as u128 * base as u128 % m as u128) as u64;
        exp >>= 1;
    }
    acc
}

/// Inverse of `a` modulo `m` by the extended Euclidean algorithm.
pub(crate) fn inv_mod(a: i64, m: i64) -> i64 {
    let (mut r0, mut r1) = (a.rem_euclid(m), m);
    let (mut s0, mut s1) = (1i64, 0i64);
    while r1 != 0 {
        let t = r0 / r1;
        (r0, r1) = (r1, r0 - t * r1);
        (s0, s1) = (s1, s0 - t * s1);
    }
    debug_assert_eq!(r0, 1, "{a} is not invertible mod {m}");
    s0.rem_euclid(m)
}

// Dense polynomials over GF(p), lowest coefficient first, used for the
// extension-field modulus search and inverses.

fn trim(v: &mut Vec<u32>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    trim(&mut r);
    let mut b = b.to_vec();
    trim(&mut b);
    let db = b.len() - 1;
    let lead_inv = inv_mod(b[db] as i64, p as i64) as u64;
    while r.len() > db {
        let top = r.len() - 1;
        let c = r[top] as u64 * lead_inv % p as u64;
        for (i, &bi) in b.iter().enumerate() {
            let idx = top - db + i;
            r[idx] = ((r[idx] as u64 + (p as u64 - c) * bi as u64) % p as u64) as u32;
        }
        trim(&mut r);
    }
    r
}

fn is_irreducible_mod_p(m: &[u32], p: u32) -> bool {
    let k = m.len() - 1;
    for d in 1..=k / 2 {
        let count = (p as u64).pow(d as u32);
        for code in 0..count {
            let mut f = digits(code, p, d);
            f.push(1);
            if poly_rem(m, &f, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Inverse of `a` modulo the irreducible `m` over GF(p), by the polynomial
/// extended Euclidean algorithm.
fn poly_inv_mod(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let pp = p as u64;
    let sub_scaled = |x: &[u32], y: &[u32], c: u64, shift: usize| -> Vec<u32> {
        let mut out = x.to_vec();
        if out.len() < y.len() + shift {
            out.resize(y.len() + shift, 0);
        }
        for (i, &yi) in y.iter().enumerate() {
            out[i + shift] = ((out[i + shift] as u64 + (pp - c) * yi as u64 % pp) % pp) as u32;
        }
        trim(&mut out);
        out
    };
    let mut r0 = m.to_vec();
    let mut r1 = a.to_vec();
    trim(&mut r1);
    let mut s0: Vec<u32> = vec![];
    let mut s1: Vec<u32> = vec![1];
    while !r1.is_empty() {
        // r0 = quo * r1 + rem, tracked one leading term at a time
        let mut rem = r0.clone();
        let mut s_new = s0.clone();
        let d1 = r1.len() - 1;
        let lead_inv = inv_mod(r1[d1] as i64, p as i64) as u64;
        while rem.len() > d1 {
            let shift = rem.len() - 1 - d1;
            let c = rem[rem.len() - 1] as u64 * lead_inv % pp;
            rem = sub_scaled(&rem, &r1, c, shift);
            s_new = sub_scaled(&s_new, &s1, c, shift);
        }
        r0 = std::mem::replace(&mut r1, rem);
        s0 = std::mem::replace(&mut s1, s_new);
    }
    // r0 is a nonzero constant since m is irreducible
    let c = inv_mod(r0[0] as i64, p as i64) as u64;
    let mut out: Vec<u32> = s0.iter().map(|&s| (s as u64 * c % pp) as u32).collect();
    out.resize(m.len() - 1, 0);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_inverses() {
        let f = FieldCtx::prime(5).unwrap();
        assert_eq!(f.inv(2), Some(3));
        assert_eq!(f.inv(0), None);
        let f2 = FieldCtx::prime(2).unwrap();
        assert_eq!(f2.inv(1), Some(1));
        assert_eq!(FieldCtx::prime(6), Err(Error::NotPrime(6)));
        assert_eq!(FieldCtx::prime(1), Err(Error::NotPrime(1)));
    }

    #[test]
    fn extension_moduli() {
        let f4 = FieldCtx::extension(2, 2).unwrap();
        assert_eq!(f4.modulus(), &[1, 1, 1]);
        assert_eq!(f4.order(), 4);
        let f9 = FieldCtx::extension(3, 2).unwrap();
        assert_eq!(f9.modulus(), &[1, 0, 1]);
        let f25 = FieldCtx::extension(5, 2).unwrap();
        assert_eq!(f25.modulus(), &[2, 0, 1]);
        assert_eq!(FieldCtx::extension(4, 2), Err(Error::NotPrime(4)));
    }

    #[test]
    fn quadratic_monics_over_gf2() {
        // exactly one of x^2, x^2+1, x^2+x, x^2+x+1 has no root in GF(2)
        let irreducible: Vec<u64> = (0..4)
            .filter(|&code| {
                let mut m = digits(code, 2, 2);
                m.push(1);
                (0..2u64).all(|x| (m[0] as u64 + m[1] as u64 * x + x * x) % 2 != 0)
            })
            .collect();
        assert_eq!(irreducible, vec![3]);
    }

    fn check_axioms(f: &FieldCtx) {
        for x in f.elements() {
            assert_eq!(f.add(x, f.neg(x)), 0);
            assert_eq!(f.mul(x, 1), x);
            if x != 0 {
                assert_eq!(f.mul(x, f.inv(x).unwrap()), 1, "q={} x={x}", f.order());
            }
            for y in f.elements() {
                assert_eq!(f.add(x, y), f.add(y, x));
                assert_eq!(f.mul(x, y), f.mul(y, x));
                for z in f.elements() {
                    assert_eq!(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z)));
                    assert_eq!(f.mul(f.mul(x, y), z), f.mul(x, f.mul(y, z)));
                    assert_eq!(f.add(f.add(x, y), z), f.add(x, f.add(y, z)));
                }
            }
        }
    }

    #[test]
    fn field_axioms_exhaustive() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25] {
            check_axioms(&FieldCtx::of_order(q).unwrap());
        }
    }

    #[test]
    fn multiplicative_group_is_cyclic_of_order_q_minus_1() {
        for q in [9u64, 16, 25, 27, 49, 81] {
            let f = FieldCtx::of_order(q).unwrap();
            for x in 1..f.order() {
                assert_eq!(f.pow(x, q - 1), 1);
            }
        }
    }

    #[test]
    fn quadratic_character_counts() {
        for q in [5u64, 7, 9, 25, 27, 49] {
            let f = FieldCtx::of_order(q).unwrap();
            let squares: std::collections::BTreeSet<Elem> =
                f.elements().map(|x| f.mul(x, x)).collect();
            for x in f.elements() {
                assert_eq!(f.is_square(x), squares.contains(&x), "q={q} x={x}");
            }
            assert_eq!(squares.len() as u64, (q + 1) / 2);
        }
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power_decomposition(25), Some((5, 2)));
        assert_eq!(prime_power_decomposition(13), Some((13, 1)));
        assert_eq!(prime_power_decomposition(12), None);
        assert_eq!(prime_power_decomposition(1), None);
        assert!(matches!(FieldCtx::of_order(6), Err(Error::NotPrimePower(6))));
    }
}
