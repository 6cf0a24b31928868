//! Exact polynomials over the integers.
//!
//! [`IntPoly`] is univariate in `q` with arbitrary-precision coefficients.
//! [`MultiPoly`] covers the six root coordinates `a..f` of the `g2` matrix.

mod intfactor;
mod irreducible;
mod modp;
mod mpoly;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::field::{Elem, FieldCtx};

pub use irreducible::{irreducibility, Certificate, IrreducibilityVerdict, CERTIFICATE_PRIMES};
pub use modp::ddf_degrees;
pub use mpoly::{MultiPoly, Var};

/// Univariate integer polynomial in `q`, lowest degree first, no trailing
/// zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::from_coeffs(vec![BigInt::from(c)])
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    pub fn monomial(c: i64, degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = BigInt::from(c);
        Self::from_coeffs(coeffs)
    }

    /// `q - 1`.
    pub fn q_minus_one() -> Self {
        Self::from_i64s(&[-1, 1])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `q^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    /// Evaluation at a field element; coefficients map into the prime subfield.
    pub fn eval_in(&self, ctx: &FieldCtx, x: Elem) -> Elem {
        self.coeffs.iter().rev().fold(ctx.zero(), |acc, c| {
            ctx.add(ctx.mul(acc, x), ctx.from_bigint(c))
        })
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Non-negative gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides by the content, with the sign chosen so the leading coefficient
    /// is positive.
    pub fn primitive_part(&self) -> Self {
        let c = self.content();
        if c.is_zero() {
            return Self::zero();
        }
        let c = if self.leading_coeff().is_some_and(Signed::is_negative) {
            -c
        } else {
            c
        };
        Self::from_coeffs(self.coeffs.iter().map(|x| x / &c).collect())
    }

    /// Quotient and remainder for a divisor whose leading coefficient divides
    /// every intermediate leading term; `None` as soon as that fails.
    fn div_rem_integral(&self, divisor: &Self) -> Option<(Self, Self)> {
        let dd = divisor.degree()?;
        let lead = divisor.leading_coeff()?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Some((Self::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for top in (dd..rem.len()).rev() {
            if rem[top].is_zero() {
                continue;
            }
            let (c, r) = rem[top].div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                rem[top - dd + i] -= &c * dc;
            }
            quot[top - dd] = c;
        }
        Some((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// `self / divisor` when the division is exact in `Z[q]`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (quot, rem) = self.div_rem_integral(divisor)?;
        rem.is_zero().then_some(quot)
    }

    /// Coefficients as decimal strings, lowest degree first.
    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }

    pub fn from_decimal_strings<S: AsRef<str>>(coeffs: &[S]) -> Result<Self> {
        coeffs
            .iter()
            .map(|s| {
                s.as_ref()
                    .trim()
                    .parse::<BigInt>()
                    .map_err(|_| Error::PolyParse(s.as_ref().to_string()))
            })
            .collect::<Result<Vec<_>>>()
            .map(Self::from_coeffs)
    }

    /// Sort key giving a total order: by degree, then coefficients from the
    /// constant term up.
    pub fn sort_key(&self) -> (usize, Vec<BigInt>) {
        (self.coeffs.len(), self.coeffs.clone())
    }
}

impl From<BigInt> for IntPoly {
    fn from(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }
}

impl Add<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::from_coeffs((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::from_coeffs((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: &IntPoly) -> IntPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

impl std::iter::Sum for IntPoly {
    fn sum<I: Iterator<Item = IntPoly>>(iter: I) -> IntPoly {
        iter.fold(IntPoly::zero(), |acc, p| acc + p)
    }
}

/// Renders as `1 + 2q + 3q^2`, lowest degree first.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    f.write_str("q")?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Parses the display format (`1 + 2q - q^3`, `*` optional) or a
/// comma-separated coefficient list, lowest degree first (`1,2,0,-1`).
impl FromStr for IntPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::PolyParse(s.to_string()));
        }
        if !s.contains('q') && s.contains(',') {
            let parts: Vec<&str> = s.split(',').collect();
            return Self::from_decimal_strings(&parts);
        }
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::PolyParse(s.to_string());
        let mut terms = Vec::new();
        let mut start = 0;
        for (i, ch) in compact.char_indices() {
            if (ch == '+' || ch == '-') && i > start && !compact[..i].ends_with('^') {
                terms.push(&compact[start..i]);
                start = i;
            }
        }
        terms.push(&compact[start..]);
        let mut coeffs: Vec<BigInt> = Vec::new();
        for term in terms {
            let (sign, body) = match term.as_bytes().first() {
                Some(b'-') => (-1, &term[1..]),
                Some(b'+') => (1, &term[1..]),
                _ => (1, term),
            };
            if body.is_empty() {
                return Err(bad());
            }
            let (coef, deg) = match body.find('q') {
                None => (body.parse::<BigInt>().map_err(|_| bad())?, 0usize),
                Some(pos) => {
                    let head = body[..pos].trim_end_matches('*');
                    let coef = if head.is_empty() {
                        BigInt::one()
                    } else {
                        head.parse::<BigInt>().map_err(|_| bad())?
                    };
                    let tail = &body[pos + 1..];
                    let deg = if tail.is_empty() {
                        1
                    } else {
                        tail.strip_prefix('^')
                            .ok_or_else(bad)?
                            .parse::<usize>()
                            .map_err(|_| bad())?
                    };
                    (coef, deg)
                }
            };
            if coeffs.len() <= deg {
                coeffs.resize(deg + 1, BigInt::zero());
            }
            coeffs[deg] += coef * sign;
        }
        Ok(Self::from_coeffs(coeffs))
    }
}

/// `P = q^a (q-1)^b R` with `R(0) != 0` and `R(1) != 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitForm {
    pub a: usize,
    pub b: usize,
    pub r: IntPoly,
}

impl SplitForm {
    pub fn reconstruct(&self) -> IntPoly {
        let qa = IntPoly::monomial(1, self.a);
        let qb = IntPoly::q_minus_one().pow(self.b as u32);
        &(&qa * &qb) * &self.r
    }
}

/// Strips the maximal powers of `q` and `q - 1`.
pub fn split_qfactors(p: &IntPoly) -> Result<SplitForm> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let a = p.coeffs.iter().take_while(|c| c.is_zero()).count();
    let mut r = IntPoly::from_coeffs(p.coeffs[a..].to_vec());
    let mut b = 0;
    let q1 = IntPoly::q_minus_one();
    while r.eval(&BigInt::one()).is_zero() {
        r = r.div_exact(&q1).expect("root at 1 implies exact division");
        b += 1;
    }
    Ok(SplitForm { a, b, r })
}

/// The unique polynomial of degree `< points.len()` through the points,
/// solved by exact rational elimination on the Vandermonde system.
pub fn interpolate(points: &[(BigInt, BigInt)]) -> Result<IntPoly> {
    let n = points.len();
    if n == 0 {
        return Err(Error::InsufficientPoints { needed: 1, got: 0 });
    }
    for (i, (x, _)) in points.iter().enumerate() {
        if points[..i].iter().any(|(y, _)| y == x) {
            return Err(Error::DuplicateAbscissa(x.to_string()));
        }
    }
    let mut rows: Vec<Vec<BigRational>> = points
        .iter()
        .map(|(x, y)| {
            let mut row = Vec::with_capacity(n + 1);
            let mut pw = BigInt::one();
            for _ in 0..n {
                row.push(BigRational::from_integer(pw.clone()));
                pw *= x;
            }
            row.push(BigRational::from_integer(y.clone()));
            row
        })
        .collect();
    for col in 0..n {
        let piv = (col..n)
            .find(|&r| !rows[r][col].is_zero())
            .expect("Vandermonde matrix with distinct nodes is invertible");
        rows.swap(col, piv);
        let inv = rows[col][col].recip();
        for v in rows[col].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = rows[col].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                *v -= &factor * pv;
            }
        }
    }
    let coeffs = rows
        .into_iter()
        .map(|row| {
            let c = &row[n];
            c.is_integer()
                .then(|| c.to_integer())
                .ok_or(Error::NonIntegerCoefficients)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(IntPoly::from_coeffs(coeffs))
}

/// Convenience wrapper over [`interpolate`] for machine-sized data.
pub fn interpolate_u64(points: &[(u64, u64)]) -> Result<IntPoly> {
    let pts: Vec<(BigInt, BigInt)> = points
        .iter()
        .map(|&(x, y)| (BigInt::from(x), BigInt::from(y)))
        .collect();
    interpolate(&pts)
}
