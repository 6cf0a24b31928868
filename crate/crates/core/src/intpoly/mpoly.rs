//! Integer polynomials in the six coordinates `a, b, c, d, e, f`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::field::{Elem, FieldCtx};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Var {
    A,
    B,
    C,
    D,
    E,
    F,
}

impl Var {
    pub const ALL: [Var; 6] = [Var::A, Var::B, Var::C, Var::D, Var::E, Var::F];

    fn index(self) -> usize {
        self as usize
    }

    fn letter(self) -> char {
        (b'a' + self as u8) as char
    }
}

type Exponents = [u8; 6];

/// Sparse map from exponent vectors to nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Exponents, i64>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: i64) -> Self {
        let mut p = Self::zero();
        p.add_term([0; 6], c);
        p
    }

    pub fn var(v: Var) -> Self {
        let mut e = [0u8; 6];
        e[v.index()] = 1;
        let mut p = Self::zero();
        p.add_term(e, 1);
        p
    }

    fn add_term(&mut self, e: Exponents, c: i64) {
        if c == 0 {
            return;
        }
        let slot = self.terms.entry(e).or_insert(0);
        *slot = slot.checked_add(c).expect("coefficient overflow");
        if *slot == 0 {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn scale(&self, c: i64) -> Self {
        let mut out = Self::zero();
        for (&e, &x) in &self.terms {
            out.add_term(e, x.checked_mul(c).expect("coefficient overflow"));
        }
        out
    }

    /// Largest exponent of `v` in any term.
    pub fn degree_in(&self, v: Var) -> u8 {
        self.terms.keys().map(|e| e[v.index()]).max().unwrap_or(0)
    }

    /// Substitutes an integer for one variable.
    pub fn substitute(&self, v: Var, value: i64) -> Self {
        let mut out = Self::zero();
        for (&e, &c) in &self.terms {
            let k = e[v.index()];
            let mut e2 = e;
            e2[v.index()] = 0;
            let factor = value.checked_pow(k as u32).expect("overflow");
            out.add_term(e2, c.checked_mul(factor).expect("overflow"));
        }
        out
    }

    pub fn eval_i64(&self, point: [i64; 6]) -> i64 {
        self.terms
            .iter()
            .map(|(e, &c)| {
                e.iter()
                    .zip(point)
                    .fold(c, |acc, (&k, x)| acc * x.pow(k as u32))
            })
            .sum()
    }

    /// Evaluation at field elements; coefficients map into the prime subfield.
    pub fn eval(&self, ctx: &FieldCtx, point: [Elem; 6]) -> Elem {
        self.terms.iter().fold(ctx.zero(), |acc, (e, &c)| {
            let mono = e
                .iter()
                .zip(point)
                .fold(ctx.from_i64(c), |m, (&k, x)| ctx.mul(m, ctx.pow(x, k as u64)));
            ctx.add(acc, mono)
        })
    }
}

impl Add<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (&e, &c) in &rhs.terms {
            out.add_term(e, c);
        }
        out
    }
}

impl Sub<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self + &(-rhs)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(-1)
    }
}

impl Mul<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (ea, &ca) in &self.terms {
            for (eb, &cb) in &rhs.terms {
                let mut e = *ea;
                for (x, y) in e.iter_mut().zip(eb) {
                    *x += y;
                }
                out.add_term(e, ca.checked_mul(cb).expect("coefficient overflow"));
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        // highest total degree first, then lexicographic in a..f
        let mut terms: Vec<(&Exponents, &i64)> = self.terms.iter().collect();
        terms.sort_by(|(ea, _), (eb, _)| {
            let da: u32 = ea.iter().map(|&x| x as u32).sum();
            let db: u32 = eb.iter().map(|&x| x as u32).sum();
            db.cmp(&da).then(eb.cmp(ea))
        });
        for (i, (e, &c)) in terms.into_iter().enumerate() {
            let mag = c.unsigned_abs();
            match (i, c < 0) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let constant = e.iter().all(|&k| k == 0);
            if mag != 1 || constant {
                write!(f, "{mag}")?;
            }
            for v in Var::ALL {
                match e[v.index()] {
                    0 => {}
                    1 => write!(f, "{}", v.letter())?,
                    k => write!(f, "{}^{k}", v.letter())?,
                }
            }
        }
        Ok(())
    }
}

/// Parses expanded sums of monomials such as `2ae-2bd+2c^2`; `*` and
/// whitespace are ignored.
impl FromStr for MultiPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::PolyParse(s.to_string());
        let compact: String = s
            .chars()
            .filter(|c| !c.is_whitespace() && *c != '*')
            .collect();
        if compact.is_empty() {
            return Err(bad());
        }
        let mut out = MultiPoly::zero();
        let bytes = compact.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            let mut sign = 1i64;
            if bytes[i] == b'+' || bytes[i] == b'-' {
                if bytes[i] == b'-' {
                    sign = -1;
                }
                i += 1;
            } else if i != 0 {
                return Err(bad());
            }
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let coef: i64 = if i > start {
                compact[start..i].parse().map_err(|_| bad())?
            } else {
                1
            };
            let mut e = [0u8; 6];
            let mut saw_var = false;
            while i < bytes.len() && (b'a'..=b'f').contains(&bytes[i]) {
                let v = (bytes[i] - b'a') as usize;
                i += 1;
                let mut k = 1u8;
                if i < bytes.len() && bytes[i] == b'^' {
                    i += 1;
                    let s2 = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    k = compact[s2..i].parse().map_err(|_| bad())?;
                }
                e[v] += k;
                saw_var = true;
            }
            if i == start && !saw_var {
                return Err(bad());
            }
            out.add_term(e, sign * coef);
        }
        Ok(out)
    }
}
