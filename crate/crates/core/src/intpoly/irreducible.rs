//! Irreducibility over `Z[q]` with checkable certificates.
//!
//! The pipeline, cheapest step first:
//! 1. constants and linear polynomials are decided directly;
//! 2. a prime `p` with `f mod p` irreducible proves irreducibility;
//! 3. otherwise the proper factor degrees achievable modulo every tried prime
//!    are intersected; an empty intersection proves irreducibility;
//! 4. the surviving degrees `<= deg/2` are searched exhaustively with
//!    Kronecker's method, which either finds a factor or proves none exists.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::intfactor::divisors;
use super::modp::ddf_degrees;
use super::IntPoly;
use crate::error::{Error, Result};
use crate::field::is_prime;

/// Number of primes tried for mod-p certificates and degree pruning.
pub const CERTIFICATE_PRIMES: usize = 10;

/// Why a polynomial is irreducible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// Primitive of degree one.
    Linear,
    /// Irreducible modulo this prime, which does not divide the leading
    /// coefficient.
    ModP { p: u64 },
    /// Factor degree multisets modulo each prime; no proper degree is
    /// achievable under all of them.
    DegreeSets { primes: Vec<(u64, Vec<usize>)> },
    /// Kronecker's search found no factor of any of these degrees, and they
    /// are the only candidates left after degree pruning.
    Exhausted { degrees: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IrreducibilityVerdict {
    Unit,
    Irreducible(Certificate),
    /// Nontrivial factors whose product is the input; irreducible factors
    /// sorted by degree then coefficients, any constant factor first.
    Reducible(Vec<IntPoly>),
}

impl IrreducibilityVerdict {
    pub fn is_reducible(&self) -> bool {
        matches!(self, Self::Reducible(_))
    }

    pub fn factors(&self) -> Option<&[IntPoly]> {
        match self {
            Self::Reducible(f) => Some(f),
            _ => None,
        }
    }

    /// Re-derives the verdict's evidence for `f` independently of the search
    /// that produced it.
    pub fn recheck(&self, f: &IntPoly) -> bool {
        match self {
            Self::Unit => f.degree() == Some(0) && f.coeff(0).abs().is_one(),
            Self::Reducible(factors) => {
                factors.len() >= 2
                    && factors.iter().fold(IntPoly::one(), |acc, g| acc * g) == *f
            }
            Self::Irreducible(cert) => {
                if !f.content().is_one() {
                    return false;
                }
                match cert {
                    Certificate::Linear => f.degree() == Some(1),
                    Certificate::ModP { p } => {
                        ddf_degrees(f, *p).is_ok_and(|d| d == vec![f.degree().unwrap_or(0)])
                    }
                    Certificate::DegreeSets { primes } => {
                        let deg = f.degree().unwrap_or(0);
                        primes.iter().all(|(p, d)| ddf_degrees(f, *p).as_ref() == Ok(d))
                            && common_proper_degrees(deg, primes).is_empty()
                    }
                    Certificate::Exhausted { degrees } => {
                        let deg = f.degree().unwrap_or(0);
                        let primes = prime_degree_sets(f);
                        let expected: Vec<usize> = common_proper_degrees(deg, &primes)
                            .into_iter()
                            .filter(|&d| 2 * d <= deg)
                            .collect();
                        expected == *degrees
                            && degrees.iter().all(|&d| kronecker_factor(f, d).is_none())
                    }
                }
            }
        }
    }
}

/// The first [`CERTIFICATE_PRIMES`] primes above 3 not dividing `lead`.
pub fn certificate_primes(lead: &BigInt) -> Vec<u64> {
    (5u64..)
        .filter(|&p| is_prime(p) && !(lead % BigInt::from(p)).is_zero())
        .take(CERTIFICATE_PRIMES)
        .collect()
}

fn prime_degree_sets(f: &IntPoly) -> Vec<(u64, Vec<usize>)> {
    let lead = f.leading_coeff().expect("nonzero");
    certificate_primes(lead)
        .into_iter()
        .map(|p| (p, ddf_degrees(f, p).expect("prime avoids leading coefficient")))
        .collect()
}

fn subset_sums(degrees: &[usize], total: usize) -> BTreeSet<usize> {
    let mut reach = vec![false; total + 1];
    reach[0] = true;
    for &d in degrees {
        for s in (d..=total).rev() {
            if reach[s - d] {
                reach[s] = true;
            }
        }
    }
    (1..total).filter(|&s| reach[s]).collect()
}

fn common_proper_degrees(deg: usize, primes: &[(u64, Vec<usize>)]) -> BTreeSet<usize> {
    let mut common: BTreeSet<usize> = (1..deg).collect();
    for (_, d) in primes {
        let sums = subset_sums(d, deg);
        common.retain(|s| sums.contains(s));
    }
    common
}

/// Classifies `f` over `Z[q]`.
pub fn irreducibility(f: &IntPoly) -> Result<IrreducibilityVerdict> {
    let lead = f.leading_coeff().ok_or(Error::ZeroPolynomial)?;
    let deg = f.degree().unwrap_or(0);
    let mut unit = f.content();
    if lead.is_negative() {
        unit = -unit;
    }
    if deg == 0 {
        return Ok(if unit.abs().is_one() {
            IrreducibilityVerdict::Unit
        } else {
            IrreducibilityVerdict::Reducible(vec![f.clone()])
        });
    }
    let prim = f.primitive_part();
    let mut factors = Vec::new();
    factor_primitive(&prim, &mut factors);
    let nontrivial_content = !unit.abs().is_one();
    if factors.len() == 1 && !nontrivial_content {
        // a unit multiple of an irreducible polynomial
        return Ok(IrreducibilityVerdict::Irreducible(
            certify_irreducible(&prim).expect("single factor is irreducible"),
        ));
    }
    factors.sort_by_key(IntPoly::sort_key);
    if !unit.is_one() {
        factors.insert(0, IntPoly::from(unit));
    }
    Ok(IrreducibilityVerdict::Reducible(factors))
}

/// Certificate for a primitive polynomial, or `None` with a factor found.
fn certify_irreducible(f: &IntPoly) -> std::result::Result<Certificate, IntPoly> {
    let deg = f.degree().expect("nonzero");
    if deg == 1 {
        return Ok(Certificate::Linear);
    }
    let primes = prime_degree_sets(f);
    if let Some((p, _)) = primes.iter().find(|(_, d)| *d == [deg]) {
        return Ok(Certificate::ModP { p: *p });
    }
    let common = common_proper_degrees(deg, &primes);
    if common.is_empty() {
        return Ok(Certificate::DegreeSets { primes });
    }
    let candidates: Vec<usize> = common.into_iter().filter(|&d| 2 * d <= deg).collect();
    for &d in &candidates {
        if let Some(g) = kronecker_factor(f, d) {
            return Err(g);
        }
    }
    Ok(Certificate::Exhausted {
        degrees: candidates,
    })
}

/// Appends the irreducible factors of a primitive, positive-leading `f`.
fn factor_primitive(f: &IntPoly, out: &mut Vec<IntPoly>) {
    match certify_irreducible(f) {
        Ok(_) => out.push(f.clone()),
        Err(g) => {
            let h = f.div_exact(&g).expect("factor divides");
            factor_primitive(&g, out);
            factor_primitive(&h, out);
        }
    }
}

/// Largest magnitude of an evaluation usable as a divisor source.
const MAX_VALUE: u64 = 1 << 62;

/// Searches for a factor of `f` of exactly degree `d` by Kronecker's method.
///
/// A degree-`d` factor `g` is fixed by its values at `d + 1` integers, and
/// each `g(x)` divides `f(x)`. Candidate values are tried depth-first while
/// Newton divided differences stay integral (they must, for an integer
/// polynomial at integer nodes). The returned factor is primitive with a
/// positive leading coefficient.
pub(crate) fn kronecker_factor(f: &IntPoly, d: usize) -> Option<IntPoly> {
    let lead = f.leading_coeff()?.clone();
    let mut nodes: Vec<(i128, Vec<u64>)> = Vec::new();
    let mut x = 0i64;
    let mut step = 0;
    while step < 200 {
        let v = f.eval_i64(x);
        if !v.is_zero() {
            if let Some(m) = v.abs().to_u64().filter(|&m| m < MAX_VALUE) {
                nodes.push((x as i128, divisors(m)));
            }
        }
        step += 1;
        // 0, 1, -1, 2, -2, ...
        x = if x > 0 { -x } else { -x + 1 };
    }
    if nodes.len() < d + 1 {
        // integer roots are handled by the linear search elsewhere; not
        // enough small nodes otherwise only happens for huge coefficients
        panic!("not enough evaluation nodes for degree {d} Kronecker search on {f}");
    }
    // the constant term of a factor divides f(0); keep 0 first when usable,
    // then prefer nodes with few divisors
    let zero_first = nodes[0].0 == 0;
    let (head, tail) = nodes.split_at_mut(usize::from(zero_first));
    tail.sort_by_key(|(x, divs)| (divs.len(), x.unsigned_abs()));
    let chosen: Vec<(i128, Vec<u64>)> = head
        .iter()
        .chain(tail.iter())
        .take(d + 1)
        .cloned()
        .collect();

    let xs: Vec<i128> = chosen.iter().map(|(x, _)| *x).collect();
    let lead_i = lead.to_i128();
    let mut search = Search {
        f,
        xs: &xs,
        divs: chosen.iter().map(|(_, d)| d.as_slice()).collect(),
        table: vec![Vec::new(); d + 1],
        lead: lead_i,
        lead_big: lead,
    };
    search.dfs(0)
}

struct Search<'a> {
    f: &'a IntPoly,
    xs: &'a [i128],
    divs: Vec<&'a [u64]>,
    /// Row `k` holds `g[x_k], g[x_{k-1}, x_k], .., g[x_0..x_k]`.
    table: Vec<Vec<i128>>,
    lead: Option<i128>,
    lead_big: BigInt,
}

impl Search<'_> {
    fn dfs(&mut self, k: usize) -> Option<IntPoly> {
        let d = self.xs.len() - 1;
        let divs = self.divs[k];
        for &m in divs {
            for sign in [1i128, -1] {
                // g and -g give the same factor
                if k == 0 && sign < 0 {
                    continue;
                }
                let y = sign * m as i128;
                let Some(row) = self.newton_row(k, y) else {
                    continue;
                };
                let top = row[k];
                if k == d {
                    if top == 0 || !self.top_divides_lead(top) {
                        continue;
                    }
                    self.table[k] = row;
                    if let Some(g) = self.candidate() {
                        return Some(g);
                    }
                    continue;
                }
                self.table[k] = row;
                if let Some(g) = self.dfs(k + 1) {
                    return Some(g);
                }
            }
        }
        None
    }

    fn top_divides_lead(&self, top: i128) -> bool {
        match self.lead {
            Some(l) => l % top == 0,
            None => (&self.lead_big % BigInt::from(top)).is_zero(),
        }
    }

    fn newton_row(&self, k: usize, y: i128) -> Option<Vec<i128>> {
        let mut row = Vec::with_capacity(k + 1);
        row.push(y);
        for j in 1..=k {
            let num = row[j - 1].checked_sub(self.table[k - 1][j - 1])?;
            let den = self.xs[k] - self.xs[k - j];
            if num % den != 0 {
                return None;
            }
            row.push(num / den);
        }
        Some(row)
    }

    fn candidate(&self) -> Option<IntPoly> {
        // Newton form: sum_k c_k prod_{i<k} (q - x_i)
        let mut g = IntPoly::zero();
        let mut basis = IntPoly::one();
        for (k, row) in self.table.iter().enumerate() {
            let c = BigInt::from(row[k]);
            g = g + basis.scale(&c);
            let lin = IntPoly::from_coeffs(vec![BigInt::from(-self.xs[k]), BigInt::one()]);
            basis = basis * lin;
        }
        let g = g.primitive_part();
        self.f.div_exact(&g).map(|_| g)
    }
}
