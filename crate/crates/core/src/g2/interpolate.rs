//! Recovering the g2 Kirillov polynomials from censuses at several `q`.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::field::FieldCtx;
use crate::intpoly::{interpolate, IntPoly};
use crate::par::Exec;
use crate::partition::Partition;

use super::cases::{partition_of_ranks, theorem1_polynomials, SEQ_42, SEQ_REGULAR};
use super::census::{g2_census, CensusReport};

/// The seven smallest primes above 3.
pub const DEFAULT_ORDERS: [u64; 7] = [5, 7, 11, 13, 17, 19, 23];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InterpolationMode {
    /// At least seven points: every type is fitted directly.
    Full,
    /// Six points: types of degree at most 5 are fitted, `(7)` is `q^6`
    /// minus the rest.
    Reduced,
}

#[derive(Debug, Clone)]
pub struct InterpolationReport {
    pub mode: InterpolationMode,
    pub censuses: Vec<CensusReport>,
    pub polys: BTreeMap<Partition, IntPoly>,
    /// `(3,3,1)` fitted directly from census counts.
    pub direct_331: IntPoly,
    /// `(3,3,1)` as `q^6` minus the other fitted types in full mode, or
    /// fitted from the per-census complements in reduced mode.
    pub complement_331: IntPoly,
}

impl InterpolationReport {
    pub fn complement_agrees(&self) -> bool {
        self.direct_331 == self.complement_331
    }

    /// Types whose fitted polynomial differs from the closed form.
    pub fn theorem1_mismatches(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for (lambda, expected) in theorem1_polynomials() {
            if self.polys.get(&lambda) != Some(&expected) {
                out.push(lambda);
            }
        }
        for lambda in self.polys.keys() {
            if !theorem1_polynomials().iter().any(|(l, _)| l == lambda) {
                out.push(lambda.clone());
            }
        }
        out
    }

    pub fn passed(&self) -> bool {
        self.complement_agrees() && self.theorem1_mismatches().is_empty()
    }
}

fn fit(censuses: &[CensusReport], value: impl Fn(&CensusReport) -> u64) -> Result<IntPoly> {
    let points: Vec<(BigInt, BigInt)> = censuses
        .iter()
        .map(|r| (BigInt::from(r.q), BigInt::from(value(r))))
        .collect();
    interpolate(&points)
}

/// Runs a census at each order and interpolates per Jordan type.
pub fn g2_interpolate(orders: &[u64], exec: Exec, budget: u64) -> Result<InterpolationReport> {
    let mode = match orders.len() {
        n if n >= 7 => InterpolationMode::Full,
        6 => InterpolationMode::Reduced,
        n => return Err(Error::InsufficientPoints { needed: 6, got: n }),
    };
    let mut ctxs = Vec::with_capacity(orders.len());
    for (i, &q) in orders.iter().enumerate() {
        if orders[..i].contains(&q) {
            return Err(Error::DuplicateAbscissa(q.to_string()));
        }
        let ctx = FieldCtx::of_order(q)?;
        if ctx.characteristic() <= 3 {
            return Err(Error::BadCharacteristic(ctx.characteristic()));
        }
        let size = (q as u128).pow(6);
        if size > budget as u128 {
            return Err(Error::TooLarge { size, budget });
        }
        ctxs.push(ctx);
    }
    let censuses = ctxs
        .iter()
        .map(|ctx| g2_census(ctx, exec, budget))
        .collect::<Result<Vec<_>>>()?;

    let regular = partition_of_ranks(&SEQ_REGULAR)?;
    let p331 = partition_of_ranks(&SEQ_42)?;
    let mut types: Vec<Partition> = theorem1_polynomials().into_iter().map(|(l, _)| l).collect();
    for r in &censuses {
        for l in r.counts.keys() {
            if !types.contains(l) {
                types.push(l.clone());
            }
        }
    }
    let mut polys = BTreeMap::new();
    for lambda in &types {
        if mode == InterpolationMode::Reduced && *lambda == regular {
            continue;
        }
        polys.insert(lambda.clone(), fit(&censuses, |r| r.count(lambda))?);
    }
    let q6 = IntPoly::monomial(1, 6);
    let complement_331 = match mode {
        InterpolationMode::Full => polys
            .iter()
            .filter(|(l, _)| **l != p331)
            .fold(q6.clone(), |acc, (_, p)| acc - p.clone()),
        InterpolationMode::Reduced => {
            let rest = polys.values().cloned().sum::<IntPoly>();
            polys.insert(regular, q6 - rest);
            fit(&censuses, CensusReport::complement_331)?
        }
    };
    let direct_331 = polys.get(&p331).cloned().unwrap_or_else(IntPoly::zero);
    Ok(InterpolationReport {
        mode,
        censuses,
        polys,
        direct_331,
        complement_331,
    })
}
