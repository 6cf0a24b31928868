//! Exhaustive census of `X(a, .., f)` over `GF(q)` by Jordan type.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::{Elem, FieldCtx};
use crate::matrix::{FMatrix, RankWorkspace};
use crate::par::{fold_slices, Exec};
use crate::partition::Partition;

use super::basis::{build_chevalley, DIM};
use super::kernel::Kernel;
use super::cases::{
    case_of, partition_of_ranks, require_char, AuxCount, CaseKey, G2Params, Predicates, RankSeq,
    SEQ_42,
};

/// Census result; every map is keyed in a fixed order so that reports do not
/// depend on how the work was split.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CensusReport {
    pub q: u64,
    pub counts: BTreeMap<Partition, u64>,
    pub cases: BTreeMap<CaseKey, u64>,
    pub aux: BTreeMap<AuxCount, u64>,
    pub total: u64,
}

impl CensusReport {
    fn merge(mut self, other: CensusReport) -> CensusReport {
        self.q = self.q.max(other.q);
        for (k, v) in other.counts {
            *self.counts.entry(k).or_insert(0) += v;
        }
        for (k, v) in other.cases {
            *self.cases.entry(k).or_insert(0) += v;
        }
        for (k, v) in other.aux {
            *self.aux.entry(k).or_insert(0) += v;
        }
        self.total += other.total;
        self
    }

    pub fn count(&self, lambda: &Partition) -> u64 {
        self.counts.get(lambda).copied().unwrap_or(0)
    }

    pub fn case_count(&self, case: u8, ranks: RankSeq) -> u64 {
        self.cases.get(&CaseKey { case, ranks }).copied().unwrap_or(0)
    }

    /// Count of `(3,3,1)` recovered as `q^6` minus every other type.
    pub fn complement_331(&self) -> u64 {
        let target = partition_of_ranks(&SEQ_42).expect("valid");
        let others: u64 = self
            .counts
            .iter()
            .filter(|(l, _)| **l != target)
            .map(|(_, c)| c)
            .sum();
        self.q.pow(6) - others
    }

    /// Per-case tallies summed by partition equal the per-partition counts.
    pub fn cases_consistent(&self) -> bool {
        let mut by_partition: BTreeMap<Partition, u64> = BTreeMap::new();
        for (k, &v) in &self.cases {
            match partition_of_ranks(&k.ranks) {
                Ok(l) => *by_partition.entry(l).or_insert(0) += v,
                Err(_) => return false,
            }
        }
        by_partition == self.counts
    }
}

/// Writes `X(params)` into a 7x7 matrix over `ctx`.
#[derive(Debug, Clone)]
pub(crate) struct XTemplate {
    /// `(coordinate, row, col, coefficient in the field)`
    terms: Vec<(usize, usize, usize, Elem)>,
}

impl XTemplate {
    pub fn new(ctx: &FieldCtx) -> Result<Self> {
        let basis = build_chevalley()?;
        let terms = basis
            .template_terms()
            .into_iter()
            .map(|(v, i, j, c)| (v, i, j, ctx.from_i64(c)))
            .collect();
        Ok(Self { terms })
    }

    pub fn fill(&self, m: &mut FMatrix<'_>, params: &[Elem; 6]) {
        m.clear();
        let ctx = m.ctx();
        for &(v, i, j, c) in &self.terms {
            let x = ctx.add(m.get(i, j), ctx.mul(c, params[v]));
            m.set(i, j, x);
        }
    }

    /// Writes the entries carrying coordinate `v` into a flat array, for
    /// prime fields only.
    pub fn fill_prime(&self, x: &mut [u32; DIM * DIM], v: usize, value: Elem, k: &Kernel) {
        for &(w, i, j, c) in &self.terms {
            if w == v {
                x[i * DIM + j] = k.red(c * value);
            }
        }
    }
}

/// `X(params)` over `ctx`; the characteristic must exceed 3.
pub fn x_of<'f>(params: &G2Params, ctx: &'f FieldCtx) -> Result<FMatrix<'f>> {
    require_char(ctx)?;
    let mut m = FMatrix::zero(ctx, DIM);
    XTemplate::new(ctx)?.fill(&mut m, &params.to_array());
    Ok(m)
}

/// Enumerates all `q^6` parameter tuples, computes the rank sequence of each
/// `X`, and checks it against the predicted one. Workers own disjoint
/// `(a, f)` slices.
pub fn g2_census(ctx: &FieldCtx, exec: Exec, budget: u64) -> Result<CensusReport> {
    require_char(ctx)?;
    let q = ctx.order() as u64;
    let size = (q as u128).pow(6);
    if size > budget as u128 {
        return Err(Error::TooLarge { size, budget });
    }
    let template = XTemplate::new(ctx)?;
    let report = fold_slices(
        exec,
        (q * q) as usize,
        |slice| census_slice(ctx, &template, slice),
        CensusReport::merge,
    )?;
    Ok(report)
}

fn census_slice(ctx: &FieldCtx, template: &XTemplate, slice: usize) -> Result<CensusReport> {
    let q = ctx.order();
    let a = slice as Elem / q;
    let f = slice as Elem % q;
    let case = case_of(a, f);
    let pred = Predicates::new(ctx);
    let kernel = if ctx.is_prime_field() {
        Kernel::new(q)
    } else {
        None
    };
    let mut m = FMatrix::zero(ctx, DIM);
    let mut ws = RankWorkspace::new(ctx, DIM);
    let mut ranks_vec = Vec::with_capacity(DIM);
    let mut x = [0u32; DIM * DIM];
    let mut ranks: RankSeq = [0; 6];
    let mut by_ranks: BTreeMap<RankSeq, u64> = BTreeMap::new();
    let mut aux: BTreeMap<AuxCount, u64> = BTreeMap::new();
    let mut aux_hits = Vec::new();
    let mut params = [a, 0, 0, 0, 0, f];
    let set = |x: &mut [u32; DIM * DIM], v: usize, value: Elem| {
        if let Some(k) = &kernel {
            template.fill_prime(x, v, value, k);
        }
    };
    set(&mut x, 0, a);
    set(&mut x, 5, f);
    for b in 0..q {
        params[1] = b;
        set(&mut x, 1, b);
        for c in 0..q {
            params[2] = c;
            set(&mut x, 2, c);
            for d in 0..q {
                params[3] = d;
                set(&mut x, 3, d);
                for e in 0..q {
                    params[4] = e;
                    set(&mut x, 4, e);
                    match &kernel {
                        Some(k) => k.rank_sequence(&x, &mut ranks),
                        None => {
                            template.fill(&mut m, &params);
                            m.rank_sequence_into(&mut ws, &mut ranks_vec)?;
                            ranks.copy_from_slice(&ranks_vec);
                        }
                    }
                    let gp = G2Params::from_array(params);
                    let predicted = pred.predict(&gp);
                    if ranks != predicted {
                        return Err(Error::PredictionMismatch {
                            params,
                            predicted: predicted.to_vec(),
                            actual: ranks.to_vec(),
                        });
                    }
                    *by_ranks.entry(predicted).or_insert(0) += 1;
                    if case != 1 {
                        AuxCount::classify(&pred, &gp, &mut aux_hits);
                        for &h in &aux_hits {
                            *aux.entry(h).or_insert(0) += 1;
                        }
                    }
                }
            }
        }
    }
    let mut report = CensusReport {
        q: q as u64,
        aux,
        ..CensusReport::default()
    };
    for (r, n) in by_ranks {
        *report.counts.entry(partition_of_ranks(&r)?).or_insert(0) += n;
        report.cases.insert(CaseKey { case, ranks: r }, n);
        report.total += n;
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn x_entries() {
        let f5 = FieldCtx::prime(5).unwrap();
        let x = x_of(&G2Params::from_array([1, 0, 0, 0, 0, 1]), &f5).unwrap();
        assert_eq!(x.get(2, 3), 2);
        assert_eq!(x.get(1, 2), 1);
        assert_eq!(x.rank(), 6);
        assert!(x_of(&G2Params::default(), &f5).unwrap().is_zero());
        let y = x_of(&G2Params::from_array([0, 0, 0, 1, 0, 0]), &f5).unwrap();
        assert_eq!(y.rank_sequence().unwrap(), vec![2, 0, 0, 0, 0, 0]);
        let f3 = FieldCtx::prime(3).unwrap();
        assert!(matches!(
            x_of(&G2Params::default(), &f3),
            Err(Error::BadCharacteristic(3))
        ));
    }

    #[test]
    fn census_over_gf5() {
        let f5 = FieldCtx::prime(5).unwrap();
        let r = g2_census(&f5, Exec::Sequential, 1 << 20).unwrap();
        let got: Vec<u64> = r.counts.values().copied().collect();
        assert_eq!(got, [10000, 4400, 1100, 124, 1]);
        assert_eq!(r.total, 15625);
        assert_eq!(r.complement_331(), 4400);
        assert!(r.cases_consistent());
        assert!(matches!(
            g2_census(&f5, Exec::Sequential, 1000),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn seventh_power_vanishes() {
        let f7 = FieldCtx::prime(7).unwrap();
        for s in 0..200u32 {
            let p = [s % 7, s / 7 % 7, (s * 3) % 7, (s + 1) % 7, (s * 5 + 2) % 7, s / 49 % 7];
            let x = x_of(&G2Params::from_array(p), &f7).unwrap();
            assert!(x.pow(7).is_zero());
        }
    }
}
