//! Rank-sequence predicates for `X(a, .., f)` and the closed-form counts
//! they lead to.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Elem, FieldCtx};
use crate::intpoly::IntPoly;
use crate::partition::Partition;

/// Coordinates of `X` on the positive root vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct G2Params {
    pub a: Elem,
    pub b: Elem,
    pub c: Elem,
    pub d: Elem,
    pub e: Elem,
    pub f: Elem,
}

impl G2Params {
    pub fn from_array([a, b, c, d, e, f]: [Elem; 6]) -> Self {
        Self { a, b, c, d, e, f }
    }

    pub fn to_array(self) -> [Elem; 6] {
        [self.a, self.b, self.c, self.d, self.e, self.f]
    }
}

pub type RankSeq = [usize; 6];

pub const SEQ_REGULAR: RankSeq = [6, 5, 4, 3, 2, 1];
pub const SEQ_42: RankSeq = [4, 2, 0, 0, 0, 0];
pub const SEQ_41: RankSeq = [4, 1, 0, 0, 0, 0];
pub const SEQ_20: RankSeq = [2, 0, 0, 0, 0, 0];
pub const SEQ_ZERO: RankSeq = [0; 6];

pub(crate) fn require_char(ctx: &FieldCtx) -> Result<()> {
    if ctx.characteristic() <= 3 {
        return Err(Error::BadCharacteristic(ctx.characteristic()));
    }
    Ok(())
}

/// Case 1..4 from whether `a` and `f` vanish.
pub fn case_of(a: Elem, f: Elem) -> u8 {
    match (a != 0, f != 0) {
        (true, true) => 1,
        (false, true) => 2,
        (true, false) => 3,
        (false, false) => 4,
    }
}

/// The polynomial expressions the case analysis tests for vanishing.
pub(crate) struct Predicates<'f> {
    ctx: &'f FieldCtx,
    three: Elem,
    four: Elem,
}

impl<'f> Predicates<'f> {
    pub fn new(ctx: &'f FieldCtx) -> Self {
        Self {
            ctx,
            three: ctx.from_i64(3),
            four: ctx.from_i64(4),
        }
    }

    /// `b^2 + cf`
    pub fn u(&self, p: &G2Params) -> Elem {
        let k = self.ctx;
        k.add(k.mul(p.b, p.b), k.mul(p.c, p.f))
    }

    /// `bc + df`
    pub fn v(&self, p: &G2Params) -> Elem {
        let k = self.ctx;
        k.add(k.mul(p.b, p.c), k.mul(p.d, p.f))
    }

    /// `c^2 - bd`
    pub fn disc(&self, p: &G2Params) -> Elem {
        let k = self.ctx;
        k.sub(k.mul(p.c, p.c), k.mul(p.b, p.d))
    }

    /// `(bc + df)^2 - 4 (b^2 + cf)(c^2 - bd)`
    pub fn eq4(&self, p: &G2Params) -> Elem {
        let k = self.ctx;
        let v = self.v(p);
        k.sub(k.mul(v, v), k.mul(self.four, k.mul(self.u(p), self.disc(p))))
    }

    /// `4ae - 4bd + 3c^2`
    pub fn case3(&self, p: &G2Params) -> Elem {
        let k = self.ctx;
        let t = k.sub(k.mul(p.a, p.e), k.mul(p.b, p.d));
        k.add(k.mul(self.four, t), k.mul(self.three, k.mul(p.c, p.c)))
    }

    /// `3c^2 - 4bd`
    pub fn case4(&self, p: &G2Params) -> Elem {
        let k = self.ctx;
        k.sub(k.mul(self.three, k.mul(p.c, p.c)), k.mul(self.four, k.mul(p.b, p.d)))
    }

    pub fn predict(&self, p: &G2Params) -> RankSeq {
        match case_of(p.a, p.f) {
            1 => SEQ_REGULAR,
            2 => {
                if self.u(p) == 0 && self.v(p) == 0 {
                    SEQ_20
                } else if self.eq4(p) == 0 {
                    SEQ_41
                } else {
                    SEQ_42
                }
            }
            3 => {
                if self.case3(p) == 0 {
                    SEQ_41
                } else {
                    SEQ_42
                }
            }
            _ => {
                let r1 = if p.b != 0 || p.c != 0 {
                    4
                } else if p.d != 0 || p.e != 0 {
                    2
                } else {
                    0
                };
                let r2 = if p.b != 0 {
                    if self.case4(p) == 0 {
                        1
                    } else {
                        2
                    }
                } else if p.c != 0 {
                    1
                } else {
                    0
                };
                [r1, r2, 0, 0, 0, 0]
            }
        }
    }
}

/// Rank sequence of `X(params)` as dictated by the case analysis, without
/// touching the matrix.
pub fn predicted_rank_sequence(params: &G2Params, ctx: &FieldCtx) -> Result<RankSeq> {
    require_char(ctx)?;
    Ok(Predicates::new(ctx).predict(params))
}

/// Sub-counts that appear on the way to the per-case totals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AuxCount {
    /// `a = 0`, `f != 0`, `b^2 + cf = 0 = bc + df`, `b = 0`.
    Case2VanishingBZero,
    /// Same with `b != 0`.
    Case2VanishingBNonzero,
    /// `a = 0`, discriminant equation holds, `d != 0`; `f` unrestricted.
    DiscriminantDNonzero,
    /// `a = 0`, discriminant equation holds, `d = 0`.
    DiscriminantDZero,
    /// `a = 0`, discriminant equation holds, `f = 0`.
    DiscriminantFZero,
    /// `a = 0`, discriminant equation holds, `f != 0`.
    DiscriminantFNonzero,
    /// `a = f = 0`, `b != 0`, `3c^2 = 4bd`.
    Case4BNonzero,
    /// `a = f = 0`, `b = 0`, `c != 0`.
    Case4BZero,
}

impl AuxCount {
    pub const ALL: [AuxCount; 8] = [
        AuxCount::Case2VanishingBZero,
        AuxCount::Case2VanishingBNonzero,
        AuxCount::DiscriminantDNonzero,
        AuxCount::DiscriminantDZero,
        AuxCount::DiscriminantFZero,
        AuxCount::DiscriminantFNonzero,
        AuxCount::Case4BNonzero,
        AuxCount::Case4BZero,
    ];

    pub fn label(self) -> &'static str {
        match self {
            AuxCount::Case2VanishingBZero => "case2 b^2+cf=0=bc+df, b=0",
            AuxCount::Case2VanishingBNonzero => "case2 b^2+cf=0=bc+df, b!=0",
            AuxCount::DiscriminantDNonzero => "a=0 discriminant eq, d!=0",
            AuxCount::DiscriminantDZero => "a=0 discriminant eq, d=0",
            AuxCount::DiscriminantFZero => "a=0 discriminant eq, f=0",
            AuxCount::DiscriminantFNonzero => "a=0 discriminant eq, f!=0",
            AuxCount::Case4BNonzero => "case4 b!=0, 3c^2=4bd",
            AuxCount::Case4BZero => "case4 b=0, c!=0",
        }
    }

    /// The sub-counts `params` contributes to.
    pub(crate) fn classify(pred: &Predicates<'_>, p: &G2Params, out: &mut Vec<AuxCount>) {
        out.clear();
        if p.a != 0 {
            return;
        }
        if p.f != 0 && pred.u(p) == 0 && pred.v(p) == 0 {
            out.push(if p.b == 0 {
                AuxCount::Case2VanishingBZero
            } else {
                AuxCount::Case2VanishingBNonzero
            });
        }
        if pred.eq4(p) == 0 {
            out.push(if p.d != 0 {
                AuxCount::DiscriminantDNonzero
            } else {
                AuxCount::DiscriminantDZero
            });
            out.push(if p.f == 0 {
                AuxCount::DiscriminantFZero
            } else {
                AuxCount::DiscriminantFNonzero
            });
        }
        if p.f == 0 {
            if p.b != 0 && pred.case4(p) == 0 {
                out.push(AuxCount::Case4BNonzero);
            } else if p.b == 0 && p.c != 0 {
                out.push(AuxCount::Case4BZero);
            }
        }
    }

    /// Closed form in `q`.
    pub fn closed_form(self) -> IntPoly {
        let q = IntPoly::q();
        let q1 = IntPoly::q_minus_one();
        match self {
            AuxCount::Case2VanishingBZero => q * q1,
            AuxCount::Case2VanishingBNonzero => q * q1.pow(2),
            AuxCount::DiscriminantDNonzero | AuxCount::DiscriminantFNonzero => q.pow(3) * q1,
            AuxCount::DiscriminantDZero | AuxCount::DiscriminantFZero => {
                q.pow(3) + q.pow(2) * q1
            }
            AuxCount::Case4BNonzero | AuxCount::Case4BZero => q.pow(2) * q1,
        }
    }
}

impl fmt::Display for AuxCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// A census cell: case number and rank sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CaseKey {
    pub case: u8,
    pub ranks: RankSeq,
}

/// Per-case totals derived in closed form, as polynomials in `q`.
/// Cells derived only by complement are absent.
pub fn case_count_polynomials() -> Vec<(CaseKey, IntPoly)> {
    let q = IntPoly::q();
    let q1 = IntPoly::q_minus_one();
    let key = |case, ranks| CaseKey { case, ranks };
    vec![
        (key(1, SEQ_REGULAR), q.pow(4) * q1.pow(2)),
        (key(2, SEQ_41), q.pow(2) * q1.pow(2)),
        (key(2, SEQ_20), q.pow(2) * q1.clone()),
        (key(3, SEQ_41), q.pow(3) * q1.clone()),
        (key(4, SEQ_41), IntPoly::constant(2) * q.pow(2) * q1.clone()),
        (key(4, SEQ_20), q1 * (q + IntPoly::one())),
        (key(4, SEQ_ZERO), IntPoly::one()),
    ]
}

/// Labelled closed-form counts evaluated at `q`: per-case cells first, then
/// the auxiliary sub-counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClosedFormLabel {
    Case(CaseKey),
    Aux(AuxCount),
}

impl fmt::Display for ClosedFormLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClosedFormLabel::Case(k) => write!(f, "case{} {}", k.case, fmt_ranks(&k.ranks)),
            ClosedFormLabel::Aux(a) => f.write_str(a.label()),
        }
    }
}

pub fn fmt_ranks(r: &[usize]) -> String {
    let parts: Vec<String> = r.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

pub fn closed_form_case_counts(q: u64) -> Vec<(ClosedFormLabel, u64)> {
    let eval = |p: &IntPoly| -> u64 {
        u64::try_from(p.eval_i64(q as i64)).expect("count fits in u64")
    };
    let mut out: Vec<(ClosedFormLabel, u64)> = case_count_polynomials()
        .iter()
        .map(|(k, p)| (ClosedFormLabel::Case(*k), eval(p)))
        .collect();
    out.extend(
        AuxCount::ALL
            .iter()
            .map(|&a| (ClosedFormLabel::Aux(a), eval(&a.closed_form()))),
    );
    out
}

/// Partition for each rank sequence that occurs.
pub fn partition_of_ranks(r: &RankSeq) -> Result<Partition> {
    Partition::jordan_type_from_ranks(r, 7)
}

/// The five g2 Kirillov polynomials in closed form.
pub fn theorem1_polynomials() -> Vec<(Partition, IntPoly)> {
    let q = IntPoly::q();
    let q1 = IntPoly::q_minus_one();
    let one_2q = IntPoly::from_i64s(&[1, 2]);
    let p = |s: &str| -> Partition { s.parse().expect("valid partition") };
    vec![
        (p("7"), q.pow(4) * q1.pow(2)),
        (p("3,3,1"), q.pow(2) * q1.pow(2) * one_2q.clone()),
        (p("3,2,2"), q.pow(2) * q1.clone() * one_2q),
        (p("2,2,1,1,1"), q1 * IntPoly::from_i64s(&[1, 1, 1])),
        (p("1,1,1,1,1,1,1"), IntPoly::one()),
    ]
}

/// `(3,3,1)` by complement: `q^6` minus the other four.
pub fn theorem1_complement() -> IntPoly {
    let target: Partition = "3,3,1".parse().expect("valid partition");
    theorem1_polynomials()
        .into_iter()
        .filter(|(l, _)| *l != target)
        .fold(IntPoly::monomial(1, 6), |acc, (_, p)| acc - p)
}

/// Number of `f` with `a = 0` solving the discriminant equation, for each
/// `(b, c, d)` with `d != 0`, against the quadratic character of `c^2 - bd`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct DiscriminantTally {
    pub triples: u64,
    pub agreeing: u64,
    /// Triples with two, one and no `f` solutions.
    pub by_solutions: [u64; 3],
}

pub fn discriminant_structure(ctx: &FieldCtx) -> Result<DiscriminantTally> {
    require_char(ctx)?;
    let pred = Predicates::new(ctx);
    let mut t = DiscriminantTally::default();
    for b in ctx.elements() {
        for c in ctx.elements() {
            for d in ctx.elements().filter(|&d| d != 0) {
                let mut p = G2Params {
                    b,
                    c,
                    d,
                    ..G2Params::default()
                };
                let solutions = ctx
                    .elements()
                    .filter(|&f| {
                        p.f = f;
                        pred.eq4(&p) == 0
                    })
                    .count();
                let disc = pred.disc(&p);
                let expected = match ctx.quadratic_character(disc) {
                    1 => 2,
                    0 => 1,
                    _ => 0,
                };
                t.triples += 1;
                if solutions == expected {
                    t.agreeing += 1;
                }
                if let Some(slot) = [2usize, 1, 0].iter().position(|&k| k == solutions) {
                    t.by_solutions[slot] += 1;
                }
            }
        }
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sample_predictions() {
        let f5 = FieldCtx::prime(5).unwrap();
        let p = |x: [Elem; 6]| predicted_rank_sequence(&G2Params::from_array(x), &f5).unwrap();
        assert_eq!(p([1, 2, 3, 4, 0, 1]), SEQ_REGULAR);
        assert_eq!(p([0, 0, 0, 0, 1, 1]), SEQ_20);
        assert_eq!(p([0, 0, 0, 1, 0, 0]), SEQ_20);
        assert_eq!(p([0; 6]), SEQ_ZERO);
        let f3 = FieldCtx::prime(3).unwrap();
        assert_eq!(
            predicted_rank_sequence(&G2Params::default(), &f3),
            Err(Error::BadCharacteristic(3))
        );
    }

    #[test]
    fn closed_forms_at_five() {
        let counts = closed_form_case_counts(5);
        let get = |case, ranks| {
            counts
                .iter()
                .find(|(l, _)| *l == ClosedFormLabel::Case(CaseKey { case, ranks }))
                .unwrap()
                .1
        };
        assert_eq!(get(2, SEQ_20), 100);
        assert_eq!(get(4, SEQ_20), 24);
        assert_eq!(get(3, SEQ_41), 500);
        assert_eq!(get(1, SEQ_REGULAR), 10000);
    }

    #[test]
    fn complement_agrees_with_closed_form() {
        let direct = theorem1_polynomials()[1].1.clone();
        assert_eq!(theorem1_complement(), direct);
        let total: IntPoly = theorem1_polynomials().into_iter().map(|(_, p)| p).sum();
        assert_eq!(total, IntPoly::monomial(1, 6));
    }

    #[test]
    fn rank_sequences_to_partitions() {
        let names: Vec<String> = [SEQ_REGULAR, SEQ_42, SEQ_41, SEQ_20, SEQ_ZERO]
            .iter()
            .map(|r| partition_of_ranks(r).unwrap().to_string())
            .collect();
        assert_eq!(names, ["7", "3,3,1", "3,2,2", "2,2,1,1,1", "1,1,1,1,1,1,1"]);
    }

    #[test]
    fn discriminant_square_classes() {
        for q in [5, 7] {
            let ctx = FieldCtx::prime(q).unwrap();
            let t = discriminant_structure(&ctx).unwrap();
            assert_eq!(t.triples, q * q * (q - 1));
            assert_eq!(t.agreeing, t.triples);
            let q = q as u64;
            // nonzero squares, zero, non-squares
            assert_eq!(t.by_solutions, [q * (q - 1).pow(2) / 2, q * (q - 1), q * (q - 1).pow(2) / 2]);
        }
    }

    #[test]
    fn case2_elimination_identity() {
        use crate::intpoly::MultiPoly;
        let m = |t: &str| t.parse::<MultiPoly>().unwrap();
        let lhs = &m("f") * &m("c^2 - bd");
        let rhs = &(&m("b^2 + cf") * &m("c")) - &(&m("bc + df") * &m("b"));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn g2_r_factors_are_irreducible() {
        use crate::intpoly::{irreducibility, split_qfactors};
        use num_bigint::BigInt;
        for (lambda, p) in theorem1_polynomials() {
            let s = split_qfactors(&p).unwrap();
            assert_eq!(s.r.coeff(0), BigInt::from(1), "{lambda}");
            assert!(s.r.coeffs().iter().all(|c| *c > BigInt::from(0)), "{lambda}");
            let v = irreducibility(&s.r).unwrap();
            assert!(!v.is_reducible() && v.recheck(&s.r), "{lambda}");
        }
    }
}
