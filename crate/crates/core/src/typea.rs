//! Type A: strictly upper-triangular `n x n` matrices.
//!
//! `P_λ(q)` counts those of Jordan type `λ`. It satisfies the removable-cell
//! recursion
//!
//! ```text
//! P_λ = Σ_j (q^{n - λ'_{y_j}} - q^{n - 1 - λ'_{y_j - 1}}) P_{λ↓j},   P_∅ = 1,
//! ```
//!
//! where cell `j` sits in column `y_j` and the subtracted term is absent for
//! `y_j = 1`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::field::FieldCtx;
use crate::intpoly::{irreducibility, split_qfactors, IntPoly, IrreducibilityVerdict, SplitForm};
use crate::matrix::{FMatrix, RankWorkspace};
use crate::par::{fold_slices, Exec};
use crate::partition::{partitions_of, Partition};

/// Memo table for the recursion, shared by every partition size.
#[derive(Debug, Default)]
pub struct KirillovMemo {
    table: HashMap<Partition, IntPoly>,
}

impl KirillovMemo {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    pub fn get(&mut self, lambda: &Partition) -> IntPoly {
        if let Some(p) = self.table.get(lambda) {
            return p.clone();
        }
        let n = lambda.size();
        let mut total = IntPoly::zero();
        for cell in lambda.removable_cells() {
            let y = cell.col;
            let mut weight = IntPoly::monomial(1, n - lambda.dual_part(y));
            if y > 1 {
                weight = weight - IntPoly::monomial(1, n - 1 - lambda.dual_part(y - 1));
            }
            let smaller = lambda.remove_cell(cell.index).expect("cell is removable");
            total = total + weight * self.get(&smaller);
        }
        if lambda.is_empty() {
            total = IntPoly::one();
        }
        self.table.insert(lambda.clone(), total.clone());
        total
    }
}

fn global_memo() -> &'static Mutex<KirillovMemo> {
    static MEMO: OnceLock<Mutex<KirillovMemo>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(KirillovMemo::new()))
}

/// `P_λ(q)`, memoized process-wide.
pub fn kirillov_recursion(lambda: &Partition) -> IntPoly {
    global_memo()
        .lock()
        .unwrap_or_else(|e| e.into_inner())
        .get(lambda)
}

/// Exponents and leading data of `P_λ = q^a (q-1)^b R_λ` predicted from the
/// shape alone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValuationProfile {
    pub a_expected: usize,
    pub b_expected: usize,
    pub deg_r_expected: usize,
    pub lead_r_expected: BigUint,
}

fn choose2(x: usize) -> usize {
    x * x.saturating_sub(1) / 2
}

pub fn valuation_profile(lambda: &Partition) -> ValuationProfile {
    let n = lambda.size();
    let big_n = lambda.len();
    let dual = lambda.dual();
    let dp = dual.parts();
    let adjacent: usize = dp.windows(2).map(|w| w[0] * w[1]).sum();
    let column_triangles: usize = dp.iter().skip(1).map(|&c| choose2(c + 1)).sum();
    ValuationProfile {
        a_expected: choose2(n) - choose2(big_n) - adjacent,
        b_expected: n - big_n,
        deg_r_expected: adjacent - column_triangles,
        lead_r_expected: lambda.hook_dimension(),
    }
}

/// Comparison of the recursion output with its predicted shape.
#[derive(Debug, Clone)]
pub struct ProfileRow {
    pub partition: Partition,
    pub poly: IntPoly,
    pub split: SplitForm,
    pub profile: ValuationProfile,
}

impl ProfileRow {
    pub fn new(partition: Partition) -> Self {
        let poly = kirillov_recursion(&partition);
        let split = split_qfactors(&poly).expect("Kirillov polynomials are nonzero");
        let profile = valuation_profile(&partition);
        Self {
            partition,
            poly,
            split,
            profile,
        }
    }

    pub fn exponents_match(&self) -> bool {
        self.split.a == self.profile.a_expected && self.split.b == self.profile.b_expected
    }

    pub fn degree_matches(&self) -> bool {
        self.split.r.degree() == Some(self.profile.deg_r_expected)
    }

    pub fn lead_matches(&self) -> bool {
        self.split.r.leading_coeff() == Some(&BigInt::from(self.profile.lead_r_expected.clone()))
    }

    pub fn constant_term_is_one(&self) -> bool {
        self.split.r.coeff(0).is_one()
    }

    pub fn coefficients_positive(&self) -> bool {
        self.split.r.coeffs().iter().all(Signed::is_positive)
    }

    pub fn all_ok(&self) -> bool {
        self.exponents_match()
            && self.degree_matches()
            && self.lead_matches()
            && self.constant_term_is_one()
            && self.coefficients_positive()
            && self.split.reconstruct() == self.poly
    }
}

/// Profile rows for every partition of `1..=n_max`.
pub fn profile_table(n_max: usize) -> Vec<ProfileRow> {
    (1..=n_max)
        .flat_map(partitions_of)
        .map(ProfileRow::new)
        .collect()
}

/// `Σ_{λ ⊢ n} P_λ = q^{C(n,2)}` as polynomials.
pub fn conservation_holds(n: usize) -> bool {
    let total: IntPoly = partitions_of(n).iter().map(kirillov_recursion).sum();
    total == IntPoly::monomial(1, choose2(n))
}

/// Counts of strictly upper-triangular `n x n` matrices over `ctx` by Jordan
/// type, by exhaustive enumeration.
///
/// The `C(n,2)` free entries are walked as a mixed-radix counter in row-major
/// order; the first two entries pick the slice a worker owns.
pub fn brute_force_census(
    n: usize,
    ctx: &FieldCtx,
    exec: Exec,
    budget: u64,
) -> Result<BTreeMap<Partition, u64>> {
    let positions: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let q = ctx.order() as u64;
    let size = (q as u128).pow(positions.len() as u32);
    if size > budget as u128 {
        return Err(Error::TooLarge { size, budget });
    }
    let fixed = positions.len().min(2);
    let slices = q.pow(fixed as u32) as usize;
    let by_ranks = fold_slices(
        exec,
        slices,
        |slice| census_slice(n, ctx, &positions, fixed, slice),
        merge_counts,
    )?;
    let mut out = BTreeMap::new();
    for (ranks, count) in by_ranks {
        let lambda = Partition::jordan_type_from_ranks(&ranks, n)?;
        *out.entry(lambda).or_insert(0) += count;
    }
    Ok(out)
}

fn merge_counts<K: Ord>(mut a: BTreeMap<K, u64>, b: BTreeMap<K, u64>) -> BTreeMap<K, u64> {
    for (k, v) in b {
        *a.entry(k).or_insert(0) += v;
    }
    a
}

fn census_slice(
    n: usize,
    ctx: &FieldCtx,
    positions: &[(usize, usize)],
    fixed: usize,
    slice: usize,
) -> Result<BTreeMap<Vec<usize>, u64>> {
    let q = ctx.order();
    let mut m = FMatrix::zero(ctx, n);
    let mut rest = slice as u32;
    for &(i, j) in &positions[..fixed] {
        m.set(i, j, rest % q);
        rest /= q;
    }
    let free = &positions[fixed..];
    let mut ws = RankWorkspace::new(ctx, n);
    let mut ranks = Vec::with_capacity(n);
    let mut tally: HashMap<Vec<usize>, u64> = HashMap::new();
    loop {
        m.rank_sequence_into(&mut ws, &mut ranks)?;
        match tally.get_mut(&ranks) {
            Some(c) => *c += 1,
            None => {
                tally.insert(ranks.clone(), 1);
            }
        }
        // mixed-radix increment
        let mut k = 0;
        loop {
            if k == free.len() {
                return Ok(tally.into_iter().collect());
            }
            let (i, j) = free[k];
            let v = m.get(i, j) + 1;
            if v < q {
                m.set(i, j, v);
                break;
            }
            m.set(i, j, 0);
            k += 1;
        }
    }
}

/// One transcribed row of the `n = 4` conjugacy-class table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VlaRow {
    /// Entry types in the order (3,4) < (2,3) < (2,4) < (1,2) < (1,3) < (1,4):
    /// `θ` ramification point with zero entry, `•` with nonzero entry,
    /// `0` inert point.
    pub type_string: &'static str,
    pub jordan_type: Partition,
    pub count: IntPoly,
}

impl VlaRow {
    pub fn bullet_count(&self) -> usize {
        self.type_string.chars().filter(|&c| c == '•').count()
    }
}

/// `(type, Jordan type, exponent of q, exponent of q-1)`.
const VLA_ROWS: [(&str, &str, usize, usize); 16] = [
    ("θθθθθθ", "1,1,1,1", 0, 0),
    ("θθθθθ•", "2,1,1", 0, 1),
    ("θθ•θθ0", "2,1,1", 1, 1),
    ("θ•0θ0θ", "2,1,1", 2, 1),
    ("•θ0θθ0", "2,1,1", 2, 1),
    ("•θ0••0", "3,1", 2, 3),
    ("θθθθ•0", "2,1,1", 1, 1),
    ("θθ•θ•0", "2,2", 1, 2),
    ("θ•0θ0•", "2,2", 2, 2),
    ("•θ0θ•0", "3,1", 2, 2),
    ("••0θ00", "3,1", 3, 2),
    ("θθθ•00", "2,1,1", 2, 1),
    ("θθ••00", "3,1", 2, 2),
    ("θ•0•00", "3,1", 3, 2),
    ("•θ0•θ0", "2,2", 2, 2),
    ("••0•00", "4", 3, 3),
];

pub fn vla_rows() -> Vec<VlaRow> {
    VLA_ROWS
        .iter()
        .map(|&(t, jt, qe, q1e)| VlaRow {
            type_string: t,
            jordan_type: jt.parse().expect("valid partition"),
            count: IntPoly::monomial(1, qe) * IntPoly::q_minus_one().pow(q1e as u32),
        })
        .collect()
}

/// One checked polynomial identity.
#[derive(Debug, Clone)]
pub struct Identity {
    pub label: String,
    pub lhs: IntPoly,
    pub rhs: IntPoly,
}

impl Identity {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Reconciles the `n = 4` class table with the recursion: per Jordan type the
/// row counts add up to `P_λ`, the number of classes is `2q^3 + q^2 - 2q`,
/// and every row's `(q-1)` exponent equals its number of `•` entries.
pub fn vla_table_n4() -> Vec<Identity> {
    let rows = vla_rows();
    let mut out = Vec::new();
    for lambda in partitions_of(4) {
        let lhs: IntPoly = rows
            .iter()
            .filter(|r| r.jordan_type == lambda)
            .map(|r| r.count.clone())
            .sum();
        out.push(Identity {
            label: format!("sum of rows of Jordan type {lambda}"),
            lhs,
            rhs: kirillov_recursion(&lambda),
        });
    }
    let classes: IntPoly = rows
        .iter()
        .map(|r| IntPoly::q_minus_one().pow(r.bullet_count() as u32))
        .sum();
    out.push(Identity {
        label: "number of classes".into(),
        lhs: classes,
        rhs: IntPoly::from_i64s(&[0, -2, 1, 2]),
    });
    for r in &rows {
        let split = split_qfactors(&r.count).expect("nonzero");
        out.push(Identity {
            label: format!("(q-1) exponent of row {}", r.type_string),
            lhs: IntPoly::constant(split.b as i64),
            rhs: IntPoly::constant(r.bullet_count() as i64),
        });
    }
    out
}

/// `R_λ` and its irreducibility verdict.
#[derive(Debug, Clone)]
pub struct ScanEntry {
    pub partition: Partition,
    pub r: IntPoly,
    pub verdict: IrreducibilityVerdict,
}

/// Runs the irreducibility pipeline on `R_λ` for every `λ ⊢ n`, `n <= n_max`.
/// Every reducible verdict is re-multiplied before it is returned.
pub fn reducibility_scan(n_max: usize, exec: Exec) -> Result<Vec<ScanEntry>> {
    let items: Vec<(Partition, IntPoly)> = (1..=n_max)
        .flat_map(partitions_of)
        .map(|lambda| {
            let r = split_qfactors(&kirillov_recursion(&lambda))
                .expect("nonzero")
                .r;
            (lambda, r)
        })
        .collect();
    let entries = fold_slices(
        exec,
        items.len(),
        |i| {
            let (lambda, r) = &items[i];
            let verdict = irreducibility(r)?;
            if let IrreducibilityVerdict::Reducible(f) = &verdict {
                let product = f.iter().fold(IntPoly::one(), |acc, g| acc * g);
                assert_eq!(&product, r, "factors of R_{lambda} do not multiply back");
            }
            Ok(vec![ScanEntry {
                partition: lambda.clone(),
                r: r.clone(),
                verdict,
            }])
        },
        |mut a, b| {
            a.extend(b);
            a
        },
    )?;
    Ok(entries)
}

/// Only the reducible entries of a scan.
pub fn reducible_entries(entries: &[ScanEntry]) -> Vec<&ScanEntry> {
    entries.iter().filter(|e| e.verdict.is_reducible()).collect()
}

/// Value of `P_λ` at `q`, as an unsigned count.
pub fn eval_count(p: &IntPoly, q: u64) -> BigInt {
    let v = p.eval(&BigInt::from(q));
    debug_assert!(!v.is_negative() || v.is_zero());
    v
}
