//! Chevalley basis of the positive part of g2 in the 7-dimensional
//! representation, and the symbolic matrix `X` with its powers.

use std::fmt;

use crate::error::{Error, Result};
use crate::intpoly::{MultiPoly, Var};

pub const DIM: usize = 7;

pub type IntMat = [[i64; DIM]; DIM];

/// Positive roots, in the order of the coordinates `a, b, c, d, e, f`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Root {
    A1,
    A1A2,
    TwoA1A2,
    ThreeA1A2,
    ThreeA1TwoA2,
    A2,
}

impl Root {
    pub const ALL: [Root; 6] = [
        Root::A1,
        Root::A1A2,
        Root::TwoA1A2,
        Root::ThreeA1A2,
        Root::ThreeA1TwoA2,
        Root::A2,
    ];

    /// Index of the coordinate multiplying this root in `X`.
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn var(self) -> Var {
        Var::ALL[self.index()]
    }

    /// `(k1, k2)` with root `k1 α1 + k2 α2`.
    pub fn coefficients(self) -> (u32, u32) {
        match self {
            Root::A1 => (1, 0),
            Root::A2 => (0, 1),
            Root::A1A2 => (1, 1),
            Root::TwoA1A2 => (2, 1),
            Root::ThreeA1A2 => (3, 1),
            Root::ThreeA1TwoA2 => (3, 2),
        }
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let term = |k: u32, s: &str| match k {
            0 => String::new(),
            1 => s.to_string(),
            k => format!("{k}{s}"),
        };
        let (k1, k2) = self.coefficients();
        let parts: Vec<String> = [term(k1, "α1"), term(k2, "α2")]
            .into_iter()
            .filter(|s| !s.is_empty())
            .collect();
        f.write_str(&parts.join("+"))
    }
}

fn unit(i: usize, j: usize) -> IntMat {
    let mut m = [[0; DIM]; DIM];
    m[i - 1][j - 1] = 1;
    m
}

fn lin(terms: &[(i64, IntMat)]) -> IntMat {
    let mut out = [[0; DIM]; DIM];
    for (c, m) in terms {
        for i in 0..DIM {
            for j in 0..DIM {
                out[i][j] += c * m[i][j];
            }
        }
    }
    out
}

fn matmul(x: &IntMat, y: &IntMat) -> IntMat {
    let mut out = [[0; DIM]; DIM];
    for i in 0..DIM {
        for k in 0..DIM {
            if x[i][k] != 0 {
                for j in 0..DIM {
                    out[i][j] += x[i][k] * y[k][j];
                }
            }
        }
    }
    out
}

pub fn bracket(x: &IntMat, y: &IntMat) -> IntMat {
    lin(&[(1, matmul(x, y)), (-1, matmul(y, x))])
}

fn div_exact(m: &IntMat, d: i64, context: &str) -> Result<IntMat> {
    let mut out = *m;
    for row in out.iter_mut() {
        for x in row.iter_mut() {
            if *x % d != 0 {
                return Err(Error::InexactDivision {
                    divisor: d,
                    context: context.to_string(),
                });
            }
            *x /= d;
        }
    }
    Ok(out)
}

/// Images of the six positive root vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct G2Basis {
    matrices: [IntMat; 6],
}

impl G2Basis {
    pub fn get(&self, root: Root) -> &IntMat {
        &self.matrices[root.index()]
    }

    /// `Σ coeffs[i] · e_{root i}` in coordinate order `a..f`.
    pub fn combination(&self, coeffs: [i64; 6]) -> IntMat {
        let terms: Vec<(i64, IntMat)> = Root::ALL
            .iter()
            .map(|&r| (coeffs[r.index()], *self.get(r)))
            .collect();
        lin(&terms)
    }

    pub fn all_strictly_upper(&self) -> bool {
        self.matrices
            .iter()
            .all(|m| (0..DIM).all(|i| (0..=i).all(|j| m[i][j] == 0)))
    }

    /// `X` with symbolic entries in `a..f`.
    pub fn symbolic_x(&self) -> SymMatrix {
        let mut out = SymMatrix::zero();
        for r in Root::ALL {
            let m = self.get(r);
            let v = MultiPoly::var(r.var());
            for i in 0..DIM {
                for j in 0..DIM {
                    if m[i][j] != 0 {
                        out.entries[i][j] = &out.entries[i][j] + &v.scale(m[i][j]);
                    }
                }
            }
        }
        out
    }

    /// Nonzero entries of `X` as `(coordinate, row, col, coefficient)`,
    /// 0-based.
    pub fn template_terms(&self) -> Vec<(usize, usize, usize, i64)> {
        let mut out = Vec::new();
        for r in Root::ALL {
            let m = self.get(r);
            for i in 0..DIM {
                for j in 0..DIM {
                    if m[i][j] != 0 {
                        out.push((r.index(), i, j, m[i][j]));
                    }
                }
            }
        }
        out
    }
}

/// Builds the basis from the two simple root vectors by brackets.
pub fn build_chevalley() -> Result<G2Basis> {
    let e1 = lin(&[(1, unit(1, 2)), (2, unit(3, 4)), (1, unit(4, 5)), (1, unit(6, 7))]);
    let e2 = lin(&[(1, unit(2, 3)), (1, unit(5, 6))]);
    let e12 = bracket(&e1, &e2);
    let e2_1_1 = div_exact(&bracket(&e12, &e1), 2, "[e_{α1+α2}, e_{α1}] / 2")?;
    let e3_1_1 = div_exact(&bracket(&e2_1_1, &e1), 3, "[e_{2α1+α2}, e_{α1}] / 3")?;
    let e3_1_2 = bracket(&e3_1_1, &e2);
    Ok(G2Basis {
        matrices: [e1, e12, e2_1_1, e3_1_1, e3_1_2, e2],
    })
}

/// Square matrix of [`MultiPoly`] entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymMatrix {
    pub entries: Vec<Vec<MultiPoly>>,
}

impl SymMatrix {
    pub fn zero() -> Self {
        Self {
            entries: vec![vec![MultiPoly::zero(); DIM]; DIM],
        }
    }

    pub fn parse(rows: &[[&str; DIM]; DIM]) -> Result<Self> {
        let entries = rows
            .iter()
            .map(|row| row.iter().map(|s| s.parse()).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { entries })
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for i in 0..DIM {
            for j in 0..DIM {
                let mut acc = MultiPoly::zero();
                for k in 0..DIM {
                    let (x, y) = (&self.entries[i][k], &rhs.entries[k][j]);
                    if !x.is_zero() && !y.is_zero() {
                        acc = &acc + &(x * y);
                    }
                }
                out.entries[i][j] = acc;
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(MultiPoly::is_zero)
    }

    pub fn nonzero_count(&self) -> usize {
        self.entries.iter().flatten().filter(|p| !p.is_zero()).count()
    }

    pub fn substitute(&self, v: Var, value: i64) -> Self {
        Self {
            entries: self
                .entries
                .iter()
                .map(|row| row.iter().map(|p| p.substitute(v, value)).collect())
                .collect(),
        }
    }
}

const Z: &str = "0";

/// `X` as displayed.
pub const DISPLAYED_X: [[&str; DIM]; DIM] = [
    [Z, "a", "b", "2c", "d", "e", Z],
    [Z, Z, "f", "-2b", "-c", Z, "e"],
    [Z, Z, Z, "2a", Z, "-c", "-d"],
    [Z, Z, Z, Z, "a", "b", "c"],
    [Z, Z, Z, Z, Z, "f", "-b"],
    [Z, Z, Z, Z, Z, Z, "a"],
    [Z; DIM],
];

/// `X^2 .. X^6` as displayed; index `k` holds `X^{k+2}`. The printed `X^6`
/// shows six rows; its seventh row is zero.
pub const DISPLAYED_POWERS: [[[&str; DIM]; DIM]; 5] = [
    [
        [Z, Z, "af", Z, "ac", "bc+df", "2ae-2bd+2c^2"],
        [Z, Z, Z, "2af", "-2ab", "-2b^2-2cf", "-bc-df"],
        [Z, Z, Z, Z, "2a^2", "2ab", "ac"],
        [Z, Z, Z, Z, Z, "af", Z],
        [Z, Z, Z, Z, Z, Z, "af"],
        [Z; DIM],
        [Z; DIM],
    ],
    [
        [Z, Z, Z, "2a^2f", Z, Z, Z],
        [Z, Z, Z, Z, "2a^2f", Z, Z],
        [Z, Z, Z, Z, Z, "2a^2f", Z],
        [Z, Z, Z, Z, Z, Z, "a^2f"],
        [Z; DIM],
        [Z; DIM],
        [Z; DIM],
    ],
    [
        [Z, Z, Z, Z, "2a^3f", "2a^2bf", "2a^2cf"],
        [Z, Z, Z, Z, Z, "2a^2f^2", "-2a^2bf"],
        [Z, Z, Z, Z, Z, Z, "2a^3f"],
        [Z; DIM],
        [Z; DIM],
        [Z; DIM],
        [Z; DIM],
    ],
    [
        [Z, Z, Z, Z, Z, "2a^3f^2", Z],
        [Z, Z, Z, Z, Z, Z, "2a^3f^2"],
        [Z; DIM],
        [Z; DIM],
        [Z; DIM],
        [Z; DIM],
        [Z; DIM],
    ],
    [
        [Z, Z, Z, Z, Z, Z, "2a^4f^2"],
        [Z; DIM],
        [Z; DIM],
        [Z; DIM],
        [Z; DIM],
        [Z; DIM],
        [Z; DIM],
    ],
];

/// One entry where a computed matrix differs from its displayed form.
/// `row` and `col` are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EntryMismatch {
    pub power: u32,
    pub row: usize,
    pub col: usize,
    pub expected: MultiPoly,
    pub actual: MultiPoly,
}

#[derive(Debug, Clone)]
pub struct PowersReport {
    /// Powers compared, starting at 1 for `X` itself.
    pub powers: Vec<u32>,
    pub entries_checked: usize,
    pub mismatches: Vec<EntryMismatch>,
    /// `X^7 = 0` symbolically.
    pub seventh_power_zero: bool,
}

impl PowersReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty() && self.seventh_power_zero
    }
}

fn compare(power: u32, expected: &SymMatrix, actual: &SymMatrix, out: &mut Vec<EntryMismatch>) {
    for i in 0..DIM {
        for j in 0..DIM {
            if expected.entries[i][j] != actual.entries[i][j] {
                out.push(EntryMismatch {
                    power,
                    row: i + 1,
                    col: j + 1,
                    expected: expected.entries[i][j].clone(),
                    actual: actual.entries[i][j].clone(),
                });
            }
        }
    }
}

/// Compares the assembled `X` and its powers up to 6 with the displayed
/// matrices entry by entry.
pub fn verify_displayed_powers() -> Result<PowersReport> {
    let basis = build_chevalley()?;
    let x = basis.symbolic_x();
    let mut mismatches = Vec::new();
    compare(1, &SymMatrix::parse(&DISPLAYED_X)?, &x, &mut mismatches);
    let mut power = x.clone();
    for (k, displayed) in DISPLAYED_POWERS.iter().enumerate() {
        power = power.mul(&x);
        compare(k as u32 + 2, &SymMatrix::parse(displayed)?, &power, &mut mismatches);
    }
    let seventh_power_zero = power.mul(&x).is_zero();
    Ok(PowersReport {
        powers: (1..=6).collect(),
        entries_checked: 6 * DIM * DIM,
        mismatches,
        seventh_power_zero,
    })
}
