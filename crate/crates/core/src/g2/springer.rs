//! Nilpotent orbits of g2, their Jordan types in the 7-dimensional
//! representation, and the Springer dimensions as leading coefficients.

use num_bigint::BigInt;

use crate::error::Result;
use crate::field::FieldCtx;
use crate::partition::{partitions_of, Partition};
use crate::typea::kirillov_recursion;

use super::basis::Root;
use super::cases::{theorem1_polynomials, G2Params};
use super::census::x_of;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpringerRow {
    pub orbit: &'static str,
    /// `(short, long)` weights; blank for the zero orbit.
    pub weighted_diagram: Option<(u8, u8)>,
    pub representative: Vec<Root>,
    pub partition: Partition,
    pub dimension: u64,
}

impl SpringerRow {
    pub fn representative_label(&self) -> String {
        if self.representative.is_empty() {
            return "0".into();
        }
        let terms: Vec<String> = self
            .representative
            .iter()
            .map(|r| format!("e_{{{r}}}"))
            .collect();
        terms.join(" + ")
    }

    pub fn params(&self) -> G2Params {
        let mut p = [0; 6];
        for r in &self.representative {
            p[r.index()] = 1;
        }
        G2Params::from_array(p)
    }
}

pub fn springer_table() -> Vec<SpringerRow> {
    let row = |orbit, wd, rep: &[Root], part: &str, dimension| SpringerRow {
        orbit,
        weighted_diagram: wd,
        representative: rep.to_vec(),
        partition: part.parse().expect("valid partition"),
        dimension,
    };
    vec![
        row("0", None, &[], "1,1,1,1,1,1,1", 1),
        row("A1", Some((0, 1)), &[Root::ThreeA1TwoA2], "2,2,1,1,1", 1),
        row("Ã1", Some((1, 0)), &[Root::TwoA1A2], "3,2,2", 2),
        row("A1+Ã1", Some((0, 2)), &[Root::A1, Root::TwoA1A2], "3,3,1", 2),
        row("G2", Some((2, 2)), &[Root::A1, Root::A2], "7", 1),
    ]
}

/// One comparison made by [`springer_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpringerCheck {
    pub label: String,
    pub expected: String,
    pub actual: String,
}

impl SpringerCheck {
    pub fn passed(&self) -> bool {
        self.expected == self.actual
    }
}

/// Jordan types of the table's representatives over `GF(5)`, leading
/// coefficients of the g2 polynomials against the tabulated dimensions, and
/// type-A leading coefficients against hook dimensions for `n <= type_a_max`.
pub fn springer_check(type_a_max: usize) -> Result<Vec<SpringerCheck>> {
    let f5 = FieldCtx::prime(5)?;
    let polys = theorem1_polynomials();
    let mut out = Vec::new();
    for row in springer_table() {
        let x = x_of(&row.params(), &f5)?;
        let jt = Partition::jordan_type_from_ranks(&x.rank_sequence()?, 7)?;
        out.push(SpringerCheck {
            label: format!("Jordan type of {} ({})", row.representative_label(), row.orbit),
            expected: row.partition.to_string(),
            actual: jt.to_string(),
        });
        let lead = polys
            .iter()
            .find(|(l, _)| *l == row.partition)
            .and_then(|(_, p)| p.leading_coeff().cloned())
            .unwrap_or_default();
        out.push(SpringerCheck {
            label: format!("leading coefficient of P_{} ({})", row.partition, row.orbit),
            expected: row.dimension.to_string(),
            actual: lead.to_string(),
        });
    }
    for n in 1..=type_a_max {
        for lambda in partitions_of(n) {
            let lead = kirillov_recursion(&lambda)
                .leading_coeff()
                .cloned()
                .unwrap_or_default();
            out.push(SpringerCheck {
                label: format!("type A leading coefficient of P_{lambda}"),
                expected: BigInt::from(lambda.hook_dimension()).to_string(),
                actual: lead.to_string(),
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_checks_pass() {
        let checks = springer_check(6).unwrap();
        for c in &checks {
            assert!(c.passed(), "{c:?}");
        }
        assert_eq!(checks.len(), 10 + 1 + 2 + 3 + 5 + 7 + 11);
    }

    #[test]
    fn labels() {
        let t = springer_table();
        assert_eq!(t[3].representative_label(), "e_{α1} + e_{2α1+α2}");
        assert_eq!(t[0].representative_label(), "0");
    }
}
