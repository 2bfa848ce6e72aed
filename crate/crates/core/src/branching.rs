//! Branching factors of the compression rules.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::compression::{RuleId, RuleKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BranchVectorError {
    #[error("a branch vector needs at least two branches, got {0}")]
    TooFewBranches(usize),
    #[error("branch sizes must be positive")]
    ZeroBranch,
}

/// Sizes `(|X1|, ..., |Xl|)` of the sets deleted by each branch.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BranchVector(Vec<usize>);

impl BranchVector {
    pub fn new(sizes: Vec<usize>) -> Result<Self, BranchVectorError> {
        if sizes.len() < 2 {
            return Err(BranchVectorError::TooFewBranches(sizes.len()));
        }
        if sizes.contains(&0) {
            return Err(BranchVectorError::ZeroBranch);
        }
        Ok(BranchVector(sizes))
    }

    pub fn sizes(&self) -> &[usize] {
        &self.0
    }

    fn depth(&self) -> usize {
        *self.0.iter().max().expect("vector is non-empty")
    }

    /// `λ^d - Σ λ^(d - x_i)` with `d = max x_i`.
    pub fn characteristic(&self, lambda: f64) -> f64 {
        let d = self.depth() as i32;
        lambda.powi(d) - self.0.iter().map(|&x| lambda.powi(d - x as i32)).sum::<f64>()
    }
}

impl fmt::Display for BranchVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

pub const FACTOR_TOLERANCE: f64 = 1e-12;

/// The unique root above 1 of the characteristic polynomial, by bisection on
/// `[1, l]`.
pub fn branching_factor(v: &BranchVector) -> f64 {
    let (mut lo, mut hi) = (1.0_f64, v.sizes().len() as f64);
    while hi - lo > FACTOR_TOLERANCE {
        let mid = 0.5 * (lo + hi);
        if v.characteristic(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Rounds up at the third decimal, the convention of the reference table.
pub fn round_up_3(lambda: f64) -> f64 {
    ((lambda - 1e-9) * 1000.0).ceil() / 1000.0
}

/// Reference factor for each branching rule, with the worst-case branch
/// sizes used to reproduce it. Set-valued branches take their smallest
/// admissible size.
const FACTOR_TABLE: [(RuleId, &[usize], f64); 41] = {
    use RuleId::*;
    [
        (R2, &[1, 1, 1], 3.0),
        (R3, &[1, 1, 1], 3.0),
        (R4, &[1, 1, 1], 3.0),
        (R5_1, &[1, 1], 2.0),
        (R5_2, &[1, 1, 1], 3.0),
        (R5_3, &[1, 1, 1], 3.0),
        (R5_4, &[1, 1, 1], 3.0),
        (R6_1, &[1, 1], 2.0),
        (R6_2, &[1, 1, 1], 3.0),
        (R6_3, &[1, 1], 2.0),
        (R7_2_2, &[1, 1, 1], 3.0),
        (R7_2_3, &[1, 1, 1], 3.0),
        (R7_2_5, &[2, 1, 1], 2.415),
        (R8_1, &[1, 1, 2], 2.415),
        (R8_2, &[1, 1, 1], 3.0),
        (R8_3, &[1, 1, 1], 3.0),
        (R9_1, &[1, 1, 1], 3.0),
        (R9_2, &[1, 1, 1], 3.0),
        (R9_3, &[1, 1], 2.0),
        (R9_4, &[1, 1], 2.0),
        (R10, &[1, 1, 1], 3.0),
        (R11_1_1, &[1, 1], 2.0),
        (R11_1_2, &[1, 1, 1], 3.0),
        (R11_1_3, &[1, 1, 2, 2, 2], 3.0),
        (R11_2_1, &[1, 1], 2.0),
        (R11_2_2, &[1, 1, 1], 3.0),
        (R11_2_3, &[1, 1, 1], 3.0),
        (R11_2_4, &[1, 1, 1], 3.0),
        (R11_3, &[2, 1, 1, 2], 2.733),
        (R12_1, &[1, 1], 2.0),
        (R12_2, &[1, 1, 1], 3.0),
        (R12_3_1, &[1, 1, 2], 2.415),
        (R12_3_3, &[1, 1, 1], 3.0),
        (R12_3_4, &[1, 1, 2], 2.415),
        (R13_1, &[1, 1, 2, 2], 2.733),
        (R13_3, &[1, 1, 1], 3.0),
        (R13_4, &[1, 1, 1], 3.0),
        (R14_2, &[1, 1], 2.0),
        (R16, &[1, 1], 2.0),
        (R17, &[1, 1, 1], 3.0),
        (R18, &[1, 1], 2.0),
    ]
};

pub fn rule_branch_vectors() -> Vec<(RuleId, BranchVector)> {
    FACTOR_TABLE
        .iter()
        .map(|&(r, v, _)| (r, BranchVector::new(v.to_vec()).expect("table vectors are valid")))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FactorTableEntry {
    pub rule: RuleId,
    pub vector: BranchVector,
    pub computed_lambda: f64,
    pub table_lambda: f64,
}

impl FactorTableEntry {
    pub fn rounded(&self) -> f64 {
        round_up_3(self.computed_lambda)
    }

    pub fn matches(&self) -> bool {
        (self.rounded() - self.table_lambda).abs() <= 1e-3 + 1e-12
            && (self.computed_lambda - self.table_lambda).abs() <= 1e-3 + 1e-12
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
#[error("{} factor(s) disagree with the table: {}", .0.len(), describe(.0))]
pub struct FactorMismatch(pub Vec<FactorTableEntry>);

fn describe(es: &[FactorTableEntry]) -> String {
    es.iter()
        .map(|e| format!("{} computed {:.6} table {}", e.rule, e.computed_lambda, e.table_lambda))
        .collect::<Vec<_>>()
        .join("; ")
}

/// Every table row with its recomputed factor.
pub fn factor_table() -> Vec<FactorTableEntry> {
    FACTOR_TABLE
        .iter()
        .map(|&(rule, v, table_lambda)| {
            let vector = BranchVector::new(v.to_vec()).expect("table vectors are valid");
            FactorTableEntry {
                rule,
                computed_lambda: branching_factor(&vector),
                vector,
                table_lambda,
            }
        })
        .collect()
}

/// The table, or the rows that fail to reproduce.
pub fn verify_factor_table() -> Result<Vec<FactorTableEntry>, FactorMismatch> {
    let table = factor_table();
    let bad: Vec<_> = table.iter().filter(|e| !e.matches()).cloned().collect();
    if bad.is_empty() {
        Ok(table)
    } else {
        Err(FactorMismatch(bad))
    }
}

pub fn max_factor() -> f64 {
    factor_table().iter().map(|e| e.computed_lambda).fold(0.0, f64::max)
}

/// Branching rules that have no row in the table.
pub fn untabulated_branching_rules() -> Vec<RuleId> {
    RuleId::ALL
        .into_iter()
        .filter(|r| r.kind() == RuleKind::Branching)
        .filter(|r| !FACTOR_TABLE.iter().any(|(t, _, _)| t == r))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bv(v: &[usize]) -> BranchVector {
        BranchVector::new(v.to_vec()).unwrap()
    }

    #[test]
    fn known_roots() {
        assert!((branching_factor(&bv(&[1, 1, 1])) - 3.0).abs() < 1e-9);
        assert!((branching_factor(&bv(&[1, 1, 2])) - (1.0 + 2f64.sqrt())).abs() < 1e-9);
        assert!((branching_factor(&bv(&[1, 1, 2, 2])) - (1.0 + 3f64.sqrt())).abs() < 1e-9);
        assert!((branching_factor(&bv(&[1, 1])) - 2.0).abs() < 1e-9);
        assert!((branching_factor(&bv(&[1, 1, 2, 2, 2])) - 3.0).abs() < 1e-9);
    }

    #[test]
    fn residual_is_tiny() {
        for e in factor_table() {
            assert!(e.vector.characteristic(e.computed_lambda).abs() < 1e-9, "{}", e.rule);
            assert!(e.computed_lambda > 1.0);
        }
    }

    #[test]
    fn rounding_convention() {
        assert_eq!(round_up_3(1.0 + 2f64.sqrt()), 2.415);
        assert_eq!(round_up_3(1.0 + 3f64.sqrt()), 2.733);
        assert_eq!(round_up_3(3.0), 3.0);
    }

    #[test]
    fn table_reproduces() {
        let t = verify_factor_table().unwrap();
        assert_eq!(t.len(), 41);
        assert!((max_factor() - 3.0).abs() < 1e-9);
        assert!(untabulated_branching_rules().is_empty());
    }

    #[test]
    fn rejects_bad_vectors() {
        assert_eq!(BranchVector::new(vec![1]), Err(BranchVectorError::TooFewBranches(1)));
        assert_eq!(BranchVector::new(vec![1, 0]), Err(BranchVectorError::ZeroBranch));
    }

    #[test]
    fn display() {
        assert_eq!(bv(&[1, 1, 2]).to_string(), "(1,1,2)");
    }
}
