//! Catalog sweeps comparing observed density and deficiency with the
//! classification predicted by [`crate::classify`].

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::analysis::{analyze, AnalysisRecord};
use crate::catalog::catalog;
use crate::classify::{predicted_deficiency, predicted_dense};
use crate::MAX_ORDER;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SweepError {
    #[error("max order {0} exceeds the supported maximum of {max}", max = MAX_ORDER)]
    OrderTooLarge(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SweepCheck {
    Density,
    /// Restrict to one deficiency value, or check every group when `None`.
    Deficiency(Option<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub record: AnalysisRecord,
    /// `true`/`false` for density; the predicted class (`3`, `>=5`, ...)
    /// for deficiency.
    pub expected: String,
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepOutcome {
    pub max_order: usize,
    pub catalog_size: usize,
    pub rows: Vec<SweepRow>,
}

impl SweepOutcome {
    pub fn mismatches(&self) -> impl Iterator<Item = &SweepRow> {
        self.rows.iter().filter(|r| !r.matches)
    }

    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.matches)
    }
}

/// Analyzes every catalog group of order `<= max_order`.
///
/// For `Deficiency(Some(k))` only groups observed or predicted at `k` are
/// kept; all other checks keep every group.
pub fn run_sweep(max_order: usize, check: SweepCheck) -> Result<SweepOutcome, SweepError> {
    if max_order > MAX_ORDER {
        return Err(SweepError::OrderTooLarge(max_order));
    }
    let specs = catalog(max_order);
    let rows: Vec<Option<SweepRow>> = specs
        .par_iter()
        .map(|spec| {
            let group = spec.build().expect("catalog specs are valid");
            let record = analyze(&group);
            match check {
                SweepCheck::Density => {
                    let expected = predicted_dense(&group);
                    Some(SweepRow {
                        matches: expected == record.dense,
                        expected: expected.to_string(),
                        record,
                    })
                }
                SweepCheck::Deficiency(target) => {
                    let class = predicted_deficiency(&group);
                    let relevant = match target {
                        None => true,
                        Some(k) => {
                            record.deficiency == k
                                || class == crate::classify::DeficiencyClass::Exactly(k)
                        }
                    };
                    relevant.then(|| SweepRow {
                        matches: class.admits(record.deficiency),
                        expected: class.to_string(),
                        record,
                    })
                }
            }
        })
        .collect();
    Ok(SweepOutcome {
        max_order,
        catalog_size: specs.len(),
        rows: rows.into_iter().flatten().collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k1_up_to_20_is_the_primes() {
        let out = run_sweep(20, SweepCheck::Deficiency(Some(1))).unwrap();
        assert!(out.passed());
        let orders: Vec<usize> = out.rows.iter().map(|r| r.record.order).collect();
        // Z_p, plus the duplicate spellings S2 and A3
        assert_eq!(orders, vec![2, 2, 3, 3, 5, 7, 11, 13, 17, 19]);
    }

    #[test]
    fn rejects_large_bound() {
        assert_eq!(
            run_sweep(1000, SweepCheck::Density),
            Err(SweepError::OrderTooLarge(1000))
        );
    }
}
