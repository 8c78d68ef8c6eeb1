//! One-stop analysis of a single group.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::arith::prime_divisors;
use crate::group::Group;
use crate::lattice::{enumerate_subgroups, SubgroupLattice};
use crate::normalizers::{
    has_dense_normalizers, normalizer_report, unique_subgroup_of_order_p, DensityVerdict,
    NormalizerReport,
};

/// Summary of `|L(G)|`, `|N_G|`, the deficiency and the predicates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisRecord {
    pub label: String,
    pub order: usize,
    pub lattice_size: usize,
    pub normalizer_count: usize,
    pub deficiency: usize,
    pub dense: bool,
    /// Orders of the subgroups that are not normalizers, ascending.
    pub non_normalizer_orders: Vec<usize>,
    pub abelian: bool,
    pub all_prime_order: bool,
    /// For each prime `p` dividing the order: exactly one subgroup of order `p`.
    pub unique_order_p: BTreeMap<u64, bool>,
}

/// Lattice, normalizer report and density verdict of one group.
pub struct Analysis {
    pub lattice: SubgroupLattice,
    pub report: NormalizerReport,
    pub density: DensityVerdict,
}

impl Analysis {
    pub fn new(group: &Group) -> Analysis {
        let lattice = enumerate_subgroups(group);
        let report = normalizer_report(group, &lattice);
        let density = has_dense_normalizers(&lattice, &report);
        Analysis {
            lattice,
            report,
            density,
        }
    }

    pub fn record(&self, group: &Group) -> AnalysisRecord {
        let unique_order_p = prime_divisors(group.order() as u64)
            .into_iter()
            .map(|p| {
                let unique = unique_subgroup_of_order_p(&self.lattice, p)
                    .expect("p is a prime divisor of the order");
                (p, unique)
            })
            .collect();
        AnalysisRecord {
            label: group.label().to_string(),
            order: group.order(),
            lattice_size: self.lattice.len(),
            normalizer_count: self.report.normalizer_count(),
            deficiency: self.report.deficiency_k,
            dense: self.density.dense,
            non_normalizer_orders: self
                .report
                .non_normalizers
                .iter()
                .map(|&i| self.lattice.get(i).size())
                .collect(),
            abelian: group.is_abelian(),
            all_prime_order: group.all_nontrivial_elements_prime_order(),
            unique_order_p,
        }
    }
}

pub fn analyze(group: &Group) -> AnalysisRecord {
    Analysis::new(group).record(group)
}
