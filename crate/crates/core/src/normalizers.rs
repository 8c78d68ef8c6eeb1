//! Normalizers of every subgroup, the normalizer set `N_G`, the deficiency
//! `k = |L(G)| - |N_G|`, and the dense-normalizers predicate.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::is_prime;
use crate::elements::ElementSet;
use crate::group::{Group, GroupError, Subgroup};
use crate::lattice::{BitRow, SubgroupLattice};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NormalizerError {
    #[error("{p} is not a prime dividing the group order {order}")]
    NotAPrimeDivisor { p: u64, order: usize },
}

/// `N_G(H) = { g : g H g⁻¹ = H }`.
pub fn normalizer(group: &Group, subgroup: &Subgroup) -> Result<Subgroup, GroupError> {
    group.check_member_of(subgroup)?;
    let gens = generating_set(group, subgroup);
    Ok(Subgroup::from_members(
        group.order(),
        normalizing_elements(group, subgroup.members(), &gens),
    ))
}

/// Greedy generating set: walk the members and keep anything not yet reached.
fn generating_set(group: &Group, subgroup: &Subgroup) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut reached = ElementSet::singleton(0);
    for x in subgroup.iter() {
        if !reached.contains(x) {
            gens.push(x);
            reached = group.close_from(&reached, &gens);
        }
    }
    gens
}

// g H g⁻¹ ⊆ H with |gHg⁻¹| = |H| gives equality, and checking generators
// of H suffices for the inclusion.
fn normalizing_elements(group: &Group, members: &ElementSet, gens: &[usize]) -> ElementSet {
    (0..group.order())
        .filter(|&g| {
            gens.iter()
                .all(|&h| members.contains(group.conjugate(g, h)))
        })
        .collect()
}

/// Normalizer data for a whole lattice. All indices refer to the lattice.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalizerReport {
    pub normalizer_of: Vec<usize>,
    pub normalizer_set: Vec<usize>,
    pub deficiency_k: usize,
    pub non_normalizers: Vec<usize>,
}

impl NormalizerReport {
    pub fn is_normalizer(&self, i: usize) -> bool {
        self.normalizer_set.binary_search(&i).is_ok()
    }

    pub fn normalizer_count(&self) -> usize {
        self.normalizer_set.len()
    }
}

/// Computes `N_G(H)` for every `H` in the lattice.
///
/// Panics if `lattice` was not enumerated from `group`.
pub fn normalizer_report(group: &Group, lattice: &SubgroupLattice) -> NormalizerReport {
    assert_eq!(
        group.order(),
        lattice.group_order(),
        "lattice does not belong to this group"
    );
    let normalizer_of: Vec<usize> = (0..lattice.len())
        .into_par_iter()
        .map(|i| {
            let gens: Vec<usize> = lattice.generators(i).collect();
            let members = normalizing_elements(group, lattice.get(i).members(), &gens);
            lattice
                .index_of_members(&members)
                .expect("normalizer is a subgroup and must be in the lattice")
        })
        .collect();

    let mut is_normalizer = vec![false; lattice.len()];
    for &n in &normalizer_of {
        is_normalizer[n] = true;
    }
    let (normalizer_set, non_normalizers): (Vec<usize>, Vec<usize>) =
        (0..lattice.len()).partition(|&i| is_normalizer[i]);
    NormalizerReport {
        deficiency_k: non_normalizers.len(),
        normalizer_of,
        normalizer_set,
        non_normalizers,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DensityVerdict {
    pub dense: bool,
    /// A pair `(H, K)` with `H < K`, `H` not maximal in `K`, and no
    /// normalizer strictly between them.
    pub witness: Option<(usize, usize)>,
}

/// Decides whether every non-maximal pair `H < K` has a normalizer strictly
/// between. Pairs are scanned by `H`, then `K`, in lattice order; the first
/// violating pair is the witness.
pub fn has_dense_normalizers(
    lattice: &SubgroupLattice,
    report: &NormalizerReport,
) -> DensityVerdict {
    let mut normalizers = BitRow::new(lattice.len());
    for &i in &report.normalizer_set {
        normalizers.set(i);
    }
    for h in 0..lattice.len() {
        for k in lattice.above_row(h).iter() {
            if lattice.covers(h, k) {
                continue;
            }
            let split = lattice
                .below_row(k)
                .first_common(lattice.above_row(h), &normalizers);
            if split.is_none() {
                return DensityVerdict {
                    dense: false,
                    witness: Some((h, k)),
                };
            }
        }
    }
    DensityVerdict {
        dense: true,
        witness: None,
    }
}

/// Whether exactly one subgroup has order `p`.
pub fn unique_subgroup_of_order_p(
    lattice: &SubgroupLattice,
    p: u64,
) -> Result<bool, NormalizerError> {
    let order = lattice.group_order();
    if !is_prime(p) || !(order as u64).is_multiple_of(p) {
        return Err(NormalizerError::NotAPrimeDivisor { p, order });
    }
    let count = lattice
        .subgroups()
        .iter()
        .filter(|s| s.size() as u64 == p)
        .count();
    Ok(count == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::*;
    use crate::lattice::enumerate_subgroups;

    fn analyze(g: &Group) -> (SubgroupLattice, NormalizerReport) {
        let lat = enumerate_subgroups(g);
        let rep = normalizer_report(g, &lat);
        (lat, rep)
    }

    #[test]
    fn normalizer_of_whole_group() {
        let g = make_symmetric(4).unwrap();
        assert_eq!(normalizer(&g, &g.whole()).unwrap(), g.whole());
        assert_eq!(normalizer(&g, &g.trivial()).unwrap(), g.whole());
    }

    #[test]
    fn transposition_is_self_normalizing_in_s3() {
        let s3 = make_symmetric(3).unwrap();
        for t in (1..6).filter(|&g| s3.element_order(g) == 2) {
            let h = s3.closure(&[t]).unwrap();
            assert_eq!(normalizer(&s3, &h).unwrap(), h);
        }
    }

    #[test]
    fn klein_four_is_normal_in_a4() {
        let a4 = make_alternating(4).unwrap();
        let involutions: Vec<usize> = (1..12).filter(|&g| a4.element_order(g) == 2).collect();
        let v4 = a4.closure(&involutions).unwrap();
        assert_eq!(v4.size(), 4);
        assert_eq!(normalizer(&a4, &v4).unwrap(), a4.whole());
    }

    #[test]
    fn normalizer_rejects_foreign_subgroup() {
        let z4 = make_cyclic(4).unwrap();
        let z6 = make_cyclic(6).unwrap();
        assert!(normalizer(&z4, &z6.whole()).is_err());
    }

    #[test]
    fn deficiency_examples() {
        let (lat, rep) = analyze(&make_cyclic(5).unwrap());
        assert_eq!(
            (lat.len(), rep.normalizer_count(), rep.deficiency_k),
            (2, 1, 1)
        );

        let (_, rep) = analyze(&make_zm(3, 2, 2).unwrap());
        assert_eq!(rep.deficiency_k, 2);

        let (lat, rep) = analyze(&make_quaternion(8).unwrap());
        assert_eq!(
            (lat.len(), rep.normalizer_count(), rep.deficiency_k),
            (6, 1, 5)
        );

        let (lat, rep) = analyze(&make_alternating(4).unwrap());
        assert_eq!((lat.len(), rep.deficiency_k), (10, 4));

        let (lat, rep) = analyze(&make_cyclic(1).unwrap());
        assert_eq!((lat.len(), rep.deficiency_k), (1, 0));
        assert_eq!(rep.normalizer_set, vec![0]);
    }

    #[test]
    fn report_invariants_on_s4() {
        let g = make_symmetric(4).unwrap();
        let (lat, rep) = analyze(&g);
        for (h, &n) in rep.normalizer_of.iter().enumerate() {
            assert!(lat.includes(h, n));
        }
        assert_eq!(rep.normalizer_of[0], lat.whole_index());
        assert_eq!(rep.normalizer_of[lat.whole_index()], lat.whole_index());
        assert!(!rep.is_normalizer(0));
        assert_eq!(rep.deficiency_k + rep.normalizer_count(), lat.len());
    }

    #[test]
    fn density_examples() {
        let (lat, rep) = analyze(&make_cyclic(7).unwrap());
        assert_eq!(
            has_dense_normalizers(&lat, &rep),
            DensityVerdict {
                dense: true,
                witness: None
            }
        );

        let (lat, rep) = analyze(&make_zm(3, 2, 2).unwrap());
        assert!(has_dense_normalizers(&lat, &rep).dense);

        let (lat, rep) = analyze(&make_cyclic(4).unwrap());
        assert_eq!(
            has_dense_normalizers(&lat, &rep),
            DensityVerdict {
                dense: false,
                witness: Some((0, 2))
            }
        );

        let (lat, rep) = analyze(&make_cyclic(6).unwrap());
        let verdict = has_dense_normalizers(&lat, &rep);
        assert!(!verdict.dense);
        let (h, k) = verdict.witness.unwrap();
        assert!(!lat.covers(h, k));
        assert!(lat
            .open_interval(h, k)
            .unwrap()
            .iter()
            .all(|&x| !rep.is_normalizer(x)));
    }

    #[test]
    fn unique_order_p() {
        let z2 = make_cyclic(2).unwrap();
        let lat = enumerate_subgroups(&make_cyclic(8).unwrap());
        assert_eq!(unique_subgroup_of_order_p(&lat, 2), Ok(true));
        let lat = enumerate_subgroups(&make_quaternion(16).unwrap());
        assert_eq!(unique_subgroup_of_order_p(&lat, 2), Ok(true));
        let lat = enumerate_subgroups(&direct_product(&z2, &z2).unwrap());
        assert_eq!(unique_subgroup_of_order_p(&lat, 2), Ok(false));
        assert_eq!(
            unique_subgroup_of_order_p(&lat, 3),
            Err(NormalizerError::NotAPrimeDivisor { p: 3, order: 4 })
        );
        assert!(unique_subgroup_of_order_p(&lat, 4).is_err());
    }
}
