//! Structural predicates on groups and the classification they predict for
//! the dense-normalizers property and for small deficiencies.
//!
//! Everything here is computed from element orders, commutation and
//! closure only; nothing looks at the normalizer data it is compared with.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{factorize, is_prime, is_product_of_two_distinct_primes, prime_power_base, tau};
use crate::group::Group;

/// The Sylow `p`-subgroups of `group` are cyclic, i.e. some element has
/// order equal to the full `p`-part of the group order.
pub fn sylow_is_cyclic(group: &Group, p: u64) -> bool {
    let p_part = factorize(group.order() as u64)
        .into_iter()
        .find(|&(q, _)| q == p)
        .map_or(1, |(q, e)| q.pow(e));
    group.element_orders().any(|o| o as u64 == p_part)
}

pub fn all_sylow_cyclic(group: &Group) -> bool {
    factorize(group.order() as u64)
        .iter()
        .all(|&(p, _)| sylow_is_cyclic(group, p))
}

/// Non-abelian with every Sylow subgroup cyclic.
pub fn is_zm_group(group: &Group) -> bool {
    !group.is_abelian() && all_sylow_cyclic(group)
}

/// `(m, n)` with `m = |G'|` and `n = |G| / m` for a ZM-group.
///
/// In `ZM(m,n,r)` the derived subgroup is `<a>`, because `gcd(m, r-1) = 1`.
pub fn zm_parameters(group: &Group) -> Option<(u64, u64)> {
    is_zm_group(group).then(|| {
        let m = group.derived_subgroup().size() as u64;
        (m, group.order() as u64 / m)
    })
}

pub fn has_noncyclic_sylow(group: &Group) -> bool {
    !all_sylow_cyclic(group)
}

/// Some element of order `n` generates a normal subgroup.
pub fn has_normal_cyclic_subgroup_of_order(group: &Group, n: usize) -> bool {
    (0..group.order())
        .filter(|&x| group.element_order(x) == n)
        .any(|x| {
            let h = group.closure(&[x]).expect("index in range");
            (0..group.order()).all(|g| h.contains(group.conjugate(g, x)))
        })
}

/// Non-abelian of order `pq` for distinct primes.
pub fn is_nonabelian_pq(group: &Group) -> bool {
    is_product_of_two_distinct_primes(group.order() as u64) && !group.is_abelian()
}

/// Non-abelian `Z_{p²} ⋊ Z_q`: order `p²q` with a normal cyclic subgroup
/// of order `p²`.
pub fn is_cyclic_p2_by_q(group: &Group) -> bool {
    let f = factorize(group.order() as u64);
    let p_squared = match f.as_slice() {
        [(p, 2), (_, 1)] | [(_, 1), (p, 2)] => p * p,
        _ => return false,
    };
    !group.is_abelian() && has_normal_cyclic_subgroup_of_order(group, p_squared as usize)
}

/// Predicted value of the deficiency `|L(G)| - |N_G|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum DeficiencyClass {
    Exactly(usize),
    AtLeast(usize),
}

impl DeficiencyClass {
    pub fn admits(&self, k: usize) -> bool {
        match *self {
            DeficiencyClass::Exactly(e) => k == e,
            DeficiencyClass::AtLeast(lo) => k >= lo,
        }
    }
}

impl fmt::Display for DeficiencyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DeficiencyClass::Exactly(k) => write!(f, "{k}"),
            DeficiencyClass::AtLeast(k) => write!(f, ">={k}"),
        }
    }
}

/// Deficiency predicted by the classification of groups with at most four
/// non-normalizer subgroups.
///
/// * `k = 1`: `Z_p`
/// * `k = 2`: `Z_{p²}` or non-abelian `Z_p ⋊ Z_q`
/// * `k = 3`: `Z_{p³}`, `Z_{pq}` or non-abelian `Z_{p²} ⋊ Z_q`
/// * `k = 4`, outside ZM-groups: `Z_{p⁴}`, `Z_2 × Z_2` or `A_4`
///
/// ZM-groups outside the first three lines are only known to have `k >= 4`;
/// everything else has `k >= 5`.
pub fn predicted_deficiency(group: &Group) -> DeficiencyClass {
    use DeficiencyClass::*;
    let order = group.order() as u64;
    if order == 1 {
        return Exactly(0);
    }
    if group.is_cyclic() {
        return match prime_power_base(order) {
            Some((_, a @ 1..=4)) => Exactly(a as usize),
            Some(_) => AtLeast(5),
            None if is_product_of_two_distinct_primes(order) => Exactly(3),
            None => AtLeast(5),
        };
    }
    if is_nonabelian_pq(group) {
        return Exactly(2);
    }
    if is_cyclic_p2_by_q(group) {
        return Exactly(3);
    }
    if is_zm_group(group) {
        return AtLeast(4);
    }
    if order == 4 {
        return Exactly(4);
    }
    if order == 12 && group.all_nontrivial_elements_prime_order() {
        return Exactly(4);
    }
    AtLeast(5)
}

/// Dense normalizers exactly for prime order or non-abelian order `pq`.
///
/// The trivial group has no pairs `H < K` at all and is dense vacuously.
pub fn predicted_dense(group: &Group) -> bool {
    group.is_trivial() || is_prime(group.order() as u64) || is_nonabelian_pq(group)
}

/// Allowed shape for groups with `k <= 3`: cyclic of order `p^a` (`a <= 3`) or `pq`,
/// or a ZM-group with `τ(m) + τ(n) <= 5`.
pub fn small_deficiency_shape(group: &Group) -> bool {
    let order = group.order() as u64;
    if group.is_cyclic() {
        return order == 1
            || matches!(prime_power_base(order), Some((_, 1..=3)))
            || is_product_of_two_distinct_primes(order);
    }
    match zm_parameters(group) {
        Some((m, n)) => tau(m) + tau(n) <= 5,
        None => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::*;
    use crate::spec::build_from_spec;

    #[test]
    fn zm_detection() {
        assert!(is_zm_group(&make_zm(3, 2, 2).unwrap()));
        assert!(is_zm_group(&make_dihedral(30).unwrap()));
        assert!(is_zm_group(&build_from_spec("Z5 x S3").unwrap()));
        assert!(!is_zm_group(&make_cyclic(6).unwrap()));
        assert!(!is_zm_group(&make_alternating(4).unwrap()));
        assert!(!is_zm_group(&make_quaternion(8).unwrap()));
        assert_eq!(zm_parameters(&make_dihedral(30).unwrap()), Some((15, 2)));
        assert_eq!(zm_parameters(&make_zm(5, 4, 2).unwrap()), Some((5, 4)));
        assert_eq!(
            zm_parameters(&build_from_spec("Z5 x S3").unwrap()),
            Some((3, 10))
        );
    }

    #[test]
    fn sylow_checks() {
        let a4 = make_alternating(4).unwrap();
        assert!(!sylow_is_cyclic(&a4, 2));
        assert!(sylow_is_cyclic(&a4, 3));
        assert!(has_noncyclic_sylow(&a4));
        assert!(!has_noncyclic_sylow(&make_dihedral(18).unwrap()));
    }

    #[test]
    fn shapes() {
        assert!(is_cyclic_p2_by_q(&make_zm(9, 2, 8).unwrap()));
        assert!(is_cyclic_p2_by_q(&make_dihedral(18).unwrap()));
        assert!(!is_cyclic_p2_by_q(&make_zm(3, 4, 2).unwrap()));
        assert!(!is_cyclic_p2_by_q(&make_dihedral(12).unwrap()));
        assert!(is_nonabelian_pq(&make_zm(7, 3, 2).unwrap()));
        assert!(!is_nonabelian_pq(&make_cyclic(15).unwrap()));
    }

    #[test]
    fn predictions() {
        use DeficiencyClass::*;
        let cases = [
            ("Z1", Exactly(0)),
            ("Z7", Exactly(1)),
            ("Z9", Exactly(2)),
            ("S3", Exactly(2)),
            ("Z8", Exactly(3)),
            ("Z15", Exactly(3)),
            ("D18", Exactly(3)),
            ("Z16", Exactly(4)),
            ("Z2 x Z2", Exactly(4)),
            ("D4", Exactly(4)),
            ("A4", Exactly(4)),
            ("D30", AtLeast(4)),
            ("Z12", AtLeast(5)),
            ("Q8", AtLeast(5)),
            ("D12", AtLeast(5)),
        ];
        for (text, expected) in cases {
            assert_eq!(
                predicted_deficiency(&build_from_spec(text).unwrap()),
                expected,
                "{text}"
            );
        }
        assert!(predicted_dense(&build_from_spec("Z13").unwrap()));
        assert!(predicted_dense(&build_from_spec("ZM(7,3,2)").unwrap()));
        assert!(!predicted_dense(&build_from_spec("Z6").unwrap()));
        assert!(predicted_dense(&build_from_spec("Z1").unwrap()));
    }

    #[test]
    fn admits() {
        assert!(DeficiencyClass::Exactly(3).admits(3));
        assert!(!DeficiencyClass::Exactly(3).admits(4));
        assert!(DeficiencyClass::AtLeast(4).admits(7));
        assert!(!DeficiencyClass::AtLeast(5).admits(4));
        assert_eq!(DeficiencyClass::AtLeast(5).to_string(), ">=5");
    }
}
