//! Metacyclic groups `ZM(m,n,r) = <a, b | a^m = b^n = 1, b⁻¹ab = a^r>`.
//!
//! Besides validation this module implements the closed-form description
//! of the subgroup lattice: subgroups correspond to triples `(m1, n1, s)`
//! with `m1 | m`, `n1 | n`, `0 <= s < m1` and
//! `m1 | s * (1 + r^n1 + r^(2 n1) + ... + r^(n - n1))`, the subgroup being
//! `<a^m1, b^n1 a^s>` of order `mn / (m1 n1)`.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{divisors, gcd, multiplicative_order, pow_mod, tau};
use crate::constructors::{build_zm, ConstructError};
use crate::group::{Group, Subgroup};
use crate::lattice::enumerate_subgroups;
use crate::normalizers::normalizer_report;
use crate::MAX_ORDER;

/// A defining condition of a ZM triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ZmCondition {
    /// `m >= 1` and `n >= 1`
    Positive,
    /// `gcd(m, n) = 1`
    CoprimeMN,
    /// `gcd(m, r - 1) = 1`
    CoprimeMRMinusOne,
    /// `r^n ≡ 1 (mod m)`
    PowerIsOne,
}

impl fmt::Display for ZmCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ZmCondition::Positive => "m, n >= 1",
            ZmCondition::CoprimeMN => "gcd(m, n) = 1",
            ZmCondition::CoprimeMRMinusOne => "gcd(m, r-1) = 1",
            ZmCondition::PowerIsOne => "r^n = 1 (mod m)",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ZmError {
    #[error("invalid ZM triple ({m},{n},{r}): violates {}", join_conditions(.violated))]
    InvalidTriple {
        m: u64,
        n: u64,
        r: u64,
        violated: Vec<ZmCondition>,
    },
    #[error("({m1},{n1},{s}) is not a subgroup triple of {triple}")]
    NotInL {
        triple: ZmTriple,
        m1: u64,
        n1: u64,
        s: u64,
    },
    #[error("group of order {order} is not the group built from {triple}")]
    WrongGroup { triple: ZmTriple, order: usize },
    #[error("m*n = {0} exceeds the supported maximum of {max}", max = MAX_ORDER)]
    TooLarge(u64),
}

fn join_conditions(violated: &[ZmCondition]) -> String {
    violated
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

/// A validated parameter triple. `r` is reduced mod `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ZmTriple {
    pub m: u64,
    pub n: u64,
    pub r: u64,
    /// Multiplicative order of `r` modulo `m`.
    pub d: u64,
}

impl ZmTriple {
    pub fn order(&self) -> u64 {
        self.m * self.n
    }

    /// `d = 1`, i.e. the group is cyclic.
    pub fn is_abelian(&self) -> bool {
        self.d == 1
    }

    pub fn tau_sum(&self) -> u64 {
        tau(self.m) + tau(self.n)
    }

    /// Index of `b^x a^y` in the group built by [`build_zm`].
    pub fn element(&self, x: u64, y: u64) -> usize {
        ((x % self.n) * self.m + y % self.m) as usize
    }
}

impl fmt::Display for ZmTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ZM({},{},{})", self.m, self.n, self.r)
    }
}

pub fn validate_zm_triple(m: u64, n: u64, r: u64) -> Result<ZmTriple, ZmError> {
    if m == 0 || n == 0 {
        return Err(ZmError::InvalidTriple {
            m,
            n,
            r,
            violated: vec![ZmCondition::Positive],
        });
    }
    let reduced = r % m;
    let mut violated = Vec::new();
    if gcd(m, n) != 1 {
        violated.push(ZmCondition::CoprimeMN);
    }
    // r - 1 taken mod m so r = 0 behaves as -1
    if gcd((reduced + m - 1) % m, m) != 1 {
        violated.push(ZmCondition::CoprimeMRMinusOne);
    }
    if pow_mod(reduced, n, m) != 1 % m {
        violated.push(ZmCondition::PowerIsOne);
    }
    if !violated.is_empty() {
        return Err(ZmError::InvalidTriple { m, n, r, violated });
    }
    let d = multiplicative_order(reduced, m).expect("r^n = 1 mod m makes r a unit");
    Ok(ZmTriple {
        m,
        n,
        r: reduced,
        d,
    })
}

/// A member `(m1, n1, s)` of the triple set `L`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ZmSubgroupTriple {
    pub m1: u64,
    pub n1: u64,
    pub s: u64,
}

/// `1 + r^n1 + r^(2 n1) + ... + r^(n - n1)` reduced mod `modulus`.
///
/// This is the exact integer `(r^n - 1) / (r^n1 - 1)` taken mod `modulus`,
/// computed term by term so no division is involved.
pub fn geometric_quotient_mod(r: u64, n: u64, n1: u64, modulus: u64) -> u64 {
    debug_assert!(n1 > 0 && n.is_multiple_of(n1));
    let step = pow_mod(r, n1, modulus) as u128;
    let modulus = modulus as u128;
    let mut term: u128 = 1 % modulus;
    let mut sum: u128 = 0;
    for _ in 0..n / n1 {
        sum = (sum + term) % modulus;
        term = term * step % modulus;
    }
    sum as u64
}

impl ZmTriple {
    /// Membership test for the set `L`.
    pub fn contains(&self, u: &ZmSubgroupTriple) -> bool {
        u.m1 > 0
            && u.n1 > 0
            && self.m.is_multiple_of(u.m1)
            && self.n.is_multiple_of(u.n1)
            && u.s < u.m1
            && (u.s as u128 * geometric_quotient_mod(self.r, self.n, u.n1, u.m1) as u128)
                .is_multiple_of(u.m1 as u128)
    }
}

/// All of `L`, sorted by `(m1, n1, s)`.
pub fn enumerate_l(t: &ZmTriple) -> Vec<ZmSubgroupTriple> {
    let mut out = Vec::new();
    for m1 in divisors(t.m) {
        for n1 in divisors(t.n) {
            let q = geometric_quotient_mod(t.r, t.n, n1, m1);
            for s in 0..m1 {
                if (s as u128 * q as u128).is_multiple_of(m1 as u128) {
                    out.push(ZmSubgroupTriple { m1, n1, s });
                }
            }
        }
    }
    out
}

fn check_group(t: &ZmTriple, group: &Group) -> Result<(), ZmError> {
    if group.order() as u64 != t.order() {
        return Err(ZmError::WrongGroup {
            triple: *t,
            order: group.order(),
        });
    }
    Ok(())
}

/// `H_(m1,n1,s) = <a^m1, b^n1 a^s>` inside the group built from `t`.
pub fn subgroup_from_triple(
    t: &ZmTriple,
    group: &Group,
    u: &ZmSubgroupTriple,
) -> Result<Subgroup, ZmError> {
    check_group(t, group)?;
    if !t.contains(u) {
        return Err(ZmError::NotInL {
            triple: *t,
            m1: u.m1,
            n1: u.n1,
            s: u.s,
        });
    }
    let gens = [t.element(0, u.m1), t.element(u.n1, u.s)];
    Ok(group
        .closure(&gens)
        .expect("ZM element indices are in range"))
}

/// `<b^d>`, the center predicted by the multiplicative order of `r`.
pub fn predicted_center(t: &ZmTriple, group: &Group) -> Result<Subgroup, ZmError> {
    check_group(t, group)?;
    Ok(group
        .closure(&[t.element(t.d, 0)])
        .expect("ZM element indices are in range"))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BijectionReport {
    pub triple: ZmTriple,
    pub l_size: usize,
    pub lattice_size: usize,
    pub all_distinct: bool,
    pub all_hit: bool,
    pub orders_match: bool,
    pub pass: bool,
    pub first_discrepancy: Option<String>,
}

/// Materializes every triple of `L` and compares against the brute-force
/// subgroup lattice of the built group.
pub fn verify_bijection(t: &ZmTriple) -> Result<BijectionReport, ConstructError> {
    let group = build_zm(t)?;
    let lattice = enumerate_subgroups(&group);
    let triples = enumerate_l(t);

    let mut first_discrepancy = None;
    let mut note = |msg: String| {
        if first_discrepancy.is_none() {
            first_discrepancy = Some(msg);
        }
    };

    let mut hit = vec![None::<ZmSubgroupTriple>; lattice.len()];
    let mut all_distinct = true;
    let mut orders_match = true;
    for u in &triples {
        let h = subgroup_from_triple(t, &group, u).expect("enumerated triples are members of L");
        let expected = t.order() / (u.m1 * u.n1);
        if h.size() as u64 != expected {
            orders_match = false;
            note(format!(
                "({},{},{}) has order {} instead of {}",
                u.m1,
                u.n1,
                u.s,
                h.size(),
                expected
            ));
        }
        let i = lattice
            .index_of(&h)
            .expect("closure output is a subgroup and must be in the lattice");
        match hit[i] {
            Some(prev) => {
                all_distinct = false;
                note(format!(
                    "({},{},{}) and ({},{},{}) give the same subgroup",
                    prev.m1, prev.n1, prev.s, u.m1, u.n1, u.s
                ));
            }
            None => hit[i] = Some(*u),
        }
    }
    let missed = hit.iter().position(Option::is_none);
    if let Some(i) = missed {
        note(format!(
            "lattice member #{i} of order {} has no triple",
            lattice.get(i).size()
        ));
    }
    let all_hit = missed.is_none();
    let sizes_equal = triples.len() == lattice.len();
    if !sizes_equal {
        note(format!(
            "|L| = {} but the lattice has {}",
            triples.len(),
            lattice.len()
        ));
    }
    Ok(BijectionReport {
        triple: *t,
        l_size: triples.len(),
        lattice_size: lattice.len(),
        all_distinct,
        all_hit,
        orders_match,
        pass: sizes_equal && all_distinct && all_hit && orders_match,
        first_discrepancy,
    })
}

/// Every valid triple with `m, n >= 1` and `mn <= max_mn`, ordered by
/// `(mn, m, n, r)`.
pub fn all_triples(max_mn: u64) -> Vec<ZmTriple> {
    let mut out = Vec::new();
    for m in 1..=max_mn {
        for n in 1..=max_mn / m {
            for r in 0..m.max(1) {
                if m > 1 && r == 0 {
                    continue;
                }
                if let Ok(t) = validate_zm_triple(m, n, r) {
                    out.push(t);
                }
            }
        }
    }
    out.sort_by_key(|t| (t.order(), t.m, t.n, t.r));
    out
}

/// Valid non-abelian triples with `mn <= max_mn`, ordered by `(mn, m, n, r)`.
pub fn nonabelian_triples(max_mn: u64) -> Vec<ZmTriple> {
    all_triples(max_mn)
        .into_iter()
        .filter(|t| !t.is_abelian())
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZmHit {
    pub triple: ZmTriple,
    pub lattice_size: usize,
    pub deficiency: usize,
    pub tau_sum: u64,
}

/// Builds every non-abelian triple with `mn <= max_mn` (optionally only
/// those with `τ(m) + τ(n) <= tau_bound`) and keeps the ones whose
/// deficiency equals `target_k`.
pub fn zm_search(
    max_mn: u64,
    target_k: usize,
    tau_bound: Option<u64>,
) -> Result<Vec<ZmHit>, ZmError> {
    if max_mn > MAX_ORDER as u64 {
        return Err(ZmError::TooLarge(max_mn));
    }
    let candidates: Vec<ZmTriple> = nonabelian_triples(max_mn)
        .into_iter()
        .filter(|t| tau_bound.is_none_or(|b| t.tau_sum() <= b))
        .collect();
    let hits = candidates
        .par_iter()
        .filter_map(|t| {
            let group = build_zm(t).expect("validated triple within the order bound");
            let lattice = enumerate_subgroups(&group);
            let report = normalizer_report(&group, &lattice);
            (report.deficiency_k == target_k).then(|| ZmHit {
                triple: *t,
                lattice_size: lattice.len(),
                deficiency: report.deficiency_k,
                tau_sum: t.tau_sum(),
            })
        })
        .collect();
    Ok(hits)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triple(m1: u64, n1: u64, s: u64) -> ZmSubgroupTriple {
        ZmSubgroupTriple { m1, n1, s }
    }

    #[test]
    fn validation() {
        let t = validate_zm_triple(15, 2, 14).unwrap();
        assert_eq!(t.d, 2);
        assert_eq!(
            validate_zm_triple(4, 2, 3),
            Err(ZmError::InvalidTriple {
                m: 4,
                n: 2,
                r: 3,
                violated: vec![ZmCondition::CoprimeMN, ZmCondition::CoprimeMRMinusOne]
            })
        );
        assert_eq!(validate_zm_triple(5, 4, 2).unwrap().d, 4);
        assert_eq!(validate_zm_triple(5, 4, 7).unwrap().r, 2);
        assert!(validate_zm_triple(1, 6, 0).unwrap().is_abelian());
        assert!(validate_zm_triple(7, 1, 1).is_err());
        let err = validate_zm_triple(6, 2, 5).unwrap_err();
        assert_eq!(
            err,
            ZmError::InvalidTriple {
                m: 6,
                n: 2,
                r: 5,
                violated: vec![ZmCondition::CoprimeMN, ZmCondition::CoprimeMRMinusOne]
            }
        );
        assert!(err.to_string().contains("gcd(m, n) = 1"));
        assert!(matches!(
            validate_zm_triple(7, 2, 2),
            Err(ZmError::InvalidTriple { violated, .. }) if violated == vec![ZmCondition::PowerIsOne]
        ));
        assert!(validate_zm_triple(0, 2, 1).is_err());
    }

    #[test]
    fn l_for_s3() {
        let t = validate_zm_triple(3, 2, 2).unwrap();
        assert_eq!(
            enumerate_l(&t),
            vec![
                triple(1, 1, 0),
                triple(1, 2, 0),
                triple(3, 1, 0),
                triple(3, 1, 1),
                triple(3, 1, 2),
                triple(3, 2, 0)
            ]
        );
    }

    #[test]
    fn l_contains_extremes() {
        for t in all_triples(60) {
            let l = enumerate_l(&t);
            assert!(l.contains(&triple(1, 1, 0)));
            assert!(l.contains(&triple(t.m, t.n, 0)));
            assert!(l.iter().all(|u| t.contains(u)));
        }
    }

    #[test]
    fn d30_has_28_triples() {
        assert_eq!(
            enumerate_l(&validate_zm_triple(15, 2, 14).unwrap()).len(),
            28
        );
    }

    #[test]
    fn subgroups_of_s3_from_triples() {
        let t = validate_zm_triple(3, 2, 2).unwrap();
        let g = build_zm(&t).unwrap();
        assert!(subgroup_from_triple(&t, &g, &triple(3, 2, 0))
            .unwrap()
            .is_trivial());
        assert!(subgroup_from_triple(&t, &g, &triple(1, 1, 0))
            .unwrap()
            .is_whole());
        let involutions: Vec<Subgroup> = (0..3)
            .map(|s| subgroup_from_triple(&t, &g, &triple(3, 1, s)).unwrap())
            .collect();
        for (s, h) in involutions.iter().enumerate() {
            assert_eq!(h.size(), 2);
            assert!(h.contains(t.element(1, s as u64)));
        }
        assert_ne!(involutions[0], involutions[1]);
        assert_ne!(involutions[1], involutions[2]);
        assert!(matches!(
            subgroup_from_triple(&t, &g, &triple(2, 1, 0)),
            Err(ZmError::NotInL { .. })
        ));
        let other = build_zm(&validate_zm_triple(7, 3, 2).unwrap()).unwrap();
        assert!(matches!(
            subgroup_from_triple(&t, &other, &triple(1, 1, 0)),
            Err(ZmError::WrongGroup { .. })
        ));
    }

    #[test]
    fn bijection_examples() {
        for (m, n, r, size) in [(3, 2, 2, 6), (15, 2, 14, 28), (7, 3, 2, 0)] {
            let t = validate_zm_triple(m, n, r).unwrap();
            let rep = verify_bijection(&t).unwrap();
            assert!(rep.pass, "{rep:?}");
            assert_eq!(rep.l_size, rep.lattice_size);
            if size > 0 {
                assert_eq!(rep.l_size, size);
            }
        }
    }

    #[test]
    fn search_finds_d30() {
        let hits = zm_search(60, 4, None).unwrap();
        assert!(hits
            .iter()
            .any(|h| (h.triple.m, h.triple.n, h.triple.r) == (15, 2, 14)));
        assert!(hits.iter().all(|h| h.tau_sum <= 6));
        let hits = zm_search(60, 2, None).unwrap();
        assert!(hits
            .iter()
            .any(|h| (h.triple.m, h.triple.n, h.triple.r) == (3, 2, 2)));
        assert!(zm_search(513, 2, None).is_err());
        let bounded = zm_search(60, 4, Some(5)).unwrap();
        assert!(bounded.iter().all(|h| h.tau_sum <= 5));
    }

    #[test]
    fn search_order_is_canonical() {
        let hits = zm_search(100, 4, None).unwrap();
        let keys: Vec<_> = hits
            .iter()
            .map(|h| (h.triple.order(), h.triple.m, h.triple.n, h.triple.r))
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }
}
