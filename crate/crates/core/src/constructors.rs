//! Catalog constructors: cyclic, dihedral, generalized quaternion,
//! symmetric and alternating groups, ZM(m,n,r), and direct products.

use std::collections::HashMap;

use thiserror::Error;

use crate::group::Group;
use crate::zm::{validate_zm_triple, ZmError, ZmTriple};
use crate::MAX_ORDER;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("{what}: order {order} is outside 1..={max}", max = MAX_ORDER)]
    OrderOutOfRange { what: &'static str, order: usize },
    #[error("dihedral size must be an even integer >= 4, got {0}")]
    BadDihedralSize(usize),
    #[error("quaternion size must be a power of two >= 8, got {0}")]
    BadQuaternionSize(usize),
    #[error("{kind} degree must be in {lo}..={hi}, got {n}")]
    BadDegree {
        kind: &'static str,
        n: usize,
        lo: usize,
        hi: usize,
    },
    #[error(transparent)]
    Zm(#[from] ZmError),
    #[error("constructed table for {label} violates the relation {relation}")]
    RelationFailed {
        label: String,
        relation: &'static str,
    },
}

fn check_order(what: &'static str, order: usize) -> Result<(), ConstructError> {
    if (1..=MAX_ORDER).contains(&order) {
        Ok(())
    } else {
        Err(ConstructError::OrderOutOfRange { what, order })
    }
}

fn tabulate(order: usize, mul: impl Fn(usize, usize) -> usize) -> Vec<u16> {
    let mut table = Vec::with_capacity(order * order);
    for g in 0..order {
        for h in 0..order {
            table.push(mul(g, h) as u16);
        }
    }
    table
}

/// `Z_n`, with `table[i][j] = (i + j) mod n`.
pub fn make_cyclic(n: usize) -> Result<Group, ConstructError> {
    check_order("cyclic group", n)?;
    Ok(Group::from_trusted_table(
        n,
        tabulate(n, |i, j| (i + j) % n),
        format!("Z{n}"),
    ))
}

/// Dihedral group of the given order `2m`.
///
/// Rotations `r^i` are indices `0..m`, reflections `s r^i` are `m..2m`.
pub fn make_dihedral(size: usize) -> Result<Group, ConstructError> {
    if size < 4 || !size.is_multiple_of(2) {
        return Err(ConstructError::BadDihedralSize(size));
    }
    check_order("dihedral group", size)?;
    let m = size / 2;
    let table = tabulate(size, |g, h| {
        let (fg, i) = (g / m, g % m);
        let (fh, j) = (h / m, h % m);
        match (fg, fh) {
            (0, 0) => (i + j) % m,
            (0, _) => m + (j + m - i) % m,
            (_, 0) => m + (i + j) % m,
            _ => (j + m - i) % m,
        }
    });
    Ok(Group::from_trusted_table(size, table, format!("D{size}")))
}

/// Generalized quaternion group `Q_{2^n}` of the given order.
///
/// Elements `a^i b^e` sit at index `e * M + i` with `M = size / 2`.
pub fn make_quaternion(size: usize) -> Result<Group, ConstructError> {
    if size < 8 || !size.is_power_of_two() {
        return Err(ConstructError::BadQuaternionSize(size));
    }
    check_order("quaternion group", size)?;
    let m = size / 2;
    let half = m / 2;
    let table = tabulate(size, |g, h| {
        let (eg, i) = (g / m, g % m);
        let (eh, j) = (h / m, h % m);
        match (eg, eh) {
            (0, 0) => (i + j) % m,
            (0, _) => m + (i + j) % m,
            (_, 0) => m + (i + m - j) % m,
            _ => (i + m - j + half) % m,
        }
    });
    let label = format!("Q{size}");
    let group = Group::from_trusted_table(size, table, label.clone());

    let (a, b) = (1, m);
    let fail = |relation| ConstructError::RelationFailed {
        label: label.clone(),
        relation,
    };
    if group.element_order(a) != m {
        return Err(fail("a^(2^(n-1)) = 1"));
    }
    if group.pow(a, half) != group.mul(b, b) {
        return Err(fail("b^2 = a^(2^(n-2))"));
    }
    if group.mul(group.mul(group.inv(b), a), b) != group.inv(a) {
        return Err(fail("b^-1 a b = a^-1"));
    }
    Ok(group)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn extend(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                prefix.push(x);
                extend(prefix, used, out);
                prefix.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn is_even(perm: &[usize]) -> bool {
    let inversions = (0..perm.len())
        .flat_map(|i| (i + 1..perm.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| perm[i] > perm[j])
        .count();
    inversions % 2 == 0
}

fn permutation_group(perms: Vec<Vec<usize>>, label: String) -> Group {
    let index: HashMap<&[usize], usize> = perms
        .iter()
        .enumerate()
        .map(|(i, p)| (p.as_slice(), i))
        .collect();
    let order = perms.len();
    // (g h)(x) = g(h(x))
    let table = tabulate(order, |g, h| {
        let composed: Vec<usize> = perms[h].iter().map(|&x| perms[g][x]).collect();
        index[composed.as_slice()]
    });
    Group::from_trusted_table(order, table, label)
}

/// `S_n` for `2 <= n <= 5`, elements in lexicographic order.
pub fn make_symmetric(n: usize) -> Result<Group, ConstructError> {
    if !(2..=5).contains(&n) {
        return Err(ConstructError::BadDegree {
            kind: "symmetric",
            n,
            lo: 2,
            hi: 5,
        });
    }
    Ok(permutation_group(permutations(n), format!("S{n}")))
}

/// `A_n` for `3 <= n <= 5`, even permutations in lexicographic order.
pub fn make_alternating(n: usize) -> Result<Group, ConstructError> {
    if !(3..=5).contains(&n) {
        return Err(ConstructError::BadDegree {
            kind: "alternating",
            n,
            lo: 3,
            hi: 5,
        });
    }
    let even = permutations(n).into_iter().filter(|p| is_even(p)).collect();
    Ok(permutation_group(even, format!("A{n}")))
}

/// `ZM(m,n,r) = <a, b | a^m = b^n = 1, b^-1 a b = a^r>`.
///
/// The element `b^x a^y` is stored at index `x*m + y`, and
/// `(x1,y1)(x2,y2) = (x1+x2 mod n, y1 r^x2 + y2 mod m)`.
pub fn make_zm(m: u64, n: u64, r: u64) -> Result<Group, ConstructError> {
    let triple = validate_zm_triple(m, n, r)?;
    build_zm(&triple)
}

pub fn build_zm(triple: &ZmTriple) -> Result<Group, ConstructError> {
    let (m, n, r) = (triple.m as usize, triple.n as usize, triple.r as usize);
    let order =
        m.checked_mul(n)
            .filter(|&o| o <= MAX_ORDER)
            .ok_or(ConstructError::OrderOutOfRange {
                what: "ZM group",
                order: m.saturating_mul(n),
            })?;
    // r^x mod m for x in 0..n
    let mut r_pow = vec![1 % m; n];
    for x in 1..n {
        r_pow[x] = r_pow[x - 1] * r % m;
    }
    let table = tabulate(order, |g, h| {
        let (x1, y1) = (g / m, g % m);
        let (x2, y2) = (h / m, h % m);
        ((x1 + x2) % n) * m + (y1 * r_pow[x2] + y2) % m
    });
    let label = triple.to_string();
    let group = Group::from_trusted_table(order, table, label.clone());

    let a = 1 % m;
    let b = if n > 1 { m } else { 0 };
    let fail = |relation| ConstructError::RelationFailed {
        label: label.clone(),
        relation,
    };
    if group.element_order(a) != m {
        return Err(fail("a^m = 1"));
    }
    if group.element_order(b) != n {
        return Err(fail("b^n = 1"));
    }
    if group.mul(group.mul(group.inv(b), a), b) != group.pow(a, r) {
        return Err(fail("b^-1 a b = a^r"));
    }
    Ok(group)
}

/// `A × B` on pairs, with `(a, b)` stored at index `a * |B| + b`.
pub fn direct_product(a: &Group, b: &Group) -> Result<Group, ConstructError> {
    let order = a.order() * b.order();
    check_order("direct product", order)?;
    let nb = b.order();
    let table = tabulate(order, |g, h| {
        a.mul(g / nb, h / nb) * nb + b.mul(g % nb, h % nb)
    });
    Ok(Group::from_trusted_table(
        order,
        table,
        format!("{} x {}", a.label(), b.label()),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted_orders(g: &Group) -> Vec<usize> {
        let mut v: Vec<usize> = g.element_orders().collect();
        v.sort_unstable();
        v
    }

    #[test]
    fn cyclic() {
        assert!(make_cyclic(1).unwrap().is_trivial());
        assert!(make_cyclic(5)
            .unwrap()
            .element_orders()
            .skip(1)
            .all(|o| o == 5));
        let z12 = make_cyclic(12).unwrap();
        assert_eq!(
            z12.element_orders().collect::<Vec<_>>(),
            vec![1, 12, 6, 4, 3, 12, 2, 12, 3, 4, 6, 12]
        );
        assert!(make_cyclic(0).is_err());
        assert!(make_cyclic(513).is_err());
        assert!(make_cyclic(512).is_ok());
    }

    #[test]
    fn dihedral() {
        let d6 = make_dihedral(6).unwrap();
        assert!(!d6.is_abelian());
        assert_eq!(sorted_orders(&d6), vec![1, 2, 2, 2, 3, 3]);
        assert!(make_dihedral(4).unwrap().is_abelian());
        assert_eq!(make_dihedral(5), Err(ConstructError::BadDihedralSize(5)));
        assert_eq!(make_dihedral(2), Err(ConstructError::BadDihedralSize(2)));
        assert!(make_dihedral(514).is_err());
    }

    #[test]
    fn quaternion() {
        let q8 = make_quaternion(8).unwrap();
        assert_eq!(sorted_orders(&q8), vec![1, 2, 4, 4, 4, 4, 4, 4]);
        let q16 = make_quaternion(16).unwrap();
        assert!(q16.element_orders().any(|o| o == 8));
        assert_eq!(q16.element_orders().filter(|&o| o == 2).count(), 1);
        assert_eq!(
            make_quaternion(12),
            Err(ConstructError::BadQuaternionSize(12))
        );
        assert_eq!(
            make_quaternion(4),
            Err(ConstructError::BadQuaternionSize(4))
        );
        assert!(make_quaternion(512).is_ok());
        assert!(make_quaternion(1024).is_err());
    }

    #[test]
    fn permutation_groups() {
        assert_eq!(make_symmetric(2).unwrap().order(), 2);
        assert_eq!(make_symmetric(5).unwrap().order(), 120);
        assert_eq!(make_alternating(3).unwrap().order(), 3);
        assert_eq!(make_alternating(4).unwrap().order(), 12);
        let a5 = make_alternating(5).unwrap();
        assert_eq!(a5.order(), 60);
        assert!(a5.element_orders().skip(1).all(|o| [2, 3, 5].contains(&o)));
        assert!(make_alternating(4)
            .unwrap()
            .all_nontrivial_elements_prime_order());
        assert!(a5.all_nontrivial_elements_prime_order());
        assert!(make_symmetric(6).is_err());
        assert!(make_alternating(2).is_err());
    }

    #[test]
    fn zm_relations_and_errors() {
        let g = make_zm(3, 2, 2).unwrap();
        assert_eq!(g.order(), 6);
        assert!(g.center().is_trivial());
        assert_eq!(g.label(), "ZM(3,2,2)");
        assert!(matches!(make_zm(4, 2, 3), Err(ConstructError::Zm(_))));
        assert!(matches!(
            make_zm(257, 2, 256),
            Err(ConstructError::OrderOutOfRange { .. })
        ));
        let g = make_zm(5, 4, 2).unwrap();
        assert_eq!(g.order(), 20);
    }

    #[test]
    fn products() {
        let z2 = make_cyclic(2).unwrap();
        let v4 = direct_product(&z2, &z2).unwrap();
        assert_eq!(v4.order(), 4);
        assert!(!v4.is_cyclic());
        assert_eq!(v4.label(), "Z2 x Z2");
        let big = make_cyclic(300).unwrap();
        assert!(direct_product(&z2, &big).is_err());
    }

    #[test]
    fn constructor_outputs_are_groups() {
        let groups = vec![
            make_cyclic(1).unwrap(),
            make_cyclic(9).unwrap(),
            make_dihedral(4).unwrap(),
            make_dihedral(30).unwrap(),
            make_quaternion(8).unwrap(),
            make_quaternion(32).unwrap(),
            make_symmetric(4).unwrap(),
            make_alternating(4).unwrap(),
            make_zm(7, 3, 2).unwrap(),
            make_zm(9, 2, 8).unwrap(),
            make_zm(5, 4, 3).unwrap(),
            direct_product(&make_symmetric(3).unwrap(), &make_quaternion(8).unwrap()).unwrap(),
        ];
        for g in groups {
            assert_eq!(g.validate(), Ok(()), "{}", g.label());
        }
    }
}
