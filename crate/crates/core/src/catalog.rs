//! The built-in group catalog used by sweeps: every constructor atom of
//! order at most `max_order`, plus every binary direct product of two
//! non-trivial atoms within the same bound.

use std::collections::BTreeSet;

use crate::spec::{Atom, GroupSpec};
use crate::zm::nonabelian_triples;

/// Every atom of order `<= max_order`, in a fixed order.
pub fn catalog_atoms(max_order: usize) -> Vec<Atom> {
    let mut atoms = Vec::new();
    atoms.extend((1..=max_order).map(Atom::Cyclic));
    atoms.extend((4..=max_order).step_by(2).map(Atom::Dihedral));
    atoms.extend(
        (3..usize::BITS)
            .map(|e| 1usize << e)
            .take_while(|&q| q <= max_order)
            .map(Atom::Quaternion),
    );
    atoms.extend((3..=5).map(Atom::Alternating));
    atoms.extend((2..=5).map(Atom::Symmetric));
    atoms.extend(
        nonabelian_triples(max_order as u64)
            .into_iter()
            .map(|t| Atom::Zm(t.m, t.n, t.r)),
    );
    atoms.retain(|a| a.order().is_ok_and(|o| o <= max_order));
    atoms
}

/// Catalog specs, deduplicated by normalized text (an unordered pair of
/// atoms appears once) and sorted by `(order, text)`.
pub fn catalog(max_order: usize) -> Vec<GroupSpec> {
    let atoms = catalog_atoms(max_order);
    let with_order: Vec<(Atom, usize)> = atoms
        .iter()
        .map(|&a| (a, a.order().expect("catalog atoms are valid")))
        .collect();

    let mut seen = BTreeSet::new();
    let mut specs = Vec::new();
    let mut push = |spec: GroupSpec| {
        let key = (spec.order(), spec.to_string());
        if seen.insert(key) {
            specs.push(spec);
        }
    };
    for &(a, _) in &with_order {
        push(GroupSpec::Atom(a));
    }
    for (i, &(a, oa)) in with_order.iter().enumerate() {
        if oa < 2 {
            continue;
        }
        for &(b, ob) in &with_order[i..] {
            if ob < 2 || oa * ob > max_order {
                continue;
            }
            // smaller factor first so "Z2 x S3" and "S3 x Z2" coincide
            let (x, y) = if (oa, a.to_string()) <= (ob, b.to_string()) {
                (a, b)
            } else {
                (b, a)
            };
            push(GroupSpec::Atom(x).product(GroupSpec::Atom(y)));
        }
    }
    specs.sort_by_cached_key(|s| (s.order(), s.to_string()));
    specs
}
