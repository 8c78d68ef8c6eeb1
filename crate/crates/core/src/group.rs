//! Finite groups materialized as Cayley tables, and their subgroups.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

use crate::arith::is_prime;
use crate::elements::ElementSet;
use crate::MAX_ORDER;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("group order must be positive")]
    EmptyGroup,
    #[error("group order {order} exceeds the supported maximum of {max}", max = MAX_ORDER)]
    OrderTooLarge { order: usize },
    #[error("expected {expected} table entries, found {found}")]
    TableShape { expected: usize, found: usize },
    #[error("table entry [{row}][{col}] = {value} is not an element index below {order}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("element index {index} out of range for a group of order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("table has no two-sided identity element")]
    NoIdentity,
    #[error("element {element} has no two-sided inverse")]
    NoInverse { element: usize },
    #[error("table is not associative: ({g}*{h})*{k} != {g}*({h}*{k})")]
    NotAssociative { g: usize, h: usize, k: usize },
    #[error("subgroup belongs to a group of order {found}, expected {expected}")]
    ParentMismatch { expected: usize, found: usize },
}

/// A finite group stored as its full multiplication table.
///
/// Element `0` is always the identity.
#[derive(Clone, PartialEq, Eq)]
pub struct Group {
    order: usize,
    table: Vec<u16>,
    inverse: Vec<u16>,
    element_orders: Vec<u32>,
    label: String,
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Group")
            .field("label", &self.label)
            .field("order", &self.order)
            .finish()
    }
}

impl Group {
    /// Builds a group from an arbitrary Cayley table, validating the group
    /// axioms and relabeling so that the identity sits at index 0.
    ///
    /// `table[g * order + h]` is the product `g * h`.
    pub fn from_table(
        order: usize,
        table: &[usize],
        label: impl Into<String>,
    ) -> Result<Group, GroupError> {
        check_shape(order, table.len())?;
        for (pos, &value) in table.iter().enumerate() {
            if value >= order {
                return Err(GroupError::EntryOutOfRange {
                    row: pos / order,
                    col: pos % order,
                    value,
                    order,
                });
            }
        }
        let identity = (0..order)
            .find(|&e| (0..order).all(|h| table[e * order + h] == h && table[h * order + e] == h))
            .ok_or(GroupError::NoIdentity)?;

        // swap the identity into slot 0
        let relabel = |x: usize| {
            if x == identity {
                0
            } else if x == 0 {
                identity
            } else {
                x
            }
        };
        let mut relabeled = vec![0u16; order * order];
        for g in 0..order {
            for h in 0..order {
                let v = table[relabel(g) * order + relabel(h)];
                relabeled[g * order + h] = relabel(v) as u16;
            }
        }

        let inverse = inverses(order, &relabeled)?;
        check_associative(order, &relabeled)?;
        Ok(Group::assemble(order, relabeled, inverse, label.into()))
    }

    /// Builds a group from a table produced by one of the catalog
    /// constructors. Identity must already be at index 0; the full axiom
    /// check is left to [`Group::validate`].
    pub(crate) fn from_trusted_table(order: usize, table: Vec<u16>, label: String) -> Group {
        debug_assert_eq!(table.len(), order * order);
        debug_assert!((0..order).all(|h| table[h] as usize == h));
        let inverse =
            inverses(order, &table).expect("constructor produced a table without inverses");
        Group::assemble(order, table, inverse, label)
    }

    fn assemble(order: usize, table: Vec<u16>, inverse: Vec<u16>, label: String) -> Group {
        let mut element_orders = vec![0u32; order];
        for (g, slot) in element_orders.iter_mut().enumerate() {
            let mut x = g;
            let mut k = 1;
            while x != 0 {
                x = table[x * order + g] as usize;
                k += 1;
            }
            *slot = k;
        }
        Group {
            order,
            table,
            inverse,
            element_orders,
            label,
        }
    }

    /// Re-checks identity, inverses and associativity over the whole table.
    pub fn validate(&self) -> Result<(), GroupError> {
        let n = self.order;
        if (0..n).any(|h| self.mul(0, h) != h || self.mul(h, 0) != h) {
            return Err(GroupError::NoIdentity);
        }
        for g in 0..n {
            let gi = self.inv(g);
            if self.mul(g, gi) != 0 || self.mul(gi, g) != 0 {
                return Err(GroupError::NoInverse { element: g });
            }
        }
        check_associative(n, &self.table)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Group {
        self.label = label.into();
        self
    }

    #[inline]
    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.table[g * self.order + h] as usize
    }

    #[inline]
    pub fn inv(&self, g: usize) -> usize {
        self.inverse[g] as usize
    }

    #[inline]
    pub fn element_order(&self, g: usize) -> usize {
        self.element_orders[g] as usize
    }

    pub fn element_orders(&self) -> impl Iterator<Item = usize> + '_ {
        self.element_orders.iter().map(|&o| o as usize)
    }

    pub fn pow(&self, g: usize, k: usize) -> usize {
        let k = k % self.element_order(g);
        (0..k).fold(0, |acc, _| self.mul(acc, g))
    }

    /// `g h g⁻¹`
    #[inline]
    pub fn conjugate(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(g, h), self.inv(g))
    }

    pub fn commutes(&self, g: usize, h: usize) -> bool {
        self.mul(g, h) == self.mul(h, g)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|g| (g + 1..self.order).all(|h| self.commutes(g, h)))
    }

    pub fn is_cyclic(&self) -> bool {
        self.element_orders().any(|o| o == self.order)
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    /// True iff every non-identity element has prime order.
    pub fn all_nontrivial_elements_prime_order(&self) -> bool {
        self.element_orders().skip(1).all(|o| is_prime(o as u64))
    }

    pub fn check_index(&self, index: usize) -> Result<(), GroupError> {
        if index < self.order {
            Ok(())
        } else {
            Err(GroupError::IndexOutOfRange {
                index,
                order: self.order,
            })
        }
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_members(self.order, ElementSet::full(self.order))
    }

    pub fn trivial(&self) -> Subgroup {
        Subgroup::from_members(self.order, ElementSet::singleton(0))
    }

    /// Smallest subgroup containing `gens`.
    pub fn closure(&self, gens: &[usize]) -> Result<Subgroup, GroupError> {
        for &g in gens {
            self.check_index(g)?;
        }
        let members = self.close_from(&ElementSet::singleton(0), gens);
        Ok(Subgroup::from_members(self.order, members))
    }

    /// Closes `start` under right multiplication by `gens`.
    ///
    /// When `start` is contained in the subgroup generated by `gens` the
    /// result is exactly that subgroup.
    pub(crate) fn close_from(&self, start: &ElementSet, gens: &[usize]) -> ElementSet {
        let mut set = *start;
        let mut queue: Vec<usize> = start.iter().collect();
        let gens: Vec<usize> = gens.iter().copied().filter(|&g| g != 0).collect();
        let mut next = 0;
        while next < queue.len() {
            let x = queue[next];
            next += 1;
            for &s in &gens {
                let y = self.mul(x, s);
                if set.insert(y) {
                    queue.push(y);
                }
            }
        }
        set
    }

    /// `{ g h g⁻¹ : h ∈ H }`
    pub fn conjugate_subgroup(
        &self,
        subgroup: &Subgroup,
        g: usize,
    ) -> Result<Subgroup, GroupError> {
        self.check_member_of(subgroup)?;
        self.check_index(g)?;
        let members = subgroup.iter().map(|h| self.conjugate(g, h)).collect();
        Ok(Subgroup::from_members(self.order, members))
    }

    pub fn center(&self) -> Subgroup {
        let members = (0..self.order)
            .filter(|&g| (0..self.order).all(|h| self.commutes(g, h)))
            .collect();
        Subgroup::from_members(self.order, members)
    }

    /// The commutator subgroup, generated by all `g⁻¹ h⁻¹ g h`.
    pub fn derived_subgroup(&self) -> Subgroup {
        let mut commutators = ElementSet::singleton(0);
        for g in 0..self.order {
            for h in 0..self.order {
                let c = self.mul(self.mul(self.inv(g), self.inv(h)), self.mul(g, h));
                commutators.insert(c);
            }
        }
        let gens: Vec<usize> = commutators.iter().collect();
        Subgroup::from_members(
            self.order,
            self.close_from(&ElementSet::singleton(0), &gens),
        )
    }

    pub(crate) fn check_member_of(&self, subgroup: &Subgroup) -> Result<(), GroupError> {
        if subgroup.parent_order() == self.order {
            Ok(())
        } else {
            Err(GroupError::ParentMismatch {
                expected: self.order,
                found: subgroup.parent_order(),
            })
        }
    }

    /// Row `g` of the table, i.e. `g * h` for `h = 0..order`.
    pub fn row(&self, g: usize) -> impl Iterator<Item = usize> + '_ {
        self.table[g * self.order..(g + 1) * self.order]
            .iter()
            .map(|&x| x as usize)
    }
}

fn check_shape(order: usize, len: usize) -> Result<(), GroupError> {
    if order == 0 {
        return Err(GroupError::EmptyGroup);
    }
    if order > MAX_ORDER {
        return Err(GroupError::OrderTooLarge { order });
    }
    if len != order * order {
        return Err(GroupError::TableShape {
            expected: order * order,
            found: len,
        });
    }
    Ok(())
}

fn inverses(order: usize, table: &[u16]) -> Result<Vec<u16>, GroupError> {
    (0..order)
        .map(|g| {
            (0..order)
                .find(|&h| table[g * order + h] == 0 && table[h * order + g] == 0)
                .map(|h| h as u16)
                .ok_or(GroupError::NoInverse { element: g })
        })
        .collect()
}

fn check_associative(order: usize, table: &[u16]) -> Result<(), GroupError> {
    let at = |a: usize, b: usize| table[a * order + b] as usize;
    for g in 0..order {
        for h in 0..order {
            let gh = at(g, h);
            for k in 0..order {
                if at(gh, k) != at(g, at(h, k)) {
                    return Err(GroupError::NotAssociative { g, h, k });
                }
            }
        }
    }
    Ok(())
}

/// A subgroup, stored as a membership bitmap over the parent's elements.
///
/// Equality and hashing use the members only. The ordering is the
/// canonical lattice order: by size, then by ascending member list.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Subgroup {
    parent_order: u16,
    size: u16,
    members: ElementSet,
}

impl Subgroup {
    pub(crate) fn from_members(parent_order: usize, members: ElementSet) -> Subgroup {
        Subgroup {
            parent_order: parent_order as u16,
            size: members.len() as u16,
            members,
        }
    }

    /// Checks that `members` is a subgroup of `group` and wraps it.
    pub fn new(group: &Group, members: ElementSet) -> Option<Subgroup> {
        if !members.contains(0) || members.iter().any(|x| x >= group.order()) {
            return None;
        }
        let closed = members.iter().all(|g| {
            members.contains(group.inv(g))
                && members.iter().all(|h| members.contains(group.mul(g, h)))
        });
        closed.then(|| Subgroup::from_members(group.order(), members))
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.size as usize
    }

    #[inline]
    pub fn parent_order(&self) -> usize {
        self.parent_order as usize
    }

    #[inline]
    pub fn members(&self) -> &ElementSet {
        &self.members
    }

    #[inline]
    pub fn contains(&self, g: usize) -> bool {
        self.members.contains(g)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn is_trivial(&self) -> bool {
        self.size == 1
    }

    pub fn is_whole(&self) -> bool {
        self.size == self.parent_order
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        Subgroup::from_members(
            self.parent_order(),
            self.members.intersection(&other.members),
        )
    }
}

impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size
            .cmp(&other.size)
            .then_with(|| self.members.lex_cmp(&other.members))
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup(|H|={}, {:?})", self.size, self.members)
    }
}
