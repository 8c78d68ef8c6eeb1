//! Exhaustive subgroup enumeration with inclusion and covering relations.
//!
//! Subgroups are found by a fixpoint: start from every cyclic subgroup and
//! keep joining known subgroups with cyclic subgroups of prime-power order
//! until nothing new appears. Every subgroup is generated by its elements,
//! and every element is a product of commuting prime-power-order powers of
//! itself, so the fixpoint is the whole lattice.

use std::collections::HashMap;

use rayon::prelude::*;
use thiserror::Error;

use crate::arith::prime_power_base;
use crate::elements::ElementSet;
use crate::group::{Group, Subgroup};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("subgroup index {index} out of range for a lattice of {len} subgroups")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("subgroup #{lower} is not a proper subgroup of #{upper}")]
    NotProperSubgroup { lower: usize, upper: usize },
}

/// Fixed-width row of a boolean relation over lattice indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct BitRow(Vec<u64>);

impl BitRow {
    pub(crate) fn new(len: usize) -> Self {
        BitRow(vec![0; len.div_ceil(64)])
    }

    #[inline]
    pub(crate) fn get(&self, i: usize) -> bool {
        self.0[i >> 6] >> (i & 63) & 1 == 1
    }

    #[inline]
    pub(crate) fn set(&mut self, i: usize) {
        self.0[i >> 6] |= 1 << (i & 63);
    }

    pub(crate) fn or_assign(&mut self, other: &BitRow) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a |= b;
        }
    }

    pub(crate) fn and_not(&self, other: &BitRow) -> BitRow {
        BitRow(self.0.iter().zip(&other.0).map(|(a, b)| a & !b).collect())
    }

    /// Index of the first bit set in all three rows.
    pub(crate) fn first_common(&self, b: &BitRow, c: &BitRow) -> Option<usize> {
        self.0
            .iter()
            .zip(&b.0)
            .zip(&c.0)
            .enumerate()
            .find_map(|(w, ((x, y), z))| {
                let word = x & y & z;
                (word != 0).then(|| w * 64 + word.trailing_zeros() as usize)
            })
    }

    pub(crate) fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(w, &word)| {
            let mut word = word;
            std::iter::from_fn(move || {
                if word == 0 {
                    return None;
                }
                let bit = word.trailing_zeros() as usize;
                word &= word - 1;
                Some(w * 64 + bit)
            })
        })
    }
}

/// All subgroups of a group in canonical order, with inclusion and covers.
///
/// Index 0 is the trivial subgroup and the last index is the whole group.
#[derive(Clone, Debug)]
pub struct SubgroupLattice {
    group_order: usize,
    subgroups: Vec<Subgroup>,
    generators: Vec<Vec<u16>>,
    index: HashMap<ElementSet, usize>,
    /// `below[k]` holds every `h` with `H < K`.
    below: Vec<BitRow>,
    /// `maximal[k]` holds every `h` with `H` maximal in `K`.
    maximal: Vec<BitRow>,
    /// `above[h]` holds every `k` with `H < K`.
    above: Vec<BitRow>,
}

/// Enumerates every subgroup of `group`.
pub fn enumerate_subgroups(group: &Group) -> SubgroupLattice {
    let n = group.order();

    // cyclic subgroups, keyed by member set, with one generator each
    let mut known: HashMap<ElementSet, Vec<u16>> = HashMap::new();
    let mut cyclic_order: Vec<ElementSet> = Vec::new();
    let mut joiners: Vec<(ElementSet, u16)> = Vec::new();
    for g in 0..n {
        let members = group.close_from(&ElementSet::singleton(0), &[g]);
        if known.contains_key(&members) {
            continue;
        }
        known.insert(members, if g == 0 { vec![] } else { vec![g as u16] });
        cyclic_order.push(members);
        if prime_power_base(group.element_order(g) as u64).is_some() {
            joiners.push((members, g as u16));
        }
    }

    let mut frontier = cyclic_order;
    while !frontier.is_empty() {
        let found: Vec<(ElementSet, Vec<u16>)> = frontier
            .par_iter()
            .flat_map_iter(|h| {
                let gens = &known[h];
                let known = &known;
                joiners.iter().filter_map(move |&(c, g)| {
                    if c.is_subset(h) {
                        return None;
                    }
                    let mut joined_gens: Vec<usize> = gens.iter().map(|&x| x as usize).collect();
                    joined_gens.push(g as usize);
                    let k = group.close_from(h, &joined_gens);
                    (!known.contains_key(&k))
                        .then(|| (k, joined_gens.into_iter().map(|x| x as u16).collect()))
                })
            })
            .collect();
        let mut next = Vec::new();
        for (k, gens) in found {
            if let std::collections::hash_map::Entry::Vacant(slot) = known.entry(k) {
                slot.insert(gens);
                next.push(k);
            }
        }
        frontier = next;
    }

    let mut entries: Vec<(Subgroup, Vec<u16>)> = known
        .into_iter()
        .map(|(members, gens)| (Subgroup::from_members(n, members), gens))
        .collect();
    entries.sort_unstable_by_key(|a| a.0);
    let (subgroups, generators): (Vec<_>, Vec<_>) = entries.into_iter().unzip();
    SubgroupLattice::from_sorted(n, subgroups, generators)
}

impl SubgroupLattice {
    fn from_sorted(
        group_order: usize,
        subgroups: Vec<Subgroup>,
        generators: Vec<Vec<u16>>,
    ) -> Self {
        let len = subgroups.len();
        let index = subgroups
            .iter()
            .enumerate()
            .map(|(i, s)| (*s.members(), i))
            .collect();

        // sorted by size, so proper subgroups always have a smaller index
        let below: Vec<BitRow> = (0..len)
            .into_par_iter()
            .map(|k| {
                let upper = &subgroups[k];
                let mut row = BitRow::new(len);
                for (h, lower) in subgroups[..k].iter().enumerate() {
                    if lower.size() < upper.size()
                        && upper.size().is_multiple_of(lower.size())
                        && lower.is_subgroup_of(upper)
                    {
                        row.set(h);
                    }
                }
                row
            })
            .collect();

        let maximal: Vec<BitRow> = (0..len)
            .into_par_iter()
            .map(|k| {
                let mut covered = BitRow::new(len);
                for x in below[k].iter() {
                    covered.or_assign(&below[x]);
                }
                below[k].and_not(&covered)
            })
            .collect();

        let mut above = vec![BitRow::new(len); len];
        for (k, row) in below.iter().enumerate() {
            for h in row.iter() {
                above[h].set(k);
            }
        }

        SubgroupLattice {
            group_order,
            subgroups,
            generators,
            index,
            below,
            maximal,
            above,
        }
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn get(&self, i: usize) -> &Subgroup {
        &self.subgroups[i]
    }

    pub fn trivial_index(&self) -> usize {
        0
    }

    pub fn whole_index(&self) -> usize {
        self.subgroups.len() - 1
    }

    /// A generating set for subgroup `i`.
    pub fn generators(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.generators[i].iter().map(|&g| g as usize)
    }

    pub fn index_of(&self, subgroup: &Subgroup) -> Option<usize> {
        self.index.get(subgroup.members()).copied()
    }

    pub fn index_of_members(&self, members: &ElementSet) -> Option<usize> {
        self.index.get(members).copied()
    }

    /// `H <= K`
    pub fn includes(&self, h: usize, k: usize) -> bool {
        h == k || self.below[k].get(h)
    }

    /// `H < K`
    pub fn strictly_below(&self, h: usize, k: usize) -> bool {
        self.below[k].get(h)
    }

    /// `K` covers `H`: `H < K` with nothing strictly between.
    pub fn covers(&self, h: usize, k: usize) -> bool {
        self.maximal[k].get(h)
    }

    fn check_pair(&self, h: usize, k: usize) -> Result<(), LatticeError> {
        for index in [h, k] {
            if index >= self.len() {
                return Err(LatticeError::IndexOutOfRange {
                    index,
                    len: self.len(),
                });
            }
        }
        if !self.strictly_below(h, k) {
            return Err(LatticeError::NotProperSubgroup { lower: h, upper: k });
        }
        Ok(())
    }

    /// Whether `H` is a maximal subgroup of `K`. Requires `H < K`.
    pub fn is_maximal_in(&self, h: usize, k: usize) -> Result<bool, LatticeError> {
        self.check_pair(h, k)?;
        Ok(self.covers(h, k))
    }

    /// All `X` with `H < X < K`, in canonical order. Requires `H < K`.
    pub fn open_interval(&self, h: usize, k: usize) -> Result<Vec<usize>, LatticeError> {
        self.check_pair(h, k)?;
        Ok(self.below[k]
            .iter()
            .filter(|&x| self.above[h].get(x))
            .collect())
    }

    pub fn maximal_subgroups(&self, k: usize) -> impl Iterator<Item = usize> + '_ {
        self.maximal[k].iter()
    }

    /// Every covering pair `(H, K)`, ordered by `K` then `H`.
    pub fn cover_edges(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|k| self.maximal[k].iter().map(move |h| (h, k)))
            .collect()
    }

    /// Index of `H ∩ K`.
    pub fn meet(&self, h: usize, k: usize) -> usize {
        let members = self.subgroups[h]
            .members()
            .intersection(self.subgroups[k].members());
        self.index[&members]
    }

    /// Index of `<H, K>`.
    pub fn join(&self, group: &Group, h: usize, k: usize) -> usize {
        let gens: Vec<usize> = self.generators(h).chain(self.generators(k)).collect();
        let members = group.close_from(self.subgroups[h].members(), &gens);
        self.index[&members]
    }

    pub(crate) fn below_row(&self, k: usize) -> &BitRow {
        &self.below[k]
    }

    pub(crate) fn above_row(&self, h: usize) -> &BitRow {
        &self.above[h]
    }
}
