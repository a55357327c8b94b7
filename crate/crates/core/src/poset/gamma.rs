//! The poset of comparable pairs under nesting, and the interval order on the same pairs.
//!
//! `[xy] << [uv]` iff `u <= x` and `y <= v` (and the pairs differ): `[uv]` spans
//! `[xy]`. Upward-closed sets of pairs are exactly the supports of two-sided
//! ideals of the reflexive incidence algebra.

use fixedbitset::FixedBitSet;

use super::{Pair, Poset};
use crate::error::PosetError;

pub const DEFAULT_UP_SET_CAP: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaPoset {
    n: usize,
    pairs: Vec<Pair>,
    /// `index[x * n + y]`
    index: Vec<Option<usize>>,
    /// `above[i]` holds every `j` with `pairs[i] << pairs[j]`.
    above: Vec<FixedBitSet>,
}

/// Every pair `x <= y`: diagonals first in natural-labeling order, then the
/// strict pairs by natural position of `x`, then of `y`.
pub(crate) fn ordered_pairs(poset: &Poset) -> Vec<Pair> {
    let order = poset.natural_labeling();
    let pos = poset.natural_positions();
    let mut pairs: Vec<Pair> = order.iter().map(|&x| Pair::new(x, x)).collect();
    let mut strict: Vec<Pair> = poset.strict_pairs().collect();
    strict.sort_by_key(|p| (pos[p.x], pos[p.y]));
    pairs.extend(strict);
    pairs
}

impl GammaPoset {
    pub fn new(poset: &Poset) -> Self {
        let n = poset.len();
        let pairs = ordered_pairs(poset);
        let mut index = vec![None; n * n];
        for (i, p) in pairs.iter().enumerate() {
            index[p.x * n + p.y] = Some(i);
        }
        let m = pairs.len();
        let mut above = vec![FixedBitSet::with_capacity(m); m];
        for (i, inner) in pairs.iter().enumerate() {
            for (j, outer) in pairs.iter().enumerate() {
                if i != j && poset.leq(outer.x, inner.x) && poset.leq(inner.y, outer.y) {
                    above[i].insert(j);
                }
            }
        }
        GammaPoset {
            n,
            pairs,
            index,
            above,
        }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> &[Pair] {
        &self.pairs
    }

    pub fn pair(&self, i: usize) -> Pair {
        self.pairs[i]
    }

    pub fn index_of(&self, pair: Pair) -> Option<usize> {
        if pair.x >= self.n || pair.y >= self.n {
            return None;
        }
        self.index[pair.x * self.n + pair.y]
    }

    /// `pairs[i] << pairs[j]`.
    pub fn ll(&self, i: usize, j: usize) -> bool {
        self.above[i].contains(j)
    }

    pub fn strictly_above(&self, i: usize) -> &FixedBitSet {
        &self.above[i]
    }

    pub fn empty_set(&self) -> FixedBitSet {
        FixedBitSet::with_capacity(self.len())
    }

    pub fn full_set(&self) -> FixedBitSet {
        let mut s = self.empty_set();
        s.insert_range(..);
        s
    }

    /// `{ j : i << j } ∪ {i}`.
    pub fn principal_up_set(&self, i: usize) -> FixedBitSet {
        let mut s = self.above[i].clone();
        s.insert(i);
        s
    }

    pub fn is_up_closed(&self, set: &FixedBitSet) -> bool {
        set.ones().all(|i| self.above[i].is_subset(set))
    }

    pub fn up_closure(&self, set: &FixedBitSet) -> FixedBitSet {
        let mut out = set.clone();
        for i in set.ones() {
            out.union_with(&self.above[i]);
        }
        out
    }

    /// Members of `set` with no other member of `set` below them.
    pub fn minimal_in(&self, set: &FixedBitSet) -> Vec<usize> {
        set.ones()
            .filter(|&j| !set.ones().any(|i| self.ll(i, j)))
            .collect()
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        self.minimal_in(&self.full_set())
    }

    /// Covering pairs `(i, j)` of `<<`.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            for j in self.above[i].ones() {
                if !self.above[i].ones().any(|k| k != j && self.ll(k, j)) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Streams every upward-closed subset of pairs exactly once, the empty set first.
    pub fn enumerate_up_sets(&self, cap: usize) -> Result<UpSets<'_>, PosetError> {
        if self.len() > cap {
            return Err(PosetError::CapExceeded {
                required: self.len(),
                cap,
            });
        }
        // Tops first: if i << j then j has strictly fewer pairs above it.
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&i| self.above[i].count_ones(..));
        Ok(UpSets {
            gamma: self,
            order,
            stack: vec![(0, self.empty_set())],
        })
    }

    /// Antichain count by direct extension, independent of up-set enumeration.
    pub fn count_antichains(&self) -> u128 {
        fn extend(g: &GammaPoset, start: usize, chosen: &mut Vec<usize>) -> u128 {
            let mut total = 1;
            for i in start..g.len() {
                if chosen.iter().all(|&c| !g.ll(c, i) && !g.ll(i, c)) {
                    chosen.push(i);
                    total += extend(g, i + 1, chosen);
                    chosen.pop();
                }
            }
            total
        }
        extend(self, 0, &mut Vec::new())
    }
}

/// Iterator over up-sets of a [`GammaPoset`].
///
/// Pairs are decided tops-first; a pair may join the set only once every pair
/// above it has, so each branch ends in a distinct up-set and none is pruned.
pub struct UpSets<'a> {
    gamma: &'a GammaPoset,
    order: Vec<usize>,
    stack: Vec<(usize, FixedBitSet)>,
}

impl Iterator for UpSets<'_> {
    type Item = FixedBitSet;

    fn next(&mut self) -> Option<FixedBitSet> {
        while let Some((depth, set)) = self.stack.pop() {
            if depth == self.order.len() {
                return Some(set);
            }
            let e = self.order[depth];
            if self.gamma.above[e].is_subset(&set) {
                let mut with = set.clone();
                with.insert(e);
                self.stack.push((depth + 1, with));
            }
            self.stack.push((depth + 1, set));
        }
        None
    }
}

/// `[xy] R [uv]` iff `y <= u`, over the same pair list as [`GammaPoset`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalOrder {
    pairs: Vec<Pair>,
    rel: Vec<FixedBitSet>,
}

impl IntervalOrder {
    pub fn new(poset: &Poset) -> Self {
        let pairs = ordered_pairs(poset);
        let m = pairs.len();
        let mut rel = vec![FixedBitSet::with_capacity(m); m];
        for (i, a) in pairs.iter().enumerate() {
            for (j, b) in pairs.iter().enumerate() {
                if poset.leq(a.y, b.x) {
                    rel[i].insert(j);
                }
            }
        }
        IntervalOrder { pairs, rel }
    }

    pub fn pairs(&self) -> &[Pair] {
        &self.pairs
    }

    pub fn holds(&self, i: usize, j: usize) -> bool {
        self.rel[i].contains(j)
    }

    /// Indices `i` with `R(i, i)`; these are the diagonal pairs.
    pub fn reflexive_points(&self) -> Vec<usize> {
        (0..self.pairs.len()).filter(|&i| self.holds(i, i)).collect()
    }
}
