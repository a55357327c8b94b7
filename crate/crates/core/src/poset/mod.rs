//! Finite posets stored as a strict, transitively closed relation.
//!
//! The reflexive view `leq` is derived: `leq(x, y)` holds when `x == y` or
//! `x < y`. Everything downstream (pairs, generators, the pair-poset) is built
//! on that view.

pub mod corpus;
mod gamma;
mod iso;
mod text;

use std::collections::HashMap;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::PosetError;

pub use gamma::{GammaPoset, IntervalOrder, UpSets, DEFAULT_UP_SET_CAP};
pub use iso::{is_isomorphic, is_isomorphic_bounded, DEFAULT_ISO_BOUND};

/// An ordered comparable pair `x <= y`; the generator `[xy]` of the incidence algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pair {
    pub x: usize,
    pub y: usize,
}

impl Pair {
    pub fn new(x: usize, y: usize) -> Self {
        Pair { x, y }
    }

    pub fn is_diagonal(&self) -> bool {
        self.x == self.y
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poset {
    labels: Vec<String>,
    /// `above[x]` holds every `y` with `x < y`.
    above: Vec<FixedBitSet>,
}

impl Poset {
    /// Builds the poset generated by `relations` (pairs `(a, b)` meaning `a < b`).
    ///
    /// Self-relations are dropped; the rest is transitively closed. A cycle
    /// through two or more distinct elements is rejected.
    pub fn from_relations<S: AsRef<str>>(
        labels: &[S],
        relations: &[(S, S)],
    ) -> Result<Self, PosetError> {
        let labels: Vec<String> = labels.iter().map(|l| l.as_ref().to_owned()).collect();
        let mut index = HashMap::with_capacity(labels.len());
        for (i, label) in labels.iter().enumerate() {
            if index.insert(label.as_str(), i).is_some() {
                return Err(PosetError::DuplicateLabel(label.clone()));
            }
        }
        let lookup = |l: &str| {
            index
                .get(l)
                .copied()
                .ok_or_else(|| PosetError::UnknownLabel(l.to_owned()))
        };
        let mut edges = Vec::with_capacity(relations.len());
        for (a, b) in relations {
            edges.push((lookup(a.as_ref())?, lookup(b.as_ref())?));
        }
        Self::from_edges(labels, &edges)
    }

    /// Index-based variant of [`Poset::from_relations`]. Labels must be distinct.
    pub fn from_edges(labels: Vec<String>, edges: &[(usize, usize)]) -> Result<Self, PosetError> {
        let n = labels.len();
        {
            let mut seen = std::collections::HashSet::with_capacity(n);
            for l in &labels {
                if !seen.insert(l.as_str()) {
                    return Err(PosetError::DuplicateLabel(l.clone()));
                }
            }
        }
        let mut above = vec![FixedBitSet::with_capacity(n); n];
        for &(a, b) in edges {
            assert!(a < n && b < n, "edge ({a}, {b}) out of range for {n} elements");
            if a != b {
                above[a].insert(b);
            }
        }
        close_transitively(&mut above);
        if let Some(x) = (0..n).find(|&x| above[x].contains(x)) {
            return Err(PosetError::CycleDetected(labels[x].clone()));
        }
        Ok(Poset { labels, above })
    }

    /// Unchecked constructor for relations already known to be strict partial orders.
    pub(crate) fn from_closed_unchecked(labels: Vec<String>, above: Vec<FixedBitSet>) -> Self {
        debug_assert!(is_strict_order(&above));
        Poset { labels, above }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Strict precedence `x < y`.
    pub fn lt(&self, x: usize, y: usize) -> bool {
        self.above[x].contains(y)
    }

    /// Reflexive precedence `x <= y`.
    pub fn leq(&self, x: usize, y: usize) -> bool {
        x == y || self.lt(x, y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    /// Strict successors of `x`.
    pub fn above(&self, x: usize) -> &FixedBitSet {
        &self.above[x]
    }

    /// Strict predecessors of `x`.
    pub fn below(&self, x: usize) -> FixedBitSet {
        let mut set = FixedBitSet::with_capacity(self.len());
        for z in 0..self.len() {
            if self.lt(z, x) {
                set.insert(z);
            }
        }
        set
    }

    pub fn strict_relation(&self) -> &[FixedBitSet] {
        &self.above
    }

    /// All `(x, y)` with `x < y`, by `x` then `y` index.
    pub fn strict_pairs(&self) -> impl Iterator<Item = Pair> + '_ {
        (0..self.len()).flat_map(move |x| self.above[x].ones().map(move |y| Pair::new(x, y)))
    }

    pub fn strict_pair_count(&self) -> usize {
        self.above.iter().map(|row| row.count_ones(..)).sum()
    }

    /// Number of pairs `x <= y`.
    pub fn comparable_pair_count(&self) -> usize {
        self.len() + self.strict_pair_count()
    }

    /// The link relation: `x < y` with nothing strictly between.
    pub fn covers(&self) -> Vec<Pair> {
        let mut out = Vec::new();
        for x in 0..self.len() {
            for y in self.above[x].ones() {
                let between = self.above[x].ones().any(|z| z != y && self.lt(z, y));
                if !between {
                    out.push(Pair::new(x, y));
                }
            }
        }
        out
    }

    /// A topological order of the elements: `order[position] = element`.
    ///
    /// Kahn's algorithm, always taking the smallest available index, so the
    /// result is unique for a fixed input.
    pub fn natural_labeling(&self) -> Vec<usize> {
        let n = self.len();
        let covers = self.covers();
        let mut indegree = vec![0usize; n];
        let mut succ = vec![Vec::new(); n];
        for p in &covers {
            indegree[p.y] += 1;
            succ[p.x].push(p.y);
        }
        let mut ready: std::collections::BTreeSet<usize> =
            (0..n).filter(|&x| indegree[x] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(x) = ready.pop_first() {
            order.push(x);
            for &y in &succ[x] {
                indegree[y] -= 1;
                if indegree[y] == 0 {
                    ready.insert(y);
                }
            }
        }
        debug_assert_eq!(order.len(), n);
        order
    }

    /// Inverse of [`Poset::natural_labeling`]: `positions[element] = position`.
    pub fn natural_positions(&self) -> Vec<usize> {
        let order = self.natural_labeling();
        let mut pos = vec![0; order.len()];
        for (p, &x) in order.iter().enumerate() {
            pos[x] = p;
        }
        pos
    }

    /// Smallest downward-closed superset of `set`.
    pub fn down_set(&self, set: &FixedBitSet) -> FixedBitSet {
        let mut out = FixedBitSet::with_capacity(self.len());
        for z in 0..self.len() {
            if set.contains(z) || self.above[z].ones().any(|y| set.contains(y)) {
                out.insert(z);
            }
        }
        out
    }

    /// Smallest upward-closed superset of `set`.
    pub fn up_set(&self, set: &FixedBitSet) -> FixedBitSet {
        let mut out = FixedBitSet::with_capacity(self.len());
        for x in set.ones() {
            out.insert(x);
            out.union_with(&self.above[x]);
        }
        out
    }

    /// Number of elements in a longest chain (0 for the empty poset).
    pub fn longest_chain(&self) -> usize {
        self.heights().into_iter().max().map_or(0, |h| h + 1)
    }

    /// `heights[x]` = number of elements strictly below `x` on a longest chain ending at `x`.
    pub fn heights(&self) -> Vec<usize> {
        let mut height = vec![0usize; self.len()];
        for x in self.natural_labeling() {
            for y in self.above[x].ones() {
                height[y] = height[y].max(height[x] + 1);
            }
        }
        height
    }

    /// Relabels through a permutation: element `i` of `self` becomes element `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Poset {
        let n = self.len();
        assert_eq!(perm.len(), n);
        let mut labels = vec![String::new(); n];
        let mut above = vec![FixedBitSet::with_capacity(n); n];
        for x in 0..n {
            labels[perm[x]] = self.labels[x].clone();
            for y in self.above[x].ones() {
                above[perm[x]].insert(perm[y]);
            }
        }
        Poset { labels, above }
    }

    /// Same order, new labels.
    pub fn with_labels(&self, labels: Vec<String>) -> Result<Poset, PosetError> {
        assert_eq!(labels.len(), self.len());
        let edges: Vec<(usize, usize)> = self.strict_pairs().map(|p| (p.x, p.y)).collect();
        Poset::from_edges(labels, &edges)
    }
}

impl fmt::Display for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Warshall closure on a row-bitset relation.
pub fn close_transitively(rows: &mut [FixedBitSet]) {
    let n = rows.len();
    for k in 0..n {
        let row_k = rows[k].clone();
        for row in rows.iter_mut() {
            if row.contains(k) {
                row.union_with(&row_k);
            }
        }
    }
}

fn is_strict_order(rows: &[FixedBitSet]) -> bool {
    let n = rows.len();
    (0..n).all(|x| !rows[x].contains(x))
        && (0..n).all(|x| rows[x].ones().all(|y| rows[y].is_subset(&rows[x])))
}

/// Labels `a`, `b`, ... for up to 26 elements, `e0`, `e1`, ... beyond that.
pub fn default_labels(n: usize) -> Vec<String> {
    if n <= 26 {
        (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
    } else {
        (0..n).map(|i| format!("e{i}")).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, items: &[usize]) -> FixedBitSet {
        let mut s = FixedBitSet::with_capacity(n);
        for &i in items {
            s.insert(i);
        }
        s
    }

    fn diamond() -> Poset {
        Poset::from_relations(
            &["a", "b", "c", "d"],
            &[("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")],
        )
        .unwrap()
    }

    #[test]
    fn two_chain() {
        let p = Poset::from_relations(&["a", "b"], &[("a", "b")]).unwrap();
        assert_eq!(p.strict_pairs().collect::<Vec<_>>(), vec![Pair::new(0, 1)]);
    }

    #[test]
    fn closure_adds_implied_relation() {
        let p = Poset::from_relations(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap();
        assert!(p.lt(0, 2));
        assert_eq!(p.strict_pair_count(), 3);
    }

    #[test]
    fn cycle_rejected() {
        let err = Poset::from_relations(&["a", "b"], &[("a", "b"), ("b", "a")]).unwrap_err();
        assert!(matches!(err, PosetError::CycleDetected(_)));
    }

    #[test]
    fn self_relation_dropped() {
        let p = Poset::from_relations(&["a"], &[("a", "a")]).unwrap();
        assert_eq!(p.strict_pair_count(), 0);
    }

    #[test]
    fn bad_labels() {
        assert_eq!(
            Poset::from_relations::<&str>(&["a", "a"], &[]).unwrap_err(),
            PosetError::DuplicateLabel("a".into())
        );
        assert_eq!(
            Poset::from_relations(&["a"], &[("a", "z")]).unwrap_err(),
            PosetError::UnknownLabel("z".into())
        );
    }

    #[test]
    fn covers_of_chain_antichain_diamond() {
        let chain = Poset::from_relations(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap();
        assert_eq!(chain.covers(), vec![Pair::new(0, 1), Pair::new(1, 2)]);
        let anti = Poset::from_relations::<&str>(&["a", "b", "c"], &[]).unwrap();
        assert!(anti.covers().is_empty());

        // Brute-force betweenness: (x, y) is a cover iff no z is strictly between.
        let d = diamond();
        let mut expected = Vec::new();
        for x in 0..4 {
            for y in 0..4 {
                if d.lt(x, y) && !(0..4).any(|z| d.lt(x, z) && d.lt(z, y)) {
                    expected.push(Pair::new(x, y));
                }
            }
        }
        assert_eq!(d.covers(), expected);
        assert_eq!(
            expected,
            vec![Pair::new(0, 1), Pair::new(0, 2), Pair::new(1, 3), Pair::new(2, 3)]
        );
    }

    #[test]
    fn natural_labeling_examples() {
        let chain = Poset::from_relations(&["a", "b", "c"], &[("c", "b"), ("b", "a")]).unwrap();
        assert_eq!(chain.natural_labeling(), vec![2, 1, 0]);
        let anti = Poset::from_relations::<&str>(&["a", "b", "c"], &[]).unwrap();
        assert_eq!(anti.natural_labeling(), vec![0, 1, 2]);
        assert_eq!(diamond().natural_labeling(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn natural_labeling_is_the_least_linear_extension() {
        // Enumerate every permutation of the diamond, keep linear extensions, take the
        // lexicographically smallest.
        let d = diamond();
        let mut best: Option<Vec<usize>> = None;
        let mut perm = vec![0, 1, 2, 3];
        permutohedron_each(&mut perm, &mut |p| {
            let pos: Vec<usize> = {
                let mut v = vec![0; 4];
                for (i, &x) in p.iter().enumerate() {
                    v[x] = i;
                }
                v
            };
            let ok = d.strict_pairs().all(|pr| pos[pr.x] < pos[pr.y]);
            if ok && best.as_ref().is_none_or(|b| p < b.as_slice()) {
                best = Some(p.to_vec());
            }
        });
        assert_eq!(d.natural_labeling(), best.unwrap());
    }

    fn permutohedron_each(items: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        fn rec(k: usize, items: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
            if k == items.len() {
                f(items);
                return;
            }
            for i in k..items.len() {
                items.swap(k, i);
                rec(k + 1, items, f);
                items.swap(k, i);
            }
        }
        rec(0, items, f);
    }

    #[test]
    fn down_and_up_sets() {
        let chain = Poset::from_relations(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap();
        assert_eq!(chain.down_set(&set(3, &[1])), set(3, &[0, 1]));
        assert_eq!(chain.up_set(&set(3, &[1])), set(3, &[1, 2]));
        assert_eq!(chain.down_set(&set(3, &[])), set(3, &[]));
        assert_eq!(chain.up_set(&set(3, &[])), set(3, &[]));
        assert_eq!(diamond().down_set(&set(4, &[1])), set(4, &[0, 1]));
    }

    #[test]
    fn longest_chain_lengths() {
        assert_eq!(diamond().longest_chain(), 3);
        assert_eq!(Poset::from_relations::<&str>(&[], &[]).unwrap().longest_chain(), 0);
    }
}
