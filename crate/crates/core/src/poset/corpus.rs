//! Test-corpus generators and the named corpora used by the theorem checks.

use fixedbitset::FixedBitSet;

use super::{close_transitively, default_labels, Poset};
use crate::rng::Lcg;

/// `a < b < c < ...`
pub fn chain(k: usize) -> Poset {
    let edges: Vec<(usize, usize)> = (1..k).map(|i| (i - 1, i)).collect();
    Poset::from_edges(default_labels(k), &edges).expect("a chain is acyclic")
}

pub fn antichain(k: usize) -> Poset {
    Poset::from_edges(default_labels(k), &[]).expect("no relations")
}

/// `a < b < d`, `a < c < d`.
pub fn diamond() -> Poset {
    Poset::from_edges(default_labels(4), &[(0, 1), (0, 2), (1, 3), (2, 3)]).expect("acyclic")
}

/// Subsets of a `k`-set under inclusion, labeled by their bit strings (`b01` = `{0}` for k = 2).
pub fn boolean_lattice(k: usize) -> Poset {
    let size = 1usize << k;
    let labels: Vec<String> = (0..size)
        .map(|mask| {
            let bits: String = (0..k)
                .rev()
                .map(|b| if mask & (1 << b) != 0 { '1' } else { '0' })
                .collect();
            format!("b{bits}")
        })
        .collect();
    let mut edges = Vec::new();
    for s in 0..size {
        for t in 0..size {
            if s != t && s & t == s {
                edges.push((s, t));
            }
        }
    }
    Poset::from_edges(labels, &edges).expect("inclusion is acyclic")
}

/// Transitive closure of a random DAG on the fixed order `0 < 1 < ... < k-1`:
/// each `(i, j)` with `i < j` is drawn in row-major order and kept when the
/// next uniform draw is below `edge_prob`.
pub fn random_poset(k: usize, edge_prob: f64, seed: u64) -> Poset {
    assert!((0.0..=1.0).contains(&edge_prob));
    let mut rng = Lcg::new(seed);
    let mut above = vec![FixedBitSet::with_capacity(k); k];
    for (i, row) in above.iter_mut().enumerate() {
        for j in i + 1..k {
            if rng.next_f64() < edge_prob {
                row.insert(j);
            }
        }
    }
    close_transitively(&mut above);
    Poset::from_closed_unchecked(default_labels(k), above)
}

/// Every strict partial order on `{0..n}` for each `n <= max_n`, labeled.
///
/// Counts per size are 1, 1, 3, 19, 219, 4231.
pub fn exhaustive(max_n: usize) -> Vec<Poset> {
    assert!(max_n <= 5, "labeled enumeration beyond 5 elements is not desk-scale");
    let mut out = Vec::new();
    for n in 0..=max_n {
        let slots: Vec<(usize, usize)> = (0..n)
            .flat_map(|x| (0..n).filter(move |&y| y != x).map(move |y| (x, y)))
            .collect();
        for mask in 0u64..(1u64 << slots.len()) {
            let mut above = vec![FixedBitSet::with_capacity(n); n];
            for (b, &(x, y)) in slots.iter().enumerate() {
                if mask & (1 << b) != 0 {
                    above[x].insert(y);
                }
            }
            let asymmetric = (0..n).all(|x| above[x].ones().all(|y| !above[y].contains(x)));
            let transitive = (0..n).all(|x| above[x].ones().all(|y| above[y].is_subset(&above[x])));
            if asymmetric && transitive {
                out.push(Poset::from_closed_unchecked(default_labels(n), above));
            }
        }
    }
    out
}

pub const RANDOM7_SIZE: usize = 100;
pub const RANDOM7_EDGE_PROB: f64 = 0.3;

/// 100 seeded posets: poset `i` has `1 + i % 7` elements, edge probability 0.3, seed `i`.
pub fn random7() -> Vec<Poset> {
    (0..RANDOM7_SIZE)
        .map(|i| random_poset(1 + i % 7, RANDOM7_EDGE_PROB, i as u64))
        .collect()
}

/// Named built-in corpora.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Corpus {
    /// All labeled posets on at most 4 elements.
    Exhaustive4,
    /// See [`random7`].
    Random7,
}

impl Corpus {
    pub fn from_name(name: &str) -> Option<Corpus> {
        match name {
            "exhaustive4" => Some(Corpus::Exhaustive4),
            "random7" => Some(Corpus::Random7),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Corpus::Exhaustive4 => "exhaustive4",
            Corpus::Random7 => "random7",
        }
    }

    pub fn posets(&self) -> Vec<Poset> {
        match self {
            Corpus::Exhaustive4 => exhaustive(4),
            Corpus::Random7 => random7(),
        }
    }
}
