//! Poset recovery from a label-free monomial multiplication table.
//!
//! Two routes, both working only on supports:
//!
//! * order route: elements are the quasi-idempotent basis vectors `e`; the
//!   ideals they generate multiply to a nonzero ideal exactly when the
//!   corresponding elements are related.
//! * link route: each `e` is also identified with the maximal ideal omitting
//!   it. For distinct `x`, `y` the product `M_x M_y` is strictly smaller than
//!   `M_x ∩ M_y` exactly when `y` covers `x`: the only product that can be
//!   missing is the image of `[xy]`, and it is missing exactly when no element
//!   lies strictly between. The order is the transitive closure of the links.
//!
//! Supports are sound here because the table is monomial and rescaling never
//! cancels a single monomial product.

use std::fmt;

use fixedbitset::FixedBitSet;

use crate::algebra::{Convention, IncidenceAlgebra, MultiplicationTable};
use crate::error::RecoveryError;
use crate::poset::{is_isomorphic_bounded, Poset};

/// A subset of basis indices closed under multiplication by basis vectors on either side.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbstractIdeal {
    pub support: FixedBitSet,
}

impl AbstractIdeal {
    pub fn len(&self) -> usize {
        self.support.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_clear()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.support.contains(i)
    }
}

/// Whether `support` is closed under the table's left and right multiplication.
pub fn is_closed(table: &MultiplicationTable, support: &FixedBitSet) -> bool {
    table
        .entries()
        .all(|(i, j, _, k)| !(support.contains(i) || support.contains(j)) || support.contains(k))
}

/// Basis indices `i` with `b_i b_i` a nonzero multiple of `b_i`.
pub fn quasi_idempotents(table: &MultiplicationTable) -> Result<Vec<usize>, RecoveryError> {
    table.check_associativity()?;
    Ok(quasi_idempotents_unchecked(table))
}

fn quasi_idempotents_unchecked(table: &MultiplicationTable) -> Vec<usize> {
    (0..table.dim())
        .filter(|&i| matches!(table.product(i, i), Some((_, k)) if k == i))
        .collect()
}

/// Support of the two-sided ideal generated by `b_i`: worklist closure under
/// single-sided multiplication by every basis vector.
pub fn principal_ideal(table: &MultiplicationTable, i: usize) -> AbstractIdeal {
    let dim = table.dim();
    let mut support = FixedBitSet::with_capacity(dim);
    support.insert(i);
    let mut queue = vec![i];
    while let Some(v) = queue.pop() {
        for other in 0..dim {
            for (_, k) in [table.product(other, v), table.product(v, other)].into_iter().flatten() {
                if !support.put(k) {
                    queue.push(k);
                }
            }
        }
    }
    AbstractIdeal { support }
}

/// Support of the product ideal: `{ k : b_i b_j ~ b_k, i in left, j in right }`.
pub fn support_product(
    table: &MultiplicationTable,
    left: &AbstractIdeal,
    right: &AbstractIdeal,
) -> FixedBitSet {
    let mut out = FixedBitSet::with_capacity(table.dim());
    for (i, j, _, k) in table.entries() {
        if left.contains(i) && right.contains(j) {
            out.insert(k);
        }
    }
    out
}

fn validated_landmarks(table: &MultiplicationTable) -> Result<Vec<usize>, RecoveryError> {
    let landmarks = quasi_idempotents(table)?;
    if landmarks.is_empty() && table.dim() > 0 {
        return Err(RecoveryError::NoQuasiIdempotents(table.dim()));
    }
    Ok(landmarks)
}

fn landmark_labels(landmarks: &[usize]) -> Vec<String> {
    landmarks.iter().map(|i| format!("b{i}")).collect()
}

/// Recovers the order directly: `x < y` iff `I_x I_y != 0` for the ideals
/// generated by the quasi-idempotents. Elements are labeled `b<index>`.
///
/// Transitivity and antisymmetry are checked, never imposed.
pub fn recover_order_a(table: &MultiplicationTable) -> Result<Poset, RecoveryError> {
    let landmarks = validated_landmarks(table)?;
    let ideals: Vec<AbstractIdeal> = landmarks
        .iter()
        .map(|&e| principal_ideal(table, e))
        .collect();
    let m = landmarks.len();
    let mut related = vec![vec![false; m]; m];
    for a in 0..m {
        for b in 0..m {
            if a != b {
                related[a][b] = !support_product(table, &ideals[a], &ideals[b]).is_clear();
            }
        }
    }
    for a in 0..m {
        for b in 0..m {
            if !related[a][b] {
                continue;
            }
            if related[b][a] {
                return Err(RecoveryError::RecoveredRelationNotAntisymmetric {
                    x: landmarks[a],
                    y: landmarks[b],
                });
            }
            if let Some(c) = (0..m).find(|&c| c != a && related[b][c] && !related[a][c]) {
                return Err(RecoveryError::RecoveredRelationNotTransitive {
                    x: landmarks[a],
                    y: landmarks[b],
                    z: landmarks[c],
                });
            }
        }
    }
    let edges: Vec<(usize, usize)> = (0..m)
        .flat_map(|a| (0..m).map(move |b| (a, b)))
        .filter(|&(a, b)| related[a][b])
        .collect();
    Ok(Poset::from_edges(landmark_labels(&landmarks), &edges)?)
}

/// For each quasi-idempotent `e`, the ideal of all basis indices except `e`.
pub fn maximal_abstract_ideals(
    table: &MultiplicationTable,
) -> Result<Vec<AbstractIdeal>, RecoveryError> {
    let landmarks = validated_landmarks(table)?;
    landmarks
        .iter()
        .map(|&e| complement_ideal(table, e))
        .collect()
}

fn complement_ideal(table: &MultiplicationTable, omitted: usize) -> Result<AbstractIdeal, RecoveryError> {
    let mut support = FixedBitSet::with_capacity(table.dim());
    support.insert_range(..);
    support.set(omitted, false);
    if let Some((i, j, _, _)) = table.entries().find(|&(i, j, _, k)| {
        k == omitted && (support.contains(i) || support.contains(j))
    }) {
        return Err(RecoveryError::ClosureViolation { omitted, i, j });
    }
    Ok(AbstractIdeal { support })
}

/// Link relation between quasi-idempotents, as pairs of basis indices `(x, y)`
/// meaning `y` covers `x`.
pub fn links(table: &MultiplicationTable) -> Result<Vec<(usize, usize)>, RecoveryError> {
    let landmarks = validated_landmarks(table)?;
    let maximal: Vec<AbstractIdeal> = landmarks
        .iter()
        .map(|&e| complement_ideal(table, e))
        .collect::<Result<_, _>>()?;
    let mut out = Vec::new();
    for (a, &x) in landmarks.iter().enumerate() {
        for (b, &y) in landmarks.iter().enumerate() {
            if a == b {
                continue;
            }
            let product = support_product(table, &maximal[a], &maximal[b]);
            let mut meet = maximal[a].support.clone();
            meet.intersect_with(&maximal[b].support);
            debug_assert!(product.is_subset(&meet));
            if product != meet {
                out.push((x, y));
            }
        }
    }
    Ok(out)
}

/// Recovers the order as the transitive closure of [`links`]. Labels match
/// [`recover_order_a`].
pub fn recover_order_b(table: &MultiplicationTable) -> Result<Poset, RecoveryError> {
    let landmarks = validated_landmarks(table)?;
    let position = |basis: usize| landmarks.binary_search(&basis).expect("landmark");
    let edges: Vec<(usize, usize)> = links(table)?
        .into_iter()
        .map(|(x, y)| (position(x), position(y)))
        .collect();
    Ok(Poset::from_edges(landmark_labels(&landmarks), &edges)?)
}

/// Outcome of one seeded round trip.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeedOutcome {
    pub seed: u64,
    pub rescale: bool,
    /// Order route recovered a poset isomorphic to the source.
    pub order_route: bool,
    /// Link route recovered a poset isomorphic to the source.
    pub link_route: bool,
    /// Both routes returned the same labeled poset.
    pub agree: bool,
    pub error: Option<String>,
}

impl SeedOutcome {
    pub fn passed(&self) -> bool {
        self.order_route && self.link_route && self.agree && self.error.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RoundTripReport {
    pub outcomes: Vec<SeedOutcome>,
}

impl RoundTripReport {
    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(SeedOutcome::passed)
    }
}

impl fmt::Display for RoundTripReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for o in &self.outcomes {
            let verdict = if o.passed() { "pass" } else { "FAIL" };
            write!(
                f,
                "seed={} rescale={} order-route={} link-route={} agree={} {}",
                o.seed, o.rescale, o.order_route, o.link_route, o.agree, verdict
            )?;
            if let Some(e) = &o.error {
                write!(f, " error: {e}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Builds the reflexive algebra, scrambles its table once per seed, recovers by
/// both routes and compares against `poset`.
pub fn verify_roundtrip(poset: &Poset, seeds: &[u64], rescale: bool) -> RoundTripReport {
    let table = IncidenceAlgebra::build(poset, Convention::Reflexive).multiplication_table();
    let bound = poset.len().max(1);
    let outcomes = seeds
        .iter()
        .map(|&seed| {
            let scrambled = table.scramble(seed, rescale);
            let iso = |q: &Poset| {
                is_isomorphic_bounded(poset, q, bound.max(q.len()))
                    .map(|w| w.is_some())
                    .unwrap_or(false)
            };
            match (recover_order_a(&scrambled), recover_order_b(&scrambled)) {
                (Ok(a), Ok(b)) => SeedOutcome {
                    seed,
                    rescale,
                    order_route: iso(&a),
                    link_route: iso(&b),
                    agree: a == b,
                    error: None,
                },
                (a, b) => SeedOutcome {
                    seed,
                    rescale,
                    order_route: a.as_ref().is_ok_and(&iso),
                    link_route: b.as_ref().is_ok_and(&iso),
                    agree: false,
                    error: a.err().or(b.err()).map(|e| e.to_string()),
                },
            }
        })
        .collect();
    RoundTripReport { outcomes }
}
