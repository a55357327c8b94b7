//! Subspaces of an incidence algebra in reduced row-echelon form.
//!
//! This is the linear-algebra route to ideals, used to cross-check the
//! combinatorial up-set calculus in [`crate::ideal`]: closure here is computed
//! by actually multiplying vectors, never by consulting the pair-poset.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::algebra::{AlgebraElement, IncidenceAlgebra};
use crate::error::IdealError;
use crate::Rational;

type Row = BTreeMap<usize, Rational>;

/// A subspace with a canonical basis: rows sorted by pivot, each pivot 1 and
/// the only nonzero entry in its column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    algebra: u64,
    rows: Vec<Row>,
}

impl Subspace {
    pub fn empty(algebra: &IncidenceAlgebra) -> Self {
        Subspace {
            algebra: algebra.zero().algebra_id(),
            rows: Vec::new(),
        }
    }

    /// Linear span of `elems`.
    pub fn span<'e, I>(algebra: &IncidenceAlgebra, elems: I) -> Result<Self, IdealError>
    where
        I: IntoIterator<Item = &'e AlgebraElement>,
    {
        let mut s = Subspace::empty(algebra);
        for e in elems {
            s.check(e)?;
            s.insert(e);
        }
        Ok(s)
    }

    /// Span of the generators with the given indices.
    pub fn of_generators<I>(algebra: &IncidenceAlgebra, indices: I) -> Self
    where
        I: IntoIterator<Item = usize>,
    {
        let mut s = Subspace::empty(algebra);
        for i in indices {
            s.insert(&algebra.generator(i));
        }
        s
    }

    fn check(&self, e: &AlgebraElement) -> Result<(), IdealError> {
        if e.algebra_id() == self.algebra {
            Ok(())
        } else {
            Err(IdealError::AlgebraMismatch)
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self, algebra: &IncidenceAlgebra) -> Vec<AlgebraElement> {
        self.rows
            .iter()
            .map(|r| algebra.element(r.iter().map(|(&i, c)| (i, c.clone()))).expect("in range"))
            .collect()
    }

    fn reduce(&self, v: &AlgebraElement) -> Row {
        let mut row: Row = v.terms().map(|(i, c)| (i, c.clone())).collect();
        for basis_row in &self.rows {
            let (&pivot, _) = basis_row.iter().next().expect("rows are nonzero");
            let Some(c) = row.get(&pivot).cloned() else {
                continue;
            };
            for (&j, b) in basis_row {
                let entry = row.entry(j).or_insert_with(Rational::zero);
                *entry -= &c * b;
                if entry.is_zero() {
                    row.remove(&j);
                }
            }
        }
        row
    }

    pub fn contains(&self, v: &AlgebraElement) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, v: &AlgebraElement) -> bool {
        let mut row = self.reduce(v);
        let Some((&pivot, lead)) = row.iter().next() else {
            return false;
        };
        let inv = Rational::one() / lead;
        for c in row.values_mut() {
            *c *= &inv;
        }
        for other in &mut self.rows {
            if let Some(c) = other.get(&pivot).cloned() {
                for (&j, b) in &row {
                    let entry = other.entry(j).or_insert_with(Rational::zero);
                    *entry -= &c * b;
                    if entry.is_zero() {
                        other.remove(&j);
                    }
                }
            }
        }
        let at = self
            .rows
            .partition_point(|r| *r.keys().next().expect("nonzero") < pivot);
        self.rows.insert(at, row);
        true
    }

    /// Span of all products `a * b` with `a` from `self` and `b` from `other`.
    pub fn product(&self, algebra: &IncidenceAlgebra, other: &Subspace) -> Subspace {
        let left = self.basis(algebra);
        let right = other.basis(algebra);
        let mut out = Subspace::empty(algebra);
        for a in &left {
            for b in &right {
                out.insert(&algebra.multiply(a, b).expect("same algebra"));
            }
        }
        out
    }
}

/// Smallest subspace containing `elems` and closed under multiplication by
/// every generator on either side.
///
/// Worklist over newly added vectors: by bilinearity it is enough to multiply
/// each vector once by each generator.
pub fn subspace_closure(
    algebra: &IncidenceAlgebra,
    elems: &[AlgebraElement],
) -> Result<Subspace, IdealError> {
    let mut space = Subspace::empty(algebra);
    let mut queue: Vec<AlgebraElement> = Vec::new();
    for e in elems {
        space.check(e)?;
        if space.insert(e) {
            queue.push(e.clone());
        }
    }
    let generators: Vec<AlgebraElement> = (0..algebra.dim()).map(|i| algebra.generator(i)).collect();
    while let Some(v) = queue.pop() {
        for g in &generators {
            for w in [algebra.multiply(g, &v)?, algebra.multiply(&v, g)?] {
                if space.insert(&w) {
                    queue.push(w);
                }
            }
        }
    }
    Ok(space)
}
