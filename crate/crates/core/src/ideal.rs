//! Two-sided ideals of the reflexive incidence algebra.
//!
//! An ideal is stored as the set of generators `[xy]` it contains; every
//! generator occurring with nonzero coefficient in some member is itself a
//! member, so that set determines the ideal and is an up-set of the pair-poset.
//!
//! Products are relational composition of those sets:
//! `IJ = { [xv] : [xw] in I, [wv] in J for some w }`.
//! The composite is already upward closed, since `[ux][xw] [wv][vz] = [uz]`
//! needs no extra closure step.

use std::fmt;

use fixedbitset::FixedBitSet;

use crate::algebra::{AlgebraElement, Convention, IncidenceAlgebra};
use crate::error::IdealError;
use crate::poset::Pair;

#[derive(Clone, Debug)]
pub struct Ideal<'a> {
    algebra: &'a IncidenceAlgebra,
    up_set: FixedBitSet,
}

impl PartialEq for Ideal<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.algebra.same_as(other.algebra) && self.up_set == other.up_set
    }
}

impl Eq for Ideal<'_> {}

fn require_reflexive(algebra: &IncidenceAlgebra) -> Result<(), IdealError> {
    match algebra.convention() {
        Convention::Reflexive => Ok(()),
        Convention::Irreflexive => Err(IdealError::RequiresReflexive),
    }
}

impl<'a> Ideal<'a> {
    pub fn from_up_set(
        algebra: &'a IncidenceAlgebra,
        up_set: FixedBitSet,
    ) -> Result<Self, IdealError> {
        require_reflexive(algebra)?;
        assert_eq!(up_set.len(), algebra.dim(), "bitset sized for a different algebra");
        if !algebra.gamma().is_up_closed(&up_set) {
            return Err(IdealError::NotUpClosed);
        }
        Ok(Ideal { algebra, up_set })
    }

    pub fn zero(algebra: &'a IncidenceAlgebra) -> Result<Self, IdealError> {
        require_reflexive(algebra)?;
        Ok(Ideal {
            algebra,
            up_set: algebra.gamma().empty_set(),
        })
    }

    pub fn full(algebra: &'a IncidenceAlgebra) -> Result<Self, IdealError> {
        require_reflexive(algebra)?;
        Ok(Ideal {
            algebra,
            up_set: algebra.gamma().full_set(),
        })
    }

    /// `A [xy] A` for the generator with index `generator`.
    pub fn principal(algebra: &'a IncidenceAlgebra, generator: usize) -> Result<Self, IdealError> {
        require_reflexive(algebra)?;
        Ok(Ideal {
            algebra,
            up_set: algebra.gamma().principal_up_set(generator),
        })
    }

    /// Smallest ideal containing `elems`: the up-closure of their supports.
    pub fn generated_by(
        algebra: &'a IncidenceAlgebra,
        elems: &[AlgebraElement],
    ) -> Result<Self, IdealError> {
        require_reflexive(algebra)?;
        let zero = algebra.zero();
        let mut support = algebra.gamma().empty_set();
        for e in elems {
            // validates membership in this algebra
            algebra.add(&zero, e)?;
            support.extend(e.support());
        }
        Ok(Ideal {
            algebra,
            up_set: algebra.gamma().up_closure(&support),
        })
    }

    pub fn algebra(&self) -> &'a IncidenceAlgebra {
        self.algebra
    }

    pub fn up_set(&self) -> &FixedBitSet {
        &self.up_set
    }

    /// Generator indices in the ideal, ascending.
    pub fn generators(&self) -> Vec<usize> {
        self.up_set.ones().collect()
    }

    pub fn pairs(&self) -> Vec<Pair> {
        self.up_set.ones().map(|i| self.algebra.pair(i)).collect()
    }

    pub fn len(&self) -> usize {
        self.up_set.count_ones(..)
    }

    pub fn is_zero(&self) -> bool {
        self.up_set.is_clear()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.algebra.dim()
    }

    pub fn is_subset(&self, other: &Ideal<'_>) -> bool {
        self.up_set.is_subset(&other.up_set)
    }

    fn same_algebra(&self, other: &Ideal<'_>) -> Result<(), IdealError> {
        if self.algebra.same_as(other.algebra) {
            Ok(())
        } else {
            Err(IdealError::AlgebraMismatch)
        }
    }

    pub fn sum(&self, other: &Ideal<'_>) -> Result<Ideal<'a>, IdealError> {
        self.same_algebra(other)?;
        let mut up_set = self.up_set.clone();
        up_set.union_with(&other.up_set);
        Ok(Ideal {
            algebra: self.algebra,
            up_set,
        })
    }

    pub fn intersect(&self, other: &Ideal<'_>) -> Result<Ideal<'a>, IdealError> {
        self.same_algebra(other)?;
        let mut up_set = self.up_set.clone();
        up_set.intersect_with(&other.up_set);
        Ok(Ideal {
            algebra: self.algebra,
            up_set,
        })
    }

    pub fn product(&self, other: &Ideal<'_>) -> Result<Ideal<'a>, IdealError> {
        self.same_algebra(other)?;
        let mut up_set = self.algebra.gamma().empty_set();
        for i in self.up_set.ones() {
            for j in other.up_set.ones() {
                if let Some(k) = self.algebra.generator_product(i, j) {
                    up_set.insert(k);
                }
            }
        }
        Ok(Ideal {
            algebra: self.algebra,
            up_set,
        })
    }

    /// Minimal pairs of the up-set, as generator indices.
    pub fn minimal_generators(&self) -> Vec<usize> {
        self.algebra.gamma().minimal_in(&self.up_set)
    }

    /// Nonzero and principal: the up-set has exactly one minimal pair.
    pub fn is_indecomposable(&self) -> bool {
        self.minimal_generators().len() == 1
    }

    /// Principal at a diagonal pair `[xx]`.
    pub fn is_maximal_indecomposable(&self) -> bool {
        match self.minimal_generators().as_slice() {
            [single] => self.algebra.pair(*single).is_diagonal(),
            _ => false,
        }
    }

    /// Everything except a single diagonal generator.
    pub fn is_maximal(&self) -> bool {
        let missing: Vec<usize> = (0..self.algebra.dim())
            .filter(|&i| !self.up_set.contains(i))
            .collect();
        matches!(missing.as_slice(), [single] if self.algebra.pair(*single).is_diagonal())
    }

    /// `{[a,a],[a,b]}` in generator order.
    pub fn render(&self) -> String {
        let poset = self.algebra.poset();
        let parts: Vec<String> = self
            .pairs()
            .iter()
            .map(|p| format!("[{},{}]", poset.label(p.x), poset.label(p.y)))
            .collect();
        format!("{{{}}}", parts.join(","))
    }
}

impl fmt::Display for Ideal<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// One principal ideal per generator, in generator order.
pub fn indecomposable_ideals(algebra: &IncidenceAlgebra) -> Result<Vec<Ideal<'_>>, IdealError> {
    (0..algebra.dim())
        .map(|i| Ideal::principal(algebra, i))
        .collect()
}

/// `A [xx] A` for each element `x`, in element order.
pub fn maximal_indecomposable_ideals(
    algebra: &IncidenceAlgebra,
) -> Result<Vec<Ideal<'_>>, IdealError> {
    (0..algebra.poset().len())
        .map(|x| {
            let g = algebra
                .generator_index(Pair::new(x, x))
                .ok_or(IdealError::RequiresReflexive)?;
            Ideal::principal(algebra, g)
        })
        .collect()
}

/// The ideal omitting `[xx]`, for each element `x` in element order.
pub fn maximal_ideals(algebra: &IncidenceAlgebra) -> Result<Vec<Ideal<'_>>, IdealError> {
    (0..algebra.poset().len())
        .map(|x| {
            let g = algebra
                .generator_index(Pair::new(x, x))
                .ok_or(IdealError::RequiresReflexive)?;
            let mut up_set = algebra.gamma().full_set();
            up_set.set(g, false);
            Ideal::from_up_set(algebra, up_set)
        })
        .collect()
}

/// Every ideal exactly once, the zero ideal first.
pub fn enumerate_ideals(
    algebra: &IncidenceAlgebra,
    cap: usize,
) -> Result<impl Iterator<Item = Ideal<'_>>, IdealError> {
    require_reflexive(algebra)?;
    let sets = algebra.gamma().enumerate_up_sets(cap)?;
    Ok(sets.map(move |up_set| Ideal { algebra, up_set }))
}
