//! The incidence algebra of a finite poset over the rationals.
//!
//! Generators are the pairs `[xy]` (with `x <= y` under the reflexive
//! convention, `x < y` under the irreflexive one) and the product rule is
//! `[xy][uv] = [xv]` when `y == u`, zero otherwise. Elements are sparse maps
//! from generator index to a nonzero rational coefficient.

mod table;

use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hasher;

use num_traits::{One, Zero};

use crate::error::AlgebraError;
use crate::poset::{GammaPoset, Pair, Poset};
use crate::Rational;

pub use table::{MultiplicationTable, TableFile, SCALE_FACTORS};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Convention {
    /// Every element precedes itself; diagonal pairs `[xx]` are generators.
    Reflexive,
    /// Only distinct related pairs are generators.
    Irreflexive,
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::Reflexive => "reflexive",
            Convention::Irreflexive => "irreflexive",
        })
    }
}

/// Dense `n x n` matrix, rows and columns in natural-labeling order.
pub type Matrix = Vec<Vec<Rational>>;

#[derive(Clone, Debug)]
pub struct IncidenceAlgebra {
    poset: Poset,
    convention: Convention,
    gamma: GammaPoset,
    generators: Vec<Pair>,
    /// `index[x * n + y]`
    index: Vec<Option<usize>>,
    fingerprint: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    algebra: u64,
    coeffs: BTreeMap<usize, Rational>,
}

impl AlgebraElement {
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, index: usize) -> Rational {
        self.coeffs.get(&index).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.coeffs.iter().map(|(&i, c)| (i, c))
    }

    /// Generator indices with nonzero coefficient.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs.keys().copied()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub(crate) fn algebra_id(&self) -> u64 {
        self.algebra
    }

    pub(crate) fn from_map(algebra: u64, mut coeffs: BTreeMap<usize, Rational>) -> Self {
        coeffs.retain(|_, c| !c.is_zero());
        AlgebraElement { algebra, coeffs }
    }
}

impl IncidenceAlgebra {
    pub fn build(poset: &Poset, convention: Convention) -> Self {
        let gamma = GammaPoset::new(poset);
        let generators: Vec<Pair> = match convention {
            Convention::Reflexive => gamma.pairs().to_vec(),
            Convention::Irreflexive => gamma
                .pairs()
                .iter()
                .copied()
                .filter(|p| !p.is_diagonal())
                .collect(),
        };
        let n = poset.len();
        let mut index = vec![None; n * n];
        for (i, p) in generators.iter().enumerate() {
            index[p.x * n + p.y] = Some(i);
        }
        IncidenceAlgebra {
            fingerprint: fingerprint(poset, convention),
            poset: poset.clone(),
            convention,
            gamma,
            generators,
            index,
        }
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    /// The pair-poset; its pair indices coincide with generator indices under
    /// the reflexive convention.
    pub fn gamma(&self) -> &GammaPoset {
        &self.gamma
    }

    pub fn dim(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[Pair] {
        &self.generators
    }

    pub fn pair(&self, index: usize) -> Pair {
        self.generators[index]
    }

    pub fn generator_index(&self, pair: Pair) -> Option<usize> {
        let n = self.poset.len();
        if pair.x >= n || pair.y >= n {
            return None;
        }
        self.index[pair.x * n + pair.y]
    }

    /// `[xy]`, rendered with poset labels.
    pub fn pair_label(&self, index: usize) -> String {
        let p = self.generators[index];
        format!("[{},{}]", self.poset.label(p.x), self.poset.label(p.y))
    }

    /// Whether `other` is the same algebra: same poset and convention.
    pub fn same_as(&self, other: &IncidenceAlgebra) -> bool {
        std::ptr::eq(self, other)
            || (self.fingerprint == other.fingerprint
                && self.convention == other.convention
                && self.poset == other.poset)
    }

    fn check(&self, f: &AlgebraElement) -> Result<(), AlgebraError> {
        if f.algebra == self.fingerprint {
            Ok(())
        } else {
            Err(AlgebraError::AlgebraMismatch)
        }
    }

    pub fn zero(&self) -> AlgebraElement {
        AlgebraElement {
            algebra: self.fingerprint,
            coeffs: BTreeMap::new(),
        }
    }

    /// The generator with index `index` as an element.
    pub fn generator(&self, index: usize) -> AlgebraElement {
        assert!(index < self.dim(), "generator index {index} out of range");
        let mut coeffs = BTreeMap::new();
        coeffs.insert(index, Rational::one());
        AlgebraElement {
            algebra: self.fingerprint,
            coeffs,
        }
    }

    /// `[xy]` by element indices.
    pub fn pair_element(&self, x: usize, y: usize) -> Result<AlgebraElement, AlgebraError> {
        self.generator_index(Pair::new(x, y))
            .map(|i| self.generator(i))
            .ok_or(AlgebraError::NotAGenerator { x, y })
    }

    /// Sums the given terms; repeated indices accumulate and zeros are dropped.
    pub fn element<I>(&self, terms: I) -> Result<AlgebraElement, AlgebraError>
    where
        I: IntoIterator<Item = (usize, Rational)>,
    {
        let mut coeffs: BTreeMap<usize, Rational> = BTreeMap::new();
        for (i, c) in terms {
            if i >= self.dim() {
                return Err(AlgebraError::IndexOutOfRange(i));
            }
            *coeffs.entry(i).or_insert_with(Rational::zero) += c;
        }
        Ok(AlgebraElement::from_map(self.fingerprint, coeffs))
    }

    /// Product of two generators, as a generator index.
    pub fn generator_product(&self, i: usize, j: usize) -> Option<usize> {
        let (a, b) = (self.generators[i], self.generators[j]);
        if a.y == b.x {
            self.generator_index(Pair::new(a.x, b.y))
        } else {
            None
        }
    }

    /// Convolution product.
    pub fn multiply(
        &self,
        f: &AlgebraElement,
        g: &AlgebraElement,
    ) -> Result<AlgebraElement, AlgebraError> {
        self.check(f)?;
        self.check(g)?;
        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
        for (&i, a) in &f.coeffs {
            for (&j, b) in &g.coeffs {
                if let Some(k) = self.generator_product(i, j) {
                    *acc.entry(k).or_insert_with(Rational::zero) += a * b;
                }
            }
        }
        Ok(AlgebraElement::from_map(self.fingerprint, acc))
    }

    pub fn add(
        &self,
        f: &AlgebraElement,
        g: &AlgebraElement,
    ) -> Result<AlgebraElement, AlgebraError> {
        self.check(f)?;
        self.check(g)?;
        let mut acc = f.coeffs.clone();
        for (&i, c) in &g.coeffs {
            *acc.entry(i).or_insert_with(Rational::zero) += c;
        }
        Ok(AlgebraElement::from_map(self.fingerprint, acc))
    }

    pub fn scale(&self, f: &AlgebraElement, c: &Rational) -> Result<AlgebraElement, AlgebraError> {
        self.check(f)?;
        let coeffs = f.coeffs.iter().map(|(&i, a)| (i, a * c)).collect();
        Ok(AlgebraElement::from_map(self.fingerprint, coeffs))
    }

    /// `sum_x [xx]`; only the reflexive algebra is unital.
    pub fn unit(&self) -> Result<AlgebraElement, AlgebraError> {
        match self.convention {
            Convention::Irreflexive => Err(AlgebraError::NoUnit),
            Convention::Reflexive => self.element(
                (0..self.poset.len())
                    .map(|x| (self.generator_index(Pair::new(x, x)).unwrap(), Rational::one())),
            ),
        }
    }

    /// Entry `(pos(x), pos(y))` is the coefficient of `[xy]`, positions from the natural labeling.
    pub fn to_matrix(&self, f: &AlgebraElement) -> Result<Matrix, AlgebraError> {
        self.check(f)?;
        let n = self.poset.len();
        let pos = self.poset.natural_positions();
        let mut m = vec![vec![Rational::zero(); n]; n];
        for (&i, c) in &f.coeffs {
            let p = self.generators[i];
            m[pos[p.x]][pos[p.y]] = c.clone();
        }
        Ok(m)
    }

    /// Smallest `k` such that every product of `k` generators vanishes.
    ///
    /// `None` when no such `k` exists (the reflexive algebra of a nonempty
    /// poset contains idempotents). The zero algebra reports 1.
    pub fn nilpotency_index(&self) -> Option<usize> {
        let dim = self.dim();
        // products of exactly k generators, as a set of generator indices
        let mut current: Vec<bool> = vec![true; dim];
        let mut k = 1;
        loop {
            if !current.iter().any(|&b| b) {
                return Some(k);
            }
            let mut next = vec![false; dim];
            for i in (0..dim).filter(|&i| current[i]) {
                for j in 0..dim {
                    if let Some(m) = self.generator_product(j, i) {
                        next[m] = true;
                    }
                }
            }
            if next == current {
                return None;
            }
            current = next;
            k += 1;
        }
    }

    /// Every nonzero idempotent with all coefficients in `{0, 1, -1}`.
    ///
    /// Exhaustive over `3^dim` elements; `None` when `dim > max_dim`.
    pub fn unit_coefficient_idempotents(&self, max_dim: usize) -> Option<Vec<AlgebraElement>> {
        let dim = self.dim();
        if dim > max_dim {
            return None;
        }
        let total = 3usize.pow(dim as u32);
        let mut found = Vec::new();
        for code in 1..total {
            let mut c = code;
            let mut coeffs = BTreeMap::new();
            for i in 0..dim {
                match c % 3 {
                    1 => {
                        coeffs.insert(i, Rational::one());
                    }
                    2 => {
                        coeffs.insert(i, -Rational::one());
                    }
                    _ => {}
                }
                c /= 3;
            }
            let e = AlgebraElement::from_map(self.fingerprint, coeffs);
            if self.multiply(&e, &e).expect("same algebra") == e {
                found.push(e);
            }
        }
        Some(found)
    }

    /// Structure constants over the generator basis; every coefficient is 1.
    pub fn multiplication_table(&self) -> MultiplicationTable {
        let mut table = MultiplicationTable::new(self.dim());
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                if let Some(k) = self.generator_product(i, j) {
                    table
                        .insert(i, j, Rational::one(), k)
                        .expect("generator products are unique and in range");
                }
            }
        }
        table
    }

    pub fn render(&self, f: &AlgebraElement) -> String {
        if f.is_zero() {
            return "0".to_owned();
        }
        let parts: Vec<String> = f
            .coeffs
            .iter()
            .map(|(&i, c)| {
                if c.is_one() {
                    self.pair_label(i)
                } else {
                    format!("{}{}", c, self.pair_label(i))
                }
            })
            .collect();
        parts.join(" + ")
    }
}

fn fingerprint(poset: &Poset, convention: Convention) -> u64 {
    // FNV-1a
    struct Fnv(u64);
    impl Hasher for Fnv {
        fn finish(&self) -> u64 {
            self.0
        }
        fn write(&mut self, bytes: &[u8]) {
            for &b in bytes {
                self.0 ^= b as u64;
                self.0 = self.0.wrapping_mul(0x0000_0100_0000_01B3);
            }
        }
    }
    let mut h = Fnv(0xCBF2_9CE4_8422_2325);
    h.write_u8(matches!(convention, Convention::Reflexive) as u8);
    h.write_usize(poset.len());
    for l in poset.labels() {
        h.write(l.as_bytes());
        h.write_u8(0xFF);
    }
    for p in poset.strict_pairs() {
        h.write_usize(p.x);
        h.write_usize(p.y);
    }
    h.finish()
}
