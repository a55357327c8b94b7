//! Label-free structure constants over a monomial basis.
//!
//! File format (JSON, entries sorted by `(i, j)`):
//!
//! ```json
//! {"dim":3,"entries":[[0,0,"1/1",0],[0,2,"1/1",2],[1,1,"1/1",1],[2,1,"1/1",2]]}
//! ```
//!
//! An entry `[i, j, "p/q", k]` means `b_i b_j = (p/q) b_k`; a missing `(i, j)`
//! means the product is zero.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::TableError;
use crate::rng::Lcg;
use crate::Rational;

/// Rescaling factors drawn by [`MultiplicationTable::scramble`], in draw order.
pub const SCALE_FACTORS: [(i64, i64); 8] = [
    (1, 1),
    (-1, 1),
    (2, 1),
    (-2, 1),
    (1, 2),
    (-1, 2),
    (3, 1),
    (-3, 1),
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicationTable {
    dim: usize,
    entries: BTreeMap<(usize, usize), (Rational, usize)>,
}

/// Serialized form of a [`MultiplicationTable`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableFile {
    pub dim: usize,
    pub entries: Vec<(usize, usize, String, usize)>,
}

impl MultiplicationTable {
    pub fn new(dim: usize) -> Self {
        MultiplicationTable {
            dim,
            entries: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Records `b_i b_j = coeff * b_k`.
    pub fn insert(
        &mut self,
        i: usize,
        j: usize,
        coeff: Rational,
        k: usize,
    ) -> Result<(), TableError> {
        for index in [i, j, k] {
            if index >= self.dim {
                return Err(TableError::IndexOutOfRange {
                    index,
                    dim: self.dim,
                });
            }
        }
        if coeff.is_zero() {
            return Err(TableError::ZeroCoefficient { i, j });
        }
        if self.entries.contains_key(&(i, j)) {
            return Err(TableError::NotMonomial { i, j });
        }
        self.entries.insert((i, j), (coeff, k));
        Ok(())
    }

    pub fn product(&self, i: usize, j: usize) -> Option<(&Rational, usize)> {
        self.entries.get(&(i, j)).map(|(c, k)| (c, *k))
    }

    /// `(i, j, coeff, k)` sorted by `(i, j)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Rational, usize)> {
        self.entries.iter().map(|(&(i, j), (c, k))| (i, j, c, *k))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Checks `(b_i b_j) b_k = b_i (b_j b_k)` on every basis triple.
    pub fn check_associativity(&self) -> Result<(), TableError> {
        let mul = |i: usize, j: usize, scale: &Rational| -> Option<(Rational, usize)> {
            self.product(i, j).map(|(c, k)| (scale * c, k))
        };
        let one = Rational::from_integer(1.into());
        for i in 0..self.dim {
            for j in 0..self.dim {
                let left_inner = self.product(i, j);
                for k in 0..self.dim {
                    let left = left_inner.and_then(|(c, m)| mul(m, k, c));
                    let right = self
                        .product(j, k)
                        .and_then(|(c, m)| mul(i, m, &one).map(|(d, r)| (d * c, r)));
                    if left != right {
                        return Err(TableError::NotAssociative { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    /// Change of basis `b'_{perm[i]} = scales[i] * b_i`.
    pub fn scramble_with(&self, perm: &[usize], scales: &[Rational]) -> MultiplicationTable {
        assert_eq!(perm.len(), self.dim);
        assert_eq!(scales.len(), self.dim);
        assert!(scales.iter().all(|s| !s.is_zero()));
        let mut out = MultiplicationTable::new(self.dim);
        for (&(i, j), (c, k)) in &self.entries {
            let coeff = &scales[i] * &scales[j] * c / &scales[*k];
            out.entries.insert((perm[i], perm[j]), (coeff, perm[*k]));
        }
        out
    }

    /// Seeded random basis permutation, optionally with a rescale of each basis
    /// element by a factor from [`SCALE_FACTORS`].
    ///
    /// The permutation is drawn first (Fisher-Yates), then one factor per basis
    /// element in index order.
    pub fn scramble(&self, seed: u64, rescale: bool) -> MultiplicationTable {
        let mut rng = Lcg::new(seed);
        let perm = rng.permutation(self.dim);
        let scales: Vec<Rational> = (0..self.dim)
            .map(|_| {
                if rescale {
                    let (p, q) = SCALE_FACTORS[rng.next_below(SCALE_FACTORS.len())];
                    Rational::new(p.into(), q.into())
                } else {
                    Rational::from_integer(1.into())
                }
            })
            .collect();
        self.scramble_with(&perm, &scales)
    }

    pub fn to_file(&self) -> TableFile {
        TableFile {
            dim: self.dim,
            entries: self
                .entries()
                .map(|(i, j, c, k)| (i, j, format!("{}/{}", c.numer(), c.denom()), k))
                .collect(),
        }
    }

    pub fn from_file(file: &TableFile) -> Result<Self, TableError> {
        let mut table = MultiplicationTable::new(file.dim);
        for (i, j, coeff, k) in &file.entries {
            let c = Rational::from_str(coeff.trim())
                .map_err(|_| TableError::BadCoefficient(coeff.clone()))?;
            table.insert(*i, *j, c, *k)?;
        }
        Ok(table)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(&self.to_file()).expect("plain data serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, TableError> {
        let file: TableFile =
            serde_json::from_str(text).map_err(|e| TableError::Format(e.to_string()))?;
        Self::from_file(&file)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Convention, IncidenceAlgebra};
    use crate::poset::corpus::{chain, diamond};

    fn r(p: i64, q: i64) -> Rational {
        Rational::new(p.into(), q.into())
    }

    #[test]
    fn json_round_trip_is_byte_stable() {
        let t = IncidenceAlgebra::build(&chain(2), Convention::Reflexive).multiplication_table();
        let json = t.to_json();
        assert_eq!(
            json,
            "{\"dim\":3,\"entries\":[[0,0,\"1/1\",0],[0,2,\"1/1\",2],[1,1,\"1/1\",1],[2,1,\"1/1\",2]]}\n"
        );
        assert_eq!(MultiplicationTable::from_json(&json).unwrap(), t);
    }

    #[test]
    fn reads_integer_and_fraction_coefficients() {
        let t = MultiplicationTable::from_json(r#"{"dim":2,"entries":[[1,1,"-3/6",1],[0,0,"2",0]]}"#)
            .unwrap();
        assert_eq!(t.product(0, 0), Some((&r(2, 1), 0)));
        assert_eq!(t.product(1, 1), Some((&r(-1, 2), 1)));
    }

    #[test]
    fn rejects_bad_files() {
        assert!(matches!(
            MultiplicationTable::from_json(r#"{"dim":1,"entries":[[0,0,"1",0],[0,0,"2",0]]}"#),
            Err(TableError::NotMonomial { i: 0, j: 0 })
        ));
        assert!(matches!(
            MultiplicationTable::from_json(r#"{"dim":1,"entries":[[0,0,"0",0]]}"#),
            Err(TableError::ZeroCoefficient { .. })
        ));
        assert!(matches!(
            MultiplicationTable::from_json(r#"{"dim":1,"entries":[[0,0,"1/0",0]]}"#),
            Err(TableError::BadCoefficient(_))
        ));
        assert!(matches!(
            MultiplicationTable::from_json(r#"{"dim":1,"entries":[[0,3,"1",0]]}"#),
            Err(TableError::IndexOutOfRange { index: 3, dim: 1 })
        ));
        assert!(matches!(
            MultiplicationTable::from_json("{\"dim\":1}"),
            Err(TableError::Format(_))
        ));
    }

    #[test]
    fn identity_scramble_is_noop() {
        let t = IncidenceAlgebra::build(&diamond(), Convention::Reflexive).multiplication_table();
        let id: Vec<usize> = (0..t.dim()).collect();
        let ones = vec![r(1, 1); t.dim()];
        assert_eq!(t.scramble_with(&id, &ones), t);
    }

    #[test]
    fn scramble_preserves_associativity() {
        let t = IncidenceAlgebra::build(&diamond(), Convention::Reflexive).multiplication_table();
        for seed in 0..10 {
            let s = t.scramble(seed, true);
            assert_eq!(s.len(), t.len());
            s.check_associativity().unwrap();
            assert_eq!(s, t.scramble(seed, true));
        }
    }

    #[test]
    fn detects_non_associativity() {
        // b0 b0 = b1, b1 b0 = b0, everything else zero: (b0 b0) b0 = b0 but b0 (b0 b0) = 0
        let mut t = MultiplicationTable::new(2);
        t.insert(0, 0, r(1, 1), 1).unwrap();
        t.insert(1, 0, r(1, 1), 0).unwrap();
        assert_eq!(
            t.check_associativity(),
            Err(TableError::NotAssociative { i: 0, j: 0, k: 0 })
        );
    }
}
