//! Graphviz exports. Output depends only on the input, never on hash order.

use std::fmt::Write;

use crate::algebra::IncidenceAlgebra;
use crate::error::IdealError;
use crate::ideal::{enumerate_ideals, Ideal};
use crate::poset::{GammaPoset, Poset};

pub const MAX_LATTICE_NODES: usize = 64;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Hasse diagram: one node per element, one edge per cover, elements of equal
/// height on the same rank.
pub fn hasse(poset: &Poset) -> String {
    let mut out = String::from("digraph hasse {\n  rankdir=BT;\n");
    let heights = poset.heights();
    let order = poset.natural_labeling();
    for &x in &order {
        writeln!(out, "  {};", quote(poset.label(x))).unwrap();
    }
    let levels = heights.iter().copied().max().map_or(0, |h| h + 1);
    for level in 0..levels {
        let members: Vec<String> = order
            .iter()
            .filter(|&&x| heights[x] == level)
            .map(|&x| quote(poset.label(x)))
            .collect();
        if members.len() > 1 {
            writeln!(out, "  {{ rank=same; {}; }}", members.join("; ")).unwrap();
        }
    }
    for c in poset.covers() {
        writeln!(out, "  {} -> {};", quote(poset.label(c.x)), quote(poset.label(c.y))).unwrap();
    }
    out.push_str("}\n");
    out
}

/// Covering graph of the pair-poset under nesting.
pub fn gamma(poset: &Poset) -> String {
    let g = GammaPoset::new(poset);
    let name = |i: usize| {
        let p = g.pair(i);
        quote(&format!("[{},{}]", poset.label(p.x), poset.label(p.y)))
    };
    let mut out = String::from("digraph gamma {\n  rankdir=BT;\n");
    for i in 0..g.len() {
        writeln!(out, "  {};", name(i)).unwrap();
    }
    for (i, j) in g.covers() {
        writeln!(out, "  {} -> {};", name(i), name(j)).unwrap();
    }
    out.push_str("}\n");
    out
}

/// Ideal lattice: nodes are ideals (by their generator sets), edges are
/// covering containments. Refused beyond [`MAX_LATTICE_NODES`] ideals.
pub fn ideal_lattice(algebra: &IncidenceAlgebra, cap: usize) -> Result<String, IdealError> {
    let mut ideals: Vec<Ideal<'_>> = Vec::new();
    for ideal in enumerate_ideals(algebra, cap)? {
        ideals.push(ideal);
        if ideals.len() > MAX_LATTICE_NODES {
            let total = enumerate_ideals(algebra, cap)?.count();
            return Err(IdealError::CapExceeded {
                required: total,
                cap: MAX_LATTICE_NODES,
            });
        }
    }
    ideals.sort_by_key(|i| (i.len(), i.generators()));
    let mut out = String::from("digraph ideals {\n  rankdir=BT;\n");
    for (k, ideal) in ideals.iter().enumerate() {
        writeln!(out, "  n{k} [label={}];", quote(&ideal.render())).unwrap();
    }
    for (a, small) in ideals.iter().enumerate() {
        for (b, big) in ideals.iter().enumerate() {
            if a == b || !small.is_subset(big) || small.len() == big.len() {
                continue;
            }
            let covered = !ideals.iter().any(|mid| {
                mid.len() > small.len()
                    && mid.len() < big.len()
                    && small.is_subset(mid)
                    && mid.is_subset(big)
            });
            if covered {
                writeln!(out, "  n{a} -> n{b};").unwrap();
            }
        }
    }
    out.push_str("}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Convention;
    use crate::poset::corpus::{antichain, boolean_lattice, chain, diamond};

    fn count(s: &str, pat: &str) -> usize {
        s.matches(pat).count()
    }

    #[test]
    fn hasse_of_two_chain() {
        let dot = hasse(&chain(2));
        assert_eq!(
            dot,
            "digraph hasse {\n  rankdir=BT;\n  \"a\";\n  \"b\";\n  \"a\" -> \"b\";\n}\n"
        );
    }

    #[test]
    fn hasse_ranks_diamond() {
        let dot = hasse(&diamond());
        assert!(dot.contains("{ rank=same; \"b\"; \"c\"; }"));
        assert_eq!(count(&dot, "->"), 4);
    }

    #[test]
    fn gamma_of_two_chain() {
        let dot = gamma(&chain(2));
        assert_eq!(count(&dot, "->"), 2);
        assert_eq!(count(&dot, ";\n") - count(&dot, "->") - 1, 3);
        assert!(dot.contains("\"[a,a]\" -> \"[a,b]\";"));
    }

    #[test]
    fn ideal_lattice_of_two_chain() {
        let a = IncidenceAlgebra::build(&chain(2), Convention::Reflexive);
        let dot = ideal_lattice(&a, 20).unwrap();
        assert_eq!(count(&dot, "[label="), 5);
        // 0 < {ab} < {aa,ab},{bb,ab} < full
        assert_eq!(count(&dot, "->"), 5);
    }

    #[test]
    fn ideal_lattice_refused_when_large() {
        let a = IncidenceAlgebra::build(&antichain(7), Convention::Reflexive);
        assert_eq!(
            ideal_lattice(&a, 20),
            Err(IdealError::CapExceeded { required: 128, cap: 64 })
        );
        let b = IncidenceAlgebra::build(&boolean_lattice(3), Convention::Reflexive);
        assert!(matches!(ideal_lattice(&b, 20), Err(IdealError::CapExceeded { required: 27, .. })));
    }

    #[test]
    fn quoting() {
        assert_eq!(quote("a\"b"), "\"a\\\"b\"");
    }
}
