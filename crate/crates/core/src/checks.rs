//! Theorem-suite runner: every ideal-lattice and recovery property, checked on
//! one poset (or one table) with a failure witness for each violation.

use std::fmt;

use crate::algebra::{AlgebraElement, Convention, IncidenceAlgebra, MultiplicationTable};
use crate::ideal::{
    enumerate_ideals, indecomposable_ideals, maximal_ideals, maximal_indecomposable_ideals, Ideal,
};
use crate::poset::{is_isomorphic_bounded, Pair, Poset};
use crate::recovery::{links, recover_order_a, recover_order_b, verify_roundtrip};
use crate::rng::Lcg;
use crate::subspace::{subspace_closure, Subspace};
use crate::Rational;

#[derive(Clone, Debug)]
pub struct CheckConfig {
    /// Scramble seeds for the round trips (each run with rescaling).
    pub seeds: Vec<u64>,
    /// Largest pair-poset on which ideals are enumerated.
    pub enumeration_cap: usize,
    /// Random generator lists per poset for the span check.
    pub generator_sets: usize,
    /// Seed for the random generator lists.
    pub seed: u64,
    /// Largest dimension for the exhaustive idempotent search.
    pub idempotent_search_dim: usize,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            seeds: vec![1, 2, 3, 4, 5],
            enumeration_cap: 12,
            generator_sets: 10,
            seed: 0,
            idempotent_search_dim: 6,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    /// `None` when the check did not apply (e.g. above the enumeration cap).
    pub passed: Option<bool>,
    pub witness: Option<String>,
}

impl CheckOutcome {
    fn pass(name: &'static str) -> Self {
        CheckOutcome {
            name,
            passed: Some(true),
            witness: None,
        }
    }

    fn skipped(name: &'static str) -> Self {
        CheckOutcome {
            name,
            passed: None,
            witness: None,
        }
    }

    fn from_result(name: &'static str, result: Result<(), String>) -> Self {
        match result {
            Ok(()) => Self::pass(name),
            Err(w) => CheckOutcome {
                name,
                passed: Some(false),
                witness: Some(w),
            },
        }
    }

    pub fn failed(&self) -> bool {
        self.passed == Some(false)
    }
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = match self.passed {
            Some(true) => "pass",
            Some(false) => "FAIL",
            None => "skip",
        };
        write!(f, "{verdict} {}", self.name)?;
        if let Some(w) = &self.witness {
            write!(f, ": {w}")?;
        }
        Ok(())
    }
}

fn ensure(cond: bool, witness: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(witness())
    }
}

/// A random element with 1 to 3 terms and nonzero integer coefficients in `-3..=3`.
pub fn random_element(algebra: &IncidenceAlgebra, rng: &mut Lcg) -> AlgebraElement {
    if algebra.dim() == 0 {
        return algebra.zero();
    }
    let terms = 1 + rng.next_below(3);
    let items: Vec<(usize, Rational)> = (0..terms)
        .map(|_| {
            let g = rng.next_below(algebra.dim());
            let mut c = rng.next_below(7) as i64 - 3;
            if c == 0 {
                c = 1;
            }
            (g, Rational::from_integer(c.into()))
        })
        .collect();
    algebra.element(items).expect("indices in range")
}

/// Runs the full property suite on one poset.
pub fn check_poset(poset: &Poset, config: &CheckConfig) -> Vec<CheckOutcome> {
    let algebra = IncidenceAlgebra::build(poset, Convention::Reflexive);
    let small = algebra.dim() <= config.enumeration_cap;
    let mut out = vec![
        CheckOutcome::from_result("bijection-counts", bijection_counts(&algebra)),
        if small {
            CheckOutcome::from_result("ideal-count", ideal_count(&algebra, config))
        } else {
            CheckOutcome::skipped("ideal-count")
        },
        CheckOutcome::from_result("span", span_corollary(&algebra, config)),
        CheckOutcome::from_result("product-lemma", product_lemma(&algebra)),
    ];
    if small {
        out.push(CheckOutcome::from_result("sum-lemma", sum_and_containment(&algebra, config)));
        out.push(CheckOutcome::from_result("maximal-ideals", maximal_ideal_check(&algebra, config)));
    } else {
        out.push(CheckOutcome::skipped("sum-lemma"));
        out.push(CheckOutcome::skipped("maximal-ideals"));
    }
    out.push(CheckOutcome::from_result("idempotent-ideals", idempotent_ideals(&algebra)));
    out.push(CheckOutcome::from_result("main-theorem", main_theorem(&algebra)));
    out.push(CheckOutcome::from_result("round-trip", round_trip(poset, config)));
    out.push(CheckOutcome::from_result("link-criterion", link_criterion(&algebra)));
    out.push(CheckOutcome::from_result("conventions", conventions(poset, config)));
    out
}

fn bijection_counts(a: &IncidenceAlgebra) -> Result<(), String> {
    let p = a.poset();
    let indecomposable = indecomposable_ideals(a).map_err(|e| e.to_string())?;
    let maximal = maximal_indecomposable_ideals(a).map_err(|e| e.to_string())?;
    let decomposable_count = indecomposable.iter().filter(|i| !i.is_indecomposable()).count();
    ensure(indecomposable.len() == p.comparable_pair_count() && decomposable_count == 0, || {
        format!("{} indecomposable ideals for {} pairs", indecomposable.len(), p.comparable_pair_count())
    })?;
    ensure(maximal.len() == p.len(), || {
        format!("{} maximal indecomposable ideals for {} elements", maximal.len(), p.len())
    })
}

fn ideal_count(a: &IncidenceAlgebra, config: &CheckConfig) -> Result<(), String> {
    let enumerated = enumerate_ideals(a, config.enumeration_cap)
        .map_err(|e| e.to_string())?
        .count() as u128;
    let antichains = a.gamma().count_antichains();
    ensure(enumerated == antichains, || {
        format!("{enumerated} ideals but {antichains} antichains")
    })
}

fn span_corollary(a: &IncidenceAlgebra, config: &CheckConfig) -> Result<(), String> {
    let mut rng = Lcg::new(config.seed);
    for set in 0..config.generator_sets {
        let count = 1 + rng.next_below(3);
        let elems: Vec<AlgebraElement> = (0..count).map(|_| random_element(a, &mut rng)).collect();
        let ideal = Ideal::generated_by(a, &elems).map_err(|e| e.to_string())?;
        let space = subspace_closure(a, &elems).map_err(|e| e.to_string())?;
        let rendered = || {
            let e: Vec<String> = elems.iter().map(|e| a.render(e)).collect();
            format!("set {set} [{}]: ideal {} has {} pairs, closure has dimension {}", e.join("; "), ideal, ideal.len(), space.dim())
        };
        ensure(space.dim() == ideal.len(), rendered)?;
        for g in ideal.generators() {
            ensure(space.contains(&a.generator(g)), || {
                format!("{} figures in but is not an element ({})", a.pair_label(g), rendered())
            })?;
        }
    }
    Ok(())
}

/// Principal ideal spans computed by vector closure, never from the pair-poset.
fn closure_spans(a: &IncidenceAlgebra) -> Vec<Subspace> {
    (0..a.dim())
        .map(|i| subspace_closure(a, &[a.generator(i)]).expect("same algebra"))
        .collect()
}

fn product_lemma(a: &IncidenceAlgebra) -> Result<(), String> {
    let p = a.poset();
    let spans = closure_spans(a);
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let (xy, uv) = (a.pair(i), a.pair(j));
            let left = Ideal::principal(a, i).map_err(|e| e.to_string())?;
            let right = Ideal::principal(a, j).map_err(|e| e.to_string())?;
            let product = left.product(&right).map_err(|e| e.to_string())?;
            let expected = if p.leq(xy.y, uv.x) {
                let k = a.generator_index(Pair::new(xy.x, uv.y)).expect("comparable");
                Ideal::principal(a, k).map_err(|e| e.to_string())?
            } else {
                Ideal::zero(a).map_err(|e| e.to_string())?
            };
            ensure(product == expected, || {
                format!("I{} I{} = {} but expected {}", a.pair_label(i), a.pair_label(j), product, expected)
            })?;
            let oracle = spans[i].product(a, &spans[j]);
            ensure(oracle == Subspace::of_generators(a, product.generators()), || {
                format!("I{} I{}: subspace product has dimension {}, up-set product {}", a.pair_label(i), a.pair_label(j), oracle.dim(), product)
            })?;
        }
    }
    Ok(())
}

fn sum_and_containment(a: &IncidenceAlgebra, config: &CheckConfig) -> Result<(), String> {
    let ideals: Vec<Ideal<'_>> = enumerate_ideals(a, config.enumeration_cap)
        .map_err(|e| e.to_string())?
        .collect();
    for i in &ideals {
        for j in &ideals {
            let sum = i.sum(j).map_err(|e| e.to_string())?;
            let mut union = i.up_set().clone();
            union.union_with(j.up_set());
            ensure(sum.up_set() == &union && ideals.contains(&sum), || {
                format!("{i} + {j} = {sum}")
            })?;
            // the sum is the least ideal above both
            let least = ideals
                .iter()
                .filter(|k| i.is_subset(k) && j.is_subset(k))
                .all(|k| sum.is_subset(k));
            ensure(least, || format!("{i} + {j} = {sum} is not the join"))?;
            let meet = i.intersect(j).map_err(|e| e.to_string())?;
            let product = i.product(j).map_err(|e| e.to_string())?;
            ensure(
                product.is_subset(&meet) && meet.is_subset(i) && meet.is_subset(j),
                || format!("{i} {j} = {product} is not inside {meet}"),
            )?;
        }
    }
    Ok(())
}

fn maximal_ideal_check(a: &IncidenceAlgebra, config: &CheckConfig) -> Result<(), String> {
    let ideals: Vec<Ideal<'_>> = enumerate_ideals(a, config.enumeration_cap)
        .map_err(|e| e.to_string())?
        .collect();
    let maximal = maximal_ideals(a).map_err(|e| e.to_string())?;
    for m in &maximal {
        let strictly_above: Vec<&Ideal<'_>> =
            ideals.iter().filter(|j| m.is_subset(j) && *j != m).collect();
        ensure(
            strictly_above.len() == 1 && strictly_above[0].is_full(),
            || format!("{m} is not maximal"),
        )?;
    }
    let found = ideals.iter().filter(|i| i.is_maximal()).count();
    ensure(found == maximal.len(), || {
        format!("{found} maximal ideals enumerated, {} constructed", maximal.len())
    })
}

fn idempotent_ideals(a: &IncidenceAlgebra) -> Result<(), String> {
    for ideal in indecomposable_ideals(a).map_err(|e| e.to_string())? {
        let square = ideal.product(&ideal).map_err(|e| e.to_string())?;
        let nonzero = !square.is_zero();
        let idempotent = square == ideal;
        let maximal = ideal.is_maximal_indecomposable();
        ensure(nonzero == idempotent && idempotent == maximal, || {
            format!("{ideal}: II={square}, maximal indecomposable={maximal}")
        })?;
    }
    Ok(())
}

fn main_theorem(a: &IncidenceAlgebra) -> Result<(), String> {
    let p = a.poset();
    let ideals = maximal_indecomposable_ideals(a).map_err(|e| e.to_string())?;
    for x in 0..p.len() {
        for y in 0..p.len() {
            let product = ideals[x].product(&ideals[y]).map_err(|e| e.to_string())?;
            ensure(product.is_zero() != p.leq(x, y), || {
                format!("I_{} I_{} = {} but related={}", p.label(x), p.label(y), product, p.leq(x, y))
            })?;
            if p.leq(x, y) {
                let k = a.generator_index(Pair::new(x, y)).expect("comparable");
                let expected = Ideal::principal(a, k).map_err(|e| e.to_string())?;
                ensure(product == expected, || {
                    format!("I_{} I_{} = {} instead of {}", p.label(x), p.label(y), product, expected)
                })?;
            }
        }
    }
    Ok(())
}

fn round_trip(poset: &Poset, config: &CheckConfig) -> Result<(), String> {
    let report = verify_roundtrip(poset, &config.seeds, true);
    ensure(report.all_passed(), || {
        let failing: Vec<String> = report
            .outcomes
            .iter()
            .filter(|o| !o.passed())
            .map(|o| format!("seed {} ({})", o.seed, o.error.clone().unwrap_or_else(|| "not isomorphic".into())))
            .collect();
        format!("{} on `{}`", failing.join(", "), poset.to_text().trim_end().replace('\n', "; "))
    })
}

fn link_criterion(a: &IncidenceAlgebra) -> Result<(), String> {
    let p = a.poset();
    let table = a.multiplication_table();
    let detected = links(&table).map_err(|e| e.to_string())?;
    // unscrambled: basis index of [xx] maps back to x
    let element_of = |basis: usize| a.pair(basis).x;
    let mut as_elements: Vec<Pair> = detected
        .iter()
        .map(|&(i, j)| Pair::new(element_of(i), element_of(j)))
        .collect();
    as_elements.sort();
    let mut covers = p.covers();
    covers.sort();
    ensure(as_elements == covers, || {
        format!("links {as_elements:?} but covers {covers:?}")
    })?;
    let edges: Vec<(usize, usize)> = as_elements.iter().map(|c| (c.x, c.y)).collect();
    let closed = Poset::from_edges(p.labels().to_vec(), &edges).map_err(|e| e.to_string())?;
    ensure(&closed == p, || "closure of links differs from the order".to_owned())
}

fn conventions(poset: &Poset, config: &CheckConfig) -> Result<(), String> {
    let reflexive = IncidenceAlgebra::build(poset, Convention::Reflexive);
    let unit = reflexive.unit().map_err(|e| e.to_string())?;
    for i in 0..reflexive.dim() {
        let g = reflexive.generator(i);
        let left = reflexive.multiply(&unit, &g).map_err(|e| e.to_string())?;
        let right = reflexive.multiply(&g, &unit).map_err(|e| e.to_string())?;
        ensure(left == g && right == g, || {
            format!("unit fails on {}", reflexive.pair_label(i))
        })?;
    }
    let irreflexive = IncidenceAlgebra::build(poset, Convention::Irreflexive);
    let expected = poset.longest_chain().max(1);
    ensure(irreflexive.nilpotency_index() == Some(expected), || {
        format!("nilpotency index {:?}, longest chain {expected}", irreflexive.nilpotency_index())
    })?;
    if let Some(found) = irreflexive.unit_coefficient_idempotents(config.idempotent_search_dim) {
        ensure(found.is_empty(), || {
            format!("irreflexive idempotent {}", irreflexive.render(&found[0]))
        })?;
    }
    Ok(())
}

/// Validates a table file and runs both recovery routes on it.
pub fn check_table(table: &MultiplicationTable) -> Vec<CheckOutcome> {
    let assoc = table.check_associativity().map_err(|e| e.to_string());
    let mut out = vec![CheckOutcome::from_result("associativity", assoc.clone())];
    if assoc.is_err() {
        return out;
    }
    let a = recover_order_a(table);
    let b = recover_order_b(table);
    out.push(CheckOutcome::from_result("order-route", a.as_ref().map(|_| ()).map_err(|e| e.to_string())));
    out.push(CheckOutcome::from_result("link-route", b.as_ref().map(|_| ()).map_err(|e| e.to_string())));
    if let (Ok(pa), Ok(pb)) = (&a, &b) {
        out.push(CheckOutcome::from_result(
            "routes-agree",
            ensure(pa == pb, || format!("order route `{}` vs link route `{}`", pa.to_text().trim_end(), pb.to_text().trim_end())),
        ));
        let rebuilt = IncidenceAlgebra::build(pa, Convention::Reflexive);
        out.push(CheckOutcome::from_result(
            "dimension",
            ensure(rebuilt.dim() == table.dim(), || {
                format!("recovered poset has {} pairs, table dimension {}", rebuilt.dim(), table.dim())
            }),
        ));
    }
    out
}

/// Isomorphism with a bound large enough for any desk-scale poset.
pub fn isomorphic(p: &Poset, q: &Poset) -> bool {
    let bound = p.len().max(q.len());
    is_isomorphic_bounded(p, q, bound)
        .map(|w| w.is_some())
        .unwrap_or(false)
}
