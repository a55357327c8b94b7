//! Acceptance suite: one line per criterion, exact equality throughout.
//!
//! Every expected value is recomputed here from the order relation alone
//! (brute-force antichains, hand-rolled up-closures, permutation search),
//! never read back from the structures under test.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use incidence_core::checks::random_element;
use incidence_core::ideal::{enumerate_ideals, indecomposable_ideals, maximal_indecomposable_ideals};
use incidence_core::poset::corpus::{chain, exhaustive, random7};
use incidence_core::presented::confluence_probe;
use incidence_core::recovery::{links, recover_order_a, recover_order_b};
use incidence_core::rng::Lcg;
use incidence_core::subspace::subspace_closure;
use incidence_core::{Convention, Ideal, IncidenceAlgebra, Poset, RewriteSystem, Subspace, TripleConvention};

const CAP: usize = 12;
const SEEDS: [u64; 5] = [1, 2, 3, 4, 5];
const GENERATOR_SETS: usize = 10;

fn corpus() -> Vec<Poset> {
    let mut all = exhaustive(4);
    all.extend(random7());
    all
}

// ---- oracles -------------------------------------------------------------

/// Comparable pairs `(x, y)` with `x <= y`, straight from `leq`.
fn pairs(p: &Poset) -> Vec<(usize, usize)> {
    let n = p.len();
    let mut out = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if p.leq(x, y) {
                out.push((x, y));
            }
        }
    }
    out
}

/// `[xy] << [uv]` iff `u <= x` and `y <= v`.
fn nested(p: &Poset, a: (usize, usize), b: (usize, usize)) -> bool {
    p.leq(b.0, a.0) && p.leq(a.1, b.1)
}

fn up_closure(p: &Poset, seeds: &BTreeSet<(usize, usize)>) -> BTreeSet<(usize, usize)> {
    pairs(p)
        .into_iter()
        .filter(|&q| seeds.iter().any(|&s| nested(p, s, q)))
        .collect()
}

fn is_up_closed(p: &Poset, set: &BTreeSet<(usize, usize)>) -> bool {
    up_closure(p, set) == *set
}

/// Counts antichains of the pair-poset by testing every subset.
fn brute_force_antichains(p: &Poset) -> usize {
    let g = pairs(p);
    let m = g.len();
    assert!(m < 31);
    let mut count = 0;
    for mask in 0u32..(1 << m) {
        let ok = (0..m).all(|i| {
            mask & (1 << i) == 0
                || (i + 1..m).all(|j| mask & (1 << j) == 0 || (!nested(p, g[i], g[j]) && !nested(p, g[j], g[i])))
        });
        if ok {
            count += 1;
        }
    }
    count
}

fn ideal_pairs(ideal: &Ideal<'_>) -> BTreeSet<(usize, usize)> {
    ideal.pairs().iter().map(|q| (q.x, q.y)).collect()
}

fn covers(p: &Poset) -> BTreeSet<(usize, usize)> {
    let n = p.len();
    let mut out = BTreeSet::new();
    for x in 0..n {
        for y in 0..n {
            if p.lt(x, y) && !(0..n).any(|z| p.lt(x, z) && p.lt(z, y)) {
                out.insert((x, y));
            }
        }
    }
    out
}

fn longest_chain(p: &Poset) -> usize {
    let n = p.len();
    let mut best = vec![0usize; n];
    // a natural labeling visits every element after all of its predecessors
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| (0..n).filter(|&z| p.lt(z, x)).count());
    for &x in &order {
        best[x] = 1 + (0..n).filter(|&z| p.lt(z, x)).map(|z| best[z]).max().unwrap_or(0);
    }
    best.into_iter().max().unwrap_or(0)
}

/// Searches all bijections for one carrying `p`'s strict order onto `q`'s.
fn brute_force_isomorphic(p: &Poset, q: &Poset) -> bool {
    let n = p.len();
    if n != q.len() || p.strict_pair_count() != q.strict_pair_count() {
        return false;
    }
    fn extend(p: &Poset, q: &Poset, image: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let k = image.len();
        if k == p.len() {
            return true;
        }
        for y in 0..q.len() {
            if used[y] {
                continue;
            }
            let fits = (0..k).all(|x| p.lt(x, k) == q.lt(image[x], y) && p.lt(k, x) == q.lt(y, image[x]));
            if fits {
                used[y] = true;
                image.push(y);
                if extend(p, q, image, used) {
                    return true;
                }
                image.pop();
                used[y] = false;
            }
        }
        false
    }
    extend(p, q, &mut Vec::new(), &mut vec![false; n])
}

// ---- criteria ------------------------------------------------------------

type Verdict = Result<String, String>;

fn bijection_counts(posets: &[Poset]) -> Verdict {
    for p in posets {
        let a = IncidenceAlgebra::build(p, Convention::Reflexive);
        let ind = indecomposable_ideals(&a).map_err(|e| e.to_string())?.len();
        let max = maximal_indecomposable_ideals(&a).map_err(|e| e.to_string())?.len();
        if ind != pairs(p).len() || max != p.len() {
            return Err(format!("{ind} indecomposable, {max} maximal on `{}`", p.to_text().trim_end()));
        }
    }
    Ok(format!("{} posets", posets.len()))
}

fn ideal_up_set_equivalence(posets: &[Poset]) -> Verdict {
    let mut enumerated = 0;
    let mut rng = Lcg::new(0);
    for p in posets {
        let a = IncidenceAlgebra::build(p, Convention::Reflexive);
        if a.dim() <= CAP {
            enumerated += 1;
            let got = enumerate_ideals(&a, CAP).map_err(|e| e.to_string())?.count();
            let want = brute_force_antichains(p);
            if got != want {
                return Err(format!("{got} ideals, {want} antichains on `{}`", p.to_text().trim_end()));
            }
        }
        for _ in 0..GENERATOR_SETS {
            let k = 1 + rng.next_below(3);
            let elems: Vec<_> = (0..k).map(|_| random_element(&a, &mut rng)).collect();
            let ideal = Ideal::generated_by(&a, &elems).map_err(|e| e.to_string())?;
            let space = subspace_closure(&a, &elems).map_err(|e| e.to_string())?;
            let support: BTreeSet<_> = elems
                .iter()
                .flat_map(|e| e.support().map(|i| a.pair(i)).collect::<Vec<_>>())
                .map(|q| (q.x, q.y))
                .collect();
            let expected = up_closure(p, &support);
            if space.dim() != ideal.len() || ideal_pairs(&ideal) != expected {
                return Err(format!(
                    "closure dim {} vs up-set {} (expected {}) on `{}`",
                    space.dim(),
                    ideal.len(),
                    expected.len(),
                    p.to_text().trim_end()
                ));
            }
        }
    }
    Ok(format!("{enumerated} posets enumerated, {} generator sets", posets.len() * GENERATOR_SETS))
}

fn product_and_sum(posets: &[Poset]) -> Verdict {
    let mut products = 0usize;
    let mut sums = 0usize;
    for p in posets {
        let a = IncidenceAlgebra::build(p, Convention::Reflexive);
        let spaces: Vec<Subspace> = (0..a.dim())
            .map(|g| subspace_closure(&a, &[a.generator(g)]).expect("same algebra"))
            .collect();
        for g in 0..a.dim() {
            let (x, y) = (a.pair(g).x, a.pair(g).y);
            let left = Ideal::principal(&a, g).map_err(|e| e.to_string())?;
            for h in 0..a.dim() {
                let (u, v) = (a.pair(h).x, a.pair(h).y);
                let right = Ideal::principal(&a, h).map_err(|e| e.to_string())?;
                let got = ideal_pairs(&left.product(&right).map_err(|e| e.to_string())?);
                let expected = if p.leq(y, u) {
                    up_closure(p, &BTreeSet::from([(x, v)]))
                } else {
                    BTreeSet::new()
                };
                let oracle = spaces[g].product(&a, &spaces[h]);
                let oracle_ok = oracle.dim() == expected.len()
                    && expected
                        .iter()
                        .all(|&(s, t)| oracle.contains(&a.pair_element(s, t).expect("comparable")));
                if got != expected || !oracle_ok {
                    return Err(format!(
                        "I({},{})·I({},{}) on `{}`",
                        p.label(x),
                        p.label(y),
                        p.label(u),
                        p.label(v),
                        p.to_text().trim_end()
                    ));
                }
                products += 1;
            }
        }
        if a.dim() > CAP {
            continue;
        }
        let ideals: Vec<_> = enumerate_ideals(&a, CAP).map_err(|e| e.to_string())?.collect();
        let sets: Vec<_> = ideals.iter().map(ideal_pairs).collect();
        for (i, s) in ideals.iter().enumerate() {
            for (j, t) in ideals.iter().enumerate() {
                let union: BTreeSet<_> = sets[i].union(&sets[j]).copied().collect();
                let sum = ideal_pairs(&s.sum(t).map_err(|e| e.to_string())?);
                if sum != union || !is_up_closed(p, &union) {
                    return Err(format!("sum {} + {} on `{}`", s, t, p.to_text().trim_end()));
                }
                sums += 1;
            }
        }
    }
    Ok(format!("{products} principal products, {sums} sums"))
}

fn round_trip(posets: &[Poset]) -> Verdict {
    let mut runs = 0;
    for p in posets {
        let table = IncidenceAlgebra::build(p, Convention::Reflexive).multiplication_table();
        for seed in SEEDS {
            let t = table.scramble(seed, true);
            let a = recover_order_a(&t).map_err(|e| format!("seed {seed}: {e}"))?;
            let b = recover_order_b(&t).map_err(|e| format!("seed {seed}: {e}"))?;
            if !brute_force_isomorphic(p, &a) || !brute_force_isomorphic(p, &b) || a != b {
                return Err(format!("seed {seed} on `{}`", p.to_text().trim_end()));
            }
            runs += 1;
        }
    }
    Ok(format!("{runs} scrambled tables"))
}

fn link_criterion(posets: &[Poset]) -> Verdict {
    for p in posets {
        let a = IncidenceAlgebra::build(p, Convention::Reflexive);
        let found = links(&a.multiplication_table()).map_err(|e| e.to_string())?;
        let mut detected = BTreeSet::new();
        for (i, j) in found {
            let (pi, pj) = (a.pair(i), a.pair(j));
            if !pi.is_diagonal() || !pj.is_diagonal() {
                return Err(format!("link between non-diagonal basis elements {i}, {j}"));
            }
            detected.insert((pi.x, pj.x));
        }
        if detected != covers(p) {
            return Err(format!("links differ from covers on `{}`", p.to_text().trim_end()));
        }
        let n = p.len();
        let mut reach = vec![vec![false; n]; n];
        for &(x, y) in &detected {
            reach[x][y] = true;
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    reach[i][j] = reach[i][j] || (reach[i][k] && reach[k][j]);
                }
            }
        }
        if (0..n).any(|i| (0..n).any(|j| reach[i][j] != p.lt(i, j))) {
            return Err(format!("closure of links differs on `{}`", p.to_text().trim_end()));
        }
    }
    Ok(format!("{} posets", posets.len()))
}

fn conventions(posets: &[Poset]) -> Verdict {
    let mut searched = 0;
    for p in posets {
        let r = IncidenceAlgebra::build(p, Convention::Reflexive);
        let one = r.unit().map_err(|e| e.to_string())?;
        for g in 0..r.dim() {
            let e = r.generator(g);
            if r.multiply(&one, &e).unwrap() != e || r.multiply(&e, &one).unwrap() != e {
                return Err(format!("unit fails on {} in `{}`", r.pair_label(g), p.to_text().trim_end()));
            }
        }
        let s = IncidenceAlgebra::build(p, Convention::Irreflexive);
        let want = longest_chain(p).max(1);
        if s.nilpotency_index() != Some(want) {
            return Err(format!(
                "nilpotency index {:?}, longest chain {want} on `{}`",
                s.nilpotency_index(),
                p.to_text().trim_end()
            ));
        }
        if s.dim() <= 6 {
            searched += 1;
            let found = s.unit_coefficient_idempotents(6).expect("dim within bound");
            if !found.is_empty() {
                return Err(format!("idempotent {} in `{}`", s.render(&found[0]), p.to_text().trim_end()));
            }
        }
    }
    Ok(format!("{} posets, {searched} idempotent searches", posets.len()))
}

fn idempotent_ideals(posets: &[Poset]) -> Verdict {
    let mut checked = 0;
    for p in posets {
        let a = IncidenceAlgebra::build(p, Convention::Reflexive);
        for ideal in indecomposable_ideals(&a).map_err(|e| e.to_string())? {
            let square = ideal.product(&ideal).map_err(|e| e.to_string())?;
            let set = ideal_pairs(&ideal);
            let minimal: Vec<_> = set
                .iter()
                .filter(|&&q| !set.iter().any(|&r| r != q && nested(p, r, q)))
                .collect();
            let diagonal = minimal.len() == 1 && minimal[0].0 == minimal[0].1;
            let nonzero = !square.is_zero();
            let equal = square == ideal;
            if nonzero != equal || equal != diagonal || diagonal != ideal.is_maximal_indecomposable() {
                return Err(format!("{} on `{}`", ideal, p.to_text().trim_end()));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} indecomposable ideals"))
}

fn presented_probe() -> Verdict {
    let p = chain(2);
    let mut notes = Vec::new();
    let mut failures = Vec::new();
    for convention in [TripleConvention::AllowRepeats, TripleConvention::DistinctOnly] {
        let sys = RewriteSystem::build(&p, convention);
        let dims = sys.dimension_up_to(6).map_err(|e| e.to_string())?;
        let monotone = dims.windows(2).all(|w| w[0] <= w[1]);
        let stable = dims.len() >= 2 && dims[dims.len() - 1] == dims[dims.len() - 2];
        let probe = confluence_probe(std::slice::from_ref(&p), convention, 5);
        for w in &probe.witnesses {
            println!("    witness: {w}");
        }
        let line = format!("{convention:?} dims {dims:?}, {} order-dependent words", probe.witnesses.len());
        if monotone && stable {
            notes.push(line);
        } else {
            failures.push(format!("{line} (monotone={monotone}, stable={stable})"));
        }
    }
    if failures.is_empty() {
        Ok(notes.join("; "))
    } else {
        notes.extend(failures);
        Err(notes.join("; "))
    }
}

fn main() -> ExitCode {
    let posets = corpus();
    let criteria: [(&str, &dyn Fn() -> Verdict); 8] = [
        ("bijection counts", &|| bijection_counts(&posets)),
        ("ideal/up-set equivalence", &|| ideal_up_set_equivalence(&posets)),
        ("product and sum lemmas", &|| product_and_sum(&posets)),
        ("main theorem round-trip", &|| round_trip(&posets)),
        ("link criterion", &|| link_criterion(&posets)),
        ("convention dichotomy", &|| conventions(&posets)),
        ("idempotent-ideal characterization", &|| idempotent_ideals(&posets)),
        ("presented-algebra probe", &presented_probe),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let verdict = run();
        let secs = start.elapsed().as_secs_f64();
        match verdict {
            Ok(detail) => println!("criterion {} {name}: pass ({detail}) [{secs:.1}s]", k + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} {name}: FAIL ({detail}) [{secs:.1}s]", k + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
