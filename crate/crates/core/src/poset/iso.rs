use super::Poset;
use crate::error::PosetError;

pub const DEFAULT_ISO_BOUND: usize = 10;

/// Per-element invariants preserved by any order isomorphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct Signature {
    down: usize,
    up: usize,
    lower_covers: usize,
    upper_covers: usize,
    height: usize,
    depth: usize,
}

fn signatures(p: &Poset) -> Vec<Signature> {
    let n = p.len();
    let covers = p.covers();
    let heights = p.heights();
    let mut depth = vec![0usize; n];
    for &x in p.natural_labeling().iter().rev() {
        for y in p.above(x).ones() {
            depth[x] = depth[x].max(depth[y] + 1);
        }
    }
    (0..n)
        .map(|x| Signature {
            down: p.below(x).count_ones(..),
            up: p.above(x).count_ones(..),
            lower_covers: covers.iter().filter(|c| c.y == x).count(),
            upper_covers: covers.iter().filter(|c| c.x == x).count(),
            height: heights[x],
            depth: depth[x],
        })
        .collect()
}

/// [`is_isomorphic_bounded`] with the default size bound.
pub fn is_isomorphic(p: &Poset, q: &Poset) -> Result<Option<Vec<usize>>, PosetError> {
    is_isomorphic_bounded(p, q, DEFAULT_ISO_BOUND)
}

/// Searches for an order isomorphism `p -> q`.
///
/// Returns the witness `map` with `map[x]` the image of `x`, or `None` when the
/// posets are not isomorphic. Candidates are restricted to elements with equal
/// invariant signatures, then assigned by backtracking.
pub fn is_isomorphic_bounded(
    p: &Poset,
    q: &Poset,
    bound: usize,
) -> Result<Option<Vec<usize>>, PosetError> {
    for poset in [p, q] {
        if poset.len() > bound {
            return Err(PosetError::SizeLimitExceeded {
                n: poset.len(),
                bound,
            });
        }
    }
    if p.len() != q.len() || p.strict_pair_count() != q.strict_pair_count() {
        return Ok(None);
    }
    let sp = signatures(p);
    let sq = signatures(q);
    let (mut a, mut b) = (sp.clone(), sq.clone());
    a.sort_unstable();
    b.sort_unstable();
    if a != b {
        return Ok(None);
    }

    let n = p.len();
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|x| (0..n).filter(|&y| sp[x] == sq[y]).collect())
        .collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| (candidates[x].len(), x));

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend(p, q, &order, &candidates, 0, &mut map, &mut used) {
        Ok(Some(map))
    } else {
        Ok(None)
    }
}

fn extend(
    p: &Poset,
    q: &Poset,
    order: &[usize],
    candidates: &[Vec<usize>],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&x) = order.get(depth) else {
        return true;
    };
    for &image in &candidates[x] {
        if used[image] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&a| {
            let fa = map[a];
            p.lt(a, x) == q.lt(fa, image) && p.lt(x, a) == q.lt(image, fa)
        });
        if !consistent {
            continue;
        }
        map[x] = image;
        used[image] = true;
        if extend(p, q, order, candidates, depth + 1, map, used) {
            return true;
        }
        used[image] = false;
    }
    map[x] = usize::MAX;
    false
}
