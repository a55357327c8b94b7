//! An algebra presented by generators (the poset elements) and monomial relations:
//!
//! * (i)   `a <= b <= c`  gives `abc -> ac`
//! * (ii)  `a != b`       gives `aba -> 0`
//! * (iii) `a < b`        gives `ba -> 0`
//!
//! Whether the elements in (i) must be distinct is a convention
//! ([`TripleConvention`]). Words are reduced leftmost-first; any zero pattern
//! anywhere in the word sends it to zero before other rules are tried.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::PresentedError;
use crate::poset::Poset;

pub const DEFAULT_MAX_WORD_LEN: usize = 12;
pub const MAX_DEGREE: usize = 8;

pub type Word = Vec<usize>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum TripleConvention {
    /// Relation (i) only for three distinct elements `a < b < c`.
    DistinctOnly,
    /// Relation (i) for `a <= b <= c` with repeats allowed.
    #[default]
    AllowRepeats,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NormalForm {
    Zero,
    Word(Word),
}

impl NormalForm {
    pub fn is_zero(&self) -> bool {
        matches!(self, NormalForm::Zero)
    }
}

#[derive(Clone, Debug)]
pub struct RewriteSystem {
    poset: Poset,
    convention: TripleConvention,
    /// Left side to right side; `None` is zero.
    rules: BTreeMap<Word, Option<Word>>,
    max_word_len: usize,
}

impl RewriteSystem {
    pub fn build(poset: &Poset, convention: TripleConvention) -> Self {
        let n = poset.len();
        let mut rules = BTreeMap::new();
        for a in 0..n {
            for b in 0..n {
                if a != b {
                    rules.insert(vec![a, b, a], None);
                }
                if a != b && poset.lt(a, b) {
                    rules.insert(vec![b, a], None);
                }
                for c in 0..n {
                    let qualifies = match convention {
                        TripleConvention::DistinctOnly => poset.lt(a, b) && poset.lt(b, c),
                        TripleConvention::AllowRepeats => poset.leq(a, b) && poset.leq(b, c),
                    };
                    if qualifies {
                        rules.entry(vec![a, b, c]).or_insert(Some(vec![a, c]));
                    }
                }
            }
        }
        RewriteSystem {
            poset: poset.clone(),
            convention,
            rules,
            max_word_len: DEFAULT_MAX_WORD_LEN,
        }
    }

    pub fn with_max_word_len(mut self, max: usize) -> Self {
        self.max_word_len = max;
        self
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn convention(&self) -> TripleConvention {
        self.convention
    }

    pub fn rules(&self) -> impl Iterator<Item = (&Word, Option<&Word>)> {
        self.rules.iter().map(|(l, r)| (l, r.as_ref()))
    }

    /// Rules rendered as `aab -> ab` / `ba -> 0`, sorted.
    pub fn rule_strings(&self) -> Vec<String> {
        self.rules
            .iter()
            .map(|(l, r)| {
                let rhs = r.as_ref().map_or_else(|| "0".to_owned(), |w| self.concat(w));
                format!("{} -> {}", self.concat(l), rhs)
            })
            .collect()
    }

    fn concat(&self, w: &[usize]) -> String {
        w.iter().map(|&x| self.poset.label(x)).collect()
    }

    /// Whitespace-separated labels.
    pub fn parse_word(&self, text: &str) -> Result<Word, PresentedError> {
        text.split_whitespace()
            .map(|t| {
                self.poset
                    .index_of(t)
                    .ok_or_else(|| PresentedError::UnknownLabel(t.to_owned()))
            })
            .collect()
    }

    pub fn format(&self, nf: &NormalForm) -> String {
        match nf {
            NormalForm::Zero => "0".to_owned(),
            NormalForm::Word(w) if w.is_empty() => "1".to_owned(),
            NormalForm::Word(w) => w
                .iter()
                .map(|&x| self.poset.label(x))
                .collect::<Vec<_>>()
                .join(" "),
        }
    }

    fn has_zero_pattern(&self, w: &[usize]) -> bool {
        (2..=3).any(|len| {
            w.windows(len)
                .any(|win| matches!(self.rules.get(win), Some(None)))
        })
    }

    /// Leftmost nonzero rewrite, shorter windows first at a given position.
    fn leftmost_rewrite(&self, w: &[usize]) -> Option<Word> {
        for start in 0..w.len() {
            for len in 2..=3 {
                let Some(window) = w.get(start..start + len) else {
                    continue;
                };
                if let Some(Some(rhs)) = self.rules.get(window) {
                    let mut out = w[..start].to_vec();
                    out.extend_from_slice(rhs);
                    out.extend_from_slice(&w[start + len..]);
                    return Some(out);
                }
            }
        }
        None
    }

    pub fn reduce_word(&self, w: &[usize]) -> Result<NormalForm, PresentedError> {
        if w.len() > self.max_word_len {
            return Err(PresentedError::WordLengthExceeded {
                len: w.len(),
                bound: self.max_word_len,
            });
        }
        let mut current = w.to_vec();
        loop {
            if self.has_zero_pattern(&current) {
                return Ok(NormalForm::Zero);
            }
            match self.leftmost_rewrite(&current) {
                Some(next) => current = next,
                None => return Ok(NormalForm::Word(current)),
            }
        }
    }

    /// Every result of one rule application anywhere in `w`.
    pub fn one_step_rewrites(&self, w: &[usize]) -> Vec<NormalForm> {
        let mut out = Vec::new();
        for start in 0..w.len() {
            for len in 2..=3 {
                let Some(window) = w.get(start..start + len) else {
                    continue;
                };
                match self.rules.get(window) {
                    Some(None) => out.push(NormalForm::Zero),
                    Some(Some(rhs)) => {
                        let mut next = w[..start].to_vec();
                        next.extend_from_slice(rhs);
                        next.extend_from_slice(&w[start + len..]);
                        out.push(NormalForm::Word(next));
                    }
                    None => {}
                }
            }
        }
        out
    }

    /// Every irreducible form reachable from `w` by any sequence of rewrites.
    pub fn all_normal_forms(&self, w: &[usize]) -> BTreeSet<NormalForm> {
        let mut seen: BTreeSet<Word> = BTreeSet::new();
        let mut terminal = BTreeSet::new();
        let mut stack = vec![w.to_vec()];
        while let Some(v) = stack.pop() {
            if !seen.insert(v.clone()) {
                continue;
            }
            let steps = self.one_step_rewrites(&v);
            if steps.is_empty() {
                terminal.insert(NormalForm::Word(v));
                continue;
            }
            for s in steps {
                match s {
                    NormalForm::Zero => {
                        terminal.insert(NormalForm::Zero);
                    }
                    NormalForm::Word(next) => stack.push(next),
                }
            }
        }
        terminal
    }

    /// For each degree `d = 1..=max_degree`, the number of distinct nonzero
    /// normal forms among all words of length `1..=d`.
    ///
    /// Every relation is monomial, so the span of reduced words has this count
    /// as its rank: two words are identified only when they share a normal form.
    pub fn dimension_up_to(&self, max_degree: usize) -> Result<Vec<usize>, PresentedError> {
        if max_degree > MAX_DEGREE {
            return Err(PresentedError::DegreeBoundExceeded {
                degree: max_degree,
                max: MAX_DEGREE,
            });
        }
        let n = self.poset.len();
        let mut forms: BTreeSet<Word> = BTreeSet::new();
        let mut counts = Vec::with_capacity(max_degree);
        let mut layer: Vec<Word> = vec![Vec::new()];
        for _ in 1..=max_degree {
            let mut next_layer = Vec::with_capacity(layer.len() * n);
            for w in &layer {
                for x in 0..n {
                    let mut v = w.clone();
                    v.push(x);
                    if let NormalForm::Word(nf) = self.reduce_word(&v)? {
                        forms.insert(nf);
                    }
                    next_layer.push(v);
                }
            }
            counts.push(forms.len());
            layer = next_layer;
        }
        Ok(counts)
    }
}

/// A word whose reachable normal forms depend on rewrite order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfluenceWitness {
    pub poset: Poset,
    pub convention: TripleConvention,
    pub word: Word,
    pub normal_forms: Vec<NormalForm>,
}

impl fmt::Display for ConfluenceWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sys = RewriteSystem::build(&self.poset, self.convention);
        let forms: Vec<String> = self.normal_forms.iter().map(|nf| sys.format(nf)).collect();
        write!(
            f,
            "{:?} on `{}`: word `{}` reaches {{{}}}",
            self.convention,
            self.poset.to_text().replace('\n', "; ").trim_end_matches("; "),
            sys.format(&NormalForm::Word(self.word.clone())),
            forms.join(", ")
        )
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConfluenceReport {
    pub words_checked: usize,
    pub witnesses: Vec<ConfluenceWitness>,
}

/// Tries every rewrite order on every word of length `1..=max_len` and records
/// words with more than one reachable normal form.
pub fn confluence_probe(
    posets: &[Poset],
    convention: TripleConvention,
    max_len: usize,
) -> ConfluenceReport {
    let mut report = ConfluenceReport::default();
    for poset in posets {
        let sys = RewriteSystem::build(poset, convention);
        let n = poset.len();
        let mut layer: Vec<Word> = vec![Vec::new()];
        for _ in 1..=max_len {
            let mut next_layer = Vec::with_capacity(layer.len() * n);
            for w in &layer {
                for x in 0..n {
                    let mut v = w.clone();
                    v.push(x);
                    report.words_checked += 1;
                    let forms = sys.all_normal_forms(&v);
                    if forms.len() > 1 {
                        report.witnesses.push(ConfluenceWitness {
                            poset: poset.clone(),
                            convention,
                            word: v.clone(),
                            normal_forms: forms.into_iter().collect(),
                        });
                    }
                    next_layer.push(v);
                }
            }
            layer = next_layer;
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::corpus::{antichain, chain};

    #[test]
    fn rules_of_two_chain() {
        let distinct = RewriteSystem::build(&chain(2), TripleConvention::DistinctOnly);
        assert_eq!(
            distinct.rule_strings(),
            vec!["aba -> 0", "ba -> 0", "bab -> 0"]
        );
        let repeats = RewriteSystem::build(&chain(2), TripleConvention::AllowRepeats);
        assert_eq!(
            repeats.rule_strings(),
            vec![
                "aaa -> aa",
                "aab -> ab",
                "aba -> 0",
                "abb -> ab",
                "ba -> 0",
                "bab -> 0",
                "bbb -> bb"
            ]
        );
        let anti = RewriteSystem::build(&antichain(2), TripleConvention::DistinctOnly);
        assert_eq!(anti.rule_strings(), vec!["aba -> 0", "bab -> 0"]);
    }

    #[test]
    fn reductions() {
        let sys = RewriteSystem::build(&chain(2), TripleConvention::AllowRepeats);
        let w = |s: &str| sys.parse_word(s).unwrap();
        assert_eq!(sys.reduce_word(&w("a a b")).unwrap(), NormalForm::Word(w("a b")));
        assert_eq!(sys.reduce_word(&w("b a")).unwrap(), NormalForm::Zero);
        assert_eq!(sys.reduce_word(&w("a a b b")).unwrap(), NormalForm::Word(w("a b")));
        // every rewrite order agrees on aabb
        let all = sys.all_normal_forms(&w("a a b b"));
        assert_eq!(all.into_iter().collect::<Vec<_>>(), vec![NormalForm::Word(w("a b"))]);
    }

    #[test]
    fn word_length_bound() {
        let sys = RewriteSystem::build(&chain(2), TripleConvention::AllowRepeats);
        assert_eq!(
            sys.reduce_word(&[0; 13]),
            Err(PresentedError::WordLengthExceeded { len: 13, bound: 12 })
        );
        assert!(sys.with_max_word_len(20).reduce_word(&[0; 13]).is_ok());
    }

    #[test]
    fn unknown_label() {
        let sys = RewriteSystem::build(&chain(2), TripleConvention::AllowRepeats);
        assert_eq!(
            sys.parse_word("a z"),
            Err(PresentedError::UnknownLabel("z".into()))
        );
    }

    #[test]
    fn dimensions() {
        let single = RewriteSystem::build(&antichain(1), TripleConvention::AllowRepeats);
        assert_eq!(single.dimension_up_to(5).unwrap(), vec![1, 2, 2, 2, 2]);
        let distinct = RewriteSystem::build(&chain(2), TripleConvention::DistinctOnly);
        assert_eq!(distinct.dimension_up_to(2).unwrap(), vec![2, 5]);
        for p in [chain(3), antichain(2)] {
            let sys = RewriteSystem::build(&p, TripleConvention::AllowRepeats);
            assert_eq!(sys.dimension_up_to(1).unwrap(), vec![p.len()]);
        }
        assert!(single.dimension_up_to(9).is_err());
    }

    #[test]
    fn zero_absorbs() {
        let sys = RewriteSystem::build(&chain(3), TripleConvention::AllowRepeats);
        let zero_word = sys.parse_word("b a").unwrap();
        for prefix in [vec![0], vec![2, 1], vec![]] {
            let mut w = prefix.clone();
            w.extend(&zero_word);
            assert!(sys.reduce_word(&w).unwrap().is_zero());
        }
    }
}
