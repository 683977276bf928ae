//! Deterministic automata for factor languages, and exact equality of sofic
//! shifts.
//!
//! A trimmed labelled graph read as an automaton with every state initial
//! and final accepts exactly the factor language of its shift. Subset
//! construction from the full state set, Moore minimization and a BFS
//! renumbering give a canonical automaton, so two sofic shifts are equal
//! iff their canonical automata are identical.

use std::collections::{HashMap, VecDeque};

use fixedbitset::FixedBitSet;
use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::alphabet::{Alphabet, Sym, Word};
use crate::error::{Error, Result};
use crate::shift::sofic::{sofic_union, SoficPresentation};

/// Upper limit on subset-construction states.
pub const MAX_DFA_STATES: usize = 1 << 20;

/// Complete deterministic automaton over symbols `0..symbols`. State 0 of a
/// minimized automaton is its start state.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dfa {
    symbols: usize,
    start: usize,
    trans: Vec<usize>,
    accepting: Vec<bool>,
}

impl Dfa {
    /// Subset construction on the trimmed graph, starting from all states.
    /// The empty subset is the dead state.
    pub fn from_sofic(sofic: &SoficPresentation) -> Result<Self> {
        let g = sofic.trim();
        let k = g.alphabet().len();
        let n = g.states();
        let mut succ: Vec<Vec<(Sym, usize)>> = vec![Vec::new(); n];
        for &(s, a, t) in g.edges() {
            succ[s].push((a, t));
        }

        let mut start = FixedBitSet::with_capacity(n);
        start.insert_range(..);
        let mut ids: HashMap<FixedBitSet, usize> = HashMap::new();
        let mut subsets = vec![start.clone()];
        ids.insert(start, 0);
        let mut trans = Vec::new();
        let mut i = 0;
        while i < subsets.len() {
            let mut next: Vec<FixedBitSet> = vec![FixedBitSet::with_capacity(n); k];
            for s in subsets[i].ones() {
                for &(a, t) in &succ[s] {
                    next[a].insert(t);
                }
            }
            for set in next {
                let id = match ids.get(&set) {
                    Some(&id) => id,
                    None => {
                        let id = subsets.len();
                        if id >= MAX_DFA_STATES {
                            return Err(Error::guard(
                                "subset construction states",
                                id as u128 + 1,
                                MAX_DFA_STATES as u128,
                            ));
                        }
                        ids.insert(set.clone(), id);
                        subsets.push(set);
                        id
                    }
                };
                trans.push(id);
            }
            i += 1;
        }
        let accepting = subsets.iter().map(|s| !s.is_clear()).collect();
        Ok(Dfa {
            symbols: k,
            start: 0,
            trans,
            accepting,
        })
    }

    pub fn len(&self) -> usize {
        self.accepting.len()
    }

    pub fn is_empty(&self) -> bool {
        self.accepting.is_empty()
    }

    pub fn symbols(&self) -> usize {
        self.symbols
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn step(&self, state: usize, sym: Sym) -> usize {
        self.trans[state * self.symbols + sym]
    }

    pub fn is_accepting(&self, state: usize) -> bool {
        self.accepting[state]
    }

    pub fn accepts(&self, word: &[Sym]) -> bool {
        let end = word.iter().fold(self.start, |s, &a| self.step(s, a));
        self.accepting[end]
    }

    /// Moore partition refinement followed by canonical BFS numbering.
    /// Unreachable states are dropped.
    pub fn minimize(&self) -> Dfa {
        let n = self.len();
        let mut class: Vec<usize> = self.accepting.iter().map(|&a| a as usize).collect();
        let mut count = class.iter().copied().max().map_or(0, |m| m + 1);
        loop {
            let mut ids: HashMap<Vec<usize>, usize> = HashMap::new();
            let mut refined = vec![0; n];
            for s in 0..n {
                let mut sig = Vec::with_capacity(self.symbols + 1);
                sig.push(class[s]);
                sig.extend((0..self.symbols).map(|a| class[self.step(s, a)]));
                let fresh = ids.len();
                refined[s] = *ids.entry(sig).or_insert(fresh);
            }
            let refined_count = ids.len();
            class = refined;
            if refined_count == count {
                break;
            }
            count = refined_count;
        }

        // BFS over classes from the start class, symbols in order.
        let mut order = vec![usize::MAX; count];
        let mut queue = VecDeque::new();
        let mut representative = Vec::new();
        order[class[self.start]] = 0;
        representative.push(self.start);
        queue.push_back(self.start);
        while let Some(s) = queue.pop_front() {
            for a in 0..self.symbols {
                let t = self.step(s, a);
                if order[class[t]] == usize::MAX {
                    order[class[t]] = representative.len();
                    representative.push(t);
                    queue.push_back(t);
                }
            }
        }
        let mut trans = Vec::with_capacity(representative.len() * self.symbols);
        for &s in &representative {
            for a in 0..self.symbols {
                trans.push(order[class[self.step(s, a)]]);
            }
        }
        Dfa {
            symbols: self.symbols,
            start: 0,
            trans,
            accepting: representative.iter().map(|&s| self.accepting[s]).collect(),
        }
    }

    /// Transitions between accepting states. For a factor-language automaton
    /// the only rejecting state is the dead sink, so these edges present
    /// the shift deterministically.
    pub fn live_edges(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::new();
        for s in 0..self.len() {
            if !self.accepting[s] {
                continue;
            }
            for a in 0..self.symbols {
                let t = self.step(s, a);
                if self.accepting[t] {
                    edges.push((s, t));
                }
            }
        }
        edges
    }

    /// The transitions between accepting states as a labelled graph. It is
    /// right-resolving, so its path growth equals the language's.
    pub fn live_graph(&self, alphabet: &Alphabet) -> Result<SoficPresentation> {
        let mut index = vec![usize::MAX; self.len()];
        let mut states = 0;
        for (slot, &accepting) in index.iter_mut().zip(&self.accepting) {
            if accepting {
                *slot = states;
                states += 1;
            }
        }
        let mut edges = Vec::new();
        for s in 0..self.len() {
            if !self.accepting[s] {
                continue;
            }
            for a in 0..self.symbols {
                let t = self.step(s, a);
                if self.accepting[t] {
                    edges.push((index[s], a, index[t]));
                }
            }
        }
        Ok(SoficPresentation::new(alphabet.clone(), states, edges)?.trim())
    }

    /// Number of accepted words of length `n`. Exact when rejection is
    /// absorbing, as for factor languages.
    pub fn count_words(&self, n: usize) -> BigUint {
        if !self.accepting[self.start] {
            return BigUint::zero();
        }
        let mut counts = vec![BigUint::zero(); self.len()];
        counts[self.start] = BigUint::one();
        for _ in 0..n {
            let mut next = vec![BigUint::zero(); self.len()];
            for (s, c) in counts.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for a in 0..self.symbols {
                    let t = self.step(s, a);
                    if self.accepting[t] {
                        next[t] += c;
                    }
                }
            }
            counts = next;
        }
        counts.into_iter().sum()
    }

    /// Accepted words of length `n` in lexicographic order.
    pub fn words(&self, n: usize) -> Vec<Word> {
        let mut out = Vec::new();
        if !self.accepting[self.start] {
            return out;
        }
        let mut word = Vec::with_capacity(n);
        self.collect_words(self.start, n, &mut word, &mut out);
        out
    }

    fn collect_words(&self, state: usize, n: usize, word: &mut Word, out: &mut Vec<Word>) {
        if word.len() == n {
            out.push(word.clone());
            return;
        }
        for a in 0..self.symbols {
            let t = self.step(state, a);
            if self.accepting[t] {
                word.push(a);
                self.collect_words(t, n, word, out);
                word.pop();
            }
        }
    }
}

/// Shortest word accepted by exactly one of the automata, lexicographically
/// least among the shortest. `None` when the languages agree.
pub fn difference_witness(a: &Dfa, b: &Dfa) -> Option<Word> {
    assert_eq!(a.symbols, b.symbols, "automata over different alphabets");
    type Link = Option<((usize, usize), Sym)>;
    let mut parent: HashMap<(usize, usize), Link> = HashMap::new();
    let root = (a.start, b.start);
    parent.insert(root, None);
    let mut queue = VecDeque::from([root]);
    while let Some(pair) = queue.pop_front() {
        if a.accepting[pair.0] != b.accepting[pair.1] {
            let mut word = Vec::new();
            let mut cur = pair;
            while let Some(&Some((prev, sym))) = parent.get(&cur) {
                word.push(sym);
                cur = prev;
            }
            word.reverse();
            return Some(word);
        }
        for s in 0..a.symbols {
            let next = (a.step(pair.0, s), b.step(pair.1, s));
            if let std::collections::hash_map::Entry::Vacant(e) = parent.entry(next) {
                e.insert(Some((pair, s)));
                queue.push_back(next);
            }
        }
    }
    None
}

/// Outcome of comparing two sofic shifts.
#[derive(Clone, Debug)]
pub struct Comparison {
    pub equal: bool,
    /// Alphabet the witness is written over.
    pub alphabet: Alphabet,
    /// Shortest word in exactly one factor language.
    pub witness: Option<Word>,
}

/// Put two presentations over a common alphabet: the first one's tokens
/// followed by the second one's new tokens.
fn align(a: &SoficPresentation, b: &SoficPresentation) -> Result<(SoficPresentation, SoficPresentation)> {
    if a.alphabet() == b.alphabet() {
        return Ok((a.clone(), b.clone()));
    }
    let mut tokens: Vec<String> = a.alphabet().symbols().to_vec();
    for t in b.alphabet().symbols() {
        if a.alphabet().index_of(t).is_none() {
            tokens.push(t.clone());
        }
    }
    let union = Alphabet::new(tokens)?;
    let ra = a.relabel(&union, |s| s)?;
    let rb = b.relabel(&union, |s| union.index_of(b.alphabet().token(s)).expect("token present"))?;
    Ok((ra, rb))
}

/// Compare two sofic shifts and produce a witness when they differ.
pub fn sofic_compare(a: &SoficPresentation, b: &SoficPresentation) -> Result<Comparison> {
    let (a, b) = align(a, b)?;
    let da = a.minimal_dfa()?;
    let db = b.minimal_dfa()?;
    let equal = da == db;
    let witness = difference_witness(&da, &db);
    debug_assert_eq!(equal, witness.is_none());
    Ok(Comparison {
        equal,
        alphabet: a.alphabet().clone(),
        witness,
    })
}

/// True iff the two presentations have the same factor language.
pub fn sofic_equal(a: &SoficPresentation, b: &SoficPresentation) -> Result<bool> {
    let (a, b) = align(a, b)?;
    Ok(a.minimal_dfa()? == b.minimal_dfa()?)
}

/// True iff every factor of `small` is a factor of `big`.
pub fn sofic_contains(big: &SoficPresentation, small: &SoficPresentation) -> Result<bool> {
    let (big, small) = align(big, small)?;
    sofic_equal(&sofic_union(&big, &small)?, &big)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shift::sft::{build_sft_from_text, SftPresentation};
    use crate::shift::sofic::sofic_from_sft;

    fn bin() -> Alphabet {
        Alphabet::digits(2)
    }

    fn golden() -> SoficPresentation {
        sofic_from_sft(&build_sft_from_text(&bin(), &["11"]).unwrap())
    }

    #[test]
    fn golden_is_not_full() {
        let full = sofic_from_sft(&SftPresentation::full_shift(&bin()));
        let cmp = sofic_compare(&golden(), &full).unwrap();
        assert!(!cmp.equal);
        assert_eq!(cmp.witness, Some(vec![1, 1]));
    }

    #[test]
    fn two_even_shift_graphs_are_equal() {
        let a = SoficPresentation::new(bin(), 2, vec![(0, 0, 0), (0, 1, 1), (1, 1, 0)]).unwrap();
        // three-state variant: a 0-loop state plus a separate pair of 1-states
        let b = SoficPresentation::new(
            bin(),
            3,
            vec![(0, 0, 0), (0, 1, 1), (1, 1, 2), (2, 1, 1), (2, 0, 0)],
        )
        .unwrap();
        assert!(sofic_equal(&a, &b).unwrap());
        assert!(!sofic_equal(&a, &golden()).unwrap());
    }

    #[test]
    fn minimization_is_canonical() {
        let g = golden();
        let d = g.minimal_dfa().unwrap();
        assert_eq!(d.minimize(), d);
        // golden: start (all), after 1, dead
        assert_eq!(d.len(), 3);
    }

    #[test]
    fn empty_shift_dfa() {
        let e = SoficPresentation::empty(bin());
        let d = e.minimal_dfa().unwrap();
        assert_eq!(d.count_words(0), BigUint::zero());
        assert!(sofic_equal(&e, &sofic_from_sft(&build_sft_from_text(&bin(), &["0", "1"]).unwrap())).unwrap());
    }

    #[test]
    fn containment() {
        let full = sofic_from_sft(&SftPresentation::full_shift(&bin()));
        assert!(sofic_contains(&full, &golden()).unwrap());
        assert!(!sofic_contains(&golden(), &full).unwrap());
    }

    #[test]
    fn alignment_of_different_alphabets() {
        let ab = Alphabet::new(["a", "b"]).unwrap();
        let ba = Alphabet::new(["b", "a"]).unwrap();
        // only "a" loops, written over two orderings of the same tokens
        let x = SoficPresentation::new(ab, 1, vec![(0, 0, 0)]).unwrap();
        let y = SoficPresentation::new(ba, 1, vec![(0, 1, 0)]).unwrap();
        assert!(sofic_equal(&x, &y).unwrap());
    }
}
