//! Residual profiles of a factorial language.
//!
//! The profile of a word `u` at depth `m` is the set of words `w` with
//! `|w| ≤ m` and `uw` in the language. A language is regular iff it has
//! finitely many residual sets, so profile counts that keep growing with
//! `|u|` are evidence against soficness.
//!
//! Oracles expose membership as a deterministic scan: `step` returns the
//! state after reading one more letter, or `None` once the word has left
//! the language. Profiles are computed by hash-consing the extension tree
//! below each state, so words reaching the same state share the work.

use std::collections::{HashMap, HashSet};
use std::hash::Hash;
use std::io::Write;

use serde::Serialize;

use crate::alphabet::{Alphabet, Sym, Word};
use crate::error::Result;
use crate::finite::amortized::csv_error;
use crate::shift::{Dfa, SoficPresentation};

/// A factorial language given by a left-to-right scan.
pub trait LanguageOracle {
    type State: Clone + Eq + Hash;

    fn alphabet(&self) -> &Alphabet;
    fn start(&self) -> Self::State;
    fn step(&self, state: &Self::State, sym: Sym) -> Option<Self::State>;

    fn contains(&self, word: &[Sym]) -> bool {
        let mut q = self.start();
        for &a in word {
            match self.step(&q, a) {
                Some(next) => q = next,
                None => return false,
            }
        }
        true
    }
}

/// Membership by an arbitrary predicate. The state is the word read so
/// far, so nothing is shared between words.
pub struct FnOracle<F> {
    alphabet: Alphabet,
    predicate: F,
}

impl<F: Fn(&[Sym]) -> bool> FnOracle<F> {
    pub fn new(alphabet: Alphabet, predicate: F) -> Self {
        FnOracle { alphabet, predicate }
    }
}

impl<F: Fn(&[Sym]) -> bool> LanguageOracle for FnOracle<F> {
    type State = Word;

    fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    fn start(&self) -> Word {
        Vec::new()
    }

    fn step(&self, state: &Word, sym: Sym) -> Option<Word> {
        let mut w = state.clone();
        w.push(sym);
        (self.predicate)(&w).then_some(w)
    }
}

/// The factor language of a sofic shift, scanned by its minimal automaton.
pub struct SoficOracle {
    alphabet: Alphabet,
    dfa: Dfa,
}

impl SoficOracle {
    pub fn new(shift: &SoficPresentation) -> Result<Self> {
        Ok(SoficOracle {
            alphabet: shift.alphabet().clone(),
            dfa: shift.minimal_dfa()?,
        })
    }
}

impl LanguageOracle for SoficOracle {
    type State = usize;

    fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    fn start(&self) -> usize {
        self.dfa.start()
    }

    fn step(&self, &state: &usize, sym: Sym) -> Option<usize> {
        let next = self.dfa.step(state, sym);
        self.dfa.is_accepting(next).then_some(next)
    }
}

/// Scan state for words avoiding every `c a^j d b^j c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CounterexampleState {
    /// No `c` that could open a forbidden factor.
    Idle,
    /// After `c a^j`.
    AfterA(usize),
    /// After `c a^j d b^i` with `i ≤ j`.
    AfterB(usize, usize),
}

/// The shift over `{a, b, c, d}` forbidding `c a^j d b^j c` for all
/// `j ≥ 0`. It is not sofic.
///
/// Deciding whether two neighbouring blocks `c a^j d` and `b^k c` clash is
/// the finite `NEQ` problem on `j` and `k`, which is why the relations
/// `R_{n,m}` of this shift need only about `log log` bits.
pub struct CounterexampleOracle {
    alphabet: Alphabet,
}

impl CounterexampleOracle {
    pub const A: Sym = 0;
    pub const B: Sym = 1;
    pub const C: Sym = 2;
    pub const D: Sym = 3;
}

impl Default for CounterexampleOracle {
    fn default() -> Self {
        CounterexampleOracle {
            alphabet: Alphabet::new(["a", "b", "c", "d"]).expect("distinct"),
        }
    }
}

pub fn counterexample_oracle() -> CounterexampleOracle {
    CounterexampleOracle::default()
}

impl LanguageOracle for CounterexampleOracle {
    type State = CounterexampleState;

    fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    fn start(&self) -> CounterexampleState {
        CounterexampleState::Idle
    }

    fn step(&self, &state: &CounterexampleState, sym: Sym) -> Option<CounterexampleState> {
        use CounterexampleState::*;
        Some(match (state, sym) {
            (AfterB(j, i), Self::C) if i == j => return None,
            (_, Self::C) => AfterA(0),
            (AfterA(j), Self::A) => AfterA(j + 1),
            (AfterA(j), Self::D) => AfterB(j, 0),
            (AfterB(j, i), Self::B) if i < j => AfterB(j, i + 1),
            _ => Idle,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ResidualCount {
    pub length: usize,
    pub count: usize,
}

struct Profiles<'a, O: LanguageOracle> {
    oracle: &'a O,
    memo: HashMap<(O::State, usize), usize>,
    interned: HashMap<Vec<(Sym, usize)>, usize>,
}

impl<O: LanguageOracle> Profiles<'_, O> {
    /// Canonical id of the extension tree of depth `depth` below `q`.
    fn id(&mut self, q: &O::State, depth: usize) -> usize {
        if let Some(&id) = self.memo.get(&(q.clone(), depth)) {
            return id;
        }
        let mut children = Vec::new();
        if depth > 0 {
            for a in 0..self.oracle.alphabet().len() {
                if let Some(next) = self.oracle.step(q, a) {
                    children.push((a, self.id(&next, depth - 1)));
                }
            }
        }
        let fresh = self.interned.len();
        let id = *self.interned.entry(children).or_insert(fresh);
        self.memo.insert((q.clone(), depth), id);
        id
    }
}

/// Number of distinct depth-`m` profiles among the words of each length
/// `0..=k` in the language.
pub fn residual_profile_count<O: LanguageOracle>(oracle: &O, k: usize, m: usize) -> Vec<ResidualCount> {
    let mut profiles = Profiles {
        oracle,
        memo: HashMap::new(),
        interned: HashMap::new(),
    };
    let mut level: HashSet<O::State> = HashSet::from([oracle.start()]);
    let mut out = Vec::with_capacity(k + 1);
    for length in 0..=k {
        let distinct: HashSet<usize> = level.iter().map(|q| profiles.id(q, m)).collect();
        out.push(ResidualCount {
            length,
            count: distinct.len(),
        });
        if length < k {
            level = level
                .iter()
                .flat_map(|q| (0..oracle.alphabet().len()).filter_map(move |a| oracle.step(q, a)))
                .collect();
        }
    }
    out
}

/// CSV with header `length,count`.
pub fn write_residual_csv<W: Write>(counts: &[ResidualCount], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for c in counts {
        w.serialize(c).map_err(csv_error)?;
    }
    w.flush()?;
    Ok(())
}
