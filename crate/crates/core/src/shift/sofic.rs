//! Sofic shifts as edge-labelled graphs.

use std::collections::VecDeque;

use num_bigint::BigUint;

use crate::alphabet::{Alphabet, Sym, Word};
use crate::error::{Error, Result};
use crate::shift::automaton::Dfa;
use crate::shift::sft::SftPresentation;
use crate::shift::spectral::{spectral_radius, EntropyValue};

/// Labelled edge `(source, label, target)`.
pub type LabeledEdge = (usize, Sym, usize);

#[derive(Clone, Debug)]
pub struct SoficPresentation {
    alphabet: Alphabet,
    states: usize,
    edges: Vec<LabeledEdge>,
    trimmed: bool,
}

impl SoficPresentation {
    /// Graph on `states` vertices. Not trimmed; see [`Self::trim`].
    pub fn new(alphabet: Alphabet, states: usize, edges: Vec<LabeledEdge>) -> Result<Self> {
        for &(s, a, t) in &edges {
            if s >= states || t >= states {
                return Err(Error::input(format!(
                    "edge ({s}, {a}, {t}) leaves the {states}-state graph"
                )));
            }
            if a >= alphabet.len() {
                return Err(Error::UnknownSymbol(format!("#{a}")));
            }
        }
        Ok(SoficPresentation {
            alphabet,
            states,
            edges,
            trimmed: false,
        })
    }

    /// Presentation with no states: the empty shift.
    pub fn empty(alphabet: Alphabet) -> Self {
        SoficPresentation {
            alphabet,
            states: 0,
            edges: Vec::new(),
            trimmed: true,
        }
    }

    /// Remove states that do not lie on a bi-infinite path and renumber the
    /// rest in their original order.
    pub fn trim(&self) -> Self {
        if self.trimmed {
            return self.clone();
        }
        let n = self.states;
        let mut indeg = vec![0usize; n];
        let mut outdeg = vec![0usize; n];
        let mut incident = vec![Vec::new(); n];
        for (i, &(s, _, t)) in self.edges.iter().enumerate() {
            outdeg[s] += 1;
            indeg[t] += 1;
            incident[s].push(i);
            if s != t {
                incident[t].push(i);
            }
        }
        let mut alive_edge = vec![true; self.edges.len()];
        let mut alive = vec![true; n];
        let mut queue: VecDeque<usize> = (0..n).filter(|&v| indeg[v] == 0 || outdeg[v] == 0).collect();
        while let Some(v) = queue.pop_front() {
            if !alive[v] {
                continue;
            }
            alive[v] = false;
            for &e in &incident[v] {
                if !alive_edge[e] {
                    continue;
                }
                alive_edge[e] = false;
                let (s, _, t) = self.edges[e];
                outdeg[s] -= 1;
                indeg[t] -= 1;
                for u in [s, t] {
                    if alive[u] && (indeg[u] == 0 || outdeg[u] == 0) {
                        queue.push_back(u);
                    }
                }
            }
        }
        let mut remap = vec![usize::MAX; n];
        let mut next = 0;
        for v in 0..n {
            if alive[v] {
                remap[v] = next;
                next += 1;
            }
        }
        let edges = self
            .edges
            .iter()
            .zip(&alive_edge)
            .filter(|(_, &a)| a)
            .map(|(&(s, a, t), _)| (remap[s], a, remap[t]))
            .collect();
        SoficPresentation {
            alphabet: self.alphabet.clone(),
            states: next,
            edges,
            trimmed: true,
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn states(&self) -> usize {
        self.states
    }

    pub fn edges(&self) -> &[LabeledEdge] {
        &self.edges
    }

    pub fn is_trimmed(&self) -> bool {
        self.trimmed
    }

    /// True when the shift has no points.
    pub fn is_empty(&self) -> bool {
        self.trim().edges.is_empty()
    }

    /// Same graph with every label passed through `f` into `target`.
    pub fn relabel(&self, target: &Alphabet, f: impl Fn(Sym) -> Sym) -> Result<Self> {
        let edges = self.edges.iter().map(|&(s, a, t)| (s, f(a), t)).collect();
        let mut out = Self::new(target.clone(), self.states, edges)?;
        out.trimmed = self.trimmed;
        Ok(out)
    }

    /// Same graph over a different alphabet with identical symbol indices.
    pub fn with_alphabet(&self, alphabet: Alphabet) -> Result<Self> {
        self.relabel(&alphabet, |a| a)
    }

    /// Membership of a finite word in the factor language.
    pub fn accepts(&self, word: &[Sym]) -> bool {
        let g = self.trim();
        if g.states == 0 {
            return false;
        }
        let mut current = vec![true; g.states];
        for &a in word {
            let mut next = vec![false; g.states];
            for &(s, b, t) in &g.edges {
                if b == a && current[s] {
                    next[t] = true;
                }
            }
            if !next.iter().any(|&x| x) {
                return false;
            }
            current = next;
        }
        true
    }

    /// Deterministic automaton of the factor language, minimized.
    pub fn minimal_dfa(&self) -> Result<Dfa> {
        Ok(Dfa::from_sofic(self)?.minimize())
    }

    pub fn count_words(&self, n: usize) -> Result<BigUint> {
        Ok(self.minimal_dfa()?.count_words(n))
    }

    /// Factor words of length `n` in lexicographic order.
    pub fn words(&self, n: usize) -> Result<Vec<Word>> {
        Ok(self.minimal_dfa()?.words(n))
    }

    /// Entropy, computed on the minimal deterministic presentation so that
    /// path counts equal word counts.
    pub fn entropy(&self, tol: f64) -> Result<EntropyValue> {
        let dfa = self.minimal_dfa()?;
        let edges = dfa.live_edges();
        Ok(EntropyValue::from_bracket(spectral_radius(dfa.len(), &edges, tol)))
    }

    /// Growth rate of bi-infinite paths. Equals the entropy when distinct
    /// paths carry distinct labels, as for de Bruijn graphs and their
    /// products; an upper bound otherwise.
    pub fn path_entropy(&self, tol: f64) -> EntropyValue {
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|&(s, _, t)| (s, t)).collect();
        EntropyValue::from_bracket(spectral_radius(self.states, &edges, tol))
    }

    /// Keep the listed coordinates of a product alphabet. A single kept
    /// coordinate yields its factor alphabet itself.
    pub fn project(&self, keep: &[usize]) -> Result<Self> {
        let parts = self.alphabet.parts();
        if parts.is_empty() || keep.iter().any(|&i| i >= parts.len()) {
            return Err(Error::input(format!(
                "cannot project a {}-factor alphabet onto coordinates {keep:?}",
                parts.len()
            )));
        }
        let target = if keep.len() == 1 {
            parts[keep[0]].clone()
        } else {
            Alphabet::product(&keep.iter().map(|&i| &parts[i]).collect::<Vec<_>>())
        };
        self.relabel(&target, |a| {
            let coords = self.alphabet.split(a);
            let kept: Vec<Sym> = keep.iter().map(|&i| coords[i]).collect();
            if keep.len() == 1 {
                kept[0]
            } else {
                target.join(&kept)
            }
        })
    }
}

/// Upper limit on product-graph states.
pub const MAX_PRODUCT_STATES: usize = 1 << 22;

/// Upper limit on edge pairs examined by a product.
pub const MAX_PRODUCT_EDGE_PAIRS: u128 = 1 << 28;

/// Synchronized product: states are pairs, and a pair of edges becomes an
/// edge labelled `combine(a, b)` unless that returns `None`. The result is
/// trimmed.
pub fn sofic_product(
    a: &SoficPresentation,
    b: &SoficPresentation,
    target: &Alphabet,
    combine: impl Fn(Sym, Sym) -> Option<Sym>,
) -> Result<SoficPresentation> {
    let (a, b) = (a.trim(), b.trim());
    let states = a.states * b.states;
    if states > MAX_PRODUCT_STATES {
        return Err(Error::guard("product states", states as u128, MAX_PRODUCT_STATES as u128));
    }
    let pairs = a.edges.len() as u128 * b.edges.len() as u128;
    if pairs > MAX_PRODUCT_EDGE_PAIRS {
        return Err(Error::guard("product edge pairs", pairs, MAX_PRODUCT_EDGE_PAIRS));
    }
    let mut edges = Vec::new();
    for &(s1, x, t1) in &a.edges {
        for &(s2, y, t2) in &b.edges {
            if let Some(label) = combine(x, y) {
                edges.push((s1 * b.states + s2, label, t1 * b.states + t2));
            }
        }
    }
    Ok(SoficPresentation::new(target.clone(), states, edges)?.trim())
}

/// Presentation of an SFT by its de Bruijn graph with last-symbol labels.
pub fn sofic_from_sft(sft: &SftPresentation) -> SoficPresentation {
    SoficPresentation {
        alphabet: sft.alphabet().clone(),
        states: sft.vertices().len(),
        edges: sft.edges().iter().map(|e| (e.src, e.label(), e.dst)).collect(),
        trimmed: true,
    }
}

impl From<&SftPresentation> for SoficPresentation {
    fn from(sft: &SftPresentation) -> Self {
        sofic_from_sft(sft)
    }
}

/// Disjoint union of two presentations over the same alphabet.
pub fn sofic_union(a: &SoficPresentation, b: &SoficPresentation) -> Result<SoficPresentation> {
    if a.alphabet() != b.alphabet() {
        return Err(Error::input("union of presentations over different alphabets"));
    }
    let offset = a.states();
    let edges = a
        .edges()
        .iter()
        .copied()
        .chain(b.edges().iter().map(|&(s, x, t)| (s + offset, x, t + offset)))
        .collect();
    let mut out = SoficPresentation::new(a.alphabet().clone(), a.states() + b.states(), edges)?;
    out.trimmed = a.is_trimmed() && b.is_trimmed();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shift::sft::build_sft_from_text;

    fn even_shift() -> SoficPresentation {
        // 0 loops at state 0; 1 toggles between states 0 and 1
        SoficPresentation::new(Alphabet::digits(2), 2, vec![(0, 0, 0), (0, 1, 1), (1, 1, 0)]).unwrap()
    }

    #[test]
    fn trim_drops_transient_states() {
        // state 2 only feeds into the cycle
        let g = SoficPresentation::new(Alphabet::digits(2), 3, vec![(0, 0, 0), (2, 1, 0)]).unwrap();
        let t = g.trim();
        assert_eq!(t.states(), 1);
        assert_eq!(t.edges(), &[(0, 0, 0)]);
    }

    #[test]
    fn even_shift_membership() {
        let e = even_shift();
        assert!(e.accepts(&[1, 1, 0, 1, 1]));
        assert!(e.accepts(&[1, 0, 1]));
        assert!(!e.accepts(&[0, 1, 0]));
    }

    #[test]
    fn golden_mean_entropy_from_sofic() {
        let g = build_sft_from_text(&Alphabet::digits(2), &["11"]).unwrap();
        let h = sofic_from_sft(&g).entropy(1e-10).unwrap().bits();
        assert!((h - ((1.0 + 5f64.sqrt()) / 2.0).log2()).abs() < 1e-9);
    }

    fn has_odd_gap(w: &[Sym]) -> bool {
        // a factor 0 1^(2j+1) 0
        let zeros: Vec<usize> = (0..w.len()).filter(|&i| w[i] == 0).collect();
        zeros.windows(2).any(|p| (p[1] - p[0] - 1) % 2 == 1)
    }

    #[test]
    fn even_shift_counts_match_brute_force() {
        let e = even_shift();
        let bin = Alphabet::digits(2);
        for n in 0..=9 {
            let expected = bin.all_words(n).filter(|w| !has_odd_gap(w)).count();
            assert_eq!(e.count_words(n).unwrap(), BigUint::from(expected), "n = {n}");
            let words = e.words(n).unwrap();
            assert_eq!(words.len(), expected);
            assert!(words.iter().all(|w| e.accepts(w)));
        }
    }
}
