//! Shifts of finite type as trimmed de Bruijn graphs.
//!
//! An SFT with window `k` is presented by the graph whose vertices are its
//! allowed `(k-1)`-words and whose edges are its allowed `k`-words, each
//! edge joining its `(k-1)`-prefix to its `(k-1)`-suffix. After recursive
//! removal of vertices without predecessors or successors, bi-infinite
//! paths are in bijection with points of the shift, and finite paths with
//! its factors. An edge is labelled by the last symbol of its block.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::alphabet::{Alphabet, Sym, Word};
use crate::error::{Error, Result};
use crate::shift::spectral::{spectral_radius, Bracket, EntropyValue};

/// Upper limit on the number of blocks any single construction may
/// materialize.
pub const MAX_BLOCKS: usize = 4_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub src: usize,
    pub dst: usize,
    pub block: Word,
}

impl Edge {
    pub fn label(&self) -> Sym {
        *self.block.last().expect("blocks are nonempty")
    }
}

#[derive(Clone, Debug)]
pub struct SftPresentation {
    alphabet: Alphabet,
    window: usize,
    vertices: Vec<Word>,
    edges: Vec<Edge>,
    trimmed: bool,
}

/// Forbidden-word construction.
///
/// The window is the longest forbidden word (at least 1). Words must be
/// over `alphabet`; an empty forbidden word forbids everything.
pub fn build_sft(alphabet: &Alphabet, forbidden: &[Word]) -> Result<SftPresentation> {
    for word in forbidden {
        if let Some(&bad) = word.iter().find(|&&s| s >= alphabet.len()) {
            return Err(Error::UnknownSymbol(format!("#{bad}")));
        }
    }
    if forbidden.iter().any(|w| w.is_empty()) {
        return Ok(SftPresentation::empty(alphabet.clone(), 1));
    }
    let window = forbidden.iter().map(Vec::len).max().unwrap_or(0).max(1);
    let mut by_len: BTreeMap<usize, HashSet<&[Sym]>> = BTreeMap::new();
    for w in forbidden {
        by_len.entry(w.len()).or_default().insert(w.as_slice());
    }

    let mut blocks = Vec::new();
    let mut stack: Vec<Word> = vec![Vec::new()];
    while let Some(prefix) = stack.pop() {
        if prefix.len() == window {
            blocks.push(prefix);
            if blocks.len() > MAX_BLOCKS {
                return Err(Error::guard("allowed blocks", blocks.len() as u128, MAX_BLOCKS as u128));
            }
            continue;
        }
        for sym in (0..alphabet.len()).rev() {
            let mut next = prefix.clone();
            next.push(sym);
            let ends_forbidden = by_len.iter().any(|(&len, set)| {
                len <= next.len() && set.contains(&next[next.len() - len..])
            });
            if !ends_forbidden {
                stack.push(next);
            }
        }
    }
    SftPresentation::from_blocks(alphabet.clone(), window, blocks)
}

/// Same as [`build_sft`] with words written as text (see
/// [`Alphabet::parse_word`]).
pub fn build_sft_from_text<S: AsRef<str>>(alphabet: &Alphabet, forbidden: &[S]) -> Result<SftPresentation> {
    let words = forbidden
        .iter()
        .map(|w| alphabet.parse_word(w.as_ref()))
        .collect::<Result<Vec<_>>>()?;
    build_sft(alphabet, &words)
}

impl SftPresentation {
    /// Presentation whose allowed `window`-blocks are exactly `blocks`.
    pub fn from_blocks<I>(alphabet: Alphabet, window: usize, blocks: I) -> Result<Self>
    where
        I: IntoIterator<Item = Word>,
    {
        if window == 0 {
            return Err(Error::input("window must be at least 1"));
        }
        let mut set = BTreeSet::new();
        for block in blocks {
            if block.len() != window {
                return Err(Error::input(format!(
                    "block of length {} in a window-{window} presentation",
                    block.len()
                )));
            }
            if let Some(&bad) = block.iter().find(|&&s| s >= alphabet.len()) {
                return Err(Error::UnknownSymbol(format!("#{bad}")));
            }
            set.insert(block);
        }
        Ok(Self::trim(alphabet, window, set.into_iter().collect()))
    }

    pub fn full_shift(alphabet: &Alphabet) -> Self {
        Self::from_blocks(alphabet.clone(), 1, (0..alphabet.len()).map(|s| vec![s]))
            .expect("single-symbol blocks are valid")
    }

    pub fn empty(alphabet: Alphabet, window: usize) -> Self {
        SftPresentation {
            alphabet,
            window,
            vertices: Vec::new(),
            edges: Vec::new(),
            trimmed: true,
        }
    }

    fn trim(alphabet: Alphabet, window: usize, blocks: Vec<Word>) -> Self {
        let mut vertex_ids: BTreeMap<Word, usize> = BTreeMap::new();
        for b in &blocks {
            vertex_ids.entry(b[..window - 1].to_vec()).or_insert(0);
            vertex_ids.entry(b[1..].to_vec()).or_insert(0);
        }
        for (i, id) in vertex_ids.values_mut().enumerate() {
            *id = i;
        }
        let nv = vertex_ids.len();
        let ends: Vec<(usize, usize)> = blocks
            .iter()
            .map(|b| (vertex_ids[&b[..window - 1]], vertex_ids[&b[1..]]))
            .collect();

        let mut indeg = vec![0usize; nv];
        let mut outdeg = vec![0usize; nv];
        let mut out_edges = vec![Vec::new(); nv];
        let mut in_edges = vec![Vec::new(); nv];
        for (e, &(s, t)) in ends.iter().enumerate() {
            outdeg[s] += 1;
            indeg[t] += 1;
            out_edges[s].push(e);
            in_edges[t].push(e);
        }
        let mut alive_edge = vec![true; blocks.len()];
        let mut alive_vertex = vec![true; nv];
        let mut queue: VecDeque<usize> = (0..nv).filter(|&v| indeg[v] == 0 || outdeg[v] == 0).collect();
        while let Some(v) = queue.pop_front() {
            if !alive_vertex[v] {
                continue;
            }
            alive_vertex[v] = false;
            for &e in out_edges[v].iter().chain(&in_edges[v]) {
                if !alive_edge[e] {
                    continue;
                }
                alive_edge[e] = false;
                let (s, t) = ends[e];
                outdeg[s] -= 1;
                indeg[t] -= 1;
                for u in [s, t] {
                    if alive_vertex[u] && (indeg[u] == 0 || outdeg[u] == 0) {
                        queue.push_back(u);
                    }
                }
            }
        }

        let mut remap = vec![usize::MAX; nv];
        let mut vertices = Vec::new();
        for (word, &id) in &vertex_ids {
            if alive_vertex[id] {
                remap[id] = vertices.len();
                vertices.push(word.clone());
            }
        }
        let edges = blocks
            .into_iter()
            .zip(ends)
            .zip(alive_edge)
            .filter(|(_, alive)| *alive)
            .map(|((block, (s, t)), _)| Edge {
                src: remap[s],
                dst: remap[t],
                block,
            })
            .collect();
        SftPresentation {
            alphabet,
            window,
            vertices,
            edges,
            trimmed: true,
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn window(&self) -> usize {
        self.window
    }

    pub fn vertices(&self) -> &[Word] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn is_trimmed(&self) -> bool {
        self.trimmed
    }

    /// True when the shift has no points.
    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn adjacency(&self) -> Vec<(usize, usize)> {
        self.edges.iter().map(|e| (e.src, e.dst)).collect()
    }

    /// Allowed blocks at the presentation's own window, i.e. its edges.
    pub fn blocks(&self) -> impl Iterator<Item = &Word> {
        self.edges.iter().map(|e| &e.block)
    }

    /// All words of length `n` occurring in points of the shift, sorted.
    pub fn words(&self, n: usize) -> Result<Vec<Word>> {
        if self.is_empty() {
            return Ok(Vec::new());
        }
        if n < self.window {
            let set: BTreeSet<Word> = self.edges.iter().map(|e| e.block[..n].to_vec()).collect();
            return Ok(set.into_iter().collect());
        }
        let mut out_edges = vec![Vec::new(); self.vertices.len()];
        for (i, e) in self.edges.iter().enumerate() {
            out_edges[e.src].push(i);
        }
        // (word, current vertex)
        let mut layer: Vec<(Word, usize)> = self.edges.iter().map(|e| (e.block.clone(), e.dst)).collect();
        for _ in self.window..n {
            let mut next = Vec::new();
            for (word, v) in &layer {
                for &e in &out_edges[*v] {
                    let mut w = word.clone();
                    w.push(self.edges[e].label());
                    next.push((w, self.edges[e].dst));
                }
            }
            if next.len() > MAX_BLOCKS {
                return Err(Error::guard(format!("words of length {n}"), next.len() as u128, MAX_BLOCKS as u128));
            }
            layer = next;
        }
        let mut words: Vec<Word> = layer.into_iter().map(|(w, _)| w).collect();
        words.sort();
        words.dedup();
        Ok(words)
    }

    /// Same shift presented with a larger window.
    pub fn with_window(&self, window: usize) -> Result<Self> {
        if window < self.window {
            return Err(Error::input(format!(
                "cannot lower window from {} to {window}",
                self.window
            )));
        }
        if window == self.window {
            return Ok(self.clone());
        }
        Self::from_blocks(self.alphabet.clone(), window, self.words(window)?)
    }

    /// Membership of a finite word in the factor language.
    pub fn accepts(&self, word: &[Sym]) -> bool {
        if self.is_empty() {
            return false;
        }
        if word.is_empty() {
            return true;
        }
        if word.len() < self.window {
            return self.edges.iter().any(|e| e.block.starts_with(word));
        }
        let blocks: HashSet<&[Sym]> = self.edges.iter().map(|e| e.block.as_slice()).collect();
        word.windows(self.window).all(|w| blocks.contains(w))
    }

    /// Exact number of distinct words of length `n` in the language.
    pub fn count_words(&self, n: usize) -> BigUint {
        if self.is_empty() {
            return BigUint::zero();
        }
        if n == 0 {
            return BigUint::one();
        }
        let k1 = self.window - 1;
        if n < k1 {
            let set: BTreeSet<&[Sym]> = self.vertices.iter().map(|v| &v[..n]).collect();
            return BigUint::from(set.len());
        }
        // Paths with n - (k-1) edges, counted by endpoint.
        let mut counts = vec![BigUint::one(); self.vertices.len()];
        for _ in 0..(n - k1) {
            let mut next = vec![BigUint::zero(); self.vertices.len()];
            for e in &self.edges {
                next[e.dst] += &counts[e.src];
            }
            counts = next;
        }
        counts.into_iter().sum()
    }

    pub fn spectral_bracket(&self, tol: f64) -> Option<Bracket> {
        spectral_radius(self.vertices.len(), &self.adjacency(), tol)
    }

    /// Topological entropy in bits per symbol.
    pub fn entropy(&self, tol: f64) -> EntropyValue {
        EntropyValue::from_bracket(self.spectral_bracket(tol))
    }

    /// `EQ_T = {(t, t)}` as an SFT over `T × T`.
    pub fn diagonal(&self) -> Self {
        let pair = Alphabet::product(&[&self.alphabet, &self.alphabet]);
        let blocks = self
            .edges
            .iter()
            .map(|e| e.block.iter().map(|&s| pair.join(&[s, s])).collect());
        Self::from_blocks(pair.clone(), self.window, blocks).expect("diagonal blocks are valid")
    }
}

/// Cartesian product `A × B` over the paired alphabet; both factors are
/// re-presented at the larger window.
pub fn product_shift(a: &SftPresentation, b: &SftPresentation) -> Result<SftPresentation> {
    let window = a.window().max(b.window());
    let wa = a.words(window)?;
    let wb = b.words(window)?;
    let needed = wa.len() as u128 * wb.len() as u128;
    if needed > MAX_BLOCKS as u128 {
        return Err(Error::guard("product blocks", needed, MAX_BLOCKS as u128));
    }
    let alphabet = Alphabet::product(&[a.alphabet(), b.alphabet()]);
    let mut blocks = Vec::with_capacity(needed as usize);
    for u in &wa {
        for v in &wb {
            blocks.push(u.iter().zip(v).map(|(&x, &y)| alphabet.join(&[x, y])).collect());
        }
    }
    SftPresentation::from_blocks(alphabet, window, blocks)
}
