//! Sliding block codes and their images.

use std::collections::{BTreeMap, HashMap};

use crate::alphabet::{Alphabet, Sym, Word};
use crate::error::{Error, Result};
use crate::shift::sofic::SoficPresentation;
use crate::shift::Subshift;

/// Upper limit on the number of windows a code may tabulate or a
/// higher-edge graph may contain.
pub const MAX_WINDOWS: usize = 1 << 22;

/// A local rule of radius `w` mapping `(2w+1)`-windows of the source
/// alphabet to target symbols. The table may be partial; applying a code to
/// a shift fails if an admissible window is missing.
#[derive(Clone, Debug)]
pub struct BlockCode {
    radius: usize,
    source: Alphabet,
    target: Alphabet,
    rule: HashMap<Word, Sym>,
}

impl BlockCode {
    pub fn from_table(
        source: Alphabet,
        target: Alphabet,
        radius: usize,
        table: impl IntoIterator<Item = (Word, Sym)>,
    ) -> Result<Self> {
        let mut rule = HashMap::new();
        for (window, image) in table {
            if window.len() != 2 * radius + 1 {
                return Err(Error::input(format!(
                    "window of length {} for a radius-{radius} code",
                    window.len()
                )));
            }
            if window.iter().any(|&s| s >= source.len()) || image >= target.len() {
                return Err(Error::input("block code table entry outside its alphabets"));
            }
            rule.insert(window, image);
        }
        Ok(BlockCode {
            radius,
            source,
            target,
            rule,
        })
    }

    /// Tabulate `f` on every `(2w+1)`-word over the source alphabet.
    pub fn from_fn(
        source: Alphabet,
        target: Alphabet,
        radius: usize,
        f: impl Fn(&[Sym]) -> Sym,
    ) -> Result<Self> {
        let width = 2 * radius + 1;
        let total = (source.len() as u128).checked_pow(width as u32).unwrap_or(u128::MAX);
        if total > MAX_WINDOWS as u128 {
            return Err(Error::guard("block code windows", total, MAX_WINDOWS as u128));
        }
        let table: Vec<(Word, Sym)> = source.all_words(width).map(|w| {
            let image = f(&w);
            (w, image)
        }).collect();
        Self::from_table(source, target, radius, table)
    }

    pub fn identity(alphabet: &Alphabet) -> Self {
        Self::from_fn(alphabet.clone(), alphabet.clone(), 0, |w| w[0]).expect("radius 0 fits")
    }

    /// Radius-0 code given by a symbol map.
    pub fn symbol_map(source: &Alphabet, target: &Alphabet, f: impl Fn(Sym) -> Sym) -> Result<Self> {
        Self::from_fn(source.clone(), target.clone(), 0, |w| f(w[0]))
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn source(&self) -> &Alphabet {
        &self.source
    }

    pub fn target(&self) -> &Alphabet {
        &self.target
    }

    /// Image of a single window.
    pub fn image(&self, window: &[Sym]) -> Result<Sym> {
        self.rule.get(window).copied().ok_or_else(|| {
            Error::input(format!(
                "block code undefined on window `{}`",
                self.source.render(window)
            ))
        })
    }

    /// Image of a finite word: one symbol per full window, so the result is
    /// `2w` symbols shorter.
    pub fn apply_word(&self, word: &[Sym]) -> Result<Word> {
        word.windows(2 * self.radius + 1).map(|w| self.image(w)).collect()
    }
}

/// Image of a shift under a block code, as a sofic presentation.
///
/// States are paths of `2w` edges in the source's labelled graph and edges
/// are paths of `2w+1` edges, labelled by the rule applied to the path's
/// label word. The result is trimmed.
pub fn apply_block_code(code: &BlockCode, shift: &Subshift) -> Result<SoficPresentation> {
    let g = shift.to_sofic().trim();
    if g.alphabet() != code.source() {
        return Err(Error::input("block code source alphabet does not match the shift"));
    }
    let n = g.states();
    let mut out_edges = vec![Vec::new(); n];
    for (i, &(s, _, _)) in g.edges().iter().enumerate() {
        out_edges[s].push(i);
    }

    // Paths of `len` edges as edge-index sequences, grown one edge at a time.
    let width = 2 * code.radius() + 1;
    let mut paths: Vec<Vec<usize>> = (0..g.edges().len()).map(|e| vec![e]).collect();
    for _ in 1..width {
        let mut next = Vec::new();
        for p in &paths {
            let last = g.edges()[*p.last().unwrap()].2;
            for &e in &out_edges[last] {
                let mut q = p.clone();
                q.push(e);
                next.push(q);
            }
        }
        if next.len() > MAX_WINDOWS {
            return Err(Error::guard("higher-edge paths", next.len() as u128, MAX_WINDOWS as u128));
        }
        paths = next;
    }

    // A state is a path of 2w edges, or a vertex of g when w = 0.
    let mut state_ids: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    let mut state_of = |key: Vec<usize>| {
        let fresh = state_ids.len();
        *state_ids.entry(key).or_insert(fresh)
    };
    let mut edges = Vec::with_capacity(paths.len());
    for p in &paths {
        let labels: Word = p.iter().map(|&e| g.edges()[e].1).collect();
        let image = code.image(&labels)?;
        let (src_key, dst_key) = if width == 1 {
            (vec![g.edges()[p[0]].0], vec![g.edges()[p[0]].2])
        } else {
            (p[..width - 1].to_vec(), p[1..].to_vec())
        };
        let s = state_of(src_key);
        let t = state_of(dst_key);
        edges.push((s, image, t));
    }
    let states = state_ids.len();
    Ok(SoficPresentation::new(code.target().clone(), states, edges)?.trim())
}
