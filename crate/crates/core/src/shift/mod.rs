//! One-dimensional subshifts: SFTs, sofic shifts, entropy, block codes,
//! β-shifts and exact language equality.

pub mod automaton;
pub mod beta;
pub mod block_code;
pub mod sft;
pub mod sofic;
pub mod spectral;

use crate::alphabet::Alphabet;
use crate::error::Result;

pub use automaton::{sofic_compare, sofic_contains, sofic_equal, Comparison, Dfa};
pub use beta::{beta_root, beta_shift, is_admissible};
pub use block_code::{apply_block_code, BlockCode};
pub use sft::{build_sft, build_sft_from_text, product_shift, Edge, SftPresentation};
pub use sofic::{sofic_from_sft, sofic_product, sofic_union, SoficPresentation};
pub use spectral::{serialize_bits, spectral_radius, Bracket, EntropyValue};

/// Either kind of presentation.
#[derive(Clone, Debug)]
pub enum Subshift {
    Finite(SftPresentation),
    Sofic(SoficPresentation),
}

impl Subshift {
    pub fn alphabet(&self) -> &Alphabet {
        match self {
            Subshift::Finite(s) => s.alphabet(),
            Subshift::Sofic(s) => s.alphabet(),
        }
    }

    pub fn to_sofic(&self) -> SoficPresentation {
        match self {
            Subshift::Finite(s) => sofic_from_sft(s),
            Subshift::Sofic(s) => s.clone(),
        }
    }

    pub fn as_sft(&self) -> Option<&SftPresentation> {
        match self {
            Subshift::Finite(s) => Some(s),
            Subshift::Sofic(_) => None,
        }
    }

    pub fn is_empty(&self) -> bool {
        match self {
            Subshift::Finite(s) => s.is_empty(),
            Subshift::Sofic(s) => s.is_empty(),
        }
    }

    pub fn entropy(&self, tol: f64) -> Result<EntropyValue> {
        match self {
            Subshift::Finite(s) => Ok(s.entropy(tol)),
            Subshift::Sofic(s) => s.entropy(tol),
        }
    }

    /// A right-resolving presentation: the de Bruijn graph of an SFT, or
    /// the minimal automaton's live part for a sofic shift. Path counts
    /// then grow like word counts, and this survives synchronized
    /// products.
    pub fn resolving_graph(&self) -> Result<SoficPresentation> {
        match self {
            Subshift::Finite(s) => Ok(sofic_from_sft(s)),
            Subshift::Sofic(s) => s.minimal_dfa()?.live_graph(s.alphabet()),
        }
    }

    pub fn accepts(&self, word: &[usize]) -> bool {
        match self {
            Subshift::Finite(s) => s.accepts(word),
            Subshift::Sofic(s) => s.accepts(word),
        }
    }
}

/// Cartesian product over the paired alphabet.
pub fn subshift_product(a: &Subshift, b: &Subshift) -> Result<Subshift> {
    if let (Subshift::Finite(x), Subshift::Finite(y)) = (a, b) {
        return Ok(Subshift::Finite(product_shift(x, y)?));
    }
    let target = Alphabet::product(&[a.alphabet(), b.alphabet()]);
    let p = sofic_product(&a.to_sofic(), &b.to_sofic(), &target, |x, y| Some(target.join(&[x, y])))?;
    Ok(Subshift::Sofic(p))
}

/// The diagonal `{(t, t)}` over `T × T`.
pub fn diagonal(t: &Subshift) -> Result<Subshift> {
    match t {
        Subshift::Finite(s) => Ok(Subshift::Finite(s.diagonal())),
        Subshift::Sofic(s) => {
            let pair = Alphabet::product(&[s.alphabet(), s.alphabet()]);
            Ok(Subshift::Sofic(s.relabel(&pair, |a| pair.join(&[a, a]))?))
        }
    }
}

impl From<SftPresentation> for Subshift {
    fn from(s: SftPresentation) -> Self {
        Subshift::Finite(s)
    }
}

impl From<SoficPresentation> for Subshift {
    fn from(s: SoficPresentation) -> Self {
        Subshift::Sofic(s)
    }
}
