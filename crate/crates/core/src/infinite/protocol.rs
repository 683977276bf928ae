//! Infinite nondeterministic protocols `(Z, S_X, S_Y)` and their exact
//! validation.
//!
//! A triple is a protocol for `S ⊆ X × Y` when `(x, y) ∈ S` iff some
//! `z ∈ Z` has `(x, z) ∈ S_X` and `(y, z) ∈ S_Y`. The set `L` of such
//! triples `(x, y, z)` is a synchronized product of the three shifts, and
//! `S` must be its projection. Factor languages determine shift spaces, so
//! comparing the projection's language with `S`'s decides validity.

use std::collections::HashMap;

use serde::Serialize;

use crate::alphabet::{Alphabet, Sym, Word};
use crate::error::{Error, Result};
use crate::finite::relation::RelationMatrix;
use crate::shift::{
    diagonal, serialize_bits, sofic_compare, sofic_product, subshift_product, EntropyValue,
    SftPresentation, SoficPresentation, Subshift,
};

#[derive(Clone, Debug)]
pub struct ProtocolTriple {
    a: Alphabet,
    b: Alphabet,
    c: Alphabet,
    z: Subshift,
    sx: Subshift,
    sy: Subshift,
}

impl ProtocolTriple {
    /// `sx` must be over `A × C` and `sy` over `B × C`, where `C` is the
    /// alphabet of `z`.
    pub fn new(z: Subshift, sx: Subshift, sy: Subshift) -> Result<Self> {
        let c = z.alphabet().clone();
        let x_parts = sx.alphabet().expect_parts(2)?;
        let y_parts = sy.alphabet().expect_parts(2)?;
        if x_parts[1] != c || y_parts[1] != c {
            return Err(Error::input("message alphabets of Z, S_X and S_Y differ"));
        }
        Ok(ProtocolTriple {
            a: x_parts[0].clone(),
            b: y_parts[0].clone(),
            c,
            z,
            sx,
            sy,
        })
    }

    pub fn a(&self) -> &Alphabet {
        &self.a
    }

    pub fn b(&self) -> &Alphabet {
        &self.b
    }

    pub fn c(&self) -> &Alphabet {
        &self.c
    }

    pub fn z(&self) -> &Subshift {
        &self.z
    }

    pub fn sx(&self) -> &Subshift {
        &self.sx
    }

    pub fn sy(&self) -> &Subshift {
        &self.sy
    }

    /// `A × B × C`, the alphabet of the protocol language.
    pub fn triple_alphabet(&self) -> Alphabet {
        Alphabet::product(&[&self.a, &self.b, &self.c])
    }

    /// `A × B`, the alphabet of the relation the protocol computes.
    pub fn pair_alphabet(&self) -> Alphabet {
        Alphabet::product(&[&self.a, &self.b])
    }

    pub fn entropy(&self, tol: f64) -> Result<EntropyValue> {
        self.z.entropy(tol)
    }

    /// The triples `(x, y, z)` as a sofic shift over `A × B × C`.
    pub fn language_graph(&self) -> Result<SoficPresentation> {
        let ac = self.sx.alphabet().clone();
        let zx = sofic_product(&self.z.to_sofic(), &self.sx.to_sofic(), &ac, |c, xc| {
            (ac.split(xc)[1] == c).then_some(xc)
        })?;
        let target = self.triple_alphabet();
        let bc = self.sy.alphabet().clone();
        sofic_product(&zx, &self.sy.to_sofic(), &target, |xc, yc| {
            let (x, y) = (ac.split(xc), bc.split(yc));
            (x[1] == y[1]).then(|| target.join(&[x[0], y[0], x[1]]))
        })
    }
}

/// `L = {(x, y, z)}` as an SFT, for protocols whose components are SFTs.
#[derive(Clone, Debug)]
pub struct ProtocolLanguage {
    pub language: SftPresentation,
    /// Largest window among `Z`, `S_X`, `S_Y`.
    pub window: usize,
}

pub fn protocol_language(p: &ProtocolTriple) -> Result<ProtocolLanguage> {
    let (z, sx, sy) = match (p.z.as_sft(), p.sx.as_sft(), p.sy.as_sft()) {
        (Some(z), Some(sx), Some(sy)) => (z, sx, sy),
        _ => return Err(Error::input("protocol components must be shifts of finite type")),
    };
    let r = z.window().max(sx.window()).max(sy.window());
    let ac = sx.alphabet();
    let bc = sy.alphabet();
    // index S_X and S_Y blocks by their message coordinate
    let by_message = |words: Vec<Word>, alphabet: &Alphabet| {
        let mut map: HashMap<Word, Vec<Word>> = HashMap::new();
        for w in words {
            let (inputs, messages): (Word, Word) = w.iter().map(|&s| {
                let v = alphabet.split(s);
                (v[0], v[1])
            }).unzip();
            map.entry(messages).or_default().push(inputs);
        }
        map
    };
    let xs = by_message(sx.words(r)?, ac);
    let ys = by_message(sy.words(r)?, bc);
    let target = p.triple_alphabet();
    let mut blocks = Vec::new();
    for c in z.words(r)? {
        let (Some(xw), Some(yw)) = (xs.get(&c), ys.get(&c)) else {
            continue;
        };
        for x in xw {
            for y in yw {
                blocks.push((0..r).map(|i| target.join(&[x[i], y[i], c[i]])).collect());
            }
        }
    }
    Ok(ProtocolLanguage {
        language: SftPresentation::from_blocks(target, r, blocks)?,
        window: r,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ValidationReport {
    pub valid: bool,
    /// Shortest word over `A × B` in exactly one of the two languages.
    pub witness: Option<Vec<String>>,
    #[serde(rename = "entropy_Z", serialize_with = "serialize_bits")]
    pub entropy_z: EntropyValue,
}

/// Decide whether `p` is a protocol for `s`, a shift over `A × B`.
pub fn protocol_validate(s: &Subshift, p: &ProtocolTriple, tol: f64) -> Result<ValidationReport> {
    let pair = p.pair_alphabet();
    let mut expected: Vec<&String> = pair.symbols().iter().collect();
    let mut found: Vec<&String> = s.alphabet().symbols().iter().collect();
    expected.sort();
    found.sort();
    if expected != found {
        return Err(Error::input(format!(
            "relation alphabet {:?} is not the protocol's input alphabet {:?}",
            s.alphabet(),
            pair
        )));
    }
    let projection = p.language_graph()?.project(&[0, 1])?;
    let cmp = sofic_compare(&projection, &s.to_sofic())?;
    Ok(ValidationReport {
        valid: cmp.equal,
        witness: cmp.witness.map(|w| cmp.alphabet.tokens(&w)),
        entropy_z: p.entropy(tol)?,
    })
}

/// Alice sends her whole input: `Z = T` and `S_X = S_Y = {(t, t)}`.
pub fn eq_protocol(t: &Subshift) -> Result<ProtocolTriple> {
    if t.is_empty() {
        return Err(Error::input("EQ protocol of an empty shift"));
    }
    let d = diagonal(t)?;
    ProtocolTriple::new(t.clone(), d.clone(), d)
}

/// `EQ_T = {(t, t)}` over `T × T`.
pub fn eq_shift(t: &Subshift) -> Result<Subshift> {
    diagonal(t)
}

/// The zero-entropy protocol for `X × Y`: a single fixed message.
pub fn trivial_protocol(x: &Subshift, y: &Subshift) -> Result<ProtocolTriple> {
    let c = Alphabet::new(["*"])?;
    let z = Subshift::Finite(SftPresentation::full_shift(&c));
    ProtocolTriple::new(z.clone(), subshift_product(x, &z)?, subshift_product(y, &z)?)
}

/// `R^ℤ`: pairs of sequences related at every coordinate, a window-1 SFT
/// over `X × Y` named by the relation's labels.
pub fn relation_shift(r: &RelationMatrix) -> Result<SftPresentation> {
    let a = Alphabet::new(r.x_labels().iter().cloned())?;
    let b = Alphabet::new(r.y_labels().iter().cloned())?;
    let pair = Alphabet::product(&[&a, &b]);
    let blocks: Vec<Word> = r.ones().map(|(i, j)| vec![pair.join(&[i, j])]).collect();
    SftPresentation::from_blocks(pair, 1, blocks)
}

/// Split a word over `A × B` into its two coordinates.
pub(crate) fn unzip_pairs(alphabet: &Alphabet, word: &[Sym]) -> (Word, Word) {
    word.iter()
        .map(|&s| {
            let v = alphabet.split(s);
            (v[0], v[1])
        })
        .unzip()
}
