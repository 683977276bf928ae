//! JSON file formats.
//!
//! A shift file names its alphabet either directly (`"alphabet"`) or as a
//! product (`"factors"`, whose symbols are written `(a,b)`), and gives one
//! of three bodies:
//!
//! ```json
//! {"alphabet": ["0", "1"], "forbidden": ["11"]}
//! {"alphabet": ["0", "1"], "window": 2, "blocks": ["00", "01", "10"]}
//! {"alphabet": ["0", "1"], "states": 2, "edges": [[0, "0", 0], [0, "1", 1], [1, "1", 0]]}
//! ```
//!
//! Words are strings, read one character per symbol when every token is a
//! single character and as whitespace-separated tokens otherwise, or
//! arrays of tokens.

use std::path::Path;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::alphabet::{Alphabet, Word};
use crate::error::{Error, Result};
use crate::finite::relation::RelationMatrix;
use crate::infinite::protocol::ProtocolTriple;
use crate::shift::{build_sft, SftPresentation, SoficPresentation, Subshift};
use crate::wang::tiles::{TileSet, WangTile};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum WordSpec {
    Text(String),
    Tokens(Vec<String>),
}

impl WordSpec {
    pub fn parse(&self, alphabet: &Alphabet) -> Result<Word> {
        match self {
            WordSpec::Text(t) => alphabet.parse_word(t),
            WordSpec::Tokens(t) => alphabet.word_from_tokens(t),
        }
    }

    fn of(alphabet: &Alphabet, word: &[usize]) -> Self {
        WordSpec::Tokens(alphabet.tokens(word))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ShiftSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alphabet: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factors: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub forbidden: Option<Vec<WordSpec>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub window: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub blocks: Option<Vec<WordSpec>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub states: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edges: Option<Vec<(usize, String, usize)>>,
}

impl ShiftSpec {
    pub fn alphabet(&self) -> Result<Alphabet> {
        match (&self.alphabet, &self.factors) {
            (Some(a), None) => Alphabet::new(a.iter().cloned()),
            (None, Some(f)) if !f.is_empty() => {
                let parts = f
                    .iter()
                    .map(|p| Alphabet::new(p.iter().cloned()))
                    .collect::<Result<Vec<_>>>()?;
                Ok(Alphabet::product(&parts.iter().collect::<Vec<_>>()))
            }
            _ => Err(Error::input("give exactly one of `alphabet` and `factors`")),
        }
    }

    pub fn build(&self) -> Result<Subshift> {
        let alphabet = self.alphabet()?;
        let words = |ws: &[WordSpec]| ws.iter().map(|w| w.parse(&alphabet)).collect::<Result<Vec<_>>>();
        match (&self.forbidden, &self.blocks, &self.edges) {
            (Some(f), None, None) if self.window.is_none() && self.states.is_none() => {
                Ok(build_sft(&alphabet, &words(f)?)?.into())
            }
            (None, Some(b), None) if self.states.is_none() => {
                let window = self.window.ok_or_else(|| Error::input("`blocks` needs `window`"))?;
                Ok(SftPresentation::from_blocks(alphabet.clone(), window, words(b)?)?.into())
            }
            (None, None, Some(e)) if self.window.is_none() => {
                let states = self.states.ok_or_else(|| Error::input("`edges` needs `states`"))?;
                let edges = e
                    .iter()
                    .map(|(s, label, t)| Ok((*s, alphabet.sym(label)?, *t)))
                    .collect::<Result<Vec<_>>>()?;
                Ok(SoficPresentation::new(alphabet.clone(), states, edges)?.trim().into())
            }
            _ => Err(Error::input(
                "give exactly one of `forbidden`, `window` with `blocks`, or `states` with `edges`",
            )),
        }
    }

    fn with_alphabet(alphabet: &Alphabet) -> Self {
        if alphabet.is_product() {
            ShiftSpec {
                factors: Some(alphabet.parts().iter().map(|p| p.symbols().to_vec()).collect()),
                ..Default::default()
            }
        } else {
            ShiftSpec {
                alphabet: Some(alphabet.symbols().to_vec()),
                ..Default::default()
            }
        }
    }

    /// Block form for SFTs, graph form for sofic shifts.
    pub fn from_subshift(s: &Subshift) -> Self {
        let alphabet = s.alphabet();
        let mut spec = Self::with_alphabet(alphabet);
        match s {
            Subshift::Finite(sft) => {
                spec.window = Some(sft.window());
                spec.blocks = Some(sft.blocks().map(|b| WordSpec::of(alphabet, b)).collect());
            }
            Subshift::Sofic(g) => {
                spec.states = Some(g.states());
                spec.edges = Some(
                    g.edges()
                        .iter()
                        .map(|&(s, a, t)| (s, alphabet.token(a).to_string(), t))
                        .collect(),
                );
            }
        }
        spec
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelationFile {
    pub x_labels: Vec<String>,
    pub y_labels: Vec<String>,
    pub ones: Vec<(usize, usize)>,
}

impl RelationFile {
    pub fn build(&self) -> Result<RelationMatrix> {
        let mut r = RelationMatrix::with_labels(self.x_labels.clone(), self.y_labels.clone());
        for &(i, j) in &self.ones {
            r.set(i, j)?;
        }
        Ok(r)
    }

    pub fn from_relation(r: &RelationMatrix) -> Self {
        RelationFile {
            x_labels: r.x_labels().to_vec(),
            y_labels: r.y_labels().to_vec(),
            ones: r.ones().collect(),
        }
    }
}

/// `sx` is over `A × C` and `sy` over `B × C`, where `C` is the alphabet
/// of `z`; both are usually written with `factors`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProtocolFile {
    pub z: ShiftSpec,
    pub sx: ShiftSpec,
    pub sy: ShiftSpec,
}

impl ProtocolFile {
    pub fn build(&self) -> Result<ProtocolTriple> {
        ProtocolTriple::new(self.z.build()?, self.sx.build()?, self.sy.build()?)
    }

    pub fn from_protocol(p: &ProtocolTriple) -> Self {
        ProtocolFile {
            z: ShiftSpec::from_subshift(p.z()),
            sx: ShiftSpec::from_subshift(p.sx()),
            sy: ShiftSpec::from_subshift(p.sy()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TileSetFile {
    pub tiles: Vec<WangTile>,
}

impl TileSetFile {
    pub fn build(&self) -> Result<TileSet> {
        TileSet::new(self.tiles.clone())
    }

    pub fn from_tileset(t: &TileSet) -> Self {
        TileSetFile {
            tiles: t.tiles().to_vec(),
        }
    }
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::input(format!("{}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(text: &str) -> ShiftSpec {
        serde_json::from_str(text).unwrap()
    }

    #[test]
    fn three_shift_bodies() {
        let golden = parse(r#"{"alphabet":["0","1"],"forbidden":["11"]}"#).build().unwrap();
        let blocks = parse(r#"{"alphabet":["0","1"],"window":2,"blocks":["00","01",["1","0"]]}"#)
            .build()
            .unwrap();
        let graph = parse(r#"{"alphabet":["0","1"],"states":2,"edges":[[0,"0",0],[0,"1",1],[1,"0",0]]}"#)
            .build()
            .unwrap();
        for s in [&blocks, &graph] {
            assert!(crate::shift::sofic_equal(&golden.to_sofic(), &s.to_sofic()).unwrap());
        }
    }

    #[test]
    fn product_alphabet() {
        let s = parse(r#"{"factors":[["0","1"],["a","b"]],"forbidden":["(0,a) (1,b)"]}"#)
            .build()
            .unwrap();
        assert_eq!(s.alphabet().symbols(), &["(0,a)", "(0,b)", "(1,a)", "(1,b)"]);
        assert_eq!(s.as_sft().unwrap().window(), 2);
    }

    #[test]
    fn malformed_specs() {
        for text in [
            r#"{"alphabet":["0"],"factors":[["0"]],"forbidden":[]}"#,
            r#"{"alphabet":["0","1"]}"#,
            r#"{"alphabet":["0","1"],"forbidden":["2"]}"#,
            r#"{"alphabet":["0","1"],"blocks":["0"]}"#,
        ] {
            assert!(parse(text).build().is_err(), "{text}");
        }
        assert!(serde_json::from_str::<ShiftSpec>(r#"{"alphabet":["0"],"bogus":1}"#).is_err());
    }

    #[test]
    fn round_trips() {
        let spec = parse(r#"{"alphabet":["0","1"],"forbidden":["11"]}"#);
        let s = spec.build().unwrap();
        let again = ShiftSpec::from_subshift(&s);
        let text = serde_json::to_string(&again).unwrap();
        assert_eq!(serde_json::from_str::<ShiftSpec>(&text).unwrap(), again);
        assert!(crate::shift::sofic_equal(&again.build().unwrap().to_sofic(), &s.to_sofic()).unwrap());

        let r = RelationMatrix::identity(3);
        let file = RelationFile::from_relation(&r);
        assert_eq!(file.build().unwrap().ones().collect::<Vec<_>>(), r.ones().collect::<Vec<_>>());
    }
}
