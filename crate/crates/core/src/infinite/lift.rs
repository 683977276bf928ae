//! Between finite protocols for `R^n` and infinite protocols for `R^ℤ`.
//!
//! Lifting: a cover of `R^n` by rectangles `Z` gives a protocol whose
//! message shift `Z′` writes one rectangle name every `n` positions and `⊥`
//! in between, with each side checking that its `n`-block starting at a
//! name lies in that rectangle. Its entropy is `log2 |Z| / n`.
//!
//! Extraction: from a finite-type protocol whose language `L` has window
//! `r ≤ n`, a finite protocol for `R^n` sends a length-`n` word `z` of `Z`
//! together with the first and last `r` letters of both inputs. Alice
//! accepts when `(x, z)` is a factor of `S_X` and both boundary triples are
//! `r`-words of `L`; Bob likewise. A triple passing both checks glues to a
//! point of `L`, and every `(x, y) ∈ R^n` has such a `z`.

use std::collections::{BTreeMap, HashSet};

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::alphabet::{word_index, Alphabet, Word};
use crate::error::{Error, Result};
use crate::finite::cover::validate_cover;
use crate::finite::relation::{tensor_power, Rectangle, RelationMatrix, DESK_SCALE_CELLS};
use crate::infinite::protocol::{protocol_language, ProtocolTriple};
use crate::shift::{SftPresentation, Subshift};

/// Token of the blank message letter.
pub const BLANK: &str = "⊥";

/// Protocol for `R^ℤ` from a cover of `R^n`.
pub fn lift_protocol(r: &RelationMatrix, cover: &[Rectangle], n: usize) -> Result<ProtocolTriple> {
    if n == 0 {
        return Err(Error::input("block length must be at least 1"));
    }
    if cover.is_empty() {
        return Err(Error::input("cover has no rectangles"));
    }
    validate_cover(&tensor_power(r, n)?, cover)?;
    let k = cover.len();
    let mut tokens: Vec<String> = (0..k).map(|m| format!("z{m}")).collect();
    tokens.push(BLANK.to_string());
    let c = Alphabet::new(tokens)?;
    let blank = k;

    // Z′ blocks: exactly one name among n letters
    let mut z_blocks = Vec::with_capacity(n * k);
    for pos in 0..n {
        for m in 0..k {
            let mut w = vec![blank; n];
            w[pos] = m;
            z_blocks.push(w);
        }
    }
    let z = SftPresentation::from_blocks(c.clone(), n, z_blocks.clone())?;

    let a = Alphabet::new(r.x_labels().iter().cloned())?;
    let b = Alphabet::new(r.y_labels().iter().cloned())?;
    let side = |inputs: &Alphabet, members: &dyn Fn(&Rectangle) -> &Vec<usize>| -> Result<SftPresentation> {
        let pair = Alphabet::product(&[inputs, &c]);
        let all: Vec<Word> = inputs.all_words(n).collect();
        let mut blocks = Vec::new();
        for zw in &z_blocks {
            let allowed: Vec<&Word> = if zw[0] == blank {
                all.iter().collect()
            } else {
                let rows = members(&cover[zw[0]]);
                all.iter()
                    .filter(|w| rows.binary_search(&word_index(w, inputs.len())).is_ok())
                    .collect()
            };
            for w in allowed {
                blocks.push(w.iter().zip(zw).map(|(&x, &m)| pair.join(&[x, m])).collect());
            }
        }
        SftPresentation::from_blocks(pair, n, blocks)
    };
    let sx = side(&a, &|rect| &rect.rows)?;
    let sy = side(&b, &|rect| &rect.cols)?;
    ProtocolTriple::new(z.into(), sx.into(), sy.into())
}

/// A finite protocol for `R^n` read off an infinite one.
#[derive(Clone, Debug, Serialize)]
pub struct ExtractedProtocol {
    pub n: usize,
    /// Window of the protocol language.
    pub r: usize,
    /// Number of length-`n` words of `Z`.
    pub c_n: String,
    /// `log2 c_n + 4 log2 r`.
    pub bits: f64,
    /// Messages whose rectangle is nonempty.
    pub message_count: usize,
    /// `log2` of `message_count`.
    pub message_bits: f64,
    pub rectangles: Vec<Rectangle>,
    #[serde(skip)]
    pub accepted: RelationMatrix,
}

pub fn extract_protocol(p: &ProtocolTriple, n: usize) -> Result<ExtractedProtocol> {
    let l = protocol_language(p)?;
    let r = l.window;
    if n < r {
        return Err(Error::input(format!(
            "block length {n} is below the protocol window {r}"
        )));
    }
    let (a, b) = (p.a(), p.b());
    let cells = (a.len() as u128)
        .checked_pow(n as u32)
        .and_then(|x| (b.len() as u128).checked_pow(n as u32).map(|y| x.saturating_mul(y)))
        .unwrap_or(u128::MAX);
    if cells > DESK_SCALE_CELLS {
        return Err(Error::guard(format!("pairs of inputs of length {n}"), cells, DESK_SCALE_CELLS));
    }
    let (z, sx, sy) = match (p.z(), p.sx(), p.sy()) {
        (Subshift::Finite(z), Subshift::Finite(sx), Subshift::Finite(sy)) => (z, sx, sy),
        _ => unreachable!("protocol_language checked the components"),
    };

    let triples = l.language.alphabet().clone();
    let boundary: HashSet<(Word, Word, Word)> = l
        .language
        .words(r)?
        .into_iter()
        .map(|w| {
            let mut parts = (Vec::new(), Vec::new(), Vec::new());
            for s in w {
                let v = triples.split(s);
                parts.0.push(v[0]);
                parts.1.push(v[1]);
                parts.2.push(v[2]);
            }
            parts
        })
        .collect();

    let xs: Vec<Word> = a.all_words(n).collect();
    let ys: Vec<Word> = b.all_words(n).collect();
    let ends = |w: &Word| (w[..r].to_vec(), w[n - r..].to_vec());
    // Inputs compatible with z on one side, grouped by first and last r letters.
    let group = |inputs: &[Word], shift: &SftPresentation, zw: &Word| {
        let pair = shift.alphabet();
        let mut groups: BTreeMap<(Word, Word), Vec<usize>> = BTreeMap::new();
        for (i, w) in inputs.iter().enumerate() {
            let joined: Word = w.iter().zip(zw).map(|(&x, &m)| pair.join(&[x, m])).collect();
            if shift.accepts(&joined) {
                groups.entry(ends(w)).or_default().push(i);
            }
        }
        groups
    };

    let mut accepted = RelationMatrix::new(xs.len(), ys.len());
    let mut rectangles = Vec::new();
    let z_words = z.words(n)?;
    for zw in &z_words {
        let (z_first, z_last) = ends(zw);
        let rows = group(&xs, sx, zw);
        let cols = group(&ys, sy, zw);
        for ((xf, xl), row_ids) in &rows {
            for ((yf, yl), col_ids) in &cols {
                let ok = boundary.contains(&(xf.clone(), yf.clone(), z_first.clone()))
                    && boundary.contains(&(xl.clone(), yl.clone(), z_last.clone()));
                if !ok {
                    continue;
                }
                for &i in row_ids {
                    for &j in col_ids {
                        accepted.set(i, j)?;
                    }
                }
                rectangles.push(Rectangle::new(row_ids.clone(), col_ids.clone()));
            }
        }
    }

    let c_n = BigUint::from(z_words.len());
    let log_c_n = c_n.to_f64().unwrap_or(f64::INFINITY).log2();
    Ok(ExtractedProtocol {
        n,
        r,
        c_n: c_n.to_string(),
        bits: log_c_n + 4.0 * (r as f64).log2(),
        message_count: rectangles.len(),
        message_bits: (rectangles.len() as f64).log2(),
        rectangles,
        accepted,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::cover::{cover_number_exact, DEFAULT_BUDGET};
    use crate::infinite::protocol::{protocol_validate, relation_shift};

    fn lifted(r: &RelationMatrix, n: usize) -> ProtocolTriple {
        let cover = cover_number_exact(&tensor_power(r, n).unwrap(), DEFAULT_BUDGET).unwrap();
        lift_protocol(r, &cover.rectangles, n).unwrap()
    }

    #[test]
    fn lift_of_eq_one_at_n_one_is_full_marker_shift() {
        let p = lifted(&RelationMatrix::identity(2), 1);
        assert!((p.entropy(1e-12).unwrap().bits() - 1.0).abs() < 1e-12);
        let s = relation_shift(&RelationMatrix::identity(2)).unwrap().into();
        assert!(protocol_validate(&s, &p, 1e-9).unwrap().valid);
    }

    #[test]
    fn lift_entropy_is_log_cover_over_n() {
        // EQ_1^2 needs 4 rectangles
        let r = RelationMatrix::identity(2);
        let p = lifted(&r, 2);
        assert!((p.entropy(1e-10).unwrap().bits() - 1.0).abs() < 1e-8);
        let s = relation_shift(&r).unwrap().into();
        assert!(protocol_validate(&s, &p, 1e-9).unwrap().valid);
    }

    #[test]
    fn invalid_cover_rejected() {
        let r = RelationMatrix::identity(2);
        let bad = vec![Rectangle::new(vec![0, 1], vec![0, 1])];
        assert!(matches!(lift_protocol(&r, &bad, 1), Err(Error::Input(_))));
    }

    #[test]
    fn extraction_round_trip_small() {
        let r = RelationMatrix::neq_bits(1);
        let p = lifted(&r, 2);
        let e = extract_protocol(&p, 2).unwrap();
        assert_eq!(e.accepted.ones().collect::<Vec<_>>(), tensor_power(&r, 2).unwrap().ones().collect::<Vec<_>>());
        assert!(extract_protocol(&p, 1).is_err());
    }

    #[test]
    fn bit_formula() {
        let r = RelationMatrix::identity(2);
        let p = lifted(&r, 2);
        let e = extract_protocol(&p, 2).unwrap();
        let c_n: f64 = e.c_n.parse().unwrap();
        assert_eq!(e.bits, c_n.log2() + 4.0);
    }
}
