//! Horizontal strips of a Wang shift as one-dimensional sofic shifts.
//!
//! An `n`-strip is read column by column: each letter is a column of `n`
//! symbols, top to bottom. A column of tiles is vertically consistent when
//! each tile's south color matches the north color of the tile below; the
//! strip graph has the west color vectors of such columns as states and
//! one edge per column to its east color vector.
//!
//! These are the locally admissible strips: the rows above and below are
//! not constrained.

use std::collections::HashMap;

use crate::alphabet::{Alphabet, Sym};
use crate::error::{Error, Result};
use crate::infinite::protocol::ProtocolTriple;
use crate::shift::{SftPresentation, SoficPresentation};
use crate::wang::tiles::{Indexed, TileSet};

/// Upper limit on vertically consistent columns.
pub const MAX_COLUMNS: usize = 1 << 20;

/// Alphabet of `n`-symbol columns: the symbol alphabet itself for `n = 1`,
/// the `n`-fold product otherwise.
pub fn column_alphabet(symbols: &Alphabet, n: usize) -> Result<Alphabet> {
    if n == 0 {
        return Err(Error::input("strip height must be at least 1"));
    }
    let size = (symbols.len() as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if size > MAX_COLUMNS as u128 {
        return Err(Error::guard("column symbols", size, MAX_COLUMNS as u128));
    }
    Ok(if n == 1 {
        symbols.clone()
    } else {
        Alphabet::product(&vec![symbols; n])
    })
}

fn column_symbol(alphabet: &Alphabet, syms: &[Sym]) -> Sym {
    if syms.len() == 1 {
        syms[0]
    } else {
        alphabet.join(syms)
    }
}

/// Vertically consistent columns of `n` tiles, top to bottom.
fn columns(tiles: &[Indexed], n: usize) -> Result<Vec<Vec<Indexed>>> {
    let mut cols: Vec<Vec<Indexed>> = tiles.iter().map(|&t| vec![t]).collect();
    for _ in 1..n {
        let mut next = Vec::new();
        for c in &cols {
            let below = c.last().unwrap().south;
            for &t in tiles.iter().filter(|t| t.north == below) {
                let mut d = c.clone();
                d.push(t);
                next.push(d);
            }
            if next.len() > MAX_COLUMNS {
                return Err(Error::guard("tile columns", next.len() as u128, MAX_COLUMNS as u128));
            }
        }
        cols = next;
    }
    Ok(cols)
}

/// Graph with color-vector states and one edge per column, labelled by
/// `label`, trimmed.
fn column_graph(
    tiles: &TileSet,
    n: usize,
    alphabet: &Alphabet,
    label: impl Fn(&[Indexed]) -> Sym,
) -> Result<SoficPresentation> {
    let mut ids: HashMap<Vec<Sym>, usize> = HashMap::new();
    let mut id = |v: Vec<Sym>| {
        let next = ids.len();
        *ids.entry(v).or_insert(next)
    };
    let mut edges = Vec::new();
    for c in columns(tiles.indexed(), n)? {
        let west = id(c.iter().map(|t| t.west).collect());
        let east = id(c.iter().map(|t| t.east).collect());
        edges.push((west, label(&c), east));
    }
    Ok(SoficPresentation::new(alphabet.clone(), ids.len(), edges)?.trim())
}

fn symbols_of(c: &[Indexed]) -> Vec<Sym> {
    c.iter().map(|t| t.symbol).collect()
}

#[derive(Clone, Debug)]
pub struct StripPresentation {
    pub n: usize,
    pub graph: SoficPresentation,
}

impl StripPresentation {
    pub fn alphabet(&self) -> &Alphabet {
        self.graph.alphabet()
    }
}

/// `L_n`: the bi-infinite `n`-row strips tileable row-locally.
pub fn strip_language(tiles: &TileSet, n: usize) -> Result<StripPresentation> {
    let alphabet = column_alphabet(tiles.symbols(), n)?;
    let graph = column_graph(tiles, n, &alphabet, |c| column_symbol(&alphabet, &symbols_of(c)))?;
    Ok(StripPresentation { n, graph })
}

/// `R_{n,m}`: pairs `(x, y)` of an `n`-strip and an `m`-strip such that `x`
/// placed directly above `y` forms an admissible `(n + m)`-strip. Letters
/// are pairs (x-column, y-column).
pub fn concat_relation(tiles: &TileSet, n: usize, m: usize) -> Result<SoficPresentation> {
    let (cn, cm) = (column_alphabet(tiles.symbols(), n)?, column_alphabet(tiles.symbols(), m)?);
    let pair = Alphabet::product(&[&cn, &cm]);
    column_graph(tiles, n + m, &pair, |c| {
        let syms = symbols_of(c);
        // rows 0..n form x, the rest form y
        let (x, y) = syms.split_at(n);
        pair.join(&[column_symbol(&cn, x), column_symbol(&cm, y)])
    })
}

/// The constant-size protocol for `R_{n,m}`: Alice tiles her strip and
/// sends the colors on its bottom border, Bob checks that his strip can be
/// tiled below that border. `Z` is the full shift on the colors that
/// occur on horizontal edges, whatever `n` and `m`.
pub fn border_protocol(tiles: &TileSet, n: usize, m: usize) -> Result<ProtocolTriple> {
    let (cn, cm) = (column_alphabet(tiles.symbols(), n)?, column_alphabet(tiles.symbols(), m)?);
    let border = tiles.horizontal_colors();
    let color = |c: Sym| border.sym(tiles.colors().token(c)).expect("horizontal color");
    let ax = Alphabet::product(&[&cn, &border]);
    let sx = column_graph(tiles, n, &ax, |c| {
        ax.join(&[column_symbol(&cn, &symbols_of(c)), color(c[c.len() - 1].south)])
    })?;
    let by = Alphabet::product(&[&cm, &border]);
    let sy = column_graph(tiles, m, &by, |c| {
        by.join(&[column_symbol(&cm, &symbols_of(c)), color(c[0].north)])
    })?;
    let z = SftPresentation::full_shift(&border);
    ProtocolTriple::new(z.into(), sx.into(), sy.into())
}
