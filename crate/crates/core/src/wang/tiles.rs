//! Wang tiles and rectangular pattern enumeration.
//!
//! Patterns are indexed with row 0 at the top. A tile's `south` color must
//! equal the `north` color of the tile below it, and its `east` color the
//! `west` color of its right neighbor.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::alphabet::{Alphabet, Sym};
use crate::error::{Error, Result};

/// Upper limit on distinct tile rows or partial patterns held at once.
pub const MAX_PATTERN_STATES: usize = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WangTile {
    #[serde(rename = "n")]
    pub north: String,
    #[serde(rename = "s")]
    pub south: String,
    #[serde(rename = "e")]
    pub east: String,
    #[serde(rename = "w")]
    pub west: String,
    #[serde(rename = "sym")]
    pub symbol: String,
}

impl WangTile {
    pub fn new(north: &str, south: &str, east: &str, west: &str, symbol: &str) -> Self {
        WangTile {
            north: north.into(),
            south: south.into(),
            east: east.into(),
            west: west.into(),
            symbol: symbol.into(),
        }
    }
}

/// A tile with colors and symbol as alphabet indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Indexed {
    pub north: Sym,
    pub south: Sym,
    pub east: Sym,
    pub west: Sym,
    pub symbol: Sym,
}

#[derive(Clone, Debug)]
pub struct TileSet {
    tiles: Vec<WangTile>,
    colors: Alphabet,
    symbols: Alphabet,
    indexed: Vec<Indexed>,
}

/// Distinct strings in order of first appearance.
fn first_seen<'a>(items: impl Iterator<Item = &'a String>) -> Vec<String> {
    let mut seen = Vec::new();
    for s in items {
        if !seen.contains(s) {
            seen.push(s.clone());
        }
    }
    seen
}

impl TileSet {
    /// Colors and symbols are numbered in order of first appearance, colors
    /// read north, south, east, west within each tile.
    pub fn new(tiles: Vec<WangTile>) -> Result<Self> {
        if tiles.is_empty() {
            return Err(Error::input("tile set is empty"));
        }
        let colors = Alphabet::new(first_seen(
            tiles.iter().flat_map(|t| [&t.north, &t.south, &t.east, &t.west]),
        ))?;
        let symbols = Alphabet::new(first_seen(tiles.iter().map(|t| &t.symbol)))?;
        let indexed = tiles
            .iter()
            .map(|t| Indexed {
                north: colors.sym(&t.north).unwrap(),
                south: colors.sym(&t.south).unwrap(),
                east: colors.sym(&t.east).unwrap(),
                west: colors.sym(&t.west).unwrap(),
                symbol: symbols.sym(&t.symbol).unwrap(),
            })
            .collect();
        Ok(TileSet {
            tiles,
            colors,
            symbols,
            indexed,
        })
    }

    pub fn tiles(&self) -> &[WangTile] {
        &self.tiles
    }

    pub fn colors(&self) -> &Alphabet {
        &self.colors
    }

    pub fn symbols(&self) -> &Alphabet {
        &self.symbols
    }

    /// Colors occurring on north or south sides, in color order.
    pub fn horizontal_colors(&self) -> Alphabet {
        let used: Vec<&String> = self
            .colors
            .symbols()
            .iter()
            .enumerate()
            .filter(|&(c, _)| self.indexed.iter().any(|t| t.north == c || t.south == c))
            .map(|(_, s)| s)
            .collect();
        Alphabet::new(used.into_iter().cloned()).expect("some tile has a north side")
    }

    pub(crate) fn indexed(&self) -> &[Indexed] {
        &self.indexed
    }
}

/// The built-in five-tile set, in canonical order: all blue,
/// the tile carrying 1, the vertical line tile, the horizontal line tile,
/// all yellow.
pub fn paper_tileset() -> TileSet {
    TileSet::new(vec![
        WangTile::new("blue", "blue", "blue", "blue", "0"),
        WangTile::new("red", "blue", "red", "blue", "1"),
        WangTile::new("red", "red", "yellow", "blue", "0"),
        WangTile::new("yellow", "blue", "red", "red", "0"),
        WangTile::new("yellow", "yellow", "yellow", "yellow", "0"),
    ])
    .expect("nonempty")
}

/// A symbol matrix, rows top to bottom.
pub type Pattern = Vec<Vec<Sym>>;

/// One horizontal row of tiles, reduced to what the vertical DP needs.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct RowType {
    north: Vec<Sym>,
    south: Vec<Sym>,
    window: Vec<Sym>,
}

fn row_types(tiles: &[Indexed], width: usize, window: std::ops::Range<usize>) -> Result<Vec<RowType>> {
    // grow rows left to right, keyed by the east color of the last tile
    let mut partial: BTreeSet<(Sym, RowType)> = BTreeSet::new();
    for t in tiles {
        let window_syms = if window.contains(&0) { vec![t.symbol] } else { vec![] };
        partial.insert((
            t.east,
            RowType {
                north: vec![t.north],
                south: vec![t.south],
                window: window_syms,
            },
        ));
    }
    for col in 1..width {
        let mut next = BTreeSet::new();
        for (east, row) in &partial {
            for t in tiles.iter().filter(|t| t.west == *east) {
                let mut r = row.clone();
                r.north.push(t.north);
                r.south.push(t.south);
                if window.contains(&col) {
                    r.window.push(t.symbol);
                }
                next.insert((t.east, r));
            }
            if next.len() > MAX_PATTERN_STATES {
                return Err(Error::guard("tile rows", next.len() as u128, MAX_PATTERN_STATES as u128));
            }
        }
        partial = next;
    }
    let rows: BTreeSet<RowType> = partial.into_iter().map(|(_, r)| r).collect();
    Ok(rows.into_iter().collect())
}

/// Symbol patterns of size `w × h` seen in the center of locally valid
/// tilings of the `(w + 2e) × (h + 2e)` rectangle, sorted.
///
/// With `e = 0` these are the locally admissible patterns; a larger `e`
/// discards patterns that cannot be surrounded by `e` more tiles on every
/// side, approaching the true factors of the shift from above.
pub fn enumerate_patterns(tiles: &TileSet, w: usize, h: usize, e: usize) -> Result<Vec<Pattern>> {
    if w == 0 || h == 0 {
        return Err(Error::input("pattern width and height must be at least 1"));
    }
    let (width, height) = (w + 2 * e, h + 2 * e);
    let cells = width as u128 * height as u128 * tiles.indexed.len() as u128;
    if cells > MAX_PATTERN_STATES as u128 {
        return Err(Error::guard("tile placements", cells, MAX_PATTERN_STATES as u128));
    }
    let rows = row_types(&tiles.indexed, width, e..e + w)?;
    let mut by_north: HashMap<&[Sym], Vec<&RowType>> = HashMap::new();
    for r in &rows {
        by_north.entry(&r.north).or_default().push(r);
    }
    let in_window = |y: usize| y >= e && y < e + h;

    // south colors of the last row -> central patterns so far
    let mut states: HashMap<Vec<Sym>, BTreeSet<Pattern>> = HashMap::new();
    for r in &rows {
        let p = if in_window(0) { vec![r.window.clone()] } else { vec![] };
        states.entry(r.south.clone()).or_default().insert(p);
    }
    for y in 1..height {
        let mut next: HashMap<Vec<Sym>, BTreeSet<Pattern>> = HashMap::new();
        let mut held = 0usize;
        for (south, patterns) in &states {
            for r in by_north.get(south.as_slice()).into_iter().flatten() {
                let entry = next.entry(r.south.clone()).or_default();
                for p in patterns {
                    let mut q = p.clone();
                    if in_window(y) {
                        q.push(r.window.clone());
                    }
                    if entry.insert(q) {
                        held += 1;
                    }
                }
            }
            if held > MAX_PATTERN_STATES {
                return Err(Error::guard("partial patterns", held as u128, MAX_PATTERN_STATES as u128));
            }
        }
        states = next;
    }
    let all: BTreeSet<Pattern> = states.into_values().flatten().collect();
    Ok(all.into_iter().collect())
}

/// Render a pattern as rows of symbol tokens.
pub fn render_pattern(tiles: &TileSet, p: &Pattern) -> Vec<Vec<String>> {
    p.iter().map(|row| tiles.symbols.tokens(row)).collect()
}
