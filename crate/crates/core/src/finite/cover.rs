//! Covers of a relation by 1-rectangles.
//!
//! A nondeterministic protocol with message set `Z` is the same thing as a
//! cover of the relation's 1-entries by `|Z|` rectangles, so the minimal
//! cover size `C(R)` gives `N(R) = log2 C(R)`. Only inclusion-maximal
//! rectangles need to be considered.

use std::collections::BTreeSet;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::finite::relation::{Rectangle, RelationMatrix};

/// Upper limit on the number of maximal rectangles enumerated.
pub const MAX_RECTANGLES: usize = 1 << 20;

/// Default node budget for the exact search.
pub const DEFAULT_BUDGET: u64 = 5_000_000;

#[derive(Clone, Debug, Serialize)]
pub struct CoverResult {
    #[serde(rename = "cover")]
    pub cover_number: usize,
    #[serde(rename = "bits")]
    pub nd_cc_bits: f64,
    /// True when `cover_number` is proven minimal.
    pub exact: bool,
    /// Proven lower bound on the minimal cover size, when one is known.
    pub lower_bound: Option<usize>,
    pub rectangles: Vec<Rectangle>,
}

impl CoverResult {
    fn new(rectangles: Vec<Rectangle>, exact: bool, lower_bound: Option<usize>) -> Self {
        CoverResult {
            cover_number: rectangles.len(),
            nd_cc_bits: (rectangles.len() as f64).log2(),
            exact,
            lower_bound,
            rectangles,
        }
    }
}

/// Check that the rectangles are 1-monochromatic and cover every 1-entry.
pub fn validate_cover(r: &RelationMatrix, rectangles: &[Rectangle]) -> Result<()> {
    let mut covered: Vec<FixedBitSet> = vec![FixedBitSet::with_capacity(r.y_size()); r.x_size()];
    for rect in rectangles {
        if rect.rows.is_empty() || rect.cols.is_empty() {
            return Err(Error::input("cover contains an empty rectangle"));
        }
        if !rect.is_monochromatic(r) {
            return Err(Error::input(format!(
                "rectangle {:?} × {:?} contains a 0-entry",
                rect.rows, rect.cols
            )));
        }
        for &i in &rect.rows {
            for &j in &rect.cols {
                covered[i].insert(j);
            }
        }
    }
    if let Some((i, j)) = r.ones().find(|&(i, j)| !covered[i].contains(j)) {
        return Err(Error::input(format!(
            "1-entry ({}, {}) is not covered",
            r.x_labels()[i],
            r.y_labels()[j]
        )));
    }
    Ok(())
}

/// All inclusion-maximal 1-rectangles, sorted.
///
/// The column set of a maximal rectangle is an intersection of row
/// neighbourhoods, and its row set is every row containing those columns.
pub fn maximal_rectangles(r: &RelationMatrix) -> Result<Vec<Rectangle>> {
    r.require_nonempty()?;
    let mut closed: BTreeSet<FixedBitSet> = BTreeSet::new();
    for i in 0..r.x_size() {
        let row = r.row(i);
        if row.is_clear() {
            continue;
        }
        let mut fresh: Vec<FixedBitSet> = vec![row.clone()];
        for c in &closed {
            let mut meet = c.clone();
            meet.intersect_with(row);
            if !meet.is_clear() {
                fresh.push(meet);
            }
        }
        closed.extend(fresh);
        if closed.len() > MAX_RECTANGLES {
            return Err(Error::guard("maximal rectangles", closed.len() as u128, MAX_RECTANGLES as u128));
        }
    }
    let mut rects: Vec<Rectangle> = closed
        .into_iter()
        .map(|cols| {
            let rows = (0..r.x_size()).filter(|&i| cols.is_subset(r.row(i))).collect();
            Rectangle::new(rows, cols.ones().collect())
        })
        .collect();
    rects.sort();
    Ok(rects)
}

/// Rectangles and 1-entries as incidence bitsets.
struct Instance {
    rects: Vec<Rectangle>,
    /// cells covered by each rectangle
    covers: Vec<FixedBitSet>,
    /// rectangles containing each cell
    containing: Vec<Vec<usize>>,
    cells: usize,
}

impl Instance {
    fn new(r: &RelationMatrix) -> Result<Self> {
        let rects = maximal_rectangles(r)?;
        let cells: Vec<(usize, usize)> = r.ones().collect();
        let mut id = vec![vec![usize::MAX; r.y_size()]; r.x_size()];
        for (c, &(i, j)) in cells.iter().enumerate() {
            id[i][j] = c;
        }
        let mut covers = Vec::with_capacity(rects.len());
        let mut containing = vec![Vec::new(); cells.len()];
        for (k, rect) in rects.iter().enumerate() {
            let mut set = FixedBitSet::with_capacity(cells.len());
            for &i in &rect.rows {
                for &j in &rect.cols {
                    set.insert(id[i][j]);
                    containing[id[i][j]].push(k);
                }
            }
            covers.push(set);
        }
        Ok(Instance {
            rects,
            covers,
            containing,
            cells: cells.len(),
        })
    }

    /// Greedy set cover: repeatedly take the rectangle covering the most
    /// uncovered cells, lowest index on ties.
    fn greedy(&self) -> Vec<usize> {
        let mut uncovered = FixedBitSet::with_capacity(self.cells);
        uncovered.insert_range(..);
        let mut chosen = Vec::new();
        while !uncovered.is_clear() {
            let (best, _) = self
                .covers
                .iter()
                .enumerate()
                .map(|(k, c)| (k, c.intersection_count(&uncovered)))
                .fold((0, 0), |acc, x| if x.1 > acc.1 { x } else { acc });
            uncovered.difference_with(&self.covers[best]);
            chosen.push(best);
        }
        chosen
    }

    /// Lower bound on rectangles still needed: the larger of a greedy
    /// independent set of cells (no two in a common allowed rectangle) and
    /// a counting bound.
    fn lower_bound(&self, uncovered: &FixedBitSet, excluded: &FixedBitSet) -> usize {
        if uncovered.is_clear() {
            return 0;
        }
        let mut order: Vec<(usize, usize)> = uncovered
            .ones()
            .map(|c| {
                let avail = self.containing[c].iter().filter(|&&k| !excluded.contains(k)).count();
                (avail, c)
            })
            .collect();
        order.sort_unstable();
        if order[0].0 == 0 {
            return usize::MAX;
        }
        let mut blocked = FixedBitSet::with_capacity(self.cells);
        let mut independent = 0;
        for &(_, c) in &order {
            if blocked.contains(c) {
                continue;
            }
            independent += 1;
            for &k in &self.containing[c] {
                if !excluded.contains(k) {
                    blocked.union_with(&self.covers[k]);
                }
            }
        }
        let largest = (0..self.rects.len())
            .filter(|&k| !excluded.contains(k))
            .map(|k| self.covers[k].intersection_count(uncovered))
            .max()
            .unwrap_or(0);
        let counting = uncovered.count_ones(..).div_ceil(largest.max(1));
        independent.max(counting)
    }
}

struct Search<'a> {
    inst: &'a Instance,
    best: Vec<usize>,
    nodes: u64,
    budget: u64,
    exhausted: bool,
}

impl Search<'_> {
    fn run(&mut self, uncovered: FixedBitSet, excluded: FixedBitSet, chosen: &mut Vec<usize>) {
        if self.nodes >= self.budget {
            self.exhausted = true;
            return;
        }
        self.nodes += 1;
        if uncovered.is_clear() {
            if chosen.len() < self.best.len() {
                self.best = chosen.clone();
            }
            return;
        }
        let lb = self.inst.lower_bound(&uncovered, &excluded);
        if lb == usize::MAX || chosen.len() + lb >= self.best.len() {
            return;
        }
        // Branch on the uncovered cell with the fewest allowed rectangles;
        // cells are numbered in (row, col) order, which breaks ties.
        let (_, cell) = uncovered
            .ones()
            .map(|c| {
                let avail = self.inst.containing[c].iter().filter(|&&k| !excluded.contains(k)).count();
                (avail, c)
            })
            .min()
            .expect("nonempty");
        let mut options: Vec<(usize, usize)> = self.inst.containing[cell]
            .iter()
            .filter(|&&k| !excluded.contains(k))
            .map(|&k| (self.inst.covers[k].intersection_count(&uncovered), k))
            .collect();
        options.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));

        let mut excluded = excluded;
        for (_, k) in options {
            let mut rest = uncovered.clone();
            rest.difference_with(&self.inst.covers[k]);
            chosen.push(k);
            self.run(rest, excluded.clone(), chosen);
            chosen.pop();
            if self.exhausted {
                return;
            }
            // every cover using k through this cell has been explored
            excluded.insert(k);
        }
    }
}

/// Minimal cover by branch and bound over maximal rectangles. If the node
/// budget runs out, the best cover found is returned with `exact = false`.
pub fn cover_number_exact(r: &RelationMatrix, budget: u64) -> Result<CoverResult> {
    if budget == 0 {
        return Err(Error::input("node budget must be positive"));
    }
    let inst = Instance::new(r)?;
    let mut full = FixedBitSet::with_capacity(inst.cells);
    full.insert_range(..);
    let none = FixedBitSet::with_capacity(inst.rects.len());
    let root_bound = inst.lower_bound(&full, &none);

    let mut search = Search {
        inst: &inst,
        best: inst.greedy(),
        nodes: 0,
        budget,
        exhausted: false,
    };
    search.run(full, none, &mut Vec::new());
    let exact = !search.exhausted;
    let mut picked = search.best;
    picked.sort_unstable();
    let rects: Vec<Rectangle> = picked.into_iter().map(|k| inst.rects[k].clone()).collect();
    let lower = if exact { rects.len() } else { root_bound };
    let result = CoverResult::new(rects, exact, Some(lower));
    validate_cover(r, &result.rectangles)?;
    Ok(result)
}

/// Greedy cover over maximal rectangles.
pub fn cover_number_greedy(r: &RelationMatrix) -> Result<CoverResult> {
    let inst = Instance::new(r)?;
    let mut full = FixedBitSet::with_capacity(inst.cells);
    full.insert_range(..);
    let bound = inst.lower_bound(&full, &FixedBitSet::with_capacity(inst.rects.len()));
    let rects: Vec<Rectangle> = inst.greedy().into_iter().map(|k| inst.rects[k].clone()).collect();
    let result = CoverResult::new(rects, false, Some(bound));
    validate_cover(r, &result.rectangles)?;
    Ok(result)
}

/// The index protocol for inequality of `k`-bit strings: Alice names a
/// position `i` and her bit `a` there, Bob checks his bit differs. Bit 0
/// is the most significant.
pub fn neq_index_protocol(k: usize) -> Result<CoverResult> {
    if k == 0 {
        return Err(Error::input("k must be at least 1"));
    }
    let n = 1usize << k;
    let bit = |x: usize, i: usize| (x >> (k - 1 - i)) & 1;
    let mut rects = Vec::with_capacity(2 * k);
    for i in 0..k {
        for a in 0..2 {
            let rows = (0..n).filter(|&x| bit(x, i) == a).collect();
            let cols = (0..n).filter(|&y| bit(y, i) != a).collect();
            rects.push(Rectangle::new(rows, cols));
        }
    }
    validate_cover(&RelationMatrix::neq_bits(k), &rects)?;
    Ok(CoverResult::new(rects, false, None))
}

#[derive(Clone, Debug, Serialize)]
pub struct FoolingBound {
    pub size: usize,
    pub bits: f64,
}

/// Verify a finite fooling set: its pairs are 1-entries and for distinct
/// pairs `(x, y)`, `(x', y')` at least one of `(x, y')`, `(x', y)` is a
/// 0-entry. Then no rectangle contains two of them, so `C(R) ≥ |F|`.
pub fn fooling_check(r: &RelationMatrix, pairs: &[(usize, usize)]) -> Result<FoolingBound> {
    for &(x, y) in pairs {
        if x >= r.x_size() || y >= r.y_size() || !r.get(x, y) {
            return Err(Error::input(format!("pair ({x}, {y}) is not in the relation")));
        }
    }
    for (a, &(x, y)) in pairs.iter().enumerate() {
        for &(x2, y2) in &pairs[a + 1..] {
            if (x, y) == (x2, y2) || (r.get(x, y2) && r.get(x2, y)) {
                return Err(Error::Rejected(format!(
                    "pairs ({x}, {y}) and ({x2}, {y2}) fit in one rectangle: ({x}, {y2}) and ({x2}, {y}) are both in the relation"
                )));
            }
        }
    }
    Ok(FoolingBound {
        size: pairs.len(),
        bits: (pairs.len() as f64).log2(),
    })
}
