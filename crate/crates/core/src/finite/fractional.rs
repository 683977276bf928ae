//! Fractional rectangle cover number `C*(R)`.
//!
//! `C*(R) = min Σ w_r` over weights on maximal rectangles covering every
//! 1-entry at least once; its dual packs weights on 1-entries with at most
//! one unit per rectangle. Every reported value is certified: a feasible
//! packing scaled by its worst load is a lower bound, a feasible cover
//! scaled by its worst coverage is an upper bound.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::finite::cover::maximal_rectangles;
use crate::finite::relation::RelationMatrix;

/// Instances whose simplex tableau has at most this many entries are solved
/// by the simplex method; larger ones by multiplicative weights.
pub const SIMPLEX_LIMIT: usize = 4_000_000;

/// Iteration cap for multiplicative weights.
pub const MWU_ITERATIONS: u64 = 20_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LpMethod {
    Simplex,
    Mwu,
}

#[derive(Clone, Debug, Serialize)]
pub struct FractionalCover {
    /// Certified lower bound on `C*(R)`.
    pub value: f64,
    /// Certified upper bound on `C*(R)`.
    pub upper: f64,
    /// `log2(value)`.
    pub bits: f64,
    pub method: LpMethod,
}

impl FractionalCover {
    fn new(lower: f64, upper: f64, method: LpMethod) -> Self {
        FractionalCover {
            value: lower,
            upper,
            bits: lower.log2(),
            method,
        }
    }
}

/// Cell/rectangle incidence of the covering LP.
struct Lp {
    cells: usize,
    /// cells of each rectangle
    members: Vec<Vec<usize>>,
    /// rectangles of each cell
    containing: Vec<Vec<usize>>,
}

impl Lp {
    fn new(r: &RelationMatrix) -> Result<Self> {
        let rects = maximal_rectangles(r)?;
        let mut id = vec![vec![usize::MAX; r.y_size()]; r.x_size()];
        let mut cells = 0;
        for (i, j) in r.ones() {
            id[i][j] = cells;
            cells += 1;
        }
        let members: Vec<Vec<usize>> = rects
            .iter()
            .map(|rect| {
                let mut m: Vec<usize> = rect
                    .rows
                    .iter()
                    .flat_map(|&i| rect.cols.iter().map(move |&j| (i, j)))
                    .map(|(i, j)| id[i][j])
                    .collect();
                m.sort_unstable();
                m
            })
            .collect();
        let mut containing = vec![Vec::new(); cells];
        for (k, m) in members.iter().enumerate() {
            for &c in m {
                containing[c].push(k);
            }
        }
        Ok(Lp {
            cells,
            members,
            containing,
        })
    }

    /// Lower bound from a nonnegative packing.
    fn packing_bound(&self, y: &[f64]) -> f64 {
        let load = self
            .members
            .iter()
            .map(|m| m.iter().map(|&c| y[c]).sum::<f64>())
            .fold(0.0, f64::max);
        if load <= 0.0 {
            0.0
        } else {
            y.iter().sum::<f64>() / load
        }
    }

    /// Upper bound from nonnegative rectangle weights.
    fn cover_bound(&self, w: &[f64]) -> f64 {
        let coverage = self
            .containing
            .iter()
            .map(|ks| ks.iter().map(|&k| w[k]).sum::<f64>())
            .fold(f64::INFINITY, f64::min);
        if coverage <= 0.0 {
            f64::INFINITY
        } else {
            w.iter().sum::<f64>() / coverage
        }
    }
}

/// `C*(R)` to relative accuracy `eps`.
pub fn fractional_cover(r: &RelationMatrix, eps: f64) -> Result<FractionalCover> {
    if eps <= 0.0 {
        return Err(Error::input("eps must be positive"));
    }
    let lp = Lp::new(r)?;
    if lp.members.len() * (lp.cells + lp.members.len()) <= SIMPLEX_LIMIT {
        Ok(simplex(&lp))
    } else {
        Ok(mwu(&lp, eps, MWU_ITERATIONS))
    }
}

/// `C*(R)` by multiplicative weights regardless of size.
pub fn fractional_cover_mwu(r: &RelationMatrix, eps: f64, max_iterations: u64) -> Result<FractionalCover> {
    if eps <= 0.0 {
        return Err(Error::input("eps must be positive"));
    }
    Ok(mwu(&Lp::new(r)?, eps, max_iterations))
}

/// Dense tableau simplex on the packing LP `max Σ y_c` subject to
/// `Σ_{c ∈ r} y_c ≤ 1`. The origin is feasible, so no first phase is
/// needed; Bland's rule prevents cycling.
fn simplex(lp: &Lp) -> FractionalCover {
    let m = lp.members.len();
    let n = lp.cells;
    let width = n + m;
    let mut t = vec![vec![0.0f64; width + 1]; m];
    for (k, cells) in lp.members.iter().enumerate() {
        for &c in cells {
            t[k][c] = 1.0;
        }
        t[k][n + k] = 1.0;
        t[k][width] = 1.0;
    }
    let mut obj = vec![0.0f64; width + 1];
    obj[..n].fill(1.0);
    let mut basis: Vec<usize> = (n..width).collect();
    const TOL: f64 = 1e-11;

    while let Some(col) = (0..width).find(|&j| obj[j] > TOL) {
        let mut pivot: Option<(usize, f64)> = None;
        for i in 0..m {
            if t[i][col] > TOL {
                let ratio = t[i][width] / t[i][col];
                let better = match pivot {
                    None => true,
                    Some((p, best)) => ratio < best - TOL || (ratio <= best + TOL && basis[i] < basis[p]),
                };
                if better {
                    pivot = Some((i, ratio));
                }
            }
        }
        // bounded: every variable appears in some constraint
        let (row, _) = pivot.expect("packing LP is bounded");
        let p = t[row][col];
        for v in t[row].iter_mut() {
            *v /= p;
        }
        let pivot_row = t[row].clone();
        for (i, r) in t.iter_mut().enumerate() {
            if i != row && r[col].abs() > 0.0 {
                let f = r[col];
                for (v, &pv) in r.iter_mut().zip(&pivot_row) {
                    *v -= f * pv;
                }
            }
        }
        let f = obj[col];
        for (v, &pv) in obj.iter_mut().zip(&pivot_row) {
            *v -= f * pv;
        }
        basis[row] = col;
    }

    let mut y = vec![0.0; n];
    for (i, &b) in basis.iter().enumerate() {
        if b < n {
            y[b] = t[i][width].max(0.0);
        }
    }
    let w: Vec<f64> = (0..m).map(|k| (-obj[n + k]).max(0.0)).collect();
    FractionalCover::new(lp.packing_bound(&y), lp.cover_bound(&w), LpMethod::Simplex)
}

/// Garg–Könemann multiplicative weights on the packing LP. Rectangle
/// lengths grow by `1 + step` each time a cell in them is chosen; the
/// cheapest cell is chosen each round. Lengths divided by the cheapest
/// cell's cost cover every cell, and the chosen multiset of cells scaled
/// by its worst load is a packing. Stops once the two bounds are within
/// `1 + eps` or after `max_iterations` rounds.
fn mwu(lp: &Lp, eps: f64, max_iterations: u64) -> FractionalCover {
    let m = lp.members.len();
    let step = (eps / 4.0).min(0.1);
    let mut length = vec![1.0f64; m];
    let mut lower: f64 = 0.0;
    let mut upper = f64::INFINITY;
    let mut load = vec![0.0f64; m];
    let mut total = 0.0f64;

    for _ in 0..max_iterations {
        let (cell, alpha) = lp
            .containing
            .iter()
            .enumerate()
            .map(|(c, ks)| (c, ks.iter().map(|&k| length[k]).sum::<f64>()))
            .fold((0, f64::INFINITY), |acc, x| if x.1 < acc.1 { x } else { acc });
        let d: f64 = length.iter().sum();
        upper = upper.min(d / alpha);

        total += 1.0;
        let mut max_load: f64 = 0.0;
        for &k in &lp.containing[cell] {
            length[k] *= 1.0 + step;
            load[k] += 1.0;
        }
        for &l in &load {
            max_load = max_load.max(l);
        }
        lower = lower.max(total / max_load);

        let top = length.iter().copied().fold(0.0, f64::max);
        if top > 1e100 {
            for l in length.iter_mut() {
                *l /= top;
            }
        }
        if upper <= lower * (1.0 + eps) {
            break;
        }
    }
    FractionalCover::new(lower, upper, LpMethod::Mwu)
}
