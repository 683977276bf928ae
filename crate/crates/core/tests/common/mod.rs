//! Independent oracles shared by the integration tests. None of them use
//! the library's graph, automaton or search code.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use infcc::finite::RelationMatrix;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Word = Vec<usize>;

pub fn all_words(k: usize, n: usize) -> Vec<Word> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..k).map(move |a| {
                    let mut v = w.clone();
                    v.push(a);
                    v
                })
            })
            .collect();
    }
    out
}

pub fn contains_factor(w: &[usize], f: &[usize]) -> bool {
    f.len() <= w.len() && w.windows(f.len()).any(|x| x == f)
}

fn avoids(w: &[usize], forbidden: &[Word]) -> bool {
    forbidden.iter().all(|f| !f.is_empty() && !contains_factor(w, f))
}

/// Words of length `n` avoiding `forbidden` that extend far enough in both
/// directions to extend forever.
pub struct SftOracle {
    pub k: usize,
    pub forbidden: Vec<Word>,
    memo: HashMap<(Word, usize, bool), bool>,
}

impl SftOracle {
    pub fn new(k: usize, forbidden: Vec<Word>) -> Self {
        SftOracle {
            k,
            forbidden,
            memo: HashMap::new(),
        }
    }

    fn window(&self) -> usize {
        self.forbidden.iter().map(Vec::len).max().unwrap_or(1).max(1)
    }

    /// Can `w` be extended by `steps` letters on one side?
    fn extends(&mut self, w: &[usize], steps: usize, right: bool) -> bool {
        if steps == 0 {
            return true;
        }
        let keep = self.window().saturating_sub(1);
        let ctx: Word = if right {
            w[w.len().saturating_sub(keep)..].to_vec()
        } else {
            w[..keep.min(w.len())].to_vec()
        };
        if let Some(&v) = self.memo.get(&(ctx.clone(), steps, right)) {
            return v;
        }
        let mut ok = false;
        for a in 0..self.k {
            let next: Word = if right {
                ctx.iter().copied().chain([a]).collect()
            } else {
                [a].into_iter().chain(ctx.iter().copied()).collect()
            };
            if avoids(&next, &self.forbidden) && self.extends(&next, steps - 1, right) {
                ok = true;
                break;
            }
        }
        self.memo.insert((ctx, steps, right), ok);
        ok
    }

    pub fn contains(&mut self, w: &[usize]) -> bool {
        if !avoids(w, &self.forbidden) {
            return false;
        }
        // a path longer than the number of contexts revisits one
        let steps = self.k.pow(self.window() as u32 - 1) + 2;
        // pad to the window so that no forbidden word meets both extensions
        let pad = (self.window() - 1).saturating_sub(w.len());
        all_words(self.k, pad).into_iter().any(|u| {
            let uw: Word = u.into_iter().chain(w.iter().copied()).collect();
            avoids(&uw, &self.forbidden) && self.extends(&uw, steps, true) && self.extends(&uw, steps, false)
        })
    }

    pub fn language(&mut self, n: usize) -> BTreeSet<Word> {
        all_words(self.k, n).into_iter().filter(|w| self.contains(w)).collect()
    }
}

/// Rectangles `S × ∩_{i∈S} N(i)` for every nonempty row set `S`. Every
/// maximal rectangle is among them.
pub fn closed_rectangles(r: &RelationMatrix) -> Vec<(Vec<usize>, Vec<usize>)> {
    let (nx, ny) = (r.x_size(), r.y_size());
    assert!(nx <= 16);
    let mut out = Vec::new();
    for mask in 1u32..(1 << nx) {
        let rows: Vec<usize> = (0..nx).filter(|i| mask >> i & 1 == 1).collect();
        let cols: Vec<usize> = (0..ny).filter(|&j| rows.iter().all(|&i| r.get(i, j))).collect();
        if !cols.is_empty() {
            out.push((rows, cols));
        }
    }
    out
}

/// Minimum number of rectangles covering the 1-entries, by trying every
/// family of closed rectangles in increasing size.
pub fn cover_number_brute(r: &RelationMatrix) -> usize {
    let ones: Vec<(usize, usize)> = r.ones().collect();
    let rects = closed_rectangles(r);
    let masks: Vec<u64> = rects
        .iter()
        .map(|(rows, cols)| {
            ones.iter()
                .enumerate()
                .filter(|(_, (i, j))| rows.contains(i) && cols.contains(j))
                .fold(0u64, |m, (c, _)| m | 1 << c)
        })
        .collect();
    let full = if ones.len() == 64 { u64::MAX } else { (1u64 << ones.len()) - 1 };
    fn search(masks: &[u64], start: usize, left: usize, acc: u64, full: u64) -> bool {
        if acc == full {
            return true;
        }
        if left == 0 {
            return false;
        }
        (start..masks.len()).any(|i| search(masks, i + 1, left - 1, acc | masks[i], full))
    }
    (1..=ones.len()).find(|&k| search(&masks, 0, k, 0, full)).unwrap()
}

/// Exact fractional cover number: the packing LP `max Σ y_c` subject to
/// `Σ_{c ∈ R} y_c ≤ 1` for every rectangle, by rational simplex with
/// Bland's rule.
pub fn fractional_cover_rational(r: &RelationMatrix) -> BigRational {
    let ones: Vec<(usize, usize)> = r.ones().collect();
    let rects = closed_rectangles(r);
    let (m, n) = (rects.len(), ones.len());
    let zero = BigRational::zero;
    let one = BigRational::one;
    // tableau rows: constraints; columns: n cells, m slacks, rhs
    let mut t: Vec<Vec<BigRational>> = rects
        .iter()
        .enumerate()
        .map(|(k, (rows, cols))| {
            let mut row = vec![zero(); n + m + 1];
            for (c, (i, j)) in ones.iter().enumerate() {
                if rows.contains(i) && cols.contains(j) {
                    row[c] = one();
                }
            }
            row[n + k] = one();
            row[n + m] = one();
            row
        })
        .collect();
    let mut basis: Vec<usize> = (n..n + m).collect();
    // reduced costs of the objective max Σ y
    let mut obj: Vec<BigRational> = (0..n + m + 1).map(|j| if j < n { one() } else { zero() }).collect();
    while let Some(enter) = (0..n + m).find(|&j| obj[j].is_positive()) {
        let mut leave: Option<usize> = None;
        for i in 0..m {
            if t[i][enter].is_positive() {
                let ratio = &t[i][n + m] / &t[i][enter];
                let better = match leave {
                    None => true,
                    Some(l) => {
                        let best = &t[l][n + m] / &t[l][enter];
                        ratio < best || (ratio == best && basis[i] < basis[l])
                    }
                };
                if better {
                    leave = Some(i);
                }
            }
        }
        let l = leave.expect("packing LP is bounded");
        let pivot = t[l][enter].clone();
        for v in t[l].iter_mut() {
            *v = &*v / &pivot;
        }
        let prow = t[l].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i != l && !row[enter].is_zero() {
                let f = row[enter].clone();
                for (v, p) in row.iter_mut().zip(&prow) {
                    *v = &*v - &f * p;
                }
            }
        }
        let f = obj[enter].clone();
        for (v, p) in obj.iter_mut().zip(&prow) {
            *v = &*v - &f * p;
        }
        basis[l] = enter;
    }
    -obj[n + m].clone()
}

pub fn to_f64(q: &BigRational) -> f64 {
    let scale = BigInt::from(10u64).pow(15);
    let scaled = (q * BigRational::from_integer(scale.clone())).round().to_integer();
    scaled.to_string().parse::<f64>().unwrap() / 1e15
}

/// Greedy β-expansion of 1 for `β > 1`, up to `len` digits, rounding
/// products within `1e-9` of an integer.
pub fn greedy_expansion(beta: f64, len: usize) -> Vec<usize> {
    let mut r = 1.0f64;
    let mut digits = Vec::new();
    for _ in 0..len {
        let x = beta * r;
        let near = x.round();
        let d = if (x - near).abs() < 1e-9 { near } else { x.floor() };
        digits.push(d as usize);
        r = (x - d).max(0.0);
        if r < 1e-9 {
            break;
        }
    }
    digits
}
