//! Finite boolean relations `R ⊆ X × Y` and combinatorial rectangles.

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default limit on `|X|·|Y|` for constructed relations.
pub const DESK_SCALE_CELLS: u128 = 1 << 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationMatrix {
    x_labels: Vec<String>,
    y_labels: Vec<String>,
    rows: Vec<FixedBitSet>,
}

fn index_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

fn bit_labels(k: usize) -> Vec<String> {
    (0..1usize << k).map(|i| format!("{i:0k$b}")).collect()
}

impl RelationMatrix {
    /// The empty relation on `x_size × y_size` with index labels.
    pub fn new(x_size: usize, y_size: usize) -> Self {
        Self::with_labels(index_labels(x_size), index_labels(y_size))
    }

    pub fn with_labels(x_labels: Vec<String>, y_labels: Vec<String>) -> Self {
        let rows = vec![FixedBitSet::with_capacity(y_labels.len()); x_labels.len()];
        RelationMatrix {
            x_labels,
            y_labels,
            rows,
        }
    }

    pub fn from_fn(x_size: usize, y_size: usize, f: impl Fn(usize, usize) -> bool) -> Self {
        let mut r = Self::new(x_size, y_size);
        for i in 0..x_size {
            for j in 0..y_size {
                if f(i, j) {
                    r.rows[i].insert(j);
                }
            }
        }
        r
    }

    pub fn from_ones(x_size: usize, y_size: usize, ones: &[(usize, usize)]) -> Result<Self> {
        let mut r = Self::new(x_size, y_size);
        for &(i, j) in ones {
            r.set(i, j)?;
        }
        Ok(r)
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| i == j)
    }

    pub fn all_ones(x_size: usize, y_size: usize) -> Self {
        Self::from_fn(x_size, y_size, |_, _| true)
    }

    /// Equality on `k`-bit strings.
    pub fn eq_bits(k: usize) -> Self {
        let mut r = Self::identity(1 << k);
        r.x_labels = bit_labels(k);
        r.y_labels = bit_labels(k);
        r
    }

    /// Inequality on `k`-bit strings.
    pub fn neq_bits(k: usize) -> Self {
        let mut r = Self::from_fn(1 << k, 1 << k, |i, j| i != j);
        r.x_labels = bit_labels(k);
        r.y_labels = bit_labels(k);
        r
    }

    pub fn set(&mut self, i: usize, j: usize) -> Result<()> {
        if i >= self.x_size() || j >= self.y_size() {
            return Err(Error::input(format!(
                "entry ({i}, {j}) outside a {}×{} relation",
                self.x_size(),
                self.y_size()
            )));
        }
        self.rows[i].insert(j);
        Ok(())
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].contains(j)
    }

    pub fn x_size(&self) -> usize {
        self.x_labels.len()
    }

    pub fn y_size(&self) -> usize {
        self.y_labels.len()
    }

    pub fn x_labels(&self) -> &[String] {
        &self.x_labels
    }

    pub fn y_labels(&self) -> &[String] {
        &self.y_labels
    }

    pub fn row(&self, i: usize) -> &FixedBitSet {
        &self.rows[i]
    }

    /// 1-entries in row-major order.
    pub fn ones(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.ones().map(move |j| (i, j)))
    }

    pub fn count_ones(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones(..)).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.iter().all(|r| r.is_clear())
    }

    pub(crate) fn require_nonempty(&self) -> Result<()> {
        if self.is_empty() {
            Err(Error::EmptyRelation)
        } else {
            Ok(())
        }
    }

    /// Sub-relation on the given rows and columns, in the given order.
    pub fn restrict(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut r = Self::with_labels(
            rows.iter().map(|&i| self.x_labels[i].clone()).collect(),
            cols.iter().map(|&j| self.y_labels[j].clone()).collect(),
        );
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                if self.get(i, j) {
                    r.rows[a].insert(b);
                }
            }
        }
        r
    }

    pub fn transpose(&self) -> Self {
        let mut r = Self::with_labels(self.y_labels.clone(), self.x_labels.clone());
        for (i, j) in self.ones() {
            r.rows[j].insert(i);
        }
        r
    }
}

/// `R^n`: `(x, y) ∈ R^n` iff `(x_i, y_i) ∈ R` for every `i < n`. Tuples
/// are indexed in mixed radix with `x_0` most significant.
pub fn tensor_power(r: &RelationMatrix, n: usize) -> Result<RelationMatrix> {
    tensor_power_guarded(r, n, DESK_SCALE_CELLS)
}

pub fn tensor_power_guarded(r: &RelationMatrix, n: usize, max_cells: u128) -> Result<RelationMatrix> {
    if n == 0 {
        return Err(Error::input("tensor power needs n >= 1"));
    }
    if n == 1 {
        return Ok(r.clone());
    }
    let cells = (r.x_size() as u128)
        .checked_pow(n as u32)
        .and_then(|a| (r.y_size() as u128).checked_pow(n as u32).and_then(|b| a.checked_mul(b)))
        .unwrap_or(u128::MAX);
    if cells > max_cells {
        return Err(Error::guard(format!("cells of R^{n}"), cells, max_cells));
    }
    let tuple_labels = |labels: &[String]| -> Vec<String> {
        let sizes = vec![labels.len(); n];
        let total = labels.len().pow(n as u32);
        (0..total)
            .map(|idx| {
                let parts: Vec<&str> = crate::alphabet::split_radix(idx, &sizes)
                    .into_iter()
                    .map(|c| labels[c].as_str())
                    .collect();
                format!("({})", parts.join(","))
            })
            .collect()
    };
    let mut out = RelationMatrix::with_labels(tuple_labels(&r.x_labels), tuple_labels(&r.y_labels));
    // Row (x, x_last) is the Kronecker product of row x of R^(n-1) with row
    // x_last of R, built one factor at a time.
    let mut current = r.clone();
    for _ in 1..n {
        let mut next_rows = Vec::with_capacity(current.x_size() * r.x_size());
        let width = current.y_size() * r.y_size();
        for a in &current.rows {
            for b in &r.rows {
                let mut row = FixedBitSet::with_capacity(width);
                for ja in a.ones() {
                    for jb in b.ones() {
                        row.insert(ja * r.y_size() + jb);
                    }
                }
                next_rows.push(row);
            }
        }
        current = RelationMatrix {
            x_labels: index_labels(next_rows.len()),
            y_labels: index_labels(width),
            rows: next_rows,
        };
    }
    out.rows = current.rows;
    Ok(out)
}

/// Combinatorial rectangle `rows × cols`, both sorted.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Rectangle {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

impl Rectangle {
    pub fn new(mut rows: Vec<usize>, mut cols: Vec<usize>) -> Self {
        rows.sort_unstable();
        rows.dedup();
        cols.sort_unstable();
        cols.dedup();
        Rectangle { rows, cols }
    }

    pub fn size(&self) -> usize {
        self.rows.len() * self.cols.len()
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.rows.binary_search(&i).is_ok() && self.cols.binary_search(&j).is_ok()
    }

    /// True when every cell of the rectangle is a 1-entry of `r`.
    pub fn is_monochromatic(&self, r: &RelationMatrix) -> bool {
        self.rows
            .iter()
            .all(|&i| i < r.x_size() && self.cols.iter().all(|&j| j < r.y_size() && r.get(i, j)))
    }
}
