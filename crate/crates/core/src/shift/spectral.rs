//! Perron root of a nonnegative integer adjacency matrix with certified
//! two-sided bounds.
//!
//! For any nonnegative matrix `A` and positive vector `v`,
//! `min_i (Av)_i / v_i <= rho(A) <= max_i (Av)_i / v_i`. The bracket only
//! tightens under power iteration when `A` is primitive, so the graph is
//! split into strongly connected components and each irreducible block is
//! iterated as `A + I`, which is primitive and has Perron root `rho + 1`.

use petgraph::algo::tarjan_scc;
use petgraph::graph::{DiGraph, NodeIndex};
use serde::{Serialize, Serializer};

const MAX_ITERATIONS: usize = 2_000_000;

/// Certified bounds `lo <= rho <= hi` on a spectral radius.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Bracket {
    pub lo: f64,
    pub hi: f64,
    pub converged: bool,
}

impl Bracket {
    /// Width of the bracket in bits (`log2 hi - log2 lo`).
    pub fn log2_width(&self) -> f64 {
        self.hi.log2() - self.lo.log2()
    }

    pub fn log2_mid(&self) -> f64 {
        0.5 * (self.hi.log2() + self.lo.log2())
    }
}

/// Spectral radius of the multigraph on `n` vertices with the given edges,
/// bracketed to `tol` in log2 scale. `None` when the graph has no cycle
/// (spectral radius zero).
pub fn spectral_radius(n: usize, edges: &[(usize, usize)], tol: f64) -> Option<Bracket> {
    assert!(tol > 0.0, "tolerance must be positive");
    let mut graph = DiGraph::<(), ()>::with_capacity(n, edges.len());
    let nodes: Vec<NodeIndex> = (0..n).map(|_| graph.add_node(())).collect();
    for &(s, t) in edges {
        graph.add_edge(nodes[s], nodes[t], ());
    }

    let sccs = tarjan_scc(&graph);
    let mut component = vec![0usize; n];
    let mut local = vec![0usize; n];
    for (cid, scc) in sccs.iter().enumerate() {
        for (i, node) in scc.iter().enumerate() {
            component[node.index()] = cid;
            local[node.index()] = i;
        }
    }
    let mut blocks: Vec<Vec<(usize, usize)>> = vec![Vec::new(); sccs.len()];
    for &(s, t) in edges {
        if component[s] == component[t] {
            blocks[component[s]].push((local[s], local[t]));
        }
    }

    let mut best: Option<Bracket> = None;
    for (scc, block) in sccs.iter().zip(&blocks) {
        if block.is_empty() {
            continue;
        }
        let bracket = irreducible_radius(scc.len(), block, tol);
        best = Some(match best {
            None => bracket,
            Some(b) => Bracket {
                lo: b.lo.max(bracket.lo),
                hi: b.hi.max(bracket.hi),
                converged: b.converged && bracket.converged,
            },
        });
    }
    best
}

/// Power iteration on `A + I` for an irreducible block.
fn irreducible_radius(n: usize, edges: &[(usize, usize)], tol: f64) -> Bracket {
    // Row-compressed adjacency: (Av)_s = sum over edges s->t of v_t.
    let mut row_start = vec![0usize; n + 1];
    for &(s, _) in edges {
        row_start[s + 1] += 1;
    }
    for i in 0..n {
        row_start[i + 1] += row_start[i];
    }
    let mut cols = vec![0usize; edges.len()];
    let mut fill = row_start.clone();
    for &(s, t) in edges {
        cols[fill[s]] = t;
        fill[s] += 1;
    }

    let mut v = vec![1.0f64; n];
    let mut w = vec![0.0f64; n];
    let mut bracket = Bracket {
        lo: 0.0,
        hi: f64::INFINITY,
        converged: false,
    };
    for _ in 0..MAX_ITERATIONS {
        let mut lo = f64::INFINITY;
        let mut hi = 0.0f64;
        let mut top = 0.0f64;
        for s in 0..n {
            let sum: f64 = cols[row_start[s]..row_start[s + 1]]
                .iter()
                .map(|&t| v[t])
                .sum();
            let value = sum + v[s];
            let ratio = value / v[s];
            lo = lo.min(ratio);
            hi = hi.max(ratio);
            top = top.max(value);
            w[s] = value;
        }
        // Irreducible nonzero integer matrices have rho >= 1.
        let lo_rho = (lo - 1.0).max(1.0);
        let hi_rho = (hi - 1.0).max(lo_rho);
        bracket.lo = bracket.lo.max(lo_rho);
        bracket.hi = bracket.hi.min(hi_rho);
        if bracket.hi.log2() - bracket.lo.log2() < tol {
            bracket.converged = true;
            return bracket;
        }
        for (dst, src) in v.iter_mut().zip(&w) {
            *dst = src / top;
        }
    }
    bracket
}

/// Entropy in bits per symbol, with a distinguished value for the empty
/// shift.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum EntropyValue {
    NegInfinity,
    Bits(f64),
}

impl EntropyValue {
    pub fn bits(&self) -> f64 {
        match *self {
            EntropyValue::NegInfinity => f64::NEG_INFINITY,
            EntropyValue::Bits(b) => b,
        }
    }

    pub fn is_empty_shift(&self) -> bool {
        matches!(self, EntropyValue::NegInfinity)
    }

    /// Entropy of a nonempty graph from its spectral bracket. A nonempty
    /// trimmed graph always has a cycle, so `None` means empty.
    pub(crate) fn from_bracket(bracket: Option<Bracket>) -> Self {
        match bracket {
            None => EntropyValue::NegInfinity,
            Some(b) => EntropyValue::Bits(b.log2_mid().max(0.0)),
        }
    }
}

impl Serialize for EntropyValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = serializer.serialize_map(Some(1))?;
        match self {
            EntropyValue::NegInfinity => map.serialize_entry("bits", "-inf")?,
            EntropyValue::Bits(b) => map.serialize_entry("bits", b)?,
        }
        map.end()
    }
}

/// Serialize an entropy as a bare number, or the string `"-inf"`.
pub fn serialize_bits<S: Serializer>(value: &EntropyValue, serializer: S) -> Result<S::Ok, S::Error> {
    match value {
        EntropyValue::NegInfinity => serializer.serialize_str("-inf"),
        EntropyValue::Bits(b) => serializer.serialize_f64(*b),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_vertex_loops_exact() {
        for k in 1..=8usize {
            let edges = vec![(0, 0); k];
            let b = spectral_radius(1, &edges, 1e-12).unwrap();
            assert_eq!(b.lo, k as f64);
            assert_eq!(b.hi, k as f64);
        }
    }

    #[test]
    fn acyclic_is_none() {
        assert!(spectral_radius(3, &[(0, 1), (1, 2)], 1e-9).is_none());
        assert!(spectral_radius(0, &[], 1e-9).is_none());
    }

    #[test]
    fn golden_mean_graph() {
        // vertices 0,1; edges 0->0, 0->1, 1->0
        let b = spectral_radius(2, &[(0, 0), (0, 1), (1, 0)], 1e-12).unwrap();
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        assert!(b.lo <= phi + 1e-12 && phi - 1e-12 <= b.hi);
        assert!(b.converged);
    }

    #[test]
    fn periodic_component_converges() {
        // 2-cycle with doubled forward edge: rho = sqrt(2)
        let b = spectral_radius(2, &[(0, 1), (0, 1), (1, 0)], 1e-12).unwrap();
        assert!((b.log2_mid() - 0.5).abs() < 1e-11);
    }

    #[test]
    fn reducible_takes_max_component() {
        // component {0} with one loop, component {1,2} golden mean, 0 -> 1
        let edges = [(0, 0), (0, 1), (1, 1), (1, 2), (2, 1)];
        let b = spectral_radius(3, &edges, 1e-12).unwrap();
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        assert!((b.log2_mid() - phi.log2()).abs() < 1e-11);
    }

    #[test]
    fn entropy_json() {
        let v = serde_json::to_string(&EntropyValue::NegInfinity).unwrap();
        assert_eq!(v, r#"{"bits":"-inf"}"#);
        let v = serde_json::to_string(&EntropyValue::Bits(1.0)).unwrap();
        assert_eq!(v, r#"{"bits":1.0}"#);
    }
}
