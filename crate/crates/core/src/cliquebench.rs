//! Maximum-clique computation through the responsibility engines, paired
//! with an independent brute-force oracle.
//!
//! For a graph `G`, the circuit `C = X ∧ ⋀_{(v,w) ∉ E} (v ∨ w)` under the
//! all-zero assignment ties the responsibility of `X` to the largest clique:
//! a contingency must raise every vertex outside some clique, so a minimal
//! witness has `|V| - ω` vertices and `dr = 1/(|V| - ω + 1)`. This makes an
//! end-to-end stress test for the engines with an answer that is easy to
//! check independently.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::circuit::{resp_brute, Assignment, Circuit, CircuitBuilder};
use crate::sample::Rng;
use crate::util::for_each_combination;

#[derive(Debug, Error, PartialEq)]
pub enum GraphError {
    #[error("self-loop at `{0}`")]
    SelfLoop(String),
    #[error("edge endpoint `{0}` is not a declared vertex")]
    UnknownVertex(String),
    #[error("graph has {0} vertices; the brute-force oracle is capped at {1}")]
    TooLarge(usize, usize),
    #[error("edge probability must lie in [0, 1], got {0}")]
    InvalidProbability(f64),
    #[error("malformed graph document: {0}")]
    Format(String),
}

/// An undirected simple graph over named vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertices: BTreeSet<String>,
    /// Normalized: each edge stored once with endpoints in sorted order.
    edges: BTreeSet<(String, String)>,
}

impl Graph {
    pub fn new(
        vertices: BTreeSet<String>,
        edges: impl IntoIterator<Item = (String, String)>,
    ) -> Result<Self, GraphError> {
        let mut normalized = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            for end in [&a, &b] {
                if !vertices.contains(end) {
                    return Err(GraphError::UnknownVertex(end.clone()));
                }
            }
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            normalized.insert((lo, hi));
        }
        Ok(Graph {
            vertices,
            edges: normalized,
        })
    }

    pub fn vertices(&self) -> &BTreeSet<String> {
        &self.vertices
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn adjacent(&self, a: &str, b: &str) -> bool {
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        self.edges.contains(&(lo.to_string(), hi.to_string()))
    }
}

/// The reduction circuit, the all-zero assignment, and the distinguished
/// variable. The conjunction over non-adjacent pairs is empty for complete
/// graphs, which folds to constant true.
pub fn build_clique_circuit(g: &Graph) -> (Circuit, Assignment, String) {
    let mut x_name = "X".to_string();
    while g.vertices.contains(&x_name) {
        x_name.push('_');
    }
    let mut b = CircuitBuilder::new();
    let x = b.input(&x_name);
    let vertex_gates: BTreeMap<&String, _> = g.vertices.iter().map(|v| (v, b.input(v))).collect();
    let vs: Vec<&String> = g.vertices.iter().collect();
    let mut clauses = Vec::new();
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            if !g.adjacent(vs[i], vs[j]) {
                clauses.push(b.or(vertex_gates[vs[i]], vertex_gates[vs[j]]));
            }
        }
    }
    let cg = b.and_all(&clauses);
    let out = b.and(x, cg);
    let circuit = b.finish(out);
    let all_zero = Assignment::constant(circuit.inputs().iter().map(|s| s.as_str()), false);
    (circuit, all_zero, x_name)
}

/// Maximum clique size computed through the responsibility engine: with a
/// minimal witness of size `k`, the answer is `|V| - k`.
pub fn max_clique_via_resp(g: &Graph) -> usize {
    let (circuit, all_zero, x) = build_clique_circuit(g);
    let mutable: BTreeSet<String> = circuit.inputs().iter().cloned().collect();
    let r = resp_brute(&circuit, &x, circuit.output(), &all_zero, &mutable)
        .expect("reduction circuits are valid");
    let k = r
        .witness_size()
        .expect("flipping every vertex is always a witness");
    g.vertices.len() - k
}

pub const BRUTE_FORCE_VERTEX_CAP: usize = 16;

/// Independent oracle: the largest pairwise-adjacent nonempty vertex set,
/// or 0 for the empty graph. Capped at [`BRUTE_FORCE_VERTEX_CAP`] vertices.
pub fn brute_max_clique(g: &Graph) -> Result<usize, GraphError> {
    let vs: Vec<&String> = g.vertices.iter().collect();
    if vs.len() > BRUTE_FORCE_VERTEX_CAP {
        return Err(GraphError::TooLarge(vs.len(), BRUTE_FORCE_VERTEX_CAP));
    }
    for size in (1..=vs.len()).rev() {
        let found = for_each_combination(vs.len(), size, |subset| {
            let clique = subset
                .iter()
                .enumerate()
                .all(|(i, &a)| subset[i + 1..].iter().all(|&c| g.adjacent(vs[a], vs[c])));
            clique.then_some(())
        });
        if found.is_some() {
            return Ok(size);
        }
    }
    Ok(0)
}

/// Erdős–Rényi style generator: each pair becomes an edge independently
/// with probability `p`, deterministically from `seed`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph, GraphError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(GraphError::InvalidProbability(p));
    }
    let mut rng = Rng::new(seed);
    let vertices: BTreeSet<String> = (0..n).map(|i| format!("n{i:02}")).collect();
    let vs: Vec<&String> = vertices.iter().collect();
    let mut edges = Vec::new();
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            if rng.chance(p) {
                edges.push((vs[i].clone(), vs[j].clone()));
            }
        }
    }
    Graph::new(vertices.clone(), edges)
}

#[derive(Serialize, Deserialize)]
struct GraphDoc {
    vertices: Vec<String>,
    edges: Vec<(String, String)>,
}

pub fn parse_graph(text: &str) -> Result<Graph, GraphError> {
    let doc: GraphDoc =
        serde_json::from_str(text).map_err(|e| GraphError::Format(e.to_string()))?;
    Graph::new(doc.vertices.into_iter().collect(), doc.edges)
}

pub fn serialize_graph(g: &Graph) -> String {
    let doc = GraphDoc {
        vertices: g.vertices.iter().cloned().collect(),
        edges: g.edges.iter().cloned().collect(),
    };
    serde_json::to_string_pretty(&doc).expect("graph documents always serialize")
}
