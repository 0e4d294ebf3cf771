//! Enumeration of genus-zero stable map dual graphs up to isomorphism.
//!
//! A genus-zero graph is a tree of genus-zero vertices, so isomorphism
//! classes have exact canonical forms: the minimum over all choices of
//! root of the rooted encoding that sorts child encodings (degrees and
//! leg labels included). Tree shapes are generated by leaf growth with
//! canonical deduplication, then decorated with map degrees and legs.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::moduli::graph::{DualGraph, VertexData};

/// Largest supported n + d.
pub const ENUMERATION_LIMIT: u64 = 8;

/// No stable genus-zero graph with n legs and total degree d has more
/// vertices than this.
pub fn vertex_bound(markings: u32, degree: u64) -> usize {
    // In a stable tree on k >= 2 vertices, each of the z degree-zero
    // vertices needs 3 special points and each of the p <= d positive
    // ones has at least one edge end, so n + 2(k-1) >= 3z + p, giving
    // k <= n + 2d - 2.
    (markings as i64 + 2 * degree as i64 - 2).max(1) as usize
}

/// All isomorphism classes of connected genus-zero stable map dual graphs
/// with legs 1..=n and total degree d, up to the vertex bound. The output
/// is sorted by canonical form, so the order is deterministic.
pub fn enumerate_genus_zero(
    markings: u32,
    degree: u64,
    max_vertices: usize,
) -> Result<Vec<DualGraph>> {
    if markings as u64 + degree > ENUMERATION_LIMIT {
        return Err(Error::EnumerationBound(
            markings as u64 + degree,
            ENUMERATION_LIMIT,
        ));
    }
    let cap = max_vertices.min(vertex_bound(markings, degree)).max(1);
    let mut classes: BTreeMap<String, DualGraph> = BTreeMap::new();
    for edges in tree_shapes(cap) {
        let k = edges.len() + 1;
        let adjacency = adjacency_of(k, &edges);
        let tree_degree: Vec<usize> = adjacency.iter().map(Vec::len).collect();
        for degrees in degree_assignments(degree, &tree_degree, markings) {
            for legs in leg_assignments(markings, k, &tree_degree, &degrees) {
                let graph = DualGraph::new(
                    degrees
                        .iter()
                        .map(|&d| VertexData {
                            genus: 0,
                            degree: d,
                        })
                        .collect(),
                    edges.clone(),
                    legs,
                )
                .expect("assignment indices are in range");
                if !graph.stability_report(0, markings, degree).stable {
                    continue;
                }
                let key = canonical_tree_key(&graph).expect("genus-zero graphs are trees");
                classes.entry(key).or_insert(graph);
            }
        }
    }
    Ok(classes.into_values().collect())
}

/// Canonical form of a decorated tree: minimum over roots of the rooted
/// encoding. `None` when the graph is not a tree (loop or extra edge).
pub fn canonical_tree_key(graph: &DualGraph) -> Option<String> {
    let k = graph.num_vertices();
    if graph.edges().len() + 1 != k || graph.edges().iter().any(|&(a, b)| a == b) {
        return None;
    }
    let adjacency = adjacency_of(k, graph.edges());
    let mut legs_by_vertex: Vec<Vec<u32>> = vec![Vec::new(); k];
    for (&label, &v) in graph.legs() {
        legs_by_vertex[v].push(label);
    }
    (0..k)
        .map(|root| encode(graph, &adjacency, &legs_by_vertex, root, usize::MAX))
        .min()
}

fn encode(
    graph: &DualGraph,
    adjacency: &[Vec<usize>],
    legs: &[Vec<u32>],
    v: usize,
    parent: usize,
) -> String {
    let mut children: Vec<String> = adjacency[v]
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| encode(graph, adjacency, legs, w, v))
        .collect();
    children.sort();
    let data = graph.vertex(v);
    let labels: Vec<String> = legs[v].iter().map(u32::to_string).collect();
    format!(
        "(g{},d{},l{};{})",
        data.genus,
        data.degree,
        labels.join(","),
        children.join("")
    )
}

fn adjacency_of(k: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut adjacency = vec![Vec::new(); k];
    for &(a, b) in edges {
        adjacency[a].push(b);
        adjacency[b].push(a);
    }
    adjacency
}

/// Free tree shapes with up to `max_vertices` vertices, one labeled
/// representative per isomorphism class, grown by attaching a leaf to
/// every vertex of every smaller class.
fn tree_shapes(max_vertices: usize) -> Vec<Vec<(usize, usize)>> {
    let mut all: Vec<Vec<(usize, usize)>> = vec![Vec::new()];
    let mut frontier: Vec<Vec<(usize, usize)>> = vec![Vec::new()];
    for k in 2..=max_vertices {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for edges in &frontier {
            for attach in 0..k - 1 {
                let mut grown = edges.clone();
                grown.push((attach, k - 1));
                let graph = DualGraph::new(
                    vec![
                        VertexData {
                            genus: 0,
                            degree: 0
                        };
                        k
                    ],
                    grown.clone(),
                    BTreeMap::new(),
                )
                .expect("leaf growth stays in range");
                let key = canonical_tree_key(&graph).expect("still a tree");
                if seen.insert(key) {
                    next.push(grown);
                }
            }
        }
        all.extend(next.iter().cloned());
        frontier = next;
    }
    all
}

/// Degree vectors summing to `total`. Prunes branches whose degree-zero
/// vertices would need more stabilizing legs than are available.
fn degree_assignments(total: u64, tree_degree: &[usize], markings: u32) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut current = vec![0u64; tree_degree.len()];
    recurse_degrees(
        total,
        tree_degree,
        markings as usize,
        0,
        0,
        &mut current,
        &mut out,
    );
    out
}

fn recurse_degrees(
    remaining: u64,
    tree_degree: &[usize],
    markings: usize,
    index: usize,
    legs_needed: usize,
    current: &mut Vec<u64>,
    out: &mut Vec<Vec<u64>>,
) {
    if legs_needed > markings {
        return;
    }
    if index == tree_degree.len() {
        if remaining == 0 {
            out.push(current.clone());
        }
        return;
    }
    for d in 0..=remaining {
        current[index] = d;
        let need = if d == 0 {
            3usize.saturating_sub(tree_degree[index])
        } else {
            0
        };
        recurse_degrees(
            remaining - d,
            tree_degree,
            markings,
            index + 1,
            legs_needed + need,
            current,
            out,
        );
    }
    current[index] = 0;
}

/// Ways to place legs 1..=n on the vertices, pruned by each degree-zero
/// vertex's outstanding need for special points.
fn leg_assignments(
    markings: u32,
    k: usize,
    tree_degree: &[usize],
    degrees: &[u64],
) -> Vec<BTreeMap<u32, usize>> {
    let mut deficits: Vec<usize> = (0..k)
        .map(|v| {
            if degrees[v] == 0 {
                3usize.saturating_sub(tree_degree[v])
            } else {
                0
            }
        })
        .collect();
    let mut out = Vec::new();
    let mut current = BTreeMap::new();
    recurse_legs(markings, 1, k, &mut deficits, &mut current, &mut out);
    out
}

fn recurse_legs(
    markings: u32,
    label: u32,
    k: usize,
    deficits: &mut Vec<usize>,
    current: &mut BTreeMap<u32, usize>,
    out: &mut Vec<BTreeMap<u32, usize>>,
) {
    let remaining = (markings + 1 - label) as usize;
    let total_deficit: usize = deficits.iter().sum();
    if total_deficit > remaining {
        return;
    }
    if label > markings {
        out.push(current.clone());
        return;
    }
    for v in 0..k {
        let before = deficits[v];
        deficits[v] = before.saturating_sub(1);
        current.insert(label, v);
        recurse_legs(markings, label + 1, k, deficits, current, out);
        current.remove(&label);
        deficits[v] = before;
    }
}
