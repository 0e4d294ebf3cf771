//! Contraction of destabilizing components: the stabilization of a marked
//! curve (map forgotten) and the point-forgetting map on stable map graphs.

use crate::error::{Error, Result};
use crate::moduli::graph::DualGraph;

/// Stabilize the underlying marked curve: repeatedly contract genus-zero
/// vertices with fewer than three special points, ignoring map degrees.
/// Defined when n + 2g >= 3; idempotent; preserves graph genus, the leg
/// set, and the total degree. The underlying marked curve of the result
/// does not depend on the contraction order; degree bookkeeping hands a
/// contracted vertex's degree to one absorbing neighbor, and which of two
/// symmetric neighbors receives it is an artifact of vertex order.
pub fn stabilize_curve(graph: &DualGraph, genus: u32, markings: u32) -> Result<DualGraph> {
    if markings + 2 * genus < 3 {
        return Err(Error::NoStableModel(markings + 2 * genus));
    }
    check_shape(graph, genus, markings)?;
    let mut current = graph.clone();
    while let Some(v) = find_unstable(&current, CurveStability) {
        current = contract(&current, v);
    }
    Ok(current)
}

/// Forget marked point `i` of a stable map graph and contract whatever
/// degree-zero components the removal destabilizes. The output is stable
/// for the problem (g, n-1, d); leg labels above `i` shift down by one so
/// the markings stay 1..=n-1.
pub fn forget_point(
    graph: &DualGraph,
    genus: u32,
    markings: u32,
    degree: u64,
    i: u32,
) -> Result<DualGraph> {
    let report = graph.stability_report(genus, markings, degree);
    if !report.stable {
        return Err(Error::UnstableInput(report.violations.join("; ")));
    }
    if !graph.legs().contains_key(&i) {
        return Err(Error::MissingLeg(i));
    }
    let reduced = markings - 1;
    if degree == 0 && reduced + 2 * genus < 3 {
        return Err(Error::UndefinedTarget {
            g: genus,
            n: reduced,
            d: degree,
        });
    }
    let mut legs = std::collections::BTreeMap::new();
    for (&label, &v) in graph.legs() {
        if label < i {
            legs.insert(label, v);
        } else if label > i {
            legs.insert(label - 1, v);
        }
    }
    let mut current = DualGraph::new(graph.vertices().to_vec(), graph.edges().to_vec(), legs)?;
    while let Some(v) = find_unstable(&current, MapStability) {
        current = contract(&current, v);
    }
    debug_assert!(current.stability_report(genus, reduced, degree).stable);
    Ok(current)
}

fn check_shape(graph: &DualGraph, genus: u32, markings: u32) -> Result<()> {
    if !graph.is_connected() {
        return Err(Error::Disconnected);
    }
    let actual = graph.graph_genus()?;
    if actual != genus {
        return Err(Error::ProblemMismatch(format!(
            "graph genus {actual} differs from problem genus {genus}"
        )));
    }
    let expected: Vec<u32> = (1..=markings).collect();
    let labels: Vec<u32> = graph.legs().keys().copied().collect();
    if labels != expected {
        return Err(Error::ProblemMismatch(format!(
            "leg labels do not match markings 1..={markings}"
        )));
    }
    Ok(())
}

// Which vertices count as unstable for the contraction loop.
struct CurveStability;
struct MapStability;

trait Instability {
    fn unstable(graph: &DualGraph, v: usize) -> bool;
}

impl Instability for CurveStability {
    fn unstable(graph: &DualGraph, v: usize) -> bool {
        // the map is forgotten: degrees play no role
        let data = graph.vertex(v);
        (graph.special_points(v) as i64) < 3 - 2 * data.genus as i64
    }
}

impl Instability for MapStability {
    fn unstable(graph: &DualGraph, v: usize) -> bool {
        let data = graph.vertex(v);
        data.degree == 0 && (graph.special_points(v) as i64) < 3 - 2 * data.genus as i64
    }
}

fn find_unstable<S: Instability>(graph: &DualGraph, _mode: S) -> Option<usize> {
    (0..graph.num_vertices()).find(|&v| S::unstable(graph, v))
}

/// Contract vertex `v`, re-attaching its legs, surviving edge ends, and
/// degree to the neighbor(s). Callers guarantee `v` has one or two edge
/// ends, none of them a loop at `v`; a connected graph with n + 2g >= 3
/// never asks for anything else.
fn contract(graph: &DualGraph, v: usize) -> DualGraph {
    let mut incident = Vec::new();
    let mut kept_edges = Vec::new();
    for &(a, b) in graph.edges() {
        if a == v || b == v {
            incident.push((a, b));
        } else {
            kept_edges.push((a, b));
        }
    }
    let ends: Vec<usize> = incident
        .iter()
        .flat_map(|&(a, b)| {
            let mut out = Vec::new();
            if a == v {
                out.push(b);
            }
            if b == v {
                out.push(a);
            }
            out
        })
        .collect();
    let target = match ends.as_slice() {
        [u] => {
            assert_ne!(*u, v, "cannot contract a vertex whose only node is a loop");
            *u
        }
        [u, w] => {
            assert!(*u != v && *w != v, "cannot contract a looped vertex");
            kept_edges.push((*u.min(w), *u.max(w)));
            *u.min(w)
        }
        _ => panic!(
            "contraction requires one or two edge ends, vertex {v} has {}",
            ends.len()
        ),
    };

    // drop v and reindex everything above it
    let reindex = |w: usize| if w > v { w - 1 } else { w };
    let mut vertices = graph.vertices().to_vec();
    let absorbed = vertices.remove(v);
    vertices[reindex(target)].degree += absorbed.degree;
    let edges = kept_edges
        .into_iter()
        .map(|(a, b)| (reindex(a), reindex(b)))
        .collect();
    let legs = graph
        .legs()
        .iter()
        .map(|(&label, &w)| (label, reindex(if w == v { target } else { w })))
        .collect();
    DualGraph::new(vertices, edges, legs).expect("contraction preserves well-formedness")
}
