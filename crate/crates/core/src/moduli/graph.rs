//! Dual graphs of marked nodal curves carrying a map: vertices are
//! irreducible components with a genus and a map degree, edges are nodes
//! (loops allowed), legs are marked points.
//!
//! Text format, one item per line, ids resolved in declaration order:
//!
//! ```text
//! vertex <id> genus=<h> degree=<d>
//! edge <id> <id>
//! leg <label> <id>
//! ```

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// Data of one irreducible component.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VertexData {
    pub genus: u32,
    pub degree: u64,
}

/// Combinatorial skeleton of a marked nodal curve with component degrees.
///
/// Two conventions are structural in this encoding: every singularity is
/// an ordinary double point (an edge joins exactly two branches), and a
/// marked point never sits at a node (legs and edge ends are distinct
/// special points on a component).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualGraph {
    vertices: Vec<VertexData>,
    edges: Vec<(usize, usize)>,
    legs: BTreeMap<u32, usize>,
}

impl DualGraph {
    /// Build a graph. Edge endpoints and leg targets must be valid vertex
    /// indices; edges are stored unordered (normalized and sorted).
    pub fn new(
        vertices: Vec<VertexData>,
        edges: Vec<(usize, usize)>,
        legs: BTreeMap<u32, usize>,
    ) -> Result<Self> {
        let bound = vertices.len();
        let mut normalized = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            if a >= bound || b >= bound {
                return Err(Error::ProblemMismatch(format!(
                    "edge ({a}, {b}) references a missing vertex"
                )));
            }
            normalized.push((a.min(b), a.max(b)));
        }
        normalized.sort_unstable();
        for (&label, &v) in &legs {
            if v >= bound {
                return Err(Error::ProblemMismatch(format!(
                    "leg {label} references a missing vertex"
                )));
            }
        }
        Ok(DualGraph {
            vertices,
            edges: normalized,
            legs,
        })
    }

    /// Single vertex, no edges, legs 1..=n.
    pub fn single_vertex(genus: u32, degree: u64, markings: u32) -> Self {
        let legs = (1..=markings).map(|label| (label, 0)).collect();
        DualGraph {
            vertices: vec![VertexData { genus, degree }],
            edges: Vec::new(),
            legs,
        }
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex(&self, v: usize) -> VertexData {
        self.vertices[v]
    }

    pub fn vertices(&self) -> &[VertexData] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn legs(&self) -> &BTreeMap<u32, usize> {
        &self.legs
    }

    pub fn total_degree(&self) -> u64 {
        self.vertices.iter().map(|v| v.degree).sum()
    }

    pub fn is_connected(&self) -> bool {
        if self.vertices.is_empty() {
            return false;
        }
        let mut seen = vec![false; self.vertices.len()];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &(a, b) in &self.edges {
                for (from, to) in [(a, b), (b, a)] {
                    if from == v && !seen[to] {
                        seen[to] = true;
                        stack.push(to);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Arithmetic genus of the curve: vertex genera plus the first Betti
    /// number of the graph (edges - vertices + 1, loops counting).
    pub fn graph_genus(&self) -> Result<u32> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let genera: u32 = self.vertices.iter().map(|v| v.genus).sum();
        let betti = self.edges.len() as i64 - self.vertices.len() as i64 + 1;
        Ok(genera + betti as u32)
    }

    /// Marked or singular points on a component: legs plus edge ends, a
    /// loop contributing two branches.
    pub fn special_points(&self, v: usize) -> usize {
        let from_legs = self.legs.values().filter(|&&w| w == v).count();
        let from_edges: usize = self
            .edges
            .iter()
            .map(|&(a, b)| usize::from(a == v) + usize::from(b == v))
            .sum();
        from_legs + from_edges
    }

    /// Stability of the graph as a map-moduli point of (g, n, d): correct
    /// genus, markings exactly 1..=n, total degree d, and every degree-0
    /// component of genus h carrying at least 3 - 2h special points.
    /// Violated clauses are listed in a fixed order.
    pub fn stability_report(&self, genus: u32, markings: u32, degree: u64) -> StabilityReport {
        let mut violations = Vec::new();
        if !self.is_connected() {
            violations.push("graph is disconnected".to_string());
        } else {
            let actual = self.graph_genus().expect("connected");
            if actual != genus {
                violations.push(format!(
                    "graph genus {actual} differs from problem genus {genus}"
                ));
            }
        }
        let expected: Vec<u32> = (1..=markings).collect();
        let actual_labels: Vec<u32> = self.legs.keys().copied().collect();
        if actual_labels != expected {
            violations.push(format!(
                "leg labels [{}] differ from markings 1..={markings}",
                actual_labels
                    .iter()
                    .map(u32::to_string)
                    .collect::<Vec<_>>()
                    .join(",")
            ));
        }
        let total = self.total_degree();
        if total != degree {
            violations.push(format!(
                "total vertex degree {total} differs from map degree {degree}"
            ));
        }
        for v in 0..self.vertices.len() {
            let data = self.vertices[v];
            if data.degree == 0 {
                let need = 3i64 - 2 * data.genus as i64;
                let have = self.special_points(v) as i64;
                if have < need {
                    violations.push(format!(
                        "vertex {v}: contracted genus-{} component has {have} special points, needs {need}",
                        data.genus
                    ));
                }
            }
        }
        StabilityReport {
            stable: violations.is_empty(),
            violations,
        }
    }

    /// Parse the line-oriented text format. Blank lines and `#` comments
    /// are skipped.
    pub fn parse(input: &str) -> Result<Self> {
        let mut ids: BTreeMap<u64, usize> = BTreeMap::new();
        let mut vertices = Vec::new();
        let mut edges = Vec::new();
        let mut legs: BTreeMap<u32, usize> = BTreeMap::new();
        for (index, raw) in input.lines().enumerate() {
            let line = index + 1;
            let text = raw.trim();
            if text.is_empty() || text.starts_with('#') {
                continue;
            }
            let fail = |message: String| Error::GraphFormat { line, message };
            let mut words = text.split_whitespace();
            match words.next() {
                Some("vertex") => {
                    let id: u64 = parse_word(words.next(), "vertex id", line)?;
                    if ids.contains_key(&id) {
                        return Err(fail(format!("duplicate vertex id {id}")));
                    }
                    let genus = parse_field(words.next(), "genus", line)?;
                    let degree = parse_field(words.next(), "degree", line)?;
                    ids.insert(id, vertices.len());
                    vertices.push(VertexData {
                        genus: genus as u32,
                        degree,
                    });
                }
                Some("edge") => {
                    let a: u64 = parse_word(words.next(), "vertex id", line)?;
                    let b: u64 = parse_word(words.next(), "vertex id", line)?;
                    let a = *ids
                        .get(&a)
                        .ok_or_else(|| fail(format!("unknown vertex id {a}")))?;
                    let b = *ids
                        .get(&b)
                        .ok_or_else(|| fail(format!("unknown vertex id {b}")))?;
                    edges.push((a, b));
                }
                Some("leg") => {
                    let label: u64 = parse_word(words.next(), "leg label", line)?;
                    let v: u64 = parse_word(words.next(), "vertex id", line)?;
                    let v = *ids
                        .get(&v)
                        .ok_or_else(|| fail(format!("unknown vertex id {v}")))?;
                    if legs.insert(label as u32, v).is_some() {
                        return Err(fail(format!("duplicate leg label {label}")));
                    }
                }
                Some(other) => {
                    return Err(fail(format!(
                        "unknown directive `{other}` (expected vertex, edge, or leg)"
                    )));
                }
                None => unreachable!("blank lines are skipped"),
            }
            if let Some(extra) = words.next() {
                return Err(Error::GraphFormat {
                    line,
                    message: format!("trailing input `{extra}`"),
                });
            }
        }
        if vertices.is_empty() {
            return Err(Error::GraphFormat {
                line: 0,
                message: "graph has no vertices".into(),
            });
        }
        DualGraph::new(vertices, edges, legs)
    }
}

fn parse_word<T: std::str::FromStr>(word: Option<&str>, what: &str, line: usize) -> Result<T> {
    let word = word.ok_or_else(|| Error::GraphFormat {
        line,
        message: format!("missing {what}"),
    })?;
    word.parse().map_err(|_| Error::GraphFormat {
        line,
        message: format!("invalid {what} `{word}`"),
    })
}

fn parse_field(word: Option<&str>, key: &str, line: usize) -> Result<u64> {
    let word = word.ok_or_else(|| Error::GraphFormat {
        line,
        message: format!("missing {key}=<value>"),
    })?;
    match word.split_once('=') {
        Some((k, v)) if k == key => v.parse().map_err(|_| Error::GraphFormat {
            line,
            message: format!("invalid {key} value `{v}`"),
        }),
        _ => Err(Error::GraphFormat {
            line,
            message: format!("expected {key}=<value>, got `{word}`"),
        }),
    }
}

impl fmt::Display for DualGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (v, data) in self.vertices.iter().enumerate() {
            writeln!(f, "vertex {v} genus={} degree={}", data.genus, data.degree)?;
        }
        for (a, b) in &self.edges {
            writeln!(f, "edge {a} {b}")?;
        }
        for (label, v) in &self.legs {
            writeln!(f, "leg {label} {v}")?;
        }
        Ok(())
    }
}

/// Result of a stability check, with one entry per violated clause.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilityReport {
    pub stable: bool,
    pub violations: Vec<String>,
}
