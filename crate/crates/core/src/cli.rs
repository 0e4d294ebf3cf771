//! Command-line surface: one subcommand per operation, deterministic
//! line-oriented `key = value` output.
//!
//! Exit conventions (implemented by the binary): 0 on success, 1 on any
//! user error (bad flags, parse errors, violated preconditions), 2 on an
//! internal error.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::chern;
use crate::error::{Error, Result};
use crate::moduli::{self, DualGraph, ModuliProblem};
use crate::sheafcalc::{self, MapDatum};
use crate::superideal::{SuperIdeal, TruncationBound};
use crate::superring::{infer_ring, parse_in_ring};
use crate::superscheme::SplitScheme;

#[derive(Debug, Parser)]
#[command(
    name = "supergeom",
    version,
    about = "Exact computations for split projective super-geometry",
    long_about = None
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Bosonic truncation of an expression: delete every term with an odd factor
    Truncate {
        /// Expression, e.g. "x + t1*t2"
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Normal form of an expression modulo a degree-truncated ideal
    Nf {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// Semicolon-separated generators, e.g. "t1; x^2 - t1*t2"
        #[arg(long, allow_hyphen_values = true)]
        ideal: String,
        /// Total-degree truncation bound
        #[arg(long)]
        degree: usize,
    },
    /// Ideal membership up to a degree bound
    Member {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long, allow_hyphen_values = true)]
        ideal: String,
        #[arg(long)]
        degree: usize,
    },
    /// Virtual super-dimension of a stable-map moduli problem
    Vsdim {
        /// Target: P(p|q) or "split m=<m> V=<a1,a2,...>"
        #[arg(long)]
        target: String,
        #[arg(long)]
        g: u32,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u64,
    },
    /// Coefficient-space parametrization count for maps into P(p|q)
    Witten {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        q: u32,
        #[arg(long)]
        d: u64,
    },
    /// Obstruction vanishing for degree-d genus-zero maps
    Convexity {
        #[arg(long)]
        target: String,
        #[arg(long)]
        d: u64,
    },
    /// Rank of the fermionic direction sheaf on an irreducible fiber
    Qrank {
        #[arg(long)]
        target: String,
        #[arg(long)]
        d: u64,
    },
    /// Check a dual graph against a moduli problem
    Stable {
        /// Graph file in the vertex/edge/leg format
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        g: u32,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u64,
    },
    /// Contract destabilizing components of the underlying marked curve
    Stabilize {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        g: u32,
        #[arg(long)]
        n: u32,
    },
    /// Forget a marked point and restabilize
    Forget {
        #[arg(long)]
        graph: PathBuf,
        /// Label of the marked point to forget
        #[arg(long)]
        point: u32,
        #[arg(long)]
        g: u32,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u64,
    },
    /// List genus-zero stable map graphs up to isomorphism
    Enumerate {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u64,
    },
    /// Total Chern class of a sum of line bundles on P^m
    Chern {
        /// Comma-separated twists, e.g. "-1,-1" (empty for rank zero)
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        twists: String,
        #[arg(long)]
        m: u32,
    },
    /// Todd class of the tangent sheaf of P^m and its integral
    Todd {
        #[arg(long)]
        m: u32,
    },
    /// Super-Calabi-Yau test: vanishing of the canonical degree
    Scy {
        #[arg(long)]
        target: String,
    },
}

/// Dispatch a parsed command; the returned report ends with a newline.
pub fn run(cli: Cli) -> Result<String> {
    let mut out = String::new();
    match cli.command {
        Command::Truncate { expr } => {
            let ring = infer_ring(&[expr.as_str()])?;
            let p = parse_in_ring(&expr, &ring)?;
            line(&mut out, "result", p.tau_b());
        }
        Command::Nf {
            expr,
            ideal,
            degree,
        } => {
            let (p, ideal) = parse_ideal_instance(&expr, &ideal)?;
            let nf = ideal.normal_form(&p, TruncationBound(degree))?;
            line(&mut out, "normal_form", nf);
            line(&mut out, "bound", degree);
        }
        Command::Member {
            expr,
            ideal,
            degree,
        } => {
            let (p, ideal) = parse_ideal_instance(&expr, &ideal)?;
            let verdict = ideal.membership(&p, TruncationBound(degree))?;
            line(&mut out, "member", verdict);
            line(&mut out, "bound", degree);
        }
        Command::Vsdim { target, g, n, d } => {
            let problem = ModuliProblem::new(g, n, parse_target(&target)?, d);
            line(&mut out, "vsdim", problem.vsdim());
        }
        Command::Witten { p, q, d } => {
            let count = moduli::witten_count(p, q, d)?;
            line(&mut out, "bosonic", count.bosonic);
            line(&mut out, "fermionic", count.fermionic);
            line(&mut out, "sdim", count.sdim());
        }
        Command::Convexity { target, d } => {
            let report =
                sheafcalc::convexity_check(&parse_target(&target)?, MapDatum { degree: d });
            line(&mut out, "bosonic_ok", report.bosonic_ok);
            line(&mut out, "fermionic_ok", report.fermionic_ok);
        }
        Command::Qrank { target, d } => {
            let rank = sheafcalc::q_rank(&parse_target(&target)?, MapDatum { degree: d });
            line(&mut out, "qrank", rank);
        }
        Command::Stable { graph, g, n, d } => {
            let graph = read_graph(&graph)?;
            let report = graph.stability_report(g, n, d);
            line(&mut out, "stable", report.stable);
            for violation in &report.violations {
                line(&mut out, "violation", violation);
            }
        }
        Command::Stabilize { graph, g, n } => {
            let graph = read_graph(&graph)?;
            let stabilized = moduli::stabilize_curve(&graph, g, n)?;
            out.push_str(&stabilized.to_string());
        }
        Command::Forget {
            graph,
            point,
            g,
            n,
            d,
        } => {
            let graph = read_graph(&graph)?;
            let reduced = moduli::forget_point(&graph, g, n, d, point)?;
            out.push_str(&reduced.to_string());
        }
        Command::Enumerate { n, d } => {
            let bound = moduli::vertex_bound(n, d);
            let graphs = moduli::enumerate_genus_zero(n, d, bound)?;
            line(&mut out, "count", graphs.len());
            for (i, graph) in graphs.iter().enumerate() {
                let compact = graph.to_string().lines().collect::<Vec<_>>().join("; ");
                line(&mut out, &format!("graph {}", i + 1), compact);
            }
        }
        Command::Chern { twists, m } => {
            let bundle = parse_twists(&twists, m)?;
            line(&mut out, "rank", bundle.rank());
            line(&mut out, "chern", chern::total_chern(&bundle)?);
        }
        Command::Todd { m } => {
            let class = chern::todd_tangent(m);
            line(&mut out, "todd", &class);
            line(&mut out, "integral", class.integrate());
        }
        Command::Scy { target } => {
            let target = parse_target(&target)?;
            line(&mut out, "sdim", target.sdim());
            line(&mut out, "canonical_degree", target.canonical_degree());
            line(&mut out, "super_calabi_yau", target.is_super_calabi_yau());
        }
    }
    Ok(out)
}

fn line(out: &mut String, key: &str, value: impl std::fmt::Display) {
    writeln!(out, "{key} = {value}").expect("writing to a string");
}

fn parse_ideal_instance(
    expr: &str,
    ideal: &str,
) -> Result<(crate::superring::SuperPolynomial, SuperIdeal)> {
    let generator_sources: Vec<&str> = ideal
        .split(';')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect();
    let mut sources = vec![expr];
    sources.extend(&generator_sources);
    let ring = infer_ring(&sources)?;
    let p = parse_in_ring(expr, &ring)?;
    let generators = generator_sources
        .iter()
        .map(|g| parse_in_ring(g, &ring))
        .collect::<Result<Vec<_>>>()?;
    Ok((p, SuperIdeal::new(&ring, generators)?))
}

/// Parse a target descriptor: `P(p|q)` or `split m=<m> V=<a1,a2,...>`.
pub fn parse_target(input: &str) -> Result<SplitScheme> {
    let text = input.trim();
    let fail = |message: &str| Error::InvalidTarget {
        input: input.to_string(),
        message: message.to_string(),
    };
    if let Some(inner) = text
        .strip_prefix("P(")
        .and_then(|rest| rest.strip_suffix(')'))
    {
        let (p, q) = inner
            .split_once('|')
            .ok_or_else(|| fail("expected P(p|q)"))?;
        let p: u32 = p.trim().parse().map_err(|_| fail("invalid p"))?;
        let q: u32 = q.trim().parse().map_err(|_| fail("invalid q"))?;
        return Ok(SplitScheme::projective_superspace(p, q));
    }
    let mut words = text.split_whitespace();
    if words.next() != Some("split") {
        return Err(fail("expected P(p|q) or split m=<m> V=<a1,a2,...>"));
    }
    let mut m: Option<u32> = None;
    let mut twists: Option<Vec<i64>> = None;
    for word in words {
        match word.split_once('=') {
            Some(("m", value)) => {
                m = Some(value.parse().map_err(|_| fail("invalid m"))?);
            }
            Some(("V", value)) => {
                let mut parsed = Vec::new();
                for part in value.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                    parsed.push(part.parse().map_err(|_| fail("invalid twist"))?);
                }
                twists = Some(parsed);
            }
            _ => return Err(fail("expected m=<m> and V=<a1,a2,...>")),
        }
    }
    let m = m.ok_or_else(|| fail("missing m=<m>"))?;
    let twists = twists.ok_or_else(|| fail("missing V=<a1,a2,...>"))?;
    SplitScheme::new(m, twists)
}

fn parse_twists(input: &str, m: u32) -> Result<sheafcalc::BundleSum> {
    let mut twists = Vec::new();
    for part in input.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        twists.push(part.parse().map_err(|_| Error::InvalidTarget {
            input: input.to_string(),
            message: format!("invalid twist `{part}`"),
        })?);
    }
    Ok(sheafcalc::BundleSum::new(twists, sheafcalc::Base::Pm(m)))
}

fn read_graph(path: &PathBuf) -> Result<DualGraph> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("cannot read {}: {e}", path.display())))?;
    DualGraph::parse(&text)
}

// used by tests to build graphs without a file
pub fn graph_from_parts(
    vertices: Vec<(u32, u64)>,
    edges: Vec<(usize, usize)>,
    legs: Vec<(u32, usize)>,
) -> Result<DualGraph> {
    DualGraph::new(
        vertices
            .into_iter()
            .map(|(genus, degree)| moduli::VertexData { genus, degree })
            .collect(),
        edges,
        legs.into_iter().collect::<BTreeMap<_, _>>(),
    )
}
