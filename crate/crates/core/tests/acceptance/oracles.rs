//! Independent oracles the acceptance criteria are checked against. Each
//! one recomputes its answer from scratch, sharing no machinery with the
//! implementation path it validates.

use std::collections::BTreeMap;

use num::{BigRational, One, Zero};

use supergeom::superring::{Monomial, Ring, SuperPolynomial};

// ---- dense row-reduction membership oracle ----

/// Decide membership of `p` in the span of { m * g : deg(m * g) <= bound }
/// by comparing the ranks of dense coefficient matrices.
pub fn membership_oracle(
    generators: &[SuperPolynomial],
    p: &SuperPolynomial,
    bound: usize,
) -> bool {
    let ring = p.ring();
    let mut products: Vec<SuperPolynomial> = Vec::new();
    for g in generators {
        for m in all_monomials(ring, bound) {
            let product = g.mul_term(&m, &BigRational::one());
            if !product.is_zero() && product.degree().unwrap_or(0) <= bound {
                products.push(product);
            }
        }
    }
    // dense columns over every monomial that appears
    let mut columns: BTreeMap<Monomial, usize> = BTreeMap::new();
    for poly in products.iter().chain(std::iter::once(p)) {
        for (mono, _) in poly.terms() {
            let next = columns.len();
            columns.entry(mono.clone()).or_insert(next);
        }
    }
    let width = columns.len().max(1);
    let densify = |poly: &SuperPolynomial| {
        let mut row = vec![BigRational::zero(); width];
        for (mono, coeff) in poly.terms() {
            row[columns[mono]] = coeff.clone();
        }
        row
    };
    let base: Vec<Vec<BigRational>> = products.iter().map(densify).collect();
    let mut extended = base.clone();
    extended.push(densify(p));
    rank(base) == rank(extended)
}

fn all_monomials(ring: &Ring, bound: usize) -> Vec<Monomial> {
    let mut evens = Vec::new();
    build_exponents(ring.num_even(), bound, &mut Vec::new(), &mut evens);
    let mut out = Vec::new();
    for even in evens {
        let used: usize = even.iter().map(|&e| e as usize).sum();
        for bits in 0u64..(1 << ring.num_odd()) {
            if used + bits.count_ones() as usize <= bound {
                let odd: Vec<usize> = (0..ring.num_odd())
                    .filter(|i| bits & (1 << i) != 0)
                    .collect();
                out.push(Monomial::new(even.clone(), &odd));
            }
        }
    }
    out
}

fn build_exponents(vars: usize, budget: usize, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if current.len() == vars {
        out.push(current.clone());
        return;
    }
    for e in 0..=budget {
        current.push(e as u32);
        build_exponents(vars, budget - e, current, out);
        current.pop();
    }
}

fn rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let factor = &row[col] / &pivot_row[col];
                for (target, source) in row[col..cols].iter_mut().zip(&pivot_row[col..cols]) {
                    let delta = source * &factor;
                    *target = &*target - &delta;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

// ---- naive stable-graph generator ----

/// A decorated tree in plain labeled form: genus-zero vertices with map
/// degrees, tree edges, and legs[i] carrying label i+1.
#[derive(Debug, Clone)]
pub struct NaiveGraph {
    pub degrees: Vec<u64>,
    pub edges: Vec<(usize, usize)>,
    pub legs: Vec<usize>,
}

/// Enumerate genus-zero stable map graphs by brute force: every tree
/// shape (leaf growth, deduplicated by pairwise isomorphism search),
/// every degree composition, every leg placement, keeping the stable
/// ones and deduplicating again by isomorphism search.
pub fn naive_enumerate(markings: u32, degree: u64) -> Vec<NaiveGraph> {
    let cap = (markings as i64 + 2 * degree as i64 - 2).max(1) as usize;
    let mut classes: Vec<NaiveGraph> = Vec::new();
    for shape in naive_shapes(cap) {
        let k = shape.len() + 1;
        for degrees in compositions(degree, k) {
            for legs in placements(markings as usize, k) {
                let candidate = NaiveGraph {
                    degrees: degrees.clone(),
                    edges: shape.clone(),
                    legs,
                };
                if !naive_stable(&candidate) {
                    continue;
                }
                if !classes.iter().any(|g| isomorphic(g, &candidate)) {
                    classes.push(candidate);
                }
            }
        }
    }
    classes
}

/// Stability re-derived from scratch: every degree-zero vertex of the
/// tree carries at least three legs-plus-edge-ends.
pub fn naive_stable(graph: &NaiveGraph) -> bool {
    let k = graph.degrees.len();
    (0..k).all(|v| {
        graph.degrees[v] > 0 || {
            let ends = graph
                .edges
                .iter()
                .map(|&(a, b)| usize::from(a == v) + usize::from(b == v))
                .sum::<usize>();
            let legs = graph.legs.iter().filter(|&&w| w == v).count();
            ends + legs >= 3
        }
    })
}

fn naive_shapes(max_vertices: usize) -> Vec<Vec<(usize, usize)>> {
    let mut all = vec![Vec::new()];
    let mut frontier: Vec<Vec<(usize, usize)>> = vec![Vec::new()];
    for k in 2..=max_vertices {
        let mut next: Vec<Vec<(usize, usize)>> = Vec::new();
        for edges in &frontier {
            for attach in 0..k - 1 {
                let mut grown = edges.clone();
                grown.push((attach, k - 1));
                let candidate = NaiveGraph {
                    degrees: vec![0; k],
                    edges: grown.clone(),
                    legs: Vec::new(),
                };
                let duplicate = next.iter().any(|existing| {
                    isomorphic(
                        &NaiveGraph {
                            degrees: vec![0; k],
                            edges: existing.clone(),
                            legs: Vec::new(),
                        },
                        &candidate,
                    )
                });
                if !duplicate {
                    next.push(grown);
                }
            }
        }
        all.extend(next.iter().cloned());
        frontier = next;
    }
    all
}

fn compositions(total: u64, parts: usize) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(parts);
    fn recurse(remaining: u64, parts: usize, current: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if current.len() == parts {
            if remaining == 0 {
                out.push(current.clone());
            }
            return;
        }
        for d in 0..=remaining {
            current.push(d);
            recurse(remaining - d, parts, current, out);
            current.pop();
        }
    }
    recurse(total, parts, &mut current, &mut out);
    out
}

fn placements(markings: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(markings);
    fn recurse(markings: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == markings {
            out.push(current.clone());
            return;
        }
        for v in 0..k {
            current.push(v);
            recurse(markings, k, current, out);
            current.pop();
        }
    }
    recurse(markings, k, &mut current, &mut out);
    out
}

/// Isomorphism of decorated labeled trees by backtracking over vertex
/// bijections. Legs are labeled, so their images are forced; degrees and
/// adjacency are checked along the way.
pub fn isomorphic(a: &NaiveGraph, b: &NaiveGraph) -> bool {
    let k = a.degrees.len();
    if k != b.degrees.len() || a.edges.len() != b.edges.len() || a.legs.len() != b.legs.len() {
        return false;
    }
    let adjacency = |g: &NaiveGraph| {
        let mut adj = vec![vec![0usize; k]; k];
        for &(x, y) in &g.edges {
            adj[x][y] += 1;
            adj[y][x] += 1;
        }
        adj
    };
    let adj_a = adjacency(a);
    let adj_b = adjacency(b);
    let mut image = vec![usize::MAX; k];
    let mut used = vec![false; k];
    // legs force part of the bijection
    for (i, &va) in a.legs.iter().enumerate() {
        let vb = b.legs[i];
        if image[va] == usize::MAX {
            if used[vb] {
                return false;
            }
            image[va] = vb;
            used[vb] = true;
        } else if image[va] != vb {
            return false;
        }
    }
    fn consistent(
        v: usize,
        w: usize,
        image: &[usize],
        a: &NaiveGraph,
        b: &NaiveGraph,
        adj_a: &[Vec<usize>],
        adj_b: &[Vec<usize>],
    ) -> bool {
        if a.degrees[v] != b.degrees[w] {
            return false;
        }
        for (u, &img) in image.iter().enumerate() {
            if img != usize::MAX && adj_a[v][u] != adj_b[w][img] {
                return false;
            }
        }
        true
    }
    // seed check for the forced part
    for v in 0..k {
        if image[v] != usize::MAX && !consistent(v, image[v], &image, a, b, &adj_a, &adj_b) {
            return false;
        }
    }
    fn extend(
        v: usize,
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
        a: &NaiveGraph,
        b: &NaiveGraph,
        adj_a: &[Vec<usize>],
        adj_b: &[Vec<usize>],
    ) -> bool {
        let k = image.len();
        if v == k {
            return true;
        }
        if image[v] != usize::MAX {
            return extend(v + 1, image, used, a, b, adj_a, adj_b);
        }
        for w in 0..k {
            if !used[w] && consistent(v, w, image, a, b, adj_a, adj_b) {
                image[v] = w;
                used[w] = true;
                if extend(v + 1, image, used, a, b, adj_a, adj_b) {
                    return true;
                }
                image[v] = usize::MAX;
                used[w] = false;
            }
        }
        false
    }
    extend(0, &mut image, &mut used, a, b, &adj_a, &adj_b)
}

// ---- characteristic class oracles ----

/// Total Chern class of the k-th exterior power by direct subset-sum
/// expansion, as a plain coefficient vector of length m + 1.
pub fn exterior_chern_oracle(twists: &[i64], k: usize, m: usize) -> Vec<BigRational> {
    let mut subsets: Vec<Vec<usize>> = Vec::new();
    subset_recurse(twists.len(), k, 0, &mut Vec::new(), &mut subsets);
    let mut acc = vec![BigRational::zero(); m + 1];
    acc[0] = BigRational::one();
    for subset in subsets {
        let root: i64 = subset.iter().map(|&i| twists[i]).sum();
        // multiply by (1 + root * h)
        let mut next = acc.clone();
        for degree in 1..=m {
            let bump = &acc[degree - 1] * BigRational::from_integer(root.into());
            next[degree] = &next[degree] + &bump;
        }
        acc = next;
    }
    acc
}

fn subset_recurse(
    n: usize,
    k: usize,
    start: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if current.len() == k {
        out.push(current.clone());
        return;
    }
    for i in start..n {
        current.push(i);
        subset_recurse(n, k, i + 1, current, out);
        current.pop();
    }
}

/// Coefficients of t/(1 - e^{-t}) obtained by inverting the power series
/// (1 - e^{-t})/t = sum_j (-t)^j / (j+1)!.
pub fn todd_series_oracle(order: usize) -> Vec<BigRational> {
    let mut denominator = Vec::with_capacity(order + 1);
    let mut factorial = BigRational::one();
    for j in 0..=order {
        factorial *= BigRational::from_integer(((j + 1) as i64).into());
        let mut term = BigRational::one() / factorial.clone();
        if j % 2 == 1 {
            term = -term;
        }
        denominator.push(term);
    }
    // series inversion
    let mut inverse = vec![BigRational::zero(); order + 1];
    inverse[0] = denominator[0].recip();
    for n in 1..=order {
        let mut acc = BigRational::zero();
        for j in 1..=n {
            acc = &acc + &(&denominator[j] * &inverse[n - j]);
        }
        inverse[n] = -(acc / &denominator[0]);
    }
    inverse
}

/// Dimension of the space of degree-k forms in two variables: the section
/// count oracle for twists on the genus-zero curve.
pub fn section_count_oracle(twist: i64) -> u64 {
    if twist < 0 {
        0
    } else {
        // monomials s^a u^b with a + b = twist
        (0..=twist).count() as u64
    }
}
