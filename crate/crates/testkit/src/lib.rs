//! Brute-force oracles and graph corpora for tests.
//!
//! Every oracle here works from raw edge subsets and shares no search code
//! with the library, so agreement between the two is meaningful.

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashSet;
use tripm_core::graph::{EdgeId, Graph, VertexId};

fn is_matching(g: &Graph, edges: &[EdgeId]) -> bool {
    let mut used = vec![false; g.vertex_count()];
    for &e in edges {
        let (u, v) = g.endpoints(e);
        if used[u] || used[v] {
            return false;
        }
        used[u] = true;
        used[v] = true;
    }
    true
}

/// Largest `k` such that some `k` edges form a matching.
pub fn max_matching_size(g: &Graph) -> usize {
    let m = g.edge_count();
    (1..=g.vertex_count() / 2)
        .rev()
        .find(|&k| (0..m).combinations(k).any(|c| is_matching(g, &c)))
        .unwrap_or(0)
}

/// All perfect matchings as sorted edge-id lists.
pub fn perfect_matchings(g: &Graph) -> Vec<Vec<EdgeId>> {
    let n = g.vertex_count();
    if n % 2 == 1 {
        return Vec::new();
    }
    (0..g.edge_count())
        .combinations(n / 2)
        .filter(|c| is_matching(g, c))
        .collect()
}

/// Some three perfect matchings (repetition allowed) share no edge.
pub fn has_triple(g: &Graph) -> bool {
    let pms: Vec<HashSet<EdgeId>> = perfect_matchings(g).into_iter().map(|m| m.into_iter().collect()).collect();
    let k = pms.len();
    (0..k).any(|i| {
        (i..k).any(|j| {
            (j..k).any(|l| pms[i].iter().all(|e| !(pms[j].contains(e) && pms[l].contains(e))))
        })
    })
}

/// The edge set splits into three perfect matchings.
pub fn is_three_edge_colorable(g: &Graph) -> bool {
    let m = g.edge_count();
    let pms = perfect_matchings(g);
    let sets: Vec<u64> = pms.iter().map(|p| p.iter().fold(0u64, |acc, &e| acc | 1 << e)).collect();
    assert!(m <= 64, "oracle limited to 64 edges");
    let all = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
    sets.iter().tuple_combinations().any(|(a, b, c)| a | b | c == all && a & b == 0 && a & c == 0 && b & c == 0)
}

/// Lengths of the cycles of a 2-regular spanning edge set, or `None` if the
/// set is not 2-regular.
fn cycle_lengths(g: &Graph, edges: &[EdgeId]) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let mut deg = vec![0; n];
    for &e in edges {
        let (u, v) = g.endpoints(e);
        deg[u] += 1;
        deg[v] += 1;
    }
    if deg.iter().any(|&d| d != 2) {
        return None;
    }
    // union-find over the chosen edges
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for &e in edges {
        let (u, v) = g.endpoints(e);
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        parent[a] = b;
    }
    let mut sizes = vec![0; n];
    for v in 0..n {
        let r = find(&mut parent, v);
        sizes[r] += 1;
    }
    Some(sizes.into_iter().filter(|&s| s > 0).collect())
}

/// All 2-factors, each as the list of its cycle lengths.
pub fn two_factors(g: &Graph) -> Vec<Vec<usize>> {
    (0..g.edge_count())
        .combinations(g.vertex_count())
        .filter_map(|c| cycle_lengths(g, &c))
        .collect()
}

pub fn has_even_2factor(g: &Graph) -> bool {
    two_factors(g).iter().any(|f| f.iter().all(|l| l % 2 == 0))
}

pub fn has_hamilton_cycle(g: &Graph) -> bool {
    two_factors(g).iter().any(|f| f.len() == 1)
}

/// Connected with every edge in some perfect matching.
pub fn is_matching_covered(g: &Graph) -> bool {
    if g.vertex_count() < 2 || !is_connected(g) {
        return false;
    }
    let pms = perfect_matchings(g);
    (0..g.edge_count()).all(|e| pms.iter().any(|p| p.contains(&e)))
}

pub fn is_connected(g: &Graph) -> bool {
    let n = g.vertex_count();
    if n == 0 {
        return false;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(x) = stack.pop() {
        for &(y, _) in g.incident(x) {
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Adjacency rows as bitmasks; simple graphs on at most 11 vertices.
type Rows = Vec<u16>;

fn code(rows: &Rows, order: &[usize]) -> u64 {
    let mut c = 0u64;
    for i in 0..order.len() {
        for j in i + 1..order.len() {
            c = c << 1 | u64::from(rows[order[i]] >> order[j] & 1);
        }
    }
    c
}

/// Colour refinement from degrees until stable; returns a colour per vertex
/// with colours numbered by an isomorphism-invariant order.
fn refine(rows: &Rows) -> Vec<usize> {
    let n = rows.len();
    let mut colors: Vec<usize> = rows.iter().map(|r| r.count_ones() as usize).collect();
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nbrs: Vec<usize> = (0..n).filter(|&w| rows[v] >> w & 1 == 1).map(|w| colors[w]).collect();
                nbrs.sort_unstable();
                (colors[v], nbrs)
            })
            .collect();
        let mut distinct = signatures.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = signatures
            .iter()
            .map(|s| distinct.binary_search(s).expect("present"))
            .collect();
        let old_classes = colors.iter().collect::<HashSet<_>>().len();
        let new_classes = distinct.len();
        colors = next;
        if new_classes == old_classes {
            return colors;
        }
    }
}

/// Canonical code: the largest adjacency code over all orderings that list
/// colour classes in order.
fn canonical(rows: &Rows) -> u64 {
    let colors = refine(rows);
    let mut cells: Vec<Vec<usize>> = Vec::new();
    let max = colors.iter().copied().max().map_or(0, |m| m + 1);
    for c in 0..max {
        let cell: Vec<usize> = (0..rows.len()).filter(|&v| colors[v] == c).collect();
        if !cell.is_empty() {
            cells.push(cell);
        }
    }
    let mut best = 0;
    let mut order = Vec::with_capacity(rows.len());
    fn go(cells: &[Vec<usize>], idx: usize, order: &mut Vec<usize>, rows: &Rows, best: &mut u64) {
        if idx == cells.len() {
            *best = (*best).max(code(rows, order));
            return;
        }
        for perm in cells[idx].iter().copied().permutations(cells[idx].len()) {
            let len = order.len();
            order.extend(perm);
            go(cells, idx + 1, order, rows, best);
            order.truncate(len);
        }
    }
    go(&cells, 0, &mut order, rows, &mut best);
    best
}

fn rows_to_graph(rows: &Rows) -> Graph {
    let n = rows.len();
    let edges = (0..n).flat_map(|u| (u + 1..n).filter(move |&v| rows[u] >> v & 1 == 1).map(move |v| (u, v)));
    Graph::new(n, edges.collect::<Vec<_>>()).expect("simple graph")
}

/// Every simple graph on `n` vertices up to isomorphism (connected or not),
/// built by adding a vertex to each graph on `n - 1` vertices.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 9, "exhaustive generation limited to 9 vertices");
    let mut layer: Vec<Rows> = vec![Vec::new()];
    for k in 1..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for rows in &layer {
            for mask in 0u16..(1 << (k - 1)) {
                let mut r = rows.clone();
                for (v, row) in r.iter_mut().enumerate() {
                    if mask >> v & 1 == 1 {
                        *row |= 1 << (k - 1);
                    }
                }
                r.push(mask);
                if seen.insert(canonical(&r)) {
                    next.push(r);
                }
            }
        }
        layer = next;
    }
    layer.iter().map(rows_to_graph).collect()
}

pub fn connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n).into_iter().filter(is_connected).collect()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi graph with edge probability `p`.
pub fn random_graph(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let edges: Vec<(VertexId, VertexId)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::new(n, edges).expect("simple graph")
}

/// Replaces `steps` randomly chosen edges (of the growing graph) by paths of
/// length three, then adds `chords` random extra edges. Returns the graph
/// and the edge set of the bisubdivision inside it.
pub fn random_bisubdivision(
    h: &Graph,
    steps: usize,
    chords: usize,
    rng: &mut impl Rng,
) -> (Graph, tripm_core::EdgeSet) {
    let mut n = h.vertex_count();
    let mut edges: Vec<(VertexId, VertexId)> = h.edges().to_vec();
    for _ in 0..steps {
        let i = rng.gen_range(0..edges.len());
        let (x, y) = edges.swap_remove(i);
        let (a, b) = (n, n + 1);
        n += 2;
        edges.extend([(x, a), (a, b), (b, y)]);
    }
    let spanning_pairs = edges.clone();
    for _ in 0..chords {
        let u = rng.gen_range(0..n);
        let mut v = rng.gen_range(0..n);
        while v == u {
            v = rng.gen_range(0..n);
        }
        edges.push((u, v));
    }
    edges.shuffle(rng);
    let g = Graph::new(n, edges).expect("loopless");
    let spanning = g.edge_set_from_pairs(spanning_pairs).expect("subdivision edges exist");
    (g, spanning)
}
