//! Named graphs and seeded random families.
//!
//! Vertex numberings are fixed so that certificates stay comparable
//! between runs:
//!
//! * `k4`: complete graph on `0..4`.
//! * `k33`: parts `{0,1,2}` and `{3,4,5}`.
//! * `prism` (B6): triangles `0 1 2` and `3 4 5`, rungs `i, i+3`.
//! * `b8`: edges `01 02 05 14 16 23 25 34 37 46 57 67`.
//! * `petersen`: outer cycle `0..5`, spokes `i, i+5`, inner pentagram
//!   `5+i, 5+(i+2)%5`.
//! * `cube`: vertices are 3-bit words, adjacent when they differ in one bit.
//! * `octahedron`: `K6` minus the antipodal pairs `03 15 24`.
//! * `icosahedron`: the drawing numbered top to bottom, left to right.
//! * `dodecahedron`: Hamilton cycle `0..20` plus chords from LCF
//!   `[10,7,4,-4,-7,10,-4,7,-7,4]^2`.
//! * `wheel(n)`: rim cycle `0..n`, hub `n`.
//! * `double_wheel(n)`: rim cycle `0..n`, hubs `n` and `n+1` adjacent to each
//!   other; hub `n` sees rim `0..ceil(n/2)`, hub `n+1` the rest.
//! * `carvalho10`: the 10-vertex, 17-edge 3-connected graph with independent
//!   perfect matching polytope, numbered top to bottom, left to right.
//! * `no_pm_cubic16`: gadget `i` in `0..3` has `a,b,c,w,y = 5i..5i+5` with
//!   edges `ab aw ac bc cw by wy`; hub `15` is joined to every `y`.
//! * `halin(seed)`: tree vertices in creation order (root `0`); the leaf
//!   cycle follows depth-first leaf order.
//! * `random_regular(k, n, seed)`: configuration-model pairing, resampled
//!   until simple.

use super::{Graph, VertexId};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenerateError {
    #[error("invalid parameters for {family}: {reason}")]
    InvalidParams { family: &'static str, reason: String },
    #[error("no simple {k}-regular graph on {n} vertices after {attempts} pairings")]
    NoSimplePairing { k: usize, n: usize, attempts: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    K4,
    K33,
    Prism,
    B8,
    Petersen,
    Cube,
    Octahedron,
    Icosahedron,
    Dodecahedron,
    Wheel { n: usize },
    DoubleWheel { n: usize },
    Halin { seed: u64 },
    Carvalho10,
    NoPmCubic16,
    RandomRegular { k: usize, n: usize, seed: u64 },
    Cycle { n: usize },
    Path { n: usize },
    Complete { n: usize },
    /// Two vertices joined by three parallel edges.
    Theta,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::K4 => "k4",
            Family::K33 => "k33",
            Family::Prism => "prism",
            Family::B8 => "b8",
            Family::Petersen => "petersen",
            Family::Cube => "cube",
            Family::Octahedron => "octahedron",
            Family::Icosahedron => "icosahedron",
            Family::Dodecahedron => "dodecahedron",
            Family::Wheel { .. } => "wheel",
            Family::DoubleWheel { .. } => "double_wheel",
            Family::Halin { .. } => "halin",
            Family::Carvalho10 => "carvalho10",
            Family::NoPmCubic16 => "no_pm_cubic16",
            Family::RandomRegular { .. } => "random_regular",
            Family::Cycle { .. } => "cycle",
            Family::Path { .. } => "path",
            Family::Complete { .. } => "complete",
            Family::Theta => "theta",
        }
    }

    /// Whether the family uses a seed.
    pub fn is_seeded(&self) -> bool {
        matches!(self, Family::Halin { .. } | Family::RandomRegular { .. })
    }

    /// The same family with a different seed (no-op for fixed graphs).
    pub fn with_seed(self, seed: u64) -> Self {
        match self {
            Family::Halin { .. } => Family::Halin { seed },
            Family::RandomRegular { k, n, .. } => Family::RandomRegular { k, n, seed },
            other => other,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Wheel { n }
            | Family::DoubleWheel { n }
            | Family::Cycle { n }
            | Family::Path { n }
            | Family::Complete { n } => write!(f, "{}({n})", self.name()),
            Family::Halin { seed } => write!(f, "halin(seed={seed})"),
            Family::RandomRegular { k, n, seed } => {
                write!(f, "random_regular(k={k}, n={n}, seed={seed})")
            }
            _ => f.write_str(self.name()),
        }
    }
}

fn build(n: usize, edges: &[(VertexId, VertexId)]) -> Graph {
    Graph::new(n, edges.iter().copied()).expect("generator edges are valid")
}

fn invalid(family: &'static str, reason: impl Into<String>) -> GenerateError {
    GenerateError::InvalidParams {
        family,
        reason: reason.into(),
    }
}

pub fn generate(family: Family) -> Result<Graph, GenerateError> {
    Ok(match family {
        Family::K4 => complete(4),
        Family::K33 => build(
            6,
            &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)],
        ),
        Family::Prism => build(
            6,
            &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
        ),
        Family::B8 => build(
            8,
            &[
                (0, 1), (2, 3), (3, 4), (3, 7), (0, 2), (0, 5),
                (1, 4), (1, 6), (2, 5), (4, 6), (5, 7), (6, 7),
            ],
        ),
        Family::Petersen => {
            let mut edges = Vec::new();
            for i in 0..5 {
                edges.push((i, (i + 1) % 5));
                edges.push((i, i + 5));
                edges.push((5 + i, 5 + (i + 2) % 5));
            }
            build(10, &edges)
        }
        Family::Cube => {
            let edges: Vec<_> = (0..8usize)
                .flat_map(|u| (0..3).map(move |b| (u, u ^ (1 << b))))
                .filter(|&(u, v)| u < v)
                .collect();
            build(8, &edges)
        }
        Family::Octahedron => build(
            6,
            &[
                (0, 1), (0, 2), (0, 4), (0, 5), (1, 2), (1, 3),
                (1, 4), (2, 3), (2, 5), (3, 4), (3, 5), (4, 5),
            ],
        ),
        Family::Icosahedron => build(
            12,
            &[
                (0, 1), (0, 2), (0, 5), (0, 10), (0, 11), (1, 2), (1, 3), (1, 4),
                (1, 5), (2, 3), (2, 6), (2, 10), (3, 4), (3, 6), (3, 7), (4, 5),
                (4, 7), (4, 8), (5, 8), (5, 11), (6, 7), (6, 9), (6, 10), (7, 8),
                (7, 9), (8, 9), (8, 11), (9, 10), (9, 11), (10, 11),
            ],
        ),
        Family::Dodecahedron => {
            const LCF: [isize; 10] = [10, 7, 4, -4, -7, 10, -4, 7, -7, 4];
            let mut edges = Vec::new();
            for i in 0..20usize {
                edges.push((i, (i + 1) % 20));
                let j = (i as isize + LCF[i % 10]).rem_euclid(20) as usize;
                if i < j {
                    edges.push((i, j));
                }
            }
            build(20, &edges)
        }
        Family::Wheel { n } => {
            if n < 3 {
                return Err(invalid("wheel", format!("rim length {n} < 3")));
            }
            let mut edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            edges.extend((0..n).map(|i| (i, n)));
            build(n + 1, &edges)
        }
        Family::DoubleWheel { n } => {
            if n < 4 {
                return Err(invalid("double_wheel", format!("rim length {n} < 4")));
            }
            let (h1, h2) = (n, n + 1);
            let split = n.div_ceil(2);
            let mut edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            edges.push((h1, h2));
            edges.extend((0..n).map(|i| (i, if i < split { h1 } else { h2 })));
            build(n + 2, &edges)
        }
        Family::Halin { seed } => halin(seed),
        Family::Carvalho10 => build(
            10,
            &[
                (0, 1), (0, 2), (0, 3), (1, 4), (1, 6), (1, 8), (2, 4), (2, 5), (2, 8),
                (2, 9), (3, 5), (3, 7), (3, 9), (4, 6), (5, 7), (6, 7), (8, 9),
            ],
        ),
        Family::NoPmCubic16 => {
            let hub = 15;
            let mut edges = Vec::new();
            for i in 0..3 {
                let [a, b, c, w, y] = [0, 1, 2, 3, 4].map(|k| 5 * i + k);
                edges.extend([(a, b), (a, w), (a, c), (b, c), (c, w), (b, y), (w, y), (y, hub)]);
            }
            build(16, &edges)
        }
        Family::RandomRegular { k, n, seed } => random_regular(k, n, seed)?,
        Family::Cycle { n } => {
            if n < 3 {
                return Err(invalid("cycle", format!("length {n} < 3")));
            }
            build(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>())
        }
        Family::Path { n } => {
            if n == 0 {
                return Err(invalid("path", "no vertices"));
            }
            build(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>())
        }
        Family::Complete { n } => complete(n),
        Family::Theta => build(2, &[(0, 1), (0, 1), (0, 1)]),
    })
}

fn complete(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    build(n, &edges)
}

fn halin(seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let root_degree = rng.gen_range(3..=4);
    let mut children: Vec<Vec<VertexId>> = vec![Vec::new()];
    let add_children = |children: &mut Vec<Vec<VertexId>>, parent: VertexId, count: usize| {
        for _ in 0..count {
            let id = children.len();
            children.push(Vec::new());
            children[parent].push(id);
        }
    };
    add_children(&mut children, 0, root_degree);
    let expansions = rng.gen_range(0..=5);
    for _ in 0..expansions {
        let leaves: Vec<VertexId> = (1..children.len()).filter(|&v| children[v].is_empty()).collect();
        let leaf = *leaves.choose(&mut rng).expect("tree has leaves");
        // one edge to the parent plus at least two children keeps degree >= 3
        let count = rng.gen_range(2..=3);
        add_children(&mut children, leaf, count);
    }

    let mut edges = Vec::new();
    let mut leaf_order = Vec::new();
    let mut stack = vec![0];
    while let Some(v) = stack.pop() {
        if v != 0 && children[v].is_empty() {
            leaf_order.push(v);
        }
        for &c in children[v].iter().rev() {
            edges.push((v, c));
            stack.push(c);
        }
    }
    for i in 0..leaf_order.len() {
        edges.push((leaf_order[i], leaf_order[(i + 1) % leaf_order.len()]));
    }
    build(children.len(), &edges)
}

const MAX_PAIRING_ATTEMPTS: usize = 100_000;

fn random_regular(k: usize, n: usize, seed: u64) -> Result<Graph, GenerateError> {
    if k >= n {
        return Err(invalid("random_regular", format!("degree {k} must be below order {n}")));
    }
    if k * n % 2 == 1 {
        return Err(invalid("random_regular", format!("k*n = {} is odd", k * n)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<VertexId> = (0..n).flat_map(|v| std::iter::repeat_n(v, k)).collect();
    'attempt: for _ in 0..MAX_PAIRING_ATTEMPTS {
        points.shuffle(&mut rng);
        let mut edges: Vec<(VertexId, VertexId)> = Vec::with_capacity(points.len() / 2);
        for pair in points.chunks_exact(2) {
            let (u, v) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            if u == v {
                continue 'attempt;
            }
            edges.push((u, v));
        }
        edges.sort_unstable();
        if edges.windows(2).any(|w| w[0] == w[1]) {
            continue;
        }
        return Ok(build(n, &edges));
    }
    Err(GenerateError::NoSimplePairing {
        k,
        n,
        attempts: MAX_PAIRING_ATTEMPTS,
    })
}
