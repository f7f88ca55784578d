//! Family names accepted by `generate`.

use anyhow::{anyhow, bail, Result};
use tripm_core::graph::edgelist::write_edge_list;
use tripm_core::graph::generators::{generate, Family};
use tripm_core::graph::graph6::write_graph6;
use tripm_core::Graph;

pub const FAMILY_NAMES: &[&str] = &[
    "k4", "k33", "prism", "b8", "petersen", "cube", "octahedron", "icosahedron", "dodecahedron",
    "wheel", "double_wheel", "halin", "carvalho10", "no_pm_cubic16", "random_regular", "cycle",
    "path", "complete", "theta",
];

#[derive(Debug, Clone, Copy, Default)]
pub struct Params {
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub seed: Option<u64>,
}

pub fn family(name: &str, p: Params) -> Result<Family> {
    let need_n = || p.n.ok_or_else(|| anyhow!("family {name} requires --n"));
    let seed = p.seed.unwrap_or(0);
    let family = match name.to_ascii_lowercase().replace('-', "_").as_str() {
        "k4" => Family::K4,
        "k33" | "k3,3" => Family::K33,
        "prism" | "b6" => Family::Prism,
        "b8" => Family::B8,
        "petersen" => Family::Petersen,
        "cube" => Family::Cube,
        "octahedron" => Family::Octahedron,
        "icosahedron" => Family::Icosahedron,
        "dodecahedron" => Family::Dodecahedron,
        "wheel" => Family::Wheel { n: need_n()? },
        "double_wheel" => Family::DoubleWheel { n: need_n()? },
        "halin" => Family::Halin { seed },
        "carvalho10" => Family::Carvalho10,
        "no_pm_cubic16" => Family::NoPmCubic16,
        "random_regular" => Family::RandomRegular {
            k: p.k.ok_or_else(|| anyhow!("family {name} requires --k"))?,
            n: need_n()?,
            seed,
        },
        "cycle" => Family::Cycle { n: need_n()? },
        "path" => Family::Path { n: need_n()? },
        "complete" => Family::Complete { n: need_n()? },
        "theta" => Family::Theta,
        _ => bail!("unknown family {name:?}; known: {}", FAMILY_NAMES.join(", ")),
    };
    Ok(family)
}

/// Graph `i` of a run uses seed `seed + i`.
pub fn generate_many(base: Family, seed: u64, count: usize) -> Result<Vec<Graph>> {
    (0..count as u64)
        .map(|i| Ok(generate(base.with_seed(seed.wrapping_add(i)))?))
        .collect()
}

/// graph6 for simple graphs, an edge list otherwise.
pub fn render(g: &Graph) -> String {
    match write_graph6(g) {
        Ok(line) => line + "\n",
        Err(_) => write_edge_list(g),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_listed_name_resolves() {
        let p = Params { n: Some(6), k: Some(3), seed: Some(1) };
        for name in FAMILY_NAMES {
            let f = family(name, p).unwrap();
            assert_eq!(f.name(), *name);
        }
        assert!(family("wheel", Params::default()).is_err());
        assert!(family("hypercube", p).is_err());
    }

    #[test]
    fn seeded_runs_are_reproducible() {
        let f = family("halin", Params::default()).unwrap();
        let a = generate_many(f, 7, 5).unwrap();
        assert_eq!(a, generate_many(f, 7, 5).unwrap());
        assert_eq!(a.len(), 5);
    }

    #[test]
    fn multigraphs_render_as_edge_lists() {
        assert_eq!(render(&generate(Family::Theta).unwrap()), "2 3\n0 1\n0 1\n0 1\n");
        assert_eq!(render(&generate(Family::K4).unwrap()), "C~\n");
    }
}
