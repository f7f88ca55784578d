//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs as a plain binary (`harness = false`) so the verdict lines are
//! always printed; the process fails if any criterion fails.

use rand::Rng;
use rayon::prelude::*;
use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::process::{Command, Stdio};
use std::time::{Duration, Instant};
use tripm_core::certificate::{parse_certificate, verify_certificate, CertificateJson};
use tripm_core::graph::generators::{generate, Family};
use tripm_core::graph::graph6::{parse_graph6, write_graph6};
use tripm_core::graph::is_k_connected;
use tripm_core::matching::{
    count_perfect_matchings, gallai_edmonds, is_factor_critical, is_matching_covered, matching_number,
};
use tripm_core::tripm::{
    check, color_cubic_3, extract_skeleton, find_even_2factor, find_triple_direct, four_regular_construct,
    four_regular_fastpath, lift_triple, structural_check, verify_triple, Verdict,
};
use tripm_core::{Budget, EdgeSet, Graph};
use tripm_testkit as oracle;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

const BUDGET: u64 = 10_000_000;

fn named_suite() -> Vec<Family> {
    vec![
        Family::K4,
        Family::K33,
        Family::Prism,
        Family::B8,
        Family::Petersen,
        Family::Wheel { n: 3 },
        Family::Wheel { n: 5 },
        Family::Wheel { n: 7 },
        Family::Wheel { n: 9 },
        Family::DoubleWheel { n: 4 },
        Family::DoubleWheel { n: 6 },
        Family::DoubleWheel { n: 8 },
        Family::Octahedron,
        Family::Cube,
        Family::Dodecahedron,
        Family::Icosahedron,
        Family::Carvalho10,
    ]
}

fn tripm(args: &[&str], stdin: &str) -> (Option<i32>, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_tripm"))
        .args(args)
        .env_remove("TRIPM_BUDGET")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::null())
        .spawn()
        .expect("spawn tripm");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    (out.status.code(), String::from_utf8_lossy(&out.stdout).into_owned())
}

fn named_graphs() -> Outcome {
    let start = Instant::now();
    for family in named_suite() {
        let g = generate(family).unwrap();
        let report = check(&g, &Budget::new(BUDGET));
        let verdict = report.verdict.map_err(|e| format!("{family}: ineligible ({e})"))?;
        let Some(a) = verdict.admissible() else {
            return Err(format!("{family}: {}", verdict.tag()));
        };
        ensure!(verify_triple(&g, &a.triple).is_valid(), "{family}: invalid triple");
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(10), "took {elapsed:?}");
    Ok(format!("{} graphs admissible in {:.2?}", named_suite().len(), elapsed))
}

/// Whether `edges` form one cycle through every vertex.
fn is_hamilton_cycle(g: &Graph, edges: &EdgeSet) -> bool {
    let (h, _) = g.spanning_subgraph(edges);
    h.is_regular(2) && h.is_connected()
}

fn figure_witnesses() -> Outcome {
    let fixtures = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures");
    let cases = [
        ("wheel7_triple.json", Family::Wheel { n: 7 }),
        ("double_wheel8_triple.json", Family::DoubleWheel { n: 8 }),
        ("octahedron_triple.json", Family::Octahedron),
        ("icosahedron_triple.json", Family::Icosahedron),
        ("carvalho10_triple.json", Family::Carvalho10),
    ];
    for (file, family) in cases {
        let g = generate(family).unwrap();
        let path = fixtures.join(file);
        let (code, out) = tripm(&["verify", "--cert", path.to_str().unwrap()], &write_graph6(&g).unwrap());
        ensure!(code == Some(0), "{file}: exit {code:?}: {out}");
        if matches!(family, Family::Icosahedron | Family::Carvalho10) {
            let doc = parse_certificate(&std::fs::read_to_string(&path).unwrap()).unwrap();
            let t = verify_certificate(&g, &doc).unwrap().triple.unwrap();
            ensure!(is_hamilton_cycle(&g, &t.m1().union(t.m2())), "{file}: M1 ∪ M2 is not a Hamilton cycle");
        }
    }
    Ok(format!("{} fixtures verify, 2 Hamilton cycles confirmed", cases.len()))
}

const RANDOM_ORDER10: usize = 20_000;

fn oracle_equivalence() -> Outcome {
    let mut corpus: Vec<(Graph, bool)> = [2, 4, 6, 8]
        .into_iter()
        .flat_map(oracle::connected_graphs)
        .map(|g| (g, true))
        .collect();
    let exhaustive = corpus.len();
    let mut rng = oracle::rng(3);
    for _ in 0..RANDOM_ORDER10 {
        let p = rng.gen_range(0.25..0.75);
        corpus.push((oracle::random_graph(10, p, &mut rng), false));
    }
    let results: Vec<Result<Option<bool>, String>> = corpus
        .par_iter()
        .map(|(g, small)| {
            if !g.is_connected() || !is_matching_covered(g) {
                return Ok(None);
            }
            let budget = Budget::unlimited();
            let direct = find_triple_direct(g, &budget).map_err(|e| e.to_string())?;
            let structural = structural_check(g, &budget).map_err(|e| e.to_string())?;
            let decided = |v: &Verdict| match v {
                Verdict::Admissible(_) => Ok(true),
                Verdict::NotAdmissible(_) => Ok(false),
                Verdict::Unknown(_) => Err(format!("unknown verdict on {:?}", g.edges())),
            };
            let (d, s) = (decided(&direct)?, decided(&structural)?);
            if d != s {
                return Err(format!("direct {d} vs structural {s} on {:?}", g.edges()));
            }
            if *small && d != oracle::has_triple(g) {
                return Err(format!("brute force disagrees on {:?}", g.edges()));
            }
            Ok(Some(d))
        })
        .collect();
    let mut checked = [0usize; 2];
    for r in results {
        if let Some(admissible) = r? {
            checked[usize::from(admissible)] += 1;
        }
    }
    Ok(format!(
        "exhaustive connected n in {{2,4,6,8}} ({exhaustive} graphs) plus {RANDOM_ORDER10} seeded G(10,p) samples; \
         {} matching covered, {} admissible, {} not, 0 disagreements",
        checked[0] + checked[1],
        checked[1],
        checked[0]
    ))
}

fn four_regular() -> Outcome {
    const PER_ORDER: usize = 200;
    let orders = [10, 12, 14, 16, 18];
    let mut constructed = 0;
    for n in orders {
        let mut found = 0;
        let mut seed = 0;
        while found < PER_ORDER {
            let g = generate(Family::RandomRegular { k: 4, n, seed }).unwrap();
            seed += 1;
            if !is_k_connected(&g, 3) {
                continue;
            }
            found += 1;
            let fast = four_regular_fastpath(&g, &Budget::new(BUDGET)).map_err(|e| e.to_string())?;
            ensure!(!fast.is_not_admissible(), "fast path NotAdmissible: n={n} seed={}", seed - 1);
            let report = check(&g, &Budget::new(BUDGET));
            let ok = matches!(&report.verdict, Ok(v) if v.is_admissible());
            ensure!(ok, "check not admissible: n={n} seed={}", seed - 1);
            if matches!(four_regular_construct(&g), Ok(Some(_))) {
                constructed += 1;
            }
        }
    }
    let total = PER_ORDER * orders.len();
    Ok(format!("{total} 3-connected 4-regular graphs admissible; constructive path succeeded on {constructed}"))
}

fn gallai_edmonds_structure() -> Outcome {
    let g = generate(Family::NoPmCubic16).unwrap();
    let ge = gallai_edmonds(&g);
    ensure!(ge.barrier.to_vec() == vec![15], "A = {:?}", ge.barrier.to_vec());
    ensure!(ge.saturated.is_empty(), "C = {:?}", ge.saturated.to_vec());
    ensure!(ge.components.len() == 3, "omega = {}", ge.components.len());
    for c in &ge.components {
        ensure!(c.vertices.len() == 5, "component size {}", c.vertices.len());
        ensure!(c.edges_to_barrier == 1, "t = {}", c.edges_to_barrier);
        ensure!(is_factor_critical(&g, &c.vertices), "component {:?} not factor-critical", c.vertices.to_vec());
    }
    ensure!(ge.verify(&g).all_hold(), "properties fail on no_pm_cubic16");

    let mut samples = 0;
    for seed in 0..200u64 {
        let n = 8 + 2 * (seed as usize % 12);
        let g = generate(Family::RandomRegular { k: 3, n, seed }).unwrap();
        let ge = gallai_edmonds(&g);
        let report = ge.verify(&g);
        ensure!(report.all_hold(), "n={n} seed={seed}: {report:?}");
        ensure!(
            ge.deficiency(&g) + ge.barrier.len() == ge.component_count(),
            "n={n} seed={seed}: deficiency"
        );
        ensure!(ge.components.iter().all(|c| c.edges_to_barrier % 2 == 1), "n={n} seed={seed}: even t");
        samples += 1;
    }
    Ok(format!("no_pm_cubic16 matches (|A| = 1, 3 x 5-vertex components, t = 1); {samples} random cubic graphs verify"))
}

fn matching_engine() -> Outcome {
    for (family, expected) in [(Family::K4, 3), (Family::K33, 6), (Family::Petersen, 6)] {
        let count = count_perfect_matchings(&generate(family).unwrap(), &Budget::unlimited()).unwrap();
        ensure!(count == expected, "{family}: {count} perfect matchings");
    }
    let mut rng = oracle::rng(6);
    let corpus: Vec<Graph> = (0..10_000)
        .map(|_| {
            let n = rng.gen_range(1..=10);
            let p = rng.gen_range(0.1..0.9);
            oracle::random_graph(n, p, &mut rng)
        })
        .collect();
    corpus.par_iter().try_for_each(|g| {
        let nu = matching_number(g);
        ensure!(nu == oracle::max_matching_size(g), "matching number on {:?}", g.edges());
        if 2 * nu == g.vertex_count() {
            let count = count_perfect_matchings(g, &Budget::unlimited()).unwrap();
            ensure!(count == oracle::perfect_matchings(g).len(), "perfect matching count on {:?}", g.edges());
        }
        Ok(())
    })?;
    Ok("K4 3, K3,3 6, Petersen 6; 10000 seeded graphs n <= 10 agree with brute force".into())
}

fn lifting() -> Outcome {
    let mut rng = oracle::rng(7);
    let mut lifted = 0;
    for family in [Family::K4, Family::K33, Family::Prism, Family::Cube] {
        let h = generate(family).unwrap();
        for i in 0..100 {
            let steps = rng.gen_range(1..=4);
            let chords = rng.gen_range(0..=3);
            let (g, spanning) = oracle::random_bisubdivision(&h, steps, chords, &mut rng);
            let b = extract_skeleton(&g, &spanning).map_err(|e| format!("{family} #{i}: {e:?}"))?;
            let coloring = color_cubic_3(&b.skeleton, &Budget::unlimited())
                .map_err(|e| e.to_string())?
                .ok_or_else(|| format!("{family} #{i}: skeleton not colourable"))?;
            let sc = b.with_coloring(coloring);
            let t = lift_triple(&g, &sc).map_err(|e| e.to_string())?;
            let report = verify_triple(&g, &t);
            ensure!(report.is_valid(), "{family} #{i}: {report}");
            ensure!(t.union() == spanning, "{family} #{i}: union differs from the spanning set");
            lifted += 1;
        }
    }
    Ok(format!("{lifted} lifted triples valid, unions equal the spanning sets"))
}

fn negative_results() -> Outcome {
    let p = generate(Family::Petersen).unwrap();
    let coloring = color_cubic_3(&p, &Budget::unlimited()).map_err(|e| e.to_string())?;
    ensure!(coloring.is_none(), "Petersen coloured");
    let factor = find_even_2factor(&p, &Budget::unlimited()).map_err(|e| e.to_string())?;
    ensure!(factor.is_none(), "Petersen has an even 2-factor");
    let k2 = generate(Family::Path { n: 2 }).unwrap();
    let report = check(&k2, &Budget::new(BUDGET));
    let Ok(Verdict::NotAdmissible(e)) = &report.verdict else {
        return Err(format!("K2: {:?}", report.verdict));
    };
    Ok(format!("Petersen uncolourable, no even 2-factor (searches completed); K2 not admissible ({})", e.summary))
}

fn format_fidelity() -> Outcome {
    let mut corpus: Vec<Graph> = (0..=8).flat_map(oracle::all_graphs).collect();
    corpus.extend(named_suite().into_iter().map(|f| generate(f).unwrap()));
    for g in &corpus {
        let text = write_graph6(g).map_err(|e| e.to_string())?;
        let back = parse_graph6(&text).map_err(|e| e.to_string())?;
        ensure!(&back == g, "graph6 round trip changed {text}");
        ensure!(write_graph6(&back).unwrap() == text, "graph6 re-encoding of {text}");
    }
    for family in named_suite() {
        let g = generate(family).unwrap();
        let g6 = write_graph6(&g).unwrap();
        let report = check(&g, &Budget::new(BUDGET));
        let a = report.verdict.as_ref().ok().and_then(Verdict::admissible).ok_or(format!("{family}"))?;
        let emitted = CertificateJson::from_admissible(&g, a);
        let parsed = parse_certificate(&emitted.to_json_pretty()).map_err(|e| e.to_string())?;
        ensure!(parsed == emitted, "{family}: certificate JSON round trip differs");
        ensure!(verify_certificate(&g, &parsed).unwrap().is_valid(), "{family}: library verify");

        let (code, out) = tripm(&["check"], &g6);
        ensure!(code == Some(0), "{family}: check exit {code:?}");
        let tmp = std::env::temp_dir().join(format!("tripm-acceptance-{}-{family}.json", std::process::id()));
        std::fs::write(&tmp, out).unwrap();
        let (code, out) = tripm(&["verify", "--cert", tmp.to_str().unwrap()], &g6);
        let _ = std::fs::remove_file(&tmp);
        ensure!(code == Some(0), "{family}: verify exit {code:?}: {out}");
    }
    Ok(format!(
        "{} graphs round-trip through graph6; {} check certificates verify",
        corpus.len(),
        named_suite().len()
    ))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("named-graph suite", named_graphs),
        ("figure witnesses", figure_witnesses),
        ("direct/structural equivalence", oracle_equivalence),
        ("4-regular sampling", four_regular),
        ("Gallai-Edmonds structure", gallai_edmonds_structure),
        ("matching engine oracle", matching_engine),
        ("lifting soundness", lifting),
        ("negative results", negative_results),
        ("format fidelity", format_fidelity),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {} {name} ({secs:.1}s): {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {} {name} ({secs:.1}s): {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
