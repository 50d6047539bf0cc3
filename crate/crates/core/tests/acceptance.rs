//! The ten acceptance criteria. Prints one PASS or FAIL line per criterion
//! and exits nonzero if any fails.

mod common;

use std::process::Command;
use std::time::{Duration, Instant};

use common::{all_graphs, random_chordal, random_d_tree};
use nalgebra::{DMatrix, DVector};
use pennyrig::classify::classify_general;
use pennyrig::corpus::{fig_sparse, fixture, penny_grid};
use pennyrig::enumerate::{bp_enumerate, discretization_order, numeric_solve, sphere_verdict, NumericOptions, SphereStatus};
use pennyrig::framework::{canonical_form, congruent, rigid_motion_basis, rigidity_matrix, validate_sphere, Framework, ToleranceConfig};
use pennyrig::generic::{
    generic_rank, generically_globally_rigid_2d, hendrickson_necessary, maxwell_deficit, pebble_game_2d,
    redundantly_rigid, GenericStatus, PebbleGame,
};
use pennyrig::graph::{clique_number, edge_count_tight, is_chordal, is_connected, is_d_tree, is_k_connected};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok { Ok(()) } else { Err(msg()) }
}

fn tol() -> ToleranceConfig {
    ToleranceConfig::default()
}

fn theorem_sweep() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut checked = 0;
    for d in [2, 3] {
        for _ in 0..300 {
            let n = rng.gen_range(d + 1..=12);
            let g = random_chordal(n, d + 1, &mut rng);
            let (chordal, peo) = is_chordal(&g);
            let clique = clique_number(&g, peo.as_ref()).map_err(|e| e.to_string())?;
            ensure(chordal && clique <= d + 1, || format!("generator produced a bad graph {:?}", g.edges()))?;
            let (c3, c4, c5) = (is_k_connected(&g, d), edge_count_tight(&g, d), is_d_tree(&g, d));
            ensure(c3 == c4 && c4 == c5, || format!("d={d}: {c3} {c4} {c5} on {:?}", g.edges()))?;
            checked += 1;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(60), || format!("took {elapsed:?}"))?;
    Ok(format!("{checked} graphs, 0 exceptions, {elapsed:.1?}"))
}

fn constructive_global_rigidity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let (mut realizable, mut empty, mut tries) = (0, 0, 0);
    while realizable < 120 && tries < 5000 {
        tries += 1;
        let d = 2 + tries % 2;
        let g = random_d_tree(rng.gen_range(d + 1..=10), d, &mut rng);
        let ord = discretization_order(&g, d).ok_or("d-tree without an order")?;
        let set = bp_enumerate(&g, d, &ord, &tol()).map_err(|e| e.to_string())?;
        if set.count == 0 {
            empty += 1;
            continue;
        }
        ensure(set.count == 1, || format!("{} classes for {:?}", set.count, g.edges()))?;
        let v = sphere_verdict(&g, d, &tol()).map_err(|e| e.to_string())?;
        ensure(v.status == SphereStatus::GloballySphereRigid, || format!("verdict {:?}", v.status))?;
        realizable += 1;
    }
    ensure(realizable >= 100, || format!("only {realizable} realizable d-trees"))?;
    let t = fixture("triple-triangle-shared-edge").ok_or("missing fixture")?.graph;
    let ord = discretization_order(&t, 2).ok_or("no order")?;
    let n = bp_enumerate(&t, 2, &ord, &tol()).map_err(|e| e.to_string())?.count;
    ensure(n == 0, || format!("triple triangle has {n} classes"))?;
    Ok(format!("{realizable} realizable d-trees with 1 class ({empty} unrealizable skipped); triple triangle 0"))
}

fn angle(f: &Framework, a: &str, apex: &str, b: &str) -> f64 {
    let g = f.graph();
    let at = |l: &str| f.point(g.index_of(l).expect("vertex"));
    let (u, w) = (at(a) - at(apex), at(b) - at(apex));
    (u.dot(&w) / (u.norm() * w.norm())).acos().to_degrees()
}

fn two_realizations() -> Outcome {
    let f = fixture("fig-two-realizations").ok_or("missing fixture")?;
    let ord = discretization_order(&f.graph, 2).ok_or("no order")?;
    let set = bp_enumerate(&f.graph, 2, &ord, &tol()).map_err(|e| e.to_string())?;
    ensure(set.count == 2, || format!("{} classes", set.count))?;
    let marked: Vec<(f64, f64)> =
        set.classes.iter().map(|c| (angle(c, "b2", "a2", "a3"), angle(c, "c1", "m", "b3"))).collect();
    let near = |(x, y): &(f64, f64)| (x - 71.76).abs() <= 0.01 && (y - 68.68).abs() <= 0.01;
    ensure(marked.iter().filter(|a| near(a)).count() == 1, || format!("angles {marked:?}"))?;
    let (x, y) = marked.iter().copied().find(near).expect("one match");
    Ok(format!("2 classes, reflected flap angles {x:.3} and {y:.3}"))
}

fn barjoint_table() -> Outcome {
    let want = [("a", "rigid"), ("b", "globally rigid"), ("c", "globally rigid"), ("d", "rigid")];
    for (x, expected) in want {
        let g = fixture(&format!("fig-barjoint-{x}")).ok_or("missing fixture")?.graph;
        let (rigid, global) = (pebble_game_2d(&g), generically_globally_rigid_2d(&g));
        ensure(rigid.is_exact() && global.is_exact(), || "inexact verdict".into())?;
        let got = match (rigid.status, global.status) {
            (GenericStatus::Rigid, GenericStatus::GloballyRigid) => "globally rigid",
            (GenericStatus::Rigid, _) => "rigid",
            _ => "flexible",
        };
        ensure(got == expected, || format!("({x}) is {got}, expected {expected}"))?;
    }
    Ok("rigid / globally rigid / globally rigid / rigid".into())
}

fn sparse_family() -> Outcome {
    let mut notes = Vec::new();
    for k in 1..=3 {
        let f = fig_sparse(k);
        let deficit = maxwell_deficit(&f.graph, 2);
        ensure(deficit < 0, || format!("k={k}: deficit {deficit}"))?;
        ensure(pebble_game_2d(&f.graph).status == GenericStatus::Flexible, || format!("k={k}: pebble game rigid"))?;
        let r = f.realization.as_ref().ok_or("missing realization")?;
        ensure(validate_sphere(r, &tol()).is_valid(), || format!("k={k}: realization invalid"))?;
        let set = numeric_solve(&f.graph, 2, &NumericOptions::default(), &tol());
        ensure(!set.exhaustive && set.count == 1, || format!("k={k}: numeric search found {} classes", set.count))?;
        notes.push(format!("k={k} deficit {deficit}"));
    }
    Ok(format!("{}; numeric search finds 1 class each (inexhaustive)", notes.join(", ")))
}

fn grid() -> Outcome {
    for k in 1..=3 {
        let f = penny_grid(k);
        let r = f.realization.as_ref().ok_or("missing realization")?;
        ensure(validate_sphere(r, &tol()).is_valid(), || format!("grid {k} invalid"))?;
        let report = classify_general(&f.graph, 2, Some(r), &tol()).map_err(|e| e.to_string())?;
        ensure(!report.flags.chordal, || format!("grid {k} reported chordal"))?;
    }
    let wheel = penny_grid(1).graph;
    let hub = (0..wheel.len()).find(|&v| wheel.degree(v) == 6);
    ensure(wheel.len() == 7 && wheel.edge_count() == 12 && hub.is_some(), || "ring 1 is not a hexagonal wheel".into())?;
    let jj = generically_globally_rigid_2d(&wheel);
    ensure(jj.status == GenericStatus::GloballyRigid && jj.is_exact(), || format!("wheel {:?}", jj.status))?;
    Ok("grids k=1..3 valid and not chordal; wheel globally rigid (exact)".into())
}

fn octahedron() -> Outcome {
    let g = fixture("octahedron").ok_or("missing fixture")?.graph;
    ensure(g.len() == 6 && g.edge_count() == 3 * 6 - 6, || "not an octahedron".into())?;
    let h = hendrickson_necessary(&g, 3).map_err(|e| e.to_string())?;
    ensure(!h, || "octahedron passes Hendrickson".into())?;
    let red = redundantly_rigid(&g, 3).map_err(|e| e.to_string())?;
    ensure(is_k_connected(&g, 4) && !red.redundant, || "failure not due to redundancy".into())?;
    Ok("4-connected, 12 edges, not redundantly rigid".into())
}

fn random_framework(rng: &mut ChaCha8Rng) -> Framework {
    let d = rng.gen_range(2..=3);
    let n = rng.gen_range(d + 1..=10);
    let p = rng.gen_range(0.3..0.9);
    let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.gen_bool(p)).collect();
    let coords = (0..n).map(|_| (0..d).map(|_| rng.gen_range(-2.0..2.0)).collect()).collect();
    Framework::new(pennyrig::Graph::from_edges(n, &edges), d, coords).expect("valid dimensions")
}

fn random_isometry(d: usize, rng: &mut ChaCha8Rng) -> (DMatrix<f64>, DVector<f64>) {
    let q = DMatrix::from_fn(d, d, |_, _| rng.gen_range(-1.0..1.0)).qr().q();
    (q, DVector::from_fn(d, |_, _| rng.gen_range(-5.0..5.0)))
}

fn numerical_hygiene() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let (mut kernel, mut idem, mut cong) = (0.0f64, 0.0f64, 0.0f64);
    for _ in 0..100 {
        let f = random_framework(&mut rng);
        let d = f.dim();
        let basis = rigid_motion_basis(&f);
        ensure(basis.len() == d + d * (d - 1) / 2, || format!("{} motions in dimension {d}", basis.len()))?;
        let m = rigidity_matrix(&f);
        kernel = basis.iter().map(|v| (&m * v).amax()).fold(kernel, f64::max);

        let c = canonical_form(&f);
        let again = Framework::new(f.graph().clone(), d, c.coords.clone()).map_err(|e| e.to_string())?;
        idem = idem.max(canonical_form(&again).max_deviation(&c));

        let (q, t) = random_isometry(d, &mut rng);
        let moved = f.transformed(&q, &t);
        ensure(congruent(&f, &moved, &tol()).map_err(|e| e.to_string())?, || "isometric copy not congruent".into())?;
        cong = cong.max(canonical_form(&moved).max_deviation(&c));
    }
    ensure(kernel <= 1e-12, || format!("kernel residual {kernel:e}"))?;
    ensure(idem <= 1e-12, || format!("idempotence deviation {idem:e}"))?;
    ensure(cong <= 1e-7, || format!("isometry deviation {cong:e}"))?;
    Ok(format!("kernel {kernel:.1e}, idempotence {idem:.1e}, isometry {cong:.1e}"))
}

fn small_graph_oracle() -> Outcome {
    let mut checked = 0;
    for n in 1..=6 {
        for g in all_graphs(n).filter(is_connected) {
            let pebble = PebbleGame::run(&g).accepted().len();
            let (rank, _) = generic_rank(&g, 2, 4, 0);
            ensure(pebble == rank, || format!("pebble {pebble} vs rank {rank} on {:?}", g.edges()))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} connected graphs, 0 disagreements"))
}

fn corpus_run() -> Outcome {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_pennyrig"))
        .args(["corpus", "run"])
        .env_remove("PENNYRIG_SEED")
        .output()
        .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(out.status.code() == Some(0), || String::from_utf8_lossy(&out.stderr).into_owned())?;
    ensure(elapsed < Duration::from_secs(120), || format!("took {elapsed:?}"))?;
    Ok(format!("exit 0 in {elapsed:.1?}: {}", String::from_utf8_lossy(&out.stderr).trim()))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("chordal condition sweep", theorem_sweep),
        ("d-trees have one realization", constructive_global_rigidity),
        ("two-realization example", two_realizations),
        ("bar-joint generic row", barjoint_table),
        ("sparse family", sparse_family),
        ("penny grid", grid),
        ("octahedron fails Hendrickson", octahedron),
        ("numerical hygiene", numerical_hygiene),
        ("pebble game vs exact rank", small_graph_oracle),
        ("corpus run", corpus_run),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
