//! One line per acceptance criterion; exits non-zero if any fails.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::panic;
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use common::*;
use graph_burning::approx::burn_3approx;
use graph_burning::burn::{simulate, verify};
use graph_burning::contact::{bootstrap_percolate, firefight_bruteforce, firefight_pk_free, verify_firefighter};
use graph_burning::exact::{burning_number_exact, ceil_sqrt, ExactConfig};
use graph_burning::gadgets::{
    gen_dk_gadget, gen_ig_gadget, gen_pg_gadget, gen_spider, isometric_path_bound, path_forest_burnable,
    solve_d3p_bruteforce, D3PInstance, D3P_BRUTEFORCE_CAP,
};
use graph_burning::generators::{gnp, random_cograph, random_connected, random_connected_intervals, random_split};
use graph_burning::graph::interval_graph;
use graph_burning::io::write_edge_list;
use graph_burning::poly::{burn_cograph, burn_interval_approx, burn_path, burn_split, SplitOptions};
use graph_burning::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = fn() -> Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn exact_k(g: &Graph) -> usize {
    burning_number_exact(g, &ExactConfig::default()).expect("within budget").k
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let spent = start.elapsed();
    if spent > limit {
        Err(format!("took {spent:?}, limit {limit:?}"))
    } else {
        Ok(())
    }
}

fn path_law() -> Result<String, String> {
    let start = Instant::now();
    for n in 1..=30 {
        ensure!(exact_k(&Graph::path(n)) == ceil_sqrt(n), "P{n}");
        if n >= 3 {
            ensure!(exact_k(&Graph::cycle(n).unwrap()) == ceil_sqrt(n), "C{n}");
        }
    }
    for n in 1..=1000 {
        let seq = burn_path(&(0..n).collect::<Vec<_>>()).unwrap();
        ensure!(seq.len() == ceil_sqrt(n) && verify(&Graph::path(n), &seq), "burn_path on P{n}");
    }
    within(start, Duration::from_secs(10))?;
    Ok("exact on P1..P30 and C3..C30; burn_path up to P1000".into())
}

fn named_graphs() -> Result<String, String> {
    let start = Instant::now();
    ensure!(exact_k(&letter_graph()) == 3, "letter graph");
    ensure!(exact_k(&Graph::path(9)) == 3, "P9");
    ensure!(exact_k(&gen_spider(3, 4)) == 4, "SP(3,4)");
    ensure!(exact_k(&gen_spider(4, 4)) == 5, "SP(4,4)");
    for r in 1..=3 {
        ensure!(exact_k(&gen_spider(r, r)) == r + 1, "SP({r},{r})");
    }
    within(start, Duration::from_secs(30))?;
    Ok("letter graph 3, P9 3, SP(3,4) 4, SP(4,4) 5, SP(r,r) r+1".into())
}

fn verifier_soundness() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut positives = 0;
    for _ in 0..1000 {
        let n = rng.gen_range(1..=15);
        let p = rng.gen_range(0.0..0.6);
        let g = gnp(&mut rng, n, p);
        let len = rng.gen_range(0..=n.min(6));
        let seq: Vec<usize> = (0..len).map(|_| rng.gen_range(0..n)).collect();
        let (legal, complete) = naive_burn(&g, &seq);
        let sim = simulate(&g, &seq);
        ensure!(verify(&g, &seq) == (sim.valid && sim.complete), "verify vs simulate on {:?} {seq:?}", g.edges());
        ensure!(sim.valid == legal && sim.complete == complete, "simulate vs naive on {:?} {seq:?}", g.edges());
        positives += usize::from(legal && complete);
    }
    Ok(format!("1000 pairs, {positives} burning sequences, 0 disagreements"))
}

fn approx_ratio() -> Result<String, String> {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut worst = 0f64;
    for _ in 0..200 {
        let n = rng.gen_range(1..=9);
        let p = rng.gen_range(0.0..0.5);
        let g = random_connected(&mut rng, n, p);
        let b = exact_k(&g);
        let r = burn_3approx(&g, None).unwrap();
        ensure!(verify(&g, &r.sequence), "approx output does not burn {:?}", g.edges());
        ensure!(r.k <= 3 * b && r.implied_lower <= b, "k {} lower {} exact {b}", r.k, r.implied_lower);
        worst = worst.max(r.k as f64 / b as f64);
    }
    within(start, Duration::from_secs(120))?;
    Ok(format!("200 graphs, worst ratio {worst:.2}"))
}

fn interval_bound() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut plus_one = 0;
    for _ in 0..100 {
        let n = rng.gen_range(1..=10);
        let g = interval_graph(&random_connected_intervals(&mut rng, n)).unwrap();
        let seq = burn_interval_approx(&g).map_err(|e| e.to_string())?;
        ensure!(verify(&g, &seq), "output does not burn {:?}", g.edges());
        let gap = seq.len() as i64 - exact_k(&g) as i64;
        ensure!(gap == 0 || gap == 1, "gap {gap} on {:?}", g.edges());
        plus_one += usize::from(gap == 1);
    }
    Ok(format!("100 graphs, {plus_one} one above optimal"))
}

fn gadget_certificates() -> Result<String, String> {
    let small = D3PInstance::new(&[4, 5, 6]).unwrap();
    let sol = solve_d3p_bruteforce(&small, D3P_BRUTEFORCE_CAP).unwrap().ok_or("no partition of {4,5,6}")?;
    let ig = gen_ig_gadget(&small, Some(&sol)).unwrap().certificate;
    ensure!(ig.order == 288 && ig.spine.len() == 169 && ig.graph.is_tree(), "IG shape");
    ensure!(ig.claimed_k == 13 && ig.canonical_verifies(), "IG canonical sequence");
    ensure!(isometric_path_bound(&ig.graph, &ig.spine) == Some(13), "IG spine bound");
    ensure!(!path_forest_burnable(&[169], 12), "spine of order 169 burnable in 12");

    let pg = gen_pg_gadget(&small, Some(&sol)).unwrap().certificate;
    let orders: Vec<usize> = pg.decomposition.iter().map(|s| s.vertices.len()).collect();
    ensure!(pg.order == 36 && orders == [27, 5, 3, 1], "PG orders {orders:?}");
    ensure!(pg.claimed_k == 6 && pg.canonical_verifies(), "PG canonical sequence");
    ensure!(!path_forest_burnable(&orders, 5) && pg.lower_bound == 6, "PG coverage bound");

    let dk = gen_dk_gadget(&small, 14, Some(&sol)).unwrap().certificate;
    ensure!(dk.order == 121 && dk.claimed_k == 7 && dk.canonical_verifies(), "DK canonical sequence");

    let large = D3PInstance::new(&[10, 11, 12, 14, 15, 16]).unwrap();
    let sol = solve_d3p_bruteforce(&large, D3P_BRUTEFORCE_CAP).unwrap().ok_or("no partition of the large instance")?;
    let big = gen_ig_gadget(&large, Some(&sol)).unwrap().certificate;
    ensure!(big.order == 1888 && big.spine.len() == 1089 && big.claimed_k == 33, "full IG shape");
    ensure!(big.canonical_verifies(), "full IG canonical sequence");
    ensure!(isometric_path_bound(&big.graph, &big.spine) == Some(33), "full IG spine bound");
    let big_pg = gen_pg_gadget(&large, Some(&sol)).unwrap().certificate;
    let big_dk = gen_dk_gadget(&large, 34, Some(&sol)).unwrap().certificate;
    ensure!(big_pg.order == 256 && big_pg.claimed_k == 16 && big_pg.lower_bound == 16, "full PG shape");
    ensure!(big_dk.order == 801 && big_dk.claimed_k == 17 && big_dk.lower_bound == 17, "full DK shape");
    ensure!(big_pg.canonical_verifies() && big_dk.canonical_verifies(), "full PG/DK canonical sequences");
    Ok("IG 288/169/13, PG 36/6, DK 121/7; full size IG 1888/33, PG 256/16, DK 801/17".into())
}

fn split_and_cograph() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..50 {
        let n = rng.gen_range(1..=9);
        let (g, sp) = random_split(&mut rng, n, 0.4, true);
        let seq = burn_split(&g, &sp, SplitOptions::default()).map_err(|e| e.to_string())?;
        ensure!(seq.len() <= 3 && verify(&g, &seq), "split output {seq:?} on {:?}", g.edges());
        ensure!(seq.len() == exact_k(&g), "split not optimal on {:?}", g.edges());
    }
    for _ in 0..50 {
        let n = rng.gen_range(1..=12);
        let g = random_cograph(&mut rng, n, true);
        let seq = burn_cograph(&g).map_err(|e| e.to_string())?;
        ensure!(seq.len() <= 3 && verify(&g, &seq), "cograph output {seq:?} on {:?}", g.edges());
    }
    Ok("50 split graphs optimal, 50 cographs within 3".into())
}

fn firefighter() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..500 {
        let n = rng.gen_range(1..=10);
        let p = rng.gen_range(0.0..0.6);
        let g = gnp(&mut rng, n, p);
        let origin = rng.gen_range(0..n);
        let len = rng.gen_range(0..5);
        let placements: Vec<usize> = (0..len).map(|_| rng.gen_range(0..n)).collect();
        let got = verify_firefighter(&g, origin, &placements).ok().map(|r| r.saved);
        ensure!(got == naive_firefight(&g, origin, &placements), "{:?} from {origin} with {placements:?}", g.edges());
    }
    for i in 0..40 {
        let n = rng.gen_range(1..=9);
        let g = if i % 2 == 0 { random_split(&mut rng, n, 0.4, false).0 } else { random_cograph(&mut rng, n, false) };
        ensure!(!has_induced_path(&g, 5), "sample has an induced P5");
        let s = rng.gen_range(0..n);
        let fast = firefight_pk_free(&g, s, 5).unwrap().saved;
        ensure!(fast == firefight_bruteforce(&g, s, 9).unwrap().saved, "pk-free differs on {:?}", g.edges());
    }
    ensure!(firefight_bruteforce(&Graph::path(3), 0, 9).unwrap().saved == 2, "P3");
    for n in 2..=6 {
        ensure!(firefight_bruteforce(&Graph::complete(n), 0, 9).unwrap().saved == 1, "K{n}");
    }
    ensure!(firefight_bruteforce(&Graph::star(3), 0, 9).unwrap().saved == 1, "star");
    Ok("500 fuzzed runs, 40 P5-free samples, P3/K_n/star".into())
}

fn percolation() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..500 {
        let n = rng.gen_range(1..=14);
        let p = rng.gen_range(0.0..0.6);
        let g = gnp(&mut rng, n, p);
        let len = rng.gen_range(0..=n);
        let seed: Vec<usize> = (0..len).map(|_| rng.gen_range(0..n)).collect();
        let r = rng.gen_range(2..5);
        let run = bootstrap_percolate(&g, &seed, r).unwrap();
        ensure!(run.stabilized_at <= n, "stabilized at {} > {n}", run.stabilized_at);
        ensure!(run.timeline.windows(2).all(|w| w[0].iter().all(|v| w[1].contains(v))), "timeline shrinks");
    }
    let k4 = bootstrap_percolate(&Graph::complete(4), &[0, 1], 2).unwrap();
    ensure!(k4.percolates && k4.stabilized_at == 1, "K4");
    let p3 = bootstrap_percolate(&Graph::path(3), &[0, 2], 2).unwrap();
    ensure!(p3.percolates && p3.timeline[1] == [0, 1, 2], "P3");
    Ok("500 fuzzed runs monotone; K4 and P3 outcomes".into())
}

fn gburn(args: &[&str]) -> (i32, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_gburn")).args(args).output().expect("run gburn");
    (out.status.code().unwrap_or(-1), out.stdout)
}

fn determinism() -> Result<String, String> {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(format!("acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let file = |name: &str, g: &Graph| {
        let p = dir.join(name);
        std::fs::write(&p, write_edge_list(g)).unwrap();
        p.display().to_string()
    };
    let p9 = file("p9.edges", &Graph::path(9));
    let c10 = file("c10.edges", &Graph::cycle(10).unwrap());
    let letter = file("letter.edges", &letter_graph());
    let (split, _) = random_split(&mut ChaCha8Rng::seed_from_u64(7), 9, 0.4, true);
    let split = file("split.edges", &split);
    let cograph = file("cograph.edges", &random_cograph(&mut ChaCha8Rng::seed_from_u64(7), 10, true));
    let random = file("random.edges", &random_connected(&mut ChaCha8Rng::seed_from_u64(7), 16, 0.12));
    let prefix = dir.join("ig").display().to_string();
    let commands: Vec<Vec<&str>> = vec![
        vec!["burn", p9.as_str()],
        vec!["burn", letter.as_str(), "--engine", "bruteforce"],
        vec!["burn", random.as_str(), "--engine", "approx3", "--trace"],
        vec!["burn", p9.as_str(), "--engine", "path"],
        vec!["burn", c10.as_str(), "--engine", "cycle"],
        vec!["burn", split.as_str(), "--engine", "split"],
        vec!["burn", cograph.as_str(), "--engine", "cograph"],
        vec!["burn", p9.as_str(), "--engine", "interval-approx", "--format", "dot"],
        vec!["verify", letter.as_str(), "--sequence", "1,6,5"],
        vec!["gen", "random", "--n", "12", "--seed", "9"],
        vec!["gen", "intervals", "--n", "12", "--seed", "9"],
        vec!["gen", "permutation", "--n", "12", "--seed", "9"],
        vec!["gen", "spider", "--s", "4", "--r", "4"],
        vec!["gen", "ig", "--x", "4,5,6", "--out", prefix.as_str()],
        vec!["gen", "pg", "--x", "4,5,6"],
        vec!["gen", "dk", "--x", "4,5,6", "--q", "14"],
        vec!["firefight", letter.as_str(), "--origin", "1"],
        vec!["percolate", letter.as_str(), "--seed-set", "0,3", "--threshold", "2"],
        vec!["bench", "--count", "5", "--n", "10", "--seed", "3"],
    ];
    for args in &commands {
        let first = gburn(args);
        ensure!(first.0 == 0, "`{}` exited {}", args.join(" "), first.0);
        for _ in 0..2 {
            ensure!(gburn(args) == first, "`{}` output changed between runs", args.join(" "));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for i in 0..5 {
        let g = random_connected(&mut rng, 18, 0.1);
        let path = file(&format!("threads{i}.edges"), &g);
        let one = gburn(&["burn", &path, "--threads", "1"]);
        let many = gburn(&["burn", &path, "--threads", "4"]);
        ensure!(one.0 == 0 && one == many, "thread count changed the output on sample {i}");
    }
    let _ = std::fs::remove_dir_all(&dir);
    Ok(format!("{} commands x3 runs identical; 1 vs 4 threads identical", commands.len()))
}

fn main() {
    let criteria: [(&str, Check); 10] = [
        ("path law", path_law),
        ("named graphs", named_graphs),
        ("verifier soundness", verifier_soundness),
        ("3-approximation ratio", approx_ratio),
        ("interval bound", interval_bound),
        ("gadget certificates", gadget_certificates),
        ("split and cograph", split_and_cograph),
        ("firefighter", firefighter),
        ("percolation", percolation),
        ("determinism", determinism),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(check).unwrap_or_else(|e| {
            Err(e
                .downcast_ref::<String>()
                .cloned()
                .or(e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default())
        });
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS {name}: {detail} ({ms} ms)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name}: {why} ({ms} ms)", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
