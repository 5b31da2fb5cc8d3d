//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use qext_core::bounds::{closed_form_snk, das_bound, edge_degree_bound, merris_bound};
use qext_core::constructions::{s_nk, s_nk_plus};
use qext_core::enumeration::{enumerate_up_to, parse_graph6, write_graph6};
use qext_core::search::{maximize_q_forbidden_cycles, SearchConfig};
use qext_core::spectral::{certified_compare, q_index, Verdict};
use qext_core::subgraph::{find_constrained_path, find_cycle_of_length, EndpointConstraint};
use qext_core::verify::{
    check_corollary1, check_statement, prop1_check, run_suite, theorem1_construction_probe, CheckParams,
    Statement, Status, SuiteConfig,
};
use qext_core::{Graph, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn criterion_1() -> Outcome {
    for (n, k) in [(25, 2), (50, 3)] {
        let r = prop1_check(n, k).map_err(|e| e.to_string())?;
        ensure(r.status == Status::Holds, || format!("({n},{k}) status {:?}: {}", r.status, r.note))?;
        let res = r.residual_snk.max(r.residual_snk_plus);
        ensure(res <= 1e-9, || format!("({n},{k}) residual {res:e}"))?;
        let gaps = [r.q_snk - r.lower, r.q_snk_plus - r.q_snk, r.upper - r.q_snk_plus];
        ensure(gaps.iter().all(|&g| g > 10.0 * res), || format!("({n},{k}) gaps {gaps:?} vs residual {res:e}"))?;
        if (n, k) == (25, 2) {
            let anchors = [(r.lower, 26.846154), (r.q_snk, 26.851030), (r.upper, 26.870968)];
            ensure(anchors.iter().all(|(x, a)| (x - a).abs() < 5e-7), || format!("anchors {anchors:?}"))?;
        }
    }
    Ok("(25,2) and (50,3) strict, residual <= 1e-9".into())
}

fn criterion_2() -> Outcome {
    let mut worst = 0.0f64;
    for k in 2..=4usize {
        for n in k + 1..=40 {
            let q = q_index(&s_nk(n, k).map_err(|e| e.to_string())?, 1e-12)
                .map_err(|e| e.to_string())?
                .q;
            let d = (q - closed_form_snk(n as u64, k as u64)).abs();
            worst = worst.max(d);
            ensure(d <= 1e-8, || format!("S_{{{n},{k}}}: |{q} - closed form| = {d:e}"))?;
        }
    }
    Ok(format!("max deviation {worst:.2e}"))
}

fn criterion_3() -> Outcome {
    let out = check_corollary1(2, 5).map_err(|e| e.to_string())?;
    let g = qext_core::constructions::corollary1(2, 5).map_err(|e| e.to_string())?;
    let r = q_index(&g, 1e-11).map_err(|e| e.to_string())?;
    ensure(g.order() == 26, || format!("order {}", g.order()))?;
    ensure(certified_compare(&r, 28.0).verdict == Verdict::Lt, || format!("q = {} r = {:e}", r.q, r.residual))?;
    ensure(out.status == Status::Holds, || format!("cor1 status {:?}", out.status))?;
    Ok(format!("q = {:.9} < 28 certified", r.q))
}

/// Connected with every block a `K_k`, by peeling leaf blocks: `k−1`
/// vertices of degree `k−1` forming a clique with one further vertex.
fn clique_tree_oracle(g: &Graph, k: usize) -> bool {
    let mut alive: BTreeSet<usize> = (0..g.order()).collect();
    let deg = |alive: &BTreeSet<usize>, u: usize| g.neighbors(u).filter(|v| alive.contains(v)).count();
    while alive.len() > 1 {
        if alive.len() == k {
            return alive.iter().all(|&a| alive.iter().all(|&b| a == b || g.has_edge(a, b)));
        }
        let leaf = alive.iter().copied().find_map(|u| {
            if deg(&alive, u) != k - 1 {
                return None;
            }
            let block: Vec<usize> = std::iter::once(u)
                .chain(g.neighbors(u).filter(|v| alive.contains(v)))
                .collect();
            let clique = block.iter().all(|&a| block.iter().all(|&b| a == b || g.has_edge(a, b)));
            let peel: Vec<usize> = block.iter().copied().filter(|&x| deg(&alive, x) == k - 1).collect();
            (clique && peel.len() == k - 1 && block.len() == k).then_some(peel)
        });
        match leaf {
            Some(peel) if peel.len() < alive.len() => {
                for x in peel {
                    alive.remove(&x);
                }
            }
            Some(_) => return false,
            None => return false,
        }
    }
    alive.len() == 1
}

fn criterion_4() -> Outcome {
    let stmts = vec![
        Statement::Egp,
        Statement::Egc,
        Statement::KopylovI,
        Statement::KopylovII,
        Statement::Ore,
        Statement::Lemma1,
        Statement::Lemma2,
        Statement::Ni,
    ];
    let mut cfg = SuiteConfig::new(stmts, 7, vec![1, 2, 3]);
    cfg.jobs = 1;
    let report = run_suite(&cfg).map_err(|e| e.to_string())?;
    ensure(report.totals.is_consistent(), || "tally does not sum".into())?;
    ensure(report.totals.violated == 0, || format!("violations: {:?}", report.violations))?;
    ensure(report.totals.indeterminate == 0, || "indeterminate outcomes".into())?;

    let mut equalities = 0;
    for level in enumerate_up_to(7).map_err(|e| e.to_string())?.iter().skip(1) {
        for g in level {
            let n = g.order();
            for k in 1..=3usize {
                let egp = check_statement(Statement::Egp, g, &CheckParams::with_k(k)).map_err(|e| e.to_string())?;
                let egp_shape = g.components().iter().all(|c| {
                    c.len() == k + 1 && g.edges_within(c).unwrap() == k * (k + 1) / 2
                });
                let no_path = find_constrained_path(g, k + 2, &EndpointConstraint::None).unwrap().is_none();
                let egp_eq = no_path && 2 * g.size() == k * n;
                ensure((egp.status == Status::EqualityCase) == (egp_eq && egp_shape), || {
                    format!("egp k={k} {:?} status {:?}", g, egp.status)
                })?;
                ensure(!egp_eq || egp_shape, || format!("egp equality without structure: {g:?}"))?;
                equalities += usize::from(egp_eq);
                if k >= 2 {
                    let egc = check_statement(Statement::Egc, g, &CheckParams::with_k(k)).map_err(|e| e.to_string())?;
                    let no_long = (k + 1..=n).all(|l| l < 3 || find_cycle_of_length(g, l).unwrap().is_none());
                    let egc_eq = no_long && 2 * g.size() == k * (n - 1);
                    let shape = clique_tree_oracle(g, k);
                    ensure((egc.status == Status::EqualityCase) == (egc_eq && shape), || {
                        format!("egc k={k} {g:?} status {:?}", egc.status)
                    })?;
                    ensure(!egc_eq || shape, || format!("egc equality without structure: {g:?}"))?;
                    equalities += usize::from(egc_eq);
                }
            }
        }
    }
    Ok(format!(
        "{} graphs, {} instances, 0 violated, {} equality cases structurally matched",
        report.graphs, report.totals.instances, equalities
    ))
}

fn criterion_5() -> Outcome {
    let mut checked = 0;
    for level in enumerate_up_to(7).map_err(|e| e.to_string())?.iter() {
        for g in level.iter().filter(|g| g.size() > 0) {
            let q = q_index(g, 1e-12).map_err(|e| e.to_string())?.q;
            let merris = merris_bound(g).map_err(|e| e.to_string())?.value;
            let das = das_bound(g).map_err(|e| e.to_string())?.value;
            let edge = edge_degree_bound(g).map_err(|e| e.to_string())?.value;
            ensure(q <= merris + 1e-9 && q <= das + 1e-9 && q <= edge + 1e-9, || {
                format!("{g:?}: q = {q}, bounds {merris} {das} {edge}")
            })?;
            if g.is_connected() {
                let n = g.order();
                let merris_eq = (q - merris).abs() <= 1e-9;
                let merris_shape = g.is_regular() || g.is_semiregular_bipartite();
                ensure(merris_eq == merris_shape, || format!("merris equality mismatch on {g:?}"))?;
                let das_eq = (q - das).abs() <= 1e-9;
                let complete = g.size() == n * (n - 1) / 2;
                let star = g.size() == n - 1 && g.max_degree() == n - 1;
                ensure(das_eq == (complete || star), || format!("das equality mismatch on {g:?}"))?;
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} graphs"))
}

fn criterion_6() -> Outcome {
    for k in [2usize, 3] {
        for n in 2 * k + 2..=12 {
            let g = s_nk(n, k).map_err(|e| e.to_string())?;
            for l in 3..=n {
                let has = find_cycle_of_length(&g, l).map_err(|e| e.to_string())?.is_some();
                ensure(has == (l <= 2 * k), || format!("S_{{{n},{k}}}: C_{l} present = {has}"))?;
            }
        }
    }
    Ok("k in {2,3}, n = 2k+2..12".into())
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut pairs = 0;
    let mut worst = f64::INFINITY;
    while pairs < 1000 {
        let n = rng.random_range(2..=30);
        let p = rng.random_range(0.05..0.9);
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|v| (0..v).map(move |u| (u, v)))
            .filter(|_| rng.random_bool(p))
            .collect();
        let g = Graph::new(n, edges).map_err(|e| e.to_string())?;
        let non_edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|v| (0..v).map(move |u| (u, v)))
            .filter(|&(u, v)| !g.has_edge(u, v))
            .collect();
        if non_edges.is_empty() {
            continue;
        }
        let (u, v) = non_edges[rng.random_range(0..non_edges.len())];
        let before = q_index(&g, 1e-11).map_err(|e| e.to_string())?.q;
        let after = q_index(&g.with_edge_toggled(u, v).map_err(|e| e.to_string())?, 1e-11)
            .map_err(|e| e.to_string())?
            .q;
        worst = worst.min(after - before);
        ensure(after >= before - 1e-9, || format!("q dropped from {before} to {after}"))?;
        pairs += 1;
    }
    Ok(format!("1000 pairs, smallest change {worst:.3e}"))
}

fn criterion_8() -> Outcome {
    let six = enumerate_up_to(6).map_err(|e| e.to_string())?.swap_remove(6);
    let mut notes = Vec::new();
    for l in [3usize, 5] {
        let mut best = 0.0f64;
        for g in &six {
            if find_cycle_of_length(g, l).map_err(|e| e.to_string())?.is_none() {
                best = best.max(q_index(g, 1e-12).map_err(|e| e.to_string())?.q);
            }
        }
        let r = maximize_q_forbidden_cycles(&SearchConfig::new(6, [l])).map_err(|e| e.to_string())?;
        ensure(r.feasible, || format!("n=6 forbid {l}: infeasible result"))?;
        ensure((r.q - best).abs() <= 1e-8, || format!("n=6 forbid {l}: search {} vs oracle {best}", r.q))?;
        notes.push(format!("C_{l}-free max {best:.6}"));
    }
    let mut cfg = SearchConfig::new(10, [5]);
    cfg.seed_graph = Some(s_nk(10, 2).map_err(|e| e.to_string())?);
    let r = maximize_q_forbidden_cycles(&cfg).map_err(|e| e.to_string())?;
    // The anchor is q(S_{10,2}) = 6 + 4√2 rounded to 8 decimals.
    let seed_q = closed_form_snk(10, 2);
    let rounded = (r.q * 1e8).round() / 1e8;
    ensure(r.feasible && r.q_interval.1 >= seed_q && rounded >= 11.656_854_25, || {
        format!("n=10 seeded: q = {} feasible {}", r.q, r.feasible)
    })?;
    let plus = s_nk_plus(12, 2).map_err(|e| e.to_string())?;
    let q_plus = q_index(&plus, 1e-11).map_err(|e| e.to_string())?.q;
    let mut cfg = SearchConfig::new(12, [6]);
    cfg.seed_graph = Some(plus);
    cfg.budget = 500;
    cfg.restarts = 2;
    let r12 = maximize_q_forbidden_cycles(&cfg).map_err(|e| e.to_string())?;
    ensure(r12.feasible && r12.q >= q_plus - 1e-9, || format!("n=12 seeded: {} < {q_plus}", r12.q))?;
    notes.push(format!("n=10 seeded q = {:.8}", r.q));
    Ok(notes.join(", "))
}

fn criterion_9() -> Outcome {
    let levels = enumerate_up_to(7).map_err(|e| e.to_string())?;
    let counts: Vec<usize> = levels[4..].iter().map(Vec::len).collect();
    ensure(counts == [11, 34, 156, 1044], || format!("counts {counts:?}"))?;
    for g in levels.iter().flatten() {
        let bytes = write_graph6(g).map_err(|e| e.to_string())?;
        let back = parse_graph6(&bytes).map_err(|e| e.to_string())?;
        ensure(&back == g && write_graph6(&back).unwrap() == bytes, || format!("round trip failed for {g:?}"))?;
    }
    Ok("11, 34, 156, 1044; graph6 round trip on all".into())
}

fn theorem1_probes() -> Outcome {
    for (n, k) in [(25, 2), (26, 2)] {
        let out = theorem1_construction_probe(n, k).map_err(|e| e.to_string())?;
        ensure(out.status == Status::Holds, || format!("({n},{k}): {:?} {}", out.status, out.note))?;
    }
    let out = theorem1_construction_probe(10, 2).map_err(|e| e.to_string())?;
    ensure(out.status == Status::PreconditionUnmet, || format!("(10,2): {:?}", out.status))?;
    let a = VertexSet::from_members(3, [0, 1]).map_err(|e| e.to_string())?;
    let tri = Graph::complete(3).map_err(|e| e.to_string())?;
    let ni = check_statement(Statement::Ni, &tri, &CheckParams::with_k(1).part_a(a)).map_err(|e| e.to_string())?;
    ensure(ni.status == Status::Holds, || "ni triangle".into())?;
    Ok("(25,2) and (26,2) hold, (10,2) precondition_unmet".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome, Duration); 10] = [
        ("1 prop1 sandwich", criterion_1, Duration::from_secs(1)),
        ("2 closed form vs eigensolver", criterion_2, Duration::from_secs(10)),
        ("3 corollary 1 instance", criterion_3, Duration::from_secs(1)),
        ("4 exhaustive theorem suite", criterion_4, Duration::from_secs(300)),
        ("5 bound dominance", criterion_5, Duration::from_secs(300)),
        ("6 S_n,k cycle structure", criterion_6, Duration::from_secs(60)),
        ("7 edge-addition monotonicity", criterion_7, Duration::from_secs(30)),
        ("8 search oracle agreement", criterion_8, Duration::from_secs(120)),
        ("9 enumeration and graph6", criterion_9, Duration::from_secs(120)),
        ("T theorem 1 construction probes", theorem1_probes, Duration::from_secs(10)),
    ];
    let mut failed = 0;
    for (name, run, limit) in criteria {
        let start = Instant::now();
        let result = run();
        let took = start.elapsed();
        let result = match result {
            Ok(msg) if took > limit => Err(format!("{msg}; took {took:.2?}, limit {limit:?}")),
            other => other,
        };
        match result {
            Ok(msg) => println!("PASS  criterion {name}: {msg} ({took:.2?})"),
            Err(msg) => {
                failed += 1;
                println!("FAIL  criterion {name}: {msg} ({took:.2?})");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
