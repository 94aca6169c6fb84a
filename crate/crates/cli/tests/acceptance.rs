//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::process::ExitCode;
use std::time::Instant;

use extremal_core::bounds::{check_bound, ess_bound, erdos_c4_bound, lemma_threshold, mantel_bound, turan_bound};
use extremal_core::construct::{blow_up, named_graph, turan_graph, NamedGraph};
use extremal_core::detect::{
    binomial, contains_subgraph, count_paths2, count_stars, has_complete_bipartite, has_even_cycle,
};
use extremal_core::lemma::{
    coloring_blowup_params, dense_core, find_blowup, half_degree_subgraph, BlowupMode, BlowupParams,
    DenseCoreConfig, DensityParams,
};
use extremal_core::search::exact_ex;
use extremal_core::{ForbiddenPattern, Graph, GraphBuilder, Rational, Strategy, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("Mantel tightness", mantel_tightness),
        ("Turan tightness", turan_tightness),
        ("C4 bound", erdos_c4),
        ("KST counting inequality", kst_counting),
        ("C4 path inequality", c4_paths),
        ("half-degree subgraph", half_degree),
        ("dense-core guarantee", dense_core_guarantee),
        ("fallback blow-up search vs brute force", fallback_equivalence),
        ("blow-up witness validity", witness_validity),
        ("ESS consistency", ess_consistency),
        ("search determinism across --jobs", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        let (verdict, detail) = match &outcome {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        println!("criterion {:>2} {verdict}  {name}: {detail} [{secs:.1}s]", i + 1);
        failed += usize::from(outcome.is_err());
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

// ---------------------------------------------------------------------------
// corpora

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect()
}

fn graph_from_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    let mut b = GraphBuilder::new(n).unwrap();
    for (i, &(u, v)) in pairs.iter().enumerate() {
        if mask >> i & 1 == 1 {
            b.add_edge(u, v).unwrap();
        }
    }
    b.build()
}

/// Every labeled graph on `lo..=hi` vertices.
fn all_graphs(lo: usize, hi: usize) -> impl Iterator<Item = Graph> {
    (lo..=hi).flat_map(|n| {
        let p = pairs(n);
        (0u64..1 << p.len()).map(move |mask| graph_from_mask(n, &p, mask))
    })
}

/// `G(n, p)` with `n` uniform in `1..=max_n` and `p` uniform in `[0, 1)`.
fn random_graph(rng: &mut ChaCha8Rng, max_n: usize) -> Graph {
    let n = rng.gen_range(1..=max_n);
    let p: f64 = rng.gen();
    let mut b = GraphBuilder::new(n).unwrap();
    for (u, v) in pairs(n) {
        if rng.gen_bool(p) {
            b.add_edge(u, v).unwrap();
        }
    }
    b.build()
}

fn counting_corpus() -> impl Iterator<Item = Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x4b53_5400);
    let random: Vec<Graph> = (0..100_000).map(|_| random_graph(&mut rng, 20)).collect();
    random.into_iter().chain(all_graphs(1, 6))
}

// ---------------------------------------------------------------------------
// 1-3: exact extremal numbers

fn mantel_tightness() -> Outcome {
    for n in 2..=7 {
        let ex = exact_ex(n, ForbiddenPattern::Clique(3), Strategy::Exhaustive).map_err(|e| e.to_string())?.ex_value;
        ensure(ex == n * n / 4, || format!("ex({n}, K3) = {ex}, expected {}", n * n / 4))?;
        ensure(check_bound(ex as u128, &mantel_bound(n)), || format!("ex({n}, K3) = {ex} exceeds n^2/4"))?;
    }
    Ok("ex(n, K3) = floor(n^2/4) <= n^2/4 for n = 2..7".into())
}

fn turan_tightness() -> Outcome {
    for n in 4..=7 {
        let ex = exact_ex(n, ForbiddenPattern::Clique(4), Strategy::Exhaustive).map_err(|e| e.to_string())?.ex_value;
        let t = turan_graph(n, 3).unwrap().edge_count();
        ensure(ex == t, || format!("ex({n}, K4) = {ex}, e(T({n},3)) = {t}"))?;
        ensure(check_bound(ex as u128, &turan_bound(n, 3).unwrap()), || format!("ex({n}, K4) = {ex} exceeds the bound"))?;
    }
    Ok("ex(n, K4) = e(T(n,3)) <= (1 - 1/3) n^2/2 for n = 4..7".into())
}

/// `ex(n, C4)` for `n = 3..=7`, pinned from an unpruned enumeration of every edge subset.
const EX_C4: [usize; 5] = [3, 4, 6, 7, 9];

fn erdos_c4() -> Outcome {
    let mut values = Vec::new();
    for (n, &pinned) in (3..=7).zip(EX_C4.iter()) {
        let ex = exact_ex(n, ForbiddenPattern::EvenCycle(4), Strategy::Exhaustive).map_err(|e| e.to_string())?.ex_value;
        ensure(ex == pinned, || format!("ex({n}, C4) = {ex}, pinned value {pinned}"))?;
        let bound = erdos_c4_bound(n).unwrap();
        ensure(check_bound(ex as u128, &bound), || format!("ex({n}, C4) = {ex} exceeds {bound}"))?;
        values.push(ex.to_string());
    }
    Ok(format!("ex(n, C4) = [{}] for n = 3..7, all within (n/4)(sqrt(4n-3) + 1)", values.join(", ")))
}

// ---------------------------------------------------------------------------
// 4-5: counting steps

fn kst_counting() -> Outcome {
    let (mut checked, mut violations) = (0u64, 0u64);
    for g in counting_corpus() {
        if has_complete_bipartite(&g, 2, 2) {
            continue;
        }
        checked += 1;
        let n = g.order() as u128;
        if count_stars(&g, 2) > binomial(n, 2) {
            violations += 1;
        }
    }
    ensure(violations == 0, || format!("{violations} violations among {checked} K2,2-free graphs"))?;
    Ok(format!("count_stars(g, 2) <= (t-1) C(n,2) on {checked} K2,2-free graphs, 0 violations"))
}

fn c4_paths() -> Outcome {
    let (mut checked, mut violations) = (0u64, 0u64);
    for g in counting_corpus() {
        if has_even_cycle(&g, 4) {
            continue;
        }
        checked += 1;
        if count_paths2(&g) > binomial(g.order() as u128, 2) {
            violations += 1;
        }
    }
    ensure(violations == 0, || format!("{violations} violations among {checked} C4-free graphs"))?;
    Ok(format!("count_paths2(g) <= C(n,2) on {checked} C4-free graphs, 0 violations"))
}

// ---------------------------------------------------------------------------
// 6: half-degree subgraph

fn half_degree_ok(g: &Graph) -> bool {
    let h = half_degree_subgraph(g);
    if g.order() == 0 {
        return h.subgraph.order() == 0;
    }
    if h.vertices.is_empty() || h.subgraph != g.induced_subgraph(h.vertices).unwrap() {
        return false;
    }
    // δ(H) >= d(G)/2 = m/n, compared as rationals
    let min_deg = (0..h.subgraph.order()).map(|v| h.subgraph.degree(v)).min().unwrap();
    Rational::from_integer(min_deg as i128) >= Rational::new(g.edge_count() as i128, g.order() as i128)
}

fn half_degree() -> Outcome {
    let mut checked = 0u64;
    let mut violations = 0u64;
    for g in all_graphs(0, 7) {
        checked += 1;
        violations += u64::from(!half_degree_ok(&g));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0xc1a1_0001);
    for _ in 0..10_000 {
        let g = random_graph(&mut rng, 64);
        checked += 1;
        violations += u64::from(!half_degree_ok(&g));
    }
    ensure(violations == 0, || format!("{violations} violations among {checked} graphs"))?;
    Ok(format!("min degree >= d(G)/2 on {checked} graphs (all n <= 7, 10000 random n <= 64)"))
}

// ---------------------------------------------------------------------------
// 7: dense core

/// `T(n, r)` plus uniformly random non-edges until the edge count reaches the threshold.
fn turan_plus_surplus(n: usize, r: usize, eps: Rational, rng: &mut ChaCha8Rng) -> Graph {
    let t = turan_graph(n, r).unwrap();
    let target = lemma_threshold(n, r, eps).unwrap().as_rational().unwrap().ceil().to_integer() as usize;
    let mut b = GraphBuilder::from_graph(&t);
    let mut missing: Vec<(usize, usize)> = pairs(n).into_iter().filter(|&(u, v)| !t.has_edge(u, v)).collect();
    while b.edge_count() < target {
        let (u, v) = missing.swap_remove(rng.gen_range(0..missing.len()));
        b.add_edge(u, v).unwrap();
    }
    b.build()
}

fn dense_core_guarantee() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xde45_e000);
    let mut runs = 0;
    let mut smallest_margin: Option<Rational> = None;
    for (r, eps) in [(2usize, Rational::new(1, 10)), (3, Rational::new(1, 12))] {
        let params = DensityParams::new(r, eps).unwrap();
        let factor = Rational::from_integer(1) - Rational::new(1, r as i128) + eps / 2;
        for n in 30..=64 {
            let g = turan_plus_surplus(n, r, eps, &mut rng);
            let res = dense_core(&g, params, DenseCoreConfig::default());
            runs += 1;
            let case = || format!("r={r} eps={eps} n={n}");
            ensure(res.hypothesis_met, || format!("{}: edge hypothesis not met", case()))?;
            let p = res.survivors.len();
            let required = Rational::from_integer(r as i128) * eps * Rational::from_integer(n as i128) / 3;
            ensure(Rational::from_integer(p as i128) > required, || format!("{}: p = {p} <= {required}", case()))?;
            // survivors' degrees recomputed from the input graph
            for v in res.survivors {
                let deg = g.degree_in(v, res.survivors);
                ensure(Rational::from_integer(deg as i128) >= factor * Rational::from_integer(p as i128), || {
                    format!("{}: survivor {v} has core degree {deg}", case())
                })?;
            }
            ensure(res.findings.is_empty(), || format!("{}: findings {:?}", case(), res.findings))?;
            let margin = Rational::from_integer(p as i128) - required;
            smallest_margin = Some(smallest_margin.map_or(margin, |m| m.min(margin)));
        }
    }
    Ok(format!(
        "p > r eps n/3 and the degree invariant hold on {runs} graphs, no findings (smallest margin {})",
        smallest_margin.unwrap()
    ))
}

// ---------------------------------------------------------------------------
// 8-9: blow-ups

/// `t`-subsets of `0..n` as bit masks.
fn subsets(n: usize, t: usize) -> Vec<u64> {
    (0u64..1 << n).filter(|m| m.count_ones() as usize == t).collect()
}

/// Tries every ordered choice of `parts` disjoint `t`-subsets.
fn brute_force_blowup(g: &Graph, parts: usize, subsets: &[u64]) -> bool {
    let complete = |a: u64, b: u64| {
        (0..g.order()).filter(|&u| a >> u & 1 == 1).all(|u| {
            (0..g.order()).filter(|&v| b >> v & 1 == 1).all(|v| g.has_edge(u, v))
        })
    };
    fn go(chosen: &mut Vec<u64>, parts: usize, subsets: &[u64], ok: &dyn Fn(u64, u64) -> bool) -> bool {
        if chosen.len() == parts {
            return true;
        }
        for &s in subsets {
            if chosen.iter().all(|&c| c & s == 0 && ok(c, s)) {
                chosen.push(s);
                if go(chosen, parts, subsets, ok) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    go(&mut Vec::new(), parts, subsets, &complete)
}

/// Independent check of a claimed blow-up, pair by pair.
fn witness_ok(g: &Graph, parts: &[VertexSet], count: usize, t: usize) -> bool {
    let members: Vec<Vec<usize>> = parts.iter().map(|p| p.iter().collect()).collect();
    if members.len() != count || members.iter().any(|m| m.len() != t || m.iter().any(|&v| v >= g.order())) {
        return false;
    }
    for i in 0..count {
        for j in i + 1..count {
            for &u in &members[i] {
                for &v in &members[j] {
                    if u == v || !g.has_edge(u, v) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

const BLOWUP_PARAMS: [(usize, usize); 3] = [(1, 2), (2, 1), (2, 2)];

fn fallback_equivalence() -> Outcome {
    let subsets: Vec<Vec<Vec<u64>>> = (0..=7).map(|n| (0..=2).map(|t| subsets(n, t)).collect()).collect();
    let (mut compared, mut found) = (0u64, 0u64);
    for g in all_graphs(0, 7) {
        for (r, t) in BLOWUP_PARAMS {
            let params = BlowupParams { r, t, eps: Some(Rational::new(1, 10)) };
            let verdict = find_blowup(&g, params, BlowupMode::Fallback);
            let oracle = brute_force_blowup(&g, r + 1, &subsets[g.order()][t]);
            compared += 1;
            ensure(verdict.is_ok() == oracle, || {
                format!("disagreement on n={} edges={:?} r={r} t={t}", g.order(), g.edges().collect::<Vec<_>>())
            })?;
            found += u64::from(oracle);
        }
    }
    Ok(format!("{compared} verdicts agree ({found} with a blow-up), all graphs n <= 7, (r,t) in (1,2),(2,1),(2,2)"))
}

fn witness_validity() -> Outcome {
    let mut hosts: Vec<(Graph, BlowupParams, BlowupMode)> = Vec::new();
    for g in all_graphs(1, 6) {
        for (r, t) in BLOWUP_PARAMS {
            hosts.push((g.clone(), BlowupParams { r, t, eps: Some(Rational::new(1, 10)) }, BlowupMode::Auto));
        }
        hosts.push((g, BlowupParams { r: 0, t: 2, eps: None }, BlowupMode::ProofFaithful));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0xb10e_0000);
    for _ in 0..2_000 {
        let g = random_graph(&mut rng, 24);
        let (r, t) = BLOWUP_PARAMS[rng.gen_range(0..3)];
        hosts.push((g, BlowupParams { r, t, eps: Some(Rational::new(1, 10)) }, BlowupMode::Auto));
    }
    for n in 8..=64 {
        let k = named_graph(NamedGraph::Complete(n)).unwrap();
        hosts.push((k, BlowupParams { r: 1, t: 2, eps: Some(Rational::new(9, 10)) }, BlowupMode::ProofFaithful));
    }
    for t in 1..=5 {
        let b = blow_up(&named_graph(NamedGraph::Complete(3)).unwrap(), t).unwrap();
        hosts.push((b, BlowupParams { r: 2, t, eps: Some(Rational::new(1, 10)) }, BlowupMode::Auto));
    }
    let (mut witnesses, mut proof_witnesses) = (0u64, 0u64);
    let mut returned = Vec::new();
    for (g, params, mode) in &hosts {
        if let Ok(w) = find_blowup(g, *params, *mode) {
            returned.push((g, params, w));
        }
    }
    // separate pass over the returned witnesses
    for (g, params, w) in &returned {
        witnesses += 1;
        proof_witnesses += u64::from(w.method == extremal_core::lemma::BlowupMethod::ProofFaithful);
        ensure(witness_ok(g, &w.parts, params.r + 1, params.t), || {
            format!("invalid witness {:?} for r={} t={} on {:?}", w.parts, params.r, params.t, g)
        })?;
    }
    Ok(format!(
        "{witnesses} of {witnesses} witnesses pass the cross-pair check ({proof_witnesses} from the inductive construction) over {} calls",
        hosts.len()
    ))
}

// ---------------------------------------------------------------------------
// 10: ESS

fn connected(g: &Graph) -> bool {
    if g.order() == 0 {
        return false;
    }
    let mut seen = vec![false; g.order()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for v in 0..g.order() {
            if g.has_edge(u, v) && !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

fn ess_consistency() -> Outcome {
    for n in 0..=1000 {
        for chi in 2..=10 {
            ensure(ess_bound(n, chi, Rational::from_integer(0)).unwrap() == turan_bound(n, chi - 1).unwrap(), || {
                format!("ess_bound({n}, {chi}, 0) != turan_bound({n}, {})", chi - 1)
            })?;
        }
    }
    let mut embedded = 0;
    for h in all_graphs(1, 6).filter(connected) {
        let (chi, t) = coloring_blowup_params(&h).map_err(|e| e.to_string())?;
        let host = blow_up(&named_graph(NamedGraph::Complete(chi)).unwrap(), t).unwrap();
        ensure(contains_subgraph(&host, &h).unwrap(), || format!("blow-up of K{chi} by {t} misses {h:?}"))?;
        embedded += 1;
    }
    Ok(format!("ess(n, chi, 0) = turan(n, chi-1) for n <= 1000, chi <= 10; {embedded} connected graphs embed"))
}

// ---------------------------------------------------------------------------
// 11: determinism

fn determinism() -> Outcome {
    let mut instances: Vec<(usize, &str, &str)> = Vec::new();
    instances.extend((2..=7).map(|n| (n, "K3", "mantel")));
    instances.extend((4..=7).map(|n| (n, "K4", "turan")));
    instances.extend((3..=7).map(|n| (n, "C4", "c4")));
    let mut compared = 0;
    for (n, pattern, theorem) in instances {
        for strategy in ["exhaustive", "pruned"] {
            let n = n.to_string();
            let run = |jobs: &str| {
                let argv = [
                    "extremal", "--jobs", jobs, "--format", "json", "search", "--n", &n, "--pattern", pattern,
                    "--strategy", strategy, "--check-bound", theorem,
                ];
                extremal::run_captured(argv, "")
            };
            let (c1, one, e1) = run("1");
            let (c8, eight, e8) = run("8");
            ensure(c1 == 0 && c8 == 0, || format!("search failed: {e1}{e8}"))?;
            ensure(one == eight, || format!("n={n} {pattern} {strategy}: reports differ\n{one}{eight}"))?;
            compared += 1;
        }
    }
    Ok(format!("{compared} JSON reports byte-identical between --jobs 1 and --jobs 8"))
}
