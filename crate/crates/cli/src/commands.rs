use std::io::{BufRead, Write};

use extremal_core::bounds::{lemma_threshold, BoundKind, BoundParams};
use extremal_core::construct::{blow_up, complete_multipartite, named_graph, turan_graph, NamedGraph};
use extremal_core::detect::{find_embedding, ForbiddenPattern};
use extremal_core::lemma::{
    bfs_layers, dense_core, find_blowup, layer_density_report, BlowupError, BlowupMode, BlowupParams,
    DenseCoreConfig, DensityParams, LemmaError,
};
use extremal_core::rational::parse_rational;
use extremal_core::search::{EXHAUSTIVE_MAX_N, PRUNED_MAX_N};
use extremal_core::{Graph, Rational, SearchError, SearchPlan, Strategy, Theorem};

use crate::args::*;
use crate::input::{read_graphs, read_one};
use crate::parallel::run_plan;
use crate::report::*;
use crate::{CliError, Outcome};

pub struct Ctx<'a> {
    pub format: Format,
    pub jobs: usize,
    pub stdin: &'a mut dyn BufRead,
    pub stdout: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn emit<R: Report>(&mut self, reports: &[R]) -> Result<(), CliError> {
        emit(reports, self.format, self.stdout).map_err(CliError::Io)
    }
}

fn rational(text: &str, name: &str) -> Result<Rational, CliError> {
    parse_rational(text).map_err(|e| CliError::Usage(format!("--{name}: {e}")))
}

fn pattern(text: &str) -> Result<ForbiddenPattern, CliError> {
    text.parse().map_err(|e| CliError::Usage(format!("pattern `{text}`: {e}")))
}

fn strategy(arg: StrategyArg) -> Strategy {
    match arg {
        StrategyArg::Exhaustive => Strategy::Exhaustive,
        StrategyArg::Pruned => Strategy::OrderlyPruned,
    }
}

fn theorem(text: &str) -> Result<Theorem, CliError> {
    text.parse()
        .map_err(|()| CliError::Usage(format!("unknown theorem `{text}` (expected mantel, turan, kst or c4)")))
}

fn search_error(e: SearchError) -> CliError {
    CliError::Usage(e.to_string())
}

fn need<T: Copy>(v: Option<T>, name: &str) -> Result<T, CliError> {
    v.ok_or_else(|| CliError::Usage(format!("missing --{name}")))
}

pub fn dispatch(command: Command, ctx: &mut Ctx<'_>) -> Result<Outcome, CliError> {
    match command {
        Command::Bound(a) => bound(a, ctx),
        Command::Detect(a) => detect(a, ctx),
        Command::Search(a) => search(a, ctx),
        Command::Construct(a) => construct(a, ctx),
        Command::Core(a) => core(a, ctx),
        Command::Blowup(a) => blowup(a, ctx),
        Command::Layers(a) => layers(a, ctx),
        Command::Verify(a) => verify(a, ctx),
    }
}

fn bound(a: BoundArgs, ctx: &mut Ctx<'_>) -> Result<Outcome, CliError> {
    let kind: BoundKind = a.name.parse().map_err(|e| CliError::Usage(format!("{e}")))?;
    let eps = a.eps.as_deref().map(|e| rational(e, "eps")).transpose()?;
    let c = a.c.as_deref().map(|c| rational(c, "c")).transpose()?;
    let params = BoundParams { n: a.n, r: a.r, t: a.t, k: a.k, eps, c, chi: a.chi };
    let value = params.evaluate(kind).map_err(|e| CliError::Usage(e.to_string()))?;
    let mut report = BoundReport::new(kind.name(), &value);
    report.n = a.n;
    report.r = a.r;
    report.t = a.t;
    report.k = a.k;
    report.eps = eps.map(|q| q.to_string());
    report.c = c.map(|q| q.to_string());
    report.chi = a.chi;
    ctx.emit(&[report])?;
    Ok(Outcome::Success)
}

fn detect(a: DetectArgs, ctx: &mut Ctx<'_>) -> Result<Outcome, CliError> {
    let pattern = pattern(&a.pattern)?;
    let h = pattern.to_graph();
    let graphs = read_graphs(&a.source, ctx.stdin)?;
    let reports = graphs
        .iter()
        .map(|g| {
            let (contains, embedding) = if a.witness {
                let e = find_embedding(&g.graph, &h).map_err(|e| CliError::Usage(e.to_string()))?;
                (e.is_some(), e)
            } else {
                (pattern.is_contained_in(&g.graph), None)
            };
            Ok(DetectReport { graph: g.graph6.clone(), pattern: pattern.to_string(), contains, embedding })
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    ctx.emit(&reports)?;
    Ok(Outcome::Success)
}

fn search(a: SearchArgs, ctx: &mut Ctx<'_>) -> Result<Outcome, CliError> {
    if ctx.jobs == 0 {
        return Err(CliError::Usage("--jobs must be at least 1".into()));
    }
    let pattern = pattern(&a.pattern)?;
    let theorem = a.check_bound.as_deref().map(theorem).transpose()?;
    if let Some(th) = theorem {
        th.bound_for(a.n, &pattern).map_err(search_error)?;
    }
    let plan = SearchPlan::new(a.n, pattern, strategy(a.strategy)).map_err(search_error)?;
    let mut report = run_plan(&plan, ctx.jobs).map_err(search_error)?;
    if let Some(th) = theorem {
        report = report.check_against(th).map_err(search_error)?;
    }
    ctx.emit(&[SearchReport::from(&report)])?;
    Ok(Outcome::Success)
}

fn construct(a: ConstructArgs, ctx: &mut Ctx<'_>) -> Result<Outcome, CliError> {
    let bad = |e: extremal_core::ConstructError| CliError::Usage(e.to_string());
    let (name, g): (&str, Graph) = match a.kind {
        ConstructKind::Complete => ("complete", named_graph(NamedGraph::Complete(need(a.n, "n")?)).map_err(bad)?),
        ConstructKind::Bipartite => (
            "bipartite",
            named_graph(NamedGraph::CompleteBipartite(need(a.r, "r")?, need(a.t, "t")?)).map_err(bad)?,
        ),
        ConstructKind::Cycle => ("cycle", named_graph(NamedGraph::Cycle(need(a.n, "n")?)).map_err(bad)?),
        ConstructKind::Star => ("star", named_graph(NamedGraph::Star(need(a.n, "n")?)).map_err(bad)?),
        ConstructKind::Path => ("path", named_graph(NamedGraph::Path(need(a.n, "n")?)).map_err(bad)?),
        ConstructKind::Empty => ("empty", named_graph(NamedGraph::Empty(need(a.n, "n")?)).map_err(bad)?),
        ConstructKind::Turan => ("turan", turan_graph(need(a.n, "n")?, need(a.r, "r")?).map_err(bad)?),
        ConstructKind::Multipartite => {
            if a.parts.is_empty() {
                return Err(CliError::Usage("missing --parts".into()));
            }
            ("multipartite", complete_multipartite(&a.parts).map_err(bad)?)
        }
        ConstructKind::Blowup => {
            let h = read_one(&a.source, ctx.stdin)?;
            ("blowup", blow_up(&h.graph, need(a.t, "t")?).map_err(bad)?)
        }
    };
    ctx.emit(&[ConstructReport::new(name, &g)])?;
    Ok(Outcome::Success)
}

fn density(r: usize, eps: Rational) -> Result<DensityParams, CliError> {
    DensityParams::new(r, eps).map_err(|e| match e {
        LemmaError::EpsOutOfRange => CliError::Usage(format!("--eps {eps} is out of range: need 0 < eps < 1/{r}")),
        other => CliError::Usage(other.to_string()),
    })
}

fn core(a: CoreArgs, ctx: &mut Ctx<'_>) -> Result<Outcome, CliError> {
    let params = density(a.r, rational(&a.eps, "eps")?)?;
    let config = DenseCoreConfig { n_min: a.n_min };
    let graphs = read_graphs(&a.source, ctx.stdin)?;
    let reports: Vec<CoreReport> = graphs
        .iter()
        .map(|g| {
            let res = dense_core(&g.graph, params, config);
            let threshold = lemma_threshold(g.graph.order(), params.r(), params.eps()).expect("validated");
            CoreReport::new(&g.graph6, g.graph.edge_count(), &threshold, &res)
        })
        .collect();
    ctx.emit(&reports)?;
    Ok(Outcome::Success)
}

fn blowup(a: BlowupArgs, ctx: &mut Ctx<'_>) -> Result<Outcome, CliError> {
    let eps = a.eps.as_deref().map(|e| rational(e, "eps")).transpose()?;
    let params = BlowupParams { r: a.r, t: a.t, eps };
    let (mode, mode_name) = match a.mode {
        ModeArg::Auto => (BlowupMode::Auto, "auto"),
        ModeArg::Proof => (BlowupMode::ProofFaithful, "proof"),
        ModeArg::Fallback => (BlowupMode::Fallback, "fallback"),
    };
    let graphs = read_graphs(&a.source, ctx.stdin)?;
    let mut reports = Vec::with_capacity(graphs.len());
    for g in &graphs {
        let result = find_blowup(&g.graph, params, mode);
        match &result {
            Err(BlowupError::BadParams(m)) => return Err(CliError::Usage((*m).into())),
            Err(BlowupError::EpsOutOfRange) => {
                return Err(CliError::Usage(format!("--eps is out of range: need 0 < eps < 1/{}", a.r)))
            }
            _ => {}
        }
        reports.push(BlowupReport::new(&g.graph6, a.r, a.t, eps, mode_name, &result));
    }
    ctx.emit(&reports)?;
    Ok(if reports.iter().all(|r| r.found) { Outcome::Success } else { Outcome::NotFound })
}

fn layers(a: LayersArgs, ctx: &mut Ctx<'_>) -> Result<Outcome, CliError> {
    let graphs = read_graphs(&a.source, ctx.stdin)?;
    let reports = graphs
        .iter()
        .map(|g| {
            let usage = |e: LemmaError| CliError::Usage(e.to_string());
            let d = bfs_layers(&g.graph, a.root, a.depth).map_err(usage)?;
            let rows = layer_density_report(&g.graph, a.root, a.depth).map_err(usage)?;
            Ok(LayersReport::new(&g.graph6, a.root, &d.layers, &d.intra_edges, &d.cross_edges, &rows))
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    ctx.emit(&reports)?;
    Ok(Outcome::Success)
}

fn verify(a: VerifyArgs, ctx: &mut Ctx<'_>) -> Result<Outcome, CliError> {
    let th = theorem(&a.suite)?;
    let pattern = match th {
        Theorem::Kst => ForbiddenPattern::CompleteBipartite(a.r.unwrap_or(2), a.t.unwrap_or(2)),
        _ => th.default_pattern(a.r.unwrap_or(3)),
    };
    if a.max_n > PRUNED_MAX_N {
        return Err(CliError::Usage(format!("--max-n must be at most {PRUNED_MAX_N}")));
    }
    let mut rows = Vec::new();
    for n in 1..=a.max_n {
        let strategy = match a.strategy {
            Some(s) => strategy(s),
            None if n <= EXHAUSTIVE_MAX_N => Strategy::Exhaustive,
            None => Strategy::OrderlyPruned,
        };
        let plan = SearchPlan::new(n, pattern.clone(), strategy).map_err(search_error)?;
        let report = run_plan(&plan, 1).and_then(|r| r.check_against(th)).map_err(search_error)?;
        let check = report.bound_check.as_ref().expect("bound attached");
        rows.push(VerifyRow {
            n,
            pattern: pattern.to_string(),
            strategy: strategy.name().into(),
            ex_value: report.ex_value,
            bound: check.bound.to_string(),
            bound_approx: check.bound.float_view(),
            slack: check.slack(report.ex_value),
            pass: check.pass,
        });
    }
    let all_pass = rows.iter().all(|r| r.pass);
    ctx.emit(&[VerifyReport { suite: th.name().into(), rows, all_pass }])?;
    Ok(Outcome::Success)
}
