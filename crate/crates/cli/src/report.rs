//! Report types with fixed field sets, rendered as human text, JSON lines or CSV.
//!
//! Exact values (bounds, densities, ε) are carried as strings such as `25/4`
//! or `1 + sqrt(13)`; floats appear only in the `*_approx` and `slack` fields.

use std::io::{self, Write};

use extremal_core::bounds::BoundValue;
use extremal_core::lemma::{
    BlowupError, BlowupWitness, DenseCoreResult, LayerRow, ProofFailure, ProofStep,
};
use extremal_core::{to_graph6, ExtremalReport, Graph, Rational, VertexSet};
use serde::Serialize;

use crate::args::Format;

pub trait Report: Serialize {
    fn human(&self, out: &mut dyn Write) -> io::Result<()>;
    fn csv_header() -> &'static [&'static str];
    fn csv_rows(&self) -> Vec<Vec<String>>;
}

pub fn emit<R: Report>(reports: &[R], format: Format, out: &mut dyn Write) -> io::Result<()> {
    match format {
        Format::Human => reports.iter().try_for_each(|r| r.human(out)),
        Format::Json => reports.iter().try_for_each(|r| {
            serde_json::to_writer(&mut *out, r)?;
            writeln!(out)
        }),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(R::csv_header())?;
            for row in reports.iter().flat_map(|r| r.csv_rows()) {
                w.write_record(&row)?;
            }
            w.flush()
        }
    }
}

fn members(s: VertexSet) -> Vec<usize> {
    s.iter().collect()
}

fn opt_q(q: Option<Rational>) -> Option<String> {
    q.map(|q| q.to_string())
}

fn cell<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(ToString::to_string).unwrap_or_default()
}

fn join(vs: &[usize], sep: &str) -> String {
    vs.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
}

// ---------------------------------------------------------------------------

#[derive(Debug, Serialize)]
pub struct BoundReport {
    pub bound: String,
    pub n: Option<usize>,
    pub r: Option<usize>,
    pub t: Option<usize>,
    pub k: Option<usize>,
    pub eps: Option<String>,
    pub c: Option<String>,
    pub chi: Option<usize>,
    pub exact: String,
    pub approx: f64,
    pub floor: i128,
}

impl BoundReport {
    pub fn new(bound: &str, value: &BoundValue) -> Self {
        BoundReport {
            bound: bound.into(),
            n: None,
            r: None,
            t: None,
            k: None,
            eps: None,
            c: None,
            chi: None,
            exact: value.to_string(),
            approx: value.float_view(),
            floor: value.floor(),
        }
    }
}

impl Report for BoundReport {
    fn human(&self, out: &mut dyn Write) -> io::Result<()> {
        writeln!(out, "{} ({})", self.exact, self.approx)
    }

    fn csv_header() -> &'static [&'static str] {
        &["bound", "n", "r", "t", "k", "eps", "c", "chi", "exact", "approx", "floor"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        vec![vec![
            self.bound.clone(),
            cell(&self.n),
            cell(&self.r),
            cell(&self.t),
            cell(&self.k),
            cell(&self.eps),
            cell(&self.c),
            cell(&self.chi),
            self.exact.clone(),
            self.approx.to_string(),
            self.floor.to_string(),
        ]]
    }
}

// ---------------------------------------------------------------------------

#[derive(Debug, Serialize)]
pub struct DetectReport {
    pub graph: String,
    pub pattern: String,
    pub contains: bool,
    /// Pattern vertex `i` maps to host vertex `embedding[i]`.
    pub embedding: Option<Vec<usize>>,
}

impl Report for DetectReport {
    fn human(&self, out: &mut dyn Write) -> io::Result<()> {
        match &self.embedding {
            Some(e) => writeln!(out, "{} {}", self.contains, join(e, " ")),
            None => writeln!(out, "{}", self.contains),
        }
    }

    fn csv_header() -> &'static [&'static str] {
        &["graph", "pattern", "contains", "embedding"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        let embedding = self.embedding.as_deref().map(|e| join(e, " ")).unwrap_or_default();
        vec![vec![self.graph.clone(), self.pattern.clone(), self.contains.to_string(), embedding]]
    }
}

// ---------------------------------------------------------------------------

#[derive(Debug, Serialize)]
pub struct BoundCheckReport {
    pub theorem: String,
    pub bound: String,
    pub bound_approx: f64,
    pub slack: f64,
    pub pass: bool,
}

#[derive(Debug, Serialize)]
pub struct SearchReport {
    pub n: usize,
    pub pattern: String,
    pub strategy: String,
    pub ex_value: usize,
    pub witness: String,
    pub witness_edges: Vec<(usize, usize)>,
    pub graphs_explored: u64,
    pub pattern_larger_than_n: bool,
    pub bound_check: Option<BoundCheckReport>,
}

impl From<&ExtremalReport> for SearchReport {
    fn from(r: &ExtremalReport) -> Self {
        SearchReport {
            n: r.n,
            pattern: r.pattern.to_string(),
            strategy: r.strategy.name().into(),
            ex_value: r.ex_value,
            witness: to_graph6(&r.witness),
            witness_edges: r.witness.edges().collect(),
            graphs_explored: r.graphs_explored,
            pattern_larger_than_n: r.pattern_larger_than_n,
            bound_check: r.bound_check.as_ref().map(|b| BoundCheckReport {
                theorem: b.theorem.name().into(),
                bound: b.bound.to_string(),
                bound_approx: b.bound.float_view(),
                slack: b.slack(r.ex_value),
                pass: b.pass,
            }),
        }
    }
}

impl Report for SearchReport {
    fn human(&self, out: &mut dyn Write) -> io::Result<()> {
        writeln!(out, "ex({}, {}) = {}", self.n, self.pattern, self.ex_value)?;
        writeln!(out, "  strategy         {}", self.strategy)?;
        writeln!(out, "  witness          {}", self.witness)?;
        writeln!(out, "  graphs explored  {}", self.graphs_explored)?;
        if self.pattern_larger_than_n {
            writeln!(out, "  pattern has more vertices than n; the complete graph is extremal")?;
        }
        if let Some(b) = &self.bound_check {
            let verdict = if b.pass { "pass" } else { "FAIL" };
            writeln!(out, "  {:<17}{} ({})", format!("{} bound", b.theorem), b.bound, b.bound_approx)?;
            writeln!(out, "  slack            {}", b.slack)?;
            writeln!(out, "  verdict          {verdict}")?;
        }
        Ok(())
    }

    fn csv_header() -> &'static [&'static str] {
        &["n", "pattern", "strategy", "ex_value", "witness", "graphs_explored", "theorem", "bound", "bound_approx", "slack", "pass"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        let b = self.bound_check.as_ref();
        vec![vec![
            self.n.to_string(),
            self.pattern.clone(),
            self.strategy.clone(),
            self.ex_value.to_string(),
            self.witness.clone(),
            self.graphs_explored.to_string(),
            b.map(|b| b.theorem.clone()).unwrap_or_default(),
            b.map(|b| b.bound.clone()).unwrap_or_default(),
            b.map(|b| b.bound_approx.to_string()).unwrap_or_default(),
            b.map(|b| b.slack.to_string()).unwrap_or_default(),
            b.map(|b| b.pass.to_string()).unwrap_or_default(),
        ]]
    }
}

// ---------------------------------------------------------------------------

#[derive(Debug, Serialize)]
pub struct ConstructReport {
    pub kind: String,
    pub graph6: String,
    pub n: usize,
    pub m: usize,
}

impl ConstructReport {
    pub fn new(kind: &str, g: &Graph) -> Self {
        ConstructReport { kind: kind.into(), graph6: to_graph6(g), n: g.order(), m: g.edge_count() }
    }
}

impl Report for ConstructReport {
    fn human(&self, out: &mut dyn Write) -> io::Result<()> {
        writeln!(out, "{}", self.graph6)
    }

    fn csv_header() -> &'static [&'static str] {
        &["kind", "graph6", "n", "m"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        vec![vec![self.kind.clone(), self.graph6.clone(), self.n.to_string(), self.m.to_string()]]
    }
}

// ---------------------------------------------------------------------------

#[derive(Debug, Serialize)]
pub struct RemovalRow {
    pub vertex: usize,
    pub degree: usize,
    pub size: usize,
}

#[derive(Debug, Serialize)]
pub struct CoreReport {
    pub graph: String,
    pub r: usize,
    pub eps: String,
    pub n: usize,
    pub edges: usize,
    pub edge_threshold: String,
    pub hypothesis_met: bool,
    pub p: usize,
    pub survivors: Vec<usize>,
    pub core: String,
    pub removal_trace: Vec<RemovalRow>,
    pub degree_invariant_holds: bool,
    pub guarantee_holds: Option<bool>,
    pub findings: Vec<String>,
}

impl CoreReport {
    pub fn new(graph6: &str, edges: usize, threshold: &BoundValue, res: &DenseCoreResult) -> Self {
        CoreReport {
            graph: graph6.into(),
            r: res.params.r(),
            eps: res.params.eps().to_string(),
            n: res.n,
            edges,
            edge_threshold: threshold.to_string(),
            hypothesis_met: res.hypothesis_met,
            p: res.p,
            survivors: members(res.survivors),
            core: to_graph6(&res.core),
            removal_trace: res
                .removal_trace
                .iter()
                .map(|r| RemovalRow { vertex: r.vertex, degree: r.degree, size: r.size })
                .collect(),
            degree_invariant_holds: res.degree_invariant_holds(),
            guarantee_holds: res.guarantee_holds,
            findings: res.findings.iter().map(ToString::to_string).collect(),
        }
    }
}

impl Report for CoreReport {
    fn human(&self, out: &mut dyn Write) -> io::Result<()> {
        writeln!(out, "graph {} (n = {}, m = {}), r = {}, eps = {}", self.graph, self.n, self.edges, self.r, self.eps)?;
        writeln!(
            out,
            "  edge hypothesis  m >= {}: {}",
            self.edge_threshold,
            if self.hypothesis_met { "met" } else { "not met" }
        )?;
        writeln!(out, "  core size p      {}", self.p)?;
        writeln!(out, "  survivors        {}", join(&self.survivors, " "))?;
        if !self.removal_trace.is_empty() {
            writeln!(out, "  step  vertex  degree  size")?;
            for (i, r) in self.removal_trace.iter().enumerate() {
                writeln!(out, "  {:>4}  {:>6}  {:>6}  {:>4}", i + 1, r.vertex, r.degree, r.size)?;
            }
        }
        if let Some(g) = self.guarantee_holds {
            writeln!(out, "  p > r*eps*n/3    {g}")?;
        }
        for f in &self.findings {
            writeln!(out, "  finding: {f}")?;
        }
        Ok(())
    }

    fn csv_header() -> &'static [&'static str] {
        &["graph", "r", "eps", "n", "edges", "hypothesis_met", "p", "removed", "guarantee_holds", "findings"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        let removed: Vec<usize> = self.removal_trace.iter().map(|r| r.vertex).collect();
        vec![vec![
            self.graph.clone(),
            self.r.to_string(),
            self.eps.clone(),
            self.n.to_string(),
            self.edges.to_string(),
            self.hypothesis_met.to_string(),
            self.p.to_string(),
            join(&removed, " "),
            cell(&self.guarantee_holds),
            self.findings.join("; "),
        ]]
    }
}

// ---------------------------------------------------------------------------

#[derive(Debug, Serialize)]
pub struct ProofFailureReport {
    pub depth: usize,
    pub step: String,
    pub detail: String,
}

impl From<&ProofFailure> for ProofFailureReport {
    fn from(f: &ProofFailure) -> Self {
        let step = match f.step {
            ProofStep::DenseCoreTooSmall { .. } => "dense-core-too-small",
            ProofStep::SExceedsN { .. } => "s-exceeds-n",
            ProofStep::RTooSmall { .. } => "r-too-small",
        };
        ProofFailureReport { depth: f.depth, step: step.into(), detail: f.to_string() }
    }
}

#[derive(Debug, Serialize)]
pub struct BlowupReport {
    pub graph: String,
    pub r: usize,
    pub t: usize,
    pub eps: Option<String>,
    pub mode: String,
    pub found: bool,
    pub method: Option<String>,
    pub parts: Option<Vec<Vec<usize>>>,
    pub proof_failure: Option<ProofFailureReport>,
    /// `proof-failed`, `s-cap-exceeded` or `no-blowup` when nothing was found.
    pub outcome: String,
}

impl BlowupReport {
    pub fn new(
        graph6: &str,
        r: usize,
        t: usize,
        eps: Option<Rational>,
        mode: &str,
        result: &Result<BlowupWitness, BlowupError>,
    ) -> Self {
        let mut report = BlowupReport {
            graph: graph6.into(),
            r,
            t,
            eps: opt_q(eps),
            mode: mode.into(),
            found: false,
            method: None,
            parts: None,
            proof_failure: None,
            outcome: String::new(),
        };
        match result {
            Ok(w) => {
                report.found = true;
                report.method = Some(w.method.name().into());
                report.parts = Some(w.parts.iter().map(|&p| members(p)).collect());
                report.outcome = "found".into();
            }
            Err(BlowupError::ProofNotFound(f)) => {
                report.proof_failure = Some(f.into());
                report.outcome = "proof-failed".into();
            }
            Err(BlowupError::SCapExceeded(f)) => {
                report.proof_failure = Some(f.into());
                report.outcome = "s-cap-exceeded".into();
            }
            Err(BlowupError::NotFound { proof_attempt }) => {
                report.proof_failure = proof_attempt.as_ref().map(Into::into);
                report.outcome = "no-blowup".into();
            }
            Err(e) => unreachable!("parameter errors are handled before reporting: {e}"),
        }
        report
    }
}

impl Report for BlowupReport {
    fn human(&self, out: &mut dyn Write) -> io::Result<()> {
        write!(out, "graph {}: ", self.graph)?;
        match &self.parts {
            Some(parts) => {
                let parts: Vec<String> = parts.iter().map(|p| format!("{{{}}}", join(p, ","))).collect();
                writeln!(out, "found ({}) {}", self.method.as_deref().unwrap_or(""), parts.join(" "))?;
            }
            None => writeln!(out, "not found ({})", self.outcome)?,
        }
        if let Some(f) = &self.proof_failure {
            writeln!(out, "  construction stopped at {}", f.detail)?;
        }
        Ok(())
    }

    fn csv_header() -> &'static [&'static str] {
        &["graph", "r", "t", "eps", "mode", "outcome", "method", "parts", "proof_failure"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        let parts = self
            .parts
            .as_ref()
            .map(|ps| ps.iter().map(|p| join(p, " ")).collect::<Vec<_>>().join(" | "))
            .unwrap_or_default();
        vec![vec![
            self.graph.clone(),
            self.r.to_string(),
            self.t.to_string(),
            cell(&self.eps),
            self.mode.clone(),
            self.outcome.clone(),
            cell(&self.method),
            parts,
            self.proof_failure.as_ref().map(|f| f.detail.clone()).unwrap_or_default(),
        ]]
    }
}

// ---------------------------------------------------------------------------

#[derive(Debug, Serialize)]
pub struct LayerRowReport {
    pub index: usize,
    pub size: usize,
    pub vertices: Vec<usize>,
    pub intra_edges: usize,
    pub cross_edges: Option<usize>,
    pub intra_density: Option<String>,
    pub cross_density: Option<String>,
    pub ratio: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct LayersReport {
    pub graph: String,
    pub root: usize,
    pub depth: usize,
    pub rows: Vec<LayerRowReport>,
}

impl LayersReport {
    pub fn new(graph6: &str, root: usize, layers: &[VertexSet], intra: &[usize], cross: &[usize], rows: &[LayerRow]) -> Self {
        LayersReport {
            graph: graph6.into(),
            root,
            depth: rows.len() - 1,
            rows: rows
                .iter()
                .map(|row| LayerRowReport {
                    index: row.index,
                    size: row.size,
                    vertices: members(layers[row.index]),
                    intra_edges: intra[row.index],
                    cross_edges: cross.get(row.index).copied(),
                    intra_density: opt_q(row.intra_density),
                    cross_density: opt_q(row.cross_density),
                    ratio: opt_q(row.ratio),
                })
                .collect(),
        }
    }
}

impl Report for LayersReport {
    fn human(&self, out: &mut dyn Write) -> io::Result<()> {
        writeln!(out, "graph {}, root {}, depth {}", self.graph, self.root, self.depth)?;
        writeln!(out, "  {:>3}  {:>4}  {:>10}  {:>10}  {:>8}", "i", "n_i", "d(V_i)", "d(V_i,V+1)", "ratio")?;
        let dash = || "-".to_string();
        for row in &self.rows {
            writeln!(
                out,
                "  {:>3}  {:>4}  {:>10}  {:>10}  {:>8}",
                row.index,
                row.size,
                row.intra_density.clone().unwrap_or_else(dash),
                row.cross_density.clone().unwrap_or_else(dash),
                row.ratio.clone().unwrap_or_else(dash),
            )?;
        }
        Ok(())
    }

    fn csv_header() -> &'static [&'static str] {
        &["graph", "root", "index", "size", "intra_edges", "cross_edges", "intra_density", "cross_density", "ratio"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        self.rows
            .iter()
            .map(|row| {
                vec![
                    self.graph.clone(),
                    self.root.to_string(),
                    row.index.to_string(),
                    row.size.to_string(),
                    row.intra_edges.to_string(),
                    cell(&row.cross_edges),
                    cell(&row.intra_density),
                    cell(&row.cross_density),
                    cell(&row.ratio),
                ]
            })
            .collect()
    }
}

// ---------------------------------------------------------------------------

#[derive(Debug, Serialize)]
pub struct VerifyRow {
    pub n: usize,
    pub pattern: String,
    pub strategy: String,
    pub ex_value: usize,
    pub bound: String,
    pub bound_approx: f64,
    pub slack: f64,
    pub pass: bool,
}

#[derive(Debug, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub rows: Vec<VerifyRow>,
    pub all_pass: bool,
}

impl Report for VerifyReport {
    fn human(&self, out: &mut dyn Write) -> io::Result<()> {
        writeln!(out, "suite {}", self.suite)?;
        writeln!(out, "  {:>3}  {:>8}  {:>4}  {:>24}  {:>10}  {}", "n", "pattern", "ex", "bound", "slack", "verdict")?;
        for row in &self.rows {
            writeln!(
                out,
                "  {:>3}  {:>8}  {:>4}  {:>24}  {:>10.4}  {}",
                row.n,
                row.pattern,
                row.ex_value,
                row.bound,
                row.slack,
                if row.pass { "pass" } else { "FAIL" }
            )?;
        }
        writeln!(out, "{}", if self.all_pass { "all pass" } else { "FAILURES" })
    }

    fn csv_header() -> &'static [&'static str] {
        &["suite", "n", "pattern", "strategy", "ex_value", "bound", "bound_approx", "slack", "pass"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        self.rows
            .iter()
            .map(|row| {
                vec![
                    self.suite.clone(),
                    row.n.to_string(),
                    row.pattern.clone(),
                    row.strategy.clone(),
                    row.ex_value.to_string(),
                    row.bound.clone(),
                    row.bound_approx.to_string(),
                    row.slack.to_string(),
                    row.pass.to_string(),
                ]
            })
            .collect()
    }
}
