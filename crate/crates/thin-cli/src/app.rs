use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use thin_bounds::{bandwidth, diameter, iso_peak, pathwidth};
use thin_box::{build_m1, build_m2, check_bi_semi_proper, check_blocking, check_diagonal, BoxModel, Diagonal, Rect};
use thin_ceo::{solve_ceo, CeoInstance, CeoOutcome};
use thin_fixtures::{by_name, Fixture, Provenance, GALLERY};
use thin_graph::io::{self, Format};
use thin_graph::{Graph, Representation};
use thin_order::{
    consistency_violation, exact_thinness, verify_certificate, Budget, Certificate, SolveError, ThinnessKind,
};
use thin_patterns::{builtin_patterns, classify, format_pattern, ord_membership, parse_patterns};
use thin_patterns::{Certificate as PatternCertificate, ClassVerdict, Membership, PatternFamily};
use thin_vpg::{build_m3, build_m4, build_vpg_3thin, check_blocking_l, GridPathModel};

use crate::exit;
use crate::sweep::{run_sweep, SweepOptions, THEOREMS};

#[derive(Debug, Parser)]
#[command(name = "thin", version, about = "Thinness of graphs: exact values, models, patterns and width bounds")]
pub struct Cli {
    /// Graph input format; detected from the content when omitted.
    #[arg(long, global = true, value_parser = parse_format)]
    pub format: Option<Format>,
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Report::Text)]
    pub output: Report,
    #[command(subcommand)]
    pub command: Command,
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Report {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Build {
    M1,
    M2,
    M3,
    M4,
    Vpg3,
}

#[derive(Debug, Args)]
pub struct BudgetArgs {
    /// Wall-clock limit in seconds.
    #[arg(long)]
    pub budget: Option<f64>,
    /// Search-node limit.
    #[arg(long)]
    pub max_nodes: Option<u64>,
}

impl BudgetArgs {
    fn budget(&self) -> Budget {
        Budget { max_nodes: self.max_nodes, max_time: self.budget.map(Duration::from_secs_f64) }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact thinness of a graph with a certificate.
    Analyze {
        /// Graph file, `-` for stdin, or `gallery:NAME`.
        graph: String,
        #[arg(long, default_value = "thin", value_parser = parse_kind)]
        kind: ThinnessKind,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Verify a certificate `{"order", "classes", "kind", "k"}` against a graph.
    OrderCheck { graph: String, certificate: PathBuf },
    /// Extend per-class orders to a (strongly) consistent total order.
    Extend {
        /// CEO instance JSON file, or `-`.
        instance: String,
    },
    /// Build, check or draw box and grid-path models.
    Model {
        /// Graph source; its gallery certificate is used when `--cert` is absent.
        graph: Option<String>,
        #[arg(long)]
        cert: Option<PathBuf>,
        /// Existing model JSON, or `gallery:NAME` for a fixture with boxes.
        #[arg(long, conflicts_with = "build")]
        model: Option<String>,
        #[arg(long, value_enum)]
        build: Option<Build>,
        /// Print the model predicates instead of the model JSON.
        #[arg(long)]
        check: bool,
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Write the model JSON here.
        #[arg(long, short = 'o')]
        out: Option<PathBuf>,
    },
    /// Ordered forbidden-pattern membership and class recognition.
    Pattern {
        graph: Option<String>,
        /// Builtin family such as `P6789` or `R23`.
        #[arg(long)]
        family: Option<String>,
        /// Patterns in the text DSL; used instead of `--family`.
        #[arg(long)]
        pattern_file: Option<PathBuf>,
        /// Test every known pattern-characterized class.
        #[arg(long)]
        classify: bool,
        /// Print the builtin patterns in the DSL.
        #[arg(long)]
        catalog: bool,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Bandwidth, pathwidth, isoperimetric peak and diameter.
    Bounds { graph: String },
    /// List the built-in graphs, or emit one with its facts as comments.
    Gallery { name: Option<String> },
    /// Cross-check a theorem over small graphs or random instances.
    Sweep {
        /// Sweep name; `list` prints the known ones.
        #[arg(long)]
        theorem: String,
        #[arg(long, default_value_t = 6)]
        n: usize,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Print only failing rows and the summary.
        #[arg(long)]
        quiet: bool,
    },
}

fn parse_kind(s: &str) -> Result<ThinnessKind, String> {
    s.parse()
}

/// What to print on stdout and the exit code.
#[derive(Debug)]
pub struct Output {
    pub text: String,
    pub code: i32,
}

#[derive(Debug)]
pub struct CliError {
    pub message: String,
    pub code: i32,
}

impl CliError {
    fn input(message: impl Into<String>) -> Self {
        CliError { message: message.into(), code: exit::INPUT }
    }

    fn certificate(message: impl Into<String>) -> Self {
        CliError { message: message.into(), code: exit::INVALID_CERTIFICATE }
    }
}

type CliResult = Result<Output, CliError>;

fn ok(text: String) -> CliResult {
    Ok(Output { text, code: exit::OK })
}

pub fn run(cli: &Cli) -> CliResult {
    let json = cli.output == Report::Json;
    match &cli.command {
        Command::Analyze { graph, kind, budget } => analyze(&load(graph, cli.format)?, *kind, budget.budget(), json),
        Command::OrderCheck { graph, certificate } => order_check(&load(graph, cli.format)?, certificate, json),
        Command::Extend { instance } => extend(&read_source(instance)?, json),
        Command::Model { graph, cert, model, build, check, svg, out } => {
            let loaded = graph.as_deref().map(|g| load(g, cli.format)).transpose()?;
            let req = ModelRequest { cert: cert.as_ref(), build: *build, check: *check, svg: svg.as_ref(), out: out.as_ref() };
            match model {
                Some(m) => model_from_file(loaded.as_ref(), m, &req, json),
                None => model_from_certificate(loaded.as_ref(), &req, json),
            }
        }
        Command::Pattern { graph, family, pattern_file, classify, catalog, budget } => {
            if *catalog {
                return ok(builtin_patterns().iter().map(|p| format_pattern(p) + "\n").collect());
            }
            let g = graph.as_deref().ok_or_else(|| CliError::input("a graph is required"))?;
            let g = load(g, cli.format)?;
            if *classify {
                return classify_cmd(&g, budget.budget(), json);
            }
            let fam = match (family, pattern_file) {
                (_, Some(path)) => {
                    let text = read_file(path)?;
                    let patterns = parse_patterns(&text).map_err(|e| CliError::input(e.to_string()))?;
                    let name = path.display().to_string();
                    PatternFamily::new(&name, patterns).map_err(|e| CliError::input(e.to_string()))?
                }
                (Some(f), None) => thin_patterns::family(f).map_err(|e| CliError::input(e.to_string()))?,
                (None, None) => return Err(CliError::input("give --family, --pattern-file, --classify or --catalog")),
            };
            pattern_cmd(&g, &fam, budget.budget(), json)
        }
        Command::Bounds { graph } => bounds(&load(graph, cli.format)?, json),
        Command::Gallery { name } => gallery(name.as_deref(), cli.format.unwrap_or(Format::Text)),
        Command::Sweep { theorem, n, samples, seed, quiet } => {
            sweep(theorem, &SweepOptions { n: *n, samples: *samples, seed: *seed }, *quiet, json)
        }
    }
}

struct Loaded {
    graph: Graph,
    names: Option<Vec<String>>,
    fixture: Option<Fixture>,
}

fn read_file(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

fn read_source(src: &str) -> Result<String, CliError> {
    if src == "-" {
        std::io::read_to_string(std::io::stdin()).map_err(|e| CliError::input(format!("stdin: {e}")))
    } else {
        read_file(&PathBuf::from(src))
    }
}

fn fixture(name: &str) -> Result<Fixture, CliError> {
    by_name(name).ok_or_else(|| CliError::input(format!("no gallery graph `{name}` (see `thin gallery`)")))
}

fn load(src: &str, format: Option<Format>) -> Result<Loaded, CliError> {
    if let Some(name) = src.strip_prefix("gallery:") {
        let f = fixture(name)?;
        return Ok(Loaded { graph: f.graph.clone(), names: Some(f.names.clone()), fixture: Some(f) });
    }
    let text = read_source(src)?;
    let format = format.unwrap_or(if text.trim_start().starts_with('{') { Format::Json } else { Format::Text });
    let parsed = io::parse(&text, format).map_err(|e| CliError::input(format!("{src}: {e}")))?;
    Ok(Loaded { graph: parsed.graph, names: parsed.names, fixture: None })
}

fn render(json: bool, value: Value, text: String) -> String {
    if json {
        serde_json::to_string_pretty(&value).expect("json value") + "\n"
    } else {
        text
    }
}

fn analyze(l: &Loaded, kind: ThinnessKind, budget: Budget, json: bool) -> CliResult {
    match exact_thinness(&l.graph, kind, budget) {
        Ok(r) => {
            let cert = Certificate::new(&r.certificate, kind);
            let value = json!({"kind": kind.name(), "value": r.value, "exact": true, "nodes": r.nodes, "certificate": cert});
            ok(render(json, value, format!("{kind}={}\ncertificate {}\n", r.value, cert.to_json())))
        }
        Err(SolveError::BudgetExceeded { best, certificate, nodes }) => {
            let cert = Certificate::new(&certificate, kind);
            let value = json!({"kind": kind.name(), "value": best, "exact": false, "nodes": nodes, "certificate": cert});
            let text = format!("{kind}<={best} (budget exceeded after {nodes} nodes)\ncertificate {}\n", cert.to_json());
            Ok(Output { text: render(json, value, text), code: exit::BUDGET })
        }
        Err(e) => Err(CliError::input(e.to_string())),
    }
}

fn read_certificate(path: &PathBuf) -> Result<(Representation, ThinnessKind), CliError> {
    let cert = Certificate::from_json(&read_file(path)?).map_err(|e| CliError::input(e.to_string()))?;
    let rep = cert.to_representation().map_err(|e| CliError::certificate(e.to_string()))?;
    Ok((rep, cert.kind))
}

fn why_invalid(g: &Graph, rep: &Representation, kind: ThinnessKind) -> Option<String> {
    if rep.n() != g.n() {
        return Some(format!("certificate covers {} vertices, graph has {}", rep.n(), g.n()));
    }
    if verify_certificate(g, rep, kind) {
        return None;
    }
    let triple = consistency_violation(g, rep, kind.mode()).ok().flatten();
    Some(match triple {
        Some(t) => format!(
            "order violates {} consistency at r={} s={} t={}{}",
            if kind.proper { "strong" } else { "plain" },
            t.r,
            t.s,
            t.t,
            if t.reversed { " (reversed order)" } else { "" }
        ),
        None => {
            let (u, v) = g.edges().into_iter().find(|&(u, v)| rep.partition.class_of(u) == rep.partition.class_of(v)).expect("independence fails");
            format!("edge {u}-{v} lies inside one class")
        }
    })
}

fn order_check(l: &Loaded, path: &PathBuf, json: bool) -> CliResult {
    let (rep, kind) = read_certificate(path)?;
    let reason = why_invalid(&l.graph, &rep, kind);
    let value = json!({"kind": kind.name(), "k": rep.partition.k(), "valid": reason.is_none(), "reason": reason});
    let text = match &reason {
        None => format!("valid {kind} certificate with k={}\n", rep.partition.k()),
        Some(r) => format!("invalid: {r}\n"),
    };
    let code = if reason.is_none() { exit::OK } else { exit::INVALID_CERTIFICATE };
    Ok(Output { text: render(json, value, text), code })
}

fn extend(input: &str, json: bool) -> CliResult {
    let (g, p, po, mode) = CeoInstance::parse(input).map_err(|e| CliError::input(e.to_string()))?;
    let outcome = solve_ceo(&g, &p, &po, mode).map_err(|e| CliError::input(e.to_string()))?;
    let (value, text) = match outcome {
        CeoOutcome::Extended(order) => (
            json!({"feasible": true, "order": order.seq()}),
            format!("extended order {:?}\n", order.seq()),
        ),
        CeoOutcome::Infeasible { cycle } => {
            (json!({"feasible": false, "cycle": cycle}), format!("infeasible: precedence cycle {cycle:?}\n"))
        }
    };
    ok(render(json, value, text))
}

struct ModelRequest<'a> {
    cert: Option<&'a PathBuf>,
    build: Option<Build>,
    check: bool,
    svg: Option<&'a PathBuf>,
    out: Option<&'a PathBuf>,
}

enum Model {
    Boxes(BoxModel),
    Paths(GridPathModel),
}

impl Model {
    fn to_json(&self) -> String {
        match self {
            Model::Boxes(m) => m.to_json(),
            Model::Paths(m) => m.to_json(),
        }
    }

    fn intersection_graph(&self) -> Graph {
        match self {
            Model::Boxes(m) => m.intersection_graph(),
            Model::Paths(m) => m.intersection_graph(),
        }
    }
}

fn fixture_boxes(f: &Fixture) -> Result<BoxModel, CliError> {
    let boxes = f.boxes.as_ref().ok_or_else(|| CliError::input(format!("gallery graph `{}` has no box model", f.name)))?;
    let rects: Vec<Rect> = boxes
        .iter()
        .map(|b| Rect { vertex: b.vertex, x1: b.x1, x2: b.x2, y1: b.y1, y2: b.y2, class: Some(b.class) })
        .collect();
    let lo = rects.iter().map(|r| r.y2 - r.x2).min().unwrap_or(0);
    let hi = rects.iter().map(|r| r.y2 - r.x2).max().unwrap_or(0);
    BoxModel::new(lo, hi, rects).map_err(|e| CliError::input(e.to_string()))
}

fn model_from_file(graph: Option<&Loaded>, src: &str, req: &ModelRequest, json: bool) -> CliResult {
    let (model, fixture_graph) = match src.strip_prefix("gallery:") {
        Some(name) => {
            let f = fixture(name)?;
            (Model::Boxes(fixture_boxes(&f)?), Some(f))
        }
        None => {
            let text = read_source(src)?;
            let model = match BoxModel::from_json(&text) {
                Ok(m) => Model::Boxes(m),
                Err(box_err) => Model::Paths(GridPathModel::from_json(&text).map_err(|path_err| {
                    CliError::input(format!("{src}: neither a box model ({box_err}) nor a path model ({path_err})"))
                })?),
            };
            (model, None)
        }
    };
    let g = graph.map(|l| &l.graph).or(fixture_graph.as_ref().map(|f| &f.graph));
    let names = graph.and_then(|l| l.names.clone()).or(fixture_graph.as_ref().map(|f| f.names.clone()));
    emit_model(&model, g, None, names.as_deref(), req, json)
}

fn model_from_certificate(graph: Option<&Loaded>, req: &ModelRequest, json: bool) -> CliResult {
    let l = graph.ok_or_else(|| CliError::input("give a graph with --build, or --model"))?;
    let build = req.build.ok_or_else(|| CliError::input("give --build m1|m2|m3|m4|vpg3 or --model"))?;
    let (rep, kind) = match req.cert {
        Some(path) => read_certificate(path)?,
        None => {
            let rep = l.fixture.as_ref().and_then(|f| f.representation.clone());
            (rep.ok_or_else(|| CliError::input("no certificate: pass --cert"))?, ThinnessKind::THIN)
        }
    };
    if let Some(reason) = why_invalid(&l.graph, &rep, ThinnessKind { proper: false, independent: kind.independent }) {
        return Err(CliError::certificate(format!("certificate does not verify: {reason}")));
    }
    let independent = l.graph.edges().iter().all(|&(u, v)| rep.partition.class_of(u) != rep.partition.class_of(v));
    let built = match build {
        Build::M1 => build_m1(&l.graph, &rep).map(Model::Boxes).map_err(|e| e.to_string()),
        Build::M2 => build_m1(&l.graph, &rep).and_then(|m| build_m2(&m)).map(Model::Boxes).map_err(|e| e.to_string()),
        Build::M3 => build_m3(&l.graph, &rep, independent).map(Model::Paths).map_err(|e| e.to_string()),
        Build::M4 => build_m4(&l.graph, &rep).map(Model::Paths).map_err(|e| e.to_string()),
        Build::Vpg3 => build_vpg_3thin(&l.graph, &rep, independent).map(Model::Paths).map_err(|e| e.to_string()),
    };
    let model = built.map_err(CliError::input)?;
    emit_model(&model, Some(&l.graph), Some(&rep), l.names.as_deref(), req, json)
}

fn emit_model(
    model: &Model,
    g: Option<&Graph>,
    rep: Option<&Representation>,
    names: Option<&[String]>,
    req: &ModelRequest,
    json: bool,
) -> CliResult {
    let write = |path: &PathBuf, content: &str| {
        std::fs::write(path, content).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
    };
    let body = model.to_json();
    if let Some(path) = req.out {
        write(path, &(body.clone() + "\n"))?;
    }
    if let Some(path) = req.svg {
        let svg = match model {
            Model::Boxes(m) => thin_box::svg::render(m, names),
            Model::Paths(m) => m.to_svg(|v| rep.map(|r| r.partition.class_of(v) as u8 + 1), names),
        };
        write(path, &svg)?;
    }
    if !req.check {
        return ok(if req.out.is_some() { String::new() } else { body + "\n" });
    }
    let mut report = match model {
        Model::Boxes(m) => box_predicates(m),
        Model::Paths(m) => path_predicates(m),
    };
    if let Some(g) = g {
        report.push(("reproduces_graph", json!(model.intersection_graph().same_edges(g))));
    }
    let value = Value::Object(report.iter().map(|(k, v)| (k.to_string(), v.clone())).collect());
    let text = report.iter().map(|(k, v)| format!("{k}={}\n", plain(v))).collect();
    ok(render(json, value, text))
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Object(o) => {
            let fields: Vec<String> = o.iter().map(|(k, v)| format!("{k}={}", plain(v))).collect();
            format!("({})", fields.join(", "))
        }
        other => other.to_string(),
    }
}

/// `true`, or `false` with a witness pair, or `n/a` when the predicate's
/// precondition fails.
fn verdict<E>(r: Result<Option<(usize, usize)>, E>) -> Value {
    match r {
        Ok(None) => json!(true),
        Ok(Some((a, b))) => json!({"holds": false, "witness": [a, b]}),
        Err(_) => json!("n/a"),
    }
}

fn box_predicates(m: &BoxModel) -> Vec<(&'static str, Value)> {
    let d = check_diagonal(m);
    vec![
        ("weakly_two_diagonal", json!(d.diagonal != Diagonal::Neither)),
        ("two_diagonal", json!(d.diagonal == Diagonal::TwoDiagonal)),
        ("blocking", verdict(check_blocking(m))),
        ("bi_semi_proper", verdict(check_bi_semi_proper(m))),
    ]
}

fn path_predicates(m: &GridPathModel) -> Vec<(&'static str, Value)> {
    let corners: Option<Vec<(i64, i64)>> = m.paths.iter().map(|p| p.l_parts().map(|c| c.0)).collect();
    let mut out = vec![
        ("max_bends", json!(m.max_bends())),
        ("all_l", json!(corners.is_some())),
    ];
    if let Some(c) = corners {
        out.push(("corners_on_descending_diagonal", json!(c.iter().all(|&(x, y)| x + y == c[0].0 + c[0].1))));
    }
    out.push(("l_blocking", verdict(check_blocking_l(m))));
    out
}

fn membership_json(m: &Membership) -> Value {
    match m {
        Membership::Member(c) => match c {
            PatternCertificate::Order(o) => json!({"member": true, "order": o.seq()}),
            PatternCertificate::Colored { order, white } => json!({"member": true, "order": order.seq(), "white": white}),
            PatternCertificate::Sided { a, b } => json!({"member": true, "side_a": a, "side_b": b}),
        },
        Membership::NonMember => json!({"member": false}),
        Membership::BudgetExceeded { nodes } => json!({"member": null, "nodes": nodes}),
    }
}

fn pattern_cmd(l: &Loaded, fam: &PatternFamily, budget: Budget, json: bool) -> CliResult {
    let m = ord_membership(&l.graph, fam, budget).map_err(|e| CliError::input(e.to_string()))?;
    let value = membership_json(&m);
    let text = format!("{}: {}\n", fam.name, plain(&value));
    let code = if matches!(m, Membership::BudgetExceeded { .. }) { exit::BUDGET } else { exit::OK };
    Ok(Output { text: render(json, value, text), code })
}

fn classify_cmd(l: &Loaded, budget: Budget, json: bool) -> CliResult {
    let report = classify(&l.graph, budget).map_err(|e| CliError::input(e.to_string()))?;
    let row = |v: &ClassVerdict| (v.class, v.family, membership_json(&v.outcome));
    let rows: Vec<_> = report.verdicts.iter().map(row).collect();
    let value: Vec<Value> = rows.iter().map(|(c, f, m)| json!({"class": c, "family": f, "result": m})).collect();
    let text = rows.iter().map(|(c, f, m)| format!("{c} [{f}]: {}\n", plain(m))).collect();
    let exceeded = report.verdicts.iter().any(|v| matches!(v.outcome, Membership::BudgetExceeded { .. }));
    Ok(Output { text: render(json, Value::Array(value), text), code: if exceeded { exit::BUDGET } else { exit::OK } })
}

fn bounds(l: &Loaded, json: bool) -> CliResult {
    let g = &l.graph;
    let mut fields: Vec<(&str, Value)> = Vec::new();
    let mut extra: Vec<(&str, String)> = Vec::new();
    match bandwidth(g) {
        Ok((bw, f)) => {
            fields.push(("bandwidth", json!(bw)));
            extra.push(("labeling", f.to_json()));
        }
        Err(e) => fields.push(("bandwidth", json!(e.to_string()))),
    }
    match pathwidth(g) {
        Ok((pw, pd)) => {
            fields.push(("pathwidth", json!(pw)));
            extra.push(("decomposition", pd.to_json()));
        }
        Err(e) => fields.push(("pathwidth", json!(e.to_string()))),
    }
    fields.push(("peak", iso_peak(g).map_or_else(|e| json!(e.to_string()), |b| json!(b))));
    fields.push(("diameter", diameter(g).map_or_else(|e| json!(e.to_string()), |d| json!(d))));
    fields.push(("max_degree", json!(g.max_degree())));
    let mut value = serde_json::Map::new();
    for (k, v) in &fields {
        value.insert(k.to_string(), v.clone());
    }
    for (k, v) in &extra {
        value.insert(k.to_string(), serde_json::from_str(v).expect("emitted json"));
    }
    let text = fields.iter().map(|(k, v)| format!("{k}={}\n", plain(v))).chain(extra.iter().map(|(k, v)| format!("{k} {v}\n"))).collect();
    ok(render(json, Value::Object(value), text))
}

fn gallery(name: Option<&str>, format: Format) -> CliResult {
    let Some(name) = name else {
        let mut text = String::new();
        for pattern in GALLERY {
            let sample = pattern.replace("<r>", "3").replace("<n>", "6").replace("<a>,<b>", "3,3");
            let f = fixture(&sample)?;
            text += &format!("{pattern:<16} e.g. {sample}: n={} m={}\n", f.graph.n(), f.graph.edge_count());
        }
        return ok(text);
    };
    let f = fixture(name)?;
    Ok(Output {
        text: match format {
            Format::Json => io::to_json(&f.graph, Some(&f.names)) + "\n",
            Format::Text => {
                let mut comments = vec![f.name.clone(), format!("names {}", f.names.join(" "))];
                for fact in &f.facts {
                    let source = match fact.provenance {
                        Provenance::Stated => "stated",
                        Provenance::Derived => "derived",
                        Provenance::UnverifiedCitation => "cited, unverified",
                    };
                    comments.push(format!("{}={} ({source})", fact.property, fact.value));
                }
                if let Some(rep) = &f.representation {
                    comments.push(format!("certificate {}", Certificate::new(rep, ThinnessKind::THIN).to_json()));
                }
                io::to_text(&f.graph, &comments)
            }
        },
        code: exit::OK,
    })
}

fn sweep(theorem: &str, opts: &SweepOptions, quiet: bool, json: bool) -> CliResult {
    if theorem == "list" {
        return ok(THEOREMS.iter().map(|(name, what, _)| format!("{name:<22} {what}\n")).collect());
    }
    let report = run_sweep(theorem, opts).map_err(CliError::input)?;
    let failures = report.failures().count();
    let code = if failures == 0 { exit::OK } else { exit::SWEEP_MISMATCH };
    let value = json!({
        "theorem": report.theorem,
        "checked": report.checked(),
        "failures": failures,
        "notes": report.notes,
        "rows": report.rows.iter().filter(|r| !quiet || !r.ok)
            .map(|r| json!({"instance": r.instance, "detail": r.detail, "ok": r.ok})).collect::<Vec<_>>(),
    });
    let mut text = String::new();
    for r in report.rows.iter().filter(|r| !quiet || !r.ok) {
        text += &format!("{} {} | {}\n", if r.ok { "PASS" } else { "FAIL" }, r.instance, r.detail);
    }
    for note in &report.notes {
        text += &format!("note: {note}\n");
    }
    text += &format!("{}: {} checked, {} mismatches\n", report.theorem, report.checked(), failures);
    Ok(Output { text: render(json, value, text), code })
}
