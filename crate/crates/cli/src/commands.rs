use crate::args::{Cli, Command, Emit, Input, Member, Stream};
use dspec_core::charpoly::closed_form;
use dspec_core::ds::{
    cospectral_census, ds_check_batch, edge_count_lemma_check, family_members, fixture, fixture_table_check,
    forbidden_check, graph_fixtures, ingest_graph6, proof_table_check, Context, Fixture, Ingested, Source, Strictness,
    Verdict, PROOF_TOL, TABLE_TOL,
};
use dspec_core::graph::{graph6, make_family_with};
use dspec_core::json::fixed6_number;
use dspec_core::spectral::DEFAULT_TOL;
use dspec_core::sweep::{claim_sweep, closed_form_sweep, sign_case, sign_sweep, SweepKind, SweepLimits};
use dspec_core::{apsp, dist_charpoly, eigenvalues, DistanceMatrix, Error, FamilySpec, Graph};
use serde_json::{json, Value};
use std::fs::File;
use std::io::{self, BufReader};
use std::path::Path;

/// Why a command could not produce a report.
pub enum Failure {
    /// Bad flags or inputs; exit 2 with usage.
    Usage(String),
    /// A computation failed after the inputs were accepted.
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NoConvergence { .. } => Failure::Runtime(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<String> for Failure {
    fn from(s: String) -> Self {
        Failure::Usage(s)
    }
}

pub enum Output {
    Json(Value),
    Text(String),
}

pub struct Outcome {
    pub output: Output,
    pub summary: String,
    pub pass: bool,
}

type Run = Result<Outcome, Failure>;

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types always serialize")
}

fn done(doc: Value, summary: String, pass: bool) -> Run {
    Ok(Outcome {
        output: Output::Json(doc),
        summary,
        pass,
    })
}

fn graph_json(g: &Graph) -> Value {
    let edges: Vec<[usize; 2]> = g.edges().map(|(u, v)| [u, v]).collect();
    json!({
        "order": g.order(),
        "edge_count": edges.len(),
        "edges": edges,
        "graph6": graph6::encode(g),
    })
}

fn fixed6_list(xs: &[f64]) -> Value {
    Value::Array(xs.iter().map(|&x| Value::Number(fixed6_number(x))).collect())
}

fn read_stream(stream: &Stream, quiet: bool) -> Result<Option<(String, Ingested)>, Failure> {
    let Some(path) = &stream.graph6 else { return Ok(None) };
    let mode = if stream.lenient {
        Strictness::Lenient
    } else {
        Strictness::Strict
    };
    let label = path.display().to_string();
    let ingested = if path == Path::new("-") {
        ingest_graph6(io::stdin().lock(), mode)?
    } else {
        let file = File::open(path).map_err(|e| Failure::Usage(format!("{label}: {e}")))?;
        ingest_graph6(BufReader::new(file), mode)?
    };
    if !quiet {
        for w in &ingested.warnings {
            eprintln!("warning: {label}: {w}");
        }
    }
    Ok(Some((label, ingested)))
}

/// What an [`Input`] resolves to.
enum Items {
    Member(FamilySpec, Graph),
    Fixture(Fixture),
    Stream(String, Ingested),
}

fn resolve(input: &Input, quiet: bool) -> Result<Items, Failure> {
    let spec = input.member.spec()?;
    let chosen =
        usize::from(spec.is_some()) + usize::from(input.stream.graph6.is_some()) + usize::from(input.fixture.is_some());
    if chosen != 1 {
        return Err(Failure::Usage(
            "give exactly one of --kind, --graph6 or --fixture".into(),
        ));
    }
    if let Some(spec) = spec {
        let g = make_family_with(&spec, input.member.validation())?;
        return Ok(Items::Member(spec, g));
    }
    if let Some(name) = &input.fixture {
        return Ok(Items::Fixture(fixture(name)?));
    }
    let (label, ingested) = read_stream(&input.stream, quiet)?.expect("stream chosen");
    Ok(Items::Stream(label, ingested))
}

pub fn run(cli: &Cli) -> Run {
    match &cli.command {
        Command::Family { member, emit } => family(member, *emit),
        Command::Charpoly { input } => charpoly(input, cli.quiet),
        Command::Spectrum { input } => spectrum(input, cli.tol.unwrap_or(DEFAULT_TOL), cli.quiet),
        Command::VerifyClosedForm { kind, n_max, k_max } => verify_closed_form((*kind).into(), *n_max, *k_max),
        Command::SignCheck { member, n_max, k_max } => sign_check(member, *n_max, *k_max),
        Command::DsCheck {
            member,
            n_max,
            stream,
            serial,
        } => ds(member, *n_max, stream, !serial, cli.quiet),
        Command::Census { n, stream, serial } => census(*n, stream, !serial, cli.quiet),
        Command::Forbidden { input, context } => forbidden(input, *context, cli.quiet),
        Command::Tables => tables(cli.tol),
        Command::Fixtures { name } => fixtures(name.as_deref()),
    }
}

fn family(member: &Member, emit: Emit) -> Run {
    let spec = member
        .spec()?
        .ok_or_else(|| Failure::Usage("--kind is required".into()))?;
    let g = make_family_with(&spec, member.validation())?;
    let summary = format!("{spec}: {} vertices, {} edges", g.order(), g.edge_count());
    if emit == Emit::Graph6 {
        return Ok(Outcome {
            output: Output::Text(format!("{}\n", graph6::encode(&g))),
            summary,
            pass: true,
        });
    }
    let d = apsp(&g)?;
    let mut doc = graph_json(&g);
    doc["spec"] = to_value(&spec);
    doc["diameter"] = json!(d.diameter());
    doc["distance_matrix"] = to_value(&d);
    done(doc, summary, true)
}

fn polynomial_entry(d: &DistanceMatrix) -> Value {
    let p = dist_charpoly(d);
    json!({ "polynomial": to_value(&p), "display": p.to_string() })
}

fn charpoly(input: &Input, quiet: bool) -> Run {
    match resolve(input, quiet)? {
        Items::Member(spec, g) => {
            let d = apsp(&g)?;
            let p = dist_charpoly(&d);
            let mut doc = json!({
                "source": to_value(&spec),
                "order": g.order(),
                "polynomial": to_value(&p),
                "display": p.to_string(),
            });
            let mut pass = true;
            let mut summary = format!("{spec}: {p}");
            if let Ok(c) = closed_form(&spec) {
                pass = c == p;
                doc["closed_form"] = json!({ "polynomial": to_value(&c), "equal": pass });
                summary.push_str(if pass {
                    " (closed form agrees)"
                } else {
                    " (closed form DIFFERS)"
                });
            }
            done(doc, summary, pass)
        }
        Items::Fixture(f) => {
            let d = f.distance_matrix()?;
            let mut doc = polynomial_entry(&d);
            doc["source"] = json!(f.name());
            doc["order"] = json!(d.order());
            let summary = format!("{}: {}", f.name(), doc["display"].as_str().unwrap_or_default());
            done(doc, summary, true)
        }
        Items::Stream(label, ing) => {
            let mut graphs = Vec::with_capacity(ing.graphs.len());
            for g in &ing.graphs {
                let mut e = polynomial_entry(&apsp(g)?);
                e["graph6"] = json!(graph6::encode(g));
                graphs.push(e);
            }
            let summary = format!("{label}: {} polynomials", graphs.len());
            done(
                json!({ "source": label, "ingest": to_value(&ing), "graphs": graphs }),
                summary,
                true,
            )
        }
    }
}

fn spectrum(input: &Input, tol: f64, quiet: bool) -> Run {
    let one = |d: &DistanceMatrix| -> Result<Value, Failure> { Ok(to_value(&eigenvalues(d, tol)?)) };
    match resolve(input, quiet)? {
        Items::Member(spec, g) => {
            let s = one(&apsp(&g)?)?;
            let summary = format!("{spec}: {}", s["values"]);
            done(json!({ "source": to_value(&spec), "spectrum": s }), summary, true)
        }
        Items::Fixture(f) => {
            let s = one(&f.distance_matrix()?)?;
            let summary = format!("{}: {}", f.name(), s["values"]);
            done(json!({ "source": f.name(), "spectrum": s }), summary, true)
        }
        Items::Stream(label, ing) => {
            let mut graphs = Vec::with_capacity(ing.graphs.len());
            for g in &ing.graphs {
                graphs.push(json!({ "graph6": graph6::encode(g), "spectrum": one(&apsp(g)?)? }));
            }
            let summary = format!("{label}: {} spectra", graphs.len());
            done(
                json!({ "source": label, "ingest": to_value(&ing), "graphs": graphs }),
                summary,
                true,
            )
        }
    }
}

fn limits(kind: SweepKind, n_max: Option<usize>, k_max: Option<usize>) -> SweepLimits {
    let std = SweepLimits::standard(kind);
    SweepLimits {
        n_max: n_max.unwrap_or(std.n_max),
        k_max: k_max.unwrap_or(std.k_max),
    }
}

fn verify_closed_form(kind: SweepKind, n_max: Option<usize>, k_max: Option<usize>) -> Run {
    let r = closed_form_sweep(kind, limits(kind, n_max, k_max))?;
    let summary = format!("{kind}: {} cases, {} mismatches", r.cases, r.mismatches.len());
    done(to_value(&r), summary, r.all_equal)
}

fn sign_check(member: &Member, n_max: Option<usize>, k_max: Option<usize>) -> Run {
    if member.any_param() {
        let spec = member
            .spec()?
            .ok_or_else(|| Failure::Usage("--kind is required".into()))?;
        if member.relaxed {
            return Err(Failure::Usage("sign-check takes strict parameters only".into()));
        }
        let claims = dspec_core::spectral::family_claims(&spec)?;
        let mut pass = claims.pass;
        let mut doc = json!({ "spec": to_value(&spec), "claims": to_value(&claims) });
        if !matches!(spec, FamilySpec::Friendship { .. }) {
            let case = sign_case(&spec)?;
            pass &= case.sign.pass && case.brackets.pass;
            doc["sign"] = to_value(&case.sign);
            doc["brackets"] = to_value(&case.brackets);
        }
        doc["pass"] = json!(pass);
        let summary = format!("{spec}: {}", if pass { "all checks pass" } else { "FAILED" });
        return done(doc, summary, pass);
    }
    let kind = member.sweep_kind()?;
    let lim = limits(kind, n_max, k_max);
    let claims = claim_sweep(kind, lim)?;
    let mut pass = claims.pass;
    let mut summary = format!(
        "{kind}: {} members, {} claims, {} failing members",
        claims.cases,
        claims.claims,
        claims.failures.len()
    );
    let mut doc = json!({ "kind": kind.name(), "claims": to_value(&claims) });
    if kind != SweepKind::Friendship {
        let sign = sign_sweep(kind, lim)?;
        pass &= sign.pass;
        summary.push_str(&format!(
            "; {} checkpoints, {} intervals, {} failing members",
            sign.checkpoints,
            sign.intervals,
            sign.failures.len()
        ));
        doc["sign"] = to_value(&sign);
    }
    doc["pass"] = json!(pass);
    done(doc, summary, pass)
}

fn ds(member: &Member, n_max: Option<usize>, stream: &Stream, parallel: bool, quiet: bool) -> Run {
    let target = member.spec()?;
    if target.is_some() && n_max.is_some() {
        return Err(Failure::Usage("--n-max sweeps all family members; drop --kind".into()));
    }
    let ingested = read_stream(stream, quiet)?;
    let mut reports = Vec::new();
    match (&target, &ingested) {
        (Some(spec), None) => reports.extend(ds_check_batch(
            std::slice::from_ref(spec),
            Source::BuiltIn { n: spec.order() },
            parallel,
        )?),
        (Some(spec), Some((label, ing))) => {
            let source = Source::Stream {
                label,
                graphs: &ing.graphs,
            };
            reports.extend(ds_check_batch(std::slice::from_ref(spec), source, parallel)?)
        }
        (None, Some((label, ing))) => {
            let n = ing.graphs.first().map(Graph::order).unwrap_or(0);
            let source = Source::Stream {
                label,
                graphs: &ing.graphs,
            };
            reports.extend(ds_check_batch(&family_members(n), source, parallel)?)
        }
        (None, None) => {
            let n_max = n_max.ok_or_else(|| Failure::Usage("give --kind with parameters, or --n-max".into()))?;
            for n in 1..=n_max {
                let members = family_members(n);
                if !members.is_empty() {
                    reports.extend(ds_check_batch(&members, Source::BuiltIn { n }, parallel)?);
                }
            }
        }
    }
    let ok =
        |r: &dspec_core::ds::DsReport| r.verdict == Verdict::DsAtThisScale && r.friendship_constraint != Some(false);
    let pass = reports.iter().all(ok);
    let count = |v: Verdict| reports.iter().filter(|r| r.verdict == v).count();
    let summary = format!(
        "{} targets: {} determined at this scale, {} refuted, {} inconclusive",
        reports.len(),
        count(Verdict::DsAtThisScale),
        count(Verdict::Refuted),
        count(Verdict::Inconclusive)
    );
    let doc = if target.is_some() {
        to_value(&reports[0])
    } else {
        json!({
            "targets": reports.len(),
            "refuted": count(Verdict::Refuted),
            "inconclusive": count(Verdict::Inconclusive),
            "reports": to_value(&reports),
            "pass": pass,
        })
    };
    done(doc, summary, pass)
}

fn census(n: Option<usize>, stream: &Stream, parallel: bool, quiet: bool) -> Run {
    let ingested = read_stream(stream, quiet)?;
    let c = match (&ingested, n) {
        (Some((label, ing)), _) => cospectral_census(
            Source::Stream {
                label,
                graphs: &ing.graphs,
            },
            parallel,
        )?,
        (None, Some(n)) => cospectral_census(Source::BuiltIn { n }, parallel)?,
        (None, None) => return Err(Failure::Usage("give --n or --graph6".into())),
    };
    let edges = edge_count_lemma_check(&c.ordered_pairs())?;
    let summary = format!(
        "{} graphs, {} isomorphism classes, {} polynomials, {} cospectral classes; edge-count check {}",
        c.graphs_scanned,
        c.isomorphism_classes,
        c.polynomial_classes,
        c.cospectral_classes.len(),
        if edges.pass { "passes" } else { "FAILS" }
    );
    let mut doc = json!({ "census": to_value(&c), "edge_count": to_value(&edges), "pass": edges.pass });
    if let Some((_, ing)) = &ingested {
        doc["ingest"] = to_value(ing);
    }
    done(doc, summary, edges.pass)
}

fn forbidden(input: &Input, context: Context, quiet: bool) -> Run {
    let graphs: Vec<Graph> = match resolve(input, quiet)? {
        Items::Member(_, g) => vec![g],
        Items::Fixture(Fixture::Graph(f)) => vec![f.graph],
        Items::Fixture(Fixture::Matrix { name, .. }) => {
            return Err(Failure::Usage(format!("{name} is a distance matrix, not a graph")))
        }
        Items::Stream(_, ing) => ing.graphs,
    };
    let mut reports = Vec::with_capacity(graphs.len());
    for g in &graphs {
        reports.push(forbidden_check(g, context)?);
    }
    let pass = reports.iter().all(|r| r.free && r.bounds_pass);
    let found: usize = reports.iter().filter(|r| !r.free).count();
    let summary = format!(
        "{context}: {} graphs, {found} contain a forbidden subgraph",
        reports.len()
    );
    let doc = if reports.len() == 1 {
        to_value(&reports[0])
    } else {
        json!({ "reports": to_value(&reports), "pass": pass })
    };
    done(doc, summary, pass)
}

fn tables(tol: Option<f64>) -> Run {
    let fixtures = fixture_table_check(tol.unwrap_or(TABLE_TOL))?;
    let proofs = proof_table_check(tol.unwrap_or(PROOF_TOL))?;
    let pass = fixtures.pass && proofs.pass;
    let mut summary = format!(
        "fixture table: {}/{} rows match; proof table: {}/{} values match",
        fixtures.rows.len() - fixtures.failures.len(),
        fixtures.rows.len(),
        proofs.checks.len() - proofs.failures.len(),
        proofs.checks.len()
    );
    for f in &fixtures.failures {
        summary.push_str(&format!("\n  mismatch: {f}"));
    }
    for f in &proofs.failures {
        summary.push_str(&format!("\n  mismatch: {f}"));
    }
    done(
        json!({ "fixture_table": to_value(&fixtures), "proof_table": to_value(&proofs), "pass": pass }),
        summary,
        pass,
    )
}

fn fixtures(name: Option<&str>) -> Run {
    let Some(name) = name else {
        let graphs: Vec<Value> = graph_fixtures()
            .iter()
            .map(|f| {
                let mut v = graph_json(&f.graph);
                v["name"] = json!(f.name);
                v["printed"] = fixed6_list(f.printed);
                v
            })
            .collect();
        let summary = format!("{} graph fixtures", graphs.len());
        let doc = json!({
            "graphs": graphs,
            "matrices": ["D1", "D2", "D3", "param_abc(a,b,c)", "param_ab(a,b)"],
        });
        return done(doc, summary, true);
    };
    let f = fixture(name)?;
    let d = f.distance_matrix()?;
    let mut doc = polynomial_entry(&d);
    doc["name"] = json!(f.name());
    doc["distance_matrix"] = to_value(&d);
    doc["spectrum"] = to_value(&eigenvalues(&d, DEFAULT_TOL)?);
    if let Fixture::Graph(g) = &f {
        doc["graph"] = graph_json(&g.graph);
        doc["printed"] = fixed6_list(g.printed);
    }
    let summary = format!("{}: order {}", f.name(), d.order());
    done(doc, summary, true)
}
