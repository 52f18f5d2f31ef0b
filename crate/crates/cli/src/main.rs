use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use latvol::birkhoff::{
    birkhoff_ehrhart, birkhoff_even_identity, birkhoff_reciprocity_check, birkhoff_reflexive_checks,
    birkhoff_volume, birkhoff_volume_bound, chart_soundness_check, MagicTable,
};
use latvol::boundary::{
    boundary_volume_explicit, boundary_volume_matrix, table1_coefficients, volume_general, volume_kolodziejczyk_odd,
    volume_macdonald_even,
};
use latvol::ehrhart::{delta_vector, ehrhart_of};
use latvol::exact::factorial;
use latvol::order::{
    bounded_cover_count, order_boundary_volume, order_ehrhart_checks, order_polytope, order_reflexive_identities,
    reciprocity_checks, reflexive_dilate, OrderData, Poset, PosetInput, MAX_ORDER_POLYTOPE_SIZE,
};
use latvol::reflexive::reflexivity_report;
use latvol::smooth::{dehn_sommerville_check, smooth_bounds_check};
use latvol::{Error, LatticePolytope, PolytopeInput, Rational};
use num_bigint::BigInt;
use serde::de::DeserializeOwned;
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "latvol", version, about = "Exact Ehrhart data, boundary volumes and reflexivity checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Path to a polytope or poset JSON file.
    #[arg(long, global = true)]
    file: Option<String>,
    /// Inline polytope or poset JSON.
    #[arg(long, global = true)]
    json: Option<String>,
    /// Dimension parameter for `table1` and `birkhoff`.
    #[arg(long, global = true)]
    d: Option<usize>,
    /// Largest dilation to count.
    #[arg(long = "m-max", global = true)]
    m_max: Option<usize>,
    /// Comma-separated list of checks to run.
    #[arg(long, global = true, value_delimiter = ',')]
    checks: Option<Vec<String>>,
}

#[derive(Subcommand, Debug, Clone, Copy)]
enum Command {
    /// Lattice-point counts and the Ehrhart polynomial.
    Ehrhart,
    /// Boundary volume by closed formula, determinant ratio and facets.
    BoundaryVolume,
    /// Volume from the first dilations' counts.
    Volume,
    /// Every reflexivity criterion side by side.
    ReflexiveCheck,
    /// The δ-vector.
    DeltaVector,
    /// f-vector, with the smooth formulas and bounds where they apply.
    FVector,
    /// Order polynomial data and order polytope checks for a poset.
    OrderPolytope,
    /// Magic-square counts and Birkhoff polytope identities.
    Birkhoff,
    /// Coefficients of the boundary volume formula in dimension `d`.
    Table1,
}

/// Failure of one invocation, with its exit code.
enum Failure {
    Input { kind: &'static str, message: String },
    Inconsistency(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Inconsistency(message) => Failure::Inconsistency(message),
            other => Failure::Input { kind: "invalid", message: other.to_string() },
        }
    }
}

type Outcome = std::result::Result<Value, Failure>;

fn rat(r: &Rational) -> Value {
    Value::String(r.to_string())
}

fn int(n: impl Into<BigInt>) -> Value {
    Value::String(n.into().to_string())
}

fn ints<T: Clone + Into<BigInt>>(xs: &[T]) -> Value {
    Value::Array(xs.iter().cloned().map(int).collect())
}

fn read_input<T: DeserializeOwned>(cli: &Cli) -> std::result::Result<T, Failure> {
    let text = match (&cli.file, &cli.json) {
        (Some(path), None) => fs::read_to_string(path)
            .map_err(|e| Failure::Input { kind: "io", message: format!("{path}: {e}") })?,
        (None, Some(text)) => text.clone(),
        _ => return Err(Failure::Input { kind: "input", message: "give exactly one of --file or --json".into() }),
    };
    serde_json::from_str(&text).map_err(|e| Failure::Input { kind: "parse", message: e.to_string() })
}

fn polytope(cli: &Cli) -> std::result::Result<LatticePolytope, Failure> {
    let input: PolytopeInput = read_input(cli)?;
    Ok(input.build()?)
}

fn wants(cli: &Cli, name: &str) -> bool {
    cli.checks.as_ref().is_none_or(|c| c.iter().any(|x| x == name))
}

fn ehrhart(cli: &Cli) -> Outcome {
    let p = polytope(cli)?;
    let d = p.dim();
    let (counts, e) = ehrhart_of(&p, cli.m_max.unwrap_or(d + 1))?;
    let sign = Rational::from_integer(BigInt::from(if d % 2 == 0 { 1 } else { -1 }));
    let interiors = counts.interiors();
    let reciprocity =
        (1..=counts.m_max()).all(|m| Rational::from_integer(interiors[m].clone()) == &sign * e.eval(-(m as i64)));
    Ok(json!({
        "d": d,
        "totals": ints(&counts.totals()),
        "boundary": ints(&counts.boundaries()),
        "interior": ints(&interiors),
        "coeffs": e.coeffs().iter().map(rat).collect::<Vec<_>>(),
        "polynomial": e.poly.to_string(),
        "volume": rat(&e.volume()),
        "boundary_volume": rat(&e.boundary_volume()),
        "reciprocity": reciprocity,
        "agree": reciprocity,
    }))
}

fn boundary_volume(cli: &Cli) -> Outcome {
    let p = polytope(cli)?;
    let d = p.dim();
    let (counts, e) = ehrhart_of(&p, cli.m_max.unwrap_or(d))?;
    let b = &counts.boundaries()[..=d / 2];
    let explicit = boundary_volume_explicit(d, b)?;
    let matrix = if d >= 2 { Some(boundary_volume_matrix(d, b)?) } else { None };
    let direct = p.boundary_volume_direct();
    let ehrhart = e.boundary_volume();
    let agree = explicit == ehrhart && direct == ehrhart && matrix.as_ref().is_none_or(|m| *m == ehrhart);
    Ok(json!({
        "d": d,
        "boundary_volume": rat(&ehrhart),
        "explicit": rat(&explicit),
        "matrix": matrix.as_ref().map(rat),
        "direct": rat(&direct),
        "agree": agree,
    }))
}

fn volume(cli: &Cli) -> Outcome {
    let p = polytope(cli)?;
    let d = p.dim();
    let (counts, e) = ehrhart_of(&p, cli.m_max.unwrap_or(d))?;
    let big_n = d.div_ceil(2);
    let general = volume_general(d, &counts.totals()[..=big_n], &counts.boundaries()[..=big_n])?;
    let interior = &counts.interiors()[1..=big_n];
    let boundary = &counts.boundaries()[1..=big_n];
    let (name, parity) = if d % 2 == 0 {
        ("macdonald", volume_macdonald_even(d, interior, boundary)?)
    } else {
        ("kolodziejczyk", volume_kolodziejczyk_odd(d, interior, boundary)?)
    };
    let agree = general == e.volume() && parity == e.volume();
    let mut report = json!({
        "d": d,
        "volume": rat(&e.volume()),
        "general": rat(&general),
        "agree": agree,
    });
    report[name] = rat(&parity);
    Ok(report)
}

fn reflexive_check(cli: &Cli) -> Outcome {
    let p = polytope(cli)?;
    let r = reflexivity_report(&p)?;
    Ok(json!({
        "d": p.dim(),
        "is_fano": r.is_fano,
        "reflexive": r.dual_integral,
        "dual_integral": r.dual_integral,
        "condition_ii": r.condition_ii_holds,
        "condition_iii": r.condition_iii_holds,
        "palindromic_delta": r.palindromic_delta,
        "f_value": rat(&r.f_value),
        "g_value": r.g_value.as_ref().map(rat),
        "agree": r.consistent(),
    }))
}

fn delta(cli: &Cli) -> Outcome {
    let p = polytope(cli)?;
    let d = p.dim();
    let (counts, e) = ehrhart_of(&p, d)?;
    let delta = delta_vector(&counts)?;
    let normalized = e.volume() * Rational::from_integer(factorial(d as u64));
    let agree = Rational::from_integer(delta.sum()) == normalized;
    Ok(json!({
        "d": d,
        "delta": ints(delta.entries()),
        "sum": int(delta.sum()),
        "normalized_volume": rat(&normalized),
        "palindromic": delta.is_palindromic(),
        "agree": agree,
    }))
}

fn f_vector(cli: &Cli) -> Outcome {
    let p = polytope(cli)?;
    let f = p.f_vector_direct();
    let simplicial = p.is_simplicial();
    let dehn_sommerville = simplicial.then(|| dehn_sommerville_check(&f));
    let mut report = json!({
        "d": p.dim(),
        "f_vector": ints(&f.counts),
        "euler": f.satisfies_euler(),
        "simplicial": simplicial,
        "dehn_sommerville": dehn_sommerville,
        "smooth": p.is_smooth(),
    });
    let mut agree = f.satisfies_euler() && dehn_sommerville.unwrap_or(true);
    if p.is_smooth() {
        let s = smooth_bounds_check(&p)?;
        agree &= s.all_hold();
        report["formula_f_vector"] = s.formula_f_vector.as_ref().map_or(Value::Null, |g| ints(&g.counts));
        report["normalized_volume"] = int(s.normalized_volume.clone());
        report["facet_identity"] = json!(s.facet_identity);
        report["vertex_identity"] = json!(s.vertex_identity);
        report["bounds"] = s
            .bounds
            .iter()
            .map(|b| {
                json!({
                    "label": b.label,
                    "lhs": int(b.lhs.clone()),
                    "rhs": int(b.rhs.clone()),
                    "holds": b.holds(),
                    "slack": int(b.slack()),
                })
            })
            .collect();
    }
    report["agree"] = json!(agree);
    Ok(report)
}

fn order(cli: &Cli) -> Outcome {
    let input: PosetInput = read_input(cli)?;
    let q = Poset::from_input(&input)?;
    let d = q.size();
    let k_max = cli.m_max.unwrap_or(d + 2).max(d + 2) as u64;
    let data = OrderData::new(&q, k_max)?;
    let volumes = order_boundary_volume(&q)?;
    let mut checks = serde_json::Map::new();
    let mut report = json!({
        "size": d,
        "covers": input.covers,
        "graded": q.is_graded(),
        "rank": q.rank(),
        "omega": ints(&data.omega),
        "strict": ints(&data.strict),
        "linear_extensions": int(data.linear_extensions.clone()),
        "surjective": ints(&data.surjective),
        "boundary_volume": rat(&volumes.general),
        "boundary_volume_graded": volumes.graded.as_ref().map(rat),
    });
    if wants(cli, "reciprocity") {
        checks.insert("reciprocity".into(), json!(reciprocity_checks(&q, k_max)?));
    }
    if d <= MAX_ORDER_POLYTOPE_SIZE {
        let p = order_polytope(&q)?;
        let direct = p.boundary_volume_direct();
        report["vertices"] = json!(p.vertices().len());
        report["facets"] = json!(p.facets().len());
        report["boundary_volume_direct"] = rat(&direct);
        if wants(cli, "facets") {
            checks.insert("facets".into(), json!(p.facets().len() == bounded_cover_count(&q)));
        }
        if wants(cli, "boundary") {
            let graded_ok = volumes.graded.as_ref().is_none_or(|g| *g == direct);
            checks.insert("boundary".into(), json!(volumes.general == direct && graded_ok));
        }
        if wants(cli, "ehrhart") {
            checks.insert("ehrhart".into(), json!(order_ehrhart_checks(&q, k_max.min(d as u64 + 1))?));
        }
        if q.is_graded() && wants(cli, "reflexive") {
            checks.insert("reflexive".into(), json!(reflexive_dilate(&q).is_ok()));
        }
    }
    if q.is_graded() && wants(cli, "identities") {
        checks.insert("identities".into(), json!(order_reflexive_identities(&q)?));
    }
    let agree = checks.values().all(|v| v == &Value::Bool(true));
    report["checks"] = Value::Object(checks);
    report["agree"] = json!(agree);
    Ok(report)
}

fn birkhoff(cli: &Cli) -> Outcome {
    let d = cli.d.ok_or(Failure::Input { kind: "input", message: "birkhoff needs --d".into() })?;
    let m_max = cli.m_max.unwrap_or(3);
    let table = MagicTable::new(d, m_max as u64);
    let mut checks = serde_json::Map::new();
    let mut report = json!({
        "d": d,
        "magic": ints(&table.magic),
        "positive": ints(&table.positive),
    });
    let volume = birkhoff_volume(d)?;
    let chart_volume = birkhoff_ehrhart(d)?.volume();
    report["volume"] = rat(&volume);
    report["chart_volume"] = rat(&chart_volume);
    if wants(cli, "volume") {
        checks.insert("volume".into(), json!(volume == chart_volume));
    }
    if wants(cli, "reciprocity") {
        checks.insert("reciprocity".into(), json!(birkhoff_reciprocity_check(d)?));
    }
    if d <= 3 && wants(cli, "chart") {
        checks.insert("chart".into(), json!(chart_soundness_check(d, m_max)?));
    }
    if d <= 3 && wants(cli, "reflexive") {
        checks.insert("reflexive".into(), json!(birkhoff_reflexive_checks(d)?));
    }
    if d % 2 == 0 {
        let value = birkhoff_even_identity(d)?;
        report["even_identity"] = int(value.clone());
        if wants(cli, "even") {
            checks.insert("even".into(), json!(value == BigInt::from(0)));
        }
    }
    let bound = birkhoff_volume_bound(d)?;
    report["volume_bound"] = json!({
        "lhs": int(bound.lhs.clone()),
        "derived_rhs": int(bound.derived_rhs.clone()),
        "printed_rhs": int(bound.printed_rhs.clone()),
        "printed_holds": bound.printed_holds(),
    });
    if wants(cli, "bound") {
        checks.insert("bound".into(), json!(bound.derived_holds()));
    }
    let agree = checks.values().all(|v| v == &Value::Bool(true));
    report["checks"] = Value::Object(checks);
    report["agree"] = json!(agree);
    Ok(report)
}

fn table1(cli: &Cli) -> Outcome {
    let d = cli.d.ok_or(Failure::Input { kind: "input", message: "table1 needs --d".into() })?;
    if d == 0 {
        return Err(Failure::Input { kind: "invalid", message: "d must be positive".into() });
    }
    let c = table1_coefficients(d);
    Ok(json!({ "d": d, "n": c.n, "coeffs": c.as_i64() }))
}

fn run(cli: &Cli) -> Outcome {
    match cli.command {
        Command::Ehrhart => ehrhart(cli),
        Command::BoundaryVolume => boundary_volume(cli),
        Command::Volume => volume(cli),
        Command::ReflexiveCheck => reflexive_check(cli),
        Command::DeltaVector => delta(cli),
        Command::FVector => f_vector(cli),
        Command::OrderPolytope => order(cli),
        Command::Birkhoff => birkhoff(cli),
        Command::Table1 => table1(cli),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(report) => {
            println!("{report}");
            if report.get("agree") == Some(&Value::Bool(false)) {
                ExitCode::from(3)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(Failure::Input { kind, message }) => {
            println!("{}", json!({ "error": kind, "message": message }));
            ExitCode::from(2)
        }
        Err(Failure::Inconsistency(message)) => {
            println!("{}", json!({ "error": "inconsistency", "message": message }));
            ExitCode::from(3)
        }
    }
}
