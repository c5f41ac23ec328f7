//! Command line front end. Every command reads a problem file, prints a
//! human table (or JSON with `--json`) on stdout, and reports failures as
//! JSON on stderr.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::abelian::{AbelianGroup, GroupElement};
use crate::cayley::build_cayley;
use crate::error::{Error, Result};
use crate::fan::{
    cartier_data, chow_degree_map, irrelevant_generators, is_ample, toric_betti, validate_fan, Fan,
};
use crate::hodge::{compute_hodge, HodgeDiamond, HodgeOptions, HodgeResult, Method, MethodChoice};
use crate::ideal::{ambient_dim, colon_ring_dim, jacobian_ring_dim};
use crate::problem::{OutputFormat, Problem, ProblemFile};
use crate::ring::{in_irrelevant_ideal, monomials_of_degree, MultiPoly};
use crate::smoothness::{nondegenerate_check, quasi_smooth_check};

pub const THREADS_VAR: &str = "TORIC_CI_THREADS";

#[derive(Parser, Debug)]
#[command(
    name = "toric-hodge",
    version,
    about = "Hodge numbers of complete intersections in toric varieties"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Print JSON instead of a table.
    #[arg(long, global = true)]
    json: bool,

    /// Compute even when a theorem hypothesis fails; output is stamped UNCERTIFIED.
    #[arg(long, global = true)]
    assume_theorem_hypotheses: bool,
}

#[derive(Args, Debug)]
struct Input {
    #[arg(long)]
    input: PathBuf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CheckKind {
    QuasiSmooth,
    Nondegenerate,
    Ample,
    Membership,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Auto,
    Jacobian,
    Colon,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check that the fan is simplicial and complete.
    Validate(Input),
    /// Chow group and the degree of each Cox variable.
    Chow(Input),
    /// Betti numbers of the toric variety.
    Betti(Input),
    /// Generators of the irrelevant ideal.
    Irrelevant(Input),
    /// Cayley ring, polynomial F and the Cayley fan.
    Cayley(Input),
    /// Run one structural check on the hypersurfaces.
    Check {
        kind: CheckKind,
        #[command(flatten)]
        input: Input,
    },
    /// Variable Hodge numbers and the Hodge diamond.
    Hodge {
        #[command(flatten)]
        input: Input,
        /// Overrides the method in the problem file.
        #[arg(long)]
        method: Option<MethodArg>,
    },
    /// Dimension of one graded piece: `--degree` in the Cox ring, or `--p`
    /// for the Cayley degree `(d+s-p)β - β₀`.
    Dim {
        #[command(flatten)]
        input: Input,
        /// Free coordinates, then `;` and torsion residues, e.g. `2` or `1,0;1`.
        #[arg(
            long,
            conflicts_with = "p",
            required_unless_present = "p",
            allow_hyphen_values = true
        )]
        degree: Option<String>,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        method: Option<MethodArg>,
    },
}

/// A finished command: JSON payload plus its human rendering.
struct Output {
    json: Value,
    table: String,
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("output types serialize")
}

/// Pretty JSON with sorted keys, so re-parsing and re-printing is the identity.
pub fn render_json(v: &Value) -> String {
    let sorted: Value = serde_json::from_str(&v.to_string()).expect("valid JSON");
    let mut s = serde_json::to_string_pretty(&sorted).expect("valid JSON");
    s.push('\n');
    s
}

fn error_value(e: &Error, details: &[String]) -> Value {
    let mut v = json!({ "error": { "code": e.code(), "message": e.to_string(), "exit_code": e.exit_code() } });
    if !details.is_empty() {
        v["error"]["details"] = json!(details);
    }
    v
}

fn load(input: &Input, validate: bool) -> Result<Problem> {
    let problem = ProblemFile::load(&input.input)?.resolve()?;
    if validate {
        validate_fan(&problem.fan).into_result()?;
    }
    Ok(problem)
}

fn group_string(g: &AbelianGroup) -> String {
    let mut parts = Vec::new();
    if g.free_rank() > 0 || g.torsion().is_empty() {
        parts.push(format!("Z^{}", g.free_rank()));
    }
    parts.extend(g.torsion().iter().map(|t| format!("Z/{t}")));
    parts.join(" + ")
}

fn parse_degree(text: &str, group: &AbelianGroup) -> Result<GroupElement> {
    let ints = |s: &str| -> Result<Vec<i64>> {
        s.split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<i64>()
                    .map_err(|_| Error::Malformed(format!("bad degree coordinate `{t}`")))
            })
            .collect()
    };
    let (free, torsion) = match text.split_once(';') {
        Some((a, b)) => (ints(a)?, ints(b)?),
        None => (ints(text)?, vec![0; group.torsion().len()]),
    };
    if free.len() != group.free_rank() || torsion.len() != group.torsion().len() {
        return Err(Error::Malformed(format!(
            "degree `{text}` does not lie in {}",
            group_string(group)
        )));
    }
    Ok(group.element(free, torsion))
}

fn require_system(p: &Problem) -> Result<()> {
    if p.polynomials.is_empty() {
        return Err(Error::EmptySystem);
    }
    Ok(())
}

fn cmd_validate(input: &Input) -> Result<Output> {
    let p = load(input, false)?;
    let report = validate_fan(&p.fan);
    if !report.is_valid() {
        return Err(report.into_result().unwrap_err());
    }
    let fan = &p.fan;
    Ok(Output {
        json: json!({ "valid": true, "dim": fan.dim(), "rays": fan.num_rays(), "max_cones": fan.max_cones().len() }),
        table: format!(
            "valid simplicial complete fan: dimension {}, {} rays, {} maximal cones\n",
            fan.dim(),
            fan.num_rays(),
            fan.max_cones().len()
        ),
    })
}

fn cmd_chow(input: &Input) -> Result<Output> {
    let p = load(input, true)?;
    let g = chow_degree_map(&p.fan);
    let names = p.ring.names();
    let mut table = format!("A_{{d-1}} = {}\n", group_string(g.group()));
    let mut degrees = Vec::new();
    for (name, d) in names.iter().zip(&g.degrees) {
        table.push_str(&format!("  {name}  {d}\n"));
        degrees.push(json!({ "variable": name, "degree": to_value(d) }));
    }
    Ok(Output {
        json: json!({ "group": to_value(g.group()), "degrees": degrees }),
        table,
    })
}

fn cmd_betti(input: &Input) -> Result<Output> {
    let p = load(input, true)?;
    let b = toric_betti(&p.fan);
    let line: Vec<String> = b.iter().map(u64::to_string).collect();
    Ok(Output {
        json: json!({ "betti": b }),
        table: format!("betti: {}\n", line.join(" ")),
    })
}

fn monomial_string(p: &Problem, vars: &[usize]) -> String {
    if vars.is_empty() {
        return "1".into();
    }
    vars.iter()
        .map(|&i| p.ring.names()[i].as_str())
        .collect::<Vec<_>>()
        .join("*")
}

fn cmd_irrelevant(input: &Input) -> Result<Output> {
    let p = load(input, true)?;
    let b = irrelevant_generators(&p.fan);
    let gens: Vec<String> = b
        .generators
        .iter()
        .map(|g| monomial_string(&p, g))
        .collect();
    let table = gens.iter().map(|g| format!("{g}\n")).collect();
    Ok(Output {
        json: json!({ "generators": gens }),
        table,
    })
}

fn fan_value(fan: &Fan) -> Value {
    to_value(fan)
}

fn cmd_cayley(input: &Input) -> Result<Output> {
    let p = load(input, true)?;
    require_system(&p)?;
    let setup = build_cayley(&p.fan, &p.polynomials)?;
    let ring = setup.ring();
    let variables: Vec<Value> = ring
        .names()
        .iter()
        .zip(ring.degrees())
        .map(|(n, d)| json!({ "variable": n, "degree": to_value(d) }))
        .collect();
    let f = setup.polynomial().to_string();
    let mut table = format!(
        "d = {}, s = {}\nCayley grading: {}\n",
        setup.dim(),
        setup.codim(),
        group_string(ring.group())
    );
    for (n, d) in ring.names().iter().zip(ring.degrees()) {
        table.push_str(&format!("  {n}  {d}\n"));
    }
    table.push_str(&format!(
        "beta = {}\nbeta0 = {}\nF = {f}\n",
        setup.beta(),
        setup.beta0()
    ));
    match setup.cayley_fan() {
        Some(cf) => table.push_str(&format!(
            "Cayley fan: dimension {}, {} rays, {} maximal cones\n",
            cf.dim(),
            cf.num_rays(),
            cf.max_cones().len()
        )),
        None => table.push_str("Cayley fan: none (s = 1)\n"),
    }
    Ok(Output {
        json: json!({
            "d": setup.dim(),
            "s": setup.codim(),
            "group": to_value(ring.group()),
            "variables": variables,
            "beta": to_value(setup.beta()),
            "beta0": to_value(setup.beta0()),
            "polynomial": f,
            "cayley_fan": setup.cayley_fan().map(fan_value),
        }),
        table,
    })
}

fn representative(f: &MultiPoly) -> Vec<i64> {
    f.terms()
        .keys()
        .next()
        .map(|e| e.iter().map(|&x| x as i64).collect())
        .unwrap_or_default()
}

fn cmd_check(kind: CheckKind, input: &Input) -> Result<Output> {
    let p = load(input, true)?;
    require_system(&p)?;
    match kind {
        CheckKind::QuasiSmooth => {
            let v = quasi_smooth_check(&p.fan, &p.polynomials)?;
            let table = format!("quasi-smooth: {v:?}\n");
            Ok(Output {
                json: json!({ "quasi_smooth": to_value(&v) }),
                table,
            })
        }
        CheckKind::Nondegenerate => {
            let v = nondegenerate_check(&p.fan, &p.polynomials)?;
            let table = format!("nondegenerate: {v:?}\n");
            Ok(Output {
                json: json!({ "nondegenerate": to_value(&v) }),
                table,
            })
        }
        CheckKind::Ample => {
            let mut rows = Vec::new();
            let mut table = String::new();
            for (name, f) in p.names.iter().zip(&p.polynomials) {
                let status = match cartier_data(&p.fan, &representative(f)) {
                    Ok(cd) if is_ample(&p.fan, &cd) => "ample".to_string(),
                    Ok(_) => "not-ample".to_string(),
                    Err(e) => e.code().to_string(),
                };
                table.push_str(&format!("{name}: {status}\n"));
                rows.push(json!({ "name": name, "status": status }));
            }
            Ok(Output {
                json: json!({ "ample": rows }),
                table,
            })
        }
        CheckKind::Membership => {
            let b = irrelevant_generators(&p.fan);
            let mut rows = Vec::new();
            let mut table = String::new();
            for (name, f) in p.names.iter().zip(&p.polynomials) {
                let inside = in_irrelevant_ideal(f, &b);
                table.push_str(&format!(
                    "{name}: {}\n",
                    if inside { "in B" } else { "not in B" }
                ));
                rows.push(json!({ "name": name, "in_irrelevant_ideal": inside }));
            }
            Ok(Output {
                json: json!({ "membership": rows }),
                table,
            })
        }
    }
}

fn method_choice(arg: Option<MethodArg>, file: MethodChoice) -> MethodChoice {
    match arg {
        None => file,
        Some(MethodArg::Auto) => MethodChoice::Auto,
        Some(MethodArg::Jacobian) => MethodChoice::Jacobian,
        Some(MethodArg::Colon) => MethodChoice::Colon,
    }
}

/// Centered diamond, top row `h^{0,0}`.
pub fn diamond_table(dia: &HodgeDiamond) -> String {
    let rows: Vec<String> = dia
        .rows()
        .iter()
        .map(|r| r.iter().map(u64::to_string).collect::<Vec<_>>().join("   "))
        .collect();
    let width = rows.iter().map(String::len).max().unwrap_or(0);
    rows.iter()
        .map(|r| {
            format!("{}{}\n", " ".repeat((width - r.len()) / 2), r)
                .trim_end()
                .to_string()
                + "\n"
        })
        .collect()
}

fn hodge_table(r: &HodgeResult) -> String {
    let mut t = String::new();
    if !r.certified {
        t.push_str("UNCERTIFIED\n");
    }
    let method = match r.method {
        Method::Jacobian => "jacobian",
        Method::Colon => "colon",
    };
    t.push_str(&format!(
        "d = {}, s = {}, method = {method}\n",
        r.table.d, r.table.s
    ));
    if let Some(v) = &r.report.quasi_smooth {
        t.push_str(&format!("quasi-smooth: {v:?}\n"));
    }
    if let Some(v) = &r.report.nondegenerate {
        t.push_str(&format!("nondegenerate: {v:?}\n"));
    }
    t.push_str("variable Hodge numbers:\n");
    for e in &r.table.entries {
        t.push_str(&format!(
            "  h^{{{},{}}}_var = {}   (p = {}, ring {}, ambient {})\n",
            e.bidegree.0, e.bidegree.1, e.value, e.p, e.ring_dim, e.ambient_dim
        ));
    }
    if let Some(c) = &r.table.middle_correction {
        t.push_str(&format!("middle correction at p = {}: {}\n", c.p, c.value));
    }
    if let Some(dia) = &r.diamond {
        t.push_str("Hodge diamond:\n");
        t.push_str(&diamond_table(dia));
    }
    if let Some(chi) = r.euler_characteristic {
        t.push_str(&format!("euler characteristic = {chi}\n"));
    }
    for line in &r.report.log {
        t.push_str(&format!("note: {line}\n"));
    }
    t
}

fn cmd_hodge(input: &Input, method: Option<MethodArg>, assume: bool) -> Result<Output> {
    let p = load(input, true)?;
    require_system(&p)?;
    let options = HodgeOptions {
        method: method_choice(method, p.options.method),
        checks: p.options.checks,
        assume_hypotheses: assume,
    };
    let r = compute_hodge(&p.fan, &p.polynomials, &p.names, &options)?;
    let mut v = to_value(&r);
    if !r.certified {
        v["stamp"] = json!("UNCERTIFIED");
    }
    Ok(Output {
        json: v,
        table: hodge_table(&r),
    })
}

fn cmd_dim(
    input: &Input,
    degree: Option<&str>,
    p_index: Option<usize>,
    method: Option<MethodArg>,
) -> Result<Output> {
    let p = load(input, true)?;
    if let Some(text) = degree {
        let g = parse_degree(text, p.ring.group())?;
        let n = monomials_of_degree(&p.ring, &g)?.len();
        return Ok(Output {
            json: json!({ "degree": to_value(&g), "dim": n }),
            table: format!("dim S_{g} = {n}\n"),
        });
    }
    let pi = p_index.expect("clap requires --degree or --p");
    require_system(&p)?;
    let setup = build_cayley(&p.fan, &p.polynomials)?;
    let (d, s) = (setup.dim(), setup.codim());
    if pi < s || pi > d {
        return Err(Error::Malformed(format!(
            "p = {pi} lies outside [{s}, {d}]"
        )));
    }
    let gamma = setup.gamma(pi);
    let ambient = ambient_dim(&setup, &gamma)?;
    let (name, ring) = match method_choice(method, MethodChoice::Jacobian) {
        MethodChoice::Colon => ("colon", colon_ring_dim(&setup, &gamma)?),
        _ => ("jacobian", jacobian_ring_dim(&setup, &gamma)?),
    };
    Ok(Output {
        json: json!({ "p": pi, "gamma": to_value(&gamma), "ambient": ambient, "method": name, "dim": ring }),
        table: format!("p = {pi}, gamma = {gamma}: ambient {ambient}, {name} ring {ring}\n"),
    })
}

fn dispatch(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Validate(i) => cmd_validate(i),
        Command::Chow(i) => cmd_chow(i),
        Command::Betti(i) => cmd_betti(i),
        Command::Irrelevant(i) => cmd_irrelevant(i),
        Command::Cayley(i) => cmd_cayley(i),
        Command::Check { kind, input } => cmd_check(*kind, input),
        Command::Hodge { input, method } => {
            cmd_hodge(input, *method, cli.assume_theorem_hypotheses)
        }
        Command::Dim {
            input,
            degree,
            p,
            method,
        } => cmd_dim(input, degree.as_deref(), *p, *method),
    }
}

fn input_of(cli: &Cli) -> &Input {
    match &cli.command {
        Command::Validate(i)
        | Command::Chow(i)
        | Command::Betti(i)
        | Command::Irrelevant(i)
        | Command::Cayley(i) => i,
        Command::Check { input, .. }
        | Command::Hodge { input, .. }
        | Command::Dim { input, .. } => input,
    }
}

fn wants_json(cli: &Cli) -> bool {
    cli.json
        || ProblemFile::load(&input_of(cli).input)
            .is_ok_and(|f| f.options.output == OutputFormat::Json)
}

fn thread_pool() -> Result<Option<rayon::ThreadPool>> {
    let Ok(text) = std::env::var(THREADS_VAR) else {
        return Ok(None);
    };
    let n: usize = text.trim().parse().ok().filter(|&n| n > 0).ok_or_else(|| {
        Error::Malformed(format!(
            "{THREADS_VAR} must be a positive integer, got `{text}`"
        ))
    })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build()
        .map(Some)
        .map_err(|e| Error::Internal(format!("thread pool: {e}")))
}

/// Runs one command; returns the process exit status.
pub fn run_with<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let v = json!({ "error": { "code": "Usage", "message": e.to_string().trim_end(), "exit_code": 2 } });
            let _ = err.write_all(render_json(&v).as_bytes());
            return 2;
        }
    };
    let result = match thread_pool() {
        Ok(Some(pool)) => pool.install(|| dispatch(&cli)),
        Ok(None) => dispatch(&cli),
        Err(e) => Err(e),
    };
    match result {
        Ok(o) => {
            let text = if wants_json(&cli) {
                render_json(&o.json)
            } else {
                o.table
            };
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err(e) => {
            let details = match &cli.command {
                Command::Validate(i) => ProblemFile::load(&i.input)
                    .and_then(|f| f.resolve())
                    .map(|p| {
                        validate_fan(&p.fan)
                            .failures
                            .iter()
                            .map(|f| f.to_string())
                            .collect()
                    })
                    .unwrap_or_default(),
                _ => Vec::new(),
            };
            let _ = err.write_all(render_json(&error_value(&e, &details)).as_bytes());
            e.exit_code()
        }
    }
}

pub fn run<I, S>(argv: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}
