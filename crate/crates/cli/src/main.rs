use std::io::Write;
use std::process::ExitCode;

use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use quiverchar::characters::{
    character_k1, character_via_decomposition, ground_state_character, hilbert_character, limit_character_capped,
    shifted_character, ModelParams, SymSeries,
};
use quiverchar::diagrams::{
    degree, enumerate_gt, enumerate_semiinf, DegreeMode, GTPattern, Tail, WeightRow,
};
use quiverchar::poly::QPoly;
use quiverchar::symfunc::{
    hall_littlewood_p, jing_truncated, kostka_foulkes, render_schur, schur, transformed_hl_truncated, Partition,
    SymPoly,
};
use quiverchar::verify::{cs_spectrum, run_suite, Grid, SUITES};
use quiverchar::wavefunc::{slice_matrix_csv, spanning_products};
use quiverchar::yangian::{drinfeld_polynomials, minor_eigenvalue_semiinf, minor_eigenvalue_twisted};
use quiverchar::Error;

#[derive(Parser)]
#[command(name = "quiverchar", version, about = "Exact characters, bases and spectra of spin Calogero-type Hilbert spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    /// Full Hilbert character
    Hilbert,
    /// Divided by q^E0 and the determinant power
    Shifted,
    /// Sum over admissible diagrams
    Decomposition,
    /// Level-one closed formula
    K1,
    /// Conformal limit of charge r
    Limit,
}

#[derive(Args, Clone, Copy)]
struct Model {
    #[arg(long = "N")]
    big_n: usize,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 1)]
    k: i64,
}

#[derive(Args, Clone, Copy)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Graded character coefficients up to q^qmax
    Character {
        #[arg(long = "N", default_value_t = 0)]
        big_n: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        k: i64,
        #[arg(long, default_value_t = 0)]
        r: usize,
        #[arg(long, default_value_t = 4)]
        qmax: usize,
        #[arg(long, value_enum, default_value_t = Kind::Hilbert)]
        kind: Kind,
        #[command(flatten)]
        out: Output,
    },
    /// Ground state character and energy
    Ground {
        #[command(flatten)]
        model: Model,
        #[command(flatten)]
        out: Output,
    },
    /// Hall-Littlewood P (or transformed H) in the Schur basis
    Hl {
        #[arg(long, value_parser = parse_list)]
        mu: IntList,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        transformed: bool,
        #[arg(long)]
        qmax: Option<usize>,
        #[command(flatten)]
        out: Output,
    },
    /// Jing operator S_m applied to a Schur polynomial
    Jing {
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
        #[arg(long, value_parser = parse_list, default_value = "")]
        mu: IntList,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        qmax: Option<usize>,
        #[command(flatten)]
        out: Output,
    },
    /// Kostka-Foulkes polynomial K_{lam,mu}(q)
    Kostka {
        #[arg(long, value_parser = parse_list)]
        lam: IntList,
        #[arg(long, value_parser = parse_list)]
        mu: IntList,
        #[command(flatten)]
        out: Output,
    },
    /// Gelfand-Tsetlin patterns with a given top row
    Gt {
        #[command(flatten)]
        top: TopRow,
        #[command(flatten)]
        out: Output,
    },
    /// Semi-infinite patterns of charge r by degree
    Semigt {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        k: i64,
        #[arg(long, default_value_t = 2)]
        qmax: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Twisted quantum minor eigenvalues on every pattern with a given top row
    Spectra {
        #[command(flatten)]
        top: TopRow,
        #[command(flatten)]
        out: Output,
    },
    /// Drinfeld polynomials of the module with a given top row
    Drinfeld {
        #[command(flatten)]
        top: TopRow,
        #[command(flatten)]
        out: Output,
    },
    /// Predicted Calogero-Sutherland spectrum by degree
    CsSpectrum {
        #[command(flatten)]
        model: Model,
        #[arg(long, default_value_t = 3)]
        qmax: usize,
        /// Print the integer matrix of Slater-product slices at degree E0 + qmax instead
        #[arg(long)]
        csv: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Run a verification suite and print a PASS/FAIL table
    Verify {
        #[arg(value_parser = SUITES)]
        suite: String,
        #[arg(long = "N")]
        big_n: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<i64>,
        #[arg(long)]
        qmax: Option<usize>,
    },
}

#[derive(Args, Clone)]
struct TopRow {
    /// Comma-separated entries (the finite prefix for semi-infinite rows)
    #[arg(long, value_parser = parse_list)]
    top: IntList,
    /// Semi-infinite tail as n,k,r
    #[arg(long, value_parser = parse_list)]
    tail: Option<IntList>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<i64>,
}

/// Comma-separated integers.
#[derive(Clone, Debug, Default)]
struct IntList(Vec<i64>);

fn parse_list(s: &str) -> Result<IntList, String> {
    if s.trim().is_empty() {
        return Ok(IntList::default());
    }
    s.split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|e| format!("{:?}: {}", x, e)))
        .collect::<Result<_, _>>()
        .map(IntList)
}

/// Errors in the arguments (exit 2) versus failed checks or computations (exit 1).
enum Failure {
    Usage(String),
    Compute(String),
    Checks,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NoStabilization { .. } | Error::InexactDivision(_) => Failure::Compute(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

fn big(x: &BigInt) -> Value {
    Value::Number(x.to_string().parse().expect("integer literal"))
}

fn qpoly_json(c: &QPoly) -> Value {
    Value::Array(c.coeffs().iter().map(big).collect())
}

fn exponent_key(e: &[i32]) -> String {
    format!("[{}]", e.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
}

/// q-free polynomial as `{"[e1,...]": c}` in decreasing exponent order.
fn terms_json(f: &SymPoly) -> Value {
    let mut terms = f.expanded_terms();
    terms.reverse();
    let map: Map<String, Value> = terms
        .into_iter()
        .map(|(e, c)| (exponent_key(&e), big(&c.coeff(0))))
        .collect();
    Value::Object(map)
}

fn series_json(params: Value, s: &SymSeries) -> Value {
    let coeffs: Vec<Value> = s
        .coeffs()
        .iter()
        .enumerate()
        .map(|(d, c)| json!({"q": d, "terms": terms_json(c)}))
        .collect();
    json!({"params": params, "coeffs": coeffs})
}

fn pattern_json(p: &GTPattern) -> Value {
    let rows: Vec<Value> = p.rows().iter().map(|r| json!(r.prefix())).collect();
    let tail = p.top().tail().map_or(Value::Null, |t| json!({"n": t.n, "k": t.k, "r": t.r}));
    json!({"rows": rows, "tail": tail})
}

/// Writes to stdout, ignoring a closed pipe.
fn write_out(s: &str) {
    let _ = std::io::stdout().lock().write_all(s.as_bytes());
}

fn emit(format: Format, text: String, value: Value) {
    match format {
        Format::Text => write_out(&text),
        Format::Json => write_out(&format!("{}\n", serde_json::to_string_pretty(&value).expect("serializable"))),
    }
}

fn partition(v: &[i64]) -> Result<Partition, Failure> {
    Ok(Partition::new(v.to_vec())?)
}

fn parse_top(t: &TopRow) -> Result<(WeightRow, usize, i64), Failure> {
    match &t.tail {
        Some(tail) => {
            let [n, k, r] = tail.0[..] else {
                return Err(Failure::Usage("--tail takes n,k,r".into()));
            };
            if n < 1 || k < 1 {
                return Err(Failure::Usage("--tail needs n >= 1 and k >= 1".into()));
            }
            let row = WeightRow::semi_infinite(t.top.0.clone(), Tail::new(n as usize, k, r, 0)?)?;
            Ok((row, n as usize, k))
        }
        None => {
            let n = t.n.ok_or_else(|| Failure::Usage("finite rows need --n".into()))?;
            let k = t.k.unwrap_or(1);
            if n < 1 || k < 1 {
                return Err(Failure::Usage("need n >= 1 and k >= 1".into()));
            }
            Ok((WeightRow::finite(t.top.0.clone())?, n, k))
        }
    }
}

fn patterns_for(row: &WeightRow, n: usize, k: i64) -> Result<Vec<GTPattern>, Failure> {
    match row.tail() {
        Some(t) => {
            let d = degree(row, DegreeMode::SemiInfinite)?;
            if d < 0 {
                return Ok(Vec::new());
            }
            Ok(enumerate_semiinf(t.r, n, k, d as usize)?.into_iter().filter(|p| p.top() == row).collect())
        }
        None => Ok(enumerate_gt(row.prefix().len(), n, k, row)),
    }
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Character { big_n, n, k, r, qmax, kind, out } => {
            let p = ModelParams::new(big_n, n, k)?;
            let s = match kind {
                Kind::Hilbert => hilbert_character(p, qmax)?,
                Kind::Shifted => shifted_character(p, qmax)?,
                Kind::Decomposition => character_via_decomposition(p, qmax)?,
                Kind::K1 => {
                    if k != 1 {
                        return Err(Failure::Usage("--kind k1 needs --k 1".into()));
                    }
                    character_k1(big_n, n, qmax)?
                }
                Kind::Limit => {
                    let cap = match std::env::var("QUIVERCHAR_LCAP") {
                        Ok(v) => Some(v.parse::<usize>().map_err(|e| Failure::Usage(format!("QUIVERCHAR_LCAP: {}", e)))?),
                        Err(_) => None,
                    };
                    limit_character_capped(r, n, k, qmax, cap)?
                }
            };
            let params = match kind {
                Kind::Limit => json!({"r": r, "n": n, "k": k, "qmax": qmax}),
                _ => json!({"N": big_n, "n": n, "k": k, "qmax": qmax}),
            };
            emit(out.format, s.to_string(), series_json(params, &s));
        }
        Command::Ground { model, out } => {
            let p = ModelParams::new(model.big_n, model.n, model.k)?;
            let (f, e0) = ground_state_character(p);
            emit(
                out.format,
                format!("E0 = {}\n{}\n", e0, f),
                json!({"params": {"N": model.big_n, "n": model.n, "k": model.k}, "energy": e0, "terms": terms_json(&f)}),
            );
        }
        Command::Hl { mu, n, transformed, qmax, out } => {
            let mu = partition(&mu.0)?;
            let f = if transformed {
                transformed_hl_truncated(&mu, n, qmax)?
            } else {
                let p = hall_littlewood_p(&mu, n)?;
                qmax.map_or(p.clone(), |d| p.truncate_q(d))
            };
            schur_output(out.format, &f)?;
        }
        Command::Jing { m, mu, n, qmax, out } => {
            let f = jing_truncated(m, &schur(&partition(&mu.0)?, n), qmax)?;
            schur_output(out.format, &f)?;
        }
        Command::Kostka { lam, mu, out } => {
            let c = kostka_foulkes(&partition(&lam.0)?, &partition(&mu.0)?)?;
            emit(out.format, format!("{}\n", c), json!({"lam": lam.0, "mu": mu.0, "coeffs": qpoly_json(&c)}));
        }
        Command::Gt { top, out } => {
            let (row, n, k) = parse_top(&top)?;
            let pats = patterns_for(&row, n, k)?;
            let text: String = pats.iter().map(|p| format!("{}\n", p)).collect();
            emit(out.format, text, Value::Array(pats.iter().map(pattern_json).collect()));
        }
        Command::Semigt { r, n, k, qmax, out } => {
            if n < 1 || k < 1 || r >= n {
                return Err(Failure::Usage("need n >= 1, k >= 1 and r < n".into()));
            }
            let mut text = String::new();
            let mut groups = Vec::new();
            for d in 0..=qmax {
                let pats = enumerate_semiinf(r, n, k, d)?;
                text.push_str(&format!("degree {}: {} patterns\n", d, pats.len()));
                for p in &pats {
                    text.push_str(&format!("  {}  weight {:?}\n", p, p.a_weight()));
                }
                groups.push(json!({"q": d, "patterns": pats.iter().map(pattern_json).collect::<Vec<_>>()}));
            }
            emit(out.format, text, json!({"params": {"r": r, "n": n, "k": k, "qmax": qmax}, "degrees": groups}));
        }
        Command::Spectra { top, out } => {
            let (row, n, k) = parse_top(&top)?;
            let mut text = String::new();
            let mut items = Vec::new();
            for p in patterns_for(&row, n, k)? {
                let minors: Vec<String> = (1..=n)
                    .map(|m| match row.len() {
                        Some(big) => minor_eigenvalue_twisted(&p, m, big / n, big % n, n, k),
                        None => minor_eigenvalue_semiinf(&p, m),
                    })
                    .map(|e| e.map(|x| x.to_string()))
                    .collect::<Result<_, _>>()?;
                text.push_str(&format!("{}\n", p));
                for (m, e) in minors.iter().enumerate() {
                    text.push_str(&format!("  A{}(u) = {}\n", m + 1, e));
                }
                items.push(json!({"pattern": pattern_json(&p), "minors": minors}));
            }
            emit(out.format, text, Value::Array(items));
        }
        Command::Drinfeld { top, out } => {
            let (row, n, k) = parse_top(&top)?;
            let r = match (row.tail(), row.len()) {
                (Some(t), _) => t.r,
                (None, Some(big)) => big % n,
                _ => 0,
            };
            let ps: Vec<String> = drinfeld_polynomials(&row, r, n, k)?.iter().map(|p| p.to_string()).collect();
            let text: String = ps.iter().enumerate().map(|(m, p)| format!("P{}(u) = {}\n", m + 1, p)).collect();
            emit(out.format, text, json!({"top": row.to_string(), "polynomials": ps}));
        }
        Command::CsSpectrum { model, qmax, csv, out } => {
            let p = ModelParams::new(model.big_n, model.n, model.k)?;
            let e0 = p.ground_energy();
            if csv {
                let e = e0 + qmax as i64;
                let states = spanning_products(model.big_n, model.n, model.k as usize, e)?;
                write_out(&slice_matrix_csv(&states, e as i32));
                return Ok(());
            }
            let mut text = String::new();
            let mut items = Vec::new();
            for e in e0..=e0 + qmax as i64 {
                let spec = cs_spectrum(p, e)?;
                let parts: Vec<String> = spec.iter().map(|(ev, m)| format!("{} (x{})", ev, m)).collect();
                text.push_str(&format!("degree {}: {}\n", e, parts.join(", ")));
                let entries: Vec<Value> = spec.iter().map(|(ev, m)| json!({"eigenvalue": ev, "multiplicity": big(m)})).collect();
                items.push(json!({"degree": e, "spectrum": entries}));
            }
            emit(out.format, text, json!({"params": {"N": model.big_n, "n": model.n, "k": model.k}, "degrees": items}));
        }
        Command::Verify { suite, big_n, n, k, qmax } => {
            let grid = Grid { particles: big_n, flavors: n, level: k, degree: qmax };
            let checks = run_suite(&suite, &grid).ok_or_else(|| Failure::Usage(format!("unknown suite {}", suite)))?;
            let failed = checks.iter().filter(|c| !c.passed).count();
            let mut table: String = checks.iter().map(|c| format!("{}\n", c)).collect();
            table.push_str(&format!(
                "{}: {} of {} checks passed\n",
                if failed == 0 { "PASS" } else { "FAIL" },
                checks.len() - failed,
                checks.len()
            ));
            write_out(&table);
            if failed > 0 {
                return Err(Failure::Checks);
            }
        }
    }
    Ok(())
}

fn schur_output(format: Format, f: &SymPoly) -> Outcome {
    let terms = f.schur_expand()?;
    let items: Vec<Value> = terms
        .iter()
        .map(|(lam, c)| json!({"partition": lam.parts(), "coeffs": qpoly_json(c)}))
        .collect();
    emit(format, format!("{}\n", render_schur(&terms)), json!({"schur": items}));
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Compute(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {}\n", msg);
            eprintln!("{}", Cli::command().render_usage());
            ExitCode::from(2)
        }
    }
}
