//! Argument parsing and command dispatch for the `rmatrix` binary.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rmatrix_core::belavindrinfeld::{cg_triple, r_cg};
use rmatrix_core::case512::verify512;
use rmatrix_core::frobenius::{
    f_rho_mu, is_frobenius, parabolic_basis, principal_element, r_from_functional, subprime_functional,
    LinearFunctional,
};
use rmatrix_core::lie::json::{three_to_json, two_to_json, AnyTwoTensor};
use rmatrix_core::lie::TwoTensor;
use rmatrix_core::report::Report;
use rmatrix_core::subprime::{
    b, context, eigen_report, lemma_identities, nilpotent_algebra_checks, phi, r_prime, subprime_pairs,
    verify_main, verify_module_actions, SubprimeContext,
};
use rmatrix_core::yangbaxter::{carrier, classify};
use rmatrix_core::{Error, ExactMatrix, LaurentPoly, Rational, Scalar};
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "rmatrix", version, about = "Exact r-matrix constructions and checks on sl_n")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Args, Debug, Clone, Copy)]
struct Pair {
    #[arg(long)]
    i: usize,
    #[arg(long)]
    n: usize,
}

#[derive(Args, Debug)]
struct Output {
    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, global = true)]
    format: Option<Format>,
}

#[derive(Subcommand, Debug)]
enum Construct {
    /// The Cremmer-Gervais r-matrix.
    Cg(Pair),
    /// The Cremmer-Gervais BD-triple.
    Triple(Pair),
    /// The boundary solution `b = -(X + Z).r`.
    B(Pair),
    /// `r' = r + V_i`.
    RPrime(Pair),
    /// `f_{rho,mu}`; the subprime functional by default.
    Functional {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, allow_hyphen_values = true)]
        rho: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build an object and write it as JSON or text.
    Construct {
        #[command(subcommand)]
        what: Construct,
        #[command(flatten)]
        output: Output,
    },
    /// Schouten bracket of a stored two-tensor.
    Schouten {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// CYBE / MCYBE / neither, with carrier data.
    Classify {
        #[arg(long = "in")]
        input: PathBuf,
        /// Compare the carrier with p(i, n).
        #[arg(long)]
        i: Option<usize>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Carrier of a stored two-tensor.
    Carrier {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Frobenius status and principal element of a functional on p(i, n).
    Frobenius {
        #[command(flatten)]
        pair: Pair,
        /// `subprime` or a functional JSON file.
        #[arg(long, default_value = "subprime")]
        functional: String,
        /// Also print r_f.
        #[arg(long)]
        r_f: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// The matrix Phi(t).
    Phi {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// All checks for one subprime pair.
    VerifySubprime {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// All checks of the (5, 12) construction.
    #[command(name = "verify-512")]
    Verify512 {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Main-theorem checks for every subprime pair up to `max_n`.
    VerifyAll {
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

/// A command failure and the exit code it maps to.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self { code: EXIT_USAGE, message: message.into() }
    }

    fn check(message: impl Into<String>) -> Self {
        Self { code: EXIT_FAIL, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Self::usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

/// Parse `argv` and execute, writing results to `out` and diagnostics to `err`.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn execute(cmd: Command, out: &mut dyn Write) -> Outcome {
    match cmd {
        Command::Construct { what, output } => construct(what, output, out),
        Command::Schouten { input, format } => schouten_cmd(&input, format, out),
        Command::Classify { input, i, format } => classify_cmd(&input, i, format, out),
        Command::Carrier { input, format } => carrier_cmd(&input, format, out),
        Command::Frobenius { pair, functional, r_f, format } => frobenius_cmd(pair, &functional, r_f, format, out),
        Command::Phi { pair, format } => phi_cmd(pair, format, out),
        Command::VerifySubprime { pair, format } => verify_subprime_cmd(pair, format, out),
        Command::Verify512 { format } => verify512_cmd(format, out),
        Command::VerifyAll { max_n, format } => verify_all_cmd(max_n, format, out),
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Outcome {
    writeln!(out, "{text}").map_err(|e| Failure::usage(format!("cannot write output: {e}")))
}

fn emit_json(out: &mut dyn Write, v: &Value) -> Outcome {
    emit(out, &serde_json::to_string_pretty(v).expect("serializable"))
}

fn parse_q(flag: &str, s: &str) -> Result<Rational, Failure> {
    s.parse().map_err(|_| Failure::usage(format!("--{flag}: cannot parse {s:?} as a rational")))
}

fn subprime_ctx(pair: Pair) -> Result<SubprimeContext, Failure> {
    Ok(context(pair.i, pair.n)?)
}

fn construct(what: Construct, output: Output, out: &mut dyn Write) -> Outcome {
    let format = output.format.unwrap_or(Format::Json);
    let (json, text) = match what {
        Construct::Cg(p) => tensor_pair(&r_cg(p.i, p.n)?),
        Construct::Triple(p) => {
            let t = cg_triple(p.i, p.n)?;
            let edges: Vec<String> = t.edges().map(|(a, b)| format!("{a}->{b}")).collect();
            (t.to_json(), edges.join(" "))
        }
        Construct::B(p) => tensor_pair(&b(&subprime_ctx(p)?)),
        Construct::RPrime(p) => tensor_pair(&r_prime(&subprime_ctx(p)?)),
        Construct::Functional { pair, rho, mu } => {
            let f = match (rho, mu) {
                (None, None) => subprime_functional(pair.i, pair.n)?,
                (rho, mu) => {
                    let rho = parse_q("rho", rho.as_deref().unwrap_or("-1"))?;
                    let eps = rmatrix_core::frobenius::epsilon(pair.i, pair.n).to_string();
                    let mu = parse_q("mu", mu.as_deref().unwrap_or(&eps))?;
                    f_rho_mu(pair.i, pair.n, &rho, &mu)?
                }
            };
            (f.to_json(), functional_text(&f))
        }
    };
    let body = match format {
        Format::Json => serde_json::to_string_pretty(&json).expect("serializable"),
        Format::Text => text,
    };
    match output.out {
        Some(path) => fs::write(&path, body + "\n")
            .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display()))),
        None => emit(out, &body),
    }
}

fn tensor_pair(t: &TwoTensor) -> (Value, String) {
    (two_to_json(t), t.to_string())
}

fn functional_text(f: &LinearFunctional) -> String {
    let parts: Vec<String> = f.coords().iter().map(|(p, c)| format!("{c}*{p}*")).collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

fn read_tensor(path: &Path) -> Result<TwoTensor, Failure> {
    let raw = fs::read_to_string(path).map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
    let v: Value = serde_json::from_str(&raw).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    match AnyTwoTensor::from_json(&v)? {
        AnyTwoTensor::Q(t) => Ok(t),
        AnyTwoTensor::Qt(_) => Err(Failure::usage("expected a rational tensor (ring \"Q\")")),
    }
}

fn schouten_cmd(input: &Path, format: Format, out: &mut dyn Write) -> Outcome {
    let r = read_tensor(input)?;
    let class = classify(&r);
    match format {
        Format::Json => emit_json(out, &json!({ "class": class.tag.to_string(), "schouten": three_to_json(&class.witness) })),
        Format::Text => emit(out, &format!("{}\nclass: {}", class.witness, class.tag)),
    }
}

fn classify_cmd(input: &Path, i: Option<usize>, format: Format, out: &mut dyn Write) -> Outcome {
    let r = read_tensor(input)?;
    let class = classify(&r).tag;
    let car = carrier(&r);
    let equals_parabolic = match i {
        Some(i) => Some(car.same_as(&parabolic_basis(i, r.n())?.subspace())),
        None => None,
    };
    let report = json!({
        "class": class.to_string(),
        "carrier_dim": car.dim(),
        "carrier_equals_parabolic": equals_parabolic,
    });
    match format {
        Format::Json => emit_json(out, &report)?,
        Format::Text => {
            let mut s = format!("class: {class}\ncarrier_dim: {}", car.dim());
            if let Some(eq) = equals_parabolic {
                s += &format!("\ncarrier_equals_parabolic: {eq}");
            }
            emit(out, &s)?;
        }
    }
    if equals_parabolic == Some(false) {
        return Err(Failure::check("carrier differs from the parabolic subalgebra"));
    }
    Ok(())
}

fn carrier_cmd(input: &Path, format: Format, out: &mut dyn Write) -> Outcome {
    let r = read_tensor(input)?;
    let car = carrier(&r);
    let basis: Vec<String> = car.basis().iter().map(ToString::to_string).collect();
    match format {
        Format::Json => emit_json(out, &json!({ "v": 1, "n": r.n(), "dim": car.dim(), "basis": basis })),
        Format::Text => emit(out, &format!("dim: {}\n{}", car.dim(), basis.join("\n"))),
    }
}

fn frobenius_cmd(pair: Pair, functional: &str, r_f: bool, format: Format, out: &mut dyn Write) -> Outcome {
    let p = parabolic_basis(pair.i, pair.n)?;
    let f = if functional == "subprime" {
        subprime_functional(pair.i, pair.n)?
    } else {
        let path = Path::new(functional);
        let raw = fs::read_to_string(path).map_err(|e| Failure::usage(format!("cannot read {functional}: {e}")))?;
        let v: Value = serde_json::from_str(&raw).map_err(|e| Failure::usage(format!("{functional}: {e}")))?;
        let f = LinearFunctional::from_json(&v)?;
        if f.n() != pair.n {
            return Err(Failure::usage(format!("functional has n = {}, expected {}", f.n(), pair.n)));
        }
        f
    };
    let frob = is_frobenius(&f, &p);
    let h = if frob { Some(principal_element(&f, &p)?) } else { None };
    let rf = if frob && r_f { Some(r_from_functional(&f, &p)?) } else { None };
    match format {
        Format::Json => {
            let mut v = json!({ "i": pair.i, "n": pair.n, "frobenius": frob });
            if let Some(h) = &h {
                v["principal_element"] = rmatrix_core::lie::json::element_to_json(h);
            }
            if let Some(rf) = &rf {
                v["r_f"] = two_to_json(rf);
            }
            emit_json(out, &v)?;
        }
        Format::Text => {
            let mut s = format!("frobenius: {frob}");
            if let Some(h) = &h {
                s += &format!("\nprincipal element: {h}");
            }
            if let Some(rf) = &rf {
                s += &format!("\nr_f: {rf}");
            }
            emit(out, &s)?;
        }
    }
    if frob {
        Ok(())
    } else {
        Err(Failure::check(format!("functional is not Frobenius on p({}, {})", pair.i, pair.n)))
    }
}

fn matrix_text<S: Scalar>(m: &ExactMatrix<S>) -> String {
    let cells: Vec<Vec<String>> = (0..m.rows()).map(|r| m.row(r).iter().map(ToString::to_string).collect()).collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    cells
        .iter()
        .map(|row| row.iter().map(|c| format!("{c:>width$}")).collect::<Vec<_>>().join("  "))
        .collect::<Vec<_>>()
        .join("\n")
}

fn phi_cmd(pair: Pair, format: Format, out: &mut dyn Write) -> Outcome {
    let m: ExactMatrix<LaurentPoly> = phi(&subprime_ctx(pair)?);
    match format {
        Format::Text => emit(out, &matrix_text(&m)),
        Format::Json => {
            let rows: Vec<Vec<String>> =
                (0..m.rows()).map(|r| m.row(r).iter().map(ToString::to_string).collect()).collect();
            emit_json(out, &json!({ "v": 1, "i": pair.i, "n": pair.n, "ring": "Qt", "rows": rows }))
        }
    }
}

fn subprime_suite(ctx: &SubprimeContext) -> (Report, Value) {
    let main = verify_main(ctx);
    let mut all = Report::new();
    for part in [verify_module_actions(ctx), lemma_identities(ctx), nilpotent_algebra_checks(ctx), eigen_report(ctx)] {
        all.extend(part);
    }
    let mut json = main.to_json();
    json["structure"] = all.to_json_map();
    all.extend(main.checks);
    (all, json)
}

fn finish(report: &Report, json: Value, format: Format, out: &mut dyn Write) -> Outcome {
    match format {
        Format::Json => emit_json(out, &json)?,
        Format::Text => emit(out, report.to_string().trim_end())?,
    }
    match report.failures().first() {
        None => Ok(()),
        Some(name) => Err(Failure::check(format!("check failed: {name}"))),
    }
}

fn verify_subprime_cmd(pair: Pair, format: Format, out: &mut dyn Write) -> Outcome {
    let ctx = subprime_ctx(pair)?;
    let (report, json) = subprime_suite(&ctx);
    finish(&report, json, format, out)
}

fn verify512_cmd(format: Format, out: &mut dyn Write) -> Outcome {
    let rep = verify512();
    finish(&rep.checks, rep.to_json(), format, out)
}

fn verify_all_cmd(max_n: usize, format: Format, out: &mut dyn Write) -> Outcome {
    if max_n < 2 {
        return Err(Failure::usage("--max-n must be at least 2"));
    }
    let mut report = Report::new();
    let mut rows = Vec::new();
    for (i, n) in subprime_pairs(max_n) {
        let ctx = context(i, n)?;
        let (suite, json) = subprime_suite(&ctx);
        report.push(format!("({i},{n})"), suite.all_pass());
        if let Some(name) = suite.failures().first() {
            report.push(format!("({i},{n}) {name}"), false);
        }
        rows.push(json);
    }
    finish(&report, json!({ "max_n": max_n, "pairs": rows }), format, out)
}
