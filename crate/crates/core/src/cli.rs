//! Command-line front end. [`run`] does all the work and returns the exit code
//! and output, so the binary is a thin wrapper.

use std::ffi::OsString;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::detid::{quantum_determinant, quantum_minor, reduce_mod_i1, MinorSpec};
use crate::error::{Error, Result};
use crate::hspec::{enumerate_hprimes, hasse_diagram, quotient_iso_check, scalar_commutator, IdealPair, DEFAULT_HASSE_CAP};
use crate::maps::{coinvariant_check, coinvariant_preimage, gamma_weight, h_weight, theta};
use crate::ncalg::{Algebra, NCPoly};
use crate::oracle::{
    kernel_equals_i1, verify_all, verify_coinvariants, verify_commutation_scalars, verify_pbw, verify_s_basis, Caps, CheckReport,
};
use crate::parse::{parse, parse_q_value};
use crate::scalar::Rational;

#[derive(Parser, Debug)]
#[command(name = "qmat", version, about = "Exact computations in quantum matrix algebras")]
pub struct Cli {
    /// Number of rows of the ambient quantum matrix algebra.
    #[arg(long, global = true, default_value_t = 2)]
    pub m: usize,
    /// Number of columns of the ambient quantum matrix algebra.
    #[arg(long, global = true, default_value_t = 2)]
    pub n: usize,
    /// Degree cap for the `verify` checks.
    #[arg(long = "max-degree", global = true)]
    pub max_degree: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Evaluate printed elements at this nonzero rational value of q.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub q: Option<String>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Args, Debug)]
pub struct IndexSets {
    /// Comma-separated 1-based row indices.
    #[arg(long, value_delimiter = ',', num_args = 0..)]
    pub rows: Vec<usize>,
    /// Comma-separated 1-based column indices.
    #[arg(long, value_delimiter = ',', num_args = 0..)]
    pub cols: Vec<usize>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Normal form in the PBW basis.
    Nf { expr: String },
    /// Representative modulo the ideal of 2x2 quantum minors.
    NfModI1 { expr: String },
    /// Quantum minor on the given rows and columns.
    Minor(IndexSets),
    /// Quantum determinant (m = n).
    Det,
    /// Image in the tensor product of quantum affine spaces.
    Theta { expr: String },
    /// Grading-zero test in the tensor product, with the preimage when it passes.
    Coinv { expr: String },
    /// Torus weights of the terms (or gradings with --tensor).
    Weights {
        expr: String,
        /// Read the expression in the tensor product.
        #[arg(long)]
        tensor: bool,
    },
    /// Scalars alpha, beta for X[i,j] and X[s,t] modulo the 2x2 minors.
    Commutator { i: usize, j: usize, s: usize, t: usize },
    /// Torus-invariant primes containing the 2x2 minors.
    Hprimes {
        #[command(subcommand)]
        action: HprimesAction,
    },
    /// Check the quotient by P(rows, cols) against a smaller matrix algebra.
    IsoCheck(IndexSets),
    /// Brute-force degree-by-degree checks.
    Verify {
        #[arg(value_enum)]
        check: VerifyCheck,
    },
}

#[derive(Subcommand, Debug, Clone, Copy)]
pub enum HprimesAction {
    List,
    Count,
    Hasse,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VerifyCheck {
    Pbw,
    ThetaKernel,
    SBasis,
    Coinv,
    #[value(alias = "lemma33")]
    Commutation,
    All,
}

/// Exit status and captured output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Exit code for a check that ran and failed.
pub const EXIT_CHECK_FAILED: i32 = 1;
/// Exit code for errors (bad input, caps, ...).
pub const EXIT_ERROR: i32 = 2;

fn error_json(kind: &str, message: &str) -> String {
    json!({ "error": { "kind": kind, "message": message } }).to_string() + "\n"
}

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    Outcome { code: 0, stdout: text, stderr: String::new() }
                }
                _ => Outcome { code: EXIT_ERROR, stdout: String::new(), stderr: error_json("usage", text.trim_end()) },
            };
        }
    };
    match execute(&cli) {
        Ok((code, mut stdout)) => {
            if !stdout.ends_with('\n') {
                stdout.push('\n');
            }
            Outcome { code, stdout, stderr: String::new() }
        }
        Err(e) => Outcome { code: EXIT_ERROR, stdout: String::new(), stderr: error_json(e.kind(), &e.to_string()) },
    }
}

struct Ctx<'a> {
    cli: &'a Cli,
    q: Option<Rational>,
}

impl Ctx<'_> {
    fn json(&self) -> bool {
        self.cli.format == Format::Json
    }

    fn matrix(&self) -> Result<Arc<Algebra>> {
        Algebra::quantum_matrix(self.cli.m, self.cli.n)
    }

    fn tensor(&self) -> Result<Arc<Algebra>> {
        Algebra::affine_tensor(self.cli.m, self.cli.n)
    }

    fn element_json(&self, p: &NCPoly) -> Result<Value> {
        let mut v = json!({ "algebra": p.algebra().to_string() });
        match &self.q {
            None => {
                v["text"] = p.to_string().into();
                v["terms"] = p.to_json();
            }
            Some(c) => {
                v["q"] = c.to_string().into();
                v["text"] = p.specialize(c)?.to_string().into();
            }
        }
        Ok(v)
    }

    /// Renders an element, evaluated at `q` when requested.
    fn element(&self, p: &NCPoly) -> Result<String> {
        match (&self.q, self.json()) {
            (_, true) => Ok(self.element_json(p)?.to_string()),
            (None, false) => Ok(p.to_string()),
            (Some(c), false) => Ok(p.specialize(c)?.to_string()),
        }
    }
}

fn serialize<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("report types serialize")
}

fn execute(cli: &Cli) -> Result<(i32, String)> {
    let q = match &cli.q {
        None => None,
        Some(text) => {
            let c = parse_q_value(text)?;
            if num_traits::Zero::is_zero(&c) {
                return Err(Error::ZeroSpecialization);
            }
            Some(c)
        }
    };
    if cli.format == Format::Dot && !matches!(cli.command, Command::Hprimes { action: HprimesAction::Hasse }) {
        return Err(Error::InvalidArgument("--format dot is only available for `hprimes hasse`".into()));
    }
    let ctx = Ctx { cli, q };
    let ok = |s: String| Ok((0, s));
    match &cli.command {
        Command::Nf { expr } => ok(ctx.element(&parse(expr, &ctx.matrix()?)?)?),
        Command::NfModI1 { expr } => ok(ctx.element(&reduce_mod_i1(&parse(expr, &ctx.matrix()?)?)?)?),
        Command::Minor(ix) => {
            let spec = MinorSpec::new(ix.rows.clone(), ix.cols.clone())?;
            ok(ctx.element(&quantum_minor(&ctx.matrix()?, &spec)?)?)
        }
        Command::Det => ok(ctx.element(&quantum_determinant(&ctx.matrix()?)?)?),
        Command::Theta { expr } => ok(ctx.element(&theta(&parse(expr, &ctx.matrix()?)?)?)?),
        Command::Coinv { expr } => coinv(&ctx, expr),
        Command::Weights { expr, tensor } => weights(&ctx, expr, *tensor),
        Command::Commutator { i, j, s, t } => {
            for (v, bound) in [(i, cli.m), (j, cli.n), (s, cli.m), (t, cli.n)] {
                if *v == 0 || *v > bound {
                    return Err(Error::IndexOutOfRange(format!("index {v} (bound {bound})")));
                }
            }
            let c = scalar_commutator(*i, *j, *s, *t)?;
            let a = Algebra::quantum_matrix(cli.m, cli.n)?;
            let (alpha, beta) = (NCPoly::constant(&a, c.alpha).to_string(), NCPoly::constant(&a, c.beta).to_string());
            if ctx.json() {
                ok(json!({ "alpha": alpha, "beta": beta }).to_string())
            } else {
                ok(format!("alpha = {alpha}\nbeta = {beta}"))
            }
        }
        Command::Hprimes { action } => hprimes(&ctx, *action),
        Command::IsoCheck(ix) => {
            let pair = IdealPair::new(cli.m, cli.n, &ix.rows, &ix.cols)?;
            let r = quotient_iso_check(&pair)?;
            let code = if r.pass { 0 } else { EXIT_CHECK_FAILED };
            let text = if ctx.json() {
                serialize(&r)
            } else {
                format!(
                    "{} {}: quotient is O_q(M_{{{},{}}}) modulo its 2x2 minors\n\
                     relations respected: {}\nideal killed: {}\nminors lifted: {}\n\
                     quotient after section: {}\nsection after quotient: {}",
                    if r.pass { "PASS" } else { "FAIL" },
                    pair.label(),
                    r.m_prime,
                    r.n_prime,
                    r.relations_respected,
                    r.ideal_killed,
                    r.minors_lifted,
                    r.section_then_quotient,
                    r.quotient_then_section
                )
            };
            Ok((code, text))
        }
        Command::Verify { check } => verify(&ctx, *check),
    }
}

fn coinv(ctx: &Ctx<'_>, expr: &str) -> Result<(i32, String)> {
    let p = parse(expr, &ctx.tensor()?)?;
    let check = coinvariant_check(&p)?;
    let preimage = if check.coinvariant { Some(coinvariant_preimage(&p)?) } else { None };
    let text = if ctx.json() {
        let pre = match &preimage {
            Some(x) => ctx.element_json(x)?,
            None => Value::Null,
        };
        json!({
            "coinvariant": check.coinvariant,
            "witness": check.witness.as_ref().map(|(w, g)| json!({ "word": w, "weight": g.0 })),
            "preimage": pre,
        })
        .to_string()
    } else {
        match (&check.witness, &preimage) {
            (Some((w, g)), _) => format!("coinvariant: false\nwitness: {w} (weight {g})"),
            (None, Some(x)) => format!("coinvariant: true\npreimage: {}", ctx.element(x)?),
            (None, None) => unreachable!(),
        }
    };
    Ok((0, text))
}

fn weights(ctx: &Ctx<'_>, expr: &str, tensor: bool) -> Result<(i32, String)> {
    let algebra = if tensor { ctx.tensor()? } else { ctx.matrix()? };
    let p = parse(expr, &algebra)?;
    let mut lines = Vec::new();
    let mut items = Vec::new();
    for (w, _) in p.sorted_terms().into_iter().rev() {
        let name = if w.is_empty() {
            "1".to_string()
        } else {
            w.iter().map(|&l| algebra.letter_name(l)).collect::<Vec<_>>().join("*")
        };
        if tensor {
            let g = gamma_weight(&algebra, w)?;
            lines.push(format!("{name}: {g}"));
            items.push(json!({ "word": name, "weight": g.0 }));
        } else {
            let t = h_weight(&algebra, w)?;
            lines.push(format!("{name}: rows {:?} cols {:?}", t.rows, t.cols));
            items.push(json!({ "word": name, "rows": t.rows, "cols": t.cols }));
        }
    }
    Ok((0, if ctx.json() { Value::Array(items).to_string() } else { lines.join("\n") }))
}

fn hprimes(ctx: &Ctx<'_>, action: HprimesAction) -> Result<(i32, String)> {
    let (m, n) = (ctx.cli.m, ctx.cli.n);
    match action {
        HprimesAction::Count => {
            let count = enumerate_hprimes(m, n)?.len();
            Ok((0, if ctx.json() { json!({ "m": m, "n": n, "count": count }).to_string() } else { count.to_string() }))
        }
        HprimesAction::List => {
            let list = enumerate_hprimes(m, n)?;
            if ctx.json() {
                Ok((0, Value::Array(list.iter().map(IdealPair::to_json).collect()).to_string()))
            } else {
                Ok((0, list.iter().map(|p| format!("{} {}", p.id(), p.label())).collect::<Vec<_>>().join("\n")))
            }
        }
        HprimesAction::Hasse => {
            let h = hasse_diagram(m, n, DEFAULT_HASSE_CAP)?;
            Ok((0, if ctx.json() { h.to_json().to_string() } else { h.to_dot() }))
        }
    }
}

fn verify(ctx: &Ctx<'_>, check: VerifyCheck) -> Result<(i32, String)> {
    let (m, n) = (ctx.cli.m, ctx.cli.n);
    let mut caps = Caps::default();
    if let Some(d) = ctx.cli.max_degree {
        caps.max_degree = d;
    }
    let top = caps.max_degree;
    let reports: Vec<CheckReport> = match check {
        VerifyCheck::Pbw => vec![verify_pbw(m, n, top, &caps)?.to_check()],
        VerifyCheck::ThetaKernel => {
            (0..=top).map(|d| kernel_equals_i1(m, n, d, &caps).map(|r| r.to_check())).collect::<Result<_>>()?
        }
        VerifyCheck::SBasis => {
            (0..=top).map(|d| verify_s_basis(m, n, d, &caps).map(|r| r.to_check())).collect::<Result<_>>()?
        }
        VerifyCheck::Coinv => vec![verify_coinvariants(m, n, top, &caps)?.to_check()],
        VerifyCheck::Commutation => vec![verify_commutation_scalars(m, n, &caps)?.to_check()],
        VerifyCheck::All => {
            caps.check(m, n, top)?;
            verify_all(&Caps { max_m: m, max_n: n, ..caps })?
        }
    };
    let code = if reports.iter().all(|r| r.pass) { 0 } else { EXIT_CHECK_FAILED };
    let lines: Vec<String> = reports
        .iter()
        .map(|r| {
            if ctx.json() {
                serialize(r)
            } else {
                format!(
                    "{} {} m={} n={} d={} expected={} got={}",
                    if r.pass { "PASS" } else { "FAIL" },
                    r.check,
                    r.m,
                    r.n,
                    r.d,
                    r.expected,
                    r.got
                )
            }
        })
        .collect();
    Ok((code, lines.join("\n")))
}
