//! The `fplab` command line: argument parsing, dispatch against a session
//! file, and report rendering.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::field::Prime;
use crate::frobenius::{
    bracket_power, fedder_is_fpure, frobenius_closure, frobenius_preimage, frobenius_root_ideal,
    hsl_hypersurface, in_frobenius_closure, ClosureMembership,
};
use crate::groebner::{
    colon, eliminate, ideal_product, ideal_sum, intersect, set_pair_budget, Ideal,
};
use crate::hilbert::{
    dimension, embedding_dimension, format_univariate, hilbert_series, length_quotient,
    multiplicity,
};
use crate::poly::MonomialOrder;
use crate::session::{load_session, Session};
use crate::verify::{
    check_cor24b, check_hsl_bound, check_hw_bound, check_skoda, gamma, is_reduction, run_suite,
    SuiteName, Verdict, DEFAULT_E_MAX, DEFAULT_S_MAX,
};

#[derive(Debug, Parser)]
#[command(
    name = "fplab",
    version,
    about = "Exact commutative algebra in prime characteristic"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Session file declaring the ring, polynomials and ideals.
    #[arg(short = 'f', long = "file", global = true, value_name = "SESSION")]
    pub file: Option<PathBuf>,
    /// Emit a JSON report instead of aligned text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Largest Frobenius exponent e tried.
    #[arg(long = "e-max", global = true, default_value_t = DEFAULT_E_MAX)]
    pub e_max: u32,
    /// Largest s tried when searching for a reduction.
    #[arg(long = "s-max", global = true, default_value_t = DEFAULT_S_MAX)]
    pub s_max: u32,
    /// Monomial order for `gb` and `nf` (default: the session's order).
    #[arg(long, global = true, value_parser = ["grevlex", "lex"])]
    pub order: Option<String>,
    /// S-pair budget per Groebner basis.
    #[arg(long = "pair-budget", global = true)]
    pub pair_budget: Option<u64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Reduced Groebner basis.
    Gb { ideal: String },
    /// Normal form of a polynomial modulo an ideal.
    Nf { poly: String, ideal: String },
    /// Ideal membership.
    Member { poly: String, ideal: String },
    /// Ideal sum A + B.
    Sum { a: String, b: String },
    /// Ideal product A B.
    Product { a: String, b: String },
    /// Intersection of A and B.
    Intersect { a: String, b: String },
    /// The colon ideal (A : B).
    Colon { a: String, b: String },
    /// Eliminates the first k variables.
    Eliminate {
        ideal: String,
        #[arg(long)]
        k: usize,
    },
    /// Hilbert series of S/I.
    Hilbert { ideal: String },
    /// Krull dimension of S/I.
    Dim { ideal: String },
    /// Multiplicity e(S/I).
    Mult { ideal: String },
    /// Embedding dimension of S/I.
    Embdim { ideal: String },
    /// Length of S/I.
    Length { ideal: String },
    /// Bracket power I^[p^e].
    Bracket {
        ideal: String,
        #[arg(long, default_value_t = 1)]
        e: u32,
    },
    /// Frobenius root I_e.
    Froot {
        ideal: String,
        #[arg(long, default_value_t = 1)]
        e: u32,
    },
    /// {x : x^(p^e) ∈ A}.
    Fpreimage {
        ideal: String,
        #[arg(long, default_value_t = 1)]
        e: u32,
    },
    /// Frobenius closure chain of J in S/I.
    Fclosure { j: String, ambient: String },
    /// Frobenius closure membership of f in J, in S/I.
    Inclosure {
        poly: String,
        j: String,
        ambient: String,
    },
    /// Fedder's F-purity criterion.
    Fedder { ideal: String },
    /// HSL number of a hypersurface.
    Hsl { poly: String },
    /// Searches for s with m^(s+1) ⊆ J m^s + I.
    Reduction { j: String, ambient: String },
    /// Tests m^(d+1) ⊆ J^F.
    Skoda { j: String, ambient: String },
    /// e <= C(v,d) + ℓ(J^F/J).
    Cor24b { j: String, ambient: String },
    /// e <= C(v,d).
    Hwbound { ideal: String },
    /// e <= Q^(v-d) C(v,d) for a hypersurface.
    Hslbound { poly: String },
    /// ((n-1)p + 1)/(np).
    Gamma {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        p: u64,
    },
    /// Runs a built-in suite: example1, example2, remark33 or bounds.
    Verify {
        /// example1, example2, bounds, remark33 or remark33(n,p)
        suite: String,
        /// Number of variables for remark33
        #[arg(long, default_value_t = 3)]
        n: u64,
        /// Characteristic for remark33
        #[arg(long, default_value_t = 2)]
        p: u64,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Gb { .. } => "gb",
            Command::Nf { .. } => "nf",
            Command::Member { .. } => "member",
            Command::Sum { .. } => "sum",
            Command::Product { .. } => "product",
            Command::Intersect { .. } => "intersect",
            Command::Colon { .. } => "colon",
            Command::Eliminate { .. } => "eliminate",
            Command::Hilbert { .. } => "hilbert",
            Command::Dim { .. } => "dim",
            Command::Mult { .. } => "mult",
            Command::Embdim { .. } => "embdim",
            Command::Length { .. } => "length",
            Command::Bracket { .. } => "bracket",
            Command::Froot { .. } => "froot",
            Command::Fpreimage { .. } => "fpreimage",
            Command::Fclosure { .. } => "fclosure",
            Command::Inclosure { .. } => "inclosure",
            Command::Fedder { .. } => "fedder",
            Command::Hsl { .. } => "hsl",
            Command::Reduction { .. } => "reduction",
            Command::Skoda { .. } => "skoda",
            Command::Cor24b { .. } => "cor24b",
            Command::Hwbound { .. } => "hwbound",
            Command::Hslbound { .. } => "hslbound",
            Command::Gamma { .. } => "gamma",
            Command::Verify { .. } => "verify",
        }
    }

    fn inputs(&self) -> Vec<String> {
        use Command::*;
        let v: Vec<&String> = match self {
            Gb { ideal }
            | Eliminate { ideal, .. }
            | Hilbert { ideal }
            | Dim { ideal }
            | Mult { ideal }
            | Embdim { ideal }
            | Length { ideal }
            | Bracket { ideal, .. }
            | Froot { ideal, .. }
            | Fpreimage { ideal, .. }
            | Fedder { ideal }
            | Hwbound { ideal } => vec![ideal],
            Nf { poly, ideal } | Member { poly, ideal } => vec![poly, ideal],
            Sum { a, b } | Product { a, b } | Intersect { a, b } | Colon { a, b } => vec![a, b],
            Fclosure { j, ambient }
            | Reduction { j, ambient }
            | Skoda { j, ambient }
            | Cor24b { j, ambient } => vec![j, ambient],
            Inclosure { poly, j, ambient } => vec![poly, j, ambient],
            Hsl { poly } | Hslbound { poly } => vec![poly],
            Gamma { .. } => vec![],
            Verify { suite, .. } => vec![suite],
        };
        v.into_iter().cloned().collect()
    }
}

/// How a command ended.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    /// A checked inequality or suite check came out false.
    Failed(String),
    Error(String),
    Inconclusive(String),
}

impl Status {
    pub fn exit_code(&self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Failed(_) => 1,
            Status::Error(_) => 2,
            Status::Inconclusive(_) => 3,
        }
    }
}

/// The report printed for every command.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CliReport {
    pub command: String,
    pub inputs: Vec<String>,
    pub result: Value,
    pub elapsed_ms: u64,
    pub status: Status,
}

impl CliReport {
    pub fn exit_code(&self) -> i32 {
        self.status.exit_code()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Aligned `key  value` lines; nested results are indented.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let status = match &self.status {
            Status::Ok => "ok".to_string(),
            Status::Failed(m) => format!("failed: {m}"),
            Status::Error(m) => format!("error: {m}"),
            Status::Inconclusive(m) => format!("inconclusive: {m}"),
        };
        let _ = writeln!(out, "{:<10}{}", "command", self.command);
        let _ = writeln!(out, "{:<10}{}", "inputs", self.inputs.join(" "));
        match &self.result {
            Value::Object(_) | Value::Array(_) => {
                let _ = writeln!(out, "result");
                render(&self.result, 1, &mut out);
            }
            v => {
                let _ = writeln!(out, "{:<10}{}", "result", scalar(v));
            }
        }
        let _ = writeln!(out, "{:<10}{}", "status", status);
        let _ = writeln!(out, "{:<10}{} ms", "elapsed", self.elapsed_ms);
        out
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn render(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => {
            let width = map.keys().map(|k| k.chars().count()).max().unwrap_or(0) + 2;
            for (k, val) in map {
                match val {
                    Value::Object(m) if !m.is_empty() => {
                        let _ = writeln!(out, "{pad}{k}");
                        render(val, depth + 1, out);
                    }
                    Value::Array(a) if a.iter().any(|x| x.is_object() || x.is_array()) => {
                        let _ = writeln!(out, "{pad}{k}");
                        render(val, depth + 1, out);
                    }
                    _ => {
                        let _ = writeln!(out, "{pad}{k:<width$}{}", inline(val));
                    }
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                match item {
                    Value::Object(_) | Value::Array(_) => {
                        let _ = writeln!(out, "{pad}-");
                        render(item, depth + 1, out);
                    }
                    _ => {
                        let _ = writeln!(out, "{pad}{}", scalar(item));
                    }
                }
            }
        }
        other => {
            let _ = writeln!(out, "{pad}{}", scalar(other));
        }
    }
}

fn inline(v: &Value) -> String {
    match v {
        Value::Array(a) => {
            let parts: Vec<String> = a.iter().map(scalar).collect();
            format!("[{}]", parts.join(", "))
        }
        Value::Object(m) if m.is_empty() => "{}".to_string(),
        other => scalar(other),
    }
}

fn basis(ideal: &Ideal) -> Result<Value> {
    let gb = ideal.grevlex_basis()?;
    Ok(json!(gb
        .elements()
        .iter()
        .map(|g| g.to_string())
        .collect::<Vec<_>>()))
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("value serializes")
}

struct Ctx<'a> {
    session: Option<Session>,
    opts: &'a GlobalOpts,
}

impl Ctx<'_> {
    fn session(&self) -> Result<&Session> {
        self.session
            .as_ref()
            .ok_or_else(|| Error::InvalidArgument("this command needs a session file (-f)".into()))
    }

    fn ideal(&self, name: &str) -> Result<Ideal> {
        self.session()?.ideal_like(name)
    }

    fn poly(&self, name: &str) -> Result<crate::poly::Polynomial> {
        self.session()?.poly_like(name)
    }

    fn order(&self) -> Result<MonomialOrder> {
        match &self.opts.order {
            Some(o) => o.parse(),
            None => Ok(self.session()?.ring.order()),
        }
    }
}

fn bound_status(holds: bool) -> Status {
    if holds {
        Status::Ok
    } else {
        Status::Failed("bound does not hold".into())
    }
}

fn execute(cmd: &Command, ctx: &Ctx) -> Result<(Value, Status)> {
    let ok = |v: Value| Ok((v, Status::Ok));
    let e_max = ctx.opts.e_max;
    match cmd {
        Command::Gb { ideal } => {
            let order = ctx.order()?;
            let gb = ctx.ideal(ideal)?.groebner_basis_in(order)?;
            let elems: Vec<String> = gb.elements().iter().map(|g| g.to_string()).collect();
            ok(json!({ "order": order, "basis": elems }))
        }
        Command::Nf { poly, ideal } => {
            let gb = ctx.ideal(ideal)?.groebner_basis_in(ctx.order()?)?;
            ok(json!(gb.normal_form(&ctx.poly(poly)?)?.to_string()))
        }
        Command::Member { poly, ideal } => {
            ok(json!(ctx.ideal(ideal)?.contains(&ctx.poly(poly)?)?))
        }
        Command::Sum { a, b } => ok(basis(&ideal_sum(&ctx.ideal(a)?, &ctx.ideal(b)?)?)?),
        Command::Product { a, b } => ok(basis(&ideal_product(&ctx.ideal(a)?, &ctx.ideal(b)?)?)?),
        Command::Intersect { a, b } => ok(basis(&intersect(&ctx.ideal(a)?, &ctx.ideal(b)?)?)?),
        Command::Colon { a, b } => ok(basis(&colon(&ctx.ideal(a)?, &ctx.ideal(b)?)?)?),
        Command::Eliminate { ideal, k } => ok(basis(&eliminate(&ctx.ideal(ideal)?, *k)?)?),
        Command::Hilbert { ideal } => {
            let hs = hilbert_series(&ctx.ideal(ideal)?)?;
            ok(json!({
                "series": hs.to_string(),
                "raw_numerator": format_univariate(&hs.raw_numerator),
                "reduced_numerator": hs.reduced_numerator,
                "dimension": hs.dimension(),
                "multiplicity": hs.multiplicity(),
            }))
        }
        Command::Dim { ideal } => ok(json!(dimension(&ctx.ideal(ideal)?)?)),
        Command::Mult { ideal } => ok(json!(multiplicity(&ctx.ideal(ideal)?)?)),
        Command::Embdim { ideal } => ok(json!(embedding_dimension(&ctx.ideal(ideal)?)?)),
        Command::Length { ideal } => ok(to_value(&length_quotient(&ctx.ideal(ideal)?)?)),
        Command::Bracket { ideal, e } => ok(basis(&bracket_power(&ctx.ideal(ideal)?, *e)?)?),
        Command::Froot { ideal, e } => ok(basis(&frobenius_root_ideal(&ctx.ideal(ideal)?, *e)?)?),
        Command::Fpreimage { ideal, e } => ok(basis(&frobenius_preimage(&ctx.ideal(ideal)?, *e)?)?),
        Command::Fclosure { j, ambient } => {
            let chain = frobenius_closure(&ctx.ideal(j)?, &ctx.ideal(ambient)?, e_max)?;
            let status = match chain.stabilized_at {
                Some(_) => Status::Ok,
                None => Status::Inconclusive(format!("chain not stable within e_max = {e_max}")),
            };
            Ok((to_value(&chain), status))
        }
        Command::Inclosure { poly, j, ambient } => {
            let m = in_frobenius_closure(
                &ctx.poly(poly)?,
                &ctx.ideal(j)?,
                &ctx.ideal(ambient)?,
                e_max,
            )?;
            let status = match m {
                ClosureMembership::Member(_) => Status::Ok,
                ClosureMembership::NonMemberUpTo { e_max } => {
                    Status::Inconclusive(format!("no witness up to e_max = {e_max}"))
                }
            };
            Ok((to_value(&m), status))
        }
        Command::Fedder { ideal } => ok(json!(fedder_is_fpure(&ctx.ideal(ideal)?)?)),
        Command::Hsl { poly } => {
            let chain = hsl_hypersurface(&ctx.poly(poly)?, e_max)?;
            let status = match chain.stabilized_at {
                Some(_) => Status::Ok,
                None => Status::Inconclusive(format!("chain not stable within e_max = {e_max}")),
            };
            Ok((
                json!({ "eta": chain.stabilized_at, "chain": chain }),
                status,
            ))
        }
        Command::Reduction { j, ambient } => {
            let rep = is_reduction(&ctx.ideal(j)?, &ctx.ideal(ambient)?, ctx.opts.s_max)?;
            let status = match rep.verdict() {
                Verdict::Pass => Status::Ok,
                _ => Status::Inconclusive(format!("no s <= {}", ctx.opts.s_max)),
            };
            Ok((to_value(&rep), status))
        }
        Command::Skoda { j, ambient } => {
            let rep = check_skoda(&ctx.ideal(j)?, &ctx.ideal(ambient)?, e_max)?;
            let status = match rep.verdict() {
                Verdict::Pass => Status::Ok,
                _ => Status::Inconclusive(format!(
                    "{} monomials without a witness up to e_max = {e_max}",
                    rep.undecided.len()
                )),
            };
            Ok((to_value(&rep), status))
        }
        Command::Cor24b { j, ambient } => {
            let rep = check_cor24b(&ctx.ideal(j)?, &ctx.ideal(ambient)?, e_max)?;
            Ok((to_value(&rep), bound_status(rep.holds())))
        }
        Command::Hwbound { ideal } => {
            let rep = check_hw_bound(&ctx.ideal(ideal)?)?;
            Ok((to_value(&rep), bound_status(rep.holds())))
        }
        Command::Hslbound { poly } => {
            let rep = check_hsl_bound(&ctx.poly(poly)?, e_max)?;
            Ok((to_value(&rep), bound_status(rep.holds())))
        }
        Command::Gamma { n, p } => ok(to_value(&gamma(*n, Prime::new(*p)?)?)),
        Command::Verify { suite, n, p } => {
            let name = match suite.parse::<SuiteName>()? {
                SuiteName::Remark33 { .. } if suite == "remark33" => SuiteName::Remark33 {
                    n: *n,
                    p: Prime::new(*p)?.get(),
                },
                other => other,
            };
            let rep = run_suite(name, e_max, ctx.opts.s_max);
            let bad: Vec<String> = rep
                .checks
                .iter()
                .filter(|c| c.verdict != Verdict::Pass)
                .map(|c| format!("{} ({})", c.name, c.verdict))
                .collect();
            let status = match rep.verdict() {
                Verdict::Pass => Status::Ok,
                Verdict::Fail => Status::Failed(bad.join(", ")),
                Verdict::Inconclusive => Status::Inconclusive(bad.join(", ")),
                Verdict::Error => Status::Error(bad.join(", ")),
            };
            Ok((to_value(&rep), status))
        }
    }
}

/// Runs a parsed command line and builds its report.
pub fn dispatch(cli: &Cli) -> CliReport {
    let start = Instant::now();
    if let Some(b) = cli.global.pair_budget {
        set_pair_budget(b);
    }
    let outcome = (|| {
        let session = match &cli.global.file {
            Some(path) => Some(load_session(path)?),
            None => None,
        };
        let ctx = Ctx {
            session,
            opts: &cli.global,
        };
        execute(&cli.command, &ctx)
    })();
    let (result, status) = match outcome {
        Ok(r) => r,
        Err(Error::Inconclusive(m)) => (Value::Null, Status::Inconclusive(m)),
        Err(e) => (Value::Null, Status::Error(e.to_string())),
    };
    CliReport {
        command: cli.command.name().to_string(),
        inputs: cli.command.inputs(),
        result,
        elapsed_ms: start.elapsed().as_millis() as u64,
        status,
    }
}

/// Parses `argv`, runs the command, prints the report and returns the exit
/// code. Usage errors exit with 2.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let report = dispatch(&cli);
    let text = if cli.global.json {
        report.to_json() + "\n"
    } else {
        report.to_text()
    };
    // a closed pipe downstream is not our failure
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
    if let Status::Error(m) = &report.status {
        eprintln!("fplab: {m}");
    }
    report.exit_code()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report(args: &[&str]) -> CliReport {
        let cli =
            Cli::try_parse_from(std::iter::once("fplab").chain(args.iter().copied())).unwrap();
        dispatch(&cli)
    }

    #[test]
    fn gamma_and_verify_need_no_session() {
        let r = report(&["gamma", "--n", "3", "--p", "2"]);
        assert_eq!(r.status, Status::Ok);
        assert_eq!(r.result, json!({ "num": 5, "den": 6 }));
        let r = report(&["verify", "remark33", "--n", "4"]);
        assert_eq!(r.exit_code(), 0, "{}", r.to_text());
        assert_eq!(r.result["suite"], "remark33(4,2)");
    }

    #[test]
    fn object_commands_need_a_session() {
        let r = report(&["mult", "I"]);
        assert_eq!(r.exit_code(), 2);
        assert!(matches!(r.status, Status::Error(ref m) if m.contains("-f")));
    }

    #[test]
    fn usage_errors() {
        assert!(Cli::try_parse_from(["fplab", "frobnicate"]).is_err());
        assert!(Cli::try_parse_from(["fplab", "mult", "I", "--bogus"]).is_err());
        assert!(Cli::try_parse_from(["fplab", "gb", "I", "--order", "revlex"]).is_err());
    }

    #[test]
    fn status_json_shape() {
        assert_eq!(serde_json::to_string(&Status::Ok).unwrap(), r#""ok""#);
        assert_eq!(
            serde_json::to_string(&Status::Error("x".into())).unwrap(),
            r#"{"error":"x"}"#
        );
        assert_eq!(
            serde_json::to_string(&Status::Inconclusive("y".into())).unwrap(),
            r#"{"inconclusive":"y"}"#
        );
    }

    #[test]
    fn text_rendering() {
        let r = CliReport {
            command: "mult".into(),
            inputs: vec!["I".into()],
            result: json!(7),
            elapsed_ms: 0,
            status: Status::Ok,
        };
        let t = r.to_text();
        assert!(t.contains("result    7\n"), "{t}");
        assert!(t.contains("status    ok\n"), "{t}");
    }
}
