//! `schur`: command-line front end over schur-core.
//!
//! Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 resource limit.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use schur_core::basis::{basis_size, enumerate_basis};
use schur_core::centre::{centre_basis, centre_dimension_with, primitive_idempotents};
use schur_core::oracle::{OracleConfig, MAX_TENSOR_DIM_ENV};
use schur_core::report::{centre_element_to_json, element_to_json, euler_class_to_json, render};
use schur_core::symgrp::{character_table, partitions_of};
use schur_core::verify::{run_suite, Status, VerifyConfig};
use schur_core::{dot, euler_classes, multiply, multiply_via_oracle, BasisMatrix, Error, Exec, ProductTable, SchurElement};

const MAX_N: usize = 6;
const MAX_D: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Parser)]
#[command(name = "schur", version, about = "Exact computations in the Schur algebra S(n,d)")]
struct Cli {
    /// Dimension of the underlying vector space.
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Tensor degree.
    #[arg(long, global = true)]
    d: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    output: Output,
    /// Print each Euler class and its product graph (multiply).
    #[arg(long, global = true)]
    show_euler: bool,
    /// Largest n^d for oracle-backed work.
    #[arg(long, global = true, env = MAX_TENSOR_DIM_ENV)]
    max_tensor_dim: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Dimension of S(n,d) and of its centre.
    Dim,
    /// List the basis matrices M(n,d).
    Basis,
    /// Product of two basis elements given as matrix literals, e.g. "2,0;0,1".
    Multiply {
        left: BasisMatrix,
        right: BasisMatrix,
        /// Also compute the product by dense operator composition and compare.
        #[arg(long)]
        oracle: bool,
    },
    /// All Z_λ expansions.
    Centre,
    /// All primitive central idempotents ε_λ with their checks.
    Idempotents,
    /// Character table of S_d.
    CharacterTable,
    /// Run the invariant suite.
    Verify,
    /// DOT rendering of the multigraph of a matrix literal.
    Graph { matrix: BasisMatrix },
}

enum Failure {
    Usage(String),
    Resource(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Resource { .. } => Failure::Resource(e.to_string()),
            Error::InvalidInput(_) | Error::Parse(_) => Failure::Usage(e.to_string()),
        }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

struct Ctx {
    n: Option<usize>,
    d: Option<usize>,
    output: Output,
    show_euler: bool,
    oracle: OracleConfig,
}

impl Ctx {
    fn sizes(&self) -> Result<(usize, usize), Failure> {
        let n = self.n.ok_or_else(|| usage("--n is required"))?;
        let d = self.d.ok_or_else(|| usage("--d is required"))?;
        if n == 0 {
            return Err(usage("--n must be positive"));
        }
        guard(n, d)?;
        Ok((n, d))
    }

    fn degree(&self) -> Result<usize, Failure> {
        let d = self.d.ok_or_else(|| usage("--d is required"))?;
        if d > MAX_D {
            return Err(Failure::Resource(format!("d = {d} exceeds {MAX_D}")));
        }
        Ok(d)
    }

    fn no_dot(&self) -> Result<(), Failure> {
        if self.output == Output::Dot {
            return Err(usage("--output dot is only available for graph and multiply"));
        }
        Ok(())
    }
}

fn guard(n: usize, d: usize) -> Result<(), Failure> {
    if n > MAX_N || d > MAX_D {
        return Err(Failure::Resource(format!("(n, d) = ({n}, {d}) exceeds n ≤ {MAX_N}, d ≤ {MAX_D}")));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut oracle = OracleConfig::default();
    if let Some(m) = cli.max_tensor_dim {
        oracle.max_tensor_dim = m;
    }
    let ctx = Ctx { n: cli.n, d: cli.d, output: cli.output, show_euler: cli.show_euler, oracle };
    match run(&ctx, &cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Verification(out)) => {
            print!("{out}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Resource(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn json_out(v: &Value) -> String {
    let mut s = render(v);
    s.push('\n');
    s
}

fn run(ctx: &Ctx, command: &Command) -> Result<String, Failure> {
    match command {
        Command::Dim => dim(ctx),
        Command::Basis => basis(ctx),
        Command::Multiply { left, right, oracle } => product(ctx, left, right, *oracle),
        Command::Centre => centre(ctx),
        Command::Idempotents => idempotents(ctx),
        Command::CharacterTable => characters(ctx),
        Command::Verify => verify(ctx),
        Command::Graph { matrix } => graph(ctx, matrix),
    }
}

fn dim(ctx: &Ctx) -> Result<String, Failure> {
    ctx.no_dot()?;
    let n = ctx.n.ok_or_else(|| usage("--n is required"))?;
    let d = ctx.d.ok_or_else(|| usage("--d is required"))?;
    if n == 0 {
        return Err(usage("--n must be positive"));
    }
    let size = basis_size(n, d);
    let centre = (n <= MAX_N && d <= MAX_D).then(|| centre_dimension_with(n, d, Exec::default()));
    Ok(match ctx.output {
        Output::Json => json_out(&json!({ "n": n, "d": d, "dimension": size.to_string(), "centre_dimension": centre })),
        _ => {
            let mut s = format!("{size}\n");
            if let Some(c) = centre {
                let _ = writeln!(s, "centre: {c}");
            }
            s
        }
    })
}

fn basis(ctx: &Ctx) -> Result<String, Failure> {
    ctx.no_dot()?;
    let (n, d) = ctx.sizes()?;
    let basis = enumerate_basis(n, d);
    Ok(match ctx.output {
        Output::Json => {
            let list: Vec<String> = basis.iter().map(ToString::to_string).collect();
            json_out(&json!({ "n": n, "d": d, "basis": list }))
        }
        _ => basis.iter().map(|m| format!("{m}\n")).collect(),
    })
}

fn product(ctx: &Ctx, left: &BasisMatrix, right: &BasisMatrix, oracle: bool) -> Result<String, Failure> {
    if left.n() != right.n() || left.degree() != right.degree() {
        return Err(usage(format!("{left} and {right} lie in different algebras")));
    }
    let (n, d) = (left.n(), left.degree());
    if ctx.n.is_some_and(|x| x != n) || ctx.d.is_some_and(|x| x != d) {
        return Err(usage(format!("operands lie in S({n},{d}), not the requested --n/--d")));
    }
    guard(n, d)?;
    let x = SchurElement::basis(left);
    let y = SchurElement::basis(right);
    let p = multiply(&x, &y)?;
    let classes = euler_classes(left, right)?;
    let via_oracle = if oracle { Some(multiply_via_oracle(&x, &y, &ctx.oracle)?) } else { None };
    if let Some(o) = &via_oracle {
        if o != &p {
            return Err(Failure::Verification(format!("MISMATCH: graph product {p}, operator product {o}\n")));
        }
    }
    Ok(match ctx.output {
        Output::Json => {
            let mut v = json!({ "left": left.to_string(), "right": right.to_string(), "product": element_to_json(&p) });
            if ctx.show_euler {
                v["euler_classes"] = Value::Array(classes.iter().map(euler_class_to_json).collect());
            }
            if via_oracle.is_some() {
                v["oracle_agrees"] = Value::Bool(true);
            }
            json_out(&v)
        }
        Output::Dot => classes.iter().map(dot::euler_class).collect(),
        Output::Text => {
            let mut s = format!("{p}\n");
            if ctx.show_euler {
                for (k, c) in classes.iter().enumerate() {
                    let entries: Vec<String> = c.nonzero().map(|(k, i, j, v)| format!("a[{k}][{i}][{j}]={v}")).collect();
                    let _ = writeln!(
                        s,
                        "class {}: {} -> ξ[{}] x{}",
                        k + 1,
                        entries.join(" "),
                        c.product_graph(),
                        c.multiplicity()
                    );
                }
            }
            if via_oracle.is_some() {
                s.push_str("oracle: agrees\n");
            }
            s
        }
    })
}

fn centre(ctx: &Ctx) -> Result<String, Failure> {
    ctx.no_dot()?;
    let (n, d) = ctx.sizes()?;
    let zs = centre_basis(n, d, Exec::default());
    Ok(match ctx.output {
        Output::Json => {
            let list: Vec<Value> = zs.iter().map(centre_element_to_json).collect();
            json_out(&json!({ "n": n, "d": d, "centre_basis": list }))
        }
        _ => zs.iter().map(|z| format!("{z}\n")).collect(),
    })
}

fn idempotents(ctx: &Ctx) -> Result<String, Failure> {
    ctx.no_dot()?;
    let (n, d) = ctx.sizes()?;
    let eps = primitive_idempotents(n, d, Exec::default());
    let table = ProductTable::build(n, d, Exec::default());
    let id = schur_core::identity_element(n, d);
    let mut idempotent = true;
    let mut orthogonal = true;
    let mut sum = SchurElement::zero(n, d);
    for e in &eps {
        sum = sum.add(&e.element)?;
        for f in &eps {
            let p = table.multiply(&e.element, &f.element)?;
            if e.partition == f.partition {
                idempotent &= p == e.element;
            } else {
                orthogonal &= p.is_zero();
            }
        }
    }
    let complete = sum == id;
    let vanishing = eps.iter().all(|e| (e.partition.len() > n) == e.element.is_zero());
    let ok = idempotent && orthogonal && complete && vanishing;
    let out = match ctx.output {
        Output::Json => {
            let list: Vec<Value> = eps.iter().map(centre_element_to_json).collect();
            json_out(&json!({
                "n": n,
                "d": d,
                "idempotents": list,
                "checks": {
                    "idempotent": idempotent,
                    "orthogonal": orthogonal,
                    "sum_is_identity": complete,
                    "zero_iff_more_than_n_parts": vanishing,
                },
            }))
        }
        _ => {
            let mut s: String = eps.iter().map(|e| format!("{e}\n")).collect();
            let flag = |b: bool| if b { "ok" } else { "FAILED" };
            let _ = writeln!(s, "idempotent: {}", flag(idempotent));
            let _ = writeln!(s, "orthogonal: {}", flag(orthogonal));
            let _ = writeln!(s, "sum is identity: {}", flag(complete));
            let _ = writeln!(s, "zero iff more than {n} parts: {}", flag(vanishing));
            s
        }
    };
    if ok {
        Ok(out)
    } else {
        Err(Failure::Verification(out))
    }
}

fn characters(ctx: &Ctx) -> Result<String, Failure> {
    ctx.no_dot()?;
    let d = ctx.degree()?;
    let parts = partitions_of(d);
    let table = character_table(d);
    Ok(match ctx.output {
        Output::Json => {
            let labels: Vec<String> = parts.iter().map(ToString::to_string).collect();
            json_out(&json!({ "d": d, "partitions": labels, "table": table }))
        }
        _ => {
            let width = parts.iter().map(|p| p.to_string().len()).max().unwrap_or(1).max(3);
            let mut s = format!("{:>width$} |", "");
            for mu in &parts {
                let _ = write!(s, " {:>width$}", mu.to_string());
            }
            s.push('\n');
            for (lambda, row) in parts.iter().zip(&table) {
                let _ = write!(s, "{:>width$} |", lambda.to_string());
                for v in row {
                    let _ = write!(s, " {v:>width$}");
                }
                s.push('\n');
            }
            s
        }
    })
}

fn verify(ctx: &Ctx) -> Result<String, Failure> {
    ctx.no_dot()?;
    let (n, d) = ctx.sizes()?;
    ctx.oracle.check(n, d)?;
    let cfg = VerifyConfig { oracle: ctx.oracle, ..VerifyConfig::default() };
    let report = run_suite(n, d, &cfg);
    let out = match ctx.output {
        Output::Json => json_out(&report.to_json()),
        _ => {
            let mut s = String::new();
            for c in &report.checks {
                let _ = writeln!(s, "[{}] {} ({} ms): {}", c.status.as_str(), c.name, c.millis, c.detail);
            }
            let failed = report.checks.iter().filter(|c| c.status == Status::Fail).count();
            let _ = writeln!(
                s,
                "S({n},{d}): {}",
                if failed == 0 { "all checks passed".to_string() } else { format!("{failed} checks FAILED") }
            );
            s
        }
    };
    if report.passed() {
        Ok(out)
    } else {
        Err(Failure::Verification(out))
    }
}

fn graph(ctx: &Ctx, m: &BasisMatrix) -> Result<String, Failure> {
    guard(m.n(), m.degree())?;
    let rendered = dot::multigraph(m);
    Ok(match ctx.output {
        Output::Json => json_out(&json!({ "matrix": m.to_string(), "dot": rendered })),
        _ => rendered,
    })
}
