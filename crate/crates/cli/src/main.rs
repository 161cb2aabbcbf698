mod config;
mod emit;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use qexpmap::expmap::{l_matrix, r_matrix_rep, t_matrix_closed};
use qexpmap::golden::{golden_diff, golden_text};
use qexpmap::ncrewrite::half_string;
use qexpmap::ncrewrite::render::RenderScalar;
use qexpmap::qalg_u::{gamma_rep, Label, Norm, Sign, UAlgebra};
use qexpmap::qgroup_a::AAlgebra;
use qexpmap::qscalar::{RadScalar, ScalarCtx};
use qexpmap::verify::{run_suite, summary_line, Suite, VerifyOptions};
use serde::Serialize;
use serde_json::json;

use config::{Config, Format, Params};

/// Exact computations in GL_{p,q}(2) and U_{p,q}(gl(2)): normal forms, T-, L- and R-matrices, verification.
#[derive(Parser)]
#[command(name = "qexpmap", version)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Numeric value of p, as r/s. Needs --q.
    #[arg(long, global = true)]
    p: Option<String>,
    /// Numeric value of q, as r/s. Alone it selects p = q.
    #[arg(long, global = true)]
    q: Option<String>,
    /// Term-count guard for normal ordering.
    #[arg(long, global = true, env = "QEXPMAP_GUARD")]
    guard: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Algebra {
    A,
    U,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GoldenAction {
    Record,
    Compare,
}

#[derive(Subcommand)]
enum Command {
    /// Normal form of an expression.
    NormalOrder {
        #[arg(long, value_enum, ignore_case = true, default_value_t = Algebra::A)]
        algebra: Algebra,
        expr: String,
    },
    /// The matrix T^(j;z) with entries in GL_{p,q}(2).
    Tmatrix {
        #[arg(long, allow_hyphen_values = true)]
        j: String,
        #[arg(long, allow_hyphen_values = true)]
        z: Option<String>,
        #[arg(long, default_value_t = Norm::Symmetric)]
        norm: Norm,
    },
    /// The matrix L^(±j) with entries in U_q(sl(2)).
    Lmatrix {
        #[arg(long, allow_hyphen_values = true)]
        sign: Sign,
        #[arg(long, allow_hyphen_values = true)]
        j: String,
        #[arg(long, default_value_t = Norm::Symmetric)]
        norm: Norm,
    },
    /// R^{(j1;z1)⊗(j2;z2)} as a numeric or symbolic matrix.
    Rmatrix {
        #[arg(long, allow_hyphen_values = true)]
        j1: String,
        #[arg(long, allow_hyphen_values = true)]
        z1: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        j2: String,
        #[arg(long, allow_hyphen_values = true)]
        z2: Option<String>,
        #[arg(long, default_value_t = Norm::Symmetric)]
        norm: Norm,
    },
    /// The representation matrices J+, J-, J0, Z of spin (j;z).
    Rep {
        #[arg(long, allow_hyphen_values = true)]
        j: String,
        #[arg(long, allow_hyphen_values = true)]
        z: Option<String>,
        #[arg(long, default_value_t = Norm::Symmetric)]
        norm: Norm,
    },
    /// Runs a verification suite and reports every identity checked.
    Verify {
        #[arg(long, default_value = "all")]
        suite: Suite,
        /// Restrict to one spin.
        #[arg(long, allow_hyphen_values = true)]
        j: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        z: Option<String>,
        /// Largest spin for the spin-dependent suites.
        #[arg(long, default_value = "3/2")]
        max_j: String,
        /// Word length for the confluence suite.
        #[arg(long)]
        max_len: Option<usize>,
        #[arg(long)]
        norm: Option<Norm>,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
        /// Random parameter points per sector for `specialize`.
        #[arg(long, default_value_t = 5)]
        points: usize,
        /// Also write the JSON report here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Records or compares the golden JSON file of the explicit low-spin matrices.
    Golden { action: GoldenAction, path: PathBuf },
}

#[derive(Debug)]
pub enum Failure {
    /// Exit 1: an identity or golden comparison failed.
    Check(String),
    /// Exit 2: bad input or missing file.
    Usage(String),
    /// Exit 3: the rewrite guard was exceeded.
    Guard(String),
}

impl From<qexpmap::Error> for Failure {
    fn from(e: qexpmap::Error) -> Self {
        match e {
            qexpmap::Error::GuardExceeded { .. } => Failure::Guard(e.to_string()),
            qexpmap::Error::Internal(_) => Failure::Check(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Check(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Guard(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Check(m) | Failure::Usage(m) | Failure::Guard(m) => m,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            if !out.is_empty() {
                print_out(&out);
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Check(m)) if m.is_empty() => ExitCode::from(1),
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn print_out(text: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn run(cli: Cli) -> Result<String, Failure> {
    let cfg = Config::new(cli.p.as_deref(), cli.q.as_deref(), cli.format, cli.guard)?;
    match cli.command {
        Command::Verify { suite, j, z, max_j, max_len, norm, seed, points, out } => {
            if !matches!(cfg.params, Params::Symbolic) {
                return Err(Failure::Usage("verify runs exactly; `--suite specialize` covers numeric points".into()));
            }
            let opts = VerifyOptions {
                max_j2: config::label(&max_j, None)?.j2,
                label: j.map(|j| config::label(&j, z.as_deref())).transpose()?,
                max_len,
                norm,
                guard: cfg.guard,
                seed,
                points,
            };
            verify(suite, &opts, cfg.format, out)
        }
        Command::Golden { action, path } => golden(action, &path),
        cmd => match cfg.params.clone() {
            Params::Symbolic => compute(ScalarCtx::<RadScalar>::exact(), &cmd, &cfg),
            Params::Numeric(p) => compute(ScalarCtx::<f64>::numeric(p), &cmd, &cfg),
        },
    }
}

fn u_algebra<S: RenderScalar>(ctx: &ScalarCtx<S>, cfg: &Config) -> Result<UAlgebra<S>, Failure> {
    if !cfg.one_param() {
        return Err(Failure::Usage("the U algebra is implemented for p = q only".into()));
    }
    Ok(UAlgebra::new(ctx.clone())?.with_guard(cfg.guard))
}

fn label_json(l: Label) -> (String, String) {
    (half_string(l.j2 as i32), half_string(l.z2))
}

fn compute<S: RenderScalar + Serialize>(ctx: ScalarCtx<S>, cmd: &Command, cfg: &Config) -> Result<String, Failure> {
    let f = cfg.format;
    let a = AAlgebra::new(ctx.clone())?.with_guard(cfg.guard);
    match cmd {
        Command::NormalOrder { algebra: Algebra::A, expr } => emit::poly(&a.parse(expr)?, &a.pres, f),
        Command::NormalOrder { algebra: Algebra::U, expr } => {
            let u = u_algebra(&ctx, cfg)?;
            emit::poly(&u.parse(expr)?, &u.pres, f)
        }
        Command::Tmatrix { j, z, norm } => {
            let l = config::label(j, z.as_deref())?;
            let t = t_matrix_closed(l, *norm, &ctx)?;
            let (j, z) = label_json(l);
            emit::poly_matrix(&t.entries, &a.pres, "T", json!({ "j": j, "z": z, "norm": norm }), f)
        }
        Command::Lmatrix { sign, j, norm } => {
            let u = u_algebra(&ctx, cfg)?;
            let l = config::label(j, None)?;
            let m = l_matrix(&u, &a, *sign, l.j2, *norm)?;
            let params = json!({ "sign": sign.to_string(), "j": half_string(l.j2 as i32), "norm": norm });
            emit::poly_matrix(&m.entries, &u.pres, "L", params, f)
        }
        Command::Rmatrix { j1, z1, j2, z2, norm } => {
            let l1 = config::label(j1, z1.as_deref())?;
            let l2 = config::label(j2, z2.as_deref())?;
            let r = r_matrix_rep(l1, l2, *norm, &ctx)?;
            let ((j1, z1), (j2, z2)) = (label_json(l1), label_json(l2));
            let head = json!({ "kind": "R", "params": { "j1": j1, "z1": z1, "j2": j2, "z2": z2, "norm": norm } });
            emit::scalar_matrices(&[("R", &r)], a.pres.sector(), head, f)
        }
        Command::Rep { j, z, norm } => {
            let l = config::label(j, z.as_deref())?;
            let rep = gamma_rep(l, *norm, &ctx)?;
            let (j, z) = label_json(l);
            let head = json!({ "j": j, "z": z, "norm": norm });
            let named = [("Jplus", &rep.jplus), ("Jminus", &rep.jminus), ("J0", &rep.j0), ("Z", &rep.z)];
            emit::scalar_matrices(&named, a.pres.sector(), head, f)
        }
        Command::Verify { .. } | Command::Golden { .. } => unreachable!("handled by run"),
    }
}

fn verify(suite: Suite, opts: &VerifyOptions, f: Format, out: Option<PathBuf>) -> Result<String, Failure> {
    let reports = run_suite(suite, opts)?;
    let pass = reports.iter().all(|r| r.pass);
    let doc = json!({ "suite": suite.name(), "pass": pass, "reports": reports });
    let text = serde_json::to_string_pretty(&doc).expect("reports serialize");
    if let Some(path) = out {
        std::fs::write(&path, format!("{text}\n")).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    }
    let body = match f {
        Format::Json => text,
        _ => {
            let mut lines: Vec<String> = reports.iter().map(summary_line).collect();
            let failed = reports.iter().filter(|r| !r.pass).count();
            lines.push(format!("{} of {} checks passed", reports.len() - failed, reports.len()));
            lines.join("\n")
        }
    };
    if pass {
        Ok(body)
    } else {
        print_out(&body);
        Err(Failure::Check(String::new()))
    }
}

fn golden(action: GoldenAction, path: &PathBuf) -> Result<String, Failure> {
    match action {
        GoldenAction::Record => {
            std::fs::write(path, golden_text()?).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            Ok(format!("recorded {}", path.display()))
        }
        GoldenAction::Compare => {
            let recorded =
                std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            let diff = golden_diff(&recorded)?;
            if diff.is_empty() {
                Ok(format!("{} matches", path.display()))
            } else {
                Err(Failure::Check(format!("{} differs:\n  {}", path.display(), diff.join("\n  "))))
            }
        }
    }
}
