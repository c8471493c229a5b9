use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use nilherm_cli::{parse_equations, parse_metric, scan_region, verify, Axis};
use nilherm_core::catalog::parse_shorthand;
use nilherm_core::hermitian::{is_balanced, is_kahler, is_skt, HermitianMetric};
use nilherm_core::lck::solve_lck;
use nilherm_core::{ComplexStructure, JClass, LeviCivita, LieAlgebra, Scalar};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "nilherm", version, about = "six dimensional nilmanifold Hermitian survey")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Coerce parsed scalars to the approximate backend with this
    /// tolerance.
    #[arg(long, global = true)]
    eps: Option<f64>,
    /// Force exact arithmetic (rational grid nodes in scans).
    #[arg(long, global = true)]
    exact: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Jacobi identity of structure equations or shorthand.
    CheckJacobi { input: String },
    /// Classify a real algebra given in dual shorthand.
    ClassifyAlgebra { shorthand: String },
    /// Classify a complex structure given by its equations.
    ClassifyComplex { equations: String },
    /// Metric predicate report for an (equations, metric) pair.
    HermitianCheck {
        #[arg(long)]
        equations: String,
        #[arg(long)]
        metric: String,
    },
    /// Scan a (p, q, y) parameter grid and emit CSV.
    ScanRegion(ScanArgs),
    /// Run the verification harness.
    VerifyPaper { claims: Vec<String> },
}

#[derive(Args)]
struct ScanArgs {
    #[arg(long)]
    rho: u8,
    #[arg(long, default_value_t = -2.0)]
    p_min: f64,
    #[arg(long, default_value_t = 2.0)]
    p_max: f64,
    #[arg(long, default_value_t = 41)]
    p_steps: usize,
    #[arg(long, default_value_t = 0.0)]
    q_min: f64,
    #[arg(long, default_value_t = 0.0)]
    q_max: f64,
    #[arg(long, default_value_t = 1)]
    q_steps: usize,
    #[arg(long, default_value_t = -2.0)]
    y_min: f64,
    #[arg(long, default_value_t = 2.0)]
    y_max: f64,
    #[arg(long, default_value_t = 41)]
    y_steps: usize,
    /// Write the CSV here instead of stdout.
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, String> {
    match &cli.command {
        Command::CheckJacobi { input } => check_jacobi(cli, input),
        Command::ClassifyAlgebra { shorthand } => classify_algebra(cli, shorthand),
        Command::ClassifyComplex { equations } => classify_complex(cli, equations),
        Command::HermitianCheck { equations, metric } => hermitian_check(cli, equations, metric),
        Command::ScanRegion(args) => scan(cli, args),
        Command::VerifyPaper { claims } => verify_cmd(cli, claims),
    }
}

fn load_equations(cli: &Cli, input: &str) -> Result<nilherm_core::StructureEquations, String> {
    let eqs = parse_equations(input).map_err(|e| e.to_string())?;
    Ok(match cli.eps {
        Some(eps) => eqs.to_approx(eps),
        None => eqs,
    })
}

fn check_jacobi(cli: &Cli, input: &str) -> Result<ExitCode, String> {
    let holds = if input.trim_start().starts_with('(') {
        let dalpha = parse_shorthand(input).map_err(|e| e.to_string())?;
        LieAlgebra::from_differentials(dalpha).is_ok()
    } else {
        load_equations(cli, input)?.jacobi_holds()
    };
    match cli.format {
        Format::Json => println!("{}", json!({ "jacobi": holds })),
        _ => println!("jacobi: {holds}"),
    }
    Ok(if holds { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn classify_algebra(cli: &Cli, shorthand: &str) -> Result<ExitCode, String> {
    let lie = LieAlgebra::from_shorthand(shorthand).map_err(|e| e.to_string())?;
    let class = lie.classify_by_fingerprint().map_err(|e| e.to_string())?;
    let profile = lie.profile();
    match cli.format {
        Format::Json => println!(
            "{}",
            json!({
                "algebra": class.unique().map(|t| t.name()),
                "candidates": class.candidates().iter().map(|t| t.name()).collect::<Vec<_>>(),
                "nilpotent": profile.nilpotent,
                "step": profile.step,
                "center_dim": profile.center_dim,
                "b1": profile.b1,
                "b2": profile.b2,
            })
        ),
        _ => println!("algebra: {class}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn classify_complex(cli: &Cli, equations: &str) -> Result<ExitCode, String> {
    let eqs = load_equations(cli, equations)?;
    let j = ComplexStructure::new(eqs.clone()).map_err(|e| e.to_string())?;
    let (kind, abelian, parallelizable) = match j.classify() {
        JClass::Nonnilpotent => ("nonnilpotent", false, false),
        JClass::Nilpotent {
            abelian,
            parallelizable,
        } => ("nilpotent", abelian, parallelizable),
    };
    let algebra = LieAlgebra::from_mu(&eqs)
        .map_err(|e| e.to_string())
        .and_then(|l| l.classify_by_fingerprint().map_err(|e| e.to_string()));
    let algebra_name = match &algebra {
        Ok(class) => class.to_string(),
        Err(_) => "?".to_string(),
    };
    match cli.format {
        Format::Json => {
            let mut coeffs: BTreeMap<String, BTreeMap<String, String>> = BTreeMap::new();
            for jj in 1..=eqs.dimension() {
                let mut terms = BTreeMap::new();
                for (w, c) in eqs.mu(jj).terms() {
                    terms.insert(w.to_string(), c.to_string());
                }
                coeffs.insert(format!("dw{jj}"), terms);
            }
            println!(
                "{}",
                json!({
                    "type": kind,
                    "coeffs": coeffs,
                    "algebra": algebra_name,
                    "abelian": abelian,
                    "parallelizable": parallelizable,
                })
            );
        }
        _ => {
            println!("type: {kind}");
            println!("algebra: {algebra_name}");
            println!("abelian: {abelian}");
            println!("parallelizable: {parallelizable}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn approx_metric(g: &HermitianMetric, eps: f64) -> HermitianMetric {
    let cv = |s: Scalar| s.to_approx(eps);
    if g.dimension() == 2 {
        HermitianMetric::new2(cv(g.diag(1).clone()), cv(g.diag(2).clone()), cv(g.off(1, 2)))
            .expect("shape preserved")
    } else {
        HermitianMetric::new3(
            cv(g.diag(1).clone()),
            cv(g.diag(2).clone()),
            cv(g.diag(3).clone()),
            cv(g.off(1, 2)),
            cv(g.off(2, 3)),
            cv(g.off(1, 3)),
        )
        .expect("shape preserved")
    }
}

fn hermitian_check(cli: &Cli, equations: &str, metric: &str) -> Result<ExitCode, String> {
    let eqs = load_equations(cli, equations)?;
    let j = ComplexStructure::new(eqs).map_err(|e| e.to_string())?;
    let mut g = parse_metric(metric).map_err(|e| e.to_string())?;
    if let Some(eps) = cli.eps {
        g = approx_metric(&g, eps);
    }
    if g.dimension() != j.dimension() {
        return Err(format!(
            "metric dimension {} does not match equations dimension {}",
            g.dimension(),
            j.dimension()
        ));
    }
    let positive = g.is_positive_definite();
    let report: Value;
    let mut text = Vec::new();
    if !positive {
        report = json!({
            "positive": false, "kahler": Value::Null, "skt": Value::Null,
            "balanced": Value::Null, "lck": Value::Null,
        });
        text.push("positive: false".to_string());
    } else {
        let kahler = is_kahler(&j, &g).map_err(|e| e.to_string())?;
        let skt = is_skt(&j, &g).map_err(|e| e.to_string())?;
        let balanced = is_balanced(&j, &g).map_err(|e| e.to_string())?;
        let lck = solve_lck(&j, &g).map_err(|e| e.to_string())?;
        let lck_json = match &lck {
            None => Value::Null,
            Some(sol) => {
                let theta_r = nilherm_core::complex_to_real(&sol.theta);
                let parallel = LeviCivita::new(&j, &g)
                    .map_err(|e| e.to_string())?
                    .is_parallel_one_form(&theta_r);
                let terms: Vec<String> = sol
                    .theta
                    .terms()
                    .map(|(w, c)| format!("{c}*{w}"))
                    .collect();
                json!({ "theta": terms, "parallel": parallel })
            }
        };
        report = json!({
            "positive": true, "kahler": kahler, "skt": skt,
            "balanced": balanced, "lck": lck_json,
        });
        text.push("positive: true".to_string());
        text.push(format!("kahler: {kahler}"));
        text.push(format!("skt: {skt}"));
        text.push(format!("balanced: {balanced}"));
        match lck {
            None => text.push("lck: none".to_string()),
            Some(sol) => text.push(format!("lck: theta = {}", sol.theta)),
        }
    }
    match cli.format {
        Format::Json => println!("{report}"),
        _ => {
            for line in text {
                println!("{line}");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn scan(cli: &Cli, args: &ScanArgs) -> Result<ExitCode, String> {
    if args.rho > 1 {
        return Err("--rho must be 0 or 1".to_string());
    }
    let axis = |min, max, steps| Axis { min, max, steps };
    let csv = scan_region(
        args.rho,
        &axis(args.p_min, args.p_max, args.p_steps),
        &axis(args.q_min, args.q_max, args.q_steps),
        &axis(args.y_min, args.y_max, args.y_steps),
        cli.exact,
    );
    match &args.out {
        Some(path) => std::fs::write(path, csv).map_err(|e| e.to_string())?,
        None => print!("{csv}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn verify_cmd(cli: &Cli, claims: &[String]) -> Result<ExitCode, String> {
    let report = verify(claims)?;
    match cli.format {
        Format::Json => {
            let items: Vec<Value> = report
                .results
                .iter()
                .map(|r| {
                    json!({
                        "id": r.id,
                        "summary": r.summary,
                        "passed": r.passed,
                        "detail": r.detail,
                    })
                })
                .collect();
            println!("{}", json!({ "claims": items, "all_passed": report.all_passed() }));
        }
        _ => {
            for r in &report.results {
                let status = if r.passed { "pass" } else { "FAIL" };
                println!("{}: {} - {}", r.id, status, r.detail);
            }
        }
    }
    Ok(if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
