//! Command-line front end: build the exceptional superalgebras, run the
//! structural verifications, and reproduce the per-orbit result tables.

use clap::{Parser, Subcommand, ValueEnum};
use std::process::ExitCode;
use superz_core::error::Error;
use superz_core::report::{
    analyze_all, analyze_case, reports_to_json, reports_to_markdown, verify_algebra,
    AlgebraContext, CaseReport,
};
use superz_core::scalar::{Rational, Scalar};
use superz_core::AlgebraId;

#[derive(Parser)]
#[command(
    name = "superz",
    about = "Centralizers and centres of centralizers of nilpotent elements \
             in the exceptional Lie superalgebras D(2,1;a), G(3), F(4)",
    after_help = "Exit status: 0 all checks pass, 1 verification failure, 2 usage error."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Md,
}

#[derive(Subcommand)]
enum Command {
    /// Structural verification: graded axioms, root data, pairing-table
    /// antisymmetry, the Clifford/spin-table cross-check and the sl(2)
    /// relations of every cataloged triple.
    Verify {
        /// d21, g3, f4 or all
        algebra: String,
        /// Concrete value for alpha (D(2,1;alpha) only), e.g. 2 or -1/2
        #[arg(long)]
        alpha: Option<String>,
    },
    /// Full pipeline for one orbit case.
    Case {
        /// d21, g3 or f4
        algebra: String,
        /// Case name as in the catalog, e.g. "E1+E2", "E+x2", "e(7)"
        name: String,
        #[arg(long, value_enum, default_value = "md")]
        format: Format,
        #[arg(long)]
        alpha: Option<String>,
    },
    /// Reproduce the whole per-orbit results table.
    Table {
        /// d21, g3 or f4
        algebra: String,
        #[arg(long, value_enum, default_value = "md")]
        format: Format,
        /// Write the output to a file instead of stdout
        #[arg(long)]
        out: Option<std::path::PathBuf>,
        #[arg(long)]
        alpha: Option<String>,
        /// Analyze cases one at a time (deterministic debugging order)
        #[arg(long)]
        serial: bool,
    },
}

fn parse_alpha(cli_value: Option<String>) -> Result<Option<Rational>, Error> {
    let source = cli_value.or_else(|| std::env::var("SUPERZ_ALPHA").ok());
    match source {
        None => Ok(None),
        Some(text) => {
            let scalar = Scalar::parse(&text)?;
            let r = scalar
                .as_rational()
                .ok_or_else(|| Error::ParseScalar(format!("{text}: alpha must be rational")))?;
            Ok(Some(r))
        }
    }
}

fn context(algebra: &str, alpha: Option<String>) -> Result<AlgebraContext, Error> {
    let id = AlgebraId::parse(algebra)?;
    let alpha = parse_alpha(alpha)?;
    if id != AlgebraId::D21 && alpha.is_some() {
        eprintln!(
            "note: --alpha only affects D(2,1;alpha); ignored for {}",
            id.name()
        );
    }
    AlgebraContext::new(id, if id == AlgebraId::D21 { alpha } else { None })
}

fn usage_error(e: &Error) -> bool {
    matches!(
        e,
        Error::UnknownAlgebra(_)
            | Error::UnknownCase { .. }
            | Error::ParseScalar(_)
            | Error::NonSimpleParameter(_)
    )
}

fn run() -> Result<bool, Error> {
    match Cli::parse().command {
        Command::Verify { algebra, alpha } => {
            let ids: Vec<&str> = if algebra == "all" {
                vec!["d21", "g3", "f4"]
            } else {
                vec![algebra.as_str()]
            };
            let mut all_ok = true;
            for id in ids {
                let ctx = context(id, alpha.clone())?;
                println!("{}:", ctx.id.name());
                for check in verify_algebra(&ctx)? {
                    println!(
                        "  [{}] {} - {}",
                        if check.passed { "ok" } else { "FAIL" },
                        check.name,
                        check.detail
                    );
                    all_ok &= check.passed;
                }
            }
            Ok(all_ok)
        }
        Command::Case {
            algebra,
            name,
            format,
            alpha,
        } => {
            let ctx = context(&algebra, alpha)?;
            let case = superz_core::orbits::catalog_case(ctx.id, &name)?;
            let report = analyze_case(&ctx, &case)?;
            let ok = report.all_passed();
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&report.to_json()).expect("serializable")
                ),
                Format::Md => print!("{}", case_markdown(&report)),
            }
            Ok(ok)
        }
        Command::Table {
            algebra,
            format,
            out,
            alpha,
            serial,
        } => {
            let ctx = context(&algebra, alpha)?;
            let reports = analyze_all(&ctx, serial)?;
            let ok = reports.iter().all(|r| r.all_passed());
            let text = match format {
                Format::Json => serde_json::to_string_pretty(&reports_to_json(&ctx, &reports))
                    .expect("serializable"),
                Format::Md => reports_to_markdown(&ctx, &reports),
            };
            match out {
                Some(path) => std::fs::write(path, text)?,
                None => println!("{text}"),
            }
            Ok(ok)
        }
    }
}

fn case_markdown(r: &CaseReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("# {} / {}\n\n", r.algebra, r.case));
    out.push_str(&format!(
        "dim g^e = {}   dim z(g^e) = {}   dim (z)^Ge = {}\n\n",
        r.dim_ge, r.dim_z, r.dim_fixed_z
    ));
    out.push_str(&format!(
        "z(g^e) = <{}>\n(z)^Ge = <{}>\n\n",
        r.z_basis.join(", "),
        r.fixed_z_basis.join(", ")
    ));
    out.push_str("graded dims of g^e: ");
    out.push_str(
        &r.graded_dims
            .iter()
            .map(|(j, d)| format!("{j}:{d}"))
            .collect::<Vec<_>>()
            .join(" "),
    );
    out.push_str("\n\nlabelled Dynkin diagrams:\n");
    for d in &r.diagrams {
        out.push_str(&format!(
            "  {} labels ({})\n    {}\n",
            d.figure,
            d.labels
                .iter()
                .map(|l| l.to_string())
                .collect::<Vec<_>>()
                .join(","),
            d.text.replace('\n', "\n    ")
        ));
    }
    if !r.osp_modules.is_empty() {
        out.push_str("\nosp(1|2) modules: ");
        out.push_str(
            &r.osp_modules
                .iter()
                .map(|(j, ws)| format!("g^e({j}) = {ws:?}"))
                .collect::<Vec<_>>()
                .join(", "),
        );
        out.push('\n');
    }
    out.push_str("\nchecks:\n");
    for c in &r.checks {
        out.push_str(&format!(
            "  [{}] {} - {}\n",
            if c.passed { "ok" } else { "FAIL" },
            c.name,
            c.detail
        ));
    }
    out.push_str("\ntheorems:\n");
    for t in &r.theorems {
        let status = if !t.applicable {
            "n/a"
        } else if t.passed {
            "ok"
        } else {
            "FAIL"
        };
        out.push_str(&format!(
            "  [{}] {} ({})\n",
            status,
            t.theorem,
            t.details
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect::<Vec<_>>()
                .join(", ")
        ));
    }
    out
}

fn main() -> ExitCode {
    match run() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("verification failure");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if usage_error(&e) { 2 } else { 1 })
        }
    }
}
