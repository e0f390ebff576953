use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use g2core::g2lie::SubalgebraName;
use g2core::report::{run_all, show_bianchi, show_subalgebra, show_torsion};

#[derive(Parser)]
#[command(name = "g2verify", version, about = "Exact verification of homogeneous G2 structures with characteristic torsion")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the claim registry.
    Verify {
        /// Only run claims whose id starts with this prefix.
        #[arg(long)]
        filter: Option<String>,
        /// Worker threads (0 picks the number of cores).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generators and invariants of a catalog subalgebra.
    ShowSubalgebra { name: SubalgebraName },
    /// Admissible torsion of a catalog subalgebra.
    ShowTorsion { name: SubalgebraName },
    /// Curvature ansatz and Bianchi branches of a catalog subalgebra.
    ShowBianchi { name: SubalgebraName },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let shown = match cli.command {
        Command::Verify { filter, jobs, format, out } => {
            let report = run_all(filter.as_deref(), jobs).map_err(|e| e.to_string())?;
            let body = match format {
                Format::Json => report.to_json() + "\n",
                Format::Csv => report.to_csv().map_err(|e| e.to_string())?,
                Format::Text => report.to_text(),
            };
            match out {
                Some(path) => std::fs::write(&path, body).map_err(|e| format!("{}: {e}", path.display()))?,
                None => print!("{body}"),
            }
            let s = report.summary();
            if s.errors > 0 {
                return Ok(ExitCode::from(2));
            }
            return Ok(if s.refuted > 0 { ExitCode::from(1) } else { ExitCode::SUCCESS });
        }
        Command::ShowSubalgebra { name } => show_subalgebra(name),
        Command::ShowTorsion { name } => show_torsion(name),
        Command::ShowBianchi { name } => show_bianchi(name),
    };
    let value = shown.map_err(|e| e.to_string())?;
    println!("{}", serde_json::to_string_pretty(&value).map_err(|e| e.to_string())?);
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
