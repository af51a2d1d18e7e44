use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hqarch_cli::{run, Verb};

#[derive(Parser)]
#[command(name = "hqarch", version, about = "Resource estimates and floorplans for hybrid-qubit registers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Device catalog, communication times, density, QEC threshold and overhead tables.
    Tables(Common),
    /// Transfer time against inter-dot distance.
    Sweep(Common),
    /// Step-by-step SWAP-chain traces.
    Simulate(Common),
    /// SVG rendering and design-rule report of a floorplan.
    Layout(Common),
}

#[derive(Args)]
struct Common {
    /// JSON run configuration; built-in defaults when omitted.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Output directory, overriding `outputs.dir`.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Turn warnings (design-rule violations, skipped points) into failures.
    #[arg(long)]
    strict: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (verb, args) = match cli.command {
        Command::Tables(a) => (Verb::Tables, a),
        Command::Sweep(a) => (Verb::Sweep, a),
        Command::Simulate(a) => (Verb::Simulate, a),
        Command::Layout(a) => (Verb::Layout, a),
    };
    match run(verb, args.config.as_deref(), args.out.as_deref(), args.strict) {
        Ok(report) => {
            for line in &report.lines {
                println!("{line}");
            }
            for f in &report.files {
                println!("wrote {}", f.display());
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
