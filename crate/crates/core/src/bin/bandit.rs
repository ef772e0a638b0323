use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use ulmc_ts::experiments::{preset, read_csv, run_scenario_with_threads, write_csv, ScenarioConfig};
use ulmc_ts::{Error, Result};

#[derive(Parser)]
#[command(name = "bandit", version, about = "Langevin Thompson sampling regret experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one scenario from a TOML config file.
    Run {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Worker threads (results do not depend on this).
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Run a built-in preset.
    Sweep {
        #[arg(long, value_parser = ["fig1a", "fig1b", "fig1c", "fig1d", "fig1e", "fig1f"])]
        preset: String,
        #[arg(long)]
        out: PathBuf,
        /// Use the full trajectory count and the largest dimensions.
        #[arg(long)]
        full: bool,
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Summarise every curve CSV in a directory.
    Report {
        #[arg(long = "in")]
        input: PathBuf,
    },
}

fn threads_or_default(threads: Option<usize>) -> usize {
    threads.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

fn run_one(name: &str, config: &ScenarioConfig, out: &Path, threads: usize) -> Result<()> {
    std::fs::create_dir_all(out).map_err(|e| Error::Io { path: out.into(), source: e })?;
    let toml_path = out.join(format!("{name}.toml"));
    std::fs::write(&toml_path, config.to_toml_string()?).map_err(|e| Error::Io { path: toml_path, source: e })?;
    let output = run_scenario_with_threads(config, threads)?;
    write_csv(&output.curves, &out.join(format!("{name}.csv")))?;
    for runs in &output.runs {
        let div: usize = runs.divergences.iter().sum();
        if div > 0 {
            eprintln!("{name}: {}: {div} chain restarts after divergence", runs.label);
        }
    }
    eprintln!("{name}: wrote {}", out.join(format!("{name}.csv")).display());
    Ok(())
}

fn report(dir: &Path) -> Result<()> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|e| Error::Io { path: dir.into(), source: e })?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "csv"))
        .collect();
    files.sort();
    if files.is_empty() {
        return Err(Error::InvalidInput(format!("no CSV files in {}", dir.display())));
    }
    println!("{:<16} {:<24} {:>7} {:>14} {:>14} {:>14}", "scenario", "sampler", "rounds", "final_mean", "ci_low", "ci_high");
    for file in files {
        let scenario = file.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
        for c in read_csv(&file)? {
            let t = c.rounds();
            if t == 0 {
                continue;
            }
            println!(
                "{:<16} {:<24} {:>7} {:>14.4} {:>14.4} {:>14.4}",
                scenario,
                c.label,
                t,
                c.mean[t - 1],
                c.ci_low[t - 1],
                c.ci_high[t - 1]
            );
        }
    }
    Ok(())
}

fn execute(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Run { config, out, threads } => {
            let text = std::fs::read_to_string(&config)
                .map_err(|e| Error::Config(format!("{}: {e}", config.display())))?;
            let cfg = ScenarioConfig::from_toml_str(&text)?;
            run_one("curves", &cfg, &out, threads_or_default(threads))
        }
        Command::Sweep { preset: name, out, full, threads } => {
            let threads = threads_or_default(threads);
            for (scenario, cfg) in preset(&name, full)? {
                run_one(&scenario, &cfg, &out, threads)?;
            }
            Ok(())
        }
        Command::Report { input } => report(&input),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e @ Error::Config(_)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}
