use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use eisenpole::{run, CliError, Command, RunConfig};

#[derive(Parser, Debug)]
#[command(name = "eisenpole", version, about = "Poles of degenerate Eisenstein series and identities between their leading terms")]
struct Cli {
    #[command(subcommand)]
    command: Sub,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Subcommand, Debug, Clone, Copy)]
enum Sub {
    /// Cartan and B matrices, coset counts and residue factors.
    Rootdata,
    /// Pole orders, square integrability and orbits.
    Poles,
    /// Admissible data between maximal parabolics.
    Identities,
    /// Admissible data with their proportionality constants.
    Constants,
    /// Check that no Gindikin-Karpelevich denominator vanishes at a candidate pole.
    Verify,
    /// Factor table and Laurent expansions at one point.
    Appendix,
}

#[derive(Args, Debug)]
struct Opts {
    /// Key-value configuration file; flags override its settings.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Group type such as G2, F4, E7.
    #[arg(long, short, global = true)]
    group: Option<String>,
    /// One-based parabolic index, a comma-separated list, or `all`.
    #[arg(long, short, global = true)]
    parabolic: Option<String>,
    /// table, latex, json, or dot (identities only).
    #[arg(long, short, global = true)]
    format: Option<String>,
    /// Laurent terms shown beyond the pole part in proofs.
    #[arg(long, global = true)]
    depth: Option<String>,
    /// Decimal digits of numeric certificates (at least 30).
    #[arg(long, global = true)]
    precision: Option<String>,
    /// Worker threads; falls back to EISENPOLE_THREADS.
    #[arg(long, global = true)]
    threads: Option<String>,
    /// Write output here instead of standard output.
    #[arg(long, short, global = true)]
    out: Option<PathBuf>,
    /// Search range `lo:hi` for identities.
    #[arg(long, global = true)]
    range: Option<String>,
    /// plus_half or minus_half.
    #[arg(long, global = true)]
    convention: Option<String>,
    /// Expansion point for `appendix`, such as 1/4.
    #[arg(long, global = true)]
    point: Option<String>,
}

fn configure(cli: &Cli) -> Result<RunConfig, CliError> {
    let command = match cli.command {
        Sub::Rootdata => Command::Rootdata,
        Sub::Poles => Command::Poles,
        Sub::Identities => Command::Identities,
        Sub::Constants => Command::Constants,
        Sub::Verify => Command::Verify,
        Sub::Appendix => Command::Appendix,
    };
    let mut cfg = RunConfig::new(command);
    if let Some(path) = &cli.opts.config {
        let text = std::fs::read_to_string(path)
            .map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
        cfg.apply_file(&text)?;
        cfg.command = command;
    }
    let o = &cli.opts;
    let flags = [
        ("group", &o.group),
        ("parabolic", &o.parabolic),
        ("format", &o.format),
        ("depth", &o.depth),
        ("precision", &o.precision),
        ("threads", &o.threads),
        ("range", &o.range),
        ("convention", &o.convention),
        ("point", &o.point),
    ];
    for (key, value) in flags {
        if let Some(v) = value {
            cfg.set(key, v)?;
        }
    }
    if let Some(out) = &o.out {
        cfg.out = Some(out.clone());
    }
    if cfg.threads.is_none() {
        if let Ok(v) = std::env::var("EISENPOLE_THREADS") {
            cfg.set("threads", &v)?;
        }
    }
    Ok(cfg)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = configure(&cli).and_then(|cfg| {
        let outcome = run(&cfg)?;
        match &cfg.out {
            Some(path) => std::fs::write(path, &outcome.text)
                .map_err(|source| CliError::Io { path: path.display().to_string(), source })?,
            None => print!("{}", outcome.text),
        }
        Ok(outcome)
    });
    match result {
        Ok(o) if o.inconclusive => {
            eprintln!("warning: some results are inconclusive");
            ExitCode::from(1)
        }
        Ok(_) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
