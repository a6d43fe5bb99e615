use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use nova_cli::commands::{self, Options};
use nova_cli::{load_all, CliError, Outcome};

#[derive(Parser)]
#[command(
    name = "nova",
    version,
    about = "Exact checks and constructions for Novikov bialgebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: Global,
}

#[derive(Args)]
struct Global {
    /// Write a JSON report to this path.
    #[arg(long, global = true)]
    report: Option<PathBuf>,
    /// Parameter q of the induced Novikov product.
    #[arg(long, global = true, allow_hyphen_values = true)]
    q: Option<String>,
    /// Rota-Baxter weight.
    #[arg(long, global = true, allow_hyphen_values = true)]
    weight: Option<String>,
    /// Coefficient grid for `search`, comma separated.
    #[arg(long, global = true, allow_hyphen_values = true)]
    grid: Option<String>,
    /// Support for `search`: `i,j;k,l` with 1-based indices or basis labels.
    #[arg(long, global = true)]
    support: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Verify the structures in the given files or fixtures.
    Check {
        /// Definition files or fixture names; later inputs override earlier ones.
        #[arg(required = true)]
        inputs: Vec<String>,
        /// auto, identities, coalgebra, novikov-bialgebra, infinitesimal-bialgebra,
        /// diff-infinitesimal-bialgebra, lie-bialgebra, representation, form, maps
        /// or admissible-aybe.
        #[arg(long, default_value = "auto")]
        flavor: String,
    },
    /// Build a new structure and re-verify it.
    Construct {
        /// cobound, double, diff-double, factorize, rb-from-r, r-from-rb, induce-novikov,
        /// induce-lie, lift-rhat, delta-omega, classify, search or parametric.
        sub: String,
        /// Definition files or fixture names; later inputs override earlier ones.
        #[arg(required = true)]
        inputs: Vec<String>,
        /// Second operand for induce-lie and lift-rhat.
        #[arg(long, num_args = 1..)]
        right: Vec<String>,
        /// Write constructed objects to this directory.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List or write the shipped fixtures.
    Fixtures {
        #[command(subcommand)]
        action: FixtureAction,
    },
}

#[derive(Subcommand)]
enum FixtureAction {
    List,
    Emit { name: String, dir: PathBuf },
}

fn options(g: &Global) -> Result<Options, CliError> {
    Ok(Options {
        q: g.q.as_deref().map(commands::parse_rational).transpose()?,
        weight: g
            .weight
            .as_deref()
            .map(commands::parse_rational)
            .transpose()?,
        grid: g.grid.as_deref().map(commands::parse_grid).transpose()?,
        support: g.support.clone(),
    })
}

fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let opts = options(&cli.global)?;
    match &cli.command {
        Command::Check { inputs, flavor } => commands::check(&load_all(inputs)?, flavor),
        Command::Construct {
            sub,
            inputs,
            right,
            out,
        } => {
            let left = load_all(inputs)?;
            let right = if right.is_empty() {
                None
            } else {
                Some(load_all(right)?)
            };
            let outcome = commands::construct(sub, &left, right.as_ref(), &opts)?;
            if let Some(dir) = out {
                for f in &outcome.objects {
                    commands::write_object(dir, f)?;
                }
            }
            Ok(outcome)
        }
        Command::Fixtures {
            action: FixtureAction::List,
        } => Ok(commands::fixtures_list()),
        Command::Fixtures {
            action: FixtureAction::Emit { name, dir },
        } => commands::fixtures_emit(name, dir),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            print!("{}", outcome.render());
            if let Some(path) = &cli.global.report {
                if let Err(e) = std::fs::write(path, outcome.to_json() + "\n") {
                    eprintln!("nova: {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            ExitCode::from(outcome.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("nova: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
