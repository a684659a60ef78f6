//! `cellkit`: command-line front end.
//!
//! Exit status is 0 on success, 1 when a verdict fails and 2 on invalid input.

mod commands;
mod config;
mod output;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Args, Parser, Subcommand};

use config::{Format, GroupSpec, Job, JobConfig, LambdaArg, SideArg, VariantArg};

#[derive(Parser)]
#[command(name = "cellkit", version, about = "Kazhdan-Lusztig cells and generalised tau-invariants of finite Coxeter groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Preset: An, Bn, Cn, Dn, F4, G2, H3, H4 or I2:m. Generators are numbered
    /// s1, s2, ... along the Dynkin diagram.
    #[arg(long)]
    group: Option<String>,
    /// One positive weight per generator, comma-separated.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    weights: Option<Vec<i64>>,
    /// JSON job file; flags override its fields.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Maximal group order to enumerate.
    #[arg(long, env = "CELLKIT_CAP")]
    cap: Option<usize>,
    /// Worker threads.
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write to this file instead of stdout.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Elements with lengths and descent sets.
    Group {
        #[command(flatten)]
        common: Common,
    },
    /// Polynomials p_{y,w} and M^s_{z,y}.
    Klpoly {
        #[command(flatten)]
        common: Common,
        /// Restrict to this w.
        #[arg(long)]
        w: Option<String>,
        /// Restrict to this y.
        #[arg(long)]
        y: Option<String>,
    },
    /// Left, right or two-sided cells and their partial order.
    Cells {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum)]
        side: Option<SideArg>,
    },
    /// Matrices of C'_s on the module of a left cell.
    Modmat {
        #[command(flatten)]
        common: Common,
        /// Use the left cell containing this element, in canonical order.
        #[arg(long)]
        cell_of: Option<String>,
        /// Explicit basis, elements separated by ';'.
        #[arg(long)]
        basis: Option<String>,
    },
    /// Coset decomposition into strings for a pair of generators.
    Strings {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_delimiter = ',')]
        pair: Option<Vec<usize>>,
    },
    /// The star operation (order 3 pairs).
    Star {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_delimiter = ',')]
        pair: Option<Vec<usize>>,
        /// A single element; all of D_R(s,t) when omitted.
        #[arg(long)]
        element: Option<String>,
    },
    /// The tilde operation (equal weights on the pair).
    Tilde {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_delimiter = ',')]
        pair: Option<Vec<usize>>,
        #[arg(long)]
        element: Option<String>,
    },
    /// Generalised tau-invariant partition.
    Tau {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum)]
        variant: Option<VariantArg>,
        #[arg(long, value_enum)]
        lambda: Option<LambdaArg>,
    },
    /// Verify admissible pairs.
    AdmissibleCheck {
        #[command(flatten)]
        common: Common,
        /// Only this pair; all standard pairs when omitted.
        #[arg(long, value_delimiter = ',')]
        pair: Option<Vec<usize>>,
        /// Also require u and delta(u) to be right-equivalent.
        #[arg(long)]
        strong: bool,
        /// A candidate map instead of the standard one: "u -> v; u' -> v'".
        /// Unlisted elements are fixed.
        #[arg(long)]
        map: Option<String>,
    },
    /// Compare left cells with two-sided cells refined by the invariant.
    Conjecture {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum)]
        lambda: Option<LambdaArg>,
    },
}

/// Rendered output and whether a verdict failed.
pub struct Outcome {
    pub text: String,
    pub failed: bool,
}

impl Outcome {
    pub fn ok(text: String) -> Self {
        Self { text, failed: false }
    }
}

/// Merged settings for one invocation.
pub struct Session {
    pub job: Job,
    pub config: JobConfig,
    pub format: Format,
}

fn prepare(common: &Common) -> Result<Session> {
    let config = match &common.config {
        Some(path) => JobConfig::load(path)?,
        None => JobConfig::default(),
    };
    let spec = match (&common.group, &config.group) {
        (Some(name), _) => GroupSpec::Preset(name.clone()),
        (None, Some(spec)) => spec.clone(),
        (None, None) => return Err(anyhow!("group: missing; pass --group or a config file")),
    };
    let weights = common.weights.as_deref().or(config.weights.as_deref());
    let cap = common.cap.or(config.cap);
    if let Some(n) = common.jobs.or(config.jobs) {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build_global()
            .context("jobs: cannot configure the thread pool")?;
    }
    let job = Job::build(&spec, weights, cap)?;
    let format = common.format.or(config.format).unwrap_or(Format::Json);
    Ok(Session { job, config, format })
}

fn run(cli: Cli) -> Result<(Outcome, Option<PathBuf>)> {
    let common = match &cli.command {
        Command::Group { common }
        | Command::Klpoly { common, .. }
        | Command::Cells { common, .. }
        | Command::Modmat { common, .. }
        | Command::Strings { common, .. }
        | Command::Star { common, .. }
        | Command::Tilde { common, .. }
        | Command::Tau { common, .. }
        | Command::AdmissibleCheck { common, .. }
        | Command::Conjecture { common, .. } => common.clone(),
    };
    let ctx = prepare(&common)?;
    let outcome = match cli.command {
        Command::Group { .. } => commands::group(&ctx)?,
        Command::Klpoly { w, y, .. } => commands::klpoly(&ctx, w.as_deref(), y.as_deref())?,
        Command::Cells { side, .. } => commands::cells(&ctx, side.or(ctx.config.side).unwrap_or(SideArg::Left))?,
        Command::Modmat { cell_of, basis, .. } => {
            commands::modmat(&ctx, cell_of.or(ctx.config.element.clone()).as_deref(), basis.as_deref())?
        }
        Command::Strings { pair, .. } => commands::strings(&ctx, &pick_pair(pair, &ctx)?)?,
        Command::Star { pair, element, .. } => {
            commands::star_or_tilde(&ctx, &pick_pair(pair, &ctx)?, element.or(ctx.config.element.clone()).as_deref(), true)?
        }
        Command::Tilde { pair, element, .. } => {
            commands::star_or_tilde(&ctx, &pick_pair(pair, &ctx)?, element.or(ctx.config.element.clone()).as_deref(), false)?
        }
        Command::Tau { variant, lambda, .. } => commands::tau(
            &ctx,
            variant.or(ctx.config.variant).unwrap_or(VariantArg::Delta),
            lambda.or(ctx.config.lambda).unwrap_or(LambdaArg::RPi),
        )?,
        Command::AdmissibleCheck { pair, strong, map, .. } => {
            let pair = pair.or(ctx.config.pair.clone());
            let strong = strong || ctx.config.strong.unwrap_or(false);
            commands::admissible_check(&ctx, pair.as_deref(), strong, map.as_deref())?
        }
        Command::Conjecture { lambda, .. } => commands::conjecture(&ctx, lambda.or(ctx.config.lambda).unwrap_or(LambdaArg::RPi))?,
    };
    Ok((outcome, common.output))
}

fn pick_pair(flag: Option<Vec<usize>>, ctx: &Session) -> Result<Vec<usize>> {
    flag.or(ctx.config.pair.clone()).ok_or_else(|| anyhow!("pair: missing; pass --pair s,t"))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((outcome, path)) => {
            let written = match path {
                Some(path) => std::fs::write(&path, &outcome.text).with_context(|| format!("writing {}", path.display())),
                None => std::io::stdout().write_all(outcome.text.as_bytes()).context("writing to stdout"),
            };
            if let Err(e) = written {
                eprintln!("error: {e:#}");
                return ExitCode::from(2);
            }
            if outcome.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
