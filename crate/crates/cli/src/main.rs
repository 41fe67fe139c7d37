use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kreweras_cli::{
    cmd_complement, cmd_counts, cmd_csp, cmd_enumerate, cmd_orbit_of, cmd_orbit_table, cmd_render,
    cmd_verify, exit_code, parse_partition, parse_range, Config, EnumerateKind, Format, Output,
    RenderKind, EXIT_FAILED, EXIT_OK, EXIT_USAGE,
};
use kreweras_core::{Cap, Error, DEFAULT_MAX_N};

#[derive(Parser)]
#[command(name = "kreweras", version)]
#[command(about = "Kreweras complements, plane trees, planar-tree counts and q-Catalan sieving")]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,

    /// Allow exhaustive work above the default size cap
    #[arg(long, global = true)]
    force: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Structured,
}

#[derive(Clone, Copy, ValueEnum)]
enum EnumerateKindArg {
    Partitions,
    Trees,
}

#[derive(Clone, Copy, ValueEnum)]
enum RenderKindArg {
    Tree,
    Matching,
    Partition,
    Meander,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Sizes {
    #[arg(long)]
    n: Option<usize>,
    /// Inclusive range, `A..B`
    #[arg(long, value_parser = parse_range)]
    range: Option<RangeInclusive<usize>>,
}

impl Sizes {
    fn get(&self) -> RangeInclusive<usize> {
        match (&self.n, &self.range) {
            (Some(n), _) => *n..=*n,
            (None, Some(r)) => r.clone(),
            (None, None) => unreachable!("clap requires one of --n, --range"),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// List NC(n) or the plane trees with n edges
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = EnumerateKindArg::Partitions)]
        kind: EnumerateKindArg,
    },
    /// Print the first K Kreweras complements of a partition
    Complement {
        /// `1,3/2` or `{"n":3,"blocks":[[1,3],[2]]}`
        partition: String,
        #[arg(long, default_value_t = 1)]
        iterate: usize,
        /// Expected size, checked against the partition
        #[arg(long)]
        n: Option<usize>,
    },
    /// Orbit table of NC(n), or the orbit of one partition
    Orbit {
        #[arg(required_unless_present = "n")]
        partition: Option<String>,
        #[arg(long, conflicts_with = "partition")]
        n: Option<usize>,
        /// Include the least Dyck word of every orbit
        #[arg(long)]
        representatives: bool,
    },
    /// Closed-form planar-tree counts and the predicted orbit table
    Counts {
        #[command(flatten)]
        sizes: Sizes,
        /// Also count by brute force and compare
        #[arg(long)]
        brute: bool,
    },
    /// Check cyclic sieving for the q-Catalan numbers
    Csp {
        #[command(flatten)]
        sizes: Sizes,
    },
    /// Run every invariant exhaustively
    Verify {
        #[arg(long, conflicts_with = "range")]
        n: Option<usize>,
        #[arg(long, value_parser = parse_range, default_value = "1..8")]
        range: RangeInclusive<usize>,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Draw a tree, a partition or a meander as SVG
    Render {
        #[arg(long, value_enum)]
        kind: RenderKindArg,
        object: String,
        /// Second tree of a meander; defaults to the rerooted first tree
        second: Option<String>,
        /// Also draw the Kreweras complement on the primed points
        #[arg(long)]
        complement: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn run(cli: Cli) -> Result<Output, Error> {
    let cfg = Config {
        format: match cli.format {
            FormatArg::Text => Format::Text,
            FormatArg::Structured => Format::Structured,
        },
        cap: if cli.force {
            Cap::UNLIMITED
        } else {
            Cap(DEFAULT_MAX_N)
        },
    };
    match cli.command {
        Command::Enumerate { n, kind } => {
            let kind = match kind {
                EnumerateKindArg::Partitions => EnumerateKind::Partitions,
                EnumerateKindArg::Trees => EnumerateKind::Trees,
            };
            cmd_enumerate(&cfg, n, kind)
        }
        Command::Complement {
            partition,
            iterate,
            n,
        } => cmd_complement(&cfg, &parse_partition(&partition, n)?, iterate),
        Command::Orbit {
            partition: Some(p), ..
        } => cmd_orbit_of(&cfg, &parse_partition(&p, None)?),
        Command::Orbit {
            n, representatives, ..
        } => cmd_orbit_table(
            &cfg,
            n.expect("clap requires --n without a partition"),
            representatives,
        ),
        Command::Counts { sizes, brute } => cmd_counts(&cfg, sizes.get(), brute),
        Command::Csp { sizes } => cmd_csp(&cfg, sizes.get()),
        Command::Verify {
            n,
            range,
            inject_fault,
        } => cmd_verify(&cfg, n.map_or(range, |n| n..=n), inject_fault),
        Command::Render {
            kind,
            object,
            second,
            complement,
            out,
        } => {
            let kind = match kind {
                RenderKindArg::Tree | RenderKindArg::Matching => RenderKind::Tree,
                RenderKindArg::Partition => RenderKind::Partition,
                RenderKindArg::Meander => RenderKind::Meander,
            };
            let svg = cmd_render(kind, &object, second.as_deref(), complement)?;
            match out {
                None => Ok(svg),
                Some(path) => {
                    std::fs::write(&path, &svg.stdout).map_err(|e| {
                        Error::Domain(format!("cannot write {}: {e}", path.display()))
                    })?;
                    Ok(Output {
                        stdout: String::new(),
                        ok: true,
                    })
                }
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { EXIT_OK });
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(if out.ok { EXIT_OK } else { EXIT_FAILED })
        }
        Err(e) => {
            eprintln!("error: {e}");
            if let Error::ResourceLimit { .. } = e {
                eprintln!("pass --force to lift the cap");
            }
            ExitCode::from(exit_code(&e))
        }
    }
}
