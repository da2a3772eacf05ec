//! Command-line front end. All logic lives in the library; this file only
//! parses arguments, moves bytes, and maps failures to exit codes:
//! 0 success, 1 verification failure, 2 input error, 3 limit exceeded or
//! oracle disagreement.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use hexforce::bounds::{bounds_report, normal_components};
use hexforce::families::{self, FamilySpec, Verdict};
use hexforce::forcing::{
    first_unhit_frame, is_complete_forcing_set_def, is_complete_forcing_set_nice,
    min_complete_forcing,
};
use hexforce::hexgrid::{format_edge_set, parse_edge_set, parse_hexsys, EdgeSet, HexSystem};
use hexforce::render;

#[derive(Parser)]
#[command(name = "hexforce", version, about = "Complete forcing sets of hexagonal systems")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyArg {
    Parallelogram,
    Hexagon,
    Oblate,
    Prolate,
}

impl FamilyArg {
    fn spec(self, p: usize, q: usize) -> FamilySpec {
        match self {
            FamilyArg::Parallelogram => FamilySpec::Parallelogram { p, q },
            FamilyArg::Hexagon => FamilySpec::Hexagon { p },
            FamilyArg::Oblate => FamilySpec::OblateRectangle { p, q },
            FamilyArg::Prolate => FamilySpec::ProlateRectangle { p, q },
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a family member in HEXSYS format.
    Gen {
        family: FamilyArg,
        #[arg(short)]
        p: usize,
        /// Columns; ignored for the hexagon family.
        #[arg(short, default_value_t = 1)]
        q: usize,
        /// Output file (stdout if omitted).
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Compute the exact minimum complete forcing set of a system.
    Cf {
        input: PathBuf,
        /// Refuse systems with more hexagons than this.
        #[arg(long, default_value_t = 14)]
        limit: usize,
        /// Write the witness edge set here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check whether an edge set is a complete forcing set.
    Verify {
        input: PathBuf,
        /// Edge-set file to check.
        #[arg(short, long)]
        set: PathBuf,
        /// Cross-check the cycle-detection verifier against the
        /// definitional one (slow).
        #[arg(long)]
        oracle: bool,
    },
    /// Report fixed edges, normality, and lower/upper bounds.
    Bounds { input: PathBuf },
    /// Emit the explicit optimal construction for a family member.
    Construct {
        family: FamilyArg,
        #[arg(short)]
        p: usize,
        #[arg(short, default_value_t = 1)]
        q: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Certify that the family construction meets a lower bound.
    Certify {
        family: FamilyArg,
        #[arg(short)]
        p: usize,
        #[arg(short, default_value_t = 1)]
        q: usize,
    },
    /// Split a system into its normal components, one HEXSYS file each.
    Decompose {
        input: PathBuf,
        /// Output stem; components go to <stem>-1.hex, <stem>-2.hex, ...
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Draw a system as SVG, or its dual graph as DOT.
    Viz {
        input: PathBuf,
        /// Edge-set file to highlight.
        #[arg(short, long)]
        set: Option<PathBuf>,
        /// Emit the dual graph in DOT format instead of an SVG drawing.
        #[arg(long)]
        dual: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

struct Failure {
    code: u8,
    msg: String,
}

impl Failure {
    fn input(msg: impl Into<String>) -> Failure {
        Failure { code: 2, msg: msg.into() }
    }

    fn limit(msg: impl Into<String>) -> Failure {
        Failure { code: 3, msg: msg.into() }
    }
}

fn read_to_string(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))
}

fn read_system(path: &Path) -> Result<HexSystem, Failure> {
    parse_hexsys(&read_to_string(path)?)
        .map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn read_edge_set(path: &Path, hs: &HexSystem) -> Result<EdgeSet, Failure> {
    let set = parse_edge_set(&read_to_string(path)?)
        .map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    for e in &set {
        if hs.edge_id(e).is_none() {
            return Err(Failure::input(format!(
                "{}: edge {e} is not in the system",
                path.display()
            )));
        }
    }
    Ok(set)
}

fn emit(output: Option<&Path>, text: &str) -> Result<(), Failure> {
    match output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::input(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cmd: Cmd) -> Result<u8, Failure> {
    match cmd {
        Cmd::Gen { family, p, q, output } => {
            let layout = families::generate(&family.spec(p, q))
                .map_err(|e| Failure::input(e.to_string()))?;
            emit(output.as_deref(), &layout.system.to_hexsys())?;
            Ok(0)
        }
        Cmd::Cf { input, limit, output } => {
            let hs = read_system(&input)?;
            if hs.hexagon_count() > limit {
                return Err(Failure::limit(format!(
                    "system has {} hexagons, over the exact-search limit of {limit} \
                     (raise with --limit)",
                    hs.hexagon_count()
                )));
            }
            let (cf, witness) = min_complete_forcing(&hs)
                .map_err(|e| Failure::input(e.to_string()))?;
            println!("cf = {cf}");
            let text = format_edge_set(&witness);
            match output {
                Some(path) => emit(Some(&path), &text)?,
                None => print!("{text}"),
            }
            Ok(0)
        }
        Cmd::Verify { input, set, oracle } => {
            let hs = read_system(&input)?;
            let s = read_edge_set(&set, &hs)?;
            let ok = is_complete_forcing_set_nice(&hs, &s)
                .map_err(|e| Failure::input(e.to_string()))?;
            if oracle {
                let def = is_complete_forcing_set_def(&hs, &s)
                    .map_err(|e| Failure::input(e.to_string()))?;
                if def != ok {
                    return Err(Failure::limit(format!(
                        "verifier disagreement: cycle detection says {ok}, definition says {def}"
                    )));
                }
            }
            if ok {
                println!("PASS");
                Ok(0)
            } else {
                println!("FAIL");
                let unhit = first_unhit_frame(&hs, &s)
                    .map_err(|e| Failure::input(e.to_string()))?
                    .expect("a failing set leaves some frame unhit");
                println!("unhit frame of a nice cycle:");
                print!("{}", format_edge_set(&unhit.frame));
                Ok(1)
            }
        }
        Cmd::Bounds { input } => {
            let hs = read_system(&input)?;
            let report = bounds_report(&hs).map_err(|e| Failure::input(e.to_string()))?;
            println!("{report}");
            Ok(0)
        }
        Cmd::Construct { family, p, q, output } => {
            let s = families::construct_cfs(&family.spec(p, q))
                .map_err(|e| Failure::input(e.to_string()))?;
            emit(output.as_deref(), &format_edge_set(&s))?;
            Ok(0)
        }
        Cmd::Certify { family, p, q } => {
            let report = families::certify(&family.spec(p, q))
                .map_err(|e| Failure::input(e.to_string()))?;
            println!("{report}");
            Ok(if report.verdict == Verdict::Optimal { 0 } else { 1 })
        }
        Cmd::Decompose { input, output } => {
            let hs = read_system(&input)?;
            let components =
                normal_components(&hs).map_err(|e| Failure::input(e.to_string()))?;
            let stem = output.display();
            for (k, comp) in components.iter().enumerate() {
                let path = PathBuf::from(format!("{stem}-{}.hex", k + 1));
                emit(Some(&path), &comp.to_hexsys())?;
                println!("{} ({} hexagons)", path.display(), comp.hexagon_count());
            }
            Ok(0)
        }
        Cmd::Viz { input, set, dual, output } => {
            let hs = read_system(&input)?;
            let highlight = match set {
                Some(path) => read_edge_set(&path, &hs)?,
                None => EdgeSet::new(),
            };
            let text = if dual {
                render::dual_dot(&hs)
            } else {
                render::svg(&hs, &highlight)
            };
            emit(output.as_deref(), &text)?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => ExitCode::from(code),
        Err(Failure { code, msg }) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
