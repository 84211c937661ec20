mod commands;
mod input;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use loupe::FiniteLoop;

#[derive(Parser)]
#[command(
    name = "loupe",
    version,
    about = "Finite loop analysis: the L_n(m) family, identities, subloops, lattices, Smarandache notions, representations and edge colorings"
)]
struct Cli {
    /// Output format. `dot` is only accepted by `lattice`.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Search caps as `key=value` pairs, e.g. `census=1000,mlt=20000`.
    #[arg(long, env = "LOUPE_CAPS", global = true, hide_env_values = true)]
    caps: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

/// Where the loop comes from: a JSON or CSV file, or an inline spec.
#[derive(Args)]
#[group(required = true, multiple = false)]
pub struct Source {
    /// Loop file: JSON `{size, labels?, table}` or a headerless CSV table.
    #[arg(short, long)]
    input: Option<PathBuf>,
    /// Inline loop such as `ln(5,2)`, `z(6)`, `s(3)` or `ln(5,2)xs(3)`.
    #[arg(short = 'l', long = "loop", value_name = "SPEC")]
    spec: Option<String>,
}

impl Source {
    pub fn load(&self) -> Result<FiniteLoop, CliError> {
        match (&self.input, &self.spec) {
            (Some(path), _) => input::load_file(path),
            (_, Some(spec)) => input::parse_spec(spec),
            _ => Err(CliError::usage("give --input or --loop")),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LnAction {
    Build,
    List,
    Classify,
    Census,
    Normalizers,
    Cycles,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ColorAction {
    FromLoop,
    ToLoop,
    Enumerate,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Subloops,
    Subgroups,
    Normal,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Left,
    Right,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum HyperArg {
    Hyper,
    AHyper,
}

#[derive(Subcommand)]
enum Command {
    /// Work with the family L_n(m).
    Ln {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        m: Option<u64>,
        #[arg(value_enum)]
        action: LnAction,
    },
    /// Decide a law; `--law all` checks every law.
    Check {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        law: String,
    },
    /// Aggregate report: laws, substructures, Smarandache flags, lattices.
    Report {
        #[command(flatten)]
        source: Source,
    },
    /// Subloop census, nuclei, centres, derived and Frattini subloops.
    Substructures {
        #[command(flatten)]
        source: Source,
    },
    /// Smarandache report, with an optional p-Sylow section.
    Smarandache {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        sylow: Option<usize>,
    },
    /// Right regular representation in cycle notation.
    Represent {
        #[command(flatten)]
        source: Source,
    },
    /// Edge colorings of K_2n and involutory right-alternative loops.
    Color {
        #[arg(value_enum)]
        action: ColorAction,
        #[arg(short, long)]
        input: Option<PathBuf>,
        #[arg(short = 'l', long = "loop", value_name = "SPEC")]
        spec: Option<String>,
        /// Coloring file with `u v color` lines (for `to-loop`).
        #[arg(long)]
        coloring: Option<PathBuf>,
        /// Loop order (for `enumerate`).
        #[arg(long)]
        order: Option<usize>,
    },
    /// Inclusion lattice of a family of subloops.
    Lattice {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = Family::Subloops)]
        family: Family,
    },
    /// Principal isotope, or the G-loop decision with `--g-loop`.
    Isotope {
        #[command(flatten)]
        source: Source,
        #[arg(long, required_unless_present = "g_loop")]
        a: Option<String>,
        #[arg(long, required_unless_present = "g_loop")]
        b: Option<String>,
        #[arg(long)]
        g_loop: bool,
    },
    /// Hyperloop pair sets, or the partition check with `--partition`.
    Hyperloop {
        #[command(flatten)]
        source: Source,
        #[arg(long, required_unless_present = "partition")]
        q: Option<String>,
        #[arg(long, value_enum, default_value_t = HyperArg::Hyper)]
        kind: HyperArg,
        #[arg(long)]
        partition: bool,
    },
    /// Cosets of a subloop, or exact coset covers with `--cover`.
    Coset {
        #[command(flatten)]
        source: Source,
        /// Comma-separated element labels, e.g. `e,1`.
        #[arg(long)]
        subloop: String,
        #[arg(long, value_enum, default_value_t = SideArg::Right)]
        side: SideArg,
        #[arg(long)]
        cover: bool,
    },
}

/// A failure with its exit code: 1 for caps and internal errors, 2 for
/// usage and input errors.
#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError { code: 2, message: message.into() }
    }
}

impl From<loupe::Error> for CliError {
    fn from(e: loupe::Error) -> Self {
        use loupe::Error::*;
        let code = match e {
            CapExceeded { .. } | SizeCapExceeded { .. } => 1,
            _ => 2,
        };
        CliError { code, message: e.to_string() }
    }
}

fn run(cli: Cli) -> Result<String, CliError> {
    let caps = input::caps_from_env(cli.caps.as_deref())?;
    let fmt = cli.format;
    if fmt == Format::Dot && !matches!(cli.command, Command::Lattice { .. }) {
        return Err(CliError::usage("--format dot is only available for `lattice`"));
    }
    let out = match cli.command {
        Command::Ln { n, m, action } => commands::ln(n, m, action, &caps)?,
        Command::Check { source, law } => commands::check(&source.load()?, &law, &caps)?,
        Command::Report { source } => commands::report(&source.load()?, &caps),
        Command::Substructures { source } => commands::substructures(&source.load()?, &caps)?,
        Command::Smarandache { source, sylow } => commands::smarandache(&source.load()?, sylow, &caps)?,
        Command::Represent { source } => commands::represent(&source.load()?),
        Command::Color { action, input, spec, coloring, order } => {
            let source = Source { input, spec };
            commands::color(action, &source, coloring.as_deref(), order, &caps)?
        }
        Command::Lattice { source, family } => {
            let l = source.load()?;
            if fmt == Format::Dot {
                return commands::lattice_dot(&l, family, &caps);
            }
            commands::lattice(&l, family, &caps)?
        }
        Command::Isotope { source, a, b, g_loop } => {
            commands::isotope(&source.load()?, a.as_deref(), b.as_deref(), g_loop, &caps)?
        }
        Command::Hyperloop { source, q, kind, partition } => {
            commands::hyperloop(&source.load()?, q.as_deref(), kind, partition)?
        }
        Command::Coset { source, subloop, side, cover } => {
            commands::coset(&source.load()?, &subloop, side, cover, &caps)?
        }
    };
    Ok(match fmt {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&out.json).expect("JSON values serialize");
            s.push('\n');
            s
        }
        _ => out.text,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
