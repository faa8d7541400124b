//! `clutterkit`: run chordality, duality and resolution checks on clutter
//! files from the command line.
//!
//! Exit status: 0 when the property holds or the certificate is valid, 1 when
//! it fails (a witness is printed), 2 for usage and I/O errors, 3 when the
//! search budget runs out.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use clutterkit::FieldTag;

#[derive(Parser)]
#[command(name = "clutterkit", version, about = "Decision procedures for uniform clutters")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Coefficient field(s) for homology-based checks.
    #[arg(long, global = true, value_enum, default_value_t = FieldArg::Both)]
    field: FieldArg,
    /// Node cap for searches (per instance for `sweep`).
    #[arg(long, global = true, env = "CLUTTERKIT_BUDGET")]
    budget: Option<u64>,
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FieldArg {
    Gf2,
    Rat,
    Both,
}

impl FieldArg {
    fn fields(self) -> Vec<FieldTag> {
        match self {
            FieldArg::Gf2 => vec![FieldTag::Gf2],
            FieldArg::Rat => vec![FieldTag::Rational],
            FieldArg::Both => FieldTag::ALL.to_vec(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Property {
    /// C has an elimination sequence.
    Chordal,
    /// ⟨C∨⟩ is vertex decomposable.
    Vdec,
    /// The clutter is W-chordal.
    WChordal,
    /// I(C̄) has a linear resolution.
    LinRes,
    /// I(C̄) has linear quotients.
    LinQuotients,
    /// ⟨C⟩ is d-chorded.
    Chorded,
    /// Every iterated ascent is chorded.
    CfChordal,
    /// ⟨C⟩ has no d-cycles.
    CfTree,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ComplexArg {
    /// The clique complex Δ(C).
    Clique,
    /// ⟨C⟩, generated by the circuits.
    Generated,
    /// ⟨C∨⟩, generated by the dual clutter.
    Dual,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Elimination,
    Shedding,
    AdmissibleOrder,
    EdgeOrder,
}

#[derive(Subcommand)]
enum Command {
    /// Decide a property of a clutter.
    Check {
        #[arg(value_enum)]
        property: Property,
        file: PathBuf,
    },
    /// Print the dual clutter C∨ and the Alexander dual of ⟨C⟩.
    Dual { file: PathBuf },
    /// Print the ascent C⁺.
    Ascent {
        file: PathBuf,
        /// Print every iterated ascent down to the empty one.
        #[arg(long)]
        iterate: bool,
        /// Write the ascent to a clutter file.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Reduced homology of a complex built from the clutter.
    Homology {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = ComplexArg::Clique)]
        complex: ComplexArg,
    },
    /// Graded Betti table of I(C̄).
    Betti { file: PathBuf },
    /// Admissible orders of I(C̄).
    Quotients {
        #[command(subcommand)]
        action: QuotientsAction,
    },
    /// Emit a certificate as JSON.
    Certify {
        #[arg(value_enum)]
        kind: KindArg,
        file: PathBuf,
        /// Write the certificate here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Replay a certificate against a clutter.
    Verify { certificate: PathBuf, file: PathBuf },
    /// Sweep registered theorems over generated instances.
    Sweep {
        /// Generator spec (JSON).
        #[arg(required_unless_present = "list")]
        spec: Option<PathBuf>,
        /// Theorem id; repeat for several. Defaults to all.
        #[arg(long = "theorem")]
        theorems: Vec<String>,
        /// Directory for hits of open statements.
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Keep counterexamples as found.
        #[arg(long)]
        no_shrink: bool,
        /// List registered theorems and exit.
        #[arg(long)]
        list: bool,
    },
}

#[derive(Subcommand)]
enum QuotientsAction {
    /// Search for an admissible order.
    Find {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check that an order is admissible for I(C̄).
    Verify { order: PathBuf, file: PathBuf },
    /// Build the order of I(C̄⁺) from an order of I(C̄).
    Ascend {
        order: PathBuf,
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Append a member of SMS(C⁺), giving an order of I(complement(C - F)).
    Append {
        order: PathBuf,
        file: PathBuf,
        /// Labels as digits (`278`) or comma-separated (`2,7,8`).
        #[arg(long)]
        face: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Keep the generators avoiding a vertex, giving an order of I(complement(C - v)).
    Restrict {
        order: PathBuf,
        file: PathBuf,
        /// 1-based vertex label.
        #[arg(long)]
        vertex: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(report) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&report.json).expect("reports serialize"));
            } else {
                print!("{}", report.text);
            }
            ExitCode::from(if report.holds { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
