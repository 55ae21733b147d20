use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "eurbound",
    version,
    about = "Entropic uncertainty bounds for multipartite qubit states"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sweep θ over the GHZ⁴(θ) family and evaluate the three-observable bound.
    #[command(name = "fig3-sweep")]
    Fig3Sweep(Fig3Args),
    /// Sweep p over three-qubit Werner states and evaluate the key-rate bounds.
    #[command(name = "fig4-sweep")]
    Fig4Sweep(Fig4Args),
    /// Evaluate one bound on a state read from a JSON file.
    Bound(BoundArgs),
    /// Fuzz an inequality on random states; exits 1 on any violation.
    Certify(CertifyArgs),
    /// Print a state from one of the built-in families as a JSON state file.
    State(StateArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Output file, written atomically; standard output when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct Fig3Args {
    #[arg(long, default_value_t = 9)]
    pub points: usize,
    /// Start of the θ grid in radians (accepts expressions like `pi/8`).
    #[arg(long, default_value = "0")]
    pub start: String,
    #[arg(long, default_value = "pi/2")]
    pub end: String,
    /// Observable-to-memory pairing on target A.
    #[arg(long, default_value = "X:B,Y:C,Z:D")]
    pub pairing: String,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct Fig4Args {
    #[arg(long, default_value_t = 11)]
    pub points: usize,
    #[arg(long, default_value = "0")]
    pub start: String,
    #[arg(long, default_value = "1")]
    pub end: String,
    /// Observables R,K; R is paired with Bob's memory and K with Eve's.
    #[arg(long, default_value = "Y,Z")]
    pub observables: String,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BoundScenario {
    Berta,
    Theorem1,
    #[value(alias = "geur")]
    Theorem2,
    KeyRate,
}

#[derive(Debug, Args)]
pub struct BoundArgs {
    /// JSON state file.
    #[arg(long)]
    pub state: PathBuf,
    #[arg(long, value_enum)]
    pub scenario: BoundScenario,
    /// OBS:LABEL pairs (theorem1, theorem2). Defaults to X, Y, Z on the
    /// non-target subsystems in layout order.
    #[arg(long)]
    pub pairing: Option<String>,
    /// Observables R,K (berta, key-rate). Defaults: X,Z for berta, Y,Z for key-rate.
    #[arg(long)]
    pub observables: Option<String>,
    /// Measured subsystem; defaults to the first layout label.
    #[arg(long)]
    pub target: Option<String>,
    /// Alice,Bob,Eve labels for key-rate; defaults to layout order.
    #[arg(long)]
    pub parties: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CertifyScenarioArg {
    Theorem1,
    #[value(name = "theorem2-n3", alias = "theorem2")]
    Theorem2N3,
    Berta,
    KeyRateOrdering,
}

#[derive(Debug, Args)]
pub struct CertifyArgs {
    #[arg(long, value_enum)]
    pub scenario: CertifyScenarioArg,
    #[arg(long, default_value_t = 1000)]
    pub trials: usize,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Qubit count; the scenario's natural size when omitted.
    #[arg(long)]
    pub qubits: Option<usize>,
    /// Draw Haar-random qubit bases instead of distinct Paulis.
    #[arg(long)]
    pub random_bases: bool,
    /// Run trials on one thread.
    #[arg(long)]
    pub serial: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Bell,
    Ghz,
    Ghz4Theta,
    Werner3,
    RandomPure,
    RandomMixed,
}

#[derive(Debug, Args)]
pub struct StateArgs {
    #[arg(value_enum)]
    pub family: FamilyArg,
    #[arg(long, default_value_t = 3)]
    pub qubits: usize,
    #[arg(long, default_value = "pi/4")]
    pub theta: String,
    #[arg(long, default_value_t = 0.5)]
    pub p: f64,
    #[arg(long, default_value_t = 1)]
    pub rank: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}
