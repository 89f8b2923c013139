use std::fs;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

use z2z4::cli::{self, CmdOutput, PdAction};
use z2z4::{ErrorModel, Method, Result};

#[derive(Parser)]
#[command(name = "z2z4", version, about = "Z2Z4-linear codes: encoding, permutation decoding and PD-set tools")]
struct Cli {
    /// Emit a JSON report instead of aligned text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Alt,
    Syndrome,
}

#[derive(Clone, Copy, ValueEnum)]
enum ActionArg {
    Verify,
    Search,
}

#[derive(Subcommand)]
enum Command {
    /// Type, dual type, information set, minimum distance and linearity.
    Info {
        /// Code file or built-in name (example3, example4, mixed, nonlinear, hadamard32).
        code: String,
    },
    /// Standard-form generator matrix, its blocks and the column permutation.
    StandardForm { code: String },
    /// Parity-check matrix (generator matrix of the additive dual).
    Dual { code: String },
    /// Systematically encode an information vector.
    Encode { code: String, info: String },
    /// Decode a received word with a PD-set.
    Decode {
        code: String,
        /// PD-set file or built-in name (example3, example4).
        pdset: String,
        received: String,
        #[arg(long, value_enum, default_value = "alt")]
        method: MethodArg,
        /// Skip certifying the PD-set before decoding.
        #[arg(long)]
        trust: bool,
    },
    /// Certify a PD-set, or search one greedily among candidate automorphisms.
    Pdset {
        code: String,
        /// Permutation list or PD-set file.
        perms: String,
        #[arg(value_enum)]
        action: ActionArg,
        /// Error radius (defaults to the file header, then the code's t).
        #[arg(long)]
        t: Option<usize>,
        /// Expand the permutations to the group they generate first.
        #[arg(long)]
        closure: bool,
        /// Write the found PD-set to this file (search only).
        #[arg(long)]
        out: Option<String>,
    },
    /// Monte-Carlo simulation of the re-encoding decoder.
    #[command(group(ArgGroup::new("model").required(true).args(["weight", "flip"])))]
    Simulate {
        code: String,
        pdset: String,
        /// Inject uniformly random errors of exactly this weight.
        #[arg(long)]
        weight: Option<usize>,
        /// Flip each bit independently with this probability.
        #[arg(long)]
        flip: Option<f64>,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn run(command: Command) -> Result<CmdOutput> {
    match command {
        Command::Info { code } => cli::cmd_info(&cli::load_code(&code)?),
        Command::StandardForm { code } => cli::cmd_standard_form(&cli::load_code(&code)?),
        Command::Dual { code } => cli::cmd_dual(&cli::load_code(&code)?),
        Command::Encode { code, info } => cli::cmd_encode(&cli::load_code(&code)?, &info),
        Command::Decode { code, pdset, received, method, trust } => {
            let code = cli::load_code(&code)?;
            let set = cli::load_pd_set(&pdset, code.length())?;
            let method = match method {
                MethodArg::Alt => Method::Alternative,
                MethodArg::Syndrome => Method::Syndrome,
            };
            cli::cmd_decode(&code, &set, &received, method, trust)
        }
        Command::Pdset { code, perms, action, t, closure, out } => {
            let code = cli::load_code(&code)?;
            let text = match z2z4::presets::pd_set_by_name(&perms) {
                Ok(set) if !std::path::Path::new(&perms).exists() => z2z4::decode::format_pd_set(&set),
                _ => fs::read_to_string(&perms)
                    .map_err(|e| z2z4::Error::InvalidArgument(format!("cannot read {}: {}", perms, e)))?,
            };
            let action = match action {
                ActionArg::Verify => PdAction::Verify,
                ActionArg::Search => PdAction::Search,
            };
            let output = cli::cmd_pdset(&code, &text, action, t, closure)?;
            if let (Some(path), PdAction::Search, cli::EXIT_OK) = (&out, action, output.exit) {
                fs::write(path, format!("{}\n", output.text))
                    .map_err(|e| z2z4::Error::InvalidArgument(format!("cannot write {}: {}", path, e)))?;
            }
            Ok(output)
        }
        Command::Simulate { code, pdset, weight, flip, trials, seed } => {
            let code = cli::load_code(&code)?;
            let set = cli::load_pd_set(&pdset, code.length())?;
            let model = match (weight, flip) {
                (Some(weight), _) => ErrorModel::Weight { weight },
                (None, Some(p)) => ErrorModel::Flip { p },
                (None, None) => unreachable!("clap requires one error model"),
            };
            cli::cmd_simulate(&code, &set, model, trials, seed)
        }
    }
}

fn main() -> ExitCode {
    let args = Cli::parse();
    match run(args.command) {
        Ok(output) => {
            println!("{}", output.render(args.json));
            ExitCode::from(output.exit as u8)
        }
        Err(err) => {
            eprintln!("error: {}", err);
            ExitCode::from(cli::exit_code(&err) as u8)
        }
    }
}
