use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use double_cyclic::cli::{self, DualMethod, Outcome, EXIT_PARSE};
use double_cyclic::code::DEFAULT_ENUMERATION_CAP;
use double_cyclic::dual::RhoForm;
use double_cyclic::verify::CorpusConfig;

#[derive(Parser)]
#[command(name = "dcc", version, about = "Double cyclic codes over F_q + vF_q + v^2F_q")]
struct Args {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Formula,
    Nullspace,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum ComponentArg {
    V1,
    V2,
    V3,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum RhoArg {
    Congruence,
    UnscaledShifted,
    EllInverse,
    IotaInverse,
}

#[derive(Subcommand)]
enum Command {
    /// Check the structural conditions on a spec file.
    Validate { file: PathBuf },
    /// Print generator matrices.
    Genmat {
        file: PathBuf,
        #[arg(long)]
        standardized: bool,
    },
    /// Print the dual code.
    Dual {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = MethodArg::Formula)]
        method: MethodArg,
    },
    /// Minimum distance of component codes.
    Mindist {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = ComponentArg::All)]
        component: ComponentArg,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        cap: u64,
    },
    /// List every codeword.
    Enumerate {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        cap: u64,
    },
    /// Test whether `left | right` (tokens `a,b,c`) is a codeword.
    Member {
        file: PathBuf,
        #[arg(long)]
        word: String,
    },
    /// Generators of the code spanned by the `word = ...` lines of a file.
    Canonicalize { file: PathBuf },
    /// Run the property suites on a seeded random corpus.
    Verify {
        #[arg(long, default_value_t = 200)]
        cases: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_delimiter = ',', default_values_t = vec![3u64, 5, 7])]
        qset: Vec<u64>,
        /// Build the closed-form dual from another way of writing rho.
        #[arg(long, value_enum, default_value_t = RhoArg::Congruence)]
        rho_form: RhoArg,
    },
    /// Reproduce the worked example over F_7.
    Example1,
}

fn read(path: &PathBuf) -> Result<String, Outcome> {
    std::fs::read_to_string(path).map_err(|e| Outcome {
        code: EXIT_PARSE,
        stdout: String::new(),
        stderr: format!("error: cannot read {}: {e}\n", path.display()),
    })
}

fn run(args: Args) -> Outcome {
    let Format::Text = args.format;
    let with_file = |path: &PathBuf, f: &dyn Fn(&str) -> Outcome| match read(path) {
        Ok(text) => f(&text),
        Err(o) => o,
    };
    match args.command {
        Command::Validate { file } => with_file(&file, &cli::validate),
        Command::Genmat { file, standardized } => with_file(&file, &|t| cli::genmat(t, standardized)),
        Command::Dual { file, method } => {
            let m = match method {
                MethodArg::Formula => DualMethod::Formula,
                MethodArg::Nullspace => DualMethod::Nullspace,
                MethodArg::Both => DualMethod::Both,
            };
            with_file(&file, &|t| cli::dual(t, m))
        }
        Command::Mindist { file, component, cap } => {
            let comps = match component {
                ComponentArg::V1 => vec![1],
                ComponentArg::V2 => vec![2],
                ComponentArg::V3 => vec![3],
                ComponentArg::All => vec![1, 2, 3],
            };
            with_file(&file, &|t| cli::mindist(t, &comps, cap))
        }
        Command::Enumerate { file, cap } => with_file(&file, &|t| cli::enumerate(t, cap)),
        Command::Member { file, word } => with_file(&file, &|t| cli::member(t, &word)),
        Command::Canonicalize { file } => with_file(&file, &cli::canonicalize),
        Command::Verify {
            cases,
            seed,
            qset,
            rho_form,
        } => {
            let form = match rho_form {
                RhoArg::Congruence => RhoForm::Congruence,
                RhoArg::UnscaledShifted => RhoForm::UnscaledShifted,
                RhoArg::EllInverse => RhoForm::EllInverse,
                RhoArg::IotaInverse => RhoForm::IotaInverse,
            };
            let cfg = CorpusConfig {
                cases,
                seed,
                qset,
                ..Default::default()
            };
            cli::verify(&cfg, form)
        }
        Command::Example1 => cli::example1_report(),
    }
}

fn main() -> ExitCode {
    let out = run(Args::parse());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    ExitCode::from(out.code as u8)
}
