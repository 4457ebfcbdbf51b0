//! Command-line laboratory for bit-string thermodynamics.
//!
//! Every experiment is a pure function of its echoed configuration: outputs
//! embed the resolved parameters, defaults, and seed, and re-running with
//! the same configuration reproduces the bytes.

mod args;
mod commands;
mod defaults;
mod error;
mod output;

use args::Args;
use defaults::Defaults;
use error::CliError;

const USAGE: &str = "\
bitthermo — combinatorial thermodynamics of bit strings

USAGE:
  bitthermo <subcommand> [flags]

SUBCOMMANDS:
  generate   write reservoir strings (--n with --t or --k, --count, --packed)
  temp       temperatures + equilibrium verdict for a string file (--in)
  curve      statistical-temperature table over the fraction grid (--points)
  carnot     engine run or cold-sink sweep (--n --t1 --t2[,t2,...] --d1 --mode)
  laws       first/second-law verdicts for a mapping file (--table)
  zeroth     transitivity experiment (--n) or failure-rate sweep (--n-grid)

GLOBAL FLAGS:
  --seed U64            generation seed (defaults file otherwise)
  --estimator ID        block-entropy | run-length | dictionary | byte-rle
  --format F            csv | json (table-producing commands)
  --out PATH            write to a file instead of stdout
  --defaults-file PATH  replace the built-in defaults (echoed into outputs)

EXIT CODES:
  0 success, 2 validation error, 3 infeasible or cap exceeded,
  4 estimator error
";

fn main() {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    if let Err(e) = run(&argv) {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}

fn run(argv: &[String]) -> Result<(), CliError> {
    if argv.is_empty() || argv[0] == "help" || argv[0] == "--help" {
        print!("{USAGE}");
        return Ok(());
    }
    let args = Args::parse(argv)?;
    let defaults = match args.get("defaults-file") {
        Some(path) => Defaults::from_file(path)?,
        None => Defaults::builtin(),
    };
    match args.command.as_str() {
        "generate" => commands::generate::run(&args, &defaults),
        "temp" => commands::temp::run(&args, &defaults),
        "curve" => commands::curve::run(&args, &defaults),
        "carnot" => commands::carnot::run(&args, &defaults),
        "laws" => commands::laws::run(&args, &defaults),
        "zeroth" => commands::zeroth::run(&args, &defaults),
        other => Err(CliError::Validation(format!(
            "unknown subcommand '{other}' (see 'bitthermo help')"
        ))),
    }
}
