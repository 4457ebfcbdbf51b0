//! `generate`: write reservoir strings to a file.

use serde::Serialize;

use bitthermo::bits::{generate_bernoulli, generate_exact};
use bitthermo::Seed;

use crate::args::Args;
use crate::defaults::Defaults;
use crate::error::CliError;
use crate::output::{emit, RunConfig};

#[derive(Serialize)]
struct Params {
    n: usize,
    t: Option<f64>,
    k: Option<usize>,
    count: usize,
    seed: u64,
    packed: bool,
    out: Option<String>,
}

pub fn run(args: &Args, defaults: &Defaults) -> Result<(), CliError> {
    let params = Params {
        n: args.required("n")?,
        t: args.parsed("t")?,
        k: args.parsed("k")?,
        count: args.parsed("count")?.unwrap_or(1),
        seed: args.parsed("seed")?.unwrap_or(defaults.seed),
        packed: args.switch("packed"),
        out: args.get("out").map(String::from),
    };
    args.finish()?;

    if params.count == 0 {
        return Err(CliError::Validation("--count must be at least 1".into()));
    }
    let seed = Seed(params.seed);
    let make = |i: u64| match (params.t, params.k) {
        (Some(t), None) => generate_bernoulli(params.n, t, seed.derive(i)),
        (None, Some(k)) => generate_exact(params.n, k, seed.derive(i)),
        _ => {
            Err(bitthermo::bits::BitsError::FractionOutOfRange(f64::NAN))
        }
    };
    if params.t.is_some() == params.k.is_some() {
        return Err(CliError::Validation(
            "exactly one of --t or --k is required".into(),
        ));
    }

    let strings: Vec<_> = (0..params.count as u64)
        .map(make)
        .collect::<Result<_, _>>()
        .map_err(|e| CliError::Validation(e.to_string()))?;

    if params.packed {
        let out = params
            .out
            .as_deref()
            .ok_or_else(|| CliError::Validation("--packed requires --out".into()))?;
        let mut bytes = Vec::new();
        for s in &strings {
            bytes.extend_from_slice(&s.to_packed());
        }
        std::fs::write(out, bytes)?;
        return Ok(());
    }

    let config = RunConfig {
        command: "generate",
        params: &params,
        defaults,
    };
    let echo = serde_json::to_string(&config).map_err(|e| CliError::Io(e.to_string()))?;
    let mut content = format!("# config: {echo}\n");
    for s in &strings {
        content.push_str(&s.to_text());
        content.push('\n');
    }
    emit(params.out.as_deref(), &content)
}
