//! Report emission. Every artifact carries its resolved configuration —
//! JSON embeds a `config` object, CSV leads with `# config:` comment lines —
//! so a run can be reproduced from the output alone.

use serde::Serialize;

use crate::defaults::Defaults;
use crate::error::CliError;

#[derive(Serialize)]
pub struct RunConfig<'a, P: Serialize> {
    pub command: &'a str,
    pub params: P,
    pub defaults: &'a Defaults,
}

/// JSON document: `{ "config": ..., "results": ... }`.
pub fn json_report<P: Serialize, R: Serialize>(
    config: &RunConfig<'_, P>,
    results: &R,
) -> Result<String, CliError> {
    #[derive(Serialize)]
    struct Doc<'a, P: Serialize, R: Serialize> {
        config: &'a RunConfig<'a, P>,
        results: &'a R,
    }
    let mut text = serde_json::to_string_pretty(&Doc { config, results })
        .map_err(|e| CliError::Io(e.to_string()))?;
    text.push('\n');
    Ok(text)
}

/// CSV document with the config echoed in leading comment lines.
pub fn csv_report<P: Serialize>(
    config: &RunConfig<'_, P>,
    header: &str,
    rows: &[String],
) -> Result<String, CliError> {
    let echo = serde_json::to_string(config).map_err(|e| CliError::Io(e.to_string()))?;
    let mut text = format!("# config: {echo}\n{header}\n");
    for row in rows {
        text.push_str(row);
        text.push('\n');
    }
    Ok(text)
}

/// Write to `--out` or stdout.
pub fn emit(out: Option<&str>, content: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, content).map_err(CliError::from),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}
