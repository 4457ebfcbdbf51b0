//! Minimal flag parser: `--name value` pairs plus bare boolean switches.

use std::collections::BTreeMap;

use crate::error::CliError;

const BOOLEAN_FLAGS: &[&str] = &["packed", "inject-duplicates", "help"];

pub struct Args {
    pub command: String,
    values: BTreeMap<String, String>,
    switches: Vec<String>,
    consumed: std::cell::RefCell<Vec<String>>,
}

impl Args {
    pub fn parse(argv: &[String]) -> Result<Args, CliError> {
        let command = argv
            .first()
            .filter(|a| !a.starts_with("--"))
            .cloned()
            .ok_or_else(|| CliError::Validation("missing subcommand".into()))?;
        let mut values = BTreeMap::new();
        let mut switches = Vec::new();
        let mut i = 1;
        while i < argv.len() {
            let tok = &argv[i];
            let name = tok
                .strip_prefix("--")
                .ok_or_else(|| CliError::Validation(format!("unexpected token '{tok}'")))?;
            if BOOLEAN_FLAGS.contains(&name) {
                switches.push(name.to_string());
                i += 1;
            } else {
                let value = argv
                    .get(i + 1)
                    .ok_or_else(|| CliError::Validation(format!("--{name} needs a value")))?;
                values.insert(name.to_string(), value.clone());
                i += 2;
            }
        }
        Ok(Args {
            command,
            values,
            switches,
            consumed: Default::default(),
        })
    }

    pub fn get(&self, name: &str) -> Option<&str> {
        self.consumed.borrow_mut().push(name.to_string());
        self.values.get(name).map(|s| s.as_str())
    }

    pub fn required<T: std::str::FromStr>(&self, name: &str) -> Result<T, CliError> {
        self.parsed(name)?
            .ok_or_else(|| CliError::Validation(format!("--{name} is required")))
    }

    pub fn parsed<T: std::str::FromStr>(&self, name: &str) -> Result<Option<T>, CliError> {
        match self.get(name) {
            None => Ok(None),
            Some(raw) => raw
                .parse::<T>()
                .map(Some)
                .map_err(|_| CliError::Validation(format!("--{name}: cannot parse '{raw}'"))),
        }
    }

    /// Comma-separated list.
    pub fn parsed_list<T: std::str::FromStr>(
        &self,
        name: &str,
    ) -> Result<Option<Vec<T>>, CliError> {
        match self.get(name) {
            None => Ok(None),
            Some(raw) => raw
                .split(',')
                .map(|tok| tok.trim().parse::<T>())
                .collect::<Result<Vec<T>, _>>()
                .map(Some)
                .map_err(|_| CliError::Validation(format!("--{name}: cannot parse '{raw}'"))),
        }
    }

    pub fn switch(&self, name: &str) -> bool {
        self.consumed.borrow_mut().push(name.to_string());
        self.switches.iter().any(|s| s == name)
    }

    /// Reject flags no command consumed — typos fail loudly.
    pub fn finish(&self) -> Result<(), CliError> {
        let consumed = self.consumed.borrow();
        for name in self.values.keys().chain(self.switches.iter()) {
            if !consumed.iter().any(|c| c == name) {
                return Err(CliError::Validation(format!(
                    "unknown flag --{name} for '{}'",
                    self.command
                )));
            }
        }
        Ok(())
    }
}
