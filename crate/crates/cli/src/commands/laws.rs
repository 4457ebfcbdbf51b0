//! `laws`: first/second-law verdicts for a transformation table file.

use serde::Serialize;

use bitthermo::transform::{check_first_law, check_second_law, TransformationTable};

use crate::args::Args;
use crate::defaults::Defaults;
use crate::error::CliError;
use crate::output::{emit, json_report, RunConfig};

#[derive(Serialize)]
struct Params {
    table: String,
    out: Option<String>,
}

#[derive(Serialize)]
struct FirstLawReport {
    holds: bool,
    violation: Option<FirstLawCounterexample>,
}

#[derive(Serialize)]
struct FirstLawCounterexample {
    entry_index: usize,
    mapping: String,
    input_weight: u64,
    output_weight: u64,
    extracted: u64,
}

#[derive(Serialize)]
struct SecondLawReport {
    holds: bool,
    collision: Option<CollisionReport>,
}

#[derive(Serialize)]
struct CollisionReport {
    first_index: usize,
    second_index: usize,
    first_mapping: String,
    second_mapping: String,
}

#[derive(Serialize)]
struct LawsReport {
    entries: usize,
    first_law: FirstLawReport,
    second_law: SecondLawReport,
}

fn mapping_text(table: &TransformationTable, index: usize) -> String {
    let e = &table.entries()[index];
    let side = |strings: &[bitthermo::BitString]| {
        strings
            .iter()
            .map(|s| s.to_text())
            .collect::<Vec<_>>()
            .join(",")
    };
    let mut text = format!("{} -> {}", side(&e.inputs), side(&e.outputs));
    if e.extracted > 0 {
        text.push_str(&format!(" | extracted={}", e.extracted));
    }
    text
}

pub fn run(args: &Args, defaults: &Defaults) -> Result<(), CliError> {
    let params = Params {
        table: args.required("table")?,
        out: args.get("out").map(String::from),
    };
    args.finish()?;

    let text = std::fs::read_to_string(&params.table)?;
    let table = TransformationTable::parse(&text)
        .map_err(|e| CliError::Validation(format!("{}: {e}", params.table)))?;

    let first = check_first_law(&table);
    let second = check_second_law(&table);
    let report = LawsReport {
        entries: table.len(),
        first_law: FirstLawReport {
            holds: first.holds,
            violation: first.violation.map(|v| FirstLawCounterexample {
                entry_index: v.entry_index,
                mapping: mapping_text(&table, v.entry_index),
                input_weight: v.input_weight,
                output_weight: v.output_weight,
                extracted: v.extracted,
            }),
        },
        second_law: SecondLawReport {
            holds: second.holds,
            collision: second.collision.map(|c| CollisionReport {
                first_index: c.first_index,
                second_index: c.second_index,
                first_mapping: mapping_text(&table, c.first_index),
                second_mapping: mapping_text(&table, c.second_index),
            }),
        },
    };

    let config = RunConfig {
        command: "laws",
        params: &params,
        defaults,
    };
    emit(params.out.as_deref(), &json_report(&config, &report)?)
}
