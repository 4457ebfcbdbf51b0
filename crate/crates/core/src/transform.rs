//! Explicit transformation tables and the conservation/reversibility checks.
//!
//! A [`TransformationTable`] lists every domain tuple with its image and an
//! optional count of extracted 1s (the work register). The first law holds
//! when every mapping conserves total Hamming weight including the register;
//! the second law holds when the mapping is injective — no two domain
//! tuples share an image, i.e. no information is lost.
//!
//! Text format, one mapping per line:
//!
//! ```text
//! in1,in2 -> out1,out2 | extracted=w
//! ```
//!
//! with the `| extracted=w` suffix optional and `#`-lines ignored.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::bits::{BitString, BitsError};

/// One mapping: input tuple, output tuple, extracted 1s.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableEntry {
    pub inputs: Vec<BitString>,
    pub outputs: Vec<BitString>,
    pub extracted: u64,
}

impl TableEntry {
    pub fn input_weight(&self) -> u64 {
        self.inputs.iter().map(|s| s.weight() as u64).sum()
    }

    pub fn output_weight(&self) -> u64 {
        self.outputs.iter().map(|s| s.weight() as u64).sum()
    }
}

/// Structural problems with a table.
#[derive(Debug, Clone, PartialEq)]
pub enum TableError {
    /// Entries must all share one arity, and outputs must match inputs
    /// position by position in count and length.
    Shape {
        entry: usize,
    },
    /// The same input tuple appears twice: the mapping would not be total.
    DuplicateInput {
        first: usize,
        second: usize,
    },
    /// Parse failure in the text form.
    Parse {
        line: usize,
        message: String,
    },
    Bits(BitsError),
}

impl fmt::Display for TableError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableError::Shape { entry } => write!(f, "entry {entry} has mismatched shape"),
            TableError::DuplicateInput { first, second } => {
                write!(f, "entries {first} and {second} share one input tuple")
            }
            TableError::Parse { line, message } => write!(f, "line {line}: {message}"),
            TableError::Bits(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for TableError {}

impl From<BitsError> for TableError {
    fn from(e: BitsError) -> Self {
        TableError::Bits(e)
    }
}

/// A total mapping on a finite set of string tuples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransformationTable {
    entries: Vec<TableEntry>,
}

impl TransformationTable {
    pub fn new(entries: Vec<TableEntry>) -> Result<TransformationTable, TableError> {
        let arity = entries.first().map(|e| e.inputs.len());
        let mut seen: BTreeMap<Vec<BitString>, usize> = BTreeMap::new();
        for (i, e) in entries.iter().enumerate() {
            let shape_ok = Some(e.inputs.len()) == arity
                && e.outputs.len() == e.inputs.len()
                && !e.inputs.is_empty()
                && e.inputs
                    .iter()
                    .zip(&e.outputs)
                    .all(|(a, b)| a.len() == b.len());
            if !shape_ok {
                return Err(TableError::Shape { entry: i });
            }
            if let Some(&first) = seen.get(&e.inputs) {
                return Err(TableError::DuplicateInput { first, second: i });
            }
            seen.insert(e.inputs.clone(), i);
        }
        Ok(TransformationTable { entries })
    }

    pub fn entries(&self) -> &[TableEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Fold the extracted counts into an explicit work register: every tuple
    /// gains one slot holding 0^register_len on the input side and
    /// 1^extracted 0^rest on the output side, after which the first law is a
    /// strict weight equality with no side channel.
    pub fn materialize_extraction(
        &self,
        register_len: usize,
    ) -> Result<TransformationTable, TableError> {
        let mut entries = Vec::with_capacity(self.entries.len());
        for (i, e) in self.entries.iter().enumerate() {
            if e.extracted as usize > register_len {
                return Err(TableError::Shape { entry: i });
            }
            let mut inputs = e.inputs.clone();
            let mut outputs = e.outputs.clone();
            inputs.push(BitString::repeated(false, register_len));
            outputs.push(BitString::from_bits(
                (0..register_len).map(|b| b < e.extracted as usize),
            ));
            entries.push(TableEntry {
                inputs,
                outputs,
                extracted: 0,
            });
        }
        TransformationTable::new(entries)
    }

    /// Parse the one-mapping-per-line text form.
    pub fn parse(text: &str) -> Result<TransformationTable, TableError> {
        let mut entries = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let parse_err = |message: String| TableError::Parse {
                line: lineno + 1,
                message,
            };
            let (mapping, extracted) = match line.split_once('|') {
                None => (line, 0u64),
                Some((m, suffix)) => {
                    let suffix = suffix.trim();
                    let value = suffix
                        .strip_prefix("extracted=")
                        .and_then(|v| v.trim().parse::<u64>().ok())
                        .ok_or_else(|| parse_err(format!("bad suffix '{suffix}'")))?;
                    (m, value)
                }
            };
            let (lhs, rhs) = mapping
                .split_once("->")
                .ok_or_else(|| parse_err(String::from("missing '->'")))?;
            let parse_side = |side: &str| -> Result<Vec<BitString>, TableError> {
                side.split(',')
                    .map(|tok| BitString::from_text(tok.trim()).map_err(TableError::from))
                    .collect()
            };
            entries.push(TableEntry {
                inputs: parse_side(lhs)?,
                outputs: parse_side(rhs)?,
                extracted,
            });
        }
        TransformationTable::new(entries)
    }

    /// Emit the text form.
    pub fn format(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            let side = |strings: &[BitString]| {
                strings
                    .iter()
                    .map(|s| s.to_text())
                    .collect::<Vec<_>>()
                    .join(",")
            };
            out.push_str(&side(&e.inputs));
            out.push_str(" -> ");
            out.push_str(&side(&e.outputs));
            if e.extracted > 0 {
                out.push_str(&format!(" | extracted={}", e.extracted));
            }
            out.push('\n');
        }
        out
    }
}

/// First-law violation: a mapping that fails weight conservation.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightViolation {
    pub entry_index: usize,
    pub input_weight: u64,
    pub output_weight: u64,
    pub extracted: u64,
}

/// Verdict of the first-law check, with a counterexample on failure.
#[derive(Debug, Clone, PartialEq)]
pub struct FirstLawOutcome {
    pub holds: bool,
    pub violation: Option<WeightViolation>,
}

/// The first law: every mapping preserves total Hamming weight, counting
/// declared extracted 1s as part of the output side.
pub fn check_first_law(table: &TransformationTable) -> FirstLawOutcome {
    for (i, e) in table.entries().iter().enumerate() {
        let input_weight = e.input_weight();
        let output_weight = e.output_weight();
        if input_weight != output_weight + e.extracted {
            return FirstLawOutcome {
                holds: false,
                violation: Some(WeightViolation {
                    entry_index: i,
                    input_weight,
                    output_weight,
                    extracted: e.extracted,
                }),
            };
        }
    }
    FirstLawOutcome {
        holds: true,
        violation: None,
    }
}

/// Second-law violation: two domain tuples with one image.
#[derive(Debug, Clone, PartialEq)]
pub struct Collision {
    pub first_index: usize,
    pub second_index: usize,
}

/// Verdict of the second-law check, with the colliding pair on failure.
#[derive(Debug, Clone, PartialEq)]
pub struct SecondLawOutcome {
    pub holds: bool,
    pub collision: Option<Collision>,
}

/// The second law: the mapping is logically reversible, i.e. injective on
/// its domain. The work register counts as part of the image.
pub fn check_second_law(table: &TransformationTable) -> SecondLawOutcome {
    let mut seen: BTreeMap<(Vec<BitString>, u64), usize> = BTreeMap::new();
    for (i, e) in table.entries().iter().enumerate() {
        let image = (e.outputs.clone(), e.extracted);
        if let Some(&first_index) = seen.get(&image) {
            return SecondLawOutcome {
                holds: false,
                collision: Some(Collision {
                    first_index,
                    second_index: i,
                }),
            };
        }
        seen.insert(image, i);
    }
    SecondLawOutcome {
        holds: true,
        collision: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binom::enumerate_microstates;
    use crate::bits::Macrostate;
    use alloc::vec;

    fn s(text: &str) -> BitString {
        BitString::from_text(text).unwrap()
    }

    fn pair_entry(a: &str, b: &str, x: &str, y: &str, extracted: u64) -> TableEntry {
        TableEntry {
            inputs: vec![s(a), s(b)],
            outputs: vec![s(x), s(y)],
            extracted,
        }
    }

    #[test]
    fn identity_on_weight_two_pairs_passes_both_laws() {
        let states = enumerate_microstates(Macrostate::new(3, 1).unwrap(), 100).unwrap();
        let mut entries = Vec::new();
        for a in &states {
            for b in &states {
                entries.push(TableEntry {
                    inputs: vec![a.clone(), b.clone()],
                    outputs: vec![a.clone(), b.clone()],
                    extracted: 0,
                });
            }
        }
        let table = TransformationTable::new(entries).unwrap();
        assert!(check_first_law(&table).holds);
        assert!(check_second_law(&table).holds);
    }

    #[test]
    fn weight_creation_fails_first_law() {
        let table = TransformationTable::new(vec![TableEntry {
            inputs: vec![s("01")],
            outputs: vec![s("11")],
            extracted: 0,
        }])
        .unwrap();
        let outcome = check_first_law(&table);
        assert!(!outcome.holds);
        let v = outcome.violation.unwrap();
        assert_eq!((v.input_weight, v.output_weight), (1, 2));
    }

    #[test]
    fn swap_passes_first_law() {
        let table = TransformationTable::new(vec![
            pair_entry("01", "11", "11", "01", 0),
            pair_entry("10", "00", "00", "10", 0),
        ])
        .unwrap();
        assert!(check_first_law(&table).holds);
        assert!(check_second_law(&table).holds);
    }

    #[test]
    fn extraction_counts_toward_conservation() {
        let table = TransformationTable::new(vec![TableEntry {
            inputs: vec![s("111")],
            outputs: vec![s("100")],
            extracted: 2,
        }])
        .unwrap();
        assert!(check_first_law(&table).holds);

        let materialized = table.materialize_extraction(4).unwrap();
        assert!(check_first_law(&materialized).holds);
        assert_eq!(materialized.entries()[0].extracted, 0);
        assert_eq!(materialized.entries()[0].outputs[1].to_text(), "1100");
    }

    #[test]
    fn constant_map_fails_second_law_with_collision() {
        let table = TransformationTable::new(vec![
            TableEntry {
                inputs: vec![s("01")],
                outputs: vec![s("01")],
                extracted: 0,
            },
            TableEntry {
                inputs: vec![s("10")],
                outputs: vec![s("01")],
                extracted: 0,
            },
        ])
        .unwrap();
        let outcome = check_second_law(&table);
        assert!(!outcome.holds);
        assert_eq!(
            outcome.collision,
            Some(Collision {
                first_index: 0,
                second_index: 1
            })
        );
    }

    #[test]
    fn pigeonhole_forces_a_collision() {
        // the six weight-2 microstates of n=4 squeezed into a 5-element codomain
        let states = enumerate_microstates(Macrostate::new(4, 2).unwrap(), 100).unwrap();
        let entries: Vec<TableEntry> = states
            .iter()
            .enumerate()
            .map(|(i, st)| TableEntry {
                inputs: vec![st.clone()],
                outputs: vec![states[i.min(4)].clone()],
                extracted: 0,
            })
            .collect();
        let table = TransformationTable::new(entries).unwrap();
        assert!(!check_second_law(&table).holds);
    }

    #[test]
    fn duplicate_domain_rejected() {
        let err = TransformationTable::new(vec![
            TableEntry {
                inputs: vec![s("01")],
                outputs: vec![s("01")],
                extracted: 0,
            },
            TableEntry {
                inputs: vec![s("01")],
                outputs: vec![s("10")],
                extracted: 0,
            },
        ])
        .unwrap_err();
        assert!(matches!(
            err,
            TableError::DuplicateInput {
                first: 0,
                second: 1
            }
        ));
    }

    #[test]
    fn shape_validation() {
        let err = TransformationTable::new(vec![TableEntry {
            inputs: vec![s("01")],
            outputs: vec![s("011")],
            extracted: 0,
        }])
        .unwrap_err();
        assert!(matches!(err, TableError::Shape { entry: 0 }));
    }

    #[test]
    fn text_format_round_trips() {
        let table = TransformationTable::new(vec![
            pair_entry("01", "11", "11", "00", 1),
            pair_entry("10", "00", "00", "10", 0),
        ])
        .unwrap();
        let text = table.format();
        assert!(text.contains("01,11 -> 11,00 | extracted=1"));
        let parsed = TransformationTable::parse(&text).unwrap();
        assert_eq!(parsed, table);

        let commented = "# heat flow demo\n01 -> 10\n\n";
        assert_eq!(TransformationTable::parse(commented).unwrap().len(), 1);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = TransformationTable::parse("01 -> 10\n01,10\n").unwrap_err();
        assert!(matches!(err, TableError::Parse { line: 2, .. }));
        let err = TransformationTable::parse("01 -> 10 | extracted=x\n").unwrap_err();
        assert!(matches!(err, TableError::Parse { line: 1, .. }));
    }
}
