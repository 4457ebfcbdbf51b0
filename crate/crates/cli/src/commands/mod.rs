//! Subcommand implementations.

use bitthermo::bits::BitString;
use bitthermo::complexity::{estimator_by_id, ByteCompressorAdapter, ByteRle, ComplexityEstimator};

use crate::error::CliError;

pub mod carnot;
pub mod curve;
pub mod generate;
pub mod laws;
pub mod temp;
pub mod zeroth;

pub(crate) fn resolve_estimator(id: &str) -> Result<Box<dyn ComplexityEstimator>, CliError> {
    if id == "byte-rle" {
        return Ok(Box::new(ByteCompressorAdapter::new(ByteRle)));
    }
    estimator_by_id(id).ok_or_else(|| {
        CliError::Estimator(format!(
            "unknown estimator '{id}' (available: block-entropy, run-length, dictionary, byte-rle)"
        ))
    })
}

/// Read a string file: ASCII lines ('#' comments skipped), or a sequence of
/// packed records when `packed` is set.
pub(crate) fn read_strings(path: &str, packed: bool) -> Result<Vec<BitString>, CliError> {
    if packed {
        let data = std::fs::read(path)?;
        let mut out = Vec::new();
        let mut offset = 0usize;
        while offset < data.len() {
            if data.len() - offset < 8 {
                return Err(CliError::Validation(format!(
                    "{path}: truncated packed record"
                )));
            }
            let len = u64::from_le_bytes(data[offset..offset + 8].try_into().unwrap()) as usize;
            let record_len = 8 + len.div_ceil(8);
            let record = data
                .get(offset..offset + record_len)
                .ok_or_else(|| CliError::Validation(format!("{path}: truncated packed record")))?;
            out.push(
                BitString::from_packed(record)
                    .map_err(|e| CliError::Validation(format!("{path}: {e}")))?,
            );
            offset += record_len;
        }
        if out.is_empty() {
            return Err(CliError::Validation(format!("{path}: no strings")));
        }
        Ok(out)
    } else {
        let text = std::fs::read_to_string(path)?;
        let mut out = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            out.push(
                BitString::from_text(line)
                    .map_err(|e| CliError::Validation(format!("{path}: {e}")))?,
            );
        }
        if out.is_empty() {
            return Err(CliError::Validation(format!("{path}: no strings")));
        }
        Ok(out)
    }
}
