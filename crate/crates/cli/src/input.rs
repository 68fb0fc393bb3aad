//! Resolving inputs and metrics from the command line.

use std::path::PathBuf;

use aeppli_core::{corpus, parse_document, parse_metric, HermitianMetric, LieDocument};

use crate::CliError;

fn read(path: &str) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Read(PathBuf::from(path), e))
}

/// `corpus:NAME` or a file path.
pub fn document(input: &str) -> Result<LieDocument, CliError> {
    match input.strip_prefix("corpus:") {
        Some(name) => Ok(corpus::load(name)?),
        None => Ok(parse_document(&read(input)?)?),
    }
}

/// The `--metric` flag wins over a metric block in the document.
pub fn metric(doc: &LieDocument, flag: Option<&str>) -> Result<Option<HermitianMetric>, CliError> {
    let n = doc.equations.n();
    match flag {
        None => Ok(doc.hermitian_metric()?),
        Some(spec) => {
            let text = match spec.strip_prefix("file:") {
                Some(path) => read(path)?,
                None => spec.to_string(),
            };
            Ok(Some(parse_metric(&text, n)?.build(n)?))
        }
    }
}

/// Like [`metric`], falling back to the identity.
pub fn metric_or_identity(doc: &LieDocument, flag: Option<&str>) -> Result<HermitianMetric, CliError> {
    Ok(metric(doc, flag)?.unwrap_or_else(|| HermitianMetric::identity(doc.equations.n())))
}
