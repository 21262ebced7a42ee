//! Reading JSON arguments given inline, as a file path, or `-` for stdin.

use num_rational::BigRational;
use serde_json::Value;
use solvkit::liealg::{parse_rational, CatalogId, QLieAlgebra};
use solvkit::wang::{matrix_from_json, WangExtension};
use solvkit::IntMatrix;

use crate::CliError;

/// Raw text of one input, kept for the digest.
#[derive(Clone, Debug)]
pub struct Input {
    pub text: String,
    pub value: Value,
}

pub fn load(arg: &str, stdin: Option<&str>) -> Result<Input, CliError> {
    let trimmed = arg.trim_start();
    let text = if trimmed.starts_with('{') || trimmed.starts_with('[') {
        arg.to_string()
    } else if arg == "-" {
        stdin
            .ok_or_else(|| CliError::input("io_error", "standard input was not read".into()))?
            .to_string()
    } else {
        std::fs::read_to_string(arg).map_err(|e| CliError::input("io_error", format!("{arg}: {e}")))?
    };
    let value = serde_json::from_str(&text).map_err(|e| CliError::input("invalid_json", e.to_string()))?;
    Ok(Input { text, value })
}

/// A bare matrix, `{"matrix": ...}`, or an extension with abelian fiber.
pub fn type_ii_matrix(v: &Value) -> Result<IntMatrix, CliError> {
    let m = if let Some(m) = v.get("matrix") {
        m
    } else if v.get("monodromy").is_some() {
        let w = WangExtension::from_json(v).map_err(CliError::wang)?;
        return match w.monodromy() {
            solvkit::wang::Monodromy::Abelian(a) => Ok(a.clone()),
            _ => Err(CliError::input(
                "invalid_extension",
                "expected a Z^3 fiber with k = 1".into(),
            )),
        };
    } else {
        v
    };
    matrix_from_json(m).map_err(CliError::wang)
}

/// `{"n", "B", "eps"}` or an extension with a `Lambda` fiber.
pub fn type_iii_extension(v: &Value) -> Result<WangExtension, CliError> {
    if v.get("monodromy").is_some() {
        return WangExtension::from_json(v).map_err(CliError::wang);
    }
    let (n, b, eps) = short_extension(v)?;
    WangExtension::heisenberg(n, b, eps, None).map_err(CliError::wang)
}

pub fn short_extension(v: &Value) -> Result<(u32, IntMatrix, i64), CliError> {
    let bad = |m: &str| CliError::input("invalid_extension", m.to_string());
    let n = v
        .get("n")
        .and_then(Value::as_u64)
        .filter(|n| *n >= 1 && *n <= u32::MAX as u64)
        .ok_or_else(|| bad("n must be a positive integer"))? as u32;
    let b = matrix_from_json(v.get("B").ok_or_else(|| bad("missing B"))?).map_err(CliError::wang)?;
    let eps = v
        .get("eps")
        .and_then(Value::as_i64)
        .ok_or_else(|| bad("eps must be 1 or -1"))?;
    Ok((n, b, eps))
}

pub fn gamma(v: &Value) -> Result<(BigRational, BigRational), CliError> {
    let zero = || BigRational::from_integer(0.into());
    match v.get("gamma") {
        None | Some(Value::Null) => Ok((zero(), zero())),
        Some(Value::Array(a)) if a.len() == 2 => {
            let p = parse_rational(&a[0]).map_err(CliError::lie)?;
            let q = parse_rational(&a[1]).map_err(CliError::lie)?;
            Ok((p, q))
        }
        Some(other) => Err(CliError::input(
            "invalid_extension",
            format!("gamma must be [p, q], got {other}"),
        )),
    }
}

pub enum AlgebraSource {
    Catalog(CatalogId),
    Inline(Box<QLieAlgebra>, Input),
}

/// A catalog id, or a structure-constant table given inline or as a file.
pub fn algebra(arg: &str, stdin: Option<&str>) -> Result<AlgebraSource, CliError> {
    if let Ok(id) = arg.parse::<CatalogId>() {
        return Ok(AlgebraSource::Catalog(id));
    }
    let looks_like_id = !arg.trim_start().starts_with(['{', '[']) && !std::path::Path::new(arg).exists() && arg != "-";
    if looks_like_id {
        return Err(CliError::input(
            "unknown_algebra",
            format!("{arg:?} is neither a catalog id nor a file"),
        ));
    }
    let input = load(arg, stdin)?;
    let g = QLieAlgebra::from_json(&input.value).map_err(CliError::lie)?;
    Ok(AlgebraSource::Inline(Box::new(g), input))
}
