//! Parsing of `--group` descriptors.

use std::fs;

use jacobi_dim::BranchingScheme;
use serde_json::Value;

use crate::CliError;

pub struct GroupArg {
    /// The descriptor as typed, used in text and CSV output.
    pub label: String,
    pub scheme: BranchingScheme,
    /// Custom schemes are reported as their JSON object; named groups by label.
    pub json: Value,
}

pub fn parse_group(descriptor: &str) -> Result<GroupArg, CliError> {
    let (family, arg) = descriptor.split_once(':').ok_or_else(|| {
        CliError::Usage(format!(
            "unknown group descriptor {descriptor:?}; expected gammaN:<N>, gamma0:<N>, gamma1:<N> or scheme:<path>"
        ))
    })?;
    let level = || {
        arg.parse::<i64>()
            .map_err(|_| CliError::Usage(format!("invalid level {arg:?} in {descriptor:?}")))
    };
    let (scheme, json) = match family {
        "gammaN" => (
            BranchingScheme::principal_congruence(level()?)?,
            Value::from(descriptor),
        ),
        "gamma0" => (BranchingScheme::gamma0(level()?)?, Value::from(descriptor)),
        "gamma1" => (BranchingScheme::gamma1(level()?)?, Value::from(descriptor)),
        "scheme" => {
            let text = fs::read_to_string(arg)
                .map_err(|e| CliError::Usage(format!("cannot read scheme file {arg:?}: {e}")))?;
            let scheme: BranchingScheme = serde_json::from_str(&text)
                .map_err(|e| CliError::Usage(format!("malformed scheme {arg:?}: {e}")))?;
            let json = serde_json::to_value(&scheme).expect("scheme serializes");
            (scheme, json)
        }
        _ => {
            return Err(CliError::Usage(format!(
                "unknown group family {family:?}; expected gammaN, gamma0, gamma1 or scheme"
            )))
        }
    };
    Ok(GroupArg {
        label: descriptor.to_owned(),
        scheme,
        json,
    })
}

/// Inclusive range `a..b`, or a single integer.
pub fn parse_range(text: &str) -> Result<(i64, i64), CliError> {
    let bad = || {
        CliError::Usage(format!(
            "invalid range {text:?}; expected a..b or a single integer"
        ))
    };
    let (lo, hi) = match text.split_once("..") {
        Some((lo, hi)) => (
            lo.trim().parse().map_err(|_| bad())?,
            hi.trim().parse().map_err(|_| bad())?,
        ),
        None => {
            let v = text.trim().parse().map_err(|_| bad())?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(CliError::Usage(format!("range {text:?} is empty")));
    }
    Ok((lo, hi))
}
