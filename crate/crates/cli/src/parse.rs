//! Parsers for the small textual forms accepted on the command line.

use schurkit::{Partition, Subset};

use crate::CliError;

/// Strips one pair of matching brackets, if present.
fn unwrap_brackets(s: &str) -> &str {
    let s = s.trim();
    for (open, close) in [('{', '}'), ('(', ')'), ('[', ']')] {
        if let Some(inner) = s.strip_prefix(open).and_then(|r| r.strip_suffix(close)) {
            return inner.trim();
        }
    }
    s
}

fn numbers(s: &str) -> Result<Vec<usize>, CliError> {
    let inner = unwrap_brackets(s);
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|x| {
            x.trim()
                .parse::<usize>()
                .map_err(|_| CliError::Usage(format!("{x:?} is not a non-negative integer in {s:?}")))
        })
        .collect()
}

/// `{1,3}`, `1,3`, `{}` or the empty string, as a subset of `[universe]`.
pub fn subset(s: &str, universe: usize) -> Result<Subset, CliError> {
    Ok(Subset::new(universe, numbers(s)?)?)
}

/// `3,1`, `(3,1)` or `[3,1]`; parts in any order.
pub fn partition(s: &str) -> Result<Partition, CliError> {
    let parts = numbers(s)?;
    if parts.is_empty() {
        return Err(CliError::Usage("empty partition".into()));
    }
    Ok(Partition::from_unsorted(parts)?)
}

pub fn list(s: &str) -> Result<Vec<usize>, CliError> {
    numbers(s)
}

/// The permutation sets `schur-expand` understands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SetSpec {
    Sn,
    Conj(Partition),
    InvK(usize),
    ImajK(usize),
    InvDes(String),
    URoot(u64),
    Caterpillars,
}

impl SetSpec {
    pub fn parse(s: &str) -> Result<Self, CliError> {
        let (head, arg) = match s.split_once(':') {
            Some((h, a)) => (h, Some(a)),
            None => (s, None),
        };
        let need = |what: &str| {
            arg.ok_or_else(|| CliError::Usage(format!("set {head:?} needs an argument, as in {head}:{what}")))
        };
        let int = |a: &str| {
            a.trim()
                .parse::<usize>()
                .map_err(|_| CliError::Usage(format!("{a:?} is not a non-negative integer")))
        };
        let spec = match head {
            "sn" => SetSpec::Sn,
            "caterpillars" => SetSpec::Caterpillars,
            "conj" => SetSpec::Conj(partition(need("3,1")?)?),
            "invk" => SetSpec::InvK(int(need("2")?)?),
            "imajk" => SetSpec::ImajK(int(need("2")?)?),
            "invdes" => SetSpec::InvDes(need("{1,3}")?.to_string()),
            "uroot" => {
                let d = int(need("2")?)?;
                if d == 0 {
                    return Err(CliError::Usage("uroot order must be positive".into()));
                }
                SetSpec::URoot(d as u64)
            }
            _ => {
                return Err(CliError::Usage(format!(
                    "unknown set {s:?}; expected sn, conj:λ, invk:k, imajk:k, invdes:J, uroot:d or caterpillars"
                )))
            }
        };
        if arg.is_some() && matches!(spec, SetSpec::Sn | SetSpec::Caterpillars) {
            return Err(CliError::Usage(format!("set {head:?} takes no argument")));
        }
        Ok(spec)
    }
}
