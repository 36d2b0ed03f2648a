//! The `cayley 1` text format.
//!
//! ```text
//! cayley 1
//! <n>
//! <n lines of n whitespace-separated 0-based indices>
//! names: <n labels>          (optional)
//! ```
//! Lines starting with `#` are comments. Index 0 must be the identity.

use std::path::Path;

use crate::error::{Error, Result};
use crate::group::{valid_name, validate_cayley, FiniteGroup};

fn format_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Format {
        line,
        msg: msg.into(),
    }
}

/// Parses cayley-v1 text. Labels from a `names:` line are attached to every element.
pub fn parse_cayley(text: &str) -> Result<FiniteGroup> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (ln, header) = lines
        .next()
        .ok_or_else(|| format_err(1, "missing header"))?;
    if header.split_whitespace().collect::<Vec<_>>() != ["cayley", "1"] {
        return Err(format_err(ln, "expected header `cayley 1`"));
    }
    let (ln, size) = lines
        .next()
        .ok_or_else(|| format_err(ln + 1, "missing order line"))?;
    let n: usize = size
        .parse()
        .map_err(|_| format_err(ln, "order must be a positive integer"))?;
    if n == 0 || n > crate::group::MAX_TABLE_ORDER {
        return Err(format_err(ln, format!("order {n} out of range")));
    }
    let mut rows = Vec::with_capacity(n);
    let mut last = ln;
    for _ in 0..n {
        let (ln, line) = lines
            .next()
            .ok_or_else(|| format_err(last + 1, format!("expected {n} table rows")))?;
        last = ln;
        let row: Vec<usize> = line
            .split_whitespace()
            .map(|t| {
                t.parse()
                    .map_err(|_| format_err(ln, format!("bad index {t:?}")))
            })
            .collect::<Result<_>>()?;
        if row.len() != n {
            return Err(format_err(
                ln,
                format!("row has {} entries, expected {n}", row.len()),
            ));
        }
        rows.push(row);
    }
    let mut labels = None;
    if let Some((ln, line)) = lines.next() {
        let rest = line
            .strip_prefix("names:")
            .ok_or_else(|| format_err(ln, "unexpected trailing content"))?;
        let names: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
        if names.len() != n {
            return Err(format_err(
                ln,
                format!("expected {n} names, found {}", names.len()),
            ));
        }
        // the identity may be labelled `1`, the sequence grammar's identity literal
        if let Some(bad) = names
            .iter()
            .enumerate()
            .find(|(i, s)| !valid_name(s) && !(*i == 0 && *s == "1"))
            .map(|(_, s)| s)
        {
            return Err(format_err(ln, format!("invalid name {bad:?}")));
        }
        labels = Some((ln, names));
        if let Some((ln, _)) = lines.next() {
            return Err(format_err(ln, "content after names line"));
        }
    }
    if rows[0].iter().enumerate().any(|(j, &v)| v != j) {
        return Err(format_err(3, "index 0 must be the identity"));
    }
    let group = validate_cayley(&rows).map_err(|e| Error::Validation(Box::new(e)))?;
    let names: Vec<(String, usize)> = match labels {
        Some((ln, names)) => {
            for (i, a) in names.iter().enumerate() {
                if names[..i].contains(a) {
                    return Err(format_err(ln, format!("duplicate name {a:?}")));
                }
            }
            names
                .into_iter()
                .enumerate()
                .filter(|(i, s)| !(*i == 0 && s == "1"))
                .map(|(i, s)| (s, i))
                .collect()
        }
        None => (1..n).map(|i| (format!("g{i}"), i)).collect(),
    };
    // skip the identity label when it is the only name (trivial group)
    let names: Vec<(String, usize)> = if n == 1 { Vec::new() } else { names };
    group.with_gen_names(names)
}

pub fn from_cayley_file(path: &Path) -> Result<FiniteGroup> {
    let text = std::fs::read_to_string(path)?;
    Ok(parse_cayley(&text)?.with_name(format!("cayley:{}", path.display())))
}

/// Renders a group in cayley-v1 form without a `names:` line.
pub fn render_cayley(g: &FiniteGroup) -> String {
    let n = g.order();
    let mut out = format!("cayley 1\n{n}\n");
    for a in 0..n {
        let row: Vec<String> = g.row(a).iter().map(|v| v.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}
