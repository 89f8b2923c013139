//! Plain-text code files.
//!
//! ```text
//! # comment
//! alpha 0 beta 4
//! rows 2
//! - | 3 2 1 0
//! - | 2 3 0 1
//! ```

use crate::error::{Error, Result};
use crate::vector::MixedVector;

use super::Z2Z4Code;

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn keyword_value(line: usize, tokens: &[&str], key: &str) -> Result<usize> {
    match tokens {
        [k, v] if *k == key => v.parse().map_err(|_| parse_err(line, format!("bad value {:?} for {}", v, key))),
        _ => Err(parse_err(line, format!("expected '{} <n>'", key))),
    }
}

pub fn parse_code(text: &str) -> Result<Z2Z4Code> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (ln, header) = lines.next().ok_or_else(|| parse_err(1, "missing 'alpha <α> beta <β>' header"))?;
    let tokens: Vec<&str> = header.split_whitespace().collect();
    if tokens.len() != 4 {
        return Err(parse_err(ln, "expected 'alpha <α> beta <β>'"));
    }
    let alpha = keyword_value(ln, &tokens[..2], "alpha")?;
    let beta = keyword_value(ln, &tokens[2..], "beta")?;

    let (ln, rows_line) = lines.next().ok_or_else(|| parse_err(ln + 1, "missing 'rows <k>' line"))?;
    let tokens: Vec<&str> = rows_line.split_whitespace().collect();
    let k = keyword_value(ln, &tokens, "rows")?;

    let mut rows = Vec::with_capacity(k);
    let mut last = ln;
    for _ in 0..k {
        let (ln, line) =
            lines.next().ok_or_else(|| parse_err(last + 1, format!("expected {} rows, found {}", k, rows.len())))?;
        let row: MixedVector = line.parse().map_err(|e: Error| parse_err(ln, e.to_string()))?;
        if row.alpha() != alpha || row.beta() != beta {
            return Err(parse_err(
                ln,
                format!(
                    "row has {} binary and {} quaternary entries, expected {} and {}",
                    row.alpha(),
                    row.beta(),
                    alpha,
                    beta
                ),
            ));
        }
        rows.push(row);
        last = ln;
    }
    if let Some((ln, _)) = lines.next() {
        return Err(parse_err(ln, format!("unexpected content after {} rows", k)));
    }
    if k == 0 {
        return Err(Error::EmptyCode);
    }
    Z2Z4Code::new(rows)
}

pub fn format_code(code: &Z2Z4Code) -> String {
    let mut s = format!("alpha {} beta {}\nrows {}\n", code.alpha(), code.beta(), code.generators().len());
    for row in code.generators() {
        s.push_str(&row.to_string());
        s.push('\n');
    }
    s
}
