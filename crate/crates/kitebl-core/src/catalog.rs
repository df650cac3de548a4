//! Named catalog of stock hoops: `trivial`, `godel:n`, `lukasiewicz:n`, and
//! the `product:(A,B)` / `osum:(A,B)` combinators over catalog names.

use crate::error::{Error, Result};
use crate::hoop::{direct_product, godel_chain, lukasiewicz_chain, ordinal_sum, trivial_hoop, FiniteHoop};

/// Builds the hoop named by a catalog expression, e.g. `godel:3` or
/// `product:(godel:2,lukasiewicz:3)`. Nested combinators need parentheses;
/// a single top-level comma may omit them.
pub fn emit(name: &str) -> Result<FiniteHoop> {
    let name = name.trim();
    if name == "trivial" {
        return Ok(trivial_hoop());
    }
    if let Some(rest) = name.strip_prefix("godel:") {
        return godel_chain(parse_chain_length(rest)?);
    }
    if let Some(rest) = name.strip_prefix("lukasiewicz:") {
        return lukasiewicz_chain(parse_chain_length(rest)?);
    }
    if let Some(rest) = name.strip_prefix("product:") {
        let (left, right) = split_pair(rest)?;
        return Ok(direct_product(&emit(left)?, &emit(right)?));
    }
    if let Some(rest) = name.strip_prefix("osum:") {
        let (left, right) = split_pair(rest)?;
        return Ok(ordinal_sum(&emit(left)?, &emit(right)?));
    }
    Err(Error::Parse(format!("unknown catalog name {name:?}")))
}

/// The catalog entries with their size descriptions, for `catalog list`.
pub fn list() -> Vec<(&'static str, &'static str)> {
    vec![
        ("trivial", "size 1"),
        ("godel:n", "size n (n >= 1)"),
        ("lukasiewicz:n", "size n (n >= 1)"),
        ("product:(A,B)", "size |A|*|B|"),
        ("osum:(A,B)", "size |A|+|B|-1"),
    ]
}

fn parse_chain_length(text: &str) -> Result<usize> {
    text.parse()
        .map_err(|_| Error::Parse(format!("bad chain length {text:?}")))
}

/// Splits `A,B` or `(A,B)` at the top-level comma, tracking parentheses.
fn split_pair(text: &str) -> Result<(&str, &str)> {
    let text = text.trim();
    let inner = match text.strip_prefix('(') {
        Some(rest) => rest
            .strip_suffix(')')
            .ok_or_else(|| Error::Parse(format!("unbalanced parentheses in {text:?}")))?,
        None => text,
    };
    let mut depth = 0usize;
    for (pos, ch) in inner.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth = depth
                    .checked_sub(1)
                    .ok_or_else(|| Error::Parse(format!("unbalanced parentheses in {text:?}")))?;
            }
            ',' if depth == 0 => return Ok((&inner[..pos], &inner[pos + 1..])),
            _ => {}
        }
    }
    Err(Error::Parse(format!(
        "expected two comma-separated names in {text:?}"
    )))
}
