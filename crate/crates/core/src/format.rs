//! Plain-text group files.
//!
//! ```text
//! cay 1
//! name C3
//! spec cyclic:3        (optional)
//! order 3
//! 0 1 2
//! 1 2 0
//! 2 0 1
//! ```
//!
//! Row `i` lists the products `i*j`; index 0 must be the identity. Blank
//! lines after the table are ignored, nothing else is.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::group::Group;

pub const FORMAT_VERSION: u32 = 1;

/// Conventional extension for group files.
pub const EXTENSION: &str = "cay";

#[derive(Debug, Clone)]
pub struct GroupFile {
    pub version: u32,
    pub name: String,
    /// Construction spec the table was built from, if recorded.
    pub spec: Option<String>,
    pub group: Group,
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, column, message: message.into() }
}

/// Splits `line` into `keyword` and the remainder after one space.
fn header<'a>(lines: &mut std::iter::Peekable<impl Iterator<Item = (usize, &'a str)>>, keyword: &str) -> Result<(usize, &'a str)> {
    let (no, line) = lines.next().ok_or_else(|| parse_err(0, 1, format!("missing `{keyword}` line")))?;
    match line.strip_prefix(keyword).and_then(|r| r.strip_prefix(' ')) {
        Some(rest) => Ok((no, rest)),
        None => Err(parse_err(no, 1, format!("expected `{keyword} ...`"))),
    }
}

fn parse_number(text: &str, line: usize, column: usize) -> Result<usize> {
    text.parse::<usize>().map_err(|_| parse_err(line, column, format!("`{text}` is not a nonnegative integer")))
}

pub fn parse_group_str(text: &str) -> Result<GroupFile> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.strip_suffix('\r').unwrap_or(l))).peekable();

    let (no, v) = header(&mut lines, "cay")?;
    let version = parse_number(v.trim(), no, 5)? as u32;
    if version != FORMAT_VERSION {
        return Err(parse_err(no, 5, format!("unsupported format version {version}")));
    }
    let (_, name) = header(&mut lines, "name")?;
    let name = name.to_string();
    let spec = match lines.peek() {
        Some((_, l)) if l.starts_with("spec ") => Some(header(&mut lines, "spec")?.1.to_string()),
        _ => None,
    };
    let (no, o) = header(&mut lines, "order")?;
    let order = parse_number(o.trim(), no, 7)?;
    if order == 0 {
        return Err(parse_err(no, 7, "order must be positive"));
    }
    crate::group::check_cap(order)?;

    let mut rows = Vec::with_capacity(order);
    for i in 0..order {
        let (no, line) = lines.next().ok_or_else(|| parse_err(0, 1, format!("expected {order} table rows, found {i}")))?;
        let mut row = Vec::with_capacity(order);
        let mut column = 1;
        for token in line.split(' ') {
            if token.is_empty() {
                column += 1;
                continue;
            }
            if row.len() == order {
                return Err(parse_err(no, column, format!("row has more than {order} entries")));
            }
            row.push(parse_number(token, no, column)?);
            column += token.len() + 1;
        }
        if row.len() != order {
            return Err(parse_err(no, line.len() + 1, format!("row has {} entries, expected {order}", row.len())));
        }
        rows.push(row);
    }
    for (no, line) in lines {
        if !line.trim().is_empty() {
            return Err(parse_err(no, 1, "unexpected content after the table"));
        }
    }

    let group = Group::from_cayley_table(&rows, name.clone())?;
    Ok(GroupFile { version, name, spec, group })
}

pub fn parse_group_file(path: impl AsRef<Path>) -> Result<GroupFile> {
    parse_group_str(&std::fs::read_to_string(path)?)
}

pub fn write_group_string(g: &Group, spec: Option<&str>) -> String {
    let n = g.order();
    let mut out = String::with_capacity(n * n * 4 + 64);
    let _ = writeln!(out, "cay {FORMAT_VERSION}");
    let _ = writeln!(out, "name {}", g.name());
    if let Some(s) = spec {
        let _ = writeln!(out, "spec {s}");
    }
    let _ = writeln!(out, "order {n}");
    for a in g.elements() {
        for (j, &x) in g.row(a).iter().enumerate() {
            if j > 0 {
                out.push(' ');
            }
            let _ = write!(out, "{x}");
        }
        out.push('\n');
    }
    out
}

pub fn write_group_file(path: impl AsRef<Path>, g: &Group, spec: Option<&str>) -> Result<()> {
    std::fs::write(path, write_group_string(g, spec))?;
    Ok(())
}
