//! `.sgp` Cayley table files.
//!
//! JSON form: `{"name", "size", "table", "labels"?, "meta"?}` with 0-based
//! entries. Plain-text form: the size on the first line, then `size` rows of
//! whitespace-separated entries. The reader picks the form from the first
//! non-space byte (`{` means JSON); the writer always emits JSON.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::FiniteSemigroup;

#[derive(Debug, Serialize, Deserialize)]
struct SgpFile {
    name: String,
    size: usize,
    table: Vec<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    meta: Option<serde_json::Value>,
}

pub fn serialize(s: &FiniteSemigroup) -> Vec<u8> {
    let file = SgpFile {
        name: s.name().to_string(),
        size: s.size(),
        table: s.rows().into_iter().map(|r| r.into_iter().map(|v| v as u64).collect()).collect(),
        labels: Some(s.labels().to_vec()),
        meta: None,
    };
    let mut out = serde_json::to_vec(&file).expect("sgp file serializes");
    out.push(b'\n');
    out
}

pub fn deserialize(bytes: &[u8]) -> Result<FiniteSemigroup> {
    let text = std::str::from_utf8(bytes).map_err(|e| Error::Parse {
        line: 1 + bytes[..e.valid_up_to()].iter().filter(|&&b| b == b'\n').count(),
        offset: e.valid_up_to(),
        message: "input is not UTF-8".into(),
    })?;
    match text.trim_start().as_bytes().first() {
        Some(b'{') => parse_json(text),
        Some(_) => parse_plain(text),
        None => Err(Error::Parse { line: 1, offset: 0, message: "empty input".into() }),
    }
}

fn parse_json(text: &str) -> Result<FiniteSemigroup> {
    let file: SgpFile = serde_json::from_str(text)
        .map_err(|e| Error::Parse { line: e.line(), offset: e.column(), message: e.to_string() })?;
    if file.table.len() != file.size {
        return Err(Error::Parse {
            line: 1,
            offset: 0,
            message: format!("size is {} but table has {} rows", file.size, file.table.len()),
        });
    }
    FiniteSemigroup::from_table(file.name, &file.table, file.labels)
}

fn parse_plain(text: &str) -> Result<FiniteSemigroup> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty());
    let (first_line, header) = lines.next().expect("non-empty input has a line");
    let size: usize = header.trim().parse().map_err(|_| Error::Parse {
        line: first_line,
        offset: header.len() - header.trim_start().len(),
        message: format!("expected element count, found {:?}", header.trim()),
    })?;
    let mut rows = Vec::with_capacity(size);
    for (line_no, line) in lines {
        let mut row = Vec::with_capacity(size);
        let mut offset = 0;
        for token in line.split_whitespace() {
            let at = offset + line[offset..].find(token).unwrap_or(0);
            offset = at + token.len();
            let v: u64 = token.parse().map_err(|_| Error::Parse {
                line: line_no,
                offset: at,
                message: format!("expected a table entry, found {token:?}"),
            })?;
            row.push(v);
        }
        rows.push(row);
    }
    if rows.len() != size {
        return Err(Error::Parse {
            line: first_line,
            offset: 0,
            message: format!("size is {size} but {} rows follow", rows.len()),
        });
    }
    FiniteSemigroup::from_table("table", &rows, None)
}

pub fn read_file(path: impl AsRef<std::path::Path>) -> Result<FiniteSemigroup> {
    deserialize(&std::fs::read(path)?)
}

pub fn write_file(path: impl AsRef<std::path::Path>, s: &FiniteSemigroup) -> Result<()> {
    std::fs::write(path, serialize(s))?;
    Ok(())
}
