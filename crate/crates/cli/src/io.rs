//! Reading and writing the `.seq` text format and vertex listings.

use std::fs;
use std::io::Read;
use std::path::Path;

use snakebox_core::{parse_sequence, Dimension, TransitionSequence, Vertex};

use crate::CliError;

/// Reads `path`, or all of `stdin` when `path` is `None` or `-`.
pub fn read_input(path: Option<&Path>, stdin: &mut dyn Read) -> Result<String, CliError> {
    match path {
        Some(p) if p != Path::new("-") => fs::read_to_string(p)
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", p.display()))),
        _ => {
            let mut s = String::new();
            stdin
                .read_to_string(&mut s)
                .map_err(|e| CliError::Usage(format!("cannot read standard input: {e}")))?;
            Ok(s)
        }
    }
}

pub fn read_sequence(
    path: Option<&Path>,
    stdin: &mut dyn Read,
) -> Result<TransitionSequence, CliError> {
    let text = read_input(path, stdin)?;
    parse_sequence(&text).map_err(|e| CliError::Usage(format!("unparseable sequence: {e}")))
}

/// Parses a vertex listing; same separators as `.seq` files.
pub fn parse_vertices(text: &str, n: Dimension) -> Result<Vec<Vertex>, CliError> {
    let raw = parse_sequence(text)
        .map_err(|e| CliError::Usage(format!("unparseable vertex list: {e}")))?;
    raw.as_slice()
        .iter()
        .map(|&b| n.vertex(b).map_err(|e| CliError::Invalid(e.to_string())))
        .collect()
}

/// One line, comma separated, newline terminated.
pub fn format_sequence(seq: &TransitionSequence) -> String {
    format!("{seq}\n")
}

/// One vertex per line.
pub fn format_vertices(vertices: &[Vertex]) -> String {
    let mut s = String::with_capacity(vertices.len() * 6);
    for v in vertices {
        s.push_str(&v.to_string());
        s.push('\n');
    }
    s
}

pub fn dimension(n: u32) -> Result<Dimension, CliError> {
    Dimension::new(n).map_err(|e| CliError::Usage(e.to_string()))
}
