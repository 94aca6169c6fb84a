//! graph6 line streams.

use std::fs;
use std::io::BufRead;

use extremal_core::{from_graph6, Graph};

use crate::args::GraphSource;
use crate::CliError;

/// A decoded graph with the exact text it came from.
#[derive(Debug, Clone)]
pub struct InputGraph {
    pub graph6: String,
    pub graph: Graph,
}

/// Parses one graph per nonblank line; `origin` names the source in errors.
pub fn parse_lines(text: &str, origin: &str) -> Result<Vec<InputGraph>, CliError> {
    text.lines()
        .enumerate()
        .filter(|(_, line)| !line.trim().is_empty())
        .map(|(i, line)| {
            let graph = from_graph6(line).map_err(|e| CliError::Malformed(format!("{origin} line {}: {e}", i + 1)))?;
            let graph6 = line.trim().trim_start_matches(">>graph6<<").to_owned();
            Ok(InputGraph { graph6, graph })
        })
        .collect()
}

pub fn read_graphs(source: &GraphSource, stdin: &mut dyn BufRead) -> Result<Vec<InputGraph>, CliError> {
    if let Some(g6) = &source.g6 {
        return parse_lines(g6, "--g6");
    }
    if let Some(path) = &source.file {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::Malformed(format!("cannot read {}: {e}", path.display())))?;
        return parse_lines(&text, &path.display().to_string());
    }
    let mut text = String::new();
    stdin
        .read_to_string(&mut text)
        .map_err(|e| CliError::Malformed(format!("cannot read stdin: {e}")))?;
    parse_lines(&text, "stdin")
}

/// Exactly one graph is expected.
pub fn read_one(source: &GraphSource, stdin: &mut dyn BufRead) -> Result<InputGraph, CliError> {
    let mut graphs = read_graphs(source, stdin)?;
    match graphs.len() {
        1 => Ok(graphs.remove(0)),
        0 => Err(CliError::Malformed("no graph given".into())),
        k => Err(CliError::Usage(format!("expected one graph, got {k}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn skips_blank_lines_and_reports_line_numbers() {
        let graphs = parse_lines("Bw\n\n>>graph6<<C~\n", "test").unwrap();
        assert_eq!(graphs.len(), 2);
        assert_eq!(graphs[1].graph6, "C~");
        assert_eq!(graphs[1].graph.edge_count(), 6);
        let err = parse_lines("Bw\nC\n", "test").unwrap_err();
        assert!(matches!(err, CliError::Malformed(ref m) if m.starts_with("test line 2")));
    }
}
