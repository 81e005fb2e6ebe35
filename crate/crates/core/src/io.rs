//! Text formats: plain edge lists, DIMACS `p edge` files, and path lines.
//!
//! Edge list: one `u v` pair of 0-based ids per line. Lines starting with `#`
//! are comments, except `# n <count>`, which fixes the vertex count so that
//! isolated trailing vertices survive a round trip. Without that header the
//! vertex count is `max id + 1`.
//!
//! DIMACS: `c` comment lines, exactly one `p edge <n> <m>` line, then
//! `e <u> <v>` lines with 1-based ids.

use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, Path};

/// Largest vertex count any parser will allocate for.
pub const MAX_VERTICES: usize = 1 << 24;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum GraphFormat {
    #[default]
    EdgeList,
    Dimacs,
}

impl FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edgelist" | "edge-list" => Ok(GraphFormat::EdgeList),
            "dimacs" => Ok(GraphFormat::Dimacs),
            other => Err(Error::InvalidParams(format!("unknown graph format {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseWarning {
    /// The `p` line declared a different edge count than the number of
    /// distinct edges read. The actual count is used.
    EdgeCountMismatch { declared: usize, actual: usize },
}

impl fmt::Display for ParseWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseWarning::EdgeCountMismatch { declared, actual } => write!(
                f,
                "declared {declared} edges but read {actual} distinct edges"
            ),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Parsed {
    pub graph: Graph,
    pub warnings: Vec<ParseWarning>,
}

/// Parses either format.
pub fn parse_graph(text: &[u8], format: GraphFormat) -> Result<Parsed> {
    match format {
        GraphFormat::EdgeList => Ok(Parsed {
            graph: parse_edge_list(text)?,
            warnings: Vec::new(),
        }),
        GraphFormat::Dimacs => parse_dimacs(text),
    }
}

/// Yields `(1-based line number, trimmed line)` for every line, failing on
/// invalid UTF-8.
fn lines(text: &[u8]) -> impl Iterator<Item = Result<(usize, &str)>> {
    text.split(|&b| b == b'\n').enumerate().map(|(i, raw)| {
        let line = i + 1;
        std::str::from_utf8(raw)
            .map(|s| (line, s.trim()))
            .map_err(|_| Error::parse(line, "invalid UTF-8"))
    })
}

fn parse_id(token: &str, line: usize) -> Result<usize> {
    let id: usize = token
        .parse()
        .map_err(|_| Error::parse(line, format!("expected a vertex id, found {token:?}")))?;
    if id >= MAX_VERTICES {
        return Err(Error::parse(line, format!("vertex id {id} exceeds {MAX_VERTICES}")));
    }
    Ok(id)
}

pub fn parse_edge_list(text: &[u8]) -> Result<Graph> {
    let mut declared: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut max_id: Option<usize> = None;

    for item in lines(text) {
        let (line, s) = item?;
        if s.is_empty() {
            continue;
        }
        if let Some(comment) = s.strip_prefix('#') {
            let mut tokens = comment.split_whitespace();
            if let (Some("n"), Some(count), None) = (tokens.next(), tokens.next(), tokens.next()) {
                let count: usize = count.parse().map_err(|_| {
                    Error::parse(line, format!("bad vertex count {count:?} in header"))
                })?;
                if count > MAX_VERTICES {
                    return Err(Error::parse(line, format!("vertex count {count} exceeds {MAX_VERTICES}")));
                }
                match declared {
                    Some((prev, _)) if prev != count => {
                        return Err(Error::parse(
                            line,
                            format!("vertex count {count} conflicts with earlier header {prev}"),
                        ))
                    }
                    Some(_) => {}
                    None => declared = Some((count, line)),
                }
            }
            continue;
        }
        let mut tokens = s.split_whitespace();
        let (Some(a), Some(b), None) = (tokens.next(), tokens.next(), tokens.next()) else {
            return Err(Error::parse(line, "expected two vertex ids"));
        };
        let u = parse_id(a, line)?;
        let v = parse_id(b, line)?;
        if u == v {
            return Err(Error::SelfLoop { line, vertex: u });
        }
        max_id = Some(max_id.map_or(u.max(v), |m| m.max(u).max(v)));
        edges.push((u, v, line));
    }

    let n = match declared {
        Some((count, _)) => {
            if let Some(&(u, v, line)) = edges.iter().find(|&&(u, v, _)| u.max(v) >= count) {
                return Err(Error::parse(
                    line,
                    format!("vertex {} outside declared count {count}", u.max(v)),
                ));
            }
            count
        }
        None => max_id.map_or(0, |m| m + 1),
    };
    Graph::from_edges(n, edges.into_iter().map(|(u, v, _)| (u, v)))
}

pub fn parse_dimacs(text: &[u8]) -> Result<Parsed> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();

    for item in lines(text) {
        let (line, s) = item?;
        if s.is_empty() {
            continue;
        }
        let mut tokens = s.split_whitespace();
        match tokens.next() {
            Some("c") => continue,
            Some("p") => {
                if header.is_some() {
                    return Err(Error::parse(line, "duplicate p-line"));
                }
                let (Some(kind), Some(n), Some(m), None) =
                    (tokens.next(), tokens.next(), tokens.next(), tokens.next())
                else {
                    return Err(Error::parse(line, "expected `p edge <n> <m>`"));
                };
                if kind != "edge" && kind != "col" {
                    return Err(Error::parse(line, format!("unsupported problem type {kind:?}")));
                }
                let n: usize = n
                    .parse()
                    .map_err(|_| Error::parse(line, format!("bad vertex count {n:?}")))?;
                let m: usize = m
                    .parse()
                    .map_err(|_| Error::parse(line, format!("bad edge count {m:?}")))?;
                if n > MAX_VERTICES {
                    return Err(Error::parse(line, format!("vertex count {n} exceeds {MAX_VERTICES}")));
                }
                header = Some((n, m));
            }
            Some("e") => {
                let Some((n, _)) = header else {
                    return Err(Error::parse(line, "missing p-line before first edge"));
                };
                let (Some(a), Some(b), None) = (tokens.next(), tokens.next(), tokens.next()) else {
                    return Err(Error::parse(line, "expected `e <u> <v>`"));
                };
                let endpoint = |tok: &str| -> Result<usize> {
                    let id: usize = tok
                        .parse()
                        .map_err(|_| Error::parse(line, format!("expected a vertex id, found {tok:?}")))?;
                    if id == 0 || id > n {
                        return Err(Error::parse(
                            line,
                            format!("endpoint {id} outside [1, {n}]"),
                        ));
                    }
                    Ok(id - 1)
                };
                let u = endpoint(a)?;
                let v = endpoint(b)?;
                if u == v {
                    return Err(Error::SelfLoop { line, vertex: u });
                }
                edges.push((u, v));
            }
            Some(other) => {
                return Err(Error::parse(line, format!("unknown line type {other:?}")));
            }
            None => unreachable!("blank lines skipped above"),
        }
    }

    let Some((n, declared_m)) = header else {
        return Err(Error::parse(0, "missing p-line"));
    };
    let graph = Graph::from_edges(n, edges)?;
    let mut warnings = Vec::new();
    if graph.m() != declared_m {
        warnings.push(ParseWarning::EdgeCountMismatch {
            declared: declared_m,
            actual: graph.m(),
        });
    }
    Ok(Parsed { graph, warnings })
}

/// Parses a path file: one line of space-separated vertex ids. Blank lines
/// and `#` comments are ignored.
pub fn parse_path(text: &[u8]) -> Result<Path> {
    let mut found: Option<Vec<usize>> = None;
    for item in lines(text) {
        let (line, s) = item?;
        if s.is_empty() || s.starts_with('#') {
            continue;
        }
        if found.is_some() {
            return Err(Error::parse(line, "path must be on a single line"));
        }
        let ids = s
            .split_whitespace()
            .map(|tok| parse_id(tok, line))
            .collect::<Result<Vec<_>>>()?;
        found = Some(ids);
    }
    found
        .map(Path::new)
        .ok_or_else(|| Error::parse(0, "no path line found"))
}

/// Writes `g` as an edge list with a `# n <count>` header.
pub fn write_edge_list<W: Write>(g: &Graph, mut out: W) -> io::Result<()> {
    writeln!(out, "# n {}", g.n())?;
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}")?;
    }
    Ok(())
}

pub fn write_dimacs<W: Write>(g: &Graph, mut out: W) -> io::Result<()> {
    writeln!(out, "p edge {} {}", g.n(), g.m())?;
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_edge_path() {
        let g = parse_edge_list(b"0 1\n1 2\n").unwrap();
        assert_eq!((g.n(), g.m()), (3, 2));
        assert_eq!(g.neighbors(1), &[0, 2]);
    }

    #[test]
    fn symmetric_duplicate_collapses() {
        let g = parse_edge_list(b"0 1\n1 0\n").unwrap();
        assert_eq!((g.n(), g.m()), (2, 1));
    }

    #[test]
    fn max_id_rule_with_comment() {
        let g = parse_edge_list(b"# c\n3 0\n").unwrap();
        assert_eq!((g.n(), g.m()), (4, 1));
        assert_eq!(g.degree(1), 0);
        assert_eq!(g.degree(2), 0);
    }

    #[test]
    fn header_sets_vertex_count() {
        let g = parse_edge_list(b"# n 1\n").unwrap();
        assert_eq!((g.n(), g.m()), (1, 0));
        let g = parse_edge_list(b"# n 5\n0 1\n").unwrap();
        assert_eq!(g.n(), 5);
        let err = parse_edge_list(b"# n 2\n0 2\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
        assert!(parse_edge_list(b"# n 2\n# n 3\n").is_err());
    }

    #[test]
    fn edge_list_errors_carry_line_numbers() {
        match parse_edge_list(b"0 1\n\n1 x\n") {
            Err(Error::Parse { line: 3, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        match parse_edge_list(b"0 1\n2 2\n") {
            Err(Error::SelfLoop { line: 2, vertex: 2 }) => {}
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_edge_list(b"0 1 2\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_edge_list(b"0\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_edge_list(b"-1 2\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_edge_list(b"0 99999999999\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_edge_list(b"0 \xff\n"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn empty_edge_list_is_empty_graph() {
        let g = parse_edge_list(b"\n# nothing\n").unwrap();
        assert!(g.is_empty());
    }

    #[test]
    fn crlf_lines_accepted() {
        let g = parse_edge_list(b"0 1\r\n1 2\r\n").unwrap();
        assert_eq!(g.m(), 2);
    }

    #[test]
    fn dimacs_direct_translation() {
        let p = parse_dimacs(b"p edge 3 2\ne 1 2\ne 2 3\n").unwrap();
        assert_eq!((p.graph.n(), p.graph.m()), (3, 2));
        assert_eq!(p.graph.neighbors(1), &[0, 2]);
        assert!(p.warnings.is_empty());
    }

    #[test]
    fn dimacs_dedup_warns() {
        let p = parse_dimacs(b"c hi\np edge 2 2\ne 1 2\ne 2 1\n").unwrap();
        assert_eq!((p.graph.n(), p.graph.m()), (2, 1));
        assert_eq!(
            p.warnings,
            vec![ParseWarning::EdgeCountMismatch { declared: 2, actual: 1 }]
        );
        let p = parse_dimacs(b"p edge 2 1\ne 1 2\ne 2 1\n").unwrap();
        assert_eq!(p.graph.m(), 1);
        assert!(p.warnings.is_empty());
    }

    #[test]
    fn dimacs_declared_n_is_authoritative() {
        let p = parse_dimacs(b"p edge 5 1\ne 1 2\n").unwrap();
        assert_eq!(p.graph.n(), 5);
    }

    #[test]
    fn dimacs_errors() {
        let err = parse_dimacs(b"e 1 2\n").unwrap_err();
        assert!(err.to_string().contains("missing p-line"), "{err}");
        let err = parse_dimacs(b"").unwrap_err();
        assert!(err.to_string().contains("missing p-line"), "{err}");
        assert!(matches!(
            parse_dimacs(b"p edge 2 1\ne 1 3\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_dimacs(b"p edge 2 1\ne 0 1\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_dimacs(b"p edge 2 1\ne 2 2\n"),
            Err(Error::SelfLoop { line: 2, vertex: 1 })
        ));
        assert!(parse_dimacs(b"p edge 2 1\np edge 2 1\n").is_err());
        assert!(parse_dimacs(b"p edge 2\n").is_err());
        assert!(parse_dimacs(b"p edge 2 1\nx 1 2\n").is_err());
    }

    #[test]
    fn path_line() {
        assert_eq!(parse_path(b"3 2 1 0\n").unwrap().vertices(), &[3, 2, 1, 0]);
        assert_eq!(parse_path(b"# comment\n\n5\n").unwrap().vertices(), &[5]);
        assert!(parse_path(b"").is_err());
        assert!(parse_path(b"1 2\n3 4\n").is_err());
        assert!(parse_path(b"1 a\n").is_err());
    }

    #[test]
    fn writers_round_trip() {
        let g = Graph::from_edges(5, [(0, 1), (3, 1)]).unwrap();
        let mut buf = Vec::new();
        write_edge_list(&g, &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf.clone()).unwrap(), "# n 5\n0 1\n1 3\n");
        assert_eq!(parse_edge_list(&buf).unwrap(), g);

        let mut buf = Vec::new();
        write_dimacs(&g, &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf.clone()).unwrap(), "p edge 5 2\ne 1 2\ne 2 4\n");
        assert_eq!(parse_dimacs(&buf).unwrap().graph, g);
    }
}
