//! Text formats: a plain edge list and McKay's graph6.
//!
//! Edge list: the first line holds the vertex count, every further non-empty
//! line holds one edge `u v`. LF and CRLF line endings are accepted.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
    let (first, header) = lines.next().ok_or_else(|| Error::Parse { line: 1, message: "empty input".into() })?;
    let n: usize = header.parse().map_err(|_| Error::Parse {
        line: first,
        message: format!("expected a vertex count, found {header:?}"),
    })?;
    let mut builder = GraphBuilder::new(n);
    for (line, content) in lines {
        if content.is_empty() {
            continue;
        }
        let err = |message: String| Error::Parse { line, message };
        let mut fields = content.split_whitespace();
        let (u, v) = match (fields.next(), fields.next(), fields.next()) {
            (Some(u), Some(v), None) => (u, v),
            _ => return Err(err(format!("expected \"u v\", found {content:?}"))),
        };
        let u: usize = u.parse().map_err(|_| err(format!("bad vertex id {u:?}")))?;
        let v: usize = v.parse().map_err(|_| err(format!("bad vertex id {v:?}")))?;
        builder.try_add_edge(u, v).map_err(|e| err(e.to_string()))?;
    }
    Ok(builder.build())
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

const HEADER: &str = ">>graph6<<";
const MAX_GRAPH6_N: usize = (1 << 36) - 1;

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty input".into()));
    }
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(Error::Graph6(format!("invalid character at offset {pos}")));
    }
    let sextet = |i: usize| -> Result<u64> {
        bytes
            .get(i)
            .map(|&b| u64::from(b - 63))
            .ok_or_else(|| Error::Graph6("truncated vertex count".into()))
    };
    let (n, body) = if bytes[0] != 126 {
        (sextet(0)? as usize, 1)
    } else if bytes.get(1) != Some(&126) {
        let n = (1..4).try_fold(0u64, |acc, i| Ok::<_, Error>((acc << 6) | sextet(i)?))?;
        (n as usize, 4)
    } else {
        let n = (2..8).try_fold(0u64, |acc, i| Ok::<_, Error>((acc << 6) | sextet(i)?))?;
        (n as usize, 8)
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let data = &bytes[body..];
    if data.len() != expected {
        return Err(Error::Graph6(format!(
            "expected {expected} data bytes for {n} vertices, found {}",
            data.len()
        )));
    }
    let mut builder = GraphBuilder::new(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - 63;
            if byte & (1 << (5 - k % 6)) != 0 {
                builder.add_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(builder.build())
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= MAX_GRAPH6_N, "graph6 cannot encode {n} vertices");
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|s| ((n >> (6 * s)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|s| ((n >> (6 * s)) & 63) as u8 + 63));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{generate, FamilySpec};

    #[test]
    fn edge_list_examples() {
        let k2 = parse_edge_list("2\n0 1").unwrap();
        assert_eq!(k2, generate(&FamilySpec::Complete(2)).unwrap());

        let c4 = parse_edge_list("4\n0 1\n1 2\n2 3\n3 0").unwrap();
        assert_eq!(c4, generate(&FamilySpec::Cycle(4)).unwrap());

        let dup = parse_edge_list("3\n0 1\n0 1").unwrap();
        assert_eq!(dup.edges().collect::<Vec<_>>(), vec![(0, 1)]);
        assert_eq!(dup.n(), 3);
    }

    #[test]
    fn edge_list_tolerates_crlf_and_blank_lines() {
        let g = parse_edge_list("3\r\n0 1\r\n\r\n1 2\r\n").unwrap();
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn edge_list_errors_name_the_line() {
        let line_of = |text: &str| match parse_edge_list(text) {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("expected parse error, got {other:?}"),
        };
        assert_eq!(line_of(""), 1);
        assert_eq!(line_of("x"), 1);
        assert_eq!(line_of("3\n0 1\n1"), 3);
        assert_eq!(line_of("3\n0 1\n\n1 3"), 4);
        assert_eq!(line_of("3\n2 2"), 2);
        assert_eq!(line_of("3\n0 1 2"), 2);
        assert_eq!(line_of("3\n0 -1"), 2);
    }

    #[test]
    fn edge_list_round_trip() {
        let p = generate(&FamilySpec::Petersen).unwrap();
        assert_eq!(parse_edge_list(&to_edge_list(&p)).unwrap(), p);
    }

    #[test]
    fn graph6_small() {
        assert_eq!(parse_graph6("A_").unwrap(), generate(&FamilySpec::Complete(2)).unwrap());
        assert_eq!(parse_graph6(">>graph6<<A_\n").unwrap().edge_count(), 1);
        assert_eq!(to_graph6(&generate(&FamilySpec::Complete(2)).unwrap()), "A_");
        assert_eq!(to_graph6(&Graph::edgeless(0)), "?");
        assert_eq!(parse_graph6("?").unwrap().n(), 0);
    }

    #[test]
    fn graph6_c5_matches_hand_encoding() {
        // Upper-triangle bits of 0-1-2-3-4-0 in column order:
        // 01 02 12 03 13 23 04 14 24 34 = 1 0 1 0 0 1 | 1 0 0 1 (0 0)
        // = 41, 36 -> 'h', 'c'; header 5 + 63 = 'D'.
        let c5 = generate(&FamilySpec::Cycle(5)).unwrap();
        assert_eq!(to_graph6(&c5), "Dhc");
        assert_eq!(parse_graph6("Dhc").unwrap(), c5);
    }

    #[test]
    fn graph6_errors() {
        assert!(matches!(parse_graph6(""), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6("D h"), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6("Dh"), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6("Dhcc"), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6("~"), Err(Error::Graph6(_))));
    }

    #[test]
    fn graph6_long_header() {
        let g = generate(&FamilySpec::Path(70)).unwrap();
        let s = to_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }
}
