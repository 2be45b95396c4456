use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use anyhow::Context;
use gpn_core::family::{generate, FamilySpec};
use gpn_core::io::{parse_edge_list, parse_graph6};
use gpn_core::Graph;

/// Where a graph comes from: `g6:<string>`, `gen:<spec>` or a file path.
#[derive(Clone, Debug, PartialEq)]
pub enum GraphSource {
    File(PathBuf),
    Graph6(String),
    Generator(FamilySpec),
}

impl FromStr for GraphSource {
    type Err = String;

    fn from_str(s: &str) -> Result<GraphSource, String> {
        if let Some(text) = s.strip_prefix("g6:") {
            Ok(GraphSource::Graph6(text.to_string()))
        } else if let Some(spec) = s.strip_prefix("gen:") {
            spec.parse().map(GraphSource::Generator).map_err(|e| e.to_string())
        } else if s.is_empty() {
            Err("empty input".into())
        } else {
            Ok(GraphSource::File(s.into()))
        }
    }
}

impl fmt::Display for GraphSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSource::File(path) => write!(f, "{}", path.display()),
            GraphSource::Graph6(text) => write!(f, "g6:{text}"),
            GraphSource::Generator(spec) => write!(f, "gen:{spec}"),
        }
    }
}

impl GraphSource {
    /// Files whose first non-blank line is a vertex count are edge lists;
    /// anything else is read as graph6.
    pub fn load(&self) -> anyhow::Result<Graph> {
        Ok(match self {
            GraphSource::Graph6(text) => parse_graph6(text)?,
            GraphSource::Generator(spec) => generate(spec)?,
            GraphSource::File(path) => {
                let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
                let first = text.lines().map(str::trim).find(|l| !l.is_empty()).unwrap_or("");
                if !first.is_empty() && first.bytes().all(|b| b.is_ascii_digit()) {
                    parse_edge_list(&text)?
                } else {
                    parse_graph6(&text)?
                }
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prefixes() {
        assert_eq!("g6:Dhc".parse::<GraphSource>().unwrap(), GraphSource::Graph6("Dhc".into()));
        assert_eq!("gen:petersen".parse::<GraphSource>().unwrap(), GraphSource::Generator(FamilySpec::Petersen));
        assert_eq!("graph.txt".parse::<GraphSource>().unwrap(), GraphSource::File("graph.txt".into()));
        assert!("gen:nonsense:3".parse::<GraphSource>().is_err());
        assert_eq!("gen:grid:3x4".parse::<GraphSource>().unwrap().to_string(), "gen:grid:3x4");
    }

    #[test]
    fn files_of_both_formats() {
        let dir = std::env::temp_dir().join(format!("gpn-input-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let edges = dir.join("p3.txt");
        std::fs::write(&edges, "3\n0 1\n1 2\n").unwrap();
        let g6 = dir.join("c5.g6");
        std::fs::write(&g6, "Dhc\n").unwrap();
        assert_eq!(GraphSource::File(edges).load().unwrap().edge_count(), 2);
        assert_eq!(GraphSource::File(g6).load().unwrap().edge_count(), 5);
        assert!(GraphSource::File(dir.join("missing")).load().is_err());
        std::fs::remove_dir_all(dir).unwrap();
    }
}
