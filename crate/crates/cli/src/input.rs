use std::fs;
use std::path::{Path, PathBuf};

use clap::Args;
use serde::de::DeserializeOwned;
use signix_core::{FamilySpec, GraphDocument, SignedCompleteGraph};

use crate::error::CliError;

/// A signed complete graph given either as a document or as a family in `K_n`.
#[derive(Debug, Clone, Args)]
pub struct GraphArgs {
    /// Graph document with fields `n` and `negative_edges`.
    #[arg(long, conflicts_with = "family", required_unless_present = "family")]
    pub graph: Option<PathBuf>,

    /// Negative subgraph as a family, e.g. `u1:4` or `qst:2,1`.
    #[arg(long, requires = "n")]
    pub family: Option<String>,

    /// Order of the ambient complete graph (required with --family).
    #[arg(long)]
    pub n: Option<usize>,
}

impl GraphArgs {
    pub fn resolve(&self) -> Result<SignedCompleteGraph, CliError> {
        match (&self.graph, &self.family) {
            (Some(path), None) => {
                let g = read_graph(path)?;
                if let Some(n) = self.n {
                    if n != g.order() {
                        return Err(CliError::Usage(format!(
                            "--n {n} disagrees with n = {} in {}",
                            g.order(),
                            path.display()
                        )));
                    }
                }
                Ok(g)
            }
            (None, Some(family)) => {
                let n = self.n.ok_or_else(|| CliError::Usage("--family needs --n".into()))?;
                from_family(family, n)
            }
            _ => Err(CliError::Usage("give exactly one of --graph and --family".into())),
        }
    }
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

pub fn read_graph(path: &Path) -> Result<SignedCompleteGraph, CliError> {
    let doc: GraphDocument = read_json(path)?;
    Ok(SignedCompleteGraph::try_from(&doc)?)
}

pub fn from_family(family: &str, n: usize) -> Result<SignedCompleteGraph, CliError> {
    let spec: FamilySpec = family.parse()?;
    Ok(SignedCompleteGraph::new(n, &spec.build()?)?)
}

/// Parses a comparison operand: `family:<dsl>,n:<n>`, `graph:<path>` or a
/// bare path to a graph document.
pub fn parse_operand(s: &str) -> Result<SignedCompleteGraph, CliError> {
    if let Some(rest) = s.strip_prefix("family:") {
        let (dsl, n) = rest
            .rsplit_once(",n:")
            .ok_or_else(|| CliError::Usage(format!("operand {s:?} needs a trailing ,n:<order>")))?;
        let n = n
            .parse()
            .map_err(|_| CliError::Usage(format!("bad order in operand {s:?}")))?;
        return from_family(dsl, n);
    }
    read_graph(Path::new(s.strip_prefix("graph:").unwrap_or(s)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_operands() {
        let g = parse_operand("family:u1:4,n:5").unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.negative_count(), 4);
        let g = parse_operand("family:qst:2,1,n:9").unwrap();
        assert_eq!(g.negative_count(), 7);
        assert!(parse_operand("family:u1:4").is_err());
        assert!(parse_operand("family:u1:4,n:x").is_err());
        assert!(parse_operand("family:u1:4,n:3").is_err());
    }
}
