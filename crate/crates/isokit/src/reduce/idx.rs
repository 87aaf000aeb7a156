//! Sidecar index files (`.idx`) emitted next to reduction outputs.
//!
//! The reductions are deterministic functions of their inputs, so the
//! sidecar simply embeds the original instance under a kind tag; loading it
//! re-runs the reduction and recovers every edge/element/node
//! correspondence needed to translate witnesses offline.

use crate::core::formats::{
    parse_graph_block, parse_hypergraph_block, parse_itemset_block, serialize_graph,
    serialize_hypergraph, serialize_itemset, Cursor, ParseError, ParseErrorKind,
};

use super::{GiInstance, HgiInstance, IiInstance};

/// A reduction sidecar: the original instance plus the reduction kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IndexFile {
    GiToIi(GiInstance),
    IiToHgi(IiInstance),
    HgiToGi(HgiInstance),
}

const MAGIC: &str = "isokit-idx";

impl IndexFile {
    pub fn kind(&self) -> &'static str {
        match self {
            IndexFile::GiToIi(_) => "gi-to-ii",
            IndexFile::IiToHgi(_) => "ii-to-hgi",
            IndexFile::HgiToGi(_) => "hgi-to-gi",
        }
    }
}

pub fn serialize_index(index: &IndexFile) -> String {
    let body = match index {
        IndexFile::GiToIi(inst) => {
            format!("{}{}", serialize_graph(&inst.g), serialize_graph(&inst.h))
        }
        IndexFile::IiToHgi(inst) => format!(
            "{}{}",
            serialize_itemset(&inst.s),
            serialize_itemset(&inst.t)
        ),
        IndexFile::HgiToGi(inst) => format!(
            "{}{}",
            serialize_hypergraph(&inst.g),
            serialize_hypergraph(&inst.h)
        ),
    };
    format!("{} {}\n{}", MAGIC, index.kind(), body)
}

pub fn parse_index(text: &str) -> Result<IndexFile, ParseError> {
    let first = text.lines().next().unwrap_or_default();
    let kind = match first.strip_prefix(MAGIC) {
        Some(rest) => rest.trim(),
        None => {
            return Err(ParseError {
                line: 1,
                kind: ParseErrorKind::MalformedHeader {
                    expected: "isokit-idx <reduction>",
                },
            })
        }
    };
    let dimacs = matches!(kind, "gi-to-ii" | "hgi-to-gi");
    let mut cur = Cursor::new(text, dimacs);
    cur.expect_header(|_, _| Ok(()))?; // skip the magic line
    let index = match kind {
        "gi-to-ii" => {
            let g = parse_graph_block(&mut cur)?;
            let h = parse_graph_block(&mut cur)?;
            IndexFile::GiToIi(GiInstance { g, h })
        }
        "ii-to-hgi" => {
            let s = parse_itemset_block(&mut cur)?;
            let t = parse_itemset_block(&mut cur)?;
            IndexFile::IiToHgi(IiInstance { s, t })
        }
        "hgi-to-gi" => {
            let g = parse_hypergraph_block(&mut cur)?;
            let h = parse_hypergraph_block(&mut cur)?;
            IndexFile::HgiToGi(HgiInstance { g, h })
        }
        _ => {
            return Err(ParseError {
                line: 1,
                kind: ParseErrorKind::MalformedHeader {
                    expected: "isokit-idx <reduction>",
                },
            })
        }
    };
    cur.expect_end()?;
    Ok(index)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core::{Domain, Graph, Hypergraph, Itemset};

    #[test]
    fn graph_index_round_trips() {
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let h = Graph::new(3, &[(0, 2), (1, 2)]).unwrap();
        let idx = IndexFile::GiToIi(GiInstance { g, h });
        let text = serialize_index(&idx);
        assert_eq!(parse_index(&text).unwrap(), idx);
    }

    #[test]
    fn itemset_index_round_trips() {
        let s = Itemset::from_rows(Domain::new(3), &["110", "011"]).unwrap();
        let t = Itemset::from_rows(Domain::new(3), &["101", "011"]).unwrap();
        let idx = IndexFile::IiToHgi(IiInstance { s, t });
        let text = serialize_index(&idx);
        assert_eq!(parse_index(&text).unwrap(), idx);
    }

    #[test]
    fn hypergraph_index_round_trips() {
        let g = Hypergraph::new(3, &[vec![0, 1, 2], vec![]]).unwrap();
        let h = Hypergraph::new(3, &[vec![], vec![0, 1, 2]]).unwrap();
        let idx = IndexFile::HgiToGi(HgiInstance { g, h });
        let text = serialize_index(&idx);
        assert_eq!(parse_index(&text).unwrap(), idx);
    }

    #[test]
    fn unknown_header_is_an_error() {
        assert!(parse_index("isokit-idx nonsense\n").is_err());
        assert!(parse_index("something else\n").is_err());
    }

    #[test]
    fn empty_blocks_round_trip() {
        let s = Itemset::empty(Domain::new(0));
        let idx = IndexFile::IiToHgi(IiInstance { s: s.clone(), t: s });
        let text = serialize_index(&idx);
        assert_eq!(parse_index(&text).unwrap(), idx);
    }

    #[test]
    fn truncated_index_reports_position() {
        let err = parse_index("isokit-idx gi-to-ii\np edge 2 1\n").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::UnexpectedEnd);
    }
}
