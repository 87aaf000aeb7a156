//! Parsing and serialization for the toolkit's file formats.
//!
//! All formats are line-oriented with LF endings and 1-based indices;
//! in-memory objects are 0-based, and this module is the only place that
//! converts between the two. Lines starting with `#` are ignored
//! everywhere; the DIMACS-like graph and hypergraph formats also accept
//! `c` comment lines.
//!
//! * `.is`  — itemset: header `m n`, then `m` rows of `n` characters `0`/`1`.
//! * `.ds`  — dataset: count `k`, then `k` itemset blocks separated by blank
//!   lines, item counts non-decreasing.
//! * `.gr`  — graph: `p edge n m`, then `m` lines `e u v`.
//! * `.hg`  — hypergraph: `p hyper n m`, then `m` lines `k v1 .. vk`.
//! * `.perm` — permutation: one line with the images of `1..n`.
//! * `.net` — comparator network: header `n L`, then `L` lines
//!   `k i1 j1 .. ik jk`.

use std::collections::HashSet;
use std::fmt;

use super::{Dataset, Domain, Graph, Hypergraph, Item, Itemset, Permutation};
use crate::sortnet::{Comparator, ComparatorNetwork};

/// A parse failure at a specific input line (1-based).
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    MalformedHeader { expected: &'static str },
    ExpectedInteger { token: String },
    RowLength { expected: usize, got: usize },
    InvalidBit { ch: char },
    DuplicateRow,
    DuplicateEdge,
    DuplicateVertex { vertex: usize },
    IndexOutOfRange { index: usize, count: usize },
    SelfLoop { vertex: usize },
    ChannelRepeated { channel: usize },
    TokenCount { expected: usize, got: usize },
    CardinalityOrder,
    MixedDomains { expected: usize, got: usize },
    NotAPermutation,
    UnexpectedEnd,
    TrailingContent,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ParseErrorKind::*;
        match self {
            MalformedHeader { expected } => write!(f, "malformed header, expected `{expected}`"),
            ExpectedInteger { token } => write!(f, "expected an integer, got {token:?}"),
            RowLength { expected, got } => {
                write!(f, "row has {got} characters, expected {expected}")
            }
            InvalidBit { ch } => write!(f, "invalid character {ch:?} in 0/1 row"),
            DuplicateRow => write!(f, "duplicate row in itemset"),
            DuplicateEdge => write!(f, "duplicate edge"),
            DuplicateVertex { vertex } => write!(f, "vertex {vertex} repeated in hyperedge"),
            IndexOutOfRange { index, count } => {
                write!(f, "index {index} out of range 1..={count}")
            }
            SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            ChannelRepeated { channel } => write!(f, "channel {channel} used twice in layer"),
            TokenCount { expected, got } => {
                write!(f, "expected {expected} values on line, got {got}")
            }
            CardinalityOrder => write!(f, "itemsets must appear in ascending item count"),
            MixedDomains { expected, got } => {
                write!(f, "domain size {got} differs from {expected}")
            }
            NotAPermutation => write!(f, "values are not a permutation of 1..n"),
            UnexpectedEnd => write!(f, "unexpected end of input"),
            TrailingContent => write!(f, "unexpected trailing content"),
        }
    }
}

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

/// Line cursor that skips comments (and, on demand, blank lines) while
/// tracking 1-based line numbers.
pub(crate) struct Cursor<'a> {
    lines: Vec<(usize, &'a str)>,
    pos: usize,
    dimacs_comments: bool,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(text: &'a str, dimacs_comments: bool) -> Self {
        Cursor {
            lines: text.lines().enumerate().map(|(i, l)| (i + 1, l)).collect(),
            pos: 0,
            dimacs_comments,
        }
    }

    fn is_comment(&self, line: &str) -> bool {
        line.starts_with('#')
            || (self.dimacs_comments && (line == "c" || line.starts_with("c ")))
    }

    /// Next line that is not a comment; blank lines are returned.
    fn next_row(&mut self) -> Option<(usize, &'a str)> {
        while self.pos < self.lines.len() {
            let (no, line) = self.lines[self.pos];
            self.pos += 1;
            if self.is_comment(line) {
                continue;
            }
            return Some((no, line));
        }
        None
    }

    /// Next line that is neither comment nor blank.
    fn next_content(&mut self) -> Option<(usize, &'a str)> {
        loop {
            let (no, line) = self.next_row()?;
            if !line.trim().is_empty() {
                return Some((no, line));
            }
        }
    }

    fn last_line_no(&self) -> usize {
        self.lines.last().map_or(1, |&(no, _)| no)
    }

    pub(crate) fn expect_end(&mut self) -> Result<(), ParseError> {
        if let Some((no, _)) = self.next_content() {
            return Err(err(no, ParseErrorKind::TrailingContent));
        }
        Ok(())
    }

    /// Consumes one non-blank content line and hands it to `check`.
    pub(crate) fn expect_header(
        &mut self,
        check: impl FnOnce(usize, &str) -> Result<(), ParseError>,
    ) -> Result<(), ParseError> {
        let (no, line) = self
            .next_content()
            .ok_or_else(|| err(self.last_line_no(), ParseErrorKind::UnexpectedEnd))?;
        check(no, line)
    }
}

fn parse_usize(line: usize, token: &str) -> Result<usize, ParseError> {
    token.parse().map_err(|_| {
        err(
            line,
            ParseErrorKind::ExpectedInteger {
                token: token.to_string(),
            },
        )
    })
}

/// Parses a 1-based index in `1..=count` to its 0-based value.
fn parse_index(line: usize, token: &str, count: usize) -> Result<usize, ParseError> {
    let v = parse_usize(line, token)?;
    if v == 0 || v > count {
        return Err(err(
            line,
            ParseErrorKind::IndexOutOfRange {
                index: v,
                count,
            },
        ));
    }
    Ok(v - 1)
}

// ---------------------------------------------------------------- itemset

pub fn parse_itemset(text: &str) -> Result<Itemset, ParseError> {
    let mut cur = Cursor::new(text, false);
    let itemset = parse_itemset_block(&mut cur)?;
    cur.expect_end()?;
    Ok(itemset)
}

pub(crate) fn parse_itemset_block(cur: &mut Cursor) -> Result<Itemset, ParseError> {
    let (hline, header) = cur
        .next_content()
        .ok_or_else(|| err(cur.last_line_no(), ParseErrorKind::UnexpectedEnd))?;
    let tokens: Vec<&str> = header.split_whitespace().collect();
    if tokens.len() != 2 {
        return Err(err(hline, ParseErrorKind::MalformedHeader { expected: "m n" }));
    }
    let m = parse_usize(hline, tokens[0])?;
    let n = parse_usize(hline, tokens[1])?;
    let mut items = Vec::with_capacity(m);
    let mut seen: HashSet<Item> = HashSet::with_capacity(m);
    for _ in 0..m {
        let (rline, row) = cur
            .next_row()
            .ok_or_else(|| err(cur.last_line_no(), ParseErrorKind::UnexpectedEnd))?;
        let row = row.trim_end();
        if row.len() != n {
            return Err(err(
                rline,
                ParseErrorKind::RowLength {
                    expected: n,
                    got: row.len(),
                },
            ));
        }
        let mut bits = Vec::with_capacity(n);
        for ch in row.chars() {
            match ch {
                '0' => bits.push(false),
                '1' => bits.push(true),
                other => return Err(err(rline, ParseErrorKind::InvalidBit { ch: other })),
            }
        }
        let item = Item::from_bits(&bits);
        if !seen.insert(item.clone()) {
            return Err(err(rline, ParseErrorKind::DuplicateRow));
        }
        items.push(item);
    }
    Ok(Itemset::new(Domain::new(n), items).expect("rows validated"))
}

pub fn serialize_itemset(s: &Itemset) -> String {
    let mut out = format!("{} {}\n", s.len(), s.domain_size());
    for row in s.row_strings() {
        out.push_str(&row);
        out.push('\n');
    }
    out
}

// ---------------------------------------------------------------- dataset

pub fn parse_dataset(text: &str) -> Result<Dataset, ParseError> {
    let mut cur = Cursor::new(text, false);
    let (hline, header) = cur
        .next_content()
        .ok_or_else(|| err(cur.last_line_no(), ParseErrorKind::UnexpectedEnd))?;
    let tokens: Vec<&str> = header.split_whitespace().collect();
    if tokens.len() != 1 {
        return Err(err(hline, ParseErrorKind::MalformedHeader { expected: "k" }));
    }
    let k = parse_usize(hline, tokens[0])?;
    let mut itemsets = Vec::with_capacity(k);
    let mut prev_len: Option<usize> = None;
    let mut domain_size: Option<usize> = None;
    for _ in 0..k {
        // Peek the block's header line for error positions.
        let peek = cur.pos;
        let (bline, _) = cur
            .next_content()
            .ok_or_else(|| err(cur.last_line_no(), ParseErrorKind::UnexpectedEnd))?;
        cur.pos = peek;
        let itemset = parse_itemset_block(&mut cur)?;
        if let Some(n) = domain_size {
            if itemset.domain_size() != n {
                return Err(err(
                    bline,
                    ParseErrorKind::MixedDomains {
                        expected: n,
                        got: itemset.domain_size(),
                    },
                ));
            }
        } else {
            domain_size = Some(itemset.domain_size());
        }
        if let Some(prev) = prev_len {
            if itemset.len() < prev {
                return Err(err(bline, ParseErrorKind::CardinalityOrder));
            }
        }
        prev_len = Some(itemset.len());
        itemsets.push(itemset);
    }
    cur.expect_end()?;
    Ok(Dataset::new(itemsets).expect("uniform domain validated"))
}

pub fn serialize_dataset(d: &Dataset) -> String {
    let mut out = format!("{}\n", d.len());
    for (i, s) in d.itemsets().iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        out.push_str(&serialize_itemset(s));
    }
    out
}

// ------------------------------------------------------------------ graph

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut cur = Cursor::new(text, true);
    let graph = parse_graph_block(&mut cur)?;
    cur.expect_end()?;
    Ok(graph)
}

pub(crate) fn parse_graph_block(cur: &mut Cursor) -> Result<Graph, ParseError> {
    let (hline, header) = cur
        .next_content()
        .ok_or_else(|| err(cur.last_line_no(), ParseErrorKind::UnexpectedEnd))?;
    let tokens: Vec<&str> = header.split_whitespace().collect();
    if tokens.len() != 4 || tokens[0] != "p" || tokens[1] != "edge" {
        return Err(err(
            hline,
            ParseErrorKind::MalformedHeader { expected: "p edge n m" },
        ));
    }
    let n = parse_usize(hline, tokens[2])?;
    let m = parse_usize(hline, tokens[3])?;
    let mut edges = Vec::with_capacity(m);
    let mut seen = HashSet::with_capacity(m);
    for _ in 0..m {
        let (eline, line) = cur
            .next_content()
            .ok_or_else(|| err(cur.last_line_no(), ParseErrorKind::UnexpectedEnd))?;
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 3 || tokens[0] != "e" {
            return Err(err(eline, ParseErrorKind::MalformedHeader { expected: "e u v" }));
        }
        let u = parse_index(eline, tokens[1], n)?;
        let v = parse_index(eline, tokens[2], n)?;
        if u == v {
            return Err(err(eline, ParseErrorKind::SelfLoop { vertex: u + 1 }));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(err(eline, ParseErrorKind::DuplicateEdge));
        }
        edges.push((u, v));
    }
    Ok(Graph::new(n, &edges).expect("edges validated"))
}

pub fn serialize_graph(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

// ------------------------------------------------------------- hypergraph

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph, ParseError> {
    let mut cur = Cursor::new(text, true);
    let hypergraph = parse_hypergraph_block(&mut cur)?;
    cur.expect_end()?;
    Ok(hypergraph)
}

pub(crate) fn parse_hypergraph_block(cur: &mut Cursor) -> Result<Hypergraph, ParseError> {
    let (hline, header) = cur
        .next_content()
        .ok_or_else(|| err(cur.last_line_no(), ParseErrorKind::UnexpectedEnd))?;
    let tokens: Vec<&str> = header.split_whitespace().collect();
    if tokens.len() != 4 || tokens[0] != "p" || tokens[1] != "hyper" {
        return Err(err(
            hline,
            ParseErrorKind::MalformedHeader { expected: "p hyper n m" },
        ));
    }
    let n = parse_usize(hline, tokens[2])?;
    let m = parse_usize(hline, tokens[3])?;
    let mut hyperedges = Vec::with_capacity(m);
    for _ in 0..m {
        let (eline, line) = cur
            .next_row()
            .ok_or_else(|| err(cur.last_line_no(), ParseErrorKind::UnexpectedEnd))?;
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.is_empty() {
            return Err(err(
                eline,
                ParseErrorKind::MalformedHeader { expected: "k v1 .. vk" },
            ));
        }
        let k = parse_usize(eline, tokens[0])?;
        if tokens.len() != k + 1 {
            return Err(err(
                eline,
                ParseErrorKind::TokenCount {
                    expected: k + 1,
                    got: tokens.len(),
                },
            ));
        }
        let mut vertices = Vec::with_capacity(k);
        for token in &tokens[1..] {
            let v = parse_index(eline, token, n)?;
            if vertices.contains(&v) {
                return Err(err(eline, ParseErrorKind::DuplicateVertex { vertex: v + 1 }));
            }
            vertices.push(v);
        }
        hyperedges.push(vertices);
    }
    Ok(Hypergraph::new(n, &hyperedges).expect("vertices validated"))
}

pub fn serialize_hypergraph(h: &Hypergraph) -> String {
    let mut out = format!("p hyper {} {}\n", h.vertex_count(), h.hyperedge_count());
    for e in h.hyperedges() {
        let members: Vec<String> = e.ones().map(|v| (v + 1).to_string()).collect();
        out.push_str(&e.cardinality().to_string());
        for m in members {
            out.push(' ');
            out.push_str(&m);
        }
        out.push('\n');
    }
    out
}

// ------------------------------------------------------------ permutation

pub fn parse_permutation(text: &str) -> Result<Permutation, ParseError> {
    let mut cur = Cursor::new(text, false);
    let (line_no, line) = match cur.next_row() {
        Some(pair) => pair,
        None => return Ok(Permutation::identity(0)),
    };
    let tokens: Vec<&str> = line.split_whitespace().collect();
    let n = tokens.len();
    let mut map = Vec::with_capacity(n);
    for token in tokens {
        let v = parse_usize(line_no, token)?;
        if v == 0 || v > n {
            return Err(err(line_no, ParseErrorKind::NotAPermutation));
        }
        map.push(v - 1);
    }
    let perm =
        Permutation::new(map).map_err(|_| err(line_no, ParseErrorKind::NotAPermutation))?;
    cur.expect_end()?;
    Ok(perm)
}

pub fn serialize_permutation(p: &Permutation) -> String {
    format!("{}\n", p.display_one_based())
}

// ---------------------------------------------------------------- network

pub fn parse_network(text: &str) -> Result<ComparatorNetwork, ParseError> {
    let mut cur = Cursor::new(text, false);
    let (hline, header) = cur
        .next_content()
        .ok_or_else(|| err(cur.last_line_no(), ParseErrorKind::UnexpectedEnd))?;
    let tokens: Vec<&str> = header.split_whitespace().collect();
    if tokens.len() != 2 {
        return Err(err(hline, ParseErrorKind::MalformedHeader { expected: "n L" }));
    }
    let n = parse_usize(hline, tokens[0])?;
    let depth = parse_usize(hline, tokens[1])?;
    let mut layers = Vec::with_capacity(depth);
    for _ in 0..depth {
        let (lline, line) = cur
            .next_row()
            .ok_or_else(|| err(cur.last_line_no(), ParseErrorKind::UnexpectedEnd))?;
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.is_empty() {
            return Err(err(
                lline,
                ParseErrorKind::MalformedHeader { expected: "k i1 j1 .. ik jk" },
            ));
        }
        let k = parse_usize(lline, tokens[0])?;
        if tokens.len() != 1 + 2 * k {
            return Err(err(
                lline,
                ParseErrorKind::TokenCount {
                    expected: 1 + 2 * k,
                    got: tokens.len(),
                },
            ));
        }
        let mut used = vec![false; n];
        let mut layer = Vec::with_capacity(k);
        for pair in tokens[1..].chunks(2) {
            let a = parse_index(lline, pair[0], n)?;
            let b = parse_index(lline, pair[1], n)?;
            if a == b {
                return Err(err(lline, ParseErrorKind::ChannelRepeated { channel: a + 1 }));
            }
            for ch in [a, b] {
                if used[ch] {
                    return Err(err(
                        lline,
                        ParseErrorKind::ChannelRepeated { channel: ch + 1 },
                    ));
                }
                used[ch] = true;
            }
            layer.push(Comparator::new(a, b).expect("distinct channels"));
        }
        layers.push(layer);
    }
    cur.expect_end()?;
    Ok(ComparatorNetwork::new(n, layers).expect("layers validated"))
}

pub fn serialize_network(net: &ComparatorNetwork) -> String {
    let mut out = format!("{} {}\n", net.channels(), net.depth());
    for layer in net.layers() {
        out.push_str(&layer.len().to_string());
        for c in layer {
            out.push_str(&format!(" {} {}", c.lo() + 1, c.hi() + 1));
        }
        out.push('\n');
    }
    out
}
