//! Plain-text machine files: a header, the edge list and the coin blocks.
//!
//! ```text
//! family spatial-eq
//! language eq
//! steps 3
//! accepting 14
//! rejecting 15
//! slot 0 1
//! slot 2 3
//! ...
//! [graph]
//! 0 8
//! ...
//! [coins]
//! vertex 0 1
//! 1,0
//! ...
//! ```
//!
//! Sequential machines list `chain <v>` lines instead of `slot <a> <b>`.
//! Because the edge list preserves insertion order, re-reading a file
//! reproduces every port label exactly.

use std::fmt::Write as _;

use crate::coin::CoinAssignment;
use crate::error::{Result, WalkError};
use crate::graph::{PortGraph, VertexId};
use crate::machine::{DualRailSlot, Family, InputLayout, Language, Machine};
use crate::word::Word;

const GRAPH_SECTION: &str = "[graph]";
const COINS_SECTION: &str = "[coins]";

fn join(vs: &[VertexId]) -> String {
    vs.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

impl Machine {
    pub fn to_export(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "family {}", self.family);
        let _ = writeln!(out, "language {}", self.language);
        let _ = writeln!(out, "steps {}", self.steps);
        let _ = writeln!(out, "accepting {}", join(&self.accepting));
        let _ = writeln!(out, "rejecting {}", join(&self.rejecting));
        match &self.inputs {
            InputLayout::Spatial(slots) => {
                for s in slots {
                    let _ = writeln!(out, "slot {} {}", s.a, s.b);
                }
            }
            InputLayout::Sequential(chain) => {
                for v in chain {
                    let _ = writeln!(out, "chain {v}");
                }
            }
        }
        out.push_str(GRAPH_SECTION);
        out.push('\n');
        out.push_str(&self.graph().to_edge_list());
        out.push_str(COINS_SECTION);
        out.push('\n');
        out.push_str(&self.coins().to_text());
        out
    }

    pub fn from_export(text: &str) -> Result<Machine> {
        let lines: Vec<&str> = text.lines().collect();
        let find = |name: &str| {
            lines.iter().position(|l| l.trim() == name).ok_or_else(|| {
                WalkError::parse(lines.len().max(1), format!("missing {name} section"))
            })
        };
        let g_at = find(GRAPH_SECTION)?;
        let c_at = find(COINS_SECTION)?;
        if c_at < g_at {
            return Err(WalkError::parse(c_at + 1, "[coins] must follow [graph]"));
        }
        let header = parse_header(&lines[..g_at])?;
        // line numbers in section errors are relative to the section
        let graph = PortGraph::from_edge_list(&lines[g_at + 1..c_at].join("\n"))?;
        let coins = CoinAssignment::from_text(&lines[c_at + 1..].join("\n"))?;
        coins.check_dimensions(&graph)?;
        let coins = CoinAssignment::new(&graph, coins.iter().cloned().collect())?;
        let inputs = match (header.slots.is_empty(), header.chain.is_empty()) {
            (false, true) => InputLayout::Spatial(header.slots),
            (true, false) => InputLayout::Sequential(header.chain),
            _ => {
                return Err(WalkError::InvalidMachine(
                    "exactly one of `slot` or `chain` lines is required".into(),
                ))
            }
        };
        Machine::new(
            header
                .family
                .ok_or_else(|| WalkError::parse(1, "missing `family`"))?,
            header
                .language
                .ok_or_else(|| WalkError::parse(1, "missing `language`"))?,
            graph,
            coins,
            inputs,
            header.accepting,
            header.rejecting,
            header
                .steps
                .ok_or_else(|| WalkError::parse(1, "missing `steps`"))?,
        )
    }
}

#[derive(Default)]
struct Header {
    family: Option<Family>,
    language: Option<Language>,
    steps: Option<usize>,
    accepting: Vec<VertexId>,
    rejecting: Vec<VertexId>,
    slots: Vec<DualRailSlot>,
    chain: Vec<VertexId>,
}

fn ids(fields: &[&str], line: usize) -> Result<Vec<VertexId>> {
    fields
        .iter()
        .map(|f| {
            f.parse()
                .map_err(|_| WalkError::parse(line, format!("invalid vertex id {f:?}")))
        })
        .collect()
}

fn parse_header(lines: &[&str]) -> Result<Header> {
    let mut h = Header::default();
    for (i, raw) in lines.iter().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields.as_slice() {
            ["family", f] => h.family = Some(f.parse()?),
            ["language", "eq"] => h.language = Some(Language::Eq),
            ["language", "ab"] => h.language = Some(Language::Ab),
            ["language", "word", w] => h.language = Some(Language::Word(w.parse::<Word>()?)),
            ["steps", t] => {
                h.steps =
                    Some(t.parse().map_err(|_| {
                        WalkError::parse(line_no, format!("invalid step count {t:?}"))
                    })?)
            }
            ["accepting", rest @ ..] => h.accepting = ids(rest, line_no)?,
            ["rejecting", rest @ ..] => h.rejecting = ids(rest, line_no)?,
            ["slot", a, b] => {
                let v = ids(&[a, b], line_no)?;
                h.slots.push(DualRailSlot { a: v[0], b: v[1] });
            }
            ["chain", v] => h.chain.push(ids(&[v], line_no)?[0]),
            _ => {
                return Err(WalkError::parse(
                    line_no,
                    format!("unrecognised header line {line:?}"),
                ))
            }
        }
    }
    Ok(h)
}
