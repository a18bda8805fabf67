//! Undirected graphs with ordered ports at every vertex.
//!
//! A basis state of the walk is a `(vertex, port)` pair. Each edge occupies
//! one port at each endpoint (two ports on the same vertex for a self-loop),
//! and the two ports are paired with each other. Port labels are assigned in
//! the order edges are added, so a fixed sequence of [`PortGraph::connect`]
//! calls always produces the same labelling.

use std::fmt;
use std::str::FromStr;

use crate::error::{Result, WalkError};

pub type VertexId = usize;
pub type PortIndex = usize;

/// One end of an edge: a vertex and the local label of the edge there.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Port {
    pub vertex: VertexId,
    pub index: PortIndex,
}

impl Port {
    pub const fn new(vertex: VertexId, index: PortIndex) -> Self {
        Port { vertex, index }
    }
}

impl fmt::Display for Port {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.vertex, self.index)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Severity {
    Error,
    Warning,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ViolationKind {
    /// `pairing(pairing(p)) != p`.
    BrokenInvolution { port: Port, partner: Port },
    /// A port paired with itself.
    FixedPoint { port: Port },
    /// A port paired with a port that does not exist.
    DanglingPort { port: Port, partner: Port },
    /// A vertex with no ports cannot hold amplitude.
    IsolatedVertex { vertex: VertexId },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub severity: Severity,
    pub kind: ViolationKind,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let level = match self.severity {
            Severity::Error => "error",
            Severity::Warning => "warning",
        };
        match &self.kind {
            ViolationKind::BrokenInvolution { port, partner } => write!(
                f,
                "{level}: port {port} pairs with {partner}, which does not pair back"
            ),
            ViolationKind::FixedPoint { port } => {
                write!(f, "{level}: port {port} is paired with itself")
            }
            ViolationKind::DanglingPort { port, partner } => {
                write!(f, "{level}: port {port} pairs with missing port {partner}")
            }
            ViolationKind::IsolatedVertex { vertex } => {
                write!(f, "{level}: vertex {vertex} has no ports")
            }
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PortGraph {
    // pairing[v][c] is the port at the other end of edge c of vertex v
    pairing: Vec<Vec<Port>>,
    edges: Vec<(VertexId, VertexId)>,
}

impl PortGraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_vertices(count: usize) -> Self {
        PortGraph {
            pairing: vec![Vec::new(); count],
            edges: Vec::new(),
        }
    }

    pub fn add_vertex(&mut self) -> VertexId {
        self.pairing.push(Vec::new());
        self.pairing.len() - 1
    }

    /// Adds an edge `u - v`, appending one port at each endpoint. For `u == v`
    /// two consecutive ports are appended to `u` and paired together.
    pub fn connect(&mut self, u: VertexId, v: VertexId) -> Result<(PortIndex, PortIndex)> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let pu = self.pairing[u].len();
        let pv = if u == v {
            pu + 1
        } else {
            self.pairing[v].len()
        };
        if u == v {
            self.pairing[u].push(Port::new(u, pv));
            self.pairing[u].push(Port::new(u, pu));
        } else {
            self.pairing[u].push(Port::new(v, pv));
            self.pairing[v].push(Port::new(u, pu));
        }
        self.edges.push((u, v));
        Ok((pu, pv))
    }

    /// The shift: where amplitude on port `c` of `v` moves to.
    pub fn shift_target(&self, v: VertexId, c: PortIndex) -> Result<Port> {
        self.check_vertex(v)?;
        self.pairing[v]
            .get(c)
            .copied()
            .ok_or(WalkError::InvalidPort { vertex: v, port: c })
    }

    pub fn vertex_count(&self) -> usize {
        self.pairing.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in insertion order.
    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn degree(&self, v: VertexId) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.pairing[v].len())
    }

    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.pairing.iter().map(Vec::len)
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().max().unwrap_or(0)
    }

    /// Total number of `(vertex, port)` basis states.
    pub fn port_count(&self) -> usize {
        self.degrees().sum()
    }

    /// Offset of each vertex's first port in the flat basis ordering
    /// (vertex-major, then port).
    pub fn port_offsets(&self) -> Vec<usize> {
        let mut offsets = Vec::with_capacity(self.pairing.len());
        let mut acc = 0;
        for d in self.degrees() {
            offsets.push(acc);
            acc += d;
        }
        offsets
    }

    pub fn ports(&self) -> impl Iterator<Item = Port> + '_ {
        self.pairing
            .iter()
            .enumerate()
            .flat_map(|(v, ps)| (0..ps.len()).map(move |c| Port::new(v, c)))
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        v < self.pairing.len()
    }

    fn check_vertex(&self, v: VertexId) -> Result<()> {
        if self.contains_vertex(v) {
            Ok(())
        } else {
            Err(WalkError::UnknownVertex(v))
        }
    }

    fn lookup(&self, p: Port) -> Option<Port> {
        self.pairing.get(p.vertex)?.get(p.index).copied()
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for (v, ports) in self.pairing.iter().enumerate() {
            if ports.is_empty() {
                out.push(Violation {
                    severity: Severity::Warning,
                    kind: ViolationKind::IsolatedVertex { vertex: v },
                });
            }
        }
        for port in self.ports() {
            let partner = self.pairing[port.vertex][port.index];
            let kind = match self.lookup(partner) {
                None => Some(ViolationKind::DanglingPort { port, partner }),
                Some(_) if partner == port => Some(ViolationKind::FixedPoint { port }),
                Some(back) if back != port => {
                    Some(ViolationKind::BrokenInvolution { port, partner })
                }
                Some(_) => None,
            };
            if let Some(kind) = kind {
                out.push(Violation {
                    severity: Severity::Error,
                    kind,
                });
            }
        }
        out
    }

    /// True when [`validate`](Self::validate) reports no errors (warnings allowed).
    pub fn is_well_formed(&self) -> bool {
        self.validate()
            .iter()
            .all(|v| v.severity == Severity::Warning)
    }

    /// Overwrites one entry of the pairing table without fixing up the
    /// partner. Only useful for exercising [`validate`](Self::validate).
    #[doc(hidden)]
    pub fn corrupt_pairing(&mut self, port: Port, partner: Port) {
        self.pairing[port.vertex][port.index] = partner;
    }

    /// Line-oriented edge list, one `u v` line per edge in insertion order.
    /// A leading `vertices N` line is written only when trailing vertices
    /// would otherwise be lost.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        let implied = self
            .edges
            .iter()
            .map(|&(u, v)| u.max(v) + 1)
            .max()
            .unwrap_or(0);
        if implied != self.vertex_count() {
            out.push_str(&format!("vertices {}\n", self.vertex_count()));
        }
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    pub fn from_edge_list(text: &str) -> Result<Self> {
        let mut declared: Option<usize> = None;
        let mut edges = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            match fields.as_slice() {
                ["vertices", n] => {
                    if declared.is_some() || !edges.is_empty() {
                        return Err(WalkError::parse(
                            line_no,
                            "`vertices` must come before any edge",
                        ));
                    }
                    declared = Some(parse_field(n, line_no)?);
                }
                [u, v] => edges.push((parse_field(u, line_no)?, parse_field(v, line_no)?, line_no)),
                _ => {
                    return Err(WalkError::parse(
                        line_no,
                        format!("expected `u v`, found {line:?}"),
                    ))
                }
            }
        }
        let implied = edges
            .iter()
            .map(|&(u, v, _)| u.max(v) + 1)
            .max()
            .unwrap_or(0);
        let count = match declared {
            Some(n) if n < implied => {
                return Err(WalkError::parse(
                    1,
                    format!(
                        "declared {n} vertices but edges reference vertex {}",
                        implied - 1
                    ),
                ))
            }
            Some(n) => n,
            None => implied,
        };
        let mut graph = PortGraph::with_vertices(count);
        for (u, v, _) in edges {
            graph.connect(u, v)?;
        }
        Ok(graph)
    }
}

impl FromStr for PortGraph {
    type Err = WalkError;

    fn from_str(s: &str) -> Result<Self> {
        PortGraph::from_edge_list(s)
    }
}

fn parse_field(s: &str, line: usize) -> Result<usize> {
    s.parse()
        .map_err(|_| WalkError::parse(line, format!("invalid vertex id {s:?}")))
}

/// Path `0 - 1 - ... - (n-1)`, edges added left to right. Interior vertices
/// get port 0 toward the left neighbour and port 1 toward the right.
pub fn path_graph(n: usize) -> PortGraph {
    let mut g = PortGraph::with_vertices(n);
    for v in 1..n {
        g.connect(v - 1, v).expect("vertices exist");
    }
    g
}

/// Cycle on `n >= 3` vertices: the path plus the closing edge `(n-1, 0)`.
pub fn cycle_graph(n: usize) -> PortGraph {
    let mut g = path_graph(n);
    if n >= 2 {
        g.connect(n - 1, 0).expect("vertices exist");
    }
    g
}
