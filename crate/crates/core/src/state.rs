use num_complex::Complex64;

use crate::error::{Result, WalkError};
use crate::graph::{PortGraph, PortIndex, VertexId};

/// Normalisation tolerance for walk states.
pub const NORM_TOLERANCE: f64 = 1e-12;

/// Amplitudes over the `(vertex, port)` basis, stored densely in
/// vertex-major order (see [`PortGraph::port_offsets`]).
#[derive(Debug, Clone, PartialEq)]
pub struct WalkState {
    amplitudes: Vec<Complex64>,
}

impl WalkState {
    pub fn zeros(len: usize) -> Self {
        WalkState {
            amplitudes: vec![Complex64::new(0.0, 0.0); len],
        }
    }

    pub fn from_amplitudes(amplitudes: Vec<Complex64>) -> Self {
        WalkState { amplitudes }
    }

    /// All amplitude on port `c` of vertex `v`.
    pub fn basis(graph: &PortGraph, v: VertexId, c: PortIndex) -> Result<Self> {
        let mut s = Self::zeros(graph.port_count());
        s.set(graph, v, c, Complex64::new(1.0, 0.0))?;
        Ok(s)
    }

    pub fn len(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.amplitudes.is_empty()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn amplitudes_mut(&mut self) -> &mut [Complex64] {
        &mut self.amplitudes
    }

    pub fn into_amplitudes(self) -> Vec<Complex64> {
        self.amplitudes
    }

    pub fn get(&self, graph: &PortGraph, v: VertexId, c: PortIndex) -> Result<Complex64> {
        Ok(self.amplitudes[flat_index(graph, v, c)?])
    }

    pub fn set(
        &mut self,
        graph: &PortGraph,
        v: VertexId,
        c: PortIndex,
        amp: Complex64,
    ) -> Result<()> {
        let i = flat_index(graph, v, c)?;
        self.amplitudes[i] = amp;
        Ok(())
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(Complex64::norm_sqr).sum()
    }

    pub fn is_normalised(&self) -> bool {
        (self.norm_sqr() - 1.0).abs() <= NORM_TOLERANCE
    }

    /// `<self|other>`, conjugating `self`.
    pub fn inner_product(&self, other: &WalkState) -> Result<Complex64> {
        if self.len() != other.len() {
            return Err(WalkError::StateSizeMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(self
            .amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// Text form used by the `simulate` command: one `vertex port re,im` line
    /// per nonzero amplitude.
    pub fn to_text(&self, graph: &PortGraph) -> String {
        let mut out = String::new();
        for (i, p) in graph.ports().enumerate() {
            let a = self.amplitudes[i];
            if a != Complex64::new(0.0, 0.0) {
                out.push_str(&format!("{} {} {},{}\n", p.vertex, p.index, a.re, a.im));
            }
        }
        out
    }

    /// Parses [`to_text`](Self::to_text) output against `graph`. Ports not
    /// listed are zero; a port listed twice is an error.
    pub fn from_text(graph: &PortGraph, text: &str) -> Result<Self> {
        let mut s = Self::zeros(graph.port_count());
        let mut seen = vec![false; s.len()];
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let [v, c, amp] = fields.as_slice() else {
                return Err(WalkError::parse(
                    line_no,
                    format!("expected `vertex port re,im`, found {line:?}"),
                ));
            };
            let v: usize = v
                .parse()
                .map_err(|_| WalkError::parse(line_no, "invalid vertex id"))?;
            let c: usize = c
                .parse()
                .map_err(|_| WalkError::parse(line_no, "invalid port index"))?;
            let amp = crate::coin::parse_complex(amp, line_no)?;
            let idx =
                flat_index(graph, v, c).map_err(|e| WalkError::parse(line_no, e.to_string()))?;
            if std::mem::replace(&mut seen[idx], true) {
                return Err(WalkError::parse(
                    line_no,
                    format!("port ({v}, {c}) listed twice"),
                ));
            }
            s.amplitudes[idx] = amp;
        }
        Ok(s)
    }
}

fn flat_index(graph: &PortGraph, v: VertexId, c: PortIndex) -> Result<usize> {
    if c >= graph.degree(v)? {
        return Err(WalkError::InvalidPort { vertex: v, port: c });
    }
    Ok(graph.degrees().take(v).sum::<usize>() + c)
}
