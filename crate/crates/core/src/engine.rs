//! Evolution under `U = S C`: apply every vertex coin, then move each
//! amplitude across its edge.

use num_complex::Complex64;

use crate::coin::CoinAssignment;
use crate::error::{Result, WalkError};
use crate::graph::{PortGraph, VertexId};
use crate::state::WalkState;

/// A graph and a matching coin assignment, frozen together with the flat
/// shift table.
#[derive(Debug, Clone)]
pub struct QuantumWalk {
    graph: PortGraph,
    coins: CoinAssignment,
    offsets: Vec<usize>,
    shift: Vec<usize>,
}

impl QuantumWalk {
    pub fn new(graph: PortGraph, coins: CoinAssignment) -> Result<Self> {
        coins.check_dimensions(&graph)?;
        let offsets = graph.port_offsets();
        let shift = graph
            .ports()
            .map(|p| {
                let t = graph.shift_target(p.vertex, p.index)?;
                if !graph.contains_vertex(t.vertex) || t.index >= graph.degree(t.vertex)? {
                    return Err(WalkError::InvalidPort {
                        vertex: t.vertex,
                        port: t.index,
                    });
                }
                Ok(offsets[t.vertex] + t.index)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(QuantumWalk {
            graph,
            coins,
            offsets,
            shift,
        })
    }

    pub fn graph(&self) -> &PortGraph {
        &self.graph
    }

    pub fn coins(&self) -> &CoinAssignment {
        &self.coins
    }

    pub fn port_count(&self) -> usize {
        self.shift.len()
    }

    pub fn zero_state(&self) -> WalkState {
        WalkState::zeros(self.port_count())
    }

    /// Flat basis index of `(v, c)`.
    pub fn index(&self, v: VertexId, c: usize) -> Result<usize> {
        let d = self.graph.degree(v)?;
        if c >= d {
            return Err(WalkError::InvalidPort { vertex: v, port: c });
        }
        Ok(self.offsets[v] + c)
    }

    fn check_state(&self, state: &WalkState) -> Result<()> {
        if state.len() != self.port_count() {
            return Err(WalkError::StateSizeMismatch {
                expected: self.port_count(),
                found: state.len(),
            });
        }
        Ok(())
    }

    /// Writes `S C src` into `dst`.
    fn step_into(&self, src: &[Complex64], dst: &mut [Complex64]) {
        for (v, coin) in self.coins.iter().enumerate() {
            let o = self.offsets[v];
            let d = coin.nrows();
            let local = &src[o..o + d];
            for i in 0..d {
                let mut acc = Complex64::new(0.0, 0.0);
                for (j, a) in local.iter().enumerate() {
                    acc += coin[(i, j)] * a;
                }
                dst[self.shift[o + i]] = acc;
            }
        }
    }

    pub fn step(&self, state: &WalkState) -> Result<WalkState> {
        self.check_state(state)?;
        let mut out = self.zero_state();
        self.step_into(state.amplitudes(), out.amplitudes_mut());
        Ok(out)
    }

    /// `U^T |state>`; `steps == 0` returns the input unchanged.
    pub fn evolve(&self, state: &WalkState, steps: usize) -> Result<WalkState> {
        self.check_state(state)?;
        let mut cur = state.clone();
        let mut next = self.zero_state();
        for _ in 0..steps {
            self.step_into(cur.amplitudes(), next.amplitudes_mut());
            std::mem::swap(&mut cur, &mut next);
        }
        Ok(cur)
    }

    /// Sum of `|amplitude|^2` over the ports of `v`.
    pub fn vertex_probability(&self, state: &WalkState, v: VertexId) -> Result<f64> {
        self.check_state(state)?;
        let d = self.graph.degree(v)?;
        let o = self.offsets[v];
        Ok(state.amplitudes()[o..o + d]
            .iter()
            .map(Complex64::norm_sqr)
            .sum())
    }

    pub fn vertex_probabilities(&self, state: &WalkState) -> Result<Vec<f64>> {
        (0..self.graph.vertex_count())
            .map(|v| self.vertex_probability(state, v))
            .collect()
    }
}

pub fn step(state: &WalkState, graph: &PortGraph, coins: &CoinAssignment) -> Result<WalkState> {
    QuantumWalk::new(graph.clone(), coins.clone())?.step(state)
}

pub fn evolve(
    state: &WalkState,
    graph: &PortGraph,
    coins: &CoinAssignment,
    steps: usize,
) -> Result<WalkState> {
    QuantumWalk::new(graph.clone(), coins.clone())?.evolve(state, steps)
}

pub fn vertex_probability(state: &WalkState, graph: &PortGraph, v: VertexId) -> Result<f64> {
    let d = graph.degree(v)?;
    let o = graph.port_offsets()[v];
    if state.len() != graph.port_count() {
        return Err(WalkError::StateSizeMismatch {
            expected: graph.port_count(),
            found: state.len(),
        });
    }
    Ok(state.amplitudes()[o..o + d]
        .iter()
        .map(Complex64::norm_sqr)
        .sum())
}

pub fn inner_product(s1: &WalkState, s2: &WalkState) -> Result<Complex64> {
    s1.inner_product(s2)
}
