//! Explicit `S C` matrix for small walks. The matrix is assembled from the
//! pairing table and coin blocks directly, independently of
//! [`QuantumWalk::step`](crate::engine::QuantumWalk::step), so the two can be
//! checked against each other.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::coin::CoinAssignment;
use crate::error::{Result, WalkError};
use crate::graph::PortGraph;
use crate::state::WalkState;

pub const DEFAULT_ORACLE_LIMIT: usize = 64;

pub type DenseMatrix = DMatrix<Complex64>;

pub fn dense_step_matrix(
    graph: &PortGraph,
    coins: &CoinAssignment,
    limit: usize,
) -> Result<DenseMatrix> {
    let n = graph.port_count();
    if n > limit {
        return Err(WalkError::SpaceTooLarge { ports: n, limit });
    }
    coins.check_dimensions(graph)?;
    let offsets = graph.port_offsets();

    let mut c = DenseMatrix::zeros(n, n);
    for (v, coin) in coins.iter().enumerate() {
        let o = offsets[v];
        c.view_mut((o, o), (coin.nrows(), coin.ncols()))
            .copy_from(coin);
    }

    let mut s = DenseMatrix::zeros(n, n);
    for p in graph.ports() {
        let t = graph.shift_target(p.vertex, p.index)?;
        let from = offsets[p.vertex] + p.index;
        let to = offsets
            .get(t.vertex)
            .map(|o| o + t.index)
            .filter(|&i| i < n)
            .ok_or(WalkError::InvalidPort {
                vertex: t.vertex,
                port: t.index,
            })?;
        s[(to, from)] = Complex64::new(1.0, 0.0);
    }
    Ok(s * c)
}

pub fn apply(matrix: &DenseMatrix, state: &WalkState) -> WalkState {
    let v = DVector::from_column_slice(state.amplitudes());
    WalkState::from_amplitudes((matrix * v).iter().copied().collect())
}

/// Applies `matrix` `steps` times.
pub fn apply_power(matrix: &DenseMatrix, state: &WalkState, steps: usize) -> WalkState {
    let mut v = DVector::from_column_slice(state.amplitudes());
    for _ in 0..steps {
        v = matrix * v;
    }
    WalkState::from_amplitudes(v.iter().copied().collect())
}

/// Max-norm of `U^dag U - I` for a dense matrix.
pub fn unitarity_defect(matrix: &DenseMatrix) -> f64 {
    crate::coin::unitarity_defect(matrix)
}

/// Largest entrywise difference between two states.
pub fn max_abs_difference(a: &WalkState, b: &WalkState) -> f64 {
    a.amplitudes()
        .iter()
        .zip(b.amplitudes())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}
