//! Fixed workloads shared by the benchmarks.

use qwalk_core::{coin, path_graph, CoinAssignment, QuantumWalk, Result, WalkState};

/// Hadamard walk on a path of `n` vertices, started from the middle vertex
/// on its right-pointing port.
pub fn hadamard_line(n: usize) -> Result<(QuantumWalk, WalkState)> {
    let g = path_graph(n);
    let coins = CoinAssignment::from_fn(&g, |_, d| match d {
        2 => Ok(coin::hadamard()),
        d => Ok(coin::identity(d)),
    })?;
    let start = WalkState::basis(&g, n / 2, 1)?;
    Ok((QuantumWalk::new(g, coins)?, start))
}
