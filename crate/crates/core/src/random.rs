//! Random walk instances for property checks. Callers supply the RNG, so a
//! seeded generator gives reproducible instances.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;

use crate::coin::{CoinAssignment, CoinMatrix};
use crate::graph::PortGraph;
use crate::state::WalkState;

/// Connected random graph with at most `max_ports` ports in total. Edges
/// are drawn uniformly between vertices, self-loops and parallel edges
/// included; every vertex ends up with at least one port.
pub fn random_graph<R: Rng + ?Sized>(rng: &mut R, max_ports: usize) -> PortGraph {
    assert!(max_ports >= 2, "need room for at least one edge");
    let max_vertices = (max_ports / 2).clamp(1, 12);
    let n = rng.random_range(1..=max_vertices);
    let mut g = PortGraph::with_vertices(n);
    // a spanning path first so no vertex is isolated
    for v in 1..n {
        g.connect(v - 1, v).expect("vertex exists");
    }
    if n == 1 {
        g.connect(0, 0).expect("vertex exists");
    }
    let budget = (max_ports - g.port_count()) / 2;
    let extra = rng.random_range(0..=budget);
    for _ in 0..extra {
        let u = rng.random_range(0..n);
        let v = rng.random_range(0..n);
        g.connect(u, v).expect("vertex exists");
    }
    g
}

fn gaussian_pair<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    // Box-Muller
    let u1: f64 = rng.random::<f64>().max(f64::MIN_POSITIVE);
    let u2: f64 = rng.random();
    let r = (-2.0 * u1.ln()).sqrt();
    let theta = 2.0 * std::f64::consts::PI * u2;
    Complex64::new(r * theta.cos(), r * theta.sin())
}

/// Unitary from the QR decomposition of a complex Gaussian matrix,
/// polished to rounding level so long evolutions keep their norm.
pub fn random_unitary<R: Rng + ?Sized>(rng: &mut R, d: usize) -> CoinMatrix {
    if d == 0 {
        return CoinMatrix::zeros(0, 0);
    }
    let z = DMatrix::from_fn(d, d, |_, _| gaussian_pair(rng));
    let mut u = z.qr().q();
    // Newton-Schulz step towards the nearest unitary: U (3I - U^dag U) / 2
    let three = DMatrix::<Complex64>::identity(d, d) * Complex64::new(3.0, 0.0);
    for _ in 0..3 {
        u = &u * (&three - u.adjoint() * &u) * Complex64::new(0.5, 0.0);
    }
    u
}

pub fn random_coins<R: Rng + ?Sized>(rng: &mut R, graph: &PortGraph) -> CoinAssignment {
    CoinAssignment::new_unchecked(graph.degrees().map(|d| random_unitary(rng, d)).collect())
}

pub fn random_state<R: Rng + ?Sized>(rng: &mut R, len: usize) -> WalkState {
    let amps: Vec<Complex64> = (0..len).map(|_| gaussian_pair(rng)).collect();
    let norm = amps.iter().map(Complex64::norm_sqr).sum::<f64>().sqrt();
    WalkState::from_amplitudes(amps.into_iter().map(|a| a / norm).collect())
}
