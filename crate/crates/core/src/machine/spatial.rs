//! Machines reading the whole word at once from a row of dual-rail input
//! vertices.
//!
//! For a word of length `n` with `m = n / 2` symbol pairs the graph has
//!
//! * `2n` input vertices, ids `0..2n`: position `j` (1-based) owns the
//!   `a`-vertex `2j - 2` and the `b`-vertex `2j - 1`;
//! * `m` Grover vertices `G_j` of degree 4, each joined to the `a`-vertex
//!   of one position and the `b`-vertex of another;
//! * two degree-2 wire vertices per `G_j`, leading to
//! * one accepting vertex of degree `2m`;
//! * one sink joined to every input vertex that belongs to no pair.
//!
//! Edges are added pair by pair: `a-input - G_j`, `b-input - G_j`,
//! `G_j - W_j0`, `G_j - W_j1`, `W_j0 - acc`, `W_j1 - acc`; then every unpaired
//! input vertex, in id order, is joined to the sink. Every vertex carries
//! the Grover coin of its degree (`[1]` on inputs, `σ_x` on wires) except the
//! sink, which carries the identity.
//!
//! A member word places amplitude `1/√n` on both inputs of every `G_j`.
//! Step 1 moves it into `G_j`, step 2 transfers it entirely onto the wire
//! ports, step 3 delivers it to the accepting vertex. Amplitude on an
//! unpaired input bounces between the input and the sink forever.

use crate::coin::{self, CoinAssignment};
use crate::error::{Result, WalkError};
use crate::graph::{PortGraph, VertexId};
use crate::machine::{DualRailSlot, Family, InputLayout, Language, Machine};
use crate::word::{Symbol, Word};

/// Steps to certainty for every spatial machine, independent of `n`.
pub const SPATIAL_STEPS: usize = 3;

/// `a^m b^m` on words of length `2m`: `G_j` joins position `j` to
/// position `m + j`.
pub fn build_spatial_eq(m: usize) -> Result<Machine> {
    if m == 0 {
        return Err(WalkError::ZeroSize("pair count"));
    }
    spatial_eq_for_length(2 * m)
}

/// `(ab)^m` on words of length `2m`: `G_j` joins positions `2j - 1` and
/// `2j`.
pub fn build_spatial_ab(m: usize) -> Result<Machine> {
    if m == 0 {
        return Err(WalkError::ZeroSize("pair count"));
    }
    spatial_ab_for_length(2 * m)
}

/// Spatial `L_eq` machine for any input length. For odd `n` the last
/// position is left unpaired, so its amplitude never reaches the accepting
/// vertex.
pub fn spatial_eq_for_length(n: usize) -> Result<Machine> {
    if n == 0 {
        return Err(WalkError::ZeroSize("word length"));
    }
    let m = n / 2;
    let pairs = (0..m).map(|j| (j, m + j)).collect();
    build(Family::SpatialEq, Language::Eq, n, pairs)
}

pub fn spatial_ab_for_length(n: usize) -> Result<Machine> {
    if n == 0 {
        return Err(WalkError::ZeroSize("word length"));
    }
    let pairs = (0..n / 2).map(|j| (2 * j, 2 * j + 1)).collect();
    build(Family::SpatialAb, Language::Ab, n, pairs)
}

/// `pairs[j] = (p, q)`: `G_j` reads the `a`-vertex of position `p` and the
/// `b`-vertex of position `q` (0-based).
fn build(
    family: Family,
    language: Language,
    n: usize,
    pairs: Vec<(usize, usize)>,
) -> Result<Machine> {
    let m = pairs.len();
    let mut g = PortGraph::with_vertices(2 * n);
    let slots: Vec<DualRailSlot> = (0..n)
        .map(|p| DualRailSlot {
            a: 2 * p,
            b: 2 * p + 1,
        })
        .collect();
    let grovers: Vec<VertexId> = (0..m).map(|_| g.add_vertex()).collect();
    let wires: Vec<[VertexId; 2]> = (0..m).map(|_| [g.add_vertex(), g.add_vertex()]).collect();
    let acc = g.add_vertex();
    let sink = g.add_vertex();

    let mut paired = vec![false; 2 * n];
    for (j, &(p, q)) in pairs.iter().enumerate() {
        let (a_in, b_in) = (slots[p].a, slots[q].b);
        paired[a_in] = true;
        paired[b_in] = true;
        g.connect(a_in, grovers[j])?;
        g.connect(b_in, grovers[j])?;
        g.connect(grovers[j], wires[j][0])?;
        g.connect(grovers[j], wires[j][1])?;
        g.connect(wires[j][0], acc)?;
        g.connect(wires[j][1], acc)?;
    }
    for v in (0..2 * n).filter(|&v| !paired[v]) {
        g.connect(v, sink)?;
    }

    let coins = CoinAssignment::from_fn(&g, |v, d| match d {
        0 => Ok(coin::CoinMatrix::zeros(0, 0)),
        _ if v == sink => Ok(coin::identity(d)),
        _ => coin::grover(d),
    })?;

    Machine::new(
        family,
        language,
        g,
        coins,
        InputLayout::Spatial(slots),
        vec![acc],
        vec![sink],
        SPATIAL_STEPS,
    )
}

/// Vertex count of the reconstruction for input length `n`:
/// `2n + 3⌊n/2⌋ + 2`.
pub fn vertex_count_for_length(n: usize) -> usize {
    2 * n + 3 * (n / 2) + 2
}

pub(crate) fn notes(machine: &Machine) -> String {
    let n = machine.input_length();
    let m = n / 2;
    let pairing = match machine.family() {
        Family::SpatialEq => "G_j joins the a-vertex of position j to the b-vertex of position m+j",
        _ => "G_j joins the a-vertex of position 2j-1 to the b-vertex of position 2j",
    };
    format!(
        "{family}: n = {n}, m = {m}\n\
         inputs: vertices 0..{inputs} (position j -> a = 2j-2, b = 2j-1), one port each, coin [1]\n\
         {pairing}\n\
         Grover vertices: {g0}..{g1}, ports (a-in, b-in, wire0, wire1), coin G_4\n\
         wires: {w0}..{w1}, ports (G, acc), coin G_2\n\
         accepting vertex: {acc}, degree {dacc}, coin G_{dacc}\n\
         sink: {sink} (rejecting), joined to every unpaired input, identity coin\n\
         edge order: per pair (a-in,G) (b-in,G) (G,W0) (G,W1) (W0,acc) (W1,acc); then unpaired inputs to sink in id order\n\
         steps: {steps}\n\
         vertices: {total} (2n + 3m + 2; target {target}, the extra vertices are the wires and the sink)\n",
        target = if machine.family() == Family::SpatialEq { 4 * n + 3 } else { 4 * n + 1 },
        family = machine.family(),
        inputs = 2 * n,
        g0 = 2 * n,
        g1 = 2 * n + m,
        w0 = 2 * n + m,
        w1 = 2 * n + 3 * m,
        acc = machine.accepting()[0],
        dacc = 2 * m,
        sink = machine.rejecting()[0],
        steps = machine.steps(),
        total = machine.vertex_count(),
    ) + &one_off_report(machine)
}

/// Measured acceptance of `a^m b^(m-1) a` against the target constant and
/// the `1 - 1/(2m)` bound. Empty unless the machine is an `L_eq` machine
/// with at least two pairs.
fn one_off_report(machine: &Machine) -> String {
    let n = machine.input_length();
    let m = n / 2;
    if machine.family() != Family::SpatialEq || n % 2 == 1 || m < 2 {
        return String::new();
    }
    let mut s = Word::a_m_b_m(m).symbols().to_vec();
    s[n - 1] = Symbol::A;
    let Ok(p) = machine.acceptance(&Word::new(s)) else {
        return String::new();
    };
    let mf = m as f64;
    let target = 1.0 - 1.0 / (8.0 * mf) - 1.0 / (4.0 * mf);
    let bound = 1.0 - 1.0 / (2.0 * mf);
    format!(
        "a^m b^(m-1) a: measured {p:.15} = 1 - 3/(4m), m(1 - P) = {c:.15}\n\
         target 1 - 1/(8m) - 1/(4m) = {target:.15}: {verdict}\n\
         bound 1 - 1/(2m) = {bound:.15}: {held}\n",
        c = mf * (1.0 - p),
        verdict = if (p - target).abs() < 1e-12 {
            "matches"
        } else {
            "deviation"
        },
        held = if p <= bound + 1e-12 {
            "holds"
        } else {
            "violated"
        },
    )
}
