//! Machines fed one symbol per step along an input chain.
//!
//! The chain has one vertex per position (ids `0..n`, position `j` is vertex
//! `j - 1`) joined to its neighbours by two parallel links, the `a`-rail and
//! the `b`-rail. Every chain vertex has ports
//! `(arrive-a, arrive-b, leave-a, leave-b)` and the coin `σ_x ⊗ I_2`, so the
//! amplitude of each symbol moves one vertex toward the gadget per step and
//! leaves vertex 0 at step `j`. The far end (`n - 1`) closes its arriving
//! ports with a self-loop. Chain edges are added far end first: the
//! self-loop, then `(j, j-1)` twice for `j = n-1 .. 1`, then the two links
//! out of vertex 0, `a`-rail first.

use crate::coin::{self, CoinAssignment, CoinMatrix};
use crate::error::{Result, WalkError};
use crate::graph::{PortGraph, VertexId};
use crate::machine::{Family, InputLayout, Language, Machine};
use crate::word::{Symbol, Word};

fn chain(g: &mut PortGraph, n: usize) -> Result<Vec<VertexId>> {
    let c: Vec<VertexId> = (0..n).map(|_| g.add_vertex()).collect();
    g.connect(c[n - 1], c[n - 1])?;
    for j in (1..n).rev() {
        g.connect(c[j], c[j - 1])?;
        g.connect(c[j], c[j - 1])?;
    }
    Ok(c)
}

/// Appends a path of `len` vertices hanging off `from`; returns its vertices
/// nearest first.
fn path(g: &mut PortGraph, from: VertexId, len: usize) -> Result<Vec<VertexId>> {
    let vs: Vec<VertexId> = (0..len).map(|_| g.add_vertex()).collect();
    g.connect(from, vs[0])?;
    for i in 1..len {
        g.connect(vs[i - 1], vs[i])?;
    }
    Ok(vs)
}

fn chain_coin() -> CoinMatrix {
    coin::tensor(&coin::pauli_x(), &coin::identity(2)).expect("4x4")
}

/// Coins for everything outside the chain and the interference vertex:
/// swaps on degree 2, reflection on degree 1.
fn wire_coin(d: usize) -> Result<CoinMatrix> {
    match d {
        1 => Ok(coin::identity(1)),
        2 => Ok(coin::pauli_x()),
        _ => Err(WalkError::InvalidMachine(format!(
            "unexpected wire degree {d}"
        ))),
    }
}

/// Shared layout of the Hadamard-interference machines.
///
/// After the chain: `delay` wire vertices on the `a`-rail, the interference
/// vertex `X` with ports `(a-in, b-in, accept, reject)` and coin `σ_x ⊗ H`,
/// then the accepting path and the rejecting path, `⌈T/2⌉` vertices each so
/// that nothing reflects back to `X` within `T` steps.
///
/// The `a` at position `i` reaches `X` at time `i + delay`, the `b` at
/// position `i` at time `i`. An `a` at `i` therefore meets the `b` at
/// `i + delay`; the pair `H(α, α) = (√2 α, 0)` is sent entirely down the
/// accepting path, a lone symbol is split evenly. With `T = n + delay + 1`
/// every amplitude has left `X` by the time of measurement.
fn interference(family: Family, language: Language, n: usize, delay: usize) -> Result<Machine> {
    if n == 0 {
        return Err(WalkError::ZeroSize("word length"));
    }
    let steps = n + delay + 1;
    let path_len = steps.div_ceil(2);

    let mut g = PortGraph::new();
    let c = chain(&mut g, n)?;
    let delays: Vec<VertexId> = (0..delay).map(|_| g.add_vertex()).collect();
    let x = g.add_vertex();
    let mut prev = c[0];
    for &d in &delays {
        g.connect(prev, d)?;
        prev = d;
    }
    g.connect(prev, x)?;
    g.connect(c[0], x)?;
    let accept = path(&mut g, x, path_len)?;
    let reject = path(&mut g, x, path_len)?;

    let interfere = coin::tensor(&coin::pauli_x(), &coin::hadamard())?;
    let coins = CoinAssignment::from_fn(&g, |v, d| {
        if v < n {
            Ok(chain_coin())
        } else if v == x {
            Ok(interfere.clone())
        } else {
            wire_coin(d)
        }
    })?;

    Machine::new(
        family,
        language,
        g,
        coins,
        InputLayout::Sequential(c),
        accept,
        reject,
        steps,
    )
}

/// `(ab)^m` detector for inputs of length `n`: the `a`-rail is delayed by
/// one vertex so that each `a` interferes with the symbol after it.
/// Members are accepted with certainty from step `n + 1`; the machine runs
/// `n + 2` steps so a trailing `a` is also routed before measurement.
pub fn build_sequential_ab(n: usize) -> Result<Machine> {
    interference(Family::SequentialAb, Language::Ab, n, 1)
}

/// `a^m b^m` detector: the `a`-rail is delayed by `m` vertices so each `a`
/// meets the symbol `m` positions later. Runs `3m + 1` steps.
pub fn build_sequential_eq(m: usize) -> Result<Machine> {
    if m == 0 {
        return Err(WalkError::ZeroSize("pair count"));
    }
    interference(Family::SequentialEq, Language::Eq, 2 * m, m)
}

/// Sequential `L_eq` machine for any input length, delay `⌊n/2⌋`.
pub fn sequential_eq_for_length(n: usize) -> Result<Machine> {
    interference(Family::SequentialEq, Language::Eq, n, n / 2)
}

/// Vertex index along a path of `len` vertices after `k` steps from its
/// first vertex, reflecting at the far end.
fn folded(k: usize, len: usize) -> usize {
    if k < len {
        k
    } else {
        2 * len - 2 - k
    }
}

/// Smallest path length that holds the rail for `steps` steps and keeps
/// the positions carrying `symbol` apart from the others at measurement.
fn rail_length(word: &Word, symbol: Symbol, steps: usize) -> usize {
    let n = word.len();
    let min = (steps + 2) / 2;
    (min..)
        .find(|&len| {
            let at = |j: usize| folded(steps - 1 - j, len);
            (0..n).filter(|&i| word[i] == symbol).all(|i| {
                (0..n)
                    .filter(|&k| word[k] != symbol)
                    .all(|k| at(i) != at(k))
            })
        })
        .expect("an unfolded path always separates positions")
}

/// Swap-only machine for a single word. Each rail feeds its own path
/// (`σ_x` wires, reflecting end), and the accepting set is wherever the
/// amplitude of a correctly placed symbol sits after `n + 2` steps. Each
/// position contributes `1/n` when it matches, so the acceptance
/// probability is the fraction of matching positions.
///
/// Edge order after the chain: `leave-a - A_0`, the `A` path, `leave-b - B_0`,
/// the `B` path.
pub fn build_sequential_word(word: &Word) -> Result<Machine> {
    if word.is_empty() {
        return Err(WalkError::EmptyWord);
    }
    let n = word.len();
    let steps = n + 2;
    let len_a = rail_length(word, Symbol::A, steps);
    let len_b = rail_length(word, Symbol::B, steps);

    let mut g = PortGraph::new();
    let c = chain(&mut g, n)?;
    let rail_a = path(&mut g, c[0], len_a)?;
    let rail_b = path(&mut g, c[0], len_b)?;

    // position j (0-based) enters its rail at time j + 1
    let mut accepting: Vec<VertexId> = (0..n)
        .map(|j| match word[j] {
            Symbol::A => rail_a[folded(steps - 1 - j, len_a)],
            Symbol::B => rail_b[folded(steps - 1 - j, len_b)],
        })
        .collect();
    accepting.sort_unstable();
    accepting.dedup();

    let coins = CoinAssignment::from_fn(&g, |v, d| {
        if v < n {
            Ok(chain_coin())
        } else {
            wire_coin(d)
        }
    })?;

    Machine::new(
        Family::SequentialWord,
        Language::Word(word.clone()),
        g,
        coins,
        InputLayout::Sequential(c),
        accepting,
        Vec::new(),
        steps,
    )
}

pub(crate) fn notes(machine: &Machine) -> String {
    let n = machine.input_length();
    let mut out = format!(
        "{}: n = {n}, language {}\n\
         chain: vertices 0..{n} (position j -> vertex j-1), ports (arrive-a, arrive-b, leave-a, leave-b), coin sx(x)I2\n\
         chain edge order: self-loop at {last}, then (j, j-1) twice for j = {last}..1\n",
        machine.family(),
        machine.language(),
        last = n - 1,
    );
    match machine.family() {
        Family::SequentialWord => out.push_str(
            "gadget: a-rail path and b-rail path (sx wires, reflecting ends); \
             accepting set = positions of correctly placed symbols at measurement\n",
        ),
        _ => out.push_str(
            "gadget: a-rail delay wires, interference vertex (a-in, b-in, accept, reject) with coin sx(x)H, \
             accepting path, rejecting path\n",
        ),
    }
    if machine.family() == Family::SequentialAb {
        out.push_str(&format!(
            "steps n + 2 = {} (target n + 1; a trailing a needs the extra step, members are already certain at n + 1)\n\
             non-members: measured 1/2 + k/n, k = number of adjacent ab pairs (target exactly 1/2: deviation)\n\
             exactly 1/2 is unattainable for this encoding: once the member is certain, a one-symbol-off word \
             has P >= ((n-1)/n)^2 = {:.15}\n",
            machine.steps(),
            ((n as f64 - 1.0) / n as f64).powi(2),
        ));
    }
    out.push_str(&format!(
        "accepting: {:?}\nrejecting: {:?}\nsteps: {}\nvertices: {} ({} besides inputs)\n",
        machine.accepting(),
        machine.rejecting(),
        machine.steps(),
        machine.vertex_count(),
        machine.non_input_vertex_count(),
    ));
    out
}
