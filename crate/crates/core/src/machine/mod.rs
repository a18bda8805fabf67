//! Language-accepting walk machines.
//!
//! A [`Machine`] bundles a frozen walk with the vertices that receive the
//! encoded input, the accepting and rejecting vertex sets, and the number
//! of steps to run before measuring. Constructors live in [`spatial`] and
//! [`sequential`]; each documents the exact order in which it adds edges,
//! which fixes every port label and therefore every state vector.

pub mod export;
pub mod sequential;
pub mod spatial;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::coin::CoinAssignment;
use crate::engine::QuantumWalk;
use crate::error::{Result, WalkError};
use crate::graph::{PortGraph, VertexId};
use crate::state::WalkState;
use crate::word::{words_of_length, Word};

pub use sequential::{
    build_sequential_ab, build_sequential_eq, build_sequential_word, sequential_eq_for_length,
};
pub use spatial::{
    build_spatial_ab, build_spatial_eq, spatial_ab_for_length, spatial_eq_for_length,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    SpatialEq,
    SpatialAb,
    SequentialAb,
    SequentialEq,
    SequentialWord,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::SpatialEq => "spatial-eq",
            Family::SpatialAb => "spatial-ab",
            Family::SequentialAb => "seq-ab",
            Family::SequentialEq => "seq-eq",
            Family::SequentialWord => "seq-word",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = WalkError;

    fn from_str(s: &str) -> Result<Self> {
        [
            Family::SpatialEq,
            Family::SpatialAb,
            Family::SequentialAb,
            Family::SequentialEq,
            Family::SequentialWord,
        ]
        .into_iter()
        .find(|f| f.name() == s)
        .ok_or_else(|| WalkError::InvalidMachine(format!("unknown family {s:?}")))
    }
}

/// The set of words a machine is built to accept with certainty.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Language {
    /// `{a^m b^m}`
    Eq,
    /// `{(ab)^m}`
    Ab,
    /// A single word.
    Word(Word),
}

impl Language {
    pub fn contains(&self, w: &Word) -> bool {
        self.member_of_length(w.len()).as_ref() == Some(w)
    }

    /// The unique member of length `n`, if any. The empty word is not
    /// considered a member.
    pub fn member_of_length(&self, n: usize) -> Option<Word> {
        match self {
            Language::Eq if n > 0 && n.is_multiple_of(2) => Some(Word::a_m_b_m(n / 2)),
            Language::Ab if n > 0 && n.is_multiple_of(2) => Some(Word::ab_m(n / 2)),
            Language::Word(w) if w.len() == n => Some(w.clone()),
            _ => None,
        }
    }
}

impl fmt::Display for Language {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Language::Eq => f.write_str("eq"),
            Language::Ab => f.write_str("ab"),
            Language::Word(w) => write!(f, "word {w}"),
        }
    }
}

/// The `a`- and `b`-vertex representing one symbol position.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DualRailSlot {
    pub a: VertexId,
    pub b: VertexId,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InputLayout {
    /// One dual-rail vertex pair per symbol; amplitude goes on port 0 of
    /// the chosen vertex.
    Spatial(Vec<DualRailSlot>),
    /// One chain vertex per symbol; amplitude goes on port 0 (`a`) or
    /// port 1 (`b`).
    Sequential(Vec<VertexId>),
}

impl InputLayout {
    pub fn len(&self) -> usize {
        match self {
            InputLayout::Spatial(s) => s.len(),
            InputLayout::Sequential(s) => s.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn encoding_name(&self) -> &'static str {
        match self {
            InputLayout::Spatial(_) => "spatial",
            InputLayout::Sequential(_) => "sequential",
        }
    }

    pub fn vertices(&self) -> Vec<VertexId> {
        match self {
            InputLayout::Spatial(s) => s.iter().flat_map(|p| [p.a, p.b]).collect(),
            InputLayout::Sequential(s) => s.clone(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Machine {
    family: Family,
    language: Language,
    walk: QuantumWalk,
    inputs: InputLayout,
    accepting: Vec<VertexId>,
    rejecting: Vec<VertexId>,
    steps: usize,
}

impl Machine {
    #[allow(clippy::too_many_arguments)]
    pub(crate) fn new(
        family: Family,
        language: Language,
        graph: PortGraph,
        coins: CoinAssignment,
        inputs: InputLayout,
        accepting: Vec<VertexId>,
        rejecting: Vec<VertexId>,
        steps: usize,
    ) -> Result<Self> {
        if !graph.is_well_formed() {
            return Err(WalkError::InvalidMachine(
                "graph pairing is inconsistent".into(),
            ));
        }
        let walk = QuantumWalk::new(graph, coins)?;
        let machine = Machine {
            family,
            language,
            walk,
            inputs,
            accepting,
            rejecting,
            steps,
        };
        machine.check_invariants()?;
        Ok(machine)
    }

    fn check_invariants(&self) -> Result<()> {
        let n = self.walk.graph().vertex_count();
        let acc: BTreeSet<_> = self.accepting.iter().copied().collect();
        let rej: BTreeSet<_> = self.rejecting.iter().copied().collect();
        let inputs: BTreeSet<_> = self.inputs.vertices().into_iter().collect();
        if let Some(v) = acc.iter().chain(&rej).chain(&inputs).find(|&&v| v >= n) {
            return Err(WalkError::UnknownVertex(*v));
        }
        if acc.intersection(&rej).next().is_some() {
            return Err(WalkError::InvalidMachine(
                "accepting and rejecting sets overlap".into(),
            ));
        }
        if acc.iter().chain(&rej).any(|v| inputs.contains(v)) {
            return Err(WalkError::InvalidMachine(
                "an input vertex is also accepting or rejecting".into(),
            ));
        }
        Ok(())
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn language(&self) -> &Language {
        &self.language
    }

    /// Input length the machine is sized for.
    pub fn input_length(&self) -> usize {
        self.inputs.len()
    }

    pub fn walk(&self) -> &QuantumWalk {
        &self.walk
    }

    pub fn graph(&self) -> &PortGraph {
        self.walk.graph()
    }

    pub fn coins(&self) -> &CoinAssignment {
        self.walk.coins()
    }

    pub fn inputs(&self) -> &InputLayout {
        &self.inputs
    }

    pub fn accepting(&self) -> &[VertexId] {
        &self.accepting
    }

    pub fn rejecting(&self) -> &[VertexId] {
        &self.rejecting
    }

    pub fn steps(&self) -> usize {
        self.steps
    }

    pub fn vertex_count(&self) -> usize {
        self.graph().vertex_count()
    }

    /// Vertices other than those holding the encoded input.
    pub fn non_input_vertex_count(&self) -> usize {
        self.vertex_count() - self.inputs.vertices().len()
    }

    /// The member word this machine accepts with certainty, if its length
    /// admits one.
    pub fn member_word(&self) -> Option<Word> {
        self.language.member_of_length(self.input_length())
    }

    /// Total probability on the accepting vertices of `state` as given (no
    /// evolution).
    pub fn accepting_mass(&self, state: &WalkState) -> Result<f64> {
        self.accepting
            .iter()
            .map(|&v| self.walk.vertex_probability(state, v))
            .sum()
    }

    /// Evolves `state` for [`steps`](Self::steps) steps and measures the
    /// accepting set.
    pub fn acceptance_probability(&self, state: &WalkState) -> Result<f64> {
        self.acceptance_probability_after(state, self.steps)
    }

    pub fn acceptance_probability_after(&self, state: &WalkState, steps: usize) -> Result<f64> {
        let fin = self.walk.evolve(state, steps)?;
        self.accepting_mass(&fin)
    }

    pub fn final_state(&self, state: &WalkState) -> Result<WalkState> {
        self.walk.evolve(state, self.steps)
    }

    pub fn encode(&self, word: &Word) -> Result<WalkState> {
        crate::encoding::classical_initial_state(self, word)
    }

    pub fn acceptance(&self, word: &Word) -> Result<f64> {
        self.acceptance_probability(&self.encode(word)?)
    }

    pub fn classify(&self, state: &WalkState, cutpoint: Cutpoint) -> Result<AcceptanceVerdict> {
        Ok(cutpoint.judge(self.acceptance_probability(state)?))
    }

    /// Largest acceptance probability over the non-member words of the
    /// machine's input length (exhaustive).
    pub fn max_non_member_probability(&self) -> Result<f64> {
        let mut worst = 0.0f64;
        for w in words_of_length(self.input_length()) {
            if !self.language.contains(&w) {
                worst = worst.max(self.acceptance(&w)?);
            }
        }
        Ok(worst)
    }

    /// `1 - max_non_member_probability`: the gap separating non-members
    /// from certain acceptance.
    pub fn error_gap(&self) -> Result<f64> {
        Ok(1.0 - self.max_non_member_probability()?)
    }

    /// Plain-text description of the topology and port order.
    pub fn construction_notes(&self) -> String {
        match self.family {
            Family::SpatialEq | Family::SpatialAb => spatial::notes(self),
            _ => sequential::notes(self),
        }
    }
}

/// Exhaustive maximum non-member acceptance over words of length `n` for
/// the machine family configured by `build`.
pub fn empirical_error_margin<F>(build: F, n: usize) -> Result<f64>
where
    F: Fn(usize) -> Result<Machine>,
{
    build(n)?.max_non_member_probability()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Cutpoint {
    lambda: f64,
    epsilon: f64,
}

impl Cutpoint {
    pub const DEFAULT_LAMBDA: f64 = 0.9;
    pub const DEFAULT_EPSILON: f64 = 0.05;

    pub fn new(lambda: f64, epsilon: f64) -> Result<Self> {
        if !(0.0..1.0).contains(&lambda) {
            return Err(WalkError::InvalidCutpoint(lambda));
        }
        if epsilon.is_nan() || epsilon <= 0.0 {
            return Err(WalkError::InvalidMargin(epsilon));
        }
        Ok(Cutpoint { lambda, epsilon })
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn judge(&self, probability: f64) -> AcceptanceVerdict {
        let verdict = if probability > self.lambda + self.epsilon {
            Verdict::Accept
        } else if probability < self.lambda - self.epsilon {
            Verdict::Reject
        } else {
            Verdict::WithinMargin
        };
        AcceptanceVerdict {
            probability,
            cutpoint: *self,
            verdict,
        }
    }
}

impl Default for Cutpoint {
    fn default() -> Self {
        Cutpoint {
            lambda: Self::DEFAULT_LAMBDA,
            epsilon: Self::DEFAULT_EPSILON,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Accept,
    Reject,
    WithinMargin,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AcceptanceVerdict {
    pub probability: f64,
    pub cutpoint: Cutpoint,
    pub verdict: Verdict,
}
