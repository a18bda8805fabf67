//! Coined discrete-time quantum walks on port-labelled graphs, and walk
//! machines that accept binary languages by measuring where the amplitude
//! ends up.
//!
//! ```
//! use qwalk_core::{build_spatial_eq, Word};
//!
//! let m = build_spatial_eq(2).unwrap();
//! let p = m.acceptance(&"aabb".parse::<Word>().unwrap()).unwrap();
//! assert!((p - 1.0).abs() < 1e-12);
//! ```

pub mod coin;
pub mod encoding;
pub mod engine;
pub mod error;
pub mod graph;
pub mod machine;
pub mod metrics;
pub mod oracle;
pub mod random;
pub mod state;
pub mod word;

pub use num_complex::Complex64;

pub use coin::{CoinAssignment, CoinMatrix, UNITARITY_TOLERANCE};
pub use encoding::{
    classical_initial_state, quantum_initial_state, sequential_initial_state,
    spatial_initial_state, QuantumInputSpec,
};
pub use engine::{evolve, inner_product, step, vertex_probability, QuantumWalk};
pub use error::{Result, WalkError};
pub use graph::{
    cycle_graph, path_graph, Port, PortGraph, PortIndex, VertexId, Violation, ViolationKind,
};
pub use machine::{
    build_sequential_ab, build_sequential_eq, build_sequential_word, build_spatial_ab,
    build_spatial_eq, empirical_error_margin, sequential_eq_for_length, spatial_ab_for_length,
    spatial_eq_for_length, AcceptanceVerdict, Cutpoint, DualRailSlot, Family, InputLayout,
    Language, Machine, Verdict,
};
pub use metrics::{fidelity, jaro, jaro_breakdown, reference_word, JaroBreakdown};
pub use oracle::{dense_step_matrix, DEFAULT_ORACLE_LIMIT};
pub use state::WalkState;
pub use word::{enumerate_words, word_count, words_of_length, Symbol, Word};
