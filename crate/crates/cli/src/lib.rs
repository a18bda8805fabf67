//! Experiment commands behind the `qwalk` binary. Each command is a plain
//! function returning its rows, so tests can call them without a process.

pub mod qinput;
pub mod replay;
pub mod sweep;
pub mod verify;

use qwalk_core::{
    build_sequential_ab, sequential_eq_for_length, spatial_ab_for_length, spatial_eq_for_length,
    Family, Machine, Result, WalkError,
};

/// Longest word length `sweep` accepts; the row count doubles per symbol.
pub const MAX_SWEEP_LEN: usize = 20;

/// The machine of `family` sized for words of length `n`.
pub fn machine_for(family: Family, n: usize) -> Result<Machine> {
    match family {
        Family::SpatialEq => spatial_eq_for_length(n),
        Family::SpatialAb => spatial_ab_for_length(n),
        Family::SequentialAb => build_sequential_ab(n),
        Family::SequentialEq => sequential_eq_for_length(n),
        Family::SequentialWord => Err(WalkError::InvalidMachine(
            "seq-word machines are built from a word, not a length".into(),
        )),
    }
}

/// Fixed-point decimal with 15 digits after the point, clamped to `[0, 1]`.
/// Negative zero prints as zero.
pub fn fmt_unit(x: f64) -> String {
    let x = x.clamp(0.0, 1.0) + 0.0;
    format!("{x:.15}")
}
