//! Fidelity sweeps for symbol-wise superpositions of the member word with
//! every other word of the same length.

use std::io::Write;

use qwalk_core::{
    fidelity, quantum_initial_state, words_of_length, Family, QuantumInputSpec, Result, WalkError,
    Word,
};
use rayon::prelude::*;

use crate::{fmt_unit, machine_for};

pub const DEFAULT_ETA_POINTS: usize = 101;

#[derive(Debug, Clone, PartialEq)]
pub struct QInputRow {
    pub w2: String,
    pub eta: f64,
    pub fidelity: f64,
    /// Positions where `w2` agrees with the base word.
    pub match_count: usize,
}

/// `points` values spaced uniformly in amplitude over `[0, 1]`, endpoints
/// exact.
pub fn eta_grid(points: usize) -> Result<Vec<f64>> {
    if points < 2 {
        return Err(WalkError::InvalidMachine(format!(
            "eta grid needs at least 2 points, got {points}"
        )));
    }
    let last = (points - 1) as f64;
    Ok((0..points).map(|i| i as f64 / last).collect())
}

/// One row per `(w2, η)`, `w2` in enumeration order and `η` ascending.
/// Fidelity is taken against the final state of the classical base word.
pub fn qinput_rows(family: Family, base: &Word, eta_points: usize) -> Result<Vec<QInputRow>> {
    let grid = eta_grid(eta_points)?;
    let machine = machine_for(family, base.len())?;
    if !machine.language().contains(base) {
        return Err(WalkError::NotAMember {
            word: base.to_string(),
        });
    }
    let reference = machine.final_state(&machine.encode(base)?)?;
    let others: Vec<Word> = words_of_length(base.len()).filter(|w| w != base).collect();
    let blocks: Vec<Vec<QInputRow>> = others
        .par_iter()
        .map(|w2| {
            let k = base.matching_positions(w2);
            grid.iter()
                .map(|&eta| {
                    let spec = QuantumInputSpec::real(base.clone(), w2.clone(), eta)?;
                    let fin = machine.final_state(&quantum_initial_state(&machine, &spec)?)?;
                    Ok(QInputRow {
                        w2: w2.to_string(),
                        eta,
                        fidelity: fidelity(&fin, &reference)?,
                        match_count: k,
                    })
                })
                .collect()
        })
        .collect::<Result<_>>()?;
    Ok(blocks.into_iter().flatten().collect())
}

pub fn write_qinput_csv<W: Write>(rows: &[QInputRow], out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["w2", "eta", "fidelity", "match_count"])?;
    for r in rows {
        w.write_record([
            r.w2.clone(),
            fmt_unit(r.eta),
            fmt_unit(r.fidelity),
            r.match_count.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// Sidecar describing how the grid was built.
pub fn metadata(family: Family, base: &Word, eta_points: usize) -> String {
    format!(
        "family {family}\n\
         base {base}\n\
         eta_points {eta_points}\n\
         eta_parameterisation amplitude-linear: eta_i = i/(points-1), differing symbols get eta|w1_i> + sqrt(1-eta^2)|w2_i>\n\
         reference final state of the classical base word\n"
    )
}
