//! Exhaustive acceptance sweeps over every word up to a length.

use std::io::Write;

use qwalk_core::{
    jaro, reference_word, word_count, words_of_length, Cutpoint, Family, Result, Verdict, WalkError,
};
use rayon::prelude::*;

use crate::{fmt_unit, machine_for, MAX_SWEEP_LEN};

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    /// 1-based position in length-then-lexicographic order.
    pub index: u64,
    pub word: String,
    pub acceptance: f64,
    /// Against the reference member word; 0 when no reference exists.
    pub jaro: f64,
}

pub fn sweep_rows(family: Family, max_len: usize) -> Result<Vec<SweepRow>> {
    if max_len == 0 {
        return Err(WalkError::ZeroSize("max-len"));
    }
    if max_len > MAX_SWEEP_LEN {
        return Err(WalkError::InvalidMachine(format!(
            "max-len {max_len} exceeds the sweep limit of {MAX_SWEEP_LEN}"
        )));
    }
    let mut rows = Vec::with_capacity(word_count(max_len) as usize);
    for n in 1..=max_len {
        let machine = machine_for(family, n)?;
        let reference = reference_word(machine.language(), n).ok();
        let words: Vec<_> = words_of_length(n).collect();
        let chunk: Vec<SweepRow> = words
            .par_iter()
            .map(|w| {
                let acceptance = machine.acceptance(w)?;
                let jaro = match &reference {
                    Some(r) => jaro(w, r)?,
                    None => 0.0,
                };
                Ok(SweepRow {
                    index: w.enumeration_index(),
                    word: w.to_string(),
                    acceptance,
                    jaro,
                })
            })
            .collect::<Result<_>>()?;
        rows.extend(chunk);
    }
    Ok(rows)
}

pub fn write_sweep_csv<W: Write>(rows: &[SweepRow], out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["index", "word", "acceptance", "jaro"])?;
    for r in rows {
        w.write_record([
            r.index.to_string(),
            r.word.clone(),
            fmt_unit(r.acceptance),
            fmt_unit(r.jaro),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// Counts of accept / reject / within-margin verdicts over `rows`.
pub fn verdict_counts(rows: &[SweepRow], cutpoint: Cutpoint) -> [usize; 3] {
    let mut counts = [0; 3];
    for r in rows {
        let i = match cutpoint.judge(r.acceptance).verdict {
            Verdict::Accept => 0,
            Verdict::Reject => 1,
            Verdict::WithinMargin => 2,
        };
        counts[i] += 1;
    }
    counts
}
