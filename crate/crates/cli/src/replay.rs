//! Writing machines to flat files and replaying walks from them.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::Context;
use qwalk_core::{CoinAssignment, Machine, PortGraph, QuantumWalk, Result, WalkState, Word};

use crate::fmt_unit;

/// Per-vertex probabilities after `steps` steps of the walk described by
/// the three texts. Coins are checked for dimension and unitarity.
pub fn simulate(graph: &str, coins: &str, state: &str, steps: usize) -> Result<Vec<f64>> {
    let graph = PortGraph::from_edge_list(graph)?;
    let parsed = CoinAssignment::from_text(coins)?;
    let coins = CoinAssignment::new(&graph, parsed.iter().cloned().collect())?;
    let state = WalkState::from_text(&graph, state)?;
    let walk = QuantumWalk::new(graph, coins)?;
    walk.vertex_probabilities(&walk.evolve(&state, steps)?)
}

pub fn write_probabilities<W: Write>(probs: &[f64], mut out: W) -> std::io::Result<()> {
    writeln!(out, "vertex\tprobability")?;
    for (v, p) in probs.iter().enumerate() {
        writeln!(out, "{v}\t{}", fmt_unit(*p))?;
    }
    out.flush()
}

/// Files written by [`export_machine`].
#[derive(Debug, Clone)]
pub struct ExportedFiles {
    pub machine: PathBuf,
    pub graph: PathBuf,
    pub coins: PathBuf,
    pub notes: PathBuf,
    pub state: Option<PathBuf>,
}

/// Writes `machine.txt`, `graph.txt`, `coins.txt`, `notes.txt` and, when a
/// word is given, `state.txt` holding its encoding.
pub fn export_machine(
    machine: &Machine,
    word: Option<&Word>,
    dir: &Path,
) -> anyhow::Result<ExportedFiles> {
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let write = |name: &str, text: String| -> anyhow::Result<PathBuf> {
        let path = dir.join(name);
        fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?;
        Ok(path)
    };
    let state = match word {
        Some(w) => Some(write(
            "state.txt",
            machine.encode(w)?.to_text(machine.graph()),
        )?),
        None => None,
    };
    Ok(ExportedFiles {
        machine: write("machine.txt", machine.to_export())?,
        graph: write("graph.txt", machine.graph().to_edge_list())?,
        coins: write("coins.txt", machine.coins().to_text())?,
        notes: write("notes.txt", machine.construction_notes())?,
        state,
    })
}
