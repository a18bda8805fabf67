use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use qwalk_cli::qinput::{self, DEFAULT_ETA_POINTS};
use qwalk_cli::{fmt_unit, machine_for, replay, sweep, verify};
use qwalk_core::{
    build_sequential_word, quantum_initial_state, Cutpoint, Family, Machine, QuantumInputSpec,
    Word, DEFAULT_ORACLE_LIMIT,
};

#[derive(Parser)]
#[command(
    name = "qwalk",
    version,
    about = "Quantum-walk language acceptance experiments"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Acceptance probability and Jaro similarity for every word up to a length (CSV)
    Sweep {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long, default_value_t = 16)]
        max_len: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        cut: CutArgs,
    },
    /// Fidelity of superposed inputs against the member word's final state (CSV)
    Qinput {
        #[arg(long, value_parser = parse_family, default_value = "spatial-eq")]
        family: Family,
        #[arg(long, default_value = "aabb")]
        base: Word,
        #[arg(long, default_value_t = DEFAULT_ETA_POINTS)]
        eta_points: usize,
        /// Also writes `<out>.meta` describing the grid
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Replay a walk from graph, coin and state files; per-vertex probabilities (TSV)
    Simulate {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        coins: PathBuf,
        #[arg(long)]
        state: PathBuf,
        #[arg(long)]
        steps: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the engine and machine self-checks; exit status 1 on any failure
    Verify {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        graphs: usize,
        #[arg(long, default_value_t = DEFAULT_ORACLE_LIMIT)]
        oracle_limit: usize,
        #[command(flatten)]
        cut: CutArgs,
        /// Test mode: corrupt one reference coin before checking
        #[arg(long)]
        inject_corrupt_coin: bool,
    },
    /// Write a machine as flat files for `simulate`
    Export {
        #[command(flatten)]
        machine: MachineArgs,
        /// Also write `state.txt` with this word encoded
        #[arg(long)]
        encode: Option<Word>,
        /// Output directory
        #[arg(long)]
        out: PathBuf,
    },
    /// Acceptance probability and verdict for one classical or superposed input
    Accept {
        #[command(flatten)]
        machine: MachineArgs,
        word: Word,
        /// Second word of a superposed input `word w2 eta`
        #[arg(requires = "eta")]
        w2: Option<Word>,
        /// Amplitude on `word` at differing positions, e.g. 0.6 or 0.3+0.4i
        eta: Option<Complex64>,
        #[command(flatten)]
        cut: CutArgs,
    },
}

#[derive(Args)]
struct CutArgs {
    #[arg(long, default_value_t = Cutpoint::DEFAULT_LAMBDA)]
    lambda: f64,
    #[arg(long, default_value_t = Cutpoint::DEFAULT_EPSILON)]
    epsilon: f64,
}

impl CutArgs {
    fn cutpoint(&self) -> anyhow::Result<Cutpoint> {
        Ok(Cutpoint::new(self.lambda, self.epsilon)?)
    }
}

#[derive(Args)]
struct MachineArgs {
    #[arg(long, value_parser = parse_family)]
    family: Family,
    /// Input length (every family except seq-word)
    #[arg(long)]
    length: Option<usize>,
    /// Word recognised by a seq-word machine
    #[arg(long)]
    target: Option<Word>,
}

impl MachineArgs {
    fn build(&self, default_length: Option<usize>) -> anyhow::Result<Machine> {
        if self.family == Family::SequentialWord {
            let Some(t) = &self.target else {
                bail!("seq-word needs --target")
            };
            return Ok(build_sequential_word(t)?);
        }
        let Some(n) = self.length.or(default_length) else {
            bail!("--length is required")
        };
        Ok(machine_for(self.family, n)?)
    }
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: qwalk_core::WalkError| e.to_string())
}

fn output(path: Option<&Path>) -> anyhow::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).with_context(|| format!("creating {}", p.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Sweep {
            family,
            max_len,
            out,
            cut,
        } => {
            let cutpoint = cut.cutpoint()?;
            let rows = sweep::sweep_rows(family, max_len)?;
            sweep::write_sweep_csv(&rows, output(out.as_deref())?)?;
            let [acc, rej, within] = sweep::verdict_counts(&rows, cutpoint);
            eprintln!(
                "{} rows: {acc} accepted, {rej} rejected, {within} within margin",
                rows.len()
            );
        }
        Command::Qinput {
            family,
            base,
            eta_points,
            out,
        } => {
            let rows = qinput::qinput_rows(family, &base, eta_points)?;
            qinput::write_qinput_csv(&rows, output(out.as_deref())?)?;
            if let Some(p) = out {
                let mut meta = p.into_os_string();
                meta.push(".meta");
                fs::write(&meta, qinput::metadata(family, &base, eta_points))
                    .with_context(|| format!("writing {}", PathBuf::from(&meta).display()))?;
            }
        }
        Command::Simulate {
            graph,
            coins,
            state,
            steps,
            out,
        } => {
            let probs = replay::simulate(&read(&graph)?, &read(&coins)?, &read(&state)?, steps)?;
            replay::write_probabilities(&probs, output(out.as_deref())?)?;
        }
        Command::Verify {
            seed,
            graphs,
            oracle_limit,
            cut,
            inject_corrupt_coin,
        } => {
            let opts = verify::VerifyOptions {
                seed,
                graphs,
                oracle_limit,
                cutpoint: cut.cutpoint()?,
                inject_corrupt_coin,
            };
            let checks = verify::run(&opts);
            for c in &checks {
                println!("{}", c.report_line());
            }
            if checks.iter().any(|c| !c.passed) {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Export {
            machine,
            encode,
            out,
        } => {
            let m = machine.build(encode.as_ref().map(Word::len))?;
            let files = replay::export_machine(&m, encode.as_ref(), &out)?;
            eprintln!("wrote machine, graph, coins and notes to {}", out.display());
            if let Some(s) = files.state {
                eprintln!("encoded state: {}", s.display());
            }
        }
        Command::Accept {
            machine,
            word,
            w2,
            eta,
            cut,
        } => {
            let m = machine.build(Some(word.len()))?;
            let state = match (w2, eta) {
                (Some(w2), Some(eta)) => {
                    quantum_initial_state(&m, &QuantumInputSpec::new(word.clone(), w2, eta)?)?
                }
                _ => m.encode(&word)?,
            };
            let verdict = m.classify(&state, cut.cutpoint()?)?;
            println!("{}\t{:?}", fmt_unit(verdict.probability), verdict.verdict);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
