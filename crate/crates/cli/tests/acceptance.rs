//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails.

use std::collections::BTreeMap;
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use qwalk_cli::qinput::{qinput_rows, DEFAULT_ETA_POINTS};
use qwalk_cli::sweep::sweep_rows;
use qwalk_cli::verify::{self, VerifyOptions};
use qwalk_core::{
    build_sequential_ab, build_sequential_word, build_spatial_ab, build_spatial_eq,
    enumerate_words, jaro, words_of_length, Cutpoint, Family, Machine, Symbol, Verdict, Word,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn timed(limit: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let detail = f()?;
    let took = start.elapsed();
    ensure(took < limit, format!("took {took:.2?}, limit {limit:?}"))?;
    Ok(format!("{detail} [{took:.2?}]"))
}

fn certain_after_three(machine: &Machine) -> Result<f64, String> {
    let member = machine.member_word().ok_or("no member word")?;
    let s = machine.encode(&member).map_err(|e| e.to_string())?;
    ensure(
        machine.steps() == 3,
        format!("{} runs {} steps", machine.family(), machine.steps()),
    )?;
    let p = machine
        .acceptance_probability_after(&s, 3)
        .map_err(|e| e.to_string())?;
    ensure(
        (p - 1.0).abs() < 1e-12,
        format!("{} m={}: P = {p}", machine.family(), member.len() / 2),
    )?;
    Ok(p)
}

fn criterion_1() -> Outcome {
    timed(Duration::from_secs(1), || {
        for m in 1..=8 {
            certain_after_three(&build_spatial_eq(m).map_err(|e| e.to_string())?)?;
        }
        Ok("a^m b^m certain after 3 steps, m = 1..8".into())
    })
}

fn criterion_2() -> Outcome {
    for m in 1..=8 {
        certain_after_three(&build_spatial_ab(m).map_err(|e| e.to_string())?)?;
    }
    Ok("(ab)^m certain after 3 steps, m = 1..8".into())
}

fn criterion_3() -> Outcome {
    timed(Duration::from_secs(10), || {
        let cut = Cutpoint::new(0.9, 0.05).map_err(|e| e.to_string())?;
        let mut words = 0;
        let mut closest = f64::MAX;
        for m in 1..=4 {
            let bound = 1.0 - 1.0 / (2.0 * m as f64);
            for machine in [build_spatial_eq(m).unwrap(), build_spatial_ab(m).unwrap()] {
                let member = machine.member_word().unwrap();
                for w in words_of_length(2 * m) {
                    let p = machine.acceptance(&w).map_err(|e| e.to_string())?;
                    let is_member = w == member;
                    words += 1;
                    if !is_member {
                        ensure(p < 1.0, format!("{} {w}: P = {p}", machine.family()))?;
                        if w.matching_positions(&member) == 2 * m - 1 {
                            closest = closest.min(bound - p);
                            ensure(
                                p <= bound + 1e-12,
                                format!("{} {w}: P = {p} > {bound}", machine.family()),
                            )?;
                        }
                    }
                    let want = if is_member {
                        Verdict::Accept
                    } else {
                        Verdict::Reject
                    };
                    let got = cut.judge(p).verdict;
                    ensure(
                        got == want,
                        format!("{} {w}: P = {p} classified {got:?}", machine.family()),
                    )?;
                }
            }
        }
        Ok(format!(
            "{words} words, 0 misclassified; one-off words stay >= {closest:.4} below 1 - 1/(2m)"
        ))
    })
}

fn one_off(m: usize) -> Word {
    let mut s = Word::a_m_b_m(m).symbols().to_vec();
    s[2 * m - 1] = Symbol::A;
    Word::new(s)
}

fn criterion_4() -> Outcome {
    let mut measured = Vec::new();
    for m in 2..=8 {
        let machine = build_spatial_eq(m).unwrap();
        let p = machine.acceptance(&one_off(m)).map_err(|e| e.to_string())?;
        let mf = m as f64;
        ensure(
            p <= 1.0 - 1.0 / (2.0 * mf) + 1e-12,
            format!("m={m}: bound violated, P = {p}"),
        )?;
        let target = 1.0 - 1.0 / (8.0 * mf) - 1.0 / (4.0 * mf);
        let notes = machine.construction_notes();
        let differs = (p - target).abs() > 1e-12;
        ensure(
            notes.contains(if differs { "deviation" } else { "matches" })
                && notes.contains("holds"),
            format!("m={m}: construction notes do not report the comparison"),
        )?;
        measured.push((m, p, mf * (1.0 - p), target));
    }
    let c0 = measured[0].2;
    ensure(
        measured.iter().all(|&(_, _, c, _)| (c - c0).abs() < 1e-12),
        format!("m(1 - P) not constant: {measured:?}"),
    )?;
    let (m, p, _, target) = measured[0];
    Ok(format!(
        "m(1 - P) = {c0:.6} for m = 2..8 (m={m}: P = {p:.6}, target {target:.6}, deviation reported), bound holds"
    ))
}

fn criterion_5() -> Outcome {
    for m in 1..=8 {
        let machine = build_sequential_ab(2 * m).unwrap();
        let p = machine
            .acceptance(&Word::ab_m(m))
            .map_err(|e| e.to_string())?;
        ensure((p - 1.0).abs() < 1e-12, format!("(ab)^{m}: P = {p}"))?;
    }
    let abab: Word = "abab".parse().unwrap();
    let seq = build_sequential_ab(4).unwrap();
    let s = seq.encode(&abab).unwrap();
    let at5 = seq.acceptance_probability_after(&s, 5).unwrap();
    let at4 = seq.acceptance_probability_after(&s, 4).unwrap();
    ensure(
        (at5 - 1.0).abs() < 1e-12 && at4 < 1.0 - 1e-9,
        format!("abab: P(4) = {at4}, P(5) = {at5}"),
    )?;

    let word = build_sequential_word(&abab).unwrap();
    let p = word.acceptance(&abab).unwrap();
    ensure(
        word.steps() == 6 && word.non_input_vertex_count() == 8 && (p - 1.0).abs() < 1e-12,
        format!(
            "seq-word(abab): {} steps, {} non-input vertices, P = {p}",
            word.steps(),
            word.non_input_vertex_count()
        ),
    )?;

    let mut dist: BTreeMap<String, usize> = BTreeMap::new();
    let mut all_half = true;
    for w in words_of_length(4).filter(|w| *w != abab) {
        let p = seq.acceptance(&w).unwrap();
        ensure(p >= 0.5 - 1e-9, format!("{w}: P = {p} < 1/2"))?;
        all_half &= (p - 0.5).abs() < 1e-9;
        *dist.entry(format!("{p:.4}")).or_default() += 1;
    }
    let notes = seq.construction_notes();
    ensure(
        all_half || (notes.contains("deviation") && notes.contains("unattainable")),
        "non-members differ from 1/2 and the notes do not document it",
    )?;
    Ok(format!(
        "members certain, abab at exactly 5 steps, seq-word 6 steps / 8 vertices; non-members {} {dist:?}, all >= 1/2",
        if all_half { "all 1/2" } else { "deviate from 1/2 (documented):" }
    ))
}

fn criterion_6() -> Outcome {
    timed(Duration::from_secs(30), || {
        let mut summary = Vec::new();
        for (family, expected) in [
            (Family::SpatialEq, ["ab", "aabb", "aaabbb"]),
            (Family::SequentialAb, ["ab", "abab", "ababab"]),
        ] {
            let rows = sweep_rows(family, 7).map_err(|e| e.to_string())?;
            let first: Vec<_> = rows.into_iter().take(200).collect();
            let mut ones = Vec::new();
            for r in &first {
                ensure(
                    (0.0..=1.0 + 1e-12).contains(&r.acceptance),
                    format!("{}: {}", r.word, r.acceptance),
                )?;
                if (r.acceptance - 1.0).abs() < 1e-9 {
                    ensure(
                        (r.jaro - 1.0).abs() < 1e-12,
                        format!("{}: jaro {}", r.word, r.jaro),
                    )?;
                    ensure(
                        (r.acceptance - 1.0).abs() < 1e-12,
                        format!("{}: {}", r.word, r.acceptance),
                    )?;
                    ones.push(r.word.clone());
                }
            }
            ensure(ones == expected, format!("{family}: certain rows {ones:?}"))?;
            summary.push(format!("{family} {ones:?}"));
        }
        Ok(format!(
            "certain rows among the first 200: {}",
            summary.join(", ")
        ))
    })
}

fn criterion_7() -> Outcome {
    timed(Duration::from_secs(10), || {
        let base: Word = "aabb".parse().unwrap();
        let rows =
            qinput_rows(Family::SpatialEq, &base, DEFAULT_ETA_POINTS).map_err(|e| e.to_string())?;
        let mut curves: BTreeMap<(usize, u64), Vec<f64>> = BTreeMap::new();
        for r in &rows {
            if r.eta == 1.0 {
                ensure(
                    (r.fidelity - 1.0).abs() < 1e-12,
                    format!("{} at eta 1: {}", r.w2, r.fidelity),
                )?;
            }
            curves
                .entry((r.match_count, r.eta.to_bits()))
                .or_default()
                .push(r.fidelity);
        }
        for ((k, eta), fs) in &curves {
            let (lo, hi) = fs
                .iter()
                .fold((f64::MAX, f64::MIN), |(a, b), &f| (a.min(f), b.max(f)));
            ensure(
                hi - lo < 1e-9,
                format!("k={k} eta={}: spread {}", f64::from_bits(*eta), hi - lo),
            )?;
        }
        let counts: Vec<usize> = {
            let mut ks: Vec<usize> = curves.keys().map(|(k, _)| *k).collect();
            ks.dedup();
            ks
        };
        ensure(counts == [0, 1, 2, 3], format!("match counts {counts:?}"))?;
        Ok(format!(
            "{} rows collapse onto 4 curves (match counts 0..3); eta = 1 gives 1",
            rows.len()
        ))
    })
}

fn criterion_8() -> Outcome {
    let checks = verify::run(&VerifyOptions::default());
    let mut parts = Vec::new();
    for name in ["oracle-equivalence", "norm-conservation", "grover-transfer"] {
        let c = checks
            .iter()
            .find(|c| c.name == name)
            .ok_or(format!("missing check {name}"))?;
        ensure(c.passed, c.report_line())?;
        parts.push(format!("{name} {:.1e}", c.defect.unwrap_or(0.0)));
    }
    Ok(parts.join(", "))
}

/// Independent quadratic matcher over plain chars.
fn brute_jaro(s1: &[char], s2: &[char]) -> f64 {
    let (l1, l2) = (s1.len() as i64, s2.len() as i64);
    let window = (l1.max(l2) / 2 - 1).max(0);
    let mut used1 = vec![false; s1.len()];
    let mut used2 = vec![false; s2.len()];
    for i in 0..l1 {
        for j in 0..l2 {
            if (i - j).abs() <= window && !used2[j as usize] && s1[i as usize] == s2[j as usize] {
                used1[i as usize] = true;
                used2[j as usize] = true;
                break;
            }
        }
    }
    let a: Vec<char> = s1
        .iter()
        .zip(&used1)
        .filter(|(_, &u)| u)
        .map(|(c, _)| *c)
        .collect();
    let b: Vec<char> = s2
        .iter()
        .zip(&used2)
        .filter(|(_, &u)| u)
        .map(|(c, _)| *c)
        .collect();
    if a.is_empty() {
        return 0.0;
    }
    let m = a.len() as f64;
    let t = a.iter().zip(&b).filter(|(x, y)| x != y).count() as f64 / 2.0;
    (m / l1 as f64 + m / l2 as f64 + (m - t) / m) / 3.0
}

fn criterion_9() -> Outcome {
    let words: Vec<(Word, Vec<char>)> = enumerate_words(8)
        .map(|w| {
            let c = w.to_string().chars().collect();
            (w, c)
        })
        .collect();
    let mut pairs = 0u64;
    for (w1, c1) in &words {
        for (w2, c2) in words.iter().filter(|(w, _)| w.len() == w1.len()) {
            let ours = jaro(w1, w2).map_err(|e| e.to_string())?;
            let oracle = brute_jaro(c1, c2);
            ensure(
                (ours - oracle).abs() < 1e-12,
                format!("{w1} {w2}: {ours} vs {oracle}"),
            )?;
            pairs += 1;
        }
    }
    let d = jaro(&"aabb".parse().unwrap(), &"abab".parse().unwrap()).unwrap();
    ensure(
        (d - 11.0 / 12.0).abs() < 1e-12,
        format!("jaro(aabb, abab) = {d}"),
    )?;
    Ok(format!(
        "{pairs} equal-length pairs up to length 8 agree; jaro(aabb, abab) = 11/12"
    ))
}

fn run_cli(args: &[&str]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_qwalk"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    ensure(
        out.status.success(),
        format!("qwalk {args:?}: {}", String::from_utf8_lossy(&out.stderr)),
    )?;
    Ok(out.stdout)
}

fn read_dir_bytes(dir: &Path) -> Result<BTreeMap<String, Vec<u8>>, String> {
    let mut files = BTreeMap::new();
    for entry in std::fs::read_dir(dir).map_err(|e| e.to_string())? {
        let entry = entry.map_err(|e| e.to_string())?;
        if entry.path().is_dir() {
            continue;
        }
        let bytes = std::fs::read(entry.path()).map_err(|e| e.to_string())?;
        files.insert(entry.file_name().to_string_lossy().into_owned(), bytes);
    }
    Ok(files)
}

fn criterion_10() -> Outcome {
    let runs: Vec<tempfile::TempDir> = (0..2).map(|_| tempfile::tempdir().unwrap()).collect();
    for dir in &runs {
        let d = |name: &str| dir.path().join(name).to_string_lossy().into_owned();
        let ex = d("export");
        let commands: Vec<Vec<String>> = vec![
            vec![
                "sweep".into(),
                "--family".into(),
                "spatial-eq".into(),
                "--max-len".into(),
                "10".into(),
                "--out".into(),
                d("spatial-eq.csv"),
            ],
            vec![
                "sweep".into(),
                "--family".into(),
                "spatial-ab".into(),
                "--max-len".into(),
                "8".into(),
                "--out".into(),
                d("spatial-ab.csv"),
            ],
            vec![
                "sweep".into(),
                "--family".into(),
                "seq-ab".into(),
                "--max-len".into(),
                "10".into(),
                "--out".into(),
                d("seq-ab.csv"),
            ],
            vec![
                "sweep".into(),
                "--family".into(),
                "seq-eq".into(),
                "--max-len".into(),
                "8".into(),
                "--out".into(),
                d("seq-eq.csv"),
            ],
            vec!["qinput".into(), "--out".into(), d("qinput.csv")],
            vec![
                "export".into(),
                "--family".into(),
                "spatial-eq".into(),
                "--encode".into(),
                "aabb".into(),
                "--out".into(),
                ex.clone(),
            ],
            vec![
                "simulate".into(),
                "--graph".into(),
                format!("{ex}/graph.txt"),
                "--coins".into(),
                format!("{ex}/coins.txt"),
                "--state".into(),
                format!("{ex}/state.txt"),
                "--steps".into(),
                "3".into(),
                "--out".into(),
                d("simulate.tsv"),
            ],
        ];
        for c in &commands {
            let args: Vec<&str> = c.iter().map(String::as_str).collect();
            run_cli(&args)?;
        }
        let verify_out = run_cli(&["verify", "--graphs", "20"])?;
        std::fs::write(dir.path().join("verify.txt"), verify_out).map_err(|e| e.to_string())?;
    }
    let mut a = read_dir_bytes(runs[0].path())?;
    let mut b = read_dir_bytes(runs[1].path())?;
    a.extend(
        read_dir_bytes(&runs[0].path().join("export"))?
            .into_iter()
            .map(|(k, v)| (format!("export/{k}"), v)),
    );
    b.extend(
        read_dir_bytes(&runs[1].path().join("export"))?
            .into_iter()
            .map(|(k, v)| (format!("export/{k}"), v)),
    );
    ensure(a.keys().eq(b.keys()), "different file sets")?;
    for (name, bytes) in &a {
        ensure(b[name] == *bytes, format!("{name} differs between runs"))?;
    }
    Ok(format!(
        "{} output files byte-identical across two runs",
        a.len()
    ))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("membership certainty, spatial L_eq", criterion_1),
        ("membership certainty, spatial L_ab", criterion_2),
        ("bounded error and classification", criterion_3),
        ("one-symbol-off constant", criterion_4),
        ("sequential machines", criterion_5),
        ("sweep reproduction", criterion_6),
        ("quantum-input collapse", criterion_7),
        ("engine correctness", criterion_8),
        ("jaro oracle", criterion_9),
        ("determinism", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
