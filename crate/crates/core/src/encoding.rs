//! Initial walk states for classical words and symbol-wise quantum inputs.

use num_complex::Complex64;

use crate::error::{Result, WalkError};
use crate::machine::{InputLayout, Machine};
use crate::state::WalkState;
use crate::word::{Symbol, Word};

/// Symbol-wise superposition of two equal-length words. Where they agree
/// the symbol is classical; where they differ it is `η|w1_i> + √(1-|η|²)|w2_i>`,
/// scaled by `1/√n`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuantumInputSpec {
    w1: Word,
    w2: Word,
    eta: Complex64,
}

impl QuantumInputSpec {
    pub fn new(w1: Word, w2: Word, eta: Complex64) -> Result<Self> {
        if w1.len() != w2.len() {
            return Err(WalkError::UnequalWordLengths(w1.len(), w2.len()));
        }
        if w1.is_empty() {
            return Err(WalkError::EmptyWord);
        }
        // allow for rounding in |η| computed from a normalised pair
        if eta.norm().is_nan() || eta.norm() > 1.0 + 1e-15 {
            return Err(WalkError::EtaOutOfRange(eta.norm()));
        }
        Ok(QuantumInputSpec { w1, w2, eta })
    }

    pub fn real(w1: Word, w2: Word, eta: f64) -> Result<Self> {
        Self::new(w1, w2, Complex64::new(eta, 0.0))
    }

    pub fn w1(&self) -> &Word {
        &self.w1
    }

    pub fn w2(&self) -> &Word {
        &self.w2
    }

    pub fn eta(&self) -> Complex64 {
        self.eta
    }

    /// Amplitudes `(on a, on b)` for position `i`, before the `1/√n` factor.
    fn symbol_amplitudes(&self, i: usize) -> (Complex64, Complex64) {
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        let classical = |s: Symbol| match s {
            Symbol::A => (one, zero),
            Symbol::B => (zero, one),
        };
        let (s1, s2) = (self.w1[i], self.w2[i]);
        if s1 == s2 {
            return classical(s1);
        }
        let rest = Complex64::new((1.0 - self.eta.norm_sqr()).max(0.0).sqrt(), 0.0);
        match s1 {
            Symbol::A => (self.eta, rest),
            Symbol::B => (rest, self.eta),
        }
    }
}

/// Per-position `(a, b)` amplitudes scaled by `α = 1/√n`.
fn place(machine: &Machine, amps: &[(Complex64, Complex64)]) -> Result<WalkState> {
    let n = machine.input_length();
    if amps.len() != n {
        return Err(WalkError::LengthMismatch {
            expected: n,
            found: amps.len(),
        });
    }
    let alpha = 1.0 / (n as f64).sqrt();
    let walk = machine.walk();
    let mut state = walk.zero_state();
    let zero = Complex64::new(0.0, 0.0);
    for (j, &(a, b)) in amps.iter().enumerate() {
        let targets = match machine.inputs() {
            InputLayout::Spatial(slots) => [(slots[j].a, 0usize), (slots[j].b, 0usize)],
            InputLayout::Sequential(chain) => [(chain[j], 0usize), (chain[j], 1usize)],
        };
        for ((v, c), amp) in targets.into_iter().zip([a, b]) {
            if amp != zero {
                state.amplitudes_mut()[walk.index(v, c)?] = amp * alpha;
            }
        }
    }
    Ok(state)
}

fn classical_amplitudes(word: &Word) -> Vec<(Complex64, Complex64)> {
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    word.iter()
        .map(|s| match s {
            Symbol::A => (one, zero),
            Symbol::B => (zero, one),
        })
        .collect()
}

/// Dual-rail placement: amplitude `1/√n` on the `a`- or `b`-vertex of
/// every position, on that vertex's only port.
pub fn spatial_initial_state(machine: &Machine, word: &Word) -> Result<WalkState> {
    require(machine, "spatial")?;
    place(machine, &classical_amplitudes(word))
}

/// Chain placement: `(α, 0, 0, 0)` for `a` and `(0, α, 0, 0)` for `b` on the
/// ports of each chain vertex.
pub fn sequential_initial_state(machine: &Machine, word: &Word) -> Result<WalkState> {
    require(machine, "sequential")?;
    place(machine, &classical_amplitudes(word))
}

/// Uses whichever encoding the machine is built for.
pub fn classical_initial_state(machine: &Machine, word: &Word) -> Result<WalkState> {
    place(machine, &classical_amplitudes(word))
}

pub fn quantum_initial_state(machine: &Machine, spec: &QuantumInputSpec) -> Result<WalkState> {
    let amps: Vec<_> = (0..spec.w1.len())
        .map(|i| spec.symbol_amplitudes(i))
        .collect();
    place(machine, &amps)
}

fn require(machine: &Machine, encoding: &'static str) -> Result<()> {
    let found = machine.inputs().encoding_name();
    if found == encoding {
        Ok(())
    } else {
        Err(WalkError::WrongEncoding {
            expected: encoding,
            found,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::machine::{build_sequential_ab, build_spatial_eq, spatial_eq_for_length};
    use approx::assert_abs_diff_eq;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn nonzero(state: &WalkState) -> Vec<(usize, f64)> {
        state
            .amplitudes()
            .iter()
            .enumerate()
            .filter(|(_, a)| a.norm() > 0.0)
            .map(|(i, a)| (i, a.re))
            .collect()
    }

    #[test]
    fn spatial_ab_on_two_slots() {
        let m = build_spatial_eq(1).unwrap();
        let s = spatial_initial_state(&m, &w("ab")).unwrap();
        let h = 1.0 / 2f64.sqrt();
        // input vertices 1 and 4 in 1-based numbering
        assert_eq!(s.get(m.graph(), 0, 0).unwrap().re, h);
        assert_eq!(s.get(m.graph(), 3, 0).unwrap().re, h);
        assert_eq!(nonzero(&s).len(), 2);
        assert!(s.is_normalised());

        let s = spatial_initial_state(&m, &w("bb")).unwrap();
        assert_eq!(s.get(m.graph(), 1, 0).unwrap().re, h);
        assert_eq!(s.get(m.graph(), 3, 0).unwrap().re, h);
    }

    #[test]
    fn spatial_single_symbol() {
        let m = spatial_eq_for_length(1).unwrap();
        let s = spatial_initial_state(&m, &w("a")).unwrap();
        assert_eq!(s.get(m.graph(), 0, 0).unwrap().re, 1.0);
        assert_eq!(nonzero(&s).len(), 1);
    }

    #[test]
    fn sequential_symbol_vectors() {
        let m = build_sequential_ab(2).unwrap();
        let h = 1.0 / 2f64.sqrt();
        let g = m.graph();
        let s = sequential_initial_state(&m, &w("ab")).unwrap();
        let ports = |s: &WalkState, v| {
            (0..4)
                .map(|c| s.get(g, v, c).unwrap().re)
                .collect::<Vec<_>>()
        };
        assert_eq!(ports(&s, 0), [h, 0.0, 0.0, 0.0]);
        assert_eq!(ports(&s, 1), [0.0, h, 0.0, 0.0]);
        let r = sequential_initial_state(&m, &w("ba")).unwrap();
        assert_eq!(ports(&r, 0), [0.0, h, 0.0, 0.0]);
        assert_eq!(ports(&r, 1), [h, 0.0, 0.0, 0.0]);

        let m1 = build_sequential_ab(1).unwrap();
        let s = sequential_initial_state(&m1, &w("a")).unwrap();
        assert_eq!(s.get(m1.graph(), 0, 0).unwrap().re, 1.0);
    }

    #[test]
    fn wrong_encoding_and_length() {
        let spatial = build_spatial_eq(1).unwrap();
        assert!(matches!(
            sequential_initial_state(&spatial, &w("ab")),
            Err(WalkError::WrongEncoding { .. })
        ));
        assert_eq!(
            spatial_initial_state(&spatial, &w("abab")).unwrap_err(),
            WalkError::LengthMismatch {
                expected: 2,
                found: 4
            }
        );
    }

    #[test]
    fn eta_limits_are_bit_identical_to_classical() {
        for m in [
            build_spatial_eq(2).unwrap(),
            crate::machine::build_sequential_eq(2).unwrap(),
        ] {
            let (w1, w2) = (w("aabb"), w("abab"));
            let one = QuantumInputSpec::real(w1.clone(), w2.clone(), 1.0).unwrap();
            let zero = QuantumInputSpec::real(w1.clone(), w2.clone(), 0.0).unwrap();
            assert_eq!(
                quantum_initial_state(&m, &one).unwrap(),
                m.encode(&w1).unwrap()
            );
            assert_eq!(
                quantum_initial_state(&m, &zero).unwrap(),
                m.encode(&w2).unwrap()
            );
        }
    }

    #[test]
    fn half_superposition_splits_every_slot() {
        let m = build_spatial_eq(2).unwrap();
        let eta = 1.0 / 2f64.sqrt();
        let spec = QuantumInputSpec::real(w("aabb"), w("bbaa"), eta).unwrap();
        let s = quantum_initial_state(&m, &spec).unwrap();
        assert_abs_diff_eq!(s.norm_sqr(), 1.0, epsilon = 1e-12);
        let g = m.graph();
        for j in 0..4 {
            assert_abs_diff_eq!(s.get(g, 2 * j, 0).unwrap().re, 0.5 * eta, epsilon = 1e-15);
            assert_abs_diff_eq!(
                s.get(g, 2 * j + 1, 0).unwrap().re,
                0.5 * eta,
                epsilon = 1e-15
            );
        }
    }

    #[test]
    fn quantum_spec_validation() {
        assert_eq!(
            QuantumInputSpec::real(w("ab"), w("abb"), 0.5).unwrap_err(),
            WalkError::UnequalWordLengths(2, 3)
        );
        assert!(matches!(
            QuantumInputSpec::real(w("ab"), w("ba"), 1.5),
            Err(WalkError::EtaOutOfRange(_))
        ));
        let c = QuantumInputSpec::new(w("ab"), w("ba"), Complex64::new(0.0, 1.0)).unwrap();
        assert_eq!(c.eta(), Complex64::new(0.0, 1.0));
    }

    #[test]
    fn complex_eta_keeps_the_norm() {
        let m = build_spatial_eq(2).unwrap();
        let eta = Complex64::from_polar(0.6, 1.1);
        let spec = QuantumInputSpec::new(w("aabb"), w("babb"), eta).unwrap();
        let s = quantum_initial_state(&m, &spec).unwrap();
        assert_abs_diff_eq!(s.norm_sqr(), 1.0, epsilon = 1e-12);
    }
}
