//! Jaro similarity and state fidelity.

use crate::error::{Result, WalkError};
use crate::machine::Language;
use crate::state::WalkState;
use crate::word::Word;

/// Intermediate quantities of a Jaro comparison.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JaroBreakdown {
    /// `max(⌊max(|s1|, |s2|) / 2⌋ - 1, 0)`
    pub match_distance: usize,
    pub matches: usize,
    /// Matched characters that appear in a different order in the two words.
    pub differing: usize,
    /// `differing / 2`
    pub transpositions: f64,
    pub similarity: f64,
}

/// Jaro similarity over arbitrary symbol slices. Two empty inputs are an
/// error; one empty input scores 0.
pub fn jaro_slices<T: PartialEq>(s1: &[T], s2: &[T]) -> Result<JaroBreakdown> {
    if s1.is_empty() && s2.is_empty() {
        return Err(WalkError::EmptyWord);
    }
    let match_distance = (s1.len().max(s2.len()) / 2).saturating_sub(1);
    let mut taken = vec![false; s2.len()];
    let mut matched1 = Vec::new();
    for (i, x) in s1.iter().enumerate() {
        let lo = i.saturating_sub(match_distance);
        let hi = (i + match_distance + 1).min(s2.len());
        if let Some(j) = (lo..hi).find(|&j| !taken[j] && s2[j] == *x) {
            taken[j] = true;
            matched1.push(x);
        }
    }
    let matched2 = s2.iter().zip(&taken).filter(|(_, &t)| t).map(|(y, _)| y);
    let differing = matched1
        .iter()
        .zip(matched2)
        .filter(|(x, y)| **x != *y)
        .count();
    let m = matched1.len();
    let transpositions = differing as f64 / 2.0;
    let similarity = if m == 0 {
        0.0
    } else {
        let mf = m as f64;
        (mf / s1.len() as f64 + mf / s2.len() as f64 + (mf - transpositions) / mf) / 3.0
    };
    Ok(JaroBreakdown {
        match_distance,
        matches: m,
        differing,
        transpositions,
        similarity,
    })
}

pub fn jaro_breakdown(w1: &Word, w2: &Word) -> Result<JaroBreakdown> {
    jaro_slices(w1.symbols(), w2.symbols())
}

pub fn jaro(w1: &Word, w2: &Word) -> Result<f64> {
    Ok(jaro_breakdown(w1, w2)?.similarity)
}

/// Reference for Jaro scores in sweeps: the member of `language` of length
/// `n`, or of length `n - 1` when `n` is odd.
pub fn reference_word(language: &Language, n: usize) -> Result<Word> {
    let len = match language {
        Language::Eq | Language::Ab if n < 2 => return Err(WalkError::NoReferenceWord(n)),
        Language::Eq | Language::Ab => n - n % 2,
        Language::Word(_) => n,
    };
    language
        .member_of_length(len)
        .ok_or(WalkError::NoReferenceWord(n))
}

/// `|<φ|ψ>|²`, clamped to `[0, 1]`.
pub fn fidelity(psi: &WalkState, phi: &WalkState) -> Result<f64> {
    Ok(phi.inner_product(psi)?.norm_sqr().clamp(0.0, 1.0))
}
