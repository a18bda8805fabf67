//! Words over the binary alphabet `{a, b}`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Result, WalkError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    A,
    B,
}

impl Symbol {
    pub fn as_char(self) -> char {
        match self {
            Symbol::A => 'a',
            Symbol::B => 'b',
        }
    }

    pub fn flipped(self) -> Symbol {
        match self {
            Symbol::A => Symbol::B,
            Symbol::B => Symbol::A,
        }
    }
}

impl TryFrom<char> for Symbol {
    type Error = WalkError;

    fn try_from(c: char) -> Result<Self> {
        match c {
            'a' => Ok(Symbol::A),
            'b' => Ok(Symbol::B),
            other => Err(WalkError::InvalidSymbol(other)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<Symbol>);

impl Word {
    pub fn new(symbols: Vec<Symbol>) -> Self {
        Word(symbols)
    }

    /// `a^m b^m`
    pub fn a_m_b_m(m: usize) -> Self {
        let mut s = vec![Symbol::A; m];
        s.extend(std::iter::repeat_n(Symbol::B, m));
        Word(s)
    }

    /// `(ab)^m`
    pub fn ab_m(m: usize) -> Self {
        Word([Symbol::A, Symbol::B].repeat(m))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Symbol> {
        self.0.iter()
    }

    /// Number of positions at which the two words carry the same symbol.
    pub fn matching_positions(&self, other: &Word) -> usize {
        self.0.iter().zip(&other.0).filter(|(x, y)| x == y).count()
    }

    /// 1-based position in [`enumerate_words`] order.
    pub fn enumeration_index(&self) -> u64 {
        let n = self.len() as u32;
        let bits = self
            .0
            .iter()
            .fold(0u64, |acc, s| (acc << 1) | u64::from(*s == Symbol::B));
        (1u64 << n) - 1 + bits
    }

    /// Word of length `len` whose symbols spell the low `len` bits of `bits`
    /// (most significant first, `1 = b`).
    pub fn from_bits(bits: u64, len: usize) -> Self {
        Word(
            (0..len)
                .rev()
                .map(|i| {
                    if (bits >> i) & 1 == 1 {
                        Symbol::B
                    } else {
                        Symbol::A
                    }
                })
                .collect(),
        )
    }
}

impl FromStr for Word {
    type Err = WalkError;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(Symbol::try_from)
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

impl From<&[Symbol]> for Word {
    fn from(s: &[Symbol]) -> Self {
        Word(s.to_vec())
    }
}

impl std::ops::Index<usize> for Word {
    type Output = Symbol;

    fn index(&self, i: usize) -> &Symbol {
        &self.0[i]
    }
}

/// All words of length `len` in lexicographic order (`a < b`).
pub fn words_of_length(len: usize) -> impl Iterator<Item = Word> {
    assert!(len < 64, "word length {len} too large to enumerate");
    (0..(1u64 << len)).map(move |bits| Word::from_bits(bits, len))
}

/// Every nonempty word up to `max_len`, shortest first, then lexicographic.
pub fn enumerate_words(max_len: usize) -> impl Iterator<Item = Word> {
    (1..=max_len).flat_map(words_of_length)
}

/// `2^(max_len + 1) - 2`
pub fn word_count(max_len: usize) -> u64 {
    (1u64 << (max_len + 1)) - 2
}
