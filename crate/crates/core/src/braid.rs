//! Braid words and their closures.
//!
//! Strings are drawn horizontally and numbered from the top; they run left to
//! right and a word is read from its left end. The generator `σ_q` is the
//! crossing where string `q` goes down over string `q + 1`, which makes `σ_q`
//! a positive crossing in the usual right-hand convention.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{BraidError, ParseError};

/// A signed generator `σ_q^{±1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    generator: usize,
    positive: bool,
}

impl Letter {
    pub fn new(generator: usize, positive: bool) -> Self {
        assert!(generator >= 1, "generator indices start at 1");
        Self { generator, positive }
    }

    /// Builds a letter from its signed-integer form: `k` is `σ_k`, `-k` is `σ_k⁻¹`.
    pub fn from_signed(value: i64) -> Option<Self> {
        if value == 0 {
            return None;
        }
        Some(Self::new(value.unsigned_abs() as usize, value > 0))
    }

    pub fn generator(&self) -> usize {
        self.generator
    }

    pub fn is_positive(&self) -> bool {
        self.positive
    }

    pub fn sign(&self) -> i32 {
        if self.positive {
            1
        } else {
            -1
        }
    }

    pub fn inverse(&self) -> Self {
        Self { generator: self.generator, positive: !self.positive }
    }

    pub fn to_signed(&self) -> i64 {
        self.generator as i64 * self.sign() as i64
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_signed())
    }
}

/// A braid word on a fixed number of strands.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "BraidWordRepr", into = "BraidWordRepr")]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

#[derive(Serialize, Deserialize)]
struct BraidWordRepr {
    strands: usize,
    letters: Vec<i64>,
}

impl TryFrom<BraidWordRepr> for BraidWord {
    type Error = BraidError;

    fn try_from(repr: BraidWordRepr) -> Result<Self, Self::Error> {
        let letters = repr
            .letters
            .iter()
            .map(|&v| Letter::from_signed(v).ok_or(BraidError::ZeroGenerator))
            .collect::<Result<Vec<_>, _>>()?;
        BraidWord::new(repr.strands, letters)
    }
}

impl From<BraidWord> for BraidWordRepr {
    fn from(word: BraidWord) -> Self {
        BraidWordRepr {
            strands: word.strands,
            letters: word.letters.iter().map(Letter::to_signed).collect(),
        }
    }
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self, BraidError> {
        if strands == 0 {
            return Err(BraidError::NoStrands);
        }
        if let Some(bad) = letters.iter().find(|l| l.generator >= strands) {
            return Err(BraidError::GeneratorOutOfRange { generator: bad.generator, strands });
        }
        Ok(Self { strands, letters })
    }

    pub fn identity(strands: usize) -> Result<Self, BraidError> {
        Self::new(strands, Vec::new())
    }

    /// Builds a word from signed integers.
    pub fn from_signed(strands: usize, values: &[i64]) -> Result<Self, BraidError> {
        let letters = values
            .iter()
            .map(|&v| Letter::from_signed(v).ok_or(BraidError::ZeroGenerator))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Number of positive letters.
    pub fn positive_count(&self) -> usize {
        self.letters.iter().filter(|l| l.positive).count()
    }

    pub fn to_signed(&self) -> Vec<i64> {
        self.letters.iter().map(Letter::to_signed).collect()
    }

    /// `T = σ_{n-1} ⋯ σ_2 σ_1`.
    pub fn descending_twist(strands: usize) -> Result<Self, BraidError> {
        let letters = (1..strands).rev().map(|q| Letter::new(q, true)).collect();
        Self::new(strands, letters)
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &BraidWord) -> Result<Self, BraidError> {
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch { left: self.strands, right: other.strands });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Self { strands: self.strands, letters })
    }

    pub fn inverse(&self) -> Self {
        Self {
            strands: self.strands,
            letters: self.letters.iter().rev().map(Letter::inverse).collect(),
        }
    }

    /// Cancels adjacent inverse pairs until none remain.
    pub fn free_reduce(&self) -> Self {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &letter in &self.letters {
            match out.last() {
                Some(&top) if top == letter.inverse() => {
                    out.pop();
                }
                _ => out.push(letter),
            }
        }
        Self { strands: self.strands, letters: out }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for letter in &self.letters {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{letter}")?;
            first = false;
        }
        Ok(())
    }
}

/// Parses whitespace-separated signed generator indices.
///
/// With `strands` omitted the strand count is `1 + max |entry|`.
pub fn parse_braid(text: &str, strands: Option<usize>) -> Result<BraidWord, BraidError> {
    let mut letters = Vec::new();
    for (line_idx, line) in text.lines().enumerate() {
        let mut rest = line;
        let mut offset = 0;
        while let Some(start) = rest.find(|c: char| !c.is_whitespace()) {
            let tail = &rest[start..];
            let len = tail.find(char::is_whitespace).unwrap_or(tail.len());
            let token = &tail[..len];
            let column = line[..offset + start].chars().count() + 1;
            let at = |message: &str| ParseError {
                line: line_idx + 1,
                column,
                token: token.to_string(),
                message: message.to_string(),
            };
            let value: i64 = token.parse().map_err(|_| at("expected a signed integer"))?;
            if value == 0 {
                return Err(at("generator index 0 is not allowed").into());
            }
            if let Some(n) = strands {
                if value.unsigned_abs() as usize >= n {
                    return Err(at(&format!("generator exceeds {} for {n} strands", n.max(1) - 1)).into());
                }
            }
            letters.push(Letter::new(value.unsigned_abs() as usize, value > 0));
            offset += start + len;
            rest = &tail[len..];
        }
    }
    let strands = strands.unwrap_or_else(|| 1 + letters.iter().map(|l| l.generator).max().unwrap_or(0));
    BraidWord::new(strands, letters)
}

/// Returns `W = T⁻¹ · B`, so that `T · W = B` with `T = σ_{n-1} ⋯ σ_1`.
pub fn to_tw_form(braid: &BraidWord, reduce: bool) -> BraidWord {
    let twist = BraidWord::descending_twist(braid.strands).expect("strand count already validated");
    let word = twist.inverse().concat(braid).expect("same strand count");
    if reduce {
        word.free_reduce()
    } else {
        word
    }
}

/// Permutation of strand positions induced by a braid.
///
/// `image(i)` is the final position of the strand that starts at position `i`
/// (both 0-based).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(size: usize) -> Self {
        Self((0..size).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return None;
            }
        }
        Some(Self(images))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn image(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// Applies `self` first and then `next`.
    pub fn then(&self, next: &Permutation) -> Permutation {
        assert_eq!(self.len(), next.len());
        Permutation(self.0.iter().map(|&i| next.0[i]).collect())
    }

    /// Cycles, each listed from its smallest element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut cycles = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i);
                i = self.0[i];
            }
            cycles.push(cycle);
        }
        cycles
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles().len()
    }
}

pub fn closure_permutation(braid: &BraidWord) -> Permutation {
    // position -> strand currently there
    let mut at: Vec<usize> = (0..braid.strands).collect();
    for letter in &braid.letters {
        at.swap(letter.generator - 1, letter.generator);
    }
    let mut images = vec![0; braid.strands];
    for (pos, &strand) in at.iter().enumerate() {
        images[strand] = pos;
    }
    Permutation(images)
}

pub fn closure_component_count(braid: &BraidWord) -> usize {
    closure_permutation(braid).cycle_count()
}
