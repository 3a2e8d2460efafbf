use serde::Serialize;

use super::code::FlatBasketCode;
use crate::error::CodeError;

/// Chord picture of a code: `2n` points counter-clockwise on the boundary of
/// the disk, with chord `i` joining the two points labelled `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlatBasketDiagram {
    labels: Vec<usize>,
    partner: Vec<usize>,
    chords: Vec<(usize, usize)>,
}

impl FlatBasketDiagram {
    /// Number of boundary points.
    pub fn points(&self) -> usize {
        self.labels.len()
    }

    pub fn bands(&self) -> usize {
        self.chords.len()
    }

    pub fn label_at(&self, point: usize) -> usize {
        self.labels[point]
    }

    pub fn partner(&self, point: usize) -> usize {
        self.partner[point]
    }

    /// Endpoints of chord `label`, smaller position first.
    pub fn chord(&self, label: usize) -> (usize, usize) {
        self.chords[label - 1]
    }

    pub fn chords(&self) -> &[(usize, usize)] {
        &self.chords
    }

    /// Reads the labels counter-clockwise from point 0.
    pub fn to_code(&self) -> FlatBasketCode {
        FlatBasketCode::from_word_unchecked(self.labels.clone())
    }

    /// Whether chords `i` and `j` cross. Labels are 1-based.
    pub fn chords_interleave(&self, i: usize, j: usize) -> Result<bool, CodeError> {
        if i == j {
            return Err(CodeError::SameChord(i));
        }
        for label in [i, j] {
            if label == 0 || label > self.bands() {
                return Err(CodeError::NoSuchChord { label, n: self.bands() });
            }
        }
        Ok(interleaved(self.chord(i), self.chord(j)))
    }

    /// All crossing chord pairs `(i, j)` with `i < j`.
    pub fn interleaving_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.bands();
        let mut pairs = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                if interleaved(self.chord(i), self.chord(j)) {
                    pairs.push((i, j));
                }
            }
        }
        pairs
    }
}

/// Exactly one endpoint of `b` lies strictly inside `a`'s span.
pub(crate) fn interleaved(a: (usize, usize), b: (usize, usize)) -> bool {
    let inside = |p: usize| a.0 < p && p < a.1;
    inside(b.0) != inside(b.1)
}

pub fn code_to_diagram(code: &FlatBasketCode) -> FlatBasketDiagram {
    FlatBasketDiagram {
        labels: code.word().to_vec(),
        partner: code.partners(),
        chords: code.chord_positions(),
    }
}
