use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{CodeError, ParseError};

/// A flat basket code: a word over `1..=n` in which every label occurs
/// exactly twice, read counter-clockwise around the base disk.
///
/// Labels also fix the stacking of the bands: band `i` sits closer to the
/// disk than band `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<usize>")]
pub struct FlatBasketCode {
    word: Vec<usize>,
}

impl FlatBasketCode {
    /// Strict construction: labels must be exactly `1..=n`, each twice.
    pub fn new(word: Vec<usize>) -> Result<Self, CodeError> {
        let signed: Vec<i64> = word.iter().map(|&l| l as i64).collect();
        validate_code(&signed, true)
    }

    pub fn empty() -> Self {
        Self { word: Vec::new() }
    }

    pub(crate) fn from_word_unchecked(word: Vec<usize>) -> Self {
        debug_assert!(validate_code(&word.iter().map(|&l| l as i64).collect::<Vec<_>>(), true).is_ok());
        Self { word }
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn into_word(self) -> Vec<usize> {
        self.word
    }

    /// Number of bands.
    pub fn bands(&self) -> usize {
        self.word.len() / 2
    }

    /// Length of the word, `2 · bands`.
    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// Positions `(first, second)` of every label, indexed by `label - 1`.
    pub fn chord_positions(&self) -> Vec<(usize, usize)> {
        let mut first = vec![usize::MAX; self.bands()];
        let mut chords = vec![(0, 0); self.bands()];
        for (pos, &label) in self.word.iter().enumerate() {
            let slot = label - 1;
            if first[slot] == usize::MAX {
                first[slot] = pos;
            } else {
                chords[slot] = (first[slot], pos);
            }
        }
        chords
    }

    /// Position of the other occurrence of the label at each position.
    pub fn partners(&self) -> Vec<usize> {
        let mut partner = vec![0; self.word.len()];
        for (a, b) in self.chord_positions() {
            partner[a] = b;
            partner[b] = a;
        }
        partner
    }

    /// Renames labels `1..=n` in order of first appearance.
    pub fn normalized(&self) -> Self {
        Self { word: first_appearance_relabel(&self.word) }
    }

    /// Whether first appearances already come in increasing label order.
    pub fn is_normalized(&self) -> bool {
        let mut next = 1;
        for &label in &self.word {
            if label == next {
                next += 1;
            } else if label > next {
                return false;
            }
        }
        true
    }

    /// Cyclic shift: the result starts at position `by`.
    pub fn rotated(&self, by: usize) -> Self {
        let mut word = self.word.clone();
        if !word.is_empty() {
            let shift = by % word.len();
            word.rotate_left(shift);
        }
        Self { word }
    }

    pub fn reversed(&self) -> Self {
        Self { word: self.word.iter().rev().copied().collect() }
    }
}

impl fmt::Display for FlatBasketCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.word.iter().map(|l| l.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl TryFrom<Vec<i64>> for FlatBasketCode {
    type Error = CodeError;

    fn try_from(seq: Vec<i64>) -> Result<Self, Self::Error> {
        validate_code(&seq, true)
    }
}

impl From<FlatBasketCode> for Vec<usize> {
    fn from(code: FlatBasketCode) -> Self {
        code.word
    }
}

/// Shorter codes first, then lexicographic.
impl Ord for FlatBasketCode {
    fn cmp(&self, other: &Self) -> Ordering {
        compare_codes(self, other)
    }
}

impl PartialOrd for FlatBasketCode {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub fn compare_codes(a: &FlatBasketCode, b: &FlatBasketCode) -> Ordering {
    a.word.len().cmp(&b.word.len()).then_with(|| a.word.cmp(&b.word))
}

fn first_appearance_relabel<T: Copy + Eq + std::hash::Hash>(seq: &[T]) -> Vec<usize> {
    let mut names: HashMap<T, usize> = HashMap::new();
    seq.iter()
        .map(|s| {
            let next = names.len() + 1;
            *names.entry(*s).or_insert(next)
        })
        .collect()
}

/// Checks that `seq` is a double-occurrence word.
///
/// Strict mode requires the labels to be exactly `1..=n`. Lenient mode accepts
/// any symbols and renames them by order of first appearance.
pub fn validate_code(seq: &[i64], strict: bool) -> Result<FlatBasketCode, CodeError> {
    if seq.len() % 2 == 1 {
        return Err(CodeError::OddLength(seq.len()));
    }
    let mut counts: Vec<(i64, usize)> = Vec::new();
    let mut index: HashMap<i64, usize> = HashMap::new();
    for &s in seq {
        let slot = *index.entry(s).or_insert_with(|| {
            counts.push((s, 0));
            counts.len() - 1
        });
        counts[slot].1 += 1;
    }
    if let Some(&(label, count)) = counts.iter().find(|(_, c)| *c != 2) {
        return Err(CodeError::WrongMultiplicity { label, count });
    }
    let n = seq.len() / 2;
    if strict {
        if let Some(&(label, _)) = counts.iter().find(|(l, _)| *l < 1 || *l as usize > n) {
            return Err(CodeError::LabelOutOfRange { label, n });
        }
        Ok(FlatBasketCode { word: seq.iter().map(|&l| l as usize).collect() })
    } else {
        Ok(FlatBasketCode { word: first_appearance_relabel(seq) })
    }
}

/// Parses a comma- or whitespace-separated list of integers, optionally wrapped
/// in `()` or `[]`.
pub fn parse_code_text(text: &str) -> Result<Vec<i64>, ParseError> {
    let mut values = Vec::new();
    for (line_idx, line) in text.lines().enumerate() {
        let mut token = String::new();
        let mut token_col = 0;
        let mut flush = |token: &mut String, col: usize| -> Result<(), ParseError> {
            if token.is_empty() {
                return Ok(());
            }
            let v = token.parse::<i64>().map_err(|_| ParseError {
                line: line_idx + 1,
                column: col,
                token: token.clone(),
                message: "expected an integer label".to_string(),
            })?;
            values.push(v);
            token.clear();
            Ok(())
        };
        for (col, ch) in line.chars().enumerate() {
            if ch == ',' || ch.is_whitespace() || "()[]".contains(ch) {
                flush(&mut token, token_col)?;
            } else {
                if token.is_empty() {
                    token_col = col + 1;
                }
                token.push(ch);
            }
        }
        flush(&mut token, token_col)?;
    }
    Ok(values)
}

pub fn parse_code(text: &str, strict: bool) -> Result<FlatBasketCode, CodeError> {
    let values = parse_code_text(text)?;
    validate_code(&values, strict)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validates_figure_eight_code() {
        let c = validate_code(&[1, 2, 4, 3, 1, 2, 4, 3], true).unwrap();
        assert_eq!(c.bands(), 4);
    }

    #[test]
    fn strict_and_lenient_modes() {
        assert!(matches!(validate_code(&[1, 3, 1, 3], true), Err(CodeError::LabelOutOfRange { .. })));
        assert_eq!(validate_code(&[1, 3, 1, 3], false).unwrap().word(), &[1, 2, 1, 2]);
        assert_eq!(validate_code(&[7, -2, -2, 7], false).unwrap().word(), &[1, 2, 2, 1]);
    }

    #[test]
    fn rejects_malformed_codes() {
        assert_eq!(validate_code(&[1, 2, 1], true), Err(CodeError::OddLength(3)));
        assert_eq!(validate_code(&[1, 2, 1], false), Err(CodeError::OddLength(3)));
        assert!(matches!(
            validate_code(&[1, 1, 1, 1], false),
            Err(CodeError::WrongMultiplicity { label: 1, count: 4 })
        ));
        assert!(validate_code(&[0, 0], true).is_err());
        assert!(validate_code(&[], true).unwrap().is_empty());
    }

    #[test]
    fn ordering_is_length_then_lex() {
        let a = FlatBasketCode::new(vec![1, 1]).unwrap();
        let b = FlatBasketCode::new(vec![1, 2, 1, 2]).unwrap();
        let c = FlatBasketCode::new(vec![1, 2, 2, 1]).unwrap();
        assert_eq!(compare_codes(&a, &b), Ordering::Less);
        assert_eq!(compare_codes(&b, &c), Ordering::Less);
        assert_eq!(compare_codes(&c, &c), Ordering::Equal);
        // longer but lexicographically smaller still sorts after
        let d = FlatBasketCode::new(vec![1, 1, 2, 2]).unwrap();
        let e = FlatBasketCode::new(vec![1, 2, 3, 1, 2, 3]).unwrap();
        assert!(d < e);
    }

    #[test]
    fn parses_text_forms() {
        assert_eq!(parse_code_text("1,2, 1,2").unwrap(), vec![1, 2, 1, 2]);
        assert_eq!(parse_code_text("(1 2 4 3 1 2 4 3)").unwrap().len(), 8);
        assert_eq!(parse_code_text("").unwrap(), Vec::<i64>::new());
        let err = parse_code_text("1,2,x,1").unwrap_err();
        assert_eq!((err.line, err.column), (1, 5));
    }

    #[test]
    fn positions_and_normal_form() {
        let c = FlatBasketCode::new(vec![2, 1, 1, 2]).unwrap();
        assert_eq!(c.chord_positions(), vec![(1, 2), (0, 3)]);
        assert_eq!(c.partners(), vec![3, 2, 1, 0]);
        assert!(!c.is_normalized());
        assert_eq!(c.normalized().word(), &[1, 2, 2, 1]);
        assert!(c.normalized().is_normalized());
        assert_eq!(c.rotated(1).word(), &[1, 1, 2, 2]);
        assert_eq!(c.reversed().word(), &[2, 1, 1, 2]);
    }
}
