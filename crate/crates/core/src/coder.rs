//! Braid to flat basket code.
//!
//! For a braid written as `T · W` with `T = σ_{n-1} ⋯ σ_1`, the letters of `W`
//! become the first `m` bands and every positive letter adds two more, giving
//! a code on `m + 2s` bands.

use serde::Serialize;

use crate::basket::FlatBasketCode;
use crate::braid::{to_tw_form, BraidWord};

/// Labels `ℓ(a_i)` of the letters of `W`, ranked by `(generator, position)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LetterLabeling {
    labels: Vec<usize>,
    double_indices: Vec<(usize, usize)>,
}

impl LetterLabeling {
    /// `labels()[i]` is the label of the `(i + 1)`-th letter.
    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// `(generator, 1-based position)` of each letter.
    pub fn double_indices(&self) -> &[(usize, usize)] {
        &self.double_indices
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}

/// The word `M_1 M_2 ⋯ M_n` written in labels; every label occurs twice.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntermediateCode {
    word: Vec<usize>,
}

impl IntermediateCode {
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn into_code(self) -> FlatBasketCode {
        FlatBasketCode::from_word_unchecked(self.word)
    }
}

pub fn label_letters(w: &BraidWord) -> LetterLabeling {
    let double_indices: Vec<(usize, usize)> =
        w.letters().iter().enumerate().map(|(i, l)| (l.generator(), i + 1)).collect();
    let mut order: Vec<usize> = (0..double_indices.len()).collect();
    order.sort_by_key(|&i| double_indices[i]);
    let mut labels = vec![0; order.len()];
    for (rank, &i) in order.iter().enumerate() {
        labels[i] = rank + 1;
    }
    LetterLabeling { labels, double_indices }
}

/// Concatenates `M_1 ⋯ M_n`: `M_i` keeps the letters on generators `i - 1`
/// and `i` (only `σ_1` for `i = 1`, only `σ_{n-1}` for `i = n`) in their
/// original order.
pub fn build_c1(w: &BraidWord, labeling: &LetterLabeling) -> IntermediateCode {
    assert_eq!(labeling.len(), w.len(), "labeling does not belong to this word");
    let mut word = Vec::with_capacity(2 * w.len());
    for strand in 1..=w.strands() {
        for (letter, &label) in w.letters().iter().zip(labeling.labels()) {
            let q = letter.generator();
            if q == strand || q + 1 == strand {
                word.push(label);
            }
        }
    }
    IntermediateCode { word }
}

/// Replaces the second occurrence of the label of the `i`-th positive letter
/// by `m+2i, m+2i-1, ℓ, m+2i, m+2i-1`.
///
/// Second occurrences are located in `c1` before any replacement.
pub fn expand_positive(c1: &IntermediateCode, w: &BraidWord, labeling: &LetterLabeling) -> FlatBasketCode {
    let m = w.len();
    // label -> index i (1-based) among positive letters
    let mut positive_rank = vec![0; m + 1];
    let mut s = 0;
    for (letter, &label) in w.letters().iter().zip(labeling.labels()) {
        if letter.is_positive() {
            s += 1;
            positive_rank[label] = s;
        }
    }
    let mut seen = vec![false; m + 1];
    let mut out = Vec::with_capacity(2 * (m + 2 * s));
    for &label in c1.word() {
        let second = std::mem::replace(&mut seen[label], true);
        let i = positive_rank[label];
        if second && i > 0 {
            let (hi, lo) = (m + 2 * i, m + 2 * i - 1);
            out.extend_from_slice(&[hi, lo, label, hi, lo]);
        } else {
            out.push(label);
        }
    }
    FlatBasketCode::from_word_unchecked(out)
}

/// Everything the algorithm produces for one braid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Encoding {
    pub w: BraidWord,
    pub labeling: LetterLabeling,
    pub c1: IntermediateCode,
    pub code: FlatBasketCode,
}

impl Encoding {
    /// `m`, the length of `W`.
    pub fn letter_count(&self) -> usize {
        self.w.len()
    }

    /// `s`, the number of positive letters of `W`.
    pub fn positive_count(&self) -> usize {
        self.w.positive_count()
    }
}

/// Runs the algorithm on a word that is already `W`.
pub fn encode_w(w: &BraidWord) -> Encoding {
    let labeling = label_letters(w);
    let c1 = build_c1(w, &labeling);
    let code = expand_positive(&c1, w, &labeling);
    Encoding { w: w.clone(), labeling, c1, code }
}

/// Encodes the closure of `braid`, first rewriting it as `T · W`.
pub fn encode_braid(braid: &BraidWord, reduce: bool) -> Encoding {
    encode_w(&to_tw_form(braid, reduce))
}

pub fn encode(braid: &BraidWord, reduce: bool) -> FlatBasketCode {
    encode_braid(braid, reduce).code
}
