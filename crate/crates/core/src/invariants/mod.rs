//! Invariants of the basket boundary, computed from its Seifert matrix.

mod laurent;
mod matrix;

use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::basket::{decode, FlatBasketCode, LinkDiagram, SegmentKind};

pub use laurent::{LaurentPolynomial, PolynomialParseError};
pub use matrix::{determinant, integer_determinant, symmetric_signature, ExactRing};

/// Seifert matrix of a flat plumbing basket in the basis of band cores.
///
/// `γ_i` runs along band `i` from the first to the second occurrence of `i`
/// and returns through the disk. `entries[i][j] = lk(γ_i, γ_j⁺)` (0-based).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeifertMatrix {
    entries: Vec<Vec<i64>>,
}

impl SeifertMatrix {
    pub fn new(entries: Vec<Vec<i64>>) -> Self {
        let n = entries.len();
        assert!(entries.iter().all(|r| r.len() == n), "Seifert matrix must be square");
        Self { entries }
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn transpose(&self) -> Self {
        let n = self.size();
        Self { entries: (0..n).map(|i| (0..n).map(|j| self.entries[j][i]).collect()).collect() }
    }

    /// `V + Vᵀ`.
    pub fn symmetrized(&self) -> Vec<Vec<i64>> {
        let n = self.size();
        (0..n).map(|i| (0..n).map(|j| self.entries[i][j] + self.entries[j][i]).collect()).collect()
    }

    /// Simultaneous row and column permutation: new index `k` is old `perm[k]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        Self { entries: perm.iter().map(|&i| perm.iter().map(|&j| self.entries[i][j]).collect()).collect() }
    }
}

impl fmt::Display for SeifertMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>2}")).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Seifert matrix read off the decoded boundary diagram.
///
/// Band `j` lies above band `i` when `j > i`, so near the crossing of their
/// chords the core of `j` and its push-off cross both layers of `i`. Only
/// `lk(γ_i, γ_j⁺)` with `i < j` survives, and it equals the sign of the
/// crossing where the forward edge of `j` passes over the forward edge of `i`.
pub fn seifert_matrix(code: &FlatBasketCode) -> SeifertMatrix {
    seifert_matrix_from_link(code, &decode(code))
}

pub fn seifert_matrix_from_link(code: &FlatBasketCode, link: &LinkDiagram) -> SeifertMatrix {
    let n = code.bands();
    let chords = code.chord_positions();
    let mut entries = vec![vec![0i64; n]; n];
    let forward = |segment: usize, band: usize| {
        matches!(link.segments()[segment].kind, SegmentKind::BandEdge { from, .. } if from == chords[band - 1].0)
    };
    for c in link.crossings() {
        if forward(c.over, c.over_band) && forward(c.under, c.under_band) {
            entries[c.under_band - 1][c.over_band - 1] = c.sign as i64;
        }
    }
    SeifertMatrix { entries }
}

/// `det(V - t Vᵀ)` up to `±t^k`, normalized to lowest exponent 0 with a
/// positive constant term.
pub fn alexander(v: &SeifertMatrix) -> LaurentPolynomial {
    let n = v.size();
    let m: Vec<Vec<LaurentPolynomial>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    LaurentPolynomial::from_i64(0, &[v.get(i, j)]) - LaurentPolynomial::monomial(v.get(j, i), 1)
                })
                .collect()
        })
        .collect();
    determinant(&m).normalized()
}

/// `|Δ(-1)|`, which is `|det(V + Vᵀ)|`.
pub fn determinant_invariant(v: &SeifertMatrix) -> BigInt {
    alexander(v).eval(-1).expect("normalized polynomial has no negative powers").abs()
}

/// Signature of `V + Vᵀ`.
pub fn signature(v: &SeifertMatrix) -> i64 {
    symmetric_signature(&v.symmetrized())
}

pub fn linking_number(link: &LinkDiagram, a: usize, b: usize) -> Result<i64, crate::LinkError> {
    link.linking_number(a, b)
}

/// Invariants used to compare links.
///
/// Everything recorded here is unchanged under mirror images: rotating,
/// reflecting, and renormalizing a code can turn its link into the mirror, so
/// the signature and linking numbers are kept in absolute value.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fingerprint {
    pub components: usize,
    pub alexander: LaurentPolynomial,
    pub determinant: BigInt,
    pub signature: i64,
    /// Sorted `|lk|` over all pairs of components.
    pub linking: Vec<i64>,
}

impl Fingerprint {
    pub fn unknot() -> Self {
        Self {
            components: 1,
            alexander: LaurentPolynomial::one(),
            determinant: BigInt::from(1),
            signature: 0,
            linking: Vec::new(),
        }
    }
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lk: Vec<String> = self.linking.iter().map(|v| v.to_string()).collect();
        write!(
            f,
            "components={} alexander={} det={} signature={} lk=[{}]",
            self.components,
            self.alexander,
            self.determinant,
            self.signature,
            lk.join(",")
        )
    }
}

impl Serialize for Fingerprint {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Fingerprint", 5)?;
        s.serialize_field("components", &self.components)?;
        s.serialize_field("alexander", &self.alexander.to_string())?;
        match u64::try_from(&self.determinant) {
            Ok(d) => s.serialize_field("det", &d)?,
            Err(_) => s.serialize_field("det", &self.determinant.to_string())?,
        }
        s.serialize_field("signature", &self.signature)?;
        s.serialize_field("lk", &self.linking)?;
        s.end()
    }
}

/// Full invariant record of a code, with the signed values kept alongside.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Invariants {
    pub seifert: SeifertMatrix,
    pub alexander: LaurentPolynomial,
    pub determinant: BigInt,
    /// Signed signature of `V + Vᵀ`.
    pub signature: i64,
    /// `(a, b, lk)` for component pairs `a < b`, signed.
    pub linking: Vec<(usize, usize, i64)>,
    pub components: usize,
}

impl Invariants {
    pub fn of(code: &FlatBasketCode) -> Self {
        let link = decode(code);
        let seifert = seifert_matrix_from_link(code, &link);
        let alexander = alexander(&seifert);
        let determinant = alexander.eval(-1).expect("normalized").abs();
        let signature = signature(&seifert);
        Self { alexander, determinant, signature, linking: link.linking_numbers(), components: link.component_count(), seifert }
    }

    pub fn fingerprint(&self) -> Fingerprint {
        let mut linking: Vec<i64> = self.linking.iter().map(|&(_, _, v)| v.abs()).collect();
        linking.sort_unstable();
        Fingerprint {
            components: self.components,
            alexander: self.alexander.clone(),
            determinant: self.determinant.clone(),
            signature: self.signature.abs(),
            linking,
        }
    }
}

pub fn fingerprint(code: &FlatBasketCode) -> Fingerprint {
    Invariants::of(code).fingerprint()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(word: &[usize]) -> FlatBasketCode {
        FlatBasketCode::new(word.to_vec()).unwrap()
    }

    #[test]
    fn split_bands_have_zero_matrix() {
        let v = seifert_matrix(&code(&[1, 1, 2, 2]));
        assert_eq!(v.entries(), &[vec![0, 0], vec![0, 0]]);
        assert!(alexander(&v).is_zero());
    }

    #[test]
    fn empty_code_is_the_unknot() {
        let v = seifert_matrix(&FlatBasketCode::empty());
        assert_eq!(v.size(), 0);
        assert_eq!(alexander(&v), LaurentPolynomial::one());
        assert_eq!(determinant_invariant(&v), BigInt::from(1));
        assert_eq!(signature(&v), 0);
        assert_eq!(fingerprint(&FlatBasketCode::empty()), Fingerprint::unknot());
    }

    #[test]
    fn trefoil_code() {
        let v = seifert_matrix(&code(&[1, 2, 3, 4, 1, 2, 3, 4]));
        assert_eq!(alexander(&v), LaurentPolynomial::from_i64(0, &[1, -1, 1]));
        assert_eq!(determinant_invariant(&v), BigInt::from(3));
        assert_eq!(signature(&v).abs(), 2);
    }

    #[test]
    fn figure_eight_code() {
        let v = seifert_matrix(&code(&[1, 2, 4, 3, 1, 2, 4, 3]));
        assert_eq!(alexander(&v), LaurentPolynomial::from_i64(0, &[1, -3, 1]));
        assert_eq!(determinant_invariant(&v), BigInt::from(5));
        assert_eq!(signature(&v), 0);
    }

    #[test]
    fn annulus_fingerprint() {
        let f = fingerprint(&code(&[1, 1]));
        assert_eq!(f.components, 2);
        assert!(f.alexander.is_zero());
        assert_eq!(f.determinant, BigInt::from(0));
        assert_eq!(f.signature, 0);
        assert_eq!(f.linking, vec![0]);
    }

    #[test]
    fn fingerprint_display() {
        let f = fingerprint(&code(&[1, 2, 3, 4, 1, 2, 3, 4]));
        assert_eq!(f.to_string(), "components=1 alexander=1 - 1*t + 1*t^2 det=3 signature=2 lk=[]");
    }
}
