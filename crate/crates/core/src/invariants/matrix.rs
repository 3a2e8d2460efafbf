//! Exact determinants and signatures.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::laurent::LaurentPolynomial;

/// Commutative ring with exact division, enough for fraction-free elimination.
pub trait ExactRing: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn mul(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `self / other`, which must divide exactly.
    fn div_exact(&self, other: &Self) -> Self;
}

impl ExactRing for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, other: &Self) -> Self {
        debug_assert!(Zero::is_zero(&(self % other)));
        self / other
    }
}

impl ExactRing for LaurentPolynomial {
    fn zero() -> Self {
        LaurentPolynomial::zero()
    }
    fn one() -> Self {
        LaurentPolynomial::one()
    }
    fn is_zero(&self) -> bool {
        LaurentPolynomial::is_zero(self)
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, other: &Self) -> Self {
        LaurentPolynomial::div_exact(self, other).expect("Bareiss quotients are exact")
    }
}

/// Determinant by Bareiss fraction-free elimination.
pub fn determinant<R: ExactRing>(matrix: &[Vec<R>]) -> R {
    let n = matrix.len();
    assert!(matrix.iter().all(|row| row.len() == n), "matrix must be square");
    if n == 0 {
        return R::one();
    }
    let mut a: Vec<Vec<R>> = matrix.to_vec();
    let mut negate = false;
    let mut prev = R::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return R::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = a[i][j].mul(&a[k][k]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = v.div_exact(&prev);
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        det.neg()
    } else {
        det
    }
}

pub fn integer_determinant(matrix: &[Vec<i64>]) -> BigInt {
    let m: Vec<Vec<BigInt>> = matrix.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
    determinant(&m)
}

/// Signature of a symmetric integer matrix, by congruence diagonalization over
/// the rationals.
pub fn symmetric_signature(matrix: &[Vec<i64>]) -> i64 {
    let n = matrix.len();
    let mut a: Vec<Vec<BigRational>> = matrix
        .iter()
        .map(|r| r.iter().map(|&v| BigRational::from_integer(BigInt::from(v))).collect())
        .collect();
    debug_assert!((0..n).all(|i| (0..n).all(|j| a[i][j] == a[j][i])));
    let mut signature = 0;
    let mut k = 0;
    while k < n {
        if a[k][k].is_zero() {
            if let Some(r) = (k + 1..n).find(|&r| !a[r][r].is_zero()) {
                a.swap(k, r);
                for row in a.iter_mut() {
                    row.swap(k, r);
                }
            } else if let Some(r) = (k + 1..n).find(|&r| !a[k][r].is_zero()) {
                // row/column k += row/column r makes the pivot 2·a[k][r]
                for j in 0..n {
                    let v = a[r][j].clone();
                    a[k][j] += v;
                }
                for i in 0..n {
                    let v = a[i][r].clone();
                    a[i][k] += v;
                }
            } else {
                k += 1;
                continue;
            }
        }
        let pivot = a[k][k].clone();
        signature += if pivot.is_positive() { 1 } else { -1 };
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &pivot;
            for j in k..n {
                let v = &f * &a[k][j];
                a[i][j] -= v;
            }
        }
        for i in k + 1..n {
            a[k][i] = BigRational::zero();
            a[i][k] = BigRational::zero();
        }
        k += 1;
    }
    signature
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_determinants() {
        assert_eq!(integer_determinant(&[]), BigInt::from(1));
        assert_eq!(integer_determinant(&[vec![0, 1], vec![1, 0]]), BigInt::from(-1));
        assert_eq!(integer_determinant(&[vec![2, 1, 0], vec![1, 2, 1], vec![0, 1, 2]]), BigInt::from(4));
        assert_eq!(integer_determinant(&[vec![1, 2], vec![2, 4]]), BigInt::from(0));
        assert_eq!(
            integer_determinant(&[vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]),
            BigInt::from(-1)
        );
    }

    #[test]
    fn polynomial_determinant() {
        // [[t-1, 1], [-t, t-1]] has determinant t^2 - t + 1
        let m = vec![
            vec![LaurentPolynomial::from_i64(0, &[-1, 1]), LaurentPolynomial::one()],
            vec![LaurentPolynomial::monomial(-1, 1), LaurentPolynomial::from_i64(0, &[-1, 1])],
        ];
        assert_eq!(determinant(&m), LaurentPolynomial::from_i64(0, &[1, -1, 1]));
    }

    #[test]
    fn signatures() {
        assert_eq!(symmetric_signature(&[]), 0);
        assert_eq!(symmetric_signature(&[vec![-2, 1], vec![1, -2]]), -2);
        assert_eq!(symmetric_signature(&[vec![-2, 1], vec![1, 2]]), 0);
        assert_eq!(symmetric_signature(&[vec![0, 1], vec![1, 0]]), 0);
        assert_eq!(symmetric_signature(&[vec![0, 0], vec![0, 0]]), 0);
        assert_eq!(symmetric_signature(&[vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]), -1);
    }
}
