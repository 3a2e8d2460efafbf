#![allow(dead_code)]

use flatbasket::BraidWord;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random braid on 2..=max_strands strands with at most `max_len` letters.
pub fn random_braid(rng: &mut ChaCha8Rng, max_strands: usize, max_len: usize) -> BraidWord {
    let n = rng.gen_range(2..=max_strands);
    let len = rng.gen_range(0..=max_len);
    let letters: Vec<i64> = (0..len)
        .map(|_| {
            let g = rng.gen_range(1..n) as i64;
            if rng.gen_bool(0.5) {
                g
            } else {
                -g
            }
        })
        .collect();
    BraidWord::from_signed(n, &letters).unwrap()
}

pub fn code(word: &[usize]) -> flatbasket::FlatBasketCode {
    flatbasket::FlatBasketCode::new(word.to_vec()).unwrap()
}

/// Sparse Laurent polynomial with small integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly(pub std::collections::BTreeMap<i64, i128>);

impl Poly {
    pub fn term(c: i128, e: i64) -> Self {
        let mut p = Poly::default();
        p.add_term(c, e);
        p
    }

    pub fn from_coeffs(c: &[i128]) -> Self {
        let mut p = Poly::default();
        for (e, &v) in c.iter().enumerate() {
            p.add_term(v, e as i64);
        }
        p
    }

    fn add_term(&mut self, c: i128, e: i64) {
        let v = self.0.entry(e).or_insert(0);
        *v += c;
        if *v == 0 {
            self.0.remove(&e);
        }
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let mut p = self.clone();
        for (&e, &c) in &o.0 {
            p.add_term(c, e);
        }
        p
    }

    pub fn neg(&self) -> Poly {
        Poly(self.0.iter().map(|(&e, &c)| (e, -c)).collect())
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        let mut p = Poly::default();
        for (&e1, &c1) in &self.0 {
            for (&e2, &c2) in &o.0 {
                p.add_term(c1 * c2, e1 + e2);
            }
        }
        p
    }

    /// Coefficients from the lowest exponent up, sign fixed so the first is
    /// positive: a representative up to `±t^k`.
    pub fn normal_coeffs(&self) -> Vec<i128> {
        let (Some((&lo, &c0)), Some((&hi, _))) = (self.0.iter().next(), self.0.iter().next_back()) else {
            return Vec::new();
        };
        let s = c0.signum();
        (lo..=hi).map(|e| s * self.0.get(&e).copied().unwrap_or(0)).collect()
    }

    pub fn eval(&self, t: i128) -> i128 {
        self.0.iter().map(|(&e, &c)| c * t.pow(e as u32)).sum()
    }
}

/// Determinant by permutation expansion; fine for the small matrices used here.
pub fn poly_det(m: &[Vec<Poly>]) -> Poly {
    let n = m.len();
    if n == 0 {
        return Poly::term(1, 0);
    }
    let mut total = Poly::default();
    for j in 0..n {
        if m[0][j].0.is_empty() {
            continue;
        }
        let minor: Vec<Vec<Poly>> =
            m[1..].iter().map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, v)| v.clone()).collect()).collect();
        let t = m[0][j].mul(&poly_det(&minor));
        total = if j % 2 == 0 { total.add(&t) } else { total.add(&t.neg()) };
    }
    total
}

pub fn seifert_alexander(v: &[Vec<i64>]) -> Poly {
    let m: Vec<Vec<Poly>> = (0..v.len())
        .map(|i| (0..v.len()).map(|j| Poly::term(v[i][j] as i128, 0).add(&Poly::term(-(v[j][i] as i128), 1))).collect())
        .collect();
    poly_det(&m)
}
