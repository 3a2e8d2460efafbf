//! Straight-line realization of a chord diagram.
//!
//! Boundary points are placed on the parabola `y = x²` with strictly
//! increasing `x`, which puts them in convex position and counter-clockwise
//! order. Chords are straight segments, so every crossing pair meets exactly
//! once and the order of crossings along each chord is a valid planar
//! arrangement. All arithmetic is exact.

use std::cmp::Ordering;

use super::chord::FlatBasketDiagram;

pub(crate) type Vec2 = (i128, i128);

pub(crate) fn cross(a: Vec2, b: Vec2) -> i128 {
    a.0 * b.1 - a.1 * b.0
}

/// Exact parameter along a chord, as a fraction with positive denominator.
#[derive(Clone, Copy, Debug)]
struct Param {
    num: i128,
    den: i128,
}

impl Param {
    fn new(num: i128, den: i128) -> Self {
        if den < 0 {
            Self { num: -num, den: -den }
        } else {
            Self { num, den }
        }
    }

    fn cmp(&self, other: &Self) -> Ordering {
        (self.num * other.den).cmp(&(other.num * self.den))
    }
}

#[derive(Clone, Debug)]
pub(crate) struct ChordLayout {
    points: Vec<Vec2>,
    chords: Vec<(usize, usize)>,
    /// For each chord (by `label - 1`), the labels of the chords it crosses,
    /// in order from its first endpoint to its second.
    order: Vec<Vec<usize>>,
}

impl ChordLayout {
    pub(crate) fn realize(diagram: &FlatBasketDiagram) -> Self {
        for salt in 0u64.. {
            if let Some(layout) = Self::try_realize(diagram, salt) {
                return layout;
            }
        }
        unreachable!("generic placements exist")
    }

    fn try_realize(diagram: &FlatBasketDiagram, salt: u64) -> Option<Self> {
        let points: Vec<Vec2> = (0..diagram.points())
            .map(|k| {
                let x = 8 * k as i128 + jitter(salt, k as u64);
                (x, x * x)
            })
            .collect();
        let chords = diagram.chords().to_vec();
        let mut layout = Self { points, chords, order: Vec::with_capacity(diagram.bands()) };
        let pairs = diagram.interleaving_pairs();
        for label in 1..=diagram.bands() {
            let mut hits: Vec<(Param, usize)> = pairs
                .iter()
                .filter_map(|&(i, j)| match label {
                    l if l == i => Some(j),
                    l if l == j => Some(i),
                    _ => None,
                })
                .map(|other| (layout.crossing_param(label, other), other))
                .collect();
            hits.sort_by(|a, b| a.0.cmp(&b.0));
            if hits.windows(2).any(|w| w[0].0.cmp(&w[1].0) == Ordering::Equal) {
                return None;
            }
            layout.order.push(hits.into_iter().map(|(_, other)| other).collect());
        }
        Some(layout)
    }

    pub(crate) fn point(&self, k: usize) -> Vec2 {
        self.points[k]
    }

    /// Direction of chord `label` from its first endpoint to its second.
    pub(crate) fn direction(&self, label: usize) -> Vec2 {
        let (a, b) = self.chords[label - 1];
        let (pa, pb) = (self.points[a], self.points[b]);
        (pb.0 - pa.0, pb.1 - pa.1)
    }

    pub(crate) fn crossing_order(&self, label: usize) -> &[usize] {
        &self.order[label - 1]
    }

    /// Where chord `label` meets chord `other`, as a parameter along `label`.
    fn crossing_param(&self, label: usize, other: usize) -> Param {
        let start = self.point(self.chords[label - 1].0);
        let other_start = self.point(self.chords[other - 1].0);
        let d = self.direction(label);
        let e = self.direction(other);
        let w = (other_start.0 - start.0, other_start.1 - start.1);
        Param::new(cross(w, e), cross(d, e))
    }
}

fn jitter(salt: u64, k: u64) -> i128 {
    if salt == 0 {
        return 0;
    }
    let mut z = salt.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ k.wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z ^= z >> 31;
    z = z.wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^= z >> 29;
    (z % 8) as i128
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basket::{code_to_diagram, FlatBasketCode};

    #[test]
    fn crossing_orders_are_complete() {
        let d = code_to_diagram(&FlatBasketCode::new(vec![1, 2, 3, 1, 2, 3]).unwrap());
        let layout = ChordLayout::realize(&d);
        for label in 1..=3 {
            assert_eq!(layout.crossing_order(label).len(), 2);
        }
    }

    #[test]
    fn directions_follow_the_circle() {
        // first endpoint to second: the arc between them lies on the right
        let d = code_to_diagram(&FlatBasketCode::new(vec![1, 2, 1, 2]).unwrap());
        let layout = ChordLayout::realize(&d);
        let dir = layout.direction(1);
        let p0 = layout.point(0);
        let p1 = layout.point(1);
        let p3 = layout.point(3);
        assert!(cross(dir, (p1.0 - p0.0, p1.1 - p0.1)) < 0);
        assert!(cross(dir, (p3.0 - p0.0, p3.1 - p0.1)) > 0);
    }
}
