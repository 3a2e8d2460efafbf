use std::collections::HashMap;

use serde::Serialize;

use super::chord::FlatBasketDiagram;
use super::geometry::{cross, ChordLayout, Vec2};
use super::trace::trace_components;
use crate::error::LinkError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SegmentKind {
    /// Disk boundary from point `from` counter-clockwise to point `to`.
    DiskArc { from: usize, to: usize },
    /// Long edge of band `band`, running from point `from` to point `to`.
    BandEdge { band: usize, from: usize, to: usize },
    /// The whole disk boundary of a basket without bands.
    Circle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Segment {
    pub kind: SegmentKind,
    pub component: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Crossing {
    /// Segment passing over.
    pub over: usize,
    /// Segment passing under.
    pub under: usize,
    pub sign: i8,
    pub over_band: usize,
    pub under_band: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Passage {
    Over,
    Under,
}

/// Oriented diagram of the basket boundary, seen from the positive side of
/// the disk.
///
/// Components are closed cycles of segments. Crossings only occur between
/// band edges of crossing chords; the band with the larger label lies farther
/// from the disk and passes over.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinkDiagram {
    segments: Vec<Segment>,
    crossings: Vec<Crossing>,
    components: Vec<Vec<usize>>,
    passages: Vec<Vec<(usize, Passage)>>,
}

impl LinkDiagram {
    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    /// Segment ids of each component in traversal order.
    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    /// Crossings met along a segment, in its direction of travel.
    pub fn passages(&self, segment: usize) -> &[(usize, Passage)] {
        &self.passages[segment]
    }

    pub fn crossing_components(&self, crossing: usize) -> (usize, usize) {
        let c = &self.crossings[crossing];
        (self.segments[c.over].component, self.segments[c.under].component)
    }

    /// Signed Gauss code: per component, the crossings met in order with the
    /// passage type.
    pub fn gauss_code(&self) -> Vec<Vec<(usize, Passage)>> {
        self.components
            .iter()
            .map(|segs| segs.iter().flat_map(|&s| self.passages[s].iter().copied()).collect())
            .collect()
    }

    /// Planar-diagram code. Edges are numbered from 1 consecutively along the
    /// components; each crossing lists its four edges counter-clockwise
    /// starting from the incoming under-edge. Components without crossings
    /// contribute no edges.
    pub fn pd_code(&self) -> Vec<[usize; 4]> {
        let mut under_in = vec![0; self.crossings.len()];
        let mut under_out = vec![0; self.crossings.len()];
        let mut over_in = vec![0; self.crossings.len()];
        let mut over_out = vec![0; self.crossings.len()];
        let mut base = 1;
        for passages in self.gauss_code() {
            let k = passages.len();
            for (m, &(crossing, passage)) in passages.iter().enumerate() {
                let incoming = base + (m + k - 1) % k;
                let outgoing = base + m;
                let (inc, out) = match passage {
                    Passage::Under => (&mut under_in, &mut under_out),
                    Passage::Over => (&mut over_in, &mut over_out),
                };
                inc[crossing] = incoming;
                out[crossing] = outgoing;
            }
            base += k;
        }
        self.crossings
            .iter()
            .enumerate()
            .map(|(i, c)| {
                if c.sign > 0 {
                    [under_in[i], over_out[i], under_out[i], over_in[i]]
                } else {
                    [under_in[i], over_in[i], under_out[i], over_out[i]]
                }
            })
            .collect()
    }

    /// Half the signed count of crossings between two components.
    pub fn linking_number(&self, a: usize, b: usize) -> Result<i64, LinkError> {
        if a == b {
            return Err(LinkError::SameComponent(a));
        }
        for c in [a, b] {
            if c >= self.component_count() {
                return Err(LinkError::MissingComponent { component: c, count: self.component_count() });
            }
        }
        let total: i64 = (0..self.crossings.len())
            .filter(|&i| {
                let (x, y) = self.crossing_components(i);
                (x == a && y == b) || (x == b && y == a)
            })
            .map(|i| self.crossings[i].sign as i64)
            .sum();
        debug_assert!(total % 2 == 0);
        Ok(total / 2)
    }

    /// `(a, b, lk)` for every pair of components `a < b`.
    pub fn linking_numbers(&self) -> Vec<(usize, usize, i64)> {
        let k = self.component_count();
        let mut sums = vec![vec![0i64; k]; k];
        for i in 0..self.crossings.len() {
            let (x, y) = self.crossing_components(i);
            if x != y {
                let (lo, hi) = (x.min(y), x.max(y));
                sums[lo][hi] += self.crossings[i].sign as i64;
            }
        }
        let mut out = Vec::new();
        for (a, row) in sums.iter().enumerate() {
            for (b, &s) in row.iter().enumerate().skip(a + 1) {
                out.push((a, b, s / 2));
            }
        }
        out
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign as i64).sum()
    }
}

/// Builds the boundary diagram of the flat plumbing basket.
pub fn diagram_to_link(diagram: &FlatBasketDiagram) -> LinkDiagram {
    let len = diagram.points();
    if len == 0 {
        return LinkDiagram {
            segments: vec![Segment { kind: SegmentKind::Circle, component: 0 }],
            crossings: Vec::new(),
            components: vec![vec![0]],
            passages: vec![Vec::new()],
        };
    }
    let code = diagram.to_code();
    let trace = trace_components(&code);
    let layout = ChordLayout::realize(diagram);

    let arc = |k: usize| k;
    let edge = |k: usize| len + k;
    let mut segments = Vec::with_capacity(2 * len);
    for k in 0..len {
        segments.push(Segment {
            kind: SegmentKind::DiskArc { from: k, to: (k + 1) % len },
            component: trace.arc_component[k],
        });
    }
    for k in 0..len {
        segments.push(Segment {
            kind: SegmentKind::BandEdge { band: diagram.label_at(k), from: k, to: diagram.partner(k) },
            component: trace.edge_component[k],
        });
    }

    let is_first = |k: usize| diagram.chord(diagram.label_at(k)).0 == k;
    let edge_dir = |k: usize| -> Vec2 {
        let d = layout.direction(diagram.label_at(k));
        if is_first(k) {
            d
        } else {
            (-d.0, -d.1)
        }
    };
    let band_edges = |label: usize| {
        let (a, b) = diagram.chord(label);
        [edge(a), edge(b)]
    };

    let mut crossings = Vec::new();
    let mut index: HashMap<(usize, usize), usize> = HashMap::new();
    for (lo, hi) in diagram.interleaving_pairs() {
        for over in band_edges(hi) {
            for under in band_edges(lo) {
                let s = cross(edge_dir(over - len), edge_dir(under - len));
                index.insert((over, under), crossings.len());
                crossings.push(Crossing {
                    over,
                    under,
                    sign: if s > 0 { 1 } else { -1 },
                    over_band: hi,
                    under_band: lo,
                });
            }
        }
    }

    let mut passages = vec![Vec::new(); 2 * len];
    for k in 0..len {
        let label = diagram.label_at(k);
        let u = edge_dir(k);
        let order = layout.crossing_order(label);
        let along: Box<dyn Iterator<Item = &usize>> =
            if is_first(k) { Box::new(order.iter()) } else { Box::new(order.iter().rev()) };
        for &other in along {
            let d_other = layout.direction(other);
            // the first-endpoint edge runs on the left of its chord
            let [left, right] = band_edges(other);
            let from_left = cross(d_other, (-u.0, -u.1)) > 0;
            let met = if from_left { [left, right] } else { [right, left] };
            for f in met {
                let (key, passage) =
                    if label > other { ((edge(k), f), Passage::Over) } else { ((f, edge(k)), Passage::Under) };
                passages[edge(k)].push((index[&key], passage));
            }
        }
    }

    let mut components = vec![Vec::new(); trace.count];
    let mut seen = vec![false; len];
    for start in 0..len {
        if seen[start] {
            continue;
        }
        let comp = trace.arc_component[start];
        let mut a = start;
        while !seen[a] {
            seen[a] = true;
            components[comp].push(arc(a));
            let point = (a + 1) % len;
            components[comp].push(edge(point));
            a = diagram.partner(point);
        }
    }

    LinkDiagram { segments, crossings, components, passages }
}
