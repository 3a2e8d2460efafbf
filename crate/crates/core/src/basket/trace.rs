use serde::Serialize;

use super::code::FlatBasketCode;

/// Boundary components of disk-plus-bands.
///
/// The boundary is made of `2n` disk arcs (arc `k` runs from point `k` to
/// point `k + 1`) and `2n` band edges (edge `k` leaves point `k` and ends at
/// its partner). Walking counter-clockwise along arc `k - 1` one arrives at
/// point `k`, crosses to the band along edge `k`, and resumes on the disk
/// along the arc that starts at the partner of `k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentTrace {
    pub count: usize,
    pub arc_component: Vec<usize>,
    pub edge_component: Vec<usize>,
}

pub fn trace_components(code: &FlatBasketCode) -> ComponentTrace {
    let len = code.len();
    if len == 0 {
        return ComponentTrace { count: 1, arc_component: Vec::new(), edge_component: Vec::new() };
    }
    let partner = code.partners();
    let mut arc_component = vec![usize::MAX; len];
    let mut edge_component = vec![usize::MAX; len];
    let mut count = 0;
    for start in 0..len {
        if arc_component[start] != usize::MAX {
            continue;
        }
        let mut arc = start;
        while arc_component[arc] == usize::MAX {
            arc_component[arc] = count;
            let point = (arc + 1) % len;
            edge_component[point] = count;
            arc = partner[point];
        }
        count += 1;
    }
    ComponentTrace { count, arc_component, edge_component }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(word: &[usize]) -> usize {
        trace_components(&FlatBasketCode::new(word.to_vec()).unwrap()).count
    }

    #[test]
    fn small_codes() {
        assert_eq!(count(&[]), 1);
        assert_eq!(count(&[1, 1]), 2);
        assert_eq!(count(&[1, 2, 1, 2]), 1);
        assert_eq!(count(&[1, 1, 2, 2]), 3);
        assert_eq!(count(&[1, 2, 3, 1, 2, 3]), 2);
        assert_eq!(count(&[1, 2, 3, 4, 5, 1, 4, 5, 2, 3]), 2);
    }

    #[test]
    fn every_segment_is_assigned() {
        let t = trace_components(&FlatBasketCode::new(vec![1, 2, 3, 4, 5, 1, 4, 5, 2, 3]).unwrap());
        assert!(t.arc_component.iter().chain(&t.edge_component).all(|&c| c < t.count));
    }
}
