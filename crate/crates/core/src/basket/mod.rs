//! Flat basket codes, their chord diagrams, and the boundary link.

mod chord;
mod code;
mod geometry;
mod link;
mod trace;

pub use chord::{code_to_diagram, FlatBasketDiagram};
pub use code::{compare_codes, parse_code, parse_code_text, validate_code, FlatBasketCode};
pub use link::{diagram_to_link, Crossing, LinkDiagram, Passage, Segment, SegmentKind};
pub use trace::{trace_components, ComponentTrace};

/// Code straight to its boundary diagram.
pub fn decode(code: &FlatBasketCode) -> LinkDiagram {
    diagram_to_link(&code_to_diagram(code))
}
