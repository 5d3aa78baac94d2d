//! Polygonal presentations, the polyhedra they glue into, Wicks forms and
//! periodic plane tessellations.

pub mod bigraph;
pub mod complex;
pub mod cyclic;
mod graph;
pub mod label;
pub mod periodic;
pub mod presentation;
mod union_find;
pub mod wicks;

pub use bigraph::{BipartiteGraph, Colour, Girth, GraphError, GraphSet, VertexRef};
pub use complex::{FacePolygon, Polyhedron};
pub use label::{Label, LabelError};
pub use presentation::{construct_theorem1, PolygonalPresentation};
pub use wicks::{CyclicWord, SignedLetter, WicksForm};
