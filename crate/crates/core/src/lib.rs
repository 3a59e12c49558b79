//! Covering simple orthogonal polygons with maximal rectangles, and planar
//! support graphs for the rectangle hypergraphs those covers induce.

pub mod builder;
pub mod checks;
pub mod cli;
pub mod error;
pub mod geom;
pub mod hypergraph;
pub mod instances;
pub mod io;
pub mod maxrect;
pub mod planar;
pub mod solver;
pub mod svg;

pub use error::{Error, Incumbent, Result};
pub use geom::{Dir, Point, Rect, SimplePolygon};
pub use hypergraph::{CoverTarget, SupportGraph};
pub use maxrect::RectFamily;
