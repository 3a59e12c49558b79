//! JSON file formats for polygons and support graphs, plus a DOT export.

use crate::error::{Error, Result};
use crate::geom::{polygon_from_vertices, Rect, SimplePolygon};
use crate::hypergraph::SupportGraph;
use crate::maxrect::RectFamily;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt::Write;

/// Polygon with an optional rectangle family and expected metric values.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct PolygonFile {
    pub vertices: Vec<[i64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rects: Option<Vec<[i64; 4]>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub expected: BTreeMap<String, i64>,
}

impl PolygonFile {
    pub fn from_polygon(poly: &SimplePolygon, fam: Option<&RectFamily>) -> PolygonFile {
        PolygonFile {
            vertices: poly.vertices().iter().map(|&(x, y)| [x, y]).collect(),
            rects: fam.map(|f| f.iter().map(|r| [r.x1, r.y1, r.x2, r.y2]).collect()),
            expected: BTreeMap::new(),
        }
    }

    pub fn polygon(&self) -> Result<SimplePolygon> {
        let v: Vec<(i64, i64)> = self.vertices.iter().map(|&[x, y]| (x, y)).collect();
        polygon_from_vertices(&v)
    }

    /// The listed rectangles as a family of `poly`, if the file has any.
    pub fn family(&self, poly: &SimplePolygon) -> Result<Option<RectFamily>> {
        let Some(rects) = &self.rects else { return Ok(None) };
        let rs = rects.iter().map(|&[a, b, c, d]| Rect::new(a, b, c, d)).collect::<Result<Vec<_>>>()?;
        RectFamily::new(poly, rs).map(Some)
    }

    pub fn from_json(text: &str) -> Result<PolygonFile> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }
}

/// Support graph with canonical edges `i < j`, sorted.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct GraphFile {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default)]
    pub outer: Vec<usize>,
}

impl GraphFile {
    pub fn from_graph(g: &SupportGraph) -> GraphFile {
        GraphFile { n: g.n, edges: g.edges.iter().map(|&(a, b)| [a, b]).collect(), outer: g.outer.clone() }
    }

    pub fn to_graph(&self) -> Result<SupportGraph> {
        let bad = |m: String| Err(Error::Parse(m));
        for &[a, b] in &self.edges {
            if a >= self.n || b >= self.n {
                return bad(format!("edge [{a},{b}] out of range for n = {}", self.n));
            }
            if a == b {
                return bad(format!("self loop at {a}"));
            }
        }
        if let Some(v) = self.outer.iter().find(|&&v| v >= self.n) {
            return bad(format!("outer vertex {v} out of range for n = {}", self.n));
        }
        let mut g = SupportGraph::from_edges(self.n, self.edges.iter().map(|&[a, b]| (a, b)));
        g.outer = self.outer.clone();
        Ok(g)
    }

    pub fn from_json(text: &str) -> Result<GraphFile> {
        let f: GraphFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        // canonicalize through the graph type
        Ok(GraphFile::from_graph(&f.to_graph()?))
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    /// Graphviz text; vertices are labelled with their rectangles when a family is given.
    pub fn to_dot(&self, fam: Option<&RectFamily>) -> String {
        let mut s = String::from("graph support {\n");
        for v in 0..self.n {
            match fam {
                Some(f) if v < f.len() => writeln!(s, "  {v} [label=\"{v}: {}\"];", f.get(v)).unwrap(),
                _ => writeln!(s, "  {v};").unwrap(),
            }
        }
        for &[a, b] in &self.edges {
            writeln!(s, "  {a} -- {b};").unwrap();
        }
        s.push_str("}\n");
        s
    }
}
