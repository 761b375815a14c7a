//! JSON and DOT renderings of a model.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde::Serialize;

use crate::complex::{ComplexModel, Space};
use crate::hyperplanes::SpecialnessReport;
use crate::report::TOOL_VERSION;

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Census {
    pub vertices: u64,
    pub oriented_edges: u64,
    /// 1-cubes.
    pub edges: u64,
    pub squares: u64,
    pub square_subcubes: u64,
    /// Cube counts by dimension, starting at 0.
    pub cubes: Vec<u64>,
}

pub fn census(model: &ComplexModel) -> Census {
    let dims = 0..=model.top_dim();
    Census {
        vertices: model.vertex_count(),
        oriented_edges: model.edge_count(),
        edges: model.undirected_edges().count() as u64,
        squares: model.square_count(),
        square_subcubes: if model.top_dim() >= 2 { model.subcube_count(2) } else { 0 },
        cubes: dims.map(|d| model.cube_count(d)).collect(),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct EdgeRecord {
    pub forest: String,
    pub param: String,
    #[serde(rename = "type")]
    pub ty: String,
    /// `forest@param` of the reverse edge.
    pub reverse: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ModelExport {
    pub version: &'static str,
    pub n: u32,
    pub variant: Space,
    /// The ordering of types that fixes the bits of a parameter, least significant first.
    pub types: Vec<String>,
    pub census: Census,
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeRecord>,
    /// Each square as its four subcube labels.
    pub squares: Vec<Vec<String>>,
    /// Cubes of each positive dimension, as flip orbits of subcube labels.
    pub cubes: BTreeMap<u32, Vec<Vec<String>>>,
}

pub fn model_export(model: &ComplexModel) -> ModelExport {
    let orbit_labels = |sc| model.orbit(sc).into_iter().map(|x| model.label_text(x)).collect::<Vec<_>>();
    let edges = model
        .edges()
        .map(|e| {
            let sc = model.edge(e);
            EdgeRecord {
                forest: model.forest(1, sc.forest).to_string(),
                param: model.hex(sc.param),
                ty: model.types().type_at(model.edge_type(e)).to_string(),
                reverse: model.edge_text(model.reverse(e)),
            }
        })
        .collect();
    ModelExport {
        version: TOOL_VERSION,
        n: model.n(),
        variant: model.space(),
        types: model.types().types().iter().map(|t| t.to_string()).collect(),
        census: census(model),
        vertices: model.vertices().map(|v| model.hex(v)).collect(),
        edges,
        squares: model.squares().map(orbit_labels).collect(),
        cubes: (1..=model.top_dim()).map(|d| (d, model.cubes(d).map(orbit_labels).collect())).collect(),
    }
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// The 1-skeleton: one node per vertex, one edge per 1-cube.
pub fn skeleton_dot(model: &ComplexModel) -> String {
    let mut out = String::new();
    writeln!(out, "graph skeleton {{").unwrap();
    for v in model.vertices() {
        writeln!(out, "  {};", quote(&model.hex(v))).unwrap();
    }
    for e in model.undirected_edges() {
        let sc = model.edge(e);
        writeln!(
            out,
            "  {} -- {} [label={}, type={}];",
            quote(&model.hex(model.initial(e))),
            quote(&model.hex(model.terminal(e))),
            quote(&model.forest(1, sc.forest).to_string()),
            quote(&model.types().type_at(model.edge_type(e)).to_string()),
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

/// Hyperplanes as nodes; solid edges join intersecting hyperplanes and
/// dashed edges osculating ones. Loops mark self-intersection and self-osculation.
pub fn hyperplane_dot(report: &SpecialnessReport) -> String {
    let mut out = String::new();
    writeln!(out, "graph hyperplanes {{").unwrap();
    for h in &report.hyperplanes {
        writeln!(out, "  h{} [label={}];", h.id, quote(&format!("h{} {}", h.id, h.ty))).unwrap();
        if h.self_intersects {
            writeln!(out, "  h{0} -- h{0} [style=solid];", h.id).unwrap();
        }
        if h.self_osculates {
            writeln!(out, "  h{0} -- h{0} [style=dashed];", h.id).unwrap();
        }
    }
    for p in &report.pairs {
        if p.intersect {
            writeln!(out, "  h{} -- h{} [style=solid];", p.h1, p.h2).unwrap();
        }
        if p.osculate {
            writeln!(out, "  h{} -- h{} [style=dashed];", p.h1, p.h2).unwrap();
        }
    }
    out.push_str("}\n");
    out
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::build_complex;
    use crate::hyperplanes::specialness_report;

    #[test]
    fn base_three_census() {
        let m = build_complex(3, Space::Base).unwrap();
        let c = census(&m);
        assert_eq!((c.vertices, c.edges, c.squares, c.square_subcubes), (1, 6, 3, 12));
        assert_eq!(c.cubes, vec![1, 6, 3]);
    }

    #[test]
    fn model_json_shape() {
        let m = build_complex(3, Space::Cover).unwrap();
        let v: serde_json::Value = serde_json::from_str(&to_json(&model_export(&m))).unwrap();
        assert_eq!(v["vertices"].as_array().unwrap().len(), 16);
        assert_eq!(v["variant"], "cover");
        assert_eq!(v["edges"].as_array().unwrap().len(), 12 * 16);
        assert_eq!(v["squares"][0].as_array().unwrap().len(), 4);
        assert_eq!(v["cubes"]["2"].as_array().unwrap().len(), 3 * 16);
        assert_eq!(v["types"][3], "{1,2,3}");
    }

    #[test]
    fn skeleton_has_one_line_per_one_cube() {
        let m = build_complex(3, Space::Base).unwrap();
        let dot = skeleton_dot(&m);
        assert_eq!(dot.lines().filter(|l| l.contains(" -- ")).count(), 6);
        assert!(dot.contains("type=\"{1,2}\""));
        assert!(dot.starts_with("graph skeleton {"));
    }

    #[test]
    fn hyperplane_graph_styles() {
        let m = build_complex(3, Space::Base).unwrap();
        let dot = hyperplane_dot(&specialness_report(&m));
        assert!(dot.contains("style=dashed"));
        assert!(dot.contains("style=solid"));
        assert_eq!(dot.lines().filter(|l| l.contains("[label=")).count(), 4);
    }
}
