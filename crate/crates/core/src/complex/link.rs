use std::collections::{HashMap, HashSet};

use serde::Serialize;

use super::{ComplexError, ComplexModel, EdgeIdx, Parameter, Subcube};
use crate::report::Witness;

/// A simplex of a vertex link, spanned by the edges leaving the outward
/// corner of `source`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkSimplex {
    /// Sorted; repeats are kept so that a degenerate corner can be reported.
    pub members: Vec<EdgeIdx>,
    pub source: Subcube,
}

#[derive(Clone, Debug)]
pub struct LinkComplex {
    pub vertex: Parameter,
    /// Oriented edges with initial vertex `vertex`, sorted.
    pub vertices: Vec<EdgeIdx>,
    /// One simplex per subcube of positive dimension whose outward corner is `vertex`.
    pub simplices: Vec<LinkSimplex>,
}

impl LinkComplex {
    /// Simplices with `dim + 1` members.
    pub fn simplices_of_dim(&self, dim: usize) -> impl Iterator<Item = &LinkSimplex> {
        self.simplices.iter().filter(move |s| s.members.len() == dim + 1)
    }
}

pub(super) fn link_of(model: &ComplexModel, v: Parameter) -> Result<LinkComplex, ComplexError> {
    if !model.contains_vertex(v) {
        return Err(ComplexError::UnknownVertex(model.hex(v)));
    }
    let vertices = model.edges_from(v);
    let mut simplices = Vec::new();
    for dim in 1..=model.top_dim() {
        for forest in 0..model.forests(dim).len() as u32 {
            let source = Subcube { dim, forest, param: v };
            let mut members: Vec<EdgeIdx> = (0..dim as usize).map(|slot| model.corner_edge(source, slot)).collect();
            members.sort();
            simplices.push(LinkSimplex { members, source });
        }
    }
    Ok(LinkComplex { vertex: v, vertices, simplices })
}

#[derive(Clone, Debug, Serialize)]
pub struct NpcReport {
    pub pass: bool,
    /// No simplex repeats a vertex, no two simplices share a vertex set, faces are present.
    pub simplicial: bool,
    /// Every clique of the 1-skeleton spans a simplex.
    pub flag: bool,
    #[serde(rename = "verticesChecked")]
    pub vertices_checked: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

enum LinkFailure {
    NotSimplicial(Witness),
    NotFlag(Witness),
}

/// Checks that the link of every vertex is a flag simplicial complex.
pub fn check_npc(model: &ComplexModel) -> NpcReport {
    let mut report = NpcReport { pass: true, simplicial: true, flag: true, vertices_checked: 0, witness: None };
    for v in model.vertices() {
        let link = link_of(model, v).expect("vertex of the model");
        report.vertices_checked += 1;
        match check_link(model, &link) {
            Ok(()) => {}
            Err(LinkFailure::NotSimplicial(w)) => {
                report.simplicial = false;
                report.witness.get_or_insert(w);
            }
            Err(LinkFailure::NotFlag(w)) => {
                report.flag = false;
                report.witness.get_or_insert(w);
            }
        }
    }
    report.pass = report.simplicial && report.flag;
    report
}

fn check_link(model: &ComplexModel, link: &LinkComplex) -> Result<(), LinkFailure> {
    let vertex = Some(model.hex(link.vertex));
    let local: HashMap<EdgeIdx, usize> = link.vertices.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let cells =
        |members: &[usize]| -> Vec<String> { members.iter().map(|&i| model.edge_text(link.vertices[i])).collect() };

    let mut seen: HashMap<Vec<usize>, Subcube> = HashMap::new();
    for s in &link.simplices {
        if s.members.windows(2).any(|w| w[0] == w[1]) {
            return Err(LinkFailure::NotSimplicial(Witness::new(
                "repeated-link-vertex",
                vertex,
                vec![model.label_text(s.source)],
            )));
        }
        let Some(members) = s.members.iter().map(|e| local.get(e).copied()).collect::<Option<Vec<_>>>() else {
            return Err(LinkFailure::NotSimplicial(Witness::new(
                "edge-not-at-vertex",
                vertex,
                vec![model.label_text(s.source)],
            )));
        };
        if let Some(previous) = seen.insert(members, s.source) {
            return Err(LinkFailure::NotSimplicial(Witness::new(
                "duplicate-simplex",
                vertex,
                vec![model.label_text(previous), model.label_text(s.source)],
            )));
        }
    }
    for members in seen.keys().filter(|m| m.len() >= 3) {
        for skip in 0..members.len() {
            let face: Vec<usize> = members.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &m)| m).collect();
            if !seen.contains_key(&face) {
                return Err(LinkFailure::NotSimplicial(Witness::new("missing-face", vertex, cells(&face))));
            }
        }
    }

    let mut adjacent = vec![Vec::new(); link.vertices.len()];
    for members in seen.keys().filter(|m| m.len() == 2) {
        adjacent[members[0]].push(members[1]);
        adjacent[members[1]].push(members[0]);
    }
    let adjacency: Vec<HashSet<usize>> = adjacent.iter().map(|a| a.iter().copied().collect()).collect();
    for a in &mut adjacent {
        a.sort_unstable();
    }
    let mut clique = Vec::new();
    for (v, neighbours) in adjacent.iter().enumerate() {
        let above: Vec<usize> = neighbours.iter().copied().filter(|&u| u > v).collect();
        clique.push(v);
        if let Err(bad) = extend_cliques(&mut clique, &above, &adjacency, &seen) {
            return Err(LinkFailure::NotFlag(Witness::new("non-flag-clique", vertex, cells(&bad))));
        }
        clique.pop();
    }
    Ok(())
}

/// Grows `clique` by increasing vertices from `candidates`; every clique of
/// size at least three must already be a simplex.
fn extend_cliques(
    clique: &mut Vec<usize>,
    candidates: &[usize],
    adjacency: &[HashSet<usize>],
    simplices: &HashMap<Vec<usize>, Subcube>,
) -> Result<(), Vec<usize>> {
    for (i, &c) in candidates.iter().enumerate() {
        clique.push(c);
        if clique.len() >= 3 && !simplices.contains_key(clique.as_slice()) {
            return Err(clique.clone());
        }
        let next: Vec<usize> = candidates[i + 1..].iter().copied().filter(|u| adjacency[c].contains(u)).collect();
        extend_cliques(clique, &next, adjacency, simplices)?;
        clique.pop();
    }
    Ok(())
}
