//! Hyperplanes as classes of 1-cubes, reflections across midcubes, and the
//! specialness checks.

mod reflect;
mod special;

use petgraph::unionfind::UnionFind;
use serde::Serialize;
use thiserror::Error;

use crate::complex::{ComplexModel, EdgeIdx, Space};
use crate::report::Witness;

pub use reflect::{classify_reflection, reflect_edge, reflect_order, Midcube, ReflectionClass};
pub use special::{
    check_two_sided, same_type_intersections, specialness_report, HyperplaneVerdict, PairVerdict, SpecialnessReport,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HyperplaneError {
    #[error("this check needs the base space")]
    NotBase,
    #[error("{l} and {o} are neither nested nor disjoint")]
    NotNestedOrDisjoint { l: String, o: String },
    #[error("the labels of {l} are not consecutive in {o}")]
    NotContiguous { l: String, o: String },
    #[error("{0} is not a 2-subcube of the model")]
    NotASquare(String),
    #[error("edge {edge} is not on the boundary of the square of {square}")]
    EdgeNotOnSquare { edge: String, square: String },
    #[error("the square of {square} has no midcube of type {ty}")]
    MidcubeNotInSquare { square: String, ty: String },
}

/// One hyperplane: a class of 1-cubes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Hyperplane {
    pub id: u32,
    /// Smallest oriented edge dual to it.
    pub representative: EdgeIdx,
    /// Type index of its dual edges (in the cover this is the base type).
    pub ty: usize,
    /// Number of undirected 1-cubes dual to it.
    pub size: usize,
}

/// Hyperplanes of a model, and the finer partition of oriented edges under
/// same-direction translation across squares.
#[derive(Clone, Debug)]
pub struct HyperplanePartition {
    hyperplane_of: Vec<u32>,
    oriented_class_of: Vec<u32>,
    oriented_class_count: usize,
    hyperplanes: Vec<Hyperplane>,
    members: Vec<Vec<EdgeIdx>>,
    types_consistent: bool,
}

/// Dense ids `0..k` for the classes of `uf`, numbered by smallest member.
fn dense_labels(uf: UnionFind<u32>) -> (Vec<u32>, usize) {
    let roots = uf.into_labeling();
    let mut id_of_root = vec![u32::MAX; roots.len()];
    let mut next = 0;
    let labels = roots
        .iter()
        .map(|&r| {
            let slot = &mut id_of_root[r as usize];
            if *slot == u32::MAX {
                *slot = next;
                next += 1;
            }
            *slot
        })
        .collect();
    (labels, next as usize)
}

pub fn compute_hyperplanes(model: &ComplexModel) -> HyperplanePartition {
    let edge_count = model.edge_count() as usize;
    let mut oriented = UnionFind::<u32>::new(edge_count);
    if model.top_dim() >= 2 {
        for sc in model.subcubes(2) {
            for slot in 0..2 {
                let (a, b) = model.parallel_pair(sc, slot);
                oriented.union(a.0, b.0);
            }
        }
    }
    let mut unoriented = oriented.clone();
    for e in model.edges() {
        unoriented.union(e.0, model.reverse(e).0);
    }
    let (oriented_class_of, oriented_class_count) = dense_labels(oriented);
    let (hyperplane_of, count) = dense_labels(unoriented);

    let mut representative = vec![None; count];
    let mut members = vec![Vec::new(); count];
    let mut types_consistent = true;
    for e in model.edges() {
        let h = hyperplane_of[e.0 as usize] as usize;
        let rep = *representative[h].get_or_insert(e);
        if model.edge_type(e) != model.edge_type(rep) {
            types_consistent = false;
        }
        if e <= model.reverse(e) {
            members[h].push(e);
        }
    }
    let hyperplanes = representative
        .into_iter()
        .enumerate()
        .map(|(id, rep)| {
            let rep = rep.expect("every class has an edge");
            Hyperplane { id: id as u32, representative: rep, ty: model.edge_type(rep), size: members[id].len() }
        })
        .collect();
    HyperplanePartition {
        hyperplane_of,
        oriented_class_of,
        oriented_class_count,
        hyperplanes,
        members,
        types_consistent,
    }
}

impl HyperplanePartition {
    pub fn len(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }

    pub fn hyperplanes(&self) -> &[Hyperplane] {
        &self.hyperplanes
    }

    pub fn hyperplane(&self, id: u32) -> &Hyperplane {
        &self.hyperplanes[id as usize]
    }

    /// The hyperplane dual to an oriented edge.
    pub fn hyperplane_of(&self, e: EdgeIdx) -> u32 {
        self.hyperplane_of[e.0 as usize]
    }

    pub fn oriented_class_of(&self, e: EdgeIdx) -> u32 {
        self.oriented_class_of[e.0 as usize]
    }

    pub fn oriented_class_count(&self) -> usize {
        self.oriented_class_count
    }

    /// Undirected 1-cubes dual to `h`, each as its smaller oriented edge.
    pub fn members(&self, h: u32) -> &[EdgeIdx] {
        &self.members[h as usize]
    }

    /// Whether all edges of each hyperplane share one type.
    pub fn types_consistent(&self) -> bool {
        self.types_consistent
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TypePartitionReport {
    pub pass: bool,
    pub hyperplanes: usize,
    /// Distinct types carried by edges.
    #[serde(rename = "realizedTypes")]
    pub realized_types: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

/// In the base space, two edges have the same type exactly when they are
/// dual to the same hyperplane.
pub fn verify_type_partition(model: &ComplexModel) -> Result<TypePartitionReport, HyperplaneError> {
    if model.space() != Space::Base {
        return Err(HyperplaneError::NotBase);
    }
    let partition = compute_hyperplanes(model);
    let mut hyperplane_of_type: Vec<Option<(u32, EdgeIdx)>> = vec![None; model.types().len()];
    let mut witness = None;
    for e in model.edges() {
        let h = partition.hyperplane_of(e);
        let ty = model.edge_type(e);
        let rep = partition.hyperplane(h).representative;
        if model.edge_type(rep) != ty {
            witness = Some(Witness::new(
                "same-hyperplane-different-type",
                None,
                vec![model.edge_text(rep), model.edge_text(e)],
            ));
            break;
        }
        match hyperplane_of_type[ty] {
            None => hyperplane_of_type[ty] = Some((h, e)),
            Some((other, first)) if other != h => {
                witness = Some(Witness::new(
                    "same-type-different-hyperplane",
                    None,
                    vec![model.edge_text(first), model.edge_text(e)],
                ));
                break;
            }
            Some(_) => {}
        }
    }
    Ok(TypePartitionReport {
        pass: witness.is_none(),
        hyperplanes: partition.len(),
        realized_types: hyperplane_of_type.iter().filter(|t| t.is_some()).count(),
        witness,
    })
}
