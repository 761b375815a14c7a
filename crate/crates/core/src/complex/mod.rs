//! The cube complexes `D̂_n` (base space) and `M_n` (cover).
//!
//! Both are assembled from subcubes `(σ, s)`: a canonical forest `σ` with `k`
//! internal edges labels a `k`-subcube, and `s` is a parameter in `(Z/2Z)^L`
//! (always zero in the base space). The gluings are
//!
//! * outward faces: the face of `(σ, s)` away from edge `e` is `(d_e σ, s)`;
//! * inward faces: `(σ, s)` meets `(r_e σ, s + 1_e)` across the midcube of `e`
//!   (in the base space the parameter is dropped).
//!
//! A `k`-cube is the flip orbit of a subcube and holds exactly `2^k` of them.
//! A vertex is a parameter; the outward corner of `(σ, s)` sits at vertex `s`.

mod link;
mod param;

pub use link::{check_npc, LinkComplex, LinkSimplex, NpcReport};
pub use param::{Parameter, TypeIndex, MAX_TYPE_N};

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::forests::{enumerate_forests, EdgeId, PlanarForest};

/// Largest `n` for which the complexes are materialized.
pub const MAX_BUILD_N: u32 = 4;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error("n = {0} is not supported here")]
    UnsupportedN(u32),
    #[error("invalid parameter {0:?}")]
    BadParameter(String),
    #[error("vertex {0} is not in the model")]
    UnknownVertex(String),
    #[error("forest {0} does not label a cell of the model")]
    UnknownForest(String),
    #[error("unknown space {0:?} (expected base or cover)")]
    UnknownSpace(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Space {
    Base,
    Cover,
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Space::Base => "base",
            Space::Cover => "cover",
        })
    }
}

impl FromStr for Space {
    type Err = ComplexError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "base" => Ok(Space::Base),
            "cover" => Ok(Space::Cover),
            other => Err(ComplexError::UnknownSpace(other.to_string())),
        }
    }
}

/// A subcube `(σ, s)`: `forest` indexes the model's forests of dimension `dim`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subcube {
    pub dim: u32,
    pub forest: u32,
    pub param: Parameter,
}

/// An oriented 1-cube, identified with the 1-subcube holding its initial vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeIdx(pub u32);

/// A subcube label with the forest spelled out.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubcubeLabel {
    pub forest: PlanarForest,
    pub param: Parameter,
}

/// One internal edge of a stored forest, with its precomputed neighbours.
#[derive(Clone, Copy, Debug)]
pub struct EdgeSlot {
    /// Index of the edge's type in the `L` ordering.
    pub ty: usize,
    pub id: EdgeId,
    /// Forest index of `r_e σ` (same dimension).
    pub flip: u32,
    /// Forest index of `d_e σ` (one dimension lower).
    pub delete: u32,
    /// Forest index of σ restricted to `e` (dimension 1).
    pub restrict: u32,
}

#[derive(Clone, Debug)]
struct Layer {
    forests: Vec<PlanarForest>,
    lookup: HashMap<PlanarForest, u32>,
    /// Per forest, slots sorted by type index.
    slots: Vec<Vec<EdgeSlot>>,
    /// Per forest, the smallest forest index in its flip orbit.
    orbit_rep: Vec<u32>,
    /// Forests that represent their flip orbit.
    reps: Vec<u32>,
}

/// Corner of a 2-subcube: the two oriented edges leaving its outward corner.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CornerPair {
    pub vertex: Parameter,
    pub subcube: Subcube,
    /// Sorted, always distinct.
    pub edges: (EdgeIdx, EdgeIdx),
}

#[derive(Clone, Debug)]
pub struct ComplexModel {
    n: u32,
    space: Space,
    types: TypeIndex,
    layers: Vec<Layer>,
}

/// Builds `D̂_n` (`Space::Base`) or `M_n` (`Space::Cover`) for `2 <= n <= 4`.
pub fn build_complex(n: u32, space: Space) -> Result<ComplexModel, ComplexError> {
    if !(2..=MAX_BUILD_N).contains(&n) {
        return Err(ComplexError::UnsupportedN(n));
    }
    let types = TypeIndex::new(n)?;
    let mut layers: Vec<Layer> = (0..n as usize)
        .map(|k| {
            let forests = enumerate_forests(n, k);
            let lookup = forests.iter().enumerate().map(|(i, f)| (f.clone(), i as u32)).collect();
            Layer { forests, lookup, slots: Vec::new(), orbit_rep: Vec::new(), reps: Vec::new() }
        })
        .collect();

    for k in 0..layers.len() {
        let mut all_slots = Vec::with_capacity(layers[k].forests.len());
        for f in &layers[k].forests {
            let mut slots: Vec<EdgeSlot> = f
                .internal_edges()
                .into_iter()
                .map(|e| {
                    let ty = types.index_of(f.edge_type(e).expect("own edge")).expect("type in L");
                    let flip = layers[k].lookup[&f.flip(e).expect("own edge")];
                    let delete = layers[k - 1].lookup[&f.delete_edge(e).expect("own edge")];
                    let restrict = layers[1].lookup[&f.restrict_to_edge(e).expect("own edge")];
                    EdgeSlot { ty, id: e, flip, delete, restrict }
                })
                .collect();
            slots.sort_by_key(|s| s.ty);
            all_slots.push(slots);
        }
        layers[k].slots = all_slots;
    }

    let mut model = ComplexModel { n, space, types, layers };
    for k in 0..model.layers.len() {
        let count = model.layers[k].forests.len() as u32;
        let orbit_rep: Vec<u32> = (0..count)
            .map(|f| {
                let sc = Subcube { dim: k as u32, forest: f, param: Parameter::ZERO };
                model.base_orbit(sc).into_iter().min().expect("non-empty orbit")
            })
            .collect();
        model.layers[k].reps = (0..count).filter(|&f| orbit_rep[f as usize] == f).collect();
        model.layers[k].orbit_rep = orbit_rep;
    }
    Ok(model)
}

impl ComplexModel {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn space(&self) -> Space {
        self.space
    }

    pub fn types(&self) -> &TypeIndex {
        &self.types
    }

    /// Dimension of the top cubes, `n - 1`.
    pub fn top_dim(&self) -> u32 {
        self.layers.len() as u32 - 1
    }

    /// Forests with `dim` edges; empty above the top dimension.
    pub fn forests(&self, dim: u32) -> &[PlanarForest] {
        self.layers.get(dim as usize).map_or(&[], |l| &l.forests)
    }

    pub fn forest(&self, dim: u32, index: u32) -> &PlanarForest {
        &self.layers[dim as usize].forests[index as usize]
    }

    /// Index of a canonical forest among those of its dimension.
    pub fn forest_index(&self, f: &PlanarForest) -> Option<u32> {
        self.layers.get(f.edge_count())?.lookup.get(f).copied()
    }

    /// Number of parameters present: 1 in the base space, `2^|L|` in the cover.
    pub fn param_count(&self) -> u64 {
        match self.space {
            Space::Base => 1,
            Space::Cover => self.types.parameter_count(),
        }
    }

    /// `s + 1_l` in the cover; the identity in the base space.
    pub fn shift(&self, p: Parameter, ty: usize) -> Parameter {
        match self.space {
            Space::Base => p,
            Space::Cover => p.toggled(ty),
        }
    }

    pub fn vertices(&self) -> impl Iterator<Item = Parameter> {
        (0..self.param_count()).map(Parameter)
    }

    pub fn vertex_count(&self) -> u64 {
        self.param_count()
    }

    pub fn contains_vertex(&self, v: Parameter) -> bool {
        v.0 < self.param_count()
    }

    pub fn hex(&self, p: Parameter) -> String {
        self.types.hex(p)
    }

    // ---- subcubes and cubes ----

    pub fn slots(&self, sc: Subcube) -> &[EdgeSlot] {
        &self.layers[sc.dim as usize].slots[sc.forest as usize]
    }

    pub fn subcube_count(&self, dim: u32) -> u64 {
        self.forests(dim).len() as u64 * self.param_count()
    }

    pub fn subcubes(&self, dim: u32) -> impl Iterator<Item = Subcube> + '_ {
        let forests = self.forests(dim).len() as u32;
        (0..forests).flat_map(move |forest| self.vertices().map(move |param| Subcube { dim, forest, param }))
    }

    pub fn contains_subcube(&self, sc: Subcube) -> bool {
        (sc.dim as usize) < self.layers.len()
            && (sc.forest as usize) < self.layers[sc.dim as usize].forests.len()
            && self.contains_vertex(sc.param)
    }

    /// The neighbour across the midcube of slot `slot`.
    pub fn flip(&self, sc: Subcube, slot: usize) -> Subcube {
        let s = self.slots(sc)[slot];
        Subcube { dim: sc.dim, forest: s.flip, param: self.shift(sc.param, s.ty) }
    }

    /// The neighbour across the midcube of type `ty`.
    pub fn flip_type(&self, sc: Subcube, ty: usize) -> Subcube {
        let slot = self.slot_of_type(sc, ty).expect("type present in subcube");
        self.flip(sc, slot)
    }

    pub fn slot_of_type(&self, sc: Subcube, ty: usize) -> Option<usize> {
        self.slots(sc).iter().position(|s| s.ty == ty)
    }

    /// The outward face away from slot `slot`: `(d_e σ, s)`.
    pub fn face(&self, sc: Subcube, slot: usize) -> Subcube {
        let s = self.slots(sc)[slot];
        Subcube { dim: sc.dim - 1, forest: s.delete, param: sc.param }
    }

    /// The oriented edge leaving the outward corner of `sc` in the direction of slot `slot`.
    pub fn corner_edge(&self, sc: Subcube, slot: usize) -> EdgeIdx {
        let s = self.slots(sc)[slot];
        self.edge_index(s.restrict, sc.param)
    }

    /// All `2^k` subcubes of the cube containing `sc`.
    pub fn orbit(&self, sc: Subcube) -> Vec<Subcube> {
        let types: Vec<usize> = self.slots(sc).iter().map(|s| s.ty).collect();
        (0u32..1 << types.len())
            .map(|mask| {
                types
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .fold(sc, |acc, (_, &ty)| self.flip_type(acc, ty))
            })
            .collect()
    }

    fn base_orbit(&self, sc: Subcube) -> Vec<u32> {
        self.orbit(sc).into_iter().map(|x| x.forest).collect()
    }

    /// The smallest subcube of the cube containing `sc`; identifies the cube.
    pub fn cube_of(&self, sc: Subcube) -> Subcube {
        self.orbit(sc).into_iter().min().expect("non-empty orbit")
    }

    /// Representatives of all `dim`-cubes.
    pub fn cubes(&self, dim: u32) -> impl Iterator<Item = Subcube> + '_ {
        let reps = self.layers.get(dim as usize).map_or(&[][..], |l| &l.reps);
        reps.iter().flat_map(move |&forest| self.vertices().map(move |param| Subcube { dim, forest, param }))
    }

    pub fn cube_count(&self, dim: u32) -> u64 {
        self.layers.get(dim as usize).map_or(0, |l| l.reps.len() as u64) * self.param_count()
    }

    pub fn squares(&self) -> impl Iterator<Item = Subcube> + '_ {
        self.cubes(2)
    }

    pub fn square_count(&self) -> u64 {
        self.cube_count(2)
    }

    pub fn label(&self, sc: Subcube) -> SubcubeLabel {
        SubcubeLabel { forest: self.forest(sc.dim, sc.forest).clone(), param: sc.param }
    }

    /// `forest@hex`.
    pub fn label_text(&self, sc: Subcube) -> String {
        format!("{}@{}", self.forest(sc.dim, sc.forest), self.hex(sc.param))
    }

    /// Resolves a label back to a subcube of this model.
    pub fn subcube_of(&self, label: &SubcubeLabel) -> Result<Subcube, ComplexError> {
        let forest =
            self.forest_index(&label.forest).ok_or_else(|| ComplexError::UnknownForest(label.forest.to_string()))?;
        if !self.contains_vertex(label.param) {
            return Err(ComplexError::UnknownVertex(self.hex(label.param)));
        }
        Ok(Subcube { dim: label.forest.edge_count() as u32, forest, param: label.param })
    }

    // ---- oriented edges ----

    pub fn edge_count(&self) -> u64 {
        self.subcube_count(1)
    }

    pub fn edge_index(&self, forest: u32, param: Parameter) -> EdgeIdx {
        EdgeIdx((forest as u64 * self.param_count() + param.0) as u32)
    }

    pub fn edge_of(&self, sc: Subcube) -> EdgeIdx {
        debug_assert_eq!(sc.dim, 1);
        self.edge_index(sc.forest, sc.param)
    }

    pub fn edge(&self, e: EdgeIdx) -> Subcube {
        let p = self.param_count();
        Subcube { dim: 1, forest: (e.0 as u64 / p) as u32, param: Parameter(e.0 as u64 % p) }
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeIdx> {
        (0..self.edge_count() as u32).map(EdgeIdx)
    }

    pub fn edge_type(&self, e: EdgeIdx) -> usize {
        self.slots(self.edge(e))[0].ty
    }

    pub fn initial(&self, e: EdgeIdx) -> Parameter {
        self.edge(e).param
    }

    pub fn terminal(&self, e: EdgeIdx) -> Parameter {
        self.shift(self.initial(e), self.edge_type(e))
    }

    /// The same 1-cube traversed the other way: `(r_e τ, s + 1_e)`.
    pub fn reverse(&self, e: EdgeIdx) -> EdgeIdx {
        self.edge_of(self.flip(self.edge(e), 0))
    }

    /// One oriented representative per 1-cube (the smaller index of the pair).
    pub fn undirected_edges(&self) -> impl Iterator<Item = EdgeIdx> + '_ {
        self.edges().filter(move |&e| e <= self.reverse(e))
    }

    pub fn edges_from(&self, v: Parameter) -> Vec<EdgeIdx> {
        (0..self.forests(1).len() as u32).map(|f| self.edge_index(f, v)).collect()
    }

    pub fn edge_text(&self, e: EdgeIdx) -> String {
        self.label_text(self.edge(e))
    }

    /// For a 2-subcube and one of its slots, the two oriented edges on
    /// opposite sides of the midcube of that slot, pointing the same way.
    pub fn parallel_pair(&self, sc: Subcube, slot: usize) -> (EdgeIdx, EdgeIdx) {
        debug_assert_eq!(sc.dim, 2);
        let ty = self.slots(sc)[slot].ty;
        let near = self.face(sc, slot);
        let across = self.flip(sc, slot);
        let far = self.face(across, self.slot_of_type(across, ty).expect("flip keeps types"));
        (self.edge_of(near), self.edge_of(far))
    }

    // ---- corners ----

    /// One entry per 2-subcube.
    pub fn corner_pairs(&self) -> Vec<CornerPair> {
        if self.top_dim() < 2 {
            return Vec::new();
        }
        self.subcubes(2)
            .map(|sc| {
                let a = self.corner_edge(sc, 0);
                let b = self.corner_edge(sc, 1);
                CornerPair { vertex: sc.param, subcube: sc, edges: (a.min(b), a.max(b)) }
            })
            .collect()
    }

    pub fn link_of(&self, v: Parameter) -> Result<LinkComplex, ComplexError> {
        link::link_of(self, v)
    }
}

impl fmt::Display for SubcubeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{:x}", self.forest, self.param)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forests::parse_forest;

    fn sc(model: &ComplexModel, forest: &str, param: Parameter) -> Subcube {
        let label = SubcubeLabel { forest: parse_forest(forest).unwrap(), param };
        model.subcube_of(&label).unwrap()
    }

    #[test]
    fn base_three_census() {
        let m = build_complex(3, Space::Base).unwrap();
        assert_eq!(m.vertex_count(), 1);
        assert_eq!(m.edge_count(), 12);
        assert_eq!(m.undirected_edges().count(), 6);
        assert_eq!(m.cube_count(1), 6);
        assert_eq!(m.square_count(), 3);
        assert_eq!(m.subcube_count(2), 12);
        assert_eq!(m.top_dim(), 2);
    }

    #[test]
    fn cover_vertex_counts() {
        assert_eq!(build_complex(2, Space::Cover).unwrap().vertex_count(), 2);
        assert_eq!(build_complex(3, Space::Cover).unwrap().vertex_count(), 16);
    }

    #[test]
    fn cover_two_is_a_double_circle() {
        let m = build_complex(2, Space::Cover).unwrap();
        assert_eq!(m.vertex_count(), 2);
        assert_eq!(m.undirected_edges().count(), 2);
        assert_eq!(m.square_count(), 0);
        assert!(m.corner_pairs().is_empty());
        for e in m.edges() {
            assert_ne!(m.initial(e), m.terminal(e));
        }
    }

    #[test]
    fn unsupported_n() {
        assert_eq!(build_complex(1, Space::Base).err(), Some(ComplexError::UnsupportedN(1)));
        assert_eq!(build_complex(5, Space::Cover).err(), Some(ComplexError::UnsupportedN(5)));
    }

    #[test]
    fn edge_endpoints_and_reverse() {
        let m = build_complex(3, Space::Cover).unwrap();
        for e in m.edges() {
            let r = m.reverse(e);
            assert_ne!(r, e);
            assert_eq!(m.reverse(r), e);
            assert_eq!(m.initial(r), m.terminal(e));
            let ty = m.types().type_at(m.edge_type(e));
            assert_eq!(m.terminal(e), m.initial(e) + Parameter::unit(m.types().index_of(ty).unwrap()));
        }
        let b = build_complex(3, Space::Base).unwrap();
        for e in b.edges() {
            let r = b.reverse(e);
            assert_ne!(r, e);
            let f = b.forest(1, b.edge(e).forest);
            let flipped = f.flip(f.internal_edges()[0]).unwrap();
            assert_eq!(b.forest(1, b.edge(r).forest), &flipped);
        }
    }

    #[test]
    fn corner_pair_example() {
        let m = build_complex(3, Space::Base).unwrap();
        let corners = m.corner_pairs();
        assert_eq!(corners.len(), 12);
        let target = sc(&m, "((1 2) 3)", Parameter::ZERO);
        let c = corners.iter().find(|c| c.subcube == target).unwrap();
        let mut texts = [m.edge_text(c.edges.0), m.edge_text(c.edges.1)];
        texts.sort();
        assert_eq!(texts, ["(1 2 3)@0", "(1 2),3@0"]);
        assert_eq!(c.vertex, Parameter::ZERO);
    }

    #[test]
    fn orbits_have_full_size() {
        for space in [Space::Base, Space::Cover] {
            let m = build_complex(3, space).unwrap();
            for dim in 0..=m.top_dim() {
                for cube in m.cubes(dim) {
                    let mut orbit = m.orbit(cube);
                    orbit.sort();
                    orbit.dedup();
                    assert_eq!(orbit.len(), 1 << dim);
                    assert!(orbit.iter().all(|&x| m.cube_of(x) == cube));
                }
            }
        }
    }

    #[test]
    fn parallel_pair_matches_hand_computation() {
        let m = build_complex(3, Space::Base).unwrap();
        let square = sc(&m, "((1 2) 3)", Parameter::ZERO);
        let inner = m.types().index_of_set(crate::forests::LabelSet::from_labels([1, 2])).unwrap();
        let slot = m.slot_of_type(square, inner).unwrap();
        let (a, b) = m.parallel_pair(square, slot);
        assert_eq!(m.edge_text(a), "(1 2 3)@0");
        assert_eq!(m.edge_text(b), "(2 1 3)@0");
    }

    #[test]
    fn space_parses() {
        assert_eq!("cover".parse::<Space>().unwrap(), Space::Cover);
        assert!("torus".parse::<Space>().is_err());
    }
}
