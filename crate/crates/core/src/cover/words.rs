use crate::complex::{ComplexModel, EdgeIdx, Parameter, TypeIndex};
use crate::forests::{Node, OrderedSubset, PlanarForest, PlanarTree, TypeSet};

use super::CoverError;

/// A word in the generators `s_A`; `s_A⁻¹` is written `s_{A^r}`.
pub type GeneratorWord = Vec<OrderedSubset>;

/// `s + 1_l`.
pub fn param_add(types: &TypeIndex, s: Parameter, l: TypeSet) -> Result<Parameter, CoverError> {
    let i = types.index_of(l).ok_or_else(|| CoverError::TypeNotInL(l.to_string()))?;
    Ok(s.toggled(i))
}

fn letter_type(types: &TypeIndex, a: &OrderedSubset) -> Result<usize, CoverError> {
    TypeSet::new(a.set()).and_then(|t| types.index_of(t)).ok_or_else(|| CoverError::BadLetter(a.to_string()))
}

/// `1_{A_1} + ... + 1_{A_m}`.
pub fn word_image(types: &TypeIndex, w: &[OrderedSubset]) -> Result<Parameter, CoverError> {
    w.iter().try_fold(Parameter::ZERO, |acc, a| Ok(acc.toggled(letter_type(types, a)?)))
}

/// The one-edge forest on `1..=n` whose edge reads `a`.
pub fn letter_forest(n: u32, a: &OrderedSubset) -> Result<PlanarForest, CoverError> {
    let bad = || CoverError::BadLetter(a.to_string());
    if a.len() < 2 || a.labels().iter().any(|&x| x > n) {
        return Err(bad());
    }
    let set = a.set();
    let mut trees: Vec<PlanarTree> = (1..=n).filter(|&x| !set.contains(x)).map(PlanarTree::leaf).collect();
    trees.push(PlanarTree::new(Node::internal(
        crate::forests::EdgeId(0),
        a.labels().iter().map(|&x| Node::Leaf(x)).collect(),
    )));
    PlanarForest::from_trees(trees).map_err(|_| bad())
}

/// The reverse word of the inverse element: letters reversed, each read backwards.
pub fn inverse_word(w: &[OrderedSubset]) -> GeneratorWord {
    w.iter().rev().map(OrderedSubset::reversed).collect()
}

/// Smallest rotation of `w` or of its inverse; two cyclic words describe
/// conjugate relators exactly when these agree.
pub fn canonical_cyclic(w: &[OrderedSubset]) -> GeneratorWord {
    let inv = inverse_word(w);
    let mut best: Option<GeneratorWord> = None;
    for word in [w, inv.as_slice()] {
        for r in 0..word.len().max(1) {
            let rotated: GeneratorWord = word[r..].iter().chain(&word[..r]).cloned().collect();
            if best.as_ref().is_none_or(|b| rotated < *b) {
                best = Some(rotated);
            }
        }
    }
    best.unwrap_or_default()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lift {
    pub start: Parameter,
    pub end: Parameter,
    pub closed: bool,
    /// The oriented edges traversed, in order.
    pub path: Vec<EdgeIdx>,
}

/// Traces `w` as an edge path from vertex `start` of `model`.
pub fn lift_word(model: &ComplexModel, w: &[OrderedSubset], start: Parameter) -> Result<Lift, CoverError> {
    if !model.contains_vertex(start) {
        return Err(CoverError::UnknownVertex(model.hex(start)));
    }
    let mut at = start;
    let mut path = Vec::with_capacity(w.len());
    for a in w {
        let forest = letter_forest(model.n(), a)?;
        let f = model.forest_index(&forest).ok_or_else(|| CoverError::BadLetter(a.to_string()))?;
        let e = model.edge_index(f, at);
        debug_assert_eq!(model.initial(e), at);
        at = model.terminal(e);
        path.push(e);
    }
    Ok(Lift { start, end: at, closed: at == start, path })
}
