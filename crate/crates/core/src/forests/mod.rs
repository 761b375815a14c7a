//! Planar forests whose leaves carry the labels `1..=n`, each exactly once.
//!
//! An internal edge is represented by its upper endpoint, a [`Node::Internal`]
//! carrying a stable [`EdgeId`]. Forests are always held in canonical form:
//! trees sorted ascending by their minimum leaf label. Equality, hashing and
//! ordering look only at the shape and labels, never at edge ids.

mod enumerate;
mod text;

pub use enumerate::enumerate_forests;
pub use text::{parse_forest, serialize_forest};

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::Range;
use std::str::FromStr;

use thiserror::Error;

/// A leaf label, `1..=n`.
pub type Label = u32;

/// Largest label a forest may carry (label sets are 64-bit masks).
pub const MAX_LABEL: Label = 64;

/// Stable identifier of an internal node, i.e. of the internal edge below it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeId(pub u32);

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ForestError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("group opened at byte {0} has a single child")]
    SingleChild(usize),
    #[error("internal node has fewer than two children")]
    UnderfullNode,
    #[error("leaf label {0} appears more than once")]
    RepeatedLabel(Label),
    #[error("leaf label {0} is missing")]
    MissingLabel(Label),
    #[error("leaf label {0} is out of range 1..={MAX_LABEL}")]
    LabelOutOfRange(u64),
    #[error("forest has no leaves")]
    Empty,
    #[error("edge id {0} is used twice")]
    DuplicateEdgeId(EdgeId),
    #[error("unknown edge {0}")]
    UnknownEdge(EdgeId),
    #[error("insertion must group at least two siblings or trees")]
    RangeTooShort,
    #[error("child range {start}..{end} is not a proper sub-range of {len} children")]
    RangeInvalid { start: usize, end: usize, len: usize },
    #[error("tree index {0} is out of range or selected twice")]
    BadTreeSelection(usize),
}

/// A vertex of a planar tree above the root.
#[derive(Clone, Debug)]
pub enum Node {
    Leaf(Label),
    Internal { id: EdgeId, children: Vec<Node> },
}

impl Node {
    pub fn internal(id: EdgeId, children: Vec<Node>) -> Self {
        Node::Internal { id, children }
    }

    pub fn min_label(&self) -> Label {
        match self {
            Node::Leaf(l) => *l,
            Node::Internal { children, .. } => children.iter().map(Node::min_label).min().unwrap_or(Label::MAX),
        }
    }

    /// Depth-first leaf labels, respecting the child order.
    pub fn leaves(&self) -> Vec<Label> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<Label>) {
        match self {
            Node::Leaf(l) => out.push(*l),
            Node::Internal { children, .. } => {
                for c in children {
                    c.collect_leaves(out);
                }
            }
        }
    }

    fn collect_edges(&self, out: &mut Vec<EdgeId>) {
        if let Node::Internal { id, children } = self {
            out.push(*id);
            for c in children {
                c.collect_edges(out);
            }
        }
    }

    fn find(&self, target: EdgeId) -> Option<&Node> {
        match self {
            Node::Leaf(_) => None,
            Node::Internal { id, children } => {
                if *id == target {
                    Some(self)
                } else {
                    children.iter().find_map(|c| c.find(target))
                }
            }
        }
    }

    fn find_mut(&mut self, target: EdgeId) -> Option<&mut Node> {
        match self {
            Node::Leaf(_) => None,
            Node::Internal { id, .. } if *id == target => Some(self),
            Node::Internal { children, .. } => children.iter_mut().find_map(|c| c.find_mut(target)),
        }
    }

    /// Reverses the child order at this node and every node above it.
    fn mirror(&mut self) {
        if let Node::Internal { children, .. } = self {
            children.reverse();
            for c in children.iter_mut() {
                c.mirror();
            }
        }
    }

    /// Collapses the internal child `target` into its parent's child list.
    fn splice_out(&mut self, target: EdgeId) -> bool {
        let Node::Internal { children, .. } = self else {
            return false;
        };
        for i in 0..children.len() {
            if matches!(&children[i], Node::Internal { id, .. } if *id == target) {
                let Node::Internal { children: inner, .. } = children.remove(i) else { unreachable!() };
                children.splice(i..i, inner);
                return true;
            }
        }
        children.iter_mut().any(|c| c.splice_out(target))
    }

    fn validate(&self, labels: &mut Vec<Label>, ids: &mut HashSet<EdgeId>) -> Result<(), ForestError> {
        match self {
            Node::Leaf(l) => {
                if *l == 0 || *l > MAX_LABEL {
                    return Err(ForestError::LabelOutOfRange(*l as u64));
                }
                labels.push(*l);
            }
            Node::Internal { id, children } => {
                if children.len() < 2 {
                    return Err(ForestError::UnderfullNode);
                }
                if !ids.insert(*id) {
                    return Err(ForestError::DuplicateEdgeId(*id));
                }
                for c in children {
                    c.validate(labels, ids)?;
                }
            }
        }
        Ok(())
    }

    pub(crate) fn renumber(&mut self, next: &mut u32) {
        if let Node::Internal { id, children } = self {
            *id = EdgeId(*next);
            *next += 1;
            for c in children {
                c.renumber(next);
            }
        }
    }

    fn max_id(&self) -> Option<u32> {
        match self {
            Node::Leaf(_) => None,
            Node::Internal { id, children } => children.iter().filter_map(Node::max_id).chain([id.0]).max(),
        }
    }

    pub(crate) fn internal_count(&self) -> usize {
        match self {
            Node::Leaf(_) => 0,
            Node::Internal { children, .. } => 1 + children.iter().map(Node::internal_count).sum::<usize>(),
        }
    }
}

impl PartialEq for Node {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Node {}

impl PartialOrd for Node {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Node {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Node::Leaf(a), Node::Leaf(b)) => a.cmp(b),
            (Node::Leaf(_), Node::Internal { .. }) => Ordering::Less,
            (Node::Internal { .. }, Node::Leaf(_)) => Ordering::Greater,
            (Node::Internal { children: a, .. }, Node::Internal { children: b, .. }) => a.cmp(b),
        }
    }
}

impl Hash for Node {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match self {
            Node::Leaf(l) => {
                0u8.hash(state);
                l.hash(state);
            }
            Node::Internal { children, .. } => {
                1u8.hash(state);
                children.hash(state);
            }
        }
    }
}

/// A planar tree; the root is implicit and `top` is its only child.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlanarTree {
    pub top: Node,
}

impl PlanarTree {
    pub fn new(top: Node) -> Self {
        PlanarTree { top }
    }

    pub fn leaf(label: Label) -> Self {
        PlanarTree { top: Node::Leaf(label) }
    }
}

/// Unordered set of labels as a bit mask; bit `l - 1` stands for label `l`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabelSet(pub u64);

impl LabelSet {
    pub const EMPTY: LabelSet = LabelSet(0);

    pub fn from_labels<I: IntoIterator<Item = Label>>(labels: I) -> Self {
        LabelSet(labels.into_iter().fold(0, |m, l| m | (1u64 << (l - 1))))
    }

    pub fn contains(self, l: Label) -> bool {
        (1..=MAX_LABEL).contains(&l) && self.0 & (1u64 << (l - 1)) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn intersection(self, other: LabelSet) -> LabelSet {
        LabelSet(self.0 & other.0)
    }

    pub fn is_subset(self, other: LabelSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: LabelSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn nested_or_disjoint(self, other: LabelSet) -> bool {
        self.is_disjoint(other) || self.is_subset(other) || other.is_subset(self)
    }

    /// Labels in increasing order.
    pub fn labels(self) -> impl Iterator<Item = Label> {
        (0..64u32).filter(move |b| self.0 & (1u64 << b) != 0).map(|b| b + 1)
    }
}

impl fmt::Display for LabelSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, l) in self.labels().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        f.write_str("}")
    }
}

/// An element of `L`: a set of at least two labels.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypeSet(LabelSet);

impl TypeSet {
    /// Returns `None` for the empty set and singletons.
    pub fn new(set: LabelSet) -> Option<Self> {
        (set.len() >= 2).then_some(TypeSet(set))
    }

    pub fn from_labels<I: IntoIterator<Item = Label>>(labels: I) -> Option<Self> {
        Self::new(LabelSet::from_labels(labels))
    }

    pub fn set(self) -> LabelSet {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.len()
    }

    pub fn is_empty(self) -> bool {
        false
    }

    pub fn max_label(self) -> Label {
        64 - self.0 .0.leading_zeros()
    }

    pub fn labels(self) -> impl Iterator<Item = Label> {
        self.0.labels()
    }
}

impl fmt::Display for TypeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A sequence of distinct labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderedSubset(Vec<Label>);

impl OrderedSubset {
    /// Returns `None` if a label repeats or is outside `1..=MAX_LABEL`.
    pub fn new(labels: Vec<Label>) -> Option<Self> {
        let mut seen = LabelSet::EMPTY;
        for &l in &labels {
            if l == 0 || l > MAX_LABEL || seen.contains(l) {
                return None;
            }
            seen = LabelSet(seen.0 | (1u64 << (l - 1)));
        }
        Some(OrderedSubset(labels))
    }

    pub fn labels(&self) -> &[Label] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> Self {
        OrderedSubset(self.0.iter().rev().copied().collect())
    }

    pub fn set(&self) -> LabelSet {
        LabelSet::from_labels(self.0.iter().copied())
    }

    pub fn into_vec(self) -> Vec<Label> {
        self.0
    }
}

impl fmt::Display for OrderedSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        f.write_str(")")
    }
}

/// Where [`PlanarForest::insert_edge`] places a new internal edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InsertSite {
    /// Group the children `range` of the internal node `parent` under a new node.
    Children { parent: EdgeId, range: Range<usize> },
    /// Join whole trees (indices in canonical order) under a new root edge, in the given order.
    Trees(Vec<usize>),
}

/// A planar forest labelled by `1..=n`, in canonical tree order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlanarForest {
    n: u32,
    trees: Vec<PlanarTree>,
}

impl PlanarForest {
    /// Validates a tree sequence and returns its canonical representative.
    ///
    /// Edge ids are kept as given and must be distinct.
    pub fn from_trees(mut trees: Vec<PlanarTree>) -> Result<Self, ForestError> {
        let mut labels = Vec::new();
        let mut ids = HashSet::new();
        for t in &trees {
            t.top.validate(&mut labels, &mut ids)?;
        }
        if labels.is_empty() {
            return Err(ForestError::Empty);
        }
        let n = labels.len() as u32;
        let mut seen = LabelSet::EMPTY;
        for &l in &labels {
            if seen.contains(l) {
                return Err(ForestError::RepeatedLabel(l));
            }
            seen = LabelSet(seen.0 | (1u64 << (l - 1)));
        }
        if let Some(missing) = (1..=n).find(|&l| !seen.contains(l)) {
            return Err(ForestError::MissingLabel(missing));
        }
        trees.sort_by_key(|t| t.top.min_label());
        Ok(PlanarForest { n, trees })
    }

    /// The forest of `n` single-leaf trees.
    pub fn trivial(n: u32) -> Self {
        PlanarForest { n, trees: (1..=n).map(PlanarTree::leaf).collect() }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn trees(&self) -> &[PlanarTree] {
        &self.trees
    }

    /// Canonical form; a no-op on values of this type, kept for symmetry
    /// with [`PlanarForest::from_trees`] which canonicalizes arbitrary sequences.
    pub fn canonicalize(&self) -> Self {
        let mut out = self.clone();
        out.trees.sort_by_key(|t| t.top.min_label());
        out
    }

    /// Reassigns edge ids `0, 1, ...` in depth-first order.
    pub fn renumbered(mut self) -> Self {
        let mut next = 0;
        for t in &mut self.trees {
            t.top.renumber(&mut next);
        }
        self
    }

    /// Internal edges in depth-first order, trees in canonical order.
    pub fn internal_edges(&self) -> Vec<EdgeId> {
        let mut out = Vec::new();
        for t in &self.trees {
            t.top.collect_edges(&mut out);
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.trees.iter().map(|t| t.top.internal_count()).sum()
    }

    /// Depth-first labels of all leaves.
    pub fn leaves(&self) -> Vec<Label> {
        let mut out = Vec::with_capacity(self.n as usize);
        for t in &self.trees {
            t.top.collect_leaves(&mut out);
        }
        out
    }

    fn node(&self, e: EdgeId) -> Result<&Node, ForestError> {
        self.trees.iter().find_map(|t| t.top.find(e)).ok_or(ForestError::UnknownEdge(e))
    }

    fn node_mut(&mut self, e: EdgeId) -> Result<&mut Node, ForestError> {
        self.trees.iter_mut().find_map(|t| t.top.find_mut(e)).ok_or(ForestError::UnknownEdge(e))
    }

    pub fn contains_edge(&self, e: EdgeId) -> bool {
        self.node(e).is_ok()
    }

    /// Ordered labels of the leaves above `e`.
    pub fn leaf_order(&self, e: EdgeId) -> Result<OrderedSubset, ForestError> {
        Ok(OrderedSubset(self.node(e)?.leaves()))
    }

    /// Unordered labels of the leaves above `e`.
    pub fn edge_type(&self, e: EdgeId) -> Result<TypeSet, ForestError> {
        let set = LabelSet::from_labels(self.node(e)?.leaves());
        Ok(TypeSet(set))
    }

    /// The edge whose type is `t`, if any. Types of distinct edges differ.
    pub fn edge_with_type(&self, t: TypeSet) -> Option<EdgeId> {
        self.internal_edges().into_iter().find(|&e| self.edge_type(e).ok() == Some(t))
    }

    /// Mirrors the subtree standing on `e`, the node of `e` included.
    pub fn flip(&self, e: EdgeId) -> Result<Self, ForestError> {
        let mut out = self.clone();
        out.node_mut(e)?.mirror();
        Ok(out)
    }

    /// Collapses `e`. A root edge splits its tree into one tree per child.
    pub fn delete_edge(&self, e: EdgeId) -> Result<Self, ForestError> {
        let mut trees = self.trees.clone();
        if let Some(i) = trees.iter().position(|t| matches!(&t.top, Node::Internal { id, .. } if *id == e)) {
            let Node::Internal { children, .. } = trees.remove(i).top else { unreachable!() };
            trees.extend(children.into_iter().map(PlanarTree::new));
        } else if !trees.iter_mut().any(|t| t.top.splice_out(e)) {
            return Err(ForestError::UnknownEdge(e));
        }
        trees.sort_by_key(|t| t.top.min_label());
        Ok(PlanarForest { n: self.n, trees })
    }

    /// Adds a fresh internal edge at `site`; deleting it gives back `self`.
    pub fn insert_edge(&self, site: &InsertSite) -> Result<(Self, EdgeId), ForestError> {
        let fresh = EdgeId(self.trees.iter().filter_map(|t| t.top.max_id()).max().map_or(0, |m| m + 1));
        let mut out = self.clone();
        match site {
            InsertSite::Children { parent, range } => {
                let Node::Internal { children, .. } = out.node_mut(*parent)? else { unreachable!() };
                let len = children.len();
                if range.end <= range.start || range.len() < 2 {
                    return Err(ForestError::RangeTooShort);
                }
                if range.end > len || range.len() == len {
                    return Err(ForestError::RangeInvalid { start: range.start, end: range.end, len });
                }
                let grouped: Vec<Node> = children.drain(range.clone()).collect();
                children.insert(range.start, Node::internal(fresh, grouped));
            }
            InsertSite::Trees(order) => {
                if order.len() < 2 {
                    return Err(ForestError::RangeTooShort);
                }
                let mut picked = vec![false; out.trees.len()];
                for &i in order {
                    if i >= picked.len() || picked[i] {
                        return Err(ForestError::BadTreeSelection(i));
                    }
                    picked[i] = true;
                }
                let children = order.iter().map(|&i| out.trees[i].top.clone()).collect();
                let mut trees: Vec<PlanarTree> =
                    out.trees.into_iter().zip(&picked).filter(|(_, &p)| !p).map(|(t, _)| t).collect();
                trees.push(PlanarTree::new(Node::internal(fresh, children)));
                trees.sort_by_key(|t| t.top.min_label());
                out.trees = trees;
            }
        }
        Ok((out, fresh))
    }

    /// Deletes every internal edge except `e`.
    pub fn restrict_to_edge(&self, e: EdgeId) -> Result<Self, ForestError> {
        let order = self.leaf_order(e)?;
        let above = order.set();
        let mut trees: Vec<PlanarTree> = (1..=self.n).filter(|&l| !above.contains(l)).map(PlanarTree::leaf).collect();
        trees.push(PlanarTree::new(Node::internal(e, order.0.into_iter().map(Node::Leaf).collect())));
        trees.sort_by_key(|t| t.top.min_label());
        Ok(PlanarForest { n: self.n, trees })
    }
}

impl fmt::Display for PlanarForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&serialize_forest(self))
    }
}

impl FromStr for PlanarForest {
    type Err = ForestError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_forest(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> PlanarForest {
        parse_forest(s).unwrap()
    }

    fn edges(s: &str) -> (PlanarForest, Vec<EdgeId>) {
        let forest = f(s);
        let e = forest.internal_edges();
        (forest, e)
    }

    #[test]
    fn internal_edges_in_depth_first_order() {
        assert!(f("1,2,3").internal_edges().is_empty());
        let (forest, e) = edges("((1 2) 3)");
        assert_eq!(e.len(), 2);
        assert_eq!(forest.leaf_order(e[0]).unwrap().labels(), &[1, 2, 3]);
        assert_eq!(forest.leaf_order(e[1]).unwrap().labels(), &[1, 2]);
        assert_eq!(f("(1 2),(3 4)").internal_edges().len(), 2);
    }

    #[test]
    fn flip_examples() {
        let (forest, e) = edges("((1 2) 3)");
        assert_eq!(forest.flip(e[1]).unwrap().to_string(), "((2 1) 3)");
        assert_eq!(forest.flip(e[0]).unwrap().to_string(), "(3 (2 1))");
        let flipped = forest.flip(e[0]).unwrap();
        assert_eq!(flipped.leaf_order(e[0]).unwrap().labels(), &[3, 2, 1]);
    }

    #[test]
    fn flip_keeps_ids_and_other_trees() {
        let (forest, e) = edges("(1 2),(3 4)");
        let flipped = forest.flip(e[1]).unwrap();
        assert_eq!(flipped.to_string(), "(1 2),(4 3)");
        assert_eq!(flipped.internal_edges(), e);
    }

    #[test]
    fn delete_examples() {
        let (forest, e) = edges("((1 2) 3)");
        assert_eq!(forest.delete_edge(e[1]).unwrap().to_string(), "(1 2 3)");
        assert_eq!(forest.delete_edge(e[0]).unwrap().to_string(), "(1 2),3");
        let (forest, e) = edges("(1 2),(3 4)");
        assert_eq!(forest.delete_edge(e[0]).unwrap().to_string(), "1,2,(3 4)");
        let (forest, e) = edges("(2 (3 1) 4)");
        assert_eq!(forest.delete_edge(e[0]).unwrap().to_string(), "(3 1),2,4");
        assert_eq!(forest.delete_edge(e[1]).unwrap().to_string(), "(2 3 1 4)");
    }

    #[test]
    fn unknown_edge_is_an_error() {
        let forest = f("(1 2),3");
        let bogus = EdgeId(17);
        assert_eq!(forest.flip(bogus), Err(ForestError::UnknownEdge(bogus)));
        assert_eq!(forest.delete_edge(bogus), Err(ForestError::UnknownEdge(bogus)));
        assert_eq!(forest.leaf_order(bogus), Err(ForestError::UnknownEdge(bogus)));
        assert_eq!(forest.restrict_to_edge(bogus), Err(ForestError::UnknownEdge(bogus)));
    }

    #[test]
    fn edge_types() {
        let (forest, e) = edges("((1 2) 3)");
        assert_eq!(forest.edge_type(e[0]).unwrap().to_string(), "{1,2,3}");
        let (forest, e) = edges("((2 1) 3)");
        assert_eq!(forest.edge_type(e[1]).unwrap().to_string(), "{1,2}");
    }

    #[test]
    fn insert_examples() {
        let (forest, e) = edges("(1 2 3)");
        let (sigma, new) = forest.insert_edge(&InsertSite::Children { parent: e[0], range: 0..2 }).unwrap();
        assert_eq!(sigma.to_string(), "((1 2) 3)");
        assert_eq!(sigma.leaf_order(new).unwrap().labels(), &[1, 2]);
        assert_eq!(sigma.delete_edge(new).unwrap(), forest);

        let forest = f("1,2,3");
        let (sigma, new) = forest.insert_edge(&InsertSite::Trees(vec![1, 0])).unwrap();
        assert_eq!(sigma.to_string(), "(2 1),3");
        assert_eq!(sigma.delete_edge(new).unwrap(), forest);
    }

    #[test]
    fn insert_rejects_bad_sites() {
        let (forest, e) = edges("(1 2 3)");
        let site = |range| InsertSite::Children { parent: e[0], range };
        assert_eq!(forest.insert_edge(&site(0..1)), Err(ForestError::RangeTooShort));
        assert!(matches!(forest.insert_edge(&site(0..3)), Err(ForestError::RangeInvalid { .. })));
        assert!(matches!(forest.insert_edge(&site(1..4)), Err(ForestError::RangeInvalid { .. })));
        let forest = f("1,2,3");
        assert_eq!(forest.insert_edge(&InsertSite::Trees(vec![2])), Err(ForestError::RangeTooShort));
        assert_eq!(forest.insert_edge(&InsertSite::Trees(vec![0, 0])), Err(ForestError::BadTreeSelection(0)));
        assert_eq!(forest.insert_edge(&InsertSite::Trees(vec![0, 5])), Err(ForestError::BadTreeSelection(5)));
    }

    #[test]
    fn restrict_examples() {
        let (forest, e) = edges("((1 2) 3)");
        assert_eq!(forest.restrict_to_edge(e[1]).unwrap().to_string(), "(1 2),3");
        assert_eq!(forest.restrict_to_edge(e[0]).unwrap().to_string(), "(1 2 3)");
        let single = f("(3 1),2");
        let e = single.internal_edges()[0];
        assert_eq!(single.restrict_to_edge(e).unwrap(), single);
    }

    #[test]
    fn from_trees_validates() {
        let bad = vec![PlanarTree::new(Node::internal(EdgeId(0), vec![Node::Leaf(1)]))];
        assert_eq!(PlanarForest::from_trees(bad), Err(ForestError::UnderfullNode));
        let dup = vec![PlanarTree::leaf(1), PlanarTree::leaf(1)];
        assert_eq!(PlanarForest::from_trees(dup), Err(ForestError::RepeatedLabel(1)));
        let gap = vec![PlanarTree::leaf(1), PlanarTree::leaf(3)];
        assert_eq!(PlanarForest::from_trees(gap), Err(ForestError::MissingLabel(2)));
        assert_eq!(PlanarForest::from_trees(vec![]), Err(ForestError::Empty));
    }

    #[test]
    fn canonical_order_and_equality_ignore_ids() {
        let a = PlanarForest::from_trees(vec![
            PlanarTree::leaf(3),
            PlanarTree::new(Node::internal(EdgeId(9), vec![Node::Leaf(1), Node::Leaf(2)])),
        ])
        .unwrap();
        assert_eq!(a.to_string(), "(1 2),3");
        assert_eq!(a, f("(1 2),3"));
        assert_eq!(a.canonicalize(), a);
    }

    #[test]
    fn label_set_relations() {
        let a = LabelSet::from_labels([1, 2]);
        let b = LabelSet::from_labels([1, 2, 3]);
        let c = LabelSet::from_labels([2, 4]);
        assert!(a.nested_or_disjoint(b));
        assert!(!c.nested_or_disjoint(b));
        assert!(LabelSet::from_labels([4, 5]).nested_or_disjoint(b));
        assert_eq!(TypeSet::from_labels([3]), None);
        assert_eq!(TypeSet::from_labels([1, 3]).unwrap().max_label(), 3);
    }
}
