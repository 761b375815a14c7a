use crate::complex::{ComplexModel, EdgeIdx, Subcube};
use crate::forests::{InsertSite, Node, OrderedSubset, TypeSet};

use super::HyperplaneError;

/// Reverses the run of `o` formed by the labels in `l`.
///
/// The labels of `l` present in `o` must be consecutive, and `l` must be
/// nested with or disjoint from the labels of `o`.
pub fn reflect_order(o: &OrderedSubset, l: TypeSet) -> Result<OrderedSubset, HyperplaneError> {
    let set = o.set();
    if !l.set().nested_or_disjoint(set) {
        return Err(HyperplaneError::NotNestedOrDisjoint { l: l.to_string(), o: o.to_string() });
    }
    let mut labels = o.labels().to_vec();
    if let Some(range) = run_of(o, l) {
        labels[range].reverse();
    } else if !l.set().is_disjoint(set) {
        return Err(HyperplaneError::NotContiguous { l: l.to_string(), o: o.to_string() });
    }
    Ok(OrderedSubset::new(labels).expect("a permutation of a valid subset"))
}

/// Positions of the labels of `l` in `o`, when they are non-empty and consecutive.
fn run_of(o: &OrderedSubset, l: TypeSet) -> Option<std::ops::Range<usize>> {
    let hits: Vec<usize> =
        o.labels().iter().enumerate().filter(|(_, &x)| l.set().contains(x)).map(|(i, _)| i).collect();
    let (&first, &last) = (hits.first()?, hits.last()?);
    (last - first + 1 == hits.len()).then_some(first..last + 1)
}

/// How a midcube of a given type can act on an oriented edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReflectionClass {
    /// The types are neither nested nor disjoint.
    StronglyInvalid,
    /// Compatible types, but no square carries both.
    Invalid,
    /// A 2-subcube whose outward corner face is the edge and whose other
    /// slot has the requested type (any slot, when it is the edge's own type).
    Valid(Subcube),
}

/// Decides whether some square contains `edge` and a midcube of type `l`,
/// building the square by inserting an edge of type `l` into the edge's forest.
pub fn classify_reflection(model: &ComplexModel, edge: EdgeIdx, l: TypeSet) -> ReflectionClass {
    let sc = model.edge(edge);
    let tau = model.forest(1, sc.forest);
    let e = model.slots(sc)[0].id;
    let order = tau.leaf_order(e).expect("own edge");
    let own = order.set();
    if !l.set().nested_or_disjoint(own) {
        return ReflectionClass::StronglyInvalid;
    }
    let node_tree = tau.trees().iter().position(|t| matches!(t.top, Node::Internal { .. })).expect("one internal edge");
    let leaf_tree = |x| tau.trees().iter().position(|t| t.top == Node::Leaf(x)).expect("singleton");

    let site = if l.set() == own {
        let Node::Internal { children, .. } = &tau.trees()[node_tree].top else { unreachable!() };
        if children.len() >= 3 {
            Some(InsertSite::Children { parent: e, range: 0..2 })
        } else if tau.trees().len() >= 2 {
            let other = usize::from(node_tree == 0);
            Some(InsertSite::Trees(vec![node_tree, other]))
        } else {
            None
        }
    } else if l.set().is_subset(own) {
        run_of(&order, l).map(|range| InsertSite::Children { parent: e, range })
    } else if own.is_subset(l.set()) {
        let mut picked = vec![node_tree];
        picked.extend(l.labels().filter(|&x| !own.contains(x)).map(leaf_tree));
        Some(InsertSite::Trees(picked))
    } else {
        Some(InsertSite::Trees(l.labels().map(leaf_tree).collect()))
    };

    let Some(site) = site else {
        return ReflectionClass::Invalid;
    };
    let (sigma, _) = tau.insert_edge(&site).expect("site built from the forest");
    let forest = model.forest_index(&sigma).expect("every 2-edge forest is in the model");
    ReflectionClass::Valid(Subcube { dim: 2, forest, param: sc.param })
}

/// A midcube of a square: the square is named by any of its 2-subcubes, and
/// the midcube by the type of the edges it crosses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Midcube {
    pub square: Subcube,
    pub ty: usize,
}

/// The image of `edge` under reflection across `z`: its reverse when `z` is
/// dual to it, otherwise the edge on the other side of `z` pointing the same way.
pub fn reflect_edge(model: &ComplexModel, edge: EdgeIdx, z: Midcube) -> Result<EdgeIdx, HyperplaneError> {
    if z.square.dim != 2 || !model.contains_subcube(z.square) {
        return Err(HyperplaneError::NotASquare(format!("{:?}", z.square)));
    }
    let square = model.label_text(z.square);
    let slots = model.slots(z.square);
    if !slots.iter().any(|s| s.ty == z.ty) {
        return Err(HyperplaneError::MidcubeNotInSquare { square, ty: model.types().type_at(z.ty).to_string() });
    }
    for q in model.orbit(z.square) {
        for slot in 0..2 {
            if model.edge_of(model.face(q, slot)) != edge {
                continue;
            }
            return Ok(if model.slots(q)[slot].ty == z.ty {
                model.parallel_pair(q, slot).1
            } else {
                model.reverse(edge)
            });
        }
    }
    Err(HyperplaneError::EdgeNotOnSquare { edge: model.edge_text(edge), square })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{build_complex, Parameter, Space};
    use crate::forests::parse_forest;

    fn ts(labels: &[u32]) -> TypeSet {
        TypeSet::from_labels(labels.iter().copied()).unwrap()
    }

    fn os(labels: &[u32]) -> OrderedSubset {
        OrderedSubset::new(labels.to_vec()).unwrap()
    }

    fn edge(m: &ComplexModel, text: &str, param: Parameter) -> EdgeIdx {
        let f = m.forest_index(&parse_forest(text).unwrap()).unwrap();
        m.edge_index(f, param)
    }

    fn square(m: &ComplexModel, text: &str) -> Subcube {
        let f = m.forest_index(&parse_forest(text).unwrap()).unwrap();
        Subcube { dim: 2, forest: f, param: Parameter::ZERO }
    }

    #[test]
    fn order_reversal() {
        assert_eq!(reflect_order(&os(&[1, 2, 3]), ts(&[1, 2])).unwrap(), os(&[2, 1, 3]));
        assert_eq!(reflect_order(&os(&[1, 2, 3]), ts(&[4, 5])).unwrap(), os(&[1, 2, 3]));
        assert_eq!(reflect_order(&os(&[1, 2, 3]), ts(&[1, 2, 3])).unwrap(), os(&[3, 2, 1]));
        assert_eq!(reflect_order(&os(&[1, 2]), ts(&[1, 2, 3])).unwrap(), os(&[2, 1]));
        assert!(matches!(reflect_order(&os(&[1, 3, 2]), ts(&[1, 2])), Err(HyperplaneError::NotContiguous { .. })));
        assert!(matches!(
            reflect_order(&os(&[1, 2, 3]), ts(&[2, 4])),
            Err(HyperplaneError::NotNestedOrDisjoint { .. })
        ));
    }

    #[test]
    fn classification_examples() {
        let m = build_complex(4, Space::Base).unwrap();
        let e = edge(&m, "(1 2 3),4", Parameter::ZERO);
        assert_eq!(classify_reflection(&m, e, ts(&[2, 4])), ReflectionClass::StronglyInvalid);
        let bad = edge(&m, "(1 3 2),4", Parameter::ZERO);
        assert_eq!(classify_reflection(&m, bad, ts(&[1, 2])), ReflectionClass::Invalid);
        let m3 = build_complex(3, Space::Base).unwrap();
        let e3 = edge(&m3, "(1 2 3)", Parameter::ZERO);
        assert_eq!(classify_reflection(&m3, e3, ts(&[1, 2])), ReflectionClass::Valid(square(&m3, "((1 2) 3)")));
    }

    #[test]
    fn dual_type_needs_room() {
        let m = build_complex(2, Space::Base).unwrap();
        let e = edge(&m, "(1 2)", Parameter::ZERO);
        assert_eq!(classify_reflection(&m, e, ts(&[1, 2])), ReflectionClass::Invalid);
        let m3 = build_complex(3, Space::Base).unwrap();
        let e3 = edge(&m3, "(1 2),3", Parameter::ZERO);
        assert!(matches!(classify_reflection(&m3, e3, ts(&[1, 2])), ReflectionClass::Valid(_)));
    }

    #[test]
    fn reflection_examples() {
        let m = build_complex(3, Space::Base).unwrap();
        let sq = square(&m, "((1 2) 3)");
        let t12 = m.types().index_of(ts(&[1, 2])).unwrap();
        let t123 = m.types().index_of(ts(&[1, 2, 3])).unwrap();

        let tau = edge(&m, "(1 2 3)", Parameter::ZERO);
        let out = reflect_edge(&m, tau, Midcube { square: sq, ty: t12 }).unwrap();
        assert_eq!(m.edge_text(out), "(2 1 3)@0");

        let tau = edge(&m, "(1 2),3", Parameter::ZERO);
        let out = reflect_edge(&m, tau, Midcube { square: sq, ty: t123 }).unwrap();
        assert_eq!(m.edge_text(out), "(2 1),3@0");

        let dual = reflect_edge(&m, tau, Midcube { square: sq, ty: t12 }).unwrap();
        assert_eq!(dual, m.reverse(tau));
    }

    #[test]
    fn cover_reflection_shifts_parameter() {
        let m = build_complex(3, Space::Cover).unwrap();
        let sq = square(&m, "((1 2) 3)");
        let t123 = m.types().index_of(ts(&[1, 2, 3])).unwrap();
        let tau = edge(&m, "(1 2),3", Parameter::ZERO);
        let out = reflect_edge(&m, tau, Midcube { square: sq, ty: t123 }).unwrap();
        let expected = edge(&m, "(2 1),3", Parameter::unit(t123));
        assert_eq!(out, expected);
    }

    #[test]
    fn reflection_errors() {
        let m = build_complex(3, Space::Base).unwrap();
        let sq = square(&m, "((1 2) 3)");
        let t13 = m.types().index_of(ts(&[1, 3])).unwrap();
        let tau = edge(&m, "(1 2 3)", Parameter::ZERO);
        assert!(matches!(
            reflect_edge(&m, tau, Midcube { square: sq, ty: t13 }),
            Err(HyperplaneError::MidcubeNotInSquare { .. })
        ));
        let t12 = m.types().index_of(ts(&[1, 2])).unwrap();
        let far = edge(&m, "(1 3 2)", Parameter::ZERO);
        assert!(matches!(
            reflect_edge(&m, far, Midcube { square: sq, ty: t12 }),
            Err(HyperplaneError::EdgeNotOnSquare { .. })
        ));
    }
}
