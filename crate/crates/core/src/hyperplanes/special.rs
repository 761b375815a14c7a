use std::collections::{BTreeMap, HashSet};

use serde::Serialize;

use crate::complex::{ComplexModel, EdgeIdx, Space, Subcube};
use crate::report::{Witness, TOOL_VERSION};

use super::{compute_hyperplanes, HyperplanePartition};

/// A hyperplane is two-sided when no oriented edge dual to it can be
/// translated across squares onto its own reverse.
pub fn check_two_sided(model: &ComplexModel, partition: &HyperplanePartition, h: u32) -> (bool, Option<Witness>) {
    for &e in partition.members(h) {
        let back = model.reverse(e);
        if partition.oriented_class_of(e) == partition.oriented_class_of(back) {
            let w = Witness::new(
                "one-sided",
                Some(model.hex(model.initial(e))),
                vec![model.edge_text(e), model.edge_text(back)],
            );
            return (false, Some(w));
        }
    }
    (true, None)
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct HyperplaneVerdict {
    pub id: u32,
    #[serde(rename = "type")]
    pub ty: String,
    /// Undirected 1-cubes dual to the hyperplane.
    pub edges: usize,
    pub two_sided: bool,
    pub self_intersects: bool,
    pub self_osculates: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PairVerdict {
    pub h1: u32,
    pub h2: u32,
    pub intersect: bool,
    pub osculate: bool,
    pub inter_osculate: bool,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Conditions {
    pub two_sided: bool,
    pub no_self_intersection: bool,
    pub no_self_osculation: bool,
    pub no_inter_osculation: bool,
}

/// Per-hyperplane and per-pair verdicts. Only pairs that intersect or
/// osculate are listed; every other pair does neither.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SpecialnessReport {
    pub version: &'static str,
    pub variant: Space,
    pub n: u32,
    pub hyperplanes: Vec<HyperplaneVerdict>,
    pub pairs: Vec<PairVerdict>,
    pub conditions: Conditions,
    pub pass: bool,
    pub witnesses: Vec<Witness>,
}

impl SpecialnessReport {
    pub fn pair(&self, h1: u32, h2: u32) -> Option<&PairVerdict> {
        let key = (h1.min(h2), h1.max(h2));
        self.pairs.binary_search_by_key(&key, |p| (p.h1, p.h2)).ok().map(|i| &self.pairs[i])
    }
}

#[derive(Default)]
struct PairEvidence {
    square: Option<Subcube>,
    osculation: Option<(EdgeIdx, EdgeIdx)>,
}

pub fn specialness_report(model: &ComplexModel) -> SpecialnessReport {
    let partition = compute_hyperplanes(model);
    let count = partition.len();
    let mut self_square: Vec<Option<Subcube>> = vec![None; count];
    let mut self_osculation: Vec<Option<(EdgeIdx, EdgeIdx)>> = vec![None; count];
    let mut pairs: BTreeMap<(u32, u32), PairEvidence> = BTreeMap::new();

    let corners = model.corner_pairs();
    let mut corner_set = HashSet::with_capacity(corners.len());
    for c in &corners {
        corner_set.insert(c.edges);
        let (a, b) = (partition.hyperplane_of(c.edges.0), partition.hyperplane_of(c.edges.1));
        if a == b {
            self_square[a as usize].get_or_insert(c.subcube);
        } else {
            pairs.entry((a.min(b), a.max(b))).or_default().square.get_or_insert(c.subcube);
        }
    }

    for v in model.vertices() {
        let out = model.edges_from(v);
        for (i, &a) in out.iter().enumerate() {
            for &b in &out[i + 1..] {
                if corner_set.contains(&(a, b)) {
                    continue;
                }
                let (ha, hb) = (partition.hyperplane_of(a), partition.hyperplane_of(b));
                if ha == hb {
                    self_osculation[ha as usize].get_or_insert((a, b));
                } else {
                    let key = (ha.min(hb), ha.max(hb));
                    pairs.entry(key).or_default().osculation.get_or_insert((a, b));
                }
            }
        }
    }

    let mut witnesses = Vec::new();
    let mut hyperplanes = Vec::with_capacity(count);
    for h in partition.hyperplanes() {
        let (two_sided, w) = check_two_sided(model, &partition, h.id);
        witnesses.extend(w);
        if let Some(sq) = self_square[h.id as usize] {
            witnesses.push(square_witness(model, "self-intersection", sq));
        }
        if let Some((a, b)) = self_osculation[h.id as usize] {
            witnesses.push(osculation_witness(model, "self-osculation", a, b));
        }
        hyperplanes.push(HyperplaneVerdict {
            id: h.id,
            ty: model.types().type_at(h.ty).to_string(),
            edges: h.size,
            two_sided,
            self_intersects: self_square[h.id as usize].is_some(),
            self_osculates: self_osculation[h.id as usize].is_some(),
        });
    }

    let pairs: Vec<PairVerdict> = pairs
        .into_iter()
        .map(|((h1, h2), ev)| {
            let inter = ev.square.is_some() && ev.osculation.is_some();
            if let (true, Some(sq), Some((a, b))) = (inter, ev.square, ev.osculation) {
                let mut w = square_witness(model, "inter-osculation", sq);
                w.cells.push(model.edge_text(a));
                w.cells.push(model.edge_text(b));
                witnesses.push(w);
            }
            PairVerdict {
                h1,
                h2,
                intersect: ev.square.is_some(),
                osculate: ev.osculation.is_some(),
                inter_osculate: inter,
            }
        })
        .collect();

    // self-intersection and self-osculation first: they are what fails in the base space
    witnesses.sort_by_key(|w| match w.kind.as_str() {
        "self-intersection" => 0,
        "self-osculation" => 1,
        "inter-osculation" => 2,
        _ => 3,
    });
    let conditions = Conditions {
        two_sided: hyperplanes.iter().all(|h| h.two_sided),
        no_self_intersection: hyperplanes.iter().all(|h| !h.self_intersects),
        no_self_osculation: hyperplanes.iter().all(|h| !h.self_osculates),
        no_inter_osculation: pairs.iter().all(|p| !p.inter_osculate),
    };
    let pass = conditions.two_sided
        && conditions.no_self_intersection
        && conditions.no_self_osculation
        && conditions.no_inter_osculation;
    SpecialnessReport {
        version: TOOL_VERSION,
        variant: model.space(),
        n: model.n(),
        hyperplanes,
        pairs,
        conditions,
        pass,
        witnesses,
    }
}

fn square_witness(model: &ComplexModel, kind: &str, sq: Subcube) -> Witness {
    Witness::new(kind, Some(model.hex(sq.param)), vec![model.label_text(sq)])
}

fn osculation_witness(model: &ComplexModel, kind: &str, a: EdgeIdx, b: EdgeIdx) -> Witness {
    Witness::new(kind, Some(model.hex(model.initial(a))), vec![model.edge_text(a), model.edge_text(b)])
}

/// Intersecting pairs of distinct hyperplanes whose edges share a type.
pub fn same_type_intersections(model: &ComplexModel) -> Vec<(u32, u32)> {
    let partition = compute_hyperplanes(model);
    let mut out: Vec<(u32, u32)> = model
        .corner_pairs()
        .iter()
        .map(|c| (partition.hyperplane_of(c.edges.0), partition.hyperplane_of(c.edges.1)))
        .filter(|&(a, b)| a != b && partition.hyperplane(a).ty == partition.hyperplane(b).ty)
        .map(|(a, b)| (a.min(b), a.max(b)))
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::build_complex;
    use crate::forests::TypeSet;

    #[test]
    fn cover_three_is_special() {
        let m = build_complex(3, Space::Cover).unwrap();
        let r = specialness_report(&m);
        assert!(r.pass, "{:?}", r.witnesses.first());
        assert!(r.witnesses.is_empty());
        assert!(same_type_intersections(&m).is_empty());
    }

    #[test]
    fn base_three_pathologies() {
        let m = build_complex(3, Space::Base).unwrap();
        let r = specialness_report(&m);
        assert!(!r.pass);
        assert!(r.hyperplanes.iter().all(|h| h.self_osculates && !h.self_intersects));
        assert!(r.conditions.no_self_intersection);
        assert!(!r.conditions.no_self_osculation);
    }

    #[test]
    fn base_three_one_sided_type() {
        let m = build_complex(3, Space::Base).unwrap();
        let p = compute_hyperplanes(&m);
        let t12 = m.types().index_of(TypeSet::from_labels([1, 2]).unwrap()).unwrap();
        let h = p.hyperplanes().iter().find(|h| h.ty == t12).unwrap();
        let (two_sided, w) = check_two_sided(&m, &p, h.id);
        assert!(!two_sided);
        assert_eq!(w.unwrap().kind, "one-sided");
    }

    #[test]
    fn cover_two_is_trivially_special() {
        let m = build_complex(2, Space::Cover).unwrap();
        let r = specialness_report(&m);
        assert!(r.pass);
        assert_eq!(r.hyperplanes.len(), 2);
        assert!(r.pairs.iter().all(|p| !p.intersect));
    }

    #[test]
    fn report_json_keys() {
        let m = build_complex(2, Space::Cover).unwrap();
        let json = serde_json::to_value(specialness_report(&m)).unwrap();
        for key in ["variant", "n", "hyperplanes", "pairs", "pass", "witnesses"] {
            assert!(json.get(key).is_some(), "{key}");
        }
        let h = &json["hyperplanes"][0];
        for key in ["id", "type", "twoSided", "selfIntersects", "selfOsculates"] {
            assert!(h.get(key).is_some(), "{key}");
        }
        assert_eq!(json["variant"], "cover");
    }
}
