//! The covering `M_n → D̂_n`, words in the generators of the fundamental
//! group, and presentations of the cactus groups.

mod perm;
mod presentation;
mod words;

use std::collections::{BTreeSet, HashMap, HashSet};

use serde::Serialize;
use thiserror::Error;

use crate::complex::{build_complex, ComplexError, ComplexModel, EdgeIdx, Parameter, Space, Subcube};
use crate::forests::{EdgeId, OrderedSubset, PlanarForest};
use crate::report::Witness;

pub use perm::Permutation;
pub use presentation::{
    format_word, generator_word, ordered_subsets, parse_generator_word, parse_word, presentation, relator_of_equation,
    Letter, Presentation, PresentationKind, Relator, RelatorFamily, MAX_PRESENTATION_N, MAX_PVCN_N,
};
pub use words::{canonical_cyclic, inverse_word, letter_forest, lift_word, param_add, word_image, GeneratorWord, Lift};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoverError {
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error("n = {0} is not supported here")]
    UnsupportedN(u32),
    #[error("{0} is not a type (a subset of 1..=n with at least two elements)")]
    TypeNotInL(String),
    #[error("malformed letter {0:?}")]
    BadLetter(String),
    #[error("letter {letter} does not act on 1..={n}")]
    LetterOutOfRange { letter: String, n: u32 },
    #[error("unknown presentation kind {0:?} (expected cactus, virtual_cactus or pvcn)")]
    UnknownKind(String),
    #[error("vertex {0} is not in the model")]
    UnknownVertex(String),
}

/// The image of a cell of `M_n` in `D̂_n`: the parameter is dropped.
/// Forest indices agree because both models enumerate forests the same way.
pub fn covering_image(cell: Subcube) -> Subcube {
    Subcube { param: Parameter::ZERO, ..cell }
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CoverReport {
    pub n: u32,
    pub degree: u64,
    pub expected_degree: u64,
    pub degree_ok: bool,
    /// Cells go to cells, faces to faces, flips to flips, and each cube
    /// maps bijectively onto its image.
    pub cubical_map_ok: bool,
    pub links_checked: u64,
    pub links_ok: bool,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

/// Checks that dropping parameters is a covering map of the expected degree.
pub fn verify_covering(n: u32) -> Result<CoverReport, CoverError> {
    let base = build_complex(n, Space::Base)?;
    let cover = build_complex(n, Space::Cover)?;
    Ok(compare_models(&base, &cover))
}

fn compare_models(base: &ComplexModel, cover: &ComplexModel) -> CoverReport {
    let expected_degree = 1u64 << base.types().len();
    let degree = cover.vertex_count();
    let mut witness = None;
    let degree_ok = degree == expected_degree
        && base.vertex_count() == 1
        && (0..=base.top_dim()).all(|d| cover.subcube_count(d) == expected_degree * base.subcube_count(d));
    if !degree_ok {
        witness = Some(Witness::new("degree", None, vec![format!("{degree} sheets, expected {expected_degree}")]));
    }

    let mut cubical_map_ok = true;
    'cells: for dim in 0..=cover.top_dim() {
        for sc in cover.subcubes(dim) {
            let image = covering_image(sc);
            if !base.contains_subcube(image) || base.forest(dim, image.forest) != cover.forest(dim, sc.forest) {
                cubical_map_ok = false;
            } else {
                for slot in 0..dim as usize {
                    cubical_map_ok &= cover.slots(sc)[slot].ty == base.slots(image)[slot].ty
                        && covering_image(cover.face(sc, slot)) == base.face(image, slot)
                        && covering_image(cover.flip(sc, slot)) == base.flip(image, slot);
                }
                if cube_rep(cover, sc) {
                    let images: HashSet<Subcube> = cover.orbit(sc).into_iter().map(covering_image).collect();
                    let target: HashSet<Subcube> = base.orbit(image).into_iter().collect();
                    cubical_map_ok &= images == target && images.len() == 1 << dim;
                }
            }
            if !cubical_map_ok {
                witness.get_or_insert_with(|| Witness::new("cubical-map", None, vec![cover.label_text(sc)]));
                break 'cells;
            }
        }
    }

    let base_link = link_signature(base, Parameter::ZERO);
    let mut links_checked = 0;
    let mut links_ok = true;
    for v in cover.vertices() {
        links_checked += 1;
        if link_signature(cover, v) != base_link {
            links_ok = false;
            witness.get_or_insert_with(|| Witness::new("link-mismatch", Some(cover.hex(v)), Vec::new()));
            break;
        }
    }

    CoverReport {
        n: cover.n(),
        degree,
        expected_degree,
        degree_ok,
        cubical_map_ok,
        links_checked,
        links_ok,
        pass: degree_ok && cubical_map_ok && links_ok,
        witness,
    }
}

fn cube_rep(model: &ComplexModel, sc: Subcube) -> bool {
    model.cube_of(sc) == sc
}

/// The link of `v` with each link vertex replaced by the forest of its edge.
/// Under the covering map an edge `(τ, s)` goes to `(τ, 0)`, so equal
/// signatures mean the map on links is a simplicial isomorphism.
fn link_signature(model: &ComplexModel, v: Parameter) -> (Vec<u32>, BTreeSet<Vec<u32>>) {
    let link = model.link_of(v).expect("vertex of the model");
    let forest = |e: &EdgeIdx| model.edge(*e).forest;
    let vertices = link.vertices.iter().map(forest).collect();
    let simplices = link
        .simplices
        .iter()
        .map(|s| {
            let mut m: Vec<u32> = s.members.iter().map(forest).collect();
            m.sort_unstable();
            m
        })
        .collect();
    (vertices, simplices)
}

/// The image in `S_n` of a word in `s_ij` and permutation letters.
pub fn perm_image(n: u32, word: &[Letter]) -> Result<Permutation, CoverError> {
    let mut acc = Permutation::identity(n);
    for letter in word {
        let out_of_range = || CoverError::LetterOutOfRange { letter: letter.to_string(), n };
        let p = match letter {
            Letter::Cactus { i, j } if *j <= n => Permutation::interval_reversal(n, *i, *j),
            Letter::Perm(p) if p.n() == n => p.clone(),
            Letter::Ordered(_) => return Err(CoverError::BadLetter(letter.to_string())),
            _ => return Err(out_of_range()),
        };
        acc = acc.compose(&p);
    }
    Ok(acc)
}

/// The boundary of the square through the 2-subcube `σ`, read from its
/// outward corner as a cyclic word in the `s_A`.
pub fn square_boundary(sigma: &PlanarForest) -> GeneratorWord {
    let edges = sigma.internal_edges();
    let (e1, e2) = (edges[0], edges[1]);
    let order = |f: &PlanarForest, deleted: EdgeId| {
        let rest = f.delete_edge(deleted).expect("own edge");
        let kept = if deleted == e1 { e2 } else { e1 };
        rest.leaf_order(kept).expect("kept edge")
    };
    let flip = |f: &PlanarForest, e| f.flip(e).expect("own edge");
    vec![
        order(sigma, e1),
        order(&flip(sigma, e2), e2),
        order(&flip(&flip(sigma, e1), e2), e1),
        order(&flip(sigma, e1), e2),
    ]
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RelatorReport {
    pub n: u32,
    pub relators: usize,
    pub involution: usize,
    pub commutation: usize,
    pub nested: usize,
    pub images_zero: bool,
    pub lifts_closed: bool,
    /// Lifts checked, one per relator and cover vertex.
    pub lifts_checked: u64,
    pub squares: u64,
    pub square_classes: usize,
    /// Every commutation and nested relator bounds a square.
    pub realized: bool,
    /// Every square boundary is also a relator.
    pub exact: bool,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

/// Checks the `s_A` presentation against the base complex and its cover.
pub fn verify_relators(n: u32) -> Result<RelatorReport, CoverError> {
    let p = presentation(PresentationKind::Pvcn, n)?;
    let base = build_complex(n, Space::Base)?;
    let cover = build_complex(n, Space::Cover)?;

    let square_classes: HashSet<GeneratorWord> =
        base.squares().map(|sq| canonical_cyclic(&square_boundary(base.forest(2, sq.forest)))).collect();

    let mut witness = None;
    let mut images_zero = true;
    let mut lifts_closed = true;
    let mut lifts_checked = 0;
    let mut realized_classes = HashSet::new();
    let mut realized = true;
    let letter_edges: HashMap<OrderedSubset, u32> = p
        .generators
        .iter()
        .filter_map(|g| match g {
            Letter::Ordered(a) => Some(a.clone()),
            _ => None,
        })
        .map(|a| {
            let f = cover.forest_index(&letter_forest(n, &a).expect("generator")).expect("edge forest");
            (a, f)
        })
        .collect();

    for r in &p.relators {
        let word = generator_word(r).expect("s_A relator");
        let text = format_word(&r.word);
        if !word_image(cover.types(), &word)?.is_zero() {
            images_zero = false;
            witness.get_or_insert_with(|| Witness::new("nonzero-image", None, vec![text.clone()]));
        }
        let forests: Vec<u32> = word.iter().map(|a| letter_edges[a]).collect();
        for start in cover.vertices() {
            let end = forests.iter().fold(start, |at, &f| cover.terminal(cover.edge_index(f, at)));
            lifts_checked += 1;
            if end != start {
                lifts_closed = false;
                witness.get_or_insert_with(|| Witness::new("open-lift", Some(cover.hex(start)), vec![text.clone()]));
                break;
            }
        }
        if r.family != RelatorFamily::Involution {
            let class = canonical_cyclic(&word);
            if square_classes.contains(&class) {
                realized_classes.insert(class);
            } else {
                realized = false;
                witness.get_or_insert_with(|| Witness::new("relator-without-square", None, vec![text.clone()]));
            }
        }
    }
    let exact = realized && realized_classes.len() == square_classes.len();
    let count = |f| p.relators_of(f).count();
    Ok(RelatorReport {
        n,
        relators: p.relators.len(),
        involution: count(RelatorFamily::Involution),
        commutation: count(RelatorFamily::Commutation),
        nested: count(RelatorFamily::Nested),
        images_zero,
        lifts_closed,
        lifts_checked,
        squares: base.square_count(),
        square_classes: square_classes.len(),
        realized,
        exact,
        pass: images_zero && lifts_closed && realized,
        witness,
    })
}
