use std::collections::HashSet;

use cactus_core::complex::{build_complex, check_npc, Parameter, Space};
use cactus_core::cover::square_boundary;
use cactus_core::forests::enumerate_forests;
use cactus_core::forests::TypeSet;
use cactus_core::hyperplanes::reflect_order;

#[test]
fn flip_orbits_are_free() {
    for (n, space) in [(2, Space::Base), (3, Space::Base), (4, Space::Base), (3, Space::Cover)] {
        let m = build_complex(n, space).unwrap();
        for dim in 1..=m.top_dim() {
            let mut total = 0;
            for cube in m.cubes(dim) {
                let orbit = m.orbit(cube);
                let distinct: HashSet<_> = orbit.iter().copied().collect();
                assert_eq!(distinct.len(), 1 << dim, "n={n} {space:?} dim {dim}");
                assert!(orbit.iter().all(|&q| m.cube_of(q) == cube));
                total += orbit.len() as u64;
            }
            assert_eq!(total, m.subcube_count(dim), "orbits partition the {dim}-subcubes");
        }
    }
}

#[test]
fn subcube_counts_are_forest_counts_times_vertices() {
    for n in 2..=4u32 {
        let m = build_complex(n, Space::Cover).unwrap();
        let l = (1u64 << n) - n as u64 - 1;
        assert_eq!(m.vertex_count(), 1 << l);
        for dim in 1..n {
            let forests = enumerate_forests(n, dim as usize).len() as u64;
            assert_eq!(m.subcube_count(dim), forests << l);
        }
    }
}

#[test]
fn cover_edges_move_along_their_type() {
    for n in 2..=4 {
        let m = build_complex(n, Space::Cover).unwrap();
        for e in m.edges() {
            let back = m.reverse(e);
            assert_ne!(back, e);
            assert_eq!(m.reverse(back), e);
            assert_eq!(m.initial(back), m.terminal(e));
            assert_eq!(m.terminal(e), m.initial(e).toggled(m.edge_type(e)));
            assert_ne!(m.terminal(e), m.initial(e));
        }
    }
}

#[test]
fn base_edges_are_loops() {
    let m = build_complex(4, Space::Base).unwrap();
    assert_eq!(m.vertex_count(), 1);
    for e in m.edges() {
        assert_eq!(m.initial(e), Parameter::ZERO);
        assert_eq!(m.terminal(e), Parameter::ZERO);
        assert_ne!(m.reverse(e), e);
    }
}

#[test]
fn parallel_edges_share_type_and_direction() {
    for (n, space) in [(3, Space::Base), (4, Space::Base), (3, Space::Cover)] {
        let m = build_complex(n, space).unwrap();
        for q in m.subcubes(2) {
            for slot in 0..2 {
                let (a, b) = m.parallel_pair(q, slot);
                if space == Space::Cover {
                    assert_eq!(m.initial(b), m.initial(a).toggled(m.slots(q)[slot].ty));
                }
                assert_eq!(m.edge_type(a), m.edge_type(b));
                assert_eq!(m.edge_type(a), m.slots(q)[1 - slot].ty);
            }
        }
    }
}

/// Square boundaries have one of two shapes: `A B A^r B^r` for disjoint
/// edges, or `A^r, C A B, A^r, (C A^r B)^r` for nested ones.
#[test]
fn square_boundaries_have_two_shapes() {
    for n in 3..=5u32 {
        let mut shapes = [0usize; 2];
        for sigma in enumerate_forests(n, 2) {
            let w = square_boundary(&sigma);
            assert_eq!(w.len(), 4);
            let commutator = w[2] == w[0].reversed() && w[3] == w[1].reversed();
            let nested = w[0] == w[2]
                && !w[1].set().is_subset(w[0].set())
                && reflect_order(&w[1], TypeSet::new(w[0].set()).unwrap()).unwrap() == w[3].reversed();
            assert!(commutator != nested, "{sigma}: {w:?}");
            shapes[usize::from(nested)] += 1;
        }
        // disjoint edges need four labels
        assert_eq!(shapes[0] > 0, n >= 4, "n={n}: {shapes:?}");
        assert!(shapes[1] > 0);
    }
}

#[test]
fn links_are_flag() {
    for (n, space) in [(2, Space::Base), (3, Space::Base), (4, Space::Base), (2, Space::Cover), (3, Space::Cover)] {
        let m = build_complex(n, space).unwrap();
        let r = check_npc(&m);
        assert!(r.pass, "n={n} {space:?}: {:?}", r.witness);
    }
}
