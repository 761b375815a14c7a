#![allow(dead_code)]

use cactus_core::forests::{EdgeId, InsertSite, Node, PlanarForest};
use rand::seq::SliceRandom;
use rand::Rng;

/// Internal nodes of `f` with their child counts.
pub fn internal_nodes(f: &PlanarForest) -> Vec<(EdgeId, usize)> {
    fn walk(node: &Node, out: &mut Vec<(EdgeId, usize)>) {
        if let Node::Internal { id, children } = node {
            out.push((*id, children.len()));
            for c in children {
                walk(c, out);
            }
        }
    }
    let mut out = Vec::new();
    for t in f.trees() {
        walk(&t.top, &mut out);
    }
    out
}

/// Every place a new internal edge can go.
pub fn all_insert_sites(f: &PlanarForest) -> Vec<InsertSite> {
    let mut sites = Vec::new();
    for (parent, len) in internal_nodes(f) {
        for start in 0..len {
            for end in start + 2..=len {
                if end - start < len {
                    sites.push(InsertSite::Children { parent, range: start..end });
                }
            }
        }
    }
    let trees = f.trees().len();
    let mut chosen = Vec::new();
    ordered_selections(trees, &mut chosen, &mut vec![false; trees], &mut sites);
    sites
}

fn ordered_selections(n: usize, chosen: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<InsertSite>) {
    if chosen.len() >= 2 {
        out.push(InsertSite::Trees(chosen.clone()));
    }
    for i in 0..n {
        if !used[i] {
            used[i] = true;
            chosen.push(i);
            ordered_selections(n, chosen, used, out);
            chosen.pop();
            used[i] = false;
        }
    }
}

/// A random site, or `None` when no edge can be added.
pub fn random_insert_site<R: Rng>(f: &PlanarForest, rng: &mut R) -> Option<InsertSite> {
    let roomy: Vec<(EdgeId, usize)> = internal_nodes(f).into_iter().filter(|&(_, len)| len >= 3).collect();
    let trees = f.trees().len();
    let use_trees = trees >= 2 && (roomy.is_empty() || rng.gen_bool(0.5));
    if use_trees {
        let mut picked: Vec<usize> = (0..trees).collect();
        picked.shuffle(rng);
        picked.truncate(rng.gen_range(2..=trees));
        Some(InsertSite::Trees(picked))
    } else {
        let &(parent, len) = roomy.choose(rng)?;
        let size = rng.gen_range(2..len);
        let start = rng.gen_range(0..=len - size);
        Some(InsertSite::Children { parent, range: start..start + size })
    }
}

/// A random forest on `1..=n` with up to `edges` internal edges.
pub fn random_forest<R: Rng>(n: u32, edges: usize, rng: &mut R) -> PlanarForest {
    let mut f = PlanarForest::trivial(n);
    for _ in 0..edges {
        match random_insert_site(&f, rng) {
            Some(site) => f = f.insert_edge(&site).expect("site taken from the forest").0,
            None => break,
        }
    }
    f
}
