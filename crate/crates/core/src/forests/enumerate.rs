use std::collections::HashMap;

use super::{EdgeId, Label, Node, PlanarForest, PlanarTree};

/// Canonical representatives of all forests on `1..=n` with `k` internal edges,
/// sorted by their text form.
///
/// Blocks of a set partition of the labels each carry one tree; a tree on a
/// block is a leaf or a node over an ordered partition of the block into at
/// least two parts.
pub fn enumerate_forests(n: u32, k: usize) -> Vec<PlanarForest> {
    if n == 0 || k >= n as usize {
        return Vec::new();
    }
    let labels: Vec<Label> = (1..=n).collect();
    let mut memo = HashMap::new();
    let mut out = Vec::new();
    for blocks in set_partitions(&labels) {
        let per_block: Vec<Vec<(Node, usize)>> = blocks.iter().map(|b| trees_on(b, &mut memo).clone()).collect();
        let mut chosen = Vec::with_capacity(blocks.len());
        product(&per_block, 0, 0, k, &mut chosen, &mut |nodes| {
            let mut next = 0;
            let trees = nodes
                .iter()
                .map(|&n| {
                    let mut top = n.clone();
                    top.renumber(&mut next);
                    PlanarTree::new(top)
                })
                .collect();
            let forest = PlanarForest::from_trees(trees).expect("generated forest is valid");
            out.push(forest.renumbered());
        });
    }
    let mut keyed: Vec<(String, PlanarForest)> = out.into_iter().map(|f| (f.to_string(), f)).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    keyed.dedup_by(|a, b| a.0 == b.0);
    keyed.into_iter().map(|(_, f)| f).collect()
}

fn product<'a>(
    options: &'a [Vec<(Node, usize)>],
    at: usize,
    edges: usize,
    target: usize,
    chosen: &mut Vec<&'a Node>,
    emit: &mut dyn FnMut(&[&'a Node]),
) {
    if at == options.len() {
        if edges == target {
            emit(chosen);
        }
        return;
    }
    for (node, count) in &options[at] {
        if edges + count > target {
            continue;
        }
        chosen.push(node);
        product(options, at + 1, edges + count, target, chosen, emit);
        chosen.pop();
    }
}

/// All planar trees whose leaves are exactly `labels`, with their edge counts.
fn trees_on<'m>(labels: &[Label], memo: &'m mut HashMap<Vec<Label>, Vec<(Node, usize)>>) -> &'m Vec<(Node, usize)> {
    if !memo.contains_key(labels) {
        let trees = if labels.len() == 1 {
            vec![(Node::Leaf(labels[0]), 0)]
        } else {
            let mut trees = Vec::new();
            for blocks in set_partitions(labels) {
                if blocks.len() < 2 {
                    continue;
                }
                let per_block: Vec<Vec<(Node, usize)>> = blocks.iter().map(|b| trees_on(b, memo).clone()).collect();
                for perm in permutations(blocks.len()) {
                    let ordered: Vec<Vec<(Node, usize)>> = perm.iter().map(|&i| per_block[i].clone()).collect();
                    children_product(&ordered, 0, &mut Vec::new(), 0, &mut |children, count| {
                        trees.push((Node::internal(EdgeId(0), children.to_vec()), count + 1));
                    });
                }
            }
            trees
        };
        memo.insert(labels.to_vec(), trees);
    }
    &memo[labels]
}

fn children_product(
    options: &[Vec<(Node, usize)>],
    at: usize,
    chosen: &mut Vec<Node>,
    count: usize,
    emit: &mut dyn FnMut(&[Node], usize),
) {
    if at == options.len() {
        emit(chosen, count);
        return;
    }
    for (node, c) in &options[at] {
        chosen.push(node.clone());
        children_product(options, at + 1, chosen, count + c, emit);
        chosen.pop();
    }
}

/// Set partitions of `items`, blocks in order of first element.
fn set_partitions(items: &[Label]) -> Vec<Vec<Vec<Label>>> {
    let mut out = Vec::new();
    fn go(items: &[Label], at: usize, blocks: &mut Vec<Vec<Label>>, out: &mut Vec<Vec<Vec<Label>>>) {
        if at == items.len() {
            out.push(blocks.clone());
            return;
        }
        for b in 0..blocks.len() {
            blocks[b].push(items[at]);
            go(items, at + 1, blocks, out);
            blocks[b].pop();
        }
        blocks.push(vec![items[at]]);
        go(items, at + 1, blocks, out);
        blocks.pop();
    }
    go(items, 0, &mut Vec::new(), &mut out);
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}
