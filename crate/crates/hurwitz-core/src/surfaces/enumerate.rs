//! Exhaustive enumeration: all rotation systems of a graph, and all
//! connected multigraphs with a bounded edge count up to isomorphism.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BTreeSet};

use super::{faces, MultiGraph, RotationSystem};
use crate::{Error, Result};

/// Visit every rotation system of `g` exactly once. At each vertex one
/// anchor half-edge is fixed and the remaining `deg - 1` are permuted, so
/// `prod (deg - 1)!` systems are produced with no cyclic double counting.
pub fn for_each_rotation(g: &MultiGraph, mut f: impl FnMut(&RotationSystem)) {
    fn rec(
        g: &MultiGraph,
        stars: &[Vec<usize>],
        vertex: usize,
        orders: &mut Vec<Vec<usize>>,
        f: &mut impl FnMut(&RotationSystem),
    ) {
        if vertex == stars.len() {
            let rot = RotationSystem::from_orders(g, orders).expect("orders cover each star");
            f(&rot);
            return;
        }
        let star = &stars[vertex];
        if star.len() <= 1 {
            orders[vertex] = star.clone();
            rec(g, stars, vertex + 1, orders, f);
            return;
        }
        // Fix star[0] as the anchor; permute the tail (Heap's algorithm).
        let mut tail: Vec<usize> = star[1..].to_vec();
        let k = tail.len();
        let mut c = vec![0usize; k];
        let set_order = |tail: &[usize], orders: &mut Vec<Vec<usize>>| {
            let mut order = Vec::with_capacity(star.len());
            order.push(star[0]);
            order.extend_from_slice(tail);
            orders[vertex] = order;
        };
        set_order(&tail, orders);
        rec(g, stars, vertex + 1, orders, f);
        let mut i = 1;
        while i < k {
            if c[i] < i {
                if i % 2 == 0 {
                    tail.swap(0, i);
                } else {
                    tail.swap(c[i], i);
                }
                set_order(&tail, orders);
                rec(g, stars, vertex + 1, orders, f);
                c[i] += 1;
                i = 1;
            } else {
                c[i] = 0;
                i += 1;
            }
        }
    }

    let stars: Vec<Vec<usize>> = (1..=g.v()).map(|u| g.vertex_half_edges(u)).collect();
    let mut orders: Vec<Vec<usize>> = stars.clone();
    rec(g, &stars, 0, &mut orders, &mut f);
}

/// Face-count histogram over all rotation systems.
pub fn face_count_distribution(g: &MultiGraph, budget: u128) -> Result<BTreeMap<usize, u64>> {
    let total = g.emb_count();
    if total > budget {
        return Err(Error::BudgetExceeded {
            needed: total,
            budget,
        });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut hist = BTreeMap::new();
    for_each_rotation(g, |rot| {
        let f = faces(g, rot).expect("connected by precheck");
        *hist.entry(f.faces.len()).or_insert(0u64) += 1;
    });
    Ok(hist)
}

/// Canonical key for isomorphism testing: the minimal relabeled edge list
/// over assignments of vertices to positions that sort degrees in
/// descending order. Isomorphisms preserve degrees, so isomorphic graphs
/// share the key, and the key relabels the graph itself, so distinct
/// graphs never collide.
fn canonical_key(g: &MultiGraph) -> Vec<(usize, usize)> {
    fn assign(
        g: &MultiGraph,
        groups: &[Vec<usize>],
        offsets: &[usize],
        gi: usize,
        slot: usize,
        position: &mut Vec<usize>,
        best: &mut Option<Vec<(usize, usize)>>,
    ) {
        if gi == groups.len() {
            let mut edges: Vec<(usize, usize)> = g
                .edges()
                .iter()
                .map(|&(a, b)| {
                    let (x, y) = (position[a - 1] + 1, position[b - 1] + 1);
                    (x.min(y), x.max(y))
                })
                .collect();
            edges.sort_unstable();
            match best {
                Some(b) if *b <= edges => {}
                _ => *best = Some(edges),
            }
            return;
        }
        if slot == groups[gi].len() {
            assign(g, groups, offsets, gi + 1, 0, position, best);
            return;
        }
        for &u in &groups[gi] {
            if position[u] == usize::MAX {
                position[u] = offsets[gi] + slot;
                assign(g, groups, offsets, gi, slot + 1, position, best);
                position[u] = usize::MAX;
            }
        }
    }

    let v = g.v();
    let mut by_degree: BTreeMap<Reverse<usize>, Vec<usize>> = BTreeMap::new();
    for u in 0..v {
        by_degree.entry(Reverse(g.degree(u + 1))).or_default().push(u);
    }
    let groups: Vec<Vec<usize>> = by_degree.into_values().collect();
    let mut offsets = Vec::with_capacity(groups.len());
    let mut acc = 0;
    for gr in &groups {
        offsets.push(acc);
        acc += gr.len();
    }
    let mut position = vec![usize::MAX; v];
    let mut best = None;
    assign(g, &groups, &offsets, 0, 0, &mut position, &mut best);
    best.expect("every graph has an assignment")
}

/// Advance a nondecreasing index sequence over `0..bound`; false once
/// exhausted.
fn next_multiset(choice: &mut [usize], bound: usize) -> bool {
    for k in (0..choice.len()).rev() {
        if choice[k] + 1 < bound {
            let next = choice[k] + 1;
            for slot in choice.iter_mut().skip(k) {
                *slot = next;
            }
            return true;
        }
    }
    false
}

/// One representative per isomorphism class of connected multigraphs with
/// `1..=max_edges` edges. `allow_loops` admits loops; `beta1_filter`
/// restricts the first Betti number when given.
pub fn connected_multigraph_classes(
    max_edges: usize,
    allow_loops: bool,
    beta1_filter: Option<&[usize]>,
) -> Vec<MultiGraph> {
    let mut seen: BTreeSet<(usize, Vec<(usize, usize)>)> = BTreeSet::new();
    let mut out = Vec::new();
    for e in 1..=max_edges {
        let min_v = if allow_loops { 1 } else { 2 };
        for v in min_v..=e + 1 {
            if let Some(betas) = beta1_filter {
                // Connected, so beta1 = e - v + 1.
                if !betas.contains(&(e + 1 - v)) {
                    continue;
                }
            }
            let mut pairs = Vec::new();
            for a in 1..=v {
                for b in a..=v {
                    if a != b || allow_loops {
                        pairs.push((a, b));
                    }
                }
            }
            if pairs.is_empty() {
                continue;
            }
            let mut choice = vec![0usize; e];
            loop {
                let edges: Vec<(usize, usize)> = choice.iter().map(|&k| pairs[k]).collect();
                let g = MultiGraph::new(v, edges).expect("generated edges in range");
                if g.is_connected() {
                    let key = (v, canonical_key(&g));
                    if seen.insert(key.clone()) {
                        out.push(MultiGraph::new(v, key.1).expect("canonical edges in range"));
                    }
                }
                if !next_multiset(&mut choice, pairs.len()) {
                    break;
                }
            }
        }
    }
    out
}
