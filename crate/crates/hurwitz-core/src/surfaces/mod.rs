//! Embedded graphs: half-edge multigraphs, rotation systems and face
//! tracing, embeddings read off edge numberings, skeletons and long
//! graphs, decorations, and the decoration-weight identity for one-faced
//! embedding counts.

mod enumerate;

pub use enumerate::{connected_multigraph_classes, face_count_distribution, for_each_rotation};

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde_json::{json, Value};

use crate::perm::Permutation;
use crate::rat::{format_rat, rat_int, Rat};
use crate::{Error, Result};

/// A multigraph on vertices `1..=v`, loops allowed. Edge `k` owns the half
/// edges `2k` (at the first endpoint) and `2k+1` (at the second); the twin
/// involution is `h ^ 1`, so parallel edges and loops stay unambiguous.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiGraph {
    v: usize,
    edges: Vec<(usize, usize)>,
}

impl MultiGraph {
    pub fn new(v: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        for &(a, b) in &edges {
            for &x in &[a, b] {
                if x < 1 || x > v {
                    return Err(Error::VertexRange(x, v));
                }
            }
        }
        Ok(MultiGraph { v, edges })
    }

    /// Parse the shared edge-list format, e.g. `"1-2;1-2;2-3"`; loops are
    /// written `"1-1"`. The vertex count is the largest endpoint.
    pub fn parse(s: &str) -> Result<Self> {
        let mut edges = Vec::new();
        let mut v = 0;
        for piece in s.trim().split(';') {
            let piece = piece.trim();
            if piece.is_empty() {
                continue;
            }
            let (a, b) = piece
                .split_once('-')
                .ok_or_else(|| Error::Parse(format!("bad edge {piece:?}")))?;
            let a: usize = a
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad endpoint in {piece:?}")))?;
            let b: usize = b
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad endpoint in {piece:?}")))?;
            if a == 0 || b == 0 {
                return Err(Error::VertexRange(0, v));
            }
            v = v.max(a).max(b);
            edges.push((a, b));
        }
        if edges.is_empty() {
            return Err(Error::Parse("empty graph".into()));
        }
        MultiGraph::new(v, edges)
    }

    pub fn edges_string(&self) -> String {
        self.edges
            .iter()
            .map(|&(a, b)| format!("{}-{}", a.min(b), a.max(b)))
            .collect::<Vec<_>>()
            .join(";")
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn half_edge_count(&self) -> usize {
        2 * self.edges.len()
    }

    /// Vertex carrying half-edge `h`.
    pub fn at(&self, h: usize) -> usize {
        let (a, b) = self.edges[h / 2];
        if h % 2 == 0 {
            a
        } else {
            b
        }
    }

    /// The other half of the edge of `h`.
    pub fn twin(&self, h: usize) -> usize {
        h ^ 1
    }

    pub fn edge_of(&self, h: usize) -> usize {
        h / 2
    }

    pub fn is_loop(&self, edge: usize) -> bool {
        self.edges[edge].0 == self.edges[edge].1
    }

    pub fn has_loops(&self) -> bool {
        (0..self.edges.len()).any(|e| self.is_loop(e))
    }

    /// Half-edges at a vertex, ascending; loops contribute both halves.
    pub fn vertex_half_edges(&self, vertex: usize) -> Vec<usize> {
        (0..self.half_edge_count())
            .filter(|&h| self.at(h) == vertex)
            .collect()
    }

    /// Valency; a loop counts twice.
    pub fn degree(&self, vertex: usize) -> usize {
        self.vertex_half_edges(vertex).len()
    }

    pub fn is_connected(&self) -> bool {
        if self.v == 0 {
            return false;
        }
        let mut seen = vec![false; self.v];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for &(a, b) in &self.edges {
                let (a, b) = (a - 1, b - 1);
                if a == u && !seen[b] {
                    seen[b] = true;
                    stack.push(b);
                }
                if b == u && !seen[a] {
                    seen[a] = true;
                    stack.push(a);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    fn component_count(&self) -> usize {
        let mut comp = vec![usize::MAX; self.v];
        let mut n = 0;
        for start in 0..self.v {
            if comp[start] != usize::MAX {
                continue;
            }
            comp[start] = n;
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for &(a, b) in &self.edges {
                    let (a, b) = (a - 1, b - 1);
                    if a == u && comp[b] == usize::MAX {
                        comp[b] = n;
                        stack.push(b);
                    }
                    if b == u && comp[a] == usize::MAX {
                        comp[a] = n;
                        stack.push(a);
                    }
                }
            }
            n += 1;
        }
        n
    }

    /// First Betti number `E - V + #components`.
    pub fn beta1(&self) -> usize {
        self.edge_count() + self.component_count() - self.v
    }

    /// Total number of rotation systems: the product of `(deg - 1)!`.
    pub fn emb_count(&self) -> u128 {
        let mut acc: u128 = 1;
        for vertex in 1..=self.v {
            let d = self.degree(vertex);
            for k in 2..d {
                acc = acc.saturating_mul(k as u128);
            }
        }
        acc
    }
}

impl fmt::Display for MultiGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.edges_string())
    }
}

/// A rotation system: the cyclic successor of each half-edge within the
/// half-edge star of its vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationSystem {
    next: Vec<usize>,
}

impl RotationSystem {
    /// Build from an explicit cyclic order at every vertex. Each listed
    /// order must cover the vertex's half-edges exactly.
    pub fn from_orders(g: &MultiGraph, orders: &[Vec<usize>]) -> Result<Self> {
        if orders.len() != g.v() {
            return Err(Error::BadNumbering);
        }
        let mut next = vec![usize::MAX; g.half_edge_count()];
        for (k, order) in orders.iter().enumerate() {
            let vertex = k + 1;
            let mut expected = g.vertex_half_edges(vertex);
            let mut given = order.clone();
            expected.sort_unstable();
            given.sort_unstable();
            if expected != given {
                return Err(Error::BadNumbering);
            }
            for (pos, &h) in order.iter().enumerate() {
                next[h] = order[(pos + 1) % order.len()];
            }
        }
        Ok(RotationSystem { next })
    }

    pub fn next(&self, h: usize) -> usize {
        self.next[h]
    }
}

/// Faces of an embedded graph, each a cyclic list of half-edges, plus the
/// genus read off Euler's formula.
#[derive(Debug, Clone)]
pub struct Faces {
    pub faces: Vec<Vec<usize>>,
    pub genus: usize,
}

/// Trace the faces of `(g, rot)`: from half-edge `h` the walk steps to
/// `next(twin(h))`. The graph must be connected.
pub fn faces(g: &MultiGraph, rot: &RotationSystem) -> Result<Faces> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let hn = g.half_edge_count();
    let mut seen = vec![false; hn];
    let mut out = Vec::new();
    for start in 0..hn {
        if seen[start] {
            continue;
        }
        let mut face = Vec::new();
        let mut h = start;
        while !seen[h] {
            seen[h] = true;
            face.push(h);
            h = rot.next(g.twin(h));
        }
        out.push(face);
    }
    let f = out.len();
    let euler = g.v() as i64 - g.edge_count() as i64 + f as i64;
    debug_assert!(euler <= 2 && (2 - euler) % 2 == 0, "bad Euler characteristic");
    Ok(Faces {
        faces: out,
        genus: ((2 - euler) / 2) as usize,
    })
}

/// Count rotation systems with exactly one face, by exhaustive
/// enumeration.
pub fn one_faced_count(g: &MultiGraph, budget: u128) -> Result<u64> {
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
    let mut count = 0u64;
    for_each_rotation(g, |rot| {
        let f = faces(g, rot).expect("connected by precheck");
        if f.faces.len() == 1 {
            count += 1;
        }
    });
    Ok(count)
}

/// The rotation system induced by an edge numbering: at every vertex the
/// cyclic order of half-edges is the increasing order of their edge
/// numbers. `numbering[e]` is the number (1-based) of edge `e`; the graph
/// must be loopless, otherwise two half-edges at one vertex would share a
/// number.
pub fn embedding_of_numbering(g: &MultiGraph, numbering: &[usize]) -> Result<RotationSystem> {
    if g.has_loops() {
        return Err(Error::LoopsNotAllowed);
    }
    check_numbering(g, numbering)?;
    let mut orders = Vec::with_capacity(g.v());
    for vertex in 1..=g.v() {
        let mut star = g.vertex_half_edges(vertex);
        star.sort_by_key(|&h| numbering[g.edge_of(h)]);
        orders.push(star);
    }
    RotationSystem::from_orders(g, &orders)
}

fn check_numbering(g: &MultiGraph, numbering: &[usize]) -> Result<()> {
    let e = g.edge_count();
    if numbering.len() != e {
        return Err(Error::BadNumbering);
    }
    let mut seen = vec![false; e];
    for &x in numbering {
        if x < 1 || x > e || seen[x - 1] {
            return Err(Error::BadNumbering);
        }
        seen[x - 1] = true;
    }
    Ok(())
}

/// The permutation product of the edge transpositions taken in numbering
/// order (edge numbered 1 applied first). Vertices double as points.
pub fn numbering_product(g: &MultiGraph, numbering: &[usize]) -> Result<Permutation> {
    if g.has_loops() {
        return Err(Error::LoopsNotAllowed);
    }
    check_numbering(g, numbering)?;
    let mut by_number: Vec<usize> = (0..g.edge_count()).collect();
    by_number.sort_by_key(|&e| numbering[e]);
    let mut acc = Permutation::identity(g.v());
    for &e in &by_number {
        let (a, b) = g.edges()[e];
        let t = Permutation::transposition(g.v(), a, b)?;
        acc = t.compose(&acc)?;
    }
    Ok(acc)
}

/// Successful outcome of the faces/cycles correspondence check.
#[derive(Debug, Clone)]
pub struct FaceCycleCheck {
    pub faces: usize,
    pub cycles: usize,
}

/// Verify, for one numbering, that the cycles of the transposition
/// product match the faces of the induced embedding.
///
/// Walking a face, a corner sits between an arriving and a departing
/// edge; the corner's vertex is marked when the arriving edge has a
/// larger number than the departing one, or when the vertex has valency
/// one. The checks: every vertex is marked exactly once, faces and cycles
/// are equinumerous, and each face's marked vertices, read in face order,
/// form exactly one cycle of the product.
pub fn faces_vs_cycles(g: &MultiGraph, numbering: &[usize]) -> Result<FaceCycleCheck> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let rot = embedding_of_numbering(g, numbering)?;
    let traced = faces(g, &rot)?;
    let sigma = numbering_product(g, numbering)?;

    let mut marked_count = vec![0usize; g.v()];
    let mut face_sequences: Vec<Vec<usize>> = Vec::new();
    for face in &traced.faces {
        let len = face.len();
        let mut seq = Vec::new();
        for k in 0..len {
            let arriving = face[k];
            let departing = face[(k + 1) % len];
            let vertex = g.at(departing);
            debug_assert_eq!(vertex, g.at(g.twin(arriving)));
            let num_in = numbering[g.edge_of(arriving)];
            let num_out = numbering[g.edge_of(departing)];
            if num_in > num_out || g.degree(vertex) == 1 {
                marked_count[vertex - 1] += 1;
                seq.push(vertex);
            }
        }
        face_sequences.push(seq);
    }

    for (k, &c) in marked_count.iter().enumerate() {
        if c != 1 {
            return Err(Error::FacesCyclesMismatch(format!(
                "vertex {} marked {} times (graph {}, numbering {:?})",
                k + 1,
                c,
                g,
                numbering
            )));
        }
    }

    let cycles = sigma.cycles();
    if cycles.len() != traced.faces.len() {
        return Err(Error::FacesCyclesMismatch(format!(
            "{} faces vs {} cycles (graph {}, numbering {:?})",
            traced.faces.len(),
            cycles.len(),
            g,
            numbering
        )));
    }

    // Compare cyclic sequences by rotating the smallest element first.
    fn canonical_rotation(seq: &[usize]) -> Vec<usize> {
        let lead = seq
            .iter()
            .enumerate()
            .min_by_key(|&(_, v)| v)
            .map(|(k, _)| k)
            .unwrap();
        (0..seq.len()).map(|k| seq[(lead + k) % seq.len()]).collect()
    }
    let mut cycle_keys: Vec<Vec<usize>> = cycles.iter().map(|c| canonical_rotation(c)).collect();
    cycle_keys.sort();
    let mut face_keys: Vec<Vec<usize>> = face_sequences
        .iter()
        .map(|s| {
            if s.is_empty() {
                Vec::new()
            } else {
                canonical_rotation(s)
            }
        })
        .collect();
    face_keys.sort();
    if cycle_keys != face_keys {
        return Err(Error::FacesCyclesMismatch(format!(
            "marked faces {:?} vs cycles {:?} (graph {}, numbering {:?})",
            face_keys, cycle_keys, g, numbering
        )));
    }
    Ok(FaceCycleCheck {
        faces: traced.faces.len(),
        cycles: cycles.len(),
    })
}

/// Count numberings whose induced embedding has exactly one face.
pub fn one_faced_numbering_count(g: &MultiGraph, budget: u128) -> Result<u64> {
    if g.has_loops() {
        return Err(Error::LoopsNotAllowed);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let e = g.edge_count();
    let mut total: u128 = 1;
    for k in 2..=e as u128 {
        total = total.saturating_mul(k);
    }
    if total > budget {
        return Err(Error::BudgetExceeded {
            needed: total,
            budget,
        });
    }
    let mut numbering: Vec<usize> = (1..=e).collect();
    let mut count = 0u64;
    // Heap's algorithm over the numbering vector.
    let mut c = vec![0usize; e];
    let mut check = |numbering: &[usize]| {
        let rot = embedding_of_numbering(g, numbering).expect("loopless by precheck");
        if faces(g, &rot).expect("connected by precheck").faces.len() == 1 {
            count += 1;
        }
    };
    check(&numbering);
    let mut i = 1;
    while i < e {
        if c[i] < i {
            if i % 2 == 0 {
                numbering.swap(0, i);
            } else {
                numbering.swap(c[i], i);
            }
            check(&numbering);
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(count)
}

/// The skeleton: iteratively cut valency-1 vertices. Returns the skeleton
/// as a reindexed graph together with the original ids of its vertices.
pub fn skeleton(g: &MultiGraph) -> Result<(MultiGraph, Vec<usize>)> {
    let (alive, edges) = skeleton_parts(g)?;
    let kept: Vec<usize> = (1..=g.v()).filter(|&u| alive[u - 1]).collect();
    let index: BTreeMap<usize, usize> = kept.iter().enumerate().map(|(k, &u)| (u, k + 1)).collect();
    let new_edges: Vec<(usize, usize)> = edges.iter().map(|&(a, b)| (index[&a], index[&b])).collect();
    Ok((MultiGraph::new(kept.len(), new_edges)?, kept))
}

fn skeleton_parts(g: &MultiGraph) -> Result<(Vec<bool>, Vec<(usize, usize)>)> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.beta1() < 2 {
        return Err(Error::BettiTooSmall(g.beta1()));
    }
    let mut alive_edge = vec![true; g.edge_count()];
    let mut alive = vec![true; g.v()];
    loop {
        let degree = |u: usize, alive_edge: &[bool]| -> usize {
            g.edges()
                .iter()
                .enumerate()
                .filter(|&(e, _)| alive_edge[e])
                .map(|(_, &(a, b))| (a == u) as usize + (b == u) as usize)
                .sum()
        };
        let leaf = (1..=g.v()).find(|&u| alive[u - 1] && degree(u, &alive_edge) == 1);
        match leaf {
            None => break,
            Some(u) => {
                alive[u - 1] = false;
                let e = g
                    .edges()
                    .iter()
                    .enumerate()
                    .filter(|&(e, _)| alive_edge[e])
                    .find(|&(_, &(a, b))| a == u || b == u)
                    .map(|(e, _)| e)
                    .expect("leaf has an incident edge");
                alive_edge[e] = false;
            }
        }
    }
    let edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .enumerate()
        .filter(|&(e, _)| alive_edge[e])
        .map(|(_, &p)| p)
        .collect();
    Ok((alive, edges))
}

/// Original ids of the vertices with skeleton valency at least 3.
pub fn essential_vertices(g: &MultiGraph) -> Result<Vec<usize>> {
    let (alive, edges) = skeleton_parts(g)?;
    Ok((1..=g.v())
        .filter(|&u| {
            alive[u - 1]
                && edges
                    .iter()
                    .map(|&(a, b)| (a == u) as usize + (b == u) as usize)
                    .sum::<usize>()
                    >= 3
        })
        .collect())
}

/// A long graph is loopless with at least two independent cycles and no
/// edge joining two essential vertices.
pub fn is_long(g: &MultiGraph) -> Result<bool> {
    let essential = essential_vertices(g)?;
    if g.has_loops() {
        return Ok(false);
    }
    let is_essential = |u: usize| essential.contains(&u);
    Ok(!g
        .edges()
        .iter()
        .any(|&(a, b)| is_essential(a) && is_essential(b)))
}

/// Minimal subdivision making the graph long: loops get two interior
/// vertices, edges joining two essential vertices get one. Original
/// vertex ids are preserved; the returned map sends old ids to new ids
/// (here the identity, returned for interface stability).
pub fn subdivide_to_long(g: &MultiGraph) -> Result<(MultiGraph, Vec<usize>)> {
    let essential = essential_vertices(g)?;
    let is_essential = |u: usize| essential.contains(&u);
    let mut next_vertex = g.v();
    let mut edges = Vec::new();
    for &(a, b) in g.edges() {
        if a == b {
            let x = next_vertex + 1;
            let y = next_vertex + 2;
            next_vertex += 2;
            edges.push((a, x));
            edges.push((x, y));
            edges.push((y, a));
        } else if is_essential(a) && is_essential(b) {
            let x = next_vertex + 1;
            next_vertex += 1;
            edges.push((a, x));
            edges.push((x, b));
        } else {
            edges.push((a, b));
        }
    }
    let out = MultiGraph::new(next_vertex, edges)?;
    debug_assert!(is_long(&out)?);
    Ok((out, (1..=g.v()).collect()))
}

/// A decoration: an even-sized set of half-edges chosen at some vertices,
/// `2g` half-edges in total, such that deleting every edge touched by a
/// chosen half-edge leaves a spanning tree.
#[derive(Debug, Clone)]
pub struct Decoration {
    pub chosen: BTreeMap<usize, Vec<usize>>,
    pub weight: Rat,
}

/// Enumerate all decorations. Requires a connected graph with even
/// first Betti number at least 2.
pub fn decorations(g: &MultiGraph) -> Result<Vec<Decoration>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let beta = g.beta1();
    if beta < 2 {
        return Err(Error::BettiTooSmall(beta));
    }
    if beta % 2 != 0 {
        return Err(Error::OddBetti(beta));
    }
    let two_g = beta;
    let stars: Vec<Vec<usize>> = (1..=g.v()).map(|u| g.vertex_half_edges(u)).collect();
    let mut chosen: Vec<Vec<usize>> = vec![Vec::new(); g.v()];
    let mut out = Vec::new();

    fn even_subsets(star: &[usize]) -> Vec<Vec<usize>> {
        let mut subsets = Vec::new();
        for mask in 0u32..(1 << star.len()) {
            if mask.count_ones() % 2 == 0 {
                subsets.push(
                    star.iter()
                        .enumerate()
                        .filter(|&(k, _)| mask & (1 << k) != 0)
                        .map(|(_, &h)| h)
                        .collect(),
                );
            }
        }
        subsets
    }

    fn rec(
        g: &MultiGraph,
        stars: &[Vec<usize>],
        vertex: usize,
        remaining: usize,
        chosen: &mut Vec<Vec<usize>>,
        out: &mut Vec<Decoration>,
    ) {
        if vertex == stars.len() {
            if remaining == 0 {
                if let Some(dec) = finish(g, chosen) {
                    out.push(dec);
                }
            }
            return;
        }
        for subset in even_subsets(&stars[vertex]) {
            if subset.len() > remaining {
                continue;
            }
            let take = subset.len();
            chosen[vertex] = subset;
            rec(g, stars, vertex + 1, remaining - take, chosen, out);
            chosen[vertex] = Vec::new();
        }
    }

    fn finish(g: &MultiGraph, chosen: &[Vec<usize>]) -> Option<Decoration> {
        // Erase every edge touched by a chosen half-edge; the rest must be
        // a spanning tree.
        let mut keep = vec![true; g.edge_count()];
        for star in chosen {
            for &h in star {
                keep[g.edge_of(h)] = false;
            }
        }
        let kept: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .enumerate()
            .filter(|&(e, _)| keep[e])
            .map(|(_, &p)| p)
            .collect();
        if kept.len() + 1 != g.v() {
            return None;
        }
        let rest = MultiGraph::new(g.v(), kept).ok()?;
        if !rest.is_connected() {
            return None;
        }
        let two_g: usize = chosen.iter().map(Vec::len).sum();
        let mut weight = rat_int(2).pow(two_g as i32).recip();
        let mut map = BTreeMap::new();
        for (k, star) in chosen.iter().enumerate() {
            if !star.is_empty() {
                weight *= rat_int(star.len() as i64 + 1).recip();
                map.insert(k + 1, star.clone());
            }
        }
        Some(Decoration {
            chosen: map,
            weight,
        })
    }

    rec(g, &stars, 0, two_g, &mut chosen, &mut out);
    Ok(out)
}

/// Sum of the weights of all decorations.
pub fn decoration_sum(g: &MultiGraph) -> Result<Rat> {
    Ok(decorations(g)?
        .into_iter()
        .fold(Rat::zero(), |acc, d| acc + d.weight))
}

/// Outcome of the decoration-weight identity check.
#[derive(Debug, Clone)]
pub struct SpidersReport {
    pub emb: u128,
    pub one_faced: u64,
    pub decoration_sum: Rat,
    pub check: bool,
}

impl SpidersReport {
    pub fn to_json(&self) -> Value {
        json!({
            "emb": self.emb.to_string(),
            "one_faced": self.one_faced,
            "decoration_sum": format_rat(&self.decoration_sum),
            "check": self.check,
        })
    }
}

/// Check that the decoration weights sum to the one-faced fraction:
/// `decoration_sum * emb_count = one_faced_count`, exactly.
///
/// ```
/// use hurwitz_core::surfaces::{verify_spiders, MultiGraph};
///
/// // Two of the triple edge's four embeddings have one face, and its six
/// // decorations weigh 1/12 each.
/// let theta = MultiGraph::parse("1-2;1-2;1-2")?;
/// let report = verify_spiders(&theta, 1 << 20)?;
/// assert!(report.check);
/// assert_eq!((report.emb, report.one_faced), (4, 2));
/// # Ok::<(), hurwitz_core::Error>(())
/// ```
pub fn verify_spiders(g: &MultiGraph, budget: u128) -> Result<SpidersReport> {
    let emb = g.emb_count();
    let one_faced = one_faced_count(g, budget)?;
    let sum = decoration_sum(g)?;
    let lhs = sum.clone() * Rat::from_integer(emb.into());
    let check = lhs == rat_int(one_faced as i64);
    Ok(SpidersReport {
        emb,
        one_faced,
        decoration_sum: sum,
        check,
    })
}
