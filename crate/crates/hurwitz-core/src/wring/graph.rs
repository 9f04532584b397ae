//! Unlabeled loopless multigraph classes and their polynomial expansions.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde_json::{json, Value};

use super::poly::{Monomial, WPolynomial};
use crate::rat::{format_rat, parse_rat, Rat};
use crate::{Error, Result};

/// An unlabeled loopless multigraph on vertices `1..=v`, every vertex
/// covered by at least one edge. The stored edge multiset is the
/// lexicographic minimum over all vertex relabelings, so structural
/// equality is graph isomorphism.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GraphClass {
    v: usize,
    edges: Vec<(usize, usize)>,
}

/// Lexicographically minimal relabeling of an edge multiset under all
/// permutations of `1..=v`. Exhaustive; the graphs in scope are small.
fn minimize_edges(v: usize, edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
    assert!(v <= 10, "canonical search is factorial in v; got v = {v}");
    let mut perm: Vec<usize> = (0..v).collect();
    let mut best: Option<Vec<(usize, usize)>> = None;
    // Heap's algorithm over relabelings perm[old - 1] + 1 = new.
    fn visit(perm: &[usize], edges: &[(usize, usize)], best: &mut Option<Vec<(usize, usize)>>) {
        let mut relabeled: Vec<(usize, usize)> = edges
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (perm[a - 1] + 1, perm[b - 1] + 1);
                (x.min(y), x.max(y))
            })
            .collect();
        relabeled.sort_unstable();
        match best {
            Some(b) if *b <= relabeled => {}
            _ => *best = Some(relabeled),
        }
    }
    let mut c = vec![0usize; v];
    visit(&perm, edges, &mut best);
    let mut i = 1;
    while i < v {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            visit(&perm, edges, &mut best);
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    best.unwrap_or_default()
}

impl GraphClass {
    /// Canonicalize a labeled loopless multigraph on vertices `1..=v`.
    pub fn new(v: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut covered = vec![false; v];
        let mut norm = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            if a == b {
                return Err(Error::LoopPresent(a));
            }
            for &x in &[a, b] {
                if x < 1 || x > v {
                    return Err(Error::VertexRange(x, v));
                }
                covered[x - 1] = true;
            }
            norm.push((a.min(b), a.max(b)));
        }
        if let Some(k) = covered.iter().position(|&c| !c) {
            return Err(Error::IsolatedVertex(k + 1));
        }
        Ok(GraphClass {
            v,
            edges: minimize_edges(v, &norm),
        })
    }

    /// The class of the support graph of a monomial; exponents become
    /// edge multiplicities.
    pub fn from_monomial(m: &Monomial) -> Result<Self> {
        let vs = m.vertices();
        let mut index = BTreeMap::new();
        for (k, &u) in vs.iter().enumerate() {
            index.insert(u, k + 1);
        }
        let edges: Vec<(usize, usize)> = m
            .edge_instances()
            .iter()
            .map(|e| (index[&e.i()], index[&e.j()]))
            .collect();
        GraphClass::new(vs.len(), edges)
    }

    /// A single edge on two vertices.
    pub fn single_edge() -> Self {
        GraphClass::new(2, vec![(1, 2)]).unwrap()
    }

    /// Two vertices joined by `m` parallel edges.
    pub fn banana(m: usize) -> Self {
        GraphClass::new(2, vec![(1, 2); m]).unwrap()
    }

    /// The k-spider: a star with k legs.
    pub fn spider(k: usize) -> Self {
        GraphClass::new(k + 1, (2..=k + 1).map(|l| (1, l)).collect()).unwrap()
    }

    /// The path with `k` edges.
    pub fn path(k: usize) -> Self {
        GraphClass::new(k + 1, (1..=k).map(|a| (a, a + 1)).collect()).unwrap()
    }

    pub fn v(&self) -> usize {
        self.v
    }

    /// Edge instances, canonical order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Number of edges counted with multiplicity.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Distinct edges with multiplicities.
    pub fn edge_multiplicities(&self) -> Vec<((usize, usize), u32)> {
        let mut out: Vec<((usize, usize), u32)> = Vec::new();
        for &e in &self.edges {
            match out.last_mut() {
                Some((last, m)) if *last == e => *m += 1,
                _ => out.push((e, 1)),
            }
        }
        out
    }

    pub fn degree(&self, vertex: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == vertex || b == vertex)
            .count()
    }

    /// The monomial with the canonical labeling, exponent = multiplicity.
    pub fn canonical_monomial(&self) -> Monomial {
        Monomial::from_pairs(&self.edges).expect("class edges are loopless")
    }

    /// Number of vertex permutations fixing the edge multiset.
    pub fn vertex_aut_count(&self) -> u64 {
        let mut count = 0u64;
        let mut perm: Vec<usize> = (0..self.v).collect();
        let mut c = vec![0usize; self.v];
        let mut check = |perm: &[usize]| {
            let mut relabeled: Vec<(usize, usize)> = self
                .edges
                .iter()
                .map(|&(a, b)| {
                    let (x, y) = (perm[a - 1] + 1, perm[b - 1] + 1);
                    (x.min(y), x.max(y))
                })
                .collect();
            relabeled.sort_unstable();
            if relabeled == self.edges {
                count += 1;
            }
        };
        check(&perm);
        let mut i = 1;
        while i < self.v {
            if c[i] < i {
                if i % 2 == 0 {
                    perm.swap(0, i);
                } else {
                    perm.swap(c[i], i);
                }
                check(&perm);
                c[i] += 1;
                i = 1;
            } else {
                c[i] = 0;
                i += 1;
            }
        }
        count
    }

    /// Half-edge automorphism count: vertex automorphisms times the
    /// factorial of each edge multiplicity.
    pub fn aut_count(&self) -> u64 {
        let mut acc = self.vertex_aut_count();
        for (_, m) in self.edge_multiplicities() {
            for k in 2..=m as u64 {
                acc *= k;
            }
        }
        acc
    }

    /// The symmetric polynomial of the class in ambient size `n`: sum the
    /// edge monomial over all injective vertex labelings into `{1..n}`,
    /// divided by the automorphism count. Zero when the class has more
    /// than `n` vertices.
    pub fn expand(&self, n: usize) -> WPolynomial {
        let mut out = WPolynomial::zero(n);
        if self.v > n {
            return out;
        }
        let aut = Rat::from_integer(self.aut_count().into());
        let mut label = vec![0usize; self.v];
        let mut used = vec![false; n];
        fn rec(
            g: &GraphClass,
            n: usize,
            k: usize,
            label: &mut Vec<usize>,
            used: &mut Vec<bool>,
            out: &mut WPolynomial,
        ) {
            if k == g.v {
                let mono = Monomial::from_pairs(
                    &g.edges
                        .iter()
                        .map(|&(a, b)| (label[a - 1], label[b - 1]))
                        .collect::<Vec<_>>(),
                )
                .expect("relabeled class edges are loopless");
                out.add_term(mono, Rat::from_integer(1.into()));
                return;
            }
            for cand in 1..=n {
                if !used[cand - 1] {
                    used[cand - 1] = true;
                    label[k] = cand;
                    rec(g, n, k + 1, label, used, out);
                    used[cand - 1] = false;
                }
            }
        }
        rec(self, n, 0, &mut label, &mut used, &mut out);
        out.scale(&aut.recip())
    }

    /// Connected components as classes in their own right, in canonical
    /// order.
    pub fn components(&self) -> Vec<GraphClass> {
        let mut comp = vec![usize::MAX; self.v];
        let mut n_comp = 0;
        for start in 0..self.v {
            if comp[start] != usize::MAX {
                continue;
            }
            let mut stack = vec![start];
            comp[start] = n_comp;
            while let Some(u) = stack.pop() {
                for &(a, b) in &self.edges {
                    let (a, b) = (a - 1, b - 1);
                    if a == u && comp[b] == usize::MAX {
                        comp[b] = n_comp;
                        stack.push(b);
                    }
                    if b == u && comp[a] == usize::MAX {
                        comp[a] = n_comp;
                        stack.push(a);
                    }
                }
            }
            n_comp += 1;
        }
        let mut out = Vec::new();
        for c in 0..n_comp {
            let verts: Vec<usize> = (0..self.v).filter(|&u| comp[u] == c).collect();
            let index: BTreeMap<usize, usize> =
                verts.iter().enumerate().map(|(k, &u)| (u + 1, k + 1)).collect();
            let edges: Vec<(usize, usize)> = self
                .edges
                .iter()
                .filter(|&&(a, _)| comp[a - 1] == c)
                .map(|&(a, b)| (index[&a], index[&b]))
                .collect();
            out.push(GraphClass::new(verts.len(), edges).expect("component is well-formed"));
        }
        out.sort();
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// First Betti number `E - V + #components`.
    pub fn beta1(&self) -> usize {
        self.edge_count() + self.components().len() - self.v
    }

    /// Number of edge instances lying on at least one cycle (instances of
    /// parallel edges count separately; bridges are excluded).
    pub fn cycle_edge_count(&self) -> usize {
        let mut count = 0;
        for k in 0..self.edges.len() {
            // An instance lies on a cycle iff removing it keeps its
            // endpoints connected.
            let (a, b) = self.edges[k];
            let mut reach = vec![false; self.v];
            reach[a - 1] = true;
            let mut stack = vec![a - 1];
            while let Some(u) = stack.pop() {
                for (idx, &(x, y)) in self.edges.iter().enumerate() {
                    if idx == k {
                        continue;
                    }
                    let (x, y) = (x - 1, y - 1);
                    if x == u && !reach[y] {
                        reach[y] = true;
                        stack.push(y);
                    }
                    if y == u && !reach[x] {
                        reach[x] = true;
                        stack.push(x);
                    }
                }
            }
            if reach[b - 1] {
                count += 1;
            }
        }
        count
    }

    /// Text key in the shared edge-list format, e.g. `"1-2;1-2;2-3"`.
    pub fn edges_string(&self) -> String {
        self.canonical_monomial().edges_string()
    }

    /// Parse the output of [`GraphClass::edges_string`].
    pub fn parse(s: &str) -> Result<Self> {
        let m = Monomial::parse_edges(s)?;
        if m.is_unit() {
            return Err(Error::Parse("empty graph".into()));
        }
        GraphClass::from_monomial(&m)
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.edges_string())
    }
}

/// A rational linear combination of graph classes.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GraphSeries {
    terms: BTreeMap<GraphClass, Rat>,
}

impl GraphSeries {
    pub fn new() -> Self {
        GraphSeries::default()
    }

    pub fn add_term(&mut self, g: GraphClass, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(g);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn coeff(&self, g: &GraphClass) -> Rat {
        self.terms.get(g).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GraphClass, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Expand every class in ambient size `n` and sum.
    pub fn expand(&self, n: usize) -> WPolynomial {
        let mut out = WPolynomial::zero(n);
        for (g, c) in &self.terms {
            out = &out + &g.expand(n).scale(c);
        }
        out
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(g, c)| json!({ "edges": g.edges_string(), "coeff": format_rat(c) }))
                .collect(),
        )
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::Parse("graph series must be a JSON array".into()))?;
        let mut out = GraphSeries::new();
        for item in arr {
            let edges = item
                .get("edges")
                .and_then(Value::as_str)
                .ok_or_else(|| Error::Parse("missing edges".into()))?;
            let coeff = item
                .get("coeff")
                .and_then(Value::as_str)
                .ok_or_else(|| Error::Parse("missing coeff".into()))?;
            out.add_term(GraphClass::parse(edges)?, parse_rat(coeff)?);
        }
        Ok(out)
    }
}

impl fmt::Display for GraphSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (g, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{} [{}]", format_rat(c), g)?;
        }
        Ok(())
    }
}

/// Inverse of expansion on symmetric input: write `p` as a combination of
/// graph classes. The coefficient of a class is the coefficient of its
/// canonical monomial times the factorial of each edge multiplicity; the
/// result is re-expanded and compared against `p`, and any residual means
/// the input was not symmetric.
///
/// ```
/// use hurwitz_core::wring::{collect, GraphClass};
/// use hurwitz_core::rat::rat_int;
///
/// // (sum of all edges)^2 = 2 (double edge) + 2 (two-edge path) at n = 3.
/// let sum = GraphClass::single_edge().expand(3);
/// let series = collect(&(&sum * &sum))?;
/// assert_eq!(series.coeff(&GraphClass::banana(2)), rat_int(2));
/// assert_eq!(series.coeff(&GraphClass::path(2)), rat_int(2));
/// # Ok::<(), hurwitz_core::Error>(())
/// ```
pub fn collect(p: &WPolynomial) -> Result<GraphSeries> {
    let mut out = GraphSeries::new();
    for (m, _) in p.terms() {
        if m.is_unit() {
            // Constants have no graph; symmetric polynomials with constant
            // term cannot be collected.
            return Err(Error::NotInvariant);
        }
        let class = GraphClass::from_monomial(m)?;
        if !out.coeff(&class).is_zero() {
            continue;
        }
        let mut c = p.coeff(&class.canonical_monomial());
        for (_, mult) in class.edge_multiplicities() {
            for k in 2..=mult as u64 {
                c *= Rat::from_integer(k.into());
            }
        }
        out.add_term(class, c);
    }
    if &out.expand(p.n()) != p {
        return Err(Error::NotInvariant);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};
    use crate::wring::EdgeVar;

    #[test]
    fn canonical_form_identifies_isomorphic_graphs() {
        let a = GraphClass::new(3, vec![(1, 2), (2, 3)]).unwrap();
        let b = GraphClass::new(3, vec![(2, 3), (1, 3)]).unwrap();
        assert_eq!(a, b);
        let triple = GraphClass::new(2, vec![(1, 2), (1, 2), (1, 2)]).unwrap();
        assert_eq!(triple, GraphClass::banana(3));
        assert!(GraphClass::new(2, vec![(1, 1)]).is_err());
        assert!(GraphClass::new(3, vec![(1, 2)]).is_err()); // vertex 3 isolated
    }

    #[test]
    fn labeled_trees_on_four_vertices_fall_into_two_classes() {
        // All 4^2 = 16 labeled trees on 4 vertices via Prüfer decoding.
        let mut classes = std::collections::BTreeSet::new();
        for a in 1..=4usize {
            for b in 1..=4usize {
                let edges = crate::spectral::pruefer_decode(&[a, b]);
                classes.insert(GraphClass::new(4, edges).unwrap());
            }
        }
        assert_eq!(classes.len(), 2);
        assert!(classes.contains(&GraphClass::path(3)));
        assert!(classes.contains(&GraphClass::spider(3)));
    }

    #[test]
    fn aut_counts_match_known_values() {
        assert_eq!(GraphClass::single_edge().aut_count(), 2);
        assert_eq!(GraphClass::banana(3).aut_count(), 12);
        assert_eq!(GraphClass::path(2).aut_count(), 2);
        assert_eq!(GraphClass::spider(3).aut_count(), 6);
    }

    #[test]
    fn aut_count_divides_its_bound() {
        // |Aut| divides v! times the multiplicity factorials, with
        // equality only in the fully symmetric cases.
        for g in [
            GraphClass::single_edge(),
            GraphClass::banana(2),
            GraphClass::banana(3),
            GraphClass::path(2),
            GraphClass::path(3),
            GraphClass::spider(3),
            GraphClass::new(4, vec![(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap(),
        ] {
            let mut bound = 1u64;
            for k in 2..=g.v() as u64 {
                bound *= k;
            }
            for (_, m) in g.edge_multiplicities() {
                for k in 2..=m as u64 {
                    bound *= k;
                }
            }
            assert_eq!(bound % g.aut_count(), 0, "bound not divisible for {g}");
        }
        // Equality holds for the parallel-edge classes.
        assert_eq!(GraphClass::banana(3).aut_count(), 2 * 6);
        // The 4-cycle is strictly smaller: 8 < 4!.
        let square = GraphClass::new(4, vec![(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
        assert_eq!(square.aut_count(), 8);
    }

    #[test]
    fn expansion_of_small_classes() {
        let e = GraphClass::single_edge();
        let p = e.expand(3);
        assert_eq!(p.num_terms(), 3);
        assert_eq!(p.coeff(&Monomial::from_pairs(&[(1, 2)]).unwrap()), rat_int(1));
        // Triple edge at n = 2 is w12^3 / 6.
        let t = GraphClass::banana(3).expand(2);
        assert_eq!(
            t.coeff(&Monomial::from_pairs(&[(1, 2), (1, 2), (1, 2)]).unwrap()),
            rat(1, 6)
        );
        assert_eq!(t.num_terms(), 1);
        // A 3-vertex class vanishes in ambient size 2.
        assert!(GraphClass::path(2).expand(2).is_zero());
    }

    #[test]
    fn collect_inverts_expand() {
        let e = GraphClass::single_edge();
        let sum = e.expand(3);
        let series = collect(&sum).unwrap();
        assert_eq!(series.num_terms(), 1);
        assert_eq!(series.coeff(&e), rat_int(1));

        let sq = &sum * &sum;
        let series = collect(&sq).unwrap();
        assert_eq!(series.coeff(&GraphClass::banana(2)), rat_int(2));
        assert_eq!(series.coeff(&GraphClass::path(2)), rat_int(2));
        assert_eq!(series.num_terms(), 2);
    }

    #[test]
    fn collect_rejects_asymmetric_input() {
        let p = WPolynomial::var(3, EdgeVar::new(1, 2).unwrap()).unwrap();
        assert!(matches!(collect(&p), Err(Error::NotInvariant)));
    }

    #[test]
    fn components_and_beta() {
        let g = GraphClass::new(4, vec![(1, 2), (3, 4)]).unwrap();
        assert_eq!(g.components().len(), 2);
        assert_eq!(g.beta1(), 0);
        assert!(!g.is_connected());
        let banana = GraphClass::banana(3);
        assert_eq!(banana.beta1(), 2);
        assert_eq!(banana.cycle_edge_count(), 3);
        assert_eq!(GraphClass::path(2).cycle_edge_count(), 0);
    }

    #[test]
    fn series_json_round_trip() {
        let mut s = GraphSeries::new();
        s.add_term(GraphClass::banana(2), rat(1, 3));
        s.add_term(GraphClass::path(2), rat(-1, 12));
        let t = GraphSeries::from_json(&s.to_json()).unwrap();
        assert_eq!(s, t);
    }
}
