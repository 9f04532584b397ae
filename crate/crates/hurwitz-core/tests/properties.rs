//! Property tests for the algebraic invariants: group laws, ring axioms,
//! expansion/collection round trips, symmetry of the enumerated
//! polynomials, and Euler-formula bookkeeping for rotation systems.

use proptest::prelude::*;

use hurwitz_core::oracle::{self, DEFAULT_BUDGET};
use hurwitz_core::perm::{CycleType, Permutation};
use hurwitz_core::rat::{rat_int, Rat};
use hurwitz_core::surfaces::{self, MultiGraph};
use hurwitz_core::wring::{collect, EdgeVar, GraphClass, GraphSeries, Monomial, WPolynomial};

fn arb_permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just(n).prop_perturb(move |n, mut rng| {
        let mut images: Vec<usize> = (1..=n).collect();
        for k in (1..n).rev() {
            let j = (rng.next_u64() as usize) % (k + 1);
            images.swap(k, j);
        }
        Permutation::from_images(images).unwrap()
    })
}

fn arb_monomial(n: usize, max_degree: usize) -> impl Strategy<Value = Monomial> {
    prop::collection::vec((1..=n, 1..=n), 1..=max_degree).prop_map(|pairs| {
        let vars: Vec<EdgeVar> = pairs
            .into_iter()
            .filter(|&(a, b)| a != b)
            .map(|(a, b)| EdgeVar::new(a, b).unwrap())
            .collect();
        Monomial::from_vars(vars)
    })
}

fn arb_poly(n: usize) -> impl Strategy<Value = WPolynomial> {
    prop::collection::vec((arb_monomial(n, 3), -4i64..=4), 0..5).prop_map(move |terms| {
        let mut p = WPolynomial::zero(n);
        for (m, c) in terms {
            p.add_term(m, rat_int(c));
        }
        p
    })
}

/// Symmetrize a polynomial over all of `S_n` so that collection is
/// guaranteed to apply.
fn symmetrize(p: &WPolynomial) -> WPolynomial {
    let n = p.n();
    let mut acc = WPolynomial::zero(n);
    let mut images: Vec<usize> = (1..=n).collect();
    let mut c = vec![0usize; n];
    let add = |images: &[usize], acc: &mut WPolynomial| {
        let perm = Permutation::from_images(images.to_vec()).unwrap();
        *acc = &*acc + &p.relabeled(&perm);
    };
    add(&images, &mut acc);
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                images.swap(0, i);
            } else {
                images.swap(c[i], i);
            }
            add(&images, &mut acc);
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    acc
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn composition_is_associative((a, b, c) in (arb_permutation(6), arb_permutation(6), arb_permutation(6))) {
        let left = a.compose(&b).unwrap().compose(&c).unwrap();
        let right = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        let id = Permutation::identity(6);
        prop_assert_eq!(a.compose(&id).unwrap(), a.clone());
        prop_assert_eq!(id.compose(&a).unwrap(), a);
    }

    #[test]
    fn cycle_type_is_conjugation_invariant((p, q) in (arb_permutation(7), arb_permutation(7))) {
        let conj = q.compose(&p).unwrap().compose(&q.inverse()).unwrap();
        prop_assert_eq!(conj.cycle_type(), p.cycle_type());
    }

    #[test]
    fn transposition_products_have_fixed_parity(pairs in prop::collection::vec((1usize..=5, 1usize..=5), 0..7)) {
        let n = 5;
        let mut product = Permutation::identity(n);
        let mut m = 0usize;
        for (a, b) in pairs {
            if a == b {
                continue;
            }
            product = Permutation::transposition(n, a, b).unwrap().compose(&product).unwrap();
            m += 1;
        }
        let cycles = product.cycles().len();
        prop_assert_eq!((n - cycles) % 2, m % 2);
    }

    #[test]
    fn ring_axioms((p, q, r) in (arb_poly(4), arb_poly(4), arb_poly(4))) {
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
    }

    #[test]
    fn collect_inverts_expand_on_symmetric_input(p in arb_poly(4)) {
        // Drop constant terms: graphs carry no empty class.
        let p = {
            let mut q = WPolynomial::zero(p.n());
            for (m, c) in p.terms() {
                if !m.is_unit() {
                    q.add_term(m.clone(), c.clone());
                }
            }
            q
        };
        let sym = symmetrize(&p);
        if !sym.is_zero() {
            let series = collect(&sym).unwrap();
            prop_assert_eq!(series.expand(sym.n()), sym);
        }
    }

    #[test]
    fn expand_inverts_collect(classes in prop::collection::vec((0usize..5, -3i64..=3), 1..4)) {
        // A handful of fixed small classes with random coefficients.
        let pool = [
            GraphClass::single_edge(),
            GraphClass::banana(2),
            GraphClass::path(2),
            GraphClass::spider(3),
            GraphClass::banana(3),
        ];
        let n = 4;
        let mut series = GraphSeries::new();
        for (k, c) in classes {
            if pool[k].v() <= n {
                series.add_term(pool[k].clone(), rat_int(c));
            }
        }
        let expanded = series.expand(n);
        if !expanded.is_zero() {
            prop_assert_eq!(collect(&expanded).unwrap(), series);
        }
    }

    #[test]
    fn projection_commutes_with_expansion(k in 0usize..5, n in 2usize..6) {
        let pool = [
            GraphClass::single_edge(),
            GraphClass::banana(2),
            GraphClass::path(2),
            GraphClass::spider(3),
            GraphClass::path(3),
        ];
        let class = &pool[k];
        prop_assert_eq!(class.expand(n).project(), class.expand(n - 1));
    }

    #[test]
    fn orbit_size_times_stabilizer(k in 0usize..5, n in 2usize..6) {
        let pool = [
            GraphClass::single_edge(),
            GraphClass::banana(2),
            GraphClass::path(2),
            GraphClass::spider(3),
            GraphClass::path(3),
        ];
        let class = &pool[k];
        let v = class.v();
        if v > n {
            return Ok(());
        }
        // Number of distinct monomials in the expansion equals the number
        // of injective labelings divided by the vertex automorphisms.
        let expansion = class.expand(n);
        let mut injections: u64 = 1;
        for t in (n - v + 1)..=n {
            injections *= t as u64;
        }
        prop_assert_eq!(
            expansion.num_terms() as u64 * class.vertex_aut_count(),
            injections
        );
    }

    #[test]
    fn enumerated_polynomials_are_symmetric(g in 0u32..2, perm in arb_permutation(3)) {
        let p = oracle::hurwitz_poly(3, g, DEFAULT_BUDGET).unwrap();
        prop_assert_eq!(p.relabeled(&perm), p.clone());
        // Collection succeeding is the same fact through the other route.
        prop_assert!(collect(&p).is_ok());
    }

    #[test]
    fn enumeration_degree_and_parity(parts in prop::collection::vec(1usize..=3, 1..3), m in 0usize..5) {
        let lambda = CycleType::new(parts).unwrap();
        let n = lambda.n();
        if n < 2 {
            return Ok(());
        }
        let s = lambda.num_parts();
        let task = oracle::FactorizationTask {
            n,
            target: oracle::FactorTarget::Class(lambda),
            m,
        };
        let p = oracle::enumerate(&task, DEFAULT_BUDGET).unwrap();
        if (m + n + s) % 2 != 0 {
            // Parity mismatch: nothing can land in the class.
            prop_assert!(p.is_zero());
        }
        // Every monomial has total degree m.
        prop_assert!(p.is_homogeneous_of(m));
    }

    #[test]
    fn rotation_systems_obey_euler(seed in 0u64..500) {
        // A pseudo-random connected multigraph with <= 5 edges.
        let mut rng = hurwitz_core::rng::SplitMix64::new(seed);
        let v = 1 + (rng.below(4) as usize);
        let e = 1 + (rng.below(5) as usize);
        let edges: Vec<(usize, usize)> = (0..e)
            .map(|_| (1 + rng.below(v as u64) as usize, 1 + rng.below(v as u64) as usize))
            .collect();
        let g = MultiGraph::new(v, edges).unwrap();
        if !g.is_connected() {
            return Ok(());
        }
        let mut total = 0u128;
        let mut genus_sum = 0u64;
        surfaces::for_each_rotation(&g, |rot| {
            let f = surfaces::faces(&g, rot).unwrap();
            // Euler parity and nonnegative genus are enforced inside
            // faces(); recompute the face count from the orbit sizes.
            let half_edges: usize = f.faces.iter().map(Vec::len).sum();
            assert_eq!(half_edges, g.half_edge_count());
            genus_sum += f.genus as u64;
            total += 1;
        });
        prop_assert_eq!(total, g.emb_count());
        let _ = genus_sum;
    }

    #[test]
    fn faces_match_cycles_on_random_graphs(seed in 0u64..400) {
        let mut rng = hurwitz_core::rng::SplitMix64::new(seed.wrapping_mul(7919).wrapping_add(1));
        let v = 2 + (rng.below(4) as usize);
        let e = 1 + (rng.below(6) as usize);
        let edges: Vec<(usize, usize)> = (0..e)
            .filter_map(|_| {
                let a = 1 + rng.below(v as u64) as usize;
                let b = 1 + rng.below(v as u64) as usize;
                (a != b).then_some((a, b))
            })
            .collect();
        if edges.is_empty() {
            return Ok(());
        }
        let g = MultiGraph::new(v, edges).unwrap();
        if !g.is_connected() {
            return Ok(());
        }
        // One random numbering per graph.
        let e = g.edge_count();
        let mut numbering: Vec<usize> = (1..=e).collect();
        for k in (1..e).rev() {
            let j = rng.below((k + 1) as u64) as usize;
            numbering.swap(k, j);
        }
        prop_assert!(surfaces::faces_vs_cycles(&g, &numbering).is_ok());
    }

    #[test]
    fn polynomial_json_round_trips(p in arb_poly(5)) {
        let v = p.to_json();
        prop_assert_eq!(WPolynomial::from_json(&v).unwrap(), p);
    }
}

#[test]
fn class_size_bookkeeping_totals() {
    // Bucketing every 4-tuple over S_3 by the class of its product
    // accounts for all 3^4 tuples; same for 3-tuples.
    for m in [3usize, 4usize] {
        let mut total = Rat::from_integer(0.into());
        for lambda in CycleType::all_of(3) {
            let task = oracle::FactorizationTask {
                n: 3,
                target: oracle::FactorTarget::Class(lambda),
                m,
            };
            total += oracle::enumerate(&task, DEFAULT_BUDGET).unwrap().eval_ones();
        }
        assert_eq!(total, rat_int(3i64.pow(m as u32)));
    }
}
