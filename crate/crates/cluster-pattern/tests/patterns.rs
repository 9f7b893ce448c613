use std::collections::HashSet;

use cluster_pattern::*;
use exchange_core::{cartan_counterpart, ExchangeMatrix};
use proptest::prelude::*;

fn d4_affine() -> ExchangeMatrix {
    // leaves 2..5 point to the center 1
    ExchangeMatrix::from_arrows(5, &[(1, 0), (2, 0), (3, 0), (4, 0)])
}

fn e6_affine() -> ExchangeMatrix {
    ExchangeMatrix::from_arrows(7, &[(0, 1), (2, 1), (0, 3), (4, 3), (0, 5), (6, 5)])
}

fn lp(s: &str, n: usize) -> LaurentPoly {
    parse_laurent(s, n).unwrap()
}

#[test]
fn a2_five_cycle_returns_to_initial_up_to_swap() {
    let b = ExchangeMatrix::square(vec![vec![0, 1], vec![-1, 0]]).unwrap();
    let s0 = Seed::initial(b);
    let mut seen = Vec::new();
    let mut cur = s0.clone();
    for (step, k) in [0, 1, 0, 1, 0].into_iter().enumerate() {
        cur = cur.mutate(k).unwrap();
        seen.push(cur.variables[k].clone());
        if step == 4 {
            break;
        }
    }
    assert_eq!(seen[0], lp("(1 + x2)/x1", 2));
    assert_eq!(seen[1], lp("(1 + x1 + x2)/(x1*x2)", 2));
    assert_eq!(seen[2], lp("(1 + x1)/x2", 2));
    // after five steps the cluster is (x2, x1) with the transposed matrix
    assert_eq!(cur.variables, vec![lp("x2", 2), lp("x1", 2)]);
    assert_eq!(cur.matrix.to_rows(), vec![vec![0, -1], vec![1, 0]]);
}

#[test]
fn mutation_at_center_reverses_star() {
    let b = d4_affine();
    let m = mutate_matrix(&b, 0).unwrap();
    for l in 1..5 {
        assert_eq!(m.get(0, l), 1);
        assert_eq!(m.get(l, 0), -1);
        for k in 1..5 {
            assert_eq!(m.get(l, k), 0);
        }
    }
    assert!(mutate_matrix(&b, 5).is_err());
}

#[test]
fn coxeter_mutation_equals_hand_composition() {
    let s0 = Seed::initial(d4_affine());
    let by_hand = s0.mutate_path(&[1, 2, 3, 4, 0]).unwrap();
    assert_eq!(coxeter_mutation(&s0, 1).unwrap(), by_hand);
    assert_eq!(coxeter_mutation(&s0, 0).unwrap(), s0);
    let back = coxeter_mutation(&by_hand, -1).unwrap();
    assert_eq!(back, s0);
    for r in -3..=3 {
        assert_eq!(coxeter_mutation(&s0, r).unwrap().matrix, s0.matrix);
    }
    let cyc = ExchangeMatrix::from_arrows(3, &[(0, 1), (1, 2)]);
    assert_eq!(coxeter_mutation(&Seed::initial(cyc), 1), Err(PatternError::NotBipartite));
}

/// Random walks of length 8 must keep every variable Laurent with positive coefficients.
#[test]
fn laurent_positivity_on_random_walks() {
    let mut state = 0x2545F4914F6CDD1Du64;
    let mut next = move |k: usize| {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        (state % k as u64) as usize
    };
    for b in [d4_affine(), e6_affine()] {
        let n = b.n();
        for _ in 0..60 {
            let mut s = Seed::initial(b.clone());
            let mut last = usize::MAX;
            for _ in 0..8 {
                let mut k = next(n);
                if k == last {
                    k = (k + 1) % n;
                }
                s = s.mutate(k).unwrap();
                last = k;
                for x in &s.variables {
                    assert!(x.coefficients_nonnegative(), "{x}");
                }
            }
        }
    }
}

#[test]
fn d_vectors_are_roots_in_bipartite_d4() {
    let b = d4_affine();
    let rs = RootSystem::new(&cartan_counterpart(&b), 30).unwrap();
    let mut frontier = vec![Seed::initial(b)];
    let mut seen: HashSet<Seed> = frontier.iter().cloned().collect();
    for _ in 0..4 {
        let mut next = Vec::new();
        for s in &frontier {
            for k in 0..5 {
                let t = s.mutate(k).unwrap();
                let d = denominator_vector(&t.variables[k], 5).unwrap();
                let initial = d.iter().filter(|&&x| x == -1).count() == 1 && d.iter().all(|&x| x <= 0);
                assert!(initial || rs.classify(&d) != RootKind::NotARoot, "{d:?}");
                if seen.insert(t.clone()) {
                    next.push(t);
                }
            }
        }
        frontier = next;
    }
}

#[test]
fn y_variables_commute_with_mutation() {
    for b in [
        ExchangeMatrix::square(vec![vec![0, 1], vec![-1, 0]]).unwrap(),
        ExchangeMatrix::square(vec![vec![0, 1], vec![-3, 0]]).unwrap(),
        d4_affine().with_principal_coefficients(),
    ] {
        let s = Seed::initial(b.clone());
        for k in 0..b.n() {
            let lhs = YSeed::from_seed(&s.mutate(k).unwrap());
            let rhs = YSeed::from_seed(&s).mutate(k).unwrap();
            assert_eq!(lhs, rhs);
        }
        // and along a longer path
        let path = [0, 1, 0, 1];
        let mut s2 = s.clone();
        let mut y = YSeed::from_seed(&s);
        for &k in path.iter().filter(|&&k| k < b.n()) {
            s2 = s2.mutate(k).unwrap();
            y = y.mutate(k).unwrap();
        }
        assert_eq!(YSeed::from_seed(&s2), y);
    }
}

/// Entries stay in -1..=1; wilder quivers overflow i128 coefficients within a few steps.
fn small_skew() -> impl Strategy<Value = ExchangeMatrix> {
    prop::collection::vec(-1i64..=1, 6).prop_map(|t| {
        let mut rows = vec![vec![0i64; 4]; 4];
        let mut it = t.into_iter();
        for i in 0..4 {
            for j in i + 1..4 {
                let v = it.next().unwrap();
                rows[i][j] = v;
                rows[j][i] = -v;
            }
        }
        ExchangeMatrix::square(rows).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn seed_mutation_is_an_involution(b in small_skew(), path in prop::collection::vec(0usize..4, 0..4), k in 0usize..4) {
        let s = Seed::initial(b).mutate_path(&path).unwrap();
        prop_assert_eq!(s.mutate(k).unwrap().mutate(k).unwrap(), s);
    }

    #[test]
    fn yseed_mutation_is_an_involution(b in small_skew(), path in prop::collection::vec(0usize..4, 0..3), k in 0usize..4) {
        let mut y = YSeed::generators(b);
        for &p in &path {
            y = y.mutate(p).unwrap();
        }
        prop_assert_eq!(y.mutate(k).unwrap().mutate(k).unwrap(), y);
    }

    #[test]
    fn division_inverts_multiplication(a in prop::collection::vec((prop::collection::vec(-2i32..3, 3), -4i128..5), 1..5),
                                       b in prop::collection::vec((prop::collection::vec(-2i32..3, 3), -4i128..5), 1..5)) {
        let f = LaurentPoly::from_terms(3, a);
        let g = LaurentPoly::from_terms(3, b);
        prop_assume!(!g.is_zero());
        prop_assert_eq!(f.mul(&g).div_exact(&g).unwrap(), f);
    }

    #[test]
    fn gcd_divides_both(a in prop::collection::vec((prop::collection::vec(0i32..3, 3), -3i128..4), 1..4),
                        b in prop::collection::vec((prop::collection::vec(0i32..3, 3), -3i128..4), 1..4),
                        c in prop::collection::vec((prop::collection::vec(0i32..2, 3), 1i128..3), 1..3)) {
        let (f, g, h) = (LaurentPoly::from_terms(3, a), LaurentPoly::from_terms(3, b), LaurentPoly::from_terms(3, c));
        prop_assume!(!f.is_zero() && !g.is_zero());
        let (fh, gh) = (f.mul(&h), g.mul(&h));
        let d = poly_gcd(&fh, &gh);
        prop_assert!(fh.div_exact(&d).is_ok());
        prop_assert!(gh.div_exact(&d).is_ok());
        // h divides the gcd
        prop_assert!(d.div_exact(&h).is_ok());
    }
}
