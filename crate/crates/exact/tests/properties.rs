use drg_exact::factor::{factor, factor_square_free};
use drg_exact::linalg::{mul, mul_vec, rref, rref_with_transform, Matrix};
use drg_exact::{isolate_roots, rat, solve_affine, AffineSolution, NumberField, Poly, Rat};
use proptest::prelude::*;
use std::collections::BTreeMap;

fn small_rat() -> impl Strategy<Value = Rat> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(proptest::collection::vec(small_rat(), cols), rows)
}

/// Plain floating bisection, used as an independent check on root values.
fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    while hi - lo > 1e-13 {
        let mid = 0.5 * (lo + hi);
        if (f(lo) < 0.0) == (f(mid) < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

#[test]
fn golden_roots_agree_with_float_bisection() {
    let roots = isolate_roots(&Poly::from_ints(&[-1, 1, 1]));
    let f = |x: f64| x * x + x - 1.0;
    assert_eq!(roots.len(), 2);
    assert!((roots[0].to_f64() - bisect(f, 0.0, 1.0)).abs() < 1e-12);
    assert!((roots[1].to_f64() - bisect(f, -2.0, -1.0)).abs() < 1e-12);
    assert_eq!(roots[0].degree(), 2);
    assert_eq!(
        isolate_roots(&Poly::from_ints(&[-7, 1]))[0].to_rat(),
        Some(Rat::from(7))
    );
}

#[test]
fn tridiagonal_char_poly_roots() {
    // det(xI - B1) for the intersection matrix of {5,4,2;1,1,4}.
    let p = [5, 2, -1, -3]
        .iter()
        .fold(Poly::one(), |a, &r| &a * &Poly::linear_root(&Rat::from(r)));
    let roots: Vec<String> = isolate_roots(&p).iter().map(|r| r.to_string()).collect();
    assert_eq!(roots, ["5", "2", "-1", "-3"]);
}

proptest! {
    #[test]
    fn rref_matches_recorded_row_operations(m in matrix(5, 7)) {
        let (r, t, pivots) = rref_with_transform(&m);
        prop_assert_eq!(mul(&t, &m), r.clone());
        prop_assert_eq!(rref(&m), (r.clone(), pivots.clone()));
        prop_assert!(pivots.windows(2).all(|w| w[0] < w[1]));
        for (i, &p) in pivots.iter().enumerate() {
            for (k, row) in r.iter().enumerate() {
                prop_assert_eq!(row[p].clone(), if k == i { Rat::one() } else { Rat::zero() });
            }
        }
    }

    #[test]
    fn zero_free_variables_solve_system(m in matrix(4, 6), x in proptest::collection::vec(small_rat(), 6)) {
        // Right side from a known point, so the system is consistent.
        let b = mul_vec(&m, &x);
        let names: Vec<String> = (0..6).map(|i| format!("x{i}")).collect();
        let AffineSolution::Consistent(sol) = solve_affine(&m, &b, &names).unwrap() else {
            return Err(TestCaseError::fail("inconsistent"));
        };
        for values in [BTreeMap::new(), sol.free_vars.iter().map(|v| (v.clone(), rat(3, 7))).collect()] {
            let point: Vec<Rat> = names.iter().map(|n| sol.get(n).unwrap().eval(&values)).collect();
            prop_assert_eq!(mul_vec(&m, &point), b.clone());
        }
        for form in sol.assignments.values() {
            prop_assert!(form.variables().all(|v| sol.free_vars.iter().any(|f| f == v)));
        }
    }

    #[test]
    fn number_field_axioms(
        a in proptest::collection::vec(small_rat(), 3),
        b in proptest::collection::vec(small_rat(), 3),
        c in proptest::collection::vec(small_rat(), 3),
    ) {
        let k = NumberField::new(isolate_roots(&Poly::from_ints(&[-2, 0, 0, 1]))[0].clone());
        let (a, b, c) = (k.elem(&Poly::new(a)), k.elem(&Poly::new(b)), k.elem(&Poly::new(c)));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        if !a.is_zero() {
            let inv = a.inverse().unwrap();
            prop_assert_eq!((&a * &inv).to_rat(), Some(Rat::one()));
        }
    }

    #[test]
    fn factors_multiply_back(
        roots in proptest::collection::vec(-6i64..=6, 0..4),
        quad in proptest::collection::vec((-5i64..=5, -5i64..=5), 0..3),
    ) {
        let mut p = Poly::from_ints(&[3]);
        for r in &roots {
            p = &p * &Poly::from_ints(&[-r, 1]);
        }
        for (b, c) in &quad {
            p = &p * &Poly::from_ints(&[*c, *b, 1]);
        }
        let product = factor(&p)
            .iter()
            .fold(Poly::one(), |acc, (f, m)| &acc * &f.pow(*m as u32));
        prop_assert_eq!(product, p.monic());
        for (f, _) in factor(&p) {
            prop_assert_eq!(factor_square_free(&f).len(), 1);
        }
    }

    #[test]
    fn isolated_roots_are_distinct_and_divide(
        roots in proptest::collection::vec(-6i64..=6, 1..4),
        quad in proptest::collection::vec((-5i64..=5, -5i64..=5), 0..3),
    ) {
        let mut p = Poly::one();
        for r in &roots {
            p = &p * &Poly::from_ints(&[-r, 1]);
        }
        for (b, c) in &quad {
            p = &p * &Poly::from_ints(&[*c, *b, 1]);
        }
        let found = isolate_roots(&p);
        for w in found.windows(2) {
            prop_assert!(w[0] > w[1]);
            prop_assert!(w[0].interval().lo > w[1].interval().hi);
        }
        for r in &found {
            prop_assert_eq!(r.sign_of(&p), 0);
            prop_assert!(p.rem(r.minpoly()).is_zero());
        }
        let distinct_real = {
            let mut xs: Vec<f64> = Vec::new();
            for r in &roots {
                xs.push(*r as f64);
            }
            for (b, c) in &quad {
                let disc = (b * b - 4 * c) as f64;
                if disc >= 0.0 {
                    xs.push((-*b as f64 + disc.sqrt()) / 2.0);
                    xs.push((-*b as f64 - disc.sqrt()) / 2.0);
                }
            }
            xs.sort_by(|a, b| a.partial_cmp(b).unwrap());
            xs.dedup_by(|a, b| (*a - *b).abs() < 1e-9);
            xs.len()
        };
        prop_assert_eq!(found.len(), distinct_real);
    }
}
