//! Algebraic identities of the parameters, over fixed fixtures and over
//! Hamming and Johnson arrays generated from classical parameters.

use drg::IntersectionArray;
use drg_exact::{AlgebraicNumber, Rat};
use proptest::prelude::*;

const FIXTURES: &[&str] = &[
    "{3,2;1,1}",
    "{2,1;1,1}",
    "{3;1}",
    "{4,3,2,1;1,2,3,4}",
    "{7,6,5,4,3,2,1;1,2,3,4,5,6,7}",
    "{5,4,2;1,1,4}",
    "{6,4,4;1,1,3}",
    "{5,2,1;1,2,5}",
    "{6,2;1,4}",
    "{2,1,1;1,1,1}",
];

fn product_pq(ia: &IntersectionArray, i: usize, j: usize) -> AlgebraicNumber {
    let s = ia.spectrum().unwrap();
    let (p, q) = (s.p_matrix(), s.q_matrix());
    let mx = s.mixed(&[i, j]);
    let alg = mx.product().algebra();
    let mut acc = alg.zero();
    for l in 0..=ia.diameter() {
        acc = alg.add(&acc, &alg.mul(&mx.embed(i, &p[i][l]), &mx.embed(j, &q[l][j])));
    }
    mx.product().value(&acc)
}

fn assert_identities(ia: &IntersectionArray) {
    let d = ia.diameter();
    let n = ia.order().clone();
    let s = ia.spectrum().unwrap();
    s.check_multiplicities().unwrap();
    let m = s.multiplicities();
    assert_eq!(m.iter().sum::<Rat>(), n, "{ia}");
    for i in 0..=d {
        for j in 0..=d {
            let expect = if i == j { n.clone() } else { Rat::zero() };
            assert_eq!(
                product_pq(ia, i, j),
                AlgebraicNumber::from_rat(expect),
                "{ia} PQ[{i}][{j}]"
            );
        }
    }
    let q = ia.krein().unwrap().to_rational().expect("rational Krein parameters");
    for h in 0..=d {
        for i in 0..=d {
            for j in 0..=d {
                assert_eq!(ia.k(h) * ia.p(h, i, j), ia.k(i) * ia.p(i, h, j), "{ia} p {h} {i} {j}");
                assert_eq!(&m[h] * q.get(h, i, j), &m[i] * q.get(i, h, j), "{ia} q {h} {i} {j}");
                assert_eq!(q.get(h, i, j), q.get(h, j, i));
                assert!(!q.get(h, i, j).is_negative(), "{ia} Krein {h} {i} {j}");
            }
            let row: Rat = (0..=d).map(|j| ia.p(h, i, j).clone()).sum();
            assert_eq!(row, ia.k(i));
        }
    }
    for i in 0..=d {
        for j in 0..=d {
            let e = if i == j { m[i].clone() } else { Rat::zero() };
            assert_eq!(q.get(0, i, j), &e);
        }
    }
}

#[test]
fn fixtures_satisfy_identities() {
    for a in FIXTURES {
        assert_identities(&a.parse().unwrap());
    }
}

#[test]
fn four_cube_is_self_dual() {
    let ia: IntersectionArray = "{4,3,2,1;1,2,3,4}".parse().unwrap();
    let s = ia.spectrum().unwrap();
    assert!(s.is_formally_self_dual());
    let q = ia.krein().unwrap().to_rational().unwrap();
    assert_eq!(&q, ia.p_tensor());
}

#[test]
fn sylvester_is_not_self_dual() {
    let ia: IntersectionArray = "{5,4,2;1,1,4}".parse().unwrap();
    assert!(!ia.spectrum().unwrap().is_formally_self_dual());
    let c4: IntersectionArray = "{2,1;1,2}".parse().unwrap();
    assert!(c4.spectrum().unwrap().is_formally_self_dual());
}

fn hamming() -> impl Strategy<Value = IntersectionArray> {
    (1usize..=4, 2i64..=4)
        .prop_map(|(d, q)| IntersectionArray::from_classical(d, &Rat::one(), &Rat::zero(), &Rat::from(q - 1)).unwrap())
}

fn johnson() -> impl Strategy<Value = IntersectionArray> {
    (1usize..=3, 0i64..=3).prop_map(|(d, extra)| {
        let n = 2 * d as i64 + extra;
        IntersectionArray::from_classical(d, &Rat::one(), &Rat::one(), &Rat::from(n - d as i64)).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn hamming_identities(ia in hamming()) {
        assert_identities(&ia);
    }

    #[test]
    fn johnson_identities(ia in johnson()) {
        assert_identities(&ia);
    }

    #[test]
    fn hamming_is_self_dual(ia in hamming()) {
        prop_assert!(ia.spectrum().unwrap().is_formally_self_dual());
        let q = ia.krein().unwrap().to_rational().unwrap();
        prop_assert_eq!(&q, ia.p_tensor());
    }
}
