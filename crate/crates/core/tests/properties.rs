use kreweras_core::arith::catalan_u64;
use kreweras_core::{
    enumerate_trees, kreweras, nc_join, nc_meet, phi, phi_inverse, rho, rho_bar, rho_inverse,
    rotate_nc, IntPolynomial, NoncrossingPartition, PlaneTree,
};
use num_bigint::BigInt;
use proptest::prelude::*;

fn tree() -> impl Strategy<Value = PlaneTree> {
    (1..=8usize).prop_flat_map(|n| {
        (0..catalan_u64(n as u64).unwrap() as usize)
            .prop_map(move |k| enumerate_trees(n).unwrap().nth(k).unwrap())
    })
}

fn partition() -> impl Strategy<Value = NoncrossingPartition> {
    tree().prop_map(|t| rho(&t))
}

fn pair() -> impl Strategy<Value = (NoncrossingPartition, NoncrossingPartition)> {
    (1..=7usize).prop_flat_map(|n| {
        let c = catalan_u64(n as u64).unwrap() as usize;
        (0..c, 0..c).prop_map(move |(i, j)| {
            let nth = |k| rho(&enumerate_trees(n).unwrap().nth(k).unwrap());
            (nth(i), nth(j))
        })
    })
}

proptest! {
    #[test]
    fn kreweras_squared_is_rotation(p in partition()) {
        prop_assert_eq!(kreweras(&kreweras(&p)), rotate_nc(&p, 1));
    }

    #[test]
    fn kreweras_has_period_dividing_2n(p in partition()) {
        let mut x = p.clone();
        for _ in 0..2 * p.n() {
            x = kreweras(&x);
        }
        prop_assert_eq!(x, p);
    }

    #[test]
    fn rotations_compose(p in partition(), a in -20i64..20, b in -20i64..20) {
        prop_assert_eq!(rotate_nc(&rotate_nc(&p, a), b), rotate_nc(&p, a + b));
    }

    #[test]
    fn block_counts_are_complementary(p in partition()) {
        prop_assert_eq!(p.num_blocks() + kreweras(&p).num_blocks(), p.n() + 1);
    }

    #[test]
    fn rerooting_commutes_with_kreweras(t in tree()) {
        prop_assert_eq!(rho(&phi(&t)), kreweras(&rho(&t)));
        prop_assert_eq!(rho_bar(&t), kreweras(&rho(&t)));
        prop_assert_eq!(phi_inverse(&phi(&t)), t.clone());
        prop_assert_eq!(rho_inverse(&rho(&t)), t);
    }

    #[test]
    fn kreweras_reverses_order((p, q) in pair()) {
        let (kp, kq) = (kreweras(&p), kreweras(&q));
        prop_assert_eq!(p.refines(&q).unwrap(), kq.refines(&kp).unwrap());
        prop_assert_eq!(kreweras(&nc_meet(&p, &q).unwrap()), nc_join(&kp, &kq).unwrap());
    }

    #[test]
    fn partition_text_and_json_round_trip(p in partition()) {
        prop_assert_eq!(p.to_string().parse::<NoncrossingPartition>().unwrap(), p.clone());
        let json = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<NoncrossingPartition>(&json).unwrap(), p);
    }

    #[test]
    fn tree_text_and_json_round_trip(t in tree()) {
        prop_assert_eq!(t.to_string().parse::<PlaneTree>().unwrap(), t.clone());
        let json = serde_json::to_string(&t).unwrap();
        prop_assert_eq!(serde_json::from_str::<PlaneTree>(&json).unwrap(), t.clone());
        prop_assert_eq!(PlaneTree::from_edges(t.n(), &t.edges()).unwrap(), t);
    }

    #[test]
    fn polynomial_round_trip_and_division(
        a in prop::collection::vec(-50i64..50, 0..8),
        b in prop::collection::vec(-50i64..50, 1..5),
    ) {
        let pa = IntPolynomial::from_i64s(&a);
        let mut b = b;
        *b.last_mut().unwrap() = 1;
        let pb = IntPolynomial::from_i64s(&b);
        prop_assert_eq!(pa.to_string().parse::<IntPolynomial>().unwrap(), pa.clone());
        let (quot, rem) = pa.div_rem(&pb).unwrap();
        prop_assert_eq!(&(&quot * &pb) + &rem, pa.clone());
        prop_assert!(rem.degree() < pb.degree());
        let q = BigInt::from(3);
        prop_assert_eq!((&pa * &pb).eval(&q), pa.eval(&q) * pb.eval(&q));
    }
}
