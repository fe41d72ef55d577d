use crankmex_core::bijections::{
    even_mex_to_fixed_point, fixed_star_to_negcrank, g1_insert, konan_reduce, neg_to_pos_crank,
    negcrank_to_fixed, pos_to_neg_crank, EvenMexInverse,
};
use crankmex_core::{ClassTag, Partition};
use proptest::prelude::*;

fn partition(max_part: i64, max_len: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 1..=max_len).prop_map(|v| Partition::new(v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn text_and_serde_round_trip(p in partition(12, 14)) {
        prop_assert_eq!(p.to_string().parse::<Partition>().unwrap(), p.clone());
        let plain: Vec<String> = p.parts().iter().map(u32::to_string).collect();
        prop_assert_eq!(plain.join(",").parse::<Partition>().unwrap(), p.clone());
        let json = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<Partition>(&json).unwrap(), p);
    }

    #[test]
    fn statistics(p in partition(12, 14)) {
        let n = p.n() as i64;
        prop_assert_eq!(p.beta() + p.omega(), p.len());
        prop_assert!(p.crank().abs() <= n);
        prop_assert!(!p.parts().contains(&p.mex()));
        prop_assert!((1..p.mex()).all(|m| p.parts().contains(&m)));
        let fixed = (1..=p.len()).filter(|&i| p.part(i) == Some(i as u32)).count();
        prop_assert!(fixed <= 1);
        let d = p.durfee(0);
        prop_assert!(d == 0 || p.part(d).unwrap() as usize >= d);
        prop_assert!(p.part(d + 1).is_none_or(|x| (x as usize) < d + 1));
        if let Some(i) = p.fixed_point() {
            prop_assert_eq!(d, i);
        }
        for j in 0..3 {
            if let Some(i) = p.j_fixed_point(j) {
                prop_assert_eq!(p.part(i), Some(i as u32 + j));
            }
        }
    }

    #[test]
    fn crank_maps_invert(p in partition(10, 16)) {
        if p.n() >= 2 && p.crank() < 0 {
            let rho = neg_to_pos_crank(&p).unwrap();
            prop_assert!(rho.crank() > 0);
            prop_assert_eq!(rho.beta(), p.beta() + 1);
            prop_assert_eq!(rho.n(), p.n());
            prop_assert_eq!(pos_to_neg_crank(&rho).unwrap(), p.clone());
        }
        if p.crank() > 0 && p.n() >= 2 {
            let lambda = pos_to_neg_crank(&p).unwrap();
            prop_assert_eq!(neg_to_pos_crank(&lambda).unwrap(), p.clone());
        }
        if p.crank() <= 0 {
            prop_assert!(pos_to_neg_crank(&p).is_err());
        }
        if p.crank() >= 0 {
            prop_assert!(neg_to_pos_crank(&p).is_err());
        }
    }

    #[test]
    fn fixed_point_maps_invert(p in partition(10, 16)) {
        if ClassTag::Fstar.contains(&p) {
            let kappa = fixed_star_to_negcrank(&p).unwrap();
            prop_assert!(kappa.crank() < 0);
            prop_assert_eq!(kappa.beta() + 1, ClassTag::Fstar.refined_beta(&p));
            prop_assert_eq!(negcrank_to_fixed(&kappa).unwrap(), p.clone());
        } else {
            prop_assert!(fixed_star_to_negcrank(&p).is_err());
        }
        if p.crank() < 0 {
            let phi = negcrank_to_fixed(&p).unwrap();
            prop_assert_eq!(fixed_star_to_negcrank(&phi).unwrap(), p);
        }
    }

    #[test]
    fn even_mex_map(p in partition(8, 12)) {
        if p.mex() % 2 == 0 && p.n() >= 2 {
            let (mu, reduce) = konan_reduce(&p).unwrap();
            prop_assert!(ClassTag::G1.contains(&mu));
            prop_assert_eq!(mu.n() + 1, p.n());
            prop_assert_eq!(mu.beta(), p.beta());
            prop_assert!(reduce.steps.iter().all(|s| s.state.size() == p.n() as u64));
            let (phi, trace) = even_mex_to_fixed_point(&p).unwrap();
            prop_assert_eq!(g1_insert(&mu).unwrap(), phi.clone());
            prop_assert!(ClassTag::Fstar.contains(&phi));
            prop_assert_eq!(ClassTag::Fstar.refined_beta(&phi), p.beta() + 1);
            prop_assert_eq!(trace.last_state().unwrap().as_partition(), Some(&phi));
        } else if p.mex() % 2 == 1 {
            prop_assert!(even_mex_to_fixed_point(&p).is_err());
        }
    }
}

#[test]
fn even_mex_inverse_tables() {
    for n in 2..=18 {
        let inv = EvenMexInverse::new(n).unwrap();
        for phi in crankmex_core::partitions(n).unwrap() {
            match inv.invert(&phi) {
                Ok(pre) => {
                    assert!(ClassTag::Fstar.contains(&phi));
                    assert_eq!(even_mex_to_fixed_point(&pre).unwrap().0, phi);
                }
                Err(_) => assert!(!ClassTag::Fstar.contains(&phi)),
            }
        }
    }
}
