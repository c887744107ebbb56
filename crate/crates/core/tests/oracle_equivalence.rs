use schub_core::oracle::{calibrate, oracle_restriction_h, Convention, DoubleSchubert, Localizer};
use schub_core::root_weyl::enumerate_group;
use schub_core::root_weyl::perm::element_to_perm;
use schub_core::schubert::{
    restriction_h, restriction_k, structure_constant_h, structure_constant_k, HVariant, KBasis, RecursionSolver,
};
use schub_core::CartanData;

#[test]
fn double_schubert_restrictions_match() {
    for n in [2, 3] {
        let c = CartanData::type_a(n).unwrap();
        let conv = calibrate(&c).unwrap();
        assert_eq!(conv, Convention { inverse: false, ascending_roots: true });
        let group = enumerate_group(&c, 100).unwrap();
        let mut ds = DoubleSchubert::new(n + 1);
        for v in &group {
            for w in &group {
                let got = oracle_restriction_h(&mut ds, &element_to_perm(v), &element_to_perm(w), conv).unwrap();
                assert_eq!(got, restriction_h(&c, v, w));
            }
        }
    }
}

#[test]
fn other_conventions_disagree() {
    let c = CartanData::type_a(2).unwrap();
    let mut ds = DoubleSchubert::new(3);
    for conv in &Convention::ALL[1..] {
        let ok = enumerate_group(&c, 10).unwrap().iter().all(|w| {
            let v = &enumerate_group(&c, 10).unwrap()[1];
            oracle_restriction_h(&mut ds, &element_to_perm(v), &element_to_perm(w), *conv).ok()
                == Some(restriction_h(&c, v, w))
        });
        assert!(!ok, "{conv:?}");
    }
}

#[test]
fn localization_matches_on_rank_two() {
    for c in [CartanData::type_a(2).unwrap(), CartanData::type_b(2).unwrap()] {
        let group = enumerate_group(&c, 100).unwrap();
        let lh = Localizer::new(&c, &group, |v, x| restriction_h(&c, v, x));
        let lk = Localizer::new(&c, &group, |v, x| restriction_k(&c, v, x, KBasis::Ideal));
        let lk0 = Localizer::new(&c, &group, |v, x| restriction_k(&c, v, x, KBasis::Structure));
        let mut rec = RecursionSolver::new(&c);
        for u in lh.group() {
            for v in lh.group() {
                let (h, k, k0) = (lh.solve(u, v).unwrap(), lk.solve(u, v).unwrap(), lk0.solve(u, v).unwrap());
                for (i, w) in lh.group().iter().enumerate() {
                    let direct = structure_constant_h(&c, u, v, w, HVariant::Ddr);
                    assert_eq!(h[i], direct);
                    assert_eq!(rec.solve(u, v, w), direct);
                    assert_eq!(structure_constant_h(&c, u, v, w, HVariant::Rdd), direct);
                    assert_eq!(k[i], structure_constant_k(&c, u, v, w, KBasis::Ideal));
                    assert_eq!(k0[i], structure_constant_k(&c, u, v, w, KBasis::Structure));
                }
            }
        }
    }
}
