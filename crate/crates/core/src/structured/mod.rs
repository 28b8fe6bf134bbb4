//! Construction-tree groups: abelian groups, semidirect products of abelian
//! groups under multiplier actions, and their direct products, with fast
//! class-size computation and conversion to permutation groups.

mod expr;
mod metabelian;

pub use expr::{EvalOptions, EvaluatedGroup, GroupExpr};
pub use metabelian::{
    smallest_unit_of_order, AbelianGroup, Component, MetaElement, MetabelianGroup, MultiplierAction,
    DEFAULT_SPECTRUM_CAP,
};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::group_engine::DEFAULT_ENUMERATION_CAP;
    use crate::spectrum::Spectrum;

    fn structured(e: &GroupExpr) -> MetabelianGroup {
        match e.evaluate().unwrap() {
            EvaluatedGroup::Structured(g) => g,
            EvaluatedGroup::Perm(_) => panic!("expected structured"),
        }
    }

    fn f21() -> MetabelianGroup {
        structured(&GroupExpr::frobenius(vec![7], 3))
    }

    #[test]
    fn evaluate_cyclic() {
        let g = structured(&GroupExpr::cyclic(6));
        assert_eq!(g.order().unwrap(), 6);
        assert!(g.is_abelian());
    }

    #[test]
    fn auto_multiplier_is_smallest_of_exact_order() {
        // Units of order 3 mod 7 are {2, 4}.
        assert_eq!(f21().action().multiplier(0, 0), 2);
        assert_eq!(f21().order().unwrap(), 21);
        assert_eq!(smallest_unit_of_order(3, 13), Some(3));
        assert_eq!(smallest_unit_of_order(5, 7), None);
    }

    #[test]
    fn invalid_multiplier_rejected() {
        let e = GroupExpr::Frobenius { kernel: vec![7], complement: 3, multipliers: Some(vec![3]) };
        assert!(matches!(e.evaluate(), Err(Error::InvalidMultiplier(_))));
        let e = GroupExpr::frobenius(vec![7], 5);
        assert!(matches!(e.evaluate(), Err(Error::InvalidMultiplier(_))));
        let e = GroupExpr::Semidirect { kernel: vec![7], top: vec![3], multipliers: vec![vec![7]] };
        assert!(matches!(e.evaluate(), Err(Error::InvalidMultiplier(_))));
    }

    #[test]
    fn coprimality_violation() {
        let e = GroupExpr::frobenius(vec![7], 14);
        assert!(matches!(e.evaluate(), Err(Error::CoprimalityViolation(_))));
    }

    #[test]
    fn frobenius_action_detection() {
        assert!(f21().is_frobenius_action());
        let trivial = structured(&GroupExpr::Semidirect { kernel: vec![7], top: vec![3], multipliers: vec![vec![1]] });
        assert!(!trivial.is_frobenius_action());
        let partial =
            structured(&GroupExpr::Frobenius { kernel: vec![7, 13], complement: 3, multipliers: Some(vec![2, 1]) });
        assert!(!partial.is_frobenius_action());
    }

    #[test]
    fn class_sizes_in_f21() {
        let g = f21();
        assert_eq!(g.class_size(&g.identity()).unwrap(), 1);
        for k in 1..7 {
            let x = MetaElement { kernel: vec![k], top: vec![0] };
            assert_eq!(g.class_size(&x).unwrap(), 3);
        }
        for k in 0..7 {
            for l in 1..3 {
                let x = MetaElement { kernel: vec![k], top: vec![l] };
                assert_eq!(g.class_size(&x).unwrap(), 7);
            }
        }
    }

    #[test]
    fn spectra() {
        let z6 = structured(&GroupExpr::cyclic(6));
        assert_eq!(z6.class_size_spectrum(DEFAULT_SPECTRUM_CAP).unwrap(), Spectrum::abelian(6));
        assert_eq!(f21().class_size_spectrum(DEFAULT_SPECTRUM_CAP).unwrap().to_sorted_vec(), vec![1, 3, 3, 7, 7]);
        let g =
            structured(&GroupExpr::direct(vec![GroupExpr::frobenius(vec![7], 3), GroupExpr::frobenius(vec![11], 5)]));
        let s = g.class_size_spectrum(DEFAULT_SPECTRUM_CAP).unwrap();
        assert_eq!(s.total().unwrap(), 1155);
        assert_eq!(s.sizes(), [1, 3, 5, 7, 11, 15, 33, 35, 77].into());
        // F55 spectrum is {1, 5 (x2), 11 (x4)}; products of multiplicities.
        assert_eq!(s.multiplicity(15), 2 * 2);
        assert_eq!(s.multiplicity(77), 2 * 4);
    }

    #[test]
    fn frobenius_law_matches_orbit_partition() {
        for e in [
            GroupExpr::frobenius(vec![7], 3),
            GroupExpr::frobenius(vec![7, 13], 3),
            GroupExpr::frobenius(vec![5], 4),
            GroupExpr::frobenius(vec![11, 31], 5),
        ] {
            let g = structured(&e);
            assert_eq!(
                g.class_size_spectrum(DEFAULT_SPECTRUM_CAP).unwrap(),
                g.orbit_spectrum(DEFAULT_SPECTRUM_CAP).unwrap(),
                "{e:?}"
            );
        }
    }

    #[test]
    fn spectrum_cap() {
        let g = structured(&GroupExpr::Semidirect { kernel: vec![7, 13], top: vec![3], multipliers: vec![vec![2, 1]] });
        assert_eq!(g.class_size_spectrum(100).unwrap_err(), Error::CapExceeded { cap: 100 });
        assert!(g.class_size_spectrum(1000).is_ok());
    }

    #[test]
    fn permutation_images() {
        let c5 = structured(&GroupExpr::cyclic(5)).to_permutation(DEFAULT_ENUMERATION_CAP).unwrap();
        assert_eq!((c5.degree(), c5.order().unwrap()), (5, 5));
        let p = f21().to_permutation(DEFAULT_ENUMERATION_CAP).unwrap();
        assert_eq!((p.degree(), p.order().unwrap()), (10, 21));
        let g =
            structured(&GroupExpr::direct(vec![GroupExpr::frobenius(vec![7], 3), GroupExpr::frobenius(vec![11], 5)]));
        let p = g.to_permutation(DEFAULT_ENUMERATION_CAP).unwrap();
        assert_eq!((p.degree(), p.order().unwrap()), (26, 1155));
    }

    #[test]
    fn multiplication_is_associative_and_inverse_works() {
        let g = structured(&GroupExpr::Semidirect { kernel: vec![9, 7], top: vec![6], multipliers: vec![vec![2, 3]] });
        let elems: Vec<MetaElement> = g
            .kernel()
            .elements()
            .flat_map(|k| g.top().elements().map(move |l| MetaElement { kernel: k.clone(), top: l }))
            .step_by(7)
            .collect();
        for a in &elems {
            assert_eq!(g.mul(a, &g.inverse(a)), g.identity());
            for b in elems.iter().step_by(3) {
                for c in elems.iter().step_by(5) {
                    assert_eq!(g.mul(&g.mul(a, b), c), g.mul(a, &g.mul(b, c)));
                }
            }
        }
    }

    #[test]
    fn evaluation_is_deterministic() {
        let e = GroupExpr::direct(vec![GroupExpr::frobenius(vec![7, 13], 3), GroupExpr::cyclic(5)]);
        assert_eq!(structured(&e), structured(&e));
    }

    #[test]
    fn mixed_direct_product_becomes_perm() {
        let e = GroupExpr::direct(vec![
            GroupExpr::frobenius(vec![7], 3),
            GroupExpr::Perm { degree: 2, generators: vec![vec![1, 0]] },
        ]);
        let g = e.evaluate().unwrap();
        assert!(matches!(g, EvaluatedGroup::Perm(_)));
        assert_eq!(g.order().unwrap(), 42);
    }

    #[test]
    fn hall_parts() {
        let g = structured(&GroupExpr::direct(vec![
            GroupExpr::frobenius(vec![7], 3),
            GroupExpr::frobenius(vec![11], 5),
            GroupExpr::cyclic(4),
        ]));
        let a = g.hall_part(&[3, 7].into());
        assert_eq!(a.order().unwrap(), 21);
        assert!(a.is_frobenius_action());
        assert!(g.hall_part_is_normal(&[3, 7].into()));
        assert!(g.hall_part_is_normal(&[2].into()));
        // {3, 11}: the 3-part acts on 7, which is outside the set.
        assert!(!g.hall_part_is_normal(&[3, 11].into()));
    }
}
