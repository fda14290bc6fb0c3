use kantor_core::bridge::*;
use kantor_core::corpus::*;
use kantor_core::structurable::*;
use kantor_core::triple::*;
use kantor_core::{LinearOperator, Vector};

fn one4() -> Vector {
    Vector::from_ints(&[1, 0, 0, 0])
}

#[test]
fn structurable_corpus_passes() {
    for a in [unit_field(), split_pair(), quat(), mat2_transpose()] {
        let r = check_structurable(&a);
        assert!(r.passed(), "{r}");
    }
    let r = check_structurable(&split_pair_with(LinearOperator::identity(2)));
    assert!(r.passed(), "{r}");
    let r = check_structurable(&quat_identity_involution());
    assert!(!r.passed());
}

#[test]
fn quat_kantor_system() {
    let t = kts_from_structurable(&quat()).unwrap();
    let r = lemma_suite_kantor(&t, &one4()).unwrap();
    assert!(r.passed(), "{r}");
    let r = star_suite(&t, &one4()).unwrap();
    assert!(r.passed(), "{r}");
    let (a, s) = structurable_of_left_unital(&t, &one4()).unwrap();
    assert_eq!(a.product_tensor(), quat().product_tensor());
    assert!(s.op().is_identity());
}

#[test]
fn twisted_roundtrips() {
    let cases = [
        (split_pair(), split_pair_swap()),
        (quat(), quat_conj_i()),
        (mat2_transpose(), mat2_conj_diag()),
        (unit_field(), AlgebraMorphism::new(LinearOperator::identity(1))),
    ];
    for (a, s) in cases {
        let t = twisted_kts(&a, &s).unwrap();
        let e = a.unit().clone();
        let r = lemma_suite_kantor(&t, &e).unwrap();
        assert!(r.passed(), "{r}");
        let r = star_suite(&t, &e).unwrap();
        assert!(r.passed(), "{r}");
        let r = sigma_check(&t, &e).unwrap();
        assert!(r.passed(), "{r}");
        let (b, s2) = structurable_of_left_unital(&t, &e).unwrap();
        assert_eq!(b.product_tensor(), a.product_tensor());
        assert_eq!(b.involution(), a.involution());
        assert_eq!(s2, s);
    }
}

#[test]
fn mm_systems() {
    let e = Vector::from_ints(&[1, 1]);
    let t = swap_fkts();
    assert!(check_fkts(&t, SignPair::new(-1, -1).unwrap()).passed());
    let r = lemma_suite_mm(&t, &e).unwrap();
    assert!(r.passed(), "{r}");
    let n = mu_normalize(&t, &e).unwrap();
    assert_eq!(n.tensor(), componentwise_pair().tensor());
}

#[test]
fn skew_twists() {
    let t = skew_twist_11(&quat(), &Vector::from_ints(&[0, 1, 0, 0])).unwrap();
    assert!(check_fkts(&t, SignPair::new(1, 1).unwrap()).passed());
    assert!(skew_twist_11(&quat(), &one4()).is_err());
    let t = skew_twist_11(&split_pair(), &Vector::from_ints(&[1, -1])).unwrap();
    assert!(check_fkts(&t, SignPair::new(1, 1).unwrap()).passed());
}

#[test]
fn bilinear_form_is_gjts_but_not_kantor() {
    // xyz = (x|y)z on F^2: the L-identities survive, the K-identities do not.
    let t = bilinear_form_system(&[1, 1]);
    assert!(check_gjts(&t).passed());
    assert!(!check_kts(&t).passed());
    let r = lemma_suite_kantor(&t, &Vector::from_ints(&[1, 0])).unwrap();
    for name in ["L(xye,e) = L(e,yxe)", "rho^2 = mu^2", "K(u,e)e = (rho - id)u"] {
        assert!(r.check(name).unwrap().passed, "{name}");
    }
    for name in ["K(u,v) = 1/2 K(K(u,v)e,e)", "(rho - id)(rho - 3id) = 0"] {
        let c = r.check(name).unwrap();
        assert!(!c.passed && c.witness.is_some(), "{name}");
    }
}
