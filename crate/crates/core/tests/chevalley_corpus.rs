use kantor_core::chevalley::*;
use kantor_core::exact::{Scalar, Vector};
use kantor_core::lie::recover_fkts;
use kantor_core::triple::{SignPair, TripleSystem};

fn setup(kind: ChevalleyType) -> (ChevalleyAlgebra, HighestRootGrading) {
    let l = chevalley_algebra(kind).unwrap();
    assert!(l.report().passed(), "{}", l.report());
    let g = highest_root_grading(&l);
    assert!(g.report.passed(), "{}", g.report);
    (l, g)
}

#[test]
fn dimensions_and_gradings() {
    let expected = [
        (ChevalleyType::A1, 3, [1, 0, 1, 0, 1]),
        (ChevalleyType::A2, 8, [1, 2, 2, 2, 1]),
        (ChevalleyType::A3, 15, [1, 4, 5, 4, 1]),
        (ChevalleyType::C2, 10, [1, 2, 4, 2, 1]),
    ];
    for (kind, dim, dims) in expected {
        let (l, g) = setup(kind);
        assert_eq!(l.dim(), dim, "{kind}");
        assert_eq!(g.dims(), dims, "{kind}");
        assert_eq!(g.degenerate, kind == ChevalleyType::A1);
    }
    let (l, _) = setup(ChevalleyType::A2);
    let roots: Vec<Vec<i64>> = l.roots.iter().flatten().map(|r| r.coeffs.clone()).collect();
    for r in [[1, 0], [0, 1], [1, 1], [-1, 0], [0, -1], [-1, -1]] {
        assert!(roots.contains(&r.to_vec()));
    }
    assert_eq!(roots.len(), 6);
    assert!("B7".parse::<ChevalleyType>().is_err());
    assert_eq!("a3".parse::<ChevalleyType>().unwrap(), ChevalleyType::A3);
}

#[test]
fn phi_is_the_chevalley_involution() {
    for kind in ChevalleyType::ALL {
        let (l, _) = setup(kind);
        let phi = chevalley_phi(&l).unwrap();
        let g = &l.algebra;
        assert_eq!(phi.apply(&g.basis(l.highest)), -&g.basis(l.lowest));
        let h_rho = g.bracket(&g.basis(l.highest), &g.basis(l.lowest));
        assert_eq!(phi.apply(&h_rho), -&h_rho);
        assert!(phi.op().compose(phi.op()).is_identity());
    }
}

#[test]
fn kantor_systems_on_g1() {
    for kind in [ChevalleyType::A2, ChevalleyType::A3, ChevalleyType::C2] {
        let (l, g) = setup(kind);
        let phi = chevalley_phi(&l).unwrap();
        let k = kantor_on_g1(&l, &g, &phi).unwrap();
        assert!(k.report.passed(), "{}", k.report);
        assert_eq!(k.system.dim(), g.dims()[3]);
        let recovered = recover_fkts(&l.algebra, &phi, SignPair::KANTOR).unwrap();
        assert_eq!(recovered.tensor(), k.system.tensor());

        let (twisted, r) = balanced_twist(&k).unwrap();
        assert!(r.passed(), "{r}");
        let n = twisted.dim();
        for u in 0..n {
            assert!(twisted
                .k_op(&Vector::basis(n, u), &Vector::basis(n, u), &Scalar::ONE)
                .unwrap()
                .is_zero());
        }

        let (fts, r) = freudenthal_product(&twisted, &k.form).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(fts.dim(), n);
    }
    let (l, g) = setup(ChevalleyType::A2);
    let phi = chevalley_phi(&l).unwrap();
    let k = kantor_on_g1(&l, &g, &phi).unwrap();
    assert_eq!(k.system.dim(), 2);
    assert!(k.form[0][1] == Scalar::ONE || k.form[0][1] == Scalar::from_int(-1));
    assert!(k.form[0][0].is_zero());
}

#[test]
fn a1_is_degenerate() {
    let (l, g) = setup(ChevalleyType::A1);
    let phi = chevalley_phi(&l).unwrap();
    assert!(kantor_on_g1(&l, &g, &phi).is_err());
}

#[test]
fn freudenthal_with_zero_form_is_the_input() {
    let t = TripleSystem::from_records(1, [(0, 0, 0, 0, Scalar::from_int(3))]).unwrap();
    let (out, r) = freudenthal_product(&t, &[vec![Scalar::ZERO]]).unwrap();
    assert!(r.passed());
    assert_eq!(out.tensor(), t.tensor());
}
