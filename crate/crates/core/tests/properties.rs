use kantor_core::bridge::{bridge_maps, double_m21, structurable_of_left_unital, twist};
use kantor_core::chevalley::{chevalley_algebra, chevalley_phi, highest_root_grading, kantor_on_g1, ChevalleyType};
use kantor_core::corpus;
use kantor_core::exact::{eigenprojections, operator_inverse, span_basis};
use kantor_core::format::{Metadata, SystemFile, TripleDoc};
use kantor_core::structurable::{kts_from_structurable, twisted_kts};
use kantor_core::triple::{check_fkts, check_gjts, check_kts, SignPair, TripleSystem};
use kantor_core::{LinearOperator, Scalar, Subspace, Vector};
use proptest::prelude::*;

fn int(n: i64) -> Scalar {
    Scalar::from_int(n)
}

fn arb_scalar() -> impl Strategy<Value = Scalar> {
    (-4i64..=4, 1i64..=3).prop_map(|(p, q)| Scalar::new(p, q).unwrap())
}

fn arb_sparse_int() -> impl Strategy<Value = Scalar> {
    prop_oneof![5 => Just(Scalar::ZERO), 1 => (-2i64..=2).prop_map(Scalar::from_int)]
}

fn arb_vector(n: usize) -> impl Strategy<Value = Vector> {
    prop::collection::vec(arb_scalar(), n).prop_map(Vector::new)
}

fn arb_matrix(n: usize) -> impl Strategy<Value = LinearOperator> {
    prop::collection::vec(arb_scalar(), n * n).prop_map(move |e| LinearOperator::from_flat(n, e).unwrap())
}

fn arb_invertible(n: usize) -> impl Strategy<Value = LinearOperator> {
    prop::collection::vec(-2i64..=2, n * n)
        .prop_map(move |e| LinearOperator::from_flat(n, e.into_iter().map(Scalar::from_int).collect()).unwrap())
        .prop_filter("invertible", |m| operator_inverse(m).is_ok())
}

fn arb_triple(n: usize) -> impl Strategy<Value = TripleSystem> {
    prop::collection::vec(arb_sparse_int(), n.pow(4)).prop_map(move |t| TripleSystem::new(n, t).unwrap())
}

fn arb_signs() -> impl Strategy<Value = SignPair> {
    (prop::bool::ANY, prop::bool::ANY)
        .prop_map(|(e, d)| SignPair::new(if e { 1 } else { -1 }, if d { 1 } else { -1 }).unwrap())
}

/// Left-unital Kantor systems from the corpus, with their units.
fn kantor_corpus() -> Vec<(TripleSystem, Vector)> {
    [
        corpus::unit_field(),
        corpus::split_pair(),
        corpus::quat(),
        corpus::mat2_transpose(),
    ]
    .iter()
    .map(|a| (kts_from_structurable(a).unwrap(), a.unit().clone()))
    .collect()
}

/// `(T, S, signs)` with `S` an automorphism of `T` and `S^2 = +-id`.
fn automorphism_corpus() -> Vec<(TripleSystem, LinearOperator, SignPair)> {
    let mut out = vec![
        (
            kts_from_structurable(&corpus::quat()).unwrap(),
            corpus::quat_conj_i().op().clone(),
            SignPair::KANTOR,
        ),
        (
            kts_from_structurable(&corpus::split_pair()).unwrap(),
            corpus::split_pair_swap().op().clone(),
            SignPair::KANTOR,
        ),
        (
            kts_from_structurable(&corpus::mat2_transpose()).unwrap(),
            corpus::mat2_conj_diag().op().clone(),
            SignPair::KANTOR,
        ),
        (
            corpus::componentwise_pair(),
            LinearOperator::from_int_rows(&[&[0, 1], &[1, 0]]).unwrap(),
            SignPair::new(-1, -1).unwrap(),
        ),
    ];
    let l = chevalley_algebra(ChevalleyType::A2).unwrap();
    let k = kantor_on_g1(&l, &highest_root_grading(&l), &chevalley_phi(&l).unwrap()).unwrap();
    out.push((k.system, k.sigma, SignPair::KANTOR));
    out
}

/// Componentwise double twisted by `(x,y) -> (y,-x)`, with no precondition.
fn double_unchecked(t: &TripleSystem) -> TripleSystem {
    let n = t.dim();
    let doubled = TripleSystem::from_records(
        2 * n,
        t.records()
            .flat_map(|(i, j, k, l, v)| [(i, j, k, l, v.clone()), (i + n, j + n, k + n, l + n, v.clone())]),
    )
    .unwrap();
    let sigma = LinearOperator::from_fn(2 * n, |c| {
        if c < n {
            Vector::basis(2 * n, c + n).scale(&int(-1))
        } else {
            Vector::basis(2 * n, c - n)
        }
    });
    doubled.twisted_by(&sigma).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn inverse_is_two_sided(m in (1usize..=4).prop_flat_map(arb_matrix)) {
        if let Ok(inv) = operator_inverse(&m) {
            prop_assert!(inv.compose(&m).is_identity());
            prop_assert!(m.compose(&inv).is_identity());
        } else {
            prop_assert!(m.rank() < m.dim());
        }
    }

    #[test]
    fn eigenprojections_are_complementary(
        (p, picks) in (1usize..=4).prop_flat_map(|n| (arb_invertible(n), prop::collection::vec(prop::bool::ANY, n))),
        r1 in -3i64..=3,
        gap in 1i64..=3,
    ) {
        let n = p.dim();
        let (r1, r2) = (int(r1), int(r1 + gap));
        let d: Vec<Scalar> = picks.iter().map(|&b| if b { r1.clone() } else { r2.clone() }).collect();
        let m = p.compose(&LinearOperator::diagonal(&d)).compose(&operator_inverse(&p).unwrap());
        let (p1, p2) = eigenprojections(&m, (&r1, &r2)).unwrap();
        prop_assert_eq!(p1.compose(&p1), p1.clone());
        prop_assert_eq!(p2.compose(&p2), p2.clone());
        prop_assert!(p1.compose(&p2).is_zero());
        prop_assert!(p2.compose(&p1).is_zero());
        prop_assert_eq!(p1.rank() + p2.rank(), n);
        prop_assert_eq!(p1.rank(), picks.iter().filter(|&&b| b).count());
    }

    #[test]
    fn span_basis_is_idempotent(vs in (1usize..=4).prop_flat_map(|n| prop::collection::vec(arb_vector(n), 0..5).prop_map(move |v| (n, v)))) {
        let (n, vs) = vs;
        let s = Subspace::from_vectors(n, vs.clone()).unwrap();
        let again = Subspace::from_vectors(n, s.basis().to_vec()).unwrap();
        prop_assert_eq!(again.basis(), s.basis());
        for v in &vs {
            prop_assert!(s.contains(v));
        }
    }

    #[test]
    fn operator_span_is_idempotent(ops in prop::collection::vec(arb_matrix(2), 1..5)) {
        let s = span_basis(&ops).unwrap();
        let basis = s.basis();
        let again = span_basis(&basis).unwrap();
        prop_assert_eq!(again.basis(), basis);
        for op in &ops {
            prop_assert!(s.contains(op));
        }
    }

    #[test]
    fn k_is_delta_antisymmetric(
        (t, x, y) in (1usize..=3).prop_flat_map(|n| (arb_triple(n), arb_vector(n), arb_vector(n))),
        delta in prop_oneof![Just(1i64), Just(-1i64)],
    ) {
        let d = int(delta);
        let kxy = t.k_op(&x, &y, &d).unwrap();
        let kyx = t.k_op(&y, &x, &d).unwrap();
        prop_assert_eq!(kxy, kyx.scale(&-&d));
    }

    #[test]
    fn kantor_verdict_is_gjts_and_kts(t in (1usize..=2).prop_flat_map(arb_triple)) {
        let fk = check_fkts(&t, SignPair::KANTOR).passed();
        prop_assert_eq!(fk, check_gjts(&t).passed() && check_kts(&t).passed());
    }

    #[test]
    fn kantor_verdict_on_transported_corpus(i in 0usize..4, p in arb_invertible(4)) {
        let (t, _) = &kantor_corpus()[i];
        let n = t.dim();
        let p = LinearOperator::from_fn(n, |c| Vector::new(p.column(c).entries()[..n].to_vec()));
        prop_assume!(operator_inverse(&p).is_ok());
        let t = t.change_basis(&p).unwrap();
        prop_assert!(check_fkts(&t, SignPair::KANTOR).passed());
        prop_assert!(check_gjts(&t).passed() && check_kts(&t).passed());
    }

    #[test]
    fn double_flips_epsilon(t in (1usize..=2).prop_flat_map(arb_triple), signs in arb_signs()) {
        let d = double_unchecked(&t);
        prop_assert_eq!(check_fkts(&d, signs.flip_epsilon()).passed(), check_fkts(&t, signs).passed());
    }

    #[test]
    fn twist_sign_law(i in 0usize..5, p in arb_invertible(4)) {
        let (t, s, signs) = &automorphism_corpus()[i];
        let n = t.dim();
        let p = LinearOperator::from_fn(n, |c| Vector::new(p.column(c).entries()[..n].to_vec()));
        prop_assume!(operator_inverse(&p).is_ok());
        let t = t.change_basis(&p).unwrap();
        let s = operator_inverse(&p).unwrap().compose(s).compose(&p);
        prop_assert!(check_fkts(&t, *signs).passed());
        let (out, out_signs) = twist(&t, &s, *signs, None).unwrap();
        let expected = if s.compose(&s).is_identity() { *signs } else { signs.flip_epsilon() };
        prop_assert_eq!(out_signs, expected);
        prop_assert!(check_fkts(&out, out_signs).passed());
    }

    #[test]
    fn bridge_relations_on_transported_corpus(i in 0usize..4, p in arb_invertible(4)) {
        let (t, e) = &kantor_corpus()[i];
        let n = t.dim();
        let p = LinearOperator::from_fn(n, |c| Vector::new(p.column(c).entries()[..n].to_vec()));
        prop_assume!(operator_inverse(&p).is_ok());
        let pinv = operator_inverse(&p).unwrap();
        let t = t.change_basis(&p).unwrap();
        let e = pinv.apply(e);
        let m = bridge_maps(&t, &e).unwrap();
        let id = LinearOperator::identity(n);
        let rho3 = &m.rho - &id.scale(&int(3));
        prop_assert!((&m.rho - &id).compose(&rho3).is_zero());
        prop_assert_eq!(m.rho.compose(&m.mu), m.mu.compose(&m.rho));
        prop_assert_eq!(m.rho.compose(&m.rho), m.mu.compose(&m.mu));
        prop_assert!(m.sigma.compose(&m.sigma).is_identity());
        let (a, s) = structurable_of_left_unital(&t, &e).unwrap();
        let back = twisted_kts(&a, &s).unwrap();
        prop_assert_eq!(back.tensor(), t.tensor());
    }

    #[test]
    fn triple_files_roundtrip(
        t in (1usize..=2).prop_flat_map(|n| prop::collection::vec(prop_oneof![3 => Just(Scalar::ZERO), 1 => arb_scalar()], n.pow(4)).prop_map(move |v| TripleSystem::new(n, v).unwrap())),
        signs in prop::option::of(arb_signs()),
        label in prop::option::of("[a-z][a-z0-9-]{0,8}"),
    ) {
        let n = t.dim();
        let system = match &label {
            Some(l) => t.with_label(l.clone()),
            None => t,
        };
        let doc = TripleDoc {
            system,
            signs,
            unit: Some(Vector::basis(n, 0)),
            meta: Metadata::provenance("random"),
        };
        let file = SystemFile::Triple(doc);
        let text = file.to_canonical_string();
        let back = SystemFile::parse(&text).unwrap();
        prop_assert_eq!(back.to_canonical_string(), text);
        let (SystemFile::Triple(a), SystemFile::Triple(b)) = (&file, &back) else { unreachable!() };
        prop_assert_eq!(a.system.tensor(), b.system.tensor());
        prop_assert_eq!(a.signs, b.signs);
    }
}

#[test]
fn double_m21_matches_unchecked_double() {
    for (t, signs) in [
        (corpus::scalar_fkts(), SignPair::new(-1, -1).unwrap()),
        (kts_from_structurable(&corpus::unit_field()).unwrap(), SignPair::KANTOR),
    ] {
        let (d, s) = double_m21(&t, signs).unwrap();
        assert_eq!(d.tensor(), double_unchecked(&t).tensor());
        assert_eq!(s, signs.flip_epsilon());
    }
}
