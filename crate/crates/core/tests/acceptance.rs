//! The twelve acceptance criteria, at exact rational arithmetic. Runs as a
//! plain binary so each verdict line is always printed.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use kantor_core::bridge::{
    bridge_maps, double_m21, lemma_suite_kantor, lemma_suite_mm, mu_normalize, star_suite, structurable_of_left_unital,
    twist,
};
use kantor_core::chevalley::{
    balanced_twist, chevalley_algebra, chevalley_phi, freudenthal_product, highest_root_grading, kantor_on_g1,
    ChevalleyType,
};
use kantor_core::corpus;
use kantor_core::exact::{eigenprojections, operator_inverse};
use kantor_core::lie::{
    align_to_osp12, b01_decompose_system, b01_left_unit_check, build_gu, check_grading, check_super_jacobi,
    osp12_model, phi_of_gu, recover_fkts, twist_isomorphism,
};
use kantor_core::structurable::{
    check_structurable, derived_kts_report, kts_from_structurable, twisted_kts, AlgebraMorphism, InvolutiveAlgebra,
};
use kantor_core::triple::{check_fkts, special_unitary_report, SignPair, TripleSystem};
use kantor_core::{LinearOperator, Report, Scalar, Vector};

type Outcome = Result<String, String>;

fn passed(r: &Report) -> Result<(), String> {
    match r.first_failure() {
        None => Ok(()),
        Some(c) => Err(format!(
            "{} [{}]: {} {}",
            r.subject,
            r.suite,
            c.name,
            c.witness.as_ref().map(|w| w.to_string()).unwrap_or_default()
        )),
    }
}

fn ensure(cond: bool, what: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn e<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn algebras() -> Vec<InvolutiveAlgebra> {
    vec![
        corpus::unit_field(),
        corpus::split_pair(),
        corpus::quat(),
        corpus::mat2_transpose(),
    ]
}

fn pairs() -> Vec<(InvolutiveAlgebra, AlgebraMorphism)> {
    vec![
        (corpus::unit_field(), AlgebraMorphism::new(LinearOperator::identity(1))),
        (corpus::split_pair(), corpus::split_pair_swap()),
        (corpus::quat(), corpus::quat_conj_i()),
        (corpus::mat2_transpose(), corpus::mat2_conj_diag()),
    ]
}

fn minus() -> SignPair {
    SignPair::new(-1, -1).unwrap()
}

fn structurable_suite() -> Outcome {
    for a in algebras() {
        passed(&check_structurable(&a))?;
    }
    Ok("unit-field, split-pair, quat, mat2-transpose".into())
}

fn kantor_derivation() -> Outcome {
    for a in algebras() {
        let t = e(kts_from_structurable(&a))?;
        passed(&check_fkts(&t, SignPair::KANTOR))?;
        let r = derived_kts_report(&t, a.unit());
        ensure(
            r.check("eex = x").is_some() && r.check("2 xee + exe = 3x").is_some(),
            "missing unit checks",
        )?;
        passed(&r)?;
    }
    Ok("fkts(-1,1), eex = x, 2 xee + exe = 3x at e = 1".into())
}

fn roundtrip() -> Outcome {
    for (a, s) in pairs() {
        let t = e(twisted_kts(&a, &s))?;
        let (b, s2) = e(structurable_of_left_unital(&t, a.unit()))?;
        ensure(b.product_tensor() == a.product_tensor(), "product not recovered")?;
        ensure(b.involution() == a.involution(), "involution not recovered")?;
        ensure(s2 == s, "sigma not recovered")?;
        let t2 = e(twisted_kts(&b, &s2))?;
        ensure(t2.tensor() == t.tensor(), "triple tensor not recovered")?;
    }
    Ok("(A, sigma) -> T -> (A, sigma) -> T exact for 4 pairs".into())
}

fn left_unital_kantor() -> Result<Vec<(TripleSystem, Vector)>, String> {
    let mut out = Vec::new();
    for a in algebras() {
        out.push((e(kts_from_structurable(&a))?, a.unit().clone()));
    }
    for (a, s) in pairs().into_iter().skip(1) {
        out.push((e(twisted_kts(&a, &s))?, a.unit().clone()));
    }
    Ok(out)
}

fn lemma_suites() -> Outcome {
    let systems = left_unital_kantor()?;
    for (t, u) in &systems {
        passed(&e(lemma_suite_kantor(t, u))?)?;
    }
    passed(&e(lemma_suite_mm(&corpus::scalar_fkts(), &Vector::from_ints(&[1])))?)?;
    passed(&e(lemma_suite_mm(&corpus::swap_fkts(), &Vector::from_ints(&[1, 1])))?)?;
    let t = e(kts_from_structurable(&corpus::quat()))?;
    let m = e(bridge_maps(&t, &Vector::from_ints(&[1, 0, 0, 0])))?;
    let (p1, p3) = e(eigenprojections(&m.rho, (&Scalar::ONE, &Scalar::from_int(3))))?;
    let dims = (p1.rank(), p3.rank());
    ensure(dims == (1, 3), format!("quat eigen-dims {dims:?}"))?;
    Ok(format!(
        "{} Kantor systems, 2 (-1,-1) systems, quat eigen-dims (1,3)",
        systems.len()
    ))
}

fn star() -> Outcome {
    let quat = e(kts_from_structurable(&corpus::quat()))?;
    let split = e(twisted_kts(&corpus::split_pair(), &corpus::split_pair_swap()))?;
    let mut total = 0;
    for (t, u) in [
        (quat, Vector::from_ints(&[1, 0, 0, 0])),
        (split, Vector::from_ints(&[1, 1])),
    ] {
        let r = e(star_suite(&t, &u))?;
        let count = |prefix: &str| r.checks.iter().filter(|c| c.name.starts_with(prefix)).count();
        ensure(count("xye = Lambda(eyx)") == 4, "Lambda table incomplete")?;
        ensure(count("rho(x * y) = ") == 4, "rho(x * y) case table incomplete")?;
        passed(&r)?;
        total += r.checks.len();
    }
    Ok(format!("quat and twisted split-pair, {total} checks"))
}

fn mu_normalization() -> Outcome {
    let u = Vector::from_ints(&[1, 1]);
    let t = e(mu_normalize(&corpus::swap_fkts(), &u))?;
    let n = t.dim();
    let id = LinearOperator::identity(n);
    ensure(e(t.l_op(&u, &u))? == id, "L(e,e) != id")?;
    for i in 0..n {
        let x = Vector::basis(n, i);
        ensure(e(t.product(&u, &x, &u))? == x, "exe != x")?;
    }
    ensure(
        e(t.k_op(&u, &u, &Scalar::from_int(-1)))? == id.scale(&Scalar::from_int(2)),
        "K(e,e) != 2 id",
    )?;
    passed(&special_unitary_report(&t, minus()))?;
    Ok("eex = x = exe, K(e,e) = 2 id, special and unitary".into())
}

fn gu_integrity() -> Outcome {
    let mut systems: Vec<(TripleSystem, SignPair)> = left_unital_kantor()?
        .into_iter()
        .map(|(t, _)| (t, SignPair::KANTOR))
        .collect();
    systems.push((corpus::scalar_fkts(), minus()));
    systems.push((corpus::swap_fkts(), minus()));
    systems.push((corpus::componentwise_pair(), minus()));
    for (t, signs) in &systems {
        let gu = e(build_gu(t, *signs))?;
        passed(&check_super_jacobi(gu.algebra()))?;
        passed(&check_grading(gu.algebra()))?;
        let phi = e(phi_of_gu(&gu))?;
        let back = e(recover_fkts(gu.algebra(), &phi, *signs))?;
        ensure(
            back.tensor() == t.tensor(),
            format!("recover_fkts differs on {:?}", t.label()),
        )?;
    }
    let dims_of = |t: &TripleSystem, s| e(build_gu(t, s)).map(|g| g.degree_dims());
    let ufield = e(kts_from_structurable(&corpus::unit_field()))?;
    ensure(
        dims_of(&ufield, SignPair::KANTOR)? == [0, 1, 1, 1, 0],
        "unit-field dims",
    )?;
    ensure(
        dims_of(&corpus::scalar_fkts(), minus())? == [1, 1, 1, 1, 1],
        "scalar-fkts dims",
    )?;
    ensure(
        dims_of(&corpus::swap_fkts(), minus())? == [2, 2, 2, 2, 2],
        "swap-fkts dims",
    )?;
    Ok(format!(
        "{} systems, dims (0,1,1,1,0) (1,1,1,1,1) (2,2,2,2,2)",
        systems.len()
    ))
}

fn osp_golden() -> Outcome {
    let (model, r) = e(osp12_model())?;
    passed(&r)?;
    ensure(
        r.check("Phi(X) = Y").is_some() && r.check("Phi(X^) = Y^").is_some(),
        "model checks missing",
    )?;
    let m = &model.algebra;
    let x = m.basis(3);
    let xx = m.bracket(&x, &x);
    ensure(xx == m.basis(4).scale(&Scalar::from_int(-2)), "[X,X] != -2E")?;

    let gu = e(build_gu(&corpus::scalar_fkts(), minus()))?;
    let phi = e(phi_of_gu(&gu))?;
    let g = gu.algebra();
    let x = gu.embed_plus(&Vector::from_ints(&[1]));
    let (images, r) = e(align_to_osp12(g, &phi, &x))?;
    passed(&r)?;
    let p = e(LinearOperator::from_columns(&images))?;
    let aligned = e(g.change_basis(&p, m.elements().to_vec()))?;
    ensure(
        aligned.bracket_tensor() == m.bracket_tensor(),
        "structure constants differ",
    )?;
    let carried = e(operator_inverse(&p))?.compose(phi.op()).compose(&p);
    ensure(&carried == model.phi.op(), "Phi differs after alignment")?;
    ensure(e(b01_left_unit_check(g, &phi, &x))?, "e = X fails the left unit check")?;
    Ok("g(scalar-fkts) = osp(1,2) with Phi, [X,X] = -2E, X a left unit".into())
}

fn b01() -> Outcome {
    for (t, u, counts, dim) in [
        (corpus::scalar_fkts(), Vector::from_ints(&[1]), (1, 0, 0), 5),
        (corpus::swap_fkts(), Vector::from_ints(&[1, 1]), (2, 0, 0), 10),
    ] {
        let (_, d) = e(b01_decompose_system(&t, &u))?;
        passed(&d.report)?;
        ensure(d.counts() == counts, format!("counts {:?}", d.counts()))?;
        ensure(5 * counts.0 + 3 * counts.1 + counts.2 == dim, "dimension count")?;
        ensure(
            d.report.check("K(e,x) = 0 for x in U-1").is_some(),
            "K(e,x) check missing",
        )?;
    }
    Ok("(1,0,0) with 5 = 5*1, (2,0,0) with 10 = 5*2".into())
}

fn chevalley_example() -> Outcome {
    for (kind, dims) in [
        (ChevalleyType::A2, [1, 2, 2, 2, 1]),
        (ChevalleyType::A3, [1, 4, 5, 4, 1]),
    ] {
        let l = e(chevalley_algebra(kind))?;
        passed(&l.report())?;
        let g = highest_root_grading(&l);
        passed(&g.report)?;
        ensure(g.dims() == dims, format!("{kind} dims {:?}", g.dims()))?;
        let phi = e(chevalley_phi(&l))?;
        let k = e(kantor_on_g1(&l, &g, &phi))?;
        for name in ["K(u,v) = <u|v> sigma", "sigma^2 = -id", "sigma in K(U,U)"] {
            ensure(k.report.check(name).is_some(), format!("missing {name}"))?;
        }
        passed(&k.report)?;
        let (twisted, r) = e(balanced_twist(&k))?;
        ensure(r.check("K*(u,v) = -<u|v> id").is_some(), "missing K* check")?;
        passed(&r)?;
        passed(&check_fkts(&twisted, SignPair::new(1, 1).unwrap()))?;
        let (_, r) = e(freudenthal_product(&twisted, &k.form))?;
        passed(&r)?;
    }
    Ok("A2 (1,2,2,2,1), A3 (1,4,5,4,1), sigma^2 = -id, balanced (1,1), (uvw) = (vuw)".into())
}

fn sign_flips() -> Outcome {
    let ufield = e(kts_from_structurable(&corpus::unit_field()))?;
    for (t, signs) in [(ufield, SignPair::KANTOR), (corpus::scalar_fkts(), minus())] {
        let (d, s) = e(double_m21(&t, signs))?;
        ensure(s == signs.flip_epsilon(), "double did not flip eps")?;
        passed(&check_fkts(&d, s))?;
    }
    for (a, s) in pairs().into_iter().skip(1) {
        let t = e(kts_from_structurable(&a))?;
        passed(&check_fkts(&t, SignPair::KANTOR))?;
        let (out, out_signs) = e(twist(&t, s.op(), SignPair::KANTOR, None))?;
        ensure(out_signs == SignPair::KANTOR, "involutive twist changed the signs")?;
        passed(&check_fkts(&out, out_signs))?;
    }
    Ok("double flips eps on unit-field, scalar-fkts; 3 involutive twists keep (-1,1)".into())
}

fn twist_iso() -> Outcome {
    for (a, s) in [
        (corpus::quat(), corpus::quat_conj_i()),
        (corpus::split_pair(), corpus::split_pair_swap()),
    ] {
        let t = e(kts_from_structurable(&a))?;
        let (_, r) = e(twist_isomorphism(&t, s.op(), SignPair::KANTOR))?;
        passed(&r)?;
    }
    Ok("(quat, conj-i), (split-pair, swap)".into())
}

type Criterion = (&'static str, fn() -> Outcome, Option<u64>);

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        (
            "structurable identities on the algebra corpus",
            structurable_suite,
            Some(5),
        ),
        ("Kantor systems derived from the corpus", kantor_derivation, Some(10)),
        ("algebra <-> Kantor system roundtrip", roundtrip, Some(30)),
        ("lemma suites and (rho - id)(rho - 3id) = 0", lemma_suites, None),
        ("star product suite", star, None),
        ("mu-normalization of swap-fkts", mu_normalization, None),
        ("g(U) integrity", gu_integrity, Some(60)),
        ("osp(1,2) golden alignment", osp_golden, None),
        ("B(0,1) decomposition", b01, None),
        ("Chevalley example", chevalley_example, Some(60)),
        ("sign-flip laws", sign_flips, None),
        ("twist isomorphism of g(T)", twist_iso, None),
    ];
    let start = Instant::now();
    let mut failures = 0;
    for (i, (name, run, budget)) in criteria.iter().enumerate() {
        let t0 = Instant::now();
        let mut outcome = run();
        let took = t0.elapsed();
        if let (Ok(_), Some(b)) = (&outcome, budget) {
            if took > Duration::from_secs(*b) {
                outcome = Err(format!("took {:.2}s, budget {b}s", took.as_secs_f64()));
            }
        }
        match outcome {
            Ok(detail) => println!(
                "criterion {:>2}: pass  {name} ({detail}) [{:.2}s]",
                i + 1,
                took.as_secs_f64()
            ),
            Err(why) => {
                failures += 1;
                println!(
                    "criterion {:>2}: FAIL  {name}: {why} [{:.2}s]",
                    i + 1,
                    took.as_secs_f64()
                );
            }
        }
    }
    let total = start.elapsed();
    println!("acceptance: {}/12 passed in {:.2}s", 12 - failures, total.as_secs_f64());
    if failures == 0 && total < Duration::from_secs(300) {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
