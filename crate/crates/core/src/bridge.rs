//! Left units and the maps they induce: `rho(x) = xee`, `mu(x) = exe`,
//! the involutive automorphism `sigma`, the star product, and the
//! conversions between left-unital triple systems and structurable
//! algebras, together with twisting constructions.

use crate::error::Error;
use crate::exact::{eigenprojections, operator_inverse, span_basis_in, LinearOperator, Scalar, Subspace, Vector};
use crate::report::{Check, Report, Witness};
use crate::structurable::{
    algebra_automorphism_report, check_structurable, kts_from_structurable, twisted_kts, AlgebraMorphism,
    InvolutiveAlgebra,
};
use crate::sweep::{first_failure, first_failure_in};
use crate::triple::{
    check_fkts, check_special, check_unitary, is_left_unit, morphism_witness, operator_mismatch, subject, SignPair,
    TripleSystem,
};

fn int(n: i64) -> Scalar {
    Scalar::from_int(n)
}

/// Which family of left-unital systems the maps were computed for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnitalCase {
    /// Kantor systems: `rho` has eigenvalues 1 and 3, `sigma = mu^-1 (3 - 2 rho)`.
    Kantor,
    /// (-1,-1) systems: `rho` and `mu` are involutions, `sigma = mu`.
    MinusMinus,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BridgeMaps {
    pub case: UnitalCase,
    pub unit: Vector,
    pub rho: LinearOperator,
    pub mu: LinearOperator,
    pub rho_hat: LinearOperator,
    pub sigma: LinearOperator,
    pub mu_inv: LinearOperator,
}

fn rho_mu(t: &TripleSystem, e: &Vector) -> (LinearOperator, LinearOperator) {
    let n = t.dim();
    let rho = LinearOperator::from_fn(n, |k| t.prod(&Vector::basis(n, k), e, e));
    let mu = LinearOperator::from_fn(n, |k| t.prod(e, &Vector::basis(n, k), e));
    (rho, mu)
}

fn require_left_unit(t: &TripleSystem, e: &Vector) -> Result<(), Error> {
    e.check_dim(t.dim())?;
    if is_left_unit(t, e) {
        Ok(())
    } else {
        Err(Error::NotLeftUnit(e.to_string()))
    }
}

fn require(report: &Report, what: &str) -> Result<(), Error> {
    match report.first_failure() {
        None => Ok(()),
        Some(c) => Err(Error::invalid(format!("{what}: {}", c.name), c.witness.clone())),
    }
}

fn singular_mu() -> Error {
    Error::hypothesis("mu: x -> exe is singular, which cannot happen for a left-unital Kantor or (-1,-1) system")
}

/// `rho`, `mu`, `rho_hat = 3 id - 2 rho` and `sigma = mu^-1 rho_hat` for a
/// left unit of a Kantor triple system, with their defining relations
/// verified.
pub fn bridge_maps(t: &TripleSystem, e: &Vector) -> Result<BridgeMaps, Error> {
    require_left_unit(t, e)?;
    let n = t.dim();
    let (rho, mu) = rho_mu(t, e);
    let mu_inv = operator_inverse(&mu).map_err(|_| singular_mu())?;
    let id = LinearOperator::identity(n);
    let rho_hat = &id.scale(&int(3)) - &rho.scale(&int(2));
    let sigma = mu_inv.compose(&rho_hat);
    let maps = BridgeMaps {
        case: UnitalCase::Kantor,
        unit: e.clone(),
        rho,
        mu,
        rho_hat,
        sigma,
        mu_inv,
    };
    require(&relations_report(&maps), "left unit relations")?;
    Ok(maps)
}

/// `rho` and `mu` for a left unit of a (-1,-1) system; here `sigma = mu`.
pub fn bridge_maps_mm(t: &TripleSystem, e: &Vector) -> Result<BridgeMaps, Error> {
    require_left_unit(t, e)?;
    let n = t.dim();
    let (rho, mu) = rho_mu(t, e);
    let mu_inv = operator_inverse(&mu).map_err(|_| singular_mu())?;
    let id = LinearOperator::identity(n);
    let rho_hat = &id.scale(&int(3)) - &rho.scale(&int(2));
    let maps = BridgeMaps {
        case: UnitalCase::MinusMinus,
        unit: e.clone(),
        sigma: mu.clone(),
        rho,
        mu,
        rho_hat,
        mu_inv,
    };
    require(&relations_report(&maps), "left unit relations")?;
    Ok(maps)
}

fn relations_report(m: &BridgeMaps) -> Report {
    let n = m.rho.dim();
    let id = LinearOperator::identity(n);
    let mut r = Report::new("bridge maps", "relations");
    let rr = m.rho.compose(&m.rho);
    let mm = m.mu.compose(&m.mu);
    match m.case {
        UnitalCase::Kantor => {
            let p = (&m.rho - &id).compose(&(&m.rho - &id.scale(&int(3))));
            r.push(Check::from_sweep(
                "(rho - id)(rho - 3id) = 0",
                operator_mismatch(&[], &p, &LinearOperator::zero(n)),
            ));
            r.push(Check::from_sweep(
                "rho mu = mu rho",
                operator_mismatch(&[], &m.rho.compose(&m.mu), &m.mu.compose(&m.rho)),
            ));
            r.push(Check::from_sweep("rho^2 = mu^2", operator_mismatch(&[], &rr, &mm)));
            r.push(Check::from_sweep(
                "sigma^2 = id",
                operator_mismatch(&[], &m.sigma.compose(&m.sigma), &id),
            ));
        }
        UnitalCase::MinusMinus => {
            r.push(Check::from_sweep("rho^2 = id", operator_mismatch(&[], &rr, &id)));
            r.push(Check::from_sweep("mu^2 = id", operator_mismatch(&[], &mm, &id)));
        }
    }
    r
}

/// The eigenspace split of `rho` with the associated scalars.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenProfile {
    /// Eigenvalues of `rho` on the two components: `(1, 3)` or `(1, -1)`.
    pub alpha: (Scalar, Scalar),
    /// Eigenvalues of `rho_hat` on the two components (Kantor case).
    pub beta: Option<(Scalar, Scalar)>,
    pub projections: (LinearOperator, LinearOperator),
    pub components: (Subspace, Subspace),
    /// `lambda[a][b]` is the operator with `xye = lambda[a][b](eyx)` for
    /// `x` in component `a` and `y` in component `b` (Kantor case).
    pub lambda: Option<[[LinearOperator; 2]; 2]>,
}

impl EigenProfile {
    pub fn dims(&self) -> (usize, usize) {
        (self.components.0.dim(), self.components.1.dim())
    }

    pub fn component(&self, which: usize) -> &Subspace {
        if which == 0 {
            &self.components.0
        } else {
            &self.components.1
        }
    }
}

pub fn eigen_profile(m: &BridgeMaps) -> Result<EigenProfile, Error> {
    let n = m.rho.dim();
    let id = LinearOperator::identity(n);
    let second = match m.case {
        UnitalCase::Kantor => int(3),
        UnitalCase::MinusMinus => int(-1),
    };
    let (p1, p2) = eigenprojections(&m.rho, (&Scalar::ONE, &second))?;
    let components = (p1.image(), p2.image());
    let (beta, lambda) = match m.case {
        UnitalCase::Kantor => {
            let third = Scalar::new(1, 3).expect("nonzero denominator");
            let lam = [[id.clone(), id.clone()], [-&m.rho_hat, m.rho_hat.scale(&third)]];
            (Some((Scalar::ONE, int(-3))), Some(lam))
        }
        UnitalCase::MinusMinus => (None, None),
    };
    Ok(EigenProfile {
        alpha: (Scalar::ONE, second),
        beta,
        projections: (p1, p2),
        components,
        lambda,
    })
}

/// The binary product `x * y = e mu^-1(x) y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarProduct {
    dim: usize,
    tensor: Vec<Scalar>,
}

impl StarProduct {
    pub fn new(t: &TripleSystem, m: &BridgeMaps) -> Self {
        let n = t.dim();
        let mut tensor = Vec::with_capacity(n * n * n);
        for i in 0..n {
            let a = m.mu_inv.column(i);
            for j in 0..n {
                tensor.extend(t.prod(&m.unit, &a, &Vector::basis(n, j)).into_entries());
            }
        }
        StarProduct { dim: n, tensor }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn tensor(&self) -> &[Scalar] {
        &self.tensor
    }

    pub fn mul(&self, x: &Vector, y: &Vector) -> Vector {
        let n = self.dim;
        let mut out = Vector::zeros(n);
        for (i, xi) in x.support() {
            for (j, yj) in y.support() {
                let o = (i * n + j) * n;
                out.add_scaled_slice(&(xi * yj), &self.tensor[o..o + n]);
            }
        }
        out
    }
}

fn vec_check(name: &str, ranges: &[usize], f: impl Fn(&[usize]) -> (Vector, Vector) + Sync) -> Check {
    Check::from_sweep(
        name,
        first_failure_in(ranges, |w| {
            let (l, r) = f(w);
            (l != r).then(|| Witness::new(w.to_vec(), l, r))
        }),
    )
}

/// Identities satisfied by a left unit of a Kantor triple system, each
/// reported separately.
pub fn lemma_suite_kantor(t: &TripleSystem, e: &Vector) -> Result<Report, Error> {
    require_left_unit(t, e)?;
    let n = t.dim();
    let b = |i| Vector::basis(n, i);
    let (rho, mu) = rho_mu(t, e);
    let id = LinearOperator::identity(n);
    let mut r = Report::new(subject(t), "lemmas-kantor");
    push_left_unit_lemmas(&mut r, t, e, &rho, &mu);

    let k = |u: &Vector, v: &Vector| t.k(u, v, 1);
    r.push(vec_check("K(u,e)e = (rho - id)u", &[n], |w| {
        (k(&b(w[0]), e).apply(e), (&rho - &id).column(w[0]))
    }));
    r.push(Check::from_sweep(
        "K(u,v) = 1/2 K(K(u,v)e,e)",
        first_failure(n, 2, |w| {
            let kuv = k(&b(w[0]), &b(w[1]));
            let rhs = k(&kuv.apply(e), e).scale(&Scalar::new(1, 2).expect("nonzero"));
            operator_mismatch(w, &kuv, &rhs)
        }),
    ));
    let p = (&rho - &id).compose(&(&rho - &id.scale(&int(3))));
    r.push(Check::from_sweep(
        "(rho - id)(rho - 3id) = 0",
        operator_mismatch(&[], &p, &LinearOperator::zero(n)),
    ));
    Ok(r)
}

fn push_left_unit_lemmas(r: &mut Report, t: &TripleSystem, e: &Vector, rho: &LinearOperator, mu: &LinearOperator) {
    let n = t.dim();
    let b = |i| Vector::basis(n, i);
    r.push(Check::from_sweep(
        "L(xye,e) = L(e,yxe)",
        first_failure(n, 2, |w| {
            let (x, y) = (b(w[0]), b(w[1]));
            operator_mismatch(w, &t.l(&t.prod(&x, &y, e), e), &t.l(e, &t.prod(&y, &x, e)))
        }),
    ));
    r.push(Check::from_sweep(
        "L(rho x,e) = L(e,mu x)",
        first_failure(n, 1, |w| {
            operator_mismatch(w, &t.l(&rho.column(w[0]), e), &t.l(e, &mu.column(w[0])))
        }),
    ));
    r.push(Check::from_sweep(
        "L(mu x,e) = L(e,rho x)",
        first_failure(n, 1, |w| {
            operator_mismatch(w, &t.l(&mu.column(w[0]), e), &t.l(e, &rho.column(w[0])))
        }),
    ));
    r.push(Check::from_sweep(
        "rho^2 = mu^2",
        operator_mismatch(&[], &rho.compose(rho), &mu.compose(mu)),
    ));
    r.push(Check::from_sweep(
        "rho mu = mu rho",
        operator_mismatch(&[], &rho.compose(mu), &mu.compose(rho)),
    ));
}

const COMPONENT: [&str; 2] = ["U1", "U3"];

/// The star-product identities: unit, `exy` and `xey` in terms of the
/// star product, the expansion of `xyz`, and the per-component tables
/// for `xye` and `rho(x * y)`.
pub fn star_suite(t: &TripleSystem, e: &Vector) -> Result<Report, Error> {
    let m = bridge_maps(t, e)?;
    let prof = eigen_profile(&m)?;
    let star = StarProduct::new(t, &m);
    let n = t.dim();
    let b = |i| Vector::basis(n, i);
    let rho_inv = operator_inverse(&m.rho)?;
    let mu_rho_inv = m.mu.compose(&rho_inv);
    let mut r = Report::new(subject(t), "star");

    r.push(vec_check("e * x = x", &[n], |w| (star.mul(e, &b(w[0])), b(w[0]))));
    r.push(vec_check("x * e = x", &[n], |w| (star.mul(&b(w[0]), e), b(w[0]))));
    r.push(vec_check("exy = mu(x) * y", &[n, n], |w| {
        (t.prod(e, &b(w[0]), &b(w[1])), star.mul(&m.mu.column(w[0]), &b(w[1])))
    }));
    r.push(vec_check("xey = rho(x) * y", &[n, n], |w| {
        (t.prod(&b(w[0]), e, &b(w[1])), star.mul(&m.rho.column(w[0]), &b(w[1])))
    }));
    r.push(vec_check(
        "xyz = x * (mu(y) * z) - mu(y) * (x * z) + mu(mu rho^-1(x) * y) * z",
        &[n, n, n],
        |w| {
            let (x, y, z) = (b(w[0]), b(w[1]), b(w[2]));
            let muy = m.mu.column(w[1]);
            let mut rhs = star.mul(&x, &star.mul(&muy, &z));
            rhs.add_scaled(&int(-1), &star.mul(&muy, &star.mul(&x, &z)));
            let inner = m.mu.apply(&star.mul(&mu_rho_inv.column(w[0]), &y));
            rhs.add_scaled(&Scalar::ONE, &star.mul(&inner, &z));
            (t.prod(&x, &y, &z), rhs)
        },
    ));

    let lambda = prof.lambda.as_ref().expect("Kantor profile carries the table");
    for a in 0..2 {
        for c in 0..2 {
            let (ba, bc) = (prof.component(a).basis(), prof.component(c).basis());
            let name = format!("xye = Lambda(eyx), x in {}, y in {}", COMPONENT[a], COMPONENT[c]);
            r.push(vec_check(&name, &[ba.len(), bc.len()], |w| {
                let (x, y) = (&ba[w[0]], &bc[w[1]]);
                (t.prod(x, y, e), lambda[a][c].apply(&t.prod(e, y, x)))
            }));
        }
    }
    for a in 0..2 {
        for c in 0..2 {
            let (ba, bc) = (prof.component(a).basis(), prof.component(c).basis());
            let (p, q) = match (a, c) {
                (0, 0) | (1, 1) => (2, -1),
                (0, 1) => (0, 3),
                _ => (4, -1),
            };
            let formula = match (p, q) {
                (0, _) => "3 y * x".to_string(),
                _ => format!("{p} x * y - y * x"),
            };
            let name = format!("rho(x * y) = {formula}, x in {}, y in {}", COMPONENT[a], COMPONENT[c]);
            r.push(vec_check(&name, &[ba.len(), bc.len()], |w| {
                let (x, y) = (&ba[w[0]], &bc[w[1]]);
                let xy = star.mul(x, y);
                let mut rhs = xy.scale(&int(p));
                rhs.add_scaled(&int(q), &star.mul(y, x));
                (m.rho.apply(&xy), rhs)
            }));
        }
    }
    Ok(r)
}

/// `sigma^2 = id` and `sigma` is an automorphism of the triple system.
pub fn sigma_check(t: &TripleSystem, e: &Vector) -> Result<Report, Error> {
    let m = bridge_maps(t, e)?;
    let mut r = Report::new(subject(t), "sigma");
    r.push(Check::from_sweep(
        "sigma^2 = id",
        operator_mismatch(&[], &m.sigma.compose(&m.sigma), &LinearOperator::identity(t.dim())),
    ));
    r.push(Check::from_sweep(
        "sigma(xyz) = sigma(x)sigma(y)sigma(z)",
        morphism_witness(t, t, &m.sigma),
    ));
    Ok(r)
}

/// The system `{xyz} = x S(y) z`.
///
/// Without `square_scalar`, `S` must be an automorphism with
/// `S^2 = +-id`. With `square_scalar = m`, `S` must satisfy `S^2 = +-m id`
/// and `S(x)S(y)S(z) = m S(xyz)`. The new signs are `(+-eps, delta)` and
/// are verified on the output.
pub fn twist(
    t: &TripleSystem,
    s: &LinearOperator,
    signs: SignPair,
    square_scalar: Option<&Scalar>,
) -> Result<(TripleSystem, SignPair), Error> {
    s.check_dim(t.dim())?;
    operator_inverse(s)?;
    let n = t.dim();
    let m = square_scalar.cloned().unwrap_or(Scalar::ONE);
    if m.is_zero() {
        return Err(Error::hypothesis("twisting scalar must be nonzero"));
    }
    let sq = s.compose(s);
    let out_signs = if sq == LinearOperator::scalar(n, m.clone()) {
        signs
    } else if sq == LinearOperator::scalar(n, -&m) {
        signs.flip_epsilon()
    } else {
        return Err(Error::hypothesis(format!("S^2 is not +-{m} id")));
    };
    let scaled = TripleSystem::new(n, t.tensor().iter().map(|v| v * &m).collect())?;
    if let Some(w) = morphism_witness(&scaled, t, s) {
        let what = if square_scalar.is_some() {
            format!("S(x)S(y)S(z) != {m} S(xyz)")
        } else {
            "S is not an automorphism".to_string()
        };
        return Err(Error::invalid(what, Some(w)));
    }
    let mut out = t.twisted_by(s)?;
    if let Some(l) = t.label() {
        out = out.with_label(format!("{l}~"));
    }
    require(&check_fkts(&out, out_signs), "twisted system")?;
    Ok((out, out_signs))
}

/// Componentwise product on pairs, twisted by `(x,y) -> (y,-x)`.
pub fn double_m21(t: &TripleSystem, signs: SignPair) -> Result<(TripleSystem, SignPair), Error> {
    require(&check_fkts(t, signs), "input system")?;
    let n = t.dim();
    let doubled = TripleSystem::from_records(
        2 * n,
        t.records()
            .flat_map(|(i, j, k, l, v)| [(i, j, k, l, v.clone()), (i + n, j + n, k + n, l + n, v.clone())]),
    )?;
    let sigma = LinearOperator::from_fn(2 * n, |c| {
        if c < n {
            Vector::basis(2 * n, c + n).scale(&int(-1))
        } else {
            Vector::basis(2 * n, c - n)
        }
    });
    let (mut out, s) = twist(&doubled, &sigma, signs, None)?;
    if let Some(l) = t.label() {
        out = out.with_label(format!("{l}-doubled"));
    }
    Ok((out, s))
}

/// Certifies that an element of the K-span squaring to a scalar acts as
/// a (scaled) automorphism, and that the twist by it is a (delta,delta)
/// system.
pub fn sigma_in_k_check(
    t: &TripleSystem,
    s: &LinearOperator,
    signs: SignPair,
    square_scalar: Option<&Scalar>,
) -> Result<Report, Error> {
    s.check_dim(t.dim())?;
    let n = t.dim();
    let (_, ks) = t.basis_operators(signs.delta_sign());
    let span = span_basis_in(n, ks.iter())?;
    if !span.contains(s) {
        return Err(Error::hypothesis("operator is not in the span of the K(x,y)"));
    }
    let eps = signs.epsilon();
    let ed = &eps * &signs.delta();
    let m = square_scalar.cloned().unwrap_or_else(|| ed.clone());
    if m.is_zero() || s.compose(s) != LinearOperator::scalar(n, m.clone()) {
        return Err(Error::hypothesis(format!("S^2 is not {m} id")));
    }
    let b = |i| Vector::basis(n, i);
    let cols = s.columns();
    let mut r = Report::new(subject(t), "sigma in K");
    r.push(vec_check(
        "sigma(xyz) = -eps sigma(x)zy + eps yx sigma(z) + eps delta yz sigma(x)",
        &[n, n, n],
        |w| {
            let (x, y, z) = (b(w[0]), b(w[1]), b(w[2]));
            let mut rhs = t.prod(&cols[w[0]], &z, &y).scale(&-&eps);
            rhs.add_scaled(&eps, &t.prod(&y, &x, &cols[w[2]]));
            rhs.add_scaled(&ed, &t.prod(&y, &z, &cols[w[0]]));
            (s.apply(&t.prod(&x, &y, &z)), rhs)
        },
    ));
    let factor = &ed * &m.recip().expect("nonzero");
    r.push(vec_check(
        "sigma(xyz) = eps delta m^-1 sigma(x)sigma(y)sigma(z)",
        &[n, n, n],
        |w| {
            let lhs = s.apply(&Vector::new(t.basis_product(w[0], w[1], w[2]).to_vec()));
            (lhs, t.prod(&cols[w[0]], &cols[w[1]], &cols[w[2]]).scale(&factor))
        },
    ));
    let twisted = t.twisted_by(s)?;
    let target = SignPair::new(signs.delta_sign() as i64, signs.delta_sign() as i64)?;
    let fk = check_fkts(&twisted, target);
    for c in fk.checks {
        let name = format!("twist is ({target}): {}", c.name);
        r.push(Check { name, ..c });
    }
    Ok(r)
}

/// For a skew `f` with `f f = m 1`, `m != 0`: the (1,1) system
/// `{xyz} = V_{x, f y}(z)`.
pub fn skew_twist_11(a: &InvolutiveAlgebra, f: &Vector) -> Result<TripleSystem, Error> {
    f.check_dim(a.dim())?;
    if a.conj(f) != -f {
        return Err(Error::hypothesis("f is not skew: bar f != -f"));
    }
    let ff = a.mul(f, f);
    let unit = a.unit();
    let (p, u) = unit
        .support()
        .next()
        .ok_or_else(|| Error::hypothesis("algebra has zero unit"))?;
    let m = &ff[p] * &u.recip().expect("support entry is nonzero");
    if m.is_zero() || ff != unit.scale(&m) {
        return Err(Error::hypothesis(format!(
            "f f = {ff} is not a nonzero multiple of the unit"
        )));
    }
    let t = kts_from_structurable(a)?;
    let lf = a.left_mul(f);
    let kf1 = t.k(f, unit, 1);
    if let Some(w) = operator_mismatch(&[], &kf1, &lf.scale(&int(2))) {
        return Err(Error::invalid("K(f,1) != 2 L_f", Some(w)));
    }
    if let Some(w) = operator_mismatch(&[], &lf.compose(&lf), &LinearOperator::scalar(a.dim(), m.clone())) {
        return Err(Error::invalid(format!("f(fx) != {m} x"), Some(w)));
    }
    let signs = SignPair::KANTOR;
    require(&sigma_in_k_check(&t, &lf, signs, Some(&m))?, "left multiplication by f")?;
    let mut out = t.twisted_by(&lf)?;
    require(&check_fkts(&out, SignPair::new(1, 1)?), "skew twist")?;
    if let Some(l) = a.label() {
        out = out.with_label(format!("{l}-skew"));
    }
    Ok(out)
}

/// Recovers the structurable algebra and involutive automorphism behind a
/// left-unital Kantor triple system:
/// `bar x = 2x - xee`, `x.y = bar(x) e y - bar(x) sigma(bar y) e + y e x`.
pub fn structurable_of_left_unital(
    t: &TripleSystem,
    e: &Vector,
) -> Result<(InvolutiveAlgebra, AlgebraMorphism), Error> {
    require_left_unit(t, e)?;
    require(&check_fkts(t, SignPair::KANTOR), "input system")?;
    let m = bridge_maps(t, e)?;
    let n = t.dim();
    let bar = &LinearOperator::identity(n).scale(&int(2)) - &m.rho;
    let bars = bar.columns();
    let sigma_bar = m.sigma.compose(&bar);
    let product = |i: usize, j: usize| {
        let y = Vector::basis(n, j);
        let mut out = t.prod(&bars[i], e, &y);
        out.add_scaled(&int(-1), &t.prod(&bars[i], &sigma_bar.column(j), e));
        out.add_scaled(&Scalar::ONE, &t.prod(&y, e, &Vector::basis(n, i)));
        out
    };
    let mut a = InvolutiveAlgebra::from_fn(n, product, bar.clone(), e.clone()).map_err(|err| match err {
        Error::ConstructionInvalid { what, witness } => Error::invalid(format!("recovered algebra: {what}"), witness),
        other => other,
    })?;
    if let Some(l) = t.label() {
        a = a.with_label(format!("{l}-algebra"));
    }
    require(&check_structurable(&a), "recovered algebra")?;
    let s = AlgebraMorphism::new(m.sigma.clone());
    require(&algebra_automorphism_report(&a, &s), "recovered sigma")?;
    let back = twisted_kts(&a, &s)?;
    if back.tensor() != t.tensor() {
        let at = back
            .tensor()
            .iter()
            .zip(t.tensor())
            .position(|(x, y)| x != y)
            .expect("tensors differ");
        let idx = vec![at / (n * n * n), at / (n * n) % n, at / n % n, at % n];
        return Err(Error::invalid(
            "triple product not recovered from the algebra",
            Some(Witness::new(idx, &back.tensor()[at], &t.tensor()[at])),
        ));
    }
    Ok((a, s))
}

/// Identities for a left unit of a (-1,-1) system.
pub fn lemma_suite_mm(t: &TripleSystem, e: &Vector) -> Result<Report, Error> {
    require_left_unit(t, e)?;
    let n = t.dim();
    let b = |i| Vector::basis(n, i);
    let (rho, mu) = rho_mu(t, e);
    let id = LinearOperator::identity(n);
    let mut r = Report::new(subject(t), "lemmas-mm");
    push_left_unit_lemmas(&mut r, t, e, &rho, &mu);
    let k = |u: &Vector, v: &Vector| t.k(u, v, -1);
    r.push(vec_check("K(u,e)e = (rho + id)u", &[n], |w| {
        (k(&b(w[0]), e).apply(e), (&rho + &id).column(w[0]))
    }));
    r.push(Check::from_sweep(
        "K(u,v) = 1/2 K(K(u,v)e,e)",
        first_failure(n, 2, |w| {
            let kuv = k(&b(w[0]), &b(w[1]));
            let rhs = k(&kuv.apply(e), e).scale(&Scalar::new(1, 2).expect("nonzero"));
            operator_mismatch(w, &kuv, &rhs)
        }),
    ));
    r.push(Check::from_sweep(
        "rho^2 = id",
        operator_mismatch(&[], &rho.compose(&rho), &id),
    ));
    r.push(Check::from_sweep(
        "mu^2 = id",
        operator_mismatch(&[], &mu.compose(&mu), &id),
    ));
    let minus = (&rho + &id).kernel();
    let basis = minus.basis();
    r.push(Check::from_sweep(
        "K(u,e) = 0 for u in U-1",
        first_failure_in(&[basis.len()], |w| {
            operator_mismatch(w, &k(&basis[w[0]], e), &LinearOperator::zero(n))
        }),
    ));
    Ok(r)
}

/// Twists a left-unital (-1,-1) system by `mu`, giving a system with
/// `{eex} = x = {exe}`, which is unitary and special.
pub fn mu_normalize(t: &TripleSystem, e: &Vector) -> Result<TripleSystem, Error> {
    let signs = SignPair::new(-1, -1)?;
    require(&check_fkts(t, signs), "input system")?;
    let m = bridge_maps_mm(t, e)?;
    let n = t.dim();
    let id = LinearOperator::identity(n);
    let (mut out, _) = twist(t, &m.mu, signs, None)?;
    if let Some(l) = t.label() {
        out = out.with_label(format!("{l}-normalized"));
    }
    let (_, mu_new) = rho_mu(&out, e);
    let checks = [
        ("{eex} = x", operator_mismatch(&[], &out.l(e, e), &id)),
        ("{exe} = x", operator_mismatch(&[], &mu_new, &id)),
        (
            "K(e,e) = 2 id",
            operator_mismatch(&[], &out.k(e, e, -1), &id.scale(&int(2))),
        ),
    ];
    for (name, w) in checks {
        if let Some(w) = w {
            return Err(Error::invalid(format!("normalized system: {name}"), Some(w)));
        }
    }
    if !check_unitary(&out, signs) || !check_special(&out, signs) {
        return Err(Error::invalid("normalized system is not unitary and special", None));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn scalar_fkts() -> TripleSystem {
        TripleSystem::from_records(1, [(0, 0, 0, 0, Scalar::ONE)]).unwrap()
    }

    #[test]
    fn scalar_system_maps() {
        let t = scalar_fkts();
        let e = Vector::from_ints(&[1]);
        let m = bridge_maps(&t, &e).unwrap();
        assert!(m.rho.is_identity() && m.mu.is_identity() && m.sigma.is_identity());
        assert!(bridge_maps(&t, &Vector::from_ints(&[2])).is_err());
        assert!(lemma_suite_mm(&t, &e).unwrap().passed());
        assert_eq!(mu_normalize(&t, &e).unwrap().tensor(), t.tensor());
    }

    #[test]
    fn zero_system_doubles_to_zero() {
        let t = TripleSystem::zero(1);
        let (d, s) = double_m21(&t, SignPair::KANTOR).unwrap();
        assert_eq!(d, TripleSystem::zero(2));
        assert_eq!(s, SignPair::new(1, 1).unwrap());
    }
}
