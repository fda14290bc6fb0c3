//! The 5-graded algebra `g(U) = L + T` of a triple system.

use crate::error::Error;
use crate::exact::{operator_inverse, span_basis_in, LinearOperator, OperatorSpan, Scalar, Vector};
use crate::report::{Check, Report, Witness};
use crate::triple::{check_fkts, is_automorphism, SignPair, TripleMorphism, TripleSystem};

use super::{check_grading, check_super_jacobi, Element, GradedSuperalgebra, PhiMap};

/// An element of `g(U)` held concretely: a block operator on `U + U` plus a
/// column `(a, b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Concrete {
    pub(crate) m: LinearOperator,
    pub(crate) x: Vector,
}

/// `g(U)` together with the data needed to move between coordinates and
/// block matrices. Basis order is by degree: the lower-left K span, the
/// columns `(0, e_i)`, the span of `diag(L(e_i,e_j), eps L(e_j,e_i))`,
/// the columns `(e_i, 0)`, the upper-right K span.
#[derive(Clone, Debug)]
pub struct GU {
    algebra: GradedSuperalgebra,
    system: TripleSystem,
    signs: SignPair,
    g0: OperatorSpan,
    k_span: OperatorSpan,
}

fn block(n: usize, blocks: [Option<&LinearOperator>; 4]) -> LinearOperator {
    // [[a, b], [c, d]]
    let mut m = LinearOperator::zero(2 * n);
    for (which, op) in blocks.iter().enumerate() {
        if let Some(op) = op {
            let (ro, co) = ((which / 2) * n, (which % 2) * n);
            for r in 0..n {
                for c in 0..n {
                    m.set(ro + r, co + c, op.get(r, c).clone());
                }
            }
        }
    }
    m
}

fn sub_block(m: &LinearOperator, n: usize, which: usize) -> LinearOperator {
    let (ro, co) = ((which / 2) * n, (which % 2) * n);
    let mut out = LinearOperator::zero(n);
    for r in 0..n {
        for c in 0..n {
            out.set(r, c, m.get(ro + r, co + c).clone());
        }
    }
    out
}

fn split(x: &Vector, n: usize) -> (Vector, Vector) {
    (
        Vector::new(x.entries()[..n].to_vec()),
        Vector::new(x.entries()[n..].to_vec()),
    )
}

fn join(a: &Vector, b: &Vector) -> Vector {
    Vector::new(a.iter().chain(b.iter()).cloned().collect())
}

/// The block operator `[(a1,b1),(a2,b2)]`.
fn t_bracket(t: &TripleSystem, signs: SignPair, x1: &Vector, x2: &Vector) -> LinearOperator {
    let n = t.dim();
    let (a1, b1) = split(x1, n);
    let (a2, b2) = split(x2, n);
    let d = signs.delta();
    let e = signs.epsilon();
    let ds = signs.delta_sign();
    let mut ul = t.l(&a1, &b2);
    ul.add_scaled(&-&d, &t.l(&a2, &b1));
    let ur = t.k(&a1, &a2, ds).scale(&d);
    let ll = t.k(&b1, &b2, ds).scale(&-&e);
    let mut lr = t.l(&b2, &a1).scale(&e);
    lr.add_scaled(&-(&e * &d), &t.l(&b1, &a2));
    block(n, [Some(&ul), Some(&ur), Some(&ll), Some(&lr)])
}

impl GU {
    pub fn algebra(&self) -> &GradedSuperalgebra {
        &self.algebra
    }

    pub fn into_algebra(self) -> GradedSuperalgebra {
        self.algebra
    }

    pub fn system(&self) -> &TripleSystem {
        &self.system
    }

    pub fn signs(&self) -> SignPair {
        self.signs
    }

    /// Dimensions of the components of degree -2, -1, 0, 1, 2.
    pub fn degree_dims(&self) -> [usize; 5] {
        let n = self.system.dim();
        [self.k_span.dim(), n, self.g0.dim(), n, self.k_span.dim()]
    }

    fn offsets(&self) -> [usize; 5] {
        let d = self.degree_dims();
        let mut o = [0; 5];
        for i in 1..5 {
            o[i] = o[i - 1] + d[i - 1];
        }
        o
    }

    /// Coordinates of `(a, 0)`.
    pub fn embed_plus(&self, a: &Vector) -> Vector {
        let mut v = Vector::zeros(self.algebra.dim());
        let o = self.offsets()[3];
        for (i, c) in a.support() {
            v[o + i] = c.clone();
        }
        v
    }

    /// Coordinates of `(0, b)`.
    pub fn embed_minus(&self, b: &Vector) -> Vector {
        let mut v = Vector::zeros(self.algebra.dim());
        let o = self.offsets()[1];
        for (i, c) in b.support() {
            v[o + i] = c.clone();
        }
        v
    }

    /// The degree-one part of `v` as an element of `U`.
    pub fn project_plus(&self, v: &Vector) -> Vector {
        let o = self.offsets()[3];
        Vector::new(v.entries()[o..o + self.system.dim()].to_vec())
    }

    pub(crate) fn concrete(&self, v: &Vector) -> Concrete {
        let n = self.system.dim();
        let [om2, om1, o0, o1, o2] = self.offsets();
        let mut m = LinearOperator::zero(2 * n);
        let mut x = Vector::zeros(2 * n);
        let kb = self.k_span.basis();
        let gb = self.g0.basis();
        for (i, c) in v.support() {
            if i < om1 {
                m.add_scaled(c, &block(n, [None, None, Some(&kb[i - om2]), None]));
            } else if i < o0 {
                x[n + i - om1] += c;
            } else if i < o1 {
                m.add_scaled(c, &gb[i - o0]);
            } else if i < o2 {
                x[i - o1] += c;
            } else {
                m.add_scaled(c, &block(n, [None, Some(&kb[i - o2]), None, None]));
            }
        }
        Concrete { m, x }
    }

    pub(crate) fn coordinates(&self, c: &Concrete) -> Option<Vector> {
        let n = self.system.dim();
        let [_, om1, o0, o1, o2] = self.offsets();
        let mut v = Vector::zeros(self.algebra.dim());
        let mut diag = c.m.clone();
        for which in [1, 2] {
            diag = &diag - &block_only(&c.m, n, which);
        }
        let ur = self.k_span.coordinates(&sub_block(&c.m, n, 1))?;
        let ll = self.k_span.coordinates(&sub_block(&c.m, n, 2))?;
        let g0 = self.g0.coordinates(&diag)?;
        for (i, s) in ll.into_iter().enumerate() {
            v[i] = s;
        }
        for i in 0..n {
            v[om1 + i] = c.x[n + i].clone();
            v[o1 + i] = c.x[i].clone();
        }
        for (i, s) in g0.into_iter().enumerate() {
            v[o0 + i] = s;
        }
        for (i, s) in ur.into_iter().enumerate() {
            v[o2 + i] = s;
        }
        Some(v)
    }

    fn concrete_bracket(&self, p: &Concrete, q: &Concrete) -> Concrete {
        let mut m = p.m.commutator(&q.m);
        m = &m + &t_bracket(&self.system, self.signs, &p.x, &q.x);
        let x = &p.m.apply(&q.x) - &q.m.apply(&p.x);
        Concrete { m, x }
    }

    /// `Phi(a, b) = (-eps delta b, a)` on the columns and conjugation by it
    /// on the block operators.
    fn phi_concrete(&self, c: &Concrete) -> Concrete {
        let n = self.system.dim();
        let p = self.phi_t();
        let ed = self.signs.epsilon() * self.signs.delta();
        let p_inv = p.scale(&-ed);
        let (a, b) = split(&c.x, n);
        let x = join(&b.scale(&-(self.signs.epsilon() * self.signs.delta())), &a);
        Concrete {
            m: p.compose(&c.m).compose(&p_inv),
            x,
        }
    }

    fn phi_t(&self) -> LinearOperator {
        let n = self.system.dim();
        let ed = self.signs.epsilon() * self.signs.delta();
        let id = LinearOperator::identity(n);
        let top = id.scale(&-ed);
        block(n, [None, Some(&top), Some(&id), None])
    }
}

fn block_only(m: &LinearOperator, n: usize, which: usize) -> LinearOperator {
    let s = sub_block(m, n, which);
    let mut blocks = [None; 4];
    blocks[which] = Some(&s);
    block(n, blocks)
}

fn require_fkts(t: &TripleSystem, signs: SignPair) -> Result<(), Error> {
    let r = check_fkts(t, signs);
    match r.first_failure() {
        Some(c) => Err(Error::hypothesis(format!(
            "not an ({signs}) system: {} fails{}",
            c.name,
            c.witness.as_ref().map(|w| format!(" {w}")).unwrap_or_default()
        ))),
        None => Ok(()),
    }
}

/// The (anti-)Lie triple system on `U + U` and whether it is odd
/// (`delta = -1`). Coordinates are `(a, b)` with `a` first.
pub fn build_t(t: &TripleSystem, signs: SignPair) -> Result<(TripleSystem, bool), Error> {
    require_fkts(t, signs)?;
    let n = t.dim();
    let cols: Vec<Vector> = (0..2 * n).map(|i| Vector::basis(2 * n, i)).collect();
    let brackets: Vec<LinearOperator> = (0..4 * n * n)
        .map(|ij| t_bracket(t, signs, &cols[ij / (2 * n)], &cols[ij % (2 * n)]))
        .collect();
    let mut lts = TripleSystem::from_fn(2 * n, |i, j, k| brackets[i * 2 * n + j].column(k));
    if let Some(l) = t.label() {
        lts = lts.with_label(format!("{l}-columns"));
    }
    Ok((lts, signs.delta_sign() == -1))
}

/// Builds `g(U)` and checks (super-)Jacobi and the grading.
pub fn build_gu(t: &TripleSystem, signs: SignPair) -> Result<GU, Error> {
    require_fkts(t, signs)?;
    let n = t.dim();
    let (ls, ks) = t.basis_operators(signs.delta_sign());
    let e = signs.epsilon();
    let mut diag = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let lower = ls[j * n + i].scale(&e);
            diag.push(block(n, [Some(&ls[i * n + j]), None, None, Some(&lower)]));
        }
    }
    let g0 = span_basis_in(2 * n, diag.iter())?;
    let k_span = span_basis_in(n, ks.iter())?;
    let odd = signs.delta_sign() == -1;
    let mut elements = Vec::new();
    let dims = [k_span.dim(), n, g0.dim(), n, k_span.dim()];
    for (d, &count) in (-2i8..=2).zip(&dims) {
        for i in 0..count {
            elements.push(Element::new(format!("g{d}.{i}"), d, odd && d % 2 != 0));
        }
    }
    let mut gu = GU {
        algebra: GradedSuperalgebra::new(elements.clone(), vec![Scalar::ZERO; elements.len().pow(3)])?,
        system: t.clone(),
        signs,
        g0,
        k_span,
    };
    let dim = elements.len();
    let basis: Vec<Concrete> = (0..dim).map(|i| gu.concrete(&Vector::basis(dim, i))).collect();
    let mut bracket = Vec::with_capacity(dim.pow(3));
    for (i, p) in basis.iter().enumerate() {
        for (j, q) in basis.iter().enumerate() {
            let c = gu.concrete_bracket(p, q);
            let v = gu.coordinates(&c).ok_or_else(|| {
                Error::invalid(
                    "bracket leaves g(U)",
                    Some(Witness::new(vec![i, j], format!("{:?}", c.m), &c.x)),
                )
            })?;
            bracket.extend(v.into_entries());
        }
    }
    let mut algebra = GradedSuperalgebra::new(elements, bracket)?;
    if let Some(l) = t.label() {
        algebra = algebra.with_label(format!("g({l})"));
    }
    for r in [check_grading(&algebra), check_super_jacobi(&algebra)] {
        if let Some(c) = r.first_failure() {
            return Err(Error::invalid(c.name.clone(), c.witness.clone()));
        }
    }
    gu.algebra = algebra;
    Ok(gu)
}

/// `Phi` on `g(U)` in the basis of [`build_gu`]; it sends `(a, b)` to
/// `(-eps delta b, a)` and acts on `L` by conjugation, so that
/// `(x, 0) -> (0, x)`.
pub fn phi_of_gu(gu: &GU) -> Result<PhiMap, Error> {
    let dim = gu.algebra.dim();
    let mut cols = Vec::with_capacity(dim);
    for i in 0..dim {
        let c = gu.phi_concrete(&gu.concrete(&Vector::basis(dim, i)));
        cols.push(gu.coordinates(&c).ok_or_else(|| {
            Error::invalid(
                "phi leaves g(U)",
                Some(Witness::new(vec![i], format!("{:?}", c.m), &c.x)),
            )
        })?);
    }
    let phi = PhiMap(LinearOperator::from_columns(&cols)?);
    let r = super::phi_report(&gu.algebra, &phi, gu.signs);
    if let Some(c) = r.first_failure() {
        return Err(Error::invalid(format!("phi: {}", c.name), c.witness.clone()));
    }
    Ok(phi)
}

/// For an involutive automorphism `S` of `T`, the map `(a, b) -> (a, S b)`
/// (conjugation by `diag(1, S)` on `L`) written as a matrix from `g(T)` to
/// `g(T^S)`, and a report that it is a graded isomorphism: the structure
/// constants of `g(T^S)` in the image basis equal those of `g(T)`.
pub fn twist_isomorphism(
    t: &TripleSystem,
    s: &LinearOperator,
    signs: SignPair,
) -> Result<(LinearOperator, Report), Error> {
    let n = t.dim();
    s.check_dim(n)?;
    if !is_automorphism(t, &TripleMorphism::new(s.clone()))? {
        return Err(Error::hypothesis("S is not an automorphism"));
    }
    if !s.compose(s).is_identity() {
        return Err(Error::hypothesis("S^2 != id"));
    }
    let g = build_gu(t, signs)?;
    let twisted = t.twisted_by(s)?;
    let h = build_gu(&twisted, signs)?;
    let id = LinearOperator::identity(n);
    let q = block(n, [Some(&id), None, None, Some(s)]);
    let q_inv = operator_inverse(&q)?;
    let dim = g.algebra.dim();
    let mut cols = Vec::with_capacity(dim);
    for i in 0..dim {
        let c = g.concrete(&Vector::basis(dim, i));
        let image = Concrete {
            m: q.compose(&c.m).compose(&q_inv),
            x: q.apply(&c.x),
        };
        cols.push(h.coordinates(&image).ok_or_else(|| {
            Error::invalid(
                "image leaves g(T^S)",
                Some(Witness::new(vec![i], format!("{:?}", image.m), &image.x)),
            )
        })?);
    }
    let psi = LinearOperator::from_columns(&cols)?;
    let mut r = Report::new(crate::triple::subject(t), "twist-isomorphism");
    r.push(Check::compare("dim g(T) = dim g(T^S)", dim, h.algebra.dim()));
    let graded = (0..dim).find(|&i| !h.algebra.in_degree(&cols[i], g.algebra.elements()[i].degree));
    r.push(Check::from_sweep(
        "psi(g_i) = g_i",
        graded.map(|i| Witness::new(vec![i], &cols[i], format!("degree {}", g.algebra.elements()[i].degree))),
    ));
    match h.algebra.change_basis(&psi, g.algebra.elements().to_vec()) {
        Ok(pulled) => {
            let w = pulled
                .bracket_tensor()
                .iter()
                .zip(g.algebra.bracket_tensor())
                .position(|(a, b)| a != b)
                .map(|at| {
                    Witness::new(
                        vec![at / (dim * dim), at / dim % dim, at % dim],
                        &pulled.bracket_tensor()[at],
                        &g.algebra.bracket_tensor()[at],
                    )
                });
            r.push(Check::from_sweep("psi[x,y] = [psi x, psi y]", w));
        }
        Err(_) => {
            r.push(Check::compare("psi invertible", false, true));
        }
    }
    Ok((psi, r))
}
