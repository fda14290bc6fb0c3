//! Splitting a 5-graded superalgebra with a left unit in degree one into
//! copies of the adjoint and natural `osp(1,2)`-modules plus a trivial part.

use crate::bridge::mu_normalize;
use crate::error::Error;
use crate::exact::{eigenprojections, null_space, LinearOperator, Scalar, Subspace, Vector};
use crate::report::{Check, Report, Witness};
use crate::sweep::first_failure_in;
use crate::triple::{SignPair, TripleSystem};

use super::osp::{osp12_model, structure_constants_in};
use super::{build_gu, phi_of_gu, GradedSuperalgebra, PhiMap};

#[derive(Clone, Debug)]
pub struct B01Decomposition {
    /// The copy of `osp(1,2)`: `F, Y, H, X, E` with `X = e`, `Y = Phi(e)`.
    pub h: [Vector; 5],
    /// For each basis vector `x` of `U1`, the images of `F, Y, H, X, E`.
    pub adjoint: Vec<[Vector; 5]>,
    /// For each basis vector `x` of `U-1`, the images of `H^, X^, Y^`.
    pub natural: Vec<[Vector; 3]>,
    /// A basis of the centralizer of `h`.
    pub trivial: Vec<Vector>,
    pub u_plus: Subspace,
    pub u_minus: Subspace,
    pub report: Report,
}

impl B01Decomposition {
    pub fn counts(&self) -> (usize, usize, usize) {
        (self.adjoint.len(), self.natural.len(), self.trivial.len())
    }
}

fn delta_of(g: &GradedSuperalgebra) -> Scalar {
    if g.is_super() {
        Scalar::from_int(-1)
    } else {
        Scalar::ONE
    }
}

/// Operators on the degree-one component: `L(x,y)z = [[x,Phi y],z]` and
/// `K(x,y)z = delta [[x,y],Phi z]`, in the basis of that component.
fn lk_on_g1(g: &GradedSuperalgebra, phi: &PhiMap, x: &Vector, y: &Vector) -> (LinearOperator, LinearOperator) {
    let g1 = g.component(1);
    let delta = delta_of(g);
    let restrict = |v: &Vector| Vector::new(g1.iter().map(|&k| v[k].clone()).collect());
    let xy_phi = g.bracket(x, &phi.apply(y));
    let xy = g.bracket(x, y);
    let l = LinearOperator::from_fn(g1.len(), |k| restrict(&g.bracket(&xy_phi, &g.basis(g1[k]))));
    let kk = LinearOperator::from_fn(g1.len(), |k| {
        restrict(&g.bracket(&xy, &phi.apply(&g.basis(g1[k])))).scale(&delta)
    });
    (l, kk)
}

fn require_degree_one(g: &GradedSuperalgebra, e: &Vector) -> Result<(), Error> {
    e.check_dim(g.dim())?;
    if !g.in_degree(e, 1) {
        return Err(Error::hypothesis(format!("{e} is not in the degree-one component")));
    }
    Ok(())
}

/// Whether `L(e,e) = id` and `K(e,e) = 2 id` on the degree-one component,
/// with `L` and `K` read off from brackets.
pub fn b01_left_unit_check(g: &GradedSuperalgebra, phi: &PhiMap, e: &Vector) -> Result<bool, Error> {
    require_degree_one(g, e)?;
    let n = g.component(1).len();
    let (l, k) = lk_on_g1(g, phi, e, e);
    Ok(l.is_identity() && k == LinearOperator::scalar(n, Scalar::from_int(2)))
}

/// Decomposes `g` relative to the copy of `osp(1,2)` generated by a left
/// unit `e` of degree one satisfying `exe = e`-type normalization
/// (`L(e,e) = id`, `K(e,e) = 2 id`).
pub fn b01_decompose(g: &GradedSuperalgebra, phi: &PhiMap, e: &Vector) -> Result<B01Decomposition, Error> {
    if !b01_left_unit_check(g, phi, e)? {
        return Err(Error::NotLeftUnit(format!("{e} (needs L(e,e) = id and K(e,e) = 2 id)")));
    }
    let (model, _) = osp12_model()?;
    let half = Scalar::new(1, 2).expect("nonzero");
    let dim = g.dim();
    let g1 = g.component(1);
    let m = g1.len();
    let embed = |u: &Vector| {
        let mut v = Vector::zeros(dim);
        for (i, c) in u.support() {
            v[g1[i]] = c.clone();
        }
        v
    };
    let mut r = Report::new(g.label().unwrap_or("superalgebra"), "b01");

    let pe = phi.apply(e);
    let h_elt = g.bracket(e, &pe);
    let h = [
        g.bracket(&pe, &pe).scale(&half),
        pe.clone(),
        h_elt.clone(),
        e.clone(),
        g.bracket(e, e).scale(&-&half),
    ];
    r.push(Check::from_sweep(
        "[[e, Phi e], z] = i z for z in g_i",
        first_failure_in(&[dim], |w| {
            let z = g.basis(w[0]);
            let lhs = g.bracket(&h_elt, &z);
            let rhs = z.scale(&Scalar::from_int(g.elements()[w[0]].degree as i64));
            (lhs != rhs).then(|| Witness::new(w.to_vec(), lhs, rhs))
        }),
    ));
    match structure_constants_in(g, &h) {
        Ok(c) => {
            let w = c
                .iter()
                .zip(model.algebra.bracket_tensor())
                .position(|(a, b)| a != b)
                .map(|at| {
                    Witness::new(
                        vec![at / 25, at / 5 % 5, at % 5],
                        &c[at],
                        &model.algebra.bracket_tensor()[at],
                    )
                });
            r.push(Check::from_sweep("h has the structure constants of osp(1,2)", w));
        }
        Err(w) => {
            r.push(Check::fail("h is closed under the bracket", w));
        }
    }

    // rho(x) = xee on g1
    let rho = LinearOperator::from_fn(m, |k| {
        let inner = g.bracket(&g.basis(g1[k]), &pe);
        let v = g.bracket(&inner, e);
        Vector::new(g1.iter().map(|&i| v[i].clone()).collect())
    });
    let (p_plus, p_minus) = eigenprojections(&rho, (&Scalar::ONE, &Scalar::from_int(-1)))
        .map_err(|_| Error::invalid("rho is not diagonalizable with eigenvalues 1, -1", None))?;
    let (u_plus, u_minus) = (p_plus.image(), p_minus.image());

    let adjoint: Vec<[Vector; 5]> = u_plus
        .basis()
        .iter()
        .map(|u| {
            let x = embed(u);
            let px = phi.apply(&x);
            [
                g.bracket(&pe, &px).scale(&half),
                px.clone(),
                g.bracket(e, &px),
                x.clone(),
                g.bracket(e, &x).scale(&-&half),
            ]
        })
        .collect();
    let natural: Vec<[Vector; 3]> = u_minus
        .basis()
        .iter()
        .map(|u| {
            let x = embed(u);
            let px = phi.apply(&x);
            [-&g.bracket(e, &px), x.clone(), px]
        })
        .collect();

    let combine = |coeffs: &[Scalar], images: &[Vector]| {
        let mut v = Vector::zeros(dim);
        for (c, im) in coeffs.iter().zip(images) {
            v.add_scaled(c, im);
        }
        v
    };
    r.push(Check::from_sweep(
        "[h_a, psi_x(b)] = psi_x([a,b]) for x in U1",
        first_failure_in(&[adjoint.len(), 5, 5], |w| {
            let images = &adjoint[w[0]];
            let lhs = g.bracket(&h[w[1]], &images[w[2]]);
            let rhs = combine(model.algebra.basis_bracket(w[1], w[2]), images);
            (lhs != rhs).then(|| Witness::new(w.to_vec(), lhs, rhs))
        }),
    ));
    r.push(Check::from_sweep(
        "[h_a, psi_x(s)] = psi_x(a.s) for x in U-1",
        first_failure_in(&[natural.len(), 5, 3], |w| {
            let images = &natural[w[0]];
            let lhs = g.bracket(&h[w[1]], &images[w[2]]);
            let rhs = combine(model.action[w[1]][w[2]].entries(), images);
            (lhs != rhs).then(|| Witness::new(w.to_vec(), lhs, rhs))
        }),
    ));
    r.push(Check::from_sweep(
        "K(e,x) = 0 for x in U-1",
        first_failure_in(&[u_minus.dim()], |w| {
            let (_, k) = lk_on_g1(g, phi, e, &embed(&u_minus.basis()[w[0]]));
            (!k.is_zero()).then(|| Witness::new(w.to_vec(), format!("{k:?}"), "0"))
        }),
    ));

    // centralizer of X and Y, which generate h
    let rows: Vec<Vec<Scalar>> = [e, &pe]
        .iter()
        .flat_map(|a| {
            let cols: Vec<Vector> = (0..dim).map(|j| g.bracket(a, &g.basis(j))).collect();
            (0..dim)
                .map(|i| cols.iter().map(|c| c[i].clone()).collect::<Vec<_>>())
                .collect::<Vec<_>>()
        })
        .collect();
    let trivial = null_space(&rows, dim);

    let (a, b, d) = (adjoint.len(), natural.len(), trivial.len());
    r.push(Check::compare(
        "5 dim U1 + 3 dim U-1 + dim D = dim g",
        5 * a + 3 * b + d,
        dim,
    ));
    let all: Vec<Vector> = adjoint
        .iter()
        .flat_map(|c| c.iter().cloned())
        .chain(natural.iter().flat_map(|c| c.iter().cloned()))
        .chain(trivial.iter().cloned())
        .collect();
    r.push(Check::compare(
        "copies and D span g",
        Subspace::from_vectors(dim, all)?.dim(),
        dim,
    ));

    if let Some(c) = r.first_failure() {
        return Err(Error::invalid(
            format!("b01 decomposition: {}", c.name),
            c.witness.clone(),
        ));
    }
    Ok(B01Decomposition {
        h,
        adjoint,
        natural,
        trivial,
        u_plus,
        u_minus,
        report: r,
    })
}

/// Normalizes a left-unital (-1,-1) system at `e`, builds `g(U)` and
/// decomposes it. Returns the normalized system as well.
pub fn b01_decompose_system(t: &TripleSystem, e: &Vector) -> Result<(TripleSystem, B01Decomposition), Error> {
    let signs = SignPair::new(-1, -1)?;
    let normalized = mu_normalize(t, e)?;
    let gu = build_gu(&normalized, signs)?;
    let phi = phi_of_gu(&gu)?;
    let d = b01_decompose(gu.algebra(), &phi, &gu.embed_plus(e))?;
    Ok((normalized, d))
}
