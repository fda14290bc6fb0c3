//! The orthosymplectic superalgebra `osp(1,2)` as 3x3 supermatrices, with
//! its natural module inside `gl(1,2)`.

use crate::error::Error;
use crate::exact::{operator_inverse, solve_in_basis, LinearOperator, Scalar, Subspace, Vector};
use crate::report::{Check, Report, Witness};

use super::{check_grading, check_super_jacobi, phi_report, Element, GradedSuperalgebra, PhiMap};
use crate::triple::SignPair;

/// A matrix on a superspace whose first `even_dim` coordinates are even.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperMatrix {
    pub m: LinearOperator,
    pub even_dim: usize,
}

impl SuperMatrix {
    pub fn new(m: LinearOperator, even_dim: usize) -> Self {
        SuperMatrix { m, even_dim }
    }

    fn odd_index(&self, i: usize) -> bool {
        i >= self.even_dim
    }

    /// `Some(true)` for odd, `Some(false)` for even, `None` if the matrix is
    /// not homogeneous. Zero counts as even.
    pub fn parity(&self) -> Option<bool> {
        let n = self.m.dim();
        let mut even = false;
        let mut odd = false;
        for r in 0..n {
            for c in 0..n {
                if !self.m.get(r, c).is_zero() {
                    if self.odd_index(r) == self.odd_index(c) {
                        even = true;
                    } else {
                        odd = true;
                    }
                }
            }
        }
        match (even, odd) {
            (true, true) => None,
            (_, o) => Some(o),
        }
    }

    /// `[A, B] = AB - (-1)^{|A||B|} BA` for homogeneous `A`, `B`.
    pub fn super_bracket(&self, other: &SuperMatrix) -> Result<SuperMatrix, Error> {
        let (pa, pb) = match (self.parity(), other.parity()) {
            (Some(a), Some(b)) => (a, b),
            _ => return Err(Error::Unsupported("super bracket of inhomogeneous matrices".into())),
        };
        let ab = self.m.compose(&other.m);
        let ba = other.m.compose(&self.m);
        let m = if pa && pb { &ab + &ba } else { &ab - &ba };
        Ok(SuperMatrix::new(m, self.even_dim))
    }

    pub fn flat(&self) -> Vector {
        Vector::new(self.m.flat().to_vec())
    }
}

/// Basis `F, Y, H, X, E` of `osp(1,2)`, the natural module basis
/// `H^, X^, Y^`, and the conjugation matrix inducing `Phi`.
#[derive(Clone, Debug)]
pub struct Osp12Model {
    pub algebra: GradedSuperalgebra,
    pub phi: PhiMap,
    pub basis: [SuperMatrix; 5],
    pub module: [SuperMatrix; 3],
    pub conjugation: LinearOperator,
    /// `action[a][s]`: coordinates of `[basis[a], module[s]]` in `module`.
    pub action: Vec<Vec<Vector>>,
}

fn sm(rows: &[&[i64]]) -> SuperMatrix {
    SuperMatrix::new(LinearOperator::from_int_rows(rows).expect("square"), 1)
}

/// Builds the model and verifies it: brackets close, super-Jacobi and the
/// grading hold, `s` is a module, `Phi(X) = Y`, `Phi(X^) = Y^`, and `Phi`
/// squares to the parity automorphism.
pub fn osp12_model() -> Result<(Osp12Model, Report), Error> {
    let h = sm(&[&[0, 0, 0], &[0, 1, 0], &[0, 0, -1]]);
    let e = sm(&[&[0, 0, 0], &[0, 0, 1], &[0, 0, 0]]);
    let f = sm(&[&[0, 0, 0], &[0, 0, 0], &[0, 1, 0]]);
    let x = sm(&[&[0, 0, -1], &[1, 0, 0], &[0, 0, 0]]);
    let y = sm(&[&[0, 1, 0], &[0, 0, 0], &[1, 0, 0]]);
    let hh = sm(&[&[2, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
    let xh = sm(&[&[0, 0, 1], &[1, 0, 0], &[0, 0, 0]]);
    let yh = sm(&[&[0, -1, 0], &[0, 0, 0], &[1, 0, 0]]);
    let p = LinearOperator::from_int_rows(&[&[1, 0, 0], &[0, 0, -1], &[0, 1, 0]]).expect("square");
    let p_inv = operator_inverse(&p)?;
    let conj = |a: &SuperMatrix| SuperMatrix::new(p.compose(&a.m).compose(&p_inv), a.even_dim);

    let basis = [f, y, h, x, e];
    let module = [hh, xh, yh];
    let elements = vec![
        Element::new("F", -2, false),
        Element::new("Y", -1, true),
        Element::new("H", 0, false),
        Element::new("X", 1, true),
        Element::new("E", 2, false),
    ];
    let flat: Vec<Vector> = basis.iter().map(SuperMatrix::flat).collect();
    let mflat: Vec<Vector> = module.iter().map(SuperMatrix::flat).collect();
    let coords = |v: &SuperMatrix, within: &[Vector], what: &str| {
        solve_in_basis(within, &v.flat()).map(Vector::new).ok_or_else(|| {
            Error::invalid(
                format!("{what} is not closed"),
                Some(Witness::new(vec![], format!("{:?}", v.m), what)),
            )
        })
    };
    let mut bracket = Vec::with_capacity(125);
    for a in &basis {
        for b in &basis {
            bracket.extend(coords(&a.super_bracket(b)?, &flat, "osp(1,2)")?.into_entries());
        }
    }
    let algebra = GradedSuperalgebra::new(elements, bracket)?.with_label("osp(1,2)");
    let mut action = Vec::with_capacity(5);
    for a in &basis {
        let mut row = Vec::with_capacity(3);
        for s in &module {
            row.push(coords(&a.super_bracket(s)?, &mflat, "natural module")?);
        }
        action.push(row);
    }
    let phi_cols = basis
        .iter()
        .map(|a| coords(&conj(a), &flat, "osp(1,2) under Phi"))
        .collect::<Result<Vec<_>, _>>()?;
    let phi = PhiMap(LinearOperator::from_columns(&phi_cols)?);

    let mut r = Report::new("osp(1,2)", "model");
    r.extend(check_super_jacobi(&algebra));
    r.extend(check_grading(&algebra));
    r.extend(phi_report(&algebra, &phi, SignPair::new(-1, -1)?));
    r.push(Check::compare(
        "Phi(X) = Y",
        format!("{:?}", conj(&basis[3]).m),
        format!("{:?}", basis[1].m),
    ));
    r.push(Check::compare(
        "Phi(X^) = Y^",
        format!("{:?}", conj(&module[1]).m),
        format!("{:?}", module[2].m),
    ));
    let parity_ok = basis.iter().chain(&module).all(|a| {
        let twice = conj(&conj(a));
        let expected = if a.parity() == Some(true) { -&a.m } else { a.m.clone() };
        twice.m == expected
    });
    r.push(Check::compare("Phi^2 is the parity automorphism", parity_ok, true));
    let model = Osp12Model {
        algebra,
        phi,
        basis,
        module,
        conjugation: p,
        action,
    };
    Ok((model, r))
}

/// Brackets of the given elements of `g` expressed in the span of those
/// elements, as a structure-constant tensor, or the first pair whose
/// bracket leaves the span.
pub(crate) fn structure_constants_in(g: &GradedSuperalgebra, elems: &[Vector]) -> Result<Vec<Scalar>, Witness> {
    let k = elems.len();
    let mut out = Vec::with_capacity(k.pow(3));
    for i in 0..k {
        for j in 0..k {
            let b = g.bracket(&elems[i], &elems[j]);
            match solve_in_basis(elems, &b) {
                Some(c) => out.extend(c),
                None => return Err(Witness::new(vec![i, j], b, "outside the span")),
            }
        }
    }
    Ok(out)
}

/// Aligns a copy of `osp(1,2)` in `g` generated by `x` in degree one:
/// `X' = x`, `Y' = Phi(x)`, `H' = [X',Y']`, `E' = -1/2 [X',X']`,
/// `F' = 1/2 [Y',Y']`. Returns these five elements (in the order
/// `F, Y, H, X, E`) and a report comparing their structure constants with
/// the model's.
pub fn align_to_osp12(g: &GradedSuperalgebra, phi: &PhiMap, x: &Vector) -> Result<([Vector; 5], Report), Error> {
    if x.dim() != g.dim() {
        return Err(Error::DimensionMismatch {
            expected: g.dim(),
            found: x.dim(),
        });
    }
    if !g.in_degree(x, 1) {
        return Err(Error::hypothesis("the generator must lie in degree one"));
    }
    let (model, _) = osp12_model()?;
    let half = Scalar::new(1, 2).expect("nonzero");
    let y = phi.apply(x);
    let h = g.bracket(x, &y);
    let e = g.bracket(x, x).scale(&-&half);
    let f = g.bracket(&y, &y).scale(&half);
    let elems = [f, y, h, x.clone(), e];
    let mut r = Report::new(g.label().unwrap_or("superalgebra"), "osp(1,2) alignment");
    let independent = Subspace::from_vectors(g.dim(), elems.to_vec())?.dim() == 5;
    r.push(Check::compare("F', Y', H', X', E' are independent", independent, true));
    if independent {
        match structure_constants_in(g, &elems) {
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
                r.push(Check::from_sweep("structure constants match osp(1,2)", w));
            }
            Err(w) => {
                r.push(Check::fail("span of F', Y', H', X', E' is closed", w));
            }
        }
    }
    Ok((elems, r))
}
