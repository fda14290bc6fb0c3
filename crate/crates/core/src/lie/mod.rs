//! Five-graded Lie algebras and superalgebras by structure constants.

mod b01;
mod gu;
mod osp;

pub use b01::{b01_decompose, b01_decompose_system, b01_left_unit_check, B01Decomposition};
pub use gu::{build_gu, build_t, phi_of_gu, twist_isomorphism, GU};
pub use osp::{align_to_osp12, osp12_model, Osp12Model, SuperMatrix};

use std::fmt;

use crate::error::Error;
use crate::exact::{LinearOperator, Scalar, Vector};
use crate::report::{Check, Report, Witness};
use crate::sweep::{first_failure, first_failure_in};
use crate::triple::{check_fkts, SignPair, TripleSystem};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element {
    pub label: String,
    pub degree: i8,
    pub odd: bool,
}

impl Element {
    pub fn new(label: impl Into<String>, degree: i8, odd: bool) -> Self {
        Element {
            label: label.into(),
            degree,
            odd,
        }
    }
}

/// Homogeneous basis elements with degrees in `-2..=2` and parities, and
/// `[b_i, b_j] = sum_k c[i][j][k] b_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSuperalgebra {
    elements: Vec<Element>,
    bracket: Vec<Scalar>,
    label: Option<String>,
}

impl GradedSuperalgebra {
    pub fn new(elements: Vec<Element>, bracket: Vec<Scalar>) -> Result<Self, Error> {
        let n = elements.len();
        if bracket.len() != n.pow(3) {
            return Err(Error::DimensionMismatch {
                expected: n.pow(3),
                found: bracket.len(),
            });
        }
        if let Some(e) = elements.iter().find(|e| e.degree.abs() > 2) {
            return Err(Error::Parse(format!(
                "element {} has degree {} outside -2..2",
                e.label, e.degree
            )));
        }
        Ok(GradedSuperalgebra {
            elements,
            bracket,
            label: None,
        })
    }

    pub fn from_records(
        elements: Vec<Element>,
        records: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
    ) -> Result<Self, Error> {
        let n = elements.len();
        let mut bracket = vec![Scalar::ZERO; n.pow(3)];
        for (i, j, k, v) in records {
            if i >= n || j >= n || k >= n {
                return Err(Error::Parse(format!(
                    "bracket record ({i},{j},{k}) out of range for dimension {n}"
                )));
            }
            bracket[(i * n + j) * n + k] += v;
        }
        Self::new(elements, bracket)
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn dim(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn bracket_tensor(&self) -> &[Scalar] {
        &self.bracket
    }

    /// Nonzero bracket entries as `(i, j, k, value)`.
    pub fn records(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> {
        let n = self.dim();
        self.bracket
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(at, v)| (at / (n * n), at / n % n, at % n, v))
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> &[Scalar] {
        let n = self.dim();
        let o = (i * n + j) * n;
        &self.bracket[o..o + n]
    }

    pub fn bracket(&self, x: &Vector, y: &Vector) -> Vector {
        let mut out = Vector::zeros(self.dim());
        for (i, xi) in x.support() {
            for (j, yj) in y.support() {
                out.add_scaled_slice(&(xi * yj), self.basis_bracket(i, j));
            }
        }
        out
    }

    pub fn basis(&self, i: usize) -> Vector {
        Vector::basis(self.dim(), i)
    }

    /// Indices of the basis elements of degree `d`.
    pub fn component(&self, d: i8) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.elements[i].degree == d).collect()
    }

    /// Dimensions of the components of degree -2, -1, 0, 1, 2.
    pub fn degree_dims(&self) -> [usize; 5] {
        let mut dims = [0; 5];
        for e in &self.elements {
            dims[(e.degree + 2) as usize] += 1;
        }
        dims
    }

    pub fn is_super(&self) -> bool {
        self.elements.iter().any(|e| e.odd)
    }

    fn sign(&self, i: usize, j: usize) -> Scalar {
        if self.elements[i].odd && self.elements[j].odd {
            Scalar::from_int(-1)
        } else {
            Scalar::ONE
        }
    }

    /// Whether `v` lies in the sum of the components of degree `d`.
    pub fn in_degree(&self, v: &Vector, d: i8) -> bool {
        v.support().all(|(i, _)| self.elements[i].degree == d)
    }

    /// Structure constants relative to a new basis (the columns of `p`).
    pub fn change_basis(&self, p: &LinearOperator, elements: Vec<Element>) -> Result<GradedSuperalgebra, Error> {
        let n = self.dim();
        p.check_dim(n)?;
        if elements.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: elements.len(),
            });
        }
        let inv = crate::exact::operator_inverse(p)?;
        let cols = p.columns();
        let mut bracket = Vec::with_capacity(n.pow(3));
        for i in 0..n {
            for j in 0..n {
                bracket.extend(inv.apply(&self.bracket(&cols[i], &cols[j])).into_entries());
            }
        }
        GradedSuperalgebra::new(elements, bracket)
    }

    fn subject(&self) -> String {
        self.label().unwrap_or("superalgebra").to_string()
    }
}

/// `[x,[y,z]] = [[x,y],z] + (-1)^{|x||y|} [y,[x,z]]` over all basis triples.
pub fn check_super_jacobi(g: &GradedSuperalgebra) -> Report {
    let n = g.dim();
    let sparse: Vec<Vec<(usize, Scalar)>> = (0..n * n)
        .map(|ij| {
            g.basis_bracket(ij / n, ij % n)
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (k, c.clone()))
                .collect()
        })
        .collect();
    // [b_i, sum_k c_k b_k]
    let left = |i: usize, v: &[(usize, Scalar)]| {
        let mut out = Vector::zeros(n);
        for (k, c) in v {
            for (m, d) in &sparse[i * n + k] {
                out[*m] += c * d;
            }
        }
        out
    };
    let right = |v: &[(usize, Scalar)], k: usize| {
        let mut out = Vector::zeros(n);
        for (j, c) in v {
            for (m, d) in &sparse[j * n + k] {
                out[*m] += c * d;
            }
        }
        out
    };
    let w = first_failure(n, 3, |w| {
        let (x, y, z) = (w[0], w[1], w[2]);
        let lhs = left(x, &sparse[y * n + z]);
        let mut rhs = right(&sparse[x * n + y], z);
        rhs.add_scaled(&g.sign(x, y), &left(y, &sparse[x * n + z]));
        (lhs != rhs).then(|| Witness::new(w.to_vec(), lhs, rhs))
    });
    let mut r = Report::new(g.subject(), "super-jacobi");
    r.push(Check::from_sweep("[x,[y,z]] = [[x,y],z] + (-1)^{|x||y|} [y,[x,z]]", w));
    r
}

/// Graded antisymmetry, degree additivity, parity additivity and, for
/// superalgebras, consistency of parity with degree.
pub fn check_grading(g: &GradedSuperalgebra) -> Report {
    let n = g.dim();
    let els = g.elements();
    let mut r = Report::new(g.subject(), "grading");
    r.push(Check::from_sweep(
        "[x,y] = -(-1)^{|x||y|} [y,x]",
        first_failure(n, 2, |w| {
            let lhs = Vector::new(g.basis_bracket(w[0], w[1]).to_vec());
            let rhs = Vector::new(g.basis_bracket(w[1], w[0]).to_vec()).scale(&-g.sign(w[0], w[1]));
            (lhs != rhs).then(|| Witness::new(w.to_vec(), lhs, rhs))
        }),
    ));
    r.push(Check::from_sweep(
        "[g_i, g_j] in g_{i+j}",
        first_failure(n, 2, |w| {
            let d = els[w[0]].degree + els[w[1]].degree;
            let v = Vector::new(g.basis_bracket(w[0], w[1]).to_vec());
            let bad = v.support().find(|(k, _)| els[*k].degree != d).map(|(k, _)| k);
            bad.map(|k| {
                Witness::new(
                    vec![w[0], w[1], k],
                    format!("degree {}", els[k].degree),
                    format!("degree {d}"),
                )
            })
        }),
    ));
    r.push(Check::from_sweep(
        "bracket adds parities",
        first_failure(n, 2, |w| {
            let p = els[w[0]].odd ^ els[w[1]].odd;
            let v = Vector::new(g.basis_bracket(w[0], w[1]).to_vec());
            let bad = v.support().find(|(k, _)| els[*k].odd != p).map(|(k, _)| k);
            bad.map(|k| Witness::new(vec![w[0], w[1], k], parity(els[k].odd), parity(p)))
        }),
    ));
    if g.is_super() {
        r.push(Check::from_sweep(
            "odd part is the sum of the odd degrees",
            first_failure_in(&[n], |w| {
                let e = &els[w[0]];
                (e.odd != (e.degree % 2 != 0))
                    .then(|| Witness::new(w.to_vec(), parity(e.odd), format!("degree {}", e.degree)))
            }),
        ));
    }
    r
}

fn parity(odd: bool) -> &'static str {
    if odd {
        "odd"
    } else {
        "even"
    }
}

/// A degree-reversing automorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiMap(pub LinearOperator);

impl PhiMap {
    pub fn op(&self) -> &LinearOperator {
        &self.0
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        self.0.apply(v)
    }
}

impl fmt::Display for PhiMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Automorphism, `Phi(g_i) = g_{-i}`, and `Phi^2 = id` when
/// `eps delta = -1` or `(-1)^i` on `g_i` when `eps delta = 1`.
pub fn phi_report(g: &GradedSuperalgebra, phi: &PhiMap, signs: SignPair) -> Report {
    let n = g.dim();
    let op = phi.op();
    let cols = op.columns();
    let els = g.elements();
    let mut r = Report::new(g.subject(), "phi");
    if op.dim() != n {
        r.push(Check::compare("phi acts on the algebra", op.dim(), n));
        return r;
    }
    r.push(Check::from_sweep(
        "phi[x,y] = [phi x, phi y]",
        first_failure(n, 2, |w| {
            let lhs = op.apply(&Vector::new(g.basis_bracket(w[0], w[1]).to_vec()));
            let rhs = g.bracket(&cols[w[0]], &cols[w[1]]);
            (lhs != rhs).then(|| Witness::new(w.to_vec(), lhs, rhs))
        }),
    ));
    r.push(Check::from_sweep(
        "phi(g_i) = g_-i",
        first_failure_in(&[n], |w| {
            let d = els[w[0]].degree;
            (!g.in_degree(&cols[w[0]], -d)).then(|| Witness::new(w.to_vec(), &cols[w[0]], format!("degree {}", -d)))
        }),
    ));
    let ed = signs.epsilon_sign() * signs.delta_sign();
    let sq = op.compose(op);
    r.push(Check::from_sweep(
        "phi^2 per eps delta",
        first_failure_in(&[n], |w| {
            let i = w[0];
            let flip = ed == 1 && els[i].degree % 2 != 0;
            let expected = if flip { -&g.basis(i) } else { g.basis(i) };
            let got = sq.column(i);
            (got != expected).then(|| Witness::new(w.to_vec(), got, expected))
        }),
    ));
    r
}

/// The triple product `xyz = [[x, Phi(y)], z]` on the degree-one
/// component, checked to be an (eps, delta) system whose K operators
/// satisfy `K(x,y)z = delta [[x,y], Phi(z)]`.
pub fn recover_fkts(g: &GradedSuperalgebra, phi: &PhiMap, signs: SignPair) -> Result<TripleSystem, Error> {
    let grading = check_grading(g);
    if let Some(c) = grading.first_failure() {
        return Err(Error::invalid(format!("grading: {}", c.name), c.witness.clone()));
    }
    if signs.delta_sign() == -1 && !g.is_super() && g.dim() > 0 && !g.component(1).is_empty() {
        return Err(Error::hypothesis(
            "delta = -1 needs a superalgebra with odd degree-one part",
        ));
    }
    let pr = phi_report(g, phi, signs);
    if let Some(c) = pr.first_failure() {
        return Err(Error::invalid(format!("phi: {}", c.name), c.witness.clone()));
    }
    let g1 = g.component(1);
    let m = g1.len();
    let embed = |i: usize| g.basis(g1[i]);
    let restrict = |v: &Vector| -> Result<Vector, Error> {
        if !g.in_degree(v, 1) {
            return Err(Error::invalid("product leaves the degree-one component", None));
        }
        Ok(Vector::new(g1.iter().map(|&k| v[k].clone()).collect()))
    };
    let mut products = Vec::with_capacity(m * m * m);
    for i in 0..m {
        for j in 0..m {
            let inner = g.bracket(&embed(i), &phi.apply(&embed(j)));
            for k in 0..m {
                products.push(restrict(&g.bracket(&inner, &embed(k)))?);
            }
        }
    }
    let mut t = TripleSystem::from_fn(m, |i, j, k| products[(i * m + j) * m + k].clone());
    if let Some(l) = g.label() {
        t = t.with_label(format!("{l}-g1"));
    }
    let fk = check_fkts(&t, signs);
    if let Some(c) = fk.first_failure() {
        return Err(Error::invalid(
            format!("recovered system: {}", c.name),
            c.witness.clone(),
        ));
    }
    let delta = signs.delta();
    let w = first_failure(m, 3, |w| {
        let (x, y, z) = (w[0], w[1], w[2]);
        let lhs = t
            .k(&Vector::basis(m, x), &Vector::basis(m, y), signs.delta_sign())
            .column(z);
        let ad = g.bracket(&g.bracket(&embed(x), &embed(y)), &phi.apply(&embed(z)));
        let rhs = match restrict(&ad) {
            Ok(v) => v.scale(&delta),
            Err(_) => return Some(Witness::new(w.to_vec(), lhs, ad)),
        };
        (lhs != rhs).then(|| Witness::new(w.to_vec(), lhs, rhs))
    });
    if let Some(w) = w {
        return Err(Error::invalid("K(x,y)z != delta [[x,y],Phi(z)]", Some(w)));
    }
    Ok(t)
}
