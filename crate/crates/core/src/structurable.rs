//! Unital algebras with involution, the structurable identities, and the
//! Kantor triple systems they carry.

use crate::error::Error;
use crate::exact::{operator_inverse, LinearOperator, Scalar, Subspace, Vector};
use crate::report::{Check, Report, Witness};
use crate::sweep::first_failure;
use crate::triple::{check_fkts, is_left_unit, operator_mismatch, SignPair, TripleSystem};

/// A unital algebra on `F^dim` with `e_i e_j = sum_k c[i][j][k] e_k`, an
/// involution and a distinguished unit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvolutiveAlgebra {
    dim: usize,
    product: Vec<Scalar>,
    involution: LinearOperator,
    unit: Vector,
    label: Option<String>,
}

impl InvolutiveAlgebra {
    /// Validates that `unit` is a two-sided unit and that `involution` is
    /// a period-two anti-automorphism fixing it.
    pub fn new(dim: usize, product: Vec<Scalar>, involution: LinearOperator, unit: Vector) -> Result<Self, Error> {
        let a = Self::new_unchecked(dim, product, involution, unit)?;
        if let Some(c) = a.involution_report().first_failure() {
            return Err(Error::invalid(c.name.clone(), c.witness.clone()));
        }
        Ok(a)
    }

    /// Checks shapes only. Used to build deliberately broken inputs.
    pub fn new_unchecked(
        dim: usize,
        product: Vec<Scalar>,
        involution: LinearOperator,
        unit: Vector,
    ) -> Result<Self, Error> {
        if product.len() != dim.pow(3) {
            return Err(Error::DimensionMismatch {
                expected: dim.pow(3),
                found: product.len(),
            });
        }
        involution.check_dim(dim)?;
        unit.check_dim(dim)?;
        Ok(InvolutiveAlgebra {
            dim,
            product,
            involution,
            unit,
            label: None,
        })
    }

    /// Builds the product from sparse `(i, j, k, value)` records.
    pub fn from_records(
        dim: usize,
        records: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
        involution: LinearOperator,
        unit: Vector,
    ) -> Result<Self, Error> {
        Self::new(dim, product_from_records(dim, records)?, involution, unit)
    }

    pub fn from_fn(
        dim: usize,
        mut product: impl FnMut(usize, usize) -> Vector,
        involution: LinearOperator,
        unit: Vector,
    ) -> Result<Self, Error> {
        let mut flat = Vec::with_capacity(dim.pow(3));
        for i in 0..dim {
            for j in 0..dim {
                let v = product(i, j);
                v.check_dim(dim)?;
                flat.extend(v.into_entries());
            }
        }
        Self::new(dim, flat, involution, unit)
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn product_tensor(&self) -> &[Scalar] {
        &self.product
    }

    pub fn involution(&self) -> &LinearOperator {
        &self.involution
    }

    pub fn unit(&self) -> &Vector {
        &self.unit
    }

    /// Nonzero product entries as `(i, j, k, value)`.
    pub fn records(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> {
        let n = self.dim;
        self.product
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(at, v)| (at / (n * n), at / n % n, at % n, v))
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[Scalar] {
        let o = (i * self.dim + j) * self.dim;
        &self.product[o..o + self.dim]
    }

    pub fn mul(&self, x: &Vector, y: &Vector) -> Vector {
        let mut out = Vector::zeros(self.dim);
        for (i, xi) in x.support() {
            for (j, yj) in y.support() {
                out.add_scaled_slice(&(xi * yj), self.basis_product(i, j));
            }
        }
        out
    }

    pub fn conj(&self, x: &Vector) -> Vector {
        self.involution.apply(x)
    }

    /// `(x,y,z) = (xy)z - x(yz)`.
    pub fn associator(&self, x: &Vector, y: &Vector, z: &Vector) -> Result<Vector, Error> {
        for v in [x, y, z] {
            v.check_dim(self.dim)?;
        }
        Ok(self.assoc(x, y, z))
    }

    fn assoc(&self, x: &Vector, y: &Vector, z: &Vector) -> Vector {
        &self.mul(&self.mul(x, y), z) - &self.mul(x, &self.mul(y, z))
    }

    /// `V_{x,y}(z) = (x ybar) z + (z ybar) x - (z xbar) y`.
    pub fn v_op(&self, x: &Vector, y: &Vector) -> Result<LinearOperator, Error> {
        x.check_dim(self.dim)?;
        y.check_dim(self.dim)?;
        Ok(self.v(x, y))
    }

    pub(crate) fn v(&self, x: &Vector, y: &Vector) -> LinearOperator {
        let (xb, yb) = (self.conj(x), self.conj(y));
        let xyb = self.mul(x, &yb);
        LinearOperator::from_fn(self.dim, |k| {
            let z = Vector::basis(self.dim, k);
            let mut out = self.mul(&xyb, &z);
            out.add_scaled(&Scalar::ONE, &self.mul(&self.mul(&z, &yb), x));
            out.add_scaled(&Scalar::from_int(-1), &self.mul(&self.mul(&z, &xb), y));
            out
        })
    }

    /// Left multiplication by `f`.
    pub fn left_mul(&self, f: &Vector) -> LinearOperator {
        LinearOperator::from_fn(self.dim, |k| self.mul(f, &Vector::basis(self.dim, k)))
    }

    /// Unit and involution axioms as individual checks.
    pub fn involution_report(&self) -> Report {
        let n = self.dim;
        let e = |i| Vector::basis(n, i);
        let mut r = Report::new(self.subject(), "involution");
        r.push(Check::from_sweep(
            "1x = x = x1",
            first_failure(n, 1, |w| {
                let x = e(w[0]);
                let (l, rr) = (self.mul(&self.unit, &x), self.mul(&x, &self.unit));
                if l != x {
                    Some(Witness::new(w.to_vec(), l, x))
                } else {
                    (rr != x).then(|| Witness::new(w.to_vec(), rr, x))
                }
            }),
        ));
        r.push(Check::from_sweep(
            "involution has period two",
            operator_mismatch(
                &[],
                &self.involution.compose(&self.involution),
                &LinearOperator::identity(n),
            ),
        ));
        r.push(Check::compare(
            "involution fixes the unit",
            self.conj(&self.unit),
            self.unit.clone(),
        ));
        r.push(Check::from_sweep(
            "bar(xy) = bar(y) bar(x)",
            first_failure(n, 2, |w| {
                let (x, y) = (e(w[0]), e(w[1]));
                let lhs = self.conj(&self.mul(&x, &y));
                let rhs = self.mul(&self.conj(&y), &self.conj(&x));
                (lhs != rhs).then(|| Witness::new(w.to_vec(), lhs, rhs))
            }),
        ));
        r
    }

    fn subject(&self) -> String {
        self.label().unwrap_or("algebra").to_string()
    }
}

pub(crate) fn product_from_records(
    dim: usize,
    records: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
) -> Result<Vec<Scalar>, Error> {
    let mut flat = vec![Scalar::ZERO; dim.pow(3)];
    for (i, j, k, v) in records {
        if i >= dim || j >= dim || k >= dim {
            return Err(Error::Parse(format!(
                "record index ({i},{j},{k}) out of range for dimension {dim}"
            )));
        }
        flat[(i * dim + j) * dim + k] += v;
    }
    Ok(flat)
}

/// A linear map on the space of an algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraMorphism(pub LinearOperator);

impl AlgebraMorphism {
    pub fn new(op: LinearOperator) -> Self {
        AlgebraMorphism(op)
    }

    pub fn op(&self) -> &LinearOperator {
        &self.0
    }
}

pub fn associator(a: &InvolutiveAlgebra, x: &Vector, y: &Vector, z: &Vector) -> Result<Vector, Error> {
    a.associator(x, y, z)
}

pub fn v_op(a: &InvolutiveAlgebra, x: &Vector, y: &Vector) -> Result<LinearOperator, Error> {
    a.v_op(x, y)
}

pub const SKEW_ASSOCIATOR_IDENTITY: &str = "(x - bar x, y, z) = (y, bar x - x, z)";
pub const V_COMMUTATOR_IDENTITY: &str = "[V(u,v),V(x,y)] = V(V(u,v)x,y) - V(x,V(v,u)y)";

/// Involution axioms, the skew associator identity over basis triples and
/// the V-commutator identity over basis quadruples.
pub fn check_structurable(a: &InvolutiveAlgebra) -> Report {
    let n = a.dim();
    let e = |i| Vector::basis(n, i);
    let mut r = a.involution_report();
    r.suite = "structurable".into();

    r.push(Check::from_sweep(
        SKEW_ASSOCIATOR_IDENTITY,
        first_failure(n, 3, |w| {
            let (x, y, z) = (e(w[0]), e(w[1]), e(w[2]));
            let s = &x - &a.conj(&x);
            let lhs = a.assoc(&s, &y, &z);
            let rhs = a.assoc(&y, &-&s, &z);
            (lhs != rhs).then(|| Witness::new(w.to_vec(), lhs, rhs))
        }),
    ));

    let vs: Vec<LinearOperator> = (0..n * n).map(|ij| a.v(&e(ij / n), &e(ij % n))).collect();
    let comb = |coeffs: Vector, op: &dyn Fn(usize) -> usize| {
        let mut out = LinearOperator::zero(n);
        for (l, c) in coeffs.support() {
            out.add_scaled(c, &vs[op(l)]);
        }
        out
    };
    r.push(Check::from_sweep(
        V_COMMUTATOR_IDENTITY,
        first_failure(n, 4, |w| {
            let (u, v, x, y) = (w[0], w[1], w[2], w[3]);
            let lhs = vs[u * n + v].commutator(&vs[x * n + y]);
            let mut rhs = comb(vs[u * n + v].column(x), &|l| l * n + y);
            rhs.add_scaled(&Scalar::from_int(-1), &comb(vs[v * n + u].column(y), &|l| x * n + l));
            operator_mismatch(w, &lhs, &rhs)
        }),
    ));
    r
}

/// First failure of `S(xy) = S(x)S(y)`, `S bar = bar S`, `S(1) = 1`.
pub fn algebra_automorphism_report(a: &InvolutiveAlgebra, s: &AlgebraMorphism) -> Report {
    let n = a.dim();
    let op = s.op();
    let cols = op.columns();
    let mut r = Report::new(a.subject(), "algebra automorphism");
    r.push(Check::from_sweep(
        "S(xy) = S(x)S(y)",
        first_failure(n, 2, |w| {
            let lhs = op.apply(&Vector::new(a.basis_product(w[0], w[1]).to_vec()));
            let rhs = a.mul(&cols[w[0]], &cols[w[1]]);
            (lhs != rhs).then(|| Witness::new(w.to_vec(), lhs, rhs))
        }),
    ));
    r.push(Check::from_sweep(
        "S commutes with the involution",
        operator_mismatch(&[], &op.compose(a.involution()), &a.involution().compose(op)),
    ));
    r.push(Check::compare("S fixes the unit", op.apply(a.unit()), a.unit().clone()));
    r
}

fn require(report: &Report, what: &str) -> Result<(), Error> {
    match report.first_failure() {
        None => Ok(()),
        Some(c) => Err(Error::invalid(format!("{what}: {}", c.name), c.witness.clone())),
    }
}

/// Post-hoc checks for a triple system derived from an algebra: the
/// Kantor identities and the unit conditions `eex = x`,
/// `2 xee + exe = 3x`.
pub fn derived_kts_report(t: &TripleSystem, e: &Vector) -> Report {
    let n = t.dim();
    let mut r = check_fkts(t, SignPair::KANTOR);
    r.suite = "derived kantor system".into();
    r.push(Check::from_sweep(
        "eex = x",
        operator_mismatch(&[], &t.l(e, e), &LinearOperator::identity(n)),
    ));
    r.push(Check::from_sweep(
        "2 xee + exe = 3x",
        first_failure(n, 1, |w| {
            let x = Vector::basis(n, w[0]);
            let mut lhs = t.prod(&x, e, e).scale(&Scalar::from_int(2));
            lhs.add_scaled(&Scalar::ONE, &t.prod(e, &x, e));
            let rhs = x.scale(&Scalar::from_int(3));
            (lhs != rhs).then(|| Witness::new(w.to_vec(), lhs, rhs))
        }),
    ));
    r
}

/// The Kantor triple system `{xyz} = V_{x,y}(z)`.
pub fn kts_from_structurable(a: &InvolutiveAlgebra) -> Result<TripleSystem, Error> {
    require(&check_structurable(a), "not structurable")?;
    let t = v_system(a, &LinearOperator::identity(a.dim()));
    require(&derived_kts_report(&t, a.unit()), "derived system")?;
    Ok(t)
}

/// The Kantor triple system `xyz = V_{x,S(y)}(z)` for an involutive
/// automorphism `S`.
pub fn twisted_kts(a: &InvolutiveAlgebra, s: &AlgebraMorphism) -> Result<TripleSystem, Error> {
    s.op().check_dim(a.dim())?;
    require(&algebra_automorphism_report(a, s), "not an automorphism")?;
    if !s.op().compose(s.op()).is_identity() {
        return Err(Error::hypothesis("automorphism is not involutive"));
    }
    require(&check_structurable(a), "not structurable")?;
    let t = v_system(a, s.op());
    require(&check_fkts(&t, SignPair::KANTOR), "twisted system")?;
    if !is_left_unit(&t, a.unit()) {
        return Err(Error::NotLeftUnit(a.unit().to_string()));
    }
    Ok(t)
}

fn v_system(a: &InvolutiveAlgebra, s: &LinearOperator) -> TripleSystem {
    let n = a.dim();
    let cols = s.columns();
    let vs: Vec<LinearOperator> = (0..n * n)
        .map(|ij| a.v(&Vector::basis(n, ij / n), &cols[ij % n]))
        .collect();
    let mut t = TripleSystem::from_fn(n, |i, j, k| vs[i * n + j].column(k));
    if let Some(l) = a.label() {
        t = t.with_label(l);
    }
    t
}

/// The `+1` and `-1` eigenspaces of the involution.
pub fn hermitian_skew_split(a: &InvolutiveAlgebra) -> (Subspace, Subspace) {
    let id = LinearOperator::identity(a.dim());
    ((a.involution() - &id).kernel(), (a.involution() + &id).kernel())
}

/// Whether `S` is an invertible algebra automorphism commuting with the
/// involution and fixing the unit.
pub fn is_algebra_automorphism(a: &InvolutiveAlgebra, s: &AlgebraMorphism) -> bool {
    s.op().dim() == a.dim() && operator_inverse(s.op()).is_ok() && algebra_automorphism_report(a, s).passed()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field() -> InvolutiveAlgebra {
        InvolutiveAlgebra::from_records(
            1,
            [(0, 0, 0, Scalar::ONE)],
            LinearOperator::identity(1),
            Vector::from_ints(&[1]),
        )
        .unwrap()
    }

    #[test]
    fn field_basics() {
        let a = field();
        let v = |n| Vector::from_ints(&[n]);
        assert!(check_structurable(&a).passed());
        assert_eq!(
            a.v_op(&v(2), &v(3)).unwrap(),
            LinearOperator::scalar(1, Scalar::from_int(6))
        );
        assert!(a.associator(&v(1), &v(1), &v(1)).unwrap().is_zero());
        let t = kts_from_structurable(&a).unwrap();
        assert_eq!(t.entry(0, 0, 0, 0), &Scalar::ONE);
        let (h, s) = hermitian_skew_split(&a);
        assert_eq!((h.dim(), s.dim()), (1, 0));
    }

    #[test]
    fn rejects_bad_unit() {
        let r = InvolutiveAlgebra::from_records(
            1,
            [(0, 0, 0, Scalar::ONE)],
            LinearOperator::identity(1),
            Vector::from_ints(&[2]),
        );
        assert!(matches!(r, Err(Error::ConstructionInvalid { .. })));
    }
}
