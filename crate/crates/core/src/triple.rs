//! Triple systems by structure constants, their L and K operators, and
//! exhaustive axiom sweeps.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::exact::{operator_inverse, span_basis_in, LinearOperator, Scalar, Vector};
use crate::report::{Check, Report, Witness};
use crate::sweep::first_failure;

/// The signs (epsilon, delta) of a Freudenthal-Kantor triple system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SignPair {
    epsilon: i8,
    delta: i8,
}

impl SignPair {
    /// Kantor triple systems.
    pub const KANTOR: SignPair = SignPair { epsilon: -1, delta: 1 };

    pub fn new(epsilon: i64, delta: i64) -> Result<Self, Error> {
        let sign = |s: i64| match s {
            1 => Ok(1),
            -1 => Ok(-1),
            other => Err(Error::InvalidSign(Scalar::from_int(other))),
        };
        Ok(SignPair {
            epsilon: sign(epsilon)?,
            delta: sign(delta)?,
        })
    }

    pub fn from_scalars(epsilon: &Scalar, delta: &Scalar) -> Result<Self, Error> {
        let as_sign = |s: &Scalar| {
            s.to_i64()
                .filter(|v| v.abs() == 1)
                .ok_or_else(|| Error::InvalidSign(s.clone()))
        };
        SignPair::new(as_sign(epsilon)?, as_sign(delta)?)
    }

    pub fn epsilon(&self) -> Scalar {
        Scalar::from_int(self.epsilon as i64)
    }

    pub fn delta(&self) -> Scalar {
        Scalar::from_int(self.delta as i64)
    }

    pub fn epsilon_sign(&self) -> i8 {
        self.epsilon
    }

    pub fn delta_sign(&self) -> i8 {
        self.delta
    }

    /// The same pair with epsilon negated.
    pub fn flip_epsilon(&self) -> SignPair {
        SignPair {
            epsilon: -self.epsilon,
            delta: self.delta,
        }
    }
}

impl fmt::Display for SignPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.epsilon, self.delta)
    }
}

impl FromStr for SignPair {
    type Err = Error;

    /// Parses `"e,d"`, e.g. `"-1,1"` or `"+1,-1"`, optionally parenthesized.
    fn from_str(s: &str) -> Result<Self, Error> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
        if parts.len() != 2 {
            return Err(Error::Parse(format!("expected a sign pair \"e,d\", got {s:?}")));
        }
        let parse = |p: &str| {
            p.trim_start_matches('+')
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad sign {p:?}")))
        };
        SignPair::new(parse(parts[0])?, parse(parts[1])?)
    }
}

/// A triple system on `F^dim`: `e_i e_j e_k = sum_l t[i][j][k][l] e_l`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TripleSystem {
    dim: usize,
    tensor: Vec<Scalar>,
    label: Option<String>,
}

impl TripleSystem {
    pub fn new(dim: usize, tensor: Vec<Scalar>) -> Result<Self, Error> {
        let expected = dim.pow(4);
        if tensor.len() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                found: tensor.len(),
            });
        }
        Ok(TripleSystem {
            dim,
            tensor,
            label: None,
        })
    }

    pub fn zero(dim: usize) -> Self {
        TripleSystem {
            dim,
            tensor: vec![Scalar::ZERO; dim.pow(4)],
            label: None,
        }
    }

    /// Builds the tensor from the basis products `e_i e_j e_k`.
    pub fn from_fn(dim: usize, mut product: impl FnMut(usize, usize, usize) -> Vector) -> Self {
        let mut tensor = Vec::with_capacity(dim.pow(4));
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    let v = product(i, j, k);
                    assert_eq!(v.dim(), dim, "basis product has wrong length");
                    tensor.extend(v.into_entries());
                }
            }
        }
        TripleSystem {
            dim,
            tensor,
            label: None,
        }
    }

    /// Builds the tensor from sparse `(i, j, k, l, value)` records.
    /// Repeated positions are summed.
    pub fn from_records(
        dim: usize,
        records: impl IntoIterator<Item = (usize, usize, usize, usize, Scalar)>,
    ) -> Result<Self, Error> {
        let mut t = TripleSystem::zero(dim);
        for (i, j, k, l, v) in records {
            if [i, j, k, l].iter().any(|&x| x >= dim) {
                return Err(Error::Parse(format!(
                    "record index ({i},{j},{k},{l}) out of range for dimension {dim}"
                )));
            }
            let at = t.offset(i, j, k) + l;
            t.tensor[at] += v;
        }
        Ok(t)
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

    pub fn tensor(&self) -> &[Scalar] {
        &self.tensor
    }

    pub fn entry(&self, i: usize, j: usize, k: usize, l: usize) -> &Scalar {
        &self.tensor[self.offset(i, j, k) + l]
    }

    /// Nonzero entries as `(i, j, k, l, value)` in lexicographic order.
    pub fn records(&self) -> impl Iterator<Item = (usize, usize, usize, usize, &Scalar)> {
        let n = self.dim;
        self.tensor
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(at, v)| (at / (n * n * n), at / (n * n) % n, at / n % n, at % n, v))
    }

    fn offset(&self, i: usize, j: usize, k: usize) -> usize {
        ((i * self.dim + j) * self.dim + k) * self.dim
    }

    /// Coordinates of `e_i e_j e_k`.
    pub fn basis_product(&self, i: usize, j: usize, k: usize) -> &[Scalar] {
        let o = self.offset(i, j, k);
        &self.tensor[o..o + self.dim]
    }

    pub fn product(&self, x: &Vector, y: &Vector, z: &Vector) -> Result<Vector, Error> {
        x.check_dim(self.dim)?;
        y.check_dim(self.dim)?;
        z.check_dim(self.dim)?;
        Ok(self.prod(x, y, z))
    }

    /// Trilinear contraction without dimension checks.
    pub(crate) fn prod(&self, x: &Vector, y: &Vector, z: &Vector) -> Vector {
        let mut out = Vector::zeros(self.dim);
        for (i, xi) in x.support() {
            for (j, yj) in y.support() {
                let xy = xi * yj;
                for (k, zk) in z.support() {
                    out.add_scaled_slice(&(&xy * zk), self.basis_product(i, j, k));
                }
            }
        }
        out
    }

    /// `L(x,y): z -> xyz`.
    pub fn l_op(&self, x: &Vector, y: &Vector) -> Result<LinearOperator, Error> {
        x.check_dim(self.dim)?;
        y.check_dim(self.dim)?;
        Ok(self.l(x, y))
    }

    pub(crate) fn l(&self, x: &Vector, y: &Vector) -> LinearOperator {
        let n = self.dim;
        LinearOperator::from_fn(n, |k| {
            let mut col = Vector::zeros(n);
            for (i, xi) in x.support() {
                for (j, yj) in y.support() {
                    col.add_scaled_slice(&(xi * yj), self.basis_product(i, j, k));
                }
            }
            col
        })
    }

    /// `K(x,y): z -> xzy - delta yzx`.
    pub fn k_op(&self, x: &Vector, y: &Vector, delta: &Scalar) -> Result<LinearOperator, Error> {
        x.check_dim(self.dim)?;
        y.check_dim(self.dim)?;
        let signs = SignPair::from_scalars(&Scalar::ONE, delta)?;
        Ok(self.k(x, y, signs.delta_sign()))
    }

    pub(crate) fn k(&self, x: &Vector, y: &Vector, delta: i8) -> LinearOperator {
        let n = self.dim;
        let d = Scalar::from_int(delta as i64);
        LinearOperator::from_fn(n, |k| {
            let z = Vector::basis(n, k);
            let mut col = self.prod(x, &z, y);
            col.add_scaled(&-&d, &self.prod(y, &z, x));
            col
        })
    }

    /// L and K on basis pairs, indexed `i * dim + j`.
    pub(crate) fn basis_operators(&self, delta: i8) -> (Vec<LinearOperator>, Vec<LinearOperator>) {
        let n = self.dim;
        let mut ls = Vec::with_capacity(n * n);
        let mut ks = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let (ei, ej) = (Vector::basis(n, i), Vector::basis(n, j));
                ls.push(self.l(&ei, &ej));
                ks.push(self.k(&ei, &ej, delta));
            }
        }
        (ls, ks)
    }

    /// The system `{xyz} = x S(y) z`.
    pub fn twisted_by(&self, s: &LinearOperator) -> Result<TripleSystem, Error> {
        s.check_dim(self.dim)?;
        let n = self.dim;
        let cols = s.columns();
        Ok(TripleSystem::from_fn(n, |i, j, k| {
            self.prod(&Vector::basis(n, i), &cols[j], &Vector::basis(n, k))
        }))
    }

    /// The same system written in a new basis whose vectors are the
    /// columns of `p`: returns the tensor of `p^-1 ((p x)(p y)(p z))`.
    pub fn change_basis(&self, p: &LinearOperator) -> Result<TripleSystem, Error> {
        p.check_dim(self.dim)?;
        let inv = operator_inverse(p)?;
        let cols = p.columns();
        Ok(TripleSystem::from_fn(self.dim, |i, j, k| {
            inv.apply(&self.prod(&cols[i], &cols[j], &cols[k]))
        }))
    }
}

/// A linear map on the space of a triple system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleMorphism(pub LinearOperator);

impl TripleMorphism {
    pub fn new(op: LinearOperator) -> Self {
        TripleMorphism(op)
    }

    pub fn op(&self) -> &LinearOperator {
        &self.0
    }
}

pub fn triple_product(t: &TripleSystem, x: &Vector, y: &Vector, z: &Vector) -> Result<Vector, Error> {
    t.product(x, y, z)
}

pub fn l_op(t: &TripleSystem, x: &Vector, y: &Vector) -> Result<LinearOperator, Error> {
    t.l_op(x, y)
}

pub fn k_op(t: &TripleSystem, x: &Vector, y: &Vector, delta: &Scalar) -> Result<LinearOperator, Error> {
    t.k_op(x, y, delta)
}

/// First column where two operators differ, as a witness with `prefix`
/// followed by the column index.
pub(crate) fn operator_mismatch(prefix: &[usize], lhs: &LinearOperator, rhs: &LinearOperator) -> Option<Witness> {
    if lhs == rhs {
        return None;
    }
    (0..lhs.dim()).find_map(|z| {
        let (a, b) = (lhs.column(z), rhs.column(z));
        (a != b).then(|| {
            let mut idx = prefix.to_vec();
            idx.push(z);
            Witness::new(idx, a, b)
        })
    })
}

fn lin_comb(coeffs: &[Scalar], ops: impl Fn(usize) -> LinearOperator, dim: usize) -> LinearOperator {
    let mut out = LinearOperator::zero(dim);
    for (l, c) in coeffs.iter().enumerate() {
        if !c.is_zero() {
            out.add_scaled(c, &ops(l));
        }
    }
    out
}

pub const GJTS_IDENTITY: &str = "uv(xyz) = (uvx)yz - x(vuy)z + xy(uvz)";
pub const KANTOR_K_IDENTITY: &str = "K(K(u,v)x,y) = K(u,v)L(x,y) + L(y,x)K(u,v)";
pub const FK_L_IDENTITY: &str = "[L(u,v),L(x,y)] = L(uvx,y) + eps L(x,vuy)";
pub const FK_K_IDENTITY: &str = "K(K(u,v)x,y) = L(y,x)K(u,v) - eps K(u,v)L(x,y)";

/// Sweep of the generalized Jordan identity, element by element over all
/// basis 5-tuples `(u,v,x,y,z)`.
pub fn gjts_witness(t: &TripleSystem) -> Option<Witness> {
    let n = t.dim();
    let e = |i: usize| Vector::basis(n, i);
    first_failure(n, 5, |w| {
        let (u, v, x, y, z) = (w[0], w[1], w[2], w[3], w[4]);
        let xyz = Vector::new(t.basis_product(x, y, z).to_vec());
        let lhs = t.prod(&e(u), &e(v), &xyz);
        let uvx = Vector::new(t.basis_product(u, v, x).to_vec());
        let vuy = Vector::new(t.basis_product(v, u, y).to_vec());
        let uvz = Vector::new(t.basis_product(u, v, z).to_vec());
        let mut rhs = t.prod(&uvx, &e(y), &e(z));
        rhs.add_scaled(&Scalar::from_int(-1), &t.prod(&e(x), &vuy, &e(z)));
        rhs.add_scaled(&Scalar::ONE, &t.prod(&e(x), &e(y), &uvz));
        (lhs != rhs).then(|| Witness::new(w.to_vec(), lhs, rhs))
    })
}

pub fn check_gjts(t: &TripleSystem) -> Report {
    let mut r = Report::new(subject(t), "gjts");
    r.push(Check::from_sweep(GJTS_IDENTITY, gjts_witness(t)));
    r
}

/// The Kantor K-identity swept element by element over `(u,v,x,y,z)`.
pub fn kantor_k_witness(t: &TripleSystem) -> Option<Witness> {
    let n = t.dim();
    let e = |i: usize| Vector::basis(n, i);
    let k = |a: &Vector, b: &Vector, c: &Vector| {
        let mut r = t.prod(a, c, b);
        r.add_scaled(&Scalar::from_int(-1), &t.prod(b, c, a));
        r
    };
    first_failure(n, 5, |w| {
        let (u, v, x, y, z) = (e(w[0]), e(w[1]), e(w[2]), e(w[3]), e(w[4]));
        let kuvx = k(&u, &v, &x);
        let lhs = k(&kuvx, &y, &z);
        let mut rhs = k(&u, &v, &t.prod(&x, &y, &z));
        rhs.add_scaled(&Scalar::ONE, &t.prod(&y, &x, &k(&u, &v, &z)));
        (lhs != rhs).then(|| Witness::new(w.to_vec(), lhs, rhs))
    })
}

/// Generalized Jordan identity plus the Kantor K-identity.
pub fn check_kts(t: &TripleSystem) -> Report {
    let mut r = Report::new(subject(t), "kantor");
    r.push(Check::from_sweep(GJTS_IDENTITY, gjts_witness(t)));
    r.push(Check::from_sweep(KANTOR_K_IDENTITY, kantor_k_witness(t)));
    r
}

/// Both Freudenthal-Kantor identities as operator equalities over all
/// basis quadruples. Witnesses are `(u,v,x,y,z)` with `z` the first
/// column where the operators differ.
pub fn check_fkts(t: &TripleSystem, signs: SignPair) -> Report {
    let n = t.dim();
    let eps = signs.epsilon();
    let (ls, ks) = t.basis_operators(signs.delta_sign());
    let at = |i: usize, j: usize| i * n + j;

    let fk1 = first_failure(n, 4, |w| {
        let (u, v, x, y) = (w[0], w[1], w[2], w[3]);
        let lhs = ls[at(u, v)].commutator(&ls[at(x, y)]);
        let mut rhs = lin_comb(t.basis_product(u, v, x), |l| ls[at(l, y)].clone(), n);
        let right = lin_comb(t.basis_product(v, u, y), |l| ls[at(x, l)].clone(), n);
        rhs.add_scaled(&eps, &right);
        operator_mismatch(w, &lhs, &rhs)
    });

    let fk2 = first_failure(n, 4, |w| {
        let (u, v, x, y) = (w[0], w[1], w[2], w[3]);
        let kuv = &ks[at(u, v)];
        let kx = kuv.column(x);
        let lhs = lin_comb(kx.entries(), |l| ks[at(l, y)].clone(), n);
        let mut rhs = ls[at(y, x)].compose(kuv);
        rhs.add_scaled(&-&eps, &kuv.compose(&ls[at(x, y)]));
        operator_mismatch(w, &lhs, &rhs)
    });

    let mut r = Report::new(subject(t), format!("fkts:{signs}"));
    r.push(Check::from_sweep(FK_L_IDENTITY, fk1));
    r.push(Check::from_sweep(FK_K_IDENTITY, fk2));
    r
}

pub fn is_left_unit(t: &TripleSystem, e: &Vector) -> bool {
    e.dim() == t.dim() && t.l(e, e).is_identity()
}

/// First basis triple where `S(e_i e_j e_k) != S(e_i) S(e_j) S(e_k)`,
/// comparing `t` on the left with `target` on the right.
pub fn morphism_witness(t: &TripleSystem, target: &TripleSystem, s: &LinearOperator) -> Option<Witness> {
    let n = t.dim();
    let cols = s.columns();
    first_failure(n, 3, |w| {
        let lhs = s.apply(&Vector::new(t.basis_product(w[0], w[1], w[2]).to_vec()));
        let rhs = target.prod(&cols[w[0]], &cols[w[1]], &cols[w[2]]);
        (lhs != rhs).then(|| Witness::new(w.to_vec(), lhs, rhs))
    })
}

pub fn is_automorphism(t: &TripleSystem, s: &TripleMorphism) -> Result<bool, Error> {
    s.op().check_dim(t.dim())?;
    operator_inverse(s.op())?;
    Ok(morphism_witness(t, t, s.op()).is_none())
}

/// First basis pair where `K(x,y) != eps delta L(y,x) - eps L(x,y)`.
pub fn special_witness(t: &TripleSystem, signs: SignPair) -> Option<Witness> {
    let n = t.dim();
    let (ls, ks) = t.basis_operators(signs.delta_sign());
    let eps = signs.epsilon();
    let ed = &eps * &signs.delta();
    first_failure(n, 2, |w| {
        let (x, y) = (w[0], w[1]);
        let mut rhs = ls[y * n + x].scale(&ed);
        rhs.add_scaled(&-&eps, &ls[x * n + y]);
        operator_mismatch(w, &ks[x * n + y], &rhs)
    })
}

pub fn check_special(t: &TripleSystem, signs: SignPair) -> bool {
    special_witness(t, signs).is_none()
}

pub fn check_unitary(t: &TripleSystem, signs: SignPair) -> bool {
    let (_, ks) = t.basis_operators(signs.delta_sign());
    let span = span_basis_in(t.dim(), ks.iter()).expect("operators share the system dimension");
    span.contains(&LinearOperator::identity(t.dim()))
}

/// Special and unitary verdicts, together with the implication that a
/// unitary system has `eps = delta` and is special.
pub fn special_unitary_report(t: &TripleSystem, signs: SignPair) -> Report {
    let special = special_witness(t, signs);
    let unitary = check_unitary(t, signs);
    let mut r = Report::new(subject(t), "special-unitary");
    r.push(Check::from_sweep(
        "special: K(x,y) = eps delta L(y,x) - eps L(x,y)",
        special.clone(),
    ));
    r.push(Check::compare("unitary: id in K(U,U)", unitary, true));
    let implication = !unitary || (signs.epsilon == signs.delta && special.is_none());
    r.push(Check::compare(
        "unitary implies eps = delta and special",
        implication,
        true,
    ));
    r
}

pub(crate) fn subject(t: &TripleSystem) -> String {
    t.label().unwrap_or("triple system").to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn scalar_system() -> TripleSystem {
        TripleSystem::from_records(1, [(0, 0, 0, 0, Scalar::ONE)]).unwrap()
    }

    #[test]
    fn sign_pair_parsing() {
        assert_eq!("-1,1".parse::<SignPair>().unwrap(), SignPair::KANTOR);
        assert_eq!("(+1,-1)".parse::<SignPair>().unwrap(), SignPair::new(1, -1).unwrap());
        assert!("2,1".parse::<SignPair>().is_err());
        assert!("1".parse::<SignPair>().is_err());
        assert_eq!(SignPair::new(1, -1).unwrap().to_string(), "1,-1");
        assert!(matches!(
            SignPair::from_scalars(&Scalar::new(1, 2).unwrap(), &Scalar::ONE),
            Err(Error::InvalidSign(_))
        ));
    }

    #[test]
    fn scalar_products() {
        let t = scalar_system();
        let v = |n| Vector::from_ints(&[n]);
        assert_eq!(t.product(&v(2), &v(3), &v(5)).unwrap(), v(30));
        assert_eq!(t.product(&v(0), &v(3), &v(5)).unwrap(), v(0));
        assert_eq!(
            t.l_op(&v(2), &v(3)).unwrap(),
            LinearOperator::scalar(1, Scalar::from_int(6))
        );
        assert_eq!(
            t.k_op(&v(1), &v(1), &Scalar::from_int(-1)).unwrap(),
            LinearOperator::scalar(1, Scalar::from_int(2))
        );
        assert!(t.k_op(&v(1), &v(1), &Scalar::ONE).unwrap().is_zero());
        assert!(t.k_op(&v(1), &v(1), &Scalar::from_int(2)).is_err());
        assert!(t.product(&Vector::zeros(2), &v(1), &v(1)).is_err());
    }

    #[test]
    fn scalar_system_verdicts() {
        let t = scalar_system();
        assert!(check_gjts(&t).passed());
        assert!(check_fkts(&t, SignPair::new(-1, -1).unwrap()).passed());
        assert!(check_fkts(&t, SignPair::KANTOR).passed());
        let bad = check_fkts(&t, SignPair::new(1, -1).unwrap());
        assert!(!bad.passed());
        assert_eq!(
            bad.first_failure().unwrap().witness.as_ref().unwrap().indices,
            vec![0; 5]
        );
        assert!(check_special(&t, SignPair::new(-1, -1).unwrap()));
    }

    #[test]
    fn gjts_counterexample() {
        let t = TripleSystem::from_records(2, [(0, 0, 1, 0, Scalar::ONE)]).unwrap();
        let w = gjts_witness(&t).unwrap();
        assert_eq!(w.indices, vec![0, 0, 0, 1, 1]);
    }

    #[test]
    fn automorphisms_of_scalar_system() {
        let t = scalar_system();
        let id = TripleMorphism::new(LinearOperator::identity(1));
        let two = TripleMorphism::new(LinearOperator::scalar(1, Scalar::from_int(2)));
        assert!(is_automorphism(&t, &id).unwrap());
        assert!(!is_automorphism(&t, &two).unwrap());
        let zero = TripleMorphism::new(LinearOperator::zero(1));
        assert_eq!(is_automorphism(&t, &zero), Err(Error::NotInvertible));
    }

    #[test]
    fn records_roundtrip() {
        let t = TripleSystem::from_records(
            2,
            [
                (0, 1, 0, 1, Scalar::from_int(3)),
                (1, 1, 1, 0, Scalar::new(-1, 2).unwrap()),
            ],
        )
        .unwrap();
        let recs: Vec<_> = t.records().map(|(i, j, k, l, v)| (i, j, k, l, v.clone())).collect();
        assert_eq!(TripleSystem::from_records(2, recs).unwrap(), t);
        assert!(TripleSystem::from_records(2, [(0, 0, 0, 2, Scalar::ONE)]).is_err());
    }
}
