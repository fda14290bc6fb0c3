use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{rref, Scalar, Subspace, Vector};
use crate::error::Error;

/// A square matrix acting on column vectors: applying it to `e_j` gives column `j`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinearOperator {
    dim: usize,
    /// Row-major `dim * dim` entries.
    entries: Vec<Scalar>,
}

impl LinearOperator {
    pub fn zero(dim: usize) -> Self {
        LinearOperator {
            dim,
            entries: vec![Scalar::ZERO; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::scalar(dim, Scalar::ONE)
    }

    /// `c * id`.
    pub fn scalar(dim: usize, c: Scalar) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = c.clone();
        }
        m
    }

    pub fn diagonal(diag: &[Scalar]) -> Self {
        let mut m = Self::zero(diag.len());
        for (i, c) in diag.iter().enumerate() {
            m.entries[i * diag.len() + i] = c.clone();
        }
        m
    }

    /// Row-major flat entries; fails unless there are exactly `dim * dim`.
    pub fn from_flat(dim: usize, entries: Vec<Scalar>) -> Result<Self, Error> {
        if entries.len() != dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim,
                found: entries.len(),
            });
        }
        Ok(LinearOperator { dim, entries })
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self, Error> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(LinearOperator { dim, entries })
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Result<Self, Error> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&n| Scalar::from_int(n)).collect())
                .collect(),
        )
    }

    /// Operator whose `j`-th column is `columns[j]`.
    pub fn from_columns(columns: &[Vector]) -> Result<Self, Error> {
        let dim = columns.len();
        let mut m = Self::zero(dim);
        for (j, col) in columns.iter().enumerate() {
            col.check_dim(dim)?;
            for (i, c) in col.iter().enumerate() {
                m.entries[i * dim + j] = c.clone();
            }
        }
        Ok(m)
    }

    /// Operator given by its action on basis vectors.
    pub fn from_fn(dim: usize, mut image: impl FnMut(usize) -> Vector) -> Self {
        let mut m = Self::zero(dim);
        for j in 0..dim {
            let col = image(j);
            debug_assert_eq!(col.dim(), dim);
            for (i, c) in col.into_entries().into_iter().enumerate() {
                m.entries[i * dim + j] = c;
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &Scalar {
        &self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Scalar) {
        self.entries[row * self.dim + col] = value;
    }

    pub fn flat(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<Scalar>> {
        self.entries.chunks(self.dim.max(1)).map(|r| r.to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vector {
        Vector::new((0..self.dim).map(|i| self.get(i, j).clone()).collect())
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.dim).map(|j| self.column(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.dim)
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        debug_assert_eq!(v.dim(), self.dim);
        let mut out = Vector::zeros(self.dim);
        for (j, c) in v.support() {
            for i in 0..self.dim {
                let a = self.get(i, j);
                if !a.is_zero() {
                    out[i] += a * c;
                }
            }
        }
        out
    }

    pub fn try_apply(&self, v: &Vector) -> Result<Vector, Error> {
        v.check_dim(self.dim)?;
        Ok(self.apply(v))
    }

    pub fn compose(&self, rhs: &LinearOperator) -> LinearOperator {
        debug_assert_eq!(self.dim, rhs.dim);
        let n = self.dim;
        let mut out = Self::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * n + j] += a * b;
                    }
                }
            }
        }
        out
    }

    /// `[self, rhs] = self rhs - rhs self`.
    pub fn commutator(&self, rhs: &LinearOperator) -> LinearOperator {
        &self.compose(rhs) - &rhs.compose(self)
    }

    pub fn scale(&self, c: &Scalar) -> LinearOperator {
        LinearOperator {
            dim: self.dim,
            entries: self.entries.iter().map(|x| x * c).collect(),
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: &Scalar, other: &LinearOperator) {
        debug_assert_eq!(self.dim, other.dim);
        if c.is_zero() {
            return;
        }
        for (a, b) in self.entries.iter_mut().zip(&other.entries) {
            if !b.is_zero() {
                *a += c * b;
            }
        }
    }

    pub fn transpose(&self) -> LinearOperator {
        Self::from_fn(self.dim, |j| {
            Vector::new(self.entries[j * self.dim..(j + 1) * self.dim].to_vec())
        })
    }

    pub fn pow(&self, k: u32) -> LinearOperator {
        let mut acc = Self::identity(self.dim);
        for _ in 0..k {
            acc = acc.compose(self);
        }
        acc
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.rows();
        rref(&mut rows).len()
    }

    /// Null space as a subspace of the domain.
    pub fn kernel(&self) -> Subspace {
        Subspace::from_vectors(self.dim, super::null_space(&self.rows(), self.dim))
            .expect("kernel vectors have the ambient dimension")
    }

    /// Column space.
    pub fn image(&self) -> Subspace {
        Subspace::from_vectors(self.dim, self.columns()).expect("columns have the ambient dimension")
    }

    pub(crate) fn check_dim(&self, expected: usize) -> Result<(), Error> {
        if self.dim == expected {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected,
                found: self.dim,
            })
        }
    }
}

impl Add for &LinearOperator {
    type Output = LinearOperator;
    fn add(self, rhs: &LinearOperator) -> LinearOperator {
        debug_assert_eq!(self.dim, rhs.dim);
        LinearOperator {
            dim: self.dim,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &LinearOperator {
    type Output = LinearOperator;
    fn sub(self, rhs: &LinearOperator) -> LinearOperator {
        debug_assert_eq!(self.dim, rhs.dim);
        LinearOperator {
            dim: self.dim,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &LinearOperator {
    type Output = LinearOperator;
    fn neg(self) -> LinearOperator {
        self.scale(&-Scalar::ONE)
    }
}

impl Mul for &LinearOperator {
    type Output = LinearOperator;
    fn mul(self, rhs: &LinearOperator) -> LinearOperator {
        self.compose(rhs)
    }
}

impl Mul<&Vector> for &LinearOperator {
    type Output = Vector;
    fn mul(self, rhs: &Vector) -> Vector {
        self.apply(rhs)
    }
}

impl fmt::Debug for LinearOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.dim {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.dim {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        write!(f, "]")
    }
}

/// Exact inverse by Gauss-Jordan elimination on `[M | id]`.
pub fn operator_inverse(m: &LinearOperator) -> Result<LinearOperator, Error> {
    let n = m.dim;
    let mut aug: Vec<Vec<Scalar>> = (0..n)
        .map(|i| {
            let mut row = m.entries[i * n..(i + 1) * n].to_vec();
            row.extend((0..n).map(|j| if i == j { Scalar::ONE } else { Scalar::ZERO }));
            row
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() < n || pivots.iter().enumerate().any(|(r, &c)| r != c) {
        return Err(Error::NotInvertible);
    }
    LinearOperator::from_rows(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// `sum_i coeffs[i] * M^i`, by Horner's rule.
pub fn poly_on_operator(m: &LinearOperator, coeffs: &[Scalar]) -> LinearOperator {
    let n = m.dim;
    let mut acc = LinearOperator::zero(n);
    for c in coeffs.iter().rev() {
        acc = acc.compose(m);
        for i in 0..n {
            acc.entries[i * n + i] += c;
        }
    }
    acc
}

/// Complementary projections onto the two eigenspaces of an operator
/// annihilated by `(x - r1)(x - r2)`.
pub fn eigenprojections(
    m: &LinearOperator,
    roots: (&Scalar, &Scalar),
) -> Result<(LinearOperator, LinearOperator), Error> {
    let (r1, r2) = roots;
    if r1 == r2 {
        return Err(Error::DegenerateRoots);
    }
    let n = m.dim;
    let id = LinearOperator::identity(n);
    let a = m - &id.scale(r1);
    let b = m - &id.scale(r2);
    if !a.compose(&b).is_zero() {
        return Err(Error::HypothesisViolation(format!(
            "operator is not annihilated by (x - {r1})(x - {r2})"
        )));
    }
    let p1 = b.scale(&(r1 - r2).recip().expect("roots differ"));
    let p2 = &id - &p1;
    Ok((p1, p2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(rows: &[&[i64]]) -> LinearOperator {
        LinearOperator::from_int_rows(rows).unwrap()
    }

    #[test]
    fn inverse_examples() {
        let id = LinearOperator::identity(3);
        assert_eq!(operator_inverse(&id).unwrap(), id);
        let d = ints(&[&[1, 0], &[0, 3]]);
        let inv = operator_inverse(&d).unwrap();
        assert_eq!(
            inv,
            LinearOperator::diagonal(&[Scalar::ONE, Scalar::new(1, 3).unwrap()])
        );
        assert!(operator_inverse(&ints(&[&[1, 2], &[2, 4]])).is_err());
        assert_eq!(operator_inverse(&LinearOperator::zero(2)), Err(Error::NotInvertible));
    }

    #[test]
    fn inverse_needs_row_swaps() {
        let m = ints(&[&[0, 1, 0], &[0, 0, 2], &[3, 0, 0]]);
        let inv = operator_inverse(&m).unwrap();
        assert!(m.compose(&inv).is_identity());
        assert!(inv.compose(&m).is_identity());
    }

    #[test]
    fn poly_examples() {
        let id = LinearOperator::identity(2);
        // x - 1 at id
        let p = poly_on_operator(&id, &[Scalar::from_int(-1), Scalar::ONE]);
        assert!(p.is_zero());
        // 3 - 2x at id is id
        let p = poly_on_operator(&id, &[Scalar::from_int(3), Scalar::from_int(-2)]);
        assert!(p.is_identity());
        let m = ints(&[&[0, 1], &[0, 0]]);
        assert!(poly_on_operator(&m, &[Scalar::ZERO, Scalar::ZERO, Scalar::ONE]).is_zero());
    }

    #[test]
    fn eigenprojection_examples() {
        let id = LinearOperator::identity(3);
        let (p1, p3) = eigenprojections(&id, (&Scalar::from_int(1), &Scalar::from_int(3))).unwrap();
        assert_eq!(p1, id);
        assert!(p3.is_zero());

        let m = LinearOperator::diagonal(&[1, 3, 3].map(Scalar::from_int));
        let (p1, p3) = eigenprojections(&m, (&Scalar::from_int(1), &Scalar::from_int(3))).unwrap();
        assert_eq!((p1.rank(), p3.rank()), (1, 2));
        assert!(p1.compose(&p3).is_zero());
        assert_eq!(m.compose(&p3), p3.scale(&Scalar::from_int(3)));

        assert_eq!(
            eigenprojections(&id, (&Scalar::ONE, &Scalar::ONE)),
            Err(Error::DegenerateRoots)
        );
        assert!(matches!(
            eigenprojections(&m, (&Scalar::from_int(1), &Scalar::from_int(2))),
            Err(Error::HypothesisViolation(_))
        ));
    }

    #[test]
    fn kernel_and_image() {
        let m = ints(&[&[1, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        assert_eq!(m.kernel().dim(), 1);
        assert_eq!(m.image().dim(), 2);
        assert!(m.kernel().contains(&Vector::from_ints(&[1, -1, 0])));
    }
}
