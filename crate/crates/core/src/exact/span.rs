use super::{LinearOperator, Scalar, Vector};
use crate::error::Error;

/// In-place reduced row echelon form with first-nonzero pivoting.
/// Zero rows are dropped; returns the pivot column of each remaining row.
pub fn rref(rows: &mut Vec<Vec<Scalar>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip().expect("pivot is nonzero");
        if !inv.is_one() {
            for x in rows[r].iter_mut() {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// Basis of `{x : A x = 0}` for `A` given by rows with `ncols` columns.
pub fn null_space(rows: &[Vec<Scalar>], ncols: usize) -> Vec<Vector> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = Vector::zeros(ncols);
            v[f] = Scalar::ONE;
            for (row, &p) in m.iter().zip(&pivots) {
                v[p] = -&row[f];
            }
            v
        })
        .collect()
}

/// Coordinates of `v` in terms of `basis` (assumed linearly independent),
/// or `None` if `v` is not in their span.
pub fn solve_in_basis(basis: &[Vector], v: &Vector) -> Option<Vec<Scalar>> {
    let k = basis.len();
    let m = v.dim();
    if basis.iter().any(|b| b.dim() != m) {
        return None;
    }
    let mut rows: Vec<Vec<Scalar>> = (0..m)
        .map(|r| {
            let mut row: Vec<Scalar> = basis.iter().map(|b| b[r].clone()).collect();
            row.push(v[r].clone());
            row
        })
        .collect();
    let pivots = rref(&mut rows);
    if pivots.last() == Some(&k) {
        return None;
    }
    let mut x = vec![Scalar::ZERO; k];
    for (row, &p) in rows.iter().zip(&pivots) {
        x[p] = row[k].clone();
    }
    Some(x)
}

/// A subspace of `F^ambient`, held as reduced row echelon rows.
///
/// Because the basis is reduced, the coordinates of a member vector are
/// its entries at the pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: (0..ambient).map(|i| Vector::basis(ambient, i)).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn from_vectors(ambient: usize, vectors: impl IntoIterator<Item = Vector>) -> Result<Self, Error> {
        let mut rows = Vec::new();
        for v in vectors {
            v.check_dim(ambient)?;
            if !v.is_zero() {
                rows.push(v.into_entries());
            }
        }
        let pivots = rref(&mut rows);
        Ok(Subspace {
            ambient,
            rows: rows.into_iter().map(Vector::new).collect(),
            pivots,
        })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates relative to [`Subspace::basis`], or `None` if `v` is not a member.
    pub fn coordinates(&self, v: &Vector) -> Option<Vec<Scalar>> {
        if v.dim() != self.ambient {
            return None;
        }
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut residual = v.clone();
        for (c, row) in coords.iter().zip(&self.rows) {
            residual.add_scaled(&-c, row);
        }
        residual.is_zero().then_some(coords)
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.coordinates(v).is_some()
    }

    /// Sum of two subspaces of the same ambient space.
    pub fn join(&self, other: &Subspace) -> Subspace {
        Subspace::from_vectors(self.ambient, self.rows.iter().chain(&other.rows).cloned())
            .expect("same ambient dimension")
    }
}

/// The linear span of a family of operators on one space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorSpan {
    op_dim: usize,
    generator_count: usize,
    space: Subspace,
}

impl OperatorSpan {
    /// Dimension of the span.
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Dimension of the space the operators act on.
    pub fn operator_dim(&self) -> usize {
        self.op_dim
    }

    pub fn generator_count(&self) -> usize {
        self.generator_count
    }

    /// The reduced basis as operators.
    pub fn basis(&self) -> Vec<LinearOperator> {
        self.space
            .basis()
            .iter()
            .map(|v| {
                LinearOperator::from_flat(self.op_dim, v.entries().to_vec())
                    .expect("flattened rows have op_dim^2 entries")
            })
            .collect()
    }

    pub fn coordinates(&self, op: &LinearOperator) -> Option<Vec<Scalar>> {
        if op.dim() != self.op_dim {
            return None;
        }
        self.space.coordinates(&Vector::new(op.flat().to_vec()))
    }

    pub fn contains(&self, op: &LinearOperator) -> bool {
        self.coordinates(op).is_some()
    }

    pub fn as_subspace(&self) -> &Subspace {
        &self.space
    }
}

/// Reduced basis of the span of `generators`. An empty family spans `{0}`
/// in dimension 0.
pub fn span_basis<'a>(generators: impl IntoIterator<Item = &'a LinearOperator>) -> Result<OperatorSpan, Error> {
    let mut op_dim = None;
    let mut count = 0;
    let mut flat = Vec::new();
    for g in generators {
        match op_dim {
            None => op_dim = Some(g.dim()),
            Some(d) => g.check_dim(d)?,
        }
        count += 1;
        flat.push(Vector::new(g.flat().to_vec()));
    }
    span_from_flat(op_dim.unwrap_or(0), count, flat)
}

/// Like [`span_basis`], but for operators of a known dimension, so that an
/// empty family still yields the zero span on `op_dim`-space.
pub fn span_basis_in<'a>(
    op_dim: usize,
    generators: impl IntoIterator<Item = &'a LinearOperator>,
) -> Result<OperatorSpan, Error> {
    let mut count = 0;
    let mut flat = Vec::new();
    for g in generators {
        g.check_dim(op_dim)?;
        count += 1;
        flat.push(Vector::new(g.flat().to_vec()));
    }
    span_from_flat(op_dim, count, flat)
}

fn span_from_flat(op_dim: usize, count: usize, flat: Vec<Vector>) -> Result<OperatorSpan, Error> {
    Ok(OperatorSpan {
        op_dim,
        generator_count: count,
        space: Subspace::from_vectors(op_dim * op_dim, flat)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn span_examples() {
        let z = LinearOperator::zero(2);
        assert_eq!(span_basis([&z]).unwrap().dim(), 0);

        let id = LinearOperator::identity(2);
        let two = id.scale(&Scalar::from_int(2));
        let s = span_basis([&id, &two]).unwrap();
        assert_eq!(s.dim(), 1);
        assert!(s.contains(&id));
        assert_eq!(s.coordinates(&two).unwrap(), vec![Scalar::from_int(2)]);
        let mut e12 = LinearOperator::zero(2);
        e12.set(0, 1, Scalar::ONE);
        assert!(!s.contains(&e12));

        let three = LinearOperator::identity(3);
        assert!(matches!(
            span_basis([&id, &three]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn respanning_is_idempotent() {
        let a = LinearOperator::from_int_rows(&[&[1, 2], &[3, 4]]).unwrap();
        let b = LinearOperator::from_int_rows(&[&[2, 4], &[6, 8]]).unwrap();
        let c = LinearOperator::from_int_rows(&[&[0, 1], &[1, 0]]).unwrap();
        let s = span_basis([&a, &b, &c]).unwrap();
        assert_eq!(s.dim(), 2);
        let again = span_basis(s.basis().iter()).unwrap();
        assert_eq!(again.basis(), s.basis());
        for g in [&a, &b, &c] {
            assert!(s.contains(g));
        }
    }

    #[test]
    fn solving_in_a_basis() {
        let basis = [Vector::from_ints(&[1, 1, 0]), Vector::from_ints(&[0, 1, 1])];
        let x = solve_in_basis(&basis, &Vector::from_ints(&[2, 5, 3])).unwrap();
        assert_eq!(x, vec![Scalar::from_int(2), Scalar::from_int(3)]);
        assert!(solve_in_basis(&basis, &Vector::from_ints(&[1, 0, 0])).is_none());
    }

    #[test]
    fn null_space_of_rank_one() {
        let rows = vec![vec![Scalar::ONE, Scalar::from_int(2), Scalar::from_int(3)]];
        let ns = null_space(&rows, 3);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(Vector::new(rows[0].clone()).dot(v).is_zero());
        }
    }
}
