//! Built-in algebras and triple systems.

use crate::exact::{LinearOperator, Scalar, Vector};
use crate::structurable::{AlgebraMorphism, InvolutiveAlgebra};
use crate::triple::TripleSystem;

fn s(n: i64) -> Scalar {
    Scalar::from_int(n)
}

/// The rationals with the trivial involution.
pub fn unit_field() -> InvolutiveAlgebra {
    InvolutiveAlgebra::from_records(
        1,
        [(0, 0, 0, s(1))],
        LinearOperator::identity(1),
        Vector::from_ints(&[1]),
    )
    .expect("valid algebra")
    .with_label("unit-field")
}

/// `F x F` with componentwise product and the exchange involution.
pub fn split_pair() -> InvolutiveAlgebra {
    split_pair_with(exchange())
}

/// `F x F` with a given involution; the identity is also valid here.
pub fn split_pair_with(involution: LinearOperator) -> InvolutiveAlgebra {
    InvolutiveAlgebra::from_records(
        2,
        [(0, 0, 0, s(1)), (1, 1, 1, s(1))],
        involution,
        Vector::from_ints(&[1, 1]),
    )
    .expect("valid algebra")
    .with_label("split-pair")
}

fn exchange() -> LinearOperator {
    LinearOperator::from_int_rows(&[&[0, 1], &[1, 0]]).expect("square")
}

/// The coordinate swap of the split pair.
pub fn split_pair_swap() -> AlgebraMorphism {
    AlgebraMorphism::new(exchange())
}

/// Quaternion multiplication on the basis `1, i, j, k`.
pub fn quat_product() -> Vec<(usize, usize, usize, Scalar)> {
    // (a, b, c, sign): e_a e_b = sign e_c
    let table: [(usize, usize, usize, i64); 16] = [
        (0, 0, 0, 1),
        (0, 1, 1, 1),
        (0, 2, 2, 1),
        (0, 3, 3, 1),
        (1, 0, 1, 1),
        (2, 0, 2, 1),
        (3, 0, 3, 1),
        (1, 1, 0, -1),
        (2, 2, 0, -1),
        (3, 3, 0, -1),
        (1, 2, 3, 1),
        (2, 3, 1, 1),
        (3, 1, 2, 1),
        (2, 1, 3, -1),
        (3, 2, 1, -1),
        (1, 3, 2, -1),
    ];
    table.iter().map(|&(a, b, c, v)| (a, b, c, s(v))).collect()
}

fn quat_conjugation() -> LinearOperator {
    LinearOperator::diagonal(&[s(1), s(-1), s(-1), s(-1)])
}

/// Quaternions with the standard conjugation.
pub fn quat() -> InvolutiveAlgebra {
    InvolutiveAlgebra::from_records(4, quat_product(), quat_conjugation(), Vector::from_ints(&[1, 0, 0, 0]))
        .expect("valid algebra")
        .with_label("quat")
}

/// Quaternions with the identity as "involution". Not an anti-automorphism,
/// and not structurable.
pub fn quat_identity_involution() -> InvolutiveAlgebra {
    let product = crate::structurable::product_from_records(4, quat_product()).expect("in range");
    InvolutiveAlgebra::new_unchecked(
        4,
        product,
        LinearOperator::identity(4),
        Vector::from_ints(&[1, 0, 0, 0]),
    )
    .expect("shapes match")
    .with_label("quat-id-involution")
}

/// `x -> i x i^-1`.
pub fn quat_conj_i() -> AlgebraMorphism {
    AlgebraMorphism::new(LinearOperator::diagonal(&[s(1), s(1), s(-1), s(-1)]))
}

/// 2x2 matrices on the basis `E11, E12, E21, E22` with the transpose.
pub fn mat2_transpose() -> InvolutiveAlgebra {
    let mut records = Vec::new();
    for a in 0..2 {
        for b in 0..2 {
            for d in 0..2 {
                // E_ab E_bd = E_ad
                records.push((2 * a + b, 2 * b + d, 2 * a + d, s(1)));
            }
        }
    }
    let transpose =
        LinearOperator::from_int_rows(&[&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 1, 0, 0], &[0, 0, 0, 1]]).expect("square");
    InvolutiveAlgebra::from_records(4, records, transpose, Vector::from_ints(&[1, 0, 0, 1]))
        .expect("valid algebra")
        .with_label("mat2-transpose")
}

/// Conjugation by `diag(1,-1)`.
pub fn mat2_conj_diag() -> AlgebraMorphism {
    AlgebraMorphism::new(LinearOperator::diagonal(&[s(1), s(-1), s(-1), s(1)]))
}

/// `F` with `xyz` the product of scalars, a (-1,-1) system with unit 1.
pub fn scalar_fkts() -> TripleSystem {
    TripleSystem::from_records(1, [(0, 0, 0, 0, s(1))])
        .expect("in range")
        .with_label("scalar-fkts")
}

/// `F^2` with the componentwise product.
pub fn componentwise_pair() -> TripleSystem {
    TripleSystem::from_records(2, [(0, 0, 0, 0, s(1)), (1, 1, 1, 1, s(1))])
        .expect("in range")
        .with_label("componentwise-pair")
}

/// The componentwise system on `F^2` twisted by the swap: `{xyz} = x swap(y) z`.
pub fn swap_fkts() -> TripleSystem {
    TripleSystem::from_records(2, [(0, 1, 0, 0, s(1)), (1, 0, 1, 1, s(1))])
        .expect("in range")
        .with_label("swap-fkts")
}

/// `xyz = (x|y) z` for the diagonal form with the given entries.
pub fn bilinear_form_system(form: &[i64]) -> TripleSystem {
    let n = form.len();
    TripleSystem::from_records(n, (0..n).flat_map(|i| (0..n).map(move |k| (i, i, k, k, s(form[i])))))
        .expect("in range")
        .with_label("bilinear-form")
}
