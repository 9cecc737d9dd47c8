//! The `4×4` power matrix whose determinant obstructs isomorphisms between
//! `TypeI ⊗ TypeI` products with different `λ`s.

use crate::error::{Error, Result};
use crate::field::Field;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Obstruction<F> {
    pub det: F,
    /// `(λ1-λ1')(λ2-λ1)(λ2-λ1')(λ1-λ2')(λ2'-λ1')(λ2'-λ2)`.
    pub product: F,
    pub factored_zero: bool,
}

/// Determinant by Gaussian elimination with exact pivoting.
pub fn determinant<F: Field>(mut a: Vec<Vec<F>>) -> Result<F> {
    let n = a.len();
    if a.iter().any(|r| r.len() != n) {
        return Err(Error::InvalidSpec("determinant of a non-square matrix".into()));
    }
    let mut det = F::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Ok(F::zero());
        };
        if p != col {
            a.swap(p, col);
            det = -det;
        }
        let inv = a[col][col].checked_inv().expect("nonzero pivot");
        det = det * &a[col][col];
        for r in col + 1..n {
            let f = a[r][col].clone() * &inv;
            if f.is_zero() {
                continue;
            }
            for c in col..n {
                let d = f.clone() * &a[col][c];
                a[r][c] -= &d;
            }
        }
    }
    Ok(det)
}

/// Rows `(1,-1,1,-1)`, `(λ1,-λ1',λ2,-λ2')`, then squares and cubes.
pub fn power_matrix<F: Field>(l1: &F, l1p: &F, l2: &F, l2p: &F) -> Vec<Vec<F>> {
    let cols = [(l1, F::one()), (l1p, -F::one()), (l2, F::one()), (l2p, -F::one())];
    (0..4)
        .map(|k| cols.iter().map(|(x, sign)| sign.clone() * &x.pow_i(k).expect("nonnegative power")).collect())
        .collect()
}

pub fn vandermonde_obstruction<F: Field>(l1: &F, l1p: &F, l2: &F, l2p: &F) -> Result<Obstruction<F>> {
    if [l1, l1p, l2, l2p].iter().any(|x| x.is_zero()) {
        return Err(Error::InvalidSpec("λ values must be nonzero".into()));
    }
    let det = determinant(power_matrix(l1, l1p, l2, l2p))?;
    let d = |a: &F, b: &F| a.clone() - b;
    let product = d(l1, l1p) * &d(l2, l1) * &d(l2, l1p) * &d(l1, l2p) * &d(l2p, l1p) * &d(l2p, l2);
    // two negated columns leave the Vandermonde determinant unchanged
    if det != product {
        return Err(Error::CrossCheckFailed(format!("determinant {det} differs from the factored product {product}")));
    }
    let factored_zero = product.is_zero();
    Ok(Obstruction { det, product, factored_zero })
}
