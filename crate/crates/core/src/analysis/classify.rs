//! Isomorphism classification of irreducible tensor products.

use crate::analysis::intertwiner::intertwiner_solve;
use crate::analysis::vandermonde::vandermonde_obstruction;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::freemod::{Family, ModuleSpec};
use crate::tensor::{TensorShape, TensorSpec};

/// Degree and generator bounds of the intertwiner cross-check.
pub const CROSS_CHECK_D: u32 = 2;
pub const CROSS_CHECK_M: u32 = 3;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Matching {
    Ordered,
    Swapped,
    None,
}

impl Matching {
    pub fn name(self) -> &'static str {
        match self {
            Matching::Ordered => "ordered",
            Matching::Swapped => "swapped",
            Matching::None => "none",
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IsoVerdict<F> {
    pub equivalent: bool,
    pub matching: Matching,
    /// Intertwiner solution dimension at the cross-check bounds.
    pub witness_dim: usize,
    /// Power-matrix determinant of the `λ`s, for same-type pairs.
    pub obstruction: Option<F>,
}

/// Same family with equal `(λ, η, σ)`.
fn same_factor<F: Field>(a: &ModuleSpec<F>, b: &ModuleSpec<F>) -> bool {
    a.family() == b.family() && a.lambda() == b.lambda() && a.eta() == b.eta() && a.sigma() == b.sigma()
}

fn check_hypothesis<F: Field>(ts: &TensorSpec<F>, side: &str) -> Result<TensorShape> {
    let shape = ts.shape()?;
    for f in [&ts.left, &ts.right] {
        if !matches!(f.family(), Family::TypeI | Family::TypeII) || f.constant_sigma().is_none() {
            return Err(Error::HypothesisViolation(format!(
                "{side}: both factors must be TypeI or TypeII with constant σ"
            )));
        }
    }
    if ts.left.lambda() == ts.right.lambda() {
        return Err(Error::HypothesisViolation(format!("{side}: λ1 = λ2, the product is reducible")));
    }
    Ok(shape)
}

/// Closed-form verdict: factors agree in order or after swapping. Each
/// verdict is cross-checked against [`intertwiner_solve`] (equivalent needs
/// a nonzero bounded intertwiner, inequivalent needs none).
pub fn classify_iso<F: Field>(a: &TensorSpec<F>, b: &TensorSpec<F>) -> Result<IsoVerdict<F>> {
    let sa = check_hypothesis(a, "A")?;
    let sb = check_hypothesis(b, "B")?;
    let matching = if same_factor(&a.left, &b.left) && same_factor(&a.right, &b.right) {
        Matching::Ordered
    } else if same_factor(&a.left, &b.right) && same_factor(&a.right, &b.left) {
        Matching::Swapped
    } else {
        Matching::None
    };
    let equivalent = matching != Matching::None;

    let same_type = |s| matches!(s, TensorShape::TypeIPair | TensorShape::TypeIIPair);
    let obstruction = if same_type(sa) && sa == sb {
        let o = vandermonde_obstruction(a.left.lambda(), b.left.lambda(), a.right.lambda(), b.right.lambda())?;
        Some(o.det)
    } else {
        None
    };

    let sol = intertwiner_solve(a, b, CROSS_CHECK_D, CROSS_CHECK_M)?;
    if equivalent != (sol.dim > 0) {
        return Err(Error::CrossCheckFailed(format!(
            "closed form says equivalent = {equivalent} but the intertwiner space has dimension {}",
            sol.dim
        )));
    }
    Ok(IsoVerdict { equivalent, matching, witness_dim: sol.dim, obstruction })
}
