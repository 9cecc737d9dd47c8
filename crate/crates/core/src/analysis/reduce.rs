//! Degree reduction in `Ω(λ1,η1,σ1,0) ⊗ Ω(λ2,η2,σ2,0)` with constant `σ`s
//! and `λ1 ≠ λ2`.
//!
//! `v ↦ I_m v - λ1^m σ1 v - λ2^m σ2 v` strictly lowers `deg` for a suitable
//! `m`, which is how `1⊗1` is reached from any nonzero vector.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::freemod::Module;
use crate::gca::GenRef;
use crate::tensor::{deg, DegTuple, TensorShape, TensorSpec};
use crate::vector::Vector;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ReductionStep<F> {
    pub m: i64,
    pub result: Vector<F>,
    pub before_deg: DegTuple,
    pub after_deg: DegTuple,
    pub case_id: u8,
}

/// Case of `deg(v) = (p, q, s, t)`, its target degree and the `m` values to
/// try.
pub fn reduction_case(d: DegTuple) -> Option<(u8, DegTuple, std::ops::RangeInclusive<i64>)> {
    let [p, q, s, t] = d.0;
    if p > 0 {
        Some((1, DegTuple([p - 1, q, s, t]), 0..=0))
    } else if q > 0 {
        Some((2, DegTuple([0, q - 1, s, t]), 0..=1))
    } else if s > 0 {
        Some((3, DegTuple([0, 0, s - 1, t]), 0..=2))
    } else if t > 0 {
        Some((4, DegTuple([0, 0, 0, t - 1]), 0..=3))
    } else {
        None
    }
}

fn sigmas<F: Field>(ts: &TensorSpec<F>) -> Result<(F, F)> {
    if ts.shape()? != TensorShape::TypeIPair {
        return Err(Error::HypothesisViolation("degree reduction needs a TypeI ⊗ TypeI product".into()));
    }
    if ts.left.lambda() == ts.right.lambda() {
        return Err(Error::HypothesisViolation("degree reduction needs λ1 ≠ λ2".into()));
    }
    match (ts.left.constant_sigma(), ts.right.constant_sigma()) {
        (Some(a), Some(b)) => Ok((a.clone(), b.clone())),
        _ => Err(Error::HypothesisViolation("degree reduction needs constant σ1, σ2".into())),
    }
}

/// `I_m v - λ1^m σ1 v - λ2^m σ2 v`.
pub fn reduction_image<F: Field>(ts: &TensorSpec<F>, v: &Vector<F>, m: i64) -> Result<Vector<F>> {
    let (s1, s2) = sigmas(ts)?;
    let c = ts.left.lambda().pow_i(m)? * &s1 + ts.right.lambda().pow_i(m)? * &s2;
    let mut out = ts.act(GenRef::i(m), v)?;
    out.add_scaled(&-c, v);
    Ok(out)
}

/// One reduction step: the first `m` in the case's range whose image has
/// exactly the case's target degree.
pub fn reduce_degree<F: Field>(ts: &TensorSpec<F>, v: &Vector<F>) -> Result<ReductionStep<F>> {
    sigmas(ts)?;
    let before = deg(v)?;
    let Some((case_id, target, range)) = reduction_case(before) else {
        return Err(Error::NothingToReduce);
    };
    for m in range {
        let result = reduction_image(ts, v, m)?;
        if let Ok(after) = deg(&result) {
            if after == target {
                return Ok(ReductionStep { m, result, before_deg: before, after_deg: after, case_id });
            }
        }
    }
    Err(Error::NoReductionWitness { case: case_id })
}

/// Applies [`reduce_degree`] until the degree is `(0,0,0,0)`. The final
/// result is a nonzero multiple of `1⊗1`.
pub fn reduce_fully<F: Field>(ts: &TensorSpec<F>, v: &Vector<F>) -> Result<Vec<ReductionStep<F>>> {
    let mut steps = Vec::new();
    let mut cur = v.clone();
    while !deg(&cur)?.is_zero() {
        let step = reduce_degree(ts, &cur)?;
        cur = step.result.clone();
        steps.push(step);
    }
    Ok(steps)
}
