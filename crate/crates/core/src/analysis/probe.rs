//! Bounded irreducibility probes for rank-one modules and tensor products.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::analysis::submodule::{check_invariance, submodule_span, SubmoduleKind};
use crate::closure::{generate, EchelonBasis};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::freemod::{Family, Module, ModuleSpec};
use crate::monomial::Monomial;
use crate::tensor::{TensorShape, TensorSpec};
use crate::vector::Vector;

/// Fixed seed for the extra random closure seeds, so probes are reproducible.
const PROBE_RNG_SEED: u64 = 0x6a09_e667_f3bc_c908;
const RANDOM_SEEDS: usize = 3;

#[derive(Clone, Debug)]
pub enum Probe<F> {
    /// Every closure tried spans all monomials up to the tested weight.
    IrreducibleEvidence { closures: usize, spanned_weight: u32 },
    /// A submodule that is invariant at the probe bounds and misses
    /// `missing`.
    ReducibleWitness { seed: Vector<F>, basis: EchelonBasis<F>, missing: Vector<F>, kind: Option<SubmoduleKind> },
    /// A closure fell short of the tested weight, but the bounds are too
    /// small to tell truncation from a genuine submodule.
    Inconclusive { seed: Vector<F>, dim: usize, missing: Vector<F> },
}

impl<F> Probe<F> {
    pub fn is_irreducible_evidence(&self) -> bool {
        matches!(self, Probe::IrreducibleEvidence { .. })
    }
}

/// Closes `{1}`, `{first variable}` and `{second variable}` at `(M, Dcap)`.
/// Evidence of irreducibility iff each closure spans every monomial of weight
/// `<= Dcap - 1`; otherwise the first deficient closure is the witness.
///
/// `{1}` alone always generates the whole module (`H_0` and `L_0` multiply by
/// the two variables), so reducible cases show up only from the other seeds.
pub fn probe_rank_one<F: Field>(spec: &ModuleSpec<F>, gen_range: u32, weight_cap: u32) -> Result<Probe<F>> {
    if !matches!(spec.family(), Family::TypeI | Family::TypeII | Family::TypeIII) {
        return Err(Error::HypothesisViolation(format!(
            "rank-one probe expects a two-variable module, got {}",
            spec.family().name()
        )));
    }
    if weight_cap == 0 {
        return Err(Error::InvalidSpec("rank-one probe needs a weight cap of at least 1".into()));
    }
    let target = spec.basis_up_to(weight_cap - 1);
    let seeds = [[0, 0], [1, 0], [0, 1]].map(|e| Vector::monomial(Monomial::new(&e).expect("arity 2")));
    for seed in &seeds {
        let report = generate(spec, std::slice::from_ref(seed), gen_range, weight_cap)?;
        if let Some(m) = target.iter().find(|m| !report.basis.spans(std::slice::from_ref(m))) {
            return Ok(Probe::ReducibleWitness {
                seed: seed.clone(),
                basis: report.basis,
                missing: Vector::monomial(*m),
                kind: None,
            });
        }
    }
    Ok(Probe::IrreducibleEvidence { closures: seeds.len(), spanned_weight: weight_cap - 1 })
}

/// Random nonzero vector of weight `<= max_weight` with small integer
/// coefficients, supported on basis monomials of `module`.
pub fn random_vector<F: Field, M: Module<F> + ?Sized>(module: &M, max_weight: u32, rng: &mut impl Rng) -> Vector<F> {
    let monos = module.basis_up_to(max_weight);
    loop {
        let mut v = Vector::zero(module.arity());
        for m in &monos {
            if rng.gen_bool(0.4) {
                v.add_term(*m, F::from_i64(rng.gen_range(-3..=3)));
            }
        }
        if !v.is_zero() {
            return v;
        }
    }
}

fn constant_sigmas<F: Field>(ts: &TensorSpec<F>) -> Result<()> {
    for side in [&ts.left, &ts.right] {
        if side.sigma().is_some() && side.constant_sigma().is_none() {
            return Err(Error::HypothesisViolation("tensor probes need constant sigma on both factors".into()));
        }
    }
    Ok(())
}

/// Which explicit submodule witnesses reducibility for this shape.
pub fn submodule_kind(shape: TensorShape) -> SubmoduleKind {
    match shape {
        TensorShape::Mixed | TensorShape::ReversedMixed => SubmoduleKind::V12,
        TensorShape::TypeIPair | TensorShape::TypeIIPair => SubmoduleKind::W11,
        TensorShape::OneVariable => SubmoduleKind::U5,
    }
}

/// `λ1 ≠ λ2`: closes `{1⊗1}` and a few fixed-seed random vectors at
/// `(M, D + 1)` (random seeds get one extra weight per unit of their own
/// weight) and reports evidence iff every closure spans weight `<= D`.
///
/// `λ1 = λ2`: builds the explicit submodule for the shape, checks it is
/// invariant at `(M, D + 1)` and that it misses `Y⊗1` (slot 2).
pub fn probe_tensor_irreducible<F: Field>(ts: &TensorSpec<F>, gen_range: u32, d: u32) -> Result<Probe<F>> {
    constant_sigmas(ts)?;
    let shape = ts.shape()?;
    let y_left = Vector::monomial(Monomial::new(&[0, 1, 0, 0]).expect("arity 4"));

    if ts.left.lambda() == ts.right.lambda() {
        let kind = submodule_kind(shape);
        let spanning = submodule_span(kind, d + 1);
        let inv = check_invariance(ts, &spanning, gen_range, d + 1)?;
        if let Some(e) = inv.escape {
            return Err(Error::WitnessRejected(format!(
                "image of spanning vector {} under {} leaves the span",
                e.index, e.gen
            )));
        }
        if inv.basis.member(&y_left)? {
            return Err(Error::WitnessRejected("submodule contains Y⊗1, so it is not proper".into()));
        }
        return Ok(Probe::ReducibleWitness {
            seed: Vector::one(4),
            basis: inv.basis,
            missing: y_left,
            kind: Some(kind),
        });
    }

    let target = ts.basis_up_to(d);
    let mut seeds = vec![Vector::one(4)];
    let mut rng = ChaCha8Rng::seed_from_u64(PROBE_RNG_SEED);
    for _ in 0..RANDOM_SEEDS {
        seeds.push(random_vector(ts, d.min(2), &mut rng));
    }
    for seed in &seeds {
        let w = seed.weight().unwrap_or(0);
        let report = generate(ts, std::slice::from_ref(seed), gen_range, d + 1 + w)?;
        if !report.basis.spans(&target) {
            let m = target.iter().find(|m| !report.basis.spans(std::slice::from_ref(m))).expect("deficient");
            return Ok(Probe::Inconclusive { seed: seed.clone(), dim: report.dim, missing: Vector::monomial(*m) });
        }
    }
    Ok(Probe::IrreducibleEvidence { closures: seeds.len(), spanned_weight: d })
}
