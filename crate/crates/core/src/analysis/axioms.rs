//! Exhaustive check of the module axiom on a finite grid.

use crate::error::Result;
use crate::field::Field;
use crate::freemod::{Cached, Module};
use crate::gca::{bracket_coeff, GenRef};
use crate::monomial::Monomial;
use crate::vector::Vector;

/// A grid point where `x(y·v) - y(x·v) - [x,y]·v` is nonzero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Counterexample<F> {
    pub x: GenRef,
    pub y: GenRef,
    pub monomial: Monomial,
    pub difference: Vector<F>,
}

#[derive(Clone, Debug)]
pub struct AxiomReport<F> {
    pub holds: bool,
    /// Number of (x, y, monomial) triples evaluated.
    pub checked: usize,
    pub counterexample: Option<Counterexample<F>>,
}

/// Checks `x(y·v) - y(x·v) = [x,y]·v` for every pair of defined generators
/// with indices in `[-index_bound, index_bound]` and every basis monomial of
/// weight `<= degree_bound`. Stops at the first failure.
///
/// Only pairs with `x < y` are evaluated: swapping `x` and `y` negates both
/// sides, and `x = y` is trivial.
pub fn verify_axioms<F: Field, M: Module<F> + ?Sized>(
    module: &M,
    index_bound: u32,
    degree_bound: u32,
) -> Result<AxiomReport<F>> {
    let module = Cached::new(module);
    let gens = module.algebra().generators(i64::from(index_bound));
    let monos = module.basis_up_to(degree_bound);
    let mut checked = 0;
    for mono in &monos {
        let v = Vector::monomial(*mono);
        let images: Vec<Vector<F>> = gens.iter().map(|&g| module.act(g, &v)).collect::<Result<_>>()?;
        for (i, &x) in gens.iter().enumerate() {
            for (j, &y) in gens.iter().enumerate().skip(i + 1) {
                checked += 1;
                let mut diff = module.act(x, &images[j])?;
                diff.add_scaled(&-F::one(), &module.act(y, &images[i])?);
                if let Some((c, z)) = bracket_coeff(x, y) {
                    let bz = module.act_monomial(z, mono)?;
                    diff.add_scaled(&F::from_i64(-c), &bz);
                }
                if !diff.is_zero() {
                    let counterexample = Counterexample { x, y, monomial: *mono, difference: diff };
                    return Ok(AxiomReport { holds: false, checked, counterexample: Some(counterexample) });
                }
            }
        }
    }
    Ok(AxiomReport { holds: true, checked, counterexample: None })
}
