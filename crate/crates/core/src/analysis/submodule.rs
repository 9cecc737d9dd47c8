//! Explicit proper submodules of tensor products with equal `λ`, and a
//! bounded invariance check for arbitrary spanning sets.

use crate::closure::EchelonBasis;
use crate::error::{Error, Result};
use crate::field::{binom, Field};
use crate::freemod::{Cached, Module};
use crate::gca::GenRef;
use crate::monomial::Monomial;
use crate::vector::Vector;

/// Which binomial spanning set to build. All three are polynomials in the
/// sum of the two "second" variables (slots 2 and 4) times free powers of
/// slots 1 and 3.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum SubmoduleKind {
    /// `Ω(λ,η1,σ1,0) ⊗ Ω(λ,η2,0,σ2)`: `X^i S^k (Y + T)^j`.
    V12,
    /// `Ω(λ,η1,σ1,0) ⊗ Ω(λ,η2,σ2,0)`: `X^i X1^k (Y + Y1)^j`.
    W11,
    /// One-variable factors: `(Y + Y')^j`.
    U5,
}

/// `v_{i,j,k} = Σ_t C(j,t) slot1^i slot2^(j-t) ⊗ slot3^k slot4^t`.
pub fn spanning_vector<F: Field>(i: u32, j: u32, k: u32) -> Vector<F> {
    let mut v = Vector::zero(4);
    for t in 0..=j {
        let m = Monomial::new(&[i, j - t, k, t]).expect("arity 4");
        v.add_term(m, binom(j, t));
    }
    v
}

/// Spanning vectors for `i <= imax, j <= jmax, k <= kmax`, in `(i, j, k)`
/// lexicographic order. `U5` ignores `imax` and `kmax`.
pub fn minimal_submodule<F: Field>(kind: SubmoduleKind, truncation: (u32, u32, u32)) -> Vec<Vector<F>> {
    let (imax, jmax, kmax) = match kind {
        SubmoduleKind::U5 => (0, truncation.1, 0),
        _ => truncation,
    };
    let mut out = Vec::new();
    for i in 0..=imax {
        for j in 0..=jmax {
            for k in 0..=kmax {
                out.push(spanning_vector(i, j, k));
            }
        }
    }
    out
}

/// Every spanning vector of total weight `<= weight_cap`.
pub fn submodule_span<F: Field>(kind: SubmoduleKind, weight_cap: u32) -> Vec<Vector<F>> {
    minimal_submodule(kind, (weight_cap, weight_cap, weight_cap))
        .into_iter()
        .filter(|v| v.weight().is_some_and(|w| w <= weight_cap))
        .collect()
}

/// A spanning vector whose image escapes the span.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Escape<F> {
    pub index: usize,
    pub gen: GenRef,
    pub image: Vector<F>,
}

#[derive(Clone, Debug)]
pub struct InvarianceReport<F> {
    pub invariant: bool,
    pub basis: EchelonBasis<F>,
    /// Spanning vectors whose images were tested.
    pub tested: usize,
    pub escape: Option<Escape<F>>,
}

/// Applies every generator with `|m| <= gen_range` to each spanning vector
/// of weight `<= weight_cap - 1` and tests the image for membership in the
/// span of the spanning vectors with weight `<= weight_cap`.
pub fn check_invariance<F: Field, M: Module<F> + ?Sized>(
    module: &M,
    spanning: &[Vector<F>],
    gen_range: u32,
    weight_cap: u32,
) -> Result<InvarianceReport<F>> {
    if weight_cap == 0 {
        return Err(Error::InvalidSpec("invariance needs a weight cap of at least 1".into()));
    }
    let module = Cached::new(module);
    let kept = spanning.iter().filter(|v| v.weight().is_some_and(|w| w <= weight_cap));
    let basis = EchelonBasis::from_vectors(module.arity(), kept)?;
    let gens = module.algebra().generators(i64::from(gen_range));
    let mut tested = 0;
    for (index, v) in spanning.iter().enumerate() {
        if v.weight().is_none_or(|w| w >= weight_cap) {
            continue;
        }
        tested += 1;
        for &gen in &gens {
            let image = module.act(gen, v)?;
            if !basis.member(&image)? {
                let escape = Some(Escape { index, gen, image });
                return Ok(InvarianceReport { invariant: false, basis, tested, escape });
            }
        }
    }
    Ok(InvarianceReport { invariant: true, basis, tested, escape: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gaussian::GaussianRational as Q;

    fn v4(terms: &[([u32; 4], i64)]) -> Vector<Q> {
        Vector::from_terms(4, terms.iter().map(|(e, c)| (Monomial::new(e).unwrap(), Q::from(*c)))).unwrap()
    }

    #[test]
    fn spanning_set_examples() {
        let v: Vec<Vector<Q>> = minimal_submodule(SubmoduleKind::V12, (0, 1, 0));
        assert_eq!(v, vec![Vector::one(4), v4(&[([0, 1, 0, 0], 1), ([0, 0, 0, 1], 1)])]);

        let w: Vec<Vector<Q>> = minimal_submodule(SubmoduleKind::W11, (1, 0, 1));
        let expect = [[0, 0, 0, 0], [0, 0, 1, 0], [1, 0, 0, 0], [1, 0, 1, 0]].map(|e| v4(&[(e, 1)]));
        assert_eq!(w, expect);

        let u: Vec<Vector<Q>> = minimal_submodule(SubmoduleKind::U5, (3, 2, 3));
        assert_eq!(u[2], v4(&[([0, 2, 0, 0], 1), ([0, 1, 0, 1], 2), ([0, 0, 0, 2], 1)]));
        assert_eq!(u.len(), 3);
    }

    #[test]
    fn span_counts() {
        // monomials X^i S^k (Y+T)^j with i + j + k <= 3
        assert_eq!(submodule_span::<Q>(SubmoduleKind::V12, 3).len(), 20);
        assert_eq!(submodule_span::<Q>(SubmoduleKind::U5, 3).len(), 4);
    }
}
