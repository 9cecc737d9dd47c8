//! Tensor products of two modules, and the weight order on `N^4`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::freemod::{Family, Module, ModuleSpec};
use crate::gca::{GenRef, SubalgebraTag};
use crate::monomial::Monomial;
use crate::vector::Vector;

/// Exponent tuple `(a1, a2, a3, a4)`: left factor's two slots, then the
/// right factor's.
///
/// `Ord` is the total order `≻`: weight first, then `a4`, `a3`, `a2`, `a1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct DegTuple(pub [u32; 4]);

impl DegTuple {
    /// Embeds a monomial of arity ≤ 4, padding with zeros on the right.
    pub fn of(m: &Monomial) -> Self {
        let mut a = [0; 4];
        a[..m.arity()].copy_from_slice(m.exps());
        Self(a)
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0 == [0; 4]
    }
}

impl Ord for DegTuple {
    fn cmp(&self, other: &Self) -> Ordering {
        let [a1, a2, a3, a4] = self.0;
        let [b1, b2, b3, b4] = other.0;
        self.weight().cmp(&other.weight()).then(a4.cmp(&b4)).then(a3.cmp(&b3)).then(a2.cmp(&b2)).then(a1.cmp(&b1))
    }
}

impl PartialOrd for DegTuple {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for DegTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.0;
        write!(f, "({a},{b},{c},{d})")
    }
}

/// `a ≻ b`.
pub fn order_gt(a: &DegTuple, b: &DegTuple) -> bool {
    a > b
}

/// The `≻`-largest tuple of the support.
pub fn deg<F: Field>(v: &Vector<F>) -> Result<DegTuple> {
    v.support().map(DegTuple::of).max().ok_or(Error::ZeroVector)
}

/// How the two factors of a tensor product pair up.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum TensorShape {
    /// `Ω(λ1,η1,σ1,0) ⊗ Ω(λ2,η2,0,σ2)`
    Mixed,
    /// `Ω(λ2,η2,0,σ2) ⊗ Ω(λ1,η1,σ1,0)`
    ReversedMixed,
    /// `Ω(λ1,η1,σ1,0) ⊗ Ω(λ2,η2,σ2,0)`
    TypeIPair,
    /// `Ω(λ1,η1,0,σ1) ⊗ Ω(λ2,η2,0,σ2)`
    TypeIIPair,
    /// Both factors one-variable (Witt / Heisenberg–Virasoro) modules.
    OneVariable,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorSpec<F> {
    pub left: ModuleSpec<F>,
    pub right: ModuleSpec<F>,
}

impl<F: Field> TensorSpec<F> {
    pub fn new(left: ModuleSpec<F>, right: ModuleSpec<F>) -> Result<Self> {
        left.validate()?;
        right.validate()?;
        let spec = Self { left, right };
        spec.shape()?;
        Ok(spec)
    }

    pub fn shape(&self) -> Result<TensorShape> {
        use Family::*;
        match (self.left.family(), self.right.family()) {
            (TypeI, TypeII) => Ok(TensorShape::Mixed),
            (TypeII, TypeI) => Ok(TensorShape::ReversedMixed),
            (TypeI, TypeI) => Ok(TensorShape::TypeIPair),
            (TypeII, TypeII) => Ok(TensorShape::TypeIIPair),
            (a, b) if a.is_one_variable() && b.is_one_variable() => Ok(TensorShape::OneVariable),
            (a, b) => Err(Error::InvalidSpec(format!("unsupported tensor product {} ⊗ {}", a.name(), b.name()))),
        }
    }

    /// The same factors in the opposite order.
    pub fn swapped(&self) -> Self {
        Self { left: self.right.clone(), right: self.left.clone() }
    }
}

impl<F: Field> Module<F> for TensorSpec<F> {
    fn arity(&self) -> usize {
        4
    }

    fn algebra(&self) -> SubalgebraTag {
        self.left.algebra().meet(self.right.algebra())
    }

    fn family_name(&self) -> &'static str {
        "tensor"
    }

    fn supports(&self, m: &Monomial) -> bool {
        if m.arity() != 4 {
            return false;
        }
        let (u, w) = m.split();
        self.left.supports(&u) && self.right.supports(&w)
    }

    /// `g(u ⊗ w) = g(u) ⊗ w + u ⊗ g(w)`.
    fn act_monomial(&self, g: GenRef, m: &Monomial) -> Result<Vector<F>> {
        if m.arity() != 4 {
            return Err(Error::ArityMismatch { expected: 4, found: m.arity() });
        }
        let (u, w) = m.split();
        let mut out = Vector::zero(4);
        for (u2, c) in self.left.act_monomial(g, &u)?.terms() {
            out.add_term(u2.concat(&w)?, c.clone());
        }
        for (w2, c) in self.right.act_monomial(g, &w)?.terms() {
            out.add_term(u.concat(w2)?, c.clone());
        }
        Ok(out)
    }
}
