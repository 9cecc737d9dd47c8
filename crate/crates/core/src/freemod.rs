//! Rank-one free modules over `U(h)`, realised on two-variable polynomial
//! rings, plus the one-variable Witt and Heisenberg–Virasoro modules.
//!
//! | family | variables | nonzero actions |
//! |--------|-----------|-----------------|
//! | `TypeI`   | `X, Y` | `L, H, I` |
//! | `TypeII`  | `S, T` | `L, H, J` |
//! | `TypeIII` | `P, Q` | `L, H` |
//! | `Witt`    | `Y`    | `L` (only `L` is defined) |
//! | `HeisenbergVirasoro` | `Y` | `L, H` (only these are defined) |
//!
//! The one-variable modules use arity-2 vectors whose first exponent is
//! always zero, so that tensor products of them put the variable in slots 2
//! and 4.

use std::cell::RefCell;
use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::field::{binom, Field};
use crate::gca::{GenRef, Kind, SubalgebraTag};
use crate::monomial::Monomial;
use crate::poly::Poly;
use crate::vector::Vector;

/// Anything the algebra acts on by exact linear maps on a monomial basis.
pub trait Module<F: Field> {
    /// Number of polynomial variables (exponent slots).
    fn arity(&self) -> usize;

    /// Subalgebra whose generators are defined on this module.
    fn algebra(&self) -> SubalgebraTag;

    fn family_name(&self) -> &'static str;

    /// Whether `m` is a basis monomial of the underlying polynomial space.
    fn supports(&self, m: &Monomial) -> bool {
        m.arity() == self.arity()
    }

    /// Basis monomials of weight `<= max_weight`, ascending lexicographically.
    fn basis_up_to(&self, max_weight: u32) -> Vec<Monomial> {
        let mut all = Monomial::all_up_to(self.arity(), max_weight);
        all.retain(|m| self.supports(m));
        all
    }

    /// Action of a defined generator on a single basis monomial.
    fn act_monomial(&self, g: GenRef, m: &Monomial) -> Result<Vector<F>>;

    fn act(&self, g: GenRef, v: &Vector<F>) -> Result<Vector<F>> {
        if !self.algebra().admits(g.kind) {
            return Err(Error::UndefinedGenerator { gen: g, family: self.family_name() });
        }
        if v.arity() != self.arity() {
            return Err(Error::ArityMismatch { expected: self.arity(), found: v.arity() });
        }
        let mut out = Vector::zero(self.arity());
        for (m, c) in v.terms() {
            out.add_scaled(c, &self.act_monomial(g, m)?);
        }
        Ok(out)
    }
}

/// Wraps a module and memoises [`Module::act_monomial`].
pub struct Cached<'a, F, M: ?Sized> {
    inner: &'a M,
    memo: RefCell<HashMap<(GenRef, Monomial), Vector<F>>>,
}

impl<'a, F: Field, M: Module<F> + ?Sized> Cached<'a, F, M> {
    pub fn new(inner: &'a M) -> Self {
        Self { inner, memo: RefCell::new(HashMap::new()) }
    }
}

impl<F: Field, M: Module<F> + ?Sized> Module<F> for Cached<'_, F, M> {
    fn arity(&self) -> usize {
        self.inner.arity()
    }

    fn algebra(&self) -> SubalgebraTag {
        self.inner.algebra()
    }

    fn family_name(&self) -> &'static str {
        self.inner.family_name()
    }

    fn supports(&self, m: &Monomial) -> bool {
        self.inner.supports(m)
    }

    fn act_monomial(&self, g: GenRef, m: &Monomial) -> Result<Vector<F>> {
        if let Some(v) = self.memo.borrow().get(&(g, *m)) {
            return Ok(v.clone());
        }
        let v = self.inner.act_monomial(g, m)?;
        self.memo.borrow_mut().insert((g, *m), v.clone());
        Ok(v)
    }

    // accumulates straight from the memo instead of cloning each image
    fn act(&self, g: GenRef, v: &Vector<F>) -> Result<Vector<F>> {
        if !self.algebra().admits(g.kind) {
            return Err(Error::UndefinedGenerator { gen: g, family: self.family_name() });
        }
        if v.arity() != self.arity() {
            return Err(Error::ArityMismatch { expected: self.arity(), found: v.arity() });
        }
        let mut out = Vector::zero(self.arity());
        for (m, c) in v.terms() {
            let key = (g, *m);
            if !self.memo.borrow().contains_key(&key) {
                let img = self.inner.act_monomial(g, m)?;
                self.memo.borrow_mut().insert(key, img);
            }
            out.add_scaled(c, &self.memo.borrow()[&key]);
        }
        Ok(out)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Family {
    TypeI,
    TypeII,
    TypeIII,
    Witt,
    HeisenbergVirasoro,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::TypeI => "type1",
            Family::TypeII => "type2",
            Family::TypeIII => "type3",
            Family::Witt => "witt",
            Family::HeisenbergVirasoro => "hvir",
        }
    }

    pub fn algebra(self) -> SubalgebraTag {
        match self {
            Family::Witt => SubalgebraTag::Witt,
            Family::HeisenbergVirasoro => SubalgebraTag::HeisenbergVirasoro,
            _ => SubalgebraTag::Full,
        }
    }

    /// True for the one-variable modules living in the second slot.
    pub fn is_one_variable(self) -> bool {
        matches!(self, Family::Witt | Family::HeisenbergVirasoro)
    }
}

/// Parameters of one module.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ModuleSpec<F> {
    /// `Ω(λ, η, σ, 0)` on `C[X, Y]`, `σ ∈ C[X]`.
    TypeI { lambda: F, eta: F, sigma: Poly<F> },
    /// `Ω(λ, η, 0, σ)` on `C[S, T]`, `σ ∈ C[S]`.
    TypeII { lambda: F, eta: F, sigma: Poly<F> },
    /// `Ω(λ, δ, 0, 0)` on `C[P, Q]`, `δ ∈ C[P]`.
    TypeIII { lambda: F, delta: Poly<F> },
    /// `Ω(λ, α)` over the Witt algebra.
    Witt { lambda: F, alpha: F },
    /// `Ω(λ, α, β)` over the Heisenberg–Virasoro algebra.
    HeisenbergVirasoro { lambda: F, alpha: F, beta: F },
}

impl<F: Field> ModuleSpec<F> {
    pub fn type_one(lambda: F, eta: F, sigma: Poly<F>) -> Result<Self> {
        Self::TypeI { lambda, eta, sigma }.validated()
    }

    pub fn type_two(lambda: F, eta: F, sigma: Poly<F>) -> Result<Self> {
        Self::TypeII { lambda, eta, sigma }.validated()
    }

    pub fn type_three(lambda: F, delta: Poly<F>) -> Result<Self> {
        Self::TypeIII { lambda, delta }.validated()
    }

    pub fn witt(lambda: F, alpha: F) -> Result<Self> {
        Self::Witt { lambda, alpha }.validated()
    }

    pub fn hvir(lambda: F, alpha: F, beta: F) -> Result<Self> {
        Self::HeisenbergVirasoro { lambda, alpha, beta }.validated()
    }

    pub fn validated(self) -> Result<Self> {
        self.validate()?;
        Ok(self)
    }

    /// `λ ≠ 0`, and `σ ≠ 0` for the first two families.
    pub fn validate(&self) -> Result<()> {
        if self.lambda().is_zero() {
            return Err(Error::InvalidSpec("lambda must be nonzero".into()));
        }
        match self {
            Self::TypeI { sigma, .. } | Self::TypeII { sigma, .. } if sigma.is_zero() => {
                Err(Error::InvalidSpec("sigma must be a nonzero polynomial".into()))
            }
            _ => Ok(()),
        }
    }

    pub fn family(&self) -> Family {
        match self {
            Self::TypeI { .. } => Family::TypeI,
            Self::TypeII { .. } => Family::TypeII,
            Self::TypeIII { .. } => Family::TypeIII,
            Self::Witt { .. } => Family::Witt,
            Self::HeisenbergVirasoro { .. } => Family::HeisenbergVirasoro,
        }
    }

    pub fn lambda(&self) -> &F {
        match self {
            Self::TypeI { lambda, .. }
            | Self::TypeII { lambda, .. }
            | Self::TypeIII { lambda, .. }
            | Self::Witt { lambda, .. }
            | Self::HeisenbergVirasoro { lambda, .. } => lambda,
        }
    }

    pub fn eta(&self) -> Option<&F> {
        match self {
            Self::TypeI { eta, .. } | Self::TypeII { eta, .. } => Some(eta),
            _ => None,
        }
    }

    pub fn sigma(&self) -> Option<&Poly<F>> {
        match self {
            Self::TypeI { sigma, .. } | Self::TypeII { sigma, .. } => Some(sigma),
            _ => None,
        }
    }

    /// `σ` when it is a nonzero constant.
    pub fn constant_sigma(&self) -> Option<&F> {
        self.sigma().filter(|s| s.is_nonzero_constant()).map(|s| &s.coeffs()[0])
    }
}

/// Coefficients of `(z + shift)^e` by ascending power of `z`.
pub(crate) fn shifted_power<F: Field>(e: u32, shift: &F) -> Vec<F> {
    let mut pw = F::one();
    let mut out = vec![F::zero(); e as usize + 1];
    for t in (0..=e).rev() {
        out[t as usize] = binom::<F>(e, t) * &pw;
        pw = pw * shift;
    }
    out
}

struct Sink<F> {
    out: Vector<F>,
}

impl<F: Field> Sink<F> {
    fn new() -> Self {
        Self { out: Vector::zero(2) }
    }

    fn add(&mut self, a: u32, b: u32, c: F) {
        self.out.add_term(Monomial::new(&[a, b]).expect("arity 2"), c);
    }
}

impl<F: Field> Module<F> for ModuleSpec<F> {
    fn arity(&self) -> usize {
        2
    }

    fn algebra(&self) -> SubalgebraTag {
        self.family().algebra()
    }

    fn family_name(&self) -> &'static str {
        self.family().name()
    }

    fn supports(&self, m: &Monomial) -> bool {
        m.arity() == 2 && !(self.family().is_one_variable() && m.exp(0) != 0)
    }

    fn act_monomial(&self, g: GenRef, mono: &Monomial) -> Result<Vector<F>> {
        if mono.arity() != 2 {
            return Err(Error::ArityMismatch { expected: 2, found: mono.arity() });
        }
        if !self.algebra().admits(g.kind) {
            return Err(Error::UndefinedGenerator { gen: g, family: self.family_name() });
        }
        let (a, b) = (mono.exp(0), mono.exp(1));
        if self.family().is_one_variable() && a != 0 {
            return Err(Error::InvalidSpec(format!("{} modules only use the second slot", self.family_name())));
        }
        let m = g.index;
        let mf = F::from_i64(m);
        let lam = self.lambda().pow_i(m)?;
        // (second variable - m)^b, shared by every action below
        let second = shifted_power(b, &F::from_i64(-m));
        let mut sink = Sink::new();

        match (self, g.kind) {
            (Self::TypeI { eta, .. }, Kind::L) => {
                // λ^m (Y - mX + mη) X^a (Y-m)^b
                let me = mf.clone() * eta;
                for (t, c) in second.iter().enumerate() {
                    let c = c.clone() * &lam;
                    let t = t as u32;
                    sink.add(a, t + 1, c.clone());
                    sink.add(a + 1, t, -(c.clone() * &mf));
                    sink.add(a, t, c * &me);
                }
            }
            (Self::TypeII { eta, .. }, Kind::L) => {
                // λ^m (T + mS + mη) S^a (T-m)^b
                let me = mf.clone() * eta;
                for (t, c) in second.iter().enumerate() {
                    let c = c.clone() * &lam;
                    let t = t as u32;
                    sink.add(a, t + 1, c.clone());
                    sink.add(a + 1, t, c.clone() * &mf);
                    sink.add(a, t, c * &me);
                }
            }
            (Self::TypeIII { delta, .. }, Kind::L) => {
                // λ^m (Q + mδ(P)) P^a (Q-m)^b
                for (t, c) in second.iter().enumerate() {
                    let c = c.clone() * &lam;
                    let t = t as u32;
                    sink.add(a, t + 1, c.clone());
                    for (d, dc) in delta.coeffs().iter().enumerate() {
                        sink.add(a + d as u32, t, c.clone() * &mf * dc);
                    }
                }
            }
            (Self::Witt { alpha, .. } | Self::HeisenbergVirasoro { alpha, .. }, Kind::L) => {
                // λ^m (Y + mα) Y^b shifted
                let ma = mf.clone() * alpha;
                for (t, c) in second.iter().enumerate() {
                    let c = c.clone() * &lam;
                    let t = t as u32;
                    sink.add(0, t + 1, c.clone());
                    sink.add(0, t, c * &ma);
                }
            }
            (Self::HeisenbergVirasoro { beta, .. }, Kind::H) => {
                for (t, c) in second.iter().enumerate() {
                    sink.add(0, t as u32, c.clone() * &lam * beta);
                }
            }
            (Self::TypeI { .. } | Self::TypeII { .. } | Self::TypeIII { .. }, Kind::H) => {
                // λ^m (first variable) f(·, second - m)
                for (t, c) in second.iter().enumerate() {
                    sink.add(a + 1, t as u32, c.clone() * &lam);
                }
            }
            (Self::TypeI { sigma, .. }, Kind::I) | (Self::TypeII { sigma, .. }, Kind::J) => {
                // λ^m σ(x) f(x ∓ 1, second - m), σ evaluated at the unshifted x
                let step = if g.kind == Kind::I { -1 } else { 1 };
                let first = shifted_power(a, &F::from_i64(step));
                for (s, cs) in first.iter().enumerate() {
                    for (t, ct) in second.iter().enumerate() {
                        let base = cs.clone() * ct * &lam;
                        for (k, sk) in sigma.coeffs().iter().enumerate() {
                            sink.add((s + k) as u32, t as u32, base.clone() * sk);
                        }
                    }
                }
            }
            // J on TypeI, I on TypeII, I/J on TypeIII act as zero
            _ => {}
        }
        Ok(sink.out)
    }
}
