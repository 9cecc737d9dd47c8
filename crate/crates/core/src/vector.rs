//! Sparse vectors over monomial bases: elements of the polynomial modules.

use std::collections::btree_map::{self, Entry};
use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::Monomial;

/// A finite linear combination of monomials of one fixed arity.
///
/// Terms are kept in lexicographic monomial order and no stored coefficient is
/// ever zero, so structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Vector<F> {
    arity: usize,
    terms: BTreeMap<Monomial, F>,
}

impl<F: Field> Vector<F> {
    pub fn zero(arity: usize) -> Self {
        Self { arity, terms: BTreeMap::new() }
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, F::one())
    }

    pub fn term(m: Monomial, c: F) -> Self {
        let mut v = Self::zero(m.arity());
        v.add_term(m, c);
        v
    }

    /// The vector `1` (empty monomial).
    pub fn one(arity: usize) -> Self {
        Self::monomial(Monomial::one(arity))
    }

    /// Builds a vector from exponent tuples, merging repeated monomials.
    pub fn from_terms<I>(arity: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, F)>,
    {
        let mut v = Self::zero(arity);
        for (m, c) in terms {
            if m.arity() != arity {
                return Err(Error::ArityMismatch { expected: arity, found: m.arity() });
            }
            v.add_term(m, c);
        }
        Ok(v)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> btree_map::Iter<'_, Monomial, F> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    pub fn coeff(&self, m: &Monomial) -> Option<&F> {
        self.terms.get(m)
    }

    pub(crate) fn into_map(self) -> BTreeMap<Monomial, F> {
        self.terms
    }

    pub(crate) fn from_map(arity: usize, terms: BTreeMap<Monomial, F>) -> Self {
        debug_assert!(terms.iter().all(|(m, c)| m.arity() == arity && !c.is_zero()));
        Self { arity, terms }
    }

    /// Largest weight occurring in the support, `None` for the zero vector.
    pub fn weight(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::weight).max()
    }

    /// Adds `c·m`, dropping the entry if it cancels.
    pub fn add_term(&mut self, m: Monomial, c: F) {
        assert_eq!(m.arity(), self.arity, "monomial arity does not match vector");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c·other`. Panics on an arity mismatch.
    pub fn add_scaled(&mut self, c: &F, other: &Self) {
        assert_eq!(self.arity, other.arity, "vector arity mismatch");
        if c.is_zero() {
            return;
        }
        for (m, a) in &other.terms {
            self.add_term(*m, a.clone() * c);
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.arity);
        }
        Self { arity: self.arity, terms: self.terms.iter().map(|(m, a)| (*m, a.clone() * c)).collect() }
    }

    /// `u ⊗ w`, placing `u`'s variables before `w`'s.
    pub fn tensor(u: &Self, w: &Self) -> Result<Self> {
        let mut out = Self::zero(u.arity + w.arity);
        for (a, ca) in &u.terms {
            for (b, cb) in &w.terms {
                out.add_term(a.concat(b)?, ca.clone() * cb);
            }
        }
        Ok(out)
    }
}

/// Exact linear combination `Σ c_k v_k`; all vectors must share one arity.
pub fn combine<'a, F, I>(items: I) -> Result<Vector<F>>
where
    F: Field + 'a,
    I: IntoIterator<Item = (&'a F, &'a Vector<F>)>,
{
    let mut out: Option<Vector<F>> = None;
    for (c, v) in items {
        let acc = out.get_or_insert_with(|| Vector::zero(v.arity));
        if acc.arity != v.arity {
            return Err(Error::ArityMismatch { expected: acc.arity, found: v.arity });
        }
        acc.add_scaled(c, v);
    }
    out.ok_or(Error::InvalidSpec("empty linear combination has no arity".into()))
}

impl<F: Field> Add for &Vector<F> {
    type Output = Vector<F>;
    fn add(self, rhs: Self) -> Vector<F> {
        let mut out = self.clone();
        out.add_scaled(&F::one(), rhs);
        out
    }
}

impl<F: Field> Sub for &Vector<F> {
    type Output = Vector<F>;
    fn sub(self, rhs: Self) -> Vector<F> {
        let mut out = self.clone();
        out.add_scaled(&-F::one(), rhs);
        out
    }
}

impl<F: Field> Neg for &Vector<F> {
    type Output = Vector<F>;
    fn neg(self) -> Vector<F> {
        self.scale(&-F::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gaussian::GaussianRational as Q;

    fn mono(e: &[u32]) -> Monomial {
        Monomial::new(e).unwrap()
    }

    fn v(terms: &[(&[u32], i64)]) -> Vector<Q> {
        let arity = terms[0].0.len();
        Vector::from_terms(arity, terms.iter().map(|(e, c)| (mono(e), Q::from(*c)))).unwrap()
    }

    #[test]
    fn combine_cancels() {
        let x = v(&[(&[1, 0, 0, 0], 1)]);
        let out = combine([(&Q::from(1), &x), (&Q::from(-1), &x)]).unwrap();
        assert!(out.is_zero());
        assert_eq!(out.arity(), 4);
    }

    #[test]
    fn combine_merges_like_terms() {
        let xy = v(&[(&[1, 1], 1)]);
        let out = combine([(&Q::from(2), &xy), (&Q::from(3), &xy)]).unwrap();
        assert_eq!(out, v(&[(&[1, 1], 5)]));
    }

    #[test]
    fn combine_disjoint_supports() {
        let y = v(&[(&[0, 1, 0, 0], 1)]);
        let t = v(&[(&[0, 0, 0, 1], 1)]);
        let out = combine([(&Q::from(1), &y), (&Q::from(1), &t)]).unwrap();
        assert_eq!(out, v(&[(&[0, 1, 0, 0], 1), (&[0, 0, 0, 1], 1)]));
    }

    #[test]
    fn combine_rejects_mixed_arity() {
        let a = v(&[(&[1, 0], 1)]);
        let b = v(&[(&[1, 0, 0, 0], 1)]);
        let err = combine([(&Q::from(1), &a), (&Q::from(1), &b)]).unwrap_err();
        assert_eq!(err, Error::ArityMismatch { expected: 2, found: 4 });
    }

    #[test]
    fn tensor_of_sums() {
        let u = v(&[(&[1, 0], 1), (&[0, 1], 2)]);
        let w = v(&[(&[0, 0], 3)]);
        let t = Vector::tensor(&u, &w).unwrap();
        assert_eq!(t, v(&[(&[1, 0, 0, 0], 3), (&[0, 1, 0, 0], 6)]));
    }

    #[test]
    fn weight_is_max_over_support() {
        let a = v(&[(&[2, 0, 0, 1], 5), (&[0, 1, 0, 0], -1)]);
        assert_eq!(a.weight(), Some(3));
        assert_eq!(Vector::<Q>::zero(4).weight(), None);
    }
}
