use std::fmt::Write;

use num_traits::Zero;

use crate::field::Field;

/// Dense univariate polynomial `c_0 + c_1 z + …`; trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<F> {
    coeffs: Vec<F>,
}

impl<F: Field> Poly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: F) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `z`.
    pub fn var() -> Self {
        Self::new(vec![F::zero(), F::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// True for nonzero constants only.
    pub fn is_nonzero_constant(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> F {
        self.coeffs.get(k).cloned().unwrap_or_else(F::zero)
    }

    pub fn eval(&self, z: &F) -> F {
        self.coeffs.iter().rev().fold(F::zero(), |acc, c| acc * z + c)
    }

    /// Renders with the given variable name, e.g. `2 + 1/2*X^2`.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            if !out.is_empty() {
                out.push_str(" + ");
            }
            match k {
                0 => write!(out, "{c}").unwrap(),
                1 => write!(out, "{c}*{var}").unwrap(),
                _ => write!(out, "{c}*{var}^{k}").unwrap(),
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gaussian::GaussianRational as Q;

    #[test]
    fn trims_and_evaluates() {
        let p = Poly::new(vec![Q::from(1), Q::from(1), Q::from(0)]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(p.eval(&Q::from(4)), Q::from(5));
        assert!(Poly::<Q>::new(vec![Q::from(0)]).is_zero());
        assert!(Poly::constant(Q::from(5)).is_nonzero_constant());
        assert!(!Poly::<Q>::var().is_nonzero_constant());
        assert_eq!(p.render("X"), "1 + 1*X");
    }
}
