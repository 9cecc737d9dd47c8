use std::fmt;

use crate::error::{Error, Result};

pub const MAX_ARITY: usize = 4;

/// Exponent vector `x_1^{e_1} … x_n^{e_n}` with `n` = 2 (one module) or 4
/// (tensor product). Unused trailing slots are always zero, so the derived
/// ordering is lexicographic on the exponent tuple.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: [u32; MAX_ARITY],
    arity: u8,
}

impl Monomial {
    pub fn new(exps: &[u32]) -> Result<Self> {
        if exps.is_empty() || exps.len() > MAX_ARITY {
            return Err(Error::ArityMismatch { expected: MAX_ARITY, found: exps.len() });
        }
        let mut e = [0; MAX_ARITY];
        e[..exps.len()].copy_from_slice(exps);
        Ok(Self { exps: e, arity: exps.len() as u8 })
    }

    pub fn one(arity: usize) -> Self {
        assert!((1..=MAX_ARITY).contains(&arity), "arity {arity} out of range");
        Self { exps: [0; MAX_ARITY], arity: arity as u8 }
    }

    pub fn arity(&self) -> usize {
        self.arity as usize
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps[..self.arity as usize]
    }

    pub fn exp(&self, slot: usize) -> u32 {
        self.exps()[slot]
    }

    pub fn with_exp(mut self, slot: usize, e: u32) -> Self {
        assert!(slot < self.arity());
        self.exps[slot] = e;
        self
    }

    /// Total degree.
    pub fn weight(&self) -> u32 {
        self.exps().iter().sum()
    }

    /// Concatenates the exponents of two monomials (`u ⊗ w`).
    pub fn concat(&self, other: &Self) -> Result<Self> {
        let mut e = self.exps().to_vec();
        e.extend_from_slice(other.exps());
        Self::new(&e)
    }

    /// Splits an arity-4 monomial into its two arity-2 halves.
    pub fn split(&self) -> (Self, Self) {
        assert_eq!(self.arity(), 4, "split needs arity 4");
        let [a, b, c, d] = self.exps;
        (Self { exps: [a, b, 0, 0], arity: 2 }, Self { exps: [c, d, 0, 0], arity: 2 })
    }

    /// All monomials of the given arity with weight `<= max_weight`, in
    /// ascending lexicographic order.
    pub fn all_up_to(arity: usize, max_weight: u32) -> Vec<Self> {
        fn rec(slot: usize, arity: usize, left: u32, cur: &mut [u32; MAX_ARITY], out: &mut Vec<Monomial>) {
            if slot == arity {
                out.push(Monomial { exps: *cur, arity: arity as u8 });
                return;
            }
            for e in 0..=left {
                cur[slot] = e;
                rec(slot + 1, arity, left - e, cur, out);
            }
            cur[slot] = 0;
        }
        let mut out = Vec::new();
        rec(0, arity, max_weight, &mut [0; MAX_ARITY], &mut out);
        out
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerates_by_weight() {
        assert_eq!(Monomial::all_up_to(4, 2).len(), 15);
        assert_eq!(Monomial::all_up_to(4, 3).len(), 35);
        assert_eq!(Monomial::all_up_to(2, 3).len(), 10);
        let ms = Monomial::all_up_to(2, 1);
        let exps: Vec<_> = ms.iter().map(|m| m.exps().to_vec()).collect();
        assert_eq!(exps, vec![vec![0, 0], vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn concat_and_split() {
        let a = Monomial::new(&[1, 2]).unwrap();
        let b = Monomial::new(&[3, 4]).unwrap();
        let t = a.concat(&b).unwrap();
        assert_eq!(t.exps(), &[1, 2, 3, 4]);
        assert_eq!(t.weight(), 10);
        assert_eq!(t.split(), (a, b));
    }
}
