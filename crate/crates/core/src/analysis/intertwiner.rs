//! Bounded-degree intertwiners between two modules as an exact linear
//! system.

use std::collections::{BTreeMap, HashMap};

use crate::echelon::Echelon;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::freemod::{Cached, Module};
use crate::monomial::Monomial;
use crate::vector::Vector;

/// `φ` on each source monomial.
pub type LinearMap<F> = Vec<(Monomial, Vector<F>)>;

#[derive(Clone, Debug)]
pub struct IntertwinerSolution<F> {
    pub dim: usize,
    pub unknowns: usize,
    pub equations: usize,
    pub sample: Option<LinearMap<F>>,
}

/// Solves for linear `φ` from the weight `<= D` part of `a` into the weight
/// `<= D + 1` part of `b` with `φ(g·v) = g·φ(v)` for all generators
/// `|m| <= M` defined on both and all monomials `v` of weight `<= D - 1`
/// whose images stay within weight `D`.
///
/// `dim = 0` certifies there is no intertwiner at all: any intertwiner
/// restricts to a solution here. `dim >= 1` is only evidence.
pub fn intertwiner_solve<F, A, B>(a: &A, b: &B, d: u32, gen_range: u32) -> Result<IntertwinerSolution<F>>
where
    F: Field,
    A: Module<F> + ?Sized,
    B: Module<F> + ?Sized,
{
    if a.arity() != b.arity() {
        return Err(Error::ArityMismatch { expected: a.arity(), found: b.arity() });
    }
    if d == 0 {
        return Err(Error::InvalidSpec("intertwiner degree bound must be at least 1".into()));
    }
    let (a, b) = (Cached::new(a), Cached::new(b));
    let src = a.basis_up_to(d);
    let dst = b.basis_up_to(d + 1);
    let src_idx: HashMap<Monomial, usize> = src.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let unknown = |s: usize, t: usize| s * dst.len() + t;
    let unknowns = src.len() * dst.len();

    let gens = a.algebra().meet(b.algebra()).generators(i64::from(gen_range));
    let mut system: Echelon<usize, F> = Echelon::new(usize::cmp);
    let mut equations = 0;

    for (vi, v) in src.iter().enumerate() {
        if v.weight() + 1 > d {
            continue;
        }
        for &g in &gens {
            let img = a.act_monomial(g, v)?;
            if img.support().any(|m| !src_idx.contains_key(m)) {
                continue;
            }
            // rows[β] = Σ_m c_m φ(m)[β] - Σ_t φ(v)[t] (g·t)[β]
            let mut rows: BTreeMap<Monomial, BTreeMap<usize, F>> = BTreeMap::new();
            for (m, c) in img.terms() {
                let s = src_idx[m];
                for (t, beta) in dst.iter().enumerate() {
                    add(rows.entry(*beta).or_default(), unknown(s, t), c.clone());
                }
            }
            for (t, tm) in dst.iter().enumerate() {
                for (beta, c) in b.act_monomial(g, tm)?.terms() {
                    add(rows.entry(*beta).or_default(), unknown(vi, t), -c.clone());
                }
            }
            for row in rows.into_values() {
                if !row.is_empty() {
                    equations += 1;
                    system.insert(&row);
                }
            }
        }
    }

    let dim = unknowns - system.len();
    let sample = (dim > 0).then(|| {
        let free = (0..unknowns).find(|k| !system.is_pivot(k)).expect("a free unknown");
        let mut value = vec![F::zero(); unknowns];
        value[free] = F::one();
        for (row, p) in system.rows().iter().zip(system.pivots()) {
            if let Some(c) = row.get(&free) {
                value[*p] = -c.clone();
            }
        }
        src.iter()
            .enumerate()
            .map(|(s, m)| {
                let terms = dst.iter().enumerate().map(|(t, tm)| (*tm, value[unknown(s, t)].clone()));
                (*m, Vector::from_terms(b.arity(), terms).expect("arity"))
            })
            .collect()
    });
    Ok(IntertwinerSolution { dim, unknowns, equations, sample })
}

fn add<F: Field>(row: &mut BTreeMap<usize, F>, k: usize, c: F) {
    let slot = row.entry(k).or_insert_with(F::zero);
    *slot += &c;
    if slot.is_zero() {
        row.remove(&k);
    }
}
