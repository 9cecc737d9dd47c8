//! Incremental reduced row echelon form over sparse rows.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::hash::Hash;

use crate::field::Field;

pub type SparseRow<K, F> = BTreeMap<K, F>;

/// Reduced echelon basis of a subspace of `F^(K)`.
///
/// The pivot of a row is its largest key under `order`; pivots are distinct,
/// have coefficient one, and appear in no other row.
#[derive(Clone, Debug)]
pub struct Echelon<K, F> {
    rows: Vec<SparseRow<K, F>>,
    pivots: Vec<K>,
    pivot_row: HashMap<K, usize>,
    order: fn(&K, &K) -> Ordering,
}

impl<K: Ord + Hash + Clone, F: Field> Echelon<K, F> {
    pub fn new(order: fn(&K, &K) -> Ordering) -> Self {
        Self { rows: Vec::new(), pivots: Vec::new(), pivot_row: HashMap::new(), order }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Rows in insertion order.
    pub fn rows(&self) -> &[SparseRow<K, F>] {
        &self.rows
    }

    /// Pivot of each row, aligned with [`Echelon::rows`].
    pub fn pivots(&self) -> &[K] {
        &self.pivots
    }

    pub fn is_pivot(&self, k: &K) -> bool {
        self.pivot_row.contains_key(k)
    }

    pub fn row_with_pivot(&self, k: &K) -> Option<&SparseRow<K, F>> {
        self.pivot_row.get(k).map(|&r| &self.rows[r])
    }

    /// Remainder of `v` after elimination against every pivot.
    pub fn reduce(&self, v: &SparseRow<K, F>) -> SparseRow<K, F> {
        let mut acc = v.clone();
        // rows carry no foreign pivots, so the original coefficients suffice
        for (k, c) in v {
            if let Some(&r) = self.pivot_row.get(k) {
                for (key, a) in &self.rows[r] {
                    let delta = a.clone() * c;
                    match acc.get_mut(key) {
                        Some(slot) => {
                            *slot -= &delta;
                            if slot.is_zero() {
                                acc.remove(key);
                            }
                        }
                        None => {
                            acc.insert(key.clone(), -delta);
                        }
                    }
                }
            }
        }
        acc
    }

    pub fn contains(&self, v: &SparseRow<K, F>) -> bool {
        self.reduce(v).is_empty()
    }

    /// Inserts `v`; returns false when it was already in the span.
    pub fn insert(&mut self, v: &SparseRow<K, F>) -> bool {
        let rem = self.reduce(v);
        self.insert_reduced(rem)
    }

    fn insert_reduced(&mut self, mut rem: SparseRow<K, F>) -> bool {
        let order = self.order;
        let Some(lead) = rem.keys().max_by(|a, b| order(a, b)).cloned() else {
            return false;
        };
        let inv = rem[&lead].checked_inv().expect("nonzero leading coefficient");
        for c in rem.values_mut() {
            *c = c.clone() * &inv;
        }
        for row in &mut self.rows {
            if let Some(c) = row.get(&lead).cloned() {
                for (key, a) in &rem {
                    let delta = a.clone() * &c;
                    let slot = row.entry(key.clone()).or_insert_with(F::zero);
                    *slot -= &delta;
                    if slot.is_zero() {
                        row.remove(key);
                    }
                }
            }
        }
        self.pivot_row.insert(lead.clone(), self.rows.len());
        self.pivots.push(lead);
        self.rows.push(rem);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gaussian::GaussianRational as Q;

    fn row(terms: &[(usize, i64)]) -> SparseRow<usize, Q> {
        terms.iter().map(|&(k, c)| (k, Q::from(c))).collect()
    }

    #[test]
    fn keeps_reduced_form() {
        let mut e = Echelon::new(usize::cmp);
        assert!(e.insert(&row(&[(0, 1), (1, 1)])));
        assert!(e.insert(&row(&[(0, 1), (1, -1)])));
        assert!(!e.insert(&row(&[(0, 3), (1, 5)])));
        assert_eq!(e.len(), 2);
        // fully reduced: unit vectors
        for (r, p) in e.rows().iter().zip(e.pivots()) {
            assert_eq!(r.len(), 1);
            assert_eq!(r[p], Q::from(1));
        }
    }

    #[test]
    fn membership() {
        let mut e = Echelon::new(usize::cmp);
        e.insert(&row(&[(2, 2), (0, 4)]));
        assert!(e.contains(&row(&[(2, 1), (0, 2)])));
        assert!(!e.contains(&row(&[(2, 1)])));
        assert!(e.contains(&row(&[])));
        assert_eq!(e.pivots(), &[2]);
    }
}
