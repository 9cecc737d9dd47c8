//! The planar Galilean conformal algebra as structure constants.
//!
//! Basis `{L_m, H_m, I_m, J_m | m ∈ Z}` with
//!
//! ```text
//! [L_m, L_n] = (n-m) L_{m+n}    [L_m, H_n] = n H_{m+n}
//! [L_m, I_n] = (n-m) I_{m+n}    [L_m, J_n] = (n-m) J_{m+n}
//! [H_m, I_n] = I_{m+n}          [H_m, J_n] = -J_{m+n}
//! ```
//!
//! and all remaining brackets of basis elements zero.

use std::collections::BTreeMap;
use std::fmt;

use crate::field::Field;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Kind {
    L,
    H,
    I,
    J,
}

impl Kind {
    pub const ALL: [Kind; 4] = [Kind::L, Kind::H, Kind::I, Kind::J];

    pub fn symbol(self) -> char {
        match self {
            Kind::L => 'L',
            Kind::H => 'H',
            Kind::I => 'I',
            Kind::J => 'J',
        }
    }
}

/// A basis element `kind_index`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct GenRef {
    pub kind: Kind,
    pub index: i64,
}

impl GenRef {
    pub const fn new(kind: Kind, index: i64) -> Self {
        Self { kind, index }
    }

    pub const fn l(m: i64) -> Self {
        Self::new(Kind::L, m)
    }
    pub const fn h(m: i64) -> Self {
        Self::new(Kind::H, m)
    }
    pub const fn i(m: i64) -> Self {
        Self::new(Kind::I, m)
    }
    pub const fn j(m: i64) -> Self {
        Self::new(Kind::J, m)
    }
}

impl fmt::Display for GenRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.kind.symbol(), self.index)
    }
}

/// Structure-constant table for kind pairs in canonical orientation
/// (`a <= b`): the result kind and the coefficient as a function of `(m, n)`.
fn table(a: Kind, b: Kind) -> Option<(Kind, fn(i64, i64) -> i64)> {
    use Kind::*;
    match (a, b) {
        (L, L) => Some((L, |m, n| n - m)),
        (L, H) => Some((H, |_, n| n)),
        (L, I) => Some((I, |m, n| n - m)),
        (L, J) => Some((J, |m, n| n - m)),
        (H, I) => Some((I, |_, _| 1)),
        (H, J) => Some((J, |_, _| -1)),
        _ => None,
    }
}

/// `[x, y]` as (coefficient, generator); `None` when the bracket vanishes.
pub fn bracket_coeff(x: GenRef, y: GenRef) -> Option<(i64, GenRef)> {
    let (a, b, sign) = if x.kind <= y.kind { (x, y, 1) } else { (y, x, -1) };
    let (kind, coeff) = table(a.kind, b.kind)?;
    let c = sign * coeff(a.index, b.index);
    (c != 0).then(|| (c, GenRef::new(kind, x.index + y.index)))
}

/// Finite linear combination of basis elements.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgElement<F> {
    terms: BTreeMap<GenRef, F>,
}

impl<F: Field> AlgElement<F> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn basis(g: GenRef) -> Self {
        Self::term(g, F::one())
    }

    pub fn term(g: GenRef, c: F) -> Self {
        let mut out = Self::zero();
        out.add_term(g, c);
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (GenRef, F)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (g, c) in terms {
            out.add_term(g, c);
        }
        out
    }

    pub fn add_term(&mut self, g: GenRef, c: F) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(g).or_insert_with(F::zero);
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&g);
        }
    }

    pub fn add_scaled(&mut self, c: &F, other: &Self) {
        for (g, a) in &other.terms {
            self.add_term(*g, a.clone() * c);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GenRef, &F)> {
        self.terms.iter()
    }

    pub fn coeff(&self, g: &GenRef) -> Option<&F> {
        self.terms.get(g)
    }
}

pub fn bracket<F: Field>(x: GenRef, y: GenRef) -> AlgElement<F> {
    match bracket_coeff(x, y) {
        Some((c, g)) => AlgElement::term(g, F::from_i64(c)),
        None => AlgElement::zero(),
    }
}

/// Bilinear extension of [`bracket`].
pub fn bracket_lin<F: Field>(x: &AlgElement<F>, y: &AlgElement<F>) -> AlgElement<F> {
    let mut out = AlgElement::zero();
    for (gx, cx) in &x.terms {
        for (gy, cy) in &y.terms {
            if let Some((c, g)) = bracket_coeff(*gx, *gy) {
                out.add_term(g, F::from_i64(c) * cx * cy);
            }
        }
    }
    out
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum SubalgebraTag {
    Full,
    Witt,
    HeisenbergVirasoro,
    W22I,
    W22J,
}

impl SubalgebraTag {
    pub fn admits(self, kind: Kind) -> bool {
        use Kind::*;
        match self {
            SubalgebraTag::Full => true,
            SubalgebraTag::Witt => kind == L,
            SubalgebraTag::HeisenbergVirasoro => matches!(kind, L | H),
            SubalgebraTag::W22I => matches!(kind, L | I),
            SubalgebraTag::W22J => matches!(kind, L | J),
        }
    }

    /// Admitted kinds in the fixed order `L, H, I, J`.
    pub fn kinds(self) -> impl Iterator<Item = Kind> {
        Kind::ALL.into_iter().filter(move |k| self.admits(*k))
    }

    /// Largest tag admitting only kinds admitted by both.
    pub fn meet(self, other: Self) -> Self {
        use SubalgebraTag::*;
        let both: Vec<Kind> = Kind::ALL.into_iter().filter(|k| self.admits(*k) && other.admits(*k)).collect();
        [Full, HeisenbergVirasoro, W22I, W22J, Witt]
            .into_iter()
            .find(|t| t.kinds().eq(both.iter().copied()))
            .unwrap_or(Witt)
    }

    /// Generators `{k_m : k admitted, |m| <= range}` in the fixed order
    /// `L, H, I, J` and `m` ascending.
    pub fn generators(self, range: i64) -> Vec<GenRef> {
        self.kinds().flat_map(|k| (-range..=range).map(move |m| GenRef::new(k, m))).collect()
    }
}

pub fn in_subalgebra<F: Field>(x: &AlgElement<F>, tag: SubalgebraTag) -> bool {
    x.terms.keys().all(|g| tag.admits(g.kind))
}
