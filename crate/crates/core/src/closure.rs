//! Degree-truncated submodule closure.
//!
//! [`generate`] saturates a set of seeds under the generators `{k_m : |m| <=
//! M}` defined on a module, keeping only action results of weight `<= Dcap`.
//! The result is a subspace of `⟨seeds⟩ ∩ {weight <= Dcap}`: a vector found in
//! it is certified to lie in the generated submodule, while a vector missing
//! from it has only not been found at `(M, Dcap)`.

use std::collections::VecDeque;

use crate::echelon::Echelon;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::freemod::{Cached, Module};
use crate::gca::GenRef;
use crate::monomial::Monomial;
use crate::tensor::DegTuple;
use crate::vector::Vector;

pub const DEFAULT_INSERT_CAP: usize = 10_000;

fn graded(a: &Monomial, b: &Monomial) -> std::cmp::Ordering {
    DegTuple::of(a).cmp(&DegTuple::of(b))
}

/// Reduced echelon basis of a space of [`Vector`]s, pivoting on the
/// `≻`-largest monomial of each row.
#[derive(Clone, Debug)]
pub struct EchelonBasis<F> {
    arity: usize,
    inner: Echelon<Monomial, F>,
}

impl<F: Field> EchelonBasis<F> {
    pub fn new(arity: usize) -> Self {
        Self { arity, inner: Echelon::new(graded) }
    }

    pub fn from_vectors<'a, I>(arity: usize, vs: I) -> Result<Self>
    where
        F: 'a,
        I: IntoIterator<Item = &'a Vector<F>>,
    {
        let mut b = Self::new(arity);
        for v in vs {
            b.insert(v)?;
        }
        Ok(b)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn dim(&self) -> usize {
        self.inner.len()
    }

    fn check(&self, v: &Vector<F>) -> Result<()> {
        if v.arity() != self.arity {
            return Err(Error::ArityMismatch { expected: self.arity, found: v.arity() });
        }
        Ok(())
    }

    /// Reduces `v` and adds the remainder if nonzero; true if the span grew.
    pub fn insert(&mut self, v: &Vector<F>) -> Result<bool> {
        self.check(v)?;
        let rem = self.inner.reduce(&v.clone().into_map());
        Ok(self.inner.insert(&rem))
    }

    pub fn member(&self, v: &Vector<F>) -> Result<bool> {
        self.check(v)?;
        Ok(self.inner.contains(&v.clone().into_map()))
    }

    /// Remainder of `v` modulo the span.
    pub fn reduce(&self, v: &Vector<F>) -> Result<Vector<F>> {
        self.check(v)?;
        Ok(Vector::from_map(self.arity, self.inner.reduce(&v.clone().into_map())))
    }

    pub fn pivots(&self) -> &[Monomial] {
        self.inner.pivots()
    }

    /// Row `k` in insertion order.
    pub fn row(&self, k: usize) -> Vector<F> {
        Vector::from_map(self.arity, self.inner.rows()[k].clone())
    }

    /// Rows as vectors, in insertion order.
    pub fn rows(&self) -> Vec<Vector<F>> {
        self.inner.rows().iter().map(|r| Vector::from_map(self.arity, r.clone())).collect()
    }

    /// Rows sorted by descending pivot.
    pub fn sorted_rows(&self) -> Vec<Vector<F>> {
        let mut idx: Vec<usize> = (0..self.dim()).collect();
        let pivots = self.pivots();
        idx.sort_by(|&a, &b| graded(&pivots[b], &pivots[a]));
        let rows = self.inner.rows();
        idx.into_iter().map(|i| Vector::from_map(self.arity, rows[i].clone())).collect()
    }

    /// `out[w]` = number of rows whose pivot has weight `w`, i.e.
    /// `dim(span ∩ W_{<=w}) - dim(span ∩ W_{<w})`.
    pub fn dims_by_weight(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for p in self.pivots() {
            let w = p.weight() as usize;
            if out.len() <= w {
                out.resize(w + 1, 0);
            }
            out[w] += 1;
        }
        out
    }

    /// True if every monomial of weight `<= max_weight` lies in the span.
    pub fn spans_up_to(&self, max_weight: u32) -> bool {
        self.spans(&Monomial::all_up_to(self.arity, max_weight))
    }

    /// True if each of `monos` lies in the span.
    pub fn spans(&self, monos: &[Monomial]) -> bool {
        // a monomial is in a reduced echelon span only as a pivot whose row
        // is that monomial alone
        monos.iter().all(|m| self.inner.row_with_pivot(m).is_some_and(|r| r.len() == 1))
    }
}

/// How a generated vector was obtained.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Derivation {
    Seed(usize),
    /// `gen` applied to `sources[source]`.
    Action {
        source: usize,
        gen: GenRef,
    },
}

/// An echelon row as it stood when the worklist reached it. At that point
/// it was a combination of `generated[..horizon]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Source<F> {
    pub row: Vector<F>,
    pub horizon: usize,
}

#[derive(Clone, Debug)]
pub struct ClosureReport<F> {
    pub basis: EchelonBasis<F>,
    pub dim: usize,
    /// The worklist drained before the insert cap was reached.
    pub saturated: bool,
    /// A [`generate_until`] predicate ended the run.
    pub stopped_early: bool,
    pub gen_range: u32,
    pub weight_cap: u32,
    /// Action results dropped because their weight exceeded the cap.
    pub discarded_count: usize,
    pub insert_attempts: usize,
    /// Every vector that enlarged the span, in discovery order.
    pub generated: Vec<Vector<F>>,
    pub derivations: Vec<Derivation>,
    pub sources: Vec<Source<F>>,
}

impl<F: Field> ClosureReport<F> {
    /// Re-derives `generated[id]` from the recorded provenance and checks
    /// that every source it depends on lies in the span of what was
    /// generated before it. Together these show the vector lies in the
    /// submodule generated by the seeds.
    pub fn replay<M: Module<F> + ?Sized>(&self, module: &M, seeds: &[Vector<F>], id: usize) -> Result<bool> {
        match self.derivations[id] {
            Derivation::Seed(i) => Ok(seeds.get(i) == Some(&self.generated[id])),
            Derivation::Action { source, gen } => {
                let src = &self.sources[source];
                if src.horizon > id || module.act(gen, &src.row)? != self.generated[id] {
                    return Ok(false);
                }
                let prefix = EchelonBasis::from_vectors(module.arity(), &self.generated[..src.horizon])?;
                prefix.member(&src.row)
            }
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ClosureOptions {
    pub gen_range: u32,
    pub weight_cap: u32,
    pub insert_cap: usize,
}

impl ClosureOptions {
    pub fn new(gen_range: u32, weight_cap: u32) -> Self {
        Self { gen_range, weight_cap, insert_cap: DEFAULT_INSERT_CAP }
    }
}

pub fn generate<F: Field, M: Module<F>>(
    module: &M,
    seeds: &[Vector<F>],
    gen_range: u32,
    weight_cap: u32,
) -> Result<ClosureReport<F>> {
    generate_with(module, seeds, ClosureOptions::new(gen_range, weight_cap))
}

pub fn generate_with<F: Field, M: Module<F>>(
    module: &M,
    seeds: &[Vector<F>],
    opts: ClosureOptions,
) -> Result<ClosureReport<F>> {
    run(module, seeds, opts, |_: &EchelonBasis<F>| false)
}

/// Like [`generate_with`] but stops as soon as `done` holds for the current
/// span. The span only grows, so any membership `done` tests stays true.
pub fn generate_until<F, M, P>(
    module: &M,
    seeds: &[Vector<F>],
    opts: ClosureOptions,
    done: P,
) -> Result<ClosureReport<F>>
where
    F: Field,
    M: Module<F>,
    P: FnMut(&EchelonBasis<F>) -> bool,
{
    run(module, seeds, opts, done)
}

fn run<F, M, P>(module: &M, seeds: &[Vector<F>], opts: ClosureOptions, mut done: P) -> Result<ClosureReport<F>>
where
    F: Field,
    M: Module<F>,
    P: FnMut(&EchelonBasis<F>) -> bool,
{
    if opts.gen_range < 1 {
        return Err(Error::InvalidSpec("generator range M must be at least 1".into()));
    }
    let arity = module.arity();
    for s in seeds {
        if s.arity() != arity {
            return Err(Error::ArityMismatch { expected: arity, found: s.arity() });
        }
        match s.weight() {
            None => return Err(Error::InvalidSpec("closure seeds must be nonzero".into())),
            Some(w) if w > opts.weight_cap => {
                return Err(Error::InvalidSpec(format!("seed weight {w} exceeds the weight cap {}", opts.weight_cap)))
            }
            _ => {}
        }
    }

    let gens = module.algebra().generators(i64::from(opts.gen_range));
    let actions = Cached::new(module);
    let mut basis = EchelonBasis::new(arity);
    let mut generated = Vec::new();
    let mut derivations = Vec::new();
    let mut sources = Vec::new();
    let mut queue = VecDeque::new();

    for (i, s) in seeds.iter().enumerate() {
        if basis.insert(s)? {
            queue.push_back(generated.len());
            generated.push(s.clone());
            derivations.push(Derivation::Seed(i));
        }
    }

    let mut discarded = 0;
    let mut attempts = 0;
    let mut saturated = true;
    let mut stopped_early = done(&basis);
    'work: while let Some(k) = queue.pop_front() {
        if stopped_early {
            break;
        }
        // act on the row as reduced so far: it spans the same space as the
        // raw vector modulo earlier rows and is usually much sparser
        let row = basis.row(k);
        let source = sources.len();
        sources.push(Source { row: row.clone(), horizon: generated.len() });
        for &g in &gens {
            let img = actions.act(g, &row)?;
            let Some(w) = img.weight() else { continue };
            if w > opts.weight_cap {
                discarded += 1;
                continue;
            }
            if attempts == opts.insert_cap {
                saturated = false;
                break 'work;
            }
            attempts += 1;
            if basis.insert(&img)? {
                queue.push_back(generated.len());
                generated.push(img);
                derivations.push(Derivation::Action { source, gen: g });
                if done(&basis) {
                    stopped_early = true;
                    break;
                }
            }
        }
    }

    Ok(ClosureReport {
        dim: basis.dim(),
        basis,
        saturated: saturated && !stopped_early,
        stopped_early,
        gen_range: opts.gen_range,
        weight_cap: opts.weight_cap,
        discarded_count: discarded,
        insert_attempts: attempts,
        generated,
        derivations,
        sources,
    })
}
