//! Concrete syntax for module elements.
//!
//! ```text
//! expr   := [sign] term (('+' | '-') term)*
//! term   := side '@' side          (tensor contexts)
//!         | side                   (single-module contexts)
//! side   := factor ('*' factor)*
//! factor := number | var ['^' nat] | 'i'
//! number := rational ['i']
//! rational := nat ['/' posint]
//! ```
//!
//! The first factor of a term may also be a full Gaussian literal
//! `a+bi` / `a-bi`, and a sign at the very start of the input belongs to that
//! literal, so `-1/2+3i*X @ 1` has coefficient `-1/2+3i` while
//! `Y @ 1 - 1/2+3i*X @ 1` subtracts `(1/2+3i) X⊗1`. `1` is the empty
//! monomial.

use std::fmt::Write as _;

use gca_core::{Family, Monomial, Scalar, Vector};
use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("at byte {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

fn err<T>(offset: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { offset, message: message.into() })
}

/// Variable names for the two slots of one factor. `first` is `None` for
/// one-variable modules. Aliases are accepted on input; the first name is
/// used for output.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    pub first: Option<Vec<&'static str>>,
    pub second: Vec<&'static str>,
}

impl Alphabet {
    pub fn of(family: Family) -> Self {
        let two = |a, b| Self { first: Some(vec![a]), second: vec![b] };
        match family {
            Family::TypeI => two("X", "Y"),
            Family::TypeII => two("S", "T"),
            Family::TypeIII => two("P", "Q"),
            Family::Witt | Family::HeisenbergVirasoro => Self { first: None, second: vec!["Y"] },
        }
    }

    fn slot(&self, name: &str) -> Option<usize> {
        if self.first.as_ref().is_some_and(|f| f.contains(&name)) {
            Some(0)
        } else if self.second.contains(&name) {
            Some(1)
        } else {
            None
        }
    }

    fn name(&self, slot: usize) -> &'static str {
        match slot {
            0 => self.first.as_ref().expect("two-variable alphabet")[0],
            _ => self.second[0],
        }
    }

    fn names(&self) -> String {
        let mut all: Vec<&str> = self.first.iter().flatten().copied().collect();
        all.extend(&self.second);
        all.join(", ")
    }
}

/// Alphabets of a single module or of both tensor factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Context {
    pub left: Alphabet,
    pub right: Option<Alphabet>,
}

impl Context {
    pub fn single(family: Family) -> Self {
        Self { left: Alphabet::of(family), right: None }
    }

    /// `TypeI ⊗ TypeI` writes the right factor in `X1, Y1` (plain `X, Y`
    /// also accepted there); every other pair reuses each factor's own names.
    pub fn tensor(left: Family, right: Family) -> Self {
        let mut r = Alphabet::of(right);
        if left == Family::TypeI && right == Family::TypeI {
            r = Alphabet { first: Some(vec!["X1", "X"]), second: vec!["Y1", "Y"] };
        }
        Self { left: Alphabet::of(left), right: Some(r) }
    }

    pub fn arity(&self) -> usize {
        if self.right.is_some() {
            4
        } else {
            2
        }
    }
}

/// `coeff · Π left-vars ⊗ Π right-vars`, exponents already merged per slot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: Scalar,
    pub exps: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExprAst {
    pub terms: Vec<Term>,
}

impl ExprAst {
    pub fn lower(&self) -> Vector {
        let arity = self.terms.first().map_or(0, |t| t.exps.len());
        let mut v = Vector::zero(arity);
        for t in &self.terms {
            v.add_term(Monomial::new(&t.exps).expect("arity 2 or 4"), t.coeff.clone());
        }
        v
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    At,
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let tok = match c {
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'@' => Tok::At,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Num(src[start..i].parse().expect("digits"))));
                continue;
            }
            b'A'..=b'Z' | b'a'..=b'z' => {
                i += 1;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Ident(src[start..i].to_string())));
                continue;
            }
            _ => {
                let ch = src[i..].chars().next().expect("in bounds");
                return err(i, format!("unexpected character {ch:?}"));
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    ctx: &'a Context,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn peek_at(&self, k: usize) -> Option<&Tok> {
        self.toks.get(self.pos + k).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn is_imag_unit(&self, k: usize) -> bool {
        matches!(self.peek_at(k), Some(Tok::Ident(s)) if s == "i")
    }

    /// `nat ['/' posint]` followed by an optional `i`; returns the value and
    /// whether it was imaginary.
    fn rational(&mut self) -> Result<(BigRational, bool), ParseError> {
        let at = self.offset();
        let Some(Tok::Num(n)) = self.bump() else {
            return err(at, "expected a number");
        };
        let mut value = BigRational::from_integer(n);
        if self.eat(&Tok::Slash) {
            let at = self.offset();
            match self.bump() {
                Some(Tok::Num(d)) if d != BigInt::from(0) => value /= BigRational::from_integer(d),
                Some(Tok::Num(_)) => return err(at, "zero denominator"),
                _ => return err(at, "expected a positive denominator"),
            }
        }
        let imag = self.is_imag_unit(0);
        if imag {
            self.pos += 1;
        }
        Ok((value, imag))
    }

    fn number(&mut self) -> Result<Scalar, ParseError> {
        let (v, imag) = self.rational()?;
        Ok(if imag { Scalar::new(BigRational::from_integer(0.into()), v) } else { Scalar::from(v) })
    }

    /// True if the tokens ahead are `('+'|'-') rational 'i'`.
    fn imag_tail_ahead(&self) -> bool {
        if !matches!(self.peek(), Some(Tok::Plus | Tok::Minus)) || !matches!(self.peek_at(1), Some(Tok::Num(_))) {
            return false;
        }
        if self.peek_at(2) == Some(&Tok::Slash) {
            matches!(self.peek_at(3), Some(Tok::Num(_))) && self.is_imag_unit(4)
        } else {
            self.is_imag_unit(2)
        }
    }

    /// Term-leading literal: `rational ['i']` or `rational ('+'|'-') rational 'i'`.
    fn leading_literal(&mut self, negate_real: bool) -> Result<Scalar, ParseError> {
        let (v, imag) = self.rational()?;
        let v = if negate_real { -v } else { v };
        if imag {
            return Ok(Scalar::new(BigRational::from_integer(0.into()), v));
        }
        if self.imag_tail_ahead() {
            let minus = self.bump() == Some(Tok::Minus);
            let (w, _) = self.rational()?;
            return Ok(Scalar::new(v, if minus { -w } else { w }));
        }
        Ok(Scalar::from(v))
    }

    fn side(
        &mut self,
        alphabet: &Alphabet,
        base: usize,
        exps: &mut [u32],
        coeff: &mut Scalar,
        lead: Option<bool>,
    ) -> Result<(), ParseError> {
        let mut first = true;
        loop {
            let at = self.offset();
            match self.peek().cloned() {
                Some(Tok::Num(_)) => {
                    let c = match (first, lead) {
                        (true, Some(neg)) => self.leading_literal(neg)?,
                        _ => self.number()?,
                    };
                    *coeff = coeff.clone() * &c;
                }
                Some(Tok::Ident(name)) if name == "i" => {
                    self.pos += 1;
                    *coeff = coeff.clone() * &Scalar::i();
                }
                Some(Tok::Ident(name)) => {
                    self.pos += 1;
                    let Some(slot) = alphabet.slot(&name) else {
                        return err(at, format!("unknown variable {name} (expected one of {})", alphabet.names()));
                    };
                    let mut e = 1;
                    if self.eat(&Tok::Caret) {
                        let at = self.offset();
                        match self.bump() {
                            Some(Tok::Num(n)) => {
                                e = u32::try_from(n).or_else(|_| err(at, "exponent too large"))?;
                            }
                            _ => return err(at, "expected an exponent"),
                        }
                    }
                    exps[base + slot] =
                        exps[base + slot].checked_add(e).map_or_else(|| err(at, "exponent too large"), Ok)?;
                }
                _ if lead == Some(true) && first => return err(at, "expected a number after the sign"),
                _ => return err(at, "expected a number or a variable"),
            }
            first = false;
            if !self.eat(&Tok::Star) {
                return Ok(());
            }
        }
    }

    fn term(&mut self, leading_sign: Option<bool>) -> Result<Term, ParseError> {
        let mut exps = vec![0; self.ctx.arity()];
        let mut coeff = Scalar::from(1);
        let lead = match (leading_sign, self.peek()) {
            (s, Some(Tok::Num(_))) => Some(s.unwrap_or(false)),
            _ => None,
        };
        let left = self.ctx.left.clone();
        self.side(&left, 0, &mut exps, &mut coeff, lead)?;
        if lead.is_none() && leading_sign == Some(true) {
            coeff = -coeff;
        }
        match &self.ctx.right {
            Some(right) => {
                let at = self.offset();
                if !self.eat(&Tok::At) {
                    return err(at, "expected '@' between the tensor factors");
                }
                let right = right.clone();
                self.side(&right, 2, &mut exps, &mut coeff, None)?;
            }
            None => {
                if self.peek() == Some(&Tok::At) {
                    return err(self.offset(), "'@' is only allowed for tensor products");
                }
            }
        }
        if self.peek() == Some(&Tok::At) {
            return err(self.offset(), "a term has exactly one '@'");
        }
        Ok(Term { coeff, exps })
    }

    fn expr(&mut self) -> Result<ExprAst, ParseError> {
        let mut terms = Vec::new();
        let first_sign = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                Some(true)
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                Some(false)
            }
            _ => None,
        };
        terms.push(self.term(first_sign)?);
        loop {
            let at = self.offset();
            match self.bump() {
                None => break,
                Some(Tok::Plus) => terms.push(self.term(None)?),
                Some(Tok::Minus) => {
                    let mut t = self.term(None)?;
                    t.coeff = -t.coeff;
                    terms.push(t);
                }
                Some(_) => return err(at, "expected '+' or '-' between terms"),
            }
        }
        Ok(ExprAst { terms })
    }
}

pub fn parse_expr(src: &str, ctx: &Context) -> Result<ExprAst, ParseError> {
    let toks = lex(src)?;
    if toks.is_empty() {
        return err(0, "empty expression");
    }
    let mut p = Parser { toks, pos: 0, end: src.len(), ctx };
    p.expr()
}

pub fn parse_vector(src: &str, ctx: &Context) -> Result<Vector, ParseError> {
    parse_expr(src, ctx).map(|e| e.lower())
}

fn write_word(out: &mut String, alphabet: &Alphabet, exps: &[u32]) {
    let mut any = false;
    for (slot, &e) in exps.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if any {
            out.push('*');
        }
        out.push_str(alphabet.name(slot));
        if e > 1 {
            let _ = write!(out, "^{e}");
        }
        any = true;
    }
    if !any {
        out.push('1');
    }
}

/// The part of a term after its coefficient, e.g. `X^2*Y @ 1`.
pub fn format_monomial(m: &Monomial, ctx: &Context, tensor_sym: &str) -> String {
    let mut out = String::new();
    write_word(&mut out, &ctx.left, &m.exps()[..2]);
    if let Some(right) = &ctx.right {
        let _ = write!(out, " {tensor_sym} ");
        write_word(&mut out, right, &m.exps()[2..]);
    }
    out
}

fn negative(c: &Scalar) -> bool {
    c.to_string().starts_with('-')
}

/// Re-parseable rendering: every term is `coeff*word [@ word]`.
pub fn format_vector(v: &Vector, ctx: &Context) -> String {
    render(v, ctx, "@", false)
}

/// Human-readable rendering with `⊗`; unit coefficients are dropped.
pub fn display_vector(v: &Vector, ctx: &Context) -> String {
    render(v, ctx, "⊗", true)
}

fn render(v: &Vector, ctx: &Context, tensor_sym: &str, terse: bool) -> String {
    if v.is_zero() {
        let mut zero = String::from("0*");
        zero.push_str(&format_monomial(&Monomial::one(ctx.arity()), ctx, tensor_sym));
        return zero;
    }
    let mut out = String::new();
    // descending order reads naturally: highest monomial first
    let one = Scalar::from(1);
    for (k, (m, c)) in v.terms().rev().enumerate() {
        let (sign, mag) = match (k, negative(c)) {
            (0, _) => ("", c.clone()),
            (_, true) => (" - ", -c.clone()),
            (_, false) => (" + ", c.clone()),
        };
        let word = format_monomial(m, ctx, tensor_sym);
        out.push_str(sign);
        if terse && mag == one {
            out.push_str(&word);
        } else if terse && k == 0 && mag == -one.clone() {
            let _ = write!(out, "-{word}");
        } else {
            let _ = write!(out, "{mag}*{word}");
        }
    }
    out
}

/// Parses a polynomial in one variable (e.g. `σ` written in `X`).
pub fn parse_poly(src: &str, var: &'static str) -> Result<gca_core::Poly, ParseError> {
    let ctx = Context { left: Alphabet { first: Some(vec![var]), second: vec![] }, right: None };
    let ast = parse_expr(src, &ctx)?;
    let deg = ast.terms.iter().map(|t| t.exps[0] as usize).max().unwrap_or(0);
    let mut coeffs = vec![Scalar::from(0); deg + 1];
    for t in &ast.terms {
        coeffs[t.exps[0] as usize] += &t.coeff;
    }
    Ok(gca_core::Poly::new(coeffs))
}

/// `Σ c_k var^k` in the expression syntax.
pub fn format_poly(p: &gca_core::Poly, var: &'static str) -> String {
    let ctx = Context { left: Alphabet { first: Some(vec![var]), second: vec![] }, right: None };
    let mut v = Vector::zero(2);
    for (k, c) in p.coeffs().iter().enumerate() {
        v.add_term(Monomial::new(&[k as u32, 0]).expect("arity 2"), c.clone());
    }
    format_vector(&v, &ctx)
}
