#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use gca_cli::expr::Context;
use gca_core::{Family, Monomial, Scalar, Vector};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn gca(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gca")).args(args).output().expect("gca binary runs")
}

pub fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

/// The three pinned runs: fixture file and arguments.
pub const GOLDEN: [(&str, &[&str]); 3] = [
    (
        "tensor_irr.json",
        &[
            "tensor-irr",
            "--family",
            "mixed",
            "--l1",
            "2",
            "--eta1",
            "0",
            "--s1",
            "1",
            "--l2",
            "3",
            "--eta2",
            "0",
            "--s2",
            "1",
            "--M",
            "4",
            "--D",
            "3",
            "--no-timing",
        ],
    ),
    ("classify.json", &["classify", "--A", "mixed:2,0,1;3,0,1", "--B", "mixed:2,1,1;3,0,1", "--no-timing"]),
    ("vandermonde.json", &["vandermonde", "--vals", "1,2,3,4", "--no-timing"]),
];

/// Runs a golden case and compares stdout with the fixture byte for byte.
pub fn golden_matches(name: &str, args: &[&str]) -> Result<(), String> {
    let out = gca(args);
    if out.status.code() != Some(0) {
        return Err(format!("{name}: exit {:?}", out.status.code()));
    }
    let want = std::fs::read(fixture(name)).map_err(|e| format!("{name}: {e}"))?;
    if out.stdout != want {
        return Err(format!("{name}: report differs:\n{}", String::from_utf8_lossy(&out.stdout)));
    }
    Ok(())
}

pub type Shape = (Family, Option<Family>);

pub const SHAPES: [Shape; 8] = [
    (Family::TypeI, None),
    (Family::TypeII, None),
    (Family::TypeIII, None),
    (Family::Witt, None),
    (Family::TypeI, Some(Family::TypeII)),
    (Family::TypeII, Some(Family::TypeI)),
    (Family::TypeI, Some(Family::TypeI)),
    (Family::HeisenbergVirasoro, Some(Family::HeisenbergVirasoro)),
];

pub fn context(shape: Shape) -> Context {
    match shape {
        (l, None) => Context::single(l),
        (l, Some(r)) => Context::tensor(l, r),
    }
}

/// Variable spellings per slot of one factor, `None` for slots with no name.
/// Written out here rather than read back from the parser.
fn names(left: bool, (l, r): Shape) -> [Option<Vec<&'static str>>; 2] {
    let f = if left { l } else { r.expect("tensor context") };
    let ii = r == Some(Family::TypeI) && l == Family::TypeI && !left;
    match f {
        Family::TypeI if ii => [Some(vec!["X1", "X"]), Some(vec!["Y1", "Y"])],
        Family::TypeI => [Some(vec!["X"]), Some(vec!["Y"])],
        Family::TypeII => [Some(vec!["S"]), Some(vec!["T"])],
        Family::TypeIII => [Some(vec!["P"]), Some(vec!["Q"])],
        Family::Witt | Family::HeisenbergVirasoro => [None, Some(vec!["Y"])],
    }
}

fn rational_text(rng: &mut impl Rng) -> (String, Scalar) {
    let n: i64 = rng.gen_range(0..12);
    let d: i64 = rng.gen_range(1..5);
    let text = if d == 1 && rng.gen_bool(0.5) { n.to_string() } else { format!("{n}/{d}") };
    (text, Scalar::from_fracs(n, d, 0, 1))
}

/// A coefficient literal split as `first + rest`, where `first` is the value
/// of its leading rational (the part a leading minus sign applies to).
/// `None` text means the coefficient is omitted.
fn coeff_text(rng: &mut impl Rng) -> (Option<String>, Scalar, Scalar) {
    let zero = Scalar::from(0);
    match rng.gen_range(0..4) {
        0 => (None, Scalar::from(1), zero),
        1 => {
            let (t, v) = rational_text(rng);
            (Some(t), v, zero)
        }
        2 => {
            let (t, v) = rational_text(rng);
            (Some(format!("{t}i")), v * Scalar::i(), zero)
        }
        _ => {
            let (re_t, re) = rational_text(rng);
            let (im_t, im) = rational_text(rng);
            let neg = rng.gen_bool(0.5);
            let sign = if neg { "-" } else { "+" };
            let im = if neg { -im } else { im };
            (Some(format!("{re_t}{sign}{im_t}i")), re, im * Scalar::i())
        }
    }
}

fn word(rng: &mut impl Rng, spell: &[Option<Vec<&'static str>>; 2], exps: &mut [u32]) -> String {
    let mut factors = Vec::new();
    for _ in 0..rng.gen_range(0..4) {
        let slot = rng.gen_range(0..2);
        let Some(options) = &spell[slot] else { continue };
        let name = options.choose(rng).expect("nonempty");
        let e: u32 = rng.gen_range(1..4);
        exps[slot] += e;
        factors.push(if e == 1 && rng.gen_bool(0.5) { name.to_string() } else { format!("{name}^{e}") });
    }
    if factors.is_empty() {
        "1".into()
    } else {
        factors.join(if rng.gen_bool(0.5) { "*" } else { " * " })
    }
}

/// Random source text in the expression grammar together with the vector it
/// denotes, computed independently of the parser.
pub fn random_expression(rng: &mut impl Rng, shape: Shape) -> (String, Vector) {
    let arity = if shape.1.is_some() { 4 } else { 2 };
    let mut src = String::new();
    let mut expected = Vector::zero(arity);
    // a term that is just a number would absorb a following `+ 2i` into one literal
    let mut prev_bare = false;
    for k in 0..rng.gen_range(1..5) {
        let (mut ctext, mut first, rest) = coeff_text(rng);
        if k == 0 && ctext.is_some() && rng.gen_bool(0.3) {
            ctext = ctext.map(|t| format!("-{t}"));
            first = -first;
        }
        let mut c = first + rest;
        let negate = k > 0 && rng.gen_bool(0.5);
        if k > 0 {
            src.push_str(if negate { " - " } else { " + " });
        }
        let mut exps = vec![0u32; arity];
        let left = word(rng, &names(true, shape), &mut exps[..2]);
        let mut body = left;
        if arity == 4 {
            let right = word(rng, &names(false, shape), &mut exps[2..]);
            body = format!("{body} @ {right}");
        }
        match ctext {
            Some(t) if prev_bare && t.ends_with('i') && !t[..t.len() - 1].contains(['+', '-']) => {
                src.push_str(&format!("0+{t}*{body}"))
            }
            Some(t) => src.push_str(&format!("{t}*{body}")),
            None => src.push_str(&body),
        }
        prev_bare = body == "1";
        if negate {
            c = -c;
        }
        expected.add_term(Monomial::new(&exps).expect("arity"), c);
    }
    (src, expected)
}
