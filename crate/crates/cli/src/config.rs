//! Run parameters: command-line flags, optionally layered over a TOML file
//! with the same keys.

use std::path::{Path, PathBuf};

use clap::Args;
use gca_core::{Family, Scalar, Spec, Tensor};
use serde::Deserialize;

use crate::expr::{parse_poly, Context};

#[derive(Debug, thiserror::Error)]
pub enum UsageError {
    #[error("{0}")]
    Message(String),
    #[error("reading {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("config {path}: {source}")]
    Config { path: PathBuf, source: toml::de::Error },
    #[error("{what}: {source}")]
    Parse { what: String, source: crate::expr::ParseError },
    #[error("{0}")]
    Core(#[from] gca_core::Error),
}

pub fn usage<T>(msg: impl Into<String>) -> Result<T, UsageError> {
    Err(UsageError::Message(msg.into()))
}

/// Every parameter any subcommand reads. Config-file keys are the flag names.
#[derive(Args, Deserialize, Clone, Debug, Default)]
#[serde(deny_unknown_fields)]
pub struct Params {
    /// Module or tensor family: type1, type2, type3, witt, hvir, mixed,
    /// reversed, i-i, ii-ii, witt-witt, hvir-hvir
    #[arg(long)]
    pub family: Option<String>,
    /// Whole spec as `family:p1,p2,..[;q1,q2,..]`
    #[arg(long)]
    pub spec: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub l1: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub eta1: Option<String>,
    /// σ1 as a polynomial in the factor's first variable, or δ for type3
    #[arg(long, allow_hyphen_values = true)]
    pub s1: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub alpha1: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub beta1: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub l2: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub eta2: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub s2: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub alpha2: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub beta2: Option<String>,
    /// First tensor spec for classify / intertwiner
    #[arg(long = "A")]
    #[serde(rename = "A")]
    pub a: Option<String>,
    /// Second tensor spec for classify / intertwiner
    #[arg(long = "B")]
    #[serde(rename = "B")]
    pub b: Option<String>,
    /// Generator index range
    #[arg(long = "M")]
    #[serde(rename = "M")]
    pub m: Option<u32>,
    /// Degree bound
    #[arg(long = "D")]
    #[serde(rename = "D")]
    pub d: Option<u32>,
    /// Weight cap for closures
    #[arg(long = "Dcap")]
    #[serde(rename = "Dcap")]
    pub dcap: Option<u32>,
    /// Expressions, separated by ';' or given repeatedly
    #[arg(long = "seed-exprs", allow_hyphen_values = true)]
    #[serde(rename = "seed-exprs")]
    pub seed_exprs: Option<Vec<String>>,
    /// Expression to test for membership in a closure
    #[arg(long, allow_hyphen_values = true)]
    pub member: Option<String>,
    /// Submodule spanning set: v12, w11, u5
    #[arg(long)]
    pub kind: Option<String>,
    /// Four comma-separated scalars for vandermonde
    #[arg(long, allow_hyphen_values = true)]
    pub vals: Option<String>,
    /// Expected verdict; a different verdict exits with status 1
    #[arg(long)]
    pub expect: Option<String>,
    /// Deliberately corrupt the module action (axioms only): i-shift
    #[arg(long)]
    pub mutate: Option<String>,
    /// Write the report here instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Report wall_ms as 0 so reports are reproducible byte for byte
    #[arg(long = "no-timing")]
    #[serde(rename = "no-timing")]
    #[serde(default)]
    pub no_timing: bool,
    /// TOML file with any of these keys; flags take precedence
    #[arg(long)]
    #[serde(skip)]
    pub config: Option<PathBuf>,
}

macro_rules! overlay {
    ($dst:ident, $src:ident; $($f:ident),*) => {
        $( if $dst.$f.is_none() { $dst.$f = $src.$f.clone(); } )*
    };
}

impl Params {
    /// Fills unset fields from the `--config` file, if any.
    pub fn resolve(mut self) -> Result<Self, UsageError> {
        let Some(path) = self.config.clone() else {
            return Ok(self);
        };
        let file = load(&path)?;
        overlay!(self, file; family, spec, l1, eta1, s1, alpha1, beta1, l2, eta2, s2, alpha2, beta2,
            a, b, m, d, dcap, seed_exprs, member, kind, vals, expect, mutate, out);
        self.no_timing |= file.no_timing;
        Ok(self)
    }

    pub fn seeds(&self) -> Vec<String> {
        self.seed_exprs
            .iter()
            .flatten()
            .flat_map(|s| s.split(';'))
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(String::from)
            .collect()
    }

    /// Parameter echo for the report: every set field, as text.
    pub fn echo(&self) -> Vec<(&'static str, String)> {
        let mut out = Vec::new();
        let mut put = |k: &'static str, v: &Option<String>| {
            if let Some(v) = v {
                out.push((k, v.clone()));
            }
        };
        put("family", &self.family);
        put("spec", &self.spec);
        put("l1", &self.l1);
        put("eta1", &self.eta1);
        put("s1", &self.s1);
        put("alpha1", &self.alpha1);
        put("beta1", &self.beta1);
        put("l2", &self.l2);
        put("eta2", &self.eta2);
        put("s2", &self.s2);
        put("alpha2", &self.alpha2);
        put("beta2", &self.beta2);
        put("A", &self.a);
        put("B", &self.b);
        put("member", &self.member);
        put("kind", &self.kind);
        put("vals", &self.vals);
        put("expect", &self.expect);
        put("mutate", &self.mutate);
        for (k, v) in [("M", self.m), ("D", self.d), ("Dcap", self.dcap)] {
            if let Some(v) = v {
                out.push((k, v.to_string()));
            }
        }
        let seeds = self.seeds();
        if !seeds.is_empty() {
            out.push(("seed-exprs", seeds.join("; ")));
        }
        out
    }
}

pub fn load(path: &Path) -> Result<Params, UsageError> {
    let text = std::fs::read_to_string(path).map_err(|source| UsageError::Io { path: path.into(), source })?;
    toml::from_str(&text).map_err(|source| UsageError::Config { path: path.into(), source })
}

pub fn scalar(what: &str, s: &str) -> Result<Scalar, UsageError> {
    s.trim().parse().map_err(|_| UsageError::Message(format!("{what}: cannot parse {s:?} as a Gaussian rational")))
}

/// What the parameters describe.
#[derive(Clone, Debug)]
pub enum Target {
    Single(Spec),
    Tensor(Tensor),
}

impl Target {
    pub fn context(&self) -> Context {
        match self {
            Target::Single(s) => Context::single(s.family()),
            Target::Tensor(t) => Context::tensor(t.left.family(), t.right.family()),
        }
    }
}

fn single_family(tag: &str) -> Option<Family> {
    Some(match tag {
        "type1" => Family::TypeI,
        "type2" => Family::TypeII,
        "type3" => Family::TypeIII,
        "witt" => Family::Witt,
        "hvir" => Family::HeisenbergVirasoro,
        _ => return None,
    })
}

fn tensor_families(tag: &str) -> Option<(Family, Family)> {
    use Family::*;
    Some(match tag {
        "mixed" => (TypeI, TypeII),
        "reversed" => (TypeII, TypeI),
        "i-i" => (TypeI, TypeI),
        "ii-ii" => (TypeII, TypeII),
        "witt-witt" => (Witt, Witt),
        "hvir-hvir" => (HeisenbergVirasoro, HeisenbergVirasoro),
        _ => return None,
    })
}

fn first_var(f: Family) -> &'static str {
    match f {
        Family::TypeII => "S",
        Family::TypeIII => "P",
        _ => "X",
    }
}

/// Builds one factor from its positional parameters:
/// type1/type2 `λ,η,σ`; type3 `λ,δ`; witt `λ,α`; hvir `λ,α,β`.
pub fn factor(family: Family, vals: &[&str]) -> Result<Spec, UsageError> {
    let want = match family {
        Family::TypeI | Family::TypeII | Family::HeisenbergVirasoro => 3,
        Family::TypeIII | Family::Witt => 2,
    };
    if vals.len() != want {
        return usage(format!("{} expects {want} parameters, got {}", family.name(), vals.len()));
    }
    let s = |k: usize, what: &str| scalar(what, vals[k]);
    let poly = |k: usize, what: &str| {
        parse_poly(vals[k], first_var(family)).map_err(|source| UsageError::Parse { what: what.into(), source })
    };
    let spec = match family {
        Family::TypeI => Spec::type_one(s(0, "λ")?, s(1, "η")?, poly(2, "σ")?),
        Family::TypeII => Spec::type_two(s(0, "λ")?, s(1, "η")?, poly(2, "σ")?),
        Family::TypeIII => Spec::type_three(s(0, "λ")?, poly(1, "δ")?),
        Family::Witt => Spec::witt(s(0, "λ")?, s(1, "α")?),
        Family::HeisenbergVirasoro => Spec::hvir(s(0, "λ")?, s(1, "α")?, s(2, "β")?),
    }?;
    Ok(spec)
}

/// Parses `family:params[;params]`.
pub fn parse_spec(text: &str) -> Result<Target, UsageError> {
    let Some((tag, rest)) = text.split_once(':') else {
        return usage(format!("spec {text:?} must look like family:params"));
    };
    let tag = tag.trim();
    fn split(s: &str) -> Vec<&str> {
        s.split(',').map(str::trim).collect()
    }
    if let Some(f) = single_family(tag) {
        return Ok(Target::Single(factor(f, &split(rest))?));
    }
    if let Some((fl, fr)) = tensor_families(tag) {
        let Some((l, r)) = rest.split_once(';') else {
            return usage(format!("tensor spec {text:?} needs two ';'-separated parameter lists"));
        };
        return Ok(Target::Tensor(Tensor::new(factor(fl, &split(l))?, factor(fr, &split(r))?)?));
    }
    usage(format!("unknown family {tag:?}"))
}

fn factor_from_flags(family: Family, side: u8, p: &Params) -> Result<Spec, UsageError> {
    let (l, eta, s, alpha, beta) = if side == 1 {
        (&p.l1, &p.eta1, &p.s1, &p.alpha1, &p.beta1)
    } else {
        (&p.l2, &p.eta2, &p.s2, &p.alpha2, &p.beta2)
    };
    let need = |v: &Option<String>, name: &str| -> Result<String, UsageError> {
        v.clone().ok_or_else(|| UsageError::Message(format!("missing --{name}{side}")))
    };
    let vals: Vec<String> = match family {
        Family::TypeI | Family::TypeII => vec![need(l, "l")?, need(eta, "eta")?, need(s, "s")?],
        Family::TypeIII => vec![need(l, "l")?, need(s, "s")?],
        Family::Witt => vec![need(l, "l")?, need(alpha, "alpha")?],
        Family::HeisenbergVirasoro => vec![need(l, "l")?, need(alpha, "alpha")?, need(beta, "beta")?],
    };
    factor(family, &vals.iter().map(String::as_str).collect::<Vec<_>>())
}

/// The module described by `--spec`, or by `--family` plus per-factor flags.
pub fn target(p: &Params) -> Result<Target, UsageError> {
    if let Some(spec) = &p.spec {
        return parse_spec(spec);
    }
    let Some(tag) = p.family.as_deref() else {
        return usage("give either --spec or --family with its parameters");
    };
    if let Some(f) = single_family(tag) {
        return Ok(Target::Single(factor_from_flags(f, 1, p)?));
    }
    if let Some((fl, fr)) = tensor_families(tag) {
        let t = Tensor::new(factor_from_flags(fl, 1, p)?, factor_from_flags(fr, 2, p)?)?;
        return Ok(Target::Tensor(t));
    }
    usage(format!("unknown family {tag:?}"))
}

pub fn tensor_target(p: &Params) -> Result<Tensor, UsageError> {
    match target(p)? {
        Target::Tensor(t) => Ok(t),
        Target::Single(_) => usage("this command needs a tensor product"),
    }
}

pub fn tensor_spec(what: &str, text: Option<&String>) -> Result<Tensor, UsageError> {
    let Some(text) = text else {
        return usage(format!("missing --{what}"));
    };
    match parse_spec(text)? {
        Target::Tensor(t) => Ok(t),
        Target::Single(_) => usage(format!("--{what} must be a tensor spec")),
    }
}
