//! One function per subcommand. Each fills a [`Report`] and says whether the
//! verdict contradicts what was expected.

use gca_core::analysis::probe::submodule_kind;
use gca_core::analysis::*;
use gca_core::closure::generate;
use gca_core::freemod::Module;
use gca_core::{Family, GenRef, Kind, Monomial, Scalar, Spec, SubalgebraTag, Tensor, Vector};
use serde_json::json;

use crate::config::{scalar, target, tensor_spec, tensor_target, usage, Params, Target, UsageError};
use crate::expr::{format_monomial, format_vector, parse_vector, Context};
use crate::report::{Report, Witness};

pub struct Outcome {
    pub report: Report,
    pub falsified: bool,
}

fn finish(mut report: Report, verdict: &str, expected: Option<&str>) -> Outcome {
    report.verdict = verdict.to_string();
    let falsified = expected.is_some_and(|e| verdict != e && !verdict.starts_with(&format!("{e}-")));
    Outcome { report, falsified }
}

fn expect<'a>(p: &'a Params, default: Option<&'a str>) -> Option<&'a str> {
    p.expect.as_deref().or(default)
}

fn seeds(p: &Params, ctx: &Context) -> Result<Vec<Vector>, UsageError> {
    p.seeds()
        .iter()
        .map(|s| parse_vector(s, ctx).map_err(|source| UsageError::Parse { what: format!("expression {s:?}"), source }))
        .collect()
}

fn one_for(ctx: &Context) -> Vector {
    Vector::one(ctx.arity())
}

/// `Y⊗1`, the vector the explicit submodules leave out.
fn y_left() -> Vector {
    Vector::monomial(Monomial::new(&[0, 1, 0, 0]).expect("arity 4"))
}

/// A TypeI (TypeII) module whose `I` (`J`) action shifts the first variable
/// the wrong way. Used to check that violated axioms are reported.
struct ShiftMutant {
    base: Spec,
    twin: Spec,
}

impl ShiftMutant {
    fn new(base: &Spec) -> Result<Self, UsageError> {
        let (l, e, s) = match base {
            Spec::TypeI { lambda, eta, sigma } | Spec::TypeII { lambda, eta, sigma } => {
                (lambda.clone(), eta.clone(), sigma.clone())
            }
            _ => return usage("--mutate i-shift needs a type1 or type2 module"),
        };
        let twin = match base.family() {
            Family::TypeI => Spec::type_two(l, e, s)?,
            _ => Spec::type_one(l, e, s)?,
        };
        Ok(Self { base: base.clone(), twin })
    }
}

impl Module<Scalar> for ShiftMutant {
    fn arity(&self) -> usize {
        2
    }
    fn algebra(&self) -> SubalgebraTag {
        SubalgebraTag::Full
    }
    fn family_name(&self) -> &'static str {
        "mutant"
    }
    fn act_monomial(&self, g: GenRef, m: &Monomial) -> gca_core::Result<Vector> {
        match (self.base.family(), g.kind) {
            (Family::TypeI, Kind::I) => self.twin.act_monomial(GenRef::j(g.index), m),
            (Family::TypeII, Kind::J) => self.twin.act_monomial(GenRef::i(g.index), m),
            _ => self.base.act_monomial(g, m),
        }
    }
}

pub fn axioms(p: &Params, mut r: Report) -> Result<Outcome, UsageError> {
    let t = target(p)?;
    let (ib, db) = (p.m.unwrap_or(3), p.d.unwrap_or(3));
    let ctx = t.context();
    let report = match (&t, p.mutate.as_deref()) {
        (Target::Single(s), None) => verify_axioms(s, ib, db)?,
        (Target::Tensor(ts), None) => verify_axioms(ts, ib, db)?,
        (Target::Single(s), Some("i-shift")) => verify_axioms(&ShiftMutant::new(s)?, ib, db)?,
        (_, Some(m)) => return usage(format!("unsupported mutation {m:?} (only i-shift on a single module)")),
    };
    r.dim("checked", report.checked);
    if let Some(c) = &report.counterexample {
        let word = format_monomial(&c.monomial, &ctx, "@");
        r.counterexample = Some(json!({
            "x": c.x.to_string(),
            "y": c.y.to_string(),
            "monomial": word,
            "difference": format_vector(&c.difference, &ctx),
        }));
    }
    let verdict = if report.holds { "holds" } else { "violated" };
    Ok(finish(r, verdict, expect(p, Some("holds"))))
}

pub fn rank_one(p: &Params, mut r: Report) -> Result<Outcome, UsageError> {
    let Target::Single(spec) = target(p)? else {
        return usage("rank-one needs a single type1, type2 or type3 module");
    };
    let ctx = Context::single(spec.family());
    let probe = probe_rank_one(&spec, p.m.unwrap_or(4), p.dcap.unwrap_or(6))?;
    let predicted = if spec.family() != Family::TypeIII && spec.constant_sigma().is_some() {
        "irreducible_evidence"
    } else {
        "reducible_witness"
    };
    let verdict = probe_witnesses(&probe, &mut r, &ctx);
    Ok(finish(r, verdict, expect(p, Some(predicted))))
}

fn probe_witnesses(probe: &Probe<Scalar>, r: &mut Report, ctx: &Context) -> &'static str {
    match probe {
        Probe::IrreducibleEvidence { closures, spanned_weight } => {
            r.dim("closures", *closures);
            r.dim("spanned_weight", *spanned_weight);
            "irreducible_evidence"
        }
        Probe::ReducibleWitness { seed, basis, missing, kind } => {
            r.dim("witness_dim", basis.dim());
            r.witnesses.push(Witness::new("generator", seed, ctx));
            if let Some(kind) = kind {
                r.dim("witness_dims_by_weight", basis.dims_by_weight());
                for v in minimal_submodule::<Scalar>(*kind, (1, 1, 1)) {
                    r.witnesses.push(Witness::new(format!("{kind:?} span"), &v, ctx));
                }
            }
            r.witnesses.push(Witness::new("not in span", missing, ctx));
            "reducible_witness"
        }
        Probe::Inconclusive { seed, dim, missing } => {
            r.dim("closure_dim", *dim);
            r.witnesses.push(Witness::new("seed", seed, ctx));
            r.witnesses.push(Witness::new("not reached", missing, ctx));
            "inconclusive"
        }
    }
}

fn tensor_ctx(ts: &Tensor) -> Context {
    Context::tensor(ts.left.family(), ts.right.family())
}

pub fn tensor_irr(p: &Params, mut r: Report) -> Result<Outcome, UsageError> {
    let ts = tensor_target(p)?;
    let ctx = tensor_ctx(&ts);
    let probe = probe_tensor_irreducible(&ts, p.m.unwrap_or(4), p.d.unwrap_or(3))?;
    let predicted = if ts.left.lambda() != ts.right.lambda() { "irreducible_evidence" } else { "reducible_witness" };
    let verdict = probe_witnesses(&probe, &mut r, &ctx);
    Ok(finish(r, verdict, expect(p, Some(predicted))))
}

pub fn closure(p: &Params, mut r: Report) -> Result<Outcome, UsageError> {
    let t = target(p)?;
    let ctx = t.context();
    let mut seeds = seeds(p, &ctx)?;
    if seeds.is_empty() {
        seeds.push(one_for(&ctx));
    }
    let (m, cap) = (p.m.unwrap_or(3), p.dcap.unwrap_or(3));
    let report = match &t {
        Target::Single(s) => generate(s, &seeds, m, cap)?,
        Target::Tensor(ts) => generate(ts, &seeds, m, cap)?,
    };
    r.dim("dim", report.dim);
    r.dim("dims_by_weight", report.basis.dims_by_weight());
    r.dim("discarded", report.discarded_count);
    r.dim("insert_attempts", report.insert_attempts);
    for row in report.basis.sorted_rows() {
        r.witnesses.push(Witness::new("basis", &row, &ctx));
    }
    let verdict = match &p.member {
        Some(src) => {
            let v = parse_vector(src, &ctx).map_err(|source| UsageError::Parse { what: "--member".into(), source })?;
            if report.basis.member(&v)? {
                "member"
            } else {
                "not_found"
            }
        }
        None if report.saturated => "saturated",
        None => "unsaturated",
    };
    Ok(finish(r, verdict, expect(p, None)))
}

pub fn reduce(p: &Params, mut r: Report) -> Result<Outcome, UsageError> {
    let ts = tensor_target(p)?;
    let ctx = tensor_ctx(&ts);
    let vs = seeds(p, &ctx)?;
    let [v] = vs.as_slice() else {
        return usage("reduce needs exactly one vector in --seed-exprs");
    };
    let steps = reduce_fully(&ts, v)?;
    r.dim("steps", steps.len());
    for s in &steps {
        let label = format!("case {} m={} {} -> {}", s.case_id, s.m, s.before_deg, s.after_deg);
        r.witnesses.push(Witness::new(label, &s.result, &ctx));
    }
    Ok(finish(r, "reduced", expect(p, None)))
}

fn parse_kind(s: &str) -> Result<SubmoduleKind, UsageError> {
    match s.to_ascii_lowercase().as_str() {
        "v12" => Ok(SubmoduleKind::V12),
        "w11" => Ok(SubmoduleKind::W11),
        "u5" => Ok(SubmoduleKind::U5),
        _ => usage(format!("unknown submodule kind {s:?} (v12, w11, u5)")),
    }
}

pub fn invariance(p: &Params, mut r: Report) -> Result<Outcome, UsageError> {
    let ts = tensor_target(p)?;
    let ctx = tensor_ctx(&ts);
    let (m, cap) = (p.m.unwrap_or(3), p.dcap.unwrap_or(5));
    let custom = seeds(p, &ctx)?;
    let (spanning, default_expect) = if custom.is_empty() {
        let kind = match &p.kind {
            Some(k) => parse_kind(k)?,
            None => submodule_kind(ts.shape()?),
        };
        let equal = ts.left.lambda() == ts.right.lambda();
        (submodule_span(kind, cap), equal.then_some("invariant"))
    } else {
        (custom, None)
    };
    let inv = check_invariance(&ts, &spanning, m, cap)?;
    r.dim("span_dim", inv.basis.dim());
    r.dim("tested", inv.tested);
    let proper = !inv.basis.member(&y_left())?;
    r.dim("contains_Y_left", !proper);
    if let Some(e) = &inv.escape {
        r.counterexample = Some(json!({
            "spanning": format_vector(&spanning[e.index], &ctx),
            "generator": e.gen.to_string(),
            "image": format_vector(&e.image, &ctx),
        }));
    }
    let verdict = match (inv.invariant, proper) {
        (true, true) => "invariant",
        (true, false) => "invariant-not-proper",
        (false, _) => "not-invariant",
    };
    Ok(finish(r, verdict, expect(p, default_expect)))
}

pub fn intertwiner(p: &Params, mut r: Report) -> Result<Outcome, UsageError> {
    let a = tensor_spec("A", p.a.as_ref())?;
    let b = tensor_spec("B", p.b.as_ref())?;
    let sol = intertwiner_solve(&a, &b, p.d.unwrap_or(2), p.m.unwrap_or(3))?;
    r.dim("dim", sol.dim);
    r.dim("unknowns", sol.unknowns);
    r.dim("equations", sol.equations);
    let (ca, cb) = (tensor_ctx(&a), tensor_ctx(&b));
    for (m, img) in sol.sample.iter().flatten() {
        let src = format_vector(&Vector::monomial(*m), &ca);
        r.witnesses.push(Witness::new(format!("phi({src})"), img, &cb));
    }
    let verdict = if sol.dim == 0 { "no_intertwiner" } else { "intertwiner_found" };
    Ok(finish(r, verdict, expect(p, None)))
}

pub fn classify(p: &Params, mut r: Report) -> Result<Outcome, UsageError> {
    let a = tensor_spec("A", p.a.as_ref())?;
    let b = tensor_spec("B", p.b.as_ref())?;
    let v = classify_iso(&a, &b)?;
    r.dim("witness_dim", v.witness_dim);
    if let Some(o) = &v.obstruction {
        r.dim("obstruction", o.to_string());
    }
    let verdict = match v.matching {
        Matching::Ordered => "equivalent-ordered",
        Matching::Swapped => "equivalent-swapped",
        Matching::None => "not-equivalent",
    };
    Ok(finish(r, verdict, expect(p, None)))
}

pub fn vandermonde(p: &Params, mut r: Report) -> Result<Outcome, UsageError> {
    let Some(vals) = &p.vals else {
        return usage("missing --vals");
    };
    let xs = vals.split(',').map(|s| scalar("--vals", s)).collect::<Result<Vec<_>, _>>()?;
    let [a, b, c, d] = xs.as_slice() else {
        return usage("--vals needs exactly four values");
    };
    let o = vandermonde_obstruction(a, b, c, d)?;
    r.dim("det", o.det.to_string());
    r.dim("product", o.product.to_string());
    r.dim("factored_zero", o.factored_zero);
    let verdict = if o.factored_zero { "zero" } else { "nonzero" };
    Ok(finish(r, verdict, expect(p, None)))
}
