//! The commands behind the `cocart` binary, as library functions.

use std::time::Instant;

use serde_json::json;
use thiserror::Error;

use cocart::characterize::{
    agreement, check_condition_a, check_condition_b, check_condition_c, check_condition_d, check_condition_e,
    degenerate_verdicts, replay, synthesize_coproduct, Condition, Verdict,
};
use cocart::concrete::{
    check_coherence, check_diagram2_egger, check_egger_hypotheses, diagram2_composite, egger_coproduct_idempotent,
    egger_synthesize_coproduct, egger_tensor, monoid_semigroup_correspondence, verify_egger_coproduct, FinSetObj,
};
use cocart::magmal::{enumerate_identity_magmas, validate_identity_magma, validate_symmetric, MagmalCategory};
use cocart::splitting::{karoubi_envelope, transport_to_karoubi, unsplit_idempotents};
use cocart::universal::is_coproduct;
use cocart::{Error, SearchLimit};

use crate::bundle::{Bundle, BundleError};
use crate::report::Report;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },

    #[error("{path}:{source}")]
    Bundle { path: String, source: BundleError },

    #[error(transparent)]
    Core(#[from] Error),
}

impl CliError {
    /// 2 for resource limits, 1 for everything else.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(Error::SizeLimitExceeded { .. }) => 2,
            _ => 1,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Io { .. } => "io",
            CliError::Bundle {
                source: BundleError::Parse { .. },
                ..
            } => "parse",
            CliError::Bundle {
                source: BundleError::Resolve { .. },
                ..
            } => "resolve",
            CliError::Bundle {
                source: BundleError::Law { .. },
                ..
            } => "law",
            CliError::Core(Error::SizeLimitExceeded { .. }) => "size-limit",
            CliError::Core(Error::MissingStructure(_)) => "missing-structure",
            CliError::Core(Error::Law(_)) => "law",
            CliError::Core(_) => "invariant",
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// A command's report and, for commands that build one, an output bundle.
pub struct Outcome {
    pub report: Report,
    pub bundle: Option<Bundle>,
}

fn magmal(b: &Bundle) -> CliResult<&MagmalCategory> {
    b.magmal
        .as_ref()
        .ok_or_else(|| Error::MissingStructure("the bundle has no magmal section".into()).into())
}

fn finish(mut report: Report, start: Instant, bundle: Option<Bundle>) -> Outcome {
    report.timing_ms = start.elapsed().as_secs_f64() * 1e3;
    Outcome { report, bundle }
}

/// Parses, validates every section that is present, and summarizes.
pub fn run_validate(b: &Bundle, input: Option<&str>, limit: SearchLimit) -> CliResult<Outcome> {
    let start = Instant::now();
    let mut r = Report::new("validate", input, limit.0);
    let c = &b.cat;
    r.line(format!(
        "category: {} objects, {} morphisms",
        c.n_objects(),
        c.n_morphisms()
    ));
    r.detail("objects", c.n_objects());
    r.detail("morphisms", c.n_morphisms());
    if let Some(m) = &b.magmal {
        let unital = m.is_unital();
        r.line(format!(
            "magmal: unit {}, unitors {}",
            c.obj_name(m.unit_obj()),
            if unital {
                "invertible"
            } else {
                "not all invertible (colax)"
            }
        ));
        r.detail("unital", unital);
        if b.alternate_unit.is_some() {
            r.line("alternate unit: valid");
        }
        if let Some(s) = &b.symmetry {
            let report = validate_symmetric(m, s);
            if !report.is_ok() {
                return Err(Error::Law(report).into());
            }
            r.line("symmetry: valid");
        }
        if let Some(g) = &b.magma {
            let report = validate_identity_magma(m, g);
            if !report.is_ok() {
                return Err(Error::Law(report).into());
            }
            r.line("magma: valid");
        }
    }
    Ok(finish(r, start, None))
}

/// Which conditions `check` should run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Which {
    One(Condition),
    All,
}

impl std::str::FromStr for Which {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "a" => Which::One(Condition::A),
            "b" => Which::One(Condition::B),
            "c" => Which::One(Condition::C),
            "d" => Which::One(Condition::D),
            "e" => Which::One(Condition::E),
            "all" => Which::All,
            _ => return Err(format!("unknown condition `{s}`, expected one of a, b, c, d, e, all")),
        })
    }
}

fn check_one(b: &Bundle, m: &MagmalCategory, condition: Condition, limit: SearchLimit) -> CliResult<Verdict> {
    let needs_symmetry = || {
        b.symmetry.as_ref().ok_or_else(|| {
            CliError::from(Error::MissingStructure(format!(
                "condition ({condition}) needs a symmetry section"
            )))
        })
    };
    Ok(match condition {
        Condition::A => check_condition_a(m),
        Condition::B => check_condition_b(m, needs_symmetry()?, limit)?,
        Condition::C => check_condition_c(m, needs_symmetry()?, b.magma.as_ref(), limit)?,
        Condition::D => check_condition_d(m, b.magma.as_ref(), limit)?,
        Condition::E => check_condition_e(m, limit)?,
    })
}

/// Runs one or all conditions and replays every witness.
///
/// With `all`, a condition whose search exceeds the limit is listed under
/// `limits_hit` and skipped; the others still run.
pub fn run_check(b: &Bundle, which: Which, input: Option<&str>, limit: SearchLimit) -> CliResult<Outcome> {
    let start = Instant::now();
    let mut r = Report::new("check", input, limit.0);
    if b.cat.n_objects() == 0 {
        r.verdicts = match which {
            Which::All => degenerate_verdicts(),
            Which::One(c) => degenerate_verdicts().into_iter().filter(|v| v.condition == c).collect(),
        };
        r.agreement = (which == Which::All).then_some(true);
        return Ok(finish(r, start, None));
    }
    let m = magmal(b)?;
    match which {
        Which::One(c) => r.verdicts.push(check_one(b, m, c, limit)?),
        Which::All => {
            if b.symmetry.is_none() {
                return Err(Error::MissingStructure("conditions (b) and (c) need a symmetry section".into()).into());
            }
            for c in Condition::ALL {
                match check_one(b, m, c, limit) {
                    Ok(v) => r.verdicts.push(v),
                    Err(CliError::Core(e @ Error::SizeLimitExceeded { .. })) => {
                        r.limits_hit.push(format!("({c}): {e}"))
                    }
                    Err(e) => return Err(e),
                }
            }
            let agree = agreement(&r.verdicts);
            r.agreement = Some(agree);
            if !agree {
                r.line("the conditions are equivalent, so disagreement indicates a bug in this toolkit");
            }
        }
    }
    let mut replayed = true;
    for v in &r.verdicts {
        replayed &= replay(v, m, b.symmetry.as_ref(), limit)?;
    }
    r.witnesses_replayed = Some(replayed);
    Ok(finish(r, start, None))
}

/// Synthesizes every binary coproduct by splitting the coproduct
/// idempotent; with `karoubi`, first completes and transports.
pub fn run_synthesize(b: &Bundle, karoubi: bool, input: Option<&str>, limit: SearchLimit) -> CliResult<Outcome> {
    let start = Instant::now();
    let mut r = Report::new("synthesize", input, limit.0);
    let mut work = b.clone();
    if karoubi {
        let m = magmal(b)?;
        let t = transport_to_karoubi(m, b.magma.as_ref(), b.symmetry.as_ref())?;
        let k = &t.karoubi.category;
        let unsplit = unsplit_idempotents(k).len();
        r.line(format!(
            "completed to the Karoubi envelope: {} objects, {} morphisms, {} unsplit idempotents",
            k.n_objects(),
            k.n_morphisms(),
            unsplit
        ));
        r.detail("karoubi_objects", k.n_objects());
        r.detail("karoubi_morphisms", k.n_morphisms());
        r.detail("unsplit_idempotents", unsplit);
        work = Bundle {
            name: b.name.as_ref().map(|n| format!("{n}-karoubi")),
            notes: b.notes.clone(),
            cat: k.clone(),
            magmal: Some(t.magmal),
            alternate_unit: None,
            symmetry: t.symmetry,
            magma: t.magma,
        };
    }
    let m = magmal(&work)?;
    let c = &m.cat;
    let g = match &work.magma {
        Some(g) => {
            let report = validate_identity_magma(m, g);
            if !report.is_ok() {
                return Err(Error::Law(report).into());
            }
            Some(g.clone())
        }
        None => {
            let found = enumerate_identity_magmas(m, false, None, limit)?;
            if !found.is_empty() {
                r.line(format!(
                    "using the first of {} unital magmas on the identity",
                    found.len()
                ));
            }
            found.into_iter().next()
        }
    };
    let Some(g) = g else {
        r.line("no magma structure exists on the identity, so there is no coproduct idempotent to split");
        r.detail("magma", "none");
        return Ok(finish(r, start, Some(work)));
    };
    let (mut confirmed, mut unsplit) = (0usize, 0usize);
    for a in c.objects() {
        for x in c.objects() {
            let (an, xn) = (c.obj_name(a), c.obj_name(x));
            match synthesize_coproduct(m, &g, a, x)? {
                Some(cospan) => {
                    let ok = is_coproduct(c, &cospan);
                    confirmed += ok as usize;
                    r.line(format!(
                        "{an} + {xn}: apex {}, coprojections `{}`, `{}` ({})",
                        c.obj_name(cospan.apex),
                        c.mor_name(cospan.left),
                        c.mor_name(cospan.right),
                        if ok {
                            "confirmed by the oracle"
                        } else {
                            "REJECTED by the oracle"
                        }
                    ));
                }
                None => {
                    unsplit += 1;
                    r.line(format!(
                        "{an} + {xn}: the coproduct idempotent on {an} ⊗ {xn} does not split"
                    ));
                }
            }
        }
    }
    r.detail("pairs", c.n_objects() * c.n_objects());
    r.detail("confirmed", confirmed);
    r.detail("unsplit", unsplit);
    Ok(finish(r, start, Some(work)))
}

/// Builds the Karoubi envelope, carrying over whatever structure exists.
pub fn run_karoubi(b: &Bundle, input: Option<&str>, limit: SearchLimit) -> CliResult<Outcome> {
    let start = Instant::now();
    let mut r = Report::new("karoubi", input, limit.0);
    let name = b.name.as_ref().map(|n| format!("{n}-karoubi"));
    let out = match &b.magmal {
        Some(m) => {
            let t = transport_to_karoubi(m, b.magma.as_ref(), b.symmetry.as_ref())?;
            r.line("transported the magmal structure");
            Bundle {
                name,
                notes: b.notes.clone(),
                cat: t.karoubi.category,
                magmal: Some(t.magmal),
                alternate_unit: None,
                symmetry: t.symmetry,
                magma: t.magma,
            }
        }
        None => Bundle {
            name,
            notes: b.notes.clone(),
            ..Bundle::bare(karoubi_envelope(&b.cat).category)
        },
    };
    let k = &out.cat;
    let unsplit = unsplit_idempotents(k).len();
    r.line(format!(
        "envelope: {} objects, {} morphisms, {} unsplit idempotents",
        k.n_objects(),
        k.n_morphisms(),
        unsplit
    ));
    r.detail("objects", k.n_objects());
    r.detail("morphisms", k.n_morphisms());
    r.detail("unsplit_idempotents", unsplit);
    Ok(finish(r, start, Some(out)))
}

/// The finite-set tensor `A + A×B + B` with the left band: what holds,
/// where the coproduct composite fails, and how splitting repairs it.
pub fn run_demo_egger(size_a: usize, size_b: usize, probe_bound: usize, limit: SearchLimit) -> CliResult<Outcome> {
    let start = Instant::now();
    let mut r = Report::new("demo egger", None, limit.0);
    let (a, b) = (FinSetObj::atoms("a", size_a), FinSetObj::atoms("b", size_b));
    r.line(format!(
        "A = {a}, B = {b}, A ⊗ B has {} elements",
        egger_tensor(&a, &b).len()
    ));

    let h = check_egger_hypotheses(probe_bound, limit)?;
    r.line(format!(
        "unit laws: {}; η natural: {}; μ natural: {} (over {} maps between sets of size ≤ {probe_bound})",
        yes(h.unit_laws),
        yes(h.eta_natural),
        yes(h.mu_natural),
        h.probes
    ));
    let mut carriers: Vec<FinSetObj> = (0..=probe_bound.min(2)).map(|k| FinSetObj::atoms("c", k)).collect();
    if size_a.max(size_b) <= 2 {
        carriers.extend([a.clone(), b.clone()]);
    }
    let coherence = check_coherence(&carriers, limit)?;
    r.line(format!(
        "associator, braiding and unitors: {} (pentagon, triangle, hexagons, σ∘σ = 1, naturality)",
        if coherence.is_ok() { "coherent" } else { "INCOHERENT" }
    ));
    r.detail(
        "hypotheses",
        json!({
            "unit_laws": h.unit_laws,
            "eta_natural": h.eta_natural,
            "mu_natural": h.mu_natural,
            "probes": h.probes,
            "coherent": coherence.is_ok(),
        }),
    );

    let agree = egger_coproduct_idempotent(&a, &b) == diagram2_composite(&a, &b);
    r.line(format!("generic and elementwise composites agree: {}", yes(agree)));
    match check_diagram2_egger(&a, &b) {
        Some(w) => {
            r.line(format!(
                "the composite A ⊗ B -> A ⊗ B is not the identity; trace of {}:",
                w.element
            ));
            let mut at = w.element.clone();
            for (arrow, next) in &w.trace {
                r.line(format!("  {at}  --{arrow}-->  {next}"));
                at = next.clone();
            }
            r.line(format!("{} ↦ {}, its first component", w.element, w.image));
            r.detail(
                "witness",
                json!({ "element": w.element.to_string(), "image": w.image.to_string() }),
            );
        }
        None => {
            r.line("the composite is the identity (the mid block is empty)");
            r.detail("witness", serde_json::Value::Null);
        }
    }

    let cp = egger_synthesize_coproduct(&a, &b);
    let verified = verify_egger_coproduct(&a, &b, &cp, probe_bound, limit)?;
    r.line(format!(
        "splitting the composite: summand {} with {} elements",
        cp.summand,
        cp.summand.len()
    ));
    r.line(format!(
        "summand with its coprojections is a coproduct for every target of size ≤ {probe_bound}: {}",
        yes(verified && cp.splits())
    ));
    r.detail("summand_size", cp.summand.len());
    r.detail("coproduct_verified", verified && cp.splits());

    let mut counts = Vec::new();
    for n in 1..=probe_bound.min(3) {
        let k = monoid_semigroup_correspondence(n, limit)?;
        r.line(format!(
            "carrier of size {n}: {} monoids for ⊗, {} semigroups",
            k.egger_monoids, k.semigroups
        ));
        counts.push(json!({ "n": n, "monoids": k.egger_monoids, "semigroups": k.semigroups }));
    }
    r.detail("monoid_counts", counts);
    Ok(finish(r, start, None))
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "NO"
    }
}
