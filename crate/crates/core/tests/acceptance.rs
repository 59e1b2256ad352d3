//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails or runs over its time limit.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use cocart::category::FinCat;
use cocart::characterize::{
    canonical_magma_from_coproducts, check_all, coprojections_from_initial, derived_magma_from_adjoint,
    find_right_adjoint_to_tensor, initial_from_coprojections, unique_associator, unique_braiding, Condition,
    InitialityData,
};
use cocart::concrete::{
    check_diagram2_egger, check_egger_hypotheses, egger_synthesize_coproduct, monoid_semigroup_correspondence,
    semigroup_count, verify_egger_coproduct, EggerElem, FinSetObj,
};
use cocart::fixtures::{self, Fixture};
use cocart::magmal::{enumerate_identity_magmas, validate_symmetric, SymmetricStructure};
use cocart::splitting::{check_retraction_lemma, karoubi_envelope, unsplit_idempotents, Idempotent};
use cocart::SearchLimit;

const LIMIT: SearchLimit = SearchLimit::DEFAULT;
const PROBE_BOUND: usize = 3;

type Outcome = Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn cocartesian_fixtures() -> Vec<Fixture> {
    vec![fixtures::terminal(), fixtures::join(), fixtures::double_unit()]
}

fn parts(fx: &Fixture) -> (&cocart::magmal::MagmalCategory, &SymmetricStructure) {
    (
        fx.magmal.as_ref().expect("tensor"),
        fx.symmetry.as_ref().expect("symmetry"),
    )
}

fn five_conditions() -> Outcome {
    for fx in cocartesian_fixtures() {
        let (m, s) = parts(&fx);
        let verdicts = check_all(m, s, fx.magma.as_ref(), LIMIT).map_err(|e| e.to_string())?;
        ensure(verdicts.len() == 5, || {
            format!("{}: {} verdicts", fx.name, verdicts.len())
        })?;
        for v in &verdicts {
            ensure(v.holds, || format!("{}: {v}", fx.name))?;
        }
    }
    for fx in [fixtures::meet(), fixtures::z2()] {
        let (m, s) = parts(&fx);
        let verdicts = check_all(m, s, None, LIMIT).map_err(|e| e.to_string())?;
        for v in &verdicts {
            if matches!(v.condition, Condition::A | Condition::D | Condition::E) {
                ensure(!v.holds, || format!("{}: {v}", fx.name))?;
            }
        }
        let b = verdicts
            .iter()
            .find(|v| v.condition == Condition::B)
            .expect("condition b");
        ensure(!b.holds, || format!("{}: {b}", fx.name))?;
        let count = enumerate_identity_magmas(m, true, Some(s), LIMIT)
            .map_err(|e| e.to_string())?
            .len();
        ensure(count == 0, || {
            format!("{}: {count} commutative monoids on the identity", fx.name)
        })?;
    }
    Ok(())
}

fn is_first_component_witness(a: &FinSetObj, b: &FinSetObj) -> Outcome {
    let w = check_diagram2_egger(a, b).ok_or_else(|| format!("no witness on ({}, {})", a.len(), b.len()))?;
    match &w.element {
        EggerElem::Mid(x, _) => ensure(w.image == cocart::concrete::inl(x), || {
            format!("{} ↦ {}, expected its first component", w.element, w.image)
        }),
        other => Err(format!("witness {other} is not in the mid block")),
    }
}

fn egger_necessity() -> Outcome {
    for (m, n) in [(1, 1), (2, 2), (3, 2)] {
        is_first_component_witness(&FinSetObj::atoms("a", m), &FinSetObj::atoms("b", n))?;
    }
    let h = check_egger_hypotheses(PROBE_BOUND, LIMIT).map_err(|e| e.to_string())?;
    ensure(h.all_hold(), || format!("hypotheses fail: {h:?}"))
}

fn splitting_recovers_coproducts() -> Outcome {
    let (a, b) = (FinSetObj::atoms("a", 2), FinSetObj::atoms("b", 2));
    let cp = egger_synthesize_coproduct(&a, &b);
    ensure(cp.splits(), || {
        "section and retraction do not split the idempotent".into()
    })?;
    ensure(cp.summand.len() == 4, || {
        format!("summand has {} elements", cp.summand.len())
    })?;
    let ok = verify_egger_coproduct(&a, &b, &cp, PROBE_BOUND, LIMIT).map_err(|e| e.to_string())?;
    ensure(ok, || "coproduct oracle rejects the split cospan".into())
}

fn monoids_are_semigroups() -> Outcome {
    for n in 1..=3 {
        let c = monoid_semigroup_correspondence(n, LIMIT).map_err(|e| e.to_string())?;
        let independent = semigroup_count(n, LIMIT).map_err(|e| e.to_string())?;
        ensure(c.egger_monoids == independent, || {
            format!("n={n}: {} monoids vs {independent} semigroups", c.egger_monoids)
        })?;
    }
    Ok(())
}

fn bijection_round_trips() -> Outcome {
    for fx in cocartesian_fixtures() {
        let m = fx.magmal.as_ref().expect("tensor");
        let b = InitialityData::from_initial(m).ok_or_else(|| format!("{}: unit is not initial", fx.name))?;
        let p = coprojections_from_initial(m, &b);
        let b2 = initial_from_coprojections(m, &p).map_err(|e| e.to_string())?;
        ensure(b2 == b, || format!("{}: initiality does not round trip", fx.name))?;
        ensure(coprojections_from_initial(m, &b2) == p, || {
            format!("{}: coprojections do not round trip", fx.name)
        })?;
    }
    Ok(())
}

fn unique_associator_and_braiding() -> Outcome {
    for fx in cocartesian_fixtures() {
        let m = fx.magmal.as_ref().expect("tensor");
        let alpha = unique_associator(m, LIMIT).map_err(|e| e.to_string())?;
        let sigma = unique_braiding(m, LIMIT).map_err(|e| e.to_string())?;
        ensure(alpha.candidates == 1, || {
            format!("{}: {} associator candidates", fx.name, alpha.candidates)
        })?;
        ensure(sigma.candidates == 1, || {
            format!("{}: {} braiding candidates", fx.name, sigma.candidates)
        })?;
        let s = SymmetricStructure {
            alpha: alpha.components,
            sigma: sigma.components,
        };
        let report = validate_symmetric(m, &s);
        ensure(report.is_ok(), || format!("{}: {report}", fx.name))?;
    }
    Ok(())
}

fn adjoint_route() -> Outcome {
    for fx in cocartesian_fixtures() {
        let m = fx.magmal.as_ref().expect("tensor");
        let ad = find_right_adjoint_to_tensor(m, LIMIT)
            .map_err(|e| e.to_string())?
            .ok_or_else(|| format!("{}: no right adjoint", fx.name))?;
        let g = derived_magma_from_adjoint(m, &ad).map_err(|e| e.to_string())?;
        let i = m.unit_obj();
        ensure(g.eta[i.idx()] == m.cat.id(i), || {
            format!("{}: η_I is not the identity", fx.name)
        })?;
        if fx.name == "join" {
            let canonical = canonical_magma_from_coproducts(m, LIMIT).map_err(|e| e.to_string())?;
            ensure(g == canonical, || "join: adjoint and coproduct magmas differ".into())?;
        }
    }
    let z2 = fixtures::z2();
    let found = find_right_adjoint_to_tensor(z2.magmal.as_ref().expect("tensor"), LIMIT).map_err(|e| e.to_string())?;
    ensure(found.is_none(), || "z2: unexpected right adjoint".into())
}

fn karoubi_splits() -> Outcome {
    let kar = karoubi_envelope(&fixtures::walking_idempotent().cat);
    let (no, nm) = (kar.category.n_objects(), kar.category.n_morphisms());
    ensure(no == 2 && nm == 5, || {
        format!("kar(walking idempotent) has {no} objects, {nm} morphisms")
    })?;
    for fx in [
        fixtures::terminal(),
        fixtures::join(),
        fixtures::z2(),
        fixtures::walking_idempotent(),
        fixtures::double_unit(),
    ] {
        let kar = karoubi_envelope(&fx.cat);
        let report = kar.category.validate();
        ensure(report.is_ok(), || format!("kar({}): {report}", fx.name))?;
        let unsplit = unsplit_idempotents(&kar.category);
        ensure(unsplit.is_empty(), || {
            format!("kar({}): {} idempotents do not split", fx.name, unsplit.len())
        })?;
    }
    Ok(())
}

fn retraction_lemma_on(c: &FinCat, name: &str) -> Outcome {
    for e in c.idempotents() {
        let check = check_retraction_lemma(c, &Idempotent::new(c, e).map_err(|e| e.to_string())?);
        ensure(check.consistent(), || {
            format!("{name}: `{}` breaks the lemma", c.mor_name(e))
        })?;
    }
    Ok(())
}

fn retraction_lemma() -> Outcome {
    for fx in fixtures::all() {
        retraction_lemma_on(&fx.cat, fx.name)?;
    }
    Ok(())
}

/// Name, time budget in seconds, check.
type Criterion = (&'static str, u64, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("five conditions agree on the fixtures", 10, five_conditions),
        ("left band fails only the coproduct diagram", 30, egger_necessity),
        (
            "splitting recovers the coproduct A + B",
            30,
            splitting_recovers_coproducts,
        ),
        ("monoids for A + A×B + B are semigroups", 60, monoids_are_semigroups),
        ("initiality and coprojections round trip", 10, bijection_round_trips),
        ("unique associator and braiding", 10, unique_associator_and_braiding),
        ("right adjoint to the tensor", 10, adjoint_route),
        ("idempotents split in the Karoubi envelope", 10, karoubi_splits),
        (
            "an idempotent has a retraction iff it is the identity",
            10,
            retraction_lemma,
        ),
    ];
    let mut failed = 0;
    for (k, (name, seconds, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            ensure(elapsed <= Duration::from_secs(*seconds), || {
                format!("took {elapsed:.2?}, limit {seconds}s")
            })
        });
        match outcome {
            Ok(()) => println!("PASS {}: {name} ({elapsed:.2?})", k + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL {}: {name}: {msg}", k + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} of {} criteria failed", criteria.len());
        ExitCode::FAILURE
    }
}
