//! Verdicts for the five equivalent conditions.

use crate::category::{FinCat, Mor, Obj};
use crate::error::{Error, Result, SearchLimit};
use crate::magmal::{
    enumerate_identity_magmas, quasi_symmetry_composite, validate_identity_magma, validate_symmetric, IdentityMagma,
    MagmalCategory, SymmetricStructure,
};
use crate::universal::coproduct_failure;

use super::adjoint::{find_right_adjoint_to_tensor, first_missing_couniversal};
use super::coproducts::symmetry_diagram;
use super::initiality::{coprojections_from_initial, InitialityData};
use super::{Condition, Verdict, Witness};

pub(crate) fn names(c: &FinCat, ms: &[Mor]) -> Vec<String> {
    ms.iter().map(|&f| c.mor_name(f).to_owned()).collect()
}

fn first_non_initial_target(c: &FinCat, i: Obj) -> Option<(Obj, usize)> {
    c.objects().map(|x| (x, c.hom(i, x).len())).find(|&(_, n)| n != 1)
}

/// The unit is initial and every canonical cospan `A -> A ⊗ B <- B` is a
/// coproduct.
pub fn check_condition_a(m: &MagmalCategory) -> Verdict {
    let c = &m.cat;
    let i = m.unit_obj();
    if let Some((x, n)) = first_non_initial_target(c, i) {
        return Verdict {
            condition: Condition::A,
            holds: false,
            reason: format!(
                "unit `{}` is not initial: {} arrows to `{}`",
                c.obj_name(i),
                n,
                c.obj_name(x)
            ),
            witness: Witness::UnitNotInitial {
                unit: c.obj_name(i).into(),
                object: c.obj_name(x).into(),
                arrows: n,
            },
        };
    }
    let b = InitialityData::from_initial(m).expect("unit checked initial");
    let p = coprojections_from_initial(m, &b);
    for a in c.objects() {
        for bb in c.objects() {
            let cospan = p.cospan(m, a, bb);
            if let Some(fail) = coproduct_failure(c, &cospan) {
                return Verdict {
                    condition: Condition::A,
                    holds: false,
                    reason: format!(
                        "`{}` ⊗ `{}` is not a coproduct: ({}, {}) into `{}` has {} mediators",
                        c.obj_name(a),
                        c.obj_name(bb),
                        c.mor_name(fail.a),
                        c.mor_name(fail.b),
                        c.obj_name(fail.target),
                        fail.mediators
                    ),
                    witness: Witness::NotCoproduct {
                        a: c.obj_name(a).into(),
                        b: c.obj_name(bb).into(),
                        left: c.mor_name(cospan.left).into(),
                        right: c.mor_name(cospan.right).into(),
                        target: c.obj_name(fail.target).into(),
                        probe_left: c.mor_name(fail.a).into(),
                        probe_right: c.mor_name(fail.b).into(),
                        mediators: fail.mediators,
                    },
                };
            }
        }
    }
    Verdict {
        condition: Condition::A,
        holds: true,
        reason: "unit is initial and every canonical cospan is a coproduct".into(),
        witness: Witness::Cocartesian {
            unit: c.obj_name(i).into(),
            pairs: c.n_objects() * c.n_objects(),
        },
    }
}

fn non_unital_witness(m: &MagmalCategory) -> Option<Mor> {
    let c = &m.cat;
    c.objects()
        .flat_map(|a| [m.lambda_at(a), m.rho_at(a)])
        .find(|&f| !c.is_iso(f))
}

/// Common hypotheses of (b) and (c): a valid symmetry and invertible unitors.
fn symmetric_monoidal_failure(m: &MagmalCategory, s: &SymmetricStructure, condition: Condition) -> Option<Verdict> {
    let c = &m.cat;
    if let Some(f) = non_unital_witness(m) {
        return Some(Verdict {
            condition,
            holds: false,
            reason: format!(
                "not symmetric monoidal: unitor component `{}` is not invertible",
                c.mor_name(f)
            ),
            witness: Witness::NotUnital {
                morphism: c.mor_name(f).into(),
            },
        });
    }
    let report = validate_symmetric(m, s);
    if !report.is_ok() {
        return Some(Verdict {
            condition,
            holds: false,
            reason: "the supplied associator and braiding are not a symmetric monoidal structure".into(),
            witness: Witness::SymmetryInvalid {
                report: report.to_string(),
            },
        });
    }
    None
}

/// Exactly one commutative monoid structure on the identity functor.
pub fn check_condition_b(m: &MagmalCategory, s: &SymmetricStructure, limit: SearchLimit) -> Result<Verdict> {
    if let Some(v) = symmetric_monoidal_failure(m, s, Condition::B) {
        return Ok(v);
    }
    let c = &m.cat;
    let found = enumerate_identity_magmas(m, true, Some(s), limit)?;
    Ok(match found.as_slice() {
        [g] => Verdict {
            condition: Condition::B,
            holds: true,
            reason: "exactly one commutative monoid structure on the identity".into(),
            witness: Witness::UniqueMagma {
                eta: names(c, &g.eta),
                mu: names(c, &g.mu),
            },
        },
        _ => Verdict {
            condition: Condition::B,
            holds: false,
            reason: format!(
                "{} commutative monoid structures on the identity, expected exactly 1",
                found.len()
            ),
            witness: Witness::MagmaCount { count: found.len() },
        },
    })
}

/// The supplied magma, validated, or every magma on the identity.
fn magmas_to_try(m: &MagmalCategory, g: Option<&IdentityMagma>, limit: SearchLimit) -> Result<Vec<IdentityMagma>> {
    match g {
        Some(g) => {
            let report = validate_identity_magma(m, g);
            if !report.is_ok() {
                return Err(Error::Law(report));
            }
            Ok(vec![g.clone()])
        }
        None => enumerate_identity_magmas(m, false, None, limit),
    }
}

fn no_magma(condition: Condition) -> Verdict {
    Verdict {
        condition,
        holds: false,
        reason: "no unital magma structure on the identity".into(),
        witness: Witness::NoMagma,
    }
}

/// First `(A, B)` where the two sides differ.
type Failure = (Obj, Obj, Mor, Mor);

fn existential(
    m: &MagmalCategory,
    condition: Condition,
    magmas: Vec<IdentityMagma>,
    diagram: &str,
    mut failure: impl FnMut(&IdentityMagma) -> Result<Option<Failure>>,
) -> Result<Verdict> {
    let c = &m.cat;
    let mut first_failure = None;
    for g in &magmas {
        match failure(g)? {
            None => {
                return Ok(Verdict {
                    condition,
                    holds: true,
                    reason: format!("the {diagram} diagram commutes for every pair"),
                    witness: Witness::Magma {
                        eta: names(c, &g.eta),
                        mu: names(c, &g.mu),
                    },
                });
            }
            Some(f) if first_failure.is_none() => first_failure = Some((g.clone(), f)),
            Some(_) => {}
        }
    }
    let Some((g, (a, b, lhs, rhs))) = first_failure else {
        return Ok(no_magma(condition));
    };
    Ok(Verdict {
        condition,
        holds: false,
        reason: format!(
            "the {diagram} diagram fails at ({}, {}): `{}` vs `{}`",
            c.obj_name(a),
            c.obj_name(b),
            c.mor_name(lhs),
            c.mor_name(rhs)
        ),
        witness: Witness::DiagramFailure {
            a: c.obj_name(a).into(),
            b: c.obj_name(b).into(),
            left: c.mor_name(lhs).into(),
            right: c.mor_name(rhs).into(),
            eta: names(c, &g.eta),
            mu: names(c, &g.mu),
        },
    })
}

pub(crate) fn symmetry_failure(
    m: &MagmalCategory,
    s: &SymmetricStructure,
    g: &IdentityMagma,
) -> Result<Option<Failure>> {
    for a in m.cat.objects() {
        for b in m.cat.objects() {
            let (lhs, rhs) = symmetry_diagram(m, s, g, a, b)?;
            if lhs != rhs {
                return Ok(Some((a, b, lhs, rhs)));
            }
        }
    }
    Ok(None)
}

pub(crate) fn quasi_symmetry_failure(m: &MagmalCategory, g: &IdentityMagma) -> Option<Failure> {
    let c = &m.cat;
    for a in c.objects() {
        for b in c.objects() {
            let e = quasi_symmetry_composite(m, g, &a, &b);
            let id = c.id(m.tensor_obj(a, b));
            if e != id {
                return Some((a, b, e, id));
            }
        }
    }
    None
}

/// Symmetric monoidal, and some unital magma on the identity makes
/// `μ_{A⊗B} . (A ⊗ σ_{A,B} ⊗ B) = μ_A ⊗ μ_B` for every pair.
pub fn check_condition_c(
    m: &MagmalCategory,
    s: &SymmetricStructure,
    g: Option<&IdentityMagma>,
    limit: SearchLimit,
) -> Result<Verdict> {
    if let Some(v) = symmetric_monoidal_failure(m, s, Condition::C) {
        return Ok(v);
    }
    let magmas = magmas_to_try(m, g, limit)?;
    existential(m, Condition::C, magmas, "symmetry", |g| symmetry_failure(m, s, g))
}

/// Some unital magma on the identity makes the coproduct idempotent on
/// every `A ⊗ B` the identity.
pub fn check_condition_d(m: &MagmalCategory, g: Option<&IdentityMagma>, limit: SearchLimit) -> Result<Verdict> {
    let magmas = magmas_to_try(m, g, limit)?;
    existential(m, Condition::D, magmas, "quasi-symmetry", |g| {
        Ok(quasi_symmetry_failure(m, g))
    })
}

/// Invertible unitors and a right adjoint to the tensor.
pub fn check_condition_e(m: &MagmalCategory, limit: SearchLimit) -> Result<Verdict> {
    let c = &m.cat;
    if let Some(f) = non_unital_witness(m) {
        return Ok(Verdict {
            condition: Condition::E,
            holds: false,
            reason: format!("unitor component `{}` is not invertible", c.mor_name(f)),
            witness: Witness::NotUnital {
                morphism: c.mor_name(f).into(),
            },
        });
    }
    match find_right_adjoint_to_tensor(m, limit)? {
        Some(ad) => Ok(Verdict {
            condition: Condition::E,
            holds: true,
            reason: "the tensor has a right adjoint and the unitors are invertible".into(),
            witness: Witness::Adjoint {
                left: ad.left.on_objects.iter().map(|&o| c.obj_name(o).to_owned()).collect(),
                right: ad.right.on_objects.iter().map(|&o| c.obj_name(o).to_owned()).collect(),
                epsilon: names(c, &ad.epsilon),
            },
        }),
        None => {
            let a = first_missing_couniversal(m, limit)?.expect("search failed at some object");
            Ok(Verdict {
                condition: Condition::E,
                holds: false,
                reason: format!("no couniversal arrow from the tensor into `{}`", c.obj_name(a)),
                witness: Witness::NoRightAdjoint {
                    object: c.obj_name(a).into(),
                },
            })
        }
    }
}

/// Verdicts for every condition, in order.
pub fn check_all(
    m: &MagmalCategory,
    s: &SymmetricStructure,
    g: Option<&IdentityMagma>,
    limit: SearchLimit,
) -> Result<Vec<Verdict>> {
    Ok(vec![
        check_condition_a(m),
        check_condition_b(m, s, limit)?,
        check_condition_c(m, s, g, limit)?,
        check_condition_d(m, g, limit)?,
        check_condition_e(m, limit)?,
    ])
}

/// Whether all verdicts agree.
pub fn agreement(verdicts: &[Verdict]) -> bool {
    verdicts.windows(2).all(|w| w[0].holds == w[1].holds)
}

/// Verdicts for a category with no objects, which cannot carry a unit.
pub fn degenerate_verdicts() -> Vec<Verdict> {
    Condition::ALL
        .iter()
        .map(|&condition| Verdict {
            condition,
            holds: false,
            reason: "no unit object exists".into(),
            witness: Witness::NoUnitObject,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    const LIMIT: SearchLimit = SearchLimit::DEFAULT;

    fn verdicts(fx: &fixtures::Fixture) -> Vec<Verdict> {
        check_all(
            fx.magmal.as_ref().unwrap(),
            fx.symmetry.as_ref().unwrap(),
            fx.magma.as_ref(),
            LIMIT,
        )
        .unwrap()
    }

    #[test]
    fn cocartesian_fixtures_satisfy_everything() {
        for fx in [fixtures::terminal(), fixtures::join(), fixtures::double_unit()] {
            let vs = verdicts(&fx);
            assert!(vs.iter().all(|v| v.holds), "{}: {vs:#?}", fx.name);
        }
    }

    #[test]
    fn other_fixtures_satisfy_nothing() {
        for fx in [
            fixtures::meet(),
            fixtures::z2(),
            fixtures::walking_idempotent_tensor(),
            fixtures::colax_idempotent(),
        ] {
            let vs = verdicts(&fx);
            assert!(vs.iter().all(|v| !v.holds), "{}: {vs:#?}", fx.name);
        }
    }

    #[test]
    fn meet_reasons() {
        let fx = fixtures::meet();
        let m = fx.magmal.as_ref().unwrap();
        let a = check_condition_a(m);
        assert!(matches!(a.witness, Witness::UnitNotInitial { ref unit, .. } if unit == "1"));
        let b = check_condition_b(m, fx.symmetry.as_ref().unwrap(), LIMIT).unwrap();
        assert_eq!(b.witness, Witness::MagmaCount { count: 0 });
        let d = check_condition_d(m, None, LIMIT).unwrap();
        assert_eq!(d.witness, Witness::NoMagma);
    }

    #[test]
    fn z2_has_no_adjoint_witness() {
        let m = fixtures::z2().magmal.unwrap();
        let e = check_condition_e(&m, LIMIT).unwrap();
        assert_eq!(e.witness, Witness::NoRightAdjoint { object: "*".into() });
    }

    #[test]
    fn invalid_supplied_magma_is_an_error() {
        let fx = fixtures::join();
        let m = fx.magmal.unwrap();
        let mut g = fx.magma.unwrap();
        g.mu[1] = m.cat.morphism("u").unwrap();
        assert!(matches!(check_condition_d(&m, Some(&g), LIMIT), Err(Error::Law(_))));
    }

    #[test]
    fn degenerate_category_reports_no_unit() {
        let vs = degenerate_verdicts();
        assert_eq!(vs.len(), 5);
        assert!(vs.iter().all(|v| !v.holds && v.witness == Witness::NoUnitObject));
    }
}
