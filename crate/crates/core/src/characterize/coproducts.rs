//! Coproducts from unital magmas, and the structure a cocartesian tensor
//! carries uniquely.

use crate::category::{Mor, Obj};
use crate::error::{Error, Result, SearchLimit};
use crate::functor::{natural_transformations_between, NatTrans};
use crate::magmal::{
    associator_functors, braiding_functors, copairing, enumerate_identity_magmas, is_associative, is_commutative,
    left_coprojection, middle_interchange, quasi_symmetry_composite, right_coprojection, validate_associator,
    validate_identity_magma, validate_symmetric, IdentityMagma, MagmalCategory, SymmetricStructure,
};
use crate::splitting::{split_idempotent, Idempotent};
use crate::universal::{copair, is_coproduct, Cospan};

use super::conditions::check_condition_a;
use super::initiality::{coprojections_from_initial, eta_i_initiality, Coprojections, InitialityData};

/// `[a, b] = μ_X . (a ⊗ b)`.
pub fn mediating_morphism(m: &MagmalCategory, g: &IdentityMagma, a: Mor, b: Mor) -> Mor {
    copairing(m, g, &a, &b)
}

/// The endomorphism `μ_{A⊗B} . ((A ⊗ η_B) ⊗ (η_A ⊗ B)) . (ρ_A ⊗ λ_B)`,
/// checked to be idempotent.
pub fn coproduct_idempotent(m: &MagmalCategory, g: &IdentityMagma, a: Obj, b: Obj) -> Result<Idempotent> {
    let init = eta_i_initiality(m, g);
    if !init.agree() {
        return Err(Error::InvariantViolated(format!(
            "the unit is not initial under this magma (η_I = `{}`)",
            m.cat.mor_name(init.eta_i)
        )));
    }
    let e = quasi_symmetry_composite(m, g, &a, &b);
    Idempotent::new(&m.cat, e)
}

/// Splits the coproduct idempotent on `A ⊗ B` and returns the split
/// coprojections, checked against the coproduct oracle. `Ok(None)` when
/// the idempotent has no splitting.
pub fn synthesize_coproduct(m: &MagmalCategory, g: &IdentityMagma, a: Obj, b: Obj) -> Result<Option<Cospan>> {
    let c = &m.cat;
    let e = coproduct_idempotent(m, g, a, b)?;
    let Some(sp) = split_idempotent(c, &e) else {
        return Ok(None);
    };
    let cospan = Cospan {
        apex: sp.summand,
        left: c.compose(sp.retraction, left_coprojection(m, g, &a, &b)),
        right: c.compose(sp.retraction, right_coprojection(m, g, &a, &b)),
    };
    if !is_coproduct(c, &cospan) {
        return Err(Error::InvariantViolated(format!(
            "split cospan on `{}` is not a coproduct of `{}` and `{}`",
            c.obj_name(sp.summand),
            c.obj_name(a),
            c.obj_name(b)
        )));
    }
    Ok(Some(cospan))
}

/// The initiality data and coprojections of a cocartesian structure, or
/// an error naming why the structure is not cocartesian.
pub fn cocartesian_data(m: &MagmalCategory) -> Result<(InitialityData, Coprojections)> {
    let verdict = check_condition_a(m);
    if !verdict.holds {
        return Err(Error::InvariantViolated(format!(
            "the structure is not cocartesian: {}",
            verdict.reason
        )));
    }
    let b = InitialityData::from_initial(m).expect("condition (a) includes initiality");
    let p = coprojections_from_initial(m, &b);
    Ok((b, p))
}

fn mediate(m: &MagmalCategory, p: &Coprojections, a: Obj, b: Obj, x: Mor, y: Mor) -> Mor {
    copair(&m.cat, &p.cospan(m, a, b), x, y).expect("canonical cospans are coproducts")
}

/// The inverses `[[]_A, 1_A]` of `λ_A` and `[1_A, []_A]` of `ρ_A`, checked
/// on both sides.
pub fn unitors_invertible_from_cocartesian(m: &MagmalCategory) -> Result<bool> {
    let (b, p) = cocartesian_data(m)?;
    let c = &m.cat;
    let i = m.unit_obj();
    for a in c.objects() {
        let l_inv = mediate(m, &p, i, a, b.at(a), c.id(a));
        let r_inv = mediate(m, &p, a, i, c.id(a), b.at(a));
        let ok = c.compose(l_inv, m.lambda_at(a)) == c.id(a)
            && c.compose(m.lambda_at(a), l_inv) == c.id(m.tensor_obj(i, a))
            && c.compose(r_inv, m.rho_at(a)) == c.id(a)
            && c.compose(m.rho_at(a), r_inv) == c.id(m.tensor_obj(a, i));
        if !ok {
            return Err(Error::InvariantViolated(format!(
                "the mediated inverses of the unitors at `{}` are not two-sided",
                c.obj_name(a)
            )));
        }
    }
    Ok(true)
}

/// Components built from the coproduct structure together with the number
/// of natural transformations of the same type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniqueComponents {
    pub components: Vec<Mor>,
    pub candidates: usize,
}

/// `α = [[ι_A, ι_B], ι_C]` into `A ⊗ (B ⊗ C)`, checked for pentagon and
/// triangle; `candidates` counts every natural `(A⊗B)⊗C ⇒ A⊗(B⊗C)`.
pub fn unique_associator(m: &MagmalCategory, limit: SearchLimit) -> Result<UniqueComponents> {
    let (_, p) = cocartesian_data(m)?;
    let c = &m.cat;
    let t = |a, b| m.tensor_obj(a, b);
    let mut alpha = Vec::new();
    for a in c.objects() {
        for b in c.objects() {
            for d in c.objects() {
                let into_a = p.pi1(m, a, t(b, d));
                let into_b = c.compose(p.pi2(m, a, t(b, d)), p.pi1(m, b, d));
                let into_d = c.compose(p.pi2(m, a, t(b, d)), p.pi2(m, b, d));
                let inner = mediate(m, &p, a, b, into_a, into_b);
                alpha.push(mediate(m, &p, t(a, b), d, inner, into_d));
            }
        }
    }
    let report = validate_associator(m, &alpha);
    if !report.is_ok() {
        return Err(Error::InvariantViolated(format!("mediated associator fails: {report}")));
    }
    let (ccc, left, right) = associator_functors(m);
    let all = natural_transformations_between(&ccc, c, &left, &right, limit)?;
    debug_assert!(all.contains(&NatTrans {
        components: alpha.clone()
    }));
    Ok(UniqueComponents {
        components: alpha,
        candidates: all.len(),
    })
}

/// `σ = [π2, π1] : A ⊗ B -> B ⊗ A`, checked against the associator for
/// both hexagons and `σ² = 1`; `candidates` counts every natural
/// `A ⊗ B ⇒ B ⊗ A`.
pub fn unique_braiding(m: &MagmalCategory, limit: SearchLimit) -> Result<UniqueComponents> {
    let (_, p) = cocartesian_data(m)?;
    let c = &m.cat;
    let mut sigma = Vec::new();
    for a in c.objects() {
        for b in c.objects() {
            sigma.push(mediate(m, &p, a, b, p.pi2(m, b, a), p.pi1(m, b, a)));
        }
    }
    let alpha = unique_associator(m, limit)?;
    let s = SymmetricStructure {
        alpha: alpha.components,
        sigma: sigma.clone(),
    };
    let report = validate_symmetric(m, &s);
    if !report.is_ok() {
        return Err(Error::InvariantViolated(format!("mediated braiding fails: {report}")));
    }
    let (cc, tensor, swapped) = braiding_functors(m);
    let all = natural_transformations_between(&cc, c, &tensor, &swapped, limit)?;
    Ok(UniqueComponents {
        components: sigma,
        candidates: all.len(),
    })
}

/// The symmetric monoidal structure carried by a cocartesian tensor.
pub fn cocartesian_symmetry(m: &MagmalCategory, limit: SearchLimit) -> Result<SymmetricStructure> {
    let alpha = unique_associator(m, limit)?;
    let sigma = unique_braiding(m, limit)?;
    Ok(SymmetricStructure {
        alpha: alpha.components,
        sigma: sigma.components,
    })
}

/// `η_A = []_A` and `μ_A = [1_A, 1_A]`; checked to be associative and
/// commutative and to be the only unital magma on the identity.
pub fn canonical_magma_from_coproducts(m: &MagmalCategory, limit: SearchLimit) -> Result<IdentityMagma> {
    let (b, p) = cocartesian_data(m)?;
    let c = &m.cat;
    let g = IdentityMagma {
        eta: b.bracket.clone(),
        mu: c.objects().map(|a| mediate(m, &p, a, a, c.id(a), c.id(a))).collect(),
    };
    let report = validate_identity_magma(m, &g);
    if !report.is_ok() {
        return Err(Error::InvariantViolated(format!("codiagonal magma fails: {report}")));
    }
    let s = cocartesian_symmetry(m, limit)?;
    for a in c.objects() {
        if !is_associative(m, &s, &g.at(a)) || !is_commutative(m, &s, &g.at(a)) {
            return Err(Error::InvariantViolated(format!(
                "codiagonal on `{}` is not a commutative monoid",
                c.obj_name(a)
            )));
        }
    }
    let all = enumerate_identity_magmas(m, false, None, limit)?;
    if all != [g.clone()] {
        return Err(Error::InvariantViolated(format!(
            "expected the codiagonal to be the only unital magma, found {}",
            all.len()
        )));
    }
    Ok(g)
}

/// `μ_{A⊗B} . (A ⊗ σ_{A,B} ⊗ B)` and `μ_A ⊗ μ_B`, which must agree.
pub fn symmetry_diagram(
    m: &MagmalCategory,
    s: &SymmetricStructure,
    g: &IdentityMagma,
    a: Obj,
    b: Obj,
) -> Result<(Mor, Mor)> {
    let c = &m.cat;
    let shuffle = middle_interchange(m, s, a, a, b, b)?;
    let lhs = c.compose(g.mu[m.tensor_obj(a, b).idx()], shuffle);
    let rhs = m.tensor_mor(g.mu[a.idx()], g.mu[b.idx()]);
    Ok((lhs, rhs))
}

/// Instance-wise check that wherever the symmetry diagram commutes at
/// `(A, B)`, the coproduct idempotent at `(A, B)` is the identity.
pub fn check_symmetry_implies_quasi(m: &MagmalCategory, s: &SymmetricStructure, g: &IdentityMagma) -> Result<bool> {
    let c = &m.cat;
    for a in c.objects() {
        for b in c.objects() {
            let (lhs, rhs) = symmetry_diagram(m, s, g, a, b)?;
            if lhs == rhs && quasi_symmetry_composite(m, g, &a, &b) != c.id(m.tensor_obj(a, b)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    const LIMIT: SearchLimit = SearchLimit::DEFAULT;

    fn cocartesian() -> Vec<fixtures::Fixture> {
        vec![fixtures::terminal(), fixtures::join(), fixtures::double_unit()]
    }

    #[test]
    fn mediating_morphisms_satisfy_coprojection_laws() {
        for fx in cocartesian() {
            let (m, g) = (fx.magmal.unwrap(), fx.magma.unwrap());
            let c = &m.cat;
            for a in c.objects() {
                for b in c.objects() {
                    for x in c.objects() {
                        for &f in c.hom(a, x) {
                            for &h in c.hom(b, x) {
                                let med = mediating_morphism(&m, &g, f, h);
                                assert_eq!(c.compose(med, left_coprojection(&m, &g, &a, &b)), f);
                                assert_eq!(c.compose(med, right_coprojection(&m, &g, &a, &b)), h);
                            }
                        }
                    }
                }
            }
        }
        let fx = fixtures::join();
        let (m, g) = (fx.magmal.unwrap(), fx.magma.unwrap());
        let u = m.cat.morphism("u").unwrap();
        assert_eq!(mediating_morphism(&m, &g, u, m.cat.id(Obj(1))), m.cat.id(Obj(1)));
    }

    #[test]
    fn coproduct_idempotents_and_synthesis() {
        let fx = fixtures::join();
        let (m, g) = (fx.magmal.unwrap(), fx.magma.unwrap());
        let e = coproduct_idempotent(&m, &g, Obj(0), Obj(1)).unwrap();
        assert_eq!(e.e, m.cat.id(Obj(1)));
        let cospan = synthesize_coproduct(&m, &g, Obj(0), Obj(1)).unwrap().unwrap();
        assert_eq!(
            cospan,
            Cospan {
                apex: Obj(1),
                left: m.cat.morphism("u").unwrap(),
                right: m.cat.id(Obj(1))
            }
        );

        let t = fixtures::terminal();
        let (tm, tg) = (t.magmal.unwrap(), t.magma.unwrap());
        assert_eq!(
            coproduct_idempotent(&tm, &tg, Obj(0), Obj(0)).unwrap().e,
            tm.cat.id(Obj(0))
        );
    }

    #[test]
    fn unsplittable_idempotent_synthesizes_nothing() {
        // a strict one-object structure whose tensor is composition: the
        // only unital magmas would need η = e, so build the idempotent
        // directly and confirm it has no splitting
        let fx = fixtures::walking_idempotent_tensor();
        let m = fx.magmal.unwrap();
        assert!(enumerate_identity_magmas(&m, false, None, LIMIT).unwrap().is_empty());
        let e = Idempotent::new(&m.cat, m.cat.morphism("e").unwrap()).unwrap();
        assert!(split_idempotent(&m.cat, &e).is_none());
    }

    #[test]
    fn unitors_are_invertible() {
        for fx in cocartesian() {
            assert!(unitors_invertible_from_cocartesian(&fx.magmal.unwrap()).unwrap());
        }
        assert!(unitors_invertible_from_cocartesian(&fixtures::meet().magmal.unwrap()).is_err());
    }

    #[test]
    fn associator_and_braiding_are_unique() {
        for fx in cocartesian() {
            let m = fx.magmal.unwrap();
            let a = unique_associator(&m, LIMIT).unwrap();
            let s = unique_braiding(&m, LIMIT).unwrap();
            assert_eq!(a.candidates, 1, "{}", fx.name);
            assert_eq!(s.candidates, 1, "{}", fx.name);
        }
        let m = fixtures::join().magmal.unwrap();
        let s = unique_braiding(&m, LIMIT).unwrap();
        assert!(m
            .cat
            .objects()
            .all(|a| s.components[a.idx() * 2 + a.idx()] == m.cat.id(a)));
    }

    #[test]
    fn canonical_magmas() {
        for fx in cocartesian() {
            let m = fx.magmal.as_ref().unwrap();
            let g = canonical_magma_from_coproducts(m, LIMIT).unwrap();
            assert_eq!(&g, fx.magma.as_ref().unwrap(), "{}", fx.name);
        }
    }

    #[test]
    fn symmetry_implies_quasi_symmetry() {
        for fx in cocartesian() {
            let (m, s, g) = (fx.magmal.unwrap(), fx.symmetry.unwrap(), fx.magma.unwrap());
            assert!(check_symmetry_implies_quasi(&m, &s, &g).unwrap(), "{}", fx.name);
        }
    }

    #[test]
    fn idempotent_identity_iff_diagram_holds() {
        for fx in cocartesian() {
            let (m, g) = (fx.magmal.unwrap(), fx.magma.unwrap());
            let c = &m.cat;
            let all_identity = c.objects().all(|a| {
                c.objects()
                    .all(|b| c.is_identity(coproduct_idempotent(&m, &g, a, b).unwrap().e))
            });
            let verdict = super::super::conditions::check_condition_d(&m, Some(&g), LIMIT).unwrap();
            assert_eq!(all_identity, verdict.holds);
        }
    }
}
