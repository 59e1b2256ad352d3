//! Deciding whether a magmal structure is cocartesian, five ways, and the
//! constructions that pass between the five descriptions.

pub mod adjoint;
pub mod conditions;
pub mod coproducts;
pub mod initiality;

use std::fmt;

use serde::Serialize;

use crate::category::{FinCat, Mor, Obj};
use crate::error::{Result, SearchLimit};
use crate::magmal::{
    enumerate_identity_magmas, is_associative, is_commutative, validate_identity_magma, validate_symmetric,
    IdentityMagma, MagmalCategory, SymmetricStructure,
};

pub use adjoint::{
    couniversal_at, derived_magma_from_adjoint, find_right_adjoint_to_tensor, has_finite_biproducts,
    verify_biproduct_corollary, AdjointData, BiproductCheck,
};
pub use conditions::{
    agreement, check_all, check_condition_a, check_condition_b, check_condition_c, check_condition_d,
    check_condition_e, degenerate_verdicts,
};
pub use coproducts::{
    canonical_magma_from_coproducts, check_symmetry_implies_quasi, cocartesian_symmetry, coproduct_idempotent,
    mediating_morphism, synthesize_coproduct, unique_associator, unique_braiding, unitors_invertible_from_cocartesian,
    UniqueComponents,
};
pub use initiality::{
    coprojections_from_initial, eta_i_initiality, initial_from_coprojections, Coprojections, EtaInitiality,
    InitialityData,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Condition {
    /// Initial unit and canonical coproducts.
    A,
    /// Unique commutative monoid on the identity.
    B,
    /// Unital magma on the identity compatible with the symmetry.
    C,
    /// Unital magma on the identity whose coproduct idempotents are trivial.
    D,
    /// Right adjoint to the tensor, invertible unitors.
    E,
}

impl Condition {
    pub const ALL: [Condition; 5] = [Condition::A, Condition::B, Condition::C, Condition::D, Condition::E];
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Condition::A => "a",
            Condition::B => "b",
            Condition::C => "c",
            Condition::D => "d",
            Condition::E => "e",
        };
        f.write_str(s)
    }
}

/// Evidence for a verdict, expressed by object and morphism names so it
/// can be printed, serialized and replayed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    NoUnitObject,
    UnitNotInitial {
        unit: String,
        object: String,
        arrows: usize,
    },
    NotCoproduct {
        a: String,
        b: String,
        left: String,
        right: String,
        target: String,
        probe_left: String,
        probe_right: String,
        mediators: usize,
    },
    Cocartesian {
        unit: String,
        pairs: usize,
    },
    MagmaCount {
        count: usize,
    },
    UniqueMagma {
        eta: Vec<String>,
        mu: Vec<String>,
    },
    NoMagma,
    DiagramFailure {
        a: String,
        b: String,
        left: String,
        right: String,
        eta: Vec<String>,
        mu: Vec<String>,
    },
    Magma {
        eta: Vec<String>,
        mu: Vec<String>,
    },
    NotUnital {
        morphism: String,
    },
    SymmetryInvalid {
        report: String,
    },
    NoRightAdjoint {
        object: String,
    },
    Adjoint {
        left: Vec<String>,
        right: Vec<String>,
        epsilon: Vec<String>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub condition: Condition,
    pub holds: bool,
    pub reason: String,
    pub witness: Witness,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word = if self.holds { "holds" } else { "fails" };
        write!(f, "({}) {}: {}", self.condition, word, self.reason)
    }
}

fn mor(c: &FinCat, name: &str) -> Option<Mor> {
    c.morphism(name)
}

fn obj(c: &FinCat, name: &str) -> Option<Obj> {
    c.object(name)
}

fn family(c: &FinCat, eta: &[String], mu: &[String]) -> Option<IdentityMagma> {
    Some(IdentityMagma {
        eta: eta.iter().map(|n| mor(c, n)).collect::<Option<_>>()?,
        mu: mu.iter().map(|n| mor(c, n)).collect::<Option<_>>()?,
    })
}

/// Re-checks a verdict's witness directly against the oracles and the
/// law checkers. `Ok(true)` when the witness supports the verdict.
pub fn replay(v: &Verdict, m: &MagmalCategory, s: Option<&SymmetricStructure>, limit: SearchLimit) -> Result<bool> {
    let c = &m.cat;
    Ok(match &v.witness {
        Witness::NoUnitObject => !v.holds && c.n_objects() == 0,
        Witness::UnitNotInitial { unit, object, arrows } => {
            let (Some(i), Some(x)) = (obj(c, unit), obj(c, object)) else {
                return Ok(false);
            };
            !v.holds && i == m.unit_obj() && c.hom(i, x).len() == *arrows && *arrows != 1
        }
        Witness::NotCoproduct {
            a,
            b,
            left,
            right,
            target,
            probe_left,
            probe_right,
            mediators,
        } => {
            let resolved = (
                obj(c, a),
                obj(c, b),
                mor(c, left),
                mor(c, right),
                obj(c, target),
                mor(c, probe_left),
                mor(c, probe_right),
            );
            let (Some(a), Some(b), Some(l), Some(r), Some(x), Some(pl), Some(pr)) = resolved else {
                return Ok(false);
            };
            let Some(bracket) = InitialityData::from_initial(m) else {
                return Ok(false);
            };
            let cospan = coprojections_from_initial(m, &bracket).cospan(m, a, b);
            let count = c
                .hom(cospan.apex, x)
                .iter()
                .filter(|&&k| c.compose(k, l) == pl && c.compose(k, r) == pr)
                .count();
            !v.holds && cospan.left == l && cospan.right == r && count == *mediators && count != 1
        }
        Witness::Cocartesian { .. } => v.holds && check_condition_a(m).holds,
        Witness::MagmaCount { count } => {
            let Some(s) = s else { return Ok(false) };
            let found = enumerate_identity_magmas(m, true, Some(s), limit)?;
            !v.holds && found.len() == *count && *count != 1
        }
        Witness::UniqueMagma { eta, mu } => {
            let (Some(s), Some(g)) = (s, family(c, eta, mu)) else {
                return Ok(false);
            };
            let monoid = c
                .objects()
                .all(|a| is_associative(m, s, &g.at(a)) && is_commutative(m, s, &g.at(a)));
            v.holds
                && validate_identity_magma(m, &g).is_ok()
                && monoid
                && enumerate_identity_magmas(m, true, Some(s), limit)? == [g]
        }
        Witness::NoMagma => !v.holds && enumerate_identity_magmas(m, false, None, limit)?.is_empty(),
        Witness::DiagramFailure {
            a,
            b,
            left,
            right,
            eta,
            mu,
        } => {
            let (Some(a), Some(b), Some(l), Some(r), Some(g)) =
                (obj(c, a), obj(c, b), mor(c, left), mor(c, right), family(c, eta, mu))
            else {
                return Ok(false);
            };
            if v.holds || l == r || !validate_identity_magma(m, &g).is_ok() {
                return Ok(false);
            }
            match v.condition {
                Condition::C => {
                    let Some(s) = s else { return Ok(false) };
                    coproducts::symmetry_diagram(m, s, &g, a, b)? == (l, r)
                }
                Condition::D => {
                    crate::magmal::quasi_symmetry_composite(m, &g, &a, &b) == l && r == c.id(m.tensor_obj(a, b))
                }
                _ => false,
            }
        }
        Witness::Magma { eta, mu } => {
            let Some(g) = family(c, eta, mu) else { return Ok(false) };
            if !v.holds || !validate_identity_magma(m, &g).is_ok() {
                return Ok(false);
            }
            match v.condition {
                Condition::C => {
                    let Some(s) = s else { return Ok(false) };
                    conditions::symmetry_failure(m, s, &g)?.is_none()
                }
                Condition::D => conditions::quasi_symmetry_failure(m, &g).is_none(),
                _ => false,
            }
        }
        Witness::NotUnital { morphism } => {
            let Some(f) = mor(c, morphism) else { return Ok(false) };
            let is_unitor = c.objects().any(|a| m.lambda_at(a) == f || m.rho_at(a) == f);
            !v.holds && is_unitor && !c.is_iso(f)
        }
        Witness::SymmetryInvalid { .. } => {
            let Some(s) = s else { return Ok(false) };
            !v.holds && !validate_symmetric(m, s).is_ok()
        }
        Witness::NoRightAdjoint { object } => {
            let Some(a) = obj(c, object) else { return Ok(false) };
            !v.holds && couniversal_at(m, a).is_none()
        }
        Witness::Adjoint { left, right, epsilon } => {
            if !v.holds || left.len() != c.n_objects() || right.len() != c.n_objects() || epsilon.len() != c.n_objects()
            {
                return Ok(false);
            }
            c.objects().all(|a| {
                let k = a.idx();
                match (obj(c, &left[k]), obj(c, &right[k]), mor(c, &epsilon[k])) {
                    (Some(l), Some(r), Some(e)) => {
                        c.dom(e) == m.tensor_obj(l, r) && c.cod(e) == a && adjoint::is_couniversal(m, a, l, r, e)
                    }
                    _ => false,
                }
            })
        }
    })
}
