//! Initiality of the unit and the coprojections it induces.

use crate::category::{Mor, Obj};
use crate::error::{Error, Result};
use crate::magmal::{IdentityMagma, MagmalCategory};
use crate::report::{Law, ValidationReport};
use crate::universal::{initial_arrow, is_initial, Cospan};

/// The arrows `[]_A : I -> A` exhibiting the unit as initial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InitialityData {
    pub bracket: Vec<Mor>,
}

impl InitialityData {
    /// The unique arrows out of the unit, if it is initial.
    pub fn from_initial(m: &MagmalCategory) -> Option<Self> {
        let c = &m.cat;
        let i = m.unit_obj();
        c.objects()
            .map(|a| initial_arrow(c, i, a))
            .collect::<Option<Vec<_>>>()
            .map(|bracket| InitialityData { bracket })
    }

    pub fn at(&self, a: Obj) -> Mor {
        self.bracket[a.idx()]
    }

    /// Typing, naturality `f . []_A = []_B`, and `[]_I = 1_I`.
    pub fn validate(&self, m: &MagmalCategory) -> ValidationReport {
        let c = &m.cat;
        let i = m.unit_obj();
        let mut report = ValidationReport::new();
        if self.bracket.len() != c.n_objects() {
            report.push(Law::MissingEntry, "bracket family does not cover every object");
            return report;
        }
        for a in c.objects() {
            let b = self.at(a);
            if c.dom(b) != i || c.cod(b) != a {
                report.push(
                    Law::Typing,
                    format!(
                        "[]_{} = `{}` is not typed I -> {}",
                        c.obj_name(a),
                        c.mor_name(b),
                        c.obj_name(a)
                    ),
                );
            }
        }
        if !report.is_ok() {
            return report;
        }
        for f in c.morphisms() {
            if c.compose(f, self.at(c.dom(f))) != self.at(c.cod(f)) {
                report.push(Law::Naturality, format!("[] is not natural at `{}`", c.mor_name(f)));
            }
        }
        if self.at(i) != c.id(i) {
            report.push(
                Law::UnitCoherence,
                format!("[]_I = `{}` is not the identity", c.mor_name(self.at(i))),
            );
        }
        report
    }
}

/// Coprojections `π1 : A -> A ⊗ B` and `π2 : B -> A ⊗ B`, indexed by
/// `a * n + b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coprojections {
    pub pi1: Vec<Mor>,
    pub pi2: Vec<Mor>,
}

impl Coprojections {
    pub fn pi1(&self, m: &MagmalCategory, a: Obj, b: Obj) -> Mor {
        self.pi1[a.idx() * m.cat.n_objects() + b.idx()]
    }

    pub fn pi2(&self, m: &MagmalCategory, a: Obj, b: Obj) -> Mor {
        self.pi2[a.idx() * m.cat.n_objects() + b.idx()]
    }

    pub fn cospan(&self, m: &MagmalCategory, a: Obj, b: Obj) -> Cospan {
        Cospan {
            apex: m.tensor_obj(a, b),
            left: self.pi1(m, a, b),
            right: self.pi2(m, a, b),
        }
    }

    /// Typing, naturality in both slots, `π2^{I,A} = λ_A` and `π1^{A,I} = ρ_A`.
    pub fn validate(&self, m: &MagmalCategory) -> ValidationReport {
        let c = &m.cat;
        let n = c.n_objects();
        let mut report = ValidationReport::new();
        if self.pi1.len() != n * n || self.pi2.len() != n * n {
            report.push(Law::MissingEntry, "coprojection tables do not cover every pair");
            return report;
        }
        for a in c.objects() {
            for b in c.objects() {
                let ab = m.tensor_obj(a, b);
                let (p1, p2) = (self.pi1(m, a, b), self.pi2(m, a, b));
                if c.dom(p1) != a || c.cod(p1) != ab || c.dom(p2) != b || c.cod(p2) != ab {
                    report.push(
                        Law::Typing,
                        format!(
                            "coprojections at ({},{}) have the wrong type",
                            c.obj_name(a),
                            c.obj_name(b)
                        ),
                    );
                }
            }
        }
        if !report.is_ok() {
            return report;
        }
        for f in c.morphisms() {
            let (a, a2) = (c.dom(f), c.cod(f));
            for b in c.objects() {
                // left slot
                if c.compose(self.pi1(m, a2, b), f) != c.compose(m.whisker_right(f, b), self.pi1(m, a, b)) {
                    report.push(
                        Law::Naturality,
                        format!("π1 is not natural in the first slot at `{}`", c.mor_name(f)),
                    );
                }
                if self.pi2(m, a2, b) != c.compose(m.whisker_right(f, b), self.pi2(m, a, b)) {
                    report.push(
                        Law::Naturality,
                        format!("π2 is not natural in the first slot at `{}`", c.mor_name(f)),
                    );
                }
                // right slot
                if self.pi1(m, b, a2) != c.compose(m.whisker_left(b, f), self.pi1(m, b, a)) {
                    report.push(
                        Law::Naturality,
                        format!("π1 is not natural in the second slot at `{}`", c.mor_name(f)),
                    );
                }
                if c.compose(self.pi2(m, b, a2), f) != c.compose(m.whisker_left(b, f), self.pi2(m, b, a)) {
                    report.push(
                        Law::Naturality,
                        format!("π2 is not natural in the second slot at `{}`", c.mor_name(f)),
                    );
                }
            }
        }
        let i = m.unit_obj();
        for a in c.objects() {
            if self.pi2(m, i, a) != m.lambda_at(a) {
                report.push(Law::UnitCoherence, format!("π2^(I,{}) differs from λ", c.obj_name(a)));
            }
            if self.pi1(m, a, i) != m.rho_at(a) {
                report.push(Law::UnitCoherence, format!("π1^({},I) differs from ρ", c.obj_name(a)));
            }
        }
        report
    }
}

/// `π1 = (A ⊗ []_B) . ρ_A` and `π2 = ([]_A ⊗ B) . λ_B`.
pub fn coprojections_from_initial(m: &MagmalCategory, b: &InitialityData) -> Coprojections {
    let c = &m.cat;
    let mut pi1 = Vec::new();
    let mut pi2 = Vec::new();
    for x in c.objects() {
        for y in c.objects() {
            pi1.push(c.compose(m.whisker_left(x, b.at(y)), m.rho_at(x)));
            pi2.push(c.compose(m.whisker_right(b.at(x), y), m.lambda_at(y)));
        }
    }
    Coprojections { pi1, pi2 }
}

/// `[]_A = λ_A⁻¹ . π1^{I,A}`; fails if some `λ_A` has no inverse or the
/// result is not the identity at the unit.
pub fn initial_from_coprojections(m: &MagmalCategory, p: &Coprojections) -> Result<InitialityData> {
    let c = &m.cat;
    let i = m.unit_obj();
    let mut bracket = Vec::new();
    for a in c.objects() {
        bracket.push(c.compose(m.lambda_inverse(a)?, p.pi1(m, i, a)));
    }
    if bracket[i.idx()] != c.id(i) {
        return Err(Error::InvariantViolated(format!(
            "[]_I = `{}` is not the identity; λ_I and ρ_I disagree or the coprojections are not natural",
            c.mor_name(bracket[i.idx()])
        )));
    }
    Ok(InitialityData { bracket })
}

/// What the unit component of a magma on the identity says about the unit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EtaInitiality {
    pub eta_i: Mor,
    pub idempotent: bool,
    /// `μ_I . λ_I`
    pub retraction: Mor,
    pub is_retraction: bool,
    pub eta_is_identity: bool,
    pub initial: bool,
}

impl EtaInitiality {
    /// The idempotent with a retraction is the identity, and the unit is initial.
    pub fn agree(&self) -> bool {
        self.idempotent && self.is_retraction && self.eta_is_identity && self.initial
    }
}

pub fn eta_i_initiality(m: &MagmalCategory, g: &IdentityMagma) -> EtaInitiality {
    let c = &m.cat;
    let i = m.unit_obj();
    let eta_i = g.eta[i.idx()];
    let retraction = c.compose(g.mu[i.idx()], m.lambda_at(i));
    EtaInitiality {
        eta_i,
        idempotent: c.compose(eta_i, eta_i) == eta_i,
        retraction,
        is_retraction: c.compose(retraction, eta_i) == c.id(i),
        eta_is_identity: eta_i == c.id(i),
        initial: is_initial(c, i),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn eta_at_unit() {
        for fx in [fixtures::terminal(), fixtures::join(), fixtures::double_unit()] {
            let (m, g) = (fx.magmal.unwrap(), fx.magma.unwrap());
            let r = eta_i_initiality(&m, &g);
            assert!(r.agree(), "{}: {r:?}", fx.name);
            assert_eq!(r.eta_i, m.cat.id(m.unit_obj()));
        }
    }

    #[test]
    fn coprojections_on_join() {
        let m = fixtures::join().magmal.unwrap();
        let b = InitialityData::from_initial(&m).unwrap();
        assert!(b.validate(&m).is_ok());
        let p = coprojections_from_initial(&m, &b);
        assert!(p.validate(&m).is_ok());
        let (o0, o1) = (Obj(0), Obj(1));
        assert_eq!(p.pi1(&m, o0, o1), m.cat.morphism("u").unwrap());
        assert_eq!(p.pi2(&m, o0, o1), m.cat.id(o1));
    }

    #[test]
    fn round_trips() {
        for fx in [fixtures::terminal(), fixtures::join(), fixtures::double_unit()] {
            let m = fx.magmal.unwrap();
            let b = InitialityData::from_initial(&m).unwrap();
            let p = coprojections_from_initial(&m, &b);
            assert_eq!(initial_from_coprojections(&m, &p).unwrap(), b, "{}", fx.name);
            let b2 = initial_from_coprojections(&m, &p).unwrap();
            assert_eq!(coprojections_from_initial(&m, &b2), p, "{}", fx.name);
        }
    }

    #[test]
    fn meet_unit_is_not_initial() {
        assert!(InitialityData::from_initial(&fixtures::meet().magmal.unwrap()).is_none());
    }

    #[test]
    fn non_invertible_unitor_blocks_the_converse() {
        let m = fixtures::colax_idempotent().magmal.unwrap();
        let e = m.cat.morphism("e").unwrap();
        let p = Coprojections {
            pi1: vec![e],
            pi2: vec![e],
        };
        assert!(matches!(
            initial_from_coprojections(&m, &p),
            Err(Error::NotInvertible { .. })
        ));
    }
}
