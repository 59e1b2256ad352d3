//! Right adjoints to the tensor, found by searching for couniversal arrows.

use std::collections::{BTreeMap, HashSet};

use crate::category::{FinCat, Mor, Obj};
use crate::error::{Error, Result, SearchLimit};
use crate::functor::Functor;
use crate::magmal::{validate_identity_magma, IdentityMagma, MagmalCategory};
use crate::report::{Law, ValidationReport};
use crate::universal::{is_initial, is_product, is_terminal, Span};

/// `(L, R)` right adjoint to `⊗`, with counit `ε_A : LA ⊗ RA -> A` and the
/// full factorization table `f ↦ (f^L, f^R)` keyed by `(X, Y, f)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjointData {
    pub left: Functor,
    pub right: Functor,
    pub epsilon: Vec<Mor>,
    pub transpose: BTreeMap<(Obj, Obj, Mor), (Mor, Mor)>,
}

impl AdjointData {
    /// The factorization of `f : X ⊗ Y -> A`.
    pub fn transpose_of(&self, x: Obj, y: Obj, f: Mor) -> (Mor, Mor) {
        self.transpose[&(x, y, f)]
    }

    /// Functoriality of `L` and `R`, naturality of `ε`, and unique
    /// factorization of every `f : X ⊗ Y -> A` through `ε_A`.
    pub fn validate(&self, m: &MagmalCategory) -> ValidationReport {
        let c = &m.cat;
        let mut report = ValidationReport::new();
        report.extend(self.left.validate(c, c));
        report.extend(self.right.validate(c, c));
        if !report.is_ok() {
            return report;
        }
        for a in c.objects() {
            let (l, r) = (self.left.obj(a), self.right.obj(a));
            let eps = self.epsilon[a.idx()];
            if c.dom(eps) != m.tensor_obj(l, r) || c.cod(eps) != a {
                report.push(Law::Typing, format!("ε_{} has the wrong type", c.obj_name(a)));
            } else if !is_couniversal(m, a, l, r, eps) {
                report.push(
                    Law::Section,
                    format!("ε_{} = `{}` is not couniversal", c.obj_name(a), c.mor_name(eps)),
                );
            }
        }
        if !report.is_ok() {
            return report;
        }
        for h in c.morphisms() {
            let (a, b) = (c.dom(h), c.cod(h));
            let lhs = c.compose(h, self.epsilon[a.idx()]);
            let rhs = c.compose(self.epsilon[b.idx()], m.tensor_mor(self.left.mor(h), self.right.mor(h)));
            if lhs != rhs {
                report.push(Law::Naturality, format!("ε is not natural at `{}`", c.mor_name(h)));
            }
        }
        report
    }
}

/// Whether `(u, v) ↦ ε . (u ⊗ v)` is a bijection
/// `C(X, l) × C(Y, r) -> C(X ⊗ Y, a)` for every `X`, `Y`.
pub fn is_couniversal(m: &MagmalCategory, a: Obj, l: Obj, r: Obj, eps: Mor) -> bool {
    let c = &m.cat;
    c.objects().all(|x| {
        c.objects().all(|y| {
            let targets = c.hom(m.tensor_obj(x, y), a);
            let (us, vs) = (c.hom(x, l), c.hom(y, r));
            if us.len() * vs.len() != targets.len() {
                return false;
            }
            let mut seen = HashSet::new();
            us.iter()
                .all(|&u| vs.iter().all(|&v| seen.insert(c.compose(eps, m.tensor_mor(u, v)))))
        })
    })
}

/// The first `(LA, RA, ε_A)` in declaration order that is couniversal.
pub fn couniversal_at(m: &MagmalCategory, a: Obj) -> Option<(Obj, Obj, Mor)> {
    let c = &m.cat;
    for l in c.objects() {
        for r in c.objects() {
            for &eps in c.hom(m.tensor_obj(l, r), a) {
                if is_couniversal(m, a, l, r, eps) {
                    return Some((l, r, eps));
                }
            }
        }
    }
    None
}

fn candidate_count(m: &MagmalCategory) -> u128 {
    let c = &m.cat;
    let mut total = 0u128;
    for a in c.objects() {
        for l in c.objects() {
            for r in c.objects() {
                total += c.hom(m.tensor_obj(l, r), a).len() as u128;
            }
        }
    }
    total
}

/// The first object with no couniversal arrow, if any.
pub fn first_missing_couniversal(m: &MagmalCategory, limit: SearchLimit) -> Result<Option<Obj>> {
    limit.admit(candidate_count(m))?;
    Ok(m.cat.objects().find(|&a| couniversal_at(m, a).is_none()))
}

/// Searches couniversal arrows object by object, then extends `L` and `R`
/// to morphisms by factoring `h . ε_A`.
pub fn find_right_adjoint_to_tensor(m: &MagmalCategory, limit: SearchLimit) -> Result<Option<AdjointData>> {
    limit.admit(candidate_count(m))?;
    let c = &m.cat;
    let mut lo = Vec::new();
    let mut ro = Vec::new();
    let mut epsilon = Vec::new();
    for a in c.objects() {
        let Some((l, r, eps)) = couniversal_at(m, a) else {
            return Ok(None);
        };
        lo.push(l);
        ro.push(r);
        epsilon.push(eps);
    }

    let mut transpose = BTreeMap::new();
    for a in c.objects() {
        let (l, r, eps) = (lo[a.idx()], ro[a.idx()], epsilon[a.idx()]);
        for x in c.objects() {
            for y in c.objects() {
                for &u in c.hom(x, l) {
                    for &v in c.hom(y, r) {
                        transpose.insert((x, y, c.compose(eps, m.tensor_mor(u, v))), (u, v));
                    }
                }
            }
        }
    }

    let mut lm = Vec::new();
    let mut rm = Vec::new();
    for h in c.morphisms() {
        let a = c.dom(h);
        let (u, v) = transpose[&(lo[a.idx()], ro[a.idx()], c.compose(h, epsilon[a.idx()]))];
        lm.push(u);
        rm.push(v);
    }
    let data = AdjointData {
        left: Functor {
            on_objects: lo,
            on_morphisms: lm,
        },
        right: Functor {
            on_objects: ro,
            on_morphisms: rm,
        },
        epsilon,
        transpose,
    };
    let report = data.validate(m);
    if !report.is_ok() {
        return Err(Error::InvariantViolated(format!(
            "assembled right adjoint fails its laws: {report}"
        )));
    }
    Ok(Some(data))
}

/// `η_A = ε_A . ((λ_A⁻¹)^L ⊗ (ρ_A⁻¹)^R) . λ_I` and
/// `μ_A = ε_A . ((ρ_A⁻¹)^L ⊗ (λ_A⁻¹)^R)`, re-validated.
pub fn derived_magma_from_adjoint(m: &MagmalCategory, ad: &AdjointData) -> Result<IdentityMagma> {
    let c = &m.cat;
    let i = m.unit_obj();
    let mut eta = Vec::new();
    let mut mu = Vec::new();
    for a in c.objects() {
        let (li, ri) = (m.lambda_inverse(a)?, m.rho_inverse(a)?);
        let (li_l, li_r) = ad.transpose_of(i, a, li);
        let (ri_l, ri_r) = ad.transpose_of(a, i, ri);
        let eps = ad.epsilon[a.idx()];
        eta.push(c.path(&[m.lambda_at(i), m.tensor_mor(li_l, ri_r), eps]));
        mu.push(c.compose(eps, m.tensor_mor(ri_l, li_r)));
    }
    let g = IdentityMagma { eta, mu };
    let report = validate_identity_magma(m, &g);
    if !report.is_ok() {
        return Err(Error::InvariantViolated(format!(
            "magma derived from the adjoint fails: {report}"
        )));
    }
    Ok(g)
}

/// Both sides of "a cartesian category has finite biproducts iff the
/// product functor has a right adjoint".
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BiproductCheck {
    pub right_adjoint: bool,
    pub biproducts: bool,
}

impl BiproductCheck {
    pub fn agree(&self) -> bool {
        self.right_adjoint == self.biproducts
    }
}

/// Checks that `cartesian` really is a product structure on `c`, then
/// decides both sides independently.
pub fn verify_biproduct_corollary(
    c: &FinCat,
    cartesian: &MagmalCategory,
    limit: SearchLimit,
) -> Result<BiproductCheck> {
    if &cartesian.cat != c {
        return Err(Error::InvariantViolated(
            "the cartesian structure lives on a different category".into(),
        ));
    }
    let m = cartesian;
    let i = m.unit_obj();
    if !is_terminal(c, i) || !m.is_unital() {
        return Err(Error::InvariantViolated(
            "the unit of a cartesian structure must be terminal".into(),
        ));
    }
    let bang = |a: Obj| c.hom(a, i)[0];
    for a in c.objects() {
        for b in c.objects() {
            let p1 = c.compose(m.rho_inverse(a)?, m.whisker_left(a, bang(b)));
            let p2 = c.compose(m.lambda_inverse(b)?, m.whisker_right(bang(a), b));
            if !is_product(
                c,
                &Span {
                    apex: m.tensor_obj(a, b),
                    left: p1,
                    right: p2,
                },
            ) {
                return Err(Error::InvariantViolated(format!(
                    "{} ⊗ {} with its projections is not a product",
                    c.obj_name(a),
                    c.obj_name(b)
                )));
            }
        }
    }
    let right_adjoint = find_right_adjoint_to_tensor(m, limit)?.is_some();
    Ok(BiproductCheck {
        right_adjoint,
        biproducts: has_finite_biproducts(c),
    })
}

/// A zero object, and for every pair an object that is both their product
/// and coproduct with `p_k . i_k = 1` and the cross composites zero.
pub fn has_finite_biproducts(c: &FinCat) -> bool {
    let Some(z) = c.objects().find(|&z| is_initial(c, z) && is_terminal(c, z)) else {
        return false;
    };
    let zero = |a: Obj, b: Obj| c.compose(c.hom(z, b)[0], c.hom(a, z)[0]);
    c.objects().all(|a| {
        c.objects().all(|b| {
            c.objects().any(|p| {
                c.hom(a, p).iter().any(|&i1| {
                    c.hom(b, p).iter().any(|&i2| {
                        c.hom(p, a).iter().any(|&p1| {
                            c.hom(p, b).iter().any(|&p2| {
                                c.compose(p1, i1) == c.id(a)
                                    && c.compose(p2, i2) == c.id(b)
                                    && c.compose(p1, i2) == zero(b, a)
                                    && c.compose(p2, i1) == zero(a, b)
                                    && is_product(
                                        c,
                                        &Span {
                                            apex: p,
                                            left: p1,
                                            right: p2,
                                        },
                                    )
                                    && crate::universal::is_coproduct(
                                        c,
                                        &crate::universal::Cospan {
                                            apex: p,
                                            left: i1,
                                            right: i2,
                                        },
                                    )
                            })
                        })
                    })
                })
            })
        })
    })
}
