//! Tensor products, unitors, symmetric monoidal data, and unital magmas.
//!
//! [`MagmalCategory`] is a finite category with a tensor bifunctor and a
//! colax unit (unitors need not be invertible). The generic [`Tensor`] and
//! [`MagmaFamily`] traits let the same diagram formulas run both on
//! composition tables and on the concrete finite-set backend.

use std::fmt::Debug;

use crate::category::{product_category, FinCat, Mor, Obj, Product};
use crate::error::{Error, Result, SearchLimit};
use crate::functor::{natural_transformations_between, Functor};
use crate::report::{Law, ValidationReport};

/// The operations a diagram formula needs from a magmal category.
pub trait Tensor {
    type Ob: Clone + PartialEq + Debug;
    type Hom: Clone + PartialEq + Debug;

    fn dom(&self, f: &Self::Hom) -> Self::Ob;
    fn cod(&self, f: &Self::Hom) -> Self::Ob;
    fn id(&self, a: &Self::Ob) -> Self::Hom;
    /// `g . f`
    fn compose(&self, g: &Self::Hom, f: &Self::Hom) -> Self::Hom;
    fn tensor(&self, a: &Self::Ob, b: &Self::Ob) -> Self::Ob;
    fn tensor_hom(&self, f: &Self::Hom, g: &Self::Hom) -> Self::Hom;
    fn unit(&self) -> Self::Ob;
    /// `λ_A : A -> I ⊗ A`
    fn lambda(&self, a: &Self::Ob) -> Self::Hom;
    /// `ρ_A : A -> A ⊗ I`
    fn rho(&self, a: &Self::Ob) -> Self::Hom;

    /// Composes a path in diagrammatic order.
    fn path(&self, steps: &[Self::Hom]) -> Self::Hom {
        let (first, rest) = steps.split_first().expect("empty path");
        rest.iter().fold(first.clone(), |acc, g| self.compose(g, &acc))
    }
}

/// A unital-magma candidate on every object: `η_A : I -> A`, `μ_A : A ⊗ A -> A`.
pub trait MagmaFamily<T: Tensor + ?Sized> {
    fn eta(&self, t: &T, a: &T::Ob) -> T::Hom;
    fn mu(&self, t: &T, a: &T::Ob) -> T::Hom;
}

/// `μ_A . (η_A ⊗ A) . λ_A`, which the left unit law requires to be the identity.
pub fn left_unit_composite<T: Tensor, G: MagmaFamily<T>>(t: &T, g: &G, a: &T::Ob) -> T::Hom {
    let eta_a = t.tensor_hom(&g.eta(t, a), &t.id(a));
    t.path(&[t.lambda(a), eta_a, g.mu(t, a)])
}

/// `μ_A . (A ⊗ η_A) . ρ_A`, which the right unit law requires to be the identity.
pub fn right_unit_composite<T: Tensor, G: MagmaFamily<T>>(t: &T, g: &G, a: &T::Ob) -> T::Hom {
    let a_eta = t.tensor_hom(&t.id(a), &g.eta(t, a));
    t.path(&[t.rho(a), a_eta, g.mu(t, a)])
}

/// The copairing candidate `[a, b] := μ_X . (a ⊗ b)` with `X = cod a = cod b`.
pub fn copairing<T: Tensor, G: MagmaFamily<T>>(t: &T, g: &G, a: &T::Hom, b: &T::Hom) -> T::Hom {
    let x = t.cod(a);
    debug_assert_eq!(x, t.cod(b));
    t.compose(&g.mu(t, &x), &t.tensor_hom(a, b))
}

/// Left coprojection `(A ⊗ η_B) . ρ_A : A -> A ⊗ B`, using `η` as the
/// family of arrows out of the unit.
pub fn left_coprojection<T: Tensor, G: MagmaFamily<T>>(t: &T, g: &G, a: &T::Ob, b: &T::Ob) -> T::Hom {
    t.compose(&t.tensor_hom(&t.id(a), &g.eta(t, b)), &t.rho(a))
}

/// Right coprojection `(η_A ⊗ B) . λ_B : B -> A ⊗ B`.
pub fn right_coprojection<T: Tensor, G: MagmaFamily<T>>(t: &T, g: &G, a: &T::Ob, b: &T::Ob) -> T::Hom {
    t.compose(&t.tensor_hom(&g.eta(t, a), &t.id(b)), &t.lambda(b))
}

/// `μ_{A⊗B} . ((A ⊗ η_B) ⊗ (η_A ⊗ B)) . (ρ_A ⊗ λ_B)`, the endomorphism of
/// `A ⊗ B` that must be the identity for the magma to exhibit coproducts.
pub fn quasi_symmetry_composite<T: Tensor, G: MagmaFamily<T>>(t: &T, g: &G, a: &T::Ob, b: &T::Ob) -> T::Hom {
    let ab = t.tensor(a, b);
    let inject = t.tensor_hom(
        &t.tensor_hom(&t.id(a), &g.eta(t, b)),
        &t.tensor_hom(&g.eta(t, a), &t.id(b)),
    );
    t.path(&[t.tensor_hom(&t.rho(a), &t.lambda(b)), inject, g.mu(t, &ab)])
}

/// Unit object with its two unitor families, indexed by object.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitData {
    pub unit: Obj,
    pub lambda: Vec<Mor>,
    pub rho: Vec<Mor>,
}

/// A finite colax unital magmal category.
///
/// `tensor_objects[a * n + b] = a ⊗ b` and
/// `tensor_morphisms[f * m + g] = f ⊗ g` over all pairs of morphisms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MagmalCategory {
    pub cat: FinCat,
    pub tensor_objects: Vec<Obj>,
    pub tensor_morphisms: Vec<Mor>,
    pub unit: UnitData,
}

impl MagmalCategory {
    #[inline]
    pub fn tensor_obj(&self, a: Obj, b: Obj) -> Obj {
        self.tensor_objects[a.idx() * self.cat.n_objects() + b.idx()]
    }

    #[inline]
    pub fn tensor_mor(&self, f: Mor, g: Mor) -> Mor {
        self.tensor_morphisms[f.idx() * self.cat.n_morphisms() + g.idx()]
    }

    /// `A ⊗ f`
    pub fn whisker_left(&self, a: Obj, f: Mor) -> Mor {
        self.tensor_mor(self.cat.id(a), f)
    }

    /// `f ⊗ B`
    pub fn whisker_right(&self, f: Mor, b: Obj) -> Mor {
        self.tensor_mor(f, self.cat.id(b))
    }

    pub fn unit_obj(&self) -> Obj {
        self.unit.unit
    }

    pub fn lambda_at(&self, a: Obj) -> Mor {
        self.unit.lambda[a.idx()]
    }

    pub fn rho_at(&self, a: Obj) -> Mor {
        self.unit.rho[a.idx()]
    }

    pub fn with_unit(&self, unit: UnitData) -> MagmalCategory {
        MagmalCategory { unit, ..self.clone() }
    }

    /// The tensor as a functor out of `product_category(cat, cat)`.
    pub fn tensor_functor(&self) -> Functor {
        let p = Product::of(&self.cat, &self.cat);
        let n = self.cat.n_objects() as u32;
        let m = self.cat.n_morphisms() as u32;
        Functor {
            on_objects: (0..n * n)
                .map(|i| {
                    let (a, b) = p.split_obj(Obj(i));
                    self.tensor_obj(a, b)
                })
                .collect(),
            on_morphisms: (0..m * m)
                .map(|i| {
                    let (f, g) = p.split_mor(Mor(i));
                    self.tensor_mor(f, g)
                })
                .collect(),
        }
    }

    pub fn validate(&self) -> ValidationReport {
        validate_magmal(self)
    }

    pub fn is_unital(&self) -> bool {
        is_unital(self)
    }

    pub fn lambda_inverse(&self, a: Obj) -> Result<Mor> {
        invert(&self.cat, self.lambda_at(a))
    }

    pub fn rho_inverse(&self, a: Obj) -> Result<Mor> {
        invert(&self.cat, self.rho_at(a))
    }
}

pub(crate) fn invert(c: &FinCat, f: Mor) -> Result<Mor> {
    c.inverse(f).ok_or_else(|| Error::NotInvertible {
        morphism: c.mor_name(f).to_owned(),
    })
}

impl Tensor for MagmalCategory {
    type Ob = Obj;
    type Hom = Mor;

    fn dom(&self, f: &Mor) -> Obj {
        self.cat.dom(*f)
    }
    fn cod(&self, f: &Mor) -> Obj {
        self.cat.cod(*f)
    }
    fn id(&self, a: &Obj) -> Mor {
        self.cat.id(*a)
    }
    fn compose(&self, g: &Mor, f: &Mor) -> Mor {
        self.cat.compose(*g, *f)
    }
    fn tensor(&self, a: &Obj, b: &Obj) -> Obj {
        self.tensor_obj(*a, *b)
    }
    fn tensor_hom(&self, f: &Mor, g: &Mor) -> Mor {
        self.tensor_mor(*f, *g)
    }
    fn unit(&self) -> Obj {
        self.unit.unit
    }
    fn lambda(&self, a: &Obj) -> Mor {
        self.lambda_at(*a)
    }
    fn rho(&self, a: &Obj) -> Mor {
        self.rho_at(*a)
    }
}

/// Checks bifunctoriality of the tensor, typing and naturality of the
/// unitors, and `λ_I = ρ_I`.
pub fn validate_magmal(m: &MagmalCategory) -> ValidationReport {
    let c = &m.cat;
    let (n, k) = (c.n_objects(), c.n_morphisms());
    let mut report = ValidationReport::new();
    if m.tensor_objects.len() != n * n || m.tensor_morphisms.len() != k * k {
        report.push(Law::MissingEntry, "tensor tables do not cover every pair");
        return report;
    }
    if m.unit.unit.idx() >= n || m.unit.lambda.len() != n || m.unit.rho.len() != n {
        report.push(Law::MissingEntry, "unitor tables do not cover every object");
        return report;
    }

    for f in c.morphisms() {
        for g in c.morphisms() {
            let h = m.tensor_mor(f, g);
            let want_dom = m.tensor_obj(c.dom(f), c.dom(g));
            let want_cod = m.tensor_obj(c.cod(f), c.cod(g));
            if c.dom(h) != want_dom || c.cod(h) != want_cod {
                report.push(
                    Law::Typing,
                    format!(
                        "`{}` ⊗ `{}` = `{}` is not typed `{}` -> `{}`",
                        c.mor_name(f),
                        c.mor_name(g),
                        c.mor_name(h),
                        c.obj_name(want_dom),
                        c.obj_name(want_cod)
                    ),
                );
            }
        }
    }
    validate_unit_typing(m, &m.unit, &mut report);
    if !report.is_ok() {
        return report;
    }

    for a in c.objects() {
        for b in c.objects() {
            let h = m.tensor_mor(c.id(a), c.id(b));
            if h != c.id(m.tensor_obj(a, b)) {
                report.push(
                    Law::Functoriality,
                    format!(
                        "id_{} ⊗ id_{} = `{}` is not an identity",
                        c.obj_name(a),
                        c.obj_name(b),
                        c.mor_name(h)
                    ),
                );
            }
        }
    }
    for g in c.morphisms() {
        for &f in c.incoming(c.dom(g)) {
            for g2 in c.morphisms() {
                for &f2 in c.incoming(c.dom(g2)) {
                    let lhs = c.compose(m.tensor_mor(g, g2), m.tensor_mor(f, f2));
                    let rhs = m.tensor_mor(c.compose(g, f), c.compose(g2, f2));
                    if lhs != rhs {
                        report.push(
                            Law::Functoriality,
                            format!(
                                "(`{}` ⊗ `{}`) . (`{}` ⊗ `{}`) = `{}` but (`{}` . `{}`) ⊗ (`{}` . `{}`) = `{}`",
                                c.mor_name(g),
                                c.mor_name(g2),
                                c.mor_name(f),
                                c.mor_name(f2),
                                c.mor_name(lhs),
                                c.mor_name(g),
                                c.mor_name(f),
                                c.mor_name(g2),
                                c.mor_name(f2),
                                c.mor_name(rhs)
                            ),
                        );
                    }
                }
            }
        }
    }
    if !report.is_ok() {
        return report;
    }
    validate_unit_laws(m, &m.unit, &mut report);
    report
}

/// Validates an alternative unit triple against the tensor of `m`.
pub fn validate_unit(m: &MagmalCategory, unit: &UnitData) -> ValidationReport {
    let mut report = ValidationReport::new();
    let n = m.cat.n_objects();
    if unit.unit.idx() >= n || unit.lambda.len() != n || unit.rho.len() != n {
        report.push(Law::MissingEntry, "unitor tables do not cover every object");
        return report;
    }
    validate_unit_typing(m, unit, &mut report);
    if report.is_ok() {
        validate_unit_laws(m, unit, &mut report);
    }
    report
}

fn validate_unit_typing(m: &MagmalCategory, u: &UnitData, report: &mut ValidationReport) {
    let c = &m.cat;
    for a in c.objects() {
        let (l, r) = (u.lambda[a.idx()], u.rho[a.idx()]);
        let (il, ar) = (m.tensor_obj(u.unit, a), m.tensor_obj(a, u.unit));
        if c.dom(l) != a || c.cod(l) != il {
            report.push(
                Law::Typing,
                format!(
                    "λ_{} = `{}` is not typed `{}` -> `{}`",
                    c.obj_name(a),
                    c.mor_name(l),
                    c.obj_name(a),
                    c.obj_name(il)
                ),
            );
        }
        if c.dom(r) != a || c.cod(r) != ar {
            report.push(
                Law::Typing,
                format!(
                    "ρ_{} = `{}` is not typed `{}` -> `{}`",
                    c.obj_name(a),
                    c.mor_name(r),
                    c.obj_name(a),
                    c.obj_name(ar)
                ),
            );
        }
    }
}

fn validate_unit_laws(m: &MagmalCategory, u: &UnitData, report: &mut ValidationReport) {
    let c = &m.cat;
    let i = c.id(u.unit);
    for f in c.morphisms() {
        let (a, b) = (c.dom(f), c.cod(f));
        if c.compose(m.tensor_mor(i, f), u.lambda[a.idx()]) != c.compose(u.lambda[b.idx()], f) {
            report.push(Law::Naturality, format!("λ is not natural at `{}`", c.mor_name(f)));
        }
        if c.compose(m.tensor_mor(f, i), u.rho[a.idx()]) != c.compose(u.rho[b.idx()], f) {
            report.push(Law::Naturality, format!("ρ is not natural at `{}`", c.mor_name(f)));
        }
    }
    let (li, ri) = (u.lambda[u.unit.idx()], u.rho[u.unit.idx()]);
    if li != ri {
        report.push(
            Law::UnitCoherence,
            format!("λ_I = `{}` differs from ρ_I = `{}`", c.mor_name(li), c.mor_name(ri)),
        );
    }
}

/// True iff every `λ_A` and `ρ_A` has a two-sided inverse.
pub fn is_unital(m: &MagmalCategory) -> bool {
    m.cat
        .objects()
        .all(|a| m.cat.is_iso(m.lambda_at(a)) && m.cat.is_iso(m.rho_at(a)))
}

/// The canonical isomorphisms between two unit structures on the same tensor:
/// `λ_{I'}⁻¹ . ρ'_I : I -> I'` and `λ'_I⁻¹ . ρ_{I'} : I' -> I`.
pub fn unit_iso(m: &MagmalCategory, first: &UnitData, second: &UnitData) -> Result<(Mor, Mor)> {
    let c = &m.cat;
    let (i, ip) = (first.unit, second.unit);
    let forward = c.compose(invert(c, first.lambda[ip.idx()])?, second.rho[i.idx()]);
    let backward = c.compose(invert(c, second.lambda[i.idx()])?, first.rho[ip.idx()]);
    Ok((forward, backward))
}

/// Functors `A ⊗ B ⊗ C` on the triple product used to type the associator.
pub(crate) fn associator_functors(m: &MagmalCategory) -> (FinCat, Functor, Functor) {
    let c = &m.cat;
    let cc = product_category(c, c);
    let ccc = product_category(&cc, c);
    let p2 = Product::of(c, c);
    let p3 = Product::of(&cc, c);
    let mut left = Functor {
        on_objects: Vec::new(),
        on_morphisms: Vec::new(),
    };
    let mut right = left.clone();
    for o in ccc.objects() {
        let (ab, cobj) = p3.split_obj(o);
        let (a, b) = p2.split_obj(ab);
        left.on_objects.push(m.tensor_obj(m.tensor_obj(a, b), cobj));
        right.on_objects.push(m.tensor_obj(a, m.tensor_obj(b, cobj)));
    }
    for f in ccc.morphisms() {
        let (fg, h) = p3.split_mor(f);
        let (f1, g1) = p2.split_mor(fg);
        left.on_morphisms.push(m.tensor_mor(m.tensor_mor(f1, g1), h));
        right.on_morphisms.push(m.tensor_mor(f1, m.tensor_mor(g1, h)));
    }
    (ccc, left, right)
}

/// Functors `A ⊗ B` and `B ⊗ A` on the product, typing the braiding.
pub(crate) fn braiding_functors(m: &MagmalCategory) -> (FinCat, Functor, Functor) {
    let c = &m.cat;
    let cc = product_category(c, c);
    let p = Product::of(c, c);
    let tensor = m.tensor_functor();
    let swapped = Functor {
        on_objects: cc
            .objects()
            .map(|o| {
                let (a, b) = p.split_obj(o);
                m.tensor_obj(b, a)
            })
            .collect(),
        on_morphisms: cc
            .morphisms()
            .map(|f| {
                let (f1, g1) = p.split_mor(f);
                m.tensor_mor(g1, f1)
            })
            .collect(),
    };
    (cc, tensor, swapped)
}

/// Associator and braiding components.
///
/// `alpha[(a * n + b) * n + c] : (a ⊗ b) ⊗ c -> a ⊗ (b ⊗ c)` and
/// `sigma[a * n + b] : a ⊗ b -> b ⊗ a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricStructure {
    pub alpha: Vec<Mor>,
    pub sigma: Vec<Mor>,
}

impl SymmetricStructure {
    pub fn alpha(&self, m: &MagmalCategory, a: Obj, b: Obj, c: Obj) -> Mor {
        let n = m.cat.n_objects();
        self.alpha[(a.idx() * n + b.idx()) * n + c.idx()]
    }

    pub fn sigma(&self, m: &MagmalCategory, a: Obj, b: Obj) -> Mor {
        self.sigma[a.idx() * m.cat.n_objects() + b.idx()]
    }

    pub fn alpha_inv(&self, m: &MagmalCategory, a: Obj, b: Obj, c: Obj) -> Result<Mor> {
        invert(&m.cat, self.alpha(m, a, b, c))
    }

    pub fn validate(&self, m: &MagmalCategory) -> ValidationReport {
        validate_symmetric(m, self)
    }
}

/// Typing, naturality, invertibility, pentagon and triangle of an
/// associator table laid out as in [`SymmetricStructure`].
pub fn validate_associator(m: &MagmalCategory, alpha: &[Mor]) -> ValidationReport {
    let c = &m.cat;
    let n = c.n_objects();
    let mut report = ValidationReport::new();
    if alpha.len() != n * n * n {
        report.push(Law::MissingEntry, "associator table does not cover every object triple");
        return report;
    }
    let t = |a: Obj, b: Obj| m.tensor_obj(a, b);
    let at = |a: Obj, b: Obj, d: Obj| alpha[(a.idx() * n + b.idx()) * n + d.idx()];
    let objs: Vec<Obj> = c.objects().collect();
    for &a in &objs {
        for &b in &objs {
            for &d in &objs {
                let al = at(a, b, d);
                if c.dom(al) != t(t(a, b), d) || c.cod(al) != t(a, t(b, d)) {
                    report.push(
                        Law::Typing,
                        format!(
                            "α_({},{},{}) = `{}` has the wrong type",
                            c.obj_name(a),
                            c.obj_name(b),
                            c.obj_name(d),
                            c.mor_name(al)
                        ),
                    );
                }
            }
        }
    }
    if !report.is_ok() {
        return report;
    }

    let (ccc, left, right) = associator_functors(m);
    let nt = crate::functor::NatTrans {
        components: alpha.to_vec(),
    };
    for v in nt.validate(&ccc, c, &left, &right).violations {
        report.push(Law::Naturality, format!("associator: {}", v.message));
    }
    for &al in alpha {
        if !c.is_iso(al) {
            report.push(
                Law::Invertibility,
                format!("associator component `{}` is not invertible", c.mor_name(al)),
            );
        }
    }

    for &a in &objs {
        for &b in &objs {
            for &cc_ in &objs {
                for &d in &objs {
                    let lhs = c.compose(at(a, b, t(cc_, d)), at(t(a, b), cc_, d));
                    let rhs = c.path(&[
                        m.whisker_right(at(a, b, cc_), d),
                        at(a, t(b, cc_), d),
                        m.whisker_left(a, at(b, cc_, d)),
                    ]);
                    if lhs != rhs {
                        report.push(
                            Law::Pentagon,
                            format!(
                                "pentagon fails at ({},{},{},{}): `{}` vs `{}`",
                                c.obj_name(a),
                                c.obj_name(b),
                                c.obj_name(cc_),
                                c.obj_name(d),
                                c.mor_name(lhs),
                                c.mor_name(rhs)
                            ),
                        );
                    }
                }
            }
        }
    }

    let i = m.unit_obj();
    for &a in &objs {
        for &b in &objs {
            let lhs = c.compose(at(a, i, b), m.whisker_right(m.rho_at(a), b));
            let rhs = m.whisker_left(a, m.lambda_at(b));
            if lhs != rhs {
                report.push(
                    Law::Triangle,
                    format!(
                        "triangle fails at ({},{}): `{}` vs `{}`",
                        c.obj_name(a),
                        c.obj_name(b),
                        c.mor_name(lhs),
                        c.mor_name(rhs)
                    ),
                );
            }
        }
    }
    report
}

/// The associator laws plus typing and naturality of `σ`, both hexagons
/// and `σ² = 1`.
pub fn validate_symmetric(m: &MagmalCategory, s: &SymmetricStructure) -> ValidationReport {
    let c = &m.cat;
    let n = c.n_objects();
    let mut report = validate_associator(m, &s.alpha);
    if s.sigma.len() != n * n {
        report.push(Law::MissingEntry, "braiding table does not cover every object pair");
        return report;
    }
    if !report.is_ok() {
        return report;
    }
    let t = |a: Obj, b: Obj| m.tensor_obj(a, b);
    let objs: Vec<Obj> = c.objects().collect();
    for &a in &objs {
        for &b in &objs {
            let sg = s.sigma(m, a, b);
            if c.dom(sg) != t(a, b) || c.cod(sg) != t(b, a) {
                report.push(
                    Law::Typing,
                    format!(
                        "σ_({},{}) = `{}` has the wrong type",
                        c.obj_name(a),
                        c.obj_name(b),
                        c.mor_name(sg)
                    ),
                );
            }
        }
    }
    if !report.is_ok() {
        return report;
    }
    let (cc, tensor, swapped) = braiding_functors(m);
    let nt = crate::functor::NatTrans {
        components: s.sigma.clone(),
    };
    for v in nt.validate(&cc, c, &tensor, &swapped).violations {
        report.push(Law::Naturality, format!("braiding: {}", v.message));
    }
    for &a in &objs {
        for &b in &objs {
            let ss = c.compose(s.sigma(m, b, a), s.sigma(m, a, b));
            if ss != c.id(t(a, b)) {
                report.push(
                    Law::Symmetry,
                    format!(
                        "σ_({b},{a}) . σ_({a},{b}) = `{}` is not the identity",
                        c.mor_name(ss),
                        a = c.obj_name(a),
                        b = c.obj_name(b)
                    ),
                );
            }
        }
    }
    let inv = |a: Obj, b: Obj, d: Obj| c.inverse(s.alpha(m, a, b, d)).expect("associator checked invertible");
    for &a in &objs {
        for &b in &objs {
            for &d in &objs {
                // (A⊗B)⊗C -> B⊗(C⊗A)
                let lhs = c.path(&[s.alpha(m, a, b, d), s.sigma(m, a, t(b, d)), s.alpha(m, b, d, a)]);
                let rhs = c.path(&[
                    m.whisker_right(s.sigma(m, a, b), d),
                    s.alpha(m, b, a, d),
                    m.whisker_left(b, s.sigma(m, a, d)),
                ]);
                if lhs != rhs {
                    report.push(
                        Law::Hexagon,
                        format!(
                            "first hexagon fails at ({},{},{})",
                            c.obj_name(a),
                            c.obj_name(b),
                            c.obj_name(d)
                        ),
                    );
                }
                // A⊗(B⊗C) -> (C⊗A)⊗B
                let lhs = c.path(&[inv(a, b, d), s.sigma(m, t(a, b), d), inv(d, a, b)]);
                let rhs = c.path(&[
                    m.whisker_left(a, s.sigma(m, b, d)),
                    inv(a, d, b),
                    m.whisker_right(s.sigma(m, a, d), b),
                ]);
                if lhs != rhs {
                    report.push(
                        Law::Hexagon,
                        format!(
                            "second hexagon fails at ({},{},{})",
                            c.obj_name(a),
                            c.obj_name(b),
                            c.obj_name(d)
                        ),
                    );
                }
            }
        }
    }
    report
}

/// The interchange `(A ⊗ B) ⊗ (C ⊗ D) -> (A ⊗ C) ⊗ (B ⊗ D)` built from
/// `σ_{B,C}` and associators, bracketed as
/// `α⁻¹ . (A ⊗ α) . (A ⊗ (σ ⊗ D)) . (A ⊗ α⁻¹) . α`.
pub fn middle_interchange(m: &MagmalCategory, s: &SymmetricStructure, a: Obj, b: Obj, c: Obj, d: Obj) -> Result<Mor> {
    let cat = &m.cat;
    let t = |x: Obj, y: Obj| m.tensor_obj(x, y);
    Ok(cat.path(&[
        s.alpha(m, a, b, t(c, d)),
        m.whisker_left(a, s.alpha_inv(m, b, c, d)?),
        m.whisker_left(a, m.whisker_right(s.sigma(m, b, c), d)),
        m.whisker_left(a, s.alpha(m, c, b, d)),
        s.alpha_inv(m, a, c, t(b, d))?,
    ]))
}

/// The same interchange bracketed through `((A ⊗ B) ⊗ C) ⊗ D` instead.
pub fn middle_interchange_alt(
    m: &MagmalCategory,
    s: &SymmetricStructure,
    a: Obj,
    b: Obj,
    c: Obj,
    d: Obj,
) -> Result<Mor> {
    let cat = &m.cat;
    let t = |x: Obj, y: Obj| m.tensor_obj(x, y);
    Ok(cat.path(&[
        s.alpha_inv(m, t(a, b), c, d)?,
        m.whisker_right(s.alpha(m, a, b, c), d),
        m.whisker_right(m.whisker_left(a, s.sigma(m, b, c)), d),
        m.whisker_right(s.alpha_inv(m, a, c, b)?, d),
        s.alpha(m, t(a, c), b, d),
    ]))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UnitalMagma {
    pub carrier: Obj,
    pub eta: Mor,
    pub mu: Mor,
}

impl UnitalMagma {
    /// Typing and both unit laws.
    pub fn validate(&self, m: &MagmalCategory) -> ValidationReport {
        let c = &m.cat;
        let a = self.carrier;
        let mut report = ValidationReport::new();
        if c.dom(self.eta) != m.unit_obj() || c.cod(self.eta) != a {
            report.push(
                Law::Typing,
                format!("η = `{}` is not typed I -> `{}`", c.mor_name(self.eta), c.obj_name(a)),
            );
        }
        if c.dom(self.mu) != m.tensor_obj(a, a) || c.cod(self.mu) != a {
            report.push(
                Law::Typing,
                format!(
                    "μ = `{}` is not typed `{}`⊗`{}` -> `{}`",
                    c.mor_name(self.mu),
                    c.obj_name(a),
                    c.obj_name(a),
                    c.obj_name(a)
                ),
            );
        }
        if !report.is_ok() {
            return report;
        }
        let left = left_unit_composite(m, self, &a);
        let right = right_unit_composite(m, self, &a);
        if left != c.id(a) {
            report.push(
                Law::UnitLaw,
                format!(
                    "left unit law fails on `{}`: composite is `{}`",
                    c.obj_name(a),
                    c.mor_name(left)
                ),
            );
        }
        if right != c.id(a) {
            report.push(
                Law::UnitLaw,
                format!(
                    "right unit law fails on `{}`: composite is `{}`",
                    c.obj_name(a),
                    c.mor_name(right)
                ),
            );
        }
        report
    }
}

impl MagmaFamily<MagmalCategory> for UnitalMagma {
    fn eta(&self, _t: &MagmalCategory, a: &Obj) -> Mor {
        debug_assert_eq!(*a, self.carrier);
        self.eta
    }
    fn mu(&self, _t: &MagmalCategory, a: &Obj) -> Mor {
        debug_assert_eq!(*a, self.carrier);
        self.mu
    }
}

/// A unital magma structure on the identity functor, given componentwise.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IdentityMagma {
    pub eta: Vec<Mor>,
    pub mu: Vec<Mor>,
}

impl IdentityMagma {
    pub fn at(&self, a: Obj) -> UnitalMagma {
        UnitalMagma {
            carrier: a,
            eta: self.eta[a.idx()],
            mu: self.mu[a.idx()],
        }
    }

    pub fn validate(&self, m: &MagmalCategory) -> ValidationReport {
        validate_identity_magma(m, self)
    }
}

impl MagmaFamily<MagmalCategory> for IdentityMagma {
    fn eta(&self, _t: &MagmalCategory, a: &Obj) -> Mor {
        self.eta[a.idx()]
    }
    fn mu(&self, _t: &MagmalCategory, a: &Obj) -> Mor {
        self.mu[a.idx()]
    }
}

/// Per-object unit laws plus naturality of `η : Ī ⇒ 1` and `μ : ⊗Δ ⇒ 1`.
pub fn validate_identity_magma(m: &MagmalCategory, g: &IdentityMagma) -> ValidationReport {
    let c = &m.cat;
    let mut report = ValidationReport::new();
    if g.eta.len() != c.n_objects() || g.mu.len() != c.n_objects() {
        report.push(Law::MissingEntry, "magma family does not cover every object");
        return report;
    }
    for a in c.objects() {
        report.extend(g.at(a).validate(m));
    }
    if report.has(Law::Typing) {
        return report;
    }
    for f in c.morphisms() {
        let (a, b) = (c.dom(f), c.cod(f));
        if c.compose(f, g.eta[a.idx()]) != g.eta[b.idx()] {
            report.push(
                Law::Naturality,
                format!(
                    "η is not natural at `{}`: `{}` . η_{} ≠ η_{}",
                    c.mor_name(f),
                    c.mor_name(f),
                    c.obj_name(a),
                    c.obj_name(b)
                ),
            );
        }
        if c.compose(f, g.mu[a.idx()]) != c.compose(g.mu[b.idx()], m.tensor_mor(f, f)) {
            report.push(
                Law::Naturality,
                format!("μ is not natural at `{}` (not a homomorphism)", c.mor_name(f)),
            );
        }
    }
    report
}

/// `f . μ_A = μ_B . (f ⊗ f)` and `f . η_A = η_B`.
pub fn is_magma_homomorphism(m: &MagmalCategory, f: Mor, a: &UnitalMagma, b: &UnitalMagma) -> bool {
    let c = &m.cat;
    c.dom(f) == a.carrier
        && c.cod(f) == b.carrier
        && c.compose(f, a.mu) == c.compose(b.mu, m.tensor_mor(f, f))
        && c.compose(f, a.eta) == b.eta
}

/// Associativity `μ . (μ ⊗ A) = μ . (A ⊗ μ) . α` of one magma.
pub fn is_associative(m: &MagmalCategory, s: &SymmetricStructure, g: &UnitalMagma) -> bool {
    let c = &m.cat;
    let a = g.carrier;
    let lhs = c.compose(g.mu, m.whisker_right(g.mu, a));
    let rhs = c.path(&[s.alpha(m, a, a, a), m.whisker_left(a, g.mu), g.mu]);
    lhs == rhs
}

/// Commutativity `μ . σ_{A,A} = μ` of one magma.
pub fn is_commutative(m: &MagmalCategory, s: &SymmetricStructure, g: &UnitalMagma) -> bool {
    m.cat.compose(g.mu, s.sigma(m, g.carrier, g.carrier)) == g.mu
}

/// `A ↦ F A ⊗ G A` for endofunctors `F`, `G` of the base.
pub fn tensor_functors(m: &MagmalCategory, f: &Functor, g: &Functor) -> Functor {
    let c = &m.cat;
    Functor {
        on_objects: c.objects().map(|a| m.tensor_obj(f.obj(a), g.obj(a))).collect(),
        on_morphisms: c.morphisms().map(|h| m.tensor_mor(f.mor(h), g.mor(h))).collect(),
    }
}

/// Every unital magma structure on the identity functor, `η`-major in
/// lexicographic order. With `require_commutative_monoid`, keeps only
/// families that are associative and commutative for `s`.
pub fn enumerate_identity_magmas(
    m: &MagmalCategory,
    require_commutative_monoid: bool,
    s: Option<&SymmetricStructure>,
    limit: SearchLimit,
) -> Result<Vec<IdentityMagma>> {
    let c = &m.cat;
    if require_commutative_monoid && s.is_none() {
        return Err(Error::MissingStructure(
            "commutative monoid filter needs a symmetric structure".into(),
        ));
    }
    let id = Functor::identity(c);
    let unit_const = Functor::constant(c, c, m.unit_obj());
    let diag_tensor = tensor_functors(m, &id, &id);
    let etas = natural_transformations_between(c, c, &unit_const, &id, limit)?;
    let mus = natural_transformations_between(c, c, &diag_tensor, &id, limit)?;
    limit.admit(etas.len() as u128 * mus.len() as u128)?;

    let mut out = Vec::new();
    for eta in &etas {
        for mu in &mus {
            let g = IdentityMagma {
                eta: eta.components.clone(),
                mu: mu.components.clone(),
            };
            let unit_laws = c
                .objects()
                .all(|a| left_unit_composite(m, &g, &a) == c.id(a) && right_unit_composite(m, &g, &a) == c.id(a));
            if !unit_laws {
                continue;
            }
            if require_commutative_monoid {
                let s = s.expect("checked above");
                let ok = c
                    .objects()
                    .all(|a| is_associative(m, s, &g.at(a)) && is_commutative(m, s, &g.at(a)));
                if !ok {
                    continue;
                }
            }
            out.push(g);
        }
    }
    Ok(out)
}

/// The unital magma on `A ⊗ B` with multiplication
/// `(μ_A ⊗ μ_B) . (A ⊗ σ_{B,A} ⊗ B)` and unit `(η_A ⊗ η_B) . λ_I`.
pub fn induced_magma_on_tensor(
    m: &MagmalCategory,
    s: &SymmetricStructure,
    a: &UnitalMagma,
    b: &UnitalMagma,
) -> Result<UnitalMagma> {
    let c = &m.cat;
    let (x, y) = (a.carrier, b.carrier);
    let shuffle = middle_interchange(m, s, x, y, x, y)?;
    let mu = c.compose(m.tensor_mor(a.mu, b.mu), shuffle);
    let eta = c.compose(m.tensor_mor(a.eta, b.eta), m.lambda_at(m.unit_obj()));
    Ok(UnitalMagma {
        carrier: m.tensor_obj(x, y),
        eta,
        mu,
    })
}
