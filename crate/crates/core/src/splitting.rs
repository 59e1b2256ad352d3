//! Idempotents and their splittings, naturally weak adjunctions and
//! colimits, and the Karoubi envelope.

use std::collections::BTreeMap;

use crate::category::{product_category, terminal_category, FinCat, Mor, Obj, Product};
use crate::error::{Error, Result};
use crate::functor::{Functor, NatTrans};
use crate::magmal::{
    copairing, left_coprojection, right_coprojection, validate_identity_magma, validate_magmal, validate_symmetric,
    IdentityMagma, MagmalCategory, SymmetricStructure, UnitData,
};
use crate::report::{Law, ValidationReport};
use crate::universal::{is_colimit, Diagram};

/// An endomorphism `e` of `object` with `e . e = e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Idempotent {
    pub object: Obj,
    pub e: Mor,
}

impl Idempotent {
    pub fn new(c: &FinCat, e: Mor) -> Result<Self> {
        if !c.is_idempotent(e) {
            return Err(Error::InvariantViolated(format!(
                "`{}` is not an idempotent endomorphism",
                c.mor_name(e)
            )));
        }
        Ok(Idempotent { object: c.dom(e), e })
    }

    pub fn identity(c: &FinCat, a: Obj) -> Self {
        Idempotent { object: a, e: c.id(a) }
    }
}

/// `e = section . retraction` with `retraction . section = 1_summand`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Splitting {
    pub summand: Obj,
    pub retraction: Mor,
    pub section: Mor,
}

impl Splitting {
    pub fn splits(&self, c: &FinCat, e: &Idempotent) -> bool {
        c.dom(self.retraction) == e.object
            && c.cod(self.retraction) == self.summand
            && c.dom(self.section) == self.summand
            && c.cod(self.section) == e.object
            && c.compose(self.section, self.retraction) == e.e
            && c.compose(self.retraction, self.section) == c.id(self.summand)
    }

    /// The comparison isomorphisms `r' . s : S -> S'` and `r . s' : S' -> S`
    /// between two splittings of the same idempotent.
    pub fn comparison(&self, c: &FinCat, other: &Splitting) -> (Mor, Mor) {
        (
            c.compose(other.retraction, self.section),
            c.compose(self.retraction, other.section),
        )
    }
}

/// Both sides of "an idempotent has a retraction iff it is the identity".
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RetractionCheck {
    pub retraction: Option<Mor>,
    pub is_identity: bool,
}

impl RetractionCheck {
    pub fn consistent(&self) -> bool {
        self.retraction.is_some() == self.is_identity
    }
}

/// Searches for `r : A -> A` with `r . e = 1_A` and records whether `e = 1_A`.
pub fn check_retraction_lemma(c: &FinCat, e: &Idempotent) -> RetractionCheck {
    let a = e.object;
    let retraction = c.hom(a, a).iter().copied().find(|&r| c.compose(r, e.e) == c.id(a));
    RetractionCheck {
        retraction,
        is_identity: e.e == c.id(a),
    }
}

/// Every splitting of `e`, trying the object `e` lives on first and then
/// the remaining objects in declaration order, each hom-set in order.
pub fn splittings(c: &FinCat, e: &Idempotent) -> Vec<Splitting> {
    let a = e.object;
    let summands = std::iter::once(a).chain(c.objects().filter(|&s| s != a));
    let mut out = Vec::new();
    for s in summands {
        for &r in c.hom(a, s) {
            for &sec in c.hom(s, a) {
                let cand = Splitting {
                    summand: s,
                    retraction: r,
                    section: sec,
                };
                if cand.splits(c, e) {
                    out.push(cand);
                }
            }
        }
    }
    out
}

/// The first splitting in the order of [`splittings`].
pub fn split_idempotent(c: &FinCat, e: &Idempotent) -> Option<Splitting> {
    splittings(c, e).into_iter().next()
}

/// Idempotents of `c` that admit no splitting.
pub fn unsplit_idempotents(c: &FinCat) -> Vec<Mor> {
    c.idempotents()
        .into_iter()
        .filter(|&e| split_idempotent(c, &Idempotent { object: c.dom(e), e }).is_none())
        .collect()
}

/// A functor `L : A -> C` that is naturally weakly left adjoint to
/// `R : C -> E` relative to `J : A -> E`.
///
/// `flat[(X, Y, h)]` is the chosen `LX -> Y` for `h : JX -> RY`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakAdjunctionData {
    pub a: FinCat,
    pub c: FinCat,
    pub e: FinCat,
    pub j: Functor,
    pub l: Functor,
    pub r: Functor,
    pub eta: NatTrans,
    pub flat: BTreeMap<(Obj, Obj, Mor), Mor>,
}

impl WeakAdjunctionData {
    pub fn flat(&self, x: Obj, y: Obj, h: Mor) -> Mor {
        self.flat[&(x, y, h)]
    }

    /// Functors, `η : J ⇒ RL`, totality and typing of `♭`, the section
    /// equation `R(♭h) . η_X = h`, and naturality of `♭` in both variables.
    pub fn validate(&self) -> ValidationReport {
        let (a, c, e) = (&self.a, &self.c, &self.e);
        let mut report = ValidationReport::new();
        report.extend(self.j.validate(a, e));
        report.extend(self.l.validate(a, c));
        report.extend(self.r.validate(c, e));
        if !report.is_ok() {
            return report;
        }
        report.extend(self.eta.validate(a, e, &self.j, &self.l.then(&self.r)));
        if !report.is_ok() {
            return report;
        }
        for x in a.objects() {
            for y in c.objects() {
                for &h in e.hom(self.j.obj(x), self.r.obj(y)) {
                    let Some(&f) = self.flat.get(&(x, y, h)) else {
                        report.push(Law::MissingEntry, format!("♭ is undefined at `{}`", e.mor_name(h)));
                        continue;
                    };
                    if c.dom(f) != self.l.obj(x) || c.cod(f) != y {
                        report.push(
                            Law::Typing,
                            format!("♭(`{}`) = `{}` has the wrong type", e.mor_name(h), c.mor_name(f)),
                        );
                        continue;
                    }
                    if e.compose(self.r.mor(f), self.eta.at(x)) != h {
                        report.push(
                            Law::Section,
                            format!("R♭(`{}`) . η does not return `{}`", e.mor_name(h), e.mor_name(h)),
                        );
                    }
                }
            }
        }
        if !report.is_ok() {
            return report;
        }
        for x in a.objects() {
            for y in c.objects() {
                for &h in e.hom(self.j.obj(x), self.r.obj(y)) {
                    let f = self.flat(x, y, h);
                    for &v in c.outgoing(y) {
                        let lhs = self.flat(x, c.cod(v), e.compose(self.r.mor(v), h));
                        if lhs != c.compose(v, f) {
                            report.push(Law::Naturality, format!("♭ is not natural in Y at `{}`", c.mor_name(v)));
                        }
                    }
                    for &u in a.incoming(x) {
                        let lhs = self.flat(a.dom(u), y, e.compose(h, self.j.mor(u)));
                        if lhs != c.compose(f, self.l.mor(u)) {
                            report.push(Law::Naturality, format!("♭ is not natural in X at `{}`", a.mor_name(u)));
                        }
                    }
                }
            }
        }
        report
    }

    /// Whether `g ↦ Rg . η_X` is a bijection `C(LX, Y) -> E(JX, RY)` for
    /// every pair, i.e. whether `L` is an honest relative left adjoint.
    pub fn is_relative_adjunction(&self) -> bool {
        let (a, c, e) = (&self.a, &self.c, &self.e);
        a.objects().all(|x| {
            c.objects().all(|y| {
                let targets = e.hom(self.j.obj(x), self.r.obj(y));
                let mut images: Vec<Mor> = c
                    .hom(self.l.obj(x), y)
                    .iter()
                    .map(|&g| e.compose(self.r.mor(g), self.eta.at(x)))
                    .collect();
                images.sort();
                let mut sorted = targets.to_vec();
                sorted.sort();
                images.len() == targets.len() && images == sorted
            })
        })
    }

    /// Weak initial object: `A = E = 1`, `L` picks `apex`, `♭` returns
    /// `choice[Y] : apex -> Y`.
    pub fn weak_initial(c: &FinCat, apex: Obj, choice: Vec<Mor>) -> Self {
        let one = terminal_category();
        let star = Obj(0);
        let flat = c
            .objects()
            .map(|y| ((star, y, one.id(star)), choice[y.idx()]))
            .collect();
        WeakAdjunctionData {
            j: Functor::identity(&one),
            l: Functor {
                on_objects: vec![apex],
                on_morphisms: vec![c.id(apex)],
            },
            r: Functor::constant(c, &one, star),
            eta: NatTrans {
                components: vec![one.id(star)],
            },
            a: one.clone(),
            c: c.clone(),
            e: one,
            flat,
        }
    }

    /// The nullary case of a unital magma on the identity: `η_Y` is the
    /// chosen arrow out of the unit.
    pub fn nullary_from_magma(m: &MagmalCategory, g: &IdentityMagma) -> Self {
        Self::weak_initial(&m.cat, m.unit_obj(), g.eta.clone())
    }

    /// The binary case: `⊗` weakly left adjoint to the diagonal, with
    /// unit the coprojections and `♭(a, b) = μ_Y . (a ⊗ b)`.
    pub fn binary_from_magma(m: &MagmalCategory, g: &IdentityMagma) -> Self {
        let c = &m.cat;
        let cc = product_category(c, c);
        let p = Product::of(c, c);
        let r = crate::functor::diagonal_functor(c);
        let l = m.tensor_functor();
        let eta = NatTrans {
            components: cc
                .objects()
                .map(|o| {
                    let (a, b) = p.split_obj(o);
                    p.mor(left_coprojection(m, g, &a, &b), right_coprojection(m, g, &a, &b))
                })
                .collect(),
        };
        let mut flat = BTreeMap::new();
        for x in cc.objects() {
            for y in c.objects() {
                for &h in cc.hom(x, r.obj(y)) {
                    let (ha, hb) = p.split_mor(h);
                    flat.insert((x, y, h), copairing(m, g, &ha, &hb));
                }
            }
        }
        WeakAdjunctionData {
            a: cc.clone(),
            c: c.clone(),
            e: cc.clone(),
            j: Functor::identity(&cc),
            l,
            r,
            eta,
            flat,
        }
    }
}

/// `♭_{X,LX}(η_X)`, an idempotent on `LX` whenever `w` is valid.
pub fn weak_adjunction_idempotent(w: &WeakAdjunctionData, x: Obj) -> Result<Idempotent> {
    let lx = w.l.obj(x);
    let e = w
        .flat
        .get(&(x, lx, w.eta.at(x)))
        .copied()
        .ok_or_else(|| Error::InvariantViolated("♭ is undefined at η".into()))?;
    Idempotent::new(&w.c, e).map_err(|_| {
        Error::InvariantViolated(format!(
            "♭(η) = `{}` is not idempotent; the weak adjunction data is inconsistent",
            w.c.mor_name(e)
        ))
    })
}

/// A cocone with a chosen mediator for every competing cocone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakColimitData {
    pub diagram: Diagram,
    pub apex: Obj,
    pub cocone: Vec<Mor>,
    pub mediator: BTreeMap<(Obj, Vec<Mor>), Mor>,
}

impl WeakColimitData {
    /// Every cocone has a mediator, mediators commute with the legs, and
    /// the choice is natural in the target.
    pub fn validate(&self, c: &FinCat) -> ValidationReport {
        let mut report = ValidationReport::new();
        if !self.diagram.is_cocone(c, &self.cocone) || self.cocone.iter().any(|&l| c.cod(l) != self.apex) {
            report.push(Law::Typing, "the legs do not form a cocone on the apex");
            return report;
        }
        for x in c.objects() {
            for k in self.diagram.cocones(c, x) {
                let Some(&med) = self.mediator.get(&(x, k.clone())) else {
                    report.push(
                        Law::MissingEntry,
                        format!("no mediator for a cocone to `{}`", c.obj_name(x)),
                    );
                    continue;
                };
                if c.dom(med) != self.apex || c.cod(med) != x {
                    report.push(
                        Law::Typing,
                        format!("mediator `{}` has the wrong type", c.mor_name(med)),
                    );
                    continue;
                }
                for (leg, &kj) in self.cocone.iter().zip(&k) {
                    if c.compose(med, *leg) != kj {
                        report.push(
                            Law::Section,
                            format!("mediator `{}` does not factor the cocone", c.mor_name(med)),
                        );
                    }
                }
                for &f in c.outgoing(x) {
                    let moved: Vec<Mor> = k.iter().map(|&kj| c.compose(f, kj)).collect();
                    if let Some(&other) = self.mediator.get(&(c.cod(f), moved)) {
                        if other != c.compose(f, med) {
                            report.push(
                                Law::Naturality,
                                format!("mediators are not natural along `{}`", c.mor_name(f)),
                            );
                        }
                    }
                }
            }
        }
        report
    }

    pub fn from_magma_nullary(m: &MagmalCategory, g: &IdentityMagma) -> Self {
        let c = &m.cat;
        let diagram = Diagram::discrete(c, &[]);
        let mediator = c.objects().map(|x| ((x, Vec::new()), g.eta[x.idx()])).collect();
        WeakColimitData {
            diagram,
            apex: m.unit_obj(),
            cocone: Vec::new(),
            mediator,
        }
    }

    pub fn from_magma_binary(m: &MagmalCategory, g: &IdentityMagma, a: Obj, b: Obj) -> Self {
        let c = &m.cat;
        let diagram = Diagram::discrete(c, &[a, b]);
        let cocone = vec![left_coprojection(m, g, &a, &b), right_coprojection(m, g, &a, &b)];
        let mut mediator = BTreeMap::new();
        for x in c.objects() {
            for k in diagram.cocones(c, x) {
                let med = copairing(m, g, &k[0], &k[1]);
                mediator.insert((x, k), med);
            }
        }
        WeakColimitData {
            diagram,
            apex: m.tensor_obj(a, b),
            cocone,
            mediator,
        }
    }
}

/// Splits the idempotent `mediator(apex, cocone)` and pushes the legs
/// through the retraction. `Ok(None)` when the idempotent does not split.
pub fn colimit_from_weak(w: &WeakColimitData, c: &FinCat) -> Result<Option<(Obj, Vec<Mor>)>> {
    let e = *w
        .mediator
        .get(&(w.apex, w.cocone.clone()))
        .ok_or_else(|| Error::InvariantViolated("no mediator for the cocone itself".into()))?;
    let e = Idempotent::new(c, e)?;
    let Some(sp) = split_idempotent(c, &e) else {
        return Ok(None);
    };
    let legs: Vec<Mor> = w.cocone.iter().map(|&l| c.compose(sp.retraction, l)).collect();
    if !is_colimit(c, &w.diagram, sp.summand, &legs) {
        return Err(Error::InvariantViolated(format!(
            "split cocone on `{}` is not a colimit",
            c.obj_name(sp.summand)
        )));
    }
    Ok(Some((sp.summand, legs)))
}

/// The Karoubi envelope of a finite category.
///
/// `objects[k] = (A, p)` and `underlying[f]` is the morphism of the base
/// that morphism `f` of the envelope carries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Karoubi {
    pub category: FinCat,
    pub objects: Vec<(Obj, Mor)>,
    pub underlying: Vec<Mor>,
    pub embedding: Functor,
}

impl Karoubi {
    pub fn object_of(&self, a: Obj, p: Mor) -> Option<Obj> {
        self.objects.iter().position(|&o| o == (a, p)).map(|i| Obj(i as u32))
    }

    /// The morphism `(A,p) -> (B,q)` carried by `f`, if `q . f . p = f`.
    pub fn morphism_of(&self, from: Obj, to: Obj, f: Mor) -> Option<Mor> {
        self.category
            .hom(from, to)
            .iter()
            .copied()
            .find(|&k| self.underlying[k.idx()] == f)
    }
}

pub fn karoubi_object_name(c: &FinCat, a: Obj, p: Mor) -> String {
    format!("({}|{})", c.obj_name(a), c.mor_name(p))
}

/// Objects are the idempotents `(A, p)`; morphisms `(A,p) -> (B,q)` are
/// the `f : A -> B` with `q . f . p = f`; the identity of `(A, p)` is `p`.
pub fn karoubi_envelope(c: &FinCat) -> Karoubi {
    let mut objects = Vec::new();
    for a in c.objects() {
        for &p in c.hom(a, a) {
            if c.compose(p, p) == p {
                objects.push((a, p));
            }
        }
    }
    let names: Vec<String> = objects.iter().map(|&(a, p)| karoubi_object_name(c, a, p)).collect();
    let mut decls = Vec::new();
    let mut underlying = Vec::new();
    for (i, &(a, p)) in objects.iter().enumerate() {
        for (j, &(b, q)) in objects.iter().enumerate() {
            for &f in c.hom(a, b) {
                if c.path(&[p, f, q]) == f {
                    decls.push((
                        format!("{}@{}->{}", c.mor_name(f), names[i], names[j]),
                        Obj(i as u32),
                        Obj(j as u32),
                    ));
                    underlying.push(f);
                }
            }
        }
    }
    let mut k = FinCat::new(names, decls).expect("envelope names are distinct");
    for (i, &(_, p)) in objects.iter().enumerate() {
        let o = Obj(i as u32);
        let id = k
            .hom(o, o)
            .iter()
            .copied()
            .find(|&m| underlying[m.idx()] == p)
            .expect("p is a morphism (A,p) -> (A,p)");
        k.set_identity(o, id);
    }
    for g in k.morphisms().collect::<Vec<_>>() {
        for f in k.incoming(k.dom(g)).to_vec() {
            let h = c.compose(underlying[g.idx()], underlying[f.idx()]);
            let target = k
                .hom(k.dom(f), k.cod(g))
                .iter()
                .copied()
                .find(|&m| underlying[m.idx()] == h)
                .expect("composites stay inside the envelope");
            k.set_composite(g, f, target).expect("composable by construction");
        }
    }
    let kar = Karoubi {
        category: k,
        objects,
        underlying,
        embedding: Functor {
            on_objects: Vec::new(),
            on_morphisms: Vec::new(),
        },
    };
    let on_objects: Vec<Obj> = c
        .objects()
        .map(|a| kar.object_of(a, c.id(a)).expect("identity idempotent"))
        .collect();
    let on_morphisms = c
        .morphisms()
        .map(|f| {
            kar.morphism_of(on_objects[c.dom(f).idx()], on_objects[c.cod(f).idx()], f)
                .expect("every f is in the envelope")
        })
        .collect();
    Karoubi {
        embedding: Functor {
            on_objects,
            on_morphisms,
        },
        ..kar
    }
}

/// Magmal (and optional magma and symmetric) structure carried over to
/// the Karoubi envelope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transported {
    pub karoubi: Karoubi,
    pub magmal: MagmalCategory,
    pub magma: Option<IdentityMagma>,
    pub symmetry: Option<SymmetricStructure>,
}

/// `(A,p) ⊗ (B,q) = (A ⊗ B, p ⊗ q)`, unit `(I, 1)`, and every structure map
/// conjugated by the idempotents on its ends, e.g.
/// `μ_(A,p) = p . μ_A . (p ⊗ p)`. All outputs are re-validated.
pub fn transport_to_karoubi(
    m: &MagmalCategory,
    g: Option<&IdentityMagma>,
    s: Option<&SymmetricStructure>,
) -> Result<Transported> {
    let c = &m.cat;
    let kar = karoubi_envelope(c);
    let k = &kar.category;
    let find_obj = |a: Obj, p: Mor| kar.object_of(a, p).expect("tensor of idempotents is idempotent");
    let carry = |from: Obj, to: Obj, f: Mor| -> Result<Mor> {
        kar.morphism_of(from, to, f).ok_or_else(|| {
            Error::InvariantViolated(format!(
                "`{}` is not a morphism {} -> {} of the envelope",
                c.mor_name(f),
                k.obj_name(from),
                k.obj_name(to)
            ))
        })
    };

    let mut tensor_objects = Vec::new();
    for &(a, p) in &kar.objects {
        for &(b, q) in &kar.objects {
            tensor_objects.push(find_obj(m.tensor_obj(a, b), m.tensor_mor(p, q)));
        }
    }
    let n = k.n_objects();
    let mut tensor_morphisms = Vec::new();
    for f in k.morphisms() {
        for h in k.morphisms() {
            let from = tensor_objects[k.dom(f).idx() * n + k.dom(h).idx()];
            let to = tensor_objects[k.cod(f).idx() * n + k.cod(h).idx()];
            tensor_morphisms.push(carry(
                from,
                to,
                m.tensor_mor(kar.underlying[f.idx()], kar.underlying[h.idx()]),
            )?);
        }
    }
    let i = m.unit_obj();
    let unit = kar.embedding.obj(i);
    let t = |x: Obj, y: Obj| tensor_objects[x.idx() * n + y.idx()];
    let mut lambda = Vec::new();
    let mut rho = Vec::new();
    for (o, &(a, p)) in kar.objects.iter().enumerate() {
        let o = Obj(o as u32);
        lambda.push(carry(o, t(unit, o), c.compose(m.lambda_at(a), p))?);
        rho.push(carry(o, t(o, unit), c.compose(m.rho_at(a), p))?);
    }
    let magmal = MagmalCategory {
        cat: k.clone(),
        tensor_objects: tensor_objects.clone(),
        tensor_morphisms,
        unit: UnitData { unit, lambda, rho },
    };
    let report = validate_magmal(&magmal);
    if !report.is_ok() {
        return Err(Error::InvariantViolated(format!(
            "transported magmal structure fails: {report}"
        )));
    }

    let magma = match g {
        None => None,
        Some(g) => {
            let mut eta = Vec::new();
            let mut mu = Vec::new();
            for (o, &(a, p)) in kar.objects.iter().enumerate() {
                let o = Obj(o as u32);
                eta.push(carry(unit, o, c.compose(p, g.eta[a.idx()]))?);
                mu.push(carry(t(o, o), o, c.path(&[m.tensor_mor(p, p), g.mu[a.idx()], p]))?);
            }
            let tg = IdentityMagma { eta, mu };
            let report = validate_identity_magma(&magmal, &tg);
            if !report.is_ok() {
                return Err(Error::InvariantViolated(format!("transported magma fails: {report}")));
            }
            Some(tg)
        }
    };

    let symmetry = match s {
        None => None,
        Some(s) => {
            let mut alpha = Vec::new();
            let objs: Vec<Obj> = k.objects().collect();
            for &x in &objs {
                for &y in &objs {
                    for &z in &objs {
                        let (a, p) = kar.objects[x.idx()];
                        let (b, q) = kar.objects[y.idx()];
                        let (d, r) = kar.objects[z.idx()];
                        let under = c.compose(s.alpha(m, a, b, d), m.tensor_mor(m.tensor_mor(p, q), r));
                        alpha.push(carry(t(t(x, y), z), t(x, t(y, z)), under)?);
                    }
                }
            }
            let mut sigma = Vec::new();
            for &x in &objs {
                for &y in &objs {
                    let (a, p) = kar.objects[x.idx()];
                    let (b, q) = kar.objects[y.idx()];
                    let under = c.compose(s.sigma(m, a, b), m.tensor_mor(p, q));
                    sigma.push(carry(t(x, y), t(y, x), under)?);
                }
            }
            let ts = SymmetricStructure { alpha, sigma };
            let report = validate_symmetric(&magmal, &ts);
            if !report.is_ok() {
                return Err(Error::InvariantViolated(format!(
                    "transported symmetry fails: {report}"
                )));
            }
            Some(ts)
        }
    };

    Ok(Transported {
        karoubi: kar,
        magmal,
        magma,
        symmetry,
    })
}
