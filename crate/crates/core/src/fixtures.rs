//! Small named categories used throughout the tests, the acceptance
//! suite, and the shipped bundle files.

use crate::category::{CategoryBuilder, FinCat, Mor, Obj};
use crate::magmal::{IdentityMagma, MagmalCategory, SymmetricStructure, UnitData};

#[derive(Debug, Clone)]
pub struct Fixture {
    pub name: &'static str,
    pub cat: FinCat,
    pub magmal: Option<MagmalCategory>,
    pub symmetry: Option<SymmetricStructure>,
    pub magma: Option<IdentityMagma>,
    pub alternate_unit: Option<UnitData>,
}

impl Fixture {
    fn bare(name: &'static str, cat: FinCat) -> Self {
        Fixture {
            name,
            cat,
            magmal: None,
            symmetry: None,
            magma: None,
            alternate_unit: None,
        }
    }
}

/// The unique morphism `a -> b`; panics when the hom-set is not a singleton.
pub fn unique(c: &FinCat, a: Obj, b: Obj) -> Mor {
    match c.hom(a, b) {
        [f] => *f,
        other => panic!(
            "expected exactly one morphism {} -> {}, found {}",
            c.obj_name(a),
            c.obj_name(b),
            other.len()
        ),
    }
}

/// Assembles tensor and unitor tables from per-entry rules.
pub fn magmal_from(
    cat: &FinCat,
    on_objects: impl Fn(Obj, Obj) -> Obj,
    on_morphisms: impl Fn(Mor, Mor) -> Mor,
    unit: Obj,
    lambda: impl Fn(Obj) -> Mor,
    rho: impl Fn(Obj) -> Mor,
) -> MagmalCategory {
    let mut tensor_objects = Vec::new();
    for a in cat.objects() {
        for b in cat.objects() {
            tensor_objects.push(on_objects(a, b));
        }
    }
    let mut tensor_morphisms = Vec::new();
    for f in cat.morphisms() {
        for g in cat.morphisms() {
            tensor_morphisms.push(on_morphisms(f, g));
        }
    }
    MagmalCategory {
        cat: cat.clone(),
        tensor_objects,
        tensor_morphisms,
        unit: UnitData {
            unit,
            lambda: cat.objects().map(&lambda).collect(),
            rho: cat.objects().map(&rho).collect(),
        },
    }
}

/// Associator and braiding tables from per-entry rules.
pub fn symmetry_from(
    cat: &FinCat,
    alpha: impl Fn(Obj, Obj, Obj) -> Mor,
    sigma: impl Fn(Obj, Obj) -> Mor,
) -> SymmetricStructure {
    let objs: Vec<Obj> = cat.objects().collect();
    let mut a_tab = Vec::new();
    for &a in &objs {
        for &b in &objs {
            for &c in &objs {
                a_tab.push(alpha(a, b, c));
            }
        }
    }
    let mut s_tab = Vec::new();
    for &a in &objs {
        for &b in &objs {
            s_tab.push(sigma(a, b));
        }
    }
    SymmetricStructure {
        alpha: a_tab,
        sigma: s_tab,
    }
}

/// Coherence data for a thin category, where each component is forced.
fn thin_symmetry(m: &MagmalCategory) -> SymmetricStructure {
    let c = &m.cat;
    let t = |a, b| m.tensor_obj(a, b);
    symmetry_from(
        c,
        |a, b, d| unique(c, t(t(a, b), d), t(a, t(b, d))),
        |a, b| unique(c, t(a, b), t(b, a)),
    )
}

/// One-object strict structures: every coherence component is the identity.
fn strict_symmetry(m: &MagmalCategory) -> SymmetricStructure {
    let one = m.cat.id(Obj(0));
    symmetry_from(&m.cat, |_, _, _| one, |_, _| one)
}

/// One object `*` with its identity `1`.
pub fn terminal() -> Fixture {
    let cat = crate::category::terminal_category();
    let one = cat.id(Obj(0));
    let m = magmal_from(&cat, |_, _| Obj(0), |_, _| one, Obj(0), |_| one, |_| one);
    let s = strict_symmetry(&m);
    Fixture {
        magmal: Some(m),
        symmetry: Some(s),
        magma: Some(IdentityMagma {
            eta: vec![one],
            mu: vec![one],
        }),
        ..Fixture::bare("terminal", cat)
    }
}

fn two_chain() -> FinCat {
    CategoryBuilder::new()
        .object("0")
        .object("1")
        .identity("0", "id0")
        .identity("1", "id1")
        .morphism("u", "0", "1")
        .build()
        .expect("chain 0 -> 1")
}

fn thin_tensor(cat: &FinCat, on_objects: impl Fn(Obj, Obj) -> Obj + Copy, unit: Obj) -> MagmalCategory {
    magmal_from(
        cat,
        on_objects,
        |f, g| {
            unique(
                cat,
                on_objects(cat.dom(f), cat.dom(g)),
                on_objects(cat.cod(f), cat.cod(g)),
            )
        },
        unit,
        |a| unique(cat, a, on_objects(unit, a)),
        |a| unique(cat, a, on_objects(a, unit)),
    )
}

/// The chain `0 -> 1` with `⊗ = max` and unit `0`.
pub fn join() -> Fixture {
    let cat = two_chain();
    let m = thin_tensor(&cat, |a, b| a.max(b), Obj(0));
    let s = thin_symmetry(&m);
    let g = IdentityMagma {
        eta: cat.objects().map(|a| unique(&cat, Obj(0), a)).collect(),
        mu: cat.objects().map(|a| cat.id(a)).collect(),
    };
    Fixture {
        magmal: Some(m),
        symmetry: Some(s),
        magma: Some(g),
        ..Fixture::bare("join", cat)
    }
}

/// The chain `0 -> 1` with `⊗ = min` and unit `1`.
pub fn meet() -> Fixture {
    let cat = two_chain();
    let m = thin_tensor(&cat, |a, b| a.min(b), Obj(1));
    let s = thin_symmetry(&m);
    Fixture {
        magmal: Some(m),
        symmetry: Some(s),
        ..Fixture::bare("meet", cat)
    }
}

/// One object with endomorphisms `{1, x}` and `x . x` given; the tensor on
/// morphisms is the same multiplication.
fn one_object_monoid(x: &str, xx: &str) -> FinCat {
    CategoryBuilder::new()
        .object("*")
        .identity("*", "1")
        .morphism(x, "*", "*")
        .compose(x, x, xx)
        .build()
        .expect("one-object monoid")
}

fn monoid_tensor(cat: &FinCat, unitor: Mor) -> MagmalCategory {
    magmal_from(
        cat,
        |_, _| Obj(0),
        |f, g| cat.compose(f, g),
        Obj(0),
        |_| unitor,
        |_| unitor,
    )
}

/// `Z/2` as a one-object category, tensor = group multiplication.
pub fn z2() -> Fixture {
    let cat = one_object_monoid("g", "1");
    let m = monoid_tensor(&cat, cat.id(Obj(0)));
    let s = strict_symmetry(&m);
    Fixture {
        magmal: Some(m),
        symmetry: Some(s),
        ..Fixture::bare("z2", cat)
    }
}

/// The walking idempotent, without any tensor.
pub fn walking_idempotent() -> Fixture {
    Fixture::bare("walking-idempotent", one_object_monoid("e", "e"))
}

/// The walking idempotent with the monoid multiplication as a strict tensor.
pub fn walking_idempotent_tensor() -> Fixture {
    let cat = one_object_monoid("e", "e");
    let m = monoid_tensor(&cat, cat.id(Obj(0)));
    let s = strict_symmetry(&m);
    Fixture {
        magmal: Some(m),
        symmetry: Some(s),
        ..Fixture::bare("walking-idempotent-tensor", cat)
    }
}

/// The walking idempotent with the monoid tensor and both unitors equal to
/// `e`: a colax structure whose unitors are not invertible.
pub fn colax_idempotent() -> Fixture {
    let cat = one_object_monoid("e", "e");
    let e = cat.morphism("e").expect("declared above");
    let m = monoid_tensor(&cat, e);
    let s = strict_symmetry(&m);
    Fixture {
        magmal: Some(m),
        symmetry: Some(s),
        ..Fixture::bare("colax-idempotent", cat)
    }
}

/// The indiscrete category on `{I, I'}` with `A ⊗ B = A`, `f ⊗ g = f`.
/// Both objects carry a unit structure; `I` is the primary one.
pub fn double_unit() -> Fixture {
    let cat = CategoryBuilder::new()
        .object("I")
        .object("I'")
        .identity("I", "1_I")
        .identity("I'", "1_I'")
        .morphism("i", "I", "I'")
        .morphism("j", "I'", "I")
        .compose("j", "i", "1_I")
        .compose("i", "j", "1_I'")
        .build()
        .expect("indiscrete pair");
    let unit_at = |u: Obj| UnitData {
        unit: u,
        lambda: cat.objects().map(|a| unique(&cat, a, u)).collect(),
        rho: cat.objects().map(|a| cat.id(a)).collect(),
    };
    let mut m = magmal_from(&cat, |a, _| a, |f, _| f, Obj(0), |_| Mor(0), |_| Mor(0));
    m.unit = unit_at(Obj(0));
    let s = symmetry_from(&cat, |a, _, _| cat.id(a), |a, b| unique(&cat, a, b));
    let g = IdentityMagma {
        eta: cat.objects().map(|a| unique(&cat, Obj(0), a)).collect(),
        mu: cat.objects().map(|a| cat.id(a)).collect(),
    };
    Fixture {
        magmal: Some(m),
        symmetry: Some(s),
        magma: Some(g),
        alternate_unit: Some(unit_at(Obj(1))),
        ..Fixture::bare("double-unit", cat)
    }
}

/// Every fixture, in a fixed order.
pub fn all() -> Vec<Fixture> {
    vec![
        terminal(),
        join(),
        meet(),
        z2(),
        walking_idempotent(),
        walking_idempotent_tensor(),
        double_unit(),
        colax_idempotent(),
    ]
}

/// Looks a fixture up by its name.
pub fn by_name(name: &str) -> Option<Fixture> {
    all().into_iter().find(|f| f.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_fixture_is_a_category() {
        for fx in all() {
            assert!(fx.cat.validate().is_ok(), "{}: {}", fx.name, fx.cat.validate());
        }
    }

    #[test]
    fn supplied_magmas_validate() {
        for fx in all() {
            if let (Some(m), Some(g)) = (&fx.magmal, &fx.magma) {
                assert!(g.validate(m).is_ok(), "{}: {}", fx.name, g.validate(m));
            }
        }
    }

    #[test]
    fn colax_fixture_is_valid_but_not_unital() {
        let m = colax_idempotent().magmal.unwrap();
        assert!(m.validate().is_ok());
        assert!(!m.is_unital());
    }
}
