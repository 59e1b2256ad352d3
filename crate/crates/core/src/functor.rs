//! Functors and natural transformations between finite categories.
//!
//! Both are stored as plain index tables; the categories they act on are
//! passed explicitly to every check.

use crate::category::{FinCat, Mor, Obj, Product};
use crate::error::{Result, SearchLimit};
use crate::report::{Law, ValidationReport};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Functor {
    pub on_objects: Vec<Obj>,
    pub on_morphisms: Vec<Mor>,
}

impl Functor {
    #[inline]
    pub fn obj(&self, a: Obj) -> Obj {
        self.on_objects[a.idx()]
    }

    #[inline]
    pub fn mor(&self, f: Mor) -> Mor {
        self.on_morphisms[f.idx()]
    }

    pub fn identity(c: &FinCat) -> Self {
        Functor {
            on_objects: c.objects().collect(),
            on_morphisms: c.morphisms().collect(),
        }
    }

    /// The functor `source -> target` constant at `value`.
    pub fn constant(source: &FinCat, target: &FinCat, value: Obj) -> Self {
        Functor {
            on_objects: vec![value; source.n_objects()],
            on_morphisms: vec![target.id(value); source.n_morphisms()],
        }
    }

    /// `then . self`.
    pub fn then(&self, then: &Functor) -> Functor {
        Functor {
            on_objects: self.on_objects.iter().map(|&a| then.obj(a)).collect(),
            on_morphisms: self.on_morphisms.iter().map(|&f| then.mor(f)).collect(),
        }
    }

    /// Checks that the tables preserve endpoints, identities and composition.
    pub fn validate(&self, source: &FinCat, target: &FinCat) -> ValidationReport {
        let mut report = ValidationReport::new();
        if self.on_objects.len() != source.n_objects() || self.on_morphisms.len() != source.n_morphisms() {
            report.push(Law::MissingEntry, "functor tables do not cover the source category");
            return report;
        }
        for f in source.morphisms() {
            let img = self.mor(f);
            if target.dom(img) != self.obj(source.dom(f)) || target.cod(img) != self.obj(source.cod(f)) {
                report.push(
                    Law::Typing,
                    format!(
                        "image `{}` of `{}` has the wrong endpoints",
                        target.mor_name(img),
                        source.mor_name(f)
                    ),
                );
            }
        }
        if !report.is_ok() {
            return report;
        }
        for a in source.objects() {
            let img = self.mor(source.id(a));
            if img != target.id(self.obj(a)) {
                report.push(
                    Law::Functoriality,
                    format!(
                        "identity on `{}` maps to `{}`",
                        source.obj_name(a),
                        target.mor_name(img)
                    ),
                );
            }
        }
        for g in source.morphisms() {
            for &f in source.incoming(source.dom(g)) {
                let lhs = self.mor(source.compose(g, f));
                let rhs = target.compose(self.mor(g), self.mor(f));
                if lhs != rhs {
                    report.push(
                        Law::Functoriality,
                        format!(
                            "F(`{}` . `{}`) = `{}` but F`{}` . F`{}` = `{}`",
                            source.mor_name(g),
                            source.mor_name(f),
                            target.mor_name(lhs),
                            source.mor_name(g),
                            source.mor_name(f),
                            target.mor_name(rhs)
                        ),
                    );
                }
            }
        }
        report
    }
}

/// The diagonal `X ↦ (X, X)` into `product_category(c, c)`.
pub fn diagonal_functor(c: &FinCat) -> Functor {
    let p = Product::of(c, c);
    Functor {
        on_objects: c.objects().map(|a| p.obj(a, a)).collect(),
        on_morphisms: c.morphisms().map(|f| p.mor(f, f)).collect(),
    }
}

/// A family of components indexed by the objects of the source category.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NatTrans {
    pub components: Vec<Mor>,
}

impl NatTrans {
    #[inline]
    pub fn at(&self, a: Obj) -> Mor {
        self.components[a.idx()]
    }

    /// Reports ill-typed components and failing naturality squares
    /// `G f . α_A = α_B . F f`.
    pub fn validate(&self, source: &FinCat, target: &FinCat, f: &Functor, g: &Functor) -> ValidationReport {
        let mut report = ValidationReport::new();
        if self.components.len() != source.n_objects() {
            report.push(Law::MissingEntry, "component family does not cover every object");
            return report;
        }
        for a in source.objects() {
            let c = self.at(a);
            if target.dom(c) != f.obj(a) || target.cod(c) != g.obj(a) {
                report.push(
                    Law::Typing,
                    format!(
                        "component `{}` at `{}` has the wrong type",
                        target.mor_name(c),
                        source.obj_name(a)
                    ),
                );
            }
        }
        if !report.is_ok() {
            return report;
        }
        for m in source.morphisms() {
            let (a, b) = (source.dom(m), source.cod(m));
            let lhs = target.compose(g.mor(m), self.at(a));
            let rhs = target.compose(self.at(b), f.mor(m));
            if lhs != rhs {
                report.push(
                    Law::Naturality,
                    format!(
                        "square at `{}` fails: `{}` vs `{}`",
                        source.mor_name(m),
                        target.mor_name(lhs),
                        target.mor_name(rhs)
                    ),
                );
            }
        }
        report
    }
}

/// Every natural transformation `f ⇒ g`, in lexicographic order of
/// component choices (objects in order, each hom-set in declaration order).
///
/// The candidate space is the product of the component hom-sets; it is
/// checked against `limit` before searching.
pub fn natural_transformations_between(
    source: &FinCat,
    target: &FinCat,
    f: &Functor,
    g: &Functor,
    limit: SearchLimit,
) -> Result<Vec<NatTrans>> {
    let choices: Vec<&[Mor]> = source.objects().map(|a| target.hom(f.obj(a), g.obj(a))).collect();
    let space = choices
        .iter()
        .try_fold(1u128, |acc, c| acc.checked_mul(c.len() as u128))
        .unwrap_or(u128::MAX);
    limit.admit(space)?;
    if choices.iter().any(|c| c.is_empty()) {
        return Ok(Vec::new());
    }

    // squares whose later endpoint is object k are checked once k is assigned
    let mut squares: Vec<Vec<Mor>> = vec![Vec::new(); source.n_objects()];
    for m in source.morphisms() {
        let k = source.dom(m).max(source.cod(m));
        squares[k.idx()].push(m);
    }

    let mut out = Vec::new();
    let mut current: Vec<Mor> = Vec::with_capacity(source.n_objects());
    search(source, target, f, g, &choices, &squares, &mut current, &mut out);
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn search(
    source: &FinCat,
    target: &FinCat,
    f: &Functor,
    g: &Functor,
    choices: &[&[Mor]],
    squares: &[Vec<Mor>],
    current: &mut Vec<Mor>,
    out: &mut Vec<NatTrans>,
) {
    let k = current.len();
    if k == choices.len() {
        out.push(NatTrans {
            components: current.clone(),
        });
        return;
    }
    for &c in choices[k] {
        current.push(c);
        let ok = squares[k].iter().all(|&m| {
            let (a, b) = (source.dom(m), source.cod(m));
            target.compose(g.mor(m), current[a.idx()]) == target.compose(current[b.idx()], f.mor(m))
        });
        if ok {
            search(source, target, f, g, choices, squares, current, out);
        }
        current.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::product_category;
    use crate::fixtures;

    #[test]
    fn diagonal_is_a_functor() {
        for fx in fixtures::all() {
            let c = &fx.cat;
            let cc = product_category(c, c);
            assert!(diagonal_functor(c).validate(c, &cc).is_ok(), "{}", fx.name);
        }
    }

    #[test]
    fn diagonal_examples() {
        let t = fixtures::terminal().cat;
        let d = diagonal_functor(&t);
        assert_eq!(d.on_objects, vec![Obj(0)]);

        let j = fixtures::join().cat;
        let jj = product_category(&j, &j);
        let d = diagonal_functor(&j);
        assert_eq!(jj.obj_name(d.obj(j.object("1").unwrap())), "(1,1)");

        let z = fixtures::z2().cat;
        let zz = product_category(&z, &z);
        let d = diagonal_functor(&z);
        assert_eq!(zz.mor_name(d.mor(z.morphism("g").unwrap())), "(g,g)");
    }

    fn count_id_to_id(c: &FinCat) -> usize {
        let id = Functor::identity(c);
        natural_transformations_between(c, c, &id, &id, SearchLimit::DEFAULT)
            .unwrap()
            .len()
    }

    #[test]
    fn identity_transformations() {
        assert_eq!(count_id_to_id(&fixtures::terminal().cat), 1);
        assert_eq!(count_id_to_id(&fixtures::join().cat), 1);
    }

    #[test]
    fn no_point_of_z2_is_natural() {
        // constant-at-* ⇒ id with components η satisfying g . η = η
        let z = fixtures::z2().cat;
        let star = z.object("*").unwrap();
        let k = Functor::constant(&z, &z, star);
        let id = Functor::identity(&z);
        let found = natural_transformations_between(&z, &z, &k, &id, SearchLimit::DEFAULT).unwrap();
        assert!(found.is_empty());
    }

    #[test]
    fn limit_is_enforced() {
        let j = fixtures::join().cat;
        let id = Functor::identity(&j);
        let err = natural_transformations_between(&j, &j, &id, &id, SearchLimit(0)).unwrap_err();
        assert!(matches!(err, crate::Error::SizeLimitExceeded { .. }));
    }
}
