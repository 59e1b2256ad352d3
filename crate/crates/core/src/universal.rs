//! Brute-force universal-property oracles.
//!
//! Everything else in the crate that claims an object is initial or a
//! cospan is a coproduct is checked against these functions, which work
//! by full enumeration of hom-sets.

use std::collections::HashMap;

use crate::category::{opposite, FinCat, Mor, Obj};
use crate::functor::Functor;

/// A cospan `left: A -> apex <- B :right`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Cospan {
    pub apex: Obj,
    pub left: Mor,
    pub right: Mor,
}

impl Cospan {
    pub fn is_well_formed(&self, c: &FinCat) -> bool {
        c.cod(self.left) == self.apex && c.cod(self.right) == self.apex
    }
}

/// A span `left: apex -> A`, `right: apex -> B`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Span {
    pub apex: Obj,
    pub left: Mor,
    pub right: Mor,
}

/// `|hom(i, X)| = 1` for every object `X`.
pub fn is_initial(c: &FinCat, i: Obj) -> bool {
    c.objects().all(|x| c.hom(i, x).len() == 1)
}

/// `|hom(X, t)| = 1` for every object `X`.
pub fn is_terminal(c: &FinCat, t: Obj) -> bool {
    c.objects().all(|x| c.hom(x, t).len() == 1)
}

/// The unique morphism out of an initial object.
pub fn initial_arrow(c: &FinCat, i: Obj, x: Obj) -> Option<Mor> {
    match c.hom(i, x) {
        [m] => Some(*m),
        _ => None,
    }
}

/// Outcome of checking one target of a would-be coproduct.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MediatorCount {
    pub target: Obj,
    pub a: Mor,
    pub b: Mor,
    pub mediators: usize,
}

/// The first pair `(a, b)` into some target that does not have exactly one
/// mediating morphism out of the apex, if any.
pub fn coproduct_failure(c: &FinCat, cospan: &Cospan) -> Option<MediatorCount> {
    let a_obj = c.dom(cospan.left);
    let b_obj = c.dom(cospan.right);
    for x in c.objects() {
        let mut counts: HashMap<(Mor, Mor), usize> = HashMap::new();
        for &m in c.hom(cospan.apex, x) {
            *counts
                .entry((c.compose(m, cospan.left), c.compose(m, cospan.right)))
                .or_default() += 1;
        }
        for &a in c.hom(a_obj, x) {
            for &b in c.hom(b_obj, x) {
                let n = counts.get(&(a, b)).copied().unwrap_or(0);
                if n != 1 {
                    return Some(MediatorCount {
                        target: x,
                        a,
                        b,
                        mediators: n,
                    });
                }
            }
        }
    }
    None
}

/// True iff every pair `(a: A -> X, b: B -> X)` factors through the cospan
/// by exactly one `m: apex -> X`.
pub fn is_coproduct(c: &FinCat, cospan: &Cospan) -> bool {
    cospan.is_well_formed(c) && coproduct_failure(c, cospan).is_none()
}

/// Dual of [`is_coproduct`], checked in the opposite category.
pub fn is_product(c: &FinCat, span: &Span) -> bool {
    let op = opposite(c);
    is_coproduct(
        &op,
        &Cospan {
            apex: span.apex,
            left: span.left,
            right: span.right,
        },
    )
}

/// The unique `m: apex -> target` with `m . left = a` and `m . right = b`.
pub fn copair(c: &FinCat, cospan: &Cospan, a: Mor, b: Mor) -> Option<Mor> {
    let x = c.cod(a);
    let mut found = c
        .hom(cospan.apex, x)
        .iter()
        .copied()
        .filter(|&m| c.compose(m, cospan.left) == a && c.compose(m, cospan.right) == b);
    let m = found.next()?;
    found.next().is_none().then_some(m)
}

/// A diagram `shape -> c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    pub shape: FinCat,
    pub functor: Functor,
}

impl Diagram {
    /// The discrete diagram picking out `objects`.
    pub fn discrete(c: &FinCat, objects: &[Obj]) -> Diagram {
        let names: Vec<String> = (0..objects.len()).map(|i| format!("j{i}")).collect();
        let morphisms = (0..objects.len())
            .map(|i| (format!("1_j{i}"), Obj(i as u32), Obj(i as u32)))
            .collect();
        let mut shape = FinCat::new(names, morphisms).expect("distinct names");
        for i in 0..objects.len() {
            let j = Obj(i as u32);
            let m = Mor(i as u32);
            shape.set_identity(j, m);
            shape.set_composite(m, m, m).expect("endo");
        }
        let functor = Functor {
            on_objects: objects.to_vec(),
            on_morphisms: objects.iter().map(|&a| c.id(a)).collect(),
        };
        Diagram { shape, functor }
    }

    /// Every cocone from the diagram to `x`, in lexicographic order.
    pub fn cocones(&self, c: &FinCat, x: Obj) -> Vec<Vec<Mor>> {
        let mut out = vec![Vec::new()];
        for j in self.shape.objects() {
            let options = c.hom(self.functor.obj(j), x);
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    options.iter().map(move |&m| {
                        let mut v = prefix.clone();
                        v.push(m);
                        v
                    })
                })
                .collect();
        }
        out.retain(|k| self.is_cocone(c, k));
        out
    }

    pub fn is_cocone(&self, c: &FinCat, legs: &[Mor]) -> bool {
        legs.len() == self.shape.n_objects()
            && self.shape.morphisms().all(|u| {
                let (i, j) = (self.shape.dom(u), self.shape.cod(u));
                c.compose(legs[j.idx()], self.functor.mor(u)) == legs[i.idx()]
            })
    }
}

/// True iff every cocone to every object factors through `legs` uniquely.
pub fn is_colimit(c: &FinCat, d: &Diagram, apex: Obj, legs: &[Mor]) -> bool {
    if !d.is_cocone(c, legs) || legs.iter().any(|&l| c.cod(l) != apex) {
        return false;
    }
    c.objects().all(|x| {
        let mut counts: HashMap<Vec<Mor>, usize> = HashMap::new();
        for &m in c.hom(apex, x) {
            let k: Vec<Mor> = legs.iter().map(|&l| c.compose(m, l)).collect();
            *counts.entry(k).or_default() += 1;
        }
        d.cocones(c, x).iter().all(|k| counts.get(k) == Some(&1))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn initial_objects() {
        let j = fixtures::join().cat;
        assert!(is_initial(&j, j.object("0").unwrap()));
        assert!(!is_initial(&j, j.object("1").unwrap()));
        let z = fixtures::z2().cat;
        assert!(!is_initial(&z, z.object("*").unwrap()));
    }

    #[test]
    fn join_is_coproduct() {
        let j = fixtures::join().cat;
        let one = j.object("1").unwrap();
        let cospan = Cospan {
            apex: one,
            left: j.morphism("u").unwrap(),
            right: j.morphism("id1").unwrap(),
        };
        assert!(is_coproduct(&j, &cospan));
    }

    #[test]
    fn terminal_cospan_is_coproduct() {
        let t = fixtures::terminal().cat;
        let id = t.id(Obj(0));
        assert!(is_coproduct(
            &t,
            &Cospan {
                apex: Obj(0),
                left: id,
                right: id
            }
        ));
    }

    #[test]
    fn z2_identity_cospan_is_not_coproduct() {
        let z = fixtures::z2().cat;
        let one = z.morphism("1").unwrap();
        let cospan = Cospan {
            apex: Obj(0),
            left: one,
            right: one,
        };
        assert!(!is_coproduct(&z, &cospan));
        let fail = coproduct_failure(&z, &cospan).unwrap();
        // (1, g) has no mediator since m . 1 = 1 and m . 1 = g cannot both hold
        assert_eq!(fail.mediators, 0);
    }

    #[test]
    fn coproduct_invariant_under_iso_apex() {
        // double-unit: the apex I can be swapped for I' by conjugating along the unique iso
        let fx = fixtures::double_unit();
        let c = &fx.cat;
        let (i, ip) = (c.object("I").unwrap(), c.object("I'").unwrap());
        let iso = c.hom(i, ip)[0];
        let cospan = Cospan {
            apex: i,
            left: c.id(i),
            right: c.hom(ip, i)[0],
        };
        assert!(is_coproduct(c, &cospan));
        let moved = Cospan {
            apex: ip,
            left: c.compose(iso, cospan.left),
            right: c.compose(iso, cospan.right),
        };
        assert!(is_coproduct(c, &moved));
    }

    #[test]
    fn discrete_colimits_match_oracles() {
        let j = fixtures::join().cat;
        let (o0, o1) = (j.object("0").unwrap(), j.object("1").unwrap());
        let empty = Diagram::discrete(&j, &[]);
        assert!(is_colimit(&j, &empty, o0, &[]));
        assert!(!is_colimit(&j, &empty, o1, &[]));
        let pair = Diagram::discrete(&j, &[o0, o1]);
        let legs = [j.morphism("u").unwrap(), j.morphism("id1").unwrap()];
        assert!(is_colimit(&j, &pair, o1, &legs));
    }

    #[test]
    fn products_in_meet_poset() {
        let fx = fixtures::meet();
        let c = &fx.cat;
        let (o0, o1) = (c.object("0").unwrap(), c.object("1").unwrap());
        let span = Span {
            apex: o0,
            left: c.id(o0),
            right: c.hom(o0, o1)[0],
        };
        assert!(is_product(c, &span));
        assert!(is_terminal(c, o1));
    }
}
