//! Finite categories stored as explicit composition tables.
//!
//! Objects and morphisms are addressed by dense indices ([`Obj`], [`Mor`])
//! that follow declaration order. Names are kept alongside for reporting
//! and serialization; two morphisms are equal exactly when their indices
//! (equivalently, their declared names) are.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::report::{Law, ValidationReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Obj(pub u32);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mor(pub u32);

impl Obj {
    #[inline]
    pub fn idx(self) -> usize {
        self.0 as usize
    }
}

impl Mor {
    #[inline]
    pub fn idx(self) -> usize {
        self.0 as usize
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct MorphismDecl {
    name: String,
    dom: Obj,
    cod: Obj,
}

/// A finite category given by object and morphism lists, an identity
/// assignment and a composition table over composable pairs.
///
/// Construction only checks that names are distinct and that table
/// entries are well-typed lookups; the category laws are checked by
/// [`FinCat::validate`]. Algorithms assume a validated category and treat
/// a missing or non-composable lookup as a programming error.
#[derive(Debug, Clone)]
pub struct FinCat {
    objects: Vec<String>,
    morphisms: Vec<MorphismDecl>,
    identities: Vec<Option<Mor>>,
    incoming: Vec<Vec<Mor>>,
    outgoing: Vec<Vec<Mor>>,
    homs: Vec<Vec<Mor>>,
    // position of each morphism inside `incoming[cod]`
    slot: Vec<u32>,
    // composites[g][slot(f)] = g . f, for f with cod f = dom g
    composites: Vec<Vec<Option<Mor>>>,
    object_index: HashMap<String, Obj>,
    morphism_index: HashMap<String, Mor>,
}

impl PartialEq for FinCat {
    fn eq(&self, other: &Self) -> bool {
        self.objects == other.objects
            && self.morphisms == other.morphisms
            && self.identities == other.identities
            && self.composites == other.composites
    }
}

impl Eq for FinCat {}

impl FinCat {
    /// Creates a category skeleton with no identities or composites filled in.
    pub fn new(objects: Vec<String>, morphisms: Vec<(String, Obj, Obj)>) -> Result<Self> {
        let mut object_index = HashMap::with_capacity(objects.len());
        for (i, name) in objects.iter().enumerate() {
            if object_index.insert(name.clone(), Obj(i as u32)).is_some() {
                return Err(Error::Malformed(format!("duplicate object `{name}`")));
            }
        }
        let n = objects.len();
        let mut morphism_index = HashMap::with_capacity(morphisms.len());
        let mut decls = Vec::with_capacity(morphisms.len());
        for (i, (name, dom, cod)) in morphisms.into_iter().enumerate() {
            if dom.idx() >= n || cod.idx() >= n {
                return Err(Error::Malformed(format!("morphism `{name}` has an unknown endpoint")));
            }
            if morphism_index.insert(name.clone(), Mor(i as u32)).is_some() {
                return Err(Error::Malformed(format!("duplicate morphism `{name}`")));
            }
            decls.push(MorphismDecl { name, dom, cod });
        }

        let mut incoming = vec![Vec::new(); n];
        let mut outgoing = vec![Vec::new(); n];
        let mut homs = vec![Vec::new(); n * n];
        let mut slot = vec![0u32; decls.len()];
        for (i, d) in decls.iter().enumerate() {
            let f = Mor(i as u32);
            slot[i] = incoming[d.cod.idx()].len() as u32;
            incoming[d.cod.idx()].push(f);
            outgoing[d.dom.idx()].push(f);
            homs[d.dom.idx() * n + d.cod.idx()].push(f);
        }
        let composites = decls.iter().map(|d| vec![None; incoming[d.dom.idx()].len()]).collect();

        Ok(FinCat {
            objects,
            morphisms: decls,
            identities: vec![None; n],
            incoming,
            outgoing,
            homs,
            slot,
            composites,
            object_index,
            morphism_index,
        })
    }

    pub fn set_identity(&mut self, a: Obj, f: Mor) {
        self.identities[a.idx()] = Some(f);
    }

    /// Records `g . f = h`. Fails when `f` and `g` are not composable.
    pub fn set_composite(&mut self, g: Mor, f: Mor, h: Mor) -> Result<()> {
        if self.cod(f) != self.dom(g) {
            return Err(Error::Malformed(format!(
                "`{}` . `{}` is not a composable pair",
                self.mor_name(g),
                self.mor_name(f)
            )));
        }
        let s = self.slot[f.idx()] as usize;
        self.composites[g.idx()][s] = Some(h);
        Ok(())
    }

    pub fn n_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn n_morphisms(&self) -> usize {
        self.morphisms.len()
    }

    pub fn objects(&self) -> impl DoubleEndedIterator<Item = Obj> + ExactSizeIterator + Clone {
        (0..self.objects.len() as u32).map(Obj)
    }

    pub fn morphisms(&self) -> impl DoubleEndedIterator<Item = Mor> + ExactSizeIterator + Clone {
        (0..self.morphisms.len() as u32).map(Mor)
    }

    pub fn obj_name(&self, a: Obj) -> &str {
        &self.objects[a.idx()]
    }

    pub fn mor_name(&self, f: Mor) -> &str {
        &self.morphisms[f.idx()].name
    }

    pub fn object(&self, name: &str) -> Option<Obj> {
        self.object_index.get(name).copied()
    }

    pub fn morphism(&self, name: &str) -> Option<Mor> {
        self.morphism_index.get(name).copied()
    }

    #[inline]
    pub fn dom(&self, f: Mor) -> Obj {
        self.morphisms[f.idx()].dom
    }

    #[inline]
    pub fn cod(&self, f: Mor) -> Obj {
        self.morphisms[f.idx()].cod
    }

    pub fn identity(&self, a: Obj) -> Option<Mor> {
        self.identities[a.idx()]
    }

    /// The identity on `a`. Panics if none was declared.
    #[inline]
    pub fn id(&self, a: Obj) -> Mor {
        self.identities[a.idx()].unwrap_or_else(|| panic!("no identity declared on `{}`", self.obj_name(a)))
    }

    pub fn is_identity(&self, f: Mor) -> bool {
        self.identities[self.dom(f).idx()] == Some(f)
    }

    /// Morphisms `a -> b` in declaration order.
    #[inline]
    pub fn hom(&self, a: Obj, b: Obj) -> &[Mor] {
        &self.homs[a.idx() * self.objects.len() + b.idx()]
    }

    /// Morphisms with codomain `b`.
    pub fn incoming(&self, b: Obj) -> &[Mor] {
        &self.incoming[b.idx()]
    }

    /// Morphisms with domain `a`.
    pub fn outgoing(&self, a: Obj) -> &[Mor] {
        &self.outgoing[a.idx()]
    }

    pub fn try_compose(&self, g: Mor, f: Mor) -> Option<Mor> {
        if self.cod(f) != self.dom(g) {
            return None;
        }
        self.composites[g.idx()][self.slot[f.idx()] as usize]
    }

    /// `g . f`. Panics on a non-composable pair or a missing table entry.
    #[inline]
    pub fn compose(&self, g: Mor, f: Mor) -> Mor {
        match self.try_compose(g, f) {
            Some(h) => h,
            None => panic!(
                "composite `{}` . `{}` is not defined",
                self.mor_name(g),
                self.mor_name(f)
            ),
        }
    }

    /// Composes a path given in diagrammatic order: `path(&[f, g, h])` is `h . g . f`.
    pub fn path(&self, steps: &[Mor]) -> Mor {
        let (first, rest) = steps.split_first().expect("empty path");
        rest.iter().fold(*first, |acc, &g| self.compose(g, acc))
    }

    /// A two-sided inverse of `f`, if one exists.
    pub fn inverse(&self, f: Mor) -> Option<Mor> {
        let (a, b) = (self.dom(f), self.cod(f));
        let (ida, idb) = (self.identity(a)?, self.identity(b)?);
        self.hom(b, a)
            .iter()
            .copied()
            .find(|&g| self.try_compose(g, f) == Some(ida) && self.try_compose(f, g) == Some(idb))
    }

    pub fn is_iso(&self, f: Mor) -> bool {
        self.inverse(f).is_some()
    }

    pub fn is_idempotent(&self, e: Mor) -> bool {
        self.dom(e) == self.cod(e) && self.try_compose(e, e) == Some(e)
    }

    /// All idempotents, ordered by object and then by morphism.
    pub fn idempotents(&self) -> Vec<Mor> {
        self.objects()
            .flat_map(|a| self.hom(a, a).iter().copied().filter(|&e| self.is_idempotent(e)))
            .collect()
    }

    /// Checks every category law and reports each violation with its witnesses.
    pub fn validate(&self) -> ValidationReport {
        validate_category(self)
    }

    /// Returns the category if it passes validation.
    pub fn validated(self) -> Result<Self> {
        self.validate().into_result()?;
        Ok(self)
    }
}

impl fmt::Display for FinCat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "category with {} objects, {} morphisms",
            self.n_objects(),
            self.n_morphisms()
        )
    }
}

pub fn validate_category(c: &FinCat) -> ValidationReport {
    let mut report = ValidationReport::new();
    for a in c.objects() {
        match c.identity(a) {
            None => report.push(
                Law::MissingEntry,
                format!("no identity declared on `{}`", c.obj_name(a)),
            ),
            Some(i) if c.dom(i) != a || c.cod(i) != a => report.push(
                Law::Typing,
                format!(
                    "identity `{}` on `{}` is typed `{}` -> `{}`",
                    c.mor_name(i),
                    c.obj_name(a),
                    c.obj_name(c.dom(i)),
                    c.obj_name(c.cod(i))
                ),
            ),
            Some(_) => {}
        }
    }

    for g in c.morphisms() {
        for &f in c.incoming(c.dom(g)) {
            match c.try_compose(g, f) {
                None => report.push(
                    Law::MissingEntry,
                    format!("no composite for `{}` . `{}`", c.mor_name(g), c.mor_name(f)),
                ),
                Some(h) if c.dom(h) != c.dom(f) || c.cod(h) != c.cod(g) => report.push(
                    Law::Typing,
                    format!(
                        "`{}` . `{}` = `{}` has the wrong type",
                        c.mor_name(g),
                        c.mor_name(f),
                        c.mor_name(h)
                    ),
                ),
                Some(_) => {}
            }
        }
    }

    for f in c.morphisms() {
        if let Some(i) = c.identity(c.dom(f)) {
            if let Some(h) = c.try_compose(f, i) {
                if h != f {
                    report.push(
                        Law::RightIdentity,
                        format!(
                            "`{}` . `{}` = `{}`, expected `{}`",
                            c.mor_name(f),
                            c.mor_name(i),
                            c.mor_name(h),
                            c.mor_name(f)
                        ),
                    );
                }
            }
        }
        if let Some(i) = c.identity(c.cod(f)) {
            if let Some(h) = c.try_compose(i, f) {
                if h != f {
                    report.push(
                        Law::LeftIdentity,
                        format!(
                            "`{}` . `{}` = `{}`, expected `{}`",
                            c.mor_name(i),
                            c.mor_name(f),
                            c.mor_name(h),
                            c.mor_name(f)
                        ),
                    );
                }
            }
        }
    }

    // h . (g . f) = (h . g) . f
    for g in c.morphisms() {
        for &f in c.incoming(c.dom(g)) {
            for &h in c.outgoing(c.cod(g)) {
                let left = c.try_compose(g, f).and_then(|gf| c.try_compose(h, gf));
                let right = c.try_compose(h, g).and_then(|hg| c.try_compose(hg, f));
                if let (Some(l), Some(r)) = (left, right) {
                    if l != r {
                        report.push(
                            Law::Associativity,
                            format!(
                                "`{h}` . (`{g}` . `{f}`) = `{}` but (`{h}` . `{g}`) . `{f}` = `{}`",
                                c.mor_name(l),
                                c.mor_name(r),
                                h = c.mor_name(h),
                                g = c.mor_name(g),
                                f = c.mor_name(f)
                            ),
                        );
                    }
                }
            }
        }
    }
    report
}

/// Name-based construction helper for fixtures and tests.
#[derive(Debug, Default, Clone)]
pub struct CategoryBuilder {
    objects: Vec<String>,
    morphisms: Vec<(String, String, String)>,
    identities: Vec<(String, String)>,
    composites: Vec<(String, String, String)>,
}

impl CategoryBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn object(mut self, name: &str) -> Self {
        self.objects.push(name.to_owned());
        self
    }

    pub fn morphism(mut self, name: &str, dom: &str, cod: &str) -> Self {
        self.morphisms.push((name.to_owned(), dom.to_owned(), cod.to_owned()));
        self
    }

    /// Declares `name : a -> a` and registers it as the identity on `a`.
    pub fn identity(mut self, a: &str, name: &str) -> Self {
        self.morphisms.push((name.to_owned(), a.to_owned(), a.to_owned()));
        self.identities.push((a.to_owned(), name.to_owned()));
        self
    }

    /// Records `g . f = h`.
    pub fn compose(mut self, g: &str, f: &str, h: &str) -> Self {
        self.composites.push((g.to_owned(), f.to_owned(), h.to_owned()));
        self
    }

    /// Builds the table, filling composites from `rule` for every composable
    /// pair not listed explicitly.
    pub fn build_with(self, rule: impl Fn(&str, &str) -> String) -> Result<FinCat> {
        let mut c = self.skeleton()?;
        for g in c.morphisms().collect::<Vec<_>>() {
            for f in c.incoming(c.dom(g)).to_vec() {
                if c.try_compose(g, f).is_none() {
                    let h = rule(c.mor_name(g), c.mor_name(f));
                    let h = lookup_mor(&c, &h)?;
                    c.set_composite(g, f, h)?;
                }
            }
        }
        Ok(c)
    }

    /// Builds the table from explicit composites only, filling composites
    /// with identities automatically.
    pub fn build(self) -> Result<FinCat> {
        let mut c = self.skeleton()?;
        for g in c.morphisms().collect::<Vec<_>>() {
            for f in c.incoming(c.dom(g)).to_vec() {
                if c.try_compose(g, f).is_some() {
                    continue;
                }
                if c.is_identity(g) {
                    c.set_composite(g, f, f)?;
                } else if c.is_identity(f) {
                    c.set_composite(g, f, g)?;
                }
            }
        }
        Ok(c)
    }

    fn skeleton(&self) -> Result<FinCat> {
        let index: HashMap<&str, Obj> = self
            .objects
            .iter()
            .enumerate()
            .map(|(i, n)| (n.as_str(), Obj(i as u32)))
            .collect();
        let find = |n: &str| {
            index
                .get(n)
                .copied()
                .ok_or_else(|| Error::Malformed(format!("unknown object `{n}`")))
        };
        let mut morphisms = Vec::new();
        for (name, d, c) in &self.morphisms {
            morphisms.push((name.clone(), find(d)?, find(c)?));
        }
        let mut c = FinCat::new(self.objects.clone(), morphisms)?;
        for (a, i) in &self.identities {
            let a = find(a)?;
            let i = lookup_mor(&c, i)?;
            c.set_identity(a, i);
        }
        for (g, f, h) in &self.composites {
            let (g, f, h) = (lookup_mor(&c, g)?, lookup_mor(&c, f)?, lookup_mor(&c, h)?);
            c.set_composite(g, f, h)?;
        }
        Ok(c)
    }
}

fn lookup_mor(c: &FinCat, name: &str) -> Result<Mor> {
    c.morphism(name)
        .ok_or_else(|| Error::Malformed(format!("unknown morphism `{name}`")))
}

/// Index arithmetic for the product of two categories built by
/// [`product_category`]: pairs are laid out row-major.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Product {
    right_objects: u32,
    right_morphisms: u32,
}

impl Product {
    pub fn of(_left: &FinCat, right: &FinCat) -> Self {
        Product {
            right_objects: right.n_objects() as u32,
            right_morphisms: right.n_morphisms() as u32,
        }
    }

    #[inline]
    pub fn obj(&self, a: Obj, b: Obj) -> Obj {
        Obj(a.0 * self.right_objects + b.0)
    }

    #[inline]
    pub fn mor(&self, f: Mor, g: Mor) -> Mor {
        Mor(f.0 * self.right_morphisms + g.0)
    }

    #[inline]
    pub fn split_obj(&self, p: Obj) -> (Obj, Obj) {
        (Obj(p.0 / self.right_objects), Obj(p.0 % self.right_objects))
    }

    #[inline]
    pub fn split_mor(&self, p: Mor) -> (Mor, Mor) {
        (Mor(p.0 / self.right_morphisms), Mor(p.0 % self.right_morphisms))
    }
}

/// The product category `c × d`, with componentwise composition.
///
/// Object `(a, b)` has index `a * |ob d| + b` and is named `(a,b)`;
/// morphisms are laid out the same way (see [`Product`]).
pub fn product_category(c: &FinCat, d: &FinCat) -> FinCat {
    let p = Product::of(c, d);
    let mut objects = Vec::with_capacity(c.n_objects() * d.n_objects());
    for a in c.objects() {
        for b in d.objects() {
            objects.push(format!("({},{})", c.obj_name(a), d.obj_name(b)));
        }
    }
    let mut morphisms = Vec::with_capacity(c.n_morphisms() * d.n_morphisms());
    for f in c.morphisms() {
        for g in d.morphisms() {
            morphisms.push((
                format!("({},{})", c.mor_name(f), d.mor_name(g)),
                p.obj(c.dom(f), d.dom(g)),
                p.obj(c.cod(f), d.cod(g)),
            ));
        }
    }
    let mut out = FinCat::new(objects, morphisms).expect("product of valid categories has distinct names");
    for a in c.objects() {
        for b in d.objects() {
            if let (Some(i), Some(j)) = (c.identity(a), d.identity(b)) {
                out.set_identity(p.obj(a, b), p.mor(i, j));
            }
        }
    }
    for g in out.morphisms().collect::<Vec<_>>() {
        let (g1, g2) = p.split_mor(g);
        for f in out.incoming(out.dom(g)).to_vec() {
            let (f1, f2) = p.split_mor(f);
            if let (Some(h1), Some(h2)) = (c.try_compose(g1, f1), d.try_compose(g2, f2)) {
                out.set_composite(g, f, p.mor(h1, h2))
                    .expect("componentwise composable");
            }
        }
    }
    out
}

/// The opposite category: same names, reversed morphisms.
pub fn opposite(c: &FinCat) -> FinCat {
    let objects = c.objects().map(|a| c.obj_name(a).to_owned()).collect();
    let morphisms = c
        .morphisms()
        .map(|f| (c.mor_name(f).to_owned(), c.cod(f), c.dom(f)))
        .collect();
    let mut out = FinCat::new(objects, morphisms).expect("names already distinct");
    for a in c.objects() {
        if let Some(i) = c.identity(a) {
            out.set_identity(a, i);
        }
    }
    for g in c.morphisms() {
        for &f in c.incoming(c.dom(g)) {
            if let Some(h) = c.try_compose(g, f) {
                // (g . f)^op = f^op . g^op
                out.set_composite(f, g, h).expect("reversed pair is composable");
            }
        }
    }
    out
}

/// The terminal category: one object `*` and its identity `1`.
pub fn terminal_category() -> FinCat {
    CategoryBuilder::new()
        .object("*")
        .identity("*", "1")
        .build()
        .expect("terminal category")
}

/// Morphisms `a -> b` in declaration order.
pub fn hom_set(c: &FinCat, a: Obj, b: Obj) -> Vec<Mor> {
    c.hom(a, b).to_vec()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn terminal_validates() {
        assert!(fixtures::terminal().cat.validate().is_ok());
    }

    #[test]
    fn join_poset_validates() {
        let c = fixtures::join().cat;
        assert!(c.validate().is_ok());
        // oracle: in a poset every composable pair has exactly one candidate
        for g in c.morphisms() {
            for &f in c.incoming(c.dom(g)) {
                let h = c.compose(g, f);
                assert_eq!(c.hom(c.dom(f), c.cod(g)), &[h]);
            }
        }
    }

    #[test]
    fn broken_right_identity_is_reported() {
        let mut c = fixtures::join().cat;
        let u = c.morphism("u").unwrap();
        let id0 = c.morphism("id0").unwrap();
        c.set_composite(u, id0, id0).unwrap();
        let report = c.validate();
        assert!(report.has(Law::RightIdentity), "{report}");
        assert!(report.violations.iter().any(|v| v.message.contains("`u`")));
    }

    #[test]
    fn non_composable_entry_is_rejected() {
        let mut c = fixtures::join().cat;
        let u = c.morphism("u").unwrap();
        assert!(c.set_composite(u, u, u).is_err());
    }

    #[test]
    #[should_panic(expected = "not defined")]
    fn non_composable_lookup_panics() {
        let c = fixtures::join().cat;
        let u = c.morphism("u").unwrap();
        c.compose(u, u);
    }

    #[test]
    fn product_sizes() {
        let t = fixtures::terminal().cat;
        let tt = product_category(&t, &t);
        assert_eq!((tt.n_objects(), tt.n_morphisms()), (1, 1));
        assert!(tt.validate().is_ok());

        let j = fixtures::join().cat;
        let jj = product_category(&j, &j);
        assert_eq!((jj.n_objects(), jj.n_morphisms()), (4, 9));
        assert!(jj.validate().is_ok());

        let z = fixtures::z2().cat;
        let zz = product_category(&z, &z);
        assert_eq!((zz.n_objects(), zz.n_morphisms()), (1, 4));
        assert!(zz.validate().is_ok());
    }

    #[test]
    fn hom_sets_follow_declaration_order() {
        let j = fixtures::join().cat;
        let (o0, o1) = (j.object("0").unwrap(), j.object("1").unwrap());
        let names = |v: Vec<Mor>| v.into_iter().map(|f| j.mor_name(f).to_owned()).collect::<Vec<_>>();
        assert_eq!(names(hom_set(&j, o0, o1)), ["u"]);
        assert!(hom_set(&j, o1, o0).is_empty());

        let z = fixtures::z2().cat;
        let star = z.object("*").unwrap();
        let zn: Vec<_> = hom_set(&z, star, star)
            .into_iter()
            .map(|f| z.mor_name(f).to_owned())
            .collect();
        assert_eq!(zn, ["1", "g"]);
    }

    #[test]
    fn opposite_is_involutive() {
        for fx in fixtures::all() {
            let c = fx.cat;
            let op = opposite(&c);
            assert!(op.validate().is_ok());
            assert_eq!(opposite(&op), c);
        }
    }

    #[test]
    fn inverses_in_z2() {
        let z = fixtures::z2().cat;
        let g = z.morphism("g").unwrap();
        assert_eq!(z.inverse(g), Some(g));
        let w = fixtures::walking_idempotent().cat;
        assert_eq!(w.inverse(w.morphism("e").unwrap()), None);
    }
}
