//! Bundle files: a category together with optional magmal, symmetric and
//! magma structure, as a line-oriented text document.
//!
//! ```text
//! meta:
//!   name: join
//! category:
//!   object: 0
//!   object: 1
//!   morphism: id0 : 0 -> 0
//!   morphism: id1 : 1 -> 1
//!   morphism: u : 0 -> 1
//!   identity: 0 = id0
//!   identity: 1 = id1
//! magmal:                     # excerpt; real tables list every pair
//!   unit: 0
//!   tensor-object: 0, 1 = 1
//!   tensor: u, id1 = id1
//!   lambda: 1 = id1
//!   rho: 1 = id1
//! ```
//!
//! Composites `[g, f] = h` (meaning `g . f = h`) involving an identity may
//! be omitted; every other table must be complete. Sections may appear in
//! any order. See `docs/bundle-format.md` for the full grammar.

use std::collections::HashMap;
use std::fmt::Write as _;

use thiserror::Error;

use cocart::category::{FinCat, Mor, Obj};
use cocart::fixtures::Fixture;
use cocart::magmal::{validate_magmal, validate_unit, IdentityMagma, MagmalCategory, SymmetricStructure, UnitData};
use cocart::report::{Law, ValidationReport};

use crate::syntax::{lex_line, match_pattern, quote, Pat, Spanned, Tok};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BundleError {
    #[error("{line}:{col}: {message}")]
    Parse { line: usize, col: usize, message: String },

    #[error("{line}:{col}: unknown {kind} `{name}`")]
    Resolve {
        line: usize,
        col: usize,
        kind: &'static str,
        name: String,
    },

    #[error("{section} section fails its laws:\n{report}")]
    Law {
        section: &'static str,
        report: ValidationReport,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bundle {
    pub name: Option<String>,
    pub notes: Option<String>,
    pub cat: FinCat,
    pub magmal: Option<MagmalCategory>,
    pub alternate_unit: Option<UnitData>,
    pub symmetry: Option<SymmetricStructure>,
    pub magma: Option<IdentityMagma>,
}

impl Bundle {
    pub fn bare(cat: FinCat) -> Self {
        Bundle {
            name: None,
            notes: None,
            cat,
            magmal: None,
            alternate_unit: None,
            symmetry: None,
            magma: None,
        }
    }

    pub fn from_fixture(fx: &Fixture) -> Self {
        Bundle {
            name: Some(fx.name.to_string()),
            notes: None,
            cat: fx.cat.clone(),
            magmal: fx.magmal.clone(),
            alternate_unit: fx.alternate_unit.clone(),
            symmetry: fx.symmetry.clone(),
            magma: fx.magma.clone(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Section {
    Meta,
    Category,
    Magmal,
    AlternateUnit,
    Symmetry,
    Magma,
}

impl Section {
    fn from_key(key: &str) -> Option<Self> {
        Some(match key {
            "meta" => Section::Meta,
            "category" => Section::Category,
            "magmal" => Section::Magmal,
            "alternate-unit" => Section::AlternateUnit,
            "symmetry" => Section::Symmetry,
            "magma" => Section::Magma,
            _ => return None,
        })
    }

    fn key(self) -> &'static str {
        match self {
            Section::Meta => "meta",
            Section::Category => "category",
            Section::Magmal => "magmal",
            Section::AlternateUnit => "alternate-unit",
            Section::Symmetry => "symmetry",
            Section::Magma => "magma",
        }
    }
}

fn pattern(section: Section, key: &str) -> Option<&'static [Pat]> {
    use Pat::{Arrow, Name as N, Punct as P};
    const ONE: &[Pat] = &[N];
    const ASSIGN: &[Pat] = &[N, P('='), N];
    const PAIR: &[Pat] = &[N, P(','), N, P('='), N];
    Some(match (section, key) {
        (Section::Meta, "name" | "notes") => ONE,
        (Section::Category, "object") => ONE,
        (Section::Category, "morphism") => &[N, P(':'), N, Arrow, N],
        (Section::Category, "identity") => ASSIGN,
        (Section::Category, "compose") => &[P('['), N, P(','), N, P(']'), P('='), N],
        (Section::Magmal | Section::AlternateUnit, "unit") => ONE,
        (Section::Magmal | Section::AlternateUnit, "lambda" | "rho") => ASSIGN,
        (Section::Magmal, "tensor-object" | "tensor") => PAIR,
        (Section::Symmetry, "alpha") => &[N, P(','), N, P(','), N, P('='), N],
        (Section::Symmetry, "sigma") => PAIR,
        (Section::Magma, "eta" | "mu") => ASSIGN,
        _ => return None,
    })
}

#[derive(Debug, Clone)]
struct Entry {
    line: usize,
    key: String,
    names: Vec<(String, usize)>,
}

impl Entry {
    fn name(&self, k: usize) -> &str {
        &self.names[k].0
    }
}

struct Sections {
    entries: HashMap<Section, (usize, Vec<Entry>)>,
    end_line: usize,
}

impl Sections {
    fn get(&self, s: Section) -> Option<&(usize, Vec<Entry>)> {
        self.entries.get(&s)
    }

    fn incomplete(&self, message: String) -> BundleError {
        BundleError::Parse {
            line: self.end_line,
            col: 1,
            message: format!("unexpected end of input: {message}"),
        }
    }
}

fn split(text: &str) -> Result<Sections, BundleError> {
    let mut entries: HashMap<Section, (usize, Vec<Entry>)> = HashMap::new();
    let mut current = None;
    let mut end_line = 1;
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        end_line = line + 1;
        let toks = lex_line(raw, line)?;
        let Some(first) = toks.first() else { continue };
        let key = match &first.tok {
            Tok::Name(s) => s.clone(),
            _ => {
                return Err(BundleError::Parse {
                    line,
                    col: first.col,
                    message: "expected an entry key".into(),
                })
            }
        };
        let end_col = raw.chars().count() + 1;
        match toks.get(1) {
            Some(Spanned {
                tok: Tok::Punct(':'), ..
            }) => {}
            Some(t) => {
                return Err(BundleError::Parse {
                    line,
                    col: t.col,
                    message: "expected `:` after the key".into(),
                })
            }
            None => {
                return Err(BundleError::Parse {
                    line,
                    col: end_col,
                    message: "expected `:` after the key".into(),
                })
            }
        }
        let rest = &toks[2..];
        if rest.is_empty() {
            if let Some(s) = Section::from_key(&key) {
                if entries.insert(s, (line, Vec::new())).is_some() {
                    return Err(BundleError::Parse {
                        line,
                        col: first.col,
                        message: format!("section `{key}` appears twice"),
                    });
                }
                current = Some(s);
                continue;
            }
        }
        let Some(section) = current else {
            return Err(BundleError::Parse {
                line,
                col: first.col,
                message: format!("entry `{key}` outside any section"),
            });
        };
        let Some(pat) = pattern(section, &key) else {
            return Err(BundleError::Parse {
                line,
                col: first.col,
                message: format!("unknown entry `{key}` in section `{}`", section.key()),
            });
        };
        let names = match_pattern(rest, pat, line, end_col)?;
        entries
            .get_mut(&section)
            .expect("section opened")
            .1
            .push(Entry { line, key, names });
    }
    Ok(Sections { entries, end_line })
}

struct Resolver<'a> {
    cat: &'a FinCat,
}

impl Resolver<'_> {
    fn obj(&self, e: &Entry, k: usize) -> Result<Obj, BundleError> {
        let (name, col) = &e.names[k];
        self.cat.object(name).ok_or_else(|| BundleError::Resolve {
            line: e.line,
            col: *col,
            kind: "object",
            name: name.clone(),
        })
    }

    fn mor(&self, e: &Entry, k: usize) -> Result<Mor, BundleError> {
        let (name, col) = &e.names[k];
        self.cat.morphism(name).ok_or_else(|| BundleError::Resolve {
            line: e.line,
            col: *col,
            kind: "morphism",
            name: name.clone(),
        })
    }
}

/// Fills `slots[i]` once; a second assignment is a parse error.
fn fill<T: Copy>(slots: &mut [Option<T>], i: usize, v: T, e: &Entry) -> Result<(), BundleError> {
    if slots[i].replace(v).is_some() {
        return Err(BundleError::Parse {
            line: e.line,
            col: 1,
            message: format!("duplicate `{}` entry", e.key),
        });
    }
    Ok(())
}

fn complete<T: Copy>(
    s: &Sections,
    slots: Vec<Option<T>>,
    what: impl Fn(usize) -> String,
) -> Result<Vec<T>, BundleError> {
    slots
        .iter()
        .enumerate()
        .map(|(i, v)| v.ok_or_else(|| s.incomplete(format!("no {}", what(i)))))
        .collect()
}

fn parse_category(s: &Sections) -> Result<FinCat, BundleError> {
    let empty = (0, Vec::new());
    let (_, entries) = s.get(Section::Category).unwrap_or(&empty);
    let mut objects: Vec<String> = Vec::new();
    let mut seen = HashMap::new();
    for e in entries.iter().filter(|e| e.key == "object") {
        if seen.insert(e.name(0).to_string(), ()).is_some() {
            return Err(BundleError::Parse {
                line: e.line,
                col: e.names[0].1,
                message: format!("duplicate object `{}`", e.name(0)),
            });
        }
        objects.push(e.name(0).to_string());
    }
    let lookup_obj = |e: &Entry, k: usize| {
        let (name, col) = &e.names[k];
        objects
            .iter()
            .position(|o| o == name)
            .map(|i| Obj(i as u32))
            .ok_or_else(|| BundleError::Resolve {
                line: e.line,
                col: *col,
                kind: "object",
                name: name.clone(),
            })
    };
    let mut decls = Vec::new();
    let mut seen = HashMap::new();
    for e in entries.iter().filter(|e| e.key == "morphism") {
        if seen.insert(e.name(0).to_string(), ()).is_some() {
            return Err(BundleError::Parse {
                line: e.line,
                col: e.names[0].1,
                message: format!("duplicate morphism `{}`", e.name(0)),
            });
        }
        decls.push((e.name(0).to_string(), lookup_obj(e, 1)?, lookup_obj(e, 2)?));
    }
    let mut cat = FinCat::new(objects.clone(), decls).map_err(|err| s.incomplete(err.to_string()))?;
    let names_only = cat.clone();
    let r = Resolver { cat: &names_only };
    let mut identities = vec![None; cat.n_objects()];
    let mut composites = Vec::new();
    for e in entries {
        match e.key.as_str() {
            "identity" => fill(&mut identities, r.obj(e, 0)?.idx(), r.mor(e, 1)?, e)?,
            "compose" => composites.push((e, r.mor(e, 0)?, r.mor(e, 1)?, r.mor(e, 2)?)),
            _ => {}
        }
    }
    for (a, f) in identities.iter().enumerate() {
        let f = f.ok_or_else(|| s.incomplete(format!("no identity for object {}", quote(&objects[a]))))?;
        cat.set_identity(Obj(a as u32), f);
    }
    for (e, g, f, h) in composites {
        if cat.try_compose(g, f).is_some() {
            return Err(BundleError::Parse {
                line: e.line,
                col: 1,
                message: "duplicate `compose` entry".into(),
            });
        }
        if let Err(err) = cat.set_composite(g, f, h) {
            let mut report = ValidationReport::new();
            report.push(Law::Typing, format!("line {}: {err}", e.line));
            return Err(BundleError::Law {
                section: "category",
                report,
            });
        }
    }
    // composites with identities default to the other factor
    for g in cat.morphisms().collect::<Vec<_>>() {
        for f in cat.incoming(cat.dom(g)).to_vec() {
            if cat.try_compose(g, f).is_some() {
                continue;
            }
            if cat.is_identity(g) {
                cat.set_composite(g, f, f).expect("composable");
            } else if cat.is_identity(f) {
                cat.set_composite(g, f, g).expect("composable");
            } else {
                return Err(s.incomplete(format!(
                    "no composite for [{}, {}]",
                    quote(cat.mor_name(g)),
                    quote(cat.mor_name(f))
                )));
            }
        }
    }
    let report = cat.validate();
    if !report.is_ok() {
        return Err(BundleError::Law {
            section: "category",
            report,
        });
    }
    Ok(cat)
}

fn parse_unit(s: &Sections, r: &Resolver, entries: &[Entry], section: Section) -> Result<UnitData, BundleError> {
    let n = r.cat.n_objects();
    let mut unit = None;
    let (mut lambda, mut rho) = (vec![None; n], vec![None; n]);
    for e in entries {
        match e.key.as_str() {
            "unit" => fill(std::slice::from_mut(&mut unit), 0, r.obj(e, 0)?, e)?,
            "lambda" => fill(&mut lambda, r.obj(e, 0)?.idx(), r.mor(e, 1)?, e)?,
            "rho" => fill(&mut rho, r.obj(e, 0)?.idx(), r.mor(e, 1)?, e)?,
            _ => {}
        }
    }
    let name = |i: usize| quote(r.cat.obj_name(Obj(i as u32)));
    Ok(UnitData {
        unit: unit.ok_or_else(|| s.incomplete(format!("no unit in section `{}`", section.key())))?,
        lambda: complete(s, lambda, |i| format!("lambda for {}", name(i)))?,
        rho: complete(s, rho, |i| format!("rho for {}", name(i)))?,
    })
}

fn parse_magmal(s: &Sections, r: &Resolver, entries: &[Entry]) -> Result<MagmalCategory, BundleError> {
    let c = r.cat;
    let (n, m) = (c.n_objects(), c.n_morphisms());
    let mut objs = vec![None; n * n];
    let mut mors = vec![None; m * m];
    for e in entries {
        match e.key.as_str() {
            "tensor-object" => fill(&mut objs, r.obj(e, 0)?.idx() * n + r.obj(e, 1)?.idx(), r.obj(e, 2)?, e)?,
            "tensor" => fill(&mut mors, r.mor(e, 0)?.idx() * m + r.mor(e, 1)?.idx(), r.mor(e, 2)?, e)?,
            _ => {}
        }
    }
    let on = |i: usize| quote(c.obj_name(Obj(i as u32)));
    let mn = |i: usize| quote(c.mor_name(Mor(i as u32)));
    let tensor_objects = complete(s, objs, |i| format!("tensor-object for {}, {}", on(i / n), on(i % n)))?;
    let tensor_morphisms = complete(s, mors, |i| format!("tensor for {}, {}", mn(i / m), mn(i % m)))?;
    let unit = parse_unit(s, r, entries, Section::Magmal)?;
    let magmal = MagmalCategory {
        cat: c.clone(),
        tensor_objects,
        tensor_morphisms,
        unit,
    };
    let report = validate_magmal(&magmal);
    if !report.is_ok() {
        return Err(BundleError::Law {
            section: "magmal",
            report,
        });
    }
    Ok(magmal)
}

fn parse_symmetry(s: &Sections, r: &Resolver, entries: &[Entry]) -> Result<SymmetricStructure, BundleError> {
    let n = r.cat.n_objects();
    let mut alpha = vec![None; n * n * n];
    let mut sigma = vec![None; n * n];
    for e in entries {
        match e.key.as_str() {
            "alpha" => {
                let i = (r.obj(e, 0)?.idx() * n + r.obj(e, 1)?.idx()) * n + r.obj(e, 2)?.idx();
                fill(&mut alpha, i, r.mor(e, 3)?, e)?
            }
            "sigma" => fill(&mut sigma, r.obj(e, 0)?.idx() * n + r.obj(e, 1)?.idx(), r.mor(e, 2)?, e)?,
            _ => {}
        }
    }
    let on = |i: usize| quote(r.cat.obj_name(Obj(i as u32)));
    Ok(SymmetricStructure {
        alpha: complete(s, alpha, |i| {
            format!("alpha for {}, {}, {}", on(i / (n * n)), on(i / n % n), on(i % n))
        })?,
        sigma: complete(s, sigma, |i| format!("sigma for {}, {}", on(i / n), on(i % n)))?,
    })
}

fn parse_magma(s: &Sections, r: &Resolver, entries: &[Entry]) -> Result<IdentityMagma, BundleError> {
    let n = r.cat.n_objects();
    let (mut eta, mut mu) = (vec![None; n], vec![None; n]);
    for e in entries {
        match e.key.as_str() {
            "eta" => fill(&mut eta, r.obj(e, 0)?.idx(), r.mor(e, 1)?, e)?,
            "mu" => fill(&mut mu, r.obj(e, 0)?.idx(), r.mor(e, 1)?, e)?,
            _ => {}
        }
    }
    let on = |i: usize| quote(r.cat.obj_name(Obj(i as u32)));
    Ok(IdentityMagma {
        eta: complete(s, eta, |i| format!("eta for {}", on(i)))?,
        mu: complete(s, mu, |i| format!("mu for {}", on(i)))?,
    })
}

/// Parses a bundle and validates its category and magmal sections.
pub fn parse_bundle(text: &str) -> Result<Bundle, BundleError> {
    let s = split(text)?;
    let cat = parse_category(&s)?;
    let r = Resolver { cat: &cat };

    let mut name = None;
    let mut notes = None;
    if let Some((_, entries)) = s.get(Section::Meta) {
        for e in entries {
            let slot = if e.key == "name" { &mut name } else { &mut notes };
            if slot.replace(e.name(0).to_string()).is_some() {
                return Err(BundleError::Parse {
                    line: e.line,
                    col: 1,
                    message: format!("duplicate `{}` entry", e.key),
                });
            }
        }
    }

    let magmal = match s.get(Section::Magmal) {
        Some((_, entries)) => Some(parse_magmal(&s, &r, entries)?),
        None => None,
    };
    let needs_magmal = |section: Section| -> Result<&MagmalCategory, BundleError> {
        let line = s.get(section).map_or(1, |(l, _)| *l);
        magmal.as_ref().ok_or_else(|| BundleError::Parse {
            line,
            col: 1,
            message: format!("section `{}` requires a `magmal` section", section.key()),
        })
    };

    let alternate_unit = match s.get(Section::AlternateUnit) {
        Some((_, entries)) => {
            let m = needs_magmal(Section::AlternateUnit)?;
            let unit = parse_unit(&s, &r, entries, Section::AlternateUnit)?;
            let report = validate_unit(m, &unit);
            if !report.is_ok() {
                return Err(BundleError::Law {
                    section: "alternate-unit",
                    report,
                });
            }
            Some(unit)
        }
        None => None,
    };
    let symmetry = match s.get(Section::Symmetry) {
        Some((_, entries)) => {
            needs_magmal(Section::Symmetry)?;
            Some(parse_symmetry(&s, &r, entries)?)
        }
        None => None,
    };
    let magma = match s.get(Section::Magma) {
        Some((_, entries)) => {
            needs_magmal(Section::Magma)?;
            Some(parse_magma(&s, &r, entries)?)
        }
        None => None,
    };
    Ok(Bundle {
        name,
        notes,
        cat,
        magmal,
        alternate_unit,
        symmetry,
        magma,
    })
}

/// Canonical text: sections in a fixed order, tables in index order, and
/// composites with identities left implicit.
pub fn serialize_bundle(b: &Bundle) -> String {
    let c = &b.cat;
    let o = |a: Obj| quote(c.obj_name(a));
    let m = |f: Mor| quote(c.mor_name(f));
    let mut out = String::new();
    if b.name.is_some() || b.notes.is_some() {
        out.push_str("meta:\n");
        if let Some(name) = &b.name {
            let _ = writeln!(out, "  name: {}", quote(name));
        }
        if let Some(notes) = &b.notes {
            let _ = writeln!(out, "  notes: {}", quote(notes));
        }
        out.push('\n');
    }
    out.push_str("category:\n");
    for a in c.objects() {
        let _ = writeln!(out, "  object: {}", o(a));
    }
    for f in c.morphisms() {
        let _ = writeln!(out, "  morphism: {} : {} -> {}", m(f), o(c.dom(f)), o(c.cod(f)));
    }
    for a in c.objects() {
        let _ = writeln!(out, "  identity: {} = {}", o(a), m(c.id(a)));
    }
    for g in c.morphisms().filter(|&g| !c.is_identity(g)) {
        for &f in c.incoming(c.dom(g)).iter().filter(|&&f| !c.is_identity(f)) {
            let _ = writeln!(out, "  compose: [{}, {}] = {}", m(g), m(f), m(c.compose(g, f)));
        }
    }
    let unit_lines = |out: &mut String, u: &UnitData| {
        let _ = writeln!(out, "  unit: {}", o(u.unit));
        for a in c.objects() {
            let _ = writeln!(out, "  lambda: {} = {}", o(a), m(u.lambda[a.idx()]));
        }
        for a in c.objects() {
            let _ = writeln!(out, "  rho: {} = {}", o(a), m(u.rho[a.idx()]));
        }
    };
    if let Some(mc) = &b.magmal {
        out.push_str("\nmagmal:\n");
        for a in c.objects() {
            for x in c.objects() {
                let _ = writeln!(out, "  tensor-object: {}, {} = {}", o(a), o(x), o(mc.tensor_obj(a, x)));
            }
        }
        for f in c.morphisms() {
            for g in c.morphisms() {
                let _ = writeln!(out, "  tensor: {}, {} = {}", m(f), m(g), m(mc.tensor_mor(f, g)));
            }
        }
        unit_lines(&mut out, &mc.unit);
    }
    if let Some(u) = &b.alternate_unit {
        out.push_str("\nalternate-unit:\n");
        unit_lines(&mut out, u);
    }
    if let Some(s) = &b.symmetry {
        let n = c.n_objects();
        out.push_str("\nsymmetry:\n");
        for a in c.objects() {
            for x in c.objects() {
                for y in c.objects() {
                    let f = s.alpha[(a.idx() * n + x.idx()) * n + y.idx()];
                    let _ = writeln!(out, "  alpha: {}, {}, {} = {}", o(a), o(x), o(y), m(f));
                }
            }
        }
        for a in c.objects() {
            for x in c.objects() {
                let _ = writeln!(
                    out,
                    "  sigma: {}, {} = {}",
                    o(a),
                    o(x),
                    m(s.sigma[a.idx() * n + x.idx()])
                );
            }
        }
    }
    if let Some(g) = &b.magma {
        out.push_str("\nmagma:\n");
        for a in c.objects() {
            let _ = writeln!(out, "  eta: {} = {}", o(a), m(g.eta[a.idx()]));
        }
        for a in c.objects() {
            let _ = writeln!(out, "  mu: {} = {}", o(a), m(g.mu[a.idx()]));
        }
    }
    out
}
