//! Finite sets with the tensor `A ⊗ B = A + A×B + B`.
//!
//! The unit is the empty set and every set carries the left band
//! multiplication. The unit laws and naturality hold, but the composite
//! that should be the identity on `A ⊗ B` sends `mid(x, y)` to `inl x`, so
//! the tensor is not a coproduct. Splitting that composite recovers
//! `A + B`.
//!
//! Elements of a tensor are laid out as the `inl` block, then the `mid`
//! block in row-major order, then the `inr` block.

use std::collections::HashMap;
use std::fmt;

use crate::category::{FinCat, Mor, Obj};
use crate::error::{Error, Result, SearchLimit};
use crate::magmal::{left_coprojection, quasi_symmetry_composite, right_coprojection, MagmaFamily, Tensor};
use crate::report::{Law, ValidationReport};
use crate::universal::{is_coproduct, Cospan};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EggerElem {
    Atom(String),
    Inl(Box<EggerElem>),
    Mid(Box<EggerElem>, Box<EggerElem>),
    Inr(Box<EggerElem>),
}

pub fn inl(x: &EggerElem) -> EggerElem {
    EggerElem::Inl(Box::new(x.clone()))
}

pub fn mid(x: &EggerElem, y: &EggerElem) -> EggerElem {
    EggerElem::Mid(Box::new(x.clone()), Box::new(y.clone()))
}

pub fn inr(y: &EggerElem) -> EggerElem {
    EggerElem::Inr(Box::new(y.clone()))
}

impl EggerElem {
    pub fn atom(label: impl Into<String>) -> Self {
        EggerElem::Atom(label.into())
    }

    fn fmt_arg(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EggerElem::Inl(_) | EggerElem::Inr(_) => write!(f, "({self})"),
            _ => write!(f, "{self}"),
        }
    }
}

impl fmt::Display for EggerElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EggerElem::Atom(s) => f.write_str(s),
            EggerElem::Inl(x) => {
                f.write_str("inl ")?;
                x.fmt_arg(f)
            }
            EggerElem::Inr(y) => {
                f.write_str("inr ")?;
                y.fmt_arg(f)
            }
            EggerElem::Mid(x, y) => write!(f, "mid({x},{y})"),
        }
    }
}

/// A finite set given by an ordered list of distinct elements.
#[derive(Clone)]
pub struct FinSetObj {
    elements: Vec<EggerElem>,
    index: HashMap<EggerElem, usize>,
}

impl FinSetObj {
    pub fn new(elements: Vec<EggerElem>) -> Result<Self> {
        let mut index = HashMap::with_capacity(elements.len());
        for (i, e) in elements.iter().enumerate() {
            if index.insert(e.clone(), i).is_some() {
                return Err(Error::Malformed(format!("duplicate element `{e}`")));
            }
        }
        Ok(FinSetObj { elements, index })
    }

    /// `{prefix0, prefix1, ...}` with `n` elements.
    pub fn atoms(prefix: &str, n: usize) -> Self {
        Self::new((0..n).map(|i| EggerElem::atom(format!("{prefix}{i}"))).collect()).expect("labels are distinct")
    }

    pub fn empty() -> Self {
        Self::new(Vec::new()).expect("empty")
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[EggerElem] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &EggerElem {
        &self.elements[i]
    }

    pub fn index_of(&self, e: &EggerElem) -> Option<usize> {
        self.index.get(e).copied()
    }
}

impl PartialEq for FinSetObj {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements
    }
}

impl Eq for FinSetObj {}

impl fmt::Debug for FinSetObj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set()
            .entries(self.elements.iter().map(|e| e.to_string()))
            .finish()
    }
}

impl fmt::Display for FinSetObj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.elements.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

/// A function between finite sets, stored as the index of each image.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetMor {
    pub dom: FinSetObj,
    pub cod: FinSetObj,
    map: Vec<usize>,
}

impl SetMor {
    pub fn new(dom: FinSetObj, cod: FinSetObj, map: Vec<usize>) -> Result<Self> {
        if map.len() != dom.len() {
            return Err(Error::Malformed(format!(
                "map has {} entries for a domain of {}",
                map.len(),
                dom.len()
            )));
        }
        if let Some(&k) = map.iter().find(|&&k| k >= cod.len()) {
            return Err(Error::Malformed(format!(
                "image index {k} is outside a codomain of {}",
                cod.len()
            )));
        }
        Ok(SetMor { dom, cod, map })
    }

    /// Builds a map from a function on elements. Panics when an image is
    /// not an element of `cod`.
    pub fn from_elements(dom: &FinSetObj, cod: &FinSetObj, f: impl Fn(&EggerElem) -> EggerElem) -> Self {
        let map = dom
            .elements()
            .iter()
            .map(|e| {
                let y = f(e);
                cod.index_of(&y)
                    .unwrap_or_else(|| panic!("`{y}` is not an element of {cod}"))
            })
            .collect();
        SetMor {
            dom: dom.clone(),
            cod: cod.clone(),
            map,
        }
    }

    pub fn identity(a: &FinSetObj) -> Self {
        SetMor {
            dom: a.clone(),
            cod: a.clone(),
            map: (0..a.len()).collect(),
        }
    }

    /// The empty map `∅ -> a`.
    pub fn from_empty(a: &FinSetObj) -> Self {
        SetMor {
            dom: FinSetObj::empty(),
            cod: a.clone(),
            map: Vec::new(),
        }
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, i: usize) -> usize {
        self.map[i]
    }

    pub fn apply_elem(&self, e: &EggerElem) -> Option<&EggerElem> {
        self.dom.index_of(e).map(|i| self.cod.element(self.map[i]))
    }

    /// `g . self`
    pub fn then(&self, g: &SetMor) -> SetMor {
        assert_eq!(self.cod, g.dom, "maps are not composable");
        SetMor {
            dom: self.dom.clone(),
            cod: g.cod.clone(),
            map: self.map.iter().map(|&i| g.map[i]).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.dom == self.cod && self.map.iter().enumerate().all(|(i, &k)| i == k)
    }

    pub fn is_bijection(&self) -> bool {
        let mut hit = vec![false; self.cod.len()];
        self.map.iter().all(|&k| !std::mem::replace(&mut hit[k], true)) && self.dom.len() == self.cod.len()
    }

    /// Indices hit by the map, in increasing order.
    pub fn image(&self) -> Vec<usize> {
        let mut out = self.map.clone();
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// Every sequence of `slots` values drawn from `0..base`, in lexicographic order.
pub fn tables(slots: usize, base: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut next = if base == 0 && slots > 0 {
        None
    } else {
        Some(vec![0; slots])
    };
    std::iter::from_fn(move || {
        let current = next.take()?;
        let mut succ = current.clone();
        for k in (0..slots).rev() {
            succ[k] += 1;
            if succ[k] < base {
                next = Some(succ);
                break;
            }
            succ[k] = 0;
        }
        Some(current)
    })
}

/// All functions `dom -> cod`.
pub fn all_maps(dom: &FinSetObj, cod: &FinSetObj) -> impl Iterator<Item = SetMor> {
    let (dom, cod) = (dom.clone(), cod.clone());
    tables(dom.len(), cod.len()).map(move |map| SetMor {
        dom: dom.clone(),
        cod: cod.clone(),
        map,
    })
}

fn count_maps(dom: usize, cod: usize) -> u128 {
    (cod as u128).saturating_pow(dom as u32)
}

pub fn egger_tensor(a: &FinSetObj, b: &FinSetObj) -> FinSetObj {
    let mut elements = Vec::with_capacity(a.len() + a.len() * b.len() + b.len());
    elements.extend(a.elements().iter().map(inl));
    for x in a.elements() {
        elements.extend(b.elements().iter().map(|y| mid(x, y)));
    }
    elements.extend(b.elements().iter().map(inr));
    FinSetObj::new(elements).expect("tags keep the blocks disjoint")
}

pub fn egger_tensor_mor(f: &SetMor, g: &SetMor) -> SetMor {
    let map = tensor_table(&f.map, f.cod.len(), &g.map, g.cod.len());
    SetMor {
        dom: egger_tensor(&f.dom, &g.dom),
        cod: egger_tensor(&f.cod, &g.cod),
        map,
    }
}

// index table of f ⊗ g, given the codomain sizes
fn tensor_table(f: &[usize], ma: usize, g: &[usize], mb: usize) -> Vec<usize> {
    let mut map = Vec::with_capacity(f.len() + f.len() * g.len() + g.len());
    map.extend(f.iter().copied());
    for &x in f {
        map.extend(g.iter().map(|&j| ma + x * mb + j));
    }
    map.extend(g.iter().map(|&j| ma + ma * mb + j));
    map
}

/// `λ_A : A -> ∅ ⊗ A`, `a ↦ inr a`.
pub fn lambda(a: &FinSetObj) -> SetMor {
    SetMor::from_elements(a, &egger_tensor(&FinSetObj::empty(), a), inr)
}

/// `ρ_A : A -> A ⊗ ∅`, `a ↦ inl a`.
pub fn rho(a: &FinSetObj) -> SetMor {
    SetMor::from_elements(a, &egger_tensor(a, &FinSetObj::empty()), inl)
}

fn assoc_elem(e: &EggerElem) -> EggerElem {
    use EggerElem::*;
    match e {
        Inl(ab) => match &**ab {
            Inl(x) => inl(x),
            Mid(x, y) => mid(x, &inl(y)),
            Inr(y) => inr(&inl(y)),
            Atom(_) => unreachable!("not a tensor element"),
        },
        Mid(ab, z) => match &**ab {
            Inl(x) => mid(x, &inr(z)),
            Mid(x, y) => mid(x, &mid(y, z)),
            Inr(y) => inr(&mid(y, z)),
            Atom(_) => unreachable!("not a tensor element"),
        },
        Inr(z) => inr(&inr(z)),
        Atom(_) => unreachable!("not a tensor element"),
    }
}

fn assoc_inv_elem(e: &EggerElem) -> EggerElem {
    use EggerElem::*;
    match e {
        Inl(x) => inl(&inl(x)),
        Mid(x, bc) => match &**bc {
            Inl(y) => inl(&mid(x, y)),
            Mid(y, z) => mid(&mid(x, y), z),
            Inr(z) => mid(&inl(x), z),
            Atom(_) => unreachable!("not a tensor element"),
        },
        Inr(bc) => match &**bc {
            Inl(y) => inl(&inr(y)),
            Mid(y, z) => mid(&inr(y), z),
            Inr(z) => inr(z),
            Atom(_) => unreachable!("not a tensor element"),
        },
        Atom(_) => unreachable!("not a tensor element"),
    }
}

fn swap_elem(e: &EggerElem) -> EggerElem {
    match e {
        EggerElem::Inl(x) => inr(x),
        EggerElem::Mid(x, y) => mid(y, x),
        EggerElem::Inr(y) => inl(y),
        EggerElem::Atom(_) => unreachable!("not a tensor element"),
    }
}

/// `α_{A,B,C} : (A ⊗ B) ⊗ C -> A ⊗ (B ⊗ C)`.
pub fn associator(a: &FinSetObj, b: &FinSetObj, c: &FinSetObj) -> SetMor {
    let dom = egger_tensor(&egger_tensor(a, b), c);
    let cod = egger_tensor(a, &egger_tensor(b, c));
    SetMor::from_elements(&dom, &cod, assoc_elem)
}

pub fn associator_inverse(a: &FinSetObj, b: &FinSetObj, c: &FinSetObj) -> SetMor {
    let dom = egger_tensor(a, &egger_tensor(b, c));
    let cod = egger_tensor(&egger_tensor(a, b), c);
    SetMor::from_elements(&dom, &cod, assoc_inv_elem)
}

/// `σ_{A,B} : A ⊗ B -> B ⊗ A`, swapping `inl`/`inr` and transposing `mid`.
pub fn braiding(a: &FinSetObj, b: &FinSetObj) -> SetMor {
    SetMor::from_elements(&egger_tensor(a, b), &egger_tensor(b, a), swap_elem)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EggerCoherence {
    pub associator: SetMor,
    pub braiding: SetMor,
    pub lambda: SetMor,
    pub rho: SetMor,
}

/// `α_{A,B,C}`, `σ_{A,B}`, `λ_A` and `ρ_A`.
pub fn egger_coherence(a: &FinSetObj, b: &FinSetObj, c: &FinSetObj) -> EggerCoherence {
    EggerCoherence {
        associator: associator(a, b, c),
        braiding: braiding(a, b),
        lambda: lambda(a),
        rho: rho(a),
    }
}

fn id(a: &FinSetObj) -> SetMor {
    SetMor::identity(a)
}

fn t(f: &SetMor, g: &SetMor) -> SetMor {
    egger_tensor_mor(f, g)
}

/// Every probe map between the given carriers.
fn probes(carriers: &[FinSetObj], limit: SearchLimit) -> Result<Vec<SetMor>> {
    let total: u128 = carriers
        .iter()
        .flat_map(|a| carriers.iter().map(move |b| count_maps(a.len(), b.len())))
        .sum();
    limit.admit(total)?;
    Ok(carriers
        .iter()
        .flat_map(|a| carriers.iter().flat_map(move |b| all_maps(a, b)))
        .collect())
}

/// Invertibility, pentagon, triangle, both hexagons and `σ . σ = 1` over
/// every tuple of the given carriers, and naturality of `α`, `σ`, `λ`, `ρ`
/// in each slot over every map between them.
pub fn check_coherence(carriers: &[FinSetObj], limit: SearchLimit) -> Result<ValidationReport> {
    let mut report = ValidationReport::new();
    let e = FinSetObj::empty();
    let n = carriers.len();
    limit.admit((n as u128).pow(4))?;
    let sizes = |xs: &[&FinSetObj]| xs.iter().map(|x| x.len().to_string()).collect::<Vec<_>>().join(",");

    for a in carriers {
        if !lambda(a).is_bijection() || !rho(a).is_bijection() {
            report.push(
                Law::Invertibility,
                format!("unitors at |A|={} are not bijections", a.len()),
            );
        }
        for b in carriers {
            let s = braiding(a, b);
            if !s.then(&braiding(b, a)).is_identity() {
                report.push(
                    Law::Symmetry,
                    format!("σ . σ is not the identity at ({})", sizes(&[a, b])),
                );
            }
            let lhs = t(&rho(a), &id(b)).then(&associator(a, &e, b));
            if lhs != t(&id(a), &lambda(b)) {
                report.push(Law::Triangle, format!("triangle fails at ({})", sizes(&[a, b])));
            }
            for c in carriers {
                let al = associator(a, b, c);
                let inv = associator_inverse(a, b, c);
                if !al.then(&inv).is_identity() || !inv.then(&al).is_identity() {
                    report.push(
                        Law::Invertibility,
                        format!("α is not invertible at ({})", sizes(&[a, b, c])),
                    );
                }
                let bc = egger_tensor(b, c);
                let lhs = al.then(&braiding(a, &bc)).then(&associator(b, c, a));
                let rhs = t(&braiding(a, b), &id(c))
                    .then(&associator(b, a, c))
                    .then(&t(&id(b), &braiding(a, c)));
                if lhs != rhs {
                    report.push(Law::Hexagon, format!("first hexagon fails at ({})", sizes(&[a, b, c])));
                }
                let ab = egger_tensor(a, b);
                let lhs = inv.then(&braiding(&ab, c)).then(&associator_inverse(c, a, b));
                let rhs = t(&id(a), &braiding(b, c))
                    .then(&associator_inverse(a, c, b))
                    .then(&t(&braiding(a, c), &id(b)));
                if lhs != rhs {
                    report.push(Law::Hexagon, format!("second hexagon fails at ({})", sizes(&[a, b, c])));
                }
                for d in carriers {
                    let lhs = associator(&ab, c, d).then(&associator(a, b, &egger_tensor(c, d)));
                    let rhs = t(&associator(a, b, c), &id(d))
                        .then(&associator(a, &bc, d))
                        .then(&t(&id(a), &associator(b, c, d)));
                    if lhs != rhs {
                        report.push(Law::Pentagon, format!("pentagon fails at ({})", sizes(&[a, b, c, d])));
                    }
                }
            }
        }
    }

    let maps = probes(carriers, limit)?;
    limit.admit(maps.len() as u128 * (n as u128).pow(2))?;
    for f in &maps {
        let (x, y) = (&f.dom, &f.cod);
        if f.then(&lambda(y)) != lambda(x).then(&t(&id(&e), f)) || f.then(&rho(y)) != rho(x).then(&t(f, &id(&e))) {
            report.push(
                Law::Naturality,
                format!("unitors are not natural at a map {}→{}", x.len(), y.len()),
            );
        }
        for b in carriers {
            // f in the first slot, then the second
            if t(f, &id(b)).then(&braiding(y, b)) != braiding(x, b).then(&t(&id(b), f))
                || t(&id(b), f).then(&braiding(b, y)) != braiding(b, x).then(&t(f, &id(b)))
            {
                report.push(
                    Law::Naturality,
                    format!("σ is not natural at a map {}→{}", x.len(), y.len()),
                );
            }
            for c in carriers {
                let first = t(&t(f, &id(b)), &id(c)).then(&associator(y, b, c))
                    == associator(x, b, c).then(&t(f, &id(&egger_tensor(b, c))));
                let second = t(&t(&id(b), f), &id(c)).then(&associator(b, y, c))
                    == associator(b, x, c).then(&t(&id(b), &t(f, &id(c))));
                let third = t(&id(&egger_tensor(b, c)), f).then(&associator(b, c, y))
                    == associator(b, c, x).then(&t(&id(b), &t(&id(c), f)));
                if !(first && second && third) {
                    report.push(
                        Law::Naturality,
                        format!("α is not natural at a map {}→{}", x.len(), y.len()),
                    );
                }
            }
        }
    }
    Ok(report)
}

/// The tensor category of finite sets, for the generic composites in
/// [`crate::magmal`].
#[derive(Debug, Clone, Copy, Default)]
pub struct Egger;

impl Tensor for Egger {
    type Ob = FinSetObj;
    type Hom = SetMor;

    fn dom(&self, f: &SetMor) -> FinSetObj {
        f.dom.clone()
    }

    fn cod(&self, f: &SetMor) -> FinSetObj {
        f.cod.clone()
    }

    fn id(&self, a: &FinSetObj) -> SetMor {
        SetMor::identity(a)
    }

    fn compose(&self, g: &SetMor, f: &SetMor) -> SetMor {
        f.then(g)
    }

    fn tensor(&self, a: &FinSetObj, b: &FinSetObj) -> FinSetObj {
        egger_tensor(a, b)
    }

    fn tensor_hom(&self, f: &SetMor, g: &SetMor) -> SetMor {
        egger_tensor_mor(f, g)
    }

    fn unit(&self) -> FinSetObj {
        FinSetObj::empty()
    }

    fn lambda(&self, a: &FinSetObj) -> SetMor {
        lambda(a)
    }

    fn rho(&self, a: &FinSetObj) -> SetMor {
        rho(a)
    }
}

/// `η_A : ∅ -> A` empty and `μ_A` the left band.
#[derive(Debug, Clone, Copy, Default)]
pub struct LeftBand;

impl MagmaFamily<Egger> for LeftBand {
    fn eta(&self, _t: &Egger, a: &FinSetObj) -> SetMor {
        SetMor::from_empty(a)
    }

    fn mu(&self, _t: &Egger, a: &FinSetObj) -> SetMor {
        left_band_magma(a).1
    }
}

/// `(η, μ)` with `μ(inl x) = x`, `μ(mid(x, y)) = x`, `μ(inr y) = y`.
pub fn left_band_magma(a: &FinSetObj) -> (SetMor, SetMor) {
    let mu = SetMor::from_elements(&egger_tensor(a, a), a, |e| match e {
        EggerElem::Inl(x) | EggerElem::Mid(x, _) | EggerElem::Inr(x) => (**x).clone(),
        EggerElem::Atom(_) => unreachable!("not a tensor element"),
    });
    (SetMor::from_empty(a), mu)
}

/// One element followed through the arrows of the coproduct composite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram2Witness {
    pub element: EggerElem,
    pub trace: Vec<(String, EggerElem)>,
    pub image: EggerElem,
}

fn diagram2_trace(e: &EggerElem) -> Vec<(String, EggerElem)> {
    let split = match e {
        EggerElem::Inl(x) => inl(&inl(x)),
        EggerElem::Mid(x, y) => mid(&inl(x), &inr(y)),
        EggerElem::Inr(y) => inr(&inr(y)),
        EggerElem::Atom(_) => unreachable!("not a tensor element"),
    };
    // η is empty, so (A ⊗ η_B) ⊗ (η_A ⊗ B) keeps every tag and only
    // enlarges the carrier
    let injected = split.clone();
    let out = match &injected {
        EggerElem::Inl(z) | EggerElem::Mid(z, _) | EggerElem::Inr(z) => (**z).clone(),
        EggerElem::Atom(_) => unreachable!("not a tensor element"),
    };
    vec![
        ("ρ_A ⊗ λ_B".to_string(), split),
        ("(A ⊗ η_B) ⊗ (η_A ⊗ B)".to_string(), injected),
        ("μ_{A⊗B}".to_string(), out),
    ]
}

/// The composite `A ⊗ B -> A ⊗ B`, computed element by element.
pub fn diagram2_composite(a: &FinSetObj, b: &FinSetObj) -> SetMor {
    let ab = egger_tensor(a, b);
    SetMor::from_elements(&ab, &ab, |e| diagram2_trace(e).pop().expect("trace has steps").1)
}

/// The first element of `A ⊗ B` not fixed by the composite, with its trace.
pub fn check_diagram2_egger(a: &FinSetObj, b: &FinSetObj) -> Option<Diagram2Witness> {
    egger_tensor(a, b).elements().iter().find_map(|e| {
        let trace = diagram2_trace(e);
        let image = trace.last().expect("trace has steps").1.clone();
        (image != *e).then(|| Diagram2Witness {
            element: e.clone(),
            trace,
            image,
        })
    })
}

/// The coproduct idempotent computed by the generic composite.
pub fn egger_coproduct_idempotent(a: &FinSetObj, b: &FinSetObj) -> SetMor {
    quasi_symmetry_composite(&Egger, &LeftBand, a, b)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EggerCoproduct {
    pub idempotent: SetMor,
    pub summand: FinSetObj,
    /// `A ⊗ B -> summand`
    pub retraction: SetMor,
    /// `summand -> A ⊗ B`
    pub section: SetMor,
    pub left: SetMor,
    pub right: SetMor,
}

/// Splits the coproduct idempotent through its image and composes the
/// coprojections with the retraction.
pub fn egger_synthesize_coproduct(a: &FinSetObj, b: &FinSetObj) -> EggerCoproduct {
    let e = egger_coproduct_idempotent(a, b);
    let image = e.image();
    let summand = FinSetObj::new(image.iter().map(|&k| e.cod.element(k).clone()).collect()).expect("image of a map");
    let section = SetMor::new(summand.clone(), e.cod.clone(), image.clone()).expect("inclusion");
    let slot: HashMap<usize, usize> = image.iter().enumerate().map(|(i, &k)| (k, i)).collect();
    let retraction =
        SetMor::new(e.dom.clone(), summand.clone(), e.map.iter().map(|k| slot[k]).collect()).expect("corestriction");
    let left = left_coprojection(&Egger, &LeftBand, a, b).then(&retraction);
    let right = right_coprojection(&Egger, &LeftBand, a, b).then(&retraction);
    EggerCoproduct {
        idempotent: e,
        summand,
        retraction,
        section,
        left,
        right,
    }
}

impl EggerCoproduct {
    /// `section . retraction = e` and `retraction . section = 1`.
    pub fn splits(&self) -> bool {
        self.retraction.then(&self.section) == self.idempotent && self.section.then(&self.retraction).is_identity()
    }
}

/// The full subcategory of finite sets on a list of named carriers, with
/// every function as a morphism.
pub struct FinSetCategory {
    pub cat: FinCat,
    pub carriers: Vec<FinSetObj>,
    lookup: HashMap<(usize, usize, Vec<usize>), Mor>,
}

impl FinSetCategory {
    pub fn new(carriers: &[(String, FinSetObj)], limit: SearchLimit) -> Result<Self> {
        let total: u128 = carriers
            .iter()
            .flat_map(|(_, a)| carriers.iter().map(move |(_, b)| count_maps(a.len(), b.len())))
            .sum();
        limit.admit(total)?;
        let mut decls = Vec::new();
        let mut lookup = HashMap::new();
        let mut maps = Vec::new();
        for (i, (na, a)) in carriers.iter().enumerate() {
            for (j, (nb, b)) in carriers.iter().enumerate() {
                for map in tables(a.len(), b.len()) {
                    let name = format!("{na}->{nb}{map:?}");
                    lookup.insert((i, j, map.clone()), Mor(decls.len() as u32));
                    decls.push((name, Obj(i as u32), Obj(j as u32)));
                    maps.push(map);
                }
            }
        }
        let mut cat = FinCat::new(carriers.iter().map(|(n, _)| n.clone()).collect(), decls)?;
        for (i, (_, a)) in carriers.iter().enumerate() {
            cat.set_identity(Obj(i as u32), lookup[&(i, i, (0..a.len()).collect())]);
        }
        for f in cat.morphisms() {
            for g in cat.outgoing(cat.cod(f)).to_vec() {
                let composite: Vec<usize> = maps[f.idx()].iter().map(|&k| maps[g.idx()][k]).collect();
                let h = lookup[&(cat.dom(f).idx(), cat.cod(g).idx(), composite)];
                cat.set_composite(g, f, h)?;
            }
        }
        Ok(FinSetCategory {
            cat,
            carriers: carriers.iter().map(|(_, a)| a.clone()).collect(),
            lookup,
        })
    }

    /// The morphism for `f`, which must go between carriers `src` and `dst`.
    pub fn morphism(&self, src: usize, dst: usize, f: &SetMor) -> Option<Mor> {
        self.lookup.get(&(src, dst, f.map.clone())).copied()
    }
}

/// Runs the brute-force coproduct oracle on the synthesized cospan, with
/// one probe target of every size up to `probe_bound`.
pub fn verify_egger_coproduct(
    a: &FinSetObj,
    b: &FinSetObj,
    cp: &EggerCoproduct,
    probe_bound: usize,
    limit: SearchLimit,
) -> Result<bool> {
    let mut carriers = vec![
        ("A".to_string(), a.clone()),
        ("B".to_string(), b.clone()),
        ("S".to_string(), cp.summand.clone()),
    ];
    carriers.extend((0..=probe_bound).map(|k| (format!("T{k}"), FinSetObj::atoms("x", k))));
    let full = FinSetCategory::new(&carriers, limit)?;
    let (Some(left), Some(right)) = (full.morphism(0, 2, &cp.left), full.morphism(1, 2, &cp.right)) else {
        return Ok(false);
    };
    Ok(is_coproduct(
        &full.cat,
        &Cospan {
            apex: Obj(2),
            left,
            right,
        },
    ))
}

/// Unit laws and naturality of the left band, checked on every carrier of
/// size at most `probe_bound` and every map between them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypothesisReport {
    pub carriers: usize,
    pub probes: usize,
    pub unit_laws: bool,
    pub eta_natural: bool,
    pub mu_natural: bool,
}

impl HypothesisReport {
    pub fn all_hold(&self) -> bool {
        self.unit_laws && self.eta_natural && self.mu_natural
    }
}

pub fn check_egger_hypotheses(probe_bound: usize, limit: SearchLimit) -> Result<HypothesisReport> {
    use crate::magmal::{left_unit_composite, right_unit_composite};
    let carriers: Vec<FinSetObj> = (0..=probe_bound).map(|k| FinSetObj::atoms("a", k)).collect();
    let unit_laws = carriers.iter().all(|a| {
        left_unit_composite(&Egger, &LeftBand, a).is_identity()
            && right_unit_composite(&Egger, &LeftBand, a).is_identity()
    });
    let maps = probes(&carriers, limit)?;
    let g = LeftBand;
    let eta_natural = maps
        .iter()
        .all(|f| g.eta(&Egger, &f.dom).then(f) == g.eta(&Egger, &f.cod));
    let mu_natural = maps
        .iter()
        .all(|f| g.mu(&Egger, &f.dom).then(f) == t(f, f).then(&g.mu(&Egger, &f.cod)));
    Ok(HypothesisReport {
        carriers: carriers.len(),
        probes: maps.len(),
        unit_laws,
        eta_natural,
        mu_natural,
    })
}

/// `μ` on an `n`-element carrier from its `mid` block, with the `inl` and
/// `inr` blocks fixed by the unit laws.
pub fn mu_from_mid(m: &FinSetObj, table: &[usize]) -> SetMor {
    let n = m.len();
    assert_eq!(table.len(), n * n);
    let map = (0..n).chain(table.iter().copied()).chain(0..n).collect();
    SetMor::new(egger_tensor(m, m), m.clone(), map).expect("table values lie in the carrier")
}

fn egger_monoid_units(m: &FinSetObj, mu: &SetMor) -> bool {
    use crate::magmal::{left_unit_composite, right_unit_composite};
    struct Given<'a>(&'a SetMor);
    impl MagmaFamily<Egger> for Given<'_> {
        fn eta(&self, _t: &Egger, a: &FinSetObj) -> SetMor {
            SetMor::from_empty(a)
        }
        fn mu(&self, _t: &Egger, _a: &FinSetObj) -> SetMor {
            self.0.clone()
        }
    }
    let g = Given(mu);
    left_unit_composite(&Egger, &g, m).is_identity() && right_unit_composite(&Egger, &g, m).is_identity()
}

/// Unit laws for the empty `η` and associativity
/// `μ . (μ ⊗ M) = μ . (M ⊗ μ) . α`.
pub fn egger_monoid_laws(m: &FinSetObj, mu: &SetMor) -> bool {
    egger_monoid_units(m, mu) && t(mu, &id(m)).then(mu) == associator(m, m, m).then(&t(&id(m), mu)).then(mu)
}

/// Number of monoids on an `n`-element carrier for the tensor of finite sets.
pub fn egger_monoid_count(n: usize, limit: SearchLimit) -> Result<usize> {
    limit.admit(count_maps(n * n, n))?;
    let m = FinSetObj::atoms("m", n);
    let alpha = associator(&m, &m, &m);
    let ident: Vec<usize> = (0..n).collect();
    let count = tables(n * n, n)
        .filter(|table| {
            let mu = mu_from_mid(&m, table);
            if !egger_monoid_units(&m, &mu) {
                return false;
            }
            // μ . (μ ⊗ M) against μ . (M ⊗ μ) . α, on index tables
            let left = tensor_table(&mu.map, n, &ident, n);
            let right = tensor_table(&ident, n, &mu.map, n);
            let lhs = left.iter().map(|&k| mu.map[k]);
            let rhs = alpha.map.iter().map(|&k| mu.map[right[k]]);
            lhs.eq(rhs)
        })
        .count();
    Ok(count)
}

/// Number of associative binary operations on `n` elements.
pub fn semigroup_count(n: usize, limit: SearchLimit) -> Result<usize> {
    limit.admit(count_maps(n * n, n))?;
    Ok(tables(n * n, n).filter(|op| is_associative_table(n, op)).count())
}

/// `(x y) z = x (y z)` for an operation given row-major.
pub fn is_associative_table(n: usize, op: &[usize]) -> bool {
    let mul = |x: usize, y: usize| op[x * n + y];
    (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| mul(mul(x, y), z) == mul(x, mul(y, z)))))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MonoidCounts {
    pub carrier: usize,
    pub egger_monoids: usize,
    pub semigroups: usize,
}

pub fn monoid_semigroup_correspondence(n: usize, limit: SearchLimit) -> Result<MonoidCounts> {
    Ok(MonoidCounts {
        carrier: n,
        egger_monoids: egger_monoid_count(n, limit)?,
        semigroups: semigroup_count(n, limit)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(prefix: &str, n: usize) -> FinSetObj {
        FinSetObj::atoms(prefix, n)
    }

    #[test]
    fn tensor_sizes_and_order() {
        assert_eq!(egger_tensor(&set("a", 2), &set("b", 2)).len(), 8);
        assert_eq!(egger_tensor(&set("a", 1), &set("b", 1)).len(), 3);
        let t = egger_tensor(&set("a", 2), &set("b", 1));
        let shown: Vec<String> = t.elements().iter().map(|e| e.to_string()).collect();
        assert_eq!(shown, ["inl a0", "inl a1", "mid(a0,b0)", "mid(a1,b0)", "inr b0"]);
    }

    #[test]
    fn empty_left_factor_is_the_right_block() {
        let b = set("b", 3);
        let t = egger_tensor(&FinSetObj::empty(), &b);
        assert_eq!(t.elements(), b.elements().iter().map(inr).collect::<Vec<_>>());
        assert!(lambda(&b).is_bijection());
    }

    #[test]
    fn tensor_of_maps_by_index_matches_elements() {
        let (a, b) = (set("a", 2), set("b", 3));
        for f in all_maps(&a, &b) {
            for g in all_maps(&b, &a).step_by(5) {
                let fg = egger_tensor_mor(&f, &g);
                let by_elem = SetMor::from_elements(&fg.dom, &fg.cod, |e| match e {
                    EggerElem::Inl(x) => inl(f.apply_elem(x).unwrap()),
                    EggerElem::Mid(x, y) => mid(f.apply_elem(x).unwrap(), g.apply_elem(y).unwrap()),
                    EggerElem::Inr(y) => inr(g.apply_elem(y).unwrap()),
                    EggerElem::Atom(_) => unreachable!(),
                });
                assert_eq!(fg, by_elem);
            }
        }
    }

    #[test]
    fn constant_map_collapses_the_first_coordinate() {
        let a = set("a", 3);
        let c = SetMor::new(a.clone(), a.clone(), vec![1, 1, 1]).unwrap();
        let ct = egger_tensor_mor(&c, &SetMor::identity(&a));
        for x in 0..3 {
            for y in 0..3 {
                assert_eq!(ct.apply(3 + x * 3 + y), 3 + 3 + y);
            }
        }
    }

    #[test]
    fn braiding_on_singletons() {
        let (a, b) = (set("a", 1), set("b", 1));
        let s = braiding(&a, &b);
        let [x, y] = [EggerElem::atom("a0"), EggerElem::atom("b0")];
        assert_eq!(s.apply_elem(&inl(&x)), Some(&inr(&x)));
        assert_eq!(s.apply_elem(&mid(&x, &y)), Some(&mid(&y, &x)));
        assert_eq!(s.apply_elem(&inr(&y)), Some(&inl(&y)));
    }

    #[test]
    fn coherence_on_small_carriers() {
        let empty = [FinSetObj::empty()];
        assert!(check_coherence(&empty, SearchLimit::DEFAULT).unwrap().is_ok());
        let carriers = [FinSetObj::empty(), set("a", 1), set("a", 2)];
        let r = check_coherence(&carriers, SearchLimit::DEFAULT).unwrap();
        assert!(r.is_ok(), "{r}");
        let one = set("a", 1);
        let c = egger_coherence(&one, &one, &one);
        assert_eq!(c.associator.dom.len(), 7);
        assert!(c.associator.is_bijection());
    }

    #[test]
    fn left_band_values() {
        let a = set("a", 2);
        let (eta, mu) = left_band_magma(&a);
        assert!(eta.dom.is_empty());
        let (x, y) = (EggerElem::atom("a0"), EggerElem::atom("a1"));
        assert_eq!(mu.apply_elem(&mid(&x, &y)), Some(&x));
        assert_eq!(mu.apply_elem(&inr(&y)), Some(&y));
        let one = set("a", 1);
        assert!(left_band_magma(&one).1.map().iter().all(|&k| k == 0));
        let swap = SetMor::new(a.clone(), a.clone(), vec![1, 0]).unwrap();
        assert_eq!(mu.then(&swap), t(&swap, &swap).then(&mu));
    }

    #[test]
    fn hypotheses_hold_up_to_three() {
        let r = check_egger_hypotheses(3, SearchLimit::DEFAULT).unwrap();
        assert!(r.all_hold(), "{r:?}");
        assert_eq!(r.carriers, 4);
    }

    #[test]
    fn diagram2_witnesses() {
        let w = check_diagram2_egger(&set("a", 2), &set("b", 2)).unwrap();
        assert_eq!(w.element.to_string(), "mid(a0,b0)");
        assert_eq!(w.image.to_string(), "inl a0");
        assert_eq!(w.trace.len(), 3);
        let w = check_diagram2_egger(&set("a", 1), &set("b", 1)).unwrap();
        assert_eq!(w.element.to_string(), "mid(a0,b0)");
        assert!(check_diagram2_egger(&FinSetObj::empty(), &set("b", 2)).is_none());
        assert!(check_diagram2_egger(&set("a", 2), &FinSetObj::empty()).is_none());
    }

    #[test]
    fn generic_idempotent_matches_the_direct_trace() {
        for (m, n) in [(0, 0), (1, 1), (2, 2), (3, 2), (0, 3)] {
            let (a, b) = (set("a", m), set("b", n));
            let e = egger_coproduct_idempotent(&a, &b);
            assert_eq!(e, diagram2_composite(&a, &b), "({m},{n})");
            assert_eq!(e.then(&e), e);
        }
    }

    #[test]
    fn splitting_gives_coproducts() {
        for (m, n, size) in [(2, 2, 4), (0, 2, 2), (3, 1, 4), (1, 1, 2)] {
            let (a, b) = (set("a", m), set("b", n));
            let cp = egger_synthesize_coproduct(&a, &b);
            assert_eq!(cp.summand.len(), size);
            assert!(cp.splits());
            assert!(
                verify_egger_coproduct(&a, &b, &cp, 2, SearchLimit::DEFAULT).unwrap(),
                "({m},{n})"
            );
        }
    }

    #[test]
    fn the_tensor_itself_is_not_a_coproduct() {
        let (a, b) = (set("a", 1), set("b", 1));
        let ab = egger_tensor(&a, &b);
        let fake = EggerCoproduct {
            idempotent: SetMor::identity(&ab),
            summand: ab.clone(),
            retraction: SetMor::identity(&ab),
            section: SetMor::identity(&ab),
            left: left_coprojection(&Egger, &LeftBand, &a, &b),
            right: right_coprojection(&Egger, &LeftBand, &a, &b),
        };
        assert!(!verify_egger_coproduct(&a, &b, &fake, 2, SearchLimit::DEFAULT).unwrap());
    }

    #[test]
    fn small_monoid_counts() {
        assert_eq!(
            monoid_semigroup_correspondence(1, SearchLimit::DEFAULT)
                .unwrap()
                .egger_monoids,
            1
        );
        let c = monoid_semigroup_correspondence(2, SearchLimit::DEFAULT).unwrap();
        assert_eq!(c.egger_monoids, c.semigroups);
        assert!(matches!(
            egger_monoid_count(4, SearchLimit::DEFAULT),
            Err(Error::SizeLimitExceeded { .. })
        ));
    }

    #[test]
    fn fast_count_matches_the_law_checker() {
        let m = set("m", 2);
        let slow = tables(4, 2)
            .filter(|t| egger_monoid_laws(&m, &mu_from_mid(&m, t)))
            .count();
        assert_eq!(egger_monoid_count(2, SearchLimit::DEFAULT).unwrap(), slow);
    }

    #[test]
    fn malformed_sets_and_maps() {
        let x = EggerElem::atom("x");
        assert!(FinSetObj::new(vec![x.clone(), x]).is_err());
        let a = set("a", 2);
        assert!(SetMor::new(a.clone(), a.clone(), vec![0]).is_err());
        assert!(SetMor::new(a.clone(), a.clone(), vec![0, 2]).is_err());
    }
}
