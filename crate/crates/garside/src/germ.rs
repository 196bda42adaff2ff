//! Finite germs: a precategory with identities and a partial product.
//!
//! A germ is stored as a dense table: objects and elements are small integer
//! ids, the partial product is an explicit matrix where absence means
//! "undefined". All operations here are pure reads over an immutable table.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Sentinel for "no entry" in dense id matrices.
pub(crate) const NONE: u32 = u32::MAX;

/// Hard cap on table size so dense matrices stay reasonable.
pub const MAX_ELEMENTS: usize = 4096;

/// Index of an object of the precategory. Dense, `0..num_objects`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ObjectId(pub u32);

/// Index of an element of the germ. Dense, `0..num_elements`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ElementId(pub u32);

impl ObjectId {
    pub fn idx(self) -> usize {
        self.0 as usize
    }
}

impl ElementId {
    pub fn idx(self) -> usize {
        self.0 as usize
    }
}

/// Structural problems that make a table unusable (as opposed to a
/// well-formed table that merely violates the germ axioms).
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StructuralError {
    #[error("element {element} references object {object} out of range (have {num_objects} objects)")]
    ObjectOutOfRange {
        element: String,
        object: u32,
        num_objects: usize,
    },
    #[error("product entry ({left}, {right}) -> {result} references element id out of range (have {num_elements} elements)")]
    ElementOutOfRange {
        left: u32,
        right: u32,
        result: u32,
        num_elements: usize,
    },
    #[error("object {object} has no identity element")]
    MissingIdentity { object: String },
    #[error("identity {element} of object {object} has source/target not equal to that object")]
    BadIdentityEndpoints { element: String, object: String },
    #[error("object {object} has more than one identity row")]
    DuplicateIdentity { object: String },
    #[error("conflicting product entries for ({left}, {right}): {first} vs {second}")]
    ConflictingProduct {
        left: String,
        right: String,
        first: String,
        second: String,
    },
    #[error("table has {got} elements, exceeding the supported maximum {max}")]
    TooLarge { got: usize, max: usize },
    #[error("duplicate element name {name:?}")]
    DuplicateName { name: String },
}

/// Immutable finite germ: objects, elements with endpoints, identities, and
/// the partial product. Construction checks structure only; the axioms
/// (endpoint bookkeeping, identity laws, the exchange law) are checked
/// by [`validate_germ`].
#[derive(Clone, Debug)]
pub struct GermTable {
    object_names: Vec<String>,
    element_names: Vec<String>,
    source: Vec<ObjectId>,
    target: Vec<ObjectId>,
    identities: Vec<ElementId>,
    product: Vec<u32>,
    n: usize,
}

impl GermTable {
    /// Build a table from raw parts, checking ids are in range, every object
    /// has exactly one identity with matching endpoints, and no conflicting
    /// product entries exist.
    pub fn new(
        objects: Vec<String>,
        elements: Vec<(String, ObjectId, ObjectId)>,
        identities: Vec<(ObjectId, ElementId)>,
        products: Vec<(ElementId, ElementId, ElementId)>,
    ) -> Result<Self, StructuralError> {
        let n = elements.len();
        if n > MAX_ELEMENTS {
            return Err(StructuralError::TooLarge {
                got: n,
                max: MAX_ELEMENTS,
            });
        }
        let num_objects = objects.len();
        for (i, name) in objects.iter().enumerate() {
            if objects[..i].contains(name) {
                return Err(StructuralError::DuplicateName { name: name.clone() });
            }
        }
        let mut element_names = Vec::with_capacity(n);
        let mut source = Vec::with_capacity(n);
        let mut target = Vec::with_capacity(n);
        for (name, s, t) in elements {
            for ob in [s, t] {
                if ob.idx() >= num_objects {
                    return Err(StructuralError::ObjectOutOfRange {
                        element: name.clone(),
                        object: ob.0,
                        num_objects,
                    });
                }
            }
            if element_names.contains(&name) {
                return Err(StructuralError::DuplicateName { name });
            }
            element_names.push(name);
            source.push(s);
            target.push(t);
        }

        let mut identity_of = vec![NONE; num_objects];
        for (ob, el) in identities {
            if ob.idx() >= num_objects || el.idx() >= n {
                return Err(StructuralError::ObjectOutOfRange {
                    element: format!("identity entry ({}, {})", ob.0, el.0),
                    object: ob.0,
                    num_objects,
                });
            }
            if identity_of[ob.idx()] != NONE {
                return Err(StructuralError::DuplicateIdentity {
                    object: objects[ob.idx()].clone(),
                });
            }
            if source[el.idx()] != ob || target[el.idx()] != ob {
                return Err(StructuralError::BadIdentityEndpoints {
                    element: element_names[el.idx()].clone(),
                    object: objects[ob.idx()].clone(),
                });
            }
            identity_of[ob.idx()] = el.0;
        }
        for (ob, &id) in identity_of.iter().enumerate() {
            if id == NONE {
                return Err(StructuralError::MissingIdentity {
                    object: objects[ob].clone(),
                });
            }
        }

        let mut product = vec![NONE; n * n];
        for (f, g, h) in products {
            if f.idx() >= n || g.idx() >= n || h.idx() >= n {
                return Err(StructuralError::ElementOutOfRange {
                    left: f.0,
                    right: g.0,
                    result: h.0,
                    num_elements: n,
                });
            }
            let slot = &mut product[f.idx() * n + g.idx()];
            if *slot != NONE && *slot != h.0 {
                return Err(StructuralError::ConflictingProduct {
                    left: element_names[f.idx()].clone(),
                    right: element_names[g.idx()].clone(),
                    first: element_names[*slot as usize].clone(),
                    second: element_names[h.idx()].clone(),
                });
            }
            *slot = h.0;
        }

        Ok(GermTable {
            object_names: objects,
            element_names,
            source,
            target,
            identities: identity_of.into_iter().map(ElementId).collect(),
            product,
            n,
        })
    }

    pub fn num_objects(&self) -> usize {
        self.object_names.len()
    }

    pub fn num_elements(&self) -> usize {
        self.n
    }

    pub fn objects(&self) -> impl Iterator<Item = ObjectId> {
        (0..self.num_objects() as u32).map(ObjectId)
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> {
        (0..self.n as u32).map(ElementId)
    }

    pub fn source(&self, e: ElementId) -> ObjectId {
        self.source[e.idx()]
    }

    pub fn target(&self, e: ElementId) -> ObjectId {
        self.target[e.idx()]
    }

    pub fn identity(&self, x: ObjectId) -> ElementId {
        self.identities[x.idx()]
    }

    pub fn is_identity(&self, e: ElementId) -> bool {
        self.identities[self.source(e).idx()] == e
    }

    /// The partial product; `None` means undefined.
    pub fn product(&self, f: ElementId, g: ElementId) -> Option<ElementId> {
        match self.product[f.idx() * self.n + g.idx()] {
            NONE => None,
            h => Some(ElementId(h)),
        }
    }

    /// `target(f) == source(g)`.
    pub fn composable(&self, f: ElementId, g: ElementId) -> bool {
        self.target(f) == self.source(g)
    }

    pub fn element_name(&self, e: ElementId) -> &str {
        &self.element_names[e.idx()]
    }

    pub fn object_name(&self, x: ObjectId) -> &str {
        &self.object_names[x.idx()]
    }

    pub fn element_by_name(&self, name: &str) -> Option<ElementId> {
        self.element_names
            .iter()
            .position(|n| n == name)
            .map(|i| ElementId(i as u32))
    }

    /// All defined product entries `(f, g, f•g)`.
    pub fn defined_products(&self) -> impl Iterator<Item = (ElementId, ElementId, ElementId)> + '_ {
        self.product.iter().enumerate().filter_map(move |(i, &h)| {
            if h == NONE {
                None
            } else {
                Some((
                    ElementId((i / self.n) as u32),
                    ElementId((i % self.n) as u32),
                    ElementId(h),
                ))
            }
        })
    }

    /// Copy with one product entry removed. Handy for building negative
    /// controls out of a known-good germ.
    pub fn without_product(&self, f: ElementId, g: ElementId) -> GermTable {
        let mut t = self.clone();
        t.product[f.idx() * self.n + g.idx()] = NONE;
        t
    }

    /// Copy with one product entry replaced or added (no structural checks
    /// beyond id range; intended for negative controls).
    pub fn with_product(&self, f: ElementId, g: ElementId, h: ElementId) -> GermTable {
        assert!(f.idx() < self.n && g.idx() < self.n && h.idx() < self.n);
        let mut t = self.clone();
        t.product[f.idx() * self.n + g.idx()] = h.0;
        t
    }

    /// Copy with elements renamed (order-preserving).
    pub fn with_element_names(&self, names: Vec<String>) -> Result<GermTable, StructuralError> {
        assert_eq!(names.len(), self.n);
        for (i, name) in names.iter().enumerate() {
            if names[..i].contains(name) {
                return Err(StructuralError::DuplicateName { name: name.clone() });
            }
        }
        let mut t = self.clone();
        t.element_names = names;
        Ok(t)
    }
}

/// Witness for a violated universal property. Each carries the elements that
/// replay to the stated violation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "axiom", rename_all = "kebab-case")]
pub enum AxiomViolation {
    /// A product entry on a non-composable pair, or one whose result has the
    /// wrong endpoints.
    Endpoints { f: ElementId, g: ElementId },
    /// `1_x • f` or `f • 1_y` missing or not equal to `f`.
    IdentityLaw { f: ElementId },
    /// `f•g` and `g•h` defined, but `(f•g)•h` and `f•(g•h)` disagree in
    /// definedness or value.
    Exchange {
        f: ElementId,
        g: ElementId,
        h: ElementId,
    },
    /// `(f•g)•h` defined while `g•h` is not.
    LeftAssoc {
        f: ElementId,
        g: ElementId,
        h: ElementId,
    },
    /// `f•(g•h)` defined while `f•g` is not.
    RightAssoc {
        f: ElementId,
        g: ElementId,
        h: ElementId,
    },
    /// `f•g = f•g'` with `g != g'`.
    LeftCancel {
        f: ElementId,
        g: ElementId,
        g_prime: ElementId,
    },
    /// `g•f = g'•f` with `g != g'`.
    RightCancel {
        f: ElementId,
        g: ElementId,
        g_prime: ElementId,
    },
}

/// Result of axiom validation. `valid` covers the three defining germ axioms;
/// the remaining flags are the optional properties that the recognition
/// machinery cares about. Every false flag is backed by at least one witness
/// in `counterexamples`.
#[derive(Clone, Debug, Serialize)]
pub struct AxiomReport {
    pub valid: bool,
    pub left_associative: bool,
    pub right_associative: bool,
    pub left_cancellative: bool,
    pub right_cancellative: bool,
    pub invertibles: Vec<ElementId>,
    pub atoms: Vec<ElementId>,
    pub counterexamples: Vec<AxiomViolation>,
}

fn check_axioms(t: &GermTable, full: bool) -> AxiomReport {
    let n = t.num_elements();
    let mut counterexamples = Vec::new();

    // endpoint rule: entries only on composable pairs, with bookkeeping
    let mut endpoints_ok = true;
    for (f, g, h) in t.defined_products() {
        if !t.composable(f, g) || t.source(h) != t.source(f) || t.target(h) != t.target(g) {
            endpoints_ok = false;
            counterexamples.push(AxiomViolation::Endpoints { f, g });
        }
    }

    // identities act neutrally on both sides
    let mut identities_ok = true;
    for f in t.elements() {
        let lx = t.identity(t.source(f));
        let ry = t.identity(t.target(f));
        if t.product(lx, f) != Some(f) || t.product(f, ry) != Some(f) {
            identities_ok = false;
            counterexamples.push(AxiomViolation::IdentityLaw { f });
        }
    }

    // the exchange law plus the one-sided associativity variants, in a
    // single pass over pairs of defined entries
    let mut exchange_ok = true;
    let mut left_assoc = true;
    let mut right_assoc = true;
    let defined: Vec<_> = t.defined_products().collect();
    // index defined products by left factor for the right-assoc scan
    for &(f, g, fg) in &defined {
        for h in t.elements() {
            let gh = t.product(g, h);
            let fg_h = t.product(fg, h);
            if let Some(gh) = gh {
                // both inner products defined: exchange must hold
                let f_gh = t.product(f, gh);
                if fg_h != f_gh {
                    exchange_ok = false;
                    counterexamples.push(AxiomViolation::Exchange { f, g, h });
                }
            } else if fg_h.is_some() {
                left_assoc = false;
                counterexamples.push(AxiomViolation::LeftAssoc { f, g, h });
            }
        }
    }
    for &(g, h, gh) in &defined {
        for f in t.elements() {
            if t.product(f, gh).is_some() && t.product(f, g).is_none() {
                right_assoc = false;
                counterexamples.push(AxiomViolation::RightAssoc { f, g, h });
            }
        }
    }

    // Cancellativity.
    let mut left_cancel = true;
    let mut right_cancel = true;
    for f in t.elements() {
        let mut seen = vec![NONE; n];
        for g in t.elements() {
            if let Some(h) = t.product(f, g) {
                if seen[h.idx()] != NONE {
                    left_cancel = false;
                    counterexamples.push(AxiomViolation::LeftCancel {
                        f,
                        g: ElementId(seen[h.idx()]),
                        g_prime: g,
                    });
                } else {
                    seen[h.idx()] = g.0;
                }
            }
        }
    }
    for f in t.elements() {
        let mut seen = vec![NONE; n];
        for g in t.elements() {
            if let Some(h) = t.product(g, f) {
                if seen[h.idx()] != NONE {
                    right_cancel = false;
                    counterexamples.push(AxiomViolation::RightCancel {
                        f,
                        g: ElementId(seen[h.idx()]),
                        g_prime: g,
                    });
                } else {
                    seen[h.idx()] = g.0;
                }
            }
        }
    }

    let (invertibles, atoms) = if full {
        let inv = invertible_elements(t);
        let atoms = atom_elements(t, &inv);
        (
            inv.iter()
                .enumerate()
                .filter(|&(_, &b)| b)
                .map(|(i, _)| ElementId(i as u32))
                .collect(),
            atoms,
        )
    } else {
        (Vec::new(), Vec::new())
    };

    AxiomReport {
        valid: endpoints_ok && identities_ok && exchange_ok,
        left_associative: left_assoc,
        right_associative: right_assoc,
        left_cancellative: left_cancel,
        right_cancellative: right_cancel,
        invertibles,
        atoms,
        counterexamples,
    }
}

/// Check the defining axioms and the associativity/cancellativity flags.
/// Invertibles and atoms are left empty; use [`axiom_report`] for those.
pub fn validate_germ(t: &GermTable) -> AxiomReport {
    check_axioms(t, false)
}

/// Full report: axiom flags plus the invertible elements and the atoms.
pub fn axiom_report(t: &GermTable) -> AxiomReport {
    check_axioms(t, true)
}

/// `invertible[e]` iff some `e'` makes both `e•e'` and `e'•e` identities.
pub(crate) fn invertible_elements(t: &GermTable) -> Vec<bool> {
    let mut inv = vec![false; t.num_elements()];
    for e in t.elements() {
        for e2 in t.elements() {
            let fwd = t.product(e, e2).map(|h| t.is_identity(h)) == Some(true);
            let bwd = t.product(e2, e).map(|h| t.is_identity(h)) == Some(true);
            if fwd && bwd {
                inv[e.idx()] = true;
                break;
            }
        }
    }
    inv
}

/// Non-invertible elements with no factorization into two non-invertibles
/// inside the germ.
fn atom_elements(t: &GermTable, inv: &[bool]) -> Vec<ElementId> {
    let mut composite = vec![false; t.num_elements()];
    for (f, g, h) in t.defined_products() {
        if !inv[f.idx()] && !inv[g.idx()] {
            composite[h.idx()] = true;
        }
    }
    t.elements()
        .filter(|e| !inv[e.idx()] && !composite[e.idx()])
        .collect()
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DivisibilityError {
    #[error("elements do not share a {side} endpoint: {f} vs {g}")]
    EndpointMismatch {
        side: &'static str,
        f: String,
        g: String,
    },
}

/// Local divisibility inside the germ.
///
/// Left: does some `g'` satisfy `g = f • g'`? Right: does some `f'` satisfy
/// `g = f' • f`? Returns one witness complement when the answer is yes.
pub fn local_divisibility(
    t: &GermTable,
    f: ElementId,
    g: ElementId,
    side: Side,
) -> Result<Option<ElementId>, DivisibilityError> {
    match side {
        Side::Left => {
            if t.source(f) != t.source(g) {
                return Err(DivisibilityError::EndpointMismatch {
                    side: "source",
                    f: t.element_name(f).to_string(),
                    g: t.element_name(g).to_string(),
                });
            }
            Ok(t.elements().find(|&c| t.product(f, c) == Some(g)))
        }
        Side::Right => {
            if t.target(f) != t.target(g) {
                return Err(DivisibilityError::EndpointMismatch {
                    side: "target",
                    f: t.element_name(f).to_string(),
                    g: t.element_name(g).to_string(),
                });
            }
            Ok(t.elements().find(|&c| t.product(c, f) == Some(g)))
        }
    }
}

/// Dense left-divisibility data: for each `(f, h)` with `f ⋖ h`, one witness
/// complement `g` with `f•g = h`. With a left-cancellative germ the witness
/// is unique; otherwise the least id wins.
#[derive(Clone, Debug)]
pub(crate) struct LeftDivTable {
    n: usize,
    comp: Vec<u32>,
}

impl LeftDivTable {
    pub fn build(t: &GermTable) -> Self {
        let n = t.num_elements();
        let mut comp = vec![NONE; n * n];
        for (f, g, h) in t.defined_products() {
            let slot = &mut comp[f.idx() * n + h.idx()];
            if *slot == NONE || g.0 < *slot {
                *slot = g.0;
            }
        }
        LeftDivTable { n, comp }
    }

    /// `f ⋖ h` in the germ.
    pub fn divides(&self, f: ElementId, h: ElementId) -> bool {
        self.comp[f.idx() * self.n + h.idx()] != NONE
    }

    /// One `g` with `f•g = h`, if any.
    pub fn complement(&self, f: ElementId, h: ElementId) -> Option<ElementId> {
        match self.comp[f.idx() * self.n + h.idx()] {
            NONE => None,
            g => Some(ElementId(g)),
        }
    }
}

/// Deterministic selector for the ≃-classes: each element maps to the least
/// id in its class (f ≃ g when g = f•e for invertible e). Idempotent and
/// constant on classes.
pub fn eqir_class_selector(t: &GermTable) -> Vec<ElementId> {
    let inv = invertible_elements(t);
    let n = t.num_elements();
    let mut parent: Vec<u32> = (0..n as u32).collect();
    fn find(parent: &mut [u32], mut x: u32) -> u32 {
        while parent[x as usize] != x {
            parent[x as usize] = parent[parent[x as usize] as usize];
            x = parent[x as usize];
        }
        x
    }
    for (f, g, h) in t.defined_products() {
        if inv[g.idx()] {
            let (a, b) = (find(&mut parent, f.0), find(&mut parent, h.0));
            if a != b {
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                parent[hi as usize] = lo;
            }
        }
    }
    // path-compress and pick the least id per class (roots are least already
    // because unions always point the larger root at the smaller one)
    (0..n as u32)
        .map(|x| ElementId(find(&mut parent, x)))
        .collect()
}

/// Convenience: the one-object, one-element germ.
pub fn identity_only_germ() -> GermTable {
    GermTable::new(
        vec!["x".to_string()],
        vec![("1".to_string(), ObjectId(0), ObjectId(0))],
        vec![(ObjectId(0), ElementId(0))],
        vec![(ElementId(0), ElementId(0), ElementId(0))],
    )
    .expect("identity-only germ is structurally sound")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{classical_germ, dual_germ, CoxeterSpec};

    /// Classical S₃ germ with the conventional short names. BFS enumeration
    /// orders the elements as e, a, b, ab, ba, Δ.
    fn s3_classical() -> GermTable {
        classical_germ(&CoxeterSpec::a(3))
            .unwrap()
            .with_element_names(
                ["e", "a", "b", "ab", "ba", "Δ"]
                    .into_iter()
                    .map(String::from)
                    .collect(),
            )
            .unwrap()
    }

    #[test]
    fn identity_only_germ_is_valid() {
        let t = identity_only_germ();
        let r = axiom_report(&t);
        assert!(r.valid);
        assert!(r.left_associative && r.right_associative);
        assert!(r.left_cancellative && r.right_cancellative);
        assert_eq!(r.invertibles, vec![ElementId(0)]);
        assert!(r.atoms.is_empty());
        assert!(r.counterexamples.is_empty());
    }

    #[test]
    fn missing_identity_is_structural() {
        let err = GermTable::new(
            vec!["x".into()],
            vec![("1".into(), ObjectId(0), ObjectId(0))],
            vec![],
            vec![],
        )
        .unwrap_err();
        assert!(matches!(err, StructuralError::MissingIdentity { .. }));
    }

    #[test]
    fn out_of_range_product_is_structural() {
        let err = GermTable::new(
            vec!["x".into()],
            vec![("1".into(), ObjectId(0), ObjectId(0))],
            vec![(ObjectId(0), ElementId(0))],
            vec![(ElementId(0), ElementId(7), ElementId(0))],
        )
        .unwrap_err();
        assert!(matches!(err, StructuralError::ElementOutOfRange { .. }));
    }

    #[test]
    fn classical_s3_is_valid_and_cancellative() {
        let t = s3_classical();
        assert_eq!(t.num_elements(), 6);
        let r = axiom_report(&t);
        assert!(r.valid, "violations: {:?}", r.counterexamples);
        assert!(r.left_associative && r.right_associative);
        assert!(r.left_cancellative && r.right_cancellative);
        // only invertibles are the identities (derived germ)
        assert_eq!(r.invertibles.len(), 1);
        assert!(t.is_identity(r.invertibles[0]));
        // atoms are exactly the two simple generators (length-1 elements)
        let a = t.element_by_name("a").unwrap();
        let b = t.element_by_name("b").unwrap();
        let mut atoms = r.atoms.clone();
        atoms.sort();
        let mut expected = vec![a, b];
        expected.sort();
        assert_eq!(atoms, expected);
    }

    #[test]
    fn dual_s3_atoms_are_the_three_reflections() {
        let t = dual_germ(&CoxeterSpec::a(3), None).unwrap();
        assert_eq!(t.num_elements(), 5);
        let r = axiom_report(&t);
        assert!(r.valid);
        assert!(r.left_cancellative && r.right_cancellative);
        assert_eq!(r.atoms.len(), 3);
    }

    #[test]
    fn deleting_a_times_b_breaks_left_associativity_not_exchange() {
        // (b•a)•b = Δ stays defined while a•b disappears: left-associativity
        // fails, but every exchange-law premise involving the deleted entry
        // fails with it, so the table is still a germ.
        let t = s3_classical();
        let a = t.element_by_name("a").unwrap();
        let b = t.element_by_name("b").unwrap();
        let broken = t.without_product(a, b);
        let r = validate_germ(&broken);
        assert!(r.valid);
        assert!(!r.left_associative);
        assert!(r
            .counterexamples
            .iter()
            .any(|c| matches!(c, AxiomViolation::LeftAssoc { .. })));
    }

    #[test]
    fn deleting_a_times_ba_breaks_the_exchange_law() {
        // a•b and b•a stay defined, (a•b)•a = Δ stays defined, but
        // a•(b•a) = a•ba is gone: witness (a, b, a).
        let t = s3_classical();
        let a = t.element_by_name("a").unwrap();
        let b = t.element_by_name("b").unwrap();
        let ba = t.product(b, a).unwrap();
        let broken = t.without_product(a, ba);
        let r = validate_germ(&broken);
        assert!(!r.valid);
        assert!(r.counterexamples.iter().any(|c| matches!(
            c,
            AxiomViolation::Exchange { f, g, h } if *f == a && *g == b && *h == a
        )));
    }

    #[test]
    fn local_divisibility_examples() {
        let t = s3_classical();
        let e = t.identity(ObjectId(0));
        let a = t.element_by_name("a").unwrap();
        let b = t.element_by_name("b").unwrap();
        let ba = t.product(b, a).unwrap();
        let delta = t.product(a, ba).unwrap();

        // 1_x divides anything with source x, complement is the element itself
        assert_eq!(local_divisibility(&t, e, delta, Side::Left), Ok(Some(delta)));
        // a divides Δ with complement ba
        assert_eq!(local_divisibility(&t, a, delta, Side::Left), Ok(Some(ba)));
        // a does not divide b
        assert_eq!(local_divisibility(&t, a, b, Side::Left), Ok(None));
        // right divisibility: ba right-divides Δ via a•ba
        assert_eq!(local_divisibility(&t, ba, delta, Side::Right), Ok(Some(a)));
    }

    #[test]
    fn local_divisibility_is_transitive_on_corpus_germs() {
        for t in [
            s3_classical(),
            dual_germ(&CoxeterSpec::a(4), None).unwrap(),
            classical_germ(&CoxeterSpec::i2(4)).unwrap(),
            tiny_invertible_germ(),
        ] {
            let div = LeftDivTable::build(&t);
            for f in t.elements() {
                for g in t.elements() {
                    for h in t.elements() {
                        if div.divides(f, g) && div.divides(g, h) {
                            assert!(div.divides(f, h), "transitivity failed");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn selector_is_identity_map_without_invertibles() {
        for t in [s3_classical(), identity_only_germ()] {
            let sel = eqir_class_selector(&t);
            for e in t.elements() {
                assert_eq!(sel[e.idx()], e);
            }
        }
    }

    /// Three-element germ {1, u, u⁻¹} with u•u⁻¹ = u⁻¹•u = 1. Products of
    /// invertibles must all be defined in a left-associative germ, so this
    /// carries the full Z/3 table (u•u = u⁻¹).
    pub(crate) fn tiny_invertible_germ() -> GermTable {
        GermTable::new(
            vec!["x".into()],
            vec![
                ("1".into(), ObjectId(0), ObjectId(0)),
                ("u".into(), ObjectId(0), ObjectId(0)),
                ("v".into(), ObjectId(0), ObjectId(0)),
            ],
            vec![(ObjectId(0), ElementId(0))],
            vec![
                (ElementId(0), ElementId(0), ElementId(0)),
                (ElementId(0), ElementId(1), ElementId(1)),
                (ElementId(0), ElementId(2), ElementId(2)),
                (ElementId(1), ElementId(0), ElementId(1)),
                (ElementId(2), ElementId(0), ElementId(2)),
                (ElementId(1), ElementId(1), ElementId(2)),
                (ElementId(1), ElementId(2), ElementId(0)),
                (ElementId(2), ElementId(1), ElementId(0)),
                (ElementId(2), ElementId(2), ElementId(1)),
            ],
        )
        .unwrap()
    }

    #[test]
    fn selector_collapses_invertible_classes() {
        let t = tiny_invertible_germ();
        let r = axiom_report(&t);
        assert!(r.valid);
        assert_eq!(r.invertibles.len(), 3);
        let sel = eqir_class_selector(&t);
        assert_eq!(sel, vec![ElementId(0), ElementId(0), ElementId(0)]);
        // idempotent and constant on classes by construction
        for e in t.elements() {
            assert_eq!(sel[sel[e.idx()].idx()], sel[e.idx()]);
        }
    }

    #[test]
    fn duplicate_object_names_are_structural() {
        let err = GermTable::new(
            vec!["x".into(), "x".into()],
            vec![
                ("1a".into(), ObjectId(0), ObjectId(0)),
                ("1b".into(), ObjectId(1), ObjectId(1)),
            ],
            vec![(ObjectId(0), ElementId(0)), (ObjectId(1), ElementId(1))],
            vec![],
        )
        .unwrap_err();
        assert!(matches!(err, StructuralError::DuplicateName { .. }));
    }

    #[test]
    fn invertibility_is_two_sided_in_verified_germs() {
        // an element with a one-sided inverse in a Garside germ has a
        // two-sided one
        for t in [tiny_invertible_germ(), s3_classical()] {
            for e in t.elements() {
                let left = t
                    .elements()
                    .any(|c| t.product(c, e).map(|h| t.is_identity(h)) == Some(true));
                let right = t
                    .elements()
                    .any(|c| t.product(e, c).map(|h| t.is_identity(h)) == Some(true));
                assert_eq!(left, right, "one-sided inverse for {e:?}");
            }
        }
    }

    #[test]
    fn invertibles_form_a_subgroupoid() {
        for t in [tiny_invertible_germ(), s3_classical()] {
            let inv = invertible_elements(&t);
            for (f, g, h) in t.defined_products() {
                if inv[f.idx()] && inv[g.idx()] {
                    assert!(inv[h.idx()], "product of invertibles not invertible");
                }
            }
            // closed under inverse: the witness e' for e is itself invertible
            for e in t.elements() {
                if !inv[e.idx()] {
                    continue;
                }
                let e2 = t
                    .elements()
                    .find(|&c| {
                        t.product(e, c).map(|h| t.is_identity(h)) == Some(true)
                            && t.product(c, e).map(|h| t.is_identity(h)) == Some(true)
                    })
                    .expect("invertible without inverse");
                assert!(inv[e2.idx()]);
            }
        }
    }

    #[test]
    fn eqir_equivalence_matches_mutual_divisibility() {
        // In a left-associative left-cancellative germ, f ≃ g iff f ⋖ g and g ⋖ f.
        for t in [tiny_invertible_germ(), s3_classical()] {
            let sel = eqir_class_selector(&t);
            let div = LeftDivTable::build(&t);
            for f in t.elements() {
                for g in t.elements() {
                    if t.source(f) != t.source(g) {
                        continue;
                    }
                    let eqir = sel[f.idx()] == sel[g.idx()];
                    let mutual = div.divides(f, g) && div.divides(g, f);
                    assert_eq!(eqir, mutual, "f={f:?} g={g:?}");
                }
            }
        }
    }

    #[test]
    fn two_object_germ_with_one_arrow() {
        let t = GermTable::new(
            vec!["x".into(), "y".into()],
            vec![
                ("1x".into(), ObjectId(0), ObjectId(0)),
                ("1y".into(), ObjectId(1), ObjectId(1)),
                ("f".into(), ObjectId(0), ObjectId(1)),
            ],
            vec![(ObjectId(0), ElementId(0)), (ObjectId(1), ElementId(1))],
            vec![
                (ElementId(0), ElementId(0), ElementId(0)),
                (ElementId(1), ElementId(1), ElementId(1)),
                (ElementId(0), ElementId(2), ElementId(2)),
                (ElementId(2), ElementId(1), ElementId(2)),
            ],
        )
        .unwrap();
        let r = axiom_report(&t);
        assert!(r.valid, "violations: {:?}", r.counterexamples);
        assert!(r.left_associative);
        assert_eq!(r.atoms, vec![ElementId(2)]);
        // endpoint mismatch is an error, not "false"
        assert!(local_divisibility(&t, ElementId(2), ElementId(1), Side::Left).is_err());
    }
}
