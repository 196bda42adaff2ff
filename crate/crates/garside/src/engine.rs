//! The category presented by a germ: paths, the defining congruence, the Π
//! evaluation map, greedy normal forms via the sharp head/tail recursion,
//! multiplication, and the word problem.
//!
//! Elements of the category are represented only as words; normal forms are
//! the canonical representatives. Everything runs against a precomputed
//! canonical J-table, built once when the engine is constructed.

use thiserror::Error;

use crate::analyzer::{is_garside_germ, GarsideFailure, GarsideVerdict, JTable};
use crate::germ::{
    eqir_class_selector, invertible_elements, validate_germ, ElementId, GermTable, LeftDivTable,
    ObjectId,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PathError {
    #[error("entries {left} and {right} are not composable (target {t} vs source {s})")]
    NotComposable {
        left: String,
        right: String,
        t: String,
        s: String,
    },
    #[error("object id {0} out of range")]
    BadObject(u32),
    #[error("element id {0} out of range")]
    BadElement(u32),
    #[error("an empty word needs an explicit object")]
    EmptyWordNeedsObject,
}

/// A composable sequence of germ elements; the free-category element. The
/// empty word carries its object explicitly.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PathWord {
    entries: Vec<ElementId>,
    source: ObjectId,
    target: ObjectId,
}

impl PathWord {
    pub fn new(t: &GermTable, entries: Vec<ElementId>) -> Result<Self, PathError> {
        let Some(&first) = entries.first() else {
            return Err(PathError::EmptyWordNeedsObject);
        };
        for &e in &entries {
            if e.idx() >= t.num_elements() {
                return Err(PathError::BadElement(e.0));
            }
        }
        for w in entries.windows(2) {
            if t.target(w[0]) != t.source(w[1]) {
                return Err(PathError::NotComposable {
                    left: t.element_name(w[0]).to_string(),
                    right: t.element_name(w[1]).to_string(),
                    t: t.object_name(t.target(w[0])).to_string(),
                    s: t.object_name(t.source(w[1])).to_string(),
                });
            }
        }
        Ok(PathWord {
            source: t.source(first),
            target: t.target(*entries.last().expect("nonempty")),
            entries,
        })
    }

    /// The empty path at an object.
    pub fn empty(t: &GermTable, x: ObjectId) -> Result<Self, PathError> {
        if x.idx() >= t.num_objects() {
            return Err(PathError::BadObject(x.0));
        }
        Ok(PathWord {
            entries: Vec::new(),
            source: x,
            target: x,
        })
    }

    /// Either an empty path at the given object or a nonempty word.
    pub fn parse(
        t: &GermTable,
        entries: Vec<ElementId>,
        object: Option<ObjectId>,
    ) -> Result<Self, PathError> {
        if entries.is_empty() {
            let x = object.ok_or(PathError::EmptyWordNeedsObject)?;
            Self::empty(t, x)
        } else {
            Self::new(t, entries)
        }
    }

    pub fn entries(&self) -> &[ElementId] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn source(&self) -> ObjectId {
        self.source
    }

    pub fn target(&self) -> ObjectId {
        self.target
    }

    /// Concatenation; endpoints must match.
    pub fn concat(&self, other: &PathWord) -> Result<PathWord, PathError> {
        if self.target != other.source {
            return Err(PathError::NotComposable {
                left: format!("...{} entries", self.len()),
                right: format!("{} entries...", other.len()),
                t: format!("object {}", self.target.0),
                s: format!("object {}", other.source.0),
            });
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Ok(PathWord {
            entries,
            source: self.source,
            target: other.target,
        })
    }
}

/// A canonical S-normal word: adjacent pairs greedy, every entry a sharp
/// head value except for a possible invertible tail, trailing identities
/// trimmed. Produced by [`CategoryEngine::normal_form`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NormalForm {
    word: PathWord,
}

impl NormalForm {
    pub fn word(&self) -> &PathWord {
        &self.word
    }

    pub fn entries(&self) -> &[ElementId] {
        self.word.entries()
    }

    pub fn source(&self) -> ObjectId {
        self.word.source()
    }

    pub fn target(&self) -> ObjectId {
        self.word.target()
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EngineError {
    #[error("germ is not a verified Garside germ: {failure:?}")]
    UnsupportedGerm { failure: Option<GarsideFailure> },
    #[error("germ is not left-associative; Π is not known to be well defined")]
    NotLeftAssociative,
    #[error("endpoint mismatch between {left} and {right}")]
    EndpointMismatch { left: String, right: String },
    #[error("normalization exceeded its step budget ({budget}); the Garside verdict for this germ table appears to be wrong")]
    IterationBudget { budget: usize },
    #[error(transparent)]
    Path(#[from] PathError),
}

/// One elementary move of the presenting congruence: replace two adjacent
/// entries by their product, or split one entry by a chosen factorization.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RewriteStep {
    Contract { at: usize },
    Expand { at: usize, factors: (ElementId, ElementId) },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RewriteError {
    #[error("position {at} out of range for a word of {len} entries")]
    OutOfRange { at: usize, len: usize },
    #[error("product of {left} and {right} is undefined; cannot contract")]
    UndefinedProduct { left: String, right: String },
    #[error("({left}, {right}) is not a factorization of {of}")]
    WrongFactorization {
        left: String,
        right: String,
        of: String,
    },
}

/// Apply one congruence move to a word. Endpoints are preserved.
pub fn rewrite_step(
    t: &GermTable,
    w: &PathWord,
    step: RewriteStep,
) -> Result<PathWord, RewriteError> {
    let entries = w.entries();
    match step {
        RewriteStep::Contract { at } => {
            if at + 1 >= entries.len() {
                return Err(RewriteError::OutOfRange {
                    at,
                    len: entries.len(),
                });
            }
            let (f, g) = (entries[at], entries[at + 1]);
            let Some(h) = t.product(f, g) else {
                return Err(RewriteError::UndefinedProduct {
                    left: t.element_name(f).to_string(),
                    right: t.element_name(g).to_string(),
                });
            };
            let mut out = entries.to_vec();
            out.splice(at..at + 2, [h]);
            Ok(PathWord::new(t, out).expect("contraction preserves composability"))
        }
        RewriteStep::Expand { at, factors: (f, g) } => {
            if at >= entries.len() {
                return Err(RewriteError::OutOfRange {
                    at,
                    len: entries.len(),
                });
            }
            if t.product(f, g) != Some(entries[at]) {
                return Err(RewriteError::WrongFactorization {
                    left: t.element_name(f).to_string(),
                    right: t.element_name(g).to_string(),
                    of: t.element_name(entries[at]).to_string(),
                });
            }
            let mut out = entries.to_vec();
            out.splice(at..at + 1, [f, g]);
            Ok(PathWord::new(t, out).expect("expansion preserves composability"))
        }
    }
}

/// Evaluate Π(w) against the germ product: Π(ε_x) = 1_x and
/// Π(g·w) = g • Π(w) when defined. `None` means the element lies outside
/// the germ. Refuses germs that are not left-associative, because the map is
/// only known to be well defined on congruence classes for those.
pub fn pi(t: &GermTable, w: &PathWord) -> Result<Option<ElementId>, EngineError> {
    if !validate_germ(t).left_associative {
        return Err(EngineError::NotLeftAssociative);
    }
    Ok(pi_unchecked(t, w))
}

pub(crate) fn pi_unchecked(t: &GermTable, w: &PathWord) -> Option<ElementId> {
    let mut acc = t.identity(w.target());
    for &g in w.entries().iter().rev() {
        acc = t.product(g, acc)?;
    }
    Some(acc)
}

/// Normal-form and word-problem engine over a verified Garside germ.
pub struct CategoryEngine<'g> {
    table: &'g GermTable,
    j: JTable,
    selector: Vec<ElementId>,
    invertible: Vec<bool>,
    div: LeftDivTable,
}

impl<'g> CategoryEngine<'g> {
    /// Run the Garside decision and build the engine; refuses germs whose
    /// verdict is negative.
    pub fn new(table: &'g GermTable) -> Result<Self, EngineError> {
        Self::from_verdict(table, is_garside_germ(table))
    }

    /// Build from an existing verdict (the verdict must belong to `table`).
    pub fn from_verdict(table: &'g GermTable, verdict: GarsideVerdict) -> Result<Self, EngineError> {
        if !verdict.is_garside {
            return Err(EngineError::UnsupportedGerm {
                failure: verdict.failure,
            });
        }
        Ok(CategoryEngine {
            table,
            j: verdict.j_table.expect("yes-verdict carries a J-table"),
            selector: eqir_class_selector(table),
            invertible: invertible_elements(table),
            div: LeftDivTable::build(table),
        })
    }

    pub fn table(&self) -> &'g GermTable {
        self.table
    }

    pub fn j_table(&self) -> &JTable {
        &self.j
    }

    pub fn is_invertible(&self, e: ElementId) -> bool {
        self.invertible[e.idx()]
    }

    /// Evaluation into the germ; `None` when the element escapes it.
    pub fn pi(&self, w: &PathWord) -> Option<ElementId> {
        pi_unchecked(self.table, w)
    }

    /// `I'(g, h) = g • J(g, h)`: the canonical head of the two-entry word.
    fn i_value(&self, g: ElementId, h: ElementId) -> ElementId {
        let jv = self.j.j(g, h).expect("total on composable pairs");
        self.table.product(g, jv).expect("J-values compose")
    }

    /// `K(g, h)`: the complement of `J(g, h)` in `h`.
    fn k_value(&self, g: ElementId, h: ElementId) -> ElementId {
        let jv = self.j.j(g, h).expect("total on composable pairs");
        self.div
            .complement(jv, h)
            .expect("J-values divide their second argument")
    }

    /// Heads of all suffixes: `out[i] = H♯(w[i..])`, `out[len] = 1_target`.
    fn suffix_heads(&self, entries: &[ElementId], target: ObjectId) -> Vec<ElementId> {
        let mut heads = vec![self.table.identity(target); entries.len() + 1];
        for i in (0..entries.len()).rev() {
            heads[i] = self.i_value(entries[i], heads[i + 1]);
        }
        heads
    }

    /// `H♯(w)`: the canonical greatest germ-divisor of the word's element.
    pub fn head_sharp(&self, w: &PathWord) -> ElementId {
        self.suffix_heads(w.entries(), w.target())[0]
    }

    /// `T♯(w)`: the companion tail, with `w ≡ H♯(w)·T♯(w)`. Returned raw
    /// (same length as `w`, identity entries included).
    pub fn tail_sharp(&self, w: &PathWord) -> PathWord {
        let entries = w.entries();
        let heads = self.suffix_heads(entries, w.target());
        let tail: Vec<ElementId> = (0..entries.len())
            .map(|i| self.k_value(entries[i], heads[i + 1]))
            .collect();
        PathWord::parse(self.table, tail, Some(w.target())).expect("tail entries compose")
    }

    fn trim_identities(&self, entries: &[ElementId]) -> Vec<ElementId> {
        entries
            .iter()
            .copied()
            .filter(|&e| !self.table.is_identity(e))
            .collect()
    }

    /// Greedy normal decomposition: repeatedly extract the sharp head from
    /// the identity-trimmed tail. Elements that end invertible keep their
    /// invertible remainder as a final entry (compressed through Π when the
    /// product exists inside the germ). The step budget guards against a
    /// J-table that does not actually belong to a Garside germ.
    pub fn normal_form(&self, w: &PathWord) -> Result<NormalForm, EngineError> {
        let t = self.table;
        let budget = w.len() * t.num_elements() + 2;
        let mut steps = 0usize;
        let mut out: Vec<ElementId> = Vec::new();
        let mut cur = self.trim_identities(w.entries());
        loop {
            if cur.is_empty() {
                break;
            }
            steps += 1;
            if steps > budget {
                return Err(EngineError::IterationBudget { budget });
            }
            let target = t.target(*cur.last().expect("nonempty"));
            let heads = self.suffix_heads(&cur, target);
            let head = heads[0];
            if self.invertible[head.idx()] {
                // the remaining element is invertible, hence every entry is;
                // the word is already normal. Compress to one entry if the
                // product stays inside the germ.
                if cur.iter().any(|&e| !self.invertible[e.idx()]) {
                    return Err(EngineError::IterationBudget { budget });
                }
                let tailword = PathWord::parse(t, cur.clone(), Some(target))
                    .expect("trimmed entries compose");
                match self.pi(&tailword) {
                    Some(u) => {
                        if !t.is_identity(u) {
                            out.push(u);
                        }
                    }
                    None => out.extend(cur.iter().copied()),
                }
                break;
            }
            out.push(head);
            let tail: Vec<ElementId> = (0..cur.len())
                .map(|i| self.k_value(cur[i], heads[i + 1]))
                .collect();
            cur = self.trim_identities(&tail);
        }
        let word = PathWord::parse(self.table, out, Some(w.source())).expect("heads compose");
        debug_assert_eq!(word.source(), w.source());
        Ok(NormalForm { word })
    }

    /// Left-multiply a normal form by a germ element using the domino
    /// threading: normalize the two-entry word (carry, entry), emit its head
    /// and push the remainder right. Falls back to full normalization when
    /// the carried remainder does not evaluate inside the germ.
    pub fn left_multiply(&self, f: ElementId, nf: &NormalForm) -> Result<NormalForm, EngineError> {
        let t = self.table;
        if t.target(f) != nf.source() {
            return Err(EngineError::EndpointMismatch {
                left: t.element_name(f).to_string(),
                right: format!("normal form at object {}", t.object_name(nf.source())),
            });
        }
        let mut out: Vec<ElementId> = Vec::with_capacity(nf.entries().len() + 1);
        let mut carry = f;
        for &g in nf.entries() {
            let pair = PathWord::new(t, vec![carry, g]).expect("carry composes");
            let head = self.head_sharp(&pair);
            let tail = self.trim_identities(self.tail_sharp(&pair).entries());
            carry = match tail.len() {
                0 => t.identity(t.target(g)),
                1 => tail[0],
                _ => {
                    let word = PathWord::new(t, tail).expect("tail composes");
                    match self.pi(&word) {
                        Some(u) => u,
                        None => {
                            // invertible debris outside the germ: defer to
                            // the general normalizer
                            let full = PathWord::new(t, {
                                let mut v = vec![f];
                                v.extend_from_slice(nf.entries());
                                v
                            })
                            .expect("prefix composes");
                            return self.normal_form(&full);
                        }
                    }
                }
            };
            if self.invertible[head.idx()] {
                // an invertible head only appears once the remainder is
                // invertible; fold it into the carry so at most one
                // invertible entry survives, as in normal_form
                if !t.is_identity(head) {
                    carry = t
                        .product(head, carry)
                        .expect("invertibles compose in a left-associative germ");
                }
            } else {
                out.push(head);
            }
        }
        // the leftover carry gets the same canonical shape normal_form
        // produces: selector-canonical entry plus invertible remainder
        if self.invertible[carry.idx()] {
            if !t.is_identity(carry) {
                out.push(carry);
            }
        } else {
            let canon = self.selector[carry.idx()];
            out.push(canon);
            if canon != carry {
                let rest = self
                    .div
                    .complement(canon, carry)
                    .expect("class representatives divide their class");
                if !t.is_identity(rest) {
                    out.push(rest);
                }
            }
        }
        let word = PathWord::parse(t, out, Some(t.source(f))).expect("domino output composes");
        Ok(NormalForm { word })
    }

    /// Product of two normal forms: normalize the concatenation.
    pub fn multiply(&self, a: &NormalForm, b: &NormalForm) -> Result<NormalForm, EngineError> {
        if a.target() != b.source() {
            return Err(EngineError::EndpointMismatch {
                left: format!("normal form ending at object {}", a.target().0),
                right: format!("normal form starting at object {}", b.source().0),
            });
        }
        let w = a.word().concat(b.word())?;
        self.normal_form(&w)
    }

    /// Do two words present the same category element? Decided by syntactic
    /// equality of canonical forms.
    pub fn word_problem(&self, w1: &PathWord, w2: &PathWord) -> Result<bool, EngineError> {
        if w1.source() != w2.source() || w1.target() != w2.target() {
            return Err(EngineError::EndpointMismatch {
                left: format!("word at ({}, {})", w1.source().0, w1.target().0),
                right: format!("word at ({}, {})", w2.source().0, w2.target().0),
            });
        }
        Ok(self.normal_form(w1)? == self.normal_form(w2)?)
    }

    /// Number of non-invertible entries of a normal form.
    pub fn s_length(&self, nf: &NormalForm) -> usize {
        nf.entries()
            .iter()
            .filter(|&&e| !self.invertible[e.idx()])
            .count()
    }

    /// First entry of the normal form; the identity at the source for words
    /// presenting an identity element.
    pub fn s_head(&self, w: &PathWord) -> Result<ElementId, EngineError> {
        let nf = self.normal_form(w)?;
        Ok(nf
            .entries()
            .first()
            .copied()
            .unwrap_or_else(|| self.table.identity(w.source())))
    }

    /// Is the pair (g1, g2) greedy? Post-verdict this is equivalent to the
    /// head of the two-entry word being ≃-equivalent to g1.
    pub fn is_greedy_pair(&self, g1: ElementId, g2: ElementId) -> Result<bool, EngineError> {
        let t = self.table;
        if !t.composable(g1, g2) {
            return Err(EngineError::EndpointMismatch {
                left: t.element_name(g1).to_string(),
                right: t.element_name(g2).to_string(),
            });
        }
        let pair = PathWord::new(t, vec![g1, g2]).expect("checked composable");
        let head = self.head_sharp(&pair);
        Ok(self.selector[head.idx()] == self.selector[g1.idx()])
    }

    /// Is every adjacent pair of the word greedy?
    pub fn is_normal(&self, w: &PathWord) -> bool {
        w.entries().windows(2).all(|p| {
            self.is_greedy_pair(p[0], p[1])
                .expect("adjacent entries of a PathWord compose")
        })
    }
}
