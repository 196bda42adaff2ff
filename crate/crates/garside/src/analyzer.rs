//! Deciding whether a finite germ is a Garside germ.
//!
//! The primary decider scans every composable pair for a greatest element of
//! its J-set; the Noetherian and lcm criteria are independent sufficient
//! checks cross-validated against it.

use serde::Serialize;
use thiserror::Error;

use crate::germ::{
    eqir_class_selector, validate_germ, ElementId, GermTable, LeftDivTable, NONE,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AnalyzerError {
    #[error("elements {f} and {g} are not composable")]
    NotComposable { f: String, g: String },
}

/// `J(g1, g2) = {g : g1•g defined and g ⋖ g2}`.
pub fn j_set(
    t: &GermTable,
    g1: ElementId,
    g2: ElementId,
) -> Result<Vec<ElementId>, AnalyzerError> {
    if !t.composable(g1, g2) {
        return Err(AnalyzerError::NotComposable {
            f: t.element_name(g1).to_string(),
            g: t.element_name(g2).to_string(),
        });
    }
    let div = LeftDivTable::build(t);
    Ok(j_set_with(t, &div, g1, g2))
}

fn j_set_with(
    t: &GermTable,
    div: &LeftDivTable,
    g1: ElementId,
    g2: ElementId,
) -> Vec<ElementId> {
    t.elements()
        .filter(|&g| t.product(g1, g).is_some() && div.divides(g, g2))
        .collect()
}

/// `I(g1, g2) = g1 • J(g1, g2)`, elementwise.
pub fn i_set(
    t: &GermTable,
    g1: ElementId,
    g2: ElementId,
) -> Result<Vec<ElementId>, AnalyzerError> {
    let mut out: Vec<ElementId> = j_set(t, g1, g2)?
        .into_iter()
        .map(|g| t.product(g1, g).expect("members compose with g1"))
        .collect();
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Canonical maximum J-function: for each composable pair, the ⋖-greatest
/// member of its J-set, adjusted through the ≃-selector so the induced
/// function obeys the sharp J-law.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JTable {
    n: usize,
    values: Vec<u32>,
}

impl JTable {
    pub fn j(&self, g1: ElementId, g2: ElementId) -> Option<ElementId> {
        match self.values[g1.idx() * self.n + g2.idx()] {
            NONE => None,
            v => Some(ElementId(v)),
        }
    }

    /// `I(g1, g2) = g1 • J(g1, g2)`.
    pub fn i(&self, t: &GermTable, g1: ElementId, g2: ElementId) -> Option<ElementId> {
        self.j(g1, g2).and_then(|j| t.product(g1, j))
    }

    /// Copy with one value replaced. Meant for experiments and negative
    /// controls; a perturbed table will generally fail [`verify_laws`].
    pub fn with_value(&self, g1: ElementId, g2: ElementId, j: ElementId) -> JTable {
        let mut out = self.clone();
        out.values[g1.idx() * self.n + g2.idx()] = j.0;
        out
    }
}

/// Axiom preconditions that `max_j_function` refuses to work without.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FailedAxiom {
    NotLeftAssociative,
    NotLeftCancellative,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MaxJError {
    #[error("germ is not eligible for the maximum-J scan: {axiom:?}")]
    UnsupportedGerm { axiom: FailedAxiom },
    #[error("J-set of ({g1}, {g2}) has no ⋖-greatest element")]
    NoGreatest { g1: u32, g2: u32 },
}

fn greatest_of(div: &LeftDivTable, set: &[ElementId]) -> Option<ElementId> {
    // single pass keeping a running candidate, then verify it dominates
    let mut best = *set.first()?;
    for &h in &set[1..] {
        if div.divides(best, h) {
            best = h;
        }
    }
    if set.iter().all(|&h| div.divides(h, best)) {
        Some(best)
    } else {
        None
    }
}

fn max_j_with(
    t: &GermTable,
    div: &LeftDivTable,
    selector: &[ElementId],
) -> Result<JTable, MaxJError> {
    let n = t.num_elements();
    let mut values = vec![NONE; n * n];
    for g1 in t.elements() {
        for g2 in t.elements() {
            if !t.composable(g1, g2) {
                continue;
            }
            let set = j_set_with(t, div, g1, g2);
            let Some(raw) = greatest_of(div, &set) else {
                return Err(MaxJError::NoGreatest { g1: g1.0, g2: g2.0 });
            };
            // canonicalize through I: the sharp laws need the I-value, not
            // the J-value, to be the class representative
            let i_raw = t.product(g1, raw).expect("greatest lies in J-set");
            let i_canon = selector[i_raw.idx()];
            let j_canon = div
                .complement(g1, i_canon)
                .expect("selector stays inside the I-class");
            values[g1.idx() * n + g2.idx()] = j_canon.0;
        }
    }
    Ok(JTable { n, values })
}

/// Compute the canonical maximum J-function, or report why none exists.
/// Requires a left-associative, left-cancellative germ.
pub fn max_j_function(t: &GermTable) -> Result<JTable, MaxJError> {
    let report = validate_germ(t);
    if !report.left_associative {
        return Err(MaxJError::UnsupportedGerm {
            axiom: FailedAxiom::NotLeftAssociative,
        });
    }
    if !report.left_cancellative {
        return Err(MaxJError::UnsupportedGerm {
            axiom: FailedAxiom::NotLeftCancellative,
        });
    }
    let div = LeftDivTable::build(t);
    let selector = eqir_class_selector(t);
    max_j_with(t, &div, &selector)
}

/// Why a germ failed the Garside check, with a replayable witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "criterion", rename_all = "kebab-case")]
pub enum GarsideFailure {
    NotLeftAssociative {
        f: ElementId,
        g: ElementId,
        h: ElementId,
    },
    NotLeftCancellative {
        f: ElementId,
        g: ElementId,
        g_prime: ElementId,
    },
    NoGreatestJ {
        g1: ElementId,
        g2: ElementId,
    },
    LawViolation {
        g1: ElementId,
        g2: ElementId,
        g3: ElementId,
    },
}

/// Outcome of the Garside decision. Yes-verdicts carry the canonical
/// J-table, re-verified against the sharp J-law.
#[derive(Clone, Debug)]
pub struct GarsideVerdict {
    pub is_garside: bool,
    pub failure: Option<GarsideFailure>,
    pub j_table: Option<JTable>,
}

/// Decide whether the germ is a Garside germ via the greatest-element scan.
pub fn is_garside_germ(t: &GermTable) -> GarsideVerdict {
    let report = validate_germ(t);
    if !report.left_associative {
        let w = report.counterexamples.iter().find_map(|c| match c {
            crate::germ::AxiomViolation::LeftAssoc { f, g, h } => Some((*f, *g, *h)),
            _ => None,
        });
        let (f, g, h) = w.expect("false flag carries a witness");
        return GarsideVerdict {
            is_garside: false,
            failure: Some(GarsideFailure::NotLeftAssociative { f, g, h }),
            j_table: None,
        };
    }
    if !report.left_cancellative {
        let w = report.counterexamples.iter().find_map(|c| match c {
            crate::germ::AxiomViolation::LeftCancel { f, g, g_prime } => Some((*f, *g, *g_prime)),
            _ => None,
        });
        let (f, g, g_prime) = w.expect("false flag carries a witness");
        return GarsideVerdict {
            is_garside: false,
            failure: Some(GarsideFailure::NotLeftCancellative { f, g, g_prime }),
            j_table: None,
        };
    }
    let div = LeftDivTable::build(t);
    let selector = eqir_class_selector(t);
    match max_j_with(t, &div, &selector) {
        Err(MaxJError::NoGreatest { g1, g2 }) => GarsideVerdict {
            is_garside: false,
            failure: Some(GarsideFailure::NoGreatestJ {
                g1: ElementId(g1),
                g2: ElementId(g2),
            }),
            j_table: None,
        },
        Err(MaxJError::UnsupportedGerm { .. }) => unreachable!("axioms checked above"),
        Ok(j) => {
            // internal consistency: the canonicalized table must satisfy the
            // sharp J-law on every eligible triple
            let laws = verify_laws(t, &j);
            if let LawCheck::Violated { g1, g2, g3 } = laws.sharp_j {
                return GarsideVerdict {
                    is_garside: false,
                    failure: Some(GarsideFailure::LawViolation { g1, g2, g3 }),
                    j_table: None,
                };
            }
            GarsideVerdict {
                is_garside: true,
                failure: None,
                j_table: Some(j),
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum LawCheck {
    Holds {
        instances: usize,
    },
    Violated {
        g1: ElementId,
        g2: ElementId,
        g3: ElementId,
    },
}

impl LawCheck {
    pub fn holds(&self) -> bool {
        matches!(self, LawCheck::Holds { .. })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LawReport {
    pub sharp_j: LawCheck,
    pub sharp_i: LawCheck,
    pub sharp_h: LawCheck,
    /// The laws quantify over germ-internal data only: composable triples
    /// for J/I, products defined inside the germ for H.
    pub scope: &'static str,
}

impl LawReport {
    pub fn all_hold(&self) -> bool {
        self.sharp_j.holds() && self.sharp_i.holds() && self.sharp_h.holds()
    }
}

/// Exhaustively check the sharp J-, I- and H-laws for the given J-function.
///
/// The J- and I-laws run over every composable triple with `g1•g2` defined;
/// the H-law additionally demands that `I(x, y)` is the class representative
/// of `x•y` whenever that product is defined (the head of an element of the
/// germ is the element itself, up to ≃). Reports the first violating triple
/// per law; a triple on which a required product is undefined counts as a
/// violation.
pub fn verify_laws(t: &GermTable, j: &JTable) -> LawReport {
    let selector = eqir_class_selector(t);
    let mut sharp_j = None;
    let mut sharp_i = None;
    let mut j_instances = 0usize;
    let mut i_instances = 0usize;

    for (g1, g2, g12) in t.defined_products() {
        for g3 in t.elements() {
            if !t.composable(g2, g3) {
                continue;
            }
            // sharp J-law: J(g1, g2•J(g2,g3)) = g2 • J(g1•g2, g3)
            if sharp_j.is_none() {
                j_instances += 1;
                let lhs = j
                    .j(g2, g3)
                    .and_then(|v| t.product(g2, v))
                    .and_then(|m| j.j(g1, m));
                let rhs = j.j(g12, g3).and_then(|v| t.product(g2, v));
                match (lhs, rhs) {
                    (Some(l), Some(r)) if l == r => {}
                    _ => sharp_j = Some((g1, g2, g3)),
                }
            }
            // sharp I-law: I(g1, I(g2,g3)) = I(g1•g2, g3)
            if sharp_i.is_none() {
                i_instances += 1;
                let lhs = j.i(t, g2, g3).and_then(|m| j.i(t, g1, m));
                let rhs = j.i(t, g12, g3);
                match (lhs, rhs) {
                    (Some(l), Some(r)) if l == r => {}
                    _ => sharp_i = Some((g1, g2, g3)),
                }
            }
            if sharp_j.is_some() && sharp_i.is_some() {
                break;
            }
        }
    }

    // sharp H-law on products inside the germ: I(x, y) = selector(x•y)
    let mut sharp_h = None;
    let mut h_instances = 0usize;
    for (x, y, xy) in t.defined_products() {
        h_instances += 1;
        if j.i(t, x, y) != Some(selector[xy.idx()]) {
            sharp_h = Some((x, y, xy));
            break;
        }
    }

    let pack = |w: Option<(ElementId, ElementId, ElementId)>, n: usize| match w {
        None => LawCheck::Holds { instances: n },
        Some((g1, g2, g3)) => LawCheck::Violated { g1, g2, g3 },
    };
    LawReport {
        sharp_j: pack(sharp_j, j_instances),
        sharp_i: pack(sharp_i, i_instances),
        sharp_h: pack(sharp_h, h_instances),
        scope: "composable triples with the leading product defined; H restricted to in-germ products",
    }
}

/// Left/right Noetherianity of the germ, decided as acyclicity of the
/// proper local-divisibility digraphs.
#[derive(Clone, Debug, Serialize)]
pub struct NoetherianReport {
    pub left_noetherian: bool,
    pub right_noetherian: bool,
    /// An element lying on a proper-divisibility cycle, per failed side.
    pub left_cycle_witness: Option<ElementId>,
    pub right_cycle_witness: Option<ElementId>,
}

fn find_cycle(n: usize, edges: &dyn Fn(usize, usize) -> bool) -> Option<usize> {
    // iterative DFS three-coloring; returns a node on a cycle, if any
    let mut color = vec![0u8; n]; // 0 white, 1 gray, 2 black
    for start in 0..n {
        if color[start] != 0 {
            continue;
        }
        let mut stack: Vec<(usize, usize)> = vec![(start, 0)];
        color[start] = 1;
        while let Some(&(v, next)) = stack.last() {
            let mut pushed = false;
            let mut w = next;
            while w < n {
                if edges(v, w) {
                    match color[w] {
                        0 => {
                            stack.last_mut().expect("nonempty").1 = w + 1;
                            color[w] = 1;
                            stack.push((w, 0));
                            pushed = true;
                            break;
                        }
                        1 => return Some(w),
                        _ => {}
                    }
                }
                w += 1;
            }
            if !pushed {
                color[v] = 2;
                stack.pop();
            }
        }
    }
    None
}

/// Decide left- and right-Noetherianity.
pub fn noetherian_report(t: &GermTable) -> NoetherianReport {
    let n = t.num_elements();
    let div = LeftDivTable::build(t);
    // right-divisibility witness table
    let mut rdiv = vec![false; n * n];
    for (f, g, h) in t.defined_products() {
        let _ = f;
        rdiv[g.idx() * n + h.idx()] = true; // g right-divides h
    }
    let left_edges = |a: usize, b: usize| {
        let (f, g) = (ElementId(a as u32), ElementId(b as u32));
        div.divides(f, g) && !div.divides(g, f)
    };
    let right_edges =
        |a: usize, b: usize| rdiv[a * n + b] && !rdiv[b * n + a];

    let left_cycle = find_cycle(n, &left_edges);
    let right_cycle = find_cycle(n, &right_edges);
    NoetherianReport {
        left_noetherian: left_cycle.is_none(),
        right_noetherian: right_cycle.is_none(),
        left_cycle_witness: left_cycle.map(|i| ElementId(i as u32)),
        right_cycle_witness: right_cycle.map(|i| ElementId(i as u32)),
    }
}

/// The lcm-flavored sufficient criteria and their ingredient checks.
#[derive(Clone, Debug, Serialize)]
pub struct LcmReport {
    /// Every J-set admits common right-multiples inside itself.
    pub j_sets_admit_common_multiples: bool,
    pub j_set_witness: Option<(ElementId, ElementId)>,
    /// Elements with a common right-multiple have a right-lcm in the germ.
    pub local_right_lcms: bool,
    pub local_lcm_witness: Option<(ElementId, ElementId)>,
    /// Any two elements sharing a source have a right-lcm (lcms exist
    /// unconditionally).
    pub right_lcms: bool,
    /// For g•h, g•h' defined, g•h'' is defined for every right-lcm h'' of
    /// h and h'.
    pub lcm_compatibility: bool,
    pub compatibility_witness: Option<(ElementId, ElementId, ElementId)>,
    /// Sufficient-criterion verdicts assembled from the ingredients.
    pub rec_r_noeth_applies: bool,
    pub rec_llcm_applies: bool,
    pub rec_lcm_package_applies: bool,
}

/// Right-lcms of `f` and `g` inside the germ: common right-multiples that
/// divide every common right-multiple.
fn right_lcms_of(
    t: &GermTable,
    div: &LeftDivTable,
    f: ElementId,
    g: ElementId,
) -> (Vec<ElementId>, bool) {
    let commons: Vec<ElementId> = t
        .elements()
        .filter(|&u| div.divides(f, u) && div.divides(g, u))
        .collect();
    let lcms: Vec<ElementId> = commons
        .iter()
        .copied()
        .filter(|&m| commons.iter().all(|&u| div.divides(m, u)))
        .collect();
    let has_common = !commons.is_empty();
    (lcms, has_common)
}

/// Evaluate the Noetherian/lcm sufficient criteria.
pub fn lcm_criteria(t: &GermTable) -> LcmReport {
    let axioms = validate_germ(t);
    let noeth = noetherian_report(t);
    let div = LeftDivTable::build(t);

    let mut j_ok = true;
    let mut j_witness = None;
    'jscan: for g1 in t.elements() {
        for g2 in t.elements() {
            if !t.composable(g1, g2) {
                continue;
            }
            let set = j_set_with(t, &div, g1, g2);
            for &h in &set {
                for &h2 in &set {
                    let has = set
                        .iter()
                        .any(|&u| div.divides(h, u) && div.divides(h2, u));
                    if !has {
                        j_ok = false;
                        j_witness = Some((g1, g2));
                        break 'jscan;
                    }
                }
            }
        }
    }

    let n = t.num_elements();
    let mut local_lcms = true;
    let mut local_witness = None;
    let mut unconditional = true;
    let mut lcm_table: Vec<Vec<ElementId>> = vec![Vec::new(); n * n];
    for f in t.elements() {
        for g in t.elements() {
            if t.source(f) != t.source(g) {
                continue;
            }
            let (lcms, has_common) = right_lcms_of(t, &div, f, g);
            if has_common && lcms.is_empty() {
                if local_lcms {
                    local_witness = Some((f, g));
                }
                local_lcms = false;
            }
            if lcms.is_empty() {
                unconditional = false;
            }
            lcm_table[f.idx() * n + g.idx()] = lcms;
        }
    }

    let mut compat = true;
    let mut compat_witness = None;
    'compat: for (g, h, _gh) in t.defined_products() {
        for h2 in t.elements() {
            if t.product(g, h2).is_none() || t.source(h) != t.source(h2) {
                continue;
            }
            for &m in &lcm_table[h.idx() * n + h2.idx()] {
                if t.product(g, m).is_none() {
                    compat = false;
                    compat_witness = Some((g, h, h2));
                    break 'compat;
                }
            }
        }
    }

    let base = axioms.left_associative && axioms.left_cancellative;
    LcmReport {
        j_sets_admit_common_multiples: j_ok,
        j_set_witness: j_witness,
        local_right_lcms: local_lcms,
        local_lcm_witness: local_witness,
        right_lcms: unconditional,
        lcm_compatibility: compat,
        compatibility_witness: compat_witness,
        rec_r_noeth_applies: base && noeth.right_noetherian && j_ok,
        rec_llcm_applies: base && noeth.right_noetherian && local_lcms && compat,
        rec_lcm_package_applies: axioms.left_associative
            && axioms.right_associative
            && axioms.left_cancellative
            && noeth.right_noetherian
            && unconditional,
    }
}
