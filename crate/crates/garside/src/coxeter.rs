//! Finite Coxeter groups of types A, B and I2, the Σ-length/tightness
//! machinery, and the derivation of classical and dual braid-monoid germs.
//!
//! Groups are enumerated concretely as permutations: type A on n points,
//! type B as signed permutations on 2n points, I2(m) via the dihedral action
//! on m points. Composition acts on the right and reads left-to-right:
//! `(f * g)(p) = g(f(p))`. The dual-germ product tables depend on this
//! convention, so it is fixed once here.

use std::collections::HashMap;

use thiserror::Error;

use crate::germ::{ElementId, GermTable, ObjectId, StructuralError};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CoxeterFamily {
    A,
    B,
    I2,
}

/// Desk-bounded group specification. For family A the rank is the number of
/// permuted points (rank 3 gives S₃); for B it is the number of signed
/// coordinates; for I2 it is the dihedral parameter m.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CoxeterSpec {
    pub family: CoxeterFamily,
    pub rank: usize,
}

impl CoxeterSpec {
    pub fn a(points: usize) -> Self {
        CoxeterSpec {
            family: CoxeterFamily::A,
            rank: points,
        }
    }
    pub fn b(n: usize) -> Self {
        CoxeterSpec {
            family: CoxeterFamily::B,
            rank: n,
        }
    }
    pub fn i2(m: usize) -> Self {
        CoxeterSpec {
            family: CoxeterFamily::I2,
            rank: m,
        }
    }

    pub fn expected_order(&self) -> usize {
        match self.family {
            CoxeterFamily::A => (1..=self.rank).product(),
            CoxeterFamily::B => (1..=self.rank).product::<usize>() << self.rank,
            CoxeterFamily::I2 => 2 * self.rank,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoxeterError {
    #[error("unsupported rank {rank} for family {family:?} (supported: A 1..=6 points, B 1..=4, I2 3..=12)")]
    UnsupportedRank { family: CoxeterFamily, rank: usize },
    #[error("generator set does not positively generate the group")]
    NotGenerating,
    #[error("coxeter order {0:?} is not a permutation of the simple-generator indices")]
    BadCoxeterOrder(Vec<usize>),
    #[error("subset handed to derive_germ does not contain the group identity")]
    MissingIdentityInSubset,
    #[error("derived germ failed its post-construction checks: {0}")]
    DerivationCheckFailed(String),
    #[error(transparent)]
    Structural(#[from] StructuralError),
}

/// Id of a group element inside a [`CoxeterGroup`] enumeration.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GroupElement(pub u32);

impl GroupElement {
    pub fn idx(self) -> usize {
        self.0 as usize
    }
}

/// Fully enumerated finite Coxeter group with dense multiplication and
/// inverse tables. Elements are discovered by breadth-first closure over the
/// simple reflections, so ids are sorted by word length over the simples and
/// the identity is id 0.
#[derive(Clone, Debug)]
pub struct CoxeterGroup {
    pub spec: CoxeterSpec,
    perms: Vec<Vec<u8>>,
    mult: Vec<u32>,
    inv: Vec<u32>,
    simple: Vec<GroupElement>,
    names: Vec<String>,
    order: usize,
}

fn compose(f: &[u8], g: &[u8]) -> Vec<u8> {
    f.iter().map(|&p| g[p as usize]).collect()
}

fn simple_generator_perms(spec: &CoxeterSpec) -> Result<Vec<Vec<u8>>, CoxeterError> {
    let err = || CoxeterError::UnsupportedRank {
        family: spec.family,
        rank: spec.rank,
    };
    match spec.family {
        CoxeterFamily::A => {
            let n = spec.rank;
            if !(1..=6).contains(&n) {
                return Err(err());
            }
            let mut gens = Vec::new();
            for i in 0..n.saturating_sub(1) {
                let mut p: Vec<u8> = (0..n as u8).collect();
                p.swap(i, i + 1);
                gens.push(p);
            }
            Ok(gens)
        }
        CoxeterFamily::B => {
            let n = spec.rank;
            if !(1..=4).contains(&n) {
                return Err(err());
            }
            // points 0..n are +1..+n, points n..2n are -1..-n
            let mut gens = Vec::new();
            // sign flip on the first coordinate
            let mut t: Vec<u8> = (0..2 * n as u8).collect();
            t.swap(0, n);
            gens.push(t);
            for i in 0..n - 1 {
                let mut p: Vec<u8> = (0..2 * n as u8).collect();
                p.swap(i, i + 1);
                p.swap(n + i, n + i + 1);
                gens.push(p);
            }
            Ok(gens)
        }
        CoxeterFamily::I2 => {
            // the m-point action is faithful only from m = 3 on
            let m = spec.rank;
            if !(3..=12).contains(&m) {
                return Err(err());
            }
            let s1: Vec<u8> = (0..m).map(|i| ((m - i) % m) as u8).collect();
            let s2: Vec<u8> = (0..m).map(|i| ((m + 1 - i) % m) as u8).collect();
            Ok(vec![s1, s2])
        }
    }
}

fn perm_name(spec: &CoxeterSpec, perm: &[u8]) -> String {
    match spec.family {
        CoxeterFamily::A => {
            if perm.iter().enumerate().all(|(i, &p)| i == p as usize) {
                return "e".to_string();
            }
            // cycle notation over 1-based points
            let n = perm.len();
            let mut seen = vec![false; n];
            let mut out = String::new();
            for start in 0..n {
                if seen[start] || perm[start] as usize == start {
                    seen[start] = true;
                    continue;
                }
                let mut cycle = vec![start];
                seen[start] = true;
                let mut cur = perm[start] as usize;
                while cur != start {
                    seen[cur] = true;
                    cycle.push(cur);
                    cur = perm[cur] as usize;
                }
                out.push('(');
                out.push_str(
                    &cycle
                        .iter()
                        .map(|p| (p + 1).to_string())
                        .collect::<Vec<_>>()
                        .join(" "),
                );
                out.push(')');
            }
            out
        }
        CoxeterFamily::B => {
            let n = perm.len() / 2;
            if perm.iter().enumerate().all(|(i, &p)| i == p as usize) {
                return "e".to_string();
            }
            // window notation: images of +1..+n with signs, space separated
            let img = (0..n)
                .map(|i| {
                    let p = perm[i] as usize;
                    if p < n {
                        format!("{}", p + 1)
                    } else {
                        format!("-{}", p - n + 1)
                    }
                })
                .collect::<Vec<_>>()
                .join(" ");
            format!("[{img}]")
        }
        CoxeterFamily::I2 => {
            // classify as rotation r^k or reflection s r^k from the action
            let m = perm.len();
            let shift = perm[0] as usize;
            let is_rotation = (0..m).all(|i| perm[i] as usize == (i + shift) % m);
            if is_rotation {
                if shift == 0 {
                    "e".to_string()
                } else {
                    format!("r{shift}")
                }
            } else {
                let k = perm[0] as usize; // s r^k maps 0 to k
                debug_assert!((0..m).all(|i| perm[i] as usize == (m + k - i) % m));
                format!("s{k}")
            }
        }
    }
}

impl CoxeterGroup {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement(0)
    }

    pub fn elements(&self) -> impl Iterator<Item = GroupElement> {
        (0..self.order as u32).map(GroupElement)
    }

    pub fn multiply(&self, f: GroupElement, g: GroupElement) -> GroupElement {
        GroupElement(self.mult[f.idx() * self.order + g.idx()])
    }

    pub fn inverse(&self, f: GroupElement) -> GroupElement {
        GroupElement(self.inv[f.idx()])
    }

    pub fn simple_reflections(&self) -> &[GroupElement] {
        &self.simple
    }

    /// Underlying permutation vector of an element (the faithful action the
    /// group was enumerated with).
    pub fn permutation(&self, g: GroupElement) -> &[u8] {
        &self.perms[g.idx()]
    }

    pub fn name(&self, g: GroupElement) -> &str {
        &self.names[g.idx()]
    }

    /// All reflections: elements conjugate to a simple reflection.
    pub fn reflections(&self) -> Vec<GroupElement> {
        let mut is_refl = vec![false; self.order];
        for &s in &self.simple {
            for g in self.elements() {
                let c = self.multiply(self.multiply(self.inverse(g), s), g);
                is_refl[c.idx()] = true;
            }
        }
        (0..self.order as u32)
            .map(GroupElement)
            .filter(|r| is_refl[r.idx()])
            .collect()
    }

    /// Coxeter element: product of the simple reflections in the given order
    /// (indices into `simple_reflections`), ascending index order by default.
    pub fn coxeter_element(&self, order: Option<&[usize]>) -> Result<GroupElement, CoxeterError> {
        let k = self.simple.len();
        let default: Vec<usize> = (0..k).collect();
        let order = order.unwrap_or(&default);
        let mut check: Vec<usize> = order.to_vec();
        check.sort_unstable();
        if check != default {
            return Err(CoxeterError::BadCoxeterOrder(order.to_vec()));
        }
        let mut c = self.identity();
        for &i in order {
            c = self.multiply(c, self.simple[i]);
        }
        Ok(c)
    }
}

/// Enumerate the full group by BFS closure over the simple reflections.
pub fn build_group(spec: &CoxeterSpec) -> Result<CoxeterGroup, CoxeterError> {
    let gens = simple_generator_perms(spec)?;
    let k = gens[0].len();
    let identity: Vec<u8> = (0..k as u8).collect();
    let mut perms = vec![identity.clone()];
    let mut index: HashMap<Vec<u8>, u32> = HashMap::new();
    index.insert(identity, 0);
    let mut frontier = vec![0u32];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &gi in &frontier {
            for gen in &gens {
                let p = compose(&perms[gi as usize], gen);
                if !index.contains_key(&p) {
                    let id = perms.len() as u32;
                    index.insert(p.clone(), id);
                    perms.push(p);
                    next.push(id);
                }
            }
        }
        frontier = next;
    }
    let order = perms.len();
    debug_assert_eq!(order, spec.expected_order());

    let mut mult = vec![0u32; order * order];
    for f in 0..order {
        for g in 0..order {
            mult[f * order + g] = index[&compose(&perms[f], &perms[g])];
        }
    }
    let mut inv = vec![0u32; order];
    for f in 0..order {
        let mut p = vec![0u8; k];
        for (i, &v) in perms[f].iter().enumerate() {
            p[v as usize] = i as u8;
        }
        inv[f] = index[&p];
    }
    let simple = gens
        .iter()
        .map(|g| GroupElement(index[g]))
        .collect::<Vec<_>>();
    let names = perms.iter().map(|p| perm_name(spec, p)).collect();
    Ok(CoxeterGroup {
        spec: *spec,
        perms,
        mult,
        inv,
        simple,
        names,
        order,
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GeneratorSet {
    Simple,
    AllReflections,
}

/// Σ-length and prefix-order machinery over a fixed positively generating
/// set Σ. Lengths come from a BFS over right multiplication by Σ, cached for
/// the whole group.
#[derive(Clone, Debug)]
pub struct TightContext<'g> {
    group: &'g CoxeterGroup,
    sigma: Vec<GroupElement>,
    lengths: Vec<u32>,
}

impl<'g> TightContext<'g> {
    pub fn new(group: &'g CoxeterGroup, kind: GeneratorSet) -> Result<Self, CoxeterError> {
        let sigma = match kind {
            GeneratorSet::Simple => group.simple_reflections().to_vec(),
            GeneratorSet::AllReflections => group.reflections(),
        };
        Self::with_sigma(group, sigma)
    }

    pub fn with_sigma(
        group: &'g CoxeterGroup,
        sigma: Vec<GroupElement>,
    ) -> Result<Self, CoxeterError> {
        let n = group.order();
        let mut lengths = vec![u32::MAX; n];
        lengths[group.identity().idx()] = 0;
        let mut frontier = vec![group.identity()];
        let mut depth = 0u32;
        while !frontier.is_empty() {
            depth += 1;
            let mut next = Vec::new();
            for &g in &frontier {
                for &s in &sigma {
                    let h = group.multiply(g, s);
                    if lengths[h.idx()] == u32::MAX {
                        lengths[h.idx()] = depth;
                        next.push(h);
                    }
                }
            }
            frontier = next;
        }
        if lengths.contains(&u32::MAX) {
            return Err(CoxeterError::NotGenerating);
        }
        Ok(TightContext {
            group,
            sigma,
            lengths,
        })
    }

    pub fn group(&self) -> &'g CoxeterGroup {
        self.group
    }

    pub fn sigma(&self) -> &[GroupElement] {
        &self.sigma
    }

    pub fn sigma_length(&self, g: GroupElement) -> u32 {
        self.lengths[g.idx()]
    }

    /// Is the sequence Σ-tight, i.e. does the length of the product equal the
    /// sum of the lengths?
    pub fn is_tight(&self, seq: &[GroupElement]) -> bool {
        let mut prod = self.group.identity();
        let mut sum = 0u64;
        for &g in seq {
            prod = self.group.multiply(prod, g);
            sum += self.sigma_length(g) as u64;
        }
        self.sigma_length(prod) as u64 == sum
    }

    /// `f ⪯_Σ g`: the pair `(f, f⁻¹g)` is Σ-tight.
    pub fn is_prefix(&self, f: GroupElement, g: GroupElement) -> bool {
        let rest = self.group.multiply(self.group.inverse(f), g);
        self.sigma_length(f) + self.sigma_length(rest) == self.sigma_length(g)
    }

    /// `f` is a Σ-suffix of `g`: the pair `(g f⁻¹, f)` is Σ-tight.
    pub fn is_suffix(&self, f: GroupElement, g: GroupElement) -> bool {
        let rest = self.group.multiply(g, self.group.inverse(f));
        self.sigma_length(rest) + self.sigma_length(f) == self.sigma_length(g)
    }

    /// Least common ⪯_Σ-upper bound of `f` and `g` within `h_set`, if one
    /// exists: a member of `h_set` above both that is ⪯_Σ-below every other
    /// common upper bound in `h_set`.
    pub fn prefix_lub(
        &self,
        h_set: &[GroupElement],
        f: GroupElement,
        g: GroupElement,
    ) -> Option<GroupElement> {
        let bounds: Vec<GroupElement> = h_set
            .iter()
            .copied()
            .filter(|&u| self.is_prefix(f, u) && self.is_prefix(g, u))
            .collect();
        bounds
            .iter()
            .copied()
            .find(|&m| bounds.iter().all(|&u| self.is_prefix(m, u)))
    }

    /// All left Σ-prefixes of `c` (the interval `Div(c)`), in id order.
    pub fn divisors(&self, c: GroupElement) -> Vec<GroupElement> {
        self.group
            .elements()
            .filter(|&w| self.is_prefix(w, c))
            .collect()
    }
}

/// Germ derived from a subset `H` of the group: single object, element set
/// `H`, and `f • g = fg` exactly when `fg` lies in `H` and `(f, g)` is
/// Σ-tight. The result is checked to be a valid cancellative germ with no
/// nontrivial invertibles.
pub fn derive_germ(ctx: &TightContext, h_set: &[GroupElement]) -> Result<GermTable, CoxeterError> {
    let group = ctx.group();
    if !h_set.contains(&group.identity()) {
        return Err(CoxeterError::MissingIdentityInSubset);
    }
    let mut members = h_set.to_vec();
    members.sort_unstable();
    members.dedup();

    let mut local = HashMap::new();
    for (i, &g) in members.iter().enumerate() {
        local.insert(g, ElementId(i as u32));
    }
    let elements = members
        .iter()
        .map(|&g| (group.name(g).to_string(), ObjectId(0), ObjectId(0)))
        .collect();
    let identities = vec![(ObjectId(0), local[&group.identity()])];
    let mut products = Vec::new();
    for &f in &members {
        for &g in &members {
            let fg = group.multiply(f, g);
            if ctx.sigma_length(f) + ctx.sigma_length(g) == ctx.sigma_length(fg) {
                if let Some(&h) = local.get(&fg) {
                    products.push((local[&f], local[&g], h));
                }
            }
        }
    }
    let table = GermTable::new(vec!["*".to_string()], elements, identities, products)?;

    let report = crate::germ::axiom_report(&table);
    if !report.valid {
        return Err(CoxeterError::DerivationCheckFailed(format!(
            "germ axioms violated: {:?}",
            report.counterexamples.first()
        )));
    }
    if !report.left_cancellative || !report.right_cancellative {
        return Err(CoxeterError::DerivationCheckFailed(
            "derived germ not cancellative".to_string(),
        ));
    }
    if report
        .invertibles
        .iter()
        .any(|&e| !table.is_identity(e))
    {
        return Err(CoxeterError::DerivationCheckFailed(
            "derived germ has a nontrivial invertible".to_string(),
        ));
    }
    Ok(table)
}

fn assert_garside(table: GermTable, what: &str) -> Result<GermTable, CoxeterError> {
    let verdict = crate::analyzer::is_garside_germ(&table);
    if !verdict.is_garside {
        return Err(CoxeterError::DerivationCheckFailed(format!(
            "{what} failed the Garside check: {:?}",
            verdict.failure
        )));
    }
    Ok(table)
}

/// Classical germ: Σ = simple reflections, H = the whole group. Generates
/// the positive braid (Artin-Tits) monoid of the system.
pub fn classical_germ(spec: &CoxeterSpec) -> Result<GermTable, CoxeterError> {
    let group = build_group(spec)?;
    let ctx = TightContext::new(&group, GeneratorSet::Simple)?;
    let all: Vec<GroupElement> = group.elements().collect();
    let table = derive_germ(&ctx, &all)?;
    assert_garside(table, "classical germ")
}

/// Dual germ: Σ = all reflections, H = Div(c) for the Coxeter element c
/// (product of the simple reflections in the given order, ascending index
/// order by default). Generates the dual braid monoid.
pub fn dual_germ(spec: &CoxeterSpec, order: Option<&[usize]>) -> Result<GermTable, CoxeterError> {
    let group = build_group(spec)?;
    let c = group.coxeter_element(order)?;
    let ctx = TightContext::new(&group, GeneratorSet::AllReflections)?;
    let divisors = ctx.divisors(c);
    let table = derive_germ(&ctx, &divisors)?;
    assert_garside(table, "dual germ")
}

/// One check per hypothesis of the derived-germ recognition propositions.
#[derive(Clone, Debug)]
pub struct DerivationReport {
    /// H closed under Σ-suffix; witness is (element of H, missing suffix).
    pub suffix_closed: Result<(), (GroupElement, GroupElement)>,
    /// H closed under Σ-prefix.
    pub prefix_closed: Result<(), (GroupElement, GroupElement)>,
    /// Pairs from Σ with a common upper bound in H have a least one in H.
    pub sigma_pairs_have_lub: Result<(), (GroupElement, GroupElement)>,
    /// Compatibility: f•σ and f•σ' defined in the germ and σ,σ' have a least
    /// upper bound m in H implies f·m stays tight and in H.
    pub lub_compatible: Result<(), (GroupElement, GroupElement, GroupElement)>,
    /// Any two elements of H have a ⪯_Σ-least upper bound in H.
    pub full_lattice: Result<(), (GroupElement, GroupElement)>,
}

impl DerivationReport {
    pub fn garside_by_bis(&self) -> bool {
        self.suffix_closed.is_ok()
            && self.prefix_closed.is_ok()
            && self.sigma_pairs_have_lub.is_ok()
            && self.lub_compatible.is_ok()
    }
}

/// Check the hypotheses of the derived-germ criteria on `H` directly in the
/// group, reporting a witness for each failure.
pub fn check_derivation_hypotheses(ctx: &TightContext, h_set: &[GroupElement]) -> DerivationReport {
    let group = ctx.group();
    let in_h = {
        let mut v = vec![false; group.order()];
        for &g in h_set {
            v[g.idx()] = true;
        }
        v
    };

    let mut suffix_closed = Ok(());
    let mut prefix_closed = Ok(());
    'outer: for &g in h_set {
        for f in group.elements() {
            if ctx.is_suffix(f, g) && !in_h[f.idx()] {
                suffix_closed = Err((g, f));
                break 'outer;
            }
        }
    }
    'outer2: for &g in h_set {
        for f in group.elements() {
            if ctx.is_prefix(f, g) && !in_h[f.idx()] {
                prefix_closed = Err((g, f));
                break 'outer2;
            }
        }
    }

    let sigma_in_h: Vec<GroupElement> = ctx
        .sigma()
        .iter()
        .copied()
        .filter(|s| in_h[s.idx()])
        .collect();

    let mut sigma_pairs_have_lub = Ok(());
    for &s in &sigma_in_h {
        for &s2 in &sigma_in_h {
            let has_bound = h_set
                .iter()
                .any(|&u| ctx.is_prefix(s, u) && ctx.is_prefix(s2, u));
            if has_bound && ctx.prefix_lub(h_set, s, s2).is_none() {
                sigma_pairs_have_lub = Err((s, s2));
            }
        }
    }

    let tight_and_in = |f: GroupElement, g: GroupElement| {
        let fg = group.multiply(f, g);
        in_h[fg.idx()] && ctx.sigma_length(f) + ctx.sigma_length(g) == ctx.sigma_length(fg)
    };

    let mut lub_compatible = Ok(());
    'compat: for &s in &sigma_in_h {
        for &s2 in &sigma_in_h {
            let Some(m) = ctx.prefix_lub(h_set, s, s2) else {
                continue;
            };
            for &f in h_set {
                if tight_and_in(f, s) && tight_and_in(f, s2) && !tight_and_in(f, m) {
                    lub_compatible = Err((f, s, s2));
                    break 'compat;
                }
            }
        }
    }

    let mut full_lattice = Ok(());
    'lattice: for &f in h_set {
        for &g in h_set {
            if ctx.prefix_lub(h_set, f, g).is_none() {
                full_lattice = Err((f, g));
                break 'lattice;
            }
        }
    }

    DerivationReport {
        suffix_closed,
        prefix_closed,
        sigma_pairs_have_lub,
        lub_compatible,
        full_lattice,
    }
}
