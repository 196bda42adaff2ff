//! Test-side oracles, independent of the library's computation paths.
//!
//! The congruence oracle materializes every word up to a length bound over a
//! one-object germ and unions words related by a single contraction. The
//! axiom and divisor oracles are direct scans written against the raw
//! product table only.

#![allow(dead_code)]

use std::collections::HashMap;

use garside::germ::{ElementId, GermTable};

/// Union-find over all words of length <= bound on a single-object germ.
/// Two words are congruent exactly when they are connected by contractions
/// and expansions staying within the bound.
pub struct CongruenceOracle {
    n: usize,
    bound: usize,
    offsets: Vec<usize>,
    parent: Vec<u32>,
    product: Vec<Option<ElementId>>,
    identity: ElementId,
    first_letters_memo: std::cell::RefCell<HashMap<u32, Vec<bool>>>,
}

impl CongruenceOracle {
    pub fn new(t: &GermTable, bound: usize) -> CongruenceOracle {
        assert_eq!(t.num_objects(), 1, "word oracle works on one-object germs");
        let n = t.num_elements();
        // offsets[k] = index of the first length-k word
        let mut offsets = vec![0usize; bound + 2];
        for k in 0..=bound {
            offsets[k + 1] = offsets[k] + n.pow(k as u32);
        }
        let total = offsets[bound + 1];
        let mut product = vec![None; n * n];
        for f in t.elements() {
            for g in t.elements() {
                product[f.idx() * n + g.idx()] = t.product(f, g);
            }
        }
        let mut oracle = CongruenceOracle {
            n,
            bound,
            offsets,
            parent: (0..total as u32).collect(),
            product,
            identity: t.identity(garside::germ::ObjectId(0)),
            first_letters_memo: Default::default(),
        };
        // union each word with its one-step contractions
        let mut word = Vec::with_capacity(bound);
        for k in 2..=bound {
            let count = n.pow(k as u32);
            for code in 0..count {
                word.clear();
                let mut c = code;
                for _ in 0..k {
                    word.push(ElementId((c % n) as u32));
                    c /= n;
                }
                let idx = oracle.offsets[k] + code;
                for i in 0..k - 1 {
                    let Some(h) = oracle.product[word[i].idx() * n + word[i + 1].idx()] else {
                        continue;
                    };
                    let mut contracted: Vec<ElementId> = Vec::with_capacity(k - 1);
                    contracted.extend_from_slice(&word[..i]);
                    contracted.push(h);
                    contracted.extend_from_slice(&word[i + 2..]);
                    let cidx = oracle.encode(&contracted);
                    oracle.union(idx, cidx);
                }
            }
        }
        oracle
    }

    fn encode(&self, word: &[ElementId]) -> usize {
        assert!(word.len() <= self.bound);
        let mut code = 0usize;
        for &e in word.iter().rev() {
            code = code * self.n + e.idx();
        }
        self.offsets[word.len()] + code
    }

    fn decode_len(&self, idx: usize) -> usize {
        (0..=self.bound)
            .find(|&k| idx < self.offsets[k + 1])
            .expect("index in range")
    }

    fn decode(&self, idx: usize) -> Vec<ElementId> {
        let k = self.decode_len(idx);
        let mut code = idx - self.offsets[k];
        let mut word = Vec::with_capacity(k);
        for _ in 0..k {
            word.push(ElementId((code % self.n) as u32));
            code /= self.n;
        }
        word
    }

    fn find(&self, mut x: usize) -> u32 {
        // no path compression (parent is immutable after construction when
        // queried through &self); chains are short in practice
        loop {
            let p = self.parent[x] as usize;
            if p == x {
                return p as u32;
            }
            x = p;
        }
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a) as usize, self.find(b) as usize);
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo as u32;
        }
    }

    pub fn class(&self, word: &[ElementId]) -> u32 {
        self.find(self.encode(word))
    }

    /// Congruence modulo the identification of the empty word with the
    /// length-one identity word (trailing identities carry no content).
    pub fn equivalent(&self, w1: &[ElementId], w2: &[ElementId]) -> bool {
        let c1 = self.class(w1);
        let c2 = self.class(w2);
        if c1 == c2 {
            return true;
        }
        let eps = self.class(&[]);
        let one = self.class(&[self.identity]);
        (c1 == eps || c1 == one) && (c2 == eps || c2 == one)
    }

    /// Every word of the class, decoded.
    pub fn class_words(&self, word: &[ElementId]) -> Vec<Vec<ElementId>> {
        let root = self.class(word);
        let mut out = Vec::new();
        for idx in 0..self.parent.len() {
            if self.find(idx) == root {
                out.push(self.decode(idx));
            }
        }
        out
    }

    /// Set of first letters over the class: `h` divides the class element
    /// iff some congruent word starts with `h`.
    fn first_letters(&self, word: &[ElementId]) -> Vec<bool> {
        let root = self.class(word);
        if let Some(v) = self.first_letters_memo.borrow().get(&root) {
            return v.clone();
        }
        let mut flags = vec![false; self.n];
        for idx in self.offsets[1]..self.parent.len() {
            if self.find(idx) == root {
                let k = self.decode_len(idx);
                let code = idx - self.offsets[k];
                flags[code % self.n] = true;
            }
        }
        self.first_letters_memo.borrow_mut().insert(root, flags.clone());
        flags
    }

    /// `h` left-divides the element presented by `word`, inside the bound.
    pub fn divides(&self, h: ElementId, word: &[ElementId]) -> bool {
        self.first_letters(word)[h.idx()]
    }

    /// Greedy pair by the divisor-pulling definition: every letter dividing
    /// the product of the pair divides its first entry.
    pub fn greedy_pair(&self, t: &GermTable, g1: ElementId, g2: ElementId) -> bool {
        let pair_divs = self.first_letters(&[g1, g2]);
        let g1_divs = self.first_letters(&[g1]);
        t.elements().all(|h| !pair_divs[h.idx()] || g1_divs[h.idx()])
    }

    pub fn is_normal(&self, t: &GermTable, word: &[ElementId]) -> bool {
        word.windows(2).all(|p| self.greedy_pair(t, p[0], p[1]))
    }
}

/// Classical S₃ germ with the conventional short names (BFS order of the
/// derivation is e, a, b, ab, ba, Δ).
pub fn s3_classical_named() -> GermTable {
    garside::coxeter::classical_germ(&garside::coxeter::CoxeterSpec::a(3))
        .unwrap()
        .with_element_names(
            ["e", "a", "b", "ab", "ba", "Δ"]
                .into_iter()
                .map(String::from)
                .collect(),
        )
        .unwrap()
}

pub fn by_name(t: &GermTable, name: &str) -> ElementId {
    t.element_by_name(name)
        .unwrap_or_else(|| panic!("element {name} exists"))
}

pub fn named_word(t: &GermTable, names: &[&str]) -> garside::engine::PathWord {
    let ids = names.iter().map(|n| by_name(t, n)).collect();
    garside::engine::PathWord::new(t, ids).unwrap()
}

pub fn trim_trailing_identities(t: &GermTable, word: &[ElementId]) -> Vec<ElementId> {
    let mut out = word.to_vec();
    while let Some(&last) = out.last() {
        if t.is_identity(last) {
            out.pop();
        } else {
            break;
        }
    }
    out
}

/// Direct re-check of the three germ axioms by triple scan, sharing nothing
/// with the library's validator.
pub fn oracle_axioms_hold(t: &GermTable) -> bool {
    for f in t.elements() {
        for g in t.elements() {
            if let Some(h) = t.product(f, g) {
                if t.target(f) != t.source(g)
                    || t.source(h) != t.source(f)
                    || t.target(h) != t.target(g)
                {
                    return false;
                }
            }
        }
    }
    for f in t.elements() {
        let lx = t.identity(t.source(f));
        let ry = t.identity(t.target(f));
        if t.product(lx, f) != Some(f) || t.product(f, ry) != Some(f) {
            return false;
        }
    }
    for f in t.elements() {
        for g in t.elements() {
            for h in t.elements() {
                let (Some(fg), Some(gh)) = (t.product(f, g), t.product(g, h)) else {
                    continue;
                };
                let lhs = t.product(fg, h);
                let rhs = t.product(f, gh);
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}

fn oracle_divides_in_germ(t: &GermTable, f: ElementId, g: ElementId) -> bool {
    t.elements().any(|c| t.product(f, c) == Some(g))
}

/// Independent greatest-element scan over every J-set: true when each
/// composable pair has a member dominating all others.
pub fn oracle_all_j_sets_have_greatest(t: &GermTable) -> bool {
    for g1 in t.elements() {
        for g2 in t.elements() {
            if t.target(g1) != t.source(g2) {
                continue;
            }
            let set: Vec<ElementId> = t
                .elements()
                .filter(|&g| t.product(g1, g).is_some() && oracle_divides_in_germ(t, g, g2))
                .collect();
            let has_greatest = set
                .iter()
                .any(|&m| set.iter().all(|&h| oracle_divides_in_germ(t, h, m)));
            if !has_greatest {
                return false;
            }
        }
    }
    true
}

/// Permutation helpers for the transitive-factorization brute force; a
/// permutation is its one-line image vector.
pub mod perms {
    pub fn compose(f: &[u8], g: &[u8]) -> Vec<u8> {
        f.iter().map(|&p| g[p as usize]).collect()
    }

    pub fn cycle_count(p: &[u8]) -> usize {
        let mut seen = vec![false; p.len()];
        let mut cycles = 0;
        for start in 0..p.len() {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cur = p[cur] as usize;
            }
        }
        cycles
    }

    /// Reflection length of a permutation of n points: n minus the number
    /// of cycles.
    pub fn reflection_length(p: &[u8]) -> usize {
        p.len() - cycle_count(p)
    }

    pub fn all_transpositions(n: usize) -> Vec<Vec<u8>> {
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let mut p: Vec<u8> = (0..n as u8).collect();
                p.swap(i, j);
                out.push(p);
            }
        }
        out
    }

    /// Distinct prefix products over all minimal-length factorizations of
    /// `c` into transpositions: brute force over every sequence of
    /// reflection_length(c) transpositions, keeping those multiplying to c.
    /// This enumerates the noncrossing-partition interval below the cycle.
    pub fn prefix_products_of_minimal_factorizations(c: &[u8]) -> Vec<Vec<u8>> {
        let n = c.len();
        let len = reflection_length(c);
        let ts = all_transpositions(n);
        let identity: Vec<u8> = (0..n as u8).collect();
        let mut prefixes: Vec<Vec<u8>> = vec![identity.clone()];
        let mut push = |p: Vec<u8>| {
            if !prefixes.contains(&p) {
                prefixes.push(p);
            }
        };
        let mut counter = vec![0usize; len];
        loop {
            let mut acc = identity.clone();
            let mut partials = Vec::with_capacity(len);
            for &i in &counter {
                acc = compose(&acc, &ts[i]);
                partials.push(acc.clone());
            }
            if acc == *c {
                for p in partials {
                    push(p);
                }
            }
            // odometer increment
            let mut pos = 0;
            loop {
                if pos == len {
                    return prefixes;
                }
                counter[pos] += 1;
                if counter[pos] < ts.len() {
                    break;
                }
                counter[pos] = 0;
                pos += 1;
            }
        }
    }
}
