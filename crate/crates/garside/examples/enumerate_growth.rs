//! Count the elements of the presented category by canonical-form length:
//! the growth series of the positive braid monoid and its dual.
//!
//! Run with: cargo run --example enumerate_growth

use std::collections::HashSet;

use garside::coxeter::{classical_germ, dual_germ, CoxeterSpec};
use garside::engine::{CategoryEngine, NormalForm, PathWord};
use garside::germ::ObjectId;

fn growth(t: &garside::germ::GermTable, max: usize) -> Vec<usize> {
    let engine = CategoryEngine::new(t).unwrap();
    let mut counts = vec![0usize; max + 1];
    let mut seen: HashSet<Vec<garside::germ::ElementId>> = HashSet::new();
    let empty = engine
        .normal_form(&PathWord::empty(t, ObjectId(0)).unwrap())
        .unwrap();
    counts[0] += 1;
    seen.insert(empty.entries().to_vec());
    let mut queue: Vec<NormalForm> = vec![empty];
    while let Some(nf) = queue.pop() {
        for g in t.elements() {
            let mut entries = nf.entries().to_vec();
            entries.push(g);
            let w = PathWord::parse(t, entries, Some(ObjectId(0))).unwrap();
            let next = engine.normal_form(&w).unwrap();
            let len = engine.s_length(&next);
            if len > max {
                continue;
            }
            if seen.insert(next.entries().to_vec()) {
                counts[len] += 1;
                queue.push(next);
            }
        }
    }
    counts
}

fn main() {
    let classical = classical_germ(&CoxeterSpec::a(3)).unwrap();
    println!(
        "positive braid monoid on 3 strands, elements by canonical length: {:?}",
        growth(&classical, 5)
    );

    let dual = dual_germ(&CoxeterSpec::a(3), None).unwrap();
    println!(
        "dual braid monoid on 3 strands:                                  {:?}",
        growth(&dual, 5)
    );

    let dihedral = classical_germ(&CoxeterSpec::i2(5)).unwrap();
    println!(
        "Artin monoid of I2(5):                                           {:?}",
        growth(&dihedral, 5)
    );
}
