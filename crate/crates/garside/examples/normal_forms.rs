//! Greedy normal forms in the positive braid monoid presented by the
//! classical S3 germ: the sharp head/tail decomposition and the domino
//! left-multiplication.
//!
//! Run with: cargo run --example normal_forms

use garside::coxeter::{classical_germ, CoxeterSpec};
use garside::engine::{CategoryEngine, PathWord};

fn main() {
    let t = classical_germ(&CoxeterSpec::a(3))
        .unwrap()
        .with_element_names(
            ["e", "a", "b", "ab", "ba", "Δ"]
                .into_iter()
                .map(String::from)
                .collect(),
        )
        .unwrap();
    let engine = CategoryEngine::new(&t).unwrap();

    let word = |names: &[&str]| {
        let ids = names
            .iter()
            .map(|n| t.element_by_name(n).unwrap())
            .collect();
        PathWord::new(&t, ids).unwrap()
    };
    let show = |ids: &[garside::germ::ElementId]| {
        ids.iter()
            .map(|&e| t.element_name(e))
            .collect::<Vec<_>>()
            .join(" · ")
    };

    for names in [
        vec!["a", "b", "a", "a"],
        vec!["a", "a"],
        vec!["b", "a", "b", "b", "a"],
        vec!["Δ", "Δ"],
    ] {
        let w = word(&names);
        let head = engine.head_sharp(&w);
        let nf = engine.normal_form(&w).unwrap();
        println!(
            "{:<18} head = {:<3} normal form = [{}]  s-length = {}",
            names.join(","),
            t.element_name(head),
            show(nf.entries()),
            engine.s_length(&nf),
        );
    }

    // domino multiplication: prepend letters one at a time
    println!("\nleft-multiplying [b, a] step by step:");
    let mut nf = engine.normal_form(&word(&["b", "a"])).unwrap();
    for letter in ["a", "b", "a"] {
        let f = t.element_by_name(letter).unwrap();
        nf = engine.left_multiply(f, &nf).unwrap();
        println!("  after {letter}: [{}]", show(nf.entries()));
    }
}
