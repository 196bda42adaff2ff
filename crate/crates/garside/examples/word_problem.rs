//! Solve the word problem in the positive braid monoid on three strands:
//! two words are equal exactly when their canonical forms coincide.
//!
//! Run with: cargo run --example word_problem

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

    let pairs: [(&[&str], &[&str]); 4] = [
        (&["a", "b", "a"], &["b", "a", "b"]), // the braid relation
        (&["a", "b"], &["b", "a"]),
        (&["a", "b", "a", "a"], &["Δ", "a"]),
        (&["Δ", "Δ"], &["a", "b", "a", "b", "a", "b"]),
    ];
    for (w1, w2) in pairs {
        let equal = engine.word_problem(&word(w1), &word(w2)).unwrap();
        println!(
            "{:<14} ≡ {:<14} ? {}",
            w1.join(","),
            w2.join(","),
            if equal { "equal" } else { "distinct" }
        );
    }
}
