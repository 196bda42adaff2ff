//! Decide whether germs are Garside germs and inspect the witnesses on a
//! negative verdict.
//!
//! Run with: cargo run --example analyze_garside

use garside::analyzer::{is_garside_germ, j_set};
use garside::coxeter::{classical_germ, CoxeterSpec};

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

    let verdict = is_garside_germ(&t);
    println!("classical S3 germ: Garside = {}", verdict.is_garside);

    // peek at some J-sets and the maximum function the verdict computed
    let j = verdict.j_table.as_ref().unwrap();
    let names = |ids: &[garside::germ::ElementId]| {
        ids.iter().map(|&e| t.element_name(e)).collect::<Vec<_>>()
    };
    let a = t.element_by_name("a").unwrap();
    let ba = t.element_by_name("ba").unwrap();
    println!(
        "J(a, ba) = {:?}, greatest = {}",
        names(&j_set(&t, a, ba).unwrap()),
        t.element_name(j.j(a, ba).unwrap())
    );
    println!(
        "J(a, a)  = {:?}, greatest = {}",
        names(&j_set(&t, a, a).unwrap()),
        t.element_name(j.j(a, a).unwrap())
    );

    // a single deleted product entry is enough to lose the property
    let b = t.element_by_name("b").unwrap();
    let broken = t.without_product(a, b);
    let verdict = is_garside_germ(&broken);
    println!("\nafter deleting a•b: Garside = {}", verdict.is_garside);
    println!("failure: {:?}", verdict.failure);
}
