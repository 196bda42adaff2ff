//! Build a germ table by hand, check the axioms, and see what a witness for
//! a broken table looks like.
//!
//! Run with: cargo run --example validate_germ

use garside::germ::{validate_germ, ElementId, GermTable, ObjectId};

fn main() {
    // Free monoid on one generator, truncated at x^2: elements 1, x, x2,
    // with x•x = x2 and nothing above.
    let t = GermTable::new(
        vec!["*".into()],
        vec![
            ("1".into(), ObjectId(0), ObjectId(0)),
            ("x".into(), ObjectId(0), ObjectId(0)),
            ("x2".into(), ObjectId(0), ObjectId(0)),
        ],
        vec![(ObjectId(0), ElementId(0))],
        vec![
            (ElementId(0), ElementId(0), ElementId(0)),
            (ElementId(0), ElementId(1), ElementId(1)),
            (ElementId(1), ElementId(0), ElementId(1)),
            (ElementId(0), ElementId(2), ElementId(2)),
            (ElementId(2), ElementId(0), ElementId(2)),
            (ElementId(1), ElementId(1), ElementId(2)),
        ],
    )
    .expect("structurally sound");

    let report = garside::germ::axiom_report(&t);
    println!("truncated free monoid germ:");
    println!("  valid              = {}", report.valid);
    println!("  left-associative   = {}", report.left_associative);
    println!("  left-cancellative  = {}", report.left_cancellative);
    println!(
        "  invertibles        = {:?}",
        report
            .invertibles
            .iter()
            .map(|&e| t.element_name(e))
            .collect::<Vec<_>>()
    );
    println!(
        "  atoms              = {:?}",
        report
            .atoms
            .iter()
            .map(|&e| t.element_name(e))
            .collect::<Vec<_>>()
    );

    // Now damage it: add an entry x2•x = x without anything backing it.
    // The exchange law fails on the triple (x, x, x): (x•x)•x is defined
    // while x•(x•x) is not, and the report carries the witness.
    let broken = t.with_product(ElementId(2), ElementId(1), ElementId(1));
    let report = validate_germ(&broken);
    println!("\nafter adding a bogus entry x2•x = x:");
    println!("  valid = {}", report.valid);
    for violation in report.counterexamples.iter().take(3) {
        println!("  witness: {violation:?}");
    }
}
