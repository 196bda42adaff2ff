//! Derive classical (Artin-Tits) germs from finite Coxeter groups: the germ
//! lives on the whole group, with the product defined on length-additive
//! pairs over the simple reflections.
//!
//! Run with: cargo run --example derive_classical

use garside::analyzer::is_garside_germ;
use garside::coxeter::{classical_germ, CoxeterSpec};
use garside::format::GermFile;
use garside::germ::axiom_report;

fn main() {
    for (label, spec) in [
        ("A, 3 points (S3)", CoxeterSpec::a(3)),
        ("A, 4 points (S4)", CoxeterSpec::a(4)),
        ("B, rank 2", CoxeterSpec::b(2)),
        ("B, rank 3", CoxeterSpec::b(3)),
        ("I2(6), dihedral", CoxeterSpec::i2(6)),
    ] {
        let t = classical_germ(&spec).unwrap();
        let report = axiom_report(&t);
        let verdict = is_garside_germ(&t);
        println!(
            "{label:<20} {} elements, {} atoms, Garside = {}",
            t.num_elements(),
            report.atoms.len(),
            verdict.is_garside
        );
    }

    // the emitted file format, shown for the smallest case
    let t = classical_germ(&CoxeterSpec::a(3)).unwrap();
    println!("\nclassical S3 as a germ file:\n");
    println!("{}", GermFile::from_table(&t).to_canonical_string());
}
