//! Derive dual braid-monoid germs: the generating set becomes the full
//! reflection set, the germ lives on the prefix interval below a Coxeter
//! element, and the element counts follow the noncrossing-partition numbers.
//!
//! Run with: cargo run --example derive_dual

use garside::coxeter::{
    build_group, check_derivation_hypotheses, dual_germ, CoxeterSpec, GeneratorSet, TightContext,
};
use garside::germ::axiom_report;

fn main() {
    for (label, spec) in [
        ("A, 3 points", CoxeterSpec::a(3)),
        ("A, 4 points", CoxeterSpec::a(4)),
        ("B, rank 2", CoxeterSpec::b(2)),
        ("I2(5)", CoxeterSpec::i2(5)),
        ("I2(6)", CoxeterSpec::i2(6)),
    ] {
        let t = dual_germ(&spec, None).unwrap();
        let atoms = axiom_report(&t).atoms.len();
        println!(
            "dual {label:<12} {:>3} elements, {atoms} atoms (= reflections below c)",
            t.num_elements()
        );
    }

    // the derivation hypotheses can be checked directly in the group
    let group = build_group(&CoxeterSpec::a(4)).unwrap();
    let ctx = TightContext::new(&group, GeneratorSet::AllReflections).unwrap();
    let c = group.coxeter_element(None).unwrap();
    let interval = ctx.divisors(c);
    let report = check_derivation_hypotheses(&ctx, &interval);
    println!(
        "\nS4 interval below c = {}: {} elements, lattice = {}, closure + lub hypotheses = {}",
        group.name(c),
        interval.len(),
        report.full_lattice.is_ok(),
        report.garside_by_bis()
    );

    // the Coxeter element order is a real choice: different orders give
    // different (isomorphic) germs
    let c_rev = group.coxeter_element(Some(&[2, 1, 0])).unwrap();
    println!(
        "reversed order gives c = {}; interval size {}",
        group.name(c_rev),
        ctx.divisors(c_rev).len()
    );
}
