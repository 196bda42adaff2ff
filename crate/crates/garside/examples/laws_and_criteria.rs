//! The sharp J/I/H-law verification and the Noetherian/lcm sufficient
//! criteria, cross-checked against the maximum-J decision.
//!
//! Run with: cargo run --example laws_and_criteria

use garside::analyzer::{
    is_garside_germ, lcm_criteria, max_j_function, noetherian_report, verify_laws,
};
use garside::coxeter::{classical_germ, dual_germ, CoxeterSpec};

fn main() {
    let t = classical_germ(&CoxeterSpec::a(4)).unwrap();
    let j = max_j_function(&t).unwrap();
    let laws = verify_laws(&t, &j);
    println!("classical S4 germ (24 elements):");
    println!("  sharp J-law: {:?}", laws.sharp_j);
    println!("  sharp I-law: {:?}", laws.sharp_i);
    println!("  sharp H-law: {:?}", laws.sharp_h);

    // perturb one value of the table: every law check turns into a witness
    let g1 = garside::germ::ElementId(1);
    let g2 = garside::germ::ElementId(2);
    let identity = t.identity(garside::germ::ObjectId(0));
    let perturbed = j.with_value(g1, g2, identity);
    let broken = verify_laws(&t, &perturbed);
    println!("  after perturbing J({g1:?}, {g2:?}): sharp J-law = {:?}", broken.sharp_j);

    println!("\ncriteria cross-check on derived germs:");
    for (label, t) in [
        ("classical A3", classical_germ(&CoxeterSpec::a(3)).unwrap()),
        ("dual A4", dual_germ(&CoxeterSpec::a(4), None).unwrap()),
        ("classical I2(4)", classical_germ(&CoxeterSpec::i2(4)).unwrap()),
    ] {
        let noeth = noetherian_report(&t);
        let lcm = lcm_criteria(&t);
        let verdict = is_garside_germ(&t);
        println!(
            "  {label:<16} noetherian L/R = {}/{}  lcm package = {}  maxJ verdict = {}",
            noeth.left_noetherian,
            noeth.right_noetherian,
            lcm.rec_lcm_package_applies,
            verdict.is_garside
        );
    }
}
