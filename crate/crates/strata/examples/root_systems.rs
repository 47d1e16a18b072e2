//! Survey of the admitted simply-laced root systems.
//!
//! For every diagram the example prints the rank, the number of positive
//! roots, the Coxeter number `h`, the invariant degrees `d_1 <= ... <= d_n`
//! of the Weyl group, their gcd, and whether the longest element `w0` acts
//! as `-id` — the dichotomy that separates the diagrams whose Garside
//! element is already central from those where only its square is.
//!
//! Run with: `cargo run --example root_systems`

use strata::diagram::{all_admitted, DynkinDiagram};
use strata::weyl::RootSystem;

fn survey(d: &DynkinDiagram) -> strata::Result<()> {
    let rs = RootSystem::new(d);
    let degrees = rs.invariant_degrees()?;
    let gcd = degrees.iter().fold(0usize, |a, &x| num_integer::gcd(a, x));
    let sum_check: usize = degrees.iter().map(|d| d - 1).sum();
    assert_eq!(
        sum_check,
        rs.positive_roots().len(),
        "sum of (d_i - 1) must count the positive roots"
    );
    println!(
        "{:<4} rank {:>2}  roots {:>4}  h {:>3}  degrees {:?} (gcd {})  w0 = -id: {}",
        d.name(),
        d.rank(),
        rs.positive_roots().len(),
        rs.coxeter_number(),
        degrees,
        gcd,
        rs.longest_is_minus_identity(),
    );
    Ok(())
}

fn main() -> strata::Result<()> {
    println!("== admitted simply-laced diagrams ==");
    for d in all_admitted() {
        survey(&d)?;
    }

    // The exceptional case of interest: E8 pairs 120 positive roots with
    // invariant degrees of gcd 2, and its longest element is central.
    let e8 = DynkinDiagram::parse("E8")?;
    let rs = RootSystem::new(&e8);
    println!();
    println!("E8 positive roots: {}", rs.positive_roots().len());
    println!("E8 invariant degrees: {:?}", rs.invariant_degrees()?);

    // E6 is the standard counterexample: w0 acts by the diagram flip, not
    // by -id, so its Garside element is not central.
    let e6 = DynkinDiagram::parse("E6")?;
    println!(
        "E6 longest element is -id: {}",
        RootSystem::new(&e6).longest_is_minus_identity()
    );
    Ok(())
}
