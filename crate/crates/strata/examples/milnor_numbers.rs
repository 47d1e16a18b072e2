//! Milnor numbers, monomial bases, and versal families of plane-curve
//! germs.
//!
//! The Milnor number of an isolated singularity `f(x, y) = 0` at the
//! origin is the codimension of the Jacobian ideal `(f_x, f_y)`; the
//! standard monomials form a basis of the local algebra and index the
//! parameters of a versal deformation. The example walks the diagram germ
//! table, verifies the product formula for `x^p + y^q`, and probes fibers
//! of the versal family of `x^3 + y^5` for smoothness.
//!
//! Run with: `cargo run --example milnor_numbers`

use num_rational::BigRational;
use num_traits::{One, Zero};
use strata::diagram::all_admitted;
use strata::milnor::{self, AnConvention};
use strata::poly::BivariatePoly;

fn main() -> strata::Result<()> {
    println!("== diagram germs ==");
    for d in all_admitted() {
        let f = milnor::germ_for_diagram(&d);
        let data = milnor::milnor(&f)?;
        println!(
            "{:<4} f = {:<14} mu = {:>2}",
            d.name(),
            f.to_string(),
            data.milnor_number()
        );
        // Under the shifted A_n convention the germ is one step deeper
        // than the diagram rank; the D and E germs match it exactly.
        let expected = match d.family() {
            strata::diagram::Family::A => d.rank() + 1,
            _ => d.rank(),
        };
        assert_eq!(data.milnor_number(), expected);
    }

    // The shifted A_n convention pairs the diagram of rank n with the
    // (n+1)-fold point x^2 + y^{n+2}; the classical table uses x^2 + y^{n+1}.
    let a4 = strata::diagram::DynkinDiagram::parse("A4")?;
    let classical = milnor::germ_for_diagram_with(&a4, AnConvention::Classical);
    println!(
        "A4 classical germ {} has mu = {}",
        classical,
        milnor::milnor(&classical)?.milnor_number()
    );

    // For x^p + y^q the Milnor number factors as (p - 1)(q - 1).
    println!();
    println!("== product formula ==");
    for (p, q) in [(2u32, 3u32), (3, 4), (3, 5), (4, 5)] {
        let f = BivariatePoly::parse(&format!("x^{p} + y^{q}"))?;
        let mu = milnor::milnor(&f)?.milnor_number();
        println!("mu(x^{p} + y^{q}) = {mu}");
        assert_eq!(mu, ((p - 1) * (q - 1)) as usize);
    }

    // The E8 germ: its basis monomials stay inside the rectangle a <= 1,
    // b <= 3 and index the versal parameters s1..s8.
    println!();
    println!("== versal family of x^3 + y^5 ==");
    let f = BivariatePoly::parse("x^3 + y^5")?;
    let data = milnor::milnor(&f)?;
    let basis: Vec<String> = data
        .basis()
        .iter()
        .map(|&m| BivariatePoly::monomial(m).to_string())
        .collect();
    println!("basis: {basis:?}");

    let family = milnor::build_versal(&f)?;
    for p in family.parameters() {
        print!("{}*{} ", p.name, BivariatePoly::monomial(p.monomial));
    }
    println!();

    // The central fiber keeps the singular point; adding the constant 1
    // moves the curve off the origin and smooths it.
    let zero = vec![BigRational::zero(); 8];
    let mut unit = zero.clone();
    unit[0] = BigRational::one();
    println!(
        "fiber at s = 0 smooth: {}",
        milnor::fiber_is_smooth(&family, &zero)?
    );
    println!(
        "fiber at s = (1,0,...,0) smooth: {}",
        milnor::fiber_is_smooth(&family, &unit)?
    );

    // The plane model of the (3, 5) monomial curve is the same germ up to
    // exchanging variables.
    let curve = milnor::monomial_curve(3, 5)?;
    println!();
    println!("monomial curve (3, 5): {curve}");
    println!("mu = {}", milnor::milnor(&curve)?.milnor_number());

    // Weighted-homogeneous degrees of the E8 family: all even, so the
    // associated torus orbit closes with a two-element stabilizer quotient.
    let orbit = milnor::orbit_descriptor(&[2, 8, 12, 14, 18, 20, 24, 30])?;
    println!(
        "orbit closes: {}, quotient order: {}",
        orbit.closes, orbit.quotient_order
    );
    Ok(())
}
