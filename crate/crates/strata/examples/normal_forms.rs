//! Garside normal forms in spherical Artin groups.
//!
//! Every element of the Artin group of an admitted diagram has a unique
//! left-weighted form `Delta^p x_1 ... x_k` with each `x_i` a permutation
//! braid. The example computes normal forms of a few words over `A3` and
//! `E8`, solves the word problem, and exhibits the central behaviour of
//! the Garside element.
//!
//! Run with: `cargo run --example normal_forms`

use strata::diagram::DynkinDiagram;
use strata::garside::{ArtinWord, Garside};

fn show(g: &Garside, d: &DynkinDiagram, text: &str) -> strata::Result<()> {
    let w = ArtinWord::parse(d, text)?;
    let nf = g.normal_form(&w)?;
    println!(
        "  nf({:<18}) = Delta^{} . {:?}",
        format!("\"{text}\""),
        nf.delta_power(),
        g.factor_words(&nf),
    );
    Ok(())
}

fn main() -> strata::Result<()> {
    let a3 = DynkinDiagram::parse("A3")?;
    let g = Garside::new(&a3);

    println!("== A3 normal forms ==");
    show(&g, &a3, "1 2 1")?;
    show(&g, &a3, "2 1 2")?;
    show(&g, &a3, "1 2 3 1 2 1")?; // a reduced word for Delta
    show(&g, &a3, "1 -2 1")?;
    show(&g, &a3, "")?;

    // The word problem: two braid words are equal iff their normal forms
    // agree letter for letter.
    let left = ArtinWord::parse(&a3, "1 3 2 1 3")?;
    let right = ArtinWord::parse(&a3, "3 1 2 3 1")?;
    println!(
        "\"1 3 2 1 3\" == \"3 1 2 3 1\": {}",
        g.are_equal(&left, &right)?
    );

    // Delta conjugation permutes the generators by the diagram symmetry
    // tau; in A3 it swaps the outer strands.
    let tau: Vec<usize> = (1..=a3.rank())
        .map(|i| g.conjugation_by_delta(i))
        .collect::<strata::Result<_>>()?;
    println!("conjugation by Delta sends 1..={} to {:?}", a3.rank(), tau);

    // In E8 the symmetry is trivial, so Delta itself is central and every
    // generator commutes with it.
    let e8 = DynkinDiagram::parse("E8")?;
    let g8 = Garside::new(&e8);
    let delta = g8.garside_element();
    println!();
    println!("== E8 Garside element ==");
    println!("word length of Delta: {}", delta.len());
    println!("Delta is central: {}", g8.is_central(&delta)?);
    let a1 = ArtinWord::new(&e8, vec![1])?;
    println!("a1 is central: {}", g8.is_central(&a1)?);

    // Equality modulo the center: a1 Delta a1^{-1} equals Delta exactly,
    // witness 1 for the shifted comparison below.
    let conj = a1.concat(&delta)?.concat(&a1.inverse())?;
    let inn = g8.inn_equal(&conj, &ArtinWord::empty(&e8))?;
    let witness = inn.witness.expect("conjugate of Delta is a power of Delta");
    println!(
        "a1 Delta a1^-1 ~ 1 (mod center): {} with witness Delta^{witness}",
        inn.equal_mod_center,
    );
    Ok(())
}
