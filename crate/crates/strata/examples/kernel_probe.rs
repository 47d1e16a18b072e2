//! Breadth-first search for homologically trivial braid words.
//!
//! A word in the Artin group lies in the homological kernel when its
//! transvection image is the identity matrix while the word itself is
//! not trivial. The example runs the probe to completion on `A2`, where
//! the kernel of the rank-two representation is generated by the fourth
//! power of the Garside element, then runs a budgeted partial probe
//! over `E8`.
//!
//! Run with: `cargo run --example kernel_probe` (release mode recommended)

use std::time::Duration;

use strata::diagram::DynkinDiagram;
use strata::transvection::{self, SearchBudget, SymplecticConfig};

fn main() -> strata::Result<()> {
    let a2 = DynkinDiagram::parse("A2")?;
    let cfg = SymplecticConfig::new(&a2);

    // Up to length 11 the probe provably finds nothing.
    let short = transvection::kernel_search(&cfg, 11)?;
    println!(
        "A2 probe to length 11: complete = {}, certificates = {}",
        short.complete,
        short.certificates.len(),
    );
    assert!(short.complete && short.certificates.is_empty());

    // At length 12 the two generators Delta^4 and Delta^-4 appear.
    let found = transvection::kernel_search(&cfg, 12)?;
    println!(
        "A2 probe to length 12: visited {} states, certificates:",
        found.visited_states
    );
    for w in &found.certificates {
        let cert = transvection::verify_kernel_certificate(&cfg, w)?;
        println!(
            "  {w}  (group trivial: {}, homology trivial: {})",
            cert.group_trivial, cert.homology_trivial,
        );
        assert!(!cert.group_trivial && cert.homology_trivial);
    }
    assert_eq!(found.certificates.len(), 2);

    // E8 state space grows far too fast for completion; a state budget
    // makes the partial run deterministic, a time budget caps the wall
    // clock. Certificates are only reported from fully explored depths.
    let e8 = DynkinDiagram::parse("E8")?;
    let cfg8 = SymplecticConfig::new(&e8);
    let budget = SearchBudget {
        max_states: Some(20_000),
        time_limit: Some(Duration::from_secs(60)),
    };
    let partial = transvection::kernel_search_with_budget(&cfg8, 8, &budget)?;
    println!();
    println!(
        "E8 probe to length 8 under budget: complete = {}, explored depth = {}, \
         visited {} states, certificates = {}",
        partial.complete,
        partial.explored_depth,
        partial.visited_states,
        partial.certificates.len(),
    );
    Ok(())
}
