//! Numerical semigroups, Weierstrass gap sequences, spin parity, and the
//! genus-4 classifier.
//!
//! A numerical semigroup is an additively closed subset of the natural
//! numbers containing `0` whose complement — the *gaps* — is finite; the
//! largest gap is the Frobenius number. At a point `p` of a smooth curve
//! of genus `g`, the orders of vanishing of abelian differentials at `p`
//! miss exactly `g` values (the Weierstrass gaps), and the non-gaps form
//! such a semigroup. The number `h0` of gaps that are at least `g`
//! computes the parity of the theta characteristic `(g-1)p`, splitting
//! strata of abelian differentials into even and odd spin components.
//!
//! In genus 4 the classifier sends `{1,3,5,7}` to the hyperelliptic
//! locus, `{1,2,4,7}` (the gaps of `<3,5>`) to the even component,
//! `{1,2,3,7}` to the odd component, and everything else — the sequences
//! without `7`, where no differential vanishes to order 6 — to a reject
//! label.
//!
//! Sieve bound: the classical two-generator Frobenius bound
//! `ab - a - b` does not cap the gaps of a general generating set by the
//! product of its two smallest members (witness `<4, 6, 99>`, whose
//! largest gap is 101 > 24), so the sieve grows its window until it ends
//! in `min(generators)` consecutive representable values, which certifies
//! that every larger integer is representable too.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::error::Error;
use crate::Result;

/// Additively closed cofinite subset of the naturals, stored as its
/// minimal generating set plus the sorted finite gap list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
    gaps: Vec<u64>,
}

/// The sorted gap list of a numerical semigroup; `genus` is its length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapSequence {
    gaps: Vec<u64>,
}

/// Parity of the theta characteristic attached to a gap sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Parity {
    Even,
    Odd,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// `h0` counts the gaps that are at least the genus; its parity is the
/// spin invariant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SpinParity {
    pub h0: usize,
    pub parity: Parity,
}

/// Where a genus-4 gap sequence sits among the strata labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Genus4Class {
    Hyperelliptic,
    EvenComponent,
    OddComponent,
    NotMinimal,
}

impl fmt::Display for Genus4Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Genus4Class::Hyperelliptic => "hyperelliptic",
            Genus4Class::EvenComponent => "even_component",
            Genus4Class::OddComponent => "odd_component",
            Genus4Class::NotMinimal => "not_minimal",
        })
    }
}

impl NumericalSemigroup {
    /// Sieves out the semigroup generated by `gens`.
    ///
    /// Requires a nonempty list of positive integers with gcd 1; any
    /// other input has an infinite complement (or none at all).
    pub fn from_generators(gens: &[u64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::InvalidSemigroup("empty generating set".into()));
        }
        if gens.contains(&0) {
            return Err(Error::InvalidSemigroup(
                "generators must be positive".into(),
            ));
        }
        let gcd = gens.iter().fold(0u64, |acc, &g| acc.gcd(&g));
        if gcd != 1 {
            return Err(Error::InvalidSemigroup(format!(
                "gcd of generators is {gcd}, so the complement is infinite"
            )));
        }
        let mut sorted: Vec<u64> = gens.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let m = sorted[0] as usize;

        // Sieve window; certified complete once it ends in m consecutive
        // representable values (adding multiples of m then reaches
        // everything beyond).
        let mut bound = if sorted.len() >= 2 {
            (sorted[0] * sorted[1]) as usize
        } else {
            m * m
        };
        let reachable = loop {
            let mut reachable = vec![false; bound + 1];
            reachable[0] = true;
            for i in 1..=bound {
                reachable[i] = sorted
                    .iter()
                    .take_while(|&&g| g as usize <= i)
                    .any(|&g| reachable[i - g as usize]);
            }
            if reachable[bound + 1 - m..].iter().all(|&r| r) {
                break reachable;
            }
            bound *= 2;
        };

        let gaps: Vec<u64> = (1..=bound)
            .filter(|&i| !reachable[i])
            .map(|i| i as u64)
            .collect();
        let generators = minimal_generators(&reachable, m);
        Ok(NumericalSemigroup { generators, gaps })
    }

    /// Minimal generating set, sorted ascending.
    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    /// Sorted gaps; empty exactly when the semigroup is all of `N`.
    pub fn gaps(&self) -> &[u64] {
        &self.gaps
    }

    /// Number of gaps.
    pub fn genus(&self) -> usize {
        self.gaps.len()
    }

    /// Largest gap, or `None` for the full semigroup.
    pub fn frobenius(&self) -> Option<u64> {
        self.gaps.last().copied()
    }

    /// Membership test.
    pub fn contains(&self, n: u64) -> bool {
        self.gaps.binary_search(&n).is_err()
    }

    /// The gap list as a validated sequence.
    pub fn gap_sequence(&self) -> GapSequence {
        GapSequence {
            gaps: self.gaps.clone(),
        }
    }
}

/// Minimal generators from a complete sieve: the nonzero elements that
/// are not sums of two nonzero elements. They all lie within one
/// multiplicity step past the Frobenius number.
fn minimal_generators(reachable: &[bool], multiplicity: usize) -> Vec<u64> {
    let frobenius = (0..reachable.len())
        .rev()
        .find(|&i| !reachable[i])
        .unwrap_or(0);
    let ceiling = frobenius + multiplicity;
    let elements: Vec<usize> = (1..=ceiling.min(reachable.len() - 1))
        .filter(|&i| reachable[i])
        .collect();
    let element_set: BTreeSet<usize> = elements.iter().copied().collect();
    elements
        .iter()
        .filter(|&&s| {
            !elements
                .iter()
                .take_while(|&&u| 2 * u <= s)
                .any(|&u| element_set.contains(&(s - u)))
        })
        .map(|&s| s as u64)
        .collect()
}

impl GapSequence {
    /// Validates a prospective gap list: strictly increasing positive
    /// integers, `1` present when nonempty, everything at most `2g - 1`,
    /// and the complement closed under addition.
    pub fn new(gaps: &[u64]) -> Result<Self> {
        let mut sorted = gaps.to_vec();
        sorted.sort_unstable();
        let before = sorted.len();
        sorted.dedup();
        if sorted.len() != before {
            return Err(Error::InvalidSemigroup("repeated gap".into()));
        }
        let g = sorted.len() as u64;
        if g == 0 {
            return Ok(GapSequence { gaps: sorted });
        }
        if sorted[0] == 0 {
            return Err(Error::InvalidSemigroup("gaps must be positive".into()));
        }
        if sorted[0] != 1 {
            return Err(Error::InvalidSemigroup(
                "1 must be a gap of every semigroup with nonempty complement".into(),
            ));
        }
        let frobenius = *sorted.last().expect("nonempty");
        if frobenius > 2 * g - 1 {
            return Err(Error::InvalidSemigroup(format!(
                "gap {frobenius} exceeds 2*genus - 1 = {}",
                2 * g - 1
            )));
        }
        // Closure of the complement: only sums landing at or below the
        // Frobenius number can violate it.
        let gap_set: BTreeSet<u64> = sorted.iter().copied().collect();
        let non_gaps: Vec<u64> = (1..=frobenius).filter(|n| !gap_set.contains(n)).collect();
        for (i, &a) in non_gaps.iter().enumerate() {
            for &b in &non_gaps[i..] {
                let sum = a + b;
                if sum > frobenius {
                    break;
                }
                if gap_set.contains(&sum) {
                    return Err(Error::NotASemigroup { a, b, sum });
                }
            }
        }
        Ok(GapSequence { gaps: sorted })
    }

    pub fn gaps(&self) -> &[u64] {
        &self.gaps
    }

    pub fn genus(&self) -> usize {
        self.gaps.len()
    }
}

/// Counts the gaps at or above the genus; even count means even spin.
pub fn spin_parity(gs: &GapSequence) -> SpinParity {
    let g = gs.genus() as u64;
    let h0 = gs.gaps().iter().filter(|&&gap| gap >= g).count();
    let parity = if h0 % 2 == 0 {
        Parity::Even
    } else {
        Parity::Odd
    };
    SpinParity { h0, parity }
}

/// Places a genus-4 gap sequence: hyperelliptic `{1,3,5,7}`, even
/// component `{1,2,4,7}`, odd component `{1,2,3,7}`, and a reject label
/// for the sequences without the gap `7`.
pub fn classify_genus4(gs: &GapSequence) -> Result<Genus4Class> {
    if gs.genus() != 4 {
        return Err(Error::GenusMismatch(gs.genus()));
    }
    Ok(match gs.gaps() {
        [1, 3, 5, 7] => Genus4Class::Hyperelliptic,
        [1, 2, 4, 7] => Genus4Class::EvenComponent,
        [1, 2, 3, 7] => Genus4Class::OddComponent,
        _ => Genus4Class::NotMinimal,
    })
}

/// Reconstructs the semigroup whose gaps are `gs`; inverse to
/// [`NumericalSemigroup::from_generators`] composed with the gap listing.
pub fn gaps_to_semigroup(gs: &GapSequence) -> NumericalSemigroup {
    let Some(&frobenius) = gs.gaps().last() else {
        return NumericalSemigroup {
            generators: vec![1],
            gaps: Vec::new(),
        };
    };
    let gap_set: BTreeSet<u64> = gs.gaps().iter().copied().collect();
    let multiplicity = (1..).find(|n| !gap_set.contains(n)).expect("cofinite");
    let bound = (frobenius + multiplicity) as usize;
    let reachable: Vec<bool> = (0..=bound as u64)
        .map(|n| n == 0 || (n >= 1 && !gap_set.contains(&n)))
        .collect();
    let generators = minimal_generators(&reachable, multiplicity as usize);
    NumericalSemigroup {
        generators,
        gaps: gs.gaps().to_vec(),
    }
}
