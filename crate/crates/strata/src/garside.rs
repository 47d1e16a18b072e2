//! Garside normal forms for the Artin groups of simply-laced diagrams.
//!
//! The Artin group `A_Gamma` of a diagram has one generator `a_i` per
//! vertex, with `a_i a_j a_i = a_j a_i a_j` on edges and commutation
//! otherwise. Its Garside element `Delta` is the positive lift of the
//! longest Weyl element `w0` along any reduced expression. Every element
//! has a unique normal form
//!
//! ```text
//!     Delta^p x_1 x_2 ... x_k
//! ```
//!
//! where each factor `x_t` is a simple element (the lift of a Weyl element,
//! represented here by its [`WeylElement`] matrix), none is the identity or
//! `Delta`, and each adjacent pair is left-weighted: every left descent of
//! the right factor is a right descent of the left factor. Words are
//! normalized letter by letter:
//!
//! - a positive letter appends the simple `s_i`;
//! - a negative letter uses the complement rule
//!   `a_i^{-1} = Delta^{-1} * (lift of w0 s_i)`, so the accumulated prefix
//!   is twisted by the automorphism `tau(x) = w0 x w0` while the power of
//!   `Delta` drops by one;
//! - left-weighting is restored by local sliding (move one admissible
//!   generator across the boundary of a violating pair), which terminates
//!   because each slide moves weight leftward: the factor-length vector
//!   read from the right strictly decreases lexicographically.
//!
//! Equality of words, centrality, the degree homomorphism, and equality
//! modulo the cyclic subgroup generated by `Delta` all reduce to normal
//! forms. All state lives in the precomputed [`Garside`] engine; every
//! operation is a pure function of its inputs.

use std::fmt;

use crate::diagram::DynkinDiagram;
use crate::error::Error;
use crate::weyl::{RootSystem, Side, WeylElement};
use crate::Result;

/// A word in the Artin generators: `+i` is `a_i`, `-i` is `a_i^{-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArtinWord {
    diagram: DynkinDiagram,
    letters: Vec<i64>,
}

impl ArtinWord {
    /// Validates that every letter names a vertex.
    pub fn new(diagram: &DynkinDiagram, letters: impl IntoIterator<Item = i64>) -> Result<Self> {
        let letters: Vec<i64> = letters.into_iter().collect();
        for &l in &letters {
            diagram.check_letter(l)?;
        }
        Ok(Self {
            diagram: diagram.clone(),
            letters,
        })
    }

    /// The identity word.
    pub fn empty(diagram: &DynkinDiagram) -> Self {
        Self {
            diagram: diagram.clone(),
            letters: Vec::new(),
        }
    }

    /// Parses whitespace-separated signed labels, e.g. `"1 2 -3"`.
    pub fn parse(diagram: &DynkinDiagram, text: &str) -> Result<Self> {
        let mut letters = Vec::new();
        let mut pos = 0;
        for tok in text.split_whitespace() {
            // Byte offset of this token for error reporting.
            pos = text[pos..].find(tok).map(|o| pos + o).unwrap_or(pos);
            let letter: i64 = tok.parse().map_err(|_| Error::Parse {
                pos,
                message: format!("invalid letter `{tok}`"),
            })?;
            diagram.check_letter(letter)?;
            letters.push(letter);
            pos += tok.len();
        }
        Ok(Self {
            diagram: diagram.clone(),
            letters,
        })
    }

    pub fn diagram(&self) -> &DynkinDiagram {
        &self.diagram
    }

    pub fn letters(&self) -> &[i64] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The degree homomorphism: the sum of letter signs. Well defined on
    /// the group because both defining relations are length-balanced.
    pub fn degree(&self) -> i64 {
        self.letters.iter().map(|l| l.signum()).sum()
    }

    /// Concatenation; the diagrams must match.
    pub fn concat(&self, other: &Self) -> Result<Self> {
        if self.diagram != other.diagram {
            return Err(Error::DiagramMismatch(format!(
                "cannot concatenate words over {} and {}",
                self.diagram.name(),
                other.diagram.name()
            )));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Self {
            diagram: self.diagram.clone(),
            letters,
        })
    }

    /// The group inverse: reverse the letters and flip the signs.
    pub fn inverse(&self) -> Self {
        Self {
            diagram: self.diagram.clone(),
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }
}

impl fmt::Display for ArtinWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for l in &self.letters {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
            first = false;
        }
        Ok(())
    }
}

/// The canonical form `Delta^p x_1 ... x_k`. Factors are never the
/// identity or `w0`, and adjacent pairs are left-weighted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GarsideNormalForm {
    delta_power: i64,
    factors: Vec<WeylElement>,
}

impl GarsideNormalForm {
    pub fn trivial() -> Self {
        Self {
            delta_power: 0,
            factors: Vec::new(),
        }
    }

    pub fn delta_power(&self) -> i64 {
        self.delta_power
    }

    pub fn factors(&self) -> &[WeylElement] {
        &self.factors
    }

    /// The number of non-`Delta` factors (canonical length).
    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    /// True for the identity element.
    pub fn is_trivial(&self) -> bool {
        self.delta_power == 0 && self.factors.is_empty()
    }

    /// `Some(k)` if this is `Delta^k` (including `k = 0`).
    pub fn as_delta_power(&self) -> Option<i64> {
        self.factors.is_empty().then_some(self.delta_power)
    }

    /// Canonical byte encoding: the Delta power followed by the factor
    /// matrices. Two normal forms encode equally iff they are equal.
    pub fn encode(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(8 + self.factors.len() * 64);
        out.extend_from_slice(&self.delta_power.to_le_bytes());
        for f in &self.factors {
            f.encode_into(&mut out);
        }
        out
    }
}

/// Which power of `Delta` generates the center of the Artin group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CentralPower {
    /// `Delta` itself is central (`tau` trivial): `A1`, `D_even`, `E7`, `E8`.
    Delta,
    /// Only `Delta^2` is central.
    DeltaSquared,
}

/// Result of [`Garside::inn_equal`]: equality modulo the cyclic subgroup
/// generated by `Delta`, with the exact power as a witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InnEquality {
    /// `Some(k)` iff `w1 * w2^{-1} = Delta^k`.
    pub witness: Option<i64>,
    /// Which power of `Delta` generates the center over this diagram.
    pub modulus: CentralPower,
    /// Equality in the quotient by the center: requires an even witness
    /// when only `Delta^2` is central.
    pub equal_mod_center: bool,
}

impl InnEquality {
    /// True iff `w1 * w2^{-1}` is some power of `Delta`.
    pub fn equal(&self) -> bool {
        self.witness.is_some()
    }
}

/// Precomputed Garside structure for one diagram: the root system, `w0`,
/// the diagram automorphism `tau`, and a reduced word for `Delta`.
#[derive(Debug, Clone)]
pub struct Garside {
    rs: RootSystem,
    w0: WeylElement,
    /// `tau[i-1]` is the label `j` with `Delta^{-1} a_i Delta = a_j`.
    tau: Vec<usize>,
    delta_word: Vec<usize>,
}

impl Garside {
    pub fn new(diagram: &DynkinDiagram) -> Self {
        let rs = RootSystem::new(diagram);
        let w0 = rs.longest_element();
        let n = diagram.rank();
        // tau(i) = j where alpha_j = -w0(alpha_i); w0 permutes the negated
        // simple roots, so the lookup always succeeds.
        let w0m = w0.matrix();
        let tau: Vec<usize> = (0..n)
            .map(|i| {
                let j = (0..n)
                    .find(|&j| (0..n).all(|r| w0m[r][i] == if r == j { -1 } else { 0 }))
                    .expect("w0 maps simple roots to negated simple roots");
                j + 1
            })
            .collect();
        let delta_word = rs.reduced_word(&w0);
        Self {
            rs,
            w0,
            tau,
            delta_word,
        }
    }

    pub fn diagram(&self) -> &DynkinDiagram {
        self.rs.diagram()
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    /// The length of `Delta`, i.e. the number of positive roots.
    pub fn delta_length(&self) -> usize {
        self.delta_word.len()
    }

    /// A positive word for `Delta` along the lexicographically least
    /// reduced expression of `w0`.
    pub fn garside_element(&self) -> ArtinWord {
        let letters = self.delta_word.iter().map(|&i| i as i64);
        ArtinWord::new(self.diagram(), letters).expect("delta word letters are vertices")
    }

    /// The vertex `j` with `Delta^{-1} a_i Delta = a_j`: the diagram
    /// automorphism induced by `-w0`. The identity map exactly when
    /// `Delta` is central.
    pub fn conjugation_by_delta(&self, i: usize) -> Result<usize> {
        self.diagram().check_letter(i as i64)?;
        Ok(self.tau[i - 1])
    }

    /// True iff `tau` is trivial, i.e. `w0 = -id`.
    pub fn delta_is_central(&self) -> bool {
        self.tau.iter().enumerate().all(|(k, &j)| j == k + 1)
    }

    fn check_word(&self, w: &ArtinWord) -> Result<()> {
        if w.diagram() != self.diagram() {
            return Err(Error::DiagramMismatch(format!(
                "word over {} used with a {} engine",
                w.diagram().name(),
                self.diagram().name()
            )));
        }
        Ok(())
    }

    /// `tau(x) = w0 x w0` on Weyl representatives; conjugation by `Delta`
    /// on the corresponding simple elements.
    fn twist(&self, x: &WeylElement) -> WeylElement {
        self.w0.compose(x).compose(&self.w0)
    }

    /// Restores left-weighting after the factor at `suspect` changed.
    ///
    /// A slide moves one generator across a violating boundary; it can
    /// invalidate the pairs on either side, so a worklist tracks suspects
    /// until no pair admits a slide.
    fn reweight(&self, factors: &mut [WeylElement], suspect: usize) {
        let mut work: Vec<usize> = vec![suspect];
        while let Some(p) = work.pop() {
            if p + 1 >= factors.len() {
                continue;
            }
            let mut changed = false;
            loop {
                let movable =
                    factors[p + 1].descent_mask(Side::Left) & !factors[p].descent_mask(Side::Right);
                if movable == 0 {
                    break;
                }
                let i = movable.trailing_zeros() as usize + 1;
                let s = self.rs.simple(i);
                factors[p] = factors[p].compose(s);
                factors[p + 1] = s.compose(&factors[p + 1]);
                changed = true;
            }
            if changed {
                if p > 0 && !work.contains(&(p - 1)) {
                    work.push(p - 1);
                }
                if !work.contains(&(p + 1)) {
                    work.push(p + 1);
                }
            }
        }
    }

    /// Strips `Delta` factors from the front and identities from the back.
    /// After reweighting these are the only places they can sit: a factor
    /// with full right-descent set is `w0` and forces its predecessor to
    /// be `w0` too, and an identity factor absorbs nothing from the right.
    fn normalize(&self, nf: &mut GarsideNormalForm) {
        let mut lead = 0;
        while lead < nf.factors.len() && nf.factors[lead] == self.w0 {
            lead += 1;
        }
        if lead > 0 {
            nf.delta_power += lead as i64;
            nf.factors.drain(..lead);
        }
        while nf.factors.last().is_some_and(|f| f.is_identity()) {
            nf.factors.pop();
        }
    }

    /// Multiplies a normal form by one letter on the right.
    pub fn push_letter(&self, nf: &mut GarsideNormalForm, letter: i64) -> Result<()> {
        let i = self.diagram().check_letter(letter)?;
        if letter > 0 {
            nf.factors.push(self.rs.simple(i).clone());
        } else {
            // a_i^{-1} = Delta^{-1} * (lift of w0 s_i): the prefix crosses
            // Delta^{-1}, so every factor is twisted by tau.
            nf.delta_power -= 1;
            for f in nf.factors.iter_mut() {
                *f = self.twist(f);
            }
            nf.factors.push(self.w0.compose(self.rs.simple(i)));
        }
        let suspect = nf.factors.len().saturating_sub(2);
        self.reweight(&mut nf.factors, suspect);
        self.normalize(nf);
        Ok(())
    }

    /// The canonical form of a word, built letter by letter.
    pub fn normal_form(&self, w: &ArtinWord) -> Result<GarsideNormalForm> {
        self.check_word(w)?;
        let mut nf = GarsideNormalForm::trivial();
        for &letter in w.letters() {
            self.push_letter(&mut nf, letter)?;
        }
        Ok(nf)
    }

    /// Reduced words of the factors, for display.
    pub fn factor_words(&self, nf: &GarsideNormalForm) -> Vec<Vec<usize>> {
        nf.factors.iter().map(|f| self.rs.reduced_word(f)).collect()
    }

    /// Reconstructs a word equal to the normal form in the group:
    /// `|p|` copies of the Delta word (inverted for negative `p`)
    /// followed by a reduced word of each factor.
    pub fn word_of(&self, nf: &GarsideNormalForm) -> ArtinWord {
        let mut letters: Vec<i64> = Vec::new();
        if nf.delta_power >= 0 {
            for _ in 0..nf.delta_power {
                letters.extend(self.delta_word.iter().map(|&i| i as i64));
            }
        } else {
            for _ in 0..(-nf.delta_power) {
                letters.extend(self.delta_word.iter().rev().map(|&i| -(i as i64)));
            }
        }
        for f in &nf.factors {
            letters.extend(self.rs.reduced_word(f).into_iter().map(|i| i as i64));
        }
        ArtinWord::new(self.diagram(), letters).expect("reconstructed letters are vertices")
    }

    /// Word problem: equal iff the normal forms coincide.
    pub fn are_equal(&self, w1: &ArtinWord, w2: &ArtinWord) -> Result<bool> {
        self.check_word(w1)?;
        self.check_word(w2)?;
        Ok(self.normal_form(w1)? == self.normal_form(w2)?)
    }

    /// True iff `w` commutes with every generator.
    pub fn is_central(&self, w: &ArtinWord) -> Result<bool> {
        self.check_word(w)?;
        for i in 1..=self.diagram().rank() {
            let g = ArtinWord::new(self.diagram(), [i as i64])?;
            let left = w.concat(&g)?;
            let right = g.concat(w)?;
            if !self.are_equal(&left, &right)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality modulo the cyclic subgroup generated by `Delta`:
    /// the witness is the `k` with `w1 * w2^{-1} = Delta^k`, if any.
    /// `equal_mod_center` additionally requires `k` even when only
    /// `Delta^2` is central.
    pub fn inn_equal(&self, w1: &ArtinWord, w2: &ArtinWord) -> Result<InnEquality> {
        let nf = self.normal_form(&w1.concat(&w2.inverse())?)?;
        let witness = nf.as_delta_power();
        let modulus = if self.delta_is_central() {
            CentralPower::Delta
        } else {
            CentralPower::DeltaSquared
        };
        let equal_mod_center = match (witness, modulus) {
            (Some(_), CentralPower::Delta) => true,
            (Some(k), CentralPower::DeltaSquared) => k % 2 == 0,
            (None, _) => false,
        };
        Ok(InnEquality {
            witness,
            modulus,
            equal_mod_center,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::Family;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn engine(name: &str) -> Garside {
        Garside::new(&DynkinDiagram::parse(name).unwrap())
    }

    fn word(g: &Garside, letters: &[i64]) -> ArtinWord {
        ArtinWord::new(g.diagram(), letters.iter().copied()).unwrap()
    }

    #[test]
    fn free_cancellation() {
        let g = engine("A2");
        let nf = g.normal_form(&word(&g, &[1, -1])).unwrap();
        assert!(nf.is_trivial());
        let nf = g.normal_form(&word(&g, &[-2, 2])).unwrap();
        assert!(nf.is_trivial());
    }

    #[test]
    fn delta_of_a2_is_braid_word() {
        let g = engine("A2");
        let delta = g.garside_element();
        assert_eq!(delta.letters(), &[1, 2, 1]);
        let nf = g.normal_form(&delta).unwrap();
        assert_eq!(nf.as_delta_power(), Some(1));
        assert!(g.are_equal(&delta, &word(&g, &[2, 1, 2])).unwrap());
    }

    #[test]
    fn mixed_word_normal_form_over_a2() {
        // a1 a2 a1 a2^{-1} = Delta a2^{-1} = lift of w0 s2, reduced word [2, 1].
        let g = engine("A2");
        let nf = g.normal_form(&word(&g, &[1, 2, 1, -2])).unwrap();
        assert_eq!(nf.delta_power(), 0);
        assert_eq!(g.factor_words(&nf), vec![vec![2, 1]]);
        assert!(g
            .are_equal(&word(&g, &[1, 2, 1, -2]), &word(&g, &[2, 1]))
            .unwrap());
        assert!(g
            .are_equal(&word(&g, &[1, 2, 1, -2]), &word(&g, &[2, 1, -2, 2]))
            .unwrap());
    }

    #[test]
    fn braid_and_commutation_relations() {
        let g = engine("A2");
        assert!(g
            .are_equal(&word(&g, &[1, 2, 1]), &word(&g, &[2, 1, 2]))
            .unwrap());
        assert!(!g.are_equal(&word(&g, &[1]), &word(&g, &[2])).unwrap());

        let e8 = engine("E8");
        // Vertices 1 and 3 are non-adjacent in E8 (chain 1-2-3).
        assert!(!e8.diagram().adjacent(1, 3));
        assert!(e8
            .are_equal(&word(&e8, &[1, 3]), &word(&e8, &[3, 1]))
            .unwrap());
        assert!(e8
            .are_equal(&word(&e8, &[1, 2, 1]), &word(&e8, &[2, 1, 2]))
            .unwrap());
    }

    #[test]
    fn garside_element_across_diagrams() {
        let a1 = engine("A1");
        assert_eq!(a1.garside_element().letters(), &[1]);
        // Over A1, a1 = Delta, so a1^{-1} has normal form (-1, []).
        let nf = a1.normal_form(&word(&a1, &[-1])).unwrap();
        assert_eq!(nf.as_delta_power(), Some(-1));

        for name in ["A2", "A3", "D4", "D5", "E6"] {
            let g = engine(name);
            let delta = g.garside_element();
            assert_eq!(delta.len(), g.delta_length(), "{name}");
            let nf = g.normal_form(&delta).unwrap();
            assert_eq!(nf.as_delta_power(), Some(1), "{name}");
        }
    }

    #[test]
    fn degree_examples_and_normal_form_invariance() {
        let g = engine("A3");
        assert_eq!(ArtinWord::empty(g.diagram()).degree(), 0);
        assert_eq!(word(&g, &[1, -2, -3]).degree(), -1);

        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let letters: Vec<i64> = (0..rng.gen_range(0..12))
                .map(|_| {
                    let v = rng.gen_range(1..=3i64);
                    if rng.gen_bool(0.5) {
                        v
                    } else {
                        -v
                    }
                })
                .collect();
            let w = word(&g, &letters);
            let nf = g.normal_form(&w).unwrap();
            let factor_len: usize = g.factor_words(&nf).iter().map(Vec::len).sum();
            let nf_degree = nf.delta_power() * g.delta_length() as i64 + factor_len as i64;
            assert_eq!(w.degree(), nf_degree, "degree through the normal form");
            // Idempotence: the normal form of the reconstructed word is itself.
            assert_eq!(g.normal_form(&g.word_of(&nf)).unwrap(), nf);
        }
    }

    #[test]
    fn centrality_of_delta_depends_on_tau() {
        // tau is trivial for D4 (w0 = -id), nontrivial for A2 and E6.
        for (name, delta_central) in [("A2", false), ("A3", false), ("D4", true), ("E6", false)] {
            let g = engine(name);
            assert_eq!(g.delta_is_central(), delta_central, "{name}");
            let delta = g.garside_element();
            assert_eq!(g.is_central(&delta).unwrap(), delta_central, "{name}");
            let delta_sq = delta.concat(&delta).unwrap();
            assert!(
                g.is_central(&delta_sq).unwrap(),
                "{name}: Delta^2 is always central"
            );
            assert!(
                !g.is_central(&word(&g, &[1])).unwrap(),
                "{name}: a1 is not central"
            );
        }
        assert!(engine("A1").is_central(&word(&engine("A1"), &[1])).unwrap());
    }

    #[test]
    fn conjugation_by_delta_matches_the_diagram_flip() {
        let e6 = engine("E6");
        // Standard numbering: chain 1-2-3-4-5 with 6 attached to 3.
        let expected = [5, 4, 3, 2, 1, 6];
        for i in 1..=6 {
            assert_eq!(e6.conjugation_by_delta(i).unwrap(), expected[i - 1]);
        }
        // Cross-check by normal forms: Delta^{-1} a_i Delta = a_{tau(i)}.
        let delta = e6.garside_element();
        for i in 1..=6 {
            let lhs = delta
                .inverse()
                .concat(&word(&e6, &[i as i64]))
                .unwrap()
                .concat(&delta)
                .unwrap();
            let rhs = word(&e6, &[expected[i - 1] as i64]);
            assert!(e6.are_equal(&lhs, &rhs).unwrap(), "vertex {i}");
        }

        let a2 = engine("A2");
        assert_eq!(a2.conjugation_by_delta(1).unwrap(), 2);
        assert_eq!(a2.conjugation_by_delta(2).unwrap(), 1);
        assert_eq!(engine("A1").conjugation_by_delta(1).unwrap(), 1);
        let d5 = engine("D5");
        // D5 fork leaves 4 and 5 swap; the chain is fixed.
        assert_eq!(d5.conjugation_by_delta(4).unwrap(), 5);
        assert_eq!(d5.conjugation_by_delta(5).unwrap(), 4);
        assert_eq!(d5.conjugation_by_delta(1).unwrap(), 1);
    }

    #[test]
    fn inn_equal_witnesses() {
        let d4 = engine("D4");
        let w = word(&d4, &[1, -3, 2, 2]);
        let same = d4.inn_equal(&w, &w).unwrap();
        assert_eq!(same.witness, Some(0));
        assert!(same.equal() && same.equal_mod_center);
        assert_eq!(same.modulus, CentralPower::Delta);

        let delta = d4.garside_element();
        let shifted = d4.inn_equal(&delta.concat(&w).unwrap(), &w).unwrap();
        assert_eq!(shifted.witness, Some(1));
        assert!(shifted.equal_mod_center);

        let distinct = d4.inn_equal(&word(&d4, &[1]), &word(&d4, &[2])).unwrap();
        assert_eq!(distinct.witness, None);
        assert!(!distinct.equal() && !distinct.equal_mod_center);

        // Over A2 only Delta^2 is central: an odd witness is flagged.
        let a2 = engine("A2");
        let delta = a2.garside_element();
        let v = word(&a2, &[1, 2]);
        let odd = a2.inn_equal(&delta.concat(&v).unwrap(), &v).unwrap();
        assert_eq!(odd.witness, Some(1));
        assert_eq!(odd.modulus, CentralPower::DeltaSquared);
        assert!(!odd.equal_mod_center);
        let delta2 = delta.concat(&delta).unwrap();
        let even = a2.inn_equal(&delta2.concat(&v).unwrap(), &v).unwrap();
        assert_eq!(even.witness, Some(2));
        assert!(even.equal_mod_center);
    }

    #[test]
    fn inn_equal_witness_is_additive() {
        let a3 = engine("A3");
        let delta = a3.garside_element();
        let base = word(&a3, &[2, -1, 3]);
        let w1 = delta.concat(&delta).unwrap().concat(&base).unwrap();
        let w2 = delta.concat(&base).unwrap();
        let w3 = base.clone();
        let k12 = a3.inn_equal(&w1, &w2).unwrap().witness.unwrap();
        let k23 = a3.inn_equal(&w2, &w3).unwrap().witness.unwrap();
        let k13 = a3.inn_equal(&w1, &w3).unwrap().witness.unwrap();
        assert_eq!(k12 + k23, k13);
        assert_eq!((k12, k23), (1, 1));
    }

    #[test]
    fn central_conjugates_of_delta_have_degree_one() {
        // For each generator g and n >= 2, g Delta g^{-1} differs from
        // Delta^n: the degree homomorphism pins the exponent to one.
        for name in ["A2", "D4", "E6"] {
            let g = engine(name);
            let delta = g.garside_element();
            for i in 1..=g.diagram().rank() {
                let gen = word(&g, &[i as i64]);
                let conj = gen.concat(&delta).unwrap().concat(&gen.inverse()).unwrap();
                let conj_nf = g.normal_form(&conj).unwrap();
                let mut power = GarsideNormalForm::trivial();
                for n in 1..=5 {
                    for &l in delta.letters() {
                        g.push_letter(&mut power, l).unwrap();
                    }
                    assert_eq!(power.as_delta_power(), Some(n));
                    if n >= 2 {
                        assert_ne!(conj_nf, power, "{name}, generator {i}, power {n}");
                    }
                }
                assert_eq!(conj.degree(), delta.degree());
            }
        }
    }

    #[test]
    fn diagram_mismatch_is_an_error() {
        let a2 = engine("A2");
        let a3 = engine("A3");
        let w = word(&a3, &[1, 2, 3]);
        assert!(matches!(a2.normal_form(&w), Err(Error::DiagramMismatch(_))));
        let v = word(&a2, &[1]);
        assert!(a2.are_equal(&v, &word(&a3, &[1])).is_err());
    }

    #[test]
    fn word_parsing() {
        let d = DynkinDiagram::new(Family::A, 3).unwrap();
        let w = ArtinWord::parse(&d, "1 2 -3").unwrap();
        assert_eq!(w.letters(), &[1, 2, -3]);
        assert_eq!(w.to_string(), "1 2 -3");
        assert_eq!(ArtinWord::parse(&d, "").unwrap().letters(), &[] as &[i64]);
        assert!(ArtinWord::parse(&d, "1 x").is_err());
        assert!(ArtinWord::parse(&d, "0").is_err());
        assert!(ArtinWord::parse(&d, "4").is_err());
    }

    /// Laurent polynomials over Z, for the reduced Burau representation.
    #[derive(Clone, PartialEq, Eq, Debug, Default)]
    struct Laurent(std::collections::BTreeMap<i32, i64>);

    impl Laurent {
        fn term(c: i64, e: i32) -> Self {
            let mut m = std::collections::BTreeMap::new();
            if c != 0 {
                m.insert(e, c);
            }
            Laurent(m)
        }
        fn add(&self, other: &Self) -> Self {
            let mut m = self.0.clone();
            for (&e, &c) in &other.0 {
                let v = m.entry(e).or_insert(0);
                *v += c;
                if *v == 0 {
                    m.remove(&e);
                }
            }
            Laurent(m)
        }
        fn mul(&self, other: &Self) -> Self {
            let mut m = std::collections::BTreeMap::new();
            for (&e1, &c1) in &self.0 {
                for (&e2, &c2) in &other.0 {
                    let v = m.entry(e1 + e2).or_insert(0i64);
                    *v += c1 * c2;
                    if *v == 0 {
                        m.remove(&(e1 + e2));
                    }
                }
            }
            Laurent(m)
        }
    }

    type BurauMat = [[Laurent; 2]; 2];

    fn burau_mul(a: &BurauMat, b: &BurauMat) -> BurauMat {
        let mut out: BurauMat = Default::default();
        for i in 0..2 {
            for j in 0..2 {
                let mut acc = Laurent::default();
                for k in 0..2 {
                    acc = acc.add(&a[i][k].mul(&b[k][j]));
                }
                out[i][j] = acc;
            }
        }
        out
    }

    /// Reduced Burau matrices for the three-strand braid group, which is a
    /// faithful representation; an independent oracle for the A2 word
    /// problem.
    fn burau(letter: i64) -> BurauMat {
        let t = |c, e| Laurent::term(c, e);
        match letter {
            1 => [[t(-1, 1), t(1, 0)], [t(0, 0), t(1, 0)]],
            -1 => [[t(-1, -1), t(1, -1)], [t(0, 0), t(1, 0)]],
            2 => [[t(1, 0), t(0, 0)], [t(1, 1), t(-1, 1)]],
            -2 => [[t(1, 0), t(0, 0)], [t(1, 0), t(-1, -1)]],
            _ => unreachable!(),
        }
    }

    fn burau_of_word(w: &ArtinWord) -> BurauMat {
        let mut acc: BurauMat = [
            [Laurent::term(1, 0), Laurent::default()],
            [Laurent::default(), Laurent::term(1, 0)],
        ];
        for &l in w.letters() {
            acc = burau_mul(&acc, &burau(l));
        }
        acc
    }

    #[test]
    fn burau_generator_inverses_cancel() {
        for l in [1i64, 2] {
            let prod = burau_mul(&burau(l), &burau(-l));
            assert_eq!(prod, burau_of_word(&word(&engine("A2"), &[])));
        }
    }

    #[test]
    fn word_problem_agrees_with_burau_on_random_words() {
        let g = engine("A2");
        let mut rng = ChaCha8Rng::seed_from_u64(1729);
        let random_word = |rng: &mut ChaCha8Rng| -> ArtinWord {
            let len = rng.gen_range(0..=10);
            let letters: Vec<i64> = (0..len)
                .map(|_| {
                    let v = rng.gen_range(1..=2i64);
                    if rng.gen_bool(0.5) {
                        v
                    } else {
                        -v
                    }
                })
                .collect();
            word(&g, &letters)
        };
        for _ in 0..200 {
            let w1 = random_word(&mut rng);
            let w2 = random_word(&mut rng);
            let by_nf = g.are_equal(&w1, &w2).unwrap();
            let by_burau = burau_of_word(&w1) == burau_of_word(&w2);
            assert_eq!(by_nf, by_burau, "w1 = [{w1}], w2 = [{w2}]");
            // The reconstructed normal-form word is the same group element.
            let back = g.word_of(&g.normal_form(&w1).unwrap());
            assert_eq!(burau_of_word(&back), burau_of_word(&w1), "w1 = [{w1}]");
        }
    }

    #[test]
    fn normal_form_survives_relator_insertion() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for name in ["A2", "A3", "D4"] {
            let g = engine(name);
            let n = g.diagram().rank() as i64;
            for _ in 0..100 {
                let len = rng.gen_range(0..=12);
                let letters: Vec<i64> = (0..len)
                    .map(|_| {
                        let v = rng.gen_range(1..=n);
                        if rng.gen_bool(0.5) {
                            v
                        } else {
                            -v
                        }
                    })
                    .collect();
                let w = word(&g, &letters);
                // Pick a relator: braid, commutation, or free cancellation.
                let i = rng.gen_range(1..=n);
                let mut j = rng.gen_range(1..=n);
                while j == i && n > 1 {
                    j = rng.gen_range(1..=n);
                }
                let relator: Vec<i64> = if n == 1 || rng.gen_bool(0.2) {
                    vec![i, -i]
                } else if g.diagram().adjacent(i as usize, j as usize) {
                    vec![i, j, i, -j, -i, -j]
                } else {
                    vec![i, j, -i, -j]
                };
                let pos = rng.gen_range(0..=letters.len());
                let mut inserted = letters.clone();
                inserted.splice(pos..pos, relator.iter().copied());
                let wr = word(&g, &inserted);
                assert_eq!(
                    g.normal_form(&w).unwrap(),
                    g.normal_form(&wr).unwrap(),
                    "{name}: [{w}] vs [{wr}]"
                );
            }
        }
    }
}
