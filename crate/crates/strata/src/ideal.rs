//! Ideal membership in `Q[x, y]` by Buchberger's algorithm.
//!
//! The monomial order is graded lexicographic with `x > y`: compare total
//! degree first, then the exponent of `x`. The sizes here are tiny (three
//! generators in two variables), so plain Buchberger with the coprime-pair
//! criterion and full interreduction is more than enough; the reduced
//! basis it returns is the canonical one for the ideal.
//!
//! The only question downstream callers ask is whether `1` lies in the
//! ideal — emptiness of the complex vanishing set — but the basis and the
//! normal-form reduction are exposed for tests and the CLI.

use num_rational::BigRational;
use num_traits::One;

use crate::poly::{BivariatePoly, Monomial};

/// Graded-lex key with `x > y`: total degree, then `x`-exponent.
fn glex_key(m: Monomial) -> (u32, u32) {
    (m.0 + m.1, m.0)
}

/// Leading term under graded-lex; `None` for the zero polynomial.
fn leading_term(p: &BivariatePoly) -> Option<(Monomial, BigRational)> {
    p.terms()
        .max_by_key(|&(m, _)| glex_key(m))
        .map(|(m, c)| (m, c.clone()))
}

fn divides(d: Monomial, m: Monomial) -> bool {
    d.0 <= m.0 && d.1 <= m.1
}

fn lcm(a: Monomial, b: Monomial) -> Monomial {
    (a.0.max(b.0), a.1.max(b.1))
}

/// Fully reduces `p` modulo `basis`: no term of the result is divisible by
/// any basis leading monomial.
pub fn reduce(p: &BivariatePoly, basis: &[BivariatePoly]) -> BivariatePoly {
    let leads: Vec<(Monomial, BigRational, &BivariatePoly)> = basis
        .iter()
        .filter_map(|g| leading_term(g).map(|(m, c)| (m, c, g)))
        .collect();
    let mut rest = p.clone();
    let mut out = BivariatePoly::zero();
    while let Some((m, c)) = leading_term(&rest) {
        match leads.iter().find(|(lm, _, _)| divides(*lm, m)) {
            Some((lm, lc, g)) => {
                let factor = BivariatePoly::term(c / lc, (m.0 - lm.0, m.1 - lm.1));
                rest = rest.sub(&factor.mul(g));
            }
            None => {
                let t = BivariatePoly::term(c, m);
                out = out.add(&t);
                rest = rest.sub(&t);
            }
        }
    }
    out
}

fn s_polynomial(f: &BivariatePoly, g: &BivariatePoly) -> BivariatePoly {
    let (fm, fc) = leading_term(f).expect("nonzero");
    let (gm, gc) = leading_term(g).expect("nonzero");
    let l = lcm(fm, gm);
    let f_factor = BivariatePoly::term(BigRational::one() / fc, (l.0 - fm.0, l.1 - fm.1));
    let g_factor = BivariatePoly::term(BigRational::one() / gc, (l.0 - gm.0, l.1 - gm.1));
    f_factor.mul(f).sub(&g_factor.mul(g))
}

/// The reduced Groebner basis: monic generators, each fully reduced
/// against the others, sorted by leading monomial. Canonical for the
/// ideal, hence independent of generator order.
pub fn groebner_basis(gens: &[BivariatePoly]) -> Vec<BivariatePoly> {
    let mut basis: Vec<BivariatePoly> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    let mut pairs: Vec<(usize, usize)> = (0..basis.len())
        .flat_map(|i| (0..i).map(move |j| (j, i)))
        .collect();
    while let Some((i, j)) = pairs.pop() {
        let (fm, _) = leading_term(&basis[i]).expect("nonzero");
        let (gm, _) = leading_term(&basis[j]).expect("nonzero");
        // Coprime leading monomials: the S-polynomial reduces to zero.
        if lcm(fm, gm) == (fm.0 + gm.0, fm.1 + gm.1) {
            continue;
        }
        let s = reduce(&s_polynomial(&basis[i], &basis[j]), &basis);
        if !s.is_zero() {
            let k = basis.len();
            pairs.extend((0..k).map(|i| (i, k)));
            basis.push(s);
        }
    }
    // Interreduce: drop generators whose lead is divisible by another
    // lead, then fully reduce tails and normalize to monic.
    let leads: Vec<Monomial> = basis
        .iter()
        .map(|g| leading_term(g).expect("nonzero").0)
        .collect();
    let kept: Vec<usize> = (0..basis.len())
        .filter(|&i| {
            !leads
                .iter()
                .enumerate()
                .any(|(j, &lj)| j != i && divides(lj, leads[i]) && (lj != leads[i] || j < i))
        })
        .collect();
    let mut reduced: Vec<BivariatePoly> = Vec::with_capacity(kept.len());
    for &i in &kept {
        let others: Vec<BivariatePoly> = kept
            .iter()
            .filter(|&&j| j != i)
            .map(|&j| basis[j].clone())
            .collect();
        let r = reduce(&basis[i], &others);
        if r.is_zero() {
            continue;
        }
        let (_, lc) = leading_term(&r).expect("nonzero");
        reduced.push(r.scale(&(BigRational::one() / lc)));
    }
    reduced.sort_by_key(|g| glex_key(leading_term(g).expect("nonzero").0));
    reduced
}

/// True iff `1` lies in the ideal generated by `gens`, i.e. the complex
/// vanishing set is empty.
pub fn contains_one(gens: &[BivariatePoly]) -> bool {
    groebner_basis(gens).iter().any(|g| g.degree() == Some(0))
}
