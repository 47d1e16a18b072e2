//! Milnor numbers, monomial bases, and versal deformations of plane-curve
//! germs at the origin.
//!
//! For a germ `f` with an isolated critical point, the Milnor number is
//! the dimension of `Q[[x, y]] / (f_x, f_y)`. It is computed by exact
//! truncation: inside the space of polynomials of total degree `< N`,
//! row-reduce the span of `{monomial * f_x, monomial * f_y}` and record
//! the codimension. The codimension is nondecreasing in `N` and, once two
//! consecutive values agree, it has reached the Milnor number: if no new
//! standard monomial appears in one degree, the associated graded algebra
//! vanishes there, and by Nakayama in every higher degree too.
//!
//! Columns are scanned lowest degree first and, within a degree, largest
//! `x`-exponent first; row reduction therefore eliminates the
//! lexicographically greatest monomials and the surviving standard
//! monomials are the least ones. Bases and deformation parameters are
//! presented in graded-lex ascending order (`1, y, x, y^2, x*y, ...`).
//!
//! A versal family attaches one parameter to each basis monomial:
//! `F(x, y, s) = f + s_1 g_1 + ... + s_m g_m`. Smoothness of the fiber at
//! a rational parameter point is decided exactly: the affine curve
//! `F = 0` is smooth iff `1` lies in the ideal `(F, F_x, F_y)`.

use std::collections::BTreeMap;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::diagram::{DynkinDiagram, Family};
use crate::error::Error;
use crate::ideal;
use crate::poly::{BivariatePoly, Monomial};
use crate::Result;

/// Truncation ceiling for the stabilization loop; germs with μ beyond
/// this are rejected as (likely) non-isolated.
pub const DEFAULT_TRUNCATION_BOUND: u32 = 64;

/// Milnor number together with a monomial basis of the local algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MilnorData {
    milnor_number: usize,
    basis: Vec<Monomial>,
}

impl MilnorData {
    pub fn milnor_number(&self) -> usize {
        self.milnor_number
    }

    /// Standard monomials in graded-lex ascending order; exactly
    /// `milnor_number` of them.
    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }
}

/// Which germ the `A_n` diagram maps to; the other families coincide.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum AnConvention {
    /// `x^2 + y^{n+2}`, the deformation table used throughout this crate;
    /// its Milnor number is `n + 1`.
    #[default]
    Shifted,
    /// `x^2 + y^{n+1}`, the classical normal form with Milnor number `n`.
    Classical,
}

/// One deformation parameter and the monomial it multiplies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parameter {
    pub name: String,
    pub monomial: Monomial,
}

/// The family `F(x, y, s) = base + sum s_i * g_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VersalFamily {
    base: BivariatePoly,
    parameters: Vec<Parameter>,
}

impl VersalFamily {
    pub fn base(&self) -> &BivariatePoly {
        &self.base
    }

    pub fn parameters(&self) -> &[Parameter] {
        &self.parameters
    }

    /// Specializes the parameters to a rational point.
    pub fn fiber(&self, s: &[BigRational]) -> Result<BivariatePoly> {
        if s.len() != self.parameters.len() {
            return Err(Error::ParameterLength {
                expected: self.parameters.len(),
                got: s.len(),
            });
        }
        let mut f = self.base.clone();
        for (value, param) in s.iter().zip(&self.parameters) {
            f = f.add(&BivariatePoly::term(value.clone(), param.monomial));
        }
        Ok(f)
    }
}

/// Monomials of total degree `< n`, scanned lowest degree first and
/// largest `x`-exponent first within a degree.
fn columns(n: u32) -> Vec<Monomial> {
    let mut cols: Vec<Monomial> = Vec::new();
    for d in 0..n {
        for a in (0..=d).rev() {
            cols.push((a, d - a));
        }
    }
    cols
}

/// Codimension of the truncated Jacobian span and the standard monomials,
/// inside degrees `< n`.
fn truncated_codimension(fx: &BivariatePoly, fy: &BivariatePoly, n: u32) -> (usize, Vec<Monomial>) {
    let cols = columns(n);
    let index: BTreeMap<Monomial, usize> = cols.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    // Echelon rows keyed by pivot column, normalized to a unit pivot.
    let mut pivots: BTreeMap<usize, BTreeMap<usize, BigRational>> = BTreeMap::new();

    for g in [fx, fy] {
        let Some(ord) = g.order() else { continue };
        if ord >= n {
            continue;
        }
        for &(ma, mb) in &cols {
            if ma + mb + ord >= n {
                continue;
            }
            // The row for monomial * g, truncated to degree < n.
            let mut row: BTreeMap<usize, BigRational> = BTreeMap::new();
            for ((ga, gb), c) in g.terms() {
                let m = (ma + ga, mb + gb);
                if m.0 + m.1 < n {
                    row.insert(index[&m], c.clone());
                }
            }
            // Reduce against the echelon, then install a new pivot.
            while let Some((&lead, coeff)) = row.first_key_value() {
                let coeff = coeff.clone();
                match pivots.get(&lead) {
                    Some(pivot_row) => {
                        for (&k, v) in pivot_row {
                            let delta = v * &coeff;
                            match row.entry(k) {
                                std::collections::btree_map::Entry::Vacant(e) => {
                                    e.insert(-delta);
                                }
                                std::collections::btree_map::Entry::Occupied(mut e) => {
                                    *e.get_mut() -= delta;
                                    if e.get().is_zero() {
                                        e.remove();
                                    }
                                }
                            }
                        }
                    }
                    None => {
                        let inv = BigRational::one() / coeff;
                        let normalized: BTreeMap<usize, BigRational> =
                            row.iter().map(|(&k, v)| (k, v * &inv)).collect();
                        pivots.insert(lead, normalized);
                        break;
                    }
                }
            }
        }
    }

    let mut standard: Vec<Monomial> = cols
        .iter()
        .enumerate()
        .filter(|(i, _)| !pivots.contains_key(i))
        .map(|(_, &m)| m)
        .collect();
    standard.sort_by_key(|&(a, b)| (a + b, a));
    (standard.len(), standard)
}

/// Milnor number by stabilized truncation, with the default bound.
pub fn milnor(f: &BivariatePoly) -> Result<MilnorData> {
    milnor_with_bound(f, DEFAULT_TRUNCATION_BOUND)
}

/// As [`milnor`], with an explicit truncation ceiling.
pub fn milnor_with_bound(f: &BivariatePoly, bound: u32) -> Result<MilnorData> {
    if !f.coefficient((0, 0)).is_zero() {
        return Err(Error::InvalidGerm(
            "the germ does not vanish at the origin".into(),
        ));
    }
    let fx = f.partial_x();
    let fy = f.partial_y();
    let mut previous: Option<usize> = None;
    for n in 1..=bound {
        let (codim, basis) = truncated_codimension(&fx, &fy, n);
        if previous == Some(codim) {
            return Ok(MilnorData {
                milnor_number: codim,
                basis,
            });
        }
        previous = Some(codim);
    }
    Err(Error::NotIsolated {
        bound,
        message: format!(
            "truncated codimension still growing (last value {})",
            previous.unwrap_or(0)
        ),
    })
}

/// The deformation-table germ of a diagram (the `Shifted` convention).
pub fn germ_for_diagram(d: &DynkinDiagram) -> BivariatePoly {
    germ_for_diagram_with(d, AnConvention::Shifted)
}

/// The germ attached to a diagram: `A_n -> x^2 + y^{n+2}` (or `y^{n+1}`
/// under [`AnConvention::Classical`]), `D_n -> x^2 y + y^{n-1}`,
/// `E6 -> x^3 + y^4`, `E7 -> x^3 + x y^3`, `E8 -> x^3 + y^5`.
pub fn germ_for_diagram_with(d: &DynkinDiagram, convention: AnConvention) -> BivariatePoly {
    let n = d.rank() as u32;
    let m = |mono: Monomial| BivariatePoly::monomial(mono);
    match d.family() {
        Family::A => {
            let shift = match convention {
                AnConvention::Shifted => 2,
                AnConvention::Classical => 1,
            };
            m((2, 0)).add(&m((0, n + shift)))
        }
        Family::D => m((2, 1)).add(&m((0, n - 1))),
        Family::E => match n {
            6 => m((3, 0)).add(&m((0, 4))),
            7 => m((3, 0)).add(&m((1, 3))),
            _ => m((3, 0)).add(&m((0, 5))),
        },
    }
}

/// Builds the versal family of `f`, one parameter per basis monomial in
/// graded-lex ascending order, named `s1, s2, ...`.
pub fn build_versal(f: &BivariatePoly) -> Result<VersalFamily> {
    build_versal_with_bound(f, DEFAULT_TRUNCATION_BOUND)
}

/// [`build_versal`] with an explicit truncation ceiling.
pub fn build_versal_with_bound(f: &BivariatePoly, bound: u32) -> Result<VersalFamily> {
    let data = milnor_with_bound(f, bound)?;
    let parameters = data
        .basis
        .iter()
        .enumerate()
        .map(|(i, &monomial)| Parameter {
            name: format!("s{}", i + 1),
            monomial,
        })
        .collect();
    Ok(VersalFamily {
        base: f.clone(),
        parameters,
    })
}

/// True iff the affine fiber `F(., ., s) = 0` is a smooth complex curve:
/// `1` lies in `(F, F_x, F_y)`.
pub fn fiber_is_smooth(family: &VersalFamily, s: &[BigRational]) -> Result<bool> {
    let f = family.fiber(s)?;
    Ok(ideal::contains_one(&[
        f.clone(),
        f.partial_x(),
        f.partial_y(),
    ]))
}

/// The plane model `x^b - y^a` of the monomial curve `(t^a, t^b)`.
///
/// Requires `a < b` coprime. For `(3, 5)` this is `x^5 - y^3`, which the
/// germ `x^3 + y^5` matches after exchanging the variables and flipping a
/// sign — the same curve in different coordinates.
pub fn monomial_curve(a: u64, b: u64) -> Result<BivariatePoly> {
    if a == 0 || b == 0 || a >= b {
        return Err(Error::InvalidInput(format!(
            "monomial curve needs 0 < a < b, got ({a}, {b})"
        )));
    }
    if a.gcd(&b) != 1 {
        return Err(Error::InvalidInput(format!("({a}, {b}) are not coprime")));
    }
    let xb = BivariatePoly::monomial((b as u32, 0));
    let ya = BivariatePoly::monomial((0, a as u32));
    Ok(xb.sub(&ya))
}

/// How the one-parameter scaling orbit behaves for a list of invariant
/// degrees.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrbitDescriptor {
    /// Whether the loop traced through the degree weights closes up:
    /// the endpoint picks up a factor `(-1)^d` per degree `d`, so it
    /// closes iff every degree is even.
    pub closes: bool,
    /// The orbit is a copy of `C*` modulo the roots of unity of this
    /// order: the gcd of the degrees.
    pub quotient_order: u64,
}

/// Parity-and-gcd descriptor of the scaling orbit for the given degrees.
pub fn orbit_descriptor(degrees: &[usize]) -> Result<OrbitDescriptor> {
    if degrees.is_empty() {
        return Err(Error::InvalidInput("empty degree list".into()));
    }
    let closes = degrees.iter().all(|d| d % 2 == 0);
    let quotient_order = degrees.iter().fold(0u64, |acc, &d| acc.gcd(&(d as u64)));
    Ok(OrbitDescriptor {
        closes,
        quotient_order,
    })
}
