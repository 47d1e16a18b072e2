//! Weyl groups of simply-laced diagrams in simple-root coordinates.
//!
//! Elements are integer matrices acting on the root lattice: column `j` of
//! the matrix is the image of the simple root `alpha_j`. The simple
//! reflection `s_i` equals the identity except in row `i`, where
//! `S[i][j] = delta_ij - C[i][j]` for the Cartan matrix `C`. Products
//! compose left to right, so the word `s_1 s_2` is the matrix `S_1 * S_2`.
//!
//! Roots are sign-uniform in these coordinates (all coefficients `>= 0` or
//! all `<= 0`), which makes descent sets, lengths, and the longest element
//! computable by exact sign inspection. The invariant degrees are recovered
//! from the characteristic polynomial of a Coxeter element: its eigenvalues
//! are `exp(2*pi*i*m_j/h)` for the exponents `m_j`, so factoring the
//! characteristic polynomial into cyclotomics reads off the exponents, and
//! `d_j = m_j + 1`.

use std::collections::{BTreeSet, VecDeque};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::diagram::DynkinDiagram;
use crate::error::Error;
use crate::Result;

/// Which side of a product a descent is measured on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// An element of a Weyl group, stored with its inverse.
///
/// Both matrices are `n x n`, row-major. Equality and hashing use only the
/// forward matrix; the inverse is determined by it.
#[derive(Debug, Clone)]
pub struct WeylElement {
    n: usize,
    mat: Vec<i64>,
    inv: Vec<i64>,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.mat == other.mat
    }
}

impl Eq for WeylElement {}

impl std::hash::Hash for WeylElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.mat.hash(state);
    }
}

fn mat_mul(n: usize, a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i * n + k];
            if aik == 0 {
                continue;
            }
            for j in 0..n {
                out[i * n + j] += aik * b[k * n + j];
            }
        }
    }
    out
}

impl WeylElement {
    pub fn identity(n: usize) -> Self {
        let mut mat = vec![0i64; n * n];
        for i in 0..n {
            mat[i * n + i] = 1;
        }
        Self {
            n,
            inv: mat.clone(),
            mat,
        }
    }

    /// The reflection in the simple root with label `i` (1-based).
    pub fn simple_reflection(cartan: &[Vec<i64>], i: usize) -> Self {
        let n = cartan.len();
        let idx = i - 1;
        let mut mat = vec![0i64; n * n];
        for r in 0..n {
            for c in 0..n {
                mat[r * n + c] = if r == c { 1 } else { 0 };
            }
        }
        for c in 0..n {
            mat[idx * n + c] = if idx == c { -1 } else { -cartan[idx][c] };
        }
        // A reflection is an involution.
        Self {
            n,
            inv: mat.clone(),
            mat,
        }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// `self * other` as matrices: apply `other` first, then `self`.
    pub fn compose(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        Self {
            n: self.n,
            mat: mat_mul(self.n, &self.mat, &other.mat),
            inv: mat_mul(self.n, &other.inv, &self.inv),
        }
    }

    pub fn inverse(&self) -> Self {
        Self {
            n: self.n,
            mat: self.inv.clone(),
            inv: self.mat.clone(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.mat
            .iter()
            .enumerate()
            .all(|(k, &v)| v == if k / self.n == k % self.n { 1 } else { 0 })
    }

    /// Image of a vector in simple-root coordinates.
    pub fn act(&self, v: &[i64]) -> Vec<i64> {
        debug_assert_eq!(v.len(), self.n);
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.mat[i * self.n + j] * v[j]).sum())
            .collect()
    }

    /// Row-major copy of the matrix, for display and serialization.
    pub fn matrix(&self) -> Vec<Vec<i64>> {
        (0..self.n)
            .map(|i| self.mat[i * self.n..(i + 1) * self.n].to_vec())
            .collect()
    }

    /// True if column `j` (0-based) is a negative root image.
    fn column_negative(mat: &[i64], n: usize, j: usize) -> bool {
        for i in 0..n {
            let v = mat[i * n + j];
            if v != 0 {
                return v < 0;
            }
        }
        false
    }

    /// Descent labels: `i` is a right descent iff `w(alpha_i) < 0`, a left
    /// descent iff `w^{-1}(alpha_i) < 0`.
    pub fn descents(&self, side: Side) -> BTreeSet<usize> {
        let m = match side {
            Side::Right => &self.mat,
            Side::Left => &self.inv,
        };
        (0..self.n)
            .filter(|&j| Self::column_negative(m, self.n, j))
            .map(|j| j + 1)
            .collect()
    }

    /// Descents as a bitmask with bit `i-1` for label `i`.
    pub(crate) fn descent_mask(&self, side: Side) -> u32 {
        let m = match side {
            Side::Right => &self.mat,
            Side::Left => &self.inv,
        };
        let mut mask = 0u32;
        for j in 0..self.n {
            if Self::column_negative(m, self.n, j) {
                mask |= 1 << j;
            }
        }
        mask
    }

    /// Canonical byte encoding of the matrix. Entries of rank `<= 8`
    /// elements fit in `i8`; this is checked.
    pub(crate) fn encode_into(&self, out: &mut Vec<u8>) {
        for &v in &self.mat {
            debug_assert!((-128..=127).contains(&v));
            out.push(v as i8 as u8);
        }
    }
}

/// A root system with its simple reflections and positive roots.
#[derive(Debug, Clone)]
pub struct RootSystem {
    diagram: DynkinDiagram,
    simples: Vec<WeylElement>,
    positive_roots: Vec<Vec<i64>>,
}

impl RootSystem {
    pub fn new(diagram: &DynkinDiagram) -> Self {
        let n = diagram.rank();
        let cartan = diagram.cartan_matrix();
        let simples: Vec<WeylElement> = (1..=n)
            .map(|i| WeylElement::simple_reflection(&cartan, i))
            .collect();

        // Orbit closure of the simple roots under the simple reflections.
        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        for i in 0..n {
            let mut e = vec![0i64; n];
            e[i] = 1;
            seen.insert(e.clone());
            queue.push_back(e);
        }
        while let Some(root) = queue.pop_front() {
            for s in &simples {
                let image = s.act(&root);
                if seen.insert(image.clone()) {
                    queue.push_back(image);
                }
            }
        }

        let mut positive_roots: Vec<Vec<i64>> = seen
            .into_iter()
            .filter(|r| r.iter().any(|&c| c > 0))
            .collect();
        debug_assert!(positive_roots.iter().all(|r| r.iter().all(|&c| c >= 0)));
        positive_roots.sort_by_key(|r| (r.iter().sum::<i64>(), r.clone()));

        Self {
            diagram: diagram.clone(),
            simples,
            positive_roots,
        }
    }

    pub fn diagram(&self) -> &DynkinDiagram {
        &self.diagram
    }

    pub fn rank(&self) -> usize {
        self.diagram.rank()
    }

    /// Positive roots in simple-root coordinates, sorted by height.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    /// The simple reflection with label `i` (1-based).
    pub fn simple(&self, i: usize) -> &WeylElement {
        &self.simples[i - 1]
    }

    /// Coxeter length: the number of positive roots sent negative.
    pub fn length(&self, w: &WeylElement) -> usize {
        self.positive_roots
            .iter()
            .filter(|r| {
                let image = w.act(r);
                image.iter().find(|&&c| c != 0).is_some_and(|&c| c < 0)
            })
            .count()
    }

    /// The longest element `w0`, built greedily: while some label is not a
    /// left descent, multiply by that reflection on the left. Terminates at
    /// the unique element whose left descent set is all of `1..=rank`.
    pub fn longest_element(&self) -> WeylElement {
        let n = self.rank();
        let full: u32 = if n == 32 { u32::MAX } else { (1 << n) - 1 };
        let mut w = WeylElement::identity(n);
        loop {
            let mask = w.descent_mask(Side::Left);
            if mask == full {
                return w;
            }
            let i = (!mask).trailing_zeros() as usize + 1;
            w = self.simple(i).compose(&w);
        }
    }

    /// Lexicographically least reduced word: repeatedly strip the smallest
    /// left descent.
    pub fn reduced_word(&self, w: &WeylElement) -> Vec<usize> {
        let mut word = Vec::new();
        let mut cur = w.clone();
        loop {
            let mask = cur.descent_mask(Side::Left);
            if mask == 0 {
                debug_assert!(cur.is_identity());
                return word;
            }
            let i = mask.trailing_zeros() as usize + 1;
            word.push(i);
            cur = self.simple(i).compose(&cur);
        }
    }

    /// The Coxeter element `s_1 s_2 ... s_n` in label order.
    pub fn coxeter_element(&self) -> WeylElement {
        let mut c = WeylElement::identity(self.rank());
        for s in &self.simples {
            c = c.compose(s);
        }
        c
    }

    /// Order of the Coxeter element. Independent of the label order
    /// because the underlying graph is a tree.
    pub fn coxeter_number(&self) -> usize {
        let c = self.coxeter_element();
        let mut p = c.clone();
        for k in 1..=10_000 {
            if p.is_identity() {
                return k;
            }
            p = p.compose(&c);
        }
        unreachable!("Coxeter element of a finite Weyl group has small order")
    }

    /// Invariant degrees, ascending, via cyclotomic factorization of the
    /// characteristic polynomial of a Coxeter element.
    ///
    /// Checks `sum (d_j - 1) = |positive roots|` before returning.
    pub fn invariant_degrees(&self) -> Result<Vec<usize>> {
        let n = self.rank();
        let h = self.coxeter_number();
        let c = self.coxeter_element();
        let mut charpoly = char_poly(n, &c);

        let mut exponents: Vec<usize> = Vec::new();
        for d in divisors(h) {
            let phi = cyclotomic(d);
            while let Some(q) = poly_div_exact(&charpoly, &phi) {
                charpoly = q;
                if d == 1 {
                    exponents.push(0);
                } else {
                    for a in 1..d {
                        if num_integer::gcd(a, d) == 1 {
                            exponents.push(a * h / d);
                        }
                    }
                }
            }
        }
        if charpoly != vec![BigInt::one()] {
            return Err(Error::Internal(
                "characteristic polynomial of the Coxeter element did not factor into cyclotomics"
                    .into(),
            ));
        }
        exponents.sort_unstable();
        if exponents.len() != n {
            return Err(Error::Internal(format!(
                "expected {n} exponents, found {}",
                exponents.len()
            )));
        }
        let sum: usize = exponents.iter().sum();
        if sum != self.positive_roots.len() {
            return Err(Error::Internal(format!(
                "exponent sum {sum} does not match the positive root count {}",
                self.positive_roots.len()
            )));
        }
        Ok(exponents.into_iter().map(|m| m + 1).collect())
    }

    /// True if the longest element acts as minus the identity.
    pub fn longest_is_minus_identity(&self) -> bool {
        let w0 = self.longest_element();
        let n = self.rank();
        w0.matrix()
            .iter()
            .enumerate()
            .all(|(i, row)| (0..n).all(|j| row[j] == if i == j { -1 } else { 0 }))
    }
}

/// Characteristic polynomial of an integer matrix, little-endian
/// coefficients, monic of degree `n`, by the Faddeev-LeVerrier recurrence
/// over exact rationals.
fn char_poly(n: usize, w: &WeylElement) -> Vec<BigInt> {
    let a: Vec<Vec<BigRational>> = w
        .matrix()
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|v| BigRational::from_integer(v.into()))
                .collect()
        })
        .collect();
    let mut coeffs: Vec<BigRational> = Vec::with_capacity(n);
    let mut m = a.clone();
    for k in 1..=n {
        let trace: BigRational = (0..n).map(|i| m[i][i].clone()).sum();
        let ck = -trace / BigRational::from_integer(BigInt::from(k));
        coeffs.push(ck.clone());
        if k == n {
            break;
        }
        // m <- a * (m + ck * I)
        let mut shifted = m.clone();
        for (i, row) in shifted.iter_mut().enumerate() {
            row[i] += ck.clone();
        }
        let mut next = vec![vec![BigRational::zero(); n]; n];
        for i in 0..n {
            for l in 0..n {
                if a[i][l].is_zero() {
                    continue;
                }
                for j in 0..n {
                    let term = a[i][l].clone() * shifted[l][j].clone();
                    next[i][j] += term;
                }
            }
        }
        m = next;
    }
    // p(x) = x^n + c_1 x^{n-1} + ... + c_n, returned little-endian.
    let mut out: Vec<BigInt> = Vec::with_capacity(n + 1);
    for ck in coeffs.iter().rev() {
        debug_assert!(ck.is_integer());
        out.push(ck.to_integer());
    }
    out.push(BigInt::one());
    out
}

fn divisors(h: usize) -> Vec<usize> {
    let mut out: Vec<usize> = (1..=h).filter(|&d| h.is_multiple_of(d)).collect();
    out.sort_unstable();
    out
}

/// The `d`-th cyclotomic polynomial, little-endian integer coefficients,
/// computed by exact division of `x^d - 1` by the proper cyclotomic factors.
fn cyclotomic(d: usize) -> Vec<BigInt> {
    let mut num = vec![BigInt::zero(); d + 1];
    num[0] = -BigInt::one();
    num[d] = BigInt::one();
    for e in 1..d {
        if d.is_multiple_of(e) {
            let phi = cyclotomic(e);
            num = poly_div_exact(&num, &phi).expect("cyclotomic division is exact");
        }
    }
    num
}

/// Exact polynomial division over the integers; `None` if the division
/// leaves a remainder. Both inputs little-endian with nonzero leading
/// coefficient; the divisor must be monic (true of cyclotomics).
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Option<Vec<BigInt>> {
    if num.len() < den.len() {
        return None;
    }
    debug_assert!(den.last().map(|c| c.is_one()).unwrap_or(false));
    let mut rem = num.to_vec();
    let qlen = num.len() - den.len() + 1;
    let mut quot = vec![BigInt::zero(); qlen];
    for k in (0..qlen).rev() {
        let coeff = rem[k + den.len() - 1].clone();
        if coeff.is_zero() {
            continue;
        }
        quot[k] = coeff.clone();
        for (i, d) in den.iter().enumerate() {
            let t = d.clone() * coeff.clone();
            rem[k + i] -= t;
        }
    }
    if rem.iter().all(|c| c.is_zero()) {
        Some(quot)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{all_admitted, Family};

    fn system(name: &str) -> RootSystem {
        RootSystem::new(&DynkinDiagram::parse(name).unwrap())
    }

    /// (name, positive roots, coxeter number, degrees)
    const CLASSICAL: &[(&str, usize, usize, &[usize])] = &[
        ("A1", 1, 2, &[2]),
        ("A2", 3, 3, &[2, 3]),
        ("A3", 6, 4, &[2, 3, 4]),
        ("A4", 10, 5, &[2, 3, 4, 5]),
        ("A5", 15, 6, &[2, 3, 4, 5, 6]),
        ("A6", 21, 7, &[2, 3, 4, 5, 6, 7]),
        ("A7", 28, 8, &[2, 3, 4, 5, 6, 7, 8]),
        ("A8", 36, 9, &[2, 3, 4, 5, 6, 7, 8, 9]),
        ("D4", 12, 6, &[2, 4, 4, 6]),
        ("D5", 20, 8, &[2, 4, 5, 6, 8]),
        ("D6", 30, 10, &[2, 4, 6, 6, 8, 10]),
        ("D7", 42, 12, &[2, 4, 6, 7, 8, 10, 12]),
        ("D8", 56, 14, &[2, 4, 6, 8, 8, 10, 12, 14]),
        ("E6", 36, 12, &[2, 5, 6, 8, 9, 12]),
        ("E7", 63, 18, &[2, 6, 8, 10, 12, 14, 18]),
        ("E8", 120, 30, &[2, 8, 12, 14, 18, 20, 24, 30]),
    ];

    #[test]
    fn classical_tables() {
        for &(name, roots, h, degrees) in CLASSICAL {
            let rs = system(name);
            assert_eq!(rs.positive_roots().len(), roots, "{name} root count");
            assert_eq!(rs.coxeter_number(), h, "{name} coxeter number");
            assert_eq!(rs.invariant_degrees().unwrap(), degrees, "{name} degrees");
        }
    }

    #[test]
    fn simple_reflection_action_in_a2() {
        let rs = system("A2");
        let s1 = rs.simple(1);
        assert_eq!(s1.act(&[1, 0]), vec![-1, 0]);
        assert_eq!(s1.act(&[0, 1]), vec![1, 1]);
        assert!(s1.compose(s1).is_identity());
    }

    #[test]
    fn longest_element_properties() {
        for d in all_admitted() {
            let rs = RootSystem::new(&d);
            let w0 = rs.longest_element();
            assert_eq!(rs.length(&w0), rs.positive_roots().len(), "{}", d.name());
            assert!(
                w0.compose(&w0).is_identity(),
                "{} w0 is an involution",
                d.name()
            );
            // w0 sends every positive root negative, so all labels descend.
            assert_eq!(w0.descents(Side::Left).len(), d.rank());
            assert_eq!(w0.descents(Side::Right).len(), d.rank());
        }
    }

    #[test]
    fn minus_identity_table() {
        for d in all_admitted() {
            let rs = RootSystem::new(&d);
            let expected = match (d.family(), d.rank()) {
                (Family::A, 1) => true,
                (Family::A, _) => false,
                (Family::D, n) => n % 2 == 0,
                (Family::E, 6) => false,
                (Family::E, _) => true,
            };
            assert_eq!(rs.longest_is_minus_identity(), expected, "{}", d.name());
        }
    }

    #[test]
    fn descents_of_simple_reflections() {
        let rs = system("E8");
        for i in 1..=8 {
            let s = rs.simple(i);
            assert_eq!(s.descents(Side::Left), BTreeSet::from([i]));
            assert_eq!(s.descents(Side::Right), BTreeSet::from([i]));
        }
    }

    #[test]
    fn reduced_word_of_longest_element_a2() {
        let rs = system("A2");
        let w0 = rs.longest_element();
        assert_eq!(rs.reduced_word(&w0), vec![1, 2, 1]);
    }

    #[test]
    fn reduced_words_multiply_back() {
        for name in ["A3", "D4", "E6"] {
            let rs = system(name);
            let w0 = rs.longest_element();
            let word = rs.reduced_word(&w0);
            assert_eq!(
                word.len(),
                rs.positive_roots().len(),
                "{name} reduced word length"
            );
            let mut prod = WeylElement::identity(rs.rank());
            for &i in &word {
                prod = prod.compose(rs.simple(i));
            }
            assert_eq!(prod, w0, "{name}");
        }
    }

    #[test]
    fn coxeter_charpoly_of_a2_is_the_third_cyclotomic() {
        let rs = system("A2");
        let c = rs.coxeter_element();
        let p = char_poly(2, &c);
        let one = BigInt::one();
        assert_eq!(p, vec![one.clone(), one.clone(), one]);
    }

    #[test]
    fn degrees_are_label_invariant() {
        // E8 numbered backwards along the chain.
        let edges = [(8, 7), (7, 6), (6, 5), (5, 4), (4, 3), (3, 2), (6, 1)];
        let d = DynkinDiagram::from_edges(&[1, 2, 3, 4, 5, 6, 7, 8], &edges).unwrap();
        let rs = RootSystem::new(&d);
        assert_eq!(
            rs.invariant_degrees().unwrap(),
            vec![2, 8, 12, 14, 18, 20, 24, 30]
        );
        assert_eq!(rs.positive_roots().len(), 120);
    }

    #[test]
    fn cyclotomic_samples() {
        let one = BigInt::one();
        assert_eq!(cyclotomic(1), vec![-one.clone(), one.clone()]);
        assert_eq!(cyclotomic(2), vec![one.clone(), one.clone()]);
        assert_eq!(cyclotomic(6), vec![one.clone(), -one.clone(), one.clone()]);
        // phi(30) = 8.
        assert_eq!(cyclotomic(30).len(), 9);
    }

    #[test]
    fn degrees_gcd_is_two_exactly_for_minus_identity_types() {
        // gcd of the degrees is 2 iff every degree is even iff w0 = -id.
        for d in all_admitted() {
            let rs = RootSystem::new(&d);
            let degrees = rs.invariant_degrees().unwrap();
            let g = degrees
                .iter()
                .fold(0usize, |acc, &x| num_integer::gcd(acc, x));
            let all_even = g % 2 == 0;
            assert_eq!(all_even, rs.longest_is_minus_identity(), "{}", d.name());
        }
    }
}
