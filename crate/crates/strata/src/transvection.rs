//! Symplectic transvections attached to an oriented Dynkin diagram: the
//! homology shadow of a configuration of Dehn twists.
//!
//! Each vertex carries a class `c_i`; adjacent classes pair to `±1`
//! (the edge orientation), disjoint ones to `0`. The Gram matrix of this
//! skew pairing is the signed adjacency matrix of the tree, and its
//! determinant is `±1` exactly when the tree has a perfect matching —
//! for the E8 diagram it does, so the eight classes form a unimodular
//! rank-8 lattice, matching the first homology of a closed genus-4
//! surface. A Dehn twist about `c` acts on homology as the transvection
//! `x -> x + <x, c> c`; sending the `i`-th Artin generator to the
//! transvection of `c_i` defines a representation, because transvections
//! of classes pairing to `±1` satisfy the braid relation and disjoint
//! ones commute.
//!
//! The module verifies those relations, evaluates words, computes the
//! image of the Garside element and its multiplicative order by exact
//! powering, and runs a breadth-first probe for words that act trivially
//! on homology while being non-trivial in the Artin group (checked by
//! Garside normal form) — a necessary condition for membership in the
//! kernel of the geometric representation, not a certification of it.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::diagram::DynkinDiagram;
use crate::error::Error;
use crate::garside::{ArtinWord, Garside, GarsideNormalForm};
use crate::Result;

/// Words longer than this are rejected by the kernel probe outright; the
/// state space grows exponentially with depth.
pub const MAX_SEARCH_LENGTH: u32 = 14;

/// Default ceiling for the multiplicative-order scan of the Garside
/// element's image.
pub const DEFAULT_ORDER_BOUND: u64 = 10_000;

/// An oriented Dynkin diagram with the skew pairing of its vertex
/// classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymplecticConfig {
    diagram: DynkinDiagram,
    /// Row-major rank x rank Gram matrix; `gram[i][j] = <c_i, c_j>`.
    gram: Vec<i64>,
    det: i64,
}

impl SymplecticConfig {
    /// Default orientation: every edge points from the smaller label to
    /// the larger, contributing `<c_i, c_j> = +1` for an edge `i < j`.
    pub fn new(diagram: &DynkinDiagram) -> Self {
        let signs: Vec<((usize, usize), i64)> = diagram.edges().map(|e| (e, 1)).collect();
        Self::with_orientation(diagram, &signs).expect("edge list matches by construction")
    }

    /// Explicit orientation: one sign per diagram edge `(i, j)` with
    /// `i < j`; `+1` orients the edge from `i` to `j`.
    pub fn with_orientation(
        diagram: &DynkinDiagram,
        signs: &[((usize, usize), i64)],
    ) -> Result<Self> {
        let n = diagram.rank();
        let edges: Vec<(usize, usize)> = diagram.edges().collect();
        let mut seen: Vec<(usize, usize)> = Vec::with_capacity(signs.len());
        let mut gram = vec![0i64; n * n];
        for &((i, j), s) in signs {
            let (a, b) = if i < j { (i, j) } else { (j, i) };
            if !edges.contains(&(a, b)) {
                return Err(Error::InvalidOrientation(format!(
                    "({i}, {j}) is not an edge of {}",
                    diagram.name()
                )));
            }
            if seen.contains(&(a, b)) {
                return Err(Error::InvalidOrientation(format!(
                    "edge ({a}, {b}) assigned a sign twice"
                )));
            }
            if s != 1 && s != -1 {
                return Err(Error::InvalidOrientation(format!(
                    "sign for edge ({a}, {b}) must be +1 or -1, got {s}"
                )));
            }
            let sign = if i < j { s } else { -s };
            gram[(a - 1) * n + (b - 1)] = sign;
            gram[(b - 1) * n + (a - 1)] = -sign;
            seen.push((a, b));
        }
        if seen.len() != edges.len() {
            return Err(Error::InvalidOrientation(format!(
                "{} edges assigned, diagram has {}",
                seen.len(),
                edges.len()
            )));
        }
        let det = det_bareiss(n, &gram);
        Ok(SymplecticConfig {
            diagram: diagram.clone(),
            gram,
            det,
        })
    }

    pub fn diagram(&self) -> &DynkinDiagram {
        &self.diagram
    }

    pub fn rank(&self) -> usize {
        self.diagram.rank()
    }

    /// `<c_i, c_j>` for 1-based vertex labels.
    pub fn pairing(&self, i: usize, j: usize) -> i64 {
        self.gram[(i - 1) * self.rank() + (j - 1)]
    }

    /// Row-major Gram matrix.
    pub fn gram(&self) -> &[i64] {
        &self.gram
    }

    /// Exact determinant of the Gram matrix; zero in odd rank and
    /// whenever the tree has no perfect matching.
    pub fn det(&self) -> i64 {
        self.det
    }

    pub fn is_unimodular(&self) -> bool {
        self.det.abs() == 1
    }
}

/// Integer matrix acting on the vertex classes; column `j` is the image
/// of `c_{j+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepMatrix {
    n: usize,
    mat: Vec<i64>,
}

impl RepMatrix {
    pub fn identity(n: usize) -> Self {
        let mut mat = vec![0i64; n * n];
        for i in 0..n {
            mat[i * n + i] = 1;
        }
        RepMatrix { n, mat }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn entry(&self, row: usize, col: usize) -> i64 {
        self.mat[row * self.n + col]
    }

    /// Row-major copy as nested rows.
    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.mat.chunks(self.n).map(<[i64]>::to_vec).collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == RepMatrix::identity(self.n)
    }

    /// `self * other` with overflow checked.
    pub fn mul(&self, other: &RepMatrix) -> Result<RepMatrix> {
        let n = self.n;
        let mut mat = vec![0i64; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.mat[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let p = a
                        .checked_mul(other.mat[k * n + j])
                        .ok_or(Error::Overflow("matrix product entry"))?;
                    mat[i * n + j] = mat[i * n + j]
                        .checked_add(p)
                        .ok_or(Error::Overflow("matrix product entry"))?;
                }
            }
        }
        Ok(RepMatrix { n, mat })
    }

    /// Whether `self` preserves the skew pairing: `M^T G M = G`.
    pub fn preserves_form(&self, cfg: &SymplecticConfig) -> bool {
        let n = self.n;
        if n != cfg.rank() {
            return false;
        }
        // (M^T G M)[i][j] = sum_{r,s} M[r][i] G[r][s] M[s][j]; entries
        // stay far from overflow for the matrices this crate produces.
        for i in 0..n {
            for j in 0..n {
                let mut acc: i128 = 0;
                for r in 0..n {
                    if self.mat[r * n + i] == 0 {
                        continue;
                    }
                    for s in 0..n {
                        acc += self.mat[r * n + i] as i128
                            * cfg.gram[r * n + s] as i128
                            * self.mat[s * n + j] as i128;
                    }
                }
                if acc != cfg.gram[i * n + j] as i128 {
                    return false;
                }
            }
        }
        true
    }

    pub fn det(&self) -> i64 {
        det_bareiss(self.n, &self.mat)
    }
}

/// Exact determinant by fraction-free elimination over `i128`.
fn det_bareiss(n: usize, entries: &[i64]) -> i64 {
    if n == 0 {
        return 1;
    }
    let mut m: Vec<i128> = entries.iter().map(|&x| x as i128).collect();
    let mut prev: i128 = 1;
    let mut sign: i128 = 1;
    for k in 0..n - 1 {
        if m[k * n + k] == 0 {
            let Some(swap) = (k + 1..n).find(|&r| m[r * n + k] != 0) else {
                return 0;
            };
            for c in 0..n {
                m.swap(k * n + c, swap * n + c);
            }
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i * n + j] = (m[i * n + j] * m[k * n + k] - m[i * n + k] * m[k * n + j]) / prev;
            }
            m[i * n + k] = 0;
        }
        prev = m[k * n + k];
    }
    i64::try_from(sign * m[n * n - 1]).expect("determinant fits i64")
}

/// The transvection `x -> x + <x, c_i> c_i` in the class basis.
pub fn transvection(cfg: &SymplecticConfig, vertex: usize) -> Result<RepMatrix> {
    if vertex == 0 || vertex > cfg.rank() {
        return Err(Error::LetterOutOfRange {
            letter: vertex as i64,
            rank: cfg.rank(),
        });
    }
    let n = cfg.rank();
    let v = vertex - 1;
    let mut t = RepMatrix::identity(n);
    for j in 0..n {
        // Column j picks up <c_j, c_v> in row v.
        t.mat[v * n + j] += cfg.gram[j * n + v];
    }
    Ok(t)
}

/// Inverse transvection; since `(T - I)^2 = 0` it is `2I - T`.
pub fn transvection_inverse(cfg: &SymplecticConfig, vertex: usize) -> Result<RepMatrix> {
    let t = transvection(cfg, vertex)?;
    let mut inv = RepMatrix::identity(cfg.rank());
    for (o, &e) in inv.mat.iter_mut().zip(&t.mat) {
        *o = 2 * *o - e;
    }
    Ok(inv)
}

/// Image of a word: the ordered product of generator images and their
/// inverses.
pub fn rep_word(cfg: &SymplecticConfig, w: &ArtinWord) -> Result<RepMatrix> {
    if w.diagram() != cfg.diagram() {
        return Err(Error::DiagramMismatch(format!(
            "word over {} applied to a {} configuration",
            w.diagram().name(),
            cfg.diagram().name()
        )));
    }
    let mut acc = RepMatrix::identity(cfg.rank());
    for &letter in w.letters() {
        let gen = if letter > 0 {
            transvection(cfg, letter as usize)?
        } else {
            transvection_inverse(cfg, (-letter) as usize)?
        };
        acc = acc.mul(&gen)?;
    }
    Ok(acc)
}

/// Which defining relation a vertex pair carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RelationKind {
    Braid,
    Commutation,
}

/// Outcome of one relation check between vertices `i < j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct RelationCheck {
    pub i: usize,
    pub j: usize,
    pub kind: RelationKind,
    pub pass: bool,
}

/// Verifies every defining relation of the Artin group in the
/// representation: braid on edges, commutation elsewhere.
pub fn check_geometric_relations(cfg: &SymplecticConfig) -> Vec<RelationCheck> {
    let n = cfg.rank();
    let t: Vec<RepMatrix> = (1..=n)
        .map(|i| transvection(cfg, i).expect("valid vertex"))
        .collect();
    let mut checks = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            let (a, b) = (&t[i - 1], &t[j - 1]);
            let (kind, pass) = if cfg.diagram().adjacent(i, j) {
                let lhs = a.mul(b).and_then(|m| m.mul(a));
                let rhs = b.mul(a).and_then(|m| m.mul(b));
                (
                    RelationKind::Braid,
                    matches!((lhs, rhs), (Ok(l), Ok(r)) if l == r),
                )
            } else {
                let lhs = a.mul(b);
                let rhs = b.mul(a);
                (
                    RelationKind::Commutation,
                    matches!((lhs, rhs), (Ok(l), Ok(r)) if l == r),
                )
            };
            checks.push(RelationCheck { i, j, kind, pass });
        }
    }
    checks
}

/// Image of the Garside element with its exact multiplicative order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaImage {
    pub matrix: RepMatrix,
    /// `None` means the order exceeds the scan bound.
    pub order: Option<u64>,
}

/// Computes the image of the Garside element and scans for its order up
/// to [`DEFAULT_ORDER_BOUND`].
pub fn delta_image(cfg: &SymplecticConfig) -> Result<DeltaImage> {
    delta_image_with_bound(cfg, DEFAULT_ORDER_BOUND)
}

/// As [`delta_image`] with an explicit order-scan ceiling; powering is
/// done over big integers, so entry growth is not a failure mode.
pub fn delta_image_with_bound(cfg: &SymplecticConfig, bound: u64) -> Result<DeltaImage> {
    let garside = Garside::new(cfg.diagram());
    let matrix = rep_word(cfg, &garside.garside_element())?;
    let n = cfg.rank();
    let base: Vec<BigInt> = matrix.mat.iter().map(|&x| BigInt::from(x)).collect();
    let mut power = base.clone();
    let mut order = None;
    for k in 1..=bound {
        if big_is_identity(n, &power) {
            order = Some(k);
            break;
        }
        power = big_mul(n, &power, &base);
    }
    Ok(DeltaImage { matrix, order })
}

fn big_is_identity(n: usize, m: &[BigInt]) -> bool {
    m.iter().enumerate().all(|(idx, v)| {
        if idx / n == idx % n {
            v.is_one()
        } else {
            v.is_zero()
        }
    })
}

fn big_mul(n: usize, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); n * n];
    for i in 0..n {
        for k in 0..n {
            if a[i * n + k].is_zero() {
                continue;
            }
            for j in 0..n {
                let p = &a[i * n + k] * &b[k * n + j];
                out[i * n + j] += p;
            }
        }
    }
    out
}

/// Resource limits for the kernel probe. A state budget cuts the search
/// at a deterministic point; a time limit is a wall-clock fallback whose
/// partial results may vary between runs.
#[derive(Debug, Clone, Copy, Default)]
pub struct SearchBudget {
    pub max_states: Option<u64>,
    pub time_limit: Option<Duration>,
}

/// Result of the breadth-first kernel probe.
#[derive(Debug, Clone)]
pub struct KernelSearch {
    /// One shortest word per discovered group element that acts
    /// trivially on homology but is non-trivial in the Artin group,
    /// in discovery order.
    pub certificates: Vec<ArtinWord>,
    /// Depth up to which the ball was fully enumerated.
    pub explored_depth: u32,
    /// False when a budget stopped the search early.
    pub complete: bool,
    /// Unique group elements discovered (including the identity).
    pub visited_states: u64,
}

/// Group-versus-homology triviality of one word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct KernelCertificate {
    pub group_trivial: bool,
    pub homology_trivial: bool,
}

/// Checks one word: trivial in the group (Garside normal form) and
/// trivial on homology (representation matrix). A valid certificate of
/// homological-kernel membership is `(false, true)`.
pub fn verify_kernel_certificate(
    cfg: &SymplecticConfig,
    w: &ArtinWord,
) -> Result<KernelCertificate> {
    let garside = Garside::new(cfg.diagram());
    let nf = garside.normal_form(w)?;
    let rep = rep_word(cfg, w)?;
    Ok(KernelCertificate {
        group_trivial: nf.is_trivial(),
        homology_trivial: rep.is_identity(),
    })
}

/// Breadth-first kernel probe with no budget (the depth cap is the only
/// limit).
pub fn kernel_search(cfg: &SymplecticConfig, max_length: u32) -> Result<KernelSearch> {
    kernel_search_with_budget(cfg, max_length, &SearchBudget::default())
}

/// 128-bit FNV-1a over a byte string; keyed dedup of normal forms.
fn fnv128(bytes: &[u8]) -> u128 {
    const OFFSET: u128 = 0x6c62272e07bb014262b821756295c58d;
    const PRIME: u128 = 0x0000000001000000000000000000013b;
    let mut h = OFFSET;
    for &b in bytes {
        h ^= b as u128;
        h = h.wrapping_mul(PRIME);
    }
    h
}

/// Breadth-first enumeration of group elements spelled by words of
/// bounded length, deduplicated by Garside normal form, collecting those
/// whose homology image is the identity while the group element is not.
///
/// Exceeding the budget is not an error: the search reports the depth it
/// completed, drops certificates from the partially explored level, and
/// flags itself incomplete.
pub fn kernel_search_with_budget(
    cfg: &SymplecticConfig,
    max_length: u32,
    budget: &SearchBudget,
) -> Result<KernelSearch> {
    if max_length > MAX_SEARCH_LENGTH {
        return Err(Error::DepthBound {
            requested: max_length as usize,
            bound: MAX_SEARCH_LENGTH as usize,
        });
    }
    let n = cfg.rank();
    let garside = Garside::new(cfg.diagram());
    let positive: Vec<RepMatrix> = (1..=n)
        .map(|i| transvection(cfg, i))
        .collect::<Result<_>>()?;
    let negative: Vec<RepMatrix> = (1..=n)
        .map(|i| transvection_inverse(cfg, i))
        .collect::<Result<_>>()?;
    let letters: Vec<i64> = (1..=n as i64).chain((1..=n as i64).map(|i| -i)).collect();
    let image = |letter: i64| -> &RepMatrix {
        if letter > 0 {
            &positive[letter as usize - 1]
        } else {
            &negative[(-letter) as usize - 1]
        }
    };

    // States are group elements; each remembers only how it was reached.
    struct Node {
        parent: u32,
        letter: i8,
        depth: u8,
    }
    let mut nodes = vec![Node {
        parent: u32::MAX,
        letter: 0,
        depth: 0,
    }];
    let mut visited: HashSet<u128> = HashSet::new();
    visited.insert(fnv128(&GarsideNormalForm::trivial().encode()));
    let mut found: Vec<(u32, ArtinWord)> = Vec::new();
    let started = Instant::now();
    let mut complete = true;
    let mut explored_depth = max_length;

    let mut cursor = 0usize;
    'bfs: while cursor < nodes.len() {
        let depth = nodes[cursor].depth as u32;
        if depth >= max_length {
            break;
        }
        if let Some(limit) = budget.time_limit {
            if started.elapsed() > limit {
                complete = false;
                explored_depth = depth;
                break;
            }
        }
        // Recover the word, then its normal form and image; only the
        // back-pointers are stored, which keeps large frontiers cheap.
        let mut word: Vec<i64> = Vec::with_capacity(depth as usize);
        let mut at = cursor;
        while nodes[at].parent != u32::MAX {
            word.push(nodes[at].letter as i64);
            at = nodes[at].parent as usize;
        }
        word.reverse();
        let mut nf = GarsideNormalForm::trivial();
        let mut rep = RepMatrix::identity(n);
        for &l in &word {
            garside.push_letter(&mut nf, l)?;
            rep = rep.mul(image(l))?;
        }

        for &l in &letters {
            if let Some(max_states) = budget.max_states {
                if nodes.len() as u64 >= max_states {
                    complete = false;
                    explored_depth = depth;
                    break 'bfs;
                }
            }
            let mut child_nf = nf.clone();
            garside.push_letter(&mut child_nf, l)?;
            if !visited.insert(fnv128(&child_nf.encode())) {
                continue;
            }
            let child_rep = rep.mul(image(l))?;
            nodes.push(Node {
                parent: cursor as u32,
                letter: l as i8,
                depth: (depth + 1) as u8,
            });
            if child_rep.is_identity() && !child_nf.is_trivial() {
                let mut letters_out = word.clone();
                letters_out.push(l);
                found.push((depth + 1, ArtinWord::new(cfg.diagram(), letters_out)?));
            }
        }
        cursor += 1;
    }

    if !complete {
        found.retain(|(d, _)| *d <= explored_depth);
    }
    Ok(KernelSearch {
        certificates: found.into_iter().map(|(_, w)| w).collect(),
        explored_depth,
        complete,
        visited_states: nodes.len() as u64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::all_admitted;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn diagram(name: &str) -> DynkinDiagram {
        DynkinDiagram::parse(name).unwrap()
    }

    fn word(d: &DynkinDiagram, letters: &[i64]) -> ArtinWord {
        ArtinWord::new(d, letters.iter().copied()).unwrap()
    }

    /// All 2^edges orientations of a diagram.
    fn all_orientations(d: &DynkinDiagram) -> Vec<SymplecticConfig> {
        let edges: Vec<(usize, usize)> = d.edges().collect();
        (0..1u32 << edges.len())
            .map(|mask| {
                let signs: Vec<((usize, usize), i64)> = edges
                    .iter()
                    .enumerate()
                    .map(|(k, &e)| (e, if mask >> k & 1 == 1 { -1 } else { 1 }))
                    .collect();
                SymplecticConfig::with_orientation(d, &signs).unwrap()
            })
            .collect()
    }

    #[test]
    fn gram_matrices_and_determinants() {
        let a1 = SymplecticConfig::new(&diagram("A1"));
        assert_eq!(a1.gram(), &[0]);
        assert_eq!(a1.det(), 0);
        assert!(!a1.is_unimodular());

        let a2 = SymplecticConfig::new(&diagram("A2"));
        assert_eq!(a2.gram(), &[0, 1, -1, 0]);
        assert_eq!(a2.det(), 1);

        // Odd rank: skew determinant vanishes.
        assert_eq!(SymplecticConfig::new(&diagram("E7")).det(), 0);
        assert_eq!(SymplecticConfig::new(&diagram("A5")).det(), 0);

        // Even rank without a perfect matching (the D4 star): zero.
        assert_eq!(SymplecticConfig::new(&diagram("D4")).det(), 0);

        // The E8 tree has a perfect matching, so the lattice is
        // unimodular of rank 8 = 2 * 4: the homology of a closed
        // genus-4 surface.
        let e8 = SymplecticConfig::new(&diagram("E8"));
        assert_eq!(e8.rank(), 8);
        assert_eq!(e8.det().abs(), 1);
        assert!(e8.is_unimodular());

        // Structure: skew, zero diagonal, support = adjacency.
        for d in all_admitted() {
            let cfg = SymplecticConfig::new(&d);
            let n = d.rank();
            for i in 1..=n {
                for j in 1..=n {
                    let v = cfg.pairing(i, j);
                    assert_eq!(v, -cfg.pairing(j, i));
                    if d.adjacent(i, j) {
                        assert_eq!(v.abs(), 1);
                    } else {
                        assert_eq!(v, 0);
                    }
                }
            }
        }
    }

    #[test]
    fn explicit_orientations() {
        let d = diagram("A2");
        let cfg = SymplecticConfig::with_orientation(&d, &[((1, 2), -1)]).unwrap();
        assert_eq!(cfg.pairing(1, 2), -1);
        // Reversed endpoint order flips the stored sign.
        let same = SymplecticConfig::with_orientation(&d, &[((2, 1), 1)]).unwrap();
        assert_eq!(cfg, same);

        assert!(matches!(
            SymplecticConfig::with_orientation(&d, &[((1, 3), 1)]),
            Err(Error::InvalidOrientation(_))
        ));
        assert!(matches!(
            SymplecticConfig::with_orientation(&d, &[]),
            Err(Error::InvalidOrientation(_))
        ));
        assert!(matches!(
            SymplecticConfig::with_orientation(&d, &[((1, 2), 2)]),
            Err(Error::InvalidOrientation(_))
        ));
        assert!(matches!(
            SymplecticConfig::with_orientation(&d, &[((1, 2), 1), ((2, 1), 1)]),
            Err(Error::InvalidOrientation(_))
        ));
    }

    #[test]
    fn transvections_are_unipotent_symplectic() {
        for d in all_admitted() {
            let cfg = SymplecticConfig::new(&d);
            for i in 1..=d.rank() {
                let t = transvection(&cfg, i).unwrap();
                assert_eq!(t.det(), 1, "{} vertex {i}", d.name());
                assert!(t.preserves_form(&cfg), "{} vertex {i}", d.name());
                // (T - I)^2 = 0: T^2 = 2T - I.
                let sq = t.mul(&t).unwrap();
                let mut twice = t.clone();
                for (o, &id) in twice.mat.iter_mut().zip(&RepMatrix::identity(d.rank()).mat) {
                    *o = 2 * *o - id;
                }
                assert_eq!(sq, twice, "{} vertex {i}", d.name());
                // Inverse really inverts.
                let inv = transvection_inverse(&cfg, i).unwrap();
                assert!(t.mul(&inv).unwrap().is_identity());
            }
        }
        // Zero form: the A1 transvection is the identity.
        let a1 = SymplecticConfig::new(&diagram("A1"));
        assert!(transvection(&a1, 1).unwrap().is_identity());
        assert!(transvection(&a1, 2).is_err());

        // A2 default: unipotent with a single off-diagonal entry.
        let a2 = SymplecticConfig::new(&diagram("A2"));
        assert_eq!(
            transvection(&a2, 1).unwrap().rows(),
            vec![vec![1, -1], vec![0, 1]]
        );
        assert_eq!(
            transvection(&a2, 2).unwrap().rows(),
            vec![vec![1, 0], vec![1, 1]]
        );
    }

    #[test]
    fn relations_hold_for_every_diagram_and_orientation() {
        for d in all_admitted() {
            for cfg in all_orientations(&d) {
                let checks = check_geometric_relations(&cfg);
                let n = d.rank();
                assert_eq!(checks.len(), n * (n - 1) / 2);
                assert!(
                    checks.iter().all(|c| c.pass),
                    "{} orientation {:?}",
                    d.name(),
                    cfg.gram()
                );
                for i in 1..=n {
                    let t = transvection(&cfg, i).unwrap();
                    assert!(t.preserves_form(&cfg));
                    assert_eq!(t.det(), 1);
                }
            }
        }
        // Headline counts for E8: 7 braid + 21 commutation pairs.
        let e8 = SymplecticConfig::new(&diagram("E8"));
        let checks = check_geometric_relations(&e8);
        let braid = checks
            .iter()
            .filter(|c| c.kind == RelationKind::Braid)
            .count();
        let comm = checks
            .iter()
            .filter(|c| c.kind == RelationKind::Commutation)
            .count();
        assert_eq!((braid, comm), (7, 21));
        // A2: exactly one braid pair.
        let a2 = check_geometric_relations(&SymplecticConfig::new(&diagram("A2")));
        assert_eq!(a2.len(), 1);
        assert_eq!(a2[0].kind, RelationKind::Braid);
        assert!(a2[0].pass);
    }

    #[test]
    fn flipping_one_edge_conjugates_by_a_diagonal_sign_matrix() {
        for name in ["D5", "E8"] {
            let d = diagram(name);
            let base = SymplecticConfig::new(&d);
            let edges: Vec<(usize, usize)> = d.edges().collect();
            for &(u, v) in &edges {
                let signs: Vec<((usize, usize), i64)> = edges
                    .iter()
                    .map(|&e| (e, if e == (u, v) { -1 } else { 1 }))
                    .collect();
                let flipped = SymplecticConfig::with_orientation(&d, &signs).unwrap();

                // Diagonal D: -1 on the component of v in the tree minus
                // the flipped edge; conjugation by D flips exactly the
                // pairings across the cut, i.e. the one edge.
                let mut comp = vec![false; d.rank() + 1];
                comp[v] = true;
                let mut stack = vec![v];
                while let Some(x) = stack.pop() {
                    // comp is read and written by vertex label inside the
                    // scan, so index addressing is the clear form here.
                    #[allow(clippy::needless_range_loop)]
                    for y in 1..=d.rank() {
                        if !comp[y]
                            && d.adjacent(x, y)
                            && (x.min(y), x.max(y)) != (u.min(v), u.max(v))
                        {
                            comp[y] = true;
                            stack.push(y);
                        }
                    }
                }
                let diag: Vec<i64> = (1..=d.rank())
                    .map(|x| if comp[x] { -1 } else { 1 })
                    .collect();
                let n = d.rank();
                for i in 1..=n {
                    let t = transvection(&base, i).unwrap();
                    let t_flipped = transvection(&flipped, i).unwrap();
                    for r in 0..n {
                        for c in 0..n {
                            assert_eq!(
                                t_flipped.entry(r, c),
                                diag[r] * t.entry(r, c) * diag[c],
                                "{name} edge ({u},{v}) vertex {i}"
                            );
                        }
                    }
                }
                // And the relation report is identical.
                assert_eq!(
                    check_geometric_relations(&base),
                    check_geometric_relations(&flipped)
                );
            }
        }
    }

    #[test]
    fn rep_word_is_a_homomorphism() {
        let d = diagram("A3");
        let cfg = SymplecticConfig::new(&d);
        assert!(rep_word(&cfg, &word(&d, &[])).unwrap().is_identity());

        // Braid relation on adjacent vertices, commutation elsewhere.
        assert_eq!(
            rep_word(&cfg, &word(&d, &[1, 2, 1])).unwrap(),
            rep_word(&cfg, &word(&d, &[2, 1, 2])).unwrap()
        );
        assert_eq!(
            rep_word(&cfg, &word(&d, &[1, 3])).unwrap(),
            rep_word(&cfg, &word(&d, &[3, 1])).unwrap()
        );

        // Functoriality on random pairs.
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for dn in ["A3", "E8"] {
            let d = diagram(dn);
            let cfg = SymplecticConfig::new(&d);
            let n = d.rank() as i64;
            let pick = |rng: &mut ChaCha8Rng| -> ArtinWord {
                let len = rng.gen_range(0..=8usize);
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
                ArtinWord::new(&d, letters).unwrap()
            };
            for _ in 0..40 {
                let u = pick(&mut rng);
                let v = pick(&mut rng);
                let uv = u.concat(&v).unwrap();
                assert_eq!(
                    rep_word(&cfg, &uv).unwrap(),
                    rep_word(&cfg, &u)
                        .unwrap()
                        .mul(&rep_word(&cfg, &v).unwrap())
                        .unwrap()
                );
            }
        }

        // Mismatched diagram is rejected.
        let a2 = diagram("A2");
        assert!(matches!(
            rep_word(&cfg, &word(&a2, &[1])),
            Err(Error::DiagramMismatch(_))
        ));
    }

    #[test]
    fn entry_growth_is_caught() {
        let d = diagram("A2");
        let cfg = SymplecticConfig::new(&d);
        let letters: Vec<i64> = (0..200).flat_map(|_| [1, -2]).collect();
        assert!(matches!(
            rep_word(&cfg, &word(&d, &letters)),
            Err(Error::Overflow(_))
        ));
    }

    #[test]
    fn delta_image_orders() {
        // Zero form: everything dies, order 1.
        let a1 = SymplecticConfig::new(&diagram("A1"));
        let im = delta_image(&a1).unwrap();
        assert!(im.matrix.is_identity());
        assert_eq!(im.order, Some(1));

        // A2: the image of a1 a2 a1 is a quarter turn.
        let a2 = SymplecticConfig::new(&diagram("A2"));
        let im = delta_image(&a2).unwrap();
        assert_eq!(im.matrix.rows(), vec![vec![0, -1], vec![1, 0]]);
        assert_eq!(im.order, Some(4));

        // Tiny bound reports "exceeds bound" as None.
        let capped = delta_image_with_bound(&a2, 3).unwrap();
        assert_eq!(capped.order, None);
    }

    #[test]
    fn e8_delta_image_is_homologically_trivial() {
        // Derived once by exact powering and pinned. The product of the
        // eight transvections has order 15 — its eigenvalues are the
        // primitive 15th roots of unity, as the monodromy eigenvalue
        // exponents (5a + 3b)/15 of x^3 + y^5 are all coprime to 15 —
        // and the Garside element is its 15th power, hence the identity
        // on homology.
        let e8 = SymplecticConfig::new(&diagram("E8"));
        let cox = rep_word(&e8, &word(e8.diagram(), &[1, 2, 3, 4, 5, 6, 7, 8])).unwrap();
        let mut powers = vec![cox.clone()];
        for _ in 1..15 {
            powers.push(powers.last().unwrap().mul(&cox).unwrap());
        }
        assert!(powers[14].is_identity());
        // Order exactly 15: no proper divisor power is the identity.
        assert!(!powers[0].is_identity());
        assert!(!powers[2].is_identity());
        assert!(!powers[4].is_identity());

        let im = delta_image(&e8).unwrap();
        assert!(im.matrix.is_identity());
        assert_eq!(im.order, Some(1));

        // The Garside element is therefore itself a homological-kernel
        // certificate: non-trivial in the group, trivial on homology.
        let delta = Garside::new(e8.diagram()).garside_element();
        let cert = verify_kernel_certificate(&e8, &delta).unwrap();
        assert_eq!((cert.group_trivial, cert.homology_trivial), (false, true));
    }

    #[test]
    fn kernel_probe_basics() {
        // Depth zero: nothing.
        let a2 = SymplecticConfig::new(&diagram("A2"));
        let empty = kernel_search(&a2, 0).unwrap();
        assert!(empty.certificates.is_empty());
        assert!(empty.complete);
        assert_eq!(empty.explored_depth, 0);
        assert_eq!(empty.visited_states, 1);

        // Over A1 the form is zero, so every non-trivial element is a
        // homological certificate.
        let a1 = SymplecticConfig::new(&diagram("A1"));
        let s = kernel_search(&a1, 2).unwrap();
        assert!(s.complete);
        let letters: Vec<Vec<i64>> = s
            .certificates
            .iter()
            .map(|w| w.letters().to_vec())
            .collect();
        assert_eq!(letters, vec![vec![1], vec![-1], vec![1, 1], vec![-1, -1]]);
        for w in &s.certificates {
            let cert = verify_kernel_certificate(&a1, w).unwrap();
            assert!(!cert.group_trivial);
            assert!(cert.homology_trivial);
        }

        // Group-identity words are excluded by the normal-form filter.
        let g = Garside::new(a2.diagram());
        let relator = word(a2.diagram(), &[1, 2, 1, -2, -1, -2]);
        assert!(g.normal_form(&relator).unwrap().is_trivial());
        let shallow = kernel_search(&a2, 6).unwrap();
        assert!(shallow.complete);
        assert!(shallow.certificates.is_empty());

        // Depth cap.
        assert!(matches!(
            kernel_search(&a2, MAX_SEARCH_LENGTH + 1),
            Err(Error::DepthBound {
                requested: 15,
                bound: 14
            })
        ));
    }

    #[test]
    fn kernel_probe_budgets_are_deterministic() {
        let a2 = SymplecticConfig::new(&diagram("A2"));
        let budget = SearchBudget {
            max_states: Some(40),
            time_limit: None,
        };
        let first = kernel_search_with_budget(&a2, 8, &budget).unwrap();
        let second = kernel_search_with_budget(&a2, 8, &budget).unwrap();
        assert!(!first.complete);
        assert!(first.explored_depth < 8);
        assert_eq!(first.visited_states, second.visited_states);
        assert_eq!(first.explored_depth, second.explored_depth);
        let w1: Vec<Vec<i64>> = first
            .certificates
            .iter()
            .map(|w| w.letters().to_vec())
            .collect();
        let w2: Vec<Vec<i64>> = second
            .certificates
            .iter()
            .map(|w| w.letters().to_vec())
            .collect();
        assert_eq!(w1, w2);
    }

    #[test]
    fn a2_probe_finds_the_central_fourth_powers() {
        // The homology representation of the rank-2 Artin group lands in
        // SL(2, Z) with kernel generated by the fourth power of the
        // Garside element; the shortest homologically trivial
        // non-trivial elements therefore have length 12.
        let a2 = SymplecticConfig::new(&diagram("A2"));
        let below = kernel_search(&a2, 11).unwrap();
        assert!(below.complete);
        assert!(below.certificates.is_empty());

        let s = kernel_search(&a2, 12).unwrap();
        assert!(s.complete);
        assert_eq!(s.explored_depth, 12);
        assert_eq!(s.certificates.len(), 2);
        let g = Garside::new(a2.diagram());
        let mut powers: Vec<i64> = s
            .certificates
            .iter()
            .map(|w| {
                let nf = g.normal_form(w).unwrap();
                nf.as_delta_power().expect("central certificate")
            })
            .collect();
        powers.sort_unstable();
        assert_eq!(powers, [-4, 4]);
        for w in &s.certificates {
            assert_eq!(w.len(), 12);
            let cert = verify_kernel_certificate(&a2, w).unwrap();
            assert_eq!((cert.group_trivial, cert.homology_trivial), (false, true));
        }

        // Complete searches are reproducible.
        let again = kernel_search(&a2, 12).unwrap();
        let w1: Vec<Vec<i64>> = s
            .certificates
            .iter()
            .map(|w| w.letters().to_vec())
            .collect();
        let w2: Vec<Vec<i64>> = again
            .certificates
            .iter()
            .map(|w| w.letters().to_vec())
            .collect();
        assert_eq!(w1, w2);
    }

    #[test]
    fn certificates_for_central_powers() {
        let d = diagram("A2");
        let cfg = SymplecticConfig::new(&d);
        let g = Garside::new(&d);
        let delta = g.garside_element();

        let empty = verify_kernel_certificate(&cfg, &word(&d, &[])).unwrap();
        assert_eq!((empty.group_trivial, empty.homology_trivial), (true, true));

        let gen = verify_kernel_certificate(&cfg, &word(&d, &[1])).unwrap();
        assert_eq!((gen.group_trivial, gen.homology_trivial), (false, false));

        // Delta^2 maps to -I, Delta^4 to I: the first homologically
        // trivial central power is the fourth.
        let delta2 = delta.concat(&delta).unwrap();
        let delta4 = delta2.concat(&delta2).unwrap();
        let c2 = verify_kernel_certificate(&cfg, &delta2).unwrap();
        assert_eq!((c2.group_trivial, c2.homology_trivial), (false, false));
        let c4 = verify_kernel_certificate(&cfg, &delta4).unwrap();
        assert_eq!((c4.group_trivial, c4.homology_trivial), (false, true));
    }
}
