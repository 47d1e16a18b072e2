//! Simply-laced Dynkin diagrams of rank at most 8.
//!
//! A diagram is a labeled tree on vertices `1..=rank` whose shape belongs to
//! one of the admitted families:
//!
//! - `A_n` (`n >= 1`): a path;
//! - `D_n` (`n >= 4`): one branch vertex with arm lengths `(1, 1, n-3)`;
//! - `E6`, `E7`, `E8`: one branch vertex with arm lengths `(1, 2, 2)`,
//!   `(1, 2, 3)`, `(1, 2, 4)`.
//!
//! Construction by family uses a fixed numbering (a chain `1 - 2 - ... - k`
//! with the extra vertex attached near one end), but [`DynkinDiagram::from_edges`]
//! accepts any labeling of an admitted tree and classifies it. All
//! downstream computations read only the adjacency structure, so relabeled
//! copies of the same shape produce identical invariants.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::Error;
use crate::Result;

/// Maximum admitted rank across all families.
pub const MAX_RANK: usize = 8;

/// The three simply-laced families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Family {
    A,
    D,
    E,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::A => write!(f, "A"),
            Family::D => write!(f, "D"),
            Family::E => write!(f, "E"),
        }
    }
}

/// A validated simply-laced diagram: vertices `1..=rank`, edges a tree of
/// admitted shape. Edges are stored with endpoints ordered `i < j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DynkinDiagram {
    family: Family,
    rank: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl DynkinDiagram {
    /// Builds the diagram of a family in its standard numbering.
    ///
    /// `A_n`: path `1 - 2 - ... - n`. `D_n`: path `1 - ... - (n-1)` with `n`
    /// attached to `n-2`. `E_n`: path `1 - ... - (n-1)` with `n` attached
    /// to `3`.
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let admitted = match family {
            Family::A => (1..=MAX_RANK).contains(&rank),
            Family::D => (4..=MAX_RANK).contains(&rank),
            Family::E => (6..=MAX_RANK).contains(&rank),
        };
        if !admitted {
            return Err(Error::InvalidDiagram(format!(
                "{family}{rank} is not an admitted diagram"
            )));
        }
        let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
        let chain = match family {
            Family::A => rank,
            Family::D | Family::E => rank - 1,
        };
        for i in 1..chain {
            edges.insert((i, i + 1));
        }
        match family {
            Family::A => {}
            Family::D => {
                edges.insert((rank - 2, rank));
            }
            Family::E => {
                edges.insert((3, rank));
            }
        }
        Ok(Self {
            family,
            rank,
            edges,
        })
    }

    /// Classifies an arbitrary labeled tree. `vertices` must be exactly
    /// `1..=rank` in some order; edges may use any admitted labeling.
    pub fn from_edges(vertices: &[usize], edge_list: &[(usize, usize)]) -> Result<Self> {
        let rank = vertices.len();
        if rank == 0 {
            return Err(Error::InvalidDiagram("empty vertex set".into()));
        }
        if rank > MAX_RANK {
            return Err(Error::InvalidDiagram(format!(
                "rank {rank} exceeds the maximum rank {MAX_RANK}"
            )));
        }
        let sorted: BTreeSet<usize> = vertices.iter().copied().collect();
        if sorted.len() != rank
            || *sorted.iter().next().unwrap() != 1
            || *sorted.iter().last().unwrap() != rank
        {
            return Err(Error::InvalidDiagram(format!(
                "vertices must be exactly 1..={rank} without repetition"
            )));
        }

        let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
        for &(a, b) in edge_list {
            if a == b {
                return Err(Error::InvalidDiagram(format!("loop at vertex {a}")));
            }
            if !(1..=rank).contains(&a) || !(1..=rank).contains(&b) {
                return Err(Error::InvalidDiagram(format!(
                    "edge ({a}, {b}) leaves the vertex range 1..={rank}"
                )));
            }
            if !edges.insert((a.min(b), a.max(b))) {
                return Err(Error::InvalidDiagram(format!("duplicate edge ({a}, {b})")));
            }
        }
        if edges.len() != rank - 1 {
            return Err(Error::InvalidDiagram(format!(
                "a tree on {rank} vertices has {} edges, got {}",
                rank - 1,
                edges.len()
            )));
        }

        // Connectivity: breadth-first search from vertex 1.
        let mut adj = vec![Vec::new(); rank + 1];
        for &(a, b) in &edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut seen = vec![false; rank + 1];
        let mut queue = vec![1usize];
        seen[1] = true;
        while let Some(v) = queue.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push(w);
                }
            }
        }
        if seen[1..].iter().any(|s| !s) {
            return Err(Error::InvalidDiagram("graph is not connected".into()));
        }

        let family = classify_tree(rank, &adj)?;
        Ok(Self {
            family,
            rank,
            edges,
        })
    }

    /// Parses `"A5"`, `"D4"`, `"E8"`, or a JSON object
    /// `{"vertices": [...], "edges": [[i, j], ...]}`.
    pub fn parse(text: &str) -> Result<Self> {
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return Err(Error::Parse {
                pos: 0,
                message: "empty diagram".into(),
            });
        }
        if trimmed.starts_with('{') {
            #[derive(serde::Deserialize)]
            struct Raw {
                vertices: Vec<usize>,
                edges: Vec<(usize, usize)>,
            }
            let raw: Raw = serde_json::from_str(trimmed).map_err(|e| Error::Parse {
                pos: e.column().saturating_sub(1),
                message: format!("invalid diagram JSON: {e}"),
            })?;
            return Self::from_edges(&raw.vertices, &raw.edges);
        }
        let family = match trimmed.chars().next().unwrap() {
            'A' => Family::A,
            'D' => Family::D,
            'E' => Family::E,
            c => {
                return Err(Error::Parse {
                    pos: 0,
                    message: format!("unknown family `{c}`; expected A, D, or E"),
                })
            }
        };
        let rank: usize = trimmed[1..].parse().map_err(|_| Error::Parse {
            pos: 1,
            message: format!("invalid rank `{}`", &trimmed[1..]),
        })?;
        Self::new(family, rank)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `"A5"`, `"D4"`, `"E8"`, ... (shape only; labeling is not encoded).
    pub fn name(&self) -> String {
        format!("{}{}", self.family, self.rank)
    }

    /// Vertex labels, always `1..=rank`.
    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        1..=self.rank
    }

    /// Edges with endpoints ordered `i < j`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    /// Checks that a signed letter names a vertex: `1 <= |letter| <= rank`.
    pub fn check_letter(&self, letter: i64) -> Result<usize> {
        let abs = letter.unsigned_abs() as usize;
        if letter == 0 || abs > self.rank {
            return Err(Error::LetterOutOfRange {
                letter,
                rank: self.rank,
            });
        }
        Ok(abs)
    }

    /// The Cartan matrix `C` with `C[i][i] = 2`, `C[i][j] = -1` for edges,
    /// `0` otherwise, indexed by vertex label minus one.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut c = vec![vec![0i64; n]; n];
        for (i, row) in c.iter_mut().enumerate() {
            row[i] = 2;
        }
        for &(a, b) in &self.edges {
            c[a - 1][b - 1] = -1;
            c[b - 1][a - 1] = -1;
        }
        c
    }
}

impl fmt::Display for DynkinDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Classifies a validated tree by its branch structure.
fn classify_tree(rank: usize, adj: &[Vec<usize>]) -> Result<Family> {
    let max_degree = (1..=rank).map(|v| adj[v].len()).max().unwrap_or(0);
    if max_degree > 3 {
        return Err(Error::InvalidDiagram(
            "a vertex of degree 4 or more is not simply laced of finite type".into(),
        ));
    }
    let branches: Vec<usize> = (1..=rank).filter(|&v| adj[v].len() == 3).collect();
    match branches.len() {
        0 => Ok(Family::A),
        1 => {
            let center = branches[0];
            // Arm length = vertex count walking away from the branch vertex.
            let mut arms: Vec<usize> = adj[center]
                .iter()
                .map(|&start| {
                    let (mut prev, mut cur, mut len) = (center, start, 1);
                    while let Some(&next) = adj[cur].iter().find(|&&w| w != prev) {
                        prev = cur;
                        cur = next;
                        len += 1;
                    }
                    len
                })
                .collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, _] => Ok(Family::D),
                [1, 2, 2] => Ok(Family::E),
                [1, 2, 3] => Ok(Family::E),
                [1, 2, 4] => Ok(Family::E),
                _ => Err(Error::InvalidDiagram(format!(
                    "arm lengths {arms:?} are not of finite simply-laced type"
                ))),
            }
        }
        _ => Err(Error::InvalidDiagram(
            "more than one branch vertex is not of finite type".into(),
        )),
    }
}

/// All admitted diagrams in their standard numbering, smallest first.
/// Useful for exhaustive checks.
pub fn all_admitted() -> Vec<DynkinDiagram> {
    let mut out = Vec::new();
    for n in 1..=MAX_RANK {
        out.push(DynkinDiagram::new(Family::A, n).unwrap());
    }
    for n in 4..=MAX_RANK {
        out.push(DynkinDiagram::new(Family::D, n).unwrap());
    }
    for n in 6..=MAX_RANK {
        out.push(DynkinDiagram::new(Family::E, n).unwrap());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_numbering_shapes() {
        let a3 = DynkinDiagram::new(Family::A, 3).unwrap();
        assert_eq!(a3.edges().collect::<Vec<_>>(), vec![(1, 2), (2, 3)]);

        let d4 = DynkinDiagram::new(Family::D, 4).unwrap();
        assert_eq!(d4.edges().collect::<Vec<_>>(), vec![(1, 2), (2, 3), (2, 4)]);
        assert_eq!(d4.degree(2), 3);

        let e8 = DynkinDiagram::new(Family::E, 8).unwrap();
        assert_eq!(e8.rank(), 8);
        assert!(e8.adjacent(3, 8));
        assert_eq!(e8.degree(3), 3);
        assert_eq!(e8.edges().count(), 7);
    }

    #[test]
    fn rank_bounds() {
        assert!(DynkinDiagram::new(Family::A, 0).is_err());
        assert!(DynkinDiagram::new(Family::A, 9).is_err());
        assert!(DynkinDiagram::new(Family::D, 3).is_err());
        assert!(DynkinDiagram::new(Family::E, 5).is_err());
        assert!(DynkinDiagram::new(Family::E, 9).is_err());
        assert!(DynkinDiagram::new(Family::A, 1).is_ok());
        assert!(DynkinDiagram::new(Family::D, 4).is_ok());
    }

    #[test]
    fn classification_recovers_families() {
        for d in all_admitted() {
            let vertices: Vec<usize> = d.vertices().collect();
            let edges: Vec<(usize, usize)> = d.edges().collect();
            let re = DynkinDiagram::from_edges(&vertices, &edges).unwrap();
            assert_eq!(re.family(), d.family(), "{}", d.name());
            assert_eq!(re.rank(), d.rank());
        }
    }

    #[test]
    fn classification_is_label_invariant() {
        // E8 with its chain numbered backwards and the short arm relabeled.
        let edges = [(8, 7), (7, 6), (6, 5), (5, 4), (4, 3), (3, 2), (6, 1)];
        let d = DynkinDiagram::from_edges(&[1, 2, 3, 4, 5, 6, 7, 8], &edges).unwrap();
        assert_eq!(d.name(), "E8");

        // D4 as a star centered at vertex 1.
        let d4 = DynkinDiagram::from_edges(&[1, 2, 3, 4], &[(1, 2), (1, 3), (1, 4)]).unwrap();
        assert_eq!(d4.name(), "D4");

        // A path in scrambled order is type A.
        let a5 =
            DynkinDiagram::from_edges(&[1, 2, 3, 4, 5], &[(3, 1), (1, 4), (4, 2), (2, 5)]).unwrap();
        assert_eq!(a5.name(), "A5");
    }

    #[test]
    fn rejects_bad_trees() {
        // Cycle.
        assert!(DynkinDiagram::from_edges(&[1, 2, 3], &[(1, 2), (2, 3), (1, 3)]).is_err());
        // Disconnected with the right edge count.
        assert!(DynkinDiagram::from_edges(&[1, 2, 3, 4], &[(1, 2), (1, 2), (3, 4)]).is_err());
        // Degree-4 star.
        assert!(
            DynkinDiagram::from_edges(&[1, 2, 3, 4, 5], &[(1, 2), (1, 3), (1, 4), (1, 5)]).is_err()
        );
        // Two branch vertices.
        let two_branch = [(1, 2), (1, 3), (1, 4), (4, 5), (5, 6), (5, 7)];
        assert!(DynkinDiagram::from_edges(&[1, 2, 3, 4, 5, 6, 7], &two_branch).is_err());
        // Affine E6 shape: arms (2, 2, 2).
        let affine = [(1, 2), (2, 3), (3, 4), (3, 5), (5, 6), (3, 7)];
        assert!(DynkinDiagram::from_edges(&[1, 2, 3, 4, 5, 6, 7], &affine).is_err());
        // Vertex labels not 1..=rank.
        assert!(DynkinDiagram::from_edges(&[1, 2, 4], &[(1, 2), (2, 4)]).is_err());
        // Loop.
        assert!(DynkinDiagram::from_edges(&[1, 2], &[(1, 1)]).is_err());
    }

    #[test]
    fn parse_names_and_json() {
        assert_eq!(DynkinDiagram::parse("E8").unwrap().name(), "E8");
        assert_eq!(DynkinDiagram::parse(" D5 ").unwrap().name(), "D5");
        assert_eq!(DynkinDiagram::parse("A1").unwrap().rank(), 1);
        let json = r#"{"vertices": [1, 2, 3, 4], "edges": [[1, 2], [2, 3], [2, 4]]}"#;
        assert_eq!(DynkinDiagram::parse(json).unwrap().name(), "D4");

        assert!(DynkinDiagram::parse("").is_err());
        assert!(DynkinDiagram::parse("F4").is_err());
        assert!(DynkinDiagram::parse("Axe").is_err());
        assert!(DynkinDiagram::parse("{\"vertices\": [1]}").is_err());
    }

    #[test]
    fn cartan_matrix_of_a2() {
        let a2 = DynkinDiagram::new(Family::A, 2).unwrap();
        assert_eq!(a2.cartan_matrix(), vec![vec![2, -1], vec![-1, 2]]);
    }

    #[test]
    fn letter_validation() {
        let a3 = DynkinDiagram::new(Family::A, 3).unwrap();
        assert_eq!(a3.check_letter(-3).unwrap(), 3);
        assert!(a3.check_letter(0).is_err());
        assert!(a3.check_letter(4).is_err());
    }
}
