//! Initial entries, line covers of point sets inside the block-diagonal
//! support, and the rank lower bound they give.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::sumrank::{LinearSpace, Profile, SumRankVector};

/// A position `(row, col)` of the `N x M` block-diagonal embedding, 0-based.
/// Displayed 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Position {
    pub row: usize,
    pub col: usize,
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row + 1, self.col + 1)
    }
}

/// A full row or column segment of one block, in embedding coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Line {
    Row { block: usize, index: usize },
    Col { block: usize, index: usize },
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Line::Row { block, index } => write!(f, "row {} (block {})", index + 1, block + 1),
            Line::Col { block, index } => write!(f, "col {} (block {})", index + 1, block + 1),
        }
    }
}

fn position_of(profile: &Profile, coord: usize) -> Position {
    let (row, col) = profile.embedded_position(coord);
    Position { row, col }
}

/// Lexicographically first nonzero position of the embedded matrix.
pub fn ini(b: &SumRankVector, profile: &Profile) -> Result<Position> {
    b.to_coords()
        .iter()
        .position(|e| !e.is_zero())
        .map(|c| position_of(profile, c))
        .ok_or(Error::ZeroElement)
}

/// Initial positions of the canonical echelon basis, one per basis element.
pub fn ini_set(space: &LinearSpace) -> BTreeSet<Position> {
    space
        .subspace()
        .pivots()
        .iter()
        .map(|&c| position_of(space.profile(), c))
        .collect()
}

/// Block containing an embedding position, if any.
fn block_of(profile: &Profile, p: Position) -> Option<usize> {
    let rows = profile.row_offsets();
    let cols = profile.col_offsets();
    (0..profile.t()).find(|&i| {
        let (n, m) = profile.dims()[i];
        (rows[i]..rows[i] + n).contains(&p.row) && (cols[i]..cols[i] + m).contains(&p.col)
    })
}

/// Minimum line cover of a point set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineCover {
    pub rho: usize,
    /// A cover of size `rho`; per block, the one using as many rows as possible.
    pub lines: Vec<Line>,
}

/// Minimum vertex cover of a bipartite graph on `rows + cols` vertices, via
/// maximum matching. Returns the covering rows and columns.
pub fn bipartite_min_cover(rows: usize, cols: usize, edges: &[(usize, usize)]) -> (Vec<usize>, Vec<usize>) {
    let mut adj = vec![Vec::new(); rows];
    for &(a, b) in edges {
        adj[a].push(b);
    }
    for a in &mut adj {
        a.sort_unstable();
        a.dedup();
    }
    let mut match_col: Vec<Option<usize>> = vec![None; cols];
    let mut match_row: Vec<Option<usize>> = vec![None; rows];
    fn augment(u: usize, adj: &[Vec<usize>], seen: &mut [bool], match_col: &mut [Option<usize>], match_row: &mut [Option<usize>]) -> bool {
        for &v in &adj[u] {
            if seen[v] {
                continue;
            }
            seen[v] = true;
            if match_col[v].is_none_or(|w| augment(w, adj, seen, match_col, match_row)) {
                match_col[v] = Some(u);
                match_row[u] = Some(v);
                return true;
            }
        }
        false
    }
    for u in 0..rows {
        let mut seen = vec![false; cols];
        augment(u, &adj, &mut seen, &mut match_col, &mut match_row);
    }
    // König: Z = vertices reachable from unmatched rows by alternating paths.
    let mut row_in_z = vec![false; rows];
    let mut col_in_z = vec![false; cols];
    let mut stack: Vec<usize> = (0..rows).filter(|&u| match_row[u].is_none()).collect();
    for &u in &stack {
        row_in_z[u] = true;
    }
    while let Some(u) = stack.pop() {
        for &v in &adj[u] {
            if col_in_z[v] {
                continue;
            }
            col_in_z[v] = true;
            if let Some(w) = match_col[v] {
                if !row_in_z[w] {
                    row_in_z[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    let cover_rows = (0..rows).filter(|&u| !row_in_z[u] && !adj[u].is_empty()).collect();
    let cover_cols = (0..cols).filter(|&v| col_in_z[v]).collect();
    (cover_rows, cover_cols)
}

/// `ρ`: the fewest block rows and columns whose union contains `points`.
pub fn rho(profile: &Profile, points: &BTreeSet<Position>) -> Result<LineCover> {
    let mut per_block = vec![Vec::new(); profile.t()];
    for &p in points {
        let b = block_of(profile, p)
            .ok_or_else(|| Error::OutOfRange(format!("position {p} lies outside every block")))?;
        per_block[b].push((p.row - profile.row_offsets()[b], p.col - profile.col_offsets()[b]));
    }
    let mut lines = Vec::new();
    for (b, edges) in per_block.iter().enumerate() {
        let (n, m) = profile.dims()[b];
        let (rows, cols) = bipartite_min_cover(n, m, edges);
        let r0 = profile.row_offsets()[b];
        let c0 = profile.col_offsets()[b];
        lines.extend(rows.into_iter().map(|i| Line::Row { block: b, index: r0 + i }));
        lines.extend(cols.into_iter().map(|j| Line::Col { block: b, index: c0 + j }));
    }
    Ok(LineCover { rho: lines.len(), lines })
}

/// `ρ` of the initial positions next to the true largest sum-rank in the span.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MeshulamReport {
    pub ini: BTreeSet<Position>,
    pub cover: LineCover,
    pub max_srk: usize,
    pub witness: SumRankVector,
}

impl MeshulamReport {
    /// The span contains an element of sum-rank at least `ρ`.
    pub fn holds(&self) -> bool {
        self.max_srk >= self.cover.rho
    }
}

pub fn meshulam_check(space: &LinearSpace, cutoff: u64) -> Result<MeshulamReport> {
    let ini = ini_set(space);
    let cover = rho(space.profile(), &ini)?;
    let (max_srk, witness) = space.max_srk(cutoff)?;
    Ok(MeshulamReport {
        ini,
        cover,
        max_srk,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::{Elem, Field};
    use crate::matrix::Matrix;

    fn p(s: &str) -> Profile {
        Profile::parse(s).unwrap()
    }

    fn pos(row: usize, col: usize) -> Position {
        Position { row, col }
    }

    /// Smallest number of rows and columns covering the points, by trying all line subsets.
    fn brute_cover(n: usize, m: usize, points: &[(usize, usize)]) -> usize {
        let lines = n + m;
        let mut best = lines;
        for mask in 0u32..(1 << lines) {
            let k = mask.count_ones() as usize;
            if k >= best {
                continue;
            }
            let covered = points
                .iter()
                .all(|&(a, b)| mask & (1 << a) != 0 || mask & (1 << (n + b)) != 0);
            if covered {
                best = k;
            }
        }
        best
    }

    #[test]
    fn konig_matches_brute_force() {
        for (n, m) in [(1, 1), (1, 3), (2, 2), (2, 3), (3, 3), (3, 4), (4, 4)] {
            let cells = n * m;
            let step = if cells > 12 { 37 } else { 1 };
            let mut mask = 0u32;
            while mask < (1 << cells) {
                let points: Vec<(usize, usize)> = (0..cells).filter(|c| mask & (1 << c) != 0).map(|c| (c / m, c % m)).collect();
                let (rows, cols) = bipartite_min_cover(n, m, &points);
                assert_eq!(rows.len() + cols.len(), brute_cover(n, m, &points), "{n}x{m} {points:?}");
                for &(a, b) in &points {
                    assert!(rows.contains(&a) || cols.contains(&b));
                }
                mask += step;
            }
        }
    }

    #[test]
    fn cover_prefers_rows() {
        let (rows, cols) = bipartite_min_cover(2, 2, &[(0, 0), (0, 1)]);
        assert_eq!((rows, cols), (vec![0], vec![]));
        let (rows, cols) = bipartite_min_cover(2, 2, &[(0, 0), (1, 0)]);
        assert_eq!((rows, cols), (vec![], vec![0]));
        let (rows, cols) = bipartite_min_cover(2, 2, &[(0, 0)]);
        assert_eq!((rows, cols), (vec![0], vec![]));
    }

    #[test]
    fn rho_examples() {
        let pr = p("2x2,1x1");
        assert_eq!(rho(&pr, &BTreeSet::new()).unwrap().rho, 0);
        assert_eq!(rho(&pr, &[pos(1, 1)].into()).unwrap().rho, 1);
        assert_eq!(rho(&pr, &[pos(0, 0), pos(1, 1)].into()).unwrap().rho, 2);
        assert_eq!(rho(&pr, &[pos(0, 0), pos(2, 2)].into()).unwrap().rho, 2);
        assert!(rho(&pr, &[pos(0, 2)].into()).is_err());
    }

    #[test]
    fn ini_examples() {
        let f = Field::new(2).unwrap();
        let pr = p("2x2,2x2");
        let e = |reps: &[u32]| Matrix::from_reps(&f, 2, 2, reps).unwrap();
        let b = SumRankVector::new(&pr, vec![e(&[1, 0, 0, 0]), e(&[0, 0, 0, 0])]).unwrap();
        assert_eq!(ini(&b, &pr).unwrap(), pos(0, 0));
        let b = SumRankVector::new(&pr, vec![e(&[0, 0, 0, 0]), e(&[1, 0, 0, 1])]).unwrap();
        assert_eq!(ini(&b, &pr).unwrap(), pos(2, 2));
        assert_eq!(ini(&b, &pr).unwrap().to_string(), "(3,3)");
        assert_eq!(ini(&SumRankVector::zero(&f, &pr), &pr), Err(Error::ZeroElement));
    }

    #[test]
    fn ini_sets() {
        let f = Field::new(2).unwrap();
        let pr = p("2x2");
        assert!(ini_set(&LinearSpace::from_subspace(&pr, crate::Subspace::zero(&f, 4)).unwrap()).is_empty());
        assert_eq!(ini_set(&LinearSpace::whole(&f, &pr)).len(), 4);
        // matrices with column space in <(1,1)>: both rows equal
        let v = |reps: [u32; 4]| {
            let c: Vec<Elem> = reps.iter().map(|&x| f.elem(x).unwrap()).collect();
            SumRankVector::from_coords(&f, &pr, &c).unwrap()
        };
        let col = LinearSpace::span(&f, &pr, &[v([1, 0, 1, 0]), v([0, 1, 0, 1])]).unwrap();
        assert_eq!(ini_set(&col), [pos(0, 0), pos(0, 1)].into());
        let report = meshulam_check(&col, 1 << 10).unwrap();
        assert_eq!((report.cover.rho, report.max_srk), (1, 1));

        let whole = meshulam_check(&LinearSpace::whole(&f, &p("3x3")), 1 << 10).unwrap();
        assert_eq!((whole.cover.rho, whole.max_srk), (3, 3));
    }
}
