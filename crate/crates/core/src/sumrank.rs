//! The sum-rank metric space `Π = F^{n1 x m1} ⊕ ... ⊕ F^{nt x mt}`.
//!
//! Elements are tuples of matrices and their weight is the sum of the block
//! ranks. Internally every element is also a flat coordinate vector of length
//! `Σ n_i m_i`: the blocks' row-major entries concatenated in block order.
//! Because the blocks sit on the diagonal of the `N x M` embedding, this is
//! exactly the row-major listing of the block-diagonal embedding restricted to
//! its support, so echelon pivots in these coordinates are the initial-entry
//! positions of the embedded matrices.

use std::fmt;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::matrix::{content_lines, rank_in_place, read_matrix, Matrix, SpanIter, Subspace};

/// Default cap on the number of elements an exhaustive routine may visit.
pub const DEFAULT_CUTOFF: u64 = 1 << 20;

/// Block shapes of `Π`, normalized so that `n_i <= m_i` and the `m_i` are
/// non-increasing (ties broken by `n_i` descending).
#[derive(Clone)]
pub struct Profile {
    dims: Vec<(usize, usize)>,
    /// `origin[i]` is the input position of canonical block `i`.
    origin: Vec<usize>,
    /// Whether canonical block `i` was transposed on input.
    transposed: Vec<bool>,
    coord_offsets: Vec<usize>,
    row_offsets: Vec<usize>,
    col_offsets: Vec<usize>,
}

impl PartialEq for Profile {
    fn eq(&self, other: &Self) -> bool {
        self.dims == other.dims
    }
}

impl Eq for Profile {}

impl std::hash::Hash for Profile {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.dims.hash(state);
    }
}

impl Profile {
    /// Canonicalizes a list of `(rows, cols)` block shapes.
    pub fn new(shapes: &[(usize, usize)]) -> Result<Profile> {
        if shapes.is_empty() {
            return Err(Error::Parse("a profile needs at least one block".into()));
        }
        if let Some(&(n, m)) = shapes.iter().find(|&&(n, m)| n == 0 || m == 0) {
            return Err(Error::Parse(format!("block {n}x{m} is empty")));
        }
        let mut blocks: Vec<(usize, (usize, usize), bool)> = shapes
            .iter()
            .enumerate()
            .map(|(i, &(n, m))| if n > m { (i, (m, n), true) } else { (i, (n, m), false) })
            .collect();
        blocks.sort_by_key(|b| std::cmp::Reverse((b.1 .1, b.1 .0)));
        let dims: Vec<_> = blocks.iter().map(|b| b.1).collect();
        let prefix = |f: &dyn Fn(&(usize, usize)) -> usize| {
            let mut acc = vec![0];
            for d in &dims {
                acc.push(acc.last().unwrap() + f(d));
            }
            acc
        };
        Ok(Profile {
            coord_offsets: prefix(&|&(n, m)| n * m),
            row_offsets: prefix(&|&(n, _)| n),
            col_offsets: prefix(&|&(_, m)| m),
            origin: blocks.iter().map(|b| b.0).collect(),
            transposed: blocks.iter().map(|b| b.2).collect(),
            dims,
        })
    }

    /// Parses `"n1xm1,n2xm2,..."`, e.g. `"3x3,2x2"`.
    pub fn parse(s: &str) -> Result<Profile> {
        let shapes = s
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                let (n, m) = tok
                    .split_once(['x', 'X'])
                    .ok_or_else(|| Error::Parse(format!("bad block {tok:?}, expected NxM")))?;
                let n = n.trim().parse().map_err(|_| Error::Parse(format!("bad block {tok:?}")))?;
                let m = m.trim().parse().map_err(|_| Error::Parse(format!("bad block {tok:?}")))?;
                Ok((n, m))
            })
            .collect::<Result<Vec<_>>>()?;
        Profile::new(&shapes)
    }

    /// Number of blocks `t`.
    pub fn t(&self) -> usize {
        self.dims.len()
    }

    pub fn dims(&self) -> &[(usize, usize)] {
        &self.dims
    }

    pub fn n(&self, i: usize) -> usize {
        self.dims[i].0
    }

    pub fn m(&self, i: usize) -> usize {
        self.dims[i].1
    }

    /// `N = Σ n_i`, the largest possible sum-rank.
    pub fn total_rows(&self) -> usize {
        *self.row_offsets.last().unwrap()
    }

    /// `M = Σ m_i`.
    pub fn total_cols(&self) -> usize {
        *self.col_offsets.last().unwrap()
    }

    /// Dimension of `Π` over the field, `Σ n_i m_i`.
    pub fn dim(&self) -> usize {
        *self.coord_offsets.last().unwrap()
    }

    /// `|Π| = q^{Σ n_i m_i}`.
    pub fn cardinality(&self, q: u32) -> BigUint {
        BigUint::from(q).pow(self.dim() as u32)
    }

    /// First flat coordinate of block `i`.
    pub fn coord_offset(&self, i: usize) -> usize {
        self.coord_offsets[i]
    }

    /// Prefix sums `N_i` (length `t + 1`, starting at 0).
    pub fn row_offsets(&self) -> &[usize] {
        &self.row_offsets
    }

    /// Prefix sums `M_i` (length `t + 1`, starting at 0).
    pub fn col_offsets(&self) -> &[usize] {
        &self.col_offsets
    }

    /// Maps a flat coordinate to `(block, row, col)` inside that block.
    pub fn locate(&self, coord: usize) -> (usize, usize, usize) {
        let block = self.coord_offsets.partition_point(|&o| o <= coord) - 1;
        let within = coord - self.coord_offsets[block];
        let m = self.dims[block].1;
        (block, within / m, within % m)
    }

    /// Position of a flat coordinate in the `N x M` block-diagonal embedding.
    pub fn embedded_position(&self, coord: usize) -> (usize, usize) {
        let (b, r, c) = self.locate(coord);
        (self.row_offsets[b] + r, self.col_offsets[b] + c)
    }

    /// Input position of canonical block `i`.
    pub fn origin(&self, i: usize) -> usize {
        self.origin[i]
    }

    pub fn was_transposed(&self, i: usize) -> bool {
        self.transposed[i]
    }

    /// Whether canonicalization changed the input (reordering or transposition).
    pub fn was_normalized(&self) -> bool {
        self.transposed.iter().any(|&t| t) || self.origin.iter().enumerate().any(|(i, &o)| i != o)
    }

    /// Profile made of the given canonical blocks, in increasing order.
    pub fn sub_profile(&self, blocks: &[usize]) -> Result<Profile> {
        Profile::new(&blocks.iter().map(|&i| self.dims[i]).collect::<Vec<_>>())
    }

    fn check_enumerable(&self, q: u32, cutoff: u64) -> Result<u64> {
        let size = self.cardinality(q);
        match u64::try_from(&size) {
            Ok(s) if s <= cutoff => Ok(s),
            _ => Err(Error::TooLargeToEnumerate {
                size: size.to_string(),
                cutoff,
            }),
        }
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.dims.iter().map(|(n, m)| format!("{n}x{m}")).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Profile({self})")
    }
}

/// Row-major listing of a matrix's entries.
pub fn phi_vectorize(z: &Matrix) -> Vec<Elem> {
    z.entries().to_vec()
}

/// Inverse of [`phi_vectorize`].
pub fn phi_inverse(field: &Field, rows: usize, cols: usize, v: &[Elem]) -> Result<Matrix> {
    Matrix::from_vec(field, rows, cols, v.to_vec())
}

/// Sum-rank of a flat coordinate vector. `scratch` must hold at least the
/// largest block.
pub fn srk_of_coords(field: &Field, profile: &Profile, coords: &[Elem], scratch: &mut Vec<Elem>) -> usize {
    let mut total = 0;
    for (i, &(n, m)) in profile.dims.iter().enumerate() {
        let start = profile.coord_offsets[i];
        let block = &coords[start..start + n * m];
        if block.iter().all(|e| e.is_zero()) {
            continue;
        }
        scratch.clear();
        scratch.extend_from_slice(block);
        total += rank_in_place(field, n, m, scratch);
    }
    total
}

/// An element `(X_1, ..., X_t)` of `Π`, blocks in canonical order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SumRankVector {
    blocks: Vec<Matrix>,
}

impl SumRankVector {
    /// Wraps blocks that already follow the canonical profile order and orientation.
    pub fn new(profile: &Profile, blocks: Vec<Matrix>) -> Result<SumRankVector> {
        if blocks.len() != profile.t() {
            return Err(Error::ProfileMismatch);
        }
        let field = blocks[0].field().clone();
        for (b, &(n, m)) in blocks.iter().zip(&profile.dims) {
            if (b.rows(), b.cols()) != (n, m) || *b.field() != field {
                return Err(Error::ProfileMismatch);
            }
        }
        Ok(SumRankVector { blocks })
    }

    /// Accepts blocks in the order and orientation the profile was written in.
    pub fn from_input_blocks(profile: &Profile, blocks: Vec<Matrix>) -> Result<SumRankVector> {
        if blocks.len() != profile.t() {
            return Err(Error::ProfileMismatch);
        }
        let canonical = (0..profile.t())
            .map(|i| {
                let b = &blocks[profile.origin[i]];
                if profile.transposed[i] {
                    b.transpose()
                } else {
                    b.clone()
                }
            })
            .collect();
        SumRankVector::new(profile, canonical)
    }

    pub fn zero(field: &Field, profile: &Profile) -> SumRankVector {
        SumRankVector {
            blocks: profile.dims.iter().map(|&(n, m)| Matrix::zeros(field, n, m)).collect(),
        }
    }

    /// Rebuilds an element from its flat coordinates.
    pub fn from_coords(field: &Field, profile: &Profile, coords: &[Elem]) -> Result<SumRankVector> {
        if coords.len() != profile.dim() {
            return Err(Error::DimensionMismatch {
                expected: profile.dim(),
                found: coords.len(),
            });
        }
        let blocks = profile
            .dims
            .iter()
            .enumerate()
            .map(|(i, &(n, m))| {
                let s = profile.coord_offsets[i];
                phi_inverse(field, n, m, &coords[s..s + n * m])
            })
            .collect::<Result<_>>()?;
        Ok(SumRankVector { blocks })
    }

    /// Flat coordinates: blocks' row-major entries, concatenated.
    pub fn to_coords(&self) -> Vec<Elem> {
        self.blocks.iter().flat_map(|b| b.entries().iter().copied()).collect()
    }

    pub fn blocks(&self) -> &[Matrix] {
        &self.blocks
    }

    pub fn field(&self) -> &Field {
        self.blocks[0].field()
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Matrix::is_zero)
    }

    /// `srk(X) = Σ rk(X_i)`.
    pub fn srk(&self) -> usize {
        self.blocks.iter().map(Matrix::rank).sum()
    }

    fn same_shape(&self, other: &SumRankVector) -> Result<()> {
        let shape = |v: &SumRankVector| -> Vec<(usize, usize)> {
            v.blocks.iter().map(|b| (b.rows(), b.cols())).collect()
        };
        if shape(self) != shape(other) || self.field() != other.field() {
            return Err(Error::ProfileMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &SumRankVector) -> Result<SumRankVector> {
        self.same_shape(other)?;
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| a.add(b))
            .collect::<Result<_>>()?;
        Ok(SumRankVector { blocks })
    }

    pub fn sub(&self, other: &SumRankVector) -> Result<SumRankVector> {
        self.same_shape(other)?;
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| a.sub(b))
            .collect::<Result<_>>()?;
        Ok(SumRankVector { blocks })
    }

    /// `srk(X - Y)`.
    pub fn srk_distance(&self, other: &SumRankVector) -> Result<usize> {
        Ok(self.sub(other)?.srk())
    }

    /// The `N x M` block-diagonal matrix with the blocks on its diagonal.
    pub fn psi_embed(&self) -> Matrix {
        let rows: usize = self.blocks.iter().map(Matrix::rows).sum();
        let cols: usize = self.blocks.iter().map(Matrix::cols).sum();
        let mut out = Matrix::zeros(self.field(), rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in &self.blocks {
            for i in 0..b.rows() {
                for j in 0..b.cols() {
                    out.set(r0 + i, c0 + j, b.get(i, j));
                }
            }
            r0 += b.rows();
            c0 += b.cols();
        }
        out
    }

    /// Blocks in the order and orientation of the profile as originally written.
    pub fn to_input_blocks(&self, profile: &Profile) -> Vec<Matrix> {
        let mut out: Vec<Option<Matrix>> = vec![None; profile.t()];
        for (i, b) in self.blocks.iter().enumerate() {
            out[profile.origin[i]] = Some(if profile.transposed[i] { b.transpose() } else { b.clone() });
        }
        out.into_iter().map(|b| b.expect("origin is a permutation")).collect()
    }

    /// File form: the canonical profile line followed by every block in matrix text form.
    pub fn to_text(&self, profile: &Profile) -> String {
        let mut s = format!("{profile}\n");
        for b in &self.blocks {
            s.push_str(&b.to_text());
        }
        s
    }
}

/// Reads every element stored in `text`: each record is a profile line
/// followed by its blocks, written in the record's own block order.
/// Every record must describe the same canonical profile.
pub fn parse_vectors(text: &str, field: &Field) -> Result<(Profile, Vec<SumRankVector>)> {
    let mut lines = content_lines(text).peekable();
    let mut profile: Option<Profile> = None;
    let mut out = Vec::new();
    while let Some(line) = lines.next() {
        let p = Profile::parse(line)?;
        if let Some(prev) = &profile {
            if *prev != p {
                return Err(Error::ProfileMismatch);
            }
        }
        let mut blocks = Vec::with_capacity(p.t());
        for _ in 0..p.t() {
            blocks.push(read_matrix(&mut lines, Some(field))?);
        }
        // blocks were written in this record's input order
        let input_shapes: Vec<(usize, usize)> = (0..p.t())
            .map(|j| {
                let i = p.origin.iter().position(|&o| o == j).unwrap();
                if p.transposed[i] {
                    (p.dims[i].1, p.dims[i].0)
                } else {
                    p.dims[i]
                }
            })
            .collect();
        for (b, &(n, m)) in blocks.iter().zip(&input_shapes) {
            if (b.rows(), b.cols()) != (n, m) {
                return Err(Error::Parse(format!(
                    "block is {}x{} but the profile line says {n}x{m}",
                    b.rows(),
                    b.cols()
                )));
            }
        }
        out.push(SumRankVector::from_input_blocks(&p, blocks)?);
        profile.get_or_insert(p);
    }
    let profile = profile.ok_or_else(|| Error::Parse("no elements found".into()))?;
    Ok((profile, out))
}

/// An `F`-linear subspace of `Π`, stored as a canonical echelon basis in flat coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearSpace {
    profile: Profile,
    space: Subspace,
}

impl LinearSpace {
    pub fn span(field: &Field, profile: &Profile, vectors: &[SumRankVector]) -> Result<LinearSpace> {
        let coords = vectors.iter().map(|v| v.to_coords());
        Ok(LinearSpace {
            profile: profile.clone(),
            space: Subspace::span(field, profile.dim(), coords)?,
        })
    }

    pub fn from_subspace(profile: &Profile, space: Subspace) -> Result<LinearSpace> {
        if space.ambient_dim() != profile.dim() {
            return Err(Error::DimensionMismatch {
                expected: profile.dim(),
                found: space.ambient_dim(),
            });
        }
        Ok(LinearSpace {
            profile: profile.clone(),
            space,
        })
    }

    pub fn whole(field: &Field, profile: &Profile) -> LinearSpace {
        LinearSpace {
            profile: profile.clone(),
            space: Subspace::full(field, profile.dim()),
        }
    }

    pub fn profile(&self) -> &Profile {
        &self.profile
    }

    pub fn field(&self) -> &Field {
        self.space.field()
    }

    pub fn subspace(&self) -> &Subspace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// The canonical basis as elements of `Π`.
    pub fn basis(&self) -> Vec<SumRankVector> {
        self.space
            .basis()
            .iter()
            .map(|c| SumRankVector::from_coords(self.field(), &self.profile, c).expect("basis has ambient length"))
            .collect()
    }

    pub fn contains(&self, v: &SumRankVector) -> Result<bool> {
        self.space.contains(&v.to_coords())
    }

    /// Walks all `q^dim` elements as flat coordinates.
    pub fn elements(&self) -> SpanIter<'_> {
        self.space.elements()
    }

    /// Largest sum-rank in the space and an element attaining it, by enumeration.
    pub fn max_srk(&self, cutoff: u64) -> Result<(usize, SumRankVector)> {
        let size = self.space.size().filter(|&s| s <= cutoff as u128);
        if size.is_none() {
            return Err(Error::TooLargeToEnumerate {
                size: BigUint::from(self.field().q()).pow(self.dim() as u32).to_string(),
                cutoff,
            });
        }
        let field = self.field();
        let mut best = 0;
        let mut witness = vec![Elem::ZERO; self.profile.dim()];
        let mut scratch = Vec::new();
        let mut it = self.elements();
        while let Some(v) = it.next_ref() {
            let w = srk_of_coords(field, &self.profile, v, &mut scratch);
            if w > best {
                best = w;
                witness.copy_from_slice(v);
            }
        }
        Ok((best, SumRankVector::from_coords(field, &self.profile, &witness)?))
    }

    /// Projection onto the chosen canonical blocks (as a space over the sub-profile).
    pub fn project(&self, blocks: &[usize]) -> Result<LinearSpace> {
        let sub = self.profile.sub_profile(blocks)?;
        let pick = |c: &Vec<Elem>| -> Vec<Elem> {
            blocks
                .iter()
                .flat_map(|&b| {
                    let s = self.profile.coord_offset(b);
                    let (n, m) = self.profile.dims[b];
                    c[s..s + n * m].iter().copied()
                })
                .collect()
        };
        let space = Subspace::span(self.field(), sub.dim(), self.space.basis().iter().map(pick))?;
        Ok(LinearSpace { profile: sub, space })
    }
}

/// Per-shape lookup data for exhaustive enumeration: a block matrix is
/// identified by the base-`q` number formed from its row-major entries
/// (first entry least significant).
struct BlockCodec {
    n: usize,
    m: usize,
    q: u32,
    count: usize,
}

impl BlockCodec {
    fn new(field: &Field, n: usize, m: usize) -> BlockCodec {
        BlockCodec {
            n,
            m,
            q: field.q(),
            count: (field.q() as usize).pow((n * m) as u32),
        }
    }

    fn decode(&self, mut idx: usize, out: &mut [Elem]) {
        for x in out.iter_mut() {
            *x = Elem::from_rep_unchecked((idx % self.q as usize) as u32);
            idx /= self.q as usize;
        }
    }

    /// `rank(block(idx) - center)` for every block index.
    fn distance_table(&self, field: &Field, center: &[Elem]) -> Vec<u8> {
        let mut buf = vec![Elem::ZERO; self.n * self.m];
        (0..self.count)
            .map(|idx| {
                self.decode(idx, &mut buf);
                for (x, &c) in buf.iter_mut().zip(center) {
                    *x = field.sub(*x, c);
                }
                rank_in_place(field, self.n, self.m, &mut buf) as u8
            })
            .collect()
    }
}

fn center_tables(field: &Field, profile: &Profile, center: &[Elem]) -> Vec<Vec<u8>> {
    profile
        .dims
        .iter()
        .enumerate()
        .map(|(i, &(n, m))| {
            let s = profile.coord_offsets[i];
            BlockCodec::new(field, n, m).distance_table(field, &center[s..s + n * m])
        })
        .collect()
}

/// Visits every element of `Π` as a tuple of block indices, handing the
/// per-center distance vectors to `visit`. Work is split over the first
/// block's values; the fold is an integer sum so the result does not depend
/// on the split.
fn enumerate_distances<F>(tables: &[Vec<Vec<u8>>], out_len: usize, visit: F) -> Vec<u64>
where
    F: Fn(&[usize], &mut [u64]) + Sync,
{
    let t = tables[0].len();
    let radix: Vec<usize> = tables[0].iter().map(Vec::len).collect();
    (0..radix[0])
        .into_par_iter()
        .map(|first| {
            let mut acc = vec![0u64; out_len];
            let mut idx = vec![0usize; t];
            idx[0] = first;
            let mut dists = vec![0usize; tables.len()];
            loop {
                for (k, tab) in tables.iter().enumerate() {
                    dists[k] = idx.iter().zip(tab).map(|(&i, tb)| tb[i] as usize).sum();
                }
                visit(&dists, &mut acc);
                // advance blocks 1..t
                let mut pos = 1;
                while pos < t {
                    idx[pos] += 1;
                    if idx[pos] < radix[pos] {
                        break;
                    }
                    idx[pos] = 0;
                    pos += 1;
                }
                if pos == t {
                    break;
                }
            }
            acc
        })
        .reduce(
            || vec![0u64; out_len],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        )
}

/// Number of elements of each sum-rank weight `0..=N`, by visiting all of `Π`.
pub fn weight_histogram(field: &Field, profile: &Profile, cutoff: u64) -> Result<Vec<u64>> {
    profile.check_enumerable(field.q(), cutoff)?;
    let zero = vec![Elem::ZERO; profile.dim()];
    let tables = vec![center_tables(field, profile, &zero)];
    Ok(enumerate_distances(&tables, profile.total_rows() + 1, |d, acc| acc[d[0]] += 1))
}

/// `|{Z : srk(Z - c_k) = r_k for every k}|` by visiting all of `Π`.
pub fn census(field: &Field, profile: &Profile, constraints: &[(&SumRankVector, usize)], cutoff: u64) -> Result<u64> {
    profile.check_enumerable(field.q(), cutoff)?;
    let tables: Vec<_> = constraints
        .iter()
        .map(|(c, _)| center_tables(field, profile, &c.to_coords()))
        .collect();
    if tables.is_empty() {
        return Ok(profile.cardinality(field.q()).try_into().expect("checked against cutoff"));
    }
    let want: Vec<usize> = constraints.iter().map(|c| c.1).collect();
    let counts = enumerate_distances(&tables, 1, |d, acc| {
        if d == want.as_slice() {
            acc[0] += 1;
        }
    });
    Ok(counts[0])
}

/// Number of elements at sum-rank distance exactly `r` from `center`.
pub fn sphere_census(field: &Field, profile: &Profile, center: &SumRankVector, r: usize, cutoff: u64) -> Result<u64> {
    census(field, profile, &[(center, r)], cutoff)
}

/// Index of an element in the mixed-radix numbering used by the graph routines.
fn element_index(q: u64, coords: &[Elem]) -> u64 {
    coords.iter().rev().fold(0, |acc, e| acc * q + e.rep() as u64)
}

fn element_coords(q: u64, mut idx: u64, out: &mut [Elem]) {
    for x in out.iter_mut() {
        *x = Elem::from_rep_unchecked((idx % q) as u32);
        idx /= q;
    }
}

/// Elements of sum-rank one: a single nonzero block of rank one.
fn weight_one_elements(field: &Field, profile: &Profile) -> Vec<Vec<Elem>> {
    let mut out = Vec::new();
    for (i, &(n, m)) in profile.dims.iter().enumerate() {
        let codec = BlockCodec::new(field, n, m);
        let mut buf = vec![Elem::ZERO; n * m];
        let mut scratch = Vec::with_capacity(n * m);
        for idx in 1..codec.count {
            codec.decode(idx, &mut buf);
            scratch.clear();
            scratch.extend_from_slice(&buf);
            if rank_in_place(field, n, m, &mut scratch) == 1 {
                let mut v = vec![Elem::ZERO; profile.dim()];
                let s = profile.coord_offsets[i];
                v[s..s + n * m].copy_from_slice(&buf);
                out.push(v);
            }
        }
    }
    out
}

/// Breadth-first distances from `source` in the graph on `Π` whose edges join
/// elements at sum-rank distance one. Indexed by [`element_index`] order
/// (first flat coordinate least significant).
pub fn geodesic_distances_from(field: &Field, profile: &Profile, source: &SumRankVector, cutoff: u64) -> Result<Vec<u32>> {
    let size = profile.check_enumerable(field.q(), cutoff)?;
    let q = field.q() as u64;
    let steps = weight_one_elements(field, profile);
    let mut dist = vec![u32::MAX; size as usize];
    let start = element_index(q, &source.to_coords());
    dist[start as usize] = 0;
    let mut frontier = vec![start];
    let mut cur = vec![Elem::ZERO; profile.dim()];
    let mut level = 0;
    while !frontier.is_empty() {
        level += 1;
        let mut next = Vec::new();
        for &v in &frontier {
            element_coords(q, v, &mut cur);
            for step in &steps {
                let w: Vec<Elem> = cur.iter().zip(step).map(|(&a, &b)| field.add(a, b)).collect();
                let wi = element_index(q, &w) as usize;
                if dist[wi] == u32::MAX {
                    dist[wi] = level;
                    next.push(wi as u64);
                }
            }
        }
        frontier = next;
    }
    Ok(dist)
}

/// Length of a shortest path from `x` to `y` through sum-rank-one steps.
pub fn geodesic_distance(field: &Field, profile: &Profile, x: &SumRankVector, y: &SumRankVector, cutoff: u64) -> Result<usize> {
    x.same_shape(y)?;
    let dist = geodesic_distances_from(field, profile, x, cutoff)?;
    Ok(dist[element_index(field.q() as u64, &y.to_coords()) as usize] as usize)
}

/// Every element of `Π`, in [`geodesic_distances_from`] index order.
pub fn all_elements(field: &Field, profile: &Profile, cutoff: u64) -> Result<Vec<SumRankVector>> {
    let size = profile.check_enumerable(field.q(), cutoff)?;
    let mut buf = vec![Elem::ZERO; profile.dim()];
    (0..size)
        .map(|i| {
            element_coords(field.q() as u64, i, &mut buf);
            SumRankVector::from_coords(field, profile, &buf)
        })
        .collect()
}
