//! Dense matrices and subspaces over GF(q).
//!
//! Subspaces are always kept as a reduced row echelon basis, so two subspaces
//! are equal exactly when their bases are equal entry by entry.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};

/// Brings the row-major `rows x cols` buffer into reduced row echelon form and
/// returns the pivot columns.
pub fn rref_in_place(field: &Field, rows: usize, cols: usize, data: &mut [Elem]) -> Vec<usize> {
    debug_assert_eq!(data.len(), rows * cols);
    let mut pivots = Vec::new();
    let mut lead = 0;
    for col in 0..cols {
        if lead == rows {
            break;
        }
        let Some(found) = (lead..rows).find(|&r| !data[r * cols + col].is_zero()) else {
            continue;
        };
        if found != lead {
            for c in 0..cols {
                data.swap(found * cols + c, lead * cols + c);
            }
        }
        let inv = field.inv(data[lead * cols + col]).expect("pivot is nonzero");
        for c in col..cols {
            data[lead * cols + c] = field.mul(data[lead * cols + c], inv);
        }
        for r in 0..rows {
            if r == lead {
                continue;
            }
            let factor = data[r * cols + col];
            if factor.is_zero() {
                continue;
            }
            for c in col..cols {
                let t = field.mul(factor, data[lead * cols + c]);
                data[r * cols + c] = field.sub(data[r * cols + c], t);
            }
        }
        pivots.push(col);
        lead += 1;
    }
    pivots
}

/// Rank of a row-major buffer by forward elimination; the buffer is clobbered.
pub fn rank_in_place(field: &Field, rows: usize, cols: usize, data: &mut [Elem]) -> usize {
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(found) = (rank..rows).find(|&r| !data[r * cols + col].is_zero()) else {
            continue;
        };
        if found != rank {
            for c in col..cols {
                data.swap(found * cols + c, rank * cols + c);
            }
        }
        let inv = field.inv(data[rank * cols + col]).expect("pivot is nonzero");
        for r in rank + 1..rows {
            let x = data[r * cols + col];
            if x.is_zero() {
                continue;
            }
            let factor = field.mul(x, inv);
            for c in col..cols {
                let t = field.mul(factor, data[rank * cols + c]);
                data[r * cols + c] = field.sub(data[r * cols + c], t);
            }
        }
        rank += 1;
    }
    rank
}

/// A dense `rows x cols` matrix, entries stored row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
    field: Field,
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            data: vec![Elem::ZERO; rows * cols],
            field: field.clone(),
        }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = Elem::ONE;
        }
        m
    }

    /// Wraps a row-major entry vector.
    pub fn from_vec(field: &Field, rows: usize, cols: usize, data: Vec<Elem>) -> Result<Matrix> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: data.len(),
            });
        }
        Ok(Matrix {
            rows,
            cols,
            data,
            field: field.clone(),
        })
    }

    /// Builds a matrix from integer representatives, row-major.
    pub fn from_reps(field: &Field, rows: usize, cols: usize, reps: &[u32]) -> Result<Matrix> {
        let data = reps
            .iter()
            .map(|&r| field.elem(r))
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_vec(field, rows, cols, data)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Row-major entries; this is the vectorization `(z11, .., z1m, .., zn1, .., znm)`.
    pub fn entries(&self) -> &[Elem] {
        &self.data
    }

    pub fn into_entries(self) -> Vec<Elem> {
        self.data
    }

    pub fn get(&self, i: usize, j: usize) -> Elem {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j);
            }
        }
        t
    }

    fn zip_with(&self, other: &Matrix, f: impl Fn(Elem, Elem) -> Elem) -> Result<Matrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                found: other.rows * other.cols,
            });
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f(a, b))
            .collect();
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
            field: self.field.clone(),
        })
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, |a, b| self.field.add(a, b))
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, |a, b| self.field.sub(a, b))
    }

    pub fn scale(&self, c: Elem) -> Matrix {
        let mut out = self.clone();
        for x in &mut out.data {
            *x = self.field.mul(c, *x);
        }
        out
    }

    /// The reduced row echelon form together with its pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut out = self.clone();
        let pivots = rref_in_place(&self.field, self.rows, self.cols, &mut out.data);
        (out, pivots)
    }

    pub fn rank(&self) -> usize {
        let mut buf = self.data.clone();
        rank_in_place(&self.field, self.rows, self.cols, &mut buf)
    }

    /// The row space as a canonical subspace of `F^cols`.
    pub fn row_space(&self) -> Subspace {
        Subspace::span(&self.field, self.cols, (0..self.rows).map(|i| self.row(i).to_vec()))
            .expect("rows have the right length")
    }

    /// The column space as a canonical subspace of `F^rows`.
    pub fn column_space(&self) -> Subspace {
        self.transpose().row_space()
    }

    /// Whether every row lies in `v`.
    pub fn rowspace_contained(&self, v: &Subspace) -> Result<bool> {
        if v.ambient_dim() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: v.ambient_dim(),
                found: self.cols,
            });
        }
        for i in 0..self.rows {
            if !v.contains(self.row(i))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Text form: a header line `n m q`, then one line of representatives per row.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {} {}\n", self.rows, self.cols, self.field.q());
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(|e| e.to_string()).collect();
            s.push_str(&line.join(" "));
            s.push('\n');
        }
        s
    }

    /// Parses a single matrix in text form, building its field from the header.
    pub fn parse(text: &str) -> Result<Matrix> {
        let mut lines = content_lines(text);
        let m = read_matrix(&mut lines, None)?;
        if let Some(extra) = lines.next() {
            return Err(Error::Parse(format!("trailing input: {extra:?}")));
        }
        Ok(m)
    }
}

/// Non-empty lines with `#` comments removed.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
}

fn parse_num<T: std::str::FromStr>(tok: &str) -> Result<T> {
    tok.parse()
        .map_err(|_| Error::Parse(format!("expected a non-negative integer, found {tok:?}")))
}

/// Reads one matrix (header plus rows) from a line stream. When `field` is
/// given, the header's `q` must agree with it.
pub(crate) fn read_matrix<'a>(
    lines: &mut impl Iterator<Item = &'a str>,
    field: Option<&Field>,
) -> Result<Matrix> {
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("missing matrix header `n m q`".into()))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 3 {
        return Err(Error::Parse(format!("bad matrix header {header:?}")));
    }
    let (rows, cols, q): (usize, usize, u64) =
        (parse_num(toks[0])?, parse_num(toks[1])?, parse_num(toks[2])?);
    let field = match field {
        Some(f) if f.q() as u64 != q => {
            return Err(Error::Parse(format!(
                "matrix over GF({q}) where GF({}) was expected",
                f.q()
            )))
        }
        Some(f) => f.clone(),
        None => Field::new(q)?,
    };
    let mut reps = Vec::with_capacity(rows * cols);
    for i in 0..rows {
        let line = lines
            .next()
            .ok_or_else(|| Error::Parse(format!("missing row {i} of {rows}")))?;
        let row: Vec<u32> = line
            .split_whitespace()
            .map(parse_num)
            .collect::<Result<_>>()?;
        if row.len() != cols {
            return Err(Error::Parse(format!(
                "row {i} has {} entries, expected {cols}",
                row.len()
            )));
        }
        reps.extend(row);
    }
    Matrix::from_reps(&field, rows, cols, &reps)
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix{:?}[", self.field)?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(|e| e.to_string()).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

/// A subspace of `F^n` held as its reduced row echelon basis.
#[derive(Clone)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    basis: Vec<Vec<Elem>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: &Field, n: usize) -> Subspace {
        Subspace {
            field: field.clone(),
            ambient: n,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: &Field, n: usize) -> Subspace {
        let basis = (0..n)
            .map(|i| {
                let mut v = vec![Elem::ZERO; n];
                v[i] = Elem::ONE;
                v
            })
            .collect();
        Subspace {
            field: field.clone(),
            ambient: n,
            basis,
            pivots: (0..n).collect(),
        }
    }

    /// Span of arbitrary vectors of length `n`.
    pub fn span<I>(field: &Field, n: usize, vectors: I) -> Result<Subspace>
    where
        I: IntoIterator<Item = Vec<Elem>>,
    {
        let mut data = Vec::new();
        let mut rows = 0;
        for v in vectors {
            if v.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: v.len(),
                });
            }
            data.extend(v);
            rows += 1;
        }
        let pivots = rref_in_place(field, rows, n, &mut data);
        let basis = data
            .chunks(n.max(1))
            .take(pivots.len())
            .map(|c| c[..n].to_vec())
            .collect();
        Ok(Subspace {
            field: field.clone(),
            ambient: n,
            basis,
            pivots,
        })
    }

    /// Span of the standard basis vectors with the given indices.
    pub fn coordinate(field: &Field, n: usize, coords: &[usize]) -> Result<Subspace> {
        let mut vs = Vec::with_capacity(coords.len());
        for &c in coords {
            if c >= n {
                return Err(Error::OutOfRange(format!("coordinate {c} >= {n}")));
            }
            let mut v = vec![Elem::ZERO; n];
            v[c] = Elem::ONE;
            vs.push(v);
        }
        Subspace::span(field, n, vs)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Elem>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` against the basis in place; the result is zero iff `v` was in the span.
    pub fn reduce(&self, v: &mut [Elem]) {
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            let c = v[p];
            if c.is_zero() {
                continue;
            }
            for (x, &y) in v.iter_mut().zip(b) {
                *x = self.field.sub(*x, self.field.mul(c, y));
            }
        }
    }

    pub fn contains(&self, v: &[Elem]) -> Result<bool> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: v.len(),
            });
        }
        let mut w = v.to_vec();
        self.reduce(&mut w);
        Ok(w.iter().all(|e| e.is_zero()))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        for b in &self.basis {
            if !other.contains(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Number of elements, `q^dim`, as long as it fits in a `u128`.
    pub fn size(&self) -> Option<u128> {
        (self.field.q() as u128).checked_pow(self.dim() as u32)
    }

    /// Every element of the subspace, zero first.
    pub fn elements(&self) -> SpanIter<'_> {
        SpanIter::new(&self.field, self.ambient, &self.basis)
    }

    /// All `k`-dimensional subspaces of `F^n`, ordered by pivot pattern
    /// (lexicographic), then by free entries.
    pub fn all_of_dim(field: &Field, n: usize, k: usize) -> Vec<Subspace> {
        let mut out = Vec::new();
        if k > n {
            return out;
        }
        for pivots in combinations(n, k) {
            let free: Vec<(usize, usize)> = pivots
                .iter()
                .enumerate()
                .flat_map(|(r, &p)| {
                    let pivots = &pivots;
                    (p + 1..n)
                        .filter(move |c| !pivots.contains(c))
                        .map(move |c| (r, c))
                })
                .collect();
            let mut digits = vec![0u32; free.len()];
            loop {
                let mut basis = vec![vec![Elem::ZERO; n]; k];
                for (r, &p) in pivots.iter().enumerate() {
                    basis[r][p] = Elem::ONE;
                }
                for (&(r, c), &d) in free.iter().zip(&digits) {
                    basis[r][c] = field.elem(d).expect("digit below q");
                }
                out.push(Subspace {
                    field: field.clone(),
                    ambient: n,
                    basis,
                    pivots: pivots.clone(),
                });
                if !odometer(&mut digits, field.q()) {
                    break;
                }
            }
        }
        out
    }

    fn key(&self) -> impl Iterator<Item = u32> + '_ {
        self.basis.iter().flatten().map(|e| e.rep())
    }
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.ambient == other.ambient && self.basis == other.basis
    }
}

impl Eq for Subspace {}

impl Hash for Subspace {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.q().hash(state);
        self.ambient.hash(state);
        self.basis.hash(state);
    }
}

impl PartialOrd for Subspace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subspace {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.field.q(), self.ambient, self.dim())
            .cmp(&(other.field.q(), other.ambient, other.dim()))
            .then_with(|| self.pivots.cmp(&other.pivots))
            .then_with(|| self.key().cmp(other.key()))
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, b) in self.basis.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            let s: Vec<String> = b.iter().map(|e| e.to_string()).collect();
            write!(f, "({})", s.join(","))?;
        }
        write!(f, "> <= GF({})^{}", self.field.q(), self.ambient)
    }
}

/// Advances a base-`q` counter; returns `false` after wrapping around.
pub(crate) fn odometer(digits: &mut [u32], q: u32) -> bool {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < q {
            return true;
        }
        *d = 0;
    }
    false
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// Walks every linear combination of a basis, updating the running vector by
/// one basis vector per step.
pub struct SpanIter<'a> {
    field: &'a Field,
    basis: &'a [Vec<Elem>],
    digits: Vec<u32>,
    current: Vec<Elem>,
    started: bool,
    done: bool,
}

impl<'a> SpanIter<'a> {
    pub fn new(field: &'a Field, n: usize, basis: &'a [Vec<Elem>]) -> Self {
        SpanIter {
            field,
            basis,
            digits: vec![0; basis.len()],
            current: vec![Elem::ZERO; n],
            started: false,
            done: false,
        }
    }

    /// Lends the next element without allocating.
    pub fn next_ref(&mut self) -> Option<&[Elem]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.current);
        }
        let q = self.field.q();
        for i in 0..self.digits.len() {
            let old = Elem::from_rep_unchecked(self.digits[i]);
            let next = (self.digits[i] + 1) % q;
            let delta = self.field.sub(Elem::from_rep_unchecked(next), old);
            for (x, &b) in self.current.iter_mut().zip(&self.basis[i]) {
                *x = self.field.add(*x, self.field.mul(delta, b));
            }
            self.digits[i] = next;
            if next != 0 {
                return Some(&self.current);
            }
        }
        self.done = true;
        None
    }
}

impl Iterator for SpanIter<'_> {
    type Item = Vec<Elem>;

    fn next(&mut self) -> Option<Vec<Elem>> {
        self.next_ref().map(|v| v.to_vec())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gf(q: u64) -> Field {
        Field::new(q).unwrap()
    }

    #[test]
    fn rref_examples() {
        let f = gf(2);
        let z = Matrix::zeros(&f, 2, 3);
        assert_eq!(z.rref(), (z.clone(), vec![]));
        let id = Matrix::identity(&f, 3);
        assert_eq!(id.rref(), (id.clone(), vec![0, 1, 2]));
        let m = Matrix::from_reps(&f, 2, 2, &[1, 1, 1, 1]).unwrap();
        let (r, p) = m.rref();
        assert_eq!(r, Matrix::from_reps(&f, 2, 2, &[1, 1, 0, 0]).unwrap());
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn rank_examples() {
        let f = gf(2);
        assert_eq!(Matrix::zeros(&f, 3, 4).rank(), 0);
        assert_eq!(Matrix::identity(&f, 4).rank(), 4);
        assert_eq!(Matrix::from_reps(&f, 2, 2, &[1, 0, 0, 0]).unwrap().rank(), 1);
        let f3 = gf(3);
        // rows (1,2), (2,1) over GF(3): second = 2 * first
        assert_eq!(Matrix::from_reps(&f3, 2, 2, &[1, 2, 2, 1]).unwrap().rank(), 1);
    }

    #[test]
    fn rowspace_containment() {
        let f = gf(2);
        let m = Matrix::from_reps(&f, 1, 3, &[1, 0, 0]).unwrap();
        let v = Subspace::coordinate(&f, 3, &[0, 1]).unwrap();
        assert_eq!(m.rowspace_contained(&v), Ok(true));
        assert_eq!(m.rowspace_contained(&Subspace::full(&f, 3)), Ok(true));
        assert_eq!(m.rowspace_contained(&Subspace::zero(&f, 3)), Ok(false));
        let w = Matrix::from_reps(&f, 1, 3, &[0, 0, 1]).unwrap();
        assert_eq!(w.rowspace_contained(&v), Ok(false));
        assert!(matches!(
            m.rowspace_contained(&Subspace::full(&f, 2)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn text_round_trip() {
        let f = gf(5);
        let m = Matrix::from_reps(&f, 2, 3, &[0, 1, 2, 3, 4, 0]).unwrap();
        let text = m.to_text();
        assert_eq!(text, "2 3 5\n0 1 2\n3 4 0\n");
        assert_eq!(Matrix::parse(&text).unwrap(), m);
        assert!(Matrix::parse("2 2 2\n1 0\n").is_err());
        assert!(Matrix::parse("1 2 2\n1 2\n").is_err());
        assert!(Matrix::parse("1 2 6\n1 0\n").is_err());
    }

    #[test]
    fn subspace_enumeration_matches_brute_force_spans() {
        // collect distinct spans of all k-tuples of vectors, compare with the
        // pivot-pattern enumeration
        for (q, n) in [(2u64, 4usize), (3, 3)] {
            let f = gf(q);
            let vectors: Vec<Vec<Elem>> = Subspace::full(&f, n).elements().collect();
            for k in 0..=n {
                let mut spans = std::collections::BTreeSet::new();
                let mut idx = vec![0u32; k];
                loop {
                    let vs = idx.iter().map(|&i| vectors[i as usize].clone());
                    let s = Subspace::span(&f, n, vs).unwrap();
                    if s.dim() == k {
                        spans.insert(s);
                    }
                    if !odometer(&mut idx, vectors.len() as u32) {
                        break;
                    }
                }
                let listed = Subspace::all_of_dim(&f, n, k);
                let set: std::collections::BTreeSet<_> = listed.iter().cloned().collect();
                assert_eq!(set.len(), listed.len(), "duplicates q={q} n={n} k={k}");
                assert_eq!(set, spans, "q={q} n={n} k={k}");
            }
        }
        assert_eq!(Subspace::all_of_dim(&gf(2), 4, 2).len(), 35);
    }

    #[test]
    fn span_iteration_visits_each_element_once() {
        let f = gf(4);
        let s = Subspace::span(
            &f,
            3,
            vec![
                vec![Elem::ONE, Elem::from_rep_unchecked(2), Elem::ZERO],
                vec![Elem::ZERO, Elem::ONE, Elem::from_rep_unchecked(3)],
            ],
        )
        .unwrap();
        let all: Vec<_> = s.elements().collect();
        assert_eq!(all.len(), 16);
        let set: std::collections::HashSet<_> = all.iter().cloned().collect();
        assert_eq!(set.len(), 16);
        assert!(all.iter().all(|v| s.contains(v).unwrap()));
        assert_eq!(Subspace::zero(&f, 3).elements().count(), 1);
    }

    fn small_matrix() -> impl Strategy<Value = (u64, usize, usize, Vec<u32>)> {
        (prop::sample::select(vec![2u64, 3, 4, 5]), 1usize..5, 1usize..5).prop_flat_map(
            |(q, r, c)| {
                (
                    Just(q),
                    Just(r),
                    Just(c),
                    prop::collection::vec(0..q as u32, r * c),
                )
            },
        )
    }

    proptest! {
        #[test]
        fn rref_is_idempotent((q, r, c, reps) in small_matrix()) {
            let m = Matrix::from_reps(&gf(q), r, c, &reps).unwrap();
            let (once, p1) = m.rref();
            let (twice, p2) = once.rref();
            prop_assert_eq!(&once, &twice);
            prop_assert_eq!(&p1, &p2);
            prop_assert_eq!(p1.len(), m.rank());
            prop_assert!(m.rank() <= r.min(c));
        }

        #[test]
        fn rank_of_transpose((q, r, c, reps) in small_matrix()) {
            let m = Matrix::from_reps(&gf(q), r, c, &reps).unwrap();
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }

        #[test]
        fn rank_is_subadditive(
            (q, r, c, a) in small_matrix(),
            seed in prop::collection::vec(0u32..1000, 16),
        ) {
            let f = gf(q);
            let b: Vec<u32> = (0..r * c).map(|i| seed[i % 16] % q as u32).collect();
            let a = Matrix::from_reps(&f, r, c, &a).unwrap();
            let b = Matrix::from_reps(&f, r, c, &b).unwrap();
            prop_assert!(a.add(&b).unwrap().rank() <= a.rank() + b.rank());
        }
    }
}
