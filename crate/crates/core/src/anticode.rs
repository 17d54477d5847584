//! Constructive anticodes: symbolic specs with exact size and diameter,
//! materialization, brute-force verification, and the ball-times-full search.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::bounds::{ball_volume, max_anticode_dim, BigCount, WeightComposition};
use crate::error::{Error, Result};
use crate::gf::{check_field_size, Elem, Field};
use crate::matrix::{odometer, Matrix, Subspace};
use crate::sumrank::{LinearSpace, Profile, SumRankVector};

/// Cutoff for explicit (nonlinear) materialization.
pub const EXPLICIT_CUTOFF: u64 = 1 << 22;

/// What an anticode looks like on one block.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BlockFactor {
    Full,
    Zero,
    /// Matrices whose column space lies in `U ⊆ F^n`.
    ColSupport(Subspace),
    /// Matrices whose row space lies in `V ⊆ F^m`.
    RowSupport(Subspace),
    /// A `1x1` block, either free or fixed to zero.
    Hamming(bool),
    /// Part of the one ball shared by all such blocks.
    InBall,
}

/// A product of per-block factors, with an optional ball of radius `s` over
/// the blocks marked [`BlockFactor::InBall`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AnticodeSpec {
    profile: Profile,
    factors: Vec<BlockFactor>,
    ball_radius: Option<usize>,
}

impl AnticodeSpec {
    pub fn new(profile: &Profile, factors: Vec<BlockFactor>, ball_radius: Option<usize>) -> Result<AnticodeSpec> {
        if factors.len() != profile.t() {
            return Err(Error::MalformedSpec(format!(
                "{} factors for {} blocks",
                factors.len(),
                profile.t()
            )));
        }
        let mut field: Option<&Field> = None;
        for (i, f) in factors.iter().enumerate() {
            let (n, m) = profile.dims()[i];
            let sub = match f {
                BlockFactor::ColSupport(u) => {
                    if u.ambient_dim() != n {
                        return Err(Error::MalformedSpec(format!(
                            "block {}: column support lives in F^{}, got F^{}",
                            i + 1,
                            n,
                            u.ambient_dim()
                        )));
                    }
                    Some(u)
                }
                BlockFactor::RowSupport(v) => {
                    if v.ambient_dim() != m {
                        return Err(Error::MalformedSpec(format!(
                            "block {}: row support lives in F^{}, got F^{}",
                            i + 1,
                            m,
                            v.ambient_dim()
                        )));
                    }
                    Some(v)
                }
                BlockFactor::Hamming(_) if (n, m) != (1, 1) => {
                    return Err(Error::MalformedSpec(format!("block {}: Hamming factor on a {n}x{m} block", i + 1)));
                }
                _ => None,
            };
            if let Some(s) = sub {
                if field.is_some_and(|f| f != s.field()) {
                    return Err(Error::MalformedSpec("support spaces over different fields".into()));
                }
                field = Some(s.field());
            }
        }
        let has_ball = factors.contains(&BlockFactor::InBall);
        if has_ball != ball_radius.is_some() {
            return Err(Error::MalformedSpec(
                "a ball radius is given exactly when some block is in the ball".into(),
            ));
        }
        Ok(AnticodeSpec {
            profile: profile.clone(),
            factors,
            ball_radius,
        })
    }

    /// The same factor on every block.
    pub fn uniform(profile: &Profile, factor: BlockFactor) -> Result<AnticodeSpec> {
        AnticodeSpec::new(profile, vec![factor; profile.t()], None)
    }

    /// The projection anticode `A(u)`: in block `i`, matrices supported on
    /// the last `u_i` rows (the kernel of deleting those rows).
    pub fn projection(field: &Field, profile: &Profile, u: &WeightComposition) -> Result<AnticodeSpec> {
        if u.0.len() != profile.t() || u.0.iter().enumerate().any(|(i, &x)| x > profile.n(i)) {
            return Err(Error::MalformedSpec(format!("{u} is not a weight composition for {profile}")));
        }
        let factors = u
            .0
            .iter()
            .enumerate()
            .map(|(i, &ui)| {
                let n = profile.n(i);
                Ok(if ui == 0 {
                    BlockFactor::Zero
                } else if ui == n {
                    BlockFactor::Full
                } else {
                    BlockFactor::ColSupport(Subspace::coordinate(field, n, &(n - ui..n).collect::<Vec<_>>())?)
                })
            })
            .collect::<Result<_>>()?;
        AnticodeSpec::new(profile, factors, None)
    }

    /// Blocks flagged in `full` are full, the others form a ball of radius `s`.
    fn hybrid(profile: &Profile, full: &[bool], s: usize) -> Result<AnticodeSpec> {
        let rest: usize = (0..profile.t()).filter(|&i| !full[i]).map(|i| profile.n(i)).sum();
        let other = if s == 0 {
            BlockFactor::Zero
        } else if s >= rest {
            BlockFactor::Full
        } else {
            BlockFactor::InBall
        };
        let radius = (other == BlockFactor::InBall).then_some(s);
        let factors = full
            .iter()
            .map(|&f| if f { BlockFactor::Full } else { other.clone() })
            .collect();
        AnticodeSpec::new(profile, factors, radius)
    }

    pub fn profile(&self) -> &Profile {
        &self.profile
    }

    pub fn factors(&self) -> &[BlockFactor] {
        &self.factors
    }

    pub fn ball_radius(&self) -> Option<usize> {
        self.ball_radius
    }

    pub fn ball_blocks(&self) -> Vec<usize> {
        (0..self.profile.t())
            .filter(|&i| self.factors[i] == BlockFactor::InBall)
            .collect()
    }

    pub fn is_linear(&self) -> bool {
        self.ball_radius.is_none()
    }

    fn support_field(&self) -> Option<&Field> {
        self.factors.iter().find_map(|f| match f {
            BlockFactor::ColSupport(s) | BlockFactor::RowSupport(s) => Some(s.field()),
            _ => None,
        })
    }

    fn check_q(&self, q: u32) -> Result<()> {
        check_field_size(q as u64)?;
        match self.support_field() {
            Some(f) if f.q() != q => Err(Error::MalformedSpec(format!(
                "support spaces are over GF({}), not GF({q})",
                f.q()
            ))),
            _ => Ok(()),
        }
    }

    /// `log_q` of the linear part's size.
    fn linear_dim(&self) -> usize {
        self.factors
            .iter()
            .enumerate()
            .map(|(i, f)| {
                let (n, m) = self.profile.dims()[i];
                match f {
                    BlockFactor::Full => n * m,
                    BlockFactor::ColSupport(u) => m * u.dim(),
                    BlockFactor::RowSupport(v) => n * v.dim(),
                    BlockFactor::Hamming(true) => 1,
                    _ => 0,
                }
            })
            .sum()
    }

    /// Exact number of elements over `F_q`.
    pub fn size(&self, q: u32) -> Result<BigCount> {
        self.check_q(q)?;
        let mut size = BigUint::from(q).pow(self.linear_dim() as u32);
        if let Some(s) = self.ball_radius {
            let blocks = self.ball_blocks();
            let sub = self.profile.sub_profile(&blocks)?;
            size *= ball_volume(&sub, q, s.min(sub.total_rows()))?;
        }
        Ok(size)
    }

    /// Largest sum-rank distance between two elements.
    pub fn diameter(&self) -> usize {
        let linear: usize = self
            .factors
            .iter()
            .enumerate()
            .map(|(i, f)| match f {
                BlockFactor::Full => self.profile.n(i),
                BlockFactor::ColSupport(u) => u.dim(),
                BlockFactor::RowSupport(v) => v.dim().min(self.profile.n(i)),
                BlockFactor::Hamming(true) => 1,
                _ => 0,
            })
            .sum();
        let ball = self.ball_radius.map_or(0, |s| {
            let rows: usize = self.ball_blocks().iter().map(|&i| self.profile.n(i)).sum();
            (2 * s).min(rows)
        });
        linear + ball
    }

    /// Basis of the linear part, as flat coordinate vectors.
    fn linear_basis(&self) -> Vec<Vec<Elem>> {
        let d = self.profile.dim();
        let mut out = Vec::new();
        for (i, f) in self.factors.iter().enumerate() {
            let (n, m) = self.profile.dims()[i];
            let off = self.profile.coord_offset(i);
            let unit = |entries: &mut dyn Iterator<Item = (usize, Elem)>| {
                let mut v = vec![Elem::ZERO; d];
                for (k, e) in entries {
                    v[off + k] = e;
                }
                v
            };
            match f {
                BlockFactor::Full | BlockFactor::Hamming(true) => {
                    for k in 0..n * m {
                        out.push(unit(&mut std::iter::once((k, Elem::ONE))));
                    }
                }
                BlockFactor::ColSupport(u) => {
                    for b in u.basis() {
                        for c in 0..m {
                            out.push(unit(&mut (0..n).map(|r| (r * m + c, b[r]))));
                        }
                    }
                }
                BlockFactor::RowSupport(v) => {
                    for b in v.basis() {
                        for r in 0..n {
                            out.push(unit(&mut (0..m).map(|c| (r * m + c, b[c]))));
                        }
                    }
                }
                _ => {}
            }
        }
        out
    }

    /// Builds the anticode: a [`LinearSpace`] when there is no ball factor,
    /// otherwise the explicit element set (up to `cutoff` elements).
    pub fn materialize(&self, field: &Field, cutoff: u64) -> Result<Materialized> {
        self.check_q(field.q())?;
        let linear = LinearSpace::from_subspace(
            &self.profile,
            Subspace::span(field, self.profile.dim(), self.linear_basis())?,
        )?;
        let Some(s) = self.ball_radius else {
            return Ok(Materialized::Linear(linear));
        };
        let size = self.size(field.q())?;
        if size > BigUint::from(cutoff) {
            return Err(Error::TooLargeToEnumerate {
                size: size.to_string(),
                cutoff,
            });
        }
        let blocks = self.ball_blocks();
        let by_rank: Vec<Vec<Vec<Matrix>>> = blocks
            .iter()
            .map(|&i| {
                let (n, m) = self.profile.dims()[i];
                matrices_by_rank(field, n, m, s, cutoff)
            })
            .collect::<Result<_>>()?;
        let mut ball: Vec<Vec<Matrix>> = Vec::new();
        let mut cur = Vec::new();
        ball_dfs(&by_rank, 0, s, &mut cur, &mut ball);

        let mut out = Vec::new();
        let mut it = linear.elements();
        while let Some(c) = it.next_ref() {
            let base = SumRankVector::from_coords(field, &self.profile, c)?;
            for choice in &ball {
                let mut bl = base.blocks().to_vec();
                for (k, &i) in blocks.iter().enumerate() {
                    bl[i] = choice[k].clone();
                }
                out.push(SumRankVector::new(&self.profile, bl)?);
            }
        }
        Ok(Materialized::Explicit(out))
    }
}

/// All `n x m` matrices of rank at most `s`, grouped by rank.
fn matrices_by_rank(field: &Field, n: usize, m: usize, s: usize, cutoff: u64) -> Result<Vec<Vec<Matrix>>> {
    let q = field.q();
    let total = BigUint::from(q).pow((n * m) as u32);
    if total > BigUint::from(cutoff) {
        return Err(Error::TooLargeToEnumerate {
            size: total.to_string(),
            cutoff,
        });
    }
    let mut groups = vec![Vec::new(); s.min(n.min(m)) + 1];
    let mut digits = vec![0u32; n * m];
    loop {
        let mat = Matrix::from_reps(field, n, m, &digits)?;
        let r = mat.rank();
        if r < groups.len() {
            groups[r].push(mat);
        }
        if !odometer(&mut digits, q) {
            break;
        }
    }
    Ok(groups)
}

fn ball_dfs(by_rank: &[Vec<Vec<Matrix>>], i: usize, budget: usize, cur: &mut Vec<Matrix>, out: &mut Vec<Vec<Matrix>>) {
    if i == by_rank.len() {
        out.push(cur.clone());
        return;
    }
    for (r, group) in by_rank[i].iter().enumerate().take(budget + 1) {
        for mat in group {
            cur.push(mat.clone());
            ball_dfs(by_rank, i + 1, budget - r, cur, out);
            cur.pop();
        }
    }
}

/// Result of [`AnticodeSpec::materialize`].
#[derive(Clone, Debug)]
pub enum Materialized {
    Linear(LinearSpace),
    Explicit(Vec<SumRankVector>),
}

fn fmt_blocks(blocks: &[usize]) -> String {
    let mut parts = Vec::new();
    let mut k = 0;
    while k < blocks.len() {
        let start = blocks[k];
        let mut end = start;
        while k + 1 < blocks.len() && blocks[k + 1] == end + 1 {
            k += 1;
            end += 1;
        }
        parts.push(if start == end {
            format!("{}", start + 1)
        } else {
            format!("{}..{}", start + 1, end + 1)
        });
        k += 1;
    }
    parts.join(",")
}

fn fmt_basis(s: &Subspace) -> String {
    s.basis()
        .iter()
        .map(|v| v.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join(";")
}

/// Comma list, one item per block, except that the ball is a single item at
/// the position of its first block: `full,full,ball(s=2,blocks=3..7)`.
/// Blocks are numbered from 1 in canonical order.
impl fmt::Display for AnticodeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ball = self.ball_blocks();
        let mut items = Vec::new();
        for (i, fac) in self.factors.iter().enumerate() {
            items.push(match fac {
                BlockFactor::Full => "full".to_string(),
                BlockFactor::Zero => "zero".to_string(),
                BlockFactor::ColSupport(u) => format!("col({})", fmt_basis(u)),
                BlockFactor::RowSupport(v) => format!("row({})", fmt_basis(v)),
                BlockFactor::Hamming(b) => format!("ham({})", u8::from(*b)),
                BlockFactor::InBall if ball[0] == i => format!(
                    "ball(s={},blocks={})",
                    self.ball_radius.unwrap_or(0),
                    fmt_blocks(&ball)
                ),
                BlockFactor::InBall => continue,
            });
        }
        f.write_str(&items.join(","))
    }
}

fn split_top_level(s: &str) -> Result<Vec<&str>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(Error::MalformedSpec(format!("unbalanced ')' in {s:?}")));
                }
            }
            ',' if depth == 0 => {
                out.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(Error::MalformedSpec(format!("unbalanced '(' in {s:?}")));
    }
    out.push(s[start..].trim());
    Ok(out)
}

fn parse_basis(field: &Field, dim: usize, body: &str) -> Result<Subspace> {
    let mut vs = Vec::new();
    for part in body.split(';').map(str::trim).filter(|p| !p.is_empty()) {
        let v = part
            .split_whitespace()
            .map(|t| {
                let r: u32 = t
                    .parse()
                    .map_err(|_| Error::MalformedSpec(format!("bad field element {t:?}")))?;
                field.elem(r)
            })
            .collect::<Result<Vec<_>>>()?;
        if v.len() != dim {
            return Err(Error::MalformedSpec(format!(
                "basis vector {part:?} has length {}, expected {dim}",
                v.len()
            )));
        }
        vs.push(v);
    }
    Subspace::span(field, dim, vs)
}

fn parse_block_list(items: &[&str], t: usize) -> Result<Vec<usize>> {
    let mut out = BTreeSet::new();
    for item in items {
        let bad = || Error::MalformedSpec(format!("bad block list entry {item:?}"));
        let (a, b) = match item.split_once("..") {
            Some((a, b)) => (a.trim(), b.trim()),
            None => (item.trim(), item.trim()),
        };
        let a: usize = a.parse().map_err(|_| bad())?;
        let b: usize = b.parse().map_err(|_| bad())?;
        if a == 0 || b < a || b > t {
            return Err(bad());
        }
        out.extend(a - 1..b);
    }
    Ok(out.into_iter().collect())
}

impl AnticodeSpec {
    /// Reads the text form produced by `Display`. Support-space entries are
    /// field element representatives.
    pub fn parse(profile: &Profile, field: &Field, text: &str) -> Result<AnticodeSpec> {
        let items = split_top_level(text.trim())?;
        let mut ball: Option<(usize, Vec<usize>)> = None;
        let mut rest = Vec::new();
        for item in &items {
            if let Some(body) = item.strip_prefix("ball(").and_then(|b| b.strip_suffix(')')) {
                if ball.is_some() {
                    return Err(Error::MalformedSpec("more than one ball factor".into()));
                }
                let parts: Vec<&str> = body.split(',').map(str::trim).collect();
                let s = parts
                    .first()
                    .and_then(|p| p.strip_prefix("s="))
                    .and_then(|p| p.trim().parse().ok())
                    .ok_or_else(|| Error::MalformedSpec(format!("ball needs s=<radius>: {item:?}")))?;
                let first = parts
                    .get(1)
                    .and_then(|p| p.strip_prefix("blocks="))
                    .ok_or_else(|| Error::MalformedSpec(format!("ball needs blocks=<list>: {item:?}")))?;
                let mut list = vec![first];
                list.extend(&parts[2..]);
                let blocks = parse_block_list(&list, profile.t())?;
                if blocks.is_empty() {
                    return Err(Error::MalformedSpec("empty ball".into()));
                }
                ball = Some((s, blocks));
            } else {
                rest.push(*item);
            }
        }
        let ball_blocks = ball.as_ref().map(|b| b.1.clone()).unwrap_or_default();
        if rest.len() + ball_blocks.len() != profile.t() {
            return Err(Error::MalformedSpec(format!(
                "{} items cover {} blocks, profile has {}",
                items.len(),
                rest.len() + ball_blocks.len(),
                profile.t()
            )));
        }
        let mut rest = rest.into_iter();
        let mut factors = Vec::with_capacity(profile.t());
        for i in 0..profile.t() {
            if ball_blocks.contains(&i) {
                factors.push(BlockFactor::InBall);
                continue;
            }
            let item = rest.next().expect("counted above");
            let (n, m) = profile.dims()[i];
            let body = |prefix: &str| item.strip_prefix(prefix).and_then(|b| b.strip_suffix(')'));
            let factor = match item {
                "full" => BlockFactor::Full,
                "zero" => BlockFactor::Zero,
                "ham(1)" => BlockFactor::Hamming(true),
                "ham(0)" => BlockFactor::Hamming(false),
                _ => {
                    if let Some(b) = body("col(") {
                        BlockFactor::ColSupport(parse_basis(field, n, b)?)
                    } else if let Some(b) = body("row(") {
                        BlockFactor::RowSupport(parse_basis(field, m, b)?)
                    } else {
                        return Err(Error::MalformedSpec(format!("unknown factor {item:?}")));
                    }
                }
            };
            factors.push(factor);
        }
        AnticodeSpec::new(profile, factors, ball.map(|b| b.0))
    }
}

/// Outcome of an anticode check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnticodeReport {
    pub radius: usize,
    pub diameter: usize,
    pub holds: bool,
    /// Two elements at distance `diameter`.
    pub witness: (SumRankVector, SumRankVector),
}

/// Checks a linear space: its diameter is its largest weight.
pub fn verify_linear_anticode(space: &LinearSpace, r: usize, cutoff: u64) -> Result<AnticodeReport> {
    let (diameter, w) = space.max_srk(cutoff)?;
    let zero = SumRankVector::zero(space.field(), space.profile());
    Ok(AnticodeReport {
        radius: r,
        diameter,
        holds: diameter <= r,
        witness: (w, zero),
    })
}

/// Checks an explicit set by comparing all pairs.
pub fn verify_anticode_set(elements: &[SumRankVector], r: usize) -> Result<AnticodeReport> {
    if elements.is_empty() {
        return Err(Error::OutOfRange("an anticode must be non-empty".into()));
    }
    let best = elements
        .par_iter()
        .enumerate()
        .map(|(i, x)| {
            let mut best = (0usize, i, i);
            for (j, y) in elements.iter().enumerate().skip(i + 1) {
                let d = x.srk_distance(y)?;
                if d > best.0 {
                    best = (d, i, j);
                }
            }
            Ok(best)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .max_by_key(|b| (b.0, std::cmp::Reverse((b.1, b.2))))
        .unwrap_or((0, 0, 0));
    Ok(AnticodeReport {
        radius: r,
        diameter: best.0,
        holds: best.0 <= r,
        witness: (elements[best.1].clone(), elements[best.2].clone()),
    })
}

/// One row of [`hybrid_search`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HybridCandidate {
    pub spec: AnticodeSpec,
    pub size: BigCount,
    pub diameter: usize,
}

/// Ranks the `r`-anticodes made of full blocks times a ball on the remaining
/// blocks, together with the optimal linear anticode `A(u)`. One full-block
/// choice is tried per multiset of shapes. Largest first; ties by spec text.
pub fn hybrid_search(profile: &Profile, q: u32, r: usize) -> Result<Vec<HybridCandidate>> {
    let field = Field::new(q as u64)?;
    if r > profile.total_rows() {
        return Err(Error::RadiusOutOfRange {
            r,
            max: profile.total_rows(),
        });
    }
    let mut classes: Vec<(usize, usize)> = Vec::new();
    for i in 0..profile.t() {
        match classes.last_mut() {
            Some((start, len)) if profile.dims()[*start] == profile.dims()[i] => *len += 1,
            _ => classes.push((i, 1)),
        }
    }
    let mut specs = BTreeMap::new();
    let mut counts = vec![0usize; classes.len()];
    loop {
        let mut full = vec![false; profile.t()];
        for (&(start, _), &k) in classes.iter().zip(&counts) {
            full[start..start + k].fill(true);
        }
        let full_rows: usize = (0..profile.t()).filter(|&i| full[i]).map(|i| profile.n(i)).sum();
        let rest_rows = profile.total_rows() - full_rows;
        if full_rows <= r {
            for s in 0..=rest_rows {
                if full_rows + (2 * s).min(rest_rows) > r {
                    break;
                }
                let spec = AnticodeSpec::hybrid(profile, &full, s)?;
                specs.insert(spec.to_string(), spec);
            }
        }
        let mut k = 0;
        while k < classes.len() {
            counts[k] += 1;
            if counts[k] <= classes[k].1 {
                break;
            }
            counts[k] = 0;
            k += 1;
        }
        if k == classes.len() {
            break;
        }
    }
    let opt = max_anticode_dim(profile, r)?;
    let u = WeightComposition(
        (0..profile.t())
            .map(|i| match i.cmp(&opt.block) {
                std::cmp::Ordering::Less => profile.n(i),
                std::cmp::Ordering::Equal => opt.delta,
                std::cmp::Ordering::Greater => 0,
            })
            .collect(),
    );
    let linear = AnticodeSpec::projection(&field, profile, &u)?;
    specs.insert(linear.to_string(), linear);

    let mut out: Vec<(String, HybridCandidate)> = specs
        .into_par_iter()
        .map(|(text, spec)| {
            let size = spec.size(q)?;
            let diameter = spec.diameter();
            Ok((text, HybridCandidate { spec, size, diameter }))
        })
        .collect::<Result<_>>()?;
    out.sort_by(|a, b| b.1.size.cmp(&a.1.size).then_with(|| a.0.cmp(&b.0)));
    Ok(out.into_iter().map(|(_, c)| c).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::maximizer_set;
    use crate::sumrank::all_elements;

    fn p(s: &str) -> Profile {
        Profile::parse(s).unwrap()
    }

    fn gf(q: u64) -> Field {
        Field::new(q).unwrap()
    }

    fn seven() -> Profile {
        p(&["2x2"; 7].join(","))
    }

    fn elements(m: Materialized) -> Vec<SumRankVector> {
        match m {
            Materialized::Linear(space) => {
                let f = space.field().clone();
                space
                    .elements()
                    .map(|c| SumRankVector::from_coords(&f, space.profile(), &c).unwrap())
                    .collect()
            }
            Materialized::Explicit(v) => v,
        }
    }

    #[test]
    fn hybrid_table_sizes() {
        let pr = seven();
        let sizes: Vec<String> = ["full,full,full,full,zero,zero,zero",
            "full,full,full,ball(s=1,blocks=4..7)",
            "full,full,ball(s=2,blocks=3..7)",
            "full,ball(s=3,blocks=2..7)",
            "ball(s=4,blocks=1..7)"]
        .iter()
        .map(|t| {
            let spec = AnticodeSpec::parse(&pr, &gf(3), t).unwrap();
            assert_eq!(spec.diameter(), 8);
            assert_eq!(spec.to_string(), *t);
            spec.size(3).unwrap().to_string()
        })
        .collect();
        assert_eq!(sizes, ["43046721", "68555889", "69815601", "58099761", "43142961"]);
    }

    #[test]
    fn trivial_specs() {
        let pr = p("2x3,1x1");
        let zero = AnticodeSpec::uniform(&pr, BlockFactor::Zero).unwrap();
        assert_eq!(zero.size(2).unwrap(), BigUint::from(1u8));
        assert_eq!(zero.diameter(), 0);
        let full = AnticodeSpec::uniform(&pr, BlockFactor::Full).unwrap();
        assert_eq!(full.diameter(), 3);
        let single = p("2x3");
        let full = AnticodeSpec::uniform(&single, BlockFactor::Full).unwrap();
        match full.materialize(&gf(2), 1 << 10).unwrap() {
            Materialized::Linear(s) => assert_eq!(s.dim(), 6),
            _ => panic!("expected a linear space"),
        }
    }

    #[test]
    fn malformed_specs() {
        let pr = p("2x2,1x1");
        let f = gf(2);
        assert!(AnticodeSpec::parse(&pr, &f, "full").is_err());
        assert!(AnticodeSpec::parse(&pr, &f, "full,bogus").is_err());
        assert!(AnticodeSpec::parse(&pr, &f, "ham(1),full").is_err());
        assert!(AnticodeSpec::parse(&pr, &f, "col(1 0 0),zero").is_err());
        assert!(AnticodeSpec::parse(&pr, &f, "ball(s=1,blocks=1..3)").is_err());
        assert!(AnticodeSpec::new(&pr, vec![BlockFactor::InBall, BlockFactor::Zero], None).is_err());
        let spec = AnticodeSpec::parse(&pr, &f, "col(0 1),ham(1)").unwrap();
        assert!(matches!(spec.size(3), Err(Error::MalformedSpec(_))));
    }

    #[test]
    fn projection_is_the_stated_space() {
        let f = gf(2);
        let pr = p("3x3,2x2");
        let u = &maximizer_set(&pr, 4).unwrap()[0];
        let spec = AnticodeSpec::projection(&f, &pr, u).unwrap();
        assert_eq!(spec.to_string(), "full,col(0 1)");
        assert_eq!(spec.diameter(), 4);
        let Materialized::Linear(space) = spec.materialize(&f, 1 << 16).unwrap() else {
            panic!("expected a linear space")
        };
        assert_eq!(space.dim(), 11);
        let report = verify_linear_anticode(&space, 4, 1 << 12).unwrap();
        assert!(report.holds);
        assert_eq!(report.diameter, 4);
    }

    #[test]
    fn materialized_size_and_diameter_match_formulas() {
        let cases = [
            ("2x2", 2u64, "col(1 1)"),
            ("2x2", 3, "row(1 2)"),
            ("2x3", 2, "row(1 0 1;0 1 1)"),
            ("3x3", 2, "col(1 0 1;0 1 0)"),
            ("2x2,1x1", 2, "ball(s=1,blocks=1..2)"),
            ("2x2,2x2", 2, "ball(s=1,blocks=1..2)"),
            ("2x2,1x1,1x1", 2, "zero,ball(s=1,blocks=2..3)"),
            ("2x2,1x1", 3, "col(1 2),ham(1)"),
            ("2x2,1x2", 2, "ball(s=2,blocks=1..2)"),
            ("1x2,1x2,1x1", 3, "full,ball(s=1,blocks=2..3)"),
        ];
        for (prof, q, text) in cases {
            let pr = p(prof);
            let f = gf(q);
            let spec = AnticodeSpec::parse(&pr, &f, text).unwrap();
            let els = elements(spec.materialize(&f, 1 << 16).unwrap());
            assert_eq!(BigUint::from(els.len()), spec.size(q as u32).unwrap(), "{prof} {text}");
            let report = verify_anticode_set(&els, spec.diameter()).unwrap();
            assert_eq!(report.diameter, spec.diameter(), "{prof} {text}");
            assert_eq!(report.witness.0.srk_distance(&report.witness.1).unwrap(), report.diameter);
        }
    }

    #[test]
    fn supports_of_every_dimension_are_anticodes() {
        for q in [2u64, 3] {
            let f = gf(q);
            for (n, m) in [(2, 2), (2, 3), (3, 3)] {
                let pr = Profile::new(&[(n, m)]).unwrap();
                for k in 0..=n {
                    for u in Subspace::all_of_dim(&f, n, k).into_iter().take(4) {
                        let spec = AnticodeSpec::new(&pr, vec![BlockFactor::ColSupport(u)], None).unwrap();
                        let Materialized::Linear(s) = spec.materialize(&f, 1 << 20).unwrap() else { panic!() };
                        assert_eq!(s.dim(), m * k);
                        assert_eq!(verify_linear_anticode(&s, k, 1 << 20).unwrap().diameter, k);
                    }
                }
                for k in 0..=n {
                    for v in Subspace::all_of_dim(&f, m, k).into_iter().take(4) {
                        let spec = AnticodeSpec::new(&pr, vec![BlockFactor::RowSupport(v)], None).unwrap();
                        let Materialized::Linear(s) = spec.materialize(&f, 1 << 20).unwrap() else { panic!() };
                        assert_eq!(s.dim(), n * k);
                        assert_eq!(verify_linear_anticode(&s, k, 1 << 20).unwrap().diameter, k);
                    }
                }
            }
        }
    }

    #[test]
    fn projection_dimension_and_diameter() {
        let f = gf(2);
        let pr = p("2x3,2x2,1x1");
        for r in 0..=pr.total_rows() {
            for u in crate::bounds::enumerate_compositions(&pr, r).unwrap() {
                let spec = AnticodeSpec::projection(&f, &pr, &u).unwrap();
                let Materialized::Linear(s) = spec.materialize(&f, 1 << 20).unwrap() else { panic!() };
                assert_eq!(s.dim(), u.weighted(&pr));
                assert_eq!(verify_linear_anticode(&s, r, 1 << 20).unwrap().diameter, r);
            }
        }
    }

    #[test]
    fn verify_examples() {
        let f = gf(2);
        let pr = p("1x1,1x1,1x1");
        let zero = SumRankVector::zero(&f, &pr);
        assert!(verify_anticode_set(std::slice::from_ref(&zero), 0).unwrap().holds);
        let whole = LinearSpace::whole(&f, &pr);
        let rep = verify_linear_anticode(&whole, 3, 1 << 10).unwrap();
        assert_eq!((rep.holds, rep.diameter), (true, 3));
        let a = |v: &[u32]| {
            let c: Vec<Elem> = v.iter().map(|&x| f.elem(x).unwrap()).collect();
            SumRankVector::from_coords(&f, &pr, &c).unwrap()
        };
        let span = LinearSpace::span(&f, &pr, &[a(&[1, 0, 1]), a(&[0, 1, 1])]).unwrap();
        let rep = verify_linear_anticode(&span, 2, 1 << 10).unwrap();
        assert!(rep.holds);
        assert_eq!(span.dim(), 2);
        let all = all_elements(&f, &pr, 1 << 10).unwrap();
        assert!(!verify_anticode_set(&all, 2).unwrap().holds);
    }

    #[test]
    fn hybrid_winners_by_field_size() {
        let pr = seven();
        let top = |q: u32| {
            let list = hybrid_search(&pr, q, 8).unwrap();
            assert!(list.iter().all(|c| c.diameter <= 8));
            (list[0].spec.to_string(), list[0].size.to_string())
        };
        assert_eq!(top(3), ("full,full,ball(s=2,blocks=3..7)".to_string(), "69815601".to_string()));
        assert_eq!(top(2).0, "ball(s=4,blocks=1..7)");
        assert_eq!(top(4), ("full,full,full,ball(s=1,blocks=4..7)".to_string(), "5049942016".to_string()));
        assert_eq!(top(5).0, "full,full,full,full,zero,zero,zero");
    }

    #[test]
    fn hybrid_search_ignores_input_order() {
        let a = hybrid_search(&p("2x2,1x3,1x1,2x2"), 2, 3).unwrap();
        let b = hybrid_search(&p("1x1,2x2,2x2,3x1"), 2, 3).unwrap();
        assert_eq!(a, b);
        assert!(a.iter().any(|c| c.spec.is_linear() && c.size == BigUint::from(2u8).pow(7)));
    }
}
