//! Dimension bound for linear anticodes, ball volumes, and the Singleton,
//! sphere-packing and code-anticode bounds.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::gf::{check_field_size, Elem, Field};
use crate::sumrank::{Profile, SumRankVector};

/// Exact non-negative count.
pub type BigCount = BigUint;

/// A tuple `(u_1, ..., u_t)` with `0 <= u_i <= n_i`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightComposition(pub Vec<usize>);

impl WeightComposition {
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// `Σ m_i u_i`, the dimension of the matching projection anticode.
    pub fn weighted(&self, profile: &Profile) -> usize {
        self.0.iter().enumerate().map(|(i, &u)| profile.m(i) * u).sum()
    }
}

impl fmt::Display for WeightComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

fn check_radius(profile: &Profile, r: usize) -> Result<()> {
    if r > profile.total_rows() {
        return Err(Error::RadiusOutOfRange {
            r,
            max: profile.total_rows(),
        });
    }
    Ok(())
}

fn check_distance(profile: &Profile, d: usize) -> Result<()> {
    if d == 0 || d > profile.total_rows() {
        return Err(Error::DistanceOutOfRange {
            d,
            max: profile.total_rows(),
        });
    }
    Ok(())
}

/// Compositions of `target` over `bounds` (each part `0..=bound`), lexicographic.
pub(crate) fn compositions(bounds: &[usize], target: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(bounds.len());
    let mut rest_cap: Vec<usize> = vec![0; bounds.len() + 1];
    for i in (0..bounds.len()).rev() {
        rest_cap[i] = rest_cap[i + 1] + bounds[i];
    }
    fn go(
        i: usize,
        left: usize,
        bounds: &[usize],
        rest_cap: &[usize],
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if i == bounds.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let lo = left.saturating_sub(rest_cap[i + 1]);
        for u in lo..=bounds[i].min(left) {
            cur.push(u);
            go(i + 1, left - u, bounds, rest_cap, cur, out);
            cur.pop();
        }
    }
    go(0, target, bounds, &rest_cap, &mut cur, &mut out);
    out
}

/// The set `U_r`: all compositions of `r` bounded by the block row counts.
pub fn enumerate_compositions(profile: &Profile, r: usize) -> Result<Vec<WeightComposition>> {
    check_radius(profile, r)?;
    let bounds: Vec<usize> = (0..profile.t()).map(|i| profile.n(i)).collect();
    Ok(compositions(&bounds, r)
        .into_iter()
        .map(WeightComposition)
        .collect())
}

/// Splits `r = Σ_{i<j} n_i + δ` with `0 <= δ < n_j` (blocks 0-based).
/// For `r = N` this returns `(t, 0)`.
pub fn split_radius(profile: &Profile, r: usize) -> Result<(usize, usize)> {
    check_radius(profile, r)?;
    let mut rest = r;
    for i in 0..profile.t() {
        if rest < profile.n(i) {
            return Ok((i, rest));
        }
        rest -= profile.n(i);
    }
    Ok((profile.t(), 0))
}

/// Largest dimension of a linear `r`-anticode, with the split that produces it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AnticodeDim {
    /// `K = Σ_{i<j} m_i n_i + m_j δ`.
    pub k: usize,
    /// Block `j` (0-based) where the radius runs out; `t` when `r = N`.
    pub block: usize,
    pub delta: usize,
}

/// Closed form for `max { Σ m_i u_i : u in U_r }`.
pub fn max_anticode_dim(profile: &Profile, r: usize) -> Result<AnticodeDim> {
    let (j, delta) = split_radius(profile, r)?;
    let full: usize = (0..j).map(|i| profile.m(i) * profile.n(i)).sum();
    let partial = if j < profile.t() { profile.m(j) * delta } else { 0 };
    Ok(AnticodeDim {
        k: full + partial,
        block: j,
        delta,
    })
}

/// The run `l..=l'` of blocks sharing `m_j` (0-based, inclusive).
pub(crate) fn equal_m_run(profile: &Profile, j: usize) -> (usize, usize) {
    let mj = profile.m(j);
    let mut lo = j;
    while lo > 0 && profile.m(lo - 1) == mj {
        lo -= 1;
    }
    let mut hi = j;
    while hi + 1 < profile.t() && profile.m(hi + 1) == mj {
        hi += 1;
    }
    (lo, hi)
}

/// All `u` in `U_r` attaining the maximum: blocks before the equal-`m` run
/// around `j` are full, blocks after it are empty, and the run itself carries
/// the remaining weight in any admissible way.
pub fn maximizer_set(profile: &Profile, r: usize) -> Result<Vec<WeightComposition>> {
    let (j, delta) = split_radius(profile, r)?;
    let t = profile.t();
    if j == t {
        return Ok(vec![WeightComposition((0..t).map(|i| profile.n(i)).collect())]);
    }
    let (lo, hi) = equal_m_run(profile, j);
    let target: usize = (lo..j).map(|i| profile.n(i)).sum::<usize>() + delta;
    let bounds: Vec<usize> = (lo..=hi).map(|i| profile.n(i)).collect();
    Ok(compositions(&bounds, target)
        .into_iter()
        .map(|mid| {
            let mut u = vec![0; t];
            for (i, slot) in u.iter_mut().enumerate().take(lo) {
                *slot = profile.n(i);
            }
            u[lo..=hi].copy_from_slice(&mid);
            WeightComposition(u)
        })
        .collect())
}

/// Number of `s`-dimensional subspaces of `F_q^n`.
pub fn gaussian_binomial(n: usize, s: usize, q: u32) -> Result<BigCount> {
    if s > n {
        return Err(Error::OutOfRange(format!("[{n} {s}]_q needs s <= n")));
    }
    if q < 2 {
        return Err(Error::OutOfRange(format!("q = {q}")));
    }
    let q = BigUint::from(q);
    let one = BigUint::one();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..s {
        num *= q.pow((n - i) as u32) - &one;
        den *= q.pow((i + 1) as u32) - &one;
    }
    Ok(num / den)
}

/// Number of `n x m` matrices over `F_q` of rank exactly `s`.
pub fn rank_census(n: usize, m: usize, s: usize, q: u32) -> Result<BigCount> {
    if s > n.min(m) {
        return Err(Error::OutOfRange(format!("rank {s} in a {n}x{m} matrix")));
    }
    let mut count = gaussian_binomial(n, s, q)?;
    let qb = BigUint::from(q);
    for j in 0..s {
        count *= qb.pow(m as u32) - qb.pow(j as u32);
    }
    Ok(count)
}

/// `w[s]` = number of elements of `Π` of sum-rank exactly `s`, for `s = 0..=N`.
///
/// This is the sum over `U_s` of products of per-block rank counts, evaluated
/// as a convolution of the per-block distributions.
pub fn weight_distribution(profile: &Profile, q: u32) -> Result<Vec<BigCount>> {
    check_field_size(q as u64)?;
    let mut dist = vec![BigUint::one()];
    for &(n, m) in profile.dims() {
        let block: Vec<BigUint> = (0..=n).map(|s| rank_census(n, m, s, q)).collect::<Result<_>>()?;
        let mut next = vec![BigUint::zero(); dist.len() + n];
        for (a, x) in dist.iter().enumerate() {
            for (b, y) in block.iter().enumerate() {
                next[a + b] += x * y;
            }
        }
        dist = next;
    }
    Ok(dist)
}

/// `V_r(Π)`, the number of elements of sum-rank at most `r`.
pub fn ball_volume(profile: &Profile, q: u32, r: usize) -> Result<BigCount> {
    check_radius(profile, r)?;
    Ok(weight_distribution(profile, q)?.into_iter().take(r + 1).sum())
}

/// Exponent of the Singleton bound: `Σ_{i>=j} m_i n_i - m_j δ` for `d - 1 = Σ_{i<j} n_i + δ`.
pub fn singleton_exponent(profile: &Profile, d: usize) -> Result<usize> {
    check_distance(profile, d)?;
    let (j, delta) = split_radius(profile, d - 1)?;
    let tail: usize = (j..profile.t()).map(|i| profile.m(i) * profile.n(i)).sum();
    Ok(tail - profile.m(j) * delta)
}

/// `q^{Σ_{i>=j} m_i n_i - m_j δ}`.
pub fn singleton_bound(profile: &Profile, q: u32, d: usize) -> Result<BigCount> {
    check_field_size(q as u64)?;
    Ok(BigUint::from(q).pow(singleton_exponent(profile, d)? as u32))
}

/// `⌊|Π| / V_r(Π)⌋` with `r = ⌊(d-1)/2⌋`.
pub fn sphere_packing_bound(profile: &Profile, q: u32, d: usize) -> Result<BigCount> {
    check_distance(profile, d)?;
    let v = ball_volume(profile, q, (d - 1) / 2)?;
    Ok(profile.cardinality(q) / v)
}

/// Outcome of checking `|C| |A| <= |Π|` on explicit sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeAnticodeReport {
    pub code_size: BigCount,
    pub anticode_size: BigCount,
    pub space_size: BigCount,
    pub holds: bool,
    pub tight: bool,
}

fn describe(v: &SumRankVector) -> String {
    let reps: Vec<String> = v.to_coords().iter().map(Elem::to_string).collect();
    format!("[{}]", reps.join(" "))
}

fn dedup(vs: &[SumRankVector]) -> Vec<&SumRankVector> {
    let mut seen = HashSet::new();
    vs.iter().filter(|v| seen.insert(v.to_coords())).collect()
}

/// Verifies both hypotheses pairwise (minimum distance of `code` at least
/// `d`, diameter of `anticode` at most `d - 1`), then the inequality.
pub fn code_anticode_check(
    field: &Field,
    profile: &Profile,
    code: &[SumRankVector],
    anticode: &[SumRankVector],
    d: usize,
) -> Result<CodeAnticodeReport> {
    if d == 0 {
        return Err(Error::DistanceOutOfRange {
            d,
            max: profile.total_rows(),
        });
    }
    if code.is_empty() || anticode.is_empty() {
        return Err(Error::HypothesisViolated("code and anticode must be non-empty".into()));
    }
    for v in code.iter().chain(anticode) {
        if v.field() != field || v.blocks().len() != profile.t() {
            return Err(Error::ProfileMismatch);
        }
        let shapes = v.blocks().iter().map(|b| (b.rows(), b.cols()));
        if !shapes.eq(profile.dims().iter().copied()) {
            return Err(Error::ProfileMismatch);
        }
    }
    let code = dedup(code);
    let anticode = dedup(anticode);
    for (i, x) in code.iter().enumerate() {
        for y in &code[i + 1..] {
            let dist = x.srk_distance(y)?;
            if dist < d {
                return Err(Error::HypothesisViolated(format!(
                    "code elements {} and {} are at distance {dist} < {d}",
                    describe(x),
                    describe(y)
                )));
            }
        }
    }
    for (i, x) in anticode.iter().enumerate() {
        for y in &anticode[i + 1..] {
            let dist = x.srk_distance(y)?;
            if dist > d - 1 {
                return Err(Error::HypothesisViolated(format!(
                    "anticode elements {} and {} are at distance {dist} > {}",
                    describe(x),
                    describe(y),
                    d - 1
                )));
            }
        }
    }
    let code_size = BigUint::from(code.len());
    let anticode_size = BigUint::from(anticode.len());
    let space_size = profile.cardinality(field.q());
    let product = &code_size * &anticode_size;
    Ok(CodeAnticodeReport {
        holds: product <= space_size,
        tight: product == space_size,
        code_size,
        anticode_size,
        space_size,
    })
}

/// Which of two quantities wins; equal values are reported as a tie.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Winner {
    Singleton,
    SpherePacking,
    LinearAnticode,
    Ball,
    Tie,
}

impl fmt::Display for Winner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Winner::Singleton => "singleton",
            Winner::SpherePacking => "sphere-packing",
            Winner::LinearAnticode => "linear-anticode",
            Winner::Ball => "ball",
            Winner::Tie => "tie",
        })
    }
}

/// Both bounds for minimum distance `d`, and the two anticodes behind them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundsReport {
    pub profile: Profile,
    pub q: u32,
    pub d: usize,
    pub space_size: BigCount,
    pub singleton: BigCount,
    pub sphere_packing: BigCount,
    /// `⌊|Π| / q^K⌋` with `K` the optimal linear `(d-1)`-anticode dimension.
    pub optimal_anticode_code_bound: BigCount,
    pub linear_anticode_dim: usize,
    pub linear_anticode_size: BigCount,
    pub ball_radius: usize,
    pub ball_size: BigCount,
    /// Smaller of the two code-size bounds.
    pub tightest: Winner,
    /// Larger of the two `(d-1)`-anticodes.
    pub larger_anticode: Winner,
}

pub fn compare_bounds(profile: &Profile, q: u32, d: usize) -> Result<BoundsReport> {
    check_field_size(q as u64)?;
    check_distance(profile, d)?;
    let singleton = singleton_bound(profile, q, d)?;
    let sphere_packing = sphere_packing_bound(profile, q, d)?;
    let k = max_anticode_dim(profile, d - 1)?.k;
    let space_size = profile.cardinality(q);
    let linear_anticode_size = BigUint::from(q).pow(k as u32);
    let ball_radius = (d - 1) / 2;
    let ball_size = ball_volume(profile, q, ball_radius)?;
    let tightest = match singleton.cmp(&sphere_packing) {
        std::cmp::Ordering::Less => Winner::Singleton,
        std::cmp::Ordering::Greater => Winner::SpherePacking,
        std::cmp::Ordering::Equal => Winner::Tie,
    };
    let larger_anticode = match linear_anticode_size.cmp(&ball_size) {
        std::cmp::Ordering::Greater => Winner::LinearAnticode,
        std::cmp::Ordering::Less => Winner::Ball,
        std::cmp::Ordering::Equal => Winner::Tie,
    };
    Ok(BoundsReport {
        profile: profile.clone(),
        q,
        d,
        optimal_anticode_code_bound: &space_size / &linear_anticode_size,
        space_size,
        singleton,
        sphere_packing,
        linear_anticode_dim: k,
        linear_anticode_size,
        ball_radius,
        ball_size,
        tightest,
        larger_anticode,
    })
}

/// Optimal linear `r`-anticode size against the ball of radius `⌊r/2⌋` for
/// each field size in `qs`. Only an empirical scan; it certifies no threshold.
pub fn ball_vs_linear_scan(profile: &Profile, r: usize, qs: &[u32]) -> Result<Vec<(u32, BigCount, BigCount, Winner)>> {
    check_radius(profile, r)?;
    let k = max_anticode_dim(profile, r)?.k;
    qs.iter()
        .map(|&q| {
            let ball = ball_volume(profile, q, r / 2)?;
            let lin = BigUint::from(q).pow(k as u32);
            let w = match lin.cmp(&ball) {
                std::cmp::Ordering::Greater => Winner::LinearAnticode,
                std::cmp::Ordering::Less => Winner::Ball,
                std::cmp::Ordering::Equal => Winner::Tie,
            };
            Ok((q, ball, lin, w))
        })
        .collect()
}
