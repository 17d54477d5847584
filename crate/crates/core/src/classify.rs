//! Classification of optimal linear anticodes: the family description, its
//! size over `F_q`, explicit generation, and an exhaustive cross-check.

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::anticode::{AnticodeSpec, BlockFactor, Materialized};
use crate::bounds::{compositions, equal_m_run, gaussian_binomial, max_anticode_dim, split_radius, BigCount};
use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::matrix::{combinations, Subspace};
use crate::sumrank::{srk_of_coords, LinearSpace, Profile};

/// What the optimal linear `r`-anticodes look like beyond the forced full blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    /// Case `m_j > 1`: block `i` in `ell..=ell_prime` carries an optimal
    /// `r_i`-anticode of `F^{n_i x m_i}`, for each listed `(r_ell, ..., r_ell')`.
    Rank { compositions: Vec<Vec<usize>> },
    /// Case `m_j = 1`: an optimal Hamming anticode of the given weight in the
    /// trailing `1x1` blocks `ell..t`.
    Hamming { length: usize, weight: usize },
    /// `r = N`: the whole space.
    Whole,
}

/// Indices are 0-based canonical block numbers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationCase {
    pub r: usize,
    /// Block where the radius runs out (`t` when `r = N`).
    pub j: usize,
    pub delta: usize,
    /// First block with `m_i = m_j`.
    pub ell: usize,
    /// Last block with `m_i = m_j`.
    pub ell_prime: usize,
    /// Number of blocks with `m_i > 1`.
    pub s: usize,
    pub family: Family,
}

impl ClassificationCase {
    /// Blocks that are the full matrix space in every optimal anticode.
    pub fn forced_full(&self) -> std::ops::Range<usize> {
        0..self.ell
    }

    /// Blocks that are zero in every optimal anticode.
    pub fn forced_zero(&self, profile: &Profile) -> std::ops::Range<usize> {
        match self.family {
            Family::Rank { .. } => self.ell_prime + 1..profile.t(),
            _ => profile.t()..profile.t(),
        }
    }

    pub fn is_rank_case(&self) -> bool {
        matches!(self.family, Family::Rank { .. })
    }

    /// Whether a Hamming factor with real choice is present.
    pub fn has_nontrivial_hamming(&self) -> bool {
        matches!(self.family, Family::Hamming { length, weight } if weight > 0 && weight < length)
    }
}

pub fn classify_families(profile: &Profile, r: usize) -> Result<ClassificationCase> {
    let (j, delta) = split_radius(profile, r)?;
    let t = profile.t();
    let s = (0..t).filter(|&i| profile.m(i) > 1).count();
    if j == t {
        return Ok(ClassificationCase {
            r,
            j,
            delta,
            ell: t,
            ell_prime: t,
            s,
            family: Family::Whole,
        });
    }
    let (ell, ell_prime) = equal_m_run(profile, j);
    let family = if profile.m(j) > 1 {
        let target: usize = (ell..j).map(|i| profile.n(i)).sum::<usize>() + delta;
        let bounds: Vec<usize> = (ell..=ell_prime).map(|i| profile.n(i)).collect();
        Family::Rank {
            compositions: compositions(&bounds, target),
        }
    } else {
        Family::Hamming {
            length: t - ell,
            weight: j - ell,
        }
    };
    Ok(ClassificationCase {
        r,
        j,
        delta,
        ell,
        ell_prime,
        s,
        family,
    })
}

/// Number of optimal linear `r_i`-anticodes in `F_q^{n x m}` (`n <= m`).
fn block_count(n: usize, m: usize, r: usize, q: u32) -> Result<BigCount> {
    if r == 0 || r == n {
        return Ok(BigUint::from(1u8));
    }
    let g = gaussian_binomial(n, r, q)?;
    Ok(if n == m { g * 2u8 } else { g })
}

fn binomial(n: usize, k: usize) -> BigCount {
    (0..k).fold(BigUint::from(1u8), |acc, i| acc * (n - i) / (i + 1))
}

/// Number of distinct optimal linear `r`-anticodes over `F_q`.
pub fn count_optimal(profile: &Profile, r: usize, q: u32) -> Result<BigCount> {
    crate::gf::check_field_size(q as u64)?;
    let case = classify_families(profile, r)?;
    match &case.family {
        Family::Whole => Ok(BigUint::from(1u8)),
        Family::Hamming { length, weight } => {
            if q == 2 && case.has_nontrivial_hamming() {
                return Err(Error::BinaryHammingUnsupported);
            }
            Ok(binomial(*length, *weight))
        }
        Family::Rank { compositions } => {
            let mut total = BigUint::from(0u8);
            for comp in compositions {
                let mut prod = BigUint::from(1u8);
                for (k, &ri) in comp.iter().enumerate() {
                    let i = case.ell + k;
                    prod *= block_count(profile.n(i), profile.m(i), ri, q)?;
                }
                total += prod;
            }
            Ok(total)
        }
    }
}

/// Optimal linear `r`-anticodes of a single `n x m` block, as factors.
fn block_factors(field: &Field, n: usize, m: usize, r: usize) -> Vec<BlockFactor> {
    if r == 0 {
        return vec![BlockFactor::Zero];
    }
    if r == n {
        return vec![BlockFactor::Full];
    }
    let mut out: Vec<BlockFactor> = Subspace::all_of_dim(field, n, r)
        .into_iter()
        .map(BlockFactor::ColSupport)
        .collect();
    if n == m {
        out.extend(Subspace::all_of_dim(field, m, r).into_iter().map(BlockFactor::RowSupport));
    }
    out
}

/// Every member of the family, as canonical linear spaces sorted by basis.
/// Fails if there are more than `limit` members.
pub fn generate_family(field: &Field, profile: &Profile, r: usize, limit: u64) -> Result<Vec<LinearSpace>> {
    let count = count_optimal(profile, r, field.q())?;
    if count > BigUint::from(limit) {
        return Err(Error::TooLargeToEnumerate {
            size: count.to_string(),
            cutoff: limit,
        });
    }
    let case = classify_families(profile, r)?;
    let t = profile.t();
    let mut specs: Vec<Vec<BlockFactor>> = Vec::new();
    let mut base = vec![BlockFactor::Zero; t];
    for slot in base.iter_mut().take(case.ell.min(t)) {
        *slot = BlockFactor::Full;
    }
    match &case.family {
        Family::Whole => specs.push(base),
        Family::Hamming { length, weight } => {
            for pick in combinations(*length, *weight) {
                let mut f = base.clone();
                for i in 0..*length {
                    f[case.ell + i] = BlockFactor::Hamming(pick.contains(&i));
                }
                specs.push(f);
            }
        }
        Family::Rank { compositions } => {
            for comp in compositions {
                let options: Vec<Vec<BlockFactor>> = comp
                    .iter()
                    .enumerate()
                    .map(|(k, &ri)| {
                        let i = case.ell + k;
                        block_factors(field, profile.n(i), profile.m(i), ri)
                    })
                    .collect();
                let mut idx = vec![0usize; options.len()];
                'product: loop {
                    let mut f = base.clone();
                    for (k, &x) in idx.iter().enumerate() {
                        f[case.ell + k] = options[k][x].clone();
                    }
                    specs.push(f);
                    for k in 0..idx.len() {
                        idx[k] += 1;
                        if idx[k] < options[k].len() {
                            continue 'product;
                        }
                        idx[k] = 0;
                    }
                    break;
                }
            }
        }
    }
    let mut out = specs
        .into_par_iter()
        .map(|f| match AnticodeSpec::new(profile, f, None)?.materialize(field, 0)? {
            Materialized::Linear(s) => Ok(s),
            Materialized::Explicit(_) => unreachable!("no ball factor"),
        })
        .collect::<Result<Vec<_>>>()?;
    out.sort_by(|a, b| a.subspace().cmp(b.subspace()));
    Ok(out)
}

/// Every `K`-dimensional `r`-anticode of `Π`, found by building reduced
/// echelon bases from the last pivot upward and discarding any partial basis
/// whose span already has an element of sum-rank above `r`.
pub fn brute_force_optimal(field: &Field, profile: &Profile, r: usize, cutoff: u64) -> Result<Vec<LinearSpace>> {
    let k = max_anticode_dim(profile, r)?.k;
    let d = profile.dim();
    let q = field.q();
    let size = BigUint::from(q).pow(d as u32);
    if size > BigUint::from(cutoff) {
        return Err(Error::TooLargeToEnumerate {
            size: size.to_string(),
            cutoff,
        });
    }
    if k == 0 {
        return Ok(vec![LinearSpace::from_subspace(profile, Subspace::zero(field, d))?]);
    }
    let search = Search { field, profile, r, k, d };
    let roots: Vec<Vec<Elem>> = (k - 1..d).flat_map(|p| search.rows_with_pivot(p, &[])).collect();
    let mut found: Vec<Vec<Vec<Elem>>> = roots
        .into_par_iter()
        .flat_map_iter(|row| {
            let mut out = Vec::new();
            let mut span = vec![vec![Elem::ZERO; d]];
            if search.extend_span(&mut span, &row) {
                let mut rows = vec![row];
                search.dfs(&mut rows, &mut span, &mut out);
            }
            out
        })
        .collect();
    for basis in &mut found {
        basis.reverse();
    }
    let mut spaces = found
        .into_iter()
        .map(|b| LinearSpace::from_subspace(profile, Subspace::span(field, d, b)?))
        .collect::<Result<Vec<_>>>()?;
    spaces.sort_by(|a, b| a.subspace().cmp(b.subspace()));
    Ok(spaces)
}

struct Search<'a> {
    field: &'a Field,
    profile: &'a Profile,
    r: usize,
    k: usize,
    d: usize,
}

impl Search<'_> {
    fn pivot(v: &[Elem]) -> usize {
        v.iter().position(|e| !e.is_zero()).expect("nonzero row")
    }

    /// Reduced rows with leading 1 at `p` and zeros at the pivots of `rows`.
    fn rows_with_pivot(&self, p: usize, rows: &[Vec<Elem>]) -> Vec<Vec<Elem>> {
        let taken: Vec<usize> = rows.iter().map(|v| Self::pivot(v)).collect();
        let free: Vec<usize> = (p + 1..self.d).filter(|c| !taken.contains(c)).collect();
        let q = self.field.q();
        let mut out = Vec::new();
        let mut digits = vec![0u32; free.len()];
        loop {
            let mut v = vec![Elem::ZERO; self.d];
            v[p] = Elem::ONE;
            for (&c, &x) in free.iter().zip(&digits) {
                v[c] = self.field.elem(x).expect("digit below q");
            }
            out.push(v);
            if !crate::matrix::odometer(&mut digits, q) {
                break;
            }
        }
        out
    }

    /// Adds `row` to the span if every new element stays within radius `r`.
    fn extend_span(&self, span: &mut Vec<Vec<Elem>>, row: &[Elem]) -> bool {
        let mut scratch = Vec::new();
        let mut added = Vec::new();
        for c in self.field.elements().skip(1) {
            for x in span.iter() {
                let y: Vec<Elem> = x
                    .iter()
                    .zip(row)
                    .map(|(&a, &b)| self.field.add(a, self.field.mul(c, b)))
                    .collect();
                if srk_of_coords(self.field, self.profile, &y, &mut scratch) > self.r {
                    return false;
                }
                added.push(y);
            }
        }
        span.extend(added);
        true
    }

    fn dfs(&self, rows: &mut Vec<Vec<Elem>>, span: &mut Vec<Vec<Elem>>, out: &mut Vec<Vec<Vec<Elem>>>) {
        if rows.len() == self.k {
            out.push(rows.clone());
            return;
        }
        let last = Self::pivot(rows.last().expect("non-empty"));
        let need = self.k - rows.len();
        for p in (need - 1..last).rev() {
            for row in self.rows_with_pivot(p, rows) {
                let before = span.len();
                if self.extend_span(span, &row) {
                    rows.push(row);
                    self.dfs(rows, span, out);
                    rows.pop();
                    span.truncate(before);
                }
            }
        }
    }
}

/// Whether `A = p_1(A) ⊕ p_{2..t}(A)`.
pub fn splits_off_first_block(space: &LinearSpace) -> Result<bool> {
    let t = space.profile().t();
    if t < 2 {
        return Ok(true);
    }
    let first = space.project(&[0])?;
    let rest = space.project(&(1..t).collect::<Vec<_>>())?;
    Ok(first.dim() + rest.dim() == space.dim())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::anticode::verify_linear_anticode;
    use crate::sumrank::SumRankVector;

    fn p(s: &str) -> Profile {
        Profile::parse(s).unwrap()
    }

    fn gf(q: u64) -> Field {
        Field::new(q).unwrap()
    }

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn family_descriptions() {
        let c = classify_families(&p("3x3,2x2"), 4).unwrap();
        assert_eq!((c.j, c.delta, c.ell, c.ell_prime), (1, 1, 1, 1));
        assert_eq!(c.family, Family::Rank { compositions: vec![vec![1]] });
        assert_eq!(c.forced_full(), 0..1);

        let c = classify_families(&p("2x2,1x1,1x1"), 3).unwrap();
        assert_eq!(c.family, Family::Hamming { length: 2, weight: 1 });
        assert_eq!(c.forced_full(), 0..1);
        assert_eq!(c.s, 1);

        let c = classify_families(&p("2x2,2x2"), 2).unwrap();
        assert_eq!(c.family, Family::Rank { compositions: vec![vec![0, 2], vec![1, 1], vec![2, 0]] });

        let c = classify_families(&p("2x3,1x1"), 0).unwrap();
        assert_eq!(c.family, Family::Rank { compositions: vec![vec![0]] });
        assert_eq!(c.forced_zero(&p("2x3,1x1")), 1..2);

        assert_eq!(classify_families(&p("2x2"), 2).unwrap().family, Family::Whole);
        assert!(classify_families(&p("2x2"), 3).is_err());
    }

    #[test]
    fn counts() {
        assert_eq!(count_optimal(&p("2x3"), 1, 2).unwrap(), big(3));
        assert_eq!(count_optimal(&p("2x2"), 1, 2).unwrap(), big(6));
        assert_eq!(count_optimal(&p("3x3,2x2,1x1"), 0, 5).unwrap(), big(1));
        assert_eq!(count_optimal(&p("1x1,1x1,1x1"), 1, 3).unwrap(), big(3));
        assert_eq!(count_optimal(&p("1x1,1x1,1x1"), 2, 2), Err(Error::BinaryHammingUnsupported));
        assert_eq!(count_optimal(&p("2x2,1x1,1x1"), 2, 2).unwrap(), big(1));
        // two blocks, weight split (0,2),(1,1),(2,0): 1 + 6*6 + 1 over F_2
        assert_eq!(count_optimal(&p("2x2,2x2"), 2, 2).unwrap(), big(38));
    }

    #[test]
    fn brute_force_examples() {
        let f = gf(2);
        let pr = p("2x2,1x1");
        let spaces = brute_force_optimal(&f, &pr, 2, 1 << 20).unwrap();
        assert_eq!(spaces.len(), 1);
        assert_eq!(spaces[0].dim(), 4);

        let f3 = gf(3);
        let h = p("1x1,1x1,1x1");
        assert_eq!(brute_force_optimal(&f3, &h, 1, 1 << 20).unwrap().len(), 3);

        let found = brute_force_optimal(&f, &h, 2, 1 << 20).unwrap();
        let v = |x: [u32; 3]| {
            let c: Vec<Elem> = x.iter().map(|&e| f.elem(e).unwrap()).collect();
            SumRankVector::from_coords(&f, &h, &c).unwrap()
        };
        let odd = LinearSpace::span(&f, &h, &[v([1, 0, 1]), v([0, 1, 1])]).unwrap();
        assert!(found.contains(&odd));
        assert_eq!(found.len(), 4);
    }

    #[test]
    fn family_matches_brute_force() {
        let cases = [("2x3", 2u64), ("2x2", 2), ("2x2", 3), ("2x2,1x1", 2), ("2x2,1x1", 3), ("1x1,1x1,1x1", 3), ("1x2,1x2", 2), ("1x3,1x1,1x1", 3)];
        for (prof, q) in cases {
            let pr = p(prof);
            let f = gf(q);
            for r in 0..=pr.total_rows() {
                let family = generate_family(&f, &pr, r, 1 << 16).unwrap();
                let brute = brute_force_optimal(&f, &pr, r, 1 << 20).unwrap();
                assert_eq!(family, brute, "{prof} q={q} r={r}");
                assert_eq!(count_optimal(&pr, r, q as u32).unwrap(), big(brute.len() as u64));
                for a in &brute {
                    assert!(splits_off_first_block(a).unwrap());
                    assert!(verify_linear_anticode(a, r, 1 << 20).unwrap().holds);
                }
            }
        }
    }

    #[test]
    fn binary_hamming_family_is_refused() {
        let f = gf(2);
        let h = p("1x1,1x1,1x1");
        assert_eq!(generate_family(&f, &h, 1, 100), Err(Error::BinaryHammingUnsupported));
    }
}
