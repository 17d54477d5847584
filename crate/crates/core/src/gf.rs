//! Arithmetic in the finite field GF(q).
//!
//! Elements are stored as their integer representative: the coefficient
//! vector of the polynomial representative over GF(p), packed base `p` with
//! the constant term least significant. Prime fields use plain modular
//! arithmetic. Extension fields reduce modulo the lexicographically smallest
//! monic irreducible polynomial of degree `e` (coefficients compared from the
//! `x^{e-1}` term down, i.e. by packed value) and multiply through log/antilog
//! tables built from the smallest primitive element.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest supported field size.
pub const MAX_FIELD_SIZE: u64 = 1 << 16;

/// A field element, identified by its integer representative in `0..q`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elem(u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    #[inline]
    pub fn rep(self) -> u32 {
        self.0
    }

    /// Wraps a representative without checking it against any field.
    #[inline]
    pub(crate) fn from_rep_unchecked(rep: u32) -> Elem {
        Elem(rep)
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The four field operations, for callers that dispatch on an operator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Op {
    Add,
    Sub,
    Mul,
    Div,
}

struct Inner {
    q: u32,
    p: u32,
    e: u32,
    /// Monic modulus, coefficients from the constant term up (length `e + 1`).
    modulus: Vec<u32>,
    /// `exp[i] = g^i` for `i < 2(q-1)`; empty for prime fields.
    exp: Vec<u32>,
    /// Discrete log base `g`; `log[0]` is unused.
    log: Vec<u32>,
}

/// A finite field GF(q). Cheap to clone; all clones share the same tables.
#[derive(Clone)]
pub struct Field(Arc<Inner>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        // construction is deterministic in q
        self.0.q == other.0.q
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.0.q)
    }
}

impl Field {
    /// Builds GF(q). Two calls with the same `q` produce identical arithmetic.
    pub fn new(q: u64) -> Result<Field> {
        if q < 2 {
            return Err(Error::NotAPrimePower(q));
        }
        if q > MAX_FIELD_SIZE {
            return Err(Error::FieldTooLarge(q));
        }
        let (p, e) = prime_power(q).ok_or(Error::NotAPrimePower(q))?;
        let (p, e, q) = (p as u32, e, q as u32);
        if e == 1 {
            return Ok(Field(Arc::new(Inner {
                q,
                p,
                e,
                modulus: vec![0, 1],
                exp: Vec::new(),
                log: Vec::new(),
            })));
        }
        let modulus = smallest_irreducible(p, e);
        let (exp, log) = log_tables(p, e, &modulus);
        Ok(Field(Arc::new(Inner {
            q,
            p,
            e,
            modulus,
            exp,
            log,
        })))
    }

    #[inline]
    pub fn q(&self) -> u32 {
        self.0.q
    }

    pub fn characteristic(&self) -> u32 {
        self.0.p
    }

    pub fn degree(&self) -> u32 {
        self.0.e
    }

    /// Coefficients of the defining polynomial, constant term first.
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn is_prime(&self) -> bool {
        self.0.e == 1
    }

    /// Element with representative `rep`, if `rep < q`.
    pub fn elem(&self, rep: u32) -> Result<Elem> {
        if rep < self.0.q {
            Ok(Elem(rep))
        } else {
            Err(Error::OutOfRange(format!(
                "{rep} is not an element of GF({})",
                self.0.q
            )))
        }
    }

    /// All elements in representative order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.0.q).map(Elem)
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let f = &*self.0;
        if f.e == 1 {
            let s = a.0 + b.0;
            Elem(if s >= f.p { s - f.p } else { s })
        } else if f.p == 2 {
            Elem(a.0 ^ b.0)
        } else {
            let (mut x, mut y, mut out, mut place) = (a.0, b.0, 0, 1);
            for _ in 0..f.e {
                out += ((x % f.p + y % f.p) % f.p) * place;
                x /= f.p;
                y /= f.p;
                place *= f.p;
            }
            Elem(out)
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        let f = &*self.0;
        if a.0 == 0 || f.p == 2 {
            a
        } else if f.e == 1 {
            Elem(f.p - a.0)
        } else {
            let (mut x, mut out, mut place) = (a.0, 0, 1);
            for _ in 0..f.e {
                out += ((f.p - x % f.p) % f.p) * place;
                x /= f.p;
                place *= f.p;
            }
            Elem(out)
        }
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        let f = &*self.0;
        if a.0 == 0 || b.0 == 0 {
            return Elem::ZERO;
        }
        if f.e == 1 {
            Elem(((a.0 as u64 * b.0 as u64) % f.p as u64) as u32)
        } else {
            Elem(f.exp[(f.log[a.0 as usize] + f.log[b.0 as usize]) as usize])
        }
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        let f = &*self.0;
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        if f.e == 1 {
            Ok(self.pow(a, (f.p - 2) as u64))
        } else {
            let l = f.log[a.0 as usize];
            Ok(Elem(f.exp[((f.q - 1 - l) % (f.q - 1)) as usize]))
        }
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Elem, mut k: u64) -> Elem {
        let mut base = a;
        let mut acc = Elem::ONE;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn arith(&self, a: Elem, b: Elem, op: Op) -> Result<Elem> {
        match op {
            Op::Add => Ok(self.add(a, b)),
            Op::Sub => Ok(self.sub(a, b)),
            Op::Mul => Ok(self.mul(a, b)),
            Op::Div => self.div(a, b),
        }
    }
}

/// Whether `q` is a prime power no larger than [`MAX_FIELD_SIZE`].
pub fn is_supported_field_size(q: u64) -> bool {
    (2..=MAX_FIELD_SIZE).contains(&q) && prime_power(q).is_some()
}

/// Same checks as [`Field::new`] without building tables.
pub fn check_field_size(q: u64) -> Result<()> {
    if q < 2 {
        Err(Error::NotAPrimePower(q))
    } else if q > MAX_FIELD_SIZE {
        Err(Error::FieldTooLarge(q))
    } else if prime_power(q).is_none() {
        Err(Error::NotAPrimePower(q))
    } else {
        Ok(())
    }
}

/// `(p, e)` with `q = p^e`, or `None` if `q` has two distinct prime factors.
fn prime_power(q: u64) -> Option<(u64, u32)> {
    let mut p = 2;
    while p * p <= q && !q.is_multiple_of(p) {
        p += 1;
    }
    if !q.is_multiple_of(p) {
        p = q;
    }
    let (mut rest, mut e) = (q, 0);
    while rest % p == 0 {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

// Polynomials over GF(p) as coefficient vectors, constant term first.

fn poly_from_packed(mut packed: u32, p: u32, len: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(packed % p);
        packed /= p;
    }
    out
}

fn poly_to_packed(coeffs: &[u32], p: u32) -> u32 {
    coeffs.iter().rev().fold(0, |acc, &c| acc * p + c)
}

fn trim(a: &mut Vec<u32>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

/// Remainder of `a` modulo the monic polynomial `m`.
fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    trim(&mut r);
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        for (i, &c) in m.iter().enumerate() {
            let idx = shift + i;
            r[idx] = (r[idx] + p - (lead * c) % p) % p;
        }
        trim(&mut r);
    }
    r
}

fn poly_mulmod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut prod = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    poly_rem(&prod, m, p)
}

fn is_irreducible(m: &[u32], p: u32) -> bool {
    let e = m.len() - 1;
    for deg in 1..=e / 2 {
        for low in 0..p.pow(deg as u32) {
            let mut d = poly_from_packed(low, p, deg);
            d.push(1);
            if poly_rem(m, &d, p).is_empty() {
                return false;
            }
        }
    }
    true
}

fn smallest_irreducible(p: u32, e: u32) -> Vec<u32> {
    (0..p.pow(e))
        .map(|low| {
            let mut m = poly_from_packed(low, p, e as usize);
            m.push(1);
            m
        })
        .find(|m| is_irreducible(m, p))
        .expect("an irreducible polynomial exists in every degree")
}

fn log_tables(p: u32, e: u32, modulus: &[u32]) -> (Vec<u32>, Vec<u32>) {
    let q = p.pow(e);
    let order = q - 1;
    for g in 2..q {
        let gp = poly_from_packed(g, p, e as usize);
        let mut exp = Vec::with_capacity(2 * order as usize);
        let mut cur = vec![1u32];
        let mut primitive = true;
        for i in 0..order {
            let packed = poly_to_packed(&cur, p);
            if i > 0 && packed == 1 {
                primitive = false;
                break;
            }
            exp.push(packed);
            cur = poly_mulmod(&cur, &gp, modulus, p);
        }
        if !primitive {
            continue;
        }
        let mut log = vec![0u32; q as usize];
        for (i, &v) in exp.iter().enumerate() {
            log[v as usize] = i as u32;
        }
        let first = exp.clone();
        exp.extend(first);
        return (exp, log);
    }
    unreachable!("the multiplicative group of a finite field is cyclic")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prime_powers_upto(n: u64) -> Vec<u64> {
        (2..=n).filter(|&q| prime_power(q).is_some()).collect()
    }

    #[test]
    fn construction() {
        let f2 = Field::new(2).unwrap();
        assert_eq!((f2.q(), f2.characteristic(), f2.degree()), (2, 2, 1));
        let f9 = Field::new(9).unwrap();
        assert_eq!((f9.q(), f9.characteristic(), f9.degree()), (9, 3, 2));
        assert_eq!(Field::new(6).unwrap_err(), Error::NotAPrimePower(6));
        assert_eq!(Field::new(1).unwrap_err(), Error::NotAPrimePower(1));
        assert_eq!(Field::new(0).unwrap_err(), Error::NotAPrimePower(0));
        assert_eq!(Field::new(12).unwrap_err(), Error::NotAPrimePower(12));
        assert_eq!(Field::new(65537).unwrap_err(), Error::FieldTooLarge(65537));
        assert!(Field::new(65536).is_ok());
        assert!(Field::new(65521).is_ok());
    }

    #[test]
    fn small_examples() {
        let f3 = Field::new(3).unwrap();
        assert_eq!(f3.add(Elem(2), Elem(2)), Elem(1));
        let f4 = Field::new(4).unwrap();
        assert_eq!(f4.modulus(), &[1, 1, 1]);
        // x * x = x + 1
        assert_eq!(f4.mul(Elem(2), Elem(2)), Elem(3));
        assert_eq!(f4.div(Elem(1), Elem(0)), Err(Error::DivisionByZero));
        // GF(9): x^2 + 1 is the smallest irreducible (x^2, x^2+1 ... by packed value)
        assert_eq!(Field::new(9).unwrap().modulus(), &[1, 0, 1]);
    }

    #[test]
    fn deterministic_tables() {
        for q in [8u64, 27, 256] {
            let (a, b) = (Field::new(q).unwrap(), Field::new(q).unwrap());
            for x in a.elements() {
                for y in a.elements() {
                    assert_eq!(a.mul(x, y), b.mul(x, y));
                    assert_eq!(a.add(x, y), b.add(x, y));
                }
            }
        }
    }

    #[test]
    fn modulus_is_irreducible_by_root_and_factor_search() {
        for q in prime_powers_upto(729) {
            let f = Field::new(q).unwrap();
            assert!(is_irreducible(f.modulus(), f.characteristic()), "q={q}");
            assert_eq!(*f.modulus().last().unwrap(), 1);
        }
    }

    #[test]
    fn field_axioms_exhaustive_up_to_64() {
        for q in prime_powers_upto(64) {
            let f = Field::new(q).unwrap();
            let els: Vec<Elem> = f.elements().collect();
            for &a in &els {
                assert_eq!(f.mul(a, Elem::ONE), a);
                assert_eq!(f.add(a, Elem::ZERO), a);
                assert_eq!(f.add(a, f.neg(a)), Elem::ZERO);
                assert_eq!(f.pow(a, q), a, "Frobenius q={q}");
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), Elem::ONE);
                }
                for &b in &els {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    assert_eq!(f.add(f.sub(a, b), b), a);
                    for &c in &els {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(
                            f.mul(a, f.add(b, c)),
                            f.add(f.mul(a, b), f.mul(a, c))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn arith_dispatch() {
        let f = Field::new(5).unwrap();
        assert_eq!(f.arith(Elem(3), Elem(4), Op::Add), Ok(Elem(2)));
        assert_eq!(f.arith(Elem(3), Elem(4), Op::Sub), Ok(Elem(4)));
        assert_eq!(f.arith(Elem(3), Elem(4), Op::Mul), Ok(Elem(2)));
        assert_eq!(f.arith(Elem(3), Elem(4), Op::Div), Ok(Elem(2)));
        assert!(f.elem(5).is_err());
    }
}
