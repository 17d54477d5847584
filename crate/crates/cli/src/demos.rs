//! Worked examples with known answers. Each demo recomputes its numbers from
//! scratch and marks every one PASS or FAIL against the published value.

use num_bigint::BigUint;
use serde_json::{json, Value};

use sumrank::anticode::hybrid_search;
use sumrank::bounds::{max_anticode_dim, maximizer_set};
use sumrank::classify::brute_force_optimal;
use sumrank::sumrank::geodesic_distances_from;
use sumrank::{Field, LinearSpace, Matrix, Profile, SumRankVector, WeightComposition};

use crate::fmt::sep;
use crate::{DemoName, Report};

struct Tally {
    text: String,
    checks: Vec<Value>,
    ok: bool,
}

impl Tally {
    fn new(title: &str) -> Tally {
        Tally {
            text: format!("{title}\n"),
            checks: Vec::new(),
            ok: true,
        }
    }

    fn check(&mut self, what: &str, got: impl ToString, want: impl ToString) {
        let (got, want) = (got.to_string(), want.to_string());
        let pass = got == want;
        self.ok &= pass;
        let mark = if pass { "PASS" } else { "FAIL" };
        if pass {
            self.text += &format!("  {mark}  {what}: {got}\n");
        } else {
            self.text += &format!("  {mark}  {what}: {got}, published {want}\n");
        }
        self.checks.push(json!({ "check": what, "value": got, "published": want, "pass": pass }));
    }

    fn note(&mut self, line: &str) {
        self.text += &format!("  {line}\n");
    }

    fn finish(self, name: &str) -> Report {
        Report {
            json: json!({ "demo": name, "checks": self.checks, "ok": self.ok }),
            text: self.text,
            ok: self.ok,
        }
    }
}

pub fn run(name: DemoName) -> Report {
    match name {
        DemoName::DistanceRegularity => distance_regularity(),
        DemoName::HammingBinary => hamming_binary(),
        DemoName::Remark1011 => split_dimensions(),
        DemoName::HybridF2F5 => hybrid(),
    }
}

/// The graph on `F_2^{2x2} x F_2^{2x2}` with an edge for sum-rank one is not
/// distance-regular: A and B both sit at distance 2 from 0, yet different
/// numbers of neighbours of 0 lie at distance 2 from each.
fn distance_regularity() -> Report {
    let mut t = Tally::new("distance-regularity: 2x2,2x2 over GF(2)");
    let f = Field::new(2).expect("prime");
    let p = Profile::parse("2x2,2x2").expect("valid");
    let m = |r: [u32; 4]| Matrix::from_reps(&f, 2, 2, &r).expect("2x2");
    let a = SumRankVector::new(&p, vec![m([1, 0, 0, 1]), m([0, 0, 0, 0])]).expect("shape");
    let b = SumRankVector::new(&p, vec![m([1, 0, 0, 0]), m([1, 0, 0, 0])]).expect("shape");
    let zero = SumRankVector::zero(&f, &p);
    let from_zero = geodesic_distances_from(&f, &p, &zero, 1 << 10).expect("256 elements");
    let count = |c: &SumRankVector| {
        let from_c = geodesic_distances_from(&f, &p, c, 1 << 10).expect("256 elements");
        (0..from_zero.len()).filter(|&i| from_zero[i] == 1 && from_c[i] == 2).count()
    };
    t.note("A = (I, 0), B = (E11, E11), both at distance 2 from 0");
    t.check("Z with d(Z,0) = 1, d(Z,A) = 2", count(&a), 3);
    t.check("Z with d(Z,0) = 1, d(Z,B) = 2", count(&b), 8);
    t.finish("distance-regularity")
}

/// Over GF(2) a Hamming-type block can carry an optimal anticode that is not
/// supported on coordinates, so the closed-form count does not apply.
fn hamming_binary() -> Report {
    let mut t = Tally::new("hamming-binary: 1x1,1x1,1x1 over GF(2), radius 2");
    let f = Field::new(2).expect("prime");
    let p = Profile::parse("1x1,1x1,1x1").expect("valid");
    let v = |x: [u32; 3]| SumRankVector::from_coords(&f, &p, &x.map(|e| f.elem(e).expect("bit"))).expect("shape");
    let odd = LinearSpace::span(&f, &p, &[v([1, 0, 1]), v([0, 1, 1])]).expect("span");
    let found = brute_force_optimal(&f, &p, 2, 1 << 10).expect("8 elements");
    let coordinate = found
        .iter()
        .filter(|s| s.subspace().basis().iter().all(|b| b.iter().filter(|e| !e.is_zero()).count() == 1))
        .count();
    t.check("optimal 2-anticodes of dimension 2", found.len(), 4);
    t.check("of them spanned by coordinate vectors", coordinate, 3);
    t.check("<(1,0,1), (0,1,1)> among them", found.contains(&odd), true);
    t.finish("hamming-binary")
}

/// In `F^{3x3} x F^{2x2}` with radius 4 the split (3,1) beats (2,2).
fn split_dimensions() -> Report {
    let mut t = Tally::new("remark-10-11: 3x3,2x2, radius 4");
    let p = Profile::parse("3x3,2x2").expect("valid");
    let k = max_anticode_dim(&p, 4).expect("in range").k;
    let maxi = maximizer_set(&p, 4).expect("in range");
    t.check("dimension from ranks (2,2)", WeightComposition(vec![2, 2]).weighted(&p), 10);
    t.check("dimension from ranks (3,1)", WeightComposition(vec![3, 1]).weighted(&p), 11);
    t.check("largest dimension K", k, 11);
    let list: Vec<String> = maxi.iter().map(|u| u.to_string()).collect();
    t.check("splits reaching K", list.join(" "), "(3,1)");
    t.finish("remark-10-11")
}

/// Seven 2x2 blocks, radius 8: anticodes built from full blocks and a ball.
fn hybrid() -> Report {
    let mut t = Tally::new("hybrid-f2-f5: seven 2x2 blocks, radius 8");
    let p = Profile::parse(&["2x2"; 7].join(",")).expect("valid");
    let table = [
        ("full,full,full,full,zero,zero,zero", 43_046_721u64),
        ("full,full,full,ball(s=1,blocks=4..7)", 68_555_889),
        ("full,full,ball(s=2,blocks=3..7)", 69_815_602),
        ("full,ball(s=3,blocks=2..7)", 58_099_761),
        ("ball(s=4,blocks=1..7)", 43_142_961),
    ];
    let ranked = hybrid_search(&p, 3, 8).expect("valid radius");
    for (k, (spec, want)) in table.iter().enumerate() {
        t.note(&format!("A_{k} = {spec}"));
        let got = ranked
            .iter()
            .find(|c| c.spec.to_string() == *spec)
            .map(|c| sep(&c.size))
            .unwrap_or_else(|| "missing".into());
        t.check(&format!("|A_{k}| over GF(3)"), got, sep(want));
    }
    for (q, k) in [(2u32, 4usize), (3, 2), (4, 1), (5, 0)] {
        let ranked = hybrid_search(&p, q, 8).expect("valid radius");
        let top = &ranked[0];
        let name = table
            .iter()
            .position(|(s, _)| *s == top.spec.to_string())
            .map(|i| format!("A_{i}"))
            .unwrap_or_else(|| top.spec.to_string());
        t.check(&format!("largest over GF({q})"), name, format!("A_{k}"));
        t.note(&format!("    size {}", sep(&top.size)));
    }
    let q3: BigUint = BigUint::from(3u8).pow(16);
    t.note(&format!("the optimal linear 8-anticode has 3^16 = {} elements", sep(&q3)));
    t.finish("hybrid-f2-f5")
}
