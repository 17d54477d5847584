use std::path::Path;

use num_bigint::BigUint;
use serde_json::{json, Value};

use sumrank::anticode::{hybrid_search, verify_linear_anticode};
use sumrank::bounds::{ball_volume, compare_bounds, max_anticode_dim, maximizer_set};
use sumrank::classify::{brute_force_optimal, classify_families, count_optimal, generate_family, Family};
use sumrank::meshulam::meshulam_check;
use sumrank::sumrank::{all_elements, geodesic_distance, geodesic_distances_from, parse_vectors};
use sumrank::{Error, LinearSpace, Profile, Result, SumRankVector};

use crate::fmt::{one_based, row, sep};
use crate::{field, Ctx, Report};

fn read_elements(q: u64, profile: &Profile, path: &Path) -> Result<Vec<SumRankVector>> {
    let f = field(q)?;
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    let (p, vs) = parse_vectors(&text, &f)?;
    if p != *profile {
        return Err(Error::Parse(format!(
            "{} holds elements of {p}, but --profile is {profile}",
            path.display()
        )));
    }
    Ok(vs)
}

fn coords(v: &SumRankVector) -> String {
    let s: Vec<String> = v.to_coords().iter().map(|e| e.to_string()).collect();
    format!("[{}]", s.join(" "))
}

fn space_json(s: &LinearSpace) -> Value {
    Value::Array(s.basis().iter().map(|b| Value::String(coords(b))).collect())
}

pub fn bounds(q: u64, p: &Profile, d: usize) -> Result<Report> {
    let b = compare_bounds(p, q as u32, d)?;
    let mut text = format!("profile {p} over GF({q}), minimum distance {d}\n");
    text += &row("|Π|", sep(&b.space_size));
    text += &row("Singleton", sep(&b.singleton));
    text += &row("Sphere-Packing", sep(&b.sphere_packing));
    text += &row("tightest", b.tightest);
    text += &row(&format!("linear {}-anticode (dim {})", d - 1, b.linear_anticode_dim), sep(&b.linear_anticode_size));
    text += &row(&format!("ball of radius {}", b.ball_radius), sep(&b.ball_size));
    text += &row("larger anticode", b.larger_anticode);
    let json = json!({
        "profile": p.to_string(),
        "q": q,
        "d": d,
        "space_size": b.space_size.to_string(),
        "singleton": b.singleton.to_string(),
        "sphere_packing": b.sphere_packing.to_string(),
        "optimal_anticode_code_bound": b.optimal_anticode_code_bound.to_string(),
        "tightest": b.tightest.to_string(),
        "linear_anticode_dim": b.linear_anticode_dim,
        "linear_anticode_size": b.linear_anticode_size.to_string(),
        "ball_radius": b.ball_radius,
        "ball_size": b.ball_size.to_string(),
        "larger_anticode": b.larger_anticode.to_string(),
    });
    Ok(Report { text, json, ok: true })
}

pub fn ball(q: u64, p: &Profile, r: usize) -> Result<Report> {
    field(q)?;
    let v = ball_volume(p, q as u32, r)?;
    Ok(Report {
        text: format!("V_{r}({p}) over GF({q}) = {}\n", sep(&v)),
        json: json!({ "profile": p.to_string(), "q": q, "r": r, "volume": v.to_string() }),
        ok: true,
    })
}

pub fn anticode_dim(p: &Profile, r: usize, q: Option<u64>) -> Result<Report> {
    let k = max_anticode_dim(p, r)?;
    let maxi = maximizer_set(p, r)?;
    let block = if k.block == p.t() {
        "all blocks full".to_string()
    } else {
        format!("{}", k.block + 1)
    };
    let mut text = format!("profile {p}, radius {r}\n");
    text += &row("K", k.k);
    text += &row("block j", &block);
    text += &row("delta", k.delta);
    let size = match q {
        Some(q) => {
            field(q)?;
            let s = BigUint::from(q).pow(k.k as u32);
            text += &row(&format!("size over GF({q})"), sep(&s));
            Some(s.to_string())
        }
        None => None,
    };
    text += "weight splits reaching K:\n";
    for u in &maxi {
        text += &format!("  {u}\n");
    }
    let json = json!({
        "profile": p.to_string(),
        "r": r,
        "k": k.k,
        "block": k.block + 1,
        "delta": k.delta,
        "size": size,
        "maximizers": maxi.iter().map(|u| u.0.clone()).collect::<Vec<_>>(),
    });
    Ok(Report { text, json, ok: true })
}

pub fn classify(ctx: &Ctx, p: &Profile, r: usize, q: Option<u64>, count: bool, brute: bool) -> Result<Report> {
    let c = classify_families(p, r)?;
    let mut text = format!("profile {p}, radius {r}\n");
    let mut json = json!({
        "profile": p.to_string(),
        "r": r,
        "k": max_anticode_dim(p, r)?.k,
        "forced_full": c.forced_full().map(|i| i + 1).collect::<Vec<_>>(),
        "forced_zero": c.forced_zero(p).map(|i| i + 1).collect::<Vec<_>>(),
    });
    match &c.family {
        Family::Whole => {
            text += "the whole space (r = N)\n";
            json["case"] = json!("whole");
        }
        Family::Rank { compositions } => {
            text += &format!("case (a): m_j = {} > 1\n", p.m(c.j));
            text += &row("j, delta", format!("{}, {}", c.j + 1, c.delta));
            text += &row("full blocks", one_based(c.forced_full()));
            text += &row("free blocks", one_based(c.ell..c.ell_prime + 1));
            text += &row("zero blocks", one_based(c.forced_zero(p)));
            text += "ranks on the free blocks:\n";
            for comp in compositions {
                let s: Vec<String> = comp.iter().map(usize::to_string).collect();
                text += &format!("  ({})\n", s.join(","));
            }
            json["case"] = json!("a");
            json["j"] = json!(c.j + 1);
            json["delta"] = json!(c.delta);
            json["free_blocks"] = json!((c.ell..c.ell_prime + 1).map(|i| i + 1).collect::<Vec<_>>());
            json["compositions"] = json!(compositions);
        }
        Family::Hamming { length, weight } => {
            text += "case (b): m_j = 1\n";
            text += &row("full blocks", one_based(c.forced_full()));
            text += &row("Hamming blocks", one_based(c.ell..p.t()));
            text += &format!("an optimal {weight}-anticode of the Hamming space of length {length}\n");
            json["case"] = json!("b");
            json["j"] = json!(c.j + 1);
            json["hamming_length"] = json!(length);
            json["hamming_weight"] = json!(weight);
        }
    }
    let f = q.map(field).transpose()?;
    let mut family_count = None;
    if count || brute {
        let q = q.expect("clap requires --q");
        match count_optimal(p, r, q as u32) {
            Ok(n) => {
                text += &row(&format!("count over GF({q})"), sep(&n));
                json["count"] = json!(n.to_string());
                family_count = Some(n);
            }
            Err(Error::BinaryHammingUnsupported) if brute => {
                text += "count: no closed form over GF(2) with a Hamming part\n";
                json["count"] = Value::Null;
            }
            Err(e) => return Err(e),
        }
    }
    if brute {
        let f = f.expect("clap requires --q");
        let found = brute_force_optimal(&f, p, r, ctx.cutoff)?;
        text += &row("exhaustive search", found.len());
        json["brute_force_count"] = json!(found.len());
        if family_count.is_some() {
            let family = generate_family(&f, p, r, ctx.cutoff)?;
            let agrees = family == found;
            text += &row("family agrees", if agrees { "yes" } else { "no" });
            json["family_agrees"] = json!(agrees);
        }
        if found.len() <= 10 {
            for (i, s) in found.iter().enumerate() {
                let b: Vec<String> = s.basis().iter().map(coords).collect();
                text += &format!("  {}: <{}>\n", i + 1, b.join(", "));
            }
        }
        json["spaces"] = Value::Array(found.iter().map(space_json).collect());
    }
    Ok(Report { text, json, ok: true })
}

pub fn compare(q: u64, p: &Profile, r: usize) -> Result<Report> {
    let list = hybrid_search(p, q as u32, r)?;
    let k = max_anticode_dim(p, r)?.k;
    let mut text = format!("{r}-anticodes in {p} over GF({q}); optimal linear dimension {k}\n");
    text += &format!("{:>4} {:>22} {:>5}  {}\n", "#", "size", "diam", "anticode");
    for (i, c) in list.iter().enumerate() {
        let tag = if c.spec.is_linear() { "  (linear)" } else { "" };
        text += &format!("{:>4} {:>22} {:>5}  {}{tag}\n", i + 1, sep(&c.size), c.diameter, c.spec);
    }
    let json = json!({
        "profile": p.to_string(),
        "q": q,
        "r": r,
        "linear_dim": k,
        "candidates": list.iter().map(|c| json!({
            "spec": c.spec.to_string(),
            "size": c.size.to_string(),
            "diameter": c.diameter,
            "linear": c.spec.is_linear(),
        })).collect::<Vec<_>>(),
    });
    Ok(Report { text, json, ok: true })
}

pub fn verify(ctx: &Ctx, q: u64, p: &Profile, basis: &Path, r: usize) -> Result<Report> {
    let f = field(q)?;
    let vs = read_elements(q, p, basis)?;
    let space = LinearSpace::span(&f, p, &vs)?;
    let rep = verify_linear_anticode(&space, r, ctx.cutoff)?;
    let k = max_anticode_dim(p, r)?.k;
    let optimal = rep.holds && space.dim() == k;
    let mut text = format!("span of {} elements in {p} over GF({q})\n", vs.len());
    text += &row("dimension", space.dim());
    text += &row("diameter", rep.diameter);
    text += &row(&format!("{r}-anticode"), if rep.holds { "yes" } else { "no" });
    text += &row(&format!("optimal (K = {k})"), if optimal { "yes" } else { "no" });
    text += &format!("element of largest sum-rank: {}\n", coords(&rep.witness.0));
    let json = json!({
        "profile": p.to_string(),
        "q": q,
        "r": r,
        "dimension": space.dim(),
        "diameter": rep.diameter,
        "is_anticode": rep.holds,
        "optimal": optimal,
        "k": k,
        "witness": coords(&rep.witness.0),
    });
    Ok(Report { text, json, ok: true })
}

pub fn meshulam(ctx: &Ctx, q: u64, p: &Profile, basis: &Path) -> Result<Report> {
    let f = field(q)?;
    let vs = read_elements(q, p, basis)?;
    let space = LinearSpace::span(&f, p, &vs)?;
    let rep = meshulam_check(&space, ctx.cutoff)?;
    let ini: Vec<String> = rep.ini.iter().map(|x| x.to_string()).collect();
    let lines: Vec<String> = rep.cover.lines.iter().map(|l| l.to_string()).collect();
    let mut text = format!("span of dimension {} in {p} over GF({q})\n", space.dim());
    text += &format!("initial entries: {}\n", if ini.is_empty() { "none".into() } else { ini.join(" ") });
    text += &row("rho", rep.cover.rho);
    text += &format!("covering lines: {}\n", if lines.is_empty() { "none".into() } else { lines.join(", ") });
    text += &row("largest sum-rank", rep.max_srk);
    text += &row("largest >= rho", if rep.holds() { "yes" } else { "no" });
    let json = json!({
        "profile": p.to_string(),
        "q": q,
        "dimension": space.dim(),
        "ini": ini,
        "rho": rep.cover.rho,
        "lines": lines,
        "max_srk": rep.max_srk,
        "witness": coords(&rep.witness),
        "holds": rep.holds(),
    });
    Ok(Report {
        text,
        json,
        ok: rep.holds(),
    })
}

pub fn geodesic(ctx: &Ctx, q: u64, p: &Profile, pair: Option<&Path>) -> Result<Report> {
    let f = field(q)?;
    if let Some(path) = pair {
        let vs = read_elements(q, p, path)?;
        if vs.len() != 2 {
            return Err(Error::Parse(format!("{} must hold exactly two elements", path.display())));
        }
        let g = geodesic_distance(&f, p, &vs[0], &vs[1], ctx.cutoff)?;
        let d = vs[0].srk_distance(&vs[1])?;
        let mut text = format!("{} -> {}\n", coords(&vs[0]), coords(&vs[1]));
        text += &row("geodesic distance", g);
        text += &row("sum-rank distance", d);
        let json = json!({ "profile": p.to_string(), "q": q, "geodesic": g, "sum_rank": d });
        return Ok(Report { text, json, ok: g == d });
    }
    let zero = SumRankVector::zero(&f, p);
    let dist = geodesic_distances_from(&f, p, &zero, ctx.cutoff)?;
    let all = all_elements(&f, p, ctx.cutoff)?;
    let mismatches = all.iter().zip(&dist).filter(|(x, &g)| x.srk() != g as usize).count();
    let mut hist = vec![0u64; p.total_rows() + 1];
    for &g in &dist {
        hist[g as usize] += 1;
    }
    let mut text = format!("distances from 0 in {p} over GF({q}), {} elements\n", sep(all.len()));
    for (k, h) in hist.iter().enumerate() {
        text += &row(&format!("at distance {k}"), sep(h));
    }
    text += &row("differ from sum-rank", mismatches);
    let json = json!({
        "profile": p.to_string(),
        "q": q,
        "histogram": hist.iter().map(u64::to_string).collect::<Vec<_>>(),
        "mismatches": mismatches,
    });
    Ok(Report {
        text,
        json,
        ok: mismatches == 0,
    })
}
