//! One PASS/FAIL line per acceptance criterion. Exits nonzero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use eqminors_cli::claims::reproduce;
use eqminors_cli::Global;
use serde_json::{json, Value};

struct Run {
    json: Value,
    took: Duration,
}

fn claim(id: &str, n: Option<usize>) -> Result<Run, String> {
    let t = Instant::now();
    let out = reproduce(id, n, &Global::default()).map_err(|e| format!("{id}: {e}"))?;
    let took = t.elapsed();
    if !out.passed || out.json["status"] != "verified" {
        return Err(format!("{id}: {}", out.json));
    }
    Ok(Run { json: out.json, took })
}

fn within(run: &Run, id: &str, limit: Duration) -> Result<(), String> {
    if run.took > limit {
        return Err(format!("{id} took {:?}, limit {:?}", run.took, limit));
    }
    Ok(())
}

fn expect(run: &Run, id: &str, field: &str, want: Value) -> Result<(), String> {
    if run.json[field] != want {
        return Err(format!("{id}.{field} = {}, want {want}", run.json[field]));
    }
    Ok(())
}

fn catalan(m: u64) -> u64 {
    (0..m).fold(1, |c, i| c * 2 * (2 * i + 1) / (i + 2))
}

fn counting() -> Result<String, String> {
    let ten = Duration::from_secs(10);
    let r = claim("sorted-count-5-3", None)?;
    within(&r, "sorted-count-5-3", ten)?;
    expect(&r, "sorted-count-5-3", "observed", json!({"count": 11, "sizes": [5]}))?;
    let r = claim("sorted-count-6-3", None)?;
    within(&r, "sorted-count-6-3", ten)?;
    expect(&r, "sorted-count-6-3", "observed", json!({"count": 66, "sizes": [6]}))?;
    for n in 3..=12usize {
        let r = claim("thrackle-count", Some(n))?;
        within(&r, "thrackle-count", ten)?;
        expect(&r, "thrackle-count", "observed", json!((1u64 << (n - 1)) - n as u64))?;
    }
    for n in 3..=10usize {
        let r = claim("triangulation-count", Some(n))?;
        within(&r, "triangulation-count", ten)?;
        expect(&r, "triangulation-count", "observed", json!(catalan(n as u64 - 2)))?;
    }
    let r = claim("ws-size-6-3", None)?;
    within(&r, "ws-size-6-3", ten)?;
    expect(&r, "ws-size-6-3", "observed", json!({"by_exchange": 34, "cliques": 34, "sizes": [10]}))?;
    Ok("sorted 11/66 of size n, thrackles n=3..12, triangulations n=3..10, WS size 10".into())
}

fn matrices() -> Result<String, String> {
    let limit = Duration::from_secs(30);
    let cases = [
        ("k4-matrix", json!(["{1,2,3,6}", "{4,5,7,8}"]), 70),
        ("k5a-matrix", json!(["{1,2,3,4,7}", "{5,6,8,9,10}"]), 252),
        ("k5b-matrix", json!(["{1,2,3,4,8}", "{5,6,7,9,10}"]), 252),
    ];
    for (id, pair, minors) in cases {
        let r = claim(id, None)?;
        within(&r, id, limit)?;
        expect(&r, id, "equal_min", pair)?;
        let o = &r.json["observed"];
        if o["minors"] != minors || o["min_value"] != "1" || o["all_at_least_one"] != true {
            return Err(format!("{id}: {o}"));
        }
    }
    let r = claim("k5a-matrix", None)?;
    if r.json["observed"]["radicand"] != "8665656785065" {
        return Err(format!("k5a radicand {}", r.json["observed"]["radicand"]));
    }
    Ok("unit pairs, all minors ≥ 1".into())
}

fn triangulations() -> Result<String, String> {
    let r = claim("triangulation-examples", None)?;
    expect(&r, "triangulation-examples", "observed", json!(6))?;
    let r = claim("ear-order", None)?;
    expect(&r, "ear-order", "observed", json!(64))?;
    Ok("6 examples entry-for-entry, 64 triangulations ear-order free".into())
}

fn largest() -> Result<String, String> {
    let limit = Duration::from_secs(120);
    let r = claim("torus-certify", None)?;
    within(&r, "torus-certify", limit)?;
    expect(&r, "torus-certify", "observed", json!({"(5,2)": 11, "(5,3)": 11, "(6,3)": 66}))?;
    let r = claim("pentagon-lambda", None)?;
    within(&r, "pentagon-lambda", limit)?;
    let fam = json!({"1^5": 1, "(1,1,φ,φ,φ)": 5, "(1,φ,φ²,φ²,φ)": 5});
    expect(&r, "pentagon-lambda", "observed", json!({"families": fam, "unmatched": 0}))?;
    Ok("88 torus rescalings certified, pentagon λ multiset matches".into())
}

fn thrackles() -> Result<String, String> {
    let r = claim("thrackle-certify", Some(7))?;
    expect(&r, "thrackle-certify", "observed", json!({"3": 1, "4": 4, "5": 11, "6": 26, "7": 57}))?;
    Ok("99 maximal thrackles on 3..7 points certified".into())
}

fn skandera() -> Result<String, String> {
    let r = claim("skandera-oracle", None)?;
    expect(&r, "skandera-oracle", "observed", json!(0))?;
    expect(&r, "skandera-oracle", "matrices_per_shape", json!(100))?;
    expect(&r, "skandera-oracle", "quadruples", json!({"(6,2)": 30, "(6,3)": 75, "(8,4)": 1770}))?;
    Ok("1875 dominant quadruples × 100 matrices, 0 exceptions".into())
}

fn honeycomb() -> Result<String, String> {
    let r = claim("honeycomb-6-over-T", None)?;
    expect(&r, "honeycomb-6-over-T", "observed", json!("6*T^-1"))?;
    let r = claim("conjecture-2x2", None)?;
    expect(&r, "conjecture-2x2", "observed", json!({"coordinates": 70, "non_positive": 0, "violations": 0}))?;
    let r = claim("honeycomb-15-class", None)?;
    let o = &r.json["observed"];
    if o["size"] != 15 || o["contains_pair"] != true || o["pair_weakly_separated"] != false {
        return Err(format!("honeycomb-15-class: {o}"));
    }
    Ok("6·T⁻¹, 70 coordinates within bounds, 15-minor class at T = 6".into())
}

fn distances() -> Result<String, String> {
    let r = claim("distance-2x2", None)?;
    expect(&r, "distance-2x2", "observed", json!(4))?;
    expect(&r, "distance-2x2", "distinct_projections", json!(1))?;
    let r = claim("distance-k5", None)?;
    within(&r, "distance-k5", Duration::from_secs(600))?;
    expect(&r, "distance-k5", "observed", json!(6))?;
    let k5_took = r.took;
    let r = claim("chain-counts", None)?;
    let moves = &r.json["square_moves"];
    for b1 in 1..=4 {
        for b2 in 1..=4 {
            if moves[format!("{b1}x{b2}")] != json!(b1 * b2) {
                return Err(format!("chain {b1}x{b2}: {}", moves[format!("{b1}x{b2}")]));
            }
        }
    }
    let r = claim("layered-16", None)?;
    if r.json["observed"]["square_moves"] != 16 {
        return Err(format!("layered: {}", r.json["observed"]));
    }
    Ok(format!("D = 4 (48 chains, one up to block projection), D = 6 in {k5_took:.1?}, b1·b2 and 16"))
}

fn nonneg() -> Result<String, String> {
    let r = claim("nonneg-gr2", None)?;
    expect(&r, "nonneg-gr2", "observed", json!([12, 16, 21]))?;
    let rows = r.json["closed_vs_search"].as_array().cloned().unwrap_or_default();
    if rows.len() != 10 || rows.iter().any(|row| row[1] != row[2]) {
        return Err(format!("nonneg-gr2: {}", r.json["closed_vs_search"]));
    }
    Ok("closed form = search for n = 3..12".into())
}

fn suites() -> Result<String, String> {
    for id in eqminors_cli::suites::SUITES {
        let r = claim(id, None)?;
        expect(&r, id, "trials", json!(10_000))?;
        expect(&r, id, "failures", json!(0))?;
    }
    Ok("5 suites × 10⁴ trials, 0 failures".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Result<String, String>); 10] = [
        ("counting identities", counting),
        ("registry matrices", matrices),
        ("triangulation construction", triangulations),
        ("largest-minor certification", largest),
        ("thrackle certification", thrackles),
        ("skandera oracle", skandera),
        ("honeycomb and cluster", honeycomb),
        ("mutation distances", distances),
        ("nonnegative Gr(2,n)", nonneg),
        ("property suites", suites),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        match f() {
            Ok(msg) => println!("PASS {:>2} {name}: {msg} [{:.1?}]", i + 1, t.elapsed()),
            Err(msg) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {msg} [{:.1?}]", i + 1, t.elapsed());
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
