use std::io::Read;
use std::path::Path;

use eqminors::minors::MAX_N;
use eqminors::Subset;
use serde_json::Value;

use crate::error::CliError;

fn malformed(e: impl std::fmt::Display) -> CliError {
    CliError::Malformed(e.to_string())
}

/// Largest element mentioned in any of the `{…}` arguments.
pub fn infer_n(args: &[&str]) -> Result<usize, CliError> {
    let mut n = 0;
    for a in args {
        for s in split_braces(a)? {
            let probe = Subset::parse(&s, MAX_N).map_err(malformed)?;
            n = n.max(probe.elems().last().copied().unwrap_or(0));
        }
    }
    if n == 0 {
        return Err(CliError::Usage("cannot infer n from empty subsets; pass --n".into()));
    }
    Ok(n)
}

pub fn subset(s: &str, n: usize) -> Result<Subset, CliError> {
    Subset::parse(s, n).map_err(malformed)
}

/// Subsets of one size.
pub fn k_subset(s: &str, n: usize, k: usize) -> Result<Subset, CliError> {
    let x = subset(s, n)?;
    if x.len() != k {
        return Err(CliError::Malformed(format!("{x} is not a {k}-subset")));
    }
    Ok(x)
}

fn split_braces(s: &str) -> Result<Vec<String>, CliError> {
    let t = s.trim();
    if t.starts_with('[') {
        let v: Value = serde_json::from_str(t).map_err(malformed)?;
        return v
            .as_array()
            .ok_or_else(|| malformed("expected an array of subsets"))?
            .iter()
            .map(|x| x.as_str().map(String::from).ok_or_else(|| malformed("subsets must be strings")))
            .collect();
    }
    let mut out = Vec::new();
    let mut rest = t;
    while let Some(open) = rest.find('{') {
        if !rest[..open].trim_matches(|c: char| c.is_whitespace() || c == ',' || c == ';').is_empty() {
            return Err(malformed(format!("unexpected text {:?}", &rest[..open])));
        }
        let close = rest[open..].find('}').ok_or_else(|| malformed(format!("unclosed brace in {s:?}")))? + open;
        out.push(rest[open..=close].to_string());
        rest = &rest[close + 1..];
    }
    if !rest.trim_matches(|c: char| c.is_whitespace() || c == ',' || c == ';').is_empty() {
        return Err(malformed(format!("unexpected text {rest:?}")));
    }
    Ok(out)
}

/// A collection written as `"{1,2} {2,3} …"` or as a JSON array of such strings.
pub fn collection(s: &str, n: usize) -> Result<Vec<Subset>, CliError> {
    split_braces(s)?.iter().map(|x| subset(x, n)).collect()
}

/// Edges `"1-3,2-5"`.
pub fn edges(s: &str, n: usize) -> Result<Vec<(usize, usize)>, CliError> {
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (a, b) = part.split_once('-').ok_or_else(|| malformed(format!("edge {part:?} must look like 1-3")))?;
        let a: usize = a.trim().parse().map_err(|_| malformed(format!("bad vertex in {part:?}")))?;
        let b: usize = b.trim().parse().map_err(|_| malformed(format!("bad vertex in {part:?}")))?;
        if a == b || a == 0 || b == 0 || a > n || b > n {
            return Err(malformed(format!("edge {part:?} is not a chord of the {n}-gon")));
        }
        out.push((a, b));
    }
    Ok(out)
}

/// Comma separated integers, e.g. `"2,3,1"`.
pub fn usizes(s: &str) -> Result<Vec<usize>, CliError> {
    s.split(',').map(|x| x.trim().parse::<usize>().map_err(|_| malformed(format!("bad integer list {s:?}")))).collect()
}

/// Reads JSON from a file, or from standard input for `-`.
pub fn read_json(path: &Path) -> Result<Value, CliError> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(malformed)?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| malformed(format!("{}: {e}", path.display())))?
    };
    serde_json::from_str(&text).map_err(|e| malformed(format!("{}: {e}", path.display())))
}

/// A matrix as printed by `construct`: bare, under `"matrix"`, or the only entry of `"matrices"`.
pub fn read_matrix(path: &Path) -> Result<Value, CliError> {
    let mut v = read_json(path)?;
    if let Some(list) = v.get("matrices").and_then(Value::as_array) {
        match list.as_slice() {
            [one] => v = one.clone(),
            _ => return Err(malformed(format!("{}: expected one matrix, found {}", path.display(), list.len()))),
        }
    }
    Ok(unwrap(v, "matrix"))
}

/// A plabic graph, bare or under `"graph"` as printed by `plabic honeycomb` and `plabic move`.
pub fn read_graph(path: &Path) -> Result<Value, CliError> {
    Ok(unwrap(read_json(path)?, "graph"))
}

fn unwrap(v: Value, key: &str) -> Value {
    match v.get(key) {
        Some(inner) if inner.is_object() => inner.clone(),
        _ => v,
    }
}

pub fn names(c: &[Subset]) -> Vec<String> {
    c.iter().map(|s| s.to_string()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn collections_parse_both_ways() {
        let a = collection("{1,2} {2,3};{3,4}", 5).unwrap();
        let b = collection(r#"["{1,2}","{2,3}","{3,4}"]"#, 5).unwrap();
        assert_eq!(a, b);
        assert!(collection("{1,2} x {2,3}", 5).is_err());
        assert!(collection("{1,2", 5).is_err());
        assert_eq!(infer_n(&["{1,3}", "{2,7}"]).unwrap(), 7);
    }

    #[test]
    fn edge_lists() {
        assert_eq!(edges("1-3, 2-4", 5).unwrap(), vec![(1, 3), (2, 4)]);
        assert!(edges("1-1", 5).is_err());
        assert!(edges("1-6", 5).is_err());
    }
}
