use eqminors::cluster::{
    check_honeycomb_conjecture, evaluate_plucker, evaluate_plucker_random, mutation_distance, shortest_chains, ws_point, AnySeed,
    ClusterValue, Distance, MutationEdge, Seed,
};
use eqminors::combin::{
    affine_dimension, catalan, classify_pair, count_alcoves, entry_labels, enumerate_maximal_sorted, enumerate_maximal_thrackles,
    enumerate_triangulations, eulerian, grid_paths, is_sort_closed, is_sorted, is_weakly_separated, maximal_sorted_within,
    nonneg_gr2_max, nonneg_gr2_optimum, transposed_grid_paths, Graph2,
};
use eqminors::construct::{
    epsilon_perturb_largest_with, honeycomb_matrix_2x2, paper_matrix, thrackle_matrix_with, torus_rescale_with,
    triangulation_matrix_with, EarOrder,
};
use eqminors::exactnum::{parse_rational, rat_int, Interval};
use eqminors::minors::{extract_arrangement, k_subsets, random_positive_point, skandera_dominates, ArrangementMode, MinorTable};
use eqminors::plabic::{
    apply_move_mut, chain_reaction, export_dot, honeycomb, honeycomb_with_blocks, layered_honeycomb, project_pi, random_move,
    Honeycomb, MoveScript, PlabicGraph,
};
use eqminors::{ExactScalar, PosMatrix, Subset};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::error::CliError;
use crate::input::{self, names};
use crate::{
    claims, Check, Cli, ClusterCmd, Command, Construct, Count, Enumerate, Global, HoneycombArgs, Mode, Outcome, Plabic, PointArgs,
};

fn resolve_n(n: Option<usize>, args: &[&str]) -> Result<usize, CliError> {
    match n {
        Some(n) => Ok(n),
        None => input::infer_n(args),
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn check_nk(n: usize, k: usize) -> Result<(), CliError> {
    if n == 0 || n > eqminors::minors::MAX_N || k == 0 || k >= n {
        return Err(usage(format!("need 0 < k < n ≤ {}", eqminors::minors::MAX_N)));
    }
    Ok(())
}

pub(crate) fn interval_json(x: &Interval) -> Value {
    ExactScalar::Interval(x.clone()).to_json()
}

fn rng(g: &Global) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(g.seed)
}

/// Runs one parsed command.
pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let g = &cli.global;
    match &cli.command {
        Command::Check(c) => check(c).map(Outcome::ok),
        Command::Enumerate(e) => enumerate(e).map(Outcome::ok),
        Command::Count(c) => count(c),
        Command::Construct(c) => construct(c, g).map(Outcome::ok),
        Command::Verify { matrix, mode, expect } => verify(matrix, *mode, expect.as_deref()),
        Command::Plabic(p) => plabic(p, g).map(Outcome::ok),
        Command::Cluster(c) => cluster(c, g),
        Command::Reproduce { claim, n } => claims::reproduce(claim, *n, g),
    }
}

fn check(c: &Check) -> Result<Value, CliError> {
    Ok(match c {
        Check::Ws { i, j, n } => {
            let n = resolve_n(*n, &[i, j])?;
            json!({"weakly_separated": is_weakly_separated(&input::subset(i, n)?, &input::subset(j, n)?)})
        }
        Check::Sorted { i, j, n } => {
            let n = resolve_n(*n, &[i, j])?;
            json!({"sorted": is_sorted(&input::subset(i, n)?, &input::subset(j, n)?)})
        }
        Check::Skandera { i, j, k, l, n } => {
            let n = resolve_n(*n, &[i, j, k, l])?;
            let s = [i, j, k, l].iter().map(|x| input::subset(x, n)).collect::<Result<Vec<_>, _>>()?;
            json!({"dominates": skandera_dominates(&s[0], &s[1], &s[2], &s[3])})
        }
        Check::Classify { i, j, n } => {
            let n = resolve_n(*n, &[i, j])?;
            let (a, b) = (input::subset(i, n)?, input::subset(j, n)?);
            if a.len() != b.len() {
                return Err(CliError::Malformed("subsets of different sizes".into()));
            }
            classify_pair(&a, &b).to_json()
        }
    })
}

fn graphs_json(gs: &[Graph2]) -> Value {
    json!({"count": gs.len(), "graphs": gs.iter().map(|g| g.to_json()).collect::<Vec<_>>()})
}

fn enumerate(e: &Enumerate) -> Result<Value, CliError> {
    Ok(match e {
        Enumerate::Sorted { n, k } => {
            check_nk(*n, *k)?;
            let all = enumerate_maximal_sorted(*n, *k);
            json!({"n": n, "k": k, "count": all.len(), "collections": all.iter().map(|c| names(c)).collect::<Vec<_>>()})
        }
        Enumerate::Triangulations { n } => {
            if *n < 3 {
                return Err(usage("need n ≥ 3"));
            }
            graphs_json(&enumerate_triangulations(*n))
        }
        Enumerate::Thrackles { n } => {
            if *n < 3 {
                return Err(usage("need n ≥ 3"));
            }
            graphs_json(&enumerate_maximal_thrackles(*n))
        }
        Enumerate::Alcoves { n, k, entries, collection } => {
            check_nk(*n, *k)?;
            let s: Vec<Subset> = match collection {
                Some(c) => input::collection(c, *n)?,
                None if *entries => entry_labels(*k, *n),
                None => k_subsets(*n, *k).collect(),
            };
            if s.iter().any(|x| x.len() != *k) {
                return Err(CliError::Malformed(format!("every member must be a {k}-subset")));
            }
            if !is_sort_closed(&s) {
                return Err(CliError::Malformed("collection is not closed under sorting".into()));
            }
            let alcoves = maximal_sorted_within(&s);
            json!({
                "vertices": s.len(),
                "dimension": affine_dimension(&s),
                "count": count_alcoves(&s).to_string(),
                "alcoves": alcoves.iter().map(|c| names(c)).collect::<Vec<_>>(),
            })
        }
        Enumerate::Gridpaths { k, m, transposed } => {
            if *k == 0 || *m == 0 || k + m > 64 {
                return Err(usage("need k, m ≥ 1"));
            }
            let ps = if *transposed { transposed_grid_paths(*k, *m) } else { grid_paths(*k, *m) };
            json!({"count": ps.len(), "paths": ps.iter().map(|p| p.to_json()).collect::<Vec<_>>()})
        }
    })
}

fn count(c: &Count) -> Result<Outcome, CliError> {
    Ok(match c {
        Count::Eulerian { n, k } => Outcome::ok(json!({"value": eulerian(*n, *k).to_string()})),
        Count::Catalan { n } => Outcome::ok(json!({"value": catalan(*n).to_string()})),
        Count::Thrackles { n } => {
            if *n < 3 {
                return Err(usage("need n ≥ 3"));
            }
            Outcome::ok(json!({"value": enumerate_maximal_thrackles(*n).len().to_string()}))
        }
        Count::NonnegGr2 { n } => {
            if *n < 2 {
                return Err(usage("need n ≥ 2"));
            }
            let closed = nonneg_gr2_max(*n);
            let o = nonneg_gr2_optimum(*n);
            let best = o.smallest.max(o.largest);
            Outcome {
                json: json!({
                    "value": closed.to_string(),
                    "search": best.to_string(),
                    "smallest": o.smallest.to_string(),
                    "largest": o.largest.to_string(),
                }),
                passed: best == closed,
            }
        }
    })
}

fn arrangement_class(m: &PosMatrix, mode: ArrangementMode) -> Result<(Vec<Subset>, ExactScalar), CliError> {
    let arr = extract_arrangement(&MinorTable::compute(m)?, mode)?;
    let (class, value) = match mode {
        ArrangementMode::Largest => (arr.largest().to_vec(), arr.values.last().cloned()),
        _ => (arr.smallest().to_vec(), arr.values.first().cloned()),
    };
    let mut class = class;
    class.sort();
    Ok((class, value.unwrap_or_else(ExactScalar::zero)))
}

fn point(p: &PointArgs, g: &Global) -> Result<(PosMatrix, Vec<Subset>), CliError> {
    check_nk(p.n, p.k)?;
    let a = match &p.matrix {
        Some(path) => PosMatrix::from_json(&input::read_matrix(path)?)?,
        None => random_positive_point(p.k, p.n, &mut rng(g)),
    };
    if a.n() != p.n || a.k() != p.k {
        return Err(CliError::Malformed(format!("matrix is {} × {}, expected {} × {}", a.k(), a.n(), p.k, p.n)));
    }
    Ok((a, input::collection(&p.collection, p.n)?))
}

fn construct(c: &Construct, g: &Global) -> Result<Value, CliError> {
    Ok(match c {
        Construct::Triangulation { n, diagonals, highest_ear } => {
            if *n < 3 {
                return Err(usage("need n ≥ 3"));
            }
            let mut t = Graph2::boundary(*n);
            t.edges.extend(Graph2::new(*n, input::edges(diagonals, *n)?).edges);
            let order = if *highest_ear { EarOrder::Highest } else { EarOrder::Lowest };
            let m = triangulation_matrix_with(&t, |_, _| rat_int(1), order)?;
            let (class, value) = arrangement_class(&m, ArrangementMode::Smallest)?;
            json!({"matrix": m.to_json(), "smallest": names(&class), "value": value.to_json()})
        }
        Construct::Thrackle { n, edges } => {
            let t = Graph2::new(*n, input::edges(edges, *n)?);
            let tm = thrackle_matrix_with(&t, g.precision())?;
            let (class, _) = arrangement_class(&tm.matrix, ArrangementMode::Largest)?;
            json!({
                "matrix": tm.matrix.to_json(),
                "value": interval_json(&tm.value),
                "precision": tm.precision,
                "delta": tm.delta.as_ref().map(eqminors::exactnum::format_rational),
                "largest": names(&class),
            })
        }
        Construct::Torus(p) => {
            let (a, s) = point(p, g)?;
            let (sc, m) = torus_rescale_with(&a, &s, g.precision())?;
            let (class, _) = arrangement_class(&m, ArrangementMode::Largest)?;
            json!({
                "t": sc.t.iter().map(interval_json).collect::<Vec<_>>(),
                "lambda": sc.normalized().iter().map(interval_json).collect::<Vec<_>>(),
                "residual": interval_json(&sc.residual),
                "precision": sc.precision,
                "matrix": m.to_json(),
                "largest": names(&class),
            })
        }
        Construct::Perturb { point: p, sub, eps } => {
            let (a, s) = point(p, g)?;
            let sub = input::collection(sub, p.n)?;
            let eps = parse_rational(eps)?;
            let m = epsilon_perturb_largest_with(&a, &s, &sub, &eps, g.precision())?;
            let (class, _) = arrangement_class(&m, ArrangementMode::Largest)?;
            json!({"matrix": m.to_json(), "largest": names(&class)})
        }
        Construct::Honeycomb { t } => {
            let tv = parse_rational(t)?;
            let m = honeycomb_matrix_2x2(&tv)?;
            let (class, value) = arrangement_class(&m, ArrangementMode::Smallest)?;
            json!({
                "t": eqminors::exactnum::format_rational(&tv),
                "matrix": m.to_json(),
                "smallest": names(&class),
                "smallest_size": class.len(),
                "min_value": value.to_json(),
            })
        }
        Construct::PaperMatrix { name } => {
            let ms = paper_matrix(name)?;
            json!({"matrices": ms.iter().map(|p| json!({
                "name": p.name,
                "matrix": p.matrix.to_json(),
                "claimed_equal_class": names(&p.claimed_equal_class),
                "claim_is_exact": p.claim_is_exact,
            })).collect::<Vec<_>>()})
        }
    })
}

fn verify(path: &std::path::Path, mode: Mode, expect: Option<&str>) -> Result<Outcome, CliError> {
    let m = PosMatrix::from_json(&input::read_matrix(path)?)?;
    let mode = match mode {
        Mode::Smallest => ArrangementMode::Smallest,
        Mode::Largest => ArrangementMode::Largest,
        Mode::Full => ArrangementMode::Full,
    };
    let table = MinorTable::compute(&m)?;
    let arr = extract_arrangement(&table, mode)?;
    let mut out = json!({"k": m.k(), "n": m.n(), "minors": table.len(), "arrangement": arr.to_json()});
    let Some(e) = expect else { return Ok(Outcome::ok(out)) };
    let mut want = input::collection(e, m.n())?;
    want.sort();
    let mut got = if mode == ArrangementMode::Largest { arr.largest().to_vec() } else { arr.smallest().to_vec() };
    got.sort();
    let matches = got == want;
    out["expected"] = json!(names(&want));
    out["matches"] = json!(matches);
    Ok(Outcome { json: out, passed: matches })
}

fn read_graph(path: &std::path::Path) -> Result<PlabicGraph, CliError> {
    Ok(PlabicGraph::from_json(&input::read_graph(path)?)?)
}

fn pick_honeycomb(h: &HoneycombArgs) -> Result<Honeycomb, CliError> {
    if h.layered {
        return Ok(layered_honeycomb());
    }
    Ok(match &h.blocks {
        Some(b) => {
            let v = input::usizes(b)?;
            let l: [usize; 4] = v.try_into().map_err(|_| usage("--blocks takes four lengths"))?;
            honeycomb_with_blocks(l)?
        }
        None => honeycomb(h.b1, h.b2)?,
    })
}

fn plabic(p: &Plabic, g: &Global) -> Result<Value, CliError> {
    Ok(match p {
        Plabic::Trace { graph } => {
            let (strands, pi) = read_graph(graph)?.trace_strands()?;
            let mut out = pi.to_json();
            out["strands"] = json!(strands.iter().map(|s| json!({"start": s.start, "end": s.end, "length": s.darts.len()})).collect::<Vec<_>>());
            out
        }
        Plabic::Faces { graph } => {
            let f = read_graph(graph)?.face_labels()?;
            json!({"k": f.k, "faces": f.labels.len(), "labels": names(&f.sorted_labels())})
        }
        Plabic::Reduced { graph } => match read_graph(graph)?.check_reduced() {
            Ok(()) => json!({"reduced": true, "violation": null}),
            Err(v) => json!({"reduced": false, "violation": v.to_string()}),
        },
        Plabic::Move { graph, script, random } => {
            let mut gr = read_graph(graph)?;
            let script = match (script, random) {
                (Some(path), _) => {
                    let s = MoveScript::from_json(&input::read_json(path)?)?;
                    for m in &s.moves {
                        apply_move_mut(&mut gr, m)?;
                    }
                    s
                }
                (None, Some(count)) => {
                    let mut r = rng(g);
                    let mut moves = Vec::new();
                    for _ in 0..*count {
                        let Some(m) = random_move(&gr, &mut r) else { break };
                        apply_move_mut(&mut gr, &m)?;
                        moves.push(m);
                    }
                    MoveScript { moves }
                }
                (None, None) => return Err(usage("pass --script or --random")),
            };
            json!({"moves": script.moves.len(), "square_moves": script.square_moves(), "script": script.to_json(), "graph": gr.to_json()})
        }
        Plabic::Honeycomb(h) => {
            let hc = pick_honeycomb(h)?;
            json!({
                "n": hc.n(),
                "k": hc.k(),
                "blocks": hc.blocks.lengths,
                "square": hc.square_face().to_string(),
                "target": hc.target().to_string(),
                "cells": names(&hc.cells()),
                "surface": names(&hc.surface),
                "collection": names(&hc.collection),
                "graph": hc.graph.to_json(),
            })
        }
        Plabic::Chain(h) => {
            let hc = pick_honeycomb(h)?;
            let cr = chain_reaction(&hc)?;
            json!({
                "square": hc.square_face().to_string(),
                "target": hc.target().to_string(),
                "final_label": cr.final_label.to_string(),
                "square_moves": cr.square_moves,
                "passes": cr.passes,
                "flips": cr.flips.iter().map(|(a, b)| [a.to_string(), b.to_string()]).collect::<Vec<_>>(),
                "script": cr.script.to_json(),
            })
        }
        Plabic::Project { split, w, n } => {
            let n = resolve_n(*n, &[w])?;
            let v = input::usizes(split)?;
            let [a, b, c]: [usize; 3] = v.try_into().map_err(|_| usage("--split takes three cut points a,b,c"))?;
            json!({"projection": project_pi((a, b, c), &input::subset(w, n)?)?})
        }
        Plabic::ExportDot { graph, output } => {
            let dot = export_dot(&read_graph(graph)?);
            if let Some(path) = output {
                std::fs::write(path, &dot).map_err(|e| CliError::Failure(format!("{}: {e}", path.display())))?;
            }
            json!({"dot": dot})
        }
    })
}

fn chain_json(c: &[MutationEdge]) -> Value {
    json!(c.iter().map(|e| e.to_json()).collect::<Vec<_>>())
}

fn evaluate<V: ClusterValue>(seed: &Seed<V>, target: &str, walk: Option<usize>, budget: usize, g: &Global) -> Result<Value, CliError> {
    let j = input::k_subset(target, seed.n(), seed.k())?;
    let ev = match walk {
        Some(w) => evaluate_plucker_random(seed, &j, w, &mut rng(g), budget)?,
        None => evaluate_plucker(seed, &j, budget)?,
    };
    Ok(json!({"target": j.to_string(), "value": ev.value.to_json(), "exchanges": ev.path.len(), "path": chain_json(&ev.path)}))
}

fn cluster(c: &ClusterCmd, g: &Global) -> Result<Outcome, CliError> {
    Ok(match c {
        ClusterCmd::Evaluate { seed_file, target, walk, budget } => Outcome::ok(match AnySeed::from_json(&input::read_json(seed_file)?)? {
            AnySeed::Scalar(s) => evaluate(&s, target, *walk, *budget, g)?,
            AnySeed::Laurent(s) => evaluate(&s, target, *walk, *budget, g)?,
        }),
        ClusterCmd::Distance { i, j, n, cap, budget, chains } => {
            let n = resolve_n(*n, &[i, j])?;
            let (a, b) = (input::subset(i, n)?, input::subset(j, n)?);
            if a.len() != b.len() {
                return Err(CliError::Malformed("subsets of different sizes".into()));
            }
            check_nk(n, a.len())?;
            let rep = mutation_distance(&a, &b, *cap, *budget)?;
            let mut out = rep.to_json();
            if *chains {
                if let Distance::Exact(d) = rep.distance {
                    let cs = shortest_chains(&a, &b, d, *budget)?;
                    out["chains"] = json!(cs.iter().map(|c| chain_json(c)).collect::<Vec<_>>());
                }
            }
            Outcome::ok(out)
        }
        ClusterCmd::Conjecture { b1, b2, budget } => {
            let rep = check_honeycomb_conjecture(*b1, *b2, *budget)?;
            Outcome { json: rep.to_json(), passed: rep.passed() }
        }
        ClusterCmd::WsPoint { n, k, collection } => {
            check_nk(*n, *k)?;
            let s = input::collection(collection, *n)?;
            let m = ws_point(*n, *k, &s)?;
            let (class, value) = arrangement_class(&m, ArrangementMode::Smallest)?;
            Outcome::ok(json!({"matrix": m.to_json(), "smallest": names(&class), "min_value": value.to_json()}))
        }
    })
}
