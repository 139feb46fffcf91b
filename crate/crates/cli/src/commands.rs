use std::path::Path;

use adrg::classify::GraphContext;
use adrg::iso::are_isomorphic;
use adrg::perturb::{apply, verify_identity};
use adrg::report::{analyze as analyze_graph, AnalyzeOptions};
use adrg::sets::{
    find_correspondence, generate_mates, independent_sets, is_isometric, is_removal_cospectral,
    perturb_cospectral_check, schwenk_walk_check, set_mates, MateFamily, MateOp, RemovalMethod,
    SetCorrespondence, SetOp,
};
use adrg::{charpoly, Graph, PerturbationOp};
use serde_json::{json, Value};

use crate::failure::{code, Failure};
use crate::input::{encode, load, vertex_list, Input};
use crate::table::{self, real, yes_no};
use crate::{CocliqueOp, Format, RemovalArg, SetPair, SetsCommand};

type Outcome = Result<i32, Failure>;

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json values serialize")
}

fn verdict(b: bool) -> i32 {
    if b {
        code::OK
    } else {
        code::FALSE
    }
}

pub fn analyze(
    spec: &str,
    json: bool,
    max_h: Option<u32>,
    timings: bool,
    tol: Option<f64>,
    compare_tol: f64,
) -> Outcome {
    let input = load(spec)?;
    let opts = AnalyzeOptions {
        tol,
        compare_tol: Some(compare_tol),
        max_h,
        timings,
    };
    let r = analyze_graph(&input.graph, input.name.as_deref(), &opts)?;
    if json {
        println!("{}", r.to_json());
        return Ok(code::OK);
    }
    let spectrum: Vec<String> = r
        .spectrum
        .eigenvalues
        .iter()
        .zip(&r.spectrum.multiplicities)
        .map(|(l, m)| format!("{}^{m}", real(*l)))
        .collect();
    let wr = &r.profile.levels[0];
    println!("graph             {}", r.identity);
    println!("vertices          {}", r.n);
    println!("edges             {}", r.edges);
    println!("diameter          {}", r.diameter);
    println!("regular           {}", yes_no(r.regular));
    println!("bipartite         {}", yes_no(r.bipartite));
    println!("charpoly          {}", r.spectrum.charpoly_text);
    println!("spectrum          {}", spectrum.join(", "));
    println!("walk-regular      {}", yes_no(r.profile.walk_regular));
    if !r.profile.walk_regular {
        if let Some(w) = table::first_witness([&wr.walk_regular, &wr.cospectral]) {
            println!("  witness         {w}");
        }
    }
    match &r.distance_regular.intersection_array {
        Some(a) if r.distance_regular.verdict => println!("distance-regular  yes {a}"),
        _ => {
            println!("distance-regular  no");
            if let Some(w) = &r.distance_regular.combinatorial_witness {
                println!("  witness         {w}");
            }
        }
    }
    for w in &r.spectrum.warnings {
        println!("warning           {w}");
    }
    println!();
    print!("{}", table::profile(&r.profile));
    if let Some(times) = &r.timings {
        println!();
        for t in times {
            println!("time {:<20} {:>10.3} ms", t.stage, t.millis);
        }
    }
    Ok(code::OK)
}

pub fn profile(spec: &str, json: bool, max_h: Option<u32>, tol: Option<f64>, compare_tol: f64) -> Outcome {
    let input = load(spec)?;
    let ctx = GraphContext::with_tolerance(&input.graph, tol)?.with_compare_tolerance(compare_tol);
    let p = ctx.profile_to(max_h)?;
    if json {
        println!("{}", p.to_json());
    } else {
        print!("{}", table::profile(&p));
    }
    Ok(code::OK)
}

pub fn perturb(spec: &str, descriptor: &str, out: Option<&Path>, json: bool) -> Outcome {
    let input = load(spec)?;
    let op: PerturbationOp = descriptor
        .parse()
        .map_err(|e: adrg::Error| Failure::parse(e.to_string()))?;
    let applied = apply(&input.graph, &op)?;
    let check = verify_identity(&input.graph, &op)?;
    let (text, format) = encode(&applied.graph);
    if let Some(path) = out {
        std::fs::write(path, &text)?;
    }
    if json {
        let v = json!({
            "op": op.to_string(),
            "identity": check.identity,
            "holds": check.holds,
            "lhs": check.lhs,
            "rhs": check.rhs,
            "n": applied.graph.n(),
            "format": format,
            "graph": text.trim_end(),
            "output": out.map(|p| p.display().to_string()),
        });
        println!("{}", pretty(&v));
    } else {
        let line = format!(
            "{op}: {} {}",
            check.identity,
            if check.holds { "verified" } else { "FAILED" }
        );
        if out.is_some() {
            println!("{line}");
        } else {
            print!("{text}");
            eprintln!("{line}");
        }
    }
    if !check.holds {
        return Err(Failure::invariant(format!(
            "{op}: identity {} does not hold: {} vs {}",
            check.identity, check.lhs, check.rhs
        )));
    }
    Ok(code::OK)
}

pub fn cospectral(first: &str, second: &str, json: bool) -> Outcome {
    let (a, b) = (load(first)?, load(second)?);
    let (pa, pb) = (charpoly(&a.graph), charpoly(&b.graph));
    let same = pa == pb;
    if json {
        let v = json!({
            "cospectral": same,
            "first": { "source": a.source, "charpoly": pa, "text": pa.to_string() },
            "second": { "source": b.source, "charpoly": pb, "text": pb.to_string() },
        });
        println!("{}", pretty(&v));
    } else if same {
        println!("cospectral: yes");
        println!("charpoly: {pa}");
    } else {
        println!("cospectral: no");
        println!("{}: {pa}", a.source);
        println!("{}: {pb}", b.source);
    }
    Ok(verdict(same))
}

/// Sorted per-vertex (loops, row multiset, distance profile); differing
/// values certify non-isomorphism.
fn invariant(g: &Graph) -> Vec<(u32, Vec<u32>, Vec<usize>)> {
    let d = g.distances();
    let mut out: Vec<_> = (0..g.n())
        .map(|v| {
            let mut row: Vec<u32> = g.row(v).to_vec();
            row.sort_unstable();
            (g.get(v, v), row, d.profile(v))
        })
        .collect();
    out.sort();
    out
}

fn certificates(family: &MateFamily) -> Result<Vec<Value>, Failure> {
    let graphs = family.graphs();
    let invariants: Vec<_> = graphs.iter().map(|g| invariant(g)).collect();
    let mut out = Vec::new();
    for i in 0..graphs.len() {
        for j in (i + 1)..graphs.len() {
            let method = if invariants[i] != invariants[j] {
                "vertex invariants differ"
            } else if are_isomorphic(graphs[i], graphs[j])?.is_none() {
                "isomorphism search found no bijection"
            } else {
                return Err(Failure::invariant(format!("mate classes {i} and {j} are isomorphic")));
            };
            out.push(json!({ "pair": [i, j], "method": method }));
        }
    }
    Ok(out)
}

fn family_manifest(
    input: &Input,
    family: &MateFamily,
    header: Value,
    out_dir: Option<&Path>,
) -> Result<Value, Failure> {
    if let Some(dir) = out_dir {
        std::fs::create_dir_all(dir)?;
    }
    let mut classes = Vec::new();
    for (i, class) in family.classes.iter().enumerate() {
        let (text, format) = encode(&class.graph);
        let file = format!("mate_{i}.{format}");
        if let Some(dir) = out_dir {
            std::fs::write(dir.join(&file), &text)?;
        }
        classes.push(json!({
            "index": i,
            "file": file,
            "format": format,
            "n": class.graph.n(),
            "representative": class.representative,
            "members": class.members.len(),
        }));
    }
    let mut manifest = header;
    let m = manifest.as_object_mut().expect("header is an object");
    m.insert("source".into(), json!(input.source));
    m.insert("charpoly".into(), json!(family.charpoly));
    m.insert("charpoly_text".into(), json!(family.charpoly.to_string()));
    m.insert("classes".into(), Value::Array(classes));
    m.insert("certificates".into(), Value::Array(certificates(family)?));
    m.insert("pairwise_non_isomorphic".into(), json!(family.pairwise_non_isomorphic));
    if let Some(dir) = out_dir {
        std::fs::write(dir.join("manifest.json"), pretty(&manifest) + "\n")?;
    }
    Ok(manifest)
}

fn print_family(manifest: &Value, family: &MateFamily, json: bool) {
    if json {
        println!("{}", pretty(manifest));
        return;
    }
    println!("charpoly: {}", family.charpoly);
    println!("classes:  {}", family.classes.len());
    for (i, class) in family.classes.iter().enumerate() {
        println!(
            "  {i}: {} vertices, {} member(s), representative {:?}",
            class.graph.n(),
            class.members.len(),
            class.representative
        );
    }
}

pub fn mates(spec: &str, h: u32, op: &str, out_dir: Option<&Path>, json: bool) -> Outcome {
    let input = load(spec)?;
    let op: MateOp = op.parse()?;
    let family = generate_mates(&input.graph, h, op)?;
    let header = json!({ "distance": h, "op": op });
    let manifest = family_manifest(&input, &family, header, out_dir)?;
    print_family(&manifest, &family, json);
    Ok(code::OK)
}

pub fn catalog(name: Option<&str>, format: Format) -> Outcome {
    let Some(name) = name else {
        for n in adrg::catalog::available() {
            println!("{n}");
        }
        return Ok(code::OK);
    };
    let g = adrg::catalog(name)?;
    match format {
        Format::G6 => print!("{}", encode(&g).0),
        Format::Json => println!("{}", g.to_json()),
        Format::Dot => print!("{}", g.to_dot(name)),
    }
    Ok(code::OK)
}

struct Pair {
    g: Input,
    gp: Input,
    c: SetCorrespondence,
    json: bool,
}

fn load_pair(p: &SetPair) -> Result<Pair, Failure> {
    let g = load(&p.input)?;
    let gp = load(p.other.as_deref().unwrap_or(&p.input))?;
    let c = SetCorrespondence::new(vertex_list(&p.u)?, vertex_list(&p.u_prime)?)?;
    Ok(Pair { g, gp, c, json: p.json })
}

fn emit(json: bool, value: Value, text: String) {
    if json {
        println!("{}", pretty(&value));
    } else {
        println!("{text}");
    }
}

pub fn sets(command: SetsCommand) -> Outcome {
    match command {
        SetsCommand::Removal { pair, method } => {
            let p = load_pair(&pair)?;
            let method = match method {
                RemovalArg::Multiplicity => RemovalMethod::Multiplicity,
                RemovalArg::Exhaustive => RemovalMethod::Exhaustive,
                RemovalArg::Both => RemovalMethod::Both,
            };
            let r = is_removal_cospectral(&p.g.graph, &p.gp.graph, &p.c, method)?;
            let mut text = format!("removal-cospectral: {}", yes_no(r.verdict));
            if let Some(w) = r.exhaustive.as_ref().and_then(|e| e.witness.as_ref()) {
                text.push_str(&format!("\nwitness subset: {w:?}"));
            }
            emit(p.json, serde_json::to_value(&r).expect("serializes"), text);
            Ok(verdict(r.verdict))
        }
        SetsCommand::Isometric { pair } => {
            let p = load_pair(&pair)?;
            let iso = is_isometric(&p.g.graph, &p.gp.graph, &p.c)?;
            emit(p.json, json!({ "isometric": iso }), format!("isometric: {}", yes_no(iso)));
            Ok(verdict(iso))
        }
        SetsCommand::Walks { pair, max_len } => {
            let p = load_pair(&pair)?;
            let w = schwenk_walk_check(&p.g.graph, &p.gp.graph, &p.c, max_len)?;
            let mut text = format!("walk counts agree up to length {}: {}", w.ell_max, yes_no(w.holds));
            if let Some((ell, u, v, a, b)) = &w.witness {
                text.push_str(&format!("\nwitness: length {ell} between {u} and {v}: {a} vs {b}"));
            }
            emit(p.json, serde_json::to_value(&w).expect("serializes"), text);
            Ok(verdict(w.holds))
        }
        SetsCommand::Find { pair } => {
            let p = load_pair(&pair)?;
            let found = find_correspondence(&p.g.graph, &p.gp.graph, &p.c.u, &p.c.u_prime)?;
            let text = match &found {
                Some(c) => format!("correspondence: {:?} -> {:?}", c.u, c.u_prime),
                None => "correspondence: none".to_string(),
            };
            emit(p.json, json!({ "correspondence": found }), text);
            Ok(verdict(found.is_some()))
        }
        SetsCommand::Perturb { pair, ops } => {
            let p = load_pair(&pair)?;
            let ops = ops
                .split(|c: char| c == ';' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(str::parse)
                .collect::<Result<Vec<PerturbationOp>, adrg::Error>>()
                .map_err(|e| Failure::parse(e.to_string()))?;
            let out = perturb_cospectral_check(&p.g.graph, &p.gp.graph, &p.c, &ops)?;
            let text = format!(
                "cospectral: {}\nremoval-cospectral: {}\nsets: {:?} -> {:?}",
                yes_no(out.cospectral),
                yes_no(out.removal_cospectral),
                out.sets.u,
                out.sets.u_prime
            );
            let value = json!({
                "ops": ops.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "cospectral": out.cospectral,
                "removal_cospectral": out.removal_cospectral,
                "sets": out.sets,
                "graph": encode(&out.graph).0.trim_end(),
                "graph_prime": encode(&out.graph_prime).0.trim_end(),
            });
            emit(p.json, value, text);
            Ok(verdict(out.holds()))
        }
        SetsCommand::Cocliques { input, size, op, json } => {
            let input = load(&input)?;
            let sets = independent_sets(&input.graph, size);
            if sets.is_empty() {
                return Err(Failure {
                    code: code::REFUSED,
                    message: format!("the graph has no independent set of size {size}"),
                });
            }
            let op = match op {
                CocliqueOp::Delete => SetOp::Delete,
                CocliqueOp::Complete => SetOp::Complete,
            };
            let family = set_mates(&input.graph, &sets, op)?;
            let header = json!({ "size": size, "op": op });
            let manifest = family_manifest(&input, &family, header, None)?;
            print_family(&manifest, &family, json);
            Ok(code::OK)
        }
    }
}
