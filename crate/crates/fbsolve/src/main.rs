//! Command-line interface for the degree-based vertex deletion solvers.
//!
//! Exit codes: 0 = yes / success, 1 = no / invalid, 2 = error.

use std::process::ExitCode;

use fbsolve::bench::{bench_run, to_csv};
use fbsolve::gen::{gen_forest, gen_random_directed, gen_random_undirected, gen_with_feedback_budget};
use fbsolve::io::{parse_instance, write_instance, write_reduction, Annotations, Instance};
use fbsolve::oracle_cap_from_env;
use fbsolve_core::bdd::solve_bdd;
use fbsolve_core::feedback::{
    min_feedback_arc_set, min_feedback_edge_set, min_feedback_vertex_set_directed,
    min_feedback_vertex_set_undirected, verify_feedback_edge_set, FeedbackEdgeSet,
    FeedbackVertexSet,
};
use fbsolve_core::graph::{VertexId, VertexSet};
use fbsolve_core::mdd::{mdd_search, mdd_solv, remove_low_degree, AnnotatedBackend};
use fbsolve_core::mid::solve_mid;
use fbsolve_core::oracle::{
    oracle_bdd, oracle_mdd, oracle_mid, verify_bdd_solution, verify_mdd_solution,
    verify_mid_solution, BddInstance, MddInstance, MidInstance, SolveResult,
};
use fbsolve_core::reduce::{
    make_edge_count_even, reduce_ds_to_mid, reduce_is_to_mdd, reduce_suhs_to_mdd,
};

const USAGE: &str = "\
usage:
  fbsolve solve mid|mdd|bdd <file> [--backend dp|ilp|search|oracle]
          [--fes auto|<file>] [--fvs auto|<file>]
  fbsolve kernelize mdd <file>
  fbsolve feedback fes|fvs|fas <file>
  fbsolve reduce ds-mid|is-mdd|shs-mdd <file> --k <int>
  fbsolve gen ud|dir|forest|budget --n <int> [--m <int>] [--se <int>]
          --seed <int> [--wc <id>] [--k <int>] [--d <int>]
  fbsolve bench --suite <file> --out <csv>
  fbsolve verify <file> --witness <ids...>

files use the instance format: `p ud|dir <n> <m>` with 1-based `e <u> <v>`
lines, `p shs <d> <s>` with `s <elements...>` lines, and annotations
`a wc|k|d|forbid|unrem ...`. A --fes file holds one `u v` edge per line;
a --fvs file holds whitespace-separated vertex ids (all 1-based).
";

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    match run(&args) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(args: &[String]) -> Result<ExitCode, String> {
    let Some(command) = args.first() else {
        eprintln!("{USAGE}");
        return Ok(ExitCode::from(2));
    };
    match command.as_str() {
        "solve" => cmd_solve(&args[1..]),
        "kernelize" => cmd_kernelize(&args[1..]),
        "feedback" => cmd_feedback(&args[1..]),
        "reduce" => cmd_reduce(&args[1..]),
        "gen" => cmd_gen(&args[1..]),
        "bench" => cmd_bench(&args[1..]),
        "verify" => cmd_verify(&args[1..]),
        "help" | "--help" | "-h" => {
            println!("{USAGE}");
            Ok(ExitCode::SUCCESS)
        }
        other => Err(format!("unknown command {other:?}\n{USAGE}")),
    }
}

fn read_file(path: &str) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))
}

fn load_instance(path: &str) -> Result<Instance, String> {
    parse_instance(&read_file(path)?).map_err(|e| format!("{path}: {e}"))
}

/// Parsed `--key value...` flags in order of appearance.
type Flags = Vec<(String, Vec<String>)>;

/// Flag parser over `--key value` pairs; positional arguments are
/// collected in order.
fn split_flags(args: &[String]) -> Result<(Vec<String>, Flags), String> {
    let mut positional = Vec::new();
    let mut flags: Flags = Vec::new();
    let mut i = 0;
    while i < args.len() {
        let a = &args[i];
        if let Some(name) = a.strip_prefix("--") {
            let mut values = Vec::new();
            i += 1;
            while i < args.len() && !args[i].starts_with("--") {
                values.push(args[i].clone());
                i += 1;
            }
            if values.is_empty() {
                return Err(format!("flag --{name} needs a value"));
            }
            flags.push((name.to_string(), values));
        } else {
            positional.push(a.clone());
            i += 1;
        }
    }
    Ok((positional, flags))
}

fn flag_value<'a>(flags: &'a Flags, name: &str) -> Option<&'a str> {
    flags.iter().find(|(n, _)| n == name).map(|(_, v)| v[0].as_str())
}

fn check_known_flags(flags: &Flags, allowed: &[&str]) -> Result<(), String> {
    for (name, _) in flags {
        if !allowed.contains(&name.as_str()) {
            return Err(format!("unknown flag --{name}"));
        }
    }
    Ok(())
}

fn witness_line(result: &SolveResult) -> String {
    match (&result.decision, &result.witness) {
        (true, Some(w)) => {
            let ids: Vec<String> = w.iter().map(|v| (v.index() + 1).to_string()).collect();
            format!("YES witness={}", ids.join(" "))
        }
        (true, None) => "YES".to_string(),
        _ => "NO".to_string(),
    }
}

fn decide(result: SolveResult) -> ExitCode {
    println!("{}", witness_line(&result));
    if result.decision {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn parse_fes_file(path: &str, g: &fbsolve_core::graph::UndirectedGraph) -> Result<FeedbackEdgeSet, String> {
    let mut edges = Vec::new();
    for (idx, line) in read_file(path)?.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(format!("{path} line {}: expected `u v`", idx + 1));
        }
        let u: usize = toks[0].parse().map_err(|e| format!("{path}: {e}"))?;
        let v: usize = toks[1].parse().map_err(|e| format!("{path}: {e}"))?;
        if u == 0 || v == 0 || u > g.vertex_count() || v > g.vertex_count() {
            return Err(format!("{path} line {}: vertex out of range", idx + 1));
        }
        edges.push((VertexId::new(u - 1), VertexId::new(v - 1)));
    }
    let fes = FeedbackEdgeSet { edges };
    if !verify_feedback_edge_set(g, &fes) {
        return Err(format!("{path}: not a feedback edge set of the instance"));
    }
    Ok(fes)
}

fn parse_id_set_file(path: &str, n: usize) -> Result<VertexSet, String> {
    let mut ids = Vec::new();
    for tok in read_file(path)?.split_whitespace() {
        let v: usize = tok.parse().map_err(|e| format!("{path}: {e}"))?;
        if v == 0 || v > n {
            return Err(format!("{path}: vertex {v} out of range 1..={n}"));
        }
        ids.push(VertexId::new(v - 1));
    }
    Ok(VertexSet::from_vec(ids))
}

fn cmd_solve(args: &[String]) -> Result<ExitCode, String> {
    let (pos, flags) = split_flags(args)?;
    check_known_flags(&flags, &["backend", "fes", "fvs"])?;
    let [problem, path] = &pos[..] else {
        return Err(format!("solve needs a problem and a file\n{USAGE}"));
    };
    let backend = flag_value(&flags, "backend").unwrap_or("search");
    let instance = load_instance(path)?;
    let ann = instance.annotations().clone();
    let need = |field: Option<usize>, name: &str| {
        field.ok_or_else(|| format!("{path}: missing annotation `a {name} ...`"))
    };

    match problem.as_str() {
        "mid" => {
            let Instance::Directed { g, .. } = instance else {
                return Err(format!("{path}: MID needs a directed instance (p dir)"));
            };
            let wc = ann.wc.ok_or_else(|| format!("{path}: missing annotation `a wc ...`"))?;
            let k = need(ann.k, "k")?;
            let inst = MidInstance::new(g, wc, k).map_err(|e| format!("{e}"))?;
            match backend {
                "search" => {
                    let cap = match flag_value(&flags, "fvs") {
                        None => None,
                        Some("auto") => Some(
                            min_feedback_vertex_set_directed(&inst.g, &VertexSet::empty())
                                .map_err(|e| format!("{e}"))?
                                .size(),
                        ),
                        Some(file) => {
                            let set = parse_id_set_file(file, inst.g.vertex_count())?;
                            if !inst.g.delete_vertices(&set).0.is_acyclic() {
                                return Err(format!("{file}: not a feedback vertex set"));
                            }
                            Some(set.len())
                        }
                    };
                    Ok(decide(solve_mid(&inst, cap).0))
                }
                "oracle" => Ok(decide(
                    oracle_mid(&inst, Some(oracle_cap_from_env())).map_err(|e| format!("{e}"))?,
                )),
                other => Err(format!("backend {other:?} does not apply to MID")),
            }
        }
        "mdd" => {
            let Instance::Undirected { g, .. } = instance else {
                return Err(format!("{path}: MDD needs an undirected instance (p ud)"));
            };
            let wc = ann.wc.ok_or_else(|| format!("{path}: missing annotation `a wc ...`"))?;
            let k = need(ann.k, "k")?;
            let inst = MddInstance::new(g, wc, k).map_err(|e| format!("{e}"))?;
            match backend {
                "search" => {
                    let fes = match flag_value(&flags, "fes").unwrap_or("auto") {
                        "auto" => min_feedback_edge_set(&inst.g),
                        file => parse_fes_file(file, &inst.g)?,
                    };
                    Ok(decide(mdd_search(&inst, &fes).map_err(|e| format!("{e}"))?))
                }
                "dp" | "ilp" => {
                    let fvs = match flag_value(&flags, "fvs").unwrap_or("auto") {
                        "auto" => min_feedback_vertex_set_undirected(
                            &inst.g,
                            &VertexSet::singleton(inst.w_c),
                        )
                        .map_err(|e| format!("{e}"))?,
                        file => FeedbackVertexSet {
                            vertices: parse_id_set_file(file, inst.g.vertex_count())?,
                            directed: false,
                        },
                    };
                    let b = if backend == "dp" { AnnotatedBackend::Dp } else { AnnotatedBackend::Ilp };
                    Ok(decide(mdd_solv(&inst, &fvs, b).map_err(|e| format!("{e}"))?))
                }
                "oracle" => Ok(decide(
                    oracle_mdd(&inst, Some(oracle_cap_from_env())).map_err(|e| format!("{e}"))?,
                )),
                other => Err(format!("unknown backend {other:?}")),
            }
        }
        "bdd" => {
            let Instance::Undirected { g, .. } = instance else {
                return Err(format!("{path}: BDD needs an undirected instance (p ud)"));
            };
            let d = need(ann.d, "d")?;
            let k = need(ann.k, "k")?;
            let inst = BddInstance::new(g, d, k).map_err(|e| format!("{e}"))?;
            match backend {
                "search" => {
                    let fes = match flag_value(&flags, "fes").unwrap_or("auto") {
                        "auto" => min_feedback_edge_set(&inst.g),
                        file => parse_fes_file(file, &inst.g)?,
                    };
                    Ok(decide(solve_bdd(&inst, &fes).map_err(|e| format!("{e}"))?))
                }
                "oracle" => Ok(decide(
                    oracle_bdd(&inst, Some(oracle_cap_from_env())).map_err(|e| format!("{e}"))?,
                )),
                other => Err(format!("backend {other:?} does not apply to BDD")),
            }
        }
        other => Err(format!("unknown problem {other:?}")),
    }
}

fn cmd_kernelize(args: &[String]) -> Result<ExitCode, String> {
    let [problem, path] = args else {
        return Err(format!("kernelize needs a problem and a file\n{USAGE}"));
    };
    if problem != "mdd" {
        return Err(format!("kernelize supports only mdd, got {problem:?}"));
    }
    let Instance::Undirected { g, ann } = load_instance(path)? else {
        return Err(format!("{path}: kernelize mdd needs an undirected instance"));
    };
    let wc = ann.wc.ok_or_else(|| format!("{path}: missing annotation `a wc ...`"))?;
    let k = ann.k.ok_or_else(|| format!("{path}: missing annotation `a k ...`"))?;
    let inst = MddInstance::new(g, wc, k).map_err(|e| format!("{e}"))?;
    let out = remove_low_degree(&inst);
    match out.resolved {
        Some(true) => {
            let w = out.resolution_witness.expect("yes resolution carries a witness");
            let ids: Vec<String> = w.iter().map(|v| (v.index() + 1).to_string()).collect();
            println!("# resolved YES witness={}", ids.join(" "));
        }
        Some(false) => println!("# resolved NO"),
        None => println!(
            "# kernel: {} vertices removed, budget {} left",
            out.removed_count, out.reduced.k
        ),
    }
    print!(
        "{}",
        write_instance(&Instance::Undirected {
            g: out.reduced.g.clone(),
            ann: Annotations {
                wc: Some(out.reduced.w_c),
                k: Some(out.reduced.k),
                ..Default::default()
            },
        })
    );
    Ok(ExitCode::SUCCESS)
}

fn cmd_feedback(args: &[String]) -> Result<ExitCode, String> {
    let [kind, path] = args else {
        return Err(format!("feedback needs a set kind and a file\n{USAGE}"));
    };
    let instance = load_instance(path)?;
    match (kind.as_str(), instance) {
        ("fes", Instance::Undirected { g, .. }) => {
            let fes = min_feedback_edge_set(&g);
            println!("FES size={}", fes.size());
            for (u, v) in &fes.edges {
                println!("e {} {}", u.index() + 1, v.index() + 1);
            }
            Ok(ExitCode::SUCCESS)
        }
        ("fvs", Instance::Undirected { g, ann }) => {
            let forbidden = ann.forbid.unwrap_or_default();
            let fvs = min_feedback_vertex_set_undirected(&g, &forbidden)
                .map_err(|e| format!("{e}"))?;
            println!("FVS size={}", fvs.size());
            for v in fvs.vertices.iter() {
                println!("v {}", v.index() + 1);
            }
            Ok(ExitCode::SUCCESS)
        }
        ("fvs", Instance::Directed { g, ann }) => {
            let forbidden = ann.forbid.unwrap_or_default();
            let fvs =
                min_feedback_vertex_set_directed(&g, &forbidden).map_err(|e| format!("{e}"))?;
            println!("FVS size={}", fvs.size());
            for v in fvs.vertices.iter() {
                println!("v {}", v.index() + 1);
            }
            Ok(ExitCode::SUCCESS)
        }
        ("fas", Instance::Directed { g, .. }) => {
            let fas = min_feedback_arc_set(&g);
            println!("FAS size={}", fas.size());
            for (u, v) in &fas.arcs {
                println!("e {} {}", u.index() + 1, v.index() + 1);
            }
            Ok(ExitCode::SUCCESS)
        }
        ("fes", _) => Err("fes needs an undirected instance".into()),
        ("fas", _) => Err("fas needs a directed instance".into()),
        ("fvs", _) => Err("fvs needs a graph instance".into()),
        (other, _) => Err(format!("unknown feedback set kind {other:?}")),
    }
}

fn cmd_reduce(args: &[String]) -> Result<ExitCode, String> {
    let (pos, flags) = split_flags(args)?;
    check_known_flags(&flags, &["k"])?;
    let [which, path] = &pos[..] else {
        return Err(format!("reduce needs a reduction name and a file\n{USAGE}"));
    };
    let k: usize = flag_value(&flags, "k")
        .ok_or("reduce needs --k <int>")?
        .parse()
        .map_err(|e| format!("--k: {e}"))?;
    let instance = load_instance(path)?;
    let out = match (which.as_str(), instance) {
        ("ds-mid", Instance::Undirected { g, .. }) => {
            reduce_ds_to_mid(&g, k).map_err(|e| format!("{e}"))?
        }
        ("is-mdd", Instance::Undirected { g, .. }) => {
            let evened = make_edge_count_even(&g);
            if evened.vertex_count() != g.vertex_count() {
                println!(
                    "# edge count evened: {} -> {} vertices",
                    g.vertex_count(),
                    evened.vertex_count()
                );
            }
            reduce_is_to_mdd(&evened, k).map_err(|e| format!("{e}"))?
        }
        ("shs-mdd", Instance::HittingSet { universe, sets, .. }) => {
            reduce_suhs_to_mdd(universe, &sets, k).map_err(|e| format!("{e}"))?
        }
        ("ds-mid" | "is-mdd", _) => return Err("this reduction needs an undirected instance".into()),
        ("shs-mdd", _) => return Err("shs-mdd needs a hitting-set instance (p shs)".into()),
        (other, _) => return Err(format!("unknown reduction {other:?}")),
    };
    print!("{}", write_reduction(&out));
    Ok(ExitCode::SUCCESS)
}

fn cmd_gen(args: &[String]) -> Result<ExitCode, String> {
    let (pos, flags) = split_flags(args)?;
    check_known_flags(&flags, &["n", "m", "se", "seed", "wc", "k", "d"])?;
    let [kind] = &pos[..] else {
        return Err(format!("gen needs a kind\n{USAGE}"));
    };
    let num = |name: &str| -> Result<Option<usize>, String> {
        flag_value(&flags, name)
            .map(|v| v.parse().map_err(|e| format!("--{name}: {e}")))
            .transpose()
    };
    let n = num("n")?.ok_or("gen needs --n")?;
    let seed: u64 = flag_value(&flags, "seed")
        .ok_or("gen needs --seed")?
        .parse()
        .map_err(|e| format!("--seed: {e}"))?;
    let ann = Annotations {
        wc: num("wc")?
            .map(|v| {
                if v == 0 || v > n {
                    Err(format!("--wc {v} out of range 1..={n}"))
                } else {
                    Ok(VertexId::new(v - 1))
                }
            })
            .transpose()?,
        k: num("k")?,
        d: num("d")?,
        ..Default::default()
    };
    let instance = match kind.as_str() {
        "ud" => {
            let m = num("m")?.ok_or("gen ud needs --m")?;
            Instance::Undirected {
                g: gen_random_undirected(n, m, seed).map_err(|e| format!("{e}"))?,
                ann,
            }
        }
        "dir" => {
            let m = num("m")?.ok_or("gen dir needs --m")?;
            Instance::Directed {
                g: gen_random_directed(n, m, seed).map_err(|e| format!("{e}"))?,
                ann,
            }
        }
        "forest" => Instance::Undirected { g: gen_forest(n, seed), ann },
        "budget" => {
            let se = num("se")?.ok_or("gen budget needs --se")?;
            Instance::Undirected {
                g: gen_with_feedback_budget(n, se, seed).map_err(|e| format!("{e}"))?,
                ann,
            }
        }
        other => return Err(format!("unknown generator {other:?}")),
    };
    print!("{}", write_instance(&instance));
    Ok(ExitCode::SUCCESS)
}

fn cmd_bench(args: &[String]) -> Result<ExitCode, String> {
    let (pos, flags) = split_flags(args)?;
    check_known_flags(&flags, &["suite", "out"])?;
    if !pos.is_empty() {
        return Err(format!("unexpected arguments {pos:?}"));
    }
    let suite_path = flag_value(&flags, "suite").ok_or("bench needs --suite <file>")?;
    let out_path = flag_value(&flags, "out").ok_or("bench needs --out <csv>")?;
    let records = bench_run(&read_file(suite_path)?)?;
    std::fs::write(out_path, to_csv(&records)).map_err(|e| format!("cannot write {out_path}: {e}"))?;
    println!("{} rows written to {out_path}", records.len());
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: &[String]) -> Result<ExitCode, String> {
    let (pos, flags) = split_flags(args)?;
    check_known_flags(&flags, &["witness"])?;
    let [path] = &pos[..] else {
        return Err(format!("verify needs a file\n{USAGE}"));
    };
    let witness_toks: &[String] = flags
        .iter()
        .find(|(n, _)| n == "witness")
        .map(|(_, v)| v.as_slice())
        .ok_or("verify needs --witness <ids...>")?;
    let instance = load_instance(path)?;
    let ann = instance.annotations().clone();

    let parse_ids = |n: usize| -> Result<VertexSet, String> {
        let mut ids = Vec::new();
        for t in witness_toks {
            for tok in t.split_whitespace() {
                let v: usize = tok.parse().map_err(|e| format!("--witness: {e}"))?;
                if v == 0 || v > n {
                    return Err(format!("--witness: vertex {v} out of range 1..={n}"));
                }
                ids.push(VertexId::new(v - 1));
            }
        }
        Ok(VertexSet::from_vec(ids))
    };

    let valid = match instance {
        Instance::Directed { g, .. } => {
            let wc = ann.wc.ok_or_else(|| format!("{path}: missing `a wc`"))?;
            let k = ann.k.unwrap_or(g.vertex_count() - 1);
            let witness = parse_ids(g.vertex_count())?;
            let inst = MidInstance::new(g, wc, k).map_err(|e| format!("{e}"))?;
            verify_mid_solution(&inst, &witness)
        }
        Instance::Undirected { g, .. } => {
            let witness = parse_ids(g.vertex_count())?;
            if let Some(wc) = ann.wc {
                let k = ann.k.unwrap_or(g.vertex_count() - 1);
                let inst = MddInstance::new(g, wc, k).map_err(|e| format!("{e}"))?;
                verify_mdd_solution(&inst, &witness)
            } else if let Some(d) = ann.d {
                let k = ann.k.unwrap_or(g.vertex_count());
                if let Some(unrem) = &ann.unrem {
                    if !witness.is_disjoint(unrem) {
                        println!("INVALID");
                        return Ok(ExitCode::from(1));
                    }
                }
                let inst = BddInstance::new(g, d, k).map_err(|e| format!("{e}"))?;
                verify_bdd_solution(&inst, &witness)
            } else {
                return Err(format!("{path}: need `a wc` (MDD) or `a d` (BDD) to verify"));
            }
        }
        Instance::HittingSet { .. } => {
            return Err(format!("{path}: hitting-set instances have no witness verifier"));
        }
    };
    if valid {
        println!("VALID");
        Ok(ExitCode::SUCCESS)
    } else {
        println!("INVALID");
        Ok(ExitCode::from(1))
    }
}
