use std::fs;
use std::time::Instant;

use anyhow::anyhow;
use serde_json::{json, Value};
use tripack::constructions::{covering_complete, decompose_complete_with_budget, decompose_matching_removed, ell};
use tripack::decomp::{
    brute_force_extremal, decomposition_from_packing, max_triangle_packing_with_budget, parse_parts,
    pi3_alpha_with_budget, validate_cover, validate_decomposition,
};
use tripack::flagcert::verify_certificate;
use tripack::frontier::{scan_exhaustive, scan_sampled, FrontierScan};
use tripack::graph::{make_named, parse_edge_list, parse_graph6, to_graph6, NamedKind};
use tripack::lp::pi3f;
use tripack::rational::{display, int, parse_rational};
use tripack::{Decomposition, Error, Graph, Rational};

use crate::args::{Cli, Command, GraphInput};
use crate::report::{kv_csv, Failure, Report, UsageExt};

/// Errors from the library: malformed or out-of-range input is a usage
/// error, anything else is a failed run.
fn lib(e: Error) -> Failure {
    match e {
        Error::BudgetExhausted { .. }
        | Error::Construction(_)
        | Error::NonEdgePart { .. }
        | Error::Overlap { .. }
        | Error::Uncovered { .. } => Failure::Failed(e.into()),
        _ => Failure::Usage(e.into()),
    }
}

trait LibExt<T> {
    fn lib(self) -> Result<T, Failure>;
}

impl<T> LibExt<T> for tripack::Result<T> {
    fn lib(self) -> Result<T, Failure> {
        self.map_err(lib)
    }
}

fn read_graph(input: &GraphInput) -> Result<(Graph, Value), Failure> {
    if let Some(s) = &input.graph6 {
        return Ok((parse_graph6(s.trim()).lib()?, json!({ "graph6": s })));
    }
    let Some(path) = &input.input else {
        return Err(Failure::Usage(anyhow!("a graph is required: pass --graph6 or --input")));
    };
    let text = fs::read_to_string(path).usage()?;
    let first = text.lines().map(|l| l.split('#').next().unwrap_or("").trim()).find(|l| !l.is_empty());
    let edge_list = first.is_some_and(|l| l.chars().all(|c| c.is_ascii_digit()));
    let g = if edge_list { parse_edge_list(&text) } else { parse_graph6(first.unwrap_or("")) }.lib()?;
    Ok((g, json!({ "path": path.display().to_string() })))
}

fn alpha(s: &str) -> Result<Rational, Failure> {
    let a = parse_rational(s).lib()?;
    if a < int(0) {
        return Err(Failure::Usage(anyhow!("alpha must be nonnegative")));
    }
    Ok(a)
}

fn parts_json(d: &Decomposition) -> Value {
    Value::from(d.to_text().lines().map(str::to_owned).collect::<Vec<_>>())
}

fn graph_summary(r: &mut Report, g: &Graph) {
    r.line("graph6", to_graph6(g));
    r.line("order", g.order());
    r.line("edges", g.edge_count());
}

pub fn run(cli: &Cli) -> Result<Report, Failure> {
    let start = Instant::now();
    let mut report = match &cli.command {
        Command::Gen { family, n, m } => gen(family, *n, *m)?,
        Command::Nu { graph } => nu(graph, cli.budget)?,
        Command::Pi3 { graph, alpha: a } => pi3(graph, &alpha(a)?, cli.budget)?,
        Command::Fraclp { graph } => fraclp(graph, cli.budget)?,
        Command::Decompose { n, m, parts, graph, alpha: a } => match parts {
            Some(p) => check_parts(graph, p, &alpha(a)?)?,
            None => decompose(n.expect("clap enforces --n"), *m, cli.budget)?,
        },
        Command::Cover { n } => cover(*n)?,
        Command::Brute { n, alpha: a } => brute(*n, &alpha(a)?)?,
        Command::VerifyCert => verify_cert(),
        Command::Scan { n, sample, seed } => scan(*n, *sample, *seed)?,
    };
    report.elapsed = start.elapsed();
    Ok(report)
}

fn gen(family: &str, n: usize, m: Option<usize>) -> Result<Report, Failure> {
    let kind: NamedKind = family.parse().lib()?;
    let g = make_named(kind, n, m).lib()?;
    let mut r = Report::new("gen", json!({ "family": family, "n": n, "m": m }));
    r.text = format!("{}\n", to_graph6(&g));
    r.result = json!({ "graph6": to_graph6(&g), "order": n, "edges": g.edge_count() });
    r.csv = kv_csv(&[("graph6", to_graph6(&g)), ("order", n.to_string()), ("edges", g.edge_count().to_string())]);
    Ok(r)
}

fn nu(input: &GraphInput, budget: u64) -> Result<Report, Failure> {
    let (g, inp) = read_graph(input)?;
    let p = max_triangle_packing_with_budget(&g, budget).lib()?;
    let mut r = Report::new("nu", inp);
    graph_summary(&mut r, &g);
    r.line("nu", p.nu);
    r.line("search_nodes", p.nodes);
    for t in &p.witness {
        r.text.push_str(&format!("t {t}\n"));
    }
    let d = decomposition_from_packing(&g, &p.witness);
    r.verdict("witness_valid", p.witness.len() == p.nu && validate_decomposition(&g, &d, &int(3)).is_ok());
    r.result = json!({ "graph6": to_graph6(&g), "edges": g.edge_count(), "nu": p.nu, "search_nodes": p.nodes });
    r.witnesses = Value::from(p.witness.iter().map(|t| t.to_string()).collect::<Vec<_>>());
    r.csv = kv_csv(&[("graph6", to_graph6(&g)), ("edges", g.edge_count().to_string()), ("nu", p.nu.to_string())]);
    Ok(r)
}

fn pi3(input: &GraphInput, a: &Rational, budget: u64) -> Result<Report, Failure> {
    let (g, inp) = read_graph(input)?;
    let (cost, d) = pi3_alpha_with_budget(&g, a, budget).lib()?;
    let mut r = Report::new("pi3", inp);
    graph_summary(&mut r, &g);
    r.line("alpha", display(a));
    r.line("cost", display(&cost));
    r.text.push_str(&d.to_text());
    r.verdict("decomposition_valid", validate_decomposition(&g, &d, a).is_ok_and(|c| c == cost));
    r.result = json!({
        "graph6": to_graph6(&g), "edges": g.edge_count(), "alpha": display(a), "cost": display(&cost),
        "triangle_parts": d.triangle_parts.len(), "edge_parts": d.edge_parts.len(),
    });
    r.witnesses = parts_json(&d);
    r.csv = kv_csv(&[("graph6", to_graph6(&g)), ("alpha", display(a)), ("cost", display(&cost))]);
    Ok(r)
}

fn fraclp(input: &GraphInput, budget: u64) -> Result<Report, Failure> {
    let (g, inp) = read_graph(input)?;
    let (value, w) = pi3f(&g).lib()?;
    let (integral, _) = pi3_alpha_with_budget(&g, &int(3), budget).lib()?;
    let e = int(g.edge_count() as i64);
    let mut r = Report::new("fraclp", inp);
    graph_summary(&mut r, &g);
    r.line("pi3f", display(&value));
    r.line("pi3", display(&integral));
    for (t, x) in w.triangles.iter().filter(|(_, x)| *x != int(0)) {
        r.text.push_str(&format!("t {t} {}\n", display(x)));
    }
    for ((u, v), x) in w.edges.iter().filter(|(_, x)| *x != int(0)) {
        r.text.push_str(&format!("e {u} {v} {}\n", display(x)));
    }
    r.verdict("weights_feasible", w.check().is_ok() && w.cost() == value);
    r.verdict("at_least_edges", value >= e);
    r.verdict("at_most_integral", value <= integral);
    r.result = json!({
        "graph6": to_graph6(&g), "edges": g.edge_count(), "pi3f": display(&value), "pi3": display(&integral),
    });
    let mut wit: Vec<String> =
        w.triangles.iter().filter(|(_, x)| *x != int(0)).map(|(t, x)| format!("t {t} {}", display(x))).collect();
    wit.extend(w.edges.iter().filter(|(_, x)| *x != int(0)).map(|((u, v), x)| format!("e {u} {v} {}", display(x))));
    r.witnesses = Value::from(wit);
    r.csv = kv_csv(&[("graph6", to_graph6(&g)), ("pi3f", display(&value)), ("pi3", display(&integral))]);
    Ok(r)
}

/// Largest order at which `decompose` cross-checks against the exact solver.
const SOLVER_CHECK_MAX: usize = 14;

fn decompose(n: usize, m: Option<usize>, budget: u64) -> Result<Report, Failure> {
    let d = match m {
        Some(m) => decompose_matching_removed(n, m),
        None => decompose_complete_with_budget(n, budget),
    }
    .lib()?;
    let three = int(3);
    let cost = d.cost(&three);
    let mut r = Report::new("decompose", json!({ "n": n, "m": m }));
    graph_summary(&mut r, &d.host);
    r.line("cost", display(&cost));
    r.line("triangle_parts", d.triangle_parts.len());
    r.line("edge_parts", d.edge_parts.len());
    r.verdict("decomposition_valid", validate_decomposition(&d.host, &d, &three).is_ok());
    let mut result = json!({
        "graph6": to_graph6(&d.host), "cost": display(&cost),
        "triangle_parts": d.triangle_parts.len(), "edge_parts": d.edge_parts.len(),
    });
    if n <= SOLVER_CHECK_MAX {
        let (opt, _) = pi3_alpha_with_budget(&d.host, &three, budget).lib()?;
        r.line("solver_optimum", display(&opt));
        r.verdict("matches_solver", opt == cost);
        result["solver_optimum"] = Value::from(display(&opt));
    }
    if m.is_none() {
        r.line("ell", ell(n as u64));
        result["ell"] = Value::from(ell(n as u64));
    }
    r.text.push_str(&d.to_text());
    r.result = result;
    r.witnesses = parts_json(&d);
    r.csv = kv_csv(&[("graph6", to_graph6(&d.host)), ("cost", display(&cost))]);
    Ok(r)
}

fn check_parts(input: &GraphInput, path: &std::path::Path, a: &Rational) -> Result<Report, Failure> {
    let (g, inp) = read_graph(input)?;
    let parts = parse_parts(&fs::read_to_string(path).usage()?).usage()?;
    let d = Decomposition::from_parts(g.clone(), &parts);
    let mut r = Report::new("decompose", json!({ "graph": inp, "parts": path.display().to_string() }));
    graph_summary(&mut r, &g);
    r.line("alpha", display(a));
    match validate_decomposition(&g, &d, a) {
        Ok(cost) => {
            r.line("cost", display(&cost));
            r.result = json!({ "valid": true, "cost": display(&cost) });
            r.csv = kv_csv(&[("valid", "true".into()), ("cost", display(&cost))]);
            r.verdict("decomposition_valid", true);
        }
        Err(e) => {
            r.line("error", &e);
            r.result = json!({ "valid": false, "error": e.to_string() });
            r.csv = kv_csv(&[("valid", "false".into()), ("error", format!("\"{e}\""))]);
            r.verdict("decomposition_valid", false);
        }
    }
    Ok(r)
}

fn cover(n: usize) -> Result<Report, Failure> {
    let c = covering_complete(n).lib()?;
    let three = int(3);
    let mut r = Report::new("cover", json!({ "n": n }));
    graph_summary(&mut r, &c.host);
    let check = validate_cover(&c.host, &c, &three);
    let target = int((n * n / 2) as i64);
    let cost = c.cost(&three);
    r.line("cost", display(&cost));
    r.line("floor_n2_over_2", display(&target));
    let doubled: Vec<String> = check.as_ref().map(|k| k.multiply_covered.iter().map(|(u, v)| format!("{u} {v}")).collect()).unwrap_or_default();
    r.line("multiply_covered", doubled.join(", "));
    r.verdict("cover_valid", check.is_ok());
    r.verdict("cost_is_floor_n2_over_2", cost == target);
    r.text.push_str(&c.to_text());
    r.result = json!({ "graph6": to_graph6(&c.host), "cost": display(&cost), "multiply_covered": doubled });
    r.witnesses = Value::from(c.to_text().lines().map(str::to_owned).collect::<Vec<_>>());
    r.csv = kv_csv(&[("cost", display(&cost)), ("floor_n2_over_2", display(&target))]);
    Ok(r)
}

fn brute(n: usize, a: &Rational) -> Result<Report, Failure> {
    let rep = brute_force_extremal(n, a).lib()?;
    let mut r = Report::new("brute", json!({ "n": n, "alpha": display(a) }));
    r.line("n", n);
    r.line("alpha", display(a));
    r.line("graphs_examined", rep.graphs_examined);
    r.line("max_cost", display(&rep.max_cost));
    r.line("maximizers", rep.maximizers.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" "));
    let family: Vec<String> = rep.prediction.family.iter().map(|f| f.to_string()).collect();
    r.line(
        "prediction",
        format!("{} with cost {} (asymptotic only; {})", family.join(", "), display(&rep.predicted_cost), rep.prediction.validity),
    );
    if *a == int(3) {
        r.line("ell", format!("{} (asymptotic only)", ell(n as u64)));
    }
    r.line("agrees_with_prediction", rep.agrees_with_prediction);
    r.result = serde_json::to_value(&rep).expect("serializable");
    r.witnesses = Value::from(rep.maximizers.iter().map(|c| c.to_string()).collect::<Vec<_>>());
    r.csv = kv_csv(&[
        ("max_cost", display(&rep.max_cost)),
        ("predicted_cost", display(&rep.predicted_cost)),
        ("agrees_with_prediction", rep.agrees_with_prediction.to_string()),
    ]);
    Ok(r)
}

fn verify_cert() -> Report {
    let rep = verify_certificate();
    let mut r = Report::new("verify-cert", Value::Null);
    r.line("graphs", rep.row_count);
    r.line("max_c", display(&rep.max));
    r.line("maximizers", rep.maximizers.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" "));
    r.line("violations", rep.violations.len());
    r.line("rank", rep.psd.rank);
    r.line("pivot_signs", format!("{:?}", rep.psd.pivot_signs));
    let kernel: Vec<String> = rep.psd.kernel_basis.iter().map(|v| format!("{v:?}")).collect();
    r.line("kernel", kernel.join(" "));
    r.line("lambda2", format!("{:.10}", rep.lambda2.value));
    r.verdict("coefficient_bound", rep.verdict);
    r.verdict("q_in_entry_range", rep.q_in_entry_range);
    r.verdict("psd", rep.psd.is_psd);
    r.result = serde_json::to_value(&rep).expect("serializable");
    r.witnesses = Value::from(rep.violations.iter().map(|c| c.to_string()).collect::<Vec<_>>());
    r.csv = rep.to_csv();
    r
}

fn scan(n: usize, sample: Option<usize>, seed: u64) -> Result<Report, Failure> {
    let s: FrontierScan = match sample {
        Some(count) => scan_sampled(n, count, seed),
        None => scan_exhaustive(n),
    }
    .lib()?;
    let mut r = Report::new("scan", json!({ "n": n, "sample": sample, "seed": s.seed }));
    r.line("n", n);
    r.line("mode", s.mode.label());
    r.line("rows", s.rows.len());
    r.line("min_gap", display(&s.min_gap));
    r.line("witness", &s.witness);
    r.verdict("density_bounds", s.bounds_hold);
    r.result = json!({
        "mode": s.mode.label(), "rows": s.rows.len(), "min_gap": display(&s.min_gap),
        "witness": s.witness, "points": s.rows,
    });
    r.witnesses = Value::from(vec![s.witness.clone()]);
    r.csv = s.to_csv();
    Ok(r)
}
