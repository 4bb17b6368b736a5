//! Command-line interface.
//!
//! Subcommands:
//! - `invariants`: a-vector, signed total and signed value of one graph
//!   from the subset recursion;
//! - `betti`: Betti numbers of the real (or complex) toric space over the
//!   graph associahedron, by a selectable route;
//! - `complex`: the nested set complex or one of its parity subcomplexes;
//! - `hvector`: f- and h-vector of the nested set complex;
//! - `table`: closed-form invariant tables for the graph families;
//! - `verify`: run every route and compare, on one host or on all
//!   connected hosts up to a given order.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 malformed input or
//! unsupported/ill-posed request, 3 resource cap exceeded.

use std::io::Read;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::json;

use crate::buildingset::{
    even_poset, f_vector, graphical_building_set, h_vector, k_even, k_odd, kpp_t,
    nested_set_complex, order_complex, SimplicialComplex,
};
use crate::error::{Error, Result};
use crate::graph::{
    encode_graph6, enumerate::connected_graphs_up_to_iso, generate, parse_edge_list, parse_graph6,
    GraphFamily, SimpleGraph, VertexSubset,
};
use crate::invariants::{compute_sa_table_with_cap, DEFAULT_DP_CAP};
use crate::sequences::{closed_form_a_vector, closed_form_b};
use crate::toric::{
    betti_complex_toric_with_cap, betti_via_component_product_with_cap,
    betti_via_recursion_with_cap, betti_via_s_sum_with_cap, betti_via_t_sum_with_cap,
    verify_routes, BettiReport, TaSource, DEFAULT_HOMOLOGY_CAP,
};

#[derive(Parser)]
#[command(
    name = "anumber",
    version,
    about = "Graph invariants from a signed subset recursion and Betti numbers \
             of toric spaces over graph associahedra, with independent \
             homology-based cross-checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
#[group(multiple = false)]
struct InputArgs {
    /// Generate a family member, e.g. "path:6", "cycle:5", "complete:4", "star:7"
    #[arg(long, value_name = "FAMILY:N")]
    gen: Option<String>,

    /// graph6 encoding of the host graph
    #[arg(long, value_name = "G6")]
    graph6: Option<String>,

    /// Edge-list file: first line the vertex count, then one "u v" pair
    /// per line; '#' starts a comment
    #[arg(long, value_name = "FILE")]
    edge_list: Option<PathBuf>,

    /// Read a graph6 string from standard input
    #[arg(long)]
    stdin: bool,
}

impl InputArgs {
    fn load(&self) -> Result<Option<SimpleGraph>> {
        if let Some(spec) = &self.gen {
            let (family, n) = spec.split_once(':').ok_or_else(|| {
                Error::malformed(format!("family spec {spec:?} is not of the form FAMILY:N"))
            })?;
            let family = GraphFamily::from_str(family)?;
            let n: usize = n
                .parse()
                .map_err(|_| Error::malformed(format!("order {n:?} is not a number")))?;
            return Ok(Some(generate(family, n)?));
        }
        if let Some(text) = &self.graph6 {
            return Ok(Some(parse_graph6(text)?));
        }
        if let Some(path) = &self.edge_list {
            let text = std::fs::read_to_string(path).map_err(|e| {
                Error::malformed(format!("cannot read {}: {e}", path.display()))
            })?;
            return Ok(Some(parse_edge_list(&text)?));
        }
        if self.stdin {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Error::malformed(format!("cannot read standard input: {e}")))?;
            return Ok(Some(parse_graph6(&text)?));
        }
        Ok(None)
    }

    fn require(&self) -> Result<SimpleGraph> {
        self.load()?.ok_or_else(|| {
            Error::malformed(
                "no host graph given: use --gen, --graph6, --edge-list or --stdin".to_string(),
            )
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Human,
    Json,
}

#[derive(Args)]
struct OutputArgs {
    /// Output format
    #[arg(long, value_enum, default_value = "human")]
    output: OutputFormat,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    /// Signed subset recursion (no topology)
    Recursion,
    /// Sum of reduced homology over odd-intersection subcomplexes
    OddIntersection,
    /// Sum of reduced homology over GF(2) row combinations of the
    /// characteristic matrix
    RowCombination,
    /// Sum of per-component homology ranks over induced subgraphs
    ComponentProduct,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SpaceArg {
    /// Real toric space (Betti numbers in all degrees)
    Real,
    /// Complex toric space (even-degree Betti numbers, the h-vector)
    Complex,
}

/// Which complex the `complex` subcommand emits.
#[derive(Clone)]
enum WhichComplex {
    Full,
    Even,
    Odd,
    WithinT(VertexSubset),
    Order,
}

impl FromStr for WhichComplex {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<WhichComplex, String> {
        match s {
            "full" => Ok(WhichComplex::Full),
            "even" => Ok(WhichComplex::Even),
            "odd" => Ok(WhichComplex::Odd),
            "order" => Ok(WhichComplex::Order),
            _ => {
                let list = s.strip_prefix("t:").ok_or_else(|| {
                    format!("expected full, even, odd, order or t:LIST, got {s:?}")
                })?;
                let mut t = VertexSubset::EMPTY;
                if !list.is_empty() {
                    for part in list.split(',') {
                        let v: usize = part
                            .trim()
                            .parse()
                            .map_err(|_| format!("vertex {part:?} is not a number"))?;
                        if v >= 64 {
                            return Err(format!("vertex {v} out of range"));
                        }
                        t = t.with(v);
                    }
                }
                Ok(WhichComplex::WithinT(t))
            }
        }
    }
}

fn parse_family(s: &str) -> std::result::Result<GraphFamily, String> {
    GraphFamily::from_str(s).map_err(|e| e.to_string())
}

#[derive(Subcommand)]
enum Command {
    /// Invariants of one graph from the signed subset recursion
    Invariants {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        out: OutputArgs,
        /// Cap on host order for the subset recursion (2^n table entries)
        #[arg(long, env = "ANUMBER_DP_CAP", default_value_t = DEFAULT_DP_CAP)]
        dp_cap: usize,
    },
    /// Betti numbers of the toric space over the graph associahedron
    Betti {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        out: OutputArgs,
        /// Computation route (ignored for --space complex)
        #[arg(long, value_enum, default_value = "recursion")]
        method: MethodArg,
        /// Which toric space
        #[arg(long, value_enum, default_value = "real")]
        space: SpaceArg,
        #[arg(long, env = "ANUMBER_DP_CAP", default_value_t = DEFAULT_DP_CAP)]
        dp_cap: usize,
        /// Cap on host order for homology-based routes
        #[arg(long, env = "ANUMBER_HOMOLOGY_CAP", default_value_t = DEFAULT_HOMOLOGY_CAP)]
        homology_cap: usize,
    },
    /// Emit the nested set complex or a subcomplex of it
    Complex {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        out: OutputArgs,
        /// full | even | odd | order | t:V1,V2,... (odd-cardinality
        /// elements inside the given vertex set)
        #[arg(long, default_value = "full")]
        which: WhichComplex,
        #[arg(long, env = "ANUMBER_HOMOLOGY_CAP", default_value_t = DEFAULT_HOMOLOGY_CAP)]
        homology_cap: usize,
    },
    /// f- and h-vector of the nested set complex
    Hvector {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        out: OutputArgs,
        #[arg(long, env = "ANUMBER_HOMOLOGY_CAP", default_value_t = DEFAULT_HOMOLOGY_CAP)]
        homology_cap: usize,
    },
    /// Closed-form invariant tables for a graph family
    Table {
        #[command(flatten)]
        out: OutputArgs,
        /// path | cycle | complete | star
        #[arg(long, value_parser = parse_family)]
        family: GraphFamily,
        /// Largest order to tabulate
        #[arg(long, default_value_t = 12)]
        max_n: usize,
    },
    /// Run every route and compare the results
    Verify {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        out: OutputArgs,
        /// Instead of one host, sweep all connected graphs up to this
        /// order (isomorphism classes)
        #[arg(long, value_name = "N")]
        all_connected_up_to: Option<usize>,
        #[arg(long, env = "ANUMBER_DP_CAP", default_value_t = DEFAULT_DP_CAP)]
        dp_cap: usize,
        #[arg(long, env = "ANUMBER_HOMOLOGY_CAP", default_value_t = DEFAULT_HOMOLOGY_CAP)]
        homology_cap: usize,
    },
}

/// Entry point used by the binary; returns the process exit code.
pub fn main() -> i32 {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::MalformedInput(_) | Error::DomainError(_) | Error::UnsupportedInstance(_) => 2,
                Error::ResourceLimit(_) => 3,
            }
        }
    }
}

fn run(command: Command) -> Result<i32> {
    match command {
        Command::Invariants { input, out, dp_cap } => {
            let g = input.require()?;
            run_invariants(&g, out.output, dp_cap)
        }
        Command::Betti { input, out, method, space, dp_cap, homology_cap } => {
            let g = input.require()?;
            let report = match space {
                SpaceArg::Complex => betti_complex_toric_with_cap(&g, homology_cap)?,
                SpaceArg::Real => match method {
                    MethodArg::Recursion => betti_via_recursion_with_cap(&g, dp_cap)?,
                    MethodArg::OddIntersection => betti_via_t_sum_with_cap(&g, homology_cap)?,
                    MethodArg::RowCombination => betti_via_s_sum_with_cap(&g, homology_cap)?,
                    MethodArg::ComponentProduct => {
                        betti_via_component_product_with_cap(&g, TaSource::Homology, homology_cap)?
                    }
                },
            };
            print_betti(&report, space, out.output);
            Ok(0)
        }
        Command::Complex { input, out, which, homology_cap } => {
            let g = input.require()?;
            run_complex(&g, &which, out.output, homology_cap)
        }
        Command::Hvector { input, out, homology_cap } => {
            let g = input.require()?;
            run_hvector(&g, out.output, homology_cap)
        }
        Command::Table { out, family, max_n } => run_table(family, max_n, out.output),
        Command::Verify { input, out, all_connected_up_to, dp_cap, homology_cap } => {
            match (input.load()?, all_connected_up_to) {
                (Some(_), Some(_)) => Err(Error::malformed(
                    "give either one host or --all-connected-up-to, not both".to_string(),
                )),
                (None, None) => Err(Error::malformed(
                    "verify needs a host (--gen/--graph6/--edge-list/--stdin) \
                     or --all-connected-up-to N"
                        .to_string(),
                )),
                (Some(g), None) => run_verify_single(&g, out.output, dp_cap, homology_cap),
                (None, Some(n)) => run_verify_sweep(n, out.output, dp_cap, homology_cap),
            }
        }
    }
}

fn format_bigints(v: &[BigInt]) -> String {
    let parts: Vec<String> = v.iter().map(BigInt::to_string).collect();
    format!("[{}]", parts.join(", "))
}

fn strings(v: &[BigInt]) -> Vec<String> {
    v.iter().map(BigInt::to_string).collect()
}

fn run_invariants(g: &SimpleGraph, output: OutputFormat, dp_cap: usize) -> Result<i32> {
    let table = compute_sa_table_with_cap(g, dp_cap)?;
    match output {
        OutputFormat::Json => {
            println!("{}", serde_json::to_string_pretty(&table.to_json()).expect("json"));
        }
        OutputFormat::Human => {
            println!(
                "graph: {} ({} vertices, {} edges)",
                encode_graph6(g),
                g.vertex_count(),
                g.edge_count()
            );
            println!("a-vector: {}", format_bigints(table.a_vector()));
            println!("b: {}", table.b_total());
            println!("sa: {}", table.sa_full());
        }
    }
    Ok(0)
}

fn print_betti(report: &BettiReport, space: SpaceArg, output: OutputFormat) {
    match output {
        OutputFormat::Json => {
            println!("{}", serde_json::to_string_pretty(&report.to_json()).expect("json"));
        }
        OutputFormat::Human => {
            println!("graph: {} ({} vertices)", report.graph6, report.vertex_count);
            println!("method: {}", report.method);
            match space {
                SpaceArg::Real => {
                    println!("betti: {}", format_bigints(&report.betti));
                    println!("euler characteristic: {}", report.euler_characteristic);
                }
                SpaceArg::Complex => {
                    println!("betti (degree 2i): {}", format_bigints(&report.betti));
                    println!("euler characteristic: {}", report.euler_characteristic);
                }
            }
        }
    }
}

fn build_which(g: &SimpleGraph, which: &WhichComplex) -> Result<(String, SimplicialComplex)> {
    Ok(match which {
        WhichComplex::Full => (
            "nested set complex".to_string(),
            nested_set_complex(&graphical_building_set(g)?)?,
        ),
        WhichComplex::Even => ("even-cardinality subcomplex".to_string(), k_even(g)?),
        WhichComplex::Odd => ("odd-cardinality subcomplex".to_string(), k_odd(g)?),
        WhichComplex::WithinT(t) => (
            format!("odd-cardinality subcomplex within {t}"),
            kpp_t(g, *t)?,
        ),
        WhichComplex::Order => (
            "order complex of the even-component poset".to_string(),
            order_complex(&even_poset(g)?),
        ),
    })
}

fn run_complex(
    g: &SimpleGraph,
    which: &WhichComplex,
    output: OutputFormat,
    homology_cap: usize,
) -> Result<i32> {
    if g.vertex_count() > homology_cap {
        return Err(Error::resource(format!(
            "complex construction caps hosts at {homology_cap} vertices, got {}",
            g.vertex_count()
        )));
    }
    let (name, k) = build_which(g, which)?;
    match output {
        OutputFormat::Json => {
            let mut value = k.to_json();
            value["complex"] = json!(name);
            value["graph6"] = json!(encode_graph6(g));
            value["dimension"] = json!(k.dim());
            value["pure"] = json!(k.is_pure());
            value["f"] = json!(f_vector(&k)?);
            println!("{}", serde_json::to_string_pretty(&value).expect("json"));
        }
        OutputFormat::Human => {
            println!("complex: {name}");
            println!("host: {} ({} vertices)", encode_graph6(g), g.vertex_count());
            let labels: Vec<String> = k.labels().iter().map(|l| l.to_string()).collect();
            println!("vertices ({}): {}", k.vertex_count(), labels.join(" "));
            println!(
                "dimension: {}{}",
                k.dim(),
                if k.is_pure() { " (pure)" } else { "" }
            );
            let f = f_vector(&k)?;
            let f_str: Vec<String> = f.iter().map(u64::to_string).collect();
            println!("f-vector: [{}]", f_str.join(", "));
            println!("facets ({}):", k.facet_count());
            for facet in k.facets() {
                let parts: Vec<String> =
                    facet.iter().map(|&v| k.label(v).to_string()).collect();
                println!("  {}", parts.join(" "));
            }
        }
    }
    Ok(0)
}

fn run_hvector(g: &SimpleGraph, output: OutputFormat, homology_cap: usize) -> Result<i32> {
    if g.vertex_count() > homology_cap {
        return Err(Error::resource(format!(
            "h-vector route caps hosts at {homology_cap} vertices, got {}",
            g.vertex_count()
        )));
    }
    let connected = g.vertex_count() > 0 && g.is_connected();
    let (f, h): (Option<Vec<u64>>, Vec<BigInt>) = if connected {
        let k = nested_set_complex(&graphical_building_set(g)?)?;
        (
            Some(f_vector(&k)?),
            h_vector(&k)?.into_iter().map(BigInt::from).collect(),
        )
    } else {
        // Disconnected host: the polytope is a product, so only the
        // h-vector (which convolves over factors) is reported.
        let report = betti_complex_toric_with_cap(g, homology_cap)?;
        (None, report.betti)
    };
    match output {
        OutputFormat::Json => {
            let value = json!({
                "graph6": encode_graph6(g),
                "vertex_count": g.vertex_count(),
                "f": f,
                "h": strings(&h),
            });
            println!("{}", serde_json::to_string_pretty(&value).expect("json"));
        }
        OutputFormat::Human => {
            println!("host: {} ({} vertices)", encode_graph6(g), g.vertex_count());
            match f {
                Some(f) => {
                    let f_str: Vec<String> = f.iter().map(u64::to_string).collect();
                    println!("f-vector: [{}]", f_str.join(", "));
                }
                None => println!(
                    "f-vector: (disconnected host; product polytope, f-vector omitted)"
                ),
            }
            println!("h-vector: {}", format_bigints(&h));
        }
    }
    Ok(0)
}

fn run_table(family: GraphFamily, max_n: usize, output: OutputFormat) -> Result<i32> {
    if max_n > 200 {
        return Err(Error::resource(format!(
            "table rows cap at order 200, got {max_n}"
        )));
    }
    let mut rows = Vec::new();
    for n in 0..=max_n {
        let a = closed_form_a_vector(family, n)?;
        let b = closed_form_b(family, n);
        rows.push((n, a, b));
    }
    match output {
        OutputFormat::Json => {
            let value = json!({
                "family": family.name(),
                "rows": rows.iter().map(|(n, a, b)| json!({
                    "n": n,
                    "a": strings(a),
                    "b": b.to_string(),
                })).collect::<Vec<_>>(),
            });
            println!("{}", serde_json::to_string_pretty(&value).expect("json"));
        }
        OutputFormat::Human => {
            println!("family: {}", family.name());
            for (n, a, b) in &rows {
                println!("{} n={}: a = {}; b = {}", family.name(), n, format_bigints(a), b);
            }
        }
    }
    Ok(0)
}

fn run_verify_single(
    g: &SimpleGraph,
    output: OutputFormat,
    dp_cap: usize,
    homology_cap: usize,
) -> Result<i32> {
    let outcome = verify_routes(g, dp_cap, homology_cap)?;
    match output {
        OutputFormat::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(&outcome.to_json()).expect("json")
            );
        }
        OutputFormat::Human => {
            println!("host: {} ({} vertices)", encode_graph6(g), g.vertex_count());
            for report in &outcome.reports {
                println!("  {}: {}", report.method, format_bigints(&report.betti));
            }
            println!(
                "  {}: {}",
                outcome.complex_toric.method,
                format_bigints(&outcome.complex_toric.betti)
            );
            for (name, ok) in &outcome.checks {
                println!("  check {}: {}", name, if *ok { "ok" } else { "MISMATCH" });
            }
            println!("consistent: {}", outcome.consistent);
        }
    }
    Ok(if outcome.consistent { 0 } else { 1 })
}

fn run_verify_sweep(
    max_n: usize,
    output: OutputFormat,
    dp_cap: usize,
    homology_cap: usize,
) -> Result<i32> {
    let mut hosts = 0usize;
    let mut failures: Vec<(String, Vec<String>)> = Vec::new();
    for n in 1..=max_n {
        for g in connected_graphs_up_to_iso(n)? {
            hosts += 1;
            let outcome = verify_routes(&g, dp_cap, homology_cap)?;
            if !outcome.consistent {
                let failed: Vec<String> = outcome
                    .checks
                    .iter()
                    .filter(|(_, ok)| !ok)
                    .map(|(name, _)| name.clone())
                    .collect();
                failures.push((encode_graph6(&g), failed));
            }
        }
    }
    let consistent = failures.is_empty();
    match output {
        OutputFormat::Json => {
            let value = json!({
                "max_vertices": max_n,
                "hosts": hosts,
                "consistent": consistent,
                "failures": failures.iter().map(|(g6, checks)| json!({
                    "graph6": g6,
                    "failed_checks": checks,
                })).collect::<Vec<_>>(),
            });
            println!("{}", serde_json::to_string_pretty(&value).expect("json"));
        }
        OutputFormat::Human => {
            if consistent {
                println!(
                    "checked {hosts} connected hosts up to {max_n} vertices: all routes consistent"
                );
            } else {
                for (g6, checks) in &failures {
                    println!("MISMATCH on {g6}: {}", checks.join(", "));
                }
                println!(
                    "checked {hosts} connected hosts up to {max_n} vertices: {} mismatches",
                    failures.len()
                );
            }
        }
    }
    Ok(if consistent { 0 } else { 1 })
}
