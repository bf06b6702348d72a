//! Command-line surface: compute invariants, build families, enumerate
//! trees, apply transformations and run the verification sweeps.
//!
//! Exit codes: 0 success, 1 operational error (bad input, bad flags, I/O),
//! 2 verified-claim violation (counterexamples in the report).

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use treematch::enumerate::{filter_trees, free_trees, TreePredicate};
use treematch::transforms::{
    apply_transform, check_difference_identity, check_dominance, TransformSpec,
};
use treematch::verify::{
    verify_remark_2, verify_theorem_1, verify_theorem_2, verify_theorem_4,
    verify_transform_theorems, VerificationReport,
};
use treematch::{
    build_family, canonical_code, codec, energy, hosoya_index, lovasz_transform, matching_counts,
    matching_polynomial, Family, FamilySpec, Graph, MatchingVector,
};

#[derive(Parser)]
#[command(
    name = "treematch",
    about = "Matching polynomials, Hosoya indices and matching energies of graphs and tree complements",
    version
)]
struct Cli {
    /// Worker threads for sweeps (default: TREEMATCH_JOBS or all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
    Human,
}

#[derive(Subcommand)]
enum Command {
    /// Matching counts, polynomial, Hosoya index and matching energy of a graph.
    Compute(ComputeArgs),
    /// Stream all non-isomorphic trees of an order as graph6 lines.
    Enumerate(EnumerateArgs),
    /// Build a named tree family member.
    Family(FamilyArgs),
    /// Apply a tree transformation and check its dominance and identity.
    Transform(TransformArgs),
    /// Re-verify an extremal statement exhaustively.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct InputArgs {
    /// Inline graph6 string.
    #[arg(long)]
    graph6: Option<String>,
    /// Path to a file holding graph6 or edge-list text.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Read graph6 or edge-list text from standard input.
    #[arg(long)]
    stdin: bool,
    /// Named family instead of an explicit graph.
    #[arg(long, value_enum)]
    family: Option<FamilyName>,
    /// Vertex count for --family.
    #[arg(long)]
    n: Option<usize>,
    /// Family parameter p (t_n_p only).
    #[arg(long)]
    p: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyName {
    Path,
    Star,
    #[value(name = "t_n_2")]
    Tn2,
    #[value(name = "t_n_2_1")]
    Tn21,
    #[value(name = "t_n_p")]
    Tnp,
}

impl From<FamilyName> for Family {
    fn from(f: FamilyName) -> Family {
        match f {
            FamilyName::Path => Family::Path,
            FamilyName::Star => Family::Star,
            FamilyName::Tn2 => Family::Tn2,
            FamilyName::Tn21 => Family::Tn21,
            FamilyName::Tnp => Family::TnP,
        }
    }
}

impl InputArgs {
    fn load(&self) -> Result<Graph, String> {
        let sources = usize::from(self.graph6.is_some())
            + usize::from(self.input.is_some())
            + usize::from(self.stdin)
            + usize::from(self.family.is_some());
        if sources != 1 {
            return Err(
                "exactly one input source is required: --graph6, --input, --stdin or --family"
                    .into(),
            );
        }
        if let Some(text) = &self.graph6 {
            return codec::from_graph6(text).map_err(|e| e.to_string());
        }
        if let Some(path) = &self.input {
            let text = std::fs::read_to_string(path)
                .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
            return parse_graph_text(&text);
        }
        if self.stdin {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| format!("cannot read stdin: {e}"))?;
            return parse_graph_text(&text);
        }
        let family: Family = self.family.unwrap().into();
        let n = self.n.ok_or("--family requires --n")?;
        build_family(&FamilySpec {
            family,
            n,
            p: self.p,
        })
        .map_err(|e| e.to_string())
    }
}

/// Edge lists start with a bare vertex count; graph6 size bytes are >= '?'.
fn parse_graph_text(text: &str) -> Result<Graph, String> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .unwrap_or("");
    if first.chars().next().is_some_and(|c| c.is_ascii_digit()) {
        codec::from_edge_list(text).map_err(|e| e.to_string())
    } else {
        codec::from_graph6(first).map_err(|e| e.to_string())
    }
}

#[derive(Args)]
struct ComputeArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Report the complement instead (analytic transform on tree input).
    #[arg(long)]
    complement: bool,
    /// Root bisection width for the energy computation (>= 1e-15).
    #[arg(long, default_value_t = energy::DEFAULT_ROOT_WIDTH)]
    precision: f64,
}

#[derive(Args)]
struct EnumerateArgs {
    /// Order to enumerate.
    #[arg(long)]
    n: usize,
    /// Keep only trees with matching number at least p.
    #[arg(long, conflicts_with_all = ["nu_equals", "perfect_matching"])]
    nu_at_least: Option<usize>,
    /// Keep only trees with matching number exactly p.
    #[arg(long, conflicts_with = "perfect_matching")]
    nu_equals: Option<usize>,
    /// Keep only trees with a perfect matching.
    #[arg(long)]
    perfect_matching: bool,
    /// Append matching number and pendant count as tab-separated columns.
    #[arg(long)]
    annotate: bool,
}

#[derive(Args)]
struct FamilyArgs {
    /// Family name.
    #[arg(value_enum)]
    family: FamilyName,
    /// Vertex count.
    #[arg(long)]
    n: usize,
    /// Family parameter p (t_n_p only).
    #[arg(long)]
    p: Option<usize>,
    /// Append matching number and pendant count.
    #[arg(long)]
    annotate: bool,
}

#[derive(Args)]
struct TransformArgs {
    /// Path to a JSON transformation spec.
    #[arg(long, conflicts_with = "spec_json")]
    spec: Option<PathBuf>,
    /// Inline JSON transformation spec.
    #[arg(long)]
    spec_json: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Statement to verify: thm1, thm2, thm4, remark2 or transforms.
    theorem: String,
    /// Single order to check.
    #[arg(long)]
    n: Option<usize>,
    /// Sweep orders from the statement's smallest up to this bound.
    #[arg(long)]
    n_max: Option<usize>,
    /// Matching-number parameter (thm2; omit to sweep all valid p).
    #[arg(long)]
    p: Option<usize>,
    /// Randomized instances per transformation kind (transforms).
    #[arg(long, default_value_t = 500)]
    samples: usize,
    /// RNG seed for randomized sweeps; echoed in the report.
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Write the JSON report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap would exit 2; keep 2 reserved for claim violations.
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    let jobs = cli.jobs.or_else(|| {
        std::env::var("TREEMATCH_JOBS")
            .ok()
            .and_then(|v| v.parse().ok())
    });
    if let Some(jobs) = jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
        {
            eprintln!("error: cannot size the worker pool: {e}");
            return ExitCode::from(1);
        }
    }
    let outcome = match &cli.command {
        Command::Compute(args) => cmd_compute(args, cli.format),
        Command::Enumerate(args) => cmd_enumerate(args, cli.format),
        Command::Family(args) => cmd_family(args, cli.format),
        Command::Transform(args) => cmd_transform(args, cli.format),
        Command::Verify(args) => cmd_verify(args, cli.format),
    };
    match outcome {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}

#[derive(Serialize)]
struct ComputeReport {
    n: usize,
    edges: usize,
    complement_of_input: bool,
    matching_counts: Vec<String>,
    matching_polynomial: Vec<String>,
    matching_polynomial_pretty: String,
    hosoya_index: String,
    matching_energy: f64,
    energy_error_bound: f64,
}

fn compute_report(
    vector: &MatchingVector,
    complemented: bool,
    precision: f64,
) -> Result<ComputeReport, String> {
    let poly = matching_polynomial(vector);
    let me = energy::matching_energy_to_width(vector, precision).map_err(|e| e.to_string())?;
    let edge_count = usize::try_from(&vector.get(1)).map_err(|e| e.to_string())?;
    Ok(ComputeReport {
        n: vector.n(),
        edges: edge_count,
        complement_of_input: complemented,
        matching_counts: vector.counts().iter().map(|c| c.to_string()).collect(),
        matching_polynomial: poly.coefficients().iter().map(|c| c.to_string()).collect(),
        matching_polynomial_pretty: poly.to_string(),
        hosoya_index: hosoya_index(vector).to_string(),
        matching_energy: me.value,
        energy_error_bound: me.error_bound,
    })
}

fn cmd_compute(args: &ComputeArgs, format: Format) -> Result<ExitCode, String> {
    if args.precision < 1e-15 {
        return Err(format!(
            "precision {:e} refused; the supported floor is 1e-15 (default 1e-12)",
            args.precision
        ));
    }
    let graph = args.input.load()?;
    let vector = if args.complement {
        if graph.is_tree() {
            lovasz_transform(&matching_counts(&graph)).map_err(|e| e.to_string())?
        } else {
            matching_counts(&graph.complement())
        }
    } else {
        matching_counts(&graph)
    };
    let report = compute_report(&vector, args.complement, args.precision)?;
    match format {
        Format::Json => println!("{}", to_json(&report)?),
        Format::Tsv => {
            println!("n\tedges\tcomplement\tcounts\thosoya\tenergy\terror_bound");
            println!(
                "{}\t{}\t{}\t{}\t{}\t{:.10}\t{:.3e}",
                report.n,
                report.edges,
                report.complement_of_input,
                report.matching_counts.join(" "),
                report.hosoya_index,
                report.matching_energy,
                report.energy_error_bound
            );
        }
        Format::Human => {
            println!("vertices            {}", report.n);
            println!("edges               {}", report.edges);
            if report.complement_of_input {
                println!("complement of input yes");
            }
            println!("matching counts     {}", report.matching_counts.join(" "));
            println!("matching polynomial {}", report.matching_polynomial_pretty);
            println!("hosoya index        {}", report.hosoya_index);
            println!(
                "matching energy     {:.10} (error bound {:.3e})",
                report.matching_energy, report.energy_error_bound
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct TreeLine {
    graph6: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    nu: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pendant_vertices: Option<usize>,
}

fn tree_line(tree: &Graph, annotate: bool) -> Result<TreeLine, String> {
    Ok(TreeLine {
        graph6: codec::to_graph6(tree).map_err(|e| e.to_string())?,
        nu: annotate.then(|| tree.edge_independence_number()),
        pendant_vertices: annotate.then(|| tree.pendant_count()),
    })
}

fn print_tree_lines(lines: &[TreeLine], format: Format) -> Result<(), String> {
    match format {
        Format::Json => println!("{}", to_json(&lines)?),
        Format::Tsv | Format::Human => {
            for line in lines {
                match (line.nu, line.pendant_vertices) {
                    (Some(nu), Some(p)) => println!("{}\t{}\t{}", line.graph6, nu, p),
                    _ => println!("{}", line.graph6),
                }
            }
        }
    }
    Ok(())
}

fn cmd_enumerate(args: &EnumerateArgs, format: Format) -> Result<ExitCode, String> {
    let stream = free_trees(args.n).map_err(|e| e.to_string())?;
    let predicate = if let Some(p) = args.nu_at_least {
        Some(TreePredicate::NuAtLeast(p))
    } else if let Some(p) = args.nu_equals {
        Some(TreePredicate::NuEquals(p))
    } else if args.perfect_matching {
        Some(TreePredicate::PerfectMatching)
    } else {
        None
    };
    let trees: Vec<Graph> = match predicate {
        Some(p) => filter_trees(stream, p).collect(),
        None => stream.collect(),
    };
    let lines: Vec<TreeLine> = trees
        .iter()
        .map(|t| tree_line(t, args.annotate))
        .collect::<Result<_, _>>()?;
    print_tree_lines(&lines, format)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_family(args: &FamilyArgs, format: Format) -> Result<ExitCode, String> {
    let tree = build_family(&FamilySpec {
        family: args.family.into(),
        n: args.n,
        p: args.p,
    })
    .map_err(|e| e.to_string())?;
    let lines = vec![tree_line(&tree, args.annotate)?];
    print_tree_lines(&lines, format)?;
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct TransformReport {
    spec: TransformSpec,
    before_graph6: String,
    after_graph6: String,
    before_code: String,
    after_code: String,
    dominance: treematch::transforms::DominanceReport,
    identity: treematch::transforms::IdentityReport,
}

fn cmd_transform(args: &TransformArgs, format: Format) -> Result<ExitCode, String> {
    let text = if let Some(path) = &args.spec {
        std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?
    } else if let Some(inline) = &args.spec_json {
        inline.clone()
    } else {
        return Err("one of --spec or --spec-json is required".into());
    };
    let spec: TransformSpec =
        serde_json::from_str(&text).map_err(|e| format!("bad transform spec: {e}"))?;
    let result = apply_transform(&spec).map_err(|e| e.to_string())?;
    let report = TransformReport {
        before_graph6: codec::to_graph6(&result.before).map_err(|e| e.to_string())?,
        after_graph6: codec::to_graph6(&result.after).map_err(|e| e.to_string())?,
        before_code: canonical_code(&result.before)
            .map_err(|e| e.to_string())?
            .to_string(),
        after_code: canonical_code(&result.after)
            .map_err(|e| e.to_string())?
            .to_string(),
        dominance: check_dominance(&result),
        identity: check_difference_identity(&result),
        spec,
    };
    match format {
        Format::Json | Format::Tsv => println!("{}", to_json(&report)?),
        Format::Human => {
            println!(
                "before   {}  ({})",
                report.before_graph6, report.before_code
            );
            println!("after    {}  ({})", report.after_graph6, report.after_code);
            println!(
                "dominance matches theorem: {} ({:?})",
                report.dominance.matches_theorem, report.dominance.relation
            );
            println!("difference identity holds: {}", report.identity.holds);
        }
    }
    Ok(ExitCode::SUCCESS)
}

// Verification reports are always JSON; the report path is the machine
// interface regardless of --format.
fn cmd_verify(args: &VerifyArgs, _format: Format) -> Result<ExitCode, String> {
    let reports: Vec<VerificationReport> = match args.theorem.as_str() {
        "thm1" => sweep(args, 5, verify_theorem_1)?,
        "thm2" => {
            let mut out = Vec::new();
            for n in order_range(args, 5)? {
                match args.p {
                    Some(p) => out.push(verify_theorem_2(n, p).map_err(|e| e.to_string())?),
                    None => {
                        for p in 1..=n / 2 {
                            out.push(verify_theorem_2(n, p).map_err(|e| e.to_string())?);
                        }
                    }
                }
            }
            out
        }
        "thm4" => {
            let mut out = Vec::new();
            for n in order_range(args, 6)? {
                if n % 2 == 0 {
                    out.push(verify_theorem_4(n).map_err(|e| e.to_string())?);
                }
            }
            out
        }
        "remark2" => sweep(args, 5, verify_remark_2)?,
        "transforms" => {
            vec![verify_transform_theorems(args.samples, args.seed).map_err(|e| e.to_string())?]
        }
        other => {
            return Err(format!(
                "unknown theorem {other:?}; expected thm1, thm2, thm4, remark2 or transforms"
            ))
        }
    };
    let json = if reports.len() == 1 {
        to_json(&reports[0])?
    } else {
        to_json(&reports)?
    };
    if let Some(path) = &args.out {
        std::fs::write(path, &json).map_err(|e| format!("cannot write {}: {e}", path.display()))?;
    } else {
        println!("{json}");
    }
    let failures: Vec<&VerificationReport> = reports.iter().filter(|r| !r.pass).collect();
    for report in &reports {
        let label = match (report.n, report.p) {
            (Some(n), Some(p)) => format!("{} n={} p={}", report.theorem, n, p),
            (Some(n), None) => format!("{} n={}", report.theorem, n),
            _ => report.theorem.clone(),
        };
        eprintln!(
            "{label}: {} (population {}, {} comparisons, {} ms){}",
            if report.pass { "pass" } else { "FAIL" },
            report.population,
            report.comparisons.len(),
            report.elapsed_ms,
            if report.degenerate {
                " [degenerate]"
            } else {
                ""
            }
        );
    }
    if failures.is_empty() {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(2))
    }
}

fn order_range(args: &VerifyArgs, min: usize) -> Result<Vec<usize>, String> {
    match (args.n, args.n_max) {
        (Some(n), None) => Ok(vec![n]),
        (None, Some(max)) => {
            if max < min {
                return Err(format!("--n-max must be at least {min}"));
            }
            Ok((min..=max).collect())
        }
        (None, None) => Err("one of --n or --n-max is required".into()),
        (Some(_), Some(_)) => Err("--n and --n-max are mutually exclusive".into()),
    }
}

fn sweep(
    args: &VerifyArgs,
    min: usize,
    f: impl Fn(usize) -> treematch::Result<VerificationReport>,
) -> Result<Vec<VerificationReport>, String> {
    order_range(args, min)?
        .into_iter()
        .map(|n| f(n).map_err(|e| e.to_string()))
        .collect()
}

fn to_json<T: Serialize>(value: &T) -> Result<String, String> {
    serde_json::to_string_pretty(value).map_err(|e| e.to_string())
}
