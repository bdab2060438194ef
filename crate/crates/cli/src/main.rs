use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use num::{BigInt, ToPrimitive};
use serde_json::{json, Value};

use grover_zeta::cycles::{self, HARD_MAX_LEN};
use grover_zeta::generators::{self, Family, RandomRegular};
use grover_zeta::graph::{parse_graph, serialize_graph, Graph};
use grover_zeta::matrix::{positive_support, Matrix, Scalar};
use grover_zeta::operators::{self, OperatorBundle};
use grover_zeta::report::VerificationReport;
use grover_zeta::zeta::{self, ComplexValue, SpectrumReport};
use grover_zeta::{Error, Poly};

/// `println!` that stops quietly once the reader has gone away.
macro_rules! out {
    ($($arg:tt)*) => {
        emit(format_args!($($arg)*))
    };
}

fn emit(args: std::fmt::Arguments) {
    if let Err(e) = writeln!(io::stdout().lock(), "{args}") {
        if e.kind() == io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("error: writing output: {e}");
        std::process::exit(2);
    }
}

#[derive(Parser)]
#[command(
    name = "gzeta",
    version,
    about = "Grover walk supports and graph zeta functions in exact arithmetic"
)]
struct Cli {
    /// Emit JSON on stdout instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a named graph.
    Gen {
        /// cycle, complete, complete-bipartite, petersen, heawood, mcgee,
        /// circulant or random-regular.
        family: String,
        /// Family parameters, e.g. `cycle 5`, `circulant 8 1 4`, `random-regular 20 3`.
        params: Vec<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long, default_value_t = 3)]
        min_girth: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Degrees, girth, regularity and connectivity.
    Info { path: PathBuf },
    /// Export one of the operator matrices.
    Matrix {
        path: PathBuf,
        #[arg(long)]
        which: Which,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check identities on a graph.
    Verify {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Sample points for the general determinant expression; more than
        /// 2m points amount to a proof of polynomial identity.
        #[arg(long, default_value_t = zeta::DEFAULT_SAMPLE_COUNT)]
        points: usize,
        /// Series order for the Euler product and exponential checks.
        #[arg(long, default_value_t = cycles::DEFAULT_MAX_LEN)]
        order: usize,
    },
    /// Print a zeta reciprocal as ascending coefficients.
    Zeta {
        path: PathBuf,
        #[arg(long, value_enum)]
        kind: ZetaKind,
    },
    /// Eigenvalues of the cube support on a regular graph.
    Spectra { path: PathBuf },
    /// Poles and radius of convergence of the cube-support zeta function.
    Poles { path: PathBuf },
    /// Closed-walk counts and prime classes.
    Cycles {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = WalkMatrix::Cube)]
        matrix: WalkMatrix,
        #[arg(long, default_value_t = cycles::DEFAULT_MAX_LEN)]
        max_len: usize,
        /// List the prime class representatives.
        #[arg(long)]
        list: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    #[value(name = "U")]
    U,
    #[value(name = "U+")]
    UPlus,
    #[value(name = "U2+")]
    U2Plus,
    #[value(name = "U3+")]
    U3Plus,
    #[value(name = "B")]
    B,
    #[value(name = "J0")]
    J0,
    #[value(name = "A")]
    A,
    #[value(name = "D")]
    D,
    #[value(name = "K")]
    K,
    #[value(name = "L")]
    L,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Ren,
    GodsilGuo,
    Cube,
    #[value(name = "prop32")]
    GroverEdgeForm,
    Bass,
    #[value(name = "thm51")]
    GeneralExpression,
    #[value(name = "thm52")]
    RegularClosedForm,
    #[value(name = "cor53")]
    CubeCharPoly,
    #[value(name = "thm21")]
    SupportCharPoly,
    #[value(name = "thm22")]
    SquareSupportCharPoly,
    Euler,
    Exp,
    All,
}

const SUITES: [Suite; 12] = [
    Suite::Ren,
    Suite::GodsilGuo,
    Suite::Cube,
    Suite::GroverEdgeForm,
    Suite::Bass,
    Suite::GeneralExpression,
    Suite::RegularClosedForm,
    Suite::CubeCharPoly,
    Suite::SupportCharPoly,
    Suite::SquareSupportCharPoly,
    Suite::Euler,
    Suite::Exp,
];

impl Suite {
    fn name(self) -> String {
        self.to_possible_value()
            .map(|v| v.get_name().to_string())
            .unwrap_or_default()
    }

    fn needs_regular(self) -> bool {
        matches!(
            self,
            Suite::RegularClosedForm
                | Suite::CubeCharPoly
                | Suite::SupportCharPoly
                | Suite::SquareSupportCharPoly
        )
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ZetaKind {
    IharaEdge,
    IharaBass,
    Z3,
    Z3Closed,
}

#[derive(Clone, Copy, ValueEnum)]
enum WalkMatrix {
    /// The cube support `(U^3)^+`.
    Cube,
    /// The edge matrix `B - J0`.
    Edge,
}

/// Outcome of a command that ran to completion.
enum Outcome {
    Success,
    IdentityFails,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome::Success) => ExitCode::SUCCESS,
        Ok(Outcome::IdentityFails) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn load(path: &Path) -> anyhow::Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_graph(&text).with_context(|| format!("parsing {}", path.display()))
}

fn print_json(value: &Value) {
    out!(
        "{}",
        serde_json::to_string_pretty(value).expect("JSON values serialize")
    );
}

fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    match &cli.command {
        Command::Gen {
            family,
            params,
            output,
            min_girth,
            seed,
        } => cmd_gen(family, params, output.as_deref(), *min_girth, *seed),
        Command::Info { path } => cmd_info(&load(path)?, cli.json),
        Command::Matrix { path, which, format } => {
            let json = cli.json || matches!(format, Format::Json);
            cmd_matrix(&load(path)?, *which, json)
        }
        Command::Verify {
            path,
            suite,
            points,
            order,
        } => cmd_verify(&load(path)?, *suite, *points, *order, cli.json),
        Command::Zeta { path, kind } => cmd_zeta(&load(path)?, *kind, cli.json),
        Command::Spectra { path } => cmd_spectra(&load(path)?, cli.json),
        Command::Poles { path } => cmd_poles(&load(path)?, cli.json),
        Command::Cycles {
            path,
            matrix,
            max_len,
            list,
        } => cmd_cycles(&load(path)?, *matrix, *max_len, *list, cli.json),
    }
}

fn family_from_args(name: &str, params: &[usize], min_girth: usize, seed: u64) -> anyhow::Result<Family> {
    let arity = |n: usize| -> anyhow::Result<()> {
        if params.len() == n {
            Ok(())
        } else {
            bail!("{name} takes {n} parameter(s), got {}", params.len())
        }
    };
    let family = match name {
        "cycle" => {
            arity(1)?;
            Family::Cycle(params[0])
        }
        "complete" => {
            arity(1)?;
            Family::Complete(params[0])
        }
        "complete-bipartite" => {
            arity(2)?;
            Family::CompleteBipartite(params[0], params[1])
        }
        "petersen" => {
            arity(0)?;
            Family::Petersen
        }
        "heawood" => {
            arity(0)?;
            Family::Heawood
        }
        "mcgee" => {
            arity(0)?;
            Family::McGee
        }
        "circulant" => {
            let (&n, connections) = params
                .split_first()
                .ok_or_else(|| anyhow!("circulant takes n followed by connections"))?;
            Family::Circulant {
                n,
                connections: connections.to_vec(),
            }
        }
        "random-regular" => {
            arity(2)?;
            Family::RandomRegular(RandomRegular::new(params[0], params[1], min_girth, seed))
        }
        other => bail!("unknown family {other:?}"),
    };
    Ok(family)
}

fn cmd_gen(
    name: &str,
    params: &[usize],
    output: Option<&Path>,
    min_girth: usize,
    seed: u64,
) -> anyhow::Result<Outcome> {
    let g = generators::generate(&family_from_args(name, params, min_girth, seed)?)?;
    let text = serialize_graph(&g);
    match output {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display()))?,
        None => out!("{}", text.trim_end_matches('\n')),
    }
    Ok(Outcome::Success)
}

fn cmd_info(g: &Graph, json: bool) -> anyhow::Result<Outcome> {
    let s = g.stats();
    if json {
        print_json(&serde_json::to_value(&s)?);
        return Ok(Outcome::Success);
    }
    let degrees: Vec<String> = s.degrees.iter().map(ToString::to_string).collect();
    out!("vertices: {}", s.vertex_count);
    out!("edges: {}", s.edge_count);
    out!("degrees: {}", degrees.join(" "));
    out!("min degree: {}", s.min_degree);
    match s.regular_degree {
        Some(k) => out!("regular: k={k}"),
        None => out!("regular: no"),
    }
    out!("girth: {}", s.girth.map_or("inf".into(), |g| g.to_string()));
    out!("connected: {}", if s.connected { "yes" } else { "no" });
    if let Some(b) = s.betti {
        out!("betti: {b}");
    }
    Ok(Outcome::Success)
}

fn emit_matrix<T: Scalar>(m: &Matrix<T>, json: bool) {
    if json {
        print_json(&json!(m.to_string_grid()));
    } else {
        out!("{}", m.to_text().trim_end_matches('\n'));
    }
}

fn cmd_matrix(g: &Graph, which: Which, json: bool) -> anyhow::Result<Outcome> {
    let arcs = grover_zeta::build_arc_table(g);
    let n = g.vertex_count();
    match which {
        Which::U => emit_matrix(&operators::grover_matrix(g, &arcs)?, json),
        Which::UPlus => emit_matrix(&positive_support(&operators::grover_matrix(g, &arcs)?), json),
        Which::U2Plus => {
            let u = operators::grover_matrix(g, &arcs)?;
            emit_matrix(&positive_support(&(&u * &u)), json)
        }
        Which::U3Plus => emit_matrix(&operators::cube_support(g)?, json),
        Which::B => emit_matrix(&operators::arc_adjacency(&arcs), json),
        Which::J0 => emit_matrix(&operators::inverse_pairs(&arcs), json),
        Which::A => emit_matrix(&operators::adjacency_matrix(g), json),
        Which::D => emit_matrix(&operators::degree_matrix(g), json),
        Which::K => emit_matrix(&operators::terminus_incidence(n, &arcs), json),
        Which::L => emit_matrix(&operators::origin_incidence(n, &arcs), json),
    }
    Ok(Outcome::Success)
}

fn clamp_order(order: usize) -> usize {
    if order > HARD_MAX_LEN {
        eprintln!("warning: order {order} exceeds the cap {HARD_MAX_LEN}; using {HARD_MAX_LEN}");
        HARD_MAX_LEN
    } else {
        order
    }
}

fn relabel(mut r: VerificationReport, label: &str) -> VerificationReport {
    r.theorem = label.to_string();
    r
}

fn run_suite(
    g: &Graph,
    suite: Suite,
    points: usize,
    order: usize,
) -> grover_zeta::Result<Vec<VerificationReport>> {
    let reports = match suite {
        Suite::Ren => vec![operators::check_ren(g)?],
        Suite::GodsilGuo => vec![operators::check_godsil_guo(g)?],
        Suite::Cube => vec![operators::check_cube_structure(g)?],
        Suite::GroverEdgeForm => vec![zeta::check_grover_edge_form(g)?],
        Suite::Bass => vec![zeta::check_bass(g)?],
        Suite::GeneralExpression => vec![zeta::check_general_expression(g, points)?],
        Suite::RegularClosedForm => vec![zeta::check_regular_closed_form(g)?],
        Suite::CubeCharPoly => vec![zeta::check_cube_char_poly(g)?],
        Suite::SupportCharPoly => vec![zeta::check_support_char_poly(g)?],
        Suite::SquareSupportCharPoly => vec![zeta::check_square_support_char_poly(g)?],
        Suite::Euler => {
            let ops = OperatorBundle::new(g)?;
            let cube = positive_support(&(&(&ops.u * &ops.u) * &ops.u));
            let edge = ops.edge_matrix();
            vec![
                relabel(cycles::euler_product_check(&cube, order)?, "euler-z3"),
                relabel(cycles::mobius_check(&cube, order)?, "mobius-z3"),
                relabel(cycles::euler_product_check(&edge, order)?, "euler-ihara"),
                relabel(cycles::mobius_check(&edge, order)?, "mobius-ihara"),
            ]
        }
        Suite::Exp => {
            let ops = OperatorBundle::new(g)?;
            let cube = positive_support(&(&(&ops.u * &ops.u) * &ops.u));
            vec![
                relabel(cycles::exp_expression_check(&cube, order)?, "exp-z3"),
                relabel(
                    cycles::exp_expression_check(&ops.edge_matrix(), order)?,
                    "exp-ihara",
                ),
            ]
        }
        Suite::All => unreachable!("expanded by the caller"),
    };
    if reports.len() == 1 {
        return Ok(reports.into_iter().map(|r| relabel(r, &suite.name())).collect());
    }
    Ok(reports)
}

fn cmd_verify(g: &Graph, suite: Suite, points: usize, order: usize, json: bool) -> anyhow::Result<Outcome> {
    let order = clamp_order(order);
    let mut reports = Vec::new();
    let mut skipped: Vec<(String, String)> = Vec::new();
    if suite == Suite::All {
        let regular = g.stats().is_regular();
        for s in SUITES {
            if s.needs_regular() && !regular {
                skipped.push((s.name(), "graph is not regular".into()));
                continue;
            }
            match run_suite(g, s, points, order) {
                Ok(rs) => {
                    for r in rs {
                        if r.preconditions_met {
                            reports.push(r);
                        } else {
                            skipped.push((
                                r.theorem.clone(),
                                format!("preconditions unmet ({})", r.preconditions),
                            ));
                        }
                    }
                }
                Err(e) => skipped.push((s.name(), e.to_string())),
            }
        }
    } else {
        reports = run_suite(g, suite, points, order)?;
    }
    let all_hold = reports.iter().all(|r| r.identity_holds);

    if json {
        let skipped: Vec<Value> = skipped
            .iter()
            .map(|(s, reason)| json!({"suite": s, "reason": reason}))
            .collect();
        print_json(&json!({"reports": reports, "skipped": skipped, "all_hold": all_hold}));
    } else {
        for r in &reports {
            let outcome = if r.identity_holds { "holds" } else { "FAILS" };
            let pre = if r.preconditions_met { "met" } else { "UNMET" };
            out!(
                "{:<13} {outcome:<6} preconditions {pre} ({})",
                r.theorem,
                r.preconditions
            );
            for m in r.mismatches.iter().take(5) {
                out!("    at {:?}: {} vs {}", m.location, m.lhs, m.rhs);
            }
            if r.mismatches.len() > 5 {
                out!("    ... {} mismatches in total", r.mismatches.len());
            }
        }
        for (s, reason) in &skipped {
            out!("{s:<13} skipped: {reason}");
        }
    }
    Ok(if all_hold {
        Outcome::Success
    } else {
        Outcome::IdentityFails
    })
}

fn cmd_zeta(g: &Graph, kind: ZetaKind, json: bool) -> anyhow::Result<Outcome> {
    let poly: Poly = match kind {
        ZetaKind::IharaEdge => zeta::ihara_edge_form(g)?,
        ZetaKind::IharaBass => zeta::ihara_bass_form(g)?,
        ZetaKind::Z3 => {
            let s = g.stats();
            if s.min_degree <= 2 || !s.girth_exceeds(4) {
                eprintln!("note: min degree > 2 and girth > 4 do not both hold; the cube support is computed without structural guarantees");
            }
            zeta::z3_reciprocal(g)?
        }
        ZetaKind::Z3Closed => zeta::z3_closed_regular(g)?,
    };
    if json {
        print_json(&json!({"poly": poly.to_coeff_strings()}));
    } else {
        out!("{}", poly.to_text());
    }
    Ok(Outcome::Success)
}

/// Twelve significant digits, shortest form.
fn sig12(x: f64) -> String {
    let rounded: f64 = format!("{x:.11e}").parse().unwrap_or(x);
    if rounded == 0.0 {
        "0".into()
    } else {
        rounded.to_string()
    }
}

fn complex_text(z: ComplexValue) -> String {
    let im = sig12(z.im.abs());
    let sign = if z.im < 0.0 && im != "0" { '-' } else { '+' };
    format!("{}{sign}{im}i", sig12(z.re))
}

fn spectrum(g: &Graph) -> anyhow::Result<SpectrumReport> {
    zeta::compute_spectrum_report(g).map_err(|e| match e {
        Error::PreconditionUnmet(detail) => {
            anyhow!("spectra need a regular graph with k > 2 and girth > 4 ({detail})")
        }
        other => other.into(),
    })
}

fn radius_lines(r: &SpectrumReport) {
    let exact = |e: &Option<String>| e.as_ref().map(|s| format!(" (exact {s})")).unwrap_or_default();
    out!(
        "spectral radius: {}{}",
        sig12(r.spectral_radius),
        exact(&r.spectral_radius_exact)
    );
    out!(
        "radius of convergence: {}{}",
        sig12(r.radius_of_convergence),
        exact(&r.radius_of_convergence_exact)
    );
    out!(
        "literature radius claim: {} ({})",
        r.claimed_radius_exact,
        sig12(r.claimed_radius)
    );
}

fn cmd_spectra(g: &Graph, json: bool) -> anyhow::Result<Outcome> {
    let r = spectrum(g)?;
    if json {
        print_json(&serde_json::to_value(&r)?);
        return Ok(Outcome::Success);
    }
    out!("regular degree: {}", r.regular_degree);
    let adj: Vec<String> = r.adjacency_eigenvalues.iter().map(|&x| sig12(x)).collect();
    out!("adjacency eigenvalues: {}", adj.join(" "));
    out!("derived eigenvalues:");
    for p in &r.derived_pairs {
        let roots = match &p.exact_roots {
            Some([a, b]) => format!("{a}, {b}"),
            None => format!("{}, {}", complex_text(p.roots[0]), complex_text(p.roots[1])),
        };
        out!("  {:>16}: {roots}", sig12(p.adjacency_eigenvalue));
    }
    for t in &r.trivial_eigenvalues {
        out!("trivial eigenvalue {} x{}", t.value, t.multiplicity);
    }
    radius_lines(&r);
    Ok(Outcome::Success)
}

fn cmd_poles(g: &Graph, json: bool) -> anyhow::Result<Outcome> {
    let r = spectrum(g)?;
    if json {
        print_json(&json!({
            "poles": r.poles,
            "spectral_radius": r.spectral_radius,
            "spectral_radius_exact": r.spectral_radius_exact,
            "radius_of_convergence": r.radius_of_convergence,
            "radius_of_convergence_exact": r.radius_of_convergence_exact,
            "paper_radius_claim": r.claimed_radius,
            "paper_radius_claim_exact": r.claimed_radius_exact,
        }));
        return Ok(Outcome::Success);
    }
    out!("poles:");
    for p in &r.poles {
        match &p.exact {
            Some(e) => out!("  {e}"),
            None => out!("  {}", complex_text(p.value)),
        }
    }
    radius_lines(&r);
    Ok(Outcome::Success)
}

fn count_value(n: &BigInt) -> Value {
    n.to_u64().map_or_else(|| json!(n.to_string()), |v| json!(v))
}

fn cmd_cycles(
    g: &Graph,
    which: WalkMatrix,
    max_len: usize,
    list: bool,
    json: bool,
) -> anyhow::Result<Outcome> {
    let max_len = clamp_order(max_len);
    let ops = OperatorBundle::new(g)?;
    let m = match which {
        WalkMatrix::Cube => positive_support(&(&(&ops.u * &ops.u) * &ops.u)),
        WalkMatrix::Edge => ops.edge_matrix(),
    };
    let traces = cycles::trace_counts(&m, max_len)?;
    let counts = cycles::count_prime_classes(&m, max_len)?;
    let classes = if list {
        Some(cycles::enumerate_prime_classes(&m, max_len)?)
    } else {
        None
    };
    if json {
        let mut doc = json!({
            "N": traces.iter().map(count_value).collect::<Vec<_>>(),
            "prime_class_counts": counts.counts,
        });
        if let Some(set) = &classes {
            doc["prime_classes"] = set
                .classes
                .iter()
                .map(|c| json!({"length": c.length, "rep": c.rep}))
                .collect();
        }
        print_json(&doc);
        return Ok(Outcome::Success);
    }
    out!("{:>4} {:>20} {:>14}", "len", "closed walks", "prime classes");
    for (i, n) in traces.iter().enumerate() {
        out!("{:>4} {:>20} {:>14}", i + 1, n, counts.counts[i]);
    }
    if let Some(set) = classes {
        for c in &set.classes {
            let rep: Vec<String> = c.rep.iter().map(ToString::to_string).collect();
            out!("{}: {}", c.length, rep.join(" "));
        }
    }
    Ok(Outcome::Success)
}
