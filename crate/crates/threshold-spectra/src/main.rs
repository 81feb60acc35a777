//! `thspec`: threshold-hypergraph spectra on the command line.

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num::BigInt;
use serde_json::{json, Value};

use threshold_spectra::closedform::{incremental_spectrum, k_threshold_spectrum, threshold_spectrum, CoExpr};
use threshold_spectra::code::{random_code, RandomCodeParams, ThresholdCode};
use threshold_spectra::error::Error;
use threshold_spectra::ferrers::{
    dominator_widths, ferrers_literal_diagnostic, ferrers_spectrum, recover_code, FerrersDiagram,
};
use threshold_spectra::hypergraph::Hypergraph;
use threshold_spectra::integrality::{certify, predicted_ratio, verify_integral, IntegralityCertificate};
use threshold_spectra::laplacian::laplacian_matrix;
use threshold_spectra::oracle::{compare_spectra, symmetric_eigenvalues, DEFAULT_COMPARE_TOL, DEFAULT_OFFDIAG_TOL};
use threshold_spectra::spectrum::Spectrum;

#[derive(Parser)]
#[command(name = "thspec", version, about = "Exact Laplacian spectra of threshold hypergraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a Laplacian spectrum by one (or all) of the available methods.
    Spectrum(SpectrumArgs),
    /// Cross-check every applicable closed form against the numeric oracle.
    Verify(VerifyArgs),
    /// Materialize a construction code as an explicit edge list.
    Build(BuildArgs),
    /// Analyze the Ferrers diagram of a degree sequence.
    Ferrers(FerrersArgs),
    /// Evaluate a complement/union expression over uniform-k constructions.
    Coexpr(CoexprArgs),
    /// Certify r-integrality of a spectrum.
    Integrality(IntegralityArgs),
    /// Emit deterministic random construction codes.
    Random(RandomArgs),
    /// Dump the exact Laplacian matrix as CSV of num/den tokens.
    Matrix(MatrixArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Closed form evaluated directly from the construction string.
    Thm1,
    /// One domination at a time via the spectral update rule.
    Incremental,
    /// Uniform-k closed form.
    Cor,
    /// From the Ferrers diagram of the degree sequence.
    Ferrers,
    /// Dense Jacobi eigensolver on the assembled Laplacian.
    Numeric,
    /// Every applicable method, with an agreement verdict.
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct SpectrumArgs {
    /// Construction string, e.g. "0 3 0 3 0 0 3 3".
    #[arg(long)]
    code: Option<String>,
    /// Degree sequence, comma- or whitespace-separated.
    #[arg(long)]
    degrees: Option<String>,
    /// File with one degree per line.
    #[arg(long)]
    degrees_file: Option<String>,
    #[arg(long, value_enum, default_value_t = Method::Thm1)]
    method: Method,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Agreement tolerance for --method all.
    #[arg(long, default_value_t = DEFAULT_COMPARE_TOL)]
    tol: f64,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    code: Option<String>,
    #[arg(long)]
    degrees: Option<String>,
    #[arg(long)]
    degrees_file: Option<String>,
    /// Co-expression, e.g. "C(U(T(0 2), T(0 2)))".
    #[arg(long)]
    expr: Option<String>,
    #[arg(long, default_value_t = DEFAULT_COMPARE_TOL)]
    tol: f64,
    /// Verify this many random codes instead of a single input.
    #[arg(long)]
    count: Option<usize>,
    /// Base seed for --count mode.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct BuildArgs {
    #[arg(long)]
    code: String,
    /// Output path; stdout when omitted.
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct FerrersArgs {
    #[arg(long)]
    degrees: Option<String>,
    #[arg(long)]
    degrees_file: Option<String>,
    /// Also draw the diagram.
    #[arg(long)]
    render: bool,
    /// Evaluate the uncorrected block multiplicities and report the
    /// multiset-size deficit.
    #[arg(long)]
    literal: bool,
}

#[derive(Args)]
struct CoexprArgs {
    #[arg(long)]
    expr: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct IntegralityArgs {
    #[arg(long)]
    code: Option<String>,
    #[arg(long)]
    expr: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct RandomArgs {
    #[arg(long)]
    seed: u64,
    #[arg(long, default_value_t = 4)]
    max_d: usize,
    #[arg(long, default_value_t = 4)]
    max_k: usize,
    #[arg(long, default_value_t = 4)]
    max_m: usize,
    /// Use the same k for every domination.
    #[arg(long)]
    k_threshold: bool,
    /// Make every isolated-vertex run non-empty.
    #[arg(long)]
    all_m_positive: bool,
    #[arg(long, default_value_t = 1)]
    count: usize,
    /// Print run-length form instead of expanded tokens.
    #[arg(long)]
    runlength: bool,
}

#[derive(Args)]
struct MatrixArgs {
    #[arg(long)]
    code: String,
    #[arg(long)]
    out: Option<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Spectrum(args) => cmd_spectrum(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Build(args) => cmd_build(args),
        Command::Ferrers(args) => cmd_ferrers(args),
        Command::Coexpr(args) => cmd_coexpr(args),
        Command::Integrality(args) => cmd_integrality(args),
        Command::Random(args) => cmd_random(args),
        Command::Matrix(args) => cmd_matrix(args),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

type CmdResult = Result<u8, String>;

fn err<T>(e: impl std::fmt::Display) -> Result<T, String> {
    Err(e.to_string())
}

fn parse_degrees(args_degrees: &Option<String>, args_file: &Option<String>) -> Result<Option<Vec<i64>>, String> {
    let text = match (args_degrees, args_file) {
        (Some(_), Some(_)) => return Err("give either --degrees or --degrees-file, not both".into()),
        (Some(t), None) => t.clone(),
        (None, Some(path)) => std::fs::read_to_string(path).map_err(|e| e.to_string())?,
        (None, None) => return Ok(None),
    };
    let mut out = Vec::new();
    for token in text.split(|c: char| c.is_whitespace() || c == ',') {
        if token.is_empty() {
            continue;
        }
        out.push(token.parse::<i64>().map_err(|_| format!("bad degree token `{token}`"))?);
    }
    if out.is_empty() {
        return err(Error::EmptyInput);
    }
    Ok(Some(out))
}

/// Input for spectrum/verify: a code, possibly recovered from degrees.
struct Instance {
    code: ThresholdCode,
    degrees: Vec<i64>,
}

fn resolve_instance(
    code: &Option<String>,
    degrees: &Option<String>,
    degrees_file: &Option<String>,
) -> Result<Instance, String> {
    let degrees = parse_degrees(degrees, degrees_file)?;
    match (code, degrees) {
        (Some(_), Some(_)) => Err("give exactly one of --code and --degrees".into()),
        (None, None) => Err("give one of --code and --degrees".into()),
        (Some(text), None) => {
            let code = ThresholdCode::parse(text).map_err(|e| e.to_string())?;
            let degrees = code.build().degree_sequence().iter().map(|&d| d as i64).collect();
            Ok(Instance { code, degrees })
        }
        (None, Some(degrees)) => {
            let (code, _) = recover_code(&degrees).map_err(|e| e.to_string())?;
            Ok(Instance { code, degrees })
        }
    }
}

fn bigint_json(b: &BigInt) -> Value {
    match i64::try_from(b.clone()) {
        Ok(v) => json!(v),
        Err(_) => json!(b.to_string()),
    }
}

fn rational_json(r: &threshold_spectra::Rational) -> Value {
    json!({ "num": bigint_json(r.numer()), "den": bigint_json(r.denom()) })
}

fn spectrum_json(spec: &Spectrum, r: Option<&threshold_spectra::Rational>) -> Value {
    let eigenvalues: Vec<Value> = spec
        .entries()
        .iter()
        .map(|(v, m)| json!({ "num": bigint_json(v.numer()), "den": bigint_json(v.denom()), "mult": m }))
        .collect();
    let mut obj = json!({ "n": spec.total(), "eigenvalues": eigenvalues });
    if let Some(r) = r {
        obj["r"] = rational_json(r);
    }
    obj
}

fn print_exact_spectrum(spec: &Spectrum, format: Format) {
    match format {
        Format::Text => println!("{spec}"),
        Format::Json => println!("{}", spectrum_json(spec, None)),
        Format::Csv => {
            for v in spec.expand() {
                println!("{v}");
            }
        }
    }
}

fn print_numeric_spectrum(values: &[f64], format: Format) {
    match format {
        Format::Text => {
            let rendered: Vec<String> = values.iter().map(|v| format!("{v:.10}")).collect();
            println!("[{}]", rendered.join(", "));
        }
        Format::Json => {
            println!("{}", json!({ "n": values.len(), "eigenvalues": values }));
        }
        Format::Csv => {
            for v in values {
                println!("{v:.12}");
            }
        }
    }
}

fn numeric_eigenvalues(h: &Hypergraph) -> Result<Vec<f64>, String> {
    symmetric_eigenvalues(&laplacian_matrix(h), DEFAULT_OFFDIAG_TOL).map_err(|e| e.to_string())
}

fn cmd_spectrum(args: SpectrumArgs) -> CmdResult {
    let instance = resolve_instance(&args.code, &args.degrees, &args.degrees_file)?;
    let code = &instance.code;
    match args.method {
        Method::Thm1 => {
            print_exact_spectrum(&threshold_spectrum(code), args.format);
            Ok(0)
        }
        Method::Incremental => {
            let s = incremental_spectrum(code).map_err(|e| e.to_string())?;
            print_exact_spectrum(&s, args.format);
            Ok(0)
        }
        Method::Cor => {
            let s = k_threshold_spectrum(code).map_err(|e| e.to_string())?;
            print_exact_spectrum(&s, args.format);
            Ok(0)
        }
        Method::Ferrers => {
            let s = ferrers_spectrum(&instance.degrees).map_err(|e| e.to_string())?;
            print_exact_spectrum(&s, args.format);
            Ok(0)
        }
        Method::Numeric => {
            let values = numeric_eigenvalues(&code.build())?;
            print_numeric_spectrum(&values, args.format);
            Ok(0)
        }
        Method::All => {
            let (agrees, _) = run_all_methods(&instance, args.tol, true, args.format)?;
            Ok(if agrees { 0 } else { 2 })
        }
    }
}

/// Evaluates every applicable method and checks agreement. Returns
/// whether everything agreed and the reference spectrum.
fn run_all_methods(
    instance: &Instance,
    tol: f64,
    print: bool,
    format: Format,
) -> Result<(bool, Spectrum), String> {
    let code = &instance.code;
    let reference = threshold_spectrum(code);
    let mut agrees = true;

    let mut exact_methods: Vec<(&str, Spectrum)> = vec![("thm1", reference.clone())];
    match incremental_spectrum(code) {
        Ok(s) => exact_methods.push(("incremental", s)),
        Err(e) => return err(e),
    }
    if code.uniform_k().is_some() || code.dominations() == 0 {
        exact_methods.push(("cor", k_threshold_spectrum(code).map_err(|e| e.to_string())?));
    }
    if code.dominations() >= 1 && code.uniform_k().is_some() {
        exact_methods.push((
            "ferrers",
            ferrers_spectrum(&instance.degrees).map_err(|e| e.to_string())?,
        ));
    }

    for (name, s) in &exact_methods {
        if print {
            print!("{name}: ");
            print_exact_spectrum(s, format);
        }
        if *s != reference {
            agrees = false;
            if print {
                println!("disagreement: {name} differs from thm1");
            }
        }
    }

    let numeric = numeric_eigenvalues(&code.build())?;
    if print {
        print!("numeric: ");
        print_numeric_spectrum(&numeric, format);
    }
    let report = compare_spectra(&reference, &numeric, tol).map_err(|e| e.to_string())?;
    if !report.pass {
        agrees = false;
        if print {
            println!(
                "disagreement: numeric deviates by {} at index {}",
                report.worst_deviation,
                report.first_mismatch.unwrap()
            );
        }
    }
    if print {
        println!(
            "agreement: {} (worst numeric deviation {:.3e})",
            if agrees { "ok" } else { "FAILED" },
            report.worst_deviation
        );
    }
    Ok((agrees, reference))
}

fn cmd_verify(args: VerifyArgs) -> CmdResult {
    if let Some(count) = args.count {
        return cmd_verify_batch(&args, count);
    }
    if let Some(expr_text) = &args.expr {
        if args.code.is_some() || args.degrees.is_some() || args.degrees_file.is_some() {
            return Err("give exactly one input source".into());
        }
        let expr = CoExpr::parse(expr_text).map_err(|e| e.to_string())?;
        let exact = expr.spectrum().map_err(|e| e.to_string())?;
        let numeric = numeric_eigenvalues(&expr.build().map_err(|e| e.to_string())?)?;
        let report = compare_spectra(&exact, &numeric, args.tol).map_err(|e| e.to_string())?;
        println!("exact: {exact}");
        println!(
            "numeric agreement: {} (worst deviation {:.3e})",
            if report.pass { "ok" } else { "FAILED" },
            report.worst_deviation
        );
        return Ok(if report.pass { 0 } else { 2 });
    }
    let instance = resolve_instance(&args.code, &args.degrees, &args.degrees_file)?;
    let (agrees, _) = run_all_methods(&instance, args.tol, true, Format::Text)?;
    Ok(if agrees { 0 } else { 2 })
}

fn cmd_verify_batch(args: &VerifyArgs, count: usize) -> CmdResult {
    let params = RandomCodeParams::default();
    let mut all_ok = true;
    for i in 0..count {
        let code = random_code(args.seed.wrapping_add(i as u64), &params);
        let degrees = code.build().degree_sequence().iter().map(|&d| d as i64).collect();
        let instance = Instance { code, degrees };
        let (agrees, _) = run_all_methods(&instance, args.tol, false, Format::Text)?;
        println!(
            "instance {i}: code \"{}\" -> {}",
            instance.code,
            if agrees { "ok" } else { "FAILED" }
        );
        all_ok &= agrees;
    }
    Ok(if all_ok { 0 } else { 2 })
}

fn cmd_build(args: BuildArgs) -> CmdResult {
    let code = ThresholdCode::parse(&args.code).map_err(|e| e.to_string())?;
    let h = code.build();
    let mut text = format!("{} {}\n", h.vertex_count(), h.edge_count());
    for e in h.edges() {
        let ids: Vec<String> = e.iter().map(|v| v.to_string()).collect();
        text.push_str(&ids.join(" "));
        text.push('\n');
    }
    write_output(&args.out, &text)
}

fn write_output(out: &Option<String>, text: &str) -> CmdResult {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| e.to_string())?,
        None => {
            std::io::stdout()
                .write_all(text.as_bytes())
                .map_err(|e| e.to_string())?;
        }
    }
    Ok(0)
}

fn cmd_ferrers(args: FerrersArgs) -> CmdResult {
    let degrees = parse_degrees(&args.degrees, &args.degrees_file)?
        .ok_or_else(|| "give --degrees or --degrees-file".to_string())?;
    let diagram = FerrersDiagram::from_degrees(&degrees).map_err(|e| e.to_string())?;
    let (code, k) = recover_code(&degrees).map_err(|e| e.to_string())?;
    let d = code.dominations();
    let widths: Vec<String> = dominator_widths(&code, k)
        .iter()
        .map(|w| w.to_string())
        .collect();
    let cols: Vec<String> = (1..=d).map(|i| diagram.colsum(i).to_string()).collect();
    println!(
        "d={d} k={k} D={} C={} code={code}",
        widths.join(","),
        cols.join(",")
    );
    if args.render {
        print!("{}", diagram.render_ascii());
    }
    if args.literal {
        let diag = ferrers_literal_diagnostic(&degrees).map_err(|e| e.to_string())?;
        println!(
            "literal multiplicities: total {} of {} (deficit {}); multiset {}",
            diag.signed_total,
            diag.expected_total,
            diag.deficit(),
            diag.spectrum
        );
    }
    Ok(0)
}

fn print_certificate(cert: &IntegralityCertificate, format: Format) {
    match format {
        Format::Json | Format::Csv => {
            let r = cert.r.as_ref().map(rational_json).unwrap_or(Value::Null);
            let quotients: Vec<Value> = cert.quotients.iter().map(bigint_json).collect();
            println!("{}", json!({ "r": r, "quotients": quotients }));
        }
        Format::Text => match &cert.r {
            Some(r) => {
                let qs: Vec<String> = cert.quotients.iter().map(|q| q.to_string()).collect();
                println!("r = {r}");
                println!("quotients = {}", qs.join(","));
            }
            None => println!("r = arbitrary (all-zero spectrum)"),
        },
    }
}

fn cmd_coexpr(args: CoexprArgs) -> CmdResult {
    let expr = CoExpr::parse(&args.expr).map_err(|e| e.to_string())?;
    let spec = expr.spectrum().map_err(|e| e.to_string())?;
    let cert = certify(&spec);
    match args.format {
        Format::Json => {
            let mut obj = spectrum_json(&spec, cert.r.as_ref());
            obj["predicted_r"] = predicted_ratio(&expr)
                .map(|r| rational_json(&r))
                .unwrap_or(Value::Null);
            println!("{obj}");
        }
        _ => {
            println!("n = {}", spec.total());
            println!("spectrum = {spec}");
            print_certificate(&cert, Format::Text);
            if let Ok(r) = predicted_ratio(&expr) {
                println!("predicted r = {r}");
            }
        }
    }
    Ok(0)
}

fn cmd_integrality(args: IntegralityArgs) -> CmdResult {
    match (&args.code, &args.expr) {
        (Some(_), Some(_)) | (None, None) => Err("give exactly one of --code and --expr".into()),
        (Some(text), None) => {
            let code = ThresholdCode::parse(text).map_err(|e| e.to_string())?;
            let cert = certify(&threshold_spectrum(&code));
            print_certificate(&cert, args.format);
            Ok(0)
        }
        (None, Some(text)) => {
            let expr = CoExpr::parse(text).map_err(|e| e.to_string())?;
            let spec = expr.spectrum().map_err(|e| e.to_string())?;
            let cert = certify(&spec);
            let predicted = predicted_ratio(&expr).map_err(|e| e.to_string())?;
            print_certificate(&cert, args.format);
            if args.format == Format::Text {
                println!("predicted r = {predicted}");
                let ok = verify_integral(&spec, &predicted).map_err(|e| e.to_string())?;
                println!("prediction holds: {ok}");
            }
            Ok(0)
        }
    }
}

fn cmd_random(args: RandomArgs) -> CmdResult {
    let params = RandomCodeParams {
        max_d: args.max_d,
        max_k: args.max_k,
        max_m: args.max_m,
        uniform_k: args.k_threshold,
        all_m_positive: args.all_m_positive,
    };
    for i in 0..args.count {
        let code = random_code(args.seed.wrapping_add(i as u64), &params);
        println!("{}", code.serialize(args.runlength));
    }
    Ok(0)
}

fn cmd_matrix(args: MatrixArgs) -> CmdResult {
    let code = ThresholdCode::parse(&args.code).map_err(|e| e.to_string())?;
    let lap = laplacian_matrix(&code.build());
    let mut text = String::new();
    for i in 0..lap.order() {
        let row: Vec<String> = (0..lap.order()).map(|j| lap.get(i, j).to_string()).collect();
        text.push_str(&row.join(","));
        text.push('\n');
    }
    write_output(&args.out, &text)
}
