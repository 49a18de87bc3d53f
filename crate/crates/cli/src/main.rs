use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use pgq::bounds::{self, BoundChoice};
use pgq::format::{self, FormatError};
use pgq::graph::{self, claw_numbers, Graph};
use pgq::incidence::{self, ExtractError};
use pgq::scan::{self, OutputFormat, ScanRange};
use pgq::verdict::ratio_columns;
use pgq::{generators, GqParams};

/// Feasibility bounds and verification for strongly regular graphs with
/// generalized quadrangle parameters.
#[derive(Debug, Parser)]
#[command(name = "pgq", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List parameter sets with t in [t-min, t-max] excluded only by the
    /// quadratic bound
    Scan {
        #[arg(long)]
        t_min: u64,
        #[arg(long)]
        t_max: u64,
        #[arg(long, value_enum, default_value_t = ScanFormat::Csv)]
        format: ScanFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run every feasibility condition on one (s, t); exit 3 if ruled out
    Check {
        #[arg(long)]
        s: u64,
        #[arg(long)]
        t: u64,
        #[arg(long, value_enum, default_value_t = CheckFormat::Text)]
        format: CheckFormat,
    },
    /// Print the Neumaier, quadratic and optimal four-term bounds for t, or
    /// the four terms for an explicit (theta, beta)
    Bound {
        #[arg(long)]
        t: u64,
        #[arg(long, requires = "beta")]
        theta: Option<u64>,
        #[arg(long, requires = "theta")]
        beta: Option<u64>,
    },
    /// Verify a graph file ("-" reads standard input)
    Graph {
        #[arg(value_enum)]
        action: GraphAction,
        file: String,
        #[arg(long, requires = "t")]
        s: Option<u64>,
        #[arg(long, requires = "s")]
        t: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write a generated graph in pgqgraph format
    Gen {
        #[arg(value_enum)]
        kind: GenKind,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Work with an incidence file ("-" reads standard input)
    Inc {
        #[arg(value_enum)]
        action: IncAction,
        file: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ScanFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CheckFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GraphAction {
    Verify,
    Claw,
    ExtractGq,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GenKind {
    Rook,
    Bipartite,
    Kneser,
    W3,
    Shrikhande,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum IncAction {
    Verify,
    Dual,
    Collinearity,
}

/// Non-success outcomes, mapped to exit codes 1, 2 and 3.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Input(String),
    Negative(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Input(_) => 2,
            Failure::Negative(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Input(m) | Failure::Negative(m) => m,
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<pgq::Error> for Failure {
    fn from(e: pgq::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("pgq: {}", failure.message());
            ExitCode::from(failure.code())
        }
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Scan { t_min, t_max, format, out } => run_scan(t_min, t_max, format, out.as_deref()),
        Command::Check { s, t, format } => run_check(s, t, format),
        Command::Bound { t, theta, beta } => run_bound(t, theta.zip(beta)),
        Command::Graph { action, file, s, t, out } => {
            let params = s.zip(t).map(|(s, t)| GqParams::new(s, t)).transpose()?;
            let g = format::read_graph(open_input(&file)?)?;
            match action {
                GraphAction::Verify => run_graph_verify(&g, params),
                GraphAction::Claw => run_graph_claw(&g, params),
                GraphAction::ExtractGq => run_extract(&g, params, out.as_deref()),
            }
        }
        Command::Gen { kind, m, out } => run_gen(kind, m, out.as_deref()),
        Command::Inc { action, file, out } => {
            let inc = format::read_incidence(open_input(&file)?)?;
            run_inc(action, &inc, out.as_deref())
        }
    }
}

fn open_input(file: &str) -> Result<Box<dyn BufRead>, Failure> {
    if file == "-" {
        return Ok(Box::new(BufReader::new(io::stdin())));
    }
    let f = File::open(file).map_err(|e| Failure::Input(format!("{file}: {e}")))?;
    Ok(Box::new(BufReader::new(f)))
}

fn write_output(out: Option<&Path>, body: impl FnOnce(&mut dyn Write) -> io::Result<()>) -> Outcome {
    match out {
        Some(path) => {
            let f = File::create(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            let mut w = BufWriter::new(f);
            body(&mut w)?;
            w.flush()?;
        }
        None => {
            let stdout = io::stdout();
            let mut w = BufWriter::new(stdout.lock());
            body(&mut w)?;
            w.flush()?;
        }
    }
    Ok(())
}

fn run_scan(t_min: u64, t_max: u64, format: ScanFormat, out: Option<&Path>) -> Outcome {
    let range = ScanRange::new(t_min, t_max).map_err(|e| Failure::Usage(e.to_string()))?;
    let rows = scan::scan(range)?;
    let format = match format {
        ScanFormat::Csv => OutputFormat::Csv,
        ScanFormat::Json => OutputFormat::Json,
    };
    write_output(out, |w| scan::emit(&rows, format, w))?;
    eprintln!("pgq: {} parameter sets excluded only by the quadratic bound", rows.len());
    Ok(())
}

fn run_check(s: u64, t: u64, format: CheckFormat) -> Outcome {
    let report = scan::check_one(GqParams::new(s, t)?)?;
    write_output(None, |w| match format {
        CheckFormat::Json => {
            serde_json::to_writer_pretty(&mut *w, &report.record())?;
            writeln!(w)
        }
        CheckFormat::Text => {
            let q = report.derived;
            writeln!(w, "params\t{s}\t{t}\t{}\t{}\t{}\t{}", q.v(), q.k(), q.lambda(), q.mu())?;
            for c in &report.verdicts {
                writeln!(w, "{}\t{}\t{}", c.name, c.verdict, c.witness)?;
            }
            writeln!(w, "classification\t{}", report.classification)
        }
    })?;
    if report.classification.is_ruled_out() {
        return Err(Failure::Negative(format!(
            "(s, t) = ({s}, {t}) is {}",
            report.classification
        )));
    }
    Ok(())
}

fn run_bound(t: u64, choice: Option<(u64, u64)>) -> Outcome {
    if let Some((theta, beta)) = choice {
        let choice = BoundChoice::new(t, theta, beta)?;
        let res = bounds::four_term_bound(t, choice)?;
        return write_output(None, |w| {
            for term in &res.terms {
                writeln!(w, "{}\t{}", term.source.as_str(), ratio_columns(&term.value))?;
            }
            writeln!(w, "max\t{}", ratio_columns(&res.bound))
        });
    }
    let neumaier = bounds::neumaier_bound(t)?;
    let quadratic = bounds::quadratic_bound(t)?;
    let optimal = bounds::optimal_four_term_bound(t)?;
    write_output(None, |w| {
        writeln!(w, "neumaier\t{neumaier}")?;
        writeln!(w, "quadratic\t{quadratic}")?;
        writeln!(
            w,
            "four-term\t{}\ttheta={}\tbeta={}",
            ratio_columns(&optimal.bound),
            optimal.choice.theta,
            optimal.choice.beta
        )
    })
}

fn resolve_params(g: &Graph, given: Option<GqParams>) -> Result<GqParams, Failure> {
    if let Some(p) = given {
        return Ok(p);
    }
    let q = graph::verify_srg(g).map_err(|e| Failure::Negative(format!("not strongly regular: {e}")))?;
    q.identify_gq_form()
        .ok_or_else(|| Failure::Negative(format!("{q} is not of generalized quadrangle form")))
}

fn run_graph_verify(g: &Graph, params: Option<GqParams>) -> Outcome {
    let q = graph::verify_srg(g).map_err(|e| match e {
        graph::SrgError::Empty => Failure::Input(e.to_string()),
        other => Failure::Negative(format!("not strongly regular: {other}")),
    })?;
    let form = q.identify_gq_form();
    write_output(None, |w| {
        writeln!(w, "srg\t{}\t{}\t{}\t{}", q.v(), q.k(), q.lambda(), q.mu())?;
        if let Some(p) = form {
            writeln!(w, "gq-form\t{}\t{}", p.s(), p.t())?;
        }
        Ok(())
    })?;
    if let Some(p) = params {
        let expected = p.srg()?;
        if expected != q {
            return Err(Failure::Negative(format!("graph is {q}, {p} requires {expected}")));
        }
    }
    Ok(())
}

fn run_graph_claw(g: &Graph, params: Option<GqParams>) -> Outcome {
    // without explicit parameters, compare against t + 1 only when the graph
    // has GQ-form parameters
    let params = match params {
        Some(p) => Some(p),
        None => resolve_params(g, None).ok(),
    };
    let Some(p) = params else {
        let mut histogram = BTreeMap::new();
        for c in claw_numbers(g) {
            *histogram.entry(c).or_insert(0usize) += 1;
        }
        return write_histogram(&histogram);
    };
    let census = graph::claw_lower_bound_check(g, p).map_err(|e| Failure::Negative(e.to_string()))?;
    write_histogram(&census.histogram)?;
    if !census.passed() {
        return Err(Failure::Negative(format!(
            "minimum claw number {} is below t + 1 = {}",
            census.min().unwrap_or(0),
            p.t() + 1
        )));
    }
    match census.first_excess() {
        Some((x, c)) => eprintln!("pgq: vertex {x} has claw number {c} > t + 1 = {}", p.t() + 1),
        None => eprintln!("pgq: every claw number equals t + 1 = {}", p.t() + 1),
    }
    Ok(())
}

fn write_histogram(histogram: &BTreeMap<usize, usize>) -> Outcome {
    write_output(None, |w| {
        writeln!(w, "claw\tcount")?;
        for (c, n) in histogram {
            writeln!(w, "{c}\t{n}")?;
        }
        Ok(())
    })
}

fn run_extract(g: &Graph, params: Option<GqParams>, out: Option<&Path>) -> Outcome {
    let p = resolve_params(g, params)?;
    let inc = incidence::extract_gq(g, p).map_err(|e| match e {
        ExtractError::PseudoGq { .. } | ExtractError::NotStronglyRegular(_) => {
            Failure::Negative(e.to_string())
        }
        other => Failure::Input(other.to_string()),
    })?;
    write_output(out, |w| format::write_incidence(&inc, w))
}

fn run_gen(kind: GenKind, m: Option<usize>, out: Option<&Path>) -> Outcome {
    let name = match kind {
        GenKind::Rook => "rook",
        GenKind::Bipartite => "bipartite",
        GenKind::Kneser => "kneser",
        GenKind::W3 => "w3",
        GenKind::Shrikhande => "shrikhande",
    };
    let g = generators::by_name(name, m).map_err(|e| Failure::Usage(e.to_string()))?;
    write_output(out, |w| format::write_graph(&g, w))
}

fn run_inc(action: IncAction, inc: &pgq::IncidenceStructure, out: Option<&Path>) -> Outcome {
    incidence::verify_axioms(inc)
        .map_err(|e| Failure::Negative(format!("not a generalized quadrangle: {e}")))?;
    match action {
        IncAction::Verify => {
            let p = inc.params();
            write_output(out, |w| {
                writeln!(w, "ok\t{}\t{}\t{}\t{}", inc.points(), inc.lines().len(), p.s(), p.t())
            })
        }
        IncAction::Dual => {
            let d = incidence::dual(inc)?;
            write_output(out, |w| format::write_incidence(&d, w))
        }
        IncAction::Collinearity => {
            let g = incidence::collinearity_graph(inc);
            write_output(out, |w| format::write_graph(&g, w))
        }
    }
}
