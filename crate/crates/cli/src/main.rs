use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use combinv::abacus::Abacus;
use combinv::brick::{brick_local_g, enumerate_obt, obt_system};
use combinv::framework::{
    build_a, build_b, local_lhs, local_terms, square_fold_b, square_restrict_a, verify_inversion, verify_local,
    LocalSystem,
};
use combinv::involutions::{
    kostka_involution, rht_involution, verify_pairing, Involution, KostkaPair, PairingApp, RhtTriple,
};
use combinv::kostka::{enumerate_ssyt, kostka_pair, kostka_system, srht_find};
use combinv::matrix::IndexedMatrix;
use combinv::rational::to_text;
use combinv::refine::{cbt_find, local_g_refine, refine_system, weighted_system};
use combinv::rimhook::{enumerate_rht, rimhook_pair, rimhook_system};
use combinv::shapes::parse_parts;
use combinv::{Composition, Partition, ShapeKey};

#[derive(Parser)]
#[command(
    name = "combinv",
    version,
    about = "Transition matrices built from local identities, and the involutions behind them"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum App {
    Kostka,
    Rimhook,
    Refine,
    RefineWeighted,
    Brick,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Side {
    #[value(name = "A")]
    A,
    #[value(name = "B")]
    B,
    #[value(name = "Asq")]
    Asq,
    #[value(name = "Bsq")]
    Bsq,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Ascii,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Ssyt,
    Srht,
    Rht,
    Cbt,
    Obt,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InvolutionApp {
    Kostka,
    Rimhook,
}

#[derive(Subcommand)]
enum Command {
    /// Print A_n, B_n or their square versions.
    Matrix {
        #[arg(long, value_enum)]
        app: App,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "A")]
        side: Side,
        #[arg(long, value_enum, default_value = "ascii")]
        format: Format,
    },
    /// Check A_n B_n = I and every local identity at size n.
    Verify {
        #[arg(long, value_enum)]
        app: App,
        #[arg(long)]
        n: usize,
    },
    /// Print G(λ,μ) with its weights and the signed sum.
    Local {
        #[arg(long, value_enum)]
        app: App,
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
    },
    /// Stream tableaux of one shape and content, one JSON object per line.
    Enumerate {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        shape: String,
        #[arg(long)]
        content: String,
    },
    /// Show how G(λ,μ) cancels; with --objects, check the involution on all of P_{λ,μ}.
    Pair {
        #[arg(long, value_enum)]
        app: App,
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        objects: bool,
    },
    /// Apply the involution to the object(s) in a JSON file.
    Involute {
        #[arg(long, value_enum)]
        app: InvolutionApp,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        trace: bool,
    },
    /// Print the abacus of a partition, optionally after one bead move.
    Abacus {
        #[arg(long)]
        partition: String,
        #[arg(long)]
        beads: Option<usize>,
        #[arg(long, num_args = 2, value_names = ["FROM", "TO"])]
        r#move: Option<Vec<usize>>,
    },
}

enum Failure {
    Verify(String),
    Usage(String),
    Input(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verify(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Input(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Verify(m) | Failure::Usage(m) | Failure::Input(m) => m,
        }
    }
}

type Outcome = Result<String, Failure>;

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

fn input(e: impl ToString) -> Failure {
    Failure::Input(e.to_string())
}

trait FromParts: ShapeKey {
    fn from_parts(parts: Vec<usize>) -> combinv::Result<Self>;
}

impl FromParts for Partition {
    fn from_parts(parts: Vec<usize>) -> combinv::Result<Self> {
        Partition::new(parts)
    }
}

impl FromParts for Composition {
    fn from_parts(parts: Vec<usize>) -> combinv::Result<Self> {
        Composition::new(parts)
    }
}

fn shape<S: FromParts>(text: &str) -> Result<S, Failure> {
    parse_parts(text).and_then(S::from_parts).map_err(usage)
}

fn line(v: &impl Serialize) -> String {
    let mut s = serde_json::to_string(v).expect("serializable");
    s.push('\n');
    s
}

fn render<R: ShapeKey, C: ShapeKey>(m: &IndexedMatrix<R, C>, format: Format) -> String {
    match format {
        Format::Json => line(&m.to_json()),
        Format::Csv => m.to_csv(),
        Format::Ascii => m.to_ascii(),
    }
}

/// Runs `$body` with `$sys` bound to the system for `$app`.
macro_rules! with_system {
    ($app:expr, $sys:ident => $body:expr) => {
        match $app {
            App::Kostka => {
                let $sys = kostka_system();
                $body
            }
            App::Rimhook => {
                let $sys = rimhook_system();
                $body
            }
            App::Refine => {
                let $sys = refine_system();
                $body
            }
            App::RefineWeighted => {
                let $sys = weighted_system();
                $body
            }
            App::Brick => {
                let $sys = obt_system();
                $body
            }
        }
    };
}

fn square_matrix<T: LocalSystem<Shape = Partition>>(sys: &T, n: usize, side: Side, format: Format) -> Outcome {
    match side {
        Side::Asq => Ok(render(&square_restrict_a(&build_a(sys, n)).map_err(usage)?, format)),
        _ => Ok(render(&square_fold_b(&build_b(sys, n)), format)),
    }
}

fn matrix(app: App, n: usize, side: Side, format: Format) -> Outcome {
    match side {
        Side::A => Ok(with_system!(app, sys => render(&build_a(&sys, n), format))),
        Side::B => Ok(with_system!(app, sys => render(&build_b(&sys, n), format))),
        Side::Asq | Side::Bsq => match app {
            App::Kostka => square_matrix(&kostka_system(), n, side, format),
            App::Rimhook => square_matrix(&rimhook_system(), n, side, format),
            App::Brick => square_matrix(&obt_system(), n, side, format),
            App::Refine | App::RefineWeighted => Err(usage("square matrices need partition-indexed rows")),
        },
    }
}

fn verify_system<T: LocalSystem>(sys: &T, n: usize) -> Outcome {
    let inversion = verify_inversion(sys, n);
    let local = verify_local(sys, n);
    let out = line(&json!({
        "app": sys.name(),
        "n": n,
        "inversion": inversion,
        "local": local,
    }));
    if inversion && local.passed() {
        Ok(out)
    } else {
        Err(Failure::Verify(out))
    }
}

fn local_system<T: LocalSystem>(sys: &T, lambda: &str, mu: &str) -> Outcome
where
    T::Shape: FromParts,
{
    let (l, m): (T::Shape, T::Shape) = (shape(lambda)?, shape(mu)?);
    let terms = local_terms(sys, &l, &m).map_err(usage)?;
    let total = local_lhs(sys, &l, &m).map_err(usage)?;
    Ok(line(&json!({
        "app": sys.name(),
        "lambda": l,
        "mu": m,
        "terms": terms,
        "sum": to_text(&total),
    })))
}

fn enumerate(kind: Kind, shape_text: &str, content_text: &str) -> Outcome {
    let content: Composition = shape(content_text)?;
    let mut lines: Vec<Value> = Vec::new();
    match kind {
        Kind::Ssyt => {
            for f in enumerate_ssyt(&shape(shape_text)?, &content).map_err(usage)? {
                lines.push(json!({ "filling": f }));
            }
        }
        Kind::Srht => {
            if let Some((f, sign)) = srht_find(&shape(shape_text)?, &content).map_err(usage)? {
                lines.push(json!({ "filling": f, "sign": sign }));
            }
        }
        Kind::Rht => {
            for (f, sign) in enumerate_rht(&shape(shape_text)?, &content).map_err(usage)? {
                lines.push(json!({ "filling": f, "sign": sign }));
            }
        }
        Kind::Cbt => {
            if let Some((t, sign)) = cbt_find(&shape(shape_text)?, &content).map_err(usage)? {
                lines.push(json!({ "cbt": t, "sign": sign }));
            }
        }
        Kind::Obt => {
            for t in enumerate_obt(&shape(shape_text)?, &content).map_err(usage)? {
                lines.push(serde_json::to_value(t).expect("serializable"));
            }
        }
    }
    Ok(lines.iter().map(|v| format!("{v}\n")).collect())
}

fn pair(app: App, lambda: &str, mu: &str, objects: bool) -> Outcome {
    if objects {
        let which = match app {
            App::Kostka => PairingApp::Kostka,
            App::Rimhook => PairingApp::Rimhook,
            _ => return Err(usage("--objects is available for kostka and rimhook")),
        };
        let report = verify_pairing(which, &shape(lambda)?, &shape(mu)?).map_err(usage)?;
        let out = line(&report);
        return if report.passed() { Ok(out) } else { Err(Failure::Verify(out)) };
    }
    let value = match app {
        App::Kostka => serde_json::to_value(kostka_pair(&shape(lambda)?, &shape(mu)?).map_err(usage)?),
        App::Rimhook => serde_json::to_value(rimhook_pair(&shape(lambda)?, &shape(mu)?).map_err(usage)?),
        App::Brick => serde_json::to_value(brick_local_g(&shape(lambda)?, &shape(mu)?).map_err(usage)?),
        App::Refine | App::RefineWeighted => {
            let g = local_g_refine(&shape(lambda)?, &shape(mu)?).map_err(usage)?;
            let members: Vec<Value> =
                g.into_iter().map(|(gamma, sign)| json!({ "gamma": gamma, "sign": sign })).collect();
            Ok(json!({ "members": members }))
        }
    };
    Ok(line(&value.expect("serializable")))
}

/// A file holds one object or an array of them.
fn read_objects<T: serde::de::DeserializeOwned>(path: &PathBuf) -> Result<Vec<T>, Failure> {
    let text = fs::read_to_string(path).map_err(|e| input(format!("{}: {e}", path.display())))?;
    let value: Value = serde_json::from_str(&text).map_err(|e| input(format!("{}: {e}", path.display())))?;
    let items = match value {
        Value::Array(items) => items,
        other => vec![other],
    };
    items
        .into_iter()
        .map(|v| serde_json::from_value(v).map_err(|e| input(format!("{}: {e}", path.display()))))
        .collect()
}

fn show<T: Serialize>(results: Vec<Involution<T>>, trace: bool) -> String {
    let mut values: Vec<Value> = results
        .into_iter()
        .map(|r| {
            let mut v = serde_json::to_value(&r).expect("serializable");
            if !trace {
                v.as_object_mut().expect("object").remove("trace");
            }
            v
        })
        .collect();
    if values.len() == 1 {
        line(&values.remove(0))
    } else {
        line(&values)
    }
}

fn involute(app: InvolutionApp, path: &PathBuf, trace: bool) -> Outcome {
    match app {
        InvolutionApp::Kostka => {
            let objects: Vec<KostkaPair> = read_objects(path)?;
            let mut out = Vec::with_capacity(objects.len());
            for x in &objects {
                let checked = KostkaPair::new(x.s.clone(), x.t.clone()).map_err(input)?;
                if checked.content != x.content {
                    return Err(input("content does not match the fillings"));
                }
                out.push(kostka_involution(&checked).map_err(input)?);
            }
            Ok(show(out, trace))
        }
        InvolutionApp::Rimhook => {
            let objects: Vec<RhtTriple> = read_objects(path)?;
            let mut out = Vec::with_capacity(objects.len());
            for x in &objects {
                let checked = RhtTriple::new(x.s.clone(), x.t.clone(), x.sigma.clone()).map_err(input)?;
                out.push(rht_involution(&checked).map_err(input)?);
            }
            Ok(show(out, trace))
        }
    }
}

fn abacus(partition: &str, beads: Option<usize>, moves: Option<Vec<usize>>) -> Outcome {
    let lambda: Partition = shape(partition)?;
    let n = beads.unwrap_or(lambda.len());
    let ab = Abacus::from_partition(&lambda, n).map_err(usage)?;
    let mut out = json!({ "partition": lambda, "abacus": ab, "positions": ab.bead_positions() });
    if let Some(m) = moves {
        let (moved, sign) = ab.move_bead(m[0], m[1]).map_err(usage)?;
        out["move"] = json!({
            "from": m[0],
            "to": m[1],
            "abacus": moved,
            "partition": moved.to_partition(),
            "sign": sign,
        });
    }
    Ok(line(&out))
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Matrix { app, n, side, format } => matrix(app, n, side, format),
        Command::Verify { app, n } => with_system!(app, sys => verify_system(&sys, n)),
        Command::Local { app, lambda, mu } => with_system!(app, sys => local_system(&sys, &lambda, &mu)),
        Command::Enumerate { kind, shape, content } => enumerate(kind, &shape, &content),
        Command::Pair { app, lambda, mu, objects } => pair(app, &lambda, &mu, objects),
        Command::Involute { app, input, trace } => involute(app, &input, trace),
        Command::Abacus { partition, beads, r#move } => abacus(&partition, beads, r#move),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    match run(cli) {
        Ok(text) => {
            let _ = io::stdout().write_all(text.as_bytes());
            ExitCode::SUCCESS
        }
        Err(f) => {
            match &f {
                Failure::Verify(report) => {
                    let _ = io::stdout().write_all(report.as_bytes());
                }
                other => eprintln!("error: {}", other.message()),
            }
            ExitCode::from(f.code())
        }
    }
}
