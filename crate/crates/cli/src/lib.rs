//! Command-line front end for `ladder-core`.
//!
//! Exit status: 0 when the property holds (or the command succeeded), 1 when
//! it does not, 2 on any error.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use ladder_core::decision::{planarity_report_naive, Witness};
use ladder_core::format::{
    certificate_to_json, certificate_to_text, embedding_from_json, embedding_to_json, parse_instance,
    serialize_instance,
};
use ladder_core::oracle::{oracle_is_outerplanar, oracle_is_planar, to_simple_graph, DEFAULT_BUDGET};
use ladder_core::random::random_instance;
use ladder_core::svg::render_svg;
use ladder_core::{
    extract_k33_witness, extract_outerplanar_witness, is_outerplanar, is_planar, outerplanar_embedding,
    planar_embedding, planarity_report, verify_certificate, verify_embedding, Error, GeneralizedLadder,
};

pub const CSV_HEADER: &str = "m,n,k,t_indexed_ns,t_naive_ns,t_oracle_ns,verdict";

/// Vertex count above which drawings and oracle graphs are refused rather
/// than allocated.
const MAX_VERTICES: usize = 10_000_000;

/// Largest number of cross edges `random` and `bench` will generate.
const MAX_GENERATED_EDGES: usize = 50_000_000;

/// Largest `m + n` for which `bench` tries the oracle at all.
const BENCH_ORACLE_VERTICES: usize = 24;

#[derive(Parser, Debug)]
#[command(
    name = "ladder",
    version,
    about = "Planarity and outerplanarity of generalized ladders"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide planarity (or outerplanarity with --outer).
    Check {
        file: PathBuf,
        #[arg(long)]
        outer: bool,
        /// Cross-check against the exhaustive rotation-system oracle.
        #[arg(long)]
        oracle: bool,
        /// Print the quadrant flags of every cross edge.
        #[arg(long)]
        report: bool,
        /// Oracle budget in rotation systems.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Emit a forbidden-subdivision certificate for a negative answer.
    Witness {
        file: PathBuf,
        #[arg(long)]
        outer: bool,
        #[arg(long, value_enum, default_value_t = CertFormat::Json)]
        format: CertFormat,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Emit an integer-coordinate embedding for a positive answer.
    Embed {
        file: PathBuf,
        #[arg(long)]
        outer: bool,
        #[arg(long, value_enum, default_value_t = DrawFormat::Json)]
        format: DrawFormat,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check an embedding JSON file against an instance.
    Verify { file: PathBuf, embedding: PathBuf },
    /// Write a seeded random instance.
    Random {
        #[arg(long)]
        seed: u64,
        #[arg(short)]
        m: usize,
        #[arg(short)]
        n: usize,
        #[arg(short)]
        k: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Time indexed vs naive decisions (and the oracle on tiny inputs) as CSV.
    Bench {
        #[arg(long)]
        seed: u64,
        /// Sizes as `K` (an (K, K)-ladder with K cross edges) or `MxNxK`.
        #[arg(long, value_delimiter = ',', num_args = 1.., required = true)]
        sizes: Vec<String>,
        /// Skip the quadratic scan above this many cross edges.
        #[arg(long, default_value_t = 20_000)]
        naive_limit: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum CertFormat {
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum DrawFormat {
    Json,
    Svg,
}

enum Failure {
    /// The property does not hold; message goes to stdout.
    Negative(String),
    /// Something went wrong; message goes to stderr.
    Error(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e.to_string())
    }
}

type Outcome = std::result::Result<String, Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let (text, code) = match dispatch(cli.command) {
        Ok(text) => (text, 0),
        Err(Failure::Negative(text)) => (text, 1),
        Err(Failure::Error(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            return 2;
        }
    };
    if out.write_all(text.as_bytes()).and_then(|_| out.flush()).is_err() {
        return 2;
    }
    code
}

fn dispatch(command: Command) -> Outcome {
    match command {
        Command::Check {
            file,
            outer,
            oracle,
            report,
            budget,
        } => check(&load(&file)?, outer, oracle, report, budget),
        Command::Witness {
            file,
            outer,
            format,
            output,
        } => witness(&load(&file)?, outer, format, output.as_deref()),
        Command::Embed {
            file,
            outer,
            format,
            output,
        } => embed(&load(&file)?, outer, format, output.as_deref()),
        Command::Verify { file, embedding } => {
            let g = load(&file)?;
            let emb = embedding_from_json(&read(&embedding)?).map_err(|e| in_file(&embedding, e))?;
            match verify_embedding(&g, &emb) {
                Ok(true) => Ok("valid embedding\n".into()),
                Ok(false) => Err(Failure::Negative("invalid embedding\n".into())),
                Err(e) => Err(Failure::Negative(format!("invalid embedding: {e}\n"))),
            }
        }
        Command::Random { seed, m, n, k, output } => {
            ensure_generable(k)?;
            let g = random_instance(seed, m, n, k)?;
            emit(serialize_instance(&g), output.as_deref())
        }
        Command::Bench {
            seed,
            sizes,
            naive_limit,
            budget,
            output,
        } => {
            let sizes = sizes.iter().map(|s| parse_size(s)).collect::<Result<Vec<_>, _>>()?;
            emit(bench(seed, &sizes, naive_limit, budget)?, output.as_deref())
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Error(format!("{}: {e}", path.display())))
}

fn in_file(path: &Path, e: Error) -> Failure {
    Failure::Error(format!("{}: {e}", path.display()))
}

fn load(path: &Path) -> Result<GeneralizedLadder, Failure> {
    parse_instance(&read(path)?).map_err(|e| in_file(path, e))
}

/// Writes `body` to `path` and returns a short note, or returns `body` itself
/// for stdout.
fn emit(body: String, path: Option<&Path>) -> Outcome {
    match path {
        None => Ok(body),
        Some(p) => {
            fs::write(p, body).map_err(|e| Failure::Error(format!("{}: {e}", p.display())))?;
            Ok(format!("wrote {}\n", p.display()))
        }
    }
}

fn ensure_drawable(g: &GeneralizedLadder) -> Result<(), Failure> {
    if g.m().saturating_add(g.n()) > MAX_VERTICES {
        return Err(Failure::Error(format!(
            "a ({}, {})-ladder has more than {MAX_VERTICES} vertices",
            g.m(),
            g.n()
        )));
    }
    Ok(())
}

fn ensure_generable(k: usize) -> Result<(), Failure> {
    if k > MAX_GENERATED_EDGES {
        return Err(Failure::Error(format!(
            "refusing to generate more than {MAX_GENERATED_EDGES} cross edges"
        )));
    }
    Ok(())
}

fn check(g: &GeneralizedLadder, outer: bool, oracle: bool, report: bool, budget: u64) -> Outcome {
    let mut text = String::new();
    let verdict = if outer {
        let r = is_outerplanar(g);
        match (&r.outerplanar_condition, &r.witness) {
            (Some(c), _) => text.push_str(&format!("outerplanar (condition {c})\n")),
            (None, Some(Witness::Outerplanarity { clause_i, clause_ii })) => text.push_str(&format!(
                "not outerplanar\nclause i fails at {} via {}\nclause ii fails at {} via {}\n",
                clause_i.edge, clause_i.via, clause_ii.edge, clause_ii.via
            )),
            _ => return Err(Failure::Error("inconsistent outerplanarity report".into())),
        }
        r.verdict
    } else {
        let r = is_planar(g);
        match r.witness_edge() {
            None => text.push_str("planar\n"),
            Some(e) => text.push_str(&format!("not planar\nedge {e} has all four quadrants occupied\n")),
        }
        r.verdict
    };
    if report {
        text.push_str("l r up_down up_up down_up down_down\n");
        for (e, f) in planarity_report(g).per_edge_flags.unwrap_or_default() {
            let b = |x: bool| if x { 1 } else { 0 };
            text.push_str(&format!(
                "{} {} {} {} {} {}\n",
                e.l,
                e.r,
                b(f.up_down),
                b(f.up_up),
                b(f.down_up),
                b(f.down_down)
            ));
        }
    }
    if oracle {
        ensure_drawable(g)?;
        let h = to_simple_graph(g);
        let answer = if outer {
            oracle_is_outerplanar(&h, budget)
        } else {
            oracle_is_planar(&h, budget)
        };
        match answer {
            Ok(o) if o == verdict => text.push_str("oracle: agrees\n"),
            Ok(o) => {
                return Err(Failure::Error(format!(
                    "oracle disagrees: characterization says {verdict}, oracle says {o}"
                )))
            }
            Err(Error::BudgetExceeded { size, budget }) => text.push_str(&format!(
                "oracle: skipped ({size} rotation systems exceed budget {budget})\n"
            )),
            Err(e) => return Err(e.into()),
        }
    }
    if verdict {
        Ok(text)
    } else {
        Err(Failure::Negative(text))
    }
}

fn witness(g: &GeneralizedLadder, outer: bool, format: CertFormat, output: Option<&Path>) -> Outcome {
    let found = if outer {
        extract_outerplanar_witness(g)
    } else {
        extract_k33_witness(g)
    };
    let cert = match found {
        Ok(c) => c,
        Err(Error::NotApplicable(_)) => {
            let what = if outer { "outerplanar" } else { "planar" };
            return Err(Failure::Negative(format!("{what}; no certificate\n")));
        }
        Err(e) => return Err(e.into()),
    };
    if !verify_certificate(g, &cert) {
        return Err(Failure::Error("extracted certificate failed verification".into()));
    }
    let body = match format {
        CertFormat::Text => certificate_to_text(&cert),
        CertFormat::Json => certificate_to_json(&cert) + "\n",
    };
    emit(body, output)
}

fn embed(g: &GeneralizedLadder, outer: bool, format: DrawFormat, output: Option<&Path>) -> Outcome {
    ensure_drawable(g)?;
    let built = if outer {
        outerplanar_embedding(g)
    } else {
        planar_embedding(g)
    };
    let emb = match built {
        Ok(emb) => emb,
        Err(Error::NotPlanar(e)) => {
            return Err(Failure::Negative(format!(
                "not planar; edge {e} has all four quadrants occupied\n"
            )))
        }
        Err(Error::NotOuterplanar) => return Err(Failure::Negative("not outerplanar\n".into())),
        Err(e) => return Err(e.into()),
    };
    if !verify_embedding(g, &emb)? {
        return Err(Failure::Error("constructed embedding failed verification".into()));
    }
    let body = match format {
        DrawFormat::Json => embedding_to_json(&emb) + "\n",
        DrawFormat::Svg => render_svg(&emb, g.m(), g.n()),
    };
    emit(body, output)
}

fn parse_size(s: &str) -> Result<(usize, usize, usize), Failure> {
    let bad = || Failure::Error(format!("bad size `{s}`: expected K or MxNxK"));
    let parts: Vec<usize> = s
        .split('x')
        .map(|p| p.trim().parse::<usize>())
        .collect::<Result<_, _>>()
        .map_err(|_| bad())?;
    match parts[..] {
        [k] => Ok((k.max(1), k.max(1), k)),
        [m, n, k] => Ok((m, n, k)),
        _ => Err(bad()),
    }
}

/// One CSV row per size, in input order. Each instance is drawn from its own
/// seed `seed + index`. Skipped measurements are left empty.
fn bench(seed: u64, sizes: &[(usize, usize, usize)], naive_limit: usize, budget: u64) -> Result<String, Failure> {
    let mut csv = format!("{CSV_HEADER}\n");
    for (i, &(m, n, k)) in sizes.iter().enumerate() {
        ensure_generable(k)?;
        let g = random_instance(seed.wrapping_add(i as u64), m, n, k)?;

        let start = Instant::now();
        let verdict = is_planar(&g).verdict;
        let t_indexed = start.elapsed().as_nanos().to_string();

        let t_naive = if k <= naive_limit {
            let start = Instant::now();
            let naive = planarity_report_naive(&g).verdict;
            let t = start.elapsed().as_nanos();
            if naive != verdict {
                return Err(Failure::Error(format!("naive scan disagrees on size {m}x{n}x{k}")));
            }
            t.to_string()
        } else {
            String::new()
        };

        let mut t_oracle = String::new();
        if m + n <= BENCH_ORACLE_VERTICES {
            let h = to_simple_graph(&g);
            let start = Instant::now();
            match oracle_is_planar(&h, budget) {
                Ok(o) => {
                    t_oracle = start.elapsed().as_nanos().to_string();
                    if o != verdict {
                        return Err(Failure::Error(format!("oracle disagrees on size {m}x{n}x{k}")));
                    }
                }
                Err(Error::BudgetExceeded { .. }) => {}
                Err(e) => return Err(e.into()),
            }
        }

        let verdict = if verdict { "planar" } else { "nonplanar" };
        csv.push_str(&format!("{m},{n},{k},{t_indexed},{t_naive},{t_oracle},{verdict}\n"));
    }
    Ok(csv)
}
