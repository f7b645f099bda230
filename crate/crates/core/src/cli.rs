//! The `onegate` command line.
//!
//! Exit codes: 0 on success, 1 when synthesis cannot separate the data or
//! verification finds a disagreement away from every cut hyperplane, 2 for
//! usage errors and unreadable inputs.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::chain_net::{lower_to_chain, ChainNetwork};
use crate::dnf_net::{build_dnf, DnfNetwork};
use crate::error::Error;
use crate::geometry::{BoundingBox, InputBound, Point, PolytopeSpec};
use crate::io::{
    dataset_to_csv, parse_dataset_csv, parse_networks, serialize_networks, serialize_report, DecisionMap,
    NetworkSpecDocument,
};
use crate::synth::{synthesize, BlobsConfig};
use crate::verify::{check_equivalence, sample_ball, DEFAULT_EPSILON_FACTOR};

#[derive(Debug, Parser)]
#[command(
    name = "onegate",
    version,
    about = "Build, lower and cross-check one-gate-per-layer classifiers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum NetKind {
    Dnf,
    Chain,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RenderKind {
    Dnf,
    Chain,
    Diff,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Enclose positive clusters in polytopes and build both networks.
    Synth {
        #[arg(long)]
        data: PathBuf,
        /// Enclosure margin; defaults to 1% of the data's bounding-box diagonal.
        #[arg(long)]
        margin: Option<f64>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Rebuild the chain network from a document's polytopes.
    Lower {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Input norm bound L; defaults to the bound stored in the document.
        #[arg(long)]
        bound: Option<f64>,
    },
    /// Classify one point.
    Eval {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long, value_enum)]
        net: NetKind,
        /// Comma-separated coordinates.
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        /// Print every layer's bits.
        #[arg(long)]
        trace: bool,
    },
    /// Compare the DNF and chain networks on points sampled from ‖x‖ <= L.
    Verify {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Boundary-exclusion radius; defaults to 1e-9 times the sampling box diagonal.
        #[arg(long)]
        epsilon: Option<f64>,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Rasterize a decision map of a 2-D network as binary PPM.
    Render {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long, value_enum)]
        net: RenderKind,
        /// Region as x0,y0,x1,y1.
        #[arg(long = "box", allow_hyphen_values = true)]
        region: String,
        /// Image size as WxH.
        #[arg(long)]
        size: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Write a demo dataset: three positive islands on a negative background.
    Gen {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Omit the cluster id column.
        #[arg(long)]
        no_ids: bool,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug)]
enum Failure {
    /// Bad flags or unreadable input: exit 2.
    Usage(String),
    /// The pipeline ran and rejected the data or the networks: exit 1.
    Rejected(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Rejected(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Rejected(m) => m,
        }
    }
}

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn write(path: &Path, bytes: &[u8]) -> Result<(), Failure> {
    fs::write(path, bytes).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn load_doc(path: &Path) -> Result<NetworkSpecDocument, Failure> {
    parse_networks(&read(path)?).map_err(|e| usage(format!("{}: {e}", path.display())))
}

struct Loaded {
    polytopes: Vec<PolytopeSpec>,
    dnf: DnfNetwork,
    chain: Option<ChainNetwork>,
}

fn load_networks(path: &Path) -> Result<Loaded, Failure> {
    let doc = load_doc(path)?;
    let polytopes = doc.to_polytopes().map_err(usage)?;
    let dnf = match doc.to_dnf().map_err(usage)? {
        Some(d) => d,
        None => build_dnf(&polytopes).map_err(usage)?,
    };
    let chain = doc.to_chain().map_err(usage)?;
    Ok(Loaded { polytopes, dnf, chain })
}

fn require_chain(chain: Option<ChainNetwork>) -> Result<ChainNetwork, Failure> {
    chain.ok_or_else(|| usage("document has no chain network; run `onegate lower` first"))
}

fn parse_floats(s: &str, what: &str) -> Result<Vec<f64>, Failure> {
    s.split(',')
        .map(|f| {
            f.trim()
                .parse::<f64>()
                .map_err(|_| usage(format!("{what}: not a number: `{f}`")))
        })
        .collect()
}

fn parse_size(s: &str) -> Result<(usize, usize), Failure> {
    let bad = || usage(format!("--size must look like 64x48, got `{s}`"));
    let (w, h) = s.split_once(['x', 'X']).ok_or_else(bad)?;
    Ok((w.parse().map_err(|_| bad())?, h.parse().map_err(|_| bad())?))
}

fn bits(b: &[bool]) -> String {
    b.iter()
        .map(|&x| if x { "1" } else { "0" })
        .collect::<Vec<_>>()
        .join(" ")
}

fn pipeline_error(e: Error) -> Failure {
    match e {
        Error::SeparationFailure { .. } | Error::MarginTooSmall { .. } | Error::AccuracyShortfall { .. } => {
            Failure::Rejected(e.to_string())
        }
        other => usage(other),
    }
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Failure> {
    let io = |e: std::io::Error| usage(e);
    match command {
        Command::Synth {
            data,
            margin,
            out: path,
        } => {
            let dataset = parse_dataset_csv(&read(&data)?).map_err(|e| usage(format!("{}: {e}", data.display())))?;
            let margin = margin.unwrap_or_else(|| dataset.default_margin());
            let result = synthesize(&dataset, margin).map_err(pipeline_error)?;
            write(
                &path,
                serialize_networks(&NetworkSpecDocument::from_synthesis(&result)).as_bytes(),
            )?;
            let stats = result.chain.stats();
            writeln!(out, "polytopes {}", result.polytopes.len()).map_err(io)?;
            writeln!(out, "cuts {}", stats.cuts).map_err(io)?;
            writeln!(out, "depth {}", stats.depth).map_err(io)?;
            writeln!(out, "margin {}", margin).map_err(io)?;
            writeln!(
                out,
                "accuracy dnf {} chain {}",
                result.train_accuracy_dnf, result.train_accuracy_chain
            )
            .map_err(io)?;
        }
        Command::Lower { spec, out: path, bound } => {
            let mut doc = load_doc(&spec)?;
            let polytopes = doc.to_polytopes().map_err(usage)?;
            let l = match (bound, &doc.chain) {
                (Some(l), _) => l,
                (None, Some(c)) => c.l,
                (None, None) => return Err(usage("no stored bound L; pass --bound")),
            };
            let bound = InputBound::new(l).map_err(usage)?;
            let dnf = build_dnf(&polytopes).map_err(usage)?;
            let chain = lower_to_chain(&polytopes, bound).map_err(usage)?;
            let synthesis = doc.synthesis.take();
            let doc = NetworkSpecDocument {
                synthesis,
                ..NetworkSpecDocument::new(&polytopes, Some(&dnf), Some(&chain))
            };
            write(&path, serialize_networks(&doc).as_bytes())?;
            let stats = chain.stats();
            writeln!(
                out,
                "depth {} modules {} S {} L {}",
                stats.depth, stats.modules, stats.carry, stats.bound
            )
            .map_err(io)?;
        }
        Command::Eval {
            spec,
            net,
            point,
            trace,
        } => {
            let loaded = load_networks(&spec)?;
            let p = Point::new(parse_floats(&point, "--point")?).map_err(usage)?;
            match net {
                NetKind::Dnf => {
                    let t = loaded.dnf.eval(&p).map_err(usage)?;
                    writeln!(out, "output {}", t.output as u8).map_err(io)?;
                    if trace {
                        writeln!(out, "cuts {}", bits(&t.cut_bits)).map_err(io)?;
                        writeln!(out, "and {}", bits(&t.and_bits)).map_err(io)?;
                        writeln!(out, "or {}", t.output as u8).map_err(io)?;
                    }
                }
                NetKind::Chain => {
                    let chain = require_chain(loaded.chain)?;
                    let t = chain.eval(&p).map_err(usage)?;
                    if t.exceeds_bound {
                        writeln!(
                            err,
                            "warning: ‖x‖ = {} exceeds L = {}; carry dominance is not guaranteed",
                            p.norm(),
                            chain.bound().value()
                        )
                        .map_err(io)?;
                    }
                    writeln!(out, "output {}", t.output() as u8).map_err(io)?;
                    if trace {
                        writeln!(out, "trace {}", bits(&t.bits)).map_err(io)?;
                    }
                }
            }
        }
        Command::Verify {
            spec,
            samples,
            seed,
            epsilon,
            report,
        } => {
            let loaded = load_networks(&spec)?;
            let chain = require_chain(loaded.chain)?;
            let l = chain.bound().value();
            let n = chain.dim();
            let points = if l > 0.0 {
                sample_ball(l, n, samples, seed).map_err(usage)?
            } else {
                vec![Point::new(vec![0.0; n]).map_err(usage)?]
            };
            let epsilon = epsilon.unwrap_or(DEFAULT_EPSILON_FACTOR * 2.0 * l * (n as f64).sqrt());
            let r = check_equivalence(&loaded.dnf, &chain, &loaded.polytopes, &points, epsilon)
                .map_err(usage)?
                .with_seed(seed);
            if let Some(path) = report {
                write(&path, serialize_report(&r).as_bytes())?;
            }
            let beyond = r.beyond_epsilon().count();
            writeln!(
                out,
                "points {} agreements {} disagreements {} beyond_epsilon {} epsilon {:e}",
                r.points_tested,
                r.agreements,
                r.disagreements.len(),
                beyond,
                r.epsilon
            )
            .map_err(io)?;
            if !chain.carry_dominates() {
                writeln!(
                    err,
                    "warning: S = {} does not exceed √(L² + 1) for L = {l}",
                    chain.carry()
                )
                .map_err(io)?;
            }
            if beyond > 0 {
                return Err(Failure::Rejected(format!(
                    "{beyond} disagreement(s) lie farther than {:e} from every cut hyperplane",
                    r.epsilon
                )));
            }
        }
        Command::Render {
            spec,
            net,
            region,
            size,
            out: path,
        } => {
            let loaded = load_networks(&spec)?;
            let corners = parse_floats(&region, "--box")?;
            let [x0, y0, x1, y1] = corners[..] else {
                return Err(usage("--box takes four numbers x0,y0,x1,y1"));
            };
            let region = BoundingBox::new(vec![x0, y0], vec![x1, y1]).map_err(usage)?;
            let (w, h) = parse_size(&size)?;
            let dnf = &loaded.dnf;
            let map = match net {
                RenderKind::Dnf => DecisionMap::single(region, w, h, |p| dnf.classify(p)),
                RenderKind::Chain => {
                    let chain = require_chain(loaded.chain)?;
                    DecisionMap::single(region, w, h, |p| chain.classify(p))
                }
                RenderKind::Diff => {
                    let chain = require_chain(loaded.chain)?;
                    DecisionMap::diff(region, w, h, |p| dnf.classify(p), |p| chain.classify(p))
                }
            }
            .map_err(usage)?;
            write(&path, &map.to_ppm())?;
            writeln!(out, "wrote {}x{} image, {} differing pixels", w, h, map.disagreements()).map_err(io)?;
        }
        Command::Gen {
            seed,
            no_ids,
            out: path,
        } => {
            let mut ds = BlobsConfig::three_islands().generate(seed).map_err(usage)?;
            if no_ids {
                ds = ds.without_cluster_ids();
            }
            write(&path, dataset_to_csv(&ds).as_bytes())?;
            writeln!(out, "wrote {} points", ds.len()).map_err(io)?;
        }
    }
    Ok(())
}

/// Runs the CLI on `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(()) => 0,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message());
            f.code()
        }
    }
}
