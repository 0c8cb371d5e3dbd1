//! `gpw`: command-line front end of the graph product workbench.
//!
//! Exit codes: 0 for success or an affirmative verdict, 1 for a negative
//! verdict (or `UNKNOWN`), 2 for usage, parse and precondition errors.

mod input;

use std::collections::HashMap;
use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use gpw::classify::{census, raag_surface_subgroup, racg_surface_subgroup, witness_complex, WitnessKind};
use gpw::complexes::{LinkFailure, SignedDir};
use gpw::embeddings::{co_contraction_embedding, double_homomorphism, HomomorphismSpec, InjectivityReport};
use gpw::graphs::{all_graphs, WeakChordality};
use gpw::words::{Order, WordError};
use gpw::{Execution, GroupSpec, NormalForm, SimpleGraph, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use input::{parse_orders, parse_pair, read_text, ComplexInput, GraphInput, SpecInput};

#[derive(Debug, Parser)]
#[command(
    name = "gpw",
    version,
    about = "Graph products of cyclic groups: words, cube complexes, embeddings, classification"
)]
struct Cli {
    /// Write output to this file instead of standard output.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
    /// Run every check on the calling thread.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Graph operations.
    Graph {
        #[command(subcommand)]
        op: GraphOp,
    },
    /// Word arithmetic in a graph product.
    Word {
        #[command(subcommand)]
        op: WordOp,
    },
    /// Cube complexes `Z0` and `Zf` and their checks.
    Complex {
        #[command(subcommand)]
        op: ComplexOp,
    },
    /// Homomorphisms from doubles and co-contractions.
    Embed {
        #[command(subcommand)]
        op: EmbedOp,
    },
    /// Hyperbolic surface subgroup verdict for one graph.
    Classify {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, value_enum, default_value_t = Group::Racg)]
        group: Group,
        /// Print the certificate block behind a hole or antihole witness.
        #[arg(long)]
        certificate: bool,
    },
    /// Verdicts for every graph on `n` vertices as TSV.
    Census {
        #[arg(short)]
        n: usize,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Group {
    Racg,
    Raag,
}

#[derive(Debug, Subcommand)]
enum GraphOp {
    /// Complement graph.
    Opp(GraphInput),
    /// Induced subgraph on the given vertices.
    Induced {
        #[command(flatten)]
        graph: GraphInput,
        /// Comma-separated vertex labels.
        #[arg(long, value_delimiter = ',', required = true)]
        vertices: Vec<String>,
    },
    /// Contract an edge; the merged vertex is labelled `u*v`.
    Contract {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, value_parser = parse_pair)]
        edge: (String, String),
    },
    /// Contract an edge of the opposite graph and complement back.
    Cocontract {
        #[command(flatten)]
        graph: GraphInput,
        /// Edge of the opposite graph.
        #[arg(long, value_parser = parse_pair)]
        edge: (String, String),
    },
    /// Double of the graph minus the star of `t`, along the link of `t`.
    Double {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(short)]
        t: String,
    },
    /// An induced cycle of length at least `--min-len`.
    Hole {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, default_value_t = 5)]
        min_len: usize,
    },
    /// Weak chordality with a witness.
    Wc(GraphInput),
    /// Isomorphism to a second graph, printed as a vertex map.
    Iso {
        #[command(flatten)]
        graph: GraphInput,
        /// Named second graph.
        #[arg(long, conflicts_with = "other")]
        other_name: Option<String>,
        /// Second graph file.
        #[arg(long)]
        other: Option<PathBuf>,
    },
    /// graph6 codes of all isomorphism classes on `n` vertices.
    Enum {
        #[arg(short)]
        n: usize,
    },
}

#[derive(Debug, clap::Args)]
struct OneWord {
    #[command(flatten)]
    spec: SpecInput,
    /// Space-separated syllables `v^e`; empty or `1` for the identity.
    word: String,
}

#[derive(Debug, clap::Args)]
struct TwoWords {
    #[command(flatten)]
    spec: SpecInput,
    left: String,
    right: String,
}

#[derive(Debug, Subcommand)]
enum WordOp {
    /// Canonical normal form.
    Normalize(OneWord),
    /// Normal form of the product.
    Mul(TwoWords),
    /// Normal form of the inverse.
    Inv(OneWord),
    /// Equality in the group.
    Eq(TwoWords),
    /// Projection to every vertex group.
    Proj(OneWord),
    /// Membership in the kernel onto the product of all vertex groups.
    Kp0(OneWord),
    /// Membership in the kernel onto the product of the finite vertex groups.
    Kpf(OneWord),
}

#[derive(Debug, Subcommand)]
enum ComplexOp {
    /// Cube complex `Z0` over a window for infinite-order vertices.
    BuildZ0 {
        #[command(flatten)]
        spec: SpecInput,
        #[arg(long, value_parser = input::parse_window, allow_hyphen_values = true)]
        window: Option<(i64, i64)>,
    },
    /// Finite cover of `Zf` with cycles of length `q`.
    BuildZf {
        #[command(flatten)]
        spec: SpecInput,
        #[arg(short, long)]
        q: u32,
    },
    /// Cell counts, Euler characteristic and the three checks.
    Stats(ComplexInput),
    /// Flag condition at every vertex link.
    Npc(ComplexInput),
    /// Local isometry to the Salvetti complex.
    Special(ComplexInput),
    /// Closed surface recognition and Euler characteristic.
    Surface(ComplexInput),
}

#[derive(Debug, clap::Args)]
struct EmbedFlags {
    /// Use `t⁻¹ u t` instead of `t u t⁻¹`.
    #[arg(long)]
    mirror: bool,
    /// Append the relator report.
    #[arg(long)]
    verify: bool,
}

#[derive(Debug, Subcommand)]
enum EmbedOp {
    /// Homomorphism from the double along the link of `t`.
    Double {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(short)]
        t: String,
        #[arg(long)]
        orders: String,
        #[command(flatten)]
        flags: EmbedFlags,
    },
    /// Embedding from the co-contraction along an opposite edge `x,t`.
    Cocontract {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, value_parser = parse_pair)]
        edge: (String, String),
        #[arg(long)]
        orders: String,
        /// Order of the merged vertex; must equal that of the first endpoint.
        #[arg(long)]
        y_order: Option<Order>,
        #[command(flatten)]
        flags: EmbedFlags,
    },
    /// Relator check of a homomorphism file.
    Verify {
        #[arg(long)]
        hom: Option<PathBuf>,
    },
    /// Compare images of all source elements up to length `L`.
    InjectSample {
        #[arg(long)]
        hom: Option<PathBuf>,
        #[arg(short = 'L', default_value_t = 3)]
        radius: u64,
        /// Largest ball enumerated exhaustively; bigger balls are sampled.
        #[arg(long, default_value_t = 200_000)]
        cap: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Output text plus whether the verdict was affirmative.
struct Outcome {
    text: String,
    ok: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Self { text, ok: true }
    }

    fn verdict(text: String, ok: bool) -> Self {
        Self { text, ok }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn labels(g: &SimpleGraph, vertices: impl IntoIterator<Item = usize>) -> String {
    vertices.into_iter().map(|v| g.label(v)).collect::<Vec<_>>().join(",")
}

fn run_graph(op: GraphOp) -> Result<Outcome> {
    Ok(match op {
        GraphOp::Opp(g) => Outcome::ok(g.load()?.opposite().to_string()),
        GraphOp::Induced { graph, vertices } => {
            let refs: Vec<&str> = vertices.iter().map(String::as_str).collect();
            Outcome::ok(graph.load()?.induced_subgraph(&refs)?.to_string())
        }
        GraphOp::Contract { graph, edge } => Outcome::ok(graph.load()?.contract_edge(&edge.0, &edge.1)?.to_string()),
        GraphOp::Cocontract { graph, edge } => Outcome::ok(graph.load()?.co_contract(&edge.0, &edge.1)?.to_string()),
        GraphOp::Double { graph, t } => {
            let g = graph.load()?;
            let d = g.double_along_link(&t)?;
            let mut text = d.graph.to_string();
            for (v, &orig) in d.retraction.iter().enumerate() {
                writeln!(text, "# retraction {} {}", d.graph.label(v), g.label(orig))?;
            }
            Outcome::ok(text)
        }
        GraphOp::Hole { graph, min_len } => {
            let g = graph.load()?;
            match g.find_hole(min_len)? {
                Some(h) => Outcome::verdict(format!("hole={}\n", labels(&g, h.cycle)), true),
                None => Outcome::verdict("hole=none\n".into(), false),
            }
        }
        GraphOp::Wc(graph) => {
            let g = graph.load()?;
            match g.weak_chordality() {
                WeakChordality::WeaklyChordal => Outcome::verdict("weakly_chordal=true\n".into(), true),
                WeakChordality::Hole(h) => Outcome::verdict(
                    format!("weakly_chordal=false witness=hole:{}\nvertices={}\n", h.len(), labels(&g, h.cycle)),
                    false,
                ),
                WeakChordality::Antihole(h) => Outcome::verdict(
                    format!("weakly_chordal=false witness=antihole:{}\nvertices={}\n", h.len(), labels(&g, h.cycle)),
                    false,
                ),
            }
        }
        GraphOp::Iso { graph, other_name, other } => {
            let g = graph.load()?;
            let h = match (other_name, other) {
                (Some(name), _) => gpw::graphs::named(&name)?,
                (None, Some(path)) => SimpleGraph::parse_any(&read_text(Some(&path))?)?,
                (None, None) => bail!("give --other-name or --other"),
            };
            match g.isomorphism(&h) {
                Some(iso) => {
                    let pairs: Vec<String> =
                        iso.map.iter().enumerate().map(|(i, &j)| format!("{}->{}", g.label(i), h.label(j))).collect();
                    Outcome::verdict(format!("isomorphic=yes map={}\n", pairs.join(",")), true)
                }
                None => Outcome::verdict("isomorphic=no\n".into(), false),
            }
        }
        GraphOp::Enum { n } => {
            let mut text = String::new();
            for g in all_graphs(n, Execution::Parallel)? {
                writeln!(text, "{}", g.to_graph6())?;
            }
            Outcome::ok(text)
        }
    })
}

fn run_word(op: WordOp) -> Result<Outcome> {
    let one = |a: &OneWord| -> Result<(Arc<GroupSpec>, Word)> {
        let spec = a.spec.load()?;
        let w = Word::parse(&spec, &a.word)?;
        Ok((spec, w))
    };
    let two = |a: &TwoWords| -> Result<(Word, Word)> {
        let spec = a.spec.load()?;
        Ok((Word::parse(&spec, &a.left)?, Word::parse(&spec, &a.right)?))
    };
    let verdict = |b: bool| Outcome::verdict(format!("{b}\n"), b);
    Ok(match op {
        WordOp::Normalize(a) => Outcome::ok(format!("{}\n", one(&a)?.1.normalize())),
        WordOp::Mul(a) => {
            let (u, v) = two(&a)?;
            Outcome::ok(format!("{}\n", u.concat(&v)?.normalize()))
        }
        WordOp::Inv(a) => Outcome::ok(format!("{}\n", one(&a)?.1.normalize().invert())),
        WordOp::Eq(a) => {
            let (u, v) = two(&a)?;
            verdict(u.equal(&v)?)
        }
        WordOp::Proj(a) => {
            let (spec, w) = one(&a)?;
            let parts: Vec<String> =
                (0..spec.n()).map(|v| format!("{}={}", spec.graph().label(v), w.project(v))).collect();
            Outcome::ok(format!("{}\n", parts.join(" ")))
        }
        WordOp::Kp0(a) => verdict(one(&a)?.1.in_kp0()),
        WordOp::Kpf(a) => verdict(one(&a)?.1.in_kpf()),
    })
}

fn signed(g: &SimpleGraph, d: &SignedDir) -> String {
    format!("{}{}", g.label(d.vertex), d.sign)
}

fn describe_failure(g: &SimpleGraph, f: &LinkFailure) -> String {
    match f {
        LinkFailure::NotInjective(d) => format!("not-injective {}", signed(g, d)),
        LinkFailure::UnknownLabel(d) => format!("unknown-label {}", signed(g, d)),
        LinkFailure::NotSimplicial(a, b) => format!("not-simplicial {} {}", signed(g, a), signed(g, b)),
        LinkFailure::NotFull(a, b) => format!("not-full {} {}", signed(g, a), signed(g, b)),
        LinkFailure::NotFlag(ds) => {
            format!("not-flag {}", ds.iter().map(|d| signed(g, d)).collect::<Vec<_>>().join(","))
        }
    }
}

fn point(p: &[i64]) -> String {
    p.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

fn run_complex(op: ComplexOp, exec: Execution) -> Result<Outcome> {
    Ok(match op {
        ComplexOp::BuildZ0 { spec, window } => {
            Outcome::ok(gpw::complexes::build_z0(&spec.load()?, window)?.to_string())
        }
        ComplexOp::BuildZf { spec, q } => Outcome::ok(gpw::complexes::build_zf(&spec.load()?, q)?.to_string()),
        ComplexOp::Stats(input) => Outcome::ok(format!("{}\n", input.load()?.stats_line(exec)?)),
        ComplexOp::Npc(input) => {
            let z = input.load()?;
            match z.npc_violation(exec)? {
                None => Outcome::verdict("npc=yes\n".into(), true),
                Some((p, clique)) => {
                    let g = z.spec().graph();
                    let c: Vec<String> = clique.iter().map(|d| signed(g, d)).collect();
                    Outcome::verdict(format!("npc=no\nviolation at {}: {}\n", point(&p), c.join(",")), false)
                }
            }
        }
        ComplexOp::Special(input) => {
            let z = input.load()?;
            let report = z.check_special_map(exec)?;
            let mut text =
                format!("special={}\nvertices_checked={}\n", yes_no(report.passed()), report.vertices_checked);
            for (p, f) in &report.failures {
                writeln!(text, "fail {} {}", point(p), describe_failure(z.spec().graph(), f))?;
            }
            Outcome::verdict(text, report.passed())
        }
        ComplexOp::Surface(input) => {
            let z = input.load()?;
            let surface = z.is_closed_surface(exec)?;
            Outcome::verdict(format!("surface={} chi={}\n", yes_no(surface), z.euler_characteristic()), surface)
        }
    })
}

fn load_hom(path: Option<&std::path::Path>) -> Result<HomomorphismSpec> {
    Ok(HomomorphismSpec::parse(&read_text(path)?)?)
}

fn emit_hom(mut h: HomomorphismSpec, verify: bool, exec: Execution) -> Outcome {
    let mut text = h.to_string();
    if !verify {
        return Outcome::ok(text);
    }
    let report = h.relator_check(exec);
    text.push_str(&HomomorphismSpec::relator_line(&report, h.source()));
    text.push('\n');
    Outcome::verdict(text, report.passed())
}

/// Random elements of length at most `radius`, normalised and deduplicated.
fn sample_ball(spec: &Arc<GroupSpec>, radius: u64, count: usize, seed: u64) -> Vec<NormalForm> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for _ in 0..count {
        let mut pairs = Vec::new();
        let mut len = 0;
        let target = rng.gen_range(0..=radius);
        while len < target {
            let v = rng.gen_range(0..spec.n());
            let e: i64 = match spec.order(v) {
                Order::Finite(m) => rng.gen_range(1..m as i64),
                Order::Infinite => {
                    if rng.gen() {
                        1
                    } else {
                        -1
                    }
                }
            };
            let cost = match spec.order(v) {
                Order::Finite(m) => e.min(m as i64 - e) as u64,
                Order::Infinite => 1,
            };
            if len + cost > target {
                break;
            }
            len += cost;
            pairs.push((v, e));
        }
        let w = Word::from_pairs(spec, pairs).expect("vertices in range").normalize();
        if seen.insert(w.clone()) {
            out.push(w);
        }
    }
    out
}

fn inject_sample(
    h: &HomomorphismSpec,
    radius: u64,
    cap: usize,
    seed: u64,
    exec: Execution,
) -> Result<InjectivityReport> {
    match h.injectivity_sample(radius, cap, exec) {
        Err(gpw::embeddings::EmbeddingError::Word(WordError::BallTooLarge { .. })) => {}
        other => return Ok(other?),
    }
    let sample = sample_ball(h.source(), radius, cap, seed);
    let images = exec.map(&sample, |w| h.apply(w).expect("sampled from the source"));
    let mut first: HashMap<&NormalForm, usize> = HashMap::new();
    for (k, img) in images.iter().enumerate() {
        if let Some(&j) = first.get(img) {
            let collision = Some((sample[j].clone(), sample[k].clone()));
            return Ok(InjectivityReport { radius, sampled: sample.len(), collision });
        }
        first.insert(img, k);
    }
    Ok(InjectivityReport { radius, sampled: sample.len(), collision: None })
}

fn run_embed(op: EmbedOp, exec: Execution) -> Result<Outcome> {
    Ok(match op {
        EmbedOp::Double { graph, t, orders, flags } => {
            let g = graph.load()?;
            let orders = parse_orders(&orders, g.n())?;
            emit_hom(double_homomorphism(&g, &t, &orders, flags.mirror)?, flags.verify, exec)
        }
        EmbedOp::Cocontract { graph, edge, orders, y_order, flags } => {
            let g = graph.load()?;
            let orders = parse_orders(&orders, g.n())?;
            let h = co_contraction_embedding(&g, &edge.0, &edge.1, &orders, y_order, flags.mirror)?;
            emit_hom(h, flags.verify, exec)
        }
        EmbedOp::Verify { hom } => {
            let mut h = load_hom(hom.as_deref())?;
            let report = h.relator_check(exec);
            let line = HomomorphismSpec::relator_line(&report, h.source());
            Outcome::verdict(format!("{line}\n"), report.passed())
        }
        EmbedOp::InjectSample { hom, radius, cap, seed } => {
            let h = load_hom(hom.as_deref())?;
            let report = inject_sample(&h, radius, cap, seed, exec)?;
            Outcome::verdict(format!("{}\n", HomomorphismSpec::injectivity_line(&report)), report.passed())
        }
    })
}

fn run_classify(graph: &GraphInput, group: Group, certificate: bool, exec: Execution) -> Result<Outcome> {
    let g = graph.load()?;
    let c = match group {
        Group::Racg => racg_surface_subgroup(&g),
        Group::Raag => raag_surface_subgroup(&g),
    };
    let mut text = format!("{}\n", c.summary(&g));
    if certificate {
        match &c.witness {
            Some(w) if matches!(w.kind, WitnessKind::Hole | WitnessKind::Antihole) => {
                text.push_str(&witness_complex(&g, w, exec)?.report());
            }
            Some(w) => writeln!(text, "induced {}", labels(&g, w.vertices.iter().copied()))?,
            None => writeln!(text, "basis {}", c.basis)?,
        }
    }
    Ok(Outcome::verdict(text, c.verdict == gpw::classify::Verdict::Yes))
}

fn configure_threads() -> Result<()> {
    #[cfg(feature = "parallel")]
    if let Ok(value) = std::env::var("GPW_THREADS") {
        let n: usize =
            value.parse().with_context(|| format!("GPW_THREADS must be a positive integer, got `{value}`"))?;
        if n == 0 {
            bail!("GPW_THREADS must be a positive integer");
        }
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<Outcome> {
    configure_threads()?;
    let exec = if cli.sequential { Execution::Sequential } else { Execution::Parallel };
    match cli.command {
        Command::Graph { op } => run_graph(op),
        Command::Word { op } => run_word(op),
        Command::Complex { op } => run_complex(op, exec),
        Command::Embed { op } => run_embed(op, exec),
        Command::Classify { graph, group, certificate } => run_classify(&graph, group, certificate, exec),
        Command::Census { n } => {
            let table = census(n, exec)?;
            eprintln!("{}", table.summary());
            Ok(Outcome::ok(table.to_tsv()))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let output = cli.output.clone();
    let outcome = match run(cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    let written = match &output {
        Some(path) => fs::write(path, &outcome.text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{}", outcome.text);
            Ok(())
        }
    };
    if let Err(e) = written {
        eprintln!("error: {e:#}");
        return ExitCode::from(2);
    }
    if outcome.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
