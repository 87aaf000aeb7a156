//! Batch command-line surface.
//!
//! Decision commands print `YES` or `NO` on the first line and, on yes, the
//! witness in `.perm` format on the second. Exit codes: 0 = yes/success,
//! 1 = no, 2 = usage or parse error, 3 = guard exceeded. Output is
//! deterministic for fixed inputs regardless of `--jobs`.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::core::formats::{
    parse_dataset, parse_graph, parse_hypergraph, parse_itemset, parse_network,
    parse_permutation, serialize_dataset, serialize_graph, serialize_hypergraph,
    serialize_itemset, serialize_network, serialize_permutation, ParseError,
};
use crate::core::Permutation;
use crate::reduce::{
    gi_to_ii, hgi_to_gi, ii_to_hgi, lift_witness_hgi_to_gi, parse_index, serialize_index,
    translate_witness_gi_to_hgi, translate_witness_gi_to_ii, translate_witness_hgi_to_ii,
    translate_witness_ii_to_gi, translate_witness_ii_to_hgi, GiInstance, HgiInstance, IiInstance,
    IndexFile, WitnessError,
};
use crate::solve::{
    canonical_form, dataset_minimize, gi_decide_bruteforce, gi_decide_stats, gi_decide_via_ii,
    hgi_decide_bruteforce, hgi_decide_stats, ii_decide_bruteforce, ii_decide_stats,
    si_decide_bruteforce, si_decide_stats, verify_gi_witness, verify_hgi_witness,
    verify_ii_witness, verify_si_witness, HgiRoute, MinimizeDecision, SearchStats, SolveError,
    DEFAULT_FACTORIAL_GUARD,
};
use crate::sortnet::{
    depth_search, prune_prefixes, DepthSearchOutcome, PrefixEnumeration, SearchMode,
    SortnetError, DEFAULT_DEPTH_CHANNEL_CAP, DEFAULT_ENUM_CHANNEL_CAP, DEFAULT_ENUM_LAYER_CAP,
    DEFAULT_EVAL_CHANNEL_CAP,
};

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_GUARD: i32 = 3;

#[derive(Parser)]
#[command(
    name = "isokit",
    version,
    about = "Itemset, graph and hypergraph isomorphism toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Force the factorial brute-force oracle where one exists.
    #[arg(long, global = true)]
    oracle: bool,

    /// Print search statistics to stderr.
    #[arg(long, global = true)]
    stats: bool,

    /// Worker threads for parallel subsumption checks.
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,

    /// Domain-size cap for brute-force enumeration.
    #[arg(long, global = true, value_name = "N", env = "ISOKIT_GUARD")]
    guard: Option<usize>,

    /// Seed for randomized harnesses; the shipped commands are
    /// deterministic and ignore it.
    #[arg(long, global = true, value_name = "N")]
    seed: Option<u64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum DirectionArg {
    Forward,
    Backward,
}

#[derive(Clone, Copy, ValueEnum)]
enum GiRouteArg {
    Direct,
    ViaIi,
}

#[derive(Clone, Copy, ValueEnum)]
enum HgiRouteArg {
    Itemset,
    Incidence,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProblemArg {
    Ii,
    Si,
    Gi,
    Hgi,
}

#[derive(Subcommand)]
enum Command {
    /// Decide itemset isomorphism between two .is files.
    IiCheck { a: PathBuf, b: PathBuf },
    /// Decide itemset isomorphism and write the witness to a .perm file.
    IiWitness {
        a: PathBuf,
        b: PathBuf,
        #[arg(short, long, value_name = "FILE")]
        output: PathBuf,
    },
    /// Decide subitemset isomorphism (S embeds into T up to relabeling).
    SiCheck { a: PathBuf, b: PathBuf },
    /// Decide graph isomorphism between two .gr files.
    GiCheck {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, value_enum, default_value = "direct")]
        route: GiRouteArg,
    },
    /// Decide hypergraph isomorphism between two .hg files.
    HgiCheck {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, value_enum, default_value = "itemset")]
        route: HgiRouteArg,
    },
    /// Apply a reduction; writes the reduced pair plus a map.idx sidecar.
    #[command(group = clap::ArgGroup::new("reduction").required(true).multiple(false))]
    Reduce {
        /// Reduce a graph pair to an itemset pair over the edge domain.
        #[arg(long, group = "reduction")]
        gi_to_ii: bool,
        /// Reduce an itemset pair to a hypergraph pair.
        #[arg(long, group = "reduction")]
        ii_to_hgi: bool,
        /// Reduce a hypergraph pair to gadgeted plain graphs.
        #[arg(long, group = "reduction")]
        hgi_to_gi: bool,
        a: PathBuf,
        b: PathBuf,
        #[arg(short, long, value_name = "DIR")]
        output: PathBuf,
    },
    /// Translate a .perm witness along a recorded reduction.
    TranslateWitness {
        idx: PathBuf,
        witness: PathBuf,
        #[arg(long, value_enum)]
        direction: DirectionArg,
        #[arg(short, long, value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Print the canonical form of an itemset (certificate as a comment).
    Canon {
        input: PathBuf,
        #[arg(short, long, value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Minimize a dataset to subitemset-isomorphism representatives.
    Minimize {
        input: PathBuf,
        #[arg(short, long, value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Print the output itemset of a comparator network.
    NetOutputs {
        input: PathBuf,
        #[arg(long, value_name = "N", default_value_t = DEFAULT_EVAL_CHANNEL_CAP)]
        max_channels: usize,
    },
    /// Report whether a comparator network sorts all binary inputs.
    NetSorts {
        input: PathBuf,
        #[arg(long, value_name = "N", default_value_t = DEFAULT_EVAL_CHANNEL_CAP)]
        max_channels: usize,
    },
    /// Enumerate layered prefixes, optionally pruned to representatives.
    NetPrefixes {
        #[arg(short = 'n', long)]
        channels: usize,
        #[arg(short = 'k', long)]
        layers: usize,
        #[arg(long)]
        prune: bool,
        #[arg(long, value_name = "N", default_value_t = DEFAULT_ENUM_CHANNEL_CAP)]
        max_channels: usize,
        #[arg(long, value_name = "N", default_value_t = DEFAULT_ENUM_LAYER_CAP)]
        max_layers: usize,
    },
    /// Search for the smallest sorting-network depth.
    NetDepth {
        #[arg(short = 'n', long)]
        channels: usize,
        #[arg(long, value_name = "D", default_value_t = 10)]
        max_depth: usize,
        /// Disable subitemset-isomorphism pruning between levels.
        #[arg(long)]
        unpruned: bool,
        #[arg(short, long, value_name = "FILE")]
        output: Option<PathBuf>,
        #[arg(long, value_name = "N", default_value_t = DEFAULT_DEPTH_CHANNEL_CAP)]
        max_channels: usize,
    },
    /// Verify a witness file against an instance.
    Verify {
        #[arg(value_enum)]
        problem: ProblemArg,
        a: PathBuf,
        b: PathBuf,
        witness: PathBuf,
    },
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: String) -> Self {
        Failure { code: EXIT_USAGE, message }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::usage(format!("error: {e}"))
    }
}

fn parse_failure(path: &Path, e: ParseError) -> Failure {
    Failure::usage(format!("error: {}: {e}", path.display()))
}

fn solve_failure(e: SolveError) -> Failure {
    match e {
        SolveError::GuardExceeded { .. } => Failure {
            code: EXIT_GUARD,
            message: format!("error: {e}"),
        },
        SolveError::DomainMismatch { .. } => Failure::usage(format!("error: {e}")),
    }
}

fn sortnet_failure(e: SortnetError) -> Failure {
    match e {
        SortnetError::GuardExceeded { .. } => Failure {
            code: EXIT_GUARD,
            message: format!("error: {e}"),
        },
        other => Failure::usage(format!("error: {other}")),
    }
}

fn witness_failure(e: WitnessError) -> Failure {
    Failure {
        code: EXIT_NO,
        message: format!("error: {e}"),
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("error: {}: {e}", path.display())))
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    std::fs::write(path, contents)
        .map_err(|e| Failure::usage(format!("error: {}: {e}", path.display())))
}

/// Parses argv and runs one command; returns the process exit code.
pub fn run<I, W, E>(args: I, stdout: &mut W, stderr: &mut E) -> i32
where
    I: IntoIterator<Item = OsString>,
    W: Write,
    E: Write,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders --help/--version on stdout with success.
            if e.exit_code() == 0 {
                let _ = write!(stdout, "{e}");
                return EXIT_YES;
            }
            let _ = write!(stderr, "{e}");
            return EXIT_USAGE;
        }
    };
    if let Some(jobs) = cli.jobs {
        // The global pool can be initialized once per process; later calls
        // keep the existing pool, which never changes results.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    match dispatch(&cli, stdout, stderr) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "{}", f.message);
            f.code
        }
    }
}

fn dispatch<W: Write, E: Write>(
    cli: &Cli,
    stdout: &mut W,
    stderr: &mut E,
) -> Result<i32, Failure> {
    let guard = cli.guard.unwrap_or(DEFAULT_FACTORIAL_GUARD);
    match &cli.command {
        Command::IiCheck { a, b } => {
            let inst = load_ii(a, b)?;
            let (witness, stats) = if cli.oracle {
                (ii_decide_bruteforce(&inst, guard).map_err(solve_failure)?, None)
            } else {
                let (w, s) = ii_decide_stats(&inst);
                (w, Some(s))
            };
            emit_stats(cli, stderr, stats.as_ref())?;
            decision(stdout, witness.as_ref())
        }
        Command::IiWitness { a, b, output } => {
            let inst = load_ii(a, b)?;
            let (witness, stats) = if cli.oracle {
                (ii_decide_bruteforce(&inst, guard).map_err(solve_failure)?, None)
            } else {
                let (w, s) = ii_decide_stats(&inst);
                (w, Some(s))
            };
            emit_stats(cli, stderr, stats.as_ref())?;
            if let Some(w) = &witness {
                write_file(output, &serialize_permutation(w))?;
            }
            decision(stdout, witness.as_ref())
        }
        Command::SiCheck { a, b } => {
            let inst = load_ii(a, b)?;
            let (witness, stats) = if cli.oracle {
                (si_decide_bruteforce(&inst, guard).map_err(solve_failure)?, None)
            } else {
                let (w, s) = si_decide_stats(&inst).map_err(solve_failure)?;
                (w, Some(s))
            };
            emit_stats(cli, stderr, stats.as_ref())?;
            decision(stdout, witness.as_ref())
        }
        Command::GiCheck { a, b, route } => {
            let inst = load_gi(a, b)?;
            let (witness, stats) = if cli.oracle {
                (gi_decide_bruteforce(&inst, guard).map_err(solve_failure)?, None)
            } else {
                match route {
                    GiRouteArg::Direct => {
                        let (w, s) = gi_decide_stats(&inst);
                        (w, Some(s))
                    }
                    GiRouteArg::ViaIi => (gi_decide_via_ii(&inst), None),
                }
            };
            emit_stats(cli, stderr, stats.as_ref())?;
            decision(stdout, witness.as_ref())
        }
        Command::HgiCheck { a, b, route } => {
            let inst = load_hgi(a, b)?;
            let (witness, stats) = if cli.oracle {
                (hgi_decide_bruteforce(&inst, guard).map_err(solve_failure)?, None)
            } else {
                let r = match route {
                    HgiRouteArg::Itemset => HgiRoute::Itemset,
                    HgiRouteArg::Incidence => HgiRoute::Incidence,
                };
                let (w, s) = hgi_decide_stats(&inst, r);
                (w, Some(s))
            };
            emit_stats(cli, stderr, stats.as_ref())?;
            decision(stdout, witness.as_ref())
        }
        Command::Reduce { gi_to_ii: f_gi, ii_to_hgi: f_ii, hgi_to_gi: f_hgi, a, b, output } => {
            std::fs::create_dir_all(output)?;
            if *f_gi {
                let inst = load_gi(a, b)?;
                let (ii, _, _) = gi_to_ii(&inst);
                emit(output, "S.is", &serialize_itemset(&ii.s), stdout)?;
                emit(output, "T.is", &serialize_itemset(&ii.t), stdout)?;
                let idx = serialize_index(&IndexFile::GiToIi(inst));
                emit(output, "map.idx", &idx, stdout)?;
            } else if *f_ii {
                let inst = load_ii(a, b)?;
                let (hgi, _) = ii_to_hgi(&inst);
                emit(output, "G.hg", &serialize_hypergraph(&hgi.g), stdout)?;
                emit(output, "H.hg", &serialize_hypergraph(&hgi.h), stdout)?;
                let idx = serialize_index(&IndexFile::IiToHgi(inst));
                emit(output, "map.idx", &idx, stdout)?;
            } else {
                debug_assert!(*f_hgi);
                let inst = load_hgi(a, b)?;
                let (gi, _) = hgi_to_gi(&inst);
                emit(output, "G.gr", &serialize_graph(&gi.g), stdout)?;
                emit(output, "H.gr", &serialize_graph(&gi.h), stdout)?;
                let idx = serialize_index(&IndexFile::HgiToGi(inst));
                emit(output, "map.idx", &idx, stdout)?;
            }
            Ok(EXIT_YES)
        }
        Command::TranslateWitness { idx, witness, direction, output } => {
            let index = parse_index(&read_file(idx)?).map_err(|e| parse_failure(idx, e))?;
            let perm = parse_permutation(&read_file(witness)?)
                .map_err(|e| parse_failure(witness, e))?;
            let translated = translate(&index, &perm, *direction).map_err(witness_failure)?;
            let rendered = serialize_permutation(&translated);
            if let Some(path) = output {
                write_file(path, &rendered)?;
            }
            let _ = write!(stdout, "{rendered}");
            Ok(EXIT_YES)
        }
        Command::Canon { input, output } => {
            let s = parse_itemset(&read_file(input)?).map_err(|e| parse_failure(input, e))?;
            let canon = canonical_form(&s);
            let rendered = format!(
                "{}# cert: {}\n",
                serialize_itemset(&canon.matrix),
                canon.cert_perm.display_one_based()
            );
            if let Some(path) = output {
                write_file(path, &rendered)?;
            }
            let _ = write!(stdout, "{rendered}");
            Ok(EXIT_YES)
        }
        Command::Minimize { input, output } => {
            let d = parse_dataset(&read_file(input)?).map_err(|e| parse_failure(input, e))?;
            let (kept, report) = dataset_minimize(&d);
            let rendered = serialize_dataset(&kept);
            if cli.stats {
                for decision in &report.decisions {
                    match decision {
                        MinimizeDecision::Retained { index } => {
                            let _ = writeln!(stderr, "retained {index}");
                        }
                        MinimizeDecision::Discarded { index, by, reason } => {
                            let _ = writeln!(stderr, "discarded {index} by {by} ({reason:?})");
                        }
                    }
                }
            }
            if let Some(path) = output {
                write_file(path, &rendered)?;
            }
            let _ = write!(stdout, "{rendered}");
            Ok(EXIT_YES)
        }
        Command::NetOutputs { input, max_channels } => {
            let net = parse_network(&read_file(input)?).map_err(|e| parse_failure(input, e))?;
            let outputs = net.output_itemset(*max_channels).map_err(sortnet_failure)?;
            let _ = write!(stdout, "{}", serialize_itemset(&outputs));
            Ok(EXIT_YES)
        }
        Command::NetSorts { input, max_channels } => {
            let net = parse_network(&read_file(input)?).map_err(|e| parse_failure(input, e))?;
            let sorts = net.sorts(*max_channels).map_err(sortnet_failure)?;
            if sorts {
                let _ = writeln!(stdout, "YES");
                Ok(EXIT_YES)
            } else {
                let _ = writeln!(stdout, "NO");
                Ok(EXIT_NO)
            }
        }
        Command::NetPrefixes { channels, layers, prune, max_channels, max_layers } => {
            let stream =
                PrefixEnumeration::with_caps(*channels, *layers, *max_channels, *max_layers)
                    .map_err(sortnet_failure)?;
            if *prune {
                if stream.total() > 100_000 {
                    return Err(sortnet_failure(SortnetError::GuardExceeded {
                        what: "prefix materialization",
                        limit: 100_000,
                        requested: stream.total() as usize,
                    }));
                }
                let prefixes: Vec<_> = stream.collect();
                let outcome = prune_prefixes(&prefixes, DEFAULT_EVAL_CHANNEL_CAP)
                    .map_err(sortnet_failure)?;
                let _ = writeln!(stdout, "count {}", outcome.representatives.len());
                for net in &outcome.representatives {
                    let _ = write!(stdout, "\n{}", serialize_network(net));
                }
            } else {
                let _ = writeln!(stdout, "count {}", stream.total());
                for net in stream {
                    let _ = write!(stdout, "\n{}", serialize_network(&net));
                }
            }
            Ok(EXIT_YES)
        }
        Command::NetDepth { channels, max_depth, unpruned, output, max_channels } => {
            let mode = if *unpruned { SearchMode::Unpruned } else { SearchMode::Pruned };
            let outcome = depth_search(*channels, *max_depth, mode, *max_channels)
                .map_err(sortnet_failure)?;
            match outcome {
                DepthSearchOutcome::Found { depth, network, levels } => {
                    let _ = writeln!(stdout, "depth {depth}");
                    for level in &levels {
                        let _ = writeln!(
                            stdout,
                            "level {}: candidates {} representatives {}",
                            level.depth, level.candidates, level.representatives
                        );
                    }
                    let rendered = serialize_network(&network);
                    if let Some(path) = output {
                        write_file(path, &rendered)?;
                    }
                    let _ = write!(stdout, "{rendered}");
                    Ok(EXIT_YES)
                }
                DepthSearchOutcome::Exhausted { max_depth, levels } => {
                    let _ = writeln!(stdout, "not found within depth {max_depth}");
                    for level in &levels {
                        let _ = writeln!(
                            stdout,
                            "level {}: candidates {} representatives {}",
                            level.depth, level.candidates, level.representatives
                        );
                    }
                    Ok(EXIT_NO)
                }
            }
        }
        Command::Verify { problem, a, b, witness } => {
            let perm = parse_permutation(&read_file(witness)?)
                .map_err(|e| parse_failure(witness, e))?;
            let ok = match problem {
                ProblemArg::Ii => verify_ii_witness(&load_ii(a, b)?, &perm),
                ProblemArg::Si => verify_si_witness(&load_ii(a, b)?, &perm),
                ProblemArg::Gi => verify_gi_witness(&load_gi(a, b)?, &perm),
                ProblemArg::Hgi => verify_hgi_witness(&load_hgi(a, b)?, &perm),
            };
            if ok {
                let _ = writeln!(stdout, "YES");
                Ok(EXIT_YES)
            } else {
                let _ = writeln!(stdout, "NO");
                Ok(EXIT_NO)
            }
        }
    }
}

fn translate(
    index: &IndexFile,
    perm: &Permutation,
    direction: DirectionArg,
) -> Result<Permutation, WitnessError> {
    match (index, direction) {
        (IndexFile::GiToIi(inst), DirectionArg::Forward) => {
            let (_, eg, eh) = gi_to_ii(inst);
            translate_witness_gi_to_ii(perm, inst, &eg, &eh)
        }
        (IndexFile::GiToIi(inst), DirectionArg::Backward) => {
            let (_, eg, eh) = gi_to_ii(inst);
            translate_witness_ii_to_gi(perm, inst, &eg, &eh)
        }
        (IndexFile::IiToHgi(inst), DirectionArg::Forward) => {
            translate_witness_ii_to_hgi(perm, inst)
        }
        (IndexFile::IiToHgi(inst), DirectionArg::Backward) => {
            translate_witness_hgi_to_ii(perm, inst)
        }
        (IndexFile::HgiToGi(inst), DirectionArg::Forward) => {
            let (_, roles) = hgi_to_gi(inst);
            lift_witness_hgi_to_gi(perm, inst, &roles)
        }
        (IndexFile::HgiToGi(inst), DirectionArg::Backward) => {
            let (_, roles) = hgi_to_gi(inst);
            translate_witness_gi_to_hgi(perm, inst, &roles)
        }
    }
}

fn load_ii(a: &Path, b: &Path) -> Result<IiInstance, Failure> {
    let s = parse_itemset(&read_file(a)?).map_err(|e| parse_failure(a, e))?;
    let t = parse_itemset(&read_file(b)?).map_err(|e| parse_failure(b, e))?;
    Ok(IiInstance { s, t })
}

fn load_gi(a: &Path, b: &Path) -> Result<GiInstance, Failure> {
    let g = parse_graph(&read_file(a)?).map_err(|e| parse_failure(a, e))?;
    let h = parse_graph(&read_file(b)?).map_err(|e| parse_failure(b, e))?;
    Ok(GiInstance { g, h })
}

fn load_hgi(a: &Path, b: &Path) -> Result<HgiInstance, Failure> {
    let g = parse_hypergraph(&read_file(a)?).map_err(|e| parse_failure(a, e))?;
    let h = parse_hypergraph(&read_file(b)?).map_err(|e| parse_failure(b, e))?;
    Ok(HgiInstance { g, h })
}

fn decision<W: Write>(stdout: &mut W, witness: Option<&Permutation>) -> Result<i32, Failure> {
    match witness {
        Some(w) => {
            let _ = writeln!(stdout, "YES");
            let _ = writeln!(stdout, "{}", w.display_one_based());
            Ok(EXIT_YES)
        }
        None => {
            let _ = writeln!(stdout, "NO");
            Ok(EXIT_NO)
        }
    }
}

fn emit<W: Write>(dir: &Path, name: &str, contents: &str, stdout: &mut W) -> Result<(), Failure> {
    let path = dir.join(name);
    write_file(&path, contents)?;
    let _ = writeln!(stdout, "wrote {}", path.display());
    Ok(())
}

fn emit_stats<E: Write>(cli: &Cli, stderr: &mut E, stats: Option<&SearchStats>) -> Result<(), Failure> {
    if cli.stats {
        if let Some(s) = stats {
            let _ = write!(stderr, "{}", s.report());
        }
    }
    Ok(())
}
