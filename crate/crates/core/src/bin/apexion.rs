use std::fs;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use apexion::enumerate::{for_each_graph, EnumSpec};
use apexion::graph6::{self, OnError};
use apexion::pipeline::{self, Cascade, CascadeConfig, CountTable};
use apexion::transforms::{dy_closure, ClosureCaps};
use apexion::{Error, SmallGraph};

const EXIT_ERROR: u8 = 1;
const EXIT_INCOMPLETE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "apexion",
    version,
    about = "Apex graphs, MMNA obstructions and K6 minors"
)]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true, env = "APEXION_THREADS")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Io {
    /// Input file; standard input when absent or "-".
    #[arg(long)]
    input: Option<PathBuf>,
    /// Output directory; standard output when absent.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Split a graph6 stream into planar, apex and non-apex graphs.
    Classify(Io),
    /// Repeated edge deletion from seed graphs, collecting MMNA graphs.
    Cascade {
        #[command(flatten)]
        io: Io,
        #[arg(long, default_value_t = 3)]
        min_degree: usize,
        #[arg(long)]
        connected_only: bool,
        /// Deletion rounds after the seed round.
        #[arg(long)]
        max_depth: Option<usize>,
        /// Write per-round state here.
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        /// Continue from the state in --checkpoint.
        #[arg(long, requires = "checkpoint")]
        resume: bool,
    },
    /// Count isomorphism classes by order and size.
    Table(Io),
    /// Close a graph6 stream under delta-wye and wye-delta moves.
    Closure {
        #[command(flatten)]
        io: Io,
        /// Upper bounds as ORDER,SIZE.
        #[arg(long, value_parser = parse_caps)]
        caps: Option<(usize, usize)>,
        /// Also follow wye-delta moves that lose edges.
        #[arg(long)]
        allow_collapse: bool,
    },
    /// Sample 6-regular 2-connected graphs of order 13 and search each for a K6 minor.
    K6Audit {
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Counterexamples are written here as counterexamples.g6.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Edge lists ("N u-v u-v ...", one graph per line) to graph6.
    Encode(Io),
    /// graph6 to edge lists.
    Decode(Io),
    /// All graphs of one order up to isomorphism, as graph6.
    Enumerate {
        #[arg(long)]
        order: usize,
        #[arg(long, default_value_t = 3)]
        min_degree: usize,
        #[arg(long)]
        min_size: Option<usize>,
        #[arg(long)]
        max_size: Option<usize>,
        #[arg(long)]
        connected_only: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn parse_caps(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or("expected ORDER,SIZE")?;
    let order = a.trim().parse().map_err(|e| format!("order: {e}"))?;
    let size = b.trim().parse().map_err(|e| format!("size: {e}"))?;
    Ok((order, size))
}

fn open_input(path: &Option<PathBuf>) -> apexion::Result<Box<dyn BufRead>> {
    match path {
        Some(p) if p.as_os_str() != "-" => {
            let f = fs::File::open(p).map_err(|source| Error::File {
                path: p.clone(),
                source,
            })?;
            Ok(Box::new(BufReader::new(f)))
        }
        _ => Ok(Box::new(BufReader::new(io::stdin()))),
    }
}

fn read_graphs(path: &Option<PathBuf>) -> apexion::Result<Vec<SmallGraph>> {
    Ok(graph6::read_stream(open_input(path)?, OnError::FailFast)?.graphs)
}

fn create_file(dir: &Path, name: &str) -> apexion::Result<BufWriter<fs::File>> {
    let path = dir.join(name);
    fs::File::create(&path)
        .map(BufWriter::new)
        .map_err(|source| Error::File { path, source })
}

fn ensure_dir(dir: &Path) -> apexion::Result<()> {
    fs::create_dir_all(dir).map_err(|source| Error::File {
        path: dir.to_path_buf(),
        source,
    })
}

/// Writes graphs to `dir/name`, or to standard output without a directory.
fn emit_graphs(dir: &Option<PathBuf>, name: &str, graphs: &[SmallGraph]) -> apexion::Result<()> {
    match dir {
        Some(d) => {
            ensure_dir(d)?;
            let mut w = create_file(d, name)?;
            graph6::write_stream(&mut w, graphs)?;
            w.flush()?;
        }
        None => {
            graph6::write_stream(io::stdout().lock(), graphs)?;
        }
    }
    Ok(())
}

fn write_text(dir: &Path, name: &str, text: &str) -> apexion::Result<()> {
    let mut w = create_file(dir, name)?;
    w.write_all(text.as_bytes())?;
    w.flush()?;
    Ok(())
}

fn parse_edge_list(line: &str) -> apexion::Result<SmallGraph> {
    let mut words = line.split_whitespace();
    let n: usize = words
        .next()
        .ok_or_else(|| Error::Invalid("empty edge list".into()))?
        .parse()
        .map_err(|_| Error::Invalid(format!("bad order in {line:?}")))?;
    let mut edges = Vec::new();
    for w in words {
        let pair = w
            .split_once('-')
            .and_then(|(a, b)| Some((a.parse::<usize>().ok()?, b.parse::<usize>().ok()?)))
            .ok_or_else(|| Error::Invalid(format!("bad edge {w:?}")))?;
        edges.push(pair);
    }
    SmallGraph::from_edges(n, edges)
}

fn edge_list(g: &SmallGraph) -> String {
    let mut s = g.order().to_string();
    for e in g.edges() {
        s.push(' ');
        s.push_str(&e.to_string());
    }
    s
}

fn run(cli: Cli) -> apexion::Result<u8> {
    match cli.command {
        Command::Classify(io) => {
            let graphs = read_graphs(&io.input)?;
            let r = pipeline::classify_graphs(&graphs);
            if let Some(dir) = &io.output {
                let out = Some(dir.clone());
                emit_graphs(&out, "planar.g6", &r.planar)?;
                emit_graphs(&out, "apex.g6", &r.apex)?;
                emit_graphs(&out, "nonapex.g6", &r.nonapex)?;
            }
            println!("planar:{}", r.planar.len());
            println!("apex:{}", r.apex.len());
            println!("nonapex:{}", r.nonapex.len());
        }
        Command::Cascade {
            io,
            min_degree,
            connected_only,
            max_depth,
            checkpoint,
            resume,
        } => {
            let config = CascadeConfig {
                min_degree,
                connected_only,
                max_depth,
                checkpoint_dir: checkpoint,
                resume,
            };
            let mut cascade = Cascade::new(config.clone())?;
            let seeds = if cascade.is_resumed() {
                0
            } else {
                cascade.add_seed_stream(open_input(&io.input)?)?
            };
            eprintln!(
                "cascade: {} seeds, {} pending, min_degree={} connected_only={} max_depth={}",
                seeds,
                cascade.pending(),
                config.min_degree,
                config.connected_only,
                config.max_depth.map_or("none".into(), |d| d.to_string())
            );
            let report = cascade.run()?;
            emit_graphs(&io.output, "mmna.g6", &report.mmna)?;
            if let Some(dir) = &io.output {
                write_text(dir, "table.csv", &report.table.to_csv())?;
                write_text(dir, "table.txt", &report.table.render())?;
            }
            eprint!("{}", report.table.render());
            if !report.complete {
                eprintln!("cascade stopped at max depth with graphs left to test");
                return Ok(EXIT_INCOMPLETE);
            }
        }
        Command::Table(io) => {
            let graphs = read_graphs(&io.input)?;
            let table = CountTable::from_graphs(&graphs);
            print!("{}", table.render());
            match &io.output {
                Some(dir) => {
                    ensure_dir(dir)?;
                    write_text(dir, "table.csv", &table.to_csv())?;
                    write_text(dir, "table.txt", &table.render())?;
                }
                None => print!("{}", table.to_csv()),
            }
        }
        Command::Closure {
            io,
            caps,
            allow_collapse,
        } => {
            let seeds = read_graphs(&io.input)?;
            let mut c = ClosureCaps {
                allow_collapse,
                ..ClosureCaps::default()
            };
            if let Some((order, size)) = caps {
                c.max_order = order;
                c.max_size = size;
            }
            let closure = dy_closure(&seeds, c);
            emit_graphs(&io.output, "closure.g6", &closure)?;
            eprintln!("closure: {} graphs", closure.len());
        }
        Command::K6Audit {
            count,
            seed,
            output,
        } => {
            let r = pipeline::k6_audit(count as usize, seed)?;
            println!("sampled:{}", r.sampled);
            println!("with_k6:{}", r.with_k6);
            println!("counterexamples:{}", r.counterexamples.len());
            println!(
                "control: apex={} k6_minor={}",
                r.control_apex.is_apex(),
                r.control_has_k6
            );
            if output.is_some() {
                emit_graphs(&output, "counterexamples.g6", &r.counterexamples)?;
            }
            for g in &r.counterexamples {
                eprintln!("counterexample {}", graph6::encode(g));
            }
            if !r.passed() {
                return Ok(EXIT_ERROR);
            }
        }
        Command::Encode(io) => {
            let mut out = BufWriter::new(io::stdout().lock());
            for (i, line) in open_input(&io.input)?.lines().enumerate() {
                let line = line?;
                if line.trim().is_empty() {
                    continue;
                }
                let g = parse_edge_list(&line)
                    .map_err(|e| Error::Invalid(format!("line {}: {e}", i + 1)))?;
                writeln!(out, "{}", graph6::encode(&g))?;
            }
            out.flush()?;
        }
        Command::Decode(io) => {
            let mut out = BufWriter::new(io::stdout().lock());
            for g in read_graphs(&io.input)? {
                writeln!(out, "{}", edge_list(&g))?;
            }
            out.flush()?;
        }
        Command::Enumerate {
            order,
            min_degree,
            min_size,
            max_size,
            connected_only,
            output,
        } => {
            let full = order * order.saturating_sub(1) / 2;
            let spec = EnumSpec::new(order)
                .sizes(min_size.unwrap_or(0), max_size.unwrap_or(full))
                .min_degree(min_degree)
                .connected_only(connected_only);
            let mut sink: Box<dyn Write> = match &output {
                Some(dir) => {
                    ensure_dir(dir)?;
                    Box::new(create_file(dir, &format!("order{order}.g6"))?)
                }
                None => Box::new(BufWriter::new(io::stdout().lock())),
            };
            let mut count = 0usize;
            let mut failure = None;
            for_each_graph(&spec, |g| {
                if failure.is_none() {
                    if let Err(e) = writeln!(sink, "{}", graph6::encode(&g)) {
                        failure = Some(e);
                    }
                    count += 1;
                }
            })?;
            if let Some(e) = failure {
                return Err(e.into());
            }
            sink.flush()?;
            eprintln!("enumerate: {count} graphs");
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_ERROR);
        }
    }
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}
