use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use annulus_core::dynamics::{
    detect_convergence, extract_converging_subsequence, limit_triangulation,
};
use annulus_core::exchange_graph::{
    bfs_ordinary, build_boundary_graph, build_tube_graph, enumerate_bruteforce, export,
    ExportFormat,
};
use annulus_core::quiver::quiver_of;
use annulus_core::triangulation::{canonical_orbit_form, dehn_twist, mutate};
use annulus_core::{Arc, SequenceWindow, Sign, Surface, Triangulation};

#[derive(Parser)]
#[command(
    name = "annulus",
    version,
    about = "Asymptotic triangulations of marked annuli"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List triangulations of C(p,q) as `---` separated blocks
    Enumerate {
        p: usize,
        q: usize,
        #[arg(long, value_enum, default_value_t = EnumMode::Boundary)]
        mode: EnumMode,
        /// Largest |winding| of bridging arcs in oracle mode
        #[arg(long, env = "ANNULUS_WINDING_BOUND", default_value_t = 3)]
        winding_bound: usize,
    },
    /// Flip one arc of a triangulation
    Mutate { file: PathBuf, arc: String },
    /// Build an exchange graph and print it
    Graph {
        p: usize,
        q: usize,
        #[arg(long, value_enum, default_value_t = GraphKind::Boundary)]
        mode: GraphKind,
        #[arg(long, default_value_t = 3)]
        radius: usize,
        /// Ordinary seed triangulation for bfs mode
        #[arg(long)]
        seed: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
    },
    /// Apply the k-th power of the Dehn twist
    Twist {
        file: PathBuf,
        #[arg(allow_hyphen_values = true)]
        k: i64,
    },
    /// Limit under infinitely many positive (+) or negative (-) twists
    Limit {
        file: PathBuf,
        #[arg(allow_hyphen_values = true)]
        sign: Sign,
    },
    /// Convergence report for a sequence file
    Converge { file: PathBuf },
    /// Indices of a converging subsequence
    Subseq { file: PathBuf },
    /// B-matrix of an ordinary triangulation
    Quiver { file: PathBuf },
    /// Representative of the twist orbit; the shift goes to stderr
    Canon { file: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum EnumMode {
    Tube,
    Boundary,
    Oracle,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphKind {
    Tube,
    Boundary,
    Bfs,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn read_triangulation(path: &Path) -> Result<Triangulation> {
    Triangulation::parse(&read(path)?).with_context(|| format!("in {}", path.display()))
}

fn read_window(path: &Path) -> Result<SequenceWindow> {
    SequenceWindow::parse(&read(path)?).with_context(|| format!("in {}", path.display()))
}

fn tube_surface(p: usize, q: usize) -> Result<Surface> {
    if q != 0 {
        bail!("tube mode needs q = 0, got q = {q}");
    }
    Ok(Surface::tube(p)?)
}

fn blocks(ts: &[Triangulation]) -> String {
    let mut out = format!("# {} triangulations\n", ts.len());
    let texts: Vec<String> = ts.iter().map(Triangulation::to_text).collect();
    out.push_str(&texts.join("---\n"));
    out
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Enumerate {
            p,
            q,
            mode,
            winding_bound,
        } => {
            let ts = match mode {
                EnumMode::Tube => build_tube_graph(tube_surface(p, q)?.p())?
                    .vertices()
                    .to_vec(),
                EnumMode::Boundary => build_boundary_graph(&Surface::new(p, q)?)?
                    .vertices()
                    .to_vec(),
                EnumMode::Oracle => enumerate_bruteforce(&Surface::new(p, q)?, winding_bound),
            };
            print!("{}", blocks(&ts));
        }
        Command::Mutate { file, arc } => {
            let t = read_triangulation(&file)?;
            let arc: Arc = arc.parse().map_err(anyhow::Error::msg)?;
            print!("{}", mutate(&t, &arc)?);
        }
        Command::Graph {
            p,
            q,
            mode,
            radius,
            seed,
            format,
        } => {
            let g = match mode {
                GraphKind::Tube => build_tube_graph(tube_surface(p, q)?.p())?,
                GraphKind::Boundary => build_boundary_graph(&Surface::new(p, q)?)?,
                GraphKind::Bfs => {
                    let path = seed.context("bfs mode needs --seed FILE")?;
                    let t = read_triangulation(&path)?;
                    if t.surface() != Surface::new(p, q)? {
                        bail!(
                            "seed lives on C({},{}), not C({p},{q})",
                            t.surface().p(),
                            t.surface().q()
                        );
                    }
                    bfs_ordinary(&t, radius)?
                }
            };
            let format = match format {
                Format::Dot => ExportFormat::Dot,
                Format::Json => ExportFormat::AdjacencyJson,
            };
            print!("{}", export(&g, format));
        }
        Command::Twist { file, k } => {
            print!("{}", dehn_twist(&read_triangulation(&file)?, k));
        }
        Command::Limit { file, sign } => {
            print!(
                "{}",
                limit_triangulation(&read_triangulation(&file)?, sign)?
            );
        }
        Command::Converge { file } => {
            print!("{}", detect_convergence(&read_window(&file)?)?);
        }
        Command::Subseq { file } => {
            let idx = extract_converging_subsequence(&read_window(&file)?);
            let idx: Vec<String> = idx.iter().map(usize::to_string).collect();
            println!("indices: {}", idx.join(" "));
        }
        Command::Quiver { file } => {
            let t = read_triangulation(&file)?;
            let b = quiver_of(&t)?;
            for (i, a) in t.arcs().iter().enumerate() {
                println!("# {i}: {a}");
            }
            print!("{b}");
        }
        Command::Canon { file } => {
            let (t, shift) = canonical_orbit_form(&read_triangulation(&file)?);
            print!("{t}");
            eprintln!("shift: {shift}");
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
