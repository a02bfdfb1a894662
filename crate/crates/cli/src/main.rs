mod svg;
mod verify;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use multisplit::io::{
    from_json, heights_from_json, to_json, Catalog, ClassJson, HeightsInput, LiftingJson, MatroidJson, MultiSplitJson,
    PointsJson, ProductLiftingJson, SubdivisionJson,
};
use multisplit::multisplit::{
    count_multisplits_formula, count_product_multisplits_formula, enumerate_multisplits,
    enumerate_product_multisplits, for_each_multisplit, symmetry_classes, DEFAULT_MAX_N,
};
use multisplit::stiefel::{induced_product_lifting, stiefel_lift};
use multisplit::{
    corank_subdivision, is_tropical_plucker, regular_subdivision, Lifting, PointConfiguration,
    Rational, Subset,
};

use verify::Check;

pub(crate) const CHECK_FAILED: u8 = 1;
const ORACLE_MISMATCH: u8 = 3;
const USAGE: u8 = 2;
const IO: u8 = 4;

/// Multi-splits of hypersimplices and products of simplices, in exact arithmetic.
#[derive(Parser)]
#[command(name = "multisplit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Number of k-splits from the closed formula.
    Count(CountArgs),
    /// Write every canonical k-split of Δ(d, n) as a catalog.
    Enumerate(EnumerateArgs),
    /// Certify a catalog, a multi-split or a matroid file.
    Verify(VerifyArgs),
    /// Regular subdivision induced by a height function.
    Subdivide(SubdivideArgs),
    /// Tropical Stiefel map and its inverse on a fixed base vertex.
    #[command(subcommand)]
    Stiefel(StiefelCommand),
    /// Corank vector of a matroid, optionally with its subdivision.
    Corank {
        matroid: PathBuf,
        #[arg(long)]
        subdivision: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the three-term tropical Plücker relations.
    PluckerCheck { heights: PathBuf },
    /// Symmetry classes of k-splits under permutations of [n].
    Classes {
        #[arg(short)]
        d: usize,
        #[arg(short)]
        n: usize,
        /// Every admissible k when omitted.
        #[arg(short)]
        k: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        max_n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
#[command(group(clap::ArgGroup::new("target").required(true).args(["hypersimplex", "product"])))]
struct CountArgs {
    /// Count k-splits of Δ(d, n).
    #[arg(long)]
    hypersimplex: bool,
    /// Count k-splits of Δ_{d−1} × Δ_{ℓ−1}.
    #[arg(long)]
    product: bool,
    #[arg(short)]
    d: usize,
    #[arg(short, required_if_eq("hypersimplex", "true"), conflicts_with = "product")]
    n: Option<usize>,
    #[arg(short, required_if_eq("product", "true"), conflicts_with = "hypersimplex")]
    l: Option<usize>,
    #[arg(short)]
    k: usize,
    /// Also count by brute-force enumeration; exit 3 on disagreement.
    #[arg(long)]
    oracle: bool,
    /// Largest n the oracle will enumerate.
    #[arg(long, default_value_t = DEFAULT_MAX_N)]
    max_n: usize,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(short)]
    d: usize,
    #[arg(short)]
    n: usize,
    /// Every admissible k when omitted.
    #[arg(short)]
    k: Option<usize>,
    /// Also record one representative per symmetry class.
    #[arg(long)]
    classes: bool,
    #[arg(long, default_value_t = DEFAULT_MAX_N)]
    max_n: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    input: PathBuf,
    /// Checks to run; all of them when omitted.
    #[arg(long = "check", value_enum)]
    checks: Vec<Check>,
    /// Run the Stiefel round trip from every common basis, not just the first.
    #[arg(long)]
    all_bases: bool,
}

#[derive(Args)]
#[command(group(clap::ArgGroup::new("config").required(true).args(["points", "hypersimplex"])))]
struct SubdivideArgs {
    /// Point file `{"points": [[x, y, ...], ...]}`.
    #[arg(long)]
    points: Option<PathBuf>,
    /// Vertices of Δ(d, n) in colex order.
    #[arg(long, num_args = 2, value_names = ["D", "N"])]
    hypersimplex: Option<Vec<usize>>,
    /// A list of heights, or `{"d", "n", "heights"}`.
    #[arg(long)]
    heights: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also draw the cells; planar configurations only.
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Subcommand)]
enum StiefelCommand {
    /// Product lifting to heights on Δ(d, n).
    Lift {
        lifting: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Heights on Δ(d, n) to the product lifting at a base vertex.
    Restrict {
        #[arg(long)]
        heights: PathBuf,
        /// Comma-separated, 1-based.
        #[arg(long, value_delimiter = ',')]
        base: Vec<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            let io = e.chain().any(|c| c.downcast_ref::<std::io::Error>().is_some());
            ExitCode::from(if io { IO } else { USAGE })
        }
    }
}

fn run(command: Command) -> Result<u8> {
    match command {
        Command::Count(a) => count(a),
        Command::Enumerate(a) => enumerate(a),
        Command::Verify(a) => verify::run(&a.input, &a.checks, a.all_bases),
        Command::Subdivide(a) => subdivide(a),
        Command::Stiefel(StiefelCommand::Lift { lifting, out }) => {
            let pl = read::<ProductLiftingJson>(&lifting)?.to_lifting::<Rational>()?;
            let p = stiefel_lift(&pl);
            emit(out.as_deref(), &LiftingJson::from_lifting(pl.d(), pl.n(), &p))
        }
        Command::Stiefel(StiefelCommand::Restrict { heights, base, out }) => {
            let lj = read::<LiftingJson>(&heights)?;
            let p = lj.to_lifting::<Rational>()?;
            let base = Subset::from_elements(lj.n, &base)?;
            if base.len() != lj.d {
                bail!("base {base} has {} elements, expected d = {}", base.len(), lj.d);
            }
            emit(out.as_deref(), &ProductLiftingJson::from_lifting(&induced_product_lifting(&p, base)?))
        }
        Command::Corank { matroid, subdivision, out } => {
            let m = read::<MatroidJson>(&matroid)?.to_matroid()?;
            let lifting = Lifting::<Rational>::corank(&m);
            if subdivision {
                let pc = PointConfiguration::hypersimplex(m.d(), m.n())?;
                let s = corank_subdivision::<Rational>(&m)?;
                emit(out.as_deref(), &SubdivisionJson::new(&pc, &lifting, &s))
            } else {
                emit(out.as_deref(), &LiftingJson::from_lifting(m.d(), m.n(), &lifting))
            }
        }
        Command::PluckerCheck { heights } => {
            let lj = read::<LiftingJson>(&heights)?;
            let p = lj.to_lifting::<Rational>()?;
            if is_tropical_plucker(lj.d, lj.n, &p)? {
                println!("plucker PASS: Δ({}, {}) heights satisfy the three-term relations", lj.d, lj.n);
                Ok(0)
            } else {
                println!("plucker FAIL: {}", verify::plucker_violation_text(lj.d, lj.n, &p));
                Ok(CHECK_FAILED)
            }
        }
        Command::Classes { d, n, k, max_n, out } => {
            let mut classes = Vec::new();
            for k in ks(d, n, k) {
                for c in symmetry_classes(d, n, k, max_n)? {
                    classes.push(ClassJson {
                        representative: MultiSplitJson::from_multisplit(&c.representative),
                        orbit_size: c.orbit_size,
                        signature: c.signature,
                    });
                }
            }
            emit(out.as_deref(), &classes)
        }
    }
}

/// The given `k`, or every admissible one.
fn ks(d: usize, n: usize, k: Option<usize>) -> Vec<usize> {
    match k {
        Some(k) => vec![k],
        None => (2..=d.min(n.saturating_sub(d))).collect(),
    }
}

fn count(a: CountArgs) -> Result<u8> {
    let (value, oracle) = if a.hypersimplex {
        let n = a.n.expect("clap enforces -n");
        let value = count_multisplits_formula(a.d, n, a.k)?;
        let oracle = if a.oracle {
            let mut c = 0u128;
            for_each_multisplit(a.d, n, a.k, a.max_n, |_| c += 1)?;
            Some(c)
        } else {
            None
        };
        (value, oracle)
    } else {
        let l = a.l.expect("clap enforces -l");
        let value = count_product_multisplits_formula(a.d, l, a.k)?;
        let oracle = if a.oracle {
            if a.d + l > a.max_n {
                bail!("oracle limited to d + ℓ ≤ {}, raise --max-n", a.max_n);
            }
            Some(enumerate_product_multisplits(a.d, l, a.k)?.len() as u128)
        } else {
            None
        };
        (value, oracle)
    };
    println!("{value}");
    match oracle {
        Some(o) if o != value => {
            eprintln!("oracle mismatch: formula {value}, enumeration {o}");
            Ok(ORACLE_MISMATCH)
        }
        Some(_) => {
            eprintln!("oracle agrees");
            Ok(0)
        }
        None => Ok(0),
    }
}

fn enumerate(a: EnumerateArgs) -> Result<u8> {
    let ks = ks(a.d, a.n, a.k);
    if ks.is_empty() {
        bail!("Δ({}, {}) has no multi-splits: need 2 ≤ k ≤ min(d, n − d)", a.d, a.n);
    }
    let mut splits = Vec::new();
    let mut classes = Vec::new();
    for &k in &ks {
        splits.extend(enumerate_multisplits(a.d, a.n, k, a.max_n)?);
        if a.classes {
            classes.extend(symmetry_classes(a.d, a.n, k, a.max_n)?);
        }
    }
    let catalog = Catalog::new(a.d, a.n, a.k, &splits, a.classes.then_some(classes.as_slice()));
    emit(a.out.as_deref(), &catalog)
}

fn subdivide(a: SubdivideArgs) -> Result<u8> {
    let input = read::<HeightsInput>(&a.heights)?;
    let pc: PointConfiguration<Rational> = match (&a.points, &a.hypersimplex) {
        (Some(p), _) => read::<PointsJson>(p)?.to_configuration()?,
        (None, Some(dn)) => {
            let (d, n) = (dn[0], dn[1]);
            if let HeightsInput::Lifting(lj) = &input {
                if (lj.d, lj.n) != (d, n) {
                    bail!("heights are for Δ({}, {}), configuration is Δ({d}, {n})", lj.d, lj.n);
                }
            }
            PointConfiguration::hypersimplex(d, n)?
        }
        (None, None) => unreachable!("clap requires a configuration"),
    };
    let heights = input.heights();
    if heights.len() != pc.len() {
        bail!("{} heights for {} points", heights.len(), pc.len());
    }
    let lifting = heights_from_json(heights)?;
    let s = regular_subdivision(&pc, &lifting)?;
    if let Some(path) = &a.svg {
        if pc.dim() != 2 {
            bail!("SVG output needs points in the plane, got dimension {}", pc.dim());
        }
        write(path, &svg::render(&pc, &s))?;
    }
    emit(a.out.as_deref(), &SubdivisionJson::new(&pc, &lifting, &s))
}

pub(crate) fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn read<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let text = read_text(path)?;
    from_json(&text).with_context(|| format!("parsing {}", path.display()))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

/// JSON to a file, or to standard output.
fn emit<T: serde::Serialize>(out: Option<&Path>, value: &T) -> Result<u8> {
    let text = to_json(value);
    match out {
        Some(path) => write(path, &text)?,
        None => print!("{text}"),
    }
    Ok(0)
}
