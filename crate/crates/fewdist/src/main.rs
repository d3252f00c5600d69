//! Command-line interface: bound, lp, expand, oracle, and sweep subcommands.

use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};

use fewdist::bounds::{self, BoundReport, Method};
use fewdist::exact::BigRational;
use fewdist::expansion::{annihilator, expand, DistanceSet};
use fewdist::harness::{self, Family, SweepSpec};
use fewdist::lp::delsarte_lp;
use fewdist::oracle::max_code;
use fewdist::spaces::Space;
use fewdist::Error;

#[derive(Parser)]
#[command(
    name = "fewdist",
    version,
    about = "Exact upper bounds on codes with few distances"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute one closed-form or LP bound for a distance set.
    Bound(BoundArgs),
    /// Solve the Delsarte linear program, printing optimum, alpha, and dual.
    Lp(LpArgs),
    /// Expand the annihilator of a distance set in the orthogonal basis.
    Expand(SpaceArgs),
    /// Brute-force the exact maximum code size on a tiny space.
    Oracle(OracleArgs),
    /// Sweep a parameter family, composing bounds per distance set.
    Sweep(SweepArgs),
}

#[derive(Args)]
struct SpaceArgs {
    /// hamming | johnson | sphere
    #[arg(long)]
    space: String,
    /// Word length / ambient dimension.
    #[arg(long)]
    n: u32,
    /// Alphabet size (Hamming).
    #[arg(long)]
    q: Option<u32>,
    /// Weight (Johnson).
    #[arg(long)]
    w: Option<u32>,
    /// Comma-separated distances: integers, or rationals like -1/2 on the sphere.
    #[arg(long, allow_hyphen_values = true)]
    distances: String,
    /// table | json
    #[arg(long, default_value = "table")]
    format: String,
}

#[derive(Args)]
struct BoundArgs {
    #[command(flatten)]
    space: SpaceArgs,
    /// dgs | nozaki | thm-new | rcw | rcw-new | def | ekr | hamming-eqh |
    /// binary2 | binary3 | sphere-dgs | sphere-even | lrs | lp
    #[arg(long)]
    method: String,
    /// Constraint degree cap (LP on the sphere).
    #[arg(long)]
    degree_cap: Option<usize>,
}

#[derive(Args)]
struct LpArgs {
    #[command(flatten)]
    space: SpaceArgs,
    /// Constraint degree cap (required on the sphere).
    #[arg(long)]
    degree_cap: Option<usize>,
}

#[derive(Args)]
struct OracleArgs {
    #[command(flatten)]
    space: SpaceArgs,
    /// Vertex budget (default 65536).
    #[arg(long)]
    limit: Option<usize>,
    /// Print one maximum code, not just its size.
    #[arg(long)]
    emit: bool,
}

#[derive(Args)]
struct SweepArgs {
    /// johnson2 | hamming2 | hamming3 | hamming4
    #[arg(long)]
    family: String,
    /// Inclusive n range, e.g. 6..14 (defaults to the family's usual range).
    #[arg(long)]
    n: Option<String>,
    /// Inclusive w range for johnson2, e.g. 3..7.
    #[arg(long)]
    w: Option<String>,
    /// table | csv | json
    #[arg(long, default_value = "table")]
    format: String,
    /// Output file (stdout if omitted).
    #[arg(long)]
    out: Option<String>,
    /// Worker threads (0 = all cores).
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Skip the Delsarte LP; dispose by conditions and fallbacks only.
    #[arg(long)]
    no_lp: bool,
    /// Maximum number of LP solves before refusing.
    #[arg(long)]
    budget: Option<u64>,
}

fn parse_space(args: &SpaceArgs) -> Result<Space, Error> {
    match args.space.as_str() {
        "hamming" => {
            let q = args.q.ok_or_else(|| Error::Domain("hamming needs --q".into()))?;
            Space::hamming(args.n, q)
        }
        "johnson" => {
            let w = args.w.ok_or_else(|| Error::Domain("johnson needs --w".into()))?;
            Space::johnson(args.n, w)
        }
        "sphere" => Space::sphere(args.n),
        other => Err(Error::Domain(format!(
            "unknown space `{other}` (expected hamming|johnson|sphere)"
        ))),
    }
}

fn parse_distances(space: Space, text: &str) -> Result<DistanceSet, Error> {
    let mut values = Vec::new();
    for token in text.split(',') {
        let token = token.trim();
        let value = BigRational::from_str(token)
            .map_err(|e| Error::Domain(format!("bad distance `{token}`: {e}")))?;
        values.push(value);
    }
    DistanceSet::new(space, values)
}

fn parse_range(text: &str) -> Result<(u32, u32), Error> {
    let parse_one = |t: &str| {
        t.trim()
            .parse::<u32>()
            .map_err(|e| Error::Domain(format!("bad range endpoint `{t}`: {e}")))
    };
    match text.split_once("..") {
        Some((lo, hi)) => Ok((parse_one(lo)?, parse_one(hi)?)),
        None => {
            let v = parse_one(text)?;
            Ok((v, v))
        }
    }
}

fn print_report(ds: &DistanceSet, report: &BoundReport, format: &str) -> Result<(), Error> {
    match format {
        "json" => println!(
            "{}",
            serde_json::to_string_pretty(&harness::report_json(ds, report)).unwrap()
        ),
        "table" => {
            println!("space:      {}", ds.space());
            println!("distances:  {ds}");
            println!("method:     {}", report.method);
            println!("value:      {}", report.value);
            if let Some(exact) = &report.exact {
                println!("exact:      {exact}");
            }
            println!("applicable: {}", report.applicable);
            for c in &report.conditions {
                let witness = c
                    .witness
                    .as_ref()
                    .map(|w| format!(" (witness {w})"))
                    .unwrap_or_default();
                println!(
                    "condition:  {} -> {}{witness}",
                    c.name,
                    if c.satisfied { "holds" } else { "fails" }
                );
            }
            println!("citation:   {}", report.citation);
        }
        other => return Err(Error::Domain(format!("unknown format `{other}`"))),
    }
    Ok(())
}

fn johnson_ells(space: Space, ds: &DistanceSet) -> Result<(u32, u32, Vec<u64>), Error> {
    let Space::Johnson { n, w } = space else {
        return Err(Error::Domain(
            "this method needs the Johnson space (intersecting families)".into(),
        ));
    };
    let ells = ds
        .integer_values()
        .expect("finite distances")
        .iter()
        .map(|d| w as u64 - d)
        .collect();
    Ok((n, w, ells))
}

fn run_bound(args: &BoundArgs) -> Result<(), Error> {
    let space = parse_space(&args.space)?;
    let ds = parse_distances(space, &args.space.distances)?;
    let s = ds.size();
    let dist_ints = ds.integer_values();
    let method = Method::from_str(&args.method)?;
    let report = match method {
        Method::Dgs => bounds::dgs_bound(space, s)?,
        Method::Nozaki => bounds::nozaki_bound(&ds)?,
        Method::ThmNew => bounds::thm_new_bound(&ds)?,
        Method::Rcw => {
            let (n, _, _) = johnson_ells(space, &ds)?;
            bounds::rcw_bound(n, s)
        }
        Method::RcwNew => {
            if s == 2 || s == 3 {
                bounds::corollary_bounds(&ds)?
            } else {
                let (n, w, ells) = johnson_ells(space, &ds)?;
                bounds::rcw_new_bound(n, w, &ells)?
            }
        }
        Method::Def => {
            let (n, w, ells) = johnson_ells(space, &ds)?;
            bounds::def_bound(n, w, &ells)?
        }
        Method::Ekr => {
            let (n, w, _) = johnson_ells(space, &ds)?;
            bounds::ekr_bound(n, w, s)?
        }
        Method::HammingEqH => bounds::hamming_eqh_bound(&ds)?,
        Method::Binary2 => {
            let d = require_binary(space, &dist_ints, 2)?;
            bounds::binary2_bound(args.space.n, d[0], d[1])?
        }
        Method::Binary3 => {
            let d = require_binary(space, &dist_ints, 3)?;
            bounds::binary3_bound(args.space.n, d[0], d[1], d[2])?
        }
        Method::SphereDgs => {
            let Space::Sphere { n } = space else {
                return Err(Error::Domain("sphere-dgs needs --space sphere".into()));
            };
            bounds::sphere_dgs_bound(n, s)
        }
        Method::SphereEven => bounds::sphere_even_bound(&ds)?,
        Method::LrsFallback => {
            let d = dist_ints
                .as_ref()
                .filter(|d| d.len() == 2)
                .ok_or_else(|| Error::Domain("lrs needs two integer distances".into()))?;
            bounds::lrs_fallback_bound(args.space.n, d[0], d[1])?
        }
        Method::Lp => delsarte_lp(&ds, args.degree_cap)?.report,
    };
    print_report(&ds, &report, &args.space.format)
}

fn require_binary(
    space: Space,
    dist_ints: &Option<Vec<u64>>,
    s: usize,
) -> Result<Vec<u64>, Error> {
    match (space, dist_ints) {
        (Space::Hamming { q: 2, .. }, Some(d)) if d.len() == s => Ok(d.clone()),
        _ => Err(Error::Domain(format!(
            "this method needs the binary Hamming space with exactly {s} distances"
        ))),
    }
}

fn run_lp(args: &LpArgs) -> Result<(), Error> {
    let space = parse_space(&args.space)?;
    let ds = parse_distances(space, &args.space.distances)?;
    let outcome = delsarte_lp(&ds, args.degree_cap)?;
    match args.space.format.as_str() {
        "json" => println!(
            "{}",
            serde_json::to_string_pretty(&harness::lp_json(&ds, &outcome)).unwrap()
        ),
        "table" => {
            print_report(&ds, &outcome.report, "table")?;
            println!("degree cap: {}", outcome.degree_cap);
            let alpha: Vec<String> =
                outcome.solution.primal.iter().map(|a| a.to_string()).collect();
            println!("alpha:      [{}]", alpha.join(", "));
            let dual: Vec<String> =
                outcome.solution.dual.iter().map(|d| d.to_string()).collect();
            println!("dual:       [{}]", dual.join(", "));
        }
        other => return Err(Error::Domain(format!("unknown format `{other}`"))),
    }
    Ok(())
}

fn run_expand(args: &SpaceArgs) -> Result<(), Error> {
    let space = parse_space(args)?;
    let ds = parse_distances(space, &args.distances)?;
    let f = annihilator(&ds);
    let exp = expand(space, &f)?;
    match args.format.as_str() {
        "json" => {
            let coeffs: Vec<String> = exp.coeffs().iter().map(|c| c.to_string()).collect();
            let norms: Vec<String> =
                exp.basis_normalization().iter().map(|v| v.to_string()).collect();
            let value = serde_json::json!({
                "space": harness::space_json(space),
                "distances": ds.values().iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                "annihilator": f.to_string(),
                "coefficients": coeffs,
                "basis_normalization": norms,
            });
            println!("{}", serde_json::to_string_pretty(&value).unwrap());
        }
        "table" => {
            println!("space:       {space}");
            println!("distances:   {ds}");
            println!("annihilator: {f}");
            for (i, c) in exp.coeffs().iter().enumerate() {
                println!("f_{i} = {c}");
            }
        }
        other => return Err(Error::Domain(format!("unknown format `{other}`"))),
    }
    Ok(())
}

fn run_oracle(args: &OracleArgs) -> Result<(), Error> {
    let space = parse_space(&args.space)?;
    let ds = parse_distances(space, &args.space.distances)?;
    let out = max_code(&ds, args.limit)?;
    match args.space.format.as_str() {
        "json" => {
            let points: Vec<String> = out.points.iter().map(|p| p.to_string()).collect();
            let value = serde_json::json!({
                "space": harness::space_json(space),
                "distances": ds.values().iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                "max_code_size": out.size,
                "code": if args.emit { Some(points) } else { None },
            });
            println!("{}", serde_json::to_string_pretty(&value).unwrap());
        }
        "table" => {
            println!("space:         {space}");
            println!("distances:     {ds}");
            println!("max code size: {}", out.size);
            if args.emit {
                for p in &out.points {
                    println!("  {p}");
                }
            }
        }
        other => return Err(Error::Domain(format!("unknown format `{other}`"))),
    }
    Ok(())
}

fn run_sweep(args: &SweepArgs) -> Result<(), Error> {
    let family = Family::from_str(&args.family)?;
    let mut spec = SweepSpec::new(family);
    if let Some(n) = &args.n {
        spec.n_range = parse_range(n)?;
    }
    if let Some(w) = &args.w {
        spec.w_range = Some(parse_range(w)?);
    }
    spec.lp_enabled = !args.no_lp;
    spec.jobs = args.jobs;
    spec.lp_budget = args.budget;
    let rows = harness::run_sweep(&spec)?;
    let rendered = match args.format.as_str() {
        "csv" => harness::rows_to_csv(&rows),
        "json" => {
            serde_json::to_string_pretty(&harness::rows_to_json(family, &rows)).unwrap() + "\n"
        }
        "table" => harness::rows_to_table(&rows),
        other => return Err(Error::Domain(format!("unknown format `{other}`"))),
    };
    match &args.out {
        Some(path) => std::fs::write(path, rendered)
            .map_err(|e| Error::Domain(format!("writing {path}: {e}")))?,
        None => print!("{rendered}"),
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.cmd {
        Cmd::Bound(args) => run_bound(args),
        Cmd::Lp(args) => run_lp(args),
        Cmd::Expand(args) => run_expand(args),
        Cmd::Oracle(args) => run_oracle(args),
        Cmd::Sweep(args) => run_sweep(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err @ Error::Budget(_)) => {
            eprintln!("error: {err}");
            ExitCode::from(3)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
