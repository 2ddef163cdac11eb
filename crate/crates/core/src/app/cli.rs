use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use super::format::{self, FormatError};
use super::svg;
use crate::constructions::{
    identify_collinear, identify_general_position, identify_greedy_half, identify_grid_2xn,
    identify_grid_halfplanes, identify_grid_long, ConstructionError,
};
use crate::instances::{self, Family, Instance, InstanceError, Known};
use crate::kernel::rational::parse_rational;
use crate::kernel::{check_general_configuration, GeneralizedDisk, KernelError, RPoint};
use crate::oracle::{all_collinear, RadiusMode};
use crate::solver::{configured_cap, solve_exact_with_cap, verify, Mode, SolveError, Status};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INFEASIBLE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "diskident", version, about = "Identifying codes of planar point sets by disks")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Identify,
    Separate,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Identify => Mode::Identify,
            ModeArg::Separate => Mode::SeparateOnly,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Algorithm {
    Auto,
    Collinear,
    Greedy,
    Genpos,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Check that a disk family identifies a point set.
    Verify {
        points: PathBuf,
        disks: PathBuf,
        #[arg(long, value_enum, default_value = "identify")]
        mode: ModeArg,
    },
    /// Minimum identifying family, by exact search.
    Solve {
        points: PathBuf,
        /// "free", or a fixed radius R (disks of squared radius R^2).
        #[arg(long, default_value = "free")]
        radius: String,
        #[arg(long, value_enum, default_value = "identify")]
        mode: ModeArg,
        /// Largest point count to attempt (default: DISKIDENT_CAP or 16).
        #[arg(long)]
        cap: Option<usize>,
        /// Write the disks here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a construction on a point file or a grid family.
    Construct {
        points: Option<PathBuf>,
        /// grid2:n, gridhp:m,n or gridlong:m,n
        #[arg(long, conflicts_with = "points")]
        family: Option<String>,
        #[arg(long, value_enum, default_value = "auto")]
        algorithm: Algorithm,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write the family's points (with --family).
        #[arg(long)]
        points_out: Option<PathBuf>,
    },
    /// Generate an instance.
    Gen {
        /// polygon:k, intermediate:n,k, parabola:n, grid:m,n, collinear:n or random:n,seed
        #[arg(long)]
        family: String,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Reference disks, for families that come with them.
        #[arg(long)]
        disks_out: Option<PathBuf>,
    },
    /// Draw points and disks as SVG.
    Render {
        points: PathBuf,
        disks: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Closed-form bounds for n points or an m x n grid.
    Bounds {
        #[arg(required_unless_present = "grid", conflicts_with = "grid")]
        n: Option<usize>,
        #[arg(long)]
        grid: Option<String>,
    },
}

/// Error carrying its exit code.
struct Fail(i32, String);

fn usage(msg: impl Into<String>) -> Fail {
    Fail(EXIT_USAGE, msg.into())
}

/// Kernel errors with point indices shifted to 1-based.
fn kernel_msg(e: &KernelError) -> String {
    match *e {
        KernelError::Collinear(i, j, k) => {
            format!("three collinear points at indices {}, {}, {}", i + 1, j + 1, k + 1)
        }
        KernelError::Cocyclic(i, j, k, l) => format!(
            "four cocyclic points at indices {}, {}, {}, {}",
            i + 1,
            j + 1,
            k + 1,
            l + 1
        ),
        KernelError::Duplicate(i, j) => format!("duplicate points at indices {} and {}", i + 1, j + 1),
        ref other => other.to_string(),
    }
}

fn construction_msg(e: &ConstructionError) -> String {
    match e {
        ConstructionError::Kernel(k) => kernel_msg(k),
        other => other.to_string(),
    }
}

fn read(path: &Path) -> Result<String, Fail> {
    std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<(), Fail> {
    std::fs::write(path, text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn format_err(path: &Path, e: FormatError) -> Fail {
    let msg = match e {
        FormatError::Duplicate(i, j) => format!("duplicate points {} and {}", i + 1, j + 1),
        other => other.to_string(),
    };
    usage(format!("{}: {msg}", path.display()))
}

fn load_points(path: &Path) -> Result<Vec<RPoint>, Fail> {
    format::parse_points(&read(path)?)
        .map(|f| f.points)
        .map_err(|e| format_err(path, e))
}

fn load_disks(path: &Path) -> Result<Vec<GeneralizedDisk>, Fail> {
    format::parse_disks(&read(path)?)
        .map(|f| f.disks)
        .map_err(|e| format_err(path, e))
}

fn status_line(st: &Status, disks: usize, points: usize) -> String {
    match *st {
        Status::Valid => format!("VALID, {disks} disks, {points} points"),
        Status::Uncovered(i) => format!("UNCOVERED point {}", i + 1),
        Status::Unseparated(i, j) => format!("UNSEPARATED points {} and {}", i + 1, j + 1),
    }
}

fn nums(s: &str, want: usize, spec: &str) -> Result<Vec<usize>, Fail> {
    let v: Vec<usize> = s
        .split(',')
        .map(|t| t.trim().parse::<usize>())
        .collect::<Result<_, _>>()
        .map_err(|_| usage(format!("bad parameters '{s}', expected {spec}")))?;
    if v.len() != want {
        return Err(usage(format!("bad parameters '{s}', expected {spec}")));
    }
    Ok(v)
}

fn known_json(k: &Known) -> Value {
    json!({"lower": k.lower, "upper": k.upper, "exact": k.exact})
}

fn instance_err(e: InstanceError) -> Fail {
    usage(e.to_string())
}

fn generate(spec: &str) -> Result<Instance, Fail> {
    let (name, params) = spec.split_once(':').unwrap_or((spec, ""));
    match name {
        "polygon" => {
            let k = nums(params, 1, "polygon:k")?[0];
            let (disks, points) = instances::gen_polygon_arrangement(k).map_err(instance_err)?;
            Ok(Instance {
                family: Family::PolygonArrangement(k),
                points,
                known: Some(Known { lower: k, upper: k, exact: Some(k) }),
                disks,
            })
        }
        "intermediate" => {
            let v = nums(params, 2, "intermediate:n,k")?;
            instances::gen_intermediate(v[0], v[1]).map_err(instance_err)
        }
        "parabola" => Ok(instances::gen_half_parabola(nums(params, 1, "parabola:n")?[0])),
        "collinear" => Ok(instances::gen_collinear(nums(params, 1, "collinear:n")?[0])),
        "grid" => {
            let v = nums(params, 2, "grid:m,n")?;
            Ok(instances::gen_grid(v[0], v[1]))
        }
        "random" => {
            let (n, seed) = params
                .split_once(',')
                .ok_or_else(|| usage("expected random:n,seed"))?;
            let n: usize = n.trim().parse().map_err(|_| usage(format!("bad n '{n}'")))?;
            let seed = seed.trim();
            let seed = seed.strip_prefix("seed=").unwrap_or(seed);
            let seed: u64 = seed.parse().map_err(|_| usage(format!("bad seed '{seed}'")))?;
            Ok(instances::gen_random_general(n, seed))
        }
        _ => Err(usage(format!("unknown family '{spec}'"))),
    }
}

fn emit(out: &mut dyn Write, path: Option<&Path>, text: &str) -> Result<(), Fail> {
    match path {
        Some(p) => write_file(p, text),
        None => out.write_all(text.as_bytes()).map_err(|e| usage(e.to_string())),
    }
}

fn say(out: &mut dyn Write, line: &str) -> Result<(), Fail> {
    writeln!(out, "{line}").map_err(|e| usage(e.to_string()))
}

fn cmd_verify(out: &mut dyn Write, points: &Path, disks: &Path, mode: Mode) -> Result<i32, Fail> {
    let pts = load_points(points)?;
    let ds = load_disks(disks)?;
    let cert = verify(&pts, &ds, mode);
    say(out, &status_line(&cert.status, ds.len(), pts.len()))?;
    Ok(if cert.is_valid() { EXIT_OK } else { EXIT_INVALID })
}

fn cmd_solve(
    out: &mut dyn Write,
    points: &Path,
    radius: &str,
    mode: Mode,
    cap: Option<usize>,
    target: Option<&Path>,
) -> Result<i32, Fail> {
    let pts = load_points(points)?;
    let radius_mode = if radius == "free" {
        RadiusMode::Free
    } else {
        let r = parse_rational(radius).map_err(|e| usage(format!("--radius: {e}")))?;
        if r <= num_traits::Zero::zero() {
            return Err(usage("--radius must be positive"));
        }
        RadiusMode::Fixed(&r * &r)
    };
    let cap = cap.unwrap_or_else(configured_cap);
    let res = solve_exact_with_cap(&pts, mode, &radius_mode, cap).map_err(|e| match e {
        SolveError::CapExceeded { n, cap } => Fail(
            EXIT_INFEASIBLE,
            format!("{n} points exceed the solver cap of {cap} (raise with --cap or DISKIDENT_CAP)"),
        ),
        SolveError::Infeasible(u, v) => Fail(
            EXIT_INFEASIBLE,
            format!("INFEASIBLE: no disk separates points {} and {}", u + 1, v + 1),
        ),
        SolveError::Uncoverable(u) => {
            Fail(EXIT_INFEASIBLE, format!("INFEASIBLE: no disk covers point {}", u + 1))
        }
        SolveError::Kernel(k) => usage(kernel_msg(&k)),
    })?;
    say(out, &format!("optimal {}", res.size))?;
    let meta = json!({"size": res.size, "optimal": res.optimal, "radius": radius});
    emit(out, target, &format::write_disks(&res.disks, Some(&meta)))?;
    Ok(EXIT_OK)
}

fn grid_family(spec: &str) -> Result<(Vec<RPoint>, Vec<GeneralizedDisk>, String), Fail> {
    let (name, params) = spec.split_once(':').unwrap_or((spec, ""));
    let built = match name {
        "grid2" => {
            let n = nums(params, 1, "grid2:n")?[0];
            (instances::gen_grid(2, n).points, identify_grid_2xn(n))
        }
        "gridhp" => {
            let v = nums(params, 2, "gridhp:m,n")?;
            (instances::gen_grid(v[0], v[1]).points, identify_grid_halfplanes(v[0], v[1]))
        }
        "gridlong" => {
            let v = nums(params, 2, "gridlong:m,n")?;
            (instances::gen_grid(v[0], v[1]).points, identify_grid_long(v[0], v[1]))
        }
        _ => return Err(usage(format!("unknown family '{spec}'"))),
    };
    let disks = built.1.map_err(|e| usage(construction_msg(&e)))?;
    Ok((built.0, disks, spec.to_string()))
}

fn cmd_construct(
    out: &mut dyn Write,
    points: Option<&Path>,
    family: Option<&str>,
    algorithm: Algorithm,
    target: Option<&Path>,
    points_out: Option<&Path>,
) -> Result<i32, Fail> {
    let (pts, disks, label) = match (points, family) {
        (_, Some(f)) => grid_family(f)?,
        (Some(p), None) => {
            let pts = load_points(p)?;
            let algo = match algorithm {
                Algorithm::Auto if all_collinear(&pts) => Algorithm::Collinear,
                Algorithm::Auto if check_general_configuration(&pts).is_ok() => Algorithm::Genpos,
                Algorithm::Auto => Algorithm::Greedy,
                a => a,
            };
            let (res, name) = match algo {
                Algorithm::Collinear => (identify_collinear(&pts), "collinear"),
                Algorithm::Genpos => (identify_general_position(&pts), "genpos"),
                _ => (identify_greedy_half(&pts), "greedy"),
            };
            let disks = res.map_err(|e| usage(construction_msg(&e)))?;
            (pts, disks, name.to_string())
        }
        (None, None) => return Err(usage("give a points file or --family")),
    };
    let cert = verify(&pts, &disks, Mode::Identify);
    if !cert.is_valid() {
        return Ok({
            say(out, &format!("{label}: {}", status_line(&cert.status, disks.len(), pts.len())))?;
            EXIT_INVALID
        });
    }
    if let Some(p) = points_out {
        write_file(p, &format::write_points(&pts, Some(&json!({"family": label}))))?;
    }
    let meta = json!({"algorithm": label, "size": disks.len()});
    let text = format::write_disks(&disks, Some(&meta));
    say(out, &format!("{label}: {}", status_line(&cert.status, disks.len(), pts.len())))?;
    emit(out, target, &text)?;
    Ok(EXIT_OK)
}

fn cmd_gen(
    out: &mut dyn Write,
    family: &str,
    target: Option<&Path>,
    disks_out: Option<&Path>,
) -> Result<i32, Fail> {
    let inst = generate(family)?;
    let mut meta = json!({"family": inst.family.to_string(), "n": inst.points.len()});
    if let Some(k) = &inst.known {
        meta["known"] = known_json(k);
    }
    let text = format::write_points(&inst.points, Some(&meta));
    if target.is_some() {
        say(
            out,
            &format!("{}: {} points, {} disks", inst.family, inst.points.len(), inst.disks.len()),
        )?;
    }
    emit(out, target, &text)?;
    if let Some(p) = disks_out {
        let dmeta = json!({"family": inst.family.to_string(), "size": inst.disks.len()});
        write_file(p, &format::write_disks(&inst.disks, Some(&dmeta)))?;
    }
    Ok(EXIT_OK)
}

fn cmd_render(
    out: &mut dyn Write,
    points: &Path,
    disks: Option<&Path>,
    target: Option<&Path>,
) -> Result<i32, Fail> {
    let pts = load_points(points)?;
    let ds = match disks {
        Some(d) => load_disks(d)?,
        None => Vec::new(),
    };
    emit(out, target, &svg::render(&pts, &ds))?;
    Ok(EXIT_OK)
}

fn cmd_bounds(out: &mut dyn Write, n: Option<usize>, grid: Option<&str>) -> Result<i32, Fail> {
    let bad = |e: InstanceError| usage(e.to_string());
    let (total, dims) = match (n, grid) {
        (_, Some(g)) => {
            let v = nums(g, 2, "--grid m,n")?;
            (v[0] * v[1], Some((v[0], v[1])))
        }
        (Some(n), None) => (n, None),
        (None, None) => return Err(usage("give n or --grid m,n")),
    };
    let mut rows: Vec<(&str, usize)> = vec![
        ("log-bound", instances::bound_log(total).map_err(bad)?),
        ("sqrt-bound", instances::bound_sqrt(total).map_err(bad)?),
        ("upper-bound", instances::bound_upper(total).map_err(bad)?),
    ];
    match dims {
        None => {
            rows.push(("collinear-exact", instances::bound_collinear(total).map_err(bad)?));
            rows.push(("genpos-bound", instances::bound_genpos(total).map_err(bad)?));
        }
        Some((m, k)) => {
            let (lo, hi) = (m.min(k), m.max(k));
            if lo == 1 {
                rows.push(("collinear-exact", instances::bound_collinear(total).map_err(bad)?));
            }
            if lo == 2 {
                rows.push(("grid2-exact", instances::bound_grid2(hi).map_err(bad)?));
            }
            if lo >= 3 {
                rows.push(("halfplane-bound", instances::bound_grid_hp(m, k).map_err(bad)?));
            }
        }
    }
    for (name, v) in rows {
        say(out, &format!("{name} {v}"))?;
    }
    Ok(EXIT_OK)
}

fn dispatch(cmd: Cmd, out: &mut dyn Write) -> Result<i32, Fail> {
    match cmd {
        Cmd::Verify { points, disks, mode } => cmd_verify(out, &points, &disks, mode.into()),
        Cmd::Solve { points, radius, mode, cap, out: target } => {
            cmd_solve(out, &points, &radius, mode.into(), cap, target.as_deref())
        }
        Cmd::Construct { points, family, algorithm, out: target, points_out } => cmd_construct(
            out,
            points.as_deref(),
            family.as_deref(),
            algorithm,
            target.as_deref(),
            points_out.as_deref(),
        ),
        Cmd::Gen { family, out: target, disks_out } => {
            cmd_gen(out, &family, target.as_deref(), disks_out.as_deref())
        }
        Cmd::Render { points, disks, out: target } => {
            cmd_render(out, &points, disks.as_deref(), target.as_deref())
        }
        Cmd::Bounds { n, grid } => cmd_bounds(out, n, grid.as_deref()),
    }
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(sink, "{}", e.render());
            return if code == 0 { EXIT_OK } else { EXIT_USAGE };
        }
    };
    match dispatch(cli.cmd, out) {
        Ok(code) => code,
        Err(Fail(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}
