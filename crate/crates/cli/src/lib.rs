//! Command-line front end for the `mixarea` library.
//!
//! Exit codes: 0 on success (or membership), 1 when the checked property
//! fails, 2 on malformed input.

pub mod input;

use anyhow::{anyhow, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use mixarea::configs::{enumerate_configs, Census, EnumerateOptions};
use mixarea::fuzz::{run_suite, FuzzConfig, GeneratorProfile, Suite};
use mixarea::geometry::config_vector;
use mixarea::pluecker::{
    check_membership, classify_multipartite, embed, graph_of, normalize_orbit, pl8_separation_witness,
    PlueckerError,
};
use mixarea::realize::{dimension_witness, realize_mv22, realize_pl4, realize_pmv3, RealizeError};
use mixarea::tropical::{
    bkk_check, intersect, intersection_config, lift_and_subdivide, render_svg, subdivision_window,
    tropical_curve, Figure, TropicalError, Window,
};
use serde::Serialize;
use std::io::Write;
use std::path::PathBuf;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Parser)]
#[command(name = "mixarea", version, about = "Exact mixed areas, Plücker-type inequalities and tropical intersection numbers")]
pub struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: Format,
    /// Write the result to a file instead of standard output
    #[arg(short = 'o', long = "output", global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct VectorInput {
    /// JSON file holding the vector
    pub file: Option<PathBuf>,
    /// Comma-separated entries in lexicographic pair order, e.g. 3,2,4,4,9,5
    #[arg(long, allow_hyphen_values = true)]
    pub values: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Areas and pairwise mixed areas of the bodies in the given files
    MixedArea {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Membership, classification and normalization of Plücker vectors
    #[command(subcommand)]
    Pluecker(PlueckerCmd),
    /// Bodies with prescribed mixed areas
    #[command(subcommand)]
    Realize(RealizeCmd),
    /// Census of triangle-normal configurations for a multiplicity profile
    Configs {
        /// Multiplicities of the normals, e.g. 2,2,2,2,2,2
        #[arg(long, default_value = "2,2,2,2,2,2")]
        profile: String,
        /// Keep matrices with three consecutive normals in one row
        #[arg(long)]
        allow_consecutive: bool,
    },
    /// Tropical curves, intersections and plots
    #[command(subcommand)]
    Tropical(TropicalCmd),
    /// Randomized exact property checks
    Fuzz {
        #[arg(value_parser = parse_suite)]
        suite: Suite,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 8)]
        max_vertices: usize,
        #[arg(long, default_value = "10")]
        coordinate_bound: String,
        #[arg(long, default_value = "polygons", value_parser = parse_profile)]
        profile: GeneratorProfile,
    },
    /// Exact Jacobian rank of the coefficient map at a positive matrix
    Dimension {
        /// JSON list of rows
        file: Option<PathBuf>,
        /// Rows separated by ';', entries by ',', e.g. "2,1;1,3"
        #[arg(long, allow_hyphen_values = true)]
        values: Option<String>,
    },
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse()
}

fn parse_profile(s: &str) -> Result<GeneratorProfile, String> {
    s.parse()
}

#[derive(Debug, Subcommand)]
pub enum PlueckerCmd {
    /// Check all Plücker-type inequalities (exit 1 on a violation)
    Check(VectorInput),
    /// Support graph type
    Classify(VectorInput),
    /// Canonical orbit representative with the group element reaching it
    Normalize(VectorInput),
    /// Append an isolated node
    Embed(VectorInput),
    /// Eight-node vector in the inequality space with no body realization
    Witness8(VectorInput),
}

#[derive(Debug, Subcommand)]
pub enum RealizeCmd {
    /// Four bodies realizing a vector of P̃l₄
    Pl4(VectorInput),
    /// Three bodies with mixed areas (v12, v13, v23)
    Pmv3(VectorInput),
    /// Two bodies with areas v11, v22 and mixed area v12, given as (v11, v12, v22)
    Mv22(VectorInput),
}

#[derive(Debug, Args)]
pub struct PolyInput {
    /// Polynomial JSON files
    pub files: Vec<PathBuf>,
    /// Named input set: four-curves or line
    #[arg(long)]
    pub preset: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum TropicalCmd {
    /// Curve (and with --subdivision, the dual subdivision) of each polynomial
    Curve {
        #[command(flatten)]
        input: PolyInput,
        #[arg(long)]
        subdivision: bool,
    },
    /// Crossings of the curves of exactly two polynomials
    Intersect(PolyInput),
    /// Intersection numbers of all pairs
    Config(PolyInput),
    /// Compare the intersection number with twice the mixed area
    Bkk(PolyInput),
    /// SVG of the curve arrangement, or of the subdivisions
    Plot {
        #[command(flatten)]
        input: PolyInput,
        /// xmin,ymin,xmax,ymax
        #[arg(long, allow_hyphen_values = true)]
        window: Option<String>,
        #[arg(long)]
        subdivisions: bool,
    },
}

/// A finished command: text to emit and the exit code.
pub struct Outcome {
    pub text: String,
    pub code: i32,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Self { text, code: 0 }
    }

    fn with(text: String, success: bool) -> Self {
        Self {
            text,
            code: if success { 0 } else { 1 },
        }
    }
}

fn json<T: Serialize>(x: &T) -> String {
    let mut s = serde_json::to_string_pretty(x).expect("serializable output");
    s.push('\n');
    s
}

fn vector_args(v: &VectorInput) -> (Option<&std::path::Path>, Option<&str>) {
    (v.file.as_deref(), v.values.as_deref())
}

fn pluecker(cmd: &PlueckerCmd, format: Format) -> Result<Outcome> {
    let input = match cmd {
        PlueckerCmd::Check(v)
        | PlueckerCmd::Classify(v)
        | PlueckerCmd::Normalize(v)
        | PlueckerCmd::Embed(v)
        | PlueckerCmd::Witness8(v) => v,
    };
    let (file, values) = vector_args(input);
    let v = input::load_vector(file, values)?;
    Ok(match cmd {
        PlueckerCmd::Check(_) => {
            let r = check_membership(&v);
            let text = match format {
                Format::Json => json(&r),
                Format::Table => {
                    let mut t = format!(
                        "vector {v}\nmember: {}\ninequalities checked: {}\n",
                        r.member, r.inequalities_checked
                    );
                    for (i, j) in &r.negative_entries {
                        t += &format!("negative entry v{i}{j}\n");
                    }
                    for x in &r.violations {
                        let [i, j, k, l] = x.quadruple;
                        t += &format!("violated: v{i}{j}·v{k}{l} = {} > v{i}{k}·v{j}{l} + v{i}{l}·v{j}{k} = {}\n", x.lhs, x.rhs);
                    }
                    t
                }
            };
            Outcome::with(text, r.member)
        }
        PlueckerCmd::Classify(_) => {
            let c = classify_multipartite(&graph_of(&v));
            let label = c.label();
            match format {
                Format::Json => Outcome::ok(json(&serde_json::json!({"label": label, "classification": c}))),
                Format::Table => Outcome::ok(format!("{label}\n")),
            }
        }
        PlueckerCmd::Normalize(_) => match normalize_orbit(&v) {
            Ok(n) => match format {
                Format::Json => Outcome::ok(json(&n)),
                Format::Table => Outcome::ok(format!("canonical {}\n", n.canonical)),
            },
            Err(e) => Outcome::with(format!("{e}\n"), false),
        },
        PlueckerCmd::Embed(_) => {
            let e = embed(&v);
            match format {
                Format::Json => Outcome::ok(json(&e)),
                Format::Table => Outcome::ok(format!("{e}\n")),
            }
        }
        PlueckerCmd::Witness8(_) => match pl8_separation_witness(&v) {
            Ok(w) => {
                let text = match format {
                    Format::Json => json(&w),
                    Format::Table => format!(
                        "member of Pl8: {} ({} inequalities)\nrelation: {}\n",
                        w.member, w.inequalities_checked, w.relation
                    ),
                };
                Outcome::with(text, w.member)
            }
            Err(e @ (PlueckerError::NotInPlueckerSpace(_) | PlueckerError::NoSeparation)) => {
                Outcome::with(format!("{e}\n"), false)
            }
            Err(e) => return Err(e.into()),
        },
    })
}

fn realize(cmd: &RealizeCmd) -> Result<Outcome> {
    let failed = |e: RealizeError| Ok(Outcome::with(format!("{e}\n"), false));
    match cmd {
        RealizeCmd::Pl4(v) => {
            let (file, values) = vector_args(v);
            let v = input::load_vector(file, values)?;
            match realize_pl4(&v) {
                Ok(r) => Ok(Outcome::ok(json(&r))),
                Err(e) => failed(e),
            }
        }
        RealizeCmd::Pmv3(v) => {
            let (file, values) = vector_args(v);
            let x = input::load_values(file, values, 3)?;
            match realize_pmv3([x[0].clone(), x[1].clone(), x[2].clone()]) {
                Ok(r) => Ok(Outcome::ok(json(&r))),
                Err(e) => failed(e),
            }
        }
        RealizeCmd::Mv22(v) => {
            let (file, values) = vector_args(v);
            let x = input::load_values(file, values, 3)?;
            match realize_mv22(&x[0], &x[1], &x[2]) {
                Ok(r) => Ok(Outcome::ok(json(&r))),
                Err(e) => failed(e),
            }
        }
    }
}

fn census_table(c: &Census) -> String {
    let profile: Vec<String> = c.profile.iter().map(|x| x.to_string()).collect();
    let k = c.classes.len();
    let mut t = format!(
        "profile {}: {k} {}, {} feasible\n",
        profile.join(","),
        if k == 1 { "class" } else { "classes" },
        c.feasible_count()
    );
    if c.shortcut {
        t += "a normal of multiplicity 4: settled without enumeration\n";
    }
    for (k, class) in c.classes.iter().enumerate() {
        let verdict = if class.feasibility.feasible { "feasible" } else { "infeasible" };
        let rows: Vec<String> = class
            .matrix
            .rows()
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect())
            .collect();
        t += &format!("{:>2}  {}  orbit {:>4}  {verdict}\n", k + 1, rows.join(" "), class.orbit_size);
    }
    t
}

fn tropical(cmd: &TropicalCmd, format: Format) -> Result<Outcome> {
    let load = |p: &PolyInput| input::load_polynomials(&p.files, p.preset.as_deref());
    let not_transversal = |e: TropicalError| -> Result<Outcome> {
        match e {
            TropicalError::NonTransversal(_) => Ok(Outcome::with(format!("{e}\n"), false)),
            other => Err(other.into()),
        }
    };
    let two = |p: &PolyInput| -> Result<_> {
        let fs = load(p)?;
        if fs.len() != 2 {
            return Err(anyhow!("expected exactly two polynomials, got {}", fs.len()));
        }
        Ok(fs)
    };
    match cmd {
        TropicalCmd::Curve { input, subdivision } => {
            let fs = load(input)?;
            let items: Vec<serde_json::Value> = fs
                .iter()
                .map(|f| {
                    let mut obj = serde_json::json!({"curve": tropical_curve(f)});
                    if *subdivision {
                        obj["subdivision"] = serde_json::to_value(lift_and_subdivide(f)).expect("serializable");
                    }
                    obj
                })
                .collect();
            Ok(Outcome::ok(if items.len() == 1 { json(&items[0]) } else { json(&items) }))
        }
        TropicalCmd::Intersect(p) => {
            let fs = two(p)?;
            match intersect(&tropical_curve(&fs[0]), &tropical_curve(&fs[1])) {
                Ok(r) => Ok(Outcome::ok(match format {
                    Format::Json => json(&r),
                    Format::Table => {
                        let mut t = format!("total {}\n", r.total);
                        for c in &r.points {
                            t += &format!("{}  multiplicity {}  ({} × {})\n", c.point, c.multiplicity, c.first, c.second);
                        }
                        t
                    }
                })),
                Err(e) => not_transversal(e),
            }
        }
        TropicalCmd::Config(p) => {
            let fs = load(p)?;
            match intersection_config(&fs) {
                Ok(v) => Ok(Outcome::ok(match format {
                    Format::Json => json(&v),
                    Format::Table => format!("{v}\n"),
                })),
                Err(e) => not_transversal(e),
            }
        }
        TropicalCmd::Bkk(p) => {
            let fs = two(p)?;
            match bkk_check(&fs[0], &fs[1]) {
                Ok(r) => {
                    let text = match format {
                        Format::Json => json(&r),
                        Format::Table => format!(
                            "intersection {}\n2·mixed area {}\nequal {}\n",
                            r.intersection, r.doubled_mixed_area, r.equal
                        ),
                    };
                    Ok(Outcome::with(text, r.equal))
                }
                Err(e) => not_transversal(e),
            }
        }
        TropicalCmd::Plot {
            input,
            window,
            subdivisions,
        } => {
            let fs = load(input)?;
            let svg = if *subdivisions {
                let subs: Vec<_> = fs.iter().map(lift_and_subdivide).collect();
                let w = match window {
                    Some(w) => Window::parse(w)?,
                    None => subdivision_window(&subs),
                };
                render_svg(Figure::Subdivisions(&subs), &w)
            } else {
                let curves: Vec<_> = fs.iter().map(tropical_curve).collect();
                let w = match window {
                    Some(w) => Window::parse(w)?,
                    None => Window::around(&curves),
                };
                render_svg(Figure::Arrangement(&curves), &w)
            };
            Ok(Outcome::ok(svg))
        }
    }
}

/// Runs a parsed command.
pub fn execute(cli: &Cli) -> Result<Outcome> {
    let format = cli.format;
    match &cli.command {
        Command::MixedArea { files } => {
            let bodies = input::load_bodies(files)?;
            let c = config_vector(&bodies);
            Ok(Outcome::ok(match format {
                Format::Json => json(&c),
                Format::Table => {
                    let d: Vec<String> = c.diagonal.iter().map(|x| x.to_string()).collect();
                    format!("areas ({})\nmixed areas {}\n", d.join(", "), c.off_diagonal)
                }
            }))
        }
        Command::Pluecker(cmd) => pluecker(cmd, format),
        Command::Realize(cmd) => realize(cmd),
        Command::Configs {
            profile,
            allow_consecutive,
        } => {
            let profile: Vec<usize> = profile
                .split(',')
                .map(|x| x.trim().parse::<usize>().map_err(|_| anyhow!("bad multiplicity {x:?}")))
                .collect::<Result<_>>()?;
            let census = enumerate_configs(
                &profile,
                EnumerateOptions {
                    forbid_consecutive_triples: !allow_consecutive,
                },
            )?;
            Ok(Outcome::ok(match format {
                Format::Json => json(&census),
                Format::Table => census_table(&census),
            }))
        }
        Command::Tropical(cmd) => tropical(cmd, format),
        Command::Fuzz {
            suite,
            trials,
            seed,
            max_vertices,
            coordinate_bound,
            profile,
        } => {
            let cfg = FuzzConfig {
                trials: *trials,
                seed: *seed,
                max_vertices: *max_vertices,
                coordinate_bound: mixarea::arith::parse_rational(coordinate_bound)?,
                generator_profile: *profile,
            };
            let r = run_suite(*suite, &cfg)?;
            let text = match format {
                Format::Json => json(&r),
                Format::Table => format!(
                    "suite {} seed {}: {} trials, {} failures, {} skipped\n",
                    r.suite, r.seed, r.trials, r.failures, r.skipped
                ),
            };
            Ok(Outcome::with(text, r.passed()))
        }
        Command::Dimension { file, values } => {
            let a = input::load_matrix(file.as_deref(), values.as_deref())?;
            let w = dimension_witness(&a)?;
            let text = match format {
                Format::Json => json(&w),
                Format::Table => format!("n = {}: Jacobian rank {} of {}\n", w.n, w.jacobian_rank, w.full_rank),
            };
            Ok(Outcome::with(text, w.is_full_rank()))
        }
    }
}

/// Parses arguments, runs, and writes to `out` (or the `-o` file) and `err`.
/// Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            if code == 0 {
                let _ = write!(out, "{e}");
            } else {
                let _ = write!(err, "{e}");
            }
            return code;
        }
    };
    match execute(&cli) {
        Ok(o) => {
            let written = match &cli.output {
                Some(path) => std::fs::write(path, &o.text).map_err(|e| format!("cannot write {}: {e}", path.display())),
                None => out.write_all(o.text.as_bytes()).map_err(|e| e.to_string()),
            };
            match written {
                Ok(()) => o.code,
                Err(e) => {
                    let _ = writeln!(err, "error: {e}");
                    2
                }
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            2
        }
    }
}
