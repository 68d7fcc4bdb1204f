//! Problem-file grammar and the `kestab` command-line front end.
//!
//! ```text
//! # comment
//! rootsystem SO4          (or Sp4)
//! posroot 1 -1            (custom root systems, one line per positive root)
//! facet 1 0 3             (a1 ... ar c  means  a·y <= c)
//! ```

use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::catalog::{self, CatalogEntry};
use crate::criterion::ke_verdict;
use crate::error::{Error, Result};
use crate::hessian::{assemble, Definiteness, EvalPoint, QuadraticPotential, DEFAULT_TOLERANCE};
use crate::numeric::{format_rational, parse_rational, Matrix, NumberFormat, Vector};
use crate::oracle::{mc_moments, McEstimate};
use crate::polyint::weighted_moments;
use crate::polytope::{delzant_check, weyl_orbit_polytope, DelzantFailure, HalfSpace, Polytope};
use crate::rootsys::{RootSystem, RootSystemLabel};

/// Exit code for malformed input.
pub const EXIT_INPUT: i32 = 2;
/// Exit code when `verify` finds a mismatch.
pub const EXIT_MISMATCH: i32 = 1;

#[derive(Clone, Debug, PartialEq)]
pub struct Problem {
    pub root_system: RootSystem,
    pub facets: Vec<HalfSpace<BigRational>>,
}

impl Problem {
    /// Only the facets beyond the chamber walls, which are implied.
    pub fn from_entry(entry: &CatalogEntry) -> Self {
        let facets = entry.halfspaces().split_off(entry.roots().weyl_chamber().facet_normals().len());
        Problem { root_system: entry.roots(), facets }
    }

    /// The given facets intersected with the closed chamber.
    pub fn positive_part(&self) -> Result<Polytope<BigRational>> {
        let chamber = self.root_system.weyl_chamber();
        let walls = chamber.facet_normals().iter().map(|n| {
            HalfSpace::new(n.cast::<BigRational>().scale(&-BigRational::one()), BigRational::zero()).expect("nonzero")
        });
        let all: Vec<_> = walls.chain(self.facets.iter().cloned()).collect();
        Polytope::from_halfspaces(self.root_system.rank(), all)
    }

    /// The facets as given when they bound a polytope, otherwise the Weyl
    /// orbit of the positive part.
    pub fn polytope(&self) -> Result<Polytope<BigRational>> {
        match Polytope::from_halfspaces(self.root_system.rank(), self.facets.clone()) {
            Err(Error::Unbounded) => weyl_orbit_polytope(&self.positive_part()?, &self.root_system.weyl_group()?),
            other => other,
        }
    }
}

pub fn parse_problem(text: &str) -> Result<Problem> {
    let mut named: Option<(usize, RootSystem)> = None;
    let mut roots: Vec<(usize, Vector<i64>)> = Vec::new();
    let mut facets: Vec<(usize, Vec<BigRational>)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let syntax = |message: String| Error::Syntax { line, message };
        let mut tokens = raw.split_whitespace();
        let Some(directive) = tokens.next() else { continue };
        if directive.starts_with('#') {
            continue;
        }
        let args: Vec<&str> = tokens.collect();
        match directive {
            "rootsystem" => {
                if named.is_some() {
                    return Err(syntax("duplicate rootsystem".into()));
                }
                let [name] = args.as_slice() else {
                    return Err(syntax("rootsystem takes exactly one name (SO4 or Sp4)".into()));
                };
                let rs = RootSystem::from_name(name).map_err(|e| syntax(e.to_string()))?;
                named = Some((line, rs));
            }
            "posroot" => {
                if args.is_empty() {
                    return Err(syntax("posroot needs integer coordinates".into()));
                }
                let v = args
                    .iter()
                    .map(|a| a.parse::<i64>().map_err(|_| syntax(format!("invalid integer `{a}`"))))
                    .collect::<Result<Vec<_>>>()?;
                roots.push((line, Vector(v)));
            }
            "facet" => {
                if args.len() < 2 {
                    return Err(syntax("facet needs a normal and an offset".into()));
                }
                let v = args
                    .iter()
                    .map(|a| parse_rational(a).map_err(|e| syntax(e.to_string())))
                    .collect::<Result<Vec<_>>>()?;
                facets.push((line, v));
            }
            other => return Err(syntax(format!("unknown directive `{other}`"))),
        }
    }

    let root_system = match named {
        Some((line, rs)) => {
            if !roots.is_empty() {
                let mut given: Vec<_> = roots.iter().map(|(_, r)| r.0.clone()).collect();
                let mut builtin: Vec<_> = rs.positive_roots().iter().map(|r| r.0.clone()).collect();
                given.sort();
                builtin.sort();
                if given != builtin {
                    return Err(Error::Syntax {
                        line,
                        message: format!("posroot lines disagree with the {} positive roots", rs.label()),
                    });
                }
            }
            rs
        }
        None if roots.is_empty() => return Err(Error::Parse("missing rootsystem".into())),
        None => {
            let rank = roots[0].1.len();
            if let Some((line, _)) = roots.iter().find(|(_, r)| r.len() != rank) {
                return Err(Error::Syntax { line: *line, message: "rank mismatch".into() });
            }
            RootSystem::custom(rank, roots.into_iter().map(|(_, r)| r).collect())?
        }
    };

    let r = root_system.rank();
    if facets.is_empty() {
        return Err(Error::Parse("no facet lines".into()));
    }
    let mut halfspaces = Vec::with_capacity(facets.len());
    for (line, mut v) in facets {
        if v.len() != r + 1 {
            return Err(Error::Syntax {
                line,
                message: format!("rank mismatch: facet has {} coefficients, root system has rank {r}", v.len() - 1),
            });
        }
        let offset = v.pop().expect("nonempty");
        let h = HalfSpace::new(Vector(v), offset).map_err(|e| Error::Syntax { line, message: e.to_string() })?;
        halfspaces.push(h);
    }
    Ok(Problem { root_system, facets: halfspaces })
}

pub fn render_problem(p: &Problem) -> String {
    let mut out = String::new();
    match p.root_system.label() {
        RootSystemLabel::Custom => {
            for a in p.root_system.positive_roots() {
                let coords: Vec<String> = a.iter().map(|x| x.to_string()).collect();
                out.push_str(&format!("posroot {}\n", coords.join(" ")));
            }
        }
        label => out.push_str(&format!("rootsystem {label}\n")),
    }
    for h in &p.facets {
        let coeffs: Vec<String> = h.normal.iter().chain(std::iter::once(&h.offset)).map(format_rational).collect();
        out.push_str(&format!("facet {}\n", coeffs.join(" ")));
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Exact,
    Decimal,
}

impl From<FormatArg> for NumberFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Exact => NumberFormat::Exact,
            FormatArg::Decimal => NumberFormat::Decimal,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "kestab", version, about = "Kähler-Einstein and K-stability checks for group compactifications")]
struct Cli {
    /// How rationals are printed.
    #[arg(long, value_enum, global = true, default_value = "exact")]
    format: FormatArg,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct InputArg {
    /// Problem file, or a built-in catalog id (so4-1 .. sp4-3).
    input: String,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Vertices of the input polytope in counter-clockwise order.
    Vertices {
        #[command(flatten)]
        input: InputArg,
        /// Print the positive part instead.
        #[arg(long)]
        positive: bool,
    },
    /// Weighted volume of the positive part.
    Volume(InputArg),
    /// Weighted barycenter of the positive part.
    Barycenter(InputArg),
    /// Barycenter criterion verdict with the full report.
    CheckKe(InputArg),
    /// Delzant smoothness of the Weyl orbit of the positive part.
    Delzant {
        #[command(flatten)]
        input: InputArg,
        /// Check the input polytope as given instead of the Weyl orbit.
        #[arg(long)]
        as_given: bool,
    },
    /// Block complex Hessian at one chamber point.
    HessianDensity {
        #[arg(long, default_value = "SO4")]
        rootsystem: String,
        /// Chamber point, comma separated.
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        /// Gradient of the potential at the point.
        #[arg(long, allow_hyphen_values = true)]
        grad: Option<String>,
        /// Upper triangle of the real Hessian, row by row.
        #[arg(long, allow_hyphen_values = true)]
        hess: Option<String>,
        /// Use psi(x) = x'Ax/2 + b'x with the upper triangle of A given here.
        #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["grad", "hess"])]
        quadratic: Option<String>,
        /// Linear term b of the quadratic potential (default 0).
        #[arg(long, allow_hyphen_values = true, requires = "quadratic")]
        linear: Option<String>,
    },
    /// Monte-Carlo estimate of the weighted moments of the positive part.
    Oracle {
        #[command(flatten)]
        input: InputArg,
        #[arg(long, default_value_t = 1_000_000)]
        mc_samples: u64,
        /// Seed for Xoshiro256++ (seeded through SplitMix64); shard s of 8 uses seed + s.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Recompute catalog entries and compare with the stored values.
    Verify {
        /// Catalog id.
        #[arg(required_unless_present = "all", conflicts_with = "all")]
        id: Option<String>,
        #[arg(long)]
        all: bool,
    },
    /// Full report, including catalog notes when the input is a catalog entry.
    Report(InputArg),
}

fn load(input: &str) -> Result<(Problem, Option<CatalogEntry>)> {
    if !Path::new(input).exists() {
        if let Ok(entry) = catalog::get_entry(input) {
            return Ok((Problem::from_entry(&entry), Some(entry)));
        }
    }
    let text =
        std::fs::read_to_string(input).map_err(|e| Error::InvalidInput(format!("cannot read `{input}`: {e}")))?;
    let problem = parse_problem(&text)?;
    let entry = matching_entry(&problem)?;
    Ok((problem, entry))
}

fn matching_entry(problem: &Problem) -> Result<Option<CatalogEntry>> {
    let p_plus = problem.positive_part()?;
    for entry in catalog::all_entries() {
        if entry.root_system == *problem.root_system.label() && entry.positive_part()?.same_vertices(&p_plus) {
            return Ok(Some(entry));
        }
    }
    Ok(None)
}

fn parse_reals(s: &str, what: &str) -> Result<Vec<f64>> {
    s.split(',')
        .map(|t| t.trim().parse::<f64>().map_err(|_| Error::InvalidInput(format!("{what}: invalid number `{t}`"))))
        .collect()
}

fn symmetric_from_upper(r: usize, upper: &[f64], what: &str) -> Result<Matrix<f64>> {
    if upper.len() != r * (r + 1) / 2 {
        return Err(Error::InvalidInput(format!("{what} needs {} entries", r * (r + 1) / 2)));
    }
    let mut data = vec![0.0; r * r];
    let mut k = 0;
    for i in 0..r {
        for j in i..r {
            data[i * r + j] = upper[k];
            data[j * r + i] = upper[k];
            k += 1;
        }
    }
    Matrix::from_vec(r, r, data)
}

fn fmt_vec(v: &Vector<BigRational>, format: NumberFormat) -> String {
    v.iter().map(|a| format.render(a)).collect::<Vec<_>>().join(" ")
}

fn decimal_header(format: NumberFormat) -> String {
    match format {
        NumberFormat::Decimal => "# decimal values are approximate (12 significant digits)\n".into(),
        NumberFormat::Exact => String::new(),
    }
}

fn execute(cli: Cli) -> Result<(i32, String)> {
    let format: NumberFormat = cli.format.into();
    let mut out = decimal_header(format);
    match cli.command {
        Command::Vertices { input, positive } => {
            let (problem, _) = load(&input.input)?;
            let p = if positive { problem.positive_part()? } else { problem.polytope()? };
            for v in p.boundary_cycle() {
                out.push_str(&format!("vertex {}\n", fmt_vec(&v, format)));
            }
        }
        Command::Volume(input) => {
            let (problem, _) = load(&input.input)?;
            let m = weighted_moments(&problem.positive_part()?, &problem.root_system.weight_polynomial())?;
            out.push_str(&format!("weighted_volume {}\n", format.render(&m.weighted_volume)));
        }
        Command::Barycenter(input) => {
            let (problem, _) = load(&input.input)?;
            let m = weighted_moments(&problem.positive_part()?, &problem.root_system.weight_polynomial())?;
            out.push_str(&format!("barycenter {}\n", fmt_vec(&m.barycenter()?, format)));
        }
        Command::CheckKe(input) => {
            let (problem, _) = load(&input.input)?;
            let report = ke_verdict(&problem.root_system, &problem.polytope()?)?;
            return Ok((0, report.render(format)));
        }
        Command::Report(input) => {
            let (problem, entry) = load(&input.input)?;
            let report = ke_verdict(&problem.root_system, &problem.polytope()?)?;
            let text = report.render(format);
            let (body, last) = text.trim_end().rsplit_once('\n').unwrap_or(("", text.trim_end()));
            let mut out = String::new();
            if !body.is_empty() {
                out.push_str(body);
                out.push('\n');
            }
            if let Some(entry) = entry {
                out.push_str(&format!("catalog {}\n", entry.id));
                for n in &entry.notes {
                    out.push_str(&format!("erratum {n}\n"));
                }
                if entry.root_system == RootSystemLabel::So4 {
                    out.push_str(&format!(
                        "erratum with the published facet x<=2 the so4-1 weighted volume would be {}\n",
                        format_rational(&catalog::so4_published_facet_volume()?)
                    ));
                }
            }
            out.push_str(last);
            out.push('\n');
            return Ok((0, out));
        }
        Command::Delzant { input, as_given } => {
            let (problem, _) = load(&input.input)?;
            let p = if as_given {
                problem.polytope()?
            } else {
                weyl_orbit_polytope(&problem.positive_part()?, &problem.root_system.weyl_group()?)?
            };
            let report = delzant_check(&p);
            for (v, failure) in &report.offending {
                let why = match failure {
                    DelzantFailure::NonSimple { tight_facets } => format!("non-simple ({tight_facets} facets)"),
                    DelzantFailure::NotUnimodular { det } => format!("det {det}"),
                    DelzantFailure::Irrational => "irrational normal".to_string(),
                };
                out.push_str(&format!("offending_vertex {} {why}\n", fmt_vec(v, format)));
            }
            out.push_str(&format!("vertices {}\n", p.vertices().len()));
            out.push_str(if report.is_smooth() { "delzant smooth\n" } else { "delzant singular\n" });
        }
        Command::HessianDensity { rootsystem, point, grad, hess, quadratic, linear } => {
            let rs = RootSystem::from_name(&rootsystem)?;
            let r = rs.rank();
            let x = Vector(parse_reals(&point, "--point")?);
            if x.len() != r {
                return Err(Error::InvalidInput(format!("--point needs {r} coordinates")));
            }
            let pt = match (quadratic, grad, hess) {
                (Some(a), _, _) => {
                    let a = symmetric_from_upper(r, &parse_reals(&a, "--quadratic")?, "--quadratic")?;
                    let b = match linear {
                        Some(b) => Vector(parse_reals(&b, "--linear")?),
                        None => Vector(vec![0.0; r]),
                    };
                    if b.len() != r {
                        return Err(Error::InvalidInput(format!("--linear needs {r} coordinates")));
                    }
                    QuadraticPotential { a, b }.eval_point(x)
                }
                (None, Some(g), Some(h)) => EvalPoint {
                    x,
                    grad: Vector(parse_reals(&g, "--grad")?),
                    hess: symmetric_from_upper(r, &parse_reals(&h, "--hess")?, "--hess")?,
                },
                _ => return Err(Error::InvalidInput("give --grad and --hess, or --quadratic".into())),
            };
            let bh = assemble(&rs, &pt)?;
            out = String::new();
            out.push_str(&format!("rootsystem {}\n", rs.label()));
            for b in &bh.root_blocks {
                let root: Vec<String> = b.root.iter().map(|a| a.to_string()).collect();
                out.push_str(&format!("block {} c {:.12e} k {:.12e}\n", root.join(" "), b.c, b.k));
            }
            let pd = match bh.definiteness(DEFAULT_TOLERANCE) {
                Definiteness::PositiveDefinite => "true",
                Definiteness::NotPositiveDefinite => "false",
                Definiteness::Indeterminate => "indeterminate",
            };
            out.push_str(&format!("positive_definite {pd}\n"));
            out.push_str(&format!("ma_density {:.12e}\n", bh.ma_density()));
        }
        Command::Oracle { input, mc_samples, seed } => {
            let (problem, _) = load(&input.input)?;
            let p_plus = problem.positive_part()?;
            let weight = problem.root_system.weight_polynomial();
            let exact = weighted_moments(&p_plus, &weight)?;
            let mc = mc_moments(&p_plus, &weight, mc_samples, seed)?;
            out = String::new();
            out.push_str(&format!("samples {mc_samples} seed {seed} generator xoshiro256++ shards 8\n"));
            out.push_str(&format!("acceptance {:.6}\n", mc.acceptance_rate()));
            let mut line = |name: String, est: &McEstimate, exact: &BigRational| {
                let e = exact.to_f64().unwrap_or(f64::NAN);
                out.push_str(&format!(
                    "{name} estimate {:.6e} std_error {:.3e} exact {} z {:.2}\n",
                    est.value,
                    est.std_error,
                    format.render(exact),
                    est.z_score(e)
                ));
            };
            line("weighted_volume".into(), &mc.volume, &exact.weighted_volume);
            for (i, (est, ex)) in mc.first_moments.iter().zip(exact.first_moments.iter()).enumerate() {
                line(format!("first_moment_{}", i + 1), est, ex);
            }
        }
        Command::Verify { id, all } => {
            let reports =
                if all { catalog::verify_all()? } else { vec![catalog::verify(id.as_deref().unwrap_or(""))?] };
            let mut code = 0;
            for r in &reports {
                if !r.passed() {
                    code = EXIT_MISMATCH;
                }
                out.push_str(&r.render(format));
            }
            return Ok((code, out));
        }
    }
    Ok((0, out))
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the exit code and the text destined for stdout (or stderr when
/// the code is [`EXIT_INPUT`]).
pub fn run<I, S>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { 0 };
            return (code, e.render().to_string());
        }
    };
    match execute(cli) {
        Ok(res) => res,
        Err(e) => (EXIT_INPUT, format!("error: {e}\n")),
    }
}
