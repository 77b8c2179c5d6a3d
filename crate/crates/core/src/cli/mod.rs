//! Command-line front end.
//!
//! Exit codes: 0 success or positive verdict, 1 negative verdict, 2 input
//! error, 3 internal inconsistency (the two conservativity checkers
//! disagree).

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::analysis::{self, generate};
use crate::error::Error;
use crate::groupoid::DEFAULT_TOLERANCE;
use crate::hypercube::{count_faces, HypercubeSkeleton};
use crate::mixture::MixtureSpec;
use crate::skeleton::{compose, ObjectiveSkeleton};

pub const EXIT_POSITIVE: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INCONSISTENT: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "ngroupoid",
    version,
    about = "Hypercube skeletons, n-groupoid composition and mixture uniformity"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Vertex, edge and face counts of the n-cube skeleton.
    Skeleton {
        #[arg(long)]
        n: usize,
        /// Print only the number of h-faces.
        #[arg(long)]
        h: Option<usize>,
        /// Also list every oriented edge with its axis.
        #[arg(long)]
        edges: bool,
    },
    /// Decide conservativity of a skeleton file with both checkers.
    Check {
        skeleton: PathBuf,
        /// Mixture to validate the skeleton's arrows against.
        mixture: Option<PathBuf>,
        #[arg(long)]
        tol: Option<f64>,
        /// Write the JSON report here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Uniformity verdict and misalignment defects of a mixture file.
    Uniformity {
        mixture: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write a seeded random skeleton file.
    Generate {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum, default_value_t = Mode::Conservative)]
        mode: Mode,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Draw arrows from this mixture instead of raw matrices.
        #[arg(long)]
        mixture: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare the two conservativity checkers over generated populations.
    VerifyTheorem {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Compose two skeleton files along an axis (the second is traversed first).
    Compose {
        first: PathBuf,
        second: PathBuf,
        #[arg(long)]
        axis: usize,
        #[arg(long)]
        mixture: Option<PathBuf>,
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Conservative,
    Perturbed,
}

/// Input problems carry exit code 2; everything else is decided by the command.
struct Failure(i32, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure(EXIT_INPUT, e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure(EXIT_INPUT, e.to_string())
    }
}

type CmdResult = Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_POSITIVE };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let result = match cli.command {
        Command::Skeleton { n, h, edges } => cmd_skeleton(n, h, edges, out),
        Command::Check {
            skeleton,
            mixture,
            tol,
            out: report,
        } => cmd_check(&skeleton, mixture.as_deref(), tol, report.as_deref(), out),
        Command::Uniformity { mixture, out: report } => cmd_uniformity(&mixture, report.as_deref(), out),
        Command::Generate {
            n,
            mode,
            seed,
            mixture,
            out: file,
        } => cmd_generate(n, mode, seed, mixture.as_deref(), file.as_deref(), out),
        Command::VerifyTheorem { n, trials, seed, tol } => cmd_verify_theorem(n, trials, seed, tol, out),
        Command::Compose {
            first,
            second,
            axis,
            mixture,
            tol,
            out: file,
        } => cmd_compose(&first, &second, axis, mixture.as_deref(), tol, file.as_deref(), out),
    };
    match result {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure(EXIT_INPUT, format!("{}: {e}", path.display())))
}

fn load_skeleton(path: &Path) -> Result<ObjectiveSkeleton, Failure> {
    ObjectiveSkeleton::from_json(&read(path)?).map_err(|e| Failure(EXIT_INPUT, format!("{}: {e}", path.display())))
}

fn load_mixture(path: &Path) -> Result<MixtureSpec, Failure> {
    MixtureSpec::from_json(&read(path)?).map_err(|e| Failure(EXIT_INPUT, format!("{}: {e}", path.display())))
}

fn check_tolerance(tol: f64) -> Result<f64, Failure> {
    if tol > 0.0 && tol < 1.0 {
        Ok(tol)
    } else {
        Err(Failure(EXIT_INPUT, format!("--tol {tol} not in (0, 1)")))
    }
}

fn resolve_tolerance(flag: Option<f64>, mix: Option<&MixtureSpec>) -> Result<f64, Failure> {
    check_tolerance(flag.or(mix.map(MixtureSpec::tolerance)).unwrap_or(DEFAULT_TOLERANCE))
}

fn write_report(path: Option<&Path>, json: String) -> Result<(), Failure> {
    if let Some(p) = path {
        fs::write(p, json + "\n").map_err(|e| Failure(EXIT_INPUT, format!("{}: {e}", p.display())))?;
    }
    Ok(())
}

fn cmd_skeleton(n: usize, h: Option<usize>, list_edges: bool, out: &mut dyn Write) -> CmdResult {
    let skel = HypercubeSkeleton::new(n)?;
    if let Some(h) = h {
        writeln!(out, "{}", count_faces(n, h)?)?;
        return Ok(EXIT_POSITIVE);
    }
    let mut line = format!("vertices: {}, edges: {}", skel.vertex_count(), skel.edge_count());
    if n >= 2 {
        line += &format!(", 2-faces: {}", skel.two_face_count());
    }
    writeln!(out, "{line}")?;
    let counts: Vec<String> = (0..n)
        .map(|h| count_faces(n, h).map(|c| format!("N_{h} = {c}")))
        .collect::<Result<_, _>>()?;
    writeln!(out, "h-faces: {}", counts.join(", "))?;
    writeln!(out, "facet pairs:")?;
    for axis in 1..=n {
        let p = skel.facet_pair(axis)?;
        let ids =
            |f: &crate::hypercube::FaceId| f.vertices().iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",");
        writeln!(
            out,
            "  X{axis}: {} {{{}}} | {} {{{}}}",
            p.facet0,
            ids(&p.facet0),
            p.facet1,
            ids(&p.facet1)
        )?;
    }
    if list_edges {
        writeln!(out, "edges:")?;
        for e in skel.edges() {
            writeln!(out, "  {} -> {} (X{})", e.tail, skel.head(e), e.axis)?;
        }
    }
    Ok(EXIT_POSITIVE)
}

fn cmd_check(
    skeleton: &Path,
    mixture: Option<&Path>,
    tol: Option<f64>,
    report: Option<&Path>,
    out: &mut dyn Write,
) -> CmdResult {
    let t = load_skeleton(skeleton)?;
    let mix = mixture.map(load_mixture).transpose()?;
    let tol = resolve_tolerance(tol, mix.as_ref())?;
    writeln!(
        out,
        "skeleton: n = {}, {} vertices, {} edges",
        t.n(),
        t.vertices().len(),
        t.edges().count()
    )?;
    match &mix {
        Some(m) => {
            if m.n() != t.n() {
                return Err(Failure(
                    EXIT_INPUT,
                    format!(
                        "skeleton has dimension {} but the mixture has {} constituents",
                        t.n(),
                        m.n()
                    ),
                ));
            }
            t.validate_in(m)?;
            writeln!(out, "membership: every edge is an arrow of its constituent")?;
        }
        None => writeln!(out, "membership: not checked (no mixture given)")?,
    }
    let faces = analysis::is_conservative(&t, tol);
    let potential = analysis::potential_check(&t, tol);
    let word = |b: bool| if b { "conservative" } else { "not conservative" };
    writeln!(
        out,
        "2-face check: {} ({} faces, {} failing, max holonomy deviation {:e})",
        word(faces.verdict),
        faces.faces_checked,
        faces.witnesses.len(),
        faces.max_deviation
    )?;
    writeln!(
        out,
        "potential oracle: {} ({} non-tree edges failing, max edge defect {:e})",
        word(potential.verdict),
        potential.failing_edges.len(),
        potential.max_defect
    )?;
    for w in &faces.witnesses {
        writeln!(
            out,
            "  witness: corner {} axes ({}, {}) deviation {:e} holonomy {}",
            w.corner, w.axes.0, w.axes.1, w.deviation, w.holonomy
        )?;
    }
    let json = serde_json::json!({
        "verdict": faces.verdict,
        "oracle_verdict": potential.verdict,
        "tolerance": tol,
        "faces_checked": faces.faces_checked,
        "max_deviation": faces.max_deviation,
        "witnesses": faces.witnesses,
    });
    write_report(report, serde_json::to_string_pretty(&json).expect("report serializes"))?;
    if faces.verdict != potential.verdict {
        writeln!(out, "checkers DISAGREE")?;
        return Ok(EXIT_INCONSISTENT);
    }
    writeln!(out, "checkers agree: {}", word(faces.verdict))?;
    Ok(if faces.verdict { EXIT_POSITIVE } else { EXIT_NEGATIVE })
}

fn cmd_uniformity(mixture: &Path, report: Option<&Path>, out: &mut dyn Write) -> CmdResult {
    let mix = load_mixture(mixture)?;
    let r = analysis::is_uniform(&mix)?;
    for (i, c) in r.constituents.iter().enumerate() {
        if c.transitive {
            writeln!(out, "constituent {} `{}`: transitive", i + 1, c.name)?;
        } else {
            let missing: Vec<&str> = c.missing_implants.iter().map(|p| p.as_str()).collect();
            writeln!(
                out,
                "constituent {} `{}`: not transitive (no implant at {})",
                i + 1,
                c.name,
                missing.join(", ")
            )?;
        }
    }
    writeln!(out, "core rule: {}", r.core_rule)?;
    writeln!(out, "reference point: {}", r.reference)?;
    writeln!(out, "verdict: {}", if r.verdict { "uniform" } else { "not uniform" })?;
    for d in &r.defect_pairs {
        writeln!(out, "  misalignment: {} -> {}", d.source, d.target)?;
    }
    if let Some(note) = &r.note {
        writeln!(out, "note: {note}")?;
    }
    write_report(report, serde_json::to_string_pretty(&r).expect("report serializes"))?;
    Ok(if r.verdict { EXIT_POSITIVE } else { EXIT_NEGATIVE })
}

fn cmd_generate(
    n: Option<usize>,
    mode: Mode,
    seed: u64,
    mixture: Option<&Path>,
    file: Option<&Path>,
    out: &mut dyn Write,
) -> CmdResult {
    let t = match mixture {
        Some(path) => {
            let mix = load_mixture(path)?;
            if let Some(n) = n.filter(|&n| n != mix.n()) {
                return Err(Failure(
                    EXIT_INPUT,
                    format!("--n {n} conflicts with the mixture's {} constituents", mix.n()),
                ));
            }
            let t = generate::random_conservative_in(&mix, seed)?;
            match mode {
                Mode::Conservative => t,
                Mode::Perturbed => generate::perturb(&t, seed.wrapping_add(1)).0,
            }
        }
        None => {
            let n = n.ok_or_else(|| Failure(EXIT_INPUT, "--n is required without --mixture".into()))?;
            HypercubeSkeleton::new(n)?;
            match mode {
                Mode::Conservative => generate::random_conservative(n, seed),
                Mode::Perturbed => generate::random_perturbed(n, seed).0,
            }
        }
    };
    let text = t.to_json() + "\n";
    match file {
        Some(p) => fs::write(p, text).map_err(|e| Failure(EXIT_INPUT, format!("{}: {e}", p.display())))?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(EXIT_POSITIVE)
}

fn cmd_verify_theorem(n: usize, trials: usize, seed: u64, tol: Option<f64>, out: &mut dyn Write) -> CmdResult {
    if !(2..=5).contains(&n) {
        return Err(Failure(EXIT_INPUT, format!("--n {n} not in 2..=5")));
    }
    if trials == 0 {
        return Err(Failure(EXIT_INPUT, "--trials must be at least 1".into()));
    }
    let tol = resolve_tolerance(tol, None)?;
    let sweep = analysis::verify_theorem(n, trials, seed, tol);
    writeln!(
        out,
        "n = {n}, {trials} conservative + {trials} perturbed skeletons, seed {seed}"
    )?;
    writeln!(out, "{}/{} agreements", sweep.agreements, sweep.instances)?;
    writeln!(
        out,
        "max holonomy deviation (conservative): {:e}",
        sweep.max_conservative_deviation
    )?;
    for (population, s) in &sweep.disagreements {
        writeln!(out, "  disagreement: {population} instance, seed {s}")?;
    }
    Ok(if sweep.all_agree() {
        EXIT_POSITIVE
    } else {
        EXIT_INCONSISTENT
    })
}

fn cmd_compose(
    first: &Path,
    second: &Path,
    axis: usize,
    mixture: Option<&Path>,
    tol: Option<f64>,
    file: Option<&Path>,
    out: &mut dyn Write,
) -> CmdResult {
    let t = load_skeleton(first)?;
    let tp = load_skeleton(second)?;
    let mix = mixture.map(load_mixture).transpose()?;
    let tol = resolve_tolerance(tol, mix.as_ref())?;
    t.shape().check_axis(axis)?;
    if let Some(m) = &mix {
        t.validate_in(m)?;
        tp.validate_in(m)?;
    }
    let c = match compose(&t, &tp, axis, tol) {
        Ok(c) => c,
        Err(e @ Error::FacetMismatch { .. }) => {
            writeln!(out, "not composable: {e}")?;
            return Ok(EXIT_NEGATIVE);
        }
        Err(e) => return Err(e.into()),
    };
    if let Some(m) = &mix {
        c.validate_in(m)?;
    }
    let text = c.to_json() + "\n";
    match file {
        Some(p) => {
            fs::write(p, text).map_err(|e| Failure(EXIT_INPUT, format!("{}: {e}", p.display())))?;
            writeln!(out, "composite written to {}", p.display())?;
        }
        None => out.write_all(text.as_bytes())?,
    }
    Ok(EXIT_POSITIVE)
}
