//! The `polypres` command line.
//!
//! Exit codes: 0 when everything checked holds, 1 when a verification
//! fails (diagnostics on standard output), 2 for unreadable or malformed
//! input (message on standard error).

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::Ratio;

use polypres::bigraph::{are_compatible_seeded, parse_tableaux, write_tableaux, Compatibility};
use polypres::complex::LinkVerdict;
use polypres::periodic::{
    angle_sum_certificate_per_corner, complex_angle_certificate, find_rectangle, strip_start,
    theorem3_word, theorem4_word, PeriodicError,
};
use polypres::presentation::{parse_presentation_with, write_presentation};
use polypres::wicks::{check_wicks, enumerate_wicks, format_word, genus, parse_word, surface_counts};
use polypres::{construct_theorem1, BipartiteGraph, GraphSet, PolygonalPresentation, Polyhedron};

#[derive(Parser, Debug)]
#[command(name = "polypres", version, about = "Polygonal presentations and Wicks forms")]
struct Cli {
    /// Output style for graphs and links.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Tableau,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Girth, diameter and degrees of each graph in a tableau file.
    CheckGraph {
        file: PathBuf,
        /// Also decide whether each graph is a generalized m-gon.
        #[arg(long = "m-gon")]
        m_gon: Option<usize>,
    },
    /// Whether the graph sets (one tableau file each) are compatible.
    Compat {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Builds the presentation whose links are the given graphs and their
    /// duals. With `--k`, a single file is used as every set.
    Build {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Checks the three presentation axioms.
    VerifyPresentation { file: PathBuf },
    /// Glues a presentation and prints faces, vertices and links.
    BuildComplex { file: PathBuf },
    /// Matches each vertex link to a graph of the presentation (or of
    /// `--graphs`) up to colour-preserving isomorphism.
    VerifyLinks {
        file: PathBuf,
        #[arg(long)]
        graphs: Option<PathBuf>,
    },
    /// Link girth m, face size n and whether mn >= 2(m + n).
    CheckMn { file: PathBuf },
    /// Checks the Wicks conditions; `@path` reads the word from a file.
    WicksCheck { word: String },
    /// Genus of the surface glued from a Wicks form.
    WicksGenus { word: String },
    /// All Wicks forms up to a length, one per isomorphism class.
    WicksEnum {
        #[arg(long, default_value_t = 8)]
        max: usize,
    },
    /// The right-angled 2k-gon family.
    Theorem3 {
        #[arg(long)]
        k: usize,
    },
    /// The 2m squares around a vertex, for m in {3, 4, 6, 8}.
    Theorem4 {
        #[arg(long)]
        m: usize,
    },
    /// The rectangle relator of a presentation whose words read x y u v.
    Periodic { file: PathBuf },
}

/// A failure that stops a command: bad input (exit 2).
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

type Outcome = Result<(String, bool), InputError>;

/// Runs one invocation. `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                let _ = out.write_all(text.as_bytes());
            } else {
                let _ = err.write_all(text.as_bytes());
            }
            return code;
        }
    };
    match dispatch(&cli) {
        Ok((text, ok)) => {
            let _ = out.write_all(text.as_bytes());
            if ok {
                0
            } else {
                1
            }
        }
        Err(InputError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn dispatch(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::CheckGraph { file, m_gon } => check_graph(file, *m_gon, cli.format),
        Command::Compat { files, seed } => compat(files, *seed),
        Command::Build {
            files,
            k,
            seed,
            out,
        } => build(files, *k, *seed, out.as_deref()),
        Command::VerifyPresentation { file } => verify_presentation(file),
        Command::BuildComplex { file } => build_complex(file, cli.format),
        Command::VerifyLinks { file, graphs } => verify_links(file, graphs.as_deref()),
        Command::CheckMn { file } => check_mn(file),
        Command::WicksCheck { word } => wicks_check(word),
        Command::WicksGenus { word } => wicks_genus(word),
        Command::WicksEnum { max } => wicks_enum(*max),
        Command::Theorem3 { k } => theorem3(*k),
        Command::Theorem4 { m } => theorem4(*m),
        Command::Periodic { file } => periodic(file),
    }
}

fn read(path: &Path) -> Result<String, InputError> {
    std::fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn read_graphs(path: &Path) -> Result<Vec<BipartiteGraph>, InputError> {
    parse_tableaux(&read(path)?).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn read_presentation(path: &Path) -> Result<PolygonalPresentation, InputError> {
    let text = read(path)?;
    let dir = path.parent().map(Path::to_path_buf).unwrap_or_default();
    parse_presentation_with(&text, &mut |inc| {
        std::fs::read_to_string(dir.join(inc)).map_err(|e| e.to_string())
    })
    .map_err(|e| InputError(format!("{}: {e}", path.display())))
}

/// An inline word, or the contents of the file after `@`.
fn read_word(arg: &str) -> Result<Vec<polypres::SignedLetter>, InputError> {
    let text = match arg.strip_prefix('@') {
        Some(path) => read(Path::new(path))?,
        None => arg.to_string(),
    };
    Ok(parse_word(&text)?)
}

fn check_graph(file: &Path, m_gon: Option<usize>, format: Format) -> Outcome {
    let graphs = read_graphs(file)?;
    let mut out = String::new();
    if format == Format::Tableau {
        out.push_str(&write_tableaux(&graphs));
    }
    let mut ok = true;
    for g in &graphs {
        let diameter = match g.diameter() {
            Ok(d) => d.to_string(),
            Err(_) => "infinite".into(),
        };
        let min_degree = g.min_degree().map(|(_, d)| d).unwrap_or(0);
        writeln!(
            out,
            "{}: {} white, {} black, {} edges; connected {}; girth {}; diameter {}; min degree {}",
            g.name(),
            g.whites().len(),
            g.blacks().len(),
            g.edge_count(),
            if g.is_connected() { "yes" } else { "no" },
            g.girth(),
            diameter,
            min_degree
        )?;
        if let Some(m) = m_gon {
            match g.check_generalized_m_gon(m) {
                Ok(()) => writeln!(out, "generalized {m}-gon: yes")?,
                Err(why) => {
                    ok = false;
                    writeln!(out, "generalized {m}-gon: no ({why})")?
                }
            }
        }
    }
    Ok((out, ok))
}

fn read_sets(files: &[PathBuf], k: Option<usize>) -> Result<Vec<GraphSet>, InputError> {
    let sets = files
        .iter()
        .map(|f| Ok(GraphSet::new(read_graphs(f)?)?))
        .collect::<Result<Vec<_>, InputError>>()?;
    match k {
        None => Ok(sets),
        Some(0) => Err(InputError("--k must be at least 1".into())),
        Some(k) if sets.len() == 1 => Ok(vec![sets[0].clone(); k]),
        Some(k) if sets.len() == k => Ok(sets),
        Some(k) => Err(InputError(format!(
            "--k {k} with {} graph files; give one file or {k}",
            sets.len()
        ))),
    }
}

fn compat(files: &[PathBuf], seed: Option<u64>) -> Outcome {
    let sets = read_sets(files, None)?;
    let mut out = String::new();
    match are_compatible_seeded(&sets, seed)? {
        Compatibility::Compatible(m) => {
            writeln!(out, "compatible")?;
            for pos in 0..m.white_count() {
                let row: Vec<String> = (0..m.set_count())
                    .map(|j| {
                        let w = &m.order(j)[pos];
                        format!("{}:{}", sets[j].graphs()[w.graph].name(), w.label)
                    })
                    .collect();
                writeln!(out, "  degree {}: {}", m.degree(pos), row.join(" ~ "))?;
            }
            Ok((out, true))
        }
        Compatibility::Incompatible(why) => {
            writeln!(out, "incompatible: {why}")?;
            Ok((out, false))
        }
    }
}

fn build(files: &[PathBuf], k: Option<usize>, seed: Option<u64>, dest: Option<&Path>) -> Outcome {
    let sets = read_sets(files, k)?;
    let p = construct_theorem1(&sets, seed)?;
    let text = write_presentation(&p);
    match dest {
        Some(path) => {
            std::fs::write(path, &text)
                .map_err(|e| InputError(format!("{}: {e}", path.display())))?;
            let (classes, words) = p.tuple_count();
            Ok((
                format!(
                    "wrote {}: {} graphs, {words} words in {classes} classes of length {}\n",
                    path.display(),
                    p.graphs().len(),
                    p.k()
                ),
                true,
            ))
        }
        None => Ok((text, true)),
    }
}

fn verify_presentation(file: &Path) -> Outcome {
    let p = read_presentation(file)?;
    let report = p.verify_axioms()?;
    Ok((format!("{report}\n"), report.passed()))
}

/// Glues the presentation in `file`, or returns the failed axiom report.
fn glue(file: &Path) -> Result<Result<(PolygonalPresentation, Polyhedron), String>, InputError> {
    let p = read_presentation(file)?;
    let report = p.verify_axioms()?;
    if !report.passed() {
        return Ok(Err(format!("{report}\n")));
    }
    let k = Polyhedron::build_from_presentation(&p)?;
    Ok(Ok((p, k)))
}

fn build_complex(file: &Path, format: Format) -> Outcome {
    let k = match glue(file)? {
        Ok((_, k)) => k,
        Err(report) => return Ok((report, false)),
    };
    let (v, e, f) = k.cell_counts();
    let mut out = format!("cells: {v} vertices, {e} edges, {f} faces\n");
    match format {
        Format::Text => out.push_str(&k.dump()),
        Format::Tableau => {
            for link in k.links() {
                out.push_str(&link.to_tableau());
            }
        }
    }
    Ok((out, true))
}

fn verify_links(file: &Path, graphs: Option<&Path>) -> Outcome {
    let (p, k) = match glue(file)? {
        Ok(pk) => pk,
        Err(report) => return Ok((report, false)),
    };
    let expected = match graphs {
        Some(path) => read_graphs(path)?,
        None => p.graphs().to_vec(),
    };
    let verdict = k.verify_links(&expected);
    let mut out = String::new();
    match &verdict {
        LinkVerdict::Matched(pairs) => {
            for (v, j) in pairs {
                writeln!(out, "v{v} ~ {}", expected[*j].name())?;
            }
            writeln!(out, "links: ok")?;
        }
        LinkVerdict::CountMismatch { vertices, expected } => {
            writeln!(out, "links: {vertices} vertices but {expected} graphs")?
        }
        LinkVerdict::Unmatched { vertex } => {
            writeln!(out, "links: no graph left for the link at v{vertex}")?
        }
    }
    Ok((out, verdict.passed()))
}

fn check_mn(file: &Path) -> Outcome {
    let k = match glue(file)? {
        Ok((_, k)) => k,
        Err(report) => return Ok((report, false)),
    };
    let r = k.check_mn()?;
    Ok((
        format!(
            "m = {}, n = {}, mn >= 2(m + n): {}\n",
            r.m,
            r.n,
            if r.satisfies { "yes" } else { "no" }
        ),
        r.satisfies,
    ))
}

fn wicks_check(word: &str) -> Outcome {
    let w = read_word(word)?;
    Ok(match check_wicks(&w) {
        Ok(()) => (format!("{}: oriented Wicks form\n", format_word(&w)), true),
        Err(v) => (format!("{}: {v}\n", format_word(&w)), false),
    })
}

fn wicks_genus(word: &str) -> Outcome {
    let w = read_word(word)?;
    if let Err(v) = check_wicks(&w) {
        return Ok((format!("{}: {v}\n", format_word(&w)), false));
    }
    let g = genus(&w)?;
    let (v, e) = surface_counts(&w)?;
    Ok((
        format!("{}\nvertices = {v}, edges = {e}\ngenus = {g}\n", format_word(&w)),
        true,
    ))
}

fn wicks_enum(max: usize) -> Outcome {
    let forms = enumerate_wicks(max)?;
    let mut out = String::new();
    for f in &forms {
        writeln!(out, "{}\tlength {}\tgenus {}", f, f.len(), f.genus())?;
    }
    writeln!(out, "{} forms", forms.len())?;
    Ok((out, true))
}

fn theorem3(k: usize) -> Outcome {
    let t = theorem3_word(k)?;
    let (v, e) = t.u_counts();
    let mut out = String::new();
    writeln!(out, "U = {}", format_word(t.u_letters()))?;
    writeln!(out, "W = {}", t.w())?;
    for (l, img) in t.substitution().pairs() {
        writeln!(out, "  {l} -> {}", format_word(img))?;
    }
    for (i, p) in t.polygons().iter().enumerate() {
        writeln!(out, "P{} = {}", i + 1, format_word(p))?;
    }
    writeln!(out, "U: vertices = {v}, edges = {e}")?;
    writeln!(out, "genus = {}", t.genus())?;
    let ok = t.genus() == t.target_genus();
    writeln!(
        out,
        "target genus 2k - 4 = {}: {}",
        t.target_genus(),
        if ok { "met" } else { "not met" }
    )?;
    Ok((out, ok))
}

fn theorem4(m: usize) -> Outcome {
    let t = theorem4_word(m)?;
    let region = t.region_complex();
    let link = region.link_at(t.centre(&region))?;
    let cycle = link.is_cycle() && link.vertex_count() == 2 * m;
    let angles = angle_sum_certificate_per_corner(t.letters(), &t.boundary_angles())?;
    let mut out = String::new();
    writeln!(out, "W = {}", format_word(t.letters()))?;
    writeln!(out, "length = {}", t.w().len())?;
    writeln!(out, "genus = {}", t.genus())?;
    for q in t.squares() {
        writeln!(out, "square {q}")?;
    }
    writeln!(
        out,
        "centre link: {}",
        if cycle {
            format!("{}-cycle", 2 * m)
        } else {
            "not a cycle".into()
        }
    )?;
    writeln!(
        out,
        "angle sums: {}",
        if angles.passed() { "2pi at every vertex" } else { "fail" }
    )?;
    Ok((out, cycle && angles.passed()))
}

fn periodic(file: &Path) -> Outcome {
    let p = read_presentation(file)?;
    let walk = strip_start(&p).and_then(|start| Ok((find_rectangle(&p, &start)?, start)));
    let (r, start) = match walk {
        Ok(rs) => rs,
        Err(PeriodicError::NoExtension(why)) => {
            return Ok((format!("no flat strip: {why}\n"), false));
        }
        Err(e) => return Err(e.into()),
    };
    let torus = r.tessellation();
    let flat = complex_angle_certificate(&torus, |_| Ratio::new(1, 2));
    let boundary =
        angle_sum_certificate_per_corner(&r.positional_boundary(), &r.boundary_angles())?;
    let mut out = String::new();
    writeln!(out, "start {start}")?;
    writeln!(
        out,
        "steps to repeat: {} (bound {}), s = {}",
        r.steps(),
        r.bound(),
        r.s()
    )?;
    writeln!(out, "U = {}", format_word(r.u()))?;
    writeln!(out, "W = {}", format_word(r.w()))?;
    writeln!(out, "boundary = {}", format_word(&r.boundary()))?;
    writeln!(out, "quadratic: {}", yes(r.is_quadratic()))?;
    writeln!(out, "torus squares at right angles: {}", yes(flat.passed()))?;
    writeln!(out, "rectangle angle sums: {}", yes(boundary.passed()))?;
    Ok((out, r.is_quadratic() && flat.passed() && boundary.passed()))
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
