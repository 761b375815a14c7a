//! The `cactus` command line: builds the forest cube complexes, runs the
//! checks, and writes JSON, DOT or text reports.
//!
//! Exit codes: 0 when every requested check passes, 1 when one fails, 2 on
//! a usage or configuration error.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use cactus_core::complex::{build_complex, check_npc, ComplexModel, Space, MAX_BUILD_N};
use cactus_core::cover::{
    lift_word, parse_generator_word, presentation, verify_covering, verify_relators, word_image, PresentationKind,
};
use cactus_core::export::{census, hyperplane_dot, model_export, skeleton_dot, to_json};
use cactus_core::forests::enumerate_forests;
use cactus_core::hyperplanes::{compute_hyperplanes, specialness_report, verify_type_partition};
use cactus_core::report::TOOL_VERSION;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "cactus", version, about = "Build and check cube complexes of planar forests")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the forests on 1..=n with k internal edges.
    Enumerate {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Build a complex and report its cells.
    Build {
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        output: Output,
    },
    /// Run one of the structural checks.
    Check {
        what: CheckKind,
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        output: Output,
    },
    /// Trace a word in the generators s_A as an edge path.
    Lift {
        /// Letters like `s(1,2)`, separated by `·`, `.`, `*` or spaces.
        #[arg(long)]
        word: String,
        /// Starting vertex as a hex parameter.
        #[arg(long, default_value = "0")]
        start: String,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = SpaceArg::Cover)]
        space: SpaceArg,
        #[command(flatten)]
        output: Output,
    },
    /// Print a group presentation.
    Presentation {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        output: Output,
    },
    /// Write the 1-skeleton, the hyperplane graph, or the whole model.
    Export {
        #[arg(long, value_enum)]
        what: ExportKind,
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Args, Debug)]
struct Target {
    #[arg(long)]
    n: u32,
    #[arg(long, value_enum, default_value_t = SpaceArg::Base)]
    space: SpaceArg,
}

#[derive(Args, Debug)]
struct Output {
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SpaceArg {
    Base,
    Cover,
}

impl From<SpaceArg> for Space {
    fn from(s: SpaceArg) -> Space {
        match s {
            SpaceArg::Base => Space::Base,
            SpaceArg::Cover => Space::Cover,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CheckKind {
    Npc,
    Special,
    Cover,
    Types,
    Relators,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ExportKind {
    Skeleton,
    Hyperplanes,
    Model,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Cactus,
    #[value(name = "virtual_cactus", alias = "virtual-cactus")]
    VirtualCactus,
    Pvcn,
}

impl From<KindArg> for PresentationKind {
    fn from(k: KindArg) -> PresentationKind {
        match k {
            KindArg::Cactus => PresentationKind::Cactus,
            KindArg::VirtualCactus => PresentationKind::VirtualCactus,
            KindArg::Pvcn => PresentationKind::Pvcn,
        }
    }
}

/// A usage or configuration problem; reported on stderr with exit code 2.
struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

/// What a subcommand produced: the text to emit and whether its checks passed.
struct Outcome {
    body: String,
    pass: bool,
}

impl Outcome {
    fn info(body: String) -> Self {
        Outcome { body, pass: true }
    }
}

/// Parses `argv` (program name first), runs one subcommand, and returns the exit code.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(rendered.as_bytes())
            } else {
                stdout.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let out_path = match &cli.command {
        Command::Enumerate { output, .. }
        | Command::Build { output, .. }
        | Command::Check { output, .. }
        | Command::Lift { output, .. }
        | Command::Presentation { output, .. }
        | Command::Export { output, .. } => output.out.clone(),
    };
    match execute(cli.command) {
        Ok(outcome) => {
            let written = match out_path {
                Some(path) => fs::write(&path, &outcome.body).map_err(|e| format!("{}: {e}", path.display())),
                None => stdout.write_all(outcome.body.as_bytes()).map_err(|e| e.to_string()),
            };
            if let Err(e) = written {
                let _ = writeln!(stderr, "error: {e}");
                return EXIT_USAGE;
            }
            if outcome.pass {
                EXIT_PASS
            } else {
                EXIT_FAIL
            }
        }
        Err(Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn model(target: &Target) -> Result<ComplexModel, Usage> {
    if !(2..=MAX_BUILD_N).contains(&target.n) {
        return Err(Usage(format!("--n must be between 2 and {MAX_BUILD_N}, got {}", target.n)));
    }
    Ok(build_complex(target.n, target.space.into())?)
}

fn only(format: Option<Format>, allowed: &[Format], default: Format) -> Result<Format, Usage> {
    let f = format.unwrap_or(default);
    if allowed.contains(&f) {
        Ok(f)
    } else {
        Err(Usage(format!("format {f:?} is not available for this command").to_lowercase()))
    }
}

/// Adds the fields every report carries.
fn envelope(check: &str, model: &ComplexModel, report: impl serde::Serialize) -> Value {
    let mut v = serde_json::to_value(report).expect("reports serialize");
    let obj = v.as_object_mut().expect("reports are objects");
    obj.insert("check".into(), json!(check));
    obj.insert("version".into(), json!(TOOL_VERSION));
    obj.insert("n".into(), json!(model.n()));
    obj.insert("variant".into(), json!(model.space()));
    obj.insert("types".into(), json!(model.types().types().iter().map(|t| t.to_string()).collect::<Vec<_>>()));
    v
}

fn pass_of(v: &Value) -> bool {
    v["pass"].as_bool().unwrap_or(false)
}

fn summary_text(check: &str, v: &Value) -> String {
    let mut s = format!(
        "{check} n={} {}: {}\n",
        v["n"],
        v["variant"].as_str().unwrap_or(""),
        if pass_of(v) { "PASS" } else { "FAIL" }
    );
    if let Some(conditions) = v["conditions"].as_object() {
        for (k, ok) in conditions {
            s.push_str(&format!("  {k}: {}\n", if ok.as_bool() == Some(true) { "ok" } else { "fails" }));
        }
    }
    let witness = v.get("witness").or_else(|| v["witnesses"].get(0));
    if let Some(w) = witness.filter(|w| !w.is_null()) {
        s.push_str(&format!("  witness: {w}\n"));
    }
    s
}

fn execute(command: Command) -> Result<Outcome, Usage> {
    match command {
        Command::Enumerate { n, k, output } => {
            if !(1..=6).contains(&n) {
                return Err(Usage(format!("--n must be between 1 and 6 for enumeration, got {n}")));
            }
            let forests: Vec<String> = enumerate_forests(n, k).iter().map(|f| f.to_string()).collect();
            Ok(Outcome::info(match only(output.format, &[Format::Text, Format::Json], Format::Text)? {
                Format::Json => to_json(&json!({ "n": n, "k": k, "count": forests.len(), "forests": forests })),
                _ => forests.iter().map(|f| format!("{f}\n")).collect(),
            }))
        }
        Command::Build { target, output } => {
            let m = model(&target)?;
            Ok(Outcome::info(match only(output.format, &[Format::Json, Format::Text, Format::Dot], Format::Json)? {
                Format::Json => to_json(&model_export(&m)),
                Format::Dot => skeleton_dot(&m),
                Format::Text => {
                    let c = census(&m);
                    format!(
                        "n={} {}\nvertices {}\nedges {}\noriented edges {}\nsquares {}\nsquare subcubes {}\ncubes by dimension {:?}\n",
                        m.n(), m.space(), c.vertices, c.edges, c.oriented_edges, c.squares, c.square_subcubes, c.cubes
                    )
                }
            }))
        }
        Command::Check { what, target, output } => {
            let format = only(output.format, &[Format::Json, Format::Text], Format::Json)?;
            let m = model(&target)?;
            let (name, v) = match what {
                CheckKind::Npc => ("npc", envelope("npc", &m, check_npc(&m))),
                CheckKind::Special => ("special", envelope("special", &m, specialness_report(&m))),
                CheckKind::Types => {
                    if m.space() != Space::Base {
                        return Err(Usage("check types needs --space base".into()));
                    }
                    ("types", envelope("types", &m, verify_type_partition(&m)?))
                }
                CheckKind::Cover => {
                    let cover = build_complex(target.n, Space::Cover)?;
                    ("cover", envelope("cover", &cover, verify_covering(target.n)?))
                }
                CheckKind::Relators => ("relators", envelope("relators", &m, verify_relators(target.n)?)),
            };
            let pass = pass_of(&v);
            let body = if format == Format::Text { summary_text(name, &v) } else { to_json(&v) };
            Ok(Outcome { body, pass })
        }
        Command::Lift { word, start, n, space, output } => {
            let m = model(&Target { n, space })?;
            let w = parse_generator_word(&word)?;
            let start = m.types().parse_hex(&start)?;
            let lift = lift_word(&m, &w, start)?;
            let image = word_image(m.types(), &w)?;
            let v = json!({
                "n": n,
                "variant": m.space(),
                "word": w.iter().map(|a| format!("s{a}")).collect::<Vec<_>>(),
                "image": m.types().hex(image),
                "start": m.hex(lift.start),
                "end": m.hex(lift.end),
                "closed": lift.closed,
                "path": lift.path.iter().map(|&e| m.edge_text(e)).collect::<Vec<_>>(),
            });
            Ok(Outcome::info(match only(output.format, &[Format::Json, Format::Text], Format::Json)? {
                Format::Text => format!(
                    "{} -> {} ({})\n",
                    v["start"].as_str().unwrap_or(""),
                    v["end"].as_str().unwrap_or(""),
                    if lift.closed { "closed" } else { "open" }
                ),
                _ => to_json(&v),
            }))
        }
        Command::Presentation { kind, n, output } => {
            let p = presentation(kind.into(), n)?;
            Ok(Outcome::info(match only(output.format, &[Format::Text, Format::Json], Format::Text)? {
                Format::Json => to_json(&json!({
                    "kind": p.kind,
                    "n": p.n,
                    "generators": p.generators.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                    "relators": p.relators.iter().map(|r| json!({
                        "family": r.family,
                        "word": cactus_core::cover::format_word(&r.word),
                    })).collect::<Vec<_>>(),
                })),
                _ => p.to_string(),
            }))
        }
        Command::Export { what, target, output } => {
            let m = model(&target)?;
            let body = match what {
                ExportKind::Skeleton => {
                    only(output.format, &[Format::Dot], Format::Dot)?;
                    skeleton_dot(&m)
                }
                ExportKind::Hyperplanes => match only(output.format, &[Format::Dot, Format::Json], Format::Dot)? {
                    Format::Dot => hyperplane_dot(&specialness_report(&m)),
                    _ => {
                        let p = compute_hyperplanes(&m);
                        let hs: Vec<Value> = p
                            .hyperplanes()
                            .iter()
                            .map(|h| {
                                json!({
                                    "id": h.id,
                                    "type": m.types().type_at(h.ty).to_string(),
                                    "edges": p.members(h.id).iter().map(|&e| m.edge_text(e)).collect::<Vec<_>>(),
                                })
                            })
                            .collect();
                        to_json(&json!({ "n": m.n(), "variant": m.space(), "hyperplanes": hs }))
                    }
                },
                ExportKind::Model => {
                    only(output.format, &[Format::Json], Format::Json)?;
                    to_json(&model_export(&m))
                }
            };
            Ok(Outcome::info(body))
        }
    }
}
