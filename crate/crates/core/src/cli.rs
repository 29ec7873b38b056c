//! Command dispatch for the `rzpoly` binary.
//!
//! Every command produces a [`Report`]; `main` only prints it and maps the
//! outcome to an exit status.

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::corpus::{self, Kind};
use crate::hrep::{self, HRepError};
use crate::moves::{self, FlipSearch, MoveError};
use crate::polytope::{self, CombPolytope, PolytopeError};
use crate::zcomplex::{self, ComplexError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERDICT_NO: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_GUARD: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "rzpoly", version, about = "Vertex-cut recognition and real moment-angle manifolds")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Numeric tolerance for rank and feasibility decisions.
    #[arg(long, global = true, default_value_t = hrep::DEFAULT_TOLERANCE)]
    pub tol: f64,
    /// Depth bound for flip-certificate search.
    #[arg(long, global = true, default_value_t = 3)]
    pub depth: usize,
    /// Size guard: facet count for complexes, state count for searches,
    /// subset count for vertex enumeration.
    #[arg(long, global = true)]
    pub guard: Option<u64>,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Exit with status 1 on a NO verdict (recognize, andreev).
    #[arg(long, global = true)]
    pub strict: bool,
    /// Print only the command payload, without the report envelope.
    #[arg(long, global = true)]
    pub raw: bool,
    /// Include wall-clock timings (makes output nondeterministic).
    #[arg(long, global = true)]
    pub timings: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a polytope file.
    Validate { input: PathBuf },
    /// Decide whether a 3-polytope comes from Δ³ by vertex-cuts.
    Recognize { input: PathBuf },
    /// Cut off one vertex.
    VertexCut { input: PathBuf, vertex: usize },
    /// Shrink a simplex facet to a vertex.
    Collapse { input: PathBuf, facet: usize },
    /// Search for flips of codimension ≥ 3 from the simplex.
    FlipCert { input: PathBuf },
    /// List prismatic 3- and 4-circuits.
    Andreev { input: PathBuf },
    /// Summarize the chamber complex of the real moment-angle manifold.
    MomentAngle { input: PathBuf },
    /// Euler characteristic of the real moment-angle manifold.
    Euler { input: PathBuf },
    /// Components of the fixed set of each generator.
    FixedSets { input: PathBuf },
    /// The doubling filtration with edge types.
    Filtration { input: PathBuf },
    /// Relation matrix and quadric system of an H-representation.
    Quadrics { input: PathBuf },
    /// Sample the quadric model and check gradient rank.
    VerifyQuadrics {
        input: PathBuf,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
    },
    /// Test two polytopes for combinatorial isomorphism.
    Isomorphic { first: PathBuf, second: PathBuf },
    /// Emit a polytope from a standard family.
    Generate {
        /// simplex | cube | prism | random-vertexcuts | dodecahedron
        kind: String,
        /// Dimension, number of sides, or number of cuts.
        param: Option<usize>,
        /// Emit H-representation text instead of incidence JSON
        /// (simplex, cube and triangular prism only).
        #[arg(long)]
        hrep: bool,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
    #[error(transparent)]
    HRep(#[from] HRepError),
    #[error(transparent)]
    Move(#[from] MoveError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error("bad parameters: {0}")]
    BadParameters(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::HRep(HRepError::GuardExceeded { .. })
            | CliError::Move(MoveError::GuardExceeded(_))
            | CliError::Complex(ComplexError::GuardExceeded { .. }) => EXIT_GUARD,
            _ => EXIT_INPUT,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "tool": env!("CARGO_PKG_NAME"),
            "version": env!("CARGO_PKG_VERSION"),
            "error": self.to_string(),
            "exit": self.exit_code(),
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    pub inputs: Vec<InputDigest>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<String>,
    pub result: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

/// A finished command: the report, what to print, and the exit status.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub report: Report,
    pub exit: i32,
    /// Preformatted payload for commands whose output is a file format
    /// (`generate`).
    pub verbatim: Option<String>,
}

impl Outcome {
    pub fn render(&self, format: Format, raw: bool) -> String {
        if let Some(text) = &self.verbatim {
            return text.clone();
        }
        match (format, raw) {
            (Format::Json, true) => pretty(&self.report.result),
            (Format::Json, false) => pretty(&serde_json::to_value(&self.report).expect("report")),
            (Format::Text, _) => {
                let mut out = String::new();
                if !raw {
                    out.push_str(&format!(
                        "{} {} {}\n",
                        self.report.tool, self.report.version, self.report.command
                    ));
                    if let Some(v) = &self.report.verdict {
                        out.push_str(&format!("verdict: {v}\n"));
                    }
                }
                match &self.report.result {
                    Value::Object(map) => {
                        for (k, v) in map {
                            out.push_str(&format!("{k}: {v}\n"));
                        }
                    }
                    other => out.push_str(&format!("{other}\n")),
                }
                out
            }
        }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json value serializes");
    s.push('\n');
    s
}

struct Inputs {
    digests: Vec<InputDigest>,
}

impl Inputs {
    fn read(&mut self, path: &Path) -> Result<String, CliError> {
        let bytes = std::fs::read(path).map_err(|e| CliError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        self.digests.push(InputDigest {
            path: path.display().to_string(),
            sha256: hex::encode(Sha256::digest(&bytes)),
        });
        String::from_utf8(bytes).map_err(|e| CliError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })
    }

    /// `.json` files are incidence data; anything else is H-representation
    /// text whose vertices are enumerated.
    fn polytope(&mut self, path: &Path, cli: &Cli) -> Result<CombPolytope, CliError> {
        let text = self.read(path)?;
        if path.extension().is_some_and(|e| e == "json") {
            Ok(CombPolytope::from_json(&text)?)
        } else {
            let h = hrep::parse_hrep_with(&text, cli.tol, subset_guard(cli))?;
            Ok(hrep::enumerate_vertices(&h)?.0)
        }
    }

    fn hrep(&mut self, path: &Path, cli: &Cli) -> Result<hrep::HRep, CliError> {
        let text = self.read(path)?;
        Ok(hrep::parse_hrep_with(&text, cli.tol, subset_guard(cli))?)
    }
}

fn subset_guard(cli: &Cli) -> u128 {
    cli.guard.map_or(hrep::DEFAULT_SUBSET_GUARD, u128::from)
}

fn facet_guard(cli: &Cli) -> usize {
    cli.guard.map_or(zcomplex::DEFAULT_FACET_GUARD, |g| g as usize)
}

fn state_guard(cli: &Cli) -> usize {
    cli.guard.map_or(100_000, |g| g as usize)
}

fn yes_no(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("payload serializes")
}

/// Runs one command.
pub fn dispatch(cli: &Cli) -> Result<Outcome, CliError> {
    if !(cli.tol > 0.0 && cli.tol.is_finite()) {
        return Err(CliError::BadParameters(format!("--tol must be positive, got {}", cli.tol)));
    }
    let started = Instant::now();
    let mut inputs = Inputs {
        digests: Vec::new(),
    };
    let mut verdict: Option<String> = None;
    let mut exit = EXIT_OK;
    let mut verbatim = None;

    let (name, result): (&str, Value) = match &cli.command {
        Command::Validate { input } => {
            let p = inputs.polytope(input, cli)?;
            let lattice = polytope::face_lattice(&p);
            verdict = Some(yes_no(true));
            (
                "validate",
                json!({
                    "dim": p.dim(),
                    "facets": p.facet_count(),
                    "vertices": p.vertex_count(),
                    "f_vector": lattice.f_vector(),
                }),
            )
        }
        Command::Recognize { input } => {
            let p = inputs.polytope(input, cli)?;
            let r = moves::recognize_vertexcut_reducible(&p)?;
            verdict = Some(yes_no(r.reducible));
            if cli.strict && !r.reducible {
                exit = EXIT_VERDICT_NO;
            }
            ("recognize", to_value(&r.to_json()))
        }
        Command::VertexCut { input, vertex } => {
            let p = inputs.polytope(input, cli)?;
            let q = moves::vertex_cut(&p, *vertex)?;
            ("vertex-cut", to_value(&q.to_file()))
        }
        Command::Collapse { input, facet } => {
            let p = inputs.polytope(input, cli)?;
            let q = moves::simplex_facet_collapse(&p, *facet)?;
            ("collapse", to_value(&q.to_file()))
        }
        Command::FlipCert { input } => {
            let p = inputs.polytope(input, cli)?;
            let search = moves::psc_flip_certificate(&p, cli.depth, state_guard(cli))?;
            let value = match &search {
                FlipSearch::Certificate(_) => {
                    verdict = Some("certificate".into());
                    to_value(&search.to_json())
                }
                FlipSearch::NoneWithinBound { depth, states } => {
                    verdict = Some("none-within-bound".into());
                    json!({"moves": null, "depth": depth, "states": states})
                }
            };
            ("flip-cert", value)
        }
        Command::Andreev { input } => {
            let p = inputs.polytope(input, cli)?;
            let three = moves::prismatic_circuits(&p, 3)?;
            let four = moves::prismatic_circuits(&p, 4)?;
            let clean = three.is_empty() && four.is_empty();
            verdict = Some(yes_no(clean));
            if cli.strict && !clean {
                exit = EXIT_VERDICT_NO;
            }
            (
                "andreev",
                json!({
                    "prismatic_3": three,
                    "prismatic_4": four,
                    "no_prismatic_3_or_4_circuits": clean,
                }),
            )
        }
        Command::MomentAngle { input } => {
            let p = inputs.polytope(input, cli)?;
            let z = zcomplex::build_chamber_complex_with(&p, facet_guard(cli))?;
            ("moment-angle", to_value(&zcomplex::summarize(&z)))
        }
        Command::Euler { input } => {
            let p = inputs.polytope(input, cli)?;
            let closed = zcomplex::euler_characteristic_closed_form(&p);
            let value = if p.facet_count() <= facet_guard(cli) {
                let z = zcomplex::build_chamber_complex_with(&p, facet_guard(cli))?;
                json!({"euler": zcomplex::euler_characteristic(&z), "closed_form": closed})
            } else {
                json!({"euler": closed, "closed_form": closed, "lattice_only": true})
            };
            ("euler", value)
        }
        Command::FixedSets { input } => {
            let p = inputs.polytope(input, cli)?;
            let z = zcomplex::build_chamber_complex_with(&p, facet_guard(cli))?;
            ("fixed-sets", to_value(&zcomplex::summarize(&z).fixed_sets))
        }
        Command::Filtration { input } => {
            let p = inputs.polytope(input, cli)?;
            let z = zcomplex::build_chamber_complex_with(&p, facet_guard(cli))?;
            let stages: Vec<Value> = zcomplex::doubling_filtration(&z)
                .iter()
                .map(|s| {
                    let c = zcomplex::classify_edge_types(&z, s);
                    json!({
                        "j": s.j,
                        "facets": s.facets.len(),
                        "chambers": s.chambers,
                        "boundary_identity": s.boundary_identity_holds,
                        "doubling": s.doubling_holds,
                        "type1_edges": c.type1,
                        "type2_edges": c.type2,
                    })
                })
                .collect();
            ("filtration", json!({ "filtration": stages }))
        }
        Command::Quadrics { input } => {
            let h = inputs.hrep(input, cli)?;
            let q = hrep::relation_matrix(&h)?;
            ("quadrics", to_value(&q.to_json()))
        }
        Command::VerifyQuadrics { input, samples } => {
            let h = inputs.hrep(input, cli)?;
            let report = hrep::verify_nondegeneracy(&h, *samples, cli.seed)?;
            verdict = Some(if report.passed() { "pass" } else { "fail" }.into());
            ("verify-quadrics", to_value(&report))
        }
        Command::Isomorphic { first, second } => {
            let p = inputs.polytope(first, cli)?;
            let q = inputs.polytope(second, cli)?;
            let perm = polytope::combinatorial_isomorphic(&p, &q);
            verdict = Some(yes_no(perm.is_some()));
            ("isomorphic", json!({ "bijection": perm }))
        }
        Command::Generate { kind, param, hrep } => {
            let text = generate(kind, *param, *hrep, cli.seed)?;
            verbatim = Some(text.clone());
            ("generate", Value::String(text))
        }
    };

    Ok(Outcome {
        report: Report {
            tool: env!("CARGO_PKG_NAME"),
            version: env!("CARGO_PKG_VERSION"),
            command: name.to_string(),
            inputs: inputs.digests,
            verdict,
            result,
            elapsed_ms: cli
                .timings
                .then(|| started.elapsed().as_secs_f64() * 1000.0),
        },
        exit,
        verbatim,
    })
}

fn generate(kind: &str, param: Option<usize>, as_hrep: bool, seed: u64) -> Result<String, CliError> {
    let bad = |msg: &str| CliError::BadParameters(msg.to_string());
    if as_hrep {
        let h = match (kind, param) {
            ("simplex", Some(n)) if n >= 1 => corpus::simplex_hrep(n),
            ("cube", Some(n)) if n >= 1 => corpus::cube_hrep(n),
            ("prism", None | Some(3)) => corpus::prism_hrep(),
            _ => return Err(bad("H-representations exist for simplex N, cube N and prism 3")),
        };
        let mut out = format!("{} {}\n", h.dim(), h.halfspace_count());
        for (a, b) in h.normals().iter().zip(h.offsets()) {
            let row: Vec<String> = a.iter().chain(std::iter::once(b)).map(|v| v.to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        return Ok(out);
    }
    let kind = match kind {
        "simplex" => Kind::Simplex {
            dim: param.ok_or_else(|| bad("simplex needs a dimension"))?,
        },
        "cube" => Kind::Cube {
            dim: param.ok_or_else(|| bad("cube needs a dimension"))?,
        },
        "prism" => Kind::Prism {
            sides: param.unwrap_or(3),
        },
        "random-vertexcuts" => Kind::RandomVertexCuts {
            cuts: param.ok_or_else(|| bad("random-vertexcuts needs a cut count"))?,
            seed,
        },
        "dodecahedron" => Kind::Dodecahedron,
        other => return Err(bad(&format!("unknown kind `{other}`"))),
    };
    let p = corpus::generate(kind).map_err(|e| CliError::BadParameters(e.to_string()))?;
    let mut text = p.to_json();
    text.push('\n');
    Ok(text)
}
