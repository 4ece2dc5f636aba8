//! `torb`: toric cobordism invariants of torus bundles from the command line.
//!
//! Exit codes: 0 success, 1 domain error, 2 parse error, 3 inconclusive.

mod records;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use torb_core::gl2z::{decompose, decomposition_len, normal_form};
use torb_core::invariants::{
    bounds_over_nonorientable, bounds_over_orientable, cobordant_oriented, cobordant_unoriented,
    oriented_class, unoriented_class,
};
use torb_core::presentations::{
    abelian_invariants, gl2z_mod_squares, identity_checks, Presentation,
};
use torb_core::rewriting::{
    build_cobordism, commutator_witness, genus_search, square_witness, verify_cobordism,
    GenusOutcome, HandleImages, DEFAULT_GENUS_BUDGET,
};
use torb_core::{Error, Mat2, TorusBundle};

use records::{matrix_json, pairs_json, parse_witness, Record, WitnessFile};

#[derive(Parser)]
#[command(
    name = "torb",
    version,
    about = "Toric cobordism invariants of torus bundles"
)]
struct Cli {
    /// Emit JSON instead of text (integers as decimal strings).
    #[arg(long, global = true)]
    json: bool,

    /// Read additional matrices from FILE, one per line.
    #[arg(long, global = true, value_name = "FILE")]
    file: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Orientation {
    #[arg(long)]
    oriented: bool,
    #[arg(long)]
    unoriented: bool,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct WitnessKind {
    #[arg(long)]
    commutators: bool,
    #[arg(long)]
    squares: bool,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct BaseKind {
    #[arg(long)]
    orientable: bool,
    #[arg(long)]
    nonorientable: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Cobordism class of each monodromy.
    Class {
        #[command(flatten)]
        orientation: Orientation,
        #[arg(allow_hyphen_values = true)]
        matrices: Vec<String>,
    },
    /// Whether two torus bundles are cobordant.
    Cobordant {
        #[command(flatten)]
        orientation: Orientation,
        #[arg(allow_hyphen_values = true)]
        matrices: Vec<String>,
    },
    /// Word in A, B, R evaluating to each matrix.
    Decompose {
        #[arg(allow_hyphen_values = true)]
        matrices: Vec<String>,
    },
    /// Canonical form (R-flag, sign, Z2*Z3 word).
    NormalForm {
        #[arg(allow_hyphen_values = true)]
        matrices: Vec<String>,
    },
    /// Commutator or square decomposition of an element of SL(2,Z)'.
    Witness {
        #[command(flatten)]
        kind: WitnessKind,
        #[arg(allow_hyphen_values = true)]
        matrices: Vec<String>,
    },
    /// Minimal number of commutators, searched up to --max.
    Genus {
        #[arg(long, value_name = "G")]
        max: usize,
        #[arg(allow_hyphen_values = true)]
        matrices: Vec<String>,
    },
    /// Whether the disjoint union of the bundles bounds.
    Bound {
        #[command(flatten)]
        base: BaseKind,
        #[arg(allow_hyphen_values = true)]
        matrices: Vec<String>,
    },
    /// Describe a bundle over a surface with the given boundary.
    BuildCobordism {
        #[arg(long)]
        nonorientable_base: bool,
        #[arg(allow_hyphen_values = true)]
        matrices: Vec<String>,
    },
    /// Check the presentation identities and the two quotient computations.
    Verify {
        /// Re-check a JSON witness produced by `torb --json witness`.
        #[arg(long, value_name = "FILE")]
        witness: Option<PathBuf>,
    },
}

enum Failure {
    Domain(String),
    Parse(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_parse() {
            Failure::Parse(e.to_string())
        } else {
            Failure::Domain(e.to_string())
        }
    }
}

type Outcome = Result<(Vec<Record>, u8), Failure>;

fn parse_matrices(args: &[String], file: Option<&PathBuf>) -> Result<Vec<Mat2>, Failure> {
    let mut out = args
        .iter()
        .map(|s| s.parse::<Mat2>())
        .collect::<Result<Vec<_>, _>>()?;
    if let Some(path) = file {
        let text = fs::read_to_string(path)
            .map_err(|e| Failure::Parse(format!("cannot read {}: {e}", path.display())))?;
        for line in text.lines().map(str::trim) {
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            out.push(line.parse()?);
        }
    }
    Ok(out)
}

/// Longest generator word the word-based commands will materialize.
const MAX_WORD_LETTERS: u64 = 1 << 24;

/// Rejects a matrix whose generator word would not fit in memory.
fn check_word_len(m: &Mat2) -> Result<(), Failure> {
    if decomposition_len(m) > MAX_WORD_LETTERS.into() {
        return Err(Failure::Domain(format!(
            "the generator word of {m} exceeds {MAX_WORD_LETTERS} letters"
        )));
    }
    Ok(())
}

fn word_sized(ms: Vec<Mat2>) -> Result<Vec<Mat2>, Failure> {
    ms.iter().try_for_each(check_word_len)?;
    at_least_one(ms)
}

fn at_least_one(ms: Vec<Mat2>) -> Result<Vec<Mat2>, Failure> {
    if ms.is_empty() {
        return Err(Failure::Parse("expected at least one matrix".into()));
    }
    Ok(ms)
}

fn class(oriented: bool, ms: Vec<Mat2>) -> Outcome {
    let mut recs = Vec::new();
    for m in at_least_one(ms)? {
        recs.push(if oriented {
            let c = oriented_class(&m)?;
            Record::new(
                format!("class = {} (mod 12)", c.value()),
                json!({"matrix": matrix_json(&m), "kind": "oriented",
                       "class": c.value().to_string(), "modulus": "12"}),
            )
        } else {
            let c = unoriented_class(&m);
            Record::new(
                format!("class = ({},{}) in Z2+Z2", c.u, c.v),
                json!({"matrix": matrix_json(&m), "kind": "unoriented",
                       "class": [c.u.to_string(), c.v.to_string()]}),
            )
        });
    }
    Ok((recs, 0))
}

fn cobordant(oriented: bool, ms: Vec<Mat2>) -> Outcome {
    let [x, y]: [Mat2; 2] = ms
        .try_into()
        .map_err(|_| Failure::Parse("cobordant takes exactly two matrices".into()))?;
    let answer = if oriented {
        cobordant_oriented(
            &TorusBundle::oriented(x.clone())?,
            &TorusBundle::oriented(y.clone())?,
        )?
    } else {
        cobordant_unoriented(
            &TorusBundle::unoriented(x.clone()),
            &TorusBundle::unoriented(y.clone()),
        )
    };
    let kind = if oriented { "oriented" } else { "unoriented" };
    Ok((
        vec![Record::new(
            format!("cobordant: {answer}"),
            json!({"matrices": [matrix_json(&x), matrix_json(&y)], "kind": kind, "cobordant": answer}),
        )],
        0,
    ))
}

fn decompose_cmd(ms: Vec<Mat2>) -> Outcome {
    let recs = word_sized(ms)?
        .iter()
        .map(|m| {
            let w = decompose(m);
            let letters: Vec<&str> = w.letters().iter().map(|l| l.symbol()).collect();
            let text = if w.is_empty() {
                "1".to_string()
            } else {
                letters.join(" ")
            };
            Record::new(
                format!("word = {text}"),
                json!({"matrix": matrix_json(m), "word": letters}),
            )
        })
        .collect();
    Ok((recs, 0))
}

fn normal_form_cmd(ms: Vec<Mat2>) -> Outcome {
    let recs = word_sized(ms)?
        .iter()
        .map(|m| {
            let nf = normal_form(m);
            let psl: Vec<&str> = nf.psl.syllables().iter().map(|s| s.symbol()).collect();
            Record::new(
                nf.to_string(),
                json!({"matrix": matrix_json(m), "r": nf.r_flag as u8,
                       "sign": nf.sign as u8, "psl": psl}),
            )
        })
        .collect();
    Ok((recs, 0))
}

fn witness_cmd(squares: bool, ms: Vec<Mat2>) -> Outcome {
    let mut recs = Vec::new();
    for m in word_sized(ms)? {
        recs.push(if squares {
            let w = square_witness(&m)?;
            let mut lines = vec![format!("squares = {}", w.bases.len())];
            lines.extend(
                w.bases
                    .iter()
                    .enumerate()
                    .map(|(i, x)| format!("base {}: {x}", i + 1)),
            );
            Record::lines(
                lines,
                json!({"kind": "squares", "target": matrix_json(&m),
                       "bases": w.bases.iter().map(matrix_json).collect::<Vec<_>>()}),
            )
        } else {
            let w = commutator_witness(&m)?;
            let mut lines = vec![format!("genus = {}", w.genus())];
            lines.extend(
                w.pairs
                    .iter()
                    .enumerate()
                    .map(|(i, (x, y))| format!("pair {}: x = {x}, y = {y}", i + 1)),
            );
            Record::lines(
                lines,
                json!({"kind": "commutators", "target": matrix_json(&m),
                       "pairs": pairs_json(&w.pairs)}),
            )
        });
    }
    Ok((recs, 0))
}

fn genus_budget() -> Result<u64, Failure> {
    match std::env::var("TORB_GENUS_BUDGET") {
        Err(_) => Ok(DEFAULT_GENUS_BUDGET),
        Ok(s) => match s.trim().parse::<u64>() {
            Ok(n) if n > 0 => Ok(n),
            _ => Err(Failure::Parse(format!(
                "TORB_GENUS_BUDGET must be a positive integer, got {s:?}"
            ))),
        },
    }
}

fn genus_cmd(g_max: usize, ms: Vec<Mat2>) -> Outcome {
    let budget = genus_budget()?;
    let mut recs = Vec::new();
    let mut code = 0;
    for m in word_sized(ms)? {
        let target = matrix_json(&m);
        recs.push(match genus_search(&m, g_max, budget)? {
            GenusOutcome::Found { genus, witness } => {
                let mut lines = vec![format!("genus = {genus}")];
                lines.extend(
                    witness
                        .pairs
                        .iter()
                        .enumerate()
                        .map(|(i, (x, y))| format!("pair {}: x = {x}, y = {y}", i + 1)),
                );
                Record::lines(
                    lines,
                    json!({"kind": "commutators", "target": target, "status": "found",
                           "genus": genus.to_string(), "pairs": pairs_json(&witness.pairs)}),
                )
            }
            GenusOutcome::ExceedsMax { g_max } => Record::new(
                format!("genus > {g_max}"),
                json!({"target": target, "status": "exceeds", "max": g_max.to_string()}),
            ),
            GenusOutcome::Inconclusive {
                lower_bound,
                upper_bound,
            } => {
                code = 3;
                Record::new(
                    format!("inconclusive: {lower_bound} <= genus <= {upper_bound}"),
                    json!({"target": target, "status": "inconclusive",
                           "lower_bound": lower_bound.to_string(),
                           "upper_bound": upper_bound.to_string()}),
                )
            }
        });
    }
    Ok((recs, code))
}

fn bound_cmd(orientable: bool, ms: Vec<Mat2>) -> Outcome {
    let answer = if orientable {
        bounds_over_orientable(&ms)
    } else {
        bounds_over_nonorientable(&ms)
    };
    let base = if orientable {
        "orientable"
    } else {
        "nonorientable"
    };
    Ok((
        vec![Record::new(
            format!("bounds: {answer}"),
            json!({"matrices": ms.iter().map(matrix_json).collect::<Vec<_>>(),
                   "base": base, "bounds": answer}),
        )],
        0,
    ))
}

fn build_cobordism_cmd(nonorientable: bool, ms: Vec<Mat2>) -> Outcome {
    check_word_len(&Mat2::product(&ms))?;
    let d = build_cobordism(&ms, !nonorientable)?;
    let verified = verify_cobordism(&d);
    let mut lines = vec![
        format!(
            "base = {}",
            if d.base_orientable {
                "orientable"
            } else {
                "nonorientable"
            }
        ),
        format!(
            "{} = {}",
            if d.base_orientable {
                "genus"
            } else {
                "crosscaps"
            },
            d.genus_or_crosscaps
        ),
        format!("boundary components = {}", d.boundary_count),
    ];
    lines.extend(
        d.boundary_monodromies
            .iter()
            .enumerate()
            .map(|(i, m)| format!("boundary {}: {m}", i + 1)),
    );
    let handles = match &d.handle_images {
        HandleImages::Handles(h) => {
            lines.extend(
                h.iter()
                    .enumerate()
                    .map(|(i, (x, y))| format!("handle {}: x = {x}, y = {y}", i + 1)),
            );
            json!({"handles": pairs_json(h)})
        }
        HandleImages::Crosscaps(c) => {
            lines.extend(
                c.iter()
                    .enumerate()
                    .map(|(i, x)| format!("crosscap {}: {x}", i + 1)),
            );
            json!({"crosscaps": c.iter().map(matrix_json).collect::<Vec<_>>()})
        }
    };
    lines.push(format!(
        "total space orientable: {}",
        d.total_space_orientable()
    ));
    lines.push(format!("relation verified: {verified}"));
    let json = json!({
        "base_orientable": d.base_orientable,
        "genus_or_crosscaps": d.genus_or_crosscaps.to_string(),
        "boundary_count": d.boundary_count.to_string(),
        "boundary_monodromies": d.boundary_monodromies.iter().map(matrix_json).collect::<Vec<_>>(),
        "handle_images": handles,
        "total_space_orientable": d.total_space_orientable(),
        "verified": verified,
    });
    Ok((vec![Record::lines(lines, json)], 0))
}

fn pass(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn verify_cmd() -> Outcome {
    let mut lines = Vec::new();
    let mut checks = Vec::new();
    let mut all_required = true;
    for c in identity_checks(&Mat2::gen_a(), &Mat2::gen_b(), &Mat2::gen_r()) {
        let note = if c.required { "" } else { "  (informational)" };
        lines.push(format!("{}  {}{note}", pass(c.holds), c.name));
        checks.push(json!({"name": c.name, "holds": c.holds, "required": c.required}));
        all_required &= c.holds || !c.required;
    }

    let quotients = [
        (
            "SL(2,Z) abelianized",
            abelian_invariants(&Presentation::sl2z(), &[]),
            "Z12",
        ),
        (
            "GL(2,Z) mod squares",
            abelian_invariants(&gl2z_mod_squares(), &[]),
            "Z2 + Z2",
        ),
        (
            "GL(2,Z) abelianized",
            abelian_invariants(&Presentation::gl2z(), &[]),
            "Z2 + Z2",
        ),
    ];
    let mut quotient_json = Vec::new();
    for (name, inv, expected) in quotients {
        let got = inv.to_string();
        let ok = got == expected;
        all_required &= ok;
        let snf: Vec<String> = inv.factors.iter().map(|d| d.to_string()).collect();
        lines.push(format!(
            "{}  {name} = {got} (snf {})",
            pass(ok),
            snf.join(" ")
        ));
        quotient_json.push(json!({"name": name, "group": got, "expected": expected,
                                  "snf": snf, "holds": ok}));
    }
    let json = json!({"identities": checks, "quotients": quotient_json, "ok": all_required});
    Ok((
        vec![Record::lines(lines, json)],
        if all_required { 0 } else { 1 },
    ))
}

fn verify_witness_cmd(path: &PathBuf) -> Outcome {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Parse(format!("cannot read {}: {e}", path.display())))?;
    let mut recs = Vec::new();
    let mut all_ok = true;
    for line in text.lines().filter(|l| !l.trim().is_empty()) {
        let value: Value = serde_json::from_str(line)
            .map_err(|e| Failure::Parse(format!("invalid witness JSON: {e}")))?;
        let (target, ok) = match parse_witness(&value)? {
            WitnessFile::Commutators { target, witness } => {
                let ok = witness.verifies(&target);
                (target, ok)
            }
            WitnessFile::Squares { target, witness } => {
                let ok = witness.verifies(&target);
                (target, ok)
            }
        };
        all_ok &= ok;
        recs.push(Record::new(
            format!("{}  witness re-evaluates to {target}", pass(ok)),
            json!({"target": matrix_json(&target), "holds": ok}),
        ));
    }
    if recs.is_empty() {
        return Err(Failure::Parse("witness file is empty".into()));
    }
    Ok((recs, if all_ok { 0 } else { 1 }))
}

fn run(cli: Cli) -> Outcome {
    let file = cli.file.as_ref();
    match cli.command {
        Command::Class {
            orientation,
            matrices,
        } => class(orientation.oriented, parse_matrices(&matrices, file)?),
        Command::Cobordant {
            orientation,
            matrices,
        } => cobordant(orientation.oriented, parse_matrices(&matrices, file)?),
        Command::Decompose { matrices } => decompose_cmd(parse_matrices(&matrices, file)?),
        Command::NormalForm { matrices } => normal_form_cmd(parse_matrices(&matrices, file)?),
        Command::Witness { kind, matrices } => {
            witness_cmd(kind.squares, parse_matrices(&matrices, file)?)
        }
        Command::Genus { max, matrices } => genus_cmd(max, parse_matrices(&matrices, file)?),
        Command::Bound { base, matrices } => {
            bound_cmd(base.orientable, parse_matrices(&matrices, file)?)
        }
        Command::BuildCobordism {
            nonorientable_base,
            matrices,
        } => build_cobordism_cmd(nonorientable_base, parse_matrices(&matrices, file)?),
        Command::Verify { witness: Some(p) } => verify_witness_cmd(&p),
        Command::Verify { witness: None } => verify_cmd(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let as_json = cli.json;
    match run(cli) {
        Ok((records, code)) => {
            for r in &records {
                r.print(as_json);
            }
            ExitCode::from(code)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Parse(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
