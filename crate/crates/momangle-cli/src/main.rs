//! Command-line driver: parse complexes from the .scx text format, run
//! the library, and print reports either human-readable or as one line of
//! deterministic JSON.

mod scx;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use momangle::decomposer::{decompose, star_fibre_trace, FibreTrace};
use momangle::families::{op_disjoint_union, op_glue, op_join, FamilyElement, FamilyWedge};
use momangle::hochster::{bigraded_betti, zk_profile};
use momangle::scomplex::{ShiftMode, ShiftWitness, Simplex, SimplicialComplex};
use momangle::series::{
    face_ring_poincare, golod_verdict, GolodReason, GolodStatus, IntPolynomial,
};
use momangle::wedge::{SphereWedge, SymbolicWedge};
use momangle::Error as LibError;
use scx::{parse_scx, print_scx, ScxError};

#[derive(Parser)]
#[command(
    name = "momangle",
    version,
    about = "Moment-angle complexes over simplicial complexes: wedge decompositions, \
             exact cohomology, and Poincare series"
)]
struct Cli {
    /// Emit one line of JSON instead of human-readable text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check whether the complex is shifted.
    IsShifted {
        file: String,
        /// Search all vertex orders (at most 10 vertices) instead of
        /// testing the labels as given.
        #[arg(long)]
        search: bool,
    },
    /// Decompose the moment-angle complex of a shifted complex into a
    /// wedge of spheres.
    Decompose {
        file: String,
        /// Loop dimension of the sphere factors: 1 (circles) or 3.
        #[arg(long, default_value_t = 1)]
        loop_dim: u32,
        /// Also print the regular-sequence fibre trace.
        #[arg(long)]
        trace: bool,
    },
    /// Reduced cohomology ranks of the moment-angle complex.
    Betti {
        file: String,
        /// Report per-(subset, degree) entries instead of degree totals.
        #[arg(long)]
        bigraded: bool,
    },
    /// Cohomology profile: Poincare polynomial, torsion, sphere candidate.
    Profile { file: String },
    /// Poincare series of the face ring: closed form and coefficients.
    Poincare {
        file: String,
        /// Highest series coefficient to compute.
        #[arg(long, default_value_t = 10)]
        order: usize,
    },
    /// Golod certification for the face ring.
    Golod { file: String },
    /// Combine two complexes and report the induced wedge data.
    Compose {
        #[arg(value_enum)]
        op: ComposeOp,
        file1: String,
        file2: String,
        /// Glued face as left=right vertex pairs, for example "1=3,2=5".
        #[arg(long)]
        face: Option<String>,
    },
    /// Print the complex of all faces with at most q of n vertices.
    Skeleton { n: u32, q: u32 },
    /// Compare the decomposition against the cohomology oracle.
    OracleCheck { file: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum ComposeOp {
    Union,
    Glue,
    Join,
}

#[derive(Debug)]
enum CliError {
    Parse { line: usize, message: String },
    Io { path: String, message: String },
    Usage(String),
    Lib(LibError),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse { line, message } => write!(f, "line {line}: {message}"),
            CliError::Io { path, message } => write!(f, "{path}: {message}"),
            CliError::Usage(message) => write!(f, "{message}"),
            CliError::Lib(e) => write!(f, "{e}"),
        }
    }
}

impl From<LibError> for CliError {
    fn from(e: LibError) -> Self {
        CliError::Lib(e)
    }
}

impl From<ScxError> for CliError {
    fn from(e: ScxError) -> Self {
        match e {
            ScxError::Parse { line, message } => CliError::Parse { line, message },
            ScxError::Lib(e) => CliError::Lib(e),
        }
    }
}

impl CliError {
    /// 1 usage or domain error, 2 size-cap refusal, 3 violated internal
    /// guarantee.
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Lib(LibError::SizeLimit { .. }) => 2,
            CliError::Lib(LibError::NonRegularStep { .. }) | CliError::Lib(LibError::Internal(_)) => 3,
            _ => 1,
        }
    }
}

/// One finished command: the machine report pieces and the human text.
struct Report {
    command: &'static str,
    input_hash: String,
    result: Value,
    warnings: Vec<String>,
    human: String,
    exit: u8,
}

fn emit(as_json: bool, report: &Report) {
    if as_json {
        let envelope = json!({
            "command": report.command,
            "input_hash": report.input_hash,
            "result": report.result,
            "warnings": report.warnings,
            "millis": 0,
        });
        println!("{envelope}");
    } else {
        for w in &report.warnings {
            eprintln!("warning: {w}");
        }
        print!("{}", report.human);
        if !report.human.ends_with('\n') {
            println!();
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli.command) {
        Ok(report) => {
            emit(cli.json, &report);
            ExitCode::from(report.exit)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}

fn run(command: &Command) -> Result<Report, CliError> {
    match command {
        Command::IsShifted { file, search } => cmd_is_shifted(file, *search),
        Command::Decompose {
            file,
            loop_dim,
            trace,
        } => cmd_decompose(file, *loop_dim, *trace),
        Command::Betti { file, bigraded } => cmd_betti(file, *bigraded),
        Command::Profile { file } => cmd_profile(file),
        Command::Poincare { file, order } => cmd_poincare(file, *order),
        Command::Golod { file } => cmd_golod(file),
        Command::Compose {
            op,
            file1,
            file2,
            face,
        } => cmd_compose(*op, file1, file2, face.as_deref()),
        Command::Skeleton { n, q } => cmd_skeleton(*n, *q),
        Command::OracleCheck { file } => cmd_oracle_check(file),
    }
}

fn sha256_tag(parts: &[&[u8]]) -> String {
    let mut hasher = Sha256::new();
    for part in parts {
        hasher.update(part);
    }
    let digest = hasher.finalize();
    let mut out = String::from("sha256:");
    for byte in digest {
        out.push_str(&format!("{byte:02x}"));
    }
    out
}

fn load(path: &str) -> Result<(Vec<u8>, SimplicialComplex), CliError> {
    let bytes = fs::read(path).map_err(|e| CliError::Io {
        path: path.to_string(),
        message: e.to_string(),
    })?;
    let text = String::from_utf8(bytes.clone()).map_err(|_| CliError::Io {
        path: path.to_string(),
        message: "not valid UTF-8".to_string(),
    })?;
    let k = parse_scx(&text)?;
    Ok((bytes, k))
}

fn poly_coeffs(p: &IntPolynomial) -> Value {
    Value::Array(
        p.coeffs()
            .iter()
            .map(|c| Value::String(c.to_string()))
            .collect(),
    )
}

fn sphere_list(w: &SphereWedge) -> Value {
    Value::Array(
        w.dims()
            .map(|(&dim, &count)| json!({"dim": dim, "count": count}))
            .collect(),
    )
}

fn summand_list(w: &SymbolicWedge) -> Value {
    Value::Array(
        w.summands()
            .map(|(&(s, i), &m)| json!({"s": s, "index_set": i.to_string(), "mult": m}))
            .collect(),
    )
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn cmd_is_shifted(path: &str, search: bool) -> Result<Report, CliError> {
    let (bytes, k) = load(path)?;
    let mode = if search {
        ShiftMode::Search
    } else {
        ShiftMode::GivenOrder
    };
    let verdict = k.is_shifted(mode)?;
    let (witness, human) = match &verdict.witness {
        ShiftWitness::Order(order) => {
            let text = order
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" ");
            (
                json!({"order": order}),
                format!("shifted (vertex order: {text})\n"),
            )
        }
        ShiftWitness::Violation { face, v, v_prime } => (
            json!({"violation": {"face": face.to_string(), "v": v, "v_prime": v_prime}}),
            format!("not shifted: face {face} with {v} replaced by {v_prime} is not a face\n"),
        ),
    };
    let result = json!({
        "shifted": verdict.shifted,
        "mode": if search { "search" } else { "given-order" },
        "witness": witness,
    });
    Ok(Report {
        command: "is-shifted",
        input_hash: sha256_tag(&[&bytes]),
        result,
        warnings: vec![],
        human,
        exit: 0,
    })
}

fn trace_human(out: &mut String, t: &FibreTrace) {
    out.push_str(&format!("initial fibre: {}\n", t.initial));
    for (i, st) in t.steps.iter().enumerate() {
        out.push_str(&format!(
            "step {} ({}, adjoin {}): S = {}, T = {}\n",
            i + 1,
            st.step.phase,
            st.step.simplex,
            st.step.s_set,
            st.step.t_set
        ));
        out.push_str(&format!("  C = {}\n", st.c));
        out.push_str(&format!("  D = {}\n", st.d));
        out.push_str(&format!("  fibre = {}\n", st.f_after));
    }
    out.push_str(&format!("final fibre: {}\n", t.fibre));
}

fn trace_json(t: &FibreTrace) -> Value {
    let steps: Vec<Value> = t
        .steps
        .iter()
        .enumerate()
        .map(|(i, st)| {
            json!({
                "index": i + 1,
                "phase": st.step.phase.to_string(),
                "adjoin": st.step.simplex.to_string(),
                "s_set": st.step.s_set.to_string(),
                "t_set": st.step.t_set.to_string(),
                "c": st.c.to_string(),
                "d": st.d.to_string(),
                "e": st.e.to_string(),
                "fibre": st.f_after.to_string(),
            })
        })
        .collect();
    json!({
        "initial": t.initial.to_string(),
        "steps": steps,
        "final": t.fibre.to_string(),
    })
}

fn cmd_decompose(path: &str, loop_dim: u32, trace: bool) -> Result<Report, CliError> {
    let (bytes, k) = load(path)?;
    let w = decompose(&k)?;
    let spheres = w.realize(loop_dim)?;
    let mut human = String::new();
    let mut trace_value = Value::Null;
    if trace {
        let t = star_fibre_trace(&k)?;
        trace_human(&mut human, &t);
        trace_value = trace_json(&t);
    }
    human.push_str(&format!("{spheres}\n"));
    let result = json!({
        "loop_dim": loop_dim,
        "display": spheres.to_string(),
        "spheres": sphere_list(&spheres),
        "summands": summand_list(&w),
        "trace": trace_value,
    });
    Ok(Report {
        command: "decompose",
        input_hash: sha256_tag(&[&bytes]),
        result,
        warnings: vec![],
        human,
        exit: 0,
    })
}

fn cmd_betti(path: &str, bigraded: bool) -> Result<Report, CliError> {
    let (bytes, k) = load(path)?;
    let betti = bigraded_betti(&k)?;
    let torsion_free = betti.is_torsion_free();
    let mut human = String::new();
    let result = if bigraded {
        let mut rows: BTreeMap<(Simplex, u32), (u64, bool)> = BTreeMap::new();
        for (&key, &rank) in betti.entries() {
            rows.entry(key).or_insert((0, false)).0 = rank;
        }
        for &key in betti.torsion_flags() {
            rows.entry(key).or_insert((0, false)).1 = true;
        }
        let mut entries = Vec::new();
        for (&(sigma, d), &(rank, torsion)) in &rows {
            human.push_str(&format!(
                "({sigma}) {d} {rank}{}\n",
                if torsion { " torsion" } else { "" }
            ));
            entries.push(json!({
                "sigma": sigma.to_string(),
                "d": d,
                "rank": rank,
                "torsion": torsion,
            }));
        }
        json!({
            "bigraded": true,
            "entries": entries,
            "poincare": poly_coeffs(&betti.poincare()),
            "torsion_free": torsion_free,
        })
    } else {
        let mut by_degree = Vec::new();
        for (d, rank) in betti.rank_by_degree() {
            human.push_str(&format!("d={d}: {rank}\n"));
            by_degree.push(json!({"d": d, "rank": rank}));
        }
        human.push_str(&format!("torsion-free: {}\n", yes_no(torsion_free)));
        json!({
            "bigraded": false,
            "by_degree": by_degree,
            "poincare": poly_coeffs(&betti.poincare()),
            "torsion_free": torsion_free,
        })
    };
    Ok(Report {
        command: "betti",
        input_hash: sha256_tag(&[&bytes]),
        result,
        warnings: vec![],
        human,
        exit: 0,
    })
}

fn cmd_profile(path: &str) -> Result<Report, CliError> {
    let (bytes, k) = load(path)?;
    let profile = zk_profile(&k)?;
    let mut human = format!("P~ = {}\n", profile.poincare);
    human.push_str(&format!("torsion-free: {}\n", yes_no(profile.torsion_free)));
    match &profile.sphere_candidate {
        Some(w) => human.push_str(&format!("sphere candidate: {w}\n")),
        None => human.push_str("sphere candidate: none\n"),
    }
    let result = json!({
        "poincare": poly_coeffs(&profile.poincare),
        "torsion_free": profile.torsion_free,
        "sphere_candidate": profile.sphere_candidate.as_ref().map(sphere_list),
    });
    Ok(Report {
        command: "profile",
        input_hash: sha256_tag(&[&bytes]),
        result,
        warnings: vec![],
        human,
        exit: 0,
    })
}

fn golod_tag(verdict: &momangle::series::GolodVerdict) -> (&'static str, Value) {
    match (verdict.status, verdict.reason) {
        (GolodStatus::Golod, GolodReason::Shifted) => ("Golod", Value::String("shifted".into())),
        (GolodStatus::Golod, GolodReason::WedgeMemberF0) => {
            ("Golod", Value::String("wedge_member_F0".into()))
        }
        _ => ("Unknown", Value::Null),
    }
}

fn cmd_poincare(path: &str, order: usize) -> Result<Report, CliError> {
    let (bytes, k) = load(path)?;
    let profile = zk_profile(&k)?;
    let series = face_ring_poincare(k.n(), &profile.poincare)?;
    let coeffs = series.series_coeffs(order)?;
    let verdict = golod_verdict(&k, false);
    let tag = match (verdict.status, verdict.reason) {
        (GolodStatus::Golod, GolodReason::Shifted) => "equality (Golod: shifted)",
        (GolodStatus::Golod, GolodReason::WedgeMemberF0) => "equality (Golod: wedge_member_F0)",
        _ => "upper bound",
    };
    let coeff_text = coeffs
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(" ");
    let human = format!("P(t) = {series}\ncoefficients: {coeff_text}\n{tag}\n");
    let result = json!({
        "numerator": poly_coeffs(series.numerator()),
        "denominator": poly_coeffs(series.denominator()),
        "order": order,
        "coefficients": Value::Array(
            coeffs.iter().map(|c| Value::String(c.to_string())).collect()
        ),
        "tag": tag,
    });
    Ok(Report {
        command: "poincare",
        input_hash: sha256_tag(&[&bytes]),
        result,
        warnings: vec![],
        human,
        exit: 0,
    })
}

fn cmd_golod(path: &str) -> Result<Report, CliError> {
    let (bytes, k) = load(path)?;
    let verdict = golod_verdict(&k, false);
    let (status, reason) = golod_tag(&verdict);
    let human = match &reason {
        Value::String(r) => format!("Golod: {r}\n"),
        _ => "unknown\n".to_string(),
    };
    let result = json!({"status": status, "reason": reason});
    Ok(Report {
        command: "golod",
        input_hash: sha256_tag(&[&bytes]),
        result,
        warnings: vec![],
        human,
        exit: 0,
    })
}

fn parse_face_spec(spec: &str) -> Result<Vec<(u32, u32)>, CliError> {
    let trimmed = spec.trim();
    let mut pairs = Vec::new();
    if trimmed.is_empty() {
        return Ok(pairs);
    }
    for part in trimmed.split(',') {
        let Some((left, right)) = part.split_once('=') else {
            return Err(CliError::Usage(format!(
                "invalid face pair \"{part}\" (expected left=right)"
            )));
        };
        let parse = |s: &str| -> Result<u32, CliError> {
            s.trim().parse().map_err(|_| {
                CliError::Usage(format!("invalid vertex \"{}\" in face spec", s.trim()))
            })
        };
        pairs.push((parse(left)?, parse(right)?));
    }
    Ok(pairs)
}

fn cmd_compose(
    op: ComposeOp,
    file1: &str,
    file2: &str,
    face: Option<&str>,
) -> Result<Report, CliError> {
    let (bytes1, k1) = load(file1)?;
    let (bytes2, k2) = load(file2)?;
    let e1 = FamilyElement::from_shifted(&k1)?;
    let e2 = FamilyElement::from_shifted(&k2)?;
    let out = match op {
        ComposeOp::Union | ComposeOp::Join if face.is_some() => {
            return Err(CliError::Usage("--face only applies to glue".to_string()));
        }
        ComposeOp::Union => op_disjoint_union(&e1, &e2)?,
        ComposeOp::Glue => op_glue(&e1, &e2, &parse_face_spec(face.unwrap_or(""))?)?,
        ComposeOp::Join => op_join(&e1, &e2)?,
    };
    let dims = out.wedge.virtual_dims();
    let mut warnings = Vec::new();
    let oracle_consistent = if out.complex.n() <= 20 {
        let betti = bigraded_betti(&out.complex)?;
        Some(betti.is_torsion_free() && betti.poincare() == out.wedge.poincare())
    } else {
        warnings.push("oracle comparison skipped: more than 20 vertices".to_string());
        None
    };
    let verdict = golod_verdict(&out.complex, out.t == 0);
    let (status, reason) = golod_tag(&verdict);
    let scx_text = print_scx(&out.complex);
    let symbolic = match &out.wedge {
        FamilyWedge::Symbolic(w) => Some(w),
        FamilyWedge::Virtual(_) => None,
    };
    let mut human = scx_text.clone();
    human.push_str(&format!("t = {}\n", out.t));
    if let Some(w) = symbolic {
        human.push_str(&format!("wedge: {w}\n"));
    }
    human.push_str(&format!("spheres: {dims}\n"));
    match oracle_consistent {
        Some(b) => human.push_str(&format!("t0 plausible: {}\n", yes_no(b))),
        None => human.push_str("t0 plausible: unknown\n"),
    }
    human.push_str(&format!(
        "golod: {}\n",
        match &reason {
            Value::String(r) => r.as_str(),
            _ => "unknown",
        }
    ));
    let result = json!({
        "scx": scx_text,
        "t": out.t,
        "wedge": symbolic.map(|w| w.to_string()),
        "spheres": sphere_list(&dims),
        "t0_plausible": oracle_consistent,
        "golod": {"status": status, "reason": reason},
    });
    Ok(Report {
        command: "compose",
        input_hash: sha256_tag(&[&bytes1, &[0u8], &bytes2]),
        result,
        warnings,
        human,
        exit: 0,
    })
}

fn cmd_skeleton(n: u32, q: u32) -> Result<Report, CliError> {
    let k = SimplicialComplex::skeleton(n, q)?;
    let text = print_scx(&k);
    let result = json!({"n": n, "q": q, "scx": text});
    Ok(Report {
        command: "skeleton",
        input_hash: sha256_tag(&[format!("skeleton {n} {q}").as_bytes()]),
        result,
        warnings: vec![],
        human: text,
        exit: 0,
    })
}

fn cmd_oracle_check(path: &str) -> Result<Report, CliError> {
    let (bytes, k) = load(path)?;
    let w = decompose(&k)?;
    let betti = bigraded_betti(&k)?;
    let torsion_free = betti.is_torsion_free();
    let from_wedge: BTreeMap<(Simplex, u32), u64> = w
        .summands()
        .map(|(&(s, i), &m)| ((i, s + i.size()), m))
        .collect();
    let from_oracle: BTreeMap<(Simplex, u32), u64> =
        betti.entries().map(|(&key, &rank)| (key, rank)).collect();
    let keys: BTreeSet<(Simplex, u32)> = from_wedge
        .keys()
        .chain(from_oracle.keys())
        .copied()
        .collect();
    let mut mismatches = Vec::new();
    let mut human = String::new();
    for key in keys {
        let ours = from_wedge.get(&key).copied().unwrap_or(0);
        let oracle = from_oracle.get(&key).copied().unwrap_or(0);
        if ours != oracle {
            human.push_str(&format!(
                "mismatch at ({}, {}): decomposition {}, oracle {}\n",
                key.0, key.1, ours, oracle
            ));
            mismatches.push(json!({
                "index_set": key.0.to_string(),
                "d": key.1,
                "decomposition": ours,
                "oracle": oracle,
            }));
        }
    }
    if !torsion_free {
        human.push_str("oracle reports integral torsion\n");
    }
    let agree = mismatches.is_empty() && torsion_free;
    if agree {
        human = "agree\n".to_string();
    }
    let result = json!({
        "agree": agree,
        "torsion_free": torsion_free,
        "mismatches": mismatches,
    });
    Ok(Report {
        command: "oracle-check",
        input_hash: sha256_tag(&[&bytes]),
        result,
        warnings: vec![],
        human,
        exit: if agree { 0 } else { 3 },
    })
}
