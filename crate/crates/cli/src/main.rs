use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use sp6::census::{self, Fixtures, TermSubset};
use sp6::multiplicity::{self, root_lattice_parity};
use sp6::partition::{self, AlphaTriple, KpfTable};
use sp6::qpoly::QPoly;
use sp6::root_system::WeightFW;

const SCHEMA_VERSION: u32 = 1;

const EXIT_CROSS_CHECK: u8 = 3;
const EXIT_FIXTURE: u8 = 4;

#[derive(Parser)]
#[command(name = "sp6", version, about = "q-analog partition function and Weyl alternation sets for sp(6)")]
struct Cli {
    /// Worker threads for parallel sweeps (default: all cores)
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// q-analog of Kostant's partition function at m*a1 + n*a2 + k*a3
    Kpf {
        /// Simple-root coordinates `m,n,k`
        #[arg(long, value_parser = parse_alpha, allow_hyphen_values = true)]
        alpha: AlphaTriple,
        /// Also evaluate by brute-force enumeration and compare
        #[arg(long)]
        oracle: bool,
    },
    /// q-multiplicity of the weight mu in L(lambda)
    Mult {
        /// Highest weight in fundamental-weight coordinates
        #[arg(long, value_parser = parse_dominant, allow_hyphen_values = true)]
        lam: WeightFW,
        /// Weight in fundamental-weight coordinates
        #[arg(long, value_parser = parse_dominant, allow_hyphen_values = true)]
        mu: WeightFW,
        #[arg(long, value_enum, default_value_t = Method::Direct)]
        method: Method,
        /// Print the ordinary multiplicity (value at q = 1)
        #[arg(long)]
        at_one: bool,
    },
    /// Weyl alternation set of (lambda, mu)
    Altset {
        #[arg(long, value_parser = parse_dominant, allow_hyphen_values = true)]
        lam: WeightFW,
        #[arg(long, value_parser = parse_dominant, allow_hyphen_values = true)]
        mu: WeightFW,
    },
    /// Classification of alternation sets
    Census {
        #[command(subcommand)]
        command: CensusCommand,
    },
}

#[derive(Subcommand)]
enum CensusCommand {
    /// Filter all 2^17 subsets of the contributing terms
    Pipeline {
        /// List the survivors of stage 1, 2 or 3
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        stage: Option<u8>,
        /// Also write the JSON document to this file
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Collect alternation sets over a box of dominant weights
    Sweep {
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(i64).range(0..))]
        lam_max: i64,
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(i64).range(0..))]
        mu_max: i64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the pipeline, sweep and cross-checks against reference listings
    Verify {
        /// Directory holding the reference JSON files (default: built-in copies)
        #[arg(long, env = "SP6_FIXTURES")]
        fixtures: Option<PathBuf>,
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(i64).range(0..))]
        lam_max: i64,
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(i64).range(0..))]
        mu_max: i64,
    },
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Method {
    Direct,
    Cases,
    Both,
}

fn parse_alpha(s: &str) -> Result<AlphaTriple, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn parse_dominant(s: &str) -> Result<WeightFW, String> {
    let w: WeightFW = s.parse().map_err(|e| format!("{e}"))?;
    if !w.is_dominant() {
        return Err(format!("{w} is not dominant"));
    }
    Ok(w)
}

/// Result of one command before rendering.
struct Report {
    command: &'static str,
    params: Value,
    result: Value,
    text: String,
    note: Option<String>,
    exit: u8,
}

fn digest(params: &Value, result: &Value) -> String {
    let body = serde_json::to_vec(&json!({ "params": params, "result": result })).expect("json values serialize");
    hex::encode(Sha256::digest(&body))
}

fn document(report: &Report, elapsed: f64) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "command": report.command,
        "result": report.result,
        "manifest": {
            "version": env!("CARGO_PKG_VERSION"),
            "argv": std::env::args().collect::<Vec<_>>(),
            "params": report.params,
            "elapsed_seconds": elapsed,
            "digest": digest(&report.params, &report.result),
        },
    })
}

fn poly_json(p: &QPoly) -> Value {
    json!({ "coeffs": p, "text": p.to_string() })
}

fn cmd_kpf(alpha: AlphaTriple, oracle: bool) -> Report {
    let p = partition::kpf_q(alpha);
    let mut result = json!({ "kpf_q": poly_json(&p) });
    let mut text = p.to_string();
    let mut exit = 0;
    if oracle {
        let o = partition::kpf_q_oracle(alpha);
        result["oracle"] = poly_json(&o);
        result["agree"] = json!(o == p);
        text = format!("{p}\n{o}");
        if o != p {
            exit = EXIT_CROSS_CHECK;
        }
    }
    Report {
        command: "kpf",
        params: json!({ "alpha": alpha.as_array(), "oracle": oracle }),
        result,
        text,
        note: (exit != 0).then(|| "formula and oracle disagree".to_string()),
        exit,
    }
}

fn cmd_mult(lam: WeightFW, mu: WeightFW, method: Method, at_one: bool) -> Report {
    let params = json!({ "lam": lam.as_array(), "mu": mu.as_array(), "method": method, "at_one": at_one });
    let direct = matches!(method, Method::Direct | Method::Both).then(|| multiplicity::mult_q_direct(lam, mu));
    let cases = matches!(method, Method::Cases | Method::Both).then(|| multiplicity::mult_q_cases(lam, mu));
    let mut result = json!({});
    let mut lines = Vec::new();
    for (name, value) in [("direct", &direct), ("cases", &cases)] {
        if let Some(p) = value {
            result[name] = poly_json(p);
            lines.push(if at_one { p.eval_at_one().to_string() } else { p.to_string() });
        }
    }
    let value = direct.as_ref().or(cases.as_ref()).expect("at least one method runs");
    result["at_one"] = json!(value.eval_at_one().to_string());
    if method == Method::Cases || method == Method::Both {
        result["case"] = json!(multiplicity::dispatch_case(&multiplicity::coefficient_profile(lam, mu)));
    }
    let mismatch = matches!((&direct, &cases), (Some(a), Some(b)) if a != b);
    let note = if mismatch {
        Some("direct and closed-formula values disagree".to_string())
    } else if !root_lattice_parity(lam, mu) {
        Some("lambda - mu is not in the root lattice".to_string())
    } else {
        None
    };
    if method == Method::Both {
        result["agree"] = json!(!mismatch);
    }
    Report {
        command: "mult",
        params,
        result,
        text: lines.join("\n"),
        note,
        exit: if mismatch { EXIT_CROSS_CHECK } else { 0 },
    }
}

fn cmd_altset(lam: WeightFW, mu: WeightFW) -> Report {
    let set = multiplicity::alternation_set(lam, mu);
    Report {
        command: "altset",
        params: json!({ "lam": lam.as_array(), "mu": mu.as_array() }),
        result: json!({ "set": set, "size": set.len() }),
        text: set.to_string(),
        note: (!root_lattice_parity(lam, mu)).then(|| "lambda - mu is not in the root lattice".to_string()),
        exit: 0,
    }
}

fn cmd_pipeline(stage: Option<u8>) -> Report {
    let p = census::filter_pipeline();
    let [c0, c1, c2, c3] = p.counts();
    let mut text = format!("{c0} → {c1} → {c2} → {c3}");
    let mut result = json!({ "counts": p.counts() });
    if let Some(stage) = stage {
        let sets: &[TermSubset] = match stage {
            1 => &p.type2,
            2 => &p.type3,
            _ => &p.final_sets,
        };
        for s in sets {
            text.push('\n');
            text.push_str(&s.to_alternation_set().to_string());
        }
        result["stage"] = json!(stage);
        result["sets"] = json!(sets);
    }
    Report {
        command: "census pipeline",
        params: json!({ "stage": stage }),
        result,
        text,
        note: None,
        exit: 0,
    }
}

fn cmd_sweep(lam_max: i64, mu_max: i64) -> Report {
    let r = census::sweep_census(lam_max, mu_max);
    let mut text = format!("{} sets from {} pairs", r.witnesses.len(), r.pairs);
    for w in &r.witnesses {
        text.push_str(&format!("\n{}  {}  {}", w.set, w.lam, w.mu));
    }
    let witnesses: Vec<Value> = r
        .witnesses
        .iter()
        .map(|w| json!({ "set": w.set, "lam": w.lam.as_array(), "mu": w.mu.as_array() }))
        .collect();
    Report {
        command: "census sweep",
        params: json!({ "lam_max": lam_max, "mu_max": mu_max }),
        result: json!({
            "pairs": r.pairs,
            "count": r.witnesses.len(),
            "witnesses": witnesses,
            "elements_seen": r.elements_seen,
        }),
        text,
        note: None,
        exit: 0,
    }
}

#[derive(Serialize)]
struct Check {
    name: String,
    passed: bool,
    details: Vec<String>,
}

/// Cross-checks between independent computations on a small box.
fn cross_checks() -> Vec<Check> {
    let mut checks = Vec::new();

    let mut details = Vec::new();
    for m in 0..=8 {
        for n in 0..=8 {
            for k in 0..=8 {
                let t = AlphaTriple::new(m, n, k);
                if partition::kpf_q(t) != partition::kpf_q_oracle(t) {
                    details.push(format!("{t}"));
                }
            }
        }
    }
    checks.push(Check { name: "formula vs oracle on [0,8]^3".into(), passed: details.is_empty(), details });

    let mut pairs = Vec::new();
    for m in 0..=4 {
        for n in 0..=4 {
            for k in 0..=4 {
                for x in 0..=4 {
                    for y in 0..=4 {
                        for z in 0..=4 {
                            let (lam, mu) = (WeightFW::new(m, n, k), WeightFW::new(x, y, z));
                            if root_lattice_parity(lam, mu) {
                                pairs.push((lam, mu));
                            }
                        }
                    }
                }
            }
        }
    }
    let table = KpfTable::build(pairs.iter().flat_map(|(l, m)| multiplicity::needed_triples(*l, *m)));
    let mut dispatch = Vec::new();
    let mut freudenthal = Vec::new();
    for (lam, mu) in &pairs {
        let d = multiplicity::mult_q_direct_with(&table, *lam, *mu);
        if d != multiplicity::mult_q_cases_with(&table, *lam, *mu) {
            dispatch.push(format!("{lam} {mu}"));
        }
        if lam.m + lam.n + lam.k <= 3 {
            match multiplicity::mult_freudenthal(*lam, *mu) {
                Ok(f) if f == d.eval_at_one() => {}
                other => freudenthal.push(format!("{lam} {mu}: {other:?}")),
            }
        }
    }
    checks.push(Check {
        name: "direct vs closed formula on [0,4]^6".into(),
        passed: dispatch.is_empty(),
        details: dispatch,
    });
    checks.push(Check {
        name: "kostant vs freudenthal, |lam| <= 3".into(),
        passed: freudenthal.is_empty(),
        details: freudenthal,
    });
    checks
}

fn cmd_verify(dir: Option<&Path>, lam_max: i64, mu_max: i64) -> Result<Report, String> {
    let fixtures = match dir {
        Some(d) => Fixtures::load(d).map_err(|e| e.to_string())?,
        None => Fixtures::embedded(),
    };
    let report = census::verify_census(&fixtures, lam_max, mu_max);
    let fixture_checks: Vec<Check> = report
        .checks
        .into_iter()
        .map(|c| Check { name: c.name, passed: c.passed, details: c.details })
        .collect();
    let cross = cross_checks();
    let mut text = Vec::new();
    for c in fixture_checks.iter().chain(&cross) {
        text.push(format!("{} {}", if c.passed { "PASS" } else { "FAIL" }, c.name));
        for d in c.details.iter().take(10) {
            text.push(format!("    {d}"));
        }
    }
    let exit = if fixture_checks.iter().any(|c| !c.passed) {
        EXIT_FIXTURE
    } else if cross.iter().any(|c| !c.passed) {
        EXIT_CROSS_CHECK
    } else {
        0
    };
    Ok(Report {
        command: "census verify",
        params: json!({
            "fixtures": dir.map(|d| d.display().to_string()),
            "lam_max": lam_max,
            "mu_max": mu_max,
        }),
        result: json!({ "passed": exit == 0, "fixture_checks": fixture_checks, "cross_checks": cross }),
        text: text.join("\n"),
        note: None,
        exit,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let start = Instant::now();
    let mut out_path = None;
    let report = match cli.command {
        Command::Kpf { alpha, oracle } => cmd_kpf(alpha, oracle),
        Command::Mult { lam, mu, method, at_one } => cmd_mult(lam, mu, method, at_one),
        Command::Altset { lam, mu } => cmd_altset(lam, mu),
        Command::Census { command } => match command {
            CensusCommand::Pipeline { stage, out } => {
                out_path = out;
                cmd_pipeline(stage)
            }
            CensusCommand::Sweep { lam_max, mu_max, out } => {
                out_path = out;
                cmd_sweep(lam_max, mu_max)
            }
            CensusCommand::Verify { fixtures, lam_max, mu_max } => {
                match cmd_verify(fixtures.as_deref(), lam_max, mu_max) {
                    Ok(r) => r,
                    Err(e) => {
                        eprintln!("error: {e}");
                        return ExitCode::from(EXIT_FIXTURE);
                    }
                }
            }
        },
    };
    let doc = document(&report, start.elapsed().as_secs_f64());
    let pretty = serde_json::to_string_pretty(&doc).expect("json values serialize");
    if let Some(path) = out_path {
        if let Err(e) = std::fs::write(&path, format!("{pretty}\n")) {
            eprintln!("error: writing {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    if cli.json {
        println!("{pretty}");
    } else {
        println!("{}", report.text);
        if let Some(note) = &report.note {
            eprintln!("note: {note}");
        }
    }
    ExitCode::from(report.exit)
}
