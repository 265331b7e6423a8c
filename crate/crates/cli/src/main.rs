use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use reeslab::bourbaki::{bourbaki_construct, ideal_rees, rees_deformation_check, BourbakiMode};
use reeslab::gallery::run_gallery_with;
use reeslab::modspec::{Loaded, ModuleSpec};
use reeslab::residual::{check_an, residual_intersection};
use reeslab::theorem::{check_theorem, Analysis, Params, Status};
use reeslab::{Error, ReesPackage, Settings};

#[derive(Parser, Debug)]
#[command(name = "reeslab", version, about = "Rees algebras of modules over polynomial rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Characteristic used when the input file does not name one (0 for the rationals).
    #[arg(long, global = true, default_value_t = 32003)]
    field: u64,
    /// Degree bound for degreewise computations (powers, oracles).
    #[arg(long = "max-degree", global = true, default_value_t = 6)]
    max_degree: usize,
    /// Maximum number of S-pairs per Gröbner computation.
    #[arg(long, global = true)]
    budget: Option<usize>,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Registry entry (required by `check`, a filter for `gallery`).
    #[arg(long, global = true)]
    theorem: Option<String>,
    /// Emit JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for `gallery`.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    /// Include wall-clock timing (makes output nondeterministic).
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Symmetric and Rees ideals of a module.
    Rees { file: PathBuf },
    /// Special fiber, analytic spread and sampled reduction number.
    Fiber { file: PathBuf },
    /// Generators, depth and projective dimension of the powers E^j, j up to --max-degree.
    Powers { file: PathBuf },
    /// Generic Bourbaki ideal and the deformation check.
    Bourbaki { file: PathBuf },
    /// Sampled s-residual intersection of an ideal and the AN_s check.
    Residual {
        file: PathBuf,
        /// Number of general elements in the link.
        #[arg(long)]
        s: usize,
    },
    /// Evaluate one registry entry.
    Check {
        file: PathBuf,
        /// k of the Cohen-Macaulay criteria (default: the sampled reduction number).
        #[arg(long)]
        k: Option<usize>,
        /// Residual index s for entries that take one.
        #[arg(long)]
        s: Option<usize>,
    },
    /// Run the registry over the built-in gallery.
    Gallery,
}

/// Failure classes with their exit codes.
enum Failure {
    Input(String),
    Hypothesis(String),
    Budget(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::Budget(_) | Error::MaxLenExceeded(_) | Error::CapExceeded(_) => Failure::Budget(e.to_string()),
            Error::Hypothesis(_) | Error::RankZero | Error::Genericity { .. } | Error::UnitIdeal(_) => {
                Failure::Hypothesis(e.to_string())
            }
            _ => Failure::Input(e.to_string()),
        }
    }
}

struct Outcome {
    value: Value,
    text: String,
    code: u8,
}

fn settings(cli: &Cli) -> Settings {
    let mut s = Settings { max_degree: cli.max_degree, ..Settings::default() };
    if let Some(b) = cli.budget {
        s.max_pairs = b;
    }
    s
}

fn load(cli: &Cli, file: &PathBuf) -> Result<Loaded, Failure> {
    let text = std::fs::read_to_string(file).map_err(|e| Failure::Input(format!("{}: {e}", file.display())))?;
    let spec = ModuleSpec::from_json(&text).map_err(|e| Failure::Input(format!("{}: {e}", file.display())))?;
    spec.load(cli.field, settings(cli)).map_err(|e| match Failure::from(e) {
        Failure::Input(m) => Failure::Input(format!("{}: {m}", file.display())),
        f => f,
    })
}

fn to_value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).unwrap()
}

fn gb(i: &reeslab::IdealData) -> Result<Vec<String>, Failure> {
    Ok(i.sorted_gb_strings()?)
}

fn list(title: &str, items: &[String]) -> String {
    let mut s = format!("{title} ({}):\n", items.len());
    for it in items {
        s.push_str(&format!("  {it}\n"));
    }
    s
}

fn rees(l: &Loaded) -> Result<Outcome, Failure> {
    let pkg = ReesPackage::new(&l.module)?;
    let sym = gb(&pkg.sym_ideal)?;
    let p = gb(&pkg.rees_ideal)?;
    let lt = pkg.is_linear_type()?;
    let vars = pkg.ambient.vars().to_vec();
    let text = format!(
        "ring: {}\n{}{}linear type: {lt}\n",
        vars.join(","),
        list("symmetric ideal L", &sym),
        list("Rees ideal P", &p)
    );
    let value = json!({
        "ambient_vars": vars,
        "symmetric_ideal": sym,
        "rees_ideal": p,
        "linear_type": lt,
        "notes": pkg.notes,
    });
    Ok(Outcome { value, text, code: 0 })
}

fn seeds(seed: u64) -> Vec<u64> {
    (0..3).map(|i| seed.wrapping_add(i)).collect()
}

fn fiber(l: &Loaded, seed: u64) -> Result<Outcome, Failure> {
    let pkg = ReesPackage::new(&l.module)?;
    let f = gb(&pkg.fiber_ideal()?)?;
    let spread = pkg.analytic_spread()?;
    let red = pkg.reduction_number(&seeds(seed))?;
    let text = format!("{}analytic spread: {spread}\nreduction number: {} (seed {})\n", list("fiber ideal", &f), red.r, red.seed);
    let value = json!({
        "fiber_ideal": f,
        "analytic_spread": spread,
        "reduction_number": red.r,
        "reduction_seed": red.seed,
        "seeds": seeds(seed),
    });
    Ok(Outcome { value, text, code: 0 })
}

fn powers(l: &Loaded, max: usize) -> Result<Outcome, Failure> {
    let pkg = ReesPackage::new(&l.module)?;
    let mut rows = Vec::new();
    let mut text = String::from("j  generators  depth  pd\n");
    for j in 1..=max {
        let m = pkg.power_module(j)?;
        let (depth, pd) = m.depth_and_pd()?;
        let mu = m.num_generators()?;
        let d = depth.map(|x| x.to_string()).unwrap_or_else(|| "-".into());
        text.push_str(&format!("{j}  {mu}  {d}  {pd}\n"));
        rows.push(json!({"j": j, "generators": mu, "depth": depth, "pd": pd}));
    }
    Ok(Outcome { value: json!({ "powers": rows }), text, code: 0 })
}

fn bourbaki(l: &Loaded, seed: u64) -> Result<Outcome, Failure> {
    let b = bourbaki_construct(&l.module, BourbakiMode::Random, seed)?;
    let ideal = match b.ideal() {
        Some(i) => Some(gb(i)?),
        None => None,
    };
    let spread = match ideal_rees(&b)? {
        Some(p) => Some(p.analytic_spread()?),
        None => None,
    };
    let d = rees_deformation_check(&b)?;
    let mut text = format!("rank: {}\nseed used: {}\n", b.rank, b.seed);
    match &ideal {
        Some(g) => text.push_str(&list("Bourbaki ideal", g)),
        None => text.push_str("Bourbaki ideal: unit (module is free)\n"),
    }
    let h = b.height.map(|x| x.to_string()).unwrap_or_else(|| "-".into());
    text.push_str(&format!(
        "height: {h}\nanalytic spread of ideal: {}\ndeformation torsion-free: {}\ncross-check: {:?}\n",
        spread.map(|x| x.to_string()).unwrap_or_else(|| "-".into()),
        d.torsion_free,
        d.cross_check
    ));
    let value = json!({
        "rank": b.rank,
        "seed_used": b.seed,
        "seeds_tried": b.seeds_tried,
        "ideal": ideal,
        "height": b.height,
        "ideal_analytic_spread": spread,
        "deformation_torsion_free": d.torsion_free,
        "cross_check": d.cross_check,
    });
    Ok(Outcome { value, text, code: 0 })
}

fn residual(l: &Loaded, s: usize, seed: u64) -> Result<Outcome, Failure> {
    let i = l.ideal.as_ref().ok_or_else(|| Failure::Input("`residual` needs an `ideal` input".into()))?;
    let r = residual_intersection(i, s, seed)?;
    let j = gb(&r.j)?;
    let k = gb(&r.k)?;
    let an = check_an(i, s, 2, seed, false)?;
    let text = format!(
        "{}{}height K: {}\nproper: {}\ngeometric: {}\nCM quotient: {}\nAN_{s}: {}\n",
        list("J", &j),
        list("K = J : I", &k),
        r.height_k.map(|x| x.to_string()).unwrap_or_else(|| "-".into()),
        r.proper,
        r.geometric,
        r.cm_quotient.map(|b| b.to_string()).unwrap_or_else(|| "-".into()),
        an.verdict
    );
    let value = json!({
        "s": s,
        "j": j,
        "k": k,
        "height_k": r.height_k,
        "proper": r.proper,
        "geometric": r.geometric,
        "cm_quotient": r.cm_quotient,
        "seed_used": r.seed,
        "an": {
            "verdict": an.verdict,
            "height": an.height,
            "vacuous": an.vacuous,
            "skipped": an.skipped,
            "samples": an.samples.iter().map(|x| json!({
                "s": x.s,
                "seed": x.seed,
                "height_k": x.height_k,
                "cm_quotient": x.cm_quotient,
            })).collect::<Vec<_>>(),
        },
    });
    Ok(Outcome { value, text, code: 0 })
}

fn status_code(s: Status) -> u8 {
    match s {
        Status::Verified => 0,
        Status::HypothesesFail => 2,
        Status::Contradiction => 3,
    }
}

fn check(cli: &Cli, l: &Loaded, k: Option<usize>, s: Option<usize>) -> Result<Outcome, Failure> {
    let id = cli.theorem.as_deref().ok_or_else(|| Failure::Input("`check` needs --theorem".into()))?;
    if reeslab::theorem::entry(id).is_none() {
        return Err(Failure::Input(format!("unknown theorem id {id}")));
    }
    let label = l.spec.label.clone().unwrap_or_else(|| "input".into());
    let a = Analysis::new(&label, &l.module, cli.seed)?;
    let rep = check_theorem(id, &a, &Params { k, s, ..Params::default() })?;
    let mut text = format!("{} on {}: {}\n", rep.theorem, rep.label, rep.status.as_str());
    for (kind, vs) in [("hypothesis", &rep.hypotheses), ("conclusion", &rep.conclusions)] {
        for v in vs.iter() {
            let mark = if v.holds { "ok  " } else { "FAIL" };
            text.push_str(&format!("  {kind} {mark} {} [{}] {}\n", v.name, v.op, v.detail));
        }
    }
    for n in &rep.notes {
        text.push_str(&format!("  note: {n}\n"));
    }
    Ok(Outcome { value: to_value(&rep), text, code: status_code(rep.status) })
}

fn gallery(cli: &Cli) -> Result<Outcome, Failure> {
    let filter: Vec<String> = cli.theorem.iter().cloned().collect();
    let rep = run_gallery_with(&filter, cli.seed, cli.jobs, &settings(cli))?;
    let mut text = String::new();
    for r in &rep.reports {
        text.push_str(&format!("{:14} {:48} {}\n", r.theorem, r.label, r.status.as_str()));
    }
    for e in &rep.errors {
        text.push_str(&format!("{:14} {:48} error: {}\n", e.theorem, e.label, e.error));
    }
    text.push_str(&format!(
        "modules {}, verified {}, hypotheses-fail {}, CONTRADICTION {}, errors {}\n",
        rep.modules,
        rep.verified,
        rep.hypotheses_fail,
        rep.contradictions,
        rep.errors.len()
    ));
    let code = if rep.contradictions > 0 {
        3
    } else if rep.errors.iter().any(|e| e.error.starts_with("budget")) {
        4
    } else {
        0
    };
    Ok(Outcome { value: to_value(&rep), text, code })
}

fn run(cli: &Cli) -> Result<(Outcome, Option<Value>, Option<reeslab::StatsSnapshot>), Failure> {
    let single = |file: &PathBuf| load(cli, file);
    let (out, l) = match &cli.command {
        Command::Rees { file } => {
            let l = single(file)?;
            (rees(&l)?, Some(l))
        }
        Command::Fiber { file } => {
            let l = single(file)?;
            (fiber(&l, cli.seed)?, Some(l))
        }
        Command::Powers { file } => {
            let l = single(file)?;
            (powers(&l, cli.max_degree)?, Some(l))
        }
        Command::Bourbaki { file } => {
            let l = single(file)?;
            (bourbaki(&l, cli.seed)?, Some(l))
        }
        Command::Residual { file, s } => {
            let l = single(file)?;
            (residual(&l, *s, cli.seed)?, Some(l))
        }
        Command::Check { file, k, s } => {
            let l = single(file)?;
            (check(cli, &l, *k, *s)?, Some(l))
        }
        Command::Gallery => (gallery(cli)?, None),
    };
    let echo = l.as_ref().map(|l| to_value(&ModuleSpec::from_module(&l.module, l.spec.label.clone())));
    let stats = l.as_ref().map(|l| l.ring.context().snapshot());
    Ok((out, echo, stats))
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Rees { .. } => "rees",
        Command::Fiber { .. } => "fiber",
        Command::Powers { .. } => "powers",
        Command::Bourbaki { .. } => "bourbaki",
        Command::Residual { .. } => "residual",
        Command::Check { .. } => "check",
        Command::Gallery => "gallery",
    }
}

fn emit(cli: &Cli, body: &str) -> Result<(), String> {
    match &cli.out {
        Some(p) => std::fs::write(p, body).map_err(|e| format!("{}: {e}", p.display())),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let start = Instant::now();
    let result = run(&cli);
    let elapsed = start.elapsed();
    let (code, body) = match result {
        Ok((out, echo, stats)) => {
            let body = if cli.json {
                let mut report = json!({
                    "tool": "reeslab",
                    "version": env!("CARGO_PKG_VERSION"),
                    "command": command_name(&cli.command),
                    "seed": cli.seed,
                });
                let obj = report.as_object_mut().unwrap();
                if let Some(e) = echo {
                    obj.insert("module".into(), e);
                }
                obj.insert("result".into(), out.value);
                if let Some(s) = stats {
                    obj.insert("counters".into(), to_value(&s));
                }
                if cli.timing {
                    obj.insert("timing_ms".into(), json!(elapsed.as_millis() as u64));
                }
                serde_json::to_string_pretty(&report).unwrap() + "\n"
            } else {
                let mut t = out.text;
                if cli.timing {
                    t.push_str(&format!("time: {} ms\n", elapsed.as_millis()));
                }
                t
            };
            (out.code, body)
        }
        Err(f) => {
            let (code, kind, msg) = match f {
                Failure::Input(m) => (1, "input", m),
                Failure::Hypothesis(m) => (2, "hypothesis", m),
                Failure::Budget(m) => (4, "budget", m),
            };
            eprintln!("error: {msg}");
            let body = if cli.json {
                serde_json::to_string_pretty(&json!({"error": kind, "message": msg})).unwrap() + "\n"
            } else {
                String::new()
            };
            (code, body)
        }
    };
    if let Err(m) = emit(&cli, &body) {
        eprintln!("error: {m}");
        return ExitCode::from(1);
    }
    ExitCode::from(code)
}
