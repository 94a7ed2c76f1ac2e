//! `rothe-lab`: enumerate graded words, apply the bijections, and run
//! identity sweeps from the command line.
//!
//! Exit codes: 0 when everything checked passes, 1 on a mathematical
//! failure (counterexample, broken bijection), 2 on usage or configuration
//! errors including cap breaches.

use std::collections::HashSet;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rothe_lab::bijection::{self, Decomposition};
use rothe_lab::identity::{self, GridOffsets};
use rothe_lab::rational::parse_rational;
use rothe_lab::sweep::{self, ParamSpec, SweepConfig};
use rothe_lab::word::{self, binomial_count, gamma_length, EnumerationCap, Grading, Word};
use rothe_lab::{Error, IdentityId};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "rothe-lab",
    version,
    about = "Graded binary words and the Rothe/Gould identities"
)]
struct Cli {
    /// Output encoding.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Work cap in elementary evaluations (overrides ROTHE_LAB_CAP).
    #[arg(long, global = true)]
    cap: Option<u128>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// List Γ_{p,k}, or Γ^{(r)}_{p,k} with --prefix-weight.
    Enumerate {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        m: u64,
        /// Keep only words with a prefix of this weight.
        #[arg(long = "prefix-weight")]
        prefix_weight: Option<u64>,
    },
    /// Apply the prefix-shift (theorem1) or factorization bijection.
    Bijection(BijectionArgs),
    /// Check an identity over a parameter sweep.
    Verify(VerifyArgs),
    /// Certify rothe1, rothe2 or gould as a polynomial identity.
    GridProve {
        #[arg(long)]
        identity: String,
        #[arg(long)]
        n: i64,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        x0: String,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        y0: String,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        z0: String,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        eps0: String,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BijectionKind {
    Theorem1,
    Factorize,
}

#[derive(Args)]
struct BijectionArgs {
    #[arg(value_enum)]
    kind: BijectionKind,
    #[arg(long)]
    p: u64,
    #[arg(long)]
    q: u64,
    #[arg(long)]
    m: u64,
    #[arg(long)]
    n: u64,
    /// Single input word.
    #[arg(long, conflicts_with = "all", required_unless_present = "all")]
    word: Option<String>,
    /// Apply to the whole domain and verify bijectivity.
    #[arg(long)]
    all: bool,
    /// Run the inverse map.
    #[arg(long)]
    inverse: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    identity: String,
    #[arg(long, allow_hyphen_values = true)]
    x: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    y: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    z: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    eps: Option<String>,
    #[arg(long)]
    n: Option<String>,
    #[arg(long)]
    p: Option<String>,
    #[arg(long)]
    q: Option<String>,
    #[arg(long)]
    m: Option<String>,
    #[arg(long)]
    k: Option<String>,
    #[arg(long)]
    j: Option<String>,
    /// Stop at the first failing tuple.
    #[arg(long)]
    fail_fast: bool,
}

/// Why a command stopped. `Usage` maps to exit 2, `Failed` to exit 1.
enum Stop {
    Usage(String),
    Failed,
}

impl From<Error> for Stop {
    fn from(e: Error) -> Self {
        match e {
            Error::InvariantViolation(_) => {
                eprintln!("error: {e}");
                Stop::Failed
            }
            other => Stop::Usage(other.to_string()),
        }
    }
}

struct Ctx {
    format: Format,
    work_cap: u128,
}

impl Ctx {
    fn json(&self) -> bool {
        self.format == Format::Json
    }

    fn check_work(&self, estimate: u128) -> Result<(), Stop> {
        if estimate > self.work_cap {
            Err(Error::WorkCapExceeded {
                estimate,
                cap: self.work_cap,
            }
            .into())
        } else {
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let work_cap = match cli.cap.map(Ok).unwrap_or_else(sweep::work_cap_from_env) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let ctx = Ctx {
        format: cli.format,
        work_cap,
    };
    let result = match cli.command {
        Command::Enumerate {
            p,
            k,
            m,
            prefix_weight,
        } => enumerate(&ctx, p, k, m, prefix_weight),
        Command::Bijection(args) => run_bijection(&ctx, &args),
        Command::Verify(args) => verify(&ctx, &args),
        Command::GridProve {
            identity,
            n,
            x0,
            y0,
            z0,
            eps0,
        } => grid_prove(&ctx, &identity, n, [&x0, &y0, &z0, &eps0]),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Stop::Failed) => ExitCode::from(1),
        Err(Stop::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn class_size(p: u64, k: u64, g: Grading) -> u128 {
    gamma_length(p, k, g)
        .map(|len| binomial_count(len as i64, k as i64))
        .unwrap_or(0)
}

fn enumerate(ctx: &Ctx, p: u64, k: u64, m: u64, prefix: Option<u64>) -> Result<(), Stop> {
    let g = Grading::new(m);
    ctx.check_work(class_size(p, k, g))?;
    let class = word::enumerate_gamma(p, k, g)?;
    let predicted = binomial_count(p as i64 - (k * m) as i64, k as i64);
    let listed: Vec<&Word> = match prefix {
        Some(r) => class
            .iter()
            .filter(|w| w.has_prefix_of_weight(r, g))
            .collect(),
        None => class.iter().collect(),
    };
    for w in &listed {
        if ctx.json() {
            let mut obj = w.to_json(g);
            obj["inversions"] = json!(w.inversions());
            println!("{obj}");
        } else {
            println!(
                "{}\tweight={}\tinv={}",
                w.to_human(),
                w.weight(g),
                w.inversions()
            );
        }
    }
    let binom = format!("C({},{k})", p as i64 - (k * m) as i64);
    match (ctx.json(), prefix) {
        (true, None) => println!(
            "{}",
            json!({"count": listed.len(), "predicted": predicted.to_string()})
        ),
        (true, Some(r)) => println!(
            "{}",
            json!({"count": listed.len(), "prefix_weight": r, "class_count": class.len(), "predicted": predicted.to_string()})
        ),
        (false, None) => println!("count {} = {binom} = {predicted}", listed.len()),
        (false, Some(_)) => println!(
            "count {} (of |Γ_{{{p},{k}}}| = {} = {binom})",
            listed.len(),
            class.len()
        ),
    }
    if class.len() as u128 != predicted {
        eprintln!(
            "class size {} disagrees with {binom} = {predicted}",
            class.len()
        );
        return Err(Stop::Failed);
    }
    Ok(())
}

fn parse_word(s: &str, n: u64) -> Result<Word, Stop> {
    let w: Word = s.parse()?;
    if w.b_count() as u64 != n {
        return Err(Stop::Usage(format!(
            "word {s:?} has {} b's, but --n is {n}",
            w.b_count()
        )));
    }
    Ok(w)
}

fn run_bijection(ctx: &Ctx, a: &BijectionArgs) -> Result<(), Stop> {
    let g = Grading::new(a.m);
    let total = a.p + a.q + a.m * a.n;
    ctx.check_work(class_size(total, a.n, g) * 2)?;
    match a.kind {
        BijectionKind::Theorem1 => theorem1(ctx, a, g),
        BijectionKind::Factorize => factorize(ctx, a, g),
    }
}

fn print_pair(
    ctx: &Ctx,
    a: &BijectionArgs,
    input: &Word,
    output: &str,
    output_json: serde_json::Value,
) {
    if ctx.json() {
        println!(
            "{}",
            json!({"input": input.to_string(), "output": output_json, "p": a.p, "q": a.q, "m": a.m, "n": a.n})
        );
    } else {
        println!("{} → {output}", input.to_human());
    }
}

fn report_bijection(ctx: &Ctx, pairs: usize, problem: Option<String>) -> Result<(), Stop> {
    match (&problem, ctx.json()) {
        (None, true) => println!("{}", json!({"bijection": "ok", "pairs": pairs})),
        (None, false) => println!("BIJECTION OK ({pairs} pairs)"),
        (Some(why), true) => println!(
            "{}",
            json!({"bijection": "failed", "pairs": pairs, "reason": why})
        ),
        (Some(why), false) => println!("BIJECTION FAILED: {why}"),
    }
    if problem.is_some() {
        Err(Stop::Failed)
    } else {
        Ok(())
    }
}

fn theorem1(ctx: &Ctx, a: &BijectionArgs, g: Grading) -> Result<(), Stop> {
    let apply = |w: &Word| {
        if a.inverse {
            bijection::theorem1_inverse(w, a.p, a.q, g)
        } else {
            bijection::theorem1_forward(w, a.p, a.q, g)
        }
    };
    if let Some(s) = &a.word {
        let w = parse_word(s, a.n)?;
        let out = apply(&w)?;
        print_pair(ctx, a, &w, &out.to_human(), json!(out.to_string()));
        return Ok(());
    }
    if a.p < a.m * a.n || a.q < 1 {
        return Err(Stop::Usage(format!(
            "need p ≥ mn and q ≥ 1, got p={}, q={}",
            a.p, a.q
        )));
    }
    let cap = EnumerationCap::default();
    let (domain, codomain) = if a.inverse {
        (
            bijection::theorem1_codomain(a.p, a.q, a.n, g, cap)?,
            bijection::theorem1_domain(a.p, a.q, a.n, g, cap)?,
        )
    } else {
        (
            bijection::theorem1_domain(a.p, a.q, a.n, g, cap)?,
            bijection::theorem1_codomain(a.p, a.q, a.n, g, cap)?,
        )
    };
    let target: HashSet<&Word> = codomain.iter().collect();
    let mut images = HashSet::new();
    let mut problem = None;
    for w in &domain {
        let out = apply(w)?;
        print_pair(ctx, a, w, &out.to_human(), json!(out.to_string()));
        if !target.contains(&out) {
            problem.get_or_insert(format!("{} maps outside the codomain", w.to_human()));
        }
        if !images.insert(out.clone()) {
            problem.get_or_insert(format!("{} is hit twice", out.to_human()));
        }
    }
    if domain.len() != codomain.len() {
        problem.get_or_insert(format!(
            "domain has {} words, codomain {}",
            domain.len(),
            codomain.len()
        ));
    }
    report_bijection(ctx, domain.len(), problem)
}

fn factorize(ctx: &Ctx, a: &BijectionArgs, g: Grading) -> Result<(), Stop> {
    let (p, q, n) = (a.p, a.q, a.n);
    let cap = EnumerationCap::default();
    if let Some(s) = &a.word {
        if a.inverse {
            return Err(Stop::Usage(
                "--inverse with --word is only supported for theorem1".into(),
            ));
        }
        let w = parse_word(s, n)?;
        let d = bijection::decompose(&w, p, q, g)?;
        print_pair(ctx, a, &w, &d.to_string(), d.to_json());
        return Ok(());
    }
    if p < a.m * n || q < 1 {
        return Err(Stop::Usage(format!(
            "need p ≥ mn and q ≥ 1, got p={p}, q={q}"
        )));
    }
    let words = word::enumerate_gamma(p + q + a.m * n, n, g)?;
    let mut problem = None;
    if a.inverse {
        let mut sources: Vec<Decomposition> = bijection::theorem1_domain(p, q, n, g, cap)?
            .into_iter()
            .map(|w| Decomposition::BranchA { w })
            .collect();
        sources.extend(bijection::enumerate_branch_b(p, q, n, g, cap)?);
        let target: HashSet<&Word> = words.iter().collect();
        let mut images = HashSet::new();
        for d in &sources {
            let w = bijection::compose(d, p, q, g)?;
            if ctx.json() {
                println!(
                    "{}",
                    json!({"input": d.to_json(), "output": w.to_string(), "p": p, "q": q, "m": a.m, "n": n})
                );
            } else {
                println!("{d} → {}", w.to_human());
            }
            if !target.contains(&w) || !images.insert(w.clone()) {
                problem.get_or_insert(format!("{d} is not injective onto Γ"));
            }
        }
        if sources.len() != words.len() {
            problem.get_or_insert(format!(
                "{} tuples for {} words",
                sources.len(),
                words.len()
            ));
        }
        return report_bijection(ctx, sources.len(), problem);
    }
    let mut seen = HashSet::new();
    for w in &words {
        let d = bijection::decompose(w, p, q, g)?;
        print_pair(ctx, a, w, &d.to_string(), d.to_json());
        if bijection::compose(&d, p, q, g).ok().as_ref() != Some(w) {
            problem.get_or_insert(format!("{} does not compose back", w.to_human()));
        }
        if !seen.insert(d.clone()) {
            problem.get_or_insert(format!("{d} is hit twice"));
        }
    }
    let branch_a = seen
        .iter()
        .filter(|d| matches!(d, Decomposition::BranchA { .. }))
        .count();
    let expected_b = bijection::enumerate_branch_b(p, q, n, g, cap)?;
    if branch_a + expected_b.len() != words.len() || !expected_b.iter().all(|d| seen.contains(d)) {
        problem.get_or_insert("branch B tuples are not all hit".to_string());
    }
    report_bijection(ctx, words.len(), problem)
}

fn verify(ctx: &Ctx, a: &VerifyArgs) -> Result<(), Stop> {
    let id: IdentityId = a.identity.parse()?;
    let mut cfg = SweepConfig::new(id);
    cfg.work_cap = ctx.work_cap;
    cfg.fail_fast = a.fail_fast;
    let given = [
        ("x", &a.x),
        ("y", &a.y),
        ("z", &a.z),
        ("eps", &a.eps),
        ("n", &a.n),
        ("p", &a.p),
        ("q", &a.q),
        ("m", &a.m),
        ("k", &a.k),
        ("j", &a.j),
    ];
    for (name, value) in given {
        if let Some(v) = value {
            cfg = cfg.param(name, v.parse::<ParamSpec>()?);
        }
    }
    let outcome = sweep::run(&cfg)?;
    for r in &outcome.reports {
        if ctx.json() {
            println!("{}", r.to_json());
        } else {
            println!("{r}");
        }
    }
    if ctx.json() {
        println!(
            "{}",
            json!({"summary": {"checked": outcome.checked(), "failed": outcome.failed(), "skipped": outcome.skipped}})
        );
    } else {
        println!("{}", outcome.summary());
    }
    if outcome.all_passed() {
        Ok(())
    } else {
        Err(Stop::Failed)
    }
}

fn grid_prove(ctx: &Ctx, identity_name: &str, n: i64, starts: [&String; 4]) -> Result<(), Stop> {
    let id: IdentityId = identity_name.parse()?;
    let points = identity::grid_size(id, n)?;
    ctx.check_work(points * (n as u128 + 1) * (n as u128 + 1))?;
    let [x, y, z, eps] = starts.map(|s| parse_rational(s));
    let offsets = GridOffsets {
        x: x?,
        y: y?,
        z: z?,
        eps: eps?,
    };
    let rep = identity::grid_prove(id, n, &offsets)?;
    if ctx.json() {
        println!("{}", rep.to_json());
    } else if rep.passed() {
        println!("CERTIFIED as polynomial identity for n={n} ({points} grid points)");
    } else {
        println!("{rep}");
    }
    if rep.passed() {
        Ok(())
    } else {
        Err(Stop::Failed)
    }
}
