use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use rixperm::bench::{bench_size, BenchPoint};
use rixperm::homomesy::{
    basic_eulerian, builtin_statistics, eulerian_polynomial, gamma_expansion, orbit_report,
    statistic, HomomesyReport, OrbitReport, Verdict,
};
use rixperm::perm::to_canonical_cycles;
use rixperm::*;

mod suites;

const DEFAULT_N: usize = 7;
const MAX_N: usize = 9;
const DEFAULT_SEED: u64 = 42;

#[derive(Parser)]
#[command(
    name = "rixperm",
    version,
    about = "Rixed points, hopping actions and Φ on permutations"
)]
struct Cli {
    /// Emit JSON records (ASCII only) instead of text.
    #[arg(long, global = true)]
    machine: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct PermArg {
    /// One-line ("3 1 2" or "3,1,2") or cycle form ("(3,2)(1)").
    perm: String,
}

#[derive(Subcommand)]
enum Command {
    /// Descents, excedances, fixed points, letter classes and rixed points.
    Stats(PermArg),
    /// Rix-factorization and Rix.
    Factorize(PermArg),
    /// Maximal descending ridge.
    Ridge(PermArg),
    /// Apply an action to a set of letters.
    Hop {
        #[arg(long)]
        action: ActionKind,
        #[arg(long, value_delimiter = ',', required = true)]
        set: Vec<Letter>,
        #[command(flatten)]
        perm: PermArg,
    },
    /// Orbit of a permutation, optionally with a statistic's values.
    Orbit {
        #[arg(long)]
        action: ActionKind,
        #[arg(long)]
        stat: Option<String>,
        #[command(flatten)]
        perm: PermArg,
    },
    /// The bijection Φ, with both cycle orders.
    Phi(PermArg),
    /// Recover π from Φ(π).
    PhiInverse(PermArg),
    /// Foata transform: erase the parentheses of the canonical cycles.
    Foata(PermArg),
    /// Inverse Foata transform: split at left-to-right maxima.
    FoataInverse(PermArg),
    /// Exhaustive verification up to --n.
    Verify {
        #[arg(long, default_value_t = DEFAULT_N)]
        n: usize,
        #[arg(long, default_value = "all", value_parser = suite_name)]
        suite: &'static str,
    },
    /// Eulerian polynomial, its γ-vector and the (t, r, q) refinement.
    Eulerian {
        #[arg(long, default_value_t = DEFAULT_N)]
        n: usize,
    },
    /// Time the iterative factorization on seeded random permutations.
    Bench {
        #[arg(long, default_value_t = 1_000_000)]
        n: usize,
        #[arg(long, default_value_t = 5)]
        trials: usize,
        /// Required with --machine.
        #[arg(long)]
        seed: Option<u64>,
    },
}

fn suite_name(s: &str) -> Result<&'static str, String> {
    if s == "all" {
        return Ok("all");
    }
    suites::SUITES
        .iter()
        .find(|&&name| name == s)
        .copied()
        .ok_or_else(|| {
            format!(
                "unknown suite `{s}` (expected all, {})",
                suites::SUITES.join(", ")
            )
        })
}

/// A failure and the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if !f.message.is_empty() {
                eprintln!("error: {}", f.message);
            }
            ExitCode::from(f.code)
        }
    }
}

/// serde_json leaves non-ASCII characters raw; machine output escapes them.
fn ascii_json<T: Serialize>(value: &T) -> String {
    let raw = serde_json::to_string(value).expect("records serialize");
    let mut out = String::with_capacity(raw.len());
    for c in raw.chars() {
        if c.is_ascii() {
            out.push(c);
        } else {
            let mut buf = [0u16; 2];
            for unit in c.encode_utf16(&mut buf) {
                out.push_str(&format!("\\u{unit:04x}"));
            }
        }
    }
    out
}

fn emit<T: Serialize>(value: &T) {
    println!("{}", ascii_json(value));
}

fn set_string(xs: &[Letter]) -> String {
    let inner: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", inner.join(", "))
}

fn check_bound(n: usize) -> Result<(), Failure> {
    if n > MAX_N {
        Err(usage(format!("--n {n} exceeds the cap of {MAX_N}")))
    } else {
        Ok(())
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let machine = cli.machine;
    match &cli.command {
        Command::Stats(a) => cmd_stats(&parse_permutation(&a.perm)?, machine),
        Command::Factorize(a) => {
            let f = rix_factorize_iterative(&parse_permutation(&a.perm)?);
            if machine {
                emit(&f);
            } else {
                println!("{f}");
                println!("Rix = {}", set_string(&f.rix_set));
            }
            Ok(())
        }
        Command::Ridge(a) => {
            let r = maximal_descending_ridge(&parse_permutation(&a.perm)?);
            if machine {
                emit(&json!({ "ridge": r.prefix }));
            } else {
                println!("{r}");
            }
            Ok(())
        }
        Command::Hop { action, set, perm } => {
            let q = hop_set(&parse_permutation(&perm.perm)?, set, *action)?;
            if machine {
                emit(&q);
            } else {
                println!("{q}");
            }
            Ok(())
        }
        Command::Orbit { action, stat, perm } => cmd_orbit(
            &parse_permutation(&perm.perm)?,
            *action,
            stat.as_deref(),
            machine,
        ),
        Command::Phi(a) => cmd_phi(&parse_permutation(&a.perm)?, machine),
        Command::PhiInverse(a) => {
            let p = phi_inverse(&parse_permutation(&a.perm)?)?;
            print_perm(&p, machine);
            Ok(())
        }
        Command::Foata(a) => {
            print_perm(&foata(&parse_permutation(&a.perm)?), machine);
            Ok(())
        }
        Command::FoataInverse(a) => {
            print_perm(&foata_inverse(&parse_permutation(&a.perm)?), machine);
            Ok(())
        }
        Command::Verify { n, suite } => cmd_verify(*n, suite, machine),
        Command::Eulerian { n } => cmd_eulerian(*n, machine),
        Command::Bench { n, trials, seed } => cmd_bench(*n, *trials, *seed, machine),
    }
}

fn print_perm(p: &Permutation, machine: bool) {
    if machine {
        emit(p);
    } else {
        println!("{p}");
    }
}

fn cmd_stats(p: &Permutation, machine: bool) -> Result<(), Failure> {
    let s = stats(p);
    let f = rix_factorize_iterative(p);
    if machine {
        let classes: Vec<Value> = classify(p)
            .into_iter()
            .map(|(x, c)| json!({ "letter": x, "class": c.name() }))
            .collect();
        emit(&json!({
            "des": s.des, "exc": s.exc, "fix": s.fix, "Fix": s.fix_set,
            "maj": s.maj, "pk": s.pk, "dbl": s.dbl,
            "rix": f.rix(), "Rix": f.rix_set, "beta1": f.beta1,
            "classes": classes,
        }));
        return Ok(());
    }
    println!("des = {}", s.des);
    println!("exc = {}", s.exc);
    println!("fix = {}", s.fix);
    println!("Fix = {}", set_string(&s.fix_set));
    println!("maj = {}", s.maj);
    println!("pk = {}", s.pk);
    println!("dbl = {}", s.dbl);
    println!("rix = {}", f.rix());
    println!("Rix = {}", set_string(&f.rix_set));
    if let Some(b) = f.beta1 {
        println!("beta1 = {b}");
    }
    for (x, c) in classify(p) {
        println!("{x}: {}", c.name());
    }
    Ok(())
}

fn orbit_record(r: &OrbitReport, statistic: &str, n: usize) -> Value {
    json!({
        "type": "orbit",
        "action": r.orbit.kind,
        "statistic": statistic,
        "n": n,
        "representative": r.orbit.base(),
        "size": r.orbit.len(),
        "values": r.values,
        "average": r.average.to_string(),
    })
}

fn cmd_orbit(
    p: &Permutation,
    kind: ActionKind,
    stat: Option<&str>,
    machine: bool,
) -> Result<(), Failure> {
    let o = orbit(p, kind);
    let Some(name) = stat else {
        if machine {
            emit(
                &json!({ "action": kind, "representative": o.base(), "size": o.len(), "elements": o.elements }),
            );
        } else {
            for q in &o.elements {
                println!("{q}");
            }
            println!("size = {}", o.len());
        }
        return Ok(());
    };
    let st = statistic(name).ok_or_else(|| {
        let names: Vec<&str> = builtin_statistics().iter().map(|s| s.name()).collect();
        usage(format!(
            "unknown statistic `{name}` (expected one of {})",
            names.join(", ")
        ))
    })?;
    let r = orbit_report(o, &st)?;
    if machine {
        emit(&orbit_record(&r, name, p.len()));
    } else {
        for (q, v) in r.orbit.elements.iter().zip(&r.values) {
            println!("{q}  {name} = {v}");
        }
        println!("size = {}", r.orbit.len());
        println!("average = {}", r.average);
    }
    Ok(())
}

fn cmd_phi(p: &Permutation, machine: bool) -> Result<(), Failure> {
    let d = phi_cycles(p);
    let image = d.to_permutation();
    if machine {
        emit(&json!({
            "cycles": d.lin_zeng_order().cycles,
            "canonical": d.canonical_rearrangement().cycles,
            "mu_blocks": d.mu_blocks,
            "image": image,
        }));
        return Ok(());
    }
    debug_assert_eq!(d.canonical_rearrangement(), to_canonical_cycles(&image));
    println!("cycles:    {}", d.lin_zeng_order());
    println!("canonical: {}", d.canonical_rearrangement());
    for (i, block) in d.mu_blocks.iter().enumerate().rev() {
        let cycles: String = block.iter().map(|x| format!("({x})")).collect();
        println!(
            "μ_{i} = {}",
            if cycles.is_empty() {
                "∅".into()
            } else {
                cycles
            }
        );
    }
    println!("one-line:  {image}");
    Ok(())
}

fn summary_record(r: &HomomesyReport) -> Value {
    let mut rec = json!({
        "type": "summary",
        "action": r.action,
        "statistic": r.statistic,
        "n": r.n,
    });
    match &r.verdict {
        Verdict::Homomesic { constant } => {
            rec["verdict"] = "homomesic".into();
            rec["constant"] = constant.to_string().into();
        }
        Verdict::Counterexample { first, second } => {
            rec["verdict"] = "counterexample".into();
            rec["counterexample"] = json!([
                { "representative": first.0, "average": first.1.to_string() },
                { "representative": second.0, "average": second.1.to_string() },
            ]);
        }
    }
    rec
}

fn cmd_verify(n: usize, suite: &'static str, machine: bool) -> Result<(), Failure> {
    check_bound(n)?;
    let names: Vec<&'static str> = if suite == "all" {
        suites::SUITES.to_vec()
    } else {
        vec![suite]
    };
    let mut failed = 0;
    for name in names {
        let out = suites::run(name, n);
        failed += usize::from(!out.passed);
        if machine {
            for r in &out.homomesy {
                for o in &r.orbits {
                    emit(&orbit_record(o, r.statistic, r.n));
                }
                emit(&summary_record(r));
            }
            emit(&json!({
                "type": "suite",
                "suite": out.suite,
                "n": out.n,
                "passed": out.passed,
                "detail": out.detail,
            }));
        } else {
            let verdict = if out.passed { "PASS" } else { "FAIL" };
            println!("{verdict} {} (n <= {}): {}", out.suite, out.n, out.detail);
        }
    }
    if failed == 0 {
        Ok(())
    } else {
        Err(Failure {
            code: 1,
            message: format!("{failed} suite(s) failed"),
        })
    }
}

fn cmd_eulerian(n: usize, machine: bool) -> Result<(), Failure> {
    check_bound(n)?;
    if n == 0 {
        return Err(usage("--n must be at least 1"));
    }
    let a = eulerian_polynomial(n);
    let gamma = gamma_expansion(&a, n)?;
    let basic = basic_eulerian(n);
    if machine {
        let terms: Vec<Value> = basic
            .terms
            .iter()
            .map(|(m, c)| json!({ "t": m.t, "r": m.r, "q": m.q, "coeff": c }))
            .collect();
        emit(&json!({ "n": n, "eulerian": a, "gamma": gamma, "basic": terms }));
    } else {
        println!("A_{n}(t) = {a}");
        println!("gamma = {gamma:?}");
        println!("A_{n}(t, r, q) = {basic}");
    }
    Ok(())
}

fn cmd_bench(n: usize, trials: usize, seed: Option<u64>, machine: bool) -> Result<(), Failure> {
    if machine && seed.is_none() {
        return Err(usage("--seed is required with --machine"));
    }
    if n == 0 || trials == 0 {
        return Err(usage("--n and --trials must be positive"));
    }
    let seed = seed.unwrap_or(DEFAULT_SEED);
    let base = bench_size(n, trials, seed);
    let doubled = bench_size(2 * n, trials, seed);
    let ratio = doubled.mean_secs / base.mean_secs;
    if machine {
        #[derive(Serialize)]
        struct Record<'a> {
            seed: u64,
            points: [&'a BenchPoint; 2],
            ratio: f64,
        }
        emit(&Record {
            seed,
            points: [&base, &doubled],
            ratio,
        });
        return Ok(());
    }
    for pt in [&base, &doubled] {
        for (i, t) in pt.secs.iter().enumerate() {
            println!(
                "n = {}  trial {}  seed {}  {:.6} s  rix = {}",
                pt.n,
                i + 1,
                seed + i as u64,
                t,
                pt.rix[i]
            );
        }
        println!("n = {}  mean {:.6} s", pt.n, pt.mean_secs);
    }
    println!("t(2n)/t(n) = {ratio:.3}");
    Ok(())
}
