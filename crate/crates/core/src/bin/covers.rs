//! `covers`: verify covering bounds for residue-class and coset systems.
//!
//! Exit codes: 0 all checks pass, 1 a checked inequality failed, 2 bad input
//! or unmet precondition, 3 capacity guard.

use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use coset_covers::abgroup::{
    build_cp_cp_cover, check_coset_cover_bounds, check_gao_geroldinger, check_subgroup_restriction,
    partition_cover, subgroup_from_generators, AbelianGroup, CosetSystem, GroupElement, Subgroup,
};
use coset_covers::arith::{factorize, mycielski_f};
use coset_covers::characters::verify_divisibility;
use coset_covers::cyclotomic::{criterion, minimal_k, OrderMultiset};
use coset_covers::io::{coset_system_to_json, coset_to_json, load_system, parse_elements, zcover_to_json, LoadedSystem};
use coset_covers::search::{
    min_multiset_for_divisibility, min_proper_coset_cover, sweep, verify_bounds_exhaustively, ExhaustiveReport,
    SearchConfig,
};
use coset_covers::zcover::{as_cyclic_cosets, build_extremal_zcover, check_residue_cover_bounds, ZCoverSystem};
use coset_covers::{BoundReport, Error, Result};

/// Base points listed individually in reports; further points are only counted.
const DETAIL_LIMIT: usize = 64;

#[derive(Parser)]
#[command(name = "covers", version, about = "Exact checks for covers of groups by cosets")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Verb {
    /// Print f(n) = sum of ord_p(n)(p - 1).
    Mycielski { n: u64 },
    /// Check a residue-class system read from a JSON file ("-" for stdin).
    VerifyZ {
        input: String,
        #[arg(long)]
        m: Option<u32>,
        #[arg(long, allow_hyphen_values = true)]
        a: Option<i64>,
    },
    /// Check a coset system of a finite abelian group.
    VerifyGroup {
        input: String,
        #[arg(long)]
        m: Option<u32>,
        /// Base point, comma-separated coordinates.
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        /// Generators of a subgroup K, e.g. "1,0;0,2".
        #[arg(long = "K", allow_hyphen_values = true)]
        k_gens: Option<String>,
    },
    /// Does n divide the product of (1 - z) over roots of unity of the given orders?
    Divides { n: u64, orders: Vec<u64> },
    /// Least number of roots of unity whose product of (1 - z) is divisible by n.
    MinimalK { n: u64 },
    /// Emit a system as JSON.
    Construct {
        #[command(subcommand)]
        what: Construction,
    },
    /// Exhaustive searches over small groups.
    Search {
        #[command(subcommand)]
        what: SearchKind,
    },
    /// Run the character-sum divisibility argument on a cover.
    Characters {
        input: String,
        #[arg(long)]
        m: Option<u32>,
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
    },
}

#[derive(Subcommand)]
enum Construction {
    /// Exact m-cover of Z with k = m + f(2^(k-m)).
    ExtremalZ { k: u32, m: u32 },
    /// The p + 1 subgroups of order p covering C_p x C_p.
    Cpcp { p: u64 },
    /// All cosets of a subgroup (trivial unless --K is given).
    Partition {
        #[arg(required = true)]
        orders: Vec<u64>,
        #[arg(long = "K", allow_hyphen_values = true)]
        k_gens: Option<String>,
    },
}

#[derive(Subcommand)]
enum SearchKind {
    /// Check the bounds on every m-cover by at most max-k cosets of one group.
    Exhaustive {
        #[arg(long, value_delimiter = ',', required = true)]
        orders: Vec<u64>,
        #[arg(long, default_value_t = 4)]
        max_k: usize,
        #[arg(long, default_value_t = 1)]
        m: u32,
        /// Only cosets missing the identity.
        #[arg(long)]
        proper: bool,
        /// Examine one system per symmetry orbit.
        #[arg(long)]
        dedup: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Exhaustive checks over all groups of order up to max-order.
    Sweep {
        #[arg(long, default_value_t = 12)]
        max_order: u64,
        #[arg(long, default_value_t = 4)]
        max_k: usize,
        #[arg(long, default_value_t = 4)]
        max_m: u32,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Fewest proper cosets covering every non-identity element.
    MinCover {
        #[arg(required = true)]
        orders: Vec<u64>,
    },
    /// Brute-force minimum for the root-of-unity divisibility problem.
    MinDivisibility { n: u64 },
}

/// What a verb produced: a human rendering, a JSON rendering, and whether
/// every checked inequality held.
struct Outcome {
    text: String,
    json: Value,
    passed: bool,
}

impl Outcome {
    fn ok(text: String, json: Value) -> Self {
        Outcome { text, json, passed: true }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.verb) {
        Ok(out) => {
            match cli.format {
                Format::Text => print!("{}", with_newline(out.text)),
                Format::Json => println!("{}", serde_json::to_string_pretty(&out.json).expect("json")),
            }
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Capacity(_) => 3,
                _ => 2,
            })
        }
    }
}

fn with_newline(mut s: String) -> String {
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

fn run(verb: Verb) -> Result<Outcome> {
    match verb {
        Verb::Mycielski { n } => {
            let f = mycielski_f(n)?;
            Ok(Outcome::ok(format!("f({n}) = {f}"), json!({"n": n, "f": f})))
        }
        Verb::Divides { n, orders } => divides(n, orders),
        Verb::MinimalK { n } => {
            let (k, cert) = minimal_k(n)?;
            Ok(Outcome::ok(
                format!("f({n}) = {k}\ncertificate: {cert}"),
                json!({"n": n, "k": k, "certificate": cert.orders()}),
            ))
        }
        Verb::VerifyZ { input, m, a } => verify_z(&input, m, a),
        Verb::VerifyGroup { input, m, a, k_gens } => verify_group(&input, m, a, k_gens),
        Verb::Characters { input, m, a } => characters(&input, m, a),
        Verb::Construct { what } => construct(what),
        Verb::Search { what } => search(what),
    }
}

fn read_input(path: &str) -> Result<String> {
    let mut text = String::new();
    let res = if path == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| Error::Domain(format!("cannot read {path}: {e}")))?;
    Ok(text)
}

fn parse_coords(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|e| Error::Domain(format!("bad coordinate {t:?}: {e}")))
        })
        .collect()
}

fn parse_point(group: &AbelianGroup, s: &str) -> Result<GroupElement> {
    group.element(&parse_coords(s)?)
}

fn parse_subgroup(group: &AbelianGroup, gens: Option<&str>) -> Result<Subgroup> {
    let coords = match gens {
        None => Vec::new(),
        Some(s) => s
            .split(';')
            .filter(|t| !t.trim().is_empty())
            .map(parse_coords)
            .collect::<Result<Vec<_>>>()?,
    };
    subgroup_from_generators(group, &parse_elements(group, &coords)?)
}

fn divides(n: u64, orders: Vec<u64>) -> Result<Outcome> {
    let orders = OrderMultiset::new(orders)?;
    let crit = criterion(n, &orders)?;
    let failing: Vec<String> = crit.iter().filter(|c| !c.holds()).map(|c| c.to_string()).collect();
    let text = if failing.is_empty() {
        "YES".to_string()
    } else {
        format!("NO ({})", failing.join("; "))
    };
    let json = json!({
        "n": n,
        "orders": orders.orders(),
        "divides": failing.is_empty(),
        "primes": crit.iter().map(|c| json!({
            "p": c.p,
            "sum": c.sum.to_string(),
            "required": c.required,
            "holds": c.holds(),
        })).collect::<Vec<_>>(),
    });
    Ok(Outcome::ok(text, json))
}

fn load_z(path: &str) -> Result<(ZCoverSystem, u32)> {
    match load_system(&read_input(path)?)? {
        LoadedSystem::Integers { system, m } => Ok((system, m)),
        LoadedSystem::Abelian { .. } => Err(Error::Domain("expected a system of type \"Z\"".into())),
    }
}

fn load_group(path: &str) -> Result<(CosetSystem, u32)> {
    match load_system(&read_input(path)?)? {
        LoadedSystem::Abelian { system, m } => Ok((system, m)),
        LoadedSystem::Integers { system, m } => Ok((as_cyclic_cosets(&system)?, m)),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn verify_z(path: &str, m: Option<u32>, a: Option<i64>) -> Result<Outcome> {
    let (system, file_m) = load_z(path)?;
    let m = m.unwrap_or(file_m);
    if !system.is_m_cover(m)? {
        return Err(Error::Precondition(format!("the system is not an {m}-cover of Z")));
    }
    let period = system.period()?;
    let exact = system.is_exact_m_cover(m)?;
    let minimal = system.is_minimal_m_cover(m)?;
    let irredundant = system.irredundant_indices(m)?;
    let points: Vec<i64> = match a {
        Some(a) => vec![a],
        None => (0..period as i64).filter(|&x| system.multiplicity(x) == m as usize).collect(),
    };
    let classes: Vec<String> = system.classes().iter().map(|c| c.to_string()).collect();
    let mut text = vec![
        format!("Z-system {} with k = {}, period {period}", classes.join(" "), system.k()),
        format!("{m}-cover: yes (exact: {}, minimal: {})", yes_no(exact), yes_no(minimal)),
        format!("irredundant classes: {}", join(&irredundant)),
    ];
    let mut passed = true;
    let mut details = Vec::new();
    for (i, &x) in points.iter().enumerate() {
        let r = check_residue_cover_bounds(&system, m, x)?;
        passed &= r.passed();
        if i < DETAIL_LIMIT {
            let slack = r.k - m as usize;
            let tight = if slack as u64 == r.f_n_a {
                format!(" (tight: k = m + f({}))", r.n_a)
            } else {
                String::new()
            };
            text.push(format!(
                "a={x}: N_a = {}, k - m = {slack}, f(N_a) = {}{tight}",
                r.n_a, r.f_n_a
            ));
            text.push(indent(&r.report));
            details.push(serde_json::to_value(&r).expect("json"));
        }
    }
    if points.len() > DETAIL_LIMIT {
        text.push(format!("... {} further base points checked", points.len() - DETAIL_LIMIT));
    }
    if points.is_empty() {
        text.push(format!("no point is covered exactly {m} times; no base point to check"));
    }
    text.push(format!("verdict: {}", verdict(passed)));
    let json = json!({
        "system": zcover_to_json(&system, m),
        "k": system.k(),
        "m": m,
        "period": period,
        "exact": exact,
        "minimal": minimal,
        "irredundant": irredundant,
        "points_checked": points.len(),
        "bounds": details,
        "verdict": verdict(passed),
    });
    Ok(Outcome {
        text: text.join("\n"),
        json,
        passed,
    })
}

fn base_points(system: &CosetSystem, m: u32, a: Option<&str>) -> Result<Vec<GroupElement>> {
    match a {
        Some(s) => Ok(vec![parse_point(system.group(), s)?]),
        None => Ok(system
            .multiplicity_table()
            .iter()
            .enumerate()
            .filter(|&(_, &w)| w == m)
            .map(|(x, _)| system.group().element_at(x))
            .collect()),
    }
}

fn verify_group(path: &str, m: Option<u32>, a: Option<String>, k_gens: Option<String>) -> Result<Outcome> {
    let (system, file_m) = load_group(path)?;
    let m = m.unwrap_or(file_m);
    let report = check_coset_cover_bounds(&system, m)?;
    let exact = system.is_exact_m_cover(m)?;
    let minimal = system.is_minimal_m_cover(m)?;
    let irredundant = system.irredundant_indices(m)?;
    let mut passed = report.passed();
    let mut text = vec![
        format!("{} cosets in {}", system.k(), system.group()),
        format!("{m}-cover: yes (exact: {}, minimal: {})", yes_no(exact), yes_no(minimal)),
        format!("irredundant cosets: {}", join(&irredundant)),
        report.to_string(),
    ];
    let mut restriction = Vec::new();
    if let Some(gens) = k_gens.as_deref() {
        let k_sub = parse_subgroup(system.group(), Some(gens))?;
        text.push(format!("restriction to K = {k_sub} (order {})", k_sub.order()));
        for x in base_points(&system, m, a.as_deref())?.iter().take(DETAIL_LIMIT) {
            let r = check_subgroup_restriction(&system, m, x, &k_sub)?;
            passed &= r.passed();
            text.push(r.to_string());
            restriction.push(r.to_json());
        }
    }
    text.push(format!("verdict: {}", verdict(passed)));
    let json = json!({
        "system": coset_system_to_json(&system, m),
        "exact": exact,
        "minimal": minimal,
        "irredundant": irredundant,
        "bounds": report.to_json(),
        "restriction": restriction,
        "verdict": verdict(passed),
    });
    Ok(Outcome {
        text: text.join("\n"),
        json,
        passed,
    })
}

fn characters(path: &str, m: Option<u32>, a: Option<String>) -> Result<Outcome> {
    let (system, file_m) = load_group(path)?;
    let m = m.unwrap_or(file_m);
    if !system.is_m_cover(m)? {
        return Err(Error::Precondition(format!("the system is not an {m}-cover")));
    }
    let points = base_points(&system, m, a.as_deref())?;
    let mut passed = true;
    let mut text = Vec::new();
    let mut reports = Vec::new();
    for x in points.iter().take(DETAIL_LIMIT) {
        let r = verify_divisibility(&system, m, x)?;
        passed &= r.passed();
        text.push(format!(
            "a={x}: N_a = {}, root orders {:?}, max residual {:.3e}",
            r.n_a,
            r.orders,
            r.residuals.max()
        ));
        text.push(indent(&r.report));
        let mut v = serde_json::to_value(&r).expect("json");
        v["report"] = r.report.to_json();
        reports.push(v);
    }
    if points.is_empty() {
        text.push(format!("no point is covered exactly {m} times"));
    }
    text.push(format!("verdict: {}", verdict(passed)));
    Ok(Outcome {
        text: text.join("\n"),
        json: json!({"m": m, "points": reports, "verdict": verdict(passed)}),
        passed,
    })
}

fn construct(what: Construction) -> Result<Outcome> {
    let json = match what {
        Construction::ExtremalZ { k, m } => zcover_to_json(&build_extremal_zcover(k, m)?, m),
        Construction::Cpcp { p } => coset_system_to_json(&build_cp_cp_cover(p)?, 1),
        Construction::Partition { orders, k_gens } => {
            let group = AbelianGroup::new(orders)?;
            let h = parse_subgroup(&group, k_gens.as_deref())?;
            coset_system_to_json(&partition_cover(&h)?, 1)
        }
    };
    // Constructions are meant to be piped, so both formats print the JSON.
    Ok(Outcome::ok(json.to_string(), json))
}

fn search(what: SearchKind) -> Result<Outcome> {
    match what {
        SearchKind::Exhaustive {
            orders,
            max_k,
            m,
            proper,
            dedup,
            jobs,
        } => {
            let mut config = SearchConfig::new(AbelianGroup::new(orders)?, max_k, m);
            config.proper_cosets_only = proper;
            config.dedup_by_symmetry = dedup;
            config.jobs = jobs;
            let r = verify_bounds_exhaustively(&config)?;
            let passed = r.counterexamples == 0;
            Ok(Outcome {
                text: format!("{}\nverdict: {}", summary(&r), verdict(passed)),
                json: serde_json::to_value(&r).expect("json"),
                passed,
            })
        }
        SearchKind::Sweep {
            max_order,
            max_k,
            max_m,
            jobs,
        } => {
            let reports = sweep(max_order, max_k, max_m, jobs)?;
            let passed = reports.iter().all(|r| r.counterexamples == 0);
            let mut text: Vec<String> = reports.iter().map(summary).collect();
            let total = |f: fn(&ExhaustiveReport) -> u64| reports.iter().map(f).sum::<u64>();
            let (examined, covers, bad) = (
                total(|r| r.systems_examined),
                total(|r| r.covers_found),
                total(|r| r.counterexamples),
            );
            text.push(format!(
                "total: {examined} systems, {covers} covers, {bad} counterexamples\nverdict: {}",
                verdict(passed)
            ));
            let json = json!({
                "systems_examined": examined,
                "covers_found": covers,
                "counterexamples": bad,
                "runs": reports,
            });
            Ok(Outcome {
                text: text.join("\n"),
                json,
                passed,
            })
        }
        SearchKind::MinCover { orders } => {
            let group = AbelianGroup::new(orders)?;
            let r = min_proper_coset_cover(&group)?;
            let check = if r.k_min == 0 {
                BoundReport::new("proper coset cover of G minus identity")
            } else {
                check_gao_geroldinger(&group, &r.witness)?
            };
            let witness: Vec<String> = r.witness.iter().map(|c| c.to_string()).collect();
            Ok(Outcome {
                text: format!(
                    "{group}: k_min = {}, f(|G|) = {}\nwitness: {}\n{check}",
                    r.k_min,
                    r.f_order,
                    witness.join(" ")
                ),
                json: json!({
                    "group": group.orders(),
                    "k_min": r.k_min,
                    "f_order": r.f_order,
                    "nodes": r.nodes,
                    "witness": r.witness.iter().map(coset_to_json).collect::<Vec<_>>(),
                    "bound": check.to_json(),
                }),
                passed: check.passed(),
            })
        }
        SearchKind::MinDivisibility { n } => {
            let k = min_multiset_for_divisibility(n)?;
            let f = mycielski_f(n)?;
            let passed = k == f;
            Ok(Outcome {
                text: format!("n = {n} = {}: brute-force minimum {k}, f(n) = {f}", factorize(n)?),
                json: json!({"n": n, "k_min": k, "f": f, "verdict": verdict(passed)}),
                passed,
            })
        }
    }
}

fn summary(r: &ExhaustiveReport) -> String {
    format!(
        "{:?} m={} k<={}: {} systems, {} covers, {} tight, {} counterexamples",
        r.group, r.m, r.max_k, r.systems_examined, r.covers_found, r.tight_systems, r.counterexamples
    )
}

fn verdict(passed: bool) -> &'static str {
    if passed {
        "pass"
    } else {
        "fail"
    }
}

fn join(xs: &[usize]) -> String {
    if xs.is_empty() {
        return "none".into();
    }
    xs.iter().map(usize::to_string).collect::<Vec<_>>().join(", ")
}

fn indent(report: &impl std::fmt::Display) -> String {
    report
        .to_string()
        .lines()
        .map(|l| format!("  {l}"))
        .collect::<Vec<_>>()
        .join("\n")
}
