use std::collections::BTreeMap;
use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use modsurf::dynamics::{degree_estimate, orbit};
use modsurf::families::{enumerate_surface_points, SurfaceModel};
use modsurf::modular::WeierstrassModel;
use modsurf::mpoly::{MPoly, Mono};
use modsurf::scalar::{Fp, Q, RatFun, Scalar, UPoly};
use modsurf::semiconj::PlaneMapModel;
use modsurf_cli::{run_case, Status, CASES};
use rayon::prelude::*;

#[derive(Parser)]
#[command(name = "modsurf", about = "Exact verification harness for two quartic line-arrangement families")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run verification cases and report pass/fail with witnesses.
    Verify {
        /// Case id; repeatable. Defaults to every case.
        #[arg(long = "case")]
        cases: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Worker threads (default: all cores).
        #[arg(long)]
        jobs: Option<usize>,
        /// Write one JSON report per line to this file.
        #[arg(long)]
        json: Option<std::path::PathBuf>,
        /// List the available case ids and exit.
        #[arg(long)]
        list: bool,
    },
    /// Finite-field statistics over the full surface.
    Scan {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: u64,
        #[arg(long, value_enum)]
        stat: ScanStat,
    },
    /// Iterate the self-map from a chart point over F_p.
    Orbit {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: u64,
        /// Chart coordinates as a comma-separated triple, e.g. 794,582,116.
        #[arg(long)]
        point: String,
        #[arg(long, default_value_t = 100)]
        max: usize,
    },
    /// Print model constants as JSON for audit.
    Dump {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        what: DumpWhat,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ScanStat {
    Degree,
    #[value(name = "orbit-lengths")]
    OrbitLengths,
}

#[derive(Clone, Copy, ValueEnum)]
enum DumpWhat {
    Quartic,
    Families,
    Sigma,
    Planemap,
    Weierstrass,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // Help/version requests are not usage errors.
            let benign = matches!(
                err.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            );
            let _ = err.print();
            return if benign { ExitCode::SUCCESS } else { ExitCode::from(3) };
        }
    };
    match cli.cmd {
        Cmd::Verify { cases, seed, jobs, json, list } => cmd_verify(cases, seed, jobs, json, list),
        Cmd::Scan { n, p, stat } => cmd_scan(n, p, stat),
        Cmd::Orbit { n, p, point, max } => cmd_orbit(n, p, &point, max),
        Cmd::Dump { n, what } => cmd_dump(n, what),
    }
}

fn check_n(n: usize) -> Option<ExitCode> {
    if n == 7 || n == 8 {
        None
    } else {
        eprintln!("error: --n must be 7 or 8");
        Some(ExitCode::from(3))
    }
}

fn cmd_verify(
    cases: Vec<String>,
    seed: u64,
    jobs: Option<usize>,
    json: Option<std::path::PathBuf>,
    list: bool,
) -> ExitCode {
    if list {
        for id in CASES {
            println!("{id}");
        }
        return ExitCode::SUCCESS;
    }
    let selected: Vec<String> = if cases.is_empty() {
        CASES.iter().map(|s| s.to_string()).collect()
    } else {
        cases
    };
    for id in &selected {
        if !CASES.contains(&id.as_str()) {
            eprintln!("error: unknown case '{id}' (see --list)");
            return ExitCode::from(3);
        }
    }
    let run = || -> Vec<modsurf_cli::VerificationReport> {
        selected.par_iter().map(|id| run_case(id, seed)).collect()
    };
    let reports = match jobs {
        Some(k) => {
            let pool = match rayon::ThreadPoolBuilder::new().num_threads(k).build() {
                Ok(pool) => pool,
                Err(err) => {
                    eprintln!("error: {err}");
                    return ExitCode::from(3);
                }
            };
            pool.install(run)
        }
        None => run(),
    };
    let mut out = match &json {
        Some(path) => match std::fs::File::create(path) {
            Ok(f) => Some(f),
            Err(err) => {
                eprintln!("error: cannot open {}: {err}", path.display());
                return ExitCode::from(3);
            }
        },
        None => None,
    };
    let (mut passed, mut failed, mut skipped) = (0usize, 0usize, 0usize);
    for report in &reports {
        let tag = match report.status {
            Status::Pass => {
                passed += 1;
                "PASS"
            }
            Status::Fail => {
                failed += 1;
                "FAIL"
            }
            Status::Skip => {
                skipped += 1;
                "SKIP"
            }
        };
        eprintln!("{:12} {} ({} ms) — {}", report.case, tag, report.millis, report.witness);
        let line = serde_json::to_string(report).expect("report serializes");
        match out.as_mut() {
            Some(f) => writeln!(f, "{line}").expect("report written"),
            None => println!("{line}"),
        }
    }
    eprintln!("{passed} passed, {failed} failed, {skipped} skipped");
    if failed > 0 {
        ExitCode::from(1)
    } else if passed > 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    }
}

fn cmd_scan(n: usize, p: u64, stat: ScanStat) -> ExitCode {
    if let Some(code) = check_n(n) {
        return code;
    }
    match stat {
        ScanStat::Degree => match degree_estimate(n, p) {
            Ok((hist, mode)) => {
                let hist: BTreeMap<String, usize> =
                    hist.into_iter().map(|(k, v)| (k.to_string(), v)).collect();
                println!(
                    "{}",
                    serde_json::json!({
                        "n": n, "p": p, "stat": "degree",
                        "fiber_histogram": hist, "modal_fiber": mode,
                    })
                );
                ExitCode::SUCCESS
            }
            Err(err) => {
                eprintln!("error: {err}");
                ExitCode::from(2)
            }
        },
        ScanStat::OrbitLengths => scan_orbit_lengths(n, p),
    }
}

fn scan_orbit_lengths(n: usize, p: u64) -> ExitCode {
    if p > (1 << 10) {
        eprintln!("error: orbit-lengths scan: p = {p} exceeds 2^10");
        return ExitCode::from(2);
    }
    let token = Fp::new(1, p);
    let model = SurfaceModel::new(n, &token);
    let pts = match enumerate_surface_points(n, p) {
        Ok(pts) => pts,
        Err(err) => {
            eprintln!("error: {err}");
            return ExitCode::from(2);
        }
    };
    let max_iter = 4 * p as usize;
    let records: Vec<(Option<usize>, usize, String)> = pts
        .par_iter()
        .filter_map(|y| {
            if !y.c[3].is_unit() {
                return None;
            }
            let inv = y.c[3].inv().ok()?;
            let x = [y.c[0].mul(&inv), y.c[1].mul(&inv), y.c[2].mul(&inv)];
            let rec = orbit(&model, &x, max_iter);
            let kind = rec.termination.split(':').next().unwrap_or("").to_string();
            Some((rec.period, rec.iterates.len(), kind))
        })
        .collect();
    let mut periods: BTreeMap<String, usize> = BTreeMap::new();
    let mut lengths: BTreeMap<String, usize> = BTreeMap::new();
    let mut terminations: BTreeMap<String, usize> = BTreeMap::new();
    for (period, len, kind) in records {
        if let Some(k) = period {
            *periods.entry(k.to_string()).or_insert(0) += 1;
        }
        *lengths.entry(len.to_string()).or_insert(0) += 1;
        *terminations.entry(kind).or_insert(0) += 1;
    }
    println!(
        "{}",
        serde_json::json!({
            "n": n, "p": p, "stat": "orbit-lengths", "max_iter": max_iter,
            "periods": periods, "lengths": lengths, "terminations": terminations,
        })
    );
    ExitCode::SUCCESS
}

fn cmd_orbit(n: usize, p: u64, point: &str, max: usize) -> ExitCode {
    if let Some(code) = check_n(n) {
        return code;
    }
    let coords: Vec<i64> = match point.split(',').map(|s| s.trim().parse()).collect() {
        Ok(v) => v,
        Err(_) => {
            eprintln!("error: --point must be three comma-separated integers");
            return ExitCode::from(3);
        }
    };
    let [a, b, c] = coords[..] else {
        eprintln!("error: --point must be three comma-separated integers");
        return ExitCode::from(3);
    };
    let token = Fp::new(1, p);
    let model = SurfaceModel::new(n, &token);
    let x = [token.from_i64(a), token.from_i64(b), token.from_i64(c)];
    let y = [x[0], x[1], x[2], token.one()];
    if !model.surface_eval(&y).is_zero() {
        eprintln!("error: ({a},{b},{c}) is not on the surface over F_{p}");
        return ExitCode::from(2);
    }
    let rec = orbit(&model, &x, max);
    let iterates: Vec<[u64; 3]> = rec.iterates.iter().map(|x| x.map(|v| v.value())).collect();
    println!(
        "{}",
        serde_json::json!({
            "n": n, "p": p,
            "start": rec.start.map(|v| v.value()),
            "iterates": iterates,
            "period": rec.period,
            "termination": rec.termination,
        })
    );
    if rec.period.is_none() && rec.termination.starts_with("undefined") && rec.iterates.len() == 1 {
        ExitCode::from(2)
    } else {
        ExitCode::SUCCESS
    }
}

const YVARS: [&str; 4] = ["y1", "y2", "y3", "y4"];
const XVARS: [&str; 3] = ["x1", "x2", "x3"];
const ZVARS: [&str; 3] = ["z1", "z2", "z3"];

fn mono_src(m: &Mono, vars: &[&str]) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.0.iter().enumerate().take(vars.len()) {
        match e {
            0 => {}
            1 => parts.push(vars[i].to_string()),
            _ => parts.push(format!("{}**{}", vars[i], e)),
        }
    }
    parts.join("*")
}

fn poly_src(p: &MPoly<Q>, vars: &[&str]) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let terms: Vec<String> = p
        .terms()
        .map(|(m, c)| {
            let ms = mono_src(m, vars);
            if ms.is_empty() {
                format!("{c}")
            } else if c.is_one() {
                ms
            } else if c.neg().is_one() {
                format!("-{ms}")
            } else {
                format!("{c}*{ms}")
            }
        })
        .collect();
    terms.join(" + ").replace("+ -", "- ")
}

fn upoly_src(p: &UPoly<Q>) -> String {
    let terms = p
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (Mono([i as u16, 0, 0, 0]), c.clone()))
        .collect::<Vec<_>>();
    poly_src(&MPoly::from_terms(1, terms, p.token().clone()), &["t"])
}

fn ratfun_src(r: &RatFun<Q>) -> String {
    if r.denom().degree() == Some(0) && r.denom().coeff(0).is_one() {
        upoly_src(r.numer())
    } else {
        format!("({}) / ({})", upoly_src(r.numer()), upoly_src(r.denom()))
    }
}

fn cmd_dump(n: usize, what: DumpWhat) -> ExitCode {
    if let Some(code) = check_n(n) {
        return code;
    }
    let model = SurfaceModel::new(n, &modsurf::scalar::q_of(1));
    let value = match what {
        DumpWhat::Quartic => serde_json::json!({
            "n": n,
            "vars": YVARS,
            "quartic": poly_src(&model.quartic, &YVARS),
            "singular_points": model.sing.iter()
                .map(|s| s.c.iter().map(|c| c.to_string()).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        }),
        DumpWhat::Families => {
            let fam = |rows: &Vec<[MPoly<Q>; 3]>| -> Vec<[String; 3]> {
                rows.iter()
                    .map(|r| std::array::from_fn(|i| poly_src(&r[i], &XVARS)))
                    .collect()
            };
            serde_json::json!({
                "n": n,
                "vars": XVARS,
                "c0": fam(&model.c0),
                "c1": fam(&model.c1),
            })
        }
        DumpWhat::Sigma => {
            if n != 7 {
                eprintln!("error: polynomial sigma actions are only available for --n 7");
                return ExitCode::from(3);
            }
            let polys = |which: usize| -> Vec<String> {
                model.sigma_polys[which]
                    .iter()
                    .map(|p| poly_src(p, &YVARS))
                    .collect()
            };
            serde_json::json!({
                "n": n,
                "vars": YVARS,
                "sigma1": polys(0),
                "sigma2": polys(1),
            })
        }
        DumpWhat::Planemap => {
            if n != 7 {
                eprintln!("error: the plane self-map is only available for --n 7");
                return ExitCode::from(3);
            }
            let plane = PlaneMapModel::new(&modsurf::scalar::q_of(1));
            serde_json::json!({
                "n": n,
                "vars": ZVARS,
                "q": poly_src(&plane.q, &ZVARS),
                "components": [
                    poly_src(&plane.q1, &ZVARS),
                    poly_src(&plane.q2, &ZVARS),
                    poly_src(&plane.q3, &ZVARS),
                ],
                "r4": poly_src(&plane.r4, &ZVARS),
                "r7": poly_src(&plane.r7, &ZVARS),
            })
        }
        DumpWhat::Weierstrass => {
            let w = WeierstrassModel::from_consts(n);
            serde_json::json!({
                "n": n,
                "model": "y^2 = x^3 + a2*x^2 + a4*x + a6",
                "a2": ratfun_src(&w.a2),
                "a4": ratfun_src(&w.a4),
                "a6": ratfun_src(&w.a6),
                "c4": ratfun_src(&w.c4()),
                "c6": ratfun_src(&w.c6()),
                "discriminant": ratfun_src(&w.discriminant()),
                "j": ratfun_src(&w.j_invariant()),
            })
        }
    };
    println!("{value}");
    ExitCode::SUCCESS
}
