//! `mdl`: queries and verification campaigns for the Mukai-lattice
//! Brill-Noether duality toolkit.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error.

mod dot;
mod json;

use clap::{Parser, Subcommand, ValueEnum};
use json::{int_value, report, usize_value, vector_value};
use mdl_core::lattice::verify_o2_identity;
use mdl_core::strata::{build_collection, contraction_target, mu};
use mdl_core::suites::{run_suites, springer_run, CheckResult, SpringerRun, VerifyConfig};
use mdl_core::{Genus, Int, LatticeIsometry, MukaiVector};
use serde_json::{json, Value};
use std::collections::BTreeSet;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "mdl",
    version,
    about = "Exact Mukai-lattice arithmetic, Brill-Noether stratifications, Springer models and verification campaigns"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Table,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Lattice invariants of a Mukai vector (r, d·L, s)
    Vector {
        /// Genus of the polarized K3 model (>= 2)
        #[arg(long)]
        g: i64,
        r: i64,
        d: i64,
        s: i64,
        /// Emit the machine-readable report
        #[arg(long)]
        json: bool,
        /// Omit wall-clock data from the report
        #[arg(long)]
        no_timestamp: bool,
    },
    /// The stratified collection attached to a vector of the region H
    Collection {
        #[arg(long)]
        g: i64,
        r: i64,
        d: i64,
        s: i64,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        #[arg(long)]
        no_timestamp: bool,
    },
    /// Isometry-group facts: generators, the O(2) word identity, and an
    /// optional breadth-first search over generator words
    Group {
        #[arg(long)]
        g: i64,
        /// Search generator words up to this length (0 = generators only)
        #[arg(long, default_value_t = 0)]
        bfs_depth: usize,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        no_timestamp: bool,
    },
    /// Sample the Springer model T*G(t,H) and print the stratum histogram
    Springer {
        h: usize,
        t: usize,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        no_timestamp: bool,
    },
    /// Run the verification campaigns
    Verify {
        /// all | lattice | strata | nilorbit | collineation | corresp
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        seed: Option<u64>,
        /// Samples per (h,t) cell of the Springer campaign
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        no_timestamp: bool,
    },
}

const EXIT_OK: u8 = 0;
const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;

/// Writes to stdout, exiting quietly when the reading end of a pipe is
/// closed (e.g. `mdl ... | head`).
fn say_raw(text: &str) {
    use std::io::Write;
    let mut stdout = std::io::stdout().lock();
    if stdout.write_all(text.as_bytes()).is_err() {
        std::process::exit(0);
    }
}

fn say(args: std::fmt::Arguments) {
    say_raw(&format!("{args}\n"));
}

macro_rules! sayln {
    ($($arg:tt)*) => { say(format_args!($($arg)*)) };
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    ExitCode::from(run(cli))
}

fn usage_error(msg: &str) -> u8 {
    eprintln!("error: {msg}");
    EXIT_USAGE
}

/// Loads grid bounds, sample counts and the seed with the precedence
/// flags > MDL_CONFIG file > defaults.
fn load_config(seed: Option<u64>, samples: Option<usize>) -> Result<VerifyConfig, String> {
    let mut cfg = VerifyConfig::default();
    if let Ok(path) = std::env::var("MDL_CONFIG") {
        let text = std::fs::read_to_string(&path)
            .map_err(|e| format!("cannot read MDL_CONFIG file {path}: {e}"))?;
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| format!("{path}:{}: expected key=value", lineno + 1))?;
            let key = key.trim();
            let value = value.trim();
            let parse = |v: &str| -> Result<i64, String> {
                v.parse()
                    .map_err(|_| format!("{path}:{}: bad integer '{v}'", lineno + 1))
            };
            match key {
                "seed" => cfg.seed = parse(value)? as u64,
                "samples" => cfg.samples = parse(value)? as usize,
                "g_max" => cfg.g_max = parse(value)?,
                "rs_max" => cfg.rs_max = parse(value)?,
                "springer_h_max" => cfg.springer_h_max = parse(value)? as usize,
                "flag_h_max" => cfg.flag_h_max = parse(value)? as usize,
                other => return Err(format!("{path}:{}: unknown key '{other}'", lineno + 1)),
            }
        }
    }
    if let Some(seed) = seed {
        cfg.seed = seed;
    }
    if let Some(samples) = samples {
        cfg.samples = samples;
    }
    Ok(cfg)
}

fn genus_of(g: i64) -> Result<Genus, String> {
    Genus::new(Int::from(g)).map_err(|e| e.to_string())
}

fn run(cli: Cli) -> u8 {
    match cli.command {
        Command::Vector {
            g,
            r,
            d,
            s,
            json,
            no_timestamp,
        } => cmd_vector(g, r, d, s, json, no_timestamp),
        Command::Collection {
            g,
            r,
            d,
            s,
            format,
            no_timestamp,
        } => cmd_collection(g, r, d, s, format, no_timestamp),
        Command::Group {
            g,
            bfs_depth,
            json,
            no_timestamp,
        } => cmd_group(g, bfs_depth, json, no_timestamp),
        Command::Springer {
            h,
            t,
            samples,
            seed,
            json,
            no_timestamp,
        } => cmd_springer(h, t, samples, seed, json, no_timestamp),
        Command::Verify {
            suite,
            seed,
            samples,
            json,
            no_timestamp,
        } => cmd_verify(&suite, seed, samples, json, no_timestamp),
    }
}

// ------------------------------------------------------------------ vector

fn cmd_vector(g: i64, r: i64, d: i64, s: i64, as_json: bool, no_timestamp: bool) -> u8 {
    let gg = match genus_of(g) {
        Ok(gg) => gg,
        Err(e) => return usage_error(&e),
    };
    let v = MukaiVector::of(r, d, s);
    let region = v.in_region(&gg);
    let mu_value = if v.in_h_normalized(&gg) {
        Some(mu(&v, &gg).expect("membership checked"))
    } else {
        None
    };
    let targets = contraction_target(&v);
    if as_json {
        let results = json!([{
            "vector": vector_value(&v),
            "chi": int_value(&v.euler()),
            "dim_moduli": int_value(&v.dim_moduli(&gg)),
            "in_v": region.in_v,
            "in_h": region.in_h,
            "mu": mu_value.map(usize_value).unwrap_or(Value::Null),
            "sigma": vector_value(&v.sigma()),
            "tau": vector_value(&v.tau()),
            "sigma_tau": vector_value(&v.sigma_tau()),
            "contraction_targets": targets.iter().map(vector_value).collect::<Vec<_>>(),
        }]);
        let params = json!({"g": g, "vector": vector_value(&v)});
        print_json(&report("vector", params, results, !no_timestamp));
    } else {
        sayln!("vector {v} at {gg}");
        sayln!("  chi        = {}", v.euler());
        sayln!("  dim M(v)   = {}", v.dim_moduli(&gg));
        sayln!("  in V       = {}", region.in_v);
        sayln!("  in H       = {}", region.in_h);
        match mu_value {
            Some(m) => sayln!("  mu         = {m}"),
            None => sayln!("  mu         = - (outside H)"),
        }
        sayln!("  sigma(v)   = {}", v.sigma());
        sayln!("  tau(v)     = {}", v.tau());
        sayln!("  sigma.tau  = {}", v.sigma_tau());
        let rendered: Vec<String> = targets.iter().map(|t| t.to_string()).collect();
        sayln!("  contraction target(s) = {}", rendered.join(", "));
    }
    EXIT_OK
}

// -------------------------------------------------------------- collection

fn cmd_collection(g: i64, r: i64, d: i64, s: i64, format: Format, no_timestamp: bool) -> u8 {
    let gg = match genus_of(g) {
        Ok(gg) => gg,
        Err(e) => return usage_error(&e),
    };
    let v = MukaiVector::of(r, d, s);
    let c = match build_collection(&v, &gg) {
        Ok(c) => c,
        Err(e) => return usage_error(&e.to_string()),
    };
    match format {
        Format::Table => {
            sayln!(
                "stratified collection of {} at {} (mu = {}, n = {}, direction = {:+})",
                c.base,
                gg,
                c.mu,
                c.n_of_row(0),
                c.direction
            );
            for (i, row) in c.rows.iter().enumerate() {
                let base = row[0].normalized_base();
                sayln!("row {i}: M{base}");
                for entry in row {
                    let fiber = entry
                        .fiber
                        .as_ref()
                        .map(|f| format!("  fiber {f} -> diagonal {}", i + entry.t))
                        .unwrap_or_default();
                    sayln!(
                        "  ^{t}: dim {dim:>4}  codim {codim:>4}{fiber}",
                        t = entry.t,
                        dim = entry.dim,
                        codim = entry.codim,
                    );
                }
            }
        }
        Format::Dot => say_raw(&dot::render(&c)),
        Format::Json => {
            let rows: Vec<Value> = c
                .rows
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|e| {
                            json!({
                                "base": vector_value(&e.base),
                                "normalized_base": vector_value(&e.normalized_base()),
                                "t": usize_value(e.t),
                                "dim": int_value(&e.dim),
                                "codim": int_value(&e.codim),
                                "fiber": e.fiber.as_ref().map(|f| json!({
                                    "sub": int_value(&f.sub),
                                    "ambient": int_value(&f.ambient),
                                })).unwrap_or(Value::Null),
                            })
                        })
                        .collect::<Vec<_>>()
                        .into()
                })
                .collect();
            let results = json!([{
                "base": vector_value(&c.base),
                "mu": usize_value(c.mu),
                "n": int_value(&c.n_of_row(0)),
                "direction": c.direction,
                "rows": rows,
            }]);
            let params = json!({"g": g, "vector": vector_value(&v)});
            print_json(&report("collection", params, results, !no_timestamp));
        }
    }
    EXIT_OK
}

// ------------------------------------------------------------------- group

fn cmd_group(g: i64, bfs_depth: usize, as_json: bool, no_timestamp: bool) -> u8 {
    let gg = match genus_of(g) {
        Ok(gg) => gg,
        Err(e) => return usage_error(&e),
    };
    if bfs_depth > 10 {
        return usage_error("--bfs-depth is capped at 10");
    }
    let named: Vec<(&str, LatticeIsometry)> = vec![
        ("sigma", LatticeIsometry::sigma()),
        ("tau", LatticeIsometry::tau()),
        ("-id", LatticeIsometry::neg()),
        ("O(1)", LatticeIsometry::tensor_by(&Int::from(1), &gg)),
        ("O(-1)", LatticeIsometry::tensor_by(&Int::from(-1), &gg)),
    ];
    let generator_checks: Vec<(&str, bool)> = named
        .iter()
        .map(|(name, m)| (*name, m.is_isometry(&gg)))
        .collect();
    let o2 = verify_o2_identity(&gg);
    // the genus-7 witness: an isometry outside the reflection subgroup
    let example = (g == 7).then(|| {
        let m = LatticeIsometry::from_i64([[2, 12, 3], [1, 5, 1], [3, 12, 2]]);
        (m.is_isometry(&gg), m.gamma_criterion(&gg), m.image_of_point_class())
    });
    let bfs = bfs_images(&named, bfs_depth);

    if as_json {
        let mut results = vec![json!({
            "generators_are_isometries": generator_checks
                .iter()
                .map(|(n, ok)| json!({"name": n, "isometry": ok}))
                .collect::<Vec<_>>(),
            "o2_word_identity": o2,
            "bfs_depth": bfs_depth,
            "bfs_image_count": bfs.len(),
            "bfs_images": bfs.iter().take(50).map(vector_value).collect::<Vec<_>>(),
        })];
        if let Some((isom, criterion, image)) = &example {
            results.push(json!({
                "example_matrix": [[2,12,3],[1,5,1],[3,12,2]],
                "example_is_isometry": isom,
                "example_gamma_criterion": criterion,
                "example_image_of_point_class": vector_value(image),
            }));
        }
        let params = json!({"g": g, "bfs_depth": bfs_depth});
        print_json(&report("group", params, Value::Array(results), !no_timestamp));
    } else {
        sayln!("isometry group report at {gg}");
        for (name, ok) in &generator_checks {
            sayln!("  generator {name:<5} isometry: {ok}");
        }
        sayln!("  O(2) = sigma'.tau'.sigma.tau: {o2}");
        if let Some((isom, criterion, image)) = &example {
            sayln!("  example matrix [[2,12,3],[1,5,1],[3,12,2]]:");
            sayln!("    isometry: {isom}");
            sayln!("    image of (0,0,1): {image}");
            sayln!("    subgroup criterion: {}", if *criterion { "pass" } else { "fail" });
        }
        sayln!(
            "  BFS over generator words, depth {bfs_depth}: {} distinct image(s) of (0,0,1)",
            bfs.len()
        );
        for v in bfs.iter().take(20) {
            sayln!("    {v}");
        }
        if bfs.len() > 20 {
            sayln!("    ... ({} more)", bfs.len() - 20);
        }
    }
    let all_ok = generator_checks.iter().all(|(_, ok)| *ok)
        && o2
        && example.is_none_or(|(isom, criterion, _)| isom && !criterion);
    if all_ok {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    }
}

/// Distinct images of `(0,0,1)` under generator words of bounded length.
/// A search heuristic only; it certifies nothing about membership.
fn bfs_images(named: &[(&str, LatticeIsometry)], depth: usize) -> Vec<MukaiVector> {
    let mut frontier = vec![LatticeIsometry::identity()];
    let mut seen_matrices: BTreeSet<Vec<Int>> = BTreeSet::new();
    let mut images: BTreeSet<(Int, Int, Int)> = BTreeSet::new();
    let key = |m: &LatticeIsometry| -> Vec<Int> {
        m.m.iter().flat_map(|row| row.iter().cloned()).collect()
    };
    seen_matrices.insert(key(&frontier[0]));
    let record = |m: &LatticeIsometry, images: &mut BTreeSet<(Int, Int, Int)>| {
        let v = m.image_of_point_class();
        images.insert((v.r, v.d, v.s));
    };
    record(&frontier[0], &mut images);
    for _ in 0..depth {
        let mut next = Vec::new();
        for word in &frontier {
            for (_, gen) in named {
                let extended = gen.compose(word);
                if seen_matrices.insert(key(&extended)) {
                    record(&extended, &mut images);
                    next.push(extended);
                }
            }
        }
        frontier = next;
    }
    images
        .into_iter()
        .map(|(r, d, s)| MukaiVector::new(r, d, s))
        .collect()
}

// ---------------------------------------------------------------- springer

fn cmd_springer(
    h: usize,
    t: usize,
    samples: Option<usize>,
    seed: Option<u64>,
    as_json: bool,
    no_timestamp: bool,
) -> u8 {
    let cfg = match load_config(seed, samples) {
        Ok(cfg) => cfg,
        Err(e) => return usage_error(&e),
    };
    if h < 2 || t < 1 || 2 * t > h {
        return usage_error(&format!("need 1 <= t <= h/2, got h = {h}, t = {t}"));
    }
    if cfg.samples == 0 {
        return usage_error("--samples must be at least 1");
    }
    let run: SpringerRun = springer_run(h, t, cfg.samples, cfg.seed);
    if as_json {
        let transcript: Vec<Value> = run
            .transcript
            .iter()
            .map(|s| {
                json!({
                    "subspace_basis": s.subspace_basis,
                    "psi": s.psi,
                    "endomorphism": s.endomorphism,
                    "rank": s.rank,
                    "corank": s.corank,
                    "dual_endomorphism": s.dual_endomorphism,
                })
            })
            .collect();
        let results = json!([{
            "h": h,
            "t": t,
            "samples": run.samples,
            "corank_histogram": run.corank_histogram
                .iter()
                .map(|(corank, count)| json!({"corank": corank, "count": count}))
                .collect::<Vec<_>>(),
            "dense_orbit_round_trips": run.round_trips,
            "failures": run.failures,
            "transcript": transcript,
        }]);
        let params = json!({"h": h, "t": t, "samples": cfg.samples, "seed": cfg.seed});
        print_json(&report("springer", params, results, !no_timestamp));
    } else {
        sayln!(
            "springer model h={h}, t={t}: {} samples, seed {}",
            run.samples, cfg.seed
        );
        sayln!("  stratum occupancy (by corank):");
        for (corank, count) in &run.corank_histogram {
            sayln!("    corank {corank}: {count}");
        }
        sayln!("  dense-orbit transpose round trips: {}", run.round_trips);
        if run.failures.is_empty() {
            sayln!("  failures: none");
        } else {
            sayln!("  failures:");
            for f in &run.failures {
                sayln!("    {f}");
            }
        }
    }
    if run.failures.is_empty() {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    }
}

// ------------------------------------------------------------------ verify

fn cmd_verify(
    suite: &str,
    seed: Option<u64>,
    samples: Option<usize>,
    as_json: bool,
    no_timestamp: bool,
) -> u8 {
    let cfg = match load_config(seed, samples) {
        Ok(cfg) => cfg,
        Err(e) => return usage_error(&e),
    };
    let results: Vec<CheckResult> = match run_suites(suite, &cfg) {
        Ok(results) => results,
        Err(e) => return usage_error(&e.to_string()),
    };
    let failed = results.iter().filter(|r| !r.passed()).count();
    if as_json {
        let rendered: Vec<Value> = results
            .iter()
            .map(|r| {
                let mut entry = serde_json::Map::new();
                entry.insert("name".into(), Value::String(r.name.clone()));
                entry.insert(
                    "status".into(),
                    Value::String(if r.passed() { "pass" } else { "fail" }.into()),
                );
                if let Some(counterexample) = &r.counterexample {
                    entry.insert(
                        "counterexample".into(),
                        Value::String(counterexample.clone()),
                    );
                }
                if !no_timestamp {
                    entry.insert("elapsed_ms".into(), Value::from(r.elapsed_ms as u64));
                }
                Value::Object(entry)
            })
            .collect();
        let params = json!({
            "suite": suite,
            "seed": cfg.seed,
            "samples": cfg.samples,
            "g_max": cfg.g_max,
            "rs_max": cfg.rs_max,
            "springer_h_max": cfg.springer_h_max,
            "flag_h_max": cfg.flag_h_max,
        });
        print_json(&report("verify", params, Value::Array(rendered), !no_timestamp));
    } else {
        sayln!("verification suite '{suite}' (seed {})", cfg.seed);
        for r in &results {
            let status = if r.passed() { "PASS" } else { "FAIL" };
            if no_timestamp {
                sayln!("  [{status}] {}", r.name);
            } else {
                sayln!("  [{status}] {} ({} ms)", r.name, r.elapsed_ms);
            }
            if let Some(counterexample) = &r.counterexample {
                sayln!("         counterexample: {counterexample}");
            }
        }
        sayln!(
            "{} checks, {} failed",
            results.len(),
            failed
        );
    }
    if failed == 0 {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    }
}

fn print_json(value: &Value) {
    sayln!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}
