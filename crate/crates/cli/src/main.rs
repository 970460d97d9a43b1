use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

mod output;

use mixcay::bounds::{mac_bound_improved_breakdown, moore_layers};
use mixcay::verify::{self, VerifyOptions};
use mixcay::{mac_bound, moore_mixed_general, smith_normal_form, DegreeSpec, Family, IntMatrix, MixedCayleyGraph};
use mixcay::{search_optimal, SearchSpec};
use output::{big, matrix_json, Printer};

/// Moore bounds, Smith normal forms and optimal mixed Abelian Cayley graphs.
#[derive(Parser, Debug)]
#[command(name = "mixcay", version, about)]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Only log warnings and errors to stderr.
    #[arg(short, long, global = true)]
    quiet: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate a Moore-type bound.
    #[command(subcommand)]
    Bound(BoundCmd),
    /// Smith normal form of a square integer matrix file.
    Snf { file: PathBuf },
    /// Build a member of a parametric family and certify its diameter.
    Family(FamilyArgs),
    /// Load a graph description file and measure it.
    Certify {
        file: PathBuf,
        /// Fail (exit 3) unless the diameter is at most this value.
        #[arg(long)]
        k: Option<u32>,
    },
    /// Exhaustive search for the largest graph of a given profile.
    Search(SearchArgs),
    /// Run the reproduction suite and print one row per criterion.
    VerifyAll {
        /// Criterion number, group (bounds, snf, families, search, constructions) or name fragment.
        #[arg(long)]
        filter: Option<String>,
        #[arg(long, hide = true)]
        corrupt_family: Option<Family>,
    },
}

#[derive(Subcommand, Debug)]
enum BoundCmd {
    /// General mixed Moore bound, spec like "r=2 z=1 k=3".
    General {
        spec: String,
        #[arg(long)]
        explain: bool,
    },
    /// Abelian Cayley bound M_AC; finite-order classes are counted as undetermined.
    Mac {
        spec: String,
        #[arg(long)]
        explain: bool,
    },
    /// Improved bound using the finite-order classes of the spec.
    Improved {
        spec: String,
        #[arg(long)]
        explain: bool,
    },
}

#[derive(Args, Debug)]
struct FamilyArgs {
    /// degree4, diamond, t-tile or t.
    #[arg(long)]
    name: Family,
    #[arg(long)]
    k: u32,
    /// Write the graph description here instead of printing it.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write a DOT rendering (graphs with at most 200 vertices).
    #[arg(long)]
    dot: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct SearchArgs {
    #[arg(long, default_value_t = 0)]
    r_alpha: u32,
    #[arg(long, default_value_t = 0)]
    r_omega: u32,
    #[arg(long, default_value_t = 0)]
    z_omega: u32,
    #[arg(long)]
    k: u32,
    /// Largest order to try (default: M_AC of the profile).
    #[arg(long)]
    n_max: Option<u64>,
    #[arg(long, default_value_t = 1)]
    n_min: u64,
    #[arg(long, default_value_t = mixcay::search::DEFAULT_ORDER_CAP)]
    cap: u64,
    /// Skip improved-bound pruning.
    #[arg(long)]
    no_prune: bool,
    /// Report every witness at the best order.
    #[arg(long)]
    all_witnesses: bool,
    /// Worker threads (0 = all cores).
    #[arg(long, default_value_t = 0)]
    jobs: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let level = if cli.quiet { log::LevelFilter::Warn } else { log::LevelFilter::Info };
    env_logger::Builder::new().filter_level(level).parse_default_env().format_timestamp(None).init();
    let out = Printer { json: cli.json };
    match run(cli.command, &out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command, out: &Printer) -> Result<ExitCode> {
    match command {
        Command::Bound(b) => cmd_bound(b, out),
        Command::Snf { file } => cmd_snf(&file, out),
        Command::Family(args) => cmd_family(args, out),
        Command::Certify { file, k } => cmd_certify(&file, k, out),
        Command::Search(args) => cmd_search(args, out),
        Command::VerifyAll { filter, corrupt_family } => cmd_verify_all(filter, corrupt_family, out),
    }
}

/// Parses `r=.. z=.. k=..` (keys in any order, all required).
fn parse_general(text: &str) -> Result<(u64, u64, u32)> {
    let (mut r, mut z, mut k) = (None, None, None);
    for tok in text.split_whitespace() {
        let (key, value) = tok.split_once('=').with_context(|| format!("expected key=value, got {tok:?}"))?;
        let slot = match key {
            "r" => &mut r,
            "z" => &mut z,
            "k" => &mut k,
            _ => bail!("unknown key {key:?} (expected r, z, k)"),
        };
        if slot.replace(value.parse::<u64>().with_context(|| format!("bad value for {key}"))?).is_some() {
            bail!("duplicate key {key:?}");
        }
    }
    match (r, z, k) {
        (Some(r), Some(z), Some(k)) => Ok((r, z, u32::try_from(k)?)),
        _ => bail!("spec needs r, z and k"),
    }
}

fn cmd_bound(cmd: BoundCmd, out: &Printer) -> Result<ExitCode> {
    match cmd {
        BoundCmd::General { spec, explain } => {
            let (r, z, k) = parse_general(&spec)?;
            let value = moore_mixed_general(r, z, k)?;
            let layers = moore_layers(r, z, k)?;
            if out.json {
                let mut v = serde_json::json!({ "kind": "general", "r": r, "z": z, "k": k, "value": big(&value) });
                if explain {
                    v["layers"] = layers.iter().map(big).collect();
                }
                out.emit_json(&v);
            } else {
                if explain {
                    for (i, n) in layers.iter().enumerate() {
                        println!("N_{i} = {n}");
                    }
                }
                println!("{value}");
            }
        }
        BoundCmd::Mac { spec, explain } => {
            let spec: DegreeSpec = spec.parse()?;
            let (ra, rw, zw) = (spec.r_alpha, spec.total_pairs(), spec.total_directed());
            let value = mac_bound(ra, rw, zw, spec.k);
            let terms: Vec<_> = (0..=spec.k)
                .map(|i| {
                    let a = mixcay::bounds::binomial((rw + zw + i) as i64, i as i64);
                    let b = mixcay::bounds::binomial((ra + rw) as i64, (spec.k - i) as i64);
                    (i, a, b)
                })
                .collect();
            if out.json {
                let mut v = serde_json::json!({
                    "kind": "mac", "r_alpha": ra, "r_omega": rw, "z_omega": zw, "k": spec.k, "value": big(&value)
                });
                if explain {
                    v["terms"] =
                        terms.iter().map(|(i, a, b)| serde_json::json!({ "i": i, "value": big(&(a * b)) })).collect();
                }
                out.emit_json(&v);
            } else {
                if explain {
                    println!("M_AC({ra},{rw},{zw},{k}) = sum_i C({}+i, i) C({}, {k}-i)", rw + zw, ra + rw, k = spec.k);
                    for (i, a, b) in &terms {
                        println!("  i={i}: {a} * {b} = {}", a * b);
                    }
                }
                println!("{value}");
            }
        }
        BoundCmd::Improved { spec, explain } => {
            let spec: DegreeSpec = spec.parse()?;
            let b = mac_bound_improved_breakdown(&spec)?;
            if out.json {
                let mut v =
                    serde_json::json!({ "kind": "improved", "spec": b.spec.to_string(), "value": big(&b.total) });
                if explain {
                    v["classes"] = b
                        .classes
                        .iter()
                        .map(|(c, d)| serde_json::json!({ "class": c.label(), "ball_usage": d.iter().map(big).collect::<Vec<_>>() }))
                        .collect();
                    v["combined"] = b.combined.iter().map(big).collect();
                    v["terms"] = b
                        .terms
                        .iter()
                        .map(|(ia, iw, t)| serde_json::json!({ "i_alpha": ia, "i_omega": iw, "value": big(t) }))
                        .collect();
                }
                out.emit_json(&v);
            } else {
                if explain {
                    println!("spec {}", b.spec);
                    for (c, d) in &b.classes {
                        println!("  {} uses w balls in {} ways (w = 0..)", c.label(), output::list(d));
                    }
                    println!("  combined: {}", output::list(&b.combined));
                    for (ia, iw, t) in &b.terms {
                        println!("  i_alpha={ia} i_omega={iw}: {t}");
                    }
                }
                println!("{}", b.total);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn cmd_snf(path: &Path, out: &Printer) -> Result<ExitCode> {
    let m: IntMatrix = read(path)?.parse()?;
    let d = smith_normal_form(&m);
    let group = mixcay::group_from_matrix(&m).ok();
    if out.json {
        let mut v = serde_json::json!({
            "u": matrix_json(&d.u),
            "s": matrix_json(&d.s),
            "v": matrix_json(&d.v),
            "invariants": d.invariants().iter().map(output::bigint).collect::<Vec<_>>(),
        });
        if let Some((g, images)) = &group {
            v["group"] = g.to_string().into();
            v["images"] = images.iter().map(|x| x.to_string()).collect();
        }
        out.emit_json(&v);
    } else {
        println!("U =\n{}", output::matrix_rows(&d.u));
        println!("S =\n{}", output::matrix_rows(&d.s));
        println!("V =\n{}", output::matrix_rows(&d.v));
        match &group {
            Some((g, images)) => {
                println!("group {g}");
                for (i, x) in images.iter().enumerate() {
                    println!("e{} -> ({x})", i + 1);
                }
            }
            None => println!("singular matrix: the quotient is infinite"),
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn graph_summary(g: &MixedCayleyGraph) -> serde_json::Value {
    serde_json::json!({
        "N": g.order(),
        "r": g.undirected_degree(),
        "z": g.directed_degree(),
        "diameter": g.diameter(),
        "distance_profile": g.distance_profile(),
        "graph": g.to_description(),
    })
}

fn cmd_family(args: FamilyArgs, out: &Printer) -> Result<ExitCode> {
    let f = args.name.build(args.k)?;
    let g = &f.graph;
    let description = g.to_description();
    if let Some(path) = &args.out {
        std::fs::write(path, &description).with_context(|| format!("writing {}", path.display()))?;
    }
    if let Some(path) = &args.dot {
        std::fs::write(path, g.to_dot()?).with_context(|| format!("writing {}", path.display()))?;
    }
    let ok = g.diameter() == f.k && g.order() == f.claimed_order;
    if out.json {
        let mut v = serde_json::json!({
            "family": f.family.name(),
            "claimed_k": f.k,
            "measured_k": g.diameter(),
            "claimed_N": f.claimed_order,
            "certified": ok,
        });
        output::merge(&mut v, graph_summary(g));
        out.emit_json(&v);
    } else {
        if args.out.is_none() {
            print!("{description}");
        }
        println!(
            "# {} k={}: N={} r={} z={} measured diameter {} ({})",
            f.family,
            f.k,
            g.order(),
            g.undirected_degree(),
            g.directed_degree(),
            g.diameter(),
            if ok { "certified" } else { "MISMATCH" }
        );
    }
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(3) })
}

fn cmd_certify(path: &Path, k: Option<u32>, out: &Printer) -> Result<ExitCode> {
    let g = MixedCayleyGraph::from_description(&read(path)?)?;
    let d = g.diameter();
    // The one-vertex graph is the only graph of diameter 0.
    let (profile, bound) = if d == 0 {
        (None, num_bigint::BigUint::from(1u32))
    } else {
        let spec = g.degree_spec(d);
        let bound = mixcay::mac_bound_improved(&spec)?;
        (Some(spec), bound)
    };
    let ok = k.is_none_or(|k| d <= k);
    if out.json {
        let mut v = graph_summary(&g);
        v["order_profile"] = profile.as_ref().map(|p| p.to_string()).into();
        v["improved_bound"] = big(&bound);
        if let Some(k) = k {
            v["k"] = k.into();
            v["certified"] = ok.into();
        }
        out.emit_json(&v);
    } else {
        println!("group {}", g.group());
        println!("N {}", g.order());
        println!("r {}", g.undirected_degree());
        println!("z {}", g.directed_degree());
        println!("diameter {d}");
        println!("distance profile {}", output::list(g.distance_profile()));
        if let Some(p) = &profile {
            println!("order profile {p}");
        }
        println!("improved bound {bound}");
        if let Some(k) = k {
            println!("{}", if ok { format!("diameter <= {k}: ok") } else { format!("diameter > {k}: FAIL") });
        }
    }
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(3) })
}

fn cmd_search(args: SearchArgs, out: &Printer) -> Result<ExitCode> {
    let spec = SearchSpec {
        n_max: args.n_max,
        n_min: args.n_min,
        prune: !args.no_prune,
        all_witnesses: args.all_witnesses,
        cap: args.cap,
        jobs: args.jobs,
        ..SearchSpec::new(args.r_alpha, args.r_omega, args.z_omega, args.k)
    };
    log::info!(
        "searching r_alpha={} r_omega={} z_omega={} k={} (M_AC = {})",
        spec.r_alpha,
        spec.r_omega,
        spec.z_omega,
        spec.k,
        spec.moore_bound()
    );
    let result = search_optimal(&spec)?;
    let witnesses: Vec<_> =
        result.witnesses.iter().map(|w| w.graph().map(|g| graph_summary(&g))).collect::<mixcay::Result<_>>()?;
    if out.json {
        out.emit_json(&serde_json::json!({
            "r_alpha": spec.r_alpha,
            "r_omega": spec.r_omega,
            "z_omega": spec.z_omega,
            "k": spec.k,
            "prune": spec.prune,
            "best_N": result.best_n,
            "pruned_groups": result.pruned_groups,
            "examined_sets": result.examined_sets,
            "witnesses": witnesses,
        }));
    } else {
        match result.best_n {
            Some(n) => println!("best N = {n}"),
            None => println!("no graph found in range"),
        }
        println!("pruned groups {}, examined sets {}", result.pruned_groups, result.examined_sets);
        for w in &witnesses {
            println!("---");
            print!("{}", w["graph"].as_str().unwrap_or_default());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify_all(filter: Option<String>, corrupt_family: Option<Family>, out: &Printer) -> Result<ExitCode> {
    if let Some(f) = &filter {
        if !verify::CRITERIA.iter().any(|c| c.matches(f)) {
            bail!("filter {f:?} selects no criterion");
        }
    }
    let opts = VerifyOptions { filter, corrupt_family };
    let mut reports = Vec::new();
    for c in verify::CRITERIA.iter().filter(|c| opts.filter.as_deref().is_none_or(|f| c.matches(f))) {
        log::info!("criterion {}: {}", c.id, c.name);
        let r = verify::run_criterion(*c, &opts);
        if !out.json {
            println!("{r}");
        }
        reports.push(r);
    }
    let failed = reports.iter().filter(|r| !r.passed).count();
    if out.json {
        let rows: Vec<_> = reports
            .iter()
            .map(|r| {
                serde_json::json!({
                    "id": r.criterion.id,
                    "group": r.criterion.group,
                    "name": r.criterion.name,
                    "passed": r.passed,
                    "detail": r.detail,
                    "seconds": r.elapsed.as_secs_f64(),
                })
            })
            .collect();
        out.emit_json(&serde_json::json!({ "criteria": rows, "failed": failed }));
    } else {
        println!("{} of {} criteria passed", reports.len() - failed, reports.len());
    }
    Ok(if failed == 0 { ExitCode::SUCCESS } else { ExitCode::from(3) })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn general_spec_parsing() {
        assert_eq!(parse_general("r=2 z=0 k=5").unwrap(), (2, 0, 5));
        assert_eq!(parse_general("k=3 z=1 r=2").unwrap(), (2, 1, 3));
        assert!(parse_general("r=2 z=0").is_err());
        assert!(parse_general("r=2 r=3 z=0 k=1").is_err());
        assert!(parse_general("r=2 q=0 k=1").is_err());
    }

    #[test]
    fn cli_definition_is_valid() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
