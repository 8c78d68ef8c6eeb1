use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use normlattice::sweep::{run_sweep, SweepCheck};
use normlattice::{build_from_spec, load_cayley_table, verify_bijection, zm_search, Analysis};

mod dot;

const DOT_MAX_ORDER: usize = 200;

#[derive(Parser)]
#[command(
    name = "normlattice",
    version,
    about = "Subgroup lattices and normalizer sets of small finite groups"
)]
struct Cli {
    /// Emit JSON instead of CSV for `sweep` and `zm`.
    #[arg(long, global = true)]
    json: bool,
    /// Suppress verdicts and notes on standard error.
    #[arg(long, short, global = true)]
    quiet: bool,
    /// Worker threads, 0 for one per core.
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one group and print its record as JSON.
    Analyze {
        /// Group spec such as `A4`, `Z2 x Z2`, `ZM(7,3,2)`.
        #[arg(required_unless_present = "file", conflicts_with = "file")]
        spec: Option<String>,
        /// Cayley table file instead of a spec.
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// Analyze every built-in catalog group up to an order and compare with
    /// the predicted classification.
    Sweep {
        #[arg(long)]
        max_order: usize,
        #[arg(long, value_enum)]
        check: Check,
        /// Restrict a deficiency sweep to one value of k.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Search non-abelian ZM(m,n,r) triples with a given deficiency.
    Zm {
        #[arg(long)]
        max_mn: u64,
        #[arg(long)]
        k: usize,
        /// Keep only triples with tau(m) + tau(n) at most this bound.
        #[arg(long)]
        tau_bound: Option<u64>,
        /// Check each hit against the brute-force lattice.
        #[arg(long)]
        verify_bijection: bool,
    },
    /// Print the Hasse diagram of the subgroup lattice in DOT format.
    Dot {
        spec: String,
        /// Fill the subgroups that occur as normalizers.
        #[arg(long)]
        color_normalizers: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Check {
    Density,
    Deficiency,
}

/// Parse and range errors exit with 2, failed verdicts with 1.
enum Outcome {
    Pass,
    Fail,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads)
        .build_global()
        .map_err(|e| anyhow!("configuring the thread pool: {e}"))?;
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let outcome = match &cli.command {
        Command::Analyze { spec, file } => {
            let group = match (spec, file) {
                (_, Some(path)) => load_cayley_table(path)?,
                (Some(spec), None) => build_from_spec(spec)?,
                (None, None) => unreachable!("clap requires one of them"),
            };
            let record = Analysis::new(&group).record(&group);
            serde_json::to_writer_pretty(&mut out, &record)?;
            writeln!(out)?;
            Outcome::Pass
        }
        Command::Sweep {
            max_order,
            check,
            k,
        } => sweep(cli, &mut out, *max_order, *check, *k)?,
        Command::Zm {
            max_mn,
            k,
            tau_bound,
            verify_bijection,
        } => zm(cli, &mut out, *max_mn, *k, *tau_bound, *verify_bijection)?,
        Command::Dot {
            spec,
            color_normalizers,
        } => {
            let group = build_from_spec(spec)?;
            if group.order() > DOT_MAX_ORDER {
                bail!(
                    "order {} exceeds the dot limit of {DOT_MAX_ORDER}",
                    group.order()
                );
            }
            let analysis = Analysis::new(&group);
            out.write_all(
                dot::render(
                    &group,
                    &analysis.lattice,
                    &analysis.report,
                    *color_normalizers,
                )
                .as_bytes(),
            )?;
            Outcome::Pass
        }
    };
    out.flush()?;
    Ok(outcome)
}

#[derive(Serialize)]
struct SweepCsvRow<'a> {
    label: &'a str,
    order: usize,
    lattice_size: usize,
    normalizer_count: usize,
    deficiency: usize,
    dense: bool,
    expected: &'a str,
    #[serde(rename = "match")]
    matches: bool,
}

fn sweep(
    cli: &Cli,
    out: &mut impl Write,
    max_order: usize,
    check: Check,
    k: Option<usize>,
) -> Result<Outcome> {
    let check = match (check, k) {
        (Check::Density, Some(_)) => bail!("--k only applies to --check deficiency"),
        (Check::Density, None) => SweepCheck::Density,
        (Check::Deficiency, k) => SweepCheck::Deficiency(k),
    };
    let outcome = run_sweep(max_order, check)?;
    if cli.json {
        serde_json::to_writer_pretty(&mut *out, &outcome)?;
        writeln!(out)?;
    } else {
        let mut writer = csv::WriterBuilder::new().from_writer(&mut *out);
        for row in &outcome.rows {
            let r = &row.record;
            writer.serialize(SweepCsvRow {
                label: &r.label,
                order: r.order,
                lattice_size: r.lattice_size,
                normalizer_count: r.normalizer_count,
                deficiency: r.deficiency,
                dense: r.dense,
                expected: &row.expected,
                matches: row.matches,
            })?;
        }
        if outcome.rows.is_empty() {
            writer.write_record([
                "label",
                "order",
                "lattice_size",
                "normalizer_count",
                "deficiency",
                "dense",
                "expected",
                "match",
            ])?;
        }
        writer.flush()?;
    }
    let mismatches: Vec<_> = outcome.mismatches().collect();
    if !cli.quiet {
        for row in &mismatches {
            let r = &row.record;
            let observed = match check {
                SweepCheck::Density => format!("dense = {}", r.dense),
                SweepCheck::Deficiency(_) => format!("k = {}", r.deficiency),
            };
            eprintln!(
                "mismatch: {}: {observed}, expected {}",
                r.label, row.expected
            );
        }
        eprintln!(
            "verdict: {} ({} rows, {} mismatches; {} catalog groups of order <= {max_order}, \
             checked against the built-in catalog only)",
            if mismatches.is_empty() {
                "PASS"
            } else {
                "FAIL"
            },
            outcome.rows.len(),
            mismatches.len(),
            outcome.catalog_size,
        );
    }
    Ok(if mismatches.is_empty() {
        Outcome::Pass
    } else {
        Outcome::Fail
    })
}

#[derive(Serialize)]
struct ZmRow {
    m: u64,
    n: u64,
    r: u64,
    d: u64,
    order: u64,
    lattice_size: usize,
    deficiency: usize,
    tau_sum: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    bijection: Option<&'static str>,
}

fn zm(
    cli: &Cli,
    out: &mut impl Write,
    max_mn: u64,
    k: usize,
    tau_bound: Option<u64>,
    verify: bool,
) -> Result<Outcome> {
    let hits = zm_search(max_mn, k, tau_bound)?;
    let mut failed = 0;
    let mut rows = Vec::with_capacity(hits.len());
    for hit in &hits {
        let t = hit.triple;
        let bijection = if verify {
            let report = verify_bijection(&t)?;
            if !report.pass {
                failed += 1;
                if !cli.quiet {
                    eprintln!(
                        "bijection failed for {t}: {}",
                        report.first_discrepancy.as_deref().unwrap_or("unknown")
                    );
                }
            }
            Some(if report.pass { "pass" } else { "fail" })
        } else {
            None
        };
        rows.push(ZmRow {
            m: t.m,
            n: t.n,
            r: t.r,
            d: t.d,
            order: t.order(),
            lattice_size: hit.lattice_size,
            deficiency: hit.deficiency,
            tau_sum: hit.tau_sum,
            bijection,
        });
    }
    if cli.json {
        serde_json::to_writer_pretty(&mut *out, &rows)?;
        writeln!(out)?;
    } else {
        let mut writer = csv::WriterBuilder::new().from_writer(&mut *out);
        if rows.is_empty() {
            let mut header = vec![
                "m",
                "n",
                "r",
                "d",
                "order",
                "lattice_size",
                "deficiency",
                "tau_sum",
            ];
            if verify {
                header.push("bijection");
            }
            writer.write_record(header)?;
        }
        for row in &rows {
            writer.serialize(row)?;
        }
        writer.flush()?;
    }
    if !cli.quiet {
        eprintln!("{} triples with mn <= {max_mn} and k = {k}", rows.len());
        if verify {
            eprintln!(
                "verdict: {} ({failed} bijection failures)",
                if failed == 0 { "PASS" } else { "FAIL" }
            );
        }
    }
    Ok(if failed == 0 {
        Outcome::Pass
    } else {
        Outcome::Fail
    })
}
