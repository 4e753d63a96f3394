use std::io::Read;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use primgraph::criticality::{critical_vertices, indecomposability_graph, support_shape};
use primgraph::families::*;
use primgraph::harness::{roundtrip_check, selftest, survey_exhaustive, survey_random, AuditConfig};
use primgraph::modular::{find_nontrivial_interval, is_indecomposable, nontrivial_intervals, SUBSET_ORACLE_BOUND};
use primgraph::{Classifier, Digraph, VertexSet};

#[derive(Parser)]
#[command(
    name = "primgraph",
    version,
    about = "Indecomposable digraphs, critical vertices and (-1)-critical families"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dg,
    Dot,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a named graph or every member of a class.
    Gen {
        #[command(subcommand)]
        family: GenFamily,
        #[arg(long, value_enum, default_value = "dg", global = true)]
        format: Format,
    },
    /// Indecomposability, intervals and critical vertices of a graph file (`-` for stdin).
    Check {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Verdict and family match as JSON.
    Classify { file: PathBuf },
    /// Indecomposability graph as DOT, non-critical vertices highlighted.
    Ig { file: PathBuf },
    /// Exhaustive or sampled audit survey; JSON lines then a summary record.
    Survey {
        #[arg(long)]
        order: usize,
        #[arg(long, conflicts_with_all = ["samples", "seed"])]
        exhaustive: bool,
        #[arg(long, default_value_t = 10_000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        workers: Option<usize>,
        /// Allow exhaustive order 6 (about 10^9 graphs).
        #[arg(long)]
        long_run: bool,
        /// Skip the one-pair mutants of family members.
        #[arg(long)]
        no_mutants: bool,
        /// Skip the complement/dual symmetry audit.
        #[arg(long)]
        no_symmetry: bool,
    },
    /// Generate members of the given orders and classify each (with complement and dual).
    Roundtrip {
        /// Inclusive range such as `7..10`.
        #[arg(long, default_value = "7..10")]
        orders: String,
    },
    /// Run the audits on built-in fixtures.
    Selftest,
}

#[derive(Subcommand)]
enum GenFamily {
    T {
        n: usize,
    },
    U {
        n: usize,
    },
    V {
        n: usize,
    },
    R {
        n: usize,
    },
    H {
        p: usize,
    },
    Q5,
    F {
        m: usize,
        ext: usize,
    },
    G {
        n: usize,
        k: usize,
        #[arg(long)]
        alpha: bool,
    },
    Gprime {
        n: usize,
        k: usize,
    },
    Gdprime {
        n: usize,
        k: usize,
        ext: usize,
    },
    /// Branch lengths, odd one first.
    HstarOdd {
        #[arg(required = true, num_args = 3..)]
        branches: Vec<usize>,
    },
    HstarEven {
        #[arg(required = true, num_args = 3..)]
        branches: Vec<usize>,
        #[arg(long)]
        gamma: bool,
    },
    /// Every family member of one order, closed under complement and dual.
    Members {
        order: usize,
    },
}

fn generate(f: &GenFamily) -> Result<Vec<FamilyMember>> {
    Ok(match f {
        GenFamily::T { n } => vec![member_tournament(FamilyId::T, *n)?],
        GenFamily::U { n } => vec![member_tournament(FamilyId::U, *n)?],
        GenFamily::V { n } => vec![member_tournament(FamilyId::V, *n)?],
        GenFamily::R { n } => vec![member_r(*n)?],
        GenFamily::H { p } => vec![member_h(*p)?],
        GenFamily::Q5 => vec![member_q5()],
        GenFamily::F { m, ext } => enum_class_f(*m, *ext)?,
        GenFamily::G { n, k, alpha } => enum_class_g(*n, *k, *alpha)?,
        GenFamily::Gprime { n, k } => enum_class_gprime(*n, *k)?,
        GenFamily::Gdprime { n, k, ext } => enum_class_gdprime(*n, *k, *ext)?,
        GenFamily::HstarOdd { branches } => enum_hstar_odd(branches)?,
        GenFamily::HstarEven { branches, gamma } => enum_hstar_even(branches, *gamma)?,
        GenFamily::Members { order } => enum_family_members(*order)?,
    })
}

fn read_graph(path: &PathBuf) -> Result<Digraph> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        s
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    Digraph::parse_dg(&text).with_context(|| format!("parsing {}", path.display()))
}

fn print_json(v: &impl Serialize) -> Result<()> {
    println!("{}", serde_json::to_string(v)?);
    Ok(())
}

fn parse_orders(s: &str) -> Result<RangeInclusive<usize>> {
    let s = s.trim();
    if let Some((a, b)) = s.split_once("..") {
        let b = b.strip_prefix('=').unwrap_or(b);
        let (a, b): (usize, usize) = (a.parse()?, b.parse()?);
        return Ok(a..=b);
    }
    let n: usize = s.parse().with_context(|| format!("bad order range {s:?}"))?;
    Ok(n..=n)
}

fn cmd_check(g: &Digraph, as_json: bool) -> Result<()> {
    let ind = is_indecomposable(g);
    let intervals: Vec<VertexSet> = if g.order() <= SUBSET_ORACLE_BOUND {
        nontrivial_intervals(g)?
    } else {
        find_nontrivial_interval(g).into_iter().collect()
    };
    let report = ind.then(|| critical_vertices(g)).transpose()?;
    if as_json {
        return print_json(&json!({
            "order": g.order(),
            "indecomposable": ind,
            "intervals": intervals,
            "criticality": report,
        }));
    }
    println!("order {}", g.order());
    println!("indecomposable {ind}");
    if !intervals.is_empty() {
        let shown: Vec<String> = intervals.iter().take(20).map(|x| x.to_string()).collect();
        println!("nontrivial intervals ({}): {}", intervals.len(), shown.join(" "));
    }
    if let Some(r) = report {
        println!("critical {}", r.critical);
        println!("non-critical {}", r.noncritical);
        println!("defect {}", r.defect);
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.cmd {
        Cmd::Gen { family, format } => {
            let members = generate(&family)?;
            for (i, m) in members.iter().enumerate() {
                match format {
                    Format::Dg => {
                        if i > 0 {
                            println!();
                        }
                        print!("{}", m.graph.to_dg());
                    }
                    Format::Dot => {
                        let hl = m.claims.noncritical.map(VertexSet::singleton).unwrap_or_default();
                        print!("{}", m.graph.to_dot(&format!("m{i}"), hl));
                    }
                    Format::Json => print_json(m)?,
                }
            }
        }
        Cmd::Check { file, json } => cmd_check(&read_graph(&file)?, json)?,
        Cmd::Classify { file } => print_json(&Classifier::new().classify(&read_graph(&file)?))?,
        Cmd::Ig { file } => {
            let g = read_graph(&file)?;
            let r = critical_vertices(&g)?;
            let h = indecomposability_graph(&g)?;
            let (sup, shape) = support_shape(&h);
            println!(
                "// shape {} support {:?} isolated {}",
                shape.kind,
                sup.component.map(|c| c.to_string()),
                sup.isolated
            );
            print!("{}", h.to_dot("ig", r.noncritical));
        }
        Cmd::Survey {
            order,
            exhaustive,
            samples,
            seed,
            workers,
            long_run,
            no_mutants,
            no_symmetry,
        } => {
            let cfg = AuditConfig {
                symmetry: !no_symmetry,
                ..AuditConfig::default()
            };
            let report = if exhaustive {
                survey_exhaustive(order, &cfg, workers, long_run)?
            } else {
                survey_random(order, samples, seed, &cfg, workers, !no_mutants)?
            };
            for f in &report.finds {
                print_json(&json!({"record": "find", "find": f}))?;
            }
            for f in &report.failures {
                print_json(&json!({"record": "failure", "failure": f}))?;
            }
            let mut summary = serde_json::to_value(&report)?;
            let obj = summary.as_object_mut().unwrap();
            obj.remove("finds");
            obj.remove("failures");
            obj.insert("record".into(), "summary".into());
            obj.insert("passed".into(), report.passed().into());
            print_json(&summary)?;
            if !report.passed() {
                return Ok(ExitCode::FAILURE);
            }
        }
        Cmd::Roundtrip { orders } => {
            let range = parse_orders(&orders)?;
            if *range.end() > FAMILY_ORDER_BOUND || (*range.start() < 7 && !range.is_empty()) {
                bail!("orders must lie in 7..={FAMILY_ORDER_BOUND}");
            }
            let report = roundtrip_check(range)?;
            for o in &report.orders {
                print_json(o)?;
            }
            print_json(&json!({"record": "summary", "passed": report.passed()}))?;
            if !report.passed() {
                return Ok(ExitCode::FAILURE);
            }
        }
        Cmd::Selftest => {
            let results = selftest();
            let failed = results.iter().filter(|(_, ok)| !ok).count();
            for (name, ok) in &results {
                println!("{} {name}", if *ok { "PASS" } else { "FAIL" });
            }
            println!("{}/{} checks passed", results.len() - failed, results.len());
            if failed > 0 {
                return Ok(ExitCode::FAILURE);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
