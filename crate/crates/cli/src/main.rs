use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use jlb_core::catalog::{self, AlgebraName};
use jlb_core::classify::d2::classify_d2_in;
use jlb_core::document::{
    identification_json, report_json, table_report_json, verdict_json, BialgebraDocument,
};
use jlb_core::equivalence::{identify::identify_dual_in, search_witness_auto, SearchRegion};
use jlb_core::tables::{verify_tables, ClassificationRow, SamplePolicy};
use jlb_core::{display, Error, JacobiLieBialgebra, Scalar, StructureTensor};

#[derive(Parser)]
#[command(name = "jlb", version, about = "Exact checks for low-dimensional Jacobi-Lie bialgebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List catalog Lie algebras and their automorphism groups.
    Catalog {
        #[arg(long, value_parser = clap::value_parser!(u8).range(2..=3))]
        dim: Option<u8>,
    },
    /// Check every defining condition of a bialgebra document.
    Verify {
        doc: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Search for an automorphism of g carrying the first document onto the second.
    Equiv {
        doc1: PathBuf,
        doc2: PathBuf,
        /// Grid numerators range over -N..=N.
        #[arg(long, default_value_t = 3)]
        grid: i64,
        /// Largest grid denominator.
        #[arg(long, default_value_t = 2)]
        den: i64,
        #[arg(long)]
        json: bool,
    },
    /// Identify the dual algebra of a document with a catalog algebra.
    Identify {
        doc: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Classify the bialgebra structures over a two-dimensional algebra.
    Classify {
        #[arg(long, default_value_t = 2)]
        dim: usize,
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        json: bool,
    },
    /// Verify the shipped classification tables.
    VerifyTables {
        #[arg(long, value_parser = clap::value_parser!(u32).range(4..=7))]
        table: Option<u32>,
        /// At most this many parameter samples per row.
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long)]
        json: bool,
    },
}

/// Exit status: verification outcome or a usage problem.
enum Failure {
    Negative,
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn load(path: &Path) -> Result<JacobiLieBialgebra, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    BialgebraDocument::parse(&text)
        .and_then(|d| d.to_bialgebra())
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn print_json(v: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("values serialize"));
}

fn verdict(ok: bool) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(Failure::Negative)
    }
}

fn catalog_cmd(dim: Option<u8>) -> Outcome {
    for name in AlgebraName::ALL {
        if dim.is_some_and(|d| usize::from(d) != name.dim()) {
            continue;
        }
        let param = name.has_param().then(|| Scalar::from_int(2));
        let g = catalog::lookup(name, param)?;
        let brackets = tensor_text(&g.tensor, "X");
        let range = name
            .param_constraint()
            .map(|c| format!(" [{c}; shown at a = 2]"))
            .unwrap_or_default();
        println!("{name} (dim {}){range}", name.dim());
        println!("  brackets: {brackets}");
        println!("  Aut: {}", g.automorphisms().describe());
    }
    Ok(())
}

fn verify_cmd(doc: &Path, json: bool) -> Outcome {
    let b = load(doc)?;
    let report = b.verify();
    if json {
        print_json(&report_json(&report));
    } else {
        println!("X0 = {}, phi0 = {}", display::x0(&b.alpha), display::phi0(&b.beta));
        println!("{report}");
    }
    verdict(report.passed())
}

fn equiv_cmd(doc1: &Path, doc2: &Path, region: SearchRegion, json: bool) -> Outcome {
    let (b1, b2) = (load(doc1)?, load(doc2)?);
    if b1.g != b2.g {
        let msg = "the documents have different g; not equivalent";
        if json {
            print_json(&serde_json::json!({ "status": "different_g" }));
        } else {
            println!("{msg}");
        }
        return Err(Failure::Negative);
    }
    let v = search_witness_auto(&b1, &b2, &region)?;
    if json {
        print_json(&verdict_json(&v));
    } else {
        println!("{v}");
    }
    verdict(v.is_equivalent())
}

fn identify_cmd(doc: &Path, json: bool) -> Outcome {
    let b = load(doc)?;
    match identify_dual_in(&b.gstar, &SearchRegion::default()) {
        Ok(id) => {
            if json {
                print_json(&identification_json(&id));
            } else {
                println!("g* is isomorphic to {}", id.algebra.label());
                println!("C = {}", id.c);
            }
            Ok(())
        }
        Err(Error::NoCatalogMatch(why)) => {
            if json {
                print_json(&serde_json::json!({ "algebra": null, "reason": why }));
            } else {
                println!("no catalog match: {why}");
            }
            Err(Failure::Negative)
        }
        Err(e) => Err(e.into()),
    }
}

/// `[X1, X2] = X1, ...` for the nonzero brackets of `t`.
fn tensor_text(t: &StructureTensor, basis: &str) -> String {
    let mut by_pair: BTreeMap<(usize, usize), Vec<(Scalar, String)>> = BTreeMap::new();
    for (i, j, k, v) in t.upper_entries() {
        by_pair
            .entry((i + 1, j + 1))
            .or_default()
            .push((v, format!("{basis}{}", k + 1)));
    }
    if by_pair.is_empty() {
        return "abelian".into();
    }
    by_pair
        .iter()
        .map(|((i, j), terms)| {
            format!("[{basis}{i}, {basis}{j}] = {}", display::linear_combination(terms))
        })
        .collect::<Vec<_>>()
        .join(", ")
}

fn brackets_text(row: &ClassificationRow) -> String {
    let mut by_pair: BTreeMap<(usize, usize), Vec<(String, usize)>> = BTreeMap::new();
    for c in &row.gstar {
        by_pair.entry((c.i, c.j)).or_default().push((c.value.clone(), c.k));
    }
    if by_pair.is_empty() {
        return "abelian".into();
    }
    by_pair
        .iter()
        .map(|((i, j), terms)| {
            let rhs: Vec<String> = terms
                .iter()
                .map(|(v, k)| match v.as_str() {
                    "1" => format!("X~{k}"),
                    "-1" => format!("-X~{k}"),
                    v if v.chars().all(|c| c.is_alphanumeric() || c == '/') => {
                        format!("{v} X~{k}")
                    }
                    v => format!("({v}) X~{k}"),
                })
                .collect();
            format!("[X~{i}, X~{j}] = {}", rhs.join(" + "))
        })
        .collect::<Vec<_>>()
        .join(", ")
}

fn classify_cmd(dim: usize, algebra: &str, json: bool) -> Outcome {
    if dim != 2 {
        return Err(Failure::Usage(format!(
            "classification is available for --dim 2 only, not {dim}"
        )));
    }
    let g = catalog::lookup_str(algebra, None)?;
    let c = classify_d2_in(&g, &SearchRegion::default())?;
    if json {
        let rows = serde_json::to_value(&c.rows).expect("rows serialize");
        print_json(&serde_json::json!({ "log": c.log, "rows": rows }));
        return Ok(());
    }
    for row in &c.rows {
        println!("{}", row.label);
        println!("  {}", brackets_text(row));
        println!("  X0 = {}, phi0 = {}", row.x0, row.phi0);
        if !row.constraints.is_empty() {
            println!("  where {}", row.constraints.join(", "));
        }
    }
    for line in &c.log {
        println!("note: {line}");
    }
    println!("{} row(s)", c.rows.len());
    Ok(())
}

fn verify_tables_cmd(table: Option<u32>, samples: Option<usize>, json: bool) -> Outcome {
    let policy = SamplePolicy {
        limit: samples,
        ..SamplePolicy::default()
    };
    let numbers: Vec<u32> = table.into_iter().collect();
    let report = verify_tables(&numbers, &policy)?;
    if json {
        print_json(&table_report_json(&report));
    } else {
        println!("{report}");
    }
    verdict(report.passed())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Catalog { dim } => catalog_cmd(dim),
        Command::Verify { doc, json } => verify_cmd(&doc, json),
        Command::Equiv {
            doc1,
            doc2,
            grid,
            den,
            json,
        } => equiv_cmd(&doc1, &doc2, SearchRegion::new(grid, den), json),
        Command::Identify { doc, json } => identify_cmd(&doc, json),
        Command::Classify { dim, algebra, json } => classify_cmd(dim, &algebra, json),
        Command::VerifyTables {
            table,
            samples,
            json,
        } => verify_tables_cmd(table, samples, json),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Negative) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
