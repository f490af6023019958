//! Command-line front end: flag parsing, document assembly, rendering.
//!
//! Every subcommand emits one document on standard output, as JSON
//! (default) or a plain-text table. Exit codes: 0 when all requested
//! verdicts hold, 1 when at least one check failed (witnesses are in the
//! document), 2 on usage or input errors.
//!
//! Output is byte-identical between runs with the same flags: reports
//! carry wall-clock timings only when `--timings` is passed.

pub mod docs;
pub mod render;

use std::io::Write;
use std::path::PathBuf;

use anyhow::Context as _;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use grasstilt_core::{
    bott, enumerate_summands, example_grass24_analysis, kapranov_decomposition, lr_expand,
    run_all_checks, schur_dim, summand_rank, verify_generation_order, verify_prop3_sweep,
    verify_tilting_ext, Error, GLWeight, GrassContext, Partition, PartitionBox,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Parser, Debug)]
#[command(
    name = "grasstilt",
    version,
    about = "Exact Schur calculus and characteristic-zero cohomology on Grassmannians"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Write the document to FILE atomically instead of standard output
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,

    /// Worker threads for pair- and case-level checks
    #[arg(long, global = true, default_value_t = 1)]
    pub parallelism: usize,

    /// Include wall-clock timings in reports (breaks byte-level
    /// reproducibility between runs)
    #[arg(long, global = true)]
    pub timings: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List every partition fitting in a box, lex-descending
    Box {
        #[arg(long)]
        rows: u32,
        #[arg(long)]
        cols: u32,
    },
    /// Littlewood-Richardson product of two partitions
    Lr {
        /// First factor, comma-separated descending parts (e.g. 3,1)
        #[arg(long)]
        a: Partition,
        /// Second factor
        #[arg(long)]
        b: Partition,
        /// Drop result partitions with more rows than this
        #[arg(long)]
        rank_bound: Option<u32>,
    },
    /// Dimension of the Schur module L_gamma of a rank-n space
    Dim {
        #[arg(long)]
        gamma: Partition,
        #[arg(long)]
        n: u32,
    },
    /// Cohomology of the homogeneous bundle with the given weight
    Bott {
        #[arg(long)]
        l: u32,
        #[arg(long)]
        m: u32,
        /// m integers, Q-block then R-block, e.g. "1,-1|0,0" (the block
        /// separator is optional)
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
    /// Enumerate the summand sequences of the bundle and their ranks
    Summands {
        #[arg(long)]
        l: u32,
        #[arg(long)]
        m: u32,
    },
    /// Pairwise Ext-vanishing between summands, with the Hom matrix
    VerifyExt {
        #[arg(long)]
        l: u32,
        #[arg(long)]
        m: u32,
        /// Highest cohomological degree to check (defaults to l*(m-l))
        #[arg(long)]
        max_degree: Option<u32>,
    },
    /// Vanishing sweep for dualized exterior products times L_gamma(Q)
    VerifyProp3 {
        #[arg(long)]
        l: u32,
        #[arg(long)]
        m: u32,
        /// gamma ranges over the box (l, gamma_sweep * (m-l))
        #[arg(long, default_value_t = 2)]
        gamma_sweep: u32,
    },
    /// Lexicographic generation order over the box
    VerifyGeneration {
        #[arg(long)]
        l: u32,
        #[arg(long)]
        m: u32,
    },
    /// Characteristic-zero decomposition and box-support check
    Kapranov {
        #[arg(long)]
        l: u32,
        #[arg(long)]
        m: u32,
    },
    /// The fixed Grass(2,4) example computations
    #[command(name = "example-2-4")]
    Example24,
    /// Run every verifier and emit one aggregate document
    ReportAll {
        #[arg(long)]
        l: u32,
        #[arg(long)]
        m: u32,
        #[arg(long, default_value_t = 2)]
        gamma_sweep: u32,
    },
}

/// What a command run produced: the document text and whether every
/// requested verdict held.
pub struct RunOutput {
    pub document: String,
    pub verified: bool,
}

/// Exit code contract: 0 all verified, 1 a check failed, 2 usage error.
pub fn exit_code(outcome: &Result<RunOutput, anyhow::Error>) -> u8 {
    match outcome {
        Ok(output) if output.verified => 0,
        Ok(_) => 1,
        Err(_) => 2,
    }
}

/// Keeps hook-content products at desk scale and far away from any
/// fixed-width conversion.
const MAX_WEIGHT_ENTRY: i64 = 100_000;

fn parse_weight(ctx: &GrassContext, literal: &str) -> Result<GLWeight, Error> {
    let normalized = literal.replace('|', ",");
    let mut entries = Vec::new();
    for piece in normalized.split(',') {
        let piece = piece.trim();
        if piece.is_empty() {
            continue;
        }
        let value = piece.parse::<i64>().map_err(|e| Error::WeightLiteral {
            literal: literal.to_owned(),
            reason: e.to_string(),
        })?;
        if value.abs() > MAX_WEIGHT_ENTRY {
            return Err(Error::WeightLiteral {
                literal: literal.to_owned(),
                reason: format!("entry {value} outside +/-{MAX_WEIGHT_ENTRY}"),
            });
        }
        entries.push(value);
    }
    GLWeight::new(ctx, entries)
}

fn document<T: Serialize>(cli: &Cli, value: &T, table: String) -> anyhow::Result<String> {
    Ok(match cli.format {
        Format::Json => {
            let mut json =
                serde_json::to_string_pretty(value).context("serializing the document")?;
            json.push('\n');
            json
        }
        Format::Table => table,
    })
}

/// Builds the document for the parsed command line.
pub fn run(cli: &Cli) -> anyhow::Result<RunOutput> {
    let parallelism = cli.parallelism.max(1);
    match &cli.command {
        Command::Box { rows, cols } => {
            let doc = docs::BoxDoc::new(PartitionBox::new(*rows, *cols));
            Ok(RunOutput {
                document: document(cli, &doc, render::box_table(&doc))?,
                verified: true,
            })
        }
        Command::Lr { a, b, rank_bound } => {
            let doc = docs::LrDoc {
                a: a.clone(),
                b: b.clone(),
                rank_bound: *rank_bound,
                product: lr_expand(a, b, *rank_bound),
            };
            Ok(RunOutput {
                document: document(cli, &doc, render::lr_table(&doc))?,
                verified: true,
            })
        }
        Command::Dim { gamma, n } => {
            let doc = docs::DimDoc {
                partition: gamma.clone(),
                rank: *n,
                dimension: schur_dim(gamma, *n),
            };
            Ok(RunOutput {
                document: document(cli, &doc, render::dim_table(&doc))?,
                verified: true,
            })
        }
        Command::Bott { l, m, weight } => {
            let ctx = GrassContext::new(*l, *m)?;
            let w = parse_weight(&ctx, weight)?;
            let doc = docs::BottDoc {
                context: ctx,
                weight: w.entries(),
                table: bott(&ctx, &w),
            };
            Ok(RunOutput {
                document: document(cli, &doc, render::bott_table(&doc))?,
                verified: true,
            })
        }
        Command::Summands { l, m } => {
            let ctx = GrassContext::new(*l, *m)?;
            let sequences = enumerate_summands(&ctx);
            let ranks: Vec<_> = sequences.iter().map(|s| summand_rank(&ctx, s)).collect();
            let doc = docs::SummandsDoc {
                context: ctx,
                count: sequences.len(),
                total_rank: ranks.iter().sum(),
                sequences,
                ranks,
            };
            Ok(RunOutput {
                document: document(cli, &doc, render::summands_table(&doc))?,
                verified: true,
            })
        }
        Command::VerifyExt { l, m, max_degree } => {
            let ctx = GrassContext::new(*l, *m)?;
            let mut report = verify_tilting_ext(&ctx, *max_degree, parallelism);
            if !cli.timings {
                report = report.without_timing();
            }
            let verified = report.verdict.is_verified();
            Ok(RunOutput {
                document: document(cli, &report, render::ext_table(&report))?,
                verified,
            })
        }
        Command::VerifyProp3 { l, m, gamma_sweep } => {
            let ctx = GrassContext::new(*l, *m)?;
            let mut report = verify_prop3_sweep(&ctx, *gamma_sweep, parallelism);
            if !cli.timings {
                report = report.without_timing();
            }
            let verified = report.verdict.is_verified();
            Ok(RunOutput {
                document: document(cli, &report, render::prop3_table(&report))?,
                verified,
            })
        }
        Command::VerifyGeneration { l, m } => {
            let ctx = GrassContext::new(*l, *m)?;
            let mut report = verify_generation_order(&ctx);
            if !cli.timings {
                report = report.without_timing();
            }
            let verified = report.verdict.is_verified();
            Ok(RunOutput {
                document: document(cli, &report, render::generation_table(&report))?,
                verified,
            })
        }
        Command::Kapranov { l, m } => {
            let ctx = GrassContext::new(*l, *m)?;
            let mut report = kapranov_decomposition(&ctx);
            if !cli.timings {
                report = report.without_timing();
            }
            let verified = report.verdict.is_verified();
            Ok(RunOutput {
                document: document(cli, &report, render::kapranov_table(&report))?,
                verified,
            })
        }
        Command::Example24 => {
            let mut report = example_grass24_analysis();
            if !cli.timings {
                report = report.without_timing();
            }
            let verified = report.verdict.is_verified();
            Ok(RunOutput {
                document: document(cli, &report, render::example_table(&report))?,
                verified,
            })
        }
        Command::ReportAll { l, m, gamma_sweep } => {
            let ctx = GrassContext::new(*l, *m)?;
            let mut report = run_all_checks(&ctx, *gamma_sweep, parallelism);
            if !cli.timings {
                report = report.without_timing();
            }
            let verified = report.all_verified();
            Ok(RunOutput {
                document: document(cli, &report, render::aggregate_table(&report))?,
                verified,
            })
        }
    }
}

/// Sends the document to `--out` (atomically, write-then-rename) or to
/// standard output.
pub fn deliver(cli: &Cli, output: &RunOutput) -> anyhow::Result<()> {
    match &cli.out {
        Some(path) => {
            let dir = match path.parent() {
                Some(parent) if !parent.as_os_str().is_empty() => parent.to_path_buf(),
                _ => PathBuf::from("."),
            };
            let mut tmp = tempfile::NamedTempFile::new_in(&dir)
                .with_context(|| format!("creating a temporary file in {}", dir.display()))?;
            tmp.write_all(output.document.as_bytes())
                .context("writing the document")?;
            tmp.persist(path)
                .with_context(|| format!("renaming into {}", path.display()))?;
            eprintln!("wrote {}", path.display());
            Ok(())
        }
        None => {
            print!("{}", output.document);
            Ok(())
        }
    }
}
