use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use metaclust_core::io::RunConfig;
use metaclust_core::{pipeline, CriterionConfig, CriterionMode, ErrorKind};

const EXIT_INPUT: u8 = 2;
const EXIT_CONFIG: u8 = 3;
const EXIT_IO: u8 = 4;

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Criterion {
    /// Heaviest edge first, flagged when above mean + std of the tree.
    Std,
    /// Zahn's local inconsistency test, falling back to the heaviest edge.
    Zahn,
}

/// Split a CSV point set into k EMST subtree clusters, then build a dendrogram
/// and central cluster over the cluster centers.
#[derive(Debug, Parser)]
#[command(name = "metaclust", version)]
struct Args {
    /// CSV file of points, one per row, optional header row.
    #[arg(long)]
    input: PathBuf,

    /// Number of clusters.
    #[arg(long)]
    k: usize,

    #[arg(long, value_enum, default_value_t = Criterion::Std)]
    criterion: Criterion,

    #[arg(long, default_value_t = 2.0)]
    zahn_c: f64,

    #[arg(long, default_value_t = 2.0)]
    zahn_f: f64,

    #[arg(long, default_value_t = 2)]
    zahn_depth: usize,

    /// Output directory, created if missing.
    #[arg(long)]
    out: PathBuf,

    /// Also write SVG figures.
    #[arg(long)]
    svg: bool,
}

impl Args {
    fn into_config(self) -> RunConfig {
        RunConfig {
            input_path: self.input,
            k: self.k,
            criterion: CriterionConfig {
                mode: match self.criterion {
                    Criterion::Std => CriterionMode::StdThresholdOrLongest,
                    Criterion::Zahn => CriterionMode::Zahn,
                },
                zahn_c: self.zahn_c,
                zahn_f: self.zahn_f,
                zahn_depth: self.zahn_depth,
            },
            output_dir: self.out,
            emit_svg: self.svg,
        }
    }
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(args) => args,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_CONFIG)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match pipeline::run(&args.into_config()) {
        Ok(files) => {
            for f in files {
                println!("{}", f.display());
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e.kind() {
                ErrorKind::Input => EXIT_INPUT,
                ErrorKind::Config => EXIT_CONFIG,
                ErrorKind::Io => EXIT_IO,
            })
        }
    }
}
