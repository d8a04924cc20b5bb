//! File formats: CSV point input, and the result files written for a run.

mod newick;
mod svg;

use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::divisive::{ClusteringResult, RemovedEdge};
use crate::error::{Error, Result};
use crate::meta::MetaResult;
use crate::model::{CriterionConfig, Dataset, Dendrogram, Edge, Point};

pub use newick::to_newick;
pub use svg::{dendrogram_svg, scatter_svg};

pub const ASSIGNMENTS_FILE: &str = "assignments.csv";
pub const CLUSTERS_FILE: &str = "clusters.json";
pub const DENDROGRAM_FILE: &str = "dendrogram.json";
pub const NEWICK_FILE: &str = "dendrogram.newick";
pub const META_FILE: &str = "meta.json";
pub const SCATTER_SVG_FILE: &str = "clusters.svg";
pub const DENDROGRAM_SVG_FILE: &str = "dendrogram.svg";

/// Settings for one batch run.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub input_path: PathBuf,
    pub k: usize,
    pub criterion: CriterionConfig,
    pub output_dir: PathBuf,
    pub emit_svg: bool,
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.k < 1 {
            return Err(Error::Config("k must be at least 1".into()));
        }
        self.criterion.validate()
    }
}

pub fn read_points_csv(path: impl AsRef<Path>) -> Result<Dataset> {
    let path = path.as_ref();
    let mut text = String::new();
    fs::File::open(path)
        .and_then(|mut f| f.read_to_string(&mut text))
        .map_err(|e| Error::io(path, e))?;
    parse_points_csv(&text, path)
}

/// Parses comma-separated rows of numbers. A first row containing any
/// non-numeric field is taken as a header and skipped.
pub fn parse_points_csv(text: &str, source: impl AsRef<Path>) -> Result<Dataset> {
    let source = source.as_ref();
    let fail = |line: u64, message: String| Error::Parse {
        path: source.to_path_buf(),
        line,
        message,
    };

    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());

    let mut points = Vec::new();
    let mut dimension = None;
    for (row, record) in reader.records().enumerate() {
        let record = record.map_err(|e| {
            let line = e.position().map_or(0, |p| p.line());
            fail(line, e.to_string())
        })?;
        let line = record.position().map_or(row as u64 + 1, |p| p.line());
        let parsed: Vec<Option<f64>> = record.iter().map(|f| f.parse::<f64>().ok()).collect();
        if row == 0 && parsed.iter().any(Option::is_none) {
            continue;
        }
        let mut coords = Vec::with_capacity(parsed.len());
        for (field, value) in record.iter().zip(&parsed) {
            match value {
                Some(v) if v.is_finite() => coords.push(*v),
                Some(_) => return Err(fail(line, format!("non-finite value {field:?}"))),
                None => return Err(fail(line, format!("not a number: {field:?}"))),
            }
        }
        let expected = *dimension.get_or_insert(coords.len());
        if coords.len() != expected {
            return Err(fail(
                line,
                format!("ragged row: expected {expected} values, found {}", coords.len()),
            ));
        }
        points.push(Point::new(coords).map_err(|e| fail(line, e.to_string()))?);
    }
    if points.is_empty() {
        return Err(fail(1, "no data rows".into()));
    }
    Dataset::new(points)
}

/// Serializes a dataset back to headerless CSV.
pub fn points_to_csv(dataset: &Dataset) -> String {
    let mut out = String::new();
    for p in dataset.points() {
        let row: Vec<String> = p.coords().iter().map(|c| c.to_string()).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

#[derive(Serialize)]
struct ClusterEntry<'a> {
    id: usize,
    size: usize,
    members: &'a [usize],
    center_index: usize,
    center: &'a Point,
    radius: f64,
    diameter: f64,
    variance: f64,
}

#[derive(Serialize)]
struct ClustersDoc<'a> {
    point_count: usize,
    dimension: usize,
    k: usize,
    criterion: &'static str,
    edge_mean: Option<f64>,
    edge_std: Option<f64>,
    dataset_variance: f64,
    compactness: f64,
    compactness_degenerate: bool,
    clusters: Vec<ClusterEntry<'a>>,
    removed_edges: &'a [RemovedEdge],
}

#[derive(Serialize)]
struct MetaDoc<'a> {
    central_cluster: usize,
    meta_radius: f64,
    meta_edges: &'a [Edge],
}

pub fn assignments_csv(result: &ClusteringResult) -> String {
    let mut out = String::from("point_index,cluster_id\n");
    for (i, id) in result.assignments().into_iter().enumerate() {
        out.push_str(&format!("{i},{id}\n"));
    }
    out
}

pub fn clusters_json(dataset: &Dataset, result: &ClusteringResult, config: &CriterionConfig) -> String {
    let clusters = result
        .clusters
        .iter()
        .zip(&result.reports)
        .zip(&result.centers)
        .enumerate()
        .map(|(id, ((c, r), center))| ClusterEntry {
            id,
            size: r.size,
            members: c.members(),
            center_index: r.center_index,
            center,
            radius: r.radius,
            diameter: r.diameter,
            variance: r.variance,
        })
        .collect();
    let doc = ClustersDoc {
        point_count: dataset.len(),
        dimension: dataset.dimension(),
        k: result.k(),
        criterion: match config.mode {
            crate::model::CriterionMode::StdThresholdOrLongest => "std",
            crate::model::CriterionMode::Zahn => "zahn",
        },
        edge_mean: result.edge_stats.map(|s| s.mean_weight),
        edge_std: result.edge_stats.map(|s| s.std_weight),
        dataset_variance: result.dataset_variance,
        compactness: result.compactness.value,
        compactness_degenerate: result.compactness.degenerate,
        clusters,
        removed_edges: &result.removed_edges,
    };
    pretty(&doc)
}

pub fn dendrogram_json(dendrogram: &Dendrogram) -> String {
    pretty(dendrogram)
}

pub fn meta_json(meta: &MetaResult) -> String {
    pretty(&MetaDoc {
        central_cluster: meta.central_cluster,
        meta_radius: meta.meta_radius,
        meta_edges: meta.meta_tree.edges(),
    })
}

fn pretty<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

/// Writes `contents` to `dir/name` through a temporary file and a rename.
fn write_atomic(dir: &Path, name: &str, contents: &str) -> Result<PathBuf> {
    let target = dir.join(name);
    let tmp = dir.join(format!(".{name}.tmp"));
    fs::write(&tmp, contents).map_err(|e| Error::io(&tmp, e))?;
    fs::rename(&tmp, &target).map_err(|e| Error::io(&target, e))?;
    Ok(target)
}

/// Writes every result file for a run into `config.output_dir` and returns
/// the paths written, in order.
pub fn write_outputs(
    dataset: &Dataset,
    result: &ClusteringResult,
    meta: &MetaResult,
    config: &RunConfig,
) -> Result<Vec<PathBuf>> {
    let dir = config.output_dir.as_path();
    fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;

    let mut files = vec![
        (ASSIGNMENTS_FILE, assignments_csv(result)),
        (CLUSTERS_FILE, clusters_json(dataset, result, &config.criterion)),
        (DENDROGRAM_FILE, dendrogram_json(&meta.dendrogram)),
        (NEWICK_FILE, to_newick(&meta.dendrogram) + "\n"),
        (META_FILE, meta_json(meta)),
    ];
    if config.emit_svg {
        if dataset.dimension() == 2 {
            files.push((SCATTER_SVG_FILE, scatter_svg(dataset, result)));
        }
        files.push((DENDROGRAM_SVG_FILE, dendrogram_svg(&meta.dendrogram)));
    }
    files
        .iter()
        .map(|(name, body)| write_atomic(dir, name, body))
        .collect()
}
