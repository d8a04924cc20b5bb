use std::path::PathBuf;

use crate::divisive::{emstrd, ClusteringResult};
use crate::error::Result;
use crate::io::{read_points_csv, write_outputs, RunConfig};
use crate::meta::{emstucc, MetaResult};
use crate::model::{CriterionConfig, Dataset};

/// Output of both stages on one dataset.
#[derive(Clone, Debug)]
pub struct Pipeline {
    pub clustering: ClusteringResult,
    pub meta: MetaResult,
}

/// Divisive clustering into `k` groups followed by meta-clustering of the
/// resulting centers.
pub fn cluster(dataset: &Dataset, k: usize, criterion: &CriterionConfig) -> Result<Pipeline> {
    let clustering = emstrd(dataset, k, criterion)?;
    let meta = emstucc(&clustering.centers)?;
    Ok(Pipeline { clustering, meta })
}

/// Reads the input, runs both stages and writes every output file.
pub fn run(config: &RunConfig) -> Result<Vec<PathBuf>> {
    config.validate()?;
    let dataset = read_points_csv(&config.input_path)?;
    let Pipeline { clustering, meta } = cluster(&dataset, config.k, &config.criterion)?;
    write_outputs(&dataset, &clustering, &meta, config)
}
