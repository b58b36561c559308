//! The point-set JSON format and the report DTOs.
//!
//! Point sets:
//!
//! ```json
//! {"mode":"exact","points":[{"x":"3/2","y":"-1/5"},{"x":"0","y":"1"}]}
//! {"mode":"convex","n":10}
//! ```
//!
//! Coordinates are decimal-free rational strings `"p/q"` (plain integers
//! allowed). Optional fields: `"weights"` selects the weight model
//! (`{"kind":"euclidean"}` or `{"kind":"regular-ngon"}`), `"provenance"`
//! records generator parameters; both are preserved on load where
//! relevant, unknown extra fields are ignored.

use serde::{Deserialize, Serialize};

use multiplicity_core::geometry::{coord_to_string, parse_coord, Point, PointSet};
use multiplicity_core::weighted::WeightModel;

use crate::CliError;

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct PointJson {
    pub x: String,
    pub y: String,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct WeightsJson {
    pub kind: String,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct PointSetFile {
    pub mode: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub points: Option<Vec<PointJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weights: Option<WeightsJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub provenance: Option<serde_json::Value>,
}

impl PointSetFile {
    pub fn exact(points: &PointSet) -> Self {
        let pts = points.points().expect("exact mode");
        PointSetFile {
            mode: "exact".into(),
            points: Some(
                pts.iter()
                    .map(|p| PointJson { x: coord_to_string(&p.x), y: coord_to_string(&p.y) })
                    .collect(),
            ),
            n: None,
            weights: None,
            provenance: None,
        }
    }

    pub fn convex(n: usize) -> Self {
        PointSetFile { mode: "convex".into(), points: None, n: Some(n), weights: None, provenance: None }
    }

    pub fn with_weights(mut self, kind: &str) -> Self {
        self.weights = Some(WeightsJson { kind: kind.into() });
        self
    }

    pub fn with_provenance(mut self, p: serde_json::Value) -> Self {
        self.provenance = Some(p);
        self
    }

    pub fn to_point_set(&self) -> Result<PointSet, CliError> {
        match self.mode.as_str() {
            "exact" => {
                let pts = self
                    .points
                    .as_ref()
                    .ok_or_else(|| CliError::input("exact mode needs a points array"))?;
                let points: Result<Vec<Point>, CliError> = pts
                    .iter()
                    .map(|p| {
                        Ok(Point::new(
                            parse_coord(&p.x).map_err(CliError::from)?,
                            parse_coord(&p.y).map_err(CliError::from)?,
                        ))
                    })
                    .collect();
                Ok(PointSet::Exact(points?))
            }
            "convex" => {
                let n = self.n.ok_or_else(|| CliError::input("convex mode needs n"))?;
                Ok(PointSet::AbstractConvex(n))
            }
            other => Err(CliError::input(format!("unknown point-set mode {other:?}"))),
        }
    }

    /// Choose the weight model: explicit `weights.kind` wins; abstract
    /// convex sets default to the regular-polygon span model, exact sets to
    /// Euclidean lengths.
    pub fn weight_model(&self, ps: &PointSet) -> Result<WeightModel, CliError> {
        let kind = self
            .weights
            .as_ref()
            .map(|w| w.kind.as_str())
            .unwrap_or(match ps {
                PointSet::AbstractConvex(_) => "regular-ngon",
                PointSet::Exact(_) => "euclidean",
            });
        match kind {
            "euclidean" => Ok(WeightModel::euclidean(ps)?),
            "regular-ngon" => Ok(WeightModel::regular_spans(ps.len())),
            other => Err(CliError::input(format!("unknown weight model {other:?}"))),
        }
    }
}

pub fn load_point_set_file(path: &std::path::Path) -> Result<PointSetFile, CliError> {
    let data = std::fs::read_to_string(path)?;
    Ok(serde_json::from_str(&data)?)
}

/// Edge list of one graph, as written to `.jsonl` streams.
pub fn edge_list(g: &multiplicity_core::enumeration::EdgeGraph) -> Vec<[usize; 2]> {
    g.edges().iter().map(|e| [e.i, e.j]).collect()
}
