//! Experiment config schema and its conversion into validated library
//! types.

use std::path::Path;

use nurbs_limit::convergence::validate_schedule;
use nurbs_limit::{
    AnalysisSettings, KnotVector, LimitReference, NurbsCurveConfig, PathEntry, Point, WeightPath,
};
use serde::Deserialize;

use crate::{CliError, Result};

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub curve: CurveSection,
    pub path: Vec<PathSpec>,
    #[serde(default)]
    pub path_b: Option<Vec<PathSpec>>,
    #[serde(default)]
    pub analysis: AnalysisSection,
    #[serde(default)]
    pub output: Option<OutputSection>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveSection {
    pub degree: usize,
    pub knots: Vec<f64>,
    pub control_points: Vec<Vec<f64>>,
    /// Base weights; all 1 when omitted.
    #[serde(default)]
    pub weights: Option<Vec<f64>>,
    /// Active span; the first non-degenerate span when omitted.
    #[serde(default)]
    pub span: Option<usize>,
}

/// `w_index(t) = k * t^e`. Indices not listed keep their base weight.
#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PathSpec {
    pub index: usize,
    pub k: f64,
    pub e: f64,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AnalysisSection {
    #[serde(default = "default_grid")]
    pub grid_size: usize,
    #[serde(default = "default_subdivisions")]
    pub subdivisions: usize,
    #[serde(default)]
    pub t_schedule: Option<ScheduleSpec>,
    #[serde(default)]
    pub reference: ReferenceSpec,
}

impl Default for AnalysisSection {
    fn default() -> Self {
        AnalysisSection {
            grid_size: default_grid(),
            subdivisions: default_subdivisions(),
            t_schedule: None,
            reference: ReferenceSpec::default(),
        }
    }
}

fn default_grid() -> usize {
    2001
}

fn default_subdivisions() -> usize {
    64
}

/// Either explicit t values or a geometric range.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum ScheduleSpec {
    List(Vec<f64>),
    Range {
        t_min: f64,
        t_max: f64,
        #[serde(default = "one")]
        points_per_decade: usize,
    },
}

fn one() -> usize {
    1
}

#[derive(Debug, Clone, Copy, Default, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum ReferenceSpec {
    #[default]
    Pointwise,
    Interior,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputSection {
    #[serde(default = "csv")]
    pub format: String,
    #[serde(default)]
    pub destination: Option<String>,
}

fn csv() -> String {
    "csv".to_string()
}

/// Validated inputs ready for the commands.
#[derive(Debug, Clone)]
pub struct Experiment {
    pub curve: NurbsCurveConfig,
    pub path: WeightPath,
    pub path_b: Option<WeightPath>,
    pub settings: AnalysisSettings,
    pub schedule: Vec<f64>,
    pub destination: Option<String>,
}

impl ExperimentConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Invalid(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| CliError::Invalid(format!("invalid config: {e}")))
    }

    /// Checks every invariant before anything is computed.
    pub fn validate(&self) -> Result<Experiment> {
        let curve = self.curve.build()?;
        let path = build_path(&self.path, &curve, "path")?;
        let path_b = self
            .path_b
            .as_deref()
            .map(|p| build_path(p, &curve, "path_b"))
            .transpose()?;
        let settings = AnalysisSettings {
            grid_size: self.analysis.grid_size,
            subdivisions: self.analysis.subdivisions,
            reference: match self.analysis.reference {
                ReferenceSpec::Pointwise => LimitReference::Pointwise,
                ReferenceSpec::Interior => LimitReference::Interior,
            },
            ..AnalysisSettings::default()
        };
        if settings.grid_size < 2 {
            return Err(CliError::Invalid(
                "analysis.grid_size must be at least 2".into(),
            ));
        }
        if settings.subdivisions < 1 {
            return Err(CliError::Invalid(
                "analysis.subdivisions must be at least 1".into(),
            ));
        }
        let schedule = match &self.analysis.t_schedule {
            None => nurbs_limit::convergence::default_schedule(),
            Some(ScheduleSpec::List(ts)) => ts.clone(),
            Some(ScheduleSpec::Range {
                t_min,
                t_max,
                points_per_decade,
            }) => geometric_schedule(*t_min, *t_max, *points_per_decade)?,
        };
        validate_schedule(&schedule)?;
        let destination = match &self.output {
            Some(out) if out.format != "csv" => {
                return Err(CliError::Invalid(format!(
                    "unsupported output format {:?}, only \"csv\" is available",
                    out.format
                )))
            }
            Some(out) => out.destination.clone(),
            None => None,
        };
        Ok(Experiment {
            curve,
            path,
            path_b,
            settings,
            schedule,
            destination,
        })
    }
}

impl CurveSection {
    fn build(&self) -> Result<NurbsCurveConfig> {
        let knots = KnotVector::new(self.knots.clone(), self.degree)?;
        let n = knots.basis_count();
        let weights = self.weights.clone().unwrap_or_else(|| vec![1.0; n]);
        let span = match self.span {
            Some(s) => s,
            None => (self.degree..n)
                .find(|&i| knots.is_valid_span(i))
                .ok_or_else(|| CliError::Internal("validated knots without a span".into()))?,
        };
        let points = self
            .control_points
            .iter()
            .cloned()
            .map(Point::new)
            .collect();
        Ok(NurbsCurveConfig::new(knots, points, weights, span)?)
    }
}

fn build_path(specs: &[PathSpec], curve: &NurbsCurveConfig, name: &str) -> Result<WeightPath> {
    let mut entries: Vec<PathEntry> = curve
        .base_weights()
        .iter()
        .map(|&w| PathEntry {
            coefficient: w,
            exponent: 0.0,
        })
        .collect();
    let mut seen = vec![false; entries.len()];
    for s in specs {
        if s.index >= entries.len() {
            return Err(CliError::Invalid(format!(
                "{name}: index {} out of range, the curve has {} control points",
                s.index,
                entries.len()
            )));
        }
        if std::mem::replace(&mut seen[s.index], true) {
            return Err(CliError::Invalid(format!(
                "{name}: index {} listed twice",
                s.index
            )));
        }
        entries[s.index] = PathEntry {
            coefficient: s.k,
            exponent: s.e,
        };
    }
    WeightPath::new(entries).map_err(|e| CliError::Invalid(format!("{name}: {e}")))
}

/// `t_min * 10^(k / points_per_decade)` up to `t_max`.
pub fn geometric_schedule(t_min: f64, t_max: f64, points_per_decade: usize) -> Result<Vec<f64>> {
    if !(t_min > 0.0 && t_max >= t_min && t_max.is_finite()) || points_per_decade == 0 {
        return Err(CliError::Invalid(format!(
            "invalid t range: t_min {t_min}, t_max {t_max}, points_per_decade {points_per_decade}"
        )));
    }
    let steps = ((t_max / t_min).log10() * points_per_decade as f64 + 1e-9).floor() as usize;
    Ok((0..=steps)
        .map(|k| t_min * 10f64.powf(k as f64 / points_per_decade as f64))
        .collect())
}
