//! Run configuration, read from JSON. Every section and key is optional and
//! falls back to the defaults below; unknown keys are rejected.

use std::path::{Path, PathBuf};

use hqarch::floorplan::{CountReading, FloorplanDoc, DESIGN_RULE_NM, REGISTER};
use hqarch::physics::DEFAULT_SWEEP_D_DQ_UM;
use hqarch::qec::LAYOUT_BLOCK_SIZE;
use hqarch::{PhysicsParams, SteaneParams};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct RunConfig {
    pub physics: PhysicsParams,
    /// Extra `(d_dq, d_id)` points reported next to the reference rows.
    pub geometry: Vec<GeometryQuery>,
    pub qec: QecConfig,
    pub tables: TablesConfig,
    pub sweep: SweepConfig,
    pub simulate: SimulateConfig,
    pub layout: LayoutConfig,
    pub outputs: OutputConfig,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeometryQuery {
    pub d_dq_um: f64,
    pub d_id_nm: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum BlockSize {
    /// Seven code qubits plus twelve ancillae.
    #[default]
    Steane,
    /// The twenty-qubit logical block of the floorplan.
    Layout,
}

impl BlockSize {
    pub fn qubits(self) -> u32 {
        match self {
            Self::Steane => SteaneParams::default().block_size(),
            Self::Layout => LAYOUT_BLOCK_SIZE,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct QecConfig {
    pub p_phys: f64,
    pub c_inv_threshold: f64,
    pub k_max: u32,
    /// Error rates tabulated in `threshold.csv`.
    pub p_sweep: Vec<f64>,
    pub area_exponent: f64,
    pub time_exponent: f64,
    pub block: BlockSize,
}

impl Default for QecConfig {
    fn default() -> Self {
        Self {
            p_phys: 1e-3,
            c_inv_threshold: 1e-2,
            k_max: 4,
            p_sweep: vec![1e-5, 1e-4, 1e-3, 5e-3, 1e-2, 2e-2],
            area_exponent: 1.0,
            time_exponent: 1.0,
            block: BlockSize::Steane,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum Counts {
    #[default]
    Tabulated,
    Composed,
}

impl From<Counts> for CountReading {
    fn from(c: Counts) -> Self {
        match c {
            Counts::Tabulated => CountReading::Tabulated,
            Counts::Composed => CountReading::Composed,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct TablesConfig {
    /// Qubit counts used for the register in the density and overhead tables.
    pub register_counts: Counts,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct SweepConfig {
    pub d_dq_um: Vec<f64>,
    pub d_id_start_nm: f64,
    pub d_id_stop_nm: f64,
    pub d_id_step_nm: f64,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            d_dq_um: DEFAULT_SWEEP_D_DQ_UM.to_vec(),
            d_id_start_nm: 20.0,
            d_id_stop_nm: 100.0,
            d_id_step_nm: 1.0,
        }
    }
}

impl SweepConfig {
    /// Inter-dot distances in ascending order, whichever way the range is given.
    pub fn d_id_points(&self) -> Result<Vec<f64>, CliError> {
        let (a, b, step) = (self.d_id_start_nm, self.d_id_stop_nm, self.d_id_step_nm);
        if !(a.is_finite() && b.is_finite()) {
            return Err(CliError::Config("sweep range bounds must be finite".into()));
        }
        if !(step.is_finite() && step > 0.0) {
            return Err(CliError::Config(format!("sweep.d_id_step_nm must be positive, got {step}")));
        }
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        let n = ((hi - lo) / step + 1e-9).floor() as usize;
        if n > 1_000_000 {
            return Err(CliError::Config(format!("sweep has {} points, limit is 1000000", n + 1)));
        }
        // Snap to a 1e-9 nm grid so that 20 + 3·0.1 prints as 20.3.
        Ok((0..=n).map(|i| ((lo + step * i as f64) * 1e9).round() / 1e9).collect())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct SimulateConfig {
    pub chain_lengths: Vec<usize>,
    /// Inter-dot distance used to convert steps into time.
    pub d_id_nm: f64,
    /// Also simulate the chain implied by every geometry query.
    pub include_geometry: bool,
}

impl Default for SimulateConfig {
    fn default() -> Self {
        Self {
            chain_lengths: vec![2, 6, 12],
            d_id_nm: 40.0,
            include_geometry: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct LayoutConfig {
    /// A catalog module name, or `custom` for the document below.
    pub plan: String,
    pub px_per_um: f64,
    pub min_feature_nm: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub custom: Option<FloorplanDoc>,
}

impl Default for LayoutConfig {
    fn default() -> Self {
        Self {
            plan: REGISTER.to_string(),
            px_per_um: 40.0,
            min_feature_nm: DESIGN_RULE_NM,
            custom: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct OutputConfig {
    pub dir: PathBuf,
    pub csv: bool,
    pub svg: bool,
    /// Plain-text rendering of the tables.
    pub table: bool,
}

impl Default for OutputConfig {
    fn default() -> Self {
        Self {
            dir: PathBuf::from("out"),
            csv: true,
            svg: true,
            table: true,
        }
    }
}

impl RunConfig {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        let cfg: Self = serde_json::from_str(text).map_err(|e| CliError::Config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::from_json(&text).map_err(|e| match e {
            CliError::Config(msg) => CliError::Config(format!("{}: {msg}", path.display())),
            other => other,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("configs always serialize")
    }

    pub fn validate(&self) -> Result<(), CliError> {
        let cfg = |e: &dyn std::fmt::Display| CliError::Config(e.to_string());
        self.physics.validate().map_err(|e| cfg(&e))?;
        for g in &self.geometry {
            hqarch::ChainGeometry::from_um(g.d_dq_um, g.d_id_nm).map_err(|e| cfg(&e))?;
        }
        hqarch::QecLevel::new(self.qec.k_max, self.qec.p_phys, self.qec.c_inv_threshold).map_err(|e| cfg(&e))?;
        for &p in &self.qec.p_sweep {
            hqarch::QecLevel::new(0, p, self.qec.c_inv_threshold).map_err(|e| cfg(&e))?;
        }
        for (name, v) in [("area", self.qec.area_exponent), ("time", self.qec.time_exponent)] {
            if !(v.is_finite() && v > 0.0) {
                return Err(CliError::Config(format!("qec.{name}_exponent must be positive, got {v}")));
            }
        }
        for &d in &self.sweep.d_dq_um {
            if !(d.is_finite() && d > 0.0) {
                return Err(CliError::Config(format!("sweep.d_dq_um entries must be positive, got {d}")));
            }
        }
        self.sweep.d_id_points()?;
        for &n in &self.simulate.chain_lengths {
            if n < 2 || n % 2 != 0 {
                return Err(CliError::Config(format!("chain length must be even and at least 2, got {n}")));
            }
        }
        if !(self.simulate.d_id_nm.is_finite() && self.simulate.d_id_nm > 0.0) {
            return Err(CliError::Config("simulate.d_id_nm must be positive".into()));
        }
        if !(self.layout.px_per_um.is_finite() && self.layout.px_per_um > 0.0) {
            return Err(CliError::Config("layout.px_per_um must be positive".into()));
        }
        if !(self.layout.min_feature_nm.is_finite() && self.layout.min_feature_nm > 0.0) {
            return Err(CliError::Config("layout.min_feature_nm must be positive".into()));
        }
        Ok(())
    }
}
