//! Device catalog and hierarchical floorplanning.
//!
//! Coordinates are in µm with the origin at the lower-left corner; a
//! placement's `(x_um, y_um)` is the lower-left corner of its footprint after
//! rotation. Design-rule distances are in nm.

mod catalog;
mod drc;
mod json;
pub mod reference;
mod routing;
mod svg;

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use catalog::{
    builtin_catalog, lookup, CountReading, DataQubitReading, CHAIN, LOGICAL_QUBIT, ONE_QUBIT,
    REGISTER, T_MODULE, TWO_QUBIT,
};
pub use drc::{check_design_rules, spacing_violation, Violation, DESIGN_RULE_NM};
pub use json::{FloorplanDoc, PlacementDoc};
pub use routing::{path_length, RoutingError, RoutingGraph};
pub use svg::{export_svg, SvgOptions};

/// Tolerance for coordinate comparisons, in µm.
pub const GEOM_EPS_UM: f64 = 1e-9;

const UM2_PER_CM2: f64 = 1e8;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FloorplanError {
    #[error("placements {a} ({a_name}) and {b} ({b_name}) overlap")]
    Overlap {
        a: PlacementId,
        b: PlacementId,
        a_name: String,
        b_name: String,
    },
    #[error("cannot compute a density over zero area with {0} logical qubits")]
    ZeroArea(u64),
    #[error("unknown module `{0}`")]
    UnknownModule(String),
    #[error("rotation must be 0, 90, 180 or 270 degrees, got {0}")]
    Rotation(u32),
    #[error("module `{name}` has invalid dimensions {width_um} x {height_um}")]
    Dimensions { name: String, width_um: f64, height_um: f64 },
    #[error("invalid floorplan document: {0}")]
    Document(String),
}

/// Role of a module in routing and rendering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModuleKind {
    /// Gate with data qubits (initialisation, read-out, logic).
    Data,
    /// Straight communication segment.
    Chain,
    /// Communication crossroad joining orthogonal chains.
    Junction,
    /// A whole sub-floorplan treated as one block.
    Composite,
    /// Dead space, no qubits.
    Spacer,
}

fn default_min_feature() -> f64 {
    DESIGN_RULE_NM
}

/// A catalog entry: a rectangular device block and its qubit content.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleSpec {
    pub name: String,
    pub width_um: f64,
    pub height_um: f64,
    pub data_qubits: u32,
    pub comm_qubits: u32,
    #[serde(default = "default_min_feature")]
    pub min_feature_nm: f64,
    /// Tabulated area, when it is quoted separately from the dimensions.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub area_um2: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<ModuleKind>,
}

impl ModuleSpec {
    pub fn new(name: impl Into<String>, width_um: f64, height_um: f64, data_qubits: u32, comm_qubits: u32) -> Self {
        Self {
            name: name.into(),
            width_um,
            height_um,
            data_qubits,
            comm_qubits,
            min_feature_nm: DESIGN_RULE_NM,
            area_um2: None,
            kind: None,
        }
    }

    pub fn spacer(width_um: f64, height_um: f64) -> Self {
        Self::new("Spacer", width_um, height_um, 0, 0).with_kind(ModuleKind::Spacer)
    }

    pub fn with_kind(mut self, kind: ModuleKind) -> Self {
        self.kind = Some(kind);
        self
    }

    pub fn with_area(mut self, area_um2: f64) -> Self {
        self.area_um2 = Some(area_um2);
        self
    }

    pub fn with_min_feature(mut self, min_feature_nm: f64) -> Self {
        self.min_feature_nm = min_feature_nm;
        self
    }

    pub fn kind(&self) -> ModuleKind {
        self.kind.unwrap_or(if self.data_qubits > 0 {
            ModuleKind::Data
        } else if self.comm_qubits > 0 {
            ModuleKind::Chain
        } else {
            ModuleKind::Spacer
        })
    }

    /// Width times height.
    pub fn geometric_area(&self) -> f64 {
        self.width_um * self.height_um
    }

    /// The tabulated area when present, otherwise width times height.
    pub fn area(&self) -> f64 {
        self.area_um2.unwrap_or_else(|| self.geometric_area())
    }

    /// Communication-only modules can carry a route through them.
    pub fn is_routable(&self) -> bool {
        self.data_qubits == 0 && self.comm_qubits > 0
    }

    pub fn validate(&self) -> Result<(), FloorplanError> {
        let ok = |v: f64| v.is_finite() && v >= 0.0;
        if !ok(self.width_um) || !ok(self.height_um) {
            return Err(FloorplanError::Dimensions {
                name: self.name.clone(),
                width_um: self.width_um,
                height_um: self.height_um,
            });
        }
        Ok(())
    }
}

/// Quarter-turn rotations, counter-clockwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Rotation {
    #[default]
    R0,
    R90,
    R180,
    R270,
}

impl Rotation {
    pub fn from_degrees(deg: u32) -> Result<Self, FloorplanError> {
        match deg {
            0 => Ok(Self::R0),
            90 => Ok(Self::R90),
            180 => Ok(Self::R180),
            270 => Ok(Self::R270),
            other => Err(FloorplanError::Rotation(other)),
        }
    }

    pub fn degrees(self) -> u32 {
        match self {
            Self::R0 => 0,
            Self::R90 => 90,
            Self::R180 => 180,
            Self::R270 => 270,
        }
    }

    pub fn then(self, other: Rotation) -> Rotation {
        Self::from_degrees((self.degrees() + other.degrees()) % 360).expect("quarter turns compose")
    }

    pub fn swaps_axes(self) -> bool {
        matches!(self, Self::R90 | Self::R270)
    }
}

/// Axis-aligned rectangle `[x0, x1] × [y0, y1]` in µm.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Rect {
    pub x0: f64,
    pub y0: f64,
    pub x1: f64,
    pub y1: f64,
}

impl Rect {
    pub fn new(x0: f64, y0: f64, x1: f64, y1: f64) -> Self {
        Self { x0, y0, x1, y1 }
    }

    pub fn from_origin(x: f64, y: f64, width: f64, height: f64) -> Self {
        Self::new(x, y, x + width, y + height)
    }

    pub fn width(&self) -> f64 {
        self.x1 - self.x0
    }

    pub fn height(&self) -> f64 {
        self.y1 - self.y0
    }

    pub fn area(&self) -> f64 {
        self.width() * self.height()
    }

    pub fn center(&self) -> (f64, f64) {
        ((self.x0 + self.x1) / 2.0, (self.y0 + self.y1) / 2.0)
    }

    pub fn union(&self, other: &Rect) -> Rect {
        Rect::new(
            self.x0.min(other.x0),
            self.y0.min(other.y0),
            self.x1.max(other.x1),
            self.y1.max(other.y1),
        )
    }

    /// True when the interiors intersect.
    pub fn overlaps(&self, other: &Rect) -> bool {
        self.x0 < other.x1 - GEOM_EPS_UM
            && other.x0 < self.x1 - GEOM_EPS_UM
            && self.y0 < other.y1 - GEOM_EPS_UM
            && other.y0 < self.y1 - GEOM_EPS_UM
    }

    /// Euclidean edge-to-edge distance; zero when touching or overlapping.
    pub fn separation(&self, other: &Rect) -> f64 {
        let dx = (other.x0 - self.x1).max(self.x0 - other.x1).max(0.0);
        let dy = (other.y0 - self.y1).max(self.y0 - other.y1).max(0.0);
        dx.hypot(dy)
    }

    pub fn contains(&self, other: &Rect) -> bool {
        other.x0 >= self.x0 - GEOM_EPS_UM
            && other.y0 >= self.y0 - GEOM_EPS_UM
            && other.x1 <= self.x1 + GEOM_EPS_UM
            && other.y1 <= self.y1 + GEOM_EPS_UM
    }
}

/// Index of a placement within its floorplan.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PlacementId(pub usize);

impl std::fmt::Display for PlacementId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// A module instance at a position and orientation.
#[derive(Debug, Clone, PartialEq)]
pub struct Placement {
    pub module: Arc<ModuleSpec>,
    pub x_um: f64,
    pub y_um: f64,
    pub rotation: Rotation,
}

impl Placement {
    pub fn new(module: Arc<ModuleSpec>, x_um: f64, y_um: f64, rotation: Rotation) -> Self {
        Self {
            module,
            x_um,
            y_um,
            rotation,
        }
    }

    pub fn at(module: &Arc<ModuleSpec>, x_um: f64, y_um: f64) -> Self {
        Self::new(Arc::clone(module), x_um, y_um, Rotation::R0)
    }

    pub fn rotated(module: &Arc<ModuleSpec>, x_um: f64, y_um: f64, rotation: Rotation) -> Self {
        Self::new(Arc::clone(module), x_um, y_um, rotation)
    }

    /// Footprint after rotation.
    pub fn rect(&self) -> Rect {
        let (w, h) = if self.rotation.swaps_axes() {
            (self.module.height_um, self.module.width_um)
        } else {
            (self.module.width_um, self.module.height_um)
        };
        Rect::from_origin(self.x_um, self.y_um, w, h)
    }
}

/// Placed modules with pairwise-disjoint interiors.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Floorplan {
    placements: Vec<Placement>,
    bounding_box: Rect,
}

/// Builds a floorplan, rejecting any pair of overlapping placements.
pub fn compose(children: Vec<Placement>) -> Result<Floorplan, FloorplanError> {
    for p in &children {
        p.module.validate()?;
    }
    let rects: Vec<Rect> = children.iter().map(Placement::rect).collect();
    for i in 0..rects.len() {
        for j in (i + 1)..rects.len() {
            if rects[i].overlaps(&rects[j]) {
                return Err(FloorplanError::Overlap {
                    a: PlacementId(i),
                    b: PlacementId(j),
                    a_name: children[i].module.name.clone(),
                    b_name: children[j].module.name.clone(),
                });
            }
        }
    }
    let bounding_box = rects.iter().copied().reduce(|a, b| a.union(&b)).unwrap_or_default();
    Ok(Floorplan {
        placements: children,
        bounding_box,
    })
}

impl Floorplan {
    /// A plan holding one placement of `module` at the origin.
    pub fn single(module: ModuleSpec) -> Result<Self, FloorplanError> {
        compose(vec![Placement::at(&Arc::new(module), 0.0, 0.0)])
    }

    pub fn placements(&self) -> &[Placement] {
        &self.placements
    }

    pub fn placement(&self, id: PlacementId) -> Option<&Placement> {
        self.placements.get(id.0)
    }

    pub fn ids(&self) -> impl Iterator<Item = PlacementId> {
        (0..self.placements.len()).map(PlacementId)
    }

    pub fn len(&self) -> usize {
        self.placements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.placements.is_empty()
    }

    /// Tight hull of all placements; all zeros for an empty plan.
    pub fn bounding_box(&self) -> Rect {
        self.bounding_box
    }

    pub fn data_qubits(&self) -> u64 {
        self.placements.iter().map(|p| u64::from(p.module.data_qubits)).sum()
    }

    pub fn comm_qubits(&self) -> u64 {
        self.placements.iter().map(|p| u64::from(p.module.comm_qubits)).sum()
    }

    /// Placements whose module is of `kind`.
    pub fn ids_of_kind(&self, kind: ModuleKind) -> Vec<PlacementId> {
        self.ids().filter(|&id| self.placements[id.0].module.kind() == kind).collect()
    }

    /// Collapses the plan into a single block with the hull's dimensions.
    pub fn as_module(&self, name: impl Into<String>) -> ModuleSpec {
        let min_feature_nm = self
            .placements
            .iter()
            .map(|p| p.module.min_feature_nm)
            .fold(DESIGN_RULE_NM, f64::min);
        let clamp_u32 = |v: u64| u32::try_from(v).unwrap_or(u32::MAX);
        ModuleSpec {
            name: name.into(),
            width_um: self.bounding_box.width(),
            height_um: self.bounding_box.height(),
            data_qubits: clamp_u32(self.data_qubits()),
            comm_qubits: clamp_u32(self.comm_qubits()),
            min_feature_nm,
            area_um2: None,
            kind: Some(ModuleKind::Composite),
        }
    }

    /// Copies of every placement, with the plan's hull rotated by `rotation`
    /// and its lower-left corner moved to `(x_um, y_um)`. Order is preserved,
    /// so local placement `i` stays at offset `i` in the returned list.
    pub fn instantiate(&self, x_um: f64, y_um: f64, rotation: Rotation) -> Vec<Placement> {
        let bb = self.bounding_box;
        let (w, h) = (bb.width(), bb.height());
        self.placements
            .iter()
            .map(|p| {
                let r = p.rect();
                let (lx0, ly0, lx1, ly1) = (r.x0 - bb.x0, r.y0 - bb.y0, r.x1 - bb.x0, r.y1 - bb.y0);
                let (nx, ny) = match rotation {
                    Rotation::R0 => (lx0, ly0),
                    Rotation::R90 => (h - ly1, lx0),
                    Rotation::R180 => (w - lx1, h - ly1),
                    Rotation::R270 => (ly0, w - lx1),
                };
                Placement::new(Arc::clone(&p.module), x_um + nx, y_um + ny, p.rotation.then(rotation))
            })
            .collect()
    }
}

/// Area, qubit counts and information density of a register.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegisterSummary {
    pub total_area_um2: f64,
    pub data_qubits: u64,
    pub comm_qubits: u64,
    pub logical_qubits: u64,
    /// Logical qubits per cm².
    pub density_per_cm2: f64,
}

impl RegisterSummary {
    pub fn density_mqubit_per_cm2(&self) -> f64 {
        self.density_per_cm2 / 1e6
    }
}

/// Summary over the bounding-box area, so dead space counts against density.
pub fn summarize(plan: &Floorplan, logical_qubits: u64) -> Result<RegisterSummary, FloorplanError> {
    let area = plan.bounding_box().area();
    let density_per_cm2 = if logical_qubits == 0 {
        0.0
    } else if area <= 0.0 {
        return Err(FloorplanError::ZeroArea(logical_qubits));
    } else {
        logical_qubits as f64 / area * UM2_PER_CM2
    };
    Ok(RegisterSummary {
        total_area_um2: area,
        data_qubits: plan.data_qubits(),
        comm_qubits: plan.comm_qubits(),
        logical_qubits,
        density_per_cm2,
    })
}
