//! Reconstructed placements of the one-logical-qubit block and the
//! eight-logical-qubit register.
//!
//! The logical qubit is a horizontal bus of eight T junctions with ten
//! two-qubit gates hanging above and below it, a stub chain on the far left
//! feeding the first gate, and six chain segments on the right running out to
//! a port on the block edge. Thin spacer strips along the top and bottom give
//! the block its full 2.52 µm height.
//!
//! The register stacks four logical qubits on each side of a vertical column
//! of T junctions; the right-hand column is rotated by 180° so its port faces
//! the centre. Chain links join every port to the column.

use std::sync::Arc;

use super::{
    compose, lookup, Floorplan, FloorplanError, ModuleSpec, Placement, PlacementId, RoutingGraph, Rotation, CHAIN,
    T_MODULE, TWO_QUBIT,
};

pub const LQ_WIDTH_UM: f64 = 11.38;
pub const LQ_HEIGHT_UM: f64 = 2.52;
/// Centre line of the T bus inside a logical qubit.
pub const BUS_Y_UM: f64 = 1.26;

const BUS_X0_UM: f64 = 0.02;
const BUS_Y0_UM: f64 = 0.91;
const T_W: f64 = 1.3;
const CHAIN_W: f64 = 0.16;
const CHAIN_H: f64 = 0.46;
const SPACER_H: f64 = 0.2;

/// Lower-left corners of the ten two-qubit gates, left to right.
const GATES: [(f64, f64); 10] = [
    (0.06, 0.25),
    (1.63, 1.61),
    (1.93, 0.41),
    (3.08, 1.61),
    (4.38, 0.41),
    (5.24, 1.61),
    (6.98, 0.41),
    (8.28, 1.61),
    (9.58, 0.41),
    (10.36, 1.61),
];

/// Gate used as the logical qubit's reference point when measuring
/// distances between logical qubits.
const ANCHOR_GATE: usize = 5;

/// Row offsets of the register's logical qubits on each side of the column.
const LEFT_ROWS_Y_UM: [f64; 4] = [0.0, 3.16, 6.34, 9.5];
const RIGHT_ROWS_Y_UM: [f64; 4] = [0.16, 3.18, 6.36, 9.52];
const RIGHT_X_UM: f64 = 14.16;
const COLUMN_X_UM: f64 = 12.34;
const COLUMN_Y0_UM: f64 = 0.82;
const COLUMN_LEN: usize = 8;
const LEFT_LINKS: usize = 6;
const RIGHT_LINKS: usize = 7;
const RIGHT_LINK_X0_UM: f64 = 13.04;

fn module(name: &str) -> Arc<ModuleSpec> {
    Arc::new(lookup(name).expect("built-in module"))
}

#[derive(Debug, Clone)]
pub struct LogicalQubitLayout {
    pub plan: Floorplan,
    /// The ten two-qubit gates, left to right.
    pub data_blocks: Vec<PlacementId>,
    pub anchor: PlacementId,
    /// Where the bus leaves the block, on its right edge.
    pub port: (f64, f64),
}

pub fn logical_qubit_layout() -> Result<LogicalQubitLayout, FloorplanError> {
    let t = module(T_MODULE);
    let chain = module(CHAIN);
    let gate = module(TWO_QUBIT);
    let strip = Arc::new(ModuleSpec::spacer(LQ_WIDTH_UM, SPACER_H));

    let mut ps = vec![
        Placement::at(&strip, 0.0, 0.0),
        Placement::at(&strip, 0.0, LQ_HEIGHT_UM - SPACER_H),
    ];
    for i in 0..8 {
        ps.push(Placement::at(&t, BUS_X0_UM + T_W * i as f64, BUS_Y0_UM));
    }
    let bus_end = BUS_X0_UM + T_W * 8.0;
    for j in 0..6 {
        ps.push(Placement::at(&chain, bus_end + CHAIN_W * j as f64, BUS_Y_UM - CHAIN_H / 2.0));
    }
    ps.push(Placement::rotated(&chain, BUS_X0_UM, BUS_Y0_UM - CHAIN_W, Rotation::R90));
    let first_gate = ps.len();
    for (x, y) in GATES {
        ps.push(Placement::at(&gate, x, y));
    }
    let plan = compose(ps)?;
    let data_blocks = (first_gate..first_gate + GATES.len()).map(PlacementId).collect();
    Ok(LogicalQubitLayout {
        plan,
        data_blocks,
        anchor: PlacementId(first_gate + ANCHOR_GATE),
        port: (LQ_WIDTH_UM, BUS_Y_UM),
    })
}

/// One logical qubit inside the register.
#[derive(Debug, Clone)]
pub struct RegisterSlot {
    /// Index of the logical qubit's first placement in the register plan.
    pub offset: usize,
    pub origin: (f64, f64),
    pub rotation: Rotation,
    pub anchor: PlacementId,
    pub data_blocks: Vec<PlacementId>,
}

#[derive(Debug, Clone)]
pub struct RegisterLayout {
    pub plan: Floorplan,
    /// Left column bottom to top, then right column bottom to top.
    pub slots: Vec<RegisterSlot>,
}

pub fn register_layout() -> Result<RegisterLayout, FloorplanError> {
    let lq = logical_qubit_layout()?;
    let t = module(T_MODULE);
    let chain = module(CHAIN);
    let mut ps: Vec<Placement> = Vec::new();
    let mut slots = Vec::new();
    let sides = [(0.0, LEFT_ROWS_Y_UM, Rotation::R0), (RIGHT_X_UM, RIGHT_ROWS_Y_UM, Rotation::R180)];
    for (x, rows, rotation) in sides {
        for y in rows {
            let offset = ps.len();
            let shift = |id: PlacementId| PlacementId(id.0 + offset);
            slots.push(RegisterSlot {
                offset,
                origin: (x, y),
                rotation,
                anchor: shift(lq.anchor),
                data_blocks: lq.data_blocks.iter().copied().map(shift).collect(),
            });
            ps.extend(lq.plan.instantiate(x, y, rotation));
        }
    }
    for k in 0..COLUMN_LEN {
        ps.push(Placement::rotated(&t, COLUMN_X_UM, COLUMN_Y0_UM + T_W * k as f64, Rotation::R90));
    }
    for (yl, yr) in LEFT_ROWS_Y_UM.into_iter().zip(RIGHT_ROWS_Y_UM) {
        for j in 0..LEFT_LINKS {
            ps.push(Placement::at(&chain, LQ_WIDTH_UM + CHAIN_W * j as f64, yl + BUS_Y_UM - CHAIN_H / 2.0));
        }
        for j in 0..RIGHT_LINKS {
            ps.push(Placement::at(&chain, RIGHT_LINK_X0_UM + CHAIN_W * j as f64, yr + BUS_Y_UM - CHAIN_H / 2.0));
        }
    }
    Ok(RegisterLayout {
        plan: compose(ps)?,
        slots,
    })
}

/// Route-length extremes of the reference layouts, in µm.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReferenceDistances {
    /// Shortest and longest route between two gates of one logical qubit.
    pub physical_min_um: f64,
    pub physical_max_um: f64,
    /// Shortest and longest route between two logical qubits of the register.
    pub logical_min_um: f64,
    pub logical_max_um: f64,
    /// From the anchor gate to the logical qubit's port.
    pub anchor_to_port_um: f64,
}

fn extremes(graph: &RoutingGraph, ids: &[PlacementId]) -> Result<(f64, f64), super::RoutingError> {
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for (i, &a) in ids.iter().enumerate() {
        let rest = &ids[i + 1..];
        for (d, &b) in graph.route_lengths(a, rest)?.into_iter().zip(rest) {
            let d = d.ok_or(super::RoutingError::NoRoute { from: a, to: b })?;
            lo = lo.min(d);
            hi = hi.max(d);
        }
    }
    Ok((lo, hi))
}

pub fn reference_distances() -> Result<ReferenceDistances, ReferenceError> {
    let lq = logical_qubit_layout()?;
    let g = RoutingGraph::new(&lq.plan);
    let (physical_min_um, physical_max_um) = extremes(&g, &lq.data_blocks)?;
    let anchor_to_port_um = g.route_to_point(&lq.plan, lq.anchor, lq.port)?;
    let reg = register_layout()?;
    let g = RoutingGraph::new(&reg.plan);
    let anchors: Vec<PlacementId> = reg.slots.iter().map(|s| s.anchor).collect();
    let (logical_min_um, logical_max_um) = extremes(&g, &anchors)?;
    Ok(ReferenceDistances {
        physical_min_um,
        physical_max_um,
        logical_min_um,
        logical_max_um,
        anchor_to_port_um,
    })
}

#[derive(Debug, thiserror::Error, Clone, PartialEq)]
pub enum ReferenceError {
    #[error(transparent)]
    Floorplan(#[from] FloorplanError),
    #[error(transparent)]
    Routing(#[from] super::RoutingError),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::floorplan::{check_design_rules, DESIGN_RULE_NM};

    #[test]
    fn logical_qubit_matches_catalog() {
        let lq = logical_qubit_layout().unwrap();
        let cat = lookup(crate::floorplan::LOGICAL_QUBIT).unwrap();
        let bb = lq.plan.bounding_box();
        assert!((bb.width() - cat.width_um).abs() < 1e-9);
        assert!((bb.height() - cat.height_um).abs() < 1e-9);
        assert_eq!(lq.plan.data_qubits(), u64::from(cat.data_qubits));
        assert_eq!(lq.plan.comm_qubits(), u64::from(cat.comm_qubits));
        assert!(check_design_rules(&lq.plan, DESIGN_RULE_NM).is_empty());
    }

    #[test]
    fn register_matches_catalog_footprint() {
        let reg = register_layout().unwrap();
        let bb = reg.plan.bounding_box();
        assert!((bb.width() - 25.54).abs() < 1e-9);
        assert!((bb.height() - 12.04).abs() < 1e-9);
        assert_eq!(reg.slots.len(), 8);
        assert_eq!(reg.plan.data_qubits(), 160);
        assert_eq!(reg.plan.comm_qubits(), 720);
        assert!(check_design_rules(&reg.plan, DESIGN_RULE_NM).is_empty());
    }

    #[test]
    fn distances() {
        let d = reference_distances().unwrap();
        assert!((d.physical_min_um - 1.0).abs() < 1e-9, "{d:?}");
        assert!((d.physical_max_um - 11.0).abs() < 1e-9, "{d:?}");
        assert!((d.anchor_to_port_um - 6.3).abs() < 1e-9, "{d:?}");
        assert!((d.logical_min_um - 15.4).abs() < 1e-9, "{d:?}");
        assert!((d.logical_max_um - 24.9).abs() < 1e-9, "{d:?}");
    }
}
