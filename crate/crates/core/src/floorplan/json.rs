use std::collections::HashMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{builtin_catalog, compose, Floorplan, FloorplanError, ModuleSpec, Placement, Rotation};

/// Serialized floorplan: module definitions plus placements referring to
/// them by name. Modules not listed here are looked up in the built-in
/// catalog.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FloorplanDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default)]
    pub modules: Vec<ModuleSpec>,
    pub placements: Vec<PlacementDoc>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlacementDoc {
    pub module: String,
    pub x_um: f64,
    pub y_um: f64,
    #[serde(default)]
    pub rot_deg: u32,
}

impl FloorplanDoc {
    /// Describes `plan`, listing every distinct module once in first-use order.
    pub fn from_floorplan(plan: &Floorplan, name: Option<String>) -> Self {
        let mut modules: Vec<ModuleSpec> = Vec::new();
        let mut placements = Vec::with_capacity(plan.len());
        for p in plan.placements() {
            if !modules.iter().any(|m| m.name == p.module.name) {
                modules.push((*p.module).clone());
            }
            placements.push(PlacementDoc {
                module: p.module.name.clone(),
                x_um: p.x_um,
                y_um: p.y_um,
                rot_deg: p.rotation.degrees(),
            });
        }
        Self {
            name,
            modules,
            placements,
        }
    }

    pub fn into_floorplan(&self) -> Result<Floorplan, FloorplanError> {
        let mut table: HashMap<String, Arc<ModuleSpec>> = HashMap::new();
        for m in builtin_catalog() {
            table.insert(m.name.clone(), Arc::new(m));
        }
        let mut seen = std::collections::HashSet::new();
        for m in &self.modules {
            if !seen.insert(m.name.as_str()) {
                return Err(FloorplanError::Document(format!("module `{}` defined twice", m.name)));
            }
            m.validate()?;
            table.insert(m.name.clone(), Arc::new(m.clone()));
        }
        let placements = self
            .placements
            .iter()
            .map(|p| {
                let module = table
                    .get(&p.module)
                    .ok_or_else(|| FloorplanError::UnknownModule(p.module.clone()))?;
                if !(p.x_um.is_finite() && p.y_um.is_finite()) {
                    return Err(FloorplanError::Document(format!(
                        "placement of `{}` has a non-finite position",
                        p.module
                    )));
                }
                Ok(Placement::new(Arc::clone(module), p.x_um, p.y_um, Rotation::from_degrees(p.rot_deg)?))
            })
            .collect::<Result<Vec<_>, _>>()?;
        compose(placements)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("floorplan documents always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self, FloorplanError> {
        serde_json::from_str(text).map_err(|e| FloorplanError::Document(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::floorplan::{CHAIN, T_MODULE};

    #[test]
    fn round_trip() {
        let text = r#"{
            "name": "pair",
            "modules": [{"name": "Pad", "width_um": 0.2, "height_um": 0.2, "data_qubits": 1, "comm_qubits": 0}],
            "placements": [
                {"module": "Chain", "x_um": 0.0, "y_um": 0.0},
                {"module": "Pad", "x_um": 0.16, "y_um": 0.0, "rot_deg": 90}
            ]
        }"#;
        let doc = FloorplanDoc::from_json(text).unwrap();
        let plan = doc.into_floorplan().unwrap();
        assert_eq!(plan.len(), 2);
        assert_eq!(plan.placements()[0].module.name, CHAIN);
        let again = FloorplanDoc::from_floorplan(&plan, doc.name.clone());
        let back = FloorplanDoc::from_json(&again.to_json()).unwrap().into_floorplan().unwrap();
        assert_eq!(back, plan);
    }

    #[test]
    fn errors() {
        let unknown = r#"{"placements": [{"module": "Nope", "x_um": 0, "y_um": 0}]}"#;
        assert!(matches!(
            FloorplanDoc::from_json(unknown).unwrap().into_floorplan(),
            Err(FloorplanError::UnknownModule(_))
        ));
        let bad_rot = format!(r#"{{"placements": [{{"module": "{T_MODULE}", "x_um": 0, "y_um": 0, "rot_deg": 45}}]}}"#);
        assert!(matches!(
            FloorplanDoc::from_json(&bad_rot).unwrap().into_floorplan(),
            Err(FloorplanError::Rotation(45))
        ));
        assert!(FloorplanDoc::from_json(r#"{"placements": [], "extra": 1}"#).is_err());
    }
}
