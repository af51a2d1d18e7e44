use super::{Floorplan, PlacementId, Rect, GEOM_EPS_UM};

/// Minimum lithographic feature, nm.
pub const DESIGN_RULE_NM: f64 = 20.0;

#[derive(Debug, Clone, PartialEq)]
pub enum Violation {
    /// Two placements closer than the rule without touching. `a < b`.
    Spacing {
        a: PlacementId,
        b: PlacementId,
        separation_nm: f64,
    },
    /// A module drawn with a finer feature than the rule allows.
    Feature {
        id: PlacementId,
        module: String,
        min_feature_nm: f64,
    },
}

impl Violation {
    pub fn involves(&self, x: PlacementId, y: PlacementId) -> bool {
        matches!(self, Violation::Spacing { a, b, .. } if (*a, *b) == (x, y) || (*a, *b) == (y, x))
    }
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::Spacing { a, b, separation_nm } => {
                write!(f, "spacing {a} {b} {separation_nm:.3} nm")
            }
            Violation::Feature {
                id,
                module,
                min_feature_nm,
            } => write!(f, "feature {id} {module} {min_feature_nm:.3} nm"),
        }
    }
}

/// Separation in nm when `a` and `b` are closer than `min_feature_nm` but
/// not touching. Exactly `min_feature_nm` apart passes.
pub fn spacing_violation(a: &Rect, b: &Rect, min_feature_nm: f64) -> Option<f64> {
    let sep_um = a.separation(b);
    let rule_um = min_feature_nm / 1000.0;
    (sep_um > GEOM_EPS_UM && sep_um < rule_um - GEOM_EPS_UM).then_some(sep_um * 1000.0)
}

/// Inter-module spacing and per-module feature checks. Empty means pass.
pub fn check_design_rules(plan: &Floorplan, min_feature_nm: f64) -> Vec<Violation> {
    let rects: Vec<Rect> = plan.placements().iter().map(|p| p.rect()).collect();
    let mut out = Vec::new();
    for (i, p) in plan.placements().iter().enumerate() {
        if p.module.min_feature_nm < min_feature_nm - 1e-9 {
            out.push(Violation::Feature {
                id: PlacementId(i),
                module: p.module.name.clone(),
                min_feature_nm: p.module.min_feature_nm,
            });
        }
    }
    let rule_um = min_feature_nm / 1000.0;
    for i in 0..rects.len() {
        for j in (i + 1)..rects.len() {
            // Cheap reject before the exact distance.
            let (a, b) = (&rects[i], &rects[j]);
            if b.x0 - a.x1 >= rule_um || a.x0 - b.x1 >= rule_um || b.y0 - a.y1 >= rule_um || a.y0 - b.y1 >= rule_um {
                continue;
            }
            if let Some(separation_nm) = spacing_violation(a, b, min_feature_nm) {
                out.push(Violation::Spacing {
                    a: PlacementId(i),
                    b: PlacementId(j),
                    separation_nm,
                });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::floorplan::{builtin_catalog, compose, lookup, ModuleSpec, Placement, CHAIN};

    fn pair(gap_um: f64) -> Floorplan {
        let c = Arc::new(lookup(CHAIN).unwrap());
        compose(vec![Placement::at(&c, 0.0, 0.0), Placement::at(&c, 0.16 + gap_um, 0.0)]).unwrap()
    }

    #[test]
    fn boundary_is_inclusive() {
        assert!(check_design_rules(&pair(0.020), DESIGN_RULE_NM).is_empty());
        assert!(check_design_rules(&pair(0.0), DESIGN_RULE_NM).is_empty());
        let v = check_design_rules(&pair(0.019), DESIGN_RULE_NM);
        assert_eq!(v.len(), 1);
        match &v[0] {
            Violation::Spacing { separation_nm, .. } => assert!((separation_nm - 19.0).abs() < 1e-6),
            other => panic!("{other:?}"),
        }
        assert!(v[0].involves(PlacementId(1), PlacementId(0)));
    }

    #[test]
    fn diagonal_gap_uses_euclidean_distance() {
        let c = Arc::new(lookup(CHAIN).unwrap());
        // 15 nm in x and 15 nm in y is 21.2 nm corner to corner.
        let plan = compose(vec![Placement::at(&c, 0.0, 0.0), Placement::at(&c, 0.175, 0.475)]).unwrap();
        assert!(check_design_rules(&plan, DESIGN_RULE_NM).is_empty());
        let plan = compose(vec![Placement::at(&c, 0.0, 0.0), Placement::at(&c, 0.17, 0.47)]).unwrap();
        assert_eq!(check_design_rules(&plan, DESIGN_RULE_NM).len(), 1);
    }

    #[test]
    fn catalog_modules_pass() {
        for m in builtin_catalog() {
            let plan = Floorplan::single(m).unwrap();
            assert!(check_design_rules(&plan, DESIGN_RULE_NM).is_empty());
        }
    }

    #[test]
    fn fine_feature_module_is_flagged() {
        let m = ModuleSpec::new("Fine", 0.1, 0.1, 1, 0).with_min_feature(10.0);
        let v = check_design_rules(&Floorplan::single(m).unwrap(), DESIGN_RULE_NM);
        assert!(matches!(&v[..], [Violation::Feature { min_feature_nm, .. }] if *min_feature_nm == 10.0));
    }
}
