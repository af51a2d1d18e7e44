use std::fmt::Write as _;

use super::{Floorplan, ModuleKind};
use crate::numfmt::trim_decimal;

/// Physical layers of the gate stack, bottom to top, with their fill colour.
pub const LAYERS: [(&str, &str); 7] = [
    ("level-silicon", "#4a74c9"),
    ("level-doping", "#c9a04a"),
    ("gate1-barrier", "#8c8c8c"),
    ("gate2-plunger", "#d03c3c"),
    ("gate3-barrier", "#3ca04a"),
    ("gate4-plunger", "#8fc4ea"),
    ("vias", "#202020"),
];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SvgOptions {
    pub px_per_um: f64,
    /// Draw the module outline layer on top of the physical layers.
    pub outlines: bool,
}

impl Default for SvgOptions {
    fn default() -> Self {
        Self {
            px_per_um: 40.0,
            outlines: true,
        }
    }
}

fn kind_style(kind: ModuleKind) -> (&'static str, &'static str) {
    match kind {
        ModuleKind::Data => ("#1f4fbf", ""),
        ModuleKind::Junction => ("#c02020", ""),
        ModuleKind::Chain => ("#208040", ""),
        ModuleKind::Composite => ("#505050", ""),
        ModuleKind::Spacer => ("#a0a0a0", " stroke-dasharray=\"4 2\""),
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

/// Renders `plan` as a standalone SVG document. Output depends only on the
/// plan and the options. The y axis is flipped so that the origin sits at the
/// lower-left corner, as in the floorplan coordinates.
pub fn export_svg(plan: &Floorplan, opts: &SvgOptions) -> String {
    let bb = plan.bounding_box();
    let s = opts.px_per_um;
    let px = |v: f64| trim_decimal(v * s, 4);
    let (w, h) = (bb.width(), bb.height());
    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">",
        px(w),
        px(h),
        px(w),
        px(h)
    );
    let rect = |out: &mut String, r: &super::Rect, attrs: &str| {
        let _ = writeln!(
            out,
            "    <rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\"{attrs}/>",
            px(r.x0 - bb.x0),
            px(bb.y1 - r.y1),
            px(r.width()),
            px(r.height())
        );
    };
    for (layer, color) in LAYERS {
        let _ = writeln!(out, "  <g id=\"{layer}\" fill=\"{color}\" fill-opacity=\"0.35\">");
        if layer == "level-silicon" {
            for p in plan.placements() {
                if p.module.kind() != ModuleKind::Spacer {
                    rect(&mut out, &p.rect(), "");
                }
            }
        }
        out.push_str("  </g>\n");
    }
    if opts.outlines {
        out.push_str("  <g id=\"modules\" fill=\"none\" stroke-width=\"1\">\n");
        for (i, p) in plan.placements().iter().enumerate() {
            let (color, dash) = kind_style(p.module.kind());
            let attrs = format!(
                " stroke=\"{color}\"{dash} data-id=\"{i}\" data-module=\"{}\"",
                escape(&p.module.name)
            );
            rect(&mut out, &p.rect(), &attrs);
        }
        out.push_str("  </g>\n");
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::floorplan::{compose, lookup, ModuleSpec, Placement, CHAIN};

    #[test]
    fn empty_plan_is_valid() {
        let svg = export_svg(&compose(vec![]).unwrap(), &SvgOptions::default());
        assert!(svg.starts_with("<svg "));
        assert!(svg.contains("viewBox=\"0 0 0 0\""));
        assert!(svg.ends_with("</svg>\n"));
        for (layer, _) in LAYERS {
            assert!(svg.contains(&format!("id=\"{layer}\"")));
        }
    }

    #[test]
    fn flips_y_and_scales() {
        let c = Arc::new(lookup(CHAIN).unwrap());
        let s = Arc::new(ModuleSpec::spacer(0.16, 0.1));
        let plan = compose(vec![Placement::at(&c, 0.0, 0.0), Placement::at(&s, 0.0, 0.46)]).unwrap();
        let svg = export_svg(&plan, &SvgOptions::default());
        assert!(svg.contains("viewBox=\"0 0 6.4 22.4\""));
        // Chain is at the bottom: top edge at 0.56 - 0.46 = 0.1 µm from the top.
        assert!(svg.contains("<rect x=\"0\" y=\"4\" width=\"6.4\" height=\"18.4\"/>"));
        assert!(svg.contains("stroke-dasharray"));
        assert_eq!(svg, export_svg(&plan, &SvgOptions::default()));
    }

    #[test]
    fn names_are_escaped() {
        let m = ModuleSpec::new("a<b>&\"c\"", 1.0, 1.0, 1, 0);
        let svg = export_svg(&crate::floorplan::Floorplan::single(m).unwrap(), &SvgOptions::default());
        assert!(svg.contains("data-module=\"a&lt;b&gt;&amp;&quot;c&quot;\""));
    }
}
