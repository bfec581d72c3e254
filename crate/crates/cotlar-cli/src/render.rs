//! JSON and DOT rendering of library reports. Every list is emitted in
//! the deterministic order the library produced it, so identical runs
//! yield byte-identical output.

use serde_json::{json, Value};

use cotlar::building::Building;
use cotlar::coxeter::CoxeterSystem;
use cotlar::geometry::{classify, halfspace_side, HalfSpaceSide, RootRelation};
use cotlar::group::Group;
use cotlar::scalar::fmt_exact;
use cotlar::verify::CotlarReport;

pub fn cotlar_report<G: Group>(group: &G, report: &CotlarReport<G::Elem>) -> Value {
    json!({
        "radius": report.radius,
        "symbol": report.symbol_descriptor,
        "subgroup": report.subgroup_descriptor,
        "ball_size": report.ball_size,
        "pairs_checked": report.pairs_checked,
        "holds": report.holds(),
        "violations": report.violations.iter().map(|v| json!({
            "g": group.render(&v.g),
            "h": group.render(&v.h),
            "product": fmt_exact(&v.product),
        })).collect::<Vec<_>>(),
        "invariance_violations": report.invariance_violations.iter().map(|v| json!({
            "h_sub": group.render(&v.h_sub),
            "h": group.render(&v.h),
            "m_of_product": fmt_exact(&v.lhs),
            "m_of_h": fmt_exact(&v.rhs),
        })).collect::<Vec<_>>(),
    })
}

#[derive(Clone, Copy)]
pub enum ColorTag {
    Symbol,
    Side,
    Class,
}

fn class_color(class: RootRelation) -> &'static str {
    match class {
        RootRelation::FixesPositive => "#a6cee3",
        RootRelation::SwapsRoots => "#1f78b4",
        RootRelation::PosIntoPos => "#b2df8a",
        RootRelation::PosIntoNeg => "#33a02c",
        RootRelation::NegIntoPos => "#fb9a99",
        RootRelation::NegIntoNeg => "#e31a1c",
    }
}

/// Renders ball(radius) of a building as an undirected chamber-adjacency
/// graph: nodes are chambers labeled by their canonical words, edges join
/// chambers at Weyl distance one generator and carry its name, and node
/// fill encodes either the two-valued symbol, the half-space side, or the
/// six-class value of the chamber's distance word.
pub fn dot_graph<B: Building + Clone + Send + Sync + 'static>(
    building: &B,
    type_system: &CoxeterSystem,
    s: usize,
    radius: usize,
    color: ColorTag,
) -> Result<String, crate::Failure> {
    let ball = building.ball(radius).map_err(crate::Failure::from)?;
    let base = building.base_chamber();
    let mut out = String::from("graph chambers {\n  node [style=filled];\n");
    for chamber in &ball {
        let w = building
            .weyl_distance(&base, chamber)
            .map_err(crate::Failure::from)?;
        let fill = match color {
            ColorTag::Symbol | ColorTag::Side => match halfspace_side(type_system, s, &w) {
                HalfSpaceSide::Positive => "#a6cee3",
                HalfSpaceSide::Negative => "#fb9a99",
            },
            ColorTag::Class => {
                let class = classify(type_system, s, &w).map_err(crate::Failure::from)?;
                class_color(class)
            }
        };
        out.push_str(&format!(
            "  \"{}\" [fillcolor=\"{}\"];\n",
            building.render(chamber),
            fill
        ));
    }
    for (i, c) in ball.iter().enumerate() {
        for d in ball.iter().skip(i + 1) {
            let w = building.weyl_distance(c, d).map_err(crate::Failure::from)?;
            if w.length() == 1 {
                out.push_str(&format!(
                    "  \"{}\" -- \"{}\" [label=\"{}\"];\n",
                    building.render(c),
                    building.render(d),
                    type_system.name(w.word()[0] as usize)
                ));
            }
        }
    }
    out.push_str("}\n");
    Ok(out)
}
