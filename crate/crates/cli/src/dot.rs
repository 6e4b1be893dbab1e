//! DOT export of stratified collections. One node per stratum; solid edges
//! are inclusions along a row, dashed edges the Grassmannian fibrations to
//! the diagonal entries, labeled by their fiber.

use mdl_core::StratifiedCollection;
use std::fmt::Write;

pub fn render(c: &StratifiedCollection) -> String {
    let mut out = String::new();
    out.push_str("digraph collection {\n");
    out.push_str("  rankdir=LR;\n  node [shape=box, fontname=\"monospace\"];\n");
    for (i, row) in c.rows.iter().enumerate() {
        for entry in row {
            let base = entry.normalized_base();
            let _ = writeln!(
                out,
                "  s{i}_{t} [label=\"M{base}^{t} dim={dim} codim={codim}\"];",
                t = entry.t,
                dim = entry.dim,
                codim = entry.codim,
            );
        }
    }
    for (i, row) in c.rows.iter().enumerate() {
        for entry in row {
            // inclusion of the next-deeper stratum in the same row
            if entry.t + 1 < row.len() {
                let _ = writeln!(
                    out,
                    "  s{i}_{} -> s{i}_{} [style=solid];",
                    entry.t,
                    entry.t + 1
                );
            }
            // fibration onto the diagonal entry of its column
            if let Some(fiber) = &entry.fiber {
                let _ = writeln!(
                    out,
                    "  s{i}_{t} -> s{target}_0 [style=dashed, label=\"{fiber}\"];",
                    t = entry.t,
                    target = i + entry.t,
                );
            }
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use mdl_core::strata::build_collection;
    use mdl_core::{Genus, MukaiVector};

    #[test]
    fn hilbert_g6_has_six_nodes_and_the_lagrangian_label() {
        let c = build_collection(&MukaiVector::of(1, 1, 0), &Genus::of(6)).unwrap();
        let dot = render(&c);
        assert_eq!(dot.matches("label=\"M(").count(), 6);
        assert_eq!(dot.matches("style=solid").count(), 3);
        assert_eq!(dot.matches("style=dashed").count(), 3);
        assert!(dot.contains("G(2,5)"));
    }

    #[test]
    fn depth_zero_collection_is_a_single_node() {
        let c = build_collection(&MukaiVector::of(3, 1, 2), &Genus::of(6)).unwrap();
        let dot = render(&c);
        assert_eq!(dot.matches("label=\"M(").count(), 1);
        assert_eq!(dot.matches("->").count(), 0);
    }
}
