//! Text renderings of quivers, Cartan matrices and relations.
//!
//! All output is LF-terminated and ordered by declaration order.

use std::fmt::Display;

use serde_json::json;

use crate::cartan::CartanMatrix;
use crate::quiver::{Quiver, RelationSet};

fn dot_id(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Graphviz digraph with one node per polygon and one labeled edge per arrow.
pub fn quiver_dot(quiver: &Quiver) -> String {
    let mut out = String::from("digraph quiver {\n");
    for v in quiver.vertices() {
        out.push_str(&format!("  {};\n", dot_id(quiver.polygon(v).as_str())));
    }
    for arrow in quiver.arrows() {
        out.push_str(&format!(
            "  {} -> {} [label={}];\n",
            dot_id(quiver.polygon(arrow.source).as_str()),
            dot_id(quiver.polygon(arrow.target).as_str()),
            dot_id(&arrow.label()),
        ));
    }
    out.push_str("}\n");
    out
}

pub fn quiver_json(quiver: &Quiver) -> String {
    let vertices: Vec<&str> = quiver
        .vertices()
        .map(|v| quiver.polygon(v).as_str())
        .collect();
    let arrows: Vec<_> = quiver
        .arrows()
        .iter()
        .map(|a| {
            json!({
                "label": a.label(),
                "generator": a.generator.as_str(),
                "ordinal": a.ordinal,
                "source": quiver.polygon(a.source).as_str(),
                "target": quiver.polygon(a.target).as_str(),
            })
        })
        .collect();
    let mut out = serde_json::to_string_pretty(&json!({
        "vertices": vertices,
        "arrows": arrows,
    }))
    .expect("JSON values always serialize");
    out.push('\n');
    out
}

/// Right-aligned table with polygon names as row and column headers.
pub fn cartan_table<T: Display>(m: &CartanMatrix<T>) -> String {
    let cells: Vec<Vec<String>> = m
        .rows()
        .map(|row| row.iter().map(ToString::to_string).collect())
        .collect();
    let label_width = m
        .labels()
        .iter()
        .map(|l| l.as_str().chars().count())
        .max()
        .unwrap_or(0);
    let widths: Vec<usize> = (0..m.order())
        .map(|j| {
            cells
                .iter()
                .map(|r| r[j].len())
                .chain(std::iter::once(m.labels()[j].as_str().chars().count()))
                .max()
                .unwrap_or(0)
        })
        .collect();

    let mut out = format!("{:label_width$}", "");
    for (l, w) in m.labels().iter().zip(&widths) {
        out.push_str(&format!("  {:>w$}", l.as_str()));
    }
    out.push('\n');
    for (l, row) in m.labels().iter().zip(&cells) {
        out.push_str(&format!("{:label_width$}", l.as_str()));
        for (c, w) in row.iter().zip(&widths) {
            out.push_str(&format!("  {c:>w$}"));
        }
        out.push('\n');
    }
    out
}

/// CSV with a header row; the first column holds row labels.
pub fn cartan_csv<T: Display>(m: &CartanMatrix<T>) -> String {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    let header = std::iter::once(String::new()).chain(m.labels().iter().map(|l| l.to_string()));
    w.write_record(header).expect("in-memory write");
    for (l, row) in m.labels().iter().zip(m.rows()) {
        let record = std::iter::once(l.to_string()).chain(row.iter().map(ToString::to_string));
        w.write_record(record).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("CSV of UTF-8 is UTF-8")
}

/// `{"polygons": [...], "matrix": [[...], ...]}`. Entries are written as exact
/// decimal integers whatever their size.
pub fn cartan_json<T: Display>(m: &CartanMatrix<T>) -> String {
    let labels: Vec<String> = m
        .labels()
        .iter()
        .map(|l| serde_json::to_string(l.as_str()).expect("strings serialize"))
        .collect();
    let rows: Vec<String> = m
        .rows()
        .map(|row| {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            format!("[{}]", cells.join(", "))
        })
        .collect();
    format!(
        "{{\"polygons\": [{}], \"matrix\": [{}]}}\n",
        labels.join(", "),
        rows.join(", ")
    )
}

/// Relations grouped by family, one per line, as arrow-label sequences.
pub fn relations_text(quiver: &Quiver, relations: &RelationSet) -> String {
    let mut out = format!("type one ({}):\n", relations.type_one.len());
    for (c, d) in &relations.type_one {
        out.push_str(&format!(
            "  at {}: ({})^{} - ({})^{}\n",
            quiver.polygon(c.cycle.anchor),
            quiver.path_label(&c.cycle.arrows),
            c.exponent,
            quiver.path_label(&d.cycle.arrows),
            d.exponent,
        ));
    }
    out.push_str(&format!("type two ({}):\n", relations.type_two.len()));
    for r in &relations.type_two {
        out.push_str(&format!(
            "  ({})^{} {}\n",
            quiver.path_label(&r.cycle.arrows),
            r.exponent,
            quiver.arrow(r.first_arrow).label(),
        ));
    }
    out.push_str(&format!("type three ({}):\n", relations.type_three.len()));
    for &(a, b) in &relations.type_three {
        out.push_str(&format!("  {}\n", quiver.path_label(&[a, b])));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::cartan_matrix;
    use crate::fixtures::example_configuration;
    use crate::quiver::{build_quiver, generate_relations};

    #[test]
    fn table_layout() {
        let m = cartan_matrix::<u64>(&example_configuration()).unwrap();
        assert_eq!(
            cartan_table(&m),
            "    V1  V2  V3  V4\n\
             V1   4   4   4   0\n\
             V2   4   4   4   0\n\
             V3   4   4  10   2\n\
             V4   0   0   2   2\n"
        );
    }

    #[test]
    fn csv_layout() {
        let m = cartan_matrix::<u64>(&example_configuration()).unwrap();
        assert_eq!(
            cartan_csv(&m),
            ",V1,V2,V3,V4\nV1,4,4,4,0\nV2,4,4,4,0\nV3,4,4,10,2\nV4,0,0,2,2\n"
        );
    }

    #[test]
    fn json_is_parseable() {
        let m = cartan_matrix::<u64>(&example_configuration()).unwrap();
        let v: serde_json::Value = serde_json::from_str(&cartan_json(&m)).unwrap();
        assert_eq!(v["polygons"][2], "V3");
        assert_eq!(v["matrix"][2][2], 10);
    }

    #[test]
    fn dot_has_every_arrow() {
        let q = build_quiver(&example_configuration()).unwrap();
        let dot = quiver_dot(&q);
        assert_eq!(dot.matches(" -> ").count(), 9);
        assert!(dot.contains("\"V3\" -> \"V3\" [label=\"a^(1)_3\"];"));
        assert!(dot.contains("\"V4\" -> \"V3\" [label=\"a^(3)_2\"];"));
        let json: serde_json::Value = serde_json::from_str(&quiver_json(&q)).unwrap();
        assert_eq!(json["arrows"].as_array().unwrap().len(), 9);
    }

    #[test]
    fn relations_listing() {
        let g = example_configuration();
        let q = build_quiver(&g).unwrap();
        let text = relations_text(&q, &generate_relations(&g, &q).unwrap());
        assert!(text.contains("type two (9):"));
        assert!(text.contains("  (a^(3)_2 a^(3)_3 a^(3)_1)^1 a^(3)_2\n"));
        assert!(text.contains("  a^(2)_2 a^(1)_1\n"));
    }
}
