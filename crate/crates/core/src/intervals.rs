//! Special and non-special diagrams, cut into (α, v)-intervals.
//!
//! For a nontruncated α and a polygon V with s = occ(α, V) ≥ 1, the closed
//! walk of α passes through v exactly s times. Numbering those passages
//! 1st v, 2nd v, … (starting from the first occurrence of V in the successor
//! sequence), the i-th interval is the run of quiver vertices strictly
//! between the i-th and (i+1)-th passage, cyclically, and the non-special
//! path q^(α,v)_i is the run of arrows joining them.

use crate::error::{Error, Result};
use crate::model::{BrauerConfiguration, PolygonId, VertexId};
use crate::quiver::{ArrowIx, Quiver, QuiverVertex};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalDiagram {
    pub generator: VertexId,
    pub base_polygon: PolygonId,
    pub base: QuiverVertex,
    /// 0-based positions of V in the successor sequence, in order.
    pub anchors: Vec<usize>,
    /// `intervals[i]` lies between anchor i and anchor i+1 (cyclically).
    pub intervals: Vec<Vec<QuiverVertex>>,
    /// `non_special_paths[i]` runs from anchor i to anchor i+1 (cyclically).
    pub non_special_paths: Vec<Vec<ArrowIx>>,
}

impl IntervalDiagram {
    /// s = occ(α, V).
    pub fn anchor_count(&self) -> usize {
        self.anchors.len()
    }

    /// occ_i^(α,v)(w) for i = 1..s.
    pub fn occurrences(&self, quiver: &Quiver, w: &PolygonId) -> Result<Vec<usize>> {
        interval_occurrences(self, quiver, w)
    }
}

pub fn build_diagram(
    config: &BrauerConfiguration,
    quiver: &Quiver,
    a: &VertexId,
    p: &PolygonId,
) -> Result<IntervalDiagram> {
    if config.is_truncated(a)? {
        return Err(Error::TruncatedVertex(a.to_string()));
    }
    let base = quiver.vertex_of(p)?;
    let g = quiver
        .generator(a)
        .ok_or_else(|| Error::UnknownVertex(a.to_string()))?;
    // stops[k] is the k-th polygon of the successor sequence.
    let stops: Vec<QuiverVertex> = g
        .arrows
        .clone()
        .map(|i| quiver.arrow(ArrowIx(i)).source)
        .collect();
    let anchors: Vec<usize> = stops
        .iter()
        .enumerate()
        .filter(|(_, &s)| s == base)
        .map(|(k, _)| k)
        .collect();
    if anchors.is_empty() {
        return Err(Error::VertexNotInPolygon {
            vertex: a.to_string(),
            polygon: p.to_string(),
        });
    }

    let t = stops.len();
    let mut intervals = Vec::with_capacity(anchors.len());
    let mut non_special_paths = Vec::with_capacity(anchors.len());
    for (i, &from) in anchors.iter().enumerate() {
        let to = anchors[(i + 1) % anchors.len()];
        // Steps from this anchor to the next; a lone anchor goes all the way round.
        let span = match (to + t - from) % t {
            0 => t,
            d => d,
        };
        intervals.push((1..span).map(|k| stops[(from + k) % t]).collect());
        non_special_paths.push(
            (0..span)
                .map(|k| ArrowIx(g.arrows.start + (from + k) % t))
                .collect(),
        );
    }

    Ok(IntervalDiagram {
        generator: a.clone(),
        base_polygon: p.clone(),
        base,
        anchors,
        intervals,
        non_special_paths,
    })
}

/// Number of times `w` appears in each interval of the diagram.
pub fn interval_occurrences(
    d: &IntervalDiagram,
    quiver: &Quiver,
    w: &PolygonId,
) -> Result<Vec<usize>> {
    let target = quiver.vertex_of(w)?;
    if target == d.base {
        return Err(Error::SamePolygon(w.to_string()));
    }
    Ok(d.intervals
        .iter()
        .map(|segment| segment.iter().filter(|&&x| x == target).count())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{double_vertex_configuration, example_configuration};
    use crate::quiver::build_quiver;

    fn v(s: &str) -> VertexId {
        VertexId::new(s)
    }

    fn p(s: &str) -> PolygonId {
        PolygonId::new(s)
    }

    fn qv(i: usize) -> QuiverVertex {
        QuiverVertex(i - 1)
    }

    #[test]
    fn vertex_one_at_v3() {
        let g = example_configuration();
        let q = build_quiver(&g).unwrap();
        let d = build_diagram(&g, &q, &v("1"), &p("V3")).unwrap();
        assert_eq!(d.anchor_count(), 2);
        assert_eq!(d.intervals, vec![vec![], vec![qv(1), qv(2)]]);
        assert_eq!(d.non_special_paths[0].len(), 1);
        assert_eq!(d.non_special_paths[1].len(), 3);
        assert_eq!(d.occurrences(&q, &p("V1")).unwrap(), vec![0, 1]);
    }

    #[test]
    fn vertex_three_at_v4() {
        let g = example_configuration();
        let q = build_quiver(&g).unwrap();
        let d = build_diagram(&g, &q, &v("3"), &p("V4")).unwrap();
        assert_eq!(d.intervals, vec![vec![qv(3), qv(3)]]);
        assert_eq!(d.non_special_paths[0].len(), 3);
        assert_eq!(d.occurrences(&q, &p("V3")).unwrap(), vec![2]);
        assert_eq!(d.occurrences(&q, &p("V1")).unwrap(), vec![0]);
    }

    #[test]
    fn only_anchors_means_empty_intervals() {
        let g = double_vertex_configuration();
        let q = build_quiver(&g).unwrap();
        let d = build_diagram(&g, &q, &v("a"), &p("V")).unwrap();
        assert_eq!(d.intervals, vec![Vec::<QuiverVertex>::new(), vec![]]);
    }

    #[test]
    fn errors() {
        let g = example_configuration();
        let q = build_quiver(&g).unwrap();
        assert!(matches!(
            build_diagram(&g, &q, &v("4"), &p("V4")),
            Err(Error::TruncatedVertex(_))
        ));
        assert!(matches!(
            build_diagram(&g, &q, &v("2"), &p("V3")),
            Err(Error::VertexNotInPolygon { .. })
        ));
        let d = build_diagram(&g, &q, &v("1"), &p("V3")).unwrap();
        assert!(matches!(
            d.occurrences(&q, &p("V3")),
            Err(Error::SamePolygon(_))
        ));
        assert!(matches!(
            d.occurrences(&q, &p("V9")),
            Err(Error::UnknownPolygon(_))
        ));
    }
}
