//! The quiver induced by a Brauer configuration, its special cycles, and the
//! defining relations of the associated algebra.
//!
//! Each nontruncated vertex α with successor sequence `α : V₁ < … < Vₜ`
//! contributes the closed walk
//!
//! ```text
//! v₁ --a^(α)_1--> v₂ --a^(α)_2--> … --a^(α)_(t-1)--> vₜ --a^(α)_t--> v₁
//! ```
//!
//! so the arrows of α occupy one contiguous block of [`Quiver::arrows`], in
//! ordinal order. A special α-cycle is a rotation of that walk.

use std::collections::HashSet;
use std::fmt;
use std::ops::Range;

use crate::error::{Error, Result};
use crate::model::{BrauerConfiguration, PolygonId, VertexId};

/// Vertex of the quiver; the index of its polygon in declaration order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QuiverVertex(pub usize);

impl QuiverVertex {
    pub fn index(self) -> usize {
        self.0
    }
}

/// Position of an arrow in [`Quiver::arrows`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArrowIx(pub usize);

/// The arrow a^(α)_j.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub generator: VertexId,
    /// 1-based position in the successor sequence of `generator`.
    pub ordinal: usize,
    pub source: QuiverVertex,
    pub target: QuiverVertex,
}

impl Arrow {
    pub fn label(&self) -> String {
        format!("a^({})_{}", self.generator, self.ordinal)
    }
}

impl fmt::Display for Arrow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a^({})_{}", self.generator, self.ordinal)
    }
}

/// Arrows contributed by one nontruncated vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub vertex: VertexId,
    pub multiplicity: u64,
    pub arrows: Range<usize>,
}

impl Generator {
    pub fn val(&self) -> usize {
        self.arrows.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    polygons: Vec<PolygonId>,
    arrows: Vec<Arrow>,
    generators: Vec<Generator>,
}

impl Quiver {
    pub fn vertex_count(&self) -> usize {
        self.polygons.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = QuiverVertex> + '_ {
        (0..self.polygons.len()).map(QuiverVertex)
    }

    pub fn polygon(&self, v: QuiverVertex) -> &PolygonId {
        &self.polygons[v.0]
    }

    pub fn vertex_of(&self, p: &PolygonId) -> Result<QuiverVertex> {
        self.polygons
            .iter()
            .position(|q| q == p)
            .map(QuiverVertex)
            .ok_or_else(|| Error::UnknownPolygon(p.to_string()))
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, ix: ArrowIx) -> &Arrow {
        &self.arrows[ix.0]
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn generator(&self, a: &VertexId) -> Option<&Generator> {
        self.generators.iter().find(|g| &g.vertex == a)
    }

    /// Arrow a^(α)_j, if it exists.
    pub fn find_arrow(&self, a: &VertexId, ordinal: usize) -> Option<ArrowIx> {
        let g = self.generator(a)?;
        (1..=g.val())
            .contains(&ordinal)
            .then(|| ArrowIx(g.arrows.start + ordinal - 1))
    }

    /// Arrow following `ix` in the closed walk of its generator.
    pub fn successor_arrow(&self, ix: ArrowIx) -> ArrowIx {
        let g = self
            .generators
            .iter()
            .find(|g| g.arrows.contains(&ix.0))
            .expect("arrow belongs to a generator");
        let offset = (ix.0 - g.arrows.start + 1) % g.val();
        ArrowIx(g.arrows.start + offset)
    }

    /// Renders a path as space-separated arrow labels.
    pub fn path_label(&self, path: &[ArrowIx]) -> String {
        path.iter()
            .map(|&ix| self.arrow(ix).label())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Builds the induced quiver: one vertex per polygon, one arrow per adjacent
/// pair (cyclically) of each successor sequence.
pub fn build_quiver(config: &BrauerConfiguration) -> Result<Quiver> {
    config.require_valid()?;
    let polygons: Vec<PolygonId> = config.polygons().iter().map(|p| p.id.clone()).collect();
    let mut arrows = Vec::new();
    let mut generators = Vec::new();
    for a in config.nontruncated_vertices() {
        let seq = config
            .successor_sequence(a)
            .expect("valid configurations orient every nontruncated vertex");
        let stops = seq
            .polygons
            .iter()
            .map(|p| config.polygon_position(p).map(QuiverVertex))
            .collect::<Result<Vec<_>>>()?;
        let start = arrows.len();
        for (j, &source) in stops.iter().enumerate() {
            arrows.push(Arrow {
                generator: a.clone(),
                ordinal: j + 1,
                source,
                target: stops[(j + 1) % stops.len()],
            });
        }
        generators.push(Generator {
            vertex: a.clone(),
            multiplicity: config.multiplicity(a)?,
            arrows: start..arrows.len(),
        });
    }
    Ok(Quiver {
        polygons,
        arrows,
        generators,
    })
}

/// A special α-cycle: the closed walk of α read from position `rotation`.
///
/// Identity is (generator, rotation); two rotations anchored at the same
/// quiver vertex are different cycles.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SpecialCycle {
    pub generator: VertexId,
    /// 0-based start position in the successor sequence.
    pub rotation: usize,
    pub anchor: QuiverVertex,
    pub arrows: Vec<ArrowIx>,
}

impl SpecialCycle {
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    /// The image of the cycle under f.
    pub fn first_arrow(&self) -> ArrowIx {
        first_arrow(self)
    }
}

/// Returns the first arrow of a special cycle.
pub fn first_arrow(c: &SpecialCycle) -> ArrowIx {
    c.arrows[0]
}

fn nontruncated_generator<'q>(
    config: &BrauerConfiguration,
    quiver: &'q Quiver,
    a: &VertexId,
) -> Result<&'q Generator> {
    if config.is_truncated(a)? {
        return Err(Error::TruncatedVertex(a.to_string()));
    }
    quiver
        .generator(a)
        .ok_or_else(|| Error::UnknownVertex(a.to_string()))
}

fn rotation(quiver: &Quiver, g: &Generator, l: usize) -> SpecialCycle {
    let t = g.val();
    let arrows: Vec<ArrowIx> = (0..t)
        .map(|k| ArrowIx(g.arrows.start + (l + k) % t))
        .collect();
    SpecialCycle {
        generator: g.vertex.clone(),
        rotation: l,
        anchor: quiver.arrow(arrows[0]).source,
        arrows,
    }
}

/// All val(α) special α-cycles, ordered by rotation.
pub fn special_cycles(
    config: &BrauerConfiguration,
    quiver: &Quiver,
    a: &VertexId,
) -> Result<Vec<SpecialCycle>> {
    let g = nontruncated_generator(config, quiver, a)?;
    Ok((0..g.val()).map(|l| rotation(quiver, g, l)).collect())
}

/// The special α-cycles anchored at occurrences of polygon `p`, in sequence
/// order. There are exactly occ(α, p) of them.
pub fn special_cycles_at(
    config: &BrauerConfiguration,
    quiver: &Quiver,
    a: &VertexId,
    p: &PolygonId,
) -> Result<Vec<SpecialCycle>> {
    let g = nontruncated_generator(config, quiver, a)?;
    let v = quiver.vertex_of(p)?;
    if config.occ(a, p)? == 0 {
        return Err(Error::VertexNotInPolygon {
            vertex: a.to_string(),
            polygon: p.to_string(),
        });
    }
    Ok((0..g.val())
        .filter(|&l| quiver.arrows[g.arrows.start + l].source == v)
        .map(|l| rotation(quiver, g, l))
        .collect())
}

/// C^exponent for a special cycle C.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclePower {
    pub cycle: SpecialCycle,
    pub exponent: u64,
}

/// C^μ(α) f(C).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleOvershoot {
    pub cycle: SpecialCycle,
    pub exponent: u64,
    pub first_arrow: ArrowIx,
}

/// The generating relations ρ_Γ, as symbolic arrow data.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RelationSet {
    /// Commutativity relations C^μ(α) − D^μ(β) at a common anchor, one per
    /// unordered pair of distinct anchored cycles.
    pub type_one: Vec<(CyclePower, CyclePower)>,
    /// Monomials C^μ(α) f(C), one per special cycle.
    pub type_two: Vec<CycleOvershoot>,
    /// Quadratic monomials ab that are not consecutive in any special cycle.
    pub type_three: Vec<(ArrowIx, ArrowIx)>,
}

impl RelationSet {
    pub fn len(&self) -> usize {
        self.type_one.len() + self.type_two.len() + self.type_three.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Generates the three families of relations.
pub fn generate_relations(config: &BrauerConfiguration, quiver: &Quiver) -> Result<RelationSet> {
    config.require_valid()?;
    let mut relations = RelationSet::default();

    for polygon in config.polygons() {
        let mut anchored = Vec::new();
        for (a, _) in polygon.members.iter() {
            if config.is_truncated(a)? {
                continue;
            }
            let mu = config.multiplicity(a)?;
            for c in special_cycles_at(config, quiver, a, &polygon.id)? {
                anchored.push(CyclePower {
                    cycle: c,
                    exponent: mu,
                });
            }
        }
        for (i, c) in anchored.iter().enumerate() {
            for d in &anchored[i + 1..] {
                relations.type_one.push((c.clone(), d.clone()));
            }
        }
    }

    for g in quiver.generators() {
        for c in special_cycles(config, quiver, &g.vertex)? {
            let first = c.first_arrow();
            relations.type_two.push(CycleOvershoot {
                cycle: c,
                exponent: g.multiplicity,
                first_arrow: first,
            });
        }
    }

    let consecutive: HashSet<(ArrowIx, ArrowIx)> = (0..quiver.arrows.len())
        .map(|i| (ArrowIx(i), quiver.successor_arrow(ArrowIx(i))))
        .collect();
    for (i, a) in quiver.arrows.iter().enumerate() {
        for (j, b) in quiver.arrows.iter().enumerate() {
            let pair = (ArrowIx(i), ArrowIx(j));
            if a.target == b.source && !consecutive.contains(&pair) {
                relations.type_three.push(pair);
            }
        }
    }

    Ok(relations)
}
