//! Brauer configurations: vertices, polygons (labeled multisets of vertices),
//! the multiplicity function and the orientation given by successor sequences.
//!
//! A [`BrauerConfiguration`] can hold data that breaks the axioms; use
//! [`validate`] to list every breach, or [`ConfigurationBuilder::build`] to
//! reject such data up front. Downstream modules refuse invalid configurations.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};

/// Name of a vertex in Γ₀.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(String);

/// Name of a polygon in Γ₁.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PolygonId(String);

macro_rules! name_impls {
    ($ty:ident) => {
        impl $ty {
            pub fn new(name: impl Into<String>) -> Self {
                Self(name.into())
            }

            pub fn as_str(&self) -> &str {
                &self.0
            }
        }

        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0)
            }
        }

        impl From<&str> for $ty {
            fn from(s: &str) -> Self {
                Self(s.to_owned())
            }
        }

        impl From<String> for $ty {
            fn from(s: String) -> Self {
                Self(s)
            }
        }

        impl std::borrow::Borrow<str> for $ty {
            fn borrow(&self) -> &str {
                &self.0
            }
        }
    };
}

name_impls!(VertexId);
name_impls!(PolygonId);

/// Finite multiset of vertices, stored as a sorted association list with
/// positive counts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Multiset {
    entries: Vec<(VertexId, u64)>,
}

impl Multiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn count(&self, vertex: &VertexId) -> u64 {
        self.entries
            .binary_search_by(|(v, _)| v.cmp(vertex))
            .map(|i| self.entries[i].1)
            .unwrap_or(0)
    }

    pub fn insert(&mut self, vertex: VertexId) {
        match self.entries.binary_search_by(|(v, _)| v.cmp(&vertex)) {
            Ok(i) => self.entries[i].1 += 1,
            Err(i) => self.entries.insert(i, (vertex, 1)),
        }
    }

    /// Total number of elements, counted with multiplicity.
    pub fn len(&self) -> u64 {
        self.entries.iter().map(|(_, c)| c).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `(vertex, count)` pairs in vertex order.
    pub fn iter(&self) -> impl Iterator<Item = (&VertexId, u64)> + '_ {
        self.entries.iter().map(|(v, c)| (v, *c))
    }

    /// Every element repeated according to its count, in sorted order.
    pub fn expanded(&self) -> impl Iterator<Item = &VertexId> + '_ {
        self.entries
            .iter()
            .flat_map(|(v, c)| std::iter::repeat_n(v, *c as usize))
    }

    /// The support of the multiset.
    pub fn support(&self) -> BTreeSet<VertexId> {
        self.entries.iter().map(|(v, _)| v.clone()).collect()
    }
}

impl<V: Into<VertexId>> FromIterator<V> for Multiset {
    fn from_iter<I: IntoIterator<Item = V>>(iter: I) -> Self {
        let mut m = Multiset::new();
        for v in iter {
            m.insert(v.into());
        }
        m
    }
}

/// A labeled multiset of vertices.
///
/// Two polygons compare equal iff their labels agree; polygons with equal
/// members but different labels are different polygons.
#[derive(Clone, Debug)]
pub struct Polygon {
    pub id: PolygonId,
    pub members: Multiset,
}

impl Polygon {
    pub fn new(id: impl Into<PolygonId>, members: Multiset) -> Self {
        Self {
            id: id.into(),
            members,
        }
    }

    pub fn same_content(&self, other: &Polygon) -> bool {
        self.id == other.id && self.members == other.members
    }
}

impl PartialEq for Polygon {
    fn eq(&self, other: &Self) -> bool {
        self.id == other.id
    }
}

impl Eq for Polygon {}

/// Linear presentation `α : V₁ < V₂ < … < Vₜ` of the cyclic order at a vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuccessorSequence {
    pub vertex: VertexId,
    pub polygons: Vec<PolygonId>,
}

impl SuccessorSequence {
    pub fn new<P: Into<PolygonId>>(
        vertex: impl Into<VertexId>,
        polygons: impl IntoIterator<Item = P>,
    ) -> Self {
        Self {
            vertex: vertex.into(),
            polygons: polygons.into_iter().map(Into::into).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.polygons.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polygons.is_empty()
    }
}

impl fmt::Display for SuccessorSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} : ", self.vertex)?;
        for (i, p) in self.polygons.iter().enumerate() {
            if i > 0 {
                f.write_str(" < ")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ViolationKind {
    C1,
    C2,
    C3,
    OrientationMultiplicityMismatch,
    OrientationOnTruncated,
    MissingOrientation,
    UnknownId,
    DuplicateId,
    ZeroMultiplicity,
}

impl ViolationKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ViolationKind::C1 => "C1",
            ViolationKind::C2 => "C2",
            ViolationKind::C3 => "C3",
            ViolationKind::OrientationMultiplicityMismatch => "OrientationMultiplicityMismatch",
            ViolationKind::OrientationOnTruncated => "OrientationOnTruncated",
            ViolationKind::MissingOrientation => "MissingOrientation",
            ViolationKind::UnknownId => "UnknownId",
            ViolationKind::DuplicateId => "DuplicateId",
            ViolationKind::ZeroMultiplicity => "ZeroMultiplicity",
        }
    }
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One breach of the configuration axioms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub location: String,
}

impl Violation {
    fn new(kind: ViolationKind, location: impl Into<String>) -> Self {
        Self {
            kind,
            location: location.into(),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.kind, self.location)
    }
}

/// A Brauer configuration Γ = (Γ₀, Γ₁, μ, 𝔬).
///
/// Declaration order of vertices and polygons is kept and is the index order
/// used by every derived structure (quiver vertices, matrix rows, arrow labels).
#[derive(Clone, Debug)]
pub struct BrauerConfiguration {
    vertices: Vec<VertexId>,
    polygons: Vec<Polygon>,
    /// Explicit multiplicities other than the default 1.
    multiplicity: BTreeMap<VertexId, u64>,
    orientation: BTreeMap<VertexId, SuccessorSequence>,
    vertex_index: HashMap<VertexId, usize>,
    polygon_index: HashMap<PolygonId, usize>,
    valid: bool,
}

impl PartialEq for BrauerConfiguration {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices
            && self.polygons.len() == other.polygons.len()
            && self
                .polygons
                .iter()
                .zip(&other.polygons)
                .all(|(a, b)| a.same_content(b))
            && self.multiplicity == other.multiplicity
            && self.orientation == other.orientation
    }
}

impl Eq for BrauerConfiguration {}

impl BrauerConfiguration {
    pub fn builder() -> ConfigurationBuilder {
        ConfigurationBuilder::default()
    }

    /// Assembles a configuration without rejecting axiom breaches.
    ///
    /// Explicit multiplicities equal to 1 on declared vertices are dropped,
    /// which keeps equality and serialization canonical.
    pub fn from_parts(
        vertices: Vec<VertexId>,
        polygons: Vec<Polygon>,
        multiplicity: BTreeMap<VertexId, u64>,
        orientation: BTreeMap<VertexId, SuccessorSequence>,
    ) -> Self {
        let mut vertex_index = HashMap::with_capacity(vertices.len());
        for (i, v) in vertices.iter().enumerate() {
            vertex_index.entry(v.clone()).or_insert(i);
        }
        let mut polygon_index = HashMap::with_capacity(polygons.len());
        for (i, p) in polygons.iter().enumerate() {
            polygon_index.entry(p.id.clone()).or_insert(i);
        }
        let multiplicity = multiplicity
            .into_iter()
            .filter(|(v, m)| !(*m == 1 && vertex_index.contains_key(v)))
            .collect();
        let mut config = Self {
            vertices,
            polygons,
            multiplicity,
            orientation,
            vertex_index,
            polygon_index,
            valid: false,
        };
        config.valid = validate(&config).is_empty();
        config
    }

    pub fn is_valid(&self) -> bool {
        self.valid
    }

    pub(crate) fn require_valid(&self) -> Result<()> {
        if self.valid {
            Ok(())
        } else {
            Err(Error::InvalidConfiguration(validate(self)))
        }
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn polygons(&self) -> &[Polygon] {
        &self.polygons
    }

    /// Multiplicities that differ from the default of 1.
    pub fn explicit_multiplicities(&self) -> &BTreeMap<VertexId, u64> {
        &self.multiplicity
    }

    pub fn orientation(&self) -> &BTreeMap<VertexId, SuccessorSequence> {
        &self.orientation
    }

    pub fn successor_sequence(&self, a: &VertexId) -> Option<&SuccessorSequence> {
        self.orientation.get(a)
    }

    pub fn vertex_position(&self, a: &VertexId) -> Result<usize> {
        self.vertex_index
            .get(a)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(a.to_string()))
    }

    pub fn polygon_position(&self, p: &PolygonId) -> Result<usize> {
        self.polygon_index
            .get(p)
            .copied()
            .ok_or_else(|| Error::UnknownPolygon(p.to_string()))
    }

    pub fn polygon(&self, p: &PolygonId) -> Result<&Polygon> {
        Ok(&self.polygons[self.polygon_position(p)?])
    }

    /// μ(a); vertices without an explicit entry have multiplicity 1.
    pub fn multiplicity(&self, a: &VertexId) -> Result<u64> {
        self.vertex_position(a)?;
        Ok(self.mu_unchecked(a))
    }

    fn mu_unchecked(&self, a: &VertexId) -> u64 {
        self.multiplicity.get(a).copied().unwrap_or(1)
    }

    fn val_unchecked(&self, a: &VertexId) -> u64 {
        self.polygons.iter().map(|p| p.members.count(a)).sum()
    }

    fn truncated_unchecked(&self, a: &VertexId) -> bool {
        self.val_unchecked(a) == 1 && self.mu_unchecked(a) == 1
    }

    pub fn occ(&self, a: &VertexId, p: &PolygonId) -> Result<u64> {
        occ(self, a, p)
    }

    pub fn val(&self, a: &VertexId) -> Result<u64> {
        val(self, a)
    }

    pub fn is_truncated(&self, a: &VertexId) -> Result<bool> {
        is_truncated(self, a)
    }

    /// Nontruncated vertices in declaration order.
    pub fn nontruncated_vertices(&self) -> impl Iterator<Item = &VertexId> + '_ {
        self.vertices
            .iter()
            .filter(|a| !self.truncated_unchecked(a))
    }
}

/// Incremental construction of a [`BrauerConfiguration`].
#[derive(Clone, Debug, Default)]
pub struct ConfigurationBuilder {
    vertices: Vec<VertexId>,
    polygons: Vec<Polygon>,
    multiplicity: BTreeMap<VertexId, u64>,
    orientation: BTreeMap<VertexId, SuccessorSequence>,
}

impl ConfigurationBuilder {
    pub fn vertex(mut self, v: impl Into<VertexId>) -> Self {
        self.vertices.push(v.into());
        self
    }

    pub fn vertices<V: Into<VertexId>>(mut self, vs: impl IntoIterator<Item = V>) -> Self {
        self.vertices.extend(vs.into_iter().map(Into::into));
        self
    }

    pub fn polygon<V: Into<VertexId>>(
        mut self,
        id: impl Into<PolygonId>,
        members: impl IntoIterator<Item = V>,
    ) -> Self {
        self.polygons
            .push(Polygon::new(id, members.into_iter().collect()));
        self
    }

    pub fn multiplicity(mut self, v: impl Into<VertexId>, mu: u64) -> Self {
        self.multiplicity.insert(v.into(), mu);
        self
    }

    pub fn orientation<P: Into<PolygonId>>(
        mut self,
        v: impl Into<VertexId>,
        polygons: impl IntoIterator<Item = P>,
    ) -> Self {
        let seq = SuccessorSequence::new(v, polygons);
        self.orientation.insert(seq.vertex.clone(), seq);
        self
    }

    pub fn build_unchecked(self) -> BrauerConfiguration {
        BrauerConfiguration::from_parts(
            self.vertices,
            self.polygons,
            self.multiplicity,
            self.orientation,
        )
    }

    /// Builds and validates; fails with every violation found.
    pub fn build(self) -> Result<BrauerConfiguration> {
        let config = self.build_unchecked();
        config.require_valid()?;
        Ok(config)
    }
}

/// Number of times `a` appears in polygon `p`.
pub fn occ(config: &BrauerConfiguration, a: &VertexId, p: &PolygonId) -> Result<u64> {
    config.vertex_position(a)?;
    Ok(config.polygon(p)?.members.count(a))
}

/// Total number of occurrences of `a` over all polygons.
pub fn val(config: &BrauerConfiguration, a: &VertexId) -> Result<u64> {
    config.vertex_position(a)?;
    Ok(config.val_unchecked(a))
}

/// `a` is truncated iff val(a) = μ(a) = 1.
pub fn is_truncated(config: &BrauerConfiguration, a: &VertexId) -> Result<bool> {
    config.vertex_position(a)?;
    Ok(config.truncated_unchecked(a))
}

/// V̄ = V ∩ Γ₀: the distinct vertices of a polygon.
pub fn vertex_set(p: &Polygon) -> BTreeSet<VertexId> {
    p.members.support()
}

/// Polygons containing `a`, in declaration order.
pub fn polygons_containing(config: &BrauerConfiguration, a: &VertexId) -> Result<Vec<PolygonId>> {
    config.vertex_position(a)?;
    Ok(config
        .polygons
        .iter()
        .filter(|p| p.members.count(a) > 0)
        .map(|p| p.id.clone())
        .collect())
}

/// Lists every breach of the configuration axioms. Empty iff the configuration
/// is a valid Brauer configuration.
pub fn validate(config: &BrauerConfiguration) -> Vec<Violation> {
    use ViolationKind::*;

    let mut out = Vec::new();

    let mut seen = BTreeSet::new();
    for v in &config.vertices {
        if !seen.insert(v) {
            out.push(Violation::new(DuplicateId, format!("vertex {v}")));
        }
    }
    let mut seen = BTreeSet::new();
    for p in &config.polygons {
        if !seen.insert(&p.id) {
            out.push(Violation::new(DuplicateId, format!("polygon {}", p.id)));
        }
    }

    for p in &config.polygons {
        for (v, _) in p.members.iter() {
            if !config.vertex_index.contains_key(v) {
                out.push(Violation::new(
                    UnknownId,
                    format!("polygon {} contains undeclared vertex {v}", p.id),
                ));
            }
        }
    }
    for (v, &m) in &config.multiplicity {
        if !config.vertex_index.contains_key(v) {
            out.push(Violation::new(
                UnknownId,
                format!("multiplicity given for undeclared vertex {v}"),
            ));
        } else if m == 0 {
            out.push(Violation::new(ZeroMultiplicity, format!("vertex {v}")));
        }
    }
    for (v, seq) in &config.orientation {
        if !config.vertex_index.contains_key(v) || seq.vertex != *v {
            out.push(Violation::new(
                UnknownId,
                format!("orientation given for undeclared vertex {v}"),
            ));
        }
        for p in &seq.polygons {
            if !config.polygon_index.contains_key(p) {
                out.push(Violation::new(
                    UnknownId,
                    format!("successor sequence at {v} names undeclared polygon {p}"),
                ));
            }
        }
    }

    for v in &config.vertices {
        if config.val_unchecked(v) == 0 {
            out.push(Violation::new(C1, format!("vertex {v} lies in no polygon")));
        }
    }

    for p in &config.polygons {
        let size = p.members.len();
        if size < 2 {
            out.push(Violation::new(
                C2,
                format!("polygon {} has {size} vertex occurrence(s)", p.id),
            ));
        }
        let has_heavy_vertex = p.members.iter().any(|(v, _)| {
            u128::from(config.val_unchecked(v)) * u128::from(config.mu_unchecked(v)) > 1
        });
        if !has_heavy_vertex {
            out.push(Violation::new(
                C3,
                format!("polygon {} has no vertex with val*mu > 1", p.id),
            ));
        }
    }

    for v in &config.vertices {
        let val = config.val_unchecked(v);
        let truncated = config.truncated_unchecked(v);
        match config.orientation.get(v) {
            Some(_) if truncated => {
                out.push(Violation::new(
                    OrientationOnTruncated,
                    format!("vertex {v}"),
                ));
            }
            Some(seq) => {
                let mut listed: BTreeMap<&PolygonId, u64> = BTreeMap::new();
                for p in &seq.polygons {
                    *listed.entry(p).or_default() += 1;
                }
                let mismatch = seq.is_empty()
                    || config
                        .polygons
                        .iter()
                        .any(|p| listed.get(&p.id).copied().unwrap_or(0) != p.members.count(v))
                    || listed
                        .keys()
                        .any(|p| !config.polygon_index.contains_key(*p));
                if mismatch {
                    out.push(Violation::new(
                        OrientationMultiplicityMismatch,
                        format!("vertex {v}: successor sequence `{seq}` does not list each polygon occ({v}, P) times"),
                    ));
                }
            }
            None if !truncated && val > 0 => {
                out.push(Violation::new(MissingOrientation, format!("vertex {v}")));
            }
            None => {}
        }
    }

    out
}
