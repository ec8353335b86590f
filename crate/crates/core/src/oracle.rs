//! Brute-force Cartan numbers by listing basis paths.
//!
//! Every basis element of vΛw is the class of a prefix of some C^μ(α) with C a
//! special α-cycle anchored at v. This module walks those powers arrow by
//! arrow and counts the prefixes that end at w, with one identification: all
//! full powers C^μ(α) anchored at v are a single class (they are equal modulo
//! the commutativity relations). Nothing here uses the closed-form formulas of
//! [`crate::cartan`].

use std::collections::HashSet;

use crate::cartan::CartanMatrix;
use crate::error::{Error, Result};
use crate::model::{BrauerConfiguration, PolygonId, VertexId};
use crate::quiver::{build_quiver, ArrowIx, Quiver, QuiverVertex};

/// Longest power C^μ(α) (in arrows) the oracle is willing to walk.
pub const MAX_WALK: u128 = 1 << 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BasisKind {
    /// The trivial path e_v.
    Idempotent,
    /// A nonempty proper prefix of some C^μ(α).
    ProperPrefix,
    /// The common class of all full powers C^μ(α) anchored at the vertex.
    FullCycleClass,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisPath {
    /// Empty for the idempotent; a representative power for the full-cycle class.
    pub arrows: Vec<ArrowIx>,
    pub source: QuiverVertex,
    pub target: QuiverVertex,
    pub kind: BasisKind,
    /// Vertex whose special cycle produced the path; `None` for the idempotent.
    pub generator: Option<VertexId>,
}

/// A candidate path that was folded into one already listed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Merge {
    pub generator: VertexId,
    pub length: usize,
    /// μ(α)·val(α) for the generator.
    pub period: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BasisEnumeration {
    pub paths: Vec<BasisPath>,
    pub merges: Vec<Merge>,
}

/// Basis paths from the vertex of `p` to the vertex of `q`.
pub fn enumerate_basis(
    config: &BrauerConfiguration,
    quiver: &Quiver,
    p: &PolygonId,
    q: &PolygonId,
) -> Result<Vec<BasisPath>> {
    Ok(enumerate_basis_detailed(config, quiver, p, q)?.paths)
}

/// Like [`enumerate_basis`], also reporting every candidate that was merged.
pub fn enumerate_basis_detailed(
    config: &BrauerConfiguration,
    quiver: &Quiver,
    p: &PolygonId,
    q: &PolygonId,
) -> Result<BasisEnumeration> {
    config.require_valid()?;
    let v = quiver.vertex_of(p)?;
    let w = quiver.vertex_of(q)?;

    let mut out = BasisEnumeration::default();
    if v == w {
        out.paths.push(BasisPath {
            arrows: Vec::new(),
            source: v,
            target: v,
            kind: BasisKind::Idempotent,
            generator: None,
        });
    }

    let mut seen: HashSet<Vec<ArrowIx>> = HashSet::new();
    let mut full_class_listed = false;

    for g in quiver.generators() {
        let t = g.val();
        let period = u128::from(g.multiplicity) * t as u128;
        if period > MAX_WALK {
            return Err(Error::OracleLimit {
                vertex: g.vertex.to_string(),
                length: period,
                limit: MAX_WALK,
            });
        }
        let period = period as usize;

        for l in (0..t).filter(|&l| quiver.arrow(ArrowIx(g.arrows.start + l)).source == v) {
            let mut walk = Vec::with_capacity(period);
            for k in 0..period {
                let ix = ArrowIx(g.arrows.start + (l + k) % t);
                walk.push(ix);
                if quiver.arrow(ix).target != w {
                    continue;
                }
                let full = walk.len() == period;
                let kind = if full {
                    BasisKind::FullCycleClass
                } else {
                    BasisKind::ProperPrefix
                };
                let duplicate = if full {
                    std::mem::replace(&mut full_class_listed, true)
                } else {
                    !seen.insert(walk.clone())
                };
                if duplicate {
                    out.merges.push(Merge {
                        generator: g.vertex.clone(),
                        length: walk.len(),
                        period,
                    });
                    continue;
                }
                out.paths.push(BasisPath {
                    arrows: walk.clone(),
                    source: v,
                    target: w,
                    kind,
                    generator: Some(g.vertex.clone()),
                });
            }
        }
    }
    Ok(out)
}

/// Cartan matrix whose (i, j) entry is the number of enumerated basis paths
/// between the i-th and j-th polygons.
pub fn oracle_cartan_matrix(config: &BrauerConfiguration) -> Result<CartanMatrix<u64>> {
    let quiver = build_quiver(config)?;
    let labels: Vec<PolygonId> = config.polygons().iter().map(|p| p.id.clone()).collect();
    let mut entries = Vec::with_capacity(labels.len() * labels.len());
    for p in &labels {
        for q in &labels {
            entries.push(enumerate_basis(config, &quiver, p, q)?.len() as u64);
        }
    }
    Ok(CartanMatrix::from_rows(labels, entries))
}
