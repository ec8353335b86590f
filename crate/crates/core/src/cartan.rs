//! Closed-form Cartan numbers of a Brauer configuration algebra.
//!
//! With v, w the quiver vertices of polygons V, W:
//!
//! ```text
//! c(v,v) = 2 + Σ_{α ∈ V̄} occ(α,V)·(occ(α,V)·μ(α) − 1)
//! c(v,w) =     Σ_{α ∈ V̄ ∩ W̄} μ(α)·occ(α,V)·occ(α,W)        (V ≠ W)
//! dim Λ  = 2|Γ₁| + Σ_{α ∈ Γ₀} val(α)·(μ(α)·val(α) − 1)
//! ```
//!
//! Everything is generic over the integer type `T`; see [`Count`].

use std::fmt;

use crate::error::{Error, Result};
use crate::model::{vertex_set, BrauerConfiguration, PolygonId};
use crate::scalar::Count;

/// Square matrix of Cartan numbers, rows and columns in polygon declaration
/// order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanMatrix<T> {
    labels: Vec<PolygonId>,
    entries: Vec<T>,
}

impl<T> CartanMatrix<T> {
    /// Builds a matrix from row-major entries.
    ///
    /// # Panics
    /// If `entries.len() != labels.len()²`.
    pub fn from_rows(labels: Vec<PolygonId>, entries: Vec<T>) -> Self {
        assert_eq!(entries.len(), labels.len() * labels.len());
        Self { labels, entries }
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[PolygonId] {
        &self.labels
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.order() + j]
    }

    pub fn row(&self, i: usize) -> &[T] {
        let n = self.order();
        &self.entries[i * n..(i + 1) * n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[T]> + '_ {
        (0..self.order()).map(move |i| self.row(i))
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> CartanMatrix<U> {
        CartanMatrix {
            labels: self.labels.clone(),
            entries: self.entries.iter().map(f).collect(),
        }
    }
}

impl<T: PartialEq> CartanMatrix<T> {
    pub fn is_symmetric(&self) -> bool {
        let n = self.order();
        (0..n).all(|i| (i + 1..n).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// First `(i, j)` where the two matrices disagree, in row-major order.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize)> {
        if self.order() != other.order() {
            return Some((0, 0));
        }
        let n = self.order();
        (0..n * n)
            .find(|&k| self.entries[k] != other.entries[k])
            .map(|k| (k / n, k % n))
    }
}

impl<T: Count> CartanMatrix<T> {
    pub fn entry_sum(&self) -> Result<T> {
        self.entries
            .iter()
            .try_fold(T::zero(), |acc, x| acc.plus(x, "the Cartan entry sum"))
    }
}

impl<T: fmt::Display> fmt::Display for CartanMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.order() {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// dim vΛv.
pub fn cartan_diagonal<T: Count>(config: &BrauerConfiguration, p: &PolygonId) -> Result<T> {
    config.require_valid()?;
    let polygon = config.polygon(p)?;
    let mut total = T::lift(2)?;
    for (a, occ) in polygon.members.iter() {
        let occ = T::lift(occ)?;
        let mu = T::lift(config.multiplicity(a)?)?;
        let inner = occ.times(&mu, "occ*mu")?.minus(&T::one(), "occ*mu - 1")?;
        total = total.plus(&occ.times(&inner, "a diagonal term")?, "a diagonal entry")?;
    }
    Ok(total)
}

/// dim vΛw for distinct polygons.
pub fn cartan_off_diagonal<T: Count>(
    config: &BrauerConfiguration,
    p: &PolygonId,
    q: &PolygonId,
) -> Result<T> {
    config.require_valid()?;
    let left = config.polygon(p)?;
    let right = config.polygon(q)?;
    if p == q {
        return Err(Error::SamePolygon(p.to_string()));
    }
    let mut total = T::zero();
    for (a, occ_left) in left.members.iter() {
        let occ_right = right.members.count(a);
        if occ_right == 0 {
            continue;
        }
        let term = T::lift(config.multiplicity(a)?)?
            .times(&T::lift(occ_left)?, "mu*occ")?
            .times(&T::lift(occ_right)?, "mu*occ*occ")?;
        total = total.plus(&term, "an off-diagonal entry")?;
    }
    Ok(total)
}

pub fn cartan_matrix<T: Count>(config: &BrauerConfiguration) -> Result<CartanMatrix<T>> {
    config.require_valid()?;
    let labels: Vec<PolygonId> = config.polygons().iter().map(|p| p.id.clone()).collect();
    let n = labels.len();
    let mut entries = Vec::with_capacity(n * n);
    for (i, p) in labels.iter().enumerate() {
        for (j, q) in labels.iter().enumerate() {
            entries.push(if i == j {
                cartan_diagonal(config, p)?
            } else {
                cartan_off_diagonal(config, p, q)?
            });
        }
    }
    Ok(CartanMatrix { labels, entries })
}

/// dim_K Λ from the configuration data alone.
pub fn algebra_dimension<T: Count>(config: &BrauerConfiguration) -> Result<T> {
    config.require_valid()?;
    let polygons = u64::try_from(config.polygons().len()).map_err(|_| Error::Overflow("|Γ₁|"))?;
    let mut total = T::lift(2)?.times(&T::lift(polygons)?, "2|Γ₁|")?;
    for a in config.vertices() {
        let val = T::lift(config.val(a)?)?;
        let mu = T::lift(config.multiplicity(a)?)?;
        let inner = mu.times(&val, "mu*val")?.minus(&T::one(), "mu*val - 1")?;
        total = total.plus(
            &val.times(&inner, "a dimension term")?,
            "the algebra dimension",
        )?;
    }
    Ok(total)
}

/// vΛw ≠ 0, decided from the supports of the two polygons.
pub fn hom_nonzero(config: &BrauerConfiguration, p: &PolygonId, q: &PolygonId) -> Result<bool> {
    let left = vertex_set(config.polygon(p)?);
    let right = vertex_set(config.polygon(q)?);
    if p == q {
        return Err(Error::SamePolygon(p.to_string()));
    }
    Ok(!left.is_disjoint(&right))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{double_vertex_configuration, example_configuration};
    use num_bigint::BigUint;

    fn p(s: &str) -> PolygonId {
        PolygonId::new(s)
    }

    #[test]
    fn example_diagonal() {
        let g = example_configuration();
        assert_eq!(cartan_diagonal::<u64>(&g, &p("V1")).unwrap(), 4);
        assert_eq!(cartan_diagonal::<u64>(&g, &p("V3")).unwrap(), 10);
        assert_eq!(cartan_diagonal::<u64>(&g, &p("V4")).unwrap(), 2);
    }

    #[test]
    fn example_off_diagonal() {
        let g = example_configuration();
        assert_eq!(
            cartan_off_diagonal::<u64>(&g, &p("V1"), &p("V2")).unwrap(),
            4
        );
        assert_eq!(
            cartan_off_diagonal::<u64>(&g, &p("V1"), &p("V4")).unwrap(),
            0
        );
        assert_eq!(
            cartan_off_diagonal::<u64>(&g, &p("V3"), &p("V4")).unwrap(),
            2
        );
        assert_eq!(
            cartan_off_diagonal::<u64>(&g, &p("V3"), &p("V3")),
            Err(Error::SamePolygon("V3".into()))
        );
    }

    #[test]
    fn example_matrix_and_dimension() {
        let g = example_configuration();
        let m = cartan_matrix::<u64>(&g).unwrap();
        let rows: Vec<Vec<u64>> = m.rows().map(<[u64]>::to_vec).collect();
        assert_eq!(
            rows,
            vec![
                vec![4, 4, 4, 0],
                vec![4, 4, 4, 0],
                vec![4, 4, 10, 2],
                vec![0, 0, 2, 2]
            ]
        );
        assert!(m.is_symmetric());
        assert_eq!(m.entry_sum().unwrap(), 48);
        assert_eq!(algebra_dimension::<u64>(&g).unwrap(), 48);
    }

    #[test]
    fn same_answers_in_every_scalar() {
        let g = example_configuration();
        let small = cartan_matrix::<u32>(&g).unwrap();
        let wide = cartan_matrix::<u128>(&g).unwrap();
        let big = cartan_matrix::<BigUint>(&g).unwrap();
        assert_eq!(small.map(|&x| u128::from(x)), wide);
        assert_eq!(wide.map(|&x| BigUint::from(x)), big);
    }

    #[test]
    fn double_vertex_dimension() {
        let g = double_vertex_configuration();
        assert_eq!(algebra_dimension::<u64>(&g).unwrap(), 4);
        assert_eq!(cartan_diagonal::<u64>(&g, &p("V")).unwrap(), 4);
    }

    #[test]
    fn huge_multiplicity_overflows_narrow_types_only() {
        let g = BrauerConfiguration::builder()
            .vertices(["a", "b"])
            .polygon("V", ["a", "a", "a"])
            .polygon("W", ["a", "b"])
            .multiplicity("a", u64::MAX)
            .orientation("a", ["V", "V", "W", "V"])
            .build()
            .unwrap();
        assert!(matches!(cartan_matrix::<u64>(&g), Err(Error::Overflow(_))));
        let exact = cartan_matrix::<BigUint>(&g).unwrap();
        assert_eq!(*exact.get(0, 1), BigUint::from(u64::MAX) * 3u32);
        assert_eq!(
            exact.entry_sum().unwrap(),
            algebra_dimension::<BigUint>(&g).unwrap()
        );
    }

    #[test]
    fn zero_criterion_on_example() {
        let g = example_configuration();
        assert!(!hom_nonzero(&g, &p("V2"), &p("V4")).unwrap());
        assert!(hom_nonzero(&g, &p("V2"), &p("V3")).unwrap());
        assert!(hom_nonzero(&g, &p("V1"), &p("V2")).unwrap());
    }

    #[test]
    fn invalid_configuration_is_refused() {
        let bad = BrauerConfiguration::builder()
            .vertex("a")
            .polygon("V", ["a"])
            .build_unchecked();
        assert!(matches!(
            cartan_matrix::<u64>(&bad),
            Err(Error::InvalidConfiguration(_))
        ));
        assert!(matches!(
            algebra_dimension::<u64>(&bad),
            Err(Error::InvalidConfiguration(_))
        ));
    }
}
