//! Ready-made configurations used in tests, docs and the CLI golden files.

use crate::model::BrauerConfiguration;

/// Γ₀ = {1,2,3,4}, V₁ = {1,2}, V₂ = {1,2}, V₃ = {1,1,3,3}, V₄ = {3,4},
/// μ(1) = μ(2) = 2, μ(3) = μ(4) = 1, with successor sequences
/// `1 : V1 < V2 < V3 < V3`, `2 : V1 < V2`, `3 : V3 < V4 < V3`.
pub fn example_configuration() -> BrauerConfiguration {
    BrauerConfiguration::builder()
        .vertices(["1", "2", "3", "4"])
        .polygon("V1", ["1", "2"])
        .polygon("V2", ["1", "2"])
        .polygon("V3", ["1", "1", "3", "3"])
        .polygon("V4", ["3", "4"])
        .multiplicity("1", 2)
        .multiplicity("2", 2)
        .orientation("1", ["V1", "V2", "V3", "V3"])
        .orientation("2", ["V1", "V2"])
        .orientation("3", ["V3", "V4", "V3"])
        .build()
        .expect("example configuration is valid")
}

/// The same configuration as the TOML document shipped with the CLI.
pub const EXAMPLE_DOCUMENT: &str = r#"vertices = ["1", "2", "3", "4"]

[multiplicity]
1 = 2
2 = 2

[polygons]
V1 = ["1", "2"]
V2 = ["1", "2"]
V3 = ["1", "1", "3", "3"]
V4 = ["3", "4"]

[orientation]
1 = ["V1", "V2", "V3", "V3"]
2 = ["V1", "V2"]
3 = ["V3", "V4", "V3"]
"#;

/// One polygon {a, a} with μ(a) = 1.
pub fn double_vertex_configuration() -> BrauerConfiguration {
    BrauerConfiguration::builder()
        .vertex("a")
        .polygon("V", ["a", "a"])
        .orientation("a", ["V", "V"])
        .build()
        .expect("valid")
}
