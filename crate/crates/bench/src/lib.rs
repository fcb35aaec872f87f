//! Inputs shared by the benchmarks.

use std::sync::Arc;

use stau_core::algebra::BoundQuiverAlgebra;
use stau_core::corpus;
use stau_core::rep::Representation;

/// Algebras of growing size, named for the report.
pub fn algebras() -> Vec<(String, Arc<BoundQuiverAlgebra>)> {
    vec![
        ("A2".into(), corpus::linear_a(2, 2)),
        ("A3".into(), corpus::linear_a(3, 2)),
        ("A4".into(), corpus::linear_a(4, 2)),
        ("cyclic-rad2-4".into(), corpus::cyclic_rad2(4, 2)),
    ]
}

/// The regular module of `1 -> .. -> n` together with its algebra.
pub fn regular(n: usize) -> (Arc<BoundQuiverAlgebra>, Representation) {
    let alg = corpus::linear_a(n, 2);
    let m = Representation::regular(&alg);
    (alg, m)
}
