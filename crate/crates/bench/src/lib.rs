//! Benchmark fixtures for the classgraph pipeline.

use classgraph_core::structured::GroupExpr;

/// `F21 × F55`, the smallest group whose prime graph is a block square.
pub fn square_group() -> GroupExpr {
    GroupExpr::direct(vec![GroupExpr::frobenius(vec![7], 3), GroupExpr::frobenius(vec![11], 5)])
}

/// A larger constructed group with a five-vertex block square.
pub fn wide_square_group() -> GroupExpr {
    GroupExpr::direct(vec![GroupExpr::frobenius(vec![7, 13], 3), GroupExpr::frobenius(vec![11], 5)])
}
