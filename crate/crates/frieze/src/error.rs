//! Error types shared by the crate.

use thiserror::Error;

use crate::matrix::MatExact;

#[derive(Debug, Clone, Error)]
pub enum MatrixError {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix of size {size} exceeds the exact-determinant cap of 64")]
    TooLarge { size: usize },
    #[error("dimension mismatch: ({0}x{1}) * ({2}x{3})")]
    DimMismatch(usize, usize, usize, usize),
    #[error("entry length {got} does not match {rows}x{cols}")]
    BadShape { rows: usize, cols: usize, got: usize },
}

#[derive(Debug, Clone, Error)]
pub enum FriezeError {
    #[error("coefficient row must have even length 2n with n >= 4, got {len}")]
    BadCoefficientLength { len: usize },
    #[error("coefficient row does not generate a closed frieze")]
    NotClosed,
    #[error("window too small: need at least {need} rows, have {have}")]
    WindowTooSmall { need: usize, have: usize },
    #[error("index ({p},{q}) outside the stored window")]
    OutOfWindow { p: i64, q: i64 },
    #[error("doubled index ({p},{q}) has mismatched parity")]
    BadParity { p: i64, q: i64 },
}

#[derive(Debug, Clone, Error)]
pub enum PolygonError {
    #[error("monodromy is not the identity")]
    NotClosed { monodromy: MatExact },
    #[error("vertices {index}..{index}+2 form a degenerate (coplanar) triple")]
    DegenerateTriple { index: usize },
    #[error("consecutive determinant at vertex {index} is {det}, expected 1")]
    NotUnitDeterminant { index: usize, det: String },
    #[error("period {n} is divisible by 3: the lifting system is singular")]
    LiftDivisibleBy3 { n: usize },
    #[error("points {index}..{index}+2 are collinear; no lift exists")]
    CollinearTriple { index: usize },
    #[error("polygon needs at least 4 vertices, got {n}")]
    TooFewVertices { n: usize },
}

#[derive(Debug, Clone, Error)]
pub enum ClusterError {
    #[error("period must be at least 5, got {n}")]
    PeriodTooSmall { n: usize },
    #[error("vertex {k} out of range for quiver of size {size}")]
    VertexOutOfRange { k: usize, size: usize },
    #[error("zero value at vertex {k}; the chart does not cover this seed")]
    ZeroValue { k: usize },
    #[error("zero exchange numerator at vertex {k}")]
    ZeroNumerator { k: usize },
    #[error("zero entry on the chart at row {row}, column {col}")]
    ChartBoundary { row: i64, col: i64 },
    #[error("chart needs {need} values, got {got}")]
    BadChartLength { need: usize, got: usize },
    #[error("zig-zag needs {need} moves for period {n}, got {got}")]
    BadMoveCount { n: usize, need: usize, got: usize },
    #[error("arrow matrix is not skew-symmetric at ({i},{j})")]
    NotSkew { i: usize, j: usize },
}

#[derive(Debug, Clone, Error)]
pub enum ClassicalError {
    #[error("quiddity must have length >= 3, got {len}")]
    BadLength { len: usize },
    #[error("triangulation of an {n}-gon needs {need} diagonals, got {got}")]
    WrongDiagonalCount { n: usize, need: usize, got: usize },
    #[error("diagonals ({a},{b}) and ({c},{d}) cross")]
    CrossingDiagonals { a: usize, b: usize, c: usize, d: usize },
    #[error("invalid diagonal ({a},{b}) in an {n}-gon")]
    BadDiagonal { a: usize, b: usize, n: usize },
    #[error("quiddity does not generate a closed frieze")]
    NotClosed,
}

#[derive(Debug, Clone, Error)]
pub enum ArithError {
    #[error("not an arithmetic frieze: {reason}")]
    NotArithmetic { reason: String },
    #[error("cut position {cut} out of range 1..={n}")]
    BadCut { cut: usize, n: usize },
    #[error(transparent)]
    Frieze(#[from] FriezeError),
}

#[derive(Debug, Clone, Error)]
pub enum IoError {
    #[error("cannot parse rational from {text:?}")]
    BadRational { text: String },
    #[error("malformed {what}: {detail}")]
    Malformed { what: &'static str, detail: String },
}
