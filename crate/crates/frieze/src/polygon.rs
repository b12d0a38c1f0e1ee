//! Difference equations, monodromy, polygons in 3-space, and lifting.
//!
//! A coefficient row defines the third-order difference equation
//! `V_i = a_i V_{i-1} - b_i V_{i-2} + V_{i-3}` with `n`-periodic coefficients.
//! Solutions, viewed as vectors in 3-space, satisfy `V_{i+n} = M V_i` for a
//! fixed monodromy matrix `M` in SL3. The frieze generated by the row is
//! closed exactly when `M` is the identity, in which case the basis solution
//! closes up into an `n`-gon with unit consecutive determinants.

use crate::error::PolygonError;
use crate::frieze::{CoefficientRow, DoubledIndex};
use crate::matrix::MatExact;
use crate::rat::Rat;

/// A closed polygon in 3-space: cyclic vertices with
/// `det(V_{i-1}, V_i, V_{i+1}) = 1` for all `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polygon3 {
    vertices: Vec<[Rat; 3]>,
}

/// The SL3 matrix relating a solution to its shift by one period.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Monodromy {
    matrix: MatExact,
}

impl Monodromy {
    pub fn matrix(&self) -> &MatExact {
        &self.matrix
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }
}

/// Determinant of three column vectors.
pub fn det3(u: &[Rat; 3], v: &[Rat; 3], w: &[Rat; 3]) -> Rat {
    &u[0] * (&v[1] * &w[2] - &v[2] * &w[1]) - &v[0] * (&u[1] * &w[2] - &u[2] * &w[1])
        + &w[0] * (&u[1] * &v[2] - &u[2] * &v[1])
}

impl Polygon3 {
    /// Validates the unit-determinant invariant on every consecutive triple.
    pub fn new(vertices: Vec<[Rat; 3]>) -> Result<Self, PolygonError> {
        let n = vertices.len();
        if n < 4 {
            return Err(PolygonError::TooFewVertices { n });
        }
        for i in 0..n {
            let d = det3(
                &vertices[(i + n - 1) % n],
                &vertices[i],
                &vertices[(i + 1) % n],
            );
            if !d.is_one() {
                return Err(PolygonError::NotUnitDeterminant { index: i + 1, det: d.to_string() });
            }
        }
        Ok(Polygon3 { vertices })
    }

    /// No validation; for imports and negative tests.
    pub fn from_vertices_unchecked(vertices: Vec<[Rat; 3]>) -> Self {
        Polygon3 { vertices }
    }

    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    /// Vertex `V_i` for any integer `i`, cyclically (`V_1` is the first).
    pub fn v(&self, i: i64) -> &[Rat; 3] {
        let n = self.vertices.len() as i64;
        &self.vertices[((i - 1).rem_euclid(n)) as usize]
    }

    pub fn vertices(&self) -> &[[Rat; 3]] {
        &self.vertices
    }
}

/// The companion matrix `N = [[0,0,1],[1,0,-b],[0,1,a]]` of one step of the
/// difference equation.
pub fn companion_matrix(a: &Rat, b: &Rat) -> MatExact {
    MatExact::from_rows(vec![
        vec![Rat::zero(), Rat::zero(), Rat::one()],
        vec![Rat::one(), Rat::zero(), -b],
        vec![Rat::zero(), Rat::one(), a.clone()],
    ])
}

/// Monodromy `M = N_1 N_2 … N_n`. With `V_{-2}, V_{-1}, V_0` the standard
/// basis, the columns of `N_1 … N_r` are `V_{r-2}, V_{r-1}, V_r`, and every
/// solution satisfies `V_{i+n} = M V_i`.
pub fn monodromy(coeffs: &CoefficientRow) -> Monodromy {
    let mut m = MatExact::identity(3);
    for j in 1..=coeffs.n() as i64 {
        let n_j = companion_matrix(coeffs.a(j), coeffs.b(j));
        m = m.matmul(&n_j).expect("3x3");
    }
    Monodromy { matrix: m }
}

/// Closure criterion: the frieze generated by the row is closed of width
/// `n - 4` if and only if the monodromy is the identity.
pub fn is_closed(coeffs: &CoefficientRow) -> bool {
    monodromy(coeffs).is_identity()
}

/// Basis solution of the difference equation, starting from the standard
/// basis at `V_{-2}, V_{-1}, V_0` and iterating `count` further vectors.
pub(crate) fn basis_solution(coeffs: &CoefficientRow, count: usize) -> Vec<[Rat; 3]> {
    let mut vs: Vec<[Rat; 3]> = vec![
        [Rat::one(), Rat::zero(), Rat::zero()],
        [Rat::zero(), Rat::one(), Rat::zero()],
        [Rat::zero(), Rat::zero(), Rat::one()],
    ];
    for i in 1..=count as i64 {
        let k = vs.len();
        let (v1, v2, v3) = (&vs[k - 1], &vs[k - 2], &vs[k - 3]);
        let (a, b) = (coeffs.a(i), coeffs.b(i));
        let next = [
            a * &v1[0] - b * &v2[0] + &v3[0],
            a * &v1[1] - b * &v2[1] + &v3[1],
            a * &v1[2] - b * &v2[2] + &v3[2],
        ];
        vs.push(next);
    }
    vs
}

/// Solves the difference equation of a closed row into an `n`-gon
/// `V_1, …, V_n` (standard-basis initial triple). Errors with the offending
/// monodromy when the row is not closed.
pub fn solve_polygon(coeffs: &CoefficientRow) -> Result<Polygon3, PolygonError> {
    let m = monodromy(coeffs);
    if !m.is_identity() {
        return Err(PolygonError::NotClosed { monodromy: m.matrix().clone() });
    }
    let vs = basis_solution(coeffs, coeffs.n());
    Polygon3::new(vs[3..].to_vec())
}

/// Frieze entry read off a polygon: `v_{i,j} = det(V_{j-3}, V_{j-2}, V_i)`
/// for integer indices and `v_{i-1/2,j-1/2} = det(V_{i-1}, V_i, V_{j-3})` for
/// half-integer ones. Indices are doubled as usual.
pub fn polygon_to_frieze(poly: &Polygon3, idx: DoubledIndex) -> Rat {
    if idx.is_integer_class() {
        let (i, j) = (idx.p / 2, idx.q / 2);
        det3(poly.v(j - 3), poly.v(j - 2), poly.v(i))
    } else {
        // logical indices i'+1/2, j'+1/2 with p = 2i'+1, q = 2j'+1
        let (i, j) = ((idx.p - 1) / 2, (idx.q - 1) / 2);
        det3(poly.v(i), poly.v(i + 1), poly.v(j - 2))
    }
}

/// Recovers the coefficient row of a polygon by solving
/// `V_i = a_i V_{i-1} - b_i V_{i-2} + V_{i-3}` for each `i`; the third
/// coefficient must come out as 1, which pins the unit-determinant
/// normalization.
pub fn polygon_to_coefficients(poly: &Polygon3) -> Result<CoefficientRow, PolygonError> {
    let n = poly.n() as i64;
    let mut values = Vec::with_capacity(2 * poly.n());
    for i in 1..=n {
        let m = MatExact::from_rows(vec![
            vec![poly.v(i - 1)[0].clone(), poly.v(i - 2)[0].clone(), poly.v(i - 3)[0].clone()],
            vec![poly.v(i - 1)[1].clone(), poly.v(i - 2)[1].clone(), poly.v(i - 3)[1].clone()],
            vec![poly.v(i - 1)[2].clone(), poly.v(i - 2)[2].clone(), poly.v(i - 3)[2].clone()],
        ]);
        let det = m.determinant().expect("3x3");
        if det.is_zero() {
            return Err(PolygonError::DegenerateTriple { index: i as usize });
        }
        // Cramer's rule for (alpha, beta, gamma)
        let target = poly.v(i);
        let col = |c: usize| -> Rat {
            let mut mm = m.clone();
            for r in 0..3 {
                mm.set(r, c, target[r].clone());
            }
            mm.determinant().expect("3x3").checked_div(&det).expect("nonzero det")
        };
        let (alpha, beta, gamma) = (col(0), col(1), col(2));
        if !gamma.is_one() {
            return Err(PolygonError::NotUnitDeterminant {
                index: i as usize,
                det: gamma.to_string(),
            });
        }
        values.push((alpha, -beta));
    }
    // values[i-1] = (a_i, b_i); assemble (b_1, a_1, …)
    let mut flat = Vec::with_capacity(2 * poly.n());
    for (a, b) in values {
        flat.push(b);
        flat.push(a);
    }
    CoefficientRow::new(flat).map_err(|_| PolygonError::TooFewVertices { n: poly.n() })
}

/// Convexity in 3-space: every other vertex lies strictly on the positive
/// side of the plane spanned by each edge `V_{i-1} V_i`.
pub fn is_convex(poly: &Polygon3) -> bool {
    let n = poly.n() as i64;
    for i in 1..=n {
        for j in 1..=n {
            let j_excluded = (j - (i - 1)).rem_euclid(n) == 0 || (j - i).rem_euclid(n) == 0;
            if j_excluded {
                continue;
            }
            if !det3(poly.v(i - 1), poly.v(i), poly.v(j)).is_positive() {
                return false;
            }
        }
    }
    true
}

/// A floating-point polygon produced by [`lift_projective`].
#[derive(Debug, Clone)]
pub struct LiftedPolygon {
    pub vertices: Vec<[f64; 3]>,
    /// Common value of the consecutive determinants; `-1.0` marks the lift
    /// that exists only with the reversed sign condition.
    pub det_sign: f64,
}

const COLLINEAR_EPS: f64 = 1e-12;

/// Rescales projective representatives to unit consecutive determinants.
///
/// Given direction vectors `Ṽ_i`, solves `t_{i-1} t_i t_{i+1}
/// = 1 / det(Ṽ_{i-1}, Ṽ_i, Ṽ_{i+1})` — a circulant linear system in
/// `log |t_i|` plus a sign system over GF(2). Both are invertible exactly
/// when `n` is not a multiple of 3.
pub fn lift_projective(points: &[[f64; 3]]) -> Result<LiftedPolygon, PolygonError> {
    let n = points.len();
    if n < 4 {
        return Err(PolygonError::TooFewVertices { n });
    }
    if n % 3 == 0 {
        return Err(PolygonError::LiftDivisibleBy3 { n });
    }
    let det = |a: &[f64; 3], b: &[f64; 3], c: &[f64; 3]| -> f64 {
        a[0] * (b[1] * c[2] - b[2] * c[1]) - b[0] * (a[1] * c[2] - a[2] * c[1])
            + c[0] * (a[1] * b[2] - a[2] * b[1])
    };
    let mut dets = Vec::with_capacity(n);
    for i in 0..n {
        let d = det(&points[(i + n - 1) % n], &points[i], &points[(i + 1) % n]);
        let scale = norm(&points[(i + n - 1) % n]) * norm(&points[i]) * norm(&points[(i + 1) % n]);
        if d.abs() <= COLLINEAR_EPS * scale.max(1.0) {
            return Err(PolygonError::CollinearTriple { index: i + 1 });
        }
        dets.push(d);
    }

    // magnitudes: x_{i-1} + x_i + x_{i+1} = -log|d_i|, x = log|t|
    let mut mat = vec![vec![0.0f64; n]; n];
    let mut rhs = vec![0.0f64; n];
    for i in 0..n {
        mat[i][(i + n - 1) % n] += 1.0;
        mat[i][i] += 1.0;
        mat[i][(i + 1) % n] += 1.0;
        rhs[i] = -dets[i].abs().ln();
    }
    let logs = solve_dense(&mut mat, &mut rhs)
        .ok_or(PolygonError::LiftDivisibleBy3 { n })?;

    // signs: e_{i-1} + e_i + e_{i+1} = f_i over GF(2), f_i = [d_i < 0]
    let f: Vec<u8> = dets.iter().map(|d| u8::from(*d < 0.0)).collect();
    let (signs, det_sign) = match solve_sign_system(n, &f) {
        Some(e) => (e, 1.0),
        None => {
            // fall back to the uniformly reversed condition t³ d = -1
            let flipped: Vec<u8> = f.iter().map(|x| x ^ 1).collect();
            let e = solve_sign_system(n, &flipped)
                .ok_or(PolygonError::LiftDivisibleBy3 { n })?;
            (e, -1.0)
        }
    };

    let vertices = (0..n)
        .map(|i| {
            let t = logs[i].exp() * if signs[i] == 1 { -1.0 } else { 1.0 };
            [t * points[i][0], t * points[i][1], t * points[i][2]]
        })
        .collect();
    Ok(LiftedPolygon { vertices, det_sign })
}

fn norm(v: &[f64; 3]) -> f64 {
    (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt()
}

/// Gaussian elimination with partial pivoting; `None` on a singular system.
fn solve_dense(mat: &mut [Vec<f64>], rhs: &mut [f64]) -> Option<Vec<f64>> {
    let n = rhs.len();
    for k in 0..n {
        let piv = (k..n).max_by(|&a, &b| {
            mat[a][k].abs().partial_cmp(&mat[b][k].abs()).unwrap()
        })?;
        if mat[piv][k].abs() < 1e-12 {
            return None;
        }
        mat.swap(k, piv);
        rhs.swap(k, piv);
        for i in k + 1..n {
            let factor = mat[i][k] / mat[k][k];
            for j in k..n {
                mat[i][j] -= factor * mat[k][j];
            }
            rhs[i] -= factor * rhs[k];
        }
    }
    let mut x = vec![0.0; n];
    for i in (0..n).rev() {
        let mut acc = rhs[i];
        for j in i + 1..n {
            acc -= mat[i][j] * x[j];
        }
        x[i] = acc / mat[i][i];
    }
    Some(x)
}

/// Solves `e_{i-1} ^ e_i ^ e_{i+1} = f_i` over GF(2).
fn solve_sign_system(n: usize, f: &[u8]) -> Option<Vec<u8>> {
    let mut rows: Vec<Vec<u8>> = (0..n)
        .map(|i| {
            let mut row = vec![0u8; n + 1];
            row[(i + n - 1) % n] ^= 1;
            row[i] ^= 1;
            row[(i + 1) % n] ^= 1;
            row[n] = f[i];
            row
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(pr) = (r..n).find(|&i| rows[i][c] == 1) else { continue };
        rows.swap(r, pr);
        for i in 0..n {
            if i != r && rows[i][c] == 1 {
                let (head, tail) = if i < r {
                    let (a, b) = rows.split_at_mut(r);
                    (&mut a[i], &b[0])
                } else {
                    let (a, b) = rows.split_at_mut(i);
                    (&mut b[0], &a[r])
                };
                for j in 0..=n {
                    head[j] ^= tail[j];
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == n {
            break;
        }
    }
    // consistency
    for i in r..n {
        if rows[i][n] == 1 {
            return None;
        }
    }
    let mut e = vec![0u8; n];
    for (row_idx, &c) in pivot_cols.iter().enumerate() {
        e[c] = rows[row_idx][n];
    }
    Some(e)
}
