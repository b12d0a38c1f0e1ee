//! Arithmetic (positive-integer) closed friezes: enumeration, dihedral
//! classification, stabilization, connected sums, and semi-infinite
//! integer patterns.
//!
//! # Enumeration
//!
//! The search assigns the `2(n-4)` double-column chart values, which are
//! themselves frieze entries and hence positive integers, then completes the
//! period column by column. Three prunes keep the tree small: every completed
//! entry must be positive, every division must be exact, and the band must
//! wrap around to its first two columns. Each frieze found is re-emitted as
//! all `2n` single-step rotations of its first row, matching the convention
//! that counts tuples rather than dihedral classes.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::error::ArithError;
use crate::frieze::{frieze_from_coefficients, CoefficientRow, Frieze2Window};
use crate::polygon::{det3, is_closed, solve_polygon};
use crate::rat::Rat;

/// A coefficient row generating a closed frieze with all entries positive
/// integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArithFrieze {
    coeffs: CoefficientRow,
    width: usize,
}

impl ArithFrieze {
    /// Validates closure and band positivity/integrality.
    pub fn new(coeffs: CoefficientRow) -> Result<Self, ArithError> {
        if !coeffs.is_positive_integer() {
            return Err(ArithError::NotArithmetic {
                reason: "coefficient row has a non positive-integer entry".into(),
            });
        }
        if !is_closed(&coeffs) {
            return Err(ArithError::NotArithmetic { reason: "monodromy is not trivial".into() });
        }
        let n = coeffs.n();
        let w = frieze_from_coefficients(&coeffs, n.saturating_sub(4).max(1));
        for r in 0..n as i64 - 4 {
            for u in 1..=2 * n as i64 {
                let v = w.get(r, u).expect("in band");
                if !(v.is_integer() && v.is_positive()) {
                    return Err(ArithError::NotArithmetic {
                        reason: format!("entry at row {r}, column {u} is {v}"),
                    });
                }
            }
        }
        Ok(ArithFrieze { coeffs, width: n - 4 })
    }

    pub fn from_tuple(tuple: &[u64]) -> Result<Self, ArithError> {
        let coeffs = CoefficientRow::new(tuple.iter().map(|&v| Rat::from(v)).collect())
            .map_err(ArithError::Frieze)?;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &CoefficientRow {
        &self.coeffs
    }

    pub fn n(&self) -> usize {
        self.coeffs.n()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// First row as integers, starting at `b_1`.
    pub fn tuple(&self) -> Vec<u64> {
        self.coeffs.values().iter().map(|v| v.to_i64().unwrap() as u64).collect()
    }
}

/// Parameters of the bounded enumeration.
#[derive(Debug, Clone, Copy)]
pub struct SearchConfig {
    /// Period of the friezes to search for.
    pub n: usize,
    /// Cap on the double-column chart values; the result is complete for
    /// every frieze with some pair of adjacent columns bounded by this.
    pub value_bound: u64,
    /// Worker threads over the top of the search tree; 1 is sequential.
    pub jobs: usize,
}

/// All arithmetic friezes of period `cfg.n` whose chart values fit the bound,
/// as the set of their first-row tuples (all rotations counted separately).
pub fn enumerate_arithmetic(cfg: &SearchConfig) -> BTreeSet<Vec<u64>> {
    let n = cfg.n;
    if n == 4 {
        // width zero: the all-ones pattern alone
        return BTreeSet::from([vec![1u64; 8]]);
    }
    let w = n - 4;
    let bound = cfg.value_bound as i128;
    let tops: Vec<(i128, i128)> = (1..=bound)
        .flat_map(|x| (1..=bound).map(move |y| (x, y)))
        .collect();
    let run = |&(x1, y1): &(i128, i128)| -> BTreeSet<Vec<u64>> {
        let mut found = BTreeSet::new();
        let mut col0 = vec![0i128; w];
        let mut col1 = vec![0i128; w];
        col0[0] = x1;
        col1[0] = y1;
        assign(n, bound, 1, &mut col0, &mut col1, &mut found);
        found
    };
    let mut out = BTreeSet::new();
    if cfg.jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.jobs)
            .build()
            .expect("thread pool");
        let sets: Vec<BTreeSet<Vec<u64>>> =
            pool.install(|| tops.par_iter().map(run).collect());
        for s in sets {
            out.extend(s);
        }
    } else {
        for t in &tops {
            out.extend(run(t));
        }
    }
    out
}

/// Depth-first assignment of the two chart columns. Row `r` of the third
/// column becomes checkable as soon as rows `r-1..=r+1` of column 1 and row
/// `r` of column 0 are fixed, which prunes most branches early.
fn assign(
    n: usize,
    bound: i128,
    next_row: usize,
    col0: &mut Vec<i128>,
    col1: &mut Vec<i128>,
    found: &mut BTreeSet<Vec<u64>>,
) {
    let w = n - 4;
    // columns are bordered by 1's
    let south1 = |r: usize, col: &[i128]| if r + 1 < w { col[r + 1] } else { 1 };
    let north1 = |r: usize, col: &[i128]| if r >= 1 { col[r - 1] } else { 1 };
    let third_ok = |r: usize, col0: &[i128], col1: &[i128]| -> bool {
        let num = col1[r] + north1(r, col1) * south1(r, col1);
        num % col0[r] == 0 && num / col0[r] >= 1
    };
    if next_row == w {
        // everything assigned; the prunes have already cleared column 2
        complete_and_emit(n, col0, col1, found);
        return;
    }
    for c1 in 1..=bound {
        col1[next_row] = c1;
        // column-2 entry of the previous row is now determined
        if !third_ok(next_row - 1, col0, col1) {
            continue;
        }
        for c0 in 1..=bound {
            col0[next_row] = c0;
            if next_row + 1 == w {
                if !third_ok(next_row, col0, col1) {
                    continue;
                }
            }
            assign(n, bound, next_row + 1, col0, col1, found);
        }
    }
    // single-row charts: the loop above never runs; close out directly
    if w == 1 {
        unreachable!("handled by next_row == w");
    }
}

/// Sweeps the full period from the two assigned columns and emits every
/// rotation of the first row on success.
fn complete_and_emit(
    n: usize,
    col0: &[i128],
    col1: &[i128],
    found: &mut BTreeSet<Vec<u64>>,
) {
    let w = n - 4;
    let period = 2 * n;
    let mut cols: Vec<Vec<i128>> = Vec::with_capacity(period + 2);
    cols.push(col0.to_vec());
    cols.push(col1.to_vec());
    for _ in 2..period + 2 {
        let prev = &cols[cols.len() - 1];
        let prev2 = &cols[cols.len() - 2];
        let mut next = vec![0i128; w];
        for r in 0..w {
            let north = if r >= 1 { prev[r - 1] } else { 1 };
            let south = if r + 1 < w { prev[r + 1] } else { 1 };
            let num = match prev[r].checked_add(match north.checked_mul(south) {
                Some(p) => p,
                None => return,
            }) {
                Some(s) => s,
                None => return,
            };
            if num % prev2[r] != 0 {
                return;
            }
            let e = num / prev2[r];
            if e < 1 {
                return;
            }
            next[r] = e;
        }
        cols.push(next);
    }
    if cols[period] != cols[0] || cols[period + 1] != cols[1] {
        return;
    }
    // first row of the pattern across one period
    let row: Vec<u64> = (0..period).map(|u| cols[u][0] as u64).collect();
    for shift in 0..period {
        let mut t = Vec::with_capacity(period);
        for k in 0..period {
            t.push(row[(shift + k) % period]);
        }
        found.insert(t);
    }
}

/// One orbit of the dihedral action (rotations and reversal of the first
/// row) on a set of tuples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DihedralOrbit {
    /// Lexicographically smallest member.
    pub representative: Vec<u64>,
    /// Number of distinct tuples in the orbit.
    pub size: usize,
}

fn rotations(t: &[u64]) -> impl Iterator<Item = Vec<u64>> + '_ {
    (0..t.len()).map(move |s| {
        let mut out = Vec::with_capacity(t.len());
        for k in 0..t.len() {
            out.push(t[(s + k) % t.len()]);
        }
        out
    })
}

/// Canonical representative under rotations and reversal.
pub fn dihedral_canonical(t: &[u64]) -> Vec<u64> {
    let mut best: Option<Vec<u64>> = None;
    let mut reversed = t.to_vec();
    reversed.reverse();
    for candidate in rotations(t).chain(rotations(&reversed)) {
        if best.as_ref().is_none_or(|b| candidate < *b) {
            best = Some(candidate);
        }
    }
    best.unwrap()
}

/// Groups tuples into dihedral orbits, smallest representative first.
pub fn dihedral_orbits(tuples: &BTreeSet<Vec<u64>>) -> Vec<DihedralOrbit> {
    let mut orbits: std::collections::BTreeMap<Vec<u64>, usize> = Default::default();
    for t in tuples {
        *orbits.entry(dihedral_canonical(t)).or_insert(0) += 1;
    }
    orbits
        .into_iter()
        .map(|(representative, size)| DihedralOrbit { representative, size })
        .collect()
}

/// Rewrites a cut to the reference position: returns the row rotated so that
/// the cut sits between `b_2` and `a_2`.
fn rotate_for_cut(coeffs: &CoefficientRow, cut: usize) -> Result<CoefficientRow, ArithError> {
    let n = coeffs.n();
    if cut == 0 || cut > n {
        return Err(ArithError::BadCut { cut, n });
    }
    Ok(coeffs.rotated_pairs(cut as i64 - 2))
}

/// One-point stabilization: cuts the first row, inserts `1, 1`, and rewrites
/// the three neighbours on each side. The result has period `2(n+1)` and
/// width one larger; the inserted polygon vertex
/// `W = (b_2 + a_1 + 1) V_n - (b_1 + 1) V_{n-1} + V_{n-2}` keeps the polygon
/// convex, which is verified before returning.
pub fn stabilize(f: &ArithFrieze, cut: usize) -> Result<ArithFrieze, ArithError> {
    let c = rotate_for_cut(f.coeffs(), cut)?;
    let n = c.n() as i64;
    let one = Rat::one();
    // same phase as the connected sum with the elementary 4-gon: the row
    // starts at the rewritten left neighbours of the cut
    let mut values = Vec::with_capacity(2 * (f.n() + 1));
    values.push(c.b(1) + &one);
    values.push(c.a(1) + c.b(2) + &one);
    values.push(c.b(2) + &one);
    values.push(one.clone());
    values.push(one.clone());
    values.push(c.a(2) + &one);
    values.push(c.b(3) + c.a(2) + &one);
    values.push(c.a(3) + &one);
    for i in 4..=n {
        values.push(c.b(i).clone());
        values.push(c.a(i).clone());
    }
    let out = ArithFrieze::new(CoefficientRow::new(values).map_err(ArithError::Frieze)?)?;

    // geometric witness: appending W to the original polygon stays unimodular
    // and convex
    let poly = solve_polygon(&c).map_err(|_| ArithError::NotArithmetic {
        reason: "input frieze is not closed".into(),
    })?;
    let coeff_w: [Rat; 3] = [c.b(2) + c.a(1) + &one, -(c.b(1) + &one), one];
    let w_vertex = [
        &coeff_w[0] * &poly.v(n)[0] + &coeff_w[1] * &poly.v(n - 1)[0] + &coeff_w[2] * &poly.v(n - 2)[0],
        &coeff_w[0] * &poly.v(n)[1] + &coeff_w[1] * &poly.v(n - 1)[1] + &coeff_w[2] * &poly.v(n - 2)[1],
        &coeff_w[0] * &poly.v(n)[2] + &coeff_w[1] * &poly.v(n - 1)[2] + &coeff_w[2] * &poly.v(n - 2)[2],
    ];
    let mut vertices: Vec<[Rat; 3]> = poly.vertices().to_vec();
    vertices.push(w_vertex);
    let grown = crate::polygon::Polygon3::new(vertices).map_err(|e| ArithError::NotArithmetic {
        reason: format!("stabilized polygon lost unimodularity: {e}"),
    })?;
    if !crate::polygon::is_convex(&grown) {
        return Err(ArithError::NotArithmetic {
            reason: "stabilized polygon is not convex".into(),
        });
    }
    Ok(out)
}

/// Connected sum: splices `g` into `f` at the given cuts, inserting `g`'s
/// interior coefficients and rewriting the three neighbours on each side.
/// The result is a closed arithmetic frieze of period `2(n + k - 3)`.
pub fn connected_sum(
    f: &ArithFrieze,
    g: &ArithFrieze,
    cut_f: usize,
    cut_g: usize,
) -> Result<ArithFrieze, ArithError> {
    let c = rotate_for_cut(f.coeffs(), cut_f)?;
    let n = c.n() as i64;
    let gk = g.coeffs();
    if cut_g == 0 || cut_g as usize > g.n() {
        return Err(ArithError::BadCut { cut: cut_g, n: g.n() });
    }
    let d = gk.rotated_pairs(cut_g as i64 - 1);
    let k = d.n() as i64;
    let mut values = Vec::with_capacity(2 * (f.n() + g.n() - 3));
    values.push(c.b(1) + d.b(1)); // B_1
    values.push(c.a(1) + d.a(1) + c.b(2) * d.b(1)); // A_1
    values.push(c.b(2) + d.b(2)); // B_2
    values.push(d.a(2).clone()); // A_2
    for j in 3..k {
        values.push(d.b(j).clone()); // B_j = b'_j
        values.push(if j == k - 1 { d.a(j) + c.a(2) } else { d.a(j).clone() }); // A_j
    }
    values.push(d.b(k) + c.b(3) + d.a(k) * c.a(2)); // B_k
    values.push(d.a(k) + c.a(3)); // A_k
    for i in 4..=n {
        values.push(c.b(i).clone());
        values.push(c.a(i).clone());
    }
    ArithFrieze::new(CoefficientRow::new(values).map_err(ArithError::Frieze)?)
}

/// Left-boundary shapes of the semi-infinite integer friezes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundaryShape {
    /// Each row's pair of 1's one step further right (staircase).
    Staircase,
    /// Two vertical columns of 1's.
    DoubleColumn,
    /// Pairs of 1's alternating between columns 1 and 2.
    ZigZag,
}

impl BoundaryShape {
    /// Column of the first seed 1 in interior row `r >= 1`.
    fn offset(self, r: usize) -> usize {
        match self {
            BoundaryShape::Staircase => r + 1,
            BoundaryShape::DoubleColumn => 1,
            BoundaryShape::ZigZag => {
                if r % 2 == 1 {
                    1
                } else {
                    2
                }
            }
        }
    }
}

/// A quarter-plane window of a semi-infinite pattern; rows may start at
/// different columns, absent cells are `None`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthWindow {
    shape: BoundaryShape,
    cells: Vec<Vec<Option<Rat>>>,
}

impl GrowthWindow {
    pub fn shape(&self) -> BoundaryShape {
        self.shape
    }

    pub fn rows(&self) -> usize {
        self.cells.len()
    }

    pub fn cols(&self) -> usize {
        self.cells.first().map_or(0, |r| r.len().saturating_sub(1))
    }

    /// Entry at row `r >= 0`, column `c >= 1`; row 0 is the top row of 1's.
    pub fn get(&self, r: usize, c: usize) -> Option<&Rat> {
        self.cells.get(r)?.get(c)?.as_ref()
    }

    /// South-east diagonal starting at `(r0, c0)`.
    pub fn diagonal(&self, r0: usize, c0: usize, len: usize) -> Vec<Option<Rat>> {
        (0..len).map(|t| self.get(r0 + t, c0 + t).cloned()).collect()
    }
}

/// Grows the semi-infinite pattern bounded above by a row of 1's and on the
/// left by a double zig-zag of 1's of the given shape. Filling is by the
/// frieze relation solved for the east entry; all entries stay positive
/// integers.
pub fn grow_from_unit_zigzag(shape: BoundaryShape, rows: usize, cols: usize) -> GrowthWindow {
    // the entry at (r, c) needs (r+1, c-1), so each extra column of output
    // consumes one extra row of support
    let total_rows = rows + cols + 2;
    let total_cols = cols;
    let mut cells: Vec<Vec<Option<Rat>>> = vec![vec![None; total_cols + 1]; total_rows + 2];
    for c in 1..=total_cols {
        cells[0][c] = Some(Rat::one());
    }
    for r in 1..=total_rows {
        let off = shape.offset(r);
        if off <= total_cols {
            cells[r][off] = Some(Rat::one());
        }
        if off + 1 <= total_cols {
            cells[r][off + 1] = Some(Rat::one());
        }
    }
    // east entry of the diamond centred at (r, c-1):
    // (r, c) = (center + north*south) / west
    for c in 3..=total_cols {
        for r in 1..=total_rows {
            if cells[r][c].is_some() || c < shape.offset(r) + 2 {
                continue;
            }
            let center = cells[r][c - 1].clone();
            let west = cells[r][c - 2].clone();
            let north = if r == 1 { cells[0][c - 1].clone() } else { cells[r - 1][c - 1].clone() };
            let south = cells[r + 1][c - 1].clone();
            if let (Some(center), Some(north), Some(south), Some(west)) =
                (center, north, south, west)
            {
                let v = (center + north * south)
                    .checked_div(&west)
                    .expect("entries to the left are positive");
                cells[r][c] = Some(v);
            }
        }
    }
    let trimmed: Vec<Vec<Option<Rat>>> = cells
        .into_iter()
        .take(rows + 1)
        .map(|row| row.into_iter().take(cols + 1).collect())
        .collect();
    GrowthWindow { shape, cells: trimmed }
}

/// Checks that a window generated from a coefficient row has an all-positive
/// integer band; shared by tests and the CLI.
pub fn band_is_positive_integer(w: &Frieze2Window) -> bool {
    let width = w.n().saturating_sub(4);
    (0..width as i64).all(|r| {
        (1..=2 * w.n() as i64).all(|u| {
            w.get(r, u).is_some_and(|v| v.is_integer() && v.is_positive())
        })
    })
}

/// The gluing identity behind connected sums: the product of the first `k`
/// companion matrices of `h = f ⊕ g` maps the ending basis triple of `f`'s
/// polygon onto its starting triple. Exposed for verification.
pub fn gluing_witness(f: &ArithFrieze, h: &ArithFrieze, k: usize) -> bool {
    let Ok(poly) = solve_polygon(f.coeffs()) else { return false };
    let mut m = crate::matrix::MatExact::identity(3);
    for j in 1..=k as i64 {
        let nj = crate::polygon::companion_matrix(h.coeffs().a(j), h.coeffs().b(j));
        m = m.matmul(&nj).expect("3x3");
    }
    // columns of m must be V_1, V_2, V_3 of f's polygon
    (0..3).all(|col| {
        let v = poly.v(col as i64 + 1);
        (0..3).all(|row| m.at(row, col) == &v[row])
    })
}

/// Convexity witness used in tests: the polygon of an arithmetic frieze.
pub fn polygon_is_convex(f: &ArithFrieze) -> bool {
    match solve_polygon(f.coeffs()) {
        Ok(p) => crate::polygon::is_convex(&p),
        Err(_) => false,
    }
}

/// Determinant shorthand re-exported for the witness checks.
pub fn unit_consecutive_dets(vertices: &[[Rat; 3]]) -> bool {
    let n = vertices.len();
    (0..n).all(|i| {
        det3(&vertices[(i + n - 1) % n], &vertices[i], &vertices[(i + 1) % n]).is_one()
    })
}
