//! 2-frieze patterns: coefficient rows, window propagation, and verification.
//!
//! # Coordinates
//!
//! Entries live on the doubled lattice: logical indices `(i, j)` are integers
//! or both half-integers, stored as `(p, q) = (2i, 2j)` with `p ≡ q (mod 2)`.
//! Display coordinates are `r = i - j` (row, increasing downwards) and
//! `u = i + j` (column). Within a row, entries with `u ≡ r (mod 2)` carry the
//! integer-index class and the others the half-integer class.
//!
//! A window holds the two rows of 0's and the row of 1's above the pattern
//! (rows `r = -3, -2, -1`) plus `depth` propagated rows `r = 0..depth-1` over
//! one full period of `2n` columns (`u = 1..=2n`). The first propagated row is
//! the coefficient row `…, b_i, a_i, b_{i+1}, …` with `b_i` at `u = 2i - 1`.
//!
//! Propagation is division-free: every south-east diagonal (fixed `j`)
//! satisfies a third-order linear recurrence in the coefficients, so integer
//! inputs always produce integer windows.

use std::collections::HashMap;

use crate::error::FriezeError;
use crate::matrix::MatExact;
use crate::rat::Rat;

/// A point of the doubled index lattice, `(p, q) = (2i, 2j)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DoubledIndex {
    pub p: i64,
    pub q: i64,
}

impl DoubledIndex {
    pub fn new(p: i64, q: i64) -> Result<Self, FriezeError> {
        if (p - q) % 2 != 0 {
            return Err(FriezeError::BadParity { p, q });
        }
        Ok(DoubledIndex { p, q })
    }

    /// Display row `i - j`.
    pub fn row(&self) -> i64 {
        (self.p - self.q) / 2
    }

    /// Display column `i + j`.
    pub fn col(&self) -> i64 {
        (self.p + self.q) / 2
    }

    pub fn from_row_col(r: i64, u: i64) -> Self {
        DoubledIndex { p: u + r, q: u - r }
    }

    /// True when the logical indices are integers (as opposed to half-integers).
    pub fn is_integer_class(&self) -> bool {
        self.p % 2 == 0
    }
}

/// The `2n`-periodic first non-trivial row `(b_1, a_1, …, b_n, a_n)`.
///
/// The same data serves as the coefficients of the difference equation
/// `V_i = a_i V_{i-1} - b_i V_{i-2} + V_{i-3}`; indices are cyclic.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoefficientRow {
    n: usize,
    values: Vec<Rat>,
}

impl CoefficientRow {
    pub fn new(values: Vec<Rat>) -> Result<Self, FriezeError> {
        let len = values.len();
        if len < 8 || len % 2 != 0 {
            return Err(FriezeError::BadCoefficientLength { len });
        }
        Ok(CoefficientRow { n: len / 2, values })
    }

    pub fn from_i64(values: &[i64]) -> Result<Self, FriezeError> {
        Self::new(values.iter().map(|&v| Rat::from(v)).collect())
    }

    /// Period `n`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// The raw `2n` values `(b_1, a_1, …, b_n, a_n)`.
    pub fn values(&self) -> &[Rat] {
        &self.values
    }

    /// `a_k`, cyclically for any integer `k`.
    pub fn a(&self, k: i64) -> &Rat {
        let i = (k - 1).rem_euclid(self.n as i64) as usize;
        &self.values[2 * i + 1]
    }

    /// `b_k`, cyclically for any integer `k`.
    pub fn b(&self, k: i64) -> &Rat {
        let i = (k - 1).rem_euclid(self.n as i64) as usize;
        &self.values[2 * i]
    }

    /// The row shifted left by `steps` single lattice steps.
    ///
    /// An odd shift swaps the roles of the `a` and `b` frames; the result is
    /// the coefficient row of the horizontally translated frieze.
    pub fn rotated_steps(&self, steps: i64) -> CoefficientRow {
        let len = self.values.len() as i64;
        let values = (0..len)
            .map(|k| self.values[((k + steps).rem_euclid(len)) as usize].clone())
            .collect();
        CoefficientRow { n: self.n, values }
    }

    /// Shift by whole coefficient pairs: `b_i -> b_{i+s}`, `a_i -> a_{i+s}`.
    pub fn rotated_pairs(&self, pairs: i64) -> CoefficientRow {
        self.rotated_steps(2 * pairs)
    }

    /// The row read backwards (mirror image of the frieze).
    pub fn reversed(&self) -> CoefficientRow {
        let mut values = self.values.clone();
        values.reverse();
        CoefficientRow { n: self.n, values }
    }

    pub fn is_positive_integer(&self) -> bool {
        self.values.iter().all(|v| v.is_integer() && v.is_positive())
    }
}

/// A finite band of frieze entries over one `2n`-column period.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Frieze2Window {
    n: usize,
    closed: bool,
    depth: usize,
    /// Rows `r = -3 ..= depth-1`, each of length `2n` (`u = 1..=2n`).
    rows: Vec<Vec<Rat>>,
}

impl Frieze2Window {
    /// Assembles a window from raw rows. `rows[0]` is `r = -3`; each row must
    /// have length `2n`. No invariants are enforced: verification is the job
    /// of [`verify_pattern_rule`].
    pub fn from_parts(n: usize, closed: bool, rows: Vec<Vec<Rat>>) -> Result<Self, FriezeError> {
        if rows.len() < 3 {
            return Err(FriezeError::WindowTooSmall { need: 3, have: rows.len() });
        }
        for row in &rows {
            if row.len() != 2 * n {
                return Err(FriezeError::BadCoefficientLength { len: row.len() });
            }
        }
        let depth = rows.len() - 3;
        Ok(Frieze2Window { n, closed, depth, rows })
    }

    pub fn empty(n: usize) -> Self {
        Frieze2Window { n, closed: false, depth: 0, rows: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of propagated rows below the boundary.
    pub fn depth(&self) -> usize {
        self.depth
    }

    /// `n - 4` for a closed frieze.
    pub fn width(&self) -> Option<usize> {
        self.closed.then(|| self.n - 4)
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    fn in_band(&self, r: i64) -> bool {
        !self.rows.is_empty() && r >= -3 && r <= self.depth as i64 - 1
    }

    fn raw(&self, r: i64, u: i64) -> Option<&Rat> {
        if !self.in_band(r) {
            return None;
        }
        let period = 2 * self.n as i64;
        if u < 1 || u > period {
            return None;
        }
        Some(&self.rows[(r + 3) as usize][(u - 1) as usize])
    }

    /// Entry at display position `(r, u)`.
    ///
    /// For closed windows the indices are first reduced by the pattern's
    /// periodicities (`2n` along rows, `n` along diagonals); otherwise only
    /// the stored band is addressable.
    pub fn get(&self, r: i64, u: i64) -> Option<&Rat> {
        if !self.closed {
            return self.raw(r, u);
        }
        let n = self.n as i64;
        // reduce (i, j) to (i mod n, j mod n) on the doubled lattice
        let (mut p, mut q) = (u + r, u - r);
        p = p.rem_euclid(2 * n);
        q = q.rem_euclid(2 * n);
        let mut r2 = (p - q) / 2;
        let mut u2 = (p + q) / 2;
        if r2 < -3 {
            // step one period down the diagonal: (i, j) -> (i + n, j)
            r2 += n;
            u2 += n;
        } else if r2 > self.depth as i64 - 1 {
            // (i, j) -> (i, j + n)
            r2 -= n;
            u2 += n;
        }
        u2 = (u2 - 1).rem_euclid(2 * n) + 1;
        self.raw(r2, u2)
    }

    pub fn get_doubled(&self, idx: DoubledIndex) -> Option<&Rat> {
        self.get(idx.row(), idx.col())
    }

    /// Overwrites one stored entry; intended for imports and perturbation tests.
    pub fn set_entry(&mut self, r: i64, u: i64, value: Rat) {
        assert!(self.in_band(r), "row {r} outside window");
        let period = 2 * self.n as i64;
        let u = (u - 1).rem_euclid(period) + 1;
        self.rows[(r + 3) as usize][(u - 1) as usize] = value;
    }

    /// Stored row `r` (length `2n`).
    pub fn row(&self, r: i64) -> Option<&[Rat]> {
        self.in_band(r).then(|| self.rows[(r + 3) as usize].as_slice())
    }

    /// The first propagated row as a flat tuple starting at `u = 1`.
    pub fn first_row(&self) -> Option<Vec<Rat>> {
        self.row(0).map(|r| r.to_vec())
    }

    /// All stored entries with their doubled indices.
    pub fn entries(&self) -> impl Iterator<Item = (DoubledIndex, &Rat)> {
        self.rows.iter().enumerate().flat_map(move |(ri, row)| {
            let r = ri as i64 - 3;
            row.iter().enumerate().map(move |(ui, v)| {
                let u = ui as i64 + 1;
                (DoubledIndex::from_row_col(r, u), v)
            })
        })
    }

    /// Rows from the top 1-row down, for display and CSV export.
    pub fn visible_rows(&self) -> impl Iterator<Item = (i64, &[Rat])> {
        self.rows
            .iter()
            .enumerate()
            .skip(2)
            .map(|(ri, row)| (ri as i64 - 3, row.as_slice()))
    }
}

/// Division-free propagation of the frieze generated by a coefficient row.
///
/// Computes rows `0..depth-1` over one `2n` period. Each south-east diagonal
/// is seeded with `0, 0, 1` and advanced by the third-order recurrences
/// `Δ_i = a_i Δ_{i-1} - b_i Δ_{i-2} + Δ_{i-3}` (integer class) and
/// `Δ_{i+1/2} = b_{i+1} Δ_{i-1/2} - a_i Δ_{i-3/2} + Δ_{i-5/2}` (half class).
pub fn frieze_from_coefficients(coeffs: &CoefficientRow, depth: usize) -> Frieze2Window {
    let n = coeffs.n();
    let period = 2 * n as i64;
    let mut rows = vec![vec![Rat::zero(); 2 * n]; depth + 3];
    for u in 0..2 * n {
        rows[2][u] = Rat::one(); // r = -1
    }
    // one diagonal per doubled index 2j = d
    for d in 1..=period {
        let mut vm3 = Rat::zero();
        let mut vm2 = Rat::zero();
        let mut vm1 = Rat::one();
        for r in 0..depth as i64 {
            let v = if d % 2 == 0 {
                // integer diagonal j = d/2, entry index i = j + r
                let i = d / 2 + r;
                coeffs.a(i) * &vm1 - coeffs.b(i) * &vm2 + &vm3
            } else {
                // half-integer diagonal j = (d-1)/2 + 1/2, i = m + 1/2
                let m = (d - 1) / 2 + r;
                coeffs.b(m + 1) * &vm1 - coeffs.a(m) * &vm2 + &vm3
            };
            let u = (r + d - 1).rem_euclid(period);
            rows[(r + 3) as usize][u as usize] = v.clone();
            vm3 = vm2;
            vm2 = vm1;
            vm1 = v;
        }
    }
    let closed = crate::polygon::is_closed(coeffs);
    Frieze2Window { n, closed, depth, rows }
}

/// The entry `v_{i,j}` as a single determinant in the coefficients.
///
/// Integer indices give the tridiagonal-with-superdiagonal determinant with
/// `a_j..a_i` on the diagonal, `b_{j+1}..b_i` above it, 1's on the second
/// superdiagonal and on the subdiagonal. Half-integer indices substitute
/// `(a_k, b_{k+1}) -> (b_{k+1}, a_{k+1})`. Requires `i >= j - 1`; the empty
/// determinant (`i = j - 1`) is 1.
pub fn entry_by_determinant(coeffs: &CoefficientRow, idx: DoubledIndex) -> Rat {
    let r = idx.row();
    assert!(r >= -1, "entry_by_determinant needs i >= j - 1");
    if r == -1 {
        return Rat::one();
    }
    let size = (r + 1) as usize;
    let mut m = MatExact::zero(size, size);
    if idx.is_integer_class() {
        let j = idx.q / 2;
        for t in 0..size {
            let k = j + t as i64;
            m.set(t, t, coeffs.a(k).clone());
            if t + 1 < size {
                m.set(t, t + 1, coeffs.b(k + 1).clone());
                m.set(t + 1, t, Rat::one());
            }
            if t + 2 < size {
                m.set(t, t + 2, Rat::one());
            }
        }
    } else {
        let j = (idx.q - 1) / 2; // logical j = j' + 1/2
        for t in 0..size {
            let k = j + t as i64;
            m.set(t, t, coeffs.b(k + 1).clone());
            if t + 1 < size {
                m.set(t, t + 1, coeffs.a(k + 1).clone());
                m.set(t + 1, t, Rat::one());
            }
            if t + 2 < size {
                m.set(t, t + 2, Rat::one());
            }
        }
    }
    m.determinant().expect("square by construction")
}

/// Checks the defining relation `center = west·east - north·south` on every
/// diamond fully contained in the window (wrapping around for closed windows)
/// and returns the centers that violate it.
pub fn verify_pattern_rule(w: &Frieze2Window) -> Vec<DoubledIndex> {
    let mut bad = Vec::new();
    if w.depth() == 0 && w.row(-1).is_none() {
        return bad;
    }
    let period = 2 * w.n() as i64;
    for r in -2..=w.depth() as i64 - 2 {
        for u in 1..=period {
            let center = w.get(r, u);
            let west = w.get(r, u - 1);
            let east = w.get(r, u + 1);
            let north = w.get(r - 1, u);
            let south = w.get(r + 1, u);
            if let (Some(c), Some(we), Some(e), Some(no), Some(s)) =
                (center, west, east, north, south)
            {
                if *c != we * e - no * s {
                    bad.push(DoubledIndex::from_row_col(r, u));
                }
            }
        }
    }
    bad
}

/// Outcome of [`verify_closed_symmetries`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SymmetryReport {
    /// Every row repeats with period `2n`.
    pub row_periodic: bool,
    /// Diagonals repeat with period `n`: `v_{i+n,j} = v_{i,j}`.
    pub diagonal_periodic: bool,
    /// Glide reflection: `v(r, u) = v(width-1-r, u+n)`.
    pub glide: bool,
}

impl SymmetryReport {
    pub fn all_pass(&self) -> bool {
        self.row_periodic && self.diagonal_periodic && self.glide
    }
}

/// Checks the three symmetries of a closed frieze on an honestly recomputed
/// band (two periods wide, two periods deep, no periodicity baked in).
pub fn verify_closed_symmetries(coeffs: &CoefficientRow) -> Result<SymmetryReport, FriezeError> {
    if !crate::polygon::is_closed(coeffs) {
        return Err(FriezeError::NotClosed);
    }
    let n = coeffs.n() as i64;
    let depth = 2 * n - 2; // rows 0 ..= 2n-3
    let width = 4 * n;
    let band = wide_band(coeffs, depth, width);
    let at = |r: i64, u: i64| band.get(&(r, u));

    let mut row_periodic = true;
    let mut diagonal_periodic = true;
    let mut glide = true;
    for r in 0..n - 4 {
        for u in 1..=2 * n {
            let Some(v) = at(r, u) else { continue };
            if let Some(v2) = at(r, u + 2 * n) {
                row_periodic &= v == v2;
            }
            if let Some(v2) = at(r + n, u + n) {
                diagonal_periodic &= v == v2;
            }
            if let Some(v2) = at(n - 5 - r, u + n) {
                glide &= v == v2;
            }
        }
    }
    Ok(SymmetryReport { row_periodic, diagonal_periodic, glide })
}

/// Propagates a rectangular band without any modular reduction of columns.
/// Used by the symmetry checks so that periodicity is observed, not assumed.
fn wide_band(coeffs: &CoefficientRow, depth: i64, width: i64) -> HashMap<(i64, i64), Rat> {
    let mut out = HashMap::new();
    for d in (1 - depth)..=(width + 3) {
        let mut vm3 = Rat::zero();
        let mut vm2 = Rat::zero();
        let mut vm1 = Rat::one();
        for r in 0..depth {
            let v = if d % 2 == 0 {
                let i = d / 2 + r;
                coeffs.a(i) * &vm1 - coeffs.b(i) * &vm2 + &vm3
            } else {
                let m = (d - 1).div_euclid(2) + r;
                coeffs.b(m + 1) * &vm1 - coeffs.a(m) * &vm2 + &vm3
            };
            let u = r + d;
            if (1..=width).contains(&u) {
                out.insert((r, u), v.clone());
            }
            vm3 = vm2;
            vm2 = vm1;
            vm1 = v;
        }
    }
    out
}

/// The two interleaved subgrids of a window together with the verdict on
/// their contiguous 3x3 minors.
#[derive(Debug, Clone)]
pub struct Sl3Report {
    /// `v_{i,j}` over integer indices, as a matrix.
    pub integer_grid: MatExact,
    /// `v_{i+1/2,j+1/2}` over half-integer indices.
    pub half_grid: MatExact,
    /// Top-left corners (doubled indices) of 3x3 minors that are not 1.
    pub violations: Vec<DoubledIndex>,
}

impl Sl3Report {
    pub fn all_minors_unit(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Extracts the integer-index and half-integer-index subgrids and checks that
/// every contiguous 3x3 minor equals 1 (both grids of a frieze are
/// SL3-tilings).
///
/// For a closed window the grids cover a full `n x n` fundamental domain and
/// all minors are checked modulo periodicity. For a generic window only the
/// stored band is used and there must be room for at least one 3x3 minor.
pub fn sl3_subgrids(w: &Frieze2Window) -> Result<Sl3Report, FriezeError> {
    let n = w.n() as i64;
    // grid(i0, j0, size, half) reads v_{i0+s, j0+t} (shifted by 1/2 on both
    // indices when half is set)
    let grid = |i0: i64, j0: i64, size: usize, half: bool| -> Option<MatExact> {
        let mut m = MatExact::zero(size, size);
        for s in 0..size {
            for t in 0..size {
                let (i2, j2) = if half {
                    (2 * (i0 + s as i64) + 1, 2 * (j0 + t as i64) + 1)
                } else {
                    (2 * (i0 + s as i64), 2 * (j0 + t as i64))
                };
                let idx = DoubledIndex::new(i2, j2).ok()?;
                m.set(s, t, w.get_doubled(idx)?.clone());
            }
        }
        Some(m)
    };

    let mut violations = Vec::new();
    let mut check = |i0: i64, j0: i64, half: bool| {
        if let Some(minor) = grid(i0, j0, 3, half) {
            if minor.determinant().unwrap() != Rat::one() {
                let (p, q) = if half { (2 * i0 + 1, 2 * j0 + 1) } else { (2 * i0, 2 * j0) };
                violations.push(DoubledIndex { p, q });
            }
        }
    };

    if w.is_closed() {
        if w.depth() < (w.n() - 1).max(1) {
            return Err(FriezeError::WindowTooSmall { need: w.n() - 1, have: w.depth() });
        }
        for i0 in 0..n {
            for j0 in 0..n {
                check(i0, j0, false);
                check(i0, j0, true);
            }
        }
        let integer_grid =
            grid(0, 0, n as usize, false).ok_or(FriezeError::OutOfWindow { p: 0, q: 0 })?;
        let half_grid =
            grid(0, 0, n as usize, true).ok_or(FriezeError::OutOfWindow { p: 1, q: 1 })?;
        return Ok(Sl3Report { integer_grid, half_grid, violations });
    }

    // Generic band: rows r = -3 ..= depth-1. A size-s square of fixed class
    // spans rows rc-(s-1) ..= rc+(s-1) stepping by 2 is wrong: each class
    // occupies every row, so the span is 2(s-1)+1 rows.
    let d = w.depth() as i64;
    let band_rows = d + 3;
    let s = ((band_rows + 1) / 2).min(n / 2).max(0) as usize;
    if s < 3 {
        return Err(FriezeError::WindowTooSmall { need: 3, have: s });
    }
    let rc = (-3 + (d - 1)) / 2;
    // centre column near the middle of the period, corner parity matching rc
    let uc = n - (s as i64 - 1);
    let u0 = if (uc - rc) % 2 == 0 { uc } else { uc + 1 };
    let (i0, j0) = ((u0 + rc - (s as i64 - 1)) / 2, (u0 - rc + (s as i64 - 1)) / 2 - (s as i64 - 1));
    for di in 0..=(s as i64 - 3) {
        for dj in 0..=(s as i64 - 3) {
            check(i0 + di, j0 + dj, false);
            check(i0 + di, j0 + dj, true);
        }
    }
    let integer_grid = grid(i0, j0, s, false).ok_or(FriezeError::OutOfWindow {
        p: 2 * i0,
        q: 2 * j0,
    })?;
    let half_grid = grid(i0, j0, s, true).ok_or(FriezeError::OutOfWindow {
        p: 2 * i0 + 1,
        q: 2 * j0 + 1,
    })?;
    Ok(Sl3Report { integer_grid, half_grid, violations })
}

/// Number of entry positions of a closed frieze in one fundamental domain
/// modulo the periodicities and the glide reflection; always `n(n-4)`.
pub fn count_distinct_entries(coeffs: &CoefficientRow) -> Result<usize, FriezeError> {
    if !crate::polygon::is_closed(coeffs) {
        return Err(FriezeError::NotClosed);
    }
    let n = coeffs.n() as i64;
    let width = n - 4;
    let period = 2 * n;
    let mut seen = std::collections::HashSet::new();
    let mut count = 0usize;
    for r in 0..width {
        for u in 0..period {
            if seen.contains(&(r, u)) {
                continue;
            }
            count += 1;
            // glide orbit: (r, u) -> (width-1-r, u+n), involutive mod 2n
            let mut pos = (r, u);
            loop {
                seen.insert(pos);
                pos = (width - 1 - pos.0, (pos.1 + n).rem_euclid(period));
                if seen.contains(&pos) {
                    break;
                }
            }
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    /// Constant coefficient row `a_i = b_i = v`.
    pub(crate) fn constant_row(n: usize, v: i64) -> CoefficientRow {
        CoefficientRow::from_i64(&vec![v; 2 * n]).unwrap()
    }

    /// The unique width-1 arithmetic pattern, first row `1,1,2,3,2` repeated.
    pub(crate) fn width1_row() -> CoefficientRow {
        CoefficientRow::from_i64(&[1, 1, 2, 3, 2, 1, 1, 2, 3, 2]).unwrap()
    }

    /// Width-2 pattern whose two interior rows are exchanged by the glide.
    pub(crate) fn width2_exchange_row() -> CoefficientRow {
        CoefficientRow::from_i64(&[1, 1, 4, 6, 2, 1, 2, 3, 2, 2, 4, 3]).unwrap()
    }

    #[test]
    fn all_twos_hexagonal_frieze() {
        let coeffs = constant_row(6, 2);
        let w = frieze_from_coefficients(&coeffs, 4);
        assert!(w.is_closed());
        for u in 1..=12 {
            assert_eq!(w.get(0, u).unwrap(), &rat(2));
            assert_eq!(w.get(1, u).unwrap(), &rat(2));
            assert_eq!(w.get(2, u).unwrap(), &rat(1));
            assert_eq!(w.get(3, u).unwrap(), &rat(0));
        }
    }

    #[test]
    fn width2_example_second_row() {
        let coeffs = width2_exchange_row();
        let w = frieze_from_coefficients(&coeffs, 4);
        let row1: Vec<Rat> = (1..=12).map(|u| w.get(1, u).unwrap().clone()).collect();
        let expected: Vec<Rat> =
            [2, 3, 2, 2, 4, 3, 1, 1, 4, 6, 2, 1].iter().map(|&x| rat(x)).collect();
        assert_eq!(row1, expected);
        assert!((1..=12).all(|u| w.get(2, u).unwrap() == &rat(1)));
    }

    #[test]
    fn all_ones_period_four_degenerates() {
        let coeffs = constant_row(4, 1);
        let w = frieze_from_coefficients(&coeffs, 2);
        assert!(w.is_closed());
        for u in 1..=8 {
            assert_eq!(w.get(0, u).unwrap(), &rat(1)); // closing row of 1's
            assert_eq!(w.get(1, u).unwrap(), &rat(0));
        }
    }

    #[test]
    fn determinant_entry_first_rows() {
        let coeffs = width2_exchange_row();
        // v_{i,i} = a_i
        for i in 1..=6 {
            let idx = DoubledIndex::new(2 * i, 2 * i).unwrap();
            assert_eq!(&entry_by_determinant(&coeffs, idx), coeffs.a(i));
        }
        // v_{i-1/2,i-1/2} = b_i
        for i in 1..=6i64 {
            let idx = DoubledIndex::new(2 * i - 1, 2 * i - 1).unwrap();
            assert_eq!(&entry_by_determinant(&coeffs, idx), coeffs.b(i));
        }
    }

    #[test]
    fn determinant_entry_second_row() {
        // v_{1,0} = a_0 a_1 - b_1
        let coeffs = width2_exchange_row();
        let idx = DoubledIndex::new(2, 0).unwrap();
        let expect = coeffs.a(0) * coeffs.a(1) - coeffs.b(1);
        assert_eq!(entry_by_determinant(&coeffs, idx), expect);
    }

    #[test]
    fn determinant_matches_propagation() {
        let coeffs = width2_exchange_row();
        let w = frieze_from_coefficients(&coeffs, 3);
        for r in -1..=2i64 {
            for u in 1..=12i64 {
                let idx = DoubledIndex::from_row_col(r, u);
                assert_eq!(
                    &entry_by_determinant(&coeffs, idx),
                    w.get(r, u).unwrap(),
                    "mismatch at r={r}, u={u}"
                );
            }
        }
    }

    #[test]
    fn pattern_rule_holds_on_propagated_windows() {
        for coeffs in [width1_row(), width2_exchange_row(), constant_row(6, 2)] {
            let w = frieze_from_coefficients(&coeffs, coeffs.n() - 1);
            assert!(verify_pattern_rule(&w).is_empty());
        }
    }

    #[test]
    fn pattern_rule_flags_perturbation() {
        let coeffs = constant_row(6, 2);
        let mut w = frieze_from_coefficients(&coeffs, 4);
        let old = w.get(1, 5).unwrap().clone();
        w.set_entry(1, 5, old + rat(1));
        let bad = verify_pattern_rule(&w);
        assert!(!bad.is_empty());
        // every reported diamond touches the perturbed entry
        for idx in &bad {
            let (r, u) = (idx.row(), idx.col());
            let touches = (r == 1 && (u - 5).rem_euclid(12) == 0)
                || ((r - 1).abs() == 1 && (u - 5).rem_euclid(12) == 0)
                || (r == 1 && ((u - 5).rem_euclid(12) == 1 || (u - 5).rem_euclid(12) == 11));
            assert!(touches, "violation at ({r},{u}) does not touch (1,5)");
        }
    }

    #[test]
    fn pattern_rule_vacuous_on_zero_window() {
        let rows = vec![vec![Rat::zero(); 12]; 6];
        let w = Frieze2Window::from_parts(6, false, rows).unwrap();
        assert!(verify_pattern_rule(&w).is_empty());
    }

    #[test]
    fn symmetries_of_closed_friezes() {
        for coeffs in [width1_row(), width2_exchange_row(), constant_row(6, 2)] {
            let report = verify_closed_symmetries(&coeffs).unwrap();
            assert!(report.all_pass(), "failed for {coeffs:?}: {report:?}");
        }
    }

    #[test]
    fn symmetries_require_closure() {
        let coeffs = constant_row(5, 2);
        assert!(matches!(verify_closed_symmetries(&coeffs), Err(FriezeError::NotClosed)));
    }

    #[test]
    fn glide_exchanges_interior_rows() {
        // for the width-2 pattern, row 0 shifted by n equals row 1
        let coeffs = width2_exchange_row();
        let w = frieze_from_coefficients(&coeffs, 2);
        for u in 1..=12i64 {
            assert_eq!(w.get(0, u), w.get(1, (u + 6 - 1) % 12 + 1));
        }
    }

    #[test]
    fn sl3_minors_on_closed_patterns() {
        for coeffs in [constant_row(6, 2), width1_row(), width2_exchange_row()] {
            let w = frieze_from_coefficients(&coeffs, coeffs.n() - 1);
            let report = sl3_subgrids(&w).unwrap();
            assert!(report.all_minors_unit(), "minors not 1 for {coeffs:?}");
        }
    }

    #[test]
    fn sl3_minors_catch_alteration() {
        let coeffs = constant_row(6, 2);
        let mut w = frieze_from_coefficients(&coeffs, 5);
        w.set_entry(1, 4, rat(7));
        let report = sl3_subgrids(&w).unwrap();
        assert!(!report.all_minors_unit());
    }

    #[test]
    fn sl3_window_too_small() {
        let coeffs = constant_row(6, 2);
        let mut w = frieze_from_coefficients(&coeffs, 1);
        w = Frieze2Window::from_parts(6, false, (0..4).map(|r| w.row(r - 3).unwrap().to_vec()).collect()).unwrap();
        assert!(matches!(sl3_subgrids(&w), Err(FriezeError::WindowTooSmall { .. })));
    }

    #[test]
    fn distinct_entry_counts() {
        assert_eq!(count_distinct_entries(&width1_row()).unwrap(), 5);
        assert_eq!(count_distinct_entries(&constant_row(6, 2)).unwrap(), 12);
        assert_eq!(count_distinct_entries(&constant_row(4, 1)).unwrap(), 0);
    }

    #[test]
    fn integer_inputs_stay_integer() {
        // division-freeness: the whole band of an integer row is integral
        let coeffs = CoefficientRow::from_i64(&[3, 1, 2, 5, 1, 4, 2, 2, 3, 1]).unwrap();
        let w = frieze_from_coefficients(&coeffs, 8);
        for (_, v) in w.entries() {
            assert!(v.is_integer());
        }
    }
}
