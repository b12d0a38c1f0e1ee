//! Stable file formats: JSON for friezes, windows, polygons, quivers, seeds
//! and quiddities, CSV for windows. All rationals are serialized as exact
//! strings, `"p/q"` or plain integers.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::classical::ClassicalFrieze;
use crate::cluster::{Quiver, Seed};
use crate::error::IoError;
use crate::frieze::{CoefficientRow, DoubledIndex, Frieze2Window};
use crate::polygon::Polygon3;
use crate::rat::Rat;

fn parse_rats(values: &[String]) -> Result<Vec<Rat>, IoError> {
    values.iter().map(|s| Rat::parse(s)).collect()
}

fn render_rats(values: &[Rat]) -> Vec<String> {
    values.iter().map(Rat::to_string).collect()
}

/// `{"n": …, "coefficients": […], "closed": …}`
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FriezeJson {
    pub n: usize,
    pub coefficients: Vec<String>,
    pub closed: bool,
}

pub fn frieze_to_json(coeffs: &CoefficientRow) -> FriezeJson {
    FriezeJson {
        n: coeffs.n(),
        coefficients: render_rats(coeffs.values()),
        closed: crate::polygon::is_closed(coeffs),
    }
}

pub fn frieze_from_json(j: &FriezeJson) -> Result<CoefficientRow, IoError> {
    let values = parse_rats(&j.coefficients)?;
    if values.len() != 2 * j.n {
        return Err(IoError::Malformed {
            what: "frieze",
            detail: format!("expected {} coefficients, got {}", 2 * j.n, values.len()),
        });
    }
    CoefficientRow::new(values).map_err(|e| IoError::Malformed {
        what: "frieze",
        detail: e.to_string(),
    })
}

/// Window JSON keyed by doubled indices `"p,q"`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WindowJson {
    pub n: usize,
    pub depth: usize,
    pub closed: bool,
    pub entries: BTreeMap<String, String>,
}

pub fn window_to_json(w: &Frieze2Window) -> WindowJson {
    let mut entries = BTreeMap::new();
    for (idx, v) in w.entries() {
        entries.insert(format!("{},{}", idx.p, idx.q), v.to_string());
    }
    WindowJson { n: w.n(), depth: w.depth(), closed: w.is_closed(), entries }
}

pub fn window_from_json(j: &WindowJson) -> Result<Frieze2Window, IoError> {
    let period = 2 * j.n;
    let mut rows = vec![vec![Rat::zero(); period]; j.depth + 3];
    for (key, value) in &j.entries {
        let (p, q) = key.split_once(',').ok_or(IoError::Malformed {
            what: "window",
            detail: format!("bad key {key:?}"),
        })?;
        let p: i64 = p.trim().parse().map_err(|_| IoError::Malformed {
            what: "window",
            detail: format!("bad key {key:?}"),
        })?;
        let q: i64 = q.trim().parse().map_err(|_| IoError::Malformed {
            what: "window",
            detail: format!("bad key {key:?}"),
        })?;
        let idx = DoubledIndex::new(p, q).map_err(|e| IoError::Malformed {
            what: "window",
            detail: e.to_string(),
        })?;
        let (r, u) = (idx.row(), idx.col());
        if r < -3 || r >= j.depth as i64 || u < 1 || u > period as i64 {
            return Err(IoError::Malformed {
                what: "window",
                detail: format!("entry ({p},{q}) outside the stored band"),
            });
        }
        rows[(r + 3) as usize][(u - 1) as usize] = Rat::parse(value)?;
    }
    Frieze2Window::from_parts(j.n, j.closed, rows).map_err(|e| IoError::Malformed {
        what: "window",
        detail: e.to_string(),
    })
}

/// CSV export: a header of column labels, then the rows from the top 1-row
/// down, `2n` exact values per line.
pub fn window_to_csv(w: &Frieze2Window) -> String {
    let period = 2 * w.n();
    let mut out = String::new();
    let header: Vec<String> = (1..=period).map(|u| format!("u{u}")).collect();
    out.push_str(&header.join(","));
    out.push('\n');
    for (_, row) in w.visible_rows() {
        let line: Vec<String> = row.iter().map(Rat::to_string).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}

/// Inverse of [`window_to_csv`]; the two rows of 0's above the 1-row are
/// restored.
pub fn window_from_csv(text: &str, closed: bool) -> Result<Frieze2Window, IoError> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or(IoError::Malformed {
        what: "window csv",
        detail: "missing header".into(),
    })?;
    let period = header.split(',').count();
    if period < 8 || period % 2 != 0 {
        return Err(IoError::Malformed {
            what: "window csv",
            detail: format!("bad column count {period}"),
        });
    }
    let n = period / 2;
    let mut rows = vec![vec![Rat::zero(); period]; 2];
    for line in lines {
        let cells: Vec<&str> = line.split(',').collect();
        if cells.len() != period {
            return Err(IoError::Malformed {
                what: "window csv",
                detail: format!("row with {} cells, expected {period}", cells.len()),
            });
        }
        let row: Result<Vec<Rat>, IoError> = cells.iter().map(|c| Rat::parse(c)).collect();
        rows.push(row?);
    }
    Frieze2Window::from_parts(n, closed, rows).map_err(|e| IoError::Malformed {
        what: "window csv",
        detail: e.to_string(),
    })
}

/// `{"n": …, "vertices": [[x,y,z]…]}`
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PolygonJson {
    pub n: usize,
    pub vertices: Vec<[String; 3]>,
}

pub fn polygon_to_json(p: &Polygon3) -> PolygonJson {
    PolygonJson {
        n: p.n(),
        vertices: p
            .vertices()
            .iter()
            .map(|v| [v[0].to_string(), v[1].to_string(), v[2].to_string()])
            .collect(),
    }
}

pub fn polygon_from_json(j: &PolygonJson) -> Result<Polygon3, IoError> {
    let mut vertices = Vec::with_capacity(j.vertices.len());
    for v in &j.vertices {
        vertices.push([Rat::parse(&v[0])?, Rat::parse(&v[1])?, Rat::parse(&v[2])?]);
    }
    Polygon3::new(vertices).map_err(|e| IoError::Malformed {
        what: "polygon",
        detail: e.to_string(),
    })
}

/// `{"size": N, "arrows": [[i,j,mult]…]}`; vertices are 0-based.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct QuiverJson {
    pub size: usize,
    pub arrows: Vec<(usize, usize, i64)>,
}

pub fn quiver_to_json(q: &Quiver) -> QuiverJson {
    QuiverJson { size: q.size(), arrows: q.arrow_list() }
}

pub fn quiver_from_json(j: &QuiverJson) -> Result<Quiver, IoError> {
    for &(a, b, _) in &j.arrows {
        if a >= j.size || b >= j.size {
            return Err(IoError::Malformed {
                what: "quiver",
                detail: format!("arrow ({a},{b}) out of range"),
            });
        }
    }
    Ok(Quiver::from_arrow_list(j.size, &j.arrows))
}

/// Quiver JSON plus vertex values.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SeedJson {
    pub size: usize,
    pub arrows: Vec<(usize, usize, i64)>,
    pub values: Vec<String>,
}

pub fn seed_to_json(s: &Seed) -> SeedJson {
    SeedJson {
        size: s.quiver.size(),
        arrows: s.quiver.arrow_list(),
        values: render_rats(&s.values),
    }
}

pub fn seed_from_json(j: &SeedJson) -> Result<Seed, IoError> {
    let quiver = quiver_from_json(&QuiverJson { size: j.size, arrows: j.arrows.clone() })?;
    let values = parse_rats(&j.values)?;
    Seed::new(quiver, values).map_err(|e| IoError::Malformed {
        what: "seed",
        detail: e.to_string(),
    })
}

/// `{"n": …, "quiddity": […]}`
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct QuiddityJson {
    pub n: usize,
    pub quiddity: Vec<String>,
}

pub fn quiddity_to_json(q: &ClassicalFrieze) -> QuiddityJson {
    QuiddityJson { n: q.n(), quiddity: render_rats(q.quiddity()) }
}

pub fn quiddity_from_json(j: &QuiddityJson) -> Result<ClassicalFrieze, IoError> {
    let values = parse_rats(&j.quiddity)?;
    if values.len() != j.n {
        return Err(IoError::Malformed {
            what: "quiddity",
            detail: format!("expected {} values, got {}", j.n, values.len()),
        });
    }
    ClassicalFrieze::new(values).map_err(|e| IoError::Malformed {
        what: "quiddity",
        detail: e.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frieze::frieze_from_coefficients;
    use crate::rat::rat;

    #[test]
    fn frieze_json_round_trip() {
        let coeffs = CoefficientRow::from_i64(&[1, 1, 2, 3, 2, 1, 1, 2, 3, 2]).unwrap();
        let j = frieze_to_json(&coeffs);
        assert!(j.closed);
        let back = frieze_from_json(&j).unwrap();
        assert_eq!(back, coeffs);
        // through serde_json text as well
        let text = serde_json::to_string(&j).unwrap();
        let parsed: FriezeJson = serde_json::from_str(&text).unwrap();
        assert_eq!(frieze_from_json(&parsed).unwrap(), coeffs);
    }

    #[test]
    fn window_csv_round_trip() {
        let coeffs = CoefficientRow::from_i64(&vec![2; 12]).unwrap();
        let w = frieze_from_coefficients(&coeffs, 3);
        let csv = window_to_csv(&w);
        // one header + 1-row + three interior rows
        assert_eq!(csv.lines().count(), 5);
        let mid: Vec<&str> = csv.lines().nth(2).unwrap().split(',').collect();
        assert!(mid.iter().all(|c| *c == "2"));
        let back = window_from_csv(&csv, w.is_closed()).unwrap();
        assert_eq!(back, w);
        assert_eq!(window_to_csv(&back), csv);
    }

    #[test]
    fn empty_window_csv_is_header_only() {
        let w = Frieze2Window::empty(6);
        let csv = window_to_csv(&w);
        assert_eq!(csv.lines().count(), 1);
        assert!(csv.starts_with("u1,"));
    }

    #[test]
    fn window_json_round_trip() {
        let coeffs = CoefficientRow::from_i64(&[1, 1, 2, 3, 2, 1, 1, 2, 3, 2]).unwrap();
        let w = frieze_from_coefficients(&coeffs, 2);
        let j = window_to_json(&w);
        let back = window_from_json(&j).unwrap();
        assert_eq!(back, w);
    }

    #[test]
    fn polygon_json_round_trip() {
        let coeffs = CoefficientRow::from_i64(&vec![2; 12]).unwrap();
        let poly = crate::polygon::solve_polygon(&coeffs).unwrap();
        let j = polygon_to_json(&poly);
        let back = polygon_from_json(&j).unwrap();
        assert_eq!(back, poly);
    }

    #[test]
    fn quiver_and_seed_json() {
        let q = crate::cluster::build_frieze_quiver(7).unwrap();
        let j = quiver_to_json(&q);
        assert_eq!(quiver_from_json(&j).unwrap(), q);

        let seed = Seed::new(q, vec![rat(1); 6]).unwrap();
        let sj = seed_to_json(&seed);
        assert_eq!(seed_from_json(&sj).unwrap(), seed);
    }

    #[test]
    fn quiddity_json_round_trip() {
        let q = ClassicalFrieze::from_i64(&[1, 2, 2, 1, 3]).unwrap();
        let j = quiddity_to_json(&q);
        assert_eq!(quiddity_from_json(&j).unwrap(), q);
    }
}
