//! Tabulated curves `s, x, y, z` and their local polynomial interpolation.

use std::io::Read;

use crate::error::{GeometryError, Result};

use super::Point;

/// Number of samples in each local interpolation window.
pub const WINDOW: usize = 8;

/// Positions sampled on a strictly increasing parameter grid.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleTable {
    s: Vec<f64>,
    points: Vec<Point>,
}

impl SampleTable {
    pub fn new(s: Vec<f64>, points: Vec<Point>) -> Result<Self> {
        if s.len() != points.len() {
            return Err(GeometryError::RejectedInput(format!(
                "{} parameter values but {} points",
                s.len(),
                points.len()
            )));
        }
        if s.len() < WINDOW {
            return Err(GeometryError::RejectedInput(format!("need at least {WINDOW} samples, got {}", s.len())));
        }
        if let Some(bad) = s.iter().chain(points.iter().flatten()).find(|v| !v.is_finite()) {
            return Err(GeometryError::RejectedInput(format!("non-finite sample value {bad}")));
        }
        if let Some(i) = s.windows(2).position(|w| w[1] <= w[0]) {
            return Err(GeometryError::RejectedInput(format!(
                "parameter column is not strictly increasing at row {}",
                i + 2
            )));
        }
        Ok(SampleTable { s, points })
    }

    /// Reads a CSV whose header starts with `s,x,y,z`; further columns are
    /// ignored.
    pub fn from_csv<R: Read>(reader: R) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new().has_headers(true).trim(csv::Trim::All).from_reader(reader);
        let headers =
            rdr.headers().map_err(|e| GeometryError::RejectedInput(format!("unreadable header: {e}")))?.clone();
        let names: Vec<&str> = headers.iter().collect();
        if names.len() < 4 || names[..4] != ["s", "x", "y", "z"] {
            return Err(GeometryError::RejectedInput(format!(
                "expected header starting with s,x,y,z, got {}",
                names.join(",")
            )));
        }
        let mut s = Vec::new();
        let mut points = Vec::new();
        for (row, rec) in rdr.records().enumerate() {
            let rec = rec.map_err(|e| GeometryError::RejectedInput(format!("row {}: {e}", row + 2)))?;
            let mut vals = [0.0; 4];
            for (k, field) in rec.iter().enumerate().take(4) {
                vals[k] = field
                    .parse()
                    .map_err(|_| GeometryError::RejectedInput(format!("row {}: cannot parse {field:?}", row + 2)))?;
            }
            if rec.len() != names.len() {
                return Err(GeometryError::RejectedInput(format!(
                    "row {}: expected {} fields, got {}",
                    row + 2,
                    names.len(),
                    rec.len()
                )));
            }
            s.push(vals[0]);
            points.push([vals[1], vals[2], vals[3]]);
        }
        SampleTable::new(s, points)
    }

    pub fn params(&self) -> &[f64] {
        &self.s
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.s.len()
    }

    pub fn is_empty(&self) -> bool {
        self.s.is_empty()
    }

    pub fn domain(&self) -> (f64, f64) {
        (self.s[0], self.s[self.s.len() - 1])
    }

    /// First index of the interpolation window centred on `s`.
    pub fn window_start(&self, s: f64) -> usize {
        let upper = self.s.partition_point(|&v| v < s);
        let start = upper.saturating_sub(WINDOW / 2);
        start.min(self.s.len() - WINDOW)
    }

    /// Lagrange interpolation through the window starting at `start`.
    pub fn interpolate_in(&self, start: usize, s: f64) -> Point {
        let nodes = &self.s[start..start + WINDOW];
        let vals = &self.points[start..start + WINDOW];
        let mut out = [0.0; 3];
        for (i, &si) in nodes.iter().enumerate() {
            let mut w = 1.0;
            for (j, &sj) in nodes.iter().enumerate() {
                if i != j {
                    w *= (s - sj) / (si - sj);
                }
            }
            for k in 0..3 {
                out[k] += w * vals[i][k];
            }
        }
        out
    }

    pub fn interpolate(&self, s: f64) -> Point {
        self.interpolate_in(self.window_start(s), s)
    }
}
