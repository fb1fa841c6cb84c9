/// Symmetric 2x2 metric in `(λ¹, λ²)` coordinates. Only three entries are stored.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MetricTensor2 {
    pub g11: f64,
    pub g12: f64,
    pub g22: f64,
}

/// Relative determinant below which a positive-definite metric is treated as
/// degenerate: `det g < DEGENERACY_RATIO · g11 · g22`.
pub const DEGENERACY_RATIO: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Conditioning {
    /// `det g <= 0` or `g11 <= 0`: not a valid Fisher metric.
    NotPositiveDefinite { det: f64 },
    /// Positive-definite, but `det g` is below `DEGENERACY_RATIO · g11 · g22`.
    NearlySingular { det: f64, threshold: f64 },
}

impl MetricTensor2 {
    pub fn new(g11: f64, g12: f64, g22: f64) -> Self {
        MetricTensor2 { g11, g12, g22 }
    }

    pub fn det(&self) -> f64 {
        self.g11 * self.g22 - self.g12 * self.g12
    }

    /// Entry `(i, j)` with zero-based indices.
    pub fn get(&self, i: usize, j: usize) -> f64 {
        match (i, j) {
            (0, 0) => self.g11,
            (0, 1) | (1, 0) => self.g12,
            (1, 1) => self.g22,
            _ => panic!("metric index ({i}, {j}) out of range"),
        }
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.g11, self.g12, self.g22]
    }

    /// Contravariant components `(g^11, g^12, g^22)`.
    pub fn inverse(&self) -> Option<MetricTensor2> {
        let det = self.det();
        if det == 0.0 || !det.is_finite() {
            return None;
        }
        Some(MetricTensor2 {
            g11: self.g22 / det,
            g12: -self.g12 / det,
            g22: self.g11 / det,
        })
    }

    pub fn is_positive_definite(&self) -> bool {
        self.g11 > 0.0 && self.det() > 0.0
    }

    pub fn conditioning(&self) -> Option<Conditioning> {
        let det = self.det();
        if !(self.g11 > 0.0 && det > 0.0) {
            return Some(Conditioning::NotPositiveDefinite { det });
        }
        let threshold = DEGENERACY_RATIO * self.g11 * self.g22;
        if det < threshold {
            return Some(Conditioning::NearlySingular { det, threshold });
        }
        None
    }

    /// `g · v` for a coordinate displacement `v = (dλ¹, dλ²)`.
    pub fn lower(&self, v: [f64; 2]) -> [f64; 2] {
        [
            self.g11 * v[0] + self.g12 * v[1],
            self.g12 * v[0] + self.g22 * v[1],
        ]
    }

    /// Largest entrywise relative deviation from `other`, measured against the
    /// larger of the two diagonal scales for the off-diagonal entry.
    pub fn max_rel_diff(&self, other: &MetricTensor2) -> f64 {
        let rel = |a: f64, b: f64, scale: f64| (a - b).abs() / scale.max(f64::MIN_POSITIVE);
        let off_scale = (self.g11 * self.g22).abs().sqrt().max(self.g12.abs());
        rel(self.g11, other.g11, self.g11.abs())
            .max(rel(self.g12, other.g12, off_scale))
            .max(rel(self.g22, other.g22, self.g22.abs()))
    }
}
