//! Exact-tolerance complex projective geometry for n = 2, 3, 4.
//!
//! Points of CP^{n-1} are rays in ℂⁿ. Every ray is stored through a
//! canonical representative: unit norm, with the first coordinate of
//! modulus > 1e-9 made real and positive. The cross ratio
//! κ = |⟨w,z⟩|²/(‖w‖²‖z‖²) is the transition probability between the
//! corresponding pure states, and d = 2 arccos √κ the Fubini-Study
//! distance (diameter π).

use serde::Deserialize;

use crate::cmatrix::{hdot, norm_sq, C64, CMatrix};
use crate::error::{Error, Result};

/// Default tolerance for geometric predicates.
pub const GEOM_TOL: f64 = 1e-9;
/// Default tolerance for algebraic identities evaluated in doubles.
pub const ALG_TOL: f64 = 1e-12;

/// A nonzero vector in ℂⁿ, n ∈ {2,3,4}.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexVector {
    entries: Vec<C64>,
}

impl ComplexVector {
    /// Rejects zero vectors and unsupported dimensions.
    pub fn new(entries: Vec<C64>) -> Result<Self> {
        let n = entries.len();
        if !(2..=4).contains(&n) {
            return Err(Error::UnsupportedDimension(n));
        }
        let ns = norm_sq(&entries);
        if ns <= GEOM_TOL * GEOM_TOL {
            return Err(Error::ZeroVector(ns.sqrt()));
        }
        Ok(ComplexVector { entries })
    }

    pub fn from_reals(entries: &[f64]) -> Result<Self> {
        Self::new(entries.iter().map(|&x| C64::new(x, 0.0)).collect())
    }

    pub fn entries(&self) -> &[C64] {
        &self.entries
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn norm(&self) -> f64 {
        norm_sq(&self.entries).sqrt()
    }
}

/// A ray in ℂⁿ with canonical unit representative.
///
/// Canonicalization: divide by the norm, then multiply by the phase that
/// makes the first entry of modulus > 1e-9 real and positive. Two points
/// are equal iff their cross ratio is 1 within tolerance.
#[derive(Debug, Clone)]
pub struct ProjectivePoint {
    rep: ComplexVector,
}

impl ProjectivePoint {
    pub fn new(v: ComplexVector) -> Self {
        let norm = v.norm();
        let mut entries: Vec<C64> = if (norm - 1.0).abs() <= 1e-15 {
            v.entries.clone()
        } else {
            v.entries.iter().map(|z| z / norm).collect()
        };
        if let Some(pos) = entries.iter().position(|z| z.norm() > 1e-9) {
            let lead = entries[pos];
            if lead.im != 0.0 || lead.re < 0.0 {
                let phase = lead / lead.norm();
                for z in entries.iter_mut() {
                    *z /= phase;
                }
            }
            // the leading entry is mathematically real and positive; make it so
            entries[pos] = C64::new(entries[pos].norm(), 0.0);
        }
        ProjectivePoint { rep: ComplexVector { entries } }
    }

    pub fn from_complex(entries: Vec<C64>) -> Result<Self> {
        Ok(Self::new(ComplexVector::new(entries)?))
    }

    pub fn from_reals(entries: &[f64]) -> Result<Self> {
        Ok(Self::new(ComplexVector::from_reals(entries)?))
    }

    /// Canonical unit representative.
    pub fn rep(&self) -> &[C64] {
        &self.rep.entries
    }

    pub fn n(&self) -> usize {
        self.rep.n()
    }

    /// Apply a unitary and re-canonicalize.
    pub fn apply(&self, u: &CMatrix) -> Self {
        ProjectivePoint::new(ComplexVector { entries: u.matvec(self.rep()) })
    }

    /// Complex conjugation [z] ↦ [z̄], an isometry not in SU(n).
    pub fn conjugate(&self) -> Self {
        ProjectivePoint::new(ComplexVector {
            entries: self.rep().iter().map(|z| z.conj()).collect(),
        })
    }

    pub fn same_point(&self, other: &Self, tol: f64) -> bool {
        self.n() == other.n() && (cross_ratio(self, other).unwrap() - 1.0).abs() <= tol
    }
}

impl PartialEq for ProjectivePoint {
    fn eq(&self, other: &Self) -> bool {
        self.same_point(other, GEOM_TOL)
    }
}

/// Rank-one Hermitian projector P = z z̄ᵀ (trace 1, P² = P).
#[derive(Debug, Clone)]
pub struct HermitianProjector {
    matrix: CMatrix,
}

impl HermitianProjector {
    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    /// Max-norm of (M − M*, M² − M, tr M − 1) violations.
    pub fn defect(&self) -> f64 {
        let herm = self.matrix.sub(&self.matrix.adjoint()).max_abs();
        let idem = self.matrix.mul(&self.matrix).sub(&self.matrix).max_abs();
        let tr = (self.matrix.trace() - C64::new(1.0, 0.0)).norm();
        herm.max(idem).max(tr)
    }
}

/// κ(p,q) = |⟨w,z⟩|²/(‖w‖²‖z‖²) ∈ [0,1]; symmetric in its arguments.
pub fn cross_ratio(p: &ProjectivePoint, q: &ProjectivePoint) -> Result<f64> {
    if p.n() != q.n() {
        return Err(Error::DimensionMismatch(p.n(), q.n()));
    }
    let ip = hdot(p.rep(), q.rep()).norm_sqr();
    let k = ip / (norm_sq(p.rep()) * norm_sq(q.rep()));
    Ok(k.clamp(0.0, 1.0))
}

/// Fubini-Study distance d = 2 arccos √κ ∈ [0, π].
pub fn fs_distance(p: &ProjectivePoint, q: &ProjectivePoint) -> Result<f64> {
    Ok(2.0 * cross_ratio(p, q)?.sqrt().acos())
}

/// The canonical embedding [z] ↦ z z̄ᵀ; tr(P_w P_z) recovers the cross ratio.
pub fn projector_of(p: &ProjectivePoint) -> HermitianProjector {
    let n = p.n();
    let z = p.rep();
    let mut m = CMatrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            m[(i, j)] = z[i] * z[j].conj();
        }
    }
    HermitianProjector { matrix: m }
}

/// Moment map μ([z]) = (|z₁|², …, |zₙ|²) of the unit representative.
///
/// The image lies in the simplex Σxᵢ = 1, xᵢ ≥ 0.
pub fn moment_map(p: &ProjectivePoint) -> Vec<f64> {
    p.rep().iter().map(|z| z.norm_sqr()).collect()
}

/// Is x on the inscribed circle of the moment simplex
/// (Σxᵢ = 1 and Σxᵢ² = 1/2)?
pub fn on_incircle(x: &[f64], tol: f64) -> bool {
    assert_eq!(x.len(), 3, "incircle test is for the n = 3 simplex");
    let s1: f64 = x.iter().sum();
    let s2: f64 = x.iter().map(|v| v * v).sum();
    (s1 - 1.0).abs() <= tol && (s2 - 0.5).abs() <= tol
}

/// Correct separation: κ = 1/(n+1) within tolerance.
pub fn is_correctly_separated(p: &ProjectivePoint, q: &ProjectivePoint, tol: f64) -> Result<bool> {
    let n = p.n();
    let k = cross_ratio(p, q)?;
    Ok((k - 1.0 / (n as f64 + 1.0)).abs() <= tol)
}

/// An ordered list of points with the pairwise cross-ratio matrix cached.
#[derive(Debug, Clone)]
pub struct Configuration {
    points: Vec<ProjectivePoint>,
    gram: Vec<Vec<f64>>,
}

impl Configuration {
    pub fn new(points: Vec<ProjectivePoint>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::WrongPointCount { got: 0, expected: 1 });
        }
        let n = points[0].n();
        for p in &points {
            if p.n() != n {
                return Err(Error::DimensionMismatch(n, p.n()));
            }
        }
        let m = points.len();
        let mut gram = vec![vec![0.0; m]; m];
        for i in 0..m {
            gram[i][i] = 1.0;
            for j in i + 1..m {
                let k = cross_ratio(&points[i], &points[j])?;
                gram[i][j] = k;
                gram[j][i] = k;
            }
        }
        Ok(Configuration { points, gram })
    }

    pub fn points(&self) -> &[ProjectivePoint] {
        &self.points
    }

    pub fn gram(&self) -> &[Vec<f64>] {
        &self.gram
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn n(&self) -> usize {
        self.points[0].n()
    }

    /// Number of unordered pairs with |κ − 1/(n+1)| ≤ tol.
    pub fn separated_pairs(&self, tol: f64) -> usize {
        let target = 1.0 / (self.n() as f64 + 1.0);
        let m = self.len();
        let mut count = 0;
        for i in 0..m {
            for j in i + 1..m {
                if (self.gram[i][j] - target).abs() <= tol {
                    count += 1;
                }
            }
        }
        count
    }

    /// Set equality up to reordering, at tolerance `tol`.
    pub fn same_set(&self, other: &Configuration, tol: f64) -> bool {
        if self.len() != other.len() || self.n() != other.n() {
            return false;
        }
        let mut used = vec![false; other.len()];
        'outer: for p in &self.points {
            for (j, q) in other.points.iter().enumerate() {
                if !used[j] && p.same_point(q, tol) {
                    used[j] = true;
                    continue 'outer;
                }
            }
            return false;
        }
        true
    }
}

/// Verification report for a candidate SIC set.
#[derive(Debug, Clone)]
pub struct SicReport {
    pub is_sic: bool,
    /// max over off-diagonal pairs of |κ − 1/(n+1)|.
    pub max_deviation: f64,
    /// max-norm of (1/n) Σ Pᵢ − I, checked independently of the κ test.
    pub resolution_defect: f64,
    pub pairs_separated: usize,
    pub total_pairs: usize,
}

/// Check that a configuration of n² points is a SIC set: every off-diagonal
/// cross ratio equals 1/(n+1), and the projectors resolve the identity.
pub fn verify_sic(c: &Configuration, tol: f64) -> Result<SicReport> {
    let n = c.n();
    if c.len() != n * n {
        return Err(Error::WrongPointCount { got: c.len(), expected: n * n });
    }
    let target = 1.0 / (n as f64 + 1.0);
    let mut max_dev: f64 = 0.0;
    for i in 0..c.len() {
        for j in i + 1..c.len() {
            max_dev = max_dev.max((c.gram()[i][j] - target).abs());
        }
    }
    let mut sum = CMatrix::zeros(n);
    for p in c.points() {
        sum = sum.add(projector_of(p).matrix());
    }
    let resolution_defect = sum
        .scale(C64::new(1.0 / n as f64, 0.0))
        .sub(&CMatrix::identity(n))
        .max_abs();
    Ok(SicReport {
        is_sic: max_dev <= tol,
        max_deviation: max_dev,
        resolution_defect,
        pairs_separated: c.separated_pairs(tol),
        total_pairs: c.len() * (c.len() - 1) / 2,
    })
}

/// Count unordered triples of points in CP² whose representatives are
/// linearly dependent (|det| ≤ tol), i.e. triples lying on a projective line.
pub fn collinear_triples(c: &Configuration, tol: f64) -> (usize, Vec<[usize; 3]>) {
    assert_eq!(c.n(), 3, "collinearity is defined for CP^2 here");
    let m = c.len();
    let mut triples = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            for k in j + 1..m {
                let rows = [c.points()[i].rep(), c.points()[j].rep(), c.points()[k].rep()];
                let det = rows[0][0] * (rows[1][1] * rows[2][2] - rows[1][2] * rows[2][1])
                    - rows[0][1] * (rows[1][0] * rows[2][2] - rows[1][2] * rows[2][0])
                    + rows[0][2] * (rows[1][0] * rows[2][1] - rows[1][1] * rows[2][0]);
                if det.norm() <= tol {
                    triples.push([i, j, k]);
                }
            }
        }
    }
    (triples.len(), triples)
}

#[derive(Deserialize)]
struct ConfigurationJson {
    n: usize,
    points: Vec<Vec<[f64; 2]>>,
}

/// Read a configuration from JSON `{"n": int, "points": [[[re,im],...],...]}`.
/// Points are canonicalized on read.
pub fn configuration_from_json(s: &str) -> Result<Configuration> {
    let parsed: ConfigurationJson =
        serde_json::from_str(s).map_err(|e| Error::Json(e.to_string()))?;
    let mut points = Vec::with_capacity(parsed.points.len());
    for entry in &parsed.points {
        if entry.len() != parsed.n {
            return Err(Error::Json(format!(
                "point has {} coordinates, expected {}",
                entry.len(),
                parsed.n
            )));
        }
        points.push(ProjectivePoint::from_complex(
            entry.iter().map(|[re, im]| C64::new(*re, *im)).collect(),
        )?);
    }
    Configuration::new(points)
}

/// Serialize with canonical representatives at 17 significant digits,
/// enough to round-trip every f64 exactly.
pub fn configuration_to_json(c: &Configuration) -> String {
    let mut out = String::new();
    out.push_str(&format!("{{\n  \"n\": {},\n  \"points\": [\n", c.n()));
    for (i, p) in c.points().iter().enumerate() {
        let coords: Vec<String> = p
            .rep()
            .iter()
            .map(|z| format!("[{:.16e}, {:.16e}]", z.re, z.im))
            .collect();
        let sep = if i + 1 < c.len() { "," } else { "" };
        out.push_str(&format!("    [{}]{}\n", coords.join(", "), sep));
    }
    out.push_str("  ]\n}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    pub(crate) fn omega() -> C64 {
        C64::from_polar(1.0, 2.0 * PI / 3.0)
    }

    fn pt(v: Vec<C64>) -> ProjectivePoint {
        ProjectivePoint::from_complex(v).unwrap()
    }

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn cross_ratio_identity_orthogonal() {
        let p = ProjectivePoint::from_reals(&[0.0, 1.0, 1.0]).unwrap();
        assert!((cross_ratio(&p, &p).unwrap() - 1.0).abs() < 1e-15);
        let e1 = ProjectivePoint::from_reals(&[1.0, 0.0]).unwrap();
        let e2 = ProjectivePoint::from_reals(&[0.0, 1.0]).unwrap();
        assert!(cross_ratio(&e1, &e2).unwrap() < 1e-15);
    }

    #[test]
    fn cross_ratio_quarter() {
        // [0,1,1] vs [0,1,ω] → |(1+ω)/2|² = 1/4
        let p = pt(vec![c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0)]);
        let q = pt(vec![c(0.0, 0.0), c(1.0, 0.0), omega()]);
        assert!((cross_ratio(&p, &q).unwrap() - 0.25).abs() < 1e-15);
    }

    #[test]
    fn cross_ratio_dimension_mismatch() {
        let p = ProjectivePoint::from_reals(&[1.0, 0.0]).unwrap();
        let q = ProjectivePoint::from_reals(&[1.0, 0.0, 0.0]).unwrap();
        assert!(matches!(cross_ratio(&p, &q), Err(Error::DimensionMismatch(2, 3))));
    }

    #[test]
    fn fs_distance_values() {
        let p = pt(vec![c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0)]);
        let q = pt(vec![c(0.0, 0.0), c(1.0, 0.0), omega()]);
        // κ = 1/4 → d = 2π/3
        assert!((fs_distance(&p, &q).unwrap() - 2.0 * PI / 3.0).abs() < 1e-12);
        assert!(fs_distance(&p, &p).unwrap() < 1e-7);
        let e1 = ProjectivePoint::from_reals(&[1.0, 0.0]).unwrap();
        let e2 = ProjectivePoint::from_reals(&[0.0, 1.0]).unwrap();
        assert!((fs_distance(&e1, &e2).unwrap() - PI).abs() < 1e-12);
    }

    #[test]
    fn projector_examples() {
        let e1 = ProjectivePoint::from_reals(&[1.0, 0.0]).unwrap();
        let p = projector_of(&e1);
        assert!(p.defect() < 1e-14);
        assert!((p.matrix()[(0, 0)] - c(1.0, 0.0)).norm() < 1e-14);
        assert!(p.matrix()[(1, 1)].norm() < 1e-14);

        let h = ProjectivePoint::from_reals(&[1.0, 1.0]).unwrap();
        let ph = projector_of(&h);
        for i in 0..2 {
            for j in 0..2 {
                assert!((ph.matrix()[(i, j)] - c(0.5, 0.0)).norm() < 1e-14);
            }
        }
    }

    #[test]
    fn bloch_sphere_form() {
        // For n = 2, P = ½(I + [[a, b+ic],[b-ic, -a]]) with (a,b,c) ∈ S².
        // Expanding P = z z̄ᵀ: a = |z₁|²−|z₂|², b+ic = 2 z₁ z̄₂.
        let z = pt(vec![c(0.6, 0.3), c(0.5, -0.55)]);
        let p = projector_of(&z);
        let v = z.rep();
        let a = v[0].norm_sqr() - v[1].norm_sqr();
        let bc = (v[0] * v[1].conj()) * c(2.0, 0.0);
        let (b, cc) = (bc.re, bc.im);
        assert!((a * a + b * b + cc * cc - 1.0).abs() < 1e-12);
        let m = p.matrix();
        assert!((m[(0, 0)] - c(0.5 * (1.0 + a), 0.0)).norm() < 1e-12);
        assert!((m[(0, 1)] - c(0.5 * b, 0.5 * cc)).norm() < 1e-12);
        assert!((m[(1, 0)] - c(0.5 * b, -0.5 * cc)).norm() < 1e-12);
        assert!((m[(1, 1)] - c(0.5 * (1.0 - a), 0.0)).norm() < 1e-12);
    }

    #[test]
    fn moment_map_examples() {
        let m1 = moment_map(&pt(vec![c(0.0, 0.0), c(1.0, 0.0), -omega()]));
        assert!(m1[0].abs() < 1e-15 && (m1[1] - 0.5).abs() < 1e-15 && (m1[2] - 0.5).abs() < 1e-15);
        let center = moment_map(&ProjectivePoint::from_reals(&[1.0, 1.0, 1.0]).unwrap());
        for x in center {
            assert!((x - 1.0 / 3.0).abs() < 1e-15);
        }
    }

    #[test]
    fn incircle_examples() {
        assert!(on_incircle(&[2.0 / 3.0, 1.0 / 6.0, 1.0 / 6.0], 1e-12));
        assert!(!on_incircle(&[1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0], 1e-9));
        assert!(on_incircle(&[0.0, 0.5, 0.5], 1e-12));
    }

    #[test]
    fn separation_examples() {
        let p = pt(vec![c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0)]);
        let q = pt(vec![c(0.0, 0.0), c(1.0, 0.0), omega()]);
        assert!(is_correctly_separated(&p, &q, GEOM_TOL).unwrap());
        assert!(!is_correctly_separated(&p, &p, GEOM_TOL).unwrap());
    }

    #[test]
    fn verify_sic_wrong_count() {
        let pts: Vec<_> = (0..8)
            .map(|i| ProjectivePoint::from_reals(&[1.0, i as f64, 2.0 + i as f64]).unwrap())
            .collect();
        let c = Configuration::new(pts).unwrap();
        assert!(matches!(
            verify_sic(&c, GEOM_TOL),
            Err(Error::WrongPointCount { got: 8, expected: 9 })
        ));
    }

    #[test]
    fn random_points_are_not_sic() {
        // fixed "random-ish" rationals; generic points essentially never tie
        let pts: Vec<_> = (0..9)
            .map(|i| {
                let t = i as f64;
                pt(vec![c(1.0, 0.1 * t), c(0.3 * t - 1.0, 0.05), c(0.7, -0.2 * t)])
            })
            .collect();
        let cfg = Configuration::new(pts).unwrap();
        let rep = verify_sic(&cfg, GEOM_TOL).unwrap();
        assert!(!rep.is_sic);
    }

    #[test]
    fn canonical_phase_is_deterministic() {
        let a = pt(vec![c(0.0, 0.0), c(0.0, 2.0), c(1.0, -3.0)]);
        let b = pt(vec![c(0.0, 0.0), c(0.0, -4.0), c(-6.0, -2.0)]);
        // same ray up to scale/phase? second = first * (2i conj stuff): check equality path
        assert!(a.rep()[1].im.abs() < 1e-12 && a.rep()[1].re > 0.0);
        assert!(b.rep()[1].im.abs() < 1e-12 && b.rep()[1].re > 0.0);
    }

    #[test]
    fn json_roundtrip_preserves_verdict() {
        let pts = vec![
            pt(vec![c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0)]),
            pt(vec![c(0.5, 0.2), c(-1.0, 0.3), c(0.1, 0.9)]),
        ];
        let cfg = Configuration::new(pts).unwrap();
        let s = configuration_to_json(&cfg);
        let back = configuration_from_json(&s).unwrap();
        assert!(cfg.same_set(&back, 1e-13));
        // serialization itself is deterministic
        assert_eq!(s, configuration_to_json(&cfg));
        // and gram entries survive the round trip to full precision
        for i in 0..2 {
            for j in 0..2 {
                assert!((cfg.gram()[i][j] - back.gram()[i][j]).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn json_rejects_malformed() {
        assert!(configuration_from_json("{\"n\": 3}").is_err());
        assert!(configuration_from_json("not json").is_err());
    }
}
