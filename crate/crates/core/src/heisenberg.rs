//! Weyl-Heisenberg orbits and the explicit SIC constructions.
//!
//! The group W×H ≅ ℤₙ×ℤₙ is generated by the cyclic shift A (with
//! (Az)ᵢ = z_{i+1 mod n}) and the clock B = diag(1, ω, …, ω^{n-1}),
//! ω = e^{2πi/n}. The generators satisfy AB = ω·BA. A vector whose
//! W×H orbit is a SIC set is a fiducial vector.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::cmatrix::{cubic_roots_complex, norm_sq, C64, CMatrix};
use crate::error::{Error, Result};
use crate::projective::{moment_map, on_incircle, Configuration, ProjectivePoint};
use crate::torus::{z_of, TorusCoord};

fn omega_n(n: usize) -> C64 {
    Complex64::from_polar(1.0, 2.0 * PI / n as f64)
}

/// The cyclic shift generator A: (Az)ᵢ = z_{i+1 mod n}.
pub fn shift(n: usize) -> CMatrix {
    let mut a = CMatrix::zeros(n);
    for i in 0..n {
        a[(i, (i + 1) % n)] = C64::new(1.0, 0.0);
    }
    a
}

/// The clock generator B = diag(1, ω, …, ω^{n-1}).
pub fn clock(n: usize) -> CMatrix {
    let w = omega_n(n);
    let mut b = CMatrix::zeros(n);
    for i in 0..n {
        b[(i, i)] = w.powu(i as u32);
    }
    b
}

/// A unitary matrix with a free-text label; unitarity is checked at
/// construction within 1e-12.
#[derive(Debug, Clone)]
pub struct UnitaryMatrix {
    pub matrix: CMatrix,
    pub label: String,
}

impl UnitaryMatrix {
    pub fn new(matrix: CMatrix, label: impl Into<String>) -> Result<Self> {
        let defect = matrix.adjoint().mul(&matrix).sub(&CMatrix::identity(matrix.n())).max_abs();
        if defect > 1e-12 {
            return Err(Error::NotUnitary(defect));
        }
        Ok(UnitaryMatrix { matrix, label: label.into() })
    }
}

/// The group element A^j B^k with its residues.
#[derive(Debug, Clone)]
pub struct WHGroupElement {
    pub j: usize,
    pub k: usize,
    pub matrix: CMatrix,
}

pub fn wh_element(n: usize, j: usize, k: usize) -> WHGroupElement {
    let m = shift(n).pow(j % n).mul(&clock(n).pow(k % n));
    WHGroupElement { j: j % n, k: k % n, matrix: m }
}

/// The n² projective points {[A^j B^k z]} in (j,k)-lexicographic order.
///
/// Degenerate orbits (fiducial fixed by a subgroup) are returned with
/// repetitions; `verify_sic` then fails on the repeated pair.
pub fn wh_orbit(fiducial: &ProjectivePoint) -> Configuration {
    let n = fiducial.n();
    let a = shift(n);
    let b = clock(n);
    let mut points = Vec::with_capacity(n * n);
    for j in 0..n {
        for k in 0..n {
            let m = a.pow(j).mul(&b.pow(k));
            points.push(fiducial.apply(&m));
        }
    }
    Configuration::new(points).expect("orbit points share the fiducial's dimension")
}

/// Why a CP² point is or is not a fiducial vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FiducialReason {
    /// A coordinate vanishes and the point lies on a midpoint circle Cᵢ.
    OnMidpointCircle,
    /// μ(z) on the incircle and Δ = z₁²z̄₂z̄₃ + z₂²z̄₃z̄₁ + z₃²z̄₁z̄₂ = 0.
    IncircleAndDeltaZero,
    /// μ(z) is off the incircle.
    NotOnIncircle,
    /// μ(z) on the incircle but Δ ≠ 0.
    DeltaNonzero,
}

#[derive(Debug, Clone, Copy)]
pub struct FiducialVerdict {
    pub is_fiducial: bool,
    pub reason: FiducialReason,
    pub delta_abs: f64,
}

/// Classify a CP² point as fiducial or not.
///
/// The orbit of [z] is a SIC set iff μ([z]) lies on the incircle and
/// Δ(z) = 0. A vanishing coordinate makes Δ = 0 automatically, and the
/// incircle condition then pins the point to a midpoint circle; a
/// vanishing coordinate alone is not sufficient.
pub fn classify_fiducial(z: &ProjectivePoint, tol: f64) -> Result<FiducialVerdict> {
    if z.n() != 3 {
        return Err(Error::UnsupportedDimension(z.n()));
    }
    let v = z.rep();
    let mu = moment_map(z);
    let delta = v[0] * v[0] * v[1].conj() * v[2].conj()
        + v[1] * v[1] * v[2].conj() * v[0].conj()
        + v[2] * v[2] * v[0].conj() * v[1].conj();
    let delta_abs = delta.norm();
    let on_c = on_incircle(&mu, tol);
    let verdict = if on_c && delta_abs <= tol {
        let vanishing = v.iter().any(|z| z.norm() <= tol);
        FiducialVerdict {
            is_fiducial: true,
            reason: if vanishing {
                FiducialReason::OnMidpointCircle
            } else {
                FiducialReason::IncircleAndDeltaZero
            },
            delta_abs,
        }
    } else {
        FiducialVerdict {
            is_fiducial: false,
            reason: if on_c { FiducialReason::DeltaNonzero } else { FiducialReason::NotOnIncircle },
            delta_abs,
        }
    };
    Ok(verdict)
}

/// The fiducial family [cos θ, ω^j cos(θ+2π/3), ω^k cos(θ+4π/3)].
pub fn cos3_fiducial(theta: f64, j: usize, k: usize) -> ProjectivePoint {
    let w = omega_n(3);
    let a = theta.cos();
    let b = (theta + 2.0 * PI / 3.0).cos();
    let c = (theta + 4.0 * PI / 3.0).cos();
    ProjectivePoint::from_complex(vec![
        C64::new(a, 0.0),
        w.powu(j as u32) * b,
        w.powu(k as u32) * c,
    ])
    .expect("cos3 family never vanishes identically")
}

/// A midpoint solution: three equally spaced points on each circle Cᵢ,
/// with base phase σᵢ on circle i.
///
/// C₁ holds [0, e^{iσ₁}, ω^k], C₂ holds [ω^k, 0, e^{iσ₂}], C₃ holds
/// [e^{iσ₃}, ω^k, 0], k = 0,1,2. Any base phases give a SIC set.
pub fn midpoint_solution(base_phases: [f64; 3]) -> Configuration {
    let w = omega_n(3);
    let zero = C64::new(0.0, 0.0);
    let mut points = Vec::with_capacity(9);
    for k in 0..3u32 {
        points.push(
            ProjectivePoint::from_complex(vec![
                zero,
                Complex64::from_polar(1.0, base_phases[0]),
                w.powu(k),
            ])
            .unwrap(),
        );
    }
    for k in 0..3u32 {
        points.push(
            ProjectivePoint::from_complex(vec![
                w.powu(k),
                zero,
                Complex64::from_polar(1.0, base_phases[1]),
            ])
            .unwrap(),
        );
    }
    for k in 0..3u32 {
        points.push(
            ProjectivePoint::from_complex(vec![
                Complex64::from_polar(1.0, base_phases[2]),
                w.powu(k),
                zero,
            ])
            .unwrap(),
        );
    }
    Configuration::new(points).unwrap()
}

/// The six θ-independent points of the family S_θ: [0,1,−ω], [0,1,−ω²]
/// in C₁, [1,0,−ω], [1,0,−ω²] in C₂, [1,−ω,0], [1,−ω²,0] in C₃.
pub fn six_fixed_points() -> Vec<ProjectivePoint> {
    let w = omega_n(3);
    let one = C64::new(1.0, 0.0);
    let zero = C64::new(0.0, 0.0);
    [
        vec![zero, one, -w],
        vec![zero, one, -w * w],
        vec![one, zero, -w],
        vec![one, zero, -w * w],
        vec![one, -w, zero],
        vec![one, -w * w, zero],
    ]
    .into_iter()
    .map(|v| ProjectivePoint::from_complex(v).unwrap())
    .collect()
}

/// The SIC set S_θ: the six fixed points plus the rotating triple
/// z[0, θ−π/3], z[0, θ], z[0, θ+π/3].
pub fn s_theta(theta: f64) -> Configuration {
    let mut points = six_fixed_points();
    for dt in [-PI / 3.0, 0.0, PI / 3.0] {
        points.push(z_of(TorusCoord::new(0.0, theta + dt)));
    }
    Configuration::new(points).unwrap()
}

/// The Clifford element M = (1/√3)·[[ω²,ω,1],[1,ω,ω²],[1,1,1]].
///
/// Satisfies M³ = iω²I, MAM⁻¹ = ωB and MBM⁻¹ = ω²(AB)⁻¹; the checks run
/// at construction.
pub fn clifford_m() -> UnitaryMatrix {
    let w = omega_n(3);
    let s = C64::new(1.0 / 3.0f64.sqrt(), 0.0);
    let one = C64::new(1.0, 0.0);
    let m = CMatrix::from_rows(&[
        vec![w * w * s, w * s, s],
        vec![s, w * s, w * w * s],
        vec![s, s, s],
    ]);
    let u = UnitaryMatrix::new(m, "M").expect("M is unitary");
    let checks = clifford_m_defects(&u.matrix);
    assert!(
        checks.iter().all(|&d| d < 1e-13),
        "Clifford relations violated: {checks:?}"
    );
    let _ = one;
    u
}

/// Entrywise defects of (M³ − iω²I, MAM⁻¹ − ωB, MBM⁻¹ − ω²(AB)⁻¹).
pub fn clifford_m_defects(m: &CMatrix) -> [f64; 3] {
    let w = omega_n(3);
    let a = shift(3);
    let b = clock(3);
    let minv = m.adjoint(); // unitary
    let d1 = m.pow(3).sub(&CMatrix::identity(3).scale(C64::new(0.0, 1.0) * w * w)).max_abs();
    let d2 = m.mul(&a).mul(&minv).sub(&b.scale(w)).max_abs();
    let abinv = a.mul(&b).inverse().expect("AB is invertible");
    let d3 = m.mul(&b).mul(&minv).sub(&abinv.scale(w * w)).max_abs();
    [d1, d2, d3]
}

/// Eigen-decomposition of a 3×3 complex matrix by a direct
/// characteristic-polynomial solve plus one inverse-iteration step.
/// Eigenpairs are sorted by ascending eigenvalue phase.
pub fn eigen3(m: &CMatrix) -> Result<Vec<(C64, Vec<C64>)>> {
    assert_eq!(m.n(), 3);
    let tr = m.trace();
    // sum of principal 2x2 minors
    let mut m2 = C64::new(0.0, 0.0);
    for i in 0..3 {
        for j in i + 1..3 {
            m2 += m[(i, i)] * m[(j, j)] - m[(i, j)] * m[(j, i)];
        }
    }
    let det = m.det();
    let mut lambdas = cubic_roots_complex(-tr, m2, -det).to_vec();
    lambdas.sort_by(|a, b| a.arg().partial_cmp(&b.arg()).unwrap());
    let sep = (0..3)
        .flat_map(|i| (i + 1..3).map(move |j| (i, j)))
        .map(|(i, j)| (lambdas[i] - lambdas[j]).norm())
        .fold(f64::INFINITY, f64::min);
    if sep < 1e-8 {
        return Err(Error::DegenerateEigenspace(sep));
    }
    let mut out = Vec::with_capacity(3);
    for &lam in &lambdas {
        let mut shifted = m.clone();
        for i in 0..3 {
            shifted[(i, i)] -= lam;
        }
        // kernel direction: best bilinear cross product of two rows
        let rows: Vec<Vec<C64>> =
            (0..3).map(|i| (0..3).map(|j| shifted[(i, j)]).collect()).collect();
        let mut best: Option<Vec<C64>> = None;
        let mut best_norm = 0.0;
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            let (r, s) = (&rows[i], &rows[j]);
            let v = vec![
                r[1] * s[2] - r[2] * s[1],
                r[2] * s[0] - r[0] * s[2],
                r[0] * s[1] - r[1] * s[0],
            ];
            let nv = norm_sq(&v);
            if nv > best_norm {
                best_norm = nv;
                best = Some(v);
            }
        }
        let mut v = best.ok_or_else(|| Error::RootFinding("no kernel direction".into()))?;
        let nv = norm_sq(&v).sqrt();
        for z in v.iter_mut() {
            *z /= nv;
        }
        // one inverse-iteration step against a slightly shifted matrix
        let mut refine = m.clone();
        let shift_eps = 1e-11;
        for i in 0..3 {
            refine[(i, i)] -= lam * C64::new(1.0 + shift_eps, 0.0);
        }
        if let Ok(w) = refine.solve(&v) {
            let nw = norm_sq(&w).sqrt();
            if nw > 0.0 {
                v = w.into_iter().map(|z| z / nw).collect();
            }
        }
        out.push((lam, v));
    }
    Ok(out)
}

/// The W×H orbit of an eigenvector of M, with the multiset of pairwise
/// cross ratios. `index` selects the eigenvector by ascending eigenvalue
/// phase; all three choices produce identical pair statistics.
pub fn m_eigen_config(index: usize) -> Result<(Configuration, Vec<f64>)> {
    let m = clifford_m();
    let eig = eigen3(&m.matrix)?;
    let (_, v) = &eig[index % 3];
    let fiducial = ProjectivePoint::from_complex(v.clone())?;
    let config = wh_orbit(&fiducial);
    let mut kappas = Vec::new();
    for i in 0..config.len() {
        for j in i + 1..config.len() {
            kappas.push(config.gram()[i][j]);
        }
    }
    kappas.sort_by(|a, b| a.partial_cmp(b).unwrap());
    Ok((config, kappas))
}

/// The two explicit tetrahedra in CP¹: {[0,1],[√2,1],[√2,ω],[√2,ω²]} and
/// {[1,ϖ],[ϖ,1],[1,−ϖ],[ϖ,−1]} with ϖ = (1+i)/(1+√3).
pub fn tetrahedra_cp1() -> (Configuration, Configuration) {
    let w = omega_n(3);
    let r2 = C64::new(2.0f64.sqrt(), 0.0);
    let one = C64::new(1.0, 0.0);
    let first = Configuration::new(
        [
            vec![C64::new(0.0, 0.0), one],
            vec![r2, one],
            vec![r2, w],
            vec![r2, w * w],
        ]
        .into_iter()
        .map(|v| ProjectivePoint::from_complex(v).unwrap())
        .collect(),
    )
    .unwrap();
    let varpi = C64::new(1.0, 1.0) / C64::new(1.0 + 3.0f64.sqrt(), 0.0);
    let second = Configuration::new(
        [
            vec![one, varpi],
            vec![varpi, one],
            vec![one, -varpi],
            vec![varpi, -one],
        ]
        .into_iter()
        .map(|v| ProjectivePoint::from_complex(v).unwrap())
        .collect(),
    )
    .unwrap();
    (first, second)
}

/// The sixteen-point fiducial for CP³ with r = √2, s = √(2+√5):
/// [−s−i(r+s), 1−r+i, s+i(s−r), 1+r+i].
pub fn cp3_fiducial() -> ProjectivePoint {
    let r = 2.0f64.sqrt();
    let s = (2.0 + 5.0f64.sqrt()).sqrt();
    ProjectivePoint::from_complex(vec![
        C64::new(-s, -(r + s)),
        C64::new(1.0 - r, 1.0),
        C64::new(s, s - r),
        C64::new(1.0 + r, 1.0),
    ])
    .unwrap()
}

/// Inner product check used by tests: κ between a transformed point and a
/// target, convenient for "M maps x to y" assertions.
pub fn maps_to(u: &CMatrix, from: &ProjectivePoint, to: &ProjectivePoint, tol: f64) -> bool {
    let image = from.apply(u);
    image.same_point(to, tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::projective::{cross_ratio, verify_sic, GEOM_TOL};

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn weyl_commutation() {
        // with (Az)_i = z_{i+1}: AB = ω BA
        for n in [2, 3, 4] {
            let a = shift(n);
            let b = clock(n);
            let w = omega_n(n);
            let defect = a.mul(&b).sub(&b.mul(&a).scale(w)).max_abs();
            assert!(defect < 1e-15, "n = {n}: {defect}");
        }
    }

    #[test]
    fn wh_element_matches_product() {
        let e = wh_element(3, 2, 1);
        let expect = shift(3).pow(2).mul(&clock(3).pow(1));
        assert!(e.matrix.sub(&expect).max_abs() < 1e-15);
    }

    #[test]
    fn orbit_011_is_sic() {
        let f = ProjectivePoint::from_reals(&[0.0, 1.0, 1.0]).unwrap();
        let orbit = wh_orbit(&f);
        assert_eq!(orbit.len(), 9);
        let rep = verify_sic(&orbit, GEOM_TOL).unwrap();
        assert!(rep.is_sic);
        assert!(rep.max_deviation < 1e-12);
    }

    #[test]
    fn orbit_of_coordinate_point_collapses() {
        let f = ProjectivePoint::from_reals(&[1.0, 0.0, 0.0]).unwrap();
        let orbit = wh_orbit(&f);
        assert_eq!(orbit.len(), 9);
        let e: Vec<_> = (0..3)
            .map(|i| {
                let mut v = [0.0; 3];
                v[i] = 1.0;
                ProjectivePoint::from_reals(&v).unwrap()
            })
            .collect();
        for target in &e {
            let hits = orbit.points().iter().filter(|p| p.same_point(target, 1e-12)).count();
            assert_eq!(hits, 3);
        }
        assert!(!verify_sic(&orbit, GEOM_TOL).unwrap().is_sic);
    }

    #[test]
    fn cp3_orbit_is_sic() {
        let orbit = wh_orbit(&cp3_fiducial());
        assert_eq!(orbit.len(), 16);
        let rep = verify_sic(&orbit, GEOM_TOL).unwrap();
        assert!(rep.is_sic, "max dev {}", rep.max_deviation);
        assert!(rep.max_deviation < 1e-11);
        assert!((orbit.gram()[0][1] - 0.2).abs() < 1e-11);
    }

    #[test]
    fn classify_examples() {
        let f = ProjectivePoint::from_reals(&[0.0, 1.0, 1.0]).unwrap();
        let v = classify_fiducial(&f, GEOM_TOL).unwrap();
        assert!(v.is_fiducial);
        assert_eq!(v.reason, FiducialReason::OnMidpointCircle);

        let good = cos3_fiducial(0.3, 1, 2);
        assert!(classify_fiducial(&good, GEOM_TOL).unwrap().is_fiducial);
        assert!(verify_sic(&wh_orbit(&good), GEOM_TOL).unwrap().is_sic);

        // phase-perturbed: same moment image, Δ ≠ 0
        let th: f64 = 0.3;
        let s = (2.0f64 / 3.0).sqrt();
        let pert = ProjectivePoint::from_complex(vec![
            c(s * th.cos(), 0.0),
            Complex64::from_polar(s * (th + 2.0 * PI / 3.0).cos().abs(), 0.1 + PI),
            c(s * (th + 4.0 * PI / 3.0).cos(), 0.0),
        ])
        .unwrap();
        let verdict = classify_fiducial(&pert, GEOM_TOL).unwrap();
        assert!(!verdict.is_fiducial);
        assert_eq!(verdict.reason, FiducialReason::DeltaNonzero);
        assert!(!verify_sic(&wh_orbit(&pert), GEOM_TOL).unwrap().is_sic);
    }

    #[test]
    fn classify_rejects_unequal_moduli_with_vanishing_coordinate() {
        // [0,1,2] has a vanishing coordinate but is no fiducial: the H-orbit
        // pairs land at the wrong cross ratio. The verdict must agree with
        // the verify_sic oracle.
        let z = ProjectivePoint::from_reals(&[0.0, 1.0, 2.0]).unwrap();
        let verdict = classify_fiducial(&z, GEOM_TOL).unwrap();
        assert!(!verdict.is_fiducial);
        assert!(!verify_sic(&wh_orbit(&z), GEOM_TOL).unwrap().is_sic);
    }

    #[test]
    fn midpoint_solutions() {
        let zero_phases = midpoint_solution([0.0, 0.0, 0.0]);
        assert!(verify_sic(&zero_phases, GEOM_TOL).unwrap().is_sic);
        let random = midpoint_solution([0.3, -0.8, 1.1]);
        assert!(verify_sic(&random, GEOM_TOL).unwrap().is_sic);
        // matched triples: the Hesse configuration with 12 lines
        let matched = midpoint_solution([PI, PI, PI]);
        assert!(verify_sic(&matched, GEOM_TOL).unwrap().is_sic);
        let (lines, list) = crate::projective::collinear_triples(&matched, GEOM_TOL);
        assert_eq!(lines, 12);
        // four lines through each point
        for i in 0..9 {
            let through = list.iter().filter(|t| t.contains(&i)).count();
            assert_eq!(through, 4);
        }
    }

    #[test]
    fn s_theta_examples() {
        for theta in [PI / 16.0, 0.0, 0.7, -1.3] {
            let cfg = s_theta(theta);
            let rep = verify_sic(&cfg, GEOM_TOL).unwrap();
            assert!(rep.is_sic, "theta {theta}: dev {}", rep.max_deviation);
            assert!(rep.max_deviation <= 1e-10);
        }
        // θ = π/6 coincides with a midpoint solution up to reordering
        let special = s_theta(PI / 6.0);
        let midpoint = midpoint_solution([PI, PI, PI]);
        assert!(special.same_set(&midpoint, 1e-9));
        // θ = 0: z[0,0] lies over p₁ = (2/3, 1/6, 1/6)
        let m = moment_map(&s_theta(0.0).points()[7]);
        assert!((m[0] - 2.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn clifford_relations() {
        let m = clifford_m();
        let d = clifford_m_defects(&m.matrix);
        assert!(d.iter().all(|&x| x < 1e-13), "{d:?}");
        // M maps z[0,θ] to [e^{2iθ}, ω, 0]
        let th = 0.37;
        let w = omega_n(3);
        let target = ProjectivePoint::from_complex(vec![
            Complex64::from_polar(1.0, 2.0 * th),
            w,
            c(0.0, 0.0),
        ])
        .unwrap();
        assert!(maps_to(&m.matrix, &z_of(TorusCoord::new(0.0, th)), &target, 1e-12));
    }

    #[test]
    fn clifford_maps_s_theta_to_midpoint_fibres() {
        let m = clifford_m();
        let mids = [[0.0, 0.5, 0.5], [0.5, 0.0, 0.5], [0.5, 0.5, 0.0]];
        for p in s_theta(0.2).points() {
            let mu = moment_map(&p.apply(&m.matrix));
            let best = mids
                .iter()
                .map(|mid| {
                    mu.iter().zip(mid).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max)
                })
                .fold(f64::INFINITY, f64::min);
            assert!(best < 1e-10, "moment image {mu:?}");
        }
    }

    #[test]
    fn eigen_config_statistics() {
        let (config, kappas) = m_eigen_config(0).unwrap();
        assert_eq!(config.len(), 9);
        assert_eq!(kappas.len(), 36);
        let zeros = kappas.iter().filter(|&&k| k <= 1e-9).count();
        let thirds = kappas.iter().filter(|&&k| (k - 1.0 / 3.0).abs() <= 1e-9).count();
        assert_eq!(zeros, 9);
        assert_eq!(thirds, 27);
        let (lines, list) = crate::projective::collinear_triples(&config, GEOM_TOL);
        assert_eq!(lines, 9);
        // the three non-collinear triples of the pair graph are orthonormal bases
        let mut orthonormal = 0;
        for i in 0..9 {
            for j in i + 1..9 {
                for k in j + 1..9 {
                    let g = config.gram();
                    if g[i][j] <= 1e-9 && g[i][k] <= 1e-9 && g[j][k] <= 1e-9 {
                        orthonormal += 1;
                        assert!(!list.contains(&[i, j, k]));
                    }
                }
            }
        }
        assert_eq!(orthonormal, 3);
        // all eigenvector choices share the statistics
        for idx in 1..3 {
            let (_, k2) = m_eigen_config(idx).unwrap();
            let close = kappas.iter().zip(&k2).all(|(a, b)| (a - b).abs() < 1e-9);
            assert!(close);
        }
    }

    #[test]
    fn eigen3_reconstructs() {
        let m = clifford_m().matrix;
        for (lam, v) in eigen3(&m).unwrap() {
            let mv = m.matvec(&v);
            let res: f64 = mv
                .iter()
                .zip(&v)
                .map(|(a, b)| (a - lam * b).norm())
                .fold(0.0, f64::max);
            assert!(res < 1e-12, "residual {res}");
        }
    }

    #[test]
    fn tetrahedra_are_sic() {
        let (t1, t2) = tetrahedra_cp1();
        for t in [&t1, &t2] {
            let rep = verify_sic(t, GEOM_TOL).unwrap();
            assert!(rep.is_sic);
            assert!(rep.max_deviation < 1e-12);
            assert!(rep.resolution_defect <= 1e-12);
            assert!((t.gram()[0][1] - 1.0 / 3.0).abs() < 1e-12);
        }
    }

    #[test]
    fn orbit_equivariance() {
        let f = cos3_fiducial(0.41, 0, 0);
        let base = wh_orbit(&f);
        for u in [shift(3), clock(3)] {
            let moved = wh_orbit(&f.apply(&u));
            let mapped = Configuration::new(
                base.points().iter().map(|p| p.apply(&u)).collect(),
            )
            .unwrap();
            assert!(moved.same_set(&mapped, 1e-10));
        }
    }

    #[test]
    fn unitary_check_rejects_non_unitary() {
        let m = CMatrix::from_rows(&[
            vec![c(1.0, 0.0), c(1.0, 0.0)],
            vec![c(0.0, 0.0), c(1.0, 0.0)],
        ]);
        assert!(matches!(UnitaryMatrix::new(m, "bad"), Err(Error::NotUnitary(_))));
    }

    #[test]
    fn cross_ratio_sanity_between_orbit_points() {
        let f = ProjectivePoint::from_reals(&[0.0, 1.0, 1.0]).unwrap();
        let orbit = wh_orbit(&f);
        let k = cross_ratio(&orbit.points()[0], &orbit.points()[1]).unwrap();
        assert!((k - 0.25).abs() < 1e-13);
    }
}
