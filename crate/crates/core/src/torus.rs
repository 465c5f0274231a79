//! The pinched torus over the incircle and its separation trigonometry.
//!
//! With [z₁] = [0,1,−ω] and [z₂] = [0,1,−ω²] fixed, every further point
//! correctly separated from both has the form
//! z(σ,φ) = √(2/3)·(e^{iσ} cos φ, cos(φ+2π/3), cos(φ+4π/3)), a pinched
//! two-torus over the incircle; the pinch z[σ, π/2] = [0,1,−1] is
//! independent of σ. Two torus points are correctly separated iff
//! cos(σ−τ) equals a rational function c(x,y) of the tangents
//! x = tan φ, y = tan ψ.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::cmatrix::C64;
use crate::error::{Error, Result};
use crate::projective::{is_correctly_separated, ProjectivePoint, GEOM_TOL};

/// Coordinates (σ, φ) on the pinched torus, normalized to
/// σ ∈ (−π, π], φ ∈ (−π/2, π/2]. The pinch φ = π/2 is canonicalized
/// to σ = 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TorusCoord {
    sigma: f64,
    phi: f64,
}

/// Normalize an angle to (−π, π].
pub fn wrap_angle(a: f64) -> f64 {
    let mut x = a.rem_euclid(2.0 * PI);
    if x > PI {
        x -= 2.0 * PI;
    }
    x
}

impl TorusCoord {
    pub fn new(sigma: f64, phi: f64) -> Self {
        // z(σ, φ+π) = −z(σ, φ), so φ is taken mod π
        let mut phi = phi.rem_euclid(PI);
        if phi > PI / 2.0 {
            phi -= PI;
        }
        let mut sigma = wrap_angle(sigma);
        if (phi - PI / 2.0).abs() < 1e-15 {
            phi = PI / 2.0;
            sigma = 0.0;
        }
        TorusCoord { sigma, phi }
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    pub fn is_pinch(&self) -> bool {
        (self.phi - PI / 2.0).abs() < 1e-12
    }
}

/// The point z(σ,φ) = √(2/3)·(e^{iσ} cos φ, cos(φ+2π/3), cos(φ+4π/3)).
pub fn z_of(c: TorusCoord) -> ProjectivePoint {
    let s = (2.0f64 / 3.0).sqrt();
    let (sigma, phi) = (c.sigma(), c.phi());
    let entries = vec![
        Complex64::from_polar(s * phi.cos(), sigma),
        C64::new(s * (phi + 2.0 * PI / 3.0).cos(), 0.0),
        C64::new(s * (phi + 4.0 * PI / 3.0).cos(), 0.0),
    ];
    // unit norm by construction; pinch collapses to [0,1,-1]
    ProjectivePoint::from_complex(entries).expect("z(σ,φ) is never the zero vector")
}

/// Parametrization of the incircle:
/// (2/3)(cos²θ, cos²(θ+2π/3), cos²(θ+4π/3)).
pub fn incircle_point(theta: f64) -> [f64; 3] {
    let f = 2.0 / 3.0;
    [
        f * theta.cos().powi(2),
        f * (theta + 2.0 * PI / 3.0).cos().powi(2),
        f * (theta + 4.0 * PI / 3.0).cos().powi(2),
    ]
}

/// Value of c(x,y): the cosine of σ−τ required for z[σ, arctan x] and
/// z[τ, arctan y] to be correctly separated.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SeparationCos {
    Cos(f64),
    /// 1 + 3xy = 0: the two points lie on C₂ and C₃ and every (σ,τ) works.
    Unconstrained,
}

/// c(x,y) = (−11 + 9x² + 9y² − 27x²y² − 24xy) / (16(1+3xy)).
pub fn separation_cos(x: f64, y: f64) -> SeparationCos {
    let den = 16.0 * (1.0 + 3.0 * x * y);
    if den.abs() < 1e-12 {
        return SeparationCos::Unconstrained;
    }
    let num = -11.0 + 9.0 * x * x + 9.0 * y * y - 27.0 * x * x * y * y - 24.0 * x * y;
    SeparationCos::Cos(num / den)
}

/// Solutions σ of cos(σ−τ) = c(tan φ, tan ψ).
#[derive(Debug, Clone, PartialEq)]
pub enum SigmaSolutions {
    /// 0, 1 or 2 values of σ in (−π, π].
    Angles(Vec<f64>),
    /// The C₂/C₃ case: σ is free.
    Unconstrained,
}

/// All σ ∈ (−π, π] with z[σ,φ] correctly separated from z[τ,ψ].
///
/// Arguments inside 1e-12 of ±1 are clamped (tangency); |c| > 1 gives no
/// solution. The pinch φ = ±π/2 is rejected.
pub fn sigma_solutions(phi: f64, psi: f64, tau: f64) -> Result<SigmaSolutions> {
    if (phi.abs() - PI / 2.0).abs() < 1e-12 || (psi.abs() - PI / 2.0).abs() < 1e-12 {
        return Err(Error::PinchInput);
    }
    let c = match separation_cos(phi.tan(), psi.tan()) {
        SeparationCos::Unconstrained => return Ok(SigmaSolutions::Unconstrained),
        SeparationCos::Cos(c) => c,
    };
    // snap tangencies: |c| within 1e-12 of 1 from either side
    let c = if (c.abs() - 1.0).abs() <= 1e-12 { c.signum() } else { c };
    if c.abs() > 1.0 {
        return Ok(SigmaSolutions::Angles(vec![]));
    }
    let delta = c.acos();
    if delta == 0.0 {
        return Ok(SigmaSolutions::Angles(vec![wrap_angle(tau)]));
    }
    let (s1, s2) = (wrap_angle(tau + delta), wrap_angle(tau - delta));
    if (s1 - s2).abs() < 1e-15 {
        // δ = π: both branches wrap to the same angle
        return Ok(SigmaSolutions::Angles(vec![s1]));
    }
    Ok(SigmaSolutions::Angles(vec![s1, s2]))
}

/// One sampled point (σ, φ) of a separation curve, tagged with its
/// connected component.
#[derive(Debug, Clone, Copy)]
pub struct CurveSample {
    pub sigma: f64,
    pub phi: f64,
    pub component: usize,
}

/// The locus of points correctly separated from a fixed anchor,
/// sampled on a uniform φ grid.
#[derive(Debug, Clone)]
pub struct SeparationCurve {
    pub anchor: TorusCoord,
    pub samples: Vec<CurveSample>,
    pub components: usize,
}

/// Sweep φ over `resolution` grid points and collect the σ branches of the
/// curve of points correctly separated from `anchor`.
///
/// Components are split by gap detection: a run of more than two invalid
/// grid steps between valid samples starts a new component.
pub fn separation_curve(anchor: TorusCoord, resolution: usize) -> Result<SeparationCurve> {
    if anchor.is_pinch() {
        return Err(Error::PinchInput);
    }
    assert!(resolution > 0, "resolution must be positive");
    let t_anchor = anchor.phi().tan();
    let tau = anchor.sigma();
    let step = PI / resolution as f64;
    let mut samples = Vec::new();
    let mut component = 0usize;
    let mut last_valid: Option<usize> = None;
    for i in 0..resolution {
        let phi = -PI / 2.0 + (i as f64 + 0.5) * step;
        let c = match separation_cos(phi.tan(), t_anchor) {
            SeparationCos::Unconstrained => continue,
            SeparationCos::Cos(c) => c,
        };
        let c = if c.abs() > 1.0 && c.abs() <= 1.0 + 1e-12 { c.signum() } else { c };
        if c.abs() > 1.0 {
            continue;
        }
        if let Some(prev) = last_valid {
            if i - prev > 2 {
                component += 1;
            }
        }
        last_valid = Some(i);
        let delta = c.acos();
        samples.push(CurveSample { sigma: wrap_angle(tau + delta), phi, component });
        if delta > 1e-12 && (PI - delta).abs() > 1e-12 {
            samples.push(CurveSample { sigma: wrap_angle(tau - delta), phi, component });
        }
    }
    let components = if samples.is_empty() { 0 } else { component + 1 };
    Ok(SeparationCurve { anchor, samples, components })
}

/// Constraint on further points once a configuration contains the pinch
/// point [0,1,−1] together with [z₁] and [z₂]: any further correctly
/// separated point must satisfy sin φ = ±1/2, i.e. lie on C₂ ⊔ C₃.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PinchVerdict {
    /// Pinch absent: no constraint on φ.
    Unrestricted,
    /// Pinch present: φ is admissible iff |sin φ| = 1/2 within tolerance.
    MidpointCirclesOnly,
}

impl PinchVerdict {
    pub fn admits(&self, phi: f64, tol: f64) -> bool {
        match self {
            PinchVerdict::Unrestricted => true,
            PinchVerdict::MidpointCirclesOnly => (phi.sin().abs() - 0.5).abs() <= tol,
        }
    }
}

/// The two fixed points of C₁ used throughout: [0,1,−ω] and [0,1,−ω²].
pub fn base_pair() -> (ProjectivePoint, ProjectivePoint) {
    let omega = Complex64::from_polar(1.0, 2.0 * PI / 3.0);
    let z1 = ProjectivePoint::from_complex(vec![C64::new(0.0, 0.0), C64::new(1.0, 0.0), -omega])
        .unwrap();
    let z2 = ProjectivePoint::from_complex(vec![
        C64::new(0.0, 0.0),
        C64::new(1.0, 0.0),
        -omega * omega,
    ])
    .unwrap();
    (z1, z2)
}

/// Decide the admissible φ set for a partial configuration containing
/// [z₁],[z₂]. Errors if the base pair is missing.
pub fn pinch_rule(points: &[ProjectivePoint]) -> Result<PinchVerdict> {
    let (z1, z2) = base_pair();
    let has = |target: &ProjectivePoint| points.iter().any(|p| p.same_point(target, GEOM_TOL));
    if !has(&z1) || !has(&z2) {
        return Err(Error::RootFinding(
            "pinch rule requires the base pair [0,1,-omega], [0,1,-omega^2]".into(),
        ));
    }
    let pinch = ProjectivePoint::from_reals(&[0.0, 1.0, -1.0]).unwrap();
    if has(&pinch) {
        Ok(PinchVerdict::MidpointCirclesOnly)
    } else {
        Ok(PinchVerdict::Unrestricted)
    }
}

/// Check separation of two torus points directly through the geometry.
pub fn torus_points_separated(a: TorusCoord, b: TorusCoord, tol: f64) -> bool {
    is_correctly_separated(&z_of(a), &z_of(b), tol).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::projective::{cross_ratio, fs_distance, moment_map, on_incircle};

    #[test]
    fn z_of_pinch() {
        for sigma in [0.0, 1.0, -2.5] {
            let p = z_of(TorusCoord::new(sigma, PI / 2.0));
            let pinch = ProjectivePoint::from_reals(&[0.0, 1.0, -1.0]).unwrap();
            assert!(p.same_point(&pinch, 1e-12));
        }
    }

    #[test]
    fn z_of_six_point_example() {
        // z[-2π/3, -π/6] = [1, 0, -ω]
        let p = z_of(TorusCoord::new(-2.0 * PI / 3.0, -PI / 6.0));
        let omega = Complex64::from_polar(1.0, 2.0 * PI / 3.0);
        let target =
            ProjectivePoint::from_complex(vec![C64::new(1.0, 0.0), C64::new(0.0, 0.0), -omega])
                .unwrap();
        assert!(p.same_point(&target, 1e-12));
    }

    #[test]
    fn z_of_moment_image() {
        let m = moment_map(&z_of(TorusCoord::new(0.0, 0.0)));
        assert!((m[0] - 2.0 / 3.0).abs() < 1e-14);
        assert!((m[1] - 1.0 / 6.0).abs() < 1e-14);
        assert!((m[2] - 1.0 / 6.0).abs() < 1e-14);
    }

    #[test]
    fn incircle_midpoints() {
        let m1 = incircle_point(-PI / 2.0);
        assert!(m1[0].abs() < 1e-15 && (m1[1] - 0.5).abs() < 1e-15 && (m1[2] - 0.5).abs() < 1e-15);
        let m3 = incircle_point(PI / 6.0);
        assert!((m3[0] - 0.5).abs() < 1e-15 && (m3[1] - 0.5).abs() < 1e-15 && m3[2].abs() < 1e-15);
        let p1 = incircle_point(0.0);
        assert!((p1[0] - 2.0 / 3.0).abs() < 1e-15);
        assert!(on_incircle(&incircle_point(0.734), 1e-12));
    }

    #[test]
    fn separation_cos_values() {
        match separation_cos(0.0, 0.0) {
            SeparationCos::Cos(c) => assert!((c + 11.0 / 16.0).abs() < 1e-15),
            _ => panic!(),
        }
        match separation_cos(0.0, 3.0f64.sqrt()) {
            SeparationCos::Cos(c) => assert!((c - 1.0).abs() < 1e-12),
            _ => panic!(),
        }
        // x = 1/√3: c = -1/2 for any y ≠ -1/√3
        for y in [0.0, 0.7, -2.0] {
            match separation_cos(1.0 / 3.0f64.sqrt(), y) {
                SeparationCos::Cos(c) => assert!((c + 0.5).abs() < 1e-12, "y={y}: {c}"),
                _ => panic!(),
            }
        }
        assert_eq!(
            separation_cos(1.0 / 3.0f64.sqrt(), -1.0 / 3.0f64.sqrt()),
            SeparationCos::Unconstrained
        );
    }

    #[test]
    fn sigma_solution_examples() {
        let sols = sigma_solutions(0.0, 0.0, 0.0).unwrap();
        let expect = (-11.0f64 / 16.0).acos();
        match sols {
            SigmaSolutions::Angles(v) => {
                assert_eq!(v.len(), 2);
                assert!((v[0] - expect).abs() < 1e-12);
                assert!((v[1] + expect).abs() < 1e-12);
            }
            _ => panic!(),
        }
        // c = 1 exactly: a single solution σ = τ
        match sigma_solutions(0.0, 3.0f64.sqrt().atan(), 0.37).unwrap() {
            SigmaSolutions::Angles(v) => {
                assert_eq!(v.len(), 1);
                assert!((v[0] - 0.37).abs() < 1e-9);
            }
            _ => panic!(),
        }
        assert_eq!(
            sigma_solutions(PI / 6.0, -PI / 6.0, 1.0).unwrap(),
            SigmaSolutions::Unconstrained
        );
        assert!(matches!(sigma_solutions(PI / 2.0, 0.0, 0.0), Err(Error::PinchInput)));
    }

    #[test]
    fn sigma_solutions_give_correct_distance() {
        let cases = [(0.3, -0.2, 1.1), (1.2, 0.9, -2.0), (-0.8, 0.1, 0.0)];
        for (phi, psi, tau) in cases {
            if let SigmaSolutions::Angles(v) = sigma_solutions(phi, psi, tau).unwrap() {
                for sigma in v {
                    let d = fs_distance(
                        &z_of(TorusCoord::new(sigma, phi)),
                        &z_of(TorusCoord::new(tau, psi)),
                    )
                    .unwrap();
                    assert!((d - 2.0 * PI / 3.0).abs() < 1e-9, "d = {d}");
                }
            }
        }
    }

    #[test]
    fn curve_components() {
        let one = separation_curve(TorusCoord::new(0.0, PI / 16.0), 1024).unwrap();
        assert_eq!(one.components, 1);
        let two = separation_curve(TorusCoord::new(0.0, PI / 7.0), 1024).unwrap();
        assert_eq!(two.components, 2);
        assert!(matches!(
            separation_curve(TorusCoord::new(0.3, PI / 2.0), 64),
            Err(Error::PinchInput)
        ));
    }

    #[test]
    fn curve_samples_are_separated_from_anchor() {
        let anchor = TorusCoord::new(0.0, PI / 7.0);
        let curve = separation_curve(anchor, 256).unwrap();
        let a = z_of(anchor);
        for s in &curve.samples {
            let k = cross_ratio(&a, &z_of(TorusCoord::new(s.sigma, s.phi))).unwrap();
            assert!((k - 0.25).abs() <= 1e-9, "kappa = {k}");
        }
    }

    #[test]
    fn pinch_rule_examples() {
        let (z1, z2) = base_pair();
        let pinch = ProjectivePoint::from_reals(&[0.0, 1.0, -1.0]).unwrap();
        let verdict = pinch_rule(&[z1.clone(), z2.clone(), pinch]).unwrap();
        assert_eq!(verdict, PinchVerdict::MidpointCirclesOnly);
        assert!(verdict.admits(PI / 6.0, 1e-9));
        assert!(verdict.admits(-PI / 6.0, 1e-9));
        assert!(!verdict.admits(0.0, 1e-9));

        let open = pinch_rule(&[z1, z2]).unwrap();
        assert_eq!(open, PinchVerdict::Unrestricted);
        assert!(open.admits(0.0, 1e-9));
    }

    #[test]
    fn antipodal_identification() {
        for (sigma, phi) in [(0.4, 0.3), (-1.0, -1.2), (2.0, 1.0)] {
            let a = z_of(TorusCoord::new(sigma, phi));
            let b = z_of(TorusCoord::new(sigma, phi + PI));
            assert!(a.same_point(&b, 1e-12));
        }
    }
}
