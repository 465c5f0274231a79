//! Classification endgame: the transcribed symmetric system, its
//! re-derivation, the six-condition disjunction, the enumerated special
//! states of the case analysis, the per-t Case (iv) solver, and the fake
//! SIC construction.

pub mod case_iv;
pub mod derive;
pub mod fake;
pub mod tables;

pub use case_iv::{
    case_iv_count, case_iv_solutions, case_iv_univariate, case_iv_univariate_exact,
    cubic_roots_real, polish_triple, scan_table, CaseIVSolution, ScanRow, ScanTable,
};
pub use derive::{derived_f, eval_f, verify_derivations, verify_derivations_against, DerivationReport};
pub use fake::{fake_quartic, fake_sic, FakeSic, PairAlignment};
pub use tables::FTables;

use crate::poly::unipoly::{real_roots, UniRealPoly};

/// Elementary symmetric values (a,b,c,d) of a quadruple, the coefficient
/// data of the Vieta quartic g(x) = x⁴ − ax³ + bx² − cx + d.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymmetricState {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl SymmetricState {
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Self {
        SymmetricState { a, b, c, d }
    }

    /// Vieta map from four roots.
    pub fn from_roots(r: [f64; 4]) -> Self {
        let a = r.iter().sum();
        let mut b = 0.0;
        let mut c = 0.0;
        for i in 0..4 {
            for j in i + 1..4 {
                b += r[i] * r[j];
                for k in j + 1..4 {
                    c += r[i] * r[j] * r[k];
                }
            }
        }
        let d = r.iter().product();
        SymmetricState { a, b, c, d }
    }

    /// The quartic x⁴ − ax³ + bx² − cx + d, ascending coefficients.
    pub fn quartic(&self) -> UniRealPoly {
        UniRealPoly::new(vec![self.d, -self.c, self.b, -self.a, 1.0])
    }

    /// Real roots of the quartic.
    pub fn real_roots(&self) -> Vec<f64> {
        let p = self.quartic();
        let bound = 2.0
            + p.coeffs()[..4].iter().map(|c| c.abs()).fold(0.0, f64::max);
        real_roots(&p, -bound, bound, 1e-12).unwrap_or_default()
    }
}

/// Elementary symmetric values (p,q,r) of a triple of tangents.
pub fn triple_elementary(x: f64, y: f64, z: f64) -> (f64, f64, f64) {
    (x + y + z, x * y + y * z + z * x, x * y * z)
}

/// F(p,q,r) evaluated in doubles from the transcribed table.
pub fn f_of(p: f64, q: f64, r: f64) -> f64 {
    tables::f0().eval_f64(&[p, q, r])
}

/// F₁,…,F₄ at (a,b,c,d).
pub fn f1234_of(a: f64, b: f64, c: f64, d: f64) -> [f64; 4] {
    let pt = [a, b, c, d];
    [
        tables::f1().eval_f64(&pt),
        tables::f2().eval_f64(&pt),
        tables::f3().eval_f64(&pt),
        tables::f4().eval_f64(&pt),
    ]
}

/// G(a,b,c,d) = 81·g(1/√3)·g(−1/√3).
pub fn g_of(a: f64, b: f64, c: f64, d: f64) -> f64 {
    tables::g_poly().eval_f64(&[a, b, c, d])
}

/// The six conditions of the classification disjunction: away from
/// midpoint-solution isometry classes, one of these must vanish.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Key5Condition {
    /// d − 1 = 0
    DOne,
    /// 3d − 1 = 0
    DThird,
    /// 9d − 1 = 0
    DNinth,
    /// b + 3d + 3 = 0
    BPlus3D3,
    /// 3b + 9d + 1 = 0
    ThreeB9D1,
    /// 9b + 27d + 19 = 0 (Case iv)
    NineB27D19,
}

impl Key5Condition {
    pub fn value(&self, s: &SymmetricState) -> f64 {
        match self {
            Key5Condition::DOne => s.d - 1.0,
            Key5Condition::DThird => 3.0 * s.d - 1.0,
            Key5Condition::DNinth => 9.0 * s.d - 1.0,
            Key5Condition::BPlus3D3 => s.b + 3.0 * s.d + 3.0,
            Key5Condition::ThreeB9D1 => 3.0 * s.b + 9.0 * s.d + 1.0,
            Key5Condition::NineB27D19 => 9.0 * s.b + 27.0 * s.d + 19.0,
        }
    }

    pub fn all() -> [Key5Condition; 6] {
        [
            Key5Condition::DOne,
            Key5Condition::DThird,
            Key5Condition::DNinth,
            Key5Condition::BPlus3D3,
            Key5Condition::ThreeB9D1,
            Key5Condition::NineB27D19,
        ]
    }
}

/// The satisfied conditions at a state, within tolerance.
pub fn key5_check(s: &SymmetricState, tol: f64) -> Vec<Key5Condition> {
    Key5Condition::all().into_iter().filter(|c| c.value(s).abs() <= tol).collect()
}

/// How an enumerated special state is disposed of in the case analysis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseDisposition {
    /// The double-root family x = t, t, −1/(3t), −1/(3t).
    DoubleRootFamily,
    /// All four roots are ±1/√3.
    AllRootsPmInvSqrt3,
    /// Some root is ±1/√3 (G = 0).
    HasRootPmInvSqrt3,
    /// Four distinct real roots; the fake SIC source.
    FourRealRootsFakeSic,
    /// Two roots are non-real; no real tangent quadruple.
    TwoNonRealRoots,
}

/// The double-root family of the d = 1/9 analysis: roots
/// {t, t, −1/(3t), −1/(3t)}.
pub fn double_root_state(t: f64) -> SymmetricState {
    let u = -1.0 / (3.0 * t);
    SymmetricState::from_roots([t, t, u, u])
}

/// Enumerated states of the d = 1/9 branch analysis.
pub fn case_i_analysis() -> Vec<(SymmetricState, CaseDisposition)> {
    let s3 = 3.0f64.sqrt();
    let c_in_minus = (8.0 / 27.0) * (26.0 - 2.0 * 97.0f64.sqrt()).sqrt();
    let c_in_plus = (8.0 / 27.0) * (26.0 + 2.0 * 97.0f64.sqrt()).sqrt();
    let mut out = vec![
        (double_root_state(2.0), CaseDisposition::DoubleRootFamily),
        (SymmetricState::new(0.0, -2.0 / 3.0, 0.0, 1.0 / 9.0), CaseDisposition::AllRootsPmInvSqrt3),
        (
            SymmetricState::new(0.0, -10.0 / 3.0, 8.0 / (3.0 * s3), 1.0 / 9.0),
            CaseDisposition::HasRootPmInvSqrt3,
        ),
        (
            SymmetricState::new(0.0, -10.0 / 3.0, -8.0 / (3.0 * s3), 1.0 / 9.0),
            CaseDisposition::HasRootPmInvSqrt3,
        ),
    ];
    for c in [c_in_minus, -c_in_minus] {
        out.push((
            SymmetricState::new(0.0, -22.0 / 9.0, c, 1.0 / 9.0),
            CaseDisposition::FourRealRootsFakeSic,
        ));
    }
    for c in [c_in_plus, -c_in_plus] {
        out.push((
            SymmetricState::new(0.0, -22.0 / 9.0, c, 1.0 / 9.0),
            CaseDisposition::TwoNonRealRoots,
        ));
    }
    out
}

/// Enumerated states of the 1 + 3b + 9d = 0 and 3 + b + 3d = 0 branches.
///
/// The b = 0, d = −1 slice of the second branch solves the system at
/// (±10/√3, 0, ∓2√3, −1); the quartic there keeps a root ±1/√3, so the
/// branch contributes nothing beyond midpoint solutions.
pub fn case_ii_iii_solutions() -> Vec<(SymmetricState, CaseDisposition)> {
    let s3 = 3.0f64.sqrt();
    vec![
        (SymmetricState::new(0.0, -10.0 / 3.0, 0.0, 1.0), CaseDisposition::HasRootPmInvSqrt3),
        (SymmetricState::new(8.0 / s3, -6.0, 0.0, 1.0), CaseDisposition::HasRootPmInvSqrt3),
        (SymmetricState::new(-8.0 / s3, -6.0, 0.0, 1.0), CaseDisposition::HasRootPmInvSqrt3),
        (SymmetricState::new(10.0 / s3, 0.0, -2.0 * s3, -1.0), CaseDisposition::HasRootPmInvSqrt3),
        (SymmetricState::new(-10.0 / s3, 0.0, 2.0 * s3, -1.0), CaseDisposition::HasRootPmInvSqrt3),
    ]
}

const INV_SQRT3: f64 = 0.5773502691896258;

/// Does the quartic of a state have a root within tol of ±1/√3?
pub fn has_pm_invsqrt3_root(s: &SymmetricState, tol: f64) -> bool {
    s.real_roots().iter().any(|r| (r.abs() - INV_SQRT3).abs() <= tol)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn key5_fake_state() {
        let c = -(8.0 / 27.0) * (26.0 - 2.0 * 97.0f64.sqrt()).sqrt();
        let s = SymmetricState::new(0.0, -22.0 / 9.0, c, 1.0 / 9.0);
        let conds = key5_check(&s, 1e-12);
        assert!(conds.contains(&Key5Condition::DNinth));
        // the state is also a Case (iv) instance
        assert!(conds.contains(&Key5Condition::NineB27D19));
    }

    #[test]
    fn key5_case_ii_state() {
        let s = SymmetricState::new(0.0, -10.0 / 3.0, 0.0, 1.0);
        let conds = key5_check(&s, 1e-12);
        assert!(conds.contains(&Key5Condition::DOne));
        assert!(conds.contains(&Key5Condition::ThreeB9D1));
    }

    #[test]
    fn key5_generic_state_empty() {
        let s = SymmetricState::new(0.31, 1.7, -2.2, 0.55);
        assert!(key5_check(&s, 1e-9).is_empty());
    }

    #[test]
    fn enumerated_states_satisfy_system() {
        for (s, _) in case_i_analysis().into_iter().chain(case_ii_iii_solutions()) {
            let res = f1234_of(s.a, s.b, s.c, s.d);
            let worst = res.iter().map(|v| v.abs()).fold(0.0, f64::max);
            assert!(worst <= 1e-9, "state {s:?}: residual {worst:.3e}");
        }
    }

    #[test]
    fn dispositions_match_root_structure() {
        for (s, disp) in case_i_analysis().into_iter().chain(case_ii_iii_solutions()) {
            let roots = s.real_roots();
            match disp {
                CaseDisposition::DoubleRootFamily => {
                    assert_eq!(roots.len(), 2); // distinct values t and −1/(3t)
                }
                CaseDisposition::AllRootsPmInvSqrt3 => {
                    assert_eq!(roots.len(), 2);
                    for r in &roots {
                        assert!((r.abs() - INV_SQRT3).abs() < 1e-9);
                    }
                }
                CaseDisposition::HasRootPmInvSqrt3 => {
                    assert!(has_pm_invsqrt3_root(&s, 1e-6), "{s:?} roots {roots:?}");
                }
                CaseDisposition::FourRealRootsFakeSic => {
                    assert_eq!(roots.len(), 4);
                    assert!(!has_pm_invsqrt3_root(&s, 1e-6));
                }
                CaseDisposition::TwoNonRealRoots => {
                    assert_eq!(roots.len(), 2);
                }
            }
        }
    }

    #[test]
    fn double_root_family_at_two() {
        let s = double_root_state(2.0);
        let roots = s.real_roots();
        assert!((roots[0] + 1.0 / 6.0).abs() < 1e-9);
        assert!((roots[1] - 2.0).abs() < 1e-9);
        let res = f1234_of(s.a, s.b, s.c, s.d);
        assert!(res.iter().all(|v| v.abs() < 1e-9));
        // d = 1/9 branch and the b = (27c²−8)/12 relation
        assert!((s.d - 1.0 / 9.0).abs() < 1e-12);
        assert!((s.b - (27.0 * s.c * s.c - 8.0) / 12.0).abs() < 1e-10);
        assert!((s.a + 3.0 * s.c).abs() < 1e-10);
    }

    #[test]
    fn paper_display_for_second_case_iii_slice_is_not_a_solution() {
        // (±8/√3, 0, 0, −1) satisfies 3 + b + 3d = 0 but not the system;
        // the actual solutions on that slice are (±10/√3, 0, ∓2√3, −1).
        let bad = SymmetricState::new(8.0 / 3.0f64.sqrt(), 0.0, 0.0, -1.0);
        let res = f1234_of(bad.a, bad.b, bad.c, bad.d);
        assert!(res.iter().map(|v| v.abs()).fold(0.0, f64::max) > 1.0);
    }

    #[test]
    fn vieta_quartic_consistency() {
        let s = SymmetricState::from_roots([2.0, 2.0, -1.0 / 6.0, -1.0 / 6.0]);
        let q = s.quartic();
        for r in [2.0, -1.0 / 6.0] {
            assert!(q.eval(r).abs() < 1e-12);
        }
    }
}
