//! The nine-point near-miss: 27 of the 36 pairs correctly separated.
//!
//! The quartic 27x⁴ − 66x² + 8√(26−2√97)·x + 3 (the Vieta polynomial of
//! the state a = 0, b = −22/9, d = 1/9 with c taken with both minus
//! signs) has four real roots. Taking t to be the most negative root and
//! φᵢ = arctan xᵢ, the points [z₁], [z₂], z[0,φ₃] and z[±σᵢ,φᵢ] form a
//! configuration in which exactly 27 pairs sit at distance 2π/3.

use crate::error::{Error, Result};
use crate::poly::unipoly::{real_roots, UniRealPoly};
use crate::projective::Configuration;
use crate::torus::{base_pair, separation_cos, z_of, SeparationCos, TorusCoord};

/// Sign pattern of the six extra separated pairs among z[±σᵢ,φᵢ],
/// i = 4,5,6: for each unordered index pair either the equal-sign
/// combinations separate or the opposite-sign ones do.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairAlignment {
    /// (+,+) and (−,−) separated.
    Aligned,
    /// (+,−) and (−,+) separated.
    AntiAligned,
}

#[derive(Debug, Clone)]
pub struct FakeSic {
    /// points in the order [z₁], [z₂], z[0,φ₃], then (+σ,−σ) per root.
    pub config: Configuration,
    pub quartic_roots: [f64; 4],
    pub sigmas: [f64; 3],
    /// index pairs (into `config`) of the correctly separated pairs.
    pub separated: Vec<(usize, usize)>,
    /// alignment of the extra pairs, indexed by {4,5},{4,6},{5,6}.
    pub alignments: [PairAlignment; 3],
}

/// The quartic 27x⁴ − 66x² + 8√(26−2√97)x + 3, ascending coefficients.
pub fn fake_quartic() -> UniRealPoly {
    let lin = 8.0 * (26.0 - 2.0 * 97.0f64.sqrt()).sqrt();
    UniRealPoly::new(vec![3.0, lin, -66.0, 0.0, 27.0])
}

/// Build the fake SIC configuration and its pair statistics.
pub fn fake_sic() -> Result<FakeSic> {
    let quartic = fake_quartic();
    let roots = real_roots(&quartic, -3.0, 3.0, 1e-13)?;
    if roots.len() != 4 {
        return Err(Error::RootFinding(format!(
            "fake quartic produced {} real roots, expected 4",
            roots.len()
        )));
    }
    let t = roots[0];
    let xs = [roots[1], roots[2], roots[3]];
    let phi3 = t.atan();
    let mut sigmas = [0.0f64; 3];
    for (i, &x) in xs.iter().enumerate() {
        let c = match separation_cos(x, t) {
            SeparationCos::Cos(c) => c,
            SeparationCos::Unconstrained => {
                return Err(Error::RootFinding("unexpected singular separation".into()))
            }
        };
        if c.abs() > 1.0 + 1e-12 {
            return Err(Error::RootFinding(format!("|cos| = {} > 1 for root {x}", c.abs())));
        }
        sigmas[i] = c.clamp(-1.0, 1.0).acos();
    }
    let (z1, z2) = base_pair();
    let mut points = vec![z1, z2, z_of(TorusCoord::new(0.0, phi3))];
    for (i, &x) in xs.iter().enumerate() {
        let phi = x.atan();
        points.push(z_of(TorusCoord::new(sigmas[i], phi)));
        points.push(z_of(TorusCoord::new(-sigmas[i], phi)));
    }
    let config = Configuration::new(points)?;
    let mut separated = Vec::new();
    for i in 0..9 {
        for j in i + 1..9 {
            if (config.gram()[i][j] - 0.25).abs() <= 1e-9 {
                separated.push((i, j));
            }
        }
    }
    // extra pairs live among indices 3..9: (3+2k, 4+2k) are (+σ,−σ) of root k
    let idx = |root: usize, minus: bool| 3 + 2 * root + usize::from(minus);
    let mut alignments = [PairAlignment::Aligned; 3];
    for (slot, (a, b)) in [(0usize, 1usize), (0, 2), (1, 2)].iter().enumerate() {
        let same = separated.contains(&(idx(*a, false), idx(*b, false)));
        let opp = separated.contains(&(idx(*a, false), idx(*b, true)));
        alignments[slot] = match (same, opp) {
            (true, false) => PairAlignment::Aligned,
            (false, true) => PairAlignment::AntiAligned,
            _ => {
                return Err(Error::RootFinding(format!(
                    "unexpected separation pattern for roots {a},{b}"
                )))
            }
        };
    }
    Ok(FakeSic {
        config,
        quartic_roots: [t, xs[0], xs[1], xs[2]],
        sigmas,
        separated,
        alignments,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::projective::{verify_sic, GEOM_TOL};

    #[test]
    fn roots_match_expected_values() {
        let fake = fake_sic().unwrap();
        let expect = [-1.687, -0.109, 0.442, 1.354];
        for (r, e) in fake.quartic_roots.iter().zip(expect) {
            assert!((r - e).abs() < 1e-3, "{r} vs {e}");
        }
    }

    #[test]
    fn vieta_checks() {
        let fake = fake_sic().unwrap();
        let r = fake.quartic_roots;
        let prod: f64 = r.iter().product();
        let pair_sum: f64 = (0..4)
            .flat_map(|i| (i + 1..4).map(move |j| (i, j)))
            .map(|(i, j)| r[i] * r[j])
            .sum();
        assert!((prod - 1.0 / 9.0).abs() < 1e-12);
        assert!((pair_sum + 22.0 / 9.0).abs() < 1e-12);
        let sum: f64 = r.iter().sum();
        assert!(sum.abs() < 1e-12);
    }

    #[test]
    fn twenty_seven_separated_pairs() {
        let fake = fake_sic().unwrap();
        assert_eq!(fake.separated.len(), 27);
        assert_eq!(fake.config.len(), 9);
        let rep = verify_sic(&fake.config, GEOM_TOL).unwrap();
        assert!(!rep.is_sic);
        assert_eq!(rep.pairs_separated, 27);
        assert_eq!(rep.total_pairs, 36);
    }

    #[test]
    fn alignment_pattern() {
        // two of the three index pairs separate with equal signs, one with
        // opposite signs; the same-root pairs (±σᵢ for one i) never separate
        let fake = fake_sic().unwrap();
        let anti = fake
            .alignments
            .iter()
            .filter(|a| **a == PairAlignment::AntiAligned)
            .count();
        assert_eq!(anti, 1);
        for root in 0..3 {
            let plus = 3 + 2 * root;
            assert!(!fake.separated.contains(&(plus, plus + 1)));
        }
    }
}
