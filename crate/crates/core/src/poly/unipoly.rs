//! Univariate real polynomials, Sturm sequences and root isolation.
//!
//! Two coefficient modes back the same algorithms: `UniRealPoly` works in
//! doubles with a relative magnitude floor of 1e-13 to truncate spurious
//! remainder tails, and `RatPoly` works in exact rationals for the
//! critical elimination path where the input coefficients are rational.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::multipoly::{MultiPoly, Rat};

/// Dense real polynomial, coefficients ascending by degree.
#[derive(Debug, Clone, PartialEq)]
pub struct UniRealPoly {
    coeffs: Vec<f64>,
}

impl UniRealPoly {
    pub fn new(mut coeffs: Vec<f64>) -> Self {
        while coeffs.len() > 1 && coeffs.last() == Some(&0.0) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(0.0);
        }
        UniRealPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0.0)
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    pub fn derivative(&self) -> UniRealPoly {
        if self.coeffs.len() <= 1 {
            return UniRealPoly::new(vec![0.0]);
        }
        UniRealPoly::new(
            self.coeffs.iter().enumerate().skip(1).map(|(i, &c)| c * i as f64).collect(),
        )
    }

    fn max_coeff(&self) -> f64 {
        self.coeffs.iter().map(|c| c.abs()).fold(0.0, f64::max)
    }

    /// Remainder of self / other, with tail coefficients below
    /// 1e-13·max|coeff| zeroed out.
    fn rem_floored(&self, other: &UniRealPoly) -> UniRealPoly {
        let d = other.degree();
        if d == 0 {
            return UniRealPoly::new(vec![0.0]);
        }
        if self.degree() < d {
            return self.clone();
        }
        let lead = other.coeffs[d];
        let mut r = self.coeffs.clone();
        for k in (d..r.len()).rev() {
            let f = r[k] / lead;
            if f == 0.0 {
                continue;
            }
            for i in 0..=d {
                r[k - d + i] -= f * other.coeffs[i];
            }
            r[k] = 0.0;
        }
        r.truncate(d);
        let floor = 1e-13 * self.max_coeff().max(other.max_coeff());
        for c in r.iter_mut() {
            if c.abs() <= floor {
                *c = 0.0;
            }
        }
        UniRealPoly::new(r)
    }

    /// Square-free part via gcd with the derivative.
    pub fn square_free(&self) -> UniRealPoly {
        if self.degree() <= 1 {
            return self.clone();
        }
        let mut a = self.clone();
        let mut b = self.derivative();
        // Euclid with normalization
        loop {
            if b.is_zero() || b.degree() == 0 {
                break;
            }
            let r = a.rem_floored(&b);
            a = b;
            b = r;
        }
        let g = if b.is_zero() { a } else { UniRealPoly::new(vec![1.0]) };
        if g.degree() == 0 {
            return self.clone();
        }
        // self / g by synthetic division
        let mut q = vec![0.0; self.degree() - g.degree() + 1];
        let mut r = self.coeffs.clone();
        let gl = *g.coeffs.last().unwrap();
        for k in (0..q.len()).rev() {
            let f = r[k + g.degree()] / gl;
            q[k] = f;
            for i in 0..=g.degree() {
                r[k + i] -= f * g.coeffs[i];
            }
        }
        UniRealPoly::new(q)
    }
}

/// The standard Sturm sequence of a square-free polynomial.
#[derive(Debug, Clone)]
pub struct SturmChain {
    pub polys: Vec<UniRealPoly>,
}

impl SturmChain {
    pub fn new(p: &UniRealPoly) -> Self {
        let mut polys = vec![p.clone(), p.derivative()];
        loop {
            let n = polys.len();
            let r = polys[n - 2].rem_floored(&polys[n - 1]);
            if r.is_zero() {
                break;
            }
            let neg = UniRealPoly::new(r.coeffs.iter().map(|&c| -c).collect());
            let deg = neg.degree();
            polys.push(neg);
            if deg == 0 {
                break;
            }
        }
        SturmChain { polys }
    }

    pub fn sign_variations(&self, x: f64) -> usize {
        let mut count = 0;
        let mut last = 0.0f64;
        for p in &self.polys {
            let v = p.eval(x);
            if v == 0.0 {
                continue;
            }
            if last != 0.0 && v.signum() != last.signum() {
                count += 1;
            }
            last = v;
        }
        count
    }

    /// Distinct real roots in (lo, hi].
    pub fn count_roots(&self, lo: f64, hi: f64) -> usize {
        self.sign_variations(lo).saturating_sub(self.sign_variations(hi))
    }
}

/// Exact count of distinct real roots of p in (lo, hi]; the square-free
/// part is taken first.
pub fn sturm_count(p: &UniRealPoly, lo: f64, hi: f64) -> usize {
    SturmChain::new(&p.square_free()).count_roots(lo, hi)
}

/// All distinct real roots in [lo, hi]: Sturm-guided bisection to width
/// `tol`, then Newton polish; ascending, deduplicated at `tol`.
pub fn real_roots(p: &UniRealPoly, lo: f64, hi: f64, tol: f64) -> Result<Vec<f64>> {
    let sf = p.square_free();
    let chain = SturmChain::new(&sf);
    // nudge endpoints that sit on roots
    let mut lo = lo;
    if sf.eval(lo) == 0.0 {
        lo -= tol.max(1e-12);
    }
    let total = chain.count_roots(lo, hi);
    let mut intervals = vec![(lo, hi, total)];
    let mut isolated: Vec<(f64, f64)> = Vec::new();
    let mut iterations = 0usize;
    let cap = 10_000usize;
    while let Some((a, b, k)) = intervals.pop() {
        if k == 0 {
            continue;
        }
        iterations += 1;
        if iterations > cap {
            let partial = isolated.iter().map(|&(a, b)| 0.5 * (a + b)).collect();
            return Err(Error::IterationCap { partial });
        }
        if k == 1 && (b - a) <= tol {
            isolated.push((a, b));
            continue;
        }
        let mid = 0.5 * (a + b);
        let kl = chain.count_roots(a, mid);
        intervals.push((a, mid, kl));
        intervals.push((mid, b, k - kl));
    }
    let deriv = sf.derivative();
    let mut roots: Vec<f64> = isolated
        .into_iter()
        .map(|(a, b)| {
            let mut x = 0.5 * (a + b);
            for _ in 0..50 {
                let fx = sf.eval(x);
                let dx = deriv.eval(x);
                if dx == 0.0 {
                    break;
                }
                let step = fx / dx;
                x -= step;
                if step.abs() < 1e-16 * x.abs().max(1.0) {
                    break;
                }
            }
            x
        })
        .collect();
    roots.sort_by(|a, b| a.partial_cmp(b).unwrap());
    roots.dedup_by(|a, b| (*a - *b).abs() <= tol);
    Ok(roots)
}

/// Dense univariate polynomial over exact rationals, ascending degree.
#[derive(Debug, Clone, PartialEq)]
pub struct RatPoly {
    coeffs: Vec<Rat>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.len() > 1 && coeffs.last().map(|c| c.is_zero()) == Some(true) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(Rat::zero());
        }
        RatPoly { coeffs }
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: vec![Rat::zero()] }
    }

    /// Extract a univariate polynomial from a MultiPoly that involves only
    /// `var`.
    pub fn from_multipoly(p: &MultiPoly, var: &str) -> Result<Self> {
        let idx = p.var_index(var)?;
        let deg = p.deg_in(var)? as usize;
        let mut coeffs = vec![Rat::zero(); deg + 1];
        for (e, c) in p.terms() {
            for (i, &k) in e.iter().enumerate() {
                if i != idx && k != 0 {
                    return Err(Error::VariableMismatch(
                        var.into(),
                        p.vars()[i].clone(),
                    ));
                }
            }
            coeffs[e[idx] as usize] = c.clone();
        }
        Ok(RatPoly::new(coeffs))
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn sign_at(&self, x: &Rat) -> i8 {
        let v = self.eval(x);
        if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        }
    }

    pub fn derivative(&self) -> RatPoly {
        if self.coeffs.len() <= 1 {
            return RatPoly::zero();
        }
        RatPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rat::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn scale(&self, s: &Rat) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn add(&self, other: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![Rat::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        RatPoly::new(out)
    }

    pub fn sub(&self, other: &RatPoly) -> RatPoly {
        self.add(&other.scale(&-Rat::one()))
    }

    pub fn mul(&self, other: &RatPoly) -> RatPoly {
        if self.is_zero() || other.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::new(out)
    }

    pub fn pow(&self, k: u32) -> RatPoly {
        let mut out = RatPoly::new(vec![Rat::one()]);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Remainder of self / other (field coefficients, exact).
    pub fn rem(&self, other: &RatPoly) -> RatPoly {
        let d = other.degree();
        if d == 0 {
            return RatPoly::zero();
        }
        if self.degree() < d || self.is_zero() {
            return self.clone();
        }
        let lead = other.coeffs[d].clone();
        let mut r = self.coeffs.clone();
        for k in (d..r.len()).rev() {
            if r[k].is_zero() {
                continue;
            }
            let f = &r[k] / &lead;
            for i in 0..=d {
                let s = &other.coeffs[i] * &f;
                r[k - d + i] -= s;
            }
            r[k] = Rat::zero();
        }
        r.truncate(d);
        RatPoly::new(r)
    }

    /// Exact quotient; panics if division is not exact (internal use on
    /// known-divisible pairs).
    pub fn exact_div(&self, other: &RatPoly) -> RatPoly {
        let d = other.degree();
        let lead = other.coeffs[d].clone();
        assert!(self.degree() >= d);
        let mut q = vec![Rat::zero(); self.degree() - d + 1];
        let mut r = self.coeffs.clone();
        for k in (0..q.len()).rev() {
            let f = &r[k + d] / &lead;
            q[k] = f.clone();
            for i in 0..=d {
                let s = &other.coeffs[i] * &f;
                r[k + i] -= s;
            }
        }
        assert!(r.iter().all(|c| c.is_zero()), "non-exact rational division");
        RatPoly::new(q)
    }

    /// Monic gcd via the Euclidean algorithm.
    pub fn gcd(&self, other: &RatPoly) -> RatPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
            // normalize to keep coefficient growth in check
            if !b.is_zero() {
                let lead = b.coeffs.last().unwrap().clone();
                b = b.scale(&lead.recip());
            }
        }
        if !a.is_zero() {
            let lead = a.coeffs.last().unwrap().clone();
            a = a.scale(&lead.recip());
        }
        a
    }

    /// Square-free part self / gcd(self, self').
    pub fn square_free(&self) -> RatPoly {
        if self.degree() <= 1 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == 0 {
            return self.clone();
        }
        self.exact_div(&g)
    }

    /// Primitive integer form: scale so all coefficients are integers with
    /// gcd 1 and positive leading coefficient.
    pub fn primitive(&self) -> RatPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut lcm = BigInt::one();
        for c in &self.coeffs {
            let d = c.denom();
            lcm = &lcm / num_integer_gcd(&lcm, d) * d;
        }
        let ints: Vec<BigInt> =
            self.coeffs.iter().map(|c| (c * Rat::from_integer(lcm.clone())).to_integer()).collect();
        let mut g = BigInt::zero();
        for i in &ints {
            g = num_integer_gcd(&g, i);
        }
        if g.is_zero() {
            g = BigInt::one();
        }
        let mut out: Vec<Rat> =
            ints.into_iter().map(|i| Rat::from_integer(i / &g)).collect();
        if out.last().map(|c| c.is_negative()) == Some(true) {
            for c in out.iter_mut() {
                *c = -c.clone();
            }
        }
        RatPoly::new(out)
    }

    /// A bound B with all real roots in (−B, B].
    pub fn cauchy_bound(&self) -> Rat {
        let lead = self.coeffs.last().unwrap().clone();
        let mut m = Rat::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            let v = (c / &lead).abs();
            if v > m {
                m = v;
            }
        }
        m + Rat::one() + Rat::one()
    }

    /// Exact Sturm chain (input should be square-free).
    pub fn sturm_chain(&self) -> Vec<RatPoly> {
        let mut polys = vec![self.clone(), self.derivative()];
        loop {
            let n = polys.len();
            if polys[n - 1].is_zero() {
                polys.pop();
                break;
            }
            if polys[n - 1].degree() == 0 {
                break;
            }
            let r = polys[n - 2].rem(&polys[n - 1]);
            if r.is_zero() {
                break;
            }
            polys.push(r.scale(&-Rat::one()));
        }
        polys
    }

    /// All real roots isolated into disjoint rational intervals (lo, hi],
    /// each holding exactly one root of the square-free part.
    pub fn isolate_roots(&self) -> Vec<(Rat, Rat)> {
        let sf = crate::poly::ipoly::IPoly::from_rat_coeffs(self.coeffs()).square_free();
        crate::poly::ipoly::isolate_roots_int(&sf)
            .into_iter()
            .map(|(lo, hi)| {
                (crate::poly::ipoly::endpoint_to_rat(&lo), crate::poly::ipoly::endpoint_to_rat(&hi))
            })
            .collect()
    }

    /// f64 value of the single root inside an isolating interval.
    pub fn root_to_f64(&self, lo: &Rat, hi: &Rat) -> f64 {
        let sf = crate::poly::ipoly::IPoly::from_rat_coeffs(self.coeffs()).square_free();
        let lo = (lo.numer().clone(), lo.denom().clone());
        let hi = (hi.numer().clone(), hi.denom().clone());
        crate::poly::ipoly::root_to_f64_int(&sf, &lo, &hi)
    }

    pub fn to_unireal(&self) -> UniRealPoly {
        UniRealPoly::new(self.coeffs.iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect())
    }
}

fn num_integer_gcd(a: &BigInt, b: &BigInt) -> BigInt {
    let mut a = a.abs();
    let mut b = b.abs();
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::multipoly::rat;

    #[test]
    fn sturm_count_examples() {
        let p = UniRealPoly::new(vec![-2.0, 0.0, 1.0]); // x² − 2
        assert_eq!(sturm_count(&p, -2.0, 2.0), 2);
        let q = UniRealPoly::new(vec![0.0, -3.0, 0.0, 1.0]); // x³ − 3x
        assert_eq!(sturm_count(&q, -2.0, 2.0), 3);
        let r = UniRealPoly::new(vec![1.0, 0.0, 1.0]); // x² + 1
        assert_eq!(sturm_count(&r, -10.0, 10.0), 0);
    }

    #[test]
    fn real_roots_sqrt2() {
        let p = UniRealPoly::new(vec![-2.0, 0.0, 1.0]);
        let roots = real_roots(&p, -2.0, 2.0, 1e-12).unwrap();
        assert_eq!(roots.len(), 2);
        assert!((roots[0] + 2.0f64.sqrt()).abs() < 1e-12);
        assert!((roots[1] - 2.0f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn real_roots_with_multiplicity() {
        // (x−1)²(x+1) = x³ − x² − x + 1
        let p = UniRealPoly::new(vec![1.0, -1.0, -1.0, 1.0]);
        let roots = real_roots(&p, -3.0, 3.0, 1e-10).unwrap();
        assert_eq!(roots.len(), 2);
        assert!((roots[0] + 1.0).abs() < 1e-9);
        assert!((roots[1] - 1.0).abs() < 1e-9);
    }

    #[test]
    fn fake_quartic_roots() {
        // 27x⁴ − 66x² + 8√(26−2√97)·x + 3
        let c1 = 8.0 * (26.0 - 2.0 * 97.0f64.sqrt()).sqrt();
        let p = UniRealPoly::new(vec![3.0, c1, -66.0, 0.0, 27.0]);
        let roots = real_roots(&p, -3.0, 3.0, 1e-12).unwrap();
        assert_eq!(roots.len(), 4);
        let expect = [-1.687, -0.109, 0.442, 1.354];
        for (r, e) in roots.iter().zip(expect) {
            assert!((r - e).abs() < 1e-3, "{r} vs {e}");
        }
    }

    #[test]
    fn ratpoly_gcd_and_square_free() {
        // (x−1)²(x+2)
        let a = RatPoly::new(vec![rat(2), rat(-3), rat(0), rat(1)]);
        let sf = a.square_free();
        assert_eq!(sf.degree(), 2);
        assert!(sf.eval(&rat(1)).is_zero());
        assert!(sf.eval(&rat(-2)).is_zero());
    }

    #[test]
    fn ratpoly_isolation() {
        // x³ − 3x: roots −√3, 0, √3
        let p = RatPoly::new(vec![rat(0), rat(-3), rat(0), rat(1)]);
        let ivs = p.isolate_roots();
        assert_eq!(ivs.len(), 3);
        let roots: Vec<f64> = ivs.iter().map(|(a, b)| p.root_to_f64(a, b)).collect();
        assert!((roots[0] + 3.0f64.sqrt()).abs() < 1e-12);
        assert!(roots[1].abs() < 1e-12);
        assert!((roots[2] - 3.0f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn ratpoly_primitive() {
        let p = RatPoly::new(vec![rat_frac_local(1, 2), rat_frac_local(3, 4)]);
        let prim = p.primitive();
        assert_eq!(prim.coeffs(), &[rat(2), rat(3)]);
    }

    fn rat_frac_local(n: i64, d: i64) -> Rat {
        crate::poly::multipoly::rat_frac(n, d)
    }
}
