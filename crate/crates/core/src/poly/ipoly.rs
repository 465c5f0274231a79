//! Integer-coefficient univariate engine behind the exact real-root
//! machinery.
//!
//! All polynomials here are primitive (integer coefficients, content 1).
//! Signs at rational points are decided by integer Horner evaluation of
//! the homogenized value Σ cᵢ·numⁱ·den^{n−i}, which avoids the gcd
//! normalizations that make naive rational arithmetic slow. Sturm-style
//! chains are built with pseudo-remainders scaled by positive constants
//! only, which leaves every sign variation count intact.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::poly::multipoly::Rat;

fn bigint_gcd(a: &BigInt, b: &BigInt) -> BigInt {
    let mut a = a.abs();
    let mut b = b.abs();
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

/// Dense integer polynomial, ascending coefficients, kept primitive.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct IPoly {
    coeffs: Vec<BigInt>,
}

impl IPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.len() > 1 && coeffs.last().map(|c| c.is_zero()) == Some(true) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(BigInt::zero());
        }
        IPoly { coeffs }
    }

    /// From rational coefficients: multiply by the positive lcm of the
    /// denominators and divide by the positive content.
    pub fn from_rat_coeffs(coeffs: &[Rat]) -> Self {
        let mut lcm = BigInt::one();
        for c in coeffs {
            let d = c.denom();
            let g = bigint_gcd(&lcm, d);
            lcm = &lcm / g * d;
        }
        let ints: Vec<BigInt> = coeffs
            .iter()
            .map(|c| (c * Rat::from_integer(lcm.clone())).to_integer())
            .collect();
        IPoly::new(ints).primitive_signed()
    }

    /// Divide by the positive content (sign of every coefficient kept).
    pub fn primitive_signed(mut self) -> Self {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = bigint_gcd(&g, c);
            if g.is_one() {
                return self;
            }
        }
        if g.is_zero() || g.is_one() {
            return self;
        }
        for c in self.coeffs.iter_mut() {
            *c = &*c / &g;
        }
        self
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn derivative(&self) -> IPoly {
        if self.coeffs.len() <= 1 {
            return IPoly::new(vec![BigInt::zero()]);
        }
        IPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Sign of the value at num/den (den > 0), by integer Horner on the
    /// homogenized form.
    pub fn sign_at(&self, num: &BigInt, den: &BigInt) -> i8 {
        debug_assert!(den.is_positive());
        let n = self.degree();
        let mut acc = self.coeffs[n].clone();
        let mut dp = BigInt::one();
        for i in (0..n).rev() {
            dp *= den;
            acc = acc * num + &self.coeffs[i] * &dp;
        }
        match acc.sign() {
            num_bigint::Sign::Plus => 1,
            num_bigint::Sign::Minus => -1,
            num_bigint::Sign::NoSign => 0,
        }
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    /// Pseudo-remainder by repeated leading-term elimination; returns the
    /// remainder together with the parity-corrected overall sign so that
    /// the result is a positive multiple of the rational remainder.
    fn prem_positive(&self, other: &IPoly) -> IPoly {
        let d = other.degree();
        let lc = other.coeffs[d].clone();
        let mut r = self.coeffs.clone();
        let mut flips = 0usize;
        while r.len() - 1 >= d && !r.iter().all(|c| c.is_zero()) {
            let deg_r = r.len() - 1;
            if r[deg_r].is_zero() {
                r.pop();
                continue;
            }
            if deg_r < d {
                break;
            }
            let top = r[deg_r].clone();
            for c in r.iter_mut() {
                *c *= &lc;
            }
            let k = deg_r - d;
            for i in 0..=d {
                r[k + i] -= &top * &other.coeffs[i];
            }
            r.pop();
            if lc.is_negative() {
                flips += 1;
            }
            while r.len() > 1 && r.last().map(|c| c.is_zero()) == Some(true) {
                r.pop();
            }
        }
        let mut out = IPoly::new(r);
        if flips % 2 == 1 {
            for c in out.coeffs.iter_mut() {
                *c = -c.clone();
            }
        }
        out.primitive_signed()
    }

    /// Sturm-style chain: members are positive constant multiples of the
    /// classical Sturm sequence, so variation counts agree.
    pub fn sturm_chain(&self) -> Vec<IPoly> {
        let mut chain = vec![self.clone().primitive_signed()];
        let d = self.derivative().primitive_signed();
        if d.is_zero() {
            return chain;
        }
        chain.push(d);
        loop {
            let n = chain.len();
            if chain[n - 1].degree() == 0 {
                break;
            }
            let mut r = chain[n - 2].prem_positive(&chain[n - 1]);
            if r.is_zero() {
                break;
            }
            for c in r.coeffs.iter_mut() {
                *c = -c.clone();
            }
            chain.push(r);
        }
        chain
    }

    pub fn variations(chain: &[IPoly], num: &BigInt, den: &BigInt) -> usize {
        let mut count = 0;
        let mut last = 0i8;
        for p in chain {
            let s = p.sign_at(num, den);
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Primitive-PRS gcd.
    pub fn gcd(&self, other: &IPoly) -> IPoly {
        let mut a = self.clone().primitive_signed();
        let mut b = other.clone().primitive_signed();
        if a.is_zero() {
            return b;
        }
        while !b.is_zero() {
            if b.degree() == 0 {
                return IPoly::new(vec![BigInt::one()]);
            }
            let r = if a.degree() >= b.degree() {
                a.prem_positive(&b)
            } else {
                std::mem::swap(&mut a, &mut b);
                continue;
            };
            a = b;
            b = r;
        }
        if a.coeffs.last().map(|c| c.is_negative()) == Some(true) {
            for c in a.coeffs.iter_mut() {
                *c = -c.clone();
            }
        }
        a
    }

    /// Exact quotient (panics if not exact; used on known-divisible pairs
    /// up to content, so the division runs over rationals and the result
    /// is re-primitivized).
    pub fn exact_div_up_to_content(&self, other: &IPoly) -> IPoly {
        let d = other.degree();
        let lead = Rat::from_integer(other.coeffs[d].clone());
        assert!(self.degree() >= d);
        let mut q = vec![Rat::zero(); self.degree() - d + 1];
        let mut r: Vec<Rat> =
            self.coeffs.iter().map(|c| Rat::from_integer(c.clone())).collect();
        for k in (0..q.len()).rev() {
            let f = &r[k + d] / &lead;
            q[k] = f.clone();
            for i in 0..=d {
                let s = Rat::from_integer(other.coeffs[i].clone()) * &f;
                r[k + i] -= s;
            }
        }
        assert!(r.iter().all(|c| c.is_zero()), "division not exact");
        IPoly::from_rat_coeffs(&q)
    }

    /// Square-free part.
    pub fn square_free(&self) -> IPoly {
        if self.degree() <= 1 {
            return self.clone().primitive_signed();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == 0 {
            return self.clone().primitive_signed();
        }
        self.exact_div_up_to_content(&g)
    }

    /// A power-of-two bound B with all real roots inside (−B, B).
    pub fn root_bound_pow2(&self) -> BigInt {
        let lead = self.coeffs.last().unwrap().abs();
        let maxc =
            self.coeffs[..self.coeffs.len() - 1].iter().map(|c| c.abs()).max().unwrap_or_default();
        // Cauchy: 1 + max|c_i|/|lead|; round up to a power of two
        let mut b = BigInt::one();
        while &b * &lead < maxc + &lead {
            b <<= 1;
        }
        b << 1
    }
}

/// A rational endpoint num/den with den > 0.
pub(crate) type Endpoint = (BigInt, BigInt);

pub(crate) fn endpoint_to_rat(e: &Endpoint) -> Rat {
    Rat::new(e.0.clone(), e.1.clone())
}

pub(crate) fn midpoint(a: &Endpoint, b: &Endpoint) -> Endpoint {
    // (a0/a1 + b0/b1)/2 = (a0·b1 + b0·a1) / (2·a1·b1)
    ((&a.0 * &b.1) + (&b.0 * &a.1), BigInt::from(2) * &a.1 * &b.1)
}

/// Isolate all real roots of a square-free primitive polynomial into
/// intervals (lo, hi] with off-root endpoints.
pub(crate) fn isolate_roots_int(sf: &IPoly) -> Vec<(Endpoint, Endpoint)> {
    if sf.degree() == 0 {
        return Vec::new();
    }
    let chain = sf.sturm_chain();
    let bound = sf.root_bound_pow2();
    let lo: Endpoint = (-bound.clone(), BigInt::one());
    let hi: Endpoint = (bound, BigInt::one());
    let vlo = IPoly::variations(&chain, &lo.0, &lo.1);
    let vhi = IPoly::variations(&chain, &hi.0, &hi.1);
    let mut out = Vec::new();
    let mut stack = vec![(lo, hi, vlo, vhi)];
    while let Some((a, b, va, vb)) = stack.pop() {
        let k = va.saturating_sub(vb);
        if k == 0 {
            continue;
        }
        if k == 1 {
            out.push((a, b));
            continue;
        }
        let mut mid = midpoint(&a, &b);
        while sf.sign_at(&mid.0, &mid.1) == 0 {
            // nudge the split point off a root
            let quarter = midpoint(&a, &mid);
            mid = midpoint(&quarter, &mid);
        }
        let vm = IPoly::variations(&chain, &mid.0, &mid.1);
        stack.push((a, mid.clone(), va, vm));
        stack.push((mid, b, vm, vb));
    }
    out.sort_by(|x, y| {
        (&x.0 .0 * &y.0 .1).cmp(&(&y.0 .0 * &x.0 .1))
    });
    out
}

/// Shrink an isolating interval until the sign of `w` at the enclosed
/// root of `u` is decided. Returns 0 when w vanishes exactly at the root.
pub(crate) fn sign_at_root_int(
    u: &IPoly,
    w: &IPoly,
    lo: &Endpoint,
    hi: &Endpoint,
) -> i8 {
    if w.is_zero() {
        return 0;
    }
    let g = u.gcd(w);
    if g.degree() >= 1 && g.sign_at(&lo.0, &lo.1) != g.sign_at(&hi.0, &hi.1) {
        return 0;
    }
    let wsf = w.square_free();
    let chain = wsf.sturm_chain();
    let mut lo = lo.clone();
    let mut hi = hi.clone();
    let ulo = u.sign_at(&lo.0, &lo.1);
    for _ in 0..4096 {
        let inside = IPoly::variations(&chain, &lo.0, &lo.1)
            .saturating_sub(IPoly::variations(&chain, &hi.0, &hi.1));
        if inside == 0 {
            return w.sign_at(&hi.0, &hi.1);
        }
        let mid = midpoint(&lo, &hi);
        let sm = u.sign_at(&mid.0, &mid.1);
        if sm == 0 {
            return w.sign_at(&mid.0, &mid.1);
        }
        if sm == ulo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    unreachable!("sign_at_root_int failed to separate roots after 4096 bisections");
}

/// f64 value of the unique root of `u` in the isolating interval.
pub(crate) fn root_to_f64_int(u: &IPoly, lo: &Endpoint, hi: &Endpoint) -> f64 {
    let mut lo = lo.clone();
    let mut hi = hi.clone();
    let slo = u.sign_at(&lo.0, &lo.1);
    // bisect to ~2^-64 relative width
    for _ in 0..128 {
        let wf = endpoint_to_rat(&hi).to_f64().unwrap() - endpoint_to_rat(&lo).to_f64().unwrap();
        let scale = endpoint_to_rat(&hi).to_f64().unwrap().abs().max(1.0);
        if wf.abs() <= 1e-18 * scale {
            break;
        }
        let mid = midpoint(&lo, &hi);
        let sm = u.sign_at(&mid.0, &mid.1);
        if sm == 0 {
            return endpoint_to_rat(&mid).to_f64().unwrap();
        }
        if sm == slo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let mut x = 0.5
        * (endpoint_to_rat(&lo).to_f64().unwrap() + endpoint_to_rat(&hi).to_f64().unwrap());
    let dp = u.derivative();
    for _ in 0..8 {
        let f = u.eval_f64(x);
        let d = dp.eval_f64(x);
        if d == 0.0 {
            break;
        }
        let step = f / d;
        x -= step;
        if step.abs() <= 1e-16 * x.abs().max(1.0) {
            break;
        }
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(v: &[i64]) -> IPoly {
        IPoly::new(v.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn sign_eval() {
        let p = ip(&[-2, 0, 1]); // x² − 2
        assert_eq!(p.sign_at(&BigInt::from(3), &BigInt::from(2)), 1); // 9/4 > 2
        assert_eq!(p.sign_at(&BigInt::from(1), &BigInt::from(1)), -1);
        assert_eq!(p.sign_at(&BigInt::from(0), &BigInt::from(1)), -1);
    }

    #[test]
    fn isolation_cubic() {
        let p = ip(&[0, -3, 0, 1]); // x³ − 3x
        let sf = p.square_free();
        let ivs = isolate_roots_int(&sf);
        assert_eq!(ivs.len(), 3);
        let roots: Vec<f64> =
            ivs.iter().map(|(a, b)| root_to_f64_int(&sf, a, b)).collect();
        assert!((roots[0] + 3.0f64.sqrt()).abs() < 1e-12);
        assert!(roots[1].abs() < 1e-12);
        assert!((roots[2] - 3.0f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn sign_of_second_poly_at_root() {
        // root of u = x² − 2 at +√2; w = x − 1 is positive there,
        // w = x − 3 negative, w = x² − 2 zero
        let u = ip(&[-2, 0, 1]);
        let ivs = isolate_roots_int(&u);
        let (lo, hi) = ivs.last().unwrap();
        assert_eq!(sign_at_root_int(&u, &ip(&[-1, 1]), lo, hi), 1);
        assert_eq!(sign_at_root_int(&u, &ip(&[-3, 1]), lo, hi), -1);
        assert_eq!(sign_at_root_int(&u, &ip(&[-2, 0, 1]), lo, hi), 0);
    }

    #[test]
    fn chain_counts_with_multiplicity_collapsed() {
        // (x−1)²(x+1): square-free part has 2 roots
        let p = ip(&[1, -1, -1, 1]);
        let sf = p.square_free();
        assert_eq!(sf.degree(), 2);
        assert_eq!(isolate_roots_int(&sf).len(), 2);
    }
}
