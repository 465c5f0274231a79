//! Sparse multivariate polynomials over exact rationals.
//!
//! Terms are kept in a BTreeMap from exponent vectors to nonzero
//! BigRational coefficients; the map's lexicographic order on exponent
//! vectors (first variable most significant) doubles as the monomial
//! order. Everything is exact; doubles only appear in `eval_f64`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl MultiPoly {
    pub fn zero(vars: &[&str]) -> Self {
        MultiPoly { vars: vars.iter().map(|s| s.to_string()).collect(), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &[&str], c: Rat) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; p.vars.len()], c);
        }
        p
    }

    pub fn one(vars: &[&str]) -> Self {
        Self::constant(vars, Rat::one())
    }

    pub fn var(vars: &[&str], name: &str) -> Result<Self> {
        let mut p = Self::zero(vars);
        let idx = p.var_index(name)?;
        let mut e = vec![0; p.vars.len()];
        e[idx] = 1;
        p.terms.insert(e, Rat::one());
        Ok(p)
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Result<usize> {
        self.vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVariable(name.into()))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rat)> {
        self.terms.iter()
    }

    pub fn insert_term(&mut self, exps: Vec<u32>, c: Rat) {
        assert_eq!(exps.len(), self.vars.len());
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_same_vars(&self, other: &Self) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::VariableMismatch(self.vars.join(","), other.vars.join(",")));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            let entry = out.terms.entry(e.clone()).or_insert_with(Rat::zero);
            *entry += c;
        }
        out.terms.retain(|_, c| !c.is_zero());
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect(),
        }
    }

    pub fn scale(&self, s: &Rat) -> Self {
        if s.is_zero() {
            return Self { vars: self.vars.clone(), terms: BTreeMap::new() };
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * s)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same_vars(other)?;
        let mut terms: BTreeMap<Vec<u32>, Rat> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                let entry = terms.entry(e).or_insert_with(Rat::zero);
                *entry += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(MultiPoly { vars: self.vars.clone(), terms })
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(&self.vars.iter().map(|s| s.as_str()).collect::<Vec<_>>());
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                out = out.mul(&base).unwrap();
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base).unwrap();
            }
        }
        out
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, point: &[Rat]) -> Result<Rat> {
        if point.len() != self.vars.len() {
            return Err(Error::VariableMismatch(
                self.vars.join(","),
                format!("{} values", point.len()),
            ));
        }
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (i, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    term *= &point[i];
                }
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Approximate evaluation in doubles.
    pub fn eval_f64(&self, point: &[f64]) -> f64 {
        assert_eq!(point.len(), self.vars.len());
        let mut acc = 0.0;
        for (e, c) in &self.terms {
            let mut term = c.to_f64().unwrap_or(f64::NAN);
            for (i, &k) in e.iter().enumerate() {
                term *= point[i].powi(k as i32);
            }
            acc += term;
        }
        acc
    }

    /// ∂/∂var.
    pub fn derivative(&self, name: &str) -> Result<Self> {
        let idx = self.var_index(name)?;
        let mut out = Self { vars: self.vars.clone(), terms: BTreeMap::new() };
        for (e, c) in &self.terms {
            if e[idx] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[idx] -= 1;
            out.terms.insert(e2, c * rat(e[idx] as i64));
        }
        Ok(out)
    }

    /// Simultaneous variable permutation: the variable in slot i moves to
    /// slot perm[i].
    pub fn permute(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.vars.len());
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut e2 = vec![0u32; e.len()];
            for (i, &p) in perm.iter().enumerate() {
                e2[p] = e[i];
            }
            terms.insert(e2, c.clone());
        }
        MultiPoly { vars: self.vars.clone(), terms }
    }

    /// Move all powers of `from` onto `to` (the one-slot substitution
    /// u → v used by divided differences).
    pub fn rename_var(&self, from: &str, to: &str) -> Result<Self> {
        let fi = self.var_index(from)?;
        let ti = self.var_index(to)?;
        let mut terms: BTreeMap<Vec<u32>, Rat> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            e2[ti] += e2[fi];
            e2[fi] = 0;
            let entry = terms.entry(e2).or_insert_with(Rat::zero);
            *entry += c;
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(MultiPoly { vars: self.vars.clone(), terms })
    }

    /// Evaluate `self` as a polynomial in the given images, one per
    /// variable, all over a common variable list.
    pub fn compose(&self, images: &[MultiPoly]) -> Result<MultiPoly> {
        if images.len() != self.vars.len() {
            return Err(Error::VariableMismatch(
                self.vars.join(","),
                format!("{} images", images.len()),
            ));
        }
        for im in images.iter().skip(1) {
            images[0].check_same_vars(im)?;
        }
        let new_vars: Vec<&str> = images[0].vars.iter().map(|s| s.as_str()).collect();
        let mut cache: HashMap<(usize, u32), MultiPoly> = HashMap::new();
        let mut acc = MultiPoly::zero(&new_vars);
        for (e, c) in &self.terms {
            let mut term = MultiPoly::constant(&new_vars, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let p = cache
                    .entry((i, k))
                    .or_insert_with(|| images[i].pow(k))
                    .clone();
                term = term.mul(&p)?;
            }
            acc = acc.add(&term)?;
        }
        Ok(acc)
    }

    /// Substitute one variable by a polynomial (over the same variable
    /// list); all other variables map to themselves.
    pub fn substitute(&self, name: &str, image: &MultiPoly) -> Result<MultiPoly> {
        let idx = self.var_index(name)?;
        let target_vars: Vec<&str> = image.vars.iter().map(|s| s.as_str()).collect();
        let mut images = Vec::with_capacity(self.vars.len());
        for (i, v) in self.vars.iter().enumerate() {
            if i == idx {
                images.push(image.clone());
            } else {
                images.push(MultiPoly::var(&target_vars, v)?);
            }
        }
        self.compose(&images)
    }

    /// Leading term in the lexicographic order (first variable most
    /// significant).
    pub fn leading_term(&self) -> Option<(&Vec<u32>, &Rat)> {
        self.terms.iter().next_back()
    }

    pub fn deg_in(&self, name: &str) -> Result<u32> {
        let idx = self.var_index(name)?;
        Ok(self.terms.keys().map(|e| e[idx]).max().unwrap_or(0))
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    /// Coefficient of var^k, as a polynomial over the same variable list.
    pub fn coeff_of(&self, name: &str, k: u32) -> Result<Self> {
        let idx = self.var_index(name)?;
        let mut out = Self { vars: self.vars.clone(), terms: BTreeMap::new() };
        for (e, c) in &self.terms {
            if e[idx] == k {
                let mut e2 = e.clone();
                e2[idx] = 0;
                out.terms.insert(e2, c.clone());
            }
        }
        Ok(out)
    }

    /// Exact multivariate division; errors if the division leaves a
    /// remainder.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        self.check_same_vars(divisor)?;
        let (dlt, dlc) = divisor
            .leading_term()
            .map(|(e, c)| (e.clone(), c.clone()))
            .ok_or(Error::NonExactDivision(0))?;
        let mut rem = self.clone();
        let mut quot = Self { vars: self.vars.clone(), terms: BTreeMap::new() };
        while let Some((rlt, rlc)) = rem.leading_term().map(|(e, c)| (e.clone(), c.clone())) {
            if !rlt.iter().zip(&dlt).all(|(a, b)| a >= b) {
                return Err(Error::NonExactDivision(rem.num_terms()));
            }
            let qe: Vec<u32> = rlt.iter().zip(&dlt).map(|(a, b)| a - b).collect();
            let qc = &rlc / &dlc;
            let mut mono = Self { vars: self.vars.clone(), terms: BTreeMap::new() };
            mono.terms.insert(qe, qc);
            rem = rem.sub(&mono.mul(divisor)?)?;
            for (e, c) in mono.terms {
                let entry = quot.terms.entry(e).or_insert_with(Rat::zero);
                *entry += c;
            }
        }
        quot.terms.retain(|_, c| !c.is_zero());
        Ok(quot)
    }

    /// Divided difference (f − f[u→v]) / (u − v); exact by construction.
    pub fn divided_difference(&self, u: &str, v: &str) -> Result<Self> {
        let swapped = self.rename_var(u, v)?;
        let num = self.sub(&swapped)?;
        let vars: Vec<&str> = self.vars.iter().map(|s| s.as_str()).collect();
        let denom = Self::var(&vars, u)?.sub(&Self::var(&vars, v)?)?;
        num.exact_div(&denom)
    }

    /// Pseudo-remainder of `self` by `divisor` with respect to `var`:
    /// repeatedly form lc(divisor)·f − lc(f)·var^δ·divisor until the
    /// degree drops below deg(divisor). The result lies in the ideal
    /// generated by self and divisor (up to lc(divisor) powers).
    pub fn pseudo_rem(&self, divisor: &Self, var: &str) -> Result<Self> {
        self.check_same_vars(divisor)?;
        let dd = divisor.deg_in(var)?;
        if dd == 0 {
            return Err(Error::ResultantDegree(var.into(), 0));
        }
        let dlc = divisor.coeff_of(var, dd)?;
        let vars: Vec<&str> = self.vars.iter().map(|s| s.as_str()).collect();
        let x = Self::var(&vars, var)?;
        let mut f = self.clone();
        while f.deg_in(var)? >= dd && !f.is_zero() {
            let fd = f.deg_in(var)?;
            let flc = f.coeff_of(var, fd)?;
            let shift = x.pow(fd - dd);
            f = f.mul(&dlc)?.sub(&flc.mul(&shift)?.mul(divisor)?)?;
        }
        Ok(f)
    }

    /// Express a symmetric polynomial in the elementary symmetric
    /// polynomials of its variables, by lex leading-term subtraction.
    ///
    /// `target` names the output variables e₁,…,e_k. Symmetry is checked
    /// first (adjacent transpositions); asymmetric input is an error.
    pub fn symmetric_reduce(&self, target: &[&str]) -> Result<MultiPoly> {
        let k = self.vars.len();
        assert_eq!(target.len(), k, "need one target variable per input variable");
        for i in 0..k - 1 {
            let mut perm: Vec<usize> = (0..k).collect();
            perm.swap(i, i + 1);
            if self.permute(&perm) != *self {
                return Err(Error::NotSymmetric(self.vars[i].clone(), self.vars[i + 1].clone()));
            }
        }
        let vars: Vec<&str> = self.vars.iter().map(|s| s.as_str()).collect();
        let elem: Vec<MultiPoly> = (1..=k).map(|i| elementary_symmetric(&vars, i)).collect();
        let mut pow_cache: HashMap<(usize, u32), MultiPoly> = HashMap::new();
        let mut rem = self.clone();
        let mut out = MultiPoly::zero(target);
        while let Some((lt, lc)) = rem.leading_term().map(|(e, c)| (e.clone(), c.clone())) {
            debug_assert!(
                lt.windows(2).all(|w| w[0] >= w[1]),
                "leading exponent of a symmetric polynomial must be weakly decreasing"
            );
            let mut d = vec![0u32; k];
            for i in 0..k {
                d[i] = if i + 1 < k { lt[i] - lt[i + 1] } else { lt[k - 1] };
            }
            out.insert_term(d.clone(), lc.clone());
            let mut sub = MultiPoly::constant(&vars, lc);
            for (i, &di) in d.iter().enumerate() {
                if di == 0 {
                    continue;
                }
                let p = pow_cache
                    .entry((i, di))
                    .or_insert_with(|| elem[i].pow(di))
                    .clone();
                sub = sub.mul(&p)?;
            }
            rem = rem.sub(&sub)?;
        }
        Ok(out)
    }
}

/// The i-th elementary symmetric polynomial (1-based) in the given
/// variables.
pub fn elementary_symmetric(vars: &[&str], i: usize) -> MultiPoly {
    let k = vars.len();
    assert!(i >= 1 && i <= k);
    let mut out = MultiPoly::zero(vars);
    let mut idx: Vec<usize> = (0..i).collect();
    loop {
        let mut e = vec![0u32; k];
        for &j in &idx {
            e[j] = 1;
        }
        out.insert_term(e, Rat::one());
        // next combination
        let mut pos = i;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if idx[pos] + 1 <= k - (i - pos) {
                idx[pos] += 1;
                for j in pos + 1..i {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut parts: Vec<String> = Vec::new();
            if !mag.is_one() || e.iter().all(|&x| x == 0) {
                if mag.denom().is_one() {
                    parts.push(mag.numer().to_string());
                } else {
                    parts.push(format!("{}/{}", mag.numer(), mag.denom()));
                }
            }
            for (i, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => parts.push(self.vars[i].clone()),
                    _ => parts.push(format!("{}^{}", self.vars[i], k)),
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

/// Parse the textual polynomial format: terms like `27*a^4*b - 3/2*c + 1`
/// joined by `+`/`-`, coefficients integer or `num/den`.
pub fn parse_poly(vars: &[&str], input: &str) -> Result<MultiPoly> {
    let mut out = MultiPoly::zero(vars);
    let s: String = input.split_whitespace().collect::<Vec<_>>().join("");
    if s.is_empty() {
        return Err(Error::Parse(input.into(), "empty input".into()));
    }
    // split into signed terms
    let bytes = s.as_bytes();
    let mut pieces: Vec<(bool, String)> = Vec::new();
    let mut cur = String::new();
    let mut sign = false;
    let mut start = true;
    for &b in bytes {
        let ch = b as char;
        if (ch == '+' || ch == '-') && !start {
            pieces.push((sign, std::mem::take(&mut cur)));
            sign = ch == '-';
        } else if ch == '-' && start {
            sign = true;
        } else if ch == '+' && start {
        } else {
            cur.push(ch);
        }
        start = false;
    }
    pieces.push((sign, cur));
    for (neg, term) in pieces {
        if term.is_empty() {
            return Err(Error::Parse(input.into(), "dangling sign".into()));
        }
        let mut coeff = Rat::one();
        let mut exps = vec![0u32; vars.len()];
        for factor in term.split('*') {
            if factor.is_empty() {
                return Err(Error::Parse(term.clone(), "empty factor".into()));
            }
            if factor.chars().next().unwrap().is_ascii_digit() {
                let (num, den) = match factor.split_once('/') {
                    Some((n, d)) => (n, d),
                    None => (factor, "1"),
                };
                let n: BigInt = num
                    .parse()
                    .map_err(|_| Error::Parse(factor.into(), "bad numerator".into()))?;
                let d: BigInt = den
                    .parse()
                    .map_err(|_| Error::Parse(factor.into(), "bad denominator".into()))?;
                if d.is_zero() {
                    return Err(Error::Parse(factor.into(), "zero denominator".into()));
                }
                coeff *= Rat::new(n, d);
            } else {
                let (name, pow) = match factor.split_once('^') {
                    Some((v, p)) => (
                        v,
                        p.parse::<u32>()
                            .map_err(|_| Error::Parse(factor.into(), "bad exponent".into()))?,
                    ),
                    None => (factor, 1),
                };
                let idx = vars
                    .iter()
                    .position(|v| *v == name)
                    .ok_or_else(|| Error::UnknownVariable(name.into()))?;
                exps[idx] += pow;
            }
        }
        if neg {
            coeff = -coeff;
        }
        out.insert_term(exps, coeff);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(vars: &[&str], s: &str) -> MultiPoly {
        parse_poly(vars, s).unwrap()
    }

    #[test]
    fn square_of_sum() {
        let v = ["x", "y"];
        let f = p(&v, "x + y");
        let sq = f.mul(&f).unwrap();
        assert_eq!(sq, p(&v, "x^2 + 2*x*y + y^2"));
    }

    #[test]
    fn var_mismatch_is_error() {
        let a = MultiPoly::one(&["x"]);
        let b = MultiPoly::one(&["y"]);
        assert!(matches!(a.add(&b), Err(Error::VariableMismatch(_, _))));
    }

    #[test]
    fn substitute_extends_vars() {
        let f = p(&["a"], "a^2");
        let image = p(&["t", "p"], "t + p");
        let g = f.substitute("a", &image).unwrap();
        assert_eq!(g, p(&["t", "p"], "t^2 + 2*t*p + p^2"));
    }

    #[test]
    fn eval_exact_and_f64() {
        let v = ["x", "y"];
        let f = p(&v, "3*x^2*y - 1/2*y + 7");
        // 3·(1/4)·4 − (1/2)·4 + 7 = 8
        let val = f.eval(&[rat_frac(1, 2), rat(4)]).unwrap();
        assert_eq!(val, rat(8));
        let vf = f.eval_f64(&[0.5, 4.0]);
        assert!((vf - 8.0).abs() < 1e-14);
    }

    #[test]
    fn divided_difference_simple() {
        let v = ["y", "z"];
        let f = p(&v, "y^2 - z^2");
        let dd = f.divided_difference("y", "z").unwrap();
        assert_eq!(dd, p(&v, "y + z"));
        let constant = p(&v, "5");
        assert!(constant.divided_difference("y", "z").unwrap().is_zero());
    }

    #[test]
    fn divided_difference_reconstructs() {
        let v = ["u", "v", "w"];
        let f = p(&v, "u^3*w + 2*u*v - u*w^2 + 4");
        let dd = f.divided_difference("u", "v").unwrap();
        let denom = p(&v, "u - v");
        let back = dd.mul(&denom).unwrap();
        let swapped = f.rename_var("u", "v").unwrap();
        assert_eq!(back, f.sub(&swapped).unwrap());
    }

    #[test]
    fn symmetric_reduce_basics() {
        let v = ["x", "y", "z"];
        let f = p(&v, "x^2 + y^2 + z^2");
        let red = f.symmetric_reduce(&["p", "q", "r"]).unwrap();
        assert_eq!(red, p(&["p", "q", "r"], "p^2 - 2*q"));
        let g = p(&v, "x*y*z");
        assert_eq!(g.symmetric_reduce(&["p", "q", "r"]).unwrap(), p(&["p", "q", "r"], "r"));
    }

    #[test]
    fn symmetric_reduce_rejects_asymmetric() {
        let v = ["x", "y"];
        let f = p(&v, "x^2 + y");
        assert!(matches!(f.symmetric_reduce(&["e1", "e2"]), Err(Error::NotSymmetric(_, _))));
    }

    #[test]
    fn symmetric_reduce_roundtrip() {
        // symmetrization of a random monomial, reduced and substituted back
        let v = ["x", "y", "z"];
        let mut f = MultiPoly::zero(&v);
        let perms: [[usize; 3]; 6] =
            [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let base = p(&v, "x^3*y^2*z");
        for perm in perms {
            f = f.add(&base.permute(&perm)).unwrap();
        }
        let red = f.symmetric_reduce(&["e1", "e2", "e3"]).unwrap();
        let images: Vec<MultiPoly> = (1..=3).map(|i| elementary_symmetric(&v, i)).collect();
        assert_eq!(red.compose(&images).unwrap(), f);
    }

    #[test]
    fn exact_div_detects_remainder() {
        let v = ["x"];
        let f = p(&v, "x^2 + 1");
        let d = p(&v, "x - 1");
        assert!(matches!(f.exact_div(&d), Err(Error::NonExactDivision(_))));
        let g = p(&v, "x^2 - 1");
        assert_eq!(g.exact_div(&d).unwrap(), p(&v, "x + 1"));
    }

    #[test]
    fn parse_print_roundtrip() {
        let v = ["a", "b", "c", "d"];
        let f = p(&v, "36 - 66*a^2 + 27*a^4 - 3/2*b*c + c^6*d - d");
        let printed = f.to_string();
        let back = parse_poly(&v, &printed).unwrap();
        assert_eq!(f, back);
    }

    #[test]
    fn parse_rejects_unknown_var() {
        assert!(matches!(parse_poly(&["x"], "x + w"), Err(Error::UnknownVariable(_))));
    }

    #[test]
    fn pseudo_rem_drops_degree() {
        let v = ["p", "r"];
        let f = p(&v, "p^3 + p*r + 1");
        let g = p(&v, "2*p^2 + r");
        let rem = f.pseudo_rem(&g, "p").unwrap();
        assert!(rem.deg_in("p").unwrap() <= 1);
        // rem must vanish on common zeros: check on a resultant-free sample
        // f(p0, r0) = 0, g(p0, r0) = 0 => rem(p0, r0) = 0 by construction
    }
}
