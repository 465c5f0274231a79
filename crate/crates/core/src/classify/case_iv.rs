//! The per-t Case (iv) solver: elimination down to a degree-6 univariate,
//! exact real-root counting, and numeric solution extraction.
//!
//! On the slice 19 + 9b + 27d = 0 the symmetric system reduces, after
//! writing a = t+p, b = tp+q, c = tq+r, d = tr and eliminating q
//! linearly, to two polynomials in (p, r): one quadratic and one sextic
//! in p. Their resultant in p is a degree-6 polynomial in r (six
//! solutions over ℂ counting multiplicity). The pseudo-remainder of the
//! sextic by the quadratic is linear in p, so p and q are exact rational
//! functions of r; realness of the recovered cubic is decided by the
//! sign of its discriminant, evaluated exactly at each isolated root.

use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::multipoly::{rat, MultiPoly, Rat};
use crate::poly::resultant::resultant;
use crate::poly::unipoly::{RatPoly, UniRealPoly};

use super::tables;

const PR: [&str; 2] = ["p", "r"];
const PQR: [&str; 3] = ["p", "q", "r"];

/// Reject the singular parameters t = 0 and |t| = 1/√3 (at 1e-9).
pub fn check_t(t: &Rat) -> Result<()> {
    if t.is_zero() {
        return Err(Error::ExcludedT(0.0));
    }
    let tf = t.to_f64().unwrap();
    if (tf.abs() - 1.0 / 3.0f64.sqrt()).abs() <= 1e-9 {
        return Err(Error::ExcludedT(tf));
    }
    Ok(())
}

struct CaseIvSystem {
    t: Rat,
    /// 16 + 9a² + 27ac − 144d on the slice, in (p, r); quadratic in p.
    e2: MultiPoly,
    /// the sextic relation on the slice, degree 6 in p.
    e3: MultiPoly,
    /// pseudo-remainder of e3 by e2: α(r)·p + β(r).
    alpha: RatPoly,
    /// p = p_num/α (p_num = −β).
    p_num: RatPoly,
    /// q = q_num/(9α).
    q_num: RatPoly,
}

fn build_system(t: &Rat) -> Result<CaseIvSystem> {
    let p = MultiPoly::var(&PR, "p")?;
    let r = MultiPoly::var(&PR, "r")?;
    let tr = |k: i64| Rat::from_integer(BigInt::from(k)) * t;
    // q = −(19 + 9tp + 27tr)/9
    let qpoly = MultiPoly::constant(&PR, rat_div(rat(-19), rat(9)))
        .add(&p.scale(&-t.clone()))?
        .add(&r.scale(&(-tr(3))))?;
    let apoly = p.add(&MultiPoly::constant(&PR, t.clone()))?;
    let cpoly = qpoly.scale(t).add(&r)?;
    let dpoly = r.scale(t);
    let e2 = tables::case_iv_quadric().compose(&[apoly.clone(), cpoly.clone(), dpoly])?;
    let e3 = tables::case_iv_sextic().compose(&[apoly, cpoly])?;
    let rho = e3.pseudo_rem(&e2, "p")?;
    if rho.deg_in("p")? > 1 {
        return Err(Error::RootFinding("pseudo-remainder not linear in p".into()));
    }
    let alpha = RatPoly::from_multipoly(&rho.coeff_of("p", 1)?, "r")?;
    let beta = RatPoly::from_multipoly(&rho.coeff_of("p", 0)?, "r")?;
    let p_num = beta.scale(&-Rat::one());
    // q_num = −19α − 9t·p_num − 27t·r·α
    let r_shift = RatPoly::new(vec![Rat::zero(), Rat::one()]);
    let q_num = alpha
        .scale(&rat(-19))
        .sub(&p_num.scale(&tr(9)))
        .sub(&alpha.mul(&r_shift).scale(&tr(27)));
    Ok(CaseIvSystem { t: t.clone(), e2, e3, alpha, p_num, q_num })
}

fn rat_div(a: Rat, b: Rat) -> Rat {
    a / b
}

fn univariate_from(sys: &CaseIvSystem) -> Result<RatPoly> {
    let res = resultant(&sys.e2, &sys.e3, "p")?;
    let raw = RatPoly::from_multipoly(&res, "r")?;
    if raw.is_zero() {
        return Err(Error::UnexpectedDegree { degree: 0, raw: ratpoly_text(&raw) });
    }
    let clean = raw.primitive().square_free().primitive();
    if clean.degree() != 6 {
        return Err(Error::UnexpectedDegree { degree: clean.degree(), raw: ratpoly_text(&raw) });
    }
    Ok(clean)
}

fn ratpoly_text(p: &RatPoly) -> String {
    let parts: Vec<String> =
        p.coeffs().iter().enumerate().map(|(i, c)| format!("{c}*r^{i}")).collect();
    parts.join(" + ")
}

/// The eliminant in r for a rational t: degree 6 after content and
/// repeated-factor removal.
pub fn case_iv_univariate_exact(t: &Rat) -> Result<RatPoly> {
    check_t(t)?;
    univariate_from(&build_system(t)?)
}

/// Same eliminant with coefficients rounded to doubles.
pub fn case_iv_univariate(t: &Rat) -> Result<UniRealPoly> {
    Ok(case_iv_univariate_exact(t)?.to_unireal())
}

/// Discriminant of x³ − p·x² + q·x − r as a polynomial in (p,q,r):
/// 18pqr − 4p³r + p²q² − 4q³ − 27r².
fn disc_pqr() -> &'static MultiPoly {
    static CELL: OnceLock<MultiPoly> = OnceLock::new();
    CELL.get_or_init(|| {
        crate::poly::multipoly::parse_poly(
            &PQR,
            "18*p*q*r - 4*p^3*r + p^2*q^2 - 4*q^3 - 27*r^2",
        )
        .unwrap()
    })
}

/// G on the slice, as a polynomial in (p, q, r).
fn g_pqr(t: &Rat) -> Result<MultiPoly> {
    let p = MultiPoly::var(&PQR, "p")?;
    let q = MultiPoly::var(&PQR, "q")?;
    let r = MultiPoly::var(&PQR, "r")?;
    let apoly = p.add(&MultiPoly::constant(&PQR, t.clone()))?;
    let bpoly = p.scale(t).add(&q)?;
    let cpoly = q.scale(t).add(&r)?;
    let dpoly = r.scale(t);
    tables::g_poly().compose(&[apoly, bpoly, cpoly, dpoly])
}

/// Substitute p = pn/α, q = qn/(9α) into a polynomial in (p,q,r) and
/// clear denominators. The clearing factor is α^(I+J)·9^J with
/// I = deg_p, J = deg_q; I+J must be even so the sign at a root of the
/// eliminant is preserved.
fn clear_denominators(
    f: &MultiPoly,
    pn: &RatPoly,
    qn: &RatPoly,
    alpha: &RatPoly,
) -> Result<RatPoly> {
    let deg_p = f.deg_in("p")?;
    let deg_q = f.deg_in("q")?;
    assert!((deg_p + deg_q) % 2 == 0, "clearing factor must be an even power of alpha");
    let nine_alpha = alpha.scale(&rat(9));
    let mut acc = RatPoly::zero();
    for (e, c) in f.terms() {
        let (i, j, k) = (e[0], e[1], e[2]);
        let mut term = RatPoly::new(vec![c.clone()]);
        term = term.mul(&pn.pow(i)).mul(&alpha.pow(deg_p - i));
        term = term.mul(&qn.pow(j)).mul(&nine_alpha.pow(deg_q - j));
        let mut shifted = vec![Rat::zero(); k as usize];
        shifted.extend_from_slice(term.coeffs());
        acc = acc.add(&RatPoly::new(shifted));
    }
    Ok(acc)
}

fn variations(chain: &[RatPoly], x: &Rat) -> usize {
    let mut count = 0;
    let mut last = 0i8;
    for p in chain {
        let s = p.sign_at(x);
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

/// Sign of w at the unique root of u inside (lo, hi]; u square-free with
/// off-root endpoints. Returns 0 when w vanishes at the root exactly.
fn sign_at_root(u: &RatPoly, w: &RatPoly, lo: &Rat, hi: &Rat) -> i8 {
    if w.is_zero() {
        return 0;
    }
    let g = u.gcd(w);
    if g.degree() >= 1 && g.sign_at(lo) != g.sign_at(hi) {
        return 0;
    }
    let chain = w.square_free().sturm_chain();
    let mut lo = lo.clone();
    let mut hi = hi.clone();
    let ulo = u.sign_at(&lo);
    for _ in 0..4096 {
        let inside = variations(&chain, &lo).saturating_sub(variations(&chain, &hi));
        if inside == 0 {
            return w.sign_at(&hi);
        }
        let mid = (&lo + &hi) / Rat::from_integer(BigInt::from(2));
        let sm = u.sign_at(&mid);
        if sm == 0 {
            return w.sign_at(&mid);
        }
        if sm == ulo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    unreachable!("sign_at_root failed to separate roots after 4096 bisections");
}

/// Number of real solutions (x,y,z) of the Case (iv) system at a rational
/// t, excluding solutions with G = 0; decided exactly.
pub fn case_iv_count(t: &Rat) -> Result<usize> {
    check_t(t)?;
    let sys = build_system(t)?;
    let u = univariate_from(&sys)?;
    let n_disc = clear_denominators(disc_pqr(), &sys.p_num, &sys.q_num, &sys.alpha)?;
    let n_g = clear_denominators(&g_pqr(t)?, &sys.p_num, &sys.q_num, &sys.alpha)?;
    let mut count = 0;
    for (lo, hi) in u.isolate_roots() {
        if sign_at_root(&u, &sys.alpha, &lo, &hi) == 0 {
            if fallback_real_branch(&sys, &u, &lo, &hi).is_some() {
                count += 1;
            }
            continue;
        }
        if sign_at_root(&u, &n_g, &lo, &hi) == 0 {
            continue;
        }
        if sign_at_root(&u, &n_disc, &lo, &hi) >= 0 {
            count += 1;
        }
    }
    Ok(count)
}

/// Numeric branch selection for the exceptional case α(r*) = 0: solve the
/// quadratic in p directly and keep a real p consistent with the sextic.
fn fallback_real_branch(
    sys: &CaseIvSystem,
    u: &RatPoly,
    lo: &Rat,
    hi: &Rat,
) -> Option<(f64, f64, f64)> {
    let rv = u.root_to_f64(lo, hi);
    let coeff = |k: u32| {
        let c = sys.e2.coeff_of("p", k).ok()?;
        Some(RatPoly::from_multipoly(&c, "r").ok()?.eval_f64(rv))
    };
    let (c2, c1, c0) = (coeff(2)?, coeff(1)?, coeff(0)?);
    let mut candidates = Vec::new();
    if c2.abs() > 1e-300 {
        let disc = c1 * c1 - 4.0 * c2 * c0;
        if disc >= 0.0 {
            let s = disc.sqrt();
            candidates.push((-c1 + s) / (2.0 * c2));
            candidates.push((-c1 - s) / (2.0 * c2));
        }
    } else if c1.abs() > 1e-300 {
        candidates.push(-c0 / c1);
    }
    let scale: f64 = sys
        .e3
        .terms()
        .map(|(_, c)| c.to_f64().unwrap_or(0.0).abs())
        .fold(1.0, f64::max);
    let tf = sys.t.to_f64().unwrap();
    for pv in candidates {
        let resid = sys.e3.eval_f64(&[pv, rv]);
        if resid.abs() > 1e-4 * scale * pv.abs().max(1.0).powi(6) {
            continue;
        }
        let qv = -(19.0 + 9.0 * tf * pv + 27.0 * tf * rv) / 9.0;
        let disc =
            18.0 * pv * qv * rv - 4.0 * pv.powi(3) * rv + pv * pv * qv * qv - 4.0 * qv.powi(3)
                - 27.0 * rv * rv;
        if disc >= -1e-12 {
            return Some((pv, qv, rv));
        }
    }
    None
}

/// One real solution of the Case (iv) system at a fixed t.
#[derive(Debug, Clone)]
pub struct CaseIVSolution {
    pub t: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
    /// max |Fᵢ| over i = 1..4, evaluated exactly at the refined point.
    pub residual: f64,
}

impl CaseIVSolution {
    pub fn triple(&self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }
}

fn partials() -> &'static Vec<[MultiPoly; 4]> {
    static CELL: OnceLock<Vec<[MultiPoly; 4]>> = OnceLock::new();
    CELL.get_or_init(|| {
        [tables::f1(), tables::f2(), tables::f3(), tables::f4()]
            .iter()
            .map(|f| {
                [
                    f.derivative("a").unwrap(),
                    f.derivative("b").unwrap(),
                    f.derivative("c").unwrap(),
                    f.derivative("d").unwrap(),
                ]
            })
            .collect()
    })
}

fn round_bits(x: &Rat, bits: u32) -> Rat {
    let scale = Rat::from_integer(BigInt::one() << bits);
    Rat::new((x * &scale).round().to_integer(), scale.to_integer())
}

fn elementary4(t: &Rat, p: &[Rat; 3]) -> [Rat; 4] {
    let (x, y, z) = (&p[0], &p[1], &p[2]);
    let a = t + x + y + z;
    let b = t * x + t * y + t * z + x * y + y * z + z * x;
    let c = x * y * z + t * (x * y + y * z + z * x);
    let d = t * (x * y * z);
    [a, b, c, d]
}

/// Gauss-Newton refinement of a triple against F₁,…,F₄ with residuals
/// evaluated exactly at a high-precision rational iterate. Returns the
/// refined point and max |Fᵢ|.
pub fn polish_triple(t: &Rat, start: [f64; 3]) -> ([Rat; 3], f64) {
    let tf = t.to_f64().unwrap();
    let fs = [tables::f1(), tables::f2(), tables::f3(), tables::f4()];
    let dfs = partials();
    let mut point: [Rat; 3] = [
        Rat::from_float(start[0]).unwrap(),
        Rat::from_float(start[1]).unwrap(),
        Rat::from_float(start[2]).unwrap(),
    ];
    let mut best = point.clone();
    let mut best_res = f64::INFINITY;
    for _ in 0..30 {
        let abcd = elementary4(t, &point);
        let res: Vec<f64> =
            fs.iter().map(|f| f.eval(&abcd.to_vec()).unwrap().to_f64().unwrap()).collect();
        let maxres = res.iter().map(|v| v.abs()).fold(0.0, f64::max);
        if maxres < best_res {
            best_res = maxres;
            best = point.clone();
        }
        if maxres <= 1e-13 {
            break;
        }
        let xf: Vec<f64> = point.iter().map(|v| v.to_f64().unwrap()).collect();
        let abcd_f: Vec<f64> = abcd.iter().map(|v| v.to_f64().unwrap()).collect();
        // chain rule through the elementary symmetric values
        let ds_dx = |j: usize| {
            let (x, y, z) = (xf[0], xf[1], xf[2]);
            let others = match j {
                0 => (y, z),
                1 => (x, z),
                _ => (x, y),
            };
            [
                1.0,
                tf + others.0 + others.1,
                tf * (others.0 + others.1) + others.0 * others.1,
                tf * others.0 * others.1,
            ]
        };
        let mut jac = [[0.0f64; 3]; 4];
        for (i, df) in dfs.iter().enumerate() {
            let grads: Vec<f64> = df.iter().map(|d| d.eval_f64(&abcd_f)).collect();
            for j in 0..3 {
                let chain = ds_dx(j);
                jac[i][j] = (0..4).map(|s| grads[s] * chain[s]).sum();
            }
        }
        // normal equations
        let mut ata = [[0.0f64; 3]; 3];
        let mut atb = [0.0f64; 3];
        for i in 0..4 {
            for a in 0..3 {
                for b in 0..3 {
                    ata[a][b] += jac[i][a] * jac[i][b];
                }
                atb[a] += jac[i][a] * res[i];
            }
        }
        let delta = match solve3(ata, atb) {
            Some(d) => d,
            None => break,
        };
        if !delta.iter().all(|d| d.is_finite()) {
            break;
        }
        for j in 0..3 {
            if let Some(dr) = Rat::from_float(delta[j]) {
                point[j] = round_bits(&(&point[j] - dr), 256);
            }
        }
    }
    (best, best_res)
}

fn solve3(mut a: [[f64; 3]; 3], mut b: [f64; 3]) -> Option<[f64; 3]> {
    for col in 0..3 {
        let piv = (col..3).max_by(|&i, &j| a[i][col].abs().partial_cmp(&a[j][col].abs()).unwrap())?;
        if a[piv][col].abs() < 1e-300 {
            return None;
        }
        a.swap(col, piv);
        b.swap(col, piv);
        for i in col + 1..3 {
            let f = a[i][col] / a[col][col];
            for j in col..3 {
                a[i][j] -= f * a[col][j];
            }
            b[i] -= f * b[col];
        }
    }
    let mut x = [0.0; 3];
    for i in (0..3).rev() {
        let mut acc = b[i];
        for j in i + 1..3 {
            acc -= a[i][j] * x[j];
        }
        x[i] = acc / a[i][i];
    }
    Some(x)
}

/// Real roots of the monic cubic x³ + a2·x² + a1·x + a0.
pub fn cubic_roots_real(a2: f64, a1: f64, a0: f64) -> Vec<f64> {
    let p = a1 - a2 * a2 / 3.0;
    let q = 2.0 * a2.powi(3) / 27.0 - a2 * a1 / 3.0 + a0;
    let shift = -a2 / 3.0;
    let disc = -4.0 * p * p * p - 27.0 * q * q;
    let mut roots = if disc >= 0.0 {
        if p.abs() < 1e-300 {
            vec![shift; 3]
        } else {
            // three real roots, trigonometric form
            let m = 2.0 * (-p / 3.0).sqrt();
            let arg = (3.0 * q / (p * m)).clamp(-1.0, 1.0);
            let theta = arg.acos() / 3.0;
            (0..3)
                .map(|k| m * (theta - 2.0 * std::f64::consts::PI * k as f64 / 3.0).cos() + shift)
                .collect()
        }
    } else {
        let half_q = -q / 2.0;
        let s = (q * q / 4.0 + p * p * p / 27.0).sqrt();
        let u = (half_q + s).cbrt();
        let v = if u.abs() > 1e-300 { -p / (3.0 * u) } else { (half_q - s).cbrt() };
        vec![u + v + shift]
    };
    // Newton polish
    for r in roots.iter_mut() {
        for _ in 0..4 {
            let f = ((*r + a2) * *r + a1) * *r + a0;
            let d = (3.0 * *r + 2.0 * a2) * *r + a1;
            if d.abs() < 1e-300 {
                break;
            }
            *r -= f / d;
        }
    }
    roots.sort_by(|a, b| a.partial_cmp(b).unwrap());
    roots
}

const INV_SQRT3: f64 = 0.5773502691896258;

/// All real Case (iv) solutions at a rational t, Newton-polished against
/// F₁–F₄, deduplicated, and filtered by G ≠ 0.
pub fn case_iv_solutions(t: &Rat) -> Result<Vec<CaseIVSolution>> {
    check_t(t)?;
    let sys = build_system(t)?;
    let u = univariate_from(&sys)?;
    let n_disc = clear_denominators(disc_pqr(), &sys.p_num, &sys.q_num, &sys.alpha)?;
    let n_g = clear_denominators(&g_pqr(t)?, &sys.p_num, &sys.q_num, &sys.alpha)?;
    let tf = t.to_f64().unwrap();
    let mut out: Vec<CaseIVSolution> = Vec::new();
    for (lo, hi) in u.isolate_roots() {
        let pqr = if sign_at_root(&u, &sys.alpha, &lo, &hi) == 0 {
            fallback_real_branch(&sys, &u, &lo, &hi)
        } else {
            if sign_at_root(&u, &n_g, &lo, &hi) == 0 {
                continue;
            }
            if sign_at_root(&u, &n_disc, &lo, &hi) < 0 {
                continue;
            }
            let rv = u.root_to_f64(&lo, &hi);
            let av = sys.alpha.eval_f64(rv);
            let pv = sys.p_num.eval_f64(rv) / av;
            let qv = sys.q_num.eval_f64(rv) / (9.0 * av);
            Some((pv, qv, rv))
        };
        let (pv, qv, rv) = match pqr {
            Some(v) => v,
            None => continue,
        };
        let roots = cubic_roots_real(-pv, qv, -rv);
        if roots.len() != 3 {
            continue;
        }
        let (point, residual) = polish_triple(t, [roots[0], roots[1], roots[2]]);
        let tri: Vec<f64> = point.iter().map(|v| v.to_f64().unwrap()).collect();
        if residual > 1e-8 {
            return Err(Error::RootFinding(format!(
                "refinement stalled at residual {residual:.3e} for t = {tf}"
            )));
        }
        if tri.iter().chain([&tf]).any(|v| (v.abs() - INV_SQRT3).abs() <= 1e-9) {
            continue;
        }
        let mut sorted = tri.clone();
        sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let dup = out.iter().any(|s| {
            s.triple()
                .iter()
                .zip(&sorted)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max)
                < 1e-6
        });
        if !dup {
            out.push(CaseIVSolution {
                t: tf,
                x: sorted[0],
                y: sorted[1],
                z: sorted[2],
                residual,
            });
        }
    }
    out.sort_by(|a, b| a.x.partial_cmp(&b.x).unwrap().then(a.y.partial_cmp(&b.y).unwrap()));
    Ok(out)
}

/// One row of the solution-count table.
#[derive(Debug, Clone)]
pub struct ScanRow {
    pub t: f64,
    pub count: usize,
}

#[derive(Debug, Clone)]
pub struct ScanTable {
    pub rows: Vec<ScanRow>,
    /// count-change locations found by bisection between adjacent grid t's.
    pub breakpoints: Vec<f64>,
    /// grid values skipped because t = 0 or |t| = 1/√3.
    pub skipped: Vec<f64>,
}

/// Counts over a rational t-grid, distributed over `workers` threads;
/// the output is deterministic and independent of the worker count.
pub fn scan_table(grid: &[Rat], workers: usize) -> Result<ScanTable> {
    let workers = workers.max(1);
    let mut skipped = Vec::new();
    let mut valid: Vec<Rat> = Vec::new();
    for t in grid {
        if check_t(t).is_err() {
            skipped.push(t.to_f64().unwrap());
        } else {
            valid.push(t.clone());
        }
    }
    let results: Mutex<Vec<Option<(f64, usize)>>> = Mutex::new(vec![None; valid.len()]);
    let err: Mutex<Option<Error>> = Mutex::new(None);
    std::thread::scope(|scope| {
        for w in 0..workers {
            let valid = &valid;
            let results = &results;
            let err = &err;
            scope.spawn(move || {
                let mut i = w;
                while i < valid.len() {
                    match case_iv_count(&valid[i]) {
                        Ok(count) => {
                            results.lock().unwrap()[i] =
                                Some((valid[i].to_f64().unwrap(), count));
                        }
                        Err(e) => {
                            let mut guard = err.lock().unwrap();
                            if guard.is_none() {
                                *guard = Some(e);
                            }
                        }
                    }
                    i += workers;
                }
            });
        }
    });
    if let Some(e) = err.into_inner().unwrap() {
        return Err(e);
    }
    let rows: Vec<ScanRow> = results
        .into_inner()
        .unwrap()
        .into_iter()
        .map(|o| {
            let (t, count) = o.expect("all grid points computed");
            ScanRow { t, count }
        })
        .collect();
    // localize count changes between adjacent valid grid points
    let mut breakpoints = Vec::new();
    for w in valid.windows(2).zip(rows.windows(2)) {
        let ((tl, th), (cl, ch)) = ((&w.0[0], &w.0[1]), (w.1[0].count, w.1[1].count));
        if cl != ch {
            breakpoints.push(bisect_breakpoint(tl, th, cl)?);
        }
    }
    Ok(ScanTable { rows, breakpoints, skipped })
}

fn bisect_breakpoint(lo: &Rat, hi: &Rat, count_lo: usize) -> Result<f64> {
    let mut lo = lo.clone();
    let mut hi = hi.clone();
    let two = Rat::from_integer(BigInt::from(2));
    for _ in 0..20 {
        let mut mid = (&lo + &hi) / &two;
        if check_t(&mid).is_err() {
            // nudge off the excluded value; the width stays bracketing
            mid = &mid + (&hi - &lo) / Rat::from_integer(BigInt::from(1024));
            if check_t(&mid).is_err() {
                break;
            }
        }
        if case_iv_count(&mid)? == count_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(((&lo + &hi) / two).to_f64().unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::multipoly::rat_frac;

    #[test]
    fn univariate_degree_six() {
        for (n, d) in [(1i64, 2i64), (1, 10), (3, 10), (7, 10), (6, 5)] {
            let u = case_iv_univariate_exact(&rat_frac(n, d)).unwrap();
            assert_eq!(u.degree(), 6, "t = {n}/{d}");
        }
    }

    #[test]
    fn excluded_t_rejected() {
        assert!(matches!(case_iv_count(&rat(0)), Err(Error::ExcludedT(_))));
        // a rational within 1e-9 of 1/sqrt(3)
        let near = rat_frac(577350269, 1000000000);
        assert!(matches!(case_iv_count(&near), Err(Error::ExcludedT(_))));
    }

    #[test]
    fn table_counts() {
        let cases =
            [(1i64, 10i64, 2usize), (3, 10, 3), (1, 2, 5), (7, 10, 4), (6, 5, 3)];
        for (n, d, expect) in cases {
            assert_eq!(case_iv_count(&rat_frac(n, d)).unwrap(), expect, "t = {n}/{d}");
        }
    }

    #[test]
    fn counts_symmetric_in_sign() {
        for (n, d) in [(1i64, 5i64), (1, 2), (7, 10)] {
            let plus = case_iv_count(&rat_frac(n, d)).unwrap();
            let minus = case_iv_count(&rat_frac(-n, d)).unwrap();
            assert_eq!(plus, minus);
        }
    }

    #[test]
    fn counts_near_sqrt3_boundary() {
        assert_eq!(case_iv_count(&rat_frac(577, 1000)).unwrap(), 5);
        assert_eq!(case_iv_count(&rat_frac(578, 1000)).unwrap(), 4);
    }

    #[test]
    fn solutions_at_one_tenth() {
        let sols = case_iv_solutions(&rat_frac(1, 10)).unwrap();
        assert_eq!(sols.len(), 2);
        // frozen from the elimination pipeline run through exact arithmetic
        let expect = [
            [-1.112685, 0.443108, 2.161864],
            [-1.381973, -0.441731, 1.648226],
        ];
        for e in expect {
            assert!(
                sols.iter().any(|s| s
                    .triple()
                    .iter()
                    .zip(&e)
                    .all(|(a, b)| (a - b).abs() < 1e-5)),
                "missing {e:?}"
            );
        }
        for s in &sols {
            assert!(s.residual <= 1e-8);
        }
    }

    #[test]
    fn solutions_counts_match_exact_counts() {
        for (n, d) in [(3i64, 10i64), (1, 2), (7, 10), (6, 5)] {
            let t = rat_frac(n, d);
            assert_eq!(
                case_iv_solutions(&t).unwrap().len(),
                case_iv_count(&t).unwrap(),
                "t = {n}/{d}"
            );
        }
    }

    #[test]
    fn count_invariant_under_cleanup_refinement() {
        // distinct real roots of the raw resultant match those of the
        // cleaned polynomial
        for (n, d) in [(3i64, 10i64), (1, 2)] {
            let t = rat_frac(n, d);
            let sys = build_system(&t).unwrap();
            let raw = RatPoly::from_multipoly(
                &resultant(&sys.e2, &sys.e3, "p").unwrap(),
                "r",
            )
            .unwrap();
            let clean = univariate_from(&sys).unwrap();
            assert_eq!(raw.isolate_roots().len(), clean.isolate_roots().len());
        }
    }
}
