//! Re-derivation of the symmetric polynomial system from first principles.
//!
//! Starting from the rational separation function c(x,y), the identity
//! cos²A + cos²B + cos²C = 1 + 2·cosA·cosB·cosC (A+B+C = 0) turns the
//! pairwise separation conditions on three tangents into a single
//! polynomial f(x,y,z). Symmetrizing f and its divided differences over a
//! fourth tangent yields the four-variable system F₁,…,F₄ in the
//! elementary symmetric values. Everything here is rebuilt symbolically
//! and compared against the transcribed tables, exact coefficient by
//! exact coefficient.

use std::sync::OnceLock;

use crate::error::Result;
use crate::poly::multipoly::{rat, MultiPoly};

use super::tables::FTables;

const VARS3: [&str; 3] = ["x", "y", "z"];
const VARS4: [&str; 4] = ["t", "x", "y", "z"];

/// Numerator of c(u,v) and the factor e = 1 + 3uv, over the given vars.
fn c_parts(vars: &[&str], u: &str, v: &str) -> (MultiPoly, MultiPoly) {
    let pu = MultiPoly::var(vars, u).unwrap();
    let pv = MultiPoly::var(vars, v).unwrap();
    let uv = pu.mul(&pv).unwrap();
    let u2 = pu.mul(&pu).unwrap();
    let v2 = pv.mul(&pv).unwrap();
    let num = MultiPoly::constant(vars, rat(-11))
        .add(&u2.scale(&rat(9)))
        .unwrap()
        .add(&v2.scale(&rat(9)))
        .unwrap()
        .add(&u2.mul(&v2).unwrap().scale(&rat(-27)))
        .unwrap()
        .add(&uv.scale(&rat(-24)))
        .unwrap();
    let e = MultiPoly::one(vars).add(&uv.scale(&rat(3))).unwrap();
    (num, e)
}

/// Build f(x,y,z): clear denominators in
/// c(x,y)² + c(y,z)² + c(z,x)² − 1 − 2·c(x,y)c(y,z)c(z,x)
/// and divide by 486 = 2·243.
fn build_f() -> Result<MultiPoly> {
    let v = &VARS3;
    let (n12, e12) = c_parts(v, "x", "y");
    let (n23, e23) = c_parts(v, "y", "z");
    let (n31, e31) = c_parts(v, "z", "x");
    let sq = |p: &MultiPoly| p.mul(p);
    let term1 = sq(&n12)?.mul(&sq(&e23)?)?.mul(&sq(&e31)?)?;
    let term2 = sq(&n23)?.mul(&sq(&e12)?)?.mul(&sq(&e31)?)?;
    let term3 = sq(&n31)?.mul(&sq(&e12)?)?.mul(&sq(&e23)?)?;
    let eee = e12.mul(&e23)?.mul(&e31)?;
    let num = term1
        .add(&term2)?
        .add(&term3)?
        .scale(&rat(16))
        .sub(&sq(&eee)?.scale(&rat(4096)))?
        .sub(&n12.mul(&n23)?.mul(&n31)?.mul(&eee)?.scale(&rat(2)))?;
    Ok(num.scale(&(rat(1) / rat(486))))
}

/// The symmetric polynomial f(x,y,z), built once.
pub fn derived_f() -> &'static MultiPoly {
    static CELL: OnceLock<MultiPoly> = OnceLock::new();
    CELL.get_or_init(|| build_f().expect("f builds"))
}

/// f embedded into (t,x,y,z) with arguments in slots (x,y,z).
fn f_txy() -> Result<MultiPoly> {
    let f3 = derived_f();
    let mut f4 = MultiPoly::zero(&VARS4);
    for (e, c) in f3.terms() {
        f4.insert_term(vec![0, e[0], e[1], e[2]], c.clone());
    }
    Ok(f4)
}

/// Direct evaluation of f at a triple of tangents, through the derived
/// polynomial (independent of the transcribed F tables).
pub fn eval_f(x: f64, y: f64, z: f64) -> f64 {
    derived_f().eval_f64(&[x, y, z])
}

/// Report of the symbolic re-derivation.
#[derive(Debug, Clone)]
pub struct DerivationReport {
    pub f0_ok: bool,
    pub f1_ok: bool,
    pub f2_ok: bool,
    pub f3_ok: bool,
    pub f4_ok: bool,
    /// First differing monomial, when any comparison fails.
    pub first_mismatch: Option<String>,
    /// Largest residual of the cosine identity over 100 pseudo-random
    /// samples.
    pub trig_max_residual: f64,
}

impl DerivationReport {
    pub fn all_match(&self) -> bool {
        self.f0_ok
            && self.f1_ok
            && self.f2_ok
            && self.f3_ok
            && self.f4_ok
            && self.trig_max_residual <= 1e-12
    }
}

fn mismatch_of(name: &str, derived: &MultiPoly, table: &MultiPoly) -> Option<String> {
    let diff = derived.sub(table).ok()?;
    if diff.is_zero() {
        return None;
    }
    let (e, c) = diff.leading_term()?;
    let mono: Vec<String> = diff
        .vars()
        .iter()
        .zip(e)
        .filter(|(_, &k)| k > 0)
        .map(|(v, &k)| if k == 1 { v.clone() } else { format!("{v}^{k}") })
        .collect();
    Some(format!(
        "{name}: coefficient of {} differs by {}",
        if mono.is_empty() { "1".to_string() } else { mono.join("*") },
        c
    ))
}

/// Rebuild F₀ and F₁–F₄ and compare against the given tables.
pub fn verify_derivations_against(tables: &FTables) -> Result<DerivationReport> {
    let f = derived_f();
    let f0_derived = f.symmetric_reduce(&["p", "q", "r"])?;
    let f4poly = f_txy()?;

    // argument permutations; perm[i] is the destination slot of slot i
    let f_xyz = &f4poly; // f(x,y,z)
    let f_tyz = f4poly.permute(&[1, 0, 2, 3]);
    let f_txz = f4poly.permute(&[2, 0, 1, 3]);
    let f_txy4 = f4poly.permute(&[3, 0, 1, 2]);

    let f1_txyz = f_xyz.add(&f_tyz)?.add(&f_txz)?.add(&f_txy4)?;

    let y_minus_z = MultiPoly::var(&VARS4, "y")?.sub(&MultiPoly::var(&VARS4, "z")?)?;
    let g = f_txy4.sub(&f_txz)?.exact_div(&y_minus_z)?;

    let g_perms = [
        [0usize, 2, 3, 1], // g(t,y,z,x)
        [0, 3, 1, 2],      // g(t,z,x,y)
        [1, 2, 0, 3],      // g(x,y,t,z)
        [1, 3, 0, 2],      // g(x,z,t,y)
        [2, 3, 1, 0],      // g(y,z,x,t)
    ];
    let mut f2_txyz = g.clone();
    for perm in &g_perms {
        f2_txyz = f2_txyz.add(&g.permute(perm))?;
    }

    let x_minus_y = MultiPoly::var(&VARS4, "x")?.sub(&MultiPoly::var(&VARS4, "y")?)?;
    let h = g.sub(&g.permute(&[0, 2, 1, 3]))?.exact_div(&x_minus_y)?;

    let h_perms = [
        [0usize, 2, 3, 1], // h(t,y,z,x)
        [0, 3, 1, 2],      // h(t,z,x,y)
        [1, 2, 0, 3],      // h(x,y,t,z)
        [1, 3, 0, 2],      // h(x,z,t,y)
        [2, 1, 0, 3],      // h(y,x,t,z)
        [3, 1, 2, 0],      // h(z,x,y,t)
        [1, 2, 3, 0],      // h(x,y,z,t)
        [2, 3, 1, 0],      // h(y,z,x,t)
        [3, 2, 0, 1],      // h(z,y,t,x)
        [2, 3, 0, 1],      // h(y,z,t,x)
        [3, 1, 0, 2],      // h(z,x,t,y)
    ];
    let mut f3_txyz = h.clone();
    for perm in &h_perms {
        f3_txyz = f3_txyz.add(&h.permute(perm))?;
    }

    let t_minus_x = MultiPoly::var(&VARS4, "t")?.sub(&MultiPoly::var(&VARS4, "x")?)?;
    let f4_txyz = h.sub(&h.permute(&[1, 0, 2, 3]))?.exact_div(&t_minus_x)?;

    let abcd = ["a", "b", "c", "d"];
    let f1_derived = f1_txyz.symmetric_reduce(&abcd)?;
    let f2_derived = f2_txyz.symmetric_reduce(&abcd)?;
    let f3_derived = f3_txyz.symmetric_reduce(&abcd)?;
    let f4_derived = f4_txyz.symmetric_reduce(&abcd)?;

    let checks = [
        ("F0", &f0_derived, &tables.f0),
        ("F1", &f1_derived, &tables.f1),
        ("F2", &f2_derived, &tables.f2),
        ("F3", &f3_derived, &tables.f3),
        ("F4", &f4_derived, &tables.f4),
    ];
    let mut first_mismatch = None;
    let mut ok = [true; 5];
    for (i, (name, derived, table)) in checks.iter().enumerate() {
        if let Some(msg) = mismatch_of(name, derived, table) {
            ok[i] = false;
            if first_mismatch.is_none() {
                first_mismatch = Some(msg);
            }
        }
    }

    Ok(DerivationReport {
        f0_ok: ok[0],
        f1_ok: ok[1],
        f2_ok: ok[2],
        f3_ok: ok[3],
        f4_ok: ok[4],
        first_mismatch,
        trig_max_residual: trig_identity_residual(100),
    })
}

/// Rebuild and compare against the built-in tables.
pub fn verify_derivations() -> Result<DerivationReport> {
    verify_derivations_against(&FTables::builtin())
}

/// Max residual of cos²A + cos²B + cos²C − 1 − 2cosA·cosB·cosC with
/// C = −A−B over `samples` pseudo-random pairs.
pub fn trig_identity_residual(samples: usize) -> f64 {
    let mut state = 0x9e3779b97f4a7c15u64;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        (state >> 11) as f64 / (1u64 << 53) as f64 * 8.0 - 4.0
    };
    let mut worst: f64 = 0.0;
    for _ in 0..samples {
        let a = next();
        let b = next();
        let c = -a - b;
        let lhs = a.cos().powi(2) + b.cos().powi(2) + c.cos().powi(2);
        let rhs = 1.0 + 2.0 * a.cos() * b.cos() * c.cos();
        worst = worst.max((lhs - rhs).abs());
    }
    worst
}
