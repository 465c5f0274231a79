//! Integer-coefficient data: the symmetric system in elementary
//! symmetric variables, the exclusion polynomial G, and the Case (iv)
//! relations. Transcribed as literal text; `verify_derivations`
//! re-derives the F polynomials from scratch and compares exactly, and a
//! checksum test pins the term counts.

use std::sync::OnceLock;

use crate::poly::multipoly::{parse_poly, MultiPoly};

pub(crate) const F0_TEXT: &str =
    "-15*p^5*r + 24*p^4*q^2 + 27*p^4*q - 153*p^4*r^2 + 9*p^4 + 18*p^3*q^2*r - 48*p^3*q*r \
     - 486*p^3*r^3 - 50*p^3*r - 138*p^2*q^3 - 486*p^2*q^2*r^2 - 226*p^2*q^2 - 306*p^2*q*r^2 \
     - 126*p^2*q - 162*p^2*r^4 - 480*p^2*r^2 - 22*p^2 + 81*p*q^4*r - 144*p*q^3*r \
     - 810*p*q^2*r^3 + 234*p*q^2*r + 2376*p*q*r^3 + 88*p*q*r + 1701*p*r^5 - 558*p*r^3 - 3*p*r \
     + 27*q^5 + 243*q^4*r^2 + 189*q^4 + 810*q^3*r^2 + 414*q^3 + 486*q^2*r^4 + 2736*q^2*r^2 \
     + 298*q^2 + 6399*q*r^4 + 1398*q*r^2 + 87*q + 2187*r^6 + 567*r^4 + 189*r^2 + 9";

pub(crate) const F1_TEXT: &str =
    "-63*a^5*c + 48*a^4*b^2 + 216*a^4*b*d + 54*a^4*b - 153*a^4*c^2 - 2673*a^4*d^2 + 414*a^4*d \
     + 27*a^4 + 18*a^3*b^2*c + 2835*a^3*b*c*d + 270*a^3*b*c - 486*a^3*c^3 - 1944*a^3*c*d^2 \
     + 927*a^3*c*d + 159*a^3*c + 243*a^2*b^3*d - 276*a^2*b^3 - 486*a^2*b^2*c^2 \
     - 2349*a^2*b^2*d^2 + 1107*a^2*b^2*d - 452*a^2*b^2 + 2268*a^2*b*c^2*d - 171*a^2*b*c^2 \
     - 12393*a^2*b*d^3 + 9774*a^2*b*d^2 + 351*a^2*b*d - 288*a^2*b - 162*a^2*c^4 \
     + 8991*a^2*c^2*d^2 - 1485*a^2*c^2*d - 708*a^2*c^2 + 6561*a^2*d^4 - 11907*a^2*d^3 \
     - 531*a^2*d^2 + 687*a^2*d - 66*a^2 + 81*a*b^4*c + 1458*a*b^3*c*d - 279*a*b^3*c \
     - 810*a*b^2*c^3 + 13365*a*b^2*c*d^2 - 7857*a*b^2*c*d - 246*a*b^2*c - 9477*a*b*c^3*d \
     + 2376*a*b*c^3 - 26244*a*b*c*d^3 + 37665*a*b*c*d^2 - 3330*a*b*c*d - 567*a*b*c \
     + 1701*a*c^5 + 13122*a*c^3*d^2 - 6075*a*c^3*d - 693*a*c^3 - 16281*a*c*d^3 + 3861*a*c*d^2 \
     + 453*a*c*d - 41*a*c - 486*b^5*d + 54*b^5 + 243*b^4*c^2 + 972*b^4*d^2 - 1782*b^4*d \
     + 378*b^4 - 1944*b^3*c^2*d + 810*b^3*c^2 - 4374*b^3*d^3 + 13608*b^3*d^2 - 5454*b^3*d \
     + 828*b^3 + 486*b^2*c^4 + 19683*b^2*c^2*d^2 - 24786*b^2*c^2*d + 2871*b^2*c^2 \
     - 7290*b^2*d^3 + 12042*b^2*d^2 - 4470*b^2*d + 614*b^2 - 13122*b*c^4*d + 6399*b*c^4 \
     + 7776*b*c^2*d^2 - 4968*b*c^2*d + 1968*b*c^2 + 13122*b*d^4 - 35640*b*d^3 + 14436*b*d^2 \
     - 2632*b*d + 218*b + 2187*c^6 - 1701*c^4*d + 567*c^4 - 13122*c^2*d^3 + 6966*c^2*d^2 \
     + 666*c^2*d + 834*c^2 + 8748*d^4 - 11448*d^3 + 4656*d^2 - 712*d + 36";

pub(crate) const F2_TEXT: &str =
    "81*a^5*b + 405*a^5*d + 81*a^5 - 153*a^4*b*c + 1701*a^4*c*d - 18*a^4*c + 18*a^3*b^3 \
     + 1944*a^3*b^2*d - 642*a^3*b^2 - 486*a^3*b*c^2 - 3888*a^3*b*d^2 + 2232*a^3*b*d \
     - 846*a^3*b + 486*a^3*c^2*d + 81*a^3*c^2 - 6561*a^3*d^3 - 3807*a^3*d^2 + 2583*a^3*d \
     - 243*a^3 - 486*a^2*b^3*c + 4374*a^2*b^2*c*d - 630*a^2*b^2*c - 162*a^2*b*c^3 \
     + 17010*a^2*b*c*d^2 - 5859*a^2*b*c*d + 123*a^2*b*c - 5103*a^2*c^3*d - 13122*a^2*c*d^3 \
     + 14337*a^2*c*d^2 + 1080*a^2*c*d + 741*a^2*c + 81*a*b^5 - 891*a*b^4*d + 45*a*b^4 \
     - 810*a*b^3*c^2 + 4617*a*b^3*d^2 - 7479*a*b^3*d + 1092*a*b^3 - 7533*a*b^2*c^2*d \
     + 2376*a*b^2*c^2 - 10935*a*b^2*d^3 + 29160*a*b^2*d^2 - 11583*a*b^2*d + 1706*a*b^2 \
     + 1701*a*b*c^4 + 26244*a*b*c^2*d^2 - 25272*a*b*c^2*d - 18*a*b*c^2 - 28431*a*b*d^3 \
     + 37071*a*b*d^2 - 8709*a*b*d + 829*a*b - 6561*a*c^4*d + 15309*a*c^2*d^2 - 2916*a*c^2*d \
     + 135*a*c^2 + 19683*a*d^4 - 46656*a*d^3 + 10422*a*d^2 - 1512*a*d + 63*a + 243*b^5*c \
     - 972*b^4*c*d + 810*b^4*c + 486*b^3*c^3 + 6561*b^3*c*d^2 - 11988*b^3*c*d + 2493*b^3*c \
     - 8748*b^2*c^3*d + 6399*b^2*c^3 + 7290*b^2*c*d^2 - 2862*b^2*c*d + 24*b^2*c + 2187*b*c^5 \
     - 1701*b*c^3*d + 567*b*c^3 - 30618*b*c*d^3 + 41472*b*c*d^2 + 270*b*c*d - 2348*b*c \
     + 13122*c^3*d^2 - 162*c^3 - 10206*c*d^3 + 486*c*d^2 + 1926*c*d - 1086*c";

pub(crate) const F3_TEXT: &str =
    "27*a^6 - 459*a^5*c + 54*a^4*b^2 + 3645*a^4*b*d - 396*a^4*b - 1458*a^4*c^2 - 2187*a^4*d^2 \
     + 4509*a^4*d - 180*a^4 - 1458*a^3*b^2*c + 5832*a^3*b*c*d - 1161*a^3*b*c - 486*a^3*c^3 \
     + 11664*a^3*c*d^2 + 4779*a^3*c*d - 693*a^3*c + 243*a^2*b^4 - 486*a^2*b^3*d - 108*a^2*b^3 \
     - 2430*a^2*b^2*c^2 + 9477*a^2*b^2*d^2 - 10044*a^2*b^2*d - 81*a^2*b^2 - 18225*a^2*b*c^2*d \
     + 7128*a^2*b*c^2 - 13122*a^2*b*d^3 + 19440*a^2*b*d^2 - 6318*a^2*b*d - 1320*a^2*b \
     + 5103*a^2*c^4 + 19683*a^2*c^2*d^2 - 16281*a^2*c^2*d - 1188*a^2*c^2 - 39366*a^2*d^3 \
     + 18954*a^2*d^2 + 4446*a^2*d - 978*a^2 + 729*a*b^4*c - 2916*a*b^3*c*d + 2430*a*b^3*c \
     + 1458*a*b^2*c^3 + 19683*a*b^2*c*d^2 - 26244*a*b^2*c*d + 6993*a*b^2*c - 26244*a*b*c^3*d \
     + 19197*a*b*c^3 + 65610*a*b*c*d^2 - 34668*a*b*c*d + 2250*a*b*c + 6561*a*c^5 \
     - 25515*a*c^3*d + 1701*a*c^3 - 65610*a*c*d^3 + 85050*a*c*d^2 + 6642*a*c*d - 594*a*c \
     - 2916*b^4*d + 324*b^4 + 5832*b^3*d^2 - 10692*b^3*d + 2268*b^3 - 5832*b^2*c^2*d \
     - 26244*b^2*d^3 + 75816*b^2*d^2 - 32076*b^2*d + 4968*b^2 + 78732*b*c^2*d^2 \
     - 76788*b*c^2*d + 648*b*c^2 - 32076*b*d^3 + 50868*b*d^2 - 22644*b*d + 3468*b \
     - 26244*c^4*d + 20412*c^2*d^2 - 7776*c^2*d + 900*c^2 + 26244*d^4 - 68040*d^3 + 19440*d^2 \
     - 5304*d + 780";

pub(crate) const F4_TEXT: &str =
    "9*a^5 - 153*a^4*c + 18*a^3*b^2 + 1215*a^3*b*d - 228*a^3*b - 486*a^3*c^2 - 729*a^3*d^2 \
     + 963*a^3*d - 168*a^3 - 486*a^2*b^2*c + 1944*a^2*b*c*d - 387*a^2*b*c - 162*a^2*c^3 \
     + 3888*a^2*c*d^2 - 675*a^2*c*d - 399*a^2*c + 81*a*b^4 - 162*a*b^3*d - 36*a*b^3 \
     - 810*a*b^2*c^2 + 3159*a*b^2*d^2 - 4320*a*b^2*d + 525*a*b^2 - 6075*a*b*c^2*d \
     + 2376*a*b*c^2 - 4374*a*b*d^3 + 10692*a*b*d^2 - 3942*a*b*d + 464*a*b + 1701*a*c^4 \
     + 6561*a*c^2*d^2 - 6075*a*c^2*d - 504*a*c^2 - 4374*a*d^3 + 4266*a*d^2 - 762*a*d + 70*a \
     + 243*b^4*c - 972*b^3*c*d + 810*b^3*c + 486*b^2*c^3 + 6561*b^2*c*d^2 - 11988*b^2*c*d \
     + 2655*b^2*c - 8748*b*c^3*d + 6399*b*c^3 + 4374*b*c*d^2 - 3348*b*c*d + 1158*b*c \
     + 2187*c^5 - 1701*c^3*d + 567*c^3 - 4374*c*d^3 + 5994*c*d^2 + 486*c*d - 26*c";

pub(crate) const G_TEXT: &str =
    "-3*a^2 - 18*a*c + 9*b^2 + 54*b*d + 6*b - 27*c^2 + 81*d^2 + 18*d + 1";

pub(crate) const CASE_IV_SEXTIC_TEXT: &str =
    "6561*a^6 + 78732*a^5*c + 354294*a^4*c^2 - 132192*a^4 + 708588*a^3*c^3 - 746496*a^3*c \
     + 531441*a^2*c^4 - 699840*a^2*c^2 - 73728*a^2 + 1679616*a*c^3 - 4866048*a*c \
     + 1889568*c^4 - 8626176*c^2 + 4194304";

pub(crate) const CASE_IV_QUADRIC_TEXT: &str =
    "9*a^2 + 27*a*c - 144*d + 16";



fn parse_static(vars: &[&str], text: &str) -> MultiPoly {
    parse_poly(vars, text).expect("table constant parses")
}

/// F(p,q,r): the quintic-in-q relation satisfied by the tangents of any
/// three points correctly separated from each other and the base pair.
pub fn f0() -> &'static MultiPoly {
    static CELL: OnceLock<MultiPoly> = OnceLock::new();
    CELL.get_or_init(|| parse_static(&["p", "q", "r"], F0_TEXT))
}

pub fn f1() -> &'static MultiPoly {
    static CELL: OnceLock<MultiPoly> = OnceLock::new();
    CELL.get_or_init(|| parse_static(&["a", "b", "c", "d"], F1_TEXT))
}

pub fn f2() -> &'static MultiPoly {
    static CELL: OnceLock<MultiPoly> = OnceLock::new();
    CELL.get_or_init(|| parse_static(&["a", "b", "c", "d"], F2_TEXT))
}

pub fn f3() -> &'static MultiPoly {
    static CELL: OnceLock<MultiPoly> = OnceLock::new();
    CELL.get_or_init(|| parse_static(&["a", "b", "c", "d"], F3_TEXT))
}

pub fn f4() -> &'static MultiPoly {
    static CELL: OnceLock<MultiPoly> = OnceLock::new();
    CELL.get_or_init(|| parse_static(&["a", "b", "c", "d"], F4_TEXT))
}

/// G(a,b,c,d) = 81·g(1/√3)·g(−1/√3); solutions with G = 0 have a root
/// ±1/√3 and are handled by the midpoint-solution isometry argument.
pub fn g_poly() -> &'static MultiPoly {
    static CELL: OnceLock<MultiPoly> = OnceLock::new();
    CELL.get_or_init(|| parse_static(&["a", "b", "c", "d"], G_TEXT))
}

/// The quartic relation 16 + 9a² + 27ac − 144d = 0 of Case (iv).
pub fn case_iv_quadric() -> &'static MultiPoly {
    static CELL: OnceLock<MultiPoly> = OnceLock::new();
    CELL.get_or_init(|| parse_static(&["a", "c", "d"], CASE_IV_QUADRIC_TEXT))
}

/// The sextic relation in (a, c) of Case (iv).
pub fn case_iv_sextic() -> &'static MultiPoly {
    static CELL: OnceLock<MultiPoly> = OnceLock::new();
    CELL.get_or_init(|| parse_static(&["a", "c"], CASE_IV_SEXTIC_TEXT))
}

/// The four F polynomials in one bundle, so that checks can be run
/// against substituted tables (fault injection in tests and selftest).
#[derive(Clone)]
pub struct FTables {
    pub f0: MultiPoly,
    pub f1: MultiPoly,
    pub f2: MultiPoly,
    pub f3: MultiPoly,
    pub f4: MultiPoly,
}

impl FTables {
    pub fn builtin() -> Self {
        FTables {
            f0: f0().clone(),
            f1: f1().clone(),
            f2: f2().clone(),
            f3: f3().clone(),
            f4: f4().clone(),
        }
    }
}
