use num_traits::{One, Zero};

use crate::arith::{factorial, pochhammer, ExactRational, SurdExpr};
use crate::family::{FamilyId, SeriesParams};
use crate::poly::Poly;

use super::{CatalogEntry, PrintedTerm, PrintedValue, Shifted};

fn q(n: i64, d: i64) -> ExactRational {
    ExactRational::new(n.into(), d.into())
}

fn int(n: i64) -> ExactRational {
    ExactRational::from_integer(n.into())
}

fn s(terms: &[(u64, i64, i64)]) -> SurdExpr {
    SurdExpr::from_terms(terms)
}

fn srat(c: ExactRational) -> SurdExpr {
    SurdExpr::rational(c)
}

fn fact(n: i64) -> ExactRational {
    ExactRational::from_integer(factorial(n).expect("non-negative"))
}

fn poch(x: &ExactRational, n: i64) -> ExactRational {
    pochhammer(x, n).expect("non-integer base")
}

/// `num / den` for surds, with `den` rationalized away.
fn quot(num: SurdExpr, den: SurdExpr) -> SurdExpr {
    num.checked_div(&den).expect("nonzero surd")
}

fn shifted(bases: &[ExactRational], shift: i64) -> Vec<Shifted> {
    bases.iter().map(|b| Shifted::new(b.clone(), shift)).collect()
}

fn repeat(f: Shifted, n: usize) -> Vec<Shifted> {
    vec![f; n]
}

fn params(family: FamilyId, x: Vec<ExactRational>, p: Vec<i64>, q: Vec<i64>, r: Vec<i64>) -> SeriesParams {
    SeriesParams::new(family, x, p, q, r)
}

const TUPLES: [(i64, i64, i64); 4] = [(0, 0, 0), (1, 0, 0), (1, 1, 1), (2, 1, 0)];

/// Single-`x` series for `1/π` and `π` with free `(p, q, r)`. The printed
/// left side is `K / (L1·L2) · π^±1` with `L1 = a(p−r) + b`,
/// `L2 = a(q−r) + c`, and the printed boundary carries the factor `B`.
struct OneVar {
    n: u32,
    x: (i64, i64),
    k_num: SurdExpr,
    k_den: SurdExpr,
    a: i64,
    b: i64,
    c: i64,
    big_b: i64,
}

fn one_var_t1() -> Vec<OneVar> {
    let one = SurdExpr::one;
    let v = |n, x, k_num, a, b, c, big_b| OneVar { n, x, k_num, k_den: one(), a, b, c, big_b };
    vec![
        v(1, (1, 2), SurdExpr::integer(4), 2, 1, 1, 4),
        v(2, (1, 6), SurdExpr::integer(18), 6, 1, 5, 36),
        v(3, (1, 4), s(&[(2, 8, 1)]), 4, 1, 3, 16),
        v(4, (1, 3), s(&[(3, 9, 2)]), 3, 1, 2, 9),
        v(5, (1, 10), s(&[(5, 25, 1), (1, -25, 1)]), 10, 1, 9, 100),
        v(6, (3, 10), s(&[(5, 25, 1), (1, 25, 1)]), 10, 3, 7, 100),
        v(7, (1, 12), s(&[(6, 36, 1), (2, -36, 1)]), 12, 1, 11, 144),
        v(8, (5, 12), s(&[(6, 36, 1), (2, 36, 1)]), 12, 5, 7, 144),
    ]
}

fn one_var_t12() -> Vec<OneVar> {
    let v = |n, x, k_num, k_den, a, b, c, big_b| OneVar { n, x, k_num, k_den, a, b, c, big_b };
    let i = SurdExpr::integer;
    vec![
        v(21, (1, 2), i(4), i(1), 2, 1, 1, 4),
        v(22, (1, 6), i(72), i(1), 6, 5, 5, 36),
        v(23, (1, 4), i(32), s(&[(2, 1, 1)]), 4, 3, 3, 16),
        v(24, (1, 3), i(18), s(&[(3, 1, 1)]), 3, 2, 2, 9),
        v(25, (1, 10), i(400), s(&[(5, 1, 1), (1, -1, 1)]), 10, 9, 9, 100),
        v(26, (3, 10), i(400), s(&[(5, 1, 1), (1, 1, 1)]), 10, 7, 7, 100),
        v(27, (1, 12), i(576), s(&[(6, 1, 1), (2, -1, 1)]), 12, 11, 11, 144),
        v(28, (5, 12), i(576), s(&[(6, 1, 1), (2, 1, 1)]), 12, 7, 7, 144),
    ]
}

fn tuple_tag(p: i64, q: i64, r: i64) -> String {
    let t = |v: i64| if v < 0 { format!("m{}", -v) } else { v.to_string() };
    format!("p{}q{}r{}", t(p), t(q), t(r))
}

fn one_var_entry(family: FamilyId, d: &OneVar, (p, qq, r): (i64, i64, i64)) -> CatalogEntry {
    let x = q(d.x.0, d.x.1);
    let y = ExactRational::one() - &x;
    let l1 = d.a * (p - r) + d.b;
    let l2 = d.a * (qq - r) + d.c;
    let l12 = int(l1 * l2);
    let k = quot(d.k_num.clone(), d.k_den.clone()).scale(&l12.recip());
    let boundary_coeff = int(d.big_b) / &l12;
    let (pi_exp, boundary, term) = match family {
        FamilyId::T1 => {
            let s_ = p + qq - r + 1;
            let b = int(r * s_) * poch(&x, p) * poch(&y, qq) / (fact(r) * fact(s_));
            let term = PrintedTerm {
                numer: vec![Shifted::new(x.clone(), p), Shifted::new(y.clone(), qq)],
                denom: vec![Shifted::factorial(r), Shifted::factorial(s_)],
                bracket: vec![ExactRational::one()],
            };
            (-1, b, term)
        }
        FamilyId::T12 => {
            let b = fact(p) * fact(qq) / (poch(&x, r) * poch(&y, p + qq - r + 1));
            let term = PrintedTerm {
                numer: vec![Shifted::factorial(p), Shifted::factorial(qq)],
                denom: vec![Shifted::new(x.clone(), r + 1), Shifted::new(y.clone(), p + qq - r + 2)],
                bracket: vec![ExactRational::one()],
            };
            (1, b, term)
        }
    };
    let printed_lhs = PrintedValue::pi_power(k, pi_exp).plus(srat(-(boundary_coeff * boundary)), 0);
    let fam = family.to_string().to_lowercase();
    CatalogEntry {
        id: format!("{fam}.ex{}.{}", d.n, tuple_tag(p, qq, r)),
        params: params(family, vec![x.clone()], vec![p], vec![qq], vec![r]),
        rho: l12 / int(d.a * d.a),
        printed_lhs,
        printed_term: term,
        provenance: format!("Example {} (x = {}; p = {p}, q = {qq}, r = {r})", d.n, x),
    }
}

fn pair_label(x: &ExactRational, y: &ExactRational) -> String {
    if x == y {
        format!("x = y = {x}")
    } else {
        format!("x = {x}, y = {y}")
    }
}

/// `(n, x, y, printed coefficient of π^−2, bracket constant, rho)`.
fn two_var_t1() -> Vec<(u32, ExactRational, ExactRational, SurdExpr, ExactRational, ExactRational)> {
    let r = |v| srat(v);
    vec![
        (9, q(1, 2), q(1, 2), r(int(2)), q(1, 8), q(1, 2)),
        (10, q(1, 3), q(1, 3), r(q(27, 16)), q(1, 9), q(4, 9)),
        (11, q(1, 4), q(1, 4), r(q(4, 3)), q(3, 32), q(3, 8)),
        (12, q(1, 6), q(1, 6), r(q(9, 10)), q(5, 72), q(5, 18)),
        (13, q(1, 2), q(1, 6), r(q(9, 7)), q(5, 56), q(7, 18)),
        (14, q(1, 10), q(3, 10), r(q(5, 6)), q(63, 1000), q(3, 10)),
        (15, q(1, 12), q(5, 12), r(q(18, 23)), q(385, 6624), q(23, 72)),
        (16, q(1, 2), q(1, 4), s(&[(2, 8, 7)]), q(3, 28), q(7, 16)),
        (17, q(1, 4), q(1, 6), s(&[(2, 36, 47)]), q(15, 188), q(47, 144)),
        (18, q(1, 2), q(1, 3), s(&[(3, 18, 17)]), q(2, 17), q(17, 36)),
        (19, q(1, 3), q(1, 6), s(&[(3, 9, 13)]), q(10, 117), q(13, 36)),
        (20, q(1, 3), q(1, 4), s(&[(6, 36, 59)]), q(6, 59), q(59, 144)),
    ]
}

fn two_var_t1_entry(
    (n, x, y, lhs, c0, rho): (u32, ExactRational, ExactRational, SurdExpr, ExactRational, ExactRational),
) -> CatalogEntry {
    let one = ExactRational::one();
    let term = PrintedTerm {
        numer: shifted(&[x.clone(), &one - &x, y.clone(), &one - &y], 0),
        denom: vec![Shifted::factorial(0), Shifted::factorial(0), Shifted::factorial(1), Shifted::factorial(1)],
        bracket: vec![c0, one.clone(), one],
    };
    CatalogEntry {
        id: format!("t1.ex{n}"),
        provenance: format!("Example {n} ({})", pair_label(&x, &y)),
        params: params(FamilyId::T1, vec![x, y], vec![0, 0], vec![0, 0], vec![0, 0]),
        rho,
        printed_lhs: PrintedValue::pi_power(lhs, -2),
        printed_term: term,
    }
}

/// `(n, x, y, π² coefficient, its surd denominator, constant, bracket constant, rho)`.
type TwoVarT12 = (u32, ExactRational, ExactRational, ExactRational, SurdExpr, ExactRational, ExactRational, ExactRational);

fn two_var_t12() -> Vec<TwoVarT12> {
    let one = SurdExpr::one;
    let rt = |d: u64| s(&[(d, 1, 1)]);
    vec![
        (29, q(1, 2), q(1, 2), q(9, 32), one(), q(9, 8), q(7, 8), q(32, 9)),
        (30, q(1, 3), q(1, 3), q(50, 243), one(), q(25, 72), q(7, 9), q(162, 25)),
        (31, q(1, 4), q(1, 4), q(49, 256), one(), q(49, 288), q(23, 32), q(512, 49)),
        (32, q(1, 6), q(1, 6), q(121, 648), one(), q(121, 1800), q(47, 72), q(2592, 121)),
        (33, q(1, 2), q(1, 6), q(55, 272), one(), q(33, 136), q(111, 136), q(544, 55)),
        (34, q(1, 10), q(3, 10), q(61047, 325000), one(), q(969, 13000), q(9031, 13000), q(1300000, 61047)),
        (35, q(1, 12), q(5, 12), q(33649, 176256), one(), q(437, 4896), q(18551, 24480), q(705024, 33649)),
        (36, q(1, 2), q(1, 4), q(63, 208), rt(2), q(21, 52), q(43, 52), q(416, 63)),
        (37, q(1, 4), q(1, 6), q(385, 1448), rt(2), q(77, 724), q(499, 724), q(5792, 385)),
        (38, q(1, 2), q(1, 3), q(2, 5), rt(3), q(3, 5), q(21, 25), q(5, 1)),
        (39, q(1, 3), q(1, 6), q(1100, 3321), rt(3), q(55, 369), q(269, 369), q(3321, 275)),
        (40, q(1, 3), q(1, 4), q(14, 29), rt(6), q(7, 29), q(109, 145), q(58, 7)),
    ]
}

fn two_var_t12_entry((n, x, y, a, a_den, b, c0, rho): TwoVarT12) -> CatalogEntry {
    let three = int(3);
    let one = ExactRational::one();
    let term = PrintedTerm {
        numer: repeat(Shifted::factorial(0), 4),
        denom: shifted(&[&one + &x, &three - &x, &one + &y, &three - &y], 0),
        bracket: vec![c0, int(2), one],
    };
    let printed_lhs = PrintedValue::pi_power(quot(srat(a), a_den), 2).plus(srat(-b), 0);
    CatalogEntry {
        id: format!("t12.ex{n}"),
        provenance: format!("Example {n} ({})", pair_label(&x, &y)),
        params: params(FamilyId::T12, vec![x, y], vec![0, 0], vec![0, 0], vec![0, 0]),
        rho,
        printed_lhs,
        printed_term: term,
    }
}

/// `∏ (k + a)` over the shifts, each repeated `m` times.
fn shift_poly(shifts: &[ExactRational], m: usize) -> Poly {
    let all: Vec<_> = shifts.iter().flat_map(|s| std::iter::repeat(s.clone()).take(m)).collect();
    Poly::from_shifts(&all)
}

const POWERS: [usize; 3] = [1, 2, 3];

/// `(n, x, base)` with printed left side `base^m / π^m`.
fn power_t1() -> Vec<(u32, ExactRational, SurdExpr)> {
    vec![
        (4, q(1, 2), SurdExpr::one()),
        (5, q(1, 6), srat(q(1, 2))),
        (6, q(1, 4), quot(SurdExpr::one(), s(&[(2, 1, 1)]))),
        (7, q(1, 3), s(&[(3, 1, 2)])),
        (8, q(1, 10), s(&[(5, 1, 4), (1, -1, 4)])),
        (9, q(3, 10), s(&[(5, 1, 4), (1, 1, 4)])),
        (10, q(1, 12), s(&[(6, 1, 4), (2, -1, 4)])),
        (11, q(5, 12), s(&[(6, 1, 4), (2, 1, 4)])),
    ]
}

fn power_t1_entry((n, x, base): (u32, ExactRational, SurdExpr), m: usize) -> CatalogEntry {
    let one = ExactRational::one();
    let y = &one - &x;
    let bracket = shift_poly(&[x.clone(), y.clone()], m).sub(&shift_poly(&[ExactRational::zero(), one], m));
    let mut numer = repeat(Shifted::new(x.clone(), 0), m);
    numer.extend(repeat(Shifted::new(y, 0), m));
    let mut denom = repeat(Shifted::factorial(0), m);
    denom.extend(repeat(Shifted::factorial(1), m));
    CatalogEntry {
        id: format!("t1.cor{n}.m{m}"),
        provenance: format!("Corollary {n} (m = {m}, x = {x})"),
        params: SeriesParams::uniform(FamilyId::T1, m, x, 0, 0, 0),
        rho: ExactRational::one(),
        printed_lhs: PrintedValue::pi_power(base.pow(m as u32), -(m as i32)),
        printed_term: PrintedTerm { numer, denom, bracket: bracket.0 },
    }
}

/// `(n, x, c, surd denominator, d, rho for m = 1)` with printed left side
/// `(c·π / den)^m − d^m`.
fn power_t12() -> Vec<(u32, ExactRational, ExactRational, SurdExpr, ExactRational, ExactRational)> {
    vec![
        (15, q(1, 2), q(3, 8), SurdExpr::one(), q(3, 4), q(8, 3)),
        (16, q(1, 6), q(55, 108), SurdExpr::one(), q(11, 36), q(216, 55)),
        (17, q(1, 4), q(21, 32), s(&[(2, 1, 1)]), q(7, 16), q(64, 21)),
        (18, q(1, 3), q(20, 27), s(&[(3, 1, 1)]), q(5, 9), q(27, 10)),
        (19, q(1, 10), q(171, 250), s(&[(5, 1, 1), (1, -1, 1)]), q(19, 100), q(1000, 171)),
        (20, q(3, 10), q(357, 250), s(&[(5, 1, 1), (1, 1, 1)]), q(51, 100), q(1000, 357)),
        (21, q(1, 12), q(253, 432), s(&[(6, 1, 1), (2, -1, 1)]), q(23, 144), q(1728, 253)),
        // x(1−x)(2−x) = 665/1728 at x = 5/12
        (22, q(5, 12), q(665, 432), s(&[(6, 1, 1), (2, 1, 1)]), q(95, 144), q(1728, 665)),
    ]
}

fn power_t12_entry(
    (n, x, c, den, d, rho1): (u32, ExactRational, ExactRational, SurdExpr, ExactRational, ExactRational),
    m: usize,
) -> CatalogEntry {
    let one = ExactRational::one();
    let two = int(2);
    let bracket = shift_poly(&[one.clone(), one.clone()], m).sub(&shift_poly(&[x.clone(), &two - &x], m));
    let mut denom = repeat(Shifted::new(&one + &x, 0), m);
    denom.extend(repeat(Shifted::new(int(3) - &x, 0), m));
    let base = quot(srat(c), den);
    let printed_lhs = PrintedValue::pi_power(base.pow(m as u32), m as i32)
        .plus(srat(-num_traits::pow(d, m)), 0);
    CatalogEntry {
        id: format!("t12.cor{n}.m{m}"),
        provenance: format!("Corollary {n} (m = {m}, x = {x})"),
        params: SeriesParams::uniform(FamilyId::T12, m, x, 0, 0, 0),
        rho: num_traits::pow(rho1, m),
        printed_lhs,
        printed_term: PrintedTerm { numer: repeat(Shifted::factorial(0), 2 * m), denom, bracket: bracket.0 },
    }
}

/// The general one- and two-variable statements, each at one point outside
/// the worked examples.
fn spot_entries() -> Vec<CatalogEntry> {
    let one = ExactRational::one();
    let two = int(2);
    let mut out = Vec::new();

    // single x, free (p, q, r), 1/π side
    {
        let (x, p, qq, r) = (q(2, 3), 1i64, 2i64, 1i64);
        let y = &one - &x;
        let nrm = (int(p - r) + &x) * (int(1 + qq - r) - &x);
        let s_ = p + qq - r + 1;
        let boundary = int(r * s_) / &nrm * poch(&x, p) * poch(&y, qq) / (fact(r) * fact(s_));
        let sine = s(&[(3, 1, 2)]);
        out.push(CatalogEntry {
            id: "t1.cor2.x2_3.p1q2r1".into(),
            provenance: format!("Corollary 2 (x = {x}, p = {p}, q = {qq}, r = {r})"),
            params: params(FamilyId::T1, vec![x.clone()], vec![p], vec![qq], vec![r]),
            rho: q(8, 9),
            printed_lhs: PrintedValue::pi_power(sine.scale(&nrm.recip()), -1).plus(srat(-boundary), 0),
            printed_term: PrintedTerm {
                numer: vec![Shifted::new(x, p), Shifted::new(y, qq)],
                denom: vec![Shifted::factorial(r), Shifted::factorial(s_)],
                bracket: vec![one.clone()],
            },
        });
    }

    // two variables, 1/π² side
    {
        let (x, y) = (q(2, 3), q(3, 4));
        let lam = &x + &y - &x * &x - &y * &y;
        let c0 = &x * &y * (&one - &x) * (&one - &y);
        out.push(CatalogEntry {
            id: "t1.cor3.x2_3.y3_4".into(),
            provenance: format!("Corollary 3 ({})", pair_label(&x, &y)),
            params: params(FamilyId::T1, vec![x.clone(), y.clone()], vec![0, 0], vec![0, 0], vec![0, 0]),
            rho: one.clone(),
            printed_lhs: PrintedValue::pi_power(&s(&[(3, 1, 2)]) * &s(&[(2, 1, 2)]), -2),
            printed_term: PrintedTerm {
                numer: shifted(&[x.clone(), &one - &x, y.clone(), &one - &y], 0),
                denom: vec![Shifted::factorial(0), Shifted::factorial(0), Shifted::factorial(1), Shifted::factorial(1)],
                bracket: vec![c0, lam.clone(), lam],
            },
        });
    }

    // single x, free (p, q, r), π side, with r < 0
    {
        let (x, p, qq, r) = (q(3, 4), 0i64, 1i64, -1i64);
        let y = &one - &x;
        let nrm = (int(1 + p - r) - &x) * (int(1 + qq - r) - &x);
        let boundary = fact(p) * fact(qq) / (poch(&x, r) * poch(&y, p + qq - r + 1)) / &nrm;
        let csc = quot(SurdExpr::one(), s(&[(2, 1, 2)]));
        out.push(CatalogEntry {
            id: "t12.cor13.x3_4.p0q1rm1".into(),
            provenance: format!("Corollary 13 (x = {x}, p = {p}, q = {qq}, r = {r})"),
            params: params(FamilyId::T12, vec![x.clone()], vec![p], vec![qq], vec![r]),
            rho: q(45, 16),
            printed_lhs: PrintedValue::pi_power(csc.scale(&nrm.recip()), 1).plus(srat(-boundary), 0),
            printed_term: PrintedTerm {
                numer: vec![Shifted::factorial(p), Shifted::factorial(qq)],
                denom: vec![Shifted::new(x, r + 1), Shifted::new(y, p + qq - r + 2)],
                bracket: vec![one.clone()],
            },
        });
    }

    // two variables, π² side
    {
        let (x, y) = (q(5, 6), q(1, 3));
        let lam = &two - &two * &x - &two * &y + &x * &x + &y * &y;
        let c0 = &one - &x * &y * (&two - &x) * (&two - &y);
        let csc2 = quot(SurdExpr::one(), &srat(q(1, 2)) * &s(&[(3, 1, 2)]));
        let lead = ((&one - &x) * (&one - &y)).recip();
        out.push(CatalogEntry {
            id: "t12.cor14.x5_6.y1_3".into(),
            provenance: format!("Corollary 14 ({})", pair_label(&x, &y)),
            params: params(FamilyId::T12, vec![x.clone(), y.clone()], vec![0, 0], vec![0, 0], vec![0, 0]),
            rho: one.clone(),
            printed_lhs: PrintedValue::pi_power(csc2, 2).plus(srat(-lead), 0),
            printed_term: PrintedTerm {
                numer: repeat(Shifted::factorial(0), 4),
                denom: vec![
                    Shifted::new(x.clone(), 1),
                    Shifted::new(&one - &x, 2),
                    Shifted::new(y.clone(), 1),
                    Shifted::new(&one - &y, 2),
                ],
                bracket: vec![c0, &two * &lam, lam],
            },
        });
    }
    out
}

pub(super) fn build() -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    for d in one_var_t1() {
        out.extend(TUPLES.iter().map(|&t| one_var_entry(FamilyId::T1, &d, t)));
    }
    out.extend(two_var_t1().into_iter().map(two_var_t1_entry));
    for d in power_t1() {
        out.extend(POWERS.iter().map(|&m| power_t1_entry(d.clone(), m)));
    }
    for d in one_var_t12() {
        out.extend(TUPLES.iter().map(|&t| one_var_entry(FamilyId::T12, &d, t)));
    }
    out.extend(two_var_t12().into_iter().map(two_var_t12_entry));
    for d in power_t12() {
        out.extend(POWERS.iter().map(|&m| power_t12_entry(d.clone(), m)));
    }
    out.extend(spot_entries());
    out
}
