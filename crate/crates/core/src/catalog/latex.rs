use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{ExactRational, SurdExpr};

use super::{CatalogEntry, PrintedTerm, PrintedValue, Shifted};

fn rational_frac(r: &ExactRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", r.numer(), r.denom())
    }
}

fn sqrt_part(n: &BigInt, d: u32) -> String {
    let coeff = if n.is_one() && d != 1 { String::new() } else { n.to_string() };
    if d == 1 {
        coeff
    } else {
        format!("{coeff}\\sqrt{{{d}}}")
    }
}

/// Numerator text (without sign for a single term), its sign and the
/// denominator of `c` over a common integer denominator.
fn surd_parts(c: &SurdExpr) -> (bool, String, BigInt) {
    let (nums, den) = c.integer_form();
    if nums.len() == 1 {
        let (d, n) = &nums[0];
        return (n.is_negative(), sqrt_part(&n.abs(), *d), den);
    }
    let g = nums.iter().fold(BigInt::zero(), |g, (_, n)| g.gcd(n));
    let mut s = String::new();
    for (i, (d, n)) in nums.iter().rev().enumerate() {
        let sign = if n.is_negative() { "-" } else if i > 0 { "+" } else { "" };
        s.push_str(sign);
        s.push_str(&sqrt_part(&(n.abs() / &g), *d));
    }
    let g = if g.is_one() { String::new() } else { g.to_string() };
    (false, format!("{g}({s})"), den)
}

fn pi_power(e: i32) -> String {
    match e.abs() {
        1 => "\\pi".into(),
        a => format!("\\pi^{a}"),
    }
}

/// LaTeX for a printed value, constants in rationalized form.
pub fn latex_value(v: &PrintedValue) -> String {
    if v.terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (e, c)) in v.terms.iter().rev().enumerate() {
        let (neg, mut num, den) = surd_parts(c);
        let mut den = if den.is_one() { String::new() } else { den.to_string() };
        if *e > 0 {
            num.push_str(&pi_power(*e));
        } else if *e < 0 {
            den.push_str(&pi_power(*e));
        }
        if num.is_empty() {
            num.push('1');
        }
        let body = if den.is_empty() { num } else { format!("\\frac{{{num}}}{{{den}}}") };
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    out
}

fn shifted_index(shift: i64) -> String {
    match shift {
        0 => "k".into(),
        s if s > 0 => format!("k+{s}"),
        s => format!("k-{}", -s),
    }
}

fn factor(f: &Shifted, count: usize) -> String {
    let pow = if count > 1 { format!("^{{{count}}}") } else { String::new() };
    if f.base.is_one() {
        let idx = shifted_index(f.shift);
        if f.shift == 0 {
            format!("k!{pow}")
        } else {
            format!("({idx})!{pow}")
        }
    } else {
        format!("\\left({}\\right)_{{{}}}{pow}", rational_frac(&f.base), shifted_index(f.shift))
    }
}

fn product(fs: &[Shifted]) -> String {
    let mut groups: Vec<(&Shifted, usize)> = Vec::new();
    for f in fs {
        match groups.iter_mut().find(|(g, _)| *g == f) {
            Some((_, c)) => *c += 1,
            None => groups.push((f, 1)),
        }
    }
    if groups.is_empty() {
        return "1".into();
    }
    groups.iter().map(|(f, c)| factor(f, *c)).collect::<Vec<_>>().join(" ")
}

fn bracket(coeffs: &[ExactRational]) -> String {
    let mut out = String::new();
    for (i, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mono = match i {
            0 => String::new(),
            1 => "k".into(),
            _ => format!("k^{{{i}}}"),
        };
        let mag = c.abs();
        let coef = if mag.is_one() && i > 0 { String::new() } else { rational_frac(&mag) };
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        out.push_str(&coef);
        out.push_str(&mono);
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

fn term(t: &PrintedTerm) -> String {
    let frac = format!("\\frac{{{}}}{{{}}}", product(&t.numer), product(&t.denom));
    if t.bracket.len() == 1 && t.bracket[0].is_one() {
        frac
    } else {
        format!("{frac} \\left\\{{{}\\right\\}}", bracket(&t.bracket))
    }
}

/// `printed value = Σ printed term` on one line, without delimiters.
pub fn identity_line(entry: &CatalogEntry) -> String {
    format!(
        "{} = \\sum_{{k=0}}^{{\\infty}} {}",
        latex_value(&entry.printed_lhs),
        term(&entry.printed_term)
    )
}

/// One display-math block per entry, preceded by a comment naming it.
pub fn emit_latex(entry: &CatalogEntry) -> String {
    format!("% {}: {}\n\\[\n{}\n\\]\n", entry.id, entry.provenance, identity_line(entry))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::find_entry;

    #[test]
    fn shapes() {
        let e9 = emit_latex(find_entry("t1.ex9").unwrap());
        assert!(e9.contains("\\frac{2}{\\pi^2}"), "{e9}");
        assert!(e9.contains("\\left(\\frac{1}{2}\\right)_{k}^{4}"));
        assert!(e9.contains("k^{2} + k + \\frac{1}{8}"));
        let e16 = emit_latex(find_entry("t1.ex16").unwrap());
        assert!(e16.contains("\\frac{8\\sqrt{2}}{7\\pi^2}"), "{e16}");
        let e29 = emit_latex(find_entry("t12.ex29").unwrap());
        assert!(e29.contains("\\frac{9\\pi^2}{32} - \\frac{9}{8}"), "{e29}");
        let c5 = emit_latex(find_entry("t1.ex5.p0q0r0").unwrap());
        assert!(c5.contains("\\frac{25(\\sqrt{5}-1)}{9\\pi}"), "{c5}");
    }
}
