//! Human-readable root labels: `ε1 - ε2`, `α1 + 2α2`.

use num_traits::{One, Signed, Zero};

use crate::arith::rational::{fmt_rat, Rational};

fn linear(terms: impl Iterator<Item = (Rational, String)>) -> String {
    let mut out = String::new();
    for (c, name) in terms {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        let coef = if mag.is_one() { String::new() } else { fmt_rat(&mag) };
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        out.push_str(&coef);
        out.push_str(&name);
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

pub fn fmt_eps(v: &[Rational]) -> String {
    linear(v.iter().enumerate().map(|(i, c)| (c.clone(), format!("ε{}", i + 1))))
}

pub fn fmt_simple(v: &[i64]) -> String {
    linear(v.iter().enumerate().map(|(i, &c)| (Rational::from_integer(c.into()), format!("α{}", i + 1))))
}

pub fn fmt_simple_rat(v: &[Rational]) -> String {
    linear(v.iter().enumerate().map(|(i, c)| (c.clone(), format!("α{}", i + 1))))
}
