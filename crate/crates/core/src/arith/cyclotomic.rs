//! The field Q(ω), ω a primitive m-th root of unity, m prime.
//!
//! Elements are stored in the power basis 1, ω, …, ω^{m-2}, i.e. modulo
//! Φ_m = 1 + ω + … + ω^{m-1}. The order m = 1 is accepted as plain Q so the
//! identity automorphism can share the code path.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::rational::{fmt_rat, int, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Cyclotomic {
    m: u32,
    #[serde(with = "super::rational::serde_rat_vec")]
    coeffs: Vec<Rational>,
}

pub fn is_prime(m: u32) -> bool {
    m >= 2 && (2..m).take_while(|d| d * d <= m).all(|d| !m.is_multiple_of(d))
}

fn check_order(m: u32) -> Result<()> {
    if m == 1 || is_prime(m) {
        Ok(())
    } else {
        Err(Error::NonPrimeOrder(m))
    }
}

fn width(m: u32) -> usize {
    (m as usize).saturating_sub(1).max(1)
}

impl Cyclotomic {
    pub fn new(m: u32, coeffs: Vec<Rational>) -> Result<Self> {
        check_order(m)?;
        if coeffs.len() != width(m) {
            return Err(Error::DimensionMismatch(format!(
                "order {m} needs {} coefficients, got {}",
                width(m),
                coeffs.len()
            )));
        }
        Ok(Cyclotomic { m, coeffs })
    }

    pub fn from_ints(m: u32, coeffs: &[i64]) -> Result<Self> {
        Self::new(m, coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero(m: u32) -> Self {
        Cyclotomic { m, coeffs: vec![Rational::zero(); width(m)] }
    }

    pub fn one(m: u32) -> Self {
        Self::from_rational(m, Rational::one())
    }

    pub fn from_rational(m: u32, r: Rational) -> Self {
        let mut z = Self::zero(m);
        z.coeffs[0] = r;
        z
    }

    /// ω^k, k taken mod m.
    pub fn omega_pow(m: u32, k: i64) -> Self {
        let mut full = vec![Rational::zero(); m as usize];
        full[k.rem_euclid(m as i64) as usize] = Rational::one();
        Self::reduce(m, full)
    }

    pub fn order(&self) -> u32 {
        self.m
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// Rational value if the element lies in Q.
    pub fn to_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    // length-m coefficient vector over 1..ω^{m-1}
    fn lift(&self) -> Vec<Rational> {
        let mut v = self.coeffs.clone();
        v.resize(self.m as usize, Rational::zero());
        v
    }

    fn reduce(m: u32, mut full: Vec<Rational>) -> Self {
        if m <= 2 {
            // m=1: ω=1; m=2: ω=-1
            let mut acc = Rational::zero();
            for (i, c) in full.into_iter().enumerate() {
                if m == 2 && i % 2 == 1 {
                    acc -= c;
                } else {
                    acc += c;
                }
            }
            return Cyclotomic { m, coeffs: vec![acc] };
        }
        let top = full.pop().unwrap();
        for c in full.iter_mut() {
            *c -= &top;
        }
        Cyclotomic { m, coeffs: full }
    }

    fn same_order(&self, o: &Self) -> Result<()> {
        if self.m == o.m {
            Ok(())
        } else {
            Err(Error::OrderMismatch(self.m, o.m))
        }
    }

    pub fn try_add(&self, o: &Self) -> Result<Self> {
        self.same_order(o)?;
        let coeffs = self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect();
        Ok(Cyclotomic { m: self.m, coeffs })
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self> {
        self.same_order(o)?;
        let coeffs = self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a - b).collect();
        Ok(Cyclotomic { m: self.m, coeffs })
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self> {
        self.same_order(o)?;
        let m = self.m as usize;
        if m <= 2 {
            return Ok(Cyclotomic { m: self.m, coeffs: vec![&self.coeffs[0] * &o.coeffs[0]] });
        }
        let (a, b) = (self.lift(), o.lift());
        let mut full = vec![Rational::zero(); m];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    full[(i + j) % m] += x * y;
                }
            }
        }
        Ok(Self::reduce(self.m, full))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Cyclotomic { m: self.m, coeffs: self.coeffs.iter().map(|c| c * r).collect() }
    }

    /// Image under ω ↦ ω^j (a field automorphism when gcd(j, m) = 1).
    pub fn galois(&self, j: i64) -> Self {
        let m = self.m as i64;
        let mut full = vec![Rational::zero(); self.m as usize];
        for (i, c) in self.lift().into_iter().enumerate() {
            full[((i as i64) * j).rem_euclid(m) as usize] += c;
        }
        Self::reduce(self.m, full)
    }

    /// ω ↦ ω^{-1}.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    /// Field norm down to Q.
    pub fn norm(&self) -> Rational {
        let mut p = self.clone();
        for j in 2..self.m as i64 {
            p = &p * &self.galois(j);
        }
        p.to_rational().expect("norm lies in Q")
    }

    pub fn try_inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut cof = Self::one(self.m);
        for j in 2..self.m as i64 {
            cof = &cof * &self.galois(j);
        }
        let n = (self * &cof).to_rational().expect("norm lies in Q");
        Ok(cof.scale(&(Rational::one() / n)))
    }

    pub fn try_div(&self, o: &Self) -> Result<Self> {
        self.try_mul(&o.try_inv()?)
    }

    /// Coefficients as `"p/q"` strings, constant term first.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(fmt_rat).collect()
    }
}

// Operator sugar. These panic on order mismatch; the `try_*` forms do not.
impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, o: &Cyclotomic) -> Cyclotomic {
        self.try_add(o).expect("cyclotomic order mismatch")
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, o: &Cyclotomic) -> Cyclotomic {
        self.try_sub(o).expect("cyclotomic order mismatch")
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, o: &Cyclotomic) -> Cyclotomic {
        self.try_mul(o).expect("cyclotomic order mismatch")
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic { m: self.m, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "ω".to_string(),
                _ => format!("ω^{i}"),
            };
            let s = if mono.is_empty() {
                fmt_rat(c)
            } else if c.is_one() {
                mono
            } else if *c == -Rational::one() {
                format!("-{mono}")
            } else {
                format!("{}{}", fmt_rat(c), mono)
            };
            parts.push(s);
        }
        if parts.is_empty() {
            return write!(f, "0");
        }
        let mut out = parts[0].clone();
        for p in &parts[1..] {
            if let Some(rest) = p.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(p);
            }
        }
        write!(f, "{out}")
    }
}
