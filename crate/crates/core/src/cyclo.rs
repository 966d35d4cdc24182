//! Cyclotomic integers `Z[w]`, `w = exp(2 pi i / r)`, kept in the power basis
//! `1, w, ..., w^(phi(r)-1)` reduced modulo the `r`-th cyclotomic polynomial.
//!
//! Reduction is eager, so two values of the same order are equal exactly when
//! their coefficient vectors are equal.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use serde_json::{json, Value};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycloError {
    #[error("cyclotomic order mismatch: {0} vs {1}")]
    OrderMismatch(u32, u32),
    #[error("cyclotomic order must be positive")]
    ZeroOrder,
    #[error("expected {expected} coefficients for order {order}, got {got}")]
    BadLength {
        order: u32,
        expected: usize,
        got: usize,
    },
    #[error("malformed cyclotomic integer JSON: {0}")]
    Json(String),
}

/// Largest order served from the precomputed polynomial table.
const TABLE_MAX: u32 = 64;

fn table() -> &'static Vec<Vec<i64>> {
    static TABLE: OnceLock<Vec<Vec<i64>>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut out: Vec<Vec<i64>> = vec![Vec::new()];
        for r in 1..=TABLE_MAX {
            let poly = cyclotomic_from(r, &out);
            out.push(poly);
        }
        out
    })
}

/// Coefficients (constant term first) of the monic `r`-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(r: u32) -> Vec<i64> {
    assert!(r >= 1, "cyclotomic polynomial of order 0");
    if r <= TABLE_MAX {
        return table()[r as usize].clone();
    }
    let mut known: Vec<Vec<i64>> = vec![Vec::new()];
    for d in 1..r {
        let p = cyclotomic_from(d, &known);
        known.push(p);
    }
    cyclotomic_from(r, &known)
}

// `known[d]` must hold the polynomial for every proper divisor d of r.
fn cyclotomic_from(r: u32, known: &[Vec<i64>]) -> Vec<i64> {
    let r = r as usize;
    let mut poly = vec![0i64; r + 1];
    poly[0] = -1;
    poly[r] = 1;
    for (d, phi) in known.iter().enumerate().take(r).skip(1) {
        if r.is_multiple_of(d) {
            poly = divide_exact(&poly, phi);
        }
    }
    poly
}

// Quotient of an exact division by a monic polynomial.
fn divide_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qlen = num.len() - dd;
    let mut quot = vec![0i64; qlen];
    for k in (0..qlen).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[k + j] = checked_sub(rem[k + j], checked_mul(c, dj));
            }
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0), "inexact cyclotomic division");
    quot
}

pub fn euler_phi(r: u32) -> usize {
    assert!(r >= 1);
    let mut n = r;
    let mut result = r;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result as usize
}

fn checked_add(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("cyclotomic coefficient overflow")
}

fn checked_sub(a: i64, b: i64) -> i64 {
    a.checked_sub(b).expect("cyclotomic coefficient overflow")
}

fn checked_mul(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("cyclotomic coefficient overflow")
}

/// An element of `Z[w]` for a fixed order `r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycloInt {
    order: u32,
    coeffs: Vec<i64>,
}

impl CycloInt {
    pub fn from_int(order: u32, value: i64) -> Self {
        assert!(order >= 1, "cyclotomic order must be positive");
        let mut coeffs = vec![0; euler_phi(order)];
        coeffs[0] = value;
        CycloInt { order, coeffs }
    }

    pub fn zero(order: u32) -> Self {
        Self::from_int(order, 0)
    }

    pub fn one(order: u32) -> Self {
        Self::from_int(order, 1)
    }

    /// Builds a value from canonical coordinates; the length must be `phi(order)`.
    pub fn from_coeffs(order: u32, coeffs: Vec<i64>) -> Result<Self, CycloError> {
        if order == 0 {
            return Err(CycloError::ZeroOrder);
        }
        let expected = euler_phi(order);
        if coeffs.len() != expected {
            return Err(CycloError::BadLength {
                order,
                expected,
                got: coeffs.len(),
            });
        }
        Ok(CycloInt { order, coeffs })
    }

    /// Reduces an arbitrary polynomial in `w` (constant term first).
    pub fn from_poly(order: u32, poly: &[i64]) -> Self {
        assert!(order >= 1, "cyclotomic order must be positive");
        let modulus = cyclotomic_polynomial(order);
        let deg = modulus.len() - 1;
        let mut rem = poly.to_vec();
        if rem.len() > deg {
            for k in (deg..rem.len()).rev() {
                let c = rem[k];
                if c == 0 {
                    continue;
                }
                for (j, &m) in modulus.iter().enumerate() {
                    let idx = k - deg + j;
                    rem[idx] = checked_sub(rem[idx], checked_mul(c, m));
                }
            }
        }
        rem.resize(deg, 0);
        CycloInt { order, coeffs: rem }
    }

    /// `w^k`, with `k` taken modulo the order.
    pub fn root_power(order: u32, k: i64) -> Self {
        assert!(order >= 1, "cyclotomic order must be positive");
        let e = k.rem_euclid(order as i64) as usize;
        let mut poly = vec![0i64; e + 1];
        poly[e] = 1;
        Self::from_poly(order, &poly)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.as_integer() == Some(1)
    }

    /// The value as a rational integer, if it is one.
    pub fn as_integer(&self) -> Option<i64> {
        if self.coeffs[1..].iter().all(|&c| c == 0) {
            Some(self.coeffs[0])
        } else {
            None
        }
    }

    fn check(&self, other: &Self) -> Result<(), CycloError> {
        if self.order == other.order {
            Ok(())
        } else {
            Err(CycloError::OrderMismatch(self.order, other.order))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, CycloError> {
        self.check(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| checked_add(a, b))
            .collect();
        Ok(CycloInt {
            order: self.order,
            coeffs,
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, CycloError> {
        self.check(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| checked_sub(a, b))
            .collect();
        Ok(CycloInt {
            order: self.order,
            coeffs,
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, CycloError> {
        self.check(other)?;
        let d = self.coeffs.len();
        if d == 1 {
            return Ok(CycloInt {
                order: self.order,
                coeffs: vec![checked_mul(self.coeffs[0], other.coeffs[0])],
            });
        }
        let mut prod = vec![0i64; 2 * d - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                prod[i + j] = checked_add(prod[i + j], checked_mul(a, b));
            }
        }
        Ok(Self::from_poly(self.order, &prod))
    }

    pub fn scale(&self, k: i64) -> Self {
        CycloInt {
            order: self.order,
            coeffs: self.coeffs.iter().map(|&c| checked_mul(c, k)).collect(),
        }
    }

    /// Complex conjugation, `w -> w^(r-1)`.
    pub fn conjugate(&self) -> Self {
        if self.coeffs.len() == 1 {
            return self.clone();
        }
        let r = self.order as usize;
        let mut poly = vec![0i64; r];
        for (k, &c) in self.coeffs.iter().enumerate() {
            let e = (r - k) % r;
            poly[e] = checked_add(poly[e], c);
        }
        Self::from_poly(self.order, &poly)
    }

    /// Exact division by a rational integer, `None` when some coefficient is not divisible.
    pub fn div_exact_int(&self, d: i64) -> Option<Self> {
        assert!(d != 0, "division by zero");
        if self.coeffs.iter().any(|&c| c % d != 0) {
            return None;
        }
        Some(CycloInt {
            order: self.order,
            coeffs: self.coeffs.iter().map(|&c| c / d).collect(),
        })
    }

    /// Debug-only numeric value; never used for equality.
    pub fn to_complex(&self) -> (f64, f64) {
        let theta = 2.0 * std::f64::consts::PI / self.order as f64;
        self.coeffs
            .iter()
            .enumerate()
            .fold((0.0, 0.0), |(re, im), (k, &c)| {
                let a = theta * k as f64;
                (re + c as f64 * a.cos(), im + c as f64 * a.sin())
            })
    }

    /// A bare integer for orders 1 and 2, otherwise `{"r": .., "coeffs": [..]}`.
    pub fn to_json(&self) -> Value {
        if self.order <= 2 {
            json!(self.coeffs[0])
        } else {
            json!({ "r": self.order, "coeffs": self.coeffs })
        }
    }

    /// Parses the JSON form; a bare integer is read at the given order.
    pub fn from_json(value: &Value, order: u32) -> Result<Self, CycloError> {
        match value {
            Value::Number(n) => {
                let v = n.as_i64().ok_or_else(|| CycloError::Json(n.to_string()))?;
                if order == 0 {
                    return Err(CycloError::ZeroOrder);
                }
                Ok(Self::from_int(order, v))
            }
            Value::Object(map) => {
                let r = map
                    .get("r")
                    .and_then(Value::as_u64)
                    .ok_or_else(|| CycloError::Json("missing \"r\"".into()))?
                    as u32;
                if r != order {
                    return Err(CycloError::OrderMismatch(r, order));
                }
                let coeffs = map
                    .get("coeffs")
                    .and_then(Value::as_array)
                    .ok_or_else(|| CycloError::Json("missing \"coeffs\"".into()))?
                    .iter()
                    .map(|c| c.as_i64().ok_or_else(|| CycloError::Json(c.to_string())))
                    .collect::<Result<Vec<_>, _>>()?;
                Self::from_coeffs(r, coeffs)
            }
            other => Err(CycloError::Json(other.to_string())),
        }
    }
}

impl fmt::Display for CycloInt {
    /// Polynomial in `w`, highest power first: `w^2-w+1`, `2w`, `-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if c < 0 {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            let a = c.unsigned_abs();
            if k == 0 || a != 1 {
                out.push_str(&a.to_string());
            }
            match k {
                0 => {}
                1 => out.push('w'),
                _ => out.push_str(&format!("w^{k}")),
            }
        }
        f.write_str(&out)
    }
}

impl Add for &CycloInt {
    type Output = CycloInt;
    fn add(self, rhs: &CycloInt) -> CycloInt {
        self.try_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub for &CycloInt {
    type Output = CycloInt;
    fn sub(self, rhs: &CycloInt) -> CycloInt {
        self.try_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Mul for &CycloInt {
    type Output = CycloInt;
    fn mul(self, rhs: &CycloInt) -> CycloInt {
        self.try_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Neg for &CycloInt {
    type Output = CycloInt;
    fn neg(self) -> CycloInt {
        self.scale(-1)
    }
}

impl Add for CycloInt {
    type Output = CycloInt;
    fn add(self, rhs: CycloInt) -> CycloInt {
        &self + &rhs
    }
}

impl Sub for CycloInt {
    type Output = CycloInt;
    fn sub(self, rhs: CycloInt) -> CycloInt {
        &self - &rhs
    }
}

impl Mul for CycloInt {
    type Output = CycloInt;
    fn mul(self, rhs: CycloInt) -> CycloInt {
        &self * &rhs
    }
}

impl Neg for CycloInt {
    type Output = CycloInt;
    fn neg(self) -> CycloInt {
        self.scale(-1)
    }
}
