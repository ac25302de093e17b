//! Ordered-field scalars.
//!
//! Two backends implement [`Scalar`]:
//! - [`Q5`]: exact arithmetic in the quadratic field Q(√5), values `p + q·√5`
//!   with arbitrary-precision rational `p`, `q`. Every constant of the golden
//!   house lives here, so its predicates are decided without tolerances.
//! - [`F64`]: machine reals; every sign decision treats `|x| <= F64::EPS` as zero.
//!
//! Geometry and LP code is written once against the trait and only ever asks a
//! scalar for its sign, so the exact backend is exact end to end.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};

use crate::error::ParseScalarError;

pub trait Scalar:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialEq
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// Whether every sign decision is exact.
    const EXACT: bool;
    /// Backend tag used in the polygon JSON schema.
    const NAME: &'static str;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn from_ratio(num: i64, den: i64) -> Self;
    /// Exact conversion for the exact backend (every finite f64 is a dyadic rational).
    fn from_f64(v: f64) -> Self;
    fn sqrt5() -> Self;
    fn to_f64(&self) -> f64;
    /// Sign of the value; the float backend snaps `|x| <= EPS` to `Equal`.
    fn sign(&self) -> Ordering;
    /// Square root inside the backend, `None` for negative input or when the
    /// root is not an element of the field.
    fn try_sqrt(&self) -> Option<Self>;
    /// Exact total order, used for sorting only (never for predicates).
    fn exact_cmp(&self, other: &Self) -> Ordering;

    fn phi() -> Self {
        (Self::one() + Self::sqrt5()) / Self::from_i64(2)
    }

    fn cmp_s(&self, other: &Self) -> Ordering {
        (self.clone() - other.clone()).sign()
    }

    fn eq_s(&self, other: &Self) -> bool {
        self.cmp_s(other) == Ordering::Equal
    }

    fn is_zero_s(&self) -> bool {
        self.sign() == Ordering::Equal
    }

    fn is_pos(&self) -> bool {
        self.sign() == Ordering::Greater
    }

    fn is_neg(&self) -> bool {
        self.sign() == Ordering::Less
    }

    fn abs_s(&self) -> Self {
        if self.is_neg() {
            -self.clone()
        } else {
            self.clone()
        }
    }

    fn max_s(self, other: Self) -> Self {
        if other.cmp_s(&self) == Ordering::Greater {
            other
        } else {
            self
        }
    }

    fn min_s(self, other: Self) -> Self {
        if other.cmp_s(&self) == Ordering::Less {
            other
        } else {
            self
        }
    }

    fn half(&self) -> Self {
        self.clone() / Self::from_i64(2)
    }

    fn recip(&self) -> Self {
        Self::one() / self.clone()
    }
}

// ---------------------------------------------------------------------------
// Float backend

/// Machine real with a fixed comparison tolerance.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct F64(pub f64);

impl F64 {
    /// Absolute tolerance of every predicate on this backend.
    pub const EPS: f64 = 1e-9;
}

impl fmt::Display for F64 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

macro_rules! f64_binop {
    ($tr:ident, $method:ident, $op:tt) => {
        impl $tr for F64 {
            type Output = F64;
            #[inline]
            fn $method(self, rhs: F64) -> F64 {
                F64(self.0 $op rhs.0)
            }
        }
    };
}

f64_binop!(Add, add, +);
f64_binop!(Sub, sub, -);
f64_binop!(Mul, mul, *);
f64_binop!(Div, div, /);

impl Neg for F64 {
    type Output = F64;
    #[inline]
    fn neg(self) -> F64 {
        F64(-self.0)
    }
}

impl Scalar for F64 {
    const EXACT: bool = false;
    const NAME: &'static str = "f64";

    fn zero() -> Self {
        F64(0.0)
    }
    fn one() -> Self {
        F64(1.0)
    }
    fn from_i64(v: i64) -> Self {
        F64(v as f64)
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        F64(num as f64 / den as f64)
    }
    fn from_f64(v: f64) -> Self {
        F64(v)
    }
    fn sqrt5() -> Self {
        F64(5f64.sqrt())
    }
    fn to_f64(&self) -> f64 {
        self.0
    }
    fn sign(&self) -> Ordering {
        if self.0 > Self::EPS {
            Ordering::Greater
        } else if self.0 < -Self::EPS {
            Ordering::Less
        } else {
            Ordering::Equal
        }
    }
    fn try_sqrt(&self) -> Option<Self> {
        match self.sign() {
            Ordering::Less => None,
            Ordering::Equal => Some(F64(self.0.max(0.0).sqrt())),
            Ordering::Greater => Some(F64(self.0.sqrt())),
        }
    }
    fn exact_cmp(&self, other: &Self) -> Ordering {
        self.0.total_cmp(&other.0)
    }
}

// ---------------------------------------------------------------------------
// Exact backend

/// Exact element `p + q·√5` of Q(√5).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Q5 {
    p: BigRational,
    q: BigRational,
}

impl Q5 {
    pub fn new(p: BigRational, q: BigRational) -> Self {
        Q5 { p, q }
    }

    pub fn rational(p: BigRational) -> Self {
        Q5 {
            p,
            q: BigRational::zero(),
        }
    }

    /// Rational part.
    pub fn p(&self) -> &BigRational {
        &self.p
    }

    /// Coefficient of √5.
    pub fn q(&self) -> &BigRational {
        &self.q
    }

    pub fn is_rational(&self) -> bool {
        self.q.is_zero()
    }

    /// Field norm `p² − 5q²`.
    pub fn norm(&self) -> BigRational {
        &self.p * &self.p - BigRational::from_integer(5.into()) * &self.q * &self.q
    }

    fn conj(&self) -> Q5 {
        Q5 {
            p: self.p.clone(),
            q: -self.q.clone(),
        }
    }
}

fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer();
    let d = r.denom();
    let sn = n.sqrt();
    let sd = d.sqrt();
    if &(&sn * &sn) == n && &(&sd * &sd) == d {
        Some(BigRational::new(sn, sd))
    } else {
        None
    }
}

fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn parse_rational(s: &str) -> Result<BigRational, ParseScalarError> {
    let s = s.trim();
    let bad = || ParseScalarError(s.to_string());
    if s.is_empty() {
        return Err(bad());
    }
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => {
            let n: BigInt = s.parse().map_err(|_| bad())?;
            Ok(BigRational::from_integer(n))
        }
    }
}

/// Canonical text form: `P` when the √5 part vanishes, else `P+Q*r5` or
/// `P-Q*r5`, rationals written `n` or `n/d` in lowest terms.
impl fmt::Display for Q5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = format_rational(&self.p);
        if self.q.is_zero() {
            return write!(f, "{p}");
        }
        if self.q.is_negative() {
            write!(f, "{p}-{}*r5", format_rational(&-self.q.clone()))
        } else {
            write!(f, "{p}+{}*r5", format_rational(&self.q))
        }
    }
}

impl FromStr for Q5 {
    type Err = ParseScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let Some(body) = t.strip_suffix("r5") else {
            return parse_rational(&t).map(Q5::rational);
        };
        let body = body.strip_suffix('*').unwrap_or(body);
        // split position: last sign that is not the leading one
        let split = body
            .char_indices()
            .rev()
            .find(|&(i, c)| i > 0 && (c == '+' || c == '-'))
            .map(|(i, _)| i);
        let (p, q) = match split {
            Some(i) => (parse_rational(&body[..i])?, {
                let qs = &body[i..];
                let qs = qs.strip_prefix('+').unwrap_or(qs);
                coefficient(qs).ok_or_else(|| ParseScalarError(s.to_string()))?
            }),
            None => (
                BigRational::zero(),
                coefficient(body).ok_or_else(|| ParseScalarError(s.to_string()))?,
            ),
        };
        Ok(Q5 { p, q })
    }
}

/// Coefficient in front of `r5`; empty or a bare sign means ±1.
fn coefficient(s: &str) -> Option<BigRational> {
    match s {
        "" | "+" => Some(BigRational::one()),
        "-" => Some(-BigRational::one()),
        _ => parse_rational(s).ok(),
    }
}

impl Add for Q5 {
    type Output = Q5;
    fn add(self, rhs: Q5) -> Q5 {
        Q5 {
            p: self.p + rhs.p,
            q: self.q + rhs.q,
        }
    }
}

impl Sub for Q5 {
    type Output = Q5;
    fn sub(self, rhs: Q5) -> Q5 {
        Q5 {
            p: self.p - rhs.p,
            q: self.q - rhs.q,
        }
    }
}

impl Mul for Q5 {
    type Output = Q5;
    fn mul(self, rhs: Q5) -> Q5 {
        let five = BigRational::from_integer(5.into());
        Q5 {
            p: &self.p * &rhs.p + five * &self.q * &rhs.q,
            q: &self.p * &rhs.q + &self.q * &rhs.p,
        }
    }
}

impl Div for Q5 {
    type Output = Q5;
    fn div(self, rhs: Q5) -> Q5 {
        let n = rhs.norm();
        assert!(!n.is_zero(), "division by zero in Q(sqrt 5)");
        let num = self * rhs.conj();
        Q5 {
            p: num.p / &n,
            q: num.q / &n,
        }
    }
}

impl Neg for Q5 {
    type Output = Q5;
    fn neg(self) -> Q5 {
        Q5 {
            p: -self.p,
            q: -self.q,
        }
    }
}

impl Scalar for Q5 {
    const EXACT: bool = true;
    const NAME: &'static str = "q5";

    fn zero() -> Self {
        Q5::rational(BigRational::zero())
    }
    fn one() -> Self {
        Q5::rational(BigRational::one())
    }
    fn from_i64(v: i64) -> Self {
        Q5::rational(BigRational::from_integer(v.into()))
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        Q5::rational(BigRational::new(num.into(), den.into()))
    }
    fn from_f64(v: f64) -> Self {
        Q5::rational(BigRational::from_float(v).expect("finite float"))
    }
    fn sqrt5() -> Self {
        Q5::new(BigRational::zero(), BigRational::one())
    }
    fn to_f64(&self) -> f64 {
        let p = self.p.to_f64().unwrap_or(f64::NAN);
        let q = self.q.to_f64().unwrap_or(f64::NAN);
        p + q * 5f64.sqrt()
    }

    fn sign(&self) -> Ordering {
        let sp = sign_of(&self.p);
        let sq = sign_of(&self.q);
        match (sp, sq) {
            (s, Ordering::Equal) => s,
            (Ordering::Equal, s) => s,
            (a, b) if a == b => a,
            _ => {
                let p2 = &self.p * &self.p;
                let q2 = BigRational::from_integer(5.into()) * &self.q * &self.q;
                if p2 > q2 {
                    sp
                } else {
                    sq
                }
            }
        }
    }

    fn try_sqrt(&self) -> Option<Self> {
        match self.sign() {
            Ordering::Less => return None,
            Ordering::Equal => return Some(Q5::zero()),
            Ordering::Greater => {}
        }
        if self.q.is_zero() {
            if let Some(r) = rational_sqrt(&self.p) {
                return Some(Q5::rational(r));
            }
            let over5 = &self.p / BigRational::from_integer(5.into());
            return rational_sqrt(&over5).map(|y| Q5::new(BigRational::zero(), y));
        }
        // (x + y√5)² = p + q√5  ⇒  x² ∈ {(p ± √N)/2}, N = p² − 5q², y = q / 2x
        let r = rational_sqrt(&self.norm())?;
        let two = BigRational::from_integer(2.into());
        for x2 in [(&self.p + &r) / &two, (&self.p - &r) / &two] {
            let Some(x) = rational_sqrt(&x2) else { continue };
            if x.is_zero() {
                continue;
            }
            let y = &self.q / (&two * &x);
            let cand = Q5::new(x, y);
            if cand.clone() * cand.clone() == *self {
                return Some(if cand.is_neg() { -cand } else { cand });
            }
        }
        None
    }

    fn exact_cmp(&self, other: &Self) -> Ordering {
        (self.clone() - other.clone()).sign()
    }
}

fn sign_of(r: &BigRational) -> Ordering {
    if r.is_zero() {
        Ordering::Equal
    } else if r.is_positive() {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}
