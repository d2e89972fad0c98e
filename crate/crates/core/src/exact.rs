//! Exact evaluation of the constants that decide stability of the equator map.
//!
//! * `A_k(n) = (-1)^k prod_{i=1..k} (n-2i+1)(2i-1)` appears in `Δ^k u* = A_k(n) r^{-2k} u*`.
//! * `α_k(n)` is the optimal constant of the order-k Hardy inequality.
//! * `P_k(n) = α_k(n) - A_k(n)` for even k and `α_k(n) + A_k(n)` for odd k.
//!
//! Every value is an exact rational. Sign queries go through the integer
//! `2^{2k} P_k(n)`, which is what the threshold search evaluates.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::product::{product, product_of_bigints};

/// Energy order `k` and ball/sphere dimension `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OrderDim {
    pub k: u32,
    pub n: u32,
}

impl OrderDim {
    pub fn new(k: u32, n: u32) -> Result<Self> {
        if k == 0 || n == 0 {
            return Err(Error::InvalidOrderDim { k, n });
        }
        Ok(OrderDim { k, n })
    }

    /// `s = ⌊k/2⌋`, so that `k = 2s` or `k = 2s + 1`.
    pub fn s(&self) -> u32 {
        self.k / 2
    }

    pub fn is_even(&self) -> bool {
        self.k % 2 == 0
    }

    /// The equator map lies in `W^{k,2}(B^n, S^n)` exactly when `n >= 2k+1`.
    pub fn sobolev_admissible(&self) -> bool {
        self.n as u64 >= 2 * self.k as u64 + 1
    }
}

impl fmt::Display for OrderDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(k={}, n={})", self.k, self.n)
    }
}

/// Normalized arbitrary-precision rational.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactScalar(BigRational);

impl ExactScalar {
    pub fn zero() -> Self {
        ExactScalar(BigRational::zero())
    }

    pub fn one() -> Self {
        ExactScalar(BigRational::one())
    }

    pub fn from_integer(v: BigInt) -> Self {
        ExactScalar(BigRational::from_integer(v))
    }

    pub fn from_i64(v: i64) -> Self {
        Self::from_integer(BigInt::from(v))
    }

    /// `numer / denom`, normalized. Panics on a zero denominator.
    pub fn ratio(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Self {
        ExactScalar(BigRational::new(numer.into(), denom.into()))
    }

    pub fn from_rational(r: BigRational) -> Self {
        ExactScalar(r)
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// True when the denominator is a power of two.
    pub fn is_dyadic(&self) -> bool {
        let d = self.denom();
        d.is_positive() && (d & (d - BigInt::one())).is_zero()
    }

    pub fn signum(&self) -> Ordering {
        self.0.cmp(&BigRational::zero())
    }

    pub fn abs(&self) -> Self {
        ExactScalar(self.0.abs())
    }

    pub fn pow(&self, e: i32) -> Self {
        ExactScalar(num_traits::Pow::pow(&self.0, e))
    }

    /// Nearest `f64` (infinite when the magnitude is out of range).
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// The exact value of a finite float; `None` for NaN and infinities.
    pub fn from_f64(x: f64) -> Option<Self> {
        BigRational::from_float(x).map(ExactScalar)
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse exact scalar from {0:?}")]
pub struct ParseExactError(String);

impl FromStr for ExactScalar {
    type Err = ParseExactError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let err = || ParseExactError(s.to_string());
        let s = s.trim();
        match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| err())?;
                let d: BigInt = d.trim().parse().map_err(|_| err())?;
                if d.is_zero() {
                    return Err(err());
                }
                Ok(ExactScalar::ratio(n, d))
            }
            None => Ok(ExactScalar::from_integer(s.parse().map_err(|_| err())?)),
        }
    }
}

impl Serialize for ExactScalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ExactScalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: ExactScalar) -> ExactScalar {
                ExactScalar(self.0.$method(rhs.0))
            }
        }
        impl<'a> $tr<&'a ExactScalar> for &'a ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: &'a ExactScalar) -> ExactScalar {
                ExactScalar((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar(-self.0)
    }
}

impl From<i64> for ExactScalar {
    fn from(v: i64) -> Self {
        ExactScalar::from_i64(v)
    }
}

impl From<BigInt> for ExactScalar {
    fn from(v: BigInt) -> Self {
        ExactScalar::from_integer(v)
    }
}

fn pow2(e: u64) -> BigInt {
    BigInt::one() << e
}

/// `A_k(n)` as an integer, by a balanced product over the k factor pairs.
pub fn a_const_int(k: u32, n: u32) -> BigInt {
    let n = n as i64;
    let p = product((1..=k as i64).map(|i| (n - 2 * i + 1) * (2 * i - 1)));
    if k % 2 == 0 {
        p
    } else {
        -p
    }
}

pub fn a_const(od: OrderDim) -> ExactScalar {
    ExactScalar::from_integer(a_const_int(od.k, od.n))
}

/// `A_k(n)` through `A_{j+1} = -(2j+1)(n-2j-1) A_j`, `A_0 = 1`.
pub fn a_const_recurrence(od: OrderDim) -> ExactScalar {
    let n = od.n as i64;
    let mut acc = BigInt::one();
    for j in 0..od.k as i64 {
        acc *= -(2 * j + 1) * (n - 2 * j - 1);
    }
    ExactScalar::from_integer(acc)
}

/// `2^{2k} α_k(n)`, an integer in every parity case.
pub fn alpha_scaled_int(k: u32, n: u32) -> BigInt {
    let n = n as i64;
    let s = (k / 2) as i64;
    let root = if k % 2 == 0 {
        product((1..=s).map(|i| (n - 4 * i) * (n + 4 * i - 4)))
    } else {
        // k = 1 is the s = 0 case of the odd formula: (n-2)^2 / 4.
        product(std::iter::once(n - 2).chain((1..=s).map(|i| (n - 4 * i - 2) * (n + 4 * i - 2))))
    };
    &root * &root
}

pub fn alpha_const(od: OrderDim) -> ExactScalar {
    ExactScalar::ratio(alpha_scaled_int(od.k, od.n), pow2(2 * od.k as u64))
}

/// Repeated sign evaluations of `P_k(n)` for a fixed `k`.
///
/// Caches `2^{2k} (2k-1)!!`, so each evaluation costs two product trees over
/// `k` small factors.
#[derive(Debug, Clone)]
pub struct ScaledPoly {
    k: u32,
    shifted_odd_factorial: BigInt,
}

impl ScaledPoly {
    pub fn new(k: u32) -> Self {
        let odd = product((1..=k as i64).map(|i| 2 * i - 1));
        ScaledPoly { k, shifted_odd_factorial: odd << (2 * k as u64) }
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// `2^{2k} P_k(n)`.
    pub fn eval(&self, n: u32) -> BigInt {
        let k = self.k as i64;
        let nn = n as i64;
        // P_k = α_k - (-1)^k A_k = α_k - prod (n-2i+1)(2i-1) in both parities.
        let tail = product((1..=k).map(|i| nn - 2 * i + 1));
        alpha_scaled_int(self.k, n) - &self.shifted_odd_factorial * tail
    }

    pub fn sign(&self, n: u32) -> Ordering {
        self.eval(n).sign_ordering()
    }
}

trait SignOrdering {
    fn sign_ordering(&self) -> Ordering;
}

impl SignOrdering for BigInt {
    fn sign_ordering(&self) -> Ordering {
        self.cmp(&BigInt::zero())
    }
}

/// Exact `A_k(n)`, `α_k(n)`, `P_k(n)` and `2^{2k} P_k(n)` for one `(k, n)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilityConstants {
    pub od: OrderDim,
    pub a_k: ExactScalar,
    pub alpha_k: ExactScalar,
    pub p_k: ExactScalar,
    #[serde(with = "bigint_string")]
    pub scaled_p_k: BigInt,
}

impl StabilityConstants {
    pub fn p_sign(&self) -> Ordering {
        self.scaled_p_k.sign_ordering()
    }

    pub fn a_sign(&self) -> Ordering {
        self.a_k.signum()
    }

    /// `P_k(n) >= 0`.
    pub fn is_nonnegative(&self) -> bool {
        self.p_sign() != Ordering::Less
    }
}

pub fn stability_constants(od: OrderDim) -> StabilityConstants {
    let a_int = a_const_int(od.k, od.n);
    let alpha_scaled = alpha_scaled_int(od.k, od.n);
    let shifted_a = &a_int << (2 * od.k as u64);
    let scaled_p_k = if od.is_even() { alpha_scaled - shifted_a } else { alpha_scaled + shifted_a };
    let scale = pow2(2 * od.k as u64);
    StabilityConstants {
        od,
        a_k: ExactScalar::from_integer(a_int),
        alpha_k: alpha_const(od),
        p_k: ExactScalar::ratio(scaled_p_k.clone(), scale),
        scaled_p_k,
    }
}

/// The displayed closed forms `P_1(n) = (n^2-8n+8)/4` and
/// `P_2(n) = (n-4)^2 n^2 / 16 - 3(n-3)(n-1)`.
pub fn p1_p2_closed_forms(n: i64) -> (ExactScalar, ExactScalar) {
    let p1 = ExactScalar::ratio(n * n - 8 * n + 8, 4);
    let p2 = ExactScalar::ratio((n - 4) * (n - 4) * n * n, 16) - ExactScalar::from_i64(3 * (n - 3) * (n - 1));
    (p1, p2)
}

/// Step factors relating consecutive dimensions:
/// `α_k(N+1) = α_k(N) prod γ_i` and `|A_k(N+1)| = |A_k(N)| prod β_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatioFactors {
    pub k: u32,
    pub big_n: u32,
    pub gamma: Vec<ExactScalar>,
    pub beta: Vec<ExactScalar>,
    /// Odd k: the factors come from the odd form of `α_k` by analogy with the even case.
    pub derived_by_analogy: bool,
}

impl RatioFactors {
    pub fn gamma_product(&self) -> ExactScalar {
        product_of_scalars(&self.gamma)
    }

    pub fn beta_product(&self) -> ExactScalar {
        product_of_scalars(&self.beta)
    }
}

/// Numerators and denominators multiplied separately, normalized once.
fn product_of_scalars(xs: &[ExactScalar]) -> ExactScalar {
    let numer = product_of_bigints(xs.iter().map(|x| x.numer().clone()).collect());
    let denom = product_of_bigints(xs.iter().map(|x| x.denom().clone()).collect());
    ExactScalar::ratio(numer, denom)
}

/// `γ_i = (N+1-2k+4i)^2 / (N-2k+4i)^2`, `β_i = (N-2k+2+2i) / (N-2k+1+2i)`, `i = 0..k-1`.
///
/// For `k = 2s` these are the factors `(N+1-4s+4i)^2/(N-4s+4i)^2` and
/// `(N-4s+2+2i)/(N-4s+1+2i)`. Requires `N > 2k+1`.
pub fn ratio_factors(k: u32, big_n: u32) -> Result<RatioFactors> {
    if k == 0 || big_n as u64 <= 2 * k as u64 + 1 {
        return Err(Error::RatioDomain { k, big_n });
    }
    let base = big_n as i64 - 2 * k as i64;
    let mut gamma = Vec::with_capacity(k as usize);
    let mut beta = Vec::with_capacity(k as usize);
    for i in 0..k as i64 {
        let num = base + 1 + 4 * i;
        let den = base + 4 * i;
        gamma.push(ExactScalar::ratio(num * num, den * den));
        beta.push(ExactScalar::ratio(base + 2 + 2 * i, base + 1 + 2 * i));
    }
    Ok(RatioFactors { k, big_n, gamma, beta, derived_by_analogy: k % 2 == 1 })
}

pub(crate) mod bigint_string {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
