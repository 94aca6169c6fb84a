//! Closed-form extremal bounds as exact values.
//!
//! Every bound is either a reduced rational or a radical `(a + b·c^(1/k)) / d`
//! with integer parts. Comparisons against integer edge counts never go
//! through floating point.

use alloc::string::String;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::{to_f64, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BoundError {
    #[error("epsilon is out of range: {0}")]
    EpsOutOfRange(&'static str),
    #[error("chromatic number must be at least 2 (bipartite patterns are not covered by this bound)")]
    ChiTooSmall,
    #[error("bad parameters: {0}")]
    BadParams(&'static str),
    #[error("missing parameter --{0}")]
    MissingParam(&'static str),
    #[error("unknown bound `{0}`")]
    UnknownBound(String),
}

/// An exact bound value.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BoundValue {
    Rational(Rational),
    /// `(a + b·c^(1/root)) / d` with `d > 0`, `c >= 2` free of `root`-th
    /// powers and `gcd(a, b, d) = 1`.
    Radical { a: i128, b: i128, c: i128, root: u32, d: i128 },
}

fn pow_checked(x: i128, e: u32) -> Option<i128> {
    (0..e).try_fold(1i128, |acc, _| acc.checked_mul(x))
}

impl BoundValue {
    pub fn rational(q: Rational) -> Self {
        BoundValue::Rational(q)
    }

    pub fn integer(v: i128) -> Self {
        BoundValue::Rational(Rational::from_integer(v))
    }

    /// `(a + b·c^(1/root)) / d` in canonical form; collapses to a rational
    /// when the root is exact. Returns `None` on overflow.
    pub fn radical(a: i128, b: i128, c: i128, root: u32, d: i128) -> Option<Self> {
        assert!(d != 0, "zero denominator");
        assert!(c >= 0, "negative radicand");
        assert!(root >= 1, "zero root index");
        let (mut a, mut b, mut c, mut d) = (a, b, c, d);
        if d < 0 {
            (a, b, d) = (-a, -b, -d);
        }
        if root == 1 {
            return Some(BoundValue::Rational(Rational::new(a.checked_add(b.checked_mul(c)?)?, d)));
        }
        // pull out the largest perfect root-th power dividing c
        let mut f = 2i128;
        while let Some(fp) = pow_checked(f, root) {
            if fp > c {
                break;
            }
            while c % fp == 0 {
                c /= fp;
                b = b.checked_mul(f)?;
            }
            f += 1;
        }
        if c <= 1 || b == 0 {
            let num = if c == 1 { a.checked_add(b)? } else { a };
            return Some(BoundValue::Rational(Rational::new(num, d)));
        }
        let g = a.gcd(&b).gcd(&d);
        Some(BoundValue::Radical { a: a / g, b: b / g, c, root, d: d / g })
    }

    /// Presentation-only float.
    pub fn float_view(&self) -> f64 {
        match self {
            BoundValue::Rational(q) => to_f64(q),
            &BoundValue::Radical { a, b, c, root, d } => {
                let x = match root {
                    2 => libm::sqrt(c as f64),
                    3 => libm::cbrt(c as f64),
                    _ => libm::pow(c as f64, 1.0 / root as f64),
                };
                (a as f64 + b as f64 * x) / d as f64
            }
        }
    }

    /// Largest integer not exceeding the bound.
    pub fn floor(&self) -> i128 {
        match self {
            BoundValue::Rational(q) => q.floor().to_integer(),
            &BoundValue::Radical { .. } => {
                let mut m = libm::floor(self.float_view()) as i128;
                while !check_bound_i128(m, self) {
                    m -= 1;
                }
                while check_bound_i128(m + 1, self) {
                    m += 1;
                }
                m
            }
        }
    }

    pub fn as_rational(&self) -> Option<Rational> {
        match self {
            BoundValue::Rational(q) => Some(*q),
            BoundValue::Radical { .. } => None,
        }
    }
}

impl fmt::Display for BoundValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundValue::Rational(q) => write!(f, "{q}"),
            &BoundValue::Radical { a, b, c, root, d } => {
                let surd = |f: &mut fmt::Formatter<'_>| match root {
                    2 => write!(f, "sqrt({c})"),
                    _ => write!(f, "{c}^(1/{root})"),
                };
                let wrap = d != 1 && a != 0;
                if wrap {
                    f.write_str("(")?;
                }
                if a != 0 {
                    write!(f, "{a} {} ", if b < 0 { '-' } else { '+' })?;
                } else if b < 0 {
                    f.write_str("-")?;
                }
                if b.abs() != 1 {
                    write!(f, "{}*", b.abs())?;
                }
                surd(f)?;
                if wrap {
                    f.write_str(")")?;
                }
                if d != 1 {
                    write!(f, "/{d}")?;
                }
                Ok(())
            }
        }
    }
}

/// Exact `m <= bound`.
///
/// Radicals are compared by isolating the root term and raising both sides
/// to the root index in arbitrary precision, with signs handled first.
pub fn check_bound(m: u128, bound: &BoundValue) -> bool {
    match i128::try_from(m) {
        Ok(m) => check_bound_i128(m, bound),
        Err(_) => false,
    }
}

fn check_bound_i128(m: i128, bound: &BoundValue) -> bool {
    match bound {
        BoundValue::Rational(q) => BigInt::from(m) * BigInt::from(*q.denom()) <= BigInt::from(*q.numer()),
        &BoundValue::Radical { a, b, c, root, d } => {
            // m <= (a + b·x)/d with d > 0  <=>  m·d - a <= b·x, x = c^(1/root) >= 0
            let lhs = BigInt::from(m) * BigInt::from(d) - BigInt::from(a);
            let b = BigInt::from(b);
            let c = BigInt::from(c);
            if !b.is_negative() {
                !lhs.is_positive() || lhs.pow(root) <= b.pow(root) * c
            } else {
                // need -lhs >= |b|·x >= 0
                let neg = -lhs;
                !neg.is_negative() && neg.pow(root) >= b.abs().pow(root) * c
            }
        }
    }
}

fn eps_below_inverse(eps: &Rational, r: usize) -> Result<(), BoundError> {
    if *eps <= Rational::zero() {
        return Err(BoundError::EpsOutOfRange("need eps > 0"));
    }
    if *eps >= Rational::new(1, r as i128) {
        return Err(BoundError::EpsOutOfRange("need eps < 1/r"));
    }
    Ok(())
}

fn half_square(n: usize) -> Rational {
    let n = n as i128;
    Rational::new(n * n, 2)
}

/// `n²/4`, the triangle-free bound.
pub fn mantel_bound(n: usize) -> BoundValue {
    let n = n as i128;
    BoundValue::Rational(Rational::new(n * n, 4))
}

/// `(n²/2)(1 - 1/r)`, the `K_{r+1}`-free bound.
pub fn turan_bound(n: usize, r: usize) -> Result<BoundValue, BoundError> {
    if r == 0 {
        return Err(BoundError::BadParams("turan bound needs r >= 1"));
    }
    let r = r as i128;
    Ok(BoundValue::Rational(half_square(n) * Rational::new(r - 1, r)))
}

/// The explicit form from the star-counting argument for `K_{r,t}`-free graphs:
/// `½(t-1)^(1/r)·n^(2-1/r) + n(r-1)/2`, i.e. `(n(r-1) + n·((t-1)n^(r-1))^(1/r)) / 2`.
pub fn kst_bound(n: usize, r: usize, t: usize) -> Result<BoundValue, BoundError> {
    if r == 0 || r > t {
        return Err(BoundError::BadParams("kst bound needs 1 <= r <= t"));
    }
    let overflow = BoundError::BadParams("kst bound parameters overflow exact arithmetic");
    let (n, r_, t) = (n as i128, r as i128, t as i128);
    let radicand = pow_checked(n, r as u32 - 1)
        .and_then(|p| p.checked_mul(t - 1))
        .ok_or(overflow.clone())?;
    BoundValue::radical(n * (r_ - 1), n, radicand, r as u32, 2).ok_or(overflow)
}

/// `(n/4)(sqrt(4n-3) + 1)`, the `C4`-free bound.
pub fn erdos_c4_bound(n: usize) -> Result<BoundValue, BoundError> {
    if n == 0 {
        return Err(BoundError::BadParams("c4 bound needs n >= 1"));
    }
    let n = n as i128;
    Ok(BoundValue::radical(n, n, 4 * n - 3, 2, 4).expect("small values"))
}

/// `c·n^(1 + 1/k)` with the constant `c` supplied by the caller.
pub fn bondy_simonovits_bound(n: usize, k: usize, c: Rational) -> Result<BoundValue, BoundError> {
    if k < 2 {
        return Err(BoundError::BadParams("bondy-simonovits bound needs k >= 2"));
    }
    if c.is_negative() {
        return Err(BoundError::BadParams("constant c must be nonnegative"));
    }
    let overflow = BoundError::BadParams("bondy-simonovits parameters overflow exact arithmetic");
    let n = n as i128;
    let b = c.numer().checked_mul(n).ok_or(overflow.clone())?;
    BoundValue::radical(0, b, n, k as u32, *c.denom()).ok_or(overflow)
}

/// `(n²/2)(1 - 1/(chi-1) + eps)`.
pub fn ess_bound(n: usize, chi: usize, eps: Rational) -> Result<BoundValue, BoundError> {
    if chi < 2 {
        return Err(BoundError::ChiTooSmall);
    }
    if eps.is_negative() {
        return Err(BoundError::EpsOutOfRange("need eps >= 0"));
    }
    let density = Rational::one() - Rational::new(1, chi as i128 - 1) + eps;
    Ok(BoundValue::Rational(half_square(n) * density))
}

/// `(1 - 1/r + eps)·n²/2`, the edge count that forces `r+1` pairwise complete `t`-sets.
pub fn lemma_threshold(n: usize, r: usize, eps: Rational) -> Result<BoundValue, BoundError> {
    if r == 0 {
        return Err(BoundError::BadParams("lemma threshold needs r >= 1"));
    }
    eps_below_inverse(&eps, r)?;
    let density = Rational::one() - Rational::new(1, r as i128) + eps;
    Ok(BoundValue::Rational(half_square(n) * density))
}

/// Which closed form to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundKind {
    Mantel,
    Turan,
    Kst,
    ErdosC4,
    BondySimonovits,
    Ess,
    LemmaThreshold,
}

impl BoundKind {
    pub const ALL: [BoundKind; 7] = [
        BoundKind::Mantel,
        BoundKind::Turan,
        BoundKind::Kst,
        BoundKind::ErdosC4,
        BoundKind::BondySimonovits,
        BoundKind::Ess,
        BoundKind::LemmaThreshold,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BoundKind::Mantel => "mantel",
            BoundKind::Turan => "turan",
            BoundKind::Kst => "kst",
            BoundKind::ErdosC4 => "c4",
            BoundKind::BondySimonovits => "bondy-simonovits",
            BoundKind::Ess => "ess",
            BoundKind::LemmaThreshold => "lemma",
        }
    }
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BoundKind {
    type Err = BoundError;

    fn from_str(s: &str) -> Result<Self, BoundError> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "mantel" => BoundKind::Mantel,
            "turan" => BoundKind::Turan,
            "kst" => BoundKind::Kst,
            "c4" | "erdos-c4" | "erdos" => BoundKind::ErdosC4,
            "bondy-simonovits" | "bs" => BoundKind::BondySimonovits,
            "ess" => BoundKind::Ess,
            "lemma" | "lemma-threshold" => BoundKind::LemmaThreshold,
            _ => return Err(BoundError::UnknownBound(s.into())),
        })
    }
}

/// Parameters shared by all bounds; each bound reads only the ones it needs.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BoundParams {
    pub n: Option<usize>,
    pub r: Option<usize>,
    pub t: Option<usize>,
    pub k: Option<usize>,
    pub eps: Option<Rational>,
    pub c: Option<Rational>,
    pub chi: Option<usize>,
}

impl BoundParams {
    pub fn evaluate(&self, kind: BoundKind) -> Result<BoundValue, BoundError> {
        fn need<T: Clone>(v: &Option<T>, name: &'static str) -> Result<T, BoundError> {
            v.clone().ok_or(BoundError::MissingParam(name))
        }
        let n = need(&self.n, "n")?;
        match kind {
            BoundKind::Mantel => Ok(mantel_bound(n)),
            BoundKind::Turan => turan_bound(n, need(&self.r, "r")?),
            BoundKind::Kst => kst_bound(n, need(&self.r, "r")?, need(&self.t, "t")?),
            BoundKind::ErdosC4 => erdos_c4_bound(n),
            BoundKind::BondySimonovits => bondy_simonovits_bound(n, need(&self.k, "k")?, need(&self.c, "c")?),
            BoundKind::Ess => ess_bound(n, need(&self.chi, "chi")?, need(&self.eps, "eps")?),
            BoundKind::LemmaThreshold => lemma_threshold(n, need(&self.r, "r")?, need(&self.eps, "eps")?),
        }
    }
}
