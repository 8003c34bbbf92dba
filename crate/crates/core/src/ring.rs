//! Finite chain rings with prime residue field.
//!
//! Two flavors are supported: the integers modulo `p^e` (uniformizer `γ = p`)
//! and the truncated power series ring `F_p[γ]/(γ^e)`. Elements of both are
//! stored as a single `u64` holding the γ-adic digits `a_0 + a_1 p + … `
//! packed base `p`, so the packed value is canonical in either flavor and
//! truncation, lifting and multiplication by powers of γ act identically on
//! it. Only addition and multiplication differ between the flavors.

use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Flavor {
    /// `Z_{p^e}`, characteristic `p^e`, `γ = p`.
    #[serde(rename = "zpe")]
    IntegerModular,
    /// `F_p[γ]/(γ^e)`, characteristic `p`.
    #[serde(rename = "fpgamma")]
    SeriesTruncated,
}

impl Flavor {
    pub fn tag(self) -> &'static str {
        match self {
            Flavor::IntegerModular => "zpe",
            Flavor::SeriesTruncated => "fpg",
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// A finite chain ring `R_e` with residue field `F_p`.
///
/// For `e = 1` both flavors are the field `F_p`; equality and hashing treat
/// them as the same ring.
#[derive(Clone, Copy, Debug)]
pub struct ChainRing {
    p: u64,
    e: u32,
    flavor: Flavor,
    size: u64,
}

impl PartialEq for ChainRing {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.e == other.e && (self.e == 1 || self.flavor == other.flavor)
    }
}

impl Eq for ChainRing {}

impl Hash for ChainRing {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.p.hash(state);
        self.e.hash(state);
        if self.e > 1 {
            self.flavor.hash(state);
        }
    }
}

impl fmt::Display for ChainRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.flavor, self.e) {
            (_, 1) => write!(f, "F_{}", self.p),
            (Flavor::IntegerModular, e) => write!(f, "Z_{}^{}", self.p, e),
            (Flavor::SeriesTruncated, e) => write!(f, "F_{}[g]/(g^{})", self.p, e),
        }
    }
}

impl ChainRing {
    pub fn new(p: u64, e: u32, flavor: Flavor) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if e < 1 {
            return Err(Error::BadNilpotency(e));
        }
        let size = p.checked_pow(e).ok_or(Error::RingTooLarge { p, e })?;
        Ok(ChainRing { p, e, flavor, size })
    }

    pub fn zpe(p: u64, e: u32) -> Result<Self> {
        Self::new(p, e, Flavor::IntegerModular)
    }

    pub fn fpgamma(p: u64, e: u32) -> Result<Self> {
        Self::new(p, e, Flavor::SeriesTruncated)
    }

    /// The prime field `F_p`.
    pub fn field(p: u64) -> Result<Self> {
        Self::new(p, 1, Flavor::IntegerModular)
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn e(&self) -> u32 {
        self.e
    }

    #[inline]
    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    /// `|R| = p^e`.
    #[inline]
    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn is_field(&self) -> bool {
        self.e == 1
    }

    /// Characteristic: `p^e` for `Z_{p^e}`, `p` for the series flavor.
    pub fn characteristic(&self) -> u64 {
        match self.flavor {
            Flavor::IntegerModular => self.size,
            Flavor::SeriesTruncated => self.p,
        }
    }

    /// The same ring family at another precision.
    pub fn with_precision(&self, e: u32) -> Result<Self> {
        Self::new(self.p, e, self.flavor)
    }

    pub fn residue_field(&self) -> Self {
        ChainRing {
            p: self.p,
            e: 1,
            flavor: self.flavor,
            size: self.p,
        }
    }

    /// Checks that `other` is this ring, reporting a mismatch otherwise.
    pub fn ensure_same(&self, other: &ChainRing) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch(self.to_string(), other.to_string()))
        }
    }

    /// Same `p` and flavor (precision may differ). The residue field is
    /// compatible with both flavors.
    pub fn same_family(&self, other: &ChainRing) -> bool {
        self.p == other.p && (self.flavor == other.flavor || self.e == 1 || other.e == 1)
    }

    pub fn elem(&self, value: u64) -> RingElement {
        debug_assert!(value < self.size);
        RingElement { ring: *self, value }
    }

    // ---- raw arithmetic on packed values ----

    #[inline]
    pub fn zero(&self) -> u64 {
        0
    }

    #[inline]
    pub fn one(&self) -> u64 {
        1
    }

    /// `γ^k`, zero once `k ≥ e`.
    #[inline]
    pub fn gamma_pow(&self, k: u32) -> u64 {
        if k >= self.e {
            0
        } else {
            self.p.pow(k)
        }
    }

    /// Image of an integer under `Z → R`.
    pub fn from_int(&self, n: i64) -> u64 {
        let m = self.characteristic() as i128;
        (n as i128).rem_euclid(m) as u64
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        match self.flavor {
            Flavor::IntegerModular => {
                let s = a + b;
                if s >= self.size {
                    s - self.size
                } else {
                    s
                }
            }
            Flavor::SeriesTruncated => {
                if self.e == 1 {
                    let s = a + b;
                    return if s >= self.p { s - self.p } else { s };
                }
                let p = self.p;
                let (mut a, mut b) = (a, b);
                let mut out = 0u64;
                let mut scale = 1u64;
                while a > 0 || b > 0 {
                    let mut d = a % p + b % p;
                    if d >= p {
                        d -= p;
                    }
                    out += d * scale;
                    a /= p;
                    b /= p;
                    scale = scale.wrapping_mul(p);
                }
                out
            }
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        match self.flavor {
            Flavor::IntegerModular => {
                if a == 0 {
                    0
                } else {
                    self.size - a
                }
            }
            Flavor::SeriesTruncated => {
                let p = self.p;
                let mut a = a;
                let mut out = 0u64;
                let mut scale = 1u64;
                while a > 0 {
                    let d = a % p;
                    if d != 0 {
                        out += (p - d) * scale;
                    }
                    a /= p;
                    scale = scale.wrapping_mul(p);
                }
                out
            }
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        if a == 0 || b == 0 {
            return 0;
        }
        match self.flavor {
            Flavor::IntegerModular => ((a as u128 * b as u128) % self.size as u128) as u64,
            Flavor::SeriesTruncated => {
                if self.e == 1 {
                    return ((a as u128 * b as u128) % self.p as u128) as u64;
                }
                let e = self.e as usize;
                let da = self.digits(a);
                let db = self.digits(b);
                let p = self.p as u128;
                let mut out = 0u64;
                let mut scale = 1u64;
                for k in 0..e {
                    let mut acc: u128 = 0;
                    for i in 0..=k {
                        acc += da[i] as u128 * db[k - i] as u128;
                    }
                    out += (acc % p) as u64 * scale;
                    scale = scale.wrapping_mul(self.p);
                }
                out
            }
        }
    }

    pub fn pow(&self, a: u64, mut k: u64) -> u64 {
        let mut base = a;
        let mut acc = 1 % self.size;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// `γ^k · a`.
    #[inline]
    pub fn mul_gamma_pow(&self, a: u64, k: u32) -> u64 {
        if k >= self.e {
            return 0;
        }
        ((a as u128 * self.p.pow(k) as u128) % self.size as u128) as u64
    }

    /// `a / γ^k`, the canonical quotient obtained by dropping the lowest `k`
    /// digits. Exact when `valuation(a) ≥ k`.
    #[inline]
    pub fn div_gamma_pow(&self, a: u64, k: u32) -> u64 {
        if k >= self.e {
            return 0;
        }
        a / self.p.pow(k)
    }

    /// Keeps digits `0..i`, i.e. the canonical residue modulo `γ^i`.
    #[inline]
    pub fn truncate(&self, a: u64, i: u32) -> u64 {
        if i >= self.e {
            a
        } else {
            a % self.p.pow(i)
        }
    }

    #[inline]
    pub fn digit(&self, a: u64, l: u32) -> u64 {
        (a / self.p.pow(l)) % self.p
    }

    /// The γ-adic digit vector `(a_0, …, a_{e-1})`.
    pub fn digits(&self, mut a: u64) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.e as usize);
        for _ in 0..self.e {
            out.push(a % self.p);
            a /= self.p;
        }
        out
    }

    pub fn from_digits(&self, digits: &[u64]) -> Result<u64> {
        if digits.len() > self.e as usize {
            return Err(Error::LengthMismatch {
                expected: self.e as usize,
                got: digits.len(),
            });
        }
        let mut v = 0u64;
        for &d in digits.iter().rev() {
            if d >= self.p {
                return Err(Error::BadDigit { digit: d, p: self.p });
            }
            v = v * self.p + d;
        }
        Ok(v)
    }

    #[inline]
    pub fn is_unit(&self, a: u64) -> bool {
        a % self.p != 0
    }

    /// Least `l` with `a_l ≠ 0`; `e` for zero.
    #[inline]
    pub fn valuation(&self, mut a: u64) -> u32 {
        if a == 0 {
            return self.e;
        }
        let mut l = 0;
        while a % self.p == 0 {
            a /= self.p;
            l += 1;
        }
        l
    }

    pub fn inv(&self, a: u64) -> Result<u64> {
        if !self.is_unit(a) {
            return Err(Error::NonUnit);
        }
        Ok(match self.flavor {
            Flavor::IntegerModular => mod_inverse(a, self.size),
            Flavor::SeriesTruncated if self.e == 1 => mod_inverse(a, self.p),
            Flavor::SeriesTruncated => {
                // |R^*| = p^{e-1}(p-1)
                let order = self.p.pow(self.e - 1) * (self.p - 1);
                self.pow(a, order - 1)
            }
        })
    }

    /// `a = γ^l · d` with `d` a unit, `d` the canonical quotient.
    pub fn valuation_split(&self, a: u64) -> Result<(u32, u64)> {
        if a == 0 {
            return Err(Error::ZeroElement);
        }
        let l = self.valuation(a);
        Ok((l, self.div_gamma_pow(a, l)))
    }

    /// Every element, in packed order.
    pub fn elements(&self) -> impl Iterator<Item = u64> {
        0..self.size
    }

    pub fn units(&self) -> impl Iterator<Item = u64> + '_ {
        (0..self.size).filter(move |&a| self.is_unit(a))
    }

    /// Square roots of `a` (brute force, intended for residue fields).
    pub fn sqrt_all(&self, a: u64) -> Vec<u64> {
        (0..self.size).filter(|&x| self.mul(x, x) == a).collect()
    }
}

fn mod_inverse(a: u64, m: u64) -> u64 {
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    debug_assert_eq!(old_r, 1);
    old_s.rem_euclid(m as i128) as u64
}

/// An element of a chain ring together with its ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RingElement {
    ring: ChainRing,
    value: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Mul,
    Neg,
}

impl RingElement {
    pub fn new(ring: ChainRing, value: u64) -> Result<Self> {
        if value >= ring.size() {
            return Err(Error::Invalid(format!(
                "packed value {value} out of range for {ring}"
            )));
        }
        Ok(RingElement { ring, value })
    }

    pub fn from_digits(ring: ChainRing, digits: &[u64]) -> Result<Self> {
        Ok(RingElement {
            ring,
            value: ring.from_digits(digits)?,
        })
    }

    pub fn from_int(ring: ChainRing, n: i64) -> Self {
        RingElement {
            ring,
            value: ring.from_int(n),
        }
    }

    pub fn gamma(ring: ChainRing) -> Self {
        RingElement {
            ring,
            value: ring.gamma_pow(1),
        }
    }

    pub fn ring(&self) -> ChainRing {
        self.ring
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn is_unit(&self) -> bool {
        self.ring.is_unit(self.value)
    }

    pub fn expand(&self) -> Vec<u64> {
        self.ring.digits(self.value)
    }

    pub fn arith(&self, other: Option<&RingElement>, op: ArithOp) -> Result<RingElement> {
        let value = match (op, other) {
            (ArithOp::Neg, _) => self.ring.neg(self.value),
            (_, None) => return Err(Error::Invalid("binary operation needs two operands".into())),
            (op, Some(b)) => {
                self.ring.ensure_same(&b.ring)?;
                match op {
                    ArithOp::Add => self.ring.add(self.value, b.value),
                    ArithOp::Mul => self.ring.mul(self.value, b.value),
                    ArithOp::Neg => unreachable!(),
                }
            }
        };
        Ok(RingElement {
            ring: self.ring,
            value,
        })
    }

    pub fn try_add(&self, other: &RingElement) -> Result<RingElement> {
        self.arith(Some(other), ArithOp::Add)
    }

    pub fn try_mul(&self, other: &RingElement) -> Result<RingElement> {
        self.arith(Some(other), ArithOp::Mul)
    }

    pub fn neg(&self) -> RingElement {
        RingElement {
            ring: self.ring,
            value: self.ring.neg(self.value),
        }
    }

    pub fn invert(&self) -> Result<RingElement> {
        Ok(RingElement {
            ring: self.ring,
            value: self.ring.inv(self.value)?,
        })
    }

    pub fn valuation_split(&self) -> Result<(u32, RingElement)> {
        let (l, d) = self.ring.valuation_split(self.value)?;
        Ok((
            l,
            RingElement {
                ring: self.ring,
                value: d,
            },
        ))
    }

    /// The projection `Ψ_i^j : R_j → R_i`.
    pub fn map_precision(&self, target: u32) -> Result<RingElement> {
        if target > self.ring.e() || target == 0 {
            return Err(Error::BadPrecision {
                current: self.ring.e(),
                target,
            });
        }
        let ring = self.ring.with_precision(target)?;
        Ok(RingElement {
            ring,
            value: self.ring.truncate(self.value, target),
        })
    }

    /// The digit-padding section of the projection, into `R_j` of the given
    /// flavor. Lifting out of the residue field may switch flavor.
    pub fn lift_elem(&self, target: u32, flavor: Flavor) -> Result<RingElement> {
        if target < self.ring.e() {
            return Err(Error::BadPrecision {
                current: self.ring.e(),
                target,
            });
        }
        if self.ring.e() > 1 && flavor != self.ring.flavor() {
            return Err(Error::RingMismatch(
                self.ring.to_string(),
                format!("{} at precision {target}", flavor.tag()),
            ));
        }
        let ring = ChainRing::new(self.ring.p(), target, flavor)?;
        Ok(RingElement {
            ring,
            value: self.value,
        })
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.ring.flavor() {
            Flavor::IntegerModular => write!(f, "{}", self.value),
            Flavor::SeriesTruncated => {
                let terms: Vec<String> = self
                    .expand()
                    .iter()
                    .enumerate()
                    .filter(|(_, &d)| d != 0)
                    .map(|(l, d)| match l {
                        0 => d.to_string(),
                        1 => format!("{d}g"),
                        _ => format!("{d}g^{l}"),
                    })
                    .collect();
                if terms.is_empty() {
                    write!(f, "0")
                } else {
                    write!(f, "{}", terms.join("+"))
                }
            }
        }
    }
}

/// Serialized ring description: `{"p": int, "e": int, "flavor": "zpe"|"fpgamma"}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingSpec {
    pub p: u64,
    pub e: u32,
    pub flavor: Flavor,
}

impl From<ChainRing> for RingSpec {
    fn from(r: ChainRing) -> Self {
        RingSpec {
            p: r.p,
            e: r.e,
            flavor: r.flavor,
        }
    }
}

impl TryFrom<RingSpec> for ChainRing {
    type Error = Error;
    fn try_from(s: RingSpec) -> Result<Self> {
        ChainRing::new(s.p, s.e, s.flavor)
    }
}

impl Serialize for ChainRing {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RingSpec::from(*self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for ChainRing {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let spec = RingSpec::deserialize(d)?;
        ChainRing::try_from(spec).map_err(serde::de::Error::custom)
    }
}

/// Parses the `zpe:p:e` / `fpg:p:e` flag syntax.
impl std::str::FromStr for ChainRing {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 3 {
            return Err(Error::Invalid(format!("ring spec `{s}`: expected zpe:p:e or fpg:p:e")));
        }
        let flavor = match parts[0] {
            "zpe" => Flavor::IntegerModular,
            "fpg" | "fpgamma" => Flavor::SeriesTruncated,
            other => return Err(Error::Invalid(format!("unknown ring flavor `{other}`"))),
        };
        let p = parts[1]
            .parse()
            .map_err(|_| Error::Invalid(format!("bad prime `{}`", parts[1])))?;
        let e = parts[2]
            .parse()
            .map_err(|_| Error::Invalid(format!("bad nilpotency index `{}`", parts[2])))?;
        ChainRing::new(p, e, flavor)
    }
}
