//! Univariate polynomials over a chain ring.

mod factor;
mod hensel;
mod idempotent;

pub use factor::{factor_over_residue, cyclotomic_count, cyclotomic_cosets, is_irreducible, FactorRng};
pub use hensel::{
    bezout_over_ring, factor_xn_minus_lambda, hensel_lift, lift_irreducible, regular_divide,
    FactorSet,
};
pub use idempotent::{idempotent_from_factor, primitive_idempotents, Idempotent};

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{ChainRing, Flavor};

/// A polynomial over a chain ring, coefficients lowest degree first with
/// trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    ring: ChainRing,
    coeffs: Vec<u64>,
}

impl Poly {
    pub fn zero(ring: ChainRing) -> Self {
        Poly {
            ring,
            coeffs: Vec::new(),
        }
    }

    pub fn one(ring: ChainRing) -> Self {
        Self::constant(ring, 1)
    }

    pub fn x(ring: ChainRing) -> Self {
        Self::monomial(ring, 1, 1)
    }

    pub fn constant(ring: ChainRing, c: u64) -> Self {
        Self::new(ring, vec![c])
    }

    pub fn monomial(ring: ChainRing, c: u64, k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        Self::new(ring, coeffs)
    }

    /// Builds from packed coefficients (lowest degree first).
    pub fn new(ring: ChainRing, mut coeffs: Vec<u64>) -> Self {
        debug_assert!(coeffs.iter().all(|&c| c < ring.size()));
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { ring, coeffs }
    }

    /// Builds from integer coefficients, reduced into the ring.
    pub fn from_ints(ring: ChainRing, coeffs: &[i64]) -> Self {
        Self::new(ring, coeffs.iter().map(|&c| ring.from_int(c)).collect())
    }

    /// `x^n - λ`.
    pub fn xn_minus(ring: ChainRing, n: usize, lambda: u64) -> Self {
        let mut coeffs = vec![0; n + 1];
        coeffs[0] = ring.neg(lambda);
        coeffs[n] = ring.add(coeffs[n], 1);
        Self::new(ring, coeffs)
    }

    pub fn ring(&self) -> ChainRing {
        self.ring
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.lead() == 1
    }

    /// Regular means nonzero modulo γ.
    pub fn is_regular(&self) -> bool {
        self.coeffs.iter().any(|&c| self.ring.is_unit(c))
    }

    pub fn add(&self, other: &Poly) -> Poly {
        debug_assert_eq!(self.ring, other.ring);
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| self.ring.add(self.coeff(i), other.coeff(i)))
            .collect();
        Poly::new(self.ring, coeffs)
    }

    pub fn neg(&self) -> Poly {
        Poly::new(
            self.ring,
            self.coeffs.iter().map(|&c| self.ring.neg(c)).collect(),
        )
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        debug_assert_eq!(self.ring, other.ring);
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.ring);
        }
        let r = self.ring;
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = r.add(out[i + j], r.mul(a, b));
            }
        }
        Poly::new(r, out)
    }

    pub fn scale(&self, c: u64) -> Poly {
        Poly::new(
            self.ring,
            self.coeffs.iter().map(|&a| self.ring.mul(a, c)).collect(),
        )
    }

    pub fn mul_gamma_pow(&self, k: u32) -> Poly {
        Poly::new(
            self.ring,
            self.coeffs
                .iter()
                .map(|&a| self.ring.mul_gamma_pow(a, k))
                .collect(),
        )
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        Poly::new(self.ring, coeffs)
    }

    /// Division by a polynomial whose leading coefficient is a unit.
    pub fn divmod(&self, d: &Poly) -> Result<(Poly, Poly)> {
        let r = self.ring;
        let dd = d.degree().ok_or(Error::ZeroPolynomial)?;
        let inv_lead = r.inv(d.lead()).map_err(|_| Error::NonMonicDivisor)?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(r), self.clone()));
        }
        let mut quot = vec![0u64; rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = rem[i];
            if c == 0 {
                continue;
            }
            let q = r.mul(c, inv_lead);
            quot[i - dd] = q;
            for (j, &dc) in d.coeffs.iter().enumerate() {
                let k = i - dd + j;
                rem[k] = r.sub(rem[k], r.mul(q, dc));
            }
        }
        rem.truncate(dd);
        Ok((Poly::new(r, quot), Poly::new(r, rem)))
    }

    /// Division by a monic polynomial.
    pub fn divmod_monic(&self, d: &Poly) -> Result<(Poly, Poly)> {
        if d.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if !d.is_monic() {
            return Err(Error::NonMonicDivisor);
        }
        self.divmod(d)
    }

    pub fn rem(&self, d: &Poly) -> Result<Poly> {
        Ok(self.divmod(d)?.1)
    }

    /// Exact divisibility test by a divisor with unit leading coefficient.
    pub fn divides(&self, f: &Poly) -> bool {
        matches!(f.divmod(self), Ok((_, r)) if r.is_zero())
    }

    /// Reduction modulo `x^n - λ`.
    pub fn reduce_xn(&self, n: usize, lambda: u64) -> Poly {
        let r = self.ring;
        let mut out = vec![0u64; n.min(self.coeffs.len())];
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mut v = c;
            let mut k = i;
            while k >= n {
                v = r.mul(v, lambda);
                k -= n;
            }
            out[k] = r.add(out[k], v);
        }
        Poly::new(r, out)
    }

    /// Coefficient vector of length `n` (padded with zeros).
    pub fn to_vec(&self, n: usize) -> Vec<u64> {
        let mut v = self.coeffs.clone();
        v.resize(n, 0);
        v
    }

    /// `Ψ_i`: keep the low `i` γ-digits of every coefficient.
    pub fn project(&self, i: u32) -> Result<Poly> {
        let ring = self.ring.with_precision(i.min(self.ring.e()))?;
        if i > self.ring.e() {
            return Err(Error::BadPrecision {
                current: self.ring.e(),
                target: i,
            });
        }
        Ok(Poly::new(
            ring,
            self.coeffs.iter().map(|&c| self.ring.truncate(c, i)).collect(),
        ))
    }

    /// Reduction to the residue field.
    pub fn residue(&self) -> Poly {
        self.project(1).expect("precision 1 always valid")
    }

    /// Digit-padding lift into another precision of the same family.
    pub fn lift_to(&self, target: &ChainRing) -> Result<Poly> {
        if !self.ring.same_family(target) || target.e() < self.ring.e() {
            return Err(Error::RingMismatch(
                self.ring.to_string(),
                target.to_string(),
            ));
        }
        Ok(Poly {
            ring: *target,
            coeffs: self.coeffs.clone(),
        })
    }

    /// Re-homes coefficients in a ring of possibly different precision,
    /// truncating or padding digits.
    pub fn change_precision(&self, target: &ChainRing) -> Result<Poly> {
        if target.e() >= self.ring.e() {
            self.lift_to(target)
        } else {
            if !self.ring.same_family(target) {
                return Err(Error::RingMismatch(
                    self.ring.to_string(),
                    target.to_string(),
                ));
            }
            self.project(target.e())
        }
    }

    pub fn derivative(&self) -> Poly {
        let r = self.ring;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| r.mul(c, r.from_int(i as i64)))
            .collect();
        Poly::new(r, coeffs)
    }

    pub fn eval(&self, x: u64) -> u64 {
        let r = self.ring;
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| r.add(r.mul(acc, x), c))
    }

    /// Scales by the inverse of the leading coefficient.
    pub fn make_monic(&self) -> Result<Poly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let inv = self.ring.inv(self.lead())?;
        Ok(self.scale(inv))
    }

    /// Multiplication followed by reduction modulo a monic polynomial.
    pub fn mulmod(&self, other: &Poly, m: &Poly) -> Poly {
        self.mul(other).rem(m).expect("modulus has a unit leading coefficient")
    }

    pub fn powmod(&self, mut k: u128, m: &Poly) -> Poly {
        let mut base = self.rem(m).expect("unit-leading modulus");
        let mut acc = Poly::one(self.ring).rem(m).expect("unit-leading modulus");
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mulmod(&base, m);
            }
            base = base.mulmod(&base, m);
            k >>= 1;
        }
        acc
    }

    /// Monic gcd over a field.
    pub fn gcd(&self, other: &Poly) -> Poly {
        debug_assert!(self.ring.is_field());
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("field division");
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.make_monic().expect("field")
        }
    }

    /// Extended gcd over a field: `(g, s, t)` with `s·self + t·other = g`,
    /// `g` monic.
    pub fn ext_gcd(&self, other: &Poly) -> (Poly, Poly, Poly) {
        debug_assert!(self.ring.is_field());
        let r = self.ring;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(r), Poly::zero(r));
        let (mut t0, mut t1) = (Poly::zero(r), Poly::one(r));
        while !r1.is_zero() {
            let (q, rem) = r0.divmod(&r1).expect("field division");
            r0 = std::mem::replace(&mut r1, rem);
            let s2 = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s2);
            let t2 = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t2);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = r.inv(r0.lead()).expect("field");
        (r0.scale(inv), s0.scale(inv), t0.scale(inv))
    }

    /// Inverse modulo `m` over a field, when it exists.
    pub fn inv_mod(&self, m: &Poly) -> Option<Poly> {
        let (g, s, _) = self.ext_gcd(m);
        if g.degree() == Some(0) {
            Some(s.rem(m).expect("field"))
        } else {
            None
        }
    }

    /// Canonical ordering key: degree, then coefficients lowest first.
    pub fn canonical_cmp(&self, other: &Poly) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }

    /// Coefficients as γ-adic digit arrays, lowest degree first.
    pub fn to_digit_arrays(&self) -> Vec<Vec<u64>> {
        self.coeffs.iter().map(|&c| self.ring.digits(c)).collect()
    }

    pub fn from_digit_arrays(ring: ChainRing, arrays: &[Vec<u64>]) -> Result<Poly> {
        let coeffs = arrays
            .iter()
            .map(|d| ring.from_digits(d))
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::new(ring, coeffs))
    }

    fn fmt_coeff(&self, c: u64) -> String {
        match self.ring.flavor() {
            Flavor::IntegerModular => c.to_string(),
            Flavor::SeriesTruncated => {
                let e = crate::ring::RingElement::new(self.ring, c).expect("canonical");
                let s = e.to_string();
                if self.ring.e() > 1 && c >= self.ring.p() {
                    format!("({s})")
                } else {
                    s
                }
            }
        }
    }
}

/// Serialized form: coefficient array of digit arrays, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolySpec(pub Vec<Vec<u64>>);

impl fmt::Display for Poly {
    /// Highest degree first, e.g. `x^2+x+1`, `x+3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let cs = self.fmt_coeff(c);
            let t = match (i, c) {
                (0, _) => cs,
                (1, 1) => "x".to_string(),
                (1, _) => format!("{cs}x"),
                (_, 1) => format!("x^{i}"),
                _ => format!("{cs}x^{i}"),
            };
            terms.push(t);
        }
        write!(f, "{}", terms.join("+"))
    }
}
