//! λ-constacyclic codes, i.e. ideals of `R[x]/(x^n - λ)` with `gcd(n, p) = 1`.
//!
//! With `x^n - λ = π_1 ⋯ π_b` every ideal is `∏ ⟨π_l, γ^{m_l}⟩` for a unique
//! exponent vector `m ∈ {0..e}^b`; that vector is the stored normal form.
//! The ideal is the direct sum of `γ^{m_l} E_l R[x]/(x^n - λ)`, `E_l` the
//! primitive idempotents.

use serde::{Deserialize, Serialize};

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::poly::{cyclotomic_count, factor_xn_minus_lambda, primitive_idempotents, FactorSet, Poly};
use crate::ring::ChainRing;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstacyclicCode {
    set: FactorSet,
    exponents: Vec<u32>,
}

/// Serialized descriptor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstacyclicDescriptor {
    pub ring: ChainRing,
    pub n: usize,
    pub lambda: Vec<u64>,
    pub exponents: Vec<u32>,
    pub factors: Vec<String>,
    pub log_size: u64,
    pub is_free: bool,
}

/// `(total, free)` numbers of λ-constacyclic codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub b: usize,
    pub total: Option<u128>,
    pub free: Option<u128>,
}

fn product(ring: ChainRing, fs: impl IntoIterator<Item = Poly>) -> Poly {
    fs.into_iter().fold(Poly::one(ring), |a, f| a.mul(&f))
}

/// Rows `x^i g mod (x^n - λ)` for `i < n`.
fn shifts(g: &Poly, n: usize, lambda: u64, count: usize) -> Vec<Vec<u64>> {
    (0..count)
        .map(|i| g.shift(i).reduce_xn(n, lambda).to_vec(n))
        .collect()
}

/// Whether the twisted rotation of every generator stays in the code.
pub fn is_constacyclic(code: &LinearCode, lambda: u64) -> bool {
    let ring = code.ring();
    let n = code.n();
    code.rows().iter().all(|r| {
        let mut s = vec![0; n];
        s[0] = ring.mul(lambda, r[n - 1]);
        s[1..].copy_from_slice(&r[..n - 1]);
        code.contains(&s)
    })
}

impl ConstacyclicCode {
    pub fn from_exponents(set: FactorSet, exponents: Vec<u32>) -> Result<Self> {
        if exponents.len() != set.len() {
            return Err(Error::LengthMismatch {
                expected: set.len(),
                got: exponents.len(),
            });
        }
        let e = set.ring().e();
        if let Some(&m) = exponents.iter().find(|&&m| m > e) {
            return Err(Error::IndexOutOfRange {
                index: m as usize,
                bound: e as usize + 1,
            });
        }
        Ok(ConstacyclicCode { set, exponents })
    }

    /// `⟨f⟩` for a monic divisor `f` of `x^n - λ`; a free code of rank
    /// `n - deg f`.
    pub fn from_divisor(f: &Poly, n: usize, lambda: u64) -> Result<Self> {
        let ring = f.ring();
        let set = factor_xn_minus_lambda(n, lambda, ring)?;
        if !f.is_monic() {
            return Err(Error::NonMonicDivisor);
        }
        if !f.divides(&set.modulus()) {
            return Err(Error::NotADivisor);
        }
        let e = ring.e();
        let exponents: Vec<u32> = set
            .factors()
            .iter()
            .map(|pi| if pi.divides(f) { e } else { 0 })
            .collect();
        let code = Self::from_exponents(set, exponents)?;
        if code.family()[0] != *f {
            return Err(Error::NotADivisor);
        }
        Ok(code)
    }

    /// `⟨g_0, γ g_1, …, γ^{e-1} g_{e-1}⟩` with `g_{e-1} | ⋯ | g_0 | x^n - λ`.
    pub fn from_family(gs: &[Poly], n: usize, lambda: u64) -> Result<Self> {
        let ring = gs.first().ok_or(Error::EmptyMatrix)?.ring();
        let e = ring.e();
        if gs.len() != e as usize {
            return Err(Error::LengthMismatch {
                expected: e as usize,
                got: gs.len(),
            });
        }
        let set = factor_xn_minus_lambda(n, lambda, ring)?;
        let modulus = set.modulus();
        for (j, g) in gs.iter().enumerate() {
            let parent = if j == 0 { &modulus } else { &gs[j - 1] };
            if !g.is_monic() || !g.divides(parent) {
                return Err(Error::NotADivisor);
            }
        }
        let exponents = set
            .factors()
            .iter()
            .map(|pi| gs.iter().filter(|g| pi.divides(g)).count() as u32)
            .collect();
        let code = Self::from_exponents(set, exponents)?;
        if code.family() != gs {
            return Err(Error::NotADivisor);
        }
        Ok(code)
    }

    /// Code of the partition `F_0 ⋯ F_e = x^n - λ`: the factors in `F_0`
    /// are absent, those in `F_j` appear with `γ^{j-1}`.
    pub fn from_partition(parts: &[Poly], n: usize, lambda: u64) -> Result<Self> {
        let ring = parts.first().ok_or(Error::EmptyMatrix)?.ring();
        let e = ring.e();
        if parts.len() != e as usize + 1 {
            return Err(Error::LengthMismatch {
                expected: e as usize + 1,
                got: parts.len(),
            });
        }
        let set = factor_xn_minus_lambda(n, lambda, ring)?;
        if product(ring, parts.iter().cloned()) != set.modulus() {
            return Err(Error::ProductMismatch);
        }
        let mut exponents = Vec::with_capacity(set.len());
        for pi in set.factors() {
            let owners: Vec<usize> = (0..parts.len()).filter(|&j| pi.divides(&parts[j])).collect();
            match owners.as_slice() {
                [0] => exponents.push(e),
                [j] => exponents.push(*j as u32 - 1),
                _ => return Err(Error::NotCoprime),
            }
        }
        Self::from_exponents(set, exponents)
    }

    pub fn ring(&self) -> ChainRing {
        self.set.ring()
    }

    pub fn n(&self) -> usize {
        self.set.n()
    }

    pub fn lambda(&self) -> u64 {
        self.set.lambda()
    }

    pub fn factor_set(&self) -> &FactorSet {
        &self.set
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// `log_p |C| = Σ (e - m_l) deg π_l`.
    pub fn log_size(&self) -> u64 {
        let e = self.ring().e();
        self.set
            .factors()
            .iter()
            .zip(&self.exponents)
            .map(|(pi, &m)| (e - m) as u64 * pi.degree().unwrap_or(0) as u64)
            .sum()
    }

    pub fn is_free(&self) -> bool {
        let e = self.ring().e();
        self.exponents.iter().all(|&m| m == 0 || m == e)
    }

    /// `g_j = ∏_{m_l > j} π_l`, `j = 0..e`.
    pub fn family(&self) -> Vec<Poly> {
        let ring = self.ring();
        (0..ring.e())
            .map(|j| {
                product(
                    ring,
                    self.set
                        .factors()
                        .iter()
                        .zip(&self.exponents)
                        .filter(|(_, &m)| m > j)
                        .map(|(pi, _)| pi.clone()),
                )
            })
            .collect()
    }

    /// The partition `F_0, …, F_e` of the factor set.
    pub fn partition(&self) -> Vec<Poly> {
        let ring = self.ring();
        let e = ring.e();
        (0..=e)
            .map(|j| {
                let want = if j == 0 { e } else { j - 1 };
                product(
                    ring,
                    self.set
                        .factors()
                        .iter()
                        .zip(&self.exponents)
                        .filter(|(_, &m)| m == want)
                        .map(|(pi, _)| pi.clone()),
                )
            })
            .collect()
    }

    /// `F̂_1 + γ F̂_2 + … + γ^{e-1} F̂_e` with `F̂_j = (x^n - λ)/F_j`.
    pub fn single_generator(&self) -> Poly {
        let ring = self.ring();
        let modulus = self.set.modulus();
        let parts = self.partition();
        let mut g = Poly::zero(ring);
        for (j, f) in parts.iter().enumerate().skip(1) {
            let hat = modulus.divmod(f).expect("monic factor").0;
            g = g.add(&hat.mul_gamma_pow(j as u32 - 1));
        }
        g.reduce_xn(self.n(), self.lambda())
    }

    /// Rows `x^i γ^j g_j`, `i < n - deg g_j`.
    pub fn generator_rows(&self) -> Vec<Vec<u64>> {
        let n = self.n();
        let mut rows = Vec::new();
        for (j, g) in self.family().iter().enumerate() {
            let d = g.degree().unwrap_or(0);
            let gj = g.mul_gamma_pow(j as u32);
            if gj.is_zero() {
                continue;
            }
            rows.extend(shifts(&gj, n, self.lambda(), n - d));
        }
        rows
    }

    pub fn to_linear(&self) -> LinearCode {
        LinearCode::with_rows(self.ring(), self.n(), self.generator_rows()).expect("rows of length n")
    }

    /// The ideal generated by one polynomial, as a linear code.
    pub fn ideal_of(poly: &Poly, n: usize, lambda: u64) -> LinearCode {
        let ring = poly.ring();
        LinearCode::with_rows(ring, n, shifts(&poly.reduce_xn(n, lambda), n, lambda, n)).expect("rows of length n")
    }

    /// Recognizes a λ-constacyclic linear code: `m_l` is the least `j`
    /// with `γ^j E_l ∈ C`.
    pub fn recognize(code: &LinearCode, lambda: u64) -> Result<Self> {
        let ring = code.ring();
        let n = code.n();
        if !is_constacyclic(code, lambda) {
            return Err(Error::Invalid("code is not closed under the twisted shift".into()));
        }
        let set = factor_xn_minus_lambda(n, lambda, ring)?;
        let idem = primitive_idempotents(&set)?;
        let e = ring.e();
        let exponents = idem
            .iter()
            .map(|el| {
                (0..=e)
                    .find(|&j| code.contains(&el.mul_gamma_pow(j).to_vec(n)))
                    .unwrap_or(e)
            })
            .collect();
        let out = Self::from_exponents(set, exponents)?;
        if out.to_linear() != *code {
            return Err(Error::Verification("recognized ideal differs from the code".into()));
        }
        Ok(out)
    }

    /// The dual, a `λ^{-1}`-constacyclic code.
    pub fn dual(&self) -> Result<Self> {
        let ring = self.ring();
        let lin = self.to_linear().dual()?;
        Self::recognize(&lin, ring.inv(self.lambda())?)
    }

    /// Lift or projection to `target`. Projection truncates exponents at the
    /// new nilpotency index; lifting keeps every `m_l < e` and sends
    /// `m_l = e` to the new index. The twist is read in `target` digit by
    /// digit, except that `±1` stays `±1`.
    pub fn map_precision(&self, target: &ChainRing) -> Result<Self> {
        let ring = self.ring();
        if !ring.same_family(target) {
            return Err(Error::RingMismatch(ring.to_string(), target.to_string()));
        }
        let lambda = if self.lambda() == 1 {
            1
        } else if self.lambda() == ring.neg(1) {
            target.neg(1)
        } else {
            target.truncate(self.lambda(), target.e())
        };
        let set = factor_xn_minus_lambda(self.n(), lambda, *target)?;
        let (e, t) = (ring.e(), target.e());
        let mut exponents = vec![0; set.len()];
        for (pi, &m) in self.set.factors().iter().zip(&self.exponents) {
            let pos = set
                .position_of_residue(&pi.residue())
                .ok_or_else(|| Error::Verification("factor sets do not correspond".into()))?;
            exponents[pos] = if t < e { m.min(t) } else if m == e { t } else { m };
        }
        Self::from_exponents(set, exponents)
    }

    pub fn descriptor(&self) -> ConstacyclicDescriptor {
        let ring = self.ring();
        ConstacyclicDescriptor {
            ring,
            n: self.n(),
            lambda: ring.digits(self.lambda()),
            exponents: self.exponents.clone(),
            factors: self.set.factors().iter().map(|f| f.to_string()).collect(),
            log_size: self.log_size(),
            is_free: self.is_free(),
        }
    }
}

/// All `(e+1)^b` codes, exponent vectors in lexicographic order.
pub fn enumerate_all(n: usize, lambda: u64, ring: ChainRing, budget: u128) -> Result<Vec<ConstacyclicCode>> {
    let set = factor_xn_minus_lambda(n, lambda, ring)?;
    let b = set.len();
    let base = ring.e() as u128 + 1;
    let total = u32::try_from(b)
        .ok()
        .and_then(|b| base.checked_pow(b))
        .unwrap_or(u128::MAX);
    if total > budget {
        return Err(Error::BudgetExceeded { size: total, budget });
    }
    let mut out = Vec::with_capacity(total as usize);
    for idx in 0..total {
        let mut m = vec![0u32; b];
        let mut t = idx;
        for slot in m.iter_mut().rev() {
            *slot = (t % base) as u32;
            t /= base;
        }
        out.push(ConstacyclicCode::from_exponents(set.clone(), m)?);
    }
    Ok(out)
}

/// `(e+1)^b` and `2^b`. For `λ = ±1`, `b` comes from cyclotomic cosets;
/// otherwise from the factorization.
pub fn counts(n: usize, lambda: u64, ring: ChainRing) -> Result<Counts> {
    if (n as u64) % ring.p() == 0 {
        return Err(Error::GcdViolation { n, p: ring.p() });
    }
    let b = if lambda == 1 {
        cyclotomic_count(n, 1, ring.p())?
    } else if lambda == ring.neg(1) {
        cyclotomic_count(n, -1, ring.p())?
    } else {
        factor_xn_minus_lambda(n, lambda, ring)?.len()
    };
    let pow = |base: u128| u32::try_from(b).ok().and_then(|b| base.checked_pow(b));
    Ok(Counts {
        b,
        total: pow(ring.e() as u128 + 1),
        free: pow(2),
    })
}
