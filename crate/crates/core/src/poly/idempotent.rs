//! Idempotent generators of the ideals `⟨π, γ⟩` in `R[x]/(x^n - λ)`.
//!
//! Start from the residue-field idempotent `ē = s·π̄` where
//! `s·π̄ + t·(x^n - λ̄)/π̄ = 1`, then fix one γ-digit per step:
//! with `e_l² = e_l + γ^l h`, set `e_{l+1} = e_l + γ^l θ`,
//! `θ ≡ h·(1 - 2ē)` modulo γ (`1 - 2ē` is its own inverse mod γ).

use super::{FactorSet, Poly};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Idempotent {
    pub value: Poly,
    /// Number of digit-fixing steps performed (`e - 1`).
    pub steps: u32,
}

pub fn idempotent_from_factor(pi: &Poly, n: usize, lambda: u64) -> Result<Idempotent> {
    let ring = pi.ring();
    let field = ring.residue_field();
    let modulus = Poly::xn_minus(ring, n, lambda);
    if !pi.is_monic() {
        return Err(Error::NonMonicDivisor);
    }
    if !pi.divides(&modulus) {
        return Err(Error::NotADivisor);
    }
    let modulus_bar = modulus.residue();
    let pi_bar = pi.residue();
    let co_bar = modulus_bar.divmod(&pi_bar)?.0;
    let (g, s, _) = pi_bar.ext_gcd(&co_bar);
    if g != Poly::one(field) {
        return Err(Error::NotCoprime);
    }
    let e_bar = s.mul(&pi_bar).rem(&modulus_bar)?;
    let one_minus_2e = Poly::one(field).sub(&e_bar.scale(field.from_int(2)));

    let mut e = e_bar.lift_to(&ring)?;
    let mut steps = 0;
    for l in 1..ring.e() {
        let diff = e.mulmod(&e, &modulus).sub(&e);
        debug_assert!(diff.coeffs().iter().all(|&c| ring.valuation(c) >= l));
        let h = Poly::new(
            field,
            diff.coeffs().iter().map(|&c| ring.digit(c, l)).collect(),
        );
        let theta = h.mulmod(&one_minus_2e, &modulus_bar);
        e = e.add(&theta.lift_to(&ring)?.mul_gamma_pow(l));
        steps += 1;
    }

    if e.mulmod(&e, &modulus) != e {
        return Err(Error::Verification("idempotent iteration did not converge".into()));
    }
    // ⟨e, γ⟩ = ⟨π, γ⟩: ē ∈ ⟨π̄⟩ and π̄·ē = π̄
    let eb = e.residue();
    if !eb.rem(&pi_bar)?.is_zero() || pi_bar.mulmod(&eb, &modulus_bar) != pi_bar.rem(&modulus_bar)? {
        return Err(Error::Verification("idempotent does not generate ⟨π, γ⟩".into()));
    }
    Ok(Idempotent { value: e, steps })
}

/// `E_l = 1 - e_l`: `E_l ≡ 1 mod π_l` and `≡ 0` modulo every other factor.
pub fn primitive_idempotents(set: &FactorSet) -> Result<Vec<Poly>> {
    let ring = set.ring();
    set.factors()
        .iter()
        .map(|pi| {
            let e = idempotent_from_factor(pi, set.n(), set.lambda())?;
            Ok(Poly::one(ring).sub(&e.value))
        })
        .collect()
}
