//! Hensel lifting of coprime residue factorizations, one γ-digit at a time.

use serde::{Deserialize, Serialize};

use super::{factor_over_residue, is_irreducible, Poly};
use crate::error::{Error, Result};
use crate::ring::ChainRing;

/// Lifts a pairwise coprime monic factorization `Ψ_1(f) = g_1⋯g_r` to
/// `f = f_1⋯f_r` over the ring of `f`, with `Ψ_1(f_j) = g_j` and each
/// `f_j` monic. The output follows the input order.
pub fn hensel_lift(f: &Poly, residue_factors: &[Poly]) -> Result<Vec<Poly>> {
    let ring = f.ring();
    let field = ring.residue_field();
    if !f.is_monic() {
        return Err(Error::Invalid("polynomial to lift must be monic".into()));
    }
    for g in residue_factors {
        if g.ring() != field {
            return Err(Error::RingMismatch(g.ring().to_string(), field.to_string()));
        }
        if !g.is_monic() {
            return Err(Error::Invalid("residue factors must be monic".into()));
        }
    }
    let prod = residue_factors
        .iter()
        .fold(Poly::one(field), |acc, g| acc.mul(g));
    if prod != f.residue() {
        return Err(Error::ProductMismatch);
    }
    for i in 0..residue_factors.len() {
        for j in i + 1..residue_factors.len() {
            if residue_factors[i].gcd(&residue_factors[j]) != Poly::one(field) {
                return Err(Error::NotCoprime);
            }
        }
    }
    if residue_factors.len() <= 1 {
        return Ok(residue_factors.iter().map(|_| f.clone()).collect());
    }

    // s_j = (∏_{i≠j} g_i)^{-1} mod g_j
    let cofactor_inverses: Vec<Poly> = (0..residue_factors.len())
        .map(|j| {
            let co = residue_factors
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != j)
                .fold(Poly::one(field), |acc, (_, g)| acc.mul(g));
            co.inv_mod(&residue_factors[j])
                .expect("coprimality checked above")
        })
        .collect();

    let mut lifted: Vec<Poly> = residue_factors
        .iter()
        .map(|g| g.lift_to(&ring))
        .collect::<Result<_>>()?;
    for l in 1..ring.e() {
        let current = lifted.iter().fold(Poly::one(ring), |acc, g| acc.mul(g));
        let diff = f.sub(&current);
        debug_assert!(diff.coeffs().iter().all(|&c| ring.valuation(c) >= l));
        let defect = Poly::new(
            field,
            diff.coeffs().iter().map(|&c| ring.digit(c, l)).collect(),
        );
        if defect.is_zero() {
            continue;
        }
        for (j, g) in residue_factors.iter().enumerate() {
            let delta = defect.mulmod(&cofactor_inverses[j], g);
            let correction = delta.lift_to(&ring)?.mul_gamma_pow(l);
            lifted[j] = lifted[j].add(&correction);
        }
    }
    let check = lifted.iter().fold(Poly::one(ring), |acc, g| acc.mul(g));
    if &check != f {
        return Err(Error::Verification("lifted product does not reconstruct f".into()));
    }
    Ok(lifted)
}

/// Bézout witnesses `u·f + v·g = 1` over the ring of `f`, computed over the
/// residue field and corrected by inverting `1 + γE`.
pub fn bezout_over_ring(f: &Poly, g: &Poly) -> Result<(Poly, Poly)> {
    let ring = f.ring();
    ring.ensure_same(&g.ring())?;
    let (d, s, t) = f.residue().ext_gcd(&g.residue());
    if d != Poly::one(ring.residue_field()) {
        return Err(Error::NotCoprime);
    }
    let s = s.lift_to(&ring)?;
    let t = t.lift_to(&ring)?;
    let w = s.mul(f).add(&t.mul(g));
    // w = 1 + γE with γE nilpotent: w^{-1} = Σ_{k<e} (1 - w)^k
    let nil = Poly::one(ring).sub(&w);
    let mut inv = Poly::one(ring);
    let mut term = Poly::one(ring);
    for _ in 1..ring.e() {
        term = term.mul(&nil);
        inv = inv.add(&term);
    }
    let mut u = s.mul(&inv);
    let mut v = t.mul(&inv);
    if g.is_monic() && g.degree().unwrap_or(0) > 0 {
        let (q, r) = u.divmod(g)?;
        u = r;
        v = v.add(&q.mul(f));
    }
    if u.mul(f).add(&v.mul(g)) != Poly::one(ring) {
        return Err(Error::Verification("Bézout identity failed".into()));
    }
    Ok((u, v))
}

/// The certified factorization of `x^n - λ` into monic basic irreducible,
/// pairwise coprime factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorSet {
    ring: ChainRing,
    n: usize,
    lambda: u64,
    factors: Vec<Poly>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FactorSetReport {
    pub ring: ChainRing,
    pub n: usize,
    pub lambda: Vec<u64>,
    pub b: usize,
    pub factors: Vec<String>,
    pub factor_digits: Vec<Vec<Vec<u64>>>,
    pub residue_factors: Vec<String>,
}

impl FactorSet {
    pub fn ring(&self) -> ChainRing {
        self.ring
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lambda(&self) -> u64 {
        self.lambda
    }

    pub fn factors(&self) -> &[Poly] {
        &self.factors
    }

    /// Number of factors, `b`.
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn modulus(&self) -> Poly {
        Poly::xn_minus(self.ring, self.n, self.lambda)
    }

    pub fn product(&self) -> Poly {
        self.factors
            .iter()
            .fold(Poly::one(self.ring), |acc, f| acc.mul(f))
    }

    /// Index of the factor whose residue is `h`.
    pub fn position_of_residue(&self, h: &Poly) -> Option<usize> {
        self.factors.iter().position(|f| &f.residue() == h)
    }

    /// Re-checks every invariant: exact product, residue irreducibility,
    /// and a Bézout witness for each pair.
    pub fn verify(&self) -> Result<()> {
        if self.product() != self.modulus() {
            return Err(Error::ProductMismatch);
        }
        for f in &self.factors {
            if !f.is_monic() || !is_irreducible(&f.residue())? {
                return Err(Error::NotIrreducible);
            }
        }
        for i in 0..self.factors.len() {
            for j in i + 1..self.factors.len() {
                bezout_over_ring(&self.factors[i], &self.factors[j])?;
            }
        }
        Ok(())
    }

    pub fn report(&self) -> FactorSetReport {
        FactorSetReport {
            ring: self.ring,
            n: self.n,
            lambda: self.ring.digits(self.lambda),
            b: self.len(),
            factors: self.factors.iter().map(|f| f.to_string()).collect(),
            factor_digits: self.factors.iter().map(|f| f.to_digit_arrays()).collect(),
            residue_factors: self
                .factors
                .iter()
                .map(|f| f.residue().to_string())
                .collect(),
        }
    }
}

/// Factors `x^n - λ` over the ring, `gcd(n, p) = 1`, `λ` a unit.
pub fn factor_xn_minus_lambda(n: usize, lambda: u64, ring: ChainRing) -> Result<FactorSet> {
    if n == 0 {
        return Err(Error::Invalid("length must be positive".into()));
    }
    if (n as u64) % ring.p() == 0 {
        return Err(Error::GcdViolation { n, p: ring.p() });
    }
    if !ring.is_unit(lambda) {
        return Err(Error::NonUnit);
    }
    let f = Poly::xn_minus(ring, n, lambda);
    let residue: Vec<Poly> = factor_over_residue(&f.residue())?
        .into_iter()
        .map(|(g, m)| {
            debug_assert_eq!(m, 1);
            g
        })
        .collect();
    let mut factors = hensel_lift(&f, &residue)?;
    factors.sort_by(|a, b| a.canonical_cmp(b));
    Ok(FactorSet {
        ring,
        n,
        lambda,
        factors,
    })
}

/// The unique monic basic irreducible divisor of `x^n - λ` over `ring`
/// reducing to `h1`.
pub fn lift_irreducible(h1: &Poly, n: usize, lambda: u64, ring: ChainRing) -> Result<Poly> {
    let field = ring.residue_field();
    if h1.ring() != field {
        return Err(Error::RingMismatch(h1.ring().to_string(), field.to_string()));
    }
    if (n as u64) % ring.p() == 0 {
        return Err(Error::GcdViolation { n, p: ring.p() });
    }
    if !is_irreducible(h1)? {
        return Err(Error::NotIrreducible);
    }
    let h1 = h1.make_monic()?;
    let f = Poly::xn_minus(ring, n, lambda);
    let (co, r) = f.residue().divmod(&h1)?;
    if !r.is_zero() {
        return Err(Error::NotADivisor);
    }
    let lifted = hensel_lift(&f, &[h1.clone(), co])?.swap_remove(0);
    let set = factor_xn_minus_lambda(n, lambda, ring)?;
    if !set.factors().contains(&lifted) {
        return Err(Error::Verification(
            "lifted divisor is not in the factor set".into(),
        ));
    }
    Ok(lifted)
}

/// Writes `g = ((x^n - λ)/f)·quot + rem` with `deg rem ≤ n - deg f - 1`.
pub fn regular_divide(g: &Poly, f: &Poly, n: usize, lambda: u64) -> Result<(Poly, Poly)> {
    let ring = f.ring();
    ring.ensure_same(&g.ring())?;
    if (n as u64) % ring.p() == 0 {
        return Err(Error::GcdViolation { n, p: ring.p() });
    }
    if !f.is_monic() {
        return Err(Error::NonMonicDivisor);
    }
    let modulus = Poly::xn_minus(ring, n, lambda);
    let (cofactor, r) = modulus.divmod(f)?;
    if !r.is_zero() {
        return Err(Error::NotADivisor);
    }
    g.divmod(&cofactor)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z4() -> ChainRing {
        ChainRing::zpe(2, 2).unwrap()
    }

    #[test]
    fn lift_x3_minus_1_to_z4() {
        let r = z4();
        let f = Poly::xn_minus(r, 3, 1);
        let f2 = r.residue_field();
        let lifted = hensel_lift(
            &f,
            &[Poly::from_ints(f2, &[1, 1]), Poly::from_ints(f2, &[1, 1, 1])],
        )
        .unwrap();
        assert_eq!(lifted[0], Poly::from_ints(r, &[3, 1]));
        assert_eq!(lifted[1], Poly::from_ints(r, &[1, 1, 1]));
    }

    #[test]
    fn already_lifted_factors_unchanged() {
        let r = ChainRing::zpe(3, 2).unwrap();
        let f = Poly::xn_minus(r, 2, 1);
        let f3 = r.residue_field();
        let lifted = hensel_lift(
            &f,
            &[Poly::from_ints(f3, &[-1, 1]), Poly::from_ints(f3, &[1, 1])],
        )
        .unwrap();
        assert_eq!(lifted[0], Poly::from_ints(r, &[-1, 1]));
        assert_eq!(lifted[1], Poly::from_ints(r, &[1, 1]));
    }

    #[test]
    fn repeated_factor_rejected() {
        let r = ChainRing::zpe(3, 2).unwrap();
        let f = Poly::from_ints(r, &[1, 2, 1]);
        let g = Poly::from_ints(r.residue_field(), &[1, 1]);
        assert_eq!(hensel_lift(&f, &[g.clone(), g]), Err(Error::NotCoprime));
    }

    #[test]
    fn factor_set_examples() {
        let s = factor_xn_minus_lambda(3, 1, z4()).unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(s.factors()[0].to_string(), "x+3");
        assert_eq!(s.factors()[1].to_string(), "x^2+x+1");
        s.verify().unwrap();

        let z9 = ChainRing::zpe(3, 2).unwrap();
        let s = factor_xn_minus_lambda(2, z9.from_int(-1), z9).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s.factors()[0], Poly::from_ints(z9, &[1, 0, 1]));

        // x^3 - 1 = (x - 1)^3 over F_3: not a coprime factorization
        assert_eq!(
            factor_xn_minus_lambda(3, 1, z9),
            Err(Error::GcdViolation { n: 3, p: 3 })
        );
        let s = factor_xn_minus_lambda(4, 1, z9).unwrap();
        assert_eq!(s.len(), 3);
        assert_eq!(s.factors()[0], Poly::from_ints(z9, &[1, 1]));
        assert_eq!(s.product(), Poly::xn_minus(z9, 4, 1));

        assert_eq!(
            factor_xn_minus_lambda(6, 1, z9),
            Err(Error::GcdViolation { n: 6, p: 3 })
        );
        assert_eq!(factor_xn_minus_lambda(2, 3, z9), Err(Error::NonUnit));
    }

    #[test]
    fn series_flavor_factorization() {
        let r = ChainRing::fpgamma(3, 3).unwrap();
        // twist by the unit 1+γ
        let lambda = r.from_digits(&[1, 1, 0]).unwrap();
        let s = factor_xn_minus_lambda(4, lambda, r).unwrap();
        s.verify().unwrap();
    }

    #[test]
    fn lift_irreducible_examples() {
        let r = z4();
        let f2 = r.residue_field();
        let h = Poly::from_ints(f2, &[1, 1, 1]);
        assert_eq!(lift_irreducible(&h, 3, 1, r).unwrap(), Poly::from_ints(r, &[1, 1, 1]));
        let h = Poly::from_ints(f2, &[1, 1]);
        assert_eq!(lift_irreducible(&h, 3, 1, r).unwrap(), Poly::from_ints(r, &[3, 1]));
        assert_eq!(lift_irreducible(&h, 3, 1, f2).unwrap(), h);
        let not_div = Poly::from_ints(f2, &[1, 1, 0, 1]);
        assert!(lift_irreducible(&not_div, 3, 1, r).is_err());
        let reducible = Poly::from_ints(f2, &[1, 0, 1]);
        assert_eq!(lift_irreducible(&reducible, 3, 1, r), Err(Error::NotIrreducible));
    }

    #[test]
    fn bezout_witnesses_over_z27() {
        let r = ChainRing::zpe(3, 3).unwrap();
        let s = factor_xn_minus_lambda(4, 1, r).unwrap();
        for i in 0..s.len() {
            for j in 0..s.len() {
                if i != j {
                    let (u, v) = bezout_over_ring(&s.factors()[i], &s.factors()[j]).unwrap();
                    assert_eq!(
                        u.mul(&s.factors()[i]).add(&v.mul(&s.factors()[j])),
                        Poly::one(r)
                    );
                }
            }
        }
    }

    #[test]
    fn regular_divide_examples() {
        let r = z4();
        let f = Poly::from_ints(r, &[1, 1, 1]);
        let g = Poly::from_ints(r, &[0, 0, 1, 1, 1]);
        let (quot, rem) = regular_divide(&g, &f, 3, 1).unwrap();
        let cof = Poly::from_ints(r, &[3, 1]);
        assert_eq!(cof.mul(&quot).add(&rem), g);
        assert!(rem.degree().map_or(true, |d| d <= 0));
        // f·g ≡ f·rem in Z_4[x]/(x^3-1)
        assert_eq!(f.mul(&g).reduce_xn(3, 1), f.mul(&rem).reduce_xn(3, 1));

        let small = Poly::from_ints(r, &[2]);
        assert_eq!(regular_divide(&small, &f, 3, 1).unwrap(), (Poly::zero(r), small));

        let m = Poly::xn_minus(r, 3, 1);
        let (quot, rem) = regular_divide(&g, &m, 3, 1).unwrap();
        assert!(rem.is_zero());
        assert_eq!(quot, g);

        let bad = Poly::from_ints(r, &[1, 0, 1]);
        assert_eq!(regular_divide(&g, &bad, 3, 1), Err(Error::NotADivisor));
    }
}
