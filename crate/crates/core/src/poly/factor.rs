//! Factorization over the residue field `F_p`: square-free decomposition,
//! distinct-degree and Cantor–Zassenhaus equal-degree splitting.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Poly;
use crate::error::{Error, Result};

/// Seeded randomness for equal-degree splitting.
pub type FactorRng = ChaCha8Rng;

const DEFAULT_SEED: u64 = 0x5eed_c0de;

/// Irreducible factorization over `F_p` with multiplicities, monic factors
/// sorted by degree then coefficients. The leading coefficient of `f` is
/// dropped.
pub fn factor_over_residue(f: &Poly) -> Result<Vec<(Poly, u32)>> {
    let mut rng = FactorRng::seed_from_u64(DEFAULT_SEED);
    factor_over_residue_with(f, &mut rng)
}

pub fn factor_over_residue_with(f: &Poly, rng: &mut FactorRng) -> Result<Vec<(Poly, u32)>> {
    if !f.ring().is_field() {
        return Err(Error::Invalid(format!(
            "factorization needs a residue field, got {}",
            f.ring()
        )));
    }
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let f = f.make_monic()?;
    let mut out = Vec::new();
    for (sqf, mult) in square_free(&f) {
        for (g, d) in distinct_degree(&sqf) {
            for h in equal_degree(&g, d, rng) {
                out.push((h, mult));
            }
        }
    }
    out.sort_by(|a, b| a.0.canonical_cmp(&b.0).then(a.1.cmp(&b.1)));
    Ok(out)
}

pub fn is_irreducible(f: &Poly) -> Result<bool> {
    if f.degree().unwrap_or(0) == 0 {
        return Ok(false);
    }
    let fac = factor_over_residue(f)?;
    Ok(fac.len() == 1 && fac[0].1 == 1)
}

/// `f(x) = g(x^p)` over `F_p` gives `g(x)^p`; returns `g`.
fn pth_root(f: &Poly) -> Poly {
    let p = f.ring().p() as usize;
    let coeffs = f.coeffs().iter().step_by(p).copied().collect();
    Poly::new(f.ring(), coeffs)
}

fn square_free(f: &Poly) -> Vec<(Poly, u32)> {
    let ring = f.ring();
    let one = Poly::one(ring);
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let df = f.derivative();
    if df.is_zero() {
        let p = ring.p() as u32;
        return square_free(&pth_root(f))
            .into_iter()
            .map(|(g, m)| (g, m * p))
            .collect();
    }
    let mut c = f.gcd(&df);
    let mut w = f.divmod(&c).expect("field").0;
    let mut i = 1;
    while w != one {
        let y = w.gcd(&c);
        let fac = w.divmod(&y).expect("field").0;
        if fac.degree().unwrap_or(0) > 0 {
            out.push((fac, i));
        }
        i += 1;
        w = y.clone();
        c = c.divmod(&y).expect("field").0;
    }
    if c != one {
        let p = ring.p() as u32;
        out.extend(
            square_free(&pth_root(&c))
                .into_iter()
                .map(|(g, m)| (g, m * p)),
        );
    }
    out
}

fn distinct_degree(f: &Poly) -> Vec<(Poly, usize)> {
    let ring = f.ring();
    let x = Poly::x(ring);
    let one = Poly::one(ring);
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut h = x.rem(&rest).expect("monic");
    let mut i = 1;
    while rest.degree().unwrap_or(0) >= 2 * i {
        h = h.powmod(ring.p() as u128, &rest);
        let g = rest.gcd(&h.sub(&x));
        if g != one {
            rest = rest.divmod(&g).expect("field").0;
            h = h.rem(&rest).expect("monic");
            out.push((g, i));
        }
        i += 1;
    }
    if rest.degree().unwrap_or(0) > 0 {
        let d = rest.degree().unwrap();
        out.push((rest, d));
    }
    out
}

fn equal_degree(f: &Poly, d: usize, rng: &mut FactorRng) -> Vec<Poly> {
    let ring = f.ring();
    let n = f.degree().unwrap_or(0);
    if n == d {
        return vec![f.clone()];
    }
    let p = ring.p();
    loop {
        let h = Poly::new(ring, (0..n).map(|_| rng.gen_range(0..p)).collect());
        if h.degree().unwrap_or(0) == 0 {
            continue;
        }
        let mut g = f.gcd(&h);
        if g.degree().unwrap_or(0) == 0 {
            let u = if p == 2 {
                // trace map h + h^2 + … + h^{2^{d-1}}
                let mut t = h.clone();
                let mut acc = h.clone();
                for _ in 1..d {
                    t = t.mulmod(&t, f);
                    acc = acc.add(&t);
                }
                acc
            } else {
                // h^{(p^d-1)/2} = ∏_{i<d} (h^{(p-1)/2})^{p^i}
                let y = h.powmod(((p - 1) / 2) as u128, f);
                let mut z = y.clone();
                let mut acc = y;
                for _ in 1..d {
                    z = z.powmod(p as u128, f);
                    acc = acc.mulmod(&z, f);
                }
                acc.sub(&Poly::one(ring))
            };
            g = f.gcd(&u);
        }
        let dg = g.degree().unwrap_or(0);
        if dg > 0 && dg < n {
            let other = f.divmod(&g).expect("field").0;
            let mut out = equal_degree(&g, d, rng);
            out.extend(equal_degree(&other, d, rng));
            return out;
        }
    }
}

/// Orbits of multiplication by `p` on the roots of `x^n - λ` for
/// `λ = ±1`, as exponent sets of a primitive `n`-th (resp. `2n`-th) root
/// of unity.
pub fn cyclotomic_cosets(n: usize, lambda: i64, p: u64) -> Result<Vec<Vec<usize>>> {
    if n == 0 {
        return Err(Error::Invalid("length must be positive".into()));
    }
    if (n as u64) % p == 0 {
        return Err(Error::GcdViolation { n, p });
    }
    let (modulus, residues): (usize, Vec<usize>) = match lambda {
        1 => (n, (0..n).collect()),
        // -1 = 1 in characteristic 2
        -1 if p == 2 => (n, (0..n).collect()),
        -1 => (2 * n, (0..n).map(|i| 2 * i + 1).collect()),
        _ => {
            return Err(Error::Invalid(format!(
                "coset counting is defined for lambda = ±1, got {lambda}"
            )))
        }
    };
    let mut seen = vec![false; modulus];
    let mut out = Vec::new();
    for r in residues {
        if seen[r] {
            continue;
        }
        let mut coset = Vec::new();
        let mut s = r;
        while !seen[s] {
            seen[s] = true;
            coset.push(s);
            s = (s * p as usize) % modulus;
        }
        coset.sort_unstable();
        out.push(coset);
    }
    Ok(out)
}

pub fn cyclotomic_count(n: usize, lambda: i64, p: u64) -> Result<usize> {
    Ok(cyclotomic_cosets(n, lambda, p)?.len())
}
