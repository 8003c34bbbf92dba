//! Self-dual MDS codes: negacyclic and extended duadic constructions over
//! prime fields, a systematic search, lifts to `Z_{p^e}` and Chinese
//! products over `Z_m`.
//!
//! Every construction is a search whose output is re-verified: zero Gram
//! matrix, Singleton equality, and the distance by enumeration.

use serde::{Deserialize, Serialize};

use crate::code::{fp, LinearCode, Search};
use crate::constacyclic::ConstacyclicCode;
use crate::crt_pir::{crt_combine, ModulusFactorization, PirCode};
use crate::error::{Error, Result};
use crate::poly::{factor_over_residue, factor_xn_minus_lambda, Poly};
use crate::ring::ChainRing;

/// Candidate limit for the exhaustive searches.
pub const SEARCH_LIMIT: u128 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Negacyclic,
    ExtendedDuadic,
    Systematic,
    Auto,
}

impl std::str::FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "negacyclic" => Ok(Family::Negacyclic),
            "extended-duadic" | "duadic" => Ok(Family::ExtendedDuadic),
            "systematic" | "search" => Ok(Family::Systematic),
            "auto" => Ok(Family::Auto),
            other => Err(Error::Invalid(format!("unknown family `{other}`"))),
        }
    }
}

/// Which negacyclic condition holds for `(n, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum NegacyclicCondition {
    /// `n = 2n'`, `n'` odd, `p ≡ 1 mod 4`, `n | p + 1`.
    First,
    /// `n = 2^a n'`, `n'` odd, `p ≡ 1 mod 2^{a+1} n'`, `n | p - 1`.
    Second,
}

pub fn negacyclic_condition(n: usize, p: u64) -> Option<NegacyclicCondition> {
    let n = n as u64;
    if n == 0 || n % 2 == 1 || p % 2 == 0 || n % p == 0 {
        return None;
    }
    let a = n.trailing_zeros();
    let odd = n >> a;
    if a == 1 && p % 4 == 1 && (p + 1) % n == 0 {
        return Some(NegacyclicCondition::First);
    }
    if (p - 1) % ((1u64 << (a + 1)) * odd) == 0 && (p - 1) % n == 0 {
        return Some(NegacyclicCondition::Second);
    }
    None
}

/// `n = r^k` for a prime `r`.
fn prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let r = (2..=n).find(|d| n % d == 0)?;
    let mut k = 0;
    let mut t = n;
    while t % r == 0 {
        t /= r;
        k += 1;
    }
    (t == 1).then_some((r, k))
}

/// Whether `[n+1, (n+1)/2, (n+3)/2]` extended odd-like duadic codes over
/// `F_q` are predicted: `n = r^k` with `q ≡ r ≡ 3 mod 4`, `k` odd, or
/// `q ≡ r ≡ 1 mod 4`.
pub fn duadic_condition(q: u64, n: usize) -> bool {
    let Some((r, k)) = prime_power(n as u64) else { return false };
    (q % 4 == 3 && r % 4 == 3 && k % 2 == 1) || (q % 4 == 1 && r % 4 == 1)
}

/// A self-dual MDS code over `F_p` and how it was found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldConstruction {
    pub construction: String,
    pub code: LinearCode,
    /// The negacyclic presentation, when there is one.
    pub negacyclic: Option<ConstacyclicCode>,
}

fn is_selfdual_mds_generator(rows: &[Vec<u64>], p: u64) -> bool {
    let n = rows.first().map_or(0, |r| r.len());
    let dot = |a: &[u64], b: &[u64]| a.iter().zip(b).map(|(x, y)| x * y % p).sum::<u64>() % p;
    2 * rows.len() == n
        && rows
            .iter()
            .enumerate()
            .all(|(i, a)| rows[i..].iter().all(|b| dot(a, b) == 0))
        && fp::rank(rows, p) == rows.len()
        && fp::is_mds_generator(rows, p)
}

fn shifts(f: &Poly, count: usize, n: usize) -> Vec<Vec<u64>> {
    (0..count).map(|i| f.shift(i).to_vec(n)).collect()
}

/// Searches the degree-`n/2` divisors of `x^n + 1` over `F_p` for a
/// self-dual MDS negacyclic code, in increasing factor-subset order.
pub fn negacyclic_field(n: usize, p: u64) -> Result<FieldConstruction> {
    if negacyclic_condition(n, p).is_none() {
        return Err(Error::Hypothesis(format!(
            "no negacyclic self-dual MDS condition holds for n={n}, p={p}"
        )));
    }
    let field = ChainRing::field(p)?;
    let set = factor_xn_minus_lambda(n, p - 1, field)?;
    let b = set.len();
    if b >= 64 {
        return Err(Error::Invalid("too many factors".into()));
    }
    for mask in 0u64..1 << b {
        let deg: usize = (0..b)
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| set.factors()[i].degree().unwrap_or(0))
            .sum();
        if deg != n / 2 {
            continue;
        }
        let f = (0..b)
            .filter(|&i| mask >> i & 1 == 1)
            .fold(Poly::one(field), |acc, i| acc.mul(&set.factors()[i]));
        let rows = shifts(&f, n / 2, n);
        if is_selfdual_mds_generator(&rows, p) {
            let cc = ConstacyclicCode::from_divisor(&f, n, p - 1)?;
            return Ok(FieldConstruction {
                construction: format!("negacyclic <{f}>"),
                code: cc.to_linear(),
                negacyclic: Some(cc),
            });
        }
    }
    Err(Error::SearchExhausted(format!(
        "no degree-{} divisor of x^{n}+1 over F_{p} gives a self-dual MDS code",
        n / 2
    )))
}

/// Monic divisors of `f` over a field of the given degree, in
/// lexicographic order of their exponent vectors.
fn divisors_of_degree(f: &Poly, degree: usize) -> Result<Vec<Poly>> {
    let field = f.ring();
    let factors = factor_over_residue(f)?;
    let mut out = Vec::new();
    let mut exps = vec![0u32; factors.len()];
    loop {
        let deg: usize = factors
            .iter()
            .zip(&exps)
            .map(|((g, _), &a)| g.degree().unwrap_or(0) * a as usize)
            .sum();
        if deg == degree {
            let mut d = Poly::one(field);
            for ((g, _), &a) in factors.iter().zip(&exps) {
                for _ in 0..a {
                    d = d.mul(g);
                }
            }
            out.push(d);
        }
        let Some(i) = (0..factors.len()).rev().find(|&i| exps[i] < factors[i].1) else {
            return Ok(out);
        };
        exps[i] += 1;
        for a in exps[i + 1..].iter_mut() {
            *a = 0;
        }
    }
}

/// Extended odd-like duadic `[n+1, (n+1)/2, (n+3)/2]` code over `F_q`.
///
/// Divisors `g` of `x^n - 1` of degree `(n-1)/2` with `g(1) ≠ 0` are
/// extended by `c_∞ = ε Σ c_i`. If none works (always the case when
/// `q | n`, where there are no odd-like splittings) the extension is taken
/// as a general linear functional `c_∞ = Σ w_i c_i` on any
/// degree-`(n-1)/2` divisor.
pub fn extended_duadic_field(q: u64, n: usize) -> Result<FieldConstruction> {
    if !duadic_condition(q, n) {
        return Err(Error::Hypothesis(format!(
            "extended duadic condition fails for q={q}, n={n}"
        )));
    }
    let field = ChainRing::field(q)?;
    let k = (n + 1) / 2;
    let divisors = divisors_of_degree(&Poly::xn_minus(field, n, 1), (n - 1) / 2)?;
    let extend = |rows: &[Vec<u64>], w: &[u64]| -> Vec<Vec<u64>> {
        rows.iter()
            .map(|r| {
                let mut v = r.clone();
                v.push(r.iter().zip(w).map(|(a, b)| a * b % q).sum::<u64>() % q);
                v
            })
            .collect()
    };
    if (n as u64) % q != 0 {
        for g in &divisors {
            if g.eval(1) == 0 {
                continue;
            }
            let rows = shifts(g, k, n);
            for eps in 1..q {
                let ext = extend(&rows, &vec![eps; n]);
                if is_selfdual_mds_generator(&ext, q) {
                    return Ok(FieldConstruction {
                        construction: format!("extended duadic <{g}>, eps={eps}"),
                        code: LinearCode::new(field, ext)?,
                        negacyclic: None,
                    });
                }
            }
        }
    }
    let space = (q as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if space * divisors.len() as u128 > SEARCH_LIMIT {
        return Err(Error::BudgetExceeded {
            size: space * divisors.len() as u128,
            budget: SEARCH_LIMIT,
        });
    }
    for g in &divisors {
        let rows = shifts(g, k, n);
        for idx in 0..space as u64 {
            let w: Vec<u64> = (0..n as u32).map(|i| idx / q.pow(i) % q).collect();
            let ext = extend(&rows, &w);
            if is_selfdual_mds_generator(&ext, q) {
                return Ok(FieldConstruction {
                    construction: format!("extended duadic <{g}>, weights={w:?}"),
                    code: LinearCode::new(field, ext)?,
                    negacyclic: None,
                });
            }
        }
    }
    Err(Error::SearchExhausted(format!(
        "no extended duadic self-dual MDS code of length {} over F_{q}",
        n + 1
    )))
}

/// Systematic `[I_k | A]` with `A Aᵀ = -I` and every square submatrix of
/// `A` nonsingular; rows of `A` are tried in lexicographic order.
pub fn systematic_field(n: usize, p: u64) -> Result<FieldConstruction> {
    if n % 2 == 1 || n == 0 {
        return Err(Error::Hypothesis(format!("self-dual codes need even length, got {n}")));
    }
    if p == 2 {
        return Err(Error::Unsupported("characteristic 2".into()));
    }
    let k = n / 2;
    // an [n, k, k+1] MDS code with 2 ≤ k ≤ n-2 needs k + 1 ≤ p
    if k >= 2 && k as u64 + 1 > p {
        return Err(Error::Hypothesis(format!(
            "no [{n},{k},{}] MDS code exists over F_{p}: the distance exceeds {p}",
            k + 1
        )));
    }
    let space = (p as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    if space > SEARCH_LIMIT {
        return Err(Error::BudgetExceeded { size: space, budget: SEARCH_LIMIT });
    }
    let minus_one = p - 1;
    let dot = |a: &[u64], b: &[u64]| a.iter().zip(b).map(|(x, y)| x * y % p).sum::<u64>() % p;
    let candidates: Vec<Vec<u64>> = (0..space as u64)
        .map(|idx| (0..k as u32).rev().map(|i| idx / p.pow(i) % p).collect::<Vec<u64>>())
        .filter(|a| a.iter().all(|&x| x != 0) && dot(a, a) == minus_one)
        .collect();
    let mut visited: u128 = 0;
    fn extend(
        a: &mut Vec<Vec<u64>>,
        k: usize,
        p: u64,
        candidates: &[Vec<u64>],
        visited: &mut u128,
    ) -> Result<bool> {
        if a.len() == k {
            return Ok(true);
        }
        for c in candidates {
            *visited += 1;
            if *visited > SEARCH_LIMIT {
                return Err(Error::BudgetExceeded {
                    size: *visited,
                    budget: SEARCH_LIMIT,
                });
            }
            if a.iter().any(|r| r.iter().zip(c).map(|(x, y)| x * y % p).sum::<u64>() % p != 0) {
                continue;
            }
            a.push(c.clone());
            if fp::minors_through_row_nonzero(a, a.len() - 1, p) && extend(a, k, p, candidates, visited)? {
                return Ok(true);
            }
            a.pop();
        }
        Ok(false)
    }
    let mut a = Vec::new();
    if !extend(&mut a, k, p, &candidates, &mut visited)? {
        return Err(Error::SearchExhausted(format!(
            "no systematic self-dual MDS [{n},{k}] code over F_{p}"
        )));
    }
    let rows: Vec<Vec<u64>> = (0..k)
        .map(|i| {
            let mut row = vec![0; n];
            row[i] = 1;
            row[k..].copy_from_slice(&a[i]);
            row
        })
        .collect();
    debug_assert!(is_selfdual_mds_generator(&rows, p));
    Ok(FieldConstruction {
        construction: "systematic search".into(),
        code: LinearCode::new(ChainRing::field(p)?, rows)?,
        negacyclic: None,
    })
}

/// Length-`n` self-dual MDS code over `F_p` from the requested family;
/// `Auto` tries negacyclic, then extended duadic, then the systematic
/// search.
pub fn selfdual_mds_field(n: usize, p: u64, family: Family) -> Result<FieldConstruction> {
    match family {
        Family::Negacyclic => negacyclic_field(n, p),
        Family::ExtendedDuadic => {
            if n % 2 == 1 || n < 2 {
                return Err(Error::Hypothesis(format!("extended duadic length must be even, got {n}")));
            }
            extended_duadic_field(p, n - 1)
        }
        Family::Systematic => systematic_field(n, p),
        Family::Auto => {
            if negacyclic_condition(n, p).is_some() {
                if let Ok(c) = negacyclic_field(n, p) {
                    return Ok(c);
                }
            }
            if n % 2 == 0 && n >= 2 && duadic_condition(p, n - 1) {
                if let Ok(c) = extended_duadic_field(p, n - 1) {
                    return Ok(c);
                }
            }
            systematic_field(n, p)
        }
    }
}

/// Brute-force distance when affordable; otherwise, for free codes, the
/// distance of `Tor_0`, which equals `d(C)` for every free code.
pub fn verified_distance(code: &LinearCode, search: Search) -> Result<(usize, DistanceMethod)> {
    match code.min_distance(search) {
        Ok(d) => Ok((d, DistanceMethod::Enumeration)),
        Err(Error::BudgetExceeded { .. }) if code.is_free() => {
            let d = code.torsion(0)?.min_distance(search)?;
            Ok((d, DistanceMethod::Torsion))
        }
        Err(e) => Err(e),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DistanceMethod {
    Enumeration,
    Torsion,
}

/// Self-dual MDS code over `Z_{p^e}`: built over `F_p`, then lifted. The
/// negacyclic construction lifts through the factorization of `x^n + 1`
/// and stays negacyclic; the others use the digit-by-digit self-dual lift.
pub fn selfdual_mds_chain(n: usize, p: u64, e: u32, family: Family) -> Result<(FieldConstruction, LinearCode)> {
    let base = selfdual_mds_field(n, p, family)?;
    let ring = ChainRing::zpe(p, e)?;
    let lifted = if e == 1 {
        base.code.clone()
    } else if let Some(cc) = &base.negacyclic {
        cc.map_precision(&ring)?.to_linear()
    } else {
        base.code.selfdual_lift(&ring)?
    };
    Ok((base, lifted))
}

/// Negacyclic self-dual MDS code over `Z_{p^e}`.
pub fn negacyclic_selfdual_mds(n: usize, p: u64, e: u32) -> Result<ConstacyclicCode> {
    let base = negacyclic_field(n, p)?;
    let ring = ChainRing::zpe(p, e)?;
    let cc = base.negacyclic.expect("negacyclic construction").map_precision(&ring)?;
    let lin = cc.to_linear();
    if !lin.is_self_dual() {
        return Err(Error::Verification("lifted negacyclic code is not self-dual".into()));
    }
    Ok(cc)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentCertificate {
    pub p: u64,
    pub e: u32,
    pub construction: String,
    /// Generator rows over `Z_{p^e}`.
    pub generator: Vec<Vec<u64>>,
    pub d: usize,
    pub d_method: DistanceMethod,
}

/// A verified self-dual MDS code over `Z_m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub n: usize,
    pub m: u64,
    pub k: usize,
    /// Generator rows over `Z_m`.
    pub generator: Vec<Vec<u64>>,
    pub d: usize,
    pub gram_zero: bool,
    pub is_self_dual: bool,
    pub is_mds: bool,
    pub components: Vec<ComponentCertificate>,
}

/// Chinese product of per-prime self-dual MDS codes, verified.
pub fn zm_selfdual_mds(n: usize, m: u64, family: Family, search: Search) -> Result<(PirCode, Certificate)> {
    let fac = ModulusFactorization::new(m)?;
    let mut comps = Vec::new();
    let mut certs = Vec::new();
    for &(p, e) in &fac.parts {
        let (base, code) = selfdual_mds_chain(n, p, e, family)?;
        let (d, d_method) = verified_distance(&code, search)?;
        if d != n / 2 + 1 {
            return Err(Error::Verification(format!(
                "component over Z_{p}^{e} has distance {d}, expected {}",
                n / 2 + 1
            )));
        }
        if code.gram().iter().flatten().any(|&a| a != 0) || !code.is_self_dual() {
            return Err(Error::Verification(format!("component over Z_{p}^{e} is not self-dual")));
        }
        certs.push(ComponentCertificate {
            p,
            e,
            construction: base.construction,
            generator: code.generator_matrix(),
            d,
            d_method,
        });
        comps.push(code);
    }
    let pir = crt_combine(comps)?;
    let generator = pir.generator_matrix();
    let gram_zero = generator.iter().all(|a| {
        generator.iter().all(|b| {
            a.iter()
                .zip(b)
                .fold(0u128, |acc, (&x, &y)| (acc + x as u128 * y as u128) % m as u128)
                == 0
        })
    });
    let d = certs.iter().map(|c| c.d).min().unwrap_or(0);
    let k = pir.rank();
    // Singleton over Z_m: |C| = m^{n-d+1} with |C| = m^{n/2}
    let is_mds = pir.components().iter().all(|c| c.is_free() && c.rank() == n / 2) && d == n - k + 1;
    let is_self_dual = gram_zero && pir.components().iter().all(|c| c.is_self_dual());
    if !(gram_zero && is_mds && is_self_dual) {
        return Err(Error::Verification(format!("code over Z_{m} failed verification")));
    }
    Ok((
        pir,
        Certificate {
            n,
            m,
            k,
            generator,
            d,
            gram_zero,
            is_self_dual,
            is_mds,
            components: certs,
        },
    ))
}

/// `(n, [m, …])` rows of the published table of self-dual MDS codes.
pub const TABLE1: &[(usize, &[u64])] = &[
    (4, &[3, 7, 13, 17, 21, 23, 39, 49, 91]),
    (6, &[5, 25, 13, 41, 65, 169, 205]),
    (8, &[5, 7, 11, 13, 17, 25, 49, 65, 77, 91, 121]),
    (10, &[9, 13, 17, 81, 89, 117, 169]),
    (12, &[11, 19, 23, 29, 121, 67, 209, 361, 261]),
    (14, &[13, 169, 377]),
    (16, &[11, 13, 17, 23, 121, 143, 187]),
    (18, &[17, 19, 53, 137, 289, 323, 361]),
    (20, &[19, 41, 361, 779]),
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table1Entry {
    pub n: usize,
    pub m: u64,
    pub certified: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
}

pub fn table1(entries: &[(usize, u64)], search: Search) -> Vec<Table1Entry> {
    let mut sorted = entries.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    crate::par::map_collect(search.strategy, sorted, |&(n, m)| {
        match zm_selfdual_mds(n, m, Family::Auto, search) {
            Ok((_, cert)) => Table1Entry {
                n,
                m,
                certified: true,
                certificate: Some(cert),
                failure: None,
            },
            Err(e) => Table1Entry {
                n,
                m,
                certified: false,
                certificate: None,
                failure: Some(e.to_string()),
            },
        }
    })
}

/// Fixed-width text rendering of a [`table1`] report.
pub fn table1_text(entries: &[Table1Entry]) -> String {
    let mut out = format!("{:>3}  {:>5}  {:<9}  {:>2}  {}\n", "n", "m", "status", "d", "construction");
    for e in entries {
        let (status, d, how) = match &e.certificate {
            Some(c) => (
                "certified",
                c.d.to_string(),
                c.components
                    .iter()
                    .map(|x| {
                        let q = if x.e == 1 { x.p.to_string() } else { format!("{}^{}", x.p, x.e) };
                        format!("Z_{q}: {}", x.construction)
                    })
                    .collect::<Vec<_>>()
                    .join("; "),
            ),
            None => ("failed", "-".into(), e.failure.clone().unwrap_or_default()),
        };
        out.push_str(&format!("{:>3}  {:>5}  {:<9}  {:>2}  {}\n", e.n, e.m, status, d, how));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conditions() {
        assert_eq!(negacyclic_condition(6, 5), Some(NegacyclicCondition::First));
        assert_eq!(negacyclic_condition(4, 17), Some(NegacyclicCondition::Second));
        assert_eq!(negacyclic_condition(6, 13), Some(NegacyclicCondition::Second));
        assert_eq!(negacyclic_condition(6, 3), None);
        assert_eq!(negacyclic_condition(4, 13), None);
        assert!(duadic_condition(7, 3));
        assert!(duadic_condition(13, 5));
        assert!(duadic_condition(3, 3));
        assert!(!duadic_condition(5, 4));
        assert!(!duadic_condition(13, 3));
    }

    #[test]
    fn negacyclic_examples() {
        let c = negacyclic_selfdual_mds(6, 5, 2).unwrap();
        let lin = c.to_linear();
        assert!(lin.is_self_dual() && lin.is_free());
        assert_eq!(lin.min_distance(Search::default()).unwrap(), 4);
        assert_eq!(c.lambda(), 24);

        let f17 = negacyclic_field(4, 17).unwrap().code;
        let cl = f17.classify(Search::default()).unwrap();
        assert!(cl.is_mds && cl.is_self_dual);
        assert_eq!(cl.d, 3);
        assert!(matches!(negacyclic_field(6, 3), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn duadic_examples() {
        let t = extended_duadic_field(3, 3).unwrap().code;
        let cl = t.classify(Search::default()).unwrap();
        assert!(cl.is_mds && cl.is_self_dual);
        assert_eq!((t.n(), cl.d), (4, 3));

        // 13 is not a square mod 5: x^5 - 1 = (x - 1)·(irreducible quartic)
        // over F_13, so there is no duadic splitting at all
        assert!(matches!(extended_duadic_field(13, 5), Err(Error::SearchExhausted(_))));
        let c = selfdual_mds_field(6, 13, Family::Auto).unwrap();
        assert!(c.construction.starts_with("negacyclic"));
        let cl = c.code.classify(Search::default()).unwrap();
        assert!(cl.is_mds && cl.is_self_dual);
        assert_eq!(cl.d, 4);
        assert!(matches!(extended_duadic_field(5, 4), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn systematic_examples() {
        let c = systematic_field(4, 13).unwrap().code;
        assert!(c.classify(Search::default()).unwrap().is_mds);
        assert!(matches!(systematic_field(10, 3), Err(Error::Hypothesis(_))));
        // F_5 has no self-dual [4,2,3] code: -1 is a square but the search fails
        assert!(matches!(systematic_field(4, 5), Err(Error::SearchExhausted(_))));
    }

    #[test]
    fn zm_examples() {
        let s = Search::default();
        for (n, m) in [(4, 21), (6, 65), (4, 9)] {
            let (pir, cert) = zm_selfdual_mds(n, m, Family::Auto, s).unwrap();
            assert_eq!(cert.d, n / 2 + 1);
            let cl = pir.classify(s).unwrap();
            assert!(cl.is_mds && cl.is_self_dual);
        }
    }

    #[test]
    fn table_text_layout() {
        let report = table1(&[(4, 3), (10, 9)], Search::default());
        assert!(report[0].certified);
        assert!(!report[1].certified);
        let text = table1_text(&report);
        assert!(text.lines().nth(1).unwrap().starts_with("  4      3  certified   3"));
        assert!(text.lines().nth(2).unwrap().starts_with(" 10      9  failed"));
    }
}
