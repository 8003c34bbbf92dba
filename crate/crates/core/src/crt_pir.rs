//! Codes over `Z_m` as Chinese products of codes over `Z_{p_i^{e_i}}`.

use serde::{Deserialize, Serialize};

use crate::code::fp;
use crate::code::{Classification, Group, LinearCode, Search, WordSpace};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ring::{ChainRing, Flavor};

/// `m = ∏ p_i^{e_i}`, primes increasing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModulusFactorization {
    pub m: u64,
    pub parts: Vec<(u64, u32)>,
}

impl ModulusFactorization {
    pub fn new(m: u64) -> Result<Self> {
        if m < 2 {
            return Err(Error::Invalid(format!("modulus must be at least 2, got {m}")));
        }
        let mut parts = Vec::new();
        let mut rest = m;
        let mut p = 2u64;
        while p * p <= rest {
            if rest % p == 0 {
                let mut e = 0;
                while rest % p == 0 {
                    rest /= p;
                    e += 1;
                }
                parts.push((p, e));
            }
            p += 1;
        }
        if rest > 1 {
            parts.push((rest, 1));
        }
        Ok(ModulusFactorization { m, parts })
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.parts.iter().map(|&(p, _)| p)
    }

    pub fn rings(&self) -> Result<Vec<ChainRing>> {
        self.parts.iter().map(|&(p, e)| ChainRing::zpe(p, e)).collect()
    }
}

fn modpow(mut a: u128, mut k: u128, m: u128) -> u128 {
    let mut acc = 1 % m;
    a %= m;
    while k > 0 {
        if k & 1 == 1 {
            acc = acc * a % m;
        }
        a = a * a % m;
        k >>= 1;
    }
    acc
}

fn inv_mod(a: u64, m: u64) -> u64 {
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    old_s.rem_euclid(m as i128) as u64
}

/// A code over `Z_m` stored componentwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PirCode {
    modulus: ModulusFactorization,
    components: Vec<LinearCode>,
}

#[derive(Serialize, Deserialize)]
struct ComponentSpec {
    p: u64,
    e: u32,
    code: LinearCode,
}

#[derive(Serialize, Deserialize)]
struct PirSpec {
    m: u64,
    components: Vec<ComponentSpec>,
}

impl Serialize for PirCode {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PirSpec {
            m: self.m(),
            components: self
                .components
                .iter()
                .map(|c| ComponentSpec {
                    p: c.ring().p(),
                    e: c.ring().e(),
                    code: c.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PirCode {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let spec = PirSpec::deserialize(d)?;
        let code = crt_combine(spec.components.into_iter().map(|c| c.code).collect())
            .map_err(serde::de::Error::custom)?;
        if code.m() != spec.m {
            return Err(serde::de::Error::custom("modulus does not match the components"));
        }
        Ok(code)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentReport {
    pub p: u64,
    pub e: u32,
    pub classification: Classification,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PirClassification {
    pub m: u64,
    pub n: usize,
    pub cardinality: Option<u128>,
    pub rank: usize,
    pub d: usize,
    pub is_free: bool,
    pub is_self_dual: bool,
    pub is_mds: bool,
    pub components: Vec<ComponentReport>,
}

/// Chinese product of codes over `Z_{p_i^{e_i}}` with distinct primes.
pub fn crt_combine(mut components: Vec<LinearCode>) -> Result<PirCode> {
    let n = components.first().ok_or(Error::EmptyMatrix)?.n();
    for c in &components {
        if c.n() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                got: c.n(),
            });
        }
        if c.ring().flavor() != Flavor::IntegerModular && c.ring().e() > 1 {
            return Err(Error::Invalid(format!("component over {} is not a ring Z_(p^e)", c.ring())));
        }
    }
    components.sort_by_key(|c| c.ring().p());
    for w in components.windows(2) {
        if w[0].ring().p() == w[1].ring().p() {
            return Err(Error::SharedPrime(w[0].ring().p()));
        }
    }
    let mut m = 1u64;
    let mut parts = Vec::new();
    for c in &components {
        let r = c.ring();
        m = m
            .checked_mul(r.size())
            .ok_or_else(|| Error::Invalid("modulus overflows 64 bits".into()))?;
        parts.push((r.p(), r.e()));
    }
    let components = components
        .into_iter()
        .map(|c| {
            let r = ChainRing::zpe(c.ring().p(), c.ring().e())?;
            LinearCode::with_rows(r, n, c.rows().to_vec())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PirCode {
        modulus: ModulusFactorization { m, parts },
        components,
    })
}

/// Components of the code over `Z_m` generated by `rows`.
pub fn crt_split(m: u64, rows: &[Vec<u64>]) -> Result<PirCode> {
    let n = rows.first().ok_or(Error::EmptyMatrix)?.len();
    let fac = ModulusFactorization::new(m)?;
    let components = fac
        .rings()?
        .into_iter()
        .map(|r| {
            let reduced = rows
                .iter()
                .map(|row| {
                    if row.len() != n {
                        return Err(Error::LengthMismatch {
                            expected: n,
                            got: row.len(),
                        });
                    }
                    Ok(row.iter().map(|&a| a % r.size()).collect())
                })
                .collect::<Result<Vec<Vec<u64>>>>()?;
            LinearCode::with_rows(r, n, reduced)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PirCode {
        modulus: fac,
        components,
    })
}

impl PirCode {
    pub fn m(&self) -> u64 {
        self.modulus.m
    }

    pub fn n(&self) -> usize {
        self.components[0].n()
    }

    pub fn modulus(&self) -> &ModulusFactorization {
        &self.modulus
    }

    pub fn components(&self) -> &[LinearCode] {
        &self.components
    }

    /// `c_i ∈ Z_m` with `c_i ≡ 1 mod p_i^{e_i}` and `≡ 0` modulo the rest.
    fn idempotents(&self) -> Vec<u64> {
        let m = self.m();
        self.components
            .iter()
            .map(|c| {
                let q = c.ring().size();
                let rest = m / q;
                ((rest as u128 * inv_mod(rest % q, q) as u128) % m as u128) as u64
            })
            .collect()
    }

    fn embed(&self, idem: &[u64], parts: &[Option<&[u64]>]) -> Vec<u64> {
        let m = self.m() as u128;
        (0..self.n())
            .map(|j| {
                parts
                    .iter()
                    .zip(idem)
                    .filter_map(|(row, &c)| row.map(|r| r[j] as u128 * c as u128 % m))
                    .fold(0u128, |a, b| (a + b) % m) as u64
            })
            .collect()
    }

    /// Generator matrix over `Z_m`: row `r` is the CRT of the `r`-th
    /// standard-form rows of the components (zero where a component has
    /// fewer rows).
    pub fn generator_matrix(&self) -> Vec<Vec<u64>> {
        let idem = self.idempotents();
        let mats: Vec<Vec<Vec<u64>>> = self.components.iter().map(|c| c.generator_matrix()).collect();
        let k = mats.iter().map(|g| g.len()).max().unwrap_or(0);
        (0..k)
            .map(|r| {
                let parts: Vec<Option<&[u64]>> = mats.iter().map(|g| g.get(r).map(|v| v.as_slice())).collect();
                self.embed(&idem, &parts)
            })
            .collect()
    }

    /// Enumerates the combined code directly over `Z_m`.
    pub fn word_space(&self) -> WordSpace {
        let idem = self.idempotents();
        let mut gens = Vec::new();
        let mut radix = Vec::new();
        for (i, c) in self.components.iter().enumerate() {
            for g in c.additive_generators() {
                let mut parts: Vec<Option<&[u64]>> = vec![None; self.components.len()];
                parts[i] = Some(&g);
                gens.push(self.embed(&idem, &parts));
                radix.push(c.ring().p());
            }
        }
        WordSpace::new(Group::Modular(self.m()), self.n(), gens, radix)
    }

    pub fn log_sizes(&self) -> Vec<u64> {
        self.components.iter().map(|c| c.log_size()).collect()
    }

    pub fn size(&self) -> Option<u128> {
        self.components
            .iter()
            .try_fold(1u128, |acc, c| c.size().and_then(|s| acc.checked_mul(s)))
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(|c| c.rank()).max().unwrap_or(0)
    }

    /// Minimum distance of the combined code by direct enumeration.
    pub fn min_distance_direct(&self, search: Search) -> Result<usize> {
        match self.size() {
            Some(s) if s <= search.budget => {}
            s => {
                return Err(Error::BudgetExceeded {
                    size: s.unwrap_or(u128::MAX),
                    budget: search.budget,
                })
            }
        }
        Ok(self.word_space().min_weight(search.strategy, 1).unwrap_or(0))
    }

    pub fn contains(&self, word: &[u64]) -> bool {
        self.components
            .iter()
            .all(|c| c.contains(&word.iter().map(|&a| a % c.ring().size()).collect::<Vec<_>>()))
    }

    /// Attributes assembled from the components: rank is the maximum, `d`
    /// the minimum, free/self-dual iff every component is (free with equal
    /// ranks), MDS iff every component is MDS with equal ranks.
    pub fn classify(&self, search: Search) -> Result<PirClassification> {
        let reports = self
            .components
            .iter()
            .map(|c| {
                Ok(ComponentReport {
                    p: c.ring().p(),
                    e: c.ring().e(),
                    classification: c.classify(search)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let ranks: Vec<usize> = reports.iter().map(|r| r.classification.rank).collect();
        let same_rank = ranks.windows(2).all(|w| w[0] == w[1]);
        let d = reports.iter().map(|r| r.classification.d).min().unwrap_or(0);
        let is_free = same_rank && reports.iter().all(|r| r.classification.is_free);
        let is_mds = same_rank && reports.iter().all(|r| r.classification.is_mds);
        // Singleton over Z_m: |C| = m^{n-d+1}
        let singleton = d > 0
            && self
                .components
                .iter()
                .all(|c| c.log_size() == c.ring().e() as u64 * (self.n() - d + 1) as u64);
        if is_mds != singleton {
            return Err(Error::Verification("componentwise MDS disagrees with the Singleton bound".into()));
        }
        if is_mds && !is_free {
            return Err(Error::Verification("MDS code over Z_m that is not free".into()));
        }
        Ok(PirClassification {
            m: self.m(),
            n: self.n(),
            cardinality: self.size(),
            rank: self.rank(),
            d,
            is_free,
            is_self_dual: reports.iter().all(|r| r.classification.is_self_dual),
            is_mds,
            components: reports,
        })
    }
}

/// A certified MDS generator matrix over `F_p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldCertificate {
    pub p: u64,
    pub n: usize,
    pub k: usize,
    pub construction: String,
    pub generator: Vec<Vec<u64>>,
    /// `n - k + 1`, checked on every `k`-subset of columns.
    pub d: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "answer", rename_all = "snake_case")]
pub enum MdsAnswer {
    Yes { certificates: Vec<FieldCertificate> },
    No { p: u64, reason: String },
    Unknown { p: u64, reason: String },
}

/// Upper limit on candidate matrices visited by the exhaustive search.
pub const MDS_SEARCH_LIMIT: u128 = 10_000_000;

fn certificate(p: u64, n: usize, k: usize, construction: &str, generator: Vec<Vec<u64>>) -> Result<FieldCertificate> {
    if generator.len() != k || !fp::is_mds_generator(&generator, p) || fp::rank(&generator, p) != k {
        return Err(Error::Verification(format!("{construction} over F_{p} is not MDS")));
    }
    Ok(FieldCertificate {
        p,
        n,
        k,
        construction: construction.into(),
        generator,
        d: n - k + 1,
    })
}

/// Rows `(a^i)_a` over `n` distinct evaluation points, with the point at
/// infinity `(0, …, 0, 1)ᵀ` appended when `n = p + 1`.
fn reed_solomon_field(p: u64, n: usize, k: usize) -> Vec<Vec<u64>> {
    let finite = n.min(p as usize);
    (0..k)
        .map(|i| {
            let mut row: Vec<u64> = (0..finite as u64)
                .map(|a| modpow(a as u128, i as u128, p as u128) as u64)
                .collect();
            if n > finite {
                row.push(u64::from(i == k - 1));
            }
            row
        })
        .collect()
}

/// Systematic `[I_k | A]` search with `A` normalized to ones in its first
/// row and column. `Ok(None)` means none exists; `Err` means the space is
/// over the limit.
fn search_field_mds(p: u64, n: usize, k: usize, limit: u128) -> Result<Option<Vec<Vec<u64>>>> {
    let r = n - k;
    let free = (k - 1) * (r - 1);
    let space = u32::try_from(free)
        .ok()
        .and_then(|f| ((p - 1) as u128).checked_pow(f))
        .unwrap_or(u128::MAX);
    if space > limit {
        return Err(Error::BudgetExceeded { size: space, budget: limit });
    }
    let mut a = vec![vec![1u64; r]; k];
    fn fill(a: &mut Vec<Vec<u64>>, row: usize, p: u64) -> bool {
        let (k, r) = (a.len(), a[0].len());
        if row == k {
            return true;
        }
        // odometer over entries 1..r of this row, values 1..p
        for v in a[row][1..].iter_mut() {
            *v = 1;
        }
        loop {
            if fp::minors_through_row_nonzero(a, row, p) && fill(a, row + 1, p) {
                return true;
            }
            let mut j = 1;
            while j < r {
                if a[row][j] + 1 < p {
                    a[row][j] += 1;
                    break;
                }
                a[row][j] = 1;
                j += 1;
            }
            if j == r {
                return false;
            }
        }
    }
    if !fp::minors_through_row_nonzero(&a, 0, p) || !fill(&mut a, 1, p) {
        return Ok(None);
    }
    Ok(Some(
        (0..k)
            .map(|i| {
                let mut row = vec![0; n];
                row[i] = 1;
                row[k..].copy_from_slice(&a[i]);
                row
            })
            .collect(),
    ))
}

/// Existence of an `[n, k]` MDS code over `F_p`.
pub fn mds_exists_field(n: usize, k: usize, p: u64) -> Result<MdsAnswer> {
    if k > n || n == 0 {
        return Err(Error::Invalid(format!("need 0 ≤ k ≤ n, n ≥ 1 (n={n}, k={k})")));
    }
    let yes = |c: FieldCertificate| Ok(MdsAnswer::Yes { certificates: vec![c] });
    if k == 0 {
        return yes(certificate(p, n, 0, "zero code", Vec::new())?);
    }
    if k == n {
        let id = (0..n).map(|i| (0..n).map(|j| u64::from(i == j)).collect()).collect();
        return yes(certificate(p, n, k, "full space", id)?);
    }
    if k == 1 {
        return yes(certificate(p, n, 1, "repetition", vec![vec![1; n]])?);
    }
    if k == n - 1 {
        let g = (0..k)
            .map(|i| {
                let mut row = vec![0; n];
                row[i] = 1;
                row[n - 1] = p - 1;
                row
            })
            .collect();
        return yes(certificate(p, n, k, "parity check", g)?);
    }
    if n as u64 <= p + 1 {
        let name = if n as u64 == p + 1 { "extended Reed-Solomon" } else { "Reed-Solomon" };
        return yes(certificate(p, n, k, name, reed_solomon_field(p, n, k))?);
    }
    // 2 ≤ k ≤ n-2: an MDS code forces k ≤ p - 1 and d = n - k + 1 ≤ p
    if k as u64 + 1 > p || (n - k + 1) as u64 > p {
        return Ok(MdsAnswer::No {
            p,
            reason: format!("[{n},{k},{}] over F_{p} needs k+1 ≤ {p} and n-k+1 ≤ {p}", n - k + 1),
        });
    }
    match search_field_mds(p, n, k, MDS_SEARCH_LIMIT) {
        Ok(Some(g)) => yes(certificate(p, n, k, "exhaustive search", g)?),
        Ok(None) => Ok(MdsAnswer::No {
            p,
            reason: format!("exhaustive search over systematic [{n},{k}] generators of F_{p}"),
        }),
        Err(Error::BudgetExceeded { size, .. }) => Ok(MdsAnswer::Unknown {
            p,
            reason: format!("search space of {size} matrices exceeds {MDS_SEARCH_LIMIT}"),
        }),
        Err(e) => Err(e),
    }
}

/// Existence over `Z_m`, which holds iff it holds over every `F_{p_i}`.
pub fn mds_exists(n: usize, k: usize, m: u64) -> Result<MdsAnswer> {
    let fac = ModulusFactorization::new(m)?;
    let mut certificates = Vec::new();
    let mut unknown = None;
    for p in fac.primes() {
        match mds_exists_field(n, k, p)? {
            MdsAnswer::Yes { certificates: c } => certificates.extend(c),
            no @ MdsAnswer::No { .. } => return Ok(no),
            u @ MdsAnswer::Unknown { .. } => unknown = unknown.or(Some(u)),
        }
    }
    Ok(unknown.unwrap_or(MdsAnswer::Yes { certificates }))
}

fn binomial(n: u64, k: u64) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// `|F_{p_i}| > C(n-1, n-k-1)` for every prime of `m`.
pub fn sufficiency_bound(n: usize, k: usize, m: u64) -> Result<bool> {
    if k >= n {
        return Err(Error::Invalid(format!("bound needs n - k - 1 ≥ 0 (n={n}, k={k})")));
    }
    let b = binomial(n as u64 - 1, (n - k - 1) as u64);
    Ok(ModulusFactorization::new(m)?.primes().all(|p| p as u128 > b))
}

/// Least element of order `n` in `F_p`, lifted to a root of `x^n - 1` in
/// `Z_{p^e}` by Newton steps.
pub fn root_of_unity(n: usize, ring: ChainRing) -> Result<u64> {
    let p = ring.p();
    if (p - 1) % n as u64 != 0 {
        return Err(Error::Hypothesis(format!("{n} does not divide {p} - 1")));
    }
    let order = |a: u64| (1..=n).find(|&d| modpow(a as u128, d as u128, p as u128) == 1);
    let a = (1..p)
        .find(|&a| order(a) == Some(n))
        .ok_or_else(|| Error::Verification(format!("no element of order {n} in F_{p}")))?;
    let f = Poly::xn_minus(ring, n, 1);
    let df = f.derivative();
    let mut x = a;
    for _ in 0..ring.e() {
        let step = ring.mul(f.eval(x), ring.inv(df.eval(x))?);
        x = ring.sub(x, step);
    }
    if ring.pow(x, n as u64) != 1 {
        return Err(Error::Verification("lifted root is not an n-th root of unity".into()));
    }
    Ok(x)
}

/// Cyclic Reed-Solomon code of length `n` and distance `d` over `Z_{p^e}`,
/// `g = ∏_{j=1}^{d-1} (x - α^j)`. `d ∈ {1, 2, n}` need no root of unity.
pub fn rs_code_chain(n: usize, d: usize, ring: ChainRing) -> Result<LinearCode> {
    if n == 0 || d == 0 || d > n {
        return Err(Error::Invalid(format!("need 1 ≤ d ≤ n (n={n}, d={d})")));
    }
    let g = if d == 1 {
        Poly::one(ring)
    } else if d == 2 {
        Poly::from_ints(ring, &[-1, 1])
    } else if d == n {
        Poly::new(ring, vec![1; n])
    } else {
        let alpha = root_of_unity(n, ring)?;
        (1..d as u64).fold(Poly::one(ring), |acc, j| {
            acc.mul(&Poly::new(ring, vec![ring.neg(ring.pow(alpha, j)), 1]))
        })
    };
    let k = n + 1 - d;
    let rows = (0..k).map(|i| g.shift(i).to_vec(n)).collect();
    LinearCode::new(ring, rows)
}

/// Reed-Solomon code over `Z_m` as the Chinese product of its components.
pub fn rs_code(n: usize, d: usize, m: u64) -> Result<PirCode> {
    let comps = ModulusFactorization::new(m)?
        .rings()?
        .into_iter()
        .map(|r| rs_code_chain(n, d, r))
        .collect::<Result<Vec<_>>>()?;
    crt_combine(comps)
}
