//! Linear codes over a finite chain ring.

mod enumerate;
pub mod form;
pub mod fp;
mod lift;

use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

pub use enumerate::{Group, WordIter, WordSpace};
pub use form::{canonical_form, CanonicalForm, CodeType, StandardForm};

use crate::error::{Error, Result};
use crate::par::Strategy;
use crate::ring::{ChainRing, RingElement};

/// Default cap on the number of codewords visited by exhaustive searches.
pub const DEFAULT_BUDGET: u128 = 1 << 22;

/// Environment variable overriding [`DEFAULT_BUDGET`].
pub const BUDGET_ENV: &str = "CHAINCODES_ENUM_BUDGET";

pub fn default_budget() -> u128 {
    std::env::var(BUDGET_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_BUDGET)
}

/// Settings for exhaustive searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Search {
    pub budget: u128,
    pub strategy: Strategy,
}

impl Default for Search {
    fn default() -> Self {
        Search {
            budget: default_budget(),
            strategy: Strategy::default(),
        }
    }
}

impl Search {
    pub fn with_budget(budget: u128) -> Self {
        Search {
            budget,
            ..Search::default()
        }
    }

    pub fn sequential(self) -> Self {
        Search {
            strategy: Strategy::Sequential,
            ..self
        }
    }
}

/// A submodule of `R^n` given by generator rows. Derived data is cached on
/// first use; the code itself is immutable.
#[derive(Debug)]
pub struct LinearCode {
    ring: ChainRing,
    n: usize,
    rows: Vec<Vec<u64>>,
    standard: OnceLock<StandardForm>,
    canonical: OnceLock<CanonicalForm>,
}

impl Clone for LinearCode {
    fn clone(&self) -> Self {
        LinearCode {
            ring: self.ring,
            n: self.n,
            rows: self.rows.clone(),
            standard: self.standard.clone(),
            canonical: self.canonical.clone(),
        }
    }
}

/// Codes compare as row spaces.
impl PartialEq for LinearCode {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.n == other.n && self.canonical() == other.canonical()
    }
}

impl Eq for LinearCode {}

impl Hash for LinearCode {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.ring.hash(state);
        self.n.hash(state);
        self.canonical().hash(state);
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Invariants {
    /// `log_p |C|`.
    pub log_size: u64,
    /// `|C|`, when it fits.
    pub cardinality: Option<u128>,
    pub rank: usize,
    pub free_rank: usize,
    pub is_free: bool,
}

/// Minimum distance, exact or bracketed when enumeration is out of budget.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Distance {
    Exact { d: usize },
    Bounds { lower: usize, upper: usize, size: Option<u128> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub d: usize,
    pub log_size: u64,
    pub rank: usize,
    pub code_type: CodeType,
    pub is_mds: bool,
    pub is_mdr: bool,
    pub is_self_orthogonal: bool,
    pub is_self_dual: bool,
    pub is_free: bool,
}

#[derive(Serialize, Deserialize)]
struct CodeSpec {
    ring: ChainRing,
    n: usize,
    rows: Vec<Vec<Vec<u64>>>,
}

impl Serialize for LinearCode {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CodeSpec {
            ring: self.ring,
            n: self.n,
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|&a| self.ring.digits(a)).collect())
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LinearCode {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let spec = CodeSpec::deserialize(d)?;
        let rows = spec
            .rows
            .iter()
            .map(|r| r.iter().map(|a| spec.ring.from_digits(a)).collect::<Result<Vec<u64>>>())
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        LinearCode::with_rows(spec.ring, spec.n, rows).map_err(serde::de::Error::custom)
    }
}

fn dot(ring: &ChainRing, a: &[u64], b: &[u64]) -> u64 {
    a.iter().zip(b).fold(0, |acc, (&x, &y)| ring.add(acc, ring.mul(x, y)))
}

fn weight(w: &[u64]) -> usize {
    w.iter().filter(|&&a| a != 0).count()
}

impl LinearCode {
    /// Code generated by `rows`. At least one row is required.
    pub fn new(ring: ChainRing, rows: Vec<Vec<u64>>) -> Result<Self> {
        let n = rows.first().ok_or(Error::EmptyMatrix)?.len();
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        Self::with_rows(ring, n, rows)
    }

    /// Like [`LinearCode::new`] but allows an empty generator list.
    pub fn with_rows(ring: ChainRing, n: usize, rows: Vec<Vec<u64>>) -> Result<Self> {
        for row in &rows {
            if row.len() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    got: row.len(),
                });
            }
            if let Some(&a) = row.iter().find(|&&a| a >= ring.size()) {
                return Err(Error::IndexOutOfRange {
                    index: a as usize,
                    bound: ring.size() as usize,
                });
            }
        }
        Ok(LinearCode {
            ring,
            n,
            rows,
            standard: OnceLock::new(),
            canonical: OnceLock::new(),
        })
    }

    pub fn from_elements(rows: &[Vec<RingElement>]) -> Result<Self> {
        let ring = rows
            .first()
            .and_then(|r| r.first())
            .ok_or(Error::EmptyMatrix)?
            .ring();
        let mut out = Vec::with_capacity(rows.len());
        for row in rows {
            let mut v = Vec::with_capacity(row.len());
            for x in row {
                ring.ensure_same(&x.ring())?;
                v.push(x.value());
            }
            out.push(v);
        }
        Self::new(ring, out)
    }

    pub fn from_ints(ring: ChainRing, rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(
            ring,
            rows.iter()
                .map(|r| r.iter().map(|&a| ring.from_int(a)).collect())
                .collect(),
        )
    }

    pub fn zero(ring: ChainRing, n: usize) -> Self {
        Self::with_rows(ring, n, Vec::new()).expect("no rows")
    }

    pub fn full(ring: ChainRing, n: usize) -> Self {
        let rows = (0..n)
            .map(|i| (0..n).map(|j| u64::from(i == j)).collect())
            .collect();
        Self::with_rows(ring, n, rows).expect("identity")
    }

    pub fn ring(&self) -> ChainRing {
        self.ring
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Generators as supplied.
    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn standard_form(&self) -> &StandardForm {
        self.standard
            .get_or_init(|| StandardForm::compute(&self.ring, self.n, &self.rows))
    }

    pub fn canonical(&self) -> &CanonicalForm {
        self.canonical
            .get_or_init(|| canonical_form(&self.ring, self.n, &self.rows))
    }

    /// Standard-form generators in the original column order.
    pub fn generator_matrix(&self) -> Vec<Vec<u64>> {
        self.standard_form().unpermuted_rows()
    }

    pub fn code_type(&self) -> CodeType {
        self.standard_form().code_type()
    }

    pub fn rank(&self) -> usize {
        self.standard_form().rank()
    }

    pub fn free_rank(&self) -> usize {
        self.standard_form().valuations.iter().filter(|&&v| v == 0).count()
    }

    pub fn is_free(&self) -> bool {
        self.standard_form().valuations.iter().all(|&v| v == 0)
    }

    pub fn log_size(&self) -> u64 {
        self.standard_form().log_size(self.ring.e())
    }

    /// `|C|`, or `None` on overflow.
    pub fn size(&self) -> Option<u128> {
        u32::try_from(self.log_size())
            .ok()
            .and_then(|k| (self.ring.p() as u128).checked_pow(k))
    }

    pub fn invariants(&self) -> Invariants {
        Invariants {
            log_size: self.log_size(),
            cardinality: self.size(),
            rank: self.rank(),
            free_rank: self.free_rank(),
            is_free: self.is_free(),
        }
    }

    pub fn contains(&self, word: &[u64]) -> bool {
        word.len() == self.n && self.standard_form().contains(&self.ring, word)
    }

    /// `C ⊆ other`.
    pub fn is_subcode_of(&self, other: &LinearCode) -> bool {
        self.ring == other.ring && self.n == other.n && self.rows.iter().all(|r| other.contains(r))
    }

    /// Additive generators `γ^l · row_r`, `l < e - v_r`; every codeword is
    /// `Σ c_j g_j` for exactly one digit vector `c ∈ {0..p}^*`.
    pub fn additive_generators(&self) -> Vec<Vec<u64>> {
        let sf = self.standard_form();
        let e = self.ring.e();
        let mut gens = Vec::new();
        for (row, &v) in self.generator_matrix().iter().zip(&sf.valuations) {
            for l in 0..e - v {
                gens.push(row.iter().map(|&a| self.ring.mul_gamma_pow(a, l)).collect());
            }
        }
        gens
    }

    pub fn word_space(&self) -> WordSpace {
        let gens = self.additive_generators();
        let radix = vec![self.ring.p(); gens.len()];
        WordSpace::new(Group::Chain(self.ring), self.n, gens, radix)
    }

    fn check_budget(&self, budget: u128) -> Result<()> {
        match self.size() {
            Some(s) if s <= budget => Ok(()),
            s => Err(Error::BudgetExceeded {
                size: s.unwrap_or(u128::MAX),
                budget,
            }),
        }
    }

    /// Every codeword exactly once.
    pub fn codewords(&self, budget: u128) -> Result<impl Iterator<Item = Vec<u64>>> {
        self.check_budget(budget)?;
        Ok(self.word_space().into_iter_owned())
    }

    /// Least weight of a nonzero codeword; `0` for the zero code.
    pub fn min_distance(&self, search: Search) -> Result<usize> {
        self.check_budget(search.budget)?;
        Ok(self.word_space().min_weight(search.strategy, 1).unwrap_or(0))
    }

    /// Exact distance when within budget, otherwise an interval: below by
    /// the distance of `Tor_{e-1}` (if that is affordable), above by the
    /// lightest generator and `n - rank + 1`.
    pub fn distance(&self, search: Search) -> Result<Distance> {
        match self.min_distance(search) {
            Ok(d) => return Ok(Distance::Exact { d }),
            Err(Error::BudgetExceeded { .. }) => {}
            Err(e) => return Err(e),
        }
        let top = self.torsion(self.ring.e() - 1)?;
        let lower = top.min_distance(search).unwrap_or(1).max(1);
        let upper = self
            .generator_matrix()
            .iter()
            .map(|r| weight(r))
            .chain(std::iter::once(self.n - self.rank() + 1))
            .min()
            .unwrap_or(self.n);
        Ok(Distance::Bounds {
            lower,
            upper,
            size: self.size(),
        })
    }

    /// `{x : x·c = 0 for all c ∈ C}`, certified by orthogonality and
    /// `|C|·|C⊥| = |R|^n`.
    pub fn dual(&self) -> Result<LinearCode> {
        let ring = self.ring;
        let e = ring.e();
        let sf = self.standard_form();
        let k = sf.rank();
        let n = self.n;

        // back substitution: x_r = -(Σ_{j>r} row_r[j] x_j) / γ^{v_r}
        let solve = |mut x: Vec<u64>| -> Vec<u64> {
            for r in (0..k).rev() {
                if x[r] != 0 {
                    continue;
                }
                let s = (r + 1..n).fold(0, |acc, j| ring.add(acc, ring.mul(sf.rows[r][j], x[j])));
                x[r] = ring.neg(ring.div_gamma_pow(s, sf.valuations[r]));
            }
            x
        };
        let mut gens = Vec::new();
        for f in k..n {
            let mut x = vec![0; n];
            x[f] = 1;
            gens.push(solve(x));
        }
        for r in 0..k {
            let v = sf.valuations[r];
            if v > 0 {
                let mut x = vec![0; n];
                x[r] = ring.gamma_pow(e - v);
                gens.push(solve(x));
            }
        }
        let rows = gens
            .into_iter()
            .map(|x| {
                let mut out = vec![0; n];
                for (j, a) in x.into_iter().enumerate() {
                    out[sf.perm[j]] = a;
                }
                out
            })
            .collect();
        let dual = LinearCode::with_rows(ring, n, rows)?;
        for g in &dual.rows {
            if self.rows.iter().any(|c| dot(&ring, c, g) != 0) {
                return Err(Error::Verification("dual generator not orthogonal".into()));
            }
        }
        if self.log_size() + dual.log_size() != e as u64 * n as u64 {
            return Err(Error::Verification("|C||C^perp| != |R|^n".into()));
        }
        Ok(dual)
    }

    /// `Tor_i(C)`, the residue of `(C : γ^i)`, as a code over `F_p`.
    pub fn torsion(&self, i: u32) -> Result<LinearCode> {
        let e = self.ring.e();
        if i >= e {
            return Err(Error::IndexOutOfRange {
                index: i as usize,
                bound: e as usize,
            });
        }
        let field = self.ring.residue_field();
        let sf = self.standard_form();
        let rows = self
            .generator_matrix()
            .iter()
            .zip(&sf.valuations)
            .filter(|(_, &v)| v <= i)
            .map(|(row, &v)| {
                row.iter()
                    .map(|&a| self.ring.digit(self.ring.div_gamma_pow(a, v), 0))
                    .collect()
            })
            .collect();
        LinearCode::with_rows(field, self.n, rows)
    }

    /// `(C : γ^i) = {x : γ^i x ∈ C}` over the same ring.
    pub fn quotient(&self, i: u32) -> Result<LinearCode> {
        let ring = self.ring;
        let e = ring.e();
        if i > e {
            return Err(Error::IndexOutOfRange {
                index: i as usize,
                bound: e as usize + 1,
            });
        }
        let sf = self.standard_form();
        let mut rows: Vec<Vec<u64>> = self
            .generator_matrix()
            .iter()
            .zip(&sf.valuations)
            .map(|(row, &v)| {
                row.iter()
                    .map(|&a| {
                        if v >= i {
                            ring.div_gamma_pow(a, i)
                        } else {
                            ring.div_gamma_pow(a, v)
                        }
                    })
                    .collect()
            })
            .collect();
        if i > 0 {
            let g = ring.gamma_pow(e - i);
            for j in 0..self.n {
                let mut row = vec![0; self.n];
                row[j] = g;
                rows.push(row);
            }
        }
        LinearCode::with_rows(ring, self.n, rows)
    }

    pub fn is_self_orthogonal(&self) -> bool {
        self.rows
            .iter()
            .enumerate()
            .all(|(i, a)| self.rows[i..].iter().all(|b| dot(&self.ring, a, b) == 0))
    }

    pub fn is_self_dual(&self) -> bool {
        2 * self.log_size() == self.ring.e() as u64 * self.n as u64 && self.is_self_orthogonal()
    }

    /// `G Gᵀ` for the supplied generators.
    pub fn gram(&self) -> Vec<Vec<u64>> {
        self.rows
            .iter()
            .map(|a| self.rows.iter().map(|b| dot(&self.ring, a, b)).collect())
            .collect()
    }

    pub fn classify(&self, search: Search) -> Result<Classification> {
        let d = self.min_distance(search)?;
        let e = self.ring.e() as u64;
        let log_size = self.log_size();
        let rank = self.rank();
        // Singleton: e·(n - d + 1) ≥ log_p |C|
        let is_mds = d > 0 && e * (self.n - d + 1) as u64 == log_size;
        let is_mdr = d > 0 && d == self.n - rank + 1;
        let is_free = self.is_free();
        if is_mds && !is_free {
            return Err(Error::Verification("MDS code that is not free".into()));
        }
        let is_self_orthogonal = self.is_self_orthogonal();
        Ok(Classification {
            d,
            log_size,
            rank,
            code_type: self.code_type(),
            is_mds,
            is_mdr,
            is_self_orthogonal,
            is_self_dual: is_self_orthogonal && 2 * log_size == e * self.n as u64,
            is_free,
        })
    }

    /// Moves the code to precision `target`: truncation of every codeword
    /// when going down, and the same standard-form generators read in the
    /// larger ring when going up.
    pub fn map_precision(&self, target: &ChainRing) -> Result<LinearCode> {
        if !self.ring.same_family(target) {
            return Err(Error::RingMismatch(self.ring.to_string(), target.to_string()));
        }
        let rows = if target.e() < self.ring.e() {
            self.rows
                .iter()
                .map(|r| r.iter().map(|&a| self.ring.truncate(a, target.e())).collect())
                .collect()
        } else {
            self.generator_matrix()
        };
        LinearCode::with_rows(*target, self.n, rows)
    }

    /// Self-dual code over `target` whose projection is this code (`p` odd).
    pub fn selfdual_lift(&self, target: &ChainRing) -> Result<LinearCode> {
        lift::selfdual_lift(self, target)
    }
}

impl WordSpace {
    fn into_iter_owned(self) -> impl Iterator<Item = Vec<u64>> {
        let total = self.size();
        (0..total).map(move |i| self.word_at(i))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn tetracode() -> LinearCode {
        LinearCode::from_ints(ChainRing::field(3).unwrap(), &[vec![1, 0, 1, 1], vec![0, 1, 1, 2]]).unwrap()
    }

    fn gamma_identity(ring: ChainRing, n: usize, k: u32) -> LinearCode {
        let g = ring.gamma_pow(k);
        let rows = (0..n).map(|i| (0..n).map(|j| if i == j { g } else { 0 }).collect()).collect();
        LinearCode::new(ring, rows).unwrap()
    }

    fn brute_words(c: &LinearCode) -> HashSet<Vec<u64>> {
        // all R-combinations of the supplied rows
        let r = c.ring();
        let k = c.rows().len();
        let q = r.size();
        let mut out = HashSet::new();
        for idx in 0..q.pow(k as u32) {
            let mut w = vec![0; c.n()];
            let mut t = idx;
            for row in c.rows() {
                let a = t % q;
                t /= q;
                for (x, &y) in w.iter_mut().zip(row) {
                    *x = r.add(*x, r.mul(a, y));
                }
            }
            out.insert(w);
        }
        out
    }

    #[test]
    fn invariants_examples() {
        let z9 = ChainRing::zpe(3, 2).unwrap();
        let c = gamma_identity(z9, 4, 1);
        let inv = c.invariants();
        assert_eq!((inv.cardinality, inv.rank, inv.free_rank), (Some(81), 4, 0));
        assert_eq!(brute_words(&c).len(), 81);

        let t = tetracode().invariants();
        assert_eq!((t.cardinality, t.rank, t.is_free), (Some(9), 2, true));

        let mixed = LinearCode::from_ints(z9, &[vec![1, 0, 1, 1], vec![0, 3, 3, 6]]).unwrap();
        assert_eq!(mixed.code_type(), CodeType(vec![(0, 1), (1, 1)]));
        assert_eq!(mixed.size(), Some(27));
        assert_eq!(brute_words(&mixed).len(), 27);
    }

    #[test]
    fn enumeration_examples() {
        let z4 = ChainRing::zpe(2, 2).unwrap();
        let zero = LinearCode::zero(z4, 3);
        assert_eq!(zero.codewords(16).unwrap().collect::<Vec<_>>(), vec![vec![0, 0, 0]]);
        let rep = LinearCode::from_ints(z4, &[vec![1, 1, 1]]).unwrap();
        let words: HashSet<Vec<u64>> = rep.codewords(16).unwrap().collect();
        let expect: HashSet<Vec<u64>> = (0..4).map(|a| vec![a, a, a]).collect();
        assert_eq!(words, expect);
        let tw: Vec<Vec<u64>> = tetracode().codewords(16).unwrap().collect();
        assert_eq!(tw.len(), 9);
        assert_eq!(tw.iter().collect::<HashSet<_>>().len(), 9);
        assert!(matches!(
            LinearCode::full(z4, 12).codewords(1 << 22),
            Err(Error::BudgetExceeded { size, .. }) if size == 1 << 24
        ));
    }

    #[test]
    fn distance_examples() {
        let z4 = ChainRing::zpe(2, 2).unwrap();
        let s = Search::default();
        assert_eq!(tetracode().min_distance(s).unwrap(), 3);
        assert_eq!(LinearCode::from_ints(z4, &[vec![1, 1, 1]]).unwrap().min_distance(s).unwrap(), 3);
        assert_eq!(LinearCode::from_ints(z4, &[vec![2, 2]]).unwrap().min_distance(s).unwrap(), 2);
        let big = LinearCode::full(z4, 12);
        match big.distance(Search::with_budget(1000)).unwrap() {
            Distance::Bounds { lower, upper, .. } => assert_eq!((lower, upper), (1, 1)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn dual_examples() {
        let z9 = ChainRing::zpe(3, 2).unwrap();
        let c = gamma_identity(z9, 4, 1);
        assert_eq!(c.dual().unwrap(), c);
        assert_eq!(tetracode().dual().unwrap(), tetracode());
        let full = LinearCode::full(z9, 3);
        assert_eq!(full.dual().unwrap(), LinearCode::zero(z9, 3));
        assert_eq!(LinearCode::zero(z9, 3).dual().unwrap(), full);
    }

    #[test]
    fn torsion_examples() {
        let z9 = ChainRing::zpe(3, 2).unwrap();
        let c = gamma_identity(z9, 4, 1);
        assert_eq!(c.torsion(0).unwrap().log_size(), 0);
        assert_eq!(c.torsion(1).unwrap().log_size(), 4);
        assert!(c.torsion(2).is_err());
        let lifted = tetracode().map_precision(&z9).unwrap();
        assert_eq!(lifted.torsion(0).unwrap().size(), Some(9));
        assert_eq!(lifted.torsion(1).unwrap(), lifted.torsion(0).unwrap());
    }

    #[test]
    fn classify_examples() {
        let s = Search::default();
        let t = tetracode().classify(s).unwrap();
        assert!(t.is_mds && t.is_mdr && t.is_self_dual && t.is_free);
        let z4 = ChainRing::zpe(2, 2).unwrap();
        let c = gamma_identity(z4, 2, 1).classify(s).unwrap();
        assert!(c.is_self_dual && !c.is_mds);
        assert_eq!(c.d, 1);
        let f3 = ChainRing::field(3).unwrap();
        let rep = LinearCode::new(f3, vec![vec![1; 10]]).unwrap().classify(s).unwrap();
        assert!(rep.is_mds);
        assert_eq!(rep.d, 10);
    }

    #[test]
    fn precision_examples() {
        let z9 = ChainRing::zpe(3, 2).unwrap();
        let lifted = tetracode().map_precision(&z9).unwrap();
        let cl = lifted.classify(Search::default()).unwrap();
        assert!(cl.is_free && cl.is_mds);
        assert_eq!((cl.rank, cl.d), (2, 3));
        assert_eq!(lifted.map_precision(&ChainRing::field(3).unwrap()).unwrap(), tetracode());

        let z27 = ChainRing::zpe(3, 3).unwrap();
        let c = gamma_identity(z9, 4, 1);
        let up = c.map_precision(&z27).unwrap();
        assert_eq!(up.code_type(), CodeType(vec![(1, 4)]));
        assert_eq!(up.map_precision(&z9).unwrap().code_type(), c.code_type());
        assert!(c.map_precision(&ChainRing::fpgamma(3, 3).unwrap()).is_err());
    }

    #[test]
    fn json_round_trip() {
        let z9 = ChainRing::zpe(3, 2).unwrap();
        let c = LinearCode::from_ints(z9, &[vec![1, 0, 4], vec![0, 3, 6]]).unwrap();
        let s = serde_json::to_string(&c).unwrap();
        assert_eq!(
            s,
            r#"{"ring":{"p":3,"e":2,"flavor":"zpe"},"n":3,"rows":[[[1,0],[0,0],[1,1]],[[0,0],[0,1],[0,2]]]}"#
        );
        let back: LinearCode = serde_json::from_str(&s).unwrap();
        assert_eq!(back.rows(), c.rows());
    }
}
