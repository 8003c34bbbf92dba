//! Row reductions over a chain ring.
//!
//! [`StandardForm`] permutes columns and always pivots on an entry of least
//! valuation, giving the block triangular shape with `γ^i I_{k_i}` pivot
//! blocks and hence the type of the code. [`canonical_form`] keeps the
//! column order and adds annihilator multiples of every non-unit pivot row,
//! which makes the reduced matrix unique for the row space.

use serde::{Deserialize, Serialize};

use crate::ring::ChainRing;

/// Column-permuted echelon form. Row `r` is `γ^{v_r}` times a row with a 1
/// in column `r`, and `v_0 ≤ v_1 ≤ …`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardForm {
    /// `perm[j]` is the original column moved to position `j`.
    pub perm: Vec<usize>,
    /// Rows in permuted coordinates.
    pub rows: Vec<Vec<u64>>,
    pub valuations: Vec<u32>,
}

/// Exponent–multiplicity pairs `(m_t, k_t)` with `m_0 < m_1 < …`; the
/// multiset of pivot exponents `(γ^{m_0})^{k_0} (γ^{m_1})^{k_1} …`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CodeType(pub Vec<(u32, usize)>);

impl CodeType {
    /// Dense vector `(k_0, …, k_{e-1})`.
    pub fn k_vector(&self, e: u32) -> Vec<usize> {
        let mut v = vec![0; e as usize];
        for &(m, k) in &self.0 {
            v[m as usize] = k;
        }
        v
    }
}

impl std::fmt::Display for CodeType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&(m, k)| match m {
                0 => format!("1^{k}"),
                1 => format!("(g)^{k}"),
                _ => format!("(g^{m})^{k}"),
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

fn sub_scaled(ring: &ChainRing, target: &mut [u64], src: &[u64], t: u64) {
    if t == 0 {
        return;
    }
    for (a, &b) in target.iter_mut().zip(src) {
        if b != 0 {
            *a = ring.sub(*a, ring.mul(t, b));
        }
    }
}

fn scale_row(ring: &ChainRing, row: &mut [u64], t: u64) {
    for a in row.iter_mut() {
        *a = ring.mul(*a, t);
    }
}

/// Makes `row[col] = γ^v` by multiplying with the inverse unit part.
fn normalize_pivot(ring: &ChainRing, row: &mut [u64], col: usize) -> u32 {
    let (v, unit) = ring.valuation_split(row[col]).expect("pivot is nonzero");
    let inv = ring.inv(unit).expect("unit part");
    scale_row(ring, row, inv);
    debug_assert_eq!(row[col], ring.gamma_pow(v));
    v
}

/// Subtracts from `rows[i]` the multiple of `pivot` that reduces the entry
/// in `col` to its canonical residue modulo `γ^v`.
fn reduce_entry(ring: &ChainRing, row: &mut [u64], pivot: &[u64], col: usize, v: u32) {
    let q = ring.div_gamma_pow(row[col], v);
    sub_scaled(ring, row, pivot, q);
}

impl StandardForm {
    pub fn compute(ring: &ChainRing, n: usize, rows: &[Vec<u64>]) -> StandardForm {
        let mut m: Vec<Vec<u64>> = rows.iter().filter(|r| r.iter().any(|&a| a != 0)).cloned().collect();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut valuations = Vec::new();
        let mut r = 0;
        while r < m.len() && r < n {
            let mut best: Option<(u32, usize, usize)> = None;
            'search: for (i, row) in m.iter().enumerate().skip(r) {
                for (j, &a) in row.iter().enumerate().skip(r) {
                    if a == 0 {
                        continue;
                    }
                    let v = ring.valuation(a);
                    if best.map_or(true, |(bv, _, _)| v < bv) {
                        best = Some((v, i, j));
                        if v == 0 {
                            break 'search;
                        }
                    }
                }
            }
            let Some((_, i, j)) = best else { break };
            m.swap(r, i);
            if j != r {
                for row in m.iter_mut() {
                    row.swap(r, j);
                }
                perm.swap(r, j);
            }
            let v = normalize_pivot(ring, &mut m[r], r);
            let pivot = m[r].clone();
            for row in m.iter_mut().skip(r + 1) {
                if row[r] != 0 {
                    let t = ring.div_gamma_pow(row[r], v);
                    sub_scaled(ring, row, &pivot, t);
                    debug_assert_eq!(row[r], 0);
                }
            }
            valuations.push(v);
            r += 1;
        }
        m.truncate(r);
        // reduce entries above each pivot to residues modulo γ^{v}
        for r in 0..m.len() {
            let pivot = m[r].clone();
            let v = valuations[r];
            for row in m.iter_mut().take(r) {
                reduce_entry(ring, row, &pivot, r, v);
            }
        }
        StandardForm {
            perm,
            rows: m,
            valuations,
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn code_type(&self) -> CodeType {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &v in &self.valuations {
            match out.last_mut() {
                Some((m, k)) if *m == v => *k += 1,
                _ => out.push((v, 1)),
            }
        }
        CodeType(out)
    }

    /// `log_p |C| = Σ (e - v_r)`.
    pub fn log_size(&self, e: u32) -> u64 {
        self.valuations.iter().map(|&v| (e - v) as u64).sum()
    }

    /// Rows mapped back to the original column order.
    pub fn unpermuted_rows(&self) -> Vec<Vec<u64>> {
        self.rows
            .iter()
            .map(|row| {
                let mut out = vec![0; row.len()];
                for (j, &a) in row.iter().enumerate() {
                    out[self.perm[j]] = a;
                }
                out
            })
            .collect()
    }

    /// Row-space membership by triangular reduction.
    pub fn contains(&self, ring: &ChainRing, word: &[u64]) -> bool {
        let mut w: Vec<u64> = self.perm.iter().map(|&j| word[j]).collect();
        for (r, row) in self.rows.iter().enumerate() {
            let a = w[r];
            if a == 0 {
                continue;
            }
            let v = self.valuations[r];
            if ring.valuation(a) < v {
                return false;
            }
            let t = ring.div_gamma_pow(a, v);
            sub_scaled(ring, &mut w, row, t);
        }
        w.iter().all(|&a| a == 0)
    }
}

/// Column-order-preserving reduced form, unique for a given row space.
/// Returns the rows together with their pivot columns and valuations.
pub fn canonical_form(ring: &ChainRing, n: usize, rows: &[Vec<u64>]) -> CanonicalForm {
    let mut pending: Vec<Vec<u64>> = rows.iter().filter(|r| r.iter().any(|&a| a != 0)).cloned().collect();
    let mut out: Vec<Vec<u64>> = Vec::new();
    let mut pivots: Vec<(usize, u32)> = Vec::new();
    let e = ring.e();
    for c in 0..n {
        let mut best: Option<(u32, usize)> = None;
        for (i, row) in pending.iter().enumerate() {
            if row[c] != 0 {
                let v = ring.valuation(row[c]);
                if best.map_or(true, |(bv, _)| v < bv) {
                    best = Some((v, i));
                }
            }
        }
        let Some((_, i)) = best else { continue };
        let mut pivot = pending.swap_remove(i);
        let v = normalize_pivot(ring, &mut pivot, c);
        for row in pending.iter_mut() {
            if row[c] != 0 {
                let t = ring.div_gamma_pow(row[c], v);
                sub_scaled(ring, row, &pivot, t);
            }
        }
        if v > 0 {
            let ann: Vec<u64> = pivot.iter().map(|&a| ring.mul_gamma_pow(a, e - v)).collect();
            if ann.iter().any(|&a| a != 0) {
                pending.push(ann);
            }
        }
        pending.retain(|r| r.iter().any(|&a| a != 0));
        out.push(pivot);
        pivots.push((c, v));
    }
    for r in 0..out.len() {
        let (c, v) = pivots[r];
        let pivot = out[r].clone();
        for row in out.iter_mut().take(r) {
            reduce_entry(ring, row, &pivot, c, v);
        }
    }
    CanonicalForm { rows: out, pivots }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CanonicalForm {
    pub rows: Vec<Vec<u64>>,
    /// `(column, valuation)` of each row's pivot.
    pub pivots: Vec<(usize, u32)>,
}

impl CanonicalForm {
    pub fn log_size(&self, e: u32) -> u64 {
        self.pivots.iter().map(|&(_, v)| (e - v) as u64).sum()
    }
}
