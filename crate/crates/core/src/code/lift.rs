//! Digit-by-digit lifting of self-dual codes (odd characteristic).
//!
//! With `G̃ G̃ᵀ ≡ 0 mod γ^l`, adding `γ^l B` clears digit `l` of the Gram
//! matrix iff `G_0 Bᵀ + B G_0ᵀ = -D` over `F_p`, where `D` is that digit.
//! For a free code `G_0` has full rank and the system is solvable when `p`
//! is odd; the lexicographically least `B` is taken.

use super::{fp, LinearCode};
use crate::error::{Error, Result};
use crate::ring::ChainRing;

pub(super) fn selfdual_lift(code: &LinearCode, target: &ChainRing) -> Result<LinearCode> {
    let ring = code.ring();
    let p = ring.p();
    if p == 2 {
        return Err(Error::Unsupported("self-dual lifting needs odd characteristic".into()));
    }
    if !ring.same_family(target) {
        return Err(Error::RingMismatch(ring.to_string(), target.to_string()));
    }
    if target.e() <= ring.e() {
        return Err(Error::BadPrecision {
            current: ring.e(),
            target: target.e(),
        });
    }
    if !code.is_self_dual() {
        return Err(Error::NotSelfDual);
    }
    let n = code.n();
    let lifted = if code.is_free() {
        lift_free(code, target)?
    } else if ring.e() % 2 == 0 && *code == gamma_identity(ring, n, ring.e() / 2) {
        if target.e() % 2 != 0 {
            return Err(Error::Unsupported(format!(
                "no self-dual γ^k I_n over {target}: odd nilpotency index"
            )));
        }
        return Ok(gamma_identity(*target, n, target.e() / 2));
    } else {
        return Err(Error::Unsupported("self-dual lifting of non-free codes".into()));
    };
    if lifted.gram().iter().flatten().any(|&a| a != 0) {
        return Err(Error::Verification("lifted Gram matrix is not zero".into()));
    }
    if !lifted.is_self_dual() || lifted.map_precision(&ring)? != *code {
        return Err(Error::Verification("lift does not project to the input".into()));
    }
    Ok(lifted)
}

fn gamma_identity(ring: ChainRing, n: usize, k: u32) -> LinearCode {
    let g = ring.gamma_pow(k);
    let rows = (0..n)
        .map(|i| (0..n).map(|j| if i == j { g } else { 0 }).collect())
        .collect();
    LinearCode::with_rows(ring, n, rows).expect("square matrix")
}

fn lift_free(code: &LinearCode, target: &ChainRing) -> Result<LinearCode> {
    let n = code.n();
    let mut g = code.generator_matrix();
    let k = g.len();
    let p = target.p();
    let g0: Vec<Vec<u64>> = g.iter().map(|r| r.iter().map(|&a| a % p).collect()).collect();
    for l in code.ring().e()..target.e() {
        let gram = LinearCode::with_rows(*target, n, g.clone())?.gram();
        let mut a = Vec::new();
        let mut b = Vec::new();
        for r in 0..k {
            for s in r..k {
                // (G_0 Bᵀ)_{rs} + (B G_0ᵀ)_{rs}, unknown B[t][c] at t·n + c
                let mut eq = vec![0u64; k * n];
                for c in 0..n {
                    eq[s * n + c] = (eq[s * n + c] + g0[r][c]) % p;
                    eq[r * n + c] = (eq[r * n + c] + g0[s][c]) % p;
                }
                a.push(eq);
                b.push((p - target.digit(gram[r][s], l)) % p);
            }
        }
        let x = fp::solve_lex_least(&a, &b, p)
            .ok_or_else(|| Error::Verification(format!("digit {l} correction system is inconsistent")))?;
        let step = target.gamma_pow(l);
        for (t, row) in g.iter_mut().enumerate() {
            for (c, entry) in row.iter_mut().enumerate() {
                *entry = target.add(*entry, target.mul(step, x[t * n + c]));
            }
        }
    }
    LinearCode::with_rows(*target, n, g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tetracode() -> LinearCode {
        LinearCode::from_ints(ChainRing::field(3).unwrap(), &[vec![1, 0, 1, 1], vec![0, 1, 1, 2]]).unwrap()
    }

    #[test]
    fn tetracode_to_z9() {
        let z9 = ChainRing::zpe(3, 2).unwrap();
        let c = tetracode().selfdual_lift(&z9).unwrap();
        assert!(c.gram().iter().flatten().all(|&a| a == 0));
        assert!(c.is_free() && c.is_self_dual());
        assert_eq!(c.map_precision(&ChainRing::field(3).unwrap()).unwrap(), tetracode());
        // and on to Z_27, and through F_3[γ]/(γ³)
        for target in [ChainRing::zpe(3, 3).unwrap(), ChainRing::fpgamma(3, 3).unwrap()] {
            let up = tetracode().selfdual_lift(&target).unwrap();
            assert!(up.is_self_dual());
        }
    }

    #[test]
    fn trivial_family() {
        let r2 = ChainRing::zpe(5, 2).unwrap();
        let r4 = ChainRing::zpe(5, 4).unwrap();
        let c = gamma_identity(r2, 3, 1);
        assert_eq!(c.selfdual_lift(&r4).unwrap(), gamma_identity(r4, 3, 2));
    }

    #[test]
    fn hypotheses() {
        let f2 = ChainRing::field(2).unwrap();
        let c = LinearCode::from_ints(f2, &[vec![1, 1]]).unwrap();
        assert!(matches!(c.selfdual_lift(&ChainRing::zpe(2, 2).unwrap()), Err(Error::Unsupported(_))));
        let f3 = ChainRing::field(3).unwrap();
        let rep = LinearCode::from_ints(f3, &[vec![1, 1, 1]]).unwrap();
        assert_eq!(rep.selfdual_lift(&ChainRing::zpe(3, 2).unwrap()), Err(Error::NotSelfDual));
    }
}
