use proptest::prelude::*;

use chaincodes::code::LinearCode;
use chaincodes::{ChainRing, RingElement};

fn rings() -> impl Strategy<Value = ChainRing> {
    prop_oneof![
        (prop_oneof![Just(2u64), Just(3), Just(5), Just(7)], 1u32..=4).prop_map(|(p, e)| ChainRing::zpe(p, e).unwrap()),
        (prop_oneof![Just(2u64), Just(3), Just(5)], 2u32..=4).prop_map(|(p, e)| ChainRing::fpgamma(p, e).unwrap()),
    ]
}

/// Truncated product of digit vectors: the oracle for F_p[γ]/(γ^e).
fn series_mul(a: &[u64], b: &[u64], p: u64, e: usize) -> Vec<u64> {
    let mut out = vec![0u64; e];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            if i + j < e {
                out[i + j] = (out[i + j] + x * y) % p;
            }
        }
    }
    out
}

fn pad(mut v: Vec<u64>, e: usize) -> Vec<u64> {
    v.resize(e, 0);
    v
}

proptest! {
    #[test]
    fn arithmetic_matches_oracle(r in rings(), a in any::<u64>(), b in any::<u64>()) {
        let (a, b) = (a % r.size(), b % r.size());
        if r.characteristic() == r.size() {
            prop_assert_eq!(r.add(a, b), (a + b) % r.size());
            prop_assert_eq!(r.mul(a, b), ((a as u128 * b as u128) % r.size() as u128) as u64);
        } else {
            let e = r.e() as usize;
            let (da, db) = (pad(r.digits(a), e), pad(r.digits(b), e));
            prop_assert_eq!(pad(r.digits(r.mul(a, b)), e), series_mul(&da, &db, r.p(), e));
            let sum: Vec<u64> = da.iter().zip(&db).map(|(x, y)| (x + y) % r.p()).collect();
            prop_assert_eq!(pad(r.digits(r.add(a, b)), e), sum);
        }
        prop_assert_eq!(r.add(a, r.neg(a)), 0);
    }

    #[test]
    fn projection_is_a_ring_homomorphism(r in rings(), a in any::<u64>(), b in any::<u64>(), t in 1u32..=4) {
        let t = t.min(r.e());
        let (x, y) = (r.elem(a % r.size()), r.elem(b % r.size()));
        let proj = |z: &RingElement| z.map_precision(t).unwrap();
        prop_assert_eq!(proj(&x.try_add(&y).unwrap()), proj(&x).try_add(&proj(&y)).unwrap());
        prop_assert_eq!(proj(&x.try_mul(&y).unwrap()), proj(&x).try_mul(&proj(&y)).unwrap());
        prop_assert_eq!(proj(&RingElement::from_int(r, 1)), RingElement::from_int(r.with_precision(t).unwrap(), 1));
    }

    #[test]
    fn valuation_split_recombines(r in rings(), a in any::<u64>()) {
        let a = a % r.size();
        if a != 0 {
            let (v, u) = r.valuation_split(a).unwrap();
            prop_assert!(r.is_unit(u));
            prop_assert_eq!(r.mul(r.gamma_pow(v), u), a);
            prop_assert_eq!(r.mul(u, r.inv(u).unwrap()), r.one());
        }
    }

    /// Row operations by units, row swaps, and appended combinations leave
    /// the canonical form (and so equality and hashing) unchanged.
    #[test]
    fn canonical_form_is_invariant(
        r in rings(),
        n in 1usize..=5,
        seed in prop::collection::vec(any::<u64>(), 40),
        ops in prop::collection::vec((any::<u8>(), any::<u8>(), any::<u64>()), 0..8),
    ) {
        let q = r.size();
        let k = 1 + seed[0] as usize % n;
        let mut rows: Vec<Vec<u64>> = (0..k)
            .map(|i| (0..n).map(|j| r.mul(seed[1 + i * n + j] % q, r.gamma_pow((seed[39] >> i) as u32 % 2))).collect())
            .collect();
        let original = LinearCode::with_rows(r, n, rows.clone()).unwrap();
        for (i, j, c) in ops {
            let (i, j) = (i as usize % k, j as usize % k);
            match c % 3 {
                0 => rows.swap(i, j),
                1 if i != j => {
                    let c = c % q;
                    let src = rows[j].clone();
                    for (a, b) in rows[i].iter_mut().zip(&src) {
                        *a = r.add(*a, r.mul(c, *b));
                    }
                }
                _ => {
                    let u = c % q;
                    if r.is_unit(u) {
                        for a in rows[i].iter_mut() {
                            *a = r.mul(u, *a);
                        }
                    }
                }
            }
        }
        let combo: Vec<u64> = (0..n).map(|j| rows.iter().fold(0, |s, row| r.add(s, row[j]))).collect();
        rows.push(combo);
        let moved = LinearCode::with_rows(r, n, rows).unwrap();
        prop_assert_eq!(moved.canonical(), original.canonical());
        prop_assert_eq!(&moved, &original);
        prop_assert_eq!(moved.log_size(), original.log_size());
        prop_assert_eq!(moved.code_type(), original.code_type());
        let again = LinearCode::with_rows(r, n, moved.generator_matrix()).unwrap();
        prop_assert_eq!(again.canonical(), original.canonical());
    }
}
