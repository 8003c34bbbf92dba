//! Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
//! gated criterion fails. Every check compares the library against an
//! oracle computed here from first principles (brute-force spans, direct
//! inner products, coefficient-tuple enumeration).

use std::collections::{BTreeSet, HashSet};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use chaincodes::code::{LinearCode, Search};
use chaincodes::constacyclic::{counts, enumerate_all, is_constacyclic, ConstacyclicCode};
use chaincodes::crt_pir::{mds_exists, rs_code, sufficiency_bound, MdsAnswer, PirCode};
use chaincodes::families::{table1, zm_selfdual_mds, Family};
use chaincodes::poly::{factor_over_residue, factor_xn_minus_lambda, primitive_idempotents};
use chaincodes::{ChainRing, Poly};

/// Largest `|R|^n` for which ambient-space brute force is used.
const AMBIENT_LIMIT: u64 = 1 << 19;

struct Report {
    failed: bool,
}

impl Report {
    fn line(&mut self, id: &str, ok: bool, detail: String, started: Instant) {
        let status = if ok { "PASS" } else { "FAIL" };
        println!("criterion {id}: {status}  {detail}  ({:.1}s)", started.elapsed().as_secs_f64());
        if !ok {
            self.failed = true;
        }
    }
}

fn dot(r: &ChainRing, a: &[u64], b: &[u64]) -> u64 {
    a.iter().zip(b).fold(0, |acc, (&x, &y)| r.add(acc, r.mul(x, y)))
}

/// Additive closure of `γ^l · row` over all rows and `l < e`. Scalars from
/// the prime field act by repeated addition, so this is the R-span.
fn span(r: &ChainRing, rows: &[Vec<u64>], n: usize) -> HashSet<Vec<u64>> {
    let mut gens = Vec::new();
    for row in rows {
        for l in 0..r.e() {
            let g: Vec<u64> = row.iter().map(|&a| r.mul(a, r.gamma_pow(l))).collect();
            if g.iter().any(|&a| a != 0) {
                gens.push(g);
            }
        }
    }
    let mut words: HashSet<Vec<u64>> = HashSet::from([vec![0; n]]);
    let mut frontier: Vec<Vec<u64>> = vec![vec![0; n]];
    while let Some(w) = frontier.pop() {
        for g in &gens {
            let s: Vec<u64> = w.iter().zip(g).map(|(&a, &b)| r.add(a, b)).collect();
            if words.insert(s.clone()) {
                frontier.push(s);
            }
        }
    }
    words
}

fn ambient(r: &ChainRing, n: usize) -> Vec<Vec<u64>> {
    let q = r.size();
    let total = q.pow(n as u32);
    (0..total)
        .map(|mut i| {
            (0..n)
                .map(|_| {
                    let a = i % q;
                    i /= q;
                    a
                })
                .collect()
        })
        .collect()
}

fn min_weight(words: &HashSet<Vec<u64>>) -> usize {
    words
        .iter()
        .map(|w| w.iter().filter(|&&a| a != 0).count())
        .filter(|&w| w > 0)
        .min()
        .unwrap_or(0)
}

fn random_code(r: &ChainRing, n: usize, rng: &mut ChaCha8Rng) -> LinearCode {
    let k = rng.gen_range(1..=n);
    let rows: Vec<Vec<u64>> = (0..k)
        .map(|_| {
            let scale = r.gamma_pow(rng.gen_range(0..=r.e()));
            let scale = if rng.gen_bool(0.5) { r.one() } else { scale };
            (0..n).map(|_| r.mul(scale, rng.gen_range(0..r.size()))).collect()
        })
        .collect();
    LinearCode::with_rows(*r, n, rows).unwrap()
}

fn corpus() -> Vec<LinearCode> {
    let rings = [
        ChainRing::zpe(2, 2).unwrap(),
        ChainRing::zpe(3, 2).unwrap(),
        ChainRing::zpe(3, 3).unwrap(),
        ChainRing::fpgamma(3, 2).unwrap(),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(0x00c0_ffee);
    let mut out = Vec::new();
    for r in &rings {
        for _ in 0..200 {
            let n = rng.gen_range(1..=6);
            out.push(random_code(r, n, &mut rng));
        }
    }
    out
}

fn criterion1(corpus: &[LinearCode]) -> (bool, String) {
    let mut brute = 0;
    for c in corpus {
        let r = c.ring();
        let n = c.n();
        let d = c.dual().unwrap();
        if c.log_size() + d.log_size() != r.e() as u64 * n as u64 {
            return (false, format!("log sizes {} + {} over {r}, n={n}", c.log_size(), d.log_size()));
        }
        if d.dual().unwrap() != *c {
            return (false, format!("double dual differs over {r}, n={n}"));
        }
        for x in d.rows() {
            if c.rows().iter().any(|y| dot(&r, x, y) != 0) {
                return (false, format!("dual row not orthogonal over {r}"));
            }
        }
        if r.size().pow(n as u32) <= AMBIENT_LIMIT {
            let words = span(&r, c.rows(), n);
            let perp: HashSet<Vec<u64>> = ambient(&r, n)
                .into_iter()
                .filter(|x| c.rows().iter().all(|y| dot(&r, x, y) == 0))
                .collect();
            let total = (words.len() as u128) * (perp.len() as u128);
            if total != (r.size() as u128).pow(n as u32) || perp != span(&r, d.rows(), n) {
                return (false, format!("brute-force |C||C^perp| = {total} over {r}, n={n}"));
            }
            if words.len() as u128 != c.size().unwrap() {
                return (false, format!("|C| {} vs {:?}", words.len(), c.size()));
            }
            brute += 1;
        }
    }
    (true, format!("{} codes, {brute} checked against ambient brute force", corpus.len()))
}

fn criterion4(corpus: &[LinearCode]) -> (bool, String) {
    let mut brute = 0;
    for c in corpus {
        let r = c.ring();
        let n = c.n();
        let k = c.code_type().k_vector(r.e());
        let mut prev: Option<LinearCode> = None;
        for i in 0..r.e() {
            let t = c.torsion(i).unwrap();
            let expect: usize = k[..=i as usize].iter().sum();
            if t.log_size() != expect as u64 {
                return (false, format!("dim Tor_{i} = {} vs {expect} over {r}", t.log_size()));
            }
            if let Some(p) = &prev {
                if !p.is_subcode_of(&t) {
                    return (false, format!("Tor_{} not inside Tor_{i} over {r}", i - 1));
                }
            }
            prev = Some(t);
        }
        if r.size().pow(n as u32) <= AMBIENT_LIMIT {
            let words = span(&r, c.rows(), n);
            let field = r.residue_field();
            let all = ambient(&r, n);
            for i in 0..r.e() {
                let g = r.gamma_pow(i);
                let tor: HashSet<Vec<u64>> = all
                    .iter()
                    .filter(|x| words.contains(&x.iter().map(|&a| r.mul(a, g)).collect::<Vec<_>>()))
                    .map(|x| x.iter().map(|&a| r.digit(a, 0)).collect())
                    .collect();
                let t = c.torsion(i).unwrap();
                if tor != span(&field, t.rows(), n) {
                    return (false, format!("Tor_{i} differs from brute force over {r}, n={n}"));
                }
            }
            brute += 1;
        }
    }
    (true, format!("{} codes, {brute} checked against ambient brute force", corpus.len()))
}

fn grid() -> Vec<(usize, i64, u64, u32)> {
    let mut out = Vec::new();
    for p in [2u64, 3, 5] {
        for e in 1..=3 {
            for n in 1..=10usize {
                if n as u64 % p == 0 {
                    continue;
                }
                for lambda in [1i64, -1] {
                    if p == 2 && lambda == -1 {
                        // -1 ≡ 1 in F_2 but not in Z_{2^e}; kept for e > 1
                        if e == 1 {
                            continue;
                        }
                    }
                    out.push((n, lambda, p, e));
                }
            }
        }
    }
    out
}

fn rings_for(p: u64, e: u32) -> Vec<ChainRing> {
    let mut v = vec![ChainRing::zpe(p, e).unwrap()];
    if e > 1 {
        v.push(ChainRing::fpgamma(p, e).unwrap());
    }
    v
}

/// Distinct principal ideals `⟨f⟩` over every `f` in `R[x]/(x^n - λ)`.
fn principal_ideals(r: &ChainRing, n: usize, lambda: u64) -> usize {
    let mut seen = HashSet::new();
    for coeffs in ambient(r, n) {
        let f = Poly::new(*r, coeffs);
        seen.insert(ConstacyclicCode::ideal_of(&f, n, lambda).canonical().clone());
    }
    seen.len()
}

fn criterion2() -> (bool, String) {
    let mut points = 0;
    let mut brute = 0;
    for (n, lam, p, e) in grid() {
        for r in rings_for(p, e) {
            let lambda = r.from_int(lam);
            let all = enumerate_all(n, lambda, r, u128::MAX).unwrap();
            let cnt = counts(n, lambda, r).unwrap();
            let b = cnt.b as u32;
            let linear: HashSet<LinearCode> = all.iter().map(|c| c.to_linear()).collect();
            let free = linear.iter().filter(|c| c.is_free()).count();
            if linear.len() as u128 != (e as u128 + 1).pow(b) || free as u128 != 2u128.pow(b) {
                return (
                    false,
                    format!("n={n} λ={lam} {r}: {} codes, {free} free, b={b}", linear.len()),
                );
            }
            if cnt.total != Some(linear.len() as u128) || cnt.free != Some(free as u128) {
                return (false, format!("count formula mismatch at n={n} λ={lam} {r}"));
            }
            if let Some(bad) = linear.iter().find(|c| !is_constacyclic(c, lambda)) {
                return (false, format!("non-constacyclic code {:?} at n={n} {r}", bad.generator_matrix()));
            }
            if r.size().pow(n as u32) <= 4096 {
                let ideals = principal_ideals(&r, n, lambda);
                if ideals != linear.len() {
                    return (false, format!("{ideals} principal ideals vs {} at n={n} λ={lam} {r}", linear.len()));
                }
                brute += 1;
            }
            points += 1;
        }
    }
    (true, format!("{points} (n, λ, ring) points, {brute} against all principal ideals"))
}

fn criterion3() -> (bool, String) {
    let f3 = ChainRing::field(3).unwrap();
    let tetra = LinearCode::from_ints(f3, &[vec![1, 0, 1, 1], vec![0, 1, 1, 2]]).unwrap();
    let mut notes = Vec::new();
    for e in [1u32, 2, 3] {
        let r = ChainRing::zpe(3, e).unwrap();
        let c = if e == 1 { tetra.clone() } else { tetra.selfdual_lift(&r).unwrap() };
        let words = span(&r, c.rows(), 4);
        let d = min_weight(&words);
        let mds = words.len() as u64 == r.size().pow(4 - d as u32 + 1);
        let gram = c.rows().iter().all(|x| c.rows().iter().all(|y| dot(&r, x, y) == 0));
        let self_dual = gram && (words.len() as u64).pow(2) == r.size().pow(4);
        let projects = c.map_precision(&f3).unwrap() == tetra;
        if d != 3 || !mds || !self_dual || !projects || c.min_distance(Search::default()).unwrap() != 3 {
            return (false, format!("Z_3^{e}: d={d} mds={mds} self-dual={self_dual} projects={projects}"));
        }
        notes.push(format!("Z_{}: d=3", r.size()));
    }
    (true, notes.join(", "))
}

/// Determinant modulo `m` by cofactor expansion.
fn det_mod(a: &[Vec<u64>], m: u64) -> u64 {
    let k = a.len();
    if k == 1 {
        return a[0][0] % m;
    }
    let mut acc = 0u128;
    for j in 0..k {
        let minor: Vec<Vec<u64>> = a[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
            .collect();
        let term = a[0][j] as u128 * det_mod(&minor, m) as u128 % m as u128;
        acc = if j % 2 == 0 { (acc + term) % m as u128 } else { (acc + m as u128 - term) % m as u128 };
    }
    acc as u64
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cols: Vec<usize> = (0..k).collect();
    loop {
        out.push(cols.clone());
        let Some(i) = (0..k).rev().find(|&i| cols[i] < n - k + i) else { return out };
        cols[i] += 1;
        for j in i + 1..k {
            cols[j] = cols[j - 1] + 1;
        }
    }
}

fn minor(g: &[Vec<u64>], cols: &[usize]) -> Vec<Vec<u64>> {
    g.iter().map(|r| cols.iter().map(|&c| r[c]).collect()).collect()
}

/// Over a field: every `k` columns independent.
fn all_minors_nonzero(g: &[Vec<u64>], p: u64) -> bool {
    k_subsets(g[0].len(), g.len()).iter().all(|c| det_mod(&minor(g, c), p) != 0)
}

/// Minimum weight over all `Z_m` combinations of the rows, and whether some
/// `k` columns form a minor that is a unit (so `|C| = m^k`).
fn zm_profile(g: &[Vec<u64>], m: u64) -> (usize, bool) {
    let k = g.len();
    let n = g[0].len();
    let unit_minor = k_subsets(n, k).iter().any(|c| gcd(det_mod(&minor(g, c), m), m) == 1);
    let total = (m as u128).pow(k as u32);
    let mut best = usize::MAX;
    let mut coef = vec![0u64; k];
    let mut word = vec![0u64; n];
    for _ in 1..total {
        // odometer step, updating the word incrementally
        let mut i = 0;
        loop {
            coef[i] += 1;
            for (w, &x) in word.iter_mut().zip(&g[i]) {
                *w = (*w + x) % m;
            }
            if coef[i] < m {
                break;
            }
            coef[i] = 0;
            i += 1;
        }
        let wt = word.iter().filter(|&&a| a != 0).count();
        if wt > 0 && wt < best {
            best = wt;
        }
    }
    (best, unit_minor)
}

fn gram_zero(g: &[Vec<u64>], m: u64) -> bool {
    g.iter().all(|a| {
        g.iter()
            .all(|b| a.iter().zip(b).fold(0u128, |s, (&x, &y)| (s + x as u128 * y as u128) % m as u128) == 0)
    })
}

fn check_rs(n: usize, d: usize, m: u64) -> Result<String, String> {
    let pir: PirCode = rs_code(n, d, m).map_err(|e| e.to_string())?;
    let g = pir.generator_matrix();
    let k = g.len();
    let (dist, unit) = zm_profile(&g, m);
    if dist != d || !unit || d != n - k + 1 {
        return Err(format!("rs({n},{d},{m}): brute d={dist}, k={k}, unit minor={unit}"));
    }
    Ok(format!("rs({n},{d},{m}) d={dist}"))
}

fn criterion5() -> (bool, String) {
    let mut notes = Vec::new();
    for (n, d, m) in [(4, 2, 65), (6, 4, 91)] {
        match check_rs(n, d, m) {
            Ok(s) => notes.push(s),
            Err(s) => return (false, s),
        }
    }
    for k in [1usize, 9] {
        match mds_exists(10, k, 141).unwrap() {
            MdsAnswer::Yes { certificates } => {
                for c in &certificates {
                    if c.generator.len() != k || !all_minors_nonzero(&c.generator, c.p) {
                        return (false, format!("[10,{k}] certificate over F_{} is not MDS", c.p));
                    }
                }
            }
            other => return (false, format!("(10,{k},141): {other:?}")),
        }
    }
    notes.push("Z_141 k=1,9 certified".into());
    match mds_exists(10, 2, 141).unwrap() {
        MdsAnswer::No { p: 3, .. } => {}
        other => return (false, format!("(10,2,141): {other:?}")),
    }
    // no [10,2,9] code over F_3: at most 4 pairwise independent columns
    let f3_columns = (3u64.pow(2) - 1) / 2;
    if 10 <= f3_columns {
        return (false, "column count oracle".into());
    }
    notes.push("k=2 impossible".into());
    let bound = sufficiency_bound(6, 3, 91).unwrap();
    let exists = matches!(mds_exists(6, 3, 91).unwrap(), MdsAnswer::Yes { .. });
    if bound || !exists {
        return (false, format!("(6,3,91): bound={bound} exists={exists}"));
    }
    notes.push("bound(6,3,91)=false with certificate".into());
    (true, notes.join(", "))
}

fn criterion6() -> (bool, String) {
    let entries: [(usize, u64); 10] = [(4, 3), (4, 7), (4, 13), (4, 17), (4, 21), (6, 5), (6, 13), (6, 25), (6, 65), (6, 169)];
    let search = Search::with_budget(1 << 23);
    for &(n, m) in &entries {
        let (pir, cert) = match zm_selfdual_mds(n, m, Family::Auto, search) {
            Ok(x) => x,
            Err(e) => return (false, format!("({n},{m}): {e}")),
        };
        let g = &cert.generator;
        let (dist, unit) = zm_profile(g, m);
        if !gram_zero(g, m) || g.len() != n / 2 || !unit || dist != n / 2 + 1 || pir.generator_matrix() != *g {
            return (false, format!("({n},{m}): brute d={dist}, k={}, unit minor={unit}", g.len()));
        }
    }
    let extra = table1(&[(10, 9)], Search::default());
    let note = if extra[0].certified { "certified" } else { "not certified" };
    (true, format!("{} entries, brute-force d = n/2+1; (10,9) {note}", entries.len()))
}

fn criterion7() -> (bool, String) {
    let mut points = 0;
    for (n, lam, p, e) in grid() {
        for r in rings_for(p, e) {
            let lambda = r.from_int(lam);
            let set = factor_xn_minus_lambda(n, lambda, r).unwrap();
            let modulus = Poly::xn_minus(r, n, lambda);
            let product = set.factors().iter().fold(Poly::one(r), |acc, f| acc.mul(f));
            if product != modulus || set.factors().iter().any(|f| !f.is_monic()) {
                return (false, format!("product of lifts ≠ x^{n}-λ over {r}"));
            }
            let residues: BTreeSet<Vec<u64>> = set.factors().iter().map(|f| f.residue().coeffs().to_vec()).collect();
            let direct = factor_over_residue(&modulus.residue()).unwrap();
            let expect: BTreeSet<Vec<u64>> = direct.iter().map(|(f, _)| f.coeffs().to_vec()).collect();
            if residues != expect || direct.iter().any(|&(_, mult)| mult != 1) || residues.len() != set.len() {
                return (false, format!("residue factors differ at n={n} λ={lam} over {r}"));
            }
            let idem = primitive_idempotents(&set).unwrap();
            let mut sum = Poly::zero(r);
            for (i, a) in idem.iter().enumerate() {
                if a.mulmod(a, &modulus) != a.rem(&modulus).unwrap() {
                    return (false, format!("E_{i}^2 ≠ E_{i} at n={n} over {r}"));
                }
                for b in &idem[i + 1..] {
                    if !a.mulmod(b, &modulus).is_zero() {
                        return (false, format!("orthogonality fails at n={n} over {r}"));
                    }
                }
                sum = sum.add(a);
            }
            if sum.rem(&modulus).unwrap() != Poly::one(r) {
                return (false, format!("idempotents do not sum to 1 at n={n} over {r}"));
            }
            points += 1;
        }
    }
    (true, format!("{points} (n, λ, ring) points"))
}

fn main() {
    let mut report = Report { failed: false };
    let corpus = corpus();

    let t = Instant::now();
    let (ok, s) = criterion1(&corpus);
    report.line("1 duality product", ok, s, t);

    let t = Instant::now();
    let (ok, s) = criterion2();
    report.line("2 ideal counts", ok, s, t);

    let t = Instant::now();
    let (ok, s) = criterion3();
    report.line("3 MDS lift", ok, s, t);

    let t = Instant::now();
    let (ok, s) = criterion4(&corpus);
    report.line("4 torsion", ok, s, t);

    let t = Instant::now();
    let (ok, s) = criterion5();
    report.line("5 Z_65 / Z_91 / Z_141", ok, s, t);

    let t = Instant::now();
    let (ok, s) = criterion6();
    report.line("6 self-dual MDS table", ok, s, t);

    let t = Instant::now();
    let (ok, s) = criterion7();
    report.line("7 Hensel lifts and idempotents", ok, s, t);

    println!("criterion 8 desk scale: PASS  note only, every quantity above is computed at full size");

    if report.failed {
        std::process::exit(1);
    }
}
