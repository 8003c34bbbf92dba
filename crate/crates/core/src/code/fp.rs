//! Dense linear algebra over a prime field `F_p`.

fn inv_mod(a: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    let mut base = a % p;
    let mut k = p - 2;
    while k > 0 {
        if k & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        k >>= 1;
    }
    acc
}

/// Row-reduces `m` in place, taking pivot columns in the order given by
/// `cols`. Returns the pivot columns, one per nonzero row kept at the top.
pub fn rref_with_order(m: &mut [Vec<u64>], cols: &[usize], p: u64) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for &c in cols {
        if r == m.len() {
            break;
        }
        let Some(i) = (r..m.len()).find(|&i| m[i][c] % p != 0) else {
            continue;
        };
        m.swap(r, i);
        let inv = inv_mod(m[r][c], p);
        for a in m[r].iter_mut() {
            *a = *a * inv % p;
        }
        let pivot = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let t = row[c];
                for (a, &b) in row.iter_mut().zip(&pivot) {
                    *a = (*a + (p - t) * b) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(rows: &[Vec<u64>], p: u64) -> usize {
    let Some(first) = rows.first() else { return 0 };
    let mut m = rows.to_vec();
    let cols: Vec<usize> = (0..first.len()).collect();
    rref_with_order(&mut m, &cols, p).len()
}

/// Determinant of a square matrix.
pub fn det(m: &[Vec<u64>], p: u64) -> u64 {
    let k = m.len();
    let mut a: Vec<Vec<u64>> = m.iter().map(|r| r.iter().map(|&x| x % p).collect()).collect();
    let mut d = 1u64;
    for c in 0..k {
        let Some(i) = (c..k).find(|&i| a[i][c] != 0) else {
            return 0;
        };
        if i != c {
            a.swap(i, c);
            d = (p - d) % p;
        }
        d = d * a[c][c] % p;
        let inv = inv_mod(a[c][c], p);
        for i in c + 1..k {
            let t = a[i][c] * inv % p;
            if t != 0 {
                for j in c..k {
                    a[i][j] = (a[i][j] + (p - t) * a[c][j]) % p;
                }
            }
        }
    }
    d
}

/// Whether every `k` columns of the `k × n` matrix `g` are independent,
/// i.e. `g` generates an MDS code.
pub fn is_mds_generator(g: &[Vec<u64>], p: u64) -> bool {
    let k = g.len();
    if k == 0 {
        return true;
    }
    let n = g[0].len();
    let mut cols: Vec<usize> = (0..k).collect();
    loop {
        let sub: Vec<Vec<u64>> = g.iter().map(|r| cols.iter().map(|&c| r[c]).collect()).collect();
        if det(&sub, p) == 0 {
            return false;
        }
        // next k-subset in lexicographic order
        let Some(i) = (0..k).rev().find(|&i| cols[i] < n - k + i) else {
            return true;
        };
        cols[i] += 1;
        for j in i + 1..k {
            cols[j] = cols[j - 1] + 1;
        }
    }
}

/// Whether every square submatrix of `a` whose bottom row is `last` (rows
/// `0..last` above it) is nonsingular.
pub fn minors_through_row_nonzero(a: &[Vec<u64>], last: usize, p: u64) -> bool {
    let r = a[0].len();
    for s in 1..=(last + 1).min(r) {
        let mut rows: Vec<usize> = (0..s - 1).collect();
        loop {
            let mut rs = rows.clone();
            rs.push(last);
            let mut cols: Vec<usize> = (0..s).collect();
            loop {
                let sub: Vec<Vec<u64>> = rs.iter().map(|&i| cols.iter().map(|&j| a[i][j]).collect()).collect();
                if det(&sub, p) == 0 {
                    return false;
                }
                let Some(i) = (0..s).rev().find(|&i| cols[i] < r - s + i) else { break };
                cols[i] += 1;
                for j in i + 1..s {
                    cols[j] = cols[j - 1] + 1;
                }
            }
            if s == 1 {
                break;
            }
            let Some(i) = (0..s - 1).rev().find(|&i| rows[i] < last - (s - 1) + i) else { break };
            rows[i] += 1;
            for j in i + 1..s - 1 {
                rows[j] = rows[j - 1] + 1;
            }
        }
    }
    true
}

/// Lexicographically least solution of `A x = b`, or `None` if the system
/// is inconsistent. Pivots are taken from the last variable backwards so
/// every pivot variable depends only on earlier free variables, which are
/// all set to zero.
pub fn solve_lex_least(a: &[Vec<u64>], b: &[u64], p: u64) -> Option<Vec<u64>> {
    let nvars = a.first().map_or(0, |r| r.len());
    let mut m: Vec<Vec<u64>> = a
        .iter()
        .zip(b)
        .map(|(row, &bi)| {
            let mut r: Vec<u64> = row.iter().map(|&x| x % p).collect();
            r.push(bi % p);
            r
        })
        .collect();
    let cols: Vec<usize> = (0..nvars).rev().collect();
    let pivots = rref_with_order(&mut m, &cols, p);
    if m.iter().skip(pivots.len()).any(|row| row[nvars] != 0) {
        return None;
    }
    let mut x = vec![0u64; nvars];
    for (row, &c) in m.iter().zip(&pivots) {
        x[c] = row[nvars];
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lex_least_by_brute_force() {
        let p = 3;
        let a = vec![vec![1, 2, 0, 1], vec![0, 1, 1, 2]];
        let b = vec![2, 1];
        let x = solve_lex_least(&a, &b, p).unwrap();
        let mut best: Option<Vec<u64>> = None;
        for v in 0..81u64 {
            let cand: Vec<u64> = (0..4).map(|i| v / 3u64.pow(3 - i) % 3).collect();
            let ok = a
                .iter()
                .zip(&b)
                .all(|(row, &bi)| row.iter().zip(&cand).map(|(r, c)| r * c).sum::<u64>() % p == bi);
            if ok {
                best = Some(cand);
                break;
            }
        }
        assert_eq!(Some(x), best);
    }

    #[test]
    fn determinants() {
        assert_eq!(det(&[vec![1, 2], vec![3, 4]], 7), (4 + 7 - 6) % 7);
        assert_eq!(det(&[vec![0, 1], vec![1, 0]], 5), 4);
        assert!(is_mds_generator(&[vec![1, 0, 1, 1], vec![0, 1, 1, 2]], 3));
        assert!(!is_mds_generator(&[vec![1, 0, 1, 1], vec![0, 1, 1, 0]], 3));
    }

    #[test]
    fn inconsistent_system() {
        assert_eq!(solve_lex_least(&[vec![1, 1], vec![2, 2]], &[1, 1], 3), None);
        assert_eq!(rank(&[vec![1, 1], vec![2, 2]], 3), 1);
    }
}
