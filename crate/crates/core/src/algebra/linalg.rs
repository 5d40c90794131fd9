//! Exact Gaussian elimination over a field, and fraction-free elimination
//! for systems with Laurent polynomial entries.

use super::laurent::LaurentPoly;
use super::ratfun::RationalFunction;
use super::ring::{Field, Ring};

/// Reduced row echelon form in place; returns pivot columns.
pub fn rref<F: Field>(m: &mut [Vec<F>]) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return vec![];
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].inv().expect("nonzero pivot");
        for j in c..cols {
            m[r][j] = m[r][j].rmul(&inv);
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..cols {
                    let t = m[r][j].rmul(&f);
                    m[i][j] = m[i][j].rsub(&t);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

#[derive(Debug, Clone, PartialEq)]
pub enum Solution<F> {
    Unique(Vec<F>),
    Underdetermined { rank: usize, unknowns: usize },
    Inconsistent,
}

/// Solve A x = b exactly by forward elimination and back substitution.
pub fn solve<F: Field>(a: &[Vec<F>], b: &[F]) -> Solution<F> {
    let n = a.first().map(|r| r.len()).unwrap_or(0);
    let mut m: Vec<Vec<F>> = a
        .iter()
        .zip(b)
        .map(|(row, v)| {
            let mut r = row.clone();
            r.push(v.clone());
            r
        })
        .collect();
    let rows = m.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..=n {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        if c == n {
            return Solution::Inconsistent;
        }
        m.swap(r, p);
        let inv = m[r][c].inv().expect("nonzero pivot");
        let (top, rest) = m.split_at_mut(r + 1);
        let prow = &top[r];
        for row in rest.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let f = row[c].rmul(&inv);
            row[c] = F::zero();
            for j in c + 1..=n {
                if !prow[j].is_zero() {
                    let t = prow[j].rmul(&f);
                    row[j] = row[j].rsub(&t);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if pivots.len() < n {
        return Solution::Underdetermined { rank: pivots.len(), unknowns: n };
    }
    let mut x = vec![F::zero(); n];
    for i in (0..n).rev() {
        let mut acc = m[i][n].clone();
        for j in i + 1..n {
            if !m[i][j].is_zero() {
                acc = acc.rsub(&m[i][j].rmul(&x[j]));
            }
        }
        x[i] = acc.rdiv(&m[i][i]).expect("nonzero pivot");
    }
    Solution::Unique(x)
}

const P61: u64 = (1 << 61) - 1;

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P61 as u128) as u64
}

fn powmod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a);
        }
        a = mulmod(a, a);
        e >>= 1;
    }
    r
}

fn q_mod(c: &super::ring::Q) -> Option<u64> {
    use num::{BigInt, Integer, ToPrimitive, Zero};
    let p = BigInt::from(P61);
    let n = c.numer().mod_floor(&p).to_u64()?;
    let d = c.denom().mod_floor(&p).to_u64()?;
    if d.is_zero() {
        return None;
    }
    Some(mulmod(n, powmod(d, P61 - 2)))
}

/// Image of p at Â = x in 𝔽_p, if every coefficient reduces.
fn laurent_mod(p: &LaurentPoly, x: u64) -> Option<u64> {
    let xi = powmod(x, P61 - 2);
    p.terms().iter().try_fold(0u64, |acc, (e, c)| {
        let xe = if *e >= 0 { powmod(x, *e as u64) } else { powmod(xi, e.unsigned_abs()) };
        Some((acc + mulmod(q_mod(c)?, xe)) % P61)
    })
}

/// Indices of `n` rows independent at a random point mod p, if there are.
fn independent_rows(a: &[Vec<LaurentPoly>], n: usize) -> Option<Vec<usize>> {
    let x = 1_234_567_891;
    let mut m: Vec<(usize, Vec<u64>)> =
        a.iter().enumerate().map(|(i, r)| Some((i, r.iter().map(|e| laurent_mod(e, x)).collect::<Option<Vec<u64>>>()?))).collect::<Option<_>>()?;
    let mut chosen = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let p = (r..m.len()).find(|&i| m[i].1[c] != 0)?;
        m.swap(r, p);
        let inv = powmod(m[r].1[c], P61 - 2);
        let prow = m[r].1.clone();
        for row in m[r + 1..].iter_mut() {
            let f = mulmod(row.1[c], inv);
            if f != 0 {
                for j in c..n {
                    row.1[j] = (row.1[j] + P61 - mulmod(f, prow[j])) % P61;
                }
            }
        }
        chosen.push(m[r].0);
        r += 1;
    }
    chosen.sort_unstable();
    Some(chosen)
}

/// Fraction-free Gauss-Jordan (Bareiss) on the augmented rows; returns the
/// reduced rows, pivot columns and the last pivot, or `None` if a division
/// is not exact.
fn bareiss(mut m: Vec<Vec<LaurentPoly>>, n: usize) -> Option<(Vec<Vec<LaurentPoly>>, Vec<usize>, LaurentPoly)> {
    let rows = m.len();
    let mut prev = LaurentPoly::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..=n {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).filter(|&i| !m[i][c].is_zero()).min_by_key(|&i| m[i][c].len()) else { continue };
        m.swap(r, p);
        let prow = m[r].clone();
        let piv = &prow[c];
        for (i, row) in m.iter_mut().enumerate() {
            if i == r {
                continue;
            }
            let f = row[c].clone();
            for j in 0..=n {
                if j == c {
                    continue;
                }
                let mut v = row[j].rmul(piv);
                if !f.is_zero() && !prow[j].is_zero() {
                    v = v.rsub(&f.rmul(&prow[j]));
                }
                row[j] = if prev.is_one() { v } else { v.div_exact(&prev)? };
            }
            row[c] = LaurentPoly::zero_in(piv.var);
        }
        prev = piv.clone();
        pivots.push(c);
        r += 1;
        if c == n {
            break;
        }
    }
    Some((m, pivots, prev))
}

/// A x = b over Laurent polynomials with the solution in the fraction
/// field. A square subsystem of rows independent mod p is solved by
/// fraction-free elimination and every row is then checked as a
/// polynomial identity. `None` if some division fails to be exact, which
/// callers treat as "use [`solve`]".
pub fn solve_fraction_free(a: &[Vec<LaurentPoly>], b: &[LaurentPoly]) -> Option<Solution<RationalFunction>> {
    let n = a.first().map(|r| r.len()).unwrap_or(0);
    let augment = |i: usize| {
        let mut r = a[i].clone();
        r.push(b[i].clone());
        r
    };
    let Some(sel) = independent_rows(a, n) else {
        // rank-deficient at the sample point: eliminate everything
        let (m, piv, _) = bareiss((0..a.len()).map(augment).collect(), n)?;
        if piv.contains(&n) {
            return Some(Solution::Inconsistent);
        }
        if piv.len() < n {
            return Some(Solution::Underdetermined { rank: piv.len(), unknowns: n });
        }
        let x = (0..n).map(|i| RationalFunction::new(m[i][n].clone(), m[i][i].clone()).expect("nonzero pivot")).collect();
        return Some(Solution::Unique(x));
    };
    let (m, piv, det) = bareiss(sel.iter().map(|&i| augment(i)).collect(), n)?;
    debug_assert_eq!(piv.len(), n);
    // x_j = num_j / det for every j
    let num: Vec<LaurentPoly> = (0..n).map(|i| m[i][n].clone()).collect();
    for (row, rhs) in a.iter().zip(b) {
        let lhs = row.iter().zip(&num).fold(LaurentPoly::zero(), |acc, (x, y)| if x.is_zero() || y.is_zero() { acc } else { acc.radd(&x.rmul(y)) });
        if lhs != rhs.rmul(&det) {
            return Some(Solution::Inconsistent);
        }
    }
    // the quotient is usually a polynomial; exact division skips the gcd
    let frac = |x: LaurentPoly| match x.div_exact(&det) {
        Some(p) => RationalFunction::from_poly(p),
        None => RationalFunction::new(x, det.clone()).expect("nonzero determinant"),
    };
    Some(Solution::Unique(num.into_iter().map(frac).collect()))
}

/// Inverse of a square matrix, `None` when singular.
pub fn inverse<F: Field>(a: &[Vec<F>]) -> Option<Vec<Vec<F>>> {
    let n = a.len();
    let mut aug: Vec<Vec<F>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            for j in 0..n {
                r.push(if i == j { F::one() } else { F::zero() });
            }
            r
        })
        .collect();
    let piv = rref(&mut aug);
    if piv.len() < n || piv[n - 1] != n - 1 {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ring::{q, qf, Q, Ring};

    #[test]
    fn small_system() {
        let a = vec![vec![q(2), q(1)], vec![q(1), q(3)]];
        let b = vec![q(3), q(5)];
        assert_eq!(solve(&a, &b), Solution::Unique(vec![qf(4, 5), qf(7, 5)]));
        let inv = inverse(&a).unwrap();
        assert_eq!(inv[0][0], qf(3, 5));
        let sing = vec![vec![q(1), q(2)], vec![q(2), q(4)]];
        assert!(inverse(&sing).is_none());
        assert_eq!(solve(&sing, &[q(1), q(3)]), Solution::<Q>::Inconsistent);
        assert!(matches!(solve(&sing, &[q(1), q(2)]), Solution::Underdetermined { rank: 1, .. }));
        let _ = Q::one();
    }

    #[test]
    fn fraction_free_matches_field_solve() {
        use crate::algebra::Var;
        let x = |e: i64, c: i64| LaurentPoly::monomial(Var::AHat, e, q(c));
        let a = vec![
            vec![x(1, 1).radd(&x(0, 2)), x(-1, 3)],
            vec![x(2, 1), x(0, 1).radd(&x(1, -1))],
            vec![x(0, 5), x(3, 2)],
        ];
        let sol = vec![x(1, 1), x(-2, 3).radd(&x(0, 1))];
        let b: Vec<LaurentPoly> = a.iter().map(|r| r[0].rmul(&sol[0]).radd(&r[1].rmul(&sol[1]))).collect();
        let ff = solve_fraction_free(&a, &b).unwrap();
        let rf = |p: &LaurentPoly| RationalFunction::from_poly(p.clone());
        let fa: Vec<Vec<RationalFunction>> = a.iter().map(|r| r.iter().map(rf).collect()).collect();
        let fb: Vec<RationalFunction> = b.iter().map(rf).collect();
        assert_eq!(ff, solve(&fa, &fb));
        assert_eq!(ff, Solution::Unique(sol.iter().map(rf).collect()));
        let mut bad = b.clone();
        bad[2] = bad[2].radd(&x(0, 1));
        assert_eq!(solve_fraction_free(&a, &bad), Some(Solution::Inconsistent));
    }
}
