//! Exact linear algebra for small dense systems.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::basis::Rational;

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
pub fn rank(rows: &[Vec<BigInt>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&k| !m[k][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for k in r + 1..nrows {
            for cc in c + 1..ncols {
                let v = (&m[r][c] * &m[k][cc] - &m[k][c] * &m[r][cc]) / &prev;
                m[k][cc] = v;
            }
            m[k][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        r += 1;
    }
    r
}

/// Solves `Σ_t x_t · columns[t] = target` exactly; `None` if inconsistent.
/// Free variables (dependent columns) are set to zero.
pub fn solve(columns: &[Vec<Rational>], target: &[Rational]) -> Option<Vec<Rational>> {
    let nvars = columns.len();
    let neq = target.len();
    // augmented rows: [a_{e,0} … a_{e,nvars-1} | b_e]
    let mut m: Vec<Vec<Rational>> = (0..neq)
        .map(|e| {
            let mut row: Vec<Rational> = columns.iter().map(|col| col[e].clone()).collect();
            row.push(target[e].clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..nvars {
        let Some(p) = (r..neq).find(|&k| !m[k][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = Rational::one() / &m[r][c];
        for v in m[r].iter_mut() {
            *v *= &inv;
        }
        for k in 0..neq {
            if k != r && !m[k][c].is_zero() {
                let f = m[k][c].clone();
                for cc in c..=nvars {
                    let delta = &f * &m[r][cc];
                    m[k][cc] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if m[r..].iter().any(|row| !row[nvars].is_zero()) {
        return None;
    }
    let mut x = vec![Rational::zero(); nvars];
    for (row, &c) in pivots.iter().enumerate() {
        x[c] = m[row][nvars].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    fn q(x: i64) -> Rational {
        Rational::from_integer(x.into())
    }

    #[test]
    fn ranks() {
        assert_eq!(rank(&ints(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(&ints(&[&[0, 1, 2], &[1, 0, 3], &[1, 1, 5]])), 2);
        assert_eq!(rank(&ints(&[&[2, 0, 0], &[0, 3, 0], &[0, 0, 5]])), 3);
        assert_eq!(rank(&[]), 0);
    }

    #[test]
    fn solves() {
        let cols = vec![vec![q(1), q(0), q(1)], vec![q(0), q(1), q(1)]];
        assert_eq!(solve(&cols, &[q(2), q(3), q(5)]), Some(vec![q(2), q(3)]));
        assert_eq!(solve(&cols, &[q(2), q(3), q(4)]), None);
    }
}
