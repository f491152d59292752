use crate::coeff::BetaScalar;
use crate::error::{Error, Result};

/// Solves `A x = b` exactly by Gaussian elimination, where `a[row][col]`.
///
/// The system must have a unique solution: a rank-deficient matrix or an
/// inconsistent right-hand side is reported as singular.
pub fn solve(mut a: Vec<Vec<BetaScalar>>, mut b: Vec<BetaScalar>, degree: usize) -> Result<Vec<BetaScalar>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::with_capacity(cols);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            return Err(Error::Singular {
                degree,
                detail: format!("no pivot in column {c} of a {rows}x{cols} block"),
            });
        };
        a.swap(r, p);
        b.swap(r, p);
        let inv = a[r][c].inverse()?;
        for j in c..cols {
            a[r][j] = &a[r][j] * &inv;
        }
        b[r] = &b[r] * &inv;
        for i in 0..rows {
            if i == r || a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].clone();
            for j in c..cols {
                let t = &f * &a[r][j];
                a[i][j] = &a[i][j] - &t;
            }
            let t = &f * &b[r];
            b[i] = &b[i] - &t;
        }
        pivots.push(r);
        r += 1;
    }
    if let Some(i) = (r..rows).find(|&i| !b[i].is_zero()) {
        return Err(Error::Singular {
            degree,
            detail: format!("inconsistent equation in row {i}"),
        });
    }
    Ok(pivots.into_iter().map(|row| b[row].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(x: i64) -> BetaScalar {
        BetaScalar::from_int(x)
    }

    #[test]
    fn small_systems() {
        // [[1, 1], [1, -1]] x = [3, 1]
        let x = solve(vec![vec![n(1), n(1)], vec![n(1), n(-1)]], vec![n(3), n(1)], 0).unwrap();
        assert_eq!(x, vec![n(2), n(1)]);
        let b = BetaScalar::beta();
        // [[β, 0], [1, 2]] x = [β², 0]
        let x = solve(vec![vec![b.clone(), n(0)], vec![n(1), n(2)]], vec![&b * &b, n(0)], 0).unwrap();
        assert_eq!(x, vec![b.clone(), -&(&b * &BetaScalar::ratio(1, 2))]);
        assert!(solve(vec![vec![n(1), n(1)], vec![n(2), n(2)]], vec![n(1), n(2)], 3).is_err());
        assert!(solve(vec![vec![n(1)], vec![n(1)]], vec![n(1), n(2)], 3).is_err());
        assert_eq!(solve(vec![], vec![], 0).unwrap(), vec![]);
    }
}
