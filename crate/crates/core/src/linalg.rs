//! Dense Gauss–Jordan elimination over Q(θ).

use crate::error::{Error, Result};
use crate::ratfun::RatFun;

/// Solves `A X = B` for square `A`; `B` may have several columns.
/// A singular system is reported as non-generic θ.
pub fn solve(mut a: Vec<Vec<RatFun>>, mut b: Vec<Vec<RatFun>>) -> Result<Vec<Vec<RatFun>>> {
    let n = a.len();
    if b.len() != n || a.iter().any(|r| r.len() != n) {
        return Err(Error::InvalidInput("linear system has mismatched dimensions".into()));
    }
    let k = b.first().map_or(0, Vec::len);
    for col in 0..n {
        let piv = (col..n)
            .filter(|&r| !a[r][col].is_zero())
            .min_by_key(|&r| a[r][col].num().coeffs().len() + a[r][col].den().coeffs().len())
            .ok_or_else(|| Error::NonGenericTheta("singular interpolation system".into()))?;
        a.swap(col, piv);
        b.swap(col, piv);
        let inv = a[col][col].inv()?;
        for j in col..n {
            a[col][j] = &a[col][j] * &inv;
        }
        for j in 0..k {
            b[col][j] = &b[col][j] * &inv;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for j in col..n {
                let t = &f * &a[col][j];
                a[r][j] -= &t;
            }
            for j in 0..k {
                let t = &f * &b[col][j];
                b[r][j] -= &t;
            }
        }
    }
    Ok(b)
}
