use alloc::vec::Vec;
use num_integer::Integer;

use super::LaplacianMatrix;

/// `L·y = λ·y` entrywise in exact integer arithmetic, with `y ≠ 0`.
pub fn verify_eigenpair(l: &LaplacianMatrix, lambda: i64, y: &[i64]) -> bool {
    if y.len() != l.order() || y.iter().all(|&x| x == 0) {
        return false;
    }
    l.apply(y).iter().zip(y).all(|(ly, yi)| *ly == lambda * yi)
}

/// Rank over ℚ of a list of integer vectors, by fraction-free elimination
/// with each row divided by its content to keep entries small.
pub fn basis_rank(vectors: &[Vec<i64>]) -> usize {
    let mut rows: Vec<Vec<i128>> = vectors
        .iter()
        .map(|v| v.iter().map(|&x| x as i128).collect())
        .collect();
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let (top, rest) = rows.split_at_mut(rank + 1);
        let p = &top[rank];
        for row in rest.iter_mut() {
            let f = row[col];
            if f == 0 {
                continue;
            }
            for (x, &pv) in row.iter_mut().zip(p.iter()) {
                *x = *x * p[col] - f * pv;
            }
            let content = row.iter().fold(0i128, |g, &x| g.gcd(&x));
            if content > 1 {
                row.iter_mut().for_each(|x| *x /= content);
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}
