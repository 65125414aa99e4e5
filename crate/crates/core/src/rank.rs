//! Exact rank of small integer matrices by fraction-free (Bareiss) elimination.

/// Rank over the rationals of a row-major integer matrix.
///
/// Every intermediate entry is a minor of the input, so the division in each
/// update step is exact.
///
/// # Panics
/// On ragged rows, or if an intermediate minor overflows `i128`.
pub fn integer_rank(matrix: &[Vec<i64>]) -> usize {
    let Some(width) = matrix.first().map(Vec::len) else {
        return 0;
    };
    assert!(matrix.iter().all(|r| r.len() == width), "ragged matrix");
    let mut m: Vec<Vec<i128>> = matrix.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut rank = 0;
    let mut prev_pivot: i128 = 1;
    for col in 0..width {
        if rank == m.len() {
            break;
        }
        let Some(pivot_row) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot_row);
        let pivot = m[rank][col];
        let (done, below) = m.split_at_mut(rank + 1);
        let pivot_vals = &done[rank];
        for row in below.iter_mut() {
            let factor = row[col];
            if factor == 0 && pivot == prev_pivot {
                continue;
            }
            for j in col + 1..width {
                let num = pivot
                    .checked_mul(row[j])
                    .and_then(|a| factor.checked_mul(pivot_vals[j]).and_then(|b| a.checked_sub(b)))
                    .expect("minor overflowed i128");
                row[j] = match prev_pivot {
                    1 => num,
                    -1 => -num,
                    p => {
                        debug_assert_eq!(num % p, 0);
                        num / p
                    }
                };
            }
            row[col] = 0;
        }
        prev_pivot = pivot;
        rank += 1;
        // Zero rows stay zero under every later update.
        let mut keep = rank;
        for r in rank..m.len() {
            if m[r][col + 1..].iter().any(|&x| x != 0) {
                m.swap(keep, r);
                keep += 1;
            }
        }
        m.truncate(keep);
    }
    rank
}
