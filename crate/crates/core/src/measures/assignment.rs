//! Exact maximum-weight bipartite matching (Hungarian method, O(m^3)).

/// Maximum-weight one-to-one matching on a rectangular weight matrix.
///
/// Returns the total weight and, for each row, the matched column. The matrix
/// is padded to square with zero weights, so rows or columns left unmatched
/// contribute nothing. All rows must have equal length.
pub fn max_weight_assignment(weights: &[Vec<i64>]) -> (i64, Vec<Option<usize>>) {
    let rows = weights.len();
    let cols = weights.first().map_or(0, Vec::len);
    let m = rows.max(cols);
    if m == 0 {
        return (0, Vec::new());
    }
    debug_assert!(weights.iter().all(|r| r.len() == cols));
    let cost = |i: usize, j: usize| -> i64 {
        if i < rows && j < cols {
            -weights[i][j]
        } else {
            0
        }
    };

    // Potentials u (rows) and v (cols); p[j] is the row matched to column j,
    // with index 0 reserved as a sentinel (1-based internally).
    let inf = i64::MAX / 4;
    let mut u = vec![0i64; m + 1];
    let mut v = vec![0i64; m + 1];
    let mut p = vec![0usize; m + 1];
    let mut way = vec![0usize; m + 1];
    for i in 1..=m {
        p[0] = i;
        let mut j0 = 0usize;
        let mut minv = vec![inf; m + 1];
        let mut used = vec![false; m + 1];
        loop {
            used[j0] = true;
            let i0 = p[j0];
            let mut delta = inf;
            let mut j1 = 0usize;
            for j in 1..=m {
                if used[j] {
                    continue;
                }
                let cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
                if cur < minv[j] {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if minv[j] < delta {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for j in 0..=m {
                if used[j] {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
            if p[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }

    let mut matched = vec![None; rows];
    let mut total = 0;
    for j in 1..=m {
        let i = p[j];
        if i >= 1 && i <= rows && j <= cols {
            matched[i - 1] = Some(j - 1);
            total += weights[i - 1][j - 1];
        }
    }
    (total, matched)
}
