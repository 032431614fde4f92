//! Assignment machinery for the unlabeled extrinsic metrics: minimum-cost
//! perfect matching (potentials method) and bottleneck matching via binary
//! search over a threshold with augmenting-path feasibility checks.

/// Minimum-cost perfect matching on a square cost matrix. Returns the total
/// cost. O(n^3).
pub fn min_cost_matching(cost: &[Vec<i64>]) -> i64 {
    let n = cost.len();
    if n == 0 {
        return 0;
    }
    const INF: i64 = i64::MAX / 4;
    // 1-indexed potentials algorithm.
    let mut u = vec![0i64; n + 1];
    let mut v = vec![0i64; n + 1];
    let mut p = vec![0usize; n + 1]; // p[j] = row matched to column j
    let mut way = vec![0usize; n + 1];
    for i in 1..=n {
        p[0] = i;
        let mut j0 = 0usize;
        let mut minv = vec![INF; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = p[j0];
            let mut delta = INF;
            let mut j1 = 0usize;
            for j in 1..=n {
                if !used[j] {
                    let cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                    if cur < minv[j] {
                        minv[j] = cur;
                        way[j] = j0;
                    }
                    if minv[j] < delta {
                        delta = minv[j];
                        j1 = j;
                    }
                }
            }
            for j in 0..=n {
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
    (1..=n).map(|j| cost[p[j] - 1][j - 1]).sum()
}

/// Whether a perfect matching exists using only edges with `cost <= limit`.
fn feasible(cost: &[Vec<i64>], limit: i64) -> bool {
    let n = cost.len();
    let mut matched = vec![usize::MAX; n]; // column -> row
    fn augment(
        row: usize,
        cost: &[Vec<i64>],
        limit: i64,
        seen: &mut [bool],
        matched: &mut [usize],
    ) -> bool {
        for j in 0..cost.len() {
            if cost[row][j] <= limit && !seen[j] {
                seen[j] = true;
                if matched[j] == usize::MAX || augment(matched[j], cost, limit, seen, matched) {
                    matched[j] = row;
                    return true;
                }
            }
        }
        false
    }
    for i in 0..n {
        let mut seen = vec![false; n];
        if !augment(i, cost, limit, &mut seen, &mut matched) {
            return false;
        }
    }
    true
}

/// Minimum over perfect matchings of the maximum edge cost.
pub fn bottleneck_matching(cost: &[Vec<i64>]) -> i64 {
    let n = cost.len();
    if n == 0 {
        return 0;
    }
    let mut values: Vec<i64> = cost.iter().flatten().copied().collect();
    values.sort_unstable();
    values.dedup();
    let mut lo = 0usize;
    let mut hi = values.len() - 1;
    debug_assert!(feasible(cost, values[hi]));
    while lo < hi {
        let mid = (lo + hi) / 2;
        if feasible(cost, values[mid]) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    values[lo]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hungarian_small() {
        let cost = vec![vec![4, 1, 3], vec![2, 0, 5], vec![3, 2, 2]];
        assert_eq!(min_cost_matching(&cost), 5);
        assert_eq!(min_cost_matching(&[]), 0);
        assert_eq!(min_cost_matching(&[vec![7]]), 7);
    }

    #[test]
    fn hungarian_matches_brute_force() {
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(1);
        for _ in 0..50 {
            let n = rng.random_range(1..=5usize);
            let cost: Vec<Vec<i64>> =
                (0..n).map(|_| (0..n).map(|_| rng.random_range(0..20)).collect()).collect();
            let mut best = i64::MAX;
            let mut perm: Vec<usize> = (0..n).collect();
            permute_all(&mut perm, 0, &mut |p| {
                let total: i64 = (0..n).map(|i| cost[i][p[i]]).sum();
                best = best.min(total);
            });
            assert_eq!(min_cost_matching(&cost), best);
        }
    }

    #[test]
    fn bottleneck_matches_brute_force() {
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(2);
        for _ in 0..50 {
            let n = rng.random_range(1..=5usize);
            let cost: Vec<Vec<i64>> =
                (0..n).map(|_| (0..n).map(|_| rng.random_range(0..20)).collect()).collect();
            let mut best = i64::MAX;
            let mut perm: Vec<usize> = (0..n).collect();
            permute_all(&mut perm, 0, &mut |p| {
                let worst: i64 = (0..n).map(|i| cost[i][p[i]]).max().unwrap();
                best = best.min(worst);
            });
            assert_eq!(bottleneck_matching(&cost), best);
        }
    }

    fn permute_all(perm: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
        if k == perm.len() {
            f(perm);
            return;
        }
        for i in k..perm.len() {
            perm.swap(k, i);
            permute_all(perm, k + 1, f);
            perm.swap(k, i);
        }
    }
}
