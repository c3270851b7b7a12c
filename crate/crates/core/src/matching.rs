//! Maximum bipartite matching (Hopcroft-Karp).

use std::collections::VecDeque;

const FREE: usize = usize::MAX;

/// Maximum matching of a bipartite graph with `adj[row]` listing the columns
/// adjacent to `row` (columns are `0..n_cols`).
///
/// Returns `match_of_row`, with `None` for unmatched rows. The result is
/// deterministic: free rows are processed in increasing order and each row
/// tries its columns in increasing order.
pub fn maximum_matching(adj: &[Vec<usize>], n_cols: usize) -> Vec<Option<usize>> {
    let n_rows = adj.len();
    let adj: Vec<Vec<usize>> = adj
        .iter()
        .map(|a| {
            let mut a = a.clone();
            a.sort_unstable();
            a.dedup();
            a
        })
        .collect();
    let mut row_match = vec![FREE; n_rows];
    let mut col_match = vec![FREE; n_cols];
    let mut dist = vec![usize::MAX; n_rows];

    loop {
        // Layer rows by alternating-path distance from the free rows.
        let mut queue = VecDeque::new();
        for r in 0..n_rows {
            if row_match[r] == FREE {
                dist[r] = 0;
                queue.push_back(r);
            } else {
                dist[r] = usize::MAX;
            }
        }
        let mut found = false;
        while let Some(r) = queue.pop_front() {
            for &c in &adj[r] {
                let next = col_match[c];
                if next == FREE {
                    found = true;
                } else if dist[next] == usize::MAX {
                    dist[next] = dist[r] + 1;
                    queue.push_back(next);
                }
            }
        }
        if !found {
            break;
        }
        let mut cursor = vec![0usize; n_rows];
        for r in 0..n_rows {
            if row_match[r] == FREE {
                augment(r, &adj, &mut row_match, &mut col_match, &mut dist, &mut cursor);
            }
        }
    }
    row_match.into_iter().map(|c| (c != FREE).then_some(c)).collect()
}

/// Iterative layered DFS from a free row; flips the path when it reaches a free column.
fn augment(
    start: usize,
    adj: &[Vec<usize>],
    row_match: &mut [usize],
    col_match: &mut [usize],
    dist: &mut [usize],
    cursor: &mut [usize],
) -> bool {
    let mut path: Vec<(usize, usize)> = Vec::new(); // (row, column taken)
    let mut r = start;
    loop {
        if cursor[r] == adj[r].len() {
            dist[r] = usize::MAX;
            match path.pop() {
                Some((prev, _)) => {
                    r = prev;
                    cursor[r] += 1;
                    continue;
                }
                None => return false,
            }
        }
        let c = adj[r][cursor[r]];
        let next = col_match[c];
        if next == FREE {
            path.push((r, c));
            for &(pr, pc) in &path {
                row_match[pr] = pc;
                col_match[pc] = pr;
            }
            return true;
        }
        if dist[next] == dist[r].wrapping_add(1) {
            path.push((r, c));
            r = next;
        } else {
            cursor[r] += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Size of a maximum matching by exhaustive search over rows.
    fn brute_force_size(adj: &[Vec<usize>], n_cols: usize) -> usize {
        fn go(r: usize, adj: &[Vec<usize>], used: &mut Vec<bool>) -> usize {
            if r == adj.len() {
                return 0;
            }
            let mut best = go(r + 1, adj, used);
            for &c in &adj[r] {
                if !used[c] {
                    used[c] = true;
                    best = best.max(1 + go(r + 1, adj, used));
                    used[c] = false;
                }
            }
            best
        }
        go(0, adj, &mut vec![false; n_cols])
    }

    fn assert_valid(adj: &[Vec<usize>], m: &[Option<usize>]) {
        let mut seen = std::collections::HashSet::new();
        for (r, c) in m.iter().enumerate() {
            if let Some(c) = c {
                assert!(adj[r].contains(c));
                assert!(seen.insert(*c));
            }
        }
    }

    #[test]
    fn diagonal_is_preferred() {
        let adj = vec![vec![0, 1], vec![0, 1]];
        assert_eq!(maximum_matching(&adj, 2), vec![Some(0), Some(1)]);
    }

    #[test]
    fn needs_augmenting_path() {
        let adj = vec![vec![0], vec![0, 1], vec![1, 2]];
        let m = maximum_matching(&adj, 3);
        assert_eq!(m, vec![Some(0), Some(1), Some(2)]);
        let adj = vec![vec![0, 1], vec![0]];
        assert_eq!(maximum_matching(&adj, 2), vec![Some(1), Some(0)]);
    }

    #[test]
    fn deficient_graph() {
        let adj = vec![vec![0], vec![0], vec![1]];
        let m = maximum_matching(&adj, 2);
        assert_valid(&adj, &m);
        assert_eq!(m.iter().flatten().count(), 2);
    }

    proptest! {
        #[test]
        fn matches_brute_force(
            (adj, n_cols) in (1usize..7, 1usize..7).prop_flat_map(|(r, c)| {
                (proptest::collection::vec(proptest::collection::vec(0..c, 0..=c), r), Just(c))
            })
        ) {
            let m = maximum_matching(&adj, n_cols);
            assert_valid(&adj, &m);
            prop_assert_eq!(m.iter().flatten().count(), brute_force_size(&adj, n_cols));
        }
    }
}
