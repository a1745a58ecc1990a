use alloc::vec::Vec;

/// Length (in edges) of a longest simple directed path in the graph on
/// `0..nodes`, together with one such path.
///
/// Acyclic graphs are solved by dynamic programming over a topological
/// order; graphs with cycles fall back to exhaustive depth-first search.
pub fn longest_simple_path(nodes: usize, edges: &[(usize, usize)]) -> (usize, Vec<usize>) {
    if nodes == 0 {
        return (0, Vec::new());
    }
    let mut succ = alloc::vec![Vec::new(); nodes];
    for &(a, b) in edges {
        succ[a].push(b);
    }
    let mut indeg = alloc::vec![0usize; nodes];
    for s in succ.iter_mut() {
        s.sort_unstable();
        s.dedup();
        for &b in s.iter() {
            indeg[b] += 1;
        }
    }
    let mut stack: Vec<usize> = (0..nodes).rev().filter(|&i| indeg[i] == 0).collect();
    let mut topo = Vec::with_capacity(nodes);
    while let Some(e) = stack.pop() {
        topo.push(e);
        for &b in succ[e].iter().rev() {
            indeg[b] -= 1;
            if indeg[b] == 0 {
                stack.push(b);
            }
        }
    }
    if topo.len() == nodes {
        // best[e] = longest path starting at e.
        let mut best = alloc::vec![0usize; nodes];
        let mut next = alloc::vec![usize::MAX; nodes];
        for &e in topo.iter().rev() {
            for &b in &succ[e] {
                if best[b] + 1 > best[e] {
                    best[e] = best[b] + 1;
                    next[e] = b;
                }
            }
        }
        let start = (0..nodes).max_by_key(|&e| (best[e], core::cmp::Reverse(e))).unwrap_or(0);
        let mut path = alloc::vec![start];
        let mut cur = start;
        while next[cur] != usize::MAX {
            cur = next[cur];
            path.push(cur);
        }
        return (best[start], path);
    }

    let mut best_path: Vec<usize> = alloc::vec![0];
    let mut on_path = alloc::vec![false; nodes];
    let mut path = Vec::new();
    fn dfs(e: usize, succ: &[Vec<usize>], on_path: &mut [bool], path: &mut Vec<usize>, best: &mut Vec<usize>) {
        on_path[e] = true;
        path.push(e);
        if path.len() > best.len() {
            best.clone_from(path);
        }
        for &b in &succ[e] {
            if !on_path[b] {
                dfs(b, succ, on_path, path, best);
            }
        }
        path.pop();
        on_path[e] = false;
    }
    for s in 0..nodes {
        dfs(s, &succ, &mut on_path, &mut path, &mut best_path);
    }
    (best_path.len() - 1, best_path)
}
