use super::Graph;
use itertools::Itertools;

/// Vertex `k`-connectivity by exhaustive deletion: `g` has more than `k`
/// vertices and stays connected after removing any fewer than `k` of them.
///
/// Cost is `O(n^(k-1) * m)`; intended for `k <= 3` and a few dozen vertices.
pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    let n = g.vertex_count();
    if n <= k || n == 0 {
        return false;
    }
    for size in 0..k {
        for removed in (0..n).combinations(size) {
            let mut keep = g.all_vertices();
            for &v in &removed {
                keep.remove(v);
            }
            if g.components(&keep, None).len() != 1 {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        let k4 = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(is_k_connected(&k4, 3));
        assert!(!is_k_connected(&k4, 4));
        let p3 = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert!(is_k_connected(&p3, 1));
        assert!(!is_k_connected(&p3, 2));
        assert!(!is_k_connected(&Graph::empty(2), 1));
        assert!(is_k_connected(&Graph::empty(1), 0));
    }
}
