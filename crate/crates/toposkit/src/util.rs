//! Small shared utilities: hashing, union-find, tuple odometers.

use sha2::{Digest, Sha256};

/// Hex-encoded SHA-256 of a byte string.
pub fn sha256_hex(bytes: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    let out = hasher.finalize();
    let mut s = String::with_capacity(64);
    for b in out {
        s.push_str(&format!("{b:02x}"));
    }
    s
}

/// Union-find over `0..n` with path compression.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // Smaller root wins so class representatives are canonical.
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }

    /// Classes as sorted lists of members, ordered by smallest member.
    pub fn classes(&mut self, n: usize) -> Vec<Vec<usize>> {
        let mut by_root: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for x in 0..n {
            let r = self.find(x);
            by_root.entry(r).or_default().push(x);
        }
        by_root.into_values().collect()
    }
}

/// Iterate all tuples `(t_0, …, t_{k-1})` with `t_i < radix[i]`, in
/// lexicographic order with the last coordinate varying fastest.
pub fn for_each_tuple(radix: &[usize], mut f: impl FnMut(&[usize])) {
    if radix.iter().any(|&r| r == 0) {
        return;
    }
    let mut tuple = vec![0usize; radix.len()];
    loop {
        f(&tuple);
        let mut i = radix.len();
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            tuple[i] += 1;
            if tuple[i] < radix[i] {
                break;
            }
            tuple[i] = 0;
        }
    }
}

/// Collect all tuples from [`for_each_tuple`].
pub fn all_tuples(radix: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for_each_tuple(radix, |t| out.push(t.to_vec()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn odometer_order_is_lexicographic() {
        let ts = all_tuples(&[2, 3]);
        assert_eq!(ts.len(), 6);
        assert_eq!(ts[0], vec![0, 0]);
        assert_eq!(ts[1], vec![0, 1]);
        assert_eq!(ts[5], vec![1, 2]);
    }

    #[test]
    fn odometer_with_empty_factor_is_empty() {
        assert!(all_tuples(&[2, 0, 3]).is_empty());
        // The empty product has exactly one (empty) tuple.
        assert_eq!(all_tuples(&[]), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn union_find_classes_are_canonical() {
        let mut uf = UnionFind::new(5);
        uf.union(3, 1);
        uf.union(4, 3);
        let classes = uf.classes(5);
        assert_eq!(classes, vec![vec![0], vec![1, 3, 4], vec![2]]);
    }
}
