//! Brute-force oracles shared by the integration tests. Nothing here goes
//! through the greedy matcher or the reconstruction code.

#![allow(dead_code)]

use compdeck::Composition;

/// All index sets `i_1 < ... < i_l` of `0..n` with `l = len`.
pub fn index_subsets(n: usize, len: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, len: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, len, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, len, &mut Vec::new(), &mut out);
    out
}

/// `u <= w` by trying every embedding.
pub fn contains_exhaustive(w: &[usize], u: &[usize]) -> bool {
    if u.len() > w.len() {
        return false;
    }
    index_subsets(w.len(), u.len())
        .iter()
        .any(|idx| idx.iter().zip(u).all(|(&i, &need)| w[i] >= need))
}

/// Compositions of `n` built from scratch: first part, then the rest.
pub fn compositions_of(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in 1..=n {
        for rest in compositions_of(n - p) {
            let mut c = vec![p];
            c.extend(rest);
            out.push(c);
        }
    }
    out
}

pub fn compositions_up_to(max: usize) -> Vec<Vec<usize>> {
    (0..=max).flat_map(compositions_of).collect()
}

pub fn to_comp(parts: &[usize]) -> Composition {
    Composition::new(parts.to_vec()).unwrap()
}
