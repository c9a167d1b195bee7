//! Brute-force reference implementations. Deliberately naive: subsets,
//! set partitions and exhaustive recursion, with no shared code with the
//! library solvers beyond `Graph::has_edge`.

#![allow(dead_code)]

use cobound::Graph;

fn members(mask: u32, n: usize) -> Vec<usize> {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

fn pairwise(g: &Graph, vs: &[usize], adjacent: bool) -> bool {
    vs.iter()
        .enumerate()
        .all(|(i, &u)| vs[i + 1..].iter().all(|&v| g.has_edge(u, v) == adjacent))
}

fn best_subset(g: &Graph, within: u32, adjacent: bool) -> usize {
    let n = g.order();
    let mut best = 0;
    let mut sub = within;
    loop {
        let vs = members(sub, n);
        if vs.len() > best && pairwise(g, &vs, adjacent) {
            best = vs.len();
        }
        if sub == 0 {
            return best;
        }
        sub = (sub - 1) & within;
    }
}

fn all(n: usize) -> u32 {
    if n == 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

pub fn alpha(g: &Graph) -> usize {
    best_subset(g, all(g.order()), false)
}

pub fn alpha_in(g: &Graph, mask: u32) -> usize {
    best_subset(g, mask, false)
}

pub fn omega(g: &Graph) -> usize {
    best_subset(g, all(g.order()), true)
}

/// Fewest blocks in a partition of the vertices into sets that are pairwise
/// adjacent (`adjacent`) or pairwise non-adjacent. Enumerates restricted
/// growth strings.
fn min_partition(g: &Graph, adjacent: bool) -> usize {
    fn go(g: &Graph, adjacent: bool, v: usize, blocks: &mut Vec<Vec<usize>>, best: &mut usize) {
        if blocks.len() >= *best {
            return;
        }
        if v == g.order() {
            *best = blocks.len();
            return;
        }
        for i in 0..blocks.len() {
            if blocks[i].iter().all(|&u| g.has_edge(u, v) == adjacent) {
                blocks[i].push(v);
                go(g, adjacent, v + 1, blocks, best);
                blocks[i].pop();
            }
        }
        blocks.push(vec![v]);
        go(g, adjacent, v + 1, blocks, best);
        blocks.pop();
    }
    let mut best = g.order() + 1;
    if g.order() == 0 {
        return 0;
    }
    go(g, adjacent, 0, &mut Vec::new(), &mut best);
    best
}

pub fn chi(g: &Graph) -> usize {
    min_partition(g, false)
}

pub fn theta(g: &Graph) -> usize {
    min_partition(g, true)
}

pub fn nu(g: &Graph) -> usize {
    fn go(g: &Graph, free: u32) -> usize {
        if free == 0 {
            return 0;
        }
        let v = free.trailing_zeros() as usize;
        let rest = free & !(1 << v);
        let mut best = go(g, rest);
        for u in members(rest, g.order()) {
            if g.has_edge(u, v) {
                best = best.max(1 + go(g, rest & !(1 << u)));
            }
        }
        best
    }
    go(g, all(g.order()))
}

pub fn induced(g: &Graph, mask: u32) -> Graph {
    let vs = members(mask, g.order());
    let mut edges = Vec::new();
    for (i, &u) in vs.iter().enumerate() {
        for (j, &v) in vs.iter().enumerate().skip(i + 1) {
            if g.has_edge(u, v) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(vs.len(), edges).unwrap()
}

pub fn deficiency(g: &Graph) -> usize {
    (0..=all(g.order()))
        .map(|m| (m.count_ones() as usize).saturating_sub(2 * alpha_in(g, m)))
        .max()
        .unwrap_or(0)
}

pub fn in_class_c(g: &Graph) -> bool {
    (0..=all(g.order())).all(|m| 3 * alpha_in(g, m) >= m.count_ones() as usize)
}

pub fn delete(g: &Graph, v: usize) -> Graph {
    induced(g, all(g.order()) & !(1 << v))
}

pub fn factor_critical(g: &Graph) -> bool {
    let n = g.order();
    (0..n).all(|v| 2 * nu(&delete(g, v)) == n - 1)
}

pub fn theta_critical(g: &Graph) -> bool {
    let t = theta(g);
    (0..g.order()).all(|v| theta(&delete(g, v)) < t)
}

/// Graph from a bit per vertex pair, pairs in column order.
pub fn from_bits(n: usize, bits: &[bool]) -> Graph {
    let pairs = (1..n).flat_map(|j| (0..j).map(move |i| (i, j)));
    Graph::from_edges(n, pairs.zip(bits).filter(|(_, &b)| b).map(|(e, _)| e)).unwrap()
}
