use std::collections::VecDeque;

use super::{SolveResult, SolveStats};
use crate::certificate::Certificate;
use crate::graph::Graph;

const NONE: usize = usize::MAX;

/// ν(G) by Edmonds' blossom algorithm. Polynomial, so no budget.
pub fn max_matching(g: &Graph) -> SolveResult {
    let start = std::time::Instant::now();
    let mut m = Blossom::new(g);
    let searches = m.run();
    let edges: Vec<(usize, usize)> = (0..g.order())
        .filter(|&v| m.mate[v] != NONE && v < m.mate[v])
        .map(|v| (v, m.mate[v]))
        .collect();
    SolveResult {
        value: edges.len(),
        certificate: Certificate::Matching { edges },
        stats: SolveStats {
            nodes: searches,
            elapsed: start.elapsed(),
        },
    }
}

pub fn matching_number(g: &Graph) -> usize {
    max_matching(g).value
}

struct Blossom<'a> {
    g: &'a Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    in_queue: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Blossom<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.order();
        Blossom {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            in_queue: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn run(&mut self) -> u64 {
        let n = self.g.order();
        // Greedy start; the augmenting searches fix up anything it misses.
        for u in 0..n {
            if self.mate[u] == NONE {
                if let Some(v) = self.g.neighbors(u).iter().find(|&v| self.mate[v] == NONE) {
                    self.mate[u] = v;
                    self.mate[v] = u;
                }
            }
        }
        let mut searches = 0;
        for root in 0..n {
            if self.mate[root] == NONE {
                searches += 1;
                if let Some(end) = self.find_augmenting_path(root) {
                    self.augment(end);
                }
            }
        }
        searches
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.order()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    fn find_augmenting_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.order();
        self.in_queue.fill(false);
        self.parent.fill(NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.queue.clear();
        self.queue.push_back(root);
        self.in_queue[root] = true;
        while let Some(v) = self.queue.pop_front() {
            for to in self.g.neighbors(v).iter() {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.fill(false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.in_queue[i] {
                                self.in_queue[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.in_queue[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
    }
}
