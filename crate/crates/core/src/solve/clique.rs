use super::{Budget, SolveError, SolveResult, Tracker};
use crate::certificate::Certificate;
use crate::graph::{Graph, VertexSet};

/// ω(G) by branch and bound with a greedy colouring bound.
pub fn max_clique(g: &Graph, budget: &Budget) -> Result<SolveResult, SolveError> {
    let mut t = Tracker::new(budget);
    let clique = clique_in(g, &g.vertices(), &mut t)?;
    Ok(t.finish(clique.len(), Certificate::Clique { vertices: clique }))
}

/// α(G), solved as a maximum clique of the complement of each component.
pub fn max_stable_set(g: &Graph, budget: &Budget) -> Result<SolveResult, SolveError> {
    let mut t = Tracker::new(budget);
    let stable = stable_set_with(g, &mut t)?;
    Ok(t.finish(stable.len(), Certificate::StableSet { vertices: stable }))
}

pub(crate) fn stable_set_with(g: &Graph, t: &mut Tracker) -> Result<Vec<usize>, SolveError> {
    let mut out = Vec::new();
    for comp in g.connected_components() {
        let labels = comp.to_vec();
        let h = g.induced_subgraph(&comp)?.complement();
        let local = clique_in(&h, &h.vertices(), t)?;
        out.extend(local.into_iter().map(|v| labels[v]));
    }
    out.sort_unstable();
    Ok(out)
}

/// A maximum clique of `g` among the vertices of `within`, sorted by label.
pub(crate) fn clique_in(
    g: &Graph,
    within: &VertexSet,
    t: &mut Tracker,
) -> Result<Vec<usize>, SolveError> {
    let mut search = CliqueSearch {
        g,
        best: greedy_clique(g, within),
        current: Vec::new(),
        t,
    };
    search.expand(*within)?;
    let mut best = search.best;
    best.sort_unstable();
    Ok(best)
}

fn greedy_clique(g: &Graph, within: &VertexSet) -> Vec<usize> {
    let mut clique = Vec::new();
    let mut cand = *within;
    while !cand.is_empty() {
        let v = cand
            .iter()
            .max_by_key(|&v| ((*g.neighbors(v) & cand).len(), std::cmp::Reverse(v)))
            .unwrap();
        clique.push(v);
        cand = cand & *g.neighbors(v);
    }
    clique
}

struct CliqueSearch<'a, 'b> {
    g: &'a Graph,
    best: Vec<usize>,
    current: Vec<usize>,
    t: &'b mut Tracker,
}

impl CliqueSearch<'_, '_> {
    fn expand(&mut self, mut cand: VertexSet) -> Result<(), SolveError> {
        self.t.tick()?;
        if cand.is_empty() {
            if self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
            return Ok(());
        }
        let (order, colors) = color_sort(self.g, cand);
        for i in (0..order.len()).rev() {
            if self.current.len() + colors[i] <= self.best.len() {
                return Ok(());
            }
            let v = order[i];
            self.current.push(v);
            self.expand(cand & *self.g.neighbors(v))?;
            self.current.pop();
            cand.remove(v);
        }
        Ok(())
    }
}

/// Greedy colour classes over `cand` in label order; returns the vertices in
/// class order and, for each, the number of classes up to and including its own.
fn color_sort(g: &Graph, cand: VertexSet) -> (Vec<usize>, Vec<usize>) {
    let mut order = Vec::with_capacity(cand.len());
    let mut colors = Vec::with_capacity(cand.len());
    let mut rest = cand;
    let mut color = 0;
    while !rest.is_empty() {
        color += 1;
        let mut q = rest;
        while let Some(v) = q.first() {
            q = q - *g.neighbors(v);
            q.remove(v);
            rest.remove(v);
            order.push(v);
            colors.push(color);
        }
    }
    (order, colors)
}
