use super::clique::clique_in;
use super::{Budget, SolveError, SolveResult, Tracker};
use crate::certificate::Certificate;
use crate::graph::{Graph, VertexSet};

const NONE: usize = usize::MAX;

/// χ(G) by iterative deepening between the clique number and a DSATUR
/// upper bound. The search is deterministic: vertex choice is by saturation,
/// then degree, then lowest label.
pub fn chromatic_number(g: &Graph, budget: &Budget) -> Result<SolveResult, SolveError> {
    let mut t = Tracker::new(budget);
    let colors = coloring_with(g, &mut t)?;
    let value = colors.iter().max().map_or(0, |&c| c + 1);
    Ok(t.finish(value, Certificate::Coloring { colors }))
}

/// θ(G): each component's complement is coloured and the colour classes
/// become cliques of `g`.
pub fn clique_cover_number(g: &Graph, budget: &Budget) -> Result<SolveResult, SolveError> {
    let mut t = Tracker::new(budget);
    let cliques = clique_cover_with(g, &mut t)?;
    Ok(t.finish(cliques.len(), Certificate::CliqueCover { cliques }))
}

pub(crate) fn clique_cover_with(g: &Graph, t: &mut Tracker) -> Result<Vec<Vec<usize>>, SolveError> {
    let mut out = Vec::new();
    for comp in g.connected_components() {
        let labels = comp.to_vec();
        let h = g.induced_subgraph(&comp)?.complement();
        let colors = coloring_with(&h, t)?;
        let k = colors.iter().max().map_or(0, |&c| c + 1);
        let mut classes = vec![Vec::new(); k];
        for (v, &c) in colors.iter().enumerate() {
            classes[c].push(labels[v]);
        }
        out.extend(classes);
    }
    Ok(out)
}

/// An optimal colouring, colours numbered from 0.
pub(crate) fn coloring_with(g: &Graph, t: &mut Tracker) -> Result<Vec<usize>, SolveError> {
    let comps = g.connected_components();
    if comps.len() <= 1 {
        return color_connected(g, t);
    }
    let mut colors = vec![0; g.order()];
    for comp in comps {
        let h = g.induced_subgraph(&comp)?;
        let local = color_connected(&h, t)?;
        for (v, c) in comp.iter().zip(local) {
            colors[v] = c;
        }
    }
    Ok(colors)
}

fn color_connected(g: &Graph, t: &mut Tracker) -> Result<Vec<usize>, SolveError> {
    if g.order() == 0 {
        return Ok(Vec::new());
    }
    let clique = clique_in(g, &g.vertices(), t)?;
    let greedy = dsatur_greedy(g);
    let upper = greedy.iter().max().map_or(0, |&c| c + 1);
    for k in clique.len()..upper {
        if let Some(colors) = KColoring::new(g, k, &clique).solve(t)? {
            return Ok(colors);
        }
    }
    Ok(greedy)
}

fn saturation(g: &Graph, classes: &[VertexSet], v: usize) -> usize {
    classes
        .iter()
        .filter(|c| c.intersects(g.neighbors(v)))
        .count()
}

/// Picks the uncoloured vertex with the highest saturation, then degree, then lowest label.
fn pick(g: &Graph, classes: &[VertexSet], uncolored: &VertexSet) -> (usize, usize) {
    let mut best = (NONE, 0);
    let mut best_key = (0, 0);
    for v in uncolored.iter() {
        let key = (saturation(g, classes, v), g.degree(v));
        if best.0 == NONE || key > best_key {
            best = (v, key.0);
            best_key = key;
        }
    }
    best
}

fn dsatur_greedy(g: &Graph) -> Vec<usize> {
    let mut colors = vec![NONE; g.order()];
    let mut classes: Vec<VertexSet> = Vec::new();
    let mut uncolored = g.vertices();
    while !uncolored.is_empty() {
        let (v, _) = pick(g, &classes, &uncolored);
        let c = classes
            .iter()
            .position(|c| !c.intersects(g.neighbors(v)))
            .unwrap_or_else(|| {
                classes.push(VertexSet::new());
                classes.len() - 1
            });
        classes[c].insert(v);
        colors[v] = c;
        uncolored.remove(v);
    }
    colors
}

/// Decides k-colourability by backtracking, with the vertices of a known
/// clique pre-assigned colours 0, 1, ...
struct KColoring<'a> {
    g: &'a Graph,
    k: usize,
    colors: Vec<usize>,
    classes: Vec<VertexSet>,
    uncolored: VertexSet,
    used: usize,
}

impl<'a> KColoring<'a> {
    fn new(g: &'a Graph, k: usize, clique: &[usize]) -> Self {
        let mut colors = vec![NONE; g.order()];
        let mut classes = vec![VertexSet::new(); k];
        let mut uncolored = g.vertices();
        for (c, &v) in clique.iter().enumerate() {
            colors[v] = c;
            classes[c].insert(v);
            uncolored.remove(v);
        }
        KColoring {
            g,
            k,
            colors,
            classes,
            uncolored,
            used: clique.len(),
        }
    }

    fn solve(mut self, t: &mut Tracker) -> Result<Option<Vec<usize>>, SolveError> {
        Ok(self.search(t)?.then_some(self.colors))
    }

    fn search(&mut self, t: &mut Tracker) -> Result<bool, SolveError> {
        t.tick()?;
        if self.uncolored.is_empty() {
            return Ok(true);
        }
        let (v, sat) = pick(self.g, &self.classes[..self.used], &self.uncolored);
        if sat >= self.k {
            return Ok(false);
        }
        let limit = (self.used + 1).min(self.k);
        for c in 0..limit {
            if self.classes[c].intersects(self.g.neighbors(v)) {
                continue;
            }
            let opened = c == self.used;
            self.colors[v] = c;
            self.classes[c].insert(v);
            self.uncolored.remove(v);
            if opened {
                self.used += 1;
            }
            if self.search(t)? {
                return Ok(true);
            }
            if opened {
                self.used -= 1;
            }
            self.uncolored.insert(v);
            self.classes[c].remove(v);
            self.colors[v] = NONE;
        }
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn odd_and_even_cycles() {
        let b = Budget::default();
        let r = chromatic_number(&cycle(5), &b).unwrap();
        assert_eq!(r.value, 3);
        r.check(&cycle(5)).unwrap();
        assert_eq!(chromatic_number(&cycle(6), &b).unwrap().value, 2);
        assert_eq!(chromatic_number(&Graph::empty(4).unwrap(), &b).unwrap().value, 1);
        assert_eq!(chromatic_number(&Graph::empty(0).unwrap(), &b).unwrap().value, 0);
    }

    #[test]
    fn clique_cover_small() {
        let b = Budget::default();
        let r = clique_cover_number(&cycle(5), &b).unwrap();
        assert_eq!(r.value, 3);
        r.check(&cycle(5)).unwrap();
        let r = clique_cover_number(&Graph::empty(6).unwrap(), &b).unwrap();
        assert_eq!(r.value, 6);
        r.check(&Graph::empty(6).unwrap()).unwrap();
    }

    #[test]
    fn greedy_is_proper() {
        let g = cycle(7).complement();
        let colors = dsatur_greedy(&g);
        for (u, v) in g.edges() {
            assert_ne!(colors[u], colors[v]);
        }
    }

    #[test]
    fn wheel_needs_four() {
        // Hub 5 joined to a pentagon.
        let mut edges: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        edges.extend((0..5).map(|i| (i, 5)));
        let w5 = Graph::from_edges(6, edges).unwrap();
        let r = chromatic_number(&w5, &Budget::default()).unwrap();
        assert_eq!(r.value, 4);
        r.check(&w5).unwrap();
    }
}
