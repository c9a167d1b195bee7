use super::coloring::clique_cover_with;
use super::matching::matching_number;
use super::{Budget, SolveError, Tracker};
use crate::graph::Graph;

/// True when deleting any single vertex leaves a graph with a perfect matching.
/// Vacuously true for the null graph.
pub fn is_factor_critical(g: &Graph) -> bool {
    let n = g.order();
    if n == 0 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    (0..n).all(|v| {
        let h = g.remove_vertex(v).expect("vertex in range");
        2 * matching_number(&h) == n - 1
    })
}

/// True when deleting any vertex lowers the clique cover number.
pub fn is_theta_critical(g: &Graph, budget: &Budget) -> Result<bool, SolveError> {
    let mut t = Tracker::new(budget);
    let theta = clique_cover_with(g, &mut t)?.len();
    for v in 0..g.order() {
        let h = g.remove_vertex(v)?;
        if clique_cover_with(&h, &mut t)?.len() >= theta {
            return Ok(false);
        }
    }
    Ok(true)
}
