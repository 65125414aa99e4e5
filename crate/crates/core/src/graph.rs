//! The bipartite graph `G(w)` of an L-diagram and the dimension of its
//! weight cone.
//!
//! The cone is generated by `e_row - f_col` for every cell of the diagram.
//! Its dimension is computed two ways: by counting vertices and components of
//! the graph, and by the exact rank of the generator matrix. The second route
//! never looks at the graph.

use serde::Serialize;

use crate::cells::{bits, CellSet};
use crate::rank::integer_rank;
use crate::union_find::DisjointSets;

/// Row vertices `a`, barred column vertices `b̄`, one edge `a -> b̄` per cell.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BipartiteGraph {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

impl BipartiteGraph {
    pub fn vertex_count(&self) -> usize {
        self.rows.len() + self.cols.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Connected components; 0 for the empty graph.
    pub fn component_count(&self) -> usize {
        let row_index = |r: usize| self.rows.binary_search(&r).expect("edge row is a vertex");
        let col_index = |c: usize| self.rows.len() + self.cols.binary_search(&c).expect("edge col is a vertex");
        let mut sets = DisjointSets::new(self.vertex_count());
        for &(r, c) in &self.edges {
            sets.union(row_index(r), col_index(c));
        }
        sets.set_count()
    }
}

/// One edge per cell; the vertex sets are exactly the occupied rows and
/// columns, so no vertex is isolated.
pub fn graph_of(cells: &CellSet) -> BipartiteGraph {
    BipartiteGraph { rows: cells.occupied_rows(), cols: cells.occupied_cols(), edges: cells.pairs() }
}

/// `|V| - |comp|`, valid for acyclic orientations such as `a -> b̄`.
pub fn cone_dim_by_formula(graph: &BipartiteGraph) -> usize {
    graph.vertex_count() - graph.component_count()
}

/// Vertex and component counts of the graph of `cells` without materialising
/// the edge list.
pub(crate) fn vertices_and_components(cells: &CellSet) -> (usize, usize) {
    let n = cells.n();
    let mut sets = DisjointSets::new(2 * n);
    for r in 1..=n {
        let mut row_bits = bits(cells.row_mask(r));
        if let Some(first) = row_bits.next() {
            sets.union(r - 1, n + first);
            for c in row_bits {
                sets.union(r - 1, n + c);
            }
        }
    }
    let vertices = cells.occupied_row_count() + cells.occupied_col_mask().count_ones() as usize;
    // Unused vertices are singletons in `sets`.
    let components = sets.set_count() - (2 * n - vertices);
    (vertices, components)
}

/// A character `e_i - f_j` in `Z^n x Z^n`, stored as a length-`2n` vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightVector {
    pub coords: Vec<i64>,
}

impl WeightVector {
    pub fn new(n: usize, row: usize, col: usize) -> Self {
        let mut coords = vec![0; 2 * n];
        coords[row - 1] = 1;
        coords[n + col - 1] = -1;
        WeightVector { coords }
    }
}

pub fn weight_generators(cells: &CellSet, n: usize) -> Vec<WeightVector> {
    cells.iter().map(|c| WeightVector::new(n, c.row, c.col)).collect()
}

/// Dimension of the cone as the rank of its generators, exact.
pub fn cone_dim_by_rank(gens: &[WeightVector]) -> usize {
    let matrix: Vec<Vec<i64>> = gens.iter().map(|g| g.coords.clone()).collect();
    integer_rank(&matrix)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::l_diagram;
    use crate::perm::Permutation;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn graph_of_3412() {
        let g = graph_of(&l_diagram(&p("3412")));
        assert_eq!(g.rows, vec![2, 3, 4]);
        assert_eq!(g.cols, vec![1, 2, 3]);
        let mut k33: Vec<_> = (2..=4).flat_map(|a| (1..=3).map(move |b| (a, b))).collect();
        k33.retain(|&e| e != (4, 1));
        assert_eq!(g.edges, k33);
        assert_eq!(g.component_count(), 1);
        assert_eq!(cone_dim_by_formula(&g), 5);
    }

    #[test]
    fn empty_graph() {
        let g = graph_of(&CellSet::empty(4));
        assert!(g.is_empty());
        assert_eq!(g.vertex_count(), 0);
        assert_eq!(g.component_count(), 0);
        assert_eq!(cone_dim_by_formula(&g), 0);
        assert_eq!(vertices_and_components(&CellSet::empty(4)), (0, 0));
    }

    #[test]
    fn graph_of_54132() {
        let g = graph_of(&l_diagram(&p("54132")));
        assert_eq!((g.vertex_count(), g.edge_count(), g.component_count()), (7, 12, 1));
        assert_eq!(cone_dim_by_formula(&g), 6);
    }

    #[test]
    fn graph_of_4231() {
        let l = l_diagram(&p("4231"));
        assert_eq!(l.pairs(), vec![(3, 1), (3, 2), (4, 1), (4, 2)]);
        assert_eq!(graph_of(&l).component_count(), 1);
    }

    #[test]
    fn several_components() {
        // {2, 3̄}, {3, 4̄}, {4, 5, 1̄, 2̄}
        let cells = CellSet::from_cells(5, [(2, 3), (3, 4), (4, 1), (5, 1), (5, 2)]).unwrap();
        let g = graph_of(&cells);
        assert_eq!(g.component_count(), 3);
        assert_eq!(cone_dim_by_formula(&g), 8 - 3);
        assert_eq!(vertices_and_components(&cells), (g.vertex_count(), 3));
    }

    #[test]
    fn generators() {
        let cells = CellSet::from_cells(2, [(2, 1)]).unwrap();
        assert_eq!(weight_generators(&cells, 2), vec![WeightVector { coords: vec![0, 1, -1, 0] }]);
        assert!(weight_generators(&CellSet::empty(3), 3).is_empty());
        assert_eq!(weight_generators(&l_diagram(&p("3412")), 4).len(), 8);
    }

    #[test]
    fn rank_route() {
        assert_eq!(cone_dim_by_rank(&weight_generators(&l_diagram(&p("3412")), 4)), 5);
        assert_eq!(cone_dim_by_rank(&[]), 0);
        assert_eq!(cone_dim_by_rank(&weight_generators(&l_diagram(&p("54312")), 5)), 7);
    }
}
