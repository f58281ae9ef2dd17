//! Meet, join and the connected components of the cluster bipartite graph.
//!
//! Everything here is a single pass over the points plus work proportional to
//! the number of nonempty intersections, so two clusterings of a million
//! points compare in linear time.

use rustc_hash::FxHashMap;

use crate::clustering::{Clustering, Relabeler};
use crate::error::{check_same_n, Result};

/// One nonempty intersection `L ∩ C`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
    pub count: usize,
}

/// Sparse overlap counts between a left and a right clustering.
///
/// Rows index left clusters and columns index right clusters, both in
/// canonical order. Only nonempty cells are stored; cell `i` is meet cluster
/// `i` of [`meet`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContingencyTable {
    n: usize,
    row_sizes: Vec<usize>,
    col_sizes: Vec<usize>,
    cells: Vec<Cell>,
}

impl ContingencyTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn row_sizes(&self) -> &[usize] {
        &self.row_sizes
    }

    pub fn col_sizes(&self) -> &[usize] {
        &self.col_sizes
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    /// Overlap count for `(row, col)`; zero when the cell is absent.
    pub fn get(&self, row: usize, col: usize) -> usize {
        self.cells
            .iter()
            .find(|c| c.row == row && c.col == col)
            .map_or(0, |c| c.count)
    }

    /// Cell indices grouped by row.
    pub fn cells_by_row(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.row_sizes.len()];
        for (i, c) in self.cells.iter().enumerate() {
            out[c.row].push(i);
        }
        out
    }

    /// Cell indices grouped by column.
    pub fn cells_by_col(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.col_sizes.len()];
        for (i, c) in self.cells.iter().enumerate() {
            out[c.col].push(i);
        }
        out
    }

    /// The same table with rows and columns exchanged.
    pub fn transposed(&self) -> ContingencyTable {
        ContingencyTable {
            n: self.n,
            row_sizes: self.col_sizes.clone(),
            col_sizes: self.row_sizes.clone(),
            cells: self
                .cells
                .iter()
                .map(|c| Cell {
                    row: c.col,
                    col: c.row,
                    count: c.count,
                })
                .collect(),
        }
    }
}

/// Builds the contingency table and the meet together in one pass.
///
/// Cells are numbered in order of first appearance along the points, which is
/// exactly the canonical labelling of the meet.
pub fn meet_with_table(
    left: &Clustering,
    right: &Clustering,
) -> Result<(Clustering, ContingencyTable)> {
    check_same_n(left.n(), right.n())?;
    let n = left.n();
    let mut index: FxHashMap<(usize, usize), usize> = FxHashMap::with_capacity_and_hasher(
        left.num_clusters().max(right.num_clusters()),
        Default::default(),
    );
    let mut cells: Vec<Cell> = Vec::new();
    let mut meet_labels = Vec::with_capacity(n);
    for (&row, &col) in left.labels().iter().zip(right.labels()) {
        let next = cells.len();
        let id = *index.entry((row, col)).or_insert(next);
        if id == next {
            cells.push(Cell { row, col, count: 0 });
        }
        cells[id].count += 1;
        meet_labels.push(id);
    }
    let meet_sizes = cells.iter().map(|c| c.count).collect();
    let table = ContingencyTable {
        n,
        row_sizes: left.sizes().to_vec(),
        col_sizes: right.sizes().to_vec(),
        cells,
    };
    Ok((
        Clustering::from_canonical_parts(meet_labels, meet_sizes),
        table,
    ))
}

pub fn contingency(left: &Clustering, right: &Clustering) -> Result<ContingencyTable> {
    meet_with_table(left, right).map(|(_, table)| table)
}

/// All nonempty intersections of a left cluster with a right cluster.
pub fn meet(left: &Clustering, right: &Clustering) -> Result<Clustering> {
    meet_with_table(left, right).map(|(meet, _)| meet)
}

/// The finest clustering refined by both inputs.
///
/// Left and right clusters are vertices of the overlap graph; the join
/// clusters are its connected components, found by union-find over clusters.
pub fn join(left: &Clustering, right: &Clustering) -> Result<Clustering> {
    let table = contingency(left, right)?;
    let rows = left.num_clusters();
    let mut sets = DisjointSet::new(rows + right.num_clusters());
    for cell in table.cells() {
        sets.union(cell.row, rows + cell.col);
    }
    let mut relabel = Relabeler::new(rows + right.num_clusters());
    Ok(relabel.relabel(left.labels().iter().map(|&row| sets.find(row))))
}

/// A connected component of the overlap graph: a join cluster together with
/// the clusterings both sides induce on it.
///
/// `left` and `right` are over local points `0..join_cluster.len()`, where
/// local point `i` is `join_cluster[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub join_cluster: Vec<usize>,
    pub left: Clustering,
    pub right: Clustering,
}

impl Component {
    pub fn size(&self) -> usize {
        self.join_cluster.len()
    }

    /// Maps local point ids back to the original points.
    pub fn globalize(&self, local: &[usize]) -> Vec<usize> {
        local.iter().map(|&i| self.join_cluster[i]).collect()
    }
}

/// One [`Component`] per join cluster, in canonical join order.
pub fn components(left: &Clustering, right: &Clustering) -> Result<Vec<Component>> {
    let joined = join(left, right)?;
    let mut left_relabel = Relabeler::new(left.num_clusters());
    let mut right_relabel = Relabeler::new(right.num_clusters());
    Ok(joined
        .clusters()
        .into_iter()
        .map(|points| {
            let l = left_relabel.relabel(points.iter().map(|&p| left.label_of(p)));
            let r = right_relabel.relabel(points.iter().map(|&p| right.label_of(p)));
            Component {
                join_cluster: points,
                left: l,
                right: r,
            }
        })
        .collect())
}

/// Union-find with path halving and union by size.
#[derive(Clone, Debug)]
pub struct DisjointSet {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl DisjointSet {
    pub fn new(len: usize) -> Self {
        Self {
            parent: (0..len).collect(),
            size: vec![1; len],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `a` and `b` were already connected.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        true
    }
}
