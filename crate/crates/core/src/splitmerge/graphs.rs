//! Split graphs, merge graphs, the derivation graph and subcomponent pairs.

use crate::clustering::Clustering;
use crate::error::Result;
use crate::lattice::{components, meet, meet_with_table, Component};

/// A left cluster and the partition the right clustering induces on it.
///
/// `targets` is over local points `0..source_cluster.len()`, local `i`
/// standing for `source_cluster[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitGraph {
    pub source_cluster: Vec<usize>,
    pub targets: Clustering,
}

impl SplitGraph {
    /// Target clusters as sets of original point ids.
    pub fn target_sets(&self) -> Vec<Vec<usize>> {
        globalize_all(&self.source_cluster, &self.targets)
    }
}

/// A right cluster and the partition the left clustering induces on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MergeGraph {
    pub sources: Clustering,
    pub target_cluster: Vec<usize>,
}

impl MergeGraph {
    pub fn source_sets(&self) -> Vec<Vec<usize>> {
        globalize_all(&self.target_cluster, &self.sources)
    }
}

fn globalize_all(points: &[usize], local: &Clustering) -> Vec<Vec<usize>> {
    local
        .clusters()
        .into_iter()
        .map(|c| c.into_iter().map(|i| points[i]).collect())
        .collect()
}

/// One split graph per left cluster of the component, in local canonical order.
pub fn split_set(component: &Component) -> Vec<SplitGraph> {
    component
        .left
        .clusters()
        .into_iter()
        .map(|local| SplitGraph {
            targets: component
                .right
                .induced(&local)
                .expect("component clusters are valid subsets"),
            source_cluster: component.globalize(&local),
        })
        .collect()
}

/// One merge graph per right cluster of the component.
pub fn merge_set(component: &Component) -> Vec<MergeGraph> {
    component
        .right
        .clusters()
        .into_iter()
        .map(|local| MergeGraph {
            sources: component
                .left
                .induced(&local)
                .expect("component clusters are valid subsets"),
            target_cluster: component.globalize(&local),
        })
        .collect()
}

/// Tripartite graph left → meet → right.
///
/// `split_edges` holds `(left cluster, meet cluster)` and `merge_edges` holds
/// `(meet cluster, right cluster)`, all in canonical cluster indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationGraph {
    pub left_part: Clustering,
    pub middle_part: Clustering,
    pub right_part: Clustering,
    pub split_edges: Vec<(usize, usize)>,
    pub merge_edges: Vec<(usize, usize)>,
}

pub fn derivation_graph(left: &Clustering, right: &Clustering) -> Result<DerivationGraph> {
    let (middle, table) = meet_with_table(left, right)?;
    let split_edges = table
        .cells()
        .iter()
        .enumerate()
        .map(|(m, c)| (c.row, m))
        .collect();
    let merge_edges = table
        .cells()
        .iter()
        .enumerate()
        .map(|(m, c)| (m, c.col))
        .collect();
    Ok(DerivationGraph {
        left_part: left.clone(),
        middle_part: middle,
        right_part: right.clone(),
        split_edges,
        merge_edges,
    })
}

/// The unique split graph and merge graph whose clusters intersect in
/// `meet_cluster`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubcomponentPair {
    pub meet_cluster: Vec<usize>,
    pub split: SplitGraph,
    pub merge: MergeGraph,
}

/// Subcomponent pairs of one component, one per cluster of its local meet.
pub(crate) fn component_pairs(component: &Component) -> Vec<SubcomponentPair> {
    let splits = split_set(component);
    let merges = merge_set(component);
    let local_meet =
        meet(&component.left, &component.right).expect("sides share the component's points");
    local_meet
        .clusters()
        .into_iter()
        .map(|local| {
            let first = local[0];
            SubcomponentPair {
                meet_cluster: component.globalize(&local),
                split: splits[component.left.label_of(first)].clone(),
                merge: merges[component.right.label_of(first)].clone(),
            }
        })
        .collect()
}

/// All subcomponent pairs, enumerated component by component.
pub fn subcomponent_pairs(left: &Clustering, right: &Clustering) -> Result<Vec<SubcomponentPair>> {
    Ok(components(left, right)?
        .iter()
        .flat_map(component_pairs)
        .collect())
}
