//! Hard partitions of the points `0..n`.

use std::collections::HashMap;
use std::hash::Hash;

use crate::error::{Error, Result};

/// A partition of the points `0..n` into disjoint nonempty clusters.
///
/// Labels are stored in canonical form: cluster ids are assigned in order of
/// first appearance, so two clusterings compare equal exactly when they group
/// the points the same way, whatever labels they were built from.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Clustering {
    labels: Vec<usize>,
    sizes: Vec<usize>,
}

impl Clustering {
    /// Groups points that share a label. Point `i` gets `labels[i]`.
    pub fn from_labels<L: Hash + Eq>(labels: &[L]) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::InvalidInput(
                "a clustering needs at least one point".into(),
            ));
        }
        let mut ids: HashMap<&L, usize> = HashMap::new();
        let mut sizes = Vec::new();
        let canonical = labels
            .iter()
            .map(|label| {
                let next = ids.len();
                let id = *ids.entry(label).or_insert(next);
                if id == sizes.len() {
                    sizes.push(0);
                }
                sizes[id] += 1;
                id
            })
            .collect();
        Ok(Self {
            labels: canonical,
            sizes,
        })
    }

    /// Builds a clustering from explicit clusters of point ids in `0..n`.
    pub fn from_clusters<C: AsRef<[usize]>>(n: usize, clusters: &[C]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput(
                "a clustering needs at least one point".into(),
            ));
        }
        let mut raw = vec![usize::MAX; n];
        for (id, cluster) in clusters.iter().enumerate() {
            let cluster = cluster.as_ref();
            if cluster.is_empty() {
                return Err(Error::InvalidInput(format!("cluster {id} is empty")));
            }
            for &p in cluster {
                if p >= n {
                    return Err(Error::InvalidInput(format!(
                        "point {p} is out of range for n = {n}"
                    )));
                }
                if raw[p] != usize::MAX {
                    return Err(Error::InvalidInput(format!(
                        "point {p} appears in two clusters"
                    )));
                }
                raw[p] = id;
            }
        }
        if let Some(p) = raw.iter().position(|&l| l == usize::MAX) {
            return Err(Error::InvalidInput(format!(
                "point {p} is not covered by any cluster"
            )));
        }
        Ok(Relabeler::new(clusters.len()).relabel(raw.iter().copied()))
    }

    /// The single-cluster partition of `n` points.
    ///
    /// # Panics
    /// If `n == 0`.
    pub fn top(n: usize) -> Self {
        assert!(n > 0, "a clustering needs at least one point");
        Self {
            labels: vec![0; n],
            sizes: vec![n],
        }
    }

    /// The all-singletons partition of `n` points.
    ///
    /// # Panics
    /// If `n == 0`.
    pub fn bottom(n: usize) -> Self {
        assert!(n > 0, "a clustering needs at least one point");
        Self {
            labels: (0..n).collect(),
            sizes: vec![1; n],
        }
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn num_clusters(&self) -> usize {
        self.sizes.len()
    }

    /// Canonical per-point cluster ids (first-appearance order).
    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn label_of(&self, point: usize) -> usize {
        self.labels[point]
    }

    /// Member lists in canonical cluster order, each sorted ascending.
    pub fn clusters(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = self.sizes.iter().map(|&s| Vec::with_capacity(s)).collect();
        for (p, &l) in self.labels.iter().enumerate() {
            out[l].push(p);
        }
        out
    }

    pub fn is_top(&self) -> bool {
        self.sizes.len() == 1
    }

    pub fn is_bottom(&self) -> bool {
        self.sizes.len() == self.labels.len()
    }

    /// True when every cluster of `self` lies inside a cluster of `coarser`.
    pub fn refines(&self, coarser: &Clustering) -> bool {
        if self.n() != coarser.n() {
            return false;
        }
        let mut parent = vec![usize::MAX; self.num_clusters()];
        for (&fine, &coarse) in self.labels.iter().zip(&coarser.labels) {
            match parent[fine] {
                usize::MAX => parent[fine] = coarse,
                seen if seen != coarse => return false,
                _ => {}
            }
        }
        true
    }

    /// True when some cluster of `self` is also a cluster of `other`.
    pub fn shares_cluster_with(&self, other: &Clustering) -> bool {
        if self.n() != other.n() {
            return false;
        }
        // A cluster is shared iff it maps to a single cluster of `other`
        // that has the same size.
        let mut image = vec![usize::MAX; self.num_clusters()];
        let mut pure = vec![true; self.num_clusters()];
        for (&a, &b) in self.labels.iter().zip(&other.labels) {
            match image[a] {
                usize::MAX => image[a] = b,
                seen if seen != b => pure[a] = false,
                _ => {}
            }
        }
        (0..self.num_clusters()).any(|a| pure[a] && other.sizes[image[a]] == self.sizes[a])
    }

    /// The clustering induced on `subset`: local point `i` stands for
    /// `subset[i]`, and two local points share a cluster iff their originals do.
    pub fn induced(&self, subset: &[usize]) -> Result<Clustering> {
        if subset.is_empty() {
            return Err(Error::InvalidInput(
                "cannot induce a clustering on an empty subset".into(),
            ));
        }
        let mut seen = vec![false; self.n()];
        for &p in subset {
            if p >= self.n() {
                return Err(Error::InvalidInput(format!(
                    "point {p} is out of range for n = {}",
                    self.n()
                )));
            }
            if std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidInput(format!("point {p} repeated in subset")));
            }
        }
        Ok(Relabeler::new(self.num_clusters()).relabel(subset.iter().map(|&p| self.labels[p])))
    }

    pub(crate) fn from_canonical_parts(labels: Vec<usize>, sizes: Vec<usize>) -> Self {
        debug_assert_eq!(sizes.iter().sum::<usize>(), labels.len());
        Self { labels, sizes }
    }
}

/// Reusable scratch map that canonicalizes raw labels drawn from `0..bound`.
///
/// Only the touched slots are reset after each call, so relabeling many small
/// subsets costs time proportional to the subsets, not to `bound`.
pub(crate) struct Relabeler {
    map: Vec<usize>,
    touched: Vec<usize>,
}

impl Relabeler {
    pub(crate) fn new(bound: usize) -> Self {
        Self {
            map: vec![usize::MAX; bound],
            touched: Vec::new(),
        }
    }

    pub(crate) fn relabel(&mut self, raw: impl IntoIterator<Item = usize>) -> Clustering {
        let mut sizes = Vec::new();
        let labels = raw
            .into_iter()
            .map(|r| {
                if self.map[r] == usize::MAX {
                    self.map[r] = sizes.len();
                    self.touched.push(r);
                    sizes.push(0);
                }
                let id = self.map[r];
                sizes[id] += 1;
                id
            })
            .collect();
        for r in self.touched.drain(..) {
            self.map[r] = usize::MAX;
        }
        Clustering::from_canonical_parts(labels, sizes)
    }
}
