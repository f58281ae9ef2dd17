//! Deterministic series of clusterings from a true clustering down to a
//! worst clustering.
//!
//! The series first applies binary splits until every point is a singleton,
//! then binary merges of "true singletons" (points that are singletons in the
//! truth and still alone in the current clustering) until none remain. At
//! that point the current clustering has an all-singleton meet with the truth
//! and shares no cluster with it.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::clustering::Clustering;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StepOp {
    Split,
    Merge,
}

impl StepOp {
    pub fn as_str(self) -> &'static str {
        match self {
            StepOp::Split => "split",
            StepOp::Merge => "merge",
        }
    }
}

impl fmt::Display for StepOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegradationStep {
    pub op: StepOp,
    pub clustering: Clustering,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegradationSeries {
    pub truth: Clustering,
    pub steps: Vec<DegradationStep>,
    pub seed: u64,
}

impl DegradationSeries {
    /// The truth followed by every step's result.
    pub fn clusterings(&self) -> impl Iterator<Item = &Clustering> {
        std::iter::once(&self.truth).chain(self.steps.iter().map(|s| &s.clustering))
    }

    pub fn terminal(&self) -> &Clustering {
        self.steps.last().map_or(&self.truth, |s| &s.clustering)
    }

    pub fn split_count(&self) -> usize {
        self.steps.iter().filter(|s| s.op == StepOp::Split).count()
    }

    pub fn merge_count(&self) -> usize {
        self.steps.iter().filter(|s| s.op == StepOp::Merge).count()
    }
}

/// Splits the largest non-singleton cluster (ties: smallest first point) into
/// its first `⌈m/2⌉` and last `⌊m/2⌋` points by id. `None` once at the bottom.
pub fn binary_split_step(current: &Clustering) -> Option<Clustering> {
    let clusters = current.clusters();
    // Canonical order is by smallest member, so the first maximum wins ties.
    let members = clusters.iter().filter(|c| c.len() > 1).fold(
        None::<&Vec<usize>>,
        |best, c| match best {
            Some(b) if b.len() >= c.len() => best,
            _ => Some(c),
        },
    )?;
    let mut labels = current.labels().to_vec();
    let fresh = current.num_clusters();
    let keep = members.len().div_ceil(2);
    for &p in &members[keep..] {
        labels[p] = fresh;
    }
    Some(Clustering::from_labels(&labels).expect("nonempty"))
}

/// Points alone in the truth and still alone in `current`, ascending.
pub fn true_singletons(current: &Clustering, truth: &Clustering) -> Vec<usize> {
    (0..current.n())
        .filter(|&p| {
            truth.sizes()[truth.label_of(p)] == 1 && current.sizes()[current.label_of(p)] == 1
        })
        .collect()
}

/// Merges the two smallest true singletons, or the only remaining one with a
/// uniformly chosen other cluster. `None` when no merge applies.
pub fn binary_merge_step<R: Rng + ?Sized>(
    current: &Clustering,
    truth: &Clustering,
    rng: &mut R,
) -> Option<Clustering> {
    let singles = true_singletons(current, truth);
    let mut labels = current.labels().to_vec();
    match singles.as_slice() {
        [] => return None,
        [only] => {
            let own = current.label_of(*only);
            let others = current.num_clusters() - 1;
            if others == 0 {
                return None;
            }
            let mut pick = rng.gen_range(0..others);
            if pick >= own {
                pick += 1;
            }
            labels[*only] = pick;
        }
        [a, b, ..] => labels[*b] = labels[*a],
    }
    Some(Clustering::from_labels(&labels).expect("nonempty"))
}

/// Splits down to the bottom, then merges until no true singleton is left.
pub fn generate_series(truth: &Clustering, seed: u64) -> DegradationSeries {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut steps = Vec::new();
    let mut current = truth.clone();
    while let Some(next) = binary_split_step(&current) {
        steps.push(DegradationStep {
            op: StepOp::Split,
            clustering: next.clone(),
        });
        current = next;
    }
    while let Some(next) = binary_merge_step(&current, truth, &mut rng) {
        steps.push(DegradationStep {
            op: StepOp::Merge,
            clustering: next.clone(),
        });
        current = next;
    }
    DegradationSeries {
        truth: truth.clone(),
        steps,
        seed,
    }
}
