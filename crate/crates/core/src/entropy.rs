//! Entropies of clusterings in nats.

use crate::clustering::Clustering;
use crate::error::Result;
use crate::lattice::contingency;
use crate::scalar::{plogp, Scalar};

/// Information-theoretic summary of a pair of clusterings, in nats.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EntropyStats<T> {
    pub h_left: T,
    pub h_right: T,
    pub h_joint: T,
    pub mutual_info: T,
    pub h_left_given_right: T,
    pub h_right_given_left: T,
    /// Variation of information, `H(L|C) + H(C|L)`.
    pub vi: T,
}

impl<T: Copy> EntropyStats<T> {
    /// The statistics for the swapped pair `(right, left)`.
    pub fn swapped(&self) -> Self {
        Self {
            h_left: self.h_right,
            h_right: self.h_left,
            h_left_given_right: self.h_right_given_left,
            h_right_given_left: self.h_left_given_right,
            ..*self
        }
    }
}

/// Entropy of the size distribution `sizes / Σ sizes`.
pub fn entropy_of_sizes<T: Scalar>(sizes: impl IntoIterator<Item = usize> + Clone) -> T {
    let total: usize = sizes.clone().into_iter().sum();
    if total == 0 {
        return T::zero();
    }
    let n = T::from_count(total);
    sizes.into_iter().map(|s| plogp(T::from_count(s) / n)).sum()
}

pub fn entropy<T: Scalar>(clustering: &Clustering) -> T {
    entropy_of_sizes(clustering.sizes().iter().copied())
}

pub fn entropy_stats<T: Scalar>(left: &Clustering, right: &Clustering) -> Result<EntropyStats<T>> {
    let table = contingency(left, right)?;
    let h_left: T = entropy_of_sizes(table.row_sizes().iter().copied());
    let h_right: T = entropy_of_sizes(table.col_sizes().iter().copied());
    let h_joint: T = entropy_of_sizes(table.cells().iter().map(|c| c.count));
    // Clamp rounding residue so the identities hold as inequalities.
    let mutual_info = (h_left + h_right - h_joint)
        .max(T::zero())
        .min(h_left.min(h_right));
    let h_left_given_right = (h_left - mutual_info).max(T::zero());
    let h_right_given_left = (h_right - mutual_info).max(T::zero());
    Ok(EntropyStats {
        h_left,
        h_right,
        h_joint,
        mutual_info,
        h_left_given_right,
        h_right_given_left,
        vi: h_left_given_right + h_right_given_left,
    })
}
