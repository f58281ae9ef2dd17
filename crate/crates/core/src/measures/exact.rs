//! Exact rational forms of the counting measures (Rand, van Dongen, accuracy).
//!
//! These are the reference values; the floating-point measures divide the
//! same integer numerators and denominators.

use num_rational::Ratio;

use super::assignment::max_weight_assignment;
use super::MeasureId;
use crate::clustering::Clustering;
use crate::error::{Error, Result};
use crate::lattice::{contingency, ContingencyTable};

/// Pair counts behind the Rand index.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairCounts {
    /// `C(n, 2)`.
    pub total: u128,
    /// Pairs together in the left clustering.
    pub left: u128,
    /// Pairs together in the right clustering.
    pub right: u128,
    /// Pairs together in both.
    pub both: u128,
}

impl PairCounts {
    /// Pairs on which the two clusterings agree (together in both, or apart in both).
    pub fn agreements(&self) -> u128 {
        self.total + 2 * self.both - self.left - self.right
    }
}

fn choose2(x: usize) -> u128 {
    let x = x as u128;
    x * x.saturating_sub(1) / 2
}

pub fn pair_counts(table: &ContingencyTable) -> PairCounts {
    PairCounts {
        total: choose2(table.n()),
        left: table.row_sizes().iter().map(|&s| choose2(s)).sum(),
        right: table.col_sizes().iter().map(|&s| choose2(s)).sum(),
        both: table.cells().iter().map(|c| choose2(c.count)).sum(),
    }
}

fn ratio(num: u128, den: u128) -> Ratio<u128> {
    Ratio::new(num, den)
}

/// Rand index as an exact fraction. Undefined for a single point.
pub fn rand_index_exact(left: &Clustering, right: &Clustering) -> Result<Ratio<u128>> {
    let table = contingency(left, right)?;
    let pairs = pair_counts(&table);
    if pairs.total == 0 {
        return Err(Error::UndefinedMeasure {
            measure: MeasureId::Rand,
            reason: "fewer than two points, so there are no pairs",
        });
    }
    Ok(ratio(pairs.agreements(), pairs.total))
}

/// Numerator of van Dongen similarity: row maxima plus column maxima.
pub(crate) fn van_dongen_numerator(table: &ContingencyTable) -> usize {
    let mut row_max = vec![0usize; table.row_sizes().len()];
    let mut col_max = vec![0usize; table.col_sizes().len()];
    for c in table.cells() {
        row_max[c.row] = row_max[c.row].max(c.count);
        col_max[c.col] = col_max[c.col].max(c.count);
    }
    row_max.iter().sum::<usize>() + col_max.iter().sum::<usize>()
}

pub fn van_dongen_exact(left: &Clustering, right: &Clustering) -> Result<Ratio<u128>> {
    let table = contingency(left, right)?;
    Ok(ratio(
        van_dongen_numerator(&table) as u128,
        2 * table.n() as u128,
    ))
}

/// Weight of the best one-to-one matching of left to right clusters.
pub(crate) fn matching_weight(table: &ContingencyTable) -> usize {
    let mut weights = vec![vec![0i64; table.col_sizes().len()]; table.row_sizes().len()];
    for c in table.cells() {
        weights[c.row][c.col] = c.count as i64;
    }
    let (total, _) = max_weight_assignment(&weights);
    total as usize
}

pub fn accuracy_exact(left: &Clustering, right: &Clustering) -> Result<Ratio<u128>> {
    let table = contingency(left, right)?;
    Ok(ratio(matching_weight(&table) as u128, table.n() as u128))
}
