//! Pair-counting, set-matching and information-theoretic similarities.

use super::exact::{matching_weight, pair_counts, van_dongen_numerator};
use super::{Flag, MeasureId, MeasureScore};
use crate::clustering::Clustering;
use crate::entropy::entropy_stats;
use crate::error::{Error, Result};
use crate::lattice::contingency;
use crate::scalar::{clamp_unit, Scalar};

/// Fraction of point pairs on which the clusterings agree.
pub fn rand_index<T: Scalar>(left: &Clustering, right: &Clustering) -> Result<MeasureScore<T>> {
    let pairs = pair_counts(&contingency(left, right)?);
    if pairs.total == 0 {
        return Err(Error::UndefinedMeasure {
            measure: MeasureId::Rand,
            reason: "fewer than two points, so there are no pairs",
        });
    }
    let value = T::from_wide(pairs.agreements()) / T::from_wide(pairs.total);
    Ok(MeasureScore::new(MeasureId::Rand, value))
}

/// One minus the normalized number of point moves between the clusterings:
/// `(Σ_L max_C |L∩C| + Σ_C max_L |L∩C|) / 2n`.
pub fn van_dongen<T: Scalar>(left: &Clustering, right: &Clustering) -> Result<MeasureScore<T>> {
    let table = contingency(left, right)?;
    let value = T::from_count(van_dongen_numerator(&table)) / T::from_count(2 * table.n());
    Ok(MeasureScore::new(MeasureId::VanDongen, value))
}

/// Classification accuracy under the best one-to-one cluster matching.
pub fn accuracy<T: Scalar>(left: &Clustering, right: &Clustering) -> Result<MeasureScore<T>> {
    let table = contingency(left, right)?;
    let value = T::from_count(matching_weight(&table)) / T::from_count(table.n());
    Ok(MeasureScore::new(MeasureId::Accuracy, value))
}

/// Mutual information normalized by the larger entropy.
///
/// When both clusterings are the top (both entropies zero) the ratio is 0/0;
/// the score is then 1 if they are equal and 0 otherwise, and flagged.
pub fn nmi<T: Scalar>(left: &Clustering, right: &Clustering) -> Result<MeasureScore<T>> {
    let stats = entropy_stats::<T>(left, right)?;
    let denom = stats.h_left.max(stats.h_right);
    if denom <= T::zero() {
        let value = if left == right { T::one() } else { T::zero() };
        return Ok(MeasureScore::new(MeasureId::Nmi, value).flagged(Flag::NmiZeroEntropy));
    }
    Ok(MeasureScore::new(
        MeasureId::Nmi,
        clamp_unit(stats.mutual_info / denom),
    ))
}

/// `1 - VI / log n`. A single point scores 1 (flagged).
pub fn v_similarity<T: Scalar>(left: &Clustering, right: &Clustering) -> Result<MeasureScore<T>> {
    let stats = entropy_stats::<T>(left, right)?;
    if left.n() == 1 {
        return Ok(MeasureScore::new(MeasureId::V, T::one()).flagged(Flag::SinglePoint));
    }
    let value = T::one() - stats.vi / T::from_count(left.n()).ln();
    Ok(MeasureScore::new(MeasureId::V, clamp_unit(value)))
}

/// `1 - VI / log k²` for clusterings with at most `k` clusters each.
///
/// A `k` above `sqrt(n)` is accepted but flagged.
pub fn k_measure<T: Scalar>(
    left: &Clustering,
    right: &Clustering,
    k: usize,
) -> Result<MeasureScore<T>> {
    if k < 2 {
        return Err(Error::Precondition(format!(
            "k must be at least 2, got {k}"
        )));
    }
    let most = left.num_clusters().max(right.num_clusters());
    if most > k {
        return Err(Error::Precondition(format!(
            "a clustering has {most} clusters, more than k = {k}"
        )));
    }
    let stats = entropy_stats::<T>(left, right)?;
    let log_k2 = T::from_count(k).ln() * T::from_count(2);
    let score = MeasureScore::new(MeasureId::K, clamp_unit(T::one() - stats.vi / log_k2));
    Ok(if k.saturating_mul(k) > left.n() {
        score.flagged(Flag::KExceedsSqrtN)
    } else {
        score
    })
}

/// Raw mutual information in nats (not normalized).
pub fn mutual_information<T: Scalar>(
    left: &Clustering,
    right: &Clustering,
) -> Result<MeasureScore<T>> {
    let stats = entropy_stats::<T>(left, right)?;
    Ok(MeasureScore::new(MeasureId::MutualInfo, stats.mutual_info))
}
