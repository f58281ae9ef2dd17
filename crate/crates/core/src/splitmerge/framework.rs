//! Product (`S*`) and arithmetic-mean (`S'`) split-merge similarities.

use super::graphs::component_pairs;
use super::subcomponent::{EntropySubcomponent, MseSubcomponent, SubScore, SubcomponentMeasure};
use super::FeatureMatrix;
use crate::clustering::{Clustering, Relabeler};
use crate::error::{Error, Result};
use crate::lattice::{components, contingency, ContingencyTable};
use crate::measures::{Flag, MeasureId, MeasureScore};
use crate::scalar::Scalar;

fn check_features<T: Scalar>(
    n: usize,
    measures: [&dyn SubcomponentMeasure<T>; 2],
    features: Option<&FeatureMatrix<T>>,
) -> Result<()> {
    for m in measures {
        if m.needs_features() && features.is_none() {
            return Err(Error::MissingFeatures(m.id().to_string()));
        }
    }
    if let Some(f) = features {
        if f.rows() != n {
            return Err(Error::DimensionMismatch {
                left: n,
                right: f.rows(),
            });
        }
    }
    Ok(())
}

/// Scores every split graph (one per left cluster) and every merge graph
/// (one per right cluster).
struct SideScores<T> {
    split: Vec<SubScore<T>>,
    merge: Vec<SubScore<T>>,
}

impl<T: Scalar> SideScores<T> {
    fn compute(
        left: &Clustering,
        right: &Clustering,
        split: &dyn SubcomponentMeasure<T>,
        merge: &dyn SubcomponentMeasure<T>,
        features: Option<&FeatureMatrix<T>>,
    ) -> Result<Self> {
        Ok(Self {
            split: score_clusters(left, right, split, features)?,
            merge: score_clusters(right, left, merge, features)?,
        })
    }

    fn any_fallback(&self) -> bool {
        self.split.iter().chain(&self.merge).any(|s| s.fallback)
    }
}

/// For each cluster of `outer`, the score of the partition `inner` induces on it.
fn score_clusters<T: Scalar>(
    outer: &Clustering,
    inner: &Clustering,
    measure: &dyn SubcomponentMeasure<T>,
    features: Option<&FeatureMatrix<T>>,
) -> Result<Vec<SubScore<T>>> {
    let mut relabel = Relabeler::new(inner.num_clusters());
    outer
        .clusters()
        .into_iter()
        .map(|points| {
            let induced = relabel.relabel(points.iter().map(|&p| inner.label_of(p)));
            measure.score(&points, &induced, features)
        })
        .collect()
}

fn finish<T: Scalar>(measure: MeasureId, value: T, scores: &SideScores<T>) -> MeasureScore<T> {
    let score = MeasureScore::new(measure, value);
    if scores.any_fallback() {
        score.flagged(Flag::MseZeroVariance)
    } else {
        score
    }
}

fn product_sum<T: Scalar>(table: &ContingencyTable, scores: &SideScores<T>) -> T {
    let total: T = table
        .cells()
        .iter()
        .map(|c| T::from_count(c.count) * scores.split[c.row].value * scores.merge[c.col].value)
        .sum();
    total / T::from_count(table.n())
}

/// `S*(L, C) = Σ_{L,C} |L∩C|/n · s(C|L) · s(L|C)`, summed over nonempty
/// intersections only.
pub fn s_star<T: Scalar>(
    left: &Clustering,
    right: &Clustering,
    split: &dyn SubcomponentMeasure<T>,
    merge: &dyn SubcomponentMeasure<T>,
    features: Option<&FeatureMatrix<T>>,
) -> Result<MeasureScore<T>> {
    let table = contingency(left, right)?;
    check_features(left.n(), [split, merge], features)?;
    let scores = SideScores::compute(left, right, split, merge, features)?;
    Ok(finish(
        MeasureId::SplitMergeProduct,
        product_sum(&table, &scores),
        &scores,
    ))
}

/// `S*` evaluated component by component through the subcomponent pairs:
/// `Σ_J |J|/n Σ_{M ⊆ J} |M|/|J| · s(split) · s(merge)`.
///
/// Mathematically identical to [`s_star`]; kept as an independent route.
pub fn s_star_via_pairs<T: Scalar>(
    left: &Clustering,
    right: &Clustering,
    split: &dyn SubcomponentMeasure<T>,
    merge: &dyn SubcomponentMeasure<T>,
    features: Option<&FeatureMatrix<T>>,
) -> Result<MeasureScore<T>> {
    let comps = components(left, right)?;
    check_features(left.n(), [split, merge], features)?;
    let n = T::from_count(left.n());
    let mut fallback = false;
    let mut total = T::zero();
    for comp in &comps {
        let size = T::from_count(comp.size());
        let mut within = T::zero();
        for pair in component_pairs(comp) {
            let s = split.score(&pair.split.source_cluster, &pair.split.targets, features)?;
            let m = merge.score(&pair.merge.target_cluster, &pair.merge.sources, features)?;
            fallback |= s.fallback || m.fallback;
            within = within + T::from_count(pair.meet_cluster.len()) / size * s.value * m.value;
        }
        total = total + size / n * within;
    }
    let score = MeasureScore::new(MeasureId::SplitMergeProduct, total);
    Ok(if fallback {
        score.flagged(Flag::MseZeroVariance)
    } else {
        score
    })
}

/// `S'(L, C) = ½ Σ_L |L|/n · s(C|L) + ½ Σ_C |C|/n · s(L|C)`.
pub fn s_prime<T: Scalar>(
    left: &Clustering,
    right: &Clustering,
    split: &dyn SubcomponentMeasure<T>,
    merge: &dyn SubcomponentMeasure<T>,
    features: Option<&FeatureMatrix<T>>,
) -> Result<MeasureScore<T>> {
    let table = contingency(left, right)?;
    check_features(left.n(), [split, merge], features)?;
    let scores = SideScores::compute(left, right, split, merge, features)?;
    let weighted = |sizes: &[usize], s: &[SubScore<T>]| -> T {
        sizes
            .iter()
            .zip(s)
            .map(|(&size, s)| T::from_count(size) * s.value)
            .sum()
    };
    let value = (weighted(table.row_sizes(), &scores.split)
        + weighted(table.col_sizes(), &scores.merge))
        / T::from_count(2 * table.n());
    Ok(finish(MeasureId::SplitMergeMean, value, &scores))
}

/// `S*` with the normalized-entropy subcomponent measure on both sides.
pub fn sh_measure<T: Scalar>(left: &Clustering, right: &Clustering) -> Result<MeasureScore<T>> {
    let mut score = s_star(
        left,
        right,
        &EntropySubcomponent,
        &EntropySubcomponent,
        None,
    )?;
    score.measure = MeasureId::Sh;
    Ok(score)
}

/// `S*` with the squared-error-ratio subcomponent measure on both sides.
pub fn smse_measure<T: Scalar>(
    left: &Clustering,
    right: &Clustering,
    features: &FeatureMatrix<T>,
) -> Result<MeasureScore<T>> {
    let mut score = s_star(
        left,
        right,
        &MseSubcomponent,
        &MseSubcomponent,
        Some(features),
    )?;
    score.measure = MeasureId::Smse;
    Ok(score)
}
