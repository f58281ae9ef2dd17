//! Scores for a single split or merge graph.
//!
//! A subcomponent is a cluster `A` together with a partition of `A`. A
//! normalized subcomponent measure is 1 exactly when the partition is `{A}`,
//! 0 exactly when the partition is all singletons of a non-singleton `A`, and
//! strictly between otherwise.

use std::fmt;

use super::FeatureMatrix;
use crate::clustering::Clustering;
use crate::entropy::entropy_of_sizes;
use crate::enumerate::enumerate_clusterings;
use crate::error::{Error, Result};
use crate::scalar::{clamp_unit, Scalar};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SubScore<T> {
    pub value: T,
    /// Set when a fallback rule produced the value.
    pub fallback: bool,
}

impl<T> SubScore<T> {
    pub fn exact(value: T) -> Self {
        Self {
            value,
            fallback: false,
        }
    }
}

/// A pluggable score `s(partition | cluster)`.
///
/// `cluster` holds the original point ids of `A` and `induced` is the
/// partition of `A` over local ids, local `i` standing for `cluster[i]`.
pub trait SubcomponentMeasure<T: Scalar>: Send + Sync {
    fn id(&self) -> &str;

    fn needs_features(&self) -> bool {
        false
    }

    fn score(
        &self,
        cluster: &[usize],
        induced: &Clustering,
        features: Option<&FeatureMatrix<T>>,
    ) -> Result<SubScore<T>>;
}

fn check_partition(cluster: &[usize], induced: &Clustering) -> Result<()> {
    if cluster.len() != induced.n() {
        return Err(Error::InvalidInput(format!(
            "induced clustering covers {} points but the cluster has {}",
            induced.n(),
            cluster.len()
        )));
    }
    Ok(())
}

/// `1 - H(induced) / log |A|`, pinned to exactly 1 for `{A}` (including a
/// singleton `A`) and exactly 0 for all singletons.
pub fn s_entropy<T: Scalar>(cluster: &[usize], induced: &Clustering) -> Result<T> {
    check_partition(cluster, induced)?;
    Ok(entropy_score(induced))
}

fn entropy_score<T: Scalar>(induced: &Clustering) -> T {
    if induced.is_top() {
        T::one()
    } else if induced.is_bottom() {
        T::zero()
    } else {
        let h: T = entropy_of_sizes(induced.sizes().iter().copied());
        clamp_unit(T::one() - h / T::from_count(induced.n()).ln())
    }
}

/// Largest induced cluster as a fraction of `|A|`. Never reaches 0, so it is
/// not normalized; with the mean combination it reproduces van Dongen.
pub fn s_max<T: Scalar>(cluster: &[usize], induced: &Clustering) -> Result<T> {
    check_partition(cluster, induced)?;
    let largest = induced.sizes().iter().copied().max().unwrap_or(0);
    Ok(T::from_count(largest) / T::from_count(induced.n()))
}

/// Within-subcluster squared error over the squared error of `A` as a whole.
///
/// Squared error is the squared Euclidean distance to the arithmetic mean.
/// When `A` has zero spread but is split, the ratio is 0/0 and the entropy
/// score is used instead (reported through [`SubScore::fallback`]).
pub fn s_mse<T: Scalar>(
    cluster: &[usize],
    induced: &Clustering,
    features: &FeatureMatrix<T>,
) -> Result<SubScore<T>> {
    check_partition(cluster, induced)?;
    if let Some(&p) = cluster.iter().find(|&&p| p >= features.rows()) {
        return Err(Error::InvalidInput(format!(
            "point {p} has no feature row ({} rows supplied)",
            features.rows()
        )));
    }
    if induced.is_top() {
        return Ok(SubScore::exact(T::one()));
    }
    let whole = squared_error(features, cluster.iter().copied());
    let parts: T = induced
        .clusters()
        .into_iter()
        .map(|local| squared_error(features, local.into_iter().map(|i| cluster[i])))
        .sum();
    if whole <= T::zero() {
        return Ok(SubScore {
            value: entropy_score(induced),
            fallback: true,
        });
    }
    Ok(SubScore::exact(clamp_unit(parts / whole)))
}

fn squared_error<T: Scalar>(
    features: &FeatureMatrix<T>,
    points: impl Iterator<Item = usize> + Clone,
) -> T {
    let dim = features.dim();
    let mut mean = vec![T::zero(); dim];
    let mut count = 0usize;
    for p in points.clone() {
        for (m, &x) in mean.iter_mut().zip(features.row(p)) {
            *m = *m + x;
        }
        count += 1;
    }
    let count = T::from_count(count);
    mean.iter_mut().for_each(|m| *m = *m / count);
    points
        .map(|p| {
            features
                .row(p)
                .iter()
                .zip(&mean)
                .map(|(&x, &m)| (x - m) * (x - m))
                .sum::<T>()
        })
        .sum()
}

/// Normalized entropy, the subcomponent measure of `S_H`.
#[derive(Clone, Copy, Debug, Default)]
pub struct EntropySubcomponent;

impl<T: Scalar> SubcomponentMeasure<T> for EntropySubcomponent {
    fn id(&self) -> &str {
        "entropy"
    }

    fn score(
        &self,
        cluster: &[usize],
        induced: &Clustering,
        _: Option<&FeatureMatrix<T>>,
    ) -> Result<SubScore<T>> {
        s_entropy(cluster, induced).map(SubScore::exact)
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct MaxOverlapSubcomponent;

impl<T: Scalar> SubcomponentMeasure<T> for MaxOverlapSubcomponent {
    fn id(&self) -> &str {
        "max"
    }

    fn score(
        &self,
        cluster: &[usize],
        induced: &Clustering,
        _: Option<&FeatureMatrix<T>>,
    ) -> Result<SubScore<T>> {
        s_max(cluster, induced).map(SubScore::exact)
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct MseSubcomponent;

impl<T: Scalar> SubcomponentMeasure<T> for MseSubcomponent {
    fn id(&self) -> &str {
        "mse"
    }

    fn needs_features(&self) -> bool {
        true
    }

    fn score(
        &self,
        cluster: &[usize],
        induced: &Clustering,
        features: Option<&FeatureMatrix<T>>,
    ) -> Result<SubScore<T>> {
        let features = features.ok_or_else(|| Error::MissingFeatures("mse".into()))?;
        s_mse(cluster, induced, features)
    }
}

fn entropy_over<T: Scalar>(
    cluster: &[usize],
    induced: &Clustering,
    k: usize,
    power: usize,
) -> Result<SubScore<T>> {
    check_partition(cluster, induced)?;
    if k < 2 {
        return Err(Error::Precondition(format!(
            "k must be at least 2, got {k}"
        )));
    }
    let h: T = entropy_of_sizes(induced.sizes().iter().copied());
    let scale = T::from_count(k).ln() * T::from_count(power);
    Ok(SubScore::exact(T::one() - h / scale))
}

/// `1 - H(induced) / log k` with a fixed cluster bound `k`. Combined by the
/// arithmetic mean this reproduces the `k` measure exactly.
#[derive(Clone, Copy, Debug)]
pub struct EntropyOverLogK {
    pub k: usize,
}

impl<T: Scalar> SubcomponentMeasure<T> for EntropyOverLogK {
    fn id(&self) -> &str {
        "entropy-logk"
    }

    fn score(
        &self,
        cluster: &[usize],
        induced: &Clustering,
        _: Option<&FeatureMatrix<T>>,
    ) -> Result<SubScore<T>> {
        entropy_over(cluster, induced, self.k, 1)
    }
}

/// `1 - H(induced) / log k²`. Its mean combination is `1 - VI / (2 log k²)`,
/// which is `(1 + K) / 2` rather than `K`.
#[derive(Clone, Copy, Debug)]
pub struct EntropyOverLogKSquared {
    pub k: usize,
}

impl<T: Scalar> SubcomponentMeasure<T> for EntropyOverLogKSquared {
    fn id(&self) -> &str {
        "entropy-logk2"
    }

    fn score(
        &self,
        cluster: &[usize],
        induced: &Clustering,
        _: Option<&FeatureMatrix<T>>,
    ) -> Result<SubScore<T>> {
        entropy_over(cluster, induced, self.k, 2)
    }
}

/// A partition on which a subcomponent measure broke the normalization rules.
#[derive(Clone, Debug, PartialEq)]
pub struct NormalizationViolation {
    pub measure: String,
    /// Canonical labels of the offending partition of `0..size`.
    pub partition: Vec<usize>,
    pub value: f64,
    pub rule: &'static str,
}

impl fmt::Display for NormalizationViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: partition {:?} scored {} ({})",
            self.measure, self.partition, self.value, self.rule
        )
    }
}

/// Checks the normalization rules on every partition of up to `max_size`
/// points. Feature-based measures see point `i` at coordinate `i`.
pub fn check_normalization<T: Scalar>(
    measure: &dyn SubcomponentMeasure<T>,
    max_size: usize,
) -> Vec<NormalizationViolation> {
    let mut out = Vec::new();
    for size in 1..=max_size {
        let cluster: Vec<usize> = (0..size).collect();
        let coords: Vec<T> = cluster.iter().map(|&i| T::from_count(i)).collect();
        let features = FeatureMatrix::from_column(&coords).expect("finite coordinates");
        for induced in enumerate_clusterings(size).expect("sizes below the enumeration cap") {
            let violation = |value: f64, rule| NormalizationViolation {
                measure: measure.id().to_string(),
                partition: induced.labels().to_vec(),
                value,
                rule,
            };
            let value = match measure.score(&cluster, &induced, Some(&features)) {
                Ok(s) => s.value.to_f64().unwrap_or(f64::NAN),
                Err(_) => {
                    out.push(violation(f64::NAN, "evaluation failed"));
                    continue;
                }
            };
            let rule = if induced.is_top() {
                (value != 1.0)
                    .then_some("must be 1 exactly when the partition is the whole cluster")
            } else if induced.is_bottom() {
                (value != 0.0).then_some("must be 0 when a non-singleton cluster is fully split")
            } else {
                (!(value > 0.0 && value < 1.0))
                    .then_some("must lie strictly inside (0, 1) otherwise")
            };
            if let Some(rule) = rule {
                out.push(violation(value, rule));
            }
        }
    }
    out
}

/// Subcomponent measures addressable by identifier.
pub struct SubcomponentRegistry<T: Scalar> {
    measures: Vec<Box<dyn SubcomponentMeasure<T>>>,
}

impl<T: Scalar> SubcomponentRegistry<T> {
    /// Largest cluster size covered by the registration check.
    pub const CHECK_SIZE: usize = 6;

    pub fn empty() -> Self {
        Self {
            measures: Vec::new(),
        }
    }

    /// Registry holding `entropy`, `max` and `mse`.
    pub fn with_builtins() -> Self {
        Self {
            measures: vec![
                Box::new(EntropySubcomponent),
                Box::new(MaxOverlapSubcomponent),
                Box::new(MseSubcomponent),
            ],
        }
    }

    /// Adds a measure and returns the normalization violations found on all
    /// partitions of up to [`Self::CHECK_SIZE`] points. Violations are
    /// advisory; the measure is registered regardless.
    pub fn register(
        &mut self,
        measure: Box<dyn SubcomponentMeasure<T>>,
    ) -> Result<Vec<NormalizationViolation>> {
        if self.get(measure.id()).is_some() {
            return Err(Error::InvalidInput(format!(
                "subcomponent measure `{}` is already registered",
                measure.id()
            )));
        }
        let warnings = check_normalization(measure.as_ref(), Self::CHECK_SIZE);
        self.measures.push(measure);
        Ok(warnings)
    }

    pub fn get(&self, id: &str) -> Option<&dyn SubcomponentMeasure<T>> {
        self.measures
            .iter()
            .find(|m| m.id() == id)
            .map(|m| m.as_ref())
    }

    pub fn ids(&self) -> Vec<&str> {
        self.measures.iter().map(|m| m.id()).collect()
    }
}

impl<T: Scalar> Default for SubcomponentRegistry<T> {
    fn default() -> Self {
        Self::with_builtins()
    }
}
