//! Measure identifiers, scores, and a by-id dispatcher.

pub mod assignment;
mod classic;
pub mod exact;

use std::fmt;
use std::str::FromStr;

pub use assignment::max_weight_assignment;
pub use classic::{
    accuracy, k_measure, mutual_information, nmi, rand_index, v_similarity, van_dongen,
};

use crate::clustering::Clustering;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::splitmerge::{sh_measure, smse_measure, FeatureMatrix};

/// Stable identifiers shared by the library, the decomposition report and
/// the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MeasureId {
    Rand,
    VanDongen,
    Accuracy,
    Nmi,
    V,
    K,
    Sh,
    Smse,
    /// Raw mutual information, exposed for decomposition checks.
    MutualInfo,
    /// Product split-merge similarity with caller-supplied subcomponent measures.
    SplitMergeProduct,
    /// Arithmetic-mean split-merge similarity.
    SplitMergeMean,
}

impl MeasureId {
    pub const ALL: [MeasureId; 11] = [
        MeasureId::Rand,
        MeasureId::VanDongen,
        MeasureId::Accuracy,
        MeasureId::Nmi,
        MeasureId::V,
        MeasureId::K,
        MeasureId::Sh,
        MeasureId::Smse,
        MeasureId::MutualInfo,
        MeasureId::SplitMergeProduct,
        MeasureId::SplitMergeMean,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            MeasureId::Rand => "rand",
            MeasureId::VanDongen => "vandongen",
            MeasureId::Accuracy => "accuracy",
            MeasureId::Nmi => "nmi",
            MeasureId::V => "v",
            MeasureId::K => "k",
            MeasureId::Sh => "sh",
            MeasureId::Smse => "smse",
            MeasureId::MutualInfo => "mi",
            MeasureId::SplitMergeProduct => "sstar",
            MeasureId::SplitMergeMean => "sprime",
        }
    }

    /// Whether the measure ranges over `[0, 1]` with both ends attainable.
    pub fn is_normalized(self) -> bool {
        !matches!(
            self,
            MeasureId::VanDongen | MeasureId::Accuracy | MeasureId::MutualInfo
        )
    }
}

impl fmt::Display for MeasureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for MeasureId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        MeasureId::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown measure `{s}`")))
    }
}

/// Notes attached to a score when a convention or fallback decided its value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flag {
    /// NMI with both entropies zero; defined as 1 for equal clusterings.
    NmiZeroEntropy,
    /// V on a single point, where `log n = 0`; defined as 1.
    SinglePoint,
    /// `k` exceeds `sqrt(n)`, outside the range where `2 log k` bounds VI tightly.
    KExceedsSqrtN,
    /// A subcomponent had zero feature variance and was scored by entropy instead.
    MseZeroVariance,
}

impl Flag {
    pub fn as_str(self) -> &'static str {
        match self {
            Flag::NmiZeroEntropy => "convention:nmi-zero-entropy",
            Flag::SinglePoint => "convention:single-point",
            Flag::KExceedsSqrtN => "warning:k-exceeds-sqrt-n",
            Flag::MseZeroVariance => "fallback:mse-zero-variance",
        }
    }
}

impl fmt::Display for Flag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct MeasureScore<T> {
    pub measure: MeasureId,
    pub value: T,
    pub normalized: bool,
    pub flags: Vec<Flag>,
}

impl<T> MeasureScore<T> {
    pub(crate) fn new(measure: MeasureId, value: T) -> Self {
        Self {
            measure,
            value,
            normalized: measure.is_normalized(),
            flags: Vec::new(),
        }
    }

    pub(crate) fn flagged(mut self, flag: Flag) -> Self {
        if !self.flags.contains(&flag) {
            self.flags.push(flag);
        }
        self
    }
}

/// Extra inputs some measures need.
#[derive(Clone, Copy, Debug)]
pub struct MeasureParams<'a, T> {
    /// Cluster-count bound for the `k` measure.
    pub k: Option<usize>,
    /// Per-point features for `smse`.
    pub features: Option<&'a FeatureMatrix<T>>,
}

impl<T> Default for MeasureParams<'_, T> {
    fn default() -> Self {
        Self {
            k: None,
            features: None,
        }
    }
}

impl<'a, T> MeasureParams<'a, T> {
    pub fn with_k(k: usize) -> Self {
        Self {
            k: Some(k),
            features: None,
        }
    }

    pub fn with_features(features: &'a FeatureMatrix<T>) -> Self {
        Self {
            k: None,
            features: Some(features),
        }
    }
}

/// Evaluates a measure by identifier.
///
/// `sstar` and `sprime` need explicit subcomponent measures and are not
/// reachable from here; call [`crate::splitmerge::s_star`] directly.
pub fn evaluate<T: Scalar>(
    measure: MeasureId,
    left: &Clustering,
    right: &Clustering,
    params: &MeasureParams<'_, T>,
) -> Result<MeasureScore<T>> {
    match measure {
        MeasureId::Rand => rand_index(left, right),
        MeasureId::VanDongen => van_dongen(left, right),
        MeasureId::Accuracy => accuracy(left, right),
        MeasureId::Nmi => nmi(left, right),
        MeasureId::V => v_similarity(left, right),
        MeasureId::K => {
            let k = params
                .k
                .ok_or_else(|| Error::Precondition("measure `k` needs a cluster bound k".into()))?;
            k_measure(left, right, k)
        }
        MeasureId::Sh => sh_measure(left, right),
        MeasureId::Smse => {
            let features = params
                .features
                .ok_or_else(|| Error::MissingFeatures(MeasureId::Smse.to_string()))?;
            smse_measure(left, right, features)
        }
        MeasureId::MutualInfo => mutual_information(left, right),
        MeasureId::SplitMergeProduct | MeasureId::SplitMergeMean => Err(Error::InvalidInput(
            format!("`{measure}` needs explicit subcomponent measures"),
        )),
    }
}
