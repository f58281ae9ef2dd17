//! Comparing a predicted clustering against a true one.
//!
//! The crate provides
//!
//! * a canonical [`Clustering`] type with lattice operations ([`meet`],
//!   [`join`], induced clusterings, refinement) and the connected
//!   [`components`] of the cluster overlap graph;
//! * the classic external measures: Rand index, van Dongen, classification
//!   accuracy, NMI, normalized VI (`V`) and the `k`-bounded VI similarity;
//! * the split-merge family (`S*` and the mean form `S'`) with entropy-,
//!   max-overlap- and squared-error-based subcomponent measures;
//! * per-component decompositions of the measures that admit one;
//! * a split-then-merge degradation series generator.
//!
//! Real-valued code is generic over [`Scalar`] (`f32` or `f64`); the aliases
//! at the crate root fix it to `f64`. The counting measures also have exact
//! rational forms in [`measures::exact`].
//!
//! ```
//! use splitmerge::{sh_measure, Clustering};
//!
//! let truth = Clustering::from_labels(&["a", "a", "a", "b", "b"]).unwrap();
//! let pred = Clustering::from_labels(&[1, 1, 2, 2, 3]).unwrap();
//! let score = sh_measure::<f64>(&truth, &pred).unwrap();
//! assert!((score.value - 0.1682).abs() < 1e-3);
//! ```

pub mod clustering;
pub mod decomposition;
pub mod degradation;
pub mod entropy;
pub mod enumerate;
mod error;
pub mod lattice;
pub mod measures;
mod scalar;
pub mod splitmerge;

pub use clustering::Clustering;
pub use decomposition::{decompose, verify_recomposition, ComponentTerm};
pub use degradation::{
    binary_merge_step, binary_split_step, generate_series, DegradationSeries, StepOp,
};
pub use entropy::{entropy, entropy_stats};
pub use enumerate::{enumerate_clusterings, ENUMERATION_CAP};
pub use error::{Error, Result};
pub use lattice::{components, contingency, join, meet, Component, ContingencyTable};
pub use measures::{
    accuracy, evaluate, k_measure, mutual_information, nmi, rand_index, v_similarity, van_dongen,
    Flag, MeasureId, MeasureParams,
};
pub use scalar::Scalar;
pub use splitmerge::{s_prime, s_star, sh_measure, smse_measure, SubcomponentMeasure};

/// A measure value in double precision.
pub type MeasureScore = measures::MeasureScore<f64>;
pub type EntropyStats = entropy::EntropyStats<f64>;
pub type FeatureMatrix = splitmerge::FeatureMatrix<f64>;
pub type DecompositionReport = decomposition::DecompositionReport<f64>;
pub type Verification = decomposition::Verification<f64>;
pub type SubcomponentRegistry = splitmerge::SubcomponentRegistry<f64>;
