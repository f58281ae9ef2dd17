//! The split-merge framework.
//!
//! Two clusterings are related through their meet: every left cluster splits
//! into meet clusters, which then merge into right clusters. Each left cluster
//! with the partition it is split into forms a *split graph*; each right
//! cluster with the partition merged into it forms a *merge graph*. Every meet
//! cluster selects exactly one (split, merge) pair, and the similarity
//! `S*` weights the product of the two subcomponent scores by the meet
//! cluster's share of the points.

mod features;
mod framework;
mod graphs;
mod subcomponent;

pub use features::FeatureMatrix;
pub use framework::{s_prime, s_star, s_star_via_pairs, sh_measure, smse_measure};
pub use graphs::{
    derivation_graph, merge_set, split_set, subcomponent_pairs, DerivationGraph, MergeGraph,
    SplitGraph, SubcomponentPair,
};
pub use subcomponent::{
    check_normalization, s_entropy, s_max, s_mse, EntropyOverLogK, EntropyOverLogKSquared,
    EntropySubcomponent, MaxOverlapSubcomponent, MseSubcomponent, NormalizationViolation, SubScore,
    SubcomponentMeasure, SubcomponentRegistry,
};
