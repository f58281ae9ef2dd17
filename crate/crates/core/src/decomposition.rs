//! Component-based decomposition `S(L, C) = Σ_J w(J, n) S(L_J, C_J) + b(J, n)`.
//!
//! | measure                         | weight `w(J, n)`            | offset `b(J, n)`              |
//! |---------------------------------|-----------------------------|-------------------------------|
//! | `rand`                          | `|J|(|J|-1) / n(n-1)`       | `1 - Σ w`                     |
//! | `mi`                            | `|J| / n`                   | `log n - Σ |J|/n log |J|`     |
//! | `v`                             | `|J| log |J| / (n log n)`   | `1 - Σ w`                     |
//! | `vandongen`, `accuracy`, `k`, `sh`, `smse` | `|J| / n`        | `0`                           |
//!
//! NMI has no such decomposition.

use crate::clustering::Clustering;
use crate::error::{Error, Result};
use crate::lattice::components;
use crate::measures::{evaluate, MeasureId, MeasureParams};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct ComponentTerm<T> {
    pub join_cluster: Vec<usize>,
    /// The measure evaluated on the two clusterings induced on the join cluster.
    pub score: T,
    pub weight: T,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DecompositionReport<T> {
    pub measure: MeasureId,
    pub components: Vec<ComponentTerm<T>>,
    pub offset: T,
    /// `Σ weight · score + offset`.
    pub recomposed: T,
    /// The measure evaluated on the full clusterings.
    pub direct: T,
}

impl<T: Scalar> DecompositionReport<T> {
    pub fn residual(&self) -> T {
        (self.recomposed - self.direct).abs()
    }

    pub fn weight_sum(&self) -> T {
        self.components.iter().map(|c| c.weight).sum()
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Verification<T> {
    pub residual: T,
    pub tolerance: T,
    pub passed: bool,
}

enum Shape {
    /// Weight from `(|J|, n)`, offset `1 - Σ w`.
    Complement(fn(usize, usize) -> f64),
    MutualInfo,
    JoinWeighted,
}

fn shape(measure: MeasureId) -> Result<Shape> {
    Ok(match measure {
        MeasureId::Rand => Shape::Complement(|j, n| (j * (j - 1)) as f64 / (n * (n - 1)) as f64),
        MeasureId::V => Shape::Complement(|j, n| {
            if j <= 1 {
                0.0
            } else {
                (j as f64 * (j as f64).ln()) / (n as f64 * (n as f64).ln())
            }
        }),
        MeasureId::MutualInfo => Shape::MutualInfo,
        MeasureId::VanDongen
        | MeasureId::Accuracy
        | MeasureId::K
        | MeasureId::Sh
        | MeasureId::Smse => Shape::JoinWeighted,
        MeasureId::Nmi | MeasureId::SplitMergeProduct | MeasureId::SplitMergeMean => {
            return Err(Error::UnsupportedDecomposition(measure))
        }
    })
}

fn weight<T: Scalar>(shape: &Shape, size: usize, n: usize) -> T {
    match shape {
        Shape::Complement(w) => T::from_f64(w(size, n)).expect("finite weight"),
        Shape::MutualInfo | Shape::JoinWeighted => T::from_count(size) / T::from_count(n),
    }
}

/// Splits a measure into per-component scores, weights and an offset.
///
/// Single-point components score 1 (0 for `mi`): both sides are the only
/// partition of one point.
pub fn decompose<T: Scalar>(
    measure: MeasureId,
    left: &Clustering,
    right: &Clustering,
    params: &MeasureParams<'_, T>,
) -> Result<DecompositionReport<T>> {
    let shape = shape(measure)?;
    let direct = evaluate(measure, left, right, params)?.value;
    let n = left.n();

    let mut terms = Vec::new();
    for comp in components(left, right)? {
        let size = comp.size();
        let score = if size == 1 {
            if measure == MeasureId::MutualInfo {
                T::zero()
            } else {
                T::one()
            }
        } else {
            let local_features = params.features.map(|f| f.select(&comp.join_cluster));
            let local = MeasureParams {
                k: params.k,
                features: local_features.as_ref(),
            };
            evaluate(measure, &comp.left, &comp.right, &local)?.value
        };
        terms.push(ComponentTerm {
            join_cluster: comp.join_cluster,
            score,
            weight: weight(&shape, size, n),
        });
    }

    let offset = match shape {
        Shape::Complement(_) => T::one() - terms.iter().map(|t| t.weight).sum::<T>(),
        Shape::MutualInfo => {
            let nf = T::from_count(n);
            nf.ln()
                - terms
                    .iter()
                    .map(|t| {
                        let j = T::from_count(t.join_cluster.len());
                        j / nf * j.ln()
                    })
                    .sum::<T>()
        }
        Shape::JoinWeighted => T::zero(),
    };
    let recomposed = terms.iter().map(|t| t.weight * t.score).sum::<T>() + offset;
    Ok(DecompositionReport {
        measure,
        components: terms,
        offset,
        recomposed,
        direct,
    })
}

/// Decomposes, recomposes, and compares against the direct value.
pub fn verify_recomposition<T: Scalar>(
    measure: MeasureId,
    left: &Clustering,
    right: &Clustering,
    params: &MeasureParams<'_, T>,
    tolerance: T,
) -> Result<Verification<T>> {
    let residual = decompose(measure, left, right, params)?.residual();
    Ok(Verification {
        residual,
        tolerance,
        passed: residual <= tolerance,
    })
}
