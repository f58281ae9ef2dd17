//! Exhaustive enumeration of set partitions, for small-`n` oracles.

use crate::clustering::Clustering;
use crate::error::{Error, Result};

/// Largest `n` accepted by [`enumerate_clusterings`]; Bell(10) = 115975.
pub const ENUMERATION_CAP: usize = 10;

/// Every partition of `0..n` exactly once, as restricted-growth strings in
/// lexicographic order. The first item is the top, the last the bottom.
pub fn enumerate_clusterings(n: usize) -> Result<SetPartitions> {
    enumerate_clusterings_capped(n, ENUMERATION_CAP)
}

pub fn enumerate_clusterings_capped(n: usize, cap: usize) -> Result<SetPartitions> {
    if n == 0 {
        return Err(Error::InvalidInput(
            "cannot enumerate partitions of zero points".into(),
        ));
    }
    if n > cap {
        return Err(Error::EnumerationCap { n, cap });
    }
    Ok(SetPartitions {
        rgs: vec![0; n],
        done: false,
    })
}

/// Iterator over restricted-growth strings `a` with `a[0] = 0` and
/// `a[i] <= 1 + max(a[..i])`.
#[derive(Clone, Debug)]
pub struct SetPartitions {
    rgs: Vec<usize>,
    done: bool,
}

impl SetPartitions {
    fn advance(&mut self) {
        let n = self.rgs.len();
        // Rightmost position that can still grow.
        for i in (1..n).rev() {
            let prefix_max = self.rgs[..i].iter().copied().max().unwrap_or(0);
            if self.rgs[i] <= prefix_max {
                self.rgs[i] += 1;
                self.rgs[i + 1..].iter_mut().for_each(|x| *x = 0);
                return;
            }
        }
        self.done = true;
    }
}

impl Iterator for SetPartitions {
    type Item = Clustering;

    fn next(&mut self) -> Option<Clustering> {
        if self.done {
            return None;
        }
        let out = Clustering::from_labels(&self.rgs).expect("nonempty");
        self.advance();
        Some(out)
    }
}
