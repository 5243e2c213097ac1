use std::collections::BTreeMap;

use super::{eta_prime, PartitionSpec};
use crate::error::{Error, Result};
use crate::grover::{amplitude_closed_form, SearchParams};

/// How the marked set sits across a cut: `p` distinct left-block patterns,
/// `q` distinct right-block patterns, and the concurrence of the target
/// state `|t>` itself.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MultiTargetSplit {
    p: u64,
    q: u64,
    r: u64,
    target_concurrence: f64,
}

impl MultiTargetSplit {
    pub fn new(p: u64, q: u64, r: u64, target_concurrence: f64) -> Result<Self> {
        if p == 0 || q == 0 || p > r || q > r || (p as u128) * (q as u128) < r as u128 {
            return Err(Error::InconsistentSplit { p, q, r });
        }
        Ok(MultiTargetSplit {
            p,
            q,
            r,
            target_concurrence,
        })
    }

    /// Derives `p`, `q` and `C(|t>)` from an explicit marked set.
    ///
    /// `|t>` is `r^{-1/2} sum_m |L_m>|R_m>`, so its left reduced density is
    /// `B B^T / r` for the 0/1 incidence matrix `B` between left and right
    /// patterns, and the purity is `sum_{i,j} |R_i cap R_j|^2 / r^2` in exact
    /// integer arithmetic.
    pub fn from_marked(params: &SearchParams, spec: &PartitionSpec) -> Result<Self> {
        spec.check_against(params)?;
        let marked = params.marked().ok_or(Error::MarkedSetUnavailable)?;
        let shift = spec.right();
        let mask = (1u64 << shift) - 1;
        let mut rows: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
        let mut right_patterns: Vec<u64> = Vec::with_capacity(marked.len());
        for &m in marked {
            rows.entry(m >> shift).or_default().push(m & mask);
            right_patterns.push(m & mask);
        }
        right_patterns.sort_unstable();
        right_patterns.dedup();

        let r = marked.len() as u128;
        let rows: Vec<Vec<u64>> = rows.into_values().collect();
        let mut overlap_sq: u128 = 0;
        for a in &rows {
            for b in &rows {
                let shared = intersection_size(a, b) as u128;
                overlap_sq += shared * shared;
            }
        }
        let deficit = r * r - overlap_sq;
        let target_concurrence = (2.0 * deficit as f64).sqrt() / r as f64;
        Self::new(
            rows.len() as u64,
            right_patterns.len() as u64,
            marked.len() as u64,
            target_concurrence,
        )
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn target_concurrence(&self) -> f64 {
        self.target_concurrence
    }
}

/// Both slices are sorted (marked indices are sorted, so per-row right
/// patterns come out sorted too).
fn intersection_size(a: &[u64], b: &[u64]) -> usize {
    let (mut i, mut j, mut n) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                n += 1;
                i += 1;
                j += 1;
            }
        }
    }
    n
}

/// Which exponent of `tan theta` the byproduct term uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ByproductForm {
    /// `A_k^2 - B_k^2 tan^2 theta`: zero at `k = 0`, one at the target.
    Corrected,
    /// `A_k^2 - B_k^2 tan theta`, as printed in the original derivation.
    Literal,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MultiTargetConcurrence {
    /// `2 eta' |A_k - B_k tan theta| B_k`, entanglement made by the search.
    pub search: f64,
    /// Part inherited from an entangled target.
    pub byproduct: f64,
    /// `sqrt(search^2 + byproduct^2)`.
    pub total: f64,
}

/// Concurrence of `|S_k>` with `r` marked items, split into the search and
/// byproduct terms. First quadrant only.
pub fn multi_target_concurrence(
    k: u64,
    params: &SearchParams,
    split: &MultiTargetSplit,
    spec: &PartitionSpec,
    form: ByproductForm,
) -> Result<MultiTargetConcurrence> {
    params.check_first_quadrant(k)?;
    spec.check_against(params)?;
    if split.r != params.targets() {
        return Err(Error::InconsistentSplit {
            p: split.p,
            q: split.q,
            r: params.targets(),
        });
    }
    let eta = eta_prime(spec, split.p, split.q, split.r)?;
    let s = amplitude_closed_form(k, params);
    let tan = params.tan_theta();
    let gap = (2.0 * k as f64 * params.theta()).sin() / params.theta().cos();
    let search = 2.0 * eta * gap.abs() * s.b.abs();
    let tan_power = match form {
        ByproductForm::Corrected => tan * tan,
        ByproductForm::Literal => tan,
    };
    let byproduct = (s.a * s.a - s.b * s.b * tan_power).abs() * split.target_concurrence;
    Ok(MultiTargetConcurrence {
        search,
        byproduct,
        total: search.hypot(byproduct),
    })
}
