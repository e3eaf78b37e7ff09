//! Polynomial weight systems for the weighted identities.
//!
//! `WeightsLambda` carries one weight per bracket slot.  `WeightsMu`
//! carries one weight per unordered block of slot labels: a function on a
//! symmetric group `S_m` that is symmetric within the first `k` and the
//! last `m - k` arguments is exactly a function of the set of the first
//! `k` values, so it is stored as a table over the `k`-subsets of
//! `{1..m}`.

use std::collections::BTreeMap;

use itertools::Itertools;
use num_traits::Zero;

use crate::error::NambuError;
use crate::scalar::{Point, Polynomial, Rational};

/// Per-slot weights `lambda_1..lambda_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightsLambda {
    lambdas: Vec<Polynomial>,
}

impl WeightsLambda {
    pub fn new(lambdas: Vec<Polynomial>) -> Result<Self, NambuError> {
        if lambdas.is_empty() {
            return Err(NambuError::InvalidWeights("empty weight list".into()));
        }
        let dim = lambdas[0].dim();
        for l in &lambdas {
            NambuError::check_dim(dim, l.dim())?;
        }
        Ok(WeightsLambda { lambdas })
    }

    /// `n` copies of the constant weight 1.
    pub fn uniform(dim: usize, n: usize) -> Self {
        WeightsLambda {
            lambdas: vec![Polynomial::one(dim); n.max(1)],
        }
    }

    pub fn len(&self) -> usize {
        self.lambdas.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn dim(&self) -> usize {
        self.lambdas[0].dim()
    }

    /// 0-based slot access.
    pub fn get(&self, i: usize) -> &Polynomial {
        &self.lambdas[i]
    }

    pub fn as_slice(&self) -> &[Polynomial] {
        &self.lambdas
    }

    /// The average `(lambda_1 + ... + lambda_n) / n`.
    pub fn average(&self) -> Polynomial {
        let mut sum = Polynomial::zero(self.dim());
        for l in &self.lambdas {
            sum = &sum + l;
        }
        let n = Rational::from_integer((self.lambdas.len() as i64).into());
        sum.scale(&(Rational::from_integer(1.into()) / n))
    }

    /// True when all weights vanish identically.
    pub fn is_zero(&self) -> bool {
        self.lambdas.iter().all(|l| l.is_zero())
    }

    /// True when at each sample point at least one weight is nonzero.
    pub fn nondegenerate_at(&self, points: &[Point]) -> Result<bool, NambuError> {
        for p in points {
            let mut any = false;
            for l in &self.lambdas {
                if !l.eval(p)?.is_zero() {
                    any = true;
                    break;
                }
            }
            if !any {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Block weights: one polynomial per `block`-subset of `{1..m}`, read as
/// the weight of every permutation whose first `block` values form that
/// subset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightsMu {
    dim: usize,
    m: usize,
    block: usize,
    table: BTreeMap<Vec<usize>, Polynomial>,
}

impl WeightsMu {
    /// Builds a table; every `block`-subset of `{1..m}` must appear
    /// exactly once (keys are ascending label lists).
    pub fn new(
        dim: usize,
        m: usize,
        block: usize,
        entries: Vec<(Vec<usize>, Polynomial)>,
    ) -> Result<Self, NambuError> {
        if block > m {
            return Err(NambuError::InvalidWeights(format!(
                "block size {block} exceeds the label count {m}"
            )));
        }
        let mut table = BTreeMap::new();
        for (subset, w) in entries {
            if subset.len() != block
                || subset.iter().any(|&v| v == 0 || v > m)
                || subset.windows(2).any(|w| w[0] >= w[1])
            {
                return Err(NambuError::InvalidWeights(format!(
                    "key {subset:?} is not an ascending {block}-subset of 1..={m}"
                )));
            }
            NambuError::check_dim(dim, w.dim())?;
            if table.insert(subset.clone(), w).is_some() {
                return Err(NambuError::InvalidWeights(format!(
                    "key {subset:?} appears twice"
                )));
            }
        }
        let expected = (1..=m).combinations(block).count();
        if table.len() != expected {
            return Err(NambuError::InvalidWeights(format!(
                "expected {expected} weight entries, found {}",
                table.len()
            )));
        }
        Ok(WeightsMu { dim, m, block, table })
    }

    /// The constant weight 1 on every block.
    pub fn uniform(dim: usize, m: usize, block: usize) -> Result<Self, NambuError> {
        let entries = (1..=m)
            .combinations(block)
            .map(|s| (s, Polynomial::one(dim)))
            .collect();
        WeightsMu::new(dim, m, block, entries)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of permutation slots `m`.
    pub fn labels(&self) -> usize {
        self.m
    }

    /// Size of the symmetric first block.
    pub fn block(&self) -> usize {
        self.block
    }

    /// Weight of the ascending subset `key`.
    pub fn get(&self, key: &[usize]) -> Result<&Polynomial, NambuError> {
        self.table.get(key).ok_or_else(|| {
            NambuError::InvalidWeights(format!("no weight for block {key:?}"))
        })
    }

    /// (subset, weight) pairs in ascending key order.
    pub fn entries(&self) -> impl Iterator<Item = (&[usize], &Polynomial)> {
        self.table.iter().map(|(k, v)| (k.as_slice(), v))
    }
}

/// Restricts weights on `m` labels to the sub-sum of permutations whose
/// last slot is pinned to the label `k`, relabelling the remaining labels
/// order-preservingly onto `{1..m-1}`.  Appending `k` at the end of a
/// permutation of the remaining labels costs the sign `(-1)^(m-k)`, which
/// is folded into the returned weights.
pub fn pinned_slice_weights(mu: &WeightsMu, k: usize) -> Result<WeightsMu, NambuError> {
    let m = mu.labels();
    if k == 0 || k > m {
        return Err(NambuError::IndexOutOfRange { index: k, dim: m });
    }
    if mu.block() + 1 > m {
        return Err(NambuError::InvalidWeights(
            "cannot pin a slot: the block fills the whole tuple".into(),
        ));
    }
    let negate = (m - k) % 2 == 1;
    let mut entries = Vec::new();
    for (subset, w) in mu.entries() {
        if subset.contains(&k) {
            continue;
        }
        let relabelled: Vec<usize> = subset
            .iter()
            .map(|&v| if v > k { v - 1 } else { v })
            .collect();
        let weight = if negate { -w } else { w.clone() };
        entries.push((relabelled, weight));
    }
    WeightsMu::new(mu.dim(), m - 1, mu.block(), entries)
}

/// For arity 3 (weights on `m = 4` labels with block size 2), rewrites
/// block weights into the three per-slot weights
/// `lambda_1 = mu_{12} + mu_{34}`, `lambda_2 = mu_{13} + mu_{24}`,
/// `lambda_3 = mu_{14} + mu_{23}`, and reports whether the rewrite is
/// degenerate (all three identically zero, i.e. the weights are odd under
/// the block swap pairing each subset with its complement).
pub fn gapi_weights_to_fai_weights(
    mu: &WeightsMu,
) -> Result<(WeightsLambda, bool), NambuError> {
    if mu.labels() != 4 || mu.block() != 2 {
        return Err(NambuError::UnsupportedArity {
            n: mu.labels(),
            context: "weight rewrite (needs 4 labels in blocks of 2)",
        });
    }
    let pair = |a: &[usize], b: &[usize]| -> Result<Polynomial, NambuError> {
        Ok(mu.get(a)? + mu.get(b)?)
    };
    let lambdas = vec![
        pair(&[1, 2], &[3, 4])?,
        pair(&[1, 3], &[2, 4])?,
        pair(&[1, 4], &[2, 3])?,
    ];
    let degenerate = lambdas.iter().all(|l| l.is_zero());
    Ok((WeightsLambda::new(lambdas)?, degenerate))
}
