use std::collections::HashMap;

use rayon::prelude::*;

use crate::cells::{left_cells, two_sided_cells, CellPartition};
use crate::coxeter::{CoxeterSystem, Element, INFINITE};
use crate::hecke::{KlTable, WeightFunction};

use super::admissible::AdmissiblePair;
use super::refine::{tau_delta_partition, LambdaConvention, PairSummary, TauPartition};
use super::TauError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Holds => "HOLDS",
            Verdict::Fails => "FAILS",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessKind {
    /// Same two-sided cell and invariant, different left cells.
    NotSeparated,
    /// Same left cell, different invariants; `round` is the first round
    /// separating them.
    LeftCellSplit { round: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Witness {
    pub y: Element,
    pub w: Element,
    pub kind: WitnessKind,
}

#[derive(Debug, Clone)]
pub struct ConjectureReport {
    pub verdict: Verdict,
    pub pairs: Vec<PairSummary>,
    pub left_cells: usize,
    pub two_sided_cells: usize,
    pub tau_classes: usize,
    /// Classes of the common refinement of two-sided cells and the invariant.
    pub refined_classes: usize,
    pub rounds: usize,
    pub class_counts: Vec<usize>,
    pub witness: Option<Witness>,
}

/// `Delta_{>=3} ∪ Delta_pi` over all qualifying generator pairs, unverified.
pub fn standard_pairs(group: &CoxeterSystem, weights: &WeightFunction) -> Vec<AdmissiblePair> {
    let n = group.rank();
    let mut out = Vec::new();
    for s in 0..n {
        for t in s + 1..n {
            let m = group.matrix().get(s, t);
            if m == 2 || m == INFINITE {
                continue;
            }
            let pair = if weights.get(s) == weights.get(t) {
                AdmissiblePair::delta_geq3(group, weights, s, t)
            } else {
                AdmissiblePair::delta_pi(group, weights, s, t)
            };
            if let Ok(pair) = pair {
                out.push(pair);
            }
        }
    }
    out
}

/// Verifies every pair (strongly), in parallel.
pub fn verify_all(group: &CoxeterSystem, weights: &WeightFunction, pairs: &mut [AdmissiblePair]) -> Result<(), TauError> {
    let failures: Vec<TauError> = pairs
        .par_iter_mut()
        .filter_map(|pair| {
            let report = pair.verify(weights, true);
            (!report.passed()).then(|| {
                let (s, t) = pair.generators();
                TauError::NotAdmissible {
                    s,
                    t,
                    reason: report.failures(group).join("; "),
                }
            })
        })
        .collect();
    match failures.into_iter().next() {
        Some(e) => Err(e),
        None => Ok(()),
    }
}

pub fn conjecture_check(table: &KlTable, lambda: LambdaConvention) -> Result<ConjectureReport, TauError> {
    let left = left_cells(table);
    let two = two_sided_cells(table);
    conjecture_check_with(table.group(), table.weights(), &left, &two, lambda)
}

/// Compares left cells with the common refinement of two-sided cells and the
/// `tau~^Delta` partition for `Delta = Delta_{>=3} ∪ Delta_pi`.
pub fn conjecture_check_with(
    group: &CoxeterSystem,
    weights: &WeightFunction,
    left: &CellPartition,
    two_sided: &CellPartition,
    lambda: LambdaConvention,
) -> Result<ConjectureReport, TauError> {
    let mut pairs = standard_pairs(group, weights);
    verify_all(group, weights, &mut pairs)?;
    let tau = tau_delta_partition(group, weights, &pairs, lambda)?;
    let witness = find_witness(group, left, two_sided, &tau);

    let mut refined = HashMap::new();
    for w in group.elements() {
        let next = refined.len();
        refined.entry((two_sided.block_of(w), tau.class_of(w))).or_insert(next);
    }
    Ok(ConjectureReport {
        verdict: if witness.is_some() { Verdict::Fails } else { Verdict::Holds },
        pairs: tau.pairs().to_vec(),
        left_cells: left.len(),
        two_sided_cells: two_sided.len(),
        tau_classes: tau.len(),
        refined_classes: refined.len(),
        rounds: tau.rounds(),
        class_counts: tau.class_counts(),
        witness,
    })
}

fn find_witness(group: &CoxeterSystem, left: &CellPartition, two_sided: &CellPartition, tau: &TauPartition) -> Option<Witness> {
    for block in left.blocks() {
        if let Some(&w) = block.iter().find(|&&w| tau.class_of(w) != tau.class_of(block[0])) {
            let round = tau.separation_round(block[0], w).expect("different final classes");
            return Some(Witness {
                y: block[0],
                w,
                kind: WitnessKind::LeftCellSplit { round },
            });
        }
    }
    let mut first: HashMap<(usize, usize), Element> = HashMap::new();
    for w in group.elements() {
        let key = (two_sided.block_of(w), tau.class_of(w));
        match first.get(&key) {
            Some(&y) if !left.same_block(y, w) => {
                return Some(Witness {
                    y,
                    w,
                    kind: WitnessKind::NotSeparated,
                })
            }
            Some(_) => {}
            None => {
                first.insert(key, w);
            }
        }
    }
    None
}
