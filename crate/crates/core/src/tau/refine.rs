use std::collections::HashMap;
use std::hash::Hash;

use rayon::prelude::*;

use crate::cells::enhanced_descent_set;
use crate::coxeter::{CoxeterSystem, Element};
use crate::hecke::WeightFunction;

use super::admissible::{AdmissiblePair, PairKind};
use super::strings::t_operator;
use super::TauError;

/// The relation `Lambda_I` on `W_I` used for the initial colouring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LambdaConvention {
    /// Equal enhanced right descent sets `R^pi`.
    #[default]
    EnhancedDescent,
    /// Same left cell of `W_I`.
    StrictLeftCell,
}

impl LambdaConvention {
    pub fn name(self) -> &'static str {
        match self {
            LambdaConvention::EnhancedDescent => "r-pi",
            LambdaConvention::StrictLeftCell => "left-cell",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TauVariant {
    Vogan,
    Delta(LambdaConvention),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairSummary {
    pub kind: PairKind,
    pub s: usize,
    pub t: usize,
}

/// Fixpoint of a refinement. `history[n]` holds the class id of every
/// element after round `n`; the last entry is the stable partition.
#[derive(Debug, Clone)]
pub struct TauPartition {
    variant: TauVariant,
    pairs: Vec<PairSummary>,
    history: Vec<Vec<usize>>,
    classes: Vec<Vec<Element>>,
}

impl TauPartition {
    fn new(variant: TauVariant, pairs: Vec<PairSummary>, history: Vec<Vec<usize>>) -> Self {
        let last = history.last().expect("at least the initial round");
        let count = last.iter().max().map_or(0, |&c| c + 1);
        let mut classes = vec![Vec::new(); count];
        for (w, &c) in last.iter().enumerate() {
            classes[c].push(w);
        }
        Self {
            variant,
            pairs,
            history,
            classes,
        }
    }

    pub fn variant(&self) -> TauVariant {
        self.variant
    }

    pub fn pairs(&self) -> &[PairSummary] {
        &self.pairs
    }

    /// Classes numbered by their minimal element.
    pub fn classes(&self) -> &[Vec<Element>] {
        &self.classes
    }

    pub fn class_of(&self, w: Element) -> usize {
        self.history.last().unwrap()[w]
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Number of rounds after which the partition no longer changes.
    pub fn rounds(&self) -> usize {
        self.history.len() - 1
    }

    pub fn round(&self, n: usize) -> &[usize] {
        &self.history[n.min(self.rounds())]
    }

    pub fn class_counts(&self) -> Vec<usize> {
        self.history.iter().map(|h| h.iter().max().map_or(0, |&c| c + 1)).collect()
    }

    /// First round at which `y` and `w` lie in different classes.
    pub fn separation_round(&self, y: Element, w: Element) -> Option<usize> {
        self.history.iter().position(|h| h[y] != h[w])
    }
}

/// Numbers keys by first occurrence.
fn canonical<K: Hash + Eq>(keys: impl IntoIterator<Item = K>) -> Vec<usize> {
    let mut ids = HashMap::new();
    keys.into_iter()
        .map(|k| {
            let next = ids.len();
            *ids.entry(k).or_insert(next)
        })
        .collect()
}

fn refine<F>(initial: Vec<usize>, signature: F) -> Vec<Vec<usize>>
where
    F: Fn(Element, &[usize]) -> Vec<usize> + Sync,
{
    let mut history = vec![initial];
    loop {
        let cur = history.last().unwrap();
        let count = cur.iter().max().map_or(0, |&c| c + 1);
        let keys: Vec<(usize, Vec<usize>)> = (0..cur.len()).into_par_iter().map(|w| (cur[w], signature(w, cur))).collect();
        let next = canonical(keys);
        if next.iter().max().map_or(0, |&c| c + 1) == count {
            return history;
        }
        history.push(next);
    }
}

/// Vogan's generalised tau-invariant: start from `R(w)` and refine by the
/// class multisets of `T_{s,t}(w)` over all pairs with `m_st` in `{3, 4}`.
pub fn vogan_tau_partition(group: &CoxeterSystem, weights: &WeightFunction) -> Result<TauPartition, TauError> {
    if !weights.is_equal_parameter() {
        return Err(TauError::UnequalWeights);
    }
    let n = group.rank();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|s| (s + 1..n).map(move |t| (s, t)))
        .filter(|&(s, t)| matches!(group.matrix().get(s, t), 3 | 4))
        .collect();
    let images: Vec<Vec<Option<[Element; 2]>>> = pairs
        .iter()
        .map(|&(s, t)| group.elements().map(|w| t_operator(group, w, s, t).ok()).collect())
        .collect();
    let initial = canonical(group.elements().map(|w| group.right_descents(w)));
    let history = refine(initial, |w, class| {
        let mut sig = Vec::with_capacity(2 * images.len());
        for image in &images {
            match image[w] {
                Some([a, b]) => {
                    let (x, y) = (class[a], class[b]);
                    sig.extend([x.min(y), x.max(y)]);
                }
                None => sig.extend([usize::MAX, usize::MAX]),
            }
        }
        sig
    });
    let summaries = pairs
        .into_iter()
        .map(|(s, t)| PairSummary {
            kind: PairKind::TOperator,
            s,
            t,
        })
        .collect();
    Ok(TauPartition::new(TauVariant::Vogan, summaries, history))
}

/// The generalised `tau~^Delta`-invariant: start from the tuple of
/// `Lambda_I`-classes of `pr_I(w)` and refine by the maps `delta~`.
pub fn tau_delta_partition(
    group: &CoxeterSystem,
    weights: &WeightFunction,
    pairs: &[AdmissiblePair],
    lambda: LambdaConvention,
) -> Result<TauPartition, TauError> {
    let mut labels = Vec::with_capacity(pairs.len());
    let mut maps = Vec::with_capacity(pairs.len());
    for pair in pairs {
        maps.push(pair.extend(group)?);
        let para = pair.parabolic();
        let sub = para.group().expect("I has two elements");
        let per_sub: Vec<usize> = match lambda {
            LambdaConvention::EnhancedDescent => {
                let sub_weights = weights.restrict(para.generators());
                canonical(sub.elements().map(|u| enhanced_descent_set(sub, &sub_weights, u)))
            }
            LambdaConvention::StrictLeftCell => {
                let left = pair.sub_left_cells().expect("verified pairs carry their cells");
                sub.elements().map(|u| left.block_of(u)).collect()
            }
        };
        labels.push(
            group
                .elements()
                .map(|w| {
                    let (_, u) = group.parabolic_decompose(w, para.subset());
                    per_sub[para.restrict(u).expect("pr_I lands in W_I")]
                })
                .collect::<Vec<usize>>(),
        );
    }
    let initial = canonical(group.elements().map(|w| labels.iter().map(|l| l[w]).collect::<Vec<_>>()));
    let history = refine(initial, |w, class| maps.iter().map(|d| class[d[w]]).collect());
    let summaries = pairs
        .iter()
        .map(|p| {
            let (s, t) = p.generators();
            PairSummary { kind: p.kind(), s, t }
        })
        .collect();
    Ok(TauPartition::new(TauVariant::Delta(lambda), summaries, history))
}
