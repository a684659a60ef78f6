use std::sync::Arc;

use crate::cells::{left_cells, right_cells, CellModule, CellPartition};
use crate::coxeter::{CoxeterSystem, Element, GenSet, Parabolic};
use crate::hecke::{KlTable, WeightFunction};

use super::strings::{alternating, pair_order};
use super::TauError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairKind {
    /// `p_s = p_t`, `delta(1_k) = 1_{m-k}`, `delta(2_k) = 2_{m-k}`.
    GeqThree,
    /// `p_s < p_t`, `m` even.
    Pi,
    Custom,
    /// Not a delta pair: the `T_{s,t}` refinement step of the Vogan variant.
    TOperator,
}

impl PairKind {
    pub fn name(self) -> &'static str {
        match self {
            PairKind::GeqThree => "geq3",
            PairKind::Pi => "pi",
            PairKind::Custom => "custom",
            PairKind::TOperator => "t-operator",
        }
    }
}

/// A rank-2 parabolic subgroup `W_I`, `I = {s, t}`, with a map
/// `delta: W_I -> W_I` and the outcome of its verification.
#[derive(Debug, Clone)]
pub struct AdmissiblePair {
    kind: PairKind,
    s: usize,
    t: usize,
    parabolic: Parabolic,
    /// Indexed and valued by subgroup ids.
    delta: Vec<Element>,
    admissible: bool,
    strongly_admissible: bool,
    sub_left: Option<CellPartition>,
}

impl AdmissiblePair {
    pub fn delta_geq3(group: &CoxeterSystem, weights: &WeightFunction, s: usize, t: usize) -> Result<Self, TauError> {
        let m = pair_order(group, s, t)?;
        if weights.get(s) != weights.get(t) {
            return Err(TauError::WrongWeights { s, t });
        }
        let mut pairs = Vec::new();
        for k in 1..m {
            pairs.push((alternating(group, 0, s, t, k), alternating(group, 0, s, t, m - k)));
            pairs.push((alternating(group, 0, t, s, k), alternating(group, 0, t, s, m - k)));
        }
        Self::from_images(group, PairKind::GeqThree, s, t, &pairs)
    }

    /// The pair is reoriented so that `s` is the lighter generator.
    pub fn delta_pi(group: &CoxeterSystem, weights: &WeightFunction, s: usize, t: usize) -> Result<Self, TauError> {
        let m = pair_order(group, s, t)?;
        if weights.get(s) == weights.get(t) {
            return Err(TauError::WrongWeights { s, t });
        }
        if m % 2 == 1 || m < 4 {
            return Err(TauError::WrongOrder { expected: "even and at least 4", m });
        }
        let (s, t) = if weights.get(s) < weights.get(t) { (s, t) } else { (t, s) };
        let one = |k| alternating(group, 0, s, t, k);
        let two = |k| alternating(group, 0, t, s, k);
        let mut pairs = Vec::new();
        for k in 1..=m - 2 {
            let (a, b) = if k % 2 == 1 { (two(k), two(k + 1)) } else { (one(k), one(k + 1)) };
            pairs.push((a, b));
            pairs.push((b, a));
        }
        Self::from_images(group, PairKind::Pi, s, t, &pairs)
    }

    /// An arbitrary map on `W_{s,t}` given by parent elements; unlisted
    /// elements are fixed.
    pub fn custom(group: &CoxeterSystem, s: usize, t: usize, images: &[(Element, Element)]) -> Result<Self, TauError> {
        pair_order(group, s, t)?;
        Self::from_images(group, PairKind::Custom, s, t, images)
    }

    fn from_images(group: &CoxeterSystem, kind: PairKind, s: usize, t: usize, images: &[(Element, Element)]) -> Result<Self, TauError> {
        let subset: GenSet = [s, t].into_iter().collect();
        let parabolic = group.parabolic_subgroup(subset);
        let mut delta: Vec<Element> = (0..parabolic.order()).collect();
        for &(from, to) in images {
            let (Some(a), Some(b)) = (parabolic.restrict(from), parabolic.restrict(to)) else {
                return Err(TauError::InvalidDelta(format!(
                    "{} -> {} leaves W_I",
                    group.format_word(from),
                    group.format_word(to)
                )));
            };
            delta[a] = b;
        }
        Ok(Self {
            kind,
            s,
            t,
            parabolic,
            delta,
            admissible: false,
            strongly_admissible: false,
            sub_left: None,
        })
    }

    pub fn kind(&self) -> PairKind {
        self.kind
    }

    /// `(s, t)`; for `Pi` pairs `s` is the lighter generator.
    pub fn generators(&self) -> (usize, usize) {
        (self.s, self.t)
    }

    pub fn parabolic(&self) -> &Parabolic {
        &self.parabolic
    }

    pub fn is_admissible(&self) -> bool {
        self.admissible
    }

    pub fn is_strongly_admissible(&self) -> bool {
        self.strongly_admissible
    }

    /// `delta` on a parent element of `W_I`.
    pub fn apply(&self, u: Element) -> Option<Element> {
        let i = self.parabolic.restrict(u)?;
        Some(self.parabolic.embed(self.delta[i]))
    }

    /// `(u, delta(u))` for all `u` in `W_I`, as parent elements.
    pub fn table(&self) -> Vec<(Element, Element)> {
        (0..self.delta.len())
            .map(|i| (self.parabolic.embed(i), self.parabolic.embed(self.delta[i])))
            .collect()
    }

    /// Left cells of `W_I` for the restricted weights, once verified.
    pub fn sub_left_cells(&self) -> Option<&CellPartition> {
        self.sub_left.as_ref()
    }

    fn sub_group(&self) -> &Arc<CoxeterSystem> {
        self.parabolic.group().expect("I has two elements")
    }

    /// Checks the three admissibility conditions against the left and right
    /// cells of `W_I` (computed with `weights` restricted to `I`) and records
    /// the result on the pair.
    pub fn verify(&mut self, weights: &WeightFunction, strong: bool) -> AdmissibilityReport {
        let sub = Arc::clone(self.sub_group());
        let table = KlTable::compute(Arc::clone(&sub), weights.restrict(self.parabolic.generators()));
        let left = left_cells(&table);
        let right = right_cells(&table);
        let embed = |u: Element| self.parabolic.embed(u);

        let mut cells = Vec::new();
        for block in left.blocks() {
            let image: Vec<Element> = block.iter().map(|&u| self.delta[u]).collect();
            let mut sorted = image.clone();
            sorted.sort_unstable();
            let target = left.block_of(image[0]);
            let onto = sorted.windows(2).all(|w| w[0] != w[1]) && left.blocks()[target] == sorted;
            let iso = onto && {
                let a = CellModule::new(&table, &left, block).expect("left cells are closed");
                let b = CellModule::new(&table, &left, &image).expect("left cells are closed");
                (0..sub.rank()).all(|s| a.matrix(s) == b.matrix(s))
            };
            cells.push(CellVerdict {
                cell: block.iter().map(|&u| embed(u)).collect(),
                image: image.iter().map(|&u| embed(u)).collect(),
                bijective_onto_cell: onto,
                module_isomorphism: iso,
            });
        }
        let right_cell_failures = sub
            .elements()
            .filter(|&u| !right.same_block(u, self.delta[u]))
            .map(embed)
            .collect();

        let report = AdmissibilityReport {
            kind: self.kind,
            generators: (self.s, self.t),
            cells,
            right_cell_failures,
            strong_requested: strong,
        };
        self.admissible = report.condition1() && report.condition2();
        self.strongly_admissible = self.admissible && report.condition3();
        self.sub_left = Some(left);
        report
    }

    /// `delta~(w) = x delta(u)` for `w = xu` with `x` in `X_I`, on all of `W`.
    pub fn extend(&self, group: &CoxeterSystem) -> Result<Vec<Element>, TauError> {
        if !self.admissible {
            return Err(TauError::UnverifiedPair { s: self.s, t: self.t });
        }
        Ok(group
            .elements()
            .map(|w| {
                let (x, u) = group.parabolic_decompose(w, self.parabolic.subset());
                group.product(x, self.apply(u).expect("pr_I lands in W_I"))
            })
            .collect())
    }
}

/// Verdict for one left cell `Gamma'` of `W_I`. Elements are parent ids;
/// `image[i]` is `delta(cell[i])`.
#[derive(Debug, Clone)]
pub struct CellVerdict {
    pub cell: Vec<Element>,
    pub image: Vec<Element>,
    pub bijective_onto_cell: bool,
    pub module_isomorphism: bool,
}

#[derive(Debug, Clone)]
pub struct AdmissibilityReport {
    pub kind: PairKind,
    pub generators: (usize, usize),
    pub cells: Vec<CellVerdict>,
    /// Elements `u` with `u` and `delta(u)` in different right cells.
    pub right_cell_failures: Vec<Element>,
    pub strong_requested: bool,
}

impl AdmissibilityReport {
    pub fn condition1(&self) -> bool {
        self.cells.iter().all(|c| c.bijective_onto_cell)
    }

    pub fn condition2(&self) -> bool {
        self.cells.iter().all(|c| c.module_isomorphism)
    }

    pub fn condition3(&self) -> bool {
        self.right_cell_failures.is_empty()
    }

    pub fn admissible(&self) -> bool {
        self.condition1() && self.condition2()
    }

    pub fn passed(&self) -> bool {
        self.admissible() && (!self.strong_requested || self.condition3())
    }

    /// Human-readable list of failed conditions.
    pub fn failures(&self, group: &CoxeterSystem) -> Vec<String> {
        let mut out = Vec::new();
        for c in &self.cells {
            let cell: Vec<String> = c.cell.iter().map(|&w| group.format_word(w)).collect();
            if !c.bijective_onto_cell {
                out.push(format!("condition 1: delta is not a bijection of {{{}}} onto a left cell", cell.join(", ")));
            } else if !c.module_isomorphism {
                out.push(format!("condition 2: delta does not induce a module isomorphism on {{{}}}", cell.join(", ")));
            }
        }
        if self.strong_requested {
            for &u in &self.right_cell_failures {
                out.push(format!("condition 3: {} and its image lie in different right cells", group.format_word(u)));
            }
        }
        out
    }
}
