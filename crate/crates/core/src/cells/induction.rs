use std::sync::Arc;

use crate::coxeter::GenSet;
use crate::hecke::KlTable;

use super::{left_cells, CellPartition};

/// Outcome of checking induction of left cells from `W_I` to `W`.
#[derive(Debug, Clone)]
pub struct InductionReport {
    pub subset: GenSet,
    pub violations: Vec<String>,
}

impl InductionReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks, for every left cell of `W`, that `pr_I` maps it into a single
/// left cell of `W_I`, and that each `X_I Gamma'` is a union of left cells.
pub fn induction_check(table: &KlTable, left: &CellPartition, subset: GenSet) -> InductionReport {
    let g = table.group();
    let para = g.parabolic_subgroup(subset);
    let mut violations = Vec::new();
    let Some(sub) = para.group() else {
        return InductionReport { subset, violations };
    };
    let sub_table = KlTable::compute(Arc::clone(sub), table.weights().restrict(para.generators()));
    let sub_left = left_cells(&sub_table);
    let sub_cell: Vec<usize> = g
        .elements()
        .map(|w| {
            let (_, u) = g.parabolic_decompose(w, subset);
            sub_left.block_of(para.restrict(u).expect("pr_I lands in W_I"))
        })
        .collect();

    for block in left.blocks() {
        let first = sub_cell[block[0]];
        if let Some(&w) = block.iter().find(|&&w| sub_cell[w] != first) {
            violations.push(format!(
                "{} ~L {} but their W_I-components lie in different left cells",
                g.format_word(block[0]),
                g.format_word(w)
            ));
        }
    }
    for c in 0..sub_left.len() {
        for block in left.blocks() {
            let inside = block.iter().filter(|&&w| sub_cell[w] == c).count();
            if inside != 0 && inside != block.len() {
                violations.push(format!(
                    "X_I Gamma' for sub-cell {c} splits the left cell of {}",
                    g.format_word(block[0])
                ));
            }
        }
    }
    InductionReport { subset, violations }
}
