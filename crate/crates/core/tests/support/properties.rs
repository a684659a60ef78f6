//! Exhaustive property checks returning human-readable violations.

use cellkit::cells::{enhanced_descent_set, induction_check, left_cells, right_cells, CellPartition};
use cellkit::coxeter::INFINITE;
use cellkit::tau::{in_d_r, standard_pairs, star, string_decomposition, tilde};
use cellkit::{CoxeterSystem, Element, GenSet, KlTable};

fn dihedral_pairs(g: &CoxeterSystem) -> Vec<(usize, usize, u32)> {
    let n = g.rank();
    let mut out = Vec::new();
    for s in 0..n {
        for t in s + 1..n {
            let m = g.matrix().get(s, t);
            if m != 2 && m != INFINITE {
                out.push((s, t, m));
            }
        }
    }
    out
}

/// Checks that `image` maps every left cell onto a left cell, preserving
/// right cells pointwise, on the part of `W` where it is defined.
fn maps_cells(
    name: &str,
    g: &CoxeterSystem,
    left: &CellPartition,
    right: &CellPartition,
    image: impl Fn(Element) -> Option<Element>,
    out: &mut Vec<String>,
) {
    for block in left.blocks() {
        let mapped: Option<Vec<Element>> = block.iter().map(|&w| image(w)).collect();
        let Some(mut mapped) = mapped else {
            if block.iter().any(|&w| image(w).is_some()) {
                out.push(format!("{name}: domain splits the left cell of {}", g.format_word(block[0])));
            }
            continue;
        };
        for (&w, &x) in block.iter().zip(&mapped) {
            if !right.same_block(w, x) {
                out.push(format!("{name}: {} and its image are not right-equivalent", g.format_word(w)));
            }
        }
        mapped.sort_unstable();
        if left.blocks()[left.block_of(mapped[0])] != mapped {
            out.push(format!("{name}: image of the left cell of {} is not a left cell", g.format_word(block[0])));
        }
    }
}

pub fn cell_invariants(table: &KlTable) -> Vec<String> {
    let g = table.group();
    let wf = table.weights();
    let left = left_cells(table);
    let right = right_cells(table);
    let mut out = Vec::new();

    for block in left.blocks() {
        let r = g.right_descents(block[0]);
        let rpi = enhanced_descent_set(g, wf, block[0]);
        for &w in block {
            if g.right_descents(w) != r {
                out.push(format!("R not constant on the left cell of {}", g.format_word(block[0])));
            }
            if enhanced_descent_set(g, wf, w) != rpi {
                out.push(format!("R^pi not constant on the left cell of {}", g.format_word(block[0])));
            }
        }
    }

    for s in 0..g.rank() {
        for t in s + 1..g.rank() {
            let subset: GenSet = [s, t].into_iter().collect();
            let report = induction_check(table, &left, subset);
            out.extend(report.violations.into_iter().map(|v| format!("induction {subset:?}: {v}")));
        }
    }

    for (s, t, m) in dihedral_pairs(g) {
        let dom = |w: Element| in_d_r(g, w, s, t);
        if m == 3 {
            maps_cells("star", g, &left, &right, |w| dom(w).then(|| star(g, w, s, t).unwrap()), &mut out);
        }
        if wf.get(s) != wf.get(t) {
            continue;
        }
        maps_cells("tilde", g, &left, &right, |w| dom(w).then(|| tilde(g, wf, w, s, t).unwrap()), &mut out);
        for coset in string_decomposition(g, s, t).unwrap() {
            for string in [&coset.s_string, &coset.t_string] {
                if string.iter().any(|&w| !right.same_block(w, string[0])) {
                    out.push(format!("string of {} is not inside one right cell", g.format_word(string[0])));
                }
            }
        }
    }
    out
}

/// Verifies every pair of `Delta_{>=3} ∪ Delta_pi` and checks the properties
/// of the extended maps on `W`.
pub fn admissibility(table: &KlTable) -> Vec<String> {
    let g = table.group();
    let left = left_cells(table);
    let right = right_cells(table);
    let mut out = Vec::new();
    for mut pair in standard_pairs(g, table.weights()) {
        let (s, t) = pair.generators();
        let report = pair.verify(table.weights(), true);
        if !report.passed() {
            out.push(format!("pair (s{}, s{}): {:?}", s + 1, t + 1, report.failures(g)));
            continue;
        }
        let ext = pair.extend(g).unwrap();
        maps_cells(&format!("delta~ (s{}, s{})", s + 1, t + 1), g, &left, &right, |w| Some(ext[w]), &mut out);
    }
    out
}
