//! Left, right and two-sided cells.
//!
//! `x <-_L y` whenever `C'_x` occurs in some `C'_s C'_y`; the left preorder
//! is its transitive closure and left cells are its strongly connected
//! components. Right cells come from `x <=_R y <=> x^-1 <=_L y^-1`, and
//! two-sided cells from the union of both relations.

mod induction;
mod module;

use petgraph::algo::tarjan_scc;
use petgraph::graph::{DiGraph, NodeIndex};
use thiserror::Error;

use crate::coxeter::{CoxeterSystem, Element, GenSet};
use crate::hecke::{KlTable, WeightFunction};

pub use induction::{induction_check, InductionReport};
pub use module::{CellModule, LaurentMatrix};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CellError {
    #[error("subset is not closed with respect to the left preorder")]
    NotClosed,
    #[error("cell modules need a left-cell partition")]
    NotLeftPartition,
    #[error("basis lists an element twice")]
    DuplicateBasis,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CellSide {
    Left,
    Right,
    TwoSided,
}

impl CellSide {
    pub fn name(self) -> &'static str {
        match self {
            CellSide::Left => "left",
            CellSide::Right => "right",
            CellSide::TwoSided => "two-sided",
        }
    }
}

/// A partition of `W` into cells together with the induced partial order
/// on cells. Cells are numbered by their minimal element.
#[derive(Debug, Clone)]
pub struct CellPartition {
    side: CellSide,
    blocks: Vec<Vec<Element>>,
    block_of: Vec<usize>,
    /// `below[b]`: bitset of cells `c` with `c <= b`.
    below: Vec<Vec<u64>>,
}

/// `edges[y]` lists every `x != y` with `x <-_L y`.
fn left_edges(table: &KlTable) -> Vec<Vec<Element>> {
    let g = table.group();
    g.elements()
        .map(|y| {
            let mut out: Vec<Element> = (0..g.rank())
                .flat_map(|s| table.h_left(s, y).into_iter().map(|(x, _)| x))
                .filter(|&x| x != y)
                .collect();
            out.sort_unstable();
            out.dedup();
            out
        })
        .collect()
}

fn invert_edges(group: &CoxeterSystem, edges: &[Vec<Element>]) -> Vec<Vec<Element>> {
    let mut out = vec![Vec::new(); edges.len()];
    for (y, xs) in edges.iter().enumerate() {
        out[group.inverse(y)] = xs.iter().map(|&x| group.inverse(x)).collect();
    }
    out
}

pub fn left_cells(table: &KlTable) -> CellPartition {
    CellPartition::from_edges(CellSide::Left, &left_edges(table))
}

pub fn right_cells(table: &KlTable) -> CellPartition {
    CellPartition::from_edges(CellSide::Right, &invert_edges(table.group(), &left_edges(table)))
}

pub fn two_sided_cells(table: &KlTable) -> CellPartition {
    let left = left_edges(table);
    let right = invert_edges(table.group(), &left);
    let both: Vec<Vec<Element>> = left
        .into_iter()
        .zip(right)
        .map(|(mut a, b)| {
            a.extend(b);
            a.sort_unstable();
            a.dedup();
            a
        })
        .collect();
    CellPartition::from_edges(CellSide::TwoSided, &both)
}

fn set_bit(bits: &mut [u64], i: usize) {
    bits[i / 64] |= 1 << (i % 64);
}

fn get_bit(bits: &[u64], i: usize) -> bool {
    bits[i / 64] >> (i % 64) & 1 == 1
}

impl CellPartition {
    /// Builds the partition from `edges[y] = {x : x <= y}` (one step).
    pub fn from_edges(side: CellSide, edges: &[Vec<Element>]) -> Self {
        let size = edges.len();
        let mut graph: DiGraph<(), ()> = DiGraph::with_capacity(size, 0);
        for _ in 0..size {
            graph.add_node(());
        }
        for (y, xs) in edges.iter().enumerate() {
            for &x in xs {
                graph.add_edge(NodeIndex::new(y), NodeIndex::new(x), ());
            }
        }
        // Reverse topological order: targets of edges come first.
        let sccs = tarjan_scc(&graph);
        let k = sccs.len();
        let mut scc_of = vec![0usize; size];
        for (i, comp) in sccs.iter().enumerate() {
            for v in comp {
                scc_of[v.index()] = i;
            }
        }
        let words = k.div_ceil(64);
        let mut below_raw: Vec<Vec<u64>> = Vec::with_capacity(k);
        for (i, comp) in sccs.iter().enumerate() {
            let mut bits = vec![0u64; words];
            set_bit(&mut bits, i);
            for v in comp {
                for &x in &edges[v.index()] {
                    let j = scc_of[x];
                    if j != i {
                        for (b, o) in bits.iter_mut().zip(&below_raw[j]) {
                            *b |= o;
                        }
                    }
                }
            }
            below_raw.push(bits);
        }

        let mut order: Vec<usize> = (0..k).collect();
        let min_of: Vec<usize> = sccs.iter().map(|c| c.iter().map(|v| v.index()).min().unwrap()).collect();
        order.sort_by_key(|&i| min_of[i]);
        let mut canon = vec![0usize; k];
        for (new, &old) in order.iter().enumerate() {
            canon[old] = new;
        }
        let blocks: Vec<Vec<Element>> = order
            .iter()
            .map(|&old| {
                let mut b: Vec<Element> = sccs[old].iter().map(|v| v.index()).collect();
                b.sort_unstable();
                b
            })
            .collect();
        let block_of = scc_of.iter().map(|&i| canon[i]).collect();
        let below = order
            .iter()
            .map(|&old| {
                let mut bits = vec![0u64; words];
                for (j, &c) in canon.iter().enumerate().take(k) {
                    if get_bit(&below_raw[old], j) {
                        set_bit(&mut bits, c);
                    }
                }
                bits
            })
            .collect();
        Self {
            side,
            blocks,
            block_of,
            below,
        }
    }

    pub fn side(&self) -> CellSide {
        self.side
    }

    pub fn blocks(&self) -> &[Vec<Element>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn block_of(&self, w: Element) -> usize {
        self.block_of[w]
    }

    pub fn same_block(&self, x: Element, y: Element) -> bool {
        self.block_of[x] == self.block_of[y]
    }

    /// Cell `a` lies below cell `b` in the induced order.
    pub fn block_leq(&self, a: usize, b: usize) -> bool {
        get_bit(&self.below[b], a)
    }

    /// The preorder on elements.
    pub fn leq(&self, x: Element, y: Element) -> bool {
        self.block_leq(self.block_of[x], self.block_of[y])
    }

    /// Direct successors in the Hasse diagram of the cell order, as
    /// `(lower, upper)` pairs.
    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        let k = self.len();
        let mut out = Vec::new();
        for b in 0..k {
            for a in 0..k {
                if a == b || !self.block_leq(a, b) {
                    continue;
                }
                let covered = (0..k).any(|c| c != a && c != b && self.block_leq(a, c) && self.block_leq(c, b));
                if !covered {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Every block of `self` is contained in a block of `coarser`.
    pub fn refines(&self, coarser: &CellPartition) -> bool {
        self.blocks.iter().all(|b| b.iter().all(|&x| coarser.same_block(x, b[0])))
    }

    /// Closedness of `gamma` under the preorder: `{z : x <= z <= y}` stays in
    /// `gamma` for all `x, y` in it.
    pub fn is_closed(&self, gamma: &[Element]) -> bool {
        if gamma.is_empty() {
            return false;
        }
        let mut member = vec![false; self.block_of.len()];
        for &w in gamma {
            member[w] = true;
        }
        let mut in_gamma = vec![false; self.len()];
        for &w in gamma {
            in_gamma[self.block_of[w]] = true;
        }
        // Union of blocks.
        for (b, block) in self.blocks.iter().enumerate() {
            if in_gamma[b] && !block.iter().all(|&x| member[x]) {
                return false;
            }
        }
        let inside: Vec<usize> = (0..self.len()).filter(|&b| in_gamma[b]).collect();
        for c in (0..self.len()).filter(|&c| !in_gamma[c]) {
            let above_some = inside.iter().any(|&a| self.block_leq(a, c));
            let below_some = inside.iter().any(|&b| self.block_leq(c, b));
            if above_some && below_some {
                return false;
            }
        }
        true
    }
}

/// `R(w) = {s : ws < w}`.
pub fn right_descent_set(group: &CoxeterSystem, w: Element) -> GenSet {
    group.right_descents(w)
}

/// `R(w)` together with the pairs `(s, t)` with `st != ts`, `p_s < p_t` and
/// `w sts < w`. Pairs are recorded rather than the element `sts`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EnhancedDescentSet {
    pub generators: GenSet,
    pub pairs: Vec<(usize, usize)>,
}

pub fn enhanced_descent_set(group: &CoxeterSystem, weights: &WeightFunction, w: Element) -> EnhancedDescentSet {
    let n = group.rank();
    let mut pairs = Vec::new();
    for s in 0..n {
        for t in 0..n {
            if s == t || group.matrix().get(s, t) == 2 || weights.get(s) >= weights.get(t) {
                continue;
            }
            let x = group.rmul(group.rmul(group.rmul(w, s), t), s);
            if group.length(x) < group.length(w) {
                pairs.push((s, t));
            }
        }
    }
    EnhancedDescentSet {
        generators: group.right_descents(w),
        pairs,
    }
}
