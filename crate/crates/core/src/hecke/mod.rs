//! Kazhdan–Lusztig polynomials for a Hecke algebra with positive weights.
//!
//! `C'_w = sum_y p_{y,w} T_y`, computed by increasing length from
//! `C'_w = C'_s C'_{sw} - sum_{z: sz<z<sw} M^s_{z,sw} C'_z`. The polynomials
//! `M^s_{z,y}` (for `sz < z < y < sy`) are the bar-invariant solutions of
//!
//! ```text
//! M^s_{z,y} = v^{p_s} p_{z,y} - sum_{z < z' < y, sz' < z'} p_{z,z'} M^s_{z',y}   (mod v^-1 Z[v^-1])
//! ```
//!
//! obtained top-down in `z` by symmetric completion.

mod tbasis;

use std::sync::Arc;

use rayon::prelude::*;
use thiserror::Error;

use crate::coxeter::{CoxeterMatrix, CoxeterSystem, Element};
use crate::laurent::LaurentPoly;

pub use tbasis::{t_left_mul, t_mult, t_product, BarOracle, TVector};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HeckeError {
    #[error("expected {expected} weights, got {got}")]
    WrongWeightCount { expected: usize, got: usize },
    #[error("weight of s{generator} must be positive, got {weight}")]
    NonPositiveWeight { generator: usize, weight: i64 },
    #[error("weight of s{generator} is {weight}, above the supported maximum {MAX_WEIGHT}")]
    WeightOutOfRange { generator: usize, weight: i64 },
    #[error("s{s} and s{t} are conjugate but have weights {ps} and {pt}")]
    ConjugacyViolation { s: usize, t: usize, ps: i64, pt: i64 },
    #[error("M^s_(z,y) needs sz < z < y < sy: {0}")]
    PreconditionViolated(String),
}

/// Exponents stay far inside i32 for any realistic group below this.
pub const MAX_WEIGHT: i64 = 1_000_000;

/// Positive integer weights `p_s`, constant on conjugacy classes of generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightFunction {
    weights: Vec<i32>,
}

impl WeightFunction {
    /// Validates raw weights against the Coxeter matrix. Generator numbers in
    /// errors are 1-based.
    pub fn new(matrix: &CoxeterMatrix, raw: &[i64]) -> Result<Self, HeckeError> {
        let n = matrix.rank();
        if raw.len() != n {
            return Err(HeckeError::WrongWeightCount { expected: n, got: raw.len() });
        }
        for (s, &w) in raw.iter().enumerate() {
            if w <= 0 {
                return Err(HeckeError::NonPositiveWeight { generator: s + 1, weight: w });
            }
            if w > MAX_WEIGHT {
                return Err(HeckeError::WeightOutOfRange { generator: s + 1, weight: w });
            }
        }
        let comp = matrix.odd_components();
        for s in 0..n {
            for t in s + 1..n {
                if comp[s] == comp[t] && raw[s] != raw[t] {
                    return Err(HeckeError::ConjugacyViolation {
                        s: s + 1,
                        t: t + 1,
                        ps: raw[s],
                        pt: raw[t],
                    });
                }
            }
        }
        Ok(Self {
            weights: raw.iter().map(|&w| w as i32).collect(),
        })
    }

    pub fn equal(rank: usize) -> Self {
        Self { weights: vec![1; rank] }
    }

    pub fn get(&self, s: usize) -> i32 {
        self.weights[s]
    }

    pub fn as_slice(&self) -> &[i32] {
        &self.weights
    }

    pub fn is_equal_parameter(&self) -> bool {
        self.weights.windows(2).all(|w| w[0] == w[1])
    }

    /// Weights of a parabolic subgroup, in the order of `gens`.
    pub fn restrict(&self, gens: &[usize]) -> Self {
        Self {
            weights: gens.iter().map(|&s| self.weights[s]).collect(),
        }
    }

    /// `p_w`, the sum of weights along a reduced word.
    pub fn of_element(&self, group: &CoxeterSystem, w: Element) -> i64 {
        group.word(w).iter().map(|&s| self.weights[s as usize] as i64).sum()
    }
}

/// Which left descent drives the recursion for `C'_w`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum DescentChoice {
    #[default]
    Smallest,
    Largest,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct KlOptions {
    /// Worker threads; `None` uses the global rayon pool.
    pub jobs: Option<usize>,
    pub descent: DescentChoice,
}

type Column = Vec<(u32, LaurentPoly)>;

/// Frozen table of `p_{y,w}` and `M^s_{z,y}`.
pub struct KlTable {
    group: Arc<CoxeterSystem>,
    weights: WeightFunction,
    /// `p[w]`: pairs `(y, p_{y,w})` with nonzero value, sorted by `y`.
    p: Vec<Column>,
    /// `m[y * rank + s]`: pairs `(z, M^s_{z,y})` for `sy > y`, sorted by `z`.
    m: Vec<Column>,
}

impl KlTable {
    pub fn compute(group: Arc<CoxeterSystem>, weights: WeightFunction) -> Self {
        Self::compute_with(group, weights, KlOptions::default())
    }

    pub fn compute_with(group: Arc<CoxeterSystem>, weights: WeightFunction, options: KlOptions) -> Self {
        assert_eq!(weights.as_slice().len(), group.rank(), "weight count must match rank");
        match options.jobs {
            Some(j) => rayon::ThreadPoolBuilder::new()
                .num_threads(j.max(1))
                .build()
                .expect("thread pool")
                .install(|| Self::build(group, weights, options.descent)),
            None => Self::build(group, weights, options.descent),
        }
    }

    fn build(group: Arc<CoxeterSystem>, weights: WeightFunction, descent: DescentChoice) -> Self {
        let size = group.order();
        let n = group.rank();
        let mut table = KlTable {
            group: group.clone(),
            weights,
            p: vec![Vec::new(); size],
            m: vec![Vec::new(); size * n],
        };
        // Ids are sorted by length, so each length is a contiguous range.
        let mut level_start = 0;
        while level_start < size {
            let len = group.length(level_start);
            let mut level_end = level_start;
            while level_end < size && group.length(level_end) == len {
                level_end += 1;
            }
            let columns: Vec<Column> =
                (level_start..level_end).into_par_iter().map(|w| table.compute_p_column(w, descent)).collect();
            for (w, col) in (level_start..level_end).zip(columns) {
                table.p[w] = col;
            }
            let m_columns: Vec<Vec<(usize, Column)>> = (level_start..level_end)
                .into_par_iter()
                .map(|y| {
                    (0..n)
                        .filter(|&s| group.lmul(s, y) > y)
                        .map(|s| (s, table.compute_m_column(s, y)))
                        .collect()
                })
                .collect();
            for (y, cols) in (level_start..level_end).zip(m_columns) {
                for (s, col) in cols {
                    table.m[y * n + s] = col;
                }
            }
            level_start = level_end;
        }
        table
    }

    fn compute_p_column(&self, w: Element, descent: DescentChoice) -> Column {
        let g = &*self.group;
        if w == 0 {
            return vec![(0, LaurentPoly::one())];
        }
        let ld = g.left_descents(w);
        let s = match descent {
            DescentChoice::Smallest => ld.iter().next(),
            DescentChoice::Largest => ld.iter().last(),
        }
        .expect("non-identity element has a left descent");
        let y = g.lmul(s, w);
        let ps = self.weights.get(s);
        let mut dense = vec![LaurentPoly::zero(); g.order()];
        let mut touched: Vec<usize> = Vec::new();
        let mut touch = |dense: &mut Vec<LaurentPoly>, x: usize, c: &LaurentPoly, k: i32, neg: bool| {
            if dense[x].is_zero() {
                touched.push(x);
            }
            dense[x].add_shifted(c, k, neg);
        };
        // (T_s + v^-p) T_x = T_sx + v^p T_x if sx < x, T_sx + v^-p T_x otherwise.
        for (x, c) in &self.p[y] {
            let x = *x as usize;
            let sx = g.lmul(s, x);
            touch(&mut dense, sx, c, 0, false);
            touch(&mut dense, x, c, if sx < x { ps } else { -ps }, false);
        }
        for (z, mz) in &self.m[y * g.rank() + s] {
            for (x, c) in &self.p[*z as usize] {
                let prod = mz * c;
                touch(&mut dense, *x as usize, &prod, 0, true);
            }
        }
        touched.sort_unstable();
        touched.dedup();
        touched
            .into_iter()
            .filter_map(|x| {
                let c = std::mem::take(&mut dense[x]);
                (!c.is_zero()).then_some((x as u32, c))
            })
            .collect()
    }

    fn compute_m_column(&self, s: usize, y: Element) -> Column {
        let g = &*self.group;
        let ps = self.weights.get(s);
        let below: Vec<Element> = g.bruhat_lower(y).collect();
        let mut found: Vec<(u32, LaurentPoly)> = Vec::new();
        for &z in below.iter().rev() {
            if z == y || !g.left_descents(z).contains(s) {
                continue;
            }
            let mut q = self.p_ref(z, y).map(|c| c.shift(ps).nonneg_part()).unwrap_or_default();
            for (zp, mp) in &found {
                if let Some(pzz) = self.p_ref(z, *zp as usize) {
                    q.add_shifted(&pzz.mul_truncated(mp, 0), 0, true);
                }
            }
            let mz = q.symmetric_completion();
            if !mz.is_zero() {
                found.push((z as u32, mz));
            }
        }
        found.reverse();
        found
    }

    pub fn group(&self) -> &Arc<CoxeterSystem> {
        &self.group
    }

    pub fn weights(&self) -> &WeightFunction {
        &self.weights
    }

    fn p_ref(&self, y: Element, w: Element) -> Option<&LaurentPoly> {
        let col = &self.p[w];
        col.binary_search_by_key(&(y as u32), |(x, _)| *x).ok().map(|i| &col[i].1)
    }

    /// `p_{y,w}`, the coefficient of `T_y` in `C'_w`.
    pub fn p(&self, y: Element, w: Element) -> LaurentPoly {
        self.p_ref(y, w).cloned().unwrap_or_default()
    }

    /// Nonzero `(y, p_{y,w})`, sorted by `y`.
    pub fn p_column(&self, w: Element) -> &[(u32, LaurentPoly)] {
        &self.p[w]
    }

    /// `C'_w` in T-coordinates.
    pub fn c_prime(&self, w: Element) -> TVector {
        self.p[w].iter().map(|(y, c)| (*y as usize, c.clone())).collect()
    }

    /// Nonzero `(z, M^s_{z,y})` for `sy > y`, sorted by `z`; empty when `sy < y`.
    pub fn m_column(&self, s: usize, y: Element) -> &[(u32, LaurentPoly)] {
        &self.m[y * self.group.rank() + s]
    }

    pub fn m_poly(&self, s: usize, z: Element, y: Element) -> Result<LaurentPoly, HeckeError> {
        let g = &*self.group;
        let ok = s < g.rank() && g.lmul(s, z) < z && z < y && g.bruhat_leq(z, y) && g.lmul(s, y) > y;
        if !ok {
            return Err(HeckeError::PreconditionViolated(format!(
                "s=s{}, z={}, y={}",
                s + 1,
                g.format_word(z),
                g.format_word(y)
            )));
        }
        let col = self.m_column(s, y);
        Ok(col
            .binary_search_by_key(&(z as u32), |(x, _)| *x)
            .map(|i| col[i].1.clone())
            .unwrap_or_default())
    }

    /// All nonzero `h_{s,y,x}`, i.e. the expansion of `C'_s C'_y` in the
    /// C'-basis, sorted by `x`.
    pub fn h_left(&self, s: usize, y: Element) -> Vec<(Element, LaurentPoly)> {
        let g = &*self.group;
        let sy = g.lmul(s, y);
        if sy < y {
            return vec![(y, LaurentPoly::symmetric_pair(self.weights.get(s)))];
        }
        let mut out: Vec<(Element, LaurentPoly)> =
            self.m_column(s, y).iter().map(|(z, c)| (*z as usize, c.clone())).collect();
        out.push((sy, LaurentPoly::one()));
        out.sort_by_key(|(x, _)| *x);
        out
    }

    /// Rewrites a T-basis vector in the C'-basis by unitriangular elimination.
    pub fn to_c_basis(&self, t: &TVector) -> TVector {
        let mut rest = t.clone();
        let mut out = TVector::new();
        while let Some((&x, c)) = rest.iter().next_back() {
            let c = c.clone();
            for (y, py) in &self.p[x] {
                let e = rest.entry(*y as usize).or_default();
                *e -= &(&c * py);
                if e.is_zero() {
                    rest.remove(&(*y as usize));
                }
            }
            out.insert(x, c);
        }
        out
    }
}
