//! Arithmetic in the standard basis `{T_w}`, and the bar involution as an
//! independent certificate for the canonical basis.

use std::collections::BTreeMap;

use crate::coxeter::{CoxeterSystem, Element};
use crate::laurent::LaurentPoly;

use super::WeightFunction;

/// A finitely supported element of the Hecke algebra in T-coordinates.
pub type TVector = BTreeMap<Element, LaurentPoly>;

fn accumulate(out: &mut TVector, x: Element, c: &LaurentPoly, shift: i32) {
    let e = out.entry(x).or_default();
    e.add_shifted(c, shift, false);
    if e.is_zero() {
        out.remove(&x);
    }
}

/// `T_s T_w`.
pub fn t_mult(group: &CoxeterSystem, weights: &WeightFunction, s: usize, w: Element) -> TVector {
    let sw = group.lmul(s, w);
    let mut out = TVector::new();
    out.insert(sw, LaurentPoly::one());
    if sw < w {
        let p = weights.get(s);
        out.insert(w, LaurentPoly::monomial(1, p) - LaurentPoly::monomial(1, -p));
    }
    out
}

/// `T_s * h` for a T-basis vector `h`.
pub fn t_left_mul(group: &CoxeterSystem, weights: &WeightFunction, s: usize, h: &TVector) -> TVector {
    let p = weights.get(s);
    let mut out = TVector::new();
    for (&w, c) in h {
        let sw = group.lmul(s, w);
        accumulate(&mut out, sw, c, 0);
        if sw < w {
            accumulate(&mut out, w, c, p);
            accumulate(&mut out, w, &-c, -p);
        }
    }
    out
}

/// `a * b` for T-basis vectors.
pub fn t_product(group: &CoxeterSystem, weights: &WeightFunction, a: &TVector, b: &TVector) -> TVector {
    let mut out = TVector::new();
    for (&x, c) in a {
        // T_x b = T_{s_1} (T_{s_2} ( ... (T_{s_k} b)))
        let mut tb = b.clone();
        for &s in group.word(x).iter().rev() {
            tb = t_left_mul(group, weights, s as usize, &tb);
        }
        for (y, d) in &tb {
            accumulate(&mut out, *y, &(c * d), 0);
        }
    }
    out
}

/// The ring involution with `v -> v^-1` and `T_w -> T_{w^-1}^-1`.
///
/// Images `bar(T_x)` are tabulated lazily from
/// `bar(T_s) = T_s - (v^{p_s} - v^{-p_s})`.
pub struct BarOracle<'a> {
    group: &'a CoxeterSystem,
    weights: &'a WeightFunction,
    cache: Vec<Option<TVector>>,
}

impl<'a> BarOracle<'a> {
    pub fn new(group: &'a CoxeterSystem, weights: &'a WeightFunction) -> Self {
        Self {
            group,
            weights,
            cache: vec![None; group.order()],
        }
    }

    /// `bar(T_x)` in T-coordinates.
    pub fn bar_of_basis(&mut self, x: Element) -> &TVector {
        if self.cache[x].is_none() {
            let value = if x == 0 {
                TVector::from([(0, LaurentPoly::one())])
            } else {
                let s = self.group.word(x)[0] as usize;
                let rest = self.group.lmul(s, x);
                let tail = self.bar_of_basis(rest).clone();
                let p = self.weights.get(s);
                let mut out = t_left_mul(self.group, self.weights, s, &tail);
                let k = LaurentPoly::monomial(1, p) - LaurentPoly::monomial(1, -p);
                for (y, c) in &tail {
                    accumulate(&mut out, *y, &-(&k * c), 0);
                }
                out
            };
            self.cache[x] = Some(value);
        }
        self.cache[x].as_ref().unwrap()
    }

    pub fn apply(&mut self, h: &TVector) -> TVector {
        let mut out = TVector::new();
        for (&x, c) in h {
            let cb = c.bar();
            let img = self.bar_of_basis(x).clone();
            for (y, d) in &img {
                accumulate(&mut out, *y, &(&cb * d), 0);
            }
        }
        out
    }
}
