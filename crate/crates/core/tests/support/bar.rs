//! The bar involution on the T-basis, `bar(T_w) = T_{w^-1}^{-1}`, using only
//! the multiplication rule of the standard basis.

use std::collections::BTreeMap;

use cellkit::{CoxeterSystem, LaurentPoly, WeightFunction};

pub type TVec = BTreeMap<usize, LaurentPoly>;

fn push(out: &mut TVec, w: usize, c: LaurentPoly) {
    let e = out.entry(w).or_default();
    *e += &c;
    if e.is_zero() {
        out.remove(&w);
    }
}

/// `h * T_s` with `T_s^2 = 1 + (v^p - v^-p) T_s`.
fn times_t(g: &CoxeterSystem, wf: &WeightFunction, h: &TVec, s: usize) -> TVec {
    let p = wf.get(s);
    let gap = LaurentPoly::monomial(1, p) - LaurentPoly::monomial(1, -p);
    let mut out = TVec::new();
    for (&x, c) in h {
        let xs = g.rmul(x, s);
        push(&mut out, xs, c.clone());
        if g.length(xs) < g.length(x) {
            push(&mut out, x, c * &gap);
        }
    }
    out
}

/// `h * T_s^-1 = h * (T_s - (v^p - v^-p))`.
fn times_t_inverse(g: &CoxeterSystem, wf: &WeightFunction, h: &TVec, s: usize) -> TVec {
    let p = wf.get(s);
    let gap = LaurentPoly::monomial(1, p) - LaurentPoly::monomial(1, -p);
    let mut out = times_t(g, wf, h, s);
    for (&x, c) in h {
        push(&mut out, x, -(c * &gap));
    }
    out
}

pub fn bar(g: &CoxeterSystem, wf: &WeightFunction, h: &TVec) -> TVec {
    let mut out = TVec::new();
    for (&y, c) in h {
        let mut img = TVec::from([(0, c.bar())]);
        for &s in g.word(y) {
            img = times_t_inverse(g, wf, &img, s as usize);
        }
        for (x, d) in img {
            push(&mut out, x, d);
        }
    }
    out
}

/// Checks that every `C'_w` is fixed by the oracle and has the expected
/// degree bounds.
pub fn certify(name: &str, weights: &[i64]) {
    let t = super::table(name, weights);
    let g = t.group();
    let wf: &WeightFunction = t.weights();
    for w in g.elements() {
        let c = t.c_prime(w);
        assert_eq!(c.get(&w), Some(&LaurentPoly::one()));
        for (&y, p) in &c {
            assert!(y == w || p.degree().is_some_and(|d| d < 0), "{name}: degree of p_{{{y},{w}}}");
        }
        let image = bar(g, wf, &c.into_iter().collect());
        let back: TVec = t.c_prime(w).into_iter().collect();
        assert_eq!(image, back, "{name} {weights:?}: C'_{} is not bar-invariant", g.format_word(w));
    }
}
