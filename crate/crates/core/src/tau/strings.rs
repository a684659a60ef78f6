//! Strings in cosets of rank-2 parabolic subgroups and the operators built
//! on them.
//!
//! For `I = {s, t}` with `m = m_st >= 3`, each coset `x W_I` (with `x` the
//! minimal representative) splits into `{x}`, `{x w_I}` and the two strings
//! `(xs, xst, xsts, ...)` and `(xt, xts, xtst, ...)` of `m - 1` elements.
//! `D_R(s,t)` is exactly the union of all strings.

use crate::coxeter::{CoxeterSystem, Element, GenSet, INFINITE};
use crate::hecke::WeightFunction;

use super::TauError;

pub(crate) fn pair_order(group: &CoxeterSystem, s: usize, t: usize) -> Result<usize, TauError> {
    if s >= group.rank() || t >= group.rank() || s == t {
        return Err(TauError::NotAPair { s, t });
    }
    let m = group.matrix().get(s, t);
    if m == 2 || m == INFINITE {
        return Err(TauError::NotAPair { s, t });
    }
    Ok(m as usize)
}

/// `x * (a b a b ...)` with `k` factors.
pub(crate) fn alternating(group: &CoxeterSystem, x: Element, a: usize, b: usize, k: usize) -> Element {
    (0..k).fold(x, |acc, i| group.rmul(acc, if i % 2 == 0 { a } else { b }))
}

/// Membership in `D_R(s,t)`: exactly one of `s, t` is a right descent.
pub fn in_d_r(group: &CoxeterSystem, w: Element, s: usize, t: usize) -> bool {
    let r = group.right_descents(w);
    r.contains(s) != r.contains(t)
}

/// `T_{s,t}(w) = {ws, wt} ∩ D_R(s,t)` as a two-element multiset, sorted.
pub fn t_operator(group: &CoxeterSystem, w: Element, s: usize, t: usize) -> Result<[Element; 2], TauError> {
    pair_order(group, s, t)?;
    if !in_d_r(group, w, s, t) {
        return Err(TauError::NotInDomain);
    }
    let a = group.rmul(w, s);
    let b = group.rmul(w, t);
    Ok(match (in_d_r(group, a, s, t), in_d_r(group, b, s, t)) {
        (true, true) => [a.min(b), a.max(b)],
        (true, false) => [a, a],
        (false, true) => [b, b],
        (false, false) => unreachable!("a string of length >= 2 always continues"),
    })
}

/// The string containing `w` and the 1-based position of `w` in it.
pub fn string_of(group: &CoxeterSystem, w: Element, s: usize, t: usize) -> Result<(Vec<Element>, usize), TauError> {
    let m = pair_order(group, s, t)?;
    let subset: GenSet = [s, t].into_iter().collect();
    let (x, u) = group.parabolic_decompose(w, subset);
    let k = group.length(u);
    if k == 0 || k == m {
        return Err(TauError::NotInDomain);
    }
    let first = group.word(u)[0] as usize;
    let second = if first == s { t } else { s };
    let string = (1..m).map(|i| alternating(group, x, first, second, i)).collect();
    Ok((string, k))
}

/// `w*` for `m_st = 3`: the unique element of `T_{s,t}(w)`.
pub fn star(group: &CoxeterSystem, w: Element, s: usize, t: usize) -> Result<Element, TauError> {
    let m = pair_order(group, s, t)?;
    if m != 3 {
        return Err(TauError::WrongOrder { expected: "3", m });
    }
    let [a, b] = t_operator(group, w, s, t)?;
    debug_assert_eq!(a, b);
    Ok(a)
}

/// The element at position `m - i` of the string of `w`, where `w` sits at
/// position `i`. Requires `p_s = p_t`.
pub fn tilde(group: &CoxeterSystem, weights: &WeightFunction, w: Element, s: usize, t: usize) -> Result<Element, TauError> {
    let m = pair_order(group, s, t)?;
    if weights.get(s) != weights.get(t) {
        return Err(TauError::WrongWeights { s, t });
    }
    let (string, i) = string_of(group, w, s, t)?;
    Ok(string[m - i - 1])
}

/// The four parts of one coset `x W_I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetStrings {
    pub min: Element,
    pub max: Element,
    /// `(xs, xst, xsts, ...)`
    pub s_string: Vec<Element>,
    /// `(xt, xts, xtst, ...)`
    pub t_string: Vec<Element>,
}

/// All cosets of `W_{s,t}`, ordered by their minimal element.
pub fn string_decomposition(group: &CoxeterSystem, s: usize, t: usize) -> Result<Vec<CosetStrings>, TauError> {
    let m = pair_order(group, s, t)?;
    Ok(group
        .elements()
        .filter(|&x| !group.right_descents(x).contains(s) && !group.right_descents(x).contains(t))
        .map(|x| CosetStrings {
            min: x,
            max: alternating(group, x, s, t, m),
            s_string: (1..m).map(|i| alternating(group, x, s, t, i)).collect(),
            t_string: (1..m).map(|i| alternating(group, x, t, s, i)).collect(),
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::DEFAULT_CAP;

    fn group(name: &str) -> CoxeterSystem {
        CoxeterSystem::from_preset(name, DEFAULT_CAP).unwrap()
    }

    #[test]
    fn t_operator_examples() {
        let g = group("I2:3");
        let s = g.generator(0);
        let st = g.parse_word("s1 s2").unwrap();
        assert_eq!(t_operator(&g, s, 0, 1).unwrap(), [st, st]);
        assert_eq!(t_operator(&g, 0, 0, 1), Err(TauError::NotInDomain));

        // m = 4 inside B3 on {s2, s3}, with x' a minimal coset representative.
        let g = group("B3");
        let (s, t) = (1, 2);
        let xp = g.generator(0);
        let w = alternating(&g, xp, t, s, 2); // x' t s
        let mut expect = [alternating(&g, xp, t, s, 1), alternating(&g, xp, t, s, 3)];
        expect.sort();
        assert_eq!(t_operator(&g, w, s, t).unwrap(), expect);
        let w = g.rmul(xp, s); // x' s
        let xst = alternating(&g, xp, s, t, 2);
        assert_eq!(t_operator(&g, w, s, t).unwrap(), [xst, xst]);
        assert_eq!(t_operator(&g, w, 0, 2), Err(TauError::NotAPair { s: 0, t: 2 }));
    }

    #[test]
    fn string_examples() {
        let g = group("I2:3");
        let st = g.parse_word("s1 s2").unwrap();
        let (string, i) = string_of(&g, st, 0, 1).unwrap();
        assert_eq!(string, vec![g.generator(0), st]);
        assert_eq!(i, 2);

        let g = group("B3");
        let x = g.generator(0);
        let (string, i) = string_of(&g, g.rmul(x, 1), 1, 2).unwrap();
        assert_eq!(string, (1..4).map(|k| alternating(&g, x, 1, 2, k)).collect::<Vec<_>>());
        assert_eq!(i, 1);
        let (string, i) = string_of(&g, alternating(&g, x, 2, 1, 2), 1, 2).unwrap();
        assert_eq!(string, (1..4).map(|k| alternating(&g, x, 2, 1, k)).collect::<Vec<_>>());
        assert_eq!(i, 2);
    }

    #[test]
    fn star_examples() {
        let g = group("A2");
        let s = g.generator(0);
        let st = g.parse_word("s1 s2").unwrap();
        let ts = g.parse_word("s2 s1").unwrap();
        assert_eq!(star(&g, s, 0, 1).unwrap(), st);
        assert_eq!(star(&g, ts, 0, 1).unwrap(), g.generator(1));
        let b3 = group("B3");
        assert!(matches!(star(&b3, b3.generator(1), 1, 2), Err(TauError::WrongOrder { m: 4, .. })));
    }

    #[test]
    fn star_and_tilde_are_involutions() {
        let g = group("A3");
        let wf = WeightFunction::equal(3);
        for (s, t) in [(0, 1), (1, 2)] {
            for w in g.elements().filter(|&w| in_d_r(&g, w, s, t)) {
                let ws = star(&g, w, s, t).unwrap();
                assert!(in_d_r(&g, ws, s, t));
                assert_eq!(star(&g, ws, s, t).unwrap(), w);
                assert_eq!(tilde(&g, &wf, w, s, t).unwrap(), ws);
            }
        }
        let g = group("H3");
        let wf = WeightFunction::equal(3);
        for w in g.elements().filter(|&w| in_d_r(&g, w, 0, 1)) {
            assert_eq!(tilde(&g, &wf, tilde(&g, &wf, w, 0, 1).unwrap(), 0, 1).unwrap(), w);
        }
    }

    #[test]
    fn tilde_on_order_four_string() {
        let g = group("B3");
        let wf = WeightFunction::equal(3);
        let x = g.generator(0);
        let xs = g.rmul(x, 1);
        let xst = alternating(&g, x, 1, 2, 2);
        let xsts = alternating(&g, x, 1, 2, 3);
        assert_eq!(tilde(&g, &wf, xs, 1, 2).unwrap(), xsts);
        assert_eq!(tilde(&g, &wf, xst, 1, 2).unwrap(), xst);
        let unequal = WeightFunction::new(g.matrix(), &[1, 1, 2]).unwrap();
        assert_eq!(tilde(&g, &unequal, xs, 1, 2), Err(TauError::WrongWeights { s: 1, t: 2 }));
    }

    #[test]
    fn decomposition_partitions_the_group() {
        for name in ["B3", "H3", "A3"] {
            let g = group(name);
            let m = g.matrix().get(0, 1) as usize;
            let cosets = string_decomposition(&g, 0, 1).unwrap();
            let mut seen = vec![0u8; g.order()];
            for c in &cosets {
                assert_eq!(c.s_string.len(), m - 1);
                assert_eq!(c.t_string.len(), m - 1);
                seen[c.min] += 1;
                seen[c.max] += 1;
                for &w in c.s_string.iter().chain(&c.t_string) {
                    assert!(in_d_r(&g, w, 0, 1));
                    seen[w] += 1;
                    let (string, _) = string_of(&g, w, 0, 1).unwrap();
                    assert!(string == c.s_string || string == c.t_string);
                }
                assert!(!in_d_r(&g, c.min, 0, 1) && !in_d_r(&g, c.max, 0, 1));
            }
            assert!(seen.iter().all(|&k| k == 1));
        }
    }
}
