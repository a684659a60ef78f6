//! Finite Coxeter groups with interned elements.
//!
//! Elements are numbered `0..order` by `(length, ShortLex word)`, so element
//! `0` is the identity and ids increase with length. All multiplication by
//! generators is table lookup.

mod cyclotomic;
mod matrix;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use thiserror::Error;

use cyclotomic::CyclotomicRing;
pub use matrix::{CoxeterMatrix, INFINITE};

/// Element id inside one [`CoxeterSystem`].
pub type Element = usize;

/// Default bound on the number of enumerated elements.
pub const DEFAULT_CAP: usize = 20_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoxeterError {
    #[error("invalid Coxeter matrix: {0}")]
    InvalidMatrix(String),
    #[error("group has more than {cap} elements (infinite or too large)")]
    GroupTooLarge { cap: usize },
    #[error("unknown group preset {0:?}")]
    UnknownPreset(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// A subset of the generators, as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenSet(u64);

impl GenSet {
    pub const EMPTY: GenSet = GenSet(0);

    pub fn full(rank: usize) -> Self {
        if rank >= 64 {
            GenSet(u64::MAX)
        } else {
            GenSet((1u64 << rank) - 1)
        }
    }

    pub fn singleton(s: usize) -> Self {
        GenSet(1 << s)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, s: usize) -> bool {
        self.0 >> s & 1 == 1
    }

    pub fn insert(&mut self, s: usize) {
        self.0 |= 1 << s;
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn intersection(self, other: GenSet) -> GenSet {
        GenSet(self.0 & other.0)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |&s| self.contains(s))
    }
}

impl FromIterator<usize> for GenSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut g = GenSet::EMPTY;
        for s in iter {
            g.insert(s);
        }
        g
    }
}

impl fmt::Debug for GenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, s) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "s{}", s + 1)?;
        }
        f.write_str("}")
    }
}

pub struct CoxeterSystem {
    matrix: CoxeterMatrix,
    words: Vec<Vec<u8>>,
    lengths: Vec<u32>,
    rmul: Vec<u32>,
    lmul: Vec<u32>,
    inverse: Vec<u32>,
    right_descents: Vec<GenSet>,
    left_descents: Vec<GenSet>,
    bruhat: OnceLock<Vec<Vec<u64>>>,
}

impl fmt::Debug for CoxeterSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CoxeterSystem")
            .field("matrix", &self.matrix)
            .field("order", &self.order())
            .finish()
    }
}

impl CoxeterSystem {
    /// Enumerates the group by breadth-first search over the orbit of a
    /// point in the open fundamental chamber of the contragredient geometric
    /// representation, with exact cyclotomic coordinates.
    pub fn build(matrix: CoxeterMatrix, cap: usize) -> Result<Self, CoxeterError> {
        let n = matrix.rank();
        let cap = cap.max(1);
        let mut order = 2usize;
        for s in 0..n {
            for t in 0..n {
                let m = matrix.get(s, t);
                if s != t && m != INFINITE {
                    order = lcm(order, 2 * m as usize);
                }
            }
        }
        let ring = CyclotomicRing::new(order);
        let d = ring.degree();
        // coupling[s][t] = 2 B(alpha_s, alpha_t) = -2 cos(pi / m_st).
        let coupling: Vec<Vec<Vec<i64>>> = (0..n)
            .map(|s| {
                (0..n)
                    .map(|t| {
                        if s == t {
                            ring.constant(2)
                        } else {
                            let m = matrix.get(s, t);
                            let c = if m == INFINITE { ring.constant(2) } else { ring.two_cos(order / (2 * m as usize)) };
                            c.into_iter().map(|x| -x).collect()
                        }
                    })
                    .collect()
            })
            .collect();

        let too_large = CoxeterError::GroupTooLarge { cap };
        // key(w) = w^-1 . f0 where f0 pairs to 1 with every simple root;
        // key(ws) = s . key(w).
        let act = |s: usize, key: &[i64]| -> Option<Vec<i64>> {
            let fs = &key[s * d..(s + 1) * d];
            let mut out = key.to_vec();
            for t in 0..n {
                let prod = ring.mul(&coupling[s][t], fs)?;
                for k in 0..d {
                    out[t * d + k] = out[t * d + k].checked_sub(prod[k])?;
                }
            }
            Some(out)
        };

        let mut start = vec![0i64; n * d];
        for t in 0..n {
            start[t * d] = 1;
        }
        let mut index: HashMap<Vec<i64>, u32> = HashMap::new();
        index.insert(start.clone(), 0);
        let mut keys = vec![start];
        let mut words: Vec<Vec<u8>> = vec![Vec::new()];
        let mut lengths = vec![0u32];
        let mut rmul: Vec<u32> = Vec::new();
        let mut w = 0;
        while w < keys.len() {
            for s in 0..n {
                let next = act(s, &keys[w]).ok_or_else(|| too_large.clone())?;
                let id = match index.get(&next) {
                    Some(&id) => id,
                    None => {
                        if keys.len() >= cap {
                            return Err(too_large);
                        }
                        let id = keys.len() as u32;
                        index.insert(next.clone(), id);
                        keys.push(next);
                        let mut word = words[w].clone();
                        word.push(s as u8);
                        words.push(word);
                        lengths.push(lengths[w] + 1);
                        id
                    }
                };
                rmul.push(id);
            }
            w += 1;
        }
        drop(index);
        drop(keys);

        let size = words.len();
        let inverse: Vec<u32> = words
            .iter()
            .map(|word| word.iter().rev().fold(0u32, |acc, &s| rmul[acc as usize * n + s as usize]))
            .collect();
        let mut lmul = vec![0u32; size * n];
        for w in 0..size {
            for s in 0..n {
                let wi = inverse[w] as usize;
                lmul[w * n + s] = inverse[rmul[wi * n + s] as usize];
            }
        }
        let descents = |table: &[u32]| -> Vec<GenSet> {
            (0..size)
                .map(|w| (0..n).filter(|&s| lengths[table[w * n + s] as usize] < lengths[w]).collect())
                .collect()
        };
        let right_descents = descents(&rmul);
        let left_descents = descents(&lmul);
        Ok(Self {
            matrix,
            words,
            lengths,
            rmul,
            lmul,
            inverse,
            right_descents,
            left_descents,
            bruhat: OnceLock::new(),
        })
    }

    pub fn from_preset(name: &str, cap: usize) -> Result<Self, CoxeterError> {
        Self::build(CoxeterMatrix::preset(name)?, cap)
    }

    pub fn matrix(&self) -> &CoxeterMatrix {
        &self.matrix
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn order(&self) -> usize {
        self.words.len()
    }

    pub fn identity(&self) -> Element {
        0
    }

    pub fn elements(&self) -> std::ops::Range<Element> {
        0..self.order()
    }

    pub fn longest_element(&self) -> Element {
        self.order() - 1
    }

    /// The ShortLex-minimal reduced word, as generator indices.
    pub fn word(&self, w: Element) -> &[u8] {
        &self.words[w]
    }

    pub fn length(&self, w: Element) -> usize {
        self.lengths[w] as usize
    }

    pub fn max_length(&self) -> usize {
        self.length(self.longest_element())
    }

    /// `w * s`.
    pub fn rmul(&self, w: Element, s: usize) -> Element {
        self.rmul[w * self.rank() + s] as Element
    }

    /// `s * w`.
    pub fn lmul(&self, s: usize, w: Element) -> Element {
        self.lmul[w * self.rank() + s] as Element
    }

    pub fn inverse(&self, w: Element) -> Element {
        self.inverse[w] as Element
    }

    pub fn generator(&self, s: usize) -> Element {
        self.rmul(0, s)
    }

    /// `w * x`.
    pub fn product(&self, w: Element, x: Element) -> Element {
        self.words[x].iter().fold(w, |acc, &s| self.rmul(acc, s as usize))
    }

    /// Product of a word in the generators, which need not be reduced.
    pub fn element_from_word(&self, word: &[usize]) -> Element {
        word.iter().fold(0, |acc, &s| self.rmul(acc, s))
    }

    pub fn right_descents(&self, w: Element) -> GenSet {
        self.right_descents[w]
    }

    pub fn left_descents(&self, w: Element) -> GenSet {
        self.left_descents[w]
    }

    pub fn descents(&self, w: Element, side: Side) -> GenSet {
        match side {
            Side::Left => self.left_descents(w),
            Side::Right => self.right_descents(w),
        }
    }

    fn bruhat_table(&self) -> &Vec<Vec<u64>> {
        self.bruhat.get_or_init(|| {
            let size = self.order();
            let words = size.div_ceil(64);
            let mut table: Vec<Vec<u64>> = Vec::with_capacity(size);
            let mut e = vec![0u64; words];
            e[0] = 1;
            table.push(e);
            // [e, w] = [e, sw] u s[e, sw] whenever sw < w.
            for w in 1..size {
                let s = self.words[w][0] as usize;
                let y = self.lmul(s, w);
                let mut bits = table[y].clone();
                for (k, &chunk) in table[y].iter().enumerate() {
                    let mut c = chunk;
                    while c != 0 {
                        let z = k * 64 + c.trailing_zeros() as usize;
                        c &= c - 1;
                        let sz = self.lmul(s, z);
                        bits[sz / 64] |= 1 << (sz % 64);
                    }
                }
                table.push(bits);
            }
            table
        })
    }

    /// Bruhat order. The full relation is tabulated on first use.
    pub fn bruhat_leq(&self, x: Element, y: Element) -> bool {
        if x > y {
            return false;
        }
        self.bruhat_table()[y][x / 64] >> (x % 64) & 1 == 1
    }

    /// All `x <= y` in Bruhat order, in increasing id order.
    pub fn bruhat_lower(&self, y: Element) -> impl Iterator<Item = Element> + '_ {
        let bits = &self.bruhat_table()[y];
        bits.iter().enumerate().flat_map(|(k, &chunk)| {
            let mut c = chunk;
            std::iter::from_fn(move || {
                if c == 0 {
                    None
                } else {
                    let z = k * 64 + c.trailing_zeros() as usize;
                    c &= c - 1;
                    Some(z)
                }
            })
        })
    }

    /// Writes `w = x u` with `u` in the parabolic subgroup `W_I` and `x` the
    /// minimal coset representative, so `l(w) = l(x) + l(u)`.
    pub fn parabolic_decompose(&self, w: Element, subset: GenSet) -> (Element, Element) {
        let mut x = w;
        let mut stripped: Vec<usize> = Vec::new();
        loop {
            let desc = self.right_descents(x).intersection(subset);
            match desc.iter().next() {
                Some(s) => {
                    x = self.rmul(x, s);
                    stripped.push(s);
                }
                None => break,
            }
        }
        let u = stripped.iter().rev().fold(0, |acc, &s| self.rmul(acc, s));
        (x, u)
    }

    /// The parabolic subgroup generated by `subset`, as its own system.
    pub fn parabolic_subgroup(&self, subset: GenSet) -> Parabolic {
        let gens: Vec<usize> = subset.iter().filter(|&s| s < self.rank()).collect();
        let group = if gens.is_empty() {
            // The trivial group has no generators; model it with one dummy
            // generator and never use it.
            None
        } else {
            let sub = self.matrix.submatrix(&gens).expect("submatrix of a valid matrix is valid");
            Some(Arc::new(CoxeterSystem::build(sub, self.order()).expect("parabolic subgroup of a finite group is finite")))
        };
        let (to_parent, from_parent) = match &group {
            None => (vec![0], HashMap::from([(0, 0)])),
            Some(g) => {
                let to_parent: Vec<Element> =
                    g.elements().map(|u| g.word(u).iter().fold(0, |acc, &j| self.rmul(acc, gens[j as usize]))).collect();
                let from_parent = to_parent.iter().enumerate().map(|(u, &w)| (w, u)).collect();
                (to_parent, from_parent)
            }
        };
        Parabolic {
            subset,
            gens,
            group,
            to_parent,
            from_parent,
        }
    }

    /// `"e"` for the identity, otherwise the canonical word such as `"s1 s2 s1"`.
    pub fn format_word(&self, w: Element) -> String {
        if w == 0 {
            return "e".to_string();
        }
        self.words[w].iter().map(|s| format!("s{}", s + 1)).collect::<Vec<_>>().join(" ")
    }

    /// For rank-2 groups, the `1_k` / `2_k` labels (`1_k = s1 s2 s1 ...` with
    /// `k` factors); the longest element is labelled `2_m`.
    pub fn dihedral_label(&self, w: Element) -> Option<String> {
        if self.rank() != 2 {
            return None;
        }
        let k = self.length(w);
        if w == 0 {
            return Some("1_0".into());
        }
        if w == self.longest_element() && self.order() > 2 {
            return Some(format!("2_{k}"));
        }
        Some(format!("{}_{k}", self.words[w][0] + 1))
    }

    /// Parses `"e"` or a whitespace-separated word like `"s1 s2"`; the word
    /// need not be reduced.
    pub fn parse_word(&self, text: &str) -> Option<Element> {
        let text = text.trim();
        if text == "e" || text.is_empty() {
            return Some(0);
        }
        let mut letters = Vec::new();
        for tok in text.split(|c: char| c.is_whitespace() || c == '*' || c == ',') {
            if tok.is_empty() {
                continue;
            }
            let idx: usize = tok.strip_prefix('s')?.parse().ok()?;
            if idx == 0 || idx > self.rank() {
                return None;
            }
            letters.push(idx - 1);
        }
        Some(self.element_from_word(&letters))
    }
}

/// A parabolic subgroup `W_I` with element maps to and from the parent.
#[derive(Debug, Clone)]
pub struct Parabolic {
    subset: GenSet,
    gens: Vec<usize>,
    group: Option<Arc<CoxeterSystem>>,
    to_parent: Vec<Element>,
    from_parent: HashMap<Element, Element>,
}

impl Parabolic {
    pub fn subset(&self) -> GenSet {
        self.subset
    }

    /// Parent generator index for each generator of the subgroup.
    pub fn generators(&self) -> &[usize] {
        &self.gens
    }

    /// The subgroup as a standalone system; `None` when `I` is empty.
    pub fn group(&self) -> Option<&Arc<CoxeterSystem>> {
        self.group.as_ref()
    }

    pub fn order(&self) -> usize {
        self.to_parent.len()
    }

    pub fn embed(&self, u: Element) -> Element {
        self.to_parent[u]
    }

    /// Subgroup id of a parent element, if it lies in `W_I`.
    pub fn restrict(&self, w: Element) -> Option<Element> {
        self.from_parent.get(&w).copied()
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(name: &str) -> CoxeterSystem {
        CoxeterSystem::from_preset(name, DEFAULT_CAP).unwrap()
    }

    /// Dihedral group of order 2m as (rotation exponent, is_reflection), with
    /// s = (0, true), t = (1, true); independent of the enumeration.
    fn dihedral_mul(m: i64, a: (i64, bool), b: (i64, bool)) -> (i64, bool) {
        let r = if a.1 { a.0 - b.0 } else { a.0 + b.0 };
        (r.rem_euclid(m), a.1 ^ b.1)
    }

    fn dihedral_word(m: i64, word: &[u8]) -> (i64, bool) {
        word.iter().fold((0, false), |acc, &g| dihedral_mul(m, acc, (g as i64, true)))
    }

    #[test]
    fn orders_of_classified_types() {
        for (name, order) in [
            ("A1", 2),
            ("A3", 24),
            ("A4", 120),
            ("B2", 8),
            ("B3", 48),
            ("B4", 384),
            ("D4", 192),
            ("F4", 1152),
            ("G2", 12),
            ("H3", 120),
            ("I2:7", 14),
            ("I2:8", 16),
        ] {
            assert_eq!(group(name).order(), order, "{name}");
        }
    }

    #[test]
    fn infinite_dihedral_hits_cap() {
        let m = CoxeterMatrix::new(vec![vec![1, INFINITE], vec![INFINITE, 1]]).unwrap();
        assert_eq!(CoxeterSystem::build(m, 1000).unwrap_err(), CoxeterError::GroupTooLarge { cap: 1000 });
        let affine_a2 = CoxeterMatrix::from_edges(3, &[(0, 1, 3), (1, 2, 3), (0, 2, 3)]).unwrap();
        assert!(matches!(CoxeterSystem::build(affine_a2, 5000), Err(CoxeterError::GroupTooLarge { .. })));
    }

    #[test]
    fn dihedral_order_and_listing() {
        let w = group("I2:3");
        let names: Vec<String> = w.elements().map(|x| w.format_word(x)).collect();
        assert_eq!(names, ["e", "s1", "s2", "s1 s2", "s2 s1", "s1 s2 s1"]);
    }

    #[test]
    fn products_match_dihedral_oracle() {
        for m in 3..=8u32 {
            let w = group(&format!("I2:{m}"));
            for x in w.elements() {
                for y in w.elements() {
                    let z = w.product(x, y);
                    let lhs = dihedral_word(m as i64, w.word(z));
                    let rhs = dihedral_mul(m as i64, dihedral_word(m as i64, w.word(x)), dihedral_word(m as i64, w.word(y)));
                    assert_eq!(lhs, rhs);
                    assert!(w.length(z) <= w.length(x) + w.length(y));
                }
            }
        }
        let w = group("I2:4");
        let tst = w.element_from_word(&[1, 0, 1]);
        let sts = w.element_from_word(&[0, 1, 0]);
        // t s t . s t s = (ts)^3 = (ts)^-1 = st
        assert_eq!(w.format_word(w.product(tst, sts)), "s1 s2");
        assert_eq!(w.product(w.generator(0), w.generator(0)), 0);
        assert_eq!(w.product(tst, 0), tst);
    }

    #[test]
    fn tables_satisfy_coxeter_relations() {
        for name in ["B3", "H3", "D4", "A4"] {
            let w = group(name);
            let n = w.rank();
            for x in w.elements() {
                for s in 0..n {
                    assert_eq!(w.rmul(w.rmul(x, s), s), x);
                    assert_eq!(w.lmul(s, w.lmul(s, x)), x);
                    let d = w.length(w.rmul(x, s)) as i64 - w.length(x) as i64;
                    assert!(d == 1 || d == -1);
                    for t in 0..n {
                        if s == t {
                            continue;
                        }
                        let m = w.matrix().get(s, t) as usize;
                        let mut y = x;
                        for _ in 0..m {
                            y = w.rmul(w.rmul(y, s), t);
                        }
                        assert_eq!(y, x);
                    }
                }
            }
        }
    }

    #[test]
    fn descents_agree_with_words() {
        let w = group("B3");
        for x in w.elements() {
            let word = w.word(x);
            if let Some(&last) = word.last() {
                assert!(w.right_descents(x).contains(last as usize));
            }
            if let Some(&first) = word.first() {
                assert!(w.left_descents(x).contains(first as usize));
            }
            assert_eq!(w.left_descents(x), w.right_descents(w.inverse(x)));
        }
        let i24 = group("I2:4");
        let tst = i24.element_from_word(&[1, 0, 1]);
        assert_eq!(i24.descents(tst, Side::Right), GenSet::singleton(1));
        assert_eq!(i24.descents(0, Side::Right), GenSet::EMPTY);
        assert_eq!(i24.descents(i24.longest_element(), Side::Right), GenSet::full(2));
    }

    /// Subword criterion on the canonical reduced word.
    fn subword_lower_set(w: &CoxeterSystem, y: Element) -> Vec<bool> {
        let word = w.word(y);
        let mut below = vec![false; w.order()];
        for mask in 0u32..(1 << word.len()) {
            let sub: Vec<usize> = (0..word.len()).filter(|i| mask >> i & 1 == 1).map(|i| word[i] as usize).collect();
            below[w.element_from_word(&sub)] = true;
        }
        below
    }

    #[test]
    fn bruhat_matches_subword_criterion() {
        for name in ["I2:3", "I2:5", "A3", "B3"] {
            let w = group(name);
            for y in w.elements() {
                let oracle = subword_lower_set(&w, y);
                for x in w.elements() {
                    assert_eq!(w.bruhat_leq(x, y), oracle[x], "{name}: {x} <= {y}");
                }
                assert_eq!(w.bruhat_lower(y).count(), oracle.iter().filter(|b| **b).count());
            }
        }
        let w = group("I2:3");
        let st = w.element_from_word(&[0, 1]);
        let ts = w.element_from_word(&[1, 0]);
        let sts = w.element_from_word(&[0, 1, 0]);
        assert!(w.bruhat_leq(st, sts));
        assert!(!w.bruhat_leq(st, ts));
    }

    #[test]
    fn bruhat_is_graded_partial_order() {
        let w = group("A3");
        for x in w.elements() {
            assert!(w.bruhat_leq(0, x));
            assert!(w.bruhat_leq(x, x));
            for y in w.elements() {
                if w.bruhat_leq(x, y) {
                    assert!(w.length(x) < w.length(y) || x == y);
                    if x != y {
                        assert!(!w.bruhat_leq(y, x));
                    }
                    for z in w.elements() {
                        if w.bruhat_leq(y, z) {
                            assert!(w.bruhat_leq(x, z));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn parabolic_decomposition_is_a_length_additive_bijection() {
        let w = group("B3");
        let n = w.rank();
        for bits in 0u64..(1 << n) {
            let subset = GenSet(bits);
            let para = w.parabolic_subgroup(subset);
            let mut seen = vec![false; w.order()];
            for x in w.elements() {
                if !w.right_descents(x).intersection(subset).is_empty() {
                    continue;
                }
                for u in 0..para.order() {
                    let uw = para.embed(u);
                    let xu = w.product(x, uw);
                    assert_eq!(w.length(xu), w.length(x) + w.length(uw));
                    assert!(!seen[xu]);
                    seen[xu] = true;
                    assert_eq!(w.parabolic_decompose(xu, subset), (x, uw));
                }
            }
            assert!(seen.iter().all(|b| *b));
        }
        let g = w.generator(1);
        assert_eq!(w.parabolic_decompose(g, GenSet::singleton(1)), (0, g));
        assert_eq!(w.parabolic_decompose(g, GenSet::EMPTY), (g, 0));
    }

    #[test]
    fn parabolic_subgroups_embed_homomorphically() {
        let w = group("B3");
        for pair in [[0, 1], [0, 2], [1, 2]] {
            let para = w.parabolic_subgroup(pair.into_iter().collect());
            let sub = para.group().unwrap();
            for u in sub.elements() {
                assert_eq!(w.length(para.embed(u)), sub.length(u));
                for v in sub.elements() {
                    assert_eq!(para.embed(sub.product(u, v)), w.product(para.embed(u), para.embed(v)));
                }
                assert_eq!(para.restrict(para.embed(u)), Some(u));
            }
        }
        assert_eq!(w.parabolic_subgroup(GenSet::singleton(2)).order(), 2);
        let h3 = group("H3");
        assert_eq!(h3.parabolic_subgroup([0, 1].into_iter().collect()).order(), 10);
        assert_eq!(w.parabolic_subgroup(GenSet::EMPTY).order(), 1);
    }

    #[test]
    fn dihedral_labels() {
        let w = group("I2:4");
        let labels: Vec<String> = w.elements().map(|x| w.dihedral_label(x).unwrap()).collect();
        assert_eq!(labels, ["1_0", "1_1", "2_1", "1_2", "2_2", "1_3", "2_3", "2_4"]);
        assert_eq!(w.parse_word("s2 s1 s2"), Some(w.element_from_word(&[1, 0, 1])));
        assert_eq!(w.parse_word("s3"), None);
    }
}
