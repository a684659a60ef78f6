//! Integer Laurent polynomials in one indeterminate `v`.
//!
//! Polynomials are stored sparsely as a list of `(exponent, coefficient)`
//! pairs sorted by ascending exponent with no zero coefficients, so the zero
//! polynomial is the empty list and structural equality is ring equality.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: Vec<(i32, BigInt)>,
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("cannot parse Laurent polynomial {input:?}: {reason}")]
pub struct ParsePolyError {
    input: String,
    reason: &'static str,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c * v^e`.
    pub fn monomial(c: impl Into<BigInt>, e: i32) -> Self {
        let c = c.into();
        if c.is_zero() {
            Self::zero()
        } else {
            Self { terms: vec![(e, c)] }
        }
    }

    /// `v^e + v^-e`, or `2` when `e == 0`.
    pub fn symmetric_pair(e: i32) -> Self {
        Self::monomial(1, e) + Self::monomial(1, -e)
    }

    /// Builds a polynomial from arbitrary terms, merging repeated exponents.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i32, C)>,
        C: Into<BigInt>,
    {
        let mut raw: Vec<(i32, BigInt)> = terms.into_iter().map(|(e, c)| (e, c.into())).collect();
        raw.sort_by_key(|(e, _)| *e);
        let mut out: Vec<(i32, BigInt)> = Vec::with_capacity(raw.len());
        for (e, c) in raw {
            match out.last_mut() {
                Some((le, lc)) if *le == e => *lc += c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Self { terms: out }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> &[(i32, BigInt)] {
        &self.terms
    }

    pub fn coeff(&self, e: i32) -> BigInt {
        match self.terms.binary_search_by_key(&e, |(x, _)| *x) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    /// Highest exponent, `None` for zero.
    pub fn degree(&self) -> Option<i32> {
        self.terms.last().map(|(e, _)| *e)
    }

    /// Lowest exponent, `None` for zero.
    pub fn valuation(&self) -> Option<i32> {
        self.terms.first().map(|(e, _)| *e)
    }

    /// True when the polynomial is an integer constant (including zero).
    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(e, _)| *e == 0)
    }

    /// The bar involution `v -> v^-1`.
    pub fn bar(&self) -> Self {
        let mut terms: Vec<(i32, BigInt)> = self.terms.iter().map(|(e, c)| (-e, c.clone())).collect();
        terms.reverse();
        Self { terms }
    }

    pub fn is_bar_invariant(&self) -> bool {
        *self == self.bar()
    }

    /// Multiplication by `v^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// The part spanned by `v^e` with `e >= 0`.
    pub fn nonneg_part(&self) -> Self {
        let start = self.terms.partition_point(|(e, _)| *e < 0);
        Self {
            terms: self.terms[start..].to_vec(),
        }
    }

    /// The unique bar-invariant polynomial congruent to `self` modulo the
    /// span of strictly negative powers of `v`.
    pub fn symmetric_completion(&self) -> Self {
        let start = self.terms.partition_point(|(e, _)| *e < 0);
        let pos = &self.terms[start..];
        let mut terms = Vec::with_capacity(2 * pos.len());
        for (e, c) in pos.iter().rev() {
            if *e > 0 {
                terms.push((-e, c.clone()));
            }
        }
        terms.extend(pos.iter().cloned());
        Self { terms }
    }

    /// `self += sign * v^k * other`, the inner-loop update of the KL recursion.
    pub fn add_shifted(&mut self, other: &LaurentPoly, k: i32, negate: bool) {
        if other.is_zero() {
            return;
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = std::mem::take(&mut self.terms).into_iter().peekable();
        let mut b = other.terms.iter().peekable();
        loop {
            let ord = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Less,
                (None, Some(_)) => Ordering::Greater,
                (Some((ea, _)), Some((eb, _))) => ea.cmp(&(eb + k)),
            };
            match ord {
                Ordering::Less => out.push(a.next().unwrap()),
                Ordering::Greater => {
                    let (e, c) = b.next().unwrap();
                    out.push((e + k, if negate { -c } else { c.clone() }));
                }
                Ordering::Equal => {
                    let (e, mut c) = a.next().unwrap();
                    let (_, d) = b.next().unwrap();
                    if negate {
                        c -= d;
                    } else {
                        c += d;
                    }
                    if !c.is_zero() {
                        out.push((e, c));
                    }
                }
            }
        }
        self.terms = out;
    }

    /// The terms of `self * other` with exponent at least `min_exp`.
    pub fn mul_truncated(&self, other: &LaurentPoly, min_exp: i32) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let hi = self.degree().unwrap() + other.degree().unwrap();
        let lo = (self.valuation().unwrap() + other.valuation().unwrap()).max(min_exp);
        if lo > hi {
            return Self::zero();
        }
        let mut dense = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea + eb;
                if e >= lo {
                    dense[(e - lo) as usize] += ca * cb;
                }
            }
        }
        Self {
            terms: dense
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (lo + i as i32, c))
                .collect(),
        }
    }

    /// The value at `v = 1`, i.e. the sum of the coefficients.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.iter().map(|(_, c)| c.clone()).sum()
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::monomial(c, 0)
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out.add_shifted(rhs, 0, false);
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self.add_shifted(&rhs, 0, false);
        self
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out.add_shifted(rhs, 0, true);
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self.add_shifted(&rhs, 0, true);
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        self.add_shifted(rhs, 0, false);
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        self.add_shifted(rhs, 0, true);
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.mul_truncated(rhs, i32::MIN)
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl fmt::Display for LaurentPoly {
    /// Renders as e.g. `v^2 - 3 + v^-2`, exponents descending.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let unit = abs.is_one();
            match *e {
                0 => write!(f, "{abs}")?,
                1 if unit => f.write_str("v")?,
                1 => write!(f, "{abs}v")?,
                _ if unit => write!(f, "v^{e}")?,
                _ => write!(f, "{abs}v^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl FromStr for LaurentPoly {
    type Err = ParsePolyError;

    /// Accepts the rendering produced by `Display`, plus optional `*` between
    /// coefficient and `v`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason| ParsePolyError {
            input: s.to_string(),
            reason,
        };
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err("empty input"));
        }
        // Split into signed terms; a sign right after '^' belongs to the exponent.
        let mut pieces: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        let mut prev: Option<char> = None;
        for ch in compact.chars() {
            if (ch == '+' || ch == '-') && prev != Some('^') {
                if !cur.is_empty() {
                    pieces.push((neg, std::mem::take(&mut cur)));
                } else if prev.is_some() {
                    return Err(err("dangling sign"));
                }
                neg = ch == '-';
            } else {
                cur.push(ch);
            }
            prev = Some(ch);
        }
        if cur.is_empty() {
            return Err(err("trailing sign"));
        }
        pieces.push((neg, cur));

        let mut terms: Vec<(i32, BigInt)> = Vec::new();
        for (neg, body) in pieces {
            let (coef_str, var_str) = match body.find('v') {
                Some(i) => (&body[..i], Some(&body[i + 1..])),
                None => (body.as_str(), None),
            };
            let coef_str = coef_str.strip_suffix('*').unwrap_or(coef_str);
            let mut c: BigInt = if coef_str.is_empty() {
                if var_str.is_none() {
                    return Err(err("empty term"));
                }
                BigInt::one()
            } else {
                coef_str.parse().map_err(|_| err("bad coefficient"))?
            };
            let e = match var_str {
                None => 0,
                Some("") => 1,
                Some(rest) => {
                    let exp = rest.strip_prefix('^').ok_or_else(|| err("expected '^' after v"))?;
                    exp.parse::<i32>().map_err(|_| err("bad exponent"))?
                }
            };
            if neg {
                c = -c;
            }
            terms.push((e, c));
        }
        Ok(Self::from_terms(terms))
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
