//! Arithmetic in the cyclotomic integers `Z[zeta_N]`, used to realise the
//! geometric representation of a Coxeter group without floating point.
//!
//! Elements are integer coefficient vectors in the power basis
//! `1, zeta, ..., zeta^(d-1)` with `d = phi(N)`, reduced modulo the
//! cyclotomic polynomial. All operations are checked; `None` signals i64
//! overflow, which only happens for infinite groups.

#[derive(Debug, Clone)]
pub(crate) struct CyclotomicRing {
    order: usize,
    /// Monic minimal polynomial of `zeta_N`, low degree first.
    modulus: Vec<i64>,
}

impl CyclotomicRing {
    pub fn new(order: usize) -> Self {
        assert!(order >= 1);
        Self {
            order,
            modulus: cyclotomic_polynomial(order),
        }
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn constant(&self, c: i64) -> Vec<i64> {
        let mut out = vec![0; self.degree()];
        out[0] = c;
        out
    }

    /// `zeta^k + zeta^-k`, i.e. `2cos(2 pi k / N)`.
    pub fn two_cos(&self, k: usize) -> Vec<i64> {
        let k = k % self.order;
        let mut raw = vec![0i64; self.order.max(1)];
        raw[k] += 1;
        raw[(self.order - k) % self.order] += 1;
        self.reduce(raw).expect("small coefficients")
    }

    fn reduce(&self, mut raw: Vec<i64>) -> Option<Vec<i64>> {
        let d = self.degree();
        for top in (d..raw.len()).rev() {
            let c = raw[top];
            if c != 0 {
                raw[top] = 0;
                for (i, m) in self.modulus[..d].iter().enumerate() {
                    let j = top - d + i;
                    raw[j] = raw[j].checked_sub(c.checked_mul(*m)?)?;
                }
            }
        }
        raw.resize(d, 0);
        Some(raw)
    }

    pub fn mul(&self, a: &[i64], b: &[i64]) -> Option<Vec<i64>> {
        let d = self.degree();
        let mut raw = vec![0i64; 2 * d - 1];
        for (i, x) in a.iter().enumerate() {
            if *x == 0 {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                raw[i + j] = raw[i + j].checked_add(x.checked_mul(*y)?)?;
            }
        }
        self.reduce(raw)
    }
}

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    // den is monic.
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![0i64; num.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        for (i, m) in den.iter().enumerate() {
            rem[k + i] -= c * m;
        }
    }
    debug_assert!(rem.iter().all(|&x| x == 0));
    quot
}

/// Coefficients of the `n`-th cyclotomic polynomial, low degree first.
pub(crate) fn cyclotomic_polynomial(n: usize) -> Vec<i64> {
    let mut poly = vec![0i64; n + 1];
    poly[0] = -1;
    poly[n] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            poly = poly_div_exact(&poly, &cyclotomic_polynomial(d));
        }
    }
    poly
}
