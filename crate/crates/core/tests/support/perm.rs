//! Weyl groups of types A, B and D as groups of signed permutations.

use std::collections::{HashMap, VecDeque};

/// Images of the points `1..=n`; a negative entry is a sign change.
pub type Perm = Vec<i32>;

pub fn compose(f: &Perm, g: &Perm) -> Perm {
    g.iter()
        .map(|&x| {
            let y = f[x.unsigned_abs() as usize - 1];
            if x < 0 {
                -y
            } else {
                y
            }
        })
        .collect()
}

fn identity(n: usize) -> Perm {
    (1..=n as i32).collect()
}

fn swap(n: usize, i: usize, j: usize, signed: bool) -> Perm {
    let mut p = identity(n);
    let sign = if signed { -1 } else { 1 };
    p[i - 1] = sign * j as i32;
    p[j - 1] = sign * i as i32;
    p
}

pub struct PermGroup {
    pub gens: Vec<Perm>,
    pub elements: Vec<Perm>,
    pub length: Vec<usize>,
    index: HashMap<Perm, usize>,
}

impl PermGroup {
    /// `s_i = (i, i+1)` on `n + 1` points.
    pub fn type_a(n: usize) -> Self {
        Self::generate((1..=n).map(|i| swap(n + 1, i, i + 1, false)).collect())
    }

    /// `s_i = (i, i+1)` for `i < n` and `s_n` negates the last point.
    pub fn type_b(n: usize) -> Self {
        let mut gens: Vec<Perm> = (1..n).map(|i| swap(n, i, i + 1, false)).collect();
        let mut sign = identity(n);
        sign[n - 1] = -(n as i32);
        gens.push(sign);
        Self::generate(gens)
    }

    /// `s_i = (i, i+1)` for `i < n` and `s_n` swaps `n-1, n` with signs.
    pub fn type_d(n: usize) -> Self {
        let mut gens: Vec<Perm> = (1..n).map(|i| swap(n, i, i + 1, false)).collect();
        gens.push(swap(n, n - 1, n, true));
        Self::generate(gens)
    }

    fn generate(gens: Vec<Perm>) -> Self {
        let n = gens[0].len();
        let mut elements = vec![identity(n)];
        let mut length = vec![0];
        let mut index = HashMap::from([(identity(n), 0)]);
        let mut queue = VecDeque::from([0]);
        while let Some(i) = queue.pop_front() {
            for g in &gens {
                let x = compose(&elements[i], g);
                if !index.contains_key(&x) {
                    index.insert(x.clone(), elements.len());
                    length.push(length[i] + 1);
                    queue.push_back(elements.len());
                    elements.push(x);
                }
            }
        }
        Self {
            gens,
            elements,
            length,
            index,
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn id(&self, p: &Perm) -> usize {
        self.index[p]
    }

    pub fn of_word(&self, word: &[u8]) -> usize {
        let n = self.gens[0].len();
        let p = word.iter().fold(identity(n), |acc, &s| compose(&acc, &self.gens[s as usize]));
        self.id(&p)
    }

    pub fn lmul(&self, s: usize, w: usize) -> usize {
        self.id(&compose(&self.gens[s], &self.elements[w]))
    }

    pub fn rmul(&self, w: usize, s: usize) -> usize {
        self.id(&compose(&self.elements[w], &self.gens[s]))
    }

    pub fn inverse(&self, w: usize) -> usize {
        let p = &self.elements[w];
        let mut inv = vec![0; p.len()];
        for (i, &x) in p.iter().enumerate() {
            let sign = x.signum();
            inv[x.unsigned_abs() as usize - 1] = sign * (i as i32 + 1);
        }
        self.id(&inv)
    }

    /// `below[w][y]` iff `y <= w`, from the chain description of the
    /// Bruhat order by reflections.
    pub fn bruhat(&self) -> Vec<Vec<bool>> {
        let mut reflections = Vec::new();
        for w in 0..self.order() {
            for s in 0..self.gens.len() {
                let ws = compose(&self.elements[w], &self.gens[s]);
                let t = self.id(&compose(&ws, &self.elements[self.inverse(w)]));
                if !reflections.contains(&t) {
                    reflections.push(t);
                }
            }
        }
        let mut order: Vec<usize> = (0..self.order()).collect();
        order.sort_by_key(|&w| self.length[w]);
        let mut below = vec![vec![false; self.order()]; self.order()];
        for &w in &order {
            below[w][w] = true;
            for &t in &reflections {
                let x = self.id(&compose(&self.elements[w], &self.elements[t]));
                if self.length[x] < self.length[w] {
                    let lower = below[x].clone();
                    for (y, &b) in lower.iter().enumerate() {
                        below[w][y] |= b;
                    }
                }
            }
        }
        below
    }
}
