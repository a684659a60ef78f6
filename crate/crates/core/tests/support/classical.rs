//! Equal-parameter Kazhdan–Lusztig polynomials `P_{x,w}(q)` by the original
//! recursion over a signed permutation group.

use cellkit::LaurentPoly;

use super::perm::PermGroup;

pub struct ClassicalKl {
    /// `p[x][w]`, coefficients in `q` from degree 0; empty when `x` is not below `w`.
    pub p: Vec<Vec<Vec<i64>>>,
    pub below: Vec<Vec<bool>>,
}

fn add_shifted(acc: &mut Vec<i64>, poly: &[i64], shift: usize, scale: i64) {
    if acc.len() < poly.len() + shift {
        acc.resize(poly.len() + shift, 0);
    }
    for (i, &c) in poly.iter().enumerate() {
        acc[i + shift] += scale * c;
    }
}

impl ClassicalKl {
    pub fn compute(group: &PermGroup) -> Self {
        let n = group.order();
        let below = group.bruhat();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&w| group.length[w]);
        let mut p = vec![vec![Vec::new(); n]; n];
        let mut mu = vec![vec![0i64; n]; n];
        for &w in &order {
            if group.length[w] == 0 {
                p[w][w] = vec![1];
                continue;
            }
            let s = (0..group.gens.len())
                .find(|&s| group.length[group.lmul(s, w)] < group.length[w])
                .unwrap();
            let v = group.lmul(s, w);
            for x in 0..n {
                if !below[w][x] {
                    continue;
                }
                let sx = group.lmul(s, x);
                let c = usize::from(group.length[sx] < group.length[x]);
                let mut acc = Vec::new();
                if below[v][sx] {
                    add_shifted(&mut acc, &p[sx][v], 1 - c, 1);
                }
                if below[v][x] {
                    add_shifted(&mut acc, &p[x][v], c, 1);
                }
                for z in 0..n {
                    if z != v && below[v][z] && below[z][x] && mu[z][v] != 0 {
                        let sz = group.lmul(s, z);
                        if group.length[sz] < group.length[z] {
                            let shift = (group.length[w] - group.length[z]) / 2;
                            add_shifted(&mut acc, &p[x][z], shift, -mu[z][v]);
                        }
                    }
                }
                while acc.last() == Some(&0) {
                    acc.pop();
                }
                p[x][w] = acc;
            }
            for x in 0..n {
                let d = group.length[w] - group.length[x].min(group.length[w]);
                if x != w && below[w][x] && d % 2 == 1 {
                    mu[x][w] = p[x][w].get((d - 1) / 2).copied().unwrap_or(0);
                }
            }
        }
        Self { p, below }
    }

    pub fn mu(&self, group: &PermGroup, x: usize, w: usize) -> i64 {
        let d = group.length[w] as i64 - group.length[x] as i64;
        if x == w || !self.below[w][x] || d % 2 == 0 {
            return 0;
        }
        self.p[x][w].get((d as usize - 1) / 2).copied().unwrap_or(0)
    }
}

/// `p_{y,w} = v^{l(y)-l(w)} P_{y,w}(v^2)` and `M^s_{z,y} = mu(z,y)`.
pub fn compare(name: &str, oracle: PermGroup) {
    let t = super::table(name, &vec![1; oracle.gens.len()]);
    let g = t.group();
    assert_eq!(g.order(), oracle.order());
    let kl = ClassicalKl::compute(&oracle);
    let to_oracle: Vec<usize> = g.elements().map(|w| oracle.of_word(g.word(w))).collect();
    for w in g.elements() {
        assert_eq!(g.length(w), oracle.length[to_oracle[w]]);
        for y in g.elements() {
            let (oy, ow) = (to_oracle[y], to_oracle[w]);
            assert_eq!(g.bruhat_leq(y, w), kl.below[ow][oy], "{name} Bruhat {y} {w}");
            let shift = g.length(y) as i32 - g.length(w) as i32;
            let expect = LaurentPoly::from_terms(
                kl.p[oy][ow].iter().enumerate().map(|(k, &c)| (2 * k as i32 + shift, c)),
            );
            assert_eq!(t.p(y, w), expect, "{name} p_{{{},{}}}", g.format_word(y), g.format_word(w));
        }
    }
    for s in 0..g.rank() {
        for y in g.elements().filter(|&y| g.lmul(s, y) > y) {
            for z in g.elements().filter(|&z| g.lmul(s, z) < z && z != y && g.bruhat_leq(z, y)) {
                let mu = kl.mu(&oracle, to_oracle[z], to_oracle[y]);
                assert_eq!(t.m_poly(s, z, y).unwrap(), LaurentPoly::from_terms([(0, mu)]), "{name} mu");
            }
        }
    }
}
