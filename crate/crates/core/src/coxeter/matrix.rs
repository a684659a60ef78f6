use std::fmt;

use super::CoxeterError;

/// Marker for `m_st = infinity`.
pub const INFINITE: u32 = 0;

/// A Coxeter matrix: `m[s][s] = 1`, and for `s != t` the order of `st`
/// (at least 2), or [`INFINITE`].
#[derive(Clone, PartialEq, Eq)]
pub struct CoxeterMatrix {
    rank: usize,
    entries: Vec<u32>,
}

impl CoxeterMatrix {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self, CoxeterError> {
        let rank = rows.len();
        if rank == 0 {
            return Err(CoxeterError::InvalidMatrix("matrix has no generators".into()));
        }
        if rank > 64 {
            return Err(CoxeterError::InvalidMatrix(format!("rank {rank} exceeds 64 generators")));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != rank {
                return Err(CoxeterError::InvalidMatrix(format!(
                    "row {} has {} entries, expected {rank}",
                    i + 1,
                    row.len()
                )));
            }
        }
        for (i, row) in rows.iter().enumerate() {
            if row[i] != 1 {
                return Err(CoxeterError::InvalidMatrix(format!("diagonal entry ({0},{0}) must be 1", i + 1)));
            }
            for (j, &m) in row.iter().enumerate() {
                if i == j {
                    continue;
                }
                if m != rows[j][i] {
                    return Err(CoxeterError::InvalidMatrix(format!(
                        "entries ({},{}) and ({},{}) differ",
                        i + 1,
                        j + 1,
                        j + 1,
                        i + 1
                    )));
                }
                if m == 1 {
                    return Err(CoxeterError::InvalidMatrix(format!(
                        "off-diagonal entry ({},{}) must be at least 2",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(Self {
            rank,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds a matrix from the edges of a Coxeter graph; unlisted pairs commute.
    pub fn from_edges(rank: usize, edges: &[(usize, usize, u32)]) -> Result<Self, CoxeterError> {
        let mut rows = vec![vec![2u32; rank]; rank];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = 1;
        }
        for &(a, b, m) in edges {
            if a >= rank || b >= rank || a == b {
                return Err(CoxeterError::InvalidMatrix(format!("bad edge ({a},{b})")));
            }
            rows[a][b] = m;
            rows[b][a] = m;
        }
        Self::new(rows)
    }

    /// Standard types by name: `A<n>`, `B<n>`, `D<n>`, `F4`, `G2`, `H3`, `H4`,
    /// `I2(m)` (also written `I2:m`). Generators are numbered along the
    /// Dynkin diagram; for `B<n>` the double bond joins generators 1 and 2,
    /// for `F4` it joins 2 and 3, for `H<n>` the 5-bond joins 1 and 2, and for
    /// `D<n>` generator `n` is attached to generator `n-2`.
    pub fn preset(name: &str) -> Result<Self, CoxeterError> {
        let unknown = || CoxeterError::UnknownPreset(name.to_string());
        let name = name.trim();
        if let Some(rest) = name.strip_prefix("I2") {
            let m_str = rest
                .strip_prefix(':')
                .or_else(|| rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')))
                .ok_or_else(unknown)?;
            let m: u32 = m_str.trim().parse().map_err(|_| unknown())?;
            if m < 2 {
                return Err(unknown());
            }
            return Self::from_edges(2, &[(0, 1, m)]);
        }
        let (letter, digits) = name.split_at(1.min(name.len()));
        let n: usize = digits.parse().map_err(|_| unknown())?;
        let chain = |n: usize| -> Vec<(usize, usize, u32)> { (1..n).map(|i| (i - 1, i, 3)).collect() };
        match (letter, n) {
            ("A", n) if n >= 1 => Self::from_edges(n, &chain(n)),
            ("B" | "C", n) if n >= 2 => {
                let mut edges = chain(n);
                edges[n - 2].2 = 4;
                Self::from_edges(n, &edges)
            }
            ("D", n) if n >= 4 => {
                let mut edges = chain(n - 1);
                edges.push((n - 3, n - 1, 3));
                Self::from_edges(n, &edges)
            }
            ("F", 4) => Self::from_edges(4, &[(0, 1, 3), (1, 2, 4), (2, 3, 3)]),
            ("G", 2) => Self::from_edges(2, &[(0, 1, 6)]),
            ("H", 3 | 4) => {
                let mut edges = chain(n);
                edges[0].2 = 5;
                Self::from_edges(n, &edges)
            }
            _ => Err(unknown()),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `m_st`, with [`INFINITE`] for an infinite order.
    pub fn get(&self, s: usize, t: usize) -> u32 {
        self.entries[s * self.rank + t]
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.entries.chunks(self.rank).map(|r| r.to_vec()).collect()
    }

    /// The submatrix on the listed generators, in the given order.
    pub fn submatrix(&self, gens: &[usize]) -> Result<Self, CoxeterError> {
        Self::new(gens.iter().map(|&a| gens.iter().map(|&b| self.get(a, b)).collect()).collect())
    }

    /// Connected components of the graph with an edge `{s,t}` whenever
    /// `m_st` is odd; generators in one component are conjugate.
    pub fn odd_components(&self) -> Vec<usize> {
        let mut comp: Vec<usize> = (0..self.rank).collect();
        fn find(comp: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while comp[r] != r {
                r = comp[r];
            }
            comp[x] = r;
            r
        }
        for s in 0..self.rank {
            for t in s + 1..self.rank {
                let m = self.get(s, t);
                if m != INFINITE && m % 2 == 1 {
                    let (a, b) = (find(&mut comp, s), find(&mut comp, t));
                    comp[a.max(b)] = a.min(b);
                }
            }
        }
        (0..self.rank).map(|s| find(&mut comp, s)).collect()
    }
}

impl fmt::Debug for CoxeterMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.entries.chunks(self.rank)).finish()
    }
}
