use std::fmt;

use crate::coxeter::Element;
use crate::hecke::KlTable;
use crate::laurent::LaurentPoly;

use super::{CellError, CellPartition, CellSide};

/// Dense matrix over `Z[v, v^-1]`.
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentMatrix {
    rows: usize,
    cols: usize,
    data: Vec<LaurentPoly>,
}

impl LaurentMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![LaurentPoly::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.data[i * n + i] = LaurentPoly::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<LaurentPoly>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged matrix");
        Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: LaurentPoly) {
        self.data[i * self.cols + j] = value;
    }

    pub fn to_rows(&self) -> Vec<Vec<LaurentPoly>> {
        self.data.chunks(self.cols.max(1)).map(|r| r.to_vec()).collect()
    }

    pub fn mul(&self, other: &LaurentMatrix) -> LaurentMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn scale(&self, c: &LaurentPoly) -> LaurentMatrix {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn sub(&self, other: &LaurentMatrix) -> LaurentMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl fmt::Debug for LaurentMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for r in self.to_rows() {
            let cells: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

/// The module `[Gamma]_A` of a left-closed set, with
/// `C'_s . e_x = sum_{y in Gamma} h_{s,x,y} e_y`. Column `j` of a generator's
/// matrix is the image of the `j`-th basis vector.
#[derive(Debug, Clone)]
pub struct CellModule {
    basis: Vec<Element>,
    matrices: Vec<LaurentMatrix>,
}

impl CellModule {
    pub fn new(table: &KlTable, left: &CellPartition, basis: &[Element]) -> Result<Self, CellError> {
        if left.side() != CellSide::Left {
            return Err(CellError::NotLeftPartition);
        }
        let mut sorted = basis.to_vec();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(CellError::DuplicateBasis);
        }
        if !left.is_closed(basis) {
            return Err(CellError::NotClosed);
        }
        let g = table.group();
        let d = basis.len();
        let mut pos = vec![usize::MAX; g.order()];
        for (i, &x) in basis.iter().enumerate() {
            pos[x] = i;
        }
        let matrices = (0..g.rank())
            .map(|s| {
                let mut m = LaurentMatrix::zero(d, d);
                for (j, &x) in basis.iter().enumerate() {
                    for (y, h) in table.h_left(s, x) {
                        if pos[y] != usize::MAX {
                            m.set(pos[y], j, h);
                        }
                    }
                }
                m
            })
            .collect();
        Ok(Self {
            basis: basis.to_vec(),
            matrices,
        })
    }

    /// Module on a closed set with the basis in canonical element order.
    pub fn canonical(table: &KlTable, left: &CellPartition, gamma: &[Element]) -> Result<Self, CellError> {
        let mut basis = gamma.to_vec();
        basis.sort_unstable();
        Self::new(table, left, &basis)
    }

    pub fn basis(&self) -> &[Element] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Matrix of `C'_s`.
    pub fn matrix(&self, s: usize) -> &LaurentMatrix {
        &self.matrices[s]
    }

    /// Checks `(C'_s)^2 = (v^{p_s} + v^{-p_s}) C'_s` and the braid relations
    /// for `T_s = C'_s - v^{-p_s}`. Returns a description of the first failure.
    pub fn check_relations(&self, table: &KlTable) -> Result<(), String> {
        let g = table.group();
        let d = self.dim();
        let id = LaurentMatrix::identity(d);
        let t_mats: Vec<LaurentMatrix> = (0..g.rank())
            .map(|s| {
                let p = table.weights().get(s);
                self.matrices[s].sub(&id.scale(&LaurentPoly::monomial(1, -p)))
            })
            .collect();
        for s in 0..g.rank() {
            let c = &self.matrices[s];
            let lhs = c.mul(c);
            let rhs = c.scale(&LaurentPoly::symmetric_pair(table.weights().get(s)));
            if lhs != rhs {
                return Err(format!("quadratic relation fails for s{}", s + 1));
            }
            for t in s + 1..g.rank() {
                let m = g.matrix().get(s, t) as usize;
                let (mut a, mut b) = (id.clone(), id.clone());
                for k in 0..m {
                    let (x, y) = if k % 2 == 0 { (s, t) } else { (t, s) };
                    a = a.mul(&t_mats[x]);
                    b = b.mul(&t_mats[y]);
                }
                if a != b {
                    return Err(format!("braid relation fails for s{}, s{}", s + 1, t + 1));
                }
            }
        }
        Ok(())
    }
}
