//! Dense square matrices over [`QuadNum`] with a parity-labelled basis.
//!
//! The matrix realizations of `C(λ)` live on super vector spaces; a
//! [`SuperMatrix`] therefore carries, next to its entries, the parity of every
//! basis slot. That is enough to form supertraces, to check whether an operator
//! is parity-preserving or parity-reversing, and to build graded tensor products
//! (the Koszul sign is introduced by the callers through explicit grading
//! involutions, so [`SuperMatrix::kron`] itself is the plain Kronecker product).
//!
//! Exact linear algebra (rank, kernels, change of basis) is Gaussian elimination
//! over the field of multi-quadratic numbers.

use crate::quad::QuadNum;
use std::fmt;

/// Parity of a basis slot: even (unshifted) or odd.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    /// The opposite parity.
    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    /// `+1` for even, `-1` for odd.
    pub fn sign(self) -> i64 {
        match self {
            Parity::Even => 1,
            Parity::Odd => -1,
        }
    }

    /// Parity of a tensor slot: sum of the factor parities.
    pub fn xor(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// A square matrix over [`QuadNum`] acting on a space whose `i`-th basis vector
/// has parity `parity[i]`.
#[derive(Clone, PartialEq, Eq)]
pub struct SuperMatrix {
    dim: usize,
    /// Row-major entries, length `dim²`.
    data: Vec<QuadNum>,
    /// Parity of each basis slot, length `dim`.
    parity: Vec<Parity>,
}

impl SuperMatrix {
    /// The zero matrix on the given parity-labelled space.
    pub fn zero(parity: Vec<Parity>) -> Self {
        let dim = parity.len();
        SuperMatrix { dim, data: vec![QuadNum::zero(); dim * dim], parity }
    }

    /// The identity on the given parity-labelled space.
    pub fn identity(parity: Vec<Parity>) -> Self {
        let mut m = SuperMatrix::zero(parity);
        for i in 0..m.dim {
            m.set(i, i, QuadNum::one());
        }
        m
    }

    /// Builds a matrix from an entry function.
    pub fn from_fn(parity: Vec<Parity>, mut entry: impl FnMut(usize, usize) -> QuadNum) -> Self {
        let mut m = SuperMatrix::zero(parity);
        for r in 0..m.dim {
            for c in 0..m.dim {
                let v = entry(r, c);
                if !v.is_zero() {
                    m.set(r, c, v);
                }
            }
        }
        m
    }

    /// The dimension (side length).
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The slot parities.
    pub fn parity(&self) -> &[Parity] {
        &self.parity
    }

    /// Replaces the parity labelling (used when a grading is re-derived);
    /// the length must match.
    pub fn with_parity(mut self, parity: Vec<Parity>) -> Self {
        assert_eq!(parity.len(), self.dim, "parity length must match dimension");
        self.parity = parity;
        self
    }

    /// Entry at `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> &QuadNum {
        &self.data[row * self.dim + col]
    }

    /// Sets the entry at `(row, col)`.
    pub fn set(&mut self, row: usize, col: usize, v: QuadNum) {
        self.data[row * self.dim + col] = v;
    }

    /// Matrix sum; operands must share dimension and parity labelling.
    pub fn add(&self, other: &SuperMatrix) -> SuperMatrix {
        self.assert_compatible(other);
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.add_ref(b))
            .collect();
        SuperMatrix { dim: self.dim, data, parity: self.parity.clone() }
    }

    /// Matrix difference.
    pub fn sub(&self, other: &SuperMatrix) -> SuperMatrix {
        self.add(&other.scale(&QuadNum::from_int(-1)))
    }

    /// Matrix product; operands must share dimension and parity labelling.
    pub fn mul(&self, other: &SuperMatrix) -> SuperMatrix {
        self.assert_compatible(other);
        let d = self.dim;
        let mut out = SuperMatrix::zero(self.parity.clone());
        for r in 0..d {
            for k in 0..d {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..d {
                    let b = other.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(r, c).add_ref(&a.mul_ref(b));
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    /// Scalar multiple.
    pub fn scale(&self, s: &QuadNum) -> SuperMatrix {
        let data = self.data.iter().map(|a| a.mul_ref(s)).collect();
        SuperMatrix { dim: self.dim, data, parity: self.parity.clone() }
    }

    /// Plain Kronecker product; slot parities add. Index `(i, j)` of the factors
    /// becomes `i·dim₂ + j`.
    pub fn kron(&self, other: &SuperMatrix) -> SuperMatrix {
        let d1 = self.dim;
        let d2 = other.dim;
        let parity: Vec<Parity> = (0..d1 * d2)
            .map(|idx| self.parity[idx / d2].xor(other.parity[idx % d2]))
            .collect();
        let mut out = SuperMatrix::zero(parity);
        for r1 in 0..d1 {
            for c1 in 0..d1 {
                let a = self.get(r1, c1);
                if a.is_zero() {
                    continue;
                }
                for r2 in 0..d2 {
                    for c2 in 0..d2 {
                        let b = other.get(r2, c2);
                        if b.is_zero() {
                            continue;
                        }
                        out.set(r1 * d2 + r2, c1 * d2 + c2, a.mul_ref(b));
                    }
                }
            }
        }
        out
    }

    /// Block-diagonal sum; parities concatenate.
    pub fn direct_sum(&self, other: &SuperMatrix) -> SuperMatrix {
        let mut parity = self.parity.clone();
        parity.extend_from_slice(&other.parity);
        let mut out = SuperMatrix::zero(parity);
        for r in 0..self.dim {
            for c in 0..self.dim {
                out.set(r, c, self.get(r, c).clone());
            }
        }
        for r in 0..other.dim {
            for c in 0..other.dim {
                out.set(self.dim + r, self.dim + c, other.get(r, c).clone());
            }
        }
        out
    }

    /// Ordinary trace.
    pub fn trace(&self) -> QuadNum {
        let mut t = QuadNum::zero();
        for i in 0..self.dim {
            t = t.add_ref(self.get(i, i));
        }
        t
    }

    /// Supertrace: diagonal entries weighted by slot parity signs.
    pub fn supertrace(&self) -> QuadNum {
        let mut t = QuadNum::zero();
        for i in 0..self.dim {
            let d = self.get(i, i);
            t = match self.parity[i] {
                Parity::Even => t.add_ref(d),
                Parity::Odd => t.add_ref(&d.neg_ref()),
            };
        }
        t
    }

    /// The parity of this matrix as a linear map: `Even` if every nonzero entry
    /// preserves slot parity, `Odd` if every one reverses it, `None` if mixed.
    /// The zero matrix reports `Even`.
    pub fn map_parity(&self) -> Option<Parity> {
        let mut seen: Option<Parity> = None;
        for r in 0..self.dim {
            for c in 0..self.dim {
                if self.get(r, c).is_zero() {
                    continue;
                }
                let p = self.parity[r].xor(self.parity[c]);
                match seen {
                    None => seen = Some(p),
                    Some(q) if q == p => {}
                    Some(_) => return None,
                }
            }
        }
        Some(seen.unwrap_or(Parity::Even))
    }

    /// Applies the matrix to a coordinate vector.
    pub fn apply(&self, v: &[QuadNum]) -> Vec<QuadNum> {
        assert_eq!(v.len(), self.dim, "vector length must match dimension");
        (0..self.dim)
            .map(|r| {
                let mut acc = QuadNum::zero();
                for (c, x) in v.iter().enumerate() {
                    if !x.is_zero() {
                        acc = acc.add_ref(&self.get(r, c).mul_ref(x));
                    }
                }
                acc
            })
            .collect()
    }

    /// The rows as vectors.
    pub fn rows(&self) -> Vec<Vec<QuadNum>> {
        (0..self.dim)
            .map(|r| self.data[r * self.dim..(r + 1) * self.dim].to_vec())
            .collect()
    }

    /// The columns as vectors.
    pub fn columns(&self) -> Vec<Vec<QuadNum>> {
        (0..self.dim)
            .map(|c| (0..self.dim).map(|r| self.get(r, c).clone()).collect())
            .collect()
    }

    /// Rank over the multi-quadratic field.
    pub fn rank(&self) -> usize {
        matrix_rank(self.rows())
    }

    /// A basis of the right kernel `{v : Mv = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<QuadNum>> {
        right_nullspace(self.rows(), self.dim)
    }

    fn assert_compatible(&self, other: &SuperMatrix) {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        assert_eq!(self.parity, other.parity, "parity labelling mismatch");
    }
}

impl fmt::Debug for SuperMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SuperMatrix(dim {}, parity {:?})", self.dim, self.parity)?;
        for r in 0..self.dim {
            let row: Vec<String> = (0..self.dim).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Reduced row echelon form in place; returns the pivot columns in order.
fn row_reduce(rows: &mut [Vec<QuadNum>]) -> Vec<usize> {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(pr) = (r..nrows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = rows[r][c]
            .inverse()
            .expect("pivot inversion within oracle guard");
        for x in rows[r].iter_mut() {
            *x = x.mul_ref(&inv);
        }
        for i in 0..nrows {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in 0..ncols {
                    let delta = rows[r][j].mul_ref(&f);
                    rows[i][j] = rows[i][j].sub_quad(&delta);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == nrows {
            break;
        }
    }
    pivots
}

/// Rank of a rectangular row list.
pub fn matrix_rank(mut rows: Vec<Vec<QuadNum>>) -> usize {
    row_reduce(&mut rows).len()
}

/// Basis of the right kernel of a rectangular matrix given as rows over
/// `ncols` columns. Each basis vector sets one free column to 1.
pub fn right_nullspace(mut rows: Vec<Vec<QuadNum>>, ncols: usize) -> Vec<Vec<QuadNum>> {
    let pivots = row_reduce(&mut rows);
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![QuadNum::zero(); ncols];
        v[free] = QuadNum::one();
        for (prow, &pcol) in pivots.iter().enumerate() {
            v[pcol] = rows[prow][free].neg_ref();
        }
        basis.push(v);
    }
    basis
}

/// Expresses each target vector in the given (independent) basis: returns the
/// coefficient vectors, or `None` if some target lies outside the span.
pub fn express_in_basis(
    basis: &[Vec<QuadNum>],
    targets: &[Vec<QuadNum>],
) -> Option<Vec<Vec<QuadNum>>> {
    if basis.is_empty() {
        return targets
            .iter()
            .all(|t| t.iter().all(QuadNum::is_zero))
            .then(|| vec![Vec::new(); targets.len()]);
    }
    let dim = basis[0].len();
    let k = basis.len();
    // Augmented system [B | T] with basis vectors as columns.
    let mut rows: Vec<Vec<QuadNum>> = (0..dim)
        .map(|r| {
            let mut row: Vec<QuadNum> = basis.iter().map(|b| b[r].clone()).collect();
            row.extend(targets.iter().map(|t| t[r].clone()));
            row
        })
        .collect();
    let pivots = row_reduce(&mut rows);
    if pivots.len() != k || pivots.iter().any(|&p| p >= k) {
        return None; // dependent basis or a pivot in the target block: inconsistent
    }
    let mut out = vec![vec![QuadNum::zero(); k]; targets.len()];
    for (prow, &pcol) in pivots.iter().enumerate() {
        for (t, coeffs) in out.iter_mut().enumerate() {
            coeffs[pcol] = rows[prow][k + t].clone();
        }
    }
    // Rows below the pivots must vanish on the target block.
    for row in rows.iter().skip(pivots.len()) {
        if row.iter().skip(k).any(|x| !x.is_zero()) {
            return None;
        }
    }
    Some(out)
}

impl QuadNum {
    /// Difference, as a method (keeps elimination loops readable).
    fn sub_quad(&self, other: &QuadNum) -> QuadNum {
        self.add_ref(&other.neg_ref())
    }
}
