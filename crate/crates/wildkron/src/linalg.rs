//! Exact linear algebra over the rationals.
//!
//! Two flavors live here. [`ExactMatrix`] is a dense matrix of
//! arbitrary-precision rationals with deterministic reduced row echelon form
//! and kernel bases; it backs the representation matrices and the reflection
//! functors. [`sparse_rank`] is a fraction-free sparse eliminator over
//! `BigInt` used for the large homomorphism systems, where the dense path
//! would be wasteful.
//!
//! Determinism matters: kernel bases feed into constructed representations
//! that are serialized and compared byte for byte, so pivots are always
//! chosen by a fixed rule.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Dense matrix of exact rationals, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl ExactMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(k: usize) -> Self {
        let mut m = ExactMatrix::zero(k, k);
        for i in 0..k {
            m.set(i, i, BigRational::one());
        }
        m
    }

    /// Jordan block with eigenvalue 0: ones on the superdiagonal.
    pub fn jordan_nilpotent(k: usize) -> Self {
        let mut m = ExactMatrix::zero(k, k);
        for i in 0..k.saturating_sub(1) {
            m.set(i, i + 1, BigRational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::InvalidRep("ragged matrix rows".into()));
        }
        Ok(ExactMatrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Result<Self> {
        ExactMatrix::from_rows(
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|&v| BigRational::from_integer(v.into()))
                        .collect()
                })
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigRational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigRational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(|v| v.is_integer())
    }

    pub fn transpose(&self) -> Self {
        let mut out = ExactMatrix::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c).clone());
            }
        }
        out
    }

    pub fn mul(&self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in matrix product");
        let mut out = ExactMatrix::zero(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let lv = self.get(r, k);
                if lv.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let rv = rhs.get(k, c);
                    if rv.is_zero() {
                        continue;
                    }
                    let cur = out.get(r, c) + lv * rv;
                    out.set(r, c, cur);
                }
            }
        }
        out
    }

    /// Stacks matrices vertically; all must share the column count.
    pub fn vstack(parts: &[&ExactMatrix]) -> ExactMatrix {
        let cols = parts.first().map_or(0, |m| m.cols);
        assert!(parts.iter().all(|m| m.cols == cols));
        let rows = parts.iter().map(|m| m.rows).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for m in parts {
            data.extend(m.data.iter().cloned());
        }
        ExactMatrix { rows, cols, data }
    }

    /// Concatenates matrices horizontally; all must share the row count.
    pub fn hstack(parts: &[&ExactMatrix]) -> ExactMatrix {
        let rows = parts.first().map_or(0, |m| m.rows);
        assert!(parts.iter().all(|m| m.rows == rows));
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut out = ExactMatrix::zero(rows, cols);
        let mut off = 0;
        for m in parts {
            for r in 0..rows {
                for c in 0..m.cols {
                    out.set(r, off + c, m.get(r, c).clone());
                }
            }
            off += m.cols;
        }
        out
    }

    /// The submatrix of columns `lo..hi`.
    pub fn col_block(&self, lo: usize, hi: usize) -> ExactMatrix {
        let mut out = ExactMatrix::zero(self.rows, hi - lo);
        for r in 0..self.rows {
            for c in lo..hi {
                out.set(r, c - lo, self.get(r, c).clone());
            }
        }
        out
    }

    /// The submatrix of rows `lo..hi`.
    pub fn row_block(&self, lo: usize, hi: usize) -> ExactMatrix {
        ExactMatrix {
            rows: hi - lo,
            cols: self.cols,
            data: self.data[lo * self.cols..hi * self.cols].to_vec(),
        }
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    /// Pivot rule: leftmost nonzero column, first eligible row in order.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(pr) = (row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            if pr != row {
                for c in 0..self.cols {
                    self.data.swap(pr * self.cols + c, row * self.cols + c);
                }
            }
            let inv = self.get(row, col).recip();
            for c in col..self.cols {
                let v = self.get(row, c) * &inv;
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r == row || self.get(r, col).is_zero() {
                    continue;
                }
                let factor = self.get(r, col).clone();
                for c in col..self.cols {
                    let v = self.get(r, c) - &factor * self.get(row, c);
                    self.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut work = self.clone();
        work.rref_in_place().len()
    }

    /// Basis of the right kernel `{x : A·x = 0}`; each ROW of the result is
    /// one basis vector of length `cols(A)`. The basis is the canonical RREF
    /// one (unit entry at each free column, free columns ascending), scaled
    /// to primitive integer vectors with positive leading entry.
    pub fn right_kernel_basis(&self) -> ExactMatrix {
        let mut work = self.clone();
        let pivots = work.rref_in_place();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = ExactMatrix::zero(free.len(), self.cols);
        for (k, &fc) in free.iter().enumerate() {
            out.set(k, fc, BigRational::one());
            for (prow, &pc) in pivots.iter().enumerate() {
                let v = work.get(prow, fc);
                if !v.is_zero() {
                    out.set(k, pc, -v.clone());
                }
            }
        }
        out.primitive_rows();
        out
    }

    /// Basis of the left kernel `{x : x·A = 0}` as rows of length `rows(A)`.
    pub fn left_kernel_basis(&self) -> ExactMatrix {
        self.transpose().right_kernel_basis()
    }

    /// Scales every row to a primitive integer vector whose first nonzero
    /// entry is positive. Row scaling only, so spans are unchanged.
    pub fn primitive_rows(&mut self) {
        for r in 0..self.rows {
            let row = &self.data[r * self.cols..(r + 1) * self.cols];
            let mut lcm = BigInt::one();
            for v in row.iter().filter(|v| !v.is_zero()) {
                lcm = lcm.lcm(v.denom());
            }
            let mut gcd = BigInt::zero();
            for v in row {
                gcd = gcd.gcd(&(v.numer() * &lcm / v.denom()));
            }
            if gcd.is_zero() {
                continue;
            }
            let lead_neg = row
                .iter()
                .find(|v| !v.is_zero())
                .map(|v| v.is_negative())
                .unwrap_or(false);
            let mut scale = BigRational::new(lcm, gcd);
            if lead_neg {
                scale = -scale;
            }
            for c in 0..self.cols {
                let v = self.get(r, c) * &scale;
                self.set(r, c, v);
            }
        }
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Rank of a sparse integer matrix given as rows of `(column, coefficient)`
/// pairs (columns strictly increasing, coefficients nonzero).
///
/// Fraction-free elimination: the pivot row is the shortest remaining row,
/// the pivot entry prefers `±1`, and updated rows are divided by their
/// content. This keeps the stacked-identity homomorphism systems produced by
/// the brick constructions essentially integer-small throughout.
pub fn sparse_rank(rows: Vec<Vec<(u32, BigInt)>>, ncols: usize) -> usize {
    let _ = ncols;
    let mut active: Vec<Vec<(u32, BigInt)>> = rows
        .into_iter()
        .map(normalize_row)
        .filter(|r| !r.is_empty())
        .collect();
    let mut rank = 0;
    while !active.is_empty() {
        // Shortest row wins; ties by first column, then insertion order.
        let mut best = 0;
        for i in 1..active.len() {
            let (la, ca) = (active[i].len(), active[i][0].0);
            let (lb, cb) = (active[best].len(), active[best][0].0);
            if la < lb || (la == lb && ca < cb) {
                best = i;
            }
        }
        let pivot_row = active.remove(best);
        rank += 1;

        // Prefer a unit pivot; otherwise smallest |coefficient|.
        let (pcol, pval) = pivot_row
            .iter()
            .min_by(|(ca, va), (cb, vb)| {
                let ma = va.magnitude();
                let mb = vb.magnitude();
                ma.cmp(mb).then(ca.cmp(cb))
            })
            .map(|(c, v)| (*c, v.clone()))
            .expect("nonempty row");

        let mut i = 0;
        while i < active.len() {
            let pos = active[i].binary_search_by_key(&pcol, |(c, _)| *c);
            let Ok(pos) = pos else {
                i += 1;
                continue;
            };
            let coef = active[i][pos].1.clone();
            let g = pval.gcd(&coef);
            let row_mult = &pval / &g;
            let piv_mult = &coef / &g;
            let merged = row_combine(&active[i], &row_mult, &pivot_row, &piv_mult);
            if merged.is_empty() {
                active.swap_remove(i);
            } else {
                active[i] = merged;
                i += 1;
            }
        }
    }
    rank
}

fn normalize_row(mut row: Vec<(u32, BigInt)>) -> Vec<(u32, BigInt)> {
    row.retain(|(_, v)| !v.is_zero());
    let mut g = BigInt::zero();
    for (_, v) in &row {
        g = g.gcd(v);
    }
    if g > BigInt::one() {
        for (_, v) in &mut row {
            *v /= &g;
        }
    }
    row
}

// row_mult·row - piv_mult·pivot, merged by column, then content-reduced.
fn row_combine(
    row: &[(u32, BigInt)],
    row_mult: &BigInt,
    pivot: &[(u32, BigInt)],
    piv_mult: &BigInt,
) -> Vec<(u32, BigInt)> {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        if j == pivot.len() || (i < row.len() && row[i].0 < pivot[j].0) {
            out.push((row[i].0, &row[i].1 * row_mult));
            i += 1;
        } else if i == row.len() || pivot[j].0 < row[i].0 {
            out.push((pivot[j].0, -(&pivot[j].1 * piv_mult)));
            j += 1;
        } else {
            let v = &row[i].1 * row_mult - &pivot[j].1 * piv_mult;
            if !v.is_zero() {
                out.push((row[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    normalize_row(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[Vec<i64>]) -> ExactMatrix {
        ExactMatrix::from_int_rows(rows).unwrap()
    }

    #[test]
    fn rank_and_rref() {
        let a = m(&[vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        assert_eq!(ExactMatrix::identity(4).rank(), 4);
        assert_eq!(ExactMatrix::zero(3, 5).rank(), 0);
    }

    #[test]
    fn right_kernel_is_annihilated() {
        let a = m(&[vec![1, 2, 3, 4], vec![0, 1, 1, 0]]);
        let k = a.right_kernel_basis();
        assert_eq!(k.rows(), 2);
        for r in 0..k.rows() {
            for row in 0..a.rows() {
                let mut acc = BigRational::zero();
                for c in 0..a.cols() {
                    acc += a.get(row, c) * k.get(r, c);
                }
                assert!(acc.is_zero());
            }
        }
        assert!(k.is_integral());
    }

    #[test]
    fn left_kernel_of_stacked_identity() {
        // x·[I; I] = 0 forces x = (y, -y): kernel of dimension 2.
        let id = ExactMatrix::identity(2);
        let s = ExactMatrix::vstack(&[&id, &id]);
        let k = s.left_kernel_basis();
        assert_eq!(k.rows(), 2);
        for r in 0..k.rows() {
            for c in 0..s.cols() {
                let mut acc = BigRational::zero();
                for t in 0..s.rows() {
                    acc += k.get(r, t) * s.get(t, c);
                }
                assert!(acc.is_zero());
            }
        }
    }

    #[test]
    fn kernel_basis_deterministic() {
        let a = m(&[vec![1, 3, 1, 0], vec![0, 0, 1, 1]]);
        let k1 = a.right_kernel_basis();
        let k2 = a.right_kernel_basis();
        assert_eq!(k1, k2);
    }

    #[test]
    fn sparse_rank_matches_dense() {
        let cases = vec![
            vec![vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]],
            vec![vec![0, 0], vec![0, 0]],
            vec![vec![2, 4], vec![3, 6], vec![5, 11]],
            vec![
                vec![1, 0, 0, 5],
                vec![0, 2, 0, 7],
                vec![0, 0, 3, 9],
                vec![1, 2, 3, 21],
            ],
        ];
        for rows in cases {
            let dense = m(&rows);
            let sparse: Vec<Vec<(u32, BigInt)>> = rows
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|(_, &v)| v != 0)
                        .map(|(c, &v)| (c as u32, BigInt::from(v)))
                        .collect()
                })
                .collect();
            assert_eq!(sparse_rank(sparse, dense.cols()), dense.rank());
        }
    }

    #[test]
    fn jordan_and_shift_shapes() {
        let j = ExactMatrix::jordan_nilpotent(3);
        assert_eq!(j.get(0, 1), &BigRational::one());
        assert_eq!(j.get(1, 2), &BigRational::one());
        assert!(j.get(0, 0).is_zero());
        assert_eq!(ExactMatrix::jordan_nilpotent(1), ExactMatrix::zero(1, 1));
    }
}
