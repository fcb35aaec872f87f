//! Exact dense linear algebra over a prime field `F_p`.
//!
//! Every question the rest of the crate asks (Hom spaces, kernels, traces,
//! normal forms of paths) is eventually a rank or null-space computation on a
//! [`Matrix`] defined here. Elimination always pivots on the first nonzero
//! entry in column order, so results are reproducible bit for bit.

use std::fmt;

use crate::error::{Error, Result};

/// A prime field `F_p`. Elements are residues in `[0, p)` stored as `u32`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldPrime {
    p: u32,
}

impl Default for FieldPrime {
    fn default() -> Self {
        FieldPrime { p: 2 }
    }
}

impl FieldPrime {
    pub fn new(p: u32) -> Result<Self> {
        if p < 2 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldPrime { p })
    }

    #[inline]
    pub fn p(self) -> u32 {
        self.p
    }

    #[inline]
    pub fn reduce(self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        (s % self.p as u64) as u32
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            self.p - (b - a)
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(self, a: u32) -> u32 {
        assert!(a != 0, "inverse of zero in F_{}", self.p);
        // extended Euclid on (a, p)
        let (mut r0, mut r1) = (self.p as i64, a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        self.reduce(t0)
    }

    /// Number of field elements raised to `exp`, saturating at `u64::MAX`.
    pub fn count_pow(self, exp: usize) -> u64 {
        let mut acc: u64 = 1;
        for _ in 0..exp {
            acc = acc.saturating_mul(self.p as u64);
        }
        acc
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n as u64 {
        if n as u64 % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Dense row-major matrix with entries in a prime field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: FieldPrime,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix<F{}>{}x{}[", self.field.p, self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
        }
        write!(f, "]")
    }
}

/// Row-reduced echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub reduced: Matrix,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(field: FieldPrime, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: FieldPrime, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from row-major entries, reducing each modulo `p`.
    pub fn from_entries(field: FieldPrime, rows: usize, cols: usize, entries: &[i64]) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "expected {} entries for a {}x{} matrix, got {}",
                rows * cols,
                rows,
                cols,
                entries.len()
            )));
        }
        Ok(Matrix {
            field,
            rows,
            cols,
            data: entries.iter().map(|&v| field.reduce(v)).collect(),
        })
    }

    pub fn from_rows(field: FieldPrime, rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = Matrix::zeros(field, rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged rows");
            for (c, &v) in row.iter().enumerate() {
                m.set(r, c, field.reduce(v));
            }
        }
        m
    }

    /// A single column vector.
    pub fn column(field: FieldPrime, v: &[u32]) -> Self {
        Matrix {
            field,
            rows: v.len(),
            cols: 1,
            data: v.iter().map(|&x| x % field.p).collect(),
        }
    }

    #[inline]
    pub fn field(&self) -> FieldPrime {
        self.field
    }
    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }
    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }
    #[inline]
    pub fn entries(&self) -> &[u32] {
        &self.data
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v % self.field.p;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn col(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c);
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = self.field;
        let p = f.p as u64;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for r in 0..self.rows {
            let mut acc = vec![0u64; other.cols];
            for k in 0..self.cols {
                let a = self.get(r, k) as u64;
                if a == 0 {
                    continue;
                }
                let orow = other.row(k);
                for (c, slot) in acc.iter_mut().enumerate() {
                    *slot = (*slot + a * orow[c] as u64) % p;
                }
            }
            for (c, v) in acc.into_iter().enumerate() {
                out.data[r * other.cols + c] = v as u32;
            }
        }
        Ok(out)
    }

    /// Product for shapes already known to agree.
    pub fn dot(&self, other: &Matrix) -> Matrix {
        self.mul(other).expect("matrix shapes checked by caller")
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_shape(other)?;
        let f = self.field;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f.add(a, b))
            .collect();
        Ok(Matrix { data, field: self.field, rows: self.rows, cols: self.cols })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_shape(other)?;
        let f = self.field;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f.sub(a, b))
            .collect();
        Ok(Matrix { data, field: self.field, rows: self.rows, cols: self.cols })
    }

    pub fn scale(&self, s: u32) -> Matrix {
        let f = self.field;
        Matrix {
            data: self.data.iter().map(|&a| f.mul(a, s)).collect(),
            field: self.field, rows: self.rows, cols: self.cols
        }
    }

    fn check_same_shape(&self, other: &Matrix) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.rows != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "hstack of {} and {} rows",
                self.rows, other.rows
            )));
        }
        let mut out = Matrix::zeros(self.field, self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            out.data[r * out.cols..r * out.cols + self.cols].copy_from_slice(self.row(r));
            out.data[r * out.cols + self.cols..(r + 1) * out.cols].copy_from_slice(other.row(r));
        }
        Ok(out)
    }

    /// `[self; other]`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.cols {
            return Err(Error::ShapeMismatch(format!(
                "vstack of {} and {} columns",
                self.cols, other.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix {
            field: self.field,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Concatenates column blocks that share a row count.
    pub fn hcat(field: FieldPrime, rows: usize, blocks: &[Matrix]) -> Matrix {
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.rows, rows, "hcat row mismatch");
            out.set_block(0, off, b);
            off += b.cols;
        }
        out
    }

    /// Block-diagonal matrix.
    pub fn block_diag(field: FieldPrime, blocks: &[Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            out.set_block(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Matrix) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.data[(r0 + r) * self.cols + c0 + c] = block.get(r, c);
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        let mut out = Matrix::zeros(self.field, rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                out.data[r * cols + c] = self.get(r0 + r, c0 + c);
            }
        }
        out
    }

    pub fn select_cols(&self, cols: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                out.data[r * cols.len() + j] = self.get(r, c);
            }
        }
        out
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.field, rows.len(), self.cols);
        for (i, &r) in rows.iter().enumerate() {
            out.data[i * self.cols..(i + 1) * self.cols].copy_from_slice(self.row(r));
        }
        out
    }

    /// Reduced row echelon form. Pivot search scans columns left to right and
    /// takes the first row with a nonzero entry.
    pub fn echelon(&self) -> Echelon {
        let f = self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut prow = 0;
        for c in 0..m.cols {
            if prow == m.rows {
                break;
            }
            let Some(r) = (prow..m.rows).find(|&r| m.get(r, c) != 0) else {
                continue;
            };
            m.swap_rows(r, prow);
            let inv = f.inv(m.get(prow, c));
            m.scale_row(prow, inv);
            for r2 in 0..m.rows {
                if r2 != prow {
                    let factor = m.get(r2, c);
                    if factor != 0 {
                        m.axpy_row(r2, prow, f.neg(factor));
                    }
                }
            }
            pivots.push(c);
            prow += 1;
        }
        Echelon { reduced: m, pivots }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, s: u32) {
        let f = self.field;
        for c in 0..self.cols {
            let i = r * self.cols + c;
            self.data[i] = f.mul(self.data[i], s);
        }
    }

    /// row[dst] += s * row[src]
    fn axpy_row(&mut self, dst: usize, src: usize, s: u32) {
        let f = self.field;
        for c in 0..self.cols {
            let v = self.data[src * self.cols + c];
            if v != 0 {
                let i = dst * self.cols + c;
                self.data[i] = f.add(self.data[i], f.mul(v, s));
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    /// Columns form a basis of the right null space `{x : self * x = 0}`.
    /// Basis vectors are ordered by their free column, each having a 1 there.
    pub fn kernel_basis(&self) -> Matrix {
        let ech = self.echelon();
        let f = self.field;
        let free: Vec<usize> = (0..self.cols).filter(|c| !ech.pivots.contains(c)).collect();
        let mut k = Matrix::zeros(f, self.cols, free.len());
        for (j, &fc) in free.iter().enumerate() {
            k.set(fc, j, 1);
            for (i, &pc) in ech.pivots.iter().enumerate() {
                let v = ech.reduced.get(i, fc);
                if v != 0 {
                    k.set(pc, j, f.neg(v));
                }
            }
        }
        k
    }

    /// Rows form a basis of the left null space `{y : y * self = 0}`.
    pub fn left_kernel_basis(&self) -> Matrix {
        self.transpose().kernel_basis().transpose()
    }

    /// Columns of `self` that form a basis of its column space (the pivot
    /// columns of the echelon form).
    pub fn column_basis(&self) -> Matrix {
        let ech = self.echelon();
        self.select_cols(&ech.pivots)
    }

    /// Solves `self * x = b`. Returns `Ok(None)` if no solution exists.
    pub fn solve_right(&self, b: &Matrix) -> Result<Option<Matrix>> {
        if self.rows != b.rows {
            return Err(Error::ShapeMismatch(format!(
                "solve_right: {}x{} against {}x{}",
                self.rows, self.cols, b.rows, b.cols
            )));
        }
        let aug = self.hstack(b)?;
        let ech = aug.echelon();
        if ech.pivots.iter().any(|&c| c >= self.cols) {
            return Ok(None);
        }
        let mut x = Matrix::zeros(self.field, self.cols, b.cols);
        for (i, &pc) in ech.pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(pc, j, ech.reduced.get(i, self.cols + j));
            }
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let id = Matrix::identity(self.field, self.rows);
        let x = self.solve_right(&id).ok()??;
        Some(x)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn pow(&self, e: usize) -> Matrix {
        assert!(self.is_square());
        let mut result = Matrix::identity(self.field, self.rows);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.dot(&base);
            }
            base = base.dot(&base);
            e >>= 1;
        }
        result
    }

    /// Canonical form of the column space: the reduced row echelon form of
    /// the transpose with zero rows dropped.
    pub fn column_space_key(&self) -> Matrix {
        let ech = self.transpose().echelon();
        let r = ech.pivots.len();
        ech.reduced.block(0, 0, r, self.rows)
    }
}

/// Column-space utilities. Subspaces of `F_p^n` are carried as matrices whose
/// columns form a basis.
pub mod subspace {
    use super::{FieldPrime, Matrix};

    /// Basis of the sum of two subspaces.
    pub fn sum(a: &Matrix, b: &Matrix) -> Matrix {
        a.hstack(b).expect("same ambient dimension").column_basis()
    }

    /// Basis of the intersection of two subspaces of the same ambient space.
    pub fn intersection(a: &Matrix, b: &Matrix) -> Matrix {
        let f = a.field();
        let n = a.rows();
        if a.cols() == 0 || b.cols() == 0 {
            return Matrix::zeros(f, n, 0);
        }
        let joined = a.hstack(&b.scale(f.neg(1))).expect("same ambient dimension");
        let k = joined.kernel_basis();
        let coeffs = k.block(0, 0, a.cols(), k.cols());
        a.dot(&coeffs).column_basis()
    }

    /// True when every column of `a` lies in the span of `b`.
    pub fn contains(b: &Matrix, a: &Matrix) -> bool {
        if a.cols() == 0 {
            return true;
        }
        b.hstack(a).expect("same ambient dimension").rank() == b.rank()
    }

    /// Extends an independent set of columns to a basis of `F_p^n` using
    /// standard vectors; returns only the added columns.
    pub fn complement(field: FieldPrime, basis: &Matrix) -> Matrix {
        let n = basis.rows();
        let mut current = basis.clone();
        let mut added = Matrix::zeros(field, n, 0);
        let mut rank = current.rank();
        for i in 0..n {
            if rank == n {
                break;
            }
            let mut e = Matrix::zeros(field, n, 1);
            e.set(i, 0, 1);
            let trial = current.hstack(&e).unwrap();
            let r = trial.rank();
            if r > rank {
                current = trial;
                added = added.hstack(&e).unwrap();
                rank = r;
            }
        }
        added
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f2() -> FieldPrime {
        FieldPrime::new(2).unwrap()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::identity(f2(), 2).rank(), 2);
        assert_eq!(Matrix::zeros(f2(), 3, 4).rank(), 0);
        assert_eq!(Matrix::from_rows(f2(), &[vec![1, 1], vec![1, 1]]).rank(), 1);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(Matrix::identity(f2(), 3).kernel_basis().cols(), 0);
        assert_eq!(Matrix::zeros(f2(), 2, 3).kernel_basis().cols(), 3);
        let k = Matrix::from_rows(f2(), &[vec![1, 1]]).kernel_basis();
        assert_eq!(k.cols(), 1);
        assert_eq!(k.col(0), vec![1, 1]);
    }

    #[test]
    fn solve_examples() {
        let b = Matrix::from_rows(f2(), &[vec![1, 0], vec![1, 1]]);
        assert_eq!(Matrix::identity(f2(), 2).solve_right(&b).unwrap(), Some(b.clone()));

        let z = Matrix::zeros(f2(), 2, 2);
        let nb = Matrix::column(f2(), &[1, 0]);
        assert_eq!(z.solve_right(&nb).unwrap(), None);

        let m = Matrix::from_rows(f2(), &[vec![1, 1], vec![0, 1]]);
        let x = m.solve_right(&Matrix::column(f2(), &[0, 1])).unwrap().unwrap();
        assert_eq!(x.col(0), vec![1, 1]);

        assert!(matches!(
            m.solve_right(&Matrix::column(f2(), &[1, 0, 1])),
            Err(Error::ShapeMismatch(_))
        ));
    }

    #[test]
    fn inverse_mod_seven() {
        let f = FieldPrime::new(7).unwrap();
        for a in 1..7 {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
        let m = Matrix::from_rows(f, &[vec![2, 3], vec![1, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.dot(&inv), Matrix::identity(f, 2));
    }

    #[test]
    fn rejects_composite_modulus() {
        assert!(FieldPrime::new(4).is_err());
        assert!(FieldPrime::new(1).is_err());
        assert!(FieldPrime::new(13).is_ok());
    }

    #[test]
    fn intersection_and_complement() {
        let f = f2();
        let a = Matrix::from_rows(f, &[vec![1, 0], vec![0, 1], vec![0, 0]]);
        let b = Matrix::from_rows(f, &[vec![0, 0], vec![1, 0], vec![0, 1]]);
        let i = subspace::intersection(&a, &b);
        assert_eq!(i.cols(), 1);
        assert_eq!(i.col(0), vec![0, 1, 0]);
        let c = subspace::complement(f, &a);
        assert_eq!(c.cols(), 1);
        assert_eq!(a.hstack(&c).unwrap().rank(), 3);
    }

    fn arb_matrix() -> impl Strategy<Value = Matrix> {
        (prop::sample::select(vec![2u32, 3, 5]), 0usize..6, 0usize..6).prop_flat_map(|(p, r, c)| {
            prop::collection::vec(0i64..(p as i64), r * c).prop_map(move |e| {
                Matrix::from_entries(FieldPrime::new(p).unwrap(), r, c, &e).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(m in arb_matrix()) {
            let k = m.kernel_basis();
            prop_assert_eq!(m.rank() + k.cols(), m.cols());
            prop_assert!(m.dot(&k).is_zero());
            prop_assert_eq!(k.rank(), k.cols());
        }

        #[test]
        fn solutions_are_exact(m in arb_matrix(), seed in any::<u64>()) {
            let f = m.field();
            let mut s = seed;
            let x: Vec<u32> = (0..m.cols()).map(|_| { s = s.wrapping_mul(6364136223846793005).wrapping_add(1); ((s >> 33) % f.p() as u64) as u32 }).collect();
            let b = m.dot(&Matrix::column(f, &x));
            let sol = m.solve_right(&b).unwrap().expect("consistent system");
            prop_assert_eq!(m.dot(&sol), b);
        }

        #[test]
        fn elimination_is_deterministic(m in arb_matrix()) {
            let a = m.echelon();
            let b = m.clone().echelon();
            prop_assert_eq!(a.reduced, b.reduced);
            prop_assert_eq!(a.pivots, b.pivots);
        }
    }
}
