//! Dense matrices over a finite field, with exact elimination.
//!
//! Subspaces are always handled as row spaces; pivot choice in `rref` is
//! leftmost nonzero column, topmost row, so every echelon form and every
//! complement/coset choice downstream is deterministic.

use crate::error::{Error, Result};
use crate::field::{Elt, Field};
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Elt>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows.min(12) {
            writeln!(f, "  {:?}", &self.row(r)[..self.cols.min(20)])?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(field: &Field, rows: Vec<Vec<Elt>>) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |v| v.len());
        let mut data = Vec::with_capacity(r * c);
        for row in &rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend_from_slice(row);
        }
        Matrix {
            field: field.clone(),
            rows: r,
            cols: c,
            data,
        }
    }

    pub fn from_fn(field: &Field, rows: usize, cols: usize, f: impl Fn(usize, usize) -> Elt) -> Matrix {
        let mut m = Self::zeros(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Elt {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Elt) {
        self.data[r * self.cols + c] = v;
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[Elt] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn rows_iter(&self) -> impl Iterator<Item = &[Elt]> {
        self.data.chunks(self.cols.max(1)).take(self.rows)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..self.cols).all(|j| self.get(i, j) == u32::from(i == j)))
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Self::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = &self.field;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f.add(a, b))
            .collect();
        Matrix {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = &self.field;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f.sub(a, b))
            .collect();
        Matrix {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn neg(&self) -> Matrix {
        let f = &self.field;
        Matrix {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| f.neg(a)).collect(),
        }
    }

    pub fn scale(&self, c: Elt) -> Matrix {
        let f = &self.field;
        Matrix {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| f.mul(a, c)).collect(),
        }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let f = &self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            let orow = i * other.cols;
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                let brow = k * other.cols;
                if a == 1 {
                    for j in 0..other.cols {
                        let v = f.add(out.data[orow + j], other.data[brow + j]);
                        out.data[orow + j] = v;
                    }
                } else {
                    for j in 0..other.cols {
                        let v = f.add(out.data[orow + j], f.mul(a, other.data[brow + j]));
                        out.data[orow + j] = v;
                    }
                }
            }
        }
        out
    }

    /// Matrix power by repeated squaring.
    pub fn pow(&self, mut e: u64) -> Matrix {
        assert_eq!(self.rows, self.cols);
        let mut acc = Self::identity(&self.field, self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Apply to a column vector.
    pub fn mul_vec(&self, v: &[Elt]) -> Vec<Elt> {
        assert_eq!(v.len(), self.cols);
        let f = &self.field;
        let mut out = vec![0; self.rows];
        for i in 0..self.rows {
            let mut acc = 0;
            let row = self.row(i);
            for (a, &x) in row.iter().zip(v) {
                if *a != 0 && x != 0 {
                    acc = f.add(acc, f.mul(*a, x));
                }
            }
            out[i] = acc;
        }
        out
    }

    /// Kronecker product (tensor product of linear maps).
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let f = &self.field;
        let mut out = Self::zeros(f, self.rows * other.rows, self.cols * other.cols);
        for i1 in 0..self.rows {
            for j1 in 0..self.cols {
                let a = self.get(i1, j1);
                if a == 0 {
                    continue;
                }
                for i2 in 0..other.rows {
                    for j2 in 0..other.cols {
                        let b = other.get(i2, j2);
                        if b != 0 {
                            out.set(i1 * other.rows + i2, j1 * other.cols + j2, f.mul(a, b));
                        }
                    }
                }
            }
        }
        out
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        let mut out = Self::zeros(&self.field, self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            out.data[i * out.cols..i * out.cols + self.cols].copy_from_slice(self.row(i));
            out.data[i * out.cols + self.cols..(i + 1) * out.cols].copy_from_slice(other.row(i));
        }
        out
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix {
            field: self.field.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn block_diag(field: &Field, blocks: &[&Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(field, rows, cols);
        let (mut ro, mut co) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out.set(ro + i, co + j, b.get(i, j));
                }
            }
            ro += b.rows;
            co += b.cols;
        }
        out
    }

    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Matrix {
        let mut out = Self::zeros(&self.field, rows.len(), cols.len());
        for (io, i) in rows.clone().enumerate() {
            for (jo, j) in cols.clone().enumerate() {
                out.set(io, jo, self.get(i, j));
            }
        }
        out
    }

    /// Reduced row echelon form. Row space is preserved; pivot choice is
    /// the leftmost nonzero column, topmost available row.
    pub fn rref(&self) -> (Matrix, usize, Vec<usize>) {
        let mut m = self.clone();
        let f = m.field.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            // find pivot row
            let mut pr = None;
            for i in r..m.rows {
                if m.get(i, c) != 0 {
                    pr = Some(i);
                    break;
                }
            }
            let Some(pr) = pr else { continue };
            m.swap_rows(r, pr);
            let inv = f.inv(m.get(r, c));
            if inv != 1 {
                let row = &mut m.data[r * m.cols..(r + 1) * m.cols];
                for x in row.iter_mut() {
                    *x = f.mul(*x, inv);
                }
            }
            for i in 0..m.rows {
                if i != r {
                    let factor = m.get(i, c);
                    if factor != 0 {
                        m.row_axpy(i, r, f.neg(factor));
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, r, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// row[dst] += c * row[src]
    fn row_axpy(&mut self, dst: usize, src: usize, c: Elt) {
        let f = self.field.clone();
        let cols = self.cols;
        let (d, s) = if dst < src {
            let (lo, hi) = self.data.split_at_mut(src * cols);
            (&mut lo[dst * cols..(dst + 1) * cols], &hi[..cols])
        } else {
            let (lo, hi) = self.data.split_at_mut(dst * cols);
            (&mut hi[..cols], &lo[src * cols..(src + 1) * cols])
        };
        for (x, &y) in d.iter_mut().zip(s) {
            if y != 0 {
                *x = f.add(*x, f.mul(c, y));
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// Basis of the right null space {v : M v = 0}, one vector per row.
    pub fn kernel_basis(&self) -> Matrix {
        let (r, rank, pivots) = self.rref();
        let f = &self.field;
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Self::zeros(f, free.len(), self.cols);
        for (k, &fc) in free.iter().enumerate() {
            out.set(k, fc, 1);
            for (pi, &pc) in pivots.iter().enumerate().take(rank) {
                out.set(k, pc, f.neg(r.get(pi, fc)));
            }
        }
        out
    }

    /// Basis of the row space (the nonzero rows of the rref).
    pub fn row_space(&self) -> Matrix {
        let (r, rank, _) = self.rref();
        r.submatrix(0..rank, 0..self.cols)
    }

    /// Basis of the column space, returned as rows of the transpose.
    pub fn column_space(&self) -> Matrix {
        self.transpose().row_space()
    }

    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols);
        let aug = self.hstack(&Self::identity(&self.field, self.rows));
        let (r, rank, _) = aug.rref();
        if rank < self.rows {
            return None;
        }
        // pivots must occupy the left block exactly when rank = n
        for i in 0..self.rows {
            if r.get(i, i) != 1 {
                return None;
            }
        }
        Some(r.submatrix(0..self.rows, self.cols..2 * self.cols))
    }

    /// Solve self * X = rhs for X; None if inconsistent.
    pub fn solve_right(&self, rhs: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, rhs.rows);
        let aug = self.hstack(rhs);
        let (r, _, pivots) = aug.rref();
        if pivots.iter().any(|&c| c >= self.cols) {
            return None; // a pivot fell in the rhs block
        }
        let f = &self.field;
        let mut x = Self::zeros(f, self.cols, rhs.cols);
        for (pi, &pc) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(pc, j, r.get(pi, self.cols + j));
            }
        }
        Some(x)
    }

    /// Intersection of two row spaces via the Zassenhaus double block.
    pub fn subspace_intersect(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.cols {
            return Err(Error::AmbientMismatch);
        }
        let n = self.cols;
        let f = &self.field;
        let top = self.hstack(self);
        let bot = other.hstack(&Self::zeros(f, other.rows, n));
        let (r, rank, _) = top.vstack(&bot).rref();
        let mut rows = Vec::new();
        for i in 0..rank {
            if r.row(i)[..n].iter().all(|&x| x == 0) {
                rows.push(r.row(i)[n..].to_vec());
            }
        }
        Ok(Self::from_rows_with_width(f, rows, n))
    }

    /// Sum of two row spaces.
    pub fn subspace_sum(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.cols {
            return Err(Error::AmbientMismatch);
        }
        Ok(self.vstack(other).row_space())
    }

    pub fn from_rows_with_width(field: &Field, rows: Vec<Vec<Elt>>, width: usize) -> Matrix {
        if rows.is_empty() {
            return Self::zeros(field, 0, width);
        }
        Self::from_rows(field, rows)
    }

    /// Flatten to one long row vector, row-major.
    pub fn vectorize(&self) -> Vec<Elt> {
        self.data.clone()
    }

    pub fn from_vec(field: &Field, rows: usize, cols: usize, data: Vec<Elt>) -> Matrix {
        assert_eq!(data.len(), rows * cols);
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data,
        }
    }

    pub fn random<R: rand::Rng>(field: &Field, rows: usize, cols: usize, rng: &mut R) -> Matrix {
        let data = (0..rows * cols).map(|_| field.sample(rng)).collect();
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data,
        }
    }
}

/// Incrementally maintained reduced echelon basis of a row space.
///
/// Rows are kept fully reduced with unit pivots sorted by pivot column,
/// so the spanned space has one canonical representation no matter the
/// insertion order.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: Field,
    width: usize,
    rows: Vec<Vec<Elt>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(field: &Field, width: usize) -> Echelon {
        Echelon {
            field: field.clone(),
            width,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_matrix(m: &Matrix) -> Echelon {
        let mut e = Echelon::new(m.field(), m.cols());
        for r in m.rows_iter() {
            e.insert(r.to_vec());
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduce v against the current basis, in place.
    pub fn reduce(&self, v: &mut [Elt]) {
        let f = &self.field;
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let c = v[pc];
            if c != 0 {
                let nc = f.neg(c);
                for (x, &y) in v.iter_mut().zip(row) {
                    if y != 0 {
                        *x = f.add(*x, f.mul(nc, y));
                    }
                }
            }
        }
    }

    pub fn contains(&self, v: &[Elt]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }

    /// Insert a vector; returns true if it enlarged the space.
    pub fn insert(&mut self, mut v: Vec<Elt>) -> bool {
        assert_eq!(v.len(), self.width);
        self.reduce(&mut v);
        let Some(pc) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let f = self.field.clone();
        let inv = f.inv(v[pc]);
        if inv != 1 {
            for x in v.iter_mut() {
                *x = f.mul(*x, inv);
            }
        }
        // clear the new pivot column from the existing rows
        for row in self.rows.iter_mut() {
            let c = row[pc];
            if c != 0 {
                let nc = f.neg(c);
                for (x, &y) in row.iter_mut().zip(&v) {
                    if y != 0 {
                        *x = f.add(*x, f.mul(nc, y));
                    }
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < pc);
        self.rows.insert(at, v);
        self.pivots.insert(at, pc);
        true
    }

    pub fn basis(&self) -> Matrix {
        Matrix::from_rows_with_width(&self.field, self.rows.clone(), self.width)
    }

    /// Standard basis vectors for the non-pivot columns: a deterministic
    /// complement of the spanned space.
    pub fn complement(&self) -> Matrix {
        let mut rows = Vec::new();
        for c in 0..self.width {
            if !self.pivots.contains(&c) {
                let mut v = vec![0; self.width];
                v[c] = 1;
                rows.push(v);
            }
        }
        Matrix::from_rows_with_width(&self.field, rows, self.width)
    }

    /// Coordinates of v in the span, if it lies there: returns x with
    /// x * basis = v.
    pub fn coordinates(&self, v: &[Elt]) -> Option<Vec<Elt>> {
        let f = &self.field;
        let mut w = v.to_vec();
        let mut coords = vec![0; self.rows.len()];
        for (i, (row, &pc)) in self.rows.iter().zip(&self.pivots).enumerate() {
            let c = w[pc];
            if c != 0 {
                coords[i] = c;
                let nc = f.neg(c);
                for (x, &y) in w.iter_mut().zip(row) {
                    if y != 0 {
                        *x = f.add(*x, f.mul(nc, y));
                    }
                }
            }
        }
        if w.iter().all(|&x| x == 0) {
            Some(coords)
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32) -> Field {
        Field::gf(p, 1).unwrap()
    }

    #[test]
    fn rref_examples() {
        let f = gf(5);
        let id = Matrix::identity(&f, 4);
        let (r, rank, _) = id.rref();
        assert_eq!(rank, 4);
        assert!(r.is_identity());

        let z = Matrix::zeros(&f, 3, 5);
        assert_eq!(z.rank(), 0);

        // [[1,1],[1,1]] over GF(2) has rank 1
        let f2 = gf(2);
        let m = Matrix::from_rows(&f2, vec![vec![1, 1], vec![1, 1]]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kernel_examples() {
        let f = gf(3);
        assert_eq!(Matrix::identity(&f, 3).kernel_basis().rows(), 0);
        assert_eq!(Matrix::zeros(&f, 2, 3).kernel_basis().rows(), 3);

        let f2 = gf(2);
        let m = Matrix::from_rows(&f2, vec![vec![1, 1]]);
        let k = m.kernel_basis();
        assert_eq!(k.rows(), 1);
        assert_eq!(k.row(0), &[1, 1]);
        // kernel rows really are annihilated
        for r in 0..k.rows() {
            assert!(m.mul_vec(k.row(r)).iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn rank_plus_nullity() {
        let mut rng = crate::testutil::rng(7);
        for p in [2, 3, 5] {
            let f = gf(p);
            for _ in 0..30 {
                use rand::Rng;
                let r = rng.gen_range(1..6);
                let c = rng.gen_range(1..6);
                let m = Matrix::random(&f, r, c, &mut rng);
                assert_eq!(m.rank() + m.kernel_basis().rows(), c);
                assert_eq!(m.rank(), m.rref().0.rank());
                assert_eq!(m.rank(), m.transpose().rank());
            }
        }
    }

    #[test]
    fn intersect_examples() {
        let f = gf(3);
        let a = Matrix::from_rows(&f, vec![vec![1, 0], vec![0, 1]]);
        let i = a.subspace_intersect(&a).unwrap();
        assert_eq!(i.rank(), 2);

        // complementary lines in GF(3)^2
        let l1 = Matrix::from_rows(&f, vec![vec![1, 0]]);
        let l2 = Matrix::from_rows(&f, vec![vec![0, 1]]);
        assert_eq!(l1.subspace_intersect(&l2).unwrap().rank(), 0);

        // two distinct planes in GF(2)^3 meet in a line
        let f2 = gf(2);
        let p1 = Matrix::from_rows(&f2, vec![vec![1, 0, 0], vec![0, 1, 0]]);
        let p2 = Matrix::from_rows(&f2, vec![vec![0, 1, 0], vec![0, 0, 1]]);
        let m = p1.subspace_intersect(&p2).unwrap();
        assert_eq!(m.rank(), 1);
        // dimension formula
        let s = p1.subspace_sum(&p2).unwrap();
        assert_eq!(m.rank() + s.rank(), p1.rank() + p2.rank());
    }

    #[test]
    fn solve_and_inverse() {
        let f = gf(7);
        let mut rng = crate::testutil::rng(11);
        for _ in 0..20 {
            let a = Matrix::random(&f, 4, 4, &mut rng);
            if let Some(inv) = a.inverse() {
                assert!(a.mul(&inv).is_identity());
                let b = Matrix::random(&f, 4, 2, &mut rng);
                let x = a.solve_right(&b).unwrap();
                assert_eq!(a.mul(&x), b);
            }
        }
        // inconsistent system
        let a = Matrix::from_rows(&f, vec![vec![1, 0], vec![1, 0]]);
        let b = Matrix::from_rows(&f, vec![vec![1], vec![2]]);
        assert!(a.solve_right(&b).is_none());
    }

    #[test]
    fn echelon_tracks_coordinates() {
        let f = gf(5);
        let mut e = Echelon::new(&f, 3);
        assert!(e.insert(vec![1, 2, 3]));
        assert!(e.insert(vec![0, 1, 1]));
        assert!(!e.insert(vec![2, 4, 6]));
        let v = vec![1, 3, 4]; // (1,2,3) + (0,1,1)
        let c = e.coordinates(&v).unwrap();
        let b = e.basis();
        let mut back = vec![0; 3];
        for (i, coef) in c.iter().enumerate() {
            for j in 0..3 {
                back[j] = f.add(back[j], f.mul(*coef, b.get(i, j)));
            }
        }
        assert_eq!(back, v);
        assert!(e.coordinates(&[1, 0, 0]).is_none());
        assert_eq!(e.complement().rows(), 1);
    }

    #[test]
    fn kron_shapes() {
        let f = gf(2);
        let a = Matrix::identity(&f, 2);
        let b = Matrix::from_rows(&f, vec![vec![1, 1], vec![0, 1]]);
        let k = a.kron(&b);
        assert_eq!((k.rows(), k.cols()), (4, 4));
        assert_eq!(k.submatrix(0..2, 0..2), b);
        assert!(k.submatrix(0..2, 2..4).is_zero());
    }
}
