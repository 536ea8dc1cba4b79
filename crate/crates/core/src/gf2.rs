//! Dense matrices over the two-element field with bit-packed rows.

use std::fmt;

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let line: String = (0..self.cols)
                .map(|c| if self.get(r, c) { '1' } else { '.' })
                .collect();
            writeln!(f, "  {line}")?;
        }
        Ok(())
    }
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = cols.div_ceil(WORD);
        BitMatrix { rows, cols, stride, data: vec![0; rows * stride] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from `(row, col)` positions holding a one. Repeated positions cancel.
    pub fn from_entries(rows: usize, cols: usize, entries: &[(usize, usize)]) -> Self {
        let mut m = Self::zeros(rows, cols);
        for &(r, c) in entries {
            m.toggle(r, c);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        debug_assert!(r < self.rows && c < self.cols);
        (self.data[r * self.stride + c / WORD] >> (c % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        debug_assert!(r < self.rows && c < self.cols);
        let word = &mut self.data[r * self.stride + c / WORD];
        let bit = 1u64 << (c % WORD);
        if value {
            *word |= bit;
        } else {
            *word &= !bit;
        }
    }

    #[inline]
    pub fn toggle(&mut self, r: usize, c: usize) {
        debug_assert!(r < self.rows && c < self.cols);
        self.data[r * self.stride + c / WORD] ^= 1u64 << (c % WORD);
    }

    fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.stride..(r + 1) * self.stride]
    }

    fn xor_row_into(&mut self, src: usize, dst: usize) {
        let (s, d) = (src * self.stride, dst * self.stride);
        for k in 0..self.stride {
            let w = self.data[s + k];
            self.data[d + k] ^= w;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    /// Positions of all ones in row-major order.
    pub fn entries(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for r in 0..self.rows {
            for (k, &w) in self.row(r).iter().enumerate() {
                let mut bits = w;
                while bits != 0 {
                    let b = bits.trailing_zeros() as usize;
                    out.push((r, k * WORD + b));
                    bits &= bits - 1;
                }
            }
        }
        out
    }

    pub fn first_nonzero(&self) -> Option<(usize, usize)> {
        for r in 0..self.rows {
            for (k, &w) in self.row(r).iter().enumerate() {
                if w != 0 {
                    return Some((r, k * WORD + w.trailing_zeros() as usize));
                }
            }
        }
        None
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for (r, c) in self.entries() {
            t.set(c, r, true);
        }
        t
    }

    /// Sum over the two-element field. Panics on shape mismatch.
    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.shape(), other.shape(), "BitMatrix::add shape mismatch");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a ^ b).collect();
        BitMatrix { data, ..*self }
    }

    pub fn add_assign(&mut self, other: &Self) {
        assert_eq!(self.shape(), other.shape(), "BitMatrix::add_assign shape mismatch");
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a ^= b;
        }
    }

    /// Matrix product `self * other`. Panics on shape mismatch.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "BitMatrix::mul shape mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            let base = r * out.stride;
            for (k, &w) in self.row(r).iter().enumerate() {
                let mut bits = w;
                while bits != 0 {
                    let inner = k * WORD + bits.trailing_zeros() as usize;
                    let src = other.row(inner);
                    for (j, &x) in src.iter().enumerate() {
                        out.data[base + j] ^= x;
                    }
                    bits &= bits - 1;
                }
            }
        }
        out
    }

    /// Product of a chain of matrices, left to right.
    pub fn chain(factors: &[&BitMatrix]) -> Self {
        let (first, rest) = factors.split_first().expect("empty product");
        rest.iter().fold((*first).clone(), |acc, m| acc.mul(m))
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.row_reduce().len()
    }

    /// Reduces in place to reduced row echelon form; returns pivot columns.
    fn row_reduce(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut next = 0;
        for c in 0..self.cols {
            if next == self.rows {
                break;
            }
            let Some(p) = (next..self.rows).find(|&r| self.get(r, c)) else {
                continue;
            };
            if p != next {
                for k in 0..self.stride {
                    self.data.swap(p * self.stride + k, next * self.stride + k);
                }
            }
            for r in 0..self.rows {
                if r != next && self.get(r, c) {
                    self.xor_row_into(next, r);
                }
            }
            pivots.push(c);
            next += 1;
        }
        pivots
    }

    /// Columns spanning the kernel, as a `cols × k` matrix.
    pub fn kernel(&self) -> Self {
        let mut m = self.clone();
        let pivots = m.row_reduce();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut basis = Self::zeros(self.cols, free.len());
        for (j, &f) in free.iter().enumerate() {
            basis.set(f, j, true);
            for (i, &p) in pivots.iter().enumerate() {
                if m.get(i, f) {
                    basis.set(p, j, true);
                }
            }
        }
        basis
    }

    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        let mut out = Self::zeros(self.rows, self.cols + other.cols);
        for (r, c) in self.entries() {
            out.set(r, c, true);
        }
        for (r, c) in other.entries() {
            out.set(r, self.cols + c, true);
        }
        out
    }

    /// Assembles `[[a, b], [c, d]]`. Row counts of `a`,`b` and of `c`,`d` must agree, and so on.
    pub fn block2(a: &Self, b: &Self, c: &Self, d: &Self) -> Self {
        assert_eq!(a.rows, b.rows, "block2 top row mismatch");
        assert_eq!(c.rows, d.rows, "block2 bottom row mismatch");
        assert_eq!(a.cols, c.cols, "block2 left column mismatch");
        assert_eq!(b.cols, d.cols, "block2 right column mismatch");
        let mut out = Self::zeros(a.rows + c.rows, a.cols + b.cols);
        let place = |out: &mut Self, m: &Self, dr: usize, dc: usize| {
            for (r, col) in m.entries() {
                out.set(r + dr, col + dc, true);
            }
        };
        place(&mut out, a, 0, 0);
        place(&mut out, b, 0, a.cols);
        place(&mut out, c, a.rows, 0);
        place(&mut out, d, a.rows, a.cols);
        out
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &Self) -> Self {
        Self::block2(
            self,
            &Self::zeros(self.rows, other.cols),
            &Self::zeros(other.rows, self.cols),
            other,
        )
    }

    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut out = Self::zeros(rows.len(), cols.len());
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                if self.get(r, c) {
                    out.set(i, j, true);
                }
            }
        }
        out
    }
}

/// Rank of the map induced on homology by a chain map `f: (A, da) -> (B, db)`.
pub fn induced_rank(f: &BitMatrix, da: &BitMatrix, db: &BitMatrix) -> usize {
    let cycles = da.kernel();
    let images = f.mul(&cycles);
    images.hstack(db).rank() - db.rank()
}

/// Total homology dimension of a square differential.
pub fn homology_dim(d: &BitMatrix) -> usize {
    d.cols() - 2 * d.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_rank_and_kernel() {
        let id = BitMatrix::identity(70);
        assert_eq!(id.rank(), 70);
        assert_eq!(id.kernel().cols(), 0);
        assert_eq!(BitMatrix::zeros(3, 5).kernel().cols(), 5);
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let m = BitMatrix::from_entries(3, 4, &[(0, 0), (0, 1), (1, 1), (1, 2), (2, 0), (2, 2)]);
        let k = m.kernel();
        assert_eq!(k.cols(), 4 - m.rank());
        assert!(m.mul(&k).is_zero());
    }

    #[test]
    fn multiplication_across_word_boundary() {
        let a = BitMatrix::from_entries(2, 130, &[(0, 0), (0, 129), (1, 64)]);
        let b = BitMatrix::from_entries(130, 2, &[(0, 0), (129, 0), (64, 1)]);
        let p = a.mul(&b);
        assert!(!p.get(0, 0));
        assert!(p.get(1, 1));
        assert_eq!(a.transpose().transpose(), a);
    }

    #[test]
    fn repeated_entries_cancel() {
        let m = BitMatrix::from_entries(2, 2, &[(0, 1), (0, 1), (1, 0)]);
        assert_eq!(m.entries(), vec![(1, 0)]);
    }
}
