use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense row-major matrix of arbitrary-precision integers.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix { rows, cols, entries: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = BigInt::one();
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix");
            entries.extend(r.iter().cloned().map(Into::into));
        }
        IntegerMatrix { rows: rows.len(), cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn mul(&self, other: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntegerMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * out.cols + j;
                    out.entries[idx] += a * other.get(k, j);
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> IntegerMatrix {
        let mut out = IntegerMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    /// Fraction-free Bareiss elimination. Square matrices only.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.to_rows();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(i, k);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                    a[i][j] = v;
                }
            }
            prev = a[k][k].clone();
        }
        sign * &a[n - 1][n - 1]
    }

    pub fn rank(&self) -> usize {
        smith_normal_form(self).diagonal.iter().filter(|d| !d.is_zero()).count()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += q * row[src]
    fn add_row(&mut self, dst: usize, src: usize, q: &BigInt) {
        for j in 0..self.cols {
            let v = &self.entries[src * self.cols + j] * q;
            self.entries[dst * self.cols + j] += v;
        }
    }

    /// col[dst] += q * col[src]
    fn add_col(&mut self, dst: usize, src: usize, q: &BigInt) {
        for i in 0..self.rows {
            let v = &self.entries[i * self.cols + src] * q;
            self.entries[i * self.cols + dst] += v;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let idx = r * self.cols + j;
            self.entries[idx] = -&self.entries[idx];
        }
    }
}

impl fmt::Display for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// `left * m * right = diag(diagonal)`, padded with zeros to the shape of `m`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SmithForm {
    /// Length `min(rows, cols)`; nonzero entries first, each dividing the next.
    pub diagonal: Vec<BigInt>,
    pub left: IntegerMatrix,
    pub right: IntegerMatrix,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diagonal.iter().filter(|d| !d.is_zero()).count()
    }

    pub fn diagonal_matrix(&self) -> IntegerMatrix {
        let mut d = IntegerMatrix::zeros(self.left.rows(), self.right.cols());
        for (i, v) in self.diagonal.iter().enumerate() {
            d.set(i, i, v.clone());
        }
        d
    }
}

struct Work {
    a: IntegerMatrix,
    l: IntegerMatrix,
    r: IntegerMatrix,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        self.l.swap_rows(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        self.r.swap_cols(i, j);
    }

    fn add_row(&mut self, dst: usize, src: usize, q: &BigInt) {
        self.a.add_row(dst, src, q);
        self.l.add_row(dst, src, q);
    }

    fn add_col(&mut self, dst: usize, src: usize, q: &BigInt) {
        self.a.add_col(dst, src, q);
        self.r.add_col(dst, src, q);
    }

    /// Smallest nonzero |entry| in the block `[t.., t..]`, ties to lowest (row, col).
    fn pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, BigInt)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let v = self.a.get(i, j);
                if v.is_zero() {
                    continue;
                }
                let m = v.abs();
                if best.as_ref().is_none_or(|(_, _, b)| m < *b) {
                    best = Some((i, j, m));
                }
            }
        }
        best.map(|(i, j, _)| (i, j))
    }
}

pub fn smith_normal_form(m: &IntegerMatrix) -> SmithForm {
    let (rows, cols) = (m.rows(), m.cols());
    let mut w = Work { a: m.clone(), l: IntegerMatrix::identity(rows), r: IntegerMatrix::identity(cols) };
    let n = rows.min(cols);
    for t in 0..n {
        let Some((pi, pj)) = w.pivot(t) else { break };
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if w.a.get(i, t).is_zero() {
                    continue;
                }
                let q = -(w.a.get(i, t).div_floor(w.a.get(t, t)));
                w.add_row(i, t, &q);
                dirty |= !w.a.get(i, t).is_zero();
            }
            for j in t + 1..cols {
                if w.a.get(t, j).is_zero() {
                    continue;
                }
                let q = -(w.a.get(t, j).div_floor(w.a.get(t, t)));
                w.add_col(j, t, &q);
                dirty |= !w.a.get(t, j).is_zero();
            }
            if !dirty {
                // Divisibility: fold an offending row into row t and retry.
                let p = w.a.get(t, t).clone();
                let offender = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !w.a.get(i, j).is_multiple_of(&p)));
                match offender {
                    Some(i) => {
                        w.add_row(t, i, &BigInt::one());
                    }
                    None => break,
                }
            }
            // Remainders are strictly smaller than the pivot: re-pick in the
            // cross of row t and column t.
            let mut best = (t, t, w.a.get(t, t).abs());
            for i in t + 1..rows {
                let v = w.a.get(i, t);
                if !v.is_zero() && v.abs() < best.2 {
                    best = (i, t, v.abs());
                }
            }
            for j in t + 1..cols {
                let v = w.a.get(t, j);
                if !v.is_zero() && v.abs() < best.2 {
                    best = (t, j, v.abs());
                }
            }
            w.swap_rows(t, best.0);
            w.swap_cols(t, best.1);
        }
        if w.a.get(t, t).is_negative() {
            w.a.negate_row(t);
            w.l.negate_row(t);
        }
    }
    let diagonal = (0..n).map(|i| w.a.get(i, i).clone()).collect();
    SmithForm { diagonal, left: w.l, right: w.r }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag(m: &[Vec<i64>]) -> Vec<i64> {
        let s = smith_normal_form(&IntegerMatrix::from_rows(m));
        s.diagonal.iter().map(|d| i64::try_from(d).unwrap()).collect()
    }

    fn check_invariants(m: &IntegerMatrix) {
        let s = smith_normal_form(m);
        assert_eq!(s.left.mul(m).mul(&s.right), s.diagonal_matrix());
        assert!(s.left.determinant().abs().is_one());
        assert!(s.right.determinant().abs().is_one());
        let nz: Vec<_> = s.diagonal.iter().take_while(|d| !d.is_zero()).collect();
        assert_eq!(nz.len(), s.rank());
        for w in nz.windows(2) {
            assert!(w[1].is_multiple_of(w[0]));
        }
    }

    #[test]
    fn spec_examples() {
        assert_eq!(diag(&[vec![0, 0], vec![0, 0]]), vec![0, 0]);
        assert_eq!(diag(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]), vec![1, 1, 1]);
        assert_eq!(diag(&[vec![2, 0], vec![0, 4]]), vec![2, 4]);
        assert_eq!(diag(&[vec![2, 4], vec![4, 2]]), vec![2, 6]);
    }

    #[test]
    fn hand_reduction_of_2_4_4_2() {
        // R2 -= 2 R1 gives [[2,4],[0,-6]]; C2 -= 2 C1 gives [[2,0],[0,-6]]; |det| = 12 = 2*6.
        let m = IntegerMatrix::from_rows(&[vec![2, 4], vec![4, 2]]);
        assert_eq!(m.determinant(), BigInt::from(-12));
        check_invariants(&m);
    }

    #[test]
    fn rectangular_and_coprime_entries() {
        assert_eq!(diag(&[vec![6, 10, 15]]), vec![1]);
        assert_eq!(diag(&[vec![4], vec![6]]), vec![2]);
        assert_eq!(diag(&[vec![2, 0, 0], vec![0, 3, 0]]), vec![1, 6]);
        for m in [
            vec![vec![6, 10, 15]],
            vec![vec![4], vec![6]],
            vec![vec![3, -7, 2], vec![0, 5, -5], vec![9, 1, 4], vec![-2, 8, 8]],
        ] {
            check_invariants(&IntegerMatrix::from_rows(&m));
        }
    }

    #[test]
    fn deterministic() {
        let m = IntegerMatrix::from_rows(&[vec![3, -7, 2], vec![0, 5, -5], vec![9, 1, 4]]);
        assert_eq!(smith_normal_form(&m), smith_normal_form(&m));
    }

    #[test]
    fn bareiss_determinant() {
        let m = IntegerMatrix::from_rows(&[vec![0, 2, 1], vec![3, 1, 0], vec![1, 1, 1]]);
        // 0*(1-0) - 2*(3-0) + 1*(3-1) = -4
        assert_eq!(m.determinant(), BigInt::from(-4));
        assert_eq!(IntegerMatrix::identity(4).determinant(), BigInt::one());
    }
}
