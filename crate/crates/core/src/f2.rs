//! Dense linear algebra over GF(2).
//!
//! Vectors and matrices are packed into `u64` words. Everything here is
//! exact; the sizes in this crate are small (a few thousand columns at
//! most), so plain Gaussian elimination is fine.

/// A bit vector of fixed length.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct F2Vec {
    len: usize,
    words: Vec<u64>,
}

impl std::fmt::Debug for F2Vec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let bits: String = (0..self.len)
            .map(|i| if self.get(i) { '1' } else { '0' })
            .collect();
        write!(f, "F2Vec[{bits}]")
    }
}

impl F2Vec {
    pub fn zeros(len: usize) -> Self {
        F2Vec {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn basis(len: usize, i: usize) -> Self {
        let mut v = F2Vec::zeros(len);
        v.set(i, true);
        v
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        let mut v = F2Vec::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            v.set(i, b);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, b: bool) {
        debug_assert!(i < self.len);
        if b {
            self.words[i / 64] |= 1 << (i % 64);
        } else {
            self.words[i / 64] &= !(1 << (i % 64));
        }
    }

    #[inline]
    pub fn xor_in(&mut self, other: &F2Vec) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Index of the lowest set bit, if any.
    pub fn first_one(&self) -> Option<usize> {
        for (wi, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(wi * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.get(i))
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn dot(&self, other: &F2Vec) -> bool {
        debug_assert_eq!(self.len, other.len);
        let mut acc = 0u64;
        for (a, b) in self.words.iter().zip(&other.words) {
            acc ^= a & b;
        }
        acc.count_ones() % 2 == 1
    }
}

/// A matrix over GF(2), stored as a list of bit-vector rows.
#[derive(Clone, PartialEq, Eq)]
pub struct F2Mat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<F2Vec>,
}

impl std::fmt::Debug for F2Mat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "F2Mat {}x{}", self.rows, self.cols)?;
        for r in &self.data {
            writeln!(f, "  {r:?}")?;
        }
        Ok(())
    }
}

impl F2Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        F2Mat {
            rows,
            cols,
            data: vec![F2Vec::zeros(cols); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = F2Mat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_rows(rows: Vec<F2Vec>, cols: usize) -> Self {
        debug_assert!(rows.iter().all(|r| r.len() == cols));
        F2Mat {
            rows: rows.len(),
            cols,
            data: rows,
        }
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        self.data[r].get(c)
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, b: bool) {
        self.data[r].set(c, b);
    }

    pub fn row(&self, r: usize) -> &F2Vec {
        &self.data[r]
    }

    pub fn row_mut(&mut self, r: usize) -> &mut F2Vec {
        &mut self.data[r]
    }

    /// Row vector times matrix.
    pub fn apply_left(&self, v: &F2Vec) -> F2Vec {
        debug_assert_eq!(v.len(), self.rows);
        let mut out = F2Vec::zeros(self.cols);
        for i in v.ones() {
            out.xor_in(&self.data[i]);
        }
        out
    }

    pub fn transpose(&self) -> F2Mat {
        let mut t = F2Mat::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in self.data[r].ones() {
                t.set(c, r, true);
            }
        }
        t
    }

    /// `self * other`, composing as linear maps acting on row vectors.
    pub fn mul(&self, other: &F2Mat) -> F2Mat {
        debug_assert_eq!(self.cols, other.rows);
        let data = self.data.iter().map(|r| other.apply_left(r)).collect();
        F2Mat::from_rows(data, other.cols)
    }

    pub fn add(&self, other: &F2Mat) -> F2Mat {
        debug_assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut m = self.clone();
        for (a, b) in m.data.iter_mut().zip(&other.data) {
            a.xor_in(b);
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.is_zero())
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.data.clone();
        let mut rank = 0;
        let mut pivot_col = 0;
        while pivot_col < self.cols && rank < rows.len() {
            if let Some(p) = (rank..rows.len()).find(|&r| rows[r].get(pivot_col)) {
                rows.swap(rank, p);
                let pivot = rows[rank].clone();
                for (r, row) in rows.iter_mut().enumerate() {
                    if r != rank && row.get(pivot_col) {
                        row.xor_in(&pivot);
                    }
                }
                rank += 1;
            }
            pivot_col += 1;
        }
        rank
    }

    /// Basis of the kernel of the map `v -> v * self` on row vectors.
    pub fn left_kernel(&self) -> Vec<F2Vec> {
        // Eliminate [self | I] and read kernel rows off the identity part.
        let mut rows = self.data.clone();
        let mut aug: Vec<F2Vec> = (0..self.rows).map(|i| F2Vec::basis(self.rows, i)).collect();
        let mut rank = 0;
        for col in 0..self.cols {
            if rank == rows.len() {
                break;
            }
            if let Some(p) = (rank..rows.len()).find(|&r| rows[r].get(col)) {
                rows.swap(rank, p);
                aug.swap(rank, p);
                for r in 0..rows.len() {
                    if r != rank && rows[r].get(col) {
                        let (pivot, pivot_aug) = (rows[rank].clone(), aug[rank].clone());
                        rows[r].xor_in(&pivot);
                        aug[r].xor_in(&pivot_aug);
                    }
                }
                rank += 1;
            }
        }
        (rank..rows.len()).map(|r| aug[r].clone()).collect()
    }

    /// Solve `x * self = target`; returns one solution if consistent.
    pub fn solve_left(&self, target: &F2Vec) -> Option<F2Vec> {
        debug_assert_eq!(target.len(), self.cols);
        let mut rows = self.data.clone();
        let mut aug: Vec<F2Vec> = (0..self.rows).map(|i| F2Vec::basis(self.rows, i)).collect();
        let mut t = target.clone();
        let mut tx = F2Vec::zeros(self.rows);
        let mut rank = 0;
        for col in 0..self.cols {
            if rank < rows.len() {
                if let Some(p) = (rank..rows.len()).find(|&r| rows[r].get(col)) {
                    rows.swap(rank, p);
                    aug.swap(rank, p);
                    let (pivot, pivot_aug) = (rows[rank].clone(), aug[rank].clone());
                    for r in 0..rows.len() {
                        if r != rank && rows[r].get(col) {
                            rows[r].xor_in(&pivot);
                            aug[r].xor_in(&pivot_aug);
                        }
                    }
                    if t.get(col) {
                        t.xor_in(&pivot);
                        tx.xor_in(&pivot_aug);
                    }
                    rank += 1;
                    continue;
                }
            }
            if t.get(col) {
                return None; // no pivot available for this column
            }
        }
        if t.is_zero() {
            Some(tx)
        } else {
            None
        }
    }

    /// Row space basis in reduced echelon form, with pivot columns.
    pub fn row_echelon(&self) -> (Vec<F2Vec>, Vec<usize>) {
        let mut rows: Vec<F2Vec> = self.data.iter().filter(|r| !r.is_zero()).cloned().collect();
        let mut basis: Vec<F2Vec> = Vec::new();
        let mut pivots: Vec<usize> = Vec::new();
        for mut row in rows.drain(..) {
            loop {
                match row.first_one() {
                    None => break,
                    Some(p) => match pivots.iter().position(|&q| q == p) {
                        Some(idx) => {
                            let b = basis[idx].clone();
                            row.xor_in(&b);
                        }
                        None => {
                            // back-reduce existing rows
                            for (b, _) in basis.iter_mut().zip(&pivots) {
                                if b.get(p) {
                                    b.xor_in(&row);
                                }
                            }
                            basis.push(row);
                            pivots.push(p);
                            break;
                        }
                    },
                }
            }
        }
        let mut order: Vec<usize> = (0..pivots.len()).collect();
        order.sort_by_key(|&i| pivots[i]);
        let basis = order.iter().map(|&i| basis[i].clone()).collect();
        let pivots = order.iter().map(|&i| pivots[i]).collect();
        (basis, pivots)
    }
}

/// An incremental reduced row space: supports membership tests, reduction,
/// and insertion. Used for kernel/image bookkeeping all over the crate.
#[derive(Clone, Debug, Default)]
pub struct RowSpace {
    pub basis: Vec<F2Vec>,
    pub pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new() -> Self {
        RowSpace::default()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Reduce `v` against the current basis.
    pub fn reduce(&self, v: &F2Vec) -> F2Vec {
        let mut v = v.clone();
        loop {
            match v.first_one() {
                None => return v,
                Some(p) => match self.pivots.iter().position(|&q| q == p) {
                    Some(i) => v.xor_in(&self.basis[i]),
                    None => return v,
                },
            }
        }
    }

    pub fn contains(&self, v: &F2Vec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Insert `v`; returns true if it enlarged the space.
    pub fn insert(&mut self, v: &F2Vec) -> bool {
        let r = self.reduce(v);
        match r.first_one() {
            None => false,
            Some(p) => {
                for b in self.basis.iter_mut() {
                    if b.get(p) {
                        b.xor_in(&r);
                    }
                }
                self.basis.push(r);
                self.pivots.push(p);
                true
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_and_rank() {
        // rows: (1,1,0), (0,1,1), (1,0,1) -- rank 2, kernel (1,1,1)
        let m = F2Mat::from_rows(
            vec![
                F2Vec::from_bits(&[true, true, false]),
                F2Vec::from_bits(&[false, true, true]),
                F2Vec::from_bits(&[true, false, true]),
            ],
            3,
        );
        assert_eq!(m.rank(), 2);
        let k = m.left_kernel();
        assert_eq!(k.len(), 1);
        assert_eq!(k[0], F2Vec::from_bits(&[true, true, true]));
    }

    #[test]
    fn solve() {
        let m = F2Mat::from_rows(
            vec![
                F2Vec::from_bits(&[true, false, true]),
                F2Vec::from_bits(&[false, true, true]),
            ],
            3,
        );
        let t = F2Vec::from_bits(&[true, true, false]);
        let x = m.solve_left(&t).unwrap();
        assert_eq!(m.transpose().apply_left(&t.clone()).len(), 2);
        let mut got = F2Vec::zeros(3);
        for i in x.ones() {
            got.xor_in(m.row(i));
        }
        assert_eq!(got, t);
        let bad = F2Vec::from_bits(&[true, false, false]);
        assert!(m.solve_left(&bad).is_none());
    }

    #[test]
    fn rowspace_insert() {
        let mut s = RowSpace::new();
        assert!(s.insert(&F2Vec::from_bits(&[true, true, false])));
        assert!(s.insert(&F2Vec::from_bits(&[false, true, true])));
        assert!(!s.insert(&F2Vec::from_bits(&[true, false, true])));
        assert_eq!(s.dim(), 2);
    }
}
