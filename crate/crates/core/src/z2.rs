//! Linear algebra over the two-element field.
//!
//! [`Z2Vector`] is a sparse sorted support, used for chains and boundary
//! columns. [`BitVector`] packs bits into machine words and is used for
//! annotation and support vectors, whose length is the first Betti number.

use std::cmp::Ordering;

use crate::complex::FlagComplex2;

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Z2Vector {
    support: Vec<usize>,
}

impl Z2Vector {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a vector from arbitrary indices; repeated indices cancel in pairs.
    pub fn from_indices(indices: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = indices.into_iter().collect();
        v.sort_unstable();
        let mut support = Vec::with_capacity(v.len());
        for i in v {
            if support.last() == Some(&i) {
                support.pop();
            } else {
                support.push(i);
            }
        }
        Z2Vector { support }
    }

    pub fn unit(i: usize) -> Self {
        Z2Vector { support: vec![i] }
    }

    pub fn support(&self) -> &[usize] {
        &self.support
    }

    pub fn into_support(self) -> Vec<usize> {
        self.support
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    pub fn len(&self) -> usize {
        self.support.len()
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.support.binary_search(&i).is_ok()
    }

    /// Largest index in the support: the pivot ("low") of a column.
    pub fn low(&self) -> Option<usize> {
        self.support.last().copied()
    }

    pub fn add_assign(&mut self, other: &Z2Vector) {
        let (a, b) = (&self.support, &other.support);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        self.support = out;
    }

    pub fn add(&self, other: &Z2Vector) -> Z2Vector {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Z2Matrix {
    n_rows: usize,
    columns: Vec<Z2Vector>,
}

impl Z2Matrix {
    pub fn new(n_rows: usize, columns: Vec<Z2Vector>) -> Self {
        debug_assert!(columns.iter().all(|c| c.low().is_none_or(|l| l < n_rows)));
        Z2Matrix { n_rows, columns }
    }

    pub fn zeros(n_rows: usize, n_cols: usize) -> Self {
        Z2Matrix {
            n_rows,
            columns: vec![Z2Vector::new(); n_cols],
        }
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, j: usize) -> &Z2Vector {
        &self.columns[j]
    }

    pub fn columns(&self) -> &[Z2Vector] {
        &self.columns
    }

    /// `self * x`.
    pub fn mul_vector(&self, x: &Z2Vector) -> Z2Vector {
        let mut out = Z2Vector::new();
        for &j in x.support() {
            out.add_assign(&self.columns[j]);
        }
        out
    }

    /// `self * other`.
    pub fn mul(&self, other: &Z2Matrix) -> Z2Matrix {
        assert_eq!(self.n_cols(), other.n_rows, "dimension mismatch");
        Z2Matrix {
            n_rows: self.n_rows,
            columns: other.columns.iter().map(|c| self.mul_vector(c)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Z2Vector::is_zero)
    }

    pub fn with_columns_permuted(&self, order: &[usize]) -> Z2Matrix {
        Z2Matrix {
            n_rows: self.n_rows,
            columns: order.iter().map(|&j| self.columns[j].clone()).collect(),
        }
    }
}

/// Boundary operator of a flag complex in its deterministic simplex order.
/// For `k = 1` rows are vertices; for `k = 2` rows are edge positions.
pub fn boundary_matrix(cx: &FlagComplex2, k: usize) -> Z2Matrix {
    match k {
        1 => Z2Matrix::new(
            cx.n_vertices,
            cx.edges
                .iter()
                .map(|e| Z2Vector {
                    support: vec![e.u, e.v],
                })
                .collect(),
        ),
        2 => Z2Matrix::new(
            cx.n_edges(),
            cx.triangles
                .iter()
                .map(|t| Z2Vector::from_indices(t.edges))
                .collect(),
        ),
        _ => panic!("boundary_matrix: k must be 1 or 2, got {k}"),
    }
}

/// Result of left-to-right column reduction: `reduced = m * V`.
#[derive(Debug, Clone)]
pub struct Reduction {
    pub reduced: Z2Matrix,
    /// `(target, source)`: column `source` was added into column `target`, in order.
    pub ops: Vec<(usize, usize)>,
    pivot_col: Vec<Option<usize>>,
}

pub fn column_reduce(m: &Z2Matrix) -> Reduction {
    let mut columns = m.columns.clone();
    let mut pivot_col: Vec<Option<usize>> = vec![None; m.n_rows];
    let mut ops = Vec::new();
    for j in 0..columns.len() {
        while let Some(low) = columns[j].low() {
            match pivot_col[low] {
                Some(p) => {
                    let (head, tail) = columns.split_at_mut(j);
                    tail[0].add_assign(&head[p]);
                    ops.push((j, p));
                }
                None => {
                    pivot_col[low] = Some(j);
                    break;
                }
            }
        }
    }
    Reduction {
        reduced: Z2Matrix {
            n_rows: m.n_rows,
            columns,
        },
        ops,
        pivot_col,
    }
}

impl Reduction {
    /// The upper-triangular change of basis, replayed from the operation log.
    pub fn v_matrix(&self) -> Z2Matrix {
        let n = self.reduced.n_cols();
        let mut v: Vec<Z2Vector> = (0..n).map(Z2Vector::unit).collect();
        for &(target, source) in &self.ops {
            let (head, tail) = v.split_at_mut(target);
            tail[0].add_assign(&head[source]);
        }
        Z2Matrix {
            n_rows: n,
            columns: v,
        }
    }

    /// Column whose pivot is `row`, if any.
    pub fn pivot_column(&self, row: usize) -> Option<usize> {
        self.pivot_col.get(row).copied().flatten()
    }

    pub fn rank(&self) -> usize {
        self.pivot_col.iter().filter(|p| p.is_some()).count()
    }
}

pub fn rank(m: &Z2Matrix) -> usize {
    column_reduce(m).rank()
}

/// Some `x` with `m * x = b`, or `None` if `b` is outside the column span.
pub fn solve_in_span(m: &Z2Matrix, b: &Z2Vector) -> Option<Z2Vector> {
    let red = column_reduce(m);
    let v = red.v_matrix();
    let mut rest = b.clone();
    let mut x = Z2Vector::new();
    while let Some(low) = rest.low() {
        let p = red.pivot_column(low)?;
        rest.add_assign(red.reduced.column(p));
        x.add_assign(v.column(p));
    }
    Some(x)
}

/// Dense bit vector over Z2.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        BitVector {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut b = Self::zeros(len);
        b.set(i, true);
        b
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len);
        if value {
            self.words[i / 64] |= 1 << (i % 64);
        } else {
            self.words[i / 64] &= !(1 << (i % 64));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn xor_assign(&mut self, other: &BitVector) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// Whether any bit at position `i` or higher is set.
    pub fn any_from(&self, i: usize) -> bool {
        let w = i / 64;
        if w >= self.words.len() {
            return false;
        }
        self.words[w] >> (i % 64) != 0 || self.words[w + 1..].iter().any(|&x| x != 0)
    }

    /// Clears every bit below position `i`.
    pub fn clear_below(&mut self, i: usize) {
        let w = (i / 64).min(self.words.len());
        self.words[..w].iter_mut().for_each(|x| *x = 0);
        if w < self.words.len() {
            self.words[w] &= !0u64 << (i % 64);
        }
    }

    /// `self ^= other`, touching only words that hold bits `>= from`.
    pub fn xor_assign_from(&mut self, other: &BitVector, from: usize) {
        debug_assert_eq!(self.len, other.len);
        let w = from / 64;
        for (a, b) in self.words[w..].iter_mut().zip(&other.words[w..]) {
            *a ^= b;
        }
    }

    /// Inner product over Z2.
    pub fn dot(&self, other: &BitVector) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum::<u32>()
            % 2
            == 1
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(|&i| self.get(i))
    }

    pub fn to_bools(&self) -> Vec<bool> {
        (0..self.len).map(|i| self.get(i)).collect()
    }
}

/// Rank of a set of dense vectors of equal length.
pub fn bit_rank(vectors: &[BitVector]) -> usize {
    let mut basis: Vec<BitVector> = Vec::new();
    let mut lead: Vec<usize> = Vec::new();
    for v in vectors {
        let mut v = v.clone();
        for (b, &l) in basis.iter().zip(&lead) {
            if v.get(l) {
                v.xor_assign(b);
            }
        }
        let first = v.ones().next();
        if let Some(l) = first {
            for b in basis.iter_mut() {
                if b.get(l) {
                    b.xor_assign(&v);
                }
            }
            basis.push(v);
            lead.push(l);
        }
    }
    basis.len()
}
