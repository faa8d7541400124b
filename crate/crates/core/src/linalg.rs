//! Exact rank and kernel computations over GF(2) and the rationals.
//!
//! GF(2) work uses packed bit rows. Rational rank uses fraction-free
//! (Bareiss) elimination on integers, first in `i128` with overflow checks
//! and, if an intermediate minor ever overflows, again on big integers.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::homology::FieldTag;

/// Dense bit vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> BitVec {
        BitVec { len, words: vec![0; len.div_ceil(64)] }
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
        if value {
            self.words[i / 64] |= 1 << (i % 64);
        } else {
            self.words[i / 64] &= !(1 << (i % 64));
        }
    }

    pub fn flip(&mut self, i: usize) {
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Lowest set index.
    pub fn first_one(&self) -> Option<usize> {
        self.words.iter().enumerate().find(|(_, &w)| w != 0).map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            })
        })
    }
}

/// Row-reduced basis over GF(2), keyed by pivot (lowest set bit).
#[derive(Clone, Debug, Default)]
pub struct Gf2Basis {
    rows: Vec<BitVec>,
    pivots: Vec<usize>,
}

impl Gf2Basis {
    pub fn new() -> Gf2Basis {
        Gf2Basis::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the basis in place.
    pub fn reduce(&self, v: &mut BitVec) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v.get(p) {
                v.xor_assign(row);
            }
        }
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        let mut w = v.clone();
        self.reduce(&mut w);
        w.is_zero()
    }

    /// Inserts `v`; returns false if it was already in the span.
    pub fn insert(&mut self, mut v: BitVec) -> bool {
        self.reduce(&mut v);
        match v.first_one() {
            None => false,
            Some(p) => {
                // keep the basis fully reduced on pivot columns
                for row in &mut self.rows {
                    if row.get(p) {
                        row.xor_assign(&v);
                    }
                }
                self.rows.push(v);
                self.pivots.push(p);
                true
            }
        }
    }
}

/// Rank over GF(2) of a list of rows.
pub fn gf2_rank(rows: &[BitVec]) -> usize {
    let mut basis = Gf2Basis::new();
    rows.iter().filter(|r| basis.insert((*r).clone())).count()
}

/// Basis of `{ x : Σ x_j columns[j] = 0 }` over GF(2). Each kernel vector is
/// indexed by column.
pub fn gf2_kernel(columns: &[BitVec]) -> Vec<BitVec> {
    let ncols = columns.len();
    // (reduced column, combination of original columns)
    let mut pivots: Vec<(usize, BitVec, BitVec)> = Vec::new();
    let mut kernel = Vec::new();
    for (j, col) in columns.iter().enumerate() {
        let mut v = col.clone();
        let mut combo = BitVec::zeros(ncols);
        combo.set(j, true);
        for (p, pv, pc) in &pivots {
            if v.get(*p) {
                v.xor_assign(pv);
                combo.xor_assign(pc);
            }
        }
        match v.first_one() {
            None => kernel.push(combo),
            Some(p) => {
                for (_, pv, pc) in pivots.iter_mut() {
                    if pv.get(p) {
                        pv.xor_assign(&v);
                        pc.xor_assign(&combo);
                    }
                }
                pivots.push((p, v, combo));
            }
        }
    }
    kernel
}

/// Dense integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> IntMatrix {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> IntMatrix {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> IntMatrix {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        IntMatrix { rows: rows.len(), cols, data: rows.concat() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[i64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i * other.cols + j] += a * other.get(k, j);
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// Rows reduced mod 2.
    pub fn gf2_rows(&self) -> Vec<BitVec> {
        (0..self.rows)
            .map(|r| {
                let mut b = BitVec::zeros(self.cols);
                for (c, &x) in self.row(r).iter().enumerate() {
                    if x.rem_euclid(2) == 1 {
                        b.set(c, true);
                    }
                }
                b
            })
            .collect()
    }

    pub fn rank(&self, field: FieldTag) -> usize {
        match field {
            FieldTag::Gf2 => gf2_rank(&self.gf2_rows()),
            FieldTag::Rational => rational_rank(self),
        }
    }
}

/// Exact rank over ℚ by fraction-free elimination.
pub fn rational_rank(m: &IntMatrix) -> usize {
    let small: Vec<Vec<i128>> = (0..m.rows).map(|r| m.row(r).iter().map(|&x| x as i128).collect()).collect();
    match bareiss_i128(small) {
        Some(r) => r,
        None => {
            let big = (0..m.rows).map(|r| m.row(r).iter().map(|&x| BigInt::from(x)).collect()).collect();
            bareiss_big(big)
        }
    }
}

fn bareiss_i128(mut a: Vec<Vec<i128>>) -> Option<usize> {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut prev: i128 = 1;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| a[i][c] != 0) else { continue };
        a.swap(r, p);
        let pivot = a[r][c];
        for i in r + 1..rows {
            let lead = a[i][c];
            for j in c + 1..cols {
                let x = pivot.checked_mul(a[i][j])?.checked_sub(lead.checked_mul(a[r][j])?)?;
                a[i][j] = x / prev;
            }
            a[i][c] = 0;
        }
        prev = pivot;
        r += 1;
    }
    Some(r)
}

fn bareiss_big(mut a: Vec<Vec<BigInt>>) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let pivot = a[r][c].clone();
        for i in r + 1..rows {
            let lead = a[i][c].clone();
            for j in c + 1..cols {
                let x = &pivot * &a[i][j] - &lead * &a[r][j];
                a[i][j] = x / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = pivot;
        r += 1;
    }
    r
}
