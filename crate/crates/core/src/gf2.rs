//! Dense bit vectors and Gaussian elimination over GF(2).

use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn from_support<I: IntoIterator<Item = usize>>(len: usize, support: I) -> Self {
        let mut v = Self::zeros(len);
        for i in support {
            v.set(i, true);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit {i} outside length {}", self.len);
        if value {
            self.words[i / 64] |= 1 << (i % 64);
        } else {
            self.words[i / 64] &= !(1 << (i % 64));
        }
    }

    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len);
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// Inner product over GF(2).
    pub fn dot(&self, other: &BitVec) -> bool {
        assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum::<u32>()
            % 2
            == 1
    }

    pub fn intersects(&self, other: &BitVec) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + bit)
            })
        })
    }

    pub fn first_one(&self) -> Option<usize> {
        self.support().next()
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = (0..self.len).map(|i| if self.get(i) { '1' } else { '0' }).collect();
        write!(f, "{s}")
    }
}

/// Reduced row echelon form of a set of rows.
#[derive(Debug, Clone)]
pub struct Echelon {
    pub rows: Vec<BitVec>,
    pub pivots: Vec<usize>,
    len: usize,
}

impl Echelon {
    pub fn new(rows: &[BitVec], len: usize) -> Self {
        let mut rows: Vec<BitVec> = rows.to_vec();
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..len {
            let Some(found) = (rank..rows.len()).find(|&r| rows[r].get(col)) else {
                continue;
            };
            rows.swap(rank, found);
            let pivot_row = rows[rank].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != rank && row.get(col) {
                    row.xor_assign(&pivot_row);
                }
            }
            pivots.push(col);
            rank += 1;
        }
        rows.truncate(rank);
        Echelon { rows, pivots, len }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `v` against the basis; zero iff `v` lies in the row space.
    pub fn reduce(&self, v: &BitVec) -> BitVec {
        let mut out = v.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if out.get(p) {
                out.xor_assign(row);
            }
        }
        out
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Basis of the kernel `{x : row · x = 0 for every row}`.
    pub fn kernel_basis(&self) -> Vec<BitVec> {
        let mut is_pivot = vec![false; self.len];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.len)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut x = BitVec::zeros(self.len);
                x.set(free, true);
                for (row, &p) in self.rows.iter().zip(&self.pivots) {
                    if row.get(free) {
                        x.set(p, true);
                    }
                }
                x
            })
            .collect()
    }
}

pub fn rank(rows: &[BitVec], len: usize) -> usize {
    Echelon::new(rows, len).rank()
}
