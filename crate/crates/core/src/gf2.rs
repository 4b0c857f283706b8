//! Bit vectors over GF(2) and elimination helpers.

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Bits {
    len: usize,
    words: Vec<u64>,
}

impl Bits {
    pub fn zeros(len: usize) -> Bits {
        Bits {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Bits {
        let mut b = Bits::zeros(len);
        for i in indices {
            b.set(i);
        }
        b
    }

    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn flip(&mut self, i: usize) {
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn xor_assign(&mut self, other: &Bits) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.get(i))
    }

}

/// Row-reduced basis over GF(2) that remembers, for each basis vector, which
/// input generators were added to produce it.
pub(crate) struct TrackedBasis {
    generators: usize,
    /// (vector, combination), keyed by the vector's pivot.
    rows: Vec<(usize, Bits, Bits)>,
}

impl TrackedBasis {
    pub fn new(generators: usize) -> TrackedBasis {
        TrackedBasis {
            generators,
            rows: Vec::new(),
        }
    }

    /// Reduce `v` against the basis; returns the residue and the generator
    /// combination that was added to it.
    fn reduce(&self, v: &Bits) -> (Bits, Bits) {
        let mut r = v.clone();
        let mut combo = Bits::zeros(self.generators);
        for (pivot, row, c) in &self.rows {
            if r.get(*pivot) {
                r.xor_assign(row);
                combo.xor_assign(c);
            }
        }
        (r, combo)
    }

    /// Add generator number `index` with vector `v`.
    pub fn insert(&mut self, index: usize, v: &Bits) {
        let (r, mut combo) = self.reduce(v);
        if let Some(pivot) = r.first_one() {
            combo.flip(index);
            // keep the basis fully reduced on existing pivots
            for (_, row, c) in &mut self.rows {
                if row.get(pivot) {
                    row.xor_assign(&r);
                    c.xor_assign(&combo);
                }
            }
            self.rows.push((pivot, r, combo));
        }
    }

    /// Generators whose sum is `v`, if `v` lies in the span.
    pub fn express(&self, v: &Bits) -> Option<Bits> {
        let (r, combo) = self.reduce(v);
        r.is_zero().then_some(combo)
    }
}
