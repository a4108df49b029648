//! Dynamic-width bit vectors over F2 backed by 64-bit blocks.

/// A row vector over F2 with xor arithmetic.
///
/// Width is implicit: all rows mixed together must come from the same ambient
/// dimension.  Trailing zero blocks are allowed and ignored by comparisons
/// going through [`BitRow::is_zero`] / [`BitRow::lowest_set`]; `PartialEq`
/// requires canonical construction (same width), which all call sites in this
/// workspace respect.
#[derive(Clone, PartialEq, Eq, Debug, Default, Hash)]
pub struct BitRow {
    blocks: Vec<u64>,
}

impl BitRow {
    /// All-zero row able to hold `width` bits.
    pub fn zeros(width: usize) -> Self {
        BitRow {
            blocks: vec![0; width.div_ceil(64)],
        }
    }

    /// Row with exactly the given bits set.
    pub fn from_bits<I: IntoIterator<Item = usize>>(width: usize, bits: I) -> Self {
        let mut row = Self::zeros(width);
        for b in bits {
            row.set(b);
        }
        row
    }

    pub fn set(&mut self, i: usize) {
        let blk = i / 64;
        if blk >= self.blocks.len() {
            self.blocks.resize(blk + 1, 0);
        }
        self.blocks[blk] |= 1 << (i % 64);
    }

    pub fn toggle(&mut self, i: usize) {
        let blk = i / 64;
        if blk >= self.blocks.len() {
            self.blocks.resize(blk + 1, 0);
        }
        self.blocks[blk] ^= 1 << (i % 64);
    }

    pub fn get(&self, i: usize) -> bool {
        let blk = i / 64;
        blk < self.blocks.len() && (self.blocks[blk] >> (i % 64)) & 1 == 1
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    pub fn xor_assign(&mut self, other: &BitRow) {
        if other.blocks.len() > self.blocks.len() {
            self.blocks.resize(other.blocks.len(), 0);
        }
        for (a, b) in self.blocks.iter_mut().zip(other.blocks.iter()) {
            *a ^= *b;
        }
    }

    /// Index of the lowest set bit, if any.
    pub fn lowest_set(&self) -> Option<usize> {
        for (k, &b) in self.blocks.iter().enumerate() {
            if b != 0 {
                return Some(k * 64 + b.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Iterate over set bit indices in increasing order.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks.iter().enumerate().flat_map(|(k, &b)| {
            let mut rest = b;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let t = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(k * 64 + t)
                }
            })
        })
    }

    pub fn count_ones(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    /// Parity of the overlap with another row.
    pub fn dot(&self, other: &BitRow) -> bool {
        self.blocks
            .iter()
            .zip(other.blocks.iter())
            .fold(0u64, |acc, (a, b)| acc ^ (a & b))
            .count_ones()
            % 2
            == 1
    }
}
