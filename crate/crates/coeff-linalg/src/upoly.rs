//! Polynomials in one variable U over F2, stored as coefficient bitmasks.

use std::fmt;

/// An element of F2\[U\].  Bit `k` of the backing mask is the coefficient of
/// `U^k`; every nonzero polynomial automatically has leading coefficient 1.
#[derive(Clone, PartialEq, Eq, Debug, Default, Hash)]
pub struct UPoly {
    blocks: Vec<u64>,
}

impl UPoly {
    pub fn zero() -> Self {
        UPoly::default()
    }

    pub fn one() -> Self {
        UPoly::monomial(0)
    }

    /// `U^k`.
    pub fn monomial(k: usize) -> Self {
        let mut blocks = vec![0u64; k / 64 + 1];
        blocks[k / 64] = 1 << (k % 64);
        UPoly { blocks }
    }

    pub fn from_exponents<I: IntoIterator<Item = usize>>(exps: I) -> Self {
        let mut p = UPoly::zero();
        for e in exps {
            p.toggle(e);
        }
        p
    }

    fn toggle(&mut self, k: usize) {
        let blk = k / 64;
        if blk >= self.blocks.len() {
            self.blocks.resize(blk + 1, 0);
        }
        self.blocks[blk] ^= 1 << (k % 64);
        self.trim();
    }

    fn trim(&mut self) {
        while matches!(self.blocks.last(), Some(0)) {
            self.blocks.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn coeff(&self, k: usize) -> bool {
        let blk = k / 64;
        blk < self.blocks.len() && (self.blocks[blk] >> (k % 64)) & 1 == 1
    }

    /// Degree of the polynomial; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        let blk = self.blocks.last()?;
        Some((self.blocks.len() - 1) * 64 + 63 - blk.leading_zeros() as usize)
    }

    pub fn exponents(&self) -> impl Iterator<Item = usize> + '_ {
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

    pub fn add(&self, other: &UPoly) -> UPoly {
        let mut blocks = self.blocks.clone();
        if other.blocks.len() > blocks.len() {
            blocks.resize(other.blocks.len(), 0);
        }
        for (a, b) in blocks.iter_mut().zip(other.blocks.iter()) {
            *a ^= *b;
        }
        let mut p = UPoly { blocks };
        p.trim();
        p
    }

    /// Multiply by `U^k`.
    pub fn shift(&self, k: usize) -> UPoly {
        UPoly::from_exponents(self.exponents().map(|e| e + k))
    }

    pub fn mul(&self, other: &UPoly) -> UPoly {
        let mut acc = UPoly::zero();
        for e in self.exponents() {
            acc = acc.add(&other.shift(e));
        }
        acc
    }

    /// Euclidean division: returns `(q, r)` with `self = q*d + r` and
    /// `deg r < deg d`.  Panics when `d` is zero.
    pub fn div_rem(&self, d: &UPoly) -> (UPoly, UPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let mut r = self.clone();
        let mut q = UPoly::zero();
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let s = rd - dd;
            q = q.add(&UPoly::monomial(s));
            r = r.add(&d.shift(s));
        }
        (q, r)
    }

    pub fn divides(&self, other: &UPoly) -> bool {
        if other.is_zero() {
            return true;
        }
        if self.is_zero() {
            return false;
        }
        other.div_rem(self).1.is_zero()
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms: Vec<String> = self
            .exponents()
            .map(|e| match e {
                0 => "1".to_string(),
                1 => "U".to_string(),
                _ => format!("U^{e}"),
            })
            .collect();
        terms.reverse();
        write!(f, "{}", terms.join("+"))
    }
}
