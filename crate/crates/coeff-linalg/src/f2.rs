//! Solvers and subspace bookkeeping over F2.

use crate::bits::BitRow;
use std::collections::BTreeMap;

/// Reduced row echelon form of the given rows.
///
/// Returns the canonical echelon basis of the row space together with the
/// pivot column of each returned row, sorted by pivot column.
pub fn rref(rows: &[BitRow], width: usize) -> (Vec<BitRow>, Vec<usize>) {
    let mut red: Vec<BitRow> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    for row in rows {
        let mut cur = row.clone();
        for (r, &p) in red.iter().zip(pivots.iter()) {
            if cur.get(p) {
                cur.xor_assign(r);
            }
        }
        if let Some(p) = cur.lowest_set() {
            for r in red.iter_mut() {
                if r.get(p) {
                    r.xor_assign(&cur);
                }
            }
            red.push(cur);
            pivots.push(p);
        }
    }
    let mut order: Vec<usize> = (0..red.len()).collect();
    order.sort_by_key(|&i| pivots[i]);
    let red_sorted = order.iter().map(|&i| red[i].clone()).collect();
    let piv_sorted = order.iter().map(|&i| pivots[i]).collect();
    let _ = width;
    (red_sorted, piv_sorted)
}

/// Basis of the solution space of the homogeneous system `A x = 0`, where the
/// rows of `A` are the given support vectors over `n_unknowns` unknowns.
///
/// One basis vector per free column, in increasing free-column order.
pub fn nullspace_basis(supports: &[BitRow], n_unknowns: usize) -> Vec<BitRow> {
    let (red, pivots) = rref(supports, n_unknowns);
    let pivot_set: BTreeMap<usize, usize> = pivots
        .iter()
        .enumerate()
        .map(|(row, &col)| (col, row))
        .collect();
    let mut basis = Vec::new();
    for free in 0..n_unknowns {
        if pivot_set.contains_key(&free) {
            continue;
        }
        let mut v = BitRow::zeros(n_unknowns);
        v.set(free);
        for (&pcol, &prow) in pivot_set.iter() {
            if red[prow].get(free) {
                v.set(pcol);
            }
        }
        basis.push(v);
    }
    basis
}

/// An F2 subspace maintained as an echelon basis keyed by pivot index.
#[derive(Clone, Debug, Default)]
pub struct Subspace {
    rows: BTreeMap<usize, BitRow>,
}

impl Subspace {
    pub fn new() -> Self {
        Self::default()
    }

    /// Reduce a vector against the current basis; the result is zero exactly
    /// when the vector lies in the subspace.
    pub fn reduce(&self, v: &BitRow) -> BitRow {
        let mut cur = v.clone();
        while let Some(p) = cur.lowest_set() {
            match self.rows.get(&p) {
                Some(r) => cur.xor_assign(r),
                None => break,
            }
        }
        cur
    }

    /// Add a vector; returns true when it enlarged the subspace.
    pub fn add(&mut self, v: &BitRow) -> bool {
        let red = self.reduce(v);
        match red.lowest_set() {
            Some(p) => {
                self.rows.insert(p, red);
                true
            }
            None => false,
        }
    }

    pub fn contains(&self, v: &BitRow) -> bool {
        self.reduce(v).is_zero()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> impl Iterator<Item = &BitRow> {
        self.rows.values()
    }
}

/// Solve the affine F2 system given by `(support, rhs)` rows over
/// `n_unknowns` unknowns.
///
/// Rows are processed in the given order; each surviving row pivots on its
/// lowest remaining unknown and free unknowns take the value 0, so the
/// returned solution is deterministic.  Returns `None` when inconsistent.
pub fn solve_affine(equations: &[(BitRow, bool)], n_unknowns: usize) -> Option<BitRow> {
    let mut pivots: BTreeMap<usize, (BitRow, bool)> = BTreeMap::new();
    for (mask, rhs) in equations {
        let mut cur = mask.clone();
        let mut r = *rhs;
        loop {
            match cur.lowest_set() {
                None => {
                    if r {
                        return None;
                    }
                    break;
                }
                Some(j) => match pivots.get(&j) {
                    Some((row, rr)) => {
                        cur.xor_assign(row);
                        r ^= rr;
                    }
                    None => {
                        pivots.insert(j, (cur, r));
                        break;
                    }
                },
            }
        }
    }
    let mut sol = BitRow::zeros(n_unknowns);
    for (&j, (row, rhs)) in pivots.iter().rev() {
        let mut val = *rhs;
        for k in row.ones() {
            if k != j && sol.get(k) {
                val = !val;
            }
        }
        if val {
            sol.set(j);
        }
    }
    Some(sol)
}

/// A sparse matrix over F2 given by its set of unit entries.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct F2Matrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: std::collections::BTreeSet<(usize, usize)>,
}

impl F2Matrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        F2Matrix {
            rows,
            cols,
            entries: Default::default(),
        }
    }

    pub fn set(&mut self, r: usize, c: usize) {
        assert!(r < self.rows && c < self.cols);
        if !self.entries.insert((r, c)) {
            self.entries.remove(&(r, c));
        }
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.entries.contains(&(r, c))
    }

    fn row_vec(&self, r: usize) -> BitRow {
        BitRow::from_bits(
            self.cols,
            self.entries
                .range((r, 0)..(r + 1, 0))
                .map(|&(_, c)| c),
        )
    }
}

/// Solve `A x = b` over F2; `None` when inconsistent.  The solution is the
/// deterministic one produced by [`solve_affine`] (free unknowns zero).
pub fn solve_f2(a: &F2Matrix, b: &[bool]) -> Option<Vec<bool>> {
    assert_eq!(a.rows, b.len());
    let eqs: Vec<(BitRow, bool)> = (0..a.rows).map(|r| (a.row_vec(r), b[r])).collect();
    let sol = solve_affine(&eqs, a.cols)?;
    Some((0..a.cols).map(|c| sol.get(c)).collect())
}

/// Basis of the nullspace of `A` over F2.
pub fn nullspace_f2(a: &F2Matrix) -> Vec<Vec<bool>> {
    let rows: Vec<BitRow> = (0..a.rows).map(|r| a.row_vec(r)).collect();
    nullspace_basis(&rows, a.cols)
        .into_iter()
        .map(|v| (0..a.cols).map(|c| v.get(c)).collect())
        .collect()
}
