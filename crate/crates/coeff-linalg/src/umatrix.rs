//! Sparse matrices over F2\[U\] and their Smith normal form.

use crate::upoly::UPoly;
use std::collections::BTreeMap;

/// A sparse matrix with entries in F2\[U\].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UMatrix {
    pub rows: usize,
    pub cols: usize,
    entries: BTreeMap<(usize, usize), UPoly>,
}

impl UMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        UMatrix {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = UMatrix::new(n, n);
        for i in 0..n {
            m.set(i, i, UPoly::one());
        }
        m
    }

    pub fn set(&mut self, r: usize, c: usize, p: UPoly) {
        assert!(r < self.rows && c < self.cols, "entry out of range");
        if p.is_zero() {
            self.entries.remove(&(r, c));
        } else {
            self.entries.insert((r, c), p);
        }
    }

    pub fn get(&self, r: usize, c: usize) -> UPoly {
        self.entries.get(&(r, c)).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(usize, usize), &UPoly)> {
        self.entries.iter()
    }

    pub fn is_diagonal(&self) -> bool {
        self.entries.keys().all(|&(r, c)| r == c)
    }

    fn add_into(&mut self, r: usize, c: usize, p: &UPoly) {
        if p.is_zero() {
            return;
        }
        let cur = self.get(r, c).add(p);
        self.set(r, c, cur);
    }

    fn row_entries(&self, r: usize) -> Vec<(usize, UPoly)> {
        self.entries
            .range((r, 0)..(r + 1, 0))
            .map(|(&(_, c), p)| (c, p.clone()))
            .collect()
    }

    fn col_entries(&self, c: usize) -> Vec<(usize, UPoly)> {
        self.entries
            .iter()
            .filter(|(&(_, cc), _)| cc == c)
            .map(|(&(r, _), p)| (r, p.clone()))
            .collect()
    }

    /// row_i += q * row_k
    fn row_add(&mut self, i: usize, k: usize, q: &UPoly) {
        for (c, p) in self.row_entries(k) {
            self.add_into(i, c, &p.mul(q));
        }
    }

    /// col_j += q * col_k
    fn col_add(&mut self, j: usize, k: usize, q: &UPoly) {
        for (r, p) in self.col_entries(k) {
            self.add_into(r, j, &p.mul(q));
        }
    }

    fn row_swap(&mut self, i: usize, k: usize) {
        if i == k {
            return;
        }
        let ri = self.row_entries(i);
        let rk = self.row_entries(k);
        for (c, _) in &ri {
            self.entries.remove(&(i, *c));
        }
        for (c, _) in &rk {
            self.entries.remove(&(k, *c));
        }
        for (c, p) in ri {
            self.entries.insert((k, c), p);
        }
        for (c, p) in rk {
            self.entries.insert((i, c), p);
        }
    }

    fn col_swap(&mut self, j: usize, k: usize) {
        if j == k {
            return;
        }
        let cj = self.col_entries(j);
        let ck = self.col_entries(k);
        for (r, _) in &cj {
            self.entries.remove(&(*r, j));
        }
        for (r, _) in &ck {
            self.entries.remove(&(*r, k));
        }
        for (r, p) in cj {
            self.entries.insert((r, k), p);
        }
        for (r, p) in ck {
            self.entries.insert((r, j), p);
        }
    }
}

/// Sparse product `A * B`.
pub fn compose_sparse(a: &UMatrix, b: &UMatrix) -> UMatrix {
    assert_eq!(a.cols, b.rows, "dimension mismatch in product");
    let mut out = UMatrix::new(a.rows, b.cols);
    // Group B's rows once so each A-entry only touches matching B-entries.
    let mut b_rows: BTreeMap<usize, Vec<(usize, &UPoly)>> = BTreeMap::new();
    for (&(r, c), p) in b.iter() {
        b_rows.entry(r).or_default().push((c, p));
    }
    for (&(i, k), p) in a.iter() {
        if let Some(row) = b_rows.get(&k) {
            for (j, q) in row {
                out.add_into(i, *j, &p.mul(q));
            }
        }
    }
    out
}

/// Smith normal form data: `l * m * r = d` with `d` diagonal and each
/// diagonal entry dividing the next.  `l_inv` and `r_inv` are the tracked
/// inverses of the unimodular factors.
#[derive(Clone, Debug)]
pub struct Snf {
    pub d: UMatrix,
    pub l: UMatrix,
    pub r: UMatrix,
    pub l_inv: UMatrix,
    pub r_inv: UMatrix,
}

impl Snf {
    /// Diagonal entries, including zeros, in diagonal order.
    pub fn diagonal(&self) -> Vec<UPoly> {
        (0..self.d.rows.min(self.d.cols))
            .map(|i| self.d.get(i, i))
            .collect()
    }
}

struct SnfState {
    d: UMatrix,
    l: UMatrix,
    r: UMatrix,
    l_inv: UMatrix,
    r_inv: UMatrix,
}

impl SnfState {
    fn row_add(&mut self, i: usize, k: usize, q: &UPoly) {
        self.d.row_add(i, k, q);
        self.l.row_add(i, k, q);
        // (I + q e_ik)^-1 = I + q e_ik over F2, applied on the right of l_inv:
        // col_k += q * col_i.
        self.l_inv.col_add(k, i, q);
    }

    fn col_add(&mut self, j: usize, k: usize, q: &UPoly) {
        self.d.col_add(j, k, q);
        self.r.col_add(j, k, q);
        self.r_inv.row_add(k, j, q);
    }

    fn row_swap(&mut self, i: usize, k: usize) {
        self.d.row_swap(i, k);
        self.l.row_swap(i, k);
        self.l_inv.col_swap(i, k);
    }

    fn col_swap(&mut self, j: usize, k: usize) {
        self.d.col_swap(j, k);
        self.r.col_swap(j, k);
        self.r_inv.row_swap(j, k);
    }

    /// Nonzero entry of minimal degree in the trailing submatrix starting at
    /// `t`, ties broken by (row, col).
    fn min_entry(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, (usize, usize))> = None;
        for (&(r, c), p) in self.d.iter() {
            if r < t || c < t {
                continue;
            }
            let deg = p.degree().expect("stored entries are nonzero");
            let cand = (deg, (r, c));
            if best.map_or(true, |b| cand < b) {
                best = Some(cand);
            }
        }
        best.map(|(_, rc)| rc)
    }
}

/// Smith normal form over F2\[U\] via Euclidean elimination.
///
/// The pivot at each stage is the entry of minimal U-degree in the remaining
/// submatrix (ties by row, then column), which keeps the computation
/// deterministic.  Divisibility of successive diagonal entries is enforced.
pub fn snf_over_u(m: &UMatrix) -> Snf {
    let mut st = SnfState {
        d: m.clone(),
        l: UMatrix::identity(m.rows),
        r: UMatrix::identity(m.cols),
        l_inv: UMatrix::identity(m.rows),
        r_inv: UMatrix::identity(m.cols),
    };
    let bound = m.rows.min(m.cols);
    let mut t = 0;
    while t < bound {
        let Some((pi, pj)) = st.min_entry(t) else {
            break;
        };
        st.row_swap(t, pi);
        st.col_swap(t, pj);
        // Clear row and column t; remainders of smaller degree restart the
        // stage with a better pivot.
        let mut dirty = true;
        while dirty {
            dirty = false;
            let pivot = st.d.get(t, t);
            for (i, p) in st.d.col_entries(t) {
                if i == t {
                    continue;
                }
                let (q, rem) = p.div_rem(&pivot);
                st.row_add(i, t, &q);
                if !rem.is_zero() {
                    st.row_swap(t, i);
                    dirty = true;
                    break;
                }
            }
            if dirty {
                continue;
            }
            for (j, p) in st.d.row_entries(t) {
                if j == t {
                    continue;
                }
                let (q, rem) = p.div_rem(&pivot);
                st.col_add(j, t, &q);
                if !rem.is_zero() {
                    st.col_swap(t, j);
                    dirty = true;
                    break;
                }
            }
            if dirty {
                continue;
            }
            // Row and column are clear; enforce divisibility into the rest.
            let pivot = st.d.get(t, t);
            let offender = st
                .d
                .iter()
                .find(|(&(r, c), p)| r > t && c > t && !pivot.divides(p))
                .map(|(&(r, c), _)| (r, c));
            if let Some((r, _)) = offender {
                st.row_add(t, r, &UPoly::one());
                dirty = true;
            }
        }
        t += 1;
    }
    Snf {
        d: st.d,
        l: st.l,
        r: st.r,
        l_inv: st.l_inv,
        r_inv: st.r_inv,
    }
}
