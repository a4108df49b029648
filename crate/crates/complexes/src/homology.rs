//! Homology of a U-complex, per grading, via two independent routes.
//!
//! Both routes work with "strata": the grading-r piece of the module has one
//! basis item (g, a) per generator g with gr(g) - 2a = r, a >= 0.  The
//! truncated route additionally imposes a < delta (coefficients in
//! F2[U]/U^delta) and answers tower questions with a finite U-power budget;
//! the exact route keeps all items (each stratum is still finite) and
//! reads off the module structure by persistence, using the fact that
//! multiplication by U is an isomorphism H_s -> H_{s-2} for every
//! s <= min_gr - 1, so nothing is born or dies below min_gr - 2.

use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::sync::Arc;

use coeff_linalg::{BitRow, Subspace};

use crate::ucomplex::{GradedMap, UComplex};

/// Strata of a complex with optional U-truncation.
pub struct Strata {
    cx: Arc<UComplex>,
    delta: Option<i64>,
    basis: BTreeMap<i64, Vec<(u32, i64)>>,
    bdry: BTreeMap<i64, Subspace>,
    hreps: BTreeMap<i64, Vec<BitRow>>,
}

/// Preimages (as coordinate rows over the input index) of zero under the
/// linear map given by `images`, via pivot-tracked elimination in input
/// order.  `images[i]` is the image of the i-th input basis vector.
pub fn kernel_with_preimages(images: &[BitRow]) -> Vec<BitRow> {
    let n = images.len();
    let mut piv: BTreeMap<usize, (BitRow, BitRow)> = BTreeMap::new();
    let mut kernel = Vec::new();
    for (i, img) in images.iter().enumerate() {
        let mut ci = img.clone();
        let mut cp = BitRow::zeros(n);
        cp.set(i);
        loop {
            let Some(j) = ci.lowest_set() else {
                kernel.push(cp);
                break;
            };
            if let Some((pv, pt)) = piv.get(&j) {
                ci.xor_assign(pv);
                cp.xor_assign(pt);
            } else {
                piv.insert(j, (ci, cp));
                break;
            }
        }
    }
    kernel
}

impl Strata {
    pub fn new(cx: Arc<UComplex>, delta: Option<i64>) -> Strata {
        if let Some(d) = delta {
            assert!(d > 0, "truncation level must be positive");
        }
        Strata {
            cx,
            delta,
            basis: BTreeMap::new(),
            bdry: BTreeMap::new(),
            hreps: BTreeMap::new(),
        }
    }

    pub fn complex(&self) -> &Arc<UComplex> {
        &self.cx
    }

    pub fn delta(&self) -> Option<i64> {
        self.delta
    }

    fn in_range(&self, a: i64) -> bool {
        a >= 0 && self.delta.map_or(true, |d| a < d)
    }

    fn ensure_basis(&mut self, r: i64) {
        if self.basis.contains_key(&r) {
            return;
        }
        let mut items = Vec::new();
        for g in 0..self.cx.len() as u32 {
            let t = self.cx.gr(g) - r;
            if t >= 0 && t % 2 == 0 {
                let a = t / 2;
                if self.in_range(a) {
                    items.push((g, a));
                }
            }
        }
        self.basis.insert(r, items);
    }

    /// Basis items (generator, U-power) of the grading-r stratum, in
    /// generator order (each generator occurs at most once).
    pub fn basis(&mut self, r: i64) -> Vec<(u32, i64)> {
        self.ensure_basis(r);
        self.basis[&r].clone()
    }

    pub fn width(&mut self, r: i64) -> usize {
        self.ensure_basis(r);
        self.basis[&r].len()
    }

    fn position(items: &[(u32, i64)], g: u32) -> usize {
        items
            .binary_search_by_key(&g, |it| it.0)
            .expect("generator not present in stratum")
    }

    /// Coordinate vector of a chain given as (generator, U-power) items.
    pub fn vec(&mut self, items: &[(u32, i64)], r: i64) -> BitRow {
        let stratum = self.basis(r);
        let mut v = BitRow::zeros(stratum.len());
        for &(g, a) in items {
            assert_eq!(self.cx.gr(g) - 2 * a, r, "inhomogeneous chain");
            assert!(a >= 0, "negative U-power");
            if self.in_range(a) {
                v.toggle(Self::position(&stratum, g));
            }
        }
        v
    }

    /// Decode a coordinate vector back to (generator, U-power) items.
    pub fn items(&mut self, v: &BitRow, r: i64) -> Vec<(u32, i64)> {
        let stratum = self.basis(r);
        stratum
            .iter()
            .enumerate()
            .filter(|&(i, _)| v.get(i))
            .map(|(_, &it)| it)
            .collect()
    }

    pub fn d_apply(&mut self, v: &BitRow, r: i64) -> BitRow {
        let src = self.basis(r);
        let dst = self.basis(r - 1);
        let mut out = BitRow::zeros(dst.len());
        for (i, &(g, a)) in src.iter().enumerate() {
            if !v.get(i) {
                continue;
            }
            for &b in self.cx.out_arrows(g) {
                let a2 = a + self.cx.exponent(g, b);
                if self.in_range(a2) {
                    out.toggle(Self::position(&dst, b));
                }
            }
        }
        out
    }

    pub fn u_apply(&mut self, v: &BitRow, r: i64) -> BitRow {
        let src = self.basis(r);
        let dst = self.basis(r - 2);
        let mut out = BitRow::zeros(dst.len());
        for (i, &(g, a)) in src.iter().enumerate() {
            if v.get(i) && self.in_range(a + 1) {
                out.toggle(Self::position(&dst, g));
            }
        }
        out
    }

    pub fn u_pow(&mut self, v: &BitRow, r: i64, n: i64) -> (BitRow, i64) {
        let mut v = v.clone();
        let mut r = r;
        for _ in 0..n {
            v = self.u_apply(&v, r);
            r -= 2;
        }
        (v, r)
    }

    /// Apply a graded map arrow-wise to a stratum vector; returns the image
    /// vector and its stratum.
    pub fn apply_map(&mut self, m: &GradedMap, v: &BitRow, r: i64) -> (BitRow, i64) {
        assert_eq!(m.source.fingerprint(), self.cx.fingerprint());
        assert_eq!(m.target.fingerprint(), self.cx.fingerprint());
        let src = self.basis(r);
        let r2 = r + m.degree;
        let dst = self.basis(r2);
        let mut out = BitRow::zeros(dst.len());
        for (i, &(g, a)) in src.iter().enumerate() {
            if !v.get(i) {
                continue;
            }
            for (y, e) in m.apply_gen(g) {
                let a2 = a + e;
                if self.in_range(a2) {
                    out.toggle(Self::position(&dst, y));
                }
            }
        }
        (out, r2)
    }

    pub fn boundaries(&mut self, r: i64) -> &Subspace {
        if !self.bdry.contains_key(&r) {
            let n_above = self.width(r + 1);
            let mut sub = Subspace::new();
            for i in 0..n_above {
                let mut e = BitRow::zeros(n_above);
                e.set(i);
                let img = self.d_apply(&e, r + 1);
                sub.add(&img);
            }
            self.bdry.insert(r, sub);
        }
        &self.bdry[&r]
    }

    pub fn boundaries_contain(&mut self, v: &BitRow, r: i64) -> bool {
        self.boundaries(r).contains(v)
    }

    /// Cycle representatives forming a basis of H_r, in elimination order.
    pub fn h_reps(&mut self, r: i64) -> Vec<BitRow> {
        if let Some(reps) = self.hreps.get(&r) {
            return reps.clone();
        }
        let n = self.width(r);
        let mut images = Vec::with_capacity(n);
        for i in 0..n {
            let mut e = BitRow::zeros(n);
            e.set(i);
            images.push(self.d_apply(&e, r));
        }
        let kernel = kernel_with_preimages(&images);
        let mut span = Subspace::new();
        for b in self.boundaries(r).basis() {
            span.add(b);
        }
        let mut reps = Vec::new();
        for z in kernel {
            if span.add(&z) {
                reps.push(z);
            }
        }
        self.hreps.insert(r, reps.clone());
        reps
    }

    pub fn h_dim(&mut self, r: i64) -> usize {
        self.h_reps(r).len()
    }

    /// Coordinates of the class of cycle v in the h_reps(r) basis, or None
    /// when v is not in their span modulo boundaries.
    pub fn class_coords(&mut self, v: &BitRow, r: i64) -> Option<BitRow> {
        let reps = self.h_reps(r);
        let mut span = Subspace::new();
        for b in self.boundaries(r).basis() {
            span.add(b);
        }
        let mut piv: BTreeMap<usize, (BitRow, BitRow)> = BTreeMap::new();
        for (i, z) in reps.iter().enumerate() {
            let mut cv = span.reduce(z);
            let mut ct = BitRow::zeros(reps.len());
            ct.set(i);
            while let Some(j) = cv.lowest_set() {
                if let Some((pv, pt)) = piv.get(&j) {
                    cv.xor_assign(pv);
                    ct.xor_assign(pt);
                } else {
                    piv.insert(j, (cv, ct));
                    break;
                }
            }
        }
        let mut coords = BitRow::zeros(reps.len());
        let mut cv = span.reduce(v);
        while let Some(j) = cv.lowest_set() {
            let (pv, pt) = piv.get(&j)?;
            cv.xor_assign(pv);
            coords.xor_assign(pt);
        }
        Some(coords)
    }

    /// Rows (in H_r coordinates to H_{r-2n} coordinates) of U^n on homology;
    /// classes leaving the computed span are recorded as zero.
    pub fn u_matrix_on_h(&mut self, r: i64, n: i64) -> Vec<BitRow> {
        let reps = self.h_reps(r);
        let target_dim = self.h_dim(r - 2 * n);
        let mut out = Vec::with_capacity(reps.len());
        for z in &reps {
            let (v, rr) = self.u_pow(z, r, n);
            out.push(
                self.class_coords(&v, rr)
                    .unwrap_or_else(|| BitRow::zeros(target_dim)),
            );
        }
        out
    }
}

/// Truncation level that is comfortably larger than anything the complex can
/// exhibit: 2 * (grading span + 2 * max arrow exponent + 10).
pub fn default_delta(cx: &UComplex) -> i64 {
    if cx.is_empty() {
        return 20;
    }
    let span = cx.max_gr() - cx.min_gr();
    2 * (span + 2 * cx.max_exponent() + 10)
}

/// Max grading of an F2[U]-tower top in H(C), truncated route.
pub fn d_invariant_trunc(cx: &Arc<UComplex>, delta: Option<i64>, budget: Option<i64>) -> Option<i64> {
    if cx.is_empty() {
        return None;
    }
    let delta = delta.unwrap_or_else(|| default_delta(cx));
    let budget = budget.unwrap_or(delta / 3);
    let mut h = Strata::new(cx.clone(), Some(delta));
    let (lo, hi) = (cx.min_gr(), cx.max_gr());
    for r in (lo - 2..=hi).rev() {
        for z in h.h_reps(r) {
            let (v, rr) = h.u_pow(&z, r, budget);
            if !h.boundaries_contain(&v, rr) {
                return Some(r);
            }
        }
    }
    None
}

fn sort_desc(free: &mut Vec<i64>, torsion: &mut Vec<(i64, i64)>) {
    free.sort_unstable_by(|a, b| b.cmp(a));
    torsion.sort_unstable_by(|a, b| b.cmp(a));
}

/// (free tower top gradings desc, torsion (top grading, order) desc),
/// truncated route: ranks of ker U^k + im U inside each H_r.
pub fn homology_report_trunc(cx: &Arc<UComplex>, delta: Option<i64>) -> (Vec<i64>, Vec<(i64, i64)>) {
    if cx.is_empty() {
        return (Vec::new(), Vec::new());
    }
    let delta = delta.unwrap_or_else(|| default_delta(cx));
    let budget = delta / 3;
    let mut h = Strata::new(cx.clone(), Some(delta));
    let (lo, hi) = (cx.min_gr(), cx.max_gr());
    let mut free = Vec::new();
    let mut torsion = Vec::new();
    for r in (lo - 2..=hi).rev() {
        let reps = h.h_reps(r);
        if reps.is_empty() {
            continue;
        }
        let n = reps.len();
        let mut uimg = Subspace::new();
        for c in h.u_matrix_on_h(r + 2, 1) {
            uimg.add(&c);
        }
        let mut prev_rank = uimg.dim();
        for k in 1..=budget {
            let mat = h.u_matrix_on_h(r, k);
            let kern = kernel_with_preimages(&mat);
            let mut spank = Subspace::new();
            for b in uimg.basis() {
                spank.add(b);
            }
            for v in kern {
                spank.add(&v);
            }
            let rank_k = spank.dim();
            for _ in 0..rank_k.saturating_sub(prev_rank) {
                torsion.push((r, k));
            }
            prev_rank = rank_k;
            if rank_k == n {
                break;
            }
        }
        for _ in 0..n.saturating_sub(prev_rank) {
            free.push(r);
        }
    }
    sort_desc(&mut free, &mut torsion);
    (free, torsion)
}

pub fn max_torsion_order_trunc(cx: &Arc<UComplex>, delta: Option<i64>) -> i64 {
    let (_, tors) = homology_report_trunc(cx, delta);
    tors.iter().map(|&(_, o)| o).max().unwrap_or(0)
}

/// Smallest n with U^n * [chain] = 0 in H, or None if the class survives the
/// budget.  The chain must be a homogeneous cycle.
pub fn class_death_time(
    cx: &Arc<UComplex>,
    chain: &[(u32, i64)],
    delta: Option<i64>,
    budget: Option<i64>,
) -> Option<i64> {
    let delta = delta.unwrap_or_else(|| default_delta(cx));
    let budget = budget.unwrap_or(delta / 3);
    let mut h = Strata::new(cx.clone(), Some(delta));
    let rset: BTreeSet<i64> = chain.iter().map(|&(g, a)| cx.gr(g) - 2 * a).collect();
    assert_eq!(rset.len(), 1, "inhomogeneous chain");
    let mut r = *rset.iter().next().unwrap();
    let mut v = h.vec(chain, r);
    assert!(h.d_apply(&v, r).is_zero(), "not a cycle");
    for n in 0..=budget {
        if h.boundaries_contain(&v, r) {
            return Some(n);
        }
        v = h.u_apply(&v, r);
        r -= 2;
    }
    None
}

/// Exact route: full F2[U]-module decomposition of H(C) by persistence.
///
/// Sweeping gradings downward, classes carried from above (transported by U,
/// which is injective item-wise in the exact strata) die when they fall into
/// boundaries + older classes, and new classes are born from fresh cycle
/// representatives.  The sweep stops at min_gr - 2: below that U is an
/// isomorphism on homology, so survivors are exactly the infinite towers.
pub fn homology_report_exact(cx: &Arc<UComplex>) -> (Vec<i64>, Vec<(i64, i64)>) {
    if cx.is_empty() {
        return (Vec::new(), Vec::new());
    }
    let mut st = Strata::new(cx.clone(), None);
    let hi = cx.max_gr();
    let floor = cx.min_gr() - 2;
    let mut pending: BTreeMap<i64, Vec<(i64, BitRow)>> = BTreeMap::new();
    let mut free = Vec::new();
    let mut torsion = Vec::new();
    for r in (floor..=hi).rev() {
        let incoming = pending.remove(&r).unwrap_or_default();
        let mut span = Subspace::new();
        for b in st.boundaries(r).basis() {
            span.add(b);
        }
        let mut survivors: Vec<(i64, BitRow)> = Vec::new();
        for (birth, v) in incoming {
            if span.add(&v) {
                survivors.push((birth, v));
            } else {
                torsion.push((birth, (birth - r) / 2));
            }
        }
        for z in st.h_reps(r) {
            if span.add(&z) {
                survivors.push((r, z));
            }
        }
        if r - 2 >= floor {
            let transported: Vec<(i64, BitRow)> = survivors
                .into_iter()
                .map(|(birth, v)| (birth, st.u_apply(&v, r)))
                .collect();
            if !transported.is_empty() {
                pending.insert(r - 2, transported);
            }
        } else {
            for (birth, _) in survivors {
                free.push(birth);
            }
        }
    }
    sort_desc(&mut free, &mut torsion);
    (free, torsion)
}

pub fn d_invariant_exact(cx: &Arc<UComplex>) -> Option<i64> {
    homology_report_exact(cx).0.first().copied()
}

pub fn max_torsion_order_exact(cx: &Arc<UComplex>) -> i64 {
    homology_report_exact(cx)
        .1
        .iter()
        .map(|&(_, o)| o)
        .max()
        .unwrap_or(0)
}

/// Mapping-cone model carrying the involution: CI = C[-1] (x) F[Q]/Q^2 with
/// differential d + Q(1 + iota); the Q^0 copy of x sits at gr(x) + 1, the
/// Q^1 copy at gr(x).  Returns the complex and the degree -1 map Q.
pub fn build_ci(cx: &Arc<UComplex>, iota: &GradedMap) -> (Arc<UComplex>, GradedMap) {
    assert_eq!(iota.source.fingerprint(), cx.fingerprint());
    assert_eq!(iota.target.fingerprint(), cx.fingerprint());
    assert_eq!(iota.degree, 0);
    let q0 = |g: &str| format!("({g},0)");
    let q1 = |g: &str| format!("({g},1)");
    let mut gens = Vec::new();
    for g in 0..cx.len() as u32 {
        gens.push((q0(cx.name(g)), cx.gr(g) + 1));
        gens.push((q1(cx.name(g)), cx.gr(g)));
    }
    let mut diff: BTreeSet<(String, String)> = BTreeSet::new();
    let mut toggle = |diff: &mut BTreeSet<(String, String)>, p: (String, String)| {
        if !diff.remove(&p) {
            diff.insert(p);
        }
    };
    for &(a, b) in cx.diff() {
        toggle(&mut diff, (q0(cx.name(a)), q0(cx.name(b))));
        toggle(&mut diff, (q1(cx.name(a)), q1(cx.name(b))));
    }
    for g in 0..cx.len() as u32 {
        toggle(&mut diff, (q0(cx.name(g)), q1(cx.name(g))));
    }
    for &(a, b) in iota.pairs() {
        toggle(&mut diff, (q0(cx.name(a)), q1(cx.name(b))));
    }
    let ci = UComplex::new(gens, diff);
    let q_pairs = (0..cx.len() as u32)
        .map(|g| (ci.id_of(&q0(cx.name(g))), ci.id_of(&q1(cx.name(g)))))
        .collect();
    let q = GradedMap::new(ci.clone(), ci.clone(), -1, q_pairs, false);
    (ci, q)
}

/// Upper bound on the dimension of any single homology stratum the
/// brute-force tower searches will enumerate subsets of.
pub const MAX_ENUM_DIM: usize = 18;

fn enum_combos(reps: &[BitRow], width: usize, mask: u64) -> BitRow {
    let mut x = BitRow::zeros(width);
    for (i, z) in reps.iter().enumerate() {
        if (mask >> i) & 1 == 1 {
            x.xor_assign(z);
        }
    }
    x
}

struct QbCache {
    spans: BTreeMap<i64, Subspace>,
}

impl QbCache {
    fn span<'a>(
        &'a mut self,
        h: &mut Strata,
        q: &GradedMap,
        r: i64,
    ) -> &'a Subspace {
        if !self.spans.contains_key(&r) {
            let mut span = Subspace::new();
            for b in h.boundaries(r).basis() {
                span.add(b);
            }
            for z in h.h_reps(r + 1) {
                let (v, rr) = h.apply_map(q, &z, r + 1);
                debug_assert_eq!(rr, r);
                span.add(&v);
            }
            self.spans.insert(r, span);
        }
        &self.spans[&r]
    }
}

/// (d_lower, d_upper) of an iota-complex, truncated brute force over the
/// mapping cone CI: d_upper is the highest grading carrying a tower class
/// that eventually lands in boundaries + Q(H), d_lower is one less than the
/// highest grading carrying a class that never does.
pub fn d_lower_upper_trunc(
    cx: &Arc<UComplex>,
    iota: &GradedMap,
    delta: Option<i64>,
    budget: Option<i64>,
) -> (Option<i64>, Option<i64>) {
    let (ci, q) = build_ci(cx, iota);
    let delta = delta.unwrap_or_else(|| default_delta(&ci));
    let budget = budget.unwrap_or(delta / 3);
    let mut h = Strata::new(ci.clone(), Some(delta));
    let mut qb = QbCache {
        spans: BTreeMap::new(),
    };
    let (lo, hi) = (ci.min_gr(), ci.max_gr());
    let mut d_low = None;
    let mut d_up = None;
    for r in (lo - 2..=hi).rev() {
        let reps = h.h_reps(r);
        if reps.is_empty() {
            continue;
        }
        let dim = reps.len();
        assert!(dim <= MAX_ENUM_DIM, "homology dimension {dim} at grading {r}");
        let width = h.width(r);
        if d_up.is_none() {
            'combo: for mask in 1..(1u64 << dim) {
                let x = enum_combos(&reps, width, mask);
                let (v, rr) = h.u_pow(&x, r, budget);
                if h.boundaries_contain(&v, rr) {
                    continue;
                }
                let mut xr = x;
                let mut xrr = r;
                for _ in 0..=budget {
                    if qb.span(&mut h, &q, xrr).contains(&xr) {
                        d_up = Some(r);
                        break 'combo;
                    }
                    xr = h.u_apply(&xr, xrr);
                    xrr -= 2;
                }
            }
        }
        if d_low.is_none() {
            'combo2: for mask in 1..(1u64 << dim) {
                let x = enum_combos(&reps, width, mask);
                let mut xr = x;
                let mut xrr = r;
                let mut escaped = true;
                for _ in 0..=budget {
                    if qb.span(&mut h, &q, xrr).contains(&xr) {
                        escaped = false;
                        break;
                    }
                    xr = h.u_apply(&xr, xrr);
                    xrr -= 2;
                }
                if escaped {
                    d_low = Some(r - 1);
                    break 'combo2;
                }
            }
        }
        if d_low.is_some() && d_up.is_some() {
            break;
        }
    }
    (d_low, d_up)
}

/// Exact route for (d_lower, d_upper): same scan as the truncated one, but
/// on untruncated strata, with U-power horizons chosen to reach the stable
/// zone (below min_gr of CI, U is an isomorphism on homology and commutes
/// with Q, so membership in boundaries + Q(H) is decided there).
pub fn d_lower_upper_exact(cx: &Arc<UComplex>, iota: &GradedMap) -> (Option<i64>, Option<i64>) {
    let (ci, q) = build_ci(cx, iota);
    let mut h = Strata::new(ci.clone(), None);
    let mut qb = QbCache {
        spans: BTreeMap::new(),
    };
    let (lo, hi) = (ci.min_gr(), ci.max_gr());
    let mut d_low = None;
    let mut d_up = None;
    for r in (lo - 2..=hi).rev() {
        let reps = h.h_reps(r);
        if reps.is_empty() {
            continue;
        }
        let dim = reps.len();
        assert!(dim <= MAX_ENUM_DIM, "homology dimension {dim} at grading {r}");
        let width = h.width(r);
        // Steps to land strictly inside the stable zone from stratum r.
        let horizon = ((r - (lo - 2)).max(0) + 1) / 2 + 2;
        if d_up.is_none() {
            'combo: for mask in 1..(1u64 << dim) {
                let x = enum_combos(&reps, width, mask);
                let (v, rr) = h.u_pow(&x, r, horizon);
                if h.boundaries_contain(&v, rr) {
                    continue;
                }
                let mut xr = x;
                let mut xrr = r;
                for _ in 0..=horizon {
                    if qb.span(&mut h, &q, xrr).contains(&xr) {
                        d_up = Some(r);
                        break 'combo;
                    }
                    xr = h.u_apply(&xr, xrr);
                    xrr -= 2;
                }
            }
        }
        if d_low.is_none() {
            'combo2: for mask in 1..(1u64 << dim) {
                let x = enum_combos(&reps, width, mask);
                let mut xr = x;
                let mut xrr = r;
                let mut escaped = true;
                for _ in 0..=horizon {
                    if qb.span(&mut h, &q, xrr).contains(&xr) {
                        escaped = false;
                        break;
                    }
                    xr = h.u_apply(&xr, xrr);
                    xrr -= 2;
                }
                if escaped {
                    d_low = Some(r - 1);
                    break 'combo2;
                }
            }
        }
        if d_low.is_some() && d_up.is_some() {
            break;
        }
    }
    (d_low, d_up)
}

/// Public involutive correction terms (d_lower, d_upper): truncated route
/// run at increasing truncation levels until two consecutive levels agree.
pub fn d_lower_upper(cx: &Arc<UComplex>, iota: &GradedMap) -> (i64, i64) {
    let (ci, _) = build_ci(cx, iota);
    let span = ci.max_gr() - ci.min_gr();
    let maxtors = max_torsion_order_trunc(&ci, None);
    let mut delta = (span / 2 + maxtors + 2).max(8);
    let mut prev = d_lower_upper_trunc(cx, iota, Some(delta), None);
    for _ in 0..12 {
        delta *= 2;
        let cur = d_lower_upper_trunc(cx, iota, Some(delta), None);
        if cur == prev {
            if let (Some(l), Some(u)) = cur {
                return (l, u);
            }
        }
        prev = cur;
    }
    panic!("correction terms did not stabilize under truncation refinement");
}

/// Public plain correction term d: exact route, cross-checked callers use
/// [`d_invariant_trunc`] as the second opinion.
pub fn d_invariant(cx: &Arc<UComplex>) -> Option<i64> {
    d_invariant_exact(cx)
}

/// Public homology decomposition: exact persistence route.
pub fn homology_report(cx: &Arc<UComplex>) -> (Vec<i64>, Vec<(i64, i64)>) {
    homology_report_exact(cx)
}
