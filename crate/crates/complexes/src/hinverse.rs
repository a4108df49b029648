//! Homotopy inverses of chain maps.

use std::collections::BTreeMap;

use coeff_linalg::{solve_affine, BitRow};

use crate::reduce::reduce;
use crate::ucomplex::{find_homotopy, identity_map, legal_pairs, GradedMap};

/// Equation labels for the joint strict-inverse system, ordered so that all
/// f о g equations precede all g о f equations, each block by arrow.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum InvKey {
    Fg(u32, u32),
    Gf(u32, u32),
}

/// A strict two-sided inverse g (g о f = id, f о g = id) or None.
/// Unknowns are the grading-legal arrows of g in lexicographic order.
pub fn exact_inverse(f: &GradedMap) -> Option<GradedMap> {
    assert_eq!(f.degree, 0);
    let c = &f.source;
    let c2 = &f.target;
    let cand = legal_pairs(c2, c, 0, false);
    let n = cand.len();
    let mut f_by_to: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
    let mut f_by_from: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
    for &(x, y) in f.pairs() {
        f_by_to.entry(y).or_default().push(x);
        f_by_from.entry(x).or_default().push(y);
    }
    let mut support: BTreeMap<InvKey, BitRow> = BTreeMap::new();
    for (j, &(y, z)) in cand.iter().enumerate() {
        // (g о f)(x) terms x -> z over f: x -> y.
        if let Some(xs) = f_by_to.get(&y) {
            for &x in xs {
                support
                    .entry(InvKey::Gf(x, z))
                    .or_insert_with(|| BitRow::zeros(n))
                    .toggle(j);
            }
        }
        // (f о g)(u) terms u -> w over f: v -> w, reading (y, z) as g: u -> v.
        let (u, v) = (y, z);
        if let Some(ws) = f_by_from.get(&v) {
            for &w in ws {
                support
                    .entry(InvKey::Fg(u, w))
                    .or_insert_with(|| BitRow::zeros(n))
                    .toggle(j);
            }
        }
    }
    let mut keys: Vec<InvKey> = support.keys().copied().collect();
    for x in 0..c.len() as u32 {
        keys.push(InvKey::Gf(x, x));
    }
    for u in 0..c2.len() as u32 {
        keys.push(InvKey::Fg(u, u));
    }
    keys.sort_unstable();
    keys.dedup();
    let eqs: Vec<(BitRow, bool)> = keys
        .iter()
        .map(|k| {
            let row = support.get(k).cloned().unwrap_or_else(|| BitRow::zeros(n));
            let rhs = matches!(k, InvKey::Gf(x, z) if x == z)
                || matches!(k, InvKey::Fg(u, w) if u == w);
            (row, rhs)
        })
        .collect();
    let sol = solve_affine(&eqs, n)?;
    let pairs = cand
        .iter()
        .enumerate()
        .filter(|&(j, _)| sol.get(j))
        .map(|(_, &p)| p)
        .collect();
    Some(GradedMap::new(c2.clone(), c.clone(), 0, pairs, false))
}

/// (g, H, J) with [d, H] = id + g о f and [d, J] = id + f о g, or None when
/// f is not a homotopy equivalence.  Tries an on-the-nose inverse first
/// (then H = J = 0); otherwise inverts the induced map of reduced complexes
/// and transports back.
pub fn homotopy_inverse(f: &GradedMap) -> Option<(GradedMap, GradedMap, GradedMap)> {
    assert_eq!(f.degree, 0);
    assert!(!f.localized);
    assert!(f.is_chain_map(), "not a chain map");
    let c = f.source.clone();
    let c2 = f.target.clone();
    if let Some(g) = exact_inverse(f) {
        let h = GradedMap::zero(c.clone(), c, 1);
        let j = GradedMap::zero(c2.clone(), c2, 1);
        return Some((g, h, j));
    }
    let r1 = reduce(&c);
    let r2 = reduce(&c2);
    let fr = r2.pi.compose(f).compose(&r1.sigma);
    let gr = exact_inverse(&fr)?;
    let g = r1.sigma.compose(&gr).compose(&r2.pi);
    let h = find_homotopy(&identity_map(&c).add(&g.compose(f)), false)
        .expect("homotopy for g о f must exist once the reduced inverse does");
    let j = find_homotopy(&identity_map(&c2).add(&f.compose(&g)), false)
        .expect("homotopy for f о g must exist once the reduced inverse does");
    debug_assert!(h
        .commutator_with_diff()
        .add(&identity_map(&c))
        .add(&g.compose(f))
        .is_zero());
    debug_assert!(j
        .commutator_with_diff()
        .add(&identity_map(&c2))
        .add(&f.compose(&g))
        .is_zero());
    Some((g, h, j))
}
