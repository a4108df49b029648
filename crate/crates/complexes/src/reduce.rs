//! Reduction (cancellation of exponent-0 differential arrows) together with
//! the homotopy-equivalence data transporting problems to the reduced model.
//!
//! Cancelling the lexicographically first U^0 arrow x -> y rewrites the
//! differential by the usual zig-zag rule (z -> y, x -> w become z -> w),
//! and updates
//!   pi    : C   -> red   (projection),
//!   sigma : red -> C     (inclusion),
//!   tau   : C   -> C     (degree +1), with pi o sigma = id and
//!                         id + sigma o pi = [d, tau].
//! The update order matters: tau absorbs sigma o {y -> x} o pi *before*
//! pi and sigma are rewritten for this step.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::ucomplex::{GradedMap, UComplex};

/// The reduced model of a complex and the maps relating the two.
pub struct Reduction {
    pub reduced: Arc<UComplex>,
    pub pi: GradedMap,
    pub sigma: GradedMap,
    pub tau: GradedMap,
    /// Number of cancellation steps performed (deterministic effort count).
    pub steps: usize,
}

fn toggle(set: &mut BTreeSet<u32>, v: u32) {
    if !set.remove(&v) {
        set.insert(v);
    }
}

/// Cancel exponent-0 arrows until none remain.
pub fn reduce(cx: &Arc<UComplex>) -> Reduction {
    let n = cx.len();
    let mut alive = vec![true; n];
    let mut fwd: Vec<BTreeSet<u32>> = vec![BTreeSet::new(); n];
    let mut bwd: Vec<BTreeSet<u32>> = vec![BTreeSet::new(); n];
    // Arrows with exponent 0, kept sorted for the deterministic pick.
    let mut zero: BTreeSet<(u32, u32)> = BTreeSet::new();
    for &(a, b) in cx.diff() {
        fwd[a as usize].insert(b);
        bwd[b as usize].insert(a);
        if cx.exponent(a, b) == 0 {
            zero.insert((a, b));
        }
    }
    // pi as orig -> {current}, with a reverse index, sigma as current -> {orig},
    // tau as orig -> {orig}; all start at the identity (tau at zero).
    let mut pi_fwd: Vec<BTreeSet<u32>> = (0..n as u32).map(|i| BTreeSet::from([i])).collect();
    let mut pi_rev: Vec<BTreeSet<u32>> = (0..n as u32).map(|i| BTreeSet::from([i])).collect();
    let mut sig: Vec<BTreeSet<u32>> = (0..n as u32).map(|i| BTreeSet::from([i])).collect();
    let mut tau: Vec<BTreeSet<u32>> = vec![BTreeSet::new(); n];
    let mut steps = 0usize;

    while let Some(&(x, y)) = zero.iter().next() {
        steps += 1;
        let into_y: Vec<u32> = bwd[y as usize].iter().copied().filter(|&z| z != x).collect();
        let out_x: Vec<u32> = fwd[x as usize].iter().copied().filter(|&w| w != y).collect();
        let sig_x = sig[x as usize].clone();

        // tau += sigma o {y -> x} o pi, using the *current* pi and sigma.
        for &g in pi_rev[y as usize].clone().iter() {
            for &s in &sig_x {
                toggle(&mut tau[g as usize], s);
            }
        }
        // pi := {survivors identity, y -> out_x, x -> 0} o pi.
        for &g in pi_rev[y as usize].clone().iter() {
            pi_fwd[g as usize].remove(&y);
            for &w in &out_x {
                toggle(&mut pi_fwd[g as usize], w);
                toggle(&mut pi_rev[w as usize], g);
            }
        }
        pi_rev[y as usize].clear();
        for &g in pi_rev[x as usize].clone().iter() {
            pi_fwd[g as usize].remove(&x);
        }
        pi_rev[x as usize].clear();
        // sigma := sigma o {survivors identity, into_y gain +sigma(x)}.
        for &z in &into_y {
            for &s in &sig_x {
                toggle(&mut sig[z as usize], s);
            }
        }
        sig[x as usize].clear();
        sig[y as usize].clear();

        // Rewire the differential: drop all arrows through x or y, then add
        // the zig-zag terms z -> w.
        for &z in &into_y {
            fwd[z as usize].remove(&y);
            zero.remove(&(z, y));
        }
        for &w in &out_x {
            bwd[w as usize].remove(&x);
            zero.remove(&(x, w));
        }
        for &w in fwd[y as usize].clone().iter() {
            bwd[w as usize].remove(&y);
            zero.remove(&(y, w));
        }
        fwd[y as usize].clear();
        for &z in bwd[x as usize].clone().iter() {
            fwd[z as usize].remove(&x);
            zero.remove(&(z, x));
        }
        bwd[x as usize].clear();
        fwd[x as usize].clear();
        bwd[y as usize].clear();
        zero.remove(&(x, y));
        for &z in &into_y {
            for &w in &out_x {
                let was = fwd[z as usize].contains(&w);
                if was {
                    fwd[z as usize].remove(&w);
                    bwd[w as usize].remove(&z);
                    zero.remove(&(z, w));
                } else {
                    fwd[z as usize].insert(w);
                    bwd[w as usize].insert(z);
                    if cx.gr(w) == cx.gr(z) - 1 {
                        zero.insert((z, w));
                    }
                }
            }
        }
        alive[x as usize] = false;
        alive[y as usize] = false;
    }

    // Assemble the reduced complex; surviving names keep their relative
    // order, so old -> new id translation is monotone.
    let mut new_id = vec![u32::MAX; n];
    let mut names = Vec::new();
    let mut gr = Vec::new();
    for i in 0..n {
        if alive[i] {
            new_id[i] = names.len() as u32;
            names.push(cx.name(i as u32).to_owned());
            gr.push(cx.gr(i as u32));
        }
    }
    let mut rdiff = BTreeSet::new();
    for (a, targets) in fwd.iter().enumerate() {
        for &b in targets {
            rdiff.insert((new_id[a], new_id[b as usize]));
        }
    }
    let reduced = UComplex::from_ids(names, gr, rdiff);

    let pi_pairs = pi_fwd
        .iter()
        .enumerate()
        .flat_map(|(g, outs)| outs.iter().map(move |&c| (g as u32, new_id[c as usize])))
        .collect();
    let sig_pairs = sig
        .iter()
        .enumerate()
        .filter(|(c, _)| alive[*c])
        .flat_map(|(c, outs)| {
            let nc = new_id[c];
            outs.iter().map(move |&s| (nc, s))
        })
        .collect();
    let tau_pairs = tau
        .iter()
        .enumerate()
        .flat_map(|(g, outs)| outs.iter().map(move |&t| (g as u32, t)))
        .collect();
    let pi = GradedMap::new(cx.clone(), reduced.clone(), 0, pi_pairs, false);
    let sigma = GradedMap::new(reduced.clone(), cx.clone(), 0, sig_pairs, false);
    let tau = GradedMap::new(cx.clone(), cx.clone(), 1, tau_pairs, false);
    Reduction {
        reduced,
        pi,
        sigma,
        tau,
        steps,
    }
}

impl Reduction {
    /// Transport an endomorphism to the reduced model: pi o m o sigma.
    pub fn transport(&self, m: &GradedMap) -> GradedMap {
        self.pi.compose(m).compose(&self.sigma)
    }

    /// Check the defining contracts of the reduction data.
    pub fn check_contracts(&self, cx: &Arc<UComplex>) -> bool {
        let id_red = crate::ucomplex::identity_map(&self.reduced);
        let id_cx = crate::ucomplex::identity_map(cx);
        let a = self.pi.compose(&self.sigma).add(&id_red).is_zero();
        let b = self
            .sigma
            .compose(&self.pi)
            .add(&id_cx)
            .add(&self.tau.commutator_with_diff())
            .is_zero();
        let c = self.pi.is_chain_map() && self.sigma.is_chain_map();
        a && b && c
    }
}

/// Given a null-homotopic chain map G on the complex `red` was built from,
/// produce a degree G.degree + 1 solution h of [d, h] = G by solving on the
/// reduced model and transporting back:
///   h = sigma o h_red o pi + tau o G + G o tau + tau o G o [d, tau].
/// Returns None when even the reduced problem has no solution.
pub fn transport_homotopy_problem(red: &Reduction, g: &GradedMap) -> Option<GradedMap> {
    let gr = red.pi.compose(g).compose(&red.sigma);
    let hr = crate::ucomplex::find_homotopy(&gr, false)?;
    let dtau = red.tau.commutator_with_diff();
    let h = red
        .sigma
        .compose(&hr)
        .compose(&red.pi)
        .add(&red.tau.compose(g))
        .add(&g.compose(&red.tau))
        .add(&red.tau.compose(g).compose(&dtau));
    Some(h)
}
