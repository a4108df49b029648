//! Free graded complexes over F2[U] (deg U = -2) and graded module maps.
//!
//! Generators are named; the differential and all maps store only which
//! U^e * (from -> to) arrows are present (the exponent is forced by the
//! gradings, so a coefficient is a single bit).  Names are interned: each
//! complex sorts its generator names and addresses them by dense ids, so
//! `u32` pairs everywhere below mean (source id, target id) in name order.

use std::collections::hash_map::DefaultHasher;
use std::collections::{BTreeMap, BTreeSet};
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use coeff_linalg::{solve_affine, BitRow};

/// Degree of the differential.
pub const DIFF_DEGREE: i64 = -1;

/// A finitely generated free graded complex over F2[U].
#[derive(Debug)]
pub struct UComplex {
    names: Vec<String>,
    gr: Vec<i64>,
    diff: BTreeSet<(u32, u32)>,
    out: Vec<Vec<u32>>,
    inward: Vec<Vec<u32>>,
    fingerprint: u64,
}

impl UComplex {
    /// Build a complex from (name, grading) pairs and named arrows.
    ///
    /// Names are sorted and deduplication is an error; arrows must satisfy
    /// the parity constraint (gr(to) - gr(from) + 1 even) and carry a
    /// non-negative exponent.  d^2 = 0 is *not* checked here; see
    /// [`UComplex::validate`].
    pub fn new<N, D>(gens: N, diff: D) -> Arc<UComplex>
    where
        N: IntoIterator<Item = (String, i64)>,
        D: IntoIterator<Item = (String, String)>,
    {
        let mut pairs: Vec<(String, i64)> = gens.into_iter().collect();
        pairs.sort_by(|a, b| a.0.cmp(&b.0));
        for w in pairs.windows(2) {
            assert!(w[0].0 != w[1].0, "duplicate generator name {:?}", w[0].0);
        }
        let names: Vec<String> = pairs.iter().map(|(n, _)| n.clone()).collect();
        let gr: Vec<i64> = pairs.iter().map(|&(_, g)| g).collect();
        let index: BTreeMap<&str, u32> = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.as_str(), i as u32))
            .collect();
        let mut arrows = BTreeSet::new();
        for (a, b) in diff {
            let ai = *index
                .get(a.as_str())
                .unwrap_or_else(|| panic!("unknown generator {a:?} in differential"));
            let bi = *index
                .get(b.as_str())
                .unwrap_or_else(|| panic!("unknown generator {b:?} in differential"));
            arrows.insert((ai, bi));
        }
        Self::from_ids(names, gr, arrows)
    }

    /// Build from already-sorted names (ids are positions in `names`).
    pub fn from_ids(names: Vec<String>, gr: Vec<i64>, diff: BTreeSet<(u32, u32)>) -> Arc<UComplex> {
        assert_eq!(names.len(), gr.len());
        for w in names.windows(2) {
            assert!(w[0] < w[1], "generator names must be sorted and unique");
        }
        let n = names.len();
        let mut out = vec![Vec::new(); n];
        let mut inward = vec![Vec::new(); n];
        for &(a, b) in &diff {
            let e2 = gr[b as usize] - gr[a as usize] - DIFF_DEGREE;
            assert!(e2 % 2 == 0, "differential arrow violates grading parity");
            assert!(e2 >= 0, "differential arrow has negative exponent");
            out[a as usize].push(b);
            inward[b as usize].push(a);
        }
        let mut hasher = DefaultHasher::new();
        names.hash(&mut hasher);
        gr.hash(&mut hasher);
        for p in &diff {
            p.hash(&mut hasher);
        }
        let fingerprint = hasher.finish();
        Arc::new(UComplex {
            names,
            gr,
            diff,
            out,
            inward,
            fingerprint,
        })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, id: u32) -> &str {
        &self.names[id as usize]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn id(&self, name: &str) -> Option<u32> {
        self.names
            .binary_search_by(|n| n.as_str().cmp(name))
            .ok()
            .map(|i| i as u32)
    }

    pub fn id_of(&self, name: &str) -> u32 {
        self.id(name)
            .unwrap_or_else(|| panic!("unknown generator {name:?}"))
    }

    pub fn gr(&self, id: u32) -> i64 {
        self.gr[id as usize]
    }

    pub fn gradings(&self) -> &[i64] {
        &self.gr
    }

    pub fn diff(&self) -> &BTreeSet<(u32, u32)> {
        &self.diff
    }

    pub fn out_arrows(&self, id: u32) -> &[u32] {
        &self.out[id as usize]
    }

    pub fn in_arrows(&self, id: u32) -> &[u32] {
        &self.inward[id as usize]
    }

    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    /// Exponent of the differential arrow a -> b: U^e with
    /// e = (gr(b) - gr(a) + 1) / 2.
    pub fn exponent(&self, a: u32, b: u32) -> i64 {
        let e2 = self.gr[b as usize] - self.gr[a as usize] - DIFF_DEGREE;
        assert!(e2 % 2 == 0);
        e2 / 2
    }

    /// Structural checks: arrow parity/positivity (already enforced on
    /// construction) and d о d = 0.  Returns human-readable violations.
    pub fn validate(&self) -> Vec<String> {
        let mut bad = Vec::new();
        let mut dd: BTreeSet<(u32, u32)> = BTreeSet::new();
        for &(a, b) in &self.diff {
            for &c in &self.out[b as usize] {
                if !dd.remove(&(a, c)) {
                    dd.insert((a, c));
                }
            }
        }
        for (a, c) in dd {
            bad.push(format!(
                "d o d has a surviving term {} -> {}",
                self.name(a),
                self.name(c)
            ));
        }
        bad
    }

    /// Dual complex: gradings negated, arrows reversed.
    pub fn dual(&self) -> Arc<UComplex> {
        let gr = self.gr.iter().map(|&g| -g).collect();
        let diff = self.diff.iter().map(|&(a, b)| (b, a)).collect();
        Self::from_ids(self.names.clone(), gr, diff)
    }

    /// Shift all gradings by `s`.
    pub fn shift(&self, s: i64) -> Arc<UComplex> {
        let gr = self.gr.iter().map(|&g| g + s).collect();
        Self::from_ids(self.names.clone(), gr, self.diff.clone())
    }

    pub fn max_gr(&self) -> i64 {
        *self.gr.iter().max().expect("empty complex")
    }

    pub fn min_gr(&self) -> i64 {
        *self.gr.iter().min().expect("empty complex")
    }

    /// Largest exponent appearing on any differential arrow (0 if none).
    pub fn max_exponent(&self) -> i64 {
        self.diff
            .iter()
            .map(|&(a, b)| self.exponent(a, b))
            .max()
        .unwrap_or(0)
    }
}

/// Name of a tensor-product generator.
pub fn pair_name(a: &str, b: &str) -> String {
    format!("({a},{b})")
}

/// Tensor product over F2[U]: generators (a,b) with gr = gr(a) + gr(b),
/// differential d(a x b) = da x b + a x db.  Also returns the id table
/// `idx[i][j]` = id of (gen i of lhs, gen j of rhs) in the product.
pub fn tensor_with_index(lhs: &UComplex, rhs: &UComplex) -> (Arc<UComplex>, Vec<Vec<u32>>) {
    let mut gens = Vec::new();
    for i in 0..lhs.len() as u32 {
        for j in 0..rhs.len() as u32 {
            gens.push((
                pair_name(lhs.name(i), rhs.name(j)),
                lhs.gr(i) + rhs.gr(j),
            ));
        }
    }
    let mut diff = Vec::new();
    for &(a, a2) in lhs.diff() {
        for j in 0..rhs.len() as u32 {
            diff.push((
                pair_name(lhs.name(a), rhs.name(j)),
                pair_name(lhs.name(a2), rhs.name(j)),
            ));
        }
    }
    for &(b, b2) in rhs.diff() {
        for i in 0..lhs.len() as u32 {
            diff.push((
                pair_name(lhs.name(i), rhs.name(b)),
                pair_name(lhs.name(i), rhs.name(b2)),
            ));
        }
    }
    let cx = UComplex::new(gens, diff);
    let mut idx = vec![vec![0u32; rhs.len()]; lhs.len()];
    for (i, row) in idx.iter_mut().enumerate() {
        for (j, slot) in row.iter_mut().enumerate() {
            *slot = cx.id_of(&pair_name(lhs.name(i as u32), rhs.name(j as u32)));
        }
    }
    (cx, idx)
}

pub fn tensor(lhs: &UComplex, rhs: &UComplex) -> Arc<UComplex> {
    tensor_with_index(lhs, rhs).0
}

/// A grading-homogeneous F2[U]-module map between complexes.
///
/// A pair (x, y) denotes the term U^e y in the image of x, where
/// e = (gr(y) - gr(x) - degree) / 2 is forced; `localized` permits e < 0
/// (maps defined only after inverting U).
#[derive(Clone, Debug)]
pub struct GradedMap {
    pub source: Arc<UComplex>,
    pub target: Arc<UComplex>,
    pub degree: i64,
    pub localized: bool,
    pairs: BTreeSet<(u32, u32)>,
}

impl GradedMap {
    pub fn new(
        source: Arc<UComplex>,
        target: Arc<UComplex>,
        degree: i64,
        pairs: BTreeSet<(u32, u32)>,
        localized: bool,
    ) -> GradedMap {
        for &(x, y) in &pairs {
            let e2 = target.gr(y) - source.gr(x) - degree;
            assert!(e2 % 2 == 0, "map arrow violates grading parity");
            assert!(
                localized || e2 >= 0,
                "honest map arrow has negative exponent: {} -> {}",
                source.name(x),
                target.name(y)
            );
        }
        GradedMap {
            source,
            target,
            degree,
            localized,
            pairs,
        }
    }

    pub fn from_names(
        source: &Arc<UComplex>,
        target: &Arc<UComplex>,
        degree: i64,
        pairs: &[(&str, &str)],
        localized: bool,
    ) -> GradedMap {
        let set = pairs
            .iter()
            .map(|&(a, b)| (source.id_of(a), target.id_of(b)))
            .collect();
        GradedMap::new(source.clone(), target.clone(), degree, set, localized)
    }

    pub fn zero(source: Arc<UComplex>, target: Arc<UComplex>, degree: i64) -> GradedMap {
        GradedMap::new(source, target, degree, BTreeSet::new(), false)
    }

    pub fn pairs(&self) -> &BTreeSet<(u32, u32)> {
        &self.pairs
    }

    pub fn pair_names(&self) -> Vec<(String, String)> {
        self.pairs
            .iter()
            .map(|&(x, y)| (self.source.name(x).to_owned(), self.target.name(y).to_owned()))
            .collect()
    }

    pub fn contains(&self, x: u32, y: u32) -> bool {
        self.pairs.contains(&(x, y))
    }

    pub fn is_zero(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Exponent on the arrow (x, y); negative only for localized maps.
    pub fn exponent(&self, x: u32, y: u32) -> i64 {
        let e2 = self.target.gr(y) - self.source.gr(x) - self.degree;
        assert!(e2 % 2 == 0);
        e2 / 2
    }

    /// Sum of maps (coefficients in F2: symmetric difference of arrows).
    pub fn add(&self, other: &GradedMap) -> GradedMap {
        assert_eq!(self.source.fingerprint(), other.source.fingerprint());
        assert_eq!(self.target.fingerprint(), other.target.fingerprint());
        assert_eq!(self.degree, other.degree, "cannot add maps of different degree");
        let mut pairs = self.pairs.clone();
        for p in &other.pairs {
            if !pairs.remove(p) {
                pairs.insert(*p);
            }
        }
        GradedMap::new(
            self.source.clone(),
            self.target.clone(),
            self.degree,
            pairs,
            self.localized || other.localized,
        )
    }

    /// Composite self о other (apply `other` first).
    pub fn compose(&self, other: &GradedMap) -> GradedMap {
        assert_eq!(
            other.target.fingerprint(),
            self.source.fingerprint(),
            "composition mismatch"
        );
        let mut by_from: Vec<Vec<u32>> = vec![Vec::new(); self.source.len()];
        for &(y, z) in &self.pairs {
            by_from[y as usize].push(z);
        }
        let mut pairs = BTreeSet::new();
        for &(x, y) in &other.pairs {
            for &z in &by_from[y as usize] {
                if !pairs.remove(&(x, z)) {
                    pairs.insert((x, z));
                }
            }
        }
        GradedMap::new(
            other.source.clone(),
            self.target.clone(),
            self.degree + other.degree,
            pairs,
            self.localized || other.localized,
        )
    }

    /// Image of a generator as a set of (target gen, exponent) terms.
    pub fn apply_gen(&self, x: u32) -> Vec<(u32, i64)> {
        let mut out = Vec::new();
        for &(a, y) in self.pairs.range((x, 0)..=(x, u32::MAX)) {
            debug_assert_eq!(a, x);
            out.push((y, self.exponent(x, y)));
        }
        out
    }

    /// d_target о f + f о d_source (the chain-map defect for degree-0 f,
    /// the homotopy differential in general).
    pub fn commutator_with_diff(&self) -> GradedMap {
        let ds = diff_map(&self.source);
        let dt = diff_map(&self.target);
        dt.compose(self).add(&self.compose(&ds))
    }

    pub fn is_chain_map(&self) -> bool {
        self.commutator_with_diff().is_zero()
    }
}

/// The differential of `cx` as a degree -1 map.
pub fn diff_map(cx: &Arc<UComplex>) -> GradedMap {
    GradedMap::new(cx.clone(), cx.clone(), DIFF_DEGREE, cx.diff().clone(), false)
}

/// The identity map of `cx`.
pub fn identity_map(cx: &Arc<UComplex>) -> GradedMap {
    let pairs = (0..cx.len() as u32).map(|i| (i, i)).collect();
    GradedMap::new(cx.clone(), cx.clone(), 0, pairs, false)
}

/// All grading-legal arrows for a map source -> target of the given degree,
/// in lexicographic (source id, target id) order.  Honest maps require a
/// non-negative exponent; localized ones only parity.
pub fn legal_pairs(
    source: &Arc<UComplex>,
    target: &Arc<UComplex>,
    degree: i64,
    localized: bool,
) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for x in 0..source.len() as u32 {
        for y in 0..target.len() as u32 {
            let e2 = target.gr(y) - source.gr(x) - degree;
            if e2 % 2 == 0 && (localized || e2 >= 0) {
                out.push((x, y));
            }
        }
    }
    out
}

/// Solve [d, h] = F for h of degree F.degree + 1, restricting candidate
/// arrows to those `allow` admits.  Returns None when no solution exists.
pub fn find_homotopy_filtered(
    f: &GradedMap,
    localized: bool,
    allow: impl Fn(u32, u32) -> bool,
) -> Option<GradedMap> {
    let source = &f.source;
    let target = &f.target;
    let hdeg = f.degree + 1;
    let cand: Vec<(u32, u32)> = legal_pairs(source, target, hdeg, localized)
        .into_iter()
        .filter(|&(x, y)| allow(x, y))
        .collect();
    let n = cand.len();
    // Equation keys are (source gen, target gen) arrows of degree f.degree;
    // each candidate h-arrow contributes to d о h and h о d terms.
    let mut support: BTreeMap<(u32, u32), BitRow> = BTreeMap::new();
    for (j, &(x, b)) in cand.iter().enumerate() {
        for &z in target.out_arrows(b) {
            support
                .entry((x, z))
                .or_insert_with(|| BitRow::zeros(n))
                .toggle(j);
        }
        for &w in source.in_arrows(x) {
            support
                .entry((w, b))
                .or_insert_with(|| BitRow::zeros(n))
                .toggle(j);
        }
    }
    let mut keys: BTreeSet<(u32, u32)> = support.keys().copied().collect();
    keys.extend(f.pairs().iter().copied());
    let eqs: Vec<(BitRow, bool)> = keys
        .iter()
        .map(|k| {
            let row = support.get(k).cloned().unwrap_or_else(|| BitRow::zeros(n));
            (row, f.pairs().contains(k))
        })
        .collect();
    let sol = solve_affine(&eqs, n)?;
    let pairs = cand
        .iter()
        .enumerate()
        .filter(|&(j, _)| sol.get(j))
        .map(|(_, &p)| p)
        .collect();
    Some(GradedMap::new(
        source.clone(),
        target.clone(),
        hdeg,
        pairs,
        localized,
    ))
}

/// Solve [d, h] = F over all grading-legal arrows.
pub fn find_homotopy(f: &GradedMap, localized: bool) -> Option<GradedMap> {
    find_homotopy_filtered(f, localized, |_, _| true)
}
