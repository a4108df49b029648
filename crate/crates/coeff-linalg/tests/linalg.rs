use coeff_linalg::{
    compose_sparse, nullspace_basis, nullspace_f2, snf_over_u, solve_affine, solve_f2, BitRow,
    F2Matrix, Subspace, UMatrix, UPoly,
};
use proptest::prelude::*;

#[test]
fn solve_small_triangular_system() {
    // x0 + x1 = 1, x1 = 0  =>  x = (1, 0)
    let mut a = F2Matrix::new(2, 2);
    a.set(0, 0);
    a.set(0, 1);
    a.set(1, 1);
    assert_eq!(solve_f2(&a, &[true, false]), Some(vec![true, false]));
}

#[test]
fn inconsistent_system_is_detected() {
    // x0 = 0 and x0 = 1.
    let mut a = F2Matrix::new(2, 1);
    a.set(0, 0);
    a.set(1, 0);
    assert_eq!(solve_f2(&a, &[false, true]), None);
}

#[test]
fn nullspace_of_sum_constraint_is_diagonal_vector() {
    let mut a = F2Matrix::new(1, 2);
    a.set(0, 0);
    a.set(0, 1);
    assert_eq!(nullspace_f2(&a), vec![vec![true, true]]);
}

#[test]
fn free_unknowns_take_zero() {
    // Single equation x0 + x2 = 1 over three unknowns: pivot on x0, x1 and x2
    // free and zero.
    let eq = vec![(BitRow::from_bits(3, [0, 2]), true)];
    let sol = solve_affine(&eq, 3).unwrap();
    assert_eq!(
        (sol.get(0), sol.get(1), sol.get(2)),
        (true, false, false)
    );
}

#[test]
fn subspace_membership() {
    let mut s = Subspace::new();
    assert!(s.add(&BitRow::from_bits(4, [0, 1])));
    assert!(s.add(&BitRow::from_bits(4, [1, 2])));
    assert!(!s.add(&BitRow::from_bits(4, [0, 2])));
    assert!(s.contains(&BitRow::from_bits(4, [0, 2])));
    assert!(!s.contains(&BitRow::from_bits(4, [3])));
    assert_eq!(s.dim(), 2);
}

#[test]
fn upoly_display_and_division() {
    let p = UPoly::from_exponents([0, 2]); // U^2 + 1
    let d = UPoly::from_exponents([1, 0]); // U + 1
    let (q, r) = p.div_rem(&d);
    assert_eq!(p, q.mul(&d).add(&r));
    assert!(r.is_zero(), "U^2+1 = (U+1)^2 over F2");
    assert_eq!(format!("{}", p), "U^2+1");
    assert_eq!(format!("{}", UPoly::zero()), "0");
}

#[test]
fn snf_of_upper_triangular_monomials() {
    // [[U, U], [0, U]] has Smith form diag(U, U).
    let mut m = UMatrix::new(2, 2);
    m.set(0, 0, UPoly::monomial(1));
    m.set(0, 1, UPoly::monomial(1));
    m.set(1, 1, UPoly::monomial(1));
    let snf = snf_over_u(&m);
    assert!(snf.d.is_diagonal());
    assert_eq!(snf.diagonal(), vec![UPoly::monomial(1), UPoly::monomial(1)]);
}

#[test]
fn snf_mixed_degrees_orders_by_divisibility() {
    // [[U^2, 0], [0, 1]] must come out as diag(1, U^2).
    let mut m = UMatrix::new(2, 2);
    m.set(0, 0, UPoly::monomial(2));
    m.set(1, 1, UPoly::one());
    let snf = snf_over_u(&m);
    assert_eq!(snf.diagonal(), vec![UPoly::one(), UPoly::monomial(2)]);
    check_snf_contract(&m, &snf);
}

fn check_snf_contract(m: &UMatrix, snf: &coeff_linalg::Snf) {
    // l * m * r = d
    let lm = compose_sparse(&snf.l, m);
    let lmr = compose_sparse(&lm, &snf.r);
    assert_eq!(lmr, snf.d, "l*m*r must equal the diagonal form");
    assert!(snf.d.is_diagonal());
    // divisibility chain
    let diag = snf.diagonal();
    for w in diag.windows(2) {
        if !w[0].is_zero() {
            assert!(
                w[0].divides(&w[1]) || w[1].is_zero(),
                "diagonal divisibility violated: {} then {}",
                w[0],
                w[1]
            );
        } else {
            assert!(w[1].is_zero(), "zero diagonal entries trail the others");
        }
    }
    // tracked inverses really invert
    assert_eq!(
        compose_sparse(&snf.l, &snf.l_inv),
        UMatrix::identity(m.rows)
    );
    assert_eq!(
        compose_sparse(&snf.r, &snf.r_inv),
        UMatrix::identity(m.cols)
    );
}

fn arb_upoly() -> impl Strategy<Value = UPoly> {
    proptest::collection::btree_set(0usize..5, 0..3)
        .prop_map(|s| UPoly::from_exponents(s.into_iter()))
}

fn arb_umatrix(max_dim: usize) -> impl Strategy<Value = UMatrix> {
    (1..=max_dim, 1..=max_dim).prop_flat_map(move |(r, c)| {
        proptest::collection::vec(arb_upoly(), r * c).prop_map(move |entries| {
            let mut m = UMatrix::new(r, c);
            for (k, p) in entries.into_iter().enumerate() {
                m.set(k / c, k % c, p);
            }
            m
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn snf_contract_on_random_matrices(m in arb_umatrix(4)) {
        let snf = snf_over_u(&m);
        check_snf_contract(&m, &snf);
    }

    #[test]
    fn solve_round_trip(entries in proptest::collection::vec(any::<bool>(), 16),
                        x in proptest::collection::vec(any::<bool>(), 4)) {
        let mut a = F2Matrix::new(4, 4);
        for (k, &e) in entries.iter().enumerate() {
            if e { a.set(k / 4, k % 4); }
        }
        // b = A x
        let b: Vec<bool> = (0..4)
            .map(|r| (0..4).filter(|&c| a.get(r, c) && x[c]).count() % 2 == 1)
            .collect();
        let sol = solve_f2(&a, &b).expect("consistent by construction");
        let b2: Vec<bool> = (0..4)
            .map(|r| (0..4).filter(|&c| a.get(r, c) && sol[c]).count() % 2 == 1)
            .collect();
        prop_assert_eq!(b, b2);
    }

    #[test]
    fn nullspace_vectors_annihilate(entries in proptest::collection::vec(any::<bool>(), 20)) {
        let rows = 4usize;
        let cols = 5usize;
        let supports: Vec<BitRow> = (0..rows)
            .map(|r| BitRow::from_bits(cols, (0..cols).filter(|&c| entries[r * cols + c])))
            .collect();
        for v in nullspace_basis(&supports, cols) {
            for s in &supports {
                prop_assert!(!s.dot(&v));
            }
        }
    }

    #[test]
    fn division_contract(a in arb_upoly(), d in arb_upoly()) {
        prop_assume!(!d.is_zero());
        let (q, r) = a.div_rem(&d);
        prop_assert_eq!(a, q.mul(&d).add(&r));
        if let Some(rd) = r.degree() {
            prop_assert!(rd < d.degree().unwrap());
        }
    }
}
