use std::sync::Arc;

use proptest::prelude::*;

use superlie::cohomology::{kernel_bound, multiplier_sdim, Cochain2, CochainSpace};
use superlie::extensions::{
    is_stem_denominator, stem_denominator, stem_deformation, ExtensionSpec,
};
use superlie::families::{abelian, cover_heisenberg_odd, heisenberg_even, heisenberg_odd, model_filiform};
use superlie::freepres::{free_nilpotent, hopf_multiplier, Denominator};
use superlie::io::{AlgebraDocument, FieldDoc};
use superlie::subspace::complement;
use superlie::{Field, GradedSubspace, Grading, LieSuperalgebra, Parity, SparseVec, SuperDim};

fn fields() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Field::Rational), Just(Field::prime(7).unwrap())]
}

/// Host with `e` even coordinates followed by `o` odd ones.
fn host(e: usize, o: usize, field: Field) -> Grading {
    let mut p = vec![Parity::Even; e];
    p.extend(vec![Parity::Odd; o]);
    Grading::new(p, field)
}

/// Homogeneous vectors given as (parity, small coefficients).
fn raw_vectors(max: usize) -> impl Strategy<Value = Vec<(bool, Vec<i64>)>> {
    prop::collection::vec((any::<bool>(), prop::collection::vec(-2i64..=2, 4)), 0..=max)
}

fn realize(raw: &[(bool, Vec<i64>)], field: Field) -> Vec<SparseVec> {
    raw.iter()
        .map(|(odd, cs)| {
            let offset = if *odd { 4 } else { 0 };
            SparseVec::from_pairs(cs.iter().enumerate().map(|(i, &c)| (i + offset, field.from_i64(c))))
        })
        .collect()
}

fn span(raw: &[(bool, Vec<i64>)], field: Field) -> GradedSubspace {
    GradedSubspace::echelonize(&realize(raw, field), &host(4, 4, field)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn echelonize_is_canonical(
        field in fields(),
        raw in raw_vectors(6),
        mix in prop::collection::vec(prop::collection::vec(-3i64..=3, 6), 6),
    ) {
        let vs = realize(&raw, field);
        let x = GradedSubspace::echelonize(&vs, &host(4, 4, field)).unwrap();
        // other generating set: the basis in reverse order, plus combinations
        // of same-parity basis vectors
        let mut other: Vec<SparseVec> = x.basis().cloned().collect();
        other.reverse();
        for p in Parity::BOTH {
            let rows = x.echelon(p).rows();
            for coeffs in &mix {
                let mut v = SparseVec::zero();
                for (r, &c) in rows.iter().zip(coeffs) {
                    v = v.add_scaled(&field.from_i64(c), r);
                }
                other.push(v);
            }
        }
        let y = GradedSubspace::echelonize(&other, &host(4, 4, field)).unwrap();
        prop_assert_eq!(x, y);
    }

    #[test]
    fn dimension_formula(field in fields(), a in raw_vectors(8), b in raw_vectors(8)) {
        let (x, y) = (span(&a, field), span(&b, field));
        let s = x.sum(&y).unwrap();
        let i = x.intersect(&y).unwrap();
        prop_assert_eq!(x.sdim() + y.sdim(), s.sdim() + i.sdim());
        prop_assert!(i.is_subspace_of(&x).unwrap() && i.is_subspace_of(&y).unwrap());
        prop_assert!(x.is_subspace_of(&s).unwrap() && y.is_subspace_of(&s).unwrap());
    }

    #[test]
    fn complement_is_direct(field in fields(), a in raw_vectors(8)) {
        let x = span(&a, field);
        let c = complement(&x);
        prop_assert!(x.intersect(&c).unwrap().is_zero());
        prop_assert_eq!(x.sum(&c).unwrap(), GradedSubspace::full(x.host()));
    }
}

fn small_bases() -> Vec<LieSuperalgebra> {
    vec![
        heisenberg_odd(1).unwrap(),
        heisenberg_odd(2).unwrap(),
        heisenberg_even(1, 0).unwrap(),
        heisenberg_even(0, 2).unwrap(),
        heisenberg_even(1, 1).unwrap(),
        model_filiform(3, 0).unwrap(),
        model_filiform(2, 2).unwrap(),
        model_filiform(1, 2).unwrap(),
        abelian(1, 1),
        abelian(2, 0),
        free_nilpotent(&[Parity::Even, Parity::Odd], 3).unwrap().algebra.as_ref().clone(),
    ]
}

fn cocycle_basis(alg: &LieSuperalgebra) -> Vec<Cochain2> {
    let z = CochainSpace::new(alg).cocycles();
    Parity::BOTH
        .iter()
        .flat_map(|&p| {
            z.echelon(p).rows().iter().map(move |v| Cochain2 {
                parity: p,
                coefficients: v.clone(),
            })
        })
        .collect()
}

/// Central extension of `base` by `k` random homogeneous cocycles.
fn random_central(base: LieSuperalgebra, picks: &[(bool, Vec<i64>)]) -> ExtensionSpec {
    let field = base.field();
    let basis = cocycle_basis(&base);
    let mut chosen = Vec::new();
    for (odd, coeffs) in picks {
        let parity = if *odd { Parity::Odd } else { Parity::Even };
        let mut v = SparseVec::zero();
        for (f, &c) in basis.iter().filter(|f| f.parity == parity).zip(coeffs) {
            v = v.add_scaled(&field.from_i64(c), &f.coefficients);
        }
        chosen.push(Cochain2 { parity, coefficients: v });
    }
    ExtensionSpec::central(Arc::new(base), &chosen).unwrap()
}

/// Non-central extension `B -> B / γ_k(B)`.
fn lower_central_quotient(total: LieSuperalgebra, k: usize) -> ExtensionSpec {
    let total = Arc::new(total);
    let series = total.lower_central_series();
    let a = series[k.min(series.len() - 1)].clone();
    let quo = total.quotient(&a).unwrap();
    ExtensionSpec::new(total, a, quo.algebra, quo.projection)
}

fn picks() -> impl Strategy<Value = Vec<(bool, Vec<i64>)>> {
    prop::collection::vec((any::<bool>(), prop::collection::vec(-2i64..=2, 12)), 0..=3)
}

fn check_cohomology_invariants(alg: &LieSuperalgebra) -> Result<(), TestCaseError> {
    prop_assert!(alg.validate().is_ok());
    let cs = CochainSpace::new(alg);
    let z = cs.cocycles();
    let b = cs.coboundaries();
    prop_assert!(b.is_subspace_of(&z).unwrap());
    prop_assert_eq!(b.sdim(), alg.derived().sdim());
    let m = multiplier_sdim(alg).unwrap();
    prop_assert!(m.leq(&kernel_bound(alg.sdim())));
    Ok(())
}

/// Greedy complement of `d` inside `a`.
fn complement_within(a: &GradedSubspace, d: &GradedSubspace) -> Vec<SparseVec> {
    let mut reached = d.clone();
    let mut out = Vec::new();
    for v in a.basis() {
        if reached.insert(v).unwrap() {
            out.push(v.clone());
        }
    }
    out
}

fn check_deformation(e: &ExtensionSpec, shifts: &[i64]) -> Result<(), TestCaseError> {
    prop_assert!(e.verify().is_ok());
    let ab = e.kernel_commutator();
    let d = e.kernel_in_derived();
    let expected = d.sdim() - ab.sdim();

    let x = stem_denominator(e, None).unwrap();
    prop_assert!(is_stem_denominator(e, &x).unwrap());
    let def = stem_deformation(e, &x).unwrap();
    prop_assert!(def.verify().is_ok());
    prop_assert!(def.is_stem());
    prop_assert_eq!(def.kernel.sdim(), expected);
    let m = multiplier_sdim(&e.base).unwrap();
    prop_assert!(def.kernel.sdim().leq(&m));
    prop_assert!(def.kernel.sdim().leq(&kernel_bound(e.base.sdim())));

    // a second denominator, forced inside a sheared complement of A ∩ [B, B]
    let field = e.total.field();
    let d_basis: Vec<SparseVec> = d.basis().cloned().collect();
    let mut w = ab.clone();
    for (i, v) in complement_within(&e.kernel, &d).iter().enumerate() {
        let parity = e.total.grading().parity_of(v).unwrap().unwrap();
        let mut sheared = v.clone();
        for (j, u) in d_basis.iter().enumerate() {
            if e.total.grading().parity_of(u).unwrap() == Some(parity) {
                let c = shifts[(i + j) % shifts.len()];
                sheared = sheared.add_scaled(&field.from_i64(c), u);
            }
        }
        w.insert(&sheared).unwrap();
    }
    let y = stem_denominator(e, Some(&w)).unwrap();
    prop_assert!(y.is_subspace_of(&w).unwrap());
    prop_assert!(is_stem_denominator(e, &y).unwrap());
    let def2 = stem_deformation(e, &y).unwrap();
    prop_assert!(def2.is_stem());
    prop_assert_eq!(def2.kernel.sdim(), expected);
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn cohomology_invariants_on_central_extensions(which in 0usize..11, ps in picks()) {
        let base = small_bases().swap_remove(which);
        let e = random_central(base, &ps);
        check_cohomology_invariants(&e.base)?;
        check_cohomology_invariants(&e.total)?;
    }

    #[test]
    fn stem_deformations_of_central_extensions(
        which in 0usize..3,
        ps in picks(),
        shifts in prop::collection::vec(-2i64..=2, 1..4),
    ) {
        let base = vec![heisenberg_odd(1).unwrap(), heisenberg_odd(2).unwrap(), heisenberg_even(1, 1).unwrap()]
            .swap_remove(which);
        check_deformation(&random_central(base, &ps), &shifts)?;
    }

    #[test]
    fn stem_deformations_of_lower_central_quotients(
        which in 0usize..11,
        k in 1usize..4,
        shifts in prop::collection::vec(-2i64..=2, 1..4),
    ) {
        let total = small_bases().swap_remove(which);
        check_deformation(&lower_central_quotient(total, k), &shifts)?;
    }

    #[test]
    fn mutations_of_h2_are_detected(i in 0usize..5, j in 0usize..5, k in 0usize..5, delta in 1i64..4) {
        let h = heisenberg_odd(2).unwrap();
        let field = h.field();
        let changed = h.structure(i, j).add(&SparseVec::unit(k, field).scale(&field.from_i64(delta)));
        let mutated = h.with_structure(i, j, changed);
        prop_assert!(!mutated.validate().is_ok());
    }
}

#[test]
fn cohomology_invariants_on_families() {
    for alg in small_bases() {
        check_cohomology_invariants(&alg).unwrap();
    }
}

#[test]
fn every_single_mutation_of_h2_is_detected() {
    let h = heisenberg_odd(2).unwrap();
    let field = h.field();
    for i in 0..5 {
        for j in 0..5 {
            for k in 0..5 {
                let changed = h.structure(i, j).add(&SparseVec::unit(k, field));
                let mutated = h.clone().with_structure(i, j, changed);
                assert!(!mutated.validate().is_ok(), "({i},{j}) += e{k}");
            }
        }
    }
}

#[test]
fn abelian_multipliers() {
    for s in 0..=4 {
        for t in 0..=4 {
            let m = multiplier_sdim(&abelian(s, t)).unwrap();
            assert_eq!(m, SuperDim::new(s * s.saturating_sub(1) / 2 + t * (t + 1) / 2, s * t));
        }
    }
}

#[test]
fn purely_even_filiform_multipliers() {
    for n in 2..=6 {
        let m = multiplier_sdim(&model_filiform(n, 0).unwrap()).unwrap();
        assert_eq!(m.odd, 0);
    }
    let even: Vec<usize> = (2..=6)
        .map(|n| multiplier_sdim(&model_filiform(n, 0).unwrap()).unwrap().even)
        .collect();
    assert_eq!(even, vec![2, 2, 3, 3, 4]);
    for n in 2..=5 {
        let f = Arc::new(model_filiform(n, 0).unwrap());
        let hopf = hopf_multiplier(f.clone(), None, Denominator::RF).unwrap();
        assert_eq!(hopf, multiplier_sdim(&f).unwrap());
    }
}

fn reduce_mod(alg: &LieSuperalgebra, p: u64) -> LieSuperalgebra {
    let mut doc = AlgebraDocument::from_algebra(alg);
    doc.field = FieldDoc::Prime { prime: p };
    doc.to_algebra().unwrap()
}

/// Graded hyperplanes: the full part of one parity plus a hyperplane of the other.
fn graded_hyperplanes(alg: &LieSuperalgebra) -> Vec<GradedSubspace> {
    let field = alg.field();
    let p = match field {
        Field::Prime(p) => p as i64,
        Field::Rational => unreachable!(),
    };
    let mut out = Vec::new();
    for parity in Parity::BOTH {
        let coords: Vec<usize> = (0..alg.dim()).filter(|&i| alg.parity(i) == parity).collect();
        let others: Vec<usize> = (0..alg.dim()).filter(|&i| alg.parity(i) != parity).collect();
        let k = coords.len();
        if k == 0 {
            continue;
        }
        for code in 0..(p as u64).pow(k as u32) {
            let mut phi = Vec::with_capacity(k);
            let mut c = code;
            for _ in 0..k {
                phi.push((c % p as u64) as i64);
                c /= p as u64;
            }
            // normalized: first nonzero coefficient is 1
            let Some(lead) = phi.iter().position(|&x| x != 0) else { continue };
            if phi[lead] != 1 {
                continue;
            }
            let mut vs: Vec<SparseVec> = others.iter().map(|&i| alg.unit(i)).collect();
            for j in 0..k {
                if j != lead {
                    vs.push(
                        alg.unit(coords[j])
                            .add_scaled(&field.from_i64(-phi[j]), &alg.unit(coords[lead])),
                    );
                }
            }
            out.push(GradedSubspace::echelonize(&vs, alg.grading()).unwrap());
        }
    }
    out
}

#[test]
fn stem_kernels_lie_in_every_maximal_subalgebra() {
    let mut totals = vec![cover_heisenberg_odd(1).unwrap().total.as_ref().clone()];
    totals.extend(small_bases().into_iter().filter(|a| a.dim() <= 5));
    for total in totals {
        let b = reduce_mod(&total, 5);
        assert!(b.validate().is_ok());
        // A = Z(B) ∩ [B, B] gives a stem extension B -> B / A
        let kernel = b.center().intersect(&b.derived()).unwrap();
        let mut found = 0;
        for x in graded_hyperplanes(&b) {
            if b.bracket_span(&x, &x).unwrap().is_subspace_of(&x).unwrap() {
                found += 1;
                assert!(kernel.is_subspace_of(&x).unwrap());
            }
        }
        assert!(found > 0);
    }
}
