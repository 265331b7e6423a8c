#![allow(clippy::eq_op)]

mod common;

use num_bigint::BigInt;
use proptest::prelude::*;
use reeslab::module::koszul_depth;
use reeslab::residual::check_gs;
use reeslab::{parse_poly, FieldSpec, IdealData, Monomial, MonomialOrder, PModule, Poly, PolyMatrix, PolyRing};

type Terms = Vec<(Vec<u16>, i64, i64)>;

fn ring3(field: FieldSpec) -> PolyRing {
    PolyRing::new(field, &["x", "y", "z"]).unwrap()
}

fn build(r: &PolyRing, terms: &Terms) -> Poly {
    let f = r.field();
    let t = terms
        .iter()
        .map(|(e, n, d)| (r.monomial(e), f.from_ratio(&BigInt::from(*n), &BigInt::from(*d)).unwrap()))
        .collect();
    Poly::from_terms(r, t)
}

fn terms(max_exp: u16, max_terms: usize, fractions: bool) -> impl Strategy<Value = Terms> {
    let den = if fractions { 1i64..6 } else { 1i64..2 };
    prop::collection::vec((prop::collection::vec(0..=max_exp, 3), -40i64..40, den), 0..max_terms)
}

/// Homogeneous polynomial of degree `d` in three variables.
fn homogeneous(d: u16) -> impl Strategy<Value = Terms> {
    let monos: Vec<Vec<u16>> =
        (0..=d).flat_map(|a| (0..=d - a).map(move |b| vec![a, b, d - a - b])).collect();
    let n = monos.len();
    prop::collection::vec((0..n, 1i64..30), 1..4)
        .prop_map(move |v| v.into_iter().map(|(i, c)| (monos[i].clone(), c, 1)).collect())
}

fn ideal_gens() -> impl Strategy<Value = Vec<Terms>> {
    prop::collection::vec((1u16..=2).prop_flat_map(homogeneous), 1..4)
}

fn axioms(r: &PolyRing, a: &Terms, b: &Terms, c: &Terms) -> Result<(), TestCaseError> {
    let (a, b, c) = (build(r, a), build(r, b), build(r, c));
    prop_assert_eq!(&a + &b, &b + &a);
    prop_assert_eq!(&a * &b, &b * &a);
    prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
    prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    prop_assert_eq!(&a - &a, Poly::zero(r));
    prop_assert_eq!(&a * &Poly::one(r), a.clone());
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ring_axioms_mod_p(a in terms(3, 5, false), b in terms(3, 5, false), c in terms(3, 5, false)) {
        axioms(&ring3(FieldSpec::default()), &a, &b, &c)?;
    }

    #[test]
    fn ring_axioms_mod_small_prime(a in terms(3, 5, false), b in terms(3, 5, false), c in terms(3, 5, false)) {
        axioms(&ring3(FieldSpec::new(7).unwrap()), &a, &b, &c)?;
    }

    #[test]
    fn ring_axioms_over_rationals(a in terms(2, 4, true), b in terms(2, 4, true), c in terms(2, 4, true)) {
        axioms(&ring3(FieldSpec::rationals()), &a, &b, &c)?;
    }

    #[test]
    fn printing_then_parsing_is_identity(a in terms(4, 6, true), q in any::<bool>()) {
        let r = ring3(if q { FieldSpec::rationals() } else { FieldSpec::default() });
        let p = build(&r, &a);
        prop_assert_eq!(parse_poly(&r, &p.to_string()).unwrap(), p);
    }

    #[test]
    fn monomial_orders_are_total_and_multiplicative(
        a in prop::collection::vec(0u16..4, 4),
        b in prop::collection::vec(0u16..4, 4),
        c in prop::collection::vec(0u16..4, 4),
        which in 0usize..4,
    ) {
        let order = [MonomialOrder::Grevlex, MonomialOrder::Lex, MonomialOrder::Block(2), MonomialOrder::Block(1)][which];
        let r = PolyRing::new(FieldSpec::default(), &["a", "b", "c", "d"]).unwrap().with_order(order).unwrap();
        let (ma, mb, mc) = (r.monomial(&a), r.monomial(&b), r.monomial(&c));
        let ab = r.cmp_monomials(&ma, &mb);
        prop_assert_eq!(ab, r.cmp_monomials(&mb, &ma).reverse());
        prop_assert_eq!(ab == std::cmp::Ordering::Equal, a == b);
        prop_assert_eq!(r.cmp_monomials(&ma.mul(&mc), &mb.mul(&mc)), ab);
        prop_assert!(r.cmp_monomials(&r.one_monomial(), &ma) != std::cmp::Ordering::Greater);
        if ab != std::cmp::Ordering::Greater && r.cmp_monomials(&mb, &mc) != std::cmp::Ordering::Greater {
            prop_assert!(r.cmp_monomials(&ma, &mc) != std::cmp::Ordering::Greater);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn groebner_bases_satisfy_the_criterion_and_decide_membership(
        gens in ideal_gens(),
        mult in prop::collection::vec(terms(2, 3, false), 3),
        other in terms(3, 4, false),
    ) {
        let r = ring3(FieldSpec::default());
        let polys: Vec<Poly> = gens.iter().map(|g| build(&r, g)).collect();
        let i = IdealData::new(&r, polys.clone());
        prop_assert!(i.verify_groebner().unwrap());
        let mut member = Poly::zero(&r);
        for (g, m) in polys.iter().zip(mult.iter()) {
            member = &member + &(g * &build(&r, m));
        }
        prop_assert!(i.contains(&member).unwrap());
        prop_assert!(i.normal_form(&member).unwrap().is_zero());
        let f = build(&r, &other);
        let nf = i.normal_form(&f).unwrap();
        prop_assert!(i.contains(&(&f - &nf)).unwrap());
        prop_assert_eq!(i.normal_form(&nf).unwrap(), nf);
    }

    #[test]
    fn quotient_and_saturation_adjunctions(a in ideal_gens(), b in ideal_gens()) {
        let r = ring3(FieldSpec::default());
        let i = IdealData::new(&r, a.iter().map(|g| build(&r, g)).collect());
        let j = IdealData::new(&r, b.iter().map(|g| build(&r, g)).collect());
        let q = i.quotient(&j).unwrap();
        prop_assert!(i.is_subset_of(&q).unwrap());
        prop_assert!(q.product(&j).unwrap().is_subset_of(&i).unwrap());
        let meet = i.intersect(&j).unwrap();
        prop_assert!(meet.is_subset_of(&i).unwrap() && meet.is_subset_of(&j).unwrap());
        prop_assert!(i.product(&j).unwrap().is_subset_of(&meet).unwrap());
        let f = j.gens()[0].clone();
        let graded = i.saturate_poly_graded(&f).unwrap();
        prop_assert!(graded.equals(&i.saturate_poly_iterated(&f).unwrap()).unwrap());
        prop_assert!(i.is_subset_of(&graded).unwrap());
    }

    #[test]
    fn height_plus_dimension_is_the_number_of_variables(gens in ideal_gens()) {
        let r = ring3(FieldSpec::default());
        let i = IdealData::new(&r, gens.iter().map(|g| build(&r, g)).collect());
        if let (Some(h), Some(d)) = (i.height().unwrap(), i.dimension().unwrap()) {
            prop_assert_eq!(h + d, 3);
        }
    }

    #[test]
    fn auslander_buchsbaum_on_cyclic_modules(gens in ideal_gens()) {
        let r = ring3(FieldSpec::default());
        let i = IdealData::new(&r, gens.iter().map(|g| build(&r, g)).collect());
        let q = PModule::cyclic(&i).unwrap();
        let (depth, pd) = q.depth_and_pd().unwrap();
        prop_assert_eq!(depth, koszul_depth(&q).unwrap());
        prop_assert_eq!(depth.unwrap() + pd, 3);
    }

    #[test]
    fn fitting_ideals_ignore_the_presentation(a in homogeneous(1), b in homogeneous(1), c in terms(1, 3, false)) {
        let r = ring3(FieldSpec::default());
        let (f, g) = (build(&r, &a), build(&r, &b));
        let one = PolyMatrix::from_rows(&r, vec![vec![f.clone()], vec![g.clone()]], vec![0, 0]).unwrap();
        // add a redundant column: a multiple of the first
        let h = build(&r, &c).terms().iter().find(|t| t.0.deg() == 1).map(|t| Poly::term(&r, t.0.clone(), t.1.clone()));
        let h = h.unwrap_or_else(|| Poly::var(&r, 2));
        let two = PolyMatrix::from_rows(&r, vec![vec![f.clone(), &f * &h], vec![g.clone(), &g * &h]], vec![0, 0]).unwrap();
        let (m1, m2) = (PModule::from_matrix(one).unwrap(), PModule::from_matrix(two).unwrap());
        for k in 0..3 {
            prop_assert!(m1.fitting_ideal(k).unwrap().equals(&m2.fitting_ideal(k).unwrap()).unwrap());
        }
    }

    #[test]
    fn g_conditions_are_monotone(gens in ideal_gens()) {
        let r = ring3(FieldSpec::default());
        let i = IdealData::new(&r, gens.iter().map(|g| build(&r, g)).collect());
        if i.height().unwrap().unwrap_or(0) < 2 {
            return Ok(());
        }
        let e = PModule::from_ideal(&i).unwrap();
        let mut prev = true;
        for s in 1..=4 {
            let now = check_gs(&e, Some(s)).unwrap().verdict;
            prop_assert!(prev || !now, "G_{} holds but G_{} fails", s, s - 1);
            prev = now;
        }
    }
}

#[test]
fn monomial_degree_is_weighted() {
    let m = Monomial::from_exps(&[1, 2], &[3, 1]);
    assert_eq!(m.deg(), 5);
}
