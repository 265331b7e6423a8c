mod common;

use common::*;
use reeslab::bourbaki::*;
use reeslab::rees::ReesPackage;
use reeslab::{Error, PModule};

fn xy_plus_r() -> PModule {
    let r = ring(&["x", "y"]);
    ideal_module(&r, &["x", "y"]).direct_sum(&PModule::free(&r, vec![1]))
}

#[test]
fn rank_one_is_the_ideal() {
    let r = ring(&["x", "y"]);
    let b = bourbaki_construct(&ideal_module(&r, &["x", "y"]), BourbakiMode::Random, 0).unwrap();
    assert!(b.xs.is_empty());
    assert!(b.ideal().unwrap().equals(&ideal(&r, &["x", "y"])).unwrap());
    assert!(rees_deformation_check(&b).unwrap().torsion_free);
    for j in 0..3 {
        for h in koszul_piece_homology(&b, j).unwrap() {
            assert!(h.is_zero().unwrap());
        }
    }
}

#[test]
fn direct_sum_with_free() {
    let e = xy_plus_r();
    for seed in 0..10 {
        let b = bourbaki_construct(&e, BourbakiMode::Random, seed).unwrap();
        let i = b.ideal().unwrap();
        assert_eq!(b.height, Some(2));
        assert_eq!(b.quotient.rank(), 1);
        let pi = ReesPackage::new(&PModule::from_ideal(i).unwrap()).unwrap();
        assert_eq!(pi.analytic_spread().unwrap(), 2);
        let inv = bourbaki_invariant_check(&b, &[1, 2, 3], &[0, 1, 2]).unwrap();
        assert_eq!((inv.spread_module, inv.spread_ideal), (3, 2));
        assert!(inv.passes(), "{inv:?}");
        let d = rees_deformation_check(&b).unwrap();
        assert!(d.torsion_free);
        assert_eq!(d.cross_check, Some(true));
    }
}

#[test]
fn koszul_pieces_exact_for_linear_type() {
    let e = xy_plus_r();
    let b = bourbaki_construct(&e, BourbakiMode::Random, 4).unwrap();
    for j in 0..=3 {
        let hs = koszul_piece_homology(&b, j).unwrap();
        assert_eq!(hs.len(), j.min(1) + 1);
        for h in hs {
            assert!(h.is_zero().unwrap(), "j = {j}");
        }
    }
}

#[test]
fn koszul_pieces_detect_non_linear_type() {
    // (x^2,xy,y^2) ⊕ R(-2): I(x^2,xy,y^2) is not of linear type.
    let r = ring(&["x", "y"]);
    let e = ideal_module(&r, &["x^2", "x*y", "y^2"]).direct_sum(&PModule::free(&r, vec![2]));
    let b = bourbaki_construct(&e, BourbakiMode::Random, 0).unwrap();
    let d = rees_deformation_check(&b).unwrap();
    assert!(d.torsion_free);
    assert_eq!(d.cross_check, Some(true));
    for j in 0..=3 {
        for h in koszul_piece_homology(&b, j).unwrap() {
            assert!(h.is_zero().unwrap());
        }
    }
}

#[test]
fn free_modules() {
    let r = ring(&["x", "y"]);
    let b = bourbaki_construct(&PModule::free(&r, vec![0, 0, 0]), BourbakiMode::Random, 0).unwrap();
    assert!(matches!(b.ideal, BourbakiIdeal::Free));
    let d = rees_deformation_check(&b).unwrap();
    assert!(d.torsion_free);
    let g = iter_generic_quotient(&PModule::free(&r, vec![0, 0]), 0).unwrap();
    assert_eq!((g.rank(), g.num_generators().unwrap(), g.num_relations()), (1, 1, 0));
}

#[test]
fn hypotheses_are_checked() {
    let r = ring(&["x", "y"]);
    // (x,y) ⊕ R/(x) has torsion.
    let e = module(&r, &[&["y", "0"], &["-x", "0"], &["0", "x"]]);
    assert!(matches!(bourbaki_construct(&e, BourbakiMode::Random, 0), Err(Error::Hypothesis(_))));
    let t = module(&r, &[&["x"]]);
    assert!(matches!(bourbaki_construct(&t, BourbakiMode::Random, 0), Err(Error::RankZero)));
}

#[test]
fn seed_independent_invariants() {
    let r = ring(&["x", "y", "z"]);
    let e = ideal_module(&r, &["x", "y", "z"]).direct_sum(&PModule::free(&r, vec![1]));
    let inv = |s| {
        let b = bourbaki_construct(&e, BourbakiMode::Random, s).unwrap();
        let i = b.ideal().unwrap().clone();
        let p = ReesPackage::new(&PModule::from_ideal(&i).unwrap()).unwrap();
        let betti = PModule::cyclic(&i).unwrap().betti().unwrap();
        (b.height, p.analytic_spread().unwrap(), p.is_linear_type().unwrap(), betti)
    };
    assert_eq!(inv(0), inv(1));
}

#[test]
fn iterated_matches_direct() {
    let r = ring(&["x", "y", "z"]);
    let e = ideal_module(&r, &["x", "y"]).direct_sum(&PModule::free(&r, vec![1, 1]));
    let step1 = iter_generic_quotient(&e, 0).unwrap();
    assert_eq!(step1.rank(), 2);
    let step2 = iter_generic_quotient(&step1, 1).unwrap();
    assert_eq!(step2.rank(), 1);
    let b = bourbaki_construct(&e, BourbakiMode::Random, 0).unwrap();
    let direct = PModule::from_ideal(b.ideal().unwrap()).unwrap().minimize().unwrap();
    let s2 = step2.minimize().unwrap();
    assert_eq!(s2.num_generators().unwrap(), direct.num_generators().unwrap());
    assert_eq!(s2.betti().unwrap(), direct.betti().unwrap());
}

#[test]
fn symbolic_mode_small() {
    let e = xy_plus_r();
    let b = bourbaki_construct(&e, BourbakiMode::Symbolic, 0).unwrap();
    assert_eq!(b.ext_ring.nvars(), 5);
    assert!(b.height.unwrap() >= 2);
}
