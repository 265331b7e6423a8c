mod common;

use common::*;
use reeslab::rees::ReesPackage;
use reeslab::residual::*;
use reeslab::{Error, PModule};

#[test]
fn gs_examples() {
    let r3 = ring(&["x", "y", "z"]);
    assert!(check_gs(&ideal_module(&r3, &["x", "y"]), None).unwrap().verdict);
    let r = ring(&["x", "y"]);
    let sq = ideal_module(&r, &["x^2", "x*y", "y^2"]);
    assert!(check_gs(&sq, Some(2)).unwrap().verdict);
    assert!(!check_gs(&sq, Some(3)).unwrap().verdict);
    assert!(!check_gs(&sq, None).unwrap().verdict);
    for s in 1..6 {
        assert!(check_gs(&PModule::free(&r, vec![0, 0]), Some(s)).unwrap().verdict);
    }
}

#[test]
fn gs_is_monotone() {
    let r = ring(&["x", "y", "z"]);
    let mods = [
        ideal_module(&r, &["x^2", "x*y", "y^2"]),
        ideal_module(&r, &["x*y", "x*z", "y*z"]),
        module(&r, &[&["x", "0"], &["y", "x"], &["z", "y"], &["0", "z"]]),
    ];
    for m in &mods {
        let v: Vec<bool> = (1..6).map(|s| check_gs(m, Some(s)).unwrap().verdict).collect();
        for w in v.windows(2) {
            assert!(w[0] || !w[1]);
        }
    }
}

#[test]
fn residual_examples() {
    let r = ring(&["x", "y"]);
    let i = ideal(&r, &["x", "y"]);
    let res = residual_with(&i, &ideal(&r, &["x^2", "y"]), 2, 0).unwrap();
    assert!(res.k.equals(&i).unwrap());
    assert_eq!(res.height_k, Some(2));
    assert_eq!(res.cm_quotient, Some(true));

    let res = residual_intersection(&i, 2, 3).unwrap();
    assert!(!res.proper);
    assert!(res.k.is_unit().unwrap());

    let r3 = ring(&["x", "y", "z"]);
    let i3 = ideal(&r3, &["x", "y"]);
    assert!(matches!(residual_intersection(&i3, 1, 0), Err(Error::InvalidInput(_))));
    let i3 = ideal(&r3, &["x^2", "x*y", "y^2"]);
    for seed in 0..3 {
        let res = residual_intersection(&i3, 2, seed).unwrap();
        assert!(res.proper);
        assert!(res.height_k.unwrap() >= 2);
    }
}

#[test]
fn an_examples() {
    let r3 = ring(&["x", "y", "z"]);
    let rep = check_an(&ideal(&r3, &["x", "y"]), 2, 3, 0, false).unwrap();
    assert!(rep.verdict);
    let rep = check_an(&ideal(&r3, &["x", "y"]), 1, 3, 0, false).unwrap();
    assert!(rep.vacuous && rep.verdict && rep.samples.is_empty());
    assert!(matches!(check_an(&ideal(&r3, &["1"]), 2, 1, 0, false), Err(Error::UnitIdeal(_))));
    let rep = check_an(&ideal(&r3, &["x^2", "x*y", "y^2"]), 3, 2, 5, true).unwrap();
    assert!(rep.verdict);
}

#[test]
fn sliding_depth_examples() {
    let r = ring(&["x", "y"]);
    assert!(sliding_depth_check(&ideal(&r, &["x", "y"])).unwrap());
    assert!(sliding_depth_check(&ideal(&r, &["x^2", "x*y", "y^2"])).unwrap());
}

#[test]
fn ext_locus_examples() {
    let r = ring(&["x", "y"]);
    let free = ReesPackage::new(&PModule::free(&r, vec![0, 0])).unwrap();
    assert!(ext_vanishing_locus_check(&free, 1, 1).unwrap());
    let r3 = ring(&["x", "y", "z"]);
    let p = ReesPackage::new(&ideal_module(&r3, &["x", "y"])).unwrap();
    assert!(p.module.ext(2).unwrap().is_zero().unwrap());
    assert!(ext_vanishing_locus_check(&p, 1, 1).unwrap());
}

#[test]
fn ideal_module_examples() {
    let r4 = ring(&["x", "y", "z", "w"]);
    let e = ideal_module(&r4, &["x", "y"]).direct_sum(&ideal_module(&r4, &["z", "w"]));
    assert!(is_ideal_module(&e).unwrap());
    let r = ring(&["x", "y"]);
    assert!(is_ideal_module(&ideal_module(&r, &["x", "y"])).unwrap());
    assert!(is_ideal_module(&ideal_module(&r, &["x"])).unwrap());
}
