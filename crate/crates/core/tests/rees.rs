mod common;

use common::*;
use reeslab::rees::{symmetric_ideal, ReesPackage};
use reeslab::{IdealData, PModule};

fn pkg(m: &PModule) -> ReesPackage {
    ReesPackage::new(m).unwrap()
}

#[test]
fn symmetric_ideals() {
    let r = ring(&["x", "y"]);
    let l = symmetric_ideal(&ideal_module(&r, &["x", "y"])).unwrap();
    let amb = l.ring().clone();
    assert!(l.equals(&ideal(&amb, &["y*T1 - x*T2"])).unwrap());
    let l = symmetric_ideal(&PModule::free(&r, vec![0, 0])).unwrap();
    assert!(l.is_zero());
    let l = symmetric_ideal(&ideal_module(&r, &["x^2", "x*y", "y^2"])).unwrap();
    let amb = l.ring().clone();
    assert!(l.equals(&ideal(&amb, &["y*T1 - x*T2", "y*T2 - x*T3"])).unwrap());
}

#[test]
fn rees_ideals_and_linear_type() {
    let r = ring(&["x", "y"]);
    let a = pkg(&ideal_module(&r, &["x", "y"]));
    assert!(a.rees_ideal.equals(&ideal(&a.ambient, &["y*T1 - x*T2"])).unwrap());
    assert!(a.is_linear_type().unwrap());

    let b = pkg(&ideal_module(&r, &["x^2", "x*y", "y^2"]));
    let want = ideal(&b.ambient, &["y*T1 - x*T2", "y*T2 - x*T3", "T2^2 - T1*T3"]);
    assert!(b.rees_ideal.equals(&want).unwrap());
    assert!(!b.is_linear_type().unwrap());
    assert!(b.agrees_with_graph_up_to(3).unwrap());

    let r3 = ring(&["x", "y", "z"]);
    let c = pkg(&ideal_module(&r3, &["x", "y", "z"]));
    let want = ideal(&c.ambient, &["x*T2 - y*T1", "x*T3 - z*T1", "y*T3 - z*T2"]);
    assert!(c.rees_ideal.equals(&want).unwrap());
    assert!(c.is_linear_type().unwrap());

    let f = pkg(&PModule::free(&r, vec![0, 0]));
    assert!(f.rees_ideal.is_zero());
    assert!(f.is_linear_type().unwrap());
}

#[test]
fn graph_route_agrees() {
    let r = ring(&["x", "y"]);
    let r3 = ring(&["x", "y", "z"]);
    let mods = vec![
        ideal_module(&r, &["x", "y"]),
        ideal_module(&r, &["x^2", "x*y", "y^2"]),
        ideal_module(&r, &["x", "y"]).direct_sum(&PModule::free(&r, vec![1])),
        ideal_module(&r3, &["x*y", "x*z", "y*z"]),
        module(&r3, &[&["x", "0"], &["y", "x"], &["z", "y"], &["0", "z"]]),
    ];
    for m in mods {
        let a = pkg(&m);
        let g = a.graph_kernel().unwrap();
        assert!(g.equals(&a.rees_ideal).unwrap(), "{:?}", a.rees_ideal.gens());
    }
}

#[test]
fn powers() {
    let r = ring(&["x", "y"]);
    let e = ideal_module(&r, &["x", "y"]);
    let a = pkg(&e);
    let p0 = a.power_module(0).unwrap();
    assert_eq!(p0.invariants().unwrap(), PModule::free(&r, vec![0]).invariants().unwrap());
    assert_eq!(a.power_module(1).unwrap().invariants().unwrap(), e.invariants().unwrap());
    let sq = ideal_module(&r, &["x^2", "x*y", "y^2"]);
    assert_eq!(a.power_module(2).unwrap().invariants().unwrap(), sq.invariants().unwrap());

    let f = pkg(&PModule::free(&r, vec![0, 0, 0]));
    let p2 = f.power_module(2).unwrap().minimize().unwrap();
    assert_eq!(p2.num_generators().unwrap(), 6);
    assert_eq!(p2.num_relations(), 0);
}

#[test]
fn fiber_and_spread() {
    let r = ring(&["x", "y"]);
    let a = pkg(&ideal_module(&r, &["x", "y"]));
    assert!(a.fiber_ideal().unwrap().is_zero());
    assert_eq!(a.analytic_spread().unwrap(), 2);
    let b = pkg(&ideal_module(&r, &["x^2", "x*y", "y^2"]));
    let fib = b.fiber_ideal().unwrap();
    assert!(fib.equals(&IdealData::parse(fib.ring(), &["T2^2 - T1*T3"]).unwrap()).unwrap());
    assert_eq!(b.analytic_spread().unwrap(), 2);
    let c = pkg(&ideal_module(&r, &["x", "y"]).direct_sum(&PModule::free(&r, vec![1])));
    assert_eq!(c.analytic_spread().unwrap(), 3);
    assert_eq!(c.rees_dimension().unwrap(), 2 + 2);
}

#[test]
fn reduction_numbers() {
    let r = ring(&["x", "y"]);
    let a = pkg(&ideal_module(&r, &["x", "y"]));
    assert_eq!(a.reduction_number(&[0, 1, 2]).unwrap().r, 0);
    let b = pkg(&ideal_module(&r, &["x^2", "x*y", "y^2"]));
    for s in 0..3 {
        let d = b.reduction_number(&[s]).unwrap();
        assert_eq!(d.r, 1);
        assert_eq!(d.forms.len(), 2);
        assert_eq!(b.reduction_number_for(&d.forms, d.r + 1).unwrap(), Some(1));
    }
    let r3 = ring(&["x", "y", "z"]);
    let c = pkg(&ideal_module(&r3, &["x", "y", "z"]));
    assert_eq!(c.reduction_number(&[0, 1, 2]).unwrap().r, 0);
}

#[test]
fn rees_cm() {
    let r = ring(&["x", "y"]);
    let b = pkg(&ideal_module(&r, &["x^2", "x*y", "y^2"]));
    let cm = b.rees_cm().unwrap();
    assert_eq!((cm.dim, cm.pd, cm.nvars, cm.is_cm), (3, 2, 5, true));
}

#[test]
fn torsion_is_removed() {
    let r = ring(&["x", "y"]);
    // (x,y) ⊕ R/(x) has torsion; the Rees package falls back to (x,y).
    let m = module(&r, &[&["y", "0"], &["-x", "0"], &["0", "x"]]);
    let a = pkg(&m);
    assert!(!a.notes.is_empty());
    assert_eq!(a.ngens(), 2);
    assert!(a.is_linear_type().unwrap());
}
