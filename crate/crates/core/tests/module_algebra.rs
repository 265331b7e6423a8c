mod common;

use common::*;
use reeslab::module::{same_submodule, syzygies};
use reeslab::{PModule, PolyMatrix};

#[test]
fn syzygy_examples() {
    let r = ring(&["x", "y"]);
    let s = syzygies(&row(&r, &["x", "y"])).unwrap();
    assert_eq!(cols(&s), vec![vec!["y", "-x"]]);

    let id = PolyMatrix::identity(&r, 2);
    assert_eq!(syzygies(&id).unwrap().cols(), 0);

    let s = syzygies(&row(&r, &["x^2", "x*y", "y^2"])).unwrap();
    let mut expected = PolyMatrix::from_columns(
        &r,
        vec![2, 2, 2],
        vec![
            vec![p(&r, "y"), p(&r, "-x"), p(&r, "0")],
            vec![p(&r, "0"), p(&r, "y"), p(&r, "-x")],
        ],
    );
    expected.set_col_degs(vec![3, 3]);
    assert!(same_submodule(&s, &expected).unwrap());
    assert_eq!(s.cols(), 2);
}

#[test]
fn resolutions() {
    let r = ring(&["x", "y"]);
    let m = PModule::cyclic(&ideal(&r, &["x", "y"])).unwrap();
    assert_eq!(m.betti().unwrap(), vec![1, 2, 1]);
    assert_eq!(PModule::free(&r, vec![0, 0]).pd().unwrap(), 0);
    let m = PModule::cyclic(&ideal(&r, &["x^2", "x*y", "y^2"])).unwrap();
    assert_eq!(m.betti().unwrap(), vec![1, 3, 2]);
    assert!(m.resolution().unwrap().is_minimal());
}

#[test]
fn depth_examples() {
    let r = ring(&["x", "y"]);
    let m = PModule::cyclic(&ideal(&r, &["x", "y"])).unwrap();
    assert_eq!(m.depth_and_pd().unwrap(), (Some(0), 2));
    assert_eq!(ideal_module(&r, &["x", "y"]).depth_and_pd().unwrap(), (Some(1), 1));
    let r3 = ring(&["x", "y", "z"]);
    assert_eq!(ideal_module(&r3, &["x", "y"]).depth_and_pd().unwrap(), (Some(2), 1));
    let zero = PModule::cyclic(&reeslab::IdealData::unit(&r)).unwrap();
    assert_eq!(zero.depth_and_pd().unwrap().0, None);
}

#[test]
fn fitting_examples() {
    let r = ring(&["x", "y"]);
    let e = ideal_module(&r, &["x", "y"]);
    assert!(e.fitting_ideal(0).unwrap().is_zero_ideal().unwrap());
    assert!(e.fitting_ideal(1).unwrap().equals(&ideal(&r, &["x", "y"])).unwrap());
    let f = PModule::free(&r, vec![0, 0]);
    assert!(f.fitting_ideal(0).unwrap().is_zero_ideal().unwrap());
    assert!(f.fitting_ideal(1).unwrap().is_zero_ideal().unwrap());
    assert!(f.fitting_ideal(2).unwrap().is_unit().unwrap());
    let c = PModule::cyclic(&ideal(&r, &["x"])).unwrap();
    assert!(c.fitting_ideal(0).unwrap().equals(&ideal(&r, &["x"])).unwrap());
}

#[test]
fn rank_examples() {
    let r = ring(&["x", "y"]);
    let e = ideal_module(&r, &["x", "y"]);
    assert_eq!(e.rank(), 1);
    assert_eq!(e.direct_sum(&PModule::free(&r, vec![1])).rank(), 2);
    assert_eq!(PModule::cyclic(&ideal(&r, &["x"])).unwrap().rank(), 0);
}

#[test]
fn torsion_examples() {
    let r = ring(&["x", "y"]);
    let e = PModule::cyclic(&ideal(&r, &["x"])).unwrap().direct_sum(&PModule::free(&r, vec![0]));
    let t = e.torsion_submodule().unwrap();
    assert!(!t.is_torsion_free);
    assert_eq!(t.quotient.minimize().unwrap().ambient_rank(), 1);
    assert_eq!(t.quotient.rank(), 1);
    assert!(t.quotient.minimize().unwrap().num_relations() == 0);
    assert_eq!(t.torsion.invariants().unwrap(), PModule::cyclic(&ideal(&r, &["x"])).unwrap().invariants().unwrap());

    let t = ideal_module(&r, &["x", "y"]).torsion_submodule().unwrap();
    assert!(t.is_torsion_free);
    assert!(t.torsion.is_zero().unwrap());

    let m = module(&r, &[&["x"], &["y"]]);
    assert!(m.torsion_submodule().unwrap().is_torsion_free);
}

#[test]
fn duals() {
    let r = ring(&["x", "y"]);
    let d = ideal_module(&r, &["x", "y"]).hom_dual().unwrap().minimize().unwrap();
    assert_eq!(d.ambient_rank(), 1);
    assert_eq!(d.num_relations(), 0);
    let d = PModule::free(&r, vec![0, 0]).hom_dual().unwrap().minimize().unwrap();
    assert_eq!((d.ambient_rank(), d.num_relations()), (2, 0));
    let d = PModule::cyclic(&ideal(&r, &["x"])).unwrap().hom_dual().unwrap();
    assert!(d.is_zero().unwrap());
}

#[test]
fn ext_examples() {
    let r = ring(&["x", "y"]);
    let m = PModule::cyclic(&ideal(&r, &["x", "y"])).unwrap();
    assert!(!m.ext(2).unwrap().is_zero().unwrap());
    assert!(m.ext(1).unwrap().is_zero().unwrap());
    assert!(m.ext(0).unwrap().is_zero().unwrap());
    let e2 = m.ext(2).unwrap();
    assert_eq!(e2.annihilator().unwrap().height().unwrap(), Some(2));
    let r3 = ring(&["x", "y", "z"]);
    // Dualizing 0 -> R -> R^2 -> I -> 0 leaves coker(R^2 -> R) = R/(x,y) in degree one.
    let i = ideal_module(&r3, &["x", "y"]);
    let e1 = i.ext(1).unwrap();
    assert!(!e1.is_zero().unwrap());
    assert!(e1.annihilator().unwrap().equals(&ideal(&r3, &["x", "y"])).unwrap());
    assert!(i.ext(2).unwrap().is_zero().unwrap());
}

#[test]
fn exterior_powers() {
    let r = ring(&["x", "y"]);
    let w = PModule::free(&r, vec![0, 0]).exterior_power(2).unwrap().minimize().unwrap();
    assert_eq!((w.ambient_rank(), w.num_relations()), (1, 0));
    let e = ideal_module(&r, &["x", "y"]);
    assert_eq!(e.exterior_power(1).unwrap().invariants().unwrap(), e.invariants().unwrap());
    let sum = e.direct_sum(&PModule::free(&r, vec![1]));
    // ⋀²(I ⊕ R) = ⋀²I ⊕ I and ⋀²(x,y) = R/(x,y), so the torsion-free part is I.
    let w = sum.exterior_power(2).unwrap();
    assert_eq!(w.rank(), 1);
    let t = w.torsion_submodule().unwrap();
    assert!(!t.is_torsion_free);
    assert_eq!(t.quotient.invariants().unwrap(), e.invariants().unwrap());
    assert!(t.torsion.annihilator().unwrap().equals(&ideal(&r, &["x", "y"])).unwrap());
}

#[test]
fn orientability() {
    let r = ring(&["x", "y"]);
    let e = ideal_module(&r, &["x", "y"]);
    assert!(e.is_orientable(false).unwrap());
    assert!(PModule::free(&r, vec![0, 0, 0]).is_orientable(true).unwrap());
    let sum = e.direct_sum(&PModule::free(&r, vec![1]));
    assert!(sum.is_orientable(false).unwrap());
    assert!(sum.is_orientable(true).unwrap());
}
