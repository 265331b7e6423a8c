mod common;

use common::*;
use reeslab::gallery::{gallery, run_gallery};
use reeslab::theorem::*;
use reeslab::PModule;

fn analyse(label: &str, e: &PModule) -> Analysis {
    Analysis::new(label, e, 0).unwrap()
}

fn check(id: &str, a: &Analysis) -> CheckReport {
    check_theorem(id, a, &Params::default()).unwrap()
}

#[test]
fn registry_predicates_resolve_to_operations() {
    assert_eq!(REGISTRY.len(), 18);
    for e in REGISTRY {
        for op in e.hypotheses.iter().chain(e.conclusions.iter()) {
            assert!(OPERATIONS.contains(op), "{}: unknown operation {op}", e.id);
        }
    }
    let r = ring(&["x", "y"]);
    let a = analyse("xy", &ideal_module(&r, &["x", "y"]));
    for e in REGISTRY {
        let rep = check(e.id, &a);
        for v in rep.hypotheses.iter().chain(rep.conclusions.iter()) {
            assert!(OPERATIONS.contains(&v.op), "{}: verdict op {}", e.id, v.op);
        }
    }
    assert!(check_theorem("T9.9", &a, &Params::default()).is_err());
}

#[test]
fn linear_type_of_the_maximal_ideal_of_the_plane() {
    let r = ring(&["x", "y"]);
    let rep = check("T3.2", &analyse("(x,y)", &ideal_module(&r, &["x", "y"])));
    assert_eq!(rep.status, Status::Verified, "{rep:#?}");
    let ext = rep.hypotheses.iter().find(|v| v.op == "ext_module").unwrap();
    assert!(ext.detail.contains("empty range"));
}

#[test]
fn complete_intersection_is_linear_type_with_cm_rees_algebra() {
    let r = ring(&["x", "y", "z"]);
    let rep = check("T2.11", &analyse("(x,y,z)", &ideal_module(&r, &["x", "y", "z"])));
    assert_eq!(rep.status, Status::Verified, "{rep:#?}");
    assert_eq!(rep.conclusions.len(), 2);
}

#[test]
fn depth_criterion_on_the_square_of_the_maximal_ideal() {
    let r = ring(&["x", "y"]);
    let a = analyse("m^2", &ideal_module(&r, &["x^2", "x*y", "y^2"]));
    let rep = check_theorem("T4.4", &a, &Params { k: Some(1), ..Params::default() }).unwrap();
    assert_eq!(rep.status, Status::Verified, "{rep:#?}");
    assert!(rep.hypotheses.iter().any(|v| v.name == "G_2" && v.holds));
    // k = 0 is outside the admissible range
    let rep = check_theorem("T4.4", &a, &Params { k: Some(0), ..Params::default() }).unwrap();
    assert_eq!(rep.status, Status::HypothesesFail);
}

#[test]
fn hypothesis_failure_is_report_only() {
    let r = ring(&["x", "y"]);
    // not of linear type, so any entry concluding linear type must fail a hypothesis
    let a = analyse("m^2", &ideal_module(&r, &["x^2", "x*y", "y^2"]));
    for id in ["T2.11", "T2.12", "T3.2", "T-HerLinType"] {
        let rep = check(id, &a);
        assert_eq!(rep.status, Status::HypothesesFail, "{id}");
        assert!(rep.conclusions.is_empty());
    }
}

#[test]
fn five_dimensional_corollary_routes_through_depth_criterion() {
    let r = ring(&["x", "y", "z", "w", "v"]);
    let a = analyse("m^2 in 5 vars", &ideal_module(&r, &["x^2", "x*y", "y^2"]));
    let rep = check("C-d5", &a);
    assert_eq!(rep.status, Status::Verified, "{rep:#?}");
    assert!(rep.conclusions.iter().any(|v| v.op == "registry" && v.holds));
}

#[test]
fn four_dimensional_corollary_on_segre_ideal() {
    let r = ring(&["x", "y", "z", "w"]);
    let rep = check("C-d4", &analyse("segre", &ideal_module(&r, &["x*z", "x*w", "y*z", "y*w"])));
    assert_eq!(rep.status, Status::Verified, "{rep:#?}");
}

#[test]
fn projective_dimension_one_generator() {
    for seed in 0..3 {
        let (e, rep) = check_prop_generators("P3.5", &GenParams::default(), seed).unwrap();
        assert_eq!(e.pd().unwrap(), 1);
        assert_eq!(rep.status, Status::Verified, "{rep:#?}");
    }
}

#[test]
fn perfect_ideal_plus_free_summand() {
    let gp = GenParams { nvars: 2, ..GenParams::default() };
    let (e, rep) = check_prop_generators("P3.6", &gp, 0).unwrap();
    assert_ne!(rep.status, Status::Contradiction);
    let a = analyse("I+R", &e);
    let i = PModule::from_ideal(&seeded_perfect_height2(e.ring(), 2, 0).unwrap()).unwrap();
    assert_eq!(a.ell().unwrap(), analyse("I", &i).ell().unwrap() + 1);

    let (_, rep) = check_prop_generators("P3.6", &GenParams::default(), 0).unwrap();
    assert_eq!(rep.status, Status::Verified, "{rep:#?}");
}

#[test]
fn general_submodules() {
    let (_, rep) = check_prop_generators("L3.8", &GenParams { s: Some(2), ..GenParams::default() }, 0).unwrap();
    assert_eq!(rep.status, Status::Verified, "{rep:#?}");
    assert!(rep.conclusions[0].detail.starts_with("dim = 0") || rep.conclusions[0].detail.starts_with("dim = -"));
    let (_, rep) = check_prop_generators("T3.7", &GenParams::default(), 0).unwrap();
    assert_eq!(rep.status, Status::Verified, "{rep:#?}");
}

#[test]
fn reports_do_not_depend_on_evaluation_order() {
    let r = ring(&["x", "y", "z"]);
    let e = ideal_module(&r, &["x", "y"]).direct_sum(&PModule::free(&r, vec![1]));
    let a = analyse("a", &e);
    let forward: Vec<CheckReport> = REGISTRY.iter().map(|t| check(t.id, &a)).collect();
    let b = analyse("a", &e);
    let mut backward: Vec<CheckReport> = REGISTRY.iter().rev().map(|t| check(t.id, &b)).collect();
    backward.reverse();
    assert_eq!(forward, backward);
}

#[test]
fn gallery_is_sound_and_deterministic() {
    assert!(gallery(0).unwrap().len() >= 12);
    let a = run_gallery(&[], 0, 4).unwrap();
    assert_eq!(a.contradictions, 0);
    assert!(a.errors.is_empty(), "{:?}", a.errors);
    assert!(a.verified > 100);
    let b = run_gallery(&[], 0, 1).unwrap();
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
}

#[test]
fn gallery_filters() {
    let rep = run_gallery(&["P2.1".to_string()], 0, 2).unwrap();
    assert!(rep.reports.iter().all(|r| r.theorem == "P2.1" && r.status == Status::Verified));
    let rep = run_gallery(&["T2.5".to_string()], 0, 2).unwrap();
    for r in &rep.reports {
        assert_ne!(r.status, Status::Contradiction);
        if r.status == Status::Verified {
            assert!(r.conclusions[0].holds);
        }
    }
}
