//! Release gate: one test per acceptance criterion, each printing a single
//! PASS/FAIL line with its measured time against the pinned limit.

mod common;

use std::time::{Duration, Instant};

use common::*;
use reeslab::bourbaki::{bourbaki_construct, ideal_rees, koszul_piece_homology, rees_deformation_check, BourbakiMode};
use reeslab::gallery::{gallery, run_gallery, run_gallery_with, sample_pd1_module};
use reeslab::residual::{check_an, residual_intersection, residual_with};
use reeslab::theorem::{check_theorem, Analysis, Params, Status};
use reeslab::{IdealData, PModule, ReesPackage, Settings};

fn report(n: usize, what: &str, ok: bool, elapsed: Duration, limit: Duration) {
    let pass = ok && elapsed < limit;
    println!(
        "criterion {n} {}: {what} ({:.2}s, limit {:.0}s)",
        if pass { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64(),
        limit.as_secs_f64()
    );
    assert!(ok, "criterion {n}: {what}");
    assert!(elapsed < limit, "criterion {n}: {:?} exceeds {:?}", elapsed, limit);
}

fn golden(name: &str) -> Vec<String> {
    let p = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(p).unwrap().lines().map(|l| l.to_string()).collect()
}

/// `L` agrees with the kernel of the graph map in every `T`-degree up to `max_deg`.
fn symmetric_matches_graph(pkg: &ReesPackage, max_deg: u32) -> bool {
    let g = pkg.graph_kernel().unwrap();
    let l = &pkg.sym_ideal;
    let low = |i: &IdealData| -> Vec<reeslab::Poly> {
        i.groebner_basis().unwrap().into_iter().filter(|h| pkg.t_degree(h).unwrap() <= max_deg).collect()
    };
    low(&g).iter().all(|h| l.contains(h).unwrap()) && low(l).iter().all(|h| g.contains(h).unwrap())
}

#[test]
fn criterion_1_exact_rees_ideals_of_complete_intersections() {
    let mut ok = true;
    let mut worst = Duration::ZERO;
    for (vars, gens, file) in [
        (vec!["x", "y"], vec!["x", "y"], "rees_xy.txt"),
        (vec!["x", "y", "z"], vec!["x", "y", "z"], "rees_xyz.txt"),
    ] {
        let t = Instant::now();
        let r = ring(&vars);
        let pkg = ReesPackage::new(&ideal_module(&r, &gens)).unwrap();
        let p = pkg.rees_ideal.sorted_gb_strings().unwrap();
        ok &= p == golden(file);
        ok &= pkg.sym_ideal.equals(&pkg.rees_ideal).unwrap();
        // Koszul relations g_j T_i - g_i T_j, built directly in the ambient ring
        let n = gens.len();
        let mut koszul = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let gi = p_amb(&pkg, gens[i]);
                let gj = p_amb(&pkg, gens[j]);
                koszul.push(&(&gj * &pkg.t_var(i)) - &(&gi * &pkg.t_var(j)));
            }
        }
        ok &= IdealData::new(&pkg.ambient, koszul).equals(&pkg.rees_ideal).unwrap();
        ok &= pkg.agrees_with_graph_up_to(6).unwrap();
        worst = worst.max(t.elapsed());
    }
    report(1, "P == L == Koszul relations, golden GB match", ok, worst, Duration::from_secs(1));
}

fn p_amb(pkg: &ReesPackage, s: &str) -> reeslab::Poly {
    reeslab::parse_poly(&pkg.ambient, s).unwrap()
}

#[test]
fn criterion_2_square_of_the_maximal_ideal_is_not_of_linear_type() {
    let t = Instant::now();
    let r = ring(&["x", "y"]);
    let pkg = ReesPackage::new(&ideal_module(&r, &["x^2", "x*y", "y^2"])).unwrap();
    let mut expected = pkg.sym_ideal.gens().to_vec();
    expected.push(p_amb(&pkg, "T2^2 - T1*T3"));
    let mut ok = IdealData::new(&pkg.ambient, expected).equals(&pkg.rees_ideal).unwrap();
    ok &= !pkg.is_linear_type().unwrap();
    ok &= pkg.analytic_spread().unwrap() == 2;
    for seed in 0..3 {
        let forms = pkg.general_forms(2, seed);
        ok &= pkg.reduction_number_for(&forms, 10).unwrap() == Some(1);
    }
    let cm = pkg.rees_cm().unwrap();
    ok &= cm.nvars == 5 && cm.dim == 3 && cm.pd == 2 && cm.is_cm;
    report(2, "P = L + (T2^2 - T1*T3), l = 2, r = 1 on 3 seeds, pd 2 = 5 - 3", ok, t.elapsed(), Duration::from_secs(5));
}

#[test]
fn criterion_3_bourbaki_coherence() {
    let t = Instant::now();
    let r = ring(&["x", "y"]);
    let e = ideal_module(&r, &["x", "y"]).direct_sum(&PModule::free(&r, vec![0]));
    let pe = ReesPackage::new(&e).unwrap();
    let mut ok = pe.analytic_spread().unwrap() == 3;
    let cm_e = pe.rees_cm().unwrap().is_cm;
    ok &= cm_e;
    for seed in 0..10 {
        let b = bourbaki_construct(&e, BourbakiMode::Random, seed).unwrap();
        ok &= b.height == Some(2);
        let pi = ideal_rees(&b).unwrap().unwrap();
        ok &= pi.analytic_spread().unwrap() == 2;
        ok &= pi.rees_cm().unwrap().is_cm == cm_e;
        let d = rees_deformation_check(&b).unwrap();
        ok &= d.torsion_free && d.cross_check != Some(false);
    }
    report(3, "(x,y)+R: l(E) = 3, ht I = 2, l(I) = 2, CM equal, deformation torsion-free (10 seeds)", ok, t.elapsed(), Duration::from_secs(60));
}

#[test]
fn criterion_4_gallery_has_no_contradictions() {
    let t = Instant::now();
    let mut ok = true;
    let mut summary = Vec::new();
    for seed in 0..5 {
        let g = run_gallery(&[], seed, 4).unwrap();
        ok &= g.modules >= 12 && g.contradictions == 0 && g.errors.is_empty();
        summary.push(format!("{}/{}", g.verified, g.reports.len()));
    }
    let what = format!("0 CONTRADICTION over 5 seeds (verified per seed {})", summary.join(" "));
    report(4, &what, ok, t.elapsed(), Duration::from_secs(300));
}

#[test]
fn criterion_5_homological_kernel_invariants() {
    let t = Instant::now();
    let settings = Settings { verify: true, ..Settings::default() };
    let g = run_gallery_with(&[], 0, 4, &settings).unwrap();
    let c = &g.counters;
    let mut ok = g.contradictions == 0;
    ok &= c.criterion_checks > 0 && c.criterion_failures == 0;
    ok &= c.exactness_checks > 0 && c.exactness_failures == 0;
    ok &= c.depth_checks > 0 && c.depth_failures == 0;

    let r = ring(&["x", "y"]);
    let q = PModule::cyclic(&ideal(&r, &["x", "y"])).unwrap();
    ok &= q.ext(1).unwrap().is_zero().unwrap();
    ok &= !q.ext(2).unwrap().is_zero().unwrap();
    let what = format!(
        "AB + exactness on {} resolutions, Buchberger criterion on {} bases, Ext^1 = 0 != Ext^2",
        c.depth_checks, c.criterion_checks
    );
    report(5, &what, ok, t.elapsed(), Duration::from_secs(300));
}

#[test]
fn criterion_6_koszul_strands_are_exact() {
    let t = Instant::now();
    let mut ok = true;
    let mut checked = 0;
    for gm in gallery(0).unwrap() {
        if gm.module.rank() < 2 || gm.module.num_relations() == 0 {
            continue;
        }
        let b = bourbaki_construct(&gm.module, BourbakiMode::Random, 0).unwrap();
        let lt = ideal_rees(&b).unwrap().map(|p| p.is_linear_type().unwrap()).unwrap_or(true);
        if !lt {
            continue;
        }
        checked += 1;
        for j in 1..=3 {
            for h in koszul_piece_homology(&b, j).unwrap() {
                ok &= h.is_zero().unwrap();
            }
        }
    }
    ok &= checked >= 3;
    report(6, &format!("C'_j exact for j <= 3 on {checked} modules"), ok, t.elapsed(), Duration::from_secs(120));
}

#[test]
fn criterion_7_residual_intersections() {
    let t = Instant::now();
    let r = ring(&["x", "y"]);
    let i = ideal(&r, &["x", "y"]);
    let k = residual_with(&i, &ideal(&r, &["x^2", "y"]), 2, 0).unwrap().k;
    let mut ok = k.equals(&i).unwrap();
    let r3 = ring(&["x", "y", "z"]);
    let r4 = ring(&["x", "y", "z", "w"]);
    let cases = [
        (ideal(&r3, &["x", "y"]), 2),
        (ideal(&r3, &["x", "y"]), 3),
        (ideal(&r3, &["x*y", "x*z", "y*z"]), 2),
        (ideal(&r3, &["x*y", "x*z", "y*z"]), 3),
        (ideal(&r4, &["x*z", "x*w", "y*z", "y*w"]), 3),
    ];
    let mut proper = 0;
    for (i, s) in &cases {
        for seed in 0..3 {
            let res = residual_intersection(i, *s, seed).unwrap();
            if res.proper {
                proper += 1;
                ok &= res.height_k.unwrap() >= *s;
            }
        }
    }
    ok &= proper > 0;
    ok &= check_an(&ideal(&r3, &["x", "y"]), 2, 3, 0, false).unwrap().verdict;
    report(7, &format!("(x^2,y):(x,y) = (x,y), ht K >= s on {proper} proper samples, AN_2"), ok, t.elapsed(), Duration::from_secs(60));
}

#[test]
fn criterion_8_projective_dimension_one_pipeline() {
    let t = Instant::now();
    let r3 = ring(&["x", "y", "z"]);
    let r4 = ring(&["x", "y", "z", "w"]);
    let mut ok = true;
    let mut passed = 0;
    for seed in 0..20u64 {
        let (r, m, c) = match seed % 3 {
            0 => (&r3, 3, 2),
            1 => (&r3, 4, 2),
            _ => (&r4, 4, 3),
        };
        let (e, _) = sample_pd1_module(r, m, c, seed, 100).unwrap();
        let pkg = ReesPackage::new(&e).unwrap();
        let mut good = e.num_generators().unwrap() == pkg.analytic_spread().unwrap();
        for j in 1..=3 {
            good &= pkg.power_module(j).unwrap().ext(j + 1).unwrap().is_zero().unwrap();
        }
        let a = Analysis::new("pd-1", &e, seed).unwrap();
        let rep = check_theorem("T3.2", &a, &Params::default()).unwrap();
        good &= rep.status == Status::Verified;
        good &= rep.conclusions.iter().any(|v| v.op == "is_linear_type" && v.holds);
        good &= pkg.is_linear_type().unwrap() && symmetric_matches_graph(&pkg, 6);
        if good {
            passed += 1;
        }
        ok &= good;
    }
    report(8, &format!("{passed}/20 pd-1 modules: mu = l, Ext vanishing, T3.2 linear type, graph oracle agrees"), ok, t.elapsed(), Duration::from_secs(180));
}
