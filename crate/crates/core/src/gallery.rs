//! Fixed collection of modules on which every registry entry is run.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::ideal::IdealData;
use crate::matrix::PolyMatrix;
use crate::module::PModule;
use crate::poly::Poly;
use crate::rees::ReesPackage;
use crate::residual::check_gs;
use crate::monomial::MonomialOrder;
use crate::ring::{Context, PolyRing, Settings, StatsSnapshot};
use crate::theorem::{check_theorem, Analysis, CheckReport, Params, Split, Status, REGISTRY};

pub struct GalleryModule {
    pub label: String,
    pub module: PModule,
    pub split: Option<Split>,
}

fn ring(vars: &[&str], ctx: &Arc<Context>) -> PolyRing {
    let names = vars.iter().map(|v| v.to_string()).collect();
    PolyRing::build(FieldSpec::default(), names, MonomialOrder::Grevlex, vec![1; vars.len()], ctx.clone()).unwrap()
}

fn ideal(r: &PolyRing, gens: &[&str]) -> IdealData {
    IdealData::parse(r, gens).unwrap()
}

fn ideal_entry(label: &str, r: &PolyRing, gens: &[&str]) -> GalleryModule {
    let i = ideal(r, gens);
    GalleryModule { label: label.into(), module: PModule::from_ideal(&i).unwrap(), split: None }
}

/// `I ⊕ R(-shift)^f`.
fn split_entry(label: &str, r: &PolyRing, gens: &[&str], shift: i64, f: usize) -> GalleryModule {
    let i = ideal(r, gens);
    let mut m = PModule::from_ideal(&i).unwrap();
    for _ in 0..f {
        m = m.direct_sum(&PModule::free(r, vec![shift]));
    }
    GalleryModule { label: label.into(), module: m, split: Some(Split { ideal: i, free_rank: f }) }
}

/// Cokernel of a random `m × c` matrix of linear forms (sparse with probability one half).
pub fn random_linear_module(r: &PolyRing, m: usize, c: usize, seed: u64) -> PModule {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let field = r.field();
    let n = r.nvars();
    let cols: Vec<Vec<Poly>> = (0..c)
        .map(|_| {
            (0..m)
                .map(|_| {
                    let mut terms = Vec::new();
                    for v in 0..n {
                        if rng.gen_bool(0.5) {
                            terms.push((r.var_monomial(v), field.random_nonzero(&mut rng)));
                        }
                    }
                    Poly::from_terms(r, terms)
                })
                .collect()
        })
        .collect();
    let mut phi = PolyMatrix::from_columns(r, vec![0; m], cols);
    phi.set_col_degs(vec![1; c]);
    PModule::new(phi)
}

/// Rejection-samples a torsion-free module of projective dimension one satisfying
/// `G_{ℓ-e+2}`; returns it with the seed that produced it.
pub fn sample_pd1_module(r: &PolyRing, m: usize, c: usize, seed: u64, max_tries: usize) -> Result<(PModule, u64)> {
    let mut tried = Vec::new();
    for t in 0..max_tries as u64 {
        let s = seed.wrapping_mul(7919).wrapping_add(t);
        tried.push(s);
        let e = random_linear_module(r, m, c, s);
        let e = e.minimize()?;
        if e.rank() == 0 || e.num_relations() == 0 || e.ambient_rank() != m || e.pd()? != 1 {
            continue;
        }
        if !e.torsion_submodule()?.is_torsion_free {
            continue;
        }
        let l = ReesPackage::new(&e)?.analytic_spread()?;
        let sidx = l as i64 - e.rank() as i64 + 2;
        if sidx > 1 && !check_gs(&e, Some(sidx as usize))?.verdict {
            continue;
        }
        return Ok((e, s));
    }
    Err(Error::Genericity { seeds: tried, reason: format!("no {m}x{c} module of projective dimension one passed") })
}

/// The gallery; the projective-dimension-one members depend on `seed`.
pub fn gallery(seed: u64) -> Result<Vec<GalleryModule>> {
    gallery_in(seed, &Context::new(Settings::default()))
}

/// Gallery whose rings all share `ctx`, so its counters cover the whole run.
pub fn gallery_in(seed: u64, ctx: &Arc<Context>) -> Result<Vec<GalleryModule>> {
    let r2 = ring(&["x", "y"], ctx);
    let r3 = ring(&["x", "y", "z"], ctx);
    let r4 = ring(&["x", "y", "z", "w"], ctx);
    let mut g = vec![
        GalleryModule { label: "free R^2 over k[x,y]".into(), module: PModule::free(&r2, vec![0, 0]), split: None },
        GalleryModule { label: "free R^3 over k[x,y,z]".into(), module: PModule::free(&r3, vec![0, 0, 0]), split: None },
        ideal_entry("(x,y) in k[x,y]", &r2, &["x", "y"]),
        ideal_entry("(x,y,z) in k[x,y,z]", &r3, &["x", "y", "z"]),
        ideal_entry("(x,y) in k[x,y,z]", &r3, &["x", "y"]),
        ideal_entry("(x^2,xy,y^2) in k[x,y]", &r2, &["x^2", "x*y", "y^2"]),
        ideal_entry("(xz,xw,yz,yw) in k[x,y,z,w]", &r4, &["x*z", "x*w", "y*z", "y*w"]),
        split_entry("(x,y)+R(-1) over k[x,y]", &r2, &["x", "y"], 1, 1),
        split_entry("(x,y,z)+R(-1) over k[x,y,z]", &r3, &["x", "y", "z"], 1, 1),
        split_entry("(x^2,xy,y^2)+R(-2) over k[x,y]", &r2, &["x^2", "x*y", "y^2"], 2, 1),
        split_entry("(x,y)+R(-1)^2 over k[x,y,z]", &r3, &["x", "y"], 1, 2),
    ];
    let xy = PModule::from_ideal(&ideal(&r4, &["x", "y"]))?;
    let zw = PModule::from_ideal(&ideal(&r4, &["z", "w"]))?;
    g.push(GalleryModule { label: "(x,y)+(z,w) over k[x,y,z,w]".into(), module: xy.direct_sum(&zw), split: None });
    for (m, c) in [(3usize, 2usize), (4, 2)] {
        let (e, s) = sample_pd1_module(&r3, m, c, seed, 50)?;
        g.push(GalleryModule { label: format!("pd-1 {m}x{c} linear over k[x,y,z] (sample {s})"), module: e, split: None });
    }
    Ok(g)
}

#[derive(Clone, Debug, Serialize)]
pub struct GalleryError {
    pub label: String,
    pub theorem: String,
    pub error: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct GalleryReport {
    pub seed: u64,
    pub modules: usize,
    pub verified: usize,
    pub hypotheses_fail: usize,
    pub contradictions: usize,
    pub reports: Vec<CheckReport>,
    pub errors: Vec<GalleryError>,
    /// Kernel counters accumulated over the run.
    pub counters: StatsSnapshot,
}

/// Runs the selected entries (all when `filter` is empty) on every gallery module.
/// Modules are processed in parallel; the report order is fixed.
pub fn run_gallery(filter: &[String], seed: u64, jobs: usize) -> Result<GalleryReport> {
    run_gallery_with(filter, seed, jobs, &Settings::default())
}

pub fn run_gallery_with(filter: &[String], seed: u64, jobs: usize, settings: &Settings) -> Result<GalleryReport> {
    let ctx = Context::new(settings.clone());
    let modules = gallery_in(seed, &ctx)?;
    let ids: Vec<&str> =
        REGISTRY.iter().map(|e| e.id).filter(|id| filter.is_empty() || filter.iter().any(|f| f == id)).collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::InvalidInput(e.to_string()))?;
    let per_module: Vec<Result<(Vec<CheckReport>, Vec<GalleryError>)>> = pool.install(|| {
        modules
            .par_iter()
            .map(|gm| {
                let mut a = Analysis::new(&gm.label, &gm.module, seed)?;
                if let Some(s) = &gm.split {
                    a = a.with_split(s.clone());
                }
                let mut reps = Vec::new();
                let mut errs = Vec::new();
                for id in &ids {
                    match check_theorem(id, &a, &Params::default()) {
                        Ok(r) => reps.push(r),
                        Err(e @ Error::Budget(_)) => return Err(e),
                        Err(e) => errs.push(GalleryError {
                            label: gm.label.clone(),
                            theorem: id.to_string(),
                            error: e.to_string(),
                        }),
                    }
                }
                Ok((reps, errs))
            })
            .collect()
    });
    let mut out = GalleryReport { seed, modules: modules.len(), ..Default::default() };
    for r in per_module {
        let (reps, errs) = r?;
        out.reports.extend(reps);
        out.errors.extend(errs);
    }
    for r in &out.reports {
        match r.status {
            Status::Verified => out.verified += 1,
            Status::HypothesesFail => out.hypotheses_fail += 1,
            Status::Contradiction => out.contradictions += 1,
        }
    }
    out.counters = ctx.snapshot();
    Ok(out)
}
