use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::IdealData;
use crate::module::{koszul_homology, PModule};
use crate::poly::Poly;
use crate::rees::{general_coefficients, ReesPackage};

/// Outcome of a `G_s` test; `s = None` stands for `G_∞`.
#[derive(Clone, Debug, Serialize)]
pub struct GsReport {
    pub s: Option<usize>,
    /// `(j, height of Fitt_j)`; `None` is the unit ideal (infinite height).
    pub heights: Vec<(usize, Option<usize>)>,
    pub verdict: bool,
}

/// `G_s`: `ht Fitt_j(E) >= j - e + 2` for `e <= j <= e + s - 2`.
pub fn check_gs(e: &PModule, s: Option<usize>) -> Result<GsReport> {
    let m = e.minimize()?;
    let rank = m.rank();
    let n = m.ambient_rank();
    let top = match s {
        Some(s) => (rank + s).saturating_sub(2),
        None => n.saturating_sub(1),
    };
    let top = top.min(n.saturating_sub(1));
    let mut heights = Vec::new();
    let mut verdict = true;
    for j in rank..=top {
        let h = m.fitting_ideal(j)?.height()?;
        if let Some(h) = h {
            if h + rank < j + 2 {
                verdict = false;
            }
        }
        heights.push((j, h));
        if !verdict {
            break;
        }
    }
    Ok(GsReport { s, heights, verdict })
}

/// An `s`-residual intersection `K = J : I` for a sampled `J ⊆ I`.
#[derive(Clone, Debug)]
pub struct ResidualData {
    pub i: IdealData,
    pub s: usize,
    pub j: IdealData,
    pub k: IdealData,
    /// False when `K` is the unit ideal.
    pub proper: bool,
    pub height_k: Option<usize>,
    pub geometric: bool,
    /// `pd(R/K) == ht K`; `None` when `K` is improper.
    pub cm_quotient: Option<bool>,
    pub seed: u64,
}

fn random_sub_ideal(i: &IdealData, s: usize, seed: u64) -> Result<IdealData> {
    let gens = i.minimal_generators()?;
    let ring = i.ring();
    let degs: Vec<i64> = gens.iter().map(|g| g.degree().unwrap_or(0) as i64).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let js: Vec<Poly> = (0..s)
        .map(|_| {
            let c = general_coefficients(ring, &degs, &mut rng);
            c.iter().zip(&gens).fold(Poly::zero(ring), |acc, (a, g)| &acc + &(a * g))
        })
        .collect();
    Ok(IdealData::new(ring, js))
}

/// `K = J : I` for a given `J ⊆ I`, with its height, geometric flag and CM test.
pub fn residual_with(i: &IdealData, j: &IdealData, s: usize, seed: u64) -> Result<ResidualData> {
    let k = j.quotient(i)?.gb_ideal()?;
    let hk = k.height()?;
    let proper = hk.is_some();
    let (geometric, cm) = if proper {
        let g = k.sum(i)?.height_at_least(s + 1)?;
        let pd = PModule::cyclic(&k)?.pd()?;
        (g, Some(Some(pd) == hk))
    } else {
        (false, None)
    };
    Ok(ResidualData {
        i: i.clone(),
        s,
        j: j.clone(),
        k,
        proper,
        height_k: hk,
        geometric,
        cm_quotient: cm,
        seed,
    })
}

/// Samples `J` from `s` general combinations of the generators of `I` and
/// forms `J : I`; reseeds (up to five seeds) while a proper `K` has height `< s`.
pub fn residual_intersection(i: &IdealData, s: usize, seed: u64) -> Result<ResidualData> {
    let h = i.height()?.ok_or(Error::UnitIdeal("residual intersection of the unit ideal"))?;
    if s < h {
        return Err(Error::InvalidInput(format!("s = {s} is below the height {h} of the ideal")));
    }
    let mut tried = Vec::new();
    for a in 0..5u64 {
        let sd = seed.wrapping_add(a);
        tried.push(sd);
        let j = random_sub_ideal(i, s, sd)?;
        let r = residual_with(i, &j, s, sd)?;
        if !r.proper || r.height_k.unwrap_or(usize::MAX) >= s {
            return Ok(r);
        }
    }
    Err(Error::Genericity { seeds: tried, reason: "residual intersection of height below s".into() })
}

/// Result of sampling the `AN_s` condition.
#[derive(Clone, Debug)]
pub struct AnReport {
    pub s: usize,
    pub height: usize,
    pub samples: Vec<ResidualData>,
    /// Improper samples (and non-geometric ones when only geometric samples count).
    pub skipped: usize,
    pub vacuous: bool,
    pub verdict: bool,
}

/// Samples `i`-residual intersections for `ht I <= i <= s` and tests `R/K` for CM.
/// With `geometric_only`, the `AN_s^-` variant: only geometric samples count.
pub fn check_an(i: &IdealData, s: usize, trials: usize, seed: u64, geometric_only: bool) -> Result<AnReport> {
    let h = i.height()?.ok_or(Error::UnitIdeal("AN test of the unit ideal"))?;
    let mut samples = Vec::new();
    let mut skipped = 0;
    let mut verdict = true;
    for k in h..=s {
        for t in 0..trials {
            let sd = seed.wrapping_add(1000 * k as u64 + t as u64);
            let r = residual_intersection(i, k, sd)?;
            if !r.proper || (geometric_only && !r.geometric) {
                skipped += 1;
            } else if r.cm_quotient != Some(true) {
                verdict = false;
            }
            samples.push(r);
        }
    }
    Ok(AnReport { s, height: h, vacuous: s < h, samples, skipped, verdict })
}

/// Sliding depth: `depth H_j >= d - n + j` for the Koszul homology on a minimal generating set.
pub fn sliding_depth_check(i: &IdealData) -> Result<bool> {
    if i.is_unit()? {
        return Err(Error::UnitIdeal("sliding depth of the unit ideal"));
    }
    let gens = i.minimal_generators()?;
    let n = gens.len();
    let d = i.ring().nvars();
    for j in 0..=n {
        let hj = koszul_homology(i.ring(), &gens, j)?;
        if let Some(depth) = hj.depth()? {
            if depth + n < d + j {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// No prime of height `<= target_codim` lies both in the support of
/// `Ext^{j+1}(E^j, R)` and in the non-free locus of `E`.
pub fn ext_vanishing_locus_check(pkg: &ReesPackage, j: usize, target_codim: usize) -> Result<bool> {
    let x = pkg.power_module(j)?.ext(j + 1)?;
    if x.is_zero()? {
        return Ok(true);
    }
    let e = pkg.module.rank();
    let sum = x.fitting_ideal(0)?.sum(&pkg.module.fitting_ideal(e)?)?;
    sum.height_at_least(target_codim + 1)
}

/// Whether `E**` is free: `Fitt_e(E**) = (1)` and `Fitt_{e-1}(E**) = (0)`.
pub fn is_ideal_module(e: &PModule) -> Result<bool> {
    let dd = e.hom_dual()?.hom_dual()?;
    let rank = e.rank();
    if !dd.fitting_ideal(rank)?.is_unit()? {
        return Ok(false);
    }
    if rank == 0 {
        return Ok(true);
    }
    dd.fitting_ideal(rank - 1)?.is_zero_ideal()
}
