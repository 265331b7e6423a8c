use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::ideal::{gcd_list, IdealData};
use crate::matrix::{subsets, PolyMatrix};
use crate::module::{homology, syzygies, PModule};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Poly;
use crate::rees::{general_coefficients, t_monomials, ReesPackage};
use crate::residual::check_gs;
use crate::ring::PolyRing;

/// Attempts made before a genericity failure is reported.
pub const MAX_ATTEMPTS: u64 = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BourbakiMode {
    /// Coefficients drawn from a seeded generator.
    Random,
    /// Fresh variables `Z_ij` adjoined to the ring.
    Symbolic,
}

/// The ideal realizing `E'/F'`, or the sentinel for a free module.
#[derive(Clone, Debug)]
pub enum BourbakiIdeal {
    Proper(IdealData),
    Free,
}

pub struct BourbakiData {
    pub mode: BourbakiMode,
    /// Seed that produced this construction.
    pub seed: u64,
    pub seeds_tried: Vec<u64>,
    pub ext_ring: PolyRing,
    /// Minimal presentation of `E` over `ext_ring`.
    pub module: PModule,
    pub rank: usize,
    /// Coefficient vectors of `x_1..x_{e-1}` on the generators of `E`.
    pub xs: Vec<Vec<Poly>>,
    /// `E/F` presented by `[φ | X]`.
    pub quotient: PModule,
    pub ideal: BourbakiIdeal,
    /// Generators of the ideal, aligned with the generators of `E`.
    pub ideal_gens: Vec<Poly>,
    /// Functional `E/F -> R` whose image, divided by `gcd`, is the ideal.
    pub hom_witness: Vec<Poly>,
    pub gcd: Poly,
    /// Height of the ideal (`None` for the unit ideal).
    pub height: Option<usize>,
    rees: OnceLock<std::result::Result<Arc<ReesPackage>, Error>>,
}

impl BourbakiData {
    pub fn ideal(&self) -> Option<&IdealData> {
        match &self.ideal {
            BourbakiIdeal::Proper(i) => Some(i),
            BourbakiIdeal::Free => None,
        }
    }

    /// Rees package of `E` on the generators used for the `x_j`.
    pub fn rees(&self) -> Result<Arc<ReesPackage>> {
        self.rees
            .get_or_init(|| ReesPackage::from_presentation(&self.module, vec![]).map(Arc::new))
            .clone()
    }

    /// `λ_j = Σ_i Z_ij T_i` in the ambient ring of the Rees package.
    pub fn lambdas(&self) -> Result<Vec<Poly>> {
        let pkg = self.rees()?;
        Ok(self
            .xs
            .iter()
            .map(|x| {
                x.iter()
                    .enumerate()
                    .fold(Poly::zero(&pkg.ambient), |acc, (i, c)| &acc + &(&pkg.lift(c) * &pkg.t_var(i)))
            })
            .collect())
    }
}

/// Hypotheses of the construction: torsion-free, positive rank, free in codimension one.
pub fn check_bourbaki_hypotheses(e: &PModule) -> Result<PModule> {
    let m = e.minimize()?;
    let rank = m.rank();
    if rank == 0 {
        return Err(Error::RankZero);
    }
    if !m.torsion_submodule()?.is_torsion_free {
        return Err(Error::Hypothesis("module is not torsion-free".into()));
    }
    if !m.fitting_ideal(rank)?.height_at_least(2)? {
        return Err(Error::Hypothesis("module is not free in codimension one".into()));
    }
    Ok(m)
}

fn symbolic_ring(base: &PolyRing, degs: &[i64], e: usize) -> Result<PolyRing> {
    let top = degs.iter().copied().max().unwrap_or(0);
    let mut names = Vec::new();
    let mut w = Vec::new();
    for j in 0..e.saturating_sub(1) {
        for (i, d) in degs.iter().enumerate() {
            names.push(base.fresh_name(&format!("Z{}_{}", i + 1, j + 1)));
            w.push((top - d + 1) as u32);
        }
    }
    base.extend(&names, &w, MonomialOrder::Grevlex)
}

/// Presentation `[φ | X]` of `E/F` with `X` the columns of `xs`.
fn quotient_presentation(m: &PModule, xs: &[Vec<Poly>], deg: i64) -> PModule {
    let ring = m.ring();
    let mut x = PolyMatrix::from_columns(ring, m.gen_degrees().to_vec(), xs.to_vec());
    x.set_col_degs(vec![deg; xs.len()]);
    PModule::new(m.relations().hcat(&x))
}

/// Builds a generic Bourbaki ideal of `E`. Random mode retries with seeds
/// `seed, seed+1, ...` (at most five) when the sample is not general.
pub fn bourbaki_construct(e: &PModule, mode: BourbakiMode, seed: u64) -> Result<BourbakiData> {
    let m0 = check_bourbaki_hypotheses(e)?;
    let rank = m0.rank();
    let degs = m0.gen_degrees().to_vec();
    let n = degs.len();
    let top = degs.iter().copied().max().unwrap_or(0);
    let free = m0.num_relations() == 0;
    let (ext_ring, m) = match mode {
        BourbakiMode::Random => (m0.ring().clone(), m0.clone()),
        BourbakiMode::Symbolic => {
            let r = symbolic_ring(m0.ring(), &degs, rank)?;
            let mm = m0.to_ring(&r)?;
            (r, mm)
        }
    };
    let mut tried = Vec::new();
    let mut last = String::new();
    for a in 0..MAX_ATTEMPTS {
        let sd = seed.wrapping_add(a);
        tried.push(sd);
        let xs: Vec<Vec<Poly>> = match mode {
            BourbakiMode::Random => {
                let mut rng = ChaCha8Rng::seed_from_u64(sd);
                (1..rank).map(|_| general_coefficients(&ext_ring, &degs, &mut rng)).collect()
            }
            BourbakiMode::Symbolic => {
                let nb = m0.ring().nvars();
                (0..rank - 1)
                    .map(|j| (0..n).map(|i| Poly::var(&ext_ring, nb + j * n + i)).collect())
                    .collect()
            }
        };
        let q = quotient_presentation(&m, &xs, top);
        if q.rank() != 1 {
            last = "quotient does not have rank one".into();
        } else if !q.torsion_submodule()?.is_torsion_free {
            last = "quotient has torsion".into();
        } else {
            let h = syzygies(&q.relations().transpose())?;
            let h = h.column(0);
            let c = gcd_list(&h)?.unwrap_or_else(|| Poly::one(&ext_ring));
            let gens: Vec<Poly> = h.iter().map(|p| p.exact_div(&c).expect("gcd divides")).collect();
            let ideal = IdealData::new(&ext_ring, gens.clone());
            let height = ideal.height()?;
            let ok = match height {
                None => free,
                Some(ht) => !free && ht >= 2,
            };
            if ok {
                return Ok(BourbakiData {
                    mode,
                    seed: sd,
                    seeds_tried: tried,
                    ext_ring,
                    module: m,
                    rank,
                    xs,
                    quotient: q,
                    ideal: if height.is_none() { BourbakiIdeal::Free } else { BourbakiIdeal::Proper(ideal) },
                    ideal_gens: gens,
                    hom_witness: h,
                    gcd: c,
                    height,
                    rees: OnceLock::new(),
                });
            }
            last = match height {
                None => "ideal is the unit ideal for a non-free module".into(),
                Some(ht) => format!("ideal has height {ht}"),
            };
        }
        if mode == BourbakiMode::Symbolic {
            break;
        }
    }
    Err(Error::Genericity { seeds: tried, reason: last })
}

/// Outcome of the analytic-spread and reduction-number transfer checks.
#[derive(Clone, Debug)]
pub struct InvariantCheck {
    pub rank: usize,
    pub spread_module: usize,
    pub spread_ideal: usize,
    pub reduction_module: Option<usize>,
    pub reduction_ideal: Option<usize>,
    /// `(s, G_s for E, G_s for I)`.
    pub gs: Vec<(usize, bool, bool)>,
    pub spread_ok: bool,
    pub reduction_ok: bool,
    pub gs_ok: bool,
}

impl InvariantCheck {
    pub fn passes(&self) -> bool {
        self.spread_ok && self.reduction_ok && self.gs_ok
    }
}

/// Rees package of the ideal on its aligned generators (no minimization).
pub fn ideal_rees(b: &BourbakiData) -> Result<Option<ReesPackage>> {
    match &b.ideal {
        BourbakiIdeal::Free => Ok(None),
        BourbakiIdeal::Proper(_) => {
            let im = PModule::from_ideal_gens(&b.ext_ring, &b.ideal_gens)?;
            ReesPackage::new(&im).map(Some)
        }
    }
}

/// `ℓ(I) = ℓ(E) - e + 1`, `r(I) <= r(E)` and transfer of `G_s` for the requested `s`.
pub fn bourbaki_invariant_check(b: &BourbakiData, s_values: &[usize], seeds: &[u64]) -> Result<InvariantCheck> {
    let pe = b.rees()?;
    let le = pe.analytic_spread()?;
    let Some(pi) = ideal_rees(b)? else {
        return Ok(InvariantCheck {
            rank: b.rank,
            spread_module: le,
            spread_ideal: 0,
            reduction_module: None,
            reduction_ideal: None,
            gs: vec![],
            spread_ok: le == b.rank,
            reduction_ok: true,
            gs_ok: true,
        });
    };
    let li = pi.analytic_spread()?;
    let re = pe.reduction_number(seeds).ok().map(|d| d.r);
    let ri = pi.reduction_number(seeds).ok().map(|d| d.r);
    let reduction_ok = match (ri, re) {
        (Some(a), Some(b)) => a <= b,
        (_, None) => true,
        (None, Some(_)) => false,
    };
    let ideal_module = PModule::from_ideal(b.ideal().unwrap())?;
    let mut gs = Vec::new();
    let mut gs_ok = true;
    for &s in s_values {
        let ge = check_gs(&b.module, Some(s))?.verdict;
        let gi = check_gs(&ideal_module, Some(s))?.verdict;
        if ge && !gi {
            gs_ok = false;
        }
        gs.push((s, ge, gi));
    }
    Ok(InvariantCheck {
        rank: b.rank,
        spread_module: le,
        spread_ideal: li,
        reduction_module: re,
        reduction_ideal: ri,
        gs,
        spread_ok: li + b.rank == le + 1,
        reduction_ok,
        gs_ok,
    })
}

/// Whether `R(E)/(F)` is torsion-free, with the cross-check against `R(I)`.
#[derive(Clone, Debug)]
pub struct DeformationCheck {
    pub torsion_free: bool,
    /// `R(E)/(F)` agrees with the Rees ideal of `I` on the same `T` variables; `None` when not run.
    pub cross_check: Option<bool>,
    /// `P_E + (λ)` in the ambient ring of `E`.
    pub q: IdealData,
}

/// Forms `Q = P_E + (λ_1..λ_{e-1})` and compares it with the Rees ideal of
/// `E/F` (its saturation at a maximal minor of `[φ | X]`).
pub fn rees_deformation_check(b: &BourbakiData) -> Result<DeformationCheck> {
    let pe = b.rees()?;
    let mut gens = pe.rees_ideal.gens().to_vec();
    gens.extend(b.lambdas()?);
    let q = IdealData::new(&pe.ambient, gens).gb_ideal()?;
    if b.rank == 1 {
        return Ok(DeformationCheck { torsion_free: true, cross_check: None, q });
    }
    let pq = ReesPackage::from_presentation(&b.quotient, vec![])?;
    let sat = pq.rees_ideal.to_ring(&pe.ambient)?;
    let torsion_free = q.equals(&sat)?;
    let cross_check = if torsion_free {
        match &b.ideal {
            BourbakiIdeal::Free => None,
            BourbakiIdeal::Proper(_) => {
                let im = PModule::from_ideal_gens(&b.ext_ring, &b.ideal_gens)?;
                let pi = ReesPackage::from_presentation(&im, vec![])?;
                Some(pi.rees_ideal.to_ring(&pe.ambient)?.equals(&q)?)
            }
        }
    } else {
        None
    };
    Ok(DeformationCheck { torsion_free, cross_check, q })
}

/// Homology of `C'_j : [K(x_1..x_{e-1}; R(E))]_j -> I^j -> 0` at the Koszul
/// positions `0..=min(j, e-1)`.
pub fn koszul_piece_homology(b: &BourbakiData, j: usize) -> Result<Vec<PModule>> {
    let pkg = b.rees()?;
    let ring = &b.ext_ring;
    let m = b.xs.len();
    let top = (j).min(m);
    let amb = &pkg.ambient;
    let key = |mo: &Monomial| -> Vec<u16> { pkg.t_vars.iter().map(|&i| mo.exps()[i]).collect() };
    let degs = b.module.gen_degrees();
    let xdeg = degs.iter().copied().max().unwrap_or(0);
    let tdeg = |k: &Vec<u16>| -> i64 { k.iter().zip(degs).map(|(&a, &d)| a as i64 * d).sum() };

    let bases: Vec<Vec<Vec<u16>>> =
        (0..=j).map(|k| t_monomials(amb, &pkg.t_vars, k).iter().map(key).collect()).collect();
    let index: Vec<HashMap<Vec<u16>, usize>> =
        bases.iter().map(|b| b.iter().enumerate().map(|(i, k)| (k.clone(), i)).collect()).collect();
    let rels: Vec<PolyMatrix> = (0..=j).map(|k| pkg.power_module(k).map(|p| p.relations().clone())).collect::<Result<_>>()?;

    // Generator degrees of the i-th Koszul term.
    let term_degs = |i: usize| -> Vec<i64> {
        let k = j - i;
        let blocks = subsets(m, i).len();
        (0..blocks).flat_map(|_| bases[k].iter().map(|b| tdeg(b) + i as i64 * xdeg)).collect()
    };
    // Multiplication by x_t from E^k to E^{k+1}, placed into a block matrix.
    let place_mult = |out: &mut PolyMatrix, t: usize, k: usize, r0: usize, c0: usize, neg: bool| {
        for (ci, a) in bases[k].iter().enumerate() {
            for (i, coef) in b.xs[t].iter().enumerate() {
                if coef.is_zero() {
                    continue;
                }
                let mut up = a.clone();
                up[i] += 1;
                let ri = index[k + 1][&up];
                let cur = out.get(r0 + ri, c0 + ci).clone();
                let add = if neg { coef.neg() } else { coef.clone() };
                out.set(r0 + ri, c0 + ci, &cur + &add);
            }
        }
    };
    let diff = |i: usize| -> PolyMatrix {
        let src = subsets(m, i);
        let tgt = subsets(m, i - 1);
        let k = j - i;
        let (rs, cs) = (bases[k + 1].len(), bases[k].len());
        let mut out = PolyMatrix::zero(ring, tgt.len() * rs, src.len() * cs);
        for (si, s) in src.iter().enumerate() {
            for (pos, &t) in s.iter().enumerate() {
                let mut rest = s.clone();
                rest.remove(pos);
                let ti = tgt.iter().position(|x| *x == rest).unwrap();
                place_mult(&mut out, t, k, ti * rs, si * cs, pos % 2 == 1);
            }
        }
        out.set_row_degs(term_degs(i - 1));
        out.set_col_degs(term_degs(i));
        out
    };
    let rel_block = |i: usize| -> PolyMatrix {
        let blocks = subsets(m, i).len();
        let r = &rels[j - i];
        let mut acc = PolyMatrix::zero(ring, 0, 0);
        for _ in 0..blocks {
            acc = acc.direct_sum(r);
        }
        let shift = i as i64 * xdeg;
        acc.set_row_degs(acc.row_degs().iter().map(|d| d + shift).collect());
        acc.set_col_degs(acc.col_degs().iter().map(|d| d + shift).collect());
        acc
    };
    // Augmentation E^j -> R, T^a -> Π g_i^{a_i}.
    let aug = {
        let images: Vec<Poly> = bases[j]
            .iter()
            .map(|a| {
                a.iter()
                    .zip(&b.ideal_gens)
                    .fold(Poly::one(ring), |acc, (&e, g)| &acc * &g.pow(e as u32))
            })
            .collect();
        let cd = term_degs(0);
        let shift = images
            .iter()
            .zip(&cd)
            .find_map(|(p, d)| p.degree().map(|g| d - g as i64))
            .unwrap_or(0);
        let mut row = PolyMatrix::from_rows(ring, vec![images], vec![shift])?;
        row.set_col_degs(cd);
        row
    };
    let mut out = Vec::new();
    for i in 0..=top {
        let d = if i == 0 { aug.clone() } else { diff(i) };
        let b_prev = if i == 0 { None } else { Some(rel_block(i - 1)) };
        let d_next = if i < top { Some(diff(i + 1)) } else { None };
        out.push(homology(Some(&d), b_prev.as_ref(), d_next.as_ref(), &rel_block(i))?);
    }
    Ok(out)
}

/// One step of the iterated construction: `E / R x` for a general element `x`.
pub fn iter_generic_quotient(e: &PModule, seed: u64) -> Result<PModule> {
    let m = e.minimize()?;
    let rank = m.rank();
    if rank < 2 {
        return Err(Error::Hypothesis("rank at least two is required".into()));
    }
    let degs = m.gen_degrees().to_vec();
    let top = degs.iter().copied().max().unwrap_or(0);
    let mut tried = Vec::new();
    for a in 0..MAX_ATTEMPTS {
        let sd = seed.wrapping_add(a);
        tried.push(sd);
        let mut rng = ChaCha8Rng::seed_from_u64(sd);
        let x = general_coefficients(m.ring(), &degs, &mut rng);
        let q = quotient_presentation(&m, &[x], top);
        if q.rank() == rank - 1 && q.torsion_submodule()?.is_torsion_free {
            return q.minimize();
        }
    }
    Err(Error::Genericity { seeds: tried, reason: "generic quotient is not torsion-free of rank e - 1".into() })
}
