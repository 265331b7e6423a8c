use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::gb::{ModOrder, ModuleGb, VTerm, VecOrder, Vector};
use crate::ideal::{min_cover, IdealData};
use crate::matrix::{subsets, PolyMatrix};
use crate::poly::Poly;
use crate::ring::PolyRing;

/// Minimal graded free resolution `F_0 <- F_1 <- ... <- F_L` given by its maps.
#[derive(Clone, Debug)]
pub struct FreeResolution {
    /// Generator degrees of `F_0`.
    pub f0_degs: Vec<i64>,
    /// `maps[k]` is `d_{k+1}: F_{k+1} -> F_k`.
    pub maps: Vec<PolyMatrix>,
}

impl FreeResolution {
    pub fn length(&self) -> usize {
        self.maps.len()
    }

    pub fn betti(&self) -> Vec<usize> {
        let mut b = vec![self.f0_degs.len()];
        b.extend(self.maps.iter().map(|m| m.cols()));
        b
    }

    /// Whether every map has all entries in the irrelevant maximal ideal.
    pub fn is_minimal(&self) -> bool {
        self.maps.iter().all(|m| unit_position(m).is_none())
    }
}

#[derive(Default)]
struct ModuleCache {
    gb: OnceLock<std::result::Result<Arc<ModuleGb>, Error>>,
    resolution: OnceLock<std::result::Result<Arc<FreeResolution>, Error>>,
    minimal: OnceLock<std::result::Result<PModule, Error>>,
}

/// Finitely presented graded module `coker(R^s -> R^n)`; the relation matrix
/// has `n` rows whose degrees are the generator degrees.
#[derive(Clone)]
pub struct PModule {
    ring: PolyRing,
    rel: PolyMatrix,
    cache: Arc<ModuleCache>,
}

/// Result of splitting off the torsion submodule.
#[derive(Clone, Debug)]
pub struct Torsion {
    /// Torsion submodule `T` (presented on the generators of the saturated relations).
    pub torsion: PModule,
    /// `E/T`.
    pub quotient: PModule,
    pub is_torsion_free: bool,
    /// The element `f` with `E_f` free used for the saturation.
    pub witness: Poly,
}

/// Invariants compared in place of isomorphism tests.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantTuple {
    pub rank: usize,
    pub fitting: Vec<Vec<String>>,
    pub betti: Vec<usize>,
}

impl PModule {
    pub fn new(rel: PolyMatrix) -> PModule {
        PModule { ring: rel.ring().clone(), rel, cache: Arc::new(ModuleCache::default()) }
    }

    /// Presentation matrix with generator degrees inferred so that entries are homogeneous.
    pub fn from_matrix(rel: PolyMatrix) -> Result<PModule> {
        let mut rel = rel;
        let degs = infer_row_degrees(&rel)
            .ok_or_else(|| Error::NotGraded("no generator degrees make the relations homogeneous".into()))?;
        rel.set_row_degs(degs);
        rel.infer_col_degs();
        Ok(PModule::new(rel))
    }

    pub fn free(ring: &PolyRing, degs: Vec<i64>) -> PModule {
        let mut rel = PolyMatrix::zero(ring, degs.len(), 0);
        rel.set_row_degs(degs);
        PModule::new(rel)
    }

    /// The ideal as a module, presented on the given generators by their syzygies.
    pub fn from_ideal_gens(ring: &PolyRing, gens: &[Poly]) -> Result<PModule> {
        let degs: Vec<i64> = gens.iter().map(|g| g.degree().unwrap_or(0) as i64).collect();
        let mut row = PolyMatrix::from_rows(ring, vec![gens.to_vec()], vec![0])?;
        row.set_col_degs(degs);
        let syz = syzygies(&row)?;
        Ok(PModule::new(syz))
    }

    pub fn from_ideal(ideal: &IdealData) -> Result<PModule> {
        PModule::from_ideal_gens(ideal.ring(), ideal.gens())
    }

    /// Cyclic module `R/I`.
    pub fn cyclic(ideal: &IdealData) -> Result<PModule> {
        let ring = ideal.ring();
        let mut m = PolyMatrix::from_rows(ring, vec![ideal.gens().to_vec()], vec![0])?;
        if ideal.gens().is_empty() {
            m = PolyMatrix::zero(ring, 1, 0);
        }
        Ok(PModule::new(m))
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }
    pub fn relations(&self) -> &PolyMatrix {
        &self.rel
    }
    pub fn ambient_rank(&self) -> usize {
        self.rel.rows()
    }
    pub fn num_relations(&self) -> usize {
        self.rel.cols()
    }
    pub fn gen_degrees(&self) -> &[i64] {
        self.rel.row_degs()
    }
    pub fn is_graded(&self) -> bool {
        self.rel.is_graded()
    }

    pub fn direct_sum(&self, other: &PModule) -> PModule {
        PModule::new(self.rel.direct_sum(&other.rel))
    }

    /// Shifts all generator degrees by `k`.
    pub fn twist(&self, k: i64) -> PModule {
        let mut rel = self.rel.clone();
        rel.set_row_degs(rel.row_degs().iter().map(|d| d + k).collect());
        rel.set_col_degs(rel.col_degs().iter().map(|d| d + k).collect());
        PModule::new(rel)
    }

    pub(crate) fn order(&self, mode: ModOrder) -> VecOrder {
        VecOrder::new(&self.ring, mode, self.gen_degrees().to_vec())
    }

    /// Gröbner basis of the relation submodule (term over position).
    pub fn relation_gb(&self) -> Result<Arc<ModuleGb>> {
        self.cache
            .gb
            .get_or_init(|| {
                let ord = self.order(ModOrder::Top);
                let gens = columns_as_vectors(&ord, &self.rel);
                ModuleGb::compute(&ord, gens).map(Arc::new)
            })
            .clone()
    }

    /// Whether the module is zero (every generator lies in the relation submodule).
    pub fn is_zero(&self) -> Result<bool> {
        if self.ambient_rank() == 0 {
            return Ok(true);
        }
        let gb = self.relation_gb()?;
        let one = self.ring.one_monomial();
        Ok((0..self.ambient_rank()).all(|i| gb.lead_divides(i as u32, &one)))
    }

    /// Minimal presentation: redundant generators and relations removed by
    /// unit pivoting (graded Nakayama), so `ambient_rank` equals `μ(E)`.
    pub fn minimize(&self) -> Result<PModule> {
        self.cache
            .minimal
            .get_or_init(|| {
                let mut d1 = self.rel.compress();
                prune_units(None, &mut d1);
                let mut d2 = syzygies(&d1)?;
                prune_units(Some(&mut d1), &mut d2);
                Ok(PModule::new(d1))
            })
            .clone()
    }

    /// Minimal number of generators.
    pub fn num_generators(&self) -> Result<usize> {
        Ok(self.minimize()?.ambient_rank())
    }

    pub fn minimal_resolution(&self, max_len: usize) -> Result<Arc<FreeResolution>> {
        let res = self
            .cache
            .resolution
            .get_or_init(|| resolve(self, max_len.max(self.ring.nvars() + 1)).map(Arc::new))
            .clone()?;
        if res.length() > max_len {
            return Err(Error::MaxLenExceeded(max_len));
        }
        Ok(res)
    }

    pub fn resolution(&self) -> Result<Arc<FreeResolution>> {
        self.minimal_resolution(self.ring.nvars() + 1)
    }

    pub fn betti(&self) -> Result<Vec<usize>> {
        Ok(self.resolution()?.betti())
    }

    /// Projective dimension; zero for the zero module.
    pub fn pd(&self) -> Result<usize> {
        Ok(self.resolution()?.length())
    }

    /// `(depth, pd)` with respect to the irrelevant ideal; depth is `None`
    /// (infinite) for the zero module.
    pub fn depth_and_pd(&self) -> Result<(Option<usize>, usize)> {
        let res = self.resolution()?;
        if res.f0_degs.is_empty() {
            return Ok((None, 0));
        }
        let pd = res.length();
        Ok((Some(self.ring.nvars() - pd), pd))
    }

    pub fn depth(&self) -> Result<Option<usize>> {
        Ok(self.depth_and_pd()?.0)
    }

    /// `Fitt_i(E)`: ideal of `(n-i)`-minors of a minimal presentation.
    pub fn fitting_ideal(&self, i: usize) -> Result<IdealData> {
        let m = self.minimize()?;
        let n = m.ambient_rank();
        if i >= n {
            return Ok(IdealData::unit(&self.ring));
        }
        let t = n - i;
        if t > m.num_relations() {
            return Ok(IdealData::zero(&self.ring));
        }
        Ok(IdealData::new(&self.ring, m.rel.minors(t)?))
    }

    /// Rank over the fraction field.
    pub fn rank(&self) -> usize {
        self.ambient_rank() - self.rel.rank()
    }

    /// Splits off the torsion: `T = ker(E -> E_f)` for a nonzero maximal-rank minor `f`.
    pub fn torsion_submodule(&self) -> Result<Torsion> {
        let (r, w) = self.rel.rank_with_witness(0);
        let f = match w {
            Some((_, _, f)) => f,
            None => Poly::one(&self.ring),
        };
        let n = self.ambient_rank();
        let sat = if r == 0 { self.rel.compress() } else { saturate_submodule(&self.rel, &f)? };
        let ord = self.order(ModOrder::Top);
        let gb = self.relation_gb()?;
        let torsion_free = columns_as_vectors(&ord, &sat).into_iter().all(|v| gb.contains(v));
        let quotient = PModule::new(sat.clone());
        let torsion = subquotient(&sat, &self.rel)?;
        let _ = n;
        Ok(Torsion { torsion, quotient, is_torsion_free: torsion_free, witness: f })
    }

    /// `Hom(E, R)`, generated inside the dual free module by the syzygies of `φᵀ`.
    pub fn hom_dual(&self) -> Result<PModule> {
        let n = self.ambient_rank();
        let dual_degs: Vec<i64> = self.gen_degrees().iter().map(|d| -d).collect();
        let z = if self.num_relations() == 0 {
            let mut id = PolyMatrix::identity(&self.ring, n);
            id.set_row_degs(dual_degs.clone());
            id.set_col_degs(dual_degs);
            id
        } else {
            syzygies(&self.rel.transpose())?
        };
        module_generated_by(&z)
    }

    /// `Ext^i(E, R)` as the cohomology of the dualized minimal resolution.
    pub fn ext(&self, i: usize) -> Result<PModule> {
        let res = self.resolution()?;
        let l = res.length();
        if i > l {
            return Ok(PModule::free(&self.ring, vec![]));
        }
        let fi_degs: Vec<i64> = if i == 0 { res.f0_degs.clone() } else { res.maps[i - 1].col_degs().to_vec() };
        let dual_degs: Vec<i64> = fi_degs.iter().map(|d| -d).collect();
        // Cycles: kernel of d_{i+1}^T on F_i^*.
        let z = if i < l {
            syzygies(&res.maps[i].transpose())?
        } else {
            let mut id = PolyMatrix::identity(&self.ring, fi_degs.len());
            id.set_row_degs(dual_degs.clone());
            id.set_col_degs(dual_degs.clone());
            id
        };
        // Boundaries: image of d_i^T.
        let b = if i == 0 {
            let mut m = PolyMatrix::zero(&self.ring, fi_degs.len(), 0);
            m.set_row_degs(dual_degs);
            m
        } else {
            res.maps[i - 1].transpose()
        };
        subquotient(&z, &b)?.minimize()
    }

    /// `⋀^k E` presented on the `k`-subsets of the generators.
    pub fn exterior_power(&self, k: usize) -> Result<PModule> {
        let n = self.ambient_rank();
        if k > n {
            return Ok(PModule::free(&self.ring, vec![]));
        }
        let gens = subsets(n, k);
        let degs: Vec<i64> = gens.iter().map(|s| s.iter().map(|&i| self.gen_degrees()[i]).sum()).collect();
        if k == 0 {
            return Ok(PModule::free(&self.ring, vec![0]));
        }
        let pos = |s: &Vec<usize>| gens.iter().position(|g| g == s).unwrap();
        let mut cols: Vec<Vec<Poly>> = Vec::new();
        for j in 0..self.num_relations() {
            let v = self.rel.column(j);
            for t in subsets(n, k - 1) {
                let mut col = vec![Poly::zero(&self.ring); gens.len()];
                let mut any = false;
                for (i, vi) in v.iter().enumerate() {
                    if vi.is_zero() || t.contains(&i) {
                        continue;
                    }
                    let before = t.iter().filter(|&&x| x < i).count();
                    let mut s = t.clone();
                    s.push(i);
                    s.sort();
                    let p = pos(&s);
                    col[p] = if before % 2 == 0 { &col[p] + vi } else { &col[p] - vi };
                    any = true;
                }
                if any && col.iter().any(|p| !p.is_zero()) {
                    cols.push(col);
                }
            }
        }
        let m = PolyMatrix::from_columns(&self.ring, degs, cols);
        Ok(PModule::new(m))
    }

    /// Orientability. Over a polynomial ring (a UFD) every module of positive
    /// rank is orientable; `double_dual_test` recomputes it from `(⋀^e E)**`.
    pub fn is_orientable(&self, double_dual_test: bool) -> Result<bool> {
        let e = self.rank();
        if e == 0 {
            return Err(Error::RankZero);
        }
        if !double_dual_test {
            return Ok(true);
        }
        let w = self.exterior_power(e)?;
        let dd = w.hom_dual()?.hom_dual()?;
        Ok(dd.fitting_ideal(0)?.is_zero_ideal()? && dd.fitting_ideal(1)?.is_unit()?)
    }

    /// Annihilator `∩_i (N : e_i)`.
    pub fn annihilator(&self) -> Result<IdealData> {
        let n = self.ambient_rank();
        let mut acc: Option<IdealData> = None;
        for i in 0..n {
            let mut e = vec![Poly::zero(&self.ring); n];
            e[i] = Poly::one(&self.ring);
            let mut ei = PolyMatrix::from_columns(&self.ring, self.gen_degrees().to_vec(), vec![e]);
            ei.set_col_degs(vec![self.gen_degrees()[i]]);
            let both = ei.hcat(&self.rel);
            let s = syzygies(&both)?;
            let q = IdealData::new(&self.ring, s.row(0)).gb_ideal()?;
            acc = Some(match acc {
                None => q,
                Some(a) => a.intersect(&q)?.gb_ideal()?,
            });
        }
        Ok(acc.unwrap_or_else(|| IdealData::unit(&self.ring)))
    }

    /// Krull dimension of the module from its lead-term module; `None` for zero.
    pub fn dimension(&self) -> Result<Option<usize>> {
        let gb = self.relation_gb()?;
        let nv = self.ring.nvars();
        let mut best: Option<usize> = None;
        for i in 0..self.ambient_rank() {
            let supports: Vec<Vec<usize>> = gb
                .basis
                .iter()
                .filter(|v| v[0].comp == i as u32)
                .map(|v| (0..nv).filter(|&k| v[0].mono.exps()[k] > 0).collect())
                .collect();
            if supports.iter().any(|s: &Vec<usize>| s.is_empty()) {
                continue;
            }
            let d = nv - min_cover(nv, &supports);
            best = Some(best.map_or(d, |b| b.max(d)));
        }
        Ok(best)
    }

    /// Whether the module is Cohen-Macaulay (zero counts as CM).
    pub fn is_cohen_macaulay(&self) -> Result<bool> {
        match (self.dimension()?, self.depth()?) {
            (None, _) => Ok(true),
            (Some(d), Some(t)) => Ok(d == t),
            (Some(_), None) => Ok(true),
        }
    }

    pub fn invariants(&self) -> Result<InvariantTuple> {
        let m = self.minimize()?;
        let mut fitting = Vec::new();
        for i in 0..=m.ambient_rank() {
            fitting.push(m.fitting_ideal(i)?.sorted_gb_strings()?);
        }
        Ok(InvariantTuple { rank: self.rank(), fitting, betti: m.betti()? })
    }

    /// Moves the module to another ring with the same variable names.
    pub fn to_ring(&self, target: &PolyRing) -> Result<PModule> {
        Ok(PModule::new(self.rel.to_ring(target)?))
    }
}

impl IdealData {
    /// Whether the ideal is `(0)`.
    pub fn is_zero_ideal(&self) -> Result<bool> {
        Ok(self.groebner_basis()?.is_empty())
    }
}

/// Row degrees making every entry homogeneous of degree `col - row`, if any exist.
pub fn infer_row_degrees(m: &PolyMatrix) -> Option<Vec<i64>> {
    let n = m.rows();
    for i in 0..n {
        for j in 0..m.cols() {
            if !m.get(i, j).is_homogeneous() {
                return None;
            }
        }
    }
    // Offsets relative to a root per connected component: deg(row i) = base + off[i].
    let mut off: Vec<Option<i64>> = vec![None; n];
    for start in 0..n {
        if off[start].is_some() {
            continue;
        }
        off[start] = Some(0);
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for j in 0..m.cols() {
                let Some(di) = m.get(i, j).degree() else { continue };
                let col = off[i].unwrap() + di as i64;
                for k in 0..n {
                    let Some(dk) = m.get(k, j).degree() else { continue };
                    let want = col - dk as i64;
                    match off[k] {
                        None => {
                            off[k] = Some(want);
                            stack.push(k);
                        }
                        Some(o) if o != want => return None,
                        _ => {}
                    }
                }
            }
        }
    }
    let mut degs: Vec<i64> = off.into_iter().map(|o| o.unwrap()).collect();
    // Normalize each component so its smallest generator degree is zero.
    let mut comp = vec![usize::MAX; n];
    let mut c = 0;
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let mut stack = vec![s];
        comp[s] = c;
        while let Some(i) = stack.pop() {
            for j in 0..m.cols() {
                if m.get(i, j).is_zero() {
                    continue;
                }
                for k in 0..n {
                    if comp[k] == usize::MAX && !m.get(k, j).is_zero() {
                        comp[k] = c;
                        stack.push(k);
                    }
                }
            }
        }
        c += 1;
    }
    for cc in 0..c {
        let min = (0..n).filter(|&i| comp[i] == cc).map(|i| degs[i]).min().unwrap();
        for i in 0..n {
            if comp[i] == cc {
                degs[i] -= min;
            }
        }
    }
    Some(degs)
}

pub(crate) fn columns_as_vectors(ord: &VecOrder, m: &PolyMatrix) -> Vec<Vector> {
    (0..m.cols()).map(|j| ord.from_polys(&m.column(j))).filter(|v| !v.is_empty()).collect()
}

/// Kernel of the map given by `m` (columns generate the syzygy module).
pub fn syzygies(m: &PolyMatrix) -> Result<PolyMatrix> {
    let ring = m.ring();
    let (n, s) = (m.rows(), m.cols());
    let mut shifts = m.row_degs().to_vec();
    shifts.extend_from_slice(m.col_degs());
    let ord = VecOrder::new(ring, ModOrder::Pot, shifts);
    let mut gens = Vec::with_capacity(s);
    for j in 0..s {
        let mut v: Vec<VTerm> = Vec::new();
        for i in 0..n {
            for (mo, c) in m.get(i, j).terms() {
                v.push(VTerm { comp: i as u32, mono: mo.clone(), coeff: c.clone() });
            }
        }
        v.push(VTerm { comp: (n + j) as u32, mono: ring.one_monomial(), coeff: ring.field().one() });
        gens.push(ord.normalize(v));
    }
    let gb = ModuleGb::compute(&ord, gens)?;
    let mut cols = Vec::new();
    let mut degs = Vec::new();
    for v in gb.basis.iter().filter(|v| v[0].comp as usize >= n) {
        let parts = ord.to_polys(v);
        cols.push(parts[n..].to_vec());
        degs.push(ord.sugar(v));
    }
    let mut out = PolyMatrix::from_columns(ring, m.col_degs().to_vec(), cols);
    out.set_col_degs(degs);
    Ok(out)
}

/// Position of a nonzero constant entry, scanning columns then rows.
fn unit_position(m: &PolyMatrix) -> Option<(usize, usize)> {
    for j in 0..m.cols() {
        for i in 0..m.rows() {
            if m.get(i, j).is_unit() {
                return Some((i, j));
            }
        }
    }
    None
}

/// Removes unit entries of `m` by column operations, deleting the pivot row
/// and column; the matching redundant column of `prev` is deleted as well.
fn prune_units(mut prev: Option<&mut PolyMatrix>, m: &mut PolyMatrix) {
    let ring = m.ring().clone();
    let field = ring.field();
    while let Some((i, j)) = unit_position(m) {
        let c = m.get(i, j).constant_term();
        let cinv = field.inv(&c);
        let pivot = m.column(j);
        let mut cols: Vec<Vec<Poly>> = Vec::new();
        let mut degs = Vec::new();
        for l in 0..m.cols() {
            if l == j {
                continue;
            }
            let mut col = m.column(l);
            let a = col[i].clone();
            if !a.is_zero() {
                let factor = a.scale(&cinv);
                for (k, p) in pivot.iter().enumerate() {
                    if !p.is_zero() {
                        col[k] = &col[k] - &(&factor * p);
                    }
                }
            }
            col.remove(i);
            cols.push(col);
            degs.push(m.col_degs()[l]);
        }
        let mut rdegs = m.row_degs().to_vec();
        rdegs.remove(i);
        let mut nm = PolyMatrix::from_columns(&ring, rdegs, cols);
        nm.set_col_degs(degs);
        *m = nm.compress_keep_degs();
        if let Some(p) = prev.as_deref_mut() {
            let keep: Vec<usize> = (0..p.cols()).filter(|&k| k != i).collect();
            *p = p.select_columns(&keep);
        }
    }
}

impl PolyMatrix {
    /// Drops zero columns, keeping the recorded degrees of the others.
    pub(crate) fn compress_keep_degs(&self) -> PolyMatrix {
        let keep: Vec<usize> =
            (0..self.cols()).filter(|&j| (0..self.rows()).any(|i| !self.get(i, j).is_zero())).collect();
        self.select_columns(&keep)
    }
}

fn resolve(m: &PModule, max_len: usize) -> Result<FreeResolution> {
    let ctx = m.ring.context().clone();
    ctx.bump(&ctx.stats.resolutions, 1);
    let mut d1 = m.rel.compress_keep_degs();
    prune_units(None, &mut d1);
    let f0_degs = d1.row_degs().to_vec();
    let mut maps: Vec<PolyMatrix> = vec![d1];
    loop {
        let cur = maps.last().unwrap();
        if cur.cols() == 0 {
            maps.pop();
            break;
        }
        if maps.len() > max_len {
            return Err(Error::MaxLenExceeded(max_len));
        }
        let mut next = syzygies(cur)?;
        let last = maps.last_mut().unwrap();
        prune_units(Some(last), &mut next);
        if next.cols() == 0 {
            break;
        }
        maps.push(next);
    }
    let res = FreeResolution { f0_degs, maps };
    if m.ring.settings().verify {
        verify_resolution(&m.ring, &res)?;
        if !res.f0_degs.is_empty() {
            ctx.bump(&ctx.stats.depth_checks, 1);
            let coker = PModule::new(match res.maps.first() {
                Some(d) => d.clone(),
                None => {
                    let mut z = PolyMatrix::zero(&m.ring, res.f0_degs.len(), 0);
                    z.set_row_degs(res.f0_degs.clone());
                    z
                }
            });
            let kd = koszul_depth(&coker)?;
            if kd != Some(m.ring.nvars() - res.length()) {
                ctx.bump(&ctx.stats.depth_failures, 1);
            }
        }
    }
    Ok(res)
}

/// Checks `d_k d_{k+1} = 0`, exactness in the middle and injectivity of the last map.
fn verify_resolution(ring: &PolyRing, res: &FreeResolution) -> Result<()> {
    let ctx = ring.context().clone();
    for k in 0..res.maps.len() {
        ctx.bump(&ctx.stats.exactness_checks, 1);
        let d = &res.maps[k];
        let kernel = syzygies(d)?;
        let ok = if k + 1 < res.maps.len() {
            let next = &res.maps[k + 1];
            let comp_zero = d.mul(next)?.is_zero();
            let ord = VecOrder::new(ring, ModOrder::Top, d.col_degs().to_vec());
            let gb = ModuleGb::compute(&ord, columns_as_vectors(&ord, next))?;
            comp_zero && columns_as_vectors(&ord, &kernel).into_iter().all(|v| gb.contains(v))
        } else {
            kernel.cols() == 0
        };
        if !ok {
            ctx.bump(&ctx.stats.exactness_failures, 1);
        }
    }
    Ok(())
}

/// Saturation `N : f^∞` of the column span of `rel` inside its free module, by iterated quotients.
pub fn saturate_submodule(rel: &PolyMatrix, f: &Poly) -> Result<PolyMatrix> {
    let ring = rel.ring();
    let n = rel.rows();
    let ord = VecOrder::new(ring, ModOrder::Top, rel.row_degs().to_vec());
    let mut cur = rel.compress_keep_degs();
    let mut cur_gb = ModuleGb::compute(&ord, columns_as_vectors(&ord, &cur))?;
    loop {
        let next = module_quotient(&cur, f)?;
        let next_gb = ModuleGb::compute(&ord, columns_as_vectors(&ord, &next))?;
        if next_gb.basis == cur_gb.basis {
            return Ok(cur);
        }
        let _ = n;
        cur = next;
        cur_gb = next_gb;
    }
}

/// `N : f = { v : f v ∈ N }` for the column span `N` of `rel`.
pub fn module_quotient(rel: &PolyMatrix, f: &Poly) -> Result<PolyMatrix> {
    let ring = rel.ring();
    let n = rel.rows();
    let fd = f.degree().unwrap_or(0) as i64;
    // Columns (f e_i ; e_i) and (b ; 0); kernel-style elimination of the first block.
    let mut big_rows = rel.row_degs().to_vec();
    big_rows.extend(rel.row_degs().iter().map(|d| d + fd));
    let mut shifts = big_rows.clone();
    shifts.truncate(2 * n);
    let ord = VecOrder::new(ring, ModOrder::Pot, shifts);
    let mut gens: Vec<Vector> = Vec::new();
    for i in 0..n {
        let mut parts = vec![Poly::zero(ring); 2 * n];
        parts[i] = f.clone();
        parts[n + i] = Poly::one(ring);
        gens.push(ord.from_polys(&parts));
    }
    for j in 0..rel.cols() {
        let mut parts = rel.column(j);
        parts.extend(vec![Poly::zero(ring); n]);
        gens.push(ord.from_polys(&parts));
    }
    let gb = ModuleGb::compute(&ord, gens)?;
    let mut cols = Vec::new();
    let mut degs = Vec::new();
    for v in gb.basis.iter().filter(|v| v[0].comp as usize >= n) {
        let parts = ord.to_polys(v);
        cols.push(parts[n..].to_vec());
        degs.push(ord.sugar(v) - fd);
    }
    let mut out = PolyMatrix::from_columns(ring, rel.row_degs().to_vec(), cols);
    out.set_col_degs(degs);
    Ok(out)
}

/// Presentation of `(im Z + im B)/im B` on the columns of `Z`.
pub fn subquotient(z: &PolyMatrix, b: &PolyMatrix) -> Result<PModule> {
    let k = z.cols();
    let both = z.hcat(b);
    let s = syzygies(&both)?;
    let rows: Vec<usize> = (0..k).collect();
    let mut rel = s.select_rows(&rows).compress_keep_degs();
    rel.set_row_degs(z.col_degs().to_vec());
    Ok(PModule::new(rel))
}

/// The submodule of a free module generated by the columns of `z`, presented by their syzygies.
pub fn module_generated_by(z: &PolyMatrix) -> Result<PModule> {
    let s = syzygies(z)?;
    Ok(PModule::new(s))
}

/// Homology at `F` of presented modules `coker(b_next) -> coker(b) -> coker(b_prev)`
/// with lifted maps `d_next: F_next -> F` and `d: F -> F_prev` (absent maps are zero).
pub fn homology(
    d: Option<&PolyMatrix>,
    b_prev: Option<&PolyMatrix>,
    d_next: Option<&PolyMatrix>,
    b: &PolyMatrix,
) -> Result<PModule> {
    let ring = b.ring();
    let f_degs = b.row_degs().to_vec();
    let z = match d {
        None => {
            let mut id = PolyMatrix::identity(ring, f_degs.len());
            id.set_row_degs(f_degs.clone());
            id.set_col_degs(f_degs.clone());
            id
        }
        Some(d) => {
            let joined = match b_prev {
                Some(bp) => d.hcat(bp),
                None => d.clone(),
            };
            let s = syzygies(&joined)?;
            let rows: Vec<usize> = (0..d.cols()).collect();
            let mut z = s.select_rows(&rows).compress_keep_degs();
            z.set_row_degs(f_degs.clone());
            z
        }
    };
    let boundaries = match d_next {
        Some(dn) => dn.hcat(b),
        None => b.clone(),
    };
    subquotient(&z, &boundaries)
}

/// Depth from the Koszul complex on the variables: `nvars - max{j : H_j(x; M) != 0}`.
pub fn koszul_depth(m: &PModule) -> Result<Option<usize>> {
    let ring = m.ring();
    let nv = ring.nvars();
    if m.is_zero()? {
        return Ok(None);
    }
    let xs: Vec<Poly> = (0..nv).map(|i| Poly::var(ring, i)).collect();
    let xdegs: Vec<i64> = ring.weights().iter().map(|&w| w as i64).collect();
    for j in (0..=nv).rev() {
        let h = koszul_homology_module(m, &xs, &xdegs, j)?;
        if !h.is_zero()? {
            return Ok(Some(nv - j));
        }
    }
    Ok(Some(nv))
}

/// Koszul differential `⋀^j R^n -> ⋀^{j-1} R^n` on elements `f` (degrees `fd`),
/// tensored with a free module with generator degrees `base`.
pub fn koszul_map(ring: &PolyRing, f: &[Poly], fd: &[i64], j: usize, base: &[i64]) -> PolyMatrix {
    let n = f.len();
    let src = subsets(n, j);
    let tgt = subsets(n, j.saturating_sub(1));
    let r = base.len();
    let sdeg = |s: &Vec<usize>| s.iter().map(|&i| fd[i]).sum::<i64>();
    let mut m = PolyMatrix::zero(ring, tgt.len() * r, src.len() * r);
    let row_degs: Vec<i64> = tgt.iter().flat_map(|t| base.iter().map(move |b| b + sdeg(t))).collect();
    let col_degs: Vec<i64> = src.iter().flat_map(|s| base.iter().map(move |b| b + sdeg(s))).collect();
    if j > 0 {
        for (si, s) in src.iter().enumerate() {
            for (pos, &k) in s.iter().enumerate() {
                let mut t = s.clone();
                t.remove(pos);
                let ti = tgt.iter().position(|x| *x == t).unwrap();
                let p = if pos % 2 == 0 { f[k].clone() } else { f[k].neg() };
                for q in 0..r {
                    m.set(ti * r + q, si * r + q, p.clone());
                }
            }
        }
    }
    m.set_row_degs(row_degs);
    m.set_col_degs(col_degs);
    m
}

/// `H_j(f; M)` for a presented module `M`.
pub fn koszul_homology_module(m: &PModule, f: &[Poly], fd: &[i64], j: usize) -> Result<PModule> {
    let ring = m.ring();
    let n = f.len();
    let base = m.gen_degrees();
    let r = base.len();
    let sdeg = |s: &Vec<usize>| s.iter().map(|&i| fd[i]).sum::<i64>();
    let rel_block = |k: usize| -> PolyMatrix {
        let sets = subsets(n, k);
        let mut out: Option<PolyMatrix> = None;
        let mut cols: Vec<Vec<Poly>> = Vec::new();
        let mut degs = Vec::new();
        for (si, s) in sets.iter().enumerate() {
            for c in 0..m.num_relations() {
                let mut col = vec![Poly::zero(ring); sets.len() * r];
                for q in 0..r {
                    col[si * r + q] = m.relations().get(q, c).clone();
                }
                cols.push(col);
                degs.push(m.relations().col_degs()[c] + sdeg(s));
            }
        }
        let row_degs: Vec<i64> = sets.iter().flat_map(|s| base.iter().map(move |b| b + sdeg(s))).collect();
        let mut mm = PolyMatrix::from_columns(ring, row_degs, cols);
        mm.set_col_degs(degs);
        out.get_or_insert(mm).clone()
    };
    let b = rel_block(j);
    let d = if j > 0 { Some(koszul_map(ring, f, fd, j, base)) } else { None };
    let b_prev = if j > 0 { Some(rel_block(j - 1)) } else { None };
    let d_next = if j < n { Some(koszul_map(ring, f, fd, j + 1, base)) } else { None };
    homology(d.as_ref(), b_prev.as_ref(), d_next.as_ref(), &b)
}

/// Koszul homology `H_j(f; R)` of a sequence of homogeneous elements.
pub fn koszul_homology(ring: &PolyRing, f: &[Poly], j: usize) -> Result<PModule> {
    let fd: Vec<i64> = f.iter().map(|p| p.degree().unwrap_or(0) as i64).collect();
    koszul_homology_module(&PModule::free(ring, vec![0]), f, &fd, j)
}

/// Whether two submodules of the same free module (given by generating columns) coincide.
pub fn same_submodule(a: &PolyMatrix, b: &PolyMatrix) -> Result<bool> {
    let ord = VecOrder::new(a.ring(), ModOrder::Top, a.row_degs().to_vec());
    let ga = ModuleGb::compute(&ord, columns_as_vectors(&ord, a))?;
    let gb = ModuleGb::compute(&ord, columns_as_vectors(&ord, b))?;
    Ok(ga.basis == gb.basis)
}

impl fmt::Debug for PModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PModule(n={}, degs={:?}) {:?}", self.ambient_rank(), self.gen_degrees(), self.rel)
    }
}
