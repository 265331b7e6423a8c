use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::Coeff;
use crate::ideal::IdealData;
use crate::matrix::PolyMatrix;
use crate::module::{syzygies, PModule};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Poly;
use crate::ring::PolyRing;

/// Symmetric and Rees algebras of a module `E = coker φ` inside `R[T_1..T_n]`.
pub struct ReesPackage {
    /// The (minimally presented, torsion-free) module whose algebras are stored.
    pub module: PModule,
    pub base: PolyRing,
    /// `R[T_1..T_n]`, graded reverse lex, `T_i` weighted by its generator degree.
    pub ambient: PolyRing,
    /// Positions of the `T` variables in the ambient ring.
    pub t_vars: Vec<usize>,
    /// Ideal `L` of the linear forms `[T]·φ`.
    pub sym_ideal: IdealData,
    /// Defining ideal `P = L : f^∞` of the Rees algebra.
    pub rees_ideal: IdealData,
    /// Element `f` of the base ring with `E_f` free.
    pub sat_witness: Poly,
    /// Remarks on substitutions made while building the package.
    pub notes: Vec<String>,
    fiber: OnceLock<std::result::Result<IdealData, Error>>,
    cm: OnceLock<std::result::Result<ReesCm, Error>>,
    powers: std::sync::Mutex<HashMap<usize, PModule>>,
}

/// Cohen-Macaulay data of `ambient/P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReesCm {
    pub dim: usize,
    pub pd: usize,
    pub nvars: usize,
    pub is_cm: bool,
}

/// A sampled reduction: `U` spanned by general linear forms in `T`, with its reduction number.
#[derive(Clone, Debug)]
pub struct ReductionData {
    pub forms: Vec<Poly>,
    pub r: usize,
    pub cap: usize,
    pub seed: u64,
}

/// Names `T1..Tn`, made fresh against the base ring.
fn t_names(base: &PolyRing, n: usize) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    for i in 1..=n {
        let mut name = format!("T{i}");
        let mut k = 0;
        while base.var_index(&name).is_some() || out.contains(&name) {
            name = format!("T{i}_{k}");
            k += 1;
        }
        out.push(name);
    }
    out
}

/// `R[T]` with weights `d_i - min + 1` on `T_i`.
pub fn rees_ambient(base: &PolyRing, degs: &[i64]) -> Result<PolyRing> {
    let min = degs.iter().copied().min().unwrap_or(0);
    let w: Vec<u32> = degs.iter().map(|d| (d - min + 1) as u32).collect();
    base.extend(&t_names(base, degs.len()), &w, MonomialOrder::Grevlex)
}

/// The linear forms `Σ_i φ_ij T_i` in `ambient`.
pub fn linear_forms(rel: &PolyMatrix, ambient: &PolyRing) -> Vec<Poly> {
    let nb = ambient.nvars() - rel.rows();
    let base_map: Vec<usize> = (0..nb).collect();
    (0..rel.cols())
        .map(|j| {
            let mut acc = Poly::zero(ambient);
            for i in 0..rel.rows() {
                let e = rel.get(i, j);
                if !e.is_zero() {
                    acc = &acc + &(&e.rename(ambient, &base_map) * &Poly::var(ambient, nb + i));
                }
            }
            acc
        })
        .filter(|p| !p.is_zero())
        .collect()
}

/// Symmetric algebra ideal of the minimal presentation.
pub fn symmetric_ideal(e: &PModule) -> Result<IdealData> {
    let m = e.minimize()?;
    let amb = rees_ambient(e.ring(), m.gen_degrees())?;
    Ok(IdealData::new(&amb, linear_forms(m.relations(), &amb)))
}

impl ReesPackage {
    /// Builds the package for `E`, minimizing first and replacing `E` by its
    /// torsion-free quotient when needed.
    pub fn new(e: &PModule) -> Result<ReesPackage> {
        let mut notes = Vec::new();
        let mut m = e.minimize()?;
        if m.rank() == 0 {
            return Err(Error::RankZero);
        }
        let t = m.torsion_submodule()?;
        if !t.is_torsion_free {
            notes.push("module has torsion; the torsion-free quotient was used".to_string());
            m = t.quotient.minimize()?;
        }
        ReesPackage::from_presentation(&m, notes)
    }

    /// Builds the package on the given presentation as is (no minimization).
    pub fn from_presentation(m: &PModule, notes: Vec<String>) -> Result<ReesPackage> {
        let (_, w) = m.relations().rank_with_witness(0);
        let f = w.map(|x| x.2).unwrap_or_else(|| Poly::one(m.ring()));
        ReesPackage::with_witness(m, f, notes)
    }

    /// As [`ReesPackage::from_presentation`], saturating at a caller-supplied
    /// nonzero `f` with `E_f` free.
    pub fn with_witness(m: &PModule, f: Poly, notes: Vec<String>) -> Result<ReesPackage> {
        let base = m.ring().clone();
        let ambient = rees_ambient(&base, m.gen_degrees())?;
        let nb = base.nvars();
        let t_vars: Vec<usize> = (nb..ambient.nvars()).collect();
        let sym = IdealData::new(&ambient, linear_forms(m.relations(), &ambient));
        let base_map: Vec<usize> = (0..nb).collect();
        let f_amb = f.rename(&ambient, &base_map);
        let rees = sym.saturate_poly(&f_amb)?.gb_ideal()?;
        Ok(ReesPackage {
            module: m.clone(),
            base,
            ambient,
            t_vars,
            sym_ideal: sym,
            rees_ideal: rees,
            sat_witness: f,
            notes,
            fiber: OnceLock::new(),
            cm: OnceLock::new(),
            powers: std::sync::Mutex::new(HashMap::new()),
        })
    }

    pub fn ngens(&self) -> usize {
        self.t_vars.len()
    }

    /// Embeds a base-ring polynomial into the ambient ring.
    pub fn lift(&self, p: &Poly) -> Poly {
        let map: Vec<usize> = (0..self.base.nvars()).collect();
        p.rename(&self.ambient, &map)
    }

    pub fn t_var(&self, i: usize) -> Poly {
        Poly::var(&self.ambient, self.t_vars[i])
    }

    pub fn is_linear_type(&self) -> Result<bool> {
        self.rees_ideal.equals(&self.sym_ideal)
    }

    /// Degree in the `T` variables of a bihomogeneous polynomial.
    pub fn t_degree(&self, p: &Poly) -> Option<u32> {
        let d = p.partial_degrees(&self.t_vars);
        let first = *d.first()?;
        if d.iter().all(|&x| x == first) {
            Some(first)
        } else {
            None
        }
    }

    /// `E^j` presented on the `T`-monomials of degree `j`.
    pub fn power_module(&self, j: usize) -> Result<PModule> {
        if let Some(m) = self.powers.lock().unwrap().get(&j) {
            return Ok(m.clone());
        }
        let m = power_from_ideal(self, &self.rees_ideal, j)?;
        self.powers.lock().unwrap().insert(j, m.clone());
        Ok(m)
    }

    /// Ideal of the special fiber ring in `k[T]`: eliminate the base variables from `P + m`.
    pub fn fiber_ideal(&self) -> Result<IdealData> {
        self.fiber
            .get_or_init(|| {
                let mut gens = self.rees_ideal.gens().to_vec();
                gens.extend((0..self.base.nvars()).map(|i| Poly::var(&self.ambient, i)));
                let keep: Vec<&str> = self.t_vars.iter().map(|&i| self.ambient.vars()[i].as_str()).collect();
                IdealData::new(&self.ambient, gens).eliminate(&keep)
            })
            .clone()
    }

    /// Analytic spread `ℓ(E)`, the Krull dimension of the special fiber ring.
    pub fn analytic_spread(&self) -> Result<usize> {
        Ok(self.fiber_ideal()?.dimension()?.unwrap_or(0))
    }

    /// Krull dimension of `ambient/P`.
    pub fn rees_dimension(&self) -> Result<usize> {
        Ok(self.rees_cm()?.dim)
    }

    /// Cohen-Macaulayness of the Rees ring: `pd(ambient/P) == nvars - dim`.
    pub fn rees_cm(&self) -> Result<ReesCm> {
        self.cm
            .get_or_init(|| {
                let dim = self.rees_ideal.dimension()?.unwrap_or(0);
                let pd = PModule::cyclic(&self.rees_ideal)?.pd()?;
                let nvars = self.ambient.nvars();
                Ok(ReesCm { dim, pd, nvars, is_cm: pd == nvars - dim })
            })
            .clone()
    }

    /// `count` general homogeneous linear forms `Σ z_i T_i`; the `z_i` are
    /// scalars when all generators share a degree, else forms of degree `D - d_i`.
    pub fn general_forms(&self, count: usize, seed: u64) -> Vec<Poly> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let degs = self.module.gen_degrees();
        (0..count)
            .map(|_| {
                let coeffs = general_coefficients(&self.base, degs, &mut rng);
                let mut acc = Poly::zero(&self.ambient);
                for (i, c) in coeffs.iter().enumerate() {
                    acc = &acc + &(&self.lift(c) * &self.t_var(i));
                }
                acc
            })
            .collect()
    }

    /// Least `r <= cap` with `E^{r+1} = U E^r` for `U` spanned by the given forms.
    pub fn reduction_number_for(&self, forms: &[Poly], cap: usize) -> Result<Option<usize>> {
        let mut gens = self.rees_ideal.gens().to_vec();
        gens.extend(forms.iter().cloned());
        let q = IdealData::new(&self.ambient, gens);
        for r in 0..=cap {
            let all = t_monomials(&self.ambient, &self.t_vars, r + 1)
                .into_iter()
                .map(|m| q.contains(&Poly::term(&self.ambient, m, self.ambient.field().one())))
                .collect::<Result<Vec<bool>>>()?;
            if all.into_iter().all(|b| b) {
                return Ok(Some(r));
            }
        }
        Ok(None)
    }

    /// Reduction number sampled over `seeds` with `ℓ(E)` general forms; the minimum is kept.
    pub fn reduction_number(&self, seeds: &[u64]) -> Result<ReductionData> {
        let cap = self.base.settings().reduction_cap;
        let l = self.analytic_spread()?;
        let mut best: Option<ReductionData> = None;
        for &s in seeds {
            let forms = self.general_forms(l, s);
            if let Some(r) = self.reduction_number_for(&forms, cap)? {
                if best.as_ref().map(|b| r < b.r).unwrap_or(true) {
                    best = Some(ReductionData { forms, r, cap, seed: s });
                }
            }
        }
        best.ok_or(Error::CapExceeded(cap))
    }

    /// Independent Rees ideal: embed `E` into `R^m` through generators of `E*`
    /// and take the kernel of `T_i -> Σ_k ψ_k(e_i) t_k` by elimination.
    pub fn graph_kernel(&self) -> Result<IdealData> {
        graph_kernel(&self.module, &self.ambient)
    }

    /// Whether `P` and the graph kernel agree in every `T`-degree up to `max_deg`.
    pub fn agrees_with_graph_up_to(&self, max_deg: usize) -> Result<bool> {
        let g = self.graph_kernel()?.gb_ideal()?;
        let p = &self.rees_ideal;
        for (a, b) in [(&g, p), (p, &g)] {
            for h in a.groebner_basis()? {
                match self.t_degree(&h) {
                    Some(d) if (d as usize) <= max_deg => {
                        if !b.contains(&h)? {
                            return Ok(false);
                        }
                    }
                    Some(_) => {}
                    None => return Err(Error::NotGraded("Rees ideal generator is not T-homogeneous".into())),
                }
            }
        }
        Ok(true)
    }
}

/// Coefficients of a general homogeneous element of a module with generator degrees `degs`.
pub fn general_coefficients(base: &PolyRing, degs: &[i64], rng: &mut ChaCha8Rng) -> Vec<Poly> {
    let top = degs.iter().copied().max().unwrap_or(0);
    general_coefficients_to(base, degs, top, rng)
}

/// Coefficients making `Σ c_i a_i` a general element of degree `top`.
pub fn general_coefficients_to(base: &PolyRing, degs: &[i64], top: i64, rng: &mut ChaCha8Rng) -> Vec<Poly> {
    let field = base.field();
    degs.iter()
        .map(|&d| {
            let k = (top - d) as u32;
            let terms: Vec<(Monomial, Coeff)> = monomials_of_degree(base, k)
                .into_iter()
                .map(|m| (m, field.random_nonzero(rng)))
                .collect();
            Poly::from_terms(base, terms)
        })
        .collect()
}

/// All monomials of weighted degree `k` in the ring.
pub fn monomials_of_degree(ring: &PolyRing, k: u32) -> Vec<Monomial> {
    let n = ring.nvars();
    let w = ring.weights().to_vec();
    let mut out = Vec::new();
    let mut cur = vec![0u16; n];
    fn rec(i: usize, left: u32, w: &[u32], cur: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if i == w.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let mut e = 0;
        while e * w[i] <= left {
            cur[i] = e as u16;
            rec(i + 1, left - e * w[i], w, cur, out);
            e += 1;
        }
        cur[i] = 0;
    }
    let mut raw = Vec::new();
    rec(0, k, &w, &mut cur, &mut raw);
    for e in raw {
        out.push(ring.monomial(&e));
    }
    out.sort_by(|a, b| ring.cmp_monomials(b, a));
    out
}

/// Monomials of ordinary degree `k` in the variables `vars` (descending order).
pub fn t_monomials(ring: &PolyRing, vars: &[usize], k: usize) -> Vec<Monomial> {
    let n = ring.nvars();
    let mut out = Vec::new();
    let mut cur = vec![0u16; n];
    fn rec(pos: usize, left: usize, vars: &[usize], cur: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if pos == vars.len() - 1 {
            cur[vars[pos]] = left as u16;
            out.push(cur.clone());
            cur[vars[pos]] = 0;
            return;
        }
        for e in (0..=left).rev() {
            cur[vars[pos]] = e as u16;
            rec(pos + 1, left - e, vars, cur, out);
        }
        cur[vars[pos]] = 0;
    }
    if vars.is_empty() {
        if k == 0 {
            out.push(ring.one_monomial());
        }
        return out;
    }
    let mut raw = Vec::new();
    rec(0, k, vars, &mut cur, &mut raw);
    for e in raw {
        out.push(ring.monomial(&e));
    }
    out
}

/// Degree-`j` piece of `ambient/P` as an `R`-module, for a `T`-homogeneous basis of `P`.
pub fn power_from_ideal(pkg: &ReesPackage, p: &IdealData, j: usize) -> Result<PModule> {
    let base = &pkg.base;
    let amb = &pkg.ambient;
    let nb = base.nvars();
    let degs = pkg.module.gen_degrees();
    let basis = t_monomials(amb, &pkg.t_vars, j);
    let key = |m: &Monomial| -> Vec<u16> { pkg.t_vars.iter().map(|&i| m.exps()[i]).collect() };
    let index: HashMap<Vec<u16>, usize> = basis.iter().enumerate().map(|(k, m)| (key(m), k)).collect();
    let gen_degs: Vec<i64> = basis
        .iter()
        .map(|m| key(m).iter().zip(degs).map(|(&e, &d)| e as i64 * d).sum())
        .collect();
    let mut cols: Vec<Vec<Poly>> = Vec::new();
    for g in p.groebner_basis()? {
        let Some(t) = pkg.t_degree(&g) else {
            return Err(Error::NotGraded("Rees ideal generator is not T-homogeneous".into()));
        };
        let t = t as usize;
        if t > j {
            continue;
        }
        for u in t_monomials(amb, &pkg.t_vars, j - t) {
            let mut parts: Vec<Vec<(Monomial, Coeff)>> = vec![Vec::new(); basis.len()];
            for (m, c) in g.terms() {
                let full = m.mul(&u);
                let k = index[&key(&full)];
                let xe: Vec<u16> = full.exps()[..nb].to_vec();
                parts[k].push((base.monomial(&xe), c.clone()));
            }
            cols.push(parts.into_iter().map(|t| Poly::from_terms(base, t)).collect());
        }
    }
    let mut m = PolyMatrix::from_columns(base, gen_degs.clone(), cols);
    let cd: Vec<i64> = (0..m.cols())
        .map(|c| {
            (0..m.rows())
                .find_map(|r| m.get(r, c).degree().map(|d| d as i64 + gen_degs[r]))
                .unwrap_or(0)
        })
        .collect();
    m.set_col_degs(cd);
    Ok(PModule::new(m))
}

/// Kernel of `R[T] -> R[t_1..t_m]`, `T_i -> Σ_k ψ_k(e_i) t_k`, returned in `ambient`.
pub fn graph_kernel(e: &PModule, ambient: &PolyRing) -> Result<IdealData> {
    let base = e.ring();
    let nb = base.nvars();
    let n = e.ambient_rank();
    let z = if e.num_relations() == 0 {
        let mut id = PolyMatrix::identity(base, n);
        let d: Vec<i64> = e.gen_degrees().iter().map(|d| -d).collect();
        id.set_row_degs(d.clone());
        id.set_col_degs(d);
        id
    } else {
        syzygies(&e.relations().transpose())?
    };
    let m = z.cols();
    let degs = e.gen_degrees();
    // Weights: T_i gets d_i + c, t_k gets c - δ_k, with c large enough to keep all positive.
    let deltas = z.col_degs();
    let c = deltas
        .iter()
        .map(|d| d + 1)
        .chain(degs.iter().map(|d| 1 - d))
        .max()
        .unwrap_or(1);
    let tnames: Vec<String> = (0..m).map(|k| ambient.fresh_name(&format!("s{k}"))).collect();
    let tw: Vec<u32> = deltas.iter().map(|d| (c - d) as u32).collect();
    let mut vars = tnames.clone();
    vars.extend(ambient.vars().iter().cloned());
    let mut w = tw;
    w.extend(base.weights().iter().copied());
    w.extend(degs.iter().map(|d| (d + c) as u32));
    let big = PolyRing::build(base.field(), vars, MonomialOrder::Block(m), w, base.context().clone())?;
    let to_big: Vec<usize> = (0..nb).map(|i| m + i).collect();
    let mut gens = Vec::new();
    for i in 0..n {
        let mut g = Poly::var(&big, m + nb + i);
        for k in 0..m {
            let zk = z.get(i, k);
            if !zk.is_zero() {
                g = &g - &(&zk.rename(&big, &to_big) * &Poly::var(&big, k));
            }
        }
        gens.push(g);
    }
    let gb = IdealData::new(&big, gens).groebner_basis()?;
    let back: Vec<usize> = (0..big.nvars()).map(|p| p.saturating_sub(m)).collect();
    let out: Vec<Poly> = gb
        .iter()
        .filter(|p| p.terms().iter().all(|t| t.0.exps()[..m].iter().all(|&x| x == 0)))
        .map(|p| p.rename(ambient, &back))
        .collect();
    Ok(IdealData::new(ambient, out))
}

/// Builds the package and returns it shared.
pub fn rees_ideal(e: &PModule) -> Result<Arc<ReesPackage>> {
    ReesPackage::new(e).map(Arc::new)
}

/// Whether the symmetric and Rees ideals coincide.
pub fn is_linear_type(e: &PModule) -> Result<bool> {
    ReesPackage::new(e)?.is_linear_type()
}
