//! Executable theorem registry: each entry evaluates machine-checkable
//! hypotheses on a module and, when they all hold, asserts its conclusions.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bourbaki::{
    bourbaki_construct, ideal_rees, rees_deformation_check, BourbakiData, BourbakiIdeal, BourbakiMode,
    DeformationCheck,
};
use crate::error::{Error, Result};
use crate::ideal::IdealData;
use crate::matrix::PolyMatrix;
use crate::module::{koszul_homology, koszul_homology_module, subquotient, PModule};
use crate::poly::Poly;
use crate::rees::{general_coefficients_to, ReesCm, ReesPackage};
use crate::residual::{check_an, check_gs, ext_vanishing_locus_check, is_ideal_module};

/// Seeds used when sampling reduction numbers: the analysis seed and the next two.
pub const REDUCTION_SEEDS: u64 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Verified,
    HypothesesFail,
    Contradiction,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Verified => "verified",
            Status::HypothesesFail => "hypotheses-fail",
            Status::Contradiction => "CONTRADICTION",
        }
    }
}

/// One evaluated predicate: the operation that decided it and its witness values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub name: String,
    pub op: &'static str,
    pub holds: bool,
    pub detail: String,
}

fn verdict(name: impl Into<String>, op: &'static str, holds: bool, detail: impl Into<String>) -> Verdict {
    Verdict { name: name.into(), op, holds, detail: detail.into() }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub theorem: String,
    pub label: String,
    pub seed: u64,
    pub hypotheses: Vec<Verdict>,
    pub conclusions: Vec<Verdict>,
    pub status: Status,
    pub notes: Vec<String>,
}

/// Optional parameters of registry entries.
#[derive(Clone, Debug, Default)]
pub struct Params {
    /// `k` of the Cohen-Macaulay criteria (defaults to the sampled reduction number).
    pub k: Option<usize>,
    /// `s` of the residual-intersection and submodule entries.
    pub s: Option<usize>,
    /// Largest `j` for "for all j" Ext checks (default 3).
    pub max_j: Option<usize>,
    /// Residual-intersection samples per index (default 2).
    pub trials: Option<usize>,
}

/// A module known to be `I ⊕ R^f`.
#[derive(Clone, Debug)]
pub struct Split {
    pub ideal: IdealData,
    pub free_rank: usize,
}

type Cached<T> = OnceLock<std::result::Result<T, Error>>;

/// Lazily computed invariants of one module, shared by all registry entries.
pub struct Analysis {
    pub label: String,
    pub module: PModule,
    pub seed: u64,
    pub split: Option<Split>,
    pub notes: Vec<String>,
    rees: Cached<Arc<ReesPackage>>,
    bourbaki: Cached<Arc<BourbakiData>>,
    ideal_pkg: Cached<Option<Arc<ReesPackage>>>,
    reduction: Cached<Option<usize>>,
    deformation: Cached<DeformationCheck>,
    grade: Cached<usize>,
    depths: Mutex<HashMap<usize, Option<usize>>>,
    exts: Mutex<HashMap<(usize, usize), bool>>,
    gs: Mutex<HashMap<Option<usize>, (bool, String)>>,
}

fn cached<T: Clone>(cell: &Cached<T>, f: impl FnOnce() -> Result<T>) -> Result<T> {
    cell.get_or_init(f).clone()
}

impl Analysis {
    /// Minimizes `E`; a module with torsion is replaced by its torsion-free quotient (noted).
    pub fn new(label: &str, e: &PModule, seed: u64) -> Result<Analysis> {
        let mut notes = Vec::new();
        let mut m = e.minimize()?;
        if m.rank() > 0 {
            let t = m.torsion_submodule()?;
            if !t.is_torsion_free {
                notes.push("module has torsion; the torsion-free quotient is analysed".into());
                m = t.quotient.minimize()?;
            }
        }
        Ok(Analysis {
            label: label.to_string(),
            module: m,
            seed,
            split: None,
            notes,
            rees: OnceLock::new(),
            bourbaki: OnceLock::new(),
            ideal_pkg: OnceLock::new(),
            reduction: OnceLock::new(),
            deformation: OnceLock::new(),
            grade: OnceLock::new(),
            depths: Mutex::new(HashMap::new()),
            exts: Mutex::new(HashMap::new()),
            gs: Mutex::new(HashMap::new()),
        })
    }

    pub fn with_split(mut self, split: Split) -> Analysis {
        self.split = Some(split);
        self
    }

    pub fn d(&self) -> usize {
        self.module.ring().nvars()
    }
    pub fn e(&self) -> usize {
        self.module.rank()
    }
    pub fn mu(&self) -> usize {
        self.module.ambient_rank()
    }
    pub fn is_free(&self) -> bool {
        self.module.num_relations() == 0
    }

    pub fn rees(&self) -> Result<Arc<ReesPackage>> {
        cached(&self.rees, || ReesPackage::from_presentation(&self.module, vec![]).map(Arc::new))
    }

    pub fn ell(&self) -> Result<usize> {
        self.rees()?.analytic_spread()
    }

    /// Sampled reduction number; `None` when the cap is exceeded.
    pub fn reduction_number(&self) -> Result<Option<usize>> {
        cached(&self.reduction, || {
            let seeds: Vec<u64> = (0..REDUCTION_SEEDS).map(|i| self.seed.wrapping_add(i)).collect();
            match self.rees()?.reduction_number(&seeds) {
                Ok(d) => Ok(Some(d.r)),
                Err(Error::CapExceeded(_)) => Ok(None),
                Err(e) => Err(e),
            }
        })
    }

    pub fn bourbaki(&self) -> Result<Arc<BourbakiData>> {
        cached(&self.bourbaki, || bourbaki_construct(&self.module, BourbakiMode::Random, self.seed).map(Arc::new))
    }

    /// Height of the Bourbaki ideal; `None` for a free module.
    pub fn g(&self) -> Result<Option<usize>> {
        Ok(self.bourbaki()?.height)
    }

    pub fn ideal_rees(&self) -> Result<Option<Arc<ReesPackage>>> {
        cached(&self.ideal_pkg, || Ok(ideal_rees(&*self.bourbaki()?)?.map(Arc::new)))
    }

    pub fn deformation(&self) -> Result<DeformationCheck> {
        cached(&self.deformation, || rees_deformation_check(&*self.bourbaki()?))
    }

    /// `depth E^j` (`None` for the zero module).
    pub fn depth_power(&self, j: usize) -> Result<Option<usize>> {
        if let Some(d) = self.depths.lock().unwrap().get(&j) {
            return Ok(*d);
        }
        let d = if j == 0 { Some(self.d()) } else { self.rees()?.power_module(j)?.depth()? };
        self.depths.lock().unwrap().insert(j, d);
        Ok(d)
    }

    /// Whether `Ext^i(E^j, R) = 0`.
    pub fn ext_vanishes(&self, i: usize, j: usize) -> Result<bool> {
        if let Some(v) = self.exts.lock().unwrap().get(&(i, j)) {
            return Ok(*v);
        }
        let v = self.rees()?.power_module(j)?.ext(i)?.is_zero()?;
        self.exts.lock().unwrap().insert((i, j), v);
        Ok(v)
    }

    pub fn gs(&self, s: Option<usize>) -> Result<bool> {
        Ok(self.gs_detail(s)?.0)
    }

    /// `G_s` verdict with the Fitting heights that decided it.
    pub fn gs_detail(&self, s: Option<usize>) -> Result<(bool, String)> {
        if let Some(v) = self.gs.lock().unwrap().get(&s) {
            return Ok(v.clone());
        }
        let rep = check_gs(&self.module, s)?;
        let detail = rep
            .heights
            .iter()
            .map(|(j, h)| format!("ht Fitt_{j} = {}", fmt_opt(*h)))
            .collect::<Vec<_>>()
            .join(", ");
        let v = (rep.verdict, detail);
        self.gs.lock().unwrap().insert(s, v.clone());
        Ok(v)
    }

    pub fn is_linear_type(&self) -> Result<bool> {
        self.rees()?.is_linear_type()
    }

    pub fn rees_cm(&self) -> Result<ReesCm> {
        self.rees()?.rees_cm()
    }

    /// `grade R(E)_+` from the Koszul homology of the `T` variables on `R[T]/P`.
    pub fn grade_plus(&self) -> Result<usize> {
        cached(&self.grade, || {
            let pkg = self.rees()?;
            let amb = &pkg.ambient;
            let ts: Vec<Poly> = (0..pkg.ngens()).map(|i| pkg.t_var(i)).collect();
            let td: Vec<i64> = pkg.t_vars.iter().map(|&i| amb.weights()[i] as i64).collect();
            let q = PModule::cyclic(&pkg.rees_ideal)?;
            let n = ts.len();
            for j in (0..=n).rev() {
                if !koszul_homology_module(&q, &ts, &td, j)?.is_zero()? {
                    return Ok(n - j);
                }
            }
            Ok(n)
        })
    }
}

/// Registry entry: identifier, title, and the operations its predicates use.
#[derive(Clone, Debug, Serialize)]
pub struct TheoremEntry {
    pub id: &'static str,
    pub title: &'static str,
    pub hypotheses: &'static [&'static str],
    pub conclusions: &'static [&'static str],
}

/// Operations a predicate may be decided by.
pub const OPERATIONS: &[&str] = &[
    "rank",
    "torsion_submodule",
    "fitting_ideal",
    "check_Gs",
    "depth_and_pd",
    "ext_module",
    "ext_vanishing_locus_check",
    "reduction_number",
    "special_fiber_dim",
    "minimal_generators",
    "bourbaki_construct",
    "bourbaki_invariant_check",
    "rees_deformation_check",
    "is_ideal_module",
    "is_orientable",
    "is_linear_type",
    "rees_cm",
    "koszul_homology",
    "grade_rees_plus",
    "check_AN",
    "module_dimension",
    "registry",
];

pub const REGISTRY: &[TheoremEntry] = &[
    TheoremEntry {
        id: "P2.1",
        title: "analytic spread bounds",
        hypotheses: &["rank"],
        conclusions: &["special_fiber_dim", "minimal_generators", "reduction_number", "rees_cm"],
    },
    TheoremEntry {
        id: "P2.8",
        title: "analytic spread and reduction number of a generic Bourbaki ideal",
        hypotheses: &["bourbaki_construct"],
        conclusions: &["special_fiber_dim", "reduction_number"],
    },
    TheoremEntry {
        id: "T2.5",
        title: "Rees algebra of a module versus that of a generic Bourbaki ideal",
        hypotheses: &["rank", "torsion_submodule", "fitting_ideal", "bourbaki_construct"],
        conclusions: &["rees_cm", "grade_rees_plus", "rees_deformation_check", "is_linear_type"],
    },
    TheoremEntry {
        id: "T2.10",
        title: "Artin-Nagata property from depths of powers",
        hypotheses: &["rank", "check_Gs", "depth_and_pd"],
        conclusions: &["check_AN"],
    },
    TheoremEntry {
        id: "T2.11",
        title: "linear type and Cohen-Macaulay Rees algebra from depths of powers (ideals)",
        hypotheses: &["rank", "check_Gs", "depth_and_pd"],
        conclusions: &["is_linear_type", "rees_cm"],
    },
    TheoremEntry {
        id: "T2.12",
        title: "linear type from vanishing Ext of powers (ideals)",
        hypotheses: &["rank", "check_Gs", "ext_module"],
        conclusions: &["is_linear_type"],
    },
    TheoremEntry {
        id: "T3.2",
        title: "linear type from vanishing Ext of powers (modules)",
        hypotheses: &["torsion_submodule", "rank", "is_orientable", "check_Gs", "ext_module"],
        conclusions: &["is_linear_type", "bourbaki_construct"],
    },
    TheoremEntry {
        id: "P3.5",
        title: "modules of projective dimension one",
        hypotheses: &["torsion_submodule", "depth_and_pd", "check_Gs"],
        conclusions: &["minimal_generators", "ext_module"],
    },
    TheoremEntry {
        id: "P3.6",
        title: "strongly Cohen-Macaulay ideal plus a free module",
        hypotheses: &["rank", "koszul_homology", "check_Gs"],
        conclusions: &["special_fiber_dim", "check_Gs", "ext_module"],
    },
    TheoremEntry {
        id: "T3.7",
        title: "linear type of general submodules",
        hypotheses: &["torsion_submodule", "check_Gs", "ext_module", "is_orientable", "module_dimension"],
        conclusions: &["is_linear_type"],
    },
    TheoremEntry {
        id: "L3.8",
        title: "dimension of M/E for general submodules",
        hypotheses: &["torsion_submodule", "check_Gs"],
        conclusions: &["module_dimension"],
    },
    TheoremEntry {
        id: "T4.4",
        title: "Cohen-Macaulay Rees algebra from depths of finitely many powers",
        hypotheses: &["check_Gs", "reduction_number", "depth_and_pd", "ext_vanishing_locus_check"],
        conclusions: &["rees_cm"],
    },
    TheoremEntry {
        id: "C-d4",
        title: "Cohen-Macaulay Rees algebra in dimension four",
        hypotheses: &["check_Gs", "reduction_number", "depth_and_pd"],
        conclusions: &["registry", "rees_cm"],
    },
    TheoremEntry {
        id: "C-d5",
        title: "Cohen-Macaulay Rees algebra in dimension five",
        hypotheses: &["check_Gs", "reduction_number", "depth_and_pd", "ext_vanishing_locus_check"],
        conclusions: &["registry", "rees_cm"],
    },
    TheoremEntry {
        id: "C-LargeRed1",
        title: "large reduction numbers, first form",
        hypotheses: &["check_Gs", "reduction_number", "depth_and_pd", "ext_vanishing_locus_check"],
        conclusions: &["registry", "rees_cm"],
    },
    TheoremEntry {
        id: "C-LargeRed2",
        title: "large reduction numbers, second form",
        hypotheses: &["check_Gs", "reduction_number", "depth_and_pd"],
        conclusions: &["registry", "rees_cm"],
    },
    TheoremEntry {
        id: "T-IdealMod",
        title: "Cohen-Macaulay Rees algebras of ideal modules",
        hypotheses: &["is_ideal_module", "reduction_number", "fitting_ideal", "check_Gs", "depth_and_pd"],
        conclusions: &["rees_cm"],
    },
    TheoremEntry {
        id: "T-HerLinType",
        title: "linear type and Cohen-Macaulay Rees algebra from depths of powers (modules)",
        hypotheses: &["torsion_submodule", "is_orientable", "check_Gs", "depth_and_pd"],
        conclusions: &["is_linear_type", "rees_cm"],
    },
];

pub fn entry(id: &str) -> Option<&'static TheoremEntry> {
    REGISTRY.iter().find(|e| e.id == id)
}

/// Collects hypotheses and decides the status.
struct Builder<'a> {
    a: &'a Analysis,
    id: &'static str,
    hyps: Vec<Verdict>,
    concl: Vec<Verdict>,
    notes: Vec<String>,
}

impl<'a> Builder<'a> {
    fn new(a: &'a Analysis, id: &'static str) -> Builder<'a> {
        Builder { a, id, hyps: vec![], concl: vec![], notes: a.notes.clone() }
    }
    fn hyp(&mut self, v: Verdict) -> bool {
        let h = v.holds;
        self.hyps.push(v);
        h
    }
    fn ok(&self) -> bool {
        self.hyps.iter().all(|v| v.holds)
    }
    fn concl(&mut self, v: Verdict) {
        self.concl.push(v);
    }
    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }
    fn finish(self) -> CheckReport {
        let status = if !self.hyps.iter().all(|v| v.holds) {
            Status::HypothesesFail
        } else if self.concl.iter().all(|v| v.holds) {
            Status::Verified
        } else {
            Status::Contradiction
        };
        CheckReport {
            theorem: self.id.to_string(),
            label: self.a.label.clone(),
            seed: self.a.seed,
            hypotheses: self.hyps,
            conclusions: self.concl,
            status,
            notes: self.notes,
        }
    }
}

fn fmt_opt(v: Option<usize>) -> String {
    v.map(|x| x.to_string()).unwrap_or_else(|| "inf".into())
}

/// Evaluates `pred` on every `j` in `lo..=hi`; an empty range holds vacuously.
fn range_all(lo: i64, hi: i64, mut pred: impl FnMut(usize) -> Result<(bool, String)>) -> Result<(bool, String)> {
    if lo > hi {
        return Ok((true, format!("empty range [{lo}, {hi}]")));
    }
    let mut parts = Vec::new();
    for j in lo..=hi {
        let (ok, s) = pred(j as usize)?;
        parts.push(format!("j={j}: {s}"));
        if !ok {
            return Ok((false, parts.join("; ")));
        }
    }
    Ok((true, parts.join("; ")))
}

/// `depth E^j >= bound(j)` over a range; a zero power counts as infinite depth.
fn depth_range(a: &Analysis, lo: i64, hi: i64, bound: impl Fn(i64) -> i64) -> Result<(bool, String)> {
    range_all(lo.max(1), hi, |j| {
        let dep = a.depth_power(j)?;
        let b = bound(j as i64);
        Ok((dep.map(|x| x as i64 >= b).unwrap_or(true), format!("depth {} >= {b}", fmt_opt(dep))))
    })
}

fn gs_verdict(a: &Analysis, s: i64) -> Result<Verdict> {
    let (holds, detail) = if s <= 1 { (true, "vacuous".to_string()) } else { a.gs_detail(Some(s as usize))? };
    Ok(verdict(format!("G_{s}"), "check_Gs", holds, detail))
}

fn torsion_free_verdict(a: &Analysis) -> Verdict {
    let tf = a.notes.is_empty();
    verdict("torsion-free", "torsion_submodule", tf, if tf { "" } else { "torsion-free quotient substituted" })
}

fn orientable_verdict() -> Verdict {
    verdict("orientable", "is_orientable", true, "every finite module over a UFD")
}

fn rank_verdict(a: &Analysis) -> Verdict {
    verdict("rank e > 0", "rank", a.e() > 0, format!("e = {}", a.e()))
}

fn rank_one_verdict(a: &Analysis) -> Verdict {
    verdict("ideal (rank one)", "rank", a.e() == 1, format!("e = {}", a.e()))
}

fn bourbaki_verdict(a: &Analysis) -> Result<(Verdict, Option<Arc<BourbakiData>>)> {
    match a.bourbaki() {
        Ok(b) => {
            let detail = format!("seed {}, height {}", b.seed, fmt_opt(b.height));
            Ok((verdict("generic Bourbaki ideal exists", "bourbaki_construct", true, detail), Some(b)))
        }
        Err(Error::Genericity { seeds, reason }) => Ok((
            verdict("generic Bourbaki ideal exists", "bourbaki_construct", false, format!("{reason}; seeds {seeds:?}")),
            None,
        )),
        Err(Error::Hypothesis(m)) => {
            Ok((verdict("generic Bourbaki ideal exists", "bourbaki_construct", false, m), None))
        }
        Err(Error::RankZero) => Ok((verdict("generic Bourbaki ideal exists", "bourbaki_construct", false, "rank 0"), None)),
        Err(e) => Err(e),
    }
}

fn cm_verdict(a: &Analysis, name: &str) -> Result<Verdict> {
    let c = a.rees_cm()?;
    Ok(verdict(name, "rees_cm", c.is_cm, format!("pd {} vs {} - {}", c.pd, c.nvars, c.dim)))
}

fn lt_verdict(a: &Analysis) -> Result<Verdict> {
    Ok(verdict("E of linear type", "is_linear_type", a.is_linear_type()?, ""))
}

/// Evaluates a registry entry on an analysed module.
pub fn check_theorem(id: &str, a: &Analysis, p: &Params) -> Result<CheckReport> {
    let e = entry(id).ok_or_else(|| Error::InvalidInput(format!("unknown theorem id {id}")))?;
    match e.id {
        "P2.1" => p21(a),
        "P2.8" => p28(a),
        "T2.5" => t25(a),
        "T2.10" => t210(a, p),
        "T2.11" => t211(a),
        "T2.12" => t212(a),
        "T3.2" => t32(a),
        "P3.5" => p35(a, p),
        "P3.6" => p36(a),
        "T3.7" => t37(a),
        "L3.8" => l38(a, p),
        "T4.4" => t44(a, p),
        "C-d4" => cd4(a),
        "C-d5" => cd5(a),
        "C-LargeRed1" => large_red(a, 1),
        "C-LargeRed2" => large_red(a, 2),
        "T-IdealMod" => ideal_mod(a, p),
        "T-HerLinType" => her_lin_type(a),
        _ => unreachable!(),
    }
}

fn p21(a: &Analysis) -> Result<CheckReport> {
    let mut b = Builder::new(a, "P2.1");
    b.hyp(verdict("d > 0", "rank", a.d() > 0, format!("d = {}", a.d())));
    b.hyp(rank_verdict(a));
    if b.ok() {
        let (d, e, mu, l) = (a.d(), a.e(), a.mu(), a.ell()?);
        b.concl(verdict("l(E) <= mu(E)", "minimal_generators", l <= mu, format!("l = {l}, mu = {mu}")));
        b.concl(verdict("e <= l(E) <= d + e - 1", "special_fiber_dim", e <= l && l < d + e, format!("l = {l}")));
        let r = a.reduction_number()?;
        b.concl(verdict(
            "l(E) general elements form a reduction",
            "reduction_number",
            r.is_some(),
            format!("r = {}", fmt_opt(r)),
        ));
        let dim = a.rees_cm()?.dim;
        b.concl(verdict("dim R(E) = d + e", "rees_cm", dim == d + e, format!("dim = {dim}")));
    }
    Ok(b.finish())
}

fn p28(a: &Analysis) -> Result<CheckReport> {
    let mut b = Builder::new(a, "P2.8");
    let (v, bd) = bourbaki_verdict(a)?;
    b.hyp(v);
    if let Some(bd) = bd {
        let le = a.ell()?;
        match a.ideal_rees()? {
            None => {
                b.concl(verdict("l(I) = l(E) - e + 1", "special_fiber_dim", le == a.e(), "free module: I = R"));
            }
            Some(pi) => {
                let li = pi.analytic_spread()?;
                b.concl(verdict(
                    "l(I) = l(E) - e + 1",
                    "special_fiber_dim",
                    li + bd.rank == le + 1,
                    format!("l(I) = {li}, l(E) = {le}, e = {}", bd.rank),
                ));
                let seeds: Vec<u64> = (0..REDUCTION_SEEDS).map(|i| a.seed.wrapping_add(i)).collect();
                let ri = pi.reduction_number(&seeds).ok().map(|d| d.r);
                let re = a.reduction_number()?;
                let ok = match (ri, re) {
                    (Some(x), Some(y)) => x <= y,
                    (_, None) => true,
                    (None, Some(_)) => false,
                };
                b.concl(verdict(
                    "r(I) <= r(E)",
                    "reduction_number",
                    ok,
                    format!("r(I) = {}, r(E) = {}", fmt_opt(ri), fmt_opt(re)),
                ));
            }
        }
        b.note("reduction numbers are sampled with general forms");
    }
    Ok(b.finish())
}

fn t25(a: &Analysis) -> Result<CheckReport> {
    let mut b = Builder::new(a, "T2.5");
    b.hyp(rank_verdict(a));
    b.hyp(torsion_free_verdict(a));
    if b.ok() {
        let f = a.module.fitting_ideal(a.e())?;
        b.hyp(verdict(
            "free in codimension one",
            "fitting_ideal",
            f.height_at_least(2)?,
            format!("ht Fitt_e = {}", fmt_opt(f.height()?)),
        ));
    }
    let bd = if b.ok() {
        let (v, bd) = bourbaki_verdict(a)?;
        b.hyp(v);
        bd
    } else {
        None
    };
    if let Some(bd) = bd {
        let cme = a.rees_cm()?.is_cm;
        let (cmi, lti) = match a.ideal_rees()? {
            Some(pi) => (pi.rees_cm()?.is_cm, pi.is_linear_type()?),
            None => (true, true),
        };
        b.concl(verdict("CM R(E) iff CM R(I)", "rees_cm", cme == cmi, format!("R(E): {cme}, R(I): {cmi}")));
        let grade = a.grade_plus()?;
        let e = bd.rank;
        if grade >= e {
            let d = a.deformation()?;
            let ok = d.torsion_free && d.cross_check != Some(false);
            b.concl(verdict(
                "grade R(E)_+ >= e implies R(I) = R(E)/(F)",
                "rees_deformation_check",
                ok,
                format!("grade {grade}, torsion-free {}, cross-check {:?}", d.torsion_free, d.cross_check),
            ));
        } else {
            b.concl(verdict(
                "grade R(E)_+ >= e implies R(I) = R(E)/(F)",
                "grade_rees_plus",
                true,
                format!("grade {grade} < e = {e}: vacuous"),
            ));
        }
        let lte = a.is_linear_type()?;
        b.concl(verdict(
            "E linear type with grade >= e iff I linear type",
            "is_linear_type",
            (lte && grade >= e) == lti,
            format!("E: {lte}, grade {grade}, I: {lti}"),
        ));
        b.note("I is sampled with seeded scalars in place of the generic extension");
    }
    Ok(b.finish())
}

/// Ideal-shaped entries: `E` of rank one realized as an ideal `I` of height `g`.
fn ideal_shape(b: &mut Builder) -> Result<Option<(usize, usize)>> {
    let a = b.a;
    if !b.hyp(rank_one_verdict(a)) || !b.hyp(torsion_free_verdict(a)) {
        return Ok(None);
    }
    let (v, bd) = bourbaki_verdict(a)?;
    b.hyp(v);
    let Some(bd) = bd else { return Ok(None) };
    let g = bd.height.unwrap_or(a.d() + 1);
    b.hyp(verdict("ht I >= 1", "bourbaki_construct", bd.height.is_some(), format!("g = {}", fmt_opt(bd.height))));
    Ok(Some((g, a.ell()?)))
}

fn t210(a: &Analysis, p: &Params) -> Result<CheckReport> {
    let mut b = Builder::new(a, "T2.10");
    if let Some((g, l)) = ideal_shape(&mut b)? {
        if b.ok() {
            let s = p.s.unwrap_or(l.max(g));
            let d = a.d() as i64;
            b.hyp(verdict("s >= g", "rank", s >= g, format!("s = {s}, g = {g}")));
            let gv = gs_verdict(a, s as i64)?;
            b.hyp(gv);
            let (ok, det) = depth_range(a, 1, (s - g + 1) as i64, |j| d - g as i64 - j + 2)?;
            b.hyp(verdict("depth I^j >= d - g - j + 2, 1 <= j <= s - g + 1", "depth_and_pd", ok, det));
            if b.ok() {
                let i = a.bourbaki()?.ideal().unwrap().clone();
                let rep = check_an(&i, s, p.trials.unwrap_or(2), a.seed, false)?;
                b.concl(verdict(
                    format!("AN_{s}"),
                    "check_AN",
                    rep.verdict,
                    format!("{} samples, {} improper", rep.samples.len(), rep.skipped),
                ));
                b.note("residual intersections are sampled from general elements");
            }
        }
    }
    Ok(b.finish())
}

fn t211(a: &Analysis) -> Result<CheckReport> {
    let mut b = Builder::new(a, "T2.11");
    if let Some((g, l)) = ideal_shape(&mut b)? {
        if b.ok() {
            let d = a.d() as i64;
            let gv = gs_verdict(a, l as i64 + 1)?;
            b.hyp(gv);
            let (ok, det) = depth_range(a, 1, l as i64 - g as i64, |j| d - g as i64 - j + 2)?;
            b.hyp(verdict("depth I^j >= d - g - j + 2, 1 <= j <= l - g", "depth_and_pd", ok, det));
            if b.ok() {
                let v = lt_verdict(a)?;
                b.concl(v);
                let v = cm_verdict(a, "R(I) Cohen-Macaulay")?;
                b.concl(v);
            }
        }
    }
    Ok(b.finish())
}

fn t212(a: &Analysis) -> Result<CheckReport> {
    let mut b = Builder::new(a, "T2.12");
    if let Some((g, l)) = ideal_shape(&mut b)? {
        if b.ok() {
            let d = a.d() as i64;
            let gv = gs_verdict(a, l as i64 + 1)?;
            b.hyp(gv);
            let hi = (l as i64 - g as i64).min(d - g as i64 - 1);
            let (ok, det) = range_all(1, hi, |j| {
                let v = a.ext_vanishes(g + j - 1, j)?;
                Ok((v, format!("Ext^{}(I^{j}, R) = 0: {v}", g + j - 1)))
            })?;
            b.hyp(verdict("Ext^{g+j-1}(I^j, R) = 0", "ext_module", ok, det));
            if b.ok() {
                let v = lt_verdict(a)?;
                b.concl(v);
            }
        }
    }
    Ok(b.finish())
}

/// `Ext^{j+1}(E^j, R) = 0` for `lo <= j <= hi`.
fn ext_range(a: &Analysis, lo: i64, hi: i64) -> Result<(bool, String)> {
    range_all(lo, hi, |j| {
        let v = a.ext_vanishes(j + 1, j)?;
        Ok((v, format!("Ext^{}(E^{j}, R) = 0: {v}", j + 1)))
    })
}

fn t32(a: &Analysis) -> Result<CheckReport> {
    let mut b = Builder::new(a, "T3.2");
    b.hyp(torsion_free_verdict(a));
    b.hyp(rank_verdict(a));
    b.hyp(orientable_verdict());
    if b.ok() {
        let (d, e, l) = (a.d() as i64, a.e() as i64, a.ell()? as i64);
        let gv = gs_verdict(a, l - e + 2)?;
        b.hyp(gv);
        let (ok, det) = ext_range(a, 1, (l - e - 1).min(d - 3))?;
        b.hyp(verdict("Ext^{j+1}(E^j, R) = 0, 1 <= j <= min(l - e - 1, d - 3)", "ext_module", ok, det));
        if b.ok() {
            let v = lt_verdict(a)?;
            b.concl(v);
            let (bv, bd) = bourbaki_verdict(a)?;
            match bd {
                None => b.concl(bv),
                Some(bd) => {
                    let lt = match &bd.ideal {
                        BourbakiIdeal::Free => true,
                        BourbakiIdeal::Proper(_) => a.ideal_rees()?.unwrap().is_linear_type()?,
                    };
                    b.concl(verdict("E/F is an ideal of linear type", "bourbaki_construct", lt, ""));
                }
            }
        }
    }
    Ok(b.finish())
}

fn p35(a: &Analysis, p: &Params) -> Result<CheckReport> {
    let mut b = Builder::new(a, "P3.5");
    b.hyp(torsion_free_verdict(a));
    b.hyp(rank_verdict(a));
    if b.ok() {
        let pd = a.module.pd()?;
        b.hyp(verdict("pd E = 1", "depth_and_pd", pd == 1, format!("pd = {pd}")));
        let (e, l) = (a.e() as i64, a.ell()? as i64);
        let gv = gs_verdict(a, l - e + 2)?;
        b.hyp(gv);
        if b.ok() {
            b.concl(verdict(
                "mu(E) = l(E)",
                "minimal_generators",
                a.mu() as i64 == l,
                format!("mu = {}, l = {l}", a.mu()),
            ));
            let (ok, det) = ext_range(a, 1, p.max_j.unwrap_or(3) as i64)?;
            b.concl(verdict("Ext^{j+1}(E^j, R) = 0", "ext_module", ok, det));
        }
    }
    Ok(b.finish())
}

/// Whether every nonzero Koszul homology module of the minimal generators is Cohen-Macaulay.
pub fn strongly_cm(i: &IdealData) -> Result<bool> {
    let gens = i.minimal_generators()?;
    for j in 0..=gens.len() {
        let h = koszul_homology(i.ring(), &gens, j)?;
        if !h.is_cohen_macaulay()? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn p36(a: &Analysis) -> Result<CheckReport> {
    let mut b = Builder::new(a, "P3.6");
    let Some(split) = a.split.clone() else {
        b.hyp(verdict("E = I + F with F free", "rank", false, "module not given as a split sum"));
        return Ok(b.finish());
    };
    b.hyp(verdict("rank F > 0", "rank", split.free_rank > 0, format!("rank F = {}", split.free_rank)));
    let i = &split.ideal;
    let ht = i.height()?;
    b.hyp(verdict("ht I = 2", "rank", ht == Some(2), format!("ht = {}", fmt_opt(ht))));
    if !b.ok() {
        return Ok(b.finish());
    }
    b.hyp(verdict("I strongly Cohen-Macaulay", "koszul_homology", strongly_cm(i)?, ""));
    let ia = Analysis::new(&format!("{} (ideal)", a.label), &PModule::from_ideal(i)?, a.seed)?;
    let li = ia.ell()?;
    let gv = gs_verdict(&ia, li as i64 + 1)?;
    b.hyp(Verdict { name: format!("I satisfies {}", gv.name), ..gv });
    if b.ok() {
        let (e, le) = (a.e(), a.ell()?);
        b.concl(verdict("l(E) = l(I) + e - 1", "special_fiber_dim", le + 1 == li + e, format!("l(E) = {le}, l(I) = {li}")));
        let s = le as i64 - e as i64 + 2;
        let gv = gs_verdict(a, s)?;
        b.concl(Verdict { name: format!("E satisfies {}", gv.name), ..gv });
        let (ok, det) = ext_range(a, 1, le as i64 - e as i64 + 1)?;
        b.concl(verdict("Ext^{j+1}(E^j, R) = 0, 1 <= j <= l(E) - e + 1", "ext_module", ok, det));
        b.note("G-condition on E read as G_{l(E)-e+2}");
    }
    Ok(b.finish())
}

/// Rees package of a submodule `E ⊆ M` saturated at `g h`, where `M_g` is free
/// and `h` is a lowest-degree element of `ann(M/E)`; falls back to a minor of `E`.
pub fn submodule_rees(m: &PModule, sub: &PModule, quot: &PModule) -> Result<ReesPackage> {
    let sub = sub.minimize()?;
    let h = quot.annihilator()?.groebner_basis()?.into_iter().filter(|p| !p.is_zero()).min_by_key(|p| p.degree());
    let (_, w) = m.relations().rank_with_witness(0);
    match (h, w) {
        (Some(h), Some((_, _, g))) => ReesPackage::with_witness(&sub, &g * &h, vec![]),
        (Some(h), None) if m.num_relations() == 0 => ReesPackage::with_witness(&sub, h, vec![]),
        _ => ReesPackage::from_presentation(&sub, vec![]),
    }
}

/// Submodule of `M` generated by `count` general elements of `mM`, and `M/E`.
pub fn general_submodule(m: &PModule, count: usize, seed: u64) -> Result<(PModule, PModule)> {
    let ring = m.ring();
    let degs = m.gen_degrees().to_vec();
    let top = degs.iter().copied().max().unwrap_or(0) + 1;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cols: Vec<Vec<Poly>> = (0..count).map(|_| general_coefficients_to(ring, &degs, top, &mut rng)).collect();
    let mut w = PolyMatrix::from_columns(ring, degs.clone(), cols);
    w.set_col_degs(vec![top; count]);
    let e = subquotient(&w, m.relations())?;
    let quot = PModule::new(m.relations().hcat(&w));
    Ok((e, quot))
}

fn t37(a: &Analysis) -> Result<CheckReport> {
    let mut b = Builder::new(a, "T3.7");
    b.hyp(torsion_free_verdict(a));
    b.hyp(rank_verdict(a));
    if !b.ok() {
        return Ok(b.finish());
    }
    let (d, e, l) = (a.d() as i64, a.e() as i64, a.ell()? as i64);
    let gv = gs_verdict(a, l - e + 2)?;
    b.hyp(Verdict { name: format!("M satisfies {}", gv.name), ..gv });
    let (ok, det) = ext_range(a, 1, (l - e - 1).min(d - 3))?;
    b.hyp(verdict("Ext^{j+1}(M^j, R) = 0, 1 <= j <= min(l - e - 1, d - 3)", "ext_module", ok, det));
    if !b.ok() {
        return Ok(b.finish());
    }
    let top = l == d + e - 1;
    let count = if top { l } else { l + 1 } as usize;
    let (sub, quot) = general_submodule(&a.module, count, a.seed)?;
    b.hyp(orientable_verdict());
    let dim = quot.dimension()?;
    let bound = (d - l + e - 2).max(0);
    b.hyp(verdict(
        "dim M/E <= max(d - l + e - 2, 0)",
        "module_dimension",
        dim.map(|x| x as i64 <= bound).unwrap_or(true),
        format!("dim = {}, bound {bound}, {count} general elements", dim.map(|x| x.to_string()).unwrap_or("-".into())),
    ));
    if top {
        let mu = sub.num_generators()? as i64;
        b.hyp(verdict("mu(E) <= l", "minimal_generators", mu <= l, format!("mu(E) = {mu}")));
    }
    if b.ok() {
        let lt = submodule_rees(&a.module, &sub, &quot)?.is_linear_type()?;
        b.concl(verdict("E of linear type", "is_linear_type", lt, ""));
    }
    Ok(b.finish())
}

fn l38(a: &Analysis, p: &Params) -> Result<CheckReport> {
    let mut b = Builder::new(a, "L3.8");
    b.hyp(torsion_free_verdict(a));
    b.hyp(rank_verdict(a));
    let s = p.s.unwrap_or(2);
    b.hyp(verdict("s >= 2", "rank", s >= 2, format!("s = {s}")));
    if !b.ok() {
        return Ok(b.finish());
    }
    let gv = gs_verdict(a, s as i64)?;
    b.hyp(gv);
    if b.ok() {
        let (_, quot) = general_submodule(&a.module, s + a.e() - 1, a.seed)?;
        let dim = quot.dimension()?;
        let bound = a.d() as i64 - s as i64;
        b.concl(verdict(
            "dim M/E <= d - s",
            "module_dimension",
            dim.map(|x| x as i64 <= bound).unwrap_or(true),
            format!("dim = {}, bound {bound}", dim.map(|x| x.to_string()).unwrap_or("-".into())),
        ));
    }
    Ok(b.finish())
}

/// Hypotheses of the depth criterion for a given `k`, appended to `b`.
fn t44_hypotheses(b: &mut Builder, k: i64) -> Result<()> {
    let a = b.a;
    let (d, e, l) = (a.d() as i64, a.e() as i64, a.ell()? as i64);
    let gv = gs_verdict(a, l - e + 1)?;
    b.hyp(gv);
    let r = a.reduction_number()?;
    let kr = 1 <= k && k <= l - e;
    b.hyp(verdict(
        "r(E) <= k, 1 <= k <= l - e",
        "reduction_number",
        kr && r.map(|r| r as i64 <= k).unwrap_or(false),
        format!("r = {}, k = {k}, l - e = {}", fmt_opt(r), l - e),
    ));
    if !b.ok() {
        return Ok(());
    }
    let g = match a.g()? {
        Some(g) => g as i64,
        None => {
            b.hyp(verdict("E not free", "bourbaki_construct", false, "free module"));
            return Ok(());
        }
    };
    let (ok1, det1) = depth_range(a, 1, l - e - k - g + 1, |j| d - g - j + 2)?;
    b.hyp(verdict("depth E^j >= d - g - j + 2 (lower range)", "depth_and_pd", ok1, det1));
    let (ok2, det2) = depth_range(a, l - e - k - g + 2, k, |j| d - l + e + k - j)?;
    b.hyp(verdict("depth E^j >= d - l + e + k - j (upper range)", "depth_and_pd", ok2, det2));
    if g == 2 {
        let pkg = a.rees()?;
        let codim = (l - e).max(0) as usize;
        let (ok, det) = range_all((l - e - k).max(0), l - e - 3, |j| {
            let v = ext_vanishing_locus_check(&pkg, j, codim)?;
            Ok((v, format!("{v}")))
        })?;
        b.hyp(verdict("Ext^{j+1}(E_p^j, R_p) = 0 on the non-free locus in codim l - e", "ext_vanishing_locus_check", ok, det));
    } else {
        b.hyp(verdict("Ext condition when g = 2", "ext_vanishing_locus_check", true, format!("g = {g}: vacuous")));
    }
    Ok(())
}

fn default_k(a: &Analysis) -> Result<i64> {
    let (e, l) = (a.e() as i64, a.ell()? as i64);
    let r = a.reduction_number()?.map(|r| r as i64).unwrap_or(l - e);
    Ok(r.clamp(1, (l - e).max(1)))
}

fn t44(a: &Analysis, p: &Params) -> Result<CheckReport> {
    let mut b = Builder::new(a, "T4.4");
    b.hyp(torsion_free_verdict(a));
    b.hyp(rank_verdict(a));
    b.hyp(orientable_verdict());
    if b.ok() {
        let k = match p.k {
            Some(k) => k as i64,
            None => default_k(a)?,
        };
        b.note(format!("k = {k}"));
        t44_hypotheses(&mut b, k)?;
        if b.ok() {
            let v = cm_verdict(a, "R(E) Cohen-Macaulay")?;
            b.concl(v);
        }
    }
    Ok(b.finish())
}

/// Conclusion that the criterion's hypotheses hold with the substituted `k`.
fn implied_t44(b: &mut Builder, k: i64) -> Result<()> {
    let mut sub = Builder::new(b.a, "T4.4");
    t44_hypotheses(&mut sub, k)?;
    let failed: Vec<String> = sub.hyps.iter().filter(|v| !v.holds).map(|v| v.name.clone()).collect();
    b.concl(verdict(
        format!("hypotheses of T4.4 hold with k = {k}"),
        "registry",
        failed.is_empty(),
        if failed.is_empty() { String::new() } else { format!("failing: {}", failed.join(", ")) },
    ));
    Ok(())
}

fn corollary_common(b: &mut Builder) -> Result<Option<(i64, i64, i64, Option<i64>)>> {
    let a = b.a;
    b.hyp(torsion_free_verdict(a));
    b.hyp(rank_verdict(a));
    b.hyp(orientable_verdict());
    if !b.ok() {
        return Ok(None);
    }
    let (d, e, l) = (a.d() as i64, a.e() as i64, a.ell()? as i64);
    let gv = gs_verdict(a, l - e + 1)?;
    b.hyp(gv);
    let r = a.reduction_number()?.map(|r| r as i64);
    Ok(Some((d, e, l, r)))
}

fn depth1(a: &Analysis) -> Result<i64> {
    Ok(a.depth_power(1)?.map(|x| x as i64).unwrap_or(i64::MAX))
}

fn cd4(a: &Analysis) -> Result<CheckReport> {
    let mut b = Builder::new(a, "C-d4");
    let Some((d, e, l, r)) = corollary_common(&mut b)? else { return Ok(b.finish()) };
    b.hyp(verdict("d = 4", "rank", d == 4, format!("d = {d}")));
    let r = r.unwrap_or(i64::MAX);
    b.hyp(verdict("r(E) <= l - e", "reduction_number", r <= l - e, format!("r = {r}, l - e = {}", l - e)));
    if !b.ok() {
        return Ok(b.finish());
    }
    let de = l - e;
    let dep = depth1(a)?;
    let (case, ok, cited) = if r == 1 && 1 < de {
        ("(a) r = 1 < l - e, depth E >= 2", dep >= 2, de == 3)
    } else if r == 1 && de == 1 {
        ("(a) r = 1 = l - e, depth E >= 3", dep >= 3, false)
    } else if r == 2 && 2 < de {
        ("(b) r = 2 < l - e, depth E >= 2", dep >= 2, true)
    } else if r == 2 && de == 2 {
        let (ok, _) = depth_range(a, 1, 2, |j| 4 - j)?;
        ("(b) r = 2 = l - e, depth E^j >= 4 - j", ok, false)
    } else if r == 3 {
        let (ok, _) = depth_range(a, 1, 3, |j| 4 - j)?;
        ("(c) r = 3, depth E^j >= 4 - j", ok, false)
    } else {
        ("no case applies", false, false)
    };
    b.hyp(verdict(case, "depth_and_pd", ok, format!("depth E = {dep}")));
    if b.ok() {
        if cited {
            b.note("case with l - e = 3 and r <= 2 rests on G_d and an external criterion; T4.4 implication not asserted");
        } else {
            implied_t44(&mut b, r)?;
        }
        let v = cm_verdict(a, "R(E) Cohen-Macaulay")?;
        b.concl(v);
    }
    Ok(b.finish())
}

fn cd5(a: &Analysis) -> Result<CheckReport> {
    let mut b = Builder::new(a, "C-d5");
    let Some((d, e, l, r)) = corollary_common(&mut b)? else { return Ok(b.finish()) };
    b.hyp(verdict("d = 5", "rank", d == 5, format!("d = {d}")));
    let Some(r) = r else {
        b.hyp(verdict("reduction number found", "reduction_number", false, "cap exceeded"));
        return Ok(b.finish());
    };
    if !b.ok() {
        return Ok(b.finish());
    }
    let de = l - e;
    let g = a.g()?.map(|g| g as i64);
    let dep = depth1(a)?;
    let pkg = a.rees()?;
    let (case, ok, cited) = if de == 4 && r <= 2 {
        ("(a) l - e = 4, r <= 2, depth E >= 4", dep >= 4, true)
    } else if de == 4 && r >= 3 {
        let (mut ok, _) = depth_range(a, 1, r, |j| r + 1 - j)?;
        if ok && g == Some(2) {
            ok = ext_vanishing_locus_check(&pkg, 1, 4)?;
        }
        ("(b) l - e = 4, r >= 3, depth E^j >= r + 1 - j", ok, false)
    } else if r == de && de <= 3 {
        let (ok, _) = depth_range(a, 1, r, |j| 5 - j)?;
        ("(c) r = l - e <= 3, depth E^j >= 5 - j", ok, false)
    } else if r == de - 1 && r <= 2 {
        let (ok, _) = depth_range(a, 1, r, |j| 4 - j)?;
        ("(d) r = l - e - 1 <= 2, depth E^j >= 4 - j", ok, false)
    } else if de == 3 && r == 1 {
        let need = if g == Some(2) { 4 } else { 2 };
        ("(e) l - e = 3, r = 1", dep >= need, false)
    } else {
        ("no case applies", false, false)
    };
    b.hyp(verdict(case, "depth_and_pd", ok, format!("depth E = {dep}, g = {}", g.map(|x| x.to_string()).unwrap_or("-".into()))));
    if b.ok() {
        if cited || r < 1 {
            b.note("case not routed through T4.4; implication not asserted");
        } else {
            implied_t44(&mut b, r)?;
        }
        let v = cm_verdict(a, "R(E) Cohen-Macaulay")?;
        b.concl(v);
    }
    Ok(b.finish())
}

fn large_red(a: &Analysis, which: i64) -> Result<CheckReport> {
    let id = if which == 1 { "C-LargeRed1" } else { "C-LargeRed2" };
    let mut b = Builder::new(a, id);
    let Some((d, e, l, r)) = corollary_common(&mut b)? else { return Ok(b.finish()) };
    b.hyp(verdict("l - e + 1 >= 2", "special_fiber_dim", l - e + 1 >= 2, format!("l = {l}, e = {e}")));
    if !b.ok() {
        return Ok(b.finish());
    }
    let Some(g) = a.g()?.map(|g| g as i64) else {
        b.hyp(verdict("E not free", "bourbaki_construct", false, "free module"));
        return Ok(b.finish());
    };
    let k = l - e - g + which;
    let r = r.unwrap_or(i64::MAX);
    b.hyp(verdict(format!("r(E) <= l - e - g + {which}"), "reduction_number", r <= k, format!("r = {r}, bound {k}")));
    let (ok, det) = depth_range(a, 1, k, |j| d - g - j + which)?;
    b.hyp(verdict(format!("depth E^j >= d - g - j + {which}"), "depth_and_pd", ok, det));
    if which == 1 && g == 2 {
        let pkg = a.rees()?;
        let (ok, det) = range_all(1, l - e - 3, |j| {
            let v = ext_vanishing_locus_check(&pkg, j, (l - e) as usize)?;
            Ok((v, format!("{v}")))
        })?;
        b.hyp(verdict("Ext^{j+1}(E_p^j, R_p) = 0 on the non-free locus in codim l - e", "ext_vanishing_locus_check", ok, det));
    }
    if b.ok() {
        if k >= 1 && k <= l - e {
            implied_t44(&mut b, k)?;
        } else {
            b.note(format!("substituted k = {k} lies outside [1, l - e]; T4.4 implication not asserted"));
        }
        let v = cm_verdict(a, "R(E) Cohen-Macaulay")?;
        b.concl(v);
    }
    Ok(b.finish())
}

fn ideal_mod(a: &Analysis, p: &Params) -> Result<CheckReport> {
    let mut b = Builder::new(a, "T-IdealMod");
    b.hyp(rank_verdict(a));
    b.hyp(torsion_free_verdict(a));
    if !b.ok() {
        return Ok(b.finish());
    }
    b.hyp(verdict("ideal module", "is_ideal_module", is_ideal_module(&a.module)?, ""));
    let (d, e, l) = (a.d() as i64, a.e() as i64, a.ell()? as i64);
    let k = match p.k {
        Some(k) => k as i64,
        None => default_k(a)?,
    };
    b.note(format!("k = {k}"));
    let r = a.reduction_number()?;
    b.hyp(verdict(
        "r(E) <= k, 1 <= k <= l - e",
        "reduction_number",
        1 <= k && k <= l - e && r.map(|r| r as i64 <= k).unwrap_or(false),
        format!("r = {}, k = {k}", fmt_opt(r)),
    ));
    if !b.ok() {
        return Ok(b.finish());
    }
    let c = l - e - k.min(2);
    let f = a.module.fitting_ideal(a.e())?;
    b.hyp(verdict(
        format!("free locally in codimension {c}"),
        "fitting_ideal",
        f.height_at_least((c + 1).max(0) as usize)?,
        format!("ht Fitt_e = {}", fmt_opt(f.height()?)),
    ));
    let gv = gs_verdict(a, l - e + 1)?;
    b.hyp(gv);
    let (ok, det) = depth_range(a, 1, k, |j| d - l + e + k - j)?;
    b.hyp(verdict("depth E^j >= d - l + e + k - j", "depth_and_pd", ok, det));
    if b.ok() {
        let v = cm_verdict(a, "R(E) Cohen-Macaulay")?;
        b.concl(v);
    }
    Ok(b.finish())
}

fn her_lin_type(a: &Analysis) -> Result<CheckReport> {
    let mut b = Builder::new(a, "T-HerLinType");
    b.hyp(torsion_free_verdict(a));
    b.hyp(rank_verdict(a));
    b.hyp(orientable_verdict());
    if b.ok() {
        let (d, e, l) = (a.d() as i64, a.e() as i64, a.ell()? as i64);
        let gv = gs_verdict(a, l - e + 2)?;
        b.hyp(gv);
        let (ok, det) = depth_range(a, 1, l - e - 1, |j| d - j)?;
        b.hyp(verdict("depth E^j >= d - j, 1 <= j <= l - e - 1", "depth_and_pd", ok, det));
        if b.ok() {
            let v = lt_verdict(a)?;
            b.concl(v);
            let v = cm_verdict(a, "R(E) Cohen-Macaulay")?;
            b.concl(v);
        }
    }
    Ok(b.finish())
}

/// Sizes for [`check_prop_generators`].
#[derive(Clone, Debug)]
pub struct GenParams {
    /// Number of variables of the base ring.
    pub nvars: usize,
    /// Shape of the seeded presentation matrix (generators × relations).
    pub rows: usize,
    pub cols: usize,
    /// Free summands added to the height-two ideal.
    pub free_rank: usize,
    /// Ambient module `M` for the submodule entries; `(x,y) ⊕ R(-1)` when absent.
    pub module: Option<PModule>,
    pub s: Option<usize>,
}

impl Default for GenParams {
    fn default() -> Self {
        GenParams { nvars: 3, rows: 3, cols: 2, free_rank: 1, module: None, s: None }
    }
}

fn var_names(n: usize) -> Vec<String> {
    const NAMES: [&str; 6] = ["x", "y", "z", "w", "v", "u"];
    (0..n).map(|i| if i < NAMES.len() { NAMES[i].to_string() } else { format!("x{i}") }).collect()
}

fn base_ring(n: usize) -> Result<crate::ring::PolyRing> {
    let names = var_names(n);
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    crate::ring::PolyRing::new(crate::field::FieldSpec::default(), &refs)
}

/// Ideal of maximal minors of a seeded `(c+1) × c` linear matrix, resampled until it has height two.
pub fn seeded_perfect_height2(r: &crate::ring::PolyRing, c: usize, seed: u64) -> Result<IdealData> {
    let mut tried = Vec::new();
    for t in 0..50u64 {
        let s = seed.wrapping_mul(104_729).wrapping_add(t);
        tried.push(s);
        let m = crate::gallery::random_linear_module(r, c + 1, c, s);
        let i = IdealData::new(r, m.relations().minors(c)?);
        if i.height()? == Some(2) && i.minimal_generators()?.len() == c + 1 {
            return Ok(i);
        }
    }
    Err(Error::Genericity { seeds: tried, reason: "no height-two ideal of maximal minors".into() })
}

/// Builds an instance of the example class of `id` and checks the entry on it.
pub fn check_prop_generators(id: &str, gp: &GenParams, seed: u64) -> Result<(PModule, CheckReport)> {
    let params = Params { s: gp.s, ..Params::default() };
    match id {
        "P3.5" => {
            let r = base_ring(gp.nvars)?;
            let (e, s) = crate::gallery::sample_pd1_module(&r, gp.rows, gp.cols, seed, 100)?;
            let a = Analysis::new(&format!("pd-1 {}x{} sample {s}", gp.rows, gp.cols), &e, seed)?;
            Ok((e, check_theorem(id, &a, &params)?))
        }
        "P3.6" => {
            let r = base_ring(gp.nvars)?;
            let i = seeded_perfect_height2(&r, gp.cols, seed)?;
            let deg = i.gens().iter().filter_map(|g| g.degree()).max().unwrap_or(0) as i64;
            let mut e = PModule::from_ideal(&i)?;
            for _ in 0..gp.free_rank {
                e = e.direct_sum(&PModule::free(&r, vec![deg]));
            }
            let split = Split { ideal: i, free_rank: gp.free_rank };
            let a = Analysis::new("height-two perfect ideal plus free", &e, seed)?.with_split(split);
            Ok((e, check_theorem(id, &a, &params)?))
        }
        "T3.7" | "L3.8" => {
            let m = match &gp.module {
                Some(m) => m.clone(),
                None => {
                    let r = base_ring(2)?;
                    let i = IdealData::new(&r, vec![Poly::var(&r, 0), Poly::var(&r, 1)]);
                    PModule::from_ideal(&i)?.direct_sum(&PModule::free(&r, vec![1]))
                }
            };
            let a = Analysis::new("ambient module", &m, seed)?;
            Ok((m, check_theorem(id, &a, &params)?))
        }
        _ => Err(Error::InvalidInput(format!("{id} has no example generator"))),
    }
}
