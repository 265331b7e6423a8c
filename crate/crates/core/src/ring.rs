use std::collections::HashMap;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::monomial::{Monomial, MonomialOrder};

/// Resource limits and self-check switches shared by a family of rings.
#[derive(Clone, Debug)]
pub struct Settings {
    /// Maximum number of S-pairs processed by one Gröbner computation.
    pub max_pairs: usize,
    /// Maximum size of an intermediate basis.
    pub max_basis: usize,
    /// Run post-checks (Buchberger criterion, resolution exactness, depth cross-check).
    pub verify: bool,
    /// Largest reduction number searched before giving up.
    pub reduction_cap: usize,
    /// Saturate by iterated quotients instead of an extra variable.
    pub iterated_saturation: bool,
    /// Degree bound for degreewise oracles.
    pub max_degree: usize,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            max_pairs: 2_000_000,
            max_basis: 200_000,
            verify: false,
            reduction_cap: 10,
            iterated_saturation: false,
            max_degree: 6,
        }
    }
}

/// Counters incremented by the kernel; read them through [`Context::snapshot`].
#[derive(Debug, Default)]
pub struct Stats {
    pub groebner_bases: AtomicU64,
    pub pairs: AtomicU64,
    pub criterion_checks: AtomicU64,
    pub criterion_failures: AtomicU64,
    pub resolutions: AtomicU64,
    pub depth_checks: AtomicU64,
    pub depth_failures: AtomicU64,
    pub exactness_checks: AtomicU64,
    pub exactness_failures: AtomicU64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct StatsSnapshot {
    pub groebner_bases: u64,
    pub pairs: u64,
    pub criterion_checks: u64,
    pub criterion_failures: u64,
    pub resolutions: u64,
    pub depth_checks: u64,
    pub depth_failures: u64,
    pub exactness_checks: u64,
    pub exactness_failures: u64,
}

#[derive(Debug, Default)]
pub struct Context {
    pub settings: Settings,
    pub stats: Stats,
}

impl Context {
    pub fn new(settings: Settings) -> Arc<Context> {
        Arc::new(Context { settings, stats: Stats::default() })
    }

    pub(crate) fn bump(&self, counter: &AtomicU64, by: u64) {
        counter.fetch_add(by, Ordering::Relaxed);
    }

    pub fn snapshot(&self) -> StatsSnapshot {
        let s = &self.stats;
        let g = |c: &AtomicU64| c.load(Ordering::Relaxed);
        StatsSnapshot {
            groebner_bases: g(&s.groebner_bases),
            pairs: g(&s.pairs),
            criterion_checks: g(&s.criterion_checks),
            criterion_failures: g(&s.criterion_failures),
            resolutions: g(&s.resolutions),
            depth_checks: g(&s.depth_checks),
            depth_failures: g(&s.depth_failures),
            exactness_checks: g(&s.exactness_checks),
            exactness_failures: g(&s.exactness_failures),
        }
    }
}

struct RingInner {
    field: FieldSpec,
    vars: Vec<String>,
    index: HashMap<String, usize>,
    order: MonomialOrder,
    weights: Vec<u32>,
    ctx: Arc<Context>,
}

/// Polynomial ring over a prime field or the rationals. Cheap to clone.
#[derive(Clone)]
pub struct PolyRing(Arc<RingInner>);

impl PolyRing {
    pub fn new(field: FieldSpec, vars: &[&str]) -> Result<PolyRing> {
        let vars: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        let n = vars.len();
        PolyRing::build(field, vars, MonomialOrder::Grevlex, vec![1; n], Context::new(Settings::default()))
    }

    pub fn build(
        field: FieldSpec,
        vars: Vec<String>,
        order: MonomialOrder,
        weights: Vec<u32>,
        ctx: Arc<Context>,
    ) -> Result<PolyRing> {
        let mut index = HashMap::new();
        for (i, v) in vars.iter().enumerate() {
            if !valid_name(v) {
                return Err(Error::InvalidInput(format!("invalid variable name `{v}`")));
            }
            if index.insert(v.clone(), i).is_some() {
                return Err(Error::InvalidInput(format!("duplicate variable `{v}`")));
            }
        }
        if weights.len() != vars.len() || weights.contains(&0) {
            return Err(Error::InvalidInput("weights must be positive, one per variable".into()));
        }
        if let MonomialOrder::Block(k) = order {
            if k > vars.len() {
                return Err(Error::InvalidInput(format!("block split {k} exceeds variable count")));
            }
        }
        Ok(PolyRing(Arc::new(RingInner { field, vars, index, order, weights, ctx })))
    }

    pub fn with_context(&self, ctx: Arc<Context>) -> PolyRing {
        let r = &self.0;
        PolyRing::build(r.field, r.vars.clone(), r.order, r.weights.clone(), ctx).unwrap()
    }

    pub fn field(&self) -> FieldSpec {
        self.0.field
    }
    pub fn vars(&self) -> &[String] {
        &self.0.vars
    }
    pub fn nvars(&self) -> usize {
        self.0.vars.len()
    }
    pub fn order(&self) -> MonomialOrder {
        self.0.order
    }
    pub fn weights(&self) -> &[u32] {
        &self.0.weights
    }
    pub fn context(&self) -> &Arc<Context> {
        &self.0.ctx
    }
    pub fn settings(&self) -> &Settings {
        &self.0.ctx.settings
    }
    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.index.get(name).copied()
    }

    /// Same variables and weights under another order, sharing the context.
    pub fn with_order(&self, order: MonomialOrder) -> Result<PolyRing> {
        let r = &self.0;
        PolyRing::build(r.field, r.vars.clone(), order, r.weights.clone(), r.ctx.clone())
    }

    /// Ring with `extra` variables appended (weights given), sharing the context.
    pub fn extend(&self, extra: &[String], extra_weights: &[u32], order: MonomialOrder) -> Result<PolyRing> {
        let r = &self.0;
        let mut vars = r.vars.clone();
        vars.extend(extra.iter().cloned());
        let mut w = r.weights.clone();
        w.extend_from_slice(extra_weights);
        PolyRing::build(r.field, vars, order, w, r.ctx.clone())
    }

    /// Ring with `extra` variables prepended, under the elimination order for them.
    pub fn prepend_eliminate(&self, extra: &[String], extra_weights: &[u32]) -> Result<PolyRing> {
        let r = &self.0;
        let mut vars: Vec<String> = extra.to_vec();
        vars.extend(r.vars.iter().cloned());
        let mut w = extra_weights.to_vec();
        w.extend_from_slice(&r.weights);
        PolyRing::build(r.field, vars, MonomialOrder::Block(extra.len()), w, r.ctx.clone())
    }

    /// A variable name not already used in this ring, derived from `base`.
    pub fn fresh_name(&self, base: &str) -> String {
        if self.var_index(base).is_none() {
            return base.to_string();
        }
        (0..).map(|i| format!("{base}_{i}")).find(|n| self.var_index(n).is_none()).unwrap()
    }

    pub fn same_as(&self, other: &PolyRing) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.field == other.0.field
                && self.0.vars == other.0.vars
                && self.0.order == other.0.order
                && self.0.weights == other.0.weights)
    }

    pub fn check_same(&self, other: &PolyRing) -> Result<()> {
        if self.same_as(other) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn one_monomial(&self) -> Monomial {
        Monomial::one(self.nvars())
    }

    pub fn var_monomial(&self, i: usize) -> Monomial {
        Monomial::var(self.nvars(), i, self.weights())
    }

    pub fn monomial(&self, exps: &[u16]) -> Monomial {
        Monomial::from_exps(exps, self.weights())
    }

    #[inline]
    pub fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> std::cmp::Ordering {
        a.cmp_with(b, self.0.order, &self.0.weights)
    }
}

fn valid_name(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl PartialEq for PolyRing {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl fmt::Debug for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]/{}", self.0.field, self.0.vars.join(","), self.0.order.name())
    }
}

impl fmt::Display for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.0.field, self.0.vars.join(","))
    }
}
