//! Gröbner bases for submodules of graded free modules. Ideals are the rank-one case.

mod engine;

use std::cmp::Ordering;

use crate::field::{Coeff, FieldSpec};
use crate::monomial::Monomial;
use crate::poly::Poly;
use crate::ring::PolyRing;

pub(crate) use engine::{buchberger, criterion_holds, Reducer};

/// One term `coeff * mono * e_comp` of a module element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VTerm {
    pub comp: u32,
    pub mono: Monomial,
    pub coeff: Coeff,
}

/// Module element as terms sorted decreasingly in a [`VecOrder`].
pub type Vector = Vec<VTerm>;

/// How components are interleaved with monomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ModOrder {
    /// Position over term: lower component index is more significant.
    Pot,
    /// Term over position, degrees including component shifts.
    Top,
}

/// Total order on module terms over a ring.
#[derive(Clone, Debug)]
pub struct VecOrder {
    pub ring: PolyRing,
    pub mode: ModOrder,
    pub shifts: Vec<i64>,
}

impl VecOrder {
    pub fn new(ring: &PolyRing, mode: ModOrder, shifts: Vec<i64>) -> VecOrder {
        VecOrder { ring: ring.clone(), mode, shifts }
    }

    pub fn ideal(ring: &PolyRing) -> VecOrder {
        VecOrder::new(ring, ModOrder::Top, vec![0])
    }

    pub fn rank(&self) -> usize {
        self.shifts.len()
    }

    pub fn field(&self) -> FieldSpec {
        self.ring.field()
    }

    #[inline]
    pub fn shift(&self, comp: u32) -> i64 {
        self.shifts[comp as usize]
    }

    #[inline]
    pub fn degree(&self, comp: u32, m: &Monomial) -> i64 {
        m.deg() as i64 + self.shift(comp)
    }

    #[inline]
    pub fn cmp(&self, ac: u32, am: &Monomial, bc: u32, bm: &Monomial) -> Ordering {
        match self.mode {
            ModOrder::Pot => bc.cmp(&ac).then_with(|| self.ring.cmp_monomials(am, bm)),
            ModOrder::Top => {
                let first = if self.ring.order().is_degree_compatible() {
                    self.degree(ac, am).cmp(&self.degree(bc, bm))
                } else {
                    Ordering::Equal
                };
                first
                    .then_with(|| self.ring.cmp_monomials(am, bm))
                    .then_with(|| bc.cmp(&ac))
            }
        }
    }

    #[inline]
    pub fn cmp_terms(&self, a: &VTerm, b: &VTerm) -> Ordering {
        self.cmp(a.comp, &a.mono, b.comp, &b.mono)
    }

    /// Sorts, merges like terms and drops zeros.
    pub fn normalize(&self, mut v: Vec<VTerm>) -> Vector {
        let f = self.field();
        v.sort_by(|a, b| self.cmp_terms(b, a));
        let mut out: Vector = Vec::with_capacity(v.len());
        for t in v {
            if let Some(last) = out.last_mut() {
                if last.comp == t.comp && last.mono == t.mono {
                    last.coeff = f.add(&last.coeff, &t.coeff);
                    continue;
                }
            }
            out.push(t);
        }
        out.retain(|t| !f.is_zero(&t.coeff));
        out
    }

    /// Builds the vector with entries `polys[i]` in component `i`.
    pub fn from_polys(&self, polys: &[Poly]) -> Vector {
        let mut v = Vec::new();
        for (i, p) in polys.iter().enumerate() {
            for (m, c) in p.terms() {
                v.push(VTerm { comp: i as u32, mono: m.clone(), coeff: c.clone() });
            }
        }
        self.normalize(v)
    }

    /// Splits a vector into its component polynomials (length = rank).
    pub fn to_polys(&self, v: &[VTerm]) -> Vec<Poly> {
        let mut parts: Vec<Vec<(Monomial, Coeff)>> = vec![Vec::new(); self.rank()];
        for t in v {
            parts[t.comp as usize].push((t.mono.clone(), t.coeff.clone()));
        }
        parts.into_iter().map(|terms| Poly::from_terms(&self.ring, terms)).collect()
    }

    /// `a - c * m * b` for vectors sorted in this order.
    pub fn sub_mul(&self, a: &[VTerm], c: &Coeff, m: &Monomial, b: &[VTerm]) -> Vector {
        let f = self.field();
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let mut pending: Option<VTerm> = None;
        loop {
            if pending.is_none() && j < b.len() {
                let t = &b[j];
                pending = Some(VTerm {
                    comp: t.comp,
                    mono: t.mono.mul(m),
                    coeff: f.neg(&f.mul(&t.coeff, c)),
                });
                j += 1;
            }
            match (i < a.len(), pending.as_ref()) {
                (false, None) => break,
                (true, None) => {
                    out.push(a[i].clone());
                    i += 1;
                }
                (false, Some(_)) => out.push(pending.take().unwrap()),
                (true, Some(p)) => match self.cmp(a[i].comp, &a[i].mono, p.comp, &p.mono) {
                    Ordering::Greater => {
                        out.push(a[i].clone());
                        i += 1;
                    }
                    Ordering::Less => out.push(pending.take().unwrap()),
                    Ordering::Equal => {
                        let p = pending.take().unwrap();
                        let s = f.add(&a[i].coeff, &p.coeff);
                        if !f.is_zero(&s) {
                            out.push(VTerm { comp: p.comp, mono: p.mono, coeff: s });
                        }
                        i += 1;
                    }
                },
            }
        }
        out
    }

    /// Scales to a monic lead.
    pub fn monic(&self, v: &mut Vector) {
        if let Some(t) = v.first() {
            let f = self.field();
            if f.is_one(&t.coeff) {
                return;
            }
            let inv = f.inv(&t.coeff);
            for t in v.iter_mut() {
                t.coeff = f.mul(&t.coeff, &inv);
            }
        }
    }

    /// Maximal shifted degree of a term.
    pub fn sugar(&self, v: &[VTerm]) -> i64 {
        v.iter().map(|t| self.degree(t.comp, &t.mono)).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self, v: &[VTerm]) -> bool {
        match v.first() {
            None => true,
            Some(t) => {
                let d = self.degree(t.comp, &t.mono);
                v.iter().all(|u| self.degree(u.comp, &u.mono) == d)
            }
        }
    }
}

/// A reduced Gröbner basis of a submodule together with its reducer.
pub struct ModuleGb {
    pub ord: VecOrder,
    pub basis: Vec<Vector>,
    reducer: Reducer,
}

impl ModuleGb {
    pub fn compute(ord: &VecOrder, gens: Vec<Vector>) -> crate::error::Result<ModuleGb> {
        let basis = buchberger(ord, gens)?;
        Ok(ModuleGb::from_basis(ord, basis))
    }

    /// Wraps a basis already known to be a reduced Gröbner basis.
    pub(crate) fn from_basis(ord: &VecOrder, basis: Vec<Vector>) -> ModuleGb {
        let reducer = Reducer::new(ord, &basis);
        ModuleGb { ord: ord.clone(), basis, reducer }
    }

    pub fn reduce(&self, v: Vector) -> Vector {
        self.reducer.reduce(&self.ord, v)
    }

    pub fn contains(&self, v: Vector) -> bool {
        self.reduce(v).is_empty()
    }

    /// Whether the lead term `m * e_comp` lies in the lead-term module.
    pub fn lead_divides(&self, comp: u32, m: &Monomial) -> bool {
        self.reducer.divides_term(comp, m)
    }

    /// Buchberger's criterion on the stored basis.
    pub fn criterion_holds(&self) -> bool {
        criterion_holds(&self.ord, &self.basis)
    }
}
