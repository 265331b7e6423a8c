use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::Coeff;
use crate::monomial::Monomial;
use crate::ring::PolyRing;

pub type Term = (Monomial, Coeff);

/// Sparse polynomial; terms are sorted decreasingly in the ring's order and
/// carry nonzero coefficients.
#[derive(Clone)]
pub struct Poly {
    ring: PolyRing,
    terms: Vec<Term>,
}

impl Poly {
    pub fn zero(ring: &PolyRing) -> Poly {
        Poly { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &PolyRing, c: Coeff) -> Poly {
        if ring.field().is_zero(&c) {
            return Poly::zero(ring);
        }
        Poly { ring: ring.clone(), terms: vec![(ring.one_monomial(), c)] }
    }

    pub fn from_i64(ring: &PolyRing, v: i64) -> Poly {
        Poly::constant(ring, ring.field().from_i64(v))
    }

    pub fn one(ring: &PolyRing) -> Poly {
        Poly::from_i64(ring, 1)
    }

    pub fn var(ring: &PolyRing, i: usize) -> Poly {
        Poly { ring: ring.clone(), terms: vec![(ring.var_monomial(i), ring.field().one())] }
    }

    pub fn var_named(ring: &PolyRing, name: &str) -> Result<Poly> {
        ring.var_index(name)
            .map(|i| Poly::var(ring, i))
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn term(ring: &PolyRing, m: Monomial, c: Coeff) -> Poly {
        Poly::from_terms(ring, vec![(m, c)])
    }

    /// Normalizes an arbitrary term list: sorts, merges like terms, drops zeros.
    pub fn from_terms(ring: &PolyRing, mut terms: Vec<Term>) -> Poly {
        let f = ring.field();
        terms.sort_by(|a, b| ring.cmp_monomials(&b.0, &a.0));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            if let Some(last) = out.last_mut() {
                if last.0 == m {
                    last.1 = f.add(&last.1, &c);
                    continue;
                }
            }
            out.push((m, c));
        }
        out.retain(|t| !f.is_zero(&t.1));
        Poly { ring: ring.clone(), terms: out }
    }

    /// Builds from terms already sorted, distinct and nonzero.
    pub(crate) fn from_sorted(ring: &PolyRing, terms: Vec<Term>) -> Poly {
        Poly { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }
    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    pub fn len(&self) -> usize {
        self.terms.len()
    }
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.0.is_one())
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        !self.is_zero() && self.is_constant()
    }

    pub fn lead_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }
    pub fn lead_coeff(&self) -> Option<&Coeff> {
        self.terms.first().map(|t| &t.1)
    }

    /// Maximal weighted degree of a term; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.deg()).max()
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.deg()).min()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(t) => self.terms.iter().all(|u| u.0.deg() == t.0.deg()),
        }
    }

    /// Degree in the variables with indices in `vars`.
    pub fn partial_degrees(&self, vars: &[usize]) -> Vec<u32> {
        self.terms
            .iter()
            .map(|t| vars.iter().map(|&i| t.0.exps()[i] as u32).sum())
            .collect()
    }

    /// The coefficient of `m` (zero if absent).
    pub fn coeff_of(&self, m: &Monomial) -> Coeff {
        self.terms
            .iter()
            .find(|t| &t.0 == m)
            .map(|t| t.1.clone())
            .unwrap_or_else(|| self.ring.field().zero())
    }

    pub fn constant_term(&self) -> Coeff {
        self.coeff_of(&self.ring.one_monomial())
    }

    pub fn try_add(&self, other: &Poly) -> Result<Poly> {
        self.ring.check_same(&other.ring)?;
        Ok(self.combine(other, false))
    }

    pub fn try_sub(&self, other: &Poly) -> Result<Poly> {
        self.ring.check_same(&other.ring)?;
        Ok(self.combine(other, true))
    }

    pub fn try_mul(&self, other: &Poly) -> Result<Poly> {
        self.ring.check_same(&other.ring)?;
        Ok(self.product(other))
    }

    fn combine(&self, other: &Poly, subtract: bool) -> Poly {
        let f = self.ring.field();
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match self.ring.cmp_monomials(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if subtract { f.neg(&b[j].1) } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if subtract { f.sub(&a[i].1, &b[j].1) } else { f.add(&a[i].1, &b[j].1) };
                    if !f.is_zero(&c) {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for t in &b[j..] {
            let c = if subtract { f.neg(&t.1) } else { t.1.clone() };
            out.push((t.0.clone(), c));
        }
        Poly { ring: self.ring.clone(), terms: out }
    }

    fn product(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(&self.ring);
        }
        let (small, big) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        if small.len() <= 4 {
            let mut acc = Poly::zero(&self.ring);
            for (m, c) in &small.terms {
                acc = acc.combine(&big.mul_term(m, c), false);
            }
            return acc;
        }
        let f = self.ring.field();
        let mut all = Vec::with_capacity(small.len() * big.len());
        for (m, c) in &small.terms {
            for (n, d) in &big.terms {
                all.push((m.mul(n), f.mul(c, d)));
            }
        }
        Poly::from_terms(&self.ring, all)
    }

    /// `c * m * self`; the monomial order is multiplicative so sortedness is kept.
    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> Poly {
        let f = self.ring.field();
        if f.is_zero(c) {
            return Poly::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(tm, tc)| (tm.mul(m), f.mul(tc, c))).collect();
        Poly { ring: self.ring.clone(), terms }
    }

    pub fn scale(&self, c: &Coeff) -> Poly {
        self.mul_term(&self.ring.one_monomial(), c)
    }

    pub fn neg(&self) -> Poly {
        let f = self.ring.field();
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), f.neg(c))).collect();
        Poly { ring: self.ring.clone(), terms }
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::one(&self.ring);
        for _ in 0..k {
            acc = acc.product(self);
        }
        acc
    }

    /// Scales so that the leading coefficient is one.
    pub fn monic(&self) -> Poly {
        match self.lead_coeff() {
            None => self.clone(),
            Some(c) => self.scale(&self.ring.field().inv(c)),
        }
    }

    /// Division with remainder by a list of divisors in the ring's order.
    pub fn divide(&self, divisors: &[Poly]) -> (Vec<Poly>, Poly) {
        let f = self.ring.field();
        let mut quots: Vec<Vec<Term>> = vec![Vec::new(); divisors.len()];
        let mut rem: Vec<Term> = Vec::new();
        let mut p = self.clone();
        while let Some((m, c)) = p.terms.first().cloned() {
            let hit = divisors.iter().enumerate().find(|(_, d)| {
                d.lead_monomial().map(|lm| lm.divides(&m)).unwrap_or(false)
            });
            match hit {
                Some((k, d)) => {
                    let (lm, lc) = d.terms[0].clone();
                    let q = lm.quotient_of(&m);
                    let qc = f.div(&c, &lc);
                    p = p.combine(&d.mul_term(&q, &qc), true);
                    quots[k].push((q, qc));
                }
                None => {
                    rem.push(p.terms.remove(0));
                }
            }
        }
        let quots = quots.into_iter().map(|t| Poly::from_terms(&self.ring, t)).collect();
        (quots, Poly::from_sorted(&self.ring, rem))
    }

    /// `self / d` when the division is exact.
    pub fn exact_div(&self, d: &Poly) -> Option<Poly> {
        if d.is_zero() {
            return None;
        }
        let (q, r) = self.divide(std::slice::from_ref(d));
        if r.is_zero() {
            q.into_iter().next()
        } else {
            None
        }
    }

    pub fn eval(&self, point: &[Coeff]) -> Coeff {
        let f = self.ring.field();
        let mut acc = f.zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    v = f.mul(&v, &f.pow(&point[i], e as u64));
                }
            }
            acc = f.add(&acc, &v);
        }
        acc
    }

    /// Ring map sending variable `i` to `images[i]` (all in `target`).
    pub fn substitute(&self, target: &PolyRing, images: &[Poly]) -> Poly {
        let mut acc = Poly::zero(target);
        let mut cache: Vec<Vec<Poly>> = vec![Vec::new(); images.len()];
        for (m, c) in &self.terms {
            let mut t = Poly::constant(target, c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let powers = &mut cache[i];
                if powers.is_empty() {
                    powers.push(Poly::one(target));
                }
                while powers.len() <= e as usize {
                    let next = powers.last().unwrap().product(&images[i]);
                    powers.push(next);
                }
                t = t.product(&powers[e as usize]);
            }
            acc = acc.combine(&t, false);
        }
        acc
    }

    /// Transports monomials along an injective variable map `map[i]` = index in `target`.
    pub fn rename(&self, target: &PolyRing, map: &[usize]) -> Poly {
        let n = target.nvars();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0u16; n];
                for (i, &x) in m.exps().iter().enumerate() {
                    if x > 0 {
                        e[map[i]] = x;
                    }
                }
                (target.monomial(&e), c.clone())
            })
            .collect();
        Poly::from_terms(target, terms)
    }

    /// Moves the polynomial into `target`, matching variables by name.
    pub fn to_ring(&self, target: &PolyRing) -> Result<Poly> {
        if self.ring.same_as(target) {
            return Ok(self.clone());
        }
        let mut map = Vec::with_capacity(self.ring.nvars());
        for (i, v) in self.ring.vars().iter().enumerate() {
            match target.var_index(v) {
                Some(j) => map.push(j),
                None => {
                    if self.terms.iter().any(|t| t.0.exps()[i] > 0) {
                        return Err(Error::UnknownVariable(v.clone()));
                    }
                    map.push(usize::MAX);
                }
            }
        }
        let n = target.nvars();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0u16; n];
                for (i, &x) in m.exps().iter().enumerate() {
                    if x > 0 {
                        e[map[i]] = x;
                    }
                }
                (target.monomial(&e), c.clone())
            })
            .collect();
        Ok(Poly::from_terms(target, terms))
    }

    /// Whether the polynomial only involves variables with index in `vars`.
    pub fn only_involves(&self, vars: &[usize]) -> bool {
        self.terms.iter().all(|(m, _)| {
            m.exps().iter().enumerate().all(|(i, &e)| e == 0 || vars.contains(&i))
        })
    }

    pub fn support_vars(&self) -> Vec<usize> {
        let mut v: Vec<usize> = (0..self.ring.nvars())
            .filter(|&i| self.terms.iter().any(|t| t.0.exps()[i] > 0))
            .collect();
        v.dedup();
        v
    }
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_as(&other.ring) && self.terms == other.terms
    }
}
impl Eq for Poly {}

impl std::hash::Hash for Poly {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $f:ident) => {
        impl std::ops::$tr<&Poly> for &Poly {
            type Output = Poly;
            fn $m(self, rhs: &Poly) -> Poly {
                self.$f(rhs).expect("ring mismatch in polynomial arithmetic")
            }
        }
        impl std::ops::$tr<Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                self.$f(&rhs).expect("ring mismatch in polynomial arithmetic")
            }
        }
    };
}
binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl std::ops::Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::neg(self)
    }
}

/// Writes a monomial as `x^2*y`, or `1` for the empty product.
pub fn format_monomial(ring: &PolyRing, m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exps().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(ring.vars()[i].clone()),
            _ => parts.push(format!("{}^{}", ring.vars()[i], e)),
        }
    }
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = self.ring.field();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let r = field.signed_repr(c);
            if k == 0 {
                if r.negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if r.negative { '-' } else { '+' })?;
            }
            let coeff = match &r.den {
                Some(d) => format!("{}/{}", r.num, d),
                None => r.num.clone(),
            };
            if m.is_one() {
                write!(f, "{coeff}")?;
            } else if r.is_one() {
                write!(f, "{}", format_monomial(&self.ring, m))?;
            } else {
                write!(f, "{}*{}", coeff, format_monomial(&self.ring, m))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}
