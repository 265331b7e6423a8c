use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::gb::{ModOrder, ModuleGb, VecOrder};
use crate::monomial::MonomialOrder;
use crate::parse::parse_poly;
use crate::poly::Poly;
use crate::ring::PolyRing;

struct GbCache {
    gb: ModuleGb,
    polys: Vec<Poly>,
}

/// An ideal given by generators, with a lazily computed reduced Gröbner basis
/// in the ring's order. Clones share the cache.
#[derive(Clone)]
pub struct IdealData {
    ring: PolyRing,
    gens: Vec<Poly>,
    cache: Arc<OnceLock<std::result::Result<Arc<GbCache>, Error>>>,
}

impl IdealData {
    pub fn new(ring: &PolyRing, gens: Vec<Poly>) -> IdealData {
        for g in &gens {
            assert!(g.ring().same_as(ring), "generator from another ring");
        }
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        IdealData { ring: ring.clone(), gens, cache: Arc::new(OnceLock::new()) }
    }

    pub fn parse(ring: &PolyRing, gens: &[&str]) -> Result<IdealData> {
        let gens = gens.iter().map(|s| parse_poly(ring, s)).collect::<Result<Vec<_>>>()?;
        Ok(IdealData::new(ring, gens))
    }

    pub fn zero(ring: &PolyRing) -> IdealData {
        IdealData::new(ring, Vec::new())
    }

    pub fn unit(ring: &PolyRing) -> IdealData {
        IdealData::new(ring, vec![Poly::one(ring)])
    }

    /// The ideal generated by all variables.
    pub fn maximal(ring: &PolyRing) -> IdealData {
        IdealData::new(ring, (0..ring.nvars()).map(|i| Poly::var(ring, i)).collect())
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn gens(&self) -> &[Poly] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    fn cache(&self) -> Result<Arc<GbCache>> {
        self.cache
            .get_or_init(|| {
                let ord = VecOrder::ideal(&self.ring);
                let gens = self.gens.iter().map(|g| ord.from_polys(std::slice::from_ref(g))).collect();
                let gb = ModuleGb::compute(&ord, gens)?;
                let polys = gb.basis.iter().map(|v| ord.to_polys(v).remove(0)).collect();
                Ok(Arc::new(GbCache { gb, polys }))
            })
            .clone()
    }

    /// Reduced Gröbner basis (monic leads, tail-reduced), sorted by increasing lead.
    pub fn groebner_basis(&self) -> Result<Vec<Poly>> {
        Ok(self.cache()?.polys.clone())
    }

    /// The same ideal generated by its reduced Gröbner basis.
    pub fn gb_ideal(&self) -> Result<IdealData> {
        let c = self.cache()?;
        let out = IdealData::new(&self.ring, c.polys.clone());
        let _ = out.cache.set(Ok(c));
        Ok(out)
    }

    /// Checks Buchberger's criterion on the cached basis.
    pub fn verify_groebner(&self) -> Result<bool> {
        Ok(self.cache()?.gb.criterion_holds())
    }

    pub fn normal_form(&self, f: &Poly) -> Result<Poly> {
        self.ring.check_same(f.ring())?;
        let c = self.cache()?;
        let ord = &c.gb.ord;
        let v = c.gb.reduce(ord.from_polys(std::slice::from_ref(f)));
        Ok(ord.to_polys(&v).remove(0))
    }

    pub fn contains(&self, f: &Poly) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    pub fn is_subset_of(&self, other: &IdealData) -> Result<bool> {
        self.ring.check_same(&other.ring)?;
        for g in &self.gens {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality as ideals (reduced Gröbner bases coincide).
    pub fn equals(&self, other: &IdealData) -> Result<bool> {
        self.ring.check_same(&other.ring)?;
        Ok(self.cache()?.polys == other.cache()?.polys)
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.cache()?.polys.iter().any(|p| p.is_unit()))
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    pub fn sum(&self, other: &IdealData) -> Result<IdealData> {
        self.ring.check_same(&other.ring)?;
        let mut g = self.gens.clone();
        g.extend(other.gens.iter().cloned());
        Ok(IdealData::new(&self.ring, g))
    }

    pub fn product(&self, other: &IdealData) -> Result<IdealData> {
        self.ring.check_same(&other.ring)?;
        let mut g = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                g.push(a * b);
            }
        }
        Ok(IdealData::new(&self.ring, g))
    }

    pub fn power(&self, k: u32) -> IdealData {
        let mut acc = IdealData::unit(&self.ring);
        for _ in 0..k {
            acc = acc.product(self).unwrap();
            acc = IdealData::new(&self.ring, dedup(acc.gens));
        }
        acc
    }

    /// `I ∩ J` from the syzygy module of `(f_i, f_i)` and `(g_j, 0)`.
    pub fn intersect(&self, other: &IdealData) -> Result<IdealData> {
        self.ring.check_same(&other.ring)?;
        if self.is_zero() || other.is_zero() {
            return Ok(IdealData::zero(&self.ring));
        }
        let ord = VecOrder::new(&self.ring, ModOrder::Pot, vec![0, 0]);
        let z = Poly::zero(&self.ring);
        let mut gens = Vec::new();
        for f in &self.gens {
            gens.push(ord.from_polys(&[f.clone(), f.clone()]));
        }
        for g in &other.gens {
            gens.push(ord.from_polys(&[g.clone(), z.clone()]));
        }
        let gb = ModuleGb::compute(&ord, gens)?;
        let out = gb
            .basis
            .iter()
            .filter(|v| v[0].comp == 1)
            .map(|v| ord.to_polys(v).remove(1))
            .collect();
        Ok(IdealData::new(&self.ring, out))
    }

    /// `I : (f)` from the syzygies of `(f, 1)` against `(g_i, 0)`.
    pub fn quotient_poly(&self, f: &Poly) -> Result<IdealData> {
        self.ring.check_same(f.ring())?;
        if f.is_zero() {
            return Ok(IdealData::unit(&self.ring));
        }
        let shift = f.degree().unwrap_or(0) as i64;
        let ord = VecOrder::new(&self.ring, ModOrder::Pot, vec![0, shift]);
        let one = Poly::one(&self.ring);
        let z = Poly::zero(&self.ring);
        let mut gens = vec![ord.from_polys(&[f.clone(), one])];
        for g in &self.gens {
            gens.push(ord.from_polys(&[g.clone(), z.clone()]));
        }
        let gb = ModuleGb::compute(&ord, gens)?;
        let out = gb
            .basis
            .iter()
            .filter(|v| v[0].comp == 1)
            .map(|v| ord.to_polys(v).remove(1))
            .collect();
        Ok(IdealData::new(&self.ring, out))
    }

    /// The colon ideal `I : J`, intersecting the colons by each generator.
    pub fn quotient(&self, other: &IdealData) -> Result<IdealData> {
        self.ring.check_same(&other.ring)?;
        let mut acc: Option<IdealData> = None;
        for g in &other.gens {
            let q = self.quotient_poly(g)?.gb_ideal()?;
            acc = Some(match acc {
                None => q,
                Some(a) => a.intersect(&q)?.gb_ideal()?,
            });
        }
        Ok(acc.unwrap_or_else(|| IdealData::unit(&self.ring)))
    }

    /// `I : f^∞` through an extra variable `w` and the generator `1 - w f`.
    pub fn saturate_poly(&self, f: &Poly) -> Result<IdealData> {
        self.ring.check_same(f.ring())?;
        if f.is_zero() {
            return Ok(IdealData::unit(&self.ring));
        }
        if f.is_unit() {
            return Ok(self.clone());
        }
        if self.ring.settings().iterated_saturation {
            return self.saturate_poly_iterated(f);
        }
        if f.is_homogeneous() && self.is_homogeneous() {
            return self.saturate_poly_graded(f);
        }
        let w = self.ring.fresh_name("w");
        let big = self.ring.prepend_eliminate(&[w], &[1])?;
        let map: Vec<usize> = (1..=self.ring.nvars()).collect();
        let mut gens: Vec<Poly> = self.gens.iter().map(|g| g.rename(&big, &map)).collect();
        let wf = &Poly::var(&big, 0) * &f.rename(&big, &map);
        gens.push(&Poly::one(&big) - &wf);
        let gb = IdealData::new(&big, gens).groebner_basis()?;
        let back: Vec<usize> = (0..big.nvars()).map(|p| p.saturating_sub(1)).collect();
        let out = gb
            .iter()
            .filter(|p| p.terms().iter().all(|t| t.0.exps()[0] == 0))
            .map(|p| p.rename(&self.ring, &back))
            .collect();
        Ok(IdealData::new(&self.ring, out))
    }

    /// `I : f^∞` for homogeneous data: adjoin `u - f` with `u` last in grevlex,
    /// strip powers of `u` from the basis, then put `u = f` back.
    pub fn saturate_poly_graded(&self, f: &Poly) -> Result<IdealData> {
        let deg = f.degree().unwrap_or(0).max(1);
        let u = self.ring.fresh_name("u");
        let big = self.ring.extend(&[u], &[deg], MonomialOrder::Grevlex)?;
        let n = self.ring.nvars();
        let map: Vec<usize> = (0..n).collect();
        let mut gens: Vec<Poly> = self.gens.iter().map(|g| g.rename(&big, &map)).collect();
        gens.push(&Poly::var(&big, n) - &f.rename(&big, &map));
        let gb = IdealData::new(&big, gens).groebner_basis()?;
        let mut images: Vec<Poly> = (0..n).map(|i| Poly::var(&self.ring, i)).collect();
        images.push(f.clone());
        let out = gb
            .iter()
            .map(|g| {
                let k = g.terms().iter().map(|t| t.0.exps()[n]).min().unwrap_or(0);
                let stripped = if k == 0 {
                    g.clone()
                } else {
                    let mut e = vec![0u16; n + 1];
                    e[n] = k;
                    g.exact_div(&Poly::term(&big, big.monomial(&e), big.field().one())).unwrap()
                };
                stripped.substitute(&self.ring, &images)
            })
            .filter(|p| !p.is_zero())
            .collect();
        Ok(IdealData::new(&self.ring, out))
    }

    /// `I : f^∞` as the stable value of `I : f^k`.
    pub fn saturate_poly_iterated(&self, f: &Poly) -> Result<IdealData> {
        let mut cur = self.gb_ideal()?;
        loop {
            let next = cur.quotient_poly(f)?.gb_ideal()?;
            if next.equals(&cur)? {
                return Ok(cur);
            }
            cur = next;
        }
    }

    /// `I : J^∞` as the intersection of the saturations at each generator of `J`.
    pub fn saturate(&self, other: &IdealData) -> Result<IdealData> {
        self.ring.check_same(&other.ring)?;
        let mut acc: Option<IdealData> = None;
        for g in &other.gens {
            let q = self.saturate_poly(g)?.gb_ideal()?;
            acc = Some(match acc {
                None => q,
                Some(a) => a.intersect(&q)?.gb_ideal()?,
            });
        }
        Ok(acc.unwrap_or_else(|| IdealData::unit(&self.ring)))
    }

    /// `I ∩ k[keep]` via a block order eliminating the other variables.
    /// The result lives in the subring on `keep` (grevlex, inherited weights).
    pub fn eliminate(&self, keep: &[&str]) -> Result<IdealData> {
        let mut keep_idx = Vec::new();
        for k in keep {
            match self.ring.var_index(k) {
                Some(i) if !keep_idx.contains(&i) => keep_idx.push(i),
                Some(_) => return Err(Error::InvalidVariableSubset(format!("`{k}` repeated"))),
                None => return Err(Error::InvalidVariableSubset(format!("`{k}` is not a ring variable"))),
            }
        }
        keep_idx.sort();
        let elim: Vec<usize> = (0..self.ring.nvars()).filter(|i| !keep_idx.contains(i)).collect();
        let w = self.ring.weights();
        let sub = PolyRing::build(
            self.ring.field(),
            keep_idx.iter().map(|&i| self.ring.vars()[i].clone()).collect(),
            MonomialOrder::Grevlex,
            keep_idx.iter().map(|&i| w[i]).collect(),
            self.ring.context().clone(),
        )?;
        if elim.is_empty() {
            let map: Vec<usize> = (0..self.ring.nvars()).collect();
            return Ok(IdealData::new(&sub, self.gens.iter().map(|g| g.rename(&sub, &map)).collect()));
        }
        let mut order_vars: Vec<String> = elim.iter().map(|&i| self.ring.vars()[i].clone()).collect();
        order_vars.extend(keep_idx.iter().map(|&i| self.ring.vars()[i].clone()));
        let mut order_w: Vec<u32> = elim.iter().map(|&i| w[i]).collect();
        order_w.extend(keep_idx.iter().map(|&i| w[i]));
        let big = PolyRing::build(
            self.ring.field(),
            order_vars,
            MonomialOrder::Block(elim.len()),
            order_w,
            self.ring.context().clone(),
        )?;
        let mut to_big = vec![0usize; self.ring.nvars()];
        for (pos, &i) in elim.iter().chain(keep_idx.iter()).enumerate() {
            to_big[i] = pos;
        }
        let gens = self.gens.iter().map(|g| g.rename(&big, &to_big)).collect();
        let gb = IdealData::new(&big, gens).groebner_basis()?;
        let ne = elim.len();
        let back: Vec<usize> = (0..big.nvars()).map(|p| p.saturating_sub(ne)).collect();
        let out = gb
            .iter()
            .filter(|p| p.terms().iter().all(|t| t.0.exps()[..ne].iter().all(|&e| e == 0)))
            .map(|p| p.rename(&sub, &back))
            .collect();
        Ok(IdealData::new(&sub, out))
    }

    /// Krull dimension of `R/I` from the lead-term ideal; `None` for the unit ideal.
    pub fn dimension(&self) -> Result<Option<usize>> {
        let c = self.cache()?;
        if c.polys.iter().any(|p| p.is_unit()) {
            return Ok(None);
        }
        let n = self.ring.nvars();
        let supports: Vec<Vec<usize>> = c
            .polys
            .iter()
            .map(|p| {
                let m = p.lead_monomial().unwrap();
                (0..n).filter(|&i| m.exps()[i] > 0).collect()
            })
            .collect();
        Ok(Some(n - min_cover(n, &supports)))
    }

    /// Height `nvars - dim`; `None` (infinite) for the unit ideal.
    pub fn height(&self) -> Result<Option<usize>> {
        Ok(self.dimension()?.map(|d| self.ring.nvars() - d))
    }

    /// Whether `ht I >= k`, with the unit ideal counting as infinite height.
    pub fn height_at_least(&self, k: usize) -> Result<bool> {
        Ok(self.height()?.map(|h| h >= k).unwrap_or(true))
    }

    /// A minimal generating set for a homogeneous ideal: generators taken by
    /// increasing degree and kept when not in the span of the earlier ones.
    pub fn minimal_generators(&self) -> Result<Vec<Poly>> {
        let mut gens = self.gens.clone();
        gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.to_string().cmp(&a.to_string())));
        let mut kept: Vec<Poly> = Vec::new();
        for g in gens {
            if kept.is_empty() || !IdealData::new(&self.ring, kept.clone()).contains(&g)? {
                kept.push(g);
            }
        }
        Ok(kept)
    }

    /// Generators of the reduced basis as strings, sorted by (degree, text).
    pub fn sorted_gb_strings(&self) -> Result<Vec<String>> {
        let mut v: Vec<(u32, String)> = self
            .groebner_basis()?
            .iter()
            .map(|p| (p.degree().unwrap_or(0), p.to_string()))
            .collect();
        v.sort();
        Ok(v.into_iter().map(|x| x.1).collect())
    }

    /// Moves the ideal into another ring with the same variable names.
    pub fn to_ring(&self, target: &PolyRing) -> Result<IdealData> {
        let g = self.gens.iter().map(|g| g.to_ring(target)).collect::<Result<Vec<_>>>()?;
        Ok(IdealData::new(target, g))
    }
}

fn dedup(mut v: Vec<Poly>) -> Vec<Poly> {
    let mut out: Vec<Poly> = Vec::new();
    for p in v.drain(..) {
        let m = p.monic();
        if !out.iter().any(|q| q.monic() == m) {
            out.push(p);
        }
    }
    out
}

/// Size of a smallest set of variables meeting every support.
pub(crate) fn min_cover(n: usize, supports: &[Vec<usize>]) -> usize {
    let sets: Vec<Vec<usize>> = supports.to_vec();
    let mut best = n;
    let mut chosen = vec![false; n];
    fn rec(sets: &[Vec<usize>], chosen: &mut Vec<bool>, count: usize, best: &mut usize) {
        if count >= *best {
            return;
        }
        let uncovered = sets
            .iter()
            .filter(|s| !s.iter().any(|&v| chosen[v]))
            .min_by_key(|s| s.len());
        match uncovered {
            None => *best = count,
            Some(s) => {
                for &v in s.clone().iter() {
                    chosen[v] = true;
                    rec(sets, chosen, count + 1, best);
                    chosen[v] = false;
                }
            }
        }
    }
    rec(&sets, &mut chosen, 0, &mut best);
    best
}

/// Greatest common divisor of two polynomials, normalized monic; gcd(0,0) = 0.
pub fn gcd(a: &Poly, b: &Poly) -> Result<Poly> {
    a.ring().check_same(b.ring())?;
    if a.is_zero() {
        return Ok(b.monic());
    }
    if b.is_zero() {
        return Ok(a.monic());
    }
    if a.is_constant() || b.is_constant() {
        return Ok(Poly::one(a.ring()));
    }
    if let Some(q) = a.exact_div(b) {
        let _ = q;
        return Ok(b.monic());
    }
    if let Some(q) = b.exact_div(a) {
        let _ = q;
        return Ok(a.monic());
    }
    let r = a.ring();
    let ia = IdealData::new(r, vec![a.clone()]);
    let ib = IdealData::new(r, vec![b.clone()]);
    let lcm = ia.intersect(&ib)?.groebner_basis()?;
    let lcm = lcm
        .into_iter()
        .next()
        .ok_or_else(|| Error::InvalidInput("empty intersection of principal ideals".into()))?;
    let prod = a * b;
    let g = prod
        .exact_div(&lcm)
        .ok_or_else(|| Error::InvalidInput("lcm does not divide the product".into()))?;
    Ok(g.monic())
}

/// Greatest common divisor of a list.
pub fn gcd_list(v: &[Poly]) -> Result<Option<Poly>> {
    let mut acc: Option<Poly> = None;
    for p in v {
        if p.is_zero() {
            continue;
        }
        acc = Some(match acc {
            None => p.monic(),
            Some(a) => gcd(&a, p)?,
        });
        if acc.as_ref().map(|g| g.is_constant()).unwrap_or(false) {
            break;
        }
    }
    Ok(acc)
}

impl fmt::Debug for IdealData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g: Vec<String> = self.gens.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", g.join(", "))
    }
}

impl fmt::Display for IdealData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;

    fn ring(vars: &[&str]) -> PolyRing {
        PolyRing::new(FieldSpec::default(), vars).unwrap()
    }

    fn gb_strings(i: &IdealData) -> Vec<String> {
        i.groebner_basis().unwrap().iter().map(|p| p.to_string()).collect()
    }

    #[test]
    fn groebner_examples() {
        let r = ring(&["x", "y"]);
        let i = IdealData::parse(&r, &["x^2 - 1", "x*y - 1"]).unwrap();
        assert_eq!(gb_strings(&i), vec!["x - y", "y^2 - 1"]);
        assert!(IdealData::zero(&r).groebner_basis().unwrap().is_empty());
        let i = IdealData::parse(&r, &["x", "x"]).unwrap();
        assert_eq!(gb_strings(&i), vec!["x"]);
    }

    #[test]
    fn normal_forms() {
        let r = ring(&["x", "y"]);
        let xi = IdealData::parse(&r, &["x"]).unwrap();
        assert!(xi.normal_form(&parse_poly(&r, "x^2").unwrap()).unwrap().is_zero());
        assert_eq!(xi.normal_form(&parse_poly(&r, "y").unwrap()).unwrap().to_string(), "y");
        let i = IdealData::parse(&r, &["x - y"]).unwrap();
        let nf = i.normal_form(&parse_poly(&r, "x*y + y").unwrap()).unwrap();
        assert_eq!(nf, parse_poly(&r, "y^2 + y").unwrap());
    }

    #[test]
    fn quotients_and_saturations() {
        let r = ring(&["x", "y"]);
        let i = IdealData::parse(&r, &["x^2", "y"]).unwrap();
        let m = IdealData::parse(&r, &["x", "y"]).unwrap();
        assert!(i.quotient(&m).unwrap().equals(&m).unwrap());
        assert!(i.quotient(&IdealData::unit(&r)).unwrap().equals(&i).unwrap());
        let x = IdealData::parse(&r, &["x"]).unwrap();
        assert!(x.quotient(&x).unwrap().is_unit().unwrap());

        let xy = IdealData::parse(&r, &["x*y"]).unwrap();
        let y = IdealData::parse(&r, &["y"]).unwrap();
        assert!(xy.saturate(&y).unwrap().equals(&x).unwrap());
        let j = IdealData::parse(&r, &["x^2", "x*y"]).unwrap();
        // x^2 lies in the ideal, so saturating at x gives the unit ideal; at (x,y) it strips the embedded point.
        assert!(j.saturate(&IdealData::parse(&r, &["x"]).unwrap()).unwrap().is_unit().unwrap());
        assert!(j.saturate(&m).unwrap().equals(&x).unwrap());
        assert!(j.saturate(&IdealData::unit(&r)).unwrap().equals(&j).unwrap());
    }

    #[test]
    fn saturation_strategies_agree() {
        let r = ring(&["x", "y", "z"]);
        let i = IdealData::parse(&r, &["x^2*z", "x*y*z^2", "y^3"]).unwrap();
        let f = parse_poly(&r, "z").unwrap();
        let a = i.saturate_poly(&f).unwrap();
        let b = i.saturate_poly_iterated(&f).unwrap();
        assert!(a.equals(&b).unwrap());
    }

    #[test]
    fn elimination() {
        let r = ring(&["t", "x", "y"]);
        let i = IdealData::parse(&r, &["x - t", "y - t^2"]).unwrap();
        let e = i.eliminate(&["x", "y"]).unwrap();
        let sub = e.ring().clone();
        let expected = IdealData::parse(&sub, &["y - x^2"]).unwrap();
        assert!(e.equals(&expected).unwrap());
        let i = IdealData::parse(&r, &["t"]).unwrap();
        assert!(i.eliminate(&["x"]).unwrap().groebner_basis().unwrap().is_empty());
        assert!(matches!(i.eliminate(&["q"]), Err(Error::InvalidVariableSubset(_))));
    }

    #[test]
    fn dimensions() {
        let r = ring(&["x", "y", "z"]);
        let i = IdealData::parse(&r, &["x", "y"]).unwrap();
        assert_eq!(i.dimension().unwrap(), Some(1));
        assert_eq!(i.height().unwrap(), Some(2));
        let r4 = ring(&["x", "y", "z", "w"]);
        let i = IdealData::parse(&r4, &["x*z", "x*w", "y*z", "y*w"]).unwrap();
        assert_eq!(i.dimension().unwrap(), Some(2));
        assert_eq!(IdealData::unit(&r).dimension().unwrap(), None);
        assert_eq!(IdealData::zero(&r).dimension().unwrap(), Some(3));
    }

    #[test]
    fn intersections_and_gcd() {
        let r = ring(&["x", "y"]);
        let a = IdealData::parse(&r, &["x"]).unwrap();
        let b = IdealData::parse(&r, &["y"]).unwrap();
        let c = a.intersect(&b).unwrap();
        assert!(c.equals(&IdealData::parse(&r, &["x*y"]).unwrap()).unwrap());
        let f = parse_poly(&r, "x^2*y - x*y^2").unwrap();
        let g = parse_poly(&r, "x^3 - x*y^2").unwrap();
        assert_eq!(gcd(&f, &g).unwrap(), parse_poly(&r, "x^2 - x*y").unwrap());
    }
}
