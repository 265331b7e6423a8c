use std::cmp::Ordering;

use super::{VecOrder, Vector};
use crate::error::{Error, Result};
use crate::field::Coeff;
use crate::monomial::Monomial;

struct Elem {
    v: Vector,
    comp: u32,
    lead: Monomial,
    mask: u64,
    sugar: i64,
}

impl Elem {
    fn new(v: Vector, sugar: i64) -> Elem {
        let comp = v[0].comp;
        let lead = v[0].mono.clone();
        let mask = lead.divmask();
        Elem { v, comp, lead, mask, sugar }
    }
}

/// Basis indexed by lead component for repeated normal forms.
struct Index {
    by_comp: Vec<Vec<usize>>,
}

impl Index {
    fn new(rank: usize) -> Index {
        Index { by_comp: vec![Vec::new(); rank] }
    }

    fn find(&self, elems: &[Elem], comp: u32, mono: &Monomial) -> Option<usize> {
        let mask = mono.divmask();
        self.by_comp[comp as usize]
            .iter()
            .copied()
            .find(|&k| elems[k].mask & !mask == 0 && elems[k].lead.divides(mono))
    }
}

fn reduce_with(ord: &VecOrder, elems: &[Elem], idx: &Index, v: Vector, mut sugar: i64) -> (Vector, i64) {
    let mut out: Vector = Vec::new();
    let mut cur = v;
    let mut i = 0;
    while i < cur.len() {
        match idx.find(elems, cur[i].comp, &cur[i].mono) {
            Some(k) => {
                let g = &elems[k];
                let q = g.lead.quotient_of(&cur[i].mono);
                let c: Coeff = cur[i].coeff.clone();
                sugar = sugar.max(g.sugar + q.deg() as i64);
                let next = ord.sub_mul(&cur[i + 1..], &c, &q, &g.v[1..]);
                cur = next;
                i = 0;
            }
            None => {
                out.push(cur[i].clone());
                i += 1;
            }
        }
    }
    (out, sugar)
}

/// A monic basis prepared for repeated normal forms.
pub(crate) struct Reducer {
    elems: Vec<Elem>,
    idx: Index,
}

impl Reducer {
    pub(crate) fn new(ord: &VecOrder, basis: &[Vector]) -> Reducer {
        let elems: Vec<Elem> = basis.iter().filter(|b| !b.is_empty()).map(|b| Elem::new(b.clone(), 0)).collect();
        let mut idx = Index::new(ord.rank());
        for (k, e) in elems.iter().enumerate() {
            idx.by_comp[e.comp as usize].push(k);
        }
        Reducer { elems, idx }
    }

    pub(crate) fn reduce(&self, ord: &VecOrder, v: Vector) -> Vector {
        reduce_with(ord, &self.elems, &self.idx, v, 0).0
    }

    /// Whether some basis lead divides the term.
    pub(crate) fn divides_term(&self, comp: u32, m: &Monomial) -> bool {
        self.idx.find(&self.elems, comp, m).is_some()
    }
}

#[derive(Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    comp: u32,
    sugar: i64,
}

fn spoly(ord: &VecOrder, a: &Elem, b: &Elem, lcm: &Monomial) -> Vector {
    let one = ord.field().one();
    let qa = a.lead.quotient_of(lcm);
    let qb = b.lead.quotient_of(lcm);
    let first = ord.sub_mul(&[], &ord.field().neg(&one), &qa, &a.v[1..]);
    ord.sub_mul(&first, &one, &qb, &b.v[1..])
}

/// Pair-selection key: smallest sugar first, then smallest lcm, then age.
fn pair_cmp(ord: &VecOrder, a: &Pair, b: &Pair) -> Ordering {
    a.sugar
        .cmp(&b.sugar)
        .then_with(|| ord.cmp(a.comp, &a.lcm, b.comp, &b.lcm))
        .then_with(|| (a.j, a.i).cmp(&(b.j, b.i)))
}

/// Reduced Gröbner basis of the submodule generated by `gens`, sorted by increasing lead.
pub(crate) fn buchberger(ord: &VecOrder, gens: Vec<Vector>) -> Result<Vec<Vector>> {
    let ctx = ord.ring.context().clone();
    let settings = &ctx.settings;
    ctx.bump(&ctx.stats.groebner_bases, 1);
    let weights = ord.ring.weights().to_vec();
    let product_criterion = ord.rank() == 1;

    let mut input: Vec<(Vector, i64)> = gens
        .into_iter()
        .filter(|g| !g.is_empty())
        .map(|g| {
            let s = ord.sugar(&g);
            (g, s)
        })
        .collect();
    input.sort_by(|a, b| {
        a.1.cmp(&b.1).then_with(|| ord.cmp_terms(&a.0[0], &b.0[0])).then_with(|| a.0.len().cmp(&b.0.len()))
    });

    let mut elems: Vec<Elem> = Vec::new();
    let mut active: Vec<bool> = Vec::new();
    let mut idx = Index::new(ord.rank());
    let mut pairs: Vec<Pair> = Vec::new();
    let mut queue: std::collections::VecDeque<(Vector, i64)> = input.into();
    let mut processed: u64 = 0;

    loop {
        // Inputs are consumed before pairs of higher sugar.
        let next_input_sugar = queue.front().map(|x| x.1);
        let take_input = match (next_input_sugar, pairs.last()) {
            (Some(s), Some(p)) => s <= p.sugar,
            (Some(_), None) => true,
            (None, _) => false,
        };
        let (h, sugar) = if take_input {
            let (g, s) = queue.pop_front().unwrap();
            reduce_with(ord, &elems, &idx, g, s)
        } else if let Some(p) = pairs.pop() {
            processed += 1;
            if processed as usize > settings.max_pairs {
                ctx.bump(&ctx.stats.pairs, processed);
                return Err(Error::Budget(format!("more than {} S-pairs", settings.max_pairs)));
            }
            let s = spoly(ord, &elems[p.i], &elems[p.j], &p.lcm);
            reduce_with(ord, &elems, &idx, s, p.sugar)
        } else {
            break;
        };
        if h.is_empty() {
            continue;
        }
        let mut h = h;
        ord.monic(&mut h);
        let new = Elem::new(h, sugar);
        let hk = elems.len();

        // Gebauer-Moller update.
        let mut cands: Vec<(usize, Monomial, bool)> = Vec::new();
        for (k, g) in elems.iter().enumerate() {
            if !active[k] || g.comp != new.comp {
                continue;
            }
            let l = g.lead.lcm(&new.lead, &weights);
            let disjoint = product_criterion && g.lead.is_coprime(&new.lead);
            cands.push((k, l, disjoint));
        }
        let mut keep: Vec<bool> = vec![true; cands.len()];
        for a in 0..cands.len() {
            if cands[a].2 {
                continue;
            }
            for b in 0..cands.len() {
                if a == b || !keep[b] {
                    continue;
                }
                if cands[b].1.divides(&cands[a].1) && (cands[b].1 != cands[a].1 || b < a) {
                    keep[a] = false;
                    break;
                }
            }
        }
        let new_pairs: Vec<Pair> = cands
            .iter()
            .zip(keep.iter())
            .filter(|(c, &k)| k && !c.2)
            .map(|(c, _)| {
                let g = &elems[c.0];
                let qs = g.sugar + (c.1.deg() - g.lead.deg()) as i64;
                let qh = sugar + (c.1.deg() - new.lead.deg()) as i64;
                Pair { i: c.0, j: hk, lcm: c.1.clone(), comp: new.comp, sugar: qs.max(qh) }
            })
            .collect();
        pairs.retain(|p| {
            if p.comp != new.comp || !new.lead.divides(&p.lcm) {
                return true;
            }
            let li = elems[p.i].lead.lcm(&new.lead, &weights);
            let lj = elems[p.j].lead.lcm(&new.lead, &weights);
            li == p.lcm || lj == p.lcm
        });
        for (k, g) in elems.iter().enumerate() {
            if active[k] && g.comp == new.comp && new.lead.divides(&g.lead) {
                active[k] = false;
            }
        }
        pairs.extend(new_pairs);
        pairs.sort_by(|a, b| pair_cmp(ord, b, a));
        elems.push(new);
        active.push(true);
        idx.by_comp = vec![Vec::new(); ord.rank()];
        for (k, e) in elems.iter().enumerate() {
            if active[k] {
                idx.by_comp[e.comp as usize].push(k);
            }
        }
        let live = active.iter().filter(|&&a| a).count();
        if live > settings.max_basis {
            ctx.bump(&ctx.stats.pairs, processed);
            return Err(Error::Budget(format!("basis larger than {}", settings.max_basis)));
        }
    }
    ctx.bump(&ctx.stats.pairs, processed);

    // Interreduce the tails against the final minimal basis.
    let live: Vec<usize> = (0..elems.len()).filter(|&k| active[k]).collect();
    let mut out: Vec<Vector> = Vec::with_capacity(live.len());
    for &k in &live {
        let mut sub = Index::new(ord.rank());
        for &m in &live {
            if m != k {
                sub.by_comp[elems[m].comp as usize].push(m);
            }
        }
        let tail = elems[k].v[1..].to_vec();
        let (rt, _) = reduce_with(ord, &elems, &sub, tail, 0);
        let mut v = Vec::with_capacity(rt.len() + 1);
        v.push(elems[k].v[0].clone());
        v.extend(rt);
        out.push(v);
    }
    out.sort_by(|a, b| ord.cmp_terms(&a[0], &b[0]));

    if settings.verify {
        ctx.bump(&ctx.stats.criterion_checks, 1);
        if !criterion_holds(ord, &out) {
            ctx.bump(&ctx.stats.criterion_failures, 1);
        }
    }
    Ok(out)
}

/// Buchberger's criterion: every S-vector of the basis reduces to zero.
pub(crate) fn criterion_holds(ord: &VecOrder, basis: &[Vector]) -> bool {
    let weights = ord.ring.weights();
    let elems: Vec<Elem> = basis.iter().map(|b| Elem::new(b.clone(), 0)).collect();
    let mut idx = Index::new(ord.rank());
    for (k, e) in elems.iter().enumerate() {
        idx.by_comp[e.comp as usize].push(k);
    }
    for i in 0..elems.len() {
        for j in i + 1..elems.len() {
            if elems[i].comp != elems[j].comp {
                continue;
            }
            let l = elems[i].lead.lcm(&elems[j].lead, weights);
            let s = spoly(ord, &elems[i], &elems[j], &l);
            if !reduce_with(ord, &elems, &idx, s, 0).0.is_empty() {
                return false;
            }
        }
    }
    true
}
