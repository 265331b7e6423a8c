use std::cmp::Ordering;

use smallvec::SmallVec;

pub type Exps = SmallVec<[u16; 12]>;

/// Exponent vector together with its weighted total degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    deg: u32,
    exps: Exps,
}

/// Monomial orders. `Block(k)` compares the first `k` variables by weighted
/// graded reverse lex and breaks ties with graded reverse lex on the rest.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Grevlex,
    Lex,
    Block(usize),
}

impl MonomialOrder {
    pub fn name(&self) -> String {
        match self {
            MonomialOrder::Grevlex => "grevlex".into(),
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::Block(k) => format!("block:{k}"),
        }
    }

    pub fn parse(s: &str) -> Option<MonomialOrder> {
        match s {
            "grevlex" => Some(MonomialOrder::Grevlex),
            "lex" => Some(MonomialOrder::Lex),
            _ => s.strip_prefix("block:").and_then(|k| k.parse().ok()).map(MonomialOrder::Block),
        }
    }

    /// Whether the order refines the weighted total degree.
    pub fn is_degree_compatible(&self) -> bool {
        matches!(self, MonomialOrder::Grevlex)
    }
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { deg: 0, exps: SmallVec::from_elem(0, nvars) }
    }

    pub fn from_exps(exps: &[u16], weights: &[u32]) -> Self {
        let deg = exps.iter().zip(weights).map(|(&e, &w)| e as u32 * w).sum();
        Monomial { deg, exps: SmallVec::from_slice(exps) }
    }

    pub fn var(nvars: usize, i: usize, weights: &[u32]) -> Self {
        let mut m = Monomial::one(nvars);
        m.exps[i] = 1;
        m.deg = weights[i];
        m
    }

    #[inline]
    pub fn deg(&self) -> u32 {
        self.deg
    }

    #[inline]
    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Ordinary (unweighted) total degree.
    pub fn total(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let exps = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(&a, &b)| a.checked_add(b).expect("exponent overflow"))
            .collect();
        Monomial { deg: self.deg + other.deg, exps }
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    #[inline]
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        let exps = other.exps.iter().zip(self.exps.iter()).map(|(&a, &b)| a - b).collect();
        Monomial { deg: other.deg - self.deg, exps }
    }

    pub fn lcm(&self, other: &Monomial, weights: &[u32]) -> Monomial {
        let exps: Exps =
            self.exps.iter().zip(other.exps.iter()).map(|(&a, &b)| a.max(b)).collect();
        let deg = exps.iter().zip(weights).map(|(&e, &w)| e as u32 * w).sum();
        Monomial { deg, exps }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Bit `i` set when variable `i` (mod 64) occurs.
    #[inline]
    pub fn divmask(&self) -> u64 {
        let mut m = 0u64;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                m |= 1 << (i % 64);
            }
        }
        m
    }

    pub fn cmp_with(&self, other: &Monomial, order: MonomialOrder, weights: &[u32]) -> Ordering {
        match order {
            MonomialOrder::Grevlex => self
                .deg
                .cmp(&other.deg)
                .then_with(|| revlex(&self.exps, &other.exps)),
            MonomialOrder::Lex => self.exps.cmp(&other.exps),
            MonomialOrder::Block(k) => {
                let k = k.min(self.exps.len());
                let d1: u32 = self.exps[..k].iter().zip(weights).map(|(&e, &w)| e as u32 * w).sum();
                let d2: u32 = other.exps[..k].iter().zip(weights).map(|(&e, &w)| e as u32 * w).sum();
                d1.cmp(&d2)
                    .then_with(|| revlex(&self.exps[..k], &other.exps[..k]))
                    .then_with(|| (self.deg - d1).cmp(&(other.deg - d2)))
                    .then_with(|| revlex(&self.exps[k..], &other.exps[k..]))
            }
        }
    }
}

/// Reverse lexicographic tie-break: the monomial with the smaller exponent in
/// the last differing variable is larger.
#[inline]
fn revlex(a: &[u16], b: &[u16]) -> Ordering {
    for i in (0..a.len()).rev() {
        if a[i] != b[i] {
            return b[i].cmp(&a[i]);
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exps(e, &vec![1; e.len()])
    }

    #[test]
    fn grevlex_basics() {
        let w = [1, 1, 1];
        let o = MonomialOrder::Grevlex;
        assert_eq!(m(&[1, 0, 0]).cmp_with(&m(&[0, 1, 0]), o, &w), Ordering::Greater);
        assert_eq!(m(&[0, 2, 0]).cmp_with(&m(&[1, 0, 1]), o, &w), Ordering::Greater);
        assert_eq!(m(&[0, 0, 2]).cmp_with(&m(&[1, 0, 0]), o, &w), Ordering::Greater);
    }

    #[test]
    fn block_eliminates_first_block() {
        let w = [1, 1, 1];
        let o = MonomialOrder::Block(1);
        assert_eq!(m(&[1, 0, 0]).cmp_with(&m(&[0, 5, 5]), o, &w), Ordering::Greater);
    }

    #[test]
    #[should_panic(expected = "exponent overflow")]
    fn overflow_is_fatal() {
        let a = m(&[u16::MAX]);
        let _ = a.mul(&m(&[1]));
    }
}
