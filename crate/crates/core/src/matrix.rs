use std::collections::HashMap;
use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::{Coeff, FieldSpec};
use crate::poly::Poly;
use crate::ring::PolyRing;

/// Dense matrix of polynomials with graded bookkeeping: the matrix maps the
/// free module with generator degrees `col_degs` to the one with `row_degs`.
#[derive(Clone)]
pub struct PolyMatrix {
    ring: PolyRing,
    rows: usize,
    cols: usize,
    entries: Vec<Poly>,
    row_degs: Vec<i64>,
    col_degs: Vec<i64>,
}

/// Upper bound on the number of minors enumerated for one Fitting ideal.
pub const MAX_MINORS: usize = 250_000;

impl PolyMatrix {
    pub fn zero(ring: &PolyRing, rows: usize, cols: usize) -> PolyMatrix {
        PolyMatrix {
            ring: ring.clone(),
            rows,
            cols,
            entries: vec![Poly::zero(ring); rows * cols],
            row_degs: vec![0; rows],
            col_degs: vec![0; cols],
        }
    }

    pub fn identity(ring: &PolyRing, n: usize) -> PolyMatrix {
        let mut m = PolyMatrix::zero(ring, n, n);
        for i in 0..n {
            m.set(i, i, Poly::one(ring));
        }
        m
    }

    /// Builds from columns; column degrees are inferred from the entries.
    pub fn from_columns(ring: &PolyRing, row_degs: Vec<i64>, columns: Vec<Vec<Poly>>) -> PolyMatrix {
        let rows = row_degs.len();
        let cols = columns.len();
        let mut m = PolyMatrix::zero(ring, rows, cols);
        m.row_degs = row_degs;
        for (j, c) in columns.into_iter().enumerate() {
            assert_eq!(c.len(), rows, "column length mismatch");
            for (i, p) in c.into_iter().enumerate() {
                m.set(i, j, p);
            }
        }
        m.infer_col_degs();
        m
    }

    /// Builds from rows of entries with the given generator degrees.
    pub fn from_rows(ring: &PolyRing, rows: Vec<Vec<Poly>>, row_degs: Vec<i64>) -> Result<PolyMatrix> {
        let nr = rows.len();
        let nc = rows.first().map(|r| r.len()).unwrap_or(0);
        if rows.iter().any(|r| r.len() != nc) {
            return Err(Error::InvalidInput("ragged matrix".into()));
        }
        let mut m = PolyMatrix::zero(ring, nr, nc);
        m.row_degs = row_degs;
        for (i, r) in rows.into_iter().enumerate() {
            for (j, p) in r.into_iter().enumerate() {
                m.set(i, j, p);
            }
        }
        m.infer_col_degs();
        Ok(m)
    }

    /// Sets each column degree from its first nonzero entry (zero columns keep 0).
    pub fn infer_col_degs(&mut self) {
        for j in 0..self.cols {
            let d = (0..self.rows).find_map(|i| {
                let p = self.get(i, j);
                p.degree().map(|d| d as i64 + self.row_degs[i])
            });
            self.col_degs[j] = d.unwrap_or(self.row_degs.iter().copied().min().unwrap_or(0));
        }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn row_degs(&self) -> &[i64] {
        &self.row_degs
    }
    pub fn col_degs(&self) -> &[i64] {
        &self.col_degs
    }
    pub fn set_row_degs(&mut self, d: Vec<i64>) {
        assert_eq!(d.len(), self.rows);
        self.row_degs = d;
    }
    pub fn set_col_degs(&mut self, d: Vec<i64>) {
        assert_eq!(d.len(), self.cols);
        self.col_degs = d;
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Poly) {
        self.entries[i * self.cols + j] = p;
    }

    pub fn column(&self, j: usize) -> Vec<Poly> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Poly>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn row(&self, i: usize) -> Vec<Poly> {
        (0..self.cols).map(|j| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|p| p.is_zero())
    }

    /// Whether every entry is homogeneous of the degree the bookkeeping predicts.
    pub fn is_graded(&self) -> bool {
        (0..self.rows).all(|i| {
            (0..self.cols).all(|j| {
                let p = self.get(i, j);
                p.is_zero()
                    || (p.is_homogeneous()
                        && p.degree().unwrap() as i64 == self.col_degs[j] - self.row_degs[i])
            })
        })
    }

    /// Transposed matrix: the dual map, with negated generator degrees.
    pub fn transpose(&self) -> PolyMatrix {
        let mut m = PolyMatrix::zero(&self.ring, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(j, i, self.get(i, j).clone());
            }
        }
        m.row_degs = self.col_degs.iter().map(|d| -d).collect();
        m.col_degs = self.row_degs.iter().map(|d| -d).collect();
        m
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != other.rows {
            return Err(Error::InvalidInput("matrix shapes do not compose".into()));
        }
        let mut m = PolyMatrix::zero(&self.ring, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Poly::zero(&self.ring);
                for k in 0..self.cols {
                    let a = self.get(i, k);
                    let b = other.get(k, j);
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                m.set(i, j, acc);
            }
        }
        m.row_degs = self.row_degs.clone();
        m.col_degs = other.col_degs.clone();
        Ok(m)
    }

    /// Columns of `self` followed by those of `other` (same target).
    pub fn hcat(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.rows, other.rows, "hcat row mismatch");
        let mut cols = self.columns();
        cols.extend(other.columns());
        let mut degs = self.col_degs.clone();
        degs.extend_from_slice(&other.col_degs);
        let mut m = PolyMatrix::from_columns(&self.ring, self.row_degs.clone(), cols);
        m.col_degs = degs;
        m
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &PolyMatrix) -> PolyMatrix {
        let mut m = PolyMatrix::zero(&self.ring, self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                m.set(self.rows + i, self.cols + j, other.get(i, j).clone());
            }
        }
        m.row_degs = [self.row_degs.clone(), other.row_degs.clone()].concat();
        m.col_degs = [self.col_degs.clone(), other.col_degs.clone()].concat();
        m
    }

    pub fn select_columns(&self, keep: &[usize]) -> PolyMatrix {
        let mut m = PolyMatrix::zero(&self.ring, self.rows, keep.len());
        for (jj, &j) in keep.iter().enumerate() {
            for i in 0..self.rows {
                m.set(i, jj, self.get(i, j).clone());
            }
        }
        m.row_degs = self.row_degs.clone();
        m.col_degs = keep.iter().map(|&j| self.col_degs[j]).collect();
        m
    }

    pub fn select_rows(&self, keep: &[usize]) -> PolyMatrix {
        let mut m = PolyMatrix::zero(&self.ring, keep.len(), self.cols);
        for (ii, &i) in keep.iter().enumerate() {
            for j in 0..self.cols {
                m.set(ii, j, self.get(i, j).clone());
            }
        }
        m.row_degs = keep.iter().map(|&i| self.row_degs[i]).collect();
        m.col_degs = self.col_degs.clone();
        m
    }

    /// Drops zero columns.
    pub fn compress(&self) -> PolyMatrix {
        let keep: Vec<usize> =
            (0..self.cols).filter(|&j| (0..self.rows).any(|i| !self.get(i, j).is_zero())).collect();
        self.select_columns(&keep)
    }

    /// Moves every entry into `target` (variables matched by name).
    pub fn to_ring(&self, target: &PolyRing) -> Result<PolyMatrix> {
        let mut m = PolyMatrix::zero(target, self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j).to_ring(target)?);
            }
        }
        m.row_degs = self.row_degs.clone();
        m.col_degs = self.col_degs.clone();
        Ok(m)
    }

    pub fn eval(&self, point: &[Coeff]) -> Vec<Vec<Coeff>> {
        (0..self.rows).map(|i| (0..self.cols).map(|j| self.get(i, j).eval(point)).collect()).collect()
    }

    /// Determinant of the square submatrix on `rows` x `cols` by cofactor
    /// expansion memoized on column subsets.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Poly {
        let t = rows.len();
        assert_eq!(t, cols.len());
        if t == 0 {
            return Poly::one(&self.ring);
        }
        assert!(t <= 20, "minor too large");
        let mut memo: HashMap<u32, Poly> = HashMap::new();
        self.minor_rec(rows, cols, 0, (1u32 << t) - 1, &mut memo)
    }

    fn minor_rec(&self, rows: &[usize], cols: &[usize], k: usize, mask: u32, memo: &mut HashMap<u32, Poly>) -> Poly {
        if k == rows.len() {
            return Poly::one(&self.ring);
        }
        if let Some(p) = memo.get(&mask) {
            return p.clone();
        }
        let mut acc = Poly::zero(&self.ring);
        let mut sign_pos = 0;
        for (c, &col) in cols.iter().enumerate() {
            if mask & (1 << c) == 0 {
                continue;
            }
            let a = self.get(rows[k], col);
            if !a.is_zero() {
                let sub = self.minor_rec(rows, cols, k + 1, mask & !(1 << c), memo);
                if !sub.is_zero() {
                    let term = a * &sub;
                    acc = if sign_pos % 2 == 0 { &acc + &term } else { &acc - &term };
                }
            }
            sign_pos += 1;
        }
        memo.insert(mask, acc.clone());
        acc
    }

    /// All nonzero `t`-minors (duplicates up to scalars removed).
    pub fn minors(&self, t: usize) -> Result<Vec<Poly>> {
        if t == 0 {
            return Ok(vec![Poly::one(&self.ring)]);
        }
        if t > self.rows || t > self.cols {
            return Ok(Vec::new());
        }
        let count = binomial(self.rows, t).saturating_mul(binomial(self.cols, t));
        if count > MAX_MINORS {
            return Err(Error::Budget(format!("{count} minors of size {t}")));
        }
        // Level-by-level expansion along the first chosen row.
        let mut level: HashMap<(u64, u64), Poly> = HashMap::new();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let p = self.get(i, j);
                if !p.is_zero() {
                    level.insert((1 << i, 1 << j), p.clone());
                }
            }
        }
        for k in 2..=t {
            let mut next: HashMap<(u64, u64), Poly> = HashMap::new();
            for rs in subsets(self.rows, k) {
                let rmask: u64 = rs.iter().map(|&i| 1u64 << i).sum();
                let r0 = rs[0];
                let rest = rmask & !(1 << r0);
                for cs in subsets(self.cols, k) {
                    let cmask: u64 = cs.iter().map(|&j| 1u64 << j).sum();
                    let mut acc = Poly::zero(&self.ring);
                    for (pos, &c) in cs.iter().enumerate() {
                        let a = self.get(r0, c);
                        if a.is_zero() {
                            continue;
                        }
                        if let Some(sub) = level.get(&(rest, cmask & !(1 << c))) {
                            let term = a * sub;
                            acc = if pos % 2 == 0 { &acc + &term } else { &acc - &term };
                        }
                    }
                    if !acc.is_zero() {
                        next.insert((rmask, cmask), acc);
                    }
                }
            }
            level = next;
        }
        let mut keys: Vec<&(u64, u64)> = level.keys().collect();
        keys.sort();
        let mut out: Vec<Poly> = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for k in keys {
            let p = &level[k];
            if seen.insert(p.monic()) {
                out.push(p.clone());
            }
        }
        Ok(out)
    }

    /// Rank over the fraction field. Estimated at random points and certified
    /// by one exactly computed nonzero minor, which is returned with its position.
    pub fn rank_with_witness(&self, seed: u64) -> (usize, Option<(Vec<usize>, Vec<usize>, Poly)>) {
        let field = self.ring.field();
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x005e_ed0f_4a4c);
        let mut best: (usize, Vec<usize>, Vec<usize>) = (0, vec![], vec![]);
        for _ in 0..3 {
            let point: Vec<Coeff> = (0..self.ring.nvars()).map(|_| field.random(&mut rng)).collect();
            let vals = self.eval(&point);
            let (r, pr, pc) = scalar_rank(field, vals);
            if r > best.0 {
                best = (r, pr, pc);
            }
            if best.0 == self.rows.min(self.cols) {
                break;
            }
        }
        if best.0 == 0 {
            return (0, None);
        }
        let (mut rows, mut cols) = (best.1, best.2);
        rows.sort();
        cols.sort();
        let m = self.minor(&rows, &cols);
        assert!(!m.is_zero(), "minor vanishing at a point where it was nonzero");
        (best.0, Some((rows, cols, m)))
    }

    pub fn rank(&self) -> usize {
        self.rank_with_witness(0).0
    }
}

/// Rank of a scalar matrix with pivot rows and columns.
pub fn scalar_rank(field: FieldSpec, mut a: Vec<Vec<Coeff>>) -> (usize, Vec<usize>, Vec<usize>) {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut row_of: Vec<usize> = (0..rows).collect();
    let mut prow = Vec::new();
    let mut pcol = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !field.is_zero(&a[i][c])) else { continue };
        a.swap(r, p);
        row_of.swap(r, p);
        let inv = field.inv(&a[r][c]);
        for i in r + 1..rows {
            if field.is_zero(&a[i][c]) {
                continue;
            }
            let factor = field.mul(&a[i][c], &inv);
            for k in c..cols {
                let t = field.mul(&factor, &a[r][k]);
                a[i][k] = field.sub(&a[i][k], &t);
            }
        }
        prow.push(row_of[r]);
        pcol.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    (r, prow, pcol)
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: usize = 1;
    for i in 0..k {
        acc = acc.saturating_mul(n - i) / (i + 1);
    }
    acc
}

/// All increasing `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "PolyMatrix {}x{} rows{:?} cols{:?}", self.rows, self.cols, self.row_degs, self.col_degs)?;
        for i in 0..self.rows {
            let r: Vec<String> = self.row(i).iter().map(|p| p.to_string()).collect();
            writeln!(f, "  [{}]", r.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    #[test]
    fn minors_and_rank() {
        let r = PolyRing::new(FieldSpec::default(), &["x", "y"]).unwrap();
        let p = |s: &str| parse_poly(&r, s).unwrap();
        let m = PolyMatrix::from_rows(&r, vec![vec![p("y"), p("0")], vec![p("-x"), p("y")], vec![p("0"), p("-x")]], vec![0, 0, 0])
            .unwrap();
        let m2 = m.minors(2).unwrap();
        assert_eq!(m2.len(), 3);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.minor(&[0, 1], &[0, 1]), p("y^2"));
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(subsets(4, 2).len(), 6);
    }
}
