#![allow(dead_code)]

use reeslab::{parse_poly, FieldSpec, IdealData, PModule, Poly, PolyMatrix, PolyRing};

pub fn ring(vars: &[&str]) -> PolyRing {
    PolyRing::new(FieldSpec::default(), vars).unwrap()
}

pub fn p(r: &PolyRing, s: &str) -> Poly {
    parse_poly(r, s).unwrap()
}

pub fn ideal(r: &PolyRing, gens: &[&str]) -> IdealData {
    IdealData::parse(r, gens).unwrap()
}

/// Matrix from rows of polynomial strings, generator degrees inferred.
pub fn module(r: &PolyRing, rows: &[&[&str]]) -> PModule {
    let rows: Vec<Vec<Poly>> = rows.iter().map(|row| row.iter().map(|s| p(r, s)).collect()).collect();
    let n = rows.len();
    PModule::from_matrix(PolyMatrix::from_rows(r, rows, vec![0; n]).unwrap()).unwrap()
}

pub fn ideal_module(r: &PolyRing, gens: &[&str]) -> PModule {
    PModule::from_ideal(&ideal(r, gens)).unwrap()
}

pub fn row(r: &PolyRing, entries: &[&str]) -> PolyMatrix {
    let v: Vec<Poly> = entries.iter().map(|s| p(r, s)).collect();
    let degs: Vec<i64> = v.iter().map(|q| q.degree().unwrap_or(0) as i64).collect();
    let mut m = PolyMatrix::from_rows(r, vec![v], vec![0]).unwrap();
    m.set_col_degs(degs);
    m
}

/// Column strings of a matrix, for comparisons.
pub fn cols(m: &PolyMatrix) -> Vec<Vec<String>> {
    m.columns().iter().map(|c| c.iter().map(|q| q.to_string()).collect()).collect()
}
