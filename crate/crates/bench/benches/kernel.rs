use criterion::{criterion_group, criterion_main, Criterion};
use reeslab::{parse_poly, FieldSpec, IdealData, PModule, PolyRing, ReesPackage};

fn ring(vars: &[&str]) -> PolyRing {
    PolyRing::new(FieldSpec::default(), vars).unwrap()
}

fn ideal(r: &PolyRing, gens: &[&str]) -> IdealData {
    IdealData::parse(r, gens).unwrap()
}

fn groebner(c: &mut Criterion) {
    let r = ring(&["x", "y", "z", "w"]);
    let gens = ["x^3 - y*z*w", "y^3 - x*z*w", "z^3 - x*y*w", "x*y + z*w"];
    c.bench_function("gb/four cubics", |b| b.iter(|| ideal(&r, &gens).groebner_basis().unwrap()));
}

fn saturation(c: &mut Criterion) {
    let r = ring(&["x", "y", "z"]);
    let f = parse_poly(&r, "x + y + z").unwrap();
    let i = ["x^2*y - z^3", "x*y^2 - x*z^2"];
    c.bench_function("saturation/graded", |b| b.iter(|| ideal(&r, &i).saturate_poly_graded(&f).unwrap()));
    c.bench_function("saturation/iterated", |b| b.iter(|| ideal(&r, &i).saturate_poly_iterated(&f).unwrap()));
}

fn rees(c: &mut Criterion) {
    let r = ring(&["x", "y", "z", "w"]);
    c.bench_function("rees/segre", |b| {
        b.iter(|| {
            let m = PModule::from_ideal(&ideal(&r, &["x*z", "x*w", "y*z", "y*w"])).unwrap();
            ReesPackage::new(&m).unwrap().rees_ideal.groebner_basis().unwrap()
        })
    });
}

fn resolution(c: &mut Criterion) {
    let r = ring(&["x", "y", "z", "w"]);
    c.bench_function("resolution/cube of maximal ideal", |b| {
        b.iter(|| {
            let gens: Vec<String> = (0..=3u16)
                .flat_map(|a| (0..=3 - a).flat_map(move |b| (0..=3 - a - b).map(move |c| (a, b, c))))
                .map(|(a, b, c)| format!("x^{a}*y^{b}*z^{c}*w^{}", 3 - a - b - c))
                .collect();
            let refs: Vec<&str> = gens.iter().map(|s| s.as_str()).collect();
            PModule::cyclic(&ideal(&r, &refs)).unwrap().resolution().unwrap()
        })
    });
}

criterion_group!(benches, groebner, saturation, rees, resolution);
criterion_main!(benches);
