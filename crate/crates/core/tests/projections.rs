use std::f64::consts::PI;
use std::sync::Arc;

use dunkl_osc::funcspace::*;
use dunkl_osc::projections::*;
use dunkl_osc::special::Order;
use dunkl_osc::transforms::{fourier, Boundary, DunklOperator};
use dunkl_osc::Error;
use num_complex::Complex;

fn spatial(n_half: usize) -> Arc<Grid<f64>> {
    Arc::new(make_graded_grid::<f64>(-CORPUS_WINDOW, CORPUS_WINDOW, n_half / 32, 32, 1.0).unwrap())
}

fn order(a: f64) -> Order<f64> {
    Order::new(a).unwrap()
}

fn l2(f: &SampledFn<f64>, e: f64) -> f64 {
    f.points()
        .iter()
        .zip(f.grid().weights())
        .zip(f.values())
        .map(|((x, w), v)| w * x.abs().powf(e) * v.norm_sqr())
        .sum::<f64>()
        .sqrt()
}

fn diff(a: &SampledFn<f64>, b: &SampledFn<f64>) -> SampledFn<f64> {
    a.combine(Complex::new(1.0, 0.0), b, Complex::new(-1.0, 0.0)).unwrap()
}

#[test]
fn converges_at_band_limit() {
    let x = spatial(512);
    for a in [-0.5, 0.0, 0.5, 1.0] {
        let p = DunklProjector::new(order(a), x.clone()).unwrap();
        for e in default_corpus::<f64>(7) {
            let f = e.func.sample(x.clone(), Domain::FullLine).unwrap();
            let s = p.partial_sum(&f, p.band()).unwrap();
            let ex = 2.0 * a + 1.0;
            let rel = l2(&diff(&s, &f), ex) / l2(&f, ex);
            assert!(rel <= 1e-5, "alpha={a} {} rel={rel}", e.name);
        }
    }
}

#[test]
fn zero_and_band_errors() {
    let x = spatial(256);
    let z = SampledFn::zero(x.clone(), Domain::FullLine).unwrap();
    assert_eq!(dunkl_partial_sum(order(0.0), &z, 2.0).unwrap().sup_norm(), 0.0);
    assert_eq!(fourier_partial_sum(&z, 2.0).unwrap().sup_norm(), 0.0);
    let band = x.resolvable_frequency();
    assert!(matches!(dunkl_partial_sum(order(0.0), &z, band * 1.5), Err(Error::Resolution(_))));
    let h = Arc::new(x.positive_half().unwrap());
    let zh = SampledFn::zero(h, Domain::HalfLine).unwrap();
    assert_eq!(hankel_partial_sum(order(1.0), &zh, 3.0).unwrap().sup_norm(), 0.0);
    assert_eq!(radial_partial_sum(3, &zh, 3.0).unwrap().sup_norm(), 0.0);
}

#[test]
fn fourier_partial_sum_is_periodic_dirichlet_kernel() {
    let x = spatial(256);
    let r = CORPUS_WINDOW;
    let f = bump(0.5, 2.5).sample(x.clone(), Domain::FullLine).unwrap();
    for t in [0.5, 1.0, 2.0, 4.0, 7.3] {
        let s = fourier_partial_sum(&f, t).unwrap();
        let k = (t * r / PI).floor();
        for (i, &xi) in x.points().iter().enumerate().step_by(7) {
            let mut acc = 0.0;
            for ((&y, &w), v) in x.points().iter().zip(x.weights()).zip(f.values()) {
                let d = xi - y;
                let kern = if d.abs() < 1e-12 {
                    (2.0 * k + 1.0) / (2.0 * r)
                } else {
                    ((k + 0.5) * PI * d / r).sin() / (2.0 * r * (PI * d / (2.0 * r)).sin())
                };
                acc += w * v.re * kern;
            }
            assert!((s.values()[i].re - acc).abs() <= 1e-7, "t={t} x={xi}");
            assert!(s.values()[i].im.abs() <= 1e-12);
        }
    }
}

#[test]
fn continuous_cut_matches_sinc_convolution() {
    let x = spatial(256);
    let f = bump(-0.5, 2.0).sample(x.clone(), Domain::FullLine).unwrap();
    for t in [1.0, 2.5, 4.0] {
        let freq = Arc::new(make_graded_grid::<f64>(-t, t, 8, 32, 1.0).unwrap());
        let ff = fourier(&f, &freq).unwrap();
        let out = Arc::new(make_graded_grid::<f64>(-5.0, 5.0, 2, 8, 1.0).unwrap());
        let inv = DunklOperator::new(order(-0.5), false, true, freq, out.clone()).unwrap();
        let s = inv.apply(&ff).unwrap();
        for (i, &xi) in out.points().iter().enumerate() {
            let mut acc = 0.0;
            for ((&y, &w), v) in x.points().iter().zip(x.weights()).zip(f.values()) {
                let d = xi - y;
                let kern = if d.abs() < 1e-12 { t / PI } else { (t * d).sin() / (PI * d) };
                acc += w * v.re * kern;
            }
            assert!((s.values()[i] - acc).norm() <= 1e-7, "t={t} x={xi}");
        }
    }
}

#[test]
fn partial_sum_decomposition() {
    let x = spatial(512);
    let half = Arc::new(x.positive_half().unwrap());
    for a in [-0.5, 0.0, 0.5, 1.0] {
        let full = DunklProjector::new(order(a), x.clone()).unwrap();
        let even = HankelProjector::new(order(a), half.clone(), Boundary::Neumann).unwrap();
        let odd = HankelProjector::new(order(a + 1.0), half.clone(), Boundary::Dirichlet).unwrap();
        for e in default_corpus::<f64>(7) {
            let f = e.func.sample(x.clone(), Domain::FullLine).unwrap();
            let (fe, fo) = even_odd_split(&f).unwrap();
            let q = divide_by_x(&fo);
            for t in [0.5, 1.0, 2.0, 4.0] {
                let s = full.partial_sum(&f, t).unwrap();
                let se = lift_half(&even.partial_sum(&fe, t).unwrap(), &x, false).unwrap();
                let so = lift_half(&odd.partial_sum(&q, t).unwrap(), &x, true).unwrap();
                let rhs = se.combine(Complex::new(1.0, 0.0), &so, Complex::new(1.0, 0.0)).unwrap();
                let d = s.max_abs_diff(&rhs).unwrap();
                assert!(d <= 1e-8, "alpha={a} {} t={t} d={d}", e.name);
            }
        }
    }
}

#[test]
fn projection_algebra() {
    let x = spatial(512);
    let ts = [0.5, 1.0, 2.0, 4.0];
    for a in [-0.5, 0.0, 1.0] {
        let p = DunklProjector::new(order(a), x.clone()).unwrap();
        for e in default_corpus::<f64>(7) {
            let f = e.func.sample(x.clone(), Domain::FullLine).unwrap();
            for &t in &ts {
                let st = p.partial_sum(&f, t).unwrap();
                for &s in &ts {
                    let sst = p.partial_sum(&st, s).unwrap();
                    let smin = p.partial_sum(&f, s.min(t)).unwrap();
                    let d = sst.max_abs_diff(&smin).unwrap();
                    assert!(d <= 1e-8, "alpha={a} {} s={s} t={t} d={d}", e.name);
                }
            }
        }
    }
}

#[test]
fn contractive_and_monotone() {
    let x = spatial(512);
    let grid = ThresholdSeq::default_grid(x.resolvable_frequency()).unwrap();
    for a in [-0.5, 0.0, 1.0] {
        let p = DunklProjector::new(order(a), x.clone()).unwrap();
        let ex = 2.0 * a + 1.0;
        for e in default_corpus::<f64>(7) {
            let f = e.func.sample(x.clone(), Domain::FullLine).unwrap();
            let fam = p.family(&f, &grid).unwrap();
            let nf = l2(&f, ex);
            let mut prev = 0.0;
            for k in 0..fam.n_rows() {
                let n = l2(&fam.row(k).unwrap(), ex);
                assert!(n <= nf * (1.0 + 1e-6), "contractivity alpha={a} {}", e.name);
                assert!(n + 1e-8 >= prev, "monotone alpha={a} {}", e.name);
                prev = n;
            }
        }
    }
}

#[test]
fn hankel_partial_sums() {
    let x = spatial(512);
    let half = Arc::new(x.positive_half().unwrap());
    let f = bump(2.6, 2.4).sample(half.clone(), Domain::HalfLine).unwrap();
    for a in [-0.5, 0.0, 1.0] {
        let p = HankelProjector::new(order(a), half.clone(), Boundary::Neumann).unwrap();
        let s = p.partial_sum(&f, p.band()).unwrap();
        let ex = 2.0 * a + 1.0;
        assert!(l2(&diff(&s, &f), ex) / l2(&f, ex) <= 1e-5);
        let s1 = p.partial_sum(&f, 1.5).unwrap();
        let s2 = p.partial_sum(&s1, 1.5).unwrap();
        assert!(s1.max_abs_diff(&s2).unwrap() <= 1e-8);
    }
}

#[test]
fn radial_sums() {
    let x = spatial(512);
    let half = Arc::new(x.positive_half().unwrap());
    let b = bump(0.0, 3.0);
    let f0 = b.sample(half.clone(), Domain::HalfLine).unwrap();
    let f = b.sample(x.clone(), Domain::FullLine).unwrap();
    for t in [0.5, 2.0, 4.0] {
        let r1 = radial_partial_sum(1, &f0, t).unwrap();
        let s = fourier_partial_sum(&f, t).unwrap();
        let d = lift_half(&r1, &x, false).unwrap().max_abs_diff(&s).unwrap();
        assert!(d <= 1e-8, "t={t} d={d}");
    }
    let f3 = bump(1.5, 2.0).sample(half, Domain::HalfLine).unwrap();
    for (s, t) in [(1.0, 2.0), (2.0, 1.0), (3.0, 3.0)] {
        let a = radial_partial_sum(3, &radial_partial_sum(3, &f3, t).unwrap(), s).unwrap();
        let b = radial_partial_sum(3, &f3, f64::min(s, t)).unwrap();
        assert!(a.max_abs_diff(&b).unwrap() <= 1e-8);
    }
}

#[test]
fn families() {
    let x = spatial(512);
    let f = bump(0.0, 2.5).sample(x.clone(), Domain::FullLine).unwrap();
    let single = ThresholdSeq::new(vec![1.7]).unwrap();
    let fam = build_family(order(0.5), &f, &single).unwrap();
    assert_eq!(fam.n_rows(), 1);
    let d = fam.row(0).unwrap().max_abs_diff(&dunkl_partial_sum(order(0.5), &f, 1.7).unwrap()).unwrap();
    assert!(d <= 1e-13);
    let dy = ThresholdSeq::dyadic(-3, 5).unwrap();
    assert_eq!(build_family(order(0.0), &f, &dy).unwrap().n_rows(), 9);
    let grid = ThresholdSeq::default_grid(x.resolvable_frequency()).unwrap();
    for a in [-0.5, 0.0, 1.0] {
        for e in default_corpus::<f64>(7) {
            let g = e.func.sample(x.clone(), Domain::FullLine).unwrap();
            let fam = build_family(order(a), &g, &grid).unwrap();
            let errs: Vec<f64> = (0..fam.n_rows()).map(|k| l2(&diff(&fam.row(k).unwrap(), &g), 2.0 * a + 1.0)).collect();
            let last = *errs.last().unwrap();
            let slack = 1e-12 * l2(&g, 2.0 * a + 1.0);
            assert!(errs.iter().all(|&e| last <= e + slack), "alpha={a} {}", e.name);
        }
    }
}

#[test]
fn family_csv_header() {
    let x = Arc::new(make_graded_grid::<f64>(-6.0, 6.0, 2, 8, 1.0).unwrap());
    let f = bump(0.0, 2.5).sample(x, Domain::FullLine).unwrap();
    let fam = build_family(order(0.0), &f, &ThresholdSeq::dyadic(-1, 1).unwrap()).unwrap();
    let mut buf = Vec::new();
    fam.write_csv(&mut buf).unwrap();
    let text = String::from_utf8(buf).unwrap();
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with(FAMILY_HEADER));
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(header.len(), 5);
    assert_eq!(header[2].parse::<f64>().unwrap(), 0.5);
    assert_eq!(lines.count(), 2 * 32);
}
