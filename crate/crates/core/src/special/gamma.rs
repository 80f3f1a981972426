use crate::real::Real;

const LANCZOS_G: f64 = 7.0;
const LANCZOS_P: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Gamma function via the Lanczos approximation (g = 7, 9 terms) with
/// reflection for arguments below 1/2.
pub fn gamma<T: Real>(x: T) -> T {
    let half = T::lit(0.5);
    if x < half {
        let pi = T::PI();
        return pi / ((pi * x).sin() * gamma(T::one() - x));
    }
    let x = x - T::one();
    let mut a = T::lit(LANCZOS_P[0]);
    let t = x + T::lit(LANCZOS_G) + half;
    for (i, &p) in LANCZOS_P.iter().enumerate().skip(1) {
        a += T::lit(p) / (x + T::from_count(i));
    }
    (T::lit(2.0) * T::PI()).sqrt() * t.powf(x + half) * (-t).exp() * a
}

/// Logarithm of `|Γ(x)|` for `x > 0`.
pub fn ln_gamma<T: Real>(x: T) -> T {
    let half = T::lit(0.5);
    if x < half {
        return gamma(x).abs().ln();
    }
    let x = x - T::one();
    let mut a = T::lit(LANCZOS_P[0]);
    let t = x + T::lit(LANCZOS_G) + half;
    for (i, &p) in LANCZOS_P.iter().enumerate().skip(1) {
        a += T::lit(p) / (x + T::from_count(i));
    }
    half * (T::lit(2.0) * T::PI()).ln() + (x + half) * t.ln() - t + a.ln()
}
