use super::gamma::gamma;
use super::Order;
use crate::error::{Error, Result};
use crate::real::Real;

const SERIES_MAX: f64 = 10.0;
const ASYMPTOTIC_MIN: f64 = 30.0;

/// `J_α(u)` for `u ≥ 0`.
///
/// Ascending series for `u ≤ 10`, Miller backward recurrence for
/// `10 < u < 30`, Hankel asymptotic expansion beyond. Orders ±1/2 use the
/// closed trigonometric forms.
pub fn bessel_j<T: Real>(order: Order<T>, u: T) -> Result<T> {
    check_arg(u)?;
    Ok(bessel_j_raw(order.alpha(), u))
}

/// `J_α(u)/u^α`, continuously extended at `u = 0` by `1/(2^α Γ(α+1))`.
pub fn bessel_j_normalized<T: Real>(order: Order<T>, u: T) -> Result<T> {
    check_arg(u)?;
    Ok(bessel_j_normalized_raw(order.alpha(), u))
}

fn check_arg<T: Real>(u: T) -> Result<()> {
    if u >= T::zero() {
        Ok(())
    } else {
        Err(Error::domain(format!("Bessel argument must be nonnegative, got {u}")))
    }
}

fn is_half<T: Real>(nu: T, target: f64) -> bool {
    nu == T::lit(target)
}

/// Unchecked `J_ν(u)`; `ν ≥ −1/2`, `u ≥ 0`.
pub fn bessel_j_raw<T: Real>(nu: T, u: T) -> T {
    if is_half(nu, 0.5) || is_half(nu, -0.5) {
        if u == T::zero() {
            return if nu > T::zero() { T::zero() } else { T::infinity() };
        }
        let env = (T::lit(2.0) / (T::PI() * u)).sqrt();
        return if nu > T::zero() { env * u.sin() } else { env * u.cos() };
    }
    if u <= T::lit(SERIES_MAX) {
        if u == T::zero() {
            return if nu == T::zero() { T::one() } else { T::zero() };
        }
        return series_normalized(nu, u) * u.powf(nu);
    }
    if u < T::lit(ASYMPTOTIC_MIN) {
        return miller(nu, u);
    }
    hankel_asymptotic(nu, u)
}

/// Unchecked `J_ν(u)/u^ν`.
pub fn bessel_j_normalized_raw<T: Real>(nu: T, u: T) -> T {
    let two_over_pi = (T::lit(2.0) / T::PI()).sqrt();
    if is_half(nu, 0.5) {
        if u == T::zero() {
            return two_over_pi;
        }
        return two_over_pi * u.sin() / u;
    }
    if is_half(nu, -0.5) {
        return two_over_pi * u.cos();
    }
    if u <= T::lit(SERIES_MAX) {
        return series_normalized(nu, u);
    }
    bessel_j_raw(nu, u) / u.powf(nu)
}

/// `Σ_k (−1)^k (u²/4)^k / (k! Γ(ν+k+1)) / 2^ν`.
fn series_normalized<T: Real>(nu: T, u: T) -> T {
    let mut term = T::one() / (T::lit(2.0).powf(nu) * gamma(nu + T::one()));
    let mut sum = term;
    let q = -(u * u) / T::lit(4.0);
    let eps = T::epsilon() * T::lit(0.01);
    for k in 1..400 {
        let kf = T::from_count(k);
        term = term * q / (kf * (nu + kf));
        sum += term;
        if term.abs() <= eps * sum.abs() && kf > u {
            break;
        }
    }
    sum
}

/// Miller's backward recurrence normalized by
/// `(u/2)^{ν0} = Σ_k (ν0+2k) Γ(ν0+k)/k! · J_{ν0+2k}(u)`.
fn miller<T: Real>(nu: T, u: T) -> T {
    let m = nu.floor().to_usize().unwrap_or(0);
    let nu0 = nu - T::from_count(m);
    let start = m.max(u.ceil().to_usize().unwrap_or(0)) + 60;
    let start = start + (start % 2);
    let mut f = vec![T::zero(); start + 2];
    f[start] = T::lit(1e-30);
    let big = T::max_value().sqrt().sqrt();
    for n in (1..=start).rev() {
        let next = T::lit(2.0) * (nu0 + T::from_count(n)) / u * f[n] - f[n + 1];
        f[n - 1] = next;
        if next.abs() > big {
            let s = T::one() / big;
            for v in f[n - 1..].iter_mut() {
                *v *= s;
            }
        }
    }
    let mut sum = gamma(nu0 + T::one()) * f[0];
    let mut g = gamma(nu0 + T::one());
    let mut k = 1;
    while 2 * k <= start {
        let kf = T::from_count(k);
        if k > 1 {
            g = g * (nu0 + kf - T::one()) / kf;
        }
        sum += (nu0 + T::lit(2.0) * kf) * g * f[2 * k];
        k += 1;
    }
    f[m] * (u / T::lit(2.0)).powf(nu0) / sum
}

fn hankel_asymptotic<T: Real>(nu: T, u: T) -> T {
    let mu = T::lit(4.0) * nu * nu;
    let mut p = T::zero();
    let mut q = T::zero();
    let mut a = T::one();
    let mut last = T::infinity();
    let eps = T::epsilon() * T::lit(0.01);
    for k in 0..200usize {
        if k > 0 {
            let odd = T::from_count(2 * k - 1);
            a = a * (mu - odd * odd) / (T::from_count(k) * T::lit(8.0) * u);
        }
        let mag = a.abs();
        if mag > last {
            break;
        }
        let sign = if (k / 2) % 2 == 0 { T::one() } else { -T::one() };
        if k % 2 == 0 {
            p += sign * a;
        } else {
            q += sign * a;
        }
        if mag <= eps {
            break;
        }
        last = mag;
    }
    let chi = u - (nu / T::lit(2.0) + T::lit(0.25)) * T::PI();
    (T::lit(2.0) / (T::PI() * u)).sqrt() * (p * chi.cos() - q * chi.sin())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ord(a: f64) -> Order<f64> {
        Order::new(a).unwrap()
    }

    /// Bessel's integral for integer orders; the trapezoid rule is spectrally
    /// accurate for this periodic integrand.
    fn integer_oracle(n: i32, u: f64) -> f64 {
        let m = 4000;
        let h = std::f64::consts::PI / m as f64;
        let mut s = 0.0;
        for k in 0..=m {
            let tau = k as f64 * h;
            let w = if k == 0 || k == m { 0.5 } else { 1.0 };
            s += w * (n as f64 * tau - u * tau.sin()).cos();
        }
        s * h / std::f64::consts::PI
    }

    #[test]
    fn closed_forms() {
        let pi = std::f64::consts::PI;
        assert!((bessel_j(ord(0.5), pi / 2.0).unwrap() - 2.0 / pi).abs() < 1e-15);
        assert!((bessel_j(ord(-0.5), pi).unwrap() + 2f64.sqrt() / pi).abs() < 1e-15);
    }

    #[test]
    fn normalized_limits() {
        let v = bessel_j_normalized(ord(-0.5), 0.0).unwrap();
        assert!((v - (2.0 / std::f64::consts::PI).sqrt()).abs() < 1e-15);
        assert!((bessel_j_normalized(ord(0.0), 0.0).unwrap() - 1.0).abs() < 1e-15);
        for &a in &[-0.5, 0.0, 0.5, 1.0, 1.5, 2.0, 0.3] {
            let at0 = bessel_j_normalized(ord(a), 0.0).unwrap();
            let near = bessel_j_normalized(ord(a), 1e-8).unwrap();
            assert!((at0 - near).abs() < 1e-7, "alpha={a}");
        }
    }

    #[test]
    fn negative_argument_rejected() {
        assert!(matches!(bessel_j(ord(0.0), -1.0), Err(Error::Domain(_))));
    }

    #[test]
    fn integer_orders_against_integral() {
        for n in 0..4 {
            for i in 0..400 {
                let u = 0.05 + i as f64 * 0.25;
                let got = bessel_j(ord(n as f64), u).unwrap();
                let want = integer_oracle(n, u);
                let tol = if u <= 10.0 { 1e-12 } else { 1e-10 * (2.0 / (std::f64::consts::PI * u)).sqrt() };
                assert!((got - want).abs() <= tol, "n={n} u={u} got={got} want={want}");
            }
        }
    }

    #[test]
    fn j1_at_2_5() {
        let want = integer_oracle(1, 2.5);
        assert!((bessel_j(ord(1.0), 2.5).unwrap() - want).abs() < 1e-12);
    }

    #[test]
    fn regimes_agree_at_split_points() {
        for &a in &[0.0f64, 0.25, 1.0, 1.5, 2.0, 2.75] {
            let u = 10.0f64;
            let s = series_normalized(a, u) * u.powf(a);
            assert!((s - miller(a, u)).abs() < 1e-12, "a={a} series/miller");
            let u = 30.0f64;
            let env = (2.0 / (std::f64::consts::PI * u)).sqrt();
            assert!((miller(a, u) - hankel_asymptotic(a, u)).abs() < 1e-10 * env, "a={a} miller/asymptotic");
        }
    }

    #[test]
    fn recurrence_consistency() {
        for &a in &[0.5, 1.0, 1.25, 2.0, 3.0] {
            for i in 0..500 {
                let u = 0.1 + i as f64 * 0.1;
                let lhs = bessel_j_raw(a - 1.0, u) + bessel_j_raw(a + 1.0, u);
                let rhs = 2.0 * a / u * bessel_j_raw(a, u);
                let scale = 1.0 + rhs.abs().max(lhs.abs());
                assert!((lhs - rhs).abs() <= 1e-9 * scale, "a={a} u={u}");
            }
        }
    }

    #[test]
    fn normalized_times_power() {
        for &a in &[-0.5, 0.0, 0.5, 1.0, 1.5, 2.0] {
            for i in 1..300 {
                let u = i as f64 * 0.37;
                let j = bessel_j(ord(a), u).unwrap();
                let n = bessel_j_normalized(ord(a), u).unwrap();
                assert!((n * u.powf(a) - j).abs() <= 1e-10 * (1.0 + j.abs()), "a={a} u={u}");
            }
        }
    }

    #[test]
    fn f32_instantiation() {
        let v = bessel_j_raw(0.0f32, 2.5f32);
        assert!((v as f64 - integer_oracle(0, 2.5)).abs() < 1e-5);
    }
}
