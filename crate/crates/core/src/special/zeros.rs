use super::bessel::bessel_j_raw;
use crate::real::Real;

/// Positive zeros of `J_ν` (ν ≥ −1/2) not exceeding `u_max`, ascending.
///
/// Located by a sign-change scan with step 0.25 (zeros are more than π/2
/// apart) and refined by bisection to full precision.
pub fn bessel_zeros<T: Real>(nu: T, u_max: T) -> Vec<T> {
    let pi = T::PI();
    if nu == T::lit(0.5) || nu == T::lit(-0.5) {
        let shift = if nu > T::zero() { T::zero() } else { T::lit(0.5) };
        let mut out = Vec::new();
        let mut k = 1usize;
        loop {
            let z = (T::from_count(k) - shift) * pi;
            if z > u_max {
                return out;
            }
            out.push(z);
            k += 1;
        }
    }
    let step = T::lit(0.25);
    let mut out = Vec::new();
    let mut a = T::lit(1e-3);
    let mut fa = bessel_j_raw(nu, a);
    while a < u_max {
        let b = (a + step).min(u_max);
        let fb = bessel_j_raw(nu, b);
        if fb == T::zero() {
            out.push(b);
        } else if fa.signum() != fb.signum() && fa != T::zero() {
            out.push(bisect(nu, a, b, fa));
        }
        a = b;
        fa = fb;
    }
    out
}

fn bisect<T: Real>(nu: T, mut a: T, mut b: T, mut fa: T) -> T {
    for _ in 0..200 {
        let m = (a + b) / T::lit(2.0);
        if m <= a || m >= b {
            break;
        }
        let fm = bessel_j_raw(nu, m);
        if fm == T::zero() {
            return m;
        }
        if fm.signum() == fa.signum() {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    (a + b) / T::lit(2.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_zeros() {
        let z0: Vec<f64> = bessel_zeros(0.0, 10.0);
        let want = [2.404_825_557_695_773, 5.520_078_110_286_311, 8.653_727_912_911_012];
        assert_eq!(z0.len(), 3);
        for (a, b) in z0.iter().zip(want) {
            assert!((a - b).abs() < 1e-12);
        }
        let z1: Vec<f64> = bessel_zeros(1.0, 8.0);
        assert!((z1[0] - 3.831_705_970_207_512).abs() < 1e-12);
        assert!((z1[1] - 7.015_586_669_815_619).abs() < 1e-12);
    }

    #[test]
    fn half_orders_exact() {
        let z: Vec<f64> = bessel_zeros(0.5, 10.0);
        assert_eq!(z.len(), 3);
        assert_eq!(z[0], std::f64::consts::PI);
        let z: Vec<f64> = bessel_zeros(-0.5, 5.0);
        assert_eq!(z, vec![0.5 * std::f64::consts::PI, 1.5 * std::f64::consts::PI]);
    }

    #[test]
    fn far_zeros_are_zeros() {
        for &nu in &[1.5f64, 2.0, 3.0] {
            let z = bessel_zeros(nu, 800.0);
            for w in z.windows(2) {
                assert!(w[1] - w[0] > 2.5);
            }
            for &r in &z {
                assert!(bessel_j_raw(nu, r).abs() < 1e-13);
            }
        }
    }
}
