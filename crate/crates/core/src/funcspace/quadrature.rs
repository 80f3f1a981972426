use crate::real::Real;

/// Gauss–Legendre nodes and weights on [−1, 1], ascending.
///
/// Newton iteration on the three-term recurrence from the Tricomi initial
/// guesses; nodes are symmetrized exactly.
pub fn gauss_legendre<T: Real>(n: usize) -> (Vec<T>, Vec<T>) {
    assert!(n > 0, "gauss_legendre needs at least one node");
    let mut x = vec![T::zero(); n];
    let mut w = vec![T::zero(); n];
    let nf = T::from_count(n);
    let m = n.div_ceil(2);
    for i in 0..m {
        let k = T::from_count(i + 1);
        let mut z = (T::PI() * (k - T::lit(0.25)) / (nf + T::lit(0.5))).cos();
        let mut dp = T::one();
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, z);
            dp = d;
            let dz = p / d;
            z -= dz;
            if dz.abs() <= T::epsilon() * T::lit(4.0) {
                break;
            }
        }
        let (_, d) = legendre_with_derivative(n, z);
        if d != T::zero() {
            dp = d;
        }
        let wi = T::lit(2.0) / ((T::one() - z * z) * dp * dp);
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = wi;
        w[n - 1 - i] = wi;
    }
    if n % 2 == 1 {
        x[n / 2] = T::zero();
    }
    (x, w)
}

fn legendre_with_derivative<T: Real>(n: usize, z: T) -> (T, T) {
    let mut p0 = T::one();
    let mut p1 = z;
    if n == 0 {
        return (T::one(), T::zero());
    }
    for k in 2..=n {
        let kf = T::from_count(k);
        let p2 = ((T::lit(2.0) * kf - T::one()) * z * p1 - (kf - T::one()) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let nf = T::from_count(n);
    let d = nf * (z * p1 - p0) / (z * z - T::one());
    (p1, d)
}
