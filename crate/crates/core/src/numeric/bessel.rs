//! Modified Bessel function K_n and the incomplete moment integrals
//! G(j, m, x) = int_x^infty u^j K_m(u) du used by the L-value integrator.

use super::{bits_for_digits, euler_gamma, factorial};
use rug::ops::Pow;
use rug::Float;

/// K_0(x) and K_1(x) with relative error < 10^{-digits}, for x > 0.
///
/// Below the asymptotic cutoff the power series around 0 is used at a working
/// precision padded by x*log10(e) digits to absorb the e^{x}-size cancellation
/// between the I-part and the log part. Beyond the cutoff the divergent
/// asymptotic expansion truncated at its smallest term has remainder below
/// the first omitted term (orders 0 and 1 satisfy the DLMF validity
/// condition), which is below the target at the cutoff.
pub fn bessel_k01(x: &Float, digits: u32) -> (Float, Float) {
    assert!(x.is_sign_positive() && !x.is_zero(), "bessel_k requires x > 0");
    let cutoff = 1.16 * (digits as f64 + 6.0);
    if x.to_f64() >= cutoff {
        (k_asymptotic(0, x, digits), k_asymptotic(1, x, digits))
    } else {
        k01_series(x, digits)
    }
}

/// K_n(x) for integer n >= 0 with relative error < 10^{1-prec}.
/// K_{-n} = K_n, so callers with negative order take |n| first.
pub fn bessel_k(n: u32, x: &Float, prec: u32) -> Float {
    let digits = prec + 4 + n;
    let (k0, k1) = bessel_k01(x, digits);
    if n == 0 {
        return k0;
    }
    if n == 1 {
        return k1;
    }
    // Upward recurrence is stable for K (all terms positive and growing).
    let bits = k0.prec();
    let xw = Float::with_val(bits, x);
    let mut km1 = k0;
    let mut km = k1;
    for m in 1..n {
        let next = Float::with_val(bits, 2 * m) / &xw * &km + &km1;
        km1 = km;
        km = Float::with_val(bits, next);
    }
    km
}

fn k01_series(x: &Float, digits: u32) -> (Float, Float) {
    // The log part and the I-part each reach ~e^{x} while K ~ e^{-x}; the
    // cancellation costs 2x*log10(e) digits.
    let pad = (x.to_f64() * 0.8686).ceil() as u32 + 14;
    let bits = bits_for_digits(digits + pad);
    let xw = Float::with_val(bits, x);
    let q = Float::with_val(bits, xw.clone().square() / 4); // x^2/4
    let lhalf = Float::with_val(bits, xw.clone() / 2).ln();
    let gamma = euler_gamma(bits);

    // K_0 = -(ln(x/2)+gamma) I_0 + sum_{j>=1} (x^2/4)^j / (j!)^2 * H_j
    // K_1 = (1/x) + ln(x/2) I_1(x)
    //       - (x/4) sum_{j>=0} (psi(j+1)+psi(j+2)) (x^2/4)^j / (j!(j+1)!)
    // with psi(m) = -gamma + H_{m-1}. Accumulate I_0, I_1 and the psi-weighted
    // sums in one pass.
    let eps = Float::with_val(bits, 2f64).pow(-(bits as i32) + 6);

    let mut i0 = Float::with_val(bits, 1);
    let mut i1_over = Float::with_val(bits, 1); // I_1 = (x/2) * sum, store sum
    let mut s0 = Float::new(bits); // sum H_j (x^2/4)^j/(j!)^2, j>=1
    let mut s1 = Float::new(bits); // sum (psi(j+1)+psi(j+2))(x^2/4)^j/(j!(j+1)!)
    let mut h = Float::new(bits); // H_j
    let mut t0 = Float::with_val(bits, 1); // (x^2/4)^j/(j!)^2
    let mut t1 = Float::with_val(bits, 1); // (x^2/4)^j/(j!(j+1)!)
    {
        // j = 0 contribution to s1: psi(1)+psi(2) = -2 gamma + 1
        let p = Float::with_val(bits, 1) - Float::with_val(bits, 2 * &gamma);
        s1 += p;
    }
    let mut j: u32 = 1;
    loop {
        // advance t0, t1, h to index j
        t0 = t0 * &q / Float::with_val(bits, j) / Float::with_val(bits, j);
        t1 = t1 * &q / Float::with_val(bits, j) / Float::with_val(bits, j + 1);
        h += Float::with_val(bits, 1) / Float::with_val(bits, j);
        i0 += &t0;
        i1_over += &t1;
        s0 += Float::with_val(bits, &t0 * &h);
        // psi(j+1) + psi(j+2) = -2 gamma + H_j + H_{j+1}
        let hj1 = Float::with_val(bits, &h + Float::with_val(bits, 1) / Float::with_val(bits, j + 1));
        let p = Float::with_val(bits, &h + &hj1) - Float::with_val(bits, 2 * &gamma);
        s1 += Float::with_val(bits, &t1 * &p);
        if t0 < eps && j as f64 > x.to_f64() {
            break;
        }
        j += 1;
        assert!(j < 4_000_000, "bessel series failed to converge");
    }
    let i1 = Float::with_val(bits, &xw / 2) * &i1_over;

    let k0 = Float::with_val(bits, -(Float::with_val(bits, &lhalf + &gamma)) * &i0) + &s0;
    let k1 = Float::with_val(bits, xw.clone().recip())
        + Float::with_val(bits, &lhalf * &i1)
        - Float::with_val(bits, &xw / 4) * &s1;

    let out = bits_for_digits(digits);
    (Float::with_val(out, k0), Float::with_val(out, k1))
}

fn k_asymptotic(n: u32, x: &Float, digits: u32) -> Float {
    let bits = bits_for_digits(digits + 8);
    let xw = Float::with_val(bits, x);
    let mut sum = Float::with_val(bits, 1);
    let mut term = Float::with_val(bits, 1);
    let eps = Float::with_val(bits, 10f64).pow(-(digits as i32) - 6);
    let fournn = 4 * (n as i64) * (n as i64);
    let mut j: i64 = 1;
    loop {
        let num = Float::with_val(bits, fournn - (2 * j - 1) * (2 * j - 1));
        let new_term = Float::with_val(bits, &term * &num)
            / Float::with_val(bits, 8 * j)
            / &xw;
        let grew = new_term.clone().abs() >= term.clone().abs();
        if grew {
            // stop at the smallest term; remainder bounded by it
            break;
        }
        term = new_term;
        sum += &term;
        if term.clone().abs() < eps {
            break;
        }
        j += 1;
        assert!(j < 1_000_000);
    }
    let two_x = Float::with_val(bits, 2u32 * &xw);
    let pref = Float::with_val(bits, super::pi(bits) / two_x).sqrt()
        * Float::with_val(bits, -&xw).exp();
    let out = bits_for_digits(digits);
    Float::with_val(out, pref * sum)
}

/// G(j, m, x) = int_x^infty u^j K_m(u) du, via the exact reduction
///   G(J, M)   = (J+M-1) G(J-1, M-1) + x^J K_{M-1}(x)   (M >= 1)
///   G(J, 0)   = (J-1)   G(J-1, 1)   + x^J K_1(x)       (J >= 1)
/// down to G(0, 1) = K_0(x). Valid whenever j + m is odd (the only parity the
/// Fourier-Whittaker integrals produce); all coefficients are positive, so the
/// relative error is bounded by the relative error of the K-evaluations.
pub fn bessel_moment(j: u32, m: i32, x: &Float, digits: u32) -> Float {
    let m = m.unsigned_abs();
    assert!(
        (j + m) % 2 == 1,
        "bessel_moment: j + |m| must be odd (got j={j}, m={m})"
    );
    let kdig = digits + 6 + j + m;
    let (k0, k1) = bessel_k01(x, kdig);
    let bits = k0.prec();
    let xw = Float::with_val(bits, x);
    // K-table up to order max(m, 1) via upward recurrence.
    let maxord = m.max(1);
    let mut ks = Vec::with_capacity(maxord as usize + 1);
    ks.push(k0);
    ks.push(k1);
    for ord in 1..maxord {
        let next = Float::with_val(bits, 2 * ord) / &xw * &ks[ord as usize] + &ks[ord as usize - 1];
        ks.push(Float::with_val(bits, next));
    }
    let g = moment_rec(j, m, &xw, &ks, bits);
    let out = bits_for_digits(digits);
    Float::with_val(out, g)
}

fn moment_rec(j: u32, m: u32, x: &Float, ks: &[Float], bits: u32) -> Float {
    if m == 0 {
        if j == 1 {
            return Float::with_val(bits, x * &ks[1]);
        }
        assert!(j >= 1, "bessel_moment reduction reached the non-elementary G(0,0)");
        let sub = moment_rec(j - 1, 1, x, ks, bits);
        return Float::with_val(bits, (j - 1) * sub) + Float::with_val(bits, x.clone().pow(j)) * &ks[1];
    }
    if j == 0 {
        assert!(m == 1);
        return ks[0].clone();
    }
    let sub = moment_rec(j - 1, m - 1, x, ks, bits);
    Float::with_val(bits, (j + m - 1) * sub)
        + Float::with_val(bits, x.clone().pow(j)) * &ks[(m - 1) as usize]
}

/// G(j, m, 0) = 2^{j-1} Gamma((j+1+m)/2) Gamma((j+1-m)/2), requiring j+m odd
/// and j+1 > |m| (both gamma arguments positive integers).
pub fn bessel_moment_full_line(j: u32, m: i32, bits: u32) -> Float {
    let ma = m.unsigned_abs();
    assert!((j + ma) % 2 == 1 && j + 1 > ma);
    let a = (j + 1 + ma) / 2;
    let b = (j + 1 - ma) / 2;
    let v = factorial(a - 1) * factorial(b - 1);
    Float::with_val(bits, v) * Float::with_val(bits, 2f64).pow(j as i32 - 1)
}
