//! Shared arbitrary-precision kernels.
//!
//! Everything here works with [`rug::Float`] at an explicit precision in bits.
//! Public entry points take decimal digits; [`bits_for_digits`] is the single
//! conversion used throughout the crate.

mod bessel;
mod complex;
mod quadrature;

pub use bessel::{bessel_k, bessel_k01, bessel_moment, bessel_moment_full_line};
pub use complex::Complex;
pub use quadrature::{tanh_sinh, QuadratureResult};

use rug::float::Constant;
use rug::ops::Pow;
use rug::{Float, Integer, Rational};

/// Bits of mantissa needed for `digits` decimal digits, with guard bits.
pub fn bits_for_digits(digits: u32) -> u32 {
    // log2(10) = 3.3219...
    (digits as f64 * 3.322).ceil() as u32 + 16
}

pub fn pi(bits: u32) -> Float {
    Float::with_val(bits, Constant::Pi)
}

pub fn euler_gamma(bits: u32) -> Float {
    Float::with_val(bits, Constant::Euler)
}

pub fn float_from_rational(r: &Rational, bits: u32) -> Float {
    Float::with_val(bits, r)
}

/// exp(2 pi i k/n) computed from the exactly reduced rational angle.
pub fn root_of_unity(k: i64, n: u64, bits: u32) -> Complex {
    assert!(n > 0);
    let mut kk = k % n as i64;
    if kk < 0 {
        kk += n as i64;
    }
    let work = bits + 8;
    let angle = 2u32 * pi(work) * Float::with_val(work, kk) / Float::with_val(work, n);
    let (sin, cos) = angle.sin_cos(Float::new(work));
    Complex::new(
        Float::with_val(bits, &cos),
        Float::with_val(bits, &sin),
    )
}

/// Factorial as an exact integer.
pub fn factorial(n: u32) -> Integer {
    let mut acc = Integer::from(1);
    for i in 2..=n {
        acc *= i;
    }
    acc
}

/// Binomial coefficient as an exact integer.
pub fn binomial(n: u32, k: u32) -> Integer {
    if k > n {
        return Integer::from(0);
    }
    let k = k.min(n - k);
    let mut num = Integer::from(1);
    for i in 0..k {
        num *= n - i;
        num /= i + 1;
    }
    num
}

/// Upper incomplete gamma Gamma(s, x) for integer s >= 1:
/// (s-1)! e^{-x} sum_{i<s} x^i/i!.
pub fn incomplete_gamma_int(s: u32, x: &Float) -> Float {
    assert!(s >= 1);
    let bits = x.prec();
    let mut sum = Float::with_val(bits, 1);
    let mut term = Float::with_val(bits, 1);
    for i in 1..s {
        term = term * x / Float::with_val(bits, i);
        sum += &term;
    }
    let e = Float::with_val(bits, x.clone().neg_exp());
    let fact = Float::with_val(bits, factorial(s - 1));
    fact * e * sum
}

/// x^e for integer e (possibly negative) at the precision of x.
pub fn float_powi(x: &Float, e: i64) -> Float {
    let bits = x.prec();
    if e >= 0 {
        Float::with_val(bits, x.pow(e as u64 as u32))
    } else {
        let p = Float::with_val(bits, x.pow((-e) as u64 as u32));
        Float::with_val(bits, p.recip())
    }
}

trait NegExp {
    fn neg_exp(self) -> Float;
}

impl NegExp for Float {
    fn neg_exp(self) -> Float {
        (-self).exp()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_of_unity_orders() {
        let bits = bits_for_digits(40);
        for &(k, n) in &[(1i64, 4u64), (3, 8), (5, 12), (1, 1), (-1, 3)] {
            let z = root_of_unity(k, n, bits);
            let mut p = Complex::one(bits);
            for _ in 0..n {
                p = p.mul(&z);
            }
            let err = p.sub(&Complex::one(bits)).abs();
            assert!(err < Float::with_val(bits, 1e-35), "zeta^{n} != 1 for {k}/{n}");
        }
    }

    #[test]
    fn incomplete_gamma_at_integer_args() {
        let bits = bits_for_digits(40);
        // Gamma(1, x) = e^{-x}
        let x = Float::with_val(bits, 2);
        let g = incomplete_gamma_int(1, &x);
        let expect = Float::with_val(bits, -&x).exp();
        let diff = Float::with_val(bits, &g - &expect).abs();
        assert!(diff < 1e-35);
        // Gamma(3, 0) = 2! = 2
        let g = incomplete_gamma_int(3, &Float::with_val(bits, 0));
        let diff = Float::with_val(bits, &g - 2u32).abs();
        assert!(diff < 1e-35);
    }

    #[test]
    fn binomial_and_factorial() {
        assert_eq!(binomial(6, 3), Integer::from(20));
        assert_eq!(binomial(2, 5), Integer::from(0));
        assert_eq!(factorial(6), Integer::from(720));
    }
}
