use rug::Float;
use std::fmt;

/// Complex number over a pair of MPFR floats.
///
/// Operations produce results at the precision of `self`. We deliberately do
/// not pull in MPC; the handful of operations needed here are short.
#[derive(Clone, PartialEq)]
pub struct Complex {
    pub re: Float,
    pub im: Float,
}

impl Complex {
    pub fn new(re: Float, im: Float) -> Self {
        Complex { re, im }
    }

    pub fn zero(bits: u32) -> Self {
        Complex::new(Float::new(bits), Float::new(bits))
    }

    pub fn one(bits: u32) -> Self {
        Complex::new(Float::with_val(bits, 1), Float::new(bits))
    }

    pub fn from_real(re: Float) -> Self {
        let bits = re.prec();
        Complex::new(re, Float::new(bits))
    }

    pub fn i(bits: u32) -> Self {
        Complex::new(Float::new(bits), Float::with_val(bits, 1))
    }

    pub fn prec(&self) -> u32 {
        self.re.prec()
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Complex::new(self.re.clone(), Float::with_val(self.im.prec(), -&self.im))
    }

    pub fn neg(&self) -> Self {
        let b = self.prec();
        Complex::new(Float::with_val(b, -&self.re), Float::with_val(b, -&self.im))
    }

    pub fn add(&self, o: &Self) -> Self {
        let b = self.prec();
        Complex::new(
            Float::with_val(b, &self.re + &o.re),
            Float::with_val(b, &self.im + &o.im),
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        let b = self.prec();
        Complex::new(
            Float::with_val(b, &self.re - &o.re),
            Float::with_val(b, &self.im - &o.im),
        )
    }

    pub fn mul(&self, o: &Self) -> Self {
        let b = self.prec();
        let re = Float::with_val(b, &self.re * &o.re) - Float::with_val(b, &self.im * &o.im);
        let im = Float::with_val(b, &self.re * &o.im) + Float::with_val(b, &self.im * &o.re);
        Complex::new(Float::with_val(b, re), Float::with_val(b, im))
    }

    pub fn mul_assign(&mut self, o: &Self) {
        *self = self.mul(o);
    }

    pub fn add_assign(&mut self, o: &Self) {
        self.re += &o.re;
        self.im += &o.im;
    }

    pub fn sub_assign(&mut self, o: &Self) {
        self.re -= &o.re;
        self.im -= &o.im;
    }

    pub fn scale(&self, s: &Float) -> Self {
        let b = self.prec();
        Complex::new(Float::with_val(b, &self.re * s), Float::with_val(b, &self.im * s))
    }

    pub fn div(&self, o: &Self) -> Self {
        let b = self.prec();
        let d = o.abs2();
        let num = self.mul(&o.conj());
        Complex::new(Float::with_val(b, &num.re / &d), Float::with_val(b, &num.im / &d))
    }

    pub fn recip(&self) -> Self {
        let b = self.prec();
        Complex::one(b).div(self)
    }

    pub fn abs2(&self) -> Float {
        let b = self.prec();
        Float::with_val(b, self.re.clone().square() + self.im.clone().square())
    }

    pub fn abs(&self) -> Float {
        self.abs2().sqrt()
    }

    /// Integer power (possibly negative).
    pub fn powi(&self, e: i64) -> Self {
        let b = self.prec();
        if e == 0 {
            return Complex::one(b);
        }
        let mut base = if e > 0 { self.clone() } else { self.recip() };
        let mut n = e.unsigned_abs();
        let mut acc = Complex::one(b);
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            n >>= 1;
        }
        acc
    }

    /// Round-trip to a different precision.
    pub fn with_prec(&self, bits: u32) -> Self {
        Complex::new(Float::with_val(bits, &self.re), Float::with_val(bits, &self.im))
    }
}

impl fmt::Debug for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:.6e} + {:.6e}i)", self.re.to_f64(), self.im.to_f64())
    }
}

impl fmt::Display for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(d) = f.precision() {
            write!(f, "{:.*e} {:+.*e}*I", d, self.re, d, self.im)
        } else {
            write!(f, "{:e} {:+e}*I", self.re, self.im)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_identities() {
        let b = 128;
        let z = Complex::new(Float::with_val(b, 3), Float::with_val(b, -2));
        let w = Complex::new(Float::with_val(b, -1.5), Float::with_val(b, 0.25));
        let prod = z.mul(&w);
        let back = prod.div(&w);
        let err = back.sub(&z).abs();
        assert!(err < 1e-30);
        let p3 = z.powi(3);
        let p3_direct = z.mul(&z).mul(&z);
        assert!(p3.sub(&p3_direct).abs() < 1e-25);
        let pm3 = z.powi(-3);
        assert!(pm3.mul(&p3).sub(&Complex::one(b)).abs() < 1e-25);
    }
}
