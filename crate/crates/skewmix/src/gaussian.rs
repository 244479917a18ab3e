//! Exact Gaussian integer arithmetic.
//!
//! Character values and walk eigenvalues of the groups in this crate all lie
//! in ℤ[i], so every identity we verify can be decided without floating point.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};

/// A Gaussian integer `re + im·i` with exact `i64` components.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GaussianInt {
    pub re: i64,
    pub im: i64,
}

pub const GI_ZERO: GaussianInt = GaussianInt { re: 0, im: 0 };
pub const GI_ONE: GaussianInt = GaussianInt { re: 1, im: 0 };
pub const GI_I: GaussianInt = GaussianInt { re: 0, im: 1 };

impl GaussianInt {
    pub const fn new(re: i64, im: i64) -> Self {
        GaussianInt { re, im }
    }

    pub const fn real(re: i64) -> Self {
        GaussianInt { re, im: 0 }
    }

    /// Purely imaginary `im·i`.
    pub const fn imag(im: i64) -> Self {
        GaussianInt { re: 0, im }
    }

    pub fn conj(self) -> Self {
        GaussianInt { re: self.re, im: -self.im }
    }

    pub fn is_zero(self) -> bool {
        self.re == 0 && self.im == 0
    }

    /// `re² + im²`.
    pub fn norm(self) -> i64 {
        self.re * self.re + self.im * self.im
    }

    /// `i^k` for any integer `k`.
    pub fn i_pow(k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => GI_ONE,
            1 => GI_I,
            2 => GaussianInt::new(-1, 0),
            _ => GaussianInt::new(0, -1),
        }
    }

    /// Exact division by a nonzero rational integer; `None` if it does not divide.
    pub fn div_exact(self, d: i64) -> Option<Self> {
        if d == 0 || self.re % d != 0 || self.im % d != 0 {
            return None;
        }
        Some(GaussianInt::new(self.re / d, self.im / d))
    }

    pub fn to_complex(self) -> num_complex::Complex64 {
        num_complex::Complex64::new(self.re as f64, self.im as f64)
    }
}

impl Add for GaussianInt {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        GaussianInt::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl AddAssign for GaussianInt {
    fn add_assign(&mut self, rhs: Self) {
        self.re += rhs.re;
        self.im += rhs.im;
    }
}

impl Sub for GaussianInt {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        GaussianInt::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl SubAssign for GaussianInt {
    fn sub_assign(&mut self, rhs: Self) {
        self.re -= rhs.re;
        self.im -= rhs.im;
    }
}

impl Mul for GaussianInt {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        GaussianInt::new(
            self.re * rhs.re - self.im * rhs.im,
            self.re * rhs.im + self.im * rhs.re,
        )
    }
}

impl Mul<i64> for GaussianInt {
    type Output = Self;
    fn mul(self, rhs: i64) -> Self {
        GaussianInt::new(self.re * rhs, self.im * rhs)
    }
}

impl Neg for GaussianInt {
    type Output = Self;
    fn neg(self) -> Self {
        GaussianInt::new(-self.re, -self.im)
    }
}

impl fmt::Display for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re, self.im) {
            (re, 0) => write!(f, "{re}"),
            (0, im) => write!(f, "{im}i"),
            (re, im) if im < 0 => write!(f, "{re}{im}i"),
            (re, im) => write!(f, "{re}+{im}i"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let a = GaussianInt::new(2, 3);
        let b = GaussianInt::new(-1, 4);
        assert_eq!(a + b, GaussianInt::new(1, 7));
        assert_eq!(a - b, GaussianInt::new(3, -1));
        assert_eq!(a * b, GaussianInt::new(-14, 5));
        assert_eq!(a * GI_I, GaussianInt::new(-3, 2));
        assert_eq!(-a, GaussianInt::new(-2, -3));
        assert_eq!(a.conj(), GaussianInt::new(2, -3));
        assert_eq!((a * a.conj()).re, a.norm());
    }

    #[test]
    fn powers_of_i() {
        assert_eq!(GaussianInt::i_pow(0), GI_ONE);
        assert_eq!(GaussianInt::i_pow(1), GI_I);
        assert_eq!(GaussianInt::i_pow(2), GaussianInt::new(-1, 0));
        assert_eq!(GaussianInt::i_pow(3), GaussianInt::new(0, -1));
        assert_eq!(GaussianInt::i_pow(-1), GaussianInt::new(0, -1));
        assert_eq!(GaussianInt::i_pow(-2), GaussianInt::new(-1, 0));
        for k in -8..8 {
            assert_eq!(GaussianInt::i_pow(k) * GaussianInt::i_pow(-k), GI_ONE);
        }
    }

    #[test]
    fn exact_division() {
        assert_eq!(GaussianInt::new(4, -8).div_exact(4), Some(GaussianInt::new(1, -2)));
        assert_eq!(GaussianInt::new(4, -8).div_exact(3), None);
        assert_eq!(GaussianInt::new(1, 0).div_exact(0), None);
    }

    #[test]
    fn display() {
        assert_eq!(GaussianInt::new(3, 0).to_string(), "3");
        assert_eq!(GaussianInt::new(0, -4).to_string(), "-4i");
        assert_eq!(GaussianInt::new(2, 5).to_string(), "2+5i");
        assert_eq!(GaussianInt::new(2, -5).to_string(), "2-5i");
    }
}
