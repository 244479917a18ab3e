//! Exact arithmetic in GF(2^n) for odd n, in a polynomial basis.
//!
//! A [`FieldCtx`] fixes the extension degree `n = 2m+1`, an irreducible
//! modulus, the Frobenius generator θ: a ↦ a^{2^e}, and a multiplicative
//! generator λ. Elements are n-bit coefficient masks; addition is XOR and
//! multiplication is carryless shift-and-add with reduction.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest extension degree the crate supports. Dense 2^{2n} objects are
/// gated much lower by the walk module; this bound covers the exact
/// character-side paths.
pub const MAX_EXTENSION_DEGREE: u32 = 13;

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
pub enum FieldError {
    #[error("n must be odd")]
    EvenDegree,
    #[error("n must be between 1 and {MAX_EXTENSION_DEGREE}")]
    DegreeOutOfRange,
    #[error("θ must generate the Galois group")]
    BadFrobeniusExponent,
    #[error("polynomial is reducible")]
    ReduciblePolynomial,
    #[error("polynomial has degree {found}, expected {expected}")]
    WrongPolynomialDegree { found: u32, expected: u32 },
    #[error("zero has no inverse")]
    ZeroInverse,
    #[error("element 0x{bits:x} out of range for GF(2^{n})")]
    ElementOutOfRange { bits: u64, n: u32 },
}

/// An element of GF(2^n): the n-bit coefficient vector of its polynomial-basis
/// representation. Ordering is the numeric order of the bit pattern, which is
/// the canonical order used everywhere downstream.
#[derive(
    Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct FieldElement(u64);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    /// Internal constructor for bit patterns already known to be in range.
    pub(crate) fn new_unchecked(bits: u64) -> FieldElement {
        FieldElement(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// Degree of a nonzero GF(2)[x] polynomial given as a bitmask.
fn poly_degree(p: u64) -> u32 {
    debug_assert!(p != 0);
    63 - p.leading_zeros()
}

/// Remainder of `a` modulo `p` in GF(2)[x].
fn poly_mod(mut a: u64, p: u64) -> u64 {
    let dp = poly_degree(p);
    while a != 0 && poly_degree(a) >= dp {
        a ^= p << (poly_degree(a) - dp);
    }
    a
}

/// Trial division by every polynomial of degree 1..=deg/2.
fn poly_is_irreducible(p: u64) -> bool {
    let d = poly_degree(p);
    if d == 0 {
        return false;
    }
    if d == 1 {
        return true;
    }
    for q in 2u64..=(1u64 << (d / 2 + 1)) - 1 {
        if poly_degree(q) >= 1 && poly_mod(p, q) == 0 {
            return false;
        }
    }
    true
}

/// Least irreducible polynomial of degree `n`, by numeric order of the mask.
fn least_irreducible(n: u32) -> u64 {
    ((1u64 << n)..(1u64 << (n + 1)))
        .find(|&p| poly_is_irreducible(p))
        .expect("an irreducible polynomial of every degree exists")
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 { a } else { gcd(b, a % b) }
}

/// The field GF(2^n) together with the structural data the group construction
/// needs: the Frobenius generator θ: a ↦ a^{2^e} and a fixed multiplicative
/// generator λ. Immutable after construction; all operations are pure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldCtx {
    n: u32,
    m: u32,
    frob_exp: u32,
    irred_poly: u64,
    lambda: FieldElement,
    trace_table: Vec<u8>,
}

/// JSON-exportable description of a field context.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDescription {
    pub n: u32,
    pub e: u32,
    pub poly_hex: String,
    pub lambda_hex: String,
}

impl FieldCtx {
    /// Builds GF(2^n) with Frobenius exponent `frob_exp` and an optional
    /// explicit modulus. Without one, the numerically least irreducible
    /// polynomial of degree n is used, and λ is the least-bit-pattern
    /// element of multiplicative order 2^n − 1.
    pub fn new(n: u32, frob_exp: u32, irred_poly: Option<u64>) -> Result<FieldCtx, FieldError> {
        if n == 0 || n > MAX_EXTENSION_DEGREE {
            return Err(FieldError::DegreeOutOfRange);
        }
        if n.is_multiple_of(2) {
            return Err(FieldError::EvenDegree);
        }
        if n == 1 {
            // Gal(GF(2)/GF(2)) is trivial; θ is the identity, written e = 0.
            if frob_exp != 0 {
                return Err(FieldError::BadFrobeniusExponent);
            }
        } else if frob_exp == 0 || frob_exp >= n || gcd(frob_exp, n) != 1 {
            return Err(FieldError::BadFrobeniusExponent);
        }
        let poly = match irred_poly {
            Some(p) => {
                if p == 0 || poly_degree(p) != n {
                    return Err(FieldError::WrongPolynomialDegree {
                        found: if p == 0 { 0 } else { poly_degree(p) },
                        expected: n,
                    });
                }
                if !poly_is_irreducible(p) {
                    return Err(FieldError::ReduciblePolynomial);
                }
                p
            }
            None => least_irreducible(n),
        };
        let mut ctx = FieldCtx {
            n,
            m: (n - 1) / 2,
            frob_exp,
            irred_poly: poly,
            lambda: FieldElement::ZERO,
            trace_table: Vec::new(),
        };
        ctx.lambda = ctx.find_generator();
        ctx.trace_table = (0..ctx.field_size())
            .map(|bits| ctx.trace_uncached(FieldElement(bits)))
            .collect();
        Ok(ctx)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// m = (n − 1)/2, the exponent in the nonlinear character degree 2^m.
    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn frob_exp(&self) -> u32 {
        self.frob_exp
    }

    pub fn irred_poly(&self) -> u64 {
        self.irred_poly
    }

    pub fn lambda(&self) -> FieldElement {
        self.lambda
    }

    /// 2^n.
    pub fn field_size(&self) -> u64 {
        1u64 << self.n
    }

    /// Checked constructor for an element from its bit pattern.
    pub fn element(&self, bits: u64) -> Result<FieldElement, FieldError> {
        if bits >= self.field_size() {
            return Err(FieldError::ElementOutOfRange { bits, n: self.n });
        }
        Ok(FieldElement(bits))
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.field_size()).map(FieldElement)
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(a.0 ^ b.0)
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let mut a = a.0;
        let b = b.0;
        let mut acc = 0u64;
        for i in 0..self.n {
            if (b >> i) & 1 == 1 {
                acc ^= a;
            }
            a <<= 1;
            if (a >> self.n) & 1 == 1 {
                a ^= self.irred_poly;
            }
        }
        FieldElement(acc)
    }

    pub fn square(&self, a: FieldElement) -> FieldElement {
        self.mul(a, a)
    }

    pub fn pow(&self, a: FieldElement, k: u64) -> FieldElement {
        let mut base = a;
        let mut k = k;
        let mut acc = FieldElement::ONE;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.square(base);
            k >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement, FieldError> {
        if a.is_zero() {
            return Err(FieldError::ZeroInverse);
        }
        // a^{2^n - 2} = a^{-1} in GF(2^n).
        Ok(self.pow(a, self.field_size() - 2))
    }

    /// θ(a) = a^{2^e}, computed by e squarings.
    pub fn frobenius(&self, a: FieldElement) -> FieldElement {
        let mut a = a;
        for _ in 0..self.frob_exp {
            a = self.square(a);
        }
        a
    }

    /// a^{1+θ} = a·a^θ. A bijection on GF(2^n) for every admissible θ.
    pub fn one_plus_theta(&self, a: FieldElement) -> FieldElement {
        self.mul(a, self.frobenius(a))
    }

    /// Absolute trace GF(2^n) → GF(2).
    pub fn trace(&self, a: FieldElement) -> u8 {
        self.trace_table[a.0 as usize]
    }

    fn trace_uncached(&self, a: FieldElement) -> u8 {
        let mut acc = FieldElement::ZERO;
        let mut t = a;
        for _ in 0..self.n {
            acc = self.add(acc, t);
            t = self.square(t);
        }
        debug_assert!(acc.0 <= 1);
        acc.0 as u8
    }

    /// Multiplicative order of a nonzero element.
    pub fn mult_order(&self, a: FieldElement) -> u64 {
        assert!(!a.is_zero());
        let mut t = a;
        let mut k = 1;
        while t != FieldElement::ONE {
            t = self.mul(t, a);
            k += 1;
        }
        k
    }

    fn find_generator(&self) -> FieldElement {
        let target = self.field_size() - 1;
        (1..self.field_size())
            .map(FieldElement)
            .find(|&a| self.mult_order(a) == target)
            .expect("GF(2^n)^× is cyclic")
    }

    pub fn poly_hex(&self) -> String {
        format!("0x{:x}", self.irred_poly)
    }

    pub fn description(&self) -> FieldDescription {
        FieldDescription {
            n: self.n,
            e: self.frob_exp,
            poly_hex: self.poly_hex(),
            lambda_hex: format!("0x{:x}", self.lambda.0),
        }
    }
}
