//! Scalar fields.
//!
//! All exact linear algebra in this crate is generic over [`Field`]. The
//! module-theoretic layer additionally needs [`FiniteField`], because Hom
//! spaces are searched point by point.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// A commutative field with exact arithmetic.
pub trait Field:
    Clone
    + PartialEq
    + Eq
    + fmt::Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// Multiplicative inverse, `None` for zero.
    fn inverse(&self) -> Option<Self>;

    /// Image of an integer under the canonical ring map.
    fn from_i64(n: i64) -> Self;
}

/// A finite prime field whose elements can be listed.
pub trait FiniteField: Field + Copy + Hash + Ord {
    /// The characteristic, which is also the number of elements.
    const CHARACTERISTIC: u32;

    fn from_index(i: u32) -> Self;
    fn index(self) -> u32;

    fn elements() -> std::iter::Map<std::ops::Range<u32>, fn(u32) -> Self> {
        (0..Self::CHARACTERISTIC).map(Self::from_index as fn(u32) -> Self)
    }
}

/// The prime field `Z/PZ`. `P` must be prime; [`Fp::new`] reduces modulo `P`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Fp<const P: u32>(u32);

impl<const P: u32> Fp<P> {
    pub const fn new(v: u32) -> Self {
        Fp(v % P)
    }

    pub const fn value(self) -> u32 {
        self.0
    }

    fn pow(self, mut e: u32) -> Self {
        let mut base = self;
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

impl<const P: u32> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u32> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u32> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u32> One for Fp<P> {
    fn one() -> Self {
        Fp(1 % P)
    }
}

impl<const P: u32> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let s = self.0 + rhs.0;
        Fp(if s >= P { s - P } else { s })
    }
}

impl<const P: u32> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp(if self.0 >= rhs.0 { self.0 - rhs.0 } else { self.0 + P - rhs.0 })
    }
}

impl<const P: u32> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp(((self.0 as u64 * rhs.0 as u64) % P as u64) as u32)
    }
}

impl<const P: u32> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp(if self.0 == 0 { 0 } else { P - self.0 })
    }
}

impl<const P: u32> Div for Fp<P> {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        self * rhs.inverse().expect("division by zero in Fp")
    }
}

impl<const P: u32> AddAssign for Fp<P> {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl<const P: u32> SubAssign for Fp<P> {
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

impl<const P: u32> MulAssign for Fp<P> {
    fn mul_assign(&mut self, rhs: Self) {
        *self = *self * rhs;
    }
}

impl<const P: u32> Field for Fp<P> {
    fn inverse(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            // Fermat: a^(P-2) = a^-1
            Some(self.pow(P - 2))
        }
    }

    fn from_i64(n: i64) -> Self {
        Fp(n.rem_euclid(P as i64) as u32)
    }
}

impl<const P: u32> FiniteField for Fp<P> {
    const CHARACTERISTIC: u32 = P;

    fn from_index(i: u32) -> Self {
        Fp::new(i)
    }

    fn index(self) -> u32 {
        self.0
    }
}

impl Field for BigRational {
    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
}

/// Trial-division primality check, enough for characteristics read from files.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    type F5 = Fp<5>;

    #[test]
    fn inverses_in_f5() {
        for a in F5::elements().skip(1) {
            assert_eq!(a * a.inverse().unwrap(), F5::one());
        }
        assert!(F5::zero().inverse().is_none());
    }

    #[test]
    fn from_i64_reduces() {
        assert_eq!(F5::from_i64(-1), F5::new(4));
        assert_eq!(F5::from_i64(12), F5::new(2));
        assert_eq!(Fp::<2>::from_i64(-3), Fp::<2>::new(1));
    }

    #[test]
    fn element_listing() {
        let xs: Vec<u32> = Fp::<3>::elements().map(|x| x.value()).collect();
        assert_eq!(xs, vec![0, 1, 2]);
    }

    #[test]
    fn primes() {
        let ps: Vec<u64> = (0..20).filter(|&n| is_prime(n)).collect();
        assert_eq!(ps, vec![2, 3, 5, 7, 11, 13, 17, 19]);
    }
}
