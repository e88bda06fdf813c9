//! Exact arithmetic in ℚ and ℚ(i), plus certified rectangular complex
//! interval arithmetic used by root isolation and the numeric fallbacks.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use crate::{Error, Result};

/// Arbitrary-precision rational number. `BigRational` keeps the invariants we
/// need: always reduced, denominator positive, zero stored as 0/1.
pub type Rational = BigRational;

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Exact square root of a nonnegative rational, if it is a perfect square.
pub fn rational_sqrt_exact(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let num = num_integer::Roots::sqrt(r.numer());
    let den = num_integer::Roots::sqrt(r.denom());
    if &(&num * &num) == r.numer() && &(&den * &den) == r.denom() {
        Some(Rational::new(num, den))
    } else {
        None
    }
}

/// Largest multiple of 2^-bits that is <= x.
pub fn dyadic_floor(x: &Rational, bits: u32) -> Rational {
    let scaled = (x.numer() << bits).div_floor(x.denom());
    Rational::new(scaled, BigInt::one() << bits)
}

/// Smallest multiple of 2^-bits that is >= x.
pub fn dyadic_ceil(x: &Rational, bits: u32) -> Rational {
    let scaled = (x.numer() << bits).div_ceil(x.denom());
    Rational::new(scaled, BigInt::one() << bits)
}

/// The unique rational of smallest denominator (then smallest numerator)
/// inside the closed interval [lo, hi]. Stern-Brocot / continued fractions.
pub fn simplest_rational_in(lo: &Rational, hi: &Rational) -> Rational {
    if lo > hi {
        return simplest_rational_in(hi, lo);
    }
    if !lo.is_positive() && !hi.is_negative() {
        return Rational::zero();
    }
    if hi.is_negative() {
        return -simplest_positive(&-hi.clone(), &-lo.clone());
    }
    simplest_positive(lo, hi)
}

fn simplest_positive(lo: &Rational, hi: &Rational) -> Rational {
    // invariant: 0 < lo <= hi
    let lo_ceil = lo.ceil();
    if &lo_ceil <= &hi.floor() {
        return lo_ceil;
    }
    let f = lo.floor();
    let inner = simplest_positive(
        &(Rational::one() / (hi - &f)),
        &(Rational::one() / (lo - &f)),
    );
    f + Rational::one() / inner
}

/// Element of ℚ(i), both components independently reduced; equality is
/// componentwise.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_rational(re: Rational) -> Self {
        GaussianRational { re, im: Rational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rat_int(n))
    }

    pub fn from_pair(re: (i64, i64), im: (i64, i64)) -> Self {
        GaussianRational { re: rat(re.0, re.1), im: rat(im.0, im.1) }
    }

    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn i() -> Self {
        GaussianRational { re: Rational::zero(), im: Rational::one() }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianRational { re: self.re.clone(), im: -self.im.clone() }
    }

    /// re² + im², a nonnegative rational, zero iff self is zero.
    pub fn norm(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm();
        Ok(GaussianRational { re: &self.re / &n, im: -&self.im / &n })
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Exact square root in ℚ(i), if one exists. Canonical choice: re > 0,
    /// or re = 0 and im >= 0. A root exists iff norm(a) is a rational square
    /// and (re + sqrt(norm))/2 is a rational square.
    pub fn sqrt_exact(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        let n = rational_sqrt_exact(&self.norm())?;
        if self.im.is_zero() {
            return if self.re.is_positive() {
                rational_sqrt_exact(&self.re).map(Self::from_rational)
            } else {
                rational_sqrt_exact(&(-self.re.clone()))
                    .map(|y| GaussianRational { re: Rational::zero(), im: y })
            };
        }
        let half = rat(1, 2);
        let x2 = (&self.re + &n) * &half;
        let x = rational_sqrt_exact(&x2)?;
        if x.is_zero() {
            return None;
        }
        let y = &self.im / (&x + &x);
        let cand = GaussianRational { re: x, im: y };
        debug_assert_eq!(&cand * &cand, *self);
        Some(canonical_sqrt(cand))
    }

    /// Lexicographic (re, im) key; used only for deterministic ordering.
    pub fn sort_key(&self) -> (&Rational, &Rational) {
        (&self.re, &self.im)
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (rational_to_f64(&self.re), rational_to_f64(&self.im))
    }
}

fn canonical_sqrt(c: GaussianRational) -> GaussianRational {
    let flip = c.re.is_negative() || (c.re.is_zero() && c.im.is_negative());
    if flip {
        -&c
    } else {
        c
    }
}

/// f64 approximation that survives numerators/denominators far beyond the
/// f64 exponent range.
pub fn rational_to_f64(r: &Rational) -> f64 {
    if let Some(v) = r.to_f64() {
        if v.is_finite() {
            return v;
        }
    }
    let num_bits = r.numer().bits() as i64;
    let den_bits = r.denom().bits() as i64;
    let shift = num_bits - den_bits;
    // r = (numer / 2^shift) / (denom / 2^... ) * 2^shift with both parts ~1
    let scaled = if shift >= 0 {
        Rational::new(r.numer().clone(), r.denom() << shift as u64)
    } else {
        Rational::new(r.numer() << (-shift) as u64, r.denom().clone())
    };
    let base = scaled.to_f64().unwrap_or(0.0);
    base * 2f64.powi(shift.clamp(-1_000_000, 1_000_000) as i32)
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for GaussianRational {
    /// Text form used in all JSON files: `p/q`, `p/q+r/s*i`, with zero parts
    /// omitted and `/1` dropped; unit imaginary parts print as `i` / `-i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut out = String::new();
        if !self.re.is_zero() {
            out.push_str(&fmt_rational(&self.re));
        }
        if !self.im.is_zero() {
            let abs = self.im.abs();
            let part = if abs.is_one() { "i".to_string() } else { format!("{}*i", fmt_rational(&abs)) };
            if self.im.is_negative() {
                out.push('-');
            } else if !self.re.is_zero() {
                out.push('+');
            }
            out.push_str(&part);
        }
        write!(f, "{}", out)
    }
}

impl std::str::FromStr for GaussianRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_gaussian(s)
    }
}

/// Parse the `p/q+r/s*i` text form (signs optional, zero parts omitted,
/// integer parts may drop `/1`, `i` alone means `1*i`).
pub fn parse_gaussian(input: &str) -> Result<GaussianRational> {
    let s = input.trim();
    if s.is_empty() {
        return Err(Error::Parse { pos: 0, msg: "empty number".into() });
    }
    let bytes = s.as_bytes();
    let mut pos = 0usize;
    let mut acc = GaussianRational::zero();
    let mut nparts = 0;
    let (mut seen_re, mut seen_im) = (false, false);
    while pos < bytes.len() {
        let start = pos;
        let mut sign = 1i64;
        if bytes[pos] == b'+' || bytes[pos] == b'-' {
            if bytes[pos] == b'-' {
                sign = -1;
            }
            pos += 1;
        } else if nparts > 0 {
            return Err(Error::Parse { pos, msg: "expected '+' or '-' between parts".into() });
        }
        if pos >= bytes.len() {
            return Err(Error::Parse { pos, msg: "dangling sign".into() });
        }
        let (mag, imaginary) = if bytes[pos] == b'i' {
            pos += 1;
            (Rational::one(), true)
        } else {
            let num_start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            if pos == num_start {
                return Err(Error::Parse { pos, msg: "expected digits".into() });
            }
            let numer: BigInt = s[num_start..pos].parse().unwrap();
            let denom = if pos < bytes.len() && bytes[pos] == b'/' {
                pos += 1;
                let d_start = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                if pos == d_start {
                    return Err(Error::Parse { pos, msg: "expected denominator digits".into() });
                }
                let d: BigInt = s[d_start..pos].parse().unwrap();
                if d.is_zero() {
                    return Err(Error::Parse { pos: d_start, msg: "zero denominator".into() });
                }
                d
            } else {
                BigInt::one()
            };
            let mut imag = false;
            if pos < bytes.len() && bytes[pos] == b'*' {
                if pos + 1 < bytes.len() && bytes[pos + 1] == b'i' {
                    pos += 2;
                    imag = true;
                } else {
                    return Err(Error::Parse { pos: pos + 1, msg: "expected 'i' after '*'".into() });
                }
            } else if pos < bytes.len() && bytes[pos] == b'i' {
                pos += 1;
                imag = true;
            }
            (Rational::new(numer, denom), imag)
        };
        let val = mag * rat_int(sign);
        let seen = if imaginary { &mut seen_im } else { &mut seen_re };
        if *seen {
            return Err(Error::Parse {
                pos: start,
                msg: "duplicate real or imaginary part".into(),
            });
        }
        *seen = true;
        if imaginary {
            acc.im += val;
        } else {
            acc.re += val;
        }
        nparts += 1;
    }
    Ok(acc)
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $impl_fn:expr) => {
        impl<'a, 'b> $trait<&'b GaussianRational> for &'a GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: &'b GaussianRational) -> GaussianRational {
                let f: fn(&GaussianRational, &GaussianRational) -> GaussianRational = $impl_fn;
                f(self, rhs)
            }
        }
        impl $trait<GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                $trait::$method(&self, &rhs)
            }
        }
        impl<'b> $trait<&'b GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: &'b GaussianRational) -> GaussianRational {
                $trait::$method(&self, rhs)
            }
        }
        impl<'a> $trait<GaussianRational> for &'a GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                $trait::$method(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &GaussianRational, b: &GaussianRational| GaussianRational {
    re: &a.re + &b.re,
    im: &a.im + &b.im,
});
forward_binop!(Sub, sub, |a: &GaussianRational, b: &GaussianRational| GaussianRational {
    re: &a.re - &b.re,
    im: &a.im - &b.im,
});
forward_binop!(Mul, mul, |a: &GaussianRational, b: &GaussianRational| GaussianRational {
    re: &a.re * &b.re - &a.im * &b.im,
    im: &a.re * &b.im + &a.im * &b.re,
});
forward_binop!(Div, div, |a: &GaussianRational, b: &GaussianRational| {
    let inv = b.inv().expect("division by zero GaussianRational");
    a * &inv
});

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational { re: -self.re.clone(), im: -self.im.clone() }
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        -&self
    }
}

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&GaussianRational> for GaussianRational {
    fn mul_assign(&mut self, rhs: &GaussianRational) {
        *self = &*self * rhs;
    }
}

/// Closed rational interval, used as one component of a `ComplexBox`.
#[derive(Clone, Debug, PartialEq)]
pub struct RatInterval {
    pub lo: Rational,
    pub hi: Rational,
}

impl RatInterval {
    pub fn point(x: Rational) -> Self {
        RatInterval { lo: x.clone(), hi: x }
    }

    pub fn new(lo: Rational, hi: Rational) -> Self {
        debug_assert!(lo <= hi);
        RatInterval { lo, hi }
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn mid(&self) -> Rational {
        (&self.lo + &self.hi) * rat(1, 2)
    }

    pub fn add(&self, o: &Self) -> Self {
        RatInterval { lo: &self.lo + &o.lo, hi: &self.hi + &o.hi }
    }

    pub fn sub(&self, o: &Self) -> Self {
        RatInterval { lo: &self.lo - &o.hi, hi: &self.hi - &o.lo }
    }

    pub fn neg(&self) -> Self {
        RatInterval { lo: -self.hi.clone(), hi: -self.lo.clone() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let c: Vec<Rational> = vec![
            &self.lo * &o.lo,
            &self.lo * &o.hi,
            &self.hi * &o.lo,
            &self.hi * &o.hi,
        ];
        let lo = c.iter().min().unwrap().clone();
        let hi = c.iter().max().unwrap().clone();
        RatInterval { lo, hi }
    }

    /// Tight interval for x*x over x in self.
    pub fn square(&self) -> Self {
        let a = &self.lo * &self.lo;
        let b = &self.hi * &self.hi;
        if self.contains_zero() {
            RatInterval { lo: Rational::zero(), hi: a.max(b) }
        } else {
            let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
            RatInterval { lo, hi }
        }
    }

    /// 1/x; requires the interval to exclude zero.
    pub fn recip(&self) -> Option<Self> {
        if self.contains_zero() {
            return None;
        }
        Some(RatInterval {
            lo: Rational::one() / &self.hi,
            hi: Rational::one() / &self.lo,
        })
    }

    pub fn intersect(&self, o: &Self) -> Option<Self> {
        let lo = if self.lo >= o.lo { self.lo.clone() } else { o.lo.clone() };
        let hi = if self.hi <= o.hi { self.hi.clone() } else { o.hi.clone() };
        if lo <= hi {
            Some(RatInterval { lo, hi })
        } else {
            None
        }
    }

    pub fn overlaps(&self, o: &Self) -> bool {
        !(self.hi < o.lo || o.hi < self.lo)
    }

    /// Round both endpoints outward onto the 2^-bits dyadic grid; bounds the
    /// bit growth of endpoints during long interval computations.
    pub fn round_out(&self, bits: u32) -> Self {
        RatInterval { lo: dyadic_floor(&self.lo, bits), hi: dyadic_ceil(&self.hi, bits) }
    }
}

/// Axis-aligned rectangle in ℂ with exact rational bounds. Any value it
/// certifies lies inside the box.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexBox {
    pub re: RatInterval,
    pub im: RatInterval,
    /// bit count used to produce the box
    pub precision: u32,
}

impl ComplexBox {
    pub fn exact(z: &GaussianRational, precision: u32) -> Self {
        ComplexBox {
            re: RatInterval::point(z.re.clone()),
            im: RatInterval::point(z.im.clone()),
            precision,
        }
    }

    pub fn new(re: RatInterval, im: RatInterval, precision: u32) -> Self {
        ComplexBox { re, im, precision }
    }

    /// Centered box around an f64 approximation with radius 2^-bits.
    pub fn from_f64_center(re: f64, im: f64, radius_bits: u32, precision: u32) -> Self {
        let r = Rational::from_float(re).unwrap_or_else(Rational::zero);
        let i = Rational::from_float(im).unwrap_or_else(Rational::zero);
        let rad = Rational::new(BigInt::one(), BigInt::one() << radius_bits);
        ComplexBox {
            re: RatInterval::new(&r - &rad, &r + &rad),
            im: RatInterval::new(&i - &rad, &i + &rad),
            precision,
        }
    }

    pub fn contains(&self, z: &GaussianRational) -> bool {
        self.re.contains(&z.re) && self.im.contains(&z.im)
    }

    pub fn contains_zero(&self) -> bool {
        self.re.contains_zero() && self.im.contains_zero()
    }

    pub fn is_point(&self) -> bool {
        self.re.lo == self.re.hi && self.im.lo == self.im.hi
    }

    pub fn width(&self) -> Rational {
        self.re.width().max(self.im.width())
    }

    pub fn mid(&self) -> GaussianRational {
        GaussianRational { re: self.re.mid(), im: self.im.mid() }
    }

    pub fn add(&self, o: &Self) -> Self {
        ComplexBox {
            re: self.re.add(&o.re),
            im: self.im.add(&o.im),
            precision: self.precision.min(o.precision),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        ComplexBox {
            re: self.re.sub(&o.re),
            im: self.im.sub(&o.im),
            precision: self.precision.min(o.precision),
        }
    }

    pub fn neg(&self) -> Self {
        ComplexBox { re: self.re.neg(), im: self.im.neg(), precision: self.precision }
    }

    pub fn mul(&self, o: &Self) -> Self {
        ComplexBox {
            re: self.re.mul(&o.re).sub(&self.im.mul(&o.im)),
            im: self.re.mul(&o.im).add(&self.im.mul(&o.re)),
            precision: self.precision.min(o.precision),
        }
    }

    pub fn mul_scalar(&self, c: &GaussianRational) -> Self {
        self.mul(&ComplexBox::exact(c, self.precision))
    }

    /// |z|² as a real interval.
    pub fn norm(&self) -> RatInterval {
        self.re.square().add(&self.im.square())
    }

    /// 1/z; requires 0 not in the box.
    pub fn recip(&self) -> Option<Self> {
        let n = self.norm().recip()?;
        Some(ComplexBox {
            re: self.re.mul(&n),
            im: self.im.neg().mul(&n),
            precision: self.precision,
        })
    }

    pub fn div(&self, o: &Self) -> Option<Self> {
        o.recip().map(|r| self.mul(&r))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = ComplexBox::exact(&GaussianRational::one(), self.precision);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            if e > 1 {
                base = base.mul(&base);
            }
            e >>= 1;
        }
        acc
    }

    pub fn intersect(&self, o: &Self) -> Option<Self> {
        Some(ComplexBox {
            re: self.re.intersect(&o.re)?,
            im: self.im.intersect(&o.im)?,
            precision: self.precision.max(o.precision),
        })
    }

    pub fn overlaps(&self, o: &Self) -> bool {
        self.re.overlaps(&o.re) && self.im.overlaps(&o.im)
    }

    /// True if self lies strictly inside o (used by interval Newton).
    pub fn strictly_inside(&self, o: &Self) -> bool {
        self.re.lo > o.re.lo && self.re.hi < o.re.hi && self.im.lo > o.im.lo && self.im.hi < o.im.hi
    }

    pub fn round_out(&self, bits: u32) -> Self {
        ComplexBox {
            re: self.re.round_out(bits),
            im: self.im.round_out(bits),
            precision: self.precision,
        }
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        let m = self.mid();
        m.to_f64_pair()
    }
}

/// Evaluate a polynomial given as (exponent vector, coefficient) terms over
/// boxes, one per variable. The returned box contains the exact image of
/// every point of the input boxes.
pub fn box_eval(boxes: &[ComplexBox], terms: &[(Vec<u32>, GaussianRational)]) -> ComplexBox {
    let precision = boxes.iter().map(|b| b.precision).min().unwrap_or(128);
    let mut acc = ComplexBox::exact(&GaussianRational::zero(), precision);
    for (exps, coeff) in terms {
        assert!(exps.len() <= boxes.len(), "exponent vector longer than box list");
        let mut term = ComplexBox::exact(coeff, precision);
        for (b, &e) in boxes.iter().zip(exps.iter()) {
            if e > 0 {
                term = term.mul(&b.pow(e));
            }
        }
        acc = acc.add(&term);
    }
    acc
}

/// Sign representation of a BigInt for formatting helpers.
pub fn bigint_sign(n: &BigInt) -> i8 {
    match n.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand::SeedableRng;

    fn g(re: (i64, i64), im: (i64, i64)) -> GaussianRational {
        GaussianRational::from_pair(re, im)
    }

    fn random_gaussian(rng: &mut impl Rng) -> GaussianRational {
        let d1 = rng.gen_range(1..20i64);
        let d2 = rng.gen_range(1..20i64);
        g((rng.gen_range(-50..50), d1), (rng.gen_range(-50..50), d2))
    }

    #[test]
    fn mul_conj_is_norm() {
        let z = g((1, 2), (1, 1));
        let w = &z * &z.conj();
        assert_eq!(w, GaussianRational::from_rational(rat(5, 4)));
        assert_eq!(z.norm(), rat(5, 4));
    }

    #[test]
    fn inverse_example_from_cross_ratio_orbit() {
        // 1/(1/10 - i/5) = 2 + 4i
        let z = g((1, 10), (-1, 5));
        assert_eq!(z.inv().unwrap(), g((2, 1), (4, 1)));
    }

    #[test]
    fn field_axioms_random() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..2_000 {
            let a = random_gaussian(&mut rng);
            let b = random_gaussian(&mut rng);
            let c = random_gaussian(&mut rng);
            assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            assert_eq!(a.conj().conj(), a);
            if !b.is_zero() {
                assert_eq!(&(&a / &b) * &b, a);
            }
        }
    }

    #[test]
    fn sqrt_exact_examples() {
        assert_eq!(GaussianRational::from_int(-1).sqrt_exact(), Some(GaussianRational::i()));
        // (1+i)^2 = 2i
        assert_eq!(g((0, 1), (2, 1)).sqrt_exact(), Some(g((1, 1), (1, 1))));
        assert_eq!(GaussianRational::from_int(2).sqrt_exact(), None);
        assert_eq!(GaussianRational::from_int(0).sqrt_exact(), Some(GaussianRational::zero()));
    }

    #[test]
    fn sqrt_exact_roundtrip_random() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..500 {
            let r = random_gaussian(&mut rng);
            let sq = &r * &r;
            let s = sq.sqrt_exact().expect("square of a rational must have a root");
            assert_eq!(&s * &s, sq);
        }
    }

    #[test]
    fn text_form_roundtrip() {
        let cases = [
            "0", "3", "-1/2", "i", "-i", "2+4*i", "1/10-1/5*i", "-3/7+2*i", "5*i",
        ];
        for c in cases {
            let z: GaussianRational = c.parse().unwrap();
            assert_eq!(z.to_string(), *c, "canonical form of {c}");
            let back: GaussianRational = z.to_string().parse().unwrap();
            assert_eq!(back, z);
        }
        // non-canonical spellings still parse
        assert_eq!("4i".parse::<GaussianRational>().unwrap(), g((0, 1), (4, 1)));
        assert_eq!("+3".parse::<GaussianRational>().unwrap(), GaussianRational::from_int(3));
        assert_eq!("1*i".parse::<GaussianRational>().unwrap(), GaussianRational::i());
        assert!("1/0".parse::<GaussianRational>().is_err());
        assert!("2+3".parse::<GaussianRational>().is_err());
        assert!("".parse::<GaussianRational>().is_err());
    }

    #[test]
    fn box_eval_contains_exact_value() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let z = random_gaussian(&mut rng);
            let w = random_gaussian(&mut rng);
            // f(x, y) = x^2 y + 3x - y + 1/2
            let terms = vec![
                (vec![2, 1], GaussianRational::one()),
                (vec![1, 0], GaussianRational::from_int(3)),
                (vec![0, 1], -GaussianRational::one()),
                (vec![0, 0], GaussianRational::from_pair((1, 2), (0, 1))),
            ];
            let exact = &(&(&z * &z) * &w) + &(&GaussianRational::from_int(3) * &z)
                - &w
                + &GaussianRational::from_pair((1, 2), (0, 1));
            let boxes = vec![ComplexBox::exact(&z, 128), ComplexBox::exact(&w, 128)];
            let out = box_eval(&boxes, &terms);
            assert!(out.contains(&exact));
        }
    }

    #[test]
    fn box_eval_root_containment() {
        // x^2 + 1 over a box around i of width 2^-50 contains 0
        let around_i = ComplexBox::from_f64_center(0.0, 1.0, 51, 128);
        let terms = vec![
            (vec![2], GaussianRational::one()),
            (vec![0], GaussianRational::one()),
        ];
        let out = box_eval(&[around_i], &terms);
        assert!(out.contains_zero());
    }

    #[test]
    fn box_product_width_bound() {
        // boxes around 2 and 3 of half-width r: product box contains 6 and
        // has width <= 2*(2r + 3r + r^2) (interval product sum rule)
        let r = Rational::new(BigInt::one(), BigInt::one() << 20);
        let b2 = ComplexBox::new(
            RatInterval::new(rat_int(2) - &r, rat_int(2) + &r),
            RatInterval::point(Rational::zero()),
            128,
        );
        let b3 = ComplexBox::new(
            RatInterval::new(rat_int(3) - &r, rat_int(3) + &r),
            RatInterval::point(Rational::zero()),
            128,
        );
        let prod = b2.mul(&b3);
        assert!(prod.contains(&GaussianRational::from_int(6)));
        let bound = (rat_int(2) * &r + rat_int(3) * &r + &r * &r) * rat_int(2);
        assert!(prod.width() <= bound);
    }

    #[test]
    fn simplest_rational() {
        let lo = rat(13, 10);
        let hi = rat(15, 10);
        assert_eq!(simplest_rational_in(&lo, &hi), rat(3, 2));
        assert_eq!(simplest_rational_in(&rat(-1, 3), &rat(1, 7)), Rational::zero());
        // 13/4 = 3.25 is the smallest-denominator value in [22/7, 23/7]
        assert_eq!(simplest_rational_in(&rat(22, 7), &rat(23, 7)), rat(13, 4));
        let x = rat(-355, 113);
        assert_eq!(simplest_rational_in(&x, &x), x);
    }

    #[test]
    fn dyadic_rounding_brackets() {
        let x = rat(1, 3);
        let lo = dyadic_floor(&x, 10);
        let hi = dyadic_ceil(&x, 10);
        assert!(lo <= x && x <= hi);
        assert!((&hi - &lo) <= rat(1, 1024) * rat_int(1));
    }
}
