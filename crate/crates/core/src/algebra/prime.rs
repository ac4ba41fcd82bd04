use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An odd prime field F_q, q < 2^31.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct FieldSpec {
    q: u32,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Odd primes in `lo..=hi`, ascending.
pub fn odd_primes(lo: u32, hi: u32) -> impl Iterator<Item = u32> {
    (lo.max(3)..=hi).filter(|&p| is_prime(p as u64))
}

impl FieldSpec {
    pub fn new(q: u32) -> Result<Self> {
        if q < 3 || q >= 1 << 31 || !is_prime(q as u64) {
            return Err(Error::NotOddPrime(q as u64));
        }
        Ok(FieldSpec { q })
    }

    pub fn q(self) -> u32 {
        self.q
    }

    /// The element with residue `v mod q`.
    pub fn elem(self, v: u64) -> FieldElement {
        FieldElement {
            value: (v % self.q as u64) as u32,
            q: self.q,
        }
    }

    /// Reduce a signed integer.
    pub fn elem_i64(self, v: i64) -> FieldElement {
        self.elem(v.rem_euclid(self.q as i64) as u64)
    }

    pub fn zero(self) -> FieldElement {
        self.elem(0)
    }

    pub fn one(self) -> FieldElement {
        self.elem(1)
    }

    /// All elements in integer order 0..q-1.
    pub fn elements(self) -> impl Iterator<Item = FieldElement> {
        (0..self.q).map(move |v| FieldElement { value: v, q: self.q })
    }

    /// Smallest non-square >= 2.
    pub fn find_nonsquare(self) -> FieldElement {
        self.elements()
            .skip(2)
            .find(|a| a.quadratic_character() == -1)
            .expect("odd prime fields have non-squares")
    }

    /// Smallest primitive root.
    pub fn find_generator(self) -> FieldElement {
        let order = self.q as u64 - 1;
        let factors = prime_factors(order);
        self.elements()
            .skip(1)
            .find(|g| factors.iter().all(|&p| g.pow(order / p).value != 1))
            .expect("cyclic multiplicative group has a generator")
    }

    pub fn is_generator(self, g: FieldElement) -> bool {
        if g.is_zero() {
            return false;
        }
        let order = self.q as u64 - 1;
        prime_factors(order)
            .iter()
            .all(|&p| g.pow(order / p).value != 1)
    }

    /// Table of square roots: `roots[v]` lists every r with r^2 = v.
    pub fn sqrt_table(self) -> Vec<Vec<u32>> {
        let mut roots = vec![Vec::new(); self.q as usize];
        for r in 0..self.q as u64 {
            roots[(r * r % self.q as u64) as usize].push(r as u32);
        }
        roots
    }
}

impl TryFrom<u32> for FieldSpec {
    type Error = Error;

    fn try_from(q: u32) -> Result<Self> {
        FieldSpec::new(q)
    }
}

impl From<FieldSpec> for u32 {
    fn from(f: FieldSpec) -> u32 {
        f.q
    }
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Canonical residue in [0, q). Binary operations require both sides to
/// share the same modulus.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    value: u32,
    q: u32,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.q)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl FieldElement {
    pub fn value(self) -> u32 {
        self.value
    }

    pub fn modulus(self) -> u32 {
        self.q
    }

    pub fn field(self) -> FieldSpec {
        FieldSpec { q: self.q }
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    fn with(self, v: u64) -> FieldElement {
        FieldElement {
            value: (v % self.q as u64) as u32,
            q: self.q,
        }
    }

    pub fn pow(self, mut e: u64) -> FieldElement {
        let q = self.q as u64;
        let mut base = self.value as u64;
        let mut acc = 1 % q;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % q;
            }
            base = base * base % q;
            e >>= 1;
        }
        self.with(acc)
    }

    /// Multiplicative inverse via the extended Euclidean algorithm.
    pub fn inv(self) -> Result<FieldElement> {
        if self.value == 0 {
            return Err(Error::DivisionByZero);
        }
        let (mut r0, mut r1) = (self.q as i64, self.value as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let quot = r0 / r1;
            (r0, r1) = (r1, r0 - quot * r1);
            (t0, t1) = (t1, t0 - quot * t1);
        }
        debug_assert_eq!(r0, 1);
        Ok(self.with(t0.rem_euclid(self.q as i64) as u64))
    }

    pub fn checked_div(self, rhs: FieldElement) -> Result<FieldElement> {
        Ok(self * rhs.inv()?)
    }

    /// Euler's criterion: 0 at zero, +1 on nonzero squares, -1 otherwise.
    pub fn quadratic_character(self) -> i8 {
        if self.value == 0 {
            return 0;
        }
        if self.pow((self.q as u64 - 1) / 2).value == 1 {
            1
        } else {
            -1
        }
    }

    pub fn is_square(self) -> bool {
        self.quadratic_character() >= 0
    }

    /// Square roots by exhaustive search; only intended for small q.
    pub fn sqrt_exhaustive(self) -> Option<FieldElement> {
        self.field().elements().find(|r| *r * *r == self)
    }
}

impl Add for FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: FieldElement) -> FieldElement {
        debug_assert_eq!(self.q, rhs.q);
        self.with(self.value as u64 + rhs.value as u64)
    }
}

impl Sub for FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: FieldElement) -> FieldElement {
        debug_assert_eq!(self.q, rhs.q);
        self.with(self.value as u64 + self.q as u64 - rhs.value as u64)
    }
}

impl Mul for FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: FieldElement) -> FieldElement {
        debug_assert_eq!(self.q, rhs.q);
        self.with(self.value as u64 * rhs.value as u64)
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.with(self.q as u64 - self.value as u64)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
    /// `b`'s residue is the exponent.
    Pow,
    /// Unary; `b` is ignored.
    Inv,
}

pub fn field_arith(a: FieldElement, b: FieldElement, op: FieldOp) -> Result<FieldElement> {
    match op {
        FieldOp::Add => Ok(a + b),
        FieldOp::Sub => Ok(a - b),
        FieldOp::Mul => Ok(a * b),
        FieldOp::Div => a.checked_div(b),
        FieldOp::Pow => Ok(a.pow(b.value as u64)),
        FieldOp::Inv => a.inv(),
    }
}
