use crate::error::{Error, Result};

/// Irreducible moduli, indexed by k - 2. Bit i is the coefficient of x^i.
const MODULI: [u32; 7] = [
    0b111,       // x^2 + x + 1
    0b1011,      // x^3 + x + 1
    0b10011,     // x^4 + x + 1
    0b100101,    // x^5 + x^2 + 1
    0b1000011,   // x^6 + x + 1
    0b10000011,  // x^7 + x + 1
    0b100011011, // x^8 + x^4 + x^3 + x + 1
];

/// GF(2^k) in polynomial basis. Elements are plain `u32` bitvectors below 2^k.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BinaryFieldSpec {
    k: u32,
    modulus: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Gf2kOp {
    Add,
    Mul,
    /// Second operand is the exponent.
    Pow,
}

impl BinaryFieldSpec {
    pub fn new(k: u32) -> Result<Self> {
        if !(2..=8).contains(&k) {
            return Err(Error::BadParameter(format!("GF(2^k) needs 2 <= k <= 8, got {k}")));
        }
        Ok(BinaryFieldSpec {
            k,
            modulus: MODULI[k as usize - 2],
        })
    }

    pub fn k(self) -> u32 {
        self.k
    }

    pub fn modulus(self) -> u32 {
        self.modulus
    }

    pub fn order(self) -> u32 {
        1 << self.k
    }

    pub fn elements(self) -> impl Iterator<Item = u32> {
        0..self.order()
    }

    pub fn add(self, a: u32, b: u32) -> u32 {
        a ^ b
    }

    /// Shift-and-add multiplication with reduction by the table modulus.
    pub fn mul(self, mut a: u32, mut b: u32) -> u32 {
        debug_assert!(a < self.order() && b < self.order());
        let top = self.order();
        let mut acc = 0;
        while b != 0 {
            if b & 1 == 1 {
                acc ^= a;
            }
            b >>= 1;
            a <<= 1;
            if a & top != 0 {
                a ^= self.modulus;
            }
        }
        acc
    }

    pub fn pow(self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn arith(self, a: u32, b: u32, op: Gf2kOp) -> u32 {
        match op {
            Gf2kOp::Add => self.add(a, b),
            Gf2kOp::Mul => self.mul(a, b),
            Gf2kOp::Pow => self.pow(a, b as u64),
        }
    }

    /// Coefficient of x^(k-1).
    pub fn leading_bit(self, a: u32) -> u32 {
        (a >> (self.k - 1)) & 1
    }
}
