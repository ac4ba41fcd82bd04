use std::ops::{Add, Mul, Sub};

use crate::error::{Error, Result};

use super::prime::{FieldElement, FieldSpec};

/// `x + y*sqrt(sigma)` in F_q(sqrt(sigma)), with sigma a non-square.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuadExtElement {
    pub x: FieldElement,
    pub y: FieldElement,
    sigma: FieldElement,
}

impl QuadExtElement {
    pub fn new(x: FieldElement, y: FieldElement, sigma: FieldElement) -> Result<Self> {
        if sigma.quadratic_character() != -1 {
            return Err(Error::BadSigma {
                q: sigma.modulus(),
                sigma: sigma.value(),
            });
        }
        Ok(QuadExtElement { x, y, sigma })
    }

    /// Caller guarantees sigma is a non-square.
    pub(crate) fn new_unchecked(x: FieldElement, y: FieldElement, sigma: FieldElement) -> Self {
        QuadExtElement { x, y, sigma }
    }

    pub fn sigma(self) -> FieldElement {
        self.sigma
    }

    pub fn re(self) -> FieldElement {
        self.x
    }

    pub fn im(self) -> FieldElement {
        self.y
    }

    fn field(self) -> FieldSpec {
        self.x.field()
    }

    pub fn from_base(c: FieldElement, sigma: FieldElement) -> Self {
        Self::new_unchecked(c, c.field().zero(), sigma)
    }

    pub fn conj(self) -> Self {
        Self::new_unchecked(self.x, -self.y, self.sigma)
    }

    pub fn norm(self) -> FieldElement {
        self.x * self.x - self.sigma * self.y * self.y
    }

    pub fn is_zero(self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn inv(self) -> Result<Self> {
        // Norm vanishes only at zero because sigma is a non-square.
        let n_inv = self.norm().inv()?;
        let c = self.conj();
        Ok(Self::new_unchecked(c.x * n_inv, c.y * n_inv, self.sigma))
    }

    pub fn checked_div(self, rhs: Self) -> Result<Self> {
        Ok(self * rhs.inv()?)
    }

    pub fn in_half_plane(self) -> bool {
        !self.y.is_zero()
    }

    pub fn zero_like(self) -> Self {
        Self::from_base(self.field().zero(), self.sigma)
    }
}

impl Add for QuadExtElement {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new_unchecked(self.x + rhs.x, self.y + rhs.y, self.sigma)
    }
}

impl Sub for QuadExtElement {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new_unchecked(self.x - rhs.x, self.y - rhs.y, self.sigma)
    }
}

impl Mul for QuadExtElement {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        debug_assert_eq!(self.sigma, rhs.sigma);
        Self::new_unchecked(
            self.x * rhs.x + self.sigma * self.y * rhs.y,
            self.x * rhs.y + self.y * rhs.x,
            self.sigma,
        )
    }
}

/// d(z, w) = N(z - w) / (Im z * Im w).
pub fn poincare_distance(z: QuadExtElement, w: QuadExtElement) -> Result<FieldElement> {
    if !z.in_half_plane() || !w.in_half_plane() {
        return Err(Error::NotInHalfPlane);
    }
    (z - w).norm().checked_div(z.y * w.y)
}

/// An element of GL(2, F_q) acting by fractional linear transformations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Mobius {
    pub a: FieldElement,
    pub b: FieldElement,
    pub c: FieldElement,
    pub d: FieldElement,
}

impl Mobius {
    pub fn new(
        a: FieldElement,
        b: FieldElement,
        c: FieldElement,
        d: FieldElement,
    ) -> Result<Self> {
        if (a * d - b * c).is_zero() {
            return Err(Error::SingularMatrix);
        }
        Ok(Mobius { a, b, c, d })
    }

    pub fn det(&self) -> FieldElement {
        self.a * self.d - self.b * self.c
    }
}

/// (a z + b) / (c z + d). The denominator cannot vanish for z in H_q.
pub fn mobius_action(g: &Mobius, z: QuadExtElement) -> Result<QuadExtElement> {
    if g.det().is_zero() {
        return Err(Error::SingularMatrix);
    }
    if !z.in_half_plane() {
        return Err(Error::NotInHalfPlane);
    }
    let s = z.sigma();
    let lift = |c| QuadExtElement::from_base(c, s);
    let num = lift(g.a) * z + lift(g.b);
    let den = lift(g.c) * z + lift(g.d);
    num.checked_div(den)
}
