//! Small binary fields GF(2), GF(4), GF(16), GF(64).
//!
//! Elements are stored as bit vectors of their residue modulo a fixed
//! irreducible polynomial over GF(2):
//!
//! | field  | modulus        | bits     |
//! |--------|----------------|----------|
//! | GF(4)  | w^2 + w + 1    | `0b111`  |
//! | GF(16) | z^4 + z + 1    | `0b10011`|
//! | GF(64) | z^6 + z + 1    | `0b1000011` |
//!
//! GF(4) embeds into GF(16) and GF(64) by sending `w` to the smallest (by bit
//! pattern) root of `z^2 + z + 1` in the larger field. Mixed arithmetic
//! promotes to the larger field; GF(16) and GF(64) are not comparable and
//! mixing them panics.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BinaryField {
    Gf2,
    Gf4,
    Gf16,
    Gf64,
}

impl BinaryField {
    pub const fn degree(self) -> u32 {
        match self {
            BinaryField::Gf2 => 1,
            BinaryField::Gf4 => 2,
            BinaryField::Gf16 => 4,
            BinaryField::Gf64 => 6,
        }
    }

    pub const fn order(self) -> u32 {
        1 << self.degree()
    }

    const fn modulus(self) -> u16 {
        match self {
            BinaryField::Gf2 => 0b10,
            BinaryField::Gf4 => 0b111,
            BinaryField::Gf16 => 0b1_0011,
            BinaryField::Gf64 => 0b100_0011,
        }
    }

    pub fn from_order(order: u32) -> Option<Self> {
        match order {
            2 => Some(BinaryField::Gf2),
            4 => Some(BinaryField::Gf4),
            16 => Some(BinaryField::Gf16),
            64 => Some(BinaryField::Gf64),
            _ => None,
        }
    }

    /// Whether `self` is a subfield of `other`.
    pub fn is_subfield_of(self, other: BinaryField) -> bool {
        other.degree() % self.degree() == 0
    }

    /// Smallest field containing both, if any.
    pub fn join(self, other: BinaryField) -> Option<BinaryField> {
        if self.is_subfield_of(other) {
            Some(other)
        } else if other.is_subfield_of(self) {
            Some(self)
        } else {
            None
        }
    }

    /// Every element of the field, ordered by residue bits.
    pub fn elements(self) -> impl Iterator<Item = FieldElement> {
        (0..self.order()).map(move |b| FieldElement::new(self, b as u8))
    }
}

/// Equality, hashing and ordering go through the smallest subfield holding
/// the value, so `1 ∈ GF(2)` equals `1 ∈ GF(64)`.
#[derive(Clone, Copy)]
pub struct FieldElement {
    field: BinaryField,
    bits: u8,
}

fn clmul_reduce(a: u8, b: u8, field: BinaryField) -> u8 {
    let deg = field.degree();
    let mut acc: u16 = 0;
    for i in 0..deg {
        if (b >> i) & 1 == 1 {
            acc ^= (a as u16) << i;
        }
    }
    let m = field.modulus();
    for i in (deg..2 * deg).rev() {
        if (acc >> i) & 1 == 1 {
            acc ^= m << (i - deg);
        }
    }
    acc as u8
}

fn omega_image(field: BinaryField) -> u8 {
    match field {
        BinaryField::Gf4 => 0b10,
        BinaryField::Gf16 | BinaryField::Gf64 => (2..field.order() as u8)
            .find(|&z| clmul_reduce(z, z, field) ^ z ^ 1 == 0)
            .expect("z^2+z+1 has a root in every even-degree binary field"),
        BinaryField::Gf2 => panic!("GF(2) contains no primitive cube root of unity"),
    }
}

impl FieldElement {
    pub fn new(field: BinaryField, bits: u8) -> Self {
        assert!(
            (bits as u32) < field.order(),
            "residue {bits:#b} out of range for {field:?}"
        );
        FieldElement { field, bits }
    }

    pub fn zero(field: BinaryField) -> Self {
        FieldElement { field, bits: 0 }
    }

    pub fn one(field: BinaryField) -> Self {
        FieldElement { field, bits: 1 }
    }

    /// The generator `w` of GF(4) over GF(2), with `w^2 + w + 1 = 0`.
    pub fn omega() -> Self {
        FieldElement::new(BinaryField::Gf4, 0b10)
    }

    /// The class of `z` in GF(16) or GF(64); it generates the multiplicative group.
    pub fn generator(field: BinaryField) -> Self {
        match field {
            BinaryField::Gf2 => Self::one(field),
            _ => FieldElement::new(field, 0b10),
        }
    }

    pub fn field(&self) -> BinaryField {
        self.field
    }

    pub fn bits(&self) -> u8 {
        self.bits
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    pub fn is_one(&self) -> bool {
        self.bits == 1
    }

    /// Image of `self` in the extension `target`.
    ///
    /// Panics when `self.field()` is not a subfield of `target`.
    pub fn embed(self, target: BinaryField) -> Self {
        assert!(
            self.field.is_subfield_of(target),
            "{:?} does not embed into {:?}",
            self.field,
            target
        );
        if self.field == target {
            return self;
        }
        match self.field {
            BinaryField::Gf2 => FieldElement::new(target, self.bits),
            BinaryField::Gf4 => {
                let w = omega_image(target);
                let hi = if self.bits & 0b10 != 0 { w } else { 0 };
                FieldElement::new(target, hi ^ (self.bits & 1))
            }
            _ => unreachable!("only GF(2) and GF(4) have proper extensions here"),
        }
    }

    fn promote(self, other: Self) -> (Self, Self) {
        if self.field == other.field {
            return (self, other);
        }
        let f = self.field.join(other.field).unwrap_or_else(|| {
            panic!("incompatible fields {:?} and {:?}", self.field, other.field)
        });
        (self.embed(f), other.embed(f))
    }

    pub fn square(self) -> Self {
        self * self
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Self::one(self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    pub fn inverse(self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.pow(self.field.order() as u64 - 2))
        }
    }

    /// Multiplicative order; `None` for zero.
    pub fn multiplicative_order(self) -> Option<u32> {
        if self.is_zero() {
            return None;
        }
        let n = self.field.order() - 1;
        (1..=n).find(|&k| n % k == 0 && self.pow(k as u64).is_one())
    }

    /// Smallest subfield containing the element.
    pub fn minimal_field(self) -> BinaryField {
        for f in [BinaryField::Gf2, BinaryField::Gf4, BinaryField::Gf16] {
            if f.is_subfield_of(self.field) && self.pow(f.order() as u64).bits == self.bits {
                return f;
            }
        }
        self.field
    }

    /// Rewrites the element in the smaller field `target`, if it lies there.
    pub fn restrict(self, target: BinaryField) -> Option<Self> {
        if !target.is_subfield_of(self.field) {
            return None;
        }
        target
            .elements()
            .find(|e| e.embed(self.field).bits == self.bits)
    }
}

impl Add for FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: Self) -> Self {
        let (a, b) = self.promote(rhs);
        FieldElement {
            field: a.field,
            bits: a.bits ^ b.bits,
        }
    }
}

impl Sub for FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: Self) -> Self {
        self + rhs
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> Self {
        self
    }
}

impl AddAssign for FieldElement {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl Mul for FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: Self) -> Self {
        let (a, b) = self.promote(rhs);
        FieldElement {
            field: a.field,
            bits: clmul_reduce(a.bits, b.bits, a.field),
        }
    }
}

impl MulAssign for FieldElement {
    fn mul_assign(&mut self, rhs: Self) {
        *self = *self * rhs;
    }
}

impl FieldElement {
    fn canonical(self) -> (BinaryField, u8) {
        if self.bits < 2 {
            return (BinaryField::Gf2, self.bits);
        }
        let f = self.minimal_field();
        (f, self.restrict(f).map_or(self.bits, |e| e.bits))
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        if self.field == other.field {
            return self.bits == other.bits;
        }
        self.canonical() == other.canonical()
    }
}

impl Eq for FieldElement {}

impl std::hash::Hash for FieldElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.canonical().hash(state);
    }
}

// Deterministic order on canonical representatives; within GF(4) this is
// 0 < 1 < w < w^2.
impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.canonical().cmp(&other.canonical())
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.field, self.bits) {
            (_, 0) => write!(f, "0"),
            (_, 1) => write!(f, "1"),
            (BinaryField::Gf4, 2) => write!(f, "w"),
            (BinaryField::Gf4, 3) => write!(f, "w^2"),
            (field, bits) => write!(f, "z{}[{bits:#b}]", field.order()),
        }
    }
}
