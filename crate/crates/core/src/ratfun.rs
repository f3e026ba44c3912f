//! Quotients of [`SparsePoly`]s.
//!
//! Normal form: the denominator is nonzero with leading coefficient one.
//! When at most one variable occurs, numerator and denominator are coprime
//! (Euclid). Otherwise a shared monomial factor is removed and an exact
//! division of the numerator by the denominator is attempted. Equality is
//! decided by cross-multiplication, so it never depends on the form chosen.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::poly::{PolyRing, SparsePoly};

#[derive(Clone)]
pub struct RationalFunction {
    num: SparsePoly,
    den: SparsePoly,
}

impl RationalFunction {
    pub fn new(num: SparsePoly, den: SparsePoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero("denominator"));
        }
        assert!(num.ring() == den.ring(), "ring mismatch");
        Ok(Self::normalized(num, den))
    }

    pub fn from_poly(p: SparsePoly) -> Self {
        let den = p.ring().one();
        RationalFunction { num: p, den }
    }

    pub fn zero(ring: &PolyRing) -> Self {
        Self::from_poly(ring.zero())
    }

    pub fn one(ring: &PolyRing) -> Self {
        Self::from_poly(ring.one())
    }

    pub fn var(ring: &PolyRing, name: &str) -> Self {
        Self::from_poly(ring.var(name))
    }

    pub fn constant(ring: &PolyRing, c: FieldElement) -> Self {
        Self::from_poly(ring.constant(c))
    }

    pub fn ring(&self) -> &PolyRing {
        self.num.ring()
    }

    pub fn numer(&self) -> &SparsePoly {
        &self.num
    }

    pub fn denom(&self) -> &SparsePoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The polynomial this equals, if the denominator is a constant.
    pub fn as_poly(&self) -> Option<SparsePoly> {
        if self.den.total_degree() == Some(0) {
            let c = self.den.constant_term().inverse().expect("nonzero");
            Some(self.num.scale(c))
        } else {
            None
        }
    }

    fn normalized(mut num: SparsePoly, mut den: SparsePoly) -> Self {
        if num.is_zero() {
            let one = den.ring().one();
            return RationalFunction { num, den: one };
        }
        if let Some(g) = num.univariate_gcd(&den) {
            if g.total_degree() != Some(0) {
                num = num.divide_exact(&g).unwrap().expect("gcd divides");
                den = den.divide_exact(&g).unwrap().expect("gcd divides");
            }
        } else {
            let a = num.monomial_content();
            let b = den.monomial_content();
            let common = crate::poly::Monomial(a.0.iter().zip(&b.0).map(|(x, y)| *x.min(y)).collect());
            if common.degree() > 0 {
                num = num.div_monomial(&common);
                den = den.div_monomial(&common);
            }
            if den.total_degree() != Some(0) {
                if let Ok(Some(q)) = num.divide_exact(&den) {
                    num = q;
                    den = den.ring().one();
                }
            }
        }
        let lc = *den.leading_term().expect("nonzero denominator").1;
        let inv = lc.inverse().expect("nonzero");
        RationalFunction {
            num: num.scale(inv),
            den: den.scale(inv),
        }
    }

    pub fn inverse(&self) -> Result<Self> {
        RationalFunction::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &RationalFunction) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero("rational function"));
        }
        Ok(self * &rhs.inverse()?)
    }

    pub fn pow(&self, e: u32) -> Self {
        Self::normalized(self.num.pow(e), self.den.pow(e))
    }

    /// Partial derivative (quotient rule).
    pub fn derivative(&self, var: &str) -> Self {
        let n = &(&self.num.derivative(var) * &self.den) - &(&self.num * &self.den.derivative(var));
        Self::normalized(n, &self.den * &self.den)
    }

    /// Value at a point; `None` where the denominator vanishes.
    pub fn evaluate(&self, point: &[FieldElement]) -> Option<FieldElement> {
        let d = self.den.evaluate(point);
        d.inverse().map(|inv| self.num.evaluate(point) * inv)
    }

    /// Fixes some variables to field values. Fails if the denominator becomes
    /// identically zero.
    pub fn specialize(&self, values: &[(&str, FieldElement)]) -> Result<Self> {
        RationalFunction::new(self.num.specialize(values), self.den.specialize(values))
    }

    /// Composition with a ring homomorphism, see [`SparsePoly::substitute`].
    pub fn substitute(
        &self,
        target: &PolyRing,
        bindings: &[(&str, RationalFunction)],
    ) -> Result<Self> {
        let n = self.num.substitute(target, bindings)?;
        let d = self.den.substitute(target, bindings)?;
        if d.is_zero() {
            return Err(Error::DivisionByZero("substituted denominator"));
        }
        n.checked_div(&d)
    }

    pub fn change_ring(&self, target: &PolyRing) -> Result<Self> {
        RationalFunction::new(self.num.change_ring(target)?, self.den.change_ring(target)?)
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        self.ring() == other.ring() && &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RationalFunction {}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.den == rhs.den {
            return RationalFunction::normalized(&self.num + &rhs.num, self.den.clone());
        }
        let n = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RationalFunction::normalized(n, &self.den * &rhs.den)
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + rhs
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for RationalFunction {
            type Output = RationalFunction;
            fn $f(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $f(self, rhs: &RationalFunction) -> RationalFunction {
                (&self).$f(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
