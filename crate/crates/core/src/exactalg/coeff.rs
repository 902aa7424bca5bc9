//! Elements of Q(q, t).

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::{Poly, Var, VarNames};
use crate::error::{Error, Result};

/// A reduced fraction of polynomials in `q`, `t`.
///
/// Canonical: numerator and denominator are coprime and the denominator's
/// leading coefficient (graded lex, `q < t`) is one, so `==` is equality in
/// the field. Zero is `0/1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coeff {
    num: Poly,
    den: Poly,
}

impl Default for Coeff {
    fn default() -> Self {
        Coeff::zero()
    }
}

impl Coeff {
    pub fn zero() -> Self {
        Coeff {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        Coeff {
            num: Poly::one(),
            den: Poly::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_poly(Poly::from_int(n))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Self::from_rational(BigRational::from_integer(n))
    }

    pub fn from_rational(r: BigRational) -> Self {
        Self::from_poly(Poly::constant(r))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Self::from_rational(BigRational::new(n.into(), d.into()))
    }

    pub fn from_poly(p: Poly) -> Self {
        Coeff {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn var(v: Var) -> Self {
        Self::from_poly(Poly::var(v))
    }

    pub fn q() -> Self {
        Self::var(Var::Q)
    }

    pub fn t() -> Self {
        Self::var(Var::T)
    }

    /// Reduce `num / den` to canonical form.
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_one() {
                (num, den)
            } else {
                (
                    num.exact_div(&g).expect("gcd divides numerator"),
                    den.exact_div(&g).expect("gcd divides denominator"),
                )
            }
        };
        Self::normalize_lc(num, den)
    }

    fn normalize_lc(num: Poly, den: Poly) -> Self {
        let lc = den.leading_coeff().expect("nonzero denominator");
        if lc.is_one() {
            Coeff { num, den }
        } else {
            let inv = lc.recip();
            Coeff {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    /// `sum a_i * b_i`.
    pub fn sum_of_products<'a>(pairs: impl IntoIterator<Item = (&'a Coeff, &'a Coeff)>) -> Coeff {
        let mut acc = Coeff::zero();
        for (a, b) in pairs {
            acc += &(a * b);
        }
        acc
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Rational constant value, if free of `q` and `t`.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.den.is_one() {
            self.num.constant_value()
        } else {
            None
        }
    }

    /// A single term `c * q^a * t^b`.
    pub fn is_monomial(&self) -> bool {
        self.den.is_one() && self.num.num_terms() <= 1
    }

    pub fn inv(&self) -> Result<Coeff> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize_lc(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, o: &Coeff) -> Result<Coeff> {
        if o.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if o.is_one() {
            return Ok(self.clone());
        }
        Ok(self * &o.inv()?)
    }

    pub fn pow(&self, e: u32) -> Coeff {
        Coeff {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
        .renormalized()
    }

    fn renormalized(self) -> Coeff {
        Self::normalize_lc(self.num, self.den)
    }

    /// Exact evaluation at the assignment. Unassigned variables stay symbolic.
    ///
    /// The fraction is already reduced, so numerator and denominator are
    /// evaluated separately; a vanishing denominator is a pole.
    pub fn substitute(&self, assignments: &[(Var, Coeff)]) -> Result<Coeff> {
        let value_of = |v: Var| {
            assignments
                .iter()
                .find(|(w, _)| *w == v)
                .map(|(_, c)| c.clone())
                .unwrap_or_else(|| Coeff::var(v))
        };
        let qv = value_of(Var::Q);
        let tv = value_of(Var::T);
        let n = eval_poly(&self.num, &qv, &tv);
        let d = eval_poly(&self.den, &qv, &tv);
        if d.is_zero() {
            let desc = assignments
                .iter()
                .map(|(v, c)| {
                    let name = match v {
                        Var::Q => "q",
                        Var::T => "t",
                    };
                    format!("{name}:={c}")
                })
                .collect::<Vec<_>>()
                .join(", ");
            return Err(Error::Pole { assignment: desc });
        }
        n.checked_div(&d)
    }

    pub fn display_with<'a>(&'a self, names: &'a VarNames) -> CoeffDisplay<'a> {
        CoeffDisplay { c: self, names }
    }
}

fn eval_poly(p: &Poly, qv: &Coeff, tv: &Coeff) -> Coeff {
    if p.is_zero() {
        return Coeff::zero();
    }
    let dq = p.deg_q().unwrap_or(0);
    let dt = p.deg_t().unwrap_or(0);
    let mut acc = Coeff::zero();
    for j in (0..=dt).rev() {
        let mut inner = Coeff::zero();
        for i in (0..=dq).rev() {
            inner = &inner * qv;
            let c = p.coeff(i, j);
            if !c.is_zero() {
                inner = &inner + &Coeff::from_rational(c);
            }
        }
        acc = &(&acc * tv) + &inner;
    }
    acc
}

impl Zero for Coeff {
    fn zero() -> Self {
        Coeff::zero()
    }
    fn is_zero(&self) -> bool {
        Coeff::is_zero(self)
    }
}

impl One for Coeff {
    fn one() -> Self {
        Coeff::one()
    }
}

impl From<i64> for Coeff {
    fn from(n: i64) -> Self {
        Coeff::from_int(n)
    }
}

impl From<Poly> for Coeff {
    fn from(p: Poly) -> Self {
        Coeff::from_poly(p)
    }
}

impl Add<&Coeff> for &Coeff {
    type Output = Coeff;
    fn add(self, o: &Coeff) -> Coeff {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            let num = self.num.add(&o.num);
            if self.den.is_one() {
                return Coeff::from_poly(num);
            }
            return Coeff::reduce(num, self.den.clone());
        }
        if self.den.is_one() {
            let num = self.num.mul(&o.den).add(&o.num);
            return Coeff {
                num,
                den: o.den.clone(),
            };
        }
        if o.den.is_one() {
            let num = o.num.mul(&self.den).add(&self.num);
            return Coeff {
                num,
                den: self.den.clone(),
            };
        }
        let g = self.den.gcd(&o.den);
        let b1 = self.den.exact_div(&g).expect("gcd divides");
        let d1 = o.den.exact_div(&g).expect("gcd divides");
        let num = self.num.mul(&d1).add(&o.num.mul(&b1));
        if num.is_zero() {
            return Coeff::zero();
        }
        let den = b1.mul(&o.den);
        if g.is_one() {
            return Coeff::normalize_lc(num, den);
        }
        let g2 = num.gcd(&g);
        if g2.is_one() {
            Coeff::normalize_lc(num, den)
        } else {
            Coeff::normalize_lc(
                num.exact_div(&g2).expect("gcd divides"),
                den.exact_div(&g2).expect("gcd divides"),
            )
        }
    }
}

impl Neg for &Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        Coeff {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

impl Neg for Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        -&self
    }
}

impl Sub<&Coeff> for &Coeff {
    type Output = Coeff;
    fn sub(self, o: &Coeff) -> Coeff {
        self + &(-o)
    }
}

impl Mul<&Coeff> for &Coeff {
    type Output = Coeff;
    fn mul(self, o: &Coeff) -> Coeff {
        if self.is_zero() || o.is_zero() {
            return Coeff::zero();
        }
        if self.is_one() {
            return o.clone();
        }
        if o.is_one() {
            return self.clone();
        }
        if self.den.is_one() && o.den.is_one() {
            return Coeff::from_poly(self.num.mul(&o.num));
        }
        // cross-cancel
        let g1 = self.num.gcd(&o.den);
        let g2 = o.num.gcd(&self.den);
        let (a, d) = if g1.is_one() {
            (self.num.clone(), o.den.clone())
        } else {
            (
                self.num.exact_div(&g1).expect("gcd divides"),
                o.den.exact_div(&g1).expect("gcd divides"),
            )
        };
        let (c, b) = if g2.is_one() {
            (o.num.clone(), self.den.clone())
        } else {
            (
                o.num.exact_div(&g2).expect("gcd divides"),
                self.den.exact_div(&g2).expect("gcd divides"),
            )
        };
        Coeff::normalize_lc(a.mul(&c), b.mul(&d))
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Coeff> for Coeff {
            type Output = Coeff;
            fn $m(self, o: Coeff) -> Coeff {
                (&self).$m(&o)
            }
        }
        impl $tr<&Coeff> for Coeff {
            type Output = Coeff;
            fn $m(self, o: &Coeff) -> Coeff {
                (&self).$m(o)
            }
        }
        impl $tr<Coeff> for &Coeff {
            type Output = Coeff;
            fn $m(self, o: Coeff) -> Coeff {
                self.$m(&o)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&Coeff> for Coeff {
    fn add_assign(&mut self, o: &Coeff) {
        *self = &*self + o;
    }
}

impl SubAssign<&Coeff> for Coeff {
    fn sub_assign(&mut self, o: &Coeff) {
        *self = &*self - o;
    }
}

pub struct CoeffDisplay<'a> {
    c: &'a Coeff,
    names: &'a VarNames,
}

impl fmt::Display for CoeffDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = self.c.num.display_with(self.names).to_string();
        if self.c.den.is_one() {
            return write!(f, "{num}");
        }
        let den = self.c.den.display_with(self.names).to_string();
        let num_bare = self.c.num.num_terms() == 1 && !num.contains('/');
        let den_bare = self.c.den.num_terms() == 1 && !den.contains('*');
        match (num_bare, den_bare) {
            (true, true) => write!(f, "{num}/{den}"),
            (true, false) => write!(f, "{num}/({den})"),
            (false, true) => write!(f, "({num})/{den}"),
            (false, false) => write!(f, "({num})/({den})"),
        }
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = VarNames::default();
        write!(f, "{}", self.display_with(&names))
    }
}
