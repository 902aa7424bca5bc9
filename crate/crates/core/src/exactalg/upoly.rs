//! Dense univariate polynomials over Q, used as the coefficient ring of the
//! bivariate representation in [`super::poly`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;

use super::modgcd::gcd_z;
use num_traits::{One, Zero};

/// Coefficients in ascending degree order; empty vector is the zero polynomial
/// and the last entry is never zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub(crate) struct UPoly {
    pub(crate) c: Vec<BigRational>,
}

impl UPoly {
    pub(crate) fn zero() -> Self {
        UPoly { c: Vec::new() }
    }

    pub(crate) fn one() -> Self {
        UPoly {
            c: vec![BigRational::one()],
        }
    }

    pub(crate) fn constant(r: BigRational) -> Self {
        let mut p = UPoly { c: vec![r] };
        p.trim();
        p
    }

    pub(crate) fn monomial(r: BigRational, deg: usize) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        let mut c = vec![BigRational::zero(); deg + 1];
        c[deg] = r;
        UPoly { c }
    }

    pub(crate) fn from_vec(c: Vec<BigRational>) -> Self {
        let mut p = UPoly { c };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.c.last().is_some_and(|x| x.is_zero()) {
            self.c.pop();
        }
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub(crate) fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_one()
    }

    pub(crate) fn is_constant(&self) -> bool {
        self.c.len() <= 1
    }

    pub(crate) fn deg(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub(crate) fn lc(&self) -> Option<&BigRational> {
        self.c.last()
    }

    pub(crate) fn coeff(&self, i: usize) -> BigRational {
        self.c.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub(crate) fn add(&self, o: &UPoly) -> UPoly {
        let (long, short) = if self.c.len() >= o.c.len() {
            (self, o)
        } else {
            (o, self)
        };
        let mut c = long.c.clone();
        for (i, x) in short.c.iter().enumerate() {
            c[i] += x;
        }
        UPoly::from_vec(c)
    }

    pub(crate) fn neg(&self) -> UPoly {
        UPoly {
            c: self.c.iter().map(|x| -x).collect(),
        }
    }

    pub(crate) fn sub(&self, o: &UPoly) -> UPoly {
        let n = self.c.len().max(o.c.len());
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.c.get(i);
            let b = o.c.get(i);
            c.push(match (a, b) {
                (Some(a), Some(b)) => a - b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => -b,
                (None, None) => unreachable!(),
            });
        }
        UPoly::from_vec(c)
    }

    pub(crate) fn mul(&self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero();
        }
        if self.is_one() {
            return o.clone();
        }
        if o.is_one() {
            return self.clone();
        }
        let mut c = vec![BigRational::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if !b.is_zero() {
                    c[i + j] += a * b;
                }
            }
        }
        UPoly::from_vec(c)
    }

    pub(crate) fn scale(&self, r: &BigRational) -> UPoly {
        if r.is_zero() {
            return UPoly::zero();
        }
        if r.is_one() {
            return self.clone();
        }
        UPoly {
            c: self.c.iter().map(|x| x * r).collect(),
        }
    }

    /// Euclidean division; panics on a zero divisor.
    pub(crate) fn div_rem(&self, d: &UPoly) -> (UPoly, UPoly) {
        let dd = d.deg().expect("division by zero polynomial");
        let lc_inv = d.c[dd].recip();
        let mut r = self.c.clone();
        if r.len() <= dd {
            return (UPoly::zero(), self.clone());
        }
        let mut q = vec![BigRational::zero(); r.len() - dd];
        for i in (dd..r.len()).rev() {
            if r[i].is_zero() {
                continue;
            }
            let f = &r[i] * &lc_inv;
            for (j, dj) in d.c.iter().enumerate() {
                if !dj.is_zero() {
                    let v = &f * dj;
                    r[i - dd + j] -= v;
                }
            }
            q[i - dd] = f;
        }
        r.truncate(dd);
        (UPoly::from_vec(q), UPoly::from_vec(r))
    }

    pub(crate) fn exact_div(&self, d: &UPoly) -> Option<UPoly> {
        if d.is_one() {
            return Some(self.clone());
        }
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    pub(crate) fn monic(&self) -> UPoly {
        match self.lc() {
            Some(lc) if !lc.is_one() => self.scale(&lc.recip()),
            _ => self.clone(),
        }
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub(crate) fn gcd(&self, o: &UPoly) -> UPoly {
        if self.is_zero() {
            return o.monic();
        }
        if o.is_zero() {
            return self.monic();
        }
        if self.is_constant() || o.is_constant() {
            return UPoly::one();
        }
        let g = gcd_z(&self.to_z(), &o.to_z());
        UPoly::from_vec(g.into_iter().map(BigRational::from_integer).collect()).monic()
    }

    /// Clear denominators.
    fn to_z(&self) -> Vec<BigInt> {
        let den = self.c.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
        self.c.iter().map(|x| (x * &den).to_integer()).collect()
    }

    /// Evaluate at a rational point (Horner).
    #[cfg(test)]
    pub(crate) fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.c.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
}
