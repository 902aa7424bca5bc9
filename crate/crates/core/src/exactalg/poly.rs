//! Polynomials in `q` and `t` with rational coefficients.
//!
//! Stored recursively as a polynomial in `t` whose coefficients are dense
//! polynomials in `q`. Gcds are computed modularly over Z.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::modgcd::{gcd_z2, ZPoly2};
use super::upoly::UPoly;

/// One of the two parameters of the coefficient field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    Q,
    T,
}

/// Display names for `q` and `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarNames {
    pub q: String,
    pub t: String,
}

impl Default for VarNames {
    fn default() -> Self {
        VarNames {
            q: "q".into(),
            t: "t".into(),
        }
    }
}

impl VarNames {
    fn name(&self, v: Var) -> &str {
        match v {
            Var::Q => &self.q,
            Var::T => &self.t,
        }
    }
}

/// A polynomial in `q`, `t` over Q.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    /// `c[j]` is the coefficient of `t^j`; no trailing zeros.
    c: Vec<UPoly>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { c: Vec::new() }
    }

    pub fn one() -> Self {
        Poly { c: vec![UPoly::one()] }
    }

    pub fn constant(r: BigRational) -> Self {
        Self::from_upoly_t0(UPoly::constant(r))
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(BigRational::one(), v, 1)
    }

    /// `coef * v^deg`.
    pub fn monomial(coef: BigRational, v: Var, deg: u32) -> Self {
        match v {
            Var::Q => Self::from_upoly_t0(UPoly::monomial(coef, deg as usize)),
            Var::T => Self::term(coef, 0, deg),
        }
    }

    /// `coef * q^qdeg * t^tdeg`.
    pub fn term(coef: BigRational, qdeg: u32, tdeg: u32) -> Self {
        if coef.is_zero() {
            return Self::zero();
        }
        let mut c = vec![UPoly::zero(); tdeg as usize + 1];
        c[tdeg as usize] = UPoly::monomial(coef, qdeg as usize);
        Poly { c }
    }

    /// Polynomial in `t` alone, integer coefficients in ascending degree.
    pub fn from_t_coeffs(coeffs: &[i64]) -> Self {
        let c = coeffs
            .iter()
            .map(|&x| UPoly::constant(BigRational::from_integer(BigInt::from(x))))
            .collect();
        Self::from_vec(c)
    }

    fn from_upoly_t0(u: UPoly) -> Self {
        if u.is_zero() {
            Self::zero()
        } else {
            Poly { c: vec![u] }
        }
    }

    fn from_vec(c: Vec<UPoly>) -> Self {
        let mut p = Poly { c };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.c.last().is_some_and(UPoly::is_zero) {
            self.c.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_one()
    }

    /// True for elements of Q.
    pub fn is_constant(&self) -> bool {
        self.c.len() <= 1 && self.c.first().is_none_or(UPoly::is_constant)
    }

    pub fn constant_value(&self) -> Option<BigRational> {
        if self.is_constant() {
            Some(self.c.first().map_or_else(BigRational::zero, |u| u.coeff(0)))
        } else {
            None
        }
    }

    fn is_q_free(&self) -> bool {
        self.c.iter().all(UPoly::is_constant)
    }

    fn is_t_free(&self) -> bool {
        self.c.len() <= 1
    }

    /// Degree in `t` (`None` for zero).
    pub fn deg_t(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn deg_q(&self) -> Option<usize> {
        self.c.iter().filter_map(UPoly::deg).max()
    }

    /// Coefficient of `q^qdeg t^tdeg`.
    pub fn coeff(&self, qdeg: usize, tdeg: usize) -> BigRational {
        self.c
            .get(tdeg)
            .map_or_else(BigRational::zero, |u| u.coeff(qdeg))
    }

    /// Nonzero terms as `(qdeg, tdeg, coefficient)`, unordered.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &BigRational)> + '_ {
        self.c.iter().enumerate().flat_map(|(j, u)| {
            u.c.iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(move |(i, x)| (i, j, x))
        })
    }

    pub fn num_terms(&self) -> usize {
        self.terms().count()
    }

    /// Terms sorted by graded lexicographic order with `q < t`, largest first.
    pub fn sorted_terms(&self) -> Vec<(usize, usize, &BigRational)> {
        let mut v: Vec<_> = self.terms().collect();
        v.sort_by(|a, b| grlex_cmp((b.0, b.1), (a.0, a.1)));
        v
    }

    /// Leading coefficient under graded lex with `q < t`.
    pub fn leading_coeff(&self) -> Option<BigRational> {
        self.terms()
            .max_by(|a, b| grlex_cmp((a.0, a.1), (b.0, b.1)))
            .map(|(_, _, c)| c.clone())
    }

    /// Integer coefficients of a polynomial in `t` alone, ascending degree.
    /// `None` if `q` occurs or a coefficient is not an integer.
    pub fn t_int_coeffs(&self) -> Option<Vec<BigInt>> {
        if !self.is_q_free() {
            return None;
        }
        self.c
            .iter()
            .map(|u| {
                let r = u.coeff(0);
                r.is_integer().then(|| r.to_integer())
            })
            .collect()
    }

    pub fn neg(&self) -> Poly {
        Poly {
            c: self.c.iter().map(UPoly::neg).collect(),
        }
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        let c = (0..n)
            .map(|j| match (self.c.get(j), o.c.get(j)) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Poly::from_vec(c)
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        let c = (0..n)
            .map(|j| match (self.c.get(j), o.c.get(j)) {
                (Some(a), Some(b)) => a.sub(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.neg(),
                (None, None) => unreachable!(),
            })
            .collect();
        Poly::from_vec(c)
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        if self.is_one() {
            return o.clone();
        }
        if o.is_one() {
            return self.clone();
        }
        let mut c = vec![UPoly::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if !b.is_zero() {
                    c[i + j] = c[i + j].add(&a.mul(b));
                }
            }
        }
        Poly::from_vec(c)
    }

    pub fn scale(&self, r: &BigRational) -> Poly {
        if r.is_zero() {
            return Poly::zero();
        }
        Poly {
            c: self.c.iter().map(|u| u.scale(r)).collect(),
        }
    }

    fn mul_upoly(&self, u: &UPoly) -> Poly {
        Poly::from_vec(self.c.iter().map(|x| x.mul(u)).collect())
    }

    fn shift_t(&self, k: usize) -> Poly {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut c = vec![UPoly::zero(); k];
        c.extend(self.c.iter().cloned());
        Poly { c }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn exact_div(&self, d: &Poly) -> Option<Poly> {
        assert!(!d.is_zero(), "exact division by zero polynomial");
        if d.is_one() {
            return Some(self.clone());
        }
        if let Some(k) = d.constant_value() {
            return Some(self.scale(&k.recip()));
        }
        if d.is_t_free() {
            let u = &d.c[0];
            let c = self
                .c
                .iter()
                .map(|x| x.exact_div(u))
                .collect::<Option<Vec<_>>>()?;
            return Some(Poly::from_vec(c));
        }
        let db = d.c.len() - 1;
        let lcd = &d.c[db];
        let mut r = self.clone();
        let mut q = vec![UPoly::zero(); self.c.len().saturating_sub(db)];
        while !r.is_zero() {
            let dr = r.c.len() - 1;
            if dr < db {
                return None;
            }
            let f = r.c[dr].exact_div(lcd)?;
            let shift = dr - db;
            r = r.sub(&d.mul_upoly(&f).shift_t(shift));
            q[shift] = q[shift].add(&f);
        }
        Some(Poly::from_vec(q))
    }

    /// Clear denominators: integer coefficients indexed `[t][q]`.
    fn to_z2(&self) -> ZPoly2 {
        let den = self
            .c
            .iter()
            .flat_map(|u| u.c.iter())
            .fold(BigInt::one(), |l, x| l.lcm(x.denom()));
        self.c
            .iter()
            .map(|u| u.c.iter().map(|x| (x * &den).to_integer()).collect())
            .collect()
    }

    fn from_z2(z: ZPoly2) -> Poly {
        Poly::from_vec(
            z.into_iter()
                .map(|u| UPoly::from_vec(u.into_iter().map(BigRational::from_integer).collect()))
                .collect(),
        )
    }

    /// Greatest common divisor, normalized so its graded-lex leading
    /// coefficient is one. `gcd(0, 0) = 0`.
    pub fn gcd(&self, o: &Poly) -> Poly {
        if self.is_zero() {
            return o.monic();
        }
        if o.is_zero() {
            return self.monic();
        }
        if self.is_constant() || o.is_constant() {
            return Poly::one();
        }
        if self.is_t_free() && o.is_t_free() {
            return Poly::from_upoly_t0(self.c[0].gcd(&o.c[0]));
        }
        if self == o {
            return self.monic();
        }
        Poly::from_z2(gcd_z2(&self.to_z2(), &o.to_z2())).monic()
    }

    /// Scale so the graded-lex leading coefficient is one.
    pub fn monic(&self) -> Poly {
        match self.leading_coeff() {
            Some(lc) if !lc.is_one() => self.scale(&lc.recip()),
            _ => self.clone(),
        }
    }

    /// Rendering with the given variable names.
    pub fn display_with<'a>(&'a self, names: &'a VarNames) -> PolyDisplay<'a> {
        PolyDisplay { p: self, names }
    }
}

/// Graded lexicographic comparison of `(qdeg, tdeg)` with `q < t`.
pub(crate) fn grlex_cmp(a: (usize, usize), b: (usize, usize)) -> Ordering {
    (a.0 + a.1)
        .cmp(&(b.0 + b.1))
        .then(a.1.cmp(&b.1))
        .then(a.0.cmp(&b.0))
}

pub struct PolyDisplay<'a> {
    p: &'a Poly,
    names: &'a VarNames,
}

fn write_monomial(
    f: &mut fmt::Formatter<'_>,
    names: &VarNames,
    qd: usize,
    td: usize,
) -> fmt::Result {
    let mut first = true;
    for (v, d) in [(Var::Q, qd), (Var::T, td)] {
        if d == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        write!(f, "{}", names.name(v))?;
        if d > 1 {
            write!(f, "^{d}")?;
        }
    }
    Ok(())
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.p.sorted_terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (qd, td, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            if qd == 0 && td == 0 {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write_monomial(f, self.names, qd, td)?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = VarNames::default();
        write!(f, "{}", self.display_with(&names))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Poly {
        Poly::var(Var::Q)
    }
    fn t() -> Poly {
        Poly::var(Var::T)
    }
    fn c(n: i64) -> Poly {
        Poly::from_int(n)
    }

    #[test]
    fn rendering_order() {
        let p = t().add(&c(2));
        assert_eq!(p.to_string(), "t + 2");
        let p = t().pow(2).add(&t());
        assert_eq!(p.to_string(), "t^2 + t");
        // grlex with q < t: q*t, then t^... total degree ties broken by t
        let p = q().mul(&t()).sub(&t()).add(&q()).sub(&c(1));
        assert_eq!(p.to_string(), "q*t - t + q - 1");
        assert_eq!(c(0).to_string(), "0");
        let half = Poly::term(BigRational::new(1.into(), 2.into()), 0, 1).neg();
        assert_eq!(half.to_string(), "-1/2*t");
    }

    #[test]
    fn exact_division_bivariate() {
        let a = q().sub(&t());
        let b = q().add(&t()).add(&c(1));
        let prod = a.mul(&b);
        assert_eq!(prod.exact_div(&a), Some(b.clone()));
        assert_eq!(prod.exact_div(&b), Some(a.clone()));
        assert_eq!(b.exact_div(&a), None);
    }

    #[test]
    fn gcd_bivariate() {
        let common = q().mul(&t()).sub(&c(1));
        let a = common.mul(&q().add(&c(3)));
        let b = common.mul(&t().pow(2).add(&q()));
        assert_eq!(a.gcd(&b), common.monic());
        let one = q().add(&c(1)).gcd(&t().add(&c(1)));
        assert!(one.is_one());
        // content in q only
        let a = q().add(&c(1)).mul(&t());
        let b = q().add(&c(1)).mul(&t().add(&c(2)));
        assert_eq!(a.gcd(&b), q().add(&c(1)));
    }

    #[test]
    fn leading_coefficient_grlex() {
        // 3*q^2 - 2*q*t + 5: degree-2 tie broken by t, so -2*q*t leads
        let p = Poly::term(BigRational::from_integer(3.into()), 2, 0)
            .add(&Poly::term(BigRational::from_integer((-2).into()), 1, 1))
            .add(&c(5));
        assert_eq!(p.leading_coeff(), Some(BigRational::from_integer((-2).into())));
    }
}
