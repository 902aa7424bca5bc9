use std::collections::BTreeMap;
use std::fmt;

use crate::combinat::Partition;
use crate::error::{Error, Result};
use crate::exactalg::{Coeff, Var, VarNames};

/// Name of a registered basis, e.g. `m`, `s`, `QP`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisId(String);

impl BasisId {
    pub fn new(name: impl Into<String>) -> Self {
        BasisId(name.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for BasisId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for BasisId {
    fn from(s: &str) -> Self {
        BasisId::new(s)
    }
}

impl From<&BasisId> for BasisId {
    fn from(b: &BasisId) -> Self {
        b.clone()
    }
}

/// A finite linear combination of basis elements of one basis.
///
/// Zero coefficients are never stored, so two elements of the same basis are
/// equal exactly when `==` says so. Mixed degrees are allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymElement {
    basis: BasisId,
    terms: BTreeMap<Partition, Coeff>,
}

impl SymElement {
    pub fn zero(basis: impl Into<BasisId>) -> Self {
        SymElement {
            basis: basis.into(),
            terms: BTreeMap::new(),
        }
    }

    /// The basis element indexed by `p`.
    pub fn basis_element(basis: impl Into<BasisId>, p: Partition) -> Self {
        Self::term(basis, p, Coeff::one())
    }

    pub fn term(basis: impl Into<BasisId>, p: Partition, c: Coeff) -> Self {
        Self::from_terms(basis, [(p, c)])
    }

    /// Sums repeated partitions and drops zeros.
    pub fn from_terms(
        basis: impl Into<BasisId>,
        terms: impl IntoIterator<Item = (Partition, Coeff)>,
    ) -> Self {
        let mut map: BTreeMap<Partition, Coeff> = BTreeMap::new();
        for (p, c) in terms {
            if c.is_zero() {
                continue;
            }
            *map.entry(p).or_default() += &c;
        }
        map.retain(|_, c| !c.is_zero());
        SymElement {
            basis: basis.into(),
            terms: map,
        }
    }

    pub fn basis(&self) -> &BasisId {
        &self.basis
    }

    pub fn terms(&self) -> &BTreeMap<Partition, Coeff> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Partition, Coeff> {
        self.terms
    }

    pub fn coeff(&self, p: &Partition) -> Coeff {
        self.terms.get(p).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Degrees present, ascending.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.terms.keys().map(Partition::size).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    /// The homogeneous component of degree `n`.
    pub fn component(&self, n: usize) -> SymElement {
        SymElement {
            basis: self.basis.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| p.size() == n)
                .map(|(p, c)| (p.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> SymElement {
        if c.is_zero() {
            return SymElement::zero(self.basis.clone());
        }
        SymElement {
            basis: self.basis.clone(),
            terms: self
                .terms
                .iter()
                .map(|(p, x)| (p.clone(), x * c))
                .collect(),
        }
    }

    pub fn neg(&self) -> SymElement {
        self.scale(&Coeff::from_int(-1))
    }

    /// Coefficientwise sum; both operands must be in the same basis.
    pub fn checked_add(&self, o: &SymElement) -> Result<SymElement> {
        self.combine(o, false)
    }

    pub fn checked_sub(&self, o: &SymElement) -> Result<SymElement> {
        self.combine(o, true)
    }

    fn combine(&self, o: &SymElement, subtract: bool) -> Result<SymElement> {
        if self.basis != o.basis {
            return Err(Error::BasisMismatch(
                self.basis.to_string(),
                o.basis.to_string(),
            ));
        }
        let mut terms = self.terms.clone();
        for (p, c) in &o.terms {
            let e = terms.entry(p.clone()).or_default();
            if subtract {
                *e -= c;
            } else {
                *e += c;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(SymElement {
            basis: self.basis.clone(),
            terms,
        })
    }

    pub fn substitute(&self, assignments: &[(Var, Coeff)]) -> Result<SymElement> {
        let terms = self
            .terms
            .iter()
            .map(|(p, c)| Ok((p.clone(), c.substitute(assignments)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(SymElement::from_terms(self.basis.clone(), terms))
    }

    /// Terms in display order: degree ascending, then partitions
    /// lexicographically ascending.
    pub fn sorted_terms(&self) -> Vec<(&Partition, &Coeff)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.size().cmp(&b.0.size()).then(a.0.cmp(b.0)));
        v
    }

    pub fn display_with<'a>(&'a self, names: &'a VarNames) -> ElementDisplay<'a> {
        ElementDisplay { e: self, names }
    }
}

pub struct ElementDisplay<'a> {
    e: &'a SymElement,
    names: &'a VarNames,
}

impl fmt::Display for ElementDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.e.sorted_terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        let minus_one = Coeff::from_int(-1);
        for (i, (p, c)) in terms.into_iter().enumerate() {
            let text = c.display_with(self.names).to_string();
            let (negative, body) = if c.is_one() {
                (false, String::new())
            } else if *c == minus_one {
                (true, String::new())
            } else if c.is_monomial() {
                match text.strip_prefix('-') {
                    Some(rest) => (true, format!("{rest}*")),
                    None => (false, format!("{text}*")),
                }
            } else {
                (false, format!("({text})*"))
            };
            match (i, negative) {
                (0, false) => {}
                (0, true) => f.write_str("-")?,
                (_, false) => f.write_str(" + ")?,
                (_, true) => f.write_str(" - ")?,
            }
            write!(f, "{body}{}{p}", self.e.basis)?;
        }
        Ok(())
    }
}

impl fmt::Display for SymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_with(&VarNames::default()).fmt(f)
    }
}
