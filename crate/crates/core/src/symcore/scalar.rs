//! Scalar products diagonal on power sums, and Gram-Schmidt.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::One;

use super::element::{BasisId, SymElement};
use super::ring::SymRing;
use crate::combinat::{partitions, Partition};
use crate::error::{Error, Result};
use crate::exactalg::{Coeff, Poly, Var};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ScalarProduct {
    /// `<p_l, p_l> = z_l`
    Hall,
    /// `z_l * prod 1 / (1 - t^l_i)`
    HallT,
    /// `z_l * prod (1 - q^l_i) / (1 - t^l_i)`
    HallQT,
}

impl ScalarProduct {
    pub const ALL: [ScalarProduct; 3] = [ScalarProduct::Hall, ScalarProduct::HallT, ScalarProduct::HallQT];

    pub fn name(self) -> &'static str {
        match self {
            ScalarProduct::Hall => "hall",
            ScalarProduct::HallT => "hall_t",
            ScalarProduct::HallQT => "hall_qt",
        }
    }

    /// `<p_lambda, p_lambda>`.
    pub fn diagonal(self, lambda: &Partition) -> Coeff {
        let mut num = Poly::constant(lambda.z().into());
        let mut den = Poly::one();
        let one_minus = |v: Var, k: u32| Poly::one().sub(&Poly::monomial(BigRational::one(), v, k));
        for &part in lambda.parts() {
            if self != ScalarProduct::Hall {
                den = den.mul(&one_minus(Var::T, part));
            }
            if self == ScalarProduct::HallQT {
                num = num.mul(&one_minus(Var::Q, part));
            }
        }
        Coeff::new(num, den).expect("1 - t^k is nonzero")
    }
}

impl fmt::Display for ScalarProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ScalarProduct {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ScalarProduct::ALL
            .into_iter()
            .find(|sp| sp.name() == s)
            .ok_or_else(|| Error::InvalidRule(format!("unknown scalar product `{s}`")))
    }
}

fn pairing(
    a: &BTreeMap<Partition, Coeff>,
    b: &BTreeMap<Partition, Coeff>,
    sp: ScalarProduct,
) -> Coeff {
    let mut acc = Coeff::zero();
    for (p, x) in a {
        if let Some(y) = b.get(p) {
            acc += &(&(x * y) * &sp.diagonal(p));
        }
    }
    acc
}

impl SymRing {
    /// `<f, g>` computed in the power-sum basis.
    pub fn scalar(&self, f: &SymElement, g: &SymElement, sp: ScalarProduct) -> Result<Coeff> {
        let p = self.power_sum_basis()?.clone();
        let fp = self.convert(f, &p)?;
        let gp = self.convert(g, &p)?;
        Ok(pairing(fp.terms(), gp.terms(), sp))
    }

    /// Orthogonalize `target[lambda]`, `lambda ⊢ n`, in lexicographically
    /// increasing order (which refines dominance). The resulting vectors are
    /// monic, not normalized, and expressed in `target`.
    pub fn gram_schmidt(
        &self,
        target: &BasisId,
        n: usize,
        sp: ScalarProduct,
    ) -> Result<Arc<BTreeMap<Partition, SymElement>>> {
        let key = (target.clone(), n, sp);
        if let Some(r) = self.gs_cache.lock().unwrap().get(&key) {
            return Ok(r.clone());
        }
        let p = self.power_sum_basis()?.clone();
        let to_p = self.conversion_matrix(target, &p, n)?;
        let from_p = self.conversion_matrix(&p, target, n)?;
        let mut keys = partitions(n);
        keys.reverse();
        let mut built: Vec<(BTreeMap<Partition, Coeff>, Coeff)> = Vec::new();
        let mut out = BTreeMap::new();
        for lambda in keys {
            let start = to_p.column(&lambda);
            let mut v = start.clone();
            for (w, norm) in &built {
                let c = pairing(&start, w, sp).checked_div(norm)?;
                if c.is_zero() {
                    continue;
                }
                for (k, x) in w {
                    *v.entry(k.clone()).or_default() -= &(&c * x);
                }
            }
            v.retain(|_, c| !c.is_zero());
            let norm = pairing(&v, &v, sp);
            if norm.is_zero() {
                return Err(Error::ZeroNorm(lambda));
            }
            out.insert(lambda, SymElement::from_terms(target.clone(), from_p.apply(&v)));
            built.push((v, norm));
        }
        let out = Arc::new(out);
        self.gs_cache.lock().unwrap().insert(key, out.clone());
        Ok(out)
    }
}
