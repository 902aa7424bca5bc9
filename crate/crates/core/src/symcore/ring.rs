//! Basis registry and the change-of-basis engine.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;
use std::sync::{Arc, Mutex};

use super::element::{BasisId, SymElement};
use super::operator::LinearOperator;
use super::scalar::ScalarProduct;
use crate::combinat::{partitions, Partition};
use crate::error::{Error, Result};
use crate::exactalg::{Coeff, CoeffMatrix};

pub type ColumnFn = Arc<dyn Fn(&SymRing, &Partition) -> Result<SymElement> + Send + Sync>;
pub type ProductFn = Arc<dyn Fn(&Partition, &Partition) -> Vec<(Partition, Coeff)> + Send + Sync>;

/// How two basis elements of one basis multiply.
#[derive(Clone)]
pub enum Product {
    /// No intrinsic product; multiplication routes through the product hub.
    None,
    /// `b_lambda * b_mu = b_(lambda ∪ mu)`.
    Concat,
    Rule(ProductFn),
}

impl fmt::Debug for Product {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Product::None => f.write_str("None"),
            Product::Concat => f.write_str("Concat"),
            Product::Rule(_) => f.write_str("Rule(..)"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct BasisSpec {
    pub name: BasisId,
    pub display_name: String,
    pub product: Product,
}

impl BasisSpec {
    pub fn new(name: &str, display_name: &str) -> Self {
        BasisSpec {
            name: BasisId::new(name),
            display_name: display_name.to_string(),
            product: Product::None,
        }
    }

    pub fn multiplicative(mut self) -> Self {
        self.product = Product::Concat;
        self
    }

    pub fn with_product(
        mut self,
        f: impl Fn(&Partition, &Partition) -> Vec<(Partition, Coeff)> + Send + Sync + 'static,
    ) -> Self {
        self.product = Product::Rule(Arc::new(f));
        self
    }
}

/// A conversion rule for one directed edge of the basis graph.
#[derive(Clone)]
pub enum BasisChange {
    /// Column function: the expansion of each source basis element in the
    /// target basis.
    Columns(ColumnFn),
    /// Rule `b -> a` obtained by inverting the per-degree matrix of `a -> b`.
    Inverse { a: BasisId, b: BasisId },
    /// Rule `b_dual -> a_dual` whose matrix is the transpose of `a -> b`.
    Transpose {
        a: BasisId,
        b: BasisId,
        b_dual: BasisId,
        a_dual: BasisId,
    },
}

impl fmt::Debug for BasisChange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisChange::Columns(_) => f.write_str("Columns(..)"),
            BasisChange::Inverse { a, b } => write!(f, "Inverse({a} -> {b})"),
            BasisChange::Transpose { a, b, b_dual, a_dual } => {
                write!(f, "Transpose({a} -> {b}; {b_dual} -> {a_dual})")
            }
        }
    }
}

impl BasisChange {
    pub fn columns(
        f: impl Fn(&SymRing, &Partition) -> Result<SymElement> + Send + Sync + 'static,
    ) -> Self {
        BasisChange::Columns(Arc::new(f))
    }
}

/// Rule for `b -> a` given a known conversion `a -> b`.
pub fn invert_basis_change(a: impl Into<BasisId>, b: impl Into<BasisId>) -> BasisChange {
    BasisChange::Inverse {
        a: a.into(),
        b: b.into(),
    }
}

/// Rule for `b_dual -> a_dual` given `a -> b` and the Hall-dual pairs
/// `(a, a_dual)`, `(b, b_dual)`: if `a_mu = sum M[lambda, mu] b_lambda` then
/// `b*_lambda = sum M[lambda, mu] a*_mu`.
pub fn transpose_basis_change(
    a: impl Into<BasisId>,
    b: impl Into<BasisId>,
    b_dual: impl Into<BasisId>,
    a_dual: impl Into<BasisId>,
) -> BasisChange {
    BasisChange::Transpose {
        a: a.into(),
        b: b.into(),
        b_dual: b_dual.into(),
        a_dual: a_dual.into(),
    }
}

/// Stable identity of an edge: a declared rule, or the automatic inverse of
/// one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeId {
    Declared(usize),
    AutoInverse(usize),
}

#[derive(Clone, Debug)]
pub struct Edge {
    pub id: EdgeId,
    pub from: BasisId,
    pub to: BasisId,
}

type Cache<K, V> = Mutex<HashMap<K, V>>;

/// A ring of symmetric functions presented through several bases.
///
/// Registration takes `&mut self`; everything else takes `&self` and may be
/// called from several threads. Per-degree matrices are memoized.
#[derive(Default)]
pub struct SymRing {
    bases: Vec<BasisSpec>,
    declared: Vec<(BasisId, BasisId, BasisChange)>,
    dual_pairs: Vec<(BasisId, BasisId)>,
    operators: Vec<LinearOperator>,
    power_sum: Option<BasisId>,
    product_hub: Option<BasisId>,
    edge_cache: Cache<(EdgeId, usize), Arc<CoeffMatrix>>,
    pair_cache: Cache<(BasisId, BasisId, usize), Arc<CoeffMatrix>>,
    pub(super) gs_cache: Cache<(BasisId, usize, ScalarProduct), Arc<BTreeMap<Partition, SymElement>>>,
}

impl SymRing {
    pub fn new() -> Self {
        SymRing::default()
    }

    pub fn register_basis(&mut self, spec: BasisSpec) -> Result<BasisId> {
        if self.has_basis(&spec.name) {
            return Err(Error::DuplicateBasis(spec.name.to_string()));
        }
        let id = spec.name.clone();
        self.bases.push(spec);
        Ok(id)
    }

    pub fn has_basis(&self, b: &BasisId) -> bool {
        self.bases.iter().any(|s| &s.name == b)
    }

    /// Registered bases in registration order.
    pub fn bases(&self) -> impl Iterator<Item = &BasisSpec> {
        self.bases.iter()
    }

    pub fn basis(&self, name: &str) -> Result<BasisId> {
        let id = BasisId::new(name);
        self.check_basis(&id)?;
        Ok(id)
    }

    fn check_basis(&self, b: &BasisId) -> Result<()> {
        if self.has_basis(b) {
            Ok(())
        } else {
            Err(Error::UnknownBasis(b.to_string()))
        }
    }

    fn spec(&self, b: &BasisId) -> Result<&BasisSpec> {
        self.bases
            .iter()
            .find(|s| &s.name == b)
            .ok_or_else(|| Error::UnknownBasis(b.to_string()))
    }

    fn order_of(&self, b: &BasisId) -> usize {
        self.bases.iter().position(|s| &s.name == b).unwrap_or(usize::MAX)
    }

    /// The basis element `name[parts]`, checking both the name and the parts.
    pub fn element(&self, basis: &str, parts: Vec<u32>) -> Result<SymElement> {
        let b = self.basis(basis)?;
        Ok(SymElement::basis_element(b, Partition::new(parts)?))
    }

    pub fn declare_dual_pair(&mut self, a: impl Into<BasisId>, b: impl Into<BasisId>) -> Result<()> {
        let (a, b) = (a.into(), b.into());
        self.check_basis(&a)?;
        self.check_basis(&b)?;
        if !self.are_dual(&a, &b) {
            self.dual_pairs.push((a, b));
        }
        Ok(())
    }

    pub fn are_dual(&self, a: &BasisId, b: &BasisId) -> bool {
        self.dual_pairs
            .iter()
            .any(|(x, y)| (x == a && y == b) || (x == b && y == a))
    }

    /// Power-sum basis used by scalar products and Gram-Schmidt.
    pub fn set_power_sum_basis(&mut self, b: impl Into<BasisId>) -> Result<()> {
        let b = b.into();
        self.check_basis(&b)?;
        self.power_sum = Some(b);
        Ok(())
    }

    pub fn power_sum_basis(&self) -> Result<&BasisId> {
        self.power_sum
            .as_ref()
            .ok_or_else(|| Error::InvalidRule("no power-sum basis configured".into()))
    }

    /// Basis through which products of bases without their own product rule
    /// are computed.
    pub fn set_product_hub(&mut self, b: impl Into<BasisId>) -> Result<()> {
        let b = b.into();
        if matches!(self.spec(&b)?.product, Product::None) {
            return Err(Error::InvalidRule(format!("basis `{b}` has no product rule")));
        }
        self.product_hub = Some(b);
        Ok(())
    }

    pub fn declare_basis_change(
        &mut self,
        from: impl Into<BasisId>,
        to: impl Into<BasisId>,
        rule: BasisChange,
    ) -> Result<()> {
        let (from, to) = (from.into(), to.into());
        self.check_basis(&from)?;
        self.check_basis(&to)?;
        if from == to {
            return Err(Error::InvalidRule(format!("conversion from `{from}` to itself")));
        }
        if self.declared.iter().any(|(f, t, _)| f == &from && t == &to) {
            return Err(Error::InvalidRule(format!(
                "conversion `{from}` -> `{to}` is already declared"
            )));
        }
        match &rule {
            BasisChange::Columns(_) => {}
            BasisChange::Inverse { a, b } => {
                self.check_basis(a)?;
                self.check_basis(b)?;
                if (b, a) != (&from, &to) {
                    return Err(Error::InvalidRule(format!(
                        "inverse of `{a}` -> `{b}` converts `{b}` -> `{a}`, not `{from}` -> `{to}`"
                    )));
                }
            }
            BasisChange::Transpose { a, b, b_dual, a_dual } => {
                for x in [a, b, b_dual, a_dual] {
                    self.check_basis(x)?;
                }
                if (b_dual, a_dual) != (&from, &to) {
                    return Err(Error::InvalidRule(format!(
                        "transpose of `{a}` -> `{b}` converts `{b_dual}` -> `{a_dual}`, not `{from}` -> `{to}`"
                    )));
                }
                for (x, y) in [(a, a_dual), (b, b_dual)] {
                    if !self.are_dual(x, y) {
                        return Err(Error::MissingDualPair {
                            a: x.to_string(),
                            b: y.to_string(),
                        });
                    }
                }
            }
        }
        self.declared.push((from, to, rule));
        self.pair_cache.lock().unwrap().clear();
        Ok(())
    }

    pub fn declare_operator(&mut self, op: LinearOperator) -> Result<()> {
        self.check_basis(&op.basis)?;
        self.check_basis(&op.output)?;
        if self.operators.iter().any(|o| o.name == op.name) {
            return Err(Error::DuplicateOperator(op.name));
        }
        self.operators.push(op);
        Ok(())
    }

    pub fn operator(&self, name: &str) -> Result<&LinearOperator> {
        self.operators
            .iter()
            .find(|o| o.name == name)
            .ok_or_else(|| Error::UnknownOperator(name.to_string()))
    }

    pub fn operators(&self) -> impl Iterator<Item = &LinearOperator> {
        self.operators.iter()
    }

    /// All edges of the basis graph, in tie-break order: each declared edge
    /// is followed by its automatic inverse (unless the reverse direction is
    /// declared explicitly).
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::new();
        for (i, (from, to, _)) in self.declared.iter().enumerate() {
            out.push(Edge {
                id: EdgeId::Declared(i),
                from: from.clone(),
                to: to.clone(),
            });
            let reverse_declared = self.declared.iter().any(|(f, t, _)| f == to && t == from);
            if !reverse_declared {
                out.push(Edge {
                    id: EdgeId::AutoInverse(i),
                    from: to.clone(),
                    to: from.clone(),
                });
            }
        }
        out
    }

    /// BFS distances from `from` (hop counts).
    pub fn distances(&self, from: &BasisId) -> HashMap<BasisId, usize> {
        let edges = self.edges();
        let mut dist = HashMap::new();
        dist.insert(from.clone(), 0);
        let mut queue = VecDeque::from([from.clone()]);
        while let Some(b) = queue.pop_front() {
            let d = dist[&b];
            for e in edges.iter().filter(|e| e.from == b) {
                if !dist.contains_key(&e.to) {
                    dist.insert(e.to.clone(), d + 1);
                    queue.push_back(e.to.clone());
                }
            }
        }
        dist
    }

    /// Whether every registered basis can reach every other one.
    pub fn is_connected(&self) -> bool {
        match self.bases.first() {
            None => true,
            Some(first) => self.distances(&first.name).len() == self.bases.len(),
        }
    }

    /// Fewest-hop path; ties go to the edge registered first.
    pub fn path(&self, from: &BasisId, to: &BasisId) -> Result<Vec<Edge>> {
        self.path_excluding(from, to, &[])
    }

    fn path_excluding(&self, from: &BasisId, to: &BasisId, excluded: &[EdgeId]) -> Result<Vec<Edge>> {
        self.check_basis(from)?;
        self.check_basis(to)?;
        let edges: Vec<Edge> = self
            .edges()
            .into_iter()
            .filter(|e| !excluded.contains(&e.id))
            .collect();
        let mut prev: HashMap<BasisId, Option<usize>> = HashMap::new();
        prev.insert(from.clone(), None);
        let mut queue = VecDeque::from([from.clone()]);
        while let Some(b) = queue.pop_front() {
            if &b == to {
                break;
            }
            for (i, e) in edges.iter().enumerate() {
                if e.from == b && !prev.contains_key(&e.to) {
                    prev.insert(e.to.clone(), Some(i));
                    queue.push_back(e.to.clone());
                }
            }
        }
        if !prev.contains_key(to) {
            return Err(Error::NoPath {
                from: from.to_string(),
                to: to.to_string(),
            });
        }
        let mut path = Vec::new();
        let mut cur = to.clone();
        while let Some(Some(i)) = prev.get(&cur) {
            path.push(edges[*i].clone());
            cur = edges[*i].from.clone();
        }
        path.reverse();
        Ok(path)
    }

    /// All simple paths with at most `max_len` edges.
    pub fn all_paths(&self, from: &BasisId, to: &BasisId, max_len: usize) -> Vec<Vec<Edge>> {
        fn rec(
            edges: &[Edge],
            cur: &BasisId,
            to: &BasisId,
            max_len: usize,
            seen: &mut Vec<BasisId>,
            path: &mut Vec<Edge>,
            out: &mut Vec<Vec<Edge>>,
        ) {
            if cur == to {
                out.push(path.clone());
                return;
            }
            if path.len() == max_len {
                return;
            }
            for e in edges.iter().filter(|e| &e.from == cur) {
                if seen.contains(&e.to) {
                    continue;
                }
                seen.push(e.to.clone());
                path.push(e.clone());
                rec(edges, &e.to, to, max_len, seen, path, out);
                path.pop();
                seen.pop();
            }
        }
        let edges = self.edges();
        let mut out = Vec::new();
        rec(&edges, from, to, max_len, &mut vec![from.clone()], &mut Vec::new(), &mut out);
        out
    }

    /// Matrix of the conversion `from -> to` on degree `n` (column `mu` is the
    /// `to`-expansion of `from[mu]`), following [`SymRing::path`].
    pub fn conversion_matrix(&self, from: &BasisId, to: &BasisId, n: usize) -> Result<Arc<CoeffMatrix>> {
        let key = (from.clone(), to.clone(), n);
        if let Some(m) = self.pair_cache.lock().unwrap().get(&key) {
            return Ok(m.clone());
        }
        let m = self.pair_matrix(from, to, n, &[])?;
        self.pair_cache.lock().unwrap().insert(key, m.clone());
        Ok(m)
    }

    fn pair_matrix(&self, from: &BasisId, to: &BasisId, n: usize, excluded: &[EdgeId]) -> Result<Arc<CoeffMatrix>> {
        let path = self.path_excluding(from, to, excluded)?;
        self.compose(&path, n, excluded)
    }

    /// Matrix along an explicit path.
    pub fn path_matrix(&self, path: &[Edge], n: usize) -> Result<Arc<CoeffMatrix>> {
        self.compose(path, n, &[])
    }

    fn compose(&self, path: &[Edge], n: usize, excluded: &[EdgeId]) -> Result<Arc<CoeffMatrix>> {
        let mut acc: Option<Arc<CoeffMatrix>> = None;
        for e in path {
            let m = self.edge_matrix(e.id, n, excluded)?;
            acc = Some(match acc {
                None => m,
                Some(a) => Arc::new(m.mul(&a)?),
            });
        }
        Ok(acc.unwrap_or_else(|| Arc::new(CoeffMatrix::identity(partitions(n)))))
    }

    fn edge_matrix(&self, id: EdgeId, n: usize, excluded: &[EdgeId]) -> Result<Arc<CoeffMatrix>> {
        if let Some(m) = self.edge_cache.lock().unwrap().get(&(id, n)) {
            return Ok(m.clone());
        }
        let m = Arc::new(self.compute_edge_matrix(id, n, excluded)?);
        self.edge_cache.lock().unwrap().insert((id, n), m.clone());
        Ok(m)
    }

    fn compute_edge_matrix(&self, id: EdgeId, n: usize, excluded: &[EdgeId]) -> Result<CoeffMatrix> {
        let i = match id {
            EdgeId::Declared(i) | EdgeId::AutoInverse(i) => i,
        };
        let (from, to, rule) = &self.declared[i];
        let mut excl = excluded.to_vec();
        excl.extend([EdgeId::Declared(i), EdgeId::AutoInverse(i)]);
        let singular = |a: &BasisId, b: &BasisId| {
            let context = format!(" inverting `{a}` -> `{b}` in degree {n}");
            move |e: Error| match e {
                Error::Singular { .. } => Error::Singular { context },
                e => e,
            }
        };
        if let EdgeId::AutoInverse(_) = id {
            let m = self.edge_matrix(EdgeId::Declared(i), n, &excl)?;
            return m.inverse().map_err(singular(from, to));
        }
        match rule {
            BasisChange::Columns(f) => self.columns_matrix(from, to, f, n),
            BasisChange::Inverse { a, b } => {
                let m = self.pair_matrix(a, b, n, &excl)?;
                m.inverse().map_err(singular(a, b))
            }
            BasisChange::Transpose { a, b, .. } => Ok(self.pair_matrix(a, b, n, &excl)?.transpose()),
        }
    }

    fn columns_matrix(&self, from: &BasisId, to: &BasisId, f: &ColumnFn, n: usize) -> Result<CoeffMatrix> {
        let keys = partitions(n);
        let index: HashMap<&Partition, usize> = keys.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut m = CoeffMatrix::zero(keys.clone(), keys.clone());
        for (j, mu) in keys.iter().enumerate() {
            let col = f(self, mu)?;
            if col.basis() != to {
                return Err(Error::RuleBasisMismatch {
                    from: from.to_string(),
                    to: to.to_string(),
                    got: col.basis().to_string(),
                });
            }
            for (lambda, c) in col.terms() {
                let Some(&i) = index.get(lambda) else {
                    return Err(Error::Inhomogeneous {
                        basis: from.to_string(),
                        partition: mu.clone(),
                        got: lambda.size(),
                    });
                };
                m.set_idx(i, j, c.clone());
            }
        }
        Ok(m)
    }

    /// Express `f` in basis `to`.
    pub fn convert(&self, f: &SymElement, to: &BasisId) -> Result<SymElement> {
        self.check_basis(f.basis())?;
        self.check_basis(to)?;
        if f.basis() == to {
            return Ok(f.clone());
        }
        let mut terms = Vec::new();
        for n in f.degrees() {
            let m = self.conversion_matrix(f.basis(), to, n)?;
            let v: BTreeMap<Partition, Coeff> = f.component(n).into_terms();
            terms.extend(m.apply(&v));
        }
        Ok(SymElement::from_terms(to.clone(), terms))
    }

    /// Basis minimizing the summed hop distance from `a` and `b`; ties go to
    /// the basis registered first.
    pub fn common_basis(&self, a: &BasisId, b: &BasisId) -> Result<BasisId> {
        if a == b {
            return Ok(a.clone());
        }
        let da = self.distances(a);
        let db = self.distances(b);
        self.bases
            .iter()
            .filter_map(|s| Some((da.get(&s.name)? + db.get(&s.name)?, &s.name)))
            .min_by_key(|(d, name)| (*d, self.order_of(name)))
            .map(|(_, name)| name.clone())
            .ok_or_else(|| Error::NoPath {
                from: a.to_string(),
                to: b.to_string(),
            })
    }

    pub fn add(&self, a: &SymElement, b: &SymElement) -> Result<SymElement> {
        let (a, b) = self.align(a, b)?;
        a.checked_add(&b)
    }

    pub fn sub(&self, a: &SymElement, b: &SymElement) -> Result<SymElement> {
        let (a, b) = self.align(a, b)?;
        a.checked_sub(&b)
    }

    fn align(&self, a: &SymElement, b: &SymElement) -> Result<(SymElement, SymElement)> {
        self.check_basis(a.basis())?;
        self.check_basis(b.basis())?;
        let c = self.common_basis(a.basis(), b.basis())?;
        Ok((self.convert(a, &c)?, self.convert(b, &c)?))
    }

    /// Product. Same-basis operands with a product rule multiply directly;
    /// otherwise both go through the product hub. If both operands share a
    /// basis the result is converted back to it.
    pub fn mul(&self, a: &SymElement, b: &SymElement) -> Result<SymElement> {
        self.check_basis(a.basis())?;
        self.check_basis(b.basis())?;
        if a.basis() == b.basis() {
            let product = &self.spec(a.basis())?.product;
            if !matches!(product, Product::None) {
                return Ok(direct_product(product, a, b));
            }
        }
        let hub = self
            .product_hub
            .as_ref()
            .ok_or_else(|| Error::InvalidRule("no product hub configured".into()))?;
        let ah = self.convert(a, hub)?;
        let bh = self.convert(b, hub)?;
        let r = direct_product(&self.spec(hub)?.product, &ah, &bh);
        if a.basis() == b.basis() {
            self.convert(&r, a.basis())
        } else {
            Ok(r)
        }
    }

    pub fn pow(&self, a: &SymElement, e: u32) -> Result<SymElement> {
        let mut acc = SymElement::basis_element(a.basis().clone(), Partition::empty());
        for _ in 0..e {
            acc = self.mul(&acc, a)?;
        }
        Ok(acc)
    }

    /// Apply a declared operator: convert to its defining basis and extend
    /// its action linearly.
    pub fn apply_operator(&self, name: &str, f: &SymElement) -> Result<SymElement> {
        let op = self.operator(name)?;
        let g = self.convert(f, &op.basis)?;
        let mut terms = Vec::new();
        for (p, c) in g.terms() {
            let img = op.act(self, p)?;
            self.check_basis(img.basis())?;
            if img.basis() != &op.output {
                return Err(Error::RuleBasisMismatch {
                    from: op.basis.to_string(),
                    to: op.output.to_string(),
                    got: img.basis().to_string(),
                });
            }
            terms.extend(img.scale(c).into_terms());
        }
        Ok(SymElement::from_terms(op.output.clone(), terms))
    }
}

fn direct_product(product: &Product, a: &SymElement, b: &SymElement) -> SymElement {
    let mut terms = Vec::new();
    for (pa, ca) in a.terms() {
        for (pb, cb) in b.terms() {
            let c = ca * cb;
            match product {
                Product::Concat => terms.push((pa.union(pb), c)),
                Product::Rule(f) => {
                    terms.extend(f(pa, pb).into_iter().map(|(p, x)| (p, &x * &c)));
                }
                Product::None => unreachable!("caller checks for a product rule"),
            }
        }
    }
    SymElement::from_terms(a.basis().clone(), terms)
}
