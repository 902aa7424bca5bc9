use std::fmt;
use std::sync::Arc;

use super::element::{BasisId, SymElement};
use super::ring::SymRing;
use crate::combinat::Partition;
use crate::error::Result;

pub type ActionFn = Arc<dyn Fn(&SymRing, &Partition) -> Result<SymElement> + Send + Sync>;

/// A linear map given by its values on one basis. Applying it to an element
/// of any other basis converts first.
#[derive(Clone)]
pub struct LinearOperator {
    pub name: String,
    /// Basis the action is defined on.
    pub basis: BasisId,
    /// Basis the action's values live in.
    pub output: BasisId,
    action: ActionFn,
}

impl LinearOperator {
    pub fn new(
        name: &str,
        basis: impl Into<BasisId>,
        output: impl Into<BasisId>,
        action: impl Fn(&SymRing, &Partition) -> Result<SymElement> + Send + Sync + 'static,
    ) -> Self {
        LinearOperator {
            name: name.to_string(),
            basis: basis.into(),
            output: output.into(),
            action: Arc::new(action),
        }
    }

    pub fn act(&self, ring: &SymRing, p: &Partition) -> Result<SymElement> {
        (self.action)(ring, p)
    }
}

impl fmt::Debug for LinearOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearOperator({} on {} -> {})", self.name, self.basis, self.output)
    }
}
