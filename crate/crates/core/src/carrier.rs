//! The interface shared by every conformal algebra the axiom checkers run on.

use crate::error::Result;
use crate::laurent::{Laurent, Vector};

pub trait Conformal: Sync {
    type Elem: Vector;

    fn zero(&self) -> Self::Elem;
    fn partial(&self, e: &Self::Elem) -> Self::Elem;
    fn y_plus(&self, u: &Self::Elem, v: &Self::Elem) -> Laurent<Self::Elem>;
    /// Common parity of all terms, `None` for zero.
    fn parity(&self, e: &Self::Elem) -> Result<Option<u8>>;
    fn name(&self) -> String;

    /// `u_a v`, the coefficient of `z^{-a-1}` in `Y+(u,z)v`.
    fn mode(&self, u: &Self::Elem, a: u32, v: &Self::Elem) -> Self::Elem {
        self.y_plus(u, v).mode_or(a, &self.zero())
    }
}
