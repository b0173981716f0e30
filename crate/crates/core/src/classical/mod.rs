//! Classical reference algebras used as known-good inputs for the axiom checkers.

pub mod loop_algebra;
pub mod virasoro;

use serde::Serialize;

pub use loop_algebra::{loop_generating_check, LieAlgebra, LoopConformal, LoopElement};
pub use virasoro::{virasoro_two_pole_check, VirasoroConformal, VirasoroElement};

use crate::axioms::{full_suite, AxiomReport};
use crate::error::Result;
use crate::exec::Exec;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IdentityCheck {
    pub identity: String,
    pub checked: usize,
    pub mismatches: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FixtureReport {
    pub fixture: String,
    pub depth: u32,
    pub axioms: Vec<AxiomReport>,
    pub identity: IdentityCheck,
}

impl FixtureReport {
    pub fn passed(&self) -> bool {
        self.axioms.iter().all(AxiomReport::passed) && self.identity.mismatches.is_empty()
    }
}

/// Full axiom suite on both fixtures over all basis elements up to `depth`,
/// Jacobi modes up to `depth`, plus each fixture's generating-series identity.
pub fn axiom_fixture_run(depth: u32, exec: Exec) -> Result<Vec<FixtureReport>> {
    let lp = LoopConformal::new(LieAlgebra::sl2());
    let elems = lp.basis_up_to(depth);
    let (checked, mismatches) = loop_generating_check(&lp, depth);
    let loop_report = FixtureReport {
        fixture: crate::carrier::Conformal::name(&lp),
        depth,
        axioms: full_suite(&lp, &elems, &elems, depth, depth, exec)?,
        identity: IdentityCheck { identity: "Y+(u[x],z)v[y] = [u,v][y]/(z+x-y)".into(), checked, mismatches },
    };

    let vir = VirasoroConformal;
    let elems = vir.basis_up_to(depth);
    let (checked, mismatches) = virasoro_two_pole_check(depth);
    let vir_report = FixtureReport {
        fixture: "virasoro".into(),
        depth,
        axioms: full_suite(&vir, &elems, &elems, depth, depth, exec)?,
        identity: IdentityCheck {
            identity: "Y+(L[x],z)L[y] = L'[y]/(z+x-y) + 2L[y]/(z+x-y)^2".into(),
            checked,
            mismatches,
        },
    };
    Ok(vec![loop_report, vir_report])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_pass_at_depth_two() {
        for r in axiom_fixture_run(2, Exec::Sequential).unwrap() {
            assert!(r.passed(), "{r:?}");
        }
    }
}
