use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::function::ConstructibleFunction;
use crate::obstruction::bvector::b_vector;
use crate::obstruction::report::{Check, Finding, ObstructionReport, SimplexVerdict};
use crate::obstruction::search::{closure_search, Budget, SearchOutcome};
use crate::simplex::Simplex;

/// Parity of `χ(lk)` at every simplex, via `Λ1_K`.
pub fn sullivan_check(k: &Arc<SimplicialComplex>) -> ObstructionReport {
    let link = ConstructibleFunction::one(Arc::clone(k)).link();
    let verdicts: Vec<SimplexVerdict> = link
        .iter()
        .map(|(s, v)| SimplexVerdict {
            check: Check::Sullivan,
            simplex: s.clone(),
            finding: Finding::Sullivan {
                link_euler: v.to_i64().expect("Λ of an indicator is a small integer"),
            },
        })
        .collect();
    let passed = verdicts.iter().all(SimplexVerdict::passed);
    let low_dim = k.dim().is_some_and(|d| d <= 2);
    ObstructionReport {
        verdicts,
        realizable_low_dim: low_dim.then_some(passed),
    }
}

/// Vanishing of the invariant vector of the link at every simplex.
pub fn dim3_check(k: &Arc<SimplicialComplex>) -> Result<ObstructionReport> {
    let d = k.dim().unwrap_or(0);
    if d > 3 {
        return Err(Error::DimensionTooLarge { dim: d, max: 3 });
    }
    let verdicts = k
        .simplices()
        .iter()
        .map(|tau| {
            let link = k.geometric_link(tau)?;
            Ok(SimplexVerdict {
                check: Check::Dim3,
                simplex: tau.clone(),
                finding: Finding::Dim3(b_vector(&link.complex)?),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ObstructionReport { verdicts, realizable_low_dim: None })
}

/// Closure search on the link of a point in the open simplex `tau`.
pub fn dim4_local_search(
    k: &SimplicialComplex,
    tau: &Simplex,
    budget: &Budget,
) -> Result<SearchOutcome> {
    if budget.max_functions == 0 || budget.max_candidates == 0 {
        return Err(Error::InvalidArgument("search budget must be positive".into()));
    }
    let link = k.geometric_link(tau)?;
    Ok(closure_search(&link.complex, budget))
}

/// [`dim4_local_search`] at every simplex, sequentially.
pub fn dim4_check(k: &Arc<SimplicialComplex>, budget: &Budget) -> Result<ObstructionReport> {
    let verdicts = k
        .simplices()
        .iter()
        .map(|tau| {
            Ok(SimplexVerdict {
                check: Check::Dim4Search,
                simplex: tau.clone(),
                finding: Finding::Search(dim4_local_search(k, tau, budget)?),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ObstructionReport { verdicts, realizable_low_dim: None })
}
