use alloc::vec::Vec;
use core::fmt;

use crate::obstruction::bvector::BOutcome;
use crate::obstruction::search::SearchOutcome;
use crate::simplex::Simplex;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    /// Parity of the Euler characteristic of every link.
    Sullivan,
    /// Vanishing of the invariant vector of every link (dimension at most 3).
    Dim3,
    /// Bounded operator-closure search on every link.
    Dim4Search,
}

impl Check {
    pub fn name(self) -> &'static str {
        match self {
            Check::Sullivan => "sullivan",
            Check::Dim3 => "dim3",
            Check::Dim4Search => "dim4_search",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Finding {
    /// `link_euler` is `χ` of the link, i.e. `(Λ1)(τ)`.
    Sullivan { link_euler: i64 },
    Dim3(BOutcome),
    Search(SearchOutcome),
}

/// Result of one check at one simplex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplexVerdict {
    pub check: Check,
    pub simplex: Simplex,
    pub finding: Finding,
}

impl SimplexVerdict {
    pub fn passed(&self) -> bool {
        match &self.finding {
            Finding::Sullivan { link_euler } => link_euler % 2 == 0,
            Finding::Dim3(b) => b.vanishes(),
            Finding::Search(s) => s.witness().is_none(),
        }
    }
}

/// Per-simplex verdicts in canonical order, grouped by check.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ObstructionReport {
    pub verdicts: Vec<SimplexVerdict>,
    /// Set by the Sullivan check on complexes of dimension at most 2, where
    /// even link Euler characteristics are also sufficient for realizability.
    pub realizable_low_dim: Option<bool>,
}

impl ObstructionReport {
    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(SimplexVerdict::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &SimplexVerdict> {
        self.verdicts.iter().filter(|v| !v.passed())
    }

    pub fn of_check(&self, check: Check) -> impl Iterator<Item = &SimplexVerdict> {
        self.verdicts.iter().filter(move |v| v.check == check)
    }

    /// `(passed, failed)` counts for one check.
    pub fn tally(&self, check: Check) -> (usize, usize) {
        self.of_check(check).fold((0, 0), |(p, f), v| {
            if v.passed() {
                (p + 1, f)
            } else {
                (p, f + 1)
            }
        })
    }

    pub fn extend(&mut self, other: ObstructionReport) {
        self.verdicts.extend(other.verdicts);
        if other.realizable_low_dim.is_some() {
            self.realizable_low_dim = other.realizable_low_dim;
        }
    }
}
