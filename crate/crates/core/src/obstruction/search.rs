//! Bounded closure of `{1_L}` under `+ - ×`, the half-link and `P`.
//!
//! Functions are deduplicated by exact value vector and generated level by
//! level: level `d` holds every new value whose expression tree has height
//! `d`. Within a level, operators run in the order ADD, SUB, MUL, HALFLINK,
//! POP and operand pairs in increasing table order, so the first witness
//! found is deterministic.

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::complex::SimplicialComplex;
use crate::dyadic::Dyadic;
use crate::function::ConstructibleFunction;
use crate::obstruction::expr::{Expr, ExpressionWitness};

/// Numerators wider than this many bits abort the branch that produced them.
pub const GROWTH_GUARD_BITS: u64 = 128;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_depth: usize,
    pub max_functions: usize,
    pub use_p: bool,
    /// Cap on candidate evaluations, duplicates included.
    pub max_candidates: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_depth: 6, max_functions: 20_000, use_p: true, max_candidates: 2_000_000 }
    }
}

/// Why a search stopped without a witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StopReason {
    /// A violation was found.
    Witness,
    /// A level produced no new function: the closure is complete.
    Saturated,
    /// All levels up to `max_depth` were generated.
    DepthReached,
    /// The function table reached `max_functions`.
    FunctionBudget,
    /// `max_candidates` evaluations were spent.
    CandidateBudget,
}

impl StopReason {
    pub fn as_str(self) -> &'static str {
        match self {
            StopReason::Witness => "violation found",
            StopReason::Saturated => "closure saturated",
            StopReason::DepthReached => "depth budget reached",
            StopReason::FunctionBudget => "function budget exhausted",
            StopReason::CandidateBudget => "candidate budget exhausted",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchStats {
    pub functions: usize,
    pub candidates: usize,
    /// Deepest level fully or partially generated.
    pub depth: usize,
    pub guarded: usize,
    pub stop: StopReason,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Witness { witness: ExpressionWitness, stats: SearchStats },
    /// No violation within budget. This is not a realizability proof.
    Pass(SearchStats),
}

impl SearchOutcome {
    pub fn witness(&self) -> Option<&ExpressionWitness> {
        match self {
            SearchOutcome::Witness { witness, .. } => Some(witness),
            SearchOutcome::Pass(_) => None,
        }
    }

    pub fn stats(&self) -> &SearchStats {
        match self {
            SearchOutcome::Witness { stats, .. } | SearchOutcome::Pass(stats) => stats,
        }
    }
}

struct Entry {
    expr: Arc<Expr>,
    func: ConstructibleFunction,
}

struct Closure<'a> {
    budget: &'a Budget,
    entries: Vec<Entry>,
    seen: BTreeMap<Vec<Dyadic>, usize>,
    candidates: usize,
    guarded: usize,
    depth: usize,
}

enum Step {
    Continue,
    Found(ExpressionWitness),
    Stop(StopReason),
}

impl Closure<'_> {
    fn offer(&mut self, expr: impl FnOnce() -> Arc<Expr>, func: ConstructibleFunction) -> Step {
        self.candidates += 1;
        if func.values().iter().any(|v| v.numerator_bits() > GROWTH_GUARD_BITS) {
            self.guarded += 1;
        } else if !self.seen.contains_key(func.values()) {
            let expr = expr();
            if let Some(w) = ExpressionWitness::detect(&expr, &func) {
                return Step::Found(w);
            }
            self.seen.insert(func.values().to_vec(), self.entries.len());
            self.entries.push(Entry { expr, func });
            if self.entries.len() >= self.budget.max_functions {
                return Step::Stop(StopReason::FunctionBudget);
            }
        }
        if self.candidates >= self.budget.max_candidates {
            return Step::Stop(StopReason::CandidateBudget);
        }
        Step::Continue
    }

    fn exprs(&self, i: usize, j: usize) -> (Arc<Expr>, Arc<Expr>) {
        (Arc::clone(&self.entries[i].expr), Arc::clone(&self.entries[j].expr))
    }

    fn stats(&self, stop: StopReason) -> SearchStats {
        SearchStats {
            functions: self.entries.len(),
            candidates: self.candidates,
            depth: self.depth,
            guarded: self.guarded,
            stop,
        }
    }

    // Generates level `self.depth` from entries `prev` (the previous level) and everything before.
    fn level(&mut self, prev: core::ops::Range<usize>) -> Step {
        let end = prev.end;
        let in_prev = |i: usize| i >= prev.start;
        macro_rules! step {
            ($e:expr) => {
                match $e {
                    Step::Continue => {}
                    other => return other,
                }
            };
        }
        // commutative ops: unordered pairs i <= j with j in the previous level
        for j in prev.clone() {
            for i in 0..=j {
                let f = self.entries[i].func.zip_unchecked(&self.entries[j].func, |a, b| a + b);
                let (x, y) = self.exprs(i, j);
                step!(self.offer(|| Expr::add(&x, &y), f));
            }
        }
        for a in 0..end {
            for b in 0..end {
                if a == b || !(in_prev(a) || in_prev(b)) {
                    continue;
                }
                let f = self.entries[a].func.zip_unchecked(&self.entries[b].func, |x, y| x - y);
                let (x, y) = self.exprs(a, b);
                step!(self.offer(|| Expr::sub(&x, &y), f));
            }
        }
        for j in prev.clone() {
            for i in 0..=j {
                let f = self.entries[i].func.zip_unchecked(&self.entries[j].func, |a, b| a * b);
                let (x, y) = self.exprs(i, j);
                step!(self.offer(|| Expr::mul(&x, &y), f));
            }
        }
        for i in prev.clone() {
            let f = self.entries[i].func.half_link_unchecked();
            let x = Arc::clone(&self.entries[i].expr);
            step!(self.offer(|| Expr::half_link(&x), f));
        }
        if self.budget.use_p {
            for i in prev {
                let f = self.entries[i].func.p_operator();
                let x = Arc::clone(&self.entries[i].expr);
                step!(self.offer(|| Expr::pop(&x), f));
            }
        }
        Step::Continue
    }
}

/// Searches the closure of `1_link` for a function that is not integer-valued
/// or has odd Euler integral.
pub fn closure_search(link: &Arc<SimplicialComplex>, budget: &Budget) -> SearchOutcome {
    let mut c = Closure {
        budget,
        entries: Vec::new(),
        seen: BTreeMap::new(),
        candidates: 0,
        guarded: 0,
        depth: 0,
    };
    let found = |c: &Closure, witness| SearchOutcome::Witness {
        witness,
        stats: c.stats(StopReason::Witness),
    };
    match c.offer(Expr::one, ConstructibleFunction::one(Arc::clone(link))) {
        Step::Found(w) => return found(&c, w),
        Step::Stop(r) => return SearchOutcome::Pass(c.stats(r)),
        Step::Continue => {}
    }
    let mut prev = 0..c.entries.len();
    for depth in 1..=budget.max_depth {
        c.depth = depth;
        match c.level(prev.clone()) {
            Step::Found(w) => return found(&c, w),
            Step::Stop(r) => return SearchOutcome::Pass(c.stats(r)),
            Step::Continue => {}
        }
        if c.entries.len() == prev.end {
            return SearchOutcome::Pass(c.stats(StopReason::Saturated));
        }
        prev = prev.end..c.entries.len();
    }
    SearchOutcome::Pass(c.stats(StopReason::DepthReached))
}
