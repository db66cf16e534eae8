//! Coverage, cause, and responsibility of states for a satisfied
//! specification, plus the syntax-sensitive cover' variant.
//!
//! A state `w` is `q`-covered by a satisfied formula when flipping `q` at
//! `w` falsifies it; it is a cause when some set of auxiliary `q`-flips that
//! keeps the formula true makes the flip at `w` falsifying; its degree of
//! responsibility is `1/(|Z|+1)` for the smallest such set `Z` (with
//! `w` never in `Z`).

use std::collections::BTreeSet;

use thiserror::Error;

use crate::circuit::{resp_brute, BoundedResp, CircuitError, RespResult};
use crate::compile::{compile, CompileError, ProductCircuit};
use crate::ctl::{satisfies, CheckError, CtlFormula};
use crate::kripke::{KripkeStructure, StructureError};
use crate::util::for_each_subset_ascending;

mod report;

pub use report::{build_report, CoverageReport, StateRecord};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CoverageError {
    #[error("the specification is not satisfied at the initial state")]
    SpecNotSatisfied,
    #[error("unknown state `{0}`")]
    UnknownState(String),
    #[error("unsupported operator for the cover' transformation: {0}")]
    UnsupportedOperator(String),
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error(transparent)]
    Check(#[from] CheckError),
    #[error(transparent)]
    Compile(#[from] CompileError),
    #[error(transparent)]
    Circuit(#[from] CircuitError),
}

/// How to compute per-state responsibility.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Engine {
    /// Enumerate state subsets against the model checker.
    Direct,
    /// Compile the product circuit and search over its `q`-leaves.
    Circuit,
    /// Direct search capped at witnesses of size `k - 1`.
    Bounded(usize),
}

impl Engine {
    pub fn name(&self) -> String {
        match self {
            Engine::Direct => "direct".to_string(),
            Engine::Circuit => "circuit".to_string(),
            Engine::Bounded(k) => format!("bounded:{k}"),
        }
    }
}

fn require_satisfied(k: &KripkeStructure, phi: &CtlFormula) -> Result<(), CoverageError> {
    if satisfies(k, phi)? {
        Ok(())
    } else {
        Err(CoverageError::SpecNotSatisfied)
    }
}

fn require_atom(k: &KripkeStructure, q: &str) -> Result<(), CoverageError> {
    if k.atoms().contains(q) {
        Ok(())
    } else {
        Err(StructureError::UnknownAtom(q.to_string()).into())
    }
}

/// States whose single `q`-flip falsifies `phi`.
pub fn covered_states(
    k: &KripkeStructure,
    phi: &CtlFormula,
    q: &str,
) -> Result<BTreeSet<String>, CoverageError> {
    require_atom(k, q)?;
    require_satisfied(k, phi)?;
    let mut out = BTreeSet::new();
    for w in k.states() {
        let mutant = k.mutate([w.as_str()], q)?;
        if !satisfies(&mutant, phi)? {
            out.insert(w.clone());
        }
    }
    Ok(out)
}

/// Does some set `Y` of other states exist such that flipping `q` on `Y`
/// keeps `phi` true while additionally flipping `w` falsifies it?
pub fn is_cause_state(
    k: &KripkeStructure,
    phi: &CtlFormula,
    q: &str,
    w: &str,
) -> Result<bool, CoverageError> {
    Ok(q_responsibility(k, phi, q, w, Engine::Direct)?
        .as_exact()
        .is_some_and(RespResult::is_cause))
}

/// Degree of `q`-responsibility of state `w` for `phi`, by the chosen
/// engine. All engines return the same exact value; `Bounded(k)` may report
/// `dr < 1/k` instead of an exact result.
pub fn q_responsibility(
    k: &KripkeStructure,
    phi: &CtlFormula,
    q: &str,
    w: &str,
    engine: Engine,
) -> Result<BoundedResp, CoverageError> {
    require_atom(k, q)?;
    if !k.has_state(w) {
        return Err(CoverageError::UnknownState(w.to_string()));
    }
    require_satisfied(k, phi)?;
    match engine {
        Engine::Direct => Ok(BoundedResp::Exact(direct_search(k, phi, q, w, usize::MAX)?)),
        Engine::Bounded(0) => Err(CircuitError::InvalidThreshold.into()),
        Engine::Bounded(kb) => {
            let r = direct_search(k, phi, q, w, kb - 1)?;
            Ok(match r.witness() {
                Some(_) => BoundedResp::Exact(r),
                None => BoundedResp::BelowThreshold { threshold: kb },
            })
        }
        Engine::Circuit => {
            let ctx = CircuitEngine::build(k, phi)?;
            Ok(BoundedResp::Exact(ctx.query(w, q)?))
        }
    }
}

/// Subset enumeration over the other states, smallest sets first,
/// lexicographic within a size.
fn direct_search(
    k: &KripkeStructure,
    phi: &CtlFormula,
    q: &str,
    w: &str,
    max_size: usize,
) -> Result<RespResult, CoverageError> {
    let others: Vec<&String> = k.states().filter(|s| s.as_str() != w).collect();
    let max = max_size.min(others.len());
    let mut failure = None;
    let witness = for_each_subset_ascending(others.len(), max, |subset| {
        let flips = subset.iter().map(|&i| others[i].as_str());
        let attempt = (|| -> Result<Option<BTreeSet<String>>, CoverageError> {
            let mutant = k.mutate(flips, q)?;
            if !satisfies(&mutant, phi)? {
                return Ok(None);
            }
            let with_w = mutant.mutate([w], q)?;
            if satisfies(&with_w, phi)? {
                return Ok(None);
            }
            Ok(Some(subset.iter().map(|&i| others[i].clone()).collect()))
        })();
        match attempt {
            Ok(hit) => hit.map(Ok),
            Err(e) => {
                failure = Some(e);
                Some(Err(()))
            }
        }
    });
    match witness {
        Some(Ok(z)) => Ok(RespResult::with_witness(z)),
        Some(Err(())) => Err(failure.expect("recorded before aborting")),
        None => Ok(RespResult::none()),
    }
}

/// Shared state for the circuit engine: the compiled product, the label
/// assignment, and the `q`-leaf restriction.
pub(crate) struct CircuitEngine {
    product: ProductCircuit,
    base: crate::circuit::Assignment,
}

impl CircuitEngine {
    pub(crate) fn build(k: &KripkeStructure, phi: &CtlFormula) -> Result<Self, CoverageError> {
        let product = compile(k, phi)?;
        let base = product.leaf_assignment(k);
        Ok(CircuitEngine { product, base })
    }

    /// Responsibility of `X[w:q]` for the output, with only `q`-leaves
    /// mutable; witness variables are mapped back to state ids.
    pub(crate) fn query(&self, w: &str, q: &str) -> Result<RespResult, CoverageError> {
        let Some(var) = self.product.variable_for(w, q) else {
            // q does not occur in the specification: mutating it can never
            // change satisfaction.
            return Ok(RespResult::none());
        };
        let mutable: BTreeSet<String> = self.product.variables_for_atom(q).into_iter().collect();
        let circuit = self.product.circuit();
        let r = resp_brute(circuit, var, circuit.output(), &self.base, &mutable)?;
        Ok(self.rename_witness(r))
    }

    fn rename_witness(&self, r: RespResult) -> RespResult {
        match r.witness() {
            None => r,
            Some(vars) => RespResult::with_witness(
                vars.iter()
                    .map(|v| {
                        self.product
                            .leaves()
                            .find(|(_, name)| *name == v)
                            .map(|((state, _), _)| state.clone())
                            .expect("witness variables come from the leaf map")
                    })
                    .collect(),
            ),
        }
    }
}

/// Rewrites `phi` so that `q'`-coverage of the result tracks where an
/// eventuality is first fulfilled. Supported fragment: literals,
/// conjunction, `AX`, `AG`, `AF`, and `A[. U .]`; `AF`/`AG` are rewritten to
/// until/release of constants first. Returns the transformed formula and the
/// fresh proposition standing in for `q`.
pub fn trans_q(phi: &CtlFormula, q: &str) -> Result<(CtlFormula, String), CoverageError> {
    let mut fresh = format!("{q}'");
    while phi.atoms().contains(&fresh) || fresh == q {
        fresh.push('\'');
    }
    let out = trans_rec(phi, q, &fresh)?;
    Ok((out, fresh))
}

fn trans_rec(phi: &CtlFormula, q: &str, fresh: &str) -> Result<CtlFormula, CoverageError> {
    use CtlFormula::*;
    Ok(match phi {
        True => True,
        False => False,
        Atom(p) if p == q => CtlFormula::atom(fresh),
        Atom(p) => CtlFormula::atom(p),
        Not(inner) => match &**inner {
            Atom(_) => CtlFormula::not(trans_rec(inner, q, fresh)?),
            other => {
                return Err(CoverageError::UnsupportedOperator(format!(
                    "negation of a non-atomic formula: !({other})"
                )))
            }
        },
        And(a, b) => CtlFormula::and(trans_rec(a, q, fresh)?, trans_rec(b, q, fresh)?),
        Ax(a) => CtlFormula::ax(trans_rec(a, q, fresh)?),
        Af(a) => trans_au(&True, a, q, fresh)?,
        Au(a, b) => trans_au(a, b, q, fresh)?,
        Ag(a) => CtlFormula::ar(False, trans_rec(a, q, fresh)?),
        // Only the release form that AG rewrites to is supported.
        Ar(a, b) if **a == False => CtlFormula::ar(False, trans_rec(b, q, fresh)?),
        other => return Err(CoverageError::UnsupportedOperator(format!("{other}"))),
    })
}

/// The until rule: the first conjunct tracks `q` inside the left argument,
/// the second pins the segment before the eventuality and tracks `q` at the
/// fulfilling state.
fn trans_au(
    a: &CtlFormula,
    b: &CtlFormula,
    q: &str,
    fresh: &str,
) -> Result<CtlFormula, CoverageError> {
    let left = CtlFormula::au(trans_rec(a, q, fresh)?, b.clone());
    let right = CtlFormula::au(
        CtlFormula::and(a.clone(), CtlFormula::not(b.clone())),
        trans_rec(b, q, fresh)?,
    );
    Ok(CtlFormula::and(left, right))
}

/// States that `q`-cover' `phi`: the structure is extended with a fresh
/// atom `q'` labeled like `q`, and a state is in the result iff flipping
/// `q'` (only) there falsifies the transformed formula.
pub fn covered_prime_states(
    k: &KripkeStructure,
    phi: &CtlFormula,
    q: &str,
) -> Result<BTreeSet<String>, CoverageError> {
    require_atom(k, q)?;
    require_satisfied(k, phi)?;
    let (phi2, fresh) = trans_q(phi, q)?;
    let k2 = k.with_copied_atom(&fresh, q)?;
    require_satisfied(&k2, &phi2)?;
    let mut out = BTreeSet::new();
    for w in k.states() {
        let mutant = k2.mutate([w.as_str()], &fresh)?;
        if !satisfies(&mutant, &phi2)? {
            out.insert(w.clone());
        }
    }
    Ok(out)
}
