//! Per-state coverage reports: deterministic assembly, optional fan-out
//! across threads, and the table / structured renderings used by the CLI.

use std::fmt::Write as _;

use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};

use super::{CircuitEngine, CoverageError, Engine};
use crate::circuit::{BoundedResp, RespResult};
use crate::ctl::CtlFormula;
use crate::kripke::KripkeStructure;

/// One state's line in a report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateRecord {
    pub state: String,
    pub outcome: BoundedResp,
}

impl StateRecord {
    /// Covered means responsibility exactly 1; a below-threshold outcome is
    /// definitely not covered.
    pub fn covered(&self) -> bool {
        match &self.outcome {
            BoundedResp::Exact(r) => r.is_critical(),
            BoundedResp::BelowThreshold { .. } => false,
        }
    }

    /// Cause means responsibility above 0; unknown under a threshold engine
    /// when no witness was found within the bound.
    pub fn cause(&self) -> Option<bool> {
        match &self.outcome {
            BoundedResp::Exact(r) => Some(r.is_cause()),
            BoundedResp::BelowThreshold { .. } => None,
        }
    }

    fn exact(&self) -> Option<&RespResult> {
        self.outcome.as_exact()
    }
}

impl Serialize for StateRecord {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("StateRecord", 7)?;
        s.serialize_field("state", &self.state)?;
        s.serialize_field("covered", &self.covered())?;
        s.serialize_field("cause", &self.cause())?;
        match &self.outcome {
            BoundedResp::Exact(r) => {
                s.serialize_field("dr", &r.responsibility().to_string())?;
                s.serialize_field("below", &None::<String>)?;
                s.serialize_field("witness_size", &r.witness_size())?;
                s.serialize_field(
                    "witness",
                    &r.witness().map(|w| w.iter().collect::<Vec<_>>()),
                )?;
            }
            BoundedResp::BelowThreshold { threshold } => {
                s.serialize_field("dr", &None::<String>)?;
                s.serialize_field("below", &format!("1/{threshold}"))?;
                s.serialize_field("witness_size", &None::<usize>)?;
                s.serialize_field("witness", &None::<Vec<String>>)?;
            }
        }
        s.end()
    }
}

/// Full per-state report for one (structure, spec, proposition) query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverageReport {
    pub spec: String,
    pub q: String,
    pub engine: String,
    pub states: Vec<StateRecord>,
}

impl CoverageReport {
    pub fn covered_set(&self) -> Vec<&str> {
        self.states
            .iter()
            .filter(|r| r.covered())
            .map(|r| r.state.as_str())
            .collect()
    }

    pub fn cause_set(&self) -> Vec<&str> {
        self.states
            .iter()
            .filter(|r| r.cause() == Some(true))
            .map(|r| r.state.as_str())
            .collect()
    }

    /// Aligned human-readable table; responsibilities print as exact
    /// fractions, never decimals.
    pub fn to_table(&self) -> String {
        let mut rows: Vec<[String; 5]> = vec![[
            "state".into(),
            "covered".into(),
            "cause".into(),
            "dr".into(),
            "witness".into(),
        ]];
        for r in &self.states {
            let cause = match r.cause() {
                Some(true) => "yes",
                Some(false) => "no",
                None => "?",
            };
            let dr = match &r.outcome {
                BoundedResp::Exact(e) => e.responsibility().to_string(),
                BoundedResp::BelowThreshold { threshold } => format!("< 1/{threshold}"),
            };
            let witness = match r.exact().and_then(RespResult::witness) {
                Some(w) => {
                    let names: Vec<&str> = w.iter().map(|s| s.as_str()).collect();
                    format!("{{{}}}", names.join(", "))
                }
                None => "-".to_string(),
            };
            rows.push([
                r.state.clone(),
                if r.covered() { "yes" } else { "no" }.into(),
                cause.into(),
                dr,
                witness,
            ]);
        }
        let widths: Vec<usize> = (0..5)
            .map(|c| rows.iter().map(|r| r[c].len()).max().unwrap())
            .collect();
        let mut out = String::new();
        for row in &rows {
            for (c, cell) in row.iter().enumerate() {
                if c > 0 {
                    out.push_str("  ");
                }
                let _ = write!(out, "{cell:<width$}", width = widths[c]);
            }
            while out.ends_with(' ') {
                out.pop();
            }
            out.push('\n');
        }
        out
    }
}

impl Serialize for CoverageReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_map(Some(4))?;
        s.serialize_entry("spec", &self.spec)?;
        s.serialize_entry("q", &self.q)?;
        s.serialize_entry("engine", &self.engine)?;
        s.serialize_entry("states", &self.states)?;
        s.end()
    }
}

/// Computes the responsibility of every state, fanning the per-state work
/// out over `jobs` threads. The merged output is sorted by state id and is
/// identical for every parallelism degree.
pub fn build_report(
    k: &KripkeStructure,
    phi: &CtlFormula,
    q: &str,
    engine: Engine,
    jobs: usize,
) -> Result<CoverageReport, CoverageError> {
    super::require_atom(k, q)?;
    super::require_satisfied(k, phi)?;
    if let Engine::Bounded(0) = engine {
        return Err(crate::circuit::CircuitError::InvalidThreshold.into());
    }
    let circuit_ctx = match engine {
        Engine::Circuit => Some(CircuitEngine::build(k, phi)?),
        _ => None,
    };
    let circuit_ctx = circuit_ctx.as_ref();

    let states: Vec<String> = k.states().cloned().collect();
    let jobs = jobs.max(1).min(states.len().max(1));
    let mut slots: Vec<Option<Result<BoundedResp, CoverageError>>> = Vec::new();
    slots.resize_with(states.len(), || None);

    std::thread::scope(|scope| {
        let mut rest: &mut [Option<Result<BoundedResp, CoverageError>>] = &mut slots;
        let chunk = states.len().div_ceil(jobs);
        let mut start = 0;
        while !rest.is_empty() {
            let take = chunk.min(rest.len());
            let (mine, tail) = rest.split_at_mut(take);
            rest = tail;
            let states = &states;
            scope.spawn(move || {
                for (off, slot) in mine.iter_mut().enumerate() {
                    let w = &states[start + off];
                    *slot = Some(state_outcome(k, phi, q, w, engine, circuit_ctx));
                }
            });
            start += take;
        }
    });

    let mut records = Vec::with_capacity(states.len());
    for (state, slot) in states.into_iter().zip(slots) {
        let outcome = slot.expect("every chunk was processed")?;
        records.push(StateRecord { state, outcome });
    }
    Ok(CoverageReport {
        spec: phi.to_string(),
        q: q.to_string(),
        engine: engine.name(),
        states: records,
    })
}

fn state_outcome(
    k: &KripkeStructure,
    phi: &CtlFormula,
    q: &str,
    w: &str,
    engine: Engine,
    circuit_ctx: Option<&CircuitEngine>,
) -> Result<BoundedResp, CoverageError> {
    match engine {
        Engine::Direct => Ok(BoundedResp::Exact(super::direct_search(
            k,
            phi,
            q,
            w,
            usize::MAX,
        )?)),
        Engine::Bounded(kb) => {
            let r = super::direct_search(k, phi, q, w, kb - 1)?;
            Ok(match r.witness() {
                Some(_) => BoundedResp::Exact(r),
                None => BoundedResp::BelowThreshold { threshold: kb },
            })
        }
        Engine::Circuit => Ok(BoundedResp::Exact(
            circuit_ctx.expect("built above").query(w, q)?,
        )),
    }
}
