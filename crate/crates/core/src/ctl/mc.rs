//! Explicit-state CTL model checking by fixpoint labeling.

use std::collections::BTreeSet;

use thiserror::Error;

use super::CtlFormula;
use crate::kripke::KripkeStructure;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CheckError {
    #[error("formula mentions `{0}`, which is not an atom of the structure")]
    UnknownAtom(String),
}

/// The set of states satisfying `phi` under standard CTL semantics.
/// Until/release/globally operators are computed by fixpoint iteration.
pub fn model_check(k: &KripkeStructure, phi: &CtlFormula) -> Result<BTreeSet<String>, CheckError> {
    for atom in phi.atoms() {
        if !k.atoms().contains(&atom) {
            return Err(CheckError::UnknownAtom(atom));
        }
    }
    let states: Vec<&String> = k.states().collect();
    let index = |id: &String| states.binary_search(&id).expect("known state");
    let succs: Vec<Vec<usize>> = states
        .iter()
        .map(|s| k.successors(s).unwrap().iter().map(index).collect())
        .collect();
    let sat = eval(k, &states, &succs, phi);
    Ok(states
        .iter()
        .zip(&sat)
        .filter(|(_, &b)| b)
        .map(|(s, _)| (*s).clone())
        .collect())
}

/// Convenience wrapper: does the initial state satisfy `phi`?
pub fn satisfies(k: &KripkeStructure, phi: &CtlFormula) -> Result<bool, CheckError> {
    Ok(model_check(k, phi)?.contains(k.initial()))
}

fn eval(
    k: &KripkeStructure,
    states: &[&String],
    succs: &[Vec<usize>],
    phi: &CtlFormula,
) -> Vec<bool> {
    use CtlFormula::*;
    let n = states.len();
    let sub = |f: &CtlFormula| eval(k, states, succs, f);
    match phi {
        True => vec![true; n],
        False => vec![false; n],
        Atom(p) => states.iter().map(|s| k.holds(s, p)).collect(),
        Not(a) => sub(a).into_iter().map(|b| !b).collect(),
        And(a, b) => zip_with(sub(a), sub(b), |x, y| x && y),
        Or(a, b) => zip_with(sub(a), sub(b), |x, y| x || y),
        Implies(a, b) => zip_with(sub(a), sub(b), |x, y| !x || y),
        Ex(a) => pre_exists(succs, &sub(a)),
        Ax(a) => pre_forall(succs, &sub(a)),
        Ef(a) => lfp(succs, &vec![true; n], &sub(a), false),
        Af(a) => lfp(succs, &vec![true; n], &sub(a), true),
        Eg(a) => gfp(succs, &vec![false; n], &sub(a), false),
        Ag(a) => gfp(succs, &vec![false; n], &sub(a), true),
        Eu(a, b) => lfp(succs, &sub(a), &sub(b), false),
        Au(a, b) => lfp(succs, &sub(a), &sub(b), true),
        Er(a, b) => gfp(succs, &sub(a), &sub(b), false),
        Ar(a, b) => gfp(succs, &sub(a), &sub(b), true),
    }
}

fn zip_with(a: Vec<bool>, b: Vec<bool>, f: impl Fn(bool, bool) -> bool) -> Vec<bool> {
    a.into_iter().zip(b).map(|(x, y)| f(x, y)).collect()
}

fn pre_exists(succs: &[Vec<usize>], set: &[bool]) -> Vec<bool> {
    succs.iter().map(|ss| ss.iter().any(|&v| set[v])).collect()
}

fn pre_forall(succs: &[Vec<usize>], set: &[bool]) -> Vec<bool> {
    succs.iter().map(|ss| ss.iter().all(|&v| set[v])).collect()
}

/// Least fixpoint of `Z = b ∨ (a ∧ preX Z)` where preX is universal or
/// existential; computes E/A until.
fn lfp(succs: &[Vec<usize>], a: &[bool], b: &[bool], universal: bool) -> Vec<bool> {
    let mut set = b.to_vec();
    loop {
        let pre = if universal {
            pre_forall(succs, &set)
        } else {
            pre_exists(succs, &set)
        };
        let mut changed = false;
        for i in 0..set.len() {
            if !set[i] && a[i] && pre[i] {
                set[i] = true;
                changed = true;
            }
        }
        if !changed {
            return set;
        }
    }
}

/// Greatest fixpoint of `Z = b ∧ (a ∨ preX Z)`; computes E/A release.
fn gfp(succs: &[Vec<usize>], a: &[bool], b: &[bool], universal: bool) -> Vec<bool> {
    let mut set = b.to_vec();
    loop {
        let pre = if universal {
            pre_forall(succs, &set)
        } else {
            pre_exists(succs, &set)
        };
        let mut changed = false;
        for i in 0..set.len() {
            if set[i] && !a[i] && !pre[i] {
                set[i] = false;
                changed = true;
            }
        }
        if !changed {
            return set;
        }
    }
}
