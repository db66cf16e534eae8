//! Compiles the product of a Kripke structure and a CTL formula into an
//! acyclic Boolean circuit.
//!
//! The circuit's inputs are one variable per (state, atom) pair of the
//! formula's atoms; under the assignment that reads the structure's labels
//! its output equals satisfaction of the formula at the initial state. More
//! strongly, the circuit computes satisfaction as a *function* of the
//! labels: flipping input variables is the same as mutating the structure,
//! which is what lets responsibility queries run against the circuit.
//!
//! Until/release subformulas are unrolled through `|W|` fixpoint
//! approximation rounds, which converges on any labeling of a fixed finite
//! transition graph and keeps the circuit acyclic. The node for a (state,
//! subformula, round) triple is memoized, successor fan-ins become balanced
//! binary trees over id-sorted successors, and gate construction is fully
//! deterministic, so compiling the same inputs is byte-stable.

use std::collections::{BTreeMap, HashMap};

use thiserror::Error;

use crate::circuit::{Assignment, Circuit, CircuitBuilder, GateId};
use crate::ctl::{to_pnf, CtlFormula};
use crate::kripke::KripkeStructure;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CompileError {
    #[error("formula mentions `{0}`, which is not an atom of the structure")]
    UnknownAtom(String),
}

/// The variable name of the (state, atom) leaf.
pub fn leaf_variable(state: &str, atom: &str) -> String {
    format!("X[{state}:{atom}]")
}

/// A compiled product circuit together with its leaf naming.
#[derive(Debug, Clone)]
pub struct ProductCircuit {
    circuit: Circuit,
    /// (state, atom) -> input variable name; the inverse of the naming map.
    leaves: BTreeMap<(String, String), String>,
}

impl ProductCircuit {
    pub fn circuit(&self) -> &Circuit {
        &self.circuit
    }

    pub fn leaves(&self) -> impl Iterator<Item = (&(String, String), &String)> {
        self.leaves.iter()
    }

    pub fn variable_for(&self, state: &str, atom: &str) -> Option<&String> {
        self.leaves.get(&(state.to_string(), atom.to_string()))
    }

    /// All leaf variables reading proposition `atom`, sorted by state id.
    pub fn variables_for_atom(&self, atom: &str) -> Vec<String> {
        self.leaves
            .iter()
            .filter(|((_, a), _)| a == atom)
            .map(|(_, v)| v.clone())
            .collect()
    }

    /// The assignment that reads the labels of `k`: the (state, atom) leaf
    /// is 1 iff the atom is in the state's label set. `k` must share the
    /// state space of the compiled structure (mutants do).
    pub fn leaf_assignment(&self, k: &KripkeStructure) -> Assignment {
        Assignment::from_pairs(
            self.leaves
                .iter()
                .map(|((state, atom), var)| (var.as_str(), k.holds(state, atom))),
        )
    }
}

/// Compiles `phi` (converted to positive normal form internally) against `k`.
pub fn compile(k: &KripkeStructure, phi: &CtlFormula) -> Result<ProductCircuit, CompileError> {
    for atom in phi.atoms() {
        if !k.atoms().contains(&atom) {
            return Err(CompileError::UnknownAtom(atom));
        }
    }
    let phi = to_pnf(phi);
    let mut ctx = Compiler {
        k,
        builder: CircuitBuilder::new(),
        memo: HashMap::new(),
        rounds: k.state_count(),
    };
    // Declare every leaf up front so the input set is exactly
    // states x atoms(phi), in sorted order, regardless of folding.
    let mut leaves = BTreeMap::new();
    for state in k.states() {
        for atom in phi.atoms() {
            let var = leaf_variable(state, &atom);
            ctx.builder.input(&var);
            leaves.insert((state.clone(), atom.clone()), var);
        }
    }
    let states: Vec<String> = k.states().cloned().collect();
    let root = ctx.node(&states, k.initial(), &phi);
    let circuit = ctx.builder.finish(root);
    Ok(ProductCircuit { circuit, leaves })
}

struct Compiler<'a> {
    k: &'a KripkeStructure,
    builder: CircuitBuilder,
    /// Key: (state index, subformula address, fixpoint round).
    memo: HashMap<(usize, usize, usize), GateId>,
    rounds: usize,
}

impl Compiler<'_> {
    fn state_index(&self, states: &[String], id: &str) -> usize {
        states
            .binary_search_by(|s| s.as_str().cmp(id))
            .expect("known state")
    }

    fn node(&mut self, states: &[String], state: &str, phi: &CtlFormula) -> GateId {
        use CtlFormula::*;
        let key = (
            self.state_index(states, state),
            phi as *const CtlFormula as usize,
            0,
        );
        if let Some(&g) = self.memo.get(&key) {
            return g;
        }
        let gate = match phi {
            True => self.builder.constant(true),
            False => self.builder.constant(false),
            Atom(p) => {
                let var = leaf_variable(state, p);
                self.builder.input(&var)
            }
            Not(inner) => match &**inner {
                Atom(p) => {
                    let var = leaf_variable(state, p);
                    let leaf = self.builder.input(&var);
                    self.builder.not(leaf)
                }
                _ => unreachable!("negation above non-atoms is removed by PNF"),
            },
            And(a, b) => {
                let (ga, gb) = (self.node(states, state, a), self.node(states, state, b));
                self.builder.and(ga, gb)
            }
            Or(a, b) => {
                let (ga, gb) = (self.node(states, state, a), self.node(states, state, b));
                self.builder.or(ga, gb)
            }
            Ex(a) => {
                let succ = self.successor_nodes(states, state, a);
                self.builder.or_all(&succ)
            }
            Ax(a) => {
                let succ = self.successor_nodes(states, state, a);
                self.builder.and_all(&succ)
            }
            Eu(..) | Au(..) | Er(..) | Ar(..) => {
                let round = self.rounds;
                self.fixpoint_node(states, state, phi, round)
            }
            Implies(..) | Ef(_) | Af(_) | Eg(_) | Ag(_) => {
                unreachable!("removed by PNF")
            }
        };
        self.memo.insert(key, gate);
        gate
    }

    fn successor_nodes(&mut self, states: &[String], state: &str, phi: &CtlFormula) -> Vec<GateId> {
        let succ: Vec<String> = self
            .k
            .successors(state)
            .expect("known state")
            .iter()
            .cloned()
            .collect();
        succ.iter().map(|v| self.node(states, v, phi)).collect()
    }

    /// Round `r` of the fixpoint approximation of an until/release node.
    /// Until starts from the empty set, release from the full set; each
    /// round peels one application of the defining equation.
    fn fixpoint_node(
        &mut self,
        states: &[String],
        state: &str,
        phi: &CtlFormula,
        round: usize,
    ) -> GateId {
        use CtlFormula::*;
        let (is_until, universal, a, b) = match phi {
            Eu(a, b) => (true, false, a, b),
            Au(a, b) => (true, true, a, b),
            Er(a, b) => (false, false, a, b),
            Ar(a, b) => (false, true, a, b),
            _ => unreachable!(),
        };
        if round == 0 {
            return self.builder.constant(!is_until);
        }
        let key = (
            self.state_index(states, state),
            phi as *const CtlFormula as usize,
            round,
        );
        if let Some(&g) = self.memo.get(&key) {
            return g;
        }
        let succ: Vec<String> = self
            .k
            .successors(state)
            .expect("known state")
            .iter()
            .cloned()
            .collect();
        let succ_gates: Vec<GateId> = succ
            .iter()
            .map(|v| self.fixpoint_node(states, v, phi, round - 1))
            .collect();
        let step = if universal {
            self.builder.and_all(&succ_gates)
        } else {
            self.builder.or_all(&succ_gates)
        };
        let ga = self.node(states, state, a);
        let gb = self.node(states, state, b);
        let gate = if is_until {
            // b ∨ (a ∧ X step)
            let tail = self.builder.and(ga, step);
            self.builder.or(gb, tail)
        } else {
            // b ∧ (a ∨ X step)
            let tail = self.builder.or(ga, step);
            self.builder.and(gb, tail)
        };
        self.memo.insert(key, gate);
        gate
    }
}
