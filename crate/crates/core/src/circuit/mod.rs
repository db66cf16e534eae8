//! Boolean circuits, assignments, criticality, and degrees of responsibility.
//!
//! A [`Circuit`] is an acyclic gate graph over named input variables with a
//! single output gate. The degree of responsibility of a variable `X` for a
//! gate `w` under an assignment `f` is `1/(1+|Z|)` for a minimal set `Z` of
//! other variables such that flipping `Z` preserves the value of `w` and
//! makes `X` critical for it; it is `0` when no such set exists.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

mod build;
mod io;
mod readonce;
mod resp;

pub use build::CircuitBuilder;
pub use io::{parse_assignment, parse_circuit, serialize_assignment, serialize_circuit};
pub use readonce::resp_readonce;
pub use resp::{is_cause, oracle_lc, resp_binsearch, resp_bounded, resp_brute};

/// Index of a gate in its circuit.
pub type GateId = usize;

/// A single gate. `And`/`Or` are strictly binary; `Input` gates carry the
/// variable name they read.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Gate {
    Input(String),
    Not(GateId),
    And(GateId, GateId),
    Or(GateId, GateId),
    Const(bool),
}

impl Gate {
    fn children(&self) -> impl Iterator<Item = GateId> + '_ {
        let pair = match *self {
            Gate::Input(_) | Gate::Const(_) => (None, None),
            Gate::Not(a) => (Some(a), None),
            Gate::And(a, b) | Gate::Or(a, b) => (Some(a), Some(b)),
        };
        pair.0.into_iter().chain(pair.1)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CircuitError {
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("unknown gate id {0}")]
    UnknownGate(usize),
    #[error("circuit contains a cycle")]
    CyclicCircuit,
    #[error("variable `{0}` labels more than one input gate")]
    DuplicateInput(String),
    #[error("assignment is missing variable `{0}`")]
    MissingAssignment(String),
    #[error("assignment mentions `{0}`, which is not a circuit input")]
    UnexpectedAssignment(String),
    #[error("variable `{0}` is not in the mutable set")]
    NotMutable(String),
    #[error("threshold k must be at least 1")]
    InvalidThreshold,
    #[error("circuit is not a tree: a gate is shared")]
    NotATree,
    #[error("variable `{0}` occurs in more than one leaf")]
    RepeatedVariable(String),
    #[error("negation above a non-input gate; read-once trees are literal trees")]
    NonLiteralNegation,
    #[error("constant gates are not allowed in read-once trees")]
    ConstantInReadOnce,
    #[error("variable `{0}` does not occur in the tree")]
    VariableNotInTree(String),
    #[error("malformed circuit document: {0}")]
    Format(String),
}

/// An acyclic Boolean circuit with one output gate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Circuit {
    gates: Vec<Gate>,
    output: GateId,
    inputs: Vec<String>,
    input_gate: BTreeMap<String, GateId>,
    topo: Vec<GateId>,
}

impl Circuit {
    /// Validates and builds a circuit: ids in range, gate graph acyclic,
    /// every declared input labels exactly one input gate and vice versa.
    pub fn new(
        gates: Vec<Gate>,
        output: GateId,
        inputs: Vec<String>,
    ) -> Result<Self, CircuitError> {
        if output >= gates.len() {
            return Err(CircuitError::UnknownGate(output));
        }
        let mut input_gate = BTreeMap::new();
        for (id, gate) in gates.iter().enumerate() {
            for child in gate.children() {
                if child >= gates.len() {
                    return Err(CircuitError::UnknownGate(child));
                }
            }
            if let Gate::Input(name) = gate {
                if input_gate.insert(name.clone(), id).is_some() {
                    return Err(CircuitError::DuplicateInput(name.clone()));
                }
            }
        }
        let declared: BTreeSet<&String> = inputs.iter().collect();
        if declared.len() != inputs.len() {
            let dup = inputs
                .iter()
                .find(|n| inputs.iter().filter(|m| m == n).count() > 1)
                .unwrap();
            return Err(CircuitError::DuplicateInput(dup.clone()));
        }
        for name in input_gate.keys() {
            if !declared.contains(name) {
                return Err(CircuitError::UnknownVariable(name.clone()));
            }
        }
        for name in &inputs {
            if !input_gate.contains_key(name) {
                return Err(CircuitError::UnknownVariable(name.clone()));
            }
        }
        let topo = topo_order(&gates)?;
        Ok(Circuit {
            gates,
            output,
            inputs,
            input_gate,
            topo,
        })
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn output(&self) -> GateId {
        self.output
    }

    /// Declared input variables, in declaration order.
    pub fn inputs(&self) -> &[String] {
        &self.inputs
    }

    pub fn input_gate(&self, name: &str) -> Option<GateId> {
        self.input_gate.get(name).copied()
    }

    pub fn gate_count(&self) -> usize {
        self.gates.len()
    }

    fn check_assignment(&self, f: &Assignment) -> Result<(), CircuitError> {
        for name in &self.inputs {
            if f.get(name).is_none() {
                return Err(CircuitError::MissingAssignment(name.clone()));
            }
        }
        if f.len() != self.inputs.len() {
            for name in f.names() {
                if !self.input_gate.contains_key(name) {
                    return Err(CircuitError::UnexpectedAssignment(name.clone()));
                }
            }
        }
        Ok(())
    }

    /// The value of every gate under `f`, computed bottom-up; index by
    /// [`GateId`]. The value at [`Circuit::output`] is the circuit value.
    pub fn evaluate(&self, f: &Assignment) -> Result<Vec<bool>, CircuitError> {
        self.check_assignment(f)?;
        let mut values = vec![false; self.gates.len()];
        for &id in &self.topo {
            values[id] = match &self.gates[id] {
                Gate::Input(name) => f.get(name).unwrap(),
                Gate::Not(a) => !values[*a],
                Gate::And(a, b) => values[*a] && values[*b],
                Gate::Or(a, b) => values[*a] || values[*b],
                Gate::Const(v) => *v,
            };
        }
        Ok(values)
    }

    /// Value of the output gate under `f`.
    pub fn value(&self, f: &Assignment) -> Result<bool, CircuitError> {
        Ok(self.evaluate(f)?[self.output])
    }

    /// True iff flipping `x` alone flips the value of gate `w` under `f`.
    pub fn is_critical(&self, x: &str, w: GateId, f: &Assignment) -> Result<bool, CircuitError> {
        if self.input_gate(x).is_none() {
            return Err(CircuitError::UnknownVariable(x.to_string()));
        }
        if w >= self.gates.len() {
            return Err(CircuitError::UnknownGate(w));
        }
        let base = self.evaluate(f)?;
        let flipped = self.evaluate(&f.flip([x])?)?;
        Ok(base[w] != flipped[w])
    }
}

fn topo_order(gates: &[Gate]) -> Result<Vec<GateId>, CircuitError> {
    // Kahn's algorithm over child -> parent edges; a leftover node means a cycle.
    let mut indegree = vec![0usize; gates.len()];
    let mut parents: Vec<Vec<GateId>> = vec![Vec::new(); gates.len()];
    for (id, gate) in gates.iter().enumerate() {
        for child in gate.children() {
            indegree[id] += 1;
            parents[child].push(id);
        }
    }
    let mut ready: Vec<GateId> = (0..gates.len()).filter(|&i| indegree[i] == 0).collect();
    let mut order = Vec::with_capacity(gates.len());
    while let Some(id) = ready.pop() {
        order.push(id);
        for &p in &parents[id] {
            indegree[p] -= 1;
            if indegree[p] == 0 {
                ready.push(p);
            }
        }
    }
    if order.len() != gates.len() {
        return Err(CircuitError::CyclicCircuit);
    }
    Ok(order)
}

/// A total map from variable names to bits.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Assignment {
    values: BTreeMap<String, bool>,
}

impl Assignment {
    pub fn new(values: BTreeMap<String, bool>) -> Self {
        Assignment { values }
    }

    pub fn from_pairs<'a>(pairs: impl IntoIterator<Item = (&'a str, bool)>) -> Self {
        Assignment {
            values: pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
        }
    }

    /// Assigns `value` to every name in `names`.
    pub fn constant<'a>(names: impl IntoIterator<Item = &'a str>, value: bool) -> Self {
        Assignment::from_pairs(names.into_iter().map(|n| (n, value)))
    }

    pub fn get(&self, name: &str) -> Option<bool> {
        self.values.get(name).copied()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn names(&self) -> impl Iterator<Item = &String> {
        self.values.keys()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&String, bool)> {
        self.values.iter().map(|(k, &v)| (k, v))
    }

    /// The assignment that agrees with `self` except that every variable in
    /// `vars` is negated. Flipping twice with the same set is the identity.
    pub fn flip<'a>(
        &self,
        vars: impl IntoIterator<Item = &'a str>,
    ) -> Result<Assignment, CircuitError> {
        let mut out = self.clone();
        for v in vars {
            match out.values.get_mut(v) {
                Some(bit) => *bit = !*bit,
                None => return Err(CircuitError::UnknownVariable(v.to_string())),
            }
        }
        Ok(out)
    }
}

/// An exact degree of responsibility: either `0` or `1/(k+1)` for a witness
/// of size `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Responsibility(Option<usize>);

impl Responsibility {
    pub fn zero() -> Self {
        Responsibility(None)
    }

    pub fn from_witness_size(k: usize) -> Self {
        Responsibility(Some(k))
    }

    /// Witness size `k` with `dr = 1/(k+1)`, or `None` when `dr = 0`.
    pub fn witness_size(&self) -> Option<usize> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_none()
    }

    /// Numerator and denominator of the exact value.
    pub fn as_fraction(&self) -> (usize, usize) {
        match self.0 {
            None => (0, 1),
            Some(k) => (1, k + 1),
        }
    }

    /// True iff the value is at least `1/i`.
    pub fn at_least_one_over(&self, i: usize) -> bool {
        match self.0 {
            None => false,
            Some(k) => k < i,
        }
    }
}

impl PartialOrd for Responsibility {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Responsibility {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        match (self.0, other.0) {
            (None, None) => std::cmp::Ordering::Equal,
            (None, Some(_)) => std::cmp::Ordering::Less,
            (Some(_), None) => std::cmp::Ordering::Greater,
            // Smaller witness means larger responsibility.
            (Some(a), Some(b)) => b.cmp(&a),
        }
    }
}

impl fmt::Display for Responsibility {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            None => write!(f, "0"),
            Some(0) => write!(f, "1"),
            Some(k) => write!(f, "1/{}", k + 1),
        }
    }
}

/// Result of a responsibility computation: the minimal witness set, when one
/// exists. The witness never contains the queried variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RespResult {
    witness: Option<BTreeSet<String>>,
}

impl RespResult {
    pub fn none() -> Self {
        RespResult { witness: None }
    }

    pub fn with_witness(witness: BTreeSet<String>) -> Self {
        RespResult {
            witness: Some(witness),
        }
    }

    pub fn witness(&self) -> Option<&BTreeSet<String>> {
        self.witness.as_ref()
    }

    pub fn witness_size(&self) -> Option<usize> {
        self.witness.as_ref().map(|w| w.len())
    }

    pub fn responsibility(&self) -> Responsibility {
        Responsibility(self.witness_size())
    }

    /// `dr > 0`.
    pub fn is_cause(&self) -> bool {
        self.witness.is_some()
    }

    /// `dr = 1`: the variable is critical on its own.
    pub fn is_critical(&self) -> bool {
        self.witness_size() == Some(0)
    }
}

impl fmt::Display for RespResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.responsibility())
    }
}

/// Outcome of a threshold-bounded responsibility query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundedResp {
    /// A witness within the bound; the result is exact.
    Exact(RespResult),
    /// No witness of size at most `threshold - 1`: `dr < 1/threshold`.
    BelowThreshold { threshold: usize },
}

impl BoundedResp {
    pub fn as_exact(&self) -> Option<&RespResult> {
        match self {
            BoundedResp::Exact(r) => Some(r),
            BoundedResp::BelowThreshold { .. } => None,
        }
    }
}

impl fmt::Display for BoundedResp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundedResp::Exact(r) => write!(f, "{r}"),
            BoundedResp::BelowThreshold { threshold } => write!(f, "dr < 1/{threshold}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    pub(crate) fn or2() -> Circuit {
        let mut b = CircuitBuilder::new();
        let x1 = b.input("X1");
        let x2 = b.input("X2");
        let out = b.or(x1, x2);
        b.finish(out)
    }

    /// `(X∧Y)∨(X∧Z)∨(Y∧Z)∨(X∧U)` from the worked majority-or example.
    pub(crate) fn four_term() -> Circuit {
        let mut b = CircuitBuilder::new();
        let x = b.input("X");
        let y = b.input("Y");
        let z = b.input("Z");
        let u = b.input("U");
        let xy = b.and(x, y);
        let xz = b.and(x, z);
        let yz = b.and(y, z);
        let xu = b.and(x, u);
        let t = b.or(xy, xz);
        let t = b.or(t, yz);
        let out = b.or(t, xu);
        b.finish(out)
    }

    #[test]
    fn evaluate_disjunction_of_ones() {
        let c = or2();
        let f = Assignment::from_pairs([("X1", true), ("X2", true)]);
        assert!(c.value(&f).unwrap());
    }

    #[test]
    fn evaluate_four_term_under_f3() {
        let c = four_term();
        let f3 = Assignment::from_pairs([("X", true), ("Y", true), ("Z", false), ("U", false)]);
        assert!(c.value(&f3).unwrap());
    }

    #[test]
    fn evaluate_negation() {
        let mut b = CircuitBuilder::new();
        let x = b.input("X");
        let out = b.not(x);
        let c = b.finish(out);
        let f = Assignment::from_pairs([("X", false)]);
        assert!(c.value(&f).unwrap());
    }

    #[test]
    fn evaluate_rejects_incomplete_assignment() {
        let c = or2();
        let f = Assignment::from_pairs([("X1", true)]);
        assert_eq!(
            c.value(&f),
            Err(CircuitError::MissingAssignment("X2".into()))
        );
    }

    #[test]
    fn evaluate_rejects_foreign_variables() {
        let c = or2();
        let f = Assignment::from_pairs([("X1", true), ("X2", false), ("X3", true)]);
        assert_eq!(
            c.value(&f),
            Err(CircuitError::UnexpectedAssignment("X3".into()))
        );
    }

    #[test]
    fn cyclic_circuit_is_rejected() {
        let gates = vec![Gate::Input("X".into()), Gate::Not(2), Gate::And(0, 1)];
        assert_eq!(
            Circuit::new(gates, 1, vec!["X".into()]),
            Err(CircuitError::CyclicCircuit)
        );
    }

    #[test]
    fn flip_single_variable() {
        let f = Assignment::from_pairs([("X", true), ("Y", false)]);
        let g = f.flip(["Y"]).unwrap();
        assert_eq!(g, Assignment::from_pairs([("X", true), ("Y", true)]));
    }

    #[test]
    fn flip_whole_domain() {
        let f = Assignment::from_pairs([("X", false), ("Y", false), ("Z", false)]);
        let g = f.flip(["X", "Y", "Z"]).unwrap();
        assert_eq!(
            g,
            Assignment::from_pairs([("X", true), ("Y", true), ("Z", true)])
        );
    }

    #[test]
    fn flip_unknown_variable_errors() {
        let f = Assignment::from_pairs([("X", true)]);
        assert_eq!(
            f.flip(["W"]),
            Err(CircuitError::UnknownVariable("W".into()))
        );
    }

    #[test]
    fn critical_single_input_circuit() {
        let mut b = CircuitBuilder::new();
        let x = b.input("X");
        let c = b.finish(x);
        let f = Assignment::from_pairs([("X", true)]);
        assert!(c.is_critical("X", c.output(), &f).unwrap());
    }

    #[test]
    fn not_critical_in_all_ones_disjunction() {
        let c = or2();
        let f = Assignment::constant(["X1", "X2"], true);
        assert!(!c.is_critical("X1", c.output(), &f).unwrap());
    }

    #[test]
    fn critical_in_four_term_under_f3() {
        let c = four_term();
        let f3 = Assignment::from_pairs([("X", true), ("Y", true), ("Z", false), ("U", false)]);
        assert!(c.is_critical("X", c.output(), &f3).unwrap());
    }

    #[test]
    fn responsibility_ordering_and_display() {
        let zero = Responsibility::zero();
        let third = Responsibility::from_witness_size(2);
        let one = Responsibility::from_witness_size(0);
        assert!(zero < third && third < one);
        assert_eq!(zero.to_string(), "0");
        assert_eq!(third.to_string(), "1/3");
        assert_eq!(one.to_string(), "1");
        assert_eq!(third.as_fraction(), (1, 3));
        assert!(third.at_least_one_over(3));
        assert!(!third.at_least_one_over(2));
    }

    proptest! {
        #[test]
        fn flip_is_an_involution(bits in proptest::collection::btree_map("[a-d]", any::<bool>(), 1..5), mask in any::<u8>()) {
            let f = Assignment::new(bits);
            let names: Vec<&str> = f
                .names()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, n)| n.as_str())
                .collect();
            let back = f.flip(names.clone()).unwrap().flip(names).unwrap();
            prop_assert_eq!(back, f);
        }

        #[test]
        fn evaluate_is_deterministic(seed in any::<u64>()) {
            let c = crate::sample::random_circuit(seed, 4, 12, true);
            let f = crate::sample::random_assignment(seed ^ 0x9e37, c.inputs());
            prop_assert_eq!(c.evaluate(&f).unwrap(), c.evaluate(&f).unwrap());
        }
    }
}
