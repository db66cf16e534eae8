//! Incremental circuit construction with hash-consing and constant folding.

use std::collections::HashMap;

use super::{Circuit, Gate, GateId};

/// Builds circuits bottom-up. Structurally identical gates are shared, and
/// constants are folded through `not`/`and`/`or`, so repeated subterms cost
/// nothing and fixpoint unrollings collapse their degenerate first rounds.
///
/// Gate ids are assigned in insertion order, so a deterministic construction
/// sequence yields a byte-stable circuit.
#[derive(Debug, Default)]
pub struct CircuitBuilder {
    gates: Vec<Gate>,
    cache: HashMap<Gate, GateId>,
    inputs: Vec<String>,
}

impl CircuitBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    fn intern(&mut self, gate: Gate) -> GateId {
        if let Some(&id) = self.cache.get(&gate) {
            return id;
        }
        let id = self.gates.len();
        self.gates.push(gate.clone());
        self.cache.insert(gate, id);
        id
    }

    /// Declares (or returns the existing gate of) the input variable `name`.
    pub fn input(&mut self, name: &str) -> GateId {
        let gate = Gate::Input(name.to_string());
        if let Some(&id) = self.cache.get(&gate) {
            return id;
        }
        self.inputs.push(name.to_string());
        self.intern(gate)
    }

    pub fn constant(&mut self, value: bool) -> GateId {
        self.intern(Gate::Const(value))
    }

    pub fn not(&mut self, a: GateId) -> GateId {
        if let Gate::Const(v) = self.gates[a] {
            return self.constant(!v);
        }
        self.intern(Gate::Not(a))
    }

    pub fn and(&mut self, a: GateId, b: GateId) -> GateId {
        match (&self.gates[a], &self.gates[b]) {
            (Gate::Const(false), _) | (_, Gate::Const(false)) => self.constant(false),
            (Gate::Const(true), _) => b,
            (_, Gate::Const(true)) => a,
            _ => self.intern(Gate::And(a, b)),
        }
    }

    pub fn or(&mut self, a: GateId, b: GateId) -> GateId {
        match (&self.gates[a], &self.gates[b]) {
            (Gate::Const(true), _) | (_, Gate::Const(true)) => self.constant(true),
            (Gate::Const(false), _) => b,
            (_, Gate::Const(false)) => a,
            _ => self.intern(Gate::Or(a, b)),
        }
    }

    /// Conjunction of `items` as a balanced binary tree; empty is `true`.
    pub fn and_all(&mut self, items: &[GateId]) -> GateId {
        self.fold_balanced(items, true)
    }

    /// Disjunction of `items` as a balanced binary tree; empty is `false`.
    pub fn or_all(&mut self, items: &[GateId]) -> GateId {
        self.fold_balanced(items, false)
    }

    fn fold_balanced(&mut self, items: &[GateId], conj: bool) -> GateId {
        match items.len() {
            0 => self.constant(conj),
            1 => items[0],
            _ => {
                let mut layer = items.to_vec();
                while layer.len() > 1 {
                    layer = layer
                        .chunks(2)
                        .map(|pair| {
                            if pair.len() == 1 {
                                pair[0]
                            } else if conj {
                                self.and(pair[0], pair[1])
                            } else {
                                self.or(pair[0], pair[1])
                            }
                        })
                        .collect();
                }
                layer[0]
            }
        }
    }

    /// Finishes the circuit with `output` as its output gate. Declared inputs
    /// are kept even when folding left them unused.
    pub fn finish(self, output: GateId) -> Circuit {
        Circuit::new(self.gates, output, self.inputs)
            .expect("builder-produced circuits are valid by construction")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::Assignment;

    #[test]
    fn shared_subterms_are_built_once() {
        let mut b = CircuitBuilder::new();
        let x = b.input("x");
        let y = b.input("y");
        let a1 = b.and(x, y);
        let a2 = b.and(x, y);
        assert_eq!(a1, a2);
        let c = b.finish(a1);
        assert_eq!(c.gate_count(), 3);
    }

    #[test]
    fn constants_fold_through_connectives() {
        let mut b = CircuitBuilder::new();
        let x = b.input("x");
        let t = b.constant(true);
        let f = b.constant(false);
        assert_eq!(b.and(x, t), x);
        assert_eq!(b.or(x, f), x);
        let dead = b.and(x, f);
        assert_eq!(b.gates[dead], Gate::Const(false));
        let nt = b.not(t);
        assert_eq!(b.gates[nt], Gate::Const(false));
    }

    #[test]
    fn empty_and_unit_folds() {
        let mut b = CircuitBuilder::new();
        let empty_and = b.and_all(&[]);
        assert_eq!(b.gates[empty_and], Gate::Const(true));
        let empty_or = b.or_all(&[]);
        assert_eq!(b.gates[empty_or], Gate::Const(false));
        let x = b.input("x");
        assert_eq!(b.and_all(&[x]), x);
    }

    #[test]
    fn balanced_or_matches_flat_semantics() {
        let mut b = CircuitBuilder::new();
        let xs: Vec<_> = (0..5).map(|i| b.input(&format!("x{i}"))).collect();
        let out = b.or_all(&xs);
        let c = b.finish(out);
        for i in 0..5 {
            let mut f = Assignment::constant(c.inputs().iter().map(|s| s.as_str()), false);
            f = f.flip([format!("x{i}").as_str()]).unwrap();
            assert!(c.value(&f).unwrap());
        }
        let all_false = Assignment::constant(c.inputs().iter().map(|s| s.as_str()), false);
        assert!(!c.value(&all_false).unwrap());
    }

    #[test]
    fn unused_declared_inputs_survive() {
        let mut b = CircuitBuilder::new();
        let x = b.input("x");
        let _unused = b.input("y");
        let t = b.constant(true);
        let out = b.and(x, t); // folds to x, leaving y unused
        let c = b.finish(out);
        assert_eq!(c.inputs(), ["x".to_string(), "y".to_string()]);
        assert_eq!(c.output(), c.input_gate("x").unwrap());
    }
}
