//! Circuit and assignment file formats.
//!
//! A circuit document is JSON with three fields:
//!
//! ```json
//! {
//!   "inputs": ["X1", "X2"],
//!   "gates": [
//!     {"id": 0, "kind": "input", "args": ["X1"]},
//!     {"id": 1, "kind": "input", "args": ["X2"]},
//!     {"id": 2, "kind": "or", "args": [0, 1]}
//!   ],
//!   "output": 2
//! }
//! ```
//!
//! `kind` is one of `input`, `not`, `and`, `or`, `const0`, `const1`. An
//! `input` gate's single argument is the variable name it reads; all other
//! arguments are gate ids. Ids may be any distinct non-negative integers.
//!
//! An assignment document maps variable names to `0`/`1`:
//! `{"X1": 1, "X2": 0}`.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use super::{Assignment, Circuit, CircuitError, Gate};

#[derive(Serialize, Deserialize)]
struct CircuitDoc {
    inputs: Vec<String>,
    gates: Vec<GateDoc>,
    output: u64,
}

#[derive(Serialize, Deserialize)]
struct GateDoc {
    id: u64,
    kind: String,
    args: Vec<GateArg>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum GateArg {
    Id(u64),
    Name(String),
}

pub fn parse_circuit(text: &str) -> Result<Circuit, CircuitError> {
    let doc: CircuitDoc =
        serde_json::from_str(text).map_err(|e| CircuitError::Format(e.to_string()))?;
    let mut index: HashMap<u64, usize> = HashMap::new();
    for (i, gate) in doc.gates.iter().enumerate() {
        if index.insert(gate.id, i).is_some() {
            return Err(CircuitError::Format(format!(
                "duplicate gate id {}",
                gate.id
            )));
        }
    }
    let resolve = |arg: &GateArg| -> Result<usize, CircuitError> {
        match arg {
            GateArg::Id(id) => index
                .get(id)
                .copied()
                .ok_or(CircuitError::UnknownGate(*id as usize)),
            GateArg::Name(n) => Err(CircuitError::Format(format!(
                "expected a gate id, found name \"{n}\""
            ))),
        }
    };
    let mut gates = Vec::with_capacity(doc.gates.len());
    for gate in &doc.gates {
        let arity_err = || {
            CircuitError::Format(format!(
                "gate {} of kind {} has {} argument(s)",
                gate.id,
                gate.kind,
                gate.args.len()
            ))
        };
        let built = match gate.kind.as_str() {
            "input" => match gate.args.as_slice() {
                [GateArg::Name(name)] => Gate::Input(name.clone()),
                _ => return Err(arity_err()),
            },
            "not" => match gate.args.as_slice() {
                [a] => Gate::Not(resolve(a)?),
                _ => return Err(arity_err()),
            },
            "and" | "or" => match gate.args.as_slice() {
                [a, b] => {
                    let (a, b) = (resolve(a)?, resolve(b)?);
                    if gate.kind == "and" {
                        Gate::And(a, b)
                    } else {
                        Gate::Or(a, b)
                    }
                }
                _ => return Err(arity_err()),
            },
            "const0" | "const1" => {
                if !gate.args.is_empty() {
                    return Err(arity_err());
                }
                Gate::Const(gate.kind == "const1")
            }
            other => {
                return Err(CircuitError::Format(format!(
                    "unknown gate kind \"{other}\""
                )))
            }
        };
        gates.push(built);
    }
    let output = *index
        .get(&doc.output)
        .ok_or(CircuitError::UnknownGate(doc.output as usize))?;
    Circuit::new(gates, output, doc.inputs)
}

pub fn serialize_circuit(circuit: &Circuit) -> String {
    let gates = circuit
        .gates()
        .iter()
        .enumerate()
        .map(|(id, gate)| {
            let (kind, args) = match gate {
                Gate::Input(name) => ("input", vec![GateArg::Name(name.clone())]),
                Gate::Not(a) => ("not", vec![GateArg::Id(*a as u64)]),
                Gate::And(a, b) => ("and", vec![GateArg::Id(*a as u64), GateArg::Id(*b as u64)]),
                Gate::Or(a, b) => ("or", vec![GateArg::Id(*a as u64), GateArg::Id(*b as u64)]),
                Gate::Const(false) => ("const0", Vec::new()),
                Gate::Const(true) => ("const1", Vec::new()),
            };
            GateDoc {
                id: id as u64,
                kind: kind.to_string(),
                args,
            }
        })
        .collect();
    let doc = CircuitDoc {
        inputs: circuit.inputs().to_vec(),
        gates,
        output: circuit.output() as u64,
    };
    serde_json::to_string_pretty(&doc).expect("circuit documents always serialize")
}

pub fn parse_assignment(text: &str) -> Result<Assignment, CircuitError> {
    let doc: BTreeMap<String, u8> =
        serde_json::from_str(text).map_err(|e| CircuitError::Format(e.to_string()))?;
    let mut values = BTreeMap::new();
    for (name, bit) in doc {
        match bit {
            0 => values.insert(name, false),
            1 => values.insert(name, true),
            other => {
                return Err(CircuitError::Format(format!(
                    "assignment value for `{name}` must be 0 or 1, found {other}"
                )))
            }
        };
    }
    Ok(Assignment::new(values))
}

pub fn serialize_assignment(f: &Assignment) -> String {
    let doc: BTreeMap<&String, u8> = f.iter().map(|(k, v)| (k, u8::from(v))).collect();
    serde_json::to_string_pretty(&doc).expect("assignments always serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const OR2: &str = r#"{
        "inputs": ["X1", "X2"],
        "gates": [
            {"id": 10, "kind": "input", "args": ["X1"]},
            {"id": 20, "kind": "input", "args": ["X2"]},
            {"id": 30, "kind": "or", "args": [10, 20]}
        ],
        "output": 30
    }"#;

    #[test]
    fn parses_sparse_ids() {
        let c = parse_circuit(OR2).unwrap();
        assert_eq!(c.inputs(), ["X1".to_string(), "X2".to_string()]);
        let f = parse_assignment(r#"{"X1": 1, "X2": 0}"#).unwrap();
        assert!(c.value(&f).unwrap());
    }

    #[test]
    fn rejects_bad_documents() {
        assert!(matches!(parse_circuit("{"), Err(CircuitError::Format(_))));
        let bad_arity = r#"{"inputs":["X"],"gates":[{"id":0,"kind":"input","args":["X"]},{"id":1,"kind":"and","args":[0]}],"output":1}"#;
        assert!(matches!(
            parse_circuit(bad_arity),
            Err(CircuitError::Format(_))
        ));
        let dangling = r#"{"inputs":["X"],"gates":[{"id":0,"kind":"input","args":["X"]},{"id":1,"kind":"not","args":[7]}],"output":1}"#;
        assert_eq!(parse_circuit(dangling), Err(CircuitError::UnknownGate(7)));
        let cyclic = r#"{"inputs":[],"gates":[{"id":0,"kind":"not","args":[1]},{"id":1,"kind":"not","args":[0]}],"output":0}"#;
        assert_eq!(parse_circuit(cyclic), Err(CircuitError::CyclicCircuit));
        let bad_bit = parse_assignment(r#"{"X": 2}"#);
        assert!(matches!(bad_bit, Err(CircuitError::Format(_))));
    }

    #[test]
    fn rejects_duplicate_variable_labels() {
        let doc = r#"{"inputs":["X"],"gates":[{"id":0,"kind":"input","args":["X"]},{"id":1,"kind":"input","args":["X"]},{"id":2,"kind":"or","args":[0,1]}],"output":2}"#;
        assert_eq!(
            parse_circuit(doc),
            Err(CircuitError::DuplicateInput("X".into()))
        );
    }

    proptest! {
        #[test]
        fn circuit_round_trip(seed in any::<u64>()) {
            let c = crate::sample::random_circuit(seed, 5, 12, true);
            let back = parse_circuit(&serialize_circuit(&c)).unwrap();
            prop_assert_eq!(back, c);
        }

        #[test]
        fn assignment_round_trip(bits in proptest::collection::btree_map("[a-z]{1,4}", any::<bool>(), 0..6)) {
            let f = Assignment::new(bits);
            let back = parse_assignment(&serialize_assignment(&f)).unwrap();
            prop_assert_eq!(back, f);
        }
    }
}
