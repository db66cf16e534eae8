//! Kripke structures: finite labeled transition systems with an initial
//! state and a total transition relation, plus the label-flip mutation that
//! coverage analysis is built on.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StructureError {
    #[error("duplicate state id `{0}`")]
    DuplicateState(String),
    #[error("initial state `{0}` is not a declared state")]
    UnknownInitial(String),
    #[error("transition endpoint `{0}` is not a declared state")]
    DanglingTransition(String),
    #[error("state `{0}` has no successor; the transition relation must be total")]
    NonTotal(String),
    #[error("state `{state}` is labeled with `{prop}`, which is not a declared atom")]
    UnknownProposition { state: String, prop: String },
    #[error("unknown state `{0}`")]
    UnknownState(String),
    #[error("unknown atomic proposition `{0}`")]
    UnknownAtom(String),
    #[error("atom `{0}` is already declared")]
    AtomExists(String),
    #[error("malformed structure document: {0}")]
    Format(String),
}

/// A finite labeled state-transition graph. States are identified by name;
/// every state has at least one successor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KripkeStructure {
    atoms: BTreeSet<String>,
    labels: BTreeMap<String, BTreeSet<String>>,
    initial: String,
    successors: BTreeMap<String, BTreeSet<String>>,
}

impl KripkeStructure {
    pub fn new(
        atoms: BTreeSet<String>,
        labels: BTreeMap<String, BTreeSet<String>>,
        initial: String,
        transitions: BTreeSet<(String, String)>,
    ) -> Result<Self, StructureError> {
        if !labels.contains_key(&initial) {
            return Err(StructureError::UnknownInitial(initial));
        }
        for (state, props) in &labels {
            for p in props {
                if !atoms.contains(p) {
                    return Err(StructureError::UnknownProposition {
                        state: state.clone(),
                        prop: p.clone(),
                    });
                }
            }
        }
        let mut successors: BTreeMap<String, BTreeSet<String>> = labels
            .keys()
            .map(|s| (s.clone(), BTreeSet::new()))
            .collect();
        for (from, to) in transitions {
            if !labels.contains_key(&from) {
                return Err(StructureError::DanglingTransition(from));
            }
            if !labels.contains_key(&to) {
                return Err(StructureError::DanglingTransition(to));
            }
            successors.get_mut(&from).unwrap().insert(to);
        }
        for (state, succ) in &successors {
            if succ.is_empty() {
                return Err(StructureError::NonTotal(state.clone()));
            }
        }
        Ok(KripkeStructure {
            atoms,
            labels,
            initial,
            successors,
        })
    }

    pub fn atoms(&self) -> &BTreeSet<String> {
        &self.atoms
    }

    /// State ids in sorted order.
    pub fn states(&self) -> impl Iterator<Item = &String> {
        self.labels.keys()
    }

    pub fn state_count(&self) -> usize {
        self.labels.len()
    }

    pub fn initial(&self) -> &str {
        &self.initial
    }

    pub fn has_state(&self, id: &str) -> bool {
        self.labels.contains_key(id)
    }

    pub fn labels(&self, state: &str) -> Option<&BTreeSet<String>> {
        self.labels.get(state)
    }

    pub fn holds(&self, state: &str, atom: &str) -> bool {
        self.labels
            .get(state)
            .is_some_and(|props| props.contains(atom))
    }

    pub fn successors(&self, state: &str) -> Option<&BTreeSet<String>> {
        self.successors.get(state)
    }

    pub fn transitions(&self) -> impl Iterator<Item = (&String, &String)> {
        self.successors
            .iter()
            .flat_map(|(from, tos)| tos.iter().map(move |to| (from, to)))
    }

    /// The structure obtained by flipping proposition `q` at every state in
    /// `flips`. States, transitions, and the initial state are untouched;
    /// applying the same mutation twice restores the original.
    pub fn mutate<'a>(
        &self,
        flips: impl IntoIterator<Item = &'a str>,
        q: &str,
    ) -> Result<KripkeStructure, StructureError> {
        if !self.atoms.contains(q) {
            return Err(StructureError::UnknownAtom(q.to_string()));
        }
        let mut out = self.clone();
        for state in flips {
            let props = out
                .labels
                .get_mut(state)
                .ok_or_else(|| StructureError::UnknownState(state.to_string()))?;
            if !props.remove(q) {
                props.insert(q.to_string());
            }
        }
        Ok(out)
    }

    /// Extends the structure with a fresh atom labeled exactly like `like`.
    pub fn with_copied_atom(
        &self,
        fresh: &str,
        like: &str,
    ) -> Result<KripkeStructure, StructureError> {
        if self.atoms.contains(fresh) {
            return Err(StructureError::AtomExists(fresh.to_string()));
        }
        if !self.atoms.contains(like) {
            return Err(StructureError::UnknownAtom(like.to_string()));
        }
        let mut out = self.clone();
        out.atoms.insert(fresh.to_string());
        for props in out.labels.values_mut() {
            if props.contains(like) {
                props.insert(fresh.to_string());
            }
        }
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
struct StructureDoc {
    atoms: Vec<String>,
    states: Vec<StateDoc>,
    initial: String,
    transitions: Vec<(String, String)>,
}

#[derive(Serialize, Deserialize)]
struct StateDoc {
    id: String,
    labels: Vec<String>,
}

/// Parses the JSON structure document described in the repo's format notes.
pub fn parse_structure(text: &str) -> Result<KripkeStructure, StructureError> {
    let doc: StructureDoc =
        serde_json::from_str(text).map_err(|e| StructureError::Format(e.to_string()))?;
    let mut labels: BTreeMap<String, BTreeSet<String>> = BTreeMap::new();
    for state in doc.states {
        if labels
            .insert(state.id.clone(), state.labels.into_iter().collect())
            .is_some()
        {
            return Err(StructureError::DuplicateState(state.id));
        }
    }
    KripkeStructure::new(
        doc.atoms.into_iter().collect(),
        labels,
        doc.initial,
        doc.transitions.into_iter().collect(),
    )
}

/// Canonical serialization: states and transitions in sorted order, so
/// `parse(serialize(k)) == k` and equal structures print identically.
pub fn serialize_structure(k: &KripkeStructure) -> String {
    let doc = StructureDoc {
        atoms: k.atoms.iter().cloned().collect(),
        states: k
            .labels
            .iter()
            .map(|(id, props)| StateDoc {
                id: id.clone(),
                labels: props.iter().cloned().collect(),
            })
            .collect(),
        initial: k.initial.clone(),
        transitions: k
            .transitions()
            .map(|(a, b)| (a.clone(), b.clone()))
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("structure documents always serialize")
}
