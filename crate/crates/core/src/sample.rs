//! Deterministic, seeded generators for structures, formulas, and circuits.
//!
//! These back the property suites and the CLI's graph generator: the same
//! seed always produces the same object, independent of platform.

use std::collections::{BTreeMap, BTreeSet};

use crate::circuit::{Assignment, Circuit, CircuitBuilder, GateId};
use crate::ctl::CtlFormula;
use crate::kripke::KripkeStructure;

/// SplitMix64: tiny, fast, and stable across platforms.
#[derive(Debug, Clone)]
pub struct Rng {
    state: u64,
}

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform value in `0..n`; `n` must be positive.
    pub fn below(&mut self, n: usize) -> usize {
        (self.next_u64() % n as u64) as usize
    }

    pub fn bool(&mut self) -> bool {
        self.next_u64() & 1 == 1
    }

    /// True with probability `p`.
    pub fn chance(&mut self, p: f64) -> bool {
        let uniform = (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64;
        uniform < p
    }
}

/// A random assignment over the given variable names.
pub fn random_assignment(seed: u64, names: &[String]) -> Assignment {
    let mut rng = Rng::new(seed);
    let values: BTreeMap<String, bool> = names.iter().map(|n| (n.clone(), rng.bool())).collect();
    Assignment::new(values)
}

/// A random acyclic circuit with `n_inputs` inputs and roughly `n_gates`
/// internal gates, all feeding one output. `allow_not` controls negations.
pub fn random_circuit(seed: u64, n_inputs: usize, n_gates: usize, allow_not: bool) -> Circuit {
    let mut rng = Rng::new(seed);
    let n_inputs = n_inputs.max(1);
    let mut b = CircuitBuilder::new();
    let mut pool: Vec<GateId> = (0..n_inputs).map(|i| b.input(&format!("v{i}"))).collect();
    for _ in 0..n_gates {
        let a = pool[rng.below(pool.len())];
        let c = pool[rng.below(pool.len())];
        let g = match rng.below(if allow_not { 3 } else { 2 }) {
            0 => b.and(a, c),
            1 => b.or(a, c),
            _ => b.not(a),
        };
        pool.push(g);
    }
    // Join everything so every input reaches the output.
    let mut acc = pool[pool.len() - 1];
    for &g in pool.iter().take(n_inputs) {
        let lit = if allow_not && rng.bool() { b.not(g) } else { g };
        acc = if rng.bool() {
            b.or(acc, lit)
        } else {
            b.and(acc, lit)
        };
    }
    b.finish(acc)
}

/// A random monotone circuit (no negations).
pub fn random_monotone_circuit(seed: u64, n_inputs: usize, n_gates: usize) -> Circuit {
    random_circuit(seed, n_inputs, n_gates, false)
}

/// A random literal tree: binary and/or gates inside, each of the `leaves`
/// variables in exactly one leaf, possibly negated.
pub fn random_literal_tree(seed: u64, leaves: usize) -> Circuit {
    let mut rng = Rng::new(seed);
    let leaves = leaves.max(1);
    let mut b = CircuitBuilder::new();
    let mut nodes: Vec<GateId> = (0..leaves)
        .map(|i| {
            let g = b.input(&format!("x{i:02}"));
            if rng.chance(0.25) {
                b.not(g)
            } else {
                g
            }
        })
        .collect();
    while nodes.len() > 1 {
        let a = nodes.swap_remove(rng.below(nodes.len()));
        let c = nodes.swap_remove(rng.below(nodes.len()));
        let g = if rng.bool() { b.and(a, c) } else { b.or(a, c) };
        nodes.push(g);
    }
    b.finish(nodes[0])
}

/// A random Kripke structure with a total transition relation: `1..=max_states`
/// states, each labeled with a random subset of `atoms`.
pub fn random_kripke(seed: u64, max_states: usize, atoms: &[&str]) -> KripkeStructure {
    let mut rng = Rng::new(seed);
    let n = 1 + rng.below(max_states.max(1));
    let ids: Vec<String> = (0..n).map(|i| format!("s{i}")).collect();
    let mut labels = BTreeMap::new();
    let mut transitions = BTreeSet::new();
    for id in &ids {
        let ls: BTreeSet<String> = atoms
            .iter()
            .filter(|_| rng.bool())
            .map(|a| a.to_string())
            .collect();
        labels.insert(id.clone(), ls);
        // At least one successor to keep the relation total.
        transitions.insert((id.clone(), ids[rng.below(n)].clone()));
        for target in &ids {
            if rng.chance(0.3) {
                transitions.insert((id.clone(), target.clone()));
            }
        }
    }
    KripkeStructure::new(
        atoms.iter().map(|a| a.to_string()).collect(),
        labels,
        ids[0].clone(),
        transitions,
    )
    .expect("generated structures are valid")
}

/// A random CTL formula in positive normal form with operator nesting at
/// most `depth`.
pub fn random_pnf(rng: &mut Rng, depth: usize, atoms: &[&str]) -> CtlFormula {
    let literal = |rng: &mut Rng| {
        let atom = CtlFormula::atom(atoms[rng.below(atoms.len())]);
        if rng.chance(0.3) {
            CtlFormula::not(atom)
        } else {
            atom
        }
    };
    if depth == 0 || rng.chance(0.2) {
        return match rng.below(8) {
            0 => CtlFormula::True,
            1 => CtlFormula::False,
            _ => literal(rng),
        };
    }
    let sub = |rng: &mut Rng| random_pnf(rng, depth - 1, atoms);
    match rng.below(8) {
        0 => CtlFormula::and(sub(rng), sub(rng)),
        1 => CtlFormula::or(sub(rng), sub(rng)),
        2 => CtlFormula::ex(sub(rng)),
        3 => CtlFormula::ax(sub(rng)),
        4 => CtlFormula::eu(sub(rng), sub(rng)),
        5 => CtlFormula::au(sub(rng), sub(rng)),
        6 => CtlFormula::er(sub(rng), sub(rng)),
        _ => CtlFormula::ar(sub(rng), sub(rng)),
    }
}

/// A random CTL formula over the full connective set, including negation,
/// implication, and the F/G abbreviations.
pub fn random_formula(rng: &mut Rng, depth: usize, atoms: &[&str]) -> CtlFormula {
    if depth == 0 || rng.chance(0.15) {
        return match rng.below(6) {
            0 => CtlFormula::True,
            1 => CtlFormula::False,
            _ => CtlFormula::atom(atoms[rng.below(atoms.len())]),
        };
    }
    let sub = |rng: &mut Rng| random_formula(rng, depth - 1, atoms);
    match rng.below(15) {
        0 => CtlFormula::not(sub(rng)),
        1 => CtlFormula::and(sub(rng), sub(rng)),
        2 => CtlFormula::or(sub(rng), sub(rng)),
        3 => CtlFormula::implies(sub(rng), sub(rng)),
        4 => CtlFormula::ex(sub(rng)),
        5 => CtlFormula::ax(sub(rng)),
        6 => CtlFormula::ef(sub(rng)),
        7 => CtlFormula::af(sub(rng)),
        8 => CtlFormula::eg(sub(rng)),
        9 => CtlFormula::ag(sub(rng)),
        10 => CtlFormula::eu(sub(rng), sub(rng)),
        11 => CtlFormula::au(sub(rng), sub(rng)),
        12 => CtlFormula::er(sub(rng), sub(rng)),
        _ => CtlFormula::ar(sub(rng), sub(rng)),
    }
}
