//! Linear-time responsibility for read-once trees.
//!
//! A literal tree has binary `and`/`or` gates inside, leaves that are
//! variables or negated variables, and every variable in exactly one leaf.
//! Inside such a tree every gate is monotone in the queried literal, so for
//! each node a single pass suffices to compute
//!
//! - `cost`: the fewest leaf flips that toggle the node's value, and
//! - `size`: the fewest flips of *other* variables after which flipping `x`
//!   toggles the node's value.
//!
//! At an `and` node the subtree not containing `x` must be forced to 1 for
//! criticality to pass through (to 0 at an `or` node), which prices the step
//! at the sibling's forcing cost. At the root, flipping `x` can only move the
//! output toward the literal's own value, so the result is a witness of size
//! `size(root)` when the root currently carries the literal's value under
//! `f`, and no witness at all otherwise.

use std::collections::BTreeSet;

use super::{Assignment, Circuit, CircuitError, Gate, GateId, RespResult};

pub fn resp_readonce(tree: &Circuit, x: &str, f: &Assignment) -> Result<RespResult, CircuitError> {
    if tree.input_gate(x).is_none() {
        return Err(CircuitError::UnknownVariable(x.to_string()));
    }
    // Only the part reachable from the output is the tree; a parsed circuit
    // may carry disconnected gates, which must not influence the pass.
    let reachable = validate_literal_tree(tree)?;
    let values = tree.evaluate(f)?;

    let n = tree.gate_count();
    let mut cost = vec![0usize; n];
    let mut size: Vec<Option<usize>> = vec![None; n];

    for &id in &tree.topo {
        if !reachable[id] {
            continue;
        }
        match &tree.gates[id] {
            Gate::Input(name) => {
                cost[id] = 1;
                size[id] = (name == x).then_some(0);
            }
            Gate::Not(a) => {
                cost[id] = 1;
                size[id] = size[*a];
            }
            Gate::And(a, b) | Gate::Or(a, b) => {
                let (a, b) = (*a, *b);
                let is_and = matches!(tree.gates[id], Gate::And(..));
                // Forcing target for the sibling of the x-carrying child.
                let target = is_and;
                cost[id] = if values[id] == target {
                    // Toggle by flipping any one child that currently agrees.
                    let mut best = usize::MAX;
                    for y in [a, b] {
                        if values[y] == values[id] {
                            best = best.min(cost[y]);
                        }
                    }
                    best
                } else {
                    // Every child on the dominating side must be toggled.
                    [a, b]
                        .iter()
                        .filter(|&&y| values[y] == values[id])
                        .map(|&y| cost[y])
                        .sum()
                };
                size[id] = match (size[a], size[b]) {
                    (None, None) => None,
                    (Some(s), None) => Some(s + force_cost(values[b], target, cost[b])),
                    (None, Some(s)) => Some(s + force_cost(values[a], target, cost[a])),
                    (Some(_), Some(_)) => unreachable!("x occurs in one leaf only"),
                };
            }
            Gate::Const(_) => unreachable!("constants rejected by validation"),
        }
    }

    let root = tree.output();
    let Some(k) = size[root] else {
        return Ok(RespResult::none());
    };
    if values[root] != literal_value(tree, x, &values, &reachable) {
        // Flipping x can only push the root toward the literal's value, so a
        // value-preserving contingency cannot exist.
        return Ok(RespResult::none());
    }
    let mut witness = BTreeSet::new();
    collect_witness(tree, &values, &cost, &size, root, &mut witness);
    debug_assert_eq!(witness.len(), k);
    Ok(RespResult::with_witness(witness))
}

/// Extra flips needed to hold a sibling subtree at `target`.
fn force_cost(value: bool, target: bool, cost: usize) -> usize {
    if value == target {
        0
    } else {
        cost
    }
}

/// Value of the literal leaf reading `x` (negated leaves report the negated
/// bit).
fn literal_value(tree: &Circuit, x: &str, values: &[bool], reachable: &[bool]) -> bool {
    let leaf = tree.input_gate(x).expect("checked by caller");
    for (id, gate) in tree.gates.iter().enumerate() {
        if !reachable[id] {
            continue;
        }
        if let Gate::Not(a) = gate {
            if *a == leaf {
                return values[id];
            }
        }
    }
    values[leaf]
}

fn validate_literal_tree(tree: &Circuit) -> Result<Vec<bool>, CircuitError> {
    let n = tree.gate_count();
    let mut refs = vec![0usize; n];
    let mut reachable = vec![false; n];
    let mut stack = vec![tree.output()];
    while let Some(id) = stack.pop() {
        if reachable[id] {
            continue;
        }
        reachable[id] = true;
        match &tree.gates[id] {
            Gate::Input(_) => {}
            Gate::Const(_) => return Err(CircuitError::ConstantInReadOnce),
            Gate::Not(a) => {
                if !matches!(tree.gates[*a], Gate::Input(_)) {
                    return Err(CircuitError::NonLiteralNegation);
                }
                refs[*a] += 1;
                stack.push(*a);
            }
            Gate::And(a, b) | Gate::Or(a, b) => {
                refs[*a] += 1;
                refs[*b] += 1;
                stack.push(*a);
                stack.push(*b);
            }
        }
    }
    for (id, count) in refs.iter().enumerate() {
        if *count > 1 {
            return Err(match &tree.gates[id] {
                Gate::Input(name) => CircuitError::RepeatedVariable(name.clone()),
                _ => CircuitError::NotATree,
            });
        }
    }
    for name in tree.inputs() {
        if !reachable[tree.input_gate(name).unwrap()] {
            return Err(CircuitError::VariableNotInTree(name.clone()));
        }
    }
    Ok(reachable)
}

/// Walks back down the x-path, collecting the sibling-forcing flips chosen by
/// the pass above. Ties between equally cheap toggles resolve to the first
/// child, so the witness is deterministic.
fn collect_witness(
    tree: &Circuit,
    values: &[bool],
    cost: &[usize],
    size: &[Option<usize>],
    id: GateId,
    out: &mut BTreeSet<String>,
) {
    match &tree.gates[id] {
        Gate::Input(_) | Gate::Not(_) => {}
        Gate::And(a, b) | Gate::Or(a, b) => {
            let (a, b) = (*a, *b);
            let target = matches!(tree.gates[id], Gate::And(..));
            let (on_path, sibling) = if size[a].is_some() { (a, b) } else { (b, a) };
            if values[sibling] != target {
                collect_toggle(tree, values, cost, sibling, out);
            }
            collect_witness(tree, values, cost, size, on_path, out);
        }
        Gate::Const(_) => unreachable!(),
    }
}

/// Collects a minimal set of leaf flips that toggles `id`.
fn collect_toggle(
    tree: &Circuit,
    values: &[bool],
    cost: &[usize],
    id: GateId,
    out: &mut BTreeSet<String>,
) {
    match &tree.gates[id] {
        Gate::Input(name) => {
            out.insert(name.clone());
        }
        Gate::Not(a) => {
            if let Gate::Input(name) = &tree.gates[*a] {
                out.insert(name.clone());
            }
        }
        Gate::And(a, b) | Gate::Or(a, b) => {
            let (a, b) = (*a, *b);
            // An `and` that is true (or an `or` that is false) toggles by
            // flipping one child; otherwise every agreeing child must flip.
            let single = values[id] == matches!(tree.gates[id], Gate::And(..));
            if single {
                let pick = if cost[a] <= cost[b] { a } else { b };
                collect_toggle(tree, values, cost, pick, out);
            } else {
                for y in [a, b] {
                    if values[y] == values[id] {
                        collect_toggle(tree, values, cost, y, out);
                    }
                }
            }
        }
        Gate::Const(_) => unreachable!(),
    }
}
