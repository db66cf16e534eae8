//! Responsibility engines: exhaustive, threshold-bounded, and binary search
//! over an NP-style oracle.

use std::collections::BTreeSet;

use super::{Assignment, BoundedResp, Circuit, CircuitError, GateId, RespResult};
use crate::util::for_each_subset_ascending;

/// Variables eligible for contingency flips, sorted and with `x` removed.
fn candidates(
    circuit: &Circuit,
    x: &str,
    mutable: &BTreeSet<String>,
) -> Result<Vec<String>, CircuitError> {
    for name in mutable {
        if circuit.input_gate(name).is_none() {
            return Err(CircuitError::UnknownVariable(name.clone()));
        }
    }
    if circuit.input_gate(x).is_none() {
        return Err(CircuitError::UnknownVariable(x.to_string()));
    }
    if !mutable.contains(x) {
        return Err(CircuitError::NotMutable(x.to_string()));
    }
    Ok(mutable
        .iter()
        .filter(|n| n.as_str() != x)
        .cloned()
        .collect())
}

/// Searches subsets of `pool` by increasing size (lexicographic within a
/// size, `pool` sorted) for one that keeps `w` at its original value and
/// makes `x` critical for `w`. Returns the first hit.
fn search_witness(
    circuit: &Circuit,
    x: &str,
    w: GateId,
    f: &Assignment,
    pool: &[String],
    max_size: usize,
) -> Result<Option<BTreeSet<String>>, CircuitError> {
    if w >= circuit.gate_count() {
        return Err(CircuitError::UnknownGate(w));
    }
    let base = circuit.evaluate(f)?[w];
    let found = for_each_subset_ascending(pool.len(), max_size, |subset| {
        let names = subset.iter().map(|&i| pool[i].as_str());
        let flipped = f.flip(names).expect("pool names come from the assignment");
        let kept = circuit
            .evaluate(&flipped)
            .expect("assignment domain unchanged by flips")[w];
        if kept != base {
            return None;
        }
        let with_x = flipped.flip([x]).expect("x validated above");
        let toggled = circuit
            .evaluate(&with_x)
            .expect("assignment domain unchanged by flips")[w];
        (toggled != base).then(|| subset.iter().map(|&i| pool[i].clone()).collect())
    });
    Ok(found)
}

/// Exhaustive minimal-witness search for the responsibility of `x` for gate
/// `w` under `f`, flipping only variables in `mutable`. Ties between
/// minimal witnesses resolve to the lexicographically least set.
pub fn resp_brute(
    circuit: &Circuit,
    x: &str,
    w: GateId,
    f: &Assignment,
    mutable: &BTreeSet<String>,
) -> Result<RespResult, CircuitError> {
    let pool = candidates(circuit, x, mutable)?;
    let max = pool.len();
    Ok(match search_witness(circuit, x, w, f, &pool, max)? {
        Some(witness) => RespResult::with_witness(witness),
        None => RespResult::none(),
    })
}

/// True iff some contingency makes `x` critical for `w`; equivalently the
/// degree of responsibility is positive.
pub fn is_cause(
    circuit: &Circuit,
    x: &str,
    w: GateId,
    f: &Assignment,
    mutable: &BTreeSet<String>,
) -> Result<bool, CircuitError> {
    Ok(resp_brute(circuit, x, w, f, mutable)?.is_cause())
}

/// Threshold query: searches witnesses of size at most `k - 1` only. An
/// exact result within the bound is the true minimum; otherwise `dr < 1/k`.
pub fn resp_bounded(
    circuit: &Circuit,
    x: &str,
    f: &Assignment,
    mutable: &BTreeSet<String>,
    k: usize,
) -> Result<BoundedResp, CircuitError> {
    if k == 0 {
        return Err(CircuitError::InvalidThreshold);
    }
    let pool = candidates(circuit, x, mutable)?;
    Ok(
        match search_witness(circuit, x, circuit.output(), f, &pool, k - 1)? {
            Some(witness) => BoundedResp::Exact(RespResult::with_witness(witness)),
            None => BoundedResp::BelowThreshold { threshold: k },
        },
    )
}

/// Membership oracle for `dr(circuit, x, f) >= 1/i`: does a witness of size
/// at most `i - 1` exist over the full input set minus `x`?
pub fn oracle_lc(
    circuit: &Circuit,
    x: &str,
    f: &Assignment,
    i: usize,
) -> Result<bool, CircuitError> {
    if i == 0 {
        return Err(CircuitError::InvalidThreshold);
    }
    let all: BTreeSet<String> = circuit.inputs().iter().cloned().collect();
    let pool = candidates(circuit, x, &all)?;
    Ok(search_witness(circuit, x, circuit.output(), f, &pool, i - 1)?.is_some())
}

/// Binary search on the candidate values `{1, 1/2, ..., 1/n, 0}` using
/// [`oracle_lc`]. Returns the exact result plus the number of oracle calls,
/// which is at most `ceil(log2(n + 1))`.
pub fn resp_binsearch(
    circuit: &Circuit,
    x: &str,
    f: &Assignment,
) -> Result<(RespResult, usize), CircuitError> {
    let n = circuit.inputs().len();
    if circuit.input_gate(x).is_none() {
        return Err(CircuitError::UnknownVariable(x.to_string()));
    }
    // Index n + 1 stands for "no witness at all", i.e. dr = 0.
    let mut lo = 1usize;
    let mut hi = n + 1;
    let mut queries = 0usize;
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        queries += 1;
        if oracle_lc(circuit, x, f, mid)? {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    if lo == n + 1 {
        return Ok((RespResult::none(), queries));
    }
    // dr = 1/lo, so the minimal witness has exactly lo - 1 elements; fetch
    // the lexicographically least one.
    let all: BTreeSet<String> = circuit.inputs().iter().cloned().collect();
    let pool = candidates(circuit, x, &all)?;
    let witness = search_witness(circuit, x, circuit.output(), f, &pool, lo - 1)?
        .expect("oracle certified a witness within the bound");
    Ok((RespResult::with_witness(witness), queries))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::tests::{four_term, or2};
    use crate::circuit::CircuitBuilder;
    use proptest::prelude::*;

    fn all_inputs(c: &Circuit) -> BTreeSet<String> {
        c.inputs().iter().cloned().collect()
    }

    fn wide_or(n: usize) -> Circuit {
        let mut b = CircuitBuilder::new();
        let xs: Vec<_> = (1..=n).map(|i| b.input(&format!("X{i:03}"))).collect();
        let out = b.or_all(&xs);
        b.finish(out)
    }

    #[test]
    fn or2_brute_has_half_responsibility() {
        let c = or2();
        let f = Assignment::constant(["X1", "X2"], true);
        let r = resp_brute(&c, "X1", c.output(), &f, &all_inputs(&c)).unwrap();
        assert_eq!(r.responsibility().to_string(), "1/2");
        assert_eq!(r.witness().unwrap().iter().collect::<Vec<_>>(), ["X2"]);
    }

    #[test]
    fn four_term_brute_under_three_assignments() {
        let c = four_term();
        let m = all_inputs(&c);
        // All-ones: flipping Y alone keeps the output 1 through X&Z and
        // X&U, and with Y down the X flip kills every term, so {Y} is a
        // minimal witness.
        let f1 = Assignment::constant(["X", "Y", "Z", "U"], true);
        let f2 = Assignment::from_pairs([("X", false), ("Y", true), ("Z", true), ("U", true)]);
        let f3 = Assignment::from_pairs([("X", true), ("Y", true), ("Z", false), ("U", false)]);
        let r1 = resp_brute(&c, "X", c.output(), &f1, &m).unwrap();
        assert_eq!(r1.responsibility().to_string(), "1/2");
        assert_eq!(r1.witness().unwrap().iter().collect::<Vec<_>>(), ["Y"]);
        assert!(!resp_brute(&c, "X", c.output(), &f2, &m).unwrap().is_cause());
        assert!(resp_brute(&c, "X", c.output(), &f3, &m)
            .unwrap()
            .is_critical());
    }

    #[test]
    fn ten_way_disjunction_brute() {
        let c = wide_or(10);
        let f = Assignment::constant(c.inputs().iter().map(|s| s.as_str()), true);
        let r = resp_brute(&c, "X001", c.output(), &f, &all_inputs(&c)).unwrap();
        assert_eq!(r.witness_size(), Some(9));
        assert_eq!(r.responsibility().to_string(), "1/10");
    }

    #[test]
    fn cause_examples() {
        let c = or2();
        let f = Assignment::constant(["X1", "X2"], true);
        assert!(is_cause(&c, "X1", c.output(), &f, &all_inputs(&c)).unwrap());

        let c = four_term();
        let f2 = Assignment::from_pairs([("X", false), ("Y", true), ("Z", true), ("U", true)]);
        assert!(!is_cause(&c, "X", c.output(), &f2, &all_inputs(&c)).unwrap());

        let mut b = CircuitBuilder::new();
        let x1 = b.input("X1");
        let x2 = b.input("X2");
        let out = b.and(x1, x2);
        let c = b.finish(out);
        let f = Assignment::constant(["X1", "X2"], true);
        assert!(is_cause(&c, "X1", c.output(), &f, &all_inputs(&c)).unwrap());
    }

    #[test]
    fn mutable_set_restricts_contingencies() {
        // With only X1 mutable, no contingency can disarm X2, so X1 has no
        // responsibility in the all-ones disjunction.
        let c = or2();
        let f = Assignment::constant(["X1", "X2"], true);
        let only_x1: BTreeSet<String> = [String::from("X1")].into();
        assert!(!resp_brute(&c, "X1", c.output(), &f, &only_x1)
            .unwrap()
            .is_cause());
        assert_eq!(
            resp_brute(&c, "X2", c.output(), &f, &only_x1),
            Err(CircuitError::NotMutable("X2".into()))
        );
    }

    #[test]
    fn bounded_finds_witness_within_threshold() {
        let c = or2();
        let f = Assignment::constant(["X1", "X2"], true);
        let r = resp_bounded(&c, "X1", &f, &all_inputs(&c), 2).unwrap();
        assert_eq!(r.as_exact().unwrap().responsibility().to_string(), "1/2");
    }

    #[test]
    fn bounded_reports_below_threshold_on_wide_or() {
        let c = wide_or(100);
        let f = Assignment::constant(c.inputs().iter().map(|s| s.as_str()), true);
        let r = resp_bounded(&c, "X001", &f, &all_inputs(&c), 3).unwrap();
        assert_eq!(r, BoundedResp::BelowThreshold { threshold: 3 });
        assert_eq!(r.to_string(), "dr < 1/3");
    }

    #[test]
    fn bounded_k1_is_a_criticality_check() {
        let mut b = CircuitBuilder::new();
        let x = b.input("X1");
        let c = b.finish(x);
        for bit in [false, true] {
            let f = Assignment::from_pairs([("X1", bit)]);
            let r = resp_bounded(&c, "X1", &f, &all_inputs(&c), 1).unwrap();
            assert!(r.as_exact().unwrap().is_critical());
        }
        let f = Assignment::from_pairs([("X1", true)]);
        assert_eq!(
            resp_bounded(&c, "X1", &f, &all_inputs(&c), 0),
            Err(CircuitError::InvalidThreshold)
        );
    }

    #[test]
    fn oracle_thresholds_on_or2() {
        let c = or2();
        let f = Assignment::constant(["X1", "X2"], true);
        assert!(oracle_lc(&c, "X1", &f, 2).unwrap());
        assert!(!oracle_lc(&c, "X1", &f, 1).unwrap());
    }

    #[test]
    fn oracle_is_false_for_non_causes() {
        let c = four_term();
        let f2 = Assignment::from_pairs([("X", false), ("Y", true), ("Z", true), ("U", true)]);
        for i in 1..=4 {
            assert!(!oracle_lc(&c, "X", &f2, i).unwrap());
        }
    }

    #[test]
    fn binsearch_on_eight_way_disjunction() {
        let c = wide_or(8);
        let f = Assignment::constant(c.inputs().iter().map(|s| s.as_str()), true);
        let (r, queries) = resp_binsearch(&c, "X001", &f).unwrap();
        assert_eq!(r.responsibility().to_string(), "1/8");
        assert!(queries <= 5, "used {queries} oracle queries");
    }

    #[test]
    fn binsearch_single_input() {
        let mut b = CircuitBuilder::new();
        let x = b.input("X1");
        let c = b.finish(x);
        let f = Assignment::from_pairs([("X1", true)]);
        let (r, queries) = resp_binsearch(&c, "X1", &f).unwrap();
        assert!(r.is_critical());
        assert_eq!(queries, 1);
    }

    // Responsibility does not depend on how a disjunction is associated.
    #[test]
    fn reassociated_disjunctions_agree() {
        let left = {
            let mut b = CircuitBuilder::new();
            let x1 = b.input("X1");
            let x2 = b.input("X2");
            let x3 = b.input("X3");
            let inner = b.or(x1, x2);
            let out = b.or(inner, x3);
            b.finish(out)
        };
        let right = {
            let mut b = CircuitBuilder::new();
            let x1 = b.input("X1");
            let x2 = b.input("X2");
            let x3 = b.input("X3");
            let inner = b.or(x2, x3);
            let out = b.or(x1, inner);
            b.finish(out)
        };
        let m = all_inputs(&left);
        for mask in 0u8..8 {
            let f = Assignment::from_pairs(
                ["X1", "X2", "X3"]
                    .iter()
                    .enumerate()
                    .map(|(i, n)| (*n, mask & (1 << i) != 0)),
            );
            for x in ["X1", "X2", "X3"] {
                let a = resp_brute(&left, x, left.output(), &f, &m).unwrap();
                let b = resp_brute(&right, x, right.output(), &f, &m).unwrap();
                assert_eq!(
                    a.responsibility(),
                    b.responsibility(),
                    "variable {x} under mask {mask:03b}"
                );
            }
        }
    }

    proptest! {
        // A variable is critical exactly when its responsibility is 1.
        #[test]
        fn criticality_means_full_responsibility(seed in any::<u64>()) {
            let c = crate::sample::random_circuit(seed, 5, 10, true);
            let f = crate::sample::random_assignment(seed ^ 0xfafa, c.inputs());
            let all: BTreeSet<String> = c.inputs().iter().cloned().collect();
            for x in c.inputs() {
                let critical = c.is_critical(x, c.output(), &f).unwrap();
                let r = resp_brute(&c, x, c.output(), &f, &all).unwrap();
                prop_assert_eq!(critical, r.is_critical(), "variable {}", x);
            }
        }

        // Cross-engine property: binary search agrees with brute force, and
        // the oracle-call bound holds.
        #[test]
        fn binsearch_matches_brute(seed in any::<u64>()) {
            let c = crate::sample::random_circuit(seed, 6, 14, true);
            let f = crate::sample::random_assignment(seed ^ 0xabcd, c.inputs());
            let x = c.inputs()[0].clone();
            let all: BTreeSet<String> = c.inputs().iter().cloned().collect();
            let brute = resp_brute(&c, &x, c.output(), &f, &all).unwrap();
            let (bin, queries) = resp_binsearch(&c, &x, &f).unwrap();
            prop_assert_eq!(brute.responsibility(), bin.responsibility());
            let n = c.inputs().len();
            prop_assert!(queries <= ((n + 1) as f64).log2().ceil() as usize + 1);
        }

        // Witnesses really are witnesses: the flip preserves the output and
        // the extra flip of x toggles it.
        #[test]
        fn witnesses_certify_criticality(seed in any::<u64>()) {
            let c = crate::sample::random_circuit(seed, 5, 12, true);
            let f = crate::sample::random_assignment(seed ^ 0x1234, c.inputs());
            let x = c.inputs()[0].clone();
            let all: BTreeSet<String> = c.inputs().iter().cloned().collect();
            let r = resp_brute(&c, &x, c.output(), &f, &all).unwrap();
            if let Some(witness) = r.witness() {
                let names: Vec<&str> = witness.iter().map(|s| s.as_str()).collect();
                let g = f.flip(names).unwrap();
                prop_assert_eq!(c.value(&g).unwrap(), c.value(&f).unwrap());
                let gx = g.flip([x.as_str()]).unwrap();
                prop_assert_ne!(c.value(&gx).unwrap(), c.value(&f).unwrap());
            }
        }
    }
}
