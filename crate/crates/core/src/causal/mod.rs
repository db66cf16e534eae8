//! Binary recursive causal models: structural equations over Boolean
//! variables, contexts, interventions, actual causes, and responsibility.
//!
//! A model assigns each variable an equation over the other variables and a
//! set of exogenous inputs; the dependency graph must be acyclic, so every
//! context determines a unique solution. `X = x` is an actual cause of an
//! event formula when, under some setting of a witness set `W` of other
//! variables, flipping `X` falsifies the formula while the setting alone
//! does not. Responsibility is `1/(|W|+1)` for the smallest witness.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

mod expr;

pub use expr::{parse_event_formula, parse_expr, BoolExpr, EventFormula, ExprError};

use crate::circuit::RespResult;
use crate::util::for_each_subset_ascending;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CausalError {
    #[error("the dependency graph has a cycle through `{0}`")]
    CyclicModel(String),
    #[error("equation for `{var}` mentions `{name}`, which is neither a variable nor an exogenous input")]
    UnknownName { var: String, name: String },
    #[error("`{0}` is declared both as a variable and as an exogenous input")]
    NameClash(String),
    #[error("context is missing exogenous input `{0}`")]
    IncompleteContext(String),
    #[error("context mentions `{0}`, which is not a declared exogenous input")]
    UnknownExogenous(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("formula mentions `{0}`, which is not a model variable")]
    FormulaUnknownVariable(String),
    #[error(transparent)]
    Expr(#[from] ExprError),
    #[error("malformed model document: {0}")]
    Format(String),
}

/// A binary recursive causal model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryCausalModel {
    exogenous: BTreeSet<String>,
    equations: BTreeMap<String, BoolExpr>,
    /// Variables in dependency order.
    topo: Vec<String>,
}

/// A total setting of the exogenous inputs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Context {
    values: BTreeMap<String, bool>,
}

impl Context {
    pub fn new(values: BTreeMap<String, bool>) -> Self {
        Context { values }
    }

    pub fn from_pairs<'a>(pairs: impl IntoIterator<Item = (&'a str, bool)>) -> Self {
        Context {
            values: pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
        }
    }

    pub fn get(&self, name: &str) -> Option<bool> {
        self.values.get(name).copied()
    }
}

impl BinaryCausalModel {
    pub fn new(
        exogenous: BTreeSet<String>,
        equations: BTreeMap<String, BoolExpr>,
    ) -> Result<Self, CausalError> {
        for name in equations.keys() {
            if exogenous.contains(name) {
                return Err(CausalError::NameClash(name.clone()));
            }
        }
        for (var, eq) in &equations {
            for name in eq.mentions() {
                if name == *var {
                    return Err(CausalError::CyclicModel(var.clone()));
                }
                if !equations.contains_key(&name) && !exogenous.contains(&name) {
                    return Err(CausalError::UnknownName {
                        var: var.clone(),
                        name,
                    });
                }
            }
        }
        let topo = dependency_order(&equations)?;
        Ok(BinaryCausalModel {
            exogenous,
            equations,
            topo,
        })
    }

    pub fn variables(&self) -> impl Iterator<Item = &String> {
        self.equations.keys()
    }

    pub fn exogenous(&self) -> &BTreeSet<String> {
        &self.exogenous
    }

    pub fn has_variable(&self, name: &str) -> bool {
        self.equations.contains_key(name)
    }

    fn check_context(&self, u: &Context) -> Result<(), CausalError> {
        for name in &self.exogenous {
            if u.get(name).is_none() {
                return Err(CausalError::IncompleteContext(name.clone()));
            }
        }
        for name in u.values.keys() {
            if !self.exogenous.contains(name) {
                return Err(CausalError::UnknownExogenous(name.clone()));
            }
        }
        Ok(())
    }

    /// The unique solution of the equations in context `u`, with the
    /// variables in `interventions` clamped to the given bits.
    pub fn solve(
        &self,
        u: &Context,
        interventions: &BTreeMap<String, bool>,
    ) -> Result<BTreeMap<String, bool>, CausalError> {
        self.check_context(u)?;
        for name in interventions.keys() {
            if !self.equations.contains_key(name) {
                return Err(CausalError::UnknownVariable(name.clone()));
            }
        }
        let mut values: BTreeMap<String, bool> = BTreeMap::new();
        for var in &self.topo {
            let value = match interventions.get(var) {
                Some(&clamped) => clamped,
                None => {
                    let lookup = |name: &str| values.get(name).copied().or_else(|| u.get(name));
                    self.equations[var]
                        .eval(&lookup)
                        .expect("all names validated at construction")
                }
            };
            values.insert(var.clone(), value);
        }
        Ok(values)
    }

    fn check_formula(&self, phi: &EventFormula) -> Result<(), CausalError> {
        for name in phi.mentions() {
            if !self.equations.contains_key(&name) {
                return Err(CausalError::FormulaUnknownVariable(name));
            }
        }
        Ok(())
    }

    fn holds(&self, values: &BTreeMap<String, bool>, phi: &EventFormula) -> bool {
        phi.eval(&|name: &str| values.get(name).copied())
            .expect("formula variables validated")
    }
}

fn dependency_order(equations: &BTreeMap<String, BoolExpr>) -> Result<Vec<String>, CausalError> {
    let mut order = Vec::with_capacity(equations.len());
    let mut state: BTreeMap<&String, u8> = BTreeMap::new(); // 0 new, 1 visiting, 2 done
    fn visit<'a>(
        var: &'a String,
        equations: &'a BTreeMap<String, BoolExpr>,
        state: &mut BTreeMap<&'a String, u8>,
        order: &mut Vec<String>,
    ) -> Result<(), CausalError> {
        match state.get(var) {
            Some(2) => return Ok(()),
            Some(1) => return Err(CausalError::CyclicModel(var.clone())),
            _ => {}
        }
        state.insert(var, 1);
        for dep in equations[var].mentions() {
            if let Some((key, _)) = equations.get_key_value(&dep) {
                visit(key, equations, state, order)?;
            }
        }
        state.insert(var, 2);
        order.push(var.clone());
        Ok(())
    }
    for var in equations.keys() {
        visit(var, equations, &mut state, &mut order)?;
    }
    Ok(order)
}

/// Which reading of the witness condition to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    /// The plain two-condition definition: the setting of `W` alone must
    /// leave the formula true.
    Def2,
    /// Additionally clamps the remaining variables (except those the
    /// formula mentions) to their original solved values in the second
    /// condition.
    Ac2Prime,
}

/// Outcome of a cause query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CauseOutcome {
    Cause {
        witness: BTreeSet<String>,
        setting: BTreeMap<String, bool>,
    },
    NotACause,
    /// The first condition failed: either `X` does not have the claimed
    /// value, or the formula does not hold in the actual world.
    Ac1Violated {
        reason: String,
    },
}

impl CauseOutcome {
    pub fn is_cause(&self) -> bool {
        matches!(self, CauseOutcome::Cause { .. })
    }
}

/// Outcome of a responsibility query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RespOutcome {
    Exact(RespResult),
    Ac1Violated { reason: String },
}

impl RespOutcome {
    pub fn as_exact(&self) -> Option<&RespResult> {
        match self {
            RespOutcome::Exact(r) => Some(r),
            RespOutcome::Ac1Violated { .. } => None,
        }
    }
}

/// Is `x_var = x_val` an actual cause of `phi` in `(model, u)`? Searches
/// witness sets by increasing size (lexicographic within a size) and
/// settings in binary counting order over the sorted witness variables;
/// returns the first witness found.
pub fn is_cause(
    model: &BinaryCausalModel,
    u: &Context,
    x_var: &str,
    x_val: bool,
    phi: &EventFormula,
    variant: Variant,
) -> Result<CauseOutcome, CausalError> {
    match cause_search(model, u, x_var, x_val, phi, variant)? {
        Search::Ac1(reason) => Ok(CauseOutcome::Ac1Violated { reason }),
        Search::Found { witness, setting } => Ok(CauseOutcome::Cause { witness, setting }),
        Search::Exhausted => Ok(CauseOutcome::NotACause),
    }
}

/// Degree of responsibility of `x_var = x_val` for `phi` in `(model, u)`:
/// `1/(|W|+1)` for the smallest witness of the chosen variant, `0` if none.
pub fn responsibility(
    model: &BinaryCausalModel,
    u: &Context,
    x_var: &str,
    x_val: bool,
    phi: &EventFormula,
    variant: Variant,
) -> Result<RespOutcome, CausalError> {
    match cause_search(model, u, x_var, x_val, phi, variant)? {
        Search::Ac1(reason) => Ok(RespOutcome::Ac1Violated { reason }),
        Search::Found { witness, .. } => Ok(RespOutcome::Exact(RespResult::with_witness(witness))),
        Search::Exhausted => Ok(RespOutcome::Exact(RespResult::none())),
    }
}

enum Search {
    Ac1(String),
    Found {
        witness: BTreeSet<String>,
        setting: BTreeMap<String, bool>,
    },
    Exhausted,
}

fn cause_search(
    model: &BinaryCausalModel,
    u: &Context,
    x_var: &str,
    x_val: bool,
    phi: &EventFormula,
    variant: Variant,
) -> Result<Search, CausalError> {
    if !model.has_variable(x_var) {
        return Err(CausalError::UnknownVariable(x_var.to_string()));
    }
    model.check_formula(phi)?;
    let base = model.solve(u, &BTreeMap::new())?;
    if base[x_var] != x_val {
        return Ok(Search::Ac1(format!(
            "{x_var} has value {} in this context",
            u8::from(base[x_var])
        )));
    }
    if !model.holds(&base, phi) {
        return Ok(Search::Ac1(format!(
            "the formula {phi} does not hold in this context"
        )));
    }

    let others: Vec<&String> = model.variables().filter(|v| v.as_str() != x_var).collect();
    let phi_vars = phi.mentions();

    let hit = for_each_subset_ascending(others.len(), others.len(), |subset| {
        let w_names: Vec<&String> = subset.iter().map(|&i| others[i]).collect();
        // Settings in binary counting order; bit i drives the i-th name.
        for mask in 0u64..(1u64 << w_names.len()) {
            let mut setting: BTreeMap<String, bool> = BTreeMap::new();
            for (i, name) in w_names.iter().enumerate() {
                setting.insert((*name).clone(), mask & (1 << i) != 0);
            }
            // (a) flipping X under the setting falsifies phi.
            let mut fals = setting.clone();
            fals.insert(x_var.to_string(), !x_val);
            let after = model.solve(u, &fals).expect("validated");
            if model.holds(&after, phi) {
                continue;
            }
            // (b) the setting alone, with X at its value, leaves phi true.
            let mut keep = setting.clone();
            keep.insert(x_var.to_string(), x_val);
            if variant == Variant::Ac2Prime {
                for var in model.variables() {
                    if var != x_var && !keep.contains_key(var) && !phi_vars.contains(var) {
                        keep.insert(var.clone(), base[var]);
                    }
                }
            }
            let kept = model.solve(u, &keep).expect("validated");
            if model.holds(&kept, phi) {
                return Some((
                    w_names
                        .iter()
                        .map(|n| (*n).clone())
                        .collect::<BTreeSet<_>>(),
                    setting,
                ));
            }
        }
        None
    });
    Ok(match hit {
        Some((witness, setting)) => Search::Found { witness, setting },
        None => Search::Exhausted,
    })
}

#[derive(Serialize, Deserialize)]
struct ModelDoc {
    exogenous: Vec<String>,
    equations: BTreeMap<String, String>,
}

/// Parses the JSON model document: `exogenous` names plus a map from
/// variable name to equation text (`!`, `&`, `|`, parentheses).
pub fn parse_model(text: &str) -> Result<BinaryCausalModel, CausalError> {
    let doc: ModelDoc =
        serde_json::from_str(text).map_err(|e| CausalError::Format(e.to_string()))?;
    let mut equations = BTreeMap::new();
    for (var, src) in doc.equations {
        equations.insert(var, parse_expr(&src)?);
    }
    BinaryCausalModel::new(doc.exogenous.into_iter().collect(), equations)
}

pub fn serialize_model(model: &BinaryCausalModel) -> String {
    let doc = ModelDoc {
        exogenous: model.exogenous.iter().cloned().collect(),
        equations: model
            .equations
            .iter()
            .map(|(k, v)| (k.clone(), v.to_string()))
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("model documents always serialize")
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Two throwers, no timing: the target breaks if either throws.
    pub(crate) fn naive_throwers() -> BinaryCausalModel {
        parse_model(
            r#"{"exogenous": ["u_bt", "u_st"],
                "equations": {"ST": "u_st", "BT": "u_bt", "BS": "ST | BT"}}"#,
        )
        .unwrap()
    }

    /// Timing-aware version: the first throw preempts the second.
    pub(crate) fn timed_throwers() -> BinaryCausalModel {
        parse_model(
            r#"{"exogenous": ["u_bt", "u_st"],
                "equations": {
                    "ST": "u_st", "BT": "u_bt",
                    "SH": "ST", "BH": "BT & !SH",
                    "BS": "SH | BH"}}"#,
        )
        .unwrap()
    }

    fn both_throw() -> Context {
        Context::from_pairs([("u_st", true), ("u_bt", true)])
    }

    #[test]
    fn naive_model_solves() {
        let m = naive_throwers();
        let sol = m.solve(&both_throw(), &BTreeMap::new()).unwrap();
        assert!(sol["BS"]);
    }

    #[test]
    fn timed_model_under_intervention() {
        let m = timed_throwers();
        let sol = m
            .solve(&both_throw(), &BTreeMap::from([("ST".to_string(), false)]))
            .unwrap();
        assert!(!sol["SH"]);
        assert!(sol["BH"]);
        assert!(sol["BS"]);
    }

    #[test]
    fn clamping_everything_returns_the_clamp() {
        let m = naive_throwers();
        let clamp: BTreeMap<String, bool> = [("ST", false), ("BT", false), ("BS", true)]
            .into_iter()
            .map(|(k, v)| (k.to_string(), v))
            .collect();
        assert_eq!(m.solve(&both_throw(), &clamp).unwrap(), clamp);
    }

    #[test]
    fn solve_agrees_with_fixpoint_iteration() {
        // Independent oracle: iterate all equations until stable.
        for seed in 0..60u64 {
            let m = random_model(seed);
            let u = random_context(&m, seed ^ 0xaaaa);
            let solved = m.solve(&u, &BTreeMap::new()).unwrap();
            let mut guess: BTreeMap<String, bool> =
                m.variables().map(|v| (v.clone(), false)).collect();
            for _ in 0..=m.equations.len() {
                let frozen = guess.clone();
                for (var, eq) in &m.equations {
                    let lookup = |n: &str| frozen.get(n).copied().or_else(|| u.get(n));
                    guess.insert(var.clone(), eq.eval(&lookup).unwrap());
                }
            }
            assert_eq!(solved, guess, "seed {seed}");
        }
    }

    fn random_model(seed: u64) -> BinaryCausalModel {
        let mut rng = crate::sample::Rng::new(seed);
        let n = 2 + rng.below(6);
        let mut equations = BTreeMap::new();
        for i in 0..n {
            // Equations only mention earlier variables, so the model is
            // recursive by construction.
            let var = format!("v{i}");
            let mut expr = BoolExpr::Var(format!("u{}", rng.below(2)));
            for j in 0..i {
                if rng.chance(0.4) {
                    let rhs = BoolExpr::Var(format!("v{j}"));
                    let rhs = if rng.bool() {
                        BoolExpr::Not(Box::new(rhs))
                    } else {
                        rhs
                    };
                    expr = if rng.bool() {
                        BoolExpr::And(Box::new(expr), Box::new(rhs))
                    } else {
                        BoolExpr::Or(Box::new(expr), Box::new(rhs))
                    };
                }
            }
            equations.insert(var, expr);
        }
        BinaryCausalModel::new(["u0".to_string(), "u1".to_string()].into(), equations).unwrap()
    }

    fn random_context(m: &BinaryCausalModel, seed: u64) -> Context {
        let mut rng = crate::sample::Rng::new(seed);
        Context::new(
            m.exogenous()
                .iter()
                .map(|n| (n.clone(), rng.bool()))
                .collect(),
        )
    }

    #[test]
    fn both_throwers_cause_in_the_naive_model() {
        let m = naive_throwers();
        let phi = parse_event_formula("BS=1").unwrap();
        let out = is_cause(&m, &both_throw(), "ST", true, &phi, Variant::Def2).unwrap();
        match out {
            CauseOutcome::Cause { witness, setting } => {
                assert_eq!(witness.iter().collect::<Vec<_>>(), ["BT"]);
                assert!(!setting["BT"]);
            }
            other => panic!("expected a cause, got {other:?}"),
        }
        assert!(is_cause(&m, &both_throw(), "BT", true, &phi, Variant::Def2)
            .unwrap()
            .is_cause());
    }

    #[test]
    fn first_thrower_causes_in_the_timed_model() {
        let m = timed_throwers();
        let phi = parse_event_formula("BS=1").unwrap();
        for variant in [Variant::Def2, Variant::Ac2Prime] {
            assert!(is_cause(&m, &both_throw(), "ST", true, &phi, variant)
                .unwrap()
                .is_cause());
        }
    }

    #[test]
    fn counterfactual_dependence_with_empty_witness() {
        let m = parse_model(r#"{"exogenous": ["u"], "equations": {"Y": "u"}}"#).unwrap();
        let u = Context::from_pairs([("u", true)]);
        let phi = parse_event_formula("Y=1").unwrap();
        let out = is_cause(&m, &u, "Y", true, &phi, Variant::Def2).unwrap();
        match out {
            CauseOutcome::Cause { witness, .. } => assert!(witness.is_empty()),
            other => panic!("expected a cause, got {other:?}"),
        }
        let r = responsibility(&m, &u, "Y", true, &phi, Variant::Def2).unwrap();
        assert!(r.as_exact().unwrap().is_critical());
    }

    #[test]
    fn ac1_violations_are_distinguished() {
        let m = naive_throwers();
        let phi = parse_event_formula("BS=1").unwrap();
        let out = is_cause(&m, &both_throw(), "ST", false, &phi, Variant::Def2).unwrap();
        assert!(matches!(out, CauseOutcome::Ac1Violated { .. }));
        let no_throw = Context::from_pairs([("u_st", false), ("u_bt", false)]);
        let out = is_cause(&m, &no_throw, "ST", false, &phi, Variant::Def2).unwrap();
        assert!(matches!(out, CauseOutcome::Ac1Violated { .. }));
    }

    #[test]
    fn shared_responsibility_is_a_half() {
        let m = naive_throwers();
        let phi = parse_event_formula("BS=1").unwrap();
        let r = responsibility(&m, &both_throw(), "ST", true, &phi, Variant::Def2).unwrap();
        assert_eq!(r.as_exact().unwrap().responsibility().to_string(), "1/2");
    }

    // A two-way disjunction encoded as equations over exogenous bits: each
    // input carries half the responsibility for the output being 1.
    #[test]
    fn disjunction_encoded_as_a_model() {
        let m = parse_model(
            r#"{"exogenous": ["u1", "u2"],
                "equations": {"X1": "u1", "X2": "u2", "OUT": "X1 | X2"}}"#,
        )
        .unwrap();
        let u = Context::from_pairs([("u1", true), ("u2", true)]);
        let phi = parse_event_formula("OUT=1").unwrap();
        let r = responsibility(&m, &u, "X1", true, &phi, Variant::Def2).unwrap();
        let r = r.as_exact().unwrap();
        assert_eq!(r.responsibility().to_string(), "1/2");
        assert_eq!(r.witness().unwrap().iter().collect::<Vec<_>>(), ["X2"]);
    }

    #[test]
    fn cause_iff_positive_responsibility() {
        let m = timed_throwers();
        let phi = parse_event_formula("BS=1").unwrap();
        for var in ["ST", "BT", "SH", "BH"] {
            for variant in [Variant::Def2, Variant::Ac2Prime] {
                let base = m.solve(&both_throw(), &BTreeMap::new()).unwrap();
                let cause = is_cause(&m, &both_throw(), var, base[var], &phi, variant)
                    .unwrap()
                    .is_cause();
                let resp =
                    responsibility(&m, &both_throw(), var, base[var], &phi, variant).unwrap();
                assert_eq!(
                    cause,
                    resp.as_exact().unwrap().is_cause(),
                    "{var} under {variant:?}"
                );
            }
        }
    }

    #[test]
    fn validation_errors() {
        assert_eq!(
            parse_model(r#"{"exogenous": [], "equations": {"A": "B", "B": "A"}}"#).unwrap_err(),
            CausalError::CyclicModel("A".into())
        );
        assert_eq!(
            parse_model(r#"{"exogenous": [], "equations": {"A": "A"}}"#).unwrap_err(),
            CausalError::CyclicModel("A".into())
        );
        assert_eq!(
            parse_model(r#"{"exogenous": [], "equations": {"A": "ghost"}}"#).unwrap_err(),
            CausalError::UnknownName {
                var: "A".into(),
                name: "ghost".into()
            }
        );
        assert_eq!(
            parse_model(r#"{"exogenous": ["A"], "equations": {"A": "1"}}"#).unwrap_err(),
            CausalError::NameClash("A".into())
        );
        let m = naive_throwers();
        assert_eq!(
            m.solve(&both_throw(), &BTreeMap::from([("ZZ".to_string(), true)]))
                .unwrap_err(),
            CausalError::UnknownVariable("ZZ".into())
        );
        let half = Context::from_pairs([("u_st", true)]);
        assert_eq!(
            m.solve(&half, &BTreeMap::new()).unwrap_err(),
            CausalError::IncompleteContext("u_bt".into())
        );
    }

    #[test]
    fn model_round_trip() {
        let m = timed_throwers();
        let back = parse_model(&serialize_model(&m)).unwrap();
        assert_eq!(back, m);
    }

    // Encoding a circuit as equations over exogenous bits gives the same
    // responsibilities as the circuit engines.
    #[test]
    fn circuit_encodings_match_circuit_responsibility() {
        use crate::circuit::{resp_brute, Assignment};
        for seed in 0..40u64 {
            let c = crate::sample::random_circuit(seed, 4, 8, true);
            let f = crate::sample::random_assignment(seed ^ 0x77, c.inputs());
            if !c.value(&f).unwrap() {
                continue; // AC1 needs the output event to hold
            }
            let (model, u, out_expr) = encode(&c, &f);
            let phi = parse_event_formula(&format!("{out_expr}=1")).unwrap();
            let all: BTreeSet<String> = c.inputs().iter().cloned().collect();
            for x in c.inputs() {
                let circuit_r = resp_brute(&c, x, c.output(), &f, &all).unwrap();
                let model_r =
                    responsibility(&model, &u, x, f.get(x).unwrap(), &phi, Variant::Def2).unwrap();
                assert_eq!(
                    circuit_r.responsibility(),
                    model_r.as_exact().unwrap().responsibility(),
                    "seed {seed}, variable {x}"
                );
            }
        }

        fn encode(
            c: &crate::circuit::Circuit,
            _f: &Assignment,
        ) -> (BinaryCausalModel, Context, String) {
            use crate::circuit::Gate;
            // One equation per input variable reading an exogenous bit, plus
            // a single output equation with the gates composed away.
            fn expr_of(c: &crate::circuit::Circuit, g: crate::circuit::GateId) -> BoolExpr {
                match &c.gates()[g] {
                    Gate::Input(name) => BoolExpr::Var(name.clone()),
                    Gate::Not(a) => BoolExpr::Not(Box::new(expr_of(c, *a))),
                    Gate::And(a, b) => {
                        BoolExpr::And(Box::new(expr_of(c, *a)), Box::new(expr_of(c, *b)))
                    }
                    Gate::Or(a, b) => {
                        BoolExpr::Or(Box::new(expr_of(c, *a)), Box::new(expr_of(c, *b)))
                    }
                    Gate::Const(v) => BoolExpr::Const(*v),
                }
            }
            let mut equations = BTreeMap::new();
            let mut exogenous = BTreeSet::new();
            for name in c.inputs() {
                equations.insert(name.clone(), BoolExpr::Var(format!("u_{name}")));
                exogenous.insert(format!("u_{name}"));
            }
            equations.insert("OUT".to_string(), expr_of(c, c.output()));
            let model = BinaryCausalModel::new(exogenous, equations).unwrap();
            let u = Context::new(_f.iter().map(|(k, v)| (format!("u_{k}"), v)).collect());
            (model, u, "OUT".to_string())
        }
    }
}
