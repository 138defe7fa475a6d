//! PDDL subset: STRIPS with negative preconditions, derived predicates
//! (stratified axioms), and constant or distance-affine action costs.
//!
//! This module is the engineered verifier: it parses domains and problems,
//! evaluates derived-predicate closures, applies ground actions, and
//! validates candidate plans. Everything here is immutable after
//! construction and safe to share across worker threads.

mod closure;
mod parser;
mod print;
mod validate;

pub use parser::{parse_domain, parse_problem, ParseError};
pub use validate::{validate_plan, FailureKind, ValidationReport};

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::geometry::Payload;

/// A variable with an optional flat type. Types act as static unary facts:
/// grounding only binds objects of the matching type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypedVar {
    pub name: String,
    pub ty: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PredicateDecl {
    pub name: String,
    pub params: Vec<TypedVar>,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Term {
    Var(String),
    Obj(String),
}

impl Term {
    pub fn as_var(&self) -> Option<&str> {
        match self {
            Term::Var(v) => Some(v),
            Term::Obj(_) => None,
        }
    }
}

/// An atom whose arguments may still contain variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AtomTemplate {
    pub pred: String,
    pub args: Vec<Term>,
}

impl AtomTemplate {
    pub fn ground(&self, binding: &BTreeMap<String, String>) -> Option<Atom> {
        let mut args = Vec::with_capacity(self.args.len());
        for term in &self.args {
            match term {
                Term::Obj(o) => args.push(o.clone()),
                Term::Var(v) => args.push(binding.get(v)?.clone()),
            }
        }
        Some(Atom { pred: self.pred.clone(), args })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiteralTemplate {
    pub positive: bool,
    pub atom: AtomTemplate,
}

/// A fully ground atom.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Atom {
    pub pred: String,
    pub args: Vec<String>,
}

impl Atom {
    pub fn new(pred: impl Into<String>, args: &[&str]) -> Self {
        Atom { pred: pred.into(), args: args.iter().map(|s| s.to_string()).collect() }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}", self.pred)?;
        for a in &self.args {
            write!(f, " {a}")?;
        }
        write!(f, ")")
    }
}

/// `(pred args…)` or `(not (pred args…))`, ground.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Literal {
    pub positive: bool,
    pub atom: Atom,
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.positive {
            write!(f, "{}", self.atom)
        } else {
            write!(f, "(not {})", self.atom)
        }
    }
}

/// One derived-predicate rule. `vars` holds the head parameters followed by
/// any existential variables that appear only in the body.
#[derive(Debug, Clone, PartialEq)]
pub struct Axiom {
    pub head: AtomTemplate,
    pub vars: Vec<TypedVar>,
    pub body: Vec<LiteralTemplate>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CostExpr {
    Const(f64),
    /// `base + scale * |from - to|` where the two parameters resolve to
    /// point payloads at evaluation time.
    PlusDistance { base: f64, scale: f64, from_param: usize, to_param: usize },
}

impl Default for CostExpr {
    fn default() -> Self {
        CostExpr::Const(1.0)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ActionSchema {
    pub name: String,
    pub params: Vec<TypedVar>,
    pub precondition: Vec<LiteralTemplate>,
    pub add_effects: Vec<AtomTemplate>,
    pub del_effects: Vec<AtomTemplate>,
    pub cost: CostExpr,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Domain {
    pub name: String,
    pub predicates: Vec<PredicateDecl>,
    pub axioms: Vec<Axiom>,
    pub actions: Vec<ActionSchema>,
    /// Predicates that appear as axiom heads, with their evaluation stratum
    /// (1-based; base predicates are stratum 0).
    pub(crate) strata: BTreeMap<String, u32>,
}

impl Domain {
    pub fn predicate(&self, name: &str) -> Option<&PredicateDecl> {
        self.predicates.iter().find(|p| p.name == name)
    }

    pub fn action(&self, name: &str) -> Option<&ActionSchema> {
        self.actions.iter().find(|a| a.name == name)
    }

    pub fn is_derived(&self, pred: &str) -> bool {
        self.strata.contains_key(pred)
    }

    /// Ground `step` against this domain and the problem's object table.
    pub fn ground_step(
        &self,
        step: &PlanStep,
        objects: &BTreeMap<String, ObjectDecl>,
    ) -> Result<GroundAction, GroundError> {
        let schema = self
            .action(&step.action)
            .ok_or_else(|| GroundError::UnknownAction(step.action.clone()))?;
        if schema.params.len() != step.args.len() {
            return Err(GroundError::ArityMismatch {
                action: step.action.clone(),
                expected: schema.params.len(),
                got: step.args.len(),
            });
        }
        let mut binding = BTreeMap::new();
        for (param, arg) in schema.params.iter().zip(&step.args) {
            let decl = objects
                .get(arg)
                .ok_or_else(|| GroundError::UnknownObject(arg.clone()))?;
            if let Some(want) = &param.ty {
                if decl.ty.as_deref() != Some(want.as_str()) {
                    return Err(GroundError::TypeMismatch {
                        object: arg.clone(),
                        expected: want.clone(),
                    });
                }
            }
            binding.insert(param.name.clone(), arg.clone());
        }
        let ground_lits = |lits: &[LiteralTemplate]| {
            lits.iter()
                .map(|l| Literal {
                    positive: l.positive,
                    atom: l.atom.ground(&binding).expect("parser checked free variables"),
                })
                .collect::<Vec<_>>()
        };
        let ground_atoms = |atoms: &[AtomTemplate]| {
            atoms
                .iter()
                .map(|a| a.ground(&binding).expect("parser checked free variables"))
                .collect::<Vec<_>>()
        };
        Ok(GroundAction {
            name: schema.name.clone(),
            args: step.args.clone(),
            precondition: ground_lits(&schema.precondition),
            add_effects: ground_atoms(&schema.add_effects),
            del_effects: ground_atoms(&schema.del_effects),
        })
    }
}

#[derive(Debug, Clone, thiserror::Error, PartialEq)]
pub enum GroundError {
    #[error("unknown action `{0}`")]
    UnknownAction(String),
    #[error("action `{action}` takes {expected} arguments, got {got}")]
    ArityMismatch { action: String, expected: usize, got: usize },
    #[error("unknown object `{0}`")]
    UnknownObject(String),
    #[error("object `{object}` is not of type `{expected}`")]
    TypeMismatch { object: String, expected: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ObjectKind {
    Symbolic,
    /// Resolves to exactly one geometric payload in `Problem::payloads`.
    Continuous,
    /// Placeholder for a future stream output.
    Optimistic { level: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObjectDecl {
    pub id: String,
    pub ty: Option<String>,
    pub kind: ObjectKind,
    /// For optimistic objects: id of the producing stream instance.
    pub producer: Option<String>,
}

impl ObjectDecl {
    pub fn symbolic(id: impl Into<String>, ty: impl Into<String>) -> Self {
        ObjectDecl { id: id.into(), ty: Some(ty.into()), kind: ObjectKind::Symbolic, producer: None }
    }

    pub fn continuous(id: impl Into<String>, ty: impl Into<String>) -> Self {
        ObjectDecl {
            id: id.into(),
            ty: Some(ty.into()),
            kind: ObjectKind::Continuous,
            producer: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Problem {
    pub name: String,
    pub domain_name: String,
    pub objects: BTreeMap<String, ObjectDecl>,
    pub payloads: BTreeMap<String, Payload>,
    pub init: BTreeSet<Atom>,
    pub goal: Vec<Literal>,
}

/// Base facts only; derived atoms are always recomputed via closure.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct State {
    pub atoms: BTreeSet<Atom>,
}

impl State {
    pub fn new(atoms: BTreeSet<Atom>) -> Self {
        State { atoms }
    }

    pub fn from_problem(problem: &Problem) -> Self {
        State { atoms: problem.init.clone() }
    }
}

/// One plan step as written: an action name plus object arguments.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PlanStep {
    pub action: String,
    pub args: Vec<String>,
}

impl PlanStep {
    pub fn new(action: impl Into<String>, args: &[&str]) -> Self {
        PlanStep { action: action.into(), args: args.iter().map(|s| s.to_string()).collect() }
    }
}

impl fmt::Display for PlanStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}", self.action)?;
        for a in &self.args {
            write!(f, " {a}")?;
        }
        write!(f, ")")
    }
}

/// A plan plus any optimistic-to-continuous bindings collected during
/// refinement. An empty binding map means the plan is already concrete.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Plan {
    pub steps: Vec<PlanStep>,
    pub bindings: BTreeMap<String, String>,
}

impl Plan {
    pub fn new(steps: Vec<PlanStep>) -> Self {
        Plan { steps, bindings: BTreeMap::new() }
    }

    /// Rewrite every argument through the binding map.
    pub fn substituted(&self) -> Vec<PlanStep> {
        self.steps
            .iter()
            .map(|s| PlanStep {
                action: s.action.clone(),
                args: s
                    .args
                    .iter()
                    .map(|a| self.bindings.get(a).unwrap_or(a).clone())
                    .collect(),
            })
            .collect()
    }
}

/// A ground action with substituted preconditions and effects.
#[derive(Debug, Clone, PartialEq)]
pub struct GroundAction {
    pub name: String,
    pub args: Vec<String>,
    pub precondition: Vec<Literal>,
    pub add_effects: Vec<Atom>,
    pub del_effects: Vec<Atom>,
}

impl GroundAction {
    pub fn step(&self) -> PlanStep {
        PlanStep { action: self.name.clone(), args: self.args.clone() }
    }
}

/// Least fixed point of the domain's axioms over `state`.
pub fn derived_closure(state: &State, domain: &Domain) -> BTreeSet<Atom> {
    closure::evaluate(&state.atoms, domain)
}

/// True iff every positive precondition is in the derived closure and every
/// negative one is absent.
pub fn applicable(state: &State, action: &GroundAction, domain: &Domain) -> bool {
    first_unsatisfied(state, action, domain).is_none()
}

pub(crate) fn first_unsatisfied(
    state: &State,
    action: &GroundAction,
    domain: &Domain,
) -> Option<Literal> {
    let closed = derived_closure(state, domain);
    action
        .precondition
        .iter()
        .find(|lit| lit.positive != closed.contains(&lit.atom))
        .cloned()
}

#[derive(Debug, Clone, thiserror::Error, PartialEq)]
#[error("action {step} precondition not satisfied: {literal}")]
pub struct ApplyError {
    pub step: PlanStep,
    pub literal: Literal,
}

/// STRIPS application: `(atoms \ del) ∪ add`. Fails on the first
/// unsatisfied precondition literal.
pub fn apply(state: &State, action: &GroundAction, domain: &Domain) -> Result<State, ApplyError> {
    if let Some(literal) = first_unsatisfied(state, action, domain) {
        return Err(ApplyError { step: action.step(), literal });
    }
    let mut atoms = state.atoms.clone();
    for del in &action.del_effects {
        atoms.remove(del);
    }
    for add in &action.add_effects {
        atoms.insert(add.clone());
    }
    Ok(State { atoms })
}

#[cfg(test)]
mod tests;
