//! Plan validation: the reject/accept gate of the verify-and-reprompt loop.
//! Reports only the first failure, which becomes the feedback message.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{
    derived_closure, first_unsatisfied, Domain, GroundError, Literal, Plan, Problem, State,
};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum FailureKind {
    UnknownAction { name: String },
    ArityMismatch { action: String, expected: usize, got: usize },
    UnknownObject { name: String },
    MissingPrecondition { literal: Literal },
    GoalNotAchieved { literal: Literal },
}

impl fmt::Display for FailureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FailureKind::UnknownAction { name } => write!(f, "unknown action `{name}`"),
            FailureKind::ArityMismatch { action, expected, got } => {
                write!(f, "action `{action}` takes {expected} arguments, got {got}")
            }
            FailureKind::UnknownObject { name } => write!(f, "unknown object `{name}`"),
            FailureKind::MissingPrecondition { literal } => {
                write!(f, "precondition not satisfied: {literal}")
            }
            FailureKind::GoalNotAchieved { literal } => {
                write!(f, "goal condition not achieved: {literal}")
            }
        }
    }
}

/// VALID, or the first failure with the step index it occurred at. Goal
/// failures carry `step == plan.steps.len()`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum ValidationReport {
    Valid,
    Invalid { step: usize, kind: FailureKind },
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        matches!(self, ValidationReport::Valid)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValidationReport::Valid => write!(f, "valid"),
            ValidationReport::Invalid { step, kind } => write!(f, "step {step}: {kind}"),
        }
    }
}

/// Replay `plan` from the problem's initial state. Bindings are substituted
/// first; all failures are report payloads, never errors.
pub fn validate_plan(problem: &Problem, domain: &Domain, plan: &Plan) -> ValidationReport {
    let mut state = State::from_problem(problem);
    for (index, step) in plan.substituted().iter().enumerate() {
        let ground = match domain.ground_step(step, &problem.objects) {
            Ok(g) => g,
            Err(e) => {
                let kind = match e {
                    GroundError::UnknownAction(name) => FailureKind::UnknownAction { name },
                    GroundError::ArityMismatch { action, expected, got } => {
                        FailureKind::ArityMismatch { action, expected, got }
                    }
                    GroundError::UnknownObject(name) => FailureKind::UnknownObject { name },
                    // Types behave as static unary facts, so a mismatch is a
                    // precondition the object can never satisfy.
                    GroundError::TypeMismatch { object, expected } => {
                        FailureKind::MissingPrecondition {
                            literal: Literal {
                                positive: true,
                                atom: super::Atom { pred: expected, args: vec![object] },
                            },
                        }
                    }
                };
                return ValidationReport::Invalid { step: index, kind };
            }
        };
        if let Some(literal) = first_unsatisfied(&state, &ground, domain) {
            return ValidationReport::Invalid {
                step: index,
                kind: FailureKind::MissingPrecondition { literal },
            };
        }
        for del in &ground.del_effects {
            state.atoms.remove(del);
        }
        for add in &ground.add_effects {
            state.atoms.insert(add.clone());
        }
    }
    let closed = derived_closure(&state, domain);
    for literal in &problem.goal {
        if literal.positive != closed.contains(&literal.atom) {
            return ValidationReport::Invalid {
                step: plan.steps.len(),
                kind: FailureKind::GoalNotAchieved { literal: literal.clone() },
            };
        }
    }
    ValidationReport::Valid
}
