use std::collections::{BTreeMap, BTreeSet};

use super::*;

const TINY_DOMAIN: &str = "
(define (domain tiny)
  (:predicates (on ?a ?b) (clear ?a) (holding ?a) (handempty))
  (:action stack
    :parameters (?a ?b)
    :precondition (and (holding ?a) (clear ?b))
    :effect (and (on ?a ?b) (handempty) (not (holding ?a)) (not (clear ?b)))))
";

/// Brute-force closure oracle: repeatedly scan every axiom against every
/// tuple of known objects until nothing new is derivable. Independent of
/// the stratified evaluator.
fn closure_oracle(base: &BTreeSet<Atom>, domain: &Domain) -> BTreeSet<Atom> {
    let mut atoms = base.clone();
    // Objects mentioned anywhere.
    let mut objects: BTreeSet<String> = BTreeSet::new();
    for atom in base {
        objects.extend(atom.args.iter().cloned());
    }
    loop {
        let mut added = false;
        for axiom in &domain.axioms {
            let vars: Vec<&str> = axiom.vars.iter().map(|v| v.name.as_str()).collect();
            let obj_list: Vec<&String> = objects.iter().collect();
            let mut assignment = vec![0usize; vars.len()];
            'tuples: loop {
                let binding: BTreeMap<String, String> = vars
                    .iter()
                    .zip(&assignment)
                    .map(|(v, &i)| (v.to_string(), obj_list[i].clone()))
                    .collect();
                let holds = axiom.body.iter().all(|lit| {
                    let atom = lit.atom.ground(&binding).unwrap();
                    lit.positive == atoms.contains(&atom)
                });
                if holds {
                    let head = axiom.head.ground(&binding).unwrap();
                    if atoms.insert(head) {
                        added = true;
                    }
                }
                // Advance the odometer.
                for slot in 0..assignment.len() {
                    assignment[slot] += 1;
                    if assignment[slot] < obj_list.len() {
                        continue 'tuples;
                    }
                    assignment[slot] = 0;
                }
                break;
            }
        }
        if !added {
            return atoms;
        }
    }
}

#[test]
fn parses_minimal_domain() {
    let domain = parse_domain(TINY_DOMAIN).unwrap();
    assert_eq!(domain.name, "tiny");
    assert_eq!(domain.predicates.len(), 4);
    assert_eq!(domain.actions.len(), 1);
    assert!(domain.axioms.is_empty());
}

#[test]
fn rejects_undeclared_predicate_in_effect() {
    let text = "
(define (domain bad)
  (:predicates (p ?a))
  (:action a :parameters (?x) :precondition (and (p ?x)) :effect (and (q ?x))))";
    let err = parse_domain(text).unwrap_err();
    assert!(err.msg.contains('q'), "error should name the predicate: {err}");
}

#[test]
fn rejects_arity_mismatch() {
    let text = "
(define (domain bad)
  (:predicates (p ?a))
  (:action a :parameters (?x) :precondition (and (p ?x ?x)) :effect (and (p ?x))))";
    let err = parse_domain(text).unwrap_err();
    assert!(err.msg.contains("argument"), "{err}");
}

#[test]
fn rejects_unstratified_axioms() {
    let text = "
(define (domain bad)
  (:predicates (p ?a) (q ?a))
  (:derived (p ?x) (and (q ?x) (not (p ?x)))))";
    let err = parse_domain(text).unwrap_err();
    assert!(err.msg.contains("stratified"), "{err}");
}

#[test]
fn rejects_duplicate_action_names() {
    let text = "
(define (domain bad)
  (:predicates (p ?a))
  (:action a :parameters (?x) :precondition (and (p ?x)) :effect (and (p ?x)))
  (:action a :parameters (?x) :precondition (and (p ?x)) :effect (and (p ?x))))";
    assert!(parse_domain(text).is_err());
}

#[test]
fn domain_round_trips_through_print() {
    let text = "
(define (domain rt)
  (:predicates (at ?b - box ?p - pose) (free ?p - pose) (blocked ?p))
  (:derived (blocked ?p) (exists (?b) (and (at ?b ?p))))
  (:action move
    :parameters (?b - box ?from - pose ?to - pose)
    :precondition (and (at ?b ?from) (free ?to) (not (blocked ?to)))
    :effect (and (at ?b ?to) (free ?from) (not (at ?b ?from)) (not (free ?to)))
    :cost 2.5))";
    let domain = parse_domain(text).unwrap();
    let printed = domain.to_string();
    let reparsed = parse_domain(&printed).unwrap();
    assert_eq!(domain, reparsed, "print → parse must be the identity");
}

#[test]
fn problem_round_trips_through_print() {
    let domain = parse_domain(TINY_DOMAIN).unwrap();
    let text = "
(define (problem p1)
  (:domain tiny)
  (:objects a b)
  (:init (holding a) (clear b))
  (:goal (and (on a b))))";
    let problem = parse_problem(text, &domain).unwrap();
    let printed = problem.to_string();
    let reparsed = parse_problem(&printed, &domain).unwrap();
    assert_eq!(problem, reparsed);
}

#[test]
fn empty_goal_is_trivially_satisfied() {
    let domain = parse_domain(TINY_DOMAIN).unwrap();
    let text = "(define (problem p) (:domain tiny) (:objects a) (:init) (:goal (and)))";
    let problem = parse_problem(text, &domain).unwrap();
    assert!(problem.goal.is_empty());
    assert!(validate_plan(&problem, &domain, &Plan::default()).is_valid());
}

#[test]
fn init_with_unknown_object_is_rejected() {
    let domain = parse_domain(TINY_DOMAIN).unwrap();
    let text = "(define (problem p) (:domain tiny) (:objects a) (:init (clear zz)) (:goal (and)))";
    let err = parse_problem(text, &domain).unwrap_err();
    assert!(err.msg.contains("zz"), "{err}");
}

fn chain_domain() -> Domain {
    parse_domain(
        "
(define (domain chain)
  (:predicates (edge ?a ?b) (reach ?a))
  (:derived (reach ?x) (exists (?y) (and (reach ?y) (edge ?y ?x)))))",
    )
    .unwrap()
}

#[test]
fn closure_matches_oracle_on_reachability_chain() {
    // reach(x) ← reach(y) ∧ edge(y,x) over the chain a → b → c.
    let domain = chain_domain();
    let base: BTreeSet<Atom> = [
        Atom::new("reach", &["a"]),
        Atom::new("edge", &["a", "b"]),
        Atom::new("edge", &["b", "c"]),
    ]
    .into_iter()
    .collect();
    let state = State::new(base.clone());
    let closed = derived_closure(&state, &domain);
    assert!(closed.contains(&Atom::new("reach", &["b"])));
    assert!(closed.contains(&Atom::new("reach", &["c"])));
    assert_eq!(closed, closure_oracle(&base, &domain));
}

#[test]
fn closure_without_axioms_is_identity() {
    let domain = parse_domain(TINY_DOMAIN).unwrap();
    let base: BTreeSet<Atom> = [Atom::new("handempty", &[])].into_iter().collect();
    assert_eq!(derived_closure(&State::new(base.clone()), &domain), base);
}

#[test]
fn closure_with_unsatisfiable_body_is_identity() {
    let domain = chain_domain();
    let base: BTreeSet<Atom> = [Atom::new("edge", &["a", "b"])].into_iter().collect();
    assert_eq!(derived_closure(&State::new(base.clone()), &domain), base);
}

#[test]
fn closure_is_idempotent_and_monotone() {
    let domain = chain_domain();
    let small: BTreeSet<Atom> =
        [Atom::new("reach", &["a"]), Atom::new("edge", &["a", "b"])].into_iter().collect();
    let mut bigger = small.clone();
    bigger.insert(Atom::new("edge", &["b", "c"]));

    let closed_small = derived_closure(&State::new(small), &domain);
    let closed_again = derived_closure(&State::new(closed_small.clone()), &domain);
    assert_eq!(closed_small, closed_again, "closure(closure(s)) = closure(s)");

    let closed_bigger = derived_closure(&State::new(bigger), &domain);
    assert!(closed_small.is_subset(&closed_bigger), "closure is monotone");
}

fn pick_domain() -> (Domain, Problem) {
    let domain = parse_domain(
        "
(define (domain pick)
  (:predicates (at ?b ?p) (holding ?b) (handempty) (clear ?b) (blockedby ?b ?c))
  (:derived (blockedby ?b ?c) (and (at ?b ?c) (at ?c ?b)))
  (:action pick
    :parameters (?b ?p)
    :precondition (and (at ?b ?p) (clear ?b) (handempty))
    :effect (and (holding ?b) (not (at ?b ?p)) (not (handempty)))))",
    )
    .unwrap();
    let problem = parse_problem(
        "
(define (problem p)
  (:domain pick)
  (:objects box1 p0)
  (:init (at box1 p0) (clear box1) (handempty))
  (:goal (and (holding box1))))",
        &domain,
    )
    .unwrap();
    (domain, problem)
}

#[test]
fn applicable_checks_positive_and_missing_atoms() {
    let (domain, problem) = pick_domain();
    let state = State::from_problem(&problem);
    let step = PlanStep::new("pick", &["box1", "p0"]);
    let ground = domain.ground_step(&step, &problem.objects).unwrap();
    assert!(applicable(&state, &ground, &domain));

    let mut without = state.clone();
    without.atoms.remove(&Atom::new("handempty", &[]));
    assert!(!applicable(&without, &ground, &domain));
}

#[test]
fn apply_moves_atoms_and_rejects_inapplicable() {
    let (domain, problem) = pick_domain();
    let state = State::from_problem(&problem);
    let step = PlanStep::new("pick", &["box1", "p0"]);
    let ground = domain.ground_step(&step, &problem.objects).unwrap();

    let next = apply(&state, &ground, &domain).unwrap();
    assert!(next.atoms.contains(&Atom::new("holding", &["box1"])));
    assert!(!next.atoms.contains(&Atom::new("at", &["box1", "p0"])));
    assert!(!next.atoms.contains(&Atom::new("handempty", &[])));

    let err = apply(&next, &ground, &domain).unwrap_err();
    assert_eq!(err.literal.atom.pred, "at", "first unsatisfied literal is named");
}

#[test]
fn negative_precondition_consults_derived_closure() {
    let domain = parse_domain(
        "
(define (domain neg)
  (:predicates (raw ?p) (blocked ?p) (go ?p))
  (:derived (blocked ?p) (and (raw ?p)))
  (:action enter
    :parameters (?p)
    :precondition (and (not (blocked ?p)))
    :effect (and (go ?p))))",
    )
    .unwrap();
    let problem = parse_problem(
        "(define (problem p) (:domain neg) (:objects spot) (:init (raw spot)) (:goal (and)))",
        &domain,
    )
    .unwrap();
    let state = State::from_problem(&problem);
    let step = PlanStep::new("enter", &["spot"]);
    let ground = domain.ground_step(&step, &problem.objects).unwrap();
    // blocked(spot) is derivable, so the negative precondition fails.
    assert!(!applicable(&state, &ground, &domain));
    let base = closure_oracle(&state.atoms, &domain);
    assert!(base.contains(&Atom::new("blocked", &["spot"])));
}

#[test]
fn validate_reports_first_failure_per_plan() {
    let (domain, problem) = pick_domain();

    // Empty plan, goal not yet achieved.
    let report = validate_plan(&problem, &domain, &Plan::default());
    match report {
        ValidationReport::Invalid { step, kind: FailureKind::GoalNotAchieved { literal } } => {
            assert_eq!(step, 0);
            assert_eq!(literal.atom.pred, "holding");
        }
        other => panic!("expected goal failure, got {other:?}"),
    }

    // Unknown action.
    let plan = Plan::new(vec![PlanStep::new("teleport", &["box1"])]);
    assert!(matches!(
        validate_plan(&problem, &domain, &plan),
        ValidationReport::Invalid { step: 0, kind: FailureKind::UnknownAction { .. } }
    ));

    // Arity mismatch.
    let plan = Plan::new(vec![PlanStep::new("pick", &["box1"])]);
    assert!(matches!(
        validate_plan(&problem, &domain, &plan),
        ValidationReport::Invalid { kind: FailureKind::ArityMismatch { expected: 2, got: 1, .. }, .. }
    ));

    // Unknown object.
    let plan = Plan::new(vec![PlanStep::new("pick", &["ghost", "p0"])]);
    assert!(matches!(
        validate_plan(&problem, &domain, &plan),
        ValidationReport::Invalid { kind: FailureKind::UnknownObject { .. }, .. }
    ));

    // Valid single-step plan.
    let plan = Plan::new(vec![PlanStep::new("pick", &["box1", "p0"])]);
    assert!(validate_plan(&problem, &domain, &plan).is_valid());
}

#[test]
fn validate_flags_missing_precondition_with_step_index() {
    let domain = parse_domain(
        "
(define (domain pp)
  (:predicates (holding ?b) (placed ?b) (have ?b))
  (:action pick :parameters (?b) :precondition (and (have ?b)) :effect (and (holding ?b) (not (have ?b))))
  (:action place :parameters (?b) :precondition (and (holding ?b)) :effect (and (placed ?b) (not (holding ?b)))))",
    )
    .unwrap();
    let problem = parse_problem(
        "(define (problem p) (:domain pp) (:objects b) (:init (have b)) (:goal (and (placed b))))",
        &domain,
    )
    .unwrap();
    // place before pick → missing (holding b) at step 0.
    let plan = Plan::new(vec![PlanStep::new("place", &["b"]), PlanStep::new("pick", &["b"])]);
    match validate_plan(&problem, &domain, &plan) {
        ValidationReport::Invalid { step: 0, kind: FailureKind::MissingPrecondition { literal } } => {
            assert_eq!(literal.atom.pred, "holding");
        }
        other => panic!("unexpected report {other:?}"),
    }
}

/// validate_plan = VALID ⇒ replaying with apply() reaches a goal state.
#[test]
fn valid_plans_replay_via_apply() {
    let (domain, problem) = pick_domain();
    let plan = Plan::new(vec![PlanStep::new("pick", &["box1", "p0"])]);
    assert!(validate_plan(&problem, &domain, &plan).is_valid());

    let mut state = State::from_problem(&problem);
    for step in plan.substituted() {
        let ground = domain.ground_step(&step, &problem.objects).unwrap();
        state = apply(&state, &ground, &domain).unwrap();
    }
    let closed = derived_closure(&state, &domain);
    for lit in &problem.goal {
        assert_eq!(lit.positive, closed.contains(&lit.atom));
    }
}

#[test]
fn payloads_mark_objects_continuous() {
    let domain = parse_domain(TINY_DOMAIN).unwrap();
    let text = "
(define (problem p)
  (:domain tiny)
  (:objects a q0)
  (:payloads (q0 (point 1.5 2.25)))
  (:init)
  (:goal (and)))";
    let problem = parse_problem(text, &domain).unwrap();
    assert_eq!(problem.objects["q0"].kind, ObjectKind::Continuous);
    assert_eq!(problem.objects["a"].kind, ObjectKind::Symbolic);
    let printed = problem.to_string();
    assert_eq!(parse_problem(&printed, &domain).unwrap(), problem);
}

#[test]
fn cost_expression_round_trips() {
    let text = "
(define (domain cd)
  (:predicates (at ?q) (link ?a ?b))
  (:action move
    :parameters (?a ?b)
    :precondition (and (at ?a) (link ?a ?b))
    :effect (and (at ?b) (not (at ?a)))
    :cost (+ 1 (* 0.5 (distance ?a ?b)))))";
    let domain = parse_domain(text).unwrap();
    match domain.actions[0].cost {
        CostExpr::PlusDistance { base, scale, from_param: 0, to_param: 1 } => {
            assert_eq!(base, 1.0);
            assert_eq!(scale, 0.5);
        }
        other => panic!("unexpected cost {other:?}"),
    }
    let reparsed = parse_domain(&domain.to_string()).unwrap();
    assert_eq!(domain, reparsed);
}
