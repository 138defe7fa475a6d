//! Parser for the s-expression PDDL dialect.
//!
//! Grammar summary (full description in `docs/formats.md`):
//!
//! ```text
//! (define (domain NAME)
//!   (:predicates (pred ?a - type ?b) …)
//!   (:derived (head ?x …) BODY)             ; BODY: literal | (and …) | (exists (?v …) BODY)
//!   (:action name
//!     :parameters (?p - type …)
//!     :precondition (and literal…)
//!     :effect (and (atom…) (not (atom…)) …)
//!     :cost NUMBER | (+ NUMBER (* NUMBER (distance ?a ?b)))))
//!
//! (define (problem NAME)
//!   (:domain NAME)
//!   (:objects obj - type …)
//!   (:payloads (obj (point X Y)) (obj (path (X Y) …)) …)
//!   (:init (atom…) …)
//!   (:goal (and literal…)))
//! ```

use std::collections::{BTreeMap, BTreeSet};

use crate::geometry::{Payload, Vec2};
use crate::sexpr::{parse_all, Pos, Sexpr};

use super::{
    ActionSchema, Atom, AtomTemplate, Axiom, CostExpr, Domain, Literal, LiteralTemplate,
    ObjectDecl, ObjectKind, PredicateDecl, Problem, Term, TypedVar,
};

#[derive(Debug, Clone, thiserror::Error)]
#[error("{}{msg}", .pos.map(|p| format!("{p}: ")).unwrap_or_default())]
pub struct ParseError {
    pub msg: String,
    pub pos: Option<Pos>,
}

impl ParseError {
    fn at(pos: Pos, msg: impl Into<String>) -> Self {
        ParseError { msg: msg.into(), pos: Some(pos) }
    }

    fn new(msg: impl Into<String>) -> Self {
        ParseError { msg: msg.into(), pos: None }
    }
}

impl From<crate::sexpr::SexprError> for ParseError {
    fn from(e: crate::sexpr::SexprError) -> Self {
        ParseError { msg: e.msg, pos: Some(e.pos) }
    }
}

pub fn parse_domain(text: &str) -> Result<Domain, ParseError> {
    let forms = parse_all(text)?;
    let form = single_define(&forms, "domain")?;
    let items = form.as_list().unwrap();
    let name = define_name(items, "domain")?;

    let mut predicates: Vec<PredicateDecl> = Vec::new();
    let mut axioms: Vec<Axiom> = Vec::new();
    let mut actions: Vec<ActionSchema> = Vec::new();

    for section in &items[2..] {
        let list = section
            .as_list()
            .ok_or_else(|| ParseError::at(section.pos(), "expected a (:…) section"))?;
        let head = list
            .first()
            .and_then(Sexpr::as_sym)
            .ok_or_else(|| ParseError::at(section.pos(), "empty section"))?;
        match head {
            ":predicates" => {
                for p in &list[1..] {
                    predicates.push(parse_predicate_decl(p)?);
                }
            }
            ":derived" => axioms.push(parse_axiom(list, section.pos())?),
            ":action" => actions.push(parse_action(list, section.pos())?),
            other => {
                return Err(ParseError::at(
                    section.pos(),
                    format!("unknown domain section `{other}`"),
                ))
            }
        }
    }

    check_unique("predicate", predicates.iter().map(|p| p.name.as_str()))?;
    check_unique("action", actions.iter().map(|a| a.name.as_str()))?;
    check_unique("axiom head", axioms.iter().map(|a| a.head.pred.as_str()))?;

    let mut domain =
        Domain { name, predicates, axioms, actions, strata: BTreeMap::new() };
    validate_domain(&mut domain)?;
    Ok(domain)
}

pub fn parse_problem(text: &str, domain: &Domain) -> Result<Problem, ParseError> {
    let forms = parse_all(text)?;
    let form = single_define(&forms, "problem")?;
    let items = form.as_list().unwrap();
    let name = define_name(items, "problem")?;

    let mut domain_name = None;
    let mut objects: BTreeMap<String, ObjectDecl> = BTreeMap::new();
    let mut payloads: BTreeMap<String, Payload> = BTreeMap::new();
    let mut init: BTreeSet<Atom> = BTreeSet::new();
    let mut init_forms: Vec<&Sexpr> = Vec::new();
    let mut goal_form: Option<&Sexpr> = None;

    for section in &items[2..] {
        let list = section
            .as_list()
            .ok_or_else(|| ParseError::at(section.pos(), "expected a (:…) section"))?;
        let head = list
            .first()
            .and_then(Sexpr::as_sym)
            .ok_or_else(|| ParseError::at(section.pos(), "empty section"))?;
        match head {
            ":domain" => {
                domain_name = Some(expect_sym(&list[1])?.to_string());
            }
            ":objects" => {
                for (sym, ty, pos) in parse_typed_names(&list[1..])? {
                    if objects.contains_key(&sym) {
                        return Err(ParseError::at(pos, format!("duplicate object `{sym}`")));
                    }
                    objects.insert(
                        sym.clone(),
                        ObjectDecl { id: sym, ty, kind: ObjectKind::Symbolic, producer: None },
                    );
                }
            }
            ":payloads" => {
                for entry in &list[1..] {
                    let (id, payload, pos) = parse_payload(entry)?;
                    if payloads.insert(id.clone(), payload).is_some() {
                        return Err(ParseError::at(pos, format!("duplicate payload for `{id}`")));
                    }
                }
            }
            ":init" => init_forms.extend(&list[1..]),
            ":goal" => {
                goal_form = Some(&list[1]);
            }
            other => {
                return Err(ParseError::at(
                    section.pos(),
                    format!("unknown problem section `{other}`"),
                ))
            }
        }
    }

    let domain_name = domain_name.ok_or_else(|| ParseError::new("missing (:domain …)"))?;
    if domain_name != domain.name {
        return Err(ParseError::new(format!(
            "problem references domain `{domain_name}` but `{}` was supplied",
            domain.name
        )));
    }

    // Objects carrying payloads are continuous.
    for (id, _) in &payloads {
        match objects.get_mut(id.as_str()) {
            Some(decl) => decl.kind = ObjectKind::Continuous,
            None => {
                return Err(ParseError::new(format!("payload for undeclared object `{id}`")))
            }
        }
    }

    for form in init_forms {
        let atom = parse_ground_atom(form, domain, &objects)?;
        init.insert(atom);
    }

    let goal = match goal_form {
        Some(form) => parse_ground_body(form, domain, &objects)?,
        None => Vec::new(),
    };

    Ok(Problem { name, domain_name, objects, payloads, init, goal })
}

fn single_define<'a>(forms: &'a [Sexpr], kind: &str) -> Result<&'a Sexpr, ParseError> {
    match forms {
        [form] => {
            let items = form
                .as_list()
                .ok_or_else(|| ParseError::at(form.pos(), "expected (define …)"))?;
            match items.first().and_then(Sexpr::as_sym) {
                Some("define") => Ok(form),
                _ => Err(ParseError::at(form.pos(), "expected (define …)")),
            }
        }
        [] => Err(ParseError::new(format!("empty {kind} source"))),
        [_, extra, ..] => Err(ParseError::at(extra.pos(), "expected exactly one (define …)")),
    }
}

fn define_name(items: &[Sexpr], kind: &str) -> Result<String, ParseError> {
    let head = items
        .get(1)
        .and_then(Sexpr::as_list)
        .ok_or_else(|| ParseError::new(format!("expected (define ({kind} NAME) …)")))?;
    match (head.first().and_then(Sexpr::as_sym), head.get(1).and_then(Sexpr::as_sym)) {
        (Some(k), Some(name)) if k == kind => Ok(name.to_string()),
        _ => Err(ParseError::new(format!("expected (define ({kind} NAME) …)"))),
    }
}

fn expect_sym(form: &Sexpr) -> Result<&str, ParseError> {
    form.as_sym().ok_or_else(|| ParseError::at(form.pos(), "expected a symbol"))
}

/// Parse `?a - type ?b ?c - type` runs into typed variables (or plain names
/// when `require_var_prefix` is false).
fn parse_typed_list(
    forms: &[Sexpr],
    require_var_prefix: bool,
) -> Result<Vec<TypedVar>, ParseError> {
    let raw = parse_typed_names(forms)?;
    raw.into_iter()
        .map(|(name, ty, pos)| {
            if require_var_prefix && !name.starts_with('?') {
                return Err(ParseError::at(pos, format!("expected a ?variable, got `{name}`")));
            }
            Ok(TypedVar { name, ty })
        })
        .collect()
}

fn parse_typed_names(forms: &[Sexpr]) -> Result<Vec<(String, Option<String>, Pos)>, ParseError> {
    let mut out: Vec<(String, Option<String>, Pos)> = Vec::new();
    let mut untyped_from = 0usize;
    let mut i = 0;
    while i < forms.len() {
        let sym = expect_sym(&forms[i])?;
        if sym == "-" {
            let ty = forms
                .get(i + 1)
                .map(expect_sym)
                .transpose()?
                .ok_or_else(|| ParseError::at(forms[i].pos(), "dangling `-` in typed list"))?;
            if untyped_from == out.len() {
                return Err(ParseError::at(forms[i].pos(), "type without preceding names"));
            }
            for entry in &mut out[untyped_from..] {
                entry.1 = Some(ty.to_string());
            }
            untyped_from = out.len();
            i += 2;
        } else {
            out.push((sym.to_string(), None, forms[i].pos()));
            i += 1;
        }
    }
    Ok(out)
}

fn parse_predicate_decl(form: &Sexpr) -> Result<PredicateDecl, ParseError> {
    let items = form
        .as_list()
        .ok_or_else(|| ParseError::at(form.pos(), "expected (pred ?args…)"))?;
    let name = expect_sym(
        items.first().ok_or_else(|| ParseError::at(form.pos(), "empty predicate"))?,
    )?;
    let params = parse_typed_list(&items[1..], true)?;
    Ok(PredicateDecl { name: name.to_string(), params })
}

fn parse_term(form: &Sexpr) -> Result<Term, ParseError> {
    let sym = expect_sym(form)?;
    if let Some(rest) = sym.strip_prefix('?') {
        if rest.is_empty() {
            return Err(ParseError::at(form.pos(), "empty variable name"));
        }
        Ok(Term::Var(sym.to_string()))
    } else {
        Ok(Term::Obj(sym.to_string()))
    }
}

fn parse_atom_template(form: &Sexpr) -> Result<AtomTemplate, ParseError> {
    let items = form
        .as_list()
        .ok_or_else(|| ParseError::at(form.pos(), "expected an atom"))?;
    let pred = expect_sym(items.first().ok_or_else(|| ParseError::at(form.pos(), "empty atom"))?)?;
    if pred == "not" || pred == "and" || pred == "exists" {
        return Err(ParseError::at(form.pos(), format!("`{pred}` not allowed here")));
    }
    let args = items[1..].iter().map(parse_term).collect::<Result<_, _>>()?;
    Ok(AtomTemplate { pred: pred.to_string(), args })
}

fn parse_literal_template(form: &Sexpr) -> Result<LiteralTemplate, ParseError> {
    let items = form
        .as_list()
        .ok_or_else(|| ParseError::at(form.pos(), "expected a literal"))?;
    if items.first().and_then(Sexpr::as_sym) == Some("not") {
        if items.len() != 2 {
            return Err(ParseError::at(form.pos(), "(not …) takes exactly one atom"));
        }
        Ok(LiteralTemplate { positive: false, atom: parse_atom_template(&items[1])? })
    } else {
        Ok(LiteralTemplate { positive: true, atom: parse_atom_template(form)? })
    }
}

/// Conjunction body: a bare literal, `(and …)`, or — when `extra_vars` is
/// given — `(exists (?v …) BODY)` whose variables are appended to it.
fn parse_body(
    form: &Sexpr,
    extra_vars: Option<&mut Vec<TypedVar>>,
) -> Result<Vec<LiteralTemplate>, ParseError> {
    let items = form
        .as_list()
        .ok_or_else(|| ParseError::at(form.pos(), "expected a condition"))?;
    match items.first().and_then(Sexpr::as_sym) {
        Some("and") => {
            let mut lits = Vec::new();
            let mut vars = extra_vars;
            for item in &items[1..] {
                lits.extend(parse_body(item, vars.as_deref_mut())?);
            }
            Ok(lits)
        }
        Some("exists") => match extra_vars {
            Some(vars) => {
                if items.len() != 3 {
                    return Err(ParseError::at(form.pos(), "(exists (?vars) BODY)"));
                }
                let declared = parse_typed_list(
                    items[1]
                        .as_list()
                        .ok_or_else(|| ParseError::at(items[1].pos(), "expected (?vars)"))?,
                    true,
                )?;
                vars.extend(declared);
                parse_body(&items[2], Some(vars))
            }
            None => Err(ParseError::at(form.pos(), "`exists` only allowed in axiom bodies")),
        },
        _ => Ok(vec![parse_literal_template(form)?]),
    }
}

fn parse_axiom(list: &[Sexpr], pos: Pos) -> Result<Axiom, ParseError> {
    if list.len() != 3 {
        return Err(ParseError::at(pos, "(:derived (head ?vars…) BODY)"));
    }
    let head = parse_atom_template(&list[1])?;
    let mut vars: Vec<TypedVar> = Vec::new();
    for term in &head.args {
        match term {
            Term::Var(v) => vars.push(TypedVar { name: v.clone(), ty: None }),
            Term::Obj(_) => {
                return Err(ParseError::at(list[1].pos(), "axiom head arguments must be variables"))
            }
        }
    }
    let body = parse_body(&list[2], Some(&mut vars))?;
    if vars.iter().any(|v| v.ty.is_some()) {
        return Err(ParseError::at(pos, "axiom variables must be untyped"));
    }
    // Safety: every variable must occur in a positive body literal, and the
    // body is reordered so positives come first.
    let (pos_lits, neg_lits): (Vec<_>, Vec<_>) = body.into_iter().partition(|l| l.positive);
    let positive_vars: BTreeSet<&str> = pos_lits
        .iter()
        .flat_map(|l| l.atom.args.iter().filter_map(Term::as_var))
        .collect();
    for v in &vars {
        if !positive_vars.contains(v.name.as_str()) {
            return Err(ParseError::at(
                pos,
                format!("axiom variable {} must appear in a positive body literal", v.name),
            ));
        }
    }
    for lit in &neg_lits {
        for term in &lit.atom.args {
            if let Term::Var(v) = term {
                if !positive_vars.contains(v.as_str()) {
                    return Err(ParseError::at(
                        pos,
                        format!("negative literal uses unbound variable {v}"),
                    ));
                }
            }
        }
    }
    let body = pos_lits.into_iter().chain(neg_lits).collect();
    Ok(Axiom { head, vars, body })
}

fn parse_number(form: &Sexpr) -> Result<f64, ParseError> {
    expect_sym(form)?
        .parse::<f64>()
        .map_err(|_| ParseError::at(form.pos(), "expected a number"))
}

fn parse_cost(form: &Sexpr, params: &[TypedVar]) -> Result<CostExpr, ParseError> {
    if let Some(sym) = form.as_sym() {
        let value = sym
            .parse::<f64>()
            .map_err(|_| ParseError::at(form.pos(), "expected a numeric cost"))?;
        if !(value.is_finite() && value >= 0.0) {
            return Err(ParseError::at(form.pos(), "cost must be finite and nonnegative"));
        }
        return Ok(CostExpr::Const(value));
    }
    // (+ base (* scale (distance ?a ?b)))
    let items = form.as_list().unwrap();
    let bad = || ParseError::at(form.pos(), "cost must be N or (+ N (* N (distance ?a ?b)))");
    if items.len() != 3 || items[0].as_sym() != Some("+") {
        return Err(bad());
    }
    let base = parse_number(&items[1])?;
    let mul = items[2].as_list().ok_or_else(bad)?;
    if mul.len() != 3 || mul[0].as_sym() != Some("*") {
        return Err(bad());
    }
    let scale = parse_number(&mul[1])?;
    let dist = mul[2].as_list().ok_or_else(bad)?;
    if dist.len() != 3 || dist[0].as_sym() != Some("distance") {
        return Err(bad());
    }
    let find = |form: &Sexpr| -> Result<usize, ParseError> {
        let name = expect_sym(form)?;
        params
            .iter()
            .position(|p| p.name == name)
            .ok_or_else(|| ParseError::at(form.pos(), format!("unknown cost parameter `{name}`")))
    };
    Ok(CostExpr::PlusDistance {
        base,
        scale,
        from_param: find(&dist[1])?,
        to_param: find(&dist[2])?,
    })
}

fn parse_action(list: &[Sexpr], pos: Pos) -> Result<ActionSchema, ParseError> {
    let name = expect_sym(
        list.get(1).ok_or_else(|| ParseError::at(pos, "missing action name"))?,
    )?
    .to_string();
    let mut params: Vec<TypedVar> = Vec::new();
    let mut precondition: Vec<LiteralTemplate> = Vec::new();
    let mut add_effects: Vec<AtomTemplate> = Vec::new();
    let mut del_effects: Vec<AtomTemplate> = Vec::new();
    let mut cost = CostExpr::default();

    let mut i = 2;
    while i < list.len() {
        let key = expect_sym(&list[i])?;
        let value = list
            .get(i + 1)
            .ok_or_else(|| ParseError::at(list[i].pos(), format!("missing value for {key}")))?;
        match key {
            ":parameters" => {
                params = parse_typed_list(
                    value.as_list().ok_or_else(|| ParseError::at(value.pos(), "expected (…)"))?,
                    true,
                )?;
            }
            ":precondition" => precondition = parse_body(value, None)?,
            ":effect" => {
                for lit in parse_body(value, None)? {
                    if lit.positive {
                        add_effects.push(lit.atom);
                    } else {
                        del_effects.push(lit.atom);
                    }
                }
            }
            ":cost" => cost = parse_cost(value, &params)?,
            other => {
                return Err(ParseError::at(list[i].pos(), format!("unknown action key `{other}`")))
            }
        }
        i += 2;
    }

    Ok(ActionSchema { name, params, precondition, add_effects, del_effects, cost })
}

fn check_unique<'a>(
    kind: &str,
    names: impl Iterator<Item = &'a str>,
) -> Result<(), ParseError> {
    let mut seen = BTreeSet::new();
    for n in names {
        if !seen.insert(n) {
            return Err(ParseError::new(format!("duplicate {kind} `{n}`")));
        }
    }
    Ok(())
}

/// Arity/declaration checks plus axiom stratification.
fn validate_domain(domain: &mut Domain) -> Result<(), ParseError> {
    let arities: BTreeMap<&str, usize> =
        domain.predicates.iter().map(|p| (p.name.as_str(), p.params.len())).collect();
    let check_atom = |atom: &AtomTemplate, what: &str| -> Result<(), ParseError> {
        match arities.get(atom.pred.as_str()) {
            None => Err(ParseError::new(format!(
                "{what} references undeclared predicate `{}`",
                atom.pred
            ))),
            Some(&n) if n != atom.args.len() => Err(ParseError::new(format!(
                "{what}: predicate `{}` takes {n} arguments, got {}",
                atom.pred,
                atom.args.len()
            ))),
            Some(_) => Ok(()),
        }
    };

    for action in &domain.actions {
        let params: BTreeSet<&str> = action.params.iter().map(|p| p.name.as_str()).collect();
        let where_ = |part: &str| format!("action `{}` {part}", action.name);
        let check_vars = |atom: &AtomTemplate, part: &str| -> Result<(), ParseError> {
            for term in &atom.args {
                if let Term::Var(v) = term {
                    if !params.contains(v.as_str()) {
                        return Err(ParseError::new(format!(
                            "{}: free variable {v}",
                            where_(part)
                        )));
                    }
                }
            }
            Ok(())
        };
        for lit in &action.precondition {
            check_atom(&lit.atom, &where_("precondition"))?;
            check_vars(&lit.atom, "precondition")?;
        }
        for atom in action.add_effects.iter().chain(&action.del_effects) {
            check_atom(atom, &where_("effect"))?;
            check_vars(atom, "effect")?;
        }
        for add in &action.add_effects {
            if action.del_effects.contains(add) {
                return Err(ParseError::new(format!(
                    "action `{}` adds and deletes {}",
                    action.name, add.pred
                )));
            }
        }
    }

    for axiom in &domain.axioms {
        check_atom(&axiom.head, "axiom head")?;
        for lit in &axiom.body {
            check_atom(&lit.atom, "axiom body")?;
        }
        for action in &domain.actions {
            for atom in action.add_effects.iter().chain(&action.del_effects) {
                if atom.pred == axiom.head.pred {
                    return Err(ParseError::new(format!(
                        "derived predicate `{}` cannot appear in effects of `{}`",
                        axiom.head.pred, action.name
                    )));
                }
            }
        }
    }

    domain.strata = stratify(domain)?;
    Ok(())
}

/// Assign strata to derived predicates. A fixpoint that fails to settle
/// within |derived| rounds has a cycle through negation.
fn stratify(domain: &Domain) -> Result<BTreeMap<String, u32>, ParseError> {
    let mut strata: BTreeMap<String, u32> =
        domain.axioms.iter().map(|a| (a.head.pred.clone(), 1)).collect();
    let rounds = strata.len() + 1;
    for _ in 0..rounds {
        let mut changed = false;
        for axiom in &domain.axioms {
            let head = strata[&axiom.head.pred];
            let mut need = 1u32;
            for lit in &axiom.body {
                if let Some(&dep) = strata.get(&lit.atom.pred) {
                    need = need.max(if lit.positive { dep } else { dep + 1 });
                }
            }
            if need > head {
                strata.insert(axiom.head.pred.clone(), need);
                changed = true;
            }
        }
        if !changed {
            return Ok(strata);
        }
    }
    Err(ParseError::new(
        "axioms are not stratified: a derived predicate depends negatively on itself",
    ))
}

fn parse_payload(form: &Sexpr) -> Result<(String, Payload, Pos), ParseError> {
    let items = form
        .as_list()
        .ok_or_else(|| ParseError::at(form.pos(), "expected (obj (point X Y))"))?;
    if items.len() != 2 {
        return Err(ParseError::at(form.pos(), "expected (obj PAYLOAD)"));
    }
    let id = expect_sym(&items[0])?.to_string();
    let body = items[1]
        .as_list()
        .ok_or_else(|| ParseError::at(items[1].pos(), "expected (point …) or (path …)"))?;
    let payload = match body.first().and_then(Sexpr::as_sym) {
        Some("point") if body.len() == 3 => {
            Payload::Point(Vec2::new(parse_number(&body[1])?, parse_number(&body[2])?))
        }
        Some("path") => {
            let mut pts = Vec::new();
            for entry in &body[1..] {
                let xy = entry
                    .as_list()
                    .ok_or_else(|| ParseError::at(entry.pos(), "expected (X Y)"))?;
                if xy.len() != 2 {
                    return Err(ParseError::at(entry.pos(), "expected (X Y)"));
                }
                pts.push(Vec2::new(parse_number(&xy[0])?, parse_number(&xy[1])?));
            }
            Payload::Path(pts)
        }
        _ => return Err(ParseError::at(items[1].pos(), "expected (point X Y) or (path (X Y)…)")),
    };
    Ok((id, payload, form.pos()))
}

fn parse_ground_atom(
    form: &Sexpr,
    domain: &Domain,
    objects: &BTreeMap<String, ObjectDecl>,
) -> Result<Atom, ParseError> {
    let template = parse_atom_template(form)?;
    let pred = domain.predicate(&template.pred).ok_or_else(|| {
        ParseError::at(form.pos(), format!("unknown predicate `{}`", template.pred))
    })?;
    if pred.params.len() != template.args.len() {
        return Err(ParseError::at(
            form.pos(),
            format!(
                "predicate `{}` takes {} arguments, got {}",
                pred.name,
                pred.params.len(),
                template.args.len()
            ),
        ));
    }
    let mut args = Vec::with_capacity(template.args.len());
    for term in &template.args {
        match term {
            Term::Var(v) => {
                return Err(ParseError::at(form.pos(), format!("unexpected variable {v}")))
            }
            Term::Obj(o) => {
                if !objects.contains_key(o) {
                    return Err(ParseError::at(form.pos(), format!("unknown object `{o}`")));
                }
                args.push(o.clone());
            }
        }
    }
    Ok(Atom { pred: template.pred, args })
}

fn parse_ground_body(
    form: &Sexpr,
    domain: &Domain,
    objects: &BTreeMap<String, ObjectDecl>,
) -> Result<Vec<Literal>, ParseError> {
    let items = form
        .as_list()
        .ok_or_else(|| ParseError::at(form.pos(), "expected a goal condition"))?;
    match items.first().and_then(Sexpr::as_sym) {
        Some("and") => {
            let mut lits = Vec::new();
            for item in &items[1..] {
                lits.extend(parse_ground_body(item, domain, objects)?);
            }
            Ok(lits)
        }
        Some("not") => {
            if items.len() != 2 {
                return Err(ParseError::at(form.pos(), "(not …) takes exactly one atom"));
            }
            Ok(vec![Literal {
                positive: false,
                atom: parse_ground_atom(&items[1], domain, objects)?,
            }])
        }
        _ => Ok(vec![Literal { positive: true, atom: parse_ground_atom(form, domain, objects)? }]),
    }
}
