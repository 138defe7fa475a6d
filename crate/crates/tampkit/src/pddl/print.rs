//! Canonical text output for domains and problems. `parse(print(x))` is
//! structurally equal to `x`; golden files under `domains/` are produced by
//! these impls.

use std::fmt::{self, Write as _};

use crate::geometry::Payload;

use super::{
    ActionSchema, AtomTemplate, Axiom, CostExpr, Domain, Literal, LiteralTemplate, Problem, Term,
    TypedVar,
};

fn write_typed_list(out: &mut String, vars: &[TypedVar]) {
    let mut first = true;
    for v in vars {
        if !first {
            out.push(' ');
        }
        first = false;
        out.push_str(&v.name);
        if let Some(ty) = &v.ty {
            out.push_str(" - ");
            out.push_str(ty);
        }
    }
}

fn write_atom_template(out: &mut String, atom: &AtomTemplate) {
    out.push('(');
    out.push_str(&atom.pred);
    for term in &atom.args {
        out.push(' ');
        match term {
            Term::Var(v) => out.push_str(v),
            Term::Obj(o) => out.push_str(o),
        }
    }
    out.push(')');
}

fn write_literal_template(out: &mut String, lit: &LiteralTemplate) {
    if lit.positive {
        write_atom_template(out, &lit.atom);
    } else {
        out.push_str("(not ");
        write_atom_template(out, &lit.atom);
        out.push(')');
    }
}

fn write_conjunction<T>(out: &mut String, items: &[T], write_one: impl Fn(&mut String, &T)) {
    out.push_str("(and");
    for item in items {
        out.push(' ');
        write_one(out, item);
    }
    out.push(')');
}

fn write_axiom(out: &mut String, axiom: &Axiom) {
    out.push_str("  (:derived ");
    write_atom_template(out, &axiom.head);
    out.push(' ');
    // Existential variables (beyond the head's) are re-wrapped explicitly.
    let head_vars: Vec<&str> = axiom
        .head
        .args
        .iter()
        .filter_map(Term::as_var)
        .collect();
    let extra: Vec<&TypedVar> =
        axiom.vars.iter().filter(|v| !head_vars.contains(&v.name.as_str())).collect();
    if extra.is_empty() {
        write_conjunction(out, &axiom.body, |o, l| write_literal_template(o, l));
    } else {
        out.push_str("(exists (");
        let extra_owned: Vec<TypedVar> = extra.into_iter().cloned().collect();
        write_typed_list(out, &extra_owned);
        out.push_str(") ");
        write_conjunction(out, &axiom.body, |o, l| write_literal_template(o, l));
        out.push(')');
    }
    out.push_str(")\n");
}

fn write_cost(out: &mut String, cost: &CostExpr, params: &[TypedVar]) {
    match cost {
        CostExpr::Const(c) => {
            let _ = write!(out, "{c}");
        }
        CostExpr::PlusDistance { base, scale, from_param, to_param } => {
            let _ = write!(
                out,
                "(+ {base} (* {scale} (distance {} {})))",
                params[*from_param].name, params[*to_param].name
            );
        }
    }
}

fn write_action(out: &mut String, action: &ActionSchema) {
    out.push_str("  (:action ");
    out.push_str(&action.name);
    out.push_str("\n    :parameters (");
    write_typed_list(out, &action.params);
    out.push_str(")\n    :precondition ");
    write_conjunction(out, &action.precondition, |o, l| write_literal_template(o, l));
    out.push_str("\n    :effect (and");
    for atom in &action.add_effects {
        out.push(' ');
        write_atom_template(out, atom);
    }
    for atom in &action.del_effects {
        out.push_str(" (not ");
        write_atom_template(out, atom);
        out.push(')');
    }
    out.push(')');
    if action.cost != CostExpr::Const(1.0) {
        out.push_str("\n    :cost ");
        write_cost(out, &action.cost, &action.params);
    }
    out.push_str(")\n");
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        let _ = writeln!(out, "(define (domain {})", self.name);
        out.push_str("  (:predicates");
        for pred in &self.predicates {
            out.push_str("\n    (");
            out.push_str(&pred.name);
            if !pred.params.is_empty() {
                out.push(' ');
                write_typed_list(&mut out, &pred.params);
            }
            out.push(')');
        }
        out.push_str(")\n");
        for axiom in &self.axioms {
            write_axiom(&mut out, axiom);
        }
        for action in &self.actions {
            write_action(&mut out, action);
        }
        out.push_str(")\n");
        f.write_str(&out)
    }
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        let _ = writeln!(out, "(define (problem {})", self.name);
        let _ = writeln!(out, "  (:domain {})", self.domain_name);
        out.push_str("  (:objects");
        for obj in self.objects.values() {
            out.push_str("\n    ");
            out.push_str(&obj.id);
            if let Some(ty) = &obj.ty {
                out.push_str(" - ");
                out.push_str(ty);
            }
        }
        out.push_str(")\n");
        if !self.payloads.is_empty() {
            out.push_str("  (:payloads");
            for (id, payload) in &self.payloads {
                out.push_str("\n    (");
                out.push_str(id);
                match payload {
                    Payload::Point(p) => {
                        let _ = write!(out, " (point {} {})", p.x, p.y);
                    }
                    Payload::Path(pts) => {
                        out.push_str(" (path");
                        for p in pts {
                            let _ = write!(out, " ({} {})", p.x, p.y);
                        }
                        out.push(')');
                    }
                }
                out.push(')');
            }
            out.push_str(")\n");
        }
        out.push_str("  (:init");
        for atom in &self.init {
            out.push_str("\n    ");
            let _ = write!(out, "{atom}");
        }
        out.push_str(")\n");
        out.push_str("  (:goal ");
        write_conjunction(&mut out, &self.goal, |o, l: &Literal| {
            let _ = write!(o, "{l}");
        });
        out.push_str("))\n");
        f.write_str(&out)
    }
}
