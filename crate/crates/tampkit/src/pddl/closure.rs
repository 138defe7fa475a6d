//! Stratified fixed-point evaluation of derived predicates.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use super::{Atom, Axiom, Domain, LiteralTemplate, Term};

/// Compute base atoms plus every derivable axiom head. Stratification is
/// checked at parse time, so negative body literals only ever consult
/// already-final strata.
pub(super) fn evaluate(base: &BTreeSet<Atom>, domain: &Domain) -> BTreeSet<Atom> {
    let mut atoms = base.clone();
    if domain.axioms.is_empty() {
        return atoms;
    }
    let max_stratum = domain.strata.values().copied().max().unwrap_or(0);
    for stratum in 1..=max_stratum {
        let rules: Vec<&Axiom> = domain
            .axioms
            .iter()
            .filter(|ax| domain.strata.get(&ax.head.pred) == Some(&stratum))
            .collect();
        loop {
            let mut fresh: Vec<Atom> = Vec::new();
            {
                let index = index_by_pred(&atoms);
                for rule in &rules {
                    let mut binding = BTreeMap::new();
                    fresh.extend(enumerate(
                        rule,
                        &rule.body,
                        &mut binding,
                        &atoms,
                        &index,
                        &mut |b| {
                            let head = rule.head.ground(b).expect("head vars bound by body");
                            (!atoms.contains(&head)).then_some(head)
                        },
                    ));
                }
            }
            let mut added = false;
            for atom in fresh {
                added |= atoms.insert(atom);
            }
            if !added {
                break;
            }
        }
    }
    atoms
}

fn index_by_pred(atoms: &BTreeSet<Atom>) -> HashMap<&str, Vec<&Atom>> {
    let mut index: HashMap<&str, Vec<&Atom>> = HashMap::new();
    for atom in atoms {
        index.entry(atom.pred.as_str()).or_default().push(atom);
    }
    index
}

/// Backtracking join over the body literals. Positive literals bind
/// variables against the atom index; negative literals filter once ground.
/// Collected results come from `emit`, which may inspect the full binding.
/// Axiom variables are untyped (enforced at parse), so no object table is
/// needed here.
fn enumerate(
    rule: &Axiom,
    rest: &[LiteralTemplate],
    binding: &mut BTreeMap<String, String>,
    atoms: &BTreeSet<Atom>,
    index: &HashMap<&str, Vec<&Atom>>,
    emit: &mut dyn FnMut(&BTreeMap<String, String>) -> Option<Atom>,
) -> Vec<Atom> {
    let Some((lit, tail)) = rest.split_first() else {
        return emit(binding).into_iter().collect();
    };
    let mut out = Vec::new();
    if lit.positive {
        let candidates = index.get(lit.atom.pred.as_str()).map_or(&[][..], |v| v.as_slice());
        'cand: for atom in candidates {
            debug_assert_eq!(atom.args.len(), lit.atom.args.len());
            let mut bound_here = Vec::new();
            for (term, value) in lit.atom.args.iter().zip(&atom.args) {
                match term {
                    Term::Obj(o) => {
                        if o != value {
                            unbind(binding, &bound_here);
                            continue 'cand;
                        }
                    }
                    Term::Var(v) => match binding.get(v) {
                        Some(existing) if existing != value => {
                            unbind(binding, &bound_here);
                            continue 'cand;
                        }
                        Some(_) => {}
                        None => {
                            binding.insert(v.clone(), value.clone());
                            bound_here.push(v.clone());
                        }
                    },
                }
            }
            out.extend(enumerate(rule, tail, binding, atoms, index, emit));
            unbind(binding, &bound_here);
        }
    } else {
        let Some(ground) = lit.atom.ground(binding) else {
            // The parser orders negatives after the positives that bind
            // their variables, so an unbound variable here is a bug.
            unreachable!("negative literal with unbound variable");
        };
        if !atoms.contains(&ground) {
            out.extend(enumerate(rule, tail, binding, atoms, index, emit));
        }
    }
    out
}

fn unbind(binding: &mut BTreeMap<String, String>, names: &[String]) {
    for n in names {
        binding.remove(n);
    }
}
