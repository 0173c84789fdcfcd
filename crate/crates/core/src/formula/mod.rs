//! Propositional syntax: propositions, atoms, valuations and the truth-table
//! tautology check that the rest of the crate is tested against.

mod parse;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub use parse::parse_proposition;

/// Default cap on the number of distinct variables the truth-table check
/// will enumerate.
pub const DEFAULT_MAX_VARS: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Proposition {
    Var(String),
    Const(bool),
    Not(Box<Proposition>),
    And(Box<Proposition>, Box<Proposition>),
    Or(Box<Proposition>, Box<Proposition>),
    Implies(Box<Proposition>, Box<Proposition>),
}

impl Proposition {
    pub fn var(name: impl Into<String>) -> Self {
        Proposition::Var(name.into())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(p: Proposition) -> Self {
        Proposition::Not(Box::new(p))
    }

    pub fn and(l: Proposition, r: Proposition) -> Self {
        Proposition::And(Box::new(l), Box::new(r))
    }

    pub fn or(l: Proposition, r: Proposition) -> Self {
        Proposition::Or(Box::new(l), Box::new(r))
    }

    pub fn implies(l: Proposition, r: Proposition) -> Self {
        Proposition::Implies(Box::new(l), Box::new(r))
    }

    /// Distinct variable names, sorted.
    pub fn variables(&self) -> BTreeSet<&str> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars<'a>(&'a self, out: &mut BTreeSet<&'a str>) {
        match self {
            Proposition::Var(v) => {
                out.insert(v.as_str());
            }
            Proposition::Const(_) => {}
            Proposition::Not(p) => p.collect_vars(out),
            Proposition::And(l, r) | Proposition::Or(l, r) | Proposition::Implies(l, r) => {
                l.collect_vars(out);
                r.collect_vars(out);
            }
        }
    }

    /// Number of nodes in the syntax tree.
    pub fn size(&self) -> usize {
        match self {
            Proposition::Var(_) | Proposition::Const(_) => 1,
            Proposition::Not(p) => 1 + p.size(),
            Proposition::And(l, r) | Proposition::Or(l, r) | Proposition::Implies(l, r) => {
                1 + l.size() + r.size()
            }
        }
    }

    /// Number of leaves (atom occurrences), which is also the vertex count
    /// of the proposition's graph.
    pub fn leaf_count(&self) -> usize {
        match self {
            Proposition::Var(_) | Proposition::Const(_) => 1,
            Proposition::Not(p) => p.leaf_count(),
            Proposition::And(l, r) | Proposition::Or(l, r) | Proposition::Implies(l, r) => {
                l.leaf_count() + r.leaf_count()
            }
        }
    }

    fn is_binary(&self) -> bool {
        matches!(
            self,
            Proposition::And(..) | Proposition::Or(..) | Proposition::Implies(..)
        )
    }
}

impl FromStr for Proposition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_proposition(s)
    }
}

// Binary operands are always parenthesized; atoms and negations are not.
impl fmt::Display for Proposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn operand(p: &Proposition, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            if p.is_binary() {
                write!(f, "({p})")
            } else {
                write!(f, "{p}")
            }
        }
        match self {
            Proposition::Var(v) => f.write_str(v),
            Proposition::Const(false) => f.write_str("0"),
            Proposition::Const(true) => f.write_str("1"),
            Proposition::Not(p) => {
                f.write_str("~")?;
                operand(p, f)
            }
            Proposition::And(l, r) | Proposition::Or(l, r) | Proposition::Implies(l, r) => {
                let op = match self {
                    Proposition::And(..) => "&",
                    Proposition::Or(..) => "|",
                    _ => "->",
                };
                operand(l, f)?;
                write!(f, " {op} ")?;
                operand(r, f)
            }
        }
    }
}

/// A literal or a constant: the labels carried by graph vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Atom {
    Pos(String),
    Neg(String),
    Zero,
    One,
}

impl Atom {
    pub fn dual(&self) -> Atom {
        match self {
            Atom::Pos(v) => Atom::Neg(v.clone()),
            Atom::Neg(v) => Atom::Pos(v.clone()),
            Atom::Zero => Atom::One,
            Atom::One => Atom::Zero,
        }
    }

    pub fn is_literal(&self) -> bool {
        matches!(self, Atom::Pos(_) | Atom::Neg(_))
    }

    /// True iff the two atoms are dual literals (`p` and `~p`). Dual
    /// constants do not count.
    pub fn are_dual_literals(a: &Atom, b: &Atom) -> bool {
        match (a, b) {
            (Atom::Pos(x), Atom::Neg(y)) | (Atom::Neg(x), Atom::Pos(y)) => x == y,
            _ => false,
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Pos(v) => f.write_str(v),
            Atom::Neg(v) => write!(f, "~{v}"),
            Atom::Zero => f.write_str("0"),
            Atom::One => f.write_str("1"),
        }
    }
}

impl FromStr for Atom {
    type Err = Error;

    /// Accepts `p`, `~p`, `0` and `1`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Malformed(format!("`{s}` is not an atom"));
        match s {
            "0" => return Ok(Atom::Zero),
            "1" => return Ok(Atom::One),
            _ => {}
        }
        let (negated, name) = match s.strip_prefix('~') {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        if !parse::is_identifier(name) {
            return Err(bad());
        }
        Ok(if negated {
            Atom::Neg(name.to_string())
        } else {
            Atom::Pos(name.to_string())
        })
    }
}

/// Assignment of truth values to variables.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Valuation(BTreeMap<String, bool>);

impl Valuation {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, var: impl Into<String>, value: bool) {
        self.0.insert(var.into(), value);
    }

    pub fn get(&self, var: &str) -> Option<bool> {
        self.0.get(var).copied()
    }
}

impl<S: Into<String>> FromIterator<(S, bool)> for Valuation {
    fn from_iter<I: IntoIterator<Item = (S, bool)>>(iter: I) -> Self {
        Valuation(iter.into_iter().map(|(k, v)| (k.into(), v)).collect())
    }
}

pub fn evaluate(f: &Valuation, phi: &Proposition) -> Result<bool> {
    Ok(match phi {
        Proposition::Var(v) => f.get(v).ok_or_else(|| Error::MissingVariable(v.clone()))?,
        Proposition::Const(c) => *c,
        Proposition::Not(p) => !evaluate(f, p)?,
        Proposition::And(l, r) => evaluate(f, l)? & evaluate(f, r)?,
        Proposition::Or(l, r) => evaluate(f, l)? | evaluate(f, r)?,
        Proposition::Implies(l, r) => !evaluate(f, l)? | evaluate(f, r)?,
    })
}

pub fn is_tautology_bruteforce(phi: &Proposition) -> Result<bool> {
    is_tautology_bruteforce_with_limit(phi, DEFAULT_MAX_VARS)
}

pub fn is_tautology_bruteforce_with_limit(phi: &Proposition, max_vars: usize) -> Result<bool> {
    Ok(falsifying_valuation_with_limit(phi, max_vars)?.is_none())
}

/// First valuation (in binary counting order over the sorted variables)
/// under which `phi` evaluates to 0.
pub fn falsifying_valuation_with_limit(
    phi: &Proposition,
    max_vars: usize,
) -> Result<Option<Valuation>> {
    let vars: Vec<&str> = phi.variables().into_iter().collect();
    if vars.len() > max_vars {
        return Err(Error::ResourceLimit {
            what: "distinct variables",
            limit: max_vars as u64,
            actual: vars.len() as u64,
        });
    }
    let index: BTreeMap<&str, usize> = vars.iter().enumerate().map(|(i, v)| (*v, i)).collect();
    for bits in 0u64..(1u64 << vars.len()) {
        if !eval_bits(phi, &index, bits) {
            return Ok(Some(
                vars.iter()
                    .enumerate()
                    .map(|(i, v)| (*v, bits >> i & 1 == 1))
                    .collect(),
            ));
        }
    }
    Ok(None)
}

fn eval_bits(phi: &Proposition, index: &BTreeMap<&str, usize>, bits: u64) -> bool {
    match phi {
        Proposition::Var(v) => bits >> index[v.as_str()] & 1 == 1,
        Proposition::Const(c) => *c,
        Proposition::Not(p) => !eval_bits(p, index, bits),
        Proposition::And(l, r) => eval_bits(l, index, bits) && eval_bits(r, index, bits),
        Proposition::Or(l, r) => eval_bits(l, index, bits) || eval_bits(r, index, bits),
        Proposition::Implies(l, r) => !eval_bits(l, index, bits) || eval_bits(r, index, bits),
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> Proposition {
        s.parse().unwrap()
    }

    fn all_valuations(vars: &[&str]) -> Vec<Valuation> {
        (0..1u32 << vars.len())
            .map(|bits| {
                vars.iter()
                    .enumerate()
                    .map(|(i, v)| (*v, bits >> i & 1 == 1))
                    .collect()
            })
            .collect()
    }

    #[test]
    fn constants_evaluate_to_themselves() {
        let f = Valuation::new();
        assert!(!evaluate(&f, &Proposition::Const(false)).unwrap());
        assert!(evaluate(&f, &Proposition::Const(true)).unwrap());
    }

    #[test]
    fn contradiction_is_zero_everywhere() {
        let phi = p("p & ~p");
        for f in all_valuations(&["p"]) {
            assert!(!evaluate(&f, &phi).unwrap());
        }
    }

    #[test]
    fn peirce_holds_under_all_four_valuations() {
        let phi = p("((p->q)->p)->p");
        // Hand-written truth table for ((p->q)->p)->p.
        let table = [
            (false, false, true),
            (false, true, true),
            (true, false, true),
            (true, true, true),
        ];
        for (pv, qv, expected) in table {
            let f: Valuation = [("p", pv), ("q", qv)].into_iter().collect();
            assert_eq!(evaluate(&f, &phi).unwrap(), expected);
        }
    }

    #[test]
    fn missing_variable_is_an_error() {
        let f: Valuation = [("p", true)].into_iter().collect();
        assert_eq!(
            evaluate(&f, &p("p & q")),
            Err(Error::MissingVariable("q".into()))
        );
    }

    #[test]
    fn bruteforce_examples() {
        assert!(is_tautology_bruteforce(&p("((p->q)->p)->p")).unwrap());
        assert!(!is_tautology_bruteforce(&p("p & ~p")).unwrap());
        assert!(is_tautology_bruteforce(&p("1")).unwrap());
        assert!(!is_tautology_bruteforce(&p("0")).unwrap());
    }

    #[test]
    fn bruteforce_variable_cap() {
        let phi = p("a | b | c | d");
        assert!(matches!(
            is_tautology_bruteforce_with_limit(&phi, 3),
            Err(Error::ResourceLimit {
                limit: 3,
                actual: 4,
                ..
            })
        ));
        assert!(!is_tautology_bruteforce_with_limit(&phi, 4).unwrap());
    }

    #[test]
    fn falsifying_valuation_really_falsifies() {
        let phi = p("(p -> q) | r");
        let f = falsifying_valuation_with_limit(&phi, 24).unwrap().unwrap();
        assert!(!evaluate(&f, &phi).unwrap());
    }

    #[test]
    fn atom_duality_is_an_involution() {
        for a in [
            Atom::Pos("p".into()),
            Atom::Neg("p".into()),
            Atom::Zero,
            Atom::One,
        ] {
            assert_eq!(a.dual().dual(), a);
            assert_ne!(a.dual(), a);
        }
        assert!(Atom::are_dual_literals(
            &Atom::Pos("p".into()),
            &Atom::Neg("p".into())
        ));
        assert!(!Atom::are_dual_literals(&Atom::Zero, &Atom::One));
        assert!(!Atom::are_dual_literals(
            &Atom::Pos("p".into()),
            &Atom::Neg("q".into())
        ));
    }

    #[test]
    fn atom_text_round_trip() {
        for s in ["p", "~p", "0", "1", "x_1"] {
            assert_eq!(s.parse::<Atom>().unwrap().to_string(), s);
        }
        assert!("~~p".parse::<Atom>().is_err());
        assert!("p&q".parse::<Atom>().is_err());
    }

    pub(crate) fn arb_prop() -> impl Strategy<Value = Proposition> {
        let leaf = prop_oneof![
            prop::sample::select(vec!["p", "q", "r"]).prop_map(Proposition::var),
            any::<bool>().prop_map(Proposition::Const),
        ];
        leaf.prop_recursive(5, 24, 2, |inner| {
            prop_oneof![
                inner.clone().prop_map(Proposition::not),
                (inner.clone(), inner.clone()).prop_map(|(l, r)| Proposition::and(l, r)),
                (inner.clone(), inner.clone()).prop_map(|(l, r)| Proposition::or(l, r)),
                (inner.clone(), inner).prop_map(|(l, r)| Proposition::implies(l, r)),
            ]
        })
    }

    fn arb_valuation() -> impl Strategy<Value = Valuation> {
        (any::<bool>(), any::<bool>(), any::<bool>())
            .prop_map(|(a, b, c)| [("p", a), ("q", b), ("r", c)].into_iter().collect())
    }

    proptest! {
        #[test]
        fn double_negation(phi in arb_prop(), f in arb_valuation()) {
            let nn = Proposition::not(Proposition::not(phi.clone()));
            prop_assert_eq!(evaluate(&f, &nn).unwrap(), evaluate(&f, &phi).unwrap());
        }

        #[test]
        fn de_morgan(a in arb_prop(), b in arb_prop(), f in arb_valuation()) {
            let lhs = Proposition::not(Proposition::and(a.clone(), b.clone()));
            let rhs = Proposition::or(Proposition::not(a), Proposition::not(b));
            prop_assert_eq!(evaluate(&f, &lhs).unwrap(), evaluate(&f, &rhs).unwrap());
        }

        #[test]
        fn implication_is_material(a in arb_prop(), b in arb_prop(), f in arb_valuation()) {
            let lhs = Proposition::implies(a.clone(), b.clone());
            let rhs = Proposition::or(Proposition::not(a), b);
            prop_assert_eq!(evaluate(&f, &lhs).unwrap(), evaluate(&f, &rhs).unwrap());
        }

        #[test]
        fn print_parse_round_trip(phi in arb_prop()) {
            let printed = phi.to_string();
            prop_assert_eq!(parse_proposition(&printed).unwrap(), phi);
        }
    }
}
